//! Per-component invariants of an essential datum and the matching with
//! genuine `K̃`-types, in both directions.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{is_integral, RealFormDescriptor};
use crate::parabolic::sign_vectors;
use crate::vogan::{construct_from_kappa, dim_a, is_genuine, EssentialVoganDatum};
use crate::weight::{frac, half_sum, is_dominant, Weight};

/// Everything the classifier reports about one essential component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentSummary {
    pub kappa: Weight,
    pub n: usize,
    pub r_order: u64,
    pub fine_weights: Vec<Weight>,
    pub minimal_k_types: Vec<Weight>,
    pub dirac_hw: Weight,
}

/// The `2ᴺ` fine weights `κ^L + ½ Σ s_j β_j`, in sign-vector order.
pub fn fine_weights(datum: &EssentialVoganDatum) -> Vec<Weight> {
    let p = datum.parabolic();
    let dim = datum.kappa().dim();
    sign_vectors(p.n())
        .map(|s| datum.kappa_l() + &half_sum(&p.signed_levi_roots(&s), dim))
        .collect()
}

/// Highest weights `μ^L + 2ρ(s ∩ u)` of the minimal `K`-types, one per fine
/// weight. Each must be dominant and they must be pairwise distinct.
pub fn minimal_k_types(d: &RealFormDescriptor, datum: &EssentialVoganDatum) -> Result<Vec<Weight>> {
    let shift = datum.parabolic().rho_s_cap_u().scale(&frac(2, 1));
    let out: Vec<Weight> = fine_weights(datum).iter().map(|m| m + &shift).collect();
    for m in &out {
        if !is_dominant(m, d.positive_compact(), d.form(), false)? {
            return Err(Error::DominanceFailure(m.clone()));
        }
    }
    for (i, a) in out.iter().enumerate() {
        if out[i + 1..].contains(a) {
            return Err(Error::InvariantViolation(format!("minimal K-type {a} repeated")));
        }
    }
    Ok(out)
}

/// `κ^G = κ^L + ρ(u ∩ s)`, the highest weight of the Dirac cohomology. It
/// always equals `κ`; a mismatch is reported as an invariant violation.
pub fn dirac_highest_weight(datum: &EssentialVoganDatum) -> Result<Weight> {
    let hw = datum.kappa_l() + &datum.parabolic().rho_s_cap_u();
    if &hw != datum.kappa() {
        return Err(Error::InvariantViolation(format!(
            "Dirac highest weight {hw} differs from kappa = {}",
            datum.kappa()
        )));
    }
    Ok(hw)
}

/// Recovers `κ = μ − ρ_G + ρ_K` from the highest weight `μ` of a minimal
/// `K`-type, where `Δ⁺(g)` is the unique positive system containing
/// `Δ⁺(k)` that makes `μ + 2ρ_K` strictly dominant.
pub fn match_inverse(d: &RealFormDescriptor, mu_g: &Weight) -> Result<Weight> {
    if mu_g.dim() != d.rank_tc() {
        return Err(Error::DimensionMismatch { expected: d.rank_tc(), found: mu_g.dim() });
    }
    if !is_dominant(mu_g, d.positive_compact(), d.form(), false)? {
        return Err(Error::NotDominant(mu_g.clone()));
    }
    let rho_k = d.rho_k();
    let w = mu_g + &rho_k.scale(&frac(2, 1));
    let mut positive_s = Vec::new();
    for g in d.noncompact_weights() {
        let p = d.inner(&w, g);
        if p.is_zero() {
            return Err(Error::AmbiguousPositiveSystem { weight: mu_g.clone(), root: g.clone() });
        }
        if p.is_positive() {
            positive_s.push(g.clone());
        }
    }
    let rho_g = half_sum(d.positive_compact().iter().chain(&positive_s), d.rank_tc());
    Ok(&(mu_g - &rho_g) + &rho_k)
}

/// `|R_δ| = 2ᴺ`, cross-checked against `N = dim a − rank G + rank K`.
pub fn r_group_order(d: &RealFormDescriptor, datum: &EssentialVoganDatum) -> Result<u64> {
    let n = datum.n();
    let from_ranks = (dim_a(d, datum) + d.rank_tc()) as i64 - d.rank_g() as i64;
    if from_ranks != n as i64 {
        return Err(Error::InvariantViolation(format!(
            "R-group exponent {from_ranks} from ranks disagrees with {n} Levi pairs"
        )));
    }
    Ok(1u64 << n)
}

/// Full summary for a datum already constructed.
pub fn summarize_datum(d: &RealFormDescriptor, datum: &EssentialVoganDatum) -> Result<ComponentSummary> {
    let fine = fine_weights(datum);
    if let Some(bad) = fine.iter().find(|f| !is_integral(d, f)) {
        return Err(Error::InvariantViolation(format!("fine weight {bad} is not integral")));
    }
    let min_k = minimal_k_types(d, datum)?;
    let dirac_hw = dirac_highest_weight(datum)?;
    let r_order = r_group_order(d, datum)?;
    if min_k.len() as u64 != r_order || fine.len() as u64 != r_order {
        return Err(Error::InvariantViolation(format!(
            "{} minimal K-types but |R| = {r_order}",
            min_k.len()
        )));
    }
    for m in &min_k {
        let back = match_inverse(d, m)?;
        if &back != datum.kappa() {
            return Err(Error::InvariantViolation(format!(
                "minimal K-type {m} matches {back}, not kappa = {}",
                datum.kappa()
            )));
        }
    }
    Ok(ComponentSummary {
        kappa: datum.kappa().clone(),
        n: datum.n(),
        r_order,
        fine_weights: fine,
        minimal_k_types: min_k,
        dirac_hw,
    })
}

/// Summary for the component generated by a genuine dominant `κ`.
pub fn summarize(d: &RealFormDescriptor, kappa: &Weight) -> Result<ComponentSummary> {
    if kappa.dim() != d.rank_tc() {
        return Err(Error::DimensionMismatch { expected: d.rank_tc(), found: kappa.dim() });
    }
    if !is_dominant(kappa, d.positive_compact(), d.form(), false)? {
        return Err(Error::NotDominant(kappa.clone()));
    }
    if !is_genuine(d, kappa)? {
        return Err(Error::NotGenuine { weight: kappa.clone() });
    }
    let datum = construct_from_kappa(d, kappa)?.ok_or_else(|| Error::InternalBijectionFailure(kappa.clone()))?;
    summarize_datum(d, &datum)
}
