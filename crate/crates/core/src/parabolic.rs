//! θ-stable parabolic subalgebras `q = l + u` cut out by a strictly
//! compact-dominant weight, and the `sl(2, R)` pairs of their Levi factor.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::RealFormDescriptor;
use crate::weight::{half_sum, is_dominant, Weight};

/// `q = l + u` recorded as a partition of the `t^c`-weights of `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaParabolic {
    defining_weight: Weight,
    u_compact: Vec<Weight>,
    u_noncompact: Vec<Weight>,
    l_pairs: Vec<Weight>,
    m0: usize,
}

impl ThetaParabolic {
    pub fn defining_weight(&self) -> &Weight {
        &self.defining_weight
    }

    pub fn u_compact(&self) -> &[Weight] {
        &self.u_compact
    }

    pub fn u_noncompact(&self) -> &[Weight] {
        &self.u_noncompact
    }

    /// One representative `β_j` per `sl(2)` summand, lexicographically positive.
    pub fn l_pairs(&self) -> &[Weight] {
        &self.l_pairs
    }

    /// Number of `sl(2, R)` summands in the Levi.
    pub fn n(&self) -> usize {
        self.l_pairs.len()
    }

    pub fn m0(&self) -> usize {
        self.m0
    }

    fn dim(&self) -> usize {
        self.defining_weight.dim()
    }

    /// `ρ(s ∩ u)`.
    pub fn rho_s_cap_u(&self) -> Weight {
        half_sum(&self.u_noncompact, self.dim())
    }

    /// `ρ(Δ⁺(l))` for the positive system `{signs_j · β_j}`.
    pub fn rho_l_plus(&self, signs: &[i8]) -> Result<Weight> {
        if signs.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), found: signs.len() });
        }
        let chosen: Vec<Weight> = self.signed_levi_roots(signs);
        Ok(half_sum(&chosen, self.dim()))
    }

    /// `ρ(u)`. Orthogonal to every `β_j`; [`build_parabolic`] checks this.
    pub fn rho_u(&self) -> Weight {
        half_sum(self.u_compact.iter().chain(&self.u_noncompact), self.dim())
    }

    /// `{signs_j · β_j}`.
    pub fn signed_levi_roots(&self, signs: &[i8]) -> Vec<Weight> {
        self.l_pairs
            .iter()
            .zip(signs)
            .map(|(b, &s)| if s < 0 { -b } else { b.clone() })
            .collect()
    }

    /// Noncompact positive roots of the positive system `Δ(u) ∪ {s_j β_j}`.
    pub fn noncompact_positive_system(&self, signs: &[i8]) -> Vec<Weight> {
        let mut out = self.u_noncompact.clone();
        out.extend(self.signed_levi_roots(signs));
        out
    }
}

/// Every sign vector of length `n`, `+1` before `-1`, last entry fastest.
pub fn sign_vectors(n: usize) -> impl Iterator<Item = Vec<i8>> {
    (0..1usize << n).map(move |bits| {
        (0..n).map(|j| if bits >> (n - 1 - j) & 1 == 0 { 1 } else { -1 }).collect()
    })
}

/// Partitions the weights of `g` by the sign of their pairing with `lambda`.
///
/// `lambda` must be strictly dominant for the fixed compact positive roots.
/// The zero-pairing bucket then consists of noncompact `±β` pairs only, which
/// are mutually orthogonal and orthogonal to `ρ(u)`.
pub fn build_parabolic(d: &RealFormDescriptor, lambda: &Weight) -> Result<ThetaParabolic> {
    if lambda.dim() != d.rank_tc() {
        return Err(Error::DimensionMismatch { expected: d.rank_tc(), found: lambda.dim() });
    }
    if !is_dominant(lambda, d.positive_compact(), d.form(), true)? {
        return Err(Error::NotStrictlyDominant(lambda.clone()));
    }

    let mut u_compact = Vec::new();
    for a in d.compact_roots() {
        let p = d.inner(lambda, a);
        if p.is_zero() {
            return Err(Error::NondegeneracyViolation { root: a.clone() });
        }
        if p.is_positive() {
            u_compact.push(a.clone());
        }
    }

    let mut u_noncompact = Vec::new();
    let mut l_pairs = Vec::new();
    for g in d.noncompact_weights() {
        let p = d.inner(lambda, g);
        if p.is_positive() {
            u_noncompact.push(g.clone());
        } else if p.is_zero() && g.is_lex_positive() {
            l_pairs.push(g.clone());
        }
    }

    for (i, bi) in l_pairs.iter().enumerate() {
        for bj in &l_pairs[i + 1..] {
            if !d.inner(bi, bj).is_zero() {
                return Err(Error::NonOrthogonalLevi { first: bi.clone(), second: bj.clone() });
            }
        }
    }

    let p = ThetaParabolic {
        defining_weight: lambda.clone(),
        u_compact,
        u_noncompact,
        l_pairs,
        m0: d.zero_weight_s_dim(),
    };
    let rho_u = p.rho_u();
    if let Some(b) = p.l_pairs.iter().find(|b| !d.inner(&rho_u, b).is_zero()) {
        return Err(Error::InvariantViolation(format!(
            "rho(u) = {rho_u} is not orthogonal to the Levi root {b}; u is not an sl(2)-module"
        )));
    }
    Ok(p)
}
