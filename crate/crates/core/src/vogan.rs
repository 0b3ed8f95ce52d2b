//! Essential Vogan data generated by dominant weights, and the enumeration
//! of all of them inside a ball.
//!
//! A dominant `κ` defines `λ^G = κ + ρ_K`, hence a θ-stable parabolic
//! `q = l + u` whose Levi is `sl(2, R)^N ⊕ z`. The datum exists iff
//! `μ = κ − ρ(s ∩ u) − ρ(Δ⁺(l))` is analytically integral. The character `δ`
//! of `T` is never materialized: it is carried by `κ^L` (its differential,
//! extended by zero) together with its values `±1` on the elements `m_j`.

use num::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{is_integral, RealFormDescriptor};
use crate::lattice::points_in_ball;
use crate::parabolic::{build_parabolic, ThetaParabolic};
use crate::weight::{coroot_pairing, half_sum, is_dominant, BilinearForm, Weight, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EssentialVoganDatum {
    parabolic: ThetaParabolic,
    kappa: Weight,
    mu: Weight,
    kappa_l: Weight,
    m_values: Vec<i8>,
}

impl EssentialVoganDatum {
    pub fn parabolic(&self) -> &ThetaParabolic {
        &self.parabolic
    }

    pub fn kappa(&self) -> &Weight {
        &self.kappa
    }

    /// `μ` for the sign vector the datum was built with (all `+1` for
    /// [`construct_from_kappa`]).
    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    /// Differential of `δ`, extended by zero off `t`.
    pub fn kappa_l(&self) -> &Weight {
        &self.kappa_l
    }

    /// `δ(m_j)` for each Levi pair.
    pub fn m_values(&self) -> &[i8] {
        &self.m_values
    }

    pub fn n(&self) -> usize {
        self.parabolic.n()
    }

    /// The data that determine `δ`; independent of the sign vector used.
    pub fn canonical_form(&self) -> (&ThetaParabolic, &Weight, &[i8]) {
        (&self.parabolic, &self.kappa_l, &self.m_values)
    }

    /// Test-only constructor for data that did not come out of the
    /// construction, e.g. to exercise [`is_essential`] on a failing case.
    #[doc(hidden)]
    pub fn from_raw_parts(
        parabolic: ThetaParabolic,
        kappa: Weight,
        mu: Weight,
        kappa_l: Weight,
        m_values: Vec<i8>,
    ) -> Self {
        EssentialVoganDatum { parabolic, kappa, mu, kappa_l, m_values }
    }
}

/// `(−1)^c` for `c = 2⟨μ, β⟩/⟨β, β⟩`, the value of `exp(μ)` on the image of
/// `−1 ∈ SL(2, R)` in the summand attached to `β`.
pub fn m_value(mu: &Weight, beta: &Weight, f: &BilinearForm) -> Result<i8> {
    let c = coroot_pairing(mu, beta, f)?;
    if !c.is_integer() {
        return Err(Error::NonIntegralPairing(crate::weight::format_rational(&c)));
    }
    let odd = c.to_integer() % 2u8 != num::BigInt::zero();
    Ok(if odd { -1 } else { 1 })
}

/// A datum is essential when `δ(m_j) = −1` for every Levi pair. The Levi
/// already has the required `sl(2)^N ⊕ z` shape by construction.
pub fn is_essential(datum: &EssentialVoganDatum) -> bool {
    datum.m_values.iter().all(|&m| m == -1)
}

fn check_kappa(d: &RealFormDescriptor, kappa: &Weight) -> Result<()> {
    if kappa.dim() != d.rank_tc() {
        return Err(Error::DimensionMismatch { expected: d.rank_tc(), found: kappa.dim() });
    }
    if !is_dominant(kappa, d.positive_compact(), d.form(), false)? {
        return Err(Error::NotDominant(kappa.clone()));
    }
    Ok(())
}

/// Builds the datum attached to a dominant `κ`, or `None` when `μ` is not
/// analytically integral.
pub fn construct_from_kappa(d: &RealFormDescriptor, kappa: &Weight) -> Result<Option<EssentialVoganDatum>> {
    check_kappa(d, kappa)?;
    let parabolic = build_parabolic(d, &(kappa + &d.rho_k()))?;
    let signs = vec![1i8; parabolic.n()];
    datum_with_signs(d, kappa, parabolic, &signs)
}

/// Same as [`construct_from_kappa`] with `Δ⁺(l) = {signs_j β_j}`.
pub fn construct_with_signs(
    d: &RealFormDescriptor,
    kappa: &Weight,
    signs: &[i8],
) -> Result<Option<EssentialVoganDatum>> {
    check_kappa(d, kappa)?;
    let parabolic = build_parabolic(d, &(kappa + &d.rho_k()))?;
    datum_with_signs(d, kappa, parabolic, signs)
}

fn datum_with_signs(
    d: &RealFormDescriptor,
    kappa: &Weight,
    parabolic: ThetaParabolic,
    signs: &[i8],
) -> Result<Option<EssentialVoganDatum>> {
    let mu = &(kappa - &parabolic.rho_s_cap_u()) - &parabolic.rho_l_plus(signs)?;
    if !is_integral(d, &mu) {
        return Ok(None);
    }

    let f = d.form();
    let mut kappa_l = mu.clone();
    let mut m_values = Vec::with_capacity(parabolic.n());
    for (beta, &s) in parabolic.l_pairs().iter().zip(signs) {
        let c = coroot_pairing(&mu, beta, f)?;
        // μ restricted to the j-th so(2) is −½ s_j β_j
        if c != Q::from_integer((-s).into()) {
            return Err(Error::InvariantViolation(format!(
                "coroot pairing of mu = {mu} with {beta} is {}, expected {}",
                crate::weight::format_rational(&c),
                -s
            )));
        }
        m_values.push(m_value(&mu, beta, f)?);
        let coeff = d.inner(&mu, beta) / d.inner(beta, beta);
        kappa_l = &kappa_l - &beta.scale(&coeff);
    }

    let lambda_g = parabolic.defining_weight();
    for g in parabolic.u_compact().iter().chain(parabolic.u_noncompact()) {
        if !d.inner(lambda_g, g).is_positive() {
            return Err(Error::InvariantViolation(format!(
                "lambda^G = {lambda_g} does not pair positively with {g} in u"
            )));
        }
    }

    let datum = EssentialVoganDatum { parabolic, kappa: kappa.clone(), mu, kappa_l, m_values };
    if !is_essential(&datum) {
        return Err(Error::InvariantViolation(format!(
            "datum for kappa = {kappa} is not essential (m-values {:?})",
            datum.m_values
        )));
    }
    Ok(Some(datum))
}

/// `ρ(Δ⁺(s))` for the positive system `Δ(u) ∪ Δ⁺(l)` at `λ^G = κ + ρ_K`, or
/// the descriptor's reference value when `κ + ρ_K` is not strictly dominant
/// (the two differ by a sum of roots).
pub fn rho_s_for(d: &RealFormDescriptor, kappa: &Weight) -> Result<Weight> {
    let lambda = kappa + &d.rho_k();
    if !is_dominant(&lambda, d.positive_compact(), d.form(), true)? {
        return Ok(d.reference_rho_s());
    }
    let p = build_parabolic(d, &lambda)?;
    let signs = vec![1i8; p.n()];
    Ok(half_sum(&p.noncompact_positive_system(&signs), d.rank_tc()))
}

/// Whether `κ` is the highest weight of a genuine representation of the spin
/// double cover of `K`: `κ − ρ(Δ⁺(s))` must be analytically integral.
pub fn is_genuine(d: &RealFormDescriptor, kappa: &Weight) -> Result<bool> {
    if kappa.dim() != d.rank_tc() {
        return Err(Error::DimensionMismatch { expected: d.rank_tc(), found: kappa.dim() });
    }
    Ok(is_integral(d, &(kappa - &rho_s_for(d, kappa)?)))
}

/// Result of [`enumerate`]: one essential datum per genuine dominant `κ` in
/// the ball, sorted by `κ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRun {
    pub group: String,
    /// Squared radius of the ball.
    pub radius_sq: Q,
    pub entries: Vec<EssentialVoganDatum>,
}

impl ClassificationRun {
    pub fn kappas(&self) -> impl Iterator<Item = &Weight> {
        self.entries.iter().map(|e| &e.kappa)
    }
}

/// Enumerates every genuine dominant `κ` with `⟨κ, κ⟩ ≤ radius²`.
pub fn enumerate(d: &RealFormDescriptor, radius: &Q) -> Result<ClassificationRun> {
    if !radius.is_positive() {
        return Err(Error::InvalidRadius(crate::weight::format_rational(radius)));
    }
    enumerate_norm_sq(d, &(radius * radius))
}

/// [`enumerate`] with the squared radius given directly, so that irrational
/// radii such as `√3 · r` stay exact.
pub fn enumerate_norm_sq(d: &RealFormDescriptor, radius_sq: &Q) -> Result<ClassificationRun> {
    if !radius_sq.is_positive() {
        return Err(Error::InvalidRadius(crate::weight::format_rational(radius_sq)));
    }
    let candidates = points_in_ball(d.integrality_basis(), &d.reference_rho_s(), d.form(), radius_sq)
        .ok_or_else(|| Error::InvariantViolation("integrality basis is singular".into()))?;

    let mut entries = candidates
        .par_iter()
        .filter_map(|kappa| match is_dominant(kappa, d.positive_compact(), d.form(), false) {
            Ok(true) => Some(kappa),
            Ok(false) => None,
            Err(_) => Some(kappa),
        })
        .map(|kappa| match construct_from_kappa(d, kappa)? {
            Some(datum) => Ok(datum),
            None => Err(Error::InternalBijectionFailure(kappa.clone())),
        })
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by(|a, b| a.kappa.cmp(&b.kappa));
    if entries.windows(2).any(|w| w[0].kappa == w[1].kappa) {
        return Err(Error::InvariantViolation("duplicate kappa in enumeration".into()));
    }
    Ok(ClassificationRun { group: d.name().to_string(), radius_sq: radius_sq.clone(), entries })
}

/// `dim a = N + (rank_g − rank_tc)` for the maximally split Cartan of `L`.
pub fn dim_a(d: &RealFormDescriptor, datum: &EssentialVoganDatum) -> usize {
    datum.n() + (d.rank_g() - d.rank_tc())
}
