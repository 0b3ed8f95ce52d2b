//! Finite-dimensional representations of `K` and of its spin double cover.
//!
//! `K` may have a central torus; only `Δ(k)` enters the formulas and central
//! directions ride along as free abelian weights.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{is_integral, RealFormDescriptor};
use crate::linalg;
use crate::vogan::is_genuine;
use crate::weight::{frac, is_dominant, reflect, BilinearForm, Weight, Q};

/// Weights with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn total_mass(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    /// Invariance under the reflection in each given root.
    pub fn is_invariant_under(&self, roots: &[Weight], f: &BilinearForm) -> bool {
        roots.iter().all(|a| {
            self.entries
                .iter()
                .all(|(w, &m)| reflect(w, a, f).map(|r| self.multiplicity(&r) == m).unwrap_or(false))
        })
    }
}

impl FromIterator<(Weight, u64)> for WeightMultiset {
    fn from_iter<T: IntoIterator<Item = (Weight, u64)>>(iter: T) -> Self {
        let mut m = WeightMultiset::new();
        for (w, k) in iter {
            m.insert(w, k);
        }
        m
    }
}

/// An irreducible `K` (or `K̃`) representation, by its dominant highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleKType {
    highest_weight: Weight,
}

impl IrreducibleKType {
    pub fn new(d: &RealFormDescriptor, highest_weight: Weight) -> Result<Self> {
        check_dominant(d, &highest_weight)?;
        Ok(IrreducibleKType { highest_weight })
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }
}

fn check_dominant(d: &RealFormDescriptor, hw: &Weight) -> Result<()> {
    if hw.dim() != d.rank_tc() {
        return Err(Error::DimensionMismatch { expected: d.rank_tc(), found: hw.dim() });
    }
    if !is_dominant(hw, d.positive_compact(), d.form(), false)? {
        return Err(Error::NotDominant(hw.clone()));
    }
    Ok(())
}

/// Simple roots of the fixed compact positive system: the positive roots
/// that are not a sum of two positive roots.
pub fn simple_roots(d: &RealFormDescriptor) -> Vec<Weight> {
    let pos = d.positive_compact();
    pos.iter()
        .filter(|a| !pos.iter().any(|b| pos.contains(&(*a - b))))
        .cloned()
        .collect()
}

/// Coefficients of `x` in the simple roots, if `x` lies in their span.
fn simple_coefficients(d: &RealFormDescriptor, simple: &[Weight], x: &Weight) -> Option<Vec<Q>> {
    if simple.is_empty() {
        return x.is_zero().then(Vec::new);
    }
    let gram: Vec<Vec<Q>> =
        simple.iter().map(|a| simple.iter().map(|b| d.inner(a, b)).collect()).collect();
    let rhs: Vec<Q> = simple.iter().map(|a| d.inner(x, a)).collect();
    // Gram is symmetric, so the row-combination solve gives c with gram·c = rhs.
    let c = linalg::solve_row_combination(&gram, &rhs)?;
    let mut back = Weight::zero(x.dim());
    for (ci, a) in c.iter().zip(simple) {
        back += &a.scale(ci);
    }
    (back == *x).then_some(c)
}

/// Moves `x` into the closed dominant chamber by simple reflections.
/// Returns the image and the parity of the number of reflections used.
fn to_dominant(d: &RealFormDescriptor, simple: &[Weight], x: &Weight) -> (Weight, bool) {
    let mut cur = x.clone();
    let mut odd = false;
    while let Some(a) = simple.iter().find(|a| d.inner(&cur, a).is_negative()) {
        cur = reflect(&cur, a, d.form()).expect("simple roots are nonzero");
        odd = !odd;
    }
    (cur, odd)
}

/// `Π_{α>0} ⟨hw + ρ_K, α⟩ / ⟨ρ_K, α⟩`.
pub fn weyl_dim(d: &RealFormDescriptor, hw: &Weight) -> Result<u64> {
    check_dominant(d, hw)?;
    let rho = d.rho_k();
    let shifted = hw + &rho;
    let mut acc = Q::from_integer(1.into());
    for a in d.positive_compact() {
        let num = d.inner(&shifted, a);
        if !num.is_positive() {
            return Err(Error::NotDominant(hw.clone()));
        }
        acc *= num / d.inner(&rho, a);
    }
    if !acc.is_integer() {
        return Err(Error::InvariantViolation(format!("Weyl dimension of {hw} is not an integer")));
    }
    acc.to_integer()
        .to_u64()
        .ok_or_else(|| Error::InvariantViolation(format!("Weyl dimension of {hw} overflows")))
}

/// Full weight multiset of the irreducible representation with highest weight
/// `hw`, by Freudenthal's recursion.
pub fn freudenthal(d: &RealFormDescriptor, hw: &Weight) -> Result<WeightMultiset> {
    check_dominant(d, hw)?;
    let simple = simple_roots(d);
    let positives = d.positive_compact();

    // μ is a weight iff its dominant conjugate lies in hw − Q⁺.
    let is_weight = |mu: &Weight| -> bool {
        let (dom, _) = to_dominant(d, &simple, mu);
        match simple_coefficients(d, &simple, &(hw - &dom)) {
            Some(c) => c.iter().all(linalg::is_nonnegative_integer),
            None => false,
        }
    };

    // Breadth-first walk down simple-root strings from hw.
    let mut depth: BTreeMap<Weight, usize> = BTreeMap::new();
    depth.insert(hw.clone(), 0);
    let mut queue = VecDeque::from([hw.clone()]);
    while let Some(mu) = queue.pop_front() {
        let k = depth[&mu];
        for a in &simple {
            let next = &mu - a;
            if !depth.contains_key(&next) && is_weight(&next) {
                depth.insert(next.clone(), k + 1);
                queue.push_back(next);
            }
        }
    }
    let mut order: Vec<(usize, Weight)> = depth.into_iter().map(|(w, k)| (k, w)).collect();
    order.sort();

    let rho = d.rho_k();
    let top = d.norm_sq_shifted(hw, &rho);
    let mut mult: BTreeMap<Weight, Q> = BTreeMap::new();
    for (k, mu) in order {
        if k == 0 {
            mult.insert(mu, Q::from_integer(1.into()));
            continue;
        }
        let mut num = Q::zero();
        for a in positives {
            let mut j = 1i64;
            loop {
                let up = &mu + &a.scale(&Q::from_integer(j.into()));
                let Some(m) = mult.get(&up) else { break };
                num += m * d.inner(&up, a);
                j += 1;
            }
        }
        let den = &top - d.norm_sq_shifted(&mu, &rho);
        if den.is_zero() {
            return Err(Error::InvariantViolation(format!("Freudenthal denominator vanishes at {mu}")));
        }
        let m = num * frac(2, 1) / den;
        if !m.is_integer() || m.is_negative() {
            return Err(Error::InvariantViolation(format!("multiplicity of {mu} is {m}")));
        }
        mult.insert(mu, m);
    }
    Ok(mult
        .into_iter()
        .map(|(w, m)| (w, m.to_integer().to_u64().expect("multiplicity fits in u64")))
        .collect())
}

/// Brauer–Klimyk: `V(hw) ⊗ M = Σ_ν m_M(ν) · sgn(w) V(w(hw + ν + ρ) − ρ)`,
/// valid for any finite-dimensional `M` given by its weight multiset.
fn klimyk(d: &RealFormDescriptor, hw: &Weight, other: &WeightMultiset) -> Result<Vec<(Weight, u64)>> {
    let simple = simple_roots(d);
    let rho = d.rho_k();
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in other.iter() {
        let x = &(hw + nu) + &rho;
        let (dom, odd) = to_dominant(d, &simple, &x);
        if simple.iter().any(|a| d.inner(&dom, a).is_zero()) {
            continue;
        }
        let sign = if odd { -(m as i64) } else { m as i64 };
        *acc.entry(&dom - &rho).or_insert(0) += sign;
    }
    let mut out = Vec::new();
    for (w, m) in acc {
        match m {
            0 => {}
            m if m < 0 => {
                return Err(Error::InvariantViolation(format!("negative multiplicity {m} for {w}")));
            }
            m => out.push((w, m as u64)),
        }
    }
    Ok(out)
}

/// Decomposes `V(hw1) ⊗ V(hw2)` into irreducibles.
pub fn tensor_decompose(d: &RealFormDescriptor, hw1: &Weight, hw2: &Weight) -> Result<Vec<(Weight, u64)>> {
    check_dominant(d, hw1)?;
    let second = freudenthal(d, hw2)?;
    klimyk(d, hw1, &second)
}

/// Weights of the spin module of `Cliff(s₀)`: `Σ ±γ/2` over the noncompact
/// pairs, each with multiplicity `2^⌊m₀/2⌋`.
pub fn spin_weights(d: &RealFormDescriptor) -> WeightMultiset {
    let reps = d.noncompact_weights().lex_representatives();
    let factor = 1u64 << (d.zero_weight_s_dim() / 2);
    let halves: Vec<Weight> = reps.iter().map(|g| g.scale(&frac(1, 2))).collect();
    let mut out = WeightMultiset::new();
    for bits in 0..1usize << halves.len() {
        let mut w = Weight::zero(d.rank_tc());
        for (j, h) in halves.iter().enumerate() {
            if bits >> j & 1 == 0 {
                w += h;
            } else {
                w += &-h;
            }
        }
        out.insert(w, factor);
    }
    out
}

/// Multiplicity of the genuine `K̃`-type `tau` in `V ⊗ S`.
pub fn dirac_multiplicity(d: &RealFormDescriptor, tau: &IrreducibleKType, v: &IrreducibleKType) -> Result<u64> {
    if !is_genuine(d, tau.highest_weight())? {
        return Err(Error::NotGenuine { weight: tau.highest_weight().clone() });
    }
    if !is_integral(d, v.highest_weight()) {
        return Err(Error::NotIntegral(v.highest_weight().clone()));
    }
    let pieces = klimyk(d, v.highest_weight(), &spin_weights(d))?;
    Ok(pieces.into_iter().find(|(w, _)| w == tau.highest_weight()).map_or(0, |(_, m)| m))
}

impl RealFormDescriptor {
    fn norm_sq_shifted(&self, w: &Weight, shift: &Weight) -> Q {
        let x = w + shift;
        self.inner(&x, &x)
    }
}

/// Distinct weights of a multiset, for display.
pub fn support(m: &WeightMultiset) -> BTreeSet<Weight> {
    m.iter().map(|(w, _)| w.clone()).collect()
}
