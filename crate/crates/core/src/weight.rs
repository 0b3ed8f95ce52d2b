//! Exact rational weights, the invariant form, and the elementary operations
//! every other module is built from: pairings, half-sums, dominance and
//! reflections.
//!
//! Weights are coordinate vectors against a basis fixed by the group
//! descriptor. All geometry lives in the Gram matrix of [`BilinearForm`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;

/// Arbitrary-precision rational.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"n"`. Decimal and float notation is rejected.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    if t.is_empty() || t.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!("`{s}` is not an exact rational (use p/q)")));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
    let d = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Q::new(n, d))
}

/// Formats as `n` for integers, `p/q` otherwise.
pub fn format_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A weight of the compact Cartan, in descriptor coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Q>);

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| q(c)).collect())
    }

    /// Builds a weight from `(numerator, denominator)` pairs.
    pub fn from_fracs(coords: &[(i64, i64)]) -> Self {
        Weight(coords.iter().map(|&(n, d)| frac(n, d)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Q::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integer(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// True when the first nonzero coordinate is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.0.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_positive())
    }

    /// Integer coordinates, if every coordinate is an integer that fits.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num::ToPrimitive;
        self.0
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect()
    }

    fn check_dim(&self, other: &Weight) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated rationals, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        t.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for &Q {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(self)
    }
}

/// Symmetric positive-definite rational form on weights.
///
/// [`BilinearForm::new`] enforces the invariants. Descriptors loaded from
/// disk go through [`BilinearForm::from_rows_unchecked`] so that validation
/// can report violations instead of failing on the first one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    gram: Vec<Vec<Q>>,
}

impl BilinearForm {
    pub fn new(gram: Vec<Vec<Q>>) -> Result<Self> {
        let form = Self::from_rows_unchecked(gram);
        if !form.is_square() {
            return Err(Error::Parse("Gram matrix is not square".into()));
        }
        if !form.is_symmetric() {
            return Err(Error::Parse("Gram matrix is not symmetric".into()));
        }
        if !form.is_positive_definite() {
            return Err(Error::Parse("Gram matrix is not positive definite".into()));
        }
        Ok(form)
    }

    pub fn from_rows_unchecked(gram: Vec<Vec<Q>>) -> Self {
        BilinearForm { gram }
    }

    pub fn identity(dim: usize) -> Self {
        BilinearForm { gram: linalg::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn is_square(&self) -> bool {
        self.gram.iter().all(|r| r.len() == self.gram.len())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        self.is_square() && (0..n).all(|i| (0..i).all(|j| self.gram[i][j] == self.gram[j][i]))
    }

    /// Sylvester's criterion on the leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        self.is_square()
            && (1..=self.dim()).all(|k| {
                let minor: Vec<Vec<Q>> =
                    self.gram[..k].iter().map(|r| r[..k].to_vec()).collect();
                linalg::determinant(&minor).is_positive()
            })
    }

    /// Multiplies every entry by `c`.
    pub fn rescaled(&self, c: &Q) -> Self {
        BilinearForm {
            gram: self.gram.iter().map(|r| r.iter().map(|x| x * c).collect()).collect(),
        }
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Q> {
        a.check_dim(b)?;
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: a.dim() });
        }
        let mut acc = Q::zero();
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if !bj.is_zero() {
                    acc += ai * &self.gram[i][j] * bj;
                }
            }
        }
        Ok(acc)
    }

    /// Inner product for weights already known to have matching dimensions.
    pub(crate) fn ip(&self, a: &Weight, b: &Weight) -> Q {
        self.inner(a, b).expect("weight dimensions checked by caller")
    }

    pub fn norm_sq(&self, a: &Weight) -> Q {
        self.ip(a, a)
    }
}

/// A finite set of nonzero weights meant to be closed under negation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedRootList {
    roots: Vec<Weight>,
}

impl SignedRootList {
    pub fn new(roots: Vec<Weight>) -> Result<Self> {
        let list = SignedRootList { roots };
        if let Some(d) = list.duplicates().first() {
            return Err(Error::Parse(format!("duplicate root {d}")));
        }
        if let Some(r) = list.missing_negatives().first() {
            return Err(Error::Parse(format!("negative of {r} is missing")));
        }
        Ok(list)
    }

    pub fn from_vec_unchecked(roots: Vec<Weight>) -> Self {
        SignedRootList { roots }
    }

    /// Builds the list `{±r}` from one representative per pair.
    pub fn from_positive(reps: &[Weight]) -> Self {
        let mut roots = Vec::with_capacity(reps.len() * 2);
        for r in reps {
            roots.push(r.clone());
            roots.push(-r);
        }
        SignedRootList { roots }
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.roots.contains(w)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Weight> {
        self.roots.iter()
    }

    pub fn duplicates(&self) -> Vec<Weight> {
        let mut seen = std::collections::BTreeSet::new();
        let mut dups = Vec::new();
        for r in &self.roots {
            if !seen.insert(r) && !dups.contains(r) {
                dups.push(r.clone());
            }
        }
        dups
    }

    pub fn missing_negatives(&self) -> Vec<Weight> {
        self.roots.iter().filter(|r| !self.roots.contains(&-*r)).cloned().collect()
    }

    /// One member of each `±` pair: the lexicographically positive one.
    pub fn lex_representatives(&self) -> Vec<Weight> {
        let mut reps: Vec<Weight> =
            self.roots.iter().filter(|r| r.is_lex_positive()).cloned().collect();
        reps.dedup();
        reps
    }
}

impl<'a> IntoIterator for &'a SignedRootList {
    type Item = &'a Weight;
    type IntoIter = std::slice::Iter<'a, Weight>;
    fn into_iter(self) -> Self::IntoIter {
        self.roots.iter()
    }
}

pub fn inner(a: &Weight, b: &Weight, f: &BilinearForm) -> Result<Q> {
    f.inner(a, b)
}

/// `2⟨w, root⟩ / ⟨root, root⟩`.
pub fn coroot_pairing(w: &Weight, root: &Weight, f: &BilinearForm) -> Result<Q> {
    let rr = f.inner(root, root)?;
    if rr.is_zero() {
        return Err(Error::ZeroRoot);
    }
    Ok(q(2) * f.inner(w, root)? / rr)
}

/// Half the sum of `roots`, counted with multiplicity. `dim` is used for the
/// empty sum.
pub fn half_sum<'a, I>(roots: I, dim: usize) -> Weight
where
    I: IntoIterator<Item = &'a Weight>,
{
    let mut acc = Weight::zero(dim);
    for r in roots {
        acc += r;
    }
    acc.scale(&frac(1, 2))
}

pub fn is_dominant<'a, I>(w: &Weight, positives: I, f: &BilinearForm, strict: bool) -> Result<bool>
where
    I: IntoIterator<Item = &'a Weight>,
{
    for a in positives {
        let p = f.inner(w, a)?;
        if p.is_negative() || (strict && p.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reflection of `w` in the hyperplane orthogonal to `root`.
pub fn reflect(w: &Weight, root: &Weight, f: &BilinearForm) -> Result<Weight> {
    let c = coroot_pairing(w, root, f)?;
    Ok(w - &root.scale(&c))
}

/// Smallest integer `b` with `b ≥ sqrt(x)`, for `x ≥ 0`.
pub fn ceil_sqrt(x: &Q) -> BigInt {
    assert!(!x.is_negative(), "square root of a negative rational");
    let c = x.ceil().to_integer();
    let r = c.sqrt();
    if &r * &r == c {
        r
    } else {
        r + BigInt::one()
    }
}
