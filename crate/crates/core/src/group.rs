//! Group descriptors: the torus-weight data of a connected linear real
//! reductive group, a small built-in catalog, the on-disk descriptor format,
//! and structural validation.

use std::fmt;
use std::path::Path;

use num::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::weight::{format_rational, frac, half_sum, parse_rational, q, BilinearForm, SignedRootList, Weight, Q};

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: [&str; 4] = ["sl2r", "sl2c", "su21", "sp4r"];

/// A real form described through the weights of its compact Cartan `t^c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFormDescriptor {
    name: String,
    rank_tc: usize,
    rank_g: usize,
    form: BilinearForm,
    compact_roots: SignedRootList,
    positive_compact: Vec<Weight>,
    noncompact_weights: SignedRootList,
    zero_weight_s_dim: usize,
    integrality_basis: Vec<Weight>,
}

impl RealFormDescriptor {
    /// Assembles a descriptor without checking it. Use [`validate`] or
    /// [`RealFormDescriptor::validated`] before handing it to the classifier.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        name: impl Into<String>,
        rank_tc: usize,
        rank_g: usize,
        form: BilinearForm,
        compact_roots: SignedRootList,
        positive_compact: Vec<Weight>,
        noncompact_weights: SignedRootList,
        zero_weight_s_dim: usize,
        integrality_basis: Vec<Weight>,
    ) -> Self {
        RealFormDescriptor {
            name: name.into(),
            rank_tc,
            rank_g,
            form,
            compact_roots,
            positive_compact,
            noncompact_weights,
            zero_weight_s_dim,
            integrality_basis,
        }
    }

    pub fn validated(self) -> Result<Self> {
        let report = validate(&self);
        if report.ok {
            Ok(self)
        } else {
            Err(Error::Validation(report))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank_tc(&self) -> usize {
        self.rank_tc
    }

    pub fn rank_g(&self) -> usize {
        self.rank_g
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn compact_roots(&self) -> &SignedRootList {
        &self.compact_roots
    }

    pub fn positive_compact(&self) -> &[Weight] {
        &self.positive_compact
    }

    pub fn noncompact_weights(&self) -> &SignedRootList {
        &self.noncompact_weights
    }

    pub fn zero_weight_s_dim(&self) -> usize {
        self.zero_weight_s_dim
    }

    pub fn integrality_basis(&self) -> &[Weight] {
        &self.integrality_basis
    }

    /// `dim s`, counting the zero-weight part.
    pub fn dim_s(&self) -> usize {
        self.noncompact_weights.len() + self.zero_weight_s_dim
    }

    pub fn rho_k(&self) -> Weight {
        half_sum(&self.positive_compact, self.rank_tc)
    }

    /// Half-sum of one member from each noncompact `±` pair. It differs from
    /// every genuine `ρ(Δ⁺(s))` by an element of the root lattice, so it
    /// fixes the genuine coset `Λ + ρ(Δ⁺(s))`.
    pub fn reference_rho_s(&self) -> Weight {
        half_sum(&self.noncompact_weights.lex_representatives(), self.rank_tc)
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Q {
        self.form.ip(a, b)
    }

    /// Same group with the invariant form multiplied by `c > 0`.
    pub fn with_rescaled_form(&self, c: &Q) -> Self {
        RealFormDescriptor { form: self.form.rescaled(c), ..self.clone() }
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        RealFormDescriptor { name: name.into(), ..self.clone() }
    }
}

/// Outcome of [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<(String, String)>,
}

impl ValidationReport {
    fn push(&mut self, name: &str, detail: impl Into<String>) {
        self.violations.push((name.to_string(), detail.into()));
    }

    pub fn has(&self, name: &str) -> bool {
        self.violations.iter().any(|(n, _)| n == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "ok");
        }
        for (i, (name, detail)) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{name}: {detail}")?;
        }
        Ok(())
    }
}

/// Checks every structural invariant of a descriptor. Violations are listed
/// in a fixed order; dimension errors short-circuit the remaining checks.
pub fn validate(d: &RealFormDescriptor) -> ValidationReport {
    let mut r = ValidationReport::default();
    let n = d.rank_tc;

    if d.name.trim().is_empty() {
        r.push("name", "group name is empty");
    }
    if d.form.dim() != n || !d.form.is_square() {
        r.push("dimension", format!("Gram matrix must be {n}x{n}"));
    }
    if d.integrality_basis.len() != n {
        r.push("dimension", format!("lattice basis has {} rows, expected {n}", d.integrality_basis.len()));
    }
    let all_weights = d
        .compact_roots
        .iter()
        .chain(&d.positive_compact)
        .chain(d.noncompact_weights.iter())
        .chain(&d.integrality_basis);
    for w in all_weights {
        if w.dim() != n {
            r.push("dimension", format!("{w} has {} coordinates, expected {n}", w.dim()));
        }
    }
    if !r.violations.is_empty() {
        return r;
    }

    if !d.form.is_symmetric() {
        r.push("form not symmetric", "Gram matrix differs from its transpose");
    } else if !d.form.is_positive_definite() {
        r.push("form not positive definite", "a leading principal minor is not positive");
    }

    if d.rank_g < d.rank_tc {
        r.push("rank", format!("rank_g = {} is smaller than rank_tc = {}", d.rank_g, d.rank_tc));
    } else if d.zero_weight_s_dim != d.rank_g - d.rank_tc {
        r.push(
            "zero_weight_s_dim",
            format!(
                "zero_weight_s_dim = {} but rank_g - rank_tc = {}",
                d.zero_weight_s_dim,
                d.rank_g - d.rank_tc
            ),
        );
    }

    for (label, list) in [("compact", &d.compact_roots), ("noncompact", &d.noncompact_weights)] {
        if list.iter().any(Weight::is_zero) {
            r.push("zero root", format!("{label} list contains the zero weight"));
        }
        for dup in list.duplicates() {
            r.push("multiplicity", format!("{label} weight {dup} is listed more than once"));
        }
        for w in list.missing_negatives() {
            r.push("negation closure", format!("{label} weight {w} has no negative in the list"));
        }
    }
    // Outside equal rank a compact root can also be a weight of s (for
    // SL(2,C), s is the adjoint module of K), so overlap is only an error here.
    for w in d.compact_roots.iter().filter(|_| d.zero_weight_s_dim == 0) {
        if d.noncompact_weights.contains(w) {
            r.push("disjoint", format!("{w} is both compact and noncompact"));
        }
    }

    for p in &d.positive_compact {
        if !d.compact_roots.contains(p) {
            r.push("positive_compact", format!("{p} is not a compact root"));
        }
    }
    for a in d.compact_roots.iter() {
        let hits = d.positive_compact.iter().filter(|p| *p == a || **p == -a).count();
        if hits != 1 {
            r.push(
                "positive_compact",
                format!("pair ±{a} has {hits} representatives among the positive compact roots"),
            );
        }
    }

    let basis: Vec<Vec<Q>> = d.integrality_basis.iter().map(|w| w.coords().to_vec()).collect();
    if linalg::determinant(&basis).is_zero() {
        r.push("lattice basis singular", "integrality basis is not invertible");
    } else {
        for w in d.compact_roots.iter().chain(d.noncompact_weights.iter()) {
            if !is_integral(d, w) {
                r.push("root lattice", format!("{w} is not in the integral lattice"));
            }
        }
    }

    r.ok = r.violations.is_empty();
    r
}

/// Membership in the analytically integral lattice spanned by the descriptor's
/// basis.
pub fn is_integral(d: &RealFormDescriptor, w: &Weight) -> bool {
    let basis: Vec<Vec<Q>> = d.integrality_basis.iter().map(|b| b.coords().to_vec()).collect();
    match linalg::solve_row_combination(&basis, w.coords()) {
        Some(c) => c.iter().all(|x| x.is_integer()),
        None => false,
    }
}

fn ints(rows: &[&[i64]]) -> Vec<Weight> {
    rows.iter().map(|r| Weight::from_ints(r)).collect()
}

/// Built-in groups: `sl2r`, `sl2c`, `su21`, `sp4r`.
pub fn catalog(name: &str) -> Result<RealFormDescriptor> {
    let d = match name {
        // K = SO(2), s spanned by the weights ±2.
        "sl2r" => RealFormDescriptor::from_parts(
            "sl2r",
            1,
            1,
            BilinearForm::identity(1),
            SignedRootList::default(),
            vec![],
            SignedRootList::from_positive(&ints(&[&[2]])),
            0,
            ints(&[&[1]]),
        ),
        // K = SU(2); s ≅ su(2) as a K-module, so its zero weight is one-dimensional.
        "sl2c" => RealFormDescriptor::from_parts(
            "sl2c",
            1,
            2,
            BilinearForm::identity(1),
            SignedRootList::from_positive(&ints(&[&[2]])),
            ints(&[&[2]]),
            SignedRootList::from_positive(&ints(&[&[2]])),
            1,
            ints(&[&[1]]),
        ),
        // K = S(U(2) x U(1)), weights (p, q) of diag(e^ia, e^ib, e^-i(a+b)).
        "su21" => RealFormDescriptor::from_parts(
            "su21",
            2,
            2,
            BilinearForm::from_rows_unchecked(vec![
                vec![frac(2, 3), frac(-1, 3)],
                vec![frac(-1, 3), frac(2, 3)],
            ]),
            SignedRootList::from_positive(&ints(&[&[1, -1]])),
            ints(&[&[1, -1]]),
            SignedRootList::from_positive(&ints(&[&[2, 1], &[1, 2]])),
            0,
            ints(&[&[1, 0], &[0, 1]]),
        ),
        // K = U(2), standard coordinates e1, e2.
        "sp4r" => RealFormDescriptor::from_parts(
            "sp4r",
            2,
            2,
            BilinearForm::identity(2),
            SignedRootList::from_positive(&ints(&[&[1, -1]])),
            ints(&[&[1, -1]]),
            SignedRootList::from_positive(&ints(&[&[1, 1], &[2, 0], &[0, 2]])),
            0,
            ints(&[&[1, 0], &[0, 1]]),
        ),
        other => return Err(Error::UnknownGroup(other.to_string())),
    };
    d.validated()
}

// ---------------------------------------------------------------------------
// Descriptor file format

#[derive(Debug, Clone, PartialEq)]
struct Rational(Q);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                parse_rational(v).map(Rational).map_err(E::custom)
            }
            fn visit_i64<E>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational(q(v)))
            }
            fn visit_u64<E>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational(Q::from_integer(v.into())))
            }
            fn visit_f64<E: serde::de::Error>(self, v: f64) -> std::result::Result<Rational, E> {
                Err(E::custom(format!("float literal {v} not accepted; write rationals as \"p/q\"")))
            }
        }
        de.deserialize_any(Visitor)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupSection {
    name: String,
    rank_tc: usize,
    rank_g: usize,
    zero_weight_s_dim: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormSection {
    gram: Vec<Vec<Rational>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootsSection {
    compact: Vec<Vec<Rational>>,
    positive_compact: Vec<Vec<Rational>>,
    noncompact: Vec<Vec<Rational>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeSection {
    basis: Vec<Vec<Rational>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DescriptorFile {
    group: GroupSection,
    form: FormSection,
    roots: RootsSection,
    lattice: LatticeSection,
}

fn to_rows(ws: &[Weight]) -> Vec<Vec<Rational>> {
    ws.iter().map(|w| w.coords().iter().cloned().map(Rational).collect()).collect()
}

fn from_rows(rows: Vec<Vec<Rational>>) -> Vec<Weight> {
    rows.into_iter().map(|r| Weight::new(r.into_iter().map(|x| x.0).collect())).collect()
}

/// Renders a descriptor in the on-disk format.
pub fn serialize_descriptor(d: &RealFormDescriptor) -> String {
    let file = DescriptorFile {
        group: GroupSection {
            name: d.name.clone(),
            rank_tc: d.rank_tc,
            rank_g: d.rank_g,
            zero_weight_s_dim: d.zero_weight_s_dim,
        },
        form: FormSection {
            gram: d.form.gram().iter().map(|r| r.iter().cloned().map(Rational).collect()).collect(),
        },
        roots: RootsSection {
            compact: to_rows(d.compact_roots.roots()),
            positive_compact: to_rows(&d.positive_compact),
            noncompact: to_rows(d.noncompact_weights.roots()),
        },
        lattice: LatticeSection { basis: to_rows(&d.integrality_basis) },
    };
    toml::to_string(&file).expect("descriptor serializes")
}

/// Parses the on-disk format and validates the result.
pub fn parse_descriptor(text: &str) -> Result<RealFormDescriptor> {
    let file: DescriptorFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let gram = file.form.gram.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect();
    RealFormDescriptor::from_parts(
        file.group.name,
        file.group.rank_tc,
        file.group.rank_g,
        BilinearForm::from_rows_unchecked(gram),
        SignedRootList::from_vec_unchecked(from_rows(file.roots.compact)),
        from_rows(file.roots.positive_compact),
        SignedRootList::from_vec_unchecked(from_rows(file.roots.noncompact)),
        file.group.zero_weight_s_dim,
        from_rows(file.lattice.basis),
    )
    .validated()
}

pub fn load_descriptor(path: impl AsRef<Path>) -> Result<RealFormDescriptor> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_descriptor(&text)
}
