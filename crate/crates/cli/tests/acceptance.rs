//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tempered_atlas::group::catalog;
use tempered_atlas::krep::{dirac_multiplicity, freudenthal, spin_weights, tensor_decompose, weyl_dim, IrreducibleKType};
use tempered_atlas::matching::{match_inverse, r_group_order, summarize, summarize_datum, ComponentSummary};
use tempered_atlas::parabolic::sign_vectors;
use tempered_atlas::vogan::{construct_from_kappa, construct_with_signs, dim_a, enumerate, enumerate_norm_sq};
use tempered_atlas::weight::{frac, half_sum, q, Weight, Q};
use tempered_atlas::{RealFormDescriptor, CATALOG_NAMES};
use tempered_atlas_cli::{build_grid, CellContent};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn sp4r() -> RealFormDescriptor {
    catalog("sp4r").unwrap()
}

/// Half-integers `k + 1/2` with `|k + 1/2| ≤ bound`.
fn half_integers(bound: i64) -> Vec<Q> {
    (-bound..bound).map(|k| frac(2 * k + 1, 2)).collect()
}

/// Oracle for the Sp(4,R) sweep: `(Z + 1/2)²`, `κ₁ ≥ κ₂`, `‖κ‖∞ ≤ bound`.
fn sweep_oracle(bound: i64) -> BTreeSet<Weight> {
    let hs = half_integers(bound);
    let mut out = BTreeSet::new();
    for a in &hs {
        for b in &hs {
            if a >= b {
                out.insert(Weight::new(vec![a.clone(), b.clone()]));
            }
        }
    }
    out
}

fn sup_norm_at_most(w: &Weight, bound: i64) -> bool {
    w.coords().iter().all(|c| c.abs() <= q(bound))
}

/// Components of `d` with `‖κ‖∞ ≤ bound`, found through the ball of squared
/// radius `radius_sq`, which must contain the box.
fn sweep(d: &RealFormDescriptor, radius_sq: &Q, bound: i64) -> Result<Vec<ComponentSummary>, String> {
    let run = ok(enumerate_norm_sq(d, radius_sq))?;
    let mut out = Vec::new();
    for e in run.entries.iter().filter(|e| sup_norm_at_most(e.kappa(), bound)) {
        out.push(ok(summarize_datum(d, e))?);
    }
    Ok(out)
}

fn criterion_1() -> Outcome {
    let d = catalog("sl2r").unwrap();
    let start = Instant::now();
    let run = ok(enumerate(&d, &q(5)))?;
    let summaries: Vec<ComponentSummary> =
        run.entries.iter().map(|e| summarize_datum(&d, e)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let kappas: Vec<Weight> = summaries.iter().map(|s| s.kappa.clone()).collect();
    let expected: Vec<Weight> = (-5..=5).map(|k| Weight::from_ints(&[k])).collect();
    ensure(kappas == expected, || format!("kappas {kappas:?}"))?;
    for s in &summaries {
        let k = s.kappa.coords()[0].to_integer();
        let k: i64 = k.try_into().unwrap();
        if k == 0 {
            ensure(s.n == 1 && s.r_order == 2, || "kappa = 0 should have N = 1, |R| = 2".into())?;
            let got: BTreeSet<_> = s.minimal_k_types.iter().cloned().collect();
            let want: BTreeSet<_> = [Weight::from_ints(&[1]), Weight::from_ints(&[-1])].into();
            ensure(got == want, || format!("kappa = 0 minimal K-types {got:?}"))?;
        } else {
            let mk = k.signum() * (k.abs() + 1);
            ensure(s.n == 0 && s.r_order == 1, || format!("kappa = {k} should be discrete series"))?;
            ensure(s.minimal_k_types == vec![Weight::from_ints(&[mk])], || {
                format!("kappa = {k}: minimal K-types {:?}", s.minimal_k_types)
            })?;
        }
    }
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("11 components, {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let d = sp4r();
    let start = Instant::now();
    let rows = sweep(&d, &q(200), 10)?;
    let elapsed = start.elapsed();
    let oracle = sweep_oracle(10);
    let got: BTreeSet<Weight> = rows.iter().map(|s| s.kappa.clone()).collect();
    ensure(got == oracle, || format!("enumerated {} kappas, oracle has {}", got.len(), oracle.len()))?;
    for kappa in &oracle {
        let datum = ok(construct_from_kappa(&d, kappa))?;
        ensure(datum.is_some(), || format!("no datum for {kappa}"))?;
    }
    for s in &rows {
        ensure(s.n <= 1, || format!("{}: N = {}", s.kappa, s.n))?;
        ensure(s.minimal_k_types.len() == 1 << s.n, || format!("{}: wrong count", s.kappa))?;
        let distinct: BTreeSet<_> = s.minimal_k_types.iter().collect();
        ensure(distinct.len() == s.minimal_k_types.len(), || format!("{}: repeated K-type", s.kappa))?;
        for m in &s.minimal_k_types {
            let (a, b) = (&m.coords()[0], &m.coords()[1]);
            ensure(a >= b, || format!("{}: {m} not dominant", s.kappa))?;
            let back = ok(match_inverse(&d, m))?;
            ensure(back == s.kappa, || format!("round trip B: {m} -> {back}, expected {}", s.kappa))?;
        }
        ensure(s.dirac_hw == s.kappa, || format!("round trip A fails at {}", s.kappa))?;
    }
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{} components, {elapsed:.2?}", rows.len()))
}

fn criterion_3() -> Outcome {
    let d = sp4r();
    let rows = sweep(&d, &q(200), 10)?;
    let mut owner: BTreeMap<Weight, Weight> = BTreeMap::new();
    for s in &rows {
        for m in &s.minimal_k_types {
            if let Some(prev) = owner.insert(m.clone(), s.kappa.clone()) {
                return Err(format!("{m} owned by {prev} and {}", s.kappa));
            }
        }
    }
    let grid = build_grid(&d, (-6, 6), (-6, 6)).map_err(|f| f.message)?;
    let mut bullets = 0;
    for m in -6..=6i64 {
        for n in -6..=6i64 {
            let cell = grid.get(m, n);
            // Independent expectation: invert the position, then ask whether
            // it is a minimal K-type of the component it points to.
            let mu = Weight::from_ints(&[m, n]);
            let expected = if n > m {
                CellContent::Empty
            } else {
                match match_inverse(&d, &mu) {
                    Err(_) => CellContent::Empty,
                    Ok(kappa) => match summarize(&d, &kappa) {
                        Ok(s) if s.minimal_k_types.contains(&mu) => {
                            if s.n == 0 {
                                CellContent::Bullet(kappa)
                            } else {
                                CellContent::Component(kappa, s.n)
                            }
                        }
                        _ => CellContent::Empty,
                    },
                }
            };
            ensure(cell == &expected, || format!("({m},{n}): grid {cell:?}, expected {expected:?}"))?;
            if matches!(cell, CellContent::Bullet(_)) {
                bullets += 1;
            }
        }
    }
    ensure(
        grid.get(4, 3) == &CellContent::Bullet(Weight::from_fracs(&[(5, 2), (3, 2)])),
        || "no bullet at (4,3)".into(),
    )?;
    Ok(format!("{} K-types, {} owners; grid has {bullets} bullets", owner.len(), rows.len()))
}

fn criterion_4() -> Outcome {
    let d = sp4r();
    let mut checked = 0;
    for kappa in sweep_oracle(10) {
        let base = ok(construct_from_kappa(&d, &kappa))?.ok_or(format!("no datum for {kappa}"))?;
        let n = base.n();
        if n == 0 {
            continue;
        }
        for signs in sign_vectors(n) {
            let other = ok(construct_with_signs(&d, &kappa, &signs))?;
            let other = other.ok_or(format!("{kappa}: mu not integral for signs {signs:?}"))?;
            ensure(other.canonical_form() == base.canonical_form(), || {
                format!("{kappa}: canonical form changes for signs {signs:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (kappa, sign) pairs"))
}

fn criterion_5() -> Outcome {
    let d = sp4r();
    let mut checked = 0;
    for kappa in sweep_oracle(10) {
        let base = ok(construct_from_kappa(&d, &kappa))?.ok_or(format!("no datum for {kappa}"))?;
        let p = base.parabolic();
        for signs in sign_vectors(p.n()) {
            let system = p.noncompact_positive_system(&signs);
            // one weight from each ± pair
            ensure(system.len() * 2 == d.noncompact_weights().len(), || format!("{kappa}: system size"))?;
            for g in &system {
                ensure(!system.contains(&-g), || format!("{kappa}: {g} and its negative"))?;
            }
            let lhs = half_sum(&system, 2);
            let rhs = &p.rho_s_cap_u() + &ok(p.rho_l_plus(&signs))?;
            ensure(lhs == rhs, || format!("{kappa} {signs:?}: {lhs} != {rhs}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (kappa, sign) pairs"))
}

fn criterion_6() -> Outcome {
    let mut total = 0;
    for name in CATALOG_NAMES {
        let d = catalog(name).unwrap();
        let run = ok(enumerate(&d, &q(8)))?;
        for e in &run.entries {
            let n = e.n();
            let da = dim_a(&d, e);
            ensure(da == n + d.rank_g() - d.rank_tc(), || format!("{name} {}: dim a = {da}", e.kappa()))?;
            ensure(da + d.rank_tc() - d.rank_g() == n, || format!("{name} {}: rank formula", e.kappa()))?;
            let r = ok(r_group_order(&d, e))?;
            ensure(r == 1 << n, || format!("{name} {}: |R| = {r}, N = {n}", e.kappa()))?;
            total += 1;
        }
    }
    Ok(format!("{total} components over {} groups", CATALOG_NAMES.len()))
}

fn criterion_7() -> Outcome {
    let d = sp4r();
    let mut weights_checked = 0;
    for n in -8..=8i64 {
        for gap in 0..=8i64 {
            let hw = Weight::from_ints(&[n + gap, n]);
            let mass = ok(freudenthal(&d, &hw))?.total_mass();
            let dim = ok(weyl_dim(&d, &hw))?;
            ensure(mass == dim && dim == (gap + 1) as u64, || format!("{hw}: mass {mass}, dim {dim}"))?;
            weights_checked += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let mut pick = || {
            let n: i64 = rng.gen_range(-5..=5);
            let gap: i64 = rng.gen_range(0..=6);
            Weight::from_ints(&[n + gap, n])
        };
        let (a, b) = (pick(), pick());
        let pieces = ok(tensor_decompose(&d, &a, &b))?;
        let mut sum = 0;
        for (w, m) in &pieces {
            sum += m * ok(weyl_dim(&d, w))?;
        }
        let product = ok(weyl_dim(&d, &a))? * ok(weyl_dim(&d, &b))?;
        ensure(sum == product, || format!("{a} x {b}: {sum} != {product}"))?;
    }
    let expected_mass = [("sl2r", 2), ("sl2c", 2), ("su21", 4), ("sp4r", 8)];
    for (name, want) in expected_mass {
        let d = catalog(name).unwrap();
        let mass = spin_weights(&d).total_mass();
        ensure(mass == 1 << (d.dim_s() / 2), || format!("{name}: spin mass {mass}"))?;
        ensure(mass == want, || format!("{name}: spin mass {mass}, expected {want}"))?;
    }
    Ok(format!("{weights_checked} highest weights, 50 tensor pairs, 4 spin modules"))
}

fn criterion_8() -> Outcome {
    let d = sp4r();
    let kt = |w: &Weight| IrreducibleKType::new(&d, w.clone()).map_err(|e| e.to_string());
    let mut pairs = 0;
    for s in sweep(&d, &q(32), 4)? {
        for m in &s.minimal_k_types {
            let mult = ok(dirac_multiplicity(&d, &kt(&s.kappa)?, &kt(m)?))?;
            ensure(mult == 1, || format!("({}, {m}): multiplicity {mult}", s.kappa))?;
            pairs += 1;
        }
    }
    let named = [
        ((1, 2), (1, 2), [2, 0]),
        ((1, 2), (1, 2), [2, 2]),
        ((1, 2), (-1, 2), [2, -1]),
        ((1, 2), (-1, 2), [1, -2]),
        ((5, 2), (3, 2), [4, 3]),
    ];
    for (a, b, v) in named {
        let tau = Weight::from_fracs(&[a, b]);
        let v = Weight::from_ints(&v);
        let mult = ok(dirac_multiplicity(&d, &kt(&tau)?, &kt(&v)?))?;
        ensure(mult == 1, || format!("({tau}, {v}): multiplicity {mult}"))?;
    }
    Ok(format!("{pairs} pairs plus 5 named triples"))
}

fn criterion_9() -> Outcome {
    let d = sp4r();
    let scaled = d.with_rescaled_form(&q(3));
    let key = |rows: Vec<ComponentSummary>| -> Vec<(Weight, Vec<Weight>, Weight)> {
        rows.into_iter().map(|s| (s.kappa, s.minimal_k_types, s.dirac_hw)).collect()
    };
    let base = key(sweep(&d, &q(200), 10)?);
    let other = key(sweep(&scaled, &q(600), 10)?);
    ensure(base == other, || format!("{} vs {} components differ", base.len(), other.len()))?;
    Ok(format!("{} components identical under Gram x 3", base.len()))
}

fn criterion_10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_tempered-atlas"))
            .args(["classify", "sp4r", "--radius", "5", "--format", "csv"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    ensure(a.status.success() && b.status.success(), || "classify failed".into())?;
    ensure(!a.stdout.is_empty(), || "empty output".into())?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("SL(2,R) classification at radius 5", criterion_1),
        ("Sp(4,R) sweep and round trips", criterion_2),
        ("disjointness and figure ownership", criterion_3),
        ("sign independence", criterion_4),
        ("rho identity", criterion_5),
        ("R-group law", criterion_6),
        ("K-representation oracles", criterion_7),
        ("Dirac multiplicity one", criterion_8),
        ("scale invariance", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
