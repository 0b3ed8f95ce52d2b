use std::collections::BTreeSet;

use proptest::prelude::*;
use tempered_atlas::group::{catalog, parse_descriptor, serialize_descriptor};
use tempered_atlas::krep::{freudenthal, tensor_decompose, weyl_dim};
use tempered_atlas::matching::{match_inverse, summarize, summarize_datum};
use tempered_atlas::vogan::{enumerate, enumerate_norm_sq, is_genuine};
use tempered_atlas::weight::{frac, q, Weight, Q};
use tempered_atlas::{Error, CATALOG_NAMES};

fn group_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(CATALOG_NAMES.to_vec())
}

fn dominant_su21(a: i64, b: i64) -> Weight {
    // positive compact root (1,-1) with Gram [[2/3,-1/3],[-1/3,2/3]]: dominant iff a >= b
    Weight::from_ints(&[a.max(b), a.min(b)])
}

#[test]
fn every_catalog_group_round_trips_through_text() {
    for name in CATALOG_NAMES {
        let d = catalog(name).unwrap();
        assert_eq!(parse_descriptor(&serialize_descriptor(&d)).unwrap(), d);
    }
}

#[test]
fn enumeration_is_exactly_the_genuine_dominant_set() {
    // brute force over a box of half-integer and integer points, then filter
    for name in CATALOG_NAMES {
        let d = catalog(name).unwrap();
        let radius_sq = q(20);
        let run = enumerate_norm_sq(&d, &radius_sq).unwrap();
        let got: BTreeSet<Weight> = run.kappas().cloned().collect();
        let mut oracle = BTreeSet::new();
        let steps: Vec<Q> = (-24..=24).map(|k| frac(k, 4)).collect();
        let points: Vec<Weight> = if d.rank_tc() == 1 {
            steps.iter().map(|x| Weight::new(vec![x.clone()])).collect()
        } else {
            steps.iter().flat_map(|x| steps.iter().map(move |y| Weight::new(vec![x.clone(), y.clone()]))).collect()
        };
        for w in points {
            if d.inner(&w, &w) > radius_sq {
                continue;
            }
            let dominant = d.positive_compact().iter().all(|a| d.inner(&w, a) >= q(0));
            if dominant && is_genuine(&d, &w).unwrap() {
                oracle.insert(w);
            }
        }
        assert_eq!(got, oracle, "{name}");
    }
}

#[test]
fn su21_components_are_disjoint_and_round_trip() {
    let d = catalog("su21").unwrap();
    let run = enumerate(&d, &q(6)).unwrap();
    let mut seen = BTreeSet::new();
    for e in &run.entries {
        let s = summarize_datum(&d, e).unwrap();
        for m in &s.minimal_k_types {
            assert!(seen.insert(m.clone()), "{m} repeated");
            assert_eq!(&match_inverse(&d, m).unwrap(), e.kappa());
        }
    }
    assert!(!run.entries.is_empty());
}

proptest! {
    #[test]
    fn weight_text_round_trip(coords in prop::collection::vec((-50i64..50, 1i64..9), 1..4)) {
        let w = Weight::from_fracs(&coords);
        prop_assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }

    #[test]
    fn scaling_the_form_preserves_the_classification(name in group_name(), c in 1i64..6, r in 1i64..5) {
        let d = catalog(name).unwrap();
        let scaled = d.with_rescaled_form(&q(c));
        let a = enumerate_norm_sq(&d, &q(r * r)).unwrap();
        let b = enumerate_norm_sq(&scaled, &q(c * r * r)).unwrap();
        prop_assert_eq!(a.kappas().collect::<Vec<_>>(), b.kappas().collect::<Vec<_>>());
        for (x, y) in a.entries.iter().zip(&b.entries) {
            prop_assert_eq!(summarize_datum(&d, x).unwrap(), summarize_datum(&scaled, y).unwrap());
        }
    }

    #[test]
    fn inverse_matching_is_left_inverse_on_minimal_k_types(a in -8i64..8, b in -8i64..8) {
        let d = catalog("sp4r").unwrap();
        let kappa = Weight::from_fracs(&[(2 * a.max(b) + 1, 2), (2 * a.min(b) + 1, 2)]);
        let s = summarize(&d, &kappa).unwrap();
        for m in &s.minimal_k_types {
            prop_assert_eq!(&match_inverse(&d, m).unwrap(), &kappa);
        }
    }

    #[test]
    fn inverse_matching_on_dominant_positions(m in -6i64..7, n in -6i64..7) {
        prop_assume!(m >= n);
        let d = catalog("sp4r").unwrap();
        let mu = Weight::from_ints(&[m, n]);
        match match_inverse(&d, &mu) {
            Err(Error::AmbiguousPositiveSystem { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected {e}"),
            Ok(kappa) => {
                if let Ok(s) = summarize(&d, &kappa) {
                    // a claimed position matches back; an unclaimed one is simply absent
                    if s.minimal_k_types.contains(&mu) {
                        prop_assert_eq!(s.kappa, kappa);
                    }
                }
            }
        }
    }

    #[test]
    fn su21_tensor_dimension_law(a in -3i64..4, b in -3i64..4, c in -3i64..4, e in -3i64..4) {
        let d = catalog("su21").unwrap();
        let (x, y) = (dominant_su21(a, b), dominant_su21(c, e));
        let pieces = tensor_decompose(&d, &x, &y).unwrap();
        let total: u64 = pieces.iter().map(|(w, m)| m * weyl_dim(&d, w).unwrap()).sum();
        prop_assert_eq!(total, weyl_dim(&d, &x).unwrap() * weyl_dim(&d, &y).unwrap());
        let mut swapped = tensor_decompose(&d, &y, &x).unwrap();
        let mut pieces = pieces;
        pieces.sort();
        swapped.sort();
        prop_assert_eq!(pieces, swapped);
    }

    #[test]
    fn su21_weights_are_weyl_invariant(a in -5i64..6, b in -5i64..6) {
        let d = catalog("su21").unwrap();
        let hw = dominant_su21(a, b);
        let m = freudenthal(&d, &hw).unwrap();
        prop_assert_eq!(m.total_mass(), weyl_dim(&d, &hw).unwrap());
        prop_assert!(m.is_invariant_under(d.positive_compact(), d.form()));
    }
}
