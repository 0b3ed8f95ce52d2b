//! Exact dense linear algebra over the rationals.

use num::{One, Signed, Zero};

use crate::weight::Q;

pub type Matrix = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn transpose(m: &[Vec<Q>]) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "matrix shape mismatch");
            (0..cols)
                .map(|j| {
                    let mut acc = Q::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() {
                            acc += &row[k] * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Row-reduces `[a | rhs]` in place. Returns the determinant of `a`.
fn eliminate(a: &mut [Vec<Q>], rhs: &mut [Vec<Q>]) -> Q {
    let n = a.len();
    let mut det = Q::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            rhs.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        let inv = p.recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for x in rhs[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let (pivot, pivot_rhs) = (a[col].clone(), rhs[col].clone());
            for (x, p) in a[r].iter_mut().zip(&pivot) {
                *x -= &factor * p;
            }
            for (x, p) in rhs[r].iter_mut().zip(&pivot_rhs) {
                *x -= &factor * p;
            }
        }
    }
    det
}

pub fn determinant(m: &[Vec<Q>]) -> Q {
    let mut a = m.to_vec();
    let mut rhs: Vec<Vec<Q>> = vec![Vec::new(); m.len()];
    eliminate(&mut a, &mut rhs)
}

pub fn inverse(m: &[Vec<Q>]) -> Option<Matrix> {
    let mut a = m.to_vec();
    let mut rhs = identity(m.len());
    let det = eliminate(&mut a, &mut rhs);
    (!det.is_zero()).then_some(rhs)
}

/// Solves `x · m = v` for a row vector `x` (so `v` is a combination of the
/// rows of `m`). Returns `None` when `m` is singular.
pub fn solve_row_combination(m: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let mut a = transpose(m);
    let mut rhs: Vec<Vec<Q>> = v.iter().map(|x| vec![x.clone()]).collect();
    let det = eliminate(&mut a, &mut rhs);
    (!det.is_zero()).then(|| rhs.into_iter().map(|mut r| r.remove(0)).collect())
}

pub fn is_nonnegative_integer(x: &Q) -> bool {
    x.is_integer() && !x.is_negative()
}
