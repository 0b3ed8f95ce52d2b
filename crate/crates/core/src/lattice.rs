//! Points of a shifted lattice inside a ball, enumerated exactly.

use num::{BigInt, Signed};

use crate::linalg;
use crate::weight::{ceil_sqrt, BilinearForm, Weight, Q};

/// All `x = shift + Σ c_i b_i` with integer `c` and `⟨x, x⟩ ≤ bound_sq`.
///
/// Each coordinate `y = c + r` of `x` in the basis is bounded by
/// `sqrt(bound_sq · (G⁻¹)_ii)` where `G` is the Gram matrix of the basis, so
/// the search box is finite and complete. Output is in lexicographic order
/// of `c`. Returns `None` for a singular basis.
pub fn points_in_ball(basis: &[Weight], shift: &Weight, form: &BilinearForm, bound_sq: &Q) -> Option<Vec<Weight>> {
    let n = basis.len();
    let rows: Vec<Vec<Q>> = basis.iter().map(|b| b.coords().to_vec()).collect();
    let shift_coords = linalg::solve_row_combination(&rows, shift.coords())?;
    let gram: Vec<Vec<Q>> =
        basis.iter().map(|bi| basis.iter().map(|bj| form.ip(bi, bj)).collect()).collect();
    let inv = linalg::inverse(&gram)?;

    let mut ranges: Vec<(BigInt, BigInt)> = Vec::with_capacity(n);
    for i in 0..n {
        let reach = Q::from_integer(ceil_sqrt(&(bound_sq * &inv[i][i])));
        let lo = (-&reach - &shift_coords[i]).ceil().to_integer();
        let hi = (&reach - &shift_coords[i]).floor().to_integer();
        if lo > hi {
            return Some(Vec::new());
        }
        ranges.push((lo, hi));
    }

    let mut out = Vec::new();
    if n == 0 {
        if !bound_sq.is_negative() {
            out.push(shift.clone());
        }
        return Some(out);
    }
    let mut c: Vec<BigInt> = ranges.iter().map(|(lo, _)| lo.clone()).collect();
    loop {
        let mut x = shift.clone();
        for (ci, b) in c.iter().zip(basis) {
            x += &b.scale(&Q::from_integer(ci.clone()));
        }
        if &form.norm_sq(&x) <= bound_sq {
            out.push(x);
        }
        // odometer, last coordinate fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Some(out);
            }
            k -= 1;
            if c[k] < ranges[k].1 {
                c[k] += 1;
                for j in k + 1..n {
                    c[j] = ranges[j].0.clone();
                }
                break;
            }
        }
    }
}
