//! Sublattices of ℤⁿ given by row bases.

use super::{hnf, hnf_basis, Int, IntMat};
use crate::error::{Error, Result};

/// Canonical basis of the left kernel `{x : x·A = 0}`; always saturated.
pub fn integer_kernel(a: &IntMat) -> IntMat {
    let hf = hnf(a);
    let rows: Vec<usize> = (hf.rank..a.rows()).collect();
    hnf_basis(&hf.u.select_rows(&rows))
}

/// Canonical basis of `L1 ∩ L2`.
pub fn lattice_intersection(l1: &IntMat, l2: &IntMat) -> Result<IntMat> {
    if l1.cols() != l2.cols() && l1.rows() > 0 && l2.rows() > 0 {
        return Err(Error::Dimension(format!(
            "lattice intersection of widths {} and {}",
            l1.cols(),
            l2.cols()
        )));
    }
    let n = l1.cols().max(l2.cols());
    if l1.rows() == 0 || l2.rows() == 0 {
        return Ok(IntMat::zeros(0, n));
    }
    let b1 = hnf_basis(l1);
    let b2 = hnf_basis(l2);
    let k = integer_kernel(&b1.stack(&b2));
    let first: Vec<usize> = (0..b1.rows()).collect();
    let coeffs = k.select_cols(&first);
    Ok(hnf_basis(&coeffs.mul(&b1)))
}

/// Solves `x·B = d` for every row `d` of `D`. `B` need not have full rank.
///
/// Returns `None` when some row of `D` is outside the row lattice of `B`.
pub fn solve_left(b: &IntMat, d: &IntMat) -> Option<IntMat> {
    let hf = hnf(b);
    let mut out = IntMat::zeros(d.rows(), b.rows());
    for i in 0..d.rows() {
        let y = echelon_coords(&hf.h, &hf.pivots, d.row(i))?;
        let ur: Vec<usize> = (0..hf.rank).collect();
        let x = IntMat::vec_mul(&y, &hf.u.select_rows(&ur));
        out.row_mut(i).clone_from_slice(&x);
    }
    Some(out)
}

/// Coordinates of `v` in an echelon basis, if `v` is in its span over ℤ.
pub fn echelon_coords(h: &IntMat, pivots: &[usize], v: &[Int]) -> Option<Vec<Int>> {
    let mut rest = v.to_vec();
    let mut y = vec![Int::ZERO; h.rows()];
    for (r, &c) in pivots.iter().enumerate() {
        if rest[c].is_zero() {
            continue;
        }
        let q = rest[c].div_exact(&h[(r, c)])?;
        for j in c..rest.len() {
            if !h[(r, j)].is_zero() {
                rest[j].add_mul(&-&q, &h[(r, j)]);
            }
        }
        y[r] = q;
    }
    rest.iter().all(Int::is_zero).then_some(y)
}

/// Saturation `(L ⊗ ℚ) ∩ ℤⁿ` of a row lattice.
pub fn saturation(l: &IntMat) -> IntMat {
    if l.rows() == 0 {
        return l.clone();
    }
    let perp = integer_kernel(&l.transpose());
    integer_kernel(&perp.transpose())
}

/// Whether every row of `a` lies in the row lattice of `b`.
pub fn lattice_contains(b: &IntMat, a: &IntMat) -> bool {
    let hf = hnf(b);
    (0..a.rows()).all(|i| echelon_coords(&hf.h, &hf.pivots, a.row(i)).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_examples() {
        let k = integer_kernel(&IntMat::from_rows(&[[1], [1]]));
        assert_eq!(k, IntMat::from_rows(&[[1, -1]]));
        assert_eq!(integer_kernel(&IntMat::identity(3)).rows(), 0);
        assert_eq!(integer_kernel(&IntMat::from_rows(&[[2, 4]])).rows(), 0);
    }

    #[test]
    fn intersection_examples() {
        let two = IntMat::from_rows(&[[2, 0], [0, 2]]);
        let three = IntMat::from_rows(&[[3, 0], [0, 3]]);
        assert_eq!(
            lattice_intersection(&two, &three).unwrap(),
            IntMat::from_rows(&[[6, 0], [0, 6]])
        );
        let diag = IntMat::from_rows(&[[1, 1]]);
        assert_eq!(
            lattice_intersection(&IntMat::identity(2), &diag).unwrap(),
            diag
        );
        assert!(lattice_intersection(&two, &IntMat::identity(3)).is_err());
    }

    #[test]
    fn solve_and_saturate() {
        let b = IntMat::from_rows(&[[2, 0], [1, 3]]);
        let d = IntMat::from_rows(&[[3, 3], [4, 6]]);
        let x = solve_left(&b, &d).unwrap();
        assert_eq!(x.mul(&b), d);
        assert!(solve_left(&b, &IntMat::from_rows(&[[1, 0]])).is_none());
        assert_eq!(
            saturation(&IntMat::from_rows(&[[2, 4, 6]])),
            IntMat::from_rows(&[[1, 2, 3]])
        );
    }
}
