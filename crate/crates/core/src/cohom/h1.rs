//! `H¹(K, M)` for a right G-lattice `M`.
//!
//! A cocycle satisfies `f(gh) = f(g)·ρ(h) + f(h)` and is determined by its
//! values on generators, so `Z¹` embeds in `M^{#gens}`.

use std::collections::VecDeque;

use super::CohomologyGroup;
use crate::error::{Error, Result};
use crate::glat::GLattice;
use crate::intlat::{
    integer_kernel, solve_left, AbelianQuotient, CokernelWitness, HnfBuilder, Int, IntMat,
    SparseRow,
};
use crate::permgrp::PermGroup;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum H1Method {
    /// Propagate generator values along a spanning tree of the Cayley graph
    /// and impose the remaining edges as linear constraints.
    #[default]
    CayleyPropagation,
    /// Unknowns `f(g)` for every element, constraints for every pair.
    AllPairs,
    /// `Z¹` is the saturation of `B¹` inside `M^{#gens}` (it has the same
    /// rank because `H¹` is finite), so `H¹` is the torsion of the cokernel
    /// of `m ↦ (m(ρ(s) − 1))_s`.
    Saturation,
}

/// `H¹(K, M)` with the default method.
pub fn h1(k: &PermGroup, m: &GLattice) -> Result<CohomologyGroup> {
    h1_with(k, m, H1Method::default())
}

pub fn h1_with(k: &PermGroup, m: &GLattice, method: H1Method) -> Result<CohomologyGroup> {
    let mk = if k == m.group() && k.generators() == m.group().generators() {
        m.clone()
    } else {
        m.restrict(k)?
    };
    match method {
        H1Method::CayleyPropagation => Ok(propagation(&mk)),
        H1Method::AllPairs => Ok(all_pairs(&mk)),
        H1Method::Saturation => Ok(saturation(&mk)),
    }
}

/// Rows `(e_i(ρ(s_j) − 1))_j`, a generating set of `B¹` in generator values.
fn coboundary_rows(m: &GLattice) -> IntMat {
    let r = m.rank();
    let id = IntMat::identity(r);
    let mut out = IntMat::zeros(r, 0);
    for a in m.generator_matrices() {
        out = out.concat_cols(&a.sub(&id));
    }
    out
}

/// `Z¹/B¹` given a basis of `Z¹` and generators of `B¹` in the same coordinates.
fn quotient(z: &IntMat, b: &IntMat, ambient: &str) -> CohomologyGroup {
    let dim = z.cols();
    if z.rows() == 0 {
        return CohomologyGroup::new(Default::default(), ambient, dim).with_representatives(vec![]);
    }
    let x = solve_left(z, b).expect("coboundaries are cocycles");
    let q = AbelianQuotient::new(z.rows(), &x);
    debug_assert_eq!(q.free_rank(), 0, "H¹ of a finite group is finite");
    let reps = q
        .generators()
        .iter()
        .map(|c| IntMat::vec_mul(c, z))
        .collect();
    CohomologyGroup::new(q.invariants().clone(), ambient, dim).with_representatives(reps)
}

fn propagation(m: &GLattice) -> CohomologyGroup {
    let g = m.group();
    let r = m.rank();
    let k = g.generators().len();
    let n = r * k;
    let ambient = "cocycle values on generators";
    if n == 0 {
        return CohomologyGroup::new(Default::default(), ambient, 0).with_representatives(vec![]);
    }
    let gens: Vec<usize> = g.generators().iter().map(|s| g.index_of(s).unwrap()).collect();
    let mats = m.generator_matrices();
    // a[x] is the (n × r) matrix with f(x) = (generator values) · a[x].
    let mut a: Vec<Option<IntMat>> = vec![None; g.order()];
    a[0] = Some(IntMat::zeros(n, r));
    let step = |ax: &IntMat, j: usize| -> IntMat {
        let mut next = ax.mul(&mats[j]);
        for i in 0..r {
            next[(j * r + i, i)] += &Int::ONE;
        }
        next
    };
    let mut constraints = HnfBuilder::new(n);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (j, &s) in gens.iter().enumerate() {
            let y = g.mul_idx(x, s);
            let next = step(a[x].as_ref().unwrap(), j);
            match &a[y] {
                None => {
                    a[y] = Some(next);
                    queue.push_back(y);
                }
                Some(ay) => {
                    let diff = next.sub(ay);
                    for c in 0..r {
                        let col = diff.column(c);
                        if col.iter().any(|v| !v.is_zero()) {
                            constraints.insert(&col);
                        }
                    }
                }
            }
        }
    }
    let z = integer_kernel(&constraints.basis().transpose_or_empty(n));
    quotient(&z, &coboundary_rows(m), ambient)
}

fn all_pairs(m: &GLattice) -> CohomologyGroup {
    let g = m.group();
    let r = m.rank();
    let order = g.order();
    let n = r * order;
    let mats = m.all_matrices();
    // Unknown block i holds f(elements[i]); constraint f(xy) − f(x)ρ(y) − f(y) = 0.
    let mut constraints = HnfBuilder::new(n);
    for x in 0..order {
        for y in 0..order {
            let xy = g.mul_idx(x, y);
            for c in 0..r {
                let mut row = vec![Int::ZERO; n];
                row[xy * r + c] += &Int::ONE;
                row[y * r + c] -= &Int::ONE;
                for i in 0..r {
                    let v = &mats[y][(i, c)];
                    if !v.is_zero() {
                        row[x * r + i] -= v;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    constraints.insert(&row);
                }
            }
        }
    }
    let z = integer_kernel(&constraints.basis().transpose_or_empty(n));
    let id = IntMat::identity(r);
    let mut b = IntMat::zeros(r, 0);
    for mx in mats {
        b = b.concat_cols(&mx.sub(&id));
    }
    quotient(&z, &b, "cocycle values on all elements")
}

fn saturation(m: &GLattice) -> CohomologyGroup {
    let r = m.rank();
    let k = m.generator_matrices().len();
    let b = coboundary_rows(m);
    // Row (j, c) of the map m ↦ (m(ρ(s_j) − 1))_j, as a sparse row over m.
    let rows: Vec<SparseRow> = (0..r * k)
        .map(|col| {
            (0..r)
                .filter(|&i| !b[(i, col)].is_zero())
                .map(|i| (i, b[(i, col)].clone()))
                .collect()
        })
        .collect();
    let w = CokernelWitness::new(r, rows);
    CohomologyGroup::new(w.invariants().clone(), "cocycle values on generators", r * k)
        .with_representatives(w.representatives())
}

trait TransposeOrEmpty {
    fn transpose_or_empty(&self, n: usize) -> IntMat;
}

impl TransposeOrEmpty for IntMat {
    /// Transpose, keeping `n` rows even when there are no constraints.
    fn transpose_or_empty(&self, n: usize) -> IntMat {
        if self.rows() == 0 {
            IntMat::zeros(n, 0)
        } else {
            self.transpose()
        }
    }
}

/// `f(gh) − f(g)ρ(h) − f(h)` vanishes for a cocycle given by generator
/// values; returns the cocycle on every element.
pub fn extend_cocycle(m: &GLattice, values: &[Int]) -> Result<Vec<Vec<Int>>> {
    let g = m.group();
    let r = m.rank();
    let gens: Vec<usize> = g.generators().iter().map(|s| g.index_of(s).unwrap()).collect();
    let mats = m.generator_matrices();
    let mut f: Vec<Option<Vec<Int>>> = vec![None; g.order()];
    f[0] = Some(vec![Int::ZERO; r]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (j, &s) in gens.iter().enumerate() {
            let y = g.mul_idx(x, s);
            let mut v = IntMat::vec_mul(f[x].as_ref().unwrap(), &mats[j]);
            for i in 0..r {
                v[i] += &values[j * r + i];
            }
            match &f[y] {
                None => {
                    f[y] = Some(v);
                    queue.push_back(y);
                }
                Some(fy) if *fy == v => {}
                Some(_) => return Err(Error::Invalid("values do not define a cocycle".into())),
            }
        }
    }
    Ok(f.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::{norm1_lattice, permutation_lattice};

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_strings(n, gens).unwrap()
    }

    fn all_methods(k: &PermGroup, m: &GLattice) -> Vec<Vec<u64>> {
        [H1Method::CayleyPropagation, H1Method::AllPairs, H1Method::Saturation]
            .iter()
            .map(|&meth| h1_with(k, m, meth).unwrap().invariants.0)
            .collect()
    }

    #[test]
    fn sign_lattice() {
        let c2 = grp(2, &["(1,2)"]);
        let sign = GLattice::new(c2.clone(), vec![IntMat::from_rows(&[[-1]])]).unwrap();
        for v in all_methods(&c2, &sign) {
            assert_eq!(v, vec![2]);
        }
    }

    #[test]
    fn v4_norm_one() {
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let j = norm1_lattice(&v4).unwrap();
        for v in all_methods(&v4, &j) {
            assert_eq!(v, vec![2, 2]);
        }
        let reps = h1(&v4, &j).unwrap().representatives.unwrap();
        for rep in reps {
            assert!(extend_cocycle(&j, &rep).is_ok());
        }
    }

    #[test]
    fn permutation_lattices_vanish() {
        let s3 = grp(3, &["(1,2)", "(1,2,3)"]);
        for h in s3.all_subgroups(&Default::default()).unwrap() {
            let p = permutation_lattice(&s3, &h).unwrap();
            for v in all_methods(&s3, &p) {
                assert!(v.is_empty());
            }
        }
    }

    #[test]
    fn restriction_to_subgroup() {
        let s4 = grp(4, &["(1,2)", "(1,2,3,4)"]);
        let j = norm1_lattice(&s4).unwrap();
        assert!(h1(&s4, &j).unwrap().is_trivial());
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(h1(&v4, &j).unwrap().invariants, [2u64, 2]);
    }
}
