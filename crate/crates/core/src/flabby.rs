//! Flabby resolutions `0 → M → P → F → 0`.
//!
//! The cover is built on the dual side: with `N = M°`, every subgroup class
//! representative `K` contributes one copy of `ℤ[G/K]` per basis vector `x`
//! of `N^K`, mapped onto `N` by `Kg ↦ x·ρ_N(g)`. The resulting surjection
//! `π: Q → N` is onto on `K`-fixed points for every `K`, so `ker π` is
//! coflabby, and dualizing gives `0 → M → Q → (ker π)° → 0` with flabby
//! right-hand term.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::cohom::{h1_with, H1Method};
use crate::error::Result;
use crate::glat::{permutation_lattice, GLattice};
use crate::intlat::{hnf_basis, integer_kernel, solve_left, AbInvariants, Int, IntMat};
use crate::permgrp::{right_coset_labels, PermGroup};

#[derive(Clone, Debug, Default)]
pub struct FlabbyOptions {
    /// Walk subgroup classes from largest to smallest.
    pub reverse_classes: bool,
    /// Replace each fixed-lattice basis by a random unimodular recombination.
    pub perturb_seed: Option<u64>,
    /// Greedily drop permutation summands that are not needed for
    /// surjectivity on fixed points.
    pub reduce_rank: bool,
}

#[derive(Clone)]
pub struct FlabbyResolution {
    pub source: GLattice,
    /// `P = ⊕ ℤ[G/K]^{mult}`, one entry per subgroup class used.
    pub permutation_part: Vec<(PermGroup, usize)>,
    pub permutation_lattice: GLattice,
    pub flabby_part: GLattice,
    /// `rank(M) × rank(P)`; row `i` is the image of `e_i`.
    pub embedding: IntMat,
}

impl FlabbyResolution {
    pub fn p_rank(&self) -> usize {
        self.permutation_lattice.rank()
    }
}

/// One `ℤ[G/K]` summand of the cover and its images in `N`.
struct Summand {
    class: usize,
    /// Rows `x·ρ_N(g_c)` for the coset representatives `g_c`.
    images: IntMat,
}

pub fn flabby_resolution(m: &GLattice, budget: &Budget) -> Result<FlabbyResolution> {
    flabby_resolution_with(m, budget, &FlabbyOptions::default())
}

pub fn flabby_resolution_with(
    m: &GLattice,
    budget: &Budget,
    opts: &FlabbyOptions,
) -> Result<FlabbyResolution> {
    let g = m.group().clone();
    let r = m.rank();
    let n = m.dual();
    let mut classes = g.subgroup_class_reps(budget)?;
    if opts.reverse_classes {
        classes.reverse();
    }
    let mut rng = opts.perturb_seed.map(ChaCha8Rng::seed_from_u64);
    let coset_reps: Vec<Vec<crate::permgrp::Perm>> =
        classes.iter().map(|k| right_coset_labels(&g, k).0).collect();

    let mut summands: Vec<Summand> = Vec::new();
    for (ci, k) in classes.iter().enumerate() {
        let mut basis = n.fixed_sublattice(k);
        if let Some(rng) = rng.as_mut() {
            basis = perturb(&basis, rng);
        }
        for j in 0..basis.rows() {
            let x = basis.row(j);
            let rows = coset_reps[ci].iter().map(|c| n.act(x, c)).collect();
            summands.push(Summand {
                class: ci,
                images: IntMat::from_int_rows(rows, r),
            });
        }
    }

    if opts.reduce_rank {
        let fixed: Vec<IntMat> = classes.iter().map(|k| n.fixed_sublattice(k)).collect();
        let mut keep = vec![true; summands.len()];
        // Large coset spaces come first, so try dropping those first.
        for s in 0..summands.len() {
            keep[s] = false;
            let ok = classes.iter().enumerate().all(|(ki, k)| {
                fixed_images(&g, k, &classes, &summands, &keep, r) == fixed[ki]
            });
            if !ok {
                keep[s] = true;
            }
        }
        summands = summands
            .into_iter()
            .zip(keep)
            .filter_map(|(s, k)| k.then_some(s))
            .collect();
    }

    // Q and π.
    let perm_lats: Vec<GLattice> = classes
        .iter()
        .map(|k| permutation_lattice(&g, k))
        .collect::<Result<_>>()?;
    let mut multiplicity = vec![0usize; classes.len()];
    let mut pi = IntMat::zeros(0, r);
    let mut q: Option<GLattice> = None;
    for s in &summands {
        multiplicity[s.class] += 1;
        pi = pi.stack(&s.images);
        let lat = &perm_lats[s.class];
        q = Some(match q {
            None => lat.clone(),
            Some(acc) => acc.direct_sum(lat)?,
        });
    }
    let q = q.unwrap_or_else(|| GLattice::trivial(&g, 0));
    let p_rank = q.rank();

    // ker π as a G-lattice: B·ρ_Q(σ⁻¹) = A·B, and F = (ker π)° acts by Aᵀ.
    let kb = integer_kernel(&pi);
    let f_rank = kb.rows();
    let f_mats: Vec<IntMat> = if f_rank == 0 {
        g.generators().iter().map(|_| IntMat::zeros(0, 0)).collect()
    } else {
        let mut stacked = IntMat::zeros(0, p_rank);
        for s in g.generators() {
            stacked = stacked.stack(&kb.mul(&q.matrix(&s.inverse())));
        }
        let a = solve_left(&kb, &stacked).expect("ker π is G-stable");
        (0..g.generators().len())
            .map(|i| {
                let rows: Vec<usize> = (i * f_rank..(i + 1) * f_rank).collect();
                a.select_rows(&rows).transpose()
            })
            .collect()
    };
    let flabby = GLattice::new_unchecked(g.clone(), f_rank, f_mats);
    let permutation_part = classes
        .into_iter()
        .zip(multiplicity)
        .filter(|(_, c)| *c > 0)
        .collect();
    Ok(FlabbyResolution {
        source: m.clone(),
        permutation_part,
        permutation_lattice: q,
        flabby_part: flabby,
        embedding: if p_rank == 0 { IntMat::zeros(r, 0) } else { pi.transpose() },
    })
}

/// Lattice spanned by `π` of the `K`-orbit sums in the kept summands.
fn fixed_images(
    g: &PermGroup,
    k: &PermGroup,
    classes: &[PermGroup],
    summands: &[Summand],
    keep: &[bool],
    r: usize,
) -> IntMat {
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for (s, _) in summands.iter().zip(keep).filter(|(_, &k)| k) {
        let h = &classes[s.class];
        let (reps, label) = right_coset_labels(g, h);
        let mut seen = vec![false; reps.len()];
        for start in 0..reps.len() {
            if seen[start] {
                continue;
            }
            let mut sum = vec![Int::ZERO; r];
            for x in k.elements() {
                let c = label[g.index_of(&(&reps[start] * x)).unwrap()];
                if !seen[c] {
                    seen[c] = true;
                    for (a, b) in sum.iter_mut().zip(s.images.row(c)) {
                        *a += b;
                    }
                }
            }
            rows.push(sum);
        }
    }
    if rows.is_empty() {
        return IntMat::zeros(0, r);
    }
    hnf_basis(&IntMat::from_int_rows(rows, r))
}

/// `U·basis` for a random unimodular `U` built from elementary operations.
fn perturb(basis: &IntMat, rng: &mut ChaCha8Rng) -> IntMat {
    let n = basis.rows();
    let mut out = basis.clone();
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            out.negate_row(0);
        }
        return out;
    }
    for _ in 0..3 * n {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            let q = Int::from(rng.gen_range(-2i64..=2));
            out.add_row_multiple(a, b, &q);
        }
    }
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        out.swap_rows(i, j);
    }
    out
}

/// `H¹(K, F)` for the flabby part of a resolution of `M` (`K = G` by default).
///
/// The class `[M]^fl` is well defined up to permutation summands, which have
/// trivial `H¹`, so the answer does not depend on the resolution.
pub fn flabby_class_h1(
    m: &GLattice,
    k: Option<&PermGroup>,
    budget: &Budget,
) -> Result<AbInvariants> {
    let res = flabby_resolution(m, budget)?;
    let k = k.unwrap_or(m.group());
    Ok(h1_with(k, &res.flabby_part, H1Method::Saturation)?.invariants)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::is_flabby;
    use crate::glat::norm1_lattice;
    use crate::intlat::snf_diagonal;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_strings(n, gens).unwrap()
    }

    #[test]
    fn trivial_lattice_has_zero_flabby_part() {
        let s3 = grp(3, &["(1,2)", "(1,2,3)"]);
        let b = Budget::default();
        let res = flabby_resolution_with(
            &GLattice::trivial(&s3, 1),
            &b,
            &FlabbyOptions {
                reduce_rank: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(res.flabby_part.rank(), 0);
        assert_eq!(res.p_rank(), 1);
    }

    #[test]
    fn v4_norm_one_class() {
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let b = Budget::default();
        let j = norm1_lattice(&v4).unwrap();
        let res = flabby_resolution(&j, &b).unwrap();
        assert_eq!(res.p_rank(), j.rank() + res.flabby_part.rank());
        assert!(is_flabby(&res.flabby_part, &b).unwrap());
        assert!(snf_diagonal(&res.embedding).iter().all(Int::is_one));
        assert_eq!(flabby_class_h1(&j, None, &b).unwrap(), [2u64]);
    }

    #[test]
    fn s3_class_vanishes() {
        let s3 = grp(3, &["(1,2)", "(1,2,3)"]);
        let j = norm1_lattice(&s3).unwrap();
        assert!(flabby_class_h1(&j, None, &Budget::default()).unwrap().is_empty());
    }
}
