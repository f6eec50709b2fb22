//! Finitely generated abelian quotients `ℤⁿ / L` in Smith coordinates.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{hnf_basis, integer_kernel, snf, snf_diagonal, solve_left, Int, IntMat};

/// Invariant factors `d₁ | d₂ | …`, each `> 1`; empty means trivial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbInvariants(pub Vec<u64>);

impl AbInvariants {
    pub fn trivial() -> Self {
        AbInvariants(Vec::new())
    }

    /// Filters ones and zeros out of an SNF diagonal.
    pub fn from_diagonal(diag: &[Int]) -> Self {
        let mut v: Vec<u64> = diag
            .iter()
            .filter(|d| !d.is_zero() && !d.abs().is_one())
            .map(|d| d.abs().to_i64().expect("invariant factor fits in 64 bits") as u64)
            .collect();
        v.sort_unstable();
        AbInvariants(v)
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn order(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Canonical invariants of an arbitrary direct sum `⊕ ℤ/a_i`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let d: Vec<Int> = orders.iter().map(|&x| Int::from(x)).collect();
        AbInvariants::from_diagonal(&snf_diagonal(&IntMat::diagonal(&d)))
    }

    pub fn ints(&self) -> Vec<Int> {
        self.0.iter().map(|&x| Int::from(x)).collect()
    }
}

impl From<Vec<u64>> for AbInvariants {
    fn from(v: Vec<u64>) -> Self {
        AbInvariants(v)
    }
}

impl PartialEq<[u64]> for AbInvariants {
    fn eq(&self, other: &[u64]) -> bool {
        self.0 == other
    }
}

impl PartialEq<&[u64]> for AbInvariants {
    fn eq(&self, other: &&[u64]) -> bool {
        self.0 == *other
    }
}

impl PartialEq<Vec<u64>> for AbInvariants {
    fn eq(&self, other: &Vec<u64>) -> bool {
        &self.0 == other
    }
}

impl<const N: usize> PartialEq<[u64; N]> for AbInvariants {
    fn eq(&self, other: &[u64; N]) -> bool {
        self.0 == other
    }
}

/// Prints `Z/2 x Z/4`, or `0` for the trivial group.
impl fmt::Display for AbInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// `ℤⁿ / rowspace(R)` with coordinates in the Smith basis.
#[derive(Clone, Debug)]
pub struct AbelianQuotient {
    ambient_rank: usize,
    invariants: AbInvariants,
    free_rank: usize,
    /// Column transform from the SNF; `v ↦ v·V`.
    v: IntMat,
    /// Indices of the nontrivial torsion coordinates, then the free ones.
    torsion_idx: Vec<usize>,
    free_idx: Vec<usize>,
    moduli: Vec<Int>,
}

impl AbelianQuotient {
    pub fn new(ambient_rank: usize, relations: &IntMat) -> Self {
        let rel = if relations.rows() == 0 {
            IntMat::zeros(0, ambient_rank)
        } else {
            assert_eq!(relations.cols(), ambient_rank, "relation width mismatch");
            relations.clone()
        };
        let d = snf(&rel);
        let diag = d.diagonal();
        let mut torsion_idx = Vec::new();
        let mut free_idx = Vec::new();
        let mut moduli = Vec::new();
        for i in 0..ambient_rank {
            let di = diag.get(i).cloned().unwrap_or(Int::ZERO);
            if di.is_zero() {
                free_idx.push(i);
            } else if !di.is_one() {
                torsion_idx.push(i);
                moduli.push(di);
            }
        }
        AbelianQuotient {
            ambient_rank,
            invariants: AbInvariants::from_diagonal(&diag),
            free_rank: free_idx.len(),
            v: d.v,
            torsion_idx,
            free_idx,
            moduli,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn invariants(&self) -> &AbInvariants {
        &self.invariants
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Torsion coordinates of the class of `v`, each reduced mod its factor.
    pub fn coords(&self, v: &[Int]) -> Vec<Int> {
        let w = IntMat::vec_mul(v, &self.v);
        self.torsion_idx
            .iter()
            .zip(&self.moduli)
            .map(|(&i, m)| w[i].rem_euclid(m))
            .collect()
    }

    /// Free coordinates of the class of `v`.
    pub fn free_coords(&self, v: &[Int]) -> Vec<Int> {
        let w = IntMat::vec_mul(v, &self.v);
        self.free_idx.iter().map(|&i| w[i].clone()).collect()
    }

    /// Lifts of the torsion generators (rows of `V⁻¹`).
    pub fn generators(&self) -> Vec<Vec<Int>> {
        let vinv = self.v.unimodular_inverse().expect("SNF transform is unimodular");
        self.torsion_idx.iter().map(|&i| vinv.row(i).to_vec()).collect()
    }
}

/// `quotientInvariants`: torsion invariants and free rank of `ℤⁿ / rowspace(R)`.
pub fn quotient_invariants(ambient_rank: usize, relations: &IntMat) -> (AbInvariants, usize) {
    let rel = if relations.rows() == 0 {
        IntMat::zeros(0, ambient_rank)
    } else {
        relations.clone()
    };
    let diag = snf_diagonal(&rel);
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    (AbInvariants::from_diagonal(&diag), ambient_rank - nonzero)
}

/// Coordinates in a finite abelian group already in Smith form: reduce each
/// entry modulo its invariant.
pub fn coords_in_quotient(ambient: &AbInvariants, v: &[Int]) -> Vec<Int> {
    ambient
        .0
        .iter()
        .zip(v)
        .map(|(&d, x)| x.rem_euclid(&Int::from(d)))
        .collect()
}

/// Helpers for subgroups of `A = ⊕ ℤ/s_i` given by generator rows.
pub mod fin_ab {
    use super::*;

    fn relation_rows(ambient: &AbInvariants) -> IntMat {
        IntMat::diagonal(&ambient.ints())
    }

    /// Canonical basis of the preimage lattice in `ℤᵏ` of `⟨gens⟩ ≤ A`.
    pub fn preimage_lattice(ambient: &AbInvariants, gens: &IntMat) -> IntMat {
        let k = ambient.len();
        let d = relation_rows(ambient);
        if gens.rows() == 0 {
            return hnf_basis(&d);
        }
        assert_eq!(gens.cols(), k, "generator width mismatch");
        hnf_basis(&gens.stack(&d))
    }

    /// Invariants of `⟨gens⟩ ≤ A`.
    pub fn subgroup_invariants(ambient: &AbInvariants, gens: &IntMat) -> AbInvariants {
        let k = ambient.len();
        if k == 0 {
            return AbInvariants::trivial();
        }
        let l = preimage_lattice(ambient, gens);
        let x = solve_left(&l, &relation_rows(ambient)).expect("relations lie in the preimage");
        quotient_invariants(l.rows(), &x).0
    }

    /// Canonical generator rows: the HNF of the preimage lattice, entries
    /// reduced modulo the ambient invariants, rows vanishing in `A` dropped.
    pub fn canonical_coords(ambient: &AbInvariants, gens: &IntMat) -> IntMat {
        let k = ambient.len();
        let l = preimage_lattice(ambient, gens);
        let rows: Vec<Vec<Int>> = (0..l.rows())
            .map(|i| coords_in_quotient(ambient, l.row(i)))
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        IntMat::from_int_rows(rows, k)
    }

    pub fn subgroup_eq(ambient: &AbInvariants, a: &IntMat, b: &IntMat) -> bool {
        preimage_lattice(ambient, a) == preimage_lattice(ambient, b)
    }

    /// `⟨a⟩ ≤ ⟨b⟩`
    pub fn subgroup_le(ambient: &AbInvariants, a: &IntMat, b: &IntMat) -> bool {
        let lb = preimage_lattice(ambient, b);
        super::super::lattice_contains(&lb, a)
    }

    /// Generators of `⟨a⟩ + ⟨b⟩`.
    pub fn join(a: &IntMat, b: &IntMat) -> IntMat {
        a.stack(b)
    }

    /// Kernel of the map `⊕ℤ/s_i → ⊕ℤ/t_j` given by `x ↦ x·M`, as generator
    /// rows in the source (canonical coords).
    pub fn kernel_of_map(source: &AbInvariants, target: &AbInvariants, m: &IntMat) -> IntMat {
        let k = source.len();
        if k == 0 {
            return IntMat::zeros(0, 0);
        }
        if target.is_empty() {
            return canonical_coords(source, &IntMat::identity(k));
        }
        assert_eq!((m.rows(), m.cols()), (k, target.len()), "map shape mismatch");
        let stacked = m.stack(&relation_rows(target));
        let ker = integer_kernel(&stacked);
        let first: Vec<usize> = (0..k).collect();
        canonical_coords(source, &ker.select_cols(&first))
    }

    /// Image of generator rows under `x ↦ x·M`, reduced in the target.
    pub fn image_of_map(target: &AbInvariants, gens: &IntMat, m: &IntMat) -> IntMat {
        if gens.rows() == 0 || target.is_empty() {
            return IntMat::zeros(0, target.len());
        }
        let img = gens.mul(m);
        let rows = (0..img.rows())
            .map(|i| coords_in_quotient(target, img.row(i)))
            .collect();
        IntMat::from_int_rows(rows, target.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_examples() {
        let r = IntMat::diagonal(&[2.into(), 2.into(), 2.into()]);
        assert_eq!(quotient_invariants(3, &r), (AbInvariants(vec![2, 2, 2]), 0));
        assert_eq!(quotient_invariants(2, &IntMat::identity(2)).0, AbInvariants::trivial());
        let r = IntMat::from_rows(&[[2, 0], [0, 6]]);
        assert_eq!(quotient_invariants(2, &r).0, [2u64, 6]);
        assert_eq!(quotient_invariants(3, &IntMat::from_rows(&[[2, 0, 0]])), (AbInvariants(vec![2]), 2));
    }

    #[test]
    fn coords_examples() {
        assert!(coords_in_quotient(&AbInvariants::trivial(), &[Int::from(5)]).is_empty());
        let inv = AbInvariants(vec![2, 2]);
        assert_eq!(coords_in_quotient(&inv, &[1.into(), 0.into()]), vec![Int::ONE, Int::ZERO]);
        let inv = AbInvariants(vec![4]);
        assert_eq!(coords_in_quotient(&inv, &[2.into()]), vec![Int::from(2)]);
    }

    #[test]
    fn quotient_coords_are_homomorphic() {
        let r = IntMat::from_rows(&[[2, 4], [6, 8]]);
        let q = AbelianQuotient::new(2, &r);
        assert_eq!(q.invariants(), &AbInvariants(vec![2, 4]));
        // Relations map to zero.
        for i in 0..2 {
            assert!(q.coords(r.row(i)).iter().all(Int::is_zero));
        }
        let gens = q.generators();
        for (j, g) in gens.iter().enumerate() {
            let c = q.coords(g);
            for (i, x) in c.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
            }
        }
    }

    #[test]
    fn subgroup_helpers() {
        let amb = AbInvariants(vec![4]);
        let g = IntMat::from_rows(&[[2]]);
        assert_eq!(fin_ab::subgroup_invariants(&amb, &g), [2u64]);
        assert_eq!(fin_ab::canonical_coords(&amb, &g), IntMat::from_rows(&[[2]]));
        let amb = AbInvariants(vec![2, 2, 2]);
        let g = IntMat::from_rows(&[[1, 0, 1], [0, 1, 1], [1, 1, 0]]);
        assert_eq!(fin_ab::subgroup_invariants(&amb, &g), [2u64, 2]);
        assert_eq!(
            fin_ab::canonical_coords(&amb, &g),
            IntMat::from_rows(&[[1, 0, 1], [0, 1, 1]])
        );
        // x ↦ 2x on Z/4 has kernel {0, 2}.
        let k = fin_ab::kernel_of_map(&AbInvariants(vec![4]), &AbInvariants(vec![4]), &IntMat::from_rows(&[[2]]));
        assert_eq!(k, IntMat::from_rows(&[[2]]));
    }
}
