//! G-lattices: free ℤ-modules with a unimodular right action of a
//! permutation group.
//!
//! Vectors are rows and `ρ(g)` acts on the right, so row `i` of `ρ(g)` is the
//! image of `e_i` and `ρ(gh) = ρ(g)ρ(h)` with left-to-right products.

use std::collections::VecDeque;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::intlat::{integer_kernel, Int, IntMat};
use crate::permgrp::{Perm, PermGroup};

/// Exhaustive homomorphism checks and full element caches stay below this
/// many stored entries.
const CACHE_ENTRIES: usize = 10_000_000;

#[derive(Clone)]
pub struct GLattice {
    group: PermGroup,
    rank: usize,
    gen_mats: Vec<IntMat>,
    /// Breadth-first spanning tree of the Cayley graph: `(parent, generator)`.
    tree: Arc<OnceLock<Vec<(u32, u32)>>>,
    cache: Arc<OnceLock<Vec<IntMat>>>,
}

impl GLattice {
    /// Validates unimodularity and the homomorphism property.
    pub fn new(group: PermGroup, gen_mats: Vec<IntMat>) -> Result<Self> {
        let rank = Self::check_shapes(&group, &gen_mats)?;
        for m in &gen_mats {
            if !m.is_unimodular() {
                return Err(Error::Invalid("action matrix is not unimodular".into()));
            }
        }
        let lat = Self::new_unchecked(group, rank, gen_mats);
        lat.verify_homomorphism()?;
        Ok(lat)
    }

    pub(crate) fn new_unchecked(group: PermGroup, rank: usize, gen_mats: Vec<IntMat>) -> Self {
        GLattice {
            group,
            rank,
            gen_mats,
            tree: Arc::new(OnceLock::new()),
            cache: Arc::new(OnceLock::new()),
        }
    }

    fn check_shapes(group: &PermGroup, gen_mats: &[IntMat]) -> Result<usize> {
        if gen_mats.len() != group.generators().len() {
            return Err(Error::Invalid(format!(
                "{} matrices for {} generators",
                gen_mats.len(),
                group.generators().len()
            )));
        }
        let rank = gen_mats.first().map_or(0, |m| m.rows());
        for m in gen_mats {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::Dimension("action matrices must be square of equal size".into()));
            }
        }
        Ok(rank)
    }

    /// Builds the action from a function on generators.
    pub fn from_action(group: &PermGroup, rank: usize, f: impl Fn(&Perm) -> IntMat) -> Self {
        let mats = group.generators().iter().map(f).collect();
        Self::new_unchecked(group.clone(), rank, mats)
    }

    /// Rank-`r` lattice with trivial action.
    pub fn trivial(group: &PermGroup, rank: usize) -> Self {
        Self::from_action(group, rank, |_| IntMat::identity(rank))
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator_matrices(&self) -> &[IntMat] {
        &self.gen_mats
    }

    fn tree(&self) -> &[(u32, u32)] {
        self.tree.get_or_init(|| {
            let g = &self.group;
            let gens: Vec<usize> = g.generators().iter().map(|s| g.index_of(s).unwrap()).collect();
            let mut tree = vec![(u32::MAX, u32::MAX); g.order()];
            tree[0] = (0, u32::MAX);
            let mut queue = VecDeque::from([0usize]);
            while let Some(x) = queue.pop_front() {
                for (j, &s) in gens.iter().enumerate() {
                    let y = g.mul_idx(x, s);
                    if tree[y].0 == u32::MAX {
                        tree[y] = (x as u32, j as u32);
                        queue.push_back(y);
                    }
                }
            }
            tree
        })
    }

    fn use_cache(&self) -> bool {
        self.group.order().saturating_mul(self.rank * self.rank) <= CACHE_ENTRIES
    }

    /// Matrices of all elements, indexed like `group().elements()`.
    pub fn all_matrices(&self) -> &[IntMat] {
        self.cache.get_or_init(|| {
            let tree = self.tree();
            let g = &self.group;
            // BFS order guarantees parents come first.
            let mut order: Vec<usize> = (0..g.order()).collect();
            let depth = depths(tree);
            order.sort_by_key(|&i| depth[i]);
            let mut mats: Vec<Option<IntMat>> = vec![None; g.order()];
            mats[0] = Some(IntMat::identity(self.rank));
            for &i in &order[1..] {
                let (p, s) = tree[i];
                let m = mats[p as usize].as_ref().unwrap().mul(&self.gen_mats[s as usize]);
                mats[i] = Some(m);
            }
            mats.into_iter().map(Option::unwrap).collect()
        })
    }

    /// `ρ(g)`.
    pub fn matrix(&self, g: &Perm) -> IntMat {
        let i = self.group.index_of(g).expect("element of the lattice's group");
        self.matrix_idx(i)
    }

    pub fn matrix_idx(&self, i: usize) -> IntMat {
        if self.use_cache() {
            return self.all_matrices()[i].clone();
        }
        let tree = self.tree();
        let mut word = Vec::new();
        let mut x = i;
        while x != 0 {
            let (p, s) = tree[x];
            word.push(s as usize);
            x = p as usize;
        }
        let mut m = IntMat::identity(self.rank);
        for &s in word.iter().rev() {
            m = m.mul(&self.gen_mats[s]);
        }
        m
    }

    fn verify_homomorphism(&self) -> Result<()> {
        let g = &self.group;
        let n = g.order();
        let bad = || Error::Invalid("generator matrices do not define a representation".into());
        if self.use_cache() {
            let mats = self.all_matrices();
            let tree = self.tree();
            // Every Cayley edge outside the tree is a relation to check.
            for x in 0..n {
                for (j, s) in g.generators().iter().enumerate() {
                    let y = g.mul_idx(x, g.index_of(s).unwrap());
                    if tree[y] == (x as u32, j as u32) {
                        continue;
                    }
                    if mats[x].mul(&self.gen_mats[j]) != mats[y] {
                        return Err(bad());
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..32 {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let ab = g.mul_idx(a, b);
                if self.matrix_idx(a).mul(&self.matrix_idx(b)) != self.matrix_idx(ab) {
                    return Err(bad());
                }
            }
        }
        Ok(())
    }

    /// `ρ°(g) = (ρ(g)⁻¹)ᵀ`
    pub fn dual(&self) -> GLattice {
        let mats = self
            .gen_mats
            .iter()
            .map(|m| m.unimodular_inverse().expect("unimodular").transpose())
            .collect();
        Self::new_unchecked(self.group.clone(), self.rank, mats)
    }

    pub fn direct_sum(&self, other: &GLattice) -> Result<GLattice> {
        if self.group != other.group || self.group.generators() != other.group.generators() {
            return Err(Error::Invalid("direct sum of lattices over different groups".into()));
        }
        let mats = self
            .gen_mats
            .iter()
            .zip(&other.gen_mats)
            .map(|(a, b)| IntMat::block_diag(a, b))
            .collect();
        Ok(Self::new_unchecked(self.group.clone(), self.rank + other.rank, mats))
    }

    /// Same lattice viewed as a `K`-lattice.
    pub fn restrict(&self, k: &PermGroup) -> Result<GLattice> {
        if !k.is_subgroup_of(&self.group) {
            return Err(Error::Invalid("restriction to a non-subgroup".into()));
        }
        let mats = k.generators().iter().map(|s| self.matrix(s)).collect();
        Ok(Self::new_unchecked(k.clone(), self.rank, mats))
    }

    /// Canonical basis of `{v : v·ρ(k) = v for all k ∈ K}`.
    pub fn fixed_sublattice(&self, k: &PermGroup) -> IntMat {
        let mut stacked = IntMat::zeros(self.rank, 0);
        for s in k.generators() {
            let d = self.matrix(s).sub(&IntMat::identity(self.rank));
            stacked = stacked.concat_cols(&d);
        }
        if stacked.cols() == 0 {
            return IntMat::identity(self.rank);
        }
        integer_kernel(&stacked)
    }

    /// `v·ρ(g)`
    pub fn act(&self, v: &[Int], g: &Perm) -> Vec<Int> {
        IntMat::vec_mul(v, &self.matrix(g))
    }
}

fn depths(tree: &[(u32, u32)]) -> Vec<u32> {
    let mut d = vec![u32::MAX; tree.len()];
    d[0] = 0;
    fn depth(i: usize, tree: &[(u32, u32)], d: &mut Vec<u32>) -> u32 {
        if d[i] != u32::MAX {
            return d[i];
        }
        let v = depth(tree[i].0 as usize, tree, d) + 1;
        d[i] = v;
        v
    }
    for i in 0..tree.len() {
        depth(i, tree, &mut d);
    }
    d
}

/// `ℤ[G/H]` on the right cosets `H·g`, ordered by their minimal elements.
pub fn permutation_lattice(g: &PermGroup, h: &PermGroup) -> Result<GLattice> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Invalid("permutation lattice needs a subgroup".into()));
    }
    let (reps, label) = crate::permgrp::right_coset_labels(g, h);
    let m = reps.len();
    Ok(GLattice::from_action(g, m, |x| {
        let mut mat = IntMat::zeros(m, m);
        for (i, r) in reps.iter().enumerate() {
            let j = label[g.index_of(&(r * x)).unwrap()];
            mat[(i, j)] = Int::ONE;
        }
        mat
    }))
}

/// Lattice of a permutation action on points: `e_i ↦ e_{σ(i)}`.
pub fn point_lattice(g: &PermGroup) -> GLattice {
    let n = g.degree();
    GLattice::from_action(g, n, |s| {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, s.apply(i))] = Int::ONE;
        }
        m
    })
}

/// The Chevalley module `J_{G/H}` of a transitive group, in the basis
/// `ē₁, …, ē_{n−1}` of `ℤⁿ/ℤ·(1,…,1)` with `ē_n = −(ē₁ + … + ē_{n−1})`.
pub fn norm1_lattice(g: &PermGroup) -> Result<GLattice> {
    let n = g.degree();
    if n < 2 {
        return Err(Error::Invalid("norm-one lattice needs degree at least 2".into()));
    }
    if !g.is_transitive() {
        return Err(Error::Invalid("norm-one lattice needs a transitive group".into()));
    }
    Ok(GLattice::from_action(g, n - 1, |s| {
        let mut m = IntMat::zeros(n - 1, n - 1);
        for i in 0..n - 1 {
            let j = s.apply(i);
            if j < n - 1 {
                m[(i, j)] = Int::ONE;
            } else {
                for k in 0..n - 1 {
                    m[(i, k)] = Int::from(-1);
                }
            }
        }
        m
    }))
}
