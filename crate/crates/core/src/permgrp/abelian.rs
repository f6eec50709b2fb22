//! Abelianization `G/[G,G]` in Smith coordinates.

use std::collections::VecDeque;

use super::{Perm, PermGroup};
use crate::intlat::{AbInvariants, AbelianQuotient, Int, IntMat};

/// `G^ab` with a discrete-log table over its cosets.
#[derive(Clone, Debug)]
pub struct FinAbStructure {
    group: PermGroup,
    derived: PermGroup,
    invariants: AbInvariants,
    generators: Vec<Perm>,
    /// Coset index of every element of the group.
    coset_of: Vec<usize>,
    /// Smith coordinates of every coset.
    coset_coords: Vec<Vec<Int>>,
}

impl FinAbStructure {
    pub fn new(g: &PermGroup) -> Self {
        let derived = g.derived_subgroup();
        let gens: Vec<usize> = g
            .generators()
            .iter()
            .map(|s| g.index_of(s).unwrap())
            .collect();
        let k = gens.len();
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut relations: Vec<Vec<Int>> = Vec::new();
        let mut n_cosets = 0;
        let mut add_coset = |rep: usize, coset_of: &mut Vec<usize>| -> usize {
            let c = n_cosets;
            n_cosets += 1;
            let r = g.element(rep);
            for d in derived.elements() {
                coset_of[g.index_of(&(d * r)).unwrap()] = c;
            }
            c
        };
        add_coset(0, &mut coset_of);
        let mut queue = VecDeque::from([0usize]);
        // Spanning tree of the quotient's Cayley graph; every other edge is a relation.
        let mut tree_reps = vec![0usize];
        let mut tree_exps = vec![vec![0i64; k]];
        while let Some(c) = queue.pop_front() {
            for (j, &s) in gens.iter().enumerate() {
                let y = g.mul_idx(tree_reps[c], s);
                let mut e = tree_exps[c].clone();
                e[j] += 1;
                if coset_of[y] == usize::MAX {
                    let nc = add_coset(y, &mut coset_of);
                    tree_reps.push(y);
                    tree_exps.push(e);
                    queue.push_back(nc);
                } else {
                    let other = &tree_exps[coset_of[y]];
                    let rel: Vec<Int> = e.iter().zip(other).map(|(a, b)| Int::from(a - b)).collect();
                    if rel.iter().any(|x| !x.is_zero()) {
                        relations.push(rel);
                    }
                }
            }
        }
        let q = AbelianQuotient::new(k, &IntMat::from_int_rows(relations, k));
        debug_assert_eq!(q.free_rank(), 0);
        let coset_coords: Vec<Vec<Int>> = tree_exps
            .iter()
            .map(|e| q.coords(&e.iter().map(|&x| Int::from(x)).collect::<Vec<_>>()))
            .collect();
        let generators = q
            .generators()
            .iter()
            .map(|v| {
                let mut acc = g.identity();
                for (s, e) in g.generators().iter().zip(v) {
                    let e = e.to_i64().expect("small exponent");
                    if e != 0 {
                        acc = &acc * &s.pow(e);
                    }
                }
                acc
            })
            .collect();
        FinAbStructure {
            group: g.clone(),
            derived,
            invariants: q.invariants().clone(),
            generators,
            coset_of,
            coset_coords,
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn derived(&self) -> &PermGroup {
        &self.derived
    }

    pub fn invariants(&self) -> &AbInvariants {
        &self.invariants
    }

    /// Lifts of the Smith generators.
    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Exponent vector of `g·[G,G]`.
    pub fn project(&self, g: &Perm) -> Vec<Int> {
        let i = self.group.index_of(g).expect("element of the group");
        self.coset_coords[self.coset_of[i]].clone()
    }

    /// Rows = projections of `elts`.
    pub fn project_all(&self, elts: &[Perm]) -> IntMat {
        let rows = elts.iter().map(|g| self.project(g)).collect();
        IntMat::from_int_rows(rows, self.invariants.len())
    }
}
