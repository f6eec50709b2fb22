//! Derived series pieces, Sylow subgroups and the full subgroup lattice.

use std::collections::HashMap;

use super::group::small_generating_set;
use super::{commutator, Perm, PermGroup};
use crate::budget::Budget;
use crate::error::{Error, Result};

impl PermGroup {
    /// `[G, G]`, the normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = self.generators();
        let mut seeds = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = commutator(a, b);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(seeds)
    }

    /// Smallest normal subgroup containing `elts`.
    pub fn normal_closure(&self, elts: Vec<Perm>) -> PermGroup {
        let mut k = PermGroup::new(self.degree(), elts).expect("subgroup of a materialized group");
        loop {
            let mut extra = None;
            'search: for h in k.generators() {
                for x in self.generators() {
                    let c = h.conj(x);
                    if !k.contains(&c) {
                        extra = Some(c);
                        break 'search;
                    }
                }
            }
            match extra {
                None => return k,
                Some(c) => {
                    let mut gens = k.generators().to_vec();
                    gens.push(c);
                    k = PermGroup::new(self.degree(), gens).expect("subgroup");
                }
            }
        }
    }

    pub fn center(&self) -> PermGroup {
        let gens = self.generators().to_vec();
        self.filter_subgroup(|g| gens.iter().all(|s| g * s == s * g))
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// A Sylow `p`-subgroup, grown one factor of `p` at a time inside
    /// normalizers; choices are the smallest eligible elements.
    pub fn sylow(&self, p: u64) -> PermGroup {
        let mut target = 1usize;
        let mut n = self.order();
        while n.is_multiple_of(p as usize) {
            n /= p as usize;
            target *= p as usize;
        }
        let mut sub = PermGroup::trivial(self.degree());
        while sub.order() < target {
            let norm = sub.normalizer_in(self);
            let g = norm
                .elements()
                .iter()
                .find(|g| !sub.contains(g) && sub.contains(&g.pow(p as i64)))
                .expect("a p-subgroup below Sylow order has a p-step in its normalizer")
                .clone();
            sub = sub.join(&PermGroup::new(self.degree(), vec![g]).unwrap()).unwrap();
        }
        sub
    }

    /// Every Sylow subgroup cyclic.
    pub fn is_metacyclic(&self) -> bool {
        if self.order() == 1 {
            return true;
        }
        prime_factors(self.order() as u64)
            .into_iter()
            .all(|p| self.sylow(p).is_cyclic())
    }

    /// All subgroups, sorted by order and then by element list.
    pub fn all_subgroups(&self, budget: &Budget) -> Result<Vec<PermGroup>> {
        Ok(self.subgroup_lattice(budget)?.subgroups)
    }

    /// One representative per conjugacy class, in class order.
    pub fn subgroup_class_reps(&self, budget: &Budget) -> Result<Vec<PermGroup>> {
        let lat = self.subgroup_lattice(budget)?;
        Ok(lat.class_reps().cloned().collect())
    }

    pub fn subgroup_lattice(&self, budget: &Budget) -> Result<SubgroupLattice> {
        if self.order() > budget.max_subgroup_order {
            return Err(Error::Budget {
                what: format!("subgroup enumeration for a group of order {}", self.order()),
                budget: "max_subgroup_order",
                needed: self.order() as u128,
                limit: budget.max_subgroup_order as u128,
            });
        }
        Ok(SubgroupLattice::build(self))
    }
}

/// Subgroups of a group together with their conjugacy classes.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub subgroups: Vec<PermGroup>,
    /// Class index of each subgroup.
    pub class_of: Vec<usize>,
    /// Member indices of each class; the first member is the representative.
    pub classes: Vec<Vec<usize>>,
}

impl SubgroupLattice {
    pub fn class_reps(&self) -> impl Iterator<Item = &PermGroup> {
        self.classes.iter().map(|c| &self.subgroups[c[0]])
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Index of a subgroup of the parent in `subgroups`.
    pub fn position(&self, h: &PermGroup) -> Option<usize> {
        self.subgroups
            .binary_search_by(|s| {
                s.order()
                    .cmp(&h.order())
                    .then_with(|| s.elements().cmp(h.elements()))
            })
            .ok()
    }

    fn build(g: &PermGroup) -> Self {
        let n = g.order();
        let words = n.div_ceil(64);
        let gen_idx: Vec<usize> = g
            .generators()
            .iter()
            .map(|s| g.index_of(s).unwrap())
            .collect();

        struct Sub {
            bits: Vec<u64>,
            gens: Vec<usize>,
        }
        let members = |bits: &[u64]| -> Vec<usize> {
            let mut v = Vec::new();
            for (w, &word) in bits.iter().enumerate() {
                let mut x = word;
                while x != 0 {
                    let b = x.trailing_zeros() as usize;
                    v.push(w * 64 + b);
                    x &= x - 1;
                }
            }
            v
        };
        let has = |bits: &[u64], i: usize| bits[i / 64] >> (i % 64) & 1 == 1;

        // Right-coset closure of ⟨H, x⟩ from the elements of H.
        let join = |h: &Sub, x: usize| -> Sub {
            let h_elems = members(&h.bits);
            let mut gens = h.gens.clone();
            gens.push(x);
            let mut bits = h.bits.clone();
            let mut reps = vec![0usize];
            let mut i = 0;
            while i < reps.len() {
                let r = reps[i];
                for &s in &gens {
                    let y = g.mul_idx(r, s);
                    if !has(&bits, y) {
                        for &e in &h_elems {
                            let z = g.mul_idx(e, y);
                            bits[z / 64] |= 1 << (z % 64);
                        }
                        reps.push(y);
                    }
                }
                i += 1;
            }
            Sub { bits, gens }
        };

        let mut trivial = vec![0u64; words];
        trivial[0] = 1;
        let mut subs = vec![Sub {
            bits: trivial.clone(),
            gens: vec![],
        }];
        let mut seen: HashMap<Vec<u64>, usize> = HashMap::from([(trivial, 0)]);

        // Seeds: cyclic subgroups of prime-power order.
        let mut seeds: Vec<usize> = Vec::new();
        for x in 1..n {
            let ord = g.element(x).order();
            if prime_factors(ord).len() != 1 {
                continue;
            }
            let c = join(&subs[0], x);
            if !seen.contains_key(&c.bits) {
                seen.insert(c.bits.clone(), subs.len());
                subs.push(c);
                seeds.push(x);
            }
        }
        let mut i = 1;
        while i < subs.len() {
            for &x in &seeds {
                if has(&subs[i].bits, x) {
                    continue;
                }
                let j = join(&subs[i], x);
                if !seen.contains_key(&j.bits) {
                    seen.insert(j.bits.clone(), subs.len());
                    subs.push(j);
                }
            }
            i += 1;
        }

        // Sort by (order, element list).
        let lists: Vec<Vec<usize>> = subs.iter().map(|s| members(&s.bits)).collect();
        let mut order: Vec<usize> = (0..subs.len()).collect();
        order.sort_by(|&a, &b| {
            lists[a]
                .len()
                .cmp(&lists[b].len())
                .then_with(|| lists[a].cmp(&lists[b]))
        });
        let subgroups: Vec<PermGroup> = order
            .iter()
            .map(|&o| {
                let elements: Vec<Perm> = lists[o].iter().map(|&e| g.element(e).clone()).collect();
                let gens: Vec<Perm> = subs[o].gens.iter().map(|&e| g.element(e).clone()).collect();
                let gens = if gens.len() > 4 {
                    small_generating_set(&elements)
                } else {
                    gens
                };
                PermGroup::from_sorted(g.degree(), gens, elements)
            })
            .collect();
        let sorted_bits: Vec<&Vec<u64>> = order.iter().map(|&o| &subs[o].bits).collect();
        let index: HashMap<&Vec<u64>, usize> =
            sorted_bits.iter().enumerate().map(|(i, b)| (*b, i)).collect();

        // Conjugation maps x ↦ s⁻¹ x s for each generator s.
        let conj_maps: Vec<Vec<usize>> = gen_idx
            .iter()
            .map(|&s| {
                let si = g.inv_idx(s);
                (0..n).map(|x| g.mul_idx(g.mul_idx(si, x), s)).collect()
            })
            .collect();
        let m = subgroups.len();
        let mut class_of = vec![usize::MAX; m];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..m {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut orbit = vec![start];
            class_of[start] = cid;
            let mut k = 0;
            while k < orbit.len() {
                let cur = members(sorted_bits[orbit[k]]);
                for cm in &conj_maps {
                    let mut bits = vec![0u64; words];
                    for &x in &cur {
                        let y = cm[x];
                        bits[y / 64] |= 1 << (y % 64);
                    }
                    let j = index[&bits];
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        orbit.push(j);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        SubgroupLattice {
            subgroups,
            class_of,
            classes,
        }
    }
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
