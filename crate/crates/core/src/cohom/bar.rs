//! The normalized bar complex in low degrees.
//!
//! Cochains vanish on tuples containing the identity, so `Cⁿ(K, M)` has
//! coordinates indexed by `(g₁, …, gₙ)` with every `gᵢ ≠ 1`, times the rank
//! of `M`. The differential uses the left action `g·m = m·ρ(g⁻¹)`.
//!
//! `Hⁿ` is finite for `n ≥ 1`, so it equals the torsion subgroup of
//! `Cⁿ / im dⁿ⁻¹`; this avoids ever forming `dⁿ`.

use super::CohomologyGroup;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::glat::GLattice;
use crate::intlat::{
    fin_ab, lattice_intersection, AbInvariants, CokernelWitness, Int, IntMat, SparseRow,
};
use crate::permgrp::{Perm, PermGroup};

/// `Hⁿ(K, M)` together with the data needed to map cocycles into it.
#[derive(Clone, Debug)]
pub struct BarCohomology {
    group: PermGroup,
    rank: usize,
    degree: usize,
    witness: CokernelWitness,
}

impl BarCohomology {
    pub fn invariants(&self) -> &AbInvariants {
        self.witness.invariants()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Cocycles representing the Smith generators.
    pub fn representatives(&self) -> Vec<Vec<Int>> {
        self.witness.representatives()
    }

    /// Smith coordinates of the class of an n-cocycle.
    pub fn coords(&self, cocycle: &[Int]) -> Vec<Int> {
        self.witness.coords(cocycle)
    }

    /// Restricts an n-cochain to a subgroup `K` of this group.
    pub fn restrict_cochain(&self, cochain: &[Int], k: &PermGroup) -> Vec<Int> {
        restrict_cochain(&self.group, k, self.degree, self.rank, cochain)
    }

    pub fn to_group(&self) -> CohomologyGroup {
        CohomologyGroup::new(
            self.invariants().clone(),
            format!("normalized bar {}-cochains", self.degree),
            self.witness.n_rows(),
        )
        .with_representatives(self.representatives())
    }
}

/// Restricts a normalized n-cochain on `g` with values in a rank-`r`
/// lattice to the subgroup `k`.
pub fn restrict_cochain(g: &PermGroup, k: &PermGroup, n: usize, r: usize, cochain: &[Int]) -> Vec<Int> {
    let mg = g.order() - 1;
    let mk = k.order() - 1;
    let to_g: Vec<usize> = k.elements()[1..]
        .iter()
        .map(|x| g.index_of(x).expect("subgroup element") - 1)
        .collect();
    let count = mk.pow(n as u32);
    let mut out = Vec::with_capacity(count * r);
    for t in 0..count {
        let digits = decode(t, mk, n);
        let gt = digits.iter().fold(0usize, |acc, &d| acc * mg + to_g[d]);
        out.extend_from_slice(&cochain[gt * r..(gt + 1) * r]);
    }
    out
}

/// `d f` for a normalized n-cochain `f` on `K = m.group()`:
/// `(df)(g₀..gₙ) = g₀·f(g₁..gₙ) + Σ (−1)^{i+1} f(..gᵢgᵢ₊₁..) + (−1)^{n+1} f(g₀..gₙ₋₁)`.
pub fn coboundary(m: &GLattice, n: usize, f: &[Int]) -> Vec<Int> {
    let k = m.group();
    let r = m.rank();
    let nm = k.order() - 1;
    let index = |elts: &[usize]| elts.iter().fold(0usize, |acc, &e| acc * nm + (e - 1));
    let value = |elts: &[usize]| -> Vec<Int> {
        if n == 0 {
            return f[..r].to_vec();
        }
        let i = index(elts);
        f[i * r..(i + 1) * r].to_vec()
    };
    let count = nm.pow(n as u32 + 1);
    let mut out = vec![Int::ZERO; count * r];
    for t in 0..count {
        let g: Vec<usize> = decode(t, nm, n + 1).into_iter().map(|d| d + 1).collect();
        let mut acc = IntMat::vec_mul(&value(&g[1..]), &m.matrix_idx(k.inv_idx(g[0])));
        for i in 0..n {
            let p = k.mul_idx(g[i], g[i + 1]);
            if p == 0 {
                continue;
            }
            let mut tup = g[..i].to_vec();
            tup.push(p);
            tup.extend_from_slice(&g[i + 2..]);
            let v = value(&tup);
            for (a, b) in acc.iter_mut().zip(&v) {
                if i % 2 == 0 {
                    *a -= b;
                } else {
                    *a += b;
                }
            }
        }
        let v = value(&g[..n]);
        for (a, b) in acc.iter_mut().zip(&v) {
            if n.is_multiple_of(2) {
                *a -= b;
            } else {
                *a += b;
            }
        }
        out[t * r..(t + 1) * r].clone_from_slice(&acc);
    }
    out
}

/// Base-`m` digits of `t`, most significant first.
fn decode(mut t: usize, m: usize, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for i in (0..n).rev() {
        d[i] = t % m;
        t /= m;
    }
    d
}

fn restricted(k: &PermGroup, m: &GLattice) -> Result<GLattice> {
    if k == m.group() && k.generators() == m.group().generators() {
        Ok(m.clone())
    } else {
        m.restrict(k)
    }
}

/// `Hⁿ(K, M)` from the normalized bar complex, with no size check.
pub fn bar_cohomology(k: &PermGroup, m: &GLattice, n: usize) -> Result<BarCohomology> {
    if n == 0 {
        return Err(Error::Invalid("bar cohomology is implemented in degrees ≥ 1".into()));
    }
    let mk = restricted(k, m)?;
    let r = mk.rank();
    let nm = k.order() - 1;
    let mats = mk.all_matrices();
    // Left action matrices ρ(g⁻¹).
    let left: Vec<&IntMat> = (0..k.order()).map(|i| &mats[k.inv_idx(i)]).collect();
    let n_src = nm.pow(n as u32 - 1);
    let n_tgt = nm.pow(n as u32);
    let index = |elts: &[usize]| elts.iter().fold(0usize, |acc, &e| acc * nm + (e - 1));
    let mut rows: Vec<SparseRow> = Vec::with_capacity(n_tgt * r);
    for t in 0..n_tgt {
        let g: Vec<usize> = decode(t, nm, n).into_iter().map(|d| d + 1).collect();
        let first = index(&g[1..]);
        let last = index(&g[..n - 1]);
        let mut merged: Vec<(usize, Int)> = Vec::new();
        for i in 0..n - 1 {
            let p = k.mul_idx(g[i], g[i + 1]);
            if p == 0 {
                continue;
            }
            let mut tup = g[..i].to_vec();
            tup.push(p);
            tup.extend_from_slice(&g[i + 2..]);
            let sign = if (i + 1) % 2 == 0 { Int::ONE } else { Int::from(-1) };
            merged.push((index(&tup), sign));
        }
        let last_sign = if n.is_multiple_of(2) { Int::ONE } else { Int::from(-1) };
        for c in 0..r {
            let mut row: SparseRow = Vec::new();
            for kk in 0..r {
                let v = &left[g[0]][(kk, c)];
                if !v.is_zero() {
                    row.push((first * r + kk, v.clone()));
                }
            }
            for (tup, sign) in &merged {
                row.push((tup * r + c, sign.clone()));
            }
            row.push((last * r + c, last_sign.clone()));
            rows.push(row);
        }
    }
    let witness = CokernelWitness::new(n_src * r, rows);
    Ok(BarCohomology {
        group: k.clone(),
        rank: r,
        degree: n,
        witness,
    })
}

fn h2_budget(k: &PermGroup, m: &GLattice, budget: &Budget) -> Result<()> {
    let nm = (k.order() - 1) as u128;
    Budget::check(
        &format!("H² over a group of order {} with rank {}", k.order(), m.rank()),
        "h2_unknowns",
        nm * nm * m.rank() as u128,
        budget.h2_unknowns,
    )
}

fn hn_budget(g: &PermGroup, n: usize, budget: &Budget) -> Result<()> {
    let nm = (g.order() - 1) as u128;
    Budget::check(
        &format!("H^{n}(G, Z) for a group of order {}", g.order()),
        "hn_cochains",
        nm.pow(n as u32 + 1),
        budget.hn_cochains,
    )
}

/// `H²(K, M)`.
pub fn h2(k: &PermGroup, m: &GLattice, budget: &Budget) -> Result<CohomologyGroup> {
    h2_budget(k, m, budget)?;
    Ok(bar_cohomology(k, m, 2)?.to_group())
}

/// Distinct nontrivial cyclic subgroups.
fn cyclic_subgroups(g: &PermGroup) -> Vec<PermGroup> {
    let mut seen: Vec<Vec<Perm>> = Vec::new();
    let mut out = Vec::new();
    for x in &g.elements()[1..] {
        let c = PermGroup::new(g.degree(), vec![x.clone()]).expect("cyclic");
        if !seen.iter().any(|s| s.as_slice() == c.elements()) {
            seen.push(c.elements().to_vec());
            out.push(c);
        }
    }
    out
}

/// Kernel of restriction `Hⁿ(G) → ⊕ Hⁿ(Kᵢ)` as a preimage lattice in the
/// Smith coordinates of `Hⁿ(G)`.
fn restriction_kernels(
    top: &BarCohomology,
    subs: &[(PermGroup, BarCohomology)],
) -> Vec<IntMat> {
    let source = top.invariants().clone();
    let reps = top.representatives();
    subs.iter()
        .map(|(k, hk)| {
            let target = hk.invariants().clone();
            let rows: Vec<Vec<Int>> = reps
                .iter()
                .map(|z| hk.coords(&top.restrict_cochain(z, k)))
                .collect();
            let map = IntMat::from_int_rows(rows, target.len());
            let ker = fin_ab::kernel_of_map(&source, &target, &map);
            fin_ab::preimage_lattice(&source, &ker)
        })
        .collect()
}

fn kernel_group(top: &BarCohomology, lattices: Vec<IntMat>, ambient: &str) -> Result<CohomologyGroup> {
    let source = top.invariants().clone();
    let mut acc = IntMat::identity(source.len());
    for l in lattices {
        acc = lattice_intersection(&acc, &l)?;
    }
    let inv = fin_ab::subgroup_invariants(&source, &acc);
    let gens = fin_ab::canonical_coords(&source, &acc);
    let reps = top.representatives();
    let dim = reps.first().map_or(0, Vec::len);
    let combos = (0..gens.rows())
        .map(|i| {
            let mut v = vec![Int::ZERO; dim];
            for (c, z) in gens.row(i).iter().zip(&reps) {
                if !c.is_zero() {
                    for (a, b) in v.iter_mut().zip(z) {
                        a.add_mul(c, b);
                    }
                }
            }
            v
        })
        .collect();
    Ok(CohomologyGroup::new(inv, ambient, dim).with_representatives(combos))
}

/// `Ш²_ω(G, M)`: classes in `H²(G, M)` restricting to zero on every cyclic
/// subgroup.
pub fn sha2omega(g: &PermGroup, m: &GLattice, budget: &Budget) -> Result<CohomologyGroup> {
    h2_budget(g, m, budget)?;
    let top = bar_cohomology(g, m, 2)?;
    if top.invariants().is_trivial() {
        return Ok(top.to_group());
    }
    let subs = cyclic_subgroups(g)
        .into_iter()
        .map(|c| {
            let hc = bar_cohomology(&c, m, 2)?;
            Ok((c, hc))
        })
        .collect::<Result<Vec<_>>>()?;
    let lats = restriction_kernels(&top, &subs);
    kernel_group(&top, lats, "normalized bar 2-cochains")
}

fn check_degree(n: usize) -> Result<()> {
    if (1..=3).contains(&n) {
        Ok(())
    } else {
        Err(Error::Invalid(format!("H^{n}(G, Z) is available for n = 1, 2, 3")))
    }
}

/// `Hⁿ(G, ℤ)` with trivial action, `n ∈ {1, 2, 3}`.
pub fn hn_trivial_z(g: &PermGroup, n: usize, budget: &Budget) -> Result<CohomologyGroup> {
    check_degree(n)?;
    hn_budget(g, n, budget)?;
    let z = GLattice::trivial(g, 1);
    Ok(bar_cohomology(g, &z, n)?.to_group())
}

/// `⋂ᵢ ker(Hⁿ(G, ℤ) → Hⁿ(Gᵢ, ℤ))` for the given subgroups.
pub fn res_kernel_hn_z(
    g: &PermGroup,
    subgroups: &[PermGroup],
    n: usize,
    budget: &Budget,
) -> Result<CohomologyGroup> {
    check_degree(n)?;
    hn_budget(g, n, budget)?;
    let z = GLattice::trivial(g, 1);
    let top = bar_cohomology(g, &z, n)?;
    let subs = subgroups
        .iter()
        .map(|k| {
            if !k.is_subgroup_of(g) {
                return Err(Error::Invalid("restriction to a non-subgroup".into()));
            }
            hn_budget(k, n, budget)?;
            Ok((k.clone(), bar_cohomology(k, &z, n)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let lats = restriction_kernels(&top, &subs);
    kernel_group(&top, lats, format!("normalized bar {n}-cochains").as_str())
}
