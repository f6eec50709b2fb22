//! Torsion of the cokernel of a tall sparse integer map.
//!
//! `D: ℤᵏ → ℤᴺ` is given by its `N` sparse rows (row `i` holds the
//! coefficients of output coordinate `i`). Rows are folded into an echelon
//! basis one at a time; the row transform is kept only for rows that end up
//! as pivots, so memory is bounded by `rank · N` in the worst case and is
//! usually far smaller.

use std::collections::BTreeMap;

use super::{snf, AbInvariants, Int, IntMat};

pub type SparseRow = Vec<(usize, Int)>;

/// Sparse row vector keyed by original row index.
type Combo = BTreeMap<usize, Int>;

#[derive(Clone, Debug)]
pub struct CokernelWitness {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<SparseRow>,
    /// For each pivot, in column order: the combination of original rows.
    combos: Vec<Combo>,
    /// `U₂` from the Smith form of the pivot block.
    u2: IntMat,
    /// `V₂` from the Smith form of the pivot block.
    v2: IntMat,
    diag: Vec<Int>,
    /// Indices `j` with `s_j > 1`.
    torsion: Vec<usize>,
    invariants: AbInvariants,
}

impl CokernelWitness {
    pub fn new(n_cols: usize, rows: Vec<SparseRow>) -> Self {
        let n_rows = rows.len();
        // pivots[c] = (dense row, combo)
        let mut pivots: Vec<Option<(Vec<Int>, Combo)>> = vec![None; n_cols];
        for (i, sr) in rows.iter().enumerate() {
            if sr.iter().all(|(_, x)| x.is_zero()) {
                continue;
            }
            let mut row = vec![Int::ZERO; n_cols];
            for (c, x) in sr {
                row[*c] += x;
            }
            let mut combo: Option<Combo> = None;
            let mut c = 0;
            while c < n_cols {
                if row[c].is_zero() {
                    c += 1;
                    continue;
                }
                let slot = &mut pivots[c];
                let Some((prow, pcombo)) = slot.as_mut() else {
                    let cmb = combo.take().unwrap_or_else(|| single(i));
                    *slot = Some((row, cmb));
                    break;
                };
                let a = prow[c].clone();
                let b = row[c].clone();
                let cmb = combo.get_or_insert_with(|| single(i));
                if let Some(q) = b.div_exact(&a) {
                    let q = -q;
                    axpy(&mut row, &q, prow, c);
                    combo_axpy(cmb, &q, pcombo);
                } else {
                    let (g, x, y) = Int::ext_gcd(&a, &b);
                    let ag = a.div_exact(&g).unwrap();
                    let bg = b.div_exact(&g).unwrap();
                    for j in c..n_cols {
                        let pj = prow[j].clone();
                        let rj = row[j].clone();
                        prow[j] = &(&x * &pj) + &(&y * &rj);
                        row[j] = &(&ag * &rj) - &(&bg * &pj);
                    }
                    let new_p = combo_lin(&x, pcombo, &y, cmb);
                    let new_r = combo_lin(&-&bg, pcombo, &ag, cmb);
                    *pcombo = new_p;
                    *cmb = new_r;
                }
                c += 1;
            }
        }
        let mut e_rows = Vec::new();
        let mut combos = Vec::new();
        for (row, combo) in pivots.into_iter().flatten() {
            e_rows.push(row);
            combos.push(combo);
        }
        let e = IntMat::from_int_rows(e_rows, n_cols);
        let d = snf(&e);
        let diag = d.diagonal();
        let torsion: Vec<usize> = (0..diag.len())
            .filter(|&j| !diag[j].is_zero() && !diag[j].is_one())
            .collect();
        let invariants = AbInvariants::from_diagonal(&diag);
        CokernelWitness {
            n_rows,
            n_cols,
            rows,
            combos,
            u2: d.u,
            v2: d.v,
            diag,
            torsion,
            invariants,
        }
    }

    /// Invariant factors of the torsion subgroup of `ℤᴺ / im D`.
    pub fn invariants(&self) -> &AbInvariants {
        &self.invariants
    }

    pub fn rank(&self) -> usize {
        self.combos.len()
    }

    pub fn free_rank(&self) -> usize {
        self.n_rows - self.rank()
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    /// Coordinates of the class of `w` (which must be torsion modulo `im D`).
    pub fn coords(&self, w: &[Int]) -> Vec<Int> {
        assert_eq!(w.len(), self.n_rows, "vector length mismatch");
        let y: Vec<Int> = self
            .combos
            .iter()
            .map(|cmb| {
                let mut acc = Int::ZERO;
                for (&i, c) in cmb {
                    if !w[i].is_zero() {
                        acc.add_mul(c, &w[i]);
                    }
                }
                acc
            })
            .collect();
        self.torsion
            .iter()
            .map(|&j| {
                let mut acc = Int::ZERO;
                for (k, yk) in y.iter().enumerate() {
                    if !yk.is_zero() {
                        acc.add_mul(&self.u2[(j, k)], yk);
                    }
                }
                acc.rem_euclid(&self.diag[j])
            })
            .collect()
    }

    /// `D·x`
    pub fn apply(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(x.len(), self.n_cols, "vector length mismatch");
        self.rows
            .iter()
            .map(|sr| {
                let mut acc = Int::ZERO;
                for (c, a) in sr {
                    acc.add_mul(a, &x[*c]);
                }
                acc
            })
            .collect()
    }

    /// One representative per Smith generator: `D·(V₂ e_j) / s_j`.
    pub fn representatives(&self) -> Vec<Vec<Int>> {
        self.torsion
            .iter()
            .map(|&j| {
                let x = self.v2.column(j);
                self.apply(&x)
                    .iter()
                    .map(|v| v.div_exact(&self.diag[j]).expect("exact representative"))
                    .collect()
            })
            .collect()
    }
}

fn single(i: usize) -> Combo {
    let mut m = BTreeMap::new();
    m.insert(i, Int::ONE);
    m
}

fn axpy(row: &mut [Int], q: &Int, piv: &[Int], from: usize) {
    for j in from..row.len() {
        if !piv[j].is_zero() {
            row[j].add_mul(q, &piv[j]);
        }
    }
}

fn combo_axpy(dst: &mut Combo, q: &Int, src: &Combo) {
    for (&i, c) in src {
        let e = dst.entry(i).or_insert(Int::ZERO);
        e.add_mul(q, c);
        if e.is_zero() {
            dst.remove(&i);
        }
    }
}

fn combo_lin(a: &Int, x: &Combo, b: &Int, y: &Combo) -> Combo {
    let mut out = Combo::new();
    if !a.is_zero() {
        combo_axpy(&mut out, a, x);
    }
    if !b.is_zero() {
        combo_axpy(&mut out, b, y);
    }
    out
}
