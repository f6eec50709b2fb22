//! Smith and Hermite normal forms.

use serde::{Deserialize, Serialize};

use super::{Int, IntMat};

/// `U·A·V = S` with `S` diagonal and `d₁ | d₂ | …`, zeros trailing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfDecomposition {
    pub s: IntMat,
    pub u: IntMat,
    pub v: IntMat,
}

impl SnfDecomposition {
    /// The diagonal of `S` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<Int> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with transformation matrices.
pub fn snf(a: &IntMat) -> SnfDecomposition {
    let mut s = a.clone();
    let mut u = Some(IntMat::identity(a.rows()));
    let mut v = Some(IntMat::identity(a.cols()));
    smith_in_place(&mut s, &mut u, &mut v);
    SnfDecomposition {
        s,
        u: u.unwrap(),
        v: v.unwrap(),
    }
}

/// Diagonal of the Smith form only; skips the transforms.
pub fn snf_diagonal(a: &IntMat) -> Vec<Int> {
    let mut s = a.clone();
    smith_in_place(&mut s, &mut None, &mut None);
    let k = s.rows().min(s.cols());
    (0..k).map(|i| s[(i, i)].clone()).collect()
}

/// Smallest nonzero entry by absolute value in the block `[t.., t..]`.
fn min_pivot(s: &IntMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = &s[(i, j)];
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => x.cmp_abs(&s[b]).is_lt(),
            };
            if better {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn smith_in_place(s: &mut IntMat, u: &mut Option<IntMat>, v: &mut Option<IntMat>) {
    let (m, n) = (s.rows(), s.cols());
    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_pivot(s, t) else {
                return;
            };
            s.swap_rows(t, pi);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            s.swap_cols(t, pj);
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, pj);
            }
            if s[(t, t)].is_negative() {
                s.negate_row(t);
                if let Some(u) = u.as_mut() {
                    u.negate_row(t);
                }
            }
            let p = s[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&p);
                s.add_row_multiple(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(i, t, &q);
                }
                dirty |= !s[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&p);
                s.add_col_multiple(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.add_col_multiple(j, t, &q);
                }
                dirty |= !s[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // Pivot row and column are clear; enforce divisibility of the rest.
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !p.divides(&s[(i, j)])));
            match bad {
                Some(i) => {
                    s.add_row_multiple(t, i, &Int::ONE);
                    if let Some(u) = u.as_mut() {
                        u.add_row_multiple(t, i, &Int::ONE);
                    }
                }
                None => break,
            }
        }
    }
}

/// Row Hermite normal form: `U·A = [H; 0]`, `U` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    /// Nonzero rows of the echelon form.
    pub h: IntMat,
    /// Full square transform; rows `rank..` span the left kernel of `A`.
    pub u: IntMat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Row-style HNF: positive pivots, entries above a pivot reduced into
/// `[0, pivot)`, zero rows dropped from `h`.
pub fn hnf(a: &IntMat) -> HermiteForm {
    let mut h = a.clone();
    let mut u = Some(IntMat::identity(a.rows()));
    let (rank, pivots) = hermite_in_place(&mut h, &mut u);
    let rows: Vec<usize> = (0..rank).collect();
    HermiteForm {
        h: h.select_rows(&rows),
        u: u.unwrap(),
        rank,
        pivots,
    }
}

/// Canonical basis of the row lattice; no transform.
pub fn hnf_basis(a: &IntMat) -> IntMat {
    let mut h = a.clone();
    let (rank, _) = hermite_in_place(&mut h, &mut None);
    let rows: Vec<usize> = (0..rank).collect();
    h.select_rows(&rows)
}

fn hermite_in_place(h: &mut IntMat, u: &mut Option<IntMat>) -> (usize, Vec<usize>) {
    let (m, n) = (h.rows(), h.cols());
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        if r == m {
            break;
        }
        // Euclid on column c among rows r.., always pivoting on the smallest entry.
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                if !h[(i, c)].is_zero()
                    && best.is_none_or(|b| h[(i, c)].cmp_abs(&h[(b, c)]).is_lt())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            if let Some(u) = u.as_mut() {
                u.swap_rows(r, b);
            }
            let p = h[(r, c)].clone();
            let mut done = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&p);
                h.add_row_multiple(i, r, &q);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(i, r, &q);
                }
                done &= h[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            if let Some(u) = u.as_mut() {
                u.negate_row(r);
            }
        }
        let p = h[(r, c)].clone();
        for i in 0..r {
            if h[(i, c)].is_zero() {
                continue;
            }
            let q = -h[(i, c)].div_floor(&p);
            h.add_row_multiple(i, r, &q);
            if let Some(u) = u.as_mut() {
                u.add_row_multiple(i, r, &q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, pivots)
}

/// Echelon basis grown one row at a time, without transforms.
///
/// Used when a lattice is given by many generators of modest width: rows are
/// reduced on arrival so memory stays at one row per pivot.
#[derive(Clone, Debug)]
pub struct HnfBuilder {
    cols: usize,
    /// `rows[c]` is the basis row with pivot in column `c`.
    rows: Vec<Option<Vec<Int>>>,
}

impl HnfBuilder {
    pub fn new(cols: usize) -> Self {
        HnfBuilder {
            cols,
            rows: vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.iter().filter(|r| r.is_some()).count()
    }

    /// Adds a generator; returns `true` if the lattice grew.
    pub fn insert(&mut self, row: &[Int]) -> bool {
        assert_eq!(row.len(), self.cols, "row width mismatch");
        let mut row = row.to_vec();
        let mut grew = false;
        for c in 0..self.cols {
            if row[c].is_zero() {
                continue;
            }
            match self.rows[c].take() {
                None => {
                    if row[c].is_negative() {
                        for x in row.iter_mut() {
                            *x = -&*x;
                        }
                    }
                    self.reduce_tail(&mut row, c);
                    self.rows[c] = Some(row);
                    return true;
                }
                Some(mut piv) => {
                    let a = piv[c].clone();
                    let b = row[c].clone();
                    if a.divides(&b) {
                        let q = -b.div_exact(&a).unwrap();
                        axpy(&mut row, &q, &piv, c);
                    } else {
                        let (g, x, y) = Int::ext_gcd(&a, &b);
                        let ag = a.div_exact(&g).unwrap();
                        let bg = b.div_exact(&g).unwrap();
                        let mut new_piv = vec![Int::ZERO; self.cols];
                        let mut new_row = vec![Int::ZERO; self.cols];
                        for j in c..self.cols {
                            new_piv[j] = &(&x * &piv[j]) + &(&y * &row[j]);
                            new_row[j] = &(&ag * &row[j]) - &(&bg * &piv[j]);
                        }
                        piv = new_piv;
                        row = new_row;
                        grew = true;
                        self.reduce_tail(&mut piv, c);
                    }
                    self.rows[c] = Some(piv);
                }
            }
        }
        grew
    }

    /// Reduces entries right of column `c` into `[0, pivot)` using the
    /// stored rows, which keeps entries from growing.
    fn reduce_tail(&self, row: &mut [Int], c: usize) {
        for j in c + 1..self.cols {
            if let Some(piv) = &self.rows[j] {
                let q = row[j].div_floor(&piv[j]);
                if !q.is_zero() {
                    axpy(row, &-q, piv, j);
                }
            }
        }
    }

    /// Whether `v` lies in the current lattice.
    pub fn contains(&self, v: &[Int]) -> bool {
        let mut row = v.to_vec();
        for c in 0..self.cols {
            if row[c].is_zero() {
                continue;
            }
            let Some(piv) = &self.rows[c] else {
                return false;
            };
            let Some(q) = row[c].div_exact(&piv[c]) else {
                return false;
            };
            axpy(&mut row, &-q, piv, c);
        }
        true
    }

    /// Canonical HNF basis of the lattice built so far.
    pub fn basis(&self) -> IntMat {
        let rows: Vec<Vec<Int>> = self.rows.iter().flatten().cloned().collect();
        hnf_basis(&IntMat::from_int_rows(rows, self.cols))
    }
}

/// `row[from..] += q * piv[from..]`
fn axpy(row: &mut [Int], q: &Int, piv: &[Int], from: usize) {
    for j in from..row.len() {
        if !piv[j].is_zero() {
            row[j].add_mul(q, &piv[j]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_snf_chain(d: &[Int]) -> bool {
        let nz: Vec<&Int> = d.iter().take_while(|x| !x.is_zero()).collect();
        d[nz.len()..].iter().all(Int::is_zero)
            && nz.iter().all(|x| x.is_positive())
            && nz.windows(2).all(|w| w[0].divides(w[1]))
    }

    #[test]
    fn snf_small_cases() {
        let a = IntMat::from_rows(&[[2, 0], [0, 3]]);
        let d = snf(&a);
        assert_eq!(d.s, IntMat::from_rows(&[[1, 0], [0, 6]]));
        assert_eq!(d.u.mul(&a).mul(&d.v), d.s);
        assert!(d.u.is_unimodular() && d.v.is_unimodular());

        let id = IntMat::identity(3);
        assert_eq!(snf(&id).s, id);
        let d222 = IntMat::diagonal(&[2.into(), 2.into(), 2.into()]);
        assert_eq!(snf(&d222).s, d222);
    }

    #[test]
    fn snf_degenerate_shapes() {
        let a = IntMat::zeros(0, 3);
        let d = snf(&a);
        assert_eq!((d.u.rows(), d.v.rows()), (0, 3));
        let b = IntMat::zeros(2, 0);
        assert_eq!(snf(&b).u, IntMat::identity(2));
    }

    #[test]
    fn snf_rectangular() {
        let a = IntMat::from_rows(&[[4, 6, 8], [6, 9, 12], [2, 4, 7]]);
        let d = snf(&a);
        assert_eq!(d.u.mul(&a).mul(&d.v), d.s);
        assert!(is_snf_chain(&d.diagonal()));
        assert_eq!(snf_diagonal(&a), d.diagonal());
    }

    #[test]
    fn hnf_examples() {
        let a = IntMat::from_rows(&[[2, 0], [0, 2], [1, 1]]);
        let hf = hnf(&a);
        assert_eq!(hf.h, IntMat::from_rows(&[[1, 1], [0, 2]]));
        assert_eq!(hf.u.mul(&a).select_rows(&[0, 1]), hf.h);
        assert!(hf.u.mul(&a).row(2).iter().all(Int::is_zero));
        assert_eq!(hnf(&IntMat::from_rows(&[[0, 0]])).h.rows(), 0);
        assert_eq!(hnf(&IntMat::zeros(0, 2)).h.rows(), 0);
    }

    #[test]
    fn builder_matches_batch() {
        let rows = [[4, 6, 2], [2, 3, 5], [0, 7, 1], [6, 9, 7]];
        let mut b = HnfBuilder::new(3);
        for r in &rows {
            let v: Vec<Int> = r.iter().map(|&x| Int::from(x)).collect();
            b.insert(&v);
        }
        assert_eq!(b.basis(), hnf_basis(&IntMat::from_rows(&rows)));
        let probe: Vec<Int> = [6, 9, 7].iter().map(|&x| Int::from(x)).collect();
        assert!(b.contains(&probe));
        let out: Vec<Int> = [1, 0, 0].iter().map(|&x| Int::from(x)).collect();
        assert!(!b.contains(&out));
    }
}
