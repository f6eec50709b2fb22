use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::Perm;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Groups at most this large get a full multiplication table on demand.
const TABLE_LIMIT: usize = 5000;

/// A finite permutation group with its elements materialized and sorted.
///
/// Cloning is cheap. Equality compares degree and element sets.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    table: OnceLock<Vec<u32>>,
    inverses: OnceLock<Vec<u32>>,
}

impl PermGroup {
    /// Group generated by `gens`, with the default element cap.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        Self::with_cap(degree, gens, Budget::default().max_elements)
    }

    pub fn with_cap(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::Invalid(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let elements = closure(degree, &gens, cap)?;
        Ok(Self::from_sorted(degree, gens, elements))
    }

    /// Parses cycle-notation generators.
    pub fn from_strings<S: AsRef<str>>(degree: usize, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Perm::parse(s.as_ref(), degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    /// Wraps an already closed, sorted element list.
    pub(crate) fn from_sorted(degree: usize, gens: Vec<Perm>, elements: Vec<Perm>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                gens,
                elements,
                table: OnceLock::new(),
                inverses: OnceLock::new(),
            }),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_sorted(degree, Vec::new(), vec![Perm::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.inner.elements
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Position of `g` in the sorted element list.
    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.inner.elements.binary_search(g).ok()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.index_of(g).is_some()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.inner.elements[i]
    }

    /// Index of `elements[i] * elements[j]`.
    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        if let Some(t) = self.table() {
            return t[i * self.order() + j] as usize;
        }
        let p = self.element(i) * self.element(j);
        self.index_of(&p).expect("group is closed")
    }

    pub fn inv_idx(&self, i: usize) -> usize {
        self.inner.inverses.get_or_init(|| {
            self.elements()
                .iter()
                .map(|g| self.index_of(&g.inverse()).unwrap() as u32)
                .collect()
        })[i] as usize
    }

    /// Multiplication table for small groups.
    pub fn table(&self) -> Option<&[u32]> {
        if self.order() > TABLE_LIMIT {
            return None;
        }
        let t = self.inner.table.get_or_init(|| {
            let n = self.order();
            let mut t = Vec::with_capacity(n * n);
            for a in self.elements() {
                for b in self.elements() {
                    t.push(self.index_of(&(a * b)).expect("group is closed") as u32);
                }
            }
            t
        });
        Some(t)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.elements().iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter().all(|a| g.iter().all(|b| a * b == b * a))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.elements().iter().any(|g| g.order() == n)
    }

    /// Subgroup generated by `elts`.
    pub fn subgroup(&self, elts: &[Perm]) -> Result<PermGroup> {
        for e in elts {
            if !self.contains(e) {
                return Err(Error::Invalid(format!("{e} is not an element of the group")));
            }
        }
        PermGroup::with_cap(self.degree(), elts.to_vec(), self.order())
    }

    /// Subgroup from a membership predicate over the materialized elements.
    pub fn filter_subgroup(&self, pred: impl Fn(&Perm) -> bool) -> PermGroup {
        let elements: Vec<Perm> = self.elements().iter().filter(|g| pred(g)).cloned().collect();
        let gens = small_generating_set(&elements);
        PermGroup::from_sorted(self.degree(), gens, elements)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = vec![point];
        seen[point] = true;
        let mut i = 0;
        while i < out.len() {
            let p = out[i];
            for g in self.generators() {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    out.push(q);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree() <= 1 || self.orbit(0).len() == self.degree()
    }

    /// Stabilizer of a 1-based point.
    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point == 0 || point > self.degree() {
            return Err(Error::Invalid(format!(
                "point {point} outside 1..{}",
                self.degree()
            )));
        }
        let p = point - 1;
        Ok(self.filter_subgroup(|g| g.apply(p) == p))
    }

    /// `H^x = x⁻¹ H x`
    pub fn conjugate(&self, x: &Perm) -> PermGroup {
        let xi = x.inverse();
        let mut elements: Vec<Perm> = self.elements().iter().map(|h| &(&xi * h) * x).collect();
        elements.sort_unstable();
        let gens = self.generators().iter().map(|g| g.conj(x)).collect();
        PermGroup::from_sorted(self.degree(), gens, elements)
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        small.filter_subgroup(|g| big.contains(g))
    }

    /// `⟨self, other⟩`
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        let mut gens = self.generators().to_vec();
        gens.extend(other.generators().iter().cloned());
        PermGroup::new(self.degree(), gens)
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        g.generators()
            .iter()
            .all(|x| self.generators().iter().all(|h| self.contains(&h.conj(x))))
    }

    pub fn normalizer_in(&self, g: &PermGroup) -> PermGroup {
        g.filter_subgroup(|x| self.generators().iter().all(|h| self.contains(&h.conj(x))))
    }

    /// Right cosets `H·g` of `self` in `g`, as the minimal element of each
    /// coset, sorted; the first one is the identity.
    pub fn right_coset_reps(&self, g: &PermGroup) -> Vec<Perm> {
        let mut labelled = vec![false; g.order()];
        let mut reps = Vec::new();
        for (i, x) in g.elements().iter().enumerate() {
            if labelled[i] {
                continue;
            }
            reps.push(x.clone());
            for h in self.elements() {
                labelled[g.index_of(&(h * x)).expect("subgroup")] = true;
            }
        }
        reps
    }
}

/// BFS closure of a generating set.
fn closure(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = &x * s;
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::Budget {
                        what: "group enumeration".into(),
                        budget: "max_elements",
                        needed: seen.len() as u128 + 1,
                        limit: cap as u128,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut v: Vec<Perm> = seen.into_iter().collect();
    v.sort_unstable();
    Ok(v)
}

/// Greedy generating set: scan in sorted order, keep elements outside the
/// span of those already kept.
pub(crate) fn small_generating_set(elements: &[Perm]) -> Vec<Perm> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let degree = first.degree();
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
    // Scanning by decreasing element order keeps the set short.
    let mut order: Vec<&Perm> = elements.iter().collect();
    order.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.cmp(b)));
    for x in order {
        if span.len() == elements.len() {
            break;
        }
        if span.contains(x) {
            continue;
        }
        gens.push(x.clone());
        span = closure(degree, &gens, usize::MAX)
            .expect("uncapped")
            .into_iter()
            .collect();
    }
    gens
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.elements() == other.elements()
    }
}

impl Eq for PermGroup {}

impl std::hash::Hash for PermGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree().hash(state);
        self.elements().hash(state);
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "PermGroup(degree {}, order {}, <{}>)",
            self.degree(),
            self.order(),
            gens.join(", ")
        )
    }
}
