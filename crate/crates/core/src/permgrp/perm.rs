use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}`, stored 0-based.
///
/// Products compose left to right: `(a * b)(x) = b(a(x))`. The derived order
/// is lexicographic on the image array, so the identity is the minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// From 0-based images; `None` unless a bijection.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    /// Cycle notation such as `(1,8)(2,3)(4,5)(6,7)`; `()` is the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        let bad = |msg: &str| Error::Parse(format!("permutation {s:?}: {msg}"));
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(bad("empty string"));
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let pts = inner
                .split(',')
                .map(|t| {
                    let p: usize = t.parse().map_err(|_| bad(&format!("bad point {t:?}")))?;
                    if p == 0 || p > degree {
                        return Err(bad(&format!("point {p} outside 1..{degree}")));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<usize>>>()?;
            for &p in &pts {
                if seen[p] {
                    return Err(bad(&format!("point {} repeated", p + 1)));
                }
                seen[p] = true;
            }
            for (i, &p) in pts.iter().enumerate() {
                images[p] = pts[(i + 1) % pts.len()] as u32;
            }
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.0[p] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// `x⁻¹·self·x`
    pub fn conj(&self, x: &Perm) -> Perm {
        &(&x.inverse() * self) * x
    }

    /// Nontrivial cycles, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut p = self.0[start] as usize;
            while p != start {
                seen[p] = true;
                cyc.push(p);
                p = self.0[p] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Same permutation on a larger point set.
    pub fn extend(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut v = self.0.clone();
        v.extend(self.degree() as u32..degree as u32);
        Perm(v)
    }
}

/// `a⁻¹ b⁻¹ a b`
pub fn commutator(a: &Perm, b: &Perm) -> Perm {
    &(&(&a.inverse() * &b.inverse()) * a) * b
}

impl Mul for &Perm {
    type Output = Perm;
    #[inline]
    fn mul(self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Perm(self.0.iter().map(|&x| rhs.0[x as usize]).collect())
    }
}

impl Mul for Perm {
    type Output = Perm;
    fn mul(self, rhs: Perm) -> Perm {
        &self * &rhs
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as `{"degree": n, "cycles": "(1,2)"}`.
#[derive(Serialize, Deserialize)]
struct PermRepr {
    degree: usize,
    cycles: String,
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermRepr {
            degree: self.degree(),
            cycles: self.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PermRepr::deserialize(d)?;
        Perm::parse(&r.cycles, r.degree).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_print_roundtrip() {
        let p = Perm::parse("(1,8)(2,3)(4,5)(6,7)", 8).unwrap();
        assert_eq!(p.to_string(), "(1,8)(2,3)(4,5)(6,7)");
        assert_eq!(Perm::parse(" ( 1 , 2 ) ", 3).unwrap().to_string(), "(1,2)");
        assert_eq!(Perm::parse("()", 4).unwrap(), Perm::identity(4));
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert!(Perm::parse("(1,9)", 8).is_err());
        assert!(Perm::parse("(1,2,1)", 3).is_err());
        assert!(Perm::parse("1,2", 3).is_err());
    }

    #[test]
    fn left_to_right_product() {
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(2,3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!((&a * &b).to_string(), "(1,3,2)");
        assert_eq!(commutator(&a, &b), (&a * &b).pow(2).inverse().inverse());
        assert_eq!(a.conj(&b).to_string(), "(1,3)");
        assert_eq!(Perm::parse("(1,2,3)(4,5)", 5).unwrap().order(), 6);
    }

    #[test]
    fn identity_is_minimal() {
        let id = Perm::identity(3);
        for s in ["(1,2)", "(2,3)", "(1,2,3)", "(1,3,2)", "(1,3)"] {
            assert!(id < Perm::parse(s, 3).unwrap());
        }
    }
}
