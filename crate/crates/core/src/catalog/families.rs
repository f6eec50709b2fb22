//! Named constructions: `C<n>`, `D<n>`, `S<n>`, `A<n>`, `V4`, `C<p>^<k>`,
//! `PSL(2,<p>)`.

use crate::permgrp::Perm;

/// Degree and generators for a family label, or `None` if it is not one.
pub fn family_generators(label: &str) -> Option<(usize, Vec<Perm>)> {
    let label = label.trim();
    if label == "V4" {
        return Some((4, vec![cycles(4, &[&[1, 2], &[3, 4]]), cycles(4, &[&[1, 3], &[2, 4]])]));
    }
    if let Some(p) = label.strip_prefix("PSL(2,").and_then(|s| s.strip_suffix(')')) {
        return psl2(p.parse().ok()?);
    }
    if let Some((p, k)) = label.strip_prefix('C').and_then(|s| s.split_once('^')) {
        return elementary_abelian(p.parse().ok()?, k.parse().ok()?);
    }
    let head = label.chars().next()?;
    let n: usize = label[head.len_utf8()..].parse().ok()?;
    match head {
        'C' if n >= 1 => Some((n, vec![rotation(n)])),
        'D' if n >= 3 => {
            let refl = Perm::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
            Some((n, vec![rotation(n), refl]))
        }
        'S' if n >= 1 => {
            if n == 1 {
                return Some((1, vec![]));
            }
            Some((n, vec![cycles(n, &[&[1, 2]]), rotation(n)]))
        }
        'A' if n >= 3 => {
            let long: Vec<usize> = if n % 2 == 1 { (1..=n).collect() } else { (2..=n).collect() };
            Some((n, vec![cycles(n, &[&[1, 2, 3]]), cycles(n, &[&long])]))
        }
        _ => None,
    }
}

fn rotation(n: usize) -> Perm {
    Perm::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect()).expect("rotation")
}

/// Product of disjoint 1-based cycles.
fn cycles(n: usize, cs: &[&[usize]]) -> Perm {
    let mut img: Vec<u32> = (0..n as u32).collect();
    for c in cs {
        for (i, &a) in c.iter().enumerate() {
            img[a - 1] = (c[(i + 1) % c.len()] - 1) as u32;
        }
    }
    Perm::from_images(img).expect("disjoint cycles")
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Regular action of `(ℤ/p)^k` on itself by translations.
fn elementary_abelian(p: usize, k: u32) -> Option<(usize, Vec<Perm>)> {
    if !is_prime(p as u64) || k == 0 {
        return None;
    }
    let n = p.checked_pow(k)?;
    if n > 1 << 16 {
        return None;
    }
    let gens = (0..k)
        .map(|i| {
            let step = p.pow(i);
            let img = (0..n)
                .map(|x| {
                    let digit = (x / step) % p;
                    let shifted = if digit + 1 == p { x + step - p * step } else { x + step };
                    shifted as u32
                })
                .collect();
            Perm::from_images(img).expect("translation")
        })
        .collect();
    Some((n, gens))
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// `PSL(2,p)` on the projective line `{0..p-1, ∞}` via `z ↦ z+1`, `z ↦ −1/z`.
fn psl2(p: u64) -> Option<(usize, Vec<Perm>)> {
    if !is_prime(p) || p > 1000 {
        return None;
    }
    let n = p as usize + 1;
    let inf = p as u32;
    let shift = (0..n as u32)
        .map(|z| if z == inf { inf } else { (z + 1) % p as u32 })
        .collect();
    let inv = (0..n as u32)
        .map(|z| {
            if z == inf {
                0
            } else if z == 0 {
                inf
            } else {
                let zi = pow_mod(z as u64, p - 2, p);
                ((p - zi) % p) as u32
            }
        })
        .collect();
    Some((n, vec![Perm::from_images(shift)?, Perm::from_images(inv)?]))
}
