//! `Ker ψ₁`, the unramified part `Φ^G(H)/[H,H]` and the ramified parts
//! `φ₁(Ker ψ₂)` for a candidate decomposition group.

use super::ObstructionPart;
use crate::error::Result;
use crate::intlat::{fin_ab, AbInvariants, IntMat};
use crate::permgrp::{commutator, double_cosets, FinAbStructure, Perm, PermGroup};

/// Numerator of the first obstruction.
#[derive(Clone, Debug)]
pub struct FirstObstructionN {
    pub ker: ObstructionPart,
    /// Rows: images of the `H^ab` Smith generators in `G^ab` coordinates.
    pub psi1: IntMat,
}

/// `G`, `H` and both abelianizations, shared between calls.
#[derive(Clone, Debug)]
pub struct Obstruction {
    g: PermGroup,
    h: PermGroup,
    g_ab: FinAbStructure,
    h_ab: FinAbStructure,
}

impl Obstruction {
    /// `H` defaults to the stabilizer of the point 1.
    pub fn new(g: &PermGroup, h: Option<&PermGroup>) -> Result<Self> {
        let h = match h {
            Some(h) => h.clone(),
            None => g.stabilizer(1)?,
        };
        if !h.is_subgroup_of(g) {
            return Err(crate::Error::Invalid("H is not a subgroup of G".into()));
        }
        Ok(Obstruction {
            g_ab: FinAbStructure::new(g),
            h_ab: FinAbStructure::new(&h),
            g: g.clone(),
            h,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.g
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.h
    }

    /// `H^ab` in Smith form.
    pub fn ambient(&self) -> &AbInvariants {
        self.h_ab.invariants()
    }

    fn part(&self, elts: &[Perm]) -> ObstructionPart {
        ObstructionPart::from_generators(self.ambient(), &self.h_ab.project_all(elts))
    }

    pub fn psi1(&self) -> IntMat {
        self.g_ab.project_all(self.h_ab.generators())
    }

    /// `Ker ψ₁` as the image of `H ∩ [G,G]` in `H^ab`.
    pub fn n(&self) -> FirstObstructionN {
        let inter = self.h.intersection(self.g_ab.derived());
        FirstObstructionN {
            ker: self.part(inter.generators()),
            psi1: self.psi1(),
        }
    }

    /// `Φ^G(H)[H,H]/[H,H]`, generated by `[h, x]` with `h ∈ H ∩ xHx⁻¹`.
    ///
    /// Moving `x` inside its double coset `HxH` changes each commutator by an
    /// element of `[H,H]`, so double coset representatives suffice.
    pub fn dnr(&self) -> ObstructionPart {
        let mut gens = Vec::new();
        for x in double_cosets(&self.g, &self.h, &self.h) {
            let xi = x.inverse();
            let inter = self.h.intersection(&self.h.conjugate(&xi));
            for h in inter.generators() {
                gens.push(commutator(h, &x));
            }
        }
        self.part(&gens)
    }

    /// `φ₁(Ker ψ₂)` for the decomposition group `gv`.
    pub fn dr(&self, gv: &PermGroup) -> ObstructionPart {
        let gv_ab = FinAbStructure::new(gv);
        let target = gv_ab.invariants();
        let mut source = Vec::new();
        let mut psi2: Vec<Vec<_>> = Vec::new();
        let mut phi1 = Vec::new();
        for x in double_cosets(&self.g, &self.h, gv) {
            let xi = x.inverse();
            let hw = self.h.intersection(&gv.conjugate(&xi));
            let hw_ab = FinAbStructure::new(&hw);
            source.extend_from_slice(hw_ab.invariants().as_slice());
            for s in hw_ab.generators() {
                psi2.push(gv_ab.project(&s.conj(&x)));
                phi1.push(s.clone());
            }
        }
        let source = AbInvariants(source);
        if source.is_empty() || self.ambient().is_empty() {
            return self.part(&[]);
        }
        let psi2 = IntMat::from_int_rows(psi2, target.len());
        let ker = fin_ab::kernel_of_map(&source, target, &psi2);
        let phi1 = self.h_ab.project_all(&phi1);
        let img = fin_ab::image_of_map(self.ambient(), &ker, &phi1);
        ObstructionPart::from_generators(self.ambient(), &img)
    }
}

/// Numerator `Ker ψ₁`; `H` defaults to the stabilizer of 1.
pub fn first_obstruction_n(g: &PermGroup, h: Option<&PermGroup>) -> Result<FirstObstructionN> {
    Ok(Obstruction::new(g, h)?.n())
}

pub fn first_obstruction_dnr(g: &PermGroup, h: Option<&PermGroup>) -> Result<ObstructionPart> {
    Ok(Obstruction::new(g, h)?.dnr())
}

pub fn first_obstruction_dr(
    g: &PermGroup,
    gv: &PermGroup,
    h: Option<&PermGroup>,
) -> Result<ObstructionPart> {
    if !gv.is_subgroup_of(g) {
        return Err(crate::Error::Invalid("decomposition group is not a subgroup of G".into()));
    }
    Ok(Obstruction::new(g, h)?.dr(gv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_strings(n, gens).unwrap()
    }

    #[test]
    fn kernel_matches_kernel_of_psi1() {
        let s4 = grp(4, &["(1,2)", "(1,2,3,4)"]);
        let d4 = grp(4, &["(1,2,3,4)", "(1,3)"]);
        for h in [None, Some(&d4)] {
            let ob = Obstruction::new(&s4, h).unwrap();
            let n = ob.n();
            let k = fin_ab::kernel_of_map(ob.ambient(), ob.g_ab.invariants(), &n.psi1);
            assert_eq!(n.ker, ObstructionPart::from_generators(ob.ambient(), &k));
        }
    }

    #[test]
    fn perfect_subgroup_gives_trivial_parts() {
        let a5 = grp(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        let ob = Obstruction::new(&a5, Some(&a5)).unwrap();
        assert!(ob.n().ker.is_trivial());
        assert!(ob.ambient().is_empty());
        assert!(ob.dnr().is_trivial());
    }

    #[test]
    fn full_decomposition_group_gives_numerator() {
        let a4 = grp(4, &["(1,2,3)", "(2,3,4)"]);
        let ob = Obstruction::new(&a4, None).unwrap();
        assert_eq!(ob.dr(&a4), ob.n().ker);
        assert!(ob.dr(&PermGroup::trivial(4)).is_trivial());
    }
}
