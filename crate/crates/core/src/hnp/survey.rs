//! `Dr` for every subgroup of `G` taken as a decomposition group.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Obstruction, ObstructionPart};
use crate::budget::Budget;
use crate::error::Result;
use crate::permgrp::PermGroup;

#[derive(Clone, Debug)]
pub struct HnpSurvey {
    /// `Ker ψ₁`
    pub ker: ObstructionPart,
    /// Every subgroup of `G` (in the lattice order) with its `Dr`.
    pub per_subgroup: Vec<(PermGroup, ObstructionPart)>,
    /// Indices into `per_subgroup` with `Dr = Ker ψ₁`.
    pub true_set: Vec<usize>,
    pub false_set: Vec<usize>,
    /// True subgroups containing no smaller true subgroup.
    pub minimal_true: Vec<usize>,
}

impl HnpSurvey {
    /// Multiset of structure names over `indices`.
    pub fn collect_structures(&self, indices: &[usize]) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for &i in indices {
            *out.entry(self.per_subgroup[i].0.structure_name()).or_insert(0) += 1;
        }
        out
    }
}

/// `H` defaults to the stabilizer of 1. `Dr` is computed once per conjugacy
/// class of subgroups and shared by its members.
pub fn hnp_survey(g: &PermGroup, h: Option<&PermGroup>, budget: &Budget) -> Result<HnpSurvey> {
    let ob = Obstruction::new(g, h)?;
    let ker = ob.n().ker;
    let lat = g.subgroup_lattice(budget)?;
    let per_class: Vec<ObstructionPart> = lat
        .classes
        .par_iter()
        .map(|c| ob.dr(&lat.subgroups[c[0]]))
        .collect();
    let per_subgroup: Vec<(PermGroup, ObstructionPart)> = lat
        .subgroups
        .iter()
        .zip(&lat.class_of)
        .map(|(s, &c)| (s.clone(), per_class[c].clone()))
        .collect();
    let (true_set, false_set): (Vec<usize>, Vec<usize>) =
        (0..per_subgroup.len()).partition(|&i| per_subgroup[i].1 == ker);
    let minimal_true = true_set
        .iter()
        .copied()
        .filter(|&i| {
            let s = &per_subgroup[i].0;
            !true_set.iter().any(|&j| {
                let t = &per_subgroup[j].0;
                t.order() < s.order() && t.is_subgroup_of(s)
            })
        })
        .collect();
    Ok(HnpSurvey {
        ker,
        per_subgroup,
        true_set,
        false_set,
        minimal_true,
    })
}
