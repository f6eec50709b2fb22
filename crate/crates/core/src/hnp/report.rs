//! One-shot summary of the norm-one torus attached to `G` and `H = Stab₁`.
//!
//! `|H¹(G, J)|` is the numerator of the Tamagawa number `|H¹(G,J)| / |Ш|`,
//! and `H¹(G, [J]^fl)` is both `H¹(k, Pic X̄)` and, over a local field, the
//! group `T(k)/R`.

use serde::Serialize;

use super::{table1_lookup, Obstruction, ObstructionPart, Table1Status};
use crate::budget::Budget;
use crate::cohom::h1;
use crate::error::Result;
use crate::flabby::flabby_class_h1;
use crate::glat::norm1_lattice;
use crate::intlat::AbInvariants;
use crate::permgrp::PermGroup;

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

impl GroupSummary {
    pub fn new(g: &PermGroup, label: Option<&str>) -> Self {
        GroupSummary {
            label: label.map(str::to_owned),
            degree: g.degree(),
            order: g.order(),
            generators: g.generators().iter().map(|p| p.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DrEntry {
    pub decomposition_group: GroupSummary,
    pub dr: ObstructionPart,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionSummary {
    pub ker: ObstructionPart,
    pub dnr: ObstructionPart,
    pub dr: Vec<DrEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HnpReport {
    pub group: GroupSummary,
    #[serde(rename = "h1_J")]
    pub h1_j: AbInvariants,
    pub flabby_class_h1: AbInvariants,
    pub obstruction: ObstructionSummary,
    pub tamagawa_numerator: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table1: Option<Table1Status>,
}

/// Inputs to [`report`].
///
/// The lattice invariants use the transitive group `group`; the obstruction
/// runs on `obstruction_group` (a Schur cover, say) with subgroup
/// `obstruction_subgroup`, both defaulting to `group` and its point stabilizer.
#[derive(Clone, Debug)]
pub struct ReportInput<'a> {
    pub group: &'a PermGroup,
    pub label: Option<&'a str>,
    pub obstruction_group: Option<&'a PermGroup>,
    pub obstruction_subgroup: Option<&'a PermGroup>,
    pub decomposition_groups: &'a [PermGroup],
}

impl<'a> ReportInput<'a> {
    pub fn new(group: &'a PermGroup) -> Self {
        ReportInput {
            group,
            label: None,
            obstruction_group: None,
            obstruction_subgroup: None,
            decomposition_groups: &[],
        }
    }
}

pub fn report(input: &ReportInput<'_>, budget: &Budget) -> Result<HnpReport> {
    let g = input.group;
    let j = norm1_lattice(g)?;
    let h1_j = h1(g, &j)?.invariants;
    let flabby = flabby_class_h1(&j, None, budget)?;
    let og = input.obstruction_group.unwrap_or(g);
    let ob = Obstruction::new(og, input.obstruction_subgroup)?;
    let dr = input
        .decomposition_groups
        .iter()
        .map(|gv| DrEntry {
            decomposition_group: GroupSummary::new(gv, None),
            dr: ob.dr(gv),
        })
        .collect();
    let table1 = match input.label {
        Some(l) => table1_lookup(l).ok(),
        None => None,
    };
    Ok(HnpReport {
        group: GroupSummary::new(g, input.label),
        tamagawa_numerator: h1_j.order(),
        h1_j,
        flabby_class_h1: flabby,
        obstruction: ObstructionSummary {
            ker: ob.n().ker,
            dnr: ob.dnr(),
            dr,
        },
        table1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_of_order_three() {
        let c3 = PermGroup::from_strings(3, &["(1,2,3)"]).unwrap();
        let mut input = ReportInput::new(&c3);
        input.label = Some("3T1");
        let r = report(&input, &Budget::default()).unwrap();
        assert_eq!(r.h1_j, [3u64]);
        assert!(r.flabby_class_h1.is_trivial());
        assert_eq!(r.tamagawa_numerator, 3);
        assert_eq!(r.table1, Some(Table1Status::HoldsAlways));
    }
}
