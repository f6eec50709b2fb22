//! Group catalog: transitive groups `nTm`, named families and Schur covers.
//!
//! `nTm` labels resolve first to the generator lists quoted in worked
//! examples, then to the exported transitive-group fixtures. Every group is
//! checked for its recorded order and for transitivity when it is built.

mod families;
mod spec_file;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::permgrp::{Perm, PermGroup};

pub use families::family_generators;
pub use spec_file::{Cover, CoverSpec, GroupSpecFile, ResolvedGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    PaperCitation,
    Constructed,
    ExportedFixture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub label: String,
    pub degree: usize,
    pub order: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub generators: Vec<String>,
    pub provenance: Provenance,
}

impl CatalogEntry {
    /// Builds the group and checks order and transitivity.
    pub fn group(&self, budget: &Budget) -> Result<PermGroup> {
        if self.order > budget.max_elements as u128 {
            return Err(Error::Budget {
                what: format!("enumerating the {} elements of {}", self.order, self.label),
                budget: "max_elements",
                needed: self.order,
                limit: budget.max_elements as u128,
            });
        }
        let gens = self
            .generators
            .iter()
            .map(|s| Perm::parse(s, self.degree))
            .collect::<Result<Vec<_>>>()?;
        let g = PermGroup::with_cap(self.degree, gens, budget.max_elements)?;
        if g.order() as u128 != self.order {
            return Err(Error::Invalid(format!(
                "{} has order {} but {} was recorded",
                self.label,
                g.order(),
                self.order
            )));
        }
        if !g.is_transitive() {
            return Err(Error::Invalid(format!("{} is not transitive", self.label)));
        }
        Ok(g)
    }
}

#[derive(Deserialize)]
struct FixtureFile {
    #[allow(dead_code)]
    degree: usize,
    #[allow(dead_code)]
    source: String,
    groups: Vec<FixtureGroup>,
}

#[derive(Deserialize)]
struct FixtureGroup {
    label: String,
    degree: usize,
    order: u128,
    name: String,
    generators: Vec<String>,
}

const FIXTURES: &[&str] = &[
    include_str!("../../data/transitive/deg2.json"),
    include_str!("../../data/transitive/deg3.json"),
    include_str!("../../data/transitive/deg4.json"),
    include_str!("../../data/transitive/deg5.json"),
    include_str!("../../data/transitive/deg6.json"),
    include_str!("../../data/transitive/deg7.json"),
    include_str!("../../data/transitive/deg8.json"),
    include_str!("../../data/transitive/deg9.json"),
    include_str!("../../data/transitive/deg10.json"),
    include_str!("../../data/transitive/deg11.json"),
    include_str!("../../data/transitive/deg12.json"),
    include_str!("../../data/transitive/deg13.json"),
    include_str!("../../data/transitive/deg14.json"),
    include_str!("../../data/transitive/deg15.json"),
];

const COVERS: &[(&str, &str)] = &[
    ("4T2", include_str!("../../data/covers/4T2.json")),
    ("4T4", include_str!("../../data/covers/4T4.json")),
    ("8T3", include_str!("../../data/covers/8T3.json")),
];

/// Generator lists quoted in the worked examples.
const CITED: &[(&str, usize, u128, &[&str])] = &[
    ("8T9", 8, 16, &["(1,8)(2,3)(4,5)(6,7)", "(1,3)(2,8)(4,6)(5,7)", "(1,5)(2,6)(3,7)(4,8)", "(4,5)(6,7)"]),
    ("8T11", 8, 16, &["(1,5)(3,7)", "(1,3,5,7)(2,4,6,8)", "(1,4,5,8)(2,3,6,7)"]),
    ("8T15", 8, 32, &["(1,2,3,4,5,6,7,8)", "(1,5)(3,7)", "(1,6)(2,5)(3,4)(7,8)"]),
    ("8T19", 8, 32, &["(1,8)(2,3)(4,5)(6,7)", "(1,3)(2,8)(4,6)(5,7)", "(1,5)(2,6)(3,7)(4,8)", "(1,3)(4,5,6,7)"]),
    ("8T22", 8, 32, &["(1,8)(2,3)(4,5)(6,7)", "(1,3)(2,8)(4,6)(5,7)", "(1,5)(2,6)(3,7)(4,8)", "(2,3)(4,5)", "(2,3)(6,7)"]),
    ("8T31", 8, 64, &["(4,8)", "(1,8)(2,3)(4,5)(6,7)", "(1,3)(2,8)(4,6)(5,7)"]),
    ("8T32", 8, 96, &["(1,8)(2,3)(4,5)(6,7)", "(1,3)(2,8)(4,6)(5,7)", "(1,5)(2,6)(3,7)(4,8)", "(1,2,3)(4,6,5)", "(2,5)(3,4)"]),
    ("8T38", 8, 192, &["(4,8)", "(1,8)(2,3)(4,5)(6,7)", "(1,2,3)(5,6,7)"]),
    ("10T32", 10, 720, &["(1,2,10)(3,4,5)(6,7,8)", "(1,3,2,6)(4,5,8,7)", "(1,2)(4,7)(5,8)(9,10)", "(3,6)(4,7)(5,8)"]),
];

pub struct Catalog {
    entries: BTreeMap<String, CatalogEntry>,
}

impl Catalog {
    fn load() -> Self {
        let mut entries = BTreeMap::new();
        for text in FIXTURES {
            let file: FixtureFile = serde_json::from_str(text).expect("bundled fixture parses");
            for g in file.groups {
                entries.insert(
                    g.label.clone(),
                    CatalogEntry {
                        label: g.label,
                        degree: g.degree,
                        order: g.order,
                        name: Some(g.name),
                        generators: g.generators,
                        provenance: Provenance::ExportedFixture,
                    },
                );
            }
        }
        for &(label, degree, order, gens) in CITED {
            let name = entries.get(label).and_then(|e| e.name.clone());
            entries.insert(
                label.to_owned(),
                CatalogEntry {
                    label: label.to_owned(),
                    degree,
                    order,
                    name,
                    generators: gens.iter().map(|s| s.to_string()).collect(),
                    provenance: Provenance::PaperCitation,
                },
            );
        }
        Catalog { entries }
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// A stored `nTm` entry, or a named family constructed on the fly.
    pub fn entry(&self, label: &str) -> Result<CatalogEntry> {
        let label = label.trim();
        if let Some(e) = self.entries.get(label) {
            return Ok(e.clone());
        }
        if let Some((degree, gens)) = family_generators(label) {
            let g = PermGroup::new(degree, gens.clone())?;
            return Ok(CatalogEntry {
                label: label.to_owned(),
                degree,
                order: g.order() as u128,
                name: None,
                generators: gens.iter().map(|p| p.to_string()).collect(),
                provenance: Provenance::Constructed,
            });
        }
        Err(Error::UnknownLabel {
            label: label.to_owned(),
            nearest: self.nearest(label, 5),
        })
    }

    pub fn get(&self, label: &str, budget: &Budget) -> Result<PermGroup> {
        self.entry(label)?.group(budget)
    }

    /// Labels closest to `label` in edit distance.
    pub fn nearest(&self, label: &str, k: usize) -> Vec<String> {
        let mut scored: Vec<(usize, &String)> = self
            .entries
            .keys()
            .map(|l| (strsim::levenshtein(l, label), l))
            .collect();
        scored.sort();
        scored.into_iter().take(k).map(|(_, l)| l.clone()).collect()
    }

    /// The bundled Schur cover for `label`, if any.
    pub fn cover(&self, label: &str, budget: &Budget) -> Result<Option<ResolvedGroup>> {
        match COVERS.iter().find(|(l, _)| *l == label.trim()) {
            Some((_, text)) => Ok(Some(GroupSpecFile::from_json(text)?.resolve(budget)?)),
            None => Ok(None),
        }
    }

    pub fn cover_labels(&self) -> impl Iterator<Item = &'static str> {
        COVERS.iter().map(|(l, _)| *l)
    }
}

pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(Catalog::load)
}

pub fn catalog_get(label: &str) -> Result<PermGroup> {
    catalog().get(label, &Budget::default())
}

/// `--group` argument: a label, or `"<degree>:<gen>;<gen>;…"`.
pub fn parse_group_arg(arg: &str, budget: &Budget) -> Result<(PermGroup, Option<String>)> {
    let arg = arg.trim();
    if let Some((d, gens)) = arg.split_once(':') {
        if !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()) {
            let degree: usize = d
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {d:?}")))?;
            let gens = gens
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| Perm::parse(s, degree))
                .collect::<Result<Vec<_>>>()?;
            return Ok((PermGroup::with_cap(degree, gens, budget.max_elements)?, None));
        }
    }
    let g = catalog().get(arg, budget)?;
    Ok((g, Some(arg.to_owned())))
}

/// Subgroup of `g` generated by cycle strings separated by `;`.
pub fn parse_subgroup_arg(g: &PermGroup, arg: &str) -> Result<PermGroup> {
    let gens = arg
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Perm::parse(s, g.degree()))
        .collect::<Result<Vec<_>>>()?;
    for s in &gens {
        if !g.contains(s) {
            return Err(Error::Invalid(format!("{s} is not an element of the group")));
        }
    }
    PermGroup::new(g.degree(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cited_entries_match_fixtures() {
        let cat = catalog();
        let b = Budget::default();
        for &(label, ..) in CITED {
            let cited = cat.get(label, &b).unwrap();
            let e = cat.entries[label].clone();
            assert_eq!(e.provenance, Provenance::PaperCitation);
            assert_eq!(cited.order() as u128, e.order);
        }
    }

    #[test]
    fn unknown_label_suggests_neighbours() {
        match catalog().entry("8T311") {
            Err(Error::UnknownLabel { nearest, .. }) => assert!(nearest.contains(&"8T31".to_string())),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inline_groups() {
        let b = Budget::default();
        let (g, label) = parse_group_arg("4:(1,2,3,4);(1,3)", &b).unwrap();
        assert_eq!((g.order(), label), (8, None));
        assert!(matches!(parse_group_arg("4:(1,5)", &b), Err(Error::Parse(_))));
        let h = parse_subgroup_arg(&g, "(1,3)(2,4)").unwrap();
        assert_eq!(h.order(), 2);
        assert!(parse_subgroup_arg(&g, "(1,2)").is_err());
    }
}
