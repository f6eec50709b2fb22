//! JSON group descriptions, optionally carrying a cover `G̃ ↠ G`.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::permgrp::{GroupHom, Perm, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSpec {
    pub degree: usize,
    pub generators: Vec<String>,
    /// Image in the base group of each cover generator.
    pub epi_images: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverSpec>,
}

/// A cover `G̃` with its surjection onto the base group.
#[derive(Clone, Debug)]
pub struct Cover {
    pub group: PermGroup,
    pub epi: GroupHom,
}

impl Cover {
    /// `H̃ = epi⁻¹(H)`
    pub fn preimage(&self, h: &PermGroup) -> PermGroup {
        self.epi.preimage(h)
    }
}

#[derive(Clone, Debug)]
pub struct ResolvedGroup {
    pub label: Option<String>,
    pub group: PermGroup,
    pub cover: Option<Cover>,
}

fn parse_all(gens: &[String], degree: usize) -> Result<Vec<Perm>> {
    gens.iter().map(|s| Perm::parse(s, degree)).collect()
}

impl GroupSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("group file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Builds the group (and cover) and checks the recorded order and that
    /// the cover map is a surjective homomorphism.
    pub fn resolve(&self, budget: &Budget) -> Result<ResolvedGroup> {
        let gens = parse_all(&self.generators, self.degree)?;
        let group = PermGroup::with_cap(self.degree, gens, budget.max_elements)?;
        if let Some(order) = self.order {
            if group.order() as u128 != order {
                return Err(Error::Invalid(format!(
                    "group has order {} but {order} was recorded",
                    group.order()
                )));
            }
        }
        let cover = match &self.cover {
            None => None,
            Some(c) => {
                let cgens = parse_all(&c.generators, c.degree)?;
                let images = parse_all(&c.epi_images, self.degree)?;
                if cgens.len() != images.len() {
                    return Err(Error::Invalid(
                        "cover needs one image per generator".into(),
                    ));
                }
                let cg = PermGroup::with_cap(c.degree, cgens.clone(), budget.max_elements)?;
                let epi = GroupHom::from_generator_map(cgens, cg.clone(), group.clone(), images)?;
                if !epi.is_surjective() {
                    return Err(Error::Invalid("cover map is not surjective".into()));
                }
                Some(Cover { group: cg, epi })
            }
        };
        Ok(ResolvedGroup {
            label: self.label.clone(),
            group,
            cover,
        })
    }
}
