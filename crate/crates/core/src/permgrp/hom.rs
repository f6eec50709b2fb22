use std::collections::VecDeque;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};

/// A homomorphism given by generator images, tabulated on every element.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: PermGroup,
    target: PermGroup,
    gen_images: Vec<Perm>,
    /// `map[i]` is the target index of the image of source element `i`.
    map: Vec<usize>,
}

impl GroupHom {
    /// Fails unless the generator assignment extends to a homomorphism.
    pub fn new(source: PermGroup, target: PermGroup, gen_images: Vec<Perm>) -> Result<Self> {
        Self::from_generator_map(source.generators().to_vec(), source, target, gen_images)
    }

    /// Like [`GroupHom::new`], with images given for an explicit generating
    /// list of the source (which need not be its stored generators).
    pub fn from_generator_map(
        gens: Vec<Perm>,
        source: PermGroup,
        target: PermGroup,
        gen_images: Vec<Perm>,
    ) -> Result<Self> {
        if gens.len() != gen_images.len() {
            return Err(Error::Invalid(format!(
                "{} generators but {} images",
                gens.len(),
                gen_images.len()
            )));
        }
        let gi: Vec<usize> = gens
            .iter()
            .map(|g| {
                source
                    .index_of(g)
                    .ok_or_else(|| Error::Invalid(format!("{g} is not in the source group")))
            })
            .collect::<Result<_>>()?;
        let ti: Vec<usize> = gen_images
            .iter()
            .map(|g| {
                target
                    .index_of(g)
                    .ok_or_else(|| Error::Invalid(format!("{g} is not in the target group")))
            })
            .collect::<Result<_>>()?;
        let mut map = vec![usize::MAX; source.order()];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&s, &t) in gi.iter().zip(&ti) {
                let y = source.mul_idx(x, s);
                let img = target.mul_idx(map[x], t);
                if map[y] == usize::MAX {
                    map[y] = img;
                    queue.push_back(y);
                } else if map[y] != img {
                    return Err(Error::Invalid(
                        "generator images do not define a homomorphism".into(),
                    ));
                }
            }
        }
        if map.contains(&usize::MAX) {
            return Err(Error::Invalid("generators do not generate the source".into()));
        }
        Ok(GroupHom {
            source,
            target,
            gen_images,
            map,
        })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn generator_images(&self) -> &[Perm] {
        &self.gen_images
    }

    pub fn apply(&self, g: &Perm) -> Option<Perm> {
        let i = self.source.index_of(g)?;
        Some(self.target.element(self.map[i]).clone())
    }

    /// Image of a subgroup of the source.
    pub fn image(&self, s: &PermGroup) -> PermGroup {
        let mut hit = vec![false; self.target.order()];
        for g in s.elements() {
            hit[self.map[self.source.index_of(g).expect("subgroup of source")]] = true;
        }
        self.target.filter_subgroup(|t| hit[self.target.index_of(t).unwrap()])
    }

    /// Preimage of a subgroup of the target.
    pub fn preimage(&self, s: &PermGroup) -> PermGroup {
        let target = &self.target;
        let map = &self.map;
        let src = &self.source;
        src.filter_subgroup(|g| s.contains(target.element(map[src.index_of(g).unwrap()])))
    }

    pub fn kernel(&self) -> PermGroup {
        let map = &self.map;
        let src = &self.source;
        src.filter_subgroup(|g| map[src.index_of(g).unwrap()] == 0)
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&self.source).order() == self.target.order()
    }
}
