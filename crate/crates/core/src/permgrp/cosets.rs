//! Coset actions and double cosets.

use super::{GroupHom, Perm, PermGroup};
use crate::error::{Error, Result};

/// Action of `G` on the right cosets of `H`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    /// Minimal element of each coset; point `i + 1` is the coset `H·reps[i]`.
    pub reps: Vec<Perm>,
    pub image: PermGroup,
    pub hom: GroupHom,
}

/// `G` acting on the right cosets `H·g` by right multiplication.
///
/// Cosets are numbered by their minimal elements, so point 1 is `H` itself.
pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<CosetAction> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Invalid("coset action needs a subgroup".into()));
    }
    let (reps, label) = right_coset_labels(g, h);
    let m = reps.len();
    let act = |x: &Perm| -> Perm {
        let images = reps
            .iter()
            .map(|r| label[g.index_of(&(r * x)).unwrap()] as u32)
            .collect();
        Perm::from_images(images).expect("coset action is a permutation")
    };
    let gen_images: Vec<Perm> = g.generators().iter().map(act).collect();
    let image = PermGroup::new(m, gen_images.clone())?;
    let hom = GroupHom::new(g.clone(), image.clone(), gen_images)?;
    Ok(CosetAction { reps, image, hom })
}

/// Coset representatives and the coset index of every element of `g`.
pub fn right_coset_labels(g: &PermGroup, h: &PermGroup) -> (Vec<Perm>, Vec<usize>) {
    let mut label = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for (i, x) in g.elements().iter().enumerate() {
        if label[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x.clone());
        for e in h.elements() {
            label[g.index_of(&(e * x)).unwrap()] = c;
        }
    }
    (reps, label)
}

/// Representatives of `H\G/K`, each the minimal element of its double coset,
/// in increasing order.
pub fn double_cosets(g: &PermGroup, h: &PermGroup, k: &PermGroup) -> Vec<Perm> {
    let mut done = vec![false; g.order()];
    let mut reps = Vec::new();
    for (i, x) in g.elements().iter().enumerate() {
        if done[i] {
            continue;
        }
        reps.push(x.clone());
        for a in h.elements() {
            let ax = a * x;
            for b in k.elements() {
                done[g.index_of(&(&ax * b)).unwrap()] = true;
            }
        }
    }
    reps
}

/// Elements of `H x K`.
pub fn double_coset_elements(h: &PermGroup, x: &Perm, k: &PermGroup) -> Vec<Perm> {
    let mut out: Vec<Perm> = h
        .elements()
        .iter()
        .flat_map(|a| {
            let ax = a * x;
            k.elements().iter().map(move |b| &ax * b)
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
