use std::collections::HashMap;

use crate::error::{GroupError, Result};
use crate::group::{PermGroup, COSET_CAP};
use crate::perm::Permutation;

/// The action of a group on the right cosets of a subgroup.
///
/// Cosets are numbered in discovery order starting with the subgroup itself
/// at 0. Each coset is keyed by its lexicographically least element.
#[derive(Debug, Clone)]
pub struct CosetAction {
    sub_elements: Vec<Permutation>,
    reps: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    image: PermGroup,
}

impl CosetAction {
    pub fn new(group: &PermGroup, sub: &PermGroup) -> Result<CosetAction> {
        if !sub.is_subgroup_of(group) {
            return Err(GroupError::NotSubgroup);
        }
        let index = group.order() / sub.order();
        if index > COSET_CAP as u128 {
            return Err(GroupError::CapExceeded {
                what: "coset space",
                size: index,
                cap: COSET_CAP as u128,
            });
        }
        let sub_elements = sub.elements()?;
        let mut action = CosetAction {
            sub_elements,
            reps: Vec::new(),
            lookup: HashMap::new(),
            image: PermGroup::trivial(index as usize),
        };
        let id = group.identity();
        let key = action.canonical(&id);
        action.lookup.insert(key, 0);
        action.reps.push(id);
        let mut k = 0;
        while k < action.reps.len() {
            for g in group.generators() {
                let y = action.reps[k].compose(g);
                let key = action.canonical(&y);
                if !action.lookup.contains_key(&key) {
                    action.lookup.insert(key, action.reps.len());
                    action.reps.push(y);
                }
            }
            k += 1;
        }
        debug_assert_eq!(action.reps.len() as u128, index);
        let gens: Vec<Permutation> = group
            .generators()
            .iter()
            .map(|g| action.image_of(g))
            .collect();
        action.image = PermGroup::from_generators_unchecked(action.reps.len(), gens);
        Ok(action)
    }

    fn canonical(&self, x: &Permutation) -> Permutation {
        self.sub_elements
            .iter()
            .map(|k| k.compose(x))
            .min()
            .expect("subgroup contains the identity")
    }

    pub fn num_cosets(&self) -> usize {
        self.reps.len()
    }

    /// Index of the coset containing `x`.
    pub fn coset_of(&self, x: &Permutation) -> usize {
        self.lookup[&self.canonical(x)]
    }

    /// The permutation `g` induces on the cosets.
    pub fn image_of(&self, g: &Permutation) -> Permutation {
        let images: Vec<u32> = self
            .reps
            .iter()
            .map(|r| self.coset_of(&r.compose(g)) as u32)
            .collect();
        Permutation::from_images(images).expect("group elements permute cosets")
    }

    pub fn image_of_subgroup(&self, h: &PermGroup) -> PermGroup {
        let gens: Vec<Permutation> = h.generators().iter().map(|g| self.image_of(g)).collect();
        PermGroup::from_generators_unchecked(self.num_cosets(), gens)
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn into_image(self) -> PermGroup {
        self.image
    }
}
