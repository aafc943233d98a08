//! Permutation groups backed by a Schreier–Sims stabilizer chain.
//!
//! Every subgroup is kept on the ambient degree, so intersections, joins and
//! conjugates compare point-wise without relabelling.

use std::collections::HashSet;

use crate::coset::CosetAction;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Largest group whose elements are ever listed explicitly.
pub const ELEMENT_CAP: usize = 20_000;
/// Largest coset space a quotient is allowed to act on.
pub const COSET_CAP: usize = 20_000;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// `transversal[beta]` maps the base point to `beta`.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
struct StabChain {
    levels: Vec<Level>,
    strong_gens: Vec<Permutation>,
}

impl StabChain {
    fn build(degree: usize, gens: &[Permutation]) -> StabChain {
        let mut chain = StabChain::default();
        let mut seen = HashSet::new();
        for g in gens {
            if g.is_identity() || !seen.insert(g.clone()) {
                continue;
            }
            if chain.fixes_base(g, chain.levels.len()) {
                let b = g.first_moved_point().unwrap();
                chain.levels.push(Level::empty(degree, b));
            }
            chain.strong_gens.push(g.clone());
        }
        for l in 0..chain.levels.len() {
            chain.refresh_level(l);
        }

        // Holt's SCHREIERSIMS: test every Schreier generator at level i; a
        // non-trivial residue is added as a strong generator and processing
        // restarts at the level where it dropped out.
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match chain.failing_schreier_generator(lvl) {
                None => i -= 1,
                Some((residue, j)) => {
                    if j == chain.levels.len() {
                        let b = residue.first_moved_point().unwrap();
                        chain.levels.push(Level::empty(degree, b));
                    }
                    chain.strong_gens.push(residue);
                    for l in lvl + 1..=j {
                        chain.refresh_level(l);
                    }
                    i = j as isize;
                }
            }
        }
        chain
    }

    fn fixes_base(&self, g: &Permutation, upto: usize) -> bool {
        self.levels[..upto]
            .iter()
            .all(|l| g.apply(l.base_point) == l.base_point)
    }

    fn level_gens(&self, l: usize) -> impl Iterator<Item = &Permutation> {
        self.strong_gens
            .iter()
            .filter(move |g| self.fixes_base(g, l))
    }

    fn refresh_level(&mut self, l: usize) {
        let gens: Vec<Permutation> = self.level_gens(l).cloned().collect();
        let level = &mut self.levels[l];
        let degree = level.transversal.len();
        let b = level.base_point;
        level.transversal = vec![None; degree];
        level.transversal[b] = Some(Permutation::identity(degree));
        level.orbit = vec![b];
        let mut k = 0;
        while k < level.orbit.len() {
            let beta = level.orbit[k];
            let u = level.transversal[beta].clone().unwrap();
            for s in &gens {
                let gamma = s.apply(beta);
                if level.transversal[gamma].is_none() {
                    level.transversal[gamma] = Some(u.compose(s));
                    level.orbit.push(gamma);
                }
            }
            k += 1;
        }
    }

    fn failing_schreier_generator(&self, l: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[l];
        let gens: Vec<&Permutation> = self.level_gens(l).collect();
        for &beta in &level.orbit {
            let u = level.transversal[beta].as_ref().unwrap();
            for s in &gens {
                let gamma = s.apply(beta);
                let v = level.transversal[gamma].as_ref().unwrap();
                let h = u.compose(s).compose(&v.inverse());
                let (residue, j) = self.strip(h);
                if j < self.levels.len() || !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    /// Sifts `h` through the chain; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, mut h: Permutation) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate() {
            let beta = h.apply(level.base_point);
            match &level.transversal[beta] {
                None => return (h, l),
                Some(u) => h = h.compose(&u.inverse()),
            }
        }
        (h, self.levels.len())
    }

    fn order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }
}

impl Level {
    fn empty(degree: usize, base_point: usize) -> Level {
        Level {
            base_point,
            transversal: vec![None; degree],
            orbit: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u128,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: StabChain::default(),
            order: 1,
        }
    }

    /// Builds the group generated by `gens` on `degree` points.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<PermGroup> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let chain = StabChain::build(degree, &generators);
        let order = chain.order().ok_or(GroupError::OrderOverflow)?;
        Ok(PermGroup {
            degree,
            generators,
            chain,
            order,
        })
    }

    pub(crate) fn from_generators_unchecked(degree: usize, gens: Vec<Permutation>) -> PermGroup {
        PermGroup::from_generators(degree, &gens).expect("generators share the ambient degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, j) = self.chain.strip(p.clone());
        j == self.chain.levels.len() && residue.is_identity()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && other.order.is_multiple_of(self.order)
            && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// True if `self` is normalized by every generator of `by`.
    pub fn is_normalized_by(&self, by: &PermGroup) -> bool {
        by.generators.iter().all(|g| {
            self.generators
                .iter()
                .all(|h| self.contains(&h.conjugate_by(g)))
        })
    }

    /// True if `n` is a normal subgroup of `self`.
    pub fn has_normal_subgroup(&self, n: &PermGroup) -> bool {
        n.is_subgroup_of(self) && n.is_normalized_by(self)
    }

    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.elements_capped(ELEMENT_CAP)
    }

    /// Every element exactly once, as products of transversal elements.
    pub fn elements_capped(&self, cap: usize) -> Result<Vec<Permutation>> {
        if self.order > cap as u128 {
            return Err(GroupError::CapExceeded {
                what: "group order",
                size: self.order,
                cap: cap as u128,
            });
        }
        let mut current = vec![self.identity()];
        for level in self.chain.levels.iter().rev() {
            let reps: Vec<&Permutation> = level
                .orbit
                .iter()
                .map(|&b| level.transversal[b].as_ref().unwrap())
                .collect();
            current = current
                .iter()
                .flat_map(|x| reps.iter().map(move |u| x.compose(u)))
                .collect();
        }
        Ok(current)
    }

    /// The group generated by `self` and `extra`.
    pub fn extended_by(&self, extra: &[Permutation]) -> PermGroup {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().filter(|g| !self.contains(g)).cloned());
        if gens.len() == self.generators.len() {
            return self.clone();
        }
        PermGroup::from_generators_unchecked(self.degree, gens)
    }

    /// Subgroup generated by an element stream, adding only elements that
    /// are not already inside.
    fn generated_incrementally<'a>(
        degree: usize,
        items: impl Iterator<Item = &'a Permutation>,
    ) -> PermGroup {
        let mut group = PermGroup::trivial(degree);
        for x in items {
            if !group.contains(x) {
                group = group.extended_by(std::slice::from_ref(x));
            }
        }
        group
    }

    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        self.check_degree(other)?;
        Ok(self.extended_by(&other.generators))
    }

    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        self.check_degree(other)?;
        let (small, big) = if self.order <= other.order {
            (self, other)
        } else {
            (other, self)
        };
        let elements = small.elements()?;
        Ok(Self::generated_incrementally(
            self.degree,
            elements.iter().filter(|x| big.contains(x)),
        ))
    }

    /// Smallest normal subgroup of `self` containing `set`.
    pub fn normal_closure(&self, set: &[Permutation]) -> Result<PermGroup> {
        if set.iter().any(|s| !self.contains(s)) {
            return Err(GroupError::NotSubgroup);
        }
        let mut closure = Self::generated_incrementally(self.degree, set.iter());
        let mut queue: Vec<Permutation> = closure.generators.clone();
        while let Some(n) = queue.pop() {
            for g in &self.generators {
                let c = n.conjugate_by(g);
                if !closure.contains(&c) {
                    closure = closure.extended_by(std::slice::from_ref(&c));
                    queue.push(c);
                }
            }
        }
        Ok(closure)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
            .expect("commutators of generators lie in the group")
    }

    /// `[self, other]` for `other` normalized by `self`.
    pub fn commutator_subgroup(&self, other: &PermGroup) -> PermGroup {
        let comms: Vec<Permutation> = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.commutator(b)))
            .filter(|c| !c.is_identity())
            .collect();
        let sup = self.extended_by(&other.generators);
        sup.normal_closure(&comms)
            .expect("commutators lie in the join")
    }

    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        let elements = self.elements()?;
        Ok(Self::generated_incrementally(
            self.degree,
            elements
                .iter()
                .filter(|g| h.generators.iter().all(|x| h.contains(&x.conjugate_by(g)))),
        ))
    }

    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup> {
        let elements = self.elements()?;
        Ok(Self::generated_incrementally(
            self.degree,
            elements
                .iter()
                .filter(|g| h.generators.iter().all(|x| x.compose(g) == g.compose(x))),
        ))
    }

    /// Intersection of all `self`-conjugates of `k`.
    pub fn core(&self, k: &PermGroup) -> Result<PermGroup> {
        if !k.is_subgroup_of(self) {
            return Err(GroupError::NotSubgroup);
        }
        let mut conjugates: Vec<PermGroup> = vec![k.clone()];
        let mut k_ = 0;
        while k_ < conjugates.len() {
            for g in &self.generators {
                let gens: Vec<Permutation> = conjugates[k_]
                    .generators
                    .iter()
                    .map(|x| x.conjugate_by(g))
                    .collect();
                let c = PermGroup::from_generators_unchecked(self.degree, gens);
                if !conjugates.iter().any(|d| d.same_group(&c)) {
                    conjugates.push(c);
                }
            }
            k_ += 1;
        }
        let mut core = k.clone();
        for c in &conjugates[1..] {
            core = core.intersection(c)?;
        }
        Ok(core)
    }

    pub fn index(&self, h: &PermGroup) -> Result<u128> {
        if !h.is_subgroup_of(self) {
            return Err(GroupError::NotSubgroup);
        }
        Ok(self.order / h.order)
    }

    /// Permutation image of `self` acting on the right cosets of `k`.
    ///
    /// The kernel of the action is the core of `k`, so the image is
    /// isomorphic to `self / core(self, k)`.
    pub fn coset_quotient_by_core(&self, k: &PermGroup) -> Result<PermGroup> {
        Ok(CosetAction::new(self, k)?.into_image())
    }

    /// Permutation representation of `self / n` for normal `n`.
    pub fn quotient(&self, n: &PermGroup) -> Result<PermGroup> {
        if !self.has_normal_subgroup(n) {
            return Err(GroupError::NotNormal);
        }
        self.coset_quotient_by_core(n)
    }

    fn check_degree(&self, other: &PermGroup) -> Result<()> {
        if self.degree != other.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn g(degree: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| parse_permutation(s, degree).unwrap())
            .collect();
        PermGroup::from_generators(degree, &gens).unwrap()
    }

    fn s4() -> PermGroup {
        g(4, &["(1 2)", "(1 2 3 4)"])
    }
    fn a4() -> PermGroup {
        g(4, &["(1 2 3)", "(2 3 4)"])
    }
    fn v4() -> PermGroup {
        g(4, &["(1 2)(3 4)", "(1 3)(2 4)"])
    }

    #[test]
    fn orders() {
        assert_eq!(s4().order(), 24);
        assert_eq!(a4().order(), 12);
        assert_eq!(PermGroup::from_generators(3, &[]).unwrap().order(), 1);
        let s8 = g(8, &["(1 2)", "(1 2 3 4 5 6 7 8)"]);
        assert_eq!(s8.order(), 40320);
        let prod = s8.transversal_sizes().iter().product::<usize>() as u128;
        assert_eq!(prod, s8.order());
    }

    #[test]
    fn mixed_degrees_rejected() {
        let a = parse_permutation("(1 2)", 3).unwrap();
        let b = parse_permutation("(1 2)", 4).unwrap();
        assert!(matches!(
            PermGroup::from_generators(3, &[a, b]),
            Err(GroupError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn membership() {
        let a4 = a4();
        assert!(a4.contains(&parse_permutation("(1 2 3)", 4).unwrap()));
        assert!(!a4.contains(&parse_permutation("(1 2)", 4).unwrap()));
        assert!(s4().contains(&Permutation::identity(4)));
    }

    #[test]
    fn element_cap_enforced() {
        let s8 = g(8, &["(1 2)", "(1 2 3 4 5 6 7 8)"]);
        assert!(s8.elements().unwrap_err().is_cap());
        assert_eq!(s8.elements_capped(50_000).unwrap().len(), 40320);
    }

    #[test]
    fn intersection_and_join() {
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let i = a4().intersection(&d8).unwrap();
        assert!(i.same_group(&v4()));
        let t = g(4, &["(1 2)"]).intersection(&g(4, &["(3 4)"])).unwrap();
        assert!(t.is_trivial());
        let j = v4().join(&g(4, &["(1 2 3)"])).unwrap();
        assert!(j.same_group(&a4()));
        assert!(s4().join(&PermGroup::trivial(4)).unwrap().same_group(&s4()));
    }

    #[test]
    fn derived_and_closures() {
        assert!(s4().derived_subgroup().same_group(&a4()));
        assert!(a4().derived_subgroup().same_group(&v4()));
        assert!(v4().derived_subgroup().is_trivial());
        let nc = s4()
            .normal_closure(&[parse_permutation("(1 2)(3 4)", 4).unwrap()])
            .unwrap();
        assert!(nc.same_group(&v4()));
        assert!(s4().normal_closure(&[]).unwrap().is_trivial());
    }

    #[test]
    fn normalizer_centralizer_core() {
        let c3 = g(4, &["(1 2 3)"]);
        assert_eq!(s4().normalizer(&c3).unwrap().order(), 6);
        assert_eq!(a4().normalizer(&c3).unwrap().order(), 3);
        assert!(a4().centralizer(&v4()).unwrap().same_group(&v4()));
        let c = s4().centralizer(&g(4, &["(1 2)"])).unwrap();
        assert!(c.same_group(&g(4, &["(1 2)", "(3 4)"])));
        let s3 = g(4, &["(1 2 3)", "(1 2)"]);
        assert!(s4().core(&s3).unwrap().is_trivial());
        assert!(s4().core(&a4()).unwrap().same_group(&a4()));
    }

    #[test]
    fn quotients() {
        assert_eq!(s4().quotient(&a4()).unwrap().order(), 2);
        let q = s4().quotient(&v4()).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        assert!(s4().quotient(&s4()).unwrap().is_trivial());
        let c3 = g(4, &["(1 2 3)"]);
        assert_eq!(s4().quotient(&c3).unwrap_err(), GroupError::NotNormal);
        assert_eq!(a4().coset_quotient_by_core(&c3).unwrap().order(), 12);
    }

    #[test]
    fn index_checks_containment() {
        assert_eq!(s4().index(&a4()).unwrap(), 2);
        assert_eq!(a4().index(&g(4, &["(1 2 3)"])).unwrap(), 4);
        assert_eq!(
            a4().index(&g(4, &["(1 2)"])).unwrap_err(),
            GroupError::NotSubgroup
        );
    }
}
