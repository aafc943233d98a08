//! Membership tests for the nilpotent and supersoluble formations.
//!
//! Lattice predicates work on sections `M/N` of the ambient group, with `M`
//! and `N` lattice nodes and `N` normal in `M`. Subgroups of `M/N` are the
//! nodes between `N` and `M`, so a quotient never has to be built. A plain
//! node `M` is the section `M/1`.

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, is_prime_power, prime_divisors};
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::lattice::{NodeId, SubgroupLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormationTag {
    Nilpotent,
    Supersoluble,
}

impl FormationTag {
    pub fn symbol(self) -> &'static str {
        match self {
            FormationTag::Nilpotent => "N",
            FormationTag::Supersoluble => "U",
        }
    }
}

/// The factor group `top / bottom` of two lattice nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Section {
    pub top: NodeId,
    pub bottom: NodeId,
}

impl Section {
    pub fn new(l: &SubgroupLattice, top: NodeId, bottom: NodeId) -> Result<Section> {
        if !l.is_normal_in(bottom, top) {
            return Err(GroupError::NotNormal);
        }
        Ok(Section { top, bottom })
    }

    pub fn whole(l: &SubgroupLattice, node: NodeId) -> Section {
        Section {
            top: node,
            bottom: l.trivial(),
        }
    }

    pub fn order(&self, l: &SubgroupLattice) -> usize {
        l.order(self.top) / l.order(self.bottom)
    }

    /// Maximal subgroups of the section, as nodes of the lattice.
    pub fn maximal_subgroups<'a>(
        &self,
        l: &'a SubgroupLattice,
    ) -> impl Iterator<Item = NodeId> + 'a {
        let bottom = self.bottom;
        l.maximal_in(self.top)
            .iter()
            .copied()
            .filter(move |&k| l.is_subgroup(bottom, k))
    }
}

pub fn is_abelian(g: &PermGroup) -> bool {
    g.is_abelian()
}

pub fn is_p_group(g: &PermGroup, p: u64) -> bool {
    g.order() == 1 || (is_prime(p) && prime_divisors(g.order() as u64) == [p])
}

/// Derived series reaches the trivial group.
pub fn is_soluble(g: &PermGroup) -> bool {
    let mut cur = g.clone();
    loop {
        if cur.is_trivial() {
            return true;
        }
        let next = cur.derived_subgroup();
        if next.order() == cur.order() {
            return false;
        }
        cur = next;
    }
}

pub fn is_abelian_section(l: &SubgroupLattice, s: Section) -> bool {
    l.is_subgroup(l.derived(s.top), s.bottom)
}

/// Every chief factor has prime-power order.
pub fn is_soluble_section(l: &SubgroupLattice, s: Section) -> bool {
    l.chief_series_section(s.top, s.bottom, None)
        .expect("section bottom is normal")
        .factor_orders
        .iter()
        .all(|&o| is_prime_power(o as u64))
}

/// Every Sylow subgroup of the section is normal.
pub fn is_nilpotent_section(l: &SubgroupLattice, s: Section) -> bool {
    prime_divisors(s.order(l) as u64).into_iter().all(|p| {
        let sn = l.join(l.sylow_in(s.top, p), s.bottom);
        l.is_normal_in(sn, s.top)
    })
}

/// Every maximal subgroup of the section is normal.
pub fn is_nilpotent_by_maximals(l: &SubgroupLattice, s: Section) -> bool {
    s.maximal_subgroups(l).all(|k| l.is_normalized_by(k, s.top))
}

/// Every chief factor has prime order.
pub fn is_supersoluble_section(l: &SubgroupLattice, s: Section) -> bool {
    let by_chief = l
        .chief_series_section(s.top, s.bottom, None)
        .expect("section bottom is normal")
        .factor_orders
        .iter()
        .all(|&o| is_prime(o as u64));
    debug_assert_eq!(by_chief, is_supersoluble_huppert(l, s));
    by_chief
}

/// Every maximal subgroup has prime index.
pub fn is_supersoluble_huppert(l: &SubgroupLattice, s: Section) -> bool {
    s.maximal_subgroups(l)
        .all(|k| is_prime((l.order(s.top) / l.order(k)) as u64))
}

pub fn in_formation_section(l: &SubgroupLattice, s: Section, f: FormationTag) -> bool {
    match f {
        FormationTag::Nilpotent => is_nilpotent_section(l, s),
        FormationTag::Supersoluble => is_supersoluble_section(l, s),
    }
}

pub fn is_nilpotent(l: &SubgroupLattice, m: NodeId) -> bool {
    is_nilpotent_section(l, Section::whole(l, m))
}

pub fn is_supersoluble(l: &SubgroupLattice, m: NodeId) -> bool {
    is_supersoluble_section(l, Section::whole(l, m))
}

pub fn in_formation(l: &SubgroupLattice, m: NodeId, f: FormationTag) -> bool {
    in_formation_section(l, Section::whole(l, m), f)
}

/// `M^F`: intersection of the normal subgroups `N` of `M` with `M/N` in `F`.
pub fn residual(l: &SubgroupLattice, m: NodeId, f: FormationTag) -> NodeId {
    let qualifying: Vec<NodeId> = l
        .normal_interval(l.trivial(), m)
        .into_iter()
        .filter(|&n| in_formation_section(l, Section { top: m, bottom: n }, f))
        .collect();
    let mut set = l.elements(m).clone();
    for &n in &qualifying {
        set.intersect_with(l.elements(n));
    }
    let r = l.id_of(&set).expect("intersection of subgroups is a node");
    debug_assert!(qualifying.contains(&r));
    r
}

/// Non-abelian with every proper subgroup abelian.
pub fn is_miller_moreno_section(l: &SubgroupLattice, s: Section) -> bool {
    !is_abelian_section(l, s)
        && s.maximal_subgroups(l).all(|k| {
            is_abelian_section(
                l,
                Section {
                    top: k,
                    bottom: s.bottom,
                },
            )
        })
}

pub fn is_miller_moreno(l: &SubgroupLattice, m: NodeId) -> bool {
    is_miller_moreno_section(l, Section::whole(l, m))
}

/// Not in `F`, but every proper subgroup is.
pub fn is_critical_section(l: &SubgroupLattice, s: Section, f: FormationTag) -> bool {
    !in_formation_section(l, s, f)
        && s.maximal_subgroups(l).all(|k| {
            in_formation_section(
                l,
                Section {
                    top: k,
                    bottom: s.bottom,
                },
                f,
            )
        })
}

pub fn is_critical(l: &SubgroupLattice, m: NodeId, f: FormationTag) -> bool {
    is_critical_section(l, Section::whole(l, m), f)
}

pub fn is_schmidt(l: &SubgroupLattice, m: NodeId) -> bool {
    is_critical(l, m, FormationTag::Nilpotent)
}

/// A minimal normal subgroup `R` of the ambient group is supersolubly
/// central exactly when `|R|` is prime.
pub fn is_u_central(l: &SubgroupLattice, r: NodeId) -> Result<bool> {
    if !l.minimal_normal_subgroups().contains(&r) {
        return Err(GroupError::NotMinimalNormal);
    }
    Ok(is_prime(l.order(r) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, lookup};

    fn lat(name: &str) -> SubgroupLattice {
        SubgroupLattice::new(&build(&lookup(name).unwrap()).unwrap()).unwrap()
    }

    fn group(name: &str) -> PermGroup {
        build(&lookup(name).unwrap()).unwrap()
    }

    #[test]
    fn plain_group_predicates() {
        assert!(is_abelian(&group("C6")));
        assert!(is_soluble(&group("S4")));
        assert!(!is_soluble(&group("A5")));
        assert!(is_p_group(&group("Q8"), 2));
        assert!(!is_p_group(&group("S3"), 3));
    }

    #[test]
    fn nilpotency() {
        let q8 = lat("Q8");
        assert!(is_nilpotent(&q8, q8.top()));
        let s3 = lat("S3");
        assert!(!is_nilpotent(&s3, s3.top()));
        let s4 = lat("S4");
        let t = Section::whole(&s4, s4.top());
        assert_eq!(
            is_nilpotent_section(&s4, t),
            is_nilpotent_by_maximals(&s4, t)
        );
    }

    #[test]
    fn supersolubility() {
        let s3 = lat("S3");
        assert!(is_supersoluble(&s3, s3.top()));
        let a4 = lat("A4");
        assert!(!is_supersoluble(&a4, a4.top()));
        let s4 = lat("S4");
        let v4 = s4.fitting();
        // S4 / V4 is S3.
        assert!(is_supersoluble_section(
            &s4,
            Section::new(&s4, s4.top(), v4).unwrap()
        ));
    }

    #[test]
    fn residuals() {
        let a4 = lat("A4");
        let d = residual(&a4, a4.top(), FormationTag::Supersoluble);
        assert_eq!(a4.order(d), 4);
        assert_eq!(a4.order(a4.top()) / a4.order(d), 3);
        let s4 = lat("S4");
        assert_eq!(
            s4.order(residual(&s4, s4.top(), FormationTag::Supersoluble)),
            4
        );
        assert_eq!(
            s4.order(residual(&s4, s4.top(), FormationTag::Nilpotent)),
            12
        );
        let s3 = lat("S3");
        assert_eq!(
            residual(&s3, s3.top(), FormationTag::Supersoluble),
            s3.trivial()
        );
    }

    #[test]
    fn critical_groups() {
        let s3 = lat("S3");
        assert!(is_miller_moreno(&s3, s3.top()));
        assert!(is_schmidt(&s3, s3.top()));
        let a4 = lat("A4");
        assert!(is_critical(&a4, a4.top(), FormationTag::Supersoluble));
        let q8 = lat("Q8");
        assert!(!is_schmidt(&q8, q8.top()));
        assert!(is_miller_moreno(&q8, q8.top()));
    }

    #[test]
    fn u_central() {
        let s3 = lat("S3");
        let c3 = s3.minimal_normal_subgroups()[0];
        assert!(is_u_central(&s3, c3).unwrap());
        let a4 = lat("A4");
        let v4 = a4.minimal_normal_subgroups()[0];
        assert!(!is_u_central(&a4, v4).unwrap());
        assert_eq!(
            is_u_central(&a4, a4.top()),
            Err(GroupError::NotMinimalNormal)
        );
    }
}
