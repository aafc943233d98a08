//! Brute-force E_U test and the structural classification checkers.
//!
//! The structural side describes a non-supersoluble group `G` through its
//! supersoluble residual `D` and a complement `H`. Both directions are
//! checked: a group is an E_U group exactly when some complement satisfies
//! every condition, and any disagreement with the brute-force status scan is
//! reported as a violation.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, is_prime_power};
use crate::formations::{
    is_abelian_section, is_miller_moreno_section, is_nilpotent, is_soluble_section,
    is_supersoluble, is_supersoluble_section, residual, FormationTag, Section,
};
use crate::lattice::{NodeId, SubgroupLattice};
use crate::subnorm::{
    is_carter, is_gaschutz, no_prime_index_edge_above, status_all_with, ChainEdgeSet, Criterion,
    Status, SubgroupStatus,
};

/// A lattice node as it appears in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRef {
    pub id: NodeId,
    pub order: usize,
    pub class: usize,
    pub generators: Vec<String>,
}

impl NodeRef {
    pub fn new(l: &SubgroupLattice, id: NodeId) -> NodeRef {
        NodeRef {
            id,
            order: l.order(id),
            class: l.class_of(id),
            generators: l
                .generator_perms(id)
                .iter()
                .map(|p| p.to_string())
                .collect(),
        }
    }
}

fn describe(l: &SubgroupLattice, id: NodeId) -> String {
    format!(
        "node {} of order {} (class {})",
        id,
        l.order(id),
        l.class_of(id)
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub pass: bool,
    pub witness: Option<String>,
}

impl ConditionResult {
    fn ok() -> Self {
        ConditionResult {
            pass: true,
            witness: None,
        }
    }

    fn fail(witness: impl Into<String>) -> Self {
        ConditionResult {
            pass: false,
            witness: Some(witness.into()),
        }
    }

    fn check(pass: bool, witness: impl FnOnce() -> String) -> Self {
        if pass {
            Self::ok()
        } else {
            Self::fail(witness())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    ConfirmsA,
    ConfirmsB,
    NotApplicable,
    Violation(String),
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Violation(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteEu {
    /// False for supersoluble groups, which are excluded by definition.
    pub applicable: bool,
    pub holds: bool,
    /// A non-identity proper subgroup that is neither U-subnormal nor
    /// U-abnormal.
    pub witness: Option<NodeRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremAReport {
    pub decomposition_found: bool,
    pub complements_tried: usize,
    /// The complement the conditions were evaluated for: the first that
    /// passes all of them, otherwise the first complement.
    pub complement: Option<NodeRef>,
    pub conditions: BTreeMap<String, ConditionResult>,
    pub structural: bool,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremBReport {
    pub phi_order: usize,
    pub brute_holds: bool,
    pub brute_witness: Option<NodeRef>,
    pub complement: Option<NodeRef>,
    pub conditions: BTreeMap<String, ConditionResult>,
    /// Structural side with `HΦ/Φ` tested for the Gaschütz property in `G/Φ`.
    pub structural: bool,
    /// Structural side with `HΦ` tested for the Gaschütz property in `G`.
    pub structural_literal: bool,
    pub verdict: Verdict,
    pub literal_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub name: String,
    pub order: usize,
    pub degree: usize,
    pub subgroups: usize,
    pub classes: usize,
    pub soluble: bool,
    pub supersoluble: bool,
    pub d_order: usize,
    pub d_nilpotent: bool,
    pub frattini_order: usize,
    pub brute_eu: BruteEu,
    pub theorem_a: TheoremAReport,
    pub theorem_b: TheoremBReport,
    pub mismatches: Vec<String>,
}

impl TheoremReport {
    pub fn has_violation(&self) -> bool {
        self.theorem_a.verdict.is_violation() || self.theorem_b.verdict.is_violation()
    }
}

/// Shared facts about one lattice used by both checkers.
pub struct Analysis<'a> {
    pub lattice: &'a SubgroupLattice,
    /// Edge sets in the order of `Criterion::ALL`.
    pub edges: Vec<ChainEdgeSet>,
    pub status: Vec<SubgroupStatus>,
    pub residual: NodeId,
    pub frattini: NodeId,
    pub soluble: bool,
    pub supersoluble: bool,
}

impl<'a> Analysis<'a> {
    pub fn new(l: &'a SubgroupLattice) -> Analysis<'a> {
        let edges: Vec<ChainEdgeSet> = Criterion::ALL
            .iter()
            .map(|&c| ChainEdgeSet::new(l, c))
            .collect();
        let status = status_all_with(l, &edges);
        let top = l.top();
        Analysis {
            lattice: l,
            edges,
            status,
            residual: residual(l, top, FormationTag::Supersoluble),
            frattini: l.frattini(),
            soluble: is_soluble_section(l, Section::whole(l, top)),
            supersoluble: is_supersoluble(l, top),
        }
    }

    pub fn edge_set(&self, c: Criterion) -> &ChainEdgeSet {
        self.edges
            .iter()
            .find(|e| e.criterion == c)
            .expect("edge set for each criterion")
    }

    /// First non-identity proper node in `pool` that is U-neither.
    fn neither_in(&self, pool: impl IntoIterator<Item = NodeId>) -> Option<NodeId> {
        let l = self.lattice;
        pool.into_iter()
            .filter(|&h| h != l.trivial() && h != l.top())
            .find(|&h| self.status[h].u_status == Status::Neither)
    }

    pub fn brute_eu(&self) -> BruteEu {
        let l = self.lattice;
        if self.supersoluble {
            return BruteEu {
                applicable: false,
                holds: false,
                witness: None,
            };
        }
        let witness = self.neither_in(0..l.len());
        BruteEu {
            applicable: true,
            holds: witness.is_none(),
            witness: witness.map(|w| NodeRef::new(l, w)),
        }
    }

    fn cond_i(&self, h: NodeId) -> ConditionResult {
        let l = self.lattice;
        let order = l.order(h);
        let index = l.order(l.top()) / order;
        if order.gcd(&index) != 1 {
            return ConditionResult::fail(format!("{} is not a Hall subgroup", describe(l, h)));
        }
        if !is_gaschutz(l, h) {
            return ConditionResult::fail(format!("{} is not a Gaschütz subgroup", describe(l, h)));
        }
        ConditionResult::check(!is_nilpotent(l, h) || is_carter(l, h), || {
            format!("{} is nilpotent but not a Carter subgroup", describe(l, h))
        })
    }

    fn cond_ii(&self) -> ConditionResult {
        let l = self.lattice;
        let series = l
            .chief_series(Some(self.residual))
            .expect("residual is normal");
        let below = series
            .terms
            .iter()
            .position(|&t| t == self.residual)
            .expect("series passes through the residual");
        match (0..below).find(|&i| series.factor_cyclic[i]) {
            None => ConditionResult::ok(),
            Some(i) => ConditionResult::fail(format!(
                "cyclic chief factor of order {} between {} and {}",
                series.factor_orders[i],
                describe(l, series.terms[i]),
                describe(l, series.terms[i + 1])
            )),
        }
    }

    fn cond_iii(&self) -> ConditionResult {
        let l = self.lattice;
        let dg = l.join(self.residual, l.derived(l.top()));
        let index = l.order(l.top()) / l.order(dg);
        ConditionResult::check(is_prime_power(index as u64), || {
            format!("|G:DG'| = {index} is not a prime power")
        })
    }

    fn cond_iv(&self, h: NodeId) -> ConditionResult {
        let l = self.lattice;
        let order = l.order(h) as u64;
        let cyclic_high_power = l.is_cyclic(h) && is_prime_power(order) && !is_prime(order);
        ConditionResult::check(cyclic_high_power || is_nilpotent(l, self.residual), || {
            format!(
                "complement of order {} is not cyclic of order q^n with n > 1, and D is not nilpotent",
                order
            )
        })
    }

    fn cond_v(&self, h: NodeId) -> ConditionResult {
        let l = self.lattice;
        let hphi = l.join(h, self.frattini);
        let s = Section {
            top: hphi,
            bottom: self.frattini,
        };
        let order = s.order(l);
        let pass = order == 1
            || is_miller_moreno_section(l, s)
            || (is_abelian_section(l, s) && is_prime_power(order as u64));
        ConditionResult::check(pass, || {
            format!(
                "HΦ(G)/Φ(G) of order {order} is neither Miller-Moreno nor abelian of prime-power order"
            )
        })
    }

    fn cond_vi(&self) -> ConditionResult {
        let l = self.lattice;
        match l
            .supernodes(self.residual)
            .into_iter()
            .filter(|&x| x != l.top())
            .find(|&x| !is_supersoluble(l, x))
        {
            None => ConditionResult::ok(),
            Some(x) => ConditionResult::fail(format!(
                "{} contains D and is not supersoluble",
                describe(l, x)
            )),
        }
    }

    fn complements(&self) -> Vec<NodeId> {
        self.lattice.complements(self.residual)
    }

    fn no_complement() -> ConditionResult {
        ConditionResult::fail("D has no complement")
    }

    pub fn theorem_a(&self, brute: &BruteEu) -> TheoremAReport {
        let l = self.lattice;
        let complements = self.complements();
        let shared = [
            ("ii", self.cond_ii()),
            ("iii", self.cond_iii()),
            ("vi", self.cond_vi()),
        ];
        let per_complement = |h: NodeId| {
            let mut c: BTreeMap<String, ConditionResult> = shared
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect();
            c.insert("i".into(), self.cond_i(h));
            c.insert("iv".into(), self.cond_iv(h));
            c.insert("v".into(), self.cond_v(h));
            c
        };
        let mut chosen: Option<(NodeId, BTreeMap<String, ConditionResult>)> = None;
        for &h in &complements {
            let c = per_complement(h);
            let all = c.values().all(|r| r.pass);
            if chosen.is_none() || all {
                chosen = Some((h, c));
            }
            if all {
                break;
            }
        }
        let (complement, conditions) = match chosen {
            Some((h, c)) => (Some(h), c),
            None => {
                let mut c: BTreeMap<String, ConditionResult> = shared
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect();
                for k in ["i", "iv", "v"] {
                    c.insert(k.into(), Self::no_complement());
                }
                (None, c)
            }
        };
        let structural = complement.is_some() && conditions.values().all(|r| r.pass);
        let verdict = if self.supersoluble {
            Verdict::NotApplicable
        } else if structural == brute.holds {
            Verdict::ConfirmsA
        } else {
            Verdict::Violation(format!(
                "brute-force E_U = {}, structural conditions = {}",
                brute.holds, structural
            ))
        };
        TheoremAReport {
            decomposition_found: !complements.is_empty(),
            complements_tried: complements.len(),
            complement: complement.map(|h| NodeRef::new(l, h)),
            conditions,
            structural,
            verdict,
        }
    }

    /// `Φ(G) ∩ D`.
    pub fn theorem_b_phi(&self) -> NodeId {
        self.lattice.meet(self.frattini, self.residual)
    }

    pub fn theorem_b(&self) -> TheoremBReport {
        let l = self.lattice;
        let phi = self.theorem_b_phi();
        let brute_witness = self.neither_in(l.supernodes(phi));
        let brute_holds = brute_witness.is_none();

        let shared = [
            ("iii", self.cond_iii()),
            ("vi", self.cond_vi()),
            (
                "soluble",
                ConditionResult::check(self.soluble, || "G is not soluble".into()),
            ),
        ];
        let evaluate = |h: NodeId| {
            let mut c: BTreeMap<String, ConditionResult> = shared
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect();
            let order = l.order(h);
            c.insert(
                "hall".into(),
                ConditionResult::check(order.gcd(&(l.order(l.top()) / order)) == 1, || {
                    format!("{} is not a Hall subgroup", describe(l, h))
                }),
            );
            let hphi = l.join(h, phi);
            let quotient = is_supersoluble_section(
                l,
                Section {
                    top: hphi,
                    bottom: phi,
                },
            ) && no_prime_index_edge_above(l, hphi);
            c.insert(
                "gaschutz_quotient".into(),
                ConditionResult::check(quotient, || {
                    format!(
                        "HΦ/Φ is not a Gaschütz subgroup of G/Φ ({})",
                        describe(l, hphi)
                    )
                }),
            );
            c.insert(
                "gaschutz_literal".into(),
                ConditionResult::check(is_gaschutz(l, hphi), || {
                    format!("HΦ is not a Gaschütz subgroup of G ({})", describe(l, hphi))
                }),
            );
            c.insert("iv".into(), self.cond_iv(h));
            c.insert("v".into(), self.cond_v(h));
            c
        };
        let passes = |c: &BTreeMap<String, ConditionResult>, skip: &str| {
            c.iter()
                .filter(|(k, _)| k.as_str() != skip)
                .all(|(_, r)| r.pass)
        };

        let complements = self.complements();
        let evaluated: Vec<(NodeId, BTreeMap<String, ConditionResult>)> =
            complements.iter().map(|&h| (h, evaluate(h))).collect();
        let quotient_pick = evaluated
            .iter()
            .position(|(_, c)| passes(c, "gaschutz_literal"));
        let structural = quotient_pick.is_some();
        let structural_literal = evaluated
            .iter()
            .any(|(_, c)| passes(c, "gaschutz_quotient"));
        let (complement, conditions) =
            match quotient_pick.or(if evaluated.is_empty() { None } else { Some(0) }) {
                Some(i) => (Some(evaluated[i].0), evaluated[i].1.clone()),
                None => {
                    let mut c: BTreeMap<String, ConditionResult> = shared
                        .iter()
                        .map(|(k, v)| (k.to_string(), v.clone()))
                        .collect();
                    for k in ["hall", "gaschutz_quotient", "gaschutz_literal", "iv", "v"] {
                        c.insert(k.into(), Self::no_complement());
                    }
                    (None, c)
                }
            };
        let verdict = if self.supersoluble {
            Verdict::NotApplicable
        } else if structural == brute_holds {
            Verdict::ConfirmsB
        } else {
            Verdict::Violation(format!(
                "brute-force side = {brute_holds}, structural side = {structural}"
            ))
        };
        TheoremBReport {
            phi_order: l.order(phi),
            brute_holds,
            brute_witness: brute_witness.map(|w| NodeRef::new(l, w)),
            complement: complement.map(|h| NodeRef::new(l, h)),
            conditions,
            structural,
            structural_literal,
            verdict,
            literal_agrees: structural_literal == brute_holds,
        }
    }

    pub fn report(&self, name: &str) -> TheoremReport {
        let l = self.lattice;
        let brute = self.brute_eu();
        TheoremReport {
            name: name.to_string(),
            order: l.order(l.top()),
            degree: l.group().degree(),
            subgroups: l.len(),
            classes: l.classes().len(),
            soluble: self.soluble,
            supersoluble: self.supersoluble,
            d_order: l.order(self.residual),
            d_nilpotent: is_nilpotent(l, self.residual),
            frattini_order: l.order(self.frattini),
            theorem_a: self.theorem_a(&brute),
            theorem_b: self.theorem_b(),
            brute_eu: brute,
            mismatches: Vec::new(),
        }
    }
}

pub fn brute_eu(l: &SubgroupLattice) -> BruteEu {
    Analysis::new(l).brute_eu()
}

pub fn check_theorem_a(l: &SubgroupLattice) -> TheoremAReport {
    let a = Analysis::new(l);
    a.theorem_a(&a.brute_eu())
}

pub fn check_theorem_b(l: &SubgroupLattice) -> TheoremBReport {
    Analysis::new(l).theorem_b()
}

pub fn analyze(name: &str, l: &SubgroupLattice) -> TheoremReport {
    Analysis::new(l).report(name)
}
