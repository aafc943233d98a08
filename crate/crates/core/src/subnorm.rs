//! Chain subnormality and abnormality over a subgroup lattice.
//!
//! A criterion marks some maximal inclusions `K < L` as admissible. `H` is
//! chain-subnormal when admissible edges lead from `H` up to the ambient
//! group, and chain-abnormal when no admissible edge starts at or above `H`.
//! A pair `K <= L` of prime index always has `K` maximal in `L`, so scanning
//! lattice edges sees every prime-index pair.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::formations::{
    in_formation_section, is_nilpotent, is_supersoluble, FormationTag, Section,
};
use crate::lattice::{Edge, NodeId, SubgroupLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// `|L:K|` is prime.
    PrimeIndex,
    /// `L / core_L(K)` lies in the formation.
    QuotientByCoreIn(FormationTag),
}

impl Criterion {
    pub const ALL: [Criterion; 3] = [
        Criterion::PrimeIndex,
        Criterion::QuotientByCoreIn(FormationTag::Supersoluble),
        Criterion::QuotientByCoreIn(FormationTag::Nilpotent),
    ];

    pub fn label(self) -> &'static str {
        match self {
            Criterion::PrimeIndex => "P",
            Criterion::QuotientByCoreIn(FormationTag::Supersoluble) => "U",
            Criterion::QuotientByCoreIn(FormationTag::Nilpotent) => "N",
        }
    }
}

/// Whether the maximal inclusion `K < L` passes the criterion.
pub fn edge_admissible(l: &SubgroupLattice, e: &Edge, c: Criterion) -> bool {
    match c {
        Criterion::PrimeIndex => is_prime(e.index as u64),
        Criterion::QuotientByCoreIn(f) => {
            let core = l.core_in(e.sub, e.sup);
            in_formation_section(
                l,
                Section {
                    top: e.sup,
                    bottom: core,
                },
                f,
            )
        }
    }
}

/// The admissible edges of a lattice under one criterion.
#[derive(Debug, Clone)]
pub struct ChainEdgeSet {
    pub criterion: Criterion,
    admissible: HashSet<(NodeId, NodeId)>,
}

impl ChainEdgeSet {
    pub fn new(l: &SubgroupLattice, criterion: Criterion) -> ChainEdgeSet {
        let admissible = l
            .edges()
            .iter()
            .filter(|e| edge_admissible(l, e, criterion))
            .map(|e| (e.sub, e.sup))
            .collect();
        ChainEdgeSet {
            criterion,
            admissible,
        }
    }

    pub fn admits(&self, sub: NodeId, sup: NodeId) -> bool {
        self.admissible.contains(&(sub, sup))
    }

    pub fn len(&self) -> usize {
        self.admissible.len()
    }

    pub fn is_empty(&self) -> bool {
        self.admissible.is_empty()
    }

    /// Nodes joined to the ambient group by an admissible chain.
    pub fn subnormal_nodes(&self, l: &SubgroupLattice) -> Vec<bool> {
        let mut reach = vec![false; l.len()];
        reach[l.top()] = true;
        let mut stack = vec![l.top()];
        while let Some(x) = stack.pop() {
            for &k in l.maximal_in(x) {
                if !reach[k] && self.admits(k, x) {
                    reach[k] = true;
                    stack.push(k);
                }
            }
        }
        reach
    }

    /// For each node, whether some admissible edge starts at or above it.
    pub fn obstructed_nodes(&self, l: &SubgroupLattice) -> Vec<bool> {
        let mut bad = vec![false; l.len()];
        // Ids ascend with order, so covers are settled before their subgroups.
        for k in (0..l.len()).rev() {
            bad[k] = l
                .covers(k)
                .iter()
                .any(|&sup| self.admits(k, sup) || bad[sup]);
        }
        bad
    }

    /// An admissible edge `(K, L)` with `h <= K`, if one exists.
    pub fn edge_above(&self, l: &SubgroupLattice, h: NodeId) -> Option<Edge> {
        l.edges()
            .iter()
            .find(|e| self.admits(e.sub, e.sup) && l.is_subgroup(h, e.sub))
            .copied()
    }

    /// Nodes reachable upward from `h` along admissible edges, `h` included.
    pub fn upward_closure(&self, l: &SubgroupLattice, h: NodeId) -> Vec<NodeId> {
        let mut seen = vec![false; l.len()];
        seen[h] = true;
        let mut stack = vec![h];
        while let Some(x) = stack.pop() {
            for &sup in l.covers(x) {
                if !seen[sup] && self.admits(x, sup) {
                    seen[sup] = true;
                    stack.push(sup);
                }
            }
        }
        (0..l.len()).filter(|&x| seen[x]).collect()
    }
}

pub fn is_chain_subnormal(l: &SubgroupLattice, h: NodeId, e: &ChainEdgeSet) -> bool {
    e.subnormal_nodes(l)[h]
}

/// `h` is joined to `k` by admissible edges (admissibility of `K < L` does
/// not depend on the ambient group).
pub fn is_chain_subnormal_in(l: &SubgroupLattice, h: NodeId, k: NodeId, e: &ChainEdgeSet) -> bool {
    if !l.is_subgroup(h, k) {
        return false;
    }
    let mut seen = vec![false; l.len()];
    seen[h] = true;
    let mut stack = vec![h];
    while let Some(x) = stack.pop() {
        if x == k {
            return true;
        }
        for &sup in l.covers(x) {
            if !seen[sup] && e.admits(x, sup) && l.is_subgroup(sup, k) {
                seen[sup] = true;
                stack.push(sup);
            }
        }
    }
    false
}

/// Meaningful for proper `h` only; the ambient group has no edge above it
/// and reports `true`.
pub fn is_chain_abnormal(l: &SubgroupLattice, h: NodeId, e: &ChainEdgeSet) -> bool {
    !e.obstructed_nodes(l)[h]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Subnormal,
    Abnormal,
    Neither,
    WholeGroup,
}

/// Why a node is neither subnormal nor abnormal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeitherWitness {
    /// An admissible edge `(K, L, |L:K|)` with the node inside `K`.
    pub edge: (NodeId, NodeId, usize),
    /// Every node reachable upward along admissible edges; the ambient
    /// group is not among them.
    pub reachable: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupStatus {
    pub id: NodeId,
    pub p_status: Status,
    pub u_status: Status,
    pub n_status: Status,
    pub witnesses: BTreeMap<String, NeitherWitness>,
}

impl SubgroupStatus {
    pub fn get(&self, c: Criterion) -> Status {
        match c {
            Criterion::PrimeIndex => self.p_status,
            Criterion::QuotientByCoreIn(FormationTag::Supersoluble) => self.u_status,
            Criterion::QuotientByCoreIn(FormationTag::Nilpotent) => self.n_status,
        }
    }
}

/// Statuses of every node under one edge set.
pub fn statuses(l: &SubgroupLattice, e: &ChainEdgeSet) -> Vec<Status> {
    let sub = e.subnormal_nodes(l);
    let bad = e.obstructed_nodes(l);
    (0..l.len())
        .map(|h| {
            if h == l.top() {
                Status::WholeGroup
            } else if sub[h] {
                debug_assert!(bad[h], "a chain starts with an admissible edge");
                Status::Subnormal
            } else if !bad[h] {
                Status::Abnormal
            } else {
                Status::Neither
            }
        })
        .collect()
}

/// Statuses of every node under the prime-index, supersoluble and nilpotent
/// criteria.
pub fn status_all(l: &SubgroupLattice) -> Vec<SubgroupStatus> {
    let sets: Vec<ChainEdgeSet> = Criterion::ALL
        .iter()
        .map(|&c| ChainEdgeSet::new(l, c))
        .collect();
    status_all_with(l, &sets)
}

/// As [`status_all`], reusing edge sets built for `Criterion::ALL`.
pub fn status_all_with(l: &SubgroupLattice, sets: &[ChainEdgeSet]) -> Vec<SubgroupStatus> {
    let per: Vec<Vec<Status>> = sets.iter().map(|e| statuses(l, e)).collect();
    (0..l.len())
        .map(|h| {
            let mut witnesses = BTreeMap::new();
            for (e, st) in sets.iter().zip(&per) {
                if st[h] == Status::Neither {
                    let edge = e
                        .edge_above(l, h)
                        .expect("obstructed node has an edge above");
                    witnesses.insert(
                        e.criterion.label().to_string(),
                        NeitherWitness {
                            edge: (edge.sub, edge.sup, edge.index),
                            reachable: e.upward_closure(l, h),
                        },
                    );
                }
            }
            let find = |c: Criterion| {
                sets.iter()
                    .position(|e| e.criterion == c)
                    .map(|i| per[i][h])
                    .expect("edge set for each criterion")
            };
            SubgroupStatus {
                id: h,
                p_status: find(Criterion::PrimeIndex),
                u_status: find(Criterion::QuotientByCoreIn(FormationTag::Supersoluble)),
                n_status: find(Criterion::QuotientByCoreIn(FormationTag::Nilpotent)),
                witnesses,
            }
        })
        .collect()
}

/// Supersoluble, with no prime-index edge at or above `h`.
pub fn is_gaschutz(l: &SubgroupLattice, h: NodeId) -> bool {
    is_supersoluble(l, h) && no_prime_index_edge_above(l, h)
}

pub fn no_prime_index_edge_above(l: &SubgroupLattice, h: NodeId) -> bool {
    !l.edges()
        .iter()
        .any(|e| is_prime(e.index as u64) && l.is_subgroup(h, e.sub))
}

/// Nilpotent and self-normalizing.
pub fn is_carter(l: &SubgroupLattice, h: NodeId) -> bool {
    is_nilpotent(l, h) && l.normalizer_in(h, l.top()) == h
}
