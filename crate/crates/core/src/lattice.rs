//! Subgroup lattices of small permutation groups.
//!
//! The ambient group is tabulated once (elements sorted lexicographically by
//! images, full multiplication table) and every subgroup is a bit set over
//! element indices. Because element indices follow the sorted element list,
//! comparing bit sets by their ascending index sequences is the same as
//! comparing sorted element lists, which is the canonical fingerprint used
//! for deduplication and every deterministic tie-break.
//!
//! Enumeration is by cyclic extension: starting from the trivial subgroup,
//! each conjugacy-class representative `H` is joined with every cyclic
//! subgroup of prime-power order not already inside it. Every subgroup is
//! generated by its prime-power elements, so the fixpoint is the full
//! lattice, and every maximal inclusion `H < L` arises as one of these joins.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::arith::{is_prime, p_part, pi_part, prime_divisors};
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Largest group order for which a lattice is built.
pub const LATTICE_CAP: usize = 2500;

pub type NodeId = usize;

/// Elements of a group with its multiplication table.
#[derive(Debug, Clone)]
pub struct ElementTable {
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

impl ElementTable {
    pub fn new(group: &PermGroup, cap: usize) -> Result<ElementTable> {
        let mut elements = group.elements_capped(cap)?;
        elements.sort();
        let n = elements.len();
        let lookup: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let mut mul = vec![0u32; n * n];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                mul[a * n + b] = lookup[&pa.compose(pb)];
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let mut orders = vec![1u32; n];
        for (a, o) in orders.iter_mut().enumerate() {
            let mut x = a as u32;
            while x != 0 {
                x = mul[x as usize * n + a];
                *o += 1;
            }
        }
        Ok(ElementTable {
            elements,
            lookup,
            mul,
            inv,
            orders,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.elements.len() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn element(&self, a: u32) -> &Permutation {
        &self.elements[a as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.lookup.get(p).copied()
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> FixedBitSet {
        let mut set = self.empty_set();
        set.insert(0);
        let mut list = vec![0u32];
        self.extend_closure(&mut set, &mut list, gens);
        set
    }

    /// Closes `set` (listed in `list`, already a subgroup or just `{1}`)
    /// under right multiplication by `gens`.
    fn extend_closure(&self, set: &mut FixedBitSet, list: &mut Vec<u32>, gens: &[u32]) {
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &s in gens {
                let y = self.mul(x, s);
                if !set.contains(y as usize) {
                    set.insert(y as usize);
                    list.push(y);
                }
            }
            k += 1;
        }
    }

    pub fn conjugate_set(&self, set: &FixedBitSet, g: u32) -> FixedBitSet {
        let mut out = self.empty_set();
        for x in set.ones() {
            out.insert(self.conj(x as u32, g) as usize);
        }
        out
    }
}

/// Orders two element sets by their ascending element-index sequences.
pub fn cmp_fingerprint(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    a.ones().cmp(b.ones())
}

#[derive(Debug, Clone)]
pub struct Node {
    pub elements: FixedBitSet,
    pub order: usize,
    /// Element indices generating the subgroup.
    pub generators: Vec<u32>,
    pub class: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub sub: NodeId,
    pub sup: NodeId,
    pub index: usize,
}

/// Ascending chief series `1 = N_0 < ... < N_r = M` of a lattice node `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiefSeries {
    pub terms: Vec<NodeId>,
    pub factor_orders: Vec<usize>,
    pub factor_cyclic: Vec<bool>,
}

#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group: PermGroup,
    table: ElementTable,
    nodes: Vec<Node>,
    classes: Vec<Vec<NodeId>>,
    edges: Vec<Edge>,
    lower: Vec<Vec<NodeId>>,
    upper: Vec<Vec<NodeId>>,
    lookup: HashMap<FixedBitSet, NodeId>,
    /// Element indices of the ambient group's generators.
    ambient_gens: Vec<u32>,
}

struct RawNode {
    elements: FixedBitSet,
    generators: Vec<u32>,
    rep: usize,
    /// Element `c` with `this = rep^c`.
    conjugator: u32,
}

impl SubgroupLattice {
    pub fn new(group: &PermGroup) -> Result<SubgroupLattice> {
        Self::with_cap(group, LATTICE_CAP)
    }

    pub fn with_cap(group: &PermGroup, cap: usize) -> Result<SubgroupLattice> {
        if group.order() > cap as u128 {
            return Err(GroupError::CapExceeded {
                what: "lattice group order",
                size: group.order(),
                cap: cap as u128,
            });
        }
        let table = ElementTable::new(group, cap)?;
        let ambient_gens: Vec<u32> = group
            .generators()
            .iter()
            .map(|g| table.index_of(g).expect("generator is an element"))
            .collect();
        let parts = Enumerator::new(&table, &ambient_gens).run();
        Ok(SubgroupLattice {
            group: group.clone(),
            table,
            nodes: parts.nodes,
            classes: parts.classes,
            edges: parts.edges,
            lower: parts.lower,
            upper: parts.upper,
            lookup: parts.lookup,
            ambient_gens,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn table(&self) -> &ElementTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn order(&self, id: NodeId) -> usize {
        self.nodes[id].order
    }

    pub fn elements(&self, id: NodeId) -> &FixedBitSet {
        &self.nodes[id].elements
    }

    pub fn classes(&self) -> &[Vec<NodeId>] {
        &self.classes
    }

    pub fn class_of(&self, id: NodeId) -> usize {
        self.nodes[id].class
    }

    pub fn class_members(&self, id: NodeId) -> &[NodeId] {
        &self.classes[self.nodes[id].class]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Maximal subgroups of `id`.
    pub fn maximal_in(&self, id: NodeId) -> &[NodeId] {
        &self.lower[id]
    }

    /// Nodes in which `id` is a maximal subgroup.
    pub fn covers(&self, id: NodeId) -> &[NodeId] {
        &self.upper[id]
    }

    pub fn trivial(&self) -> NodeId {
        0
    }

    pub fn top(&self) -> NodeId {
        self.nodes.len() - 1
    }

    pub fn id_of(&self, set: &FixedBitSet) -> Option<NodeId> {
        self.lookup.get(set).copied()
    }

    /// Lattice node equal to a subgroup of the ambient group.
    pub fn find(&self, h: &PermGroup) -> Option<NodeId> {
        let gens: Option<Vec<u32>> = h
            .generators()
            .iter()
            .map(|g| self.table.index_of(g))
            .collect();
        self.id_of(&self.table.closure(&gens?))
    }

    /// The node as a standalone permutation group on the ambient degree.
    pub fn subgroup(&self, id: NodeId) -> PermGroup {
        let gens: Vec<Permutation> = self.nodes[id]
            .generators
            .iter()
            .map(|&g| self.table.element(g).clone())
            .collect();
        PermGroup::from_generators_unchecked(self.group.degree(), gens)
    }

    pub fn generator_perms(&self, id: NodeId) -> Vec<Permutation> {
        self.nodes[id]
            .generators
            .iter()
            .map(|&g| self.table.element(g).clone())
            .collect()
    }

    /// Sorted element indices: the fingerprint of a node.
    pub fn fingerprint(&self, id: NodeId) -> Vec<u32> {
        self.nodes[id].elements.ones().map(|x| x as u32).collect()
    }

    /// `a <= b`.
    pub fn is_subgroup(&self, a: NodeId, b: NodeId) -> bool {
        self.nodes[a].order <= self.nodes[b].order
            && self.nodes[b].order.is_multiple_of(self.nodes[a].order)
            && self.nodes[a].elements.is_subset(&self.nodes[b].elements)
    }

    pub fn contains_element(&self, id: NodeId, x: u32) -> bool {
        self.nodes[id].elements.contains(x as usize)
    }

    fn lookup_set(&self, set: &FixedBitSet) -> NodeId {
        self.lookup[set]
    }

    pub fn meet(&self, a: NodeId, b: NodeId) -> NodeId {
        let mut set = self.nodes[a].elements.clone();
        set.intersect_with(&self.nodes[b].elements);
        self.lookup_set(&set)
    }

    pub fn join(&self, a: NodeId, b: NodeId) -> NodeId {
        let gens: Vec<u32> = self.nodes[a]
            .generators
            .iter()
            .chain(&self.nodes[b].generators)
            .copied()
            .collect();
        self.lookup_set(&self.table.closure(&gens))
    }

    pub fn join_all(&self, ids: impl IntoIterator<Item = NodeId>) -> NodeId {
        ids.into_iter()
            .fold(self.trivial(), |acc, x| self.join(acc, x))
    }

    pub fn generated_by(&self, gens: &[u32]) -> NodeId {
        self.lookup_set(&self.table.closure(gens))
    }

    pub fn conjugate(&self, id: NodeId, g: u32) -> NodeId {
        self.lookup_set(&self.table.conjugate_set(&self.nodes[id].elements, g))
    }

    /// `k` is normalized by every element of `m` (no containment implied).
    pub fn is_normalized_by(&self, k: NodeId, m: NodeId) -> bool {
        let set = &self.nodes[k].elements;
        self.nodes[m].generators.iter().all(|&g| {
            self.nodes[k]
                .generators
                .iter()
                .all(|&x| set.contains(self.table.conj(x, g) as usize))
        })
    }

    /// `k` is a normal subgroup of `m`.
    pub fn is_normal_in(&self, k: NodeId, m: NodeId) -> bool {
        self.is_subgroup(k, m) && self.is_normalized_by(k, m)
    }

    pub fn is_normal(&self, k: NodeId) -> bool {
        self.class_members(k).len() == 1
    }

    /// The `m`-conjugates of `k`.
    pub fn conjugates_in(&self, k: NodeId, m: NodeId) -> Vec<NodeId> {
        if m == self.top() {
            return self.class_members(k).to_vec();
        }
        let mut seen = BTreeSet::from([k]);
        let mut queue = vec![k];
        while let Some(x) = queue.pop() {
            for &g in &self.nodes[m].generators {
                let y = self.conjugate(x, g);
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Largest normal subgroup of `m` inside `k`.
    pub fn core_in(&self, k: NodeId, m: NodeId) -> NodeId {
        let mut set = self.nodes[k].elements.clone();
        for c in self.conjugates_in(k, m) {
            set.intersect_with(&self.nodes[c].elements);
        }
        self.lookup_set(&set)
    }

    pub fn normalizer_in(&self, k: NodeId, m: NodeId) -> NodeId {
        let kset = &self.nodes[k].elements;
        let gens: Vec<u32> = self.nodes[m]
            .elements
            .ones()
            .map(|g| g as u32)
            .filter(|&g| {
                self.nodes[k]
                    .generators
                    .iter()
                    .all(|&x| kset.contains(self.table.conj(x, g) as usize))
            })
            .collect();
        self.generated_by(&gens)
    }

    pub fn centralizer_in(&self, k: NodeId, m: NodeId) -> NodeId {
        let gens: Vec<u32> = self.nodes[m]
            .elements
            .ones()
            .map(|g| g as u32)
            .filter(|&g| {
                self.nodes[k]
                    .generators
                    .iter()
                    .all(|&x| self.table.mul(x, g) == self.table.mul(g, x))
            })
            .collect();
        self.generated_by(&gens)
    }

    /// Smallest normal subgroup of `m` containing `seeds`.
    pub fn normal_closure_in(&self, seeds: &[u32], m: NodeId) -> NodeId {
        let mut gens: Vec<u32> = seeds.to_vec();
        let mut set = self.table.closure(&gens);
        let mut k = 0;
        while k < gens.len() {
            let x = gens[k];
            for &g in &self.nodes[m].generators {
                let y = self.table.conj(x, g);
                if !set.contains(y as usize) {
                    gens.push(y);
                    set = self.table.closure(&gens);
                }
            }
            k += 1;
        }
        self.lookup_set(&set)
    }

    /// `[a, b]` for subgroups normalizing each other.
    pub fn commutator(&self, a: NodeId, b: NodeId) -> NodeId {
        let seeds: Vec<u32> = self.nodes[a]
            .generators
            .iter()
            .flat_map(|&x| {
                self.nodes[b]
                    .generators
                    .iter()
                    .map(move |&y| self.table.commutator(x, y))
            })
            .collect();
        let j = self.join(a, b);
        self.normal_closure_in(&seeds, j)
    }

    pub fn derived(&self, m: NodeId) -> NodeId {
        self.commutator(m, m)
    }

    pub fn is_abelian(&self, m: NodeId) -> bool {
        let g = &self.nodes[m].generators;
        g.iter().enumerate().all(|(i, &a)| {
            g[i + 1..]
                .iter()
                .all(|&b| self.table.mul(a, b) == self.table.mul(b, a))
        })
    }

    pub fn is_cyclic(&self, m: NodeId) -> bool {
        let order = self.nodes[m].order as u32;
        self.nodes[m]
            .elements
            .ones()
            .any(|x| self.table.element_order(x as u32) == order)
    }

    /// Every subgroup of `m`, in ascending id order.
    pub fn subnodes(&self, m: NodeId) -> Vec<NodeId> {
        self.interval(self.trivial(), m)
    }

    /// Every node `x` with `lo <= x <= hi`, in ascending id order.
    pub fn interval(&self, lo: NodeId, hi: NodeId) -> Vec<NodeId> {
        if !self.is_subgroup(lo, hi) {
            return Vec::new();
        }
        if lo == self.trivial() && hi == self.top() {
            return (0..self.len()).collect();
        }
        let mut seen = vec![false; self.len()];
        seen[hi] = true;
        let mut stack = vec![hi];
        let lo_set = &self.nodes[lo].elements;
        while let Some(x) = stack.pop() {
            for &y in &self.lower[x] {
                if !seen[y] && lo_set.is_subset(&self.nodes[y].elements) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.len()).filter(|&x| seen[x]).collect()
    }

    /// Every node `x >= lo`, in ascending id order.
    pub fn supernodes(&self, lo: NodeId) -> Vec<NodeId> {
        self.interval(lo, self.top())
    }

    pub fn maximal_subgroups(&self) -> Vec<NodeId> {
        self.lower[self.top()].clone()
    }

    pub fn normal_subgroups(&self) -> Vec<NodeId> {
        (0..self.len()).filter(|&x| self.is_normal(x)).collect()
    }

    /// Normal subgroups of `m` lying between `lo` and `m`.
    pub fn normal_interval(&self, lo: NodeId, m: NodeId) -> Vec<NodeId> {
        if m == self.top() {
            return self
                .supernodes(lo)
                .into_iter()
                .filter(|&x| self.is_normal(x))
                .collect();
        }
        self.interval(lo, m)
            .into_iter()
            .filter(|&x| self.is_normalized_by(x, m))
            .collect()
    }

    /// Nodes of `candidates` that contain no other candidate.
    fn minimal_among(&self, candidates: &[NodeId]) -> Vec<NodeId> {
        candidates
            .iter()
            .copied()
            .filter(|&x| !candidates.iter().any(|&y| y != x && self.is_subgroup(y, x)))
            .collect()
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<NodeId> {
        self.minimal_normal_in(self.top())
    }

    pub fn minimal_normal_in(&self, m: NodeId) -> Vec<NodeId> {
        let normal: Vec<NodeId> = self
            .normal_interval(self.trivial(), m)
            .into_iter()
            .filter(|&x| x != self.trivial())
            .collect();
        self.minimal_among(&normal)
    }

    /// Intersection of the maximal subgroups of `m`.
    pub fn frattini_in(&self, m: NodeId) -> NodeId {
        let mut set = self.nodes[m].elements.clone();
        for &x in &self.lower[m] {
            set.intersect_with(&self.nodes[x].elements);
        }
        self.lookup_set(&set)
    }

    pub fn frattini(&self) -> NodeId {
        self.frattini_in(self.top())
    }

    /// A Sylow `p`-subgroup of `m` (least fingerprint); trivial if `p` does
    /// not divide `|m|`.
    pub fn sylow_in(&self, m: NodeId, p: u64) -> NodeId {
        let target = p_part(self.nodes[m].order as u64, p) as usize;
        self.least_of_order_in(m, target)
            .expect("Sylow subgroups exist")
    }

    pub fn sylow(&self, p: u64) -> NodeId {
        self.sylow_in(self.top(), p)
    }

    fn least_of_order_in(&self, m: NodeId, order: usize) -> Option<NodeId> {
        let pool: Vec<NodeId> = if m == self.top() {
            (0..self.len())
                .filter(|&x| self.nodes[x].order == order)
                .collect()
        } else {
            self.subnodes(m)
                .into_iter()
                .filter(|&x| self.nodes[x].order == order)
                .collect()
        };
        pool.into_iter()
            .min_by(|&a, &b| cmp_fingerprint(&self.nodes[a].elements, &self.nodes[b].elements))
    }

    /// A Hall `pi`-subgroup of `m` (least fingerprint), if one exists.
    pub fn hall_in(&self, m: NodeId, primes: &[u64]) -> Option<NodeId> {
        let target = pi_part(self.nodes[m].order as u64, primes) as usize;
        self.least_of_order_in(m, target)
    }

    pub fn hall(&self, primes: &[u64]) -> Option<NodeId> {
        self.hall_in(self.top(), primes)
    }

    /// `O_p(m)`: core in `m` of a Sylow `p`-subgroup.
    pub fn p_core_in(&self, m: NodeId, p: u64) -> NodeId {
        self.core_in(self.sylow_in(m, p), m)
    }

    /// Fitting subgroup of `m`: the join of the `O_p(m)`.
    pub fn fitting_in(&self, m: NodeId) -> NodeId {
        let primes = prime_divisors(self.nodes[m].order as u64);
        self.join_all(primes.into_iter().map(|p| self.p_core_in(m, p)))
    }

    pub fn fitting(&self) -> NodeId {
        self.fitting_in(self.top())
    }

    /// Is the factor `hi / lo` (with `lo` normal in `hi`) cyclic?
    pub fn factor_is_cyclic(&self, lo: NodeId, hi: NodeId) -> bool {
        let index = (self.nodes[hi].order / self.nodes[lo].order) as u32;
        if index == 1 || is_prime(index as u64) {
            return true;
        }
        let lo_set = &self.nodes[lo].elements;
        self.nodes[hi].elements.ones().any(|x| {
            let x = x as u32;
            let mut y = x;
            let mut k = 1;
            while !lo_set.contains(y as usize) {
                y = self.table.mul(y, x);
                k += 1;
            }
            k == index
        })
    }

    /// Chief series of `m`, passing through `through` when given.
    pub fn chief_series_in(&self, m: NodeId, through: Option<NodeId>) -> Result<ChiefSeries> {
        self.chief_series_section(m, self.trivial(), through)
    }

    /// Chief series of the section `m / lo` (`lo` normal in `m`), as the
    /// `m`-normal nodes between `lo` and `m`.
    ///
    /// At each step the next term is the least-fingerprint minimal element
    /// among the `m`-normal nodes strictly above the current term and inside
    /// the current target.
    pub fn chief_series_section(
        &self,
        m: NodeId,
        lo: NodeId,
        through: Option<NodeId>,
    ) -> Result<ChiefSeries> {
        if !self.is_normal_in(lo, m) {
            return Err(GroupError::NotNormal);
        }
        if let Some(d) = through {
            if !self.is_normal_in(d, m) || !self.is_subgroup(lo, d) {
                return Err(GroupError::NotNormal);
            }
        }
        let normal = self.normal_interval(lo, m);
        let mut terms = vec![lo];
        let targets: Vec<NodeId> = through.into_iter().chain([m]).collect();
        for target in targets {
            loop {
                let cur = *terms.last().unwrap();
                if cur == target {
                    break;
                }
                let candidates: Vec<NodeId> = normal
                    .iter()
                    .copied()
                    .filter(|&x| {
                        x != cur && self.is_subgroup(cur, x) && self.is_subgroup(x, target)
                    })
                    .collect();
                let next = self
                    .minimal_among(&candidates)
                    .into_iter()
                    .min_by(|&a, &b| {
                        cmp_fingerprint(&self.nodes[a].elements, &self.nodes[b].elements)
                    })
                    .expect("target lies above the current term");
                terms.push(next);
            }
        }
        let factor_orders = terms
            .windows(2)
            .map(|w| self.nodes[w[1]].order / self.nodes[w[0]].order)
            .collect();
        let factor_cyclic = terms
            .windows(2)
            .map(|w| self.factor_is_cyclic(w[0], w[1]))
            .collect();
        Ok(ChiefSeries {
            terms,
            factor_orders,
            factor_cyclic,
        })
    }

    pub fn chief_series(&self, through: Option<NodeId>) -> Result<ChiefSeries> {
        self.chief_series_in(self.top(), through)
    }

    /// Nodes `h` with `|h||n| = |G|` and `h ∩ n = 1`.
    pub fn complements(&self, n: NodeId) -> Vec<NodeId> {
        let g = self.nodes[self.top()].order;
        let target = g / self.nodes[n].order;
        (0..self.len())
            .filter(|&h| self.nodes[h].order == target && self.meet(h, n) == self.trivial())
            .collect()
    }
}

struct Parts {
    nodes: Vec<Node>,
    classes: Vec<Vec<NodeId>>,
    edges: Vec<Edge>,
    lower: Vec<Vec<NodeId>>,
    upper: Vec<Vec<NodeId>>,
    lookup: HashMap<FixedBitSet, NodeId>,
}

struct Enumerator<'a> {
    table: &'a ElementTable,
    ambient_gens: &'a [u32],
    raw: Vec<RawNode>,
    lookup: HashMap<FixedBitSet, usize>,
    /// Candidate upper covers of each class representative.
    rep_covers: HashMap<usize, Vec<usize>>,
}

impl<'a> Enumerator<'a> {
    fn new(table: &'a ElementTable, ambient_gens: &'a [u32]) -> Self {
        Enumerator {
            table,
            ambient_gens,
            raw: Vec::new(),
            lookup: HashMap::new(),
            rep_covers: HashMap::new(),
        }
    }

    /// Registers the whole conjugacy class of a new subgroup; returns the
    /// raw id of the representative.
    fn add_class(&mut self, elements: FixedBitSet, generators: Vec<u32>) -> usize {
        let rep = self.raw.len();
        self.lookup.insert(elements.clone(), rep);
        self.raw.push(RawNode {
            elements,
            generators,
            rep,
            conjugator: 0,
        });
        let mut k = rep;
        while k < self.raw.len() {
            for &g in self.ambient_gens {
                let set = self.table.conjugate_set(&self.raw[k].elements, g);
                if self.lookup.contains_key(&set) {
                    continue;
                }
                let generators = self.raw[k]
                    .generators
                    .iter()
                    .map(|&x| self.table.conj(x, g))
                    .collect();
                let conjugator = self.table.mul(self.raw[k].conjugator, g);
                self.lookup.insert(set.clone(), self.raw.len());
                self.raw.push(RawNode {
                    elements: set,
                    generators,
                    rep,
                    conjugator,
                });
            }
            k += 1;
        }
        rep
    }

    fn prime_power_cyclics(&self) -> Vec<u32> {
        let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
        let mut out = Vec::new();
        for x in 1..self.table.len() as u32 {
            let o = self.table.element_order(x) as u64;
            if prime_divisors(o).len() != 1 {
                continue;
            }
            let set = self.table.closure(&[x]);
            if seen.insert(set, ()).is_none() {
                out.push(x);
            }
        }
        out
    }

    fn run(mut self) -> Parts {
        let cyclics = self.prime_power_cyclics();
        let mut trivial = self.table.empty_set();
        trivial.insert(0);
        let mut queue = vec![self.add_class(trivial, Vec::new())];
        let mut q = 0;
        while q < queue.len() {
            let h = queue[q];
            q += 1;
            let mut candidates: BTreeSet<usize> = BTreeSet::new();
            for &z in &cyclics {
                if self.raw[h].elements.contains(z as usize) {
                    continue;
                }
                let mut set = self.raw[h].elements.clone();
                let mut list: Vec<u32> = set.ones().map(|x| x as u32).collect();
                let mut gens = self.raw[h].generators.clone();
                gens.push(z);
                self.table.extend_closure(&mut set, &mut list, &gens);
                let id = match self.lookup.get(&set) {
                    Some(&id) => id,
                    None => {
                        let rep = self.add_class(set, gens);
                        queue.push(rep);
                        rep
                    }
                };
                candidates.insert(id);
            }
            let cand: Vec<usize> = candidates.into_iter().collect();
            let covers: Vec<usize> = cand
                .iter()
                .copied()
                .filter(|&x| {
                    !cand.iter().any(|&y| {
                        y != x
                            && self.raw[y].elements.count_ones(..)
                                < self.raw[x].elements.count_ones(..)
                            && self.raw[y].elements.is_subset(&self.raw[x].elements)
                    })
                })
                .collect();
            self.rep_covers.insert(h, covers);
        }

        // Final ids: classes ordered by (order, least member fingerprint),
        // members by fingerprint.
        let n = self.raw.len();
        let mut class_of_rep: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, r) in self.raw.iter().enumerate() {
            class_of_rep.entry(r.rep).or_default().push(i);
        }
        let mut classes: Vec<Vec<usize>> = class_of_rep.into_values().collect();
        let raw = &self.raw;
        let fp = |a: &usize, b: &usize| cmp_fingerprint(&raw[*a].elements, &raw[*b].elements);
        for c in classes.iter_mut() {
            c.sort_by(fp);
        }
        classes.sort_by(|a, b| {
            raw[a[0]]
                .elements
                .count_ones(..)
                .cmp(&raw[b[0]].elements.count_ones(..))
                .then_with(|| fp(&a[0], &b[0]))
        });
        let mut new_id = vec![0usize; n];
        let mut order_of_raw = Vec::with_capacity(n);
        for c in &classes {
            for &r in c {
                new_id[r] = order_of_raw.len();
                order_of_raw.push(r);
            }
        }

        let mut upper: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        for (i, r) in self.raw.iter().enumerate() {
            let covers = &self.rep_covers[&r.rep];
            for &c in covers {
                let target = if i == r.rep {
                    c
                } else {
                    let set = self
                        .table
                        .conjugate_set(&self.raw[c].elements, r.conjugator);
                    self.lookup[&set]
                };
                upper[new_id[i]].push(new_id[target]);
            }
        }
        for u in upper.iter_mut() {
            u.sort_unstable();
        }
        let mut lower: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        for (sub, ups) in upper.iter().enumerate() {
            for &sup in ups {
                lower[sup].push(sub);
            }
        }
        for l in lower.iter_mut() {
            l.sort_unstable();
        }

        let mut nodes = Vec::with_capacity(n);
        let mut lookup = HashMap::with_capacity(n);
        let mut class_ids: Vec<Vec<NodeId>> = Vec::with_capacity(classes.len());
        for (ci, c) in classes.iter().enumerate() {
            class_ids.push(c.iter().map(|&r| new_id[r]).collect());
            for &r in c {
                let rn = &self.raw[r];
                lookup.insert(rn.elements.clone(), nodes.len());
                nodes.push(Node {
                    order: rn.elements.count_ones(..),
                    elements: rn.elements.clone(),
                    generators: rn.generators.clone(),
                    class: ci,
                });
            }
        }
        let mut edges: Vec<Edge> = Vec::new();
        for (sub, ups) in upper.iter().enumerate() {
            for &sup in ups {
                edges.push(Edge {
                    sub,
                    sup,
                    index: nodes[sup].order / nodes[sub].order,
                });
            }
        }
        edges.sort();
        Parts {
            nodes,
            classes: class_ids,
            edges,
            lower,
            upper,
            lookup,
        }
    }
}

impl SubgroupLattice {
    /// Element indices of the ambient generators.
    pub fn ambient_generators(&self) -> &[u32] {
        &self.ambient_gens
    }
}
