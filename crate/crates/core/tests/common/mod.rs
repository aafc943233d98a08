//! Independent oracles shared by the integration tests. Everything here
//! works on raw permutations and bitsets and does not use the lattice
//! enumerator, the edge sets or the memoized status passes.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use eugroups::builders::build;
use eugroups::corpus::{load_corpus, CorpusEntry};
use eugroups::lattice::Edge;
use eugroups::subnorm::{edge_admissible, ChainEdgeSet, Criterion};
use eugroups::{PermGroup, Permutation, SubgroupLattice};

pub fn corpus_path() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus.json").to_string()
}

pub fn corpus() -> Vec<CorpusEntry> {
    load_corpus(corpus_path()).expect("shipped corpus parses")
}

pub fn lattice_of(entry: &CorpusEntry) -> SubgroupLattice {
    SubgroupLattice::new(&build(&entry.spec).unwrap()).unwrap()
}

pub fn perm(text: &str, degree: usize) -> Permutation {
    eugroups::parse_permutation(text, degree).unwrap()
}

pub fn group(degree: usize, gens: &[&str]) -> PermGroup {
    let gens: Vec<Permutation> = gens.iter().map(|g| perm(g, degree)).collect();
    PermGroup::from_generators(degree, &gens).unwrap()
}

/// Breadth-first closure of a generating set under composition.
pub fn bfs_closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Element set of a group by closure of its generators.
pub fn elements(g: &PermGroup) -> HashSet<Permutation> {
    bfs_closure(g.degree(), g.generators())
}

/// A small bitset over element indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }
    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len() * 64).filter(|&i| self.contains(i))
    }
}

/// Multiplication table of a group built from its element list.
pub struct Table {
    pub elements: Vec<Permutation>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub identity: usize,
    pub generators: Vec<usize>,
}

impl Table {
    pub fn new(g: &PermGroup) -> Table {
        let mut elements: Vec<Permutation> = elements(g).into_iter().collect();
        elements.sort();
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mul: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        let identity = index[&Permutation::identity(g.degree())];
        let inv = (0..elements.len())
            .map(|a| {
                (0..elements.len())
                    .find(|&b| mul[a][b] == identity)
                    .unwrap()
            })
            .collect();
        let generators = g.generators().iter().map(|p| index[p]).collect();
        Table {
            elements,
            mul,
            inv,
            identity,
            generators,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Subgroup generated by `gens`, as a bitset.
    pub fn closure(&self, gens: &[usize]) -> Bits {
        let mut set = Bits::new(self.len());
        set.insert(self.identity);
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul[x][g];
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    pub fn conjugate(&self, set: &Bits, g: usize) -> Bits {
        let mut out = Bits::new(self.len());
        for x in set.ones() {
            out.insert(self.mul[self.mul[self.inv[g]][x]][g]);
        }
        out
    }
}

/// All subgroups by closing every subset of at most two elements, then
/// adding joins of pairs until nothing new appears. Returns the subgroups
/// and the number of conjugacy classes.
pub fn closure_oracle(g: &PermGroup) -> (Vec<Bits>, usize) {
    let t = Table::new(g);
    let n = t.len();
    // Each subgroup keeps a short generating list so joins stay cheap.
    let mut found: HashMap<Bits, Vec<usize>> = HashMap::new();
    for a in 0..n {
        for b in a..n {
            let s = t.closure(&[a, b]);
            found.entry(s).or_insert_with(|| vec![a, b]);
        }
    }
    let mut all: Vec<(Bits, Vec<usize>)> = found.into_iter().collect();
    let mut known: HashSet<Bits> = all.iter().map(|(s, _)| s.clone()).collect();
    let mut fresh_from = 0;
    loop {
        let mut next = Vec::new();
        for i in fresh_from..all.len() {
            for j in 0..all.len() {
                if j >= fresh_from && j <= i {
                    continue;
                }
                let (a, ga) = &all[i];
                let (b, gb) = &all[j];
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let gens: Vec<usize> = ga.iter().chain(gb).copied().collect();
                let s = t.closure(&gens);
                if known.insert(s.clone()) {
                    next.push((s, gens));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        fresh_from = all.len();
        all.extend(next);
    }
    let subgroups: Vec<Bits> = all.into_iter().map(|(s, _)| s).collect();
    let mut class_seen: HashSet<Bits> = HashSet::new();
    let mut classes = 0;
    for s in &subgroups {
        if class_seen.contains(s) {
            continue;
        }
        classes += 1;
        let mut stack = vec![s.clone()];
        class_seen.insert(s.clone());
        while let Some(x) = stack.pop() {
            for &gen in &t.generators {
                let y = t.conjugate(&x, gen);
                if class_seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
    }
    (subgroups, classes)
}

/// Maximal inclusions recomputed from element sets alone.
pub fn covers_by_containment(l: &SubgroupLattice) -> Vec<(usize, usize)> {
    let n = l.len();
    let mut out = Vec::new();
    for big in 0..n {
        let below: Vec<usize> = (0..n)
            .filter(|&s| s != big && l.elements(s).is_subset(l.elements(big)))
            .collect();
        for &s in &below {
            let maximal = below
                .iter()
                .all(|&m| m == s || !l.elements(s).is_subset(l.elements(m)));
            if maximal {
                out.push((s, big));
            }
        }
    }
    out
}

/// Per-node (subnormal, abnormal) by exhaustive chain search over the
/// admissible inclusions, one search per node.
pub fn chain_search(l: &SubgroupLattice, c: Criterion) -> Vec<(bool, bool)> {
    let admissible: Vec<(usize, usize)> = covers_by_containment(l)
        .into_iter()
        .filter(|&(s, b)| {
            let e = Edge {
                sub: s,
                sup: b,
                index: l.order(b) / l.order(s),
            };
            edge_admissible(l, &e, c)
        })
        .collect();
    let top = l.top();
    let reaches = |h: usize| {
        let mut seen = HashSet::from([h]);
        let mut stack = vec![h];
        while let Some(x) = stack.pop() {
            if x == top {
                return true;
            }
            for &(s, b) in &admissible {
                if s == x && seen.insert(b) {
                    stack.push(b);
                }
            }
        }
        false
    };
    (0..l.len())
        .map(|h| {
            let sub = reaches(h);
            let abn = h != top
                && !admissible
                    .iter()
                    .any(|&(s, _)| l.elements(h).is_subset(l.elements(s)));
            (sub, abn)
        })
        .collect()
}

/// The library's memoized answers, for comparison with `chain_search`.
pub fn memoized(l: &SubgroupLattice, c: Criterion) -> Vec<(bool, bool)> {
    let e = ChainEdgeSet::new(l, c);
    let sub = e.subnormal_nodes(l);
    let obs = e.obstructed_nodes(l);
    (0..l.len())
        .map(|h| (sub[h], h != l.top() && !obs[h]))
        .collect()
}
