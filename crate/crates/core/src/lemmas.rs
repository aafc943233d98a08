//! Executable instances of the preliminary lemmas on subnormality,
//! residuals and Frattini arguments.
//!
//! Statements quantified over formations are checked at the nilpotent and
//! supersoluble formations. Statements quantified over pairs of subgroups
//! are sampled with a seeded generator, so a run is reproducible.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime_power, prime_power_base};
use crate::coset::CosetAction;
use crate::formations::{
    in_formation, in_formation_section, is_critical, is_nilpotent, is_supersoluble,
    is_supersoluble_huppert, is_u_central, FormationTag, Section,
};
use crate::lattice::{NodeId, SubgroupLattice};
use crate::subnorm::{is_chain_subnormal_in, ChainEdgeSet, Criterion, Status};
use crate::theorems::Analysis;

pub const DEFAULT_SEED: u64 = 0x00e0_5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaConfig {
    pub seed: u64,
    /// Sample size for statements quantified over subgroups or pairs.
    pub samples: usize,
    /// Normal subgroups whose quotient lattices are built per group.
    pub quotients: usize,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig {
            seed: DEFAULT_SEED,
            samples: 200,
            quotients: 3,
        }
    }
}

/// Outcome of one lemma on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaResult {
    pub group: String,
    pub lemma: String,
    /// Instances whose hypotheses held and whose conclusion was tested.
    pub checked: usize,
    /// Up to five descriptions of failed instances.
    pub failures: Vec<String>,
    /// Positive evidence the lemma asks for, such as an explicit witness.
    pub witness: Option<String>,
}

impl LemmaResult {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

const MAX_FAILURES: usize = 5;

struct Recorder {
    group: String,
    lemma: &'static str,
    checked: usize,
    failures: Vec<String>,
    witness: Option<String>,
}

impl Recorder {
    fn new(group: &str, lemma: &'static str) -> Self {
        Recorder {
            group: group.to_string(),
            lemma,
            checked: 0,
            failures: Vec::new(),
            witness: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < MAX_FAILURES {
            self.failures.push(detail());
        }
    }

    fn finish(self) -> LemmaResult {
        LemmaResult {
            group: self.group,
            lemma: self.lemma.to_string(),
            checked: self.checked,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

fn rng_for(name: &str, seed: u64) -> ChaCha8Rng {
    // FNV-1a of the group name keeps per-group streams independent of the
    // order in which groups are processed.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn sample<T: Clone>(rng: &mut ChaCha8Rng, items: &[T], n: usize) -> Vec<T> {
    if items.len() <= n {
        items.to_vec()
    } else {
        items.choose_multiple(rng, n).cloned().collect()
    }
}

const U: FormationTag = FormationTag::Supersoluble;
const N: FormationTag = FormationTag::Nilpotent;
const FORMATIONS: [FormationTag; 2] = [N, U];

fn crit(f: FormationTag) -> Criterion {
    Criterion::QuotientByCoreIn(f)
}

fn is_simple_nonabelian(l: &SubgroupLattice) -> bool {
    !l.is_abelian(l.top()) && l.normal_subgroups().len() == 2
}

/// Runs every lemma instance on one analysed group.
pub fn lemma_checks(name: &str, a: &Analysis, cfg: &LemmaConfig) -> Vec<LemmaResult> {
    let l = a.lattice;
    let mut rng = rng_for(name, cfg.seed);
    let ue = a.edge_set(crit(U));
    let u_sub: Vec<NodeId> = (0..l.len())
        .filter(|&h| matches!(a.status[h].u_status, Status::Subnormal | Status::WholeGroup))
        .collect();
    let all: Vec<NodeId> = (0..l.len()).collect();
    let mut out = Vec::new();

    // H U-subnormal in G gives H ∩ K U-subnormal in K.
    let mut r = Recorder::new(name, "subnormal-meet");
    for h in sample(&mut rng, &u_sub, cfg.samples) {
        let k = *all.choose(&mut rng).expect("lattice is non-empty");
        let hk = l.meet(h, k);
        r.check(is_chain_subnormal_in(l, hk, k, ue), || {
            format!("H={h}, K={k}: H∩K={hk} is not U-subnormal in K")
        });
    }
    out.push(r.finish());

    out.push(quotient_images(name, a, cfg, &mut rng, &u_sub));

    // K U-subnormal in H and H U-subnormal in G give K U-subnormal
    // in G.
    let mut r = Recorder::new(name, "subnormal-transitive");
    for h in sample(&mut rng, &u_sub, cfg.samples) {
        let subs = l.subnodes(h);
        let k = *subs.choose(&mut rng).expect("h contains the trivial node");
        if is_chain_subnormal_in(l, k, h, ue) {
            r.check(u_sub.binary_search(&k).is_ok(), || {
                format!("K={k} U-subnormal in H={h}, H U-subnormal in G, K not")
            });
        }
    }
    out.push(r.finish());

    // every K containing the residual is U-subnormal.
    let mut r = Recorder::new(name, "above-residual-subnormal");
    for k in l.supernodes(a.residual) {
        r.check(u_sub.binary_search(&k).is_ok(), || {
            format!("K={k} contains G^U but is not U-subnormal")
        });
    }
    out.push(r.finish());

    // K ≤ H with H supersoluble and U-subnormal gives K
    // U-subnormal.
    let mut r = Recorder::new(name, "supersoluble-subnormal-subgroups");
    let u_sub_in_u: Vec<NodeId> = u_sub
        .iter()
        .copied()
        .filter(|&h| is_supersoluble(l, h))
        .collect();
    for h in sample(&mut rng, &u_sub_in_u, cfg.samples) {
        let subs = l.subnodes(h);
        let k = *subs.choose(&mut rng).expect("h contains the trivial node");
        r.check(u_sub.binary_search(&k).is_ok(), || {
            format!("K={k} inside supersoluble U-subnormal H={h} is not U-subnormal")
        });
    }
    out.push(r.finish());

    // For M maximal and R minimal normal with MR = G, G/M_G is
    // supersoluble iff R is U-central.
    let mut r = Recorder::new(name, "u-central-supplement");
    let minimal = l.minimal_normal_subgroups();
    for &m in l.maximal_in(l.top()) {
        let core = l.core_in(m, l.top());
        let quotient_u = in_formation_section(
            l,
            Section {
                top: l.top(),
                bottom: core,
            },
            U,
        );
        for &rn in &minimal {
            if l.join(m, rn) != l.top() {
                continue;
            }
            let central = is_u_central(l, rn).expect("minimal normal");
            r.check(quotient_u == central, || {
                format!("M={m}, R={rn}: G/M_G in U is {quotient_u}, R U-central is {central}")
            });
        }
    }
    out.push(r.finish());

    // For nilpotent E: E normal, E ∩ Φ(G) = 1 gives E a product of
    // minimal normal subgroups of G.
    let mut r = Recorder::new(name, "frattini-free-nilpotent-normal");
    for e in l.normal_subgroups() {
        if e == l.trivial() || !is_nilpotent(l, e) || l.meet(e, a.frattini) != l.trivial() {
            continue;
        }
        let inside: Vec<NodeId> = minimal
            .iter()
            .copied()
            .filter(|&x| l.is_subgroup(x, e))
            .collect();
        let j = l.join_all(inside);
        r.check(j == e, || {
            format!("E={e} is not the join of the minimal normal subgroups it contains")
        });
    }
    out.push(r.finish());

    // E_U groups.
    let eu = !a.supersoluble
        && (0..l.len())
            .all(|h| h == l.trivial() || !matches!(a.status[h].u_status, Status::Neither));
    let mut r = Recorder::new(name, "eu-subnormal-supersoluble");
    if eu {
        for &h in u_sub.iter().filter(|&&h| h != l.top()) {
            r.check(is_supersoluble(l, h), || {
                format!("U-subnormal H={h} is not supersoluble")
            });
        }
    }
    out.push(r.finish());
    let mut r = Recorder::new(name, "eu-fitting-in-residual-frattini");
    if eu && a.soluble {
        let dphi = l.join(a.residual, a.frattini);
        r.check(l.is_subgroup(l.fitting(), dphi), || {
            format!("F(G) of order {} is not inside DΦ(G)", l.order(l.fitting()))
        });
    }
    out.push(r.finish());

    // Critical soluble groups.
    let mut ri = Recorder::new(name, "critical-residual-p-group");
    let mut rii = Recorder::new(name, "critical-residual-chief-factor");
    for f in FORMATIONS {
        if !a.soluble || !is_critical(l, l.top(), f) {
            continue;
        }
        let d = crate::formations::residual(l, l.top(), f);
        let p_group = prime_power_base(l.order(d) as u64).is_some();
        ri.check(p_group, || {
            format!(
                "{}-critical: residual of order {} is not a p-group",
                f.symbol(),
                l.order(d)
            )
        });
        let phi_d = l.frattini_in(d);
        let chief = l.is_normal(phi_d)
            && phi_d != d
            && l.interval(phi_d, d)
                .into_iter()
                .all(|x| x == phi_d || x == d || !l.is_normal(x));
        rii.check(p_group && chief, || {
            format!("{}-critical: D/Φ(D) is not a chief factor", f.symbol())
        });
    }
    out.push(ri.finish());
    out.push(rii.finish());

    // Critical soluble groups: subgroups above Φ(G) ∩ G^F are
    // F-subnormal or F-abnormal.
    let mut r = Recorder::new(name, "critical-above-frattini-residual");
    for f in FORMATIONS {
        if !a.soluble || !is_critical(l, l.top(), f) {
            continue;
        }
        let d = crate::formations::residual(l, l.top(), f);
        let phi = l.meet(a.frattini, d);
        let c = crit(f);
        for h in l.supernodes(phi) {
            if h == l.top() {
                continue;
            }
            let st = a.status[h].get(c);
            r.check(st != Status::Neither, || {
                format!("{}-critical: H={h} above Φ(G)∩G^F is neither", f.symbol())
            });
        }
    }
    out.push(r.finish());

    // G = AB with A, B normal supersoluble of coprime indices.
    let mut r = Recorder::new(name, "coprime-supersoluble-product");
    let normal_u: Vec<NodeId> = l
        .normal_subgroups()
        .into_iter()
        .filter(|&x| is_supersoluble(l, x))
        .collect();
    let g = l.order(l.top());
    for (i, &x) in normal_u.iter().enumerate() {
        for &y in &normal_u[i..] {
            let (ix, iy) = (g / l.order(x), g / l.order(y));
            if num_integer::gcd(ix, iy) != 1 || l.join(x, y) != l.top() {
                continue;
            }
            r.check(a.supersoluble, || {
                format!("A={x}, B={y} normal supersoluble, coprime indices, G not supersoluble")
            });
            if r.witness.is_none() {
                r.witness = Some(format!(
                    "A of order {}, B of order {}",
                    l.order(x),
                    l.order(y)
                ));
            }
        }
    }
    out.push(r.finish());

    // E normal with E/(E ∩ Φ(G)) in F gives E in F.
    let mut r = Recorder::new(name, "frattini-quotient-formation");
    for e in l.normal_subgroups() {
        let bottom = l.meet(e, a.frattini);
        for f in FORMATIONS {
            if in_formation_section(l, Section { top: e, bottom }, f) {
                r.check(in_formation(l, e, f), || {
                    format!("E={e}: E/(E∩Φ) in {} but E is not", f.symbol())
                });
            }
        }
    }
    out.push(r.finish());

    // The prime-index property on small cyclic subgroups.
    let has_p_property = |h: NodeId| {
        matches!(
            a.status[h].p_status,
            Status::Subnormal | Status::Abnormal | Status::WholeGroup
        )
    };
    let cyclic_pp: Vec<NodeId> = (1..l.len())
        .filter(|&h| is_prime_power(l.order(h) as u64) && l.is_cyclic(h))
        .collect();
    let mut r = Recorder::new(name, "prime-index-property-not-simple");
    let prime_ok = cyclic_pp
        .iter()
        .filter(|&&h| crate::arith::is_prime(l.order(h) as u64))
        .all(|&h| has_p_property(h));
    if prime_ok {
        r.check(!is_simple_nonabelian(l), || {
            "prime-order subgroups have the P-property, yet G is simple non-abelian".into()
        });
    }
    out.push(r.finish());
    let mut r = Recorder::new(name, "insoluble-prime-index-witness");
    let lacking = cyclic_pp.iter().copied().find(|&h| !has_p_property(h));
    match lacking {
        None => r.check(a.soluble, || {
            "cyclic prime-power subgroups have the P-property, yet G is not soluble".into()
        }),
        Some(h) => {
            if !a.soluble {
                r.checked += 1;
            }
            r.witness = Some(format!(
                "cyclic subgroup {} of order {} is neither P-subnormal nor P-abnormal",
                l.generator_perms(h)
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                l.order(h)
            ));
        }
    }
    out.push(r.finish());

    out.extend(structural_checks(name, a));
    out
}

/// Invariants of the machinery itself rather than lemmas: agreement of the
/// prime-index and supersoluble chain notions on soluble groups, and of the
/// two supersolubility tests.
pub fn structural_checks(name: &str, a: &Analysis) -> Vec<LemmaResult> {
    let l = a.lattice;
    let mut eq = Recorder::new(name, "P<=>U");
    if a.soluble {
        for s in &a.status {
            eq.check(s.p_status == s.u_status, || {
                format!(
                    "node {}: P-status {:?}, U-status {:?}",
                    s.id, s.p_status, s.u_status
                )
            });
        }
    }
    let mut hup = Recorder::new(name, "huppert");
    for h in 0..l.len() {
        let s = Section::whole(l, h);
        let by_chief = l
            .chief_series_in(h, None)
            .expect("trivial node is normal")
            .factor_orders
            .iter()
            .all(|&o| crate::arith::is_prime(o as u64));
        let by_maximals = is_supersoluble_huppert(l, s);
        hup.check(by_chief == by_maximals, || {
            format!("node {h}: chief-series test {by_chief}, maximal-index test {by_maximals}")
        });
    }
    vec![eq.finish(), hup.finish()]
}

/// Images of U-subnormal subgroups in quotient lattices.
fn quotient_images(
    name: &str,
    a: &Analysis,
    cfg: &LemmaConfig,
    rng: &mut ChaCha8Rng,
    u_sub: &[NodeId],
) -> LemmaResult {
    let l = a.lattice;
    let mut r = Recorder::new(name, "subnormal-image");
    let normals: Vec<NodeId> = l
        .normal_subgroups()
        .into_iter()
        .filter(|&n| n != l.trivial() && n != l.top())
        .collect();
    for n in sample(rng, &normals, cfg.quotients) {
        let g = l.group();
        let action = match CosetAction::new(g, &l.subgroup(n)) {
            Ok(act) => act,
            Err(e) => {
                r.failures.push(format!("quotient by node {n}: {e}"));
                continue;
            }
        };
        let ql = match SubgroupLattice::new(action.image()) {
            Ok(ql) => ql,
            Err(e) => {
                r.failures
                    .push(format!("quotient lattice by node {n}: {e}"));
                continue;
            }
        };
        let qe = ChainEdgeSet::new(&ql, crit(U));
        let q_sub = qe.subnormal_nodes(&ql);
        for h in sample(rng, u_sub, cfg.samples / cfg.quotients.max(1)) {
            let image = action.image_of_subgroup(&l.subgroup(h));
            let Some(qh) = ql.find(&image) else {
                r.failures.push(format!(
                    "image of node {h} modulo node {n} not in quotient lattice"
                ));
                continue;
            };
            r.check(q_sub[qh], || {
                format!("H={h} U-subnormal, HN/N not U-subnormal in G/N for N={n}")
            });
        }
    }
    r.finish()
}

/// Runs the suite over already-built lattices.
pub fn run_lemma_suite(
    groups: &[(String, SubgroupLattice)],
    cfg: &LemmaConfig,
) -> Vec<LemmaResult> {
    let mut out = Vec::new();
    for (name, l) in groups {
        let a = Analysis::new(l);
        out.extend(lemma_checks(name, &a, cfg));
    }
    out
}
