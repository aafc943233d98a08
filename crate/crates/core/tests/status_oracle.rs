mod common;

use common::{chain_search, corpus, group, lattice_of, memoized};
use eugroups::builders::{build, lookup};
use eugroups::formations::is_soluble;
use eugroups::subnorm::{
    is_carter, is_chain_abnormal, is_chain_subnormal, is_gaschutz, status_all, ChainEdgeSet,
    Criterion, Status,
};
use eugroups::SubgroupLattice;

fn lattice(name: &str) -> SubgroupLattice {
    SubgroupLattice::new(&build(&lookup(name).unwrap()).unwrap()).unwrap()
}

#[test]
fn memoized_reachability_matches_per_node_search() {
    for entry in corpus()
        .iter()
        .filter(|e| e.expect.order.is_some_and(|o| o <= 200))
    {
        let l = lattice_of(entry);
        if l.len() > 400 {
            continue;
        }
        for c in Criterion::ALL {
            assert_eq!(
                memoized(&l, c),
                chain_search(&l, c),
                "{} {}",
                entry.name,
                c.label()
            );
        }
    }
}

#[test]
fn s4_prime_index_examples() {
    let l = lattice("S4");
    let e = ChainEdgeSet::new(&l, Criterion::PrimeIndex);
    let transposition = l.find(&group(4, &["(1 2)"])).unwrap();
    let three_cycle = l.find(&group(4, &["(1 2 3)"])).unwrap();
    assert!(is_chain_subnormal(&l, transposition, &e));
    assert!(!is_chain_subnormal(&l, three_cycle, &e));
    assert!(!is_chain_abnormal(&l, three_cycle, &e));
    let s3 = l.find(&group(4, &["(1 2 3)", "(1 2)"])).unwrap();
    assert!(is_gaschutz(&l, s3));
    let search = chain_search(&l, Criterion::PrimeIndex);
    assert_eq!(search[transposition], (true, false));
    assert_eq!(search[three_cycle], (false, false));
    assert_eq!(search[s3], (false, true));
}

#[test]
fn a4_complement_is_abnormal_gaschutz_and_carter() {
    let l = lattice("A4");
    let c3 = l.find(&group(4, &["(1 2 3)"])).unwrap();
    let e = ChainEdgeSet::new(&l, Criterion::PrimeIndex);
    assert!(is_chain_abnormal(&l, c3, &e));
    assert!(is_gaschutz(&l, c3));
    assert!(is_carter(&l, c3));
    let a4 = lattice("S4");
    let alt = a4.find(&group(4, &["(1 2 3)", "(1 2)(3 4)"])).unwrap();
    assert!(!is_carter(&a4, alt));
}

#[test]
fn statuses_are_exclusive_and_class_invariant() {
    for entry in corpus() {
        let l = lattice_of(&entry);
        let status = status_all(&l);
        for c in Criterion::ALL {
            let e = ChainEdgeSet::new(&l, c);
            for h in 0..l.len() {
                if h == l.top() {
                    assert_eq!(status[h].get(c), Status::WholeGroup);
                    continue;
                }
                let sub = is_chain_subnormal(&l, h, &e);
                let abn = is_chain_abnormal(&l, h, &e);
                assert!(!(sub && abn), "{} node {h}", entry.name);
                let expect = match (sub, abn) {
                    (true, _) => Status::Subnormal,
                    (_, true) => Status::Abnormal,
                    _ => Status::Neither,
                };
                assert_eq!(status[h].get(c), expect);
                let rep = l.classes()[l.class_of(h)][0];
                assert_eq!(
                    status[h].get(c),
                    status[rep].get(c),
                    "{} node {h}",
                    entry.name
                );
            }
        }
    }
}

#[test]
fn prime_index_and_supersoluble_chains_agree_on_soluble_groups() {
    for entry in corpus() {
        let l = lattice_of(&entry);
        if !is_soluble(l.group()) {
            continue;
        }
        for s in status_all(&l) {
            assert_eq!(s.p_status, s.u_status, "{} node {}", entry.name, s.id);
        }
    }
}

#[test]
fn insoluble_groups_have_prime_index_neither_nodes() {
    for name in ["A5", "S5", "PSL27"] {
        let l = lattice(name);
        let status = status_all(&l);
        let found = (1..l.len()).any(|h| {
            l.is_cyclic(h)
                && eugroups::arith::is_prime_power(l.order(h) as u64)
                && status[h].p_status == Status::Neither
        });
        assert!(found, "{name}");
    }
    let l = lattice("A5");
    let c5 = l.find(&group(5, &["(1 2 3 4 5)"])).unwrap();
    assert_eq!(status_all(&l)[c5].p_status, Status::Neither);
}
