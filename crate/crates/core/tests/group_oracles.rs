mod common;

use std::collections::HashSet;

use common::{bfs_closure, corpus, elements, group, perm};
use eugroups::builders::{build, lookup, GroupSpec};
use eugroups::{PermGroup, Permutation};

fn set(g: &PermGroup) -> HashSet<Permutation> {
    elements(g)
}

#[test]
fn stabilizer_chain_order_matches_closure() {
    for entry in corpus() {
        let g = build(&entry.spec).unwrap();
        if g.order() > 2000 {
            continue;
        }
        let listed = g.elements().unwrap();
        let distinct: HashSet<_> = listed.iter().cloned().collect();
        assert_eq!(distinct.len(), listed.len(), "{}", entry.name);
        assert_eq!(distinct, set(&g), "{}", entry.name);
        assert_eq!(g.order(), listed.len() as u128, "{}", entry.name);
    }
}

#[test]
fn mixed_generators_on_five_points() {
    let gens = [perm("(1 2 3)", 5), perm("(1 2)(4 5)", 5)];
    let g = PermGroup::from_generators(5, &gens).unwrap();
    assert_eq!(g.order(), bfs_closure(5, &gens).len() as u128);
    assert_eq!(g.order(), 6);
}

#[test]
fn intersection_join_by_element_scan() {
    let a4 = group(4, &["(1 2 3)", "(1 2)(3 4)"]);
    let d8 = group(4, &["(1 2 3 4)", "(1 3)"]);
    let meet: HashSet<_> = set(&a4).intersection(&set(&d8)).cloned().collect();
    let i = a4.intersection(&d8).unwrap();
    assert_eq!(set(&i), meet);
    assert!(i.same_group(&group(4, &["(1 2)(3 4)", "(1 3)(2 4)"])));

    let v4 = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
    let c3 = group(4, &["(1 2 3)"]);
    let j = v4.join(&c3).unwrap();
    let gens: Vec<_> = v4
        .generators()
        .iter()
        .chain(c3.generators())
        .cloned()
        .collect();
    assert_eq!(set(&j), bfs_closure(4, &gens));
    assert_eq!(j.order(), 12);
}

#[test]
fn normalizer_centralizer_by_element_scan() {
    let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
    let a4 = group(4, &["(1 2 3)", "(1 2)(3 4)"]);
    let cases = [
        (&s4, group(4, &["(1 2 3)"])),
        (&a4, group(4, &["(1 2 3)"])),
        (&a4, group(4, &["(1 2)(3 4)", "(1 3)(2 4)"])),
        (&s4, group(4, &["(1 2)"])),
    ];
    for (g, h) in cases {
        let hs = set(&h);
        let norm: HashSet<_> = set(g)
            .into_iter()
            .filter(|x| hs.iter().all(|y| hs.contains(&y.conjugate_by(x))))
            .collect();
        let cent: HashSet<_> = set(g)
            .into_iter()
            .filter(|x| hs.iter().all(|y| x.compose(y) == y.compose(x)))
            .collect();
        assert_eq!(set(&g.normalizer(&h).unwrap()), norm);
        assert_eq!(set(&g.centralizer(&h).unwrap()), cent);
    }
    assert_eq!(s4.normalizer(&group(4, &["(1 2 3)"])).unwrap().order(), 6);
    assert_eq!(s4.centralizer(&group(4, &["(1 2)"])).unwrap().order(), 4);
}

#[test]
fn core_is_intersection_of_conjugates() {
    let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
    for k in [
        group(4, &["(1 2 3)", "(1 2)"]),
        group(4, &["(1 2 3 4)", "(1 3)"]),
        group(4, &["(1 2 3)", "(1 2)(3 4)"]),
    ] {
        let ks = set(&k);
        let mut core = ks.clone();
        for g in set(&s4) {
            let conj: HashSet<_> = ks.iter().map(|x| x.conjugate_by(&g)).collect();
            core.retain(|x| conj.contains(x));
        }
        assert_eq!(set(&s4.core(&k).unwrap()), core);
    }
}

#[test]
fn derived_subgroup_and_normal_closure_by_commutators() {
    let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
    let a4 = group(4, &["(1 2 3)", "(1 2)(3 4)"]);
    for (g, order) in [(&s4, 12), (&a4, 4)] {
        let els: Vec<_> = set(g).into_iter().collect();
        let comms: Vec<_> = els
            .iter()
            .flat_map(|a| els.iter().map(move |b| a.commutator(b)))
            .collect();
        let oracle = bfs_closure(4, &comms);
        assert_eq!(set(&g.derived_subgroup()), oracle);
        assert_eq!(oracle.len(), order);
    }
    let conjugates: Vec<_> = set(&s4)
        .iter()
        .map(|g| perm("(1 2)(3 4)", 4).conjugate_by(g))
        .collect();
    let nc = s4.normal_closure(&[perm("(1 2)(3 4)", 4)]).unwrap();
    assert_eq!(set(&nc), bfs_closure(4, &conjugates));
    assert_eq!(nc.order(), 4);
}

#[test]
fn quotients_have_the_right_order_and_abelianness() {
    for name in ["S4", "C3^2:Q8", "A4xC2", "S3xS3"] {
        let g = build(&lookup(name).unwrap()).unwrap();
        let l = eugroups::SubgroupLattice::new(&g).unwrap();
        let derived = g.derived_subgroup();
        for n in l.normal_subgroups() {
            let ng = l.subgroup(n);
            let q = g.quotient(&ng).unwrap();
            assert_eq!(q.order() * ng.order(), g.order(), "{name}");
            assert_eq!(q.is_abelian(), derived.is_subgroup_of(&ng), "{name}");
            let c = g.core(&ng).unwrap();
            assert!(c.same_group(&ng));
        }
        for id in 0..l.len() {
            let k = l.subgroup(id);
            assert_eq!(g.order() % k.order(), 0);
            let c = g.core(&k).unwrap();
            assert!(c.is_subgroup_of(&k) && g.has_normal_subgroup(&c));
            let image = g.coset_quotient_by_core(&k).unwrap();
            assert_eq!(image.order() * c.order(), g.order(), "{name}");
        }
    }
}

#[test]
fn affine_translations_form_a_normal_elementary_abelian_complemented_subgroup() {
    let spec = lookup("SL23_affine7").unwrap();
    let g = build(&spec).unwrap();
    assert_eq!(g.order(), 1176);
    let origin_stabilizer = g
        .generators()
        .iter()
        .filter(|p| p.apply(0) == 0)
        .cloned()
        .collect::<Vec<_>>();
    let h = PermGroup::from_generators(g.degree(), &origin_stabilizer).unwrap();
    let translations = g
        .generators()
        .iter()
        .filter(|p| p.apply(0) != 0)
        .cloned()
        .collect::<Vec<_>>();
    let t = PermGroup::from_generators(g.degree(), &translations).unwrap();
    assert_eq!((t.order(), h.order()), (49, 24));
    assert!(t.is_abelian() && g.has_normal_subgroup(&t));
    assert!(set(&t).iter().all(|x| x.order() <= 7));
    assert!(t.intersection(&h).unwrap().is_trivial());
    assert!(t.join(&h).unwrap().same_group(&g));

    let agl13 = build(&GroupSpec::affine("AGL13", 3, 1, vec![vec![vec![2]]])).unwrap();
    assert_eq!((agl13.order(), agl13.degree()), (6, 3));
    assert!(!agl13.is_abelian());
}
