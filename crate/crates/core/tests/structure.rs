mod common;

use common::{corpus, group, lattice_of};
use eugroups::arith::{is_prime_power, prime_divisors};
use eugroups::builders::{build, lookup};
use eugroups::formations::{
    is_nilpotent, is_nilpotent_by_maximals, is_soluble, is_supersoluble, is_supersoluble_huppert,
    is_supersoluble_section, is_u_central, residual, FormationTag, Section,
};
use eugroups::SubgroupLattice;

fn lattice(name: &str) -> SubgroupLattice {
    SubgroupLattice::new(&build(&lookup(name).unwrap()).unwrap()).unwrap()
}

#[test]
fn frattini_fitting_and_hall_invariants() {
    for entry in corpus() {
        let l = lattice_of(&entry);
        let phi = l.frattini();
        assert!(l.is_normal(phi));
        assert!(l
            .maximal_subgroups()
            .into_iter()
            .all(|m| l.is_subgroup(phi, m)));

        let f = l.fitting();
        assert!(l.is_normal(f) && is_nilpotent(&l, f), "{}", entry.name);
        for n in l.normal_subgroups() {
            if is_nilpotent(&l, n) {
                assert!(l.is_subgroup(n, f), "{}", entry.name);
            }
        }

        let order = l.order(l.top()) as u64;
        let primes = prime_divisors(order);
        if is_soluble(l.group()) {
            for mask in 1u32..(1 << primes.len()) {
                let pi: Vec<u64> = (0..primes.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| primes[i])
                    .collect();
                let h = l
                    .hall(&pi)
                    .unwrap_or_else(|| panic!("{} {pi:?}", entry.name));
                let ho = l.order(h) as u64;
                assert_eq!(num_integer::gcd(ho, order / ho), 1);
                assert!(prime_divisors(ho).iter().all(|p| pi.contains(p)));
            }
        }
    }
}

#[test]
fn chief_factors_multiply_to_the_order() {
    for entry in corpus() {
        let l = lattice_of(&entry);
        let series = l.chief_series(None).unwrap();
        let product: usize = series.factor_orders.iter().product();
        assert_eq!(product, l.order(l.top()), "{}", entry.name);
        for w in series.terms.windows(2) {
            assert!(l.is_normal(w[0]) && l.is_subgroup(w[0], w[1]));
            let between = l
                .interval(w[0], w[1])
                .into_iter()
                .filter(|&x| x != w[0] && x != w[1] && l.is_normal(x))
                .count();
            assert_eq!(between, 0, "{}", entry.name);
        }
        if is_soluble(l.group()) {
            assert!(series
                .factor_orders
                .iter()
                .all(|&o| is_prime_power(o as u64)));
        }
        let d = residual(&l, l.top(), FormationTag::Supersoluble);
        let through = l.chief_series(Some(d)).unwrap();
        assert!(through.terms.contains(&d));
        let mut a = series.factor_orders.clone();
        let mut b = through.factor_orders.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{}", entry.name);
    }
}

#[test]
fn supersolubility_tests_agree_and_contain_nilpotency() {
    for entry in corpus() {
        let l = lattice_of(&entry);
        for m in 0..l.len() {
            let s = Section::whole(&l, m);
            assert_eq!(
                is_supersoluble_section(&l, s),
                is_supersoluble_huppert(&l, s),
                "{} node {m}",
                entry.name
            );
            let nil = is_nilpotent(&l, m);
            assert_eq!(nil, is_nilpotent_by_maximals(&l, s));
            assert!(!nil || is_supersoluble(&l, m));
        }
    }
}

#[test]
fn residual_postconditions() {
    for entry in corpus() {
        let l = lattice_of(&entry);
        for f in [FormationTag::Nilpotent, FormationTag::Supersoluble] {
            let r = residual(&l, l.top(), f);
            assert!(l.is_normal(r));
            let top = Section::new(&l, l.top(), r).unwrap();
            assert!(eugroups::formations::in_formation_section(&l, top, f));
            for n in l.normal_subgroups() {
                let s = Section::new(&l, l.top(), n).unwrap();
                if eugroups::formations::in_formation_section(&l, s, f) {
                    assert!(l.is_subgroup(r, n), "{}", entry.name);
                }
            }
        }
    }
}

#[test]
fn residual_examples() {
    let s4 = lattice("S4");
    let v4 = s4.find(&group(4, &["(1 2)(3 4)", "(1 3)(2 4)"])).unwrap();
    let a4 = s4.find(&group(4, &["(1 2 3)", "(1 2)(3 4)"])).unwrap();
    assert_eq!(residual(&s4, s4.top(), FormationTag::Supersoluble), v4);
    assert_eq!(residual(&s4, s4.top(), FormationTag::Nilpotent), a4);
    let ex = lattice("C2^2:C3");
    let d = residual(&ex, ex.top(), FormationTag::Supersoluble);
    assert_eq!((ex.order(d), ex.order(ex.top()) / ex.order(d)), (4, 3));
}

#[test]
fn u_centrality_matches_the_quotient_by_a_supplement_core() {
    // A maximal subgroup M not containing a minimal normal R has
    // M R = G, and G / core(M) is supersoluble iff R has prime order.
    for entry in corpus() {
        let l = lattice_of(&entry);
        if !is_soluble(l.group()) {
            continue;
        }
        for r in l.minimal_normal_subgroups() {
            for m in l.maximal_subgroups() {
                if l.is_subgroup(r, m) {
                    continue;
                }
                let core = l.core_in(m, l.top());
                let quotient = Section::new(&l, l.top(), core).unwrap();
                assert_eq!(
                    is_u_central(&l, r).unwrap(),
                    is_supersoluble_section(&l, quotient),
                    "{} R {r} M {m}",
                    entry.name
                );
            }
        }
    }
}
