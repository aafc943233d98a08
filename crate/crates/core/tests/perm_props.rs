use eugroups::{parse_permutation, PermGroup, Permutation};
use proptest::prelude::*;

const DEGREE: usize = 7;

fn permutation() -> impl Strategy<Value = Permutation> {
    Just((0..DEGREE as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

proptest! {
    #[test]
    fn composition_is_associative(a in permutation(), b in permutation(), c in permutation()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn identity_and_inverse(a in permutation()) {
        let id = Permutation::identity(DEGREE);
        prop_assert_eq!(a.compose(&id), a.clone());
        prop_assert_eq!(id.compose(&a), a.clone());
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn products_apply_left_to_right(a in permutation(), b in permutation(), x in 0..DEGREE) {
        prop_assert_eq!(a.compose(&b).apply(x), b.apply(a.apply(x)));
    }

    #[test]
    fn cycle_notation_round_trips(a in permutation()) {
        let text = a.to_string();
        prop_assert_eq!(parse_permutation(&text, DEGREE).unwrap(), a);
    }

    #[test]
    fn order_is_least_identity_power(a in permutation()) {
        let n = a.order();
        prop_assert!(a.pow(n).is_identity());
        for k in 1..n {
            prop_assert!(!a.pow(k).is_identity());
        }
    }

    #[test]
    fn generated_groups_satisfy_lagrange(a in permutation(), b in permutation()) {
        let g = PermGroup::from_generators(DEGREE, &[a.clone(), b]).unwrap();
        let h = PermGroup::from_generators(DEGREE, std::slice::from_ref(&a)).unwrap();
        prop_assert_eq!(h.order(), a.order() as u128);
        prop_assert_eq!(g.order() % h.order(), 0);
        prop_assert!(h.is_subgroup_of(&g));
        prop_assert_eq!(g.index(&h).unwrap() * h.order(), g.order());
    }
}
