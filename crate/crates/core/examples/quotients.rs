//! Coset actions: the permutation image of `L` on the right cosets of `K`
//! is `L / core_L(K)`, and a normal subgroup gives the quotient group.

use eugroups::{parse_permutation, CosetAction, PermGroup};

fn main() -> eugroups::Result<()> {
    let p = |s| parse_permutation(s, 4);
    let s4 = PermGroup::from_generators(4, &[p("(1 2 3 4)")?, p("(1 2)")?])?;
    let d8 = PermGroup::from_generators(4, &[p("(1 2 3 4)")?, p("(1 3)")?])?;
    let v4 = PermGroup::from_generators(4, &[p("(1 2)(3 4)")?, p("(1 3)(2 4)")?])?;

    println!(
        "|S4| = {}, |D8| = {}, index {}",
        s4.order(),
        d8.order(),
        s4.index(&d8)?
    );
    let core = s4.core(&d8)?;
    println!("core of D8 in S4 has order {}", core.order());

    let action = CosetAction::new(&s4, &d8)?;
    println!(
        "S4 acts on {} cosets of D8; image has order {}",
        action.num_cosets(),
        action.image().order()
    );

    let q = s4.quotient(&v4)?;
    println!(
        "S4 / V4 has order {} and is abelian: {}",
        q.order(),
        q.is_abelian()
    );
    println!(
        "derived subgroup of S4 / V4 has order {}",
        q.derived_subgroup().order()
    );

    match s4.quotient(&d8) {
        Ok(_) => println!("unexpected: D8 is normal"),
        Err(e) => println!("S4 / D8: {e}"),
    }
    Ok(())
}
