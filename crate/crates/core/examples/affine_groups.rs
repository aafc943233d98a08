//! Building groups: classical families, direct products, affine groups
//! `F_p^k ⋊ ⟨M⟩` and the built-in catalog.

use eugroups::builders::{build, builtin_catalog, lookup, GroupSpec};

fn main() -> eugroups::Result<()> {
    let specs = [
        GroupSpec::cyclic(12),
        GroupSpec::dihedral(5),
        GroupSpec::symmetric(4),
        GroupSpec::product(vec![GroupSpec::symmetric(3), GroupSpec::cyclic(5)]),
        // F_2^2 extended by a matrix of order 3: a copy of A4.
        GroupSpec::affine("F2^2:C3", 2, 2, vec![vec![vec![0, 1], vec![1, 1]]]),
    ];
    for spec in &specs {
        let g = build(spec)?;
        println!(
            "{:<10} degree {:>2}  order {}",
            spec.name,
            g.degree(),
            g.order()
        );
    }

    let sl23 = lookup("SL23_affine7")?;
    let g = build(&sl23)?;
    println!(
        "F_7^2 ⋊ SL(2,3): degree {}, order {}",
        g.degree(),
        g.order()
    );

    let singular = GroupSpec::affine("bad", 3, 2, vec![vec![vec![1, 1], vec![1, 1]]]);
    println!("singular matrix: {}", build(&singular).unwrap_err());

    println!("{} catalog entries", builtin_catalog().len());
    Ok(())
}
