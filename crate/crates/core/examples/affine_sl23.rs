//! The group F_7^2 ⋊ SL(2,3) of order 1176: its supersoluble residual is
//! F_7^2 ⋊ Q8 (order 392, not nilpotent). Because the central involution
//! of SL(2,3) commutes with an element of order 3, the subgroups of order 3
//! sit in a subgroup of order 6 at prime index but are not U-subnormal, so
//! the group is not an E_U group; the structural conditions agree.

use std::time::Instant;

use eugroups::builders::{build, lookup};
use eugroups::theorems::analyze;
use eugroups::SubgroupLattice;

fn main() -> eugroups::Result<()> {
    let t = Instant::now();
    let g = build(&lookup("SL23_affine7")?)?;
    let l = SubgroupLattice::new(&g)?;
    println!(
        "{} subgroups in {} classes ({:?})",
        l.len(),
        l.classes().len(),
        t.elapsed()
    );
    let r = analyze("F7^2:SL(2,3)", &l);
    println!("|D| = {}, D nilpotent: {}", r.d_order, r.d_nilpotent);
    println!("E_U by brute force: {}", r.brute_eu.holds);
    if let Some(w) = &r.brute_eu.witness {
        println!("witness: order {} <{}>", w.order, w.generators.join(", "));
    }
    for (k, c) in &r.theorem_a.conditions {
        println!("({k}) {}", c.witness.as_deref().unwrap_or("pass"));
    }
    println!(
        "verdict A: {:?}, verdict B: {:?}",
        r.theorem_a.verdict, r.theorem_b.verdict
    );
    Ok(())
}
