//! Brute-force E_U status against the structural description through the
//! supersoluble residual `D` and a complement `H`.

use eugroups::builders::{build, lookup};
use eugroups::theorems::analyze;
use eugroups::SubgroupLattice;

fn main() -> eugroups::Result<()> {
    for name in ["C2^2:C3", "S4", "C5^2:Q8", "C3^2:Q8"] {
        let l = SubgroupLattice::new(&build(&lookup(name)?)?)?;
        let r = analyze(name, &l);
        println!(
            "{name}: |G| = {}, |D| = {}, E_U by brute force: {}",
            r.order, r.d_order, r.brute_eu.holds
        );
        if let Some(w) = &r.brute_eu.witness {
            println!(
                "  neither U-subnormal nor U-abnormal: order {} <{}>",
                w.order,
                w.generators.join(", ")
            );
        }
        if let Some(h) = &r.theorem_a.complement {
            println!("  complement H of order {}", h.order);
        }
        for (k, c) in &r.theorem_a.conditions {
            match &c.witness {
                None => println!("  ({k}) pass"),
                Some(w) => println!("  ({k}) FAIL: {w}"),
            }
        }
        println!("  verdict: {:?}", r.theorem_a.verdict);
    }
    Ok(())
}
