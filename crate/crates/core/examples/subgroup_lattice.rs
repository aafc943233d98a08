//! Enumerating a subgroup lattice and reading off the structural
//! subgroups.

use eugroups::builders::{build, lookup};
use eugroups::SubgroupLattice;

fn main() -> eugroups::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".to_string());
    let g = build(&lookup(&name)?)?;
    let l = SubgroupLattice::new(&g)?;
    println!(
        "{name}: {} subgroups in {} conjugacy classes, {} maximal inclusions",
        l.len(),
        l.classes().len(),
        l.edges().len()
    );
    for class in l.classes() {
        let rep = class[0];
        let gens: Vec<String> = l
            .generator_perms(rep)
            .iter()
            .map(|p| p.to_string())
            .collect();
        println!(
            "  order {:>4} × {:<3} <{}>",
            l.order(rep),
            class.len(),
            gens.join(", ")
        );
    }
    let orders = |ids: Vec<usize>| ids.into_iter().map(|i| l.order(i)).collect::<Vec<_>>();
    println!("maximal subgroups: {:?}", orders(l.maximal_subgroups()));
    println!("normal subgroups:  {:?}", orders(l.normal_subgroups()));
    println!(
        "minimal normal:    {:?}",
        orders(l.minimal_normal_subgroups())
    );
    println!(
        "Frattini {}, Fitting {}",
        l.order(l.frattini()),
        l.order(l.fitting())
    );
    for p in [2, 3, 5] {
        println!("Sylow {p}: order {}", l.order(l.sylow(p)));
    }
    let series = l.chief_series(None)?;
    println!(
        "chief factors {:?}, cyclic {:?}",
        series.factor_orders, series.factor_cyclic
    );
    Ok(())
}
