//! Prime-index and formation chains: which subgroups are subnormal,
//! abnormal, or neither.

use eugroups::builders::{build, lookup};
use eugroups::subnorm::{is_carter, is_gaschutz, status_all, Status};
use eugroups::SubgroupLattice;

fn main() -> eugroups::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".to_string());
    let l = SubgroupLattice::new(&build(&lookup(&name)?)?)?;
    let status = status_all(&l);
    println!("{name}: status per conjugacy class (P = prime index, U, N)");
    for class in l.classes() {
        let s = &status[class[0]];
        println!(
            "  order {:>4} × {:<3} P {:<11} U {:<11} N {:<11} Gaschütz {:<5} Carter {}",
            l.order(class[0]),
            class.len(),
            format!("{:?}", s.p_status),
            format!("{:?}", s.u_status),
            format!("{:?}", s.n_status),
            is_gaschutz(&l, class[0]),
            is_carter(&l, class[0]),
        );
        if s.u_status == Status::Neither {
            let w = &s.witnesses["U"];
            println!(
                "      admissible edge above: {} < {} (index {}); {} nodes reachable upward",
                w.edge.0,
                w.edge.1,
                w.edge.2,
                w.reachable.len()
            );
        }
    }
    Ok(())
}
