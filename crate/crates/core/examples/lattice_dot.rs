//! Prints the class lattice of a catalog group in Graphviz DOT.
//!
//!     cargo run --example lattice_dot -- A4 | dot -Tsvg > a4.svg

use eugroups::builders::{build, lookup};
use eugroups::export::emit_dot;
use eugroups::SubgroupLattice;

fn main() -> eugroups::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".to_string());
    let l = SubgroupLattice::new(&build(&lookup(&name)?)?)?;
    print!("{}", emit_dot(&l));
    Ok(())
}
