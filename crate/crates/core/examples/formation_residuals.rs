//! Nilpotent and supersoluble membership, residuals and critical groups.

use eugroups::builders::{build, lookup};
use eugroups::formations::{
    is_critical, is_miller_moreno, is_nilpotent, is_schmidt, is_supersoluble, residual,
    FormationTag,
};
use eugroups::SubgroupLattice;

fn main() -> eugroups::Result<()> {
    println!("group      nilp  ssol  G^N  G^U  Schmidt  U-crit  MM");
    for name in ["S3", "Q8", "A4", "S4", "SL23", "C3^2:C4", "A5"] {
        let l = SubgroupLattice::new(&build(&lookup(name)?)?)?;
        let g = l.top();
        println!(
            "{:<10} {:<5} {:<5} {:>3}  {:>3}  {:<8} {:<7} {}",
            name,
            is_nilpotent(&l, g),
            is_supersoluble(&l, g),
            l.order(residual(&l, g, FormationTag::Nilpotent)),
            l.order(residual(&l, g, FormationTag::Supersoluble)),
            is_schmidt(&l, g),
            is_critical(&l, g, FormationTag::Supersoluble),
            is_miller_moreno(&l, g),
        );
    }
    Ok(())
}
