//! Runs the lemma instances on a few groups and prints one line per lemma.

use std::collections::BTreeMap;

use eugroups::builders::{build, lookup};
use eugroups::lemmas::{run_lemma_suite, LemmaConfig};
use eugroups::SubgroupLattice;

fn main() -> eugroups::Result<()> {
    let mut groups = Vec::new();
    for name in ["A4", "S4", "S3xC5", "C5^2:Q8", "A5", "S5"] {
        groups.push((
            name.to_string(),
            SubgroupLattice::new(&build(&lookup(name)?)?)?,
        ));
    }
    let results = run_lemma_suite(&groups, &LemmaConfig::default());
    let mut by_lemma: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for r in &results {
        let e = by_lemma.entry(&r.lemma).or_default();
        e.0 += r.checked;
        e.1 += usize::from(!r.pass());
    }
    for (lemma, (checked, failed)) in by_lemma {
        println!("{lemma:<8} {checked:>5} instances, {failed} failing groups");
    }
    for r in results
        .iter()
        .filter(|r| r.lemma == "insoluble-prime-index-witness" && r.witness.is_some())
    {
        println!("{}: {}", r.group, r.witness.as_deref().unwrap_or_default());
    }
    Ok(())
}
