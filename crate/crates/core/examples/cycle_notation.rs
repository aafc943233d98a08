//! Parsing, composing and printing permutations in cycle notation.
//!
//! Products are read left to right: `p.compose(&q)` applies `p` first.

use eugroups::{parse_permutation, Permutation};

fn main() -> eugroups::Result<()> {
    let a = parse_permutation("(1 2 3)", 4)?;
    let b = parse_permutation("(3,4)", 4)?;
    println!("a = {a}, b = {b}");
    println!("a then b = {}", a.compose(&b));
    println!("b then a = {}", b.compose(&a));
    println!(
        "a^-1 = {}, order of ab = {}",
        a.inverse(),
        a.compose(&b).order()
    );
    println!("a conjugated by b = {}", a.conjugate_by(&b));

    // Several cycles in one string multiply left to right.
    let c = parse_permutation("(1 2)(2 3)", 3)?;
    println!("(1 2)(2 3) = {c}");

    let id = Permutation::identity(5);
    println!("identity prints as {id}");

    for bad in ["(1 2 1)", "(1 6)", "(1 2"] {
        match parse_permutation(bad, 5) {
            Ok(p) => println!("{bad:>8} -> {p}"),
            Err(e) => println!("{bad:>8} -> error: {e}"),
        }
    }
    Ok(())
}
