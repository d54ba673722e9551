//! Reduced tables for elements of the V instance and the group action on them.

use expansion_cubes::thompson::{canonicalize, expand, PrefixMap, ThompsonV, VGroupElement, Word};
use expansion_cubes::ExpansionInstance;

fn main() -> expansion_cubes::Result<()> {
    // two representatives of the same germ on B_1
    let first: PrefixMap = "1->0".parse()?;
    let second: PrefixMap = "10->00, 11->01".parse()?;
    let omega: Word = "1".parse()?;
    let a = canonicalize(&first, &omega)?;
    let b = canonicalize(&second, &omega)?;
    println!("{a}\n{b}\nequal: {}", a == b);

    let (left, right) = expand(&a);
    println!("expansion: {left} | {right}");
    let back = ThompsonV.coexpansions(&[left, right]);
    println!("{} contractions of the pair:", back.len());
    for t in &back {
        println!("    {t}");
    }

    let g = VGroupElement::from_map(&"0->10, 10->0, 11->11".parse()?)?;
    println!("g = {g}\ng . {a} = {}", g.act(&a));
    Ok(())
}
