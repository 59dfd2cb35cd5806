//! Strict associativity and units of spans under the lexicographic
//! pullback, and a span on which the identity span is not a strict unit.

use gmackey::group::FiniteGroup;
use gmackey::suites::span_strictness;

fn main() -> gmackey::Result<()> {
    let s = span_strictness(&FiniteGroup::cyclic(4), 4)?;
    println!("{}", s.report);
    if let Some(w) = s.identity_witness {
        println!("identity span reorders the apex of {w:?}");
    }
    Ok(())
}
