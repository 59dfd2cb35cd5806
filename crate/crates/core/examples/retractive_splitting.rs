//! Functorial splitting of cofiber sequences of retractive sets.

use gmackey::group::FiniteGroup;
use gmackey::gset::GSet;
use gmackey::suites::splitting_for;

fn main() -> gmackey::Result<()> {
    let g = FiniteGroup::symmetric(3);
    println!("{}", splitting_for(&g, &[GSet::point(&g), GSet::regular(&g)], 3)?);
    Ok(())
}
