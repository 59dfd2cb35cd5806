//! The parameter multicategories for C2, the multifunctor of span
//! categories, and a broken composition being caught.

use gmackey::group::FiniteGroup;
use gmackey::suites::{multiparam_suite, Mutation};

fn main() -> gmackey::Result<()> {
    let g = FiniteGroup::cyclic(2);
    println!("{}", multiparam_suite(&g, 3, 2, None)?);
    let broken = multiparam_suite(&g, 3, 2, Some(Mutation::BrokenComposition))?;
    println!("with a constant composite: {} failures", broken.failure_count);
    Ok(())
}
