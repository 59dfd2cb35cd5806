//! Retractive H-sets embedded as homotopy fixed point objects, the span
//! action on them, and Beck–Chevalley isomorphisms.

use gmackey::group::FiniteGroup;
use gmackey::gset::GSet;
use gmackey::suites::{hfp_suite, Mutation};

fn main() -> gmackey::Result<()> {
    let g = FiniteGroup::symmetric(3);
    let bases = [GSet::point(&g), GSet::regular(&g)];
    println!("{}", hfp_suite(&g, &bases, 2, None)?);
    let swapped = hfp_suite(&g, &bases, 2, Some(Mutation::NonEquivariantBijection))?;
    println!("{:?}", swapped.first_failure());
    Ok(())
}
