//! The assembled pseudo-linear map for C2 over the regular C2-set,
//! strictified and compared levelwise.

use gmackey::group::FiniteGroup;
use gmackey::gset::GSet;
use gmackey::suites::{assembly_bounds, assembly_suite};

fn main() -> gmackey::Result<()> {
    let g = FiniteGroup::cyclic(2);
    let mut bounds = assembly_bounds(&g);
    bounds.max_free = 1;
    bounds.orbit_spans_only = true;
    let assembly = assembly_suite(&g, &GSet::regular(&g), &bounds)?;
    println!("{}", assembly.report);
    for level in &assembly.levels {
        println!("{level:?}");
    }
    Ok(())
}
