//! The tom Dieck splitting of fixed points of S3-sets, checked against
//! counts taken directly from the group.

use gmackey::group::FiniteGroup;
use gmackey::suites::{tom_dieck_gsets, tom_dieck_suite};

fn main() -> gmackey::Result<()> {
    let g = FiniteGroup::symmetric(3);
    let xs = tom_dieck_gsets(&g)?;
    let (splittings, report) = tom_dieck_suite(&g, &xs, None)?;
    for (x, td) in xs.iter().zip(&splittings) {
        println!("size {}: {} summands", x.size(), td.right.len());
    }
    println!("{report}");
    Ok(())
}
