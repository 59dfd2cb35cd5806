//! Strictification of the seeded corpus of pseudo-linear maps between
//! table modules, and of pushforwards of span modules.

use gmackey::suites::{strictification_suite, Mutation};

fn main() -> gmackey::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let (instances, report) = strictification_suite(seed, None)?;
    println!("{instances} instances");
    println!("{report}");
    let (_, inverted) = strictification_suite(seed, Some(Mutation::InvertedTheta))?;
    println!("with an inverted component: {:?}", inverted.failed_diagrams());
    Ok(())
}
