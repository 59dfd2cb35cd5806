//! Coherence of the comparison 2-cells for C2 and S3.

use gmackey::suites::{theta_bounds_c2, theta_bounds_s3, theta_suite};

fn main() -> gmackey::Result<()> {
    for (g, bounds) in [theta_bounds_c2(None)?, theta_bounds_s3(None)?] {
        println!("{}", theta_suite(&g, &bounds)?);
    }
    Ok(())
}
