//! Transfer followed by restriction in the Burnside category of S3,
//! compared with the double coset formula.

use gmackey::burnside::canonical_class;
use gmackey::group::{class_representatives, FiniteGroup};
use gmackey::suites::{double_coset_representatives, double_coset_span, transfer_then_restriction};

fn main() -> gmackey::Result<()> {
    let g = FiniteGroup::symmetric(3);
    for h in class_representatives(&g)? {
        for k in class_representatives(&g)? {
            let composite = canonical_class(&g, &transfer_then_restriction(&g, &h, &k)?);
            let formula = canonical_class(&g, &double_coset_span(&g, &h, &k)?);
            let cosets = double_coset_representatives(&g, &h, &k).len();
            println!(
                "|H| = {}, |K| = {}: {cosets} double cosets, agree: {}",
                h.order(),
                k.order(),
                composite == formula
            );
        }
    }
    Ok(())
}
