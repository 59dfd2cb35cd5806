//! Tables of marks for a few small groups, each checked against a direct
//! count of conjugations.

use gmackey::group::FiniteGroup;
use gmackey::suites::marks_suite;

fn main() -> gmackey::Result<()> {
    for (name, g) in
        [("C2", FiniteGroup::cyclic(2)), ("S3", FiniteGroup::symmetric(3)), ("C2xC2", FiniteGroup::klein_four())]
    {
        let (t, report) = marks_suite(&g)?;
        println!("{name}: {:?}", t.marks);
        println!("{report}");
    }
    Ok(())
}
