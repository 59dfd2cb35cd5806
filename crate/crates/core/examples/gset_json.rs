//! Reading groups and G-sets from JSON and writing a report envelope.

use gmackey::io::{Envelope, GSetSpec, GroupSpec};
use gmackey::suites::tom_dieck_suite;

fn main() -> gmackey::Result<()> {
    let spec: GroupSpec =
        serde_json::from_str(r#"{"order": 3, "mul": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}"#).expect("valid JSON");
    let g = spec.build()?;
    let x: GSetSpec = serde_json::from_str(r#"{"size": 4, "action": {"1": [1, 2, 0, 3]}}"#).expect("valid JSON");
    let x = x.build(&g)?;
    let bad: GSetSpec = serde_json::from_str(r#"{"size": 2, "action": {"1": [1, 0]}}"#).expect("valid JSON");
    if let Err(e) = bad.build(&g) {
        println!("rejected: {e}");
    }
    let (_, report) = tom_dieck_suite(&g, &[x], None)?;
    let envelope = Envelope::new("tomdieck", vec![report], serde_json::Value::Null);
    println!("{}", serde_json::to_string_pretty(&envelope).expect("serializable"));
    Ok(())
}
