use gmackey::multicat::{build_ms, build_rs};

#[test]
fn rs_and_ms_axioms_for_four_objects_up_to_arity_four() {
    let rs = build_rs(4, 4).unwrap();
    let report = rs.multicat.check_axioms();
    assert!(report.passed(), "{report}");
    let ms = build_ms(4, 4).unwrap();
    let report = ms.multicat.check_axioms();
    assert!(report.passed(), "{report}");
}
