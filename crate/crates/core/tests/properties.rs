use gmackey::burnside::{canonical_class, spans_up_to_iso, tom_dieck_pi0};
use gmackey::group::{class_representatives, FiniteGroup};
use gmackey::gset::{coproduct, coset_gset, product, GSet};
use gmackey::hfp::{embed_extract_iso, embed_h_object, extract_h_action, HfpObject};
use gmackey::io::GSetSpec;
use gmackey::retractive::{retractive_isomorphisms, retractive_sets_up_to, RetractiveGSet};
use gmackey::span::Span;
use gmackey::strictify::strictify_map;
use gmackey::suites::{marks_by_conjugation, verify_tom_dieck};
use gmackey::table::coherent_corpus;
use proptest::prelude::*;
use proptest::sample::Index;

fn groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::klein_four(),
        FiniteGroup::symmetric(3),
    ]
}

fn orbits(g: &FiniteGroup) -> Vec<GSet> {
    class_representatives(g).unwrap().iter().map(|h| coset_gset(g, h)).collect()
}

/// A disjoint union of orbits chosen by the indices.
fn union_of(g: &FiniteGroup, picks: &[Index]) -> GSet {
    let os = orbits(g);
    picks.iter().fold(GSet::empty(g), |acc, i| coproduct(&acc, &os[i.index(os.len())]))
}

fn pick_span(g: &FiniteGroup, a: &GSet, b: &GSet, i: &Index, rotate: usize) -> Option<Span> {
    let spans = spans_up_to_iso(g, a, b, 6).unwrap();
    if spans.is_empty() {
        return None;
    }
    let s = &spans[i.index(spans.len())];
    let n = s.apex_size();
    let perm: Vec<usize> = (0..n).map(|k| (k + rotate) % n.max(1)).collect();
    Some(s.relabel(&perm))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composition_is_strictly_associative(gi: Index, o: [Index; 4], s: [Index; 3], r: [usize; 3]) {
        let g = &groups()[gi.index(5)];
        let os = orbits(g);
        let ob: Vec<&GSet> = o.iter().map(|i| &os[i.index(os.len())]).collect();
        let (Some(x), Some(y), Some(z)) = (
            pick_span(g, ob[0], ob[1], &s[0], r[0] % 7),
            pick_span(g, ob[1], ob[2], &s[1], r[1] % 7),
            pick_span(g, ob[2], ob[3], &s[2], r[2] % 7),
        ) else { return Ok(()) };
        prop_assert_eq!(x.compose(&y).unwrap().compose(&z).unwrap(), x.compose(&y.compose(&z).unwrap()).unwrap());
    }

    #[test]
    fn formal_units_are_strict(gi: Index, o: [Index; 2], s: Index, r: usize) {
        let g = &groups()[gi.index(5)];
        let os = orbits(g);
        let (a, b) = (&os[o[0].index(os.len())], &os[o[1].index(os.len())]);
        let Some(x) = pick_span(g, a, b, &s, r % 7) else { return Ok(()) };
        prop_assert_eq!(Span::unit(a).compose(&x).unwrap(), x.clone());
        prop_assert_eq!(x.compose(&Span::unit(b)).unwrap(), x);
    }

    #[test]
    fn composition_respects_isomorphism_classes(gi: Index, o: [Index; 3], s: [Index; 2], r: [usize; 2]) {
        let g = &groups()[gi.index(5)];
        let os = orbits(g);
        let ob: Vec<&GSet> = o.iter().map(|i| &os[i.index(os.len())]).collect();
        let (Some(x), Some(x2), Some(y)) = (
            pick_span(g, ob[0], ob[1], &s[0], 0),
            pick_span(g, ob[0], ob[1], &s[0], r[0] % 7),
            pick_span(g, ob[1], ob[2], &s[1], r[1] % 7),
        ) else { return Ok(()) };
        prop_assert_eq!(canonical_class(g, &x.compose(&y).unwrap()), canonical_class(g, &x2.compose(&y).unwrap()));
    }

    #[test]
    fn marks_are_multiplicative_and_additive(gi: Index, a in prop::collection::vec(any::<Index>(), 0..3), b in prop::collection::vec(any::<Index>(), 0..3)) {
        let g = &groups()[gi.index(5)];
        let (x, y) = (union_of(g, &a), union_of(g, &b));
        for k in class_representatives(g).unwrap() {
            let (fx, fy) = (x.fixed_points(&k).len(), y.fixed_points(&k).len());
            prop_assert_eq!(product(&x, &y).fixed_points(&k).len(), fx * fy);
            prop_assert_eq!(coproduct(&x, &y).fixed_points(&k).len(), fx + fy);
        }
        for h in class_representatives(g).unwrap() {
            for k in class_representatives(g).unwrap() {
                prop_assert_eq!(coset_gset(g, &h).fixed_points(&k).len(), marks_by_conjugation(g, &h, &k));
            }
        }
    }

    #[test]
    fn gset_json_round_trips(gi: Index, a in prop::collection::vec(any::<Index>(), 0..4)) {
        let g = &groups()[gi.index(5)];
        let x = union_of(g, &a);
        let text = serde_json::to_string(&GSetSpec::of(&x)).unwrap();
        let back: GSetSpec = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.build(g).unwrap(), x);
    }

    #[test]
    fn tom_dieck_splitting_matches_counts(gi: Index, a in prop::collection::vec(any::<Index>(), 1..4)) {
        let g = &groups()[gi.index(5)];
        let x = union_of(g, &a);
        let td = tom_dieck_pi0(g, &x).unwrap();
        let report = verify_tom_dieck(g, &x, &td).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn homotopy_fixed_points_round_trip(gi: Index, hi: Index, bi: Index, yi: Index) {
        let g = &groups()[gi.index(5)];
        let classes = class_representatives(g).unwrap();
        let h = &classes[hi.index(classes.len())];
        let bases = [GSet::point(g), GSet::regular(g), coset_gset(g, h)];
        let base = &bases[bi.index(3)];
        let ys = retractive_sets_up_to(g, h, base, 3).unwrap();
        let y = &ys[yi.index(ys.len())];
        let f = embed_h_object(g, y);
        let y_json: RetractiveGSet = serde_json::from_str(&serde_json::to_string(y).unwrap()).unwrap();
        prop_assert_eq!(&y_json, y);
        let f_json: HfpObject = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(&f_json, &f);
        let back = extract_h_action(g, &f).unwrap();
        prop_assert!(!retractive_isomorphisms(&back, y, 1).is_empty());
        let iso = embed_extract_iso(g, &f).unwrap();
        prop_assert!(iso.is_isomorphism());
        prop_assert_eq!(iso.first_failure(g), None);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn seeded_corpus_strictifies(seed: u64, picks in prop::collection::vec(any::<Index>(), 3)) {
        let corpus = coherent_corpus(seed);
        for i in picks {
            let e = &corpus[i.index(corpus.len())];
            let report = strictify_map(&e.map, 4);
            prop_assert!(report.passed(), "{}: {}", e.name, report);
        }
    }
}
