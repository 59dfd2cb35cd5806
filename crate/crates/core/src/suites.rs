//! The verification suites run by the command line and the acceptance
//! target, each checked against an independent oracle where one exists.

use std::collections::BTreeSet;

use crate::assemble::{assemble_and_strictify, Assembly, AssemblyBounds, PushSpan};
use crate::burnside::{
    burnside_basis, canonical_class, spans_up_to_iso, table_of_marks, tom_dieck_pi0, unit_coordinates, MackeyTable,
    TableOfMarks, TomDieck,
};
use crate::error::Result;
use crate::group::{class_representatives, subgroups, FiniteGroup, Subgroup};
use crate::gset::{coproduct, coset_gset, orbit_map_from_fixed_point, product, CosetSpace, GMap, GSet};
use crate::hfp::{
    act_span, beck_chevalley, compare_geometric, embed_extract_iso, embed_h_object, extract_h_action, HfpMap,
};
use crate::multicat::{
    build_ms, build_rs, check_enriched_round_trip, check_module_round_trip, check_multifunctor,
    check_multifunctor_into, check_multinatural, ConstantAt, FromEnriched, FromModule, IdentityTransformation,
    IteratedPullback, MultiBounds, MultifunctorData, SpanEnriched,
};
use crate::report::Report;
use crate::retractive::{retractive_isomorphisms, retractive_sets_up_to, splitting_suite, Point};
use crate::span::{right_unit_witness, Span};
use crate::spancat::{SpanModule, SpanRing};
use crate::strictify::{check_induced_agreement, is_strict, strictify_map, underline_module, validate_module};
use crate::table::{coherent_corpus, fault_instances};
use crate::theta::{verify_theta_coherence, ThetaBounds, ThetaMutation};

/// Injected faults for the negative tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Mutation {
    /// A composition functor replaced by a constant.
    BrokenComposition,
    /// One θ component replaced by its inverse.
    InvertedTheta,
    /// A bijection that does not commute with the action.
    NonEquivariantBijection,
    /// An action table that is not a homomorphism.
    BrokenActionTable,
}

impl Mutation {
    pub const ALL: [Mutation; 4] = [
        Mutation::BrokenComposition,
        Mutation::InvertedTheta,
        Mutation::NonEquivariantBijection,
        Mutation::BrokenActionTable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::BrokenComposition => "broken-composition",
            Mutation::InvertedTheta => "inverted-theta",
            Mutation::NonEquivariantBijection => "non-equivariant-bijection",
            Mutation::BrokenActionTable => "broken-action-table",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }
}

/// `|(G/H)^K|` by counting `g` with `g⁻¹Kg ⊆ H`: each fixed coset `gH`
/// is counted `|H|` times.
pub fn marks_by_conjugation(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> usize {
    let count = group
        .elements()
        .filter(|&g| k.elements().iter().all(|&x| h.contains(group.mul(group.inv(g), group.mul(x, g)))))
        .count();
    count / h.order()
}

pub fn marks_suite(group: &FiniteGroup) -> Result<(TableOfMarks, Report)> {
    let t = table_of_marks(group)?;
    let mut report = Report::new("table of marks");
    for (i, h) in t.classes.iter().enumerate() {
        for (j, k) in t.classes.iter().enumerate() {
            let oracle = marks_by_conjugation(group, h, k);
            report.check(t.marks[i][j] == oracle, "fixed-point count", || {
                format!("row {i}, column {j}: {} vs {oracle}", t.marks[i][j])
            });
        }
        report.check(t.marks[i][0] == group.order() / h.order(), "first column is the index", || format!("row {i}"));
    }
    report.check(t.is_triangular_invertible(), "lower triangular with nonzero diagonal", || format!("{:?}", t.marks));
    Ok((t, report))
}

/// Strict associativity of every composable triple of spans between
/// orbits with apex at most `max_apex`, strict formal units, and a
/// witness that the identity span is a strict unit on one side only.
pub struct Strictness {
    pub report: Report,
    pub identity_witness: Option<Span>,
}

pub fn span_strictness(group: &FiniteGroup, max_apex: usize) -> Result<Strictness> {
    let orbits: Vec<GSet> = class_representatives(group)?.iter().map(|h| coset_gset(group, h)).collect();
    let n = orbits.len();
    let mut spans = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            spans[i][j] = spans_up_to_iso(group, &orbits[i], &orbits[j], max_apex)?;
        }
    }
    let mut report = Report::new(format!("span strictness, apex at most {max_apex}"));
    let mut identity_witness = None;
    for i in 0..n {
        for j in 0..n {
            for s in &spans[i][j] {
                report.check(Span::unit(&orbits[i]).compose(s)? == *s, "formal unit on the left", || format!("{s:?}"));
                report
                    .check(s.compose(&Span::unit(&orbits[j]))? == *s, "formal unit on the right", || format!("{s:?}"));
                report.check(
                    s.compose(&Span::identity(&orbits[j]))? == *s,
                    "identity span is a strict unit on the target side",
                    || format!("{s:?}"),
                );
                if identity_witness.is_none() {
                    let reversed: Vec<usize> = (0..s.apex_size()).rev().collect();
                    identity_witness = right_unit_witness(&[s.clone(), s.relabel(&reversed)]);
                }
                for (k, from_j) in spans[j].iter().enumerate() {
                    for t in from_j {
                        let st = s.compose(t)?;
                        for from_k in &spans[k] {
                            for u in from_k {
                                report.check(st.compose(u)? == s.compose(&t.compose(u)?)?, "associativity", || {
                                    format!("{s:?} ; {t:?} ; {u:?}")
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    report.check(identity_witness.is_some(), "identity span fails as a strict unit somewhere", || "no witness".into());
    Ok(Strictness { report, identity_witness })
}

/// `G/H ← G/H → *` followed by `* ← G/K → G/K`.
pub fn transfer_then_restriction(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<Span> {
    let (gh, gk, pt) = (coset_gset(group, h), coset_gset(group, k), GSet::point(group));
    let tr = Span::new(gh.clone(), pt.clone(), gh.clone(), (0..gh.size()).collect(), vec![0; gh.size()])?;
    let res = Span::new(pt, gk.clone(), gk.clone(), vec![0; gk.size()], (0..gk.size()).collect())?;
    tr.compose(&res)
}

/// Representatives of the double cosets `H g K`.
pub fn double_coset_representatives(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let mut reps = Vec::new();
    for g in group.elements() {
        if seen[g] {
            continue;
        }
        reps.push(g);
        for &a in h.elements() {
            for &b in k.elements() {
                seen[group.mul(a, group.mul(g, b))] = true;
            }
        }
    }
    reps
}

/// The sum over double cosets `HgK` of the orbits `G/(H ∩ gKg⁻¹)` sitting
/// over `(eH, gK)`.
pub fn double_coset_span(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<Span> {
    let (ch, ck) = (CosetSpace::new(group, h), CosetSpace::new(group, k));
    let pair = product(&ch.gset, &ck.gset);
    let mut total = Span::empty(&ch.gset, &ck.gset);
    for g in double_coset_representatives(group, h, k) {
        let l = h.intersection(&group.conjugate_subgroup(g, k));
        let point = ch.base_coset(group) * ck.index() + ck.coset_of[g];
        let m = orbit_map_from_fixed_point(group, &l, &pair, point)?;
        let nk = ck.index();
        let orbit = Span::new(
            ch.gset.clone(),
            ck.gset.clone(),
            m.source().clone(),
            m.values().iter().map(|&p| p / nk).collect(),
            m.values().iter().map(|&p| p % nk).collect(),
        )?;
        total = total.sum(&orbit)?;
    }
    Ok(total)
}

pub fn mackey_suite(group: &FiniteGroup) -> Result<(MackeyTable, Report)> {
    let table = MackeyTable::new(group)?;
    let mut report = Report::new("Burnside category");
    report.check(table.associativity_failure().is_none(), "associativity of composition tensors", || {
        format!("{:?}", table.associativity_failure())
    });
    let classes = &table.classes;
    let orbits: Vec<GSet> = classes.iter().map(|h| coset_gset(group, h)).collect();
    let n = classes.len();
    for a in 0..n {
        let unit = unit_coordinates(group, &orbits[a])?;
        for b in 0..n {
            let t = &table.tensors[a][a][b];
            for i in 0..t.basis_bc.len() {
                let e: Vec<i64> = (0..t.basis_bc.len()).map(|j| i64::from(i == j)).collect();
                report.check(t.apply(&unit, &e) == e, "unit on the left", || format!("orbits {a}, {b}, basis {i}"));
            }
            let t = &table.tensors[b][a][a];
            for i in 0..t.basis_ab.len() {
                let e: Vec<i64> = (0..t.basis_ab.len()).map(|j| i64::from(i == j)).collect();
                report.check(t.apply(&e, &unit) == e, "unit on the right", || format!("orbits {b}, {a}, basis {i}"));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let t = &table.tensors[a][b][c];
                let bound = group.order();
                for s in spans_up_to_iso(group, &orbits[a], &orbits[b], bound)? {
                    let u = canonical_class(group, &s).coordinates(&t.basis_ab)?;
                    for r in spans_up_to_iso(group, &orbits[b], &orbits[c], bound)? {
                        let v = canonical_class(group, &r).coordinates(&t.basis_bc)?;
                        let direct = canonical_class(group, &s.compose(&r)?).coordinates(&t.basis_ac)?;
                        report.check(direct == t.apply(&u, &v), "bilinearity of composition", || {
                            format!("{s:?} ; {r:?}")
                        });
                    }
                }
            }
        }
    }
    for h in classes {
        for k in classes {
            let composite = canonical_class(group, &transfer_then_restriction(group, h, k)?);
            let oracle = canonical_class(group, &double_coset_span(group, h, k)?);
            report.check(composite == oracle, "double coset formula", || {
                format!("H = {:?}, K = {:?}", h.elements(), k.elements())
            });
        }
    }
    Ok((table, report))
}

/// Checks a tom Dieck splitting against counts and conjugations computed
/// directly from the group.
pub fn verify_tom_dieck(group: &FiniteGroup, x: &GSet, td: &TomDieck) -> Result<Report> {
    let mut report = Report::new("tom Dieck splitting");
    let subs = subgroups(group)?;
    let mut left_count = 0;
    for orbit in x.orbits() {
        let stab = x.stabilizer(orbit[0]);
        let inside: Vec<&Subgroup> = subs.iter().filter(|l| l.is_subgroup_of(&stab)).collect();
        let classes: BTreeSet<Subgroup> = inside
            .iter()
            .map(|l| stab.elements().iter().map(|&k| group.conjugate_subgroup(k, l)).min().expect("nonempty"))
            .collect();
        left_count += classes.len();
    }
    let mut right_count = 0;
    for h in &td.classes {
        let normalizer = group.normalizer(h);
        let fixed = x.fixed_points(h);
        let burnside: usize =
            normalizer.elements().iter().map(|&n| fixed.iter().filter(|&&p| x.act(n, p) == p).count()).sum();
        right_count += burnside / normalizer.order();
    }
    report.check(td.left.len() == left_count, "left basis size", || format!("{} vs {left_count}", td.left.len()));
    report.check(td.right.len() == right_count, "right basis size", || format!("{} vs {right_count}", td.right.len()));
    report.check(td.is_bijection(), "bijection", || format!("{:?}", td.bijection));
    for (i, (h, p)) in td.left.iter().enumerate() {
        let Some(&j) = td.bijection.get(i) else { continue };
        let Some(&(ci, q)) = td.right.get(j) else { continue };
        let c = &td.classes[ci];
        let normalizer = group.normalizer(c);
        let related = x.is_fixed(h, *p)
            && x.is_fixed(c, q)
            && group.elements().any(|g| {
                &group.conjugate_subgroup(g, h) == c
                    && normalizer.elements().iter().any(|&m| x.act(m, x.act(g, *p)) == q)
            });
        report.check(related, "pairs are conjugate", || format!("({:?}, {p}) ↦ ({ci}, {q})", h.elements()));
    }
    Ok(report)
}

/// Single-orbit retractive G-sets over `x`, up to isomorphism, are
/// counted by both sides of the tom Dieck splitting.
pub fn retractive_orbit_types(group: &FiniteGroup, x: &GSet, td: &TomDieck) -> Result<Report> {
    let mut report = Report::new("retractive orbit types");
    let whole = group.whole();
    let orbits: Vec<_> = retractive_sets_up_to(group, &whole, x, group.order())?
        .into_iter()
        .filter(|y| y.orbit_representatives().len() == 1)
        .collect();
    report.check(orbits.len() == td.right.len(), "one orbit type per splitting summand", || {
        format!("{} orbit types, {} summands", orbits.len(), td.right.len())
    });
    for (i, a) in orbits.iter().enumerate() {
        for b in &orbits[i + 1..] {
            report.check(retractive_isomorphisms(a, b, 1).is_empty(), "orbit types are pairwise distinct", || {
                format!("{a:?} ≅ {b:?}")
            });
        }
    }
    Ok(report)
}

/// Regular sets, every orbit, and two disjoint unions.
pub fn tom_dieck_gsets(group: &FiniteGroup) -> Result<Vec<GSet>> {
    let orbits: Vec<GSet> = class_representatives(group)?.iter().map(|h| coset_gset(group, h)).collect();
    let mut out = vec![GSet::regular(group)];
    out.extend(orbits.iter().cloned());
    out.push(coproduct(&GSet::regular(group), &GSet::point(group)));
    out.push(orbits.iter().fold(GSet::empty(group), |acc, o| coproduct(&acc, o)));
    Ok(out)
}

pub fn tom_dieck_suite(
    group: &FiniteGroup,
    gsets: &[GSet],
    mutation: Option<Mutation>,
) -> Result<(Vec<TomDieck>, Report)> {
    let mut report = Report::new("tom Dieck suite");
    let mut out = Vec::new();
    for x in gsets {
        let mut td = tom_dieck_pi0(group, x)?;
        if mutation == Some(Mutation::NonEquivariantBijection) && td.bijection.len() >= 2 {
            td.bijection.swap(0, 1);
        }
        let mut r = verify_tom_dieck(group, x, &td)?;
        r.merge(retractive_orbit_types(group, x, &td)?);
        r.name = format!("G-set of size {}", x.size());
        report.merge(r);
        out.push(td);
    }
    Ok((out, report))
}

/// The regular G-set plus a fixed point, with the action of the first
/// non-identity element replaced by a cyclic shift.
pub fn broken_action_table(group: &FiniteGroup) -> (usize, Vec<Vec<usize>>) {
    let x = coproduct(&GSet::regular(group), &GSet::point(group));
    let n = x.size();
    let mut action = x.action().to_vec();
    if let Some(g) = group.elements().find(|&g| g != group.identity()) {
        action[g] = (0..n).map(|p| (p + 1) % n).collect();
    }
    (n, action)
}

/// Validation of a G-set table; the mutation substitutes a broken one.
pub fn action_table_suite(group: &FiniteGroup, mutation: Option<Mutation>) -> Report {
    let mut report = Report::new("action tables");
    let (n, action) = if mutation == Some(Mutation::BrokenActionTable) {
        broken_action_table(group)
    } else {
        let x = coproduct(&GSet::regular(group), &GSet::point(group));
        (x.size(), x.action().to_vec())
    };
    let verdict = GSet::new(group, n, action);
    report.check(verdict.is_ok(), "G-set action is a homomorphism", || {
        verdict.err().map(|e| e.to_string()).unwrap_or_default()
    });
    report
}

/// Strict-module validation of the thickening, equivalence of the
/// counit, strict-map validation of the strictification, and agreement
/// with the induced functor for strict inputs, over the seeded table
/// corpus and modules of spans.
pub fn strictification_suite(seed: u64, mutation: Option<Mutation>) -> Result<(usize, Report)> {
    let mut report = Report::new("strictification");
    let mut instances = 0;
    let hl = 4;
    for e in coherent_corpus(seed) {
        let mut r = Report::new(e.name.clone());
        r.merge(underline_module(&e.map.source, hl));
        r.merge(strictify_map(&e.map, hl));
        if is_strict(&e.map) {
            r.merge(check_induced_agreement(&e.map, hl));
        }
        report.merge(r);
        instances += 1;
    }
    let faults = fault_instances();
    if mutation == Some(Mutation::InvertedTheta) {
        report.merge(strictify_map(&faults.inverted_component, hl));
        instances += 1;
    }
    if mutation == Some(Mutation::BrokenActionTable) {
        report.merge(validate_module(&faults.broken_action, hl));
        instances += 1;
    }
    for group in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)] {
        let ring = SpanRing::new(&group, subgroups(&group)?, 2)?;
        let point = GSet::point(&group);
        let regular = GSet::regular(&group);
        let m_pt = SpanModule::new(&ring, &point, 3)?;
        let m_reg = SpanModule::new(&ring, &regular, 3)?;
        for m in [&m_pt, &m_reg] {
            let mut r =
                Report::new(format!("spans into {} points over a group of order {}", m.base.size(), group.order()));
            r.merge(validate_module(m, 2));
            r.merge(underline_module(m, 2));
            report.merge(r);
            instances += 1;
        }
        let push = PushSpan { source: &m_reg, target: &m_pt, map: GMap::to_point(&group, &regular) };
        let mut r = Report::new(format!("pushforward to a point over a group of order {}", group.order()));
        r.merge(strictify_map(&push, 2));
        r.merge(check_induced_agreement(&push, 2));
        report.merge(r);
        instances += 1;
    }
    Ok((instances, report))
}

/// Functorial splitting over every cofibration between retractive sets
/// with free part at most `max_free`, for each subgroup class and base.
pub fn splitting_for(group: &FiniteGroup, bases: &[GSet], max_free: usize) -> Result<Report> {
    let mut report = Report::new("splitting");
    for h in class_representatives(group)? {
        for base in bases {
            let objects = retractive_sets_up_to(group, &h, base, max_free)?;
            let mut r = splitting_suite(&objects);
            r.name = format!("|H| = {}, base of size {}", h.order(), base.size());
            report.merge(r);
        }
    }
    Ok(report)
}

/// Embedding and extraction between retractive H-sets and homotopy fixed
/// point objects, agreement of the span action with the geometric one on
/// orbits, and Beck–Chevalley isomorphisms.
pub fn hfp_suite(group: &FiniteGroup, bases: &[GSet], max_free: usize, mutation: Option<Mutation>) -> Result<Report> {
    let mut report = Report::new("homotopy fixed points");
    let classes = class_representatives(group)?;
    let mut mutated = false;
    for h in &classes {
        for base in bases {
            for y in retractive_sets_up_to(group, h, base, max_free)? {
                let f = embed_h_object(group, &y);
                report.check(f.validate(group).is_ok(), "embedding is valid", || format!("{y:?}"));
                let back = extract_h_action(group, &f)?;
                report.check(!retractive_isomorphisms(&back, &y, 1).is_empty(), "extract after embed", || {
                    format!("{y:?}")
                });
                let iso = embed_extract_iso(group, &f)?;
                report.check(iso.first_failure(group).is_none() && iso.is_isomorphism(), "embed after extract", || {
                    iso.first_failure(group).unwrap_or_default()
                });
                if mutation == Some(Mutation::NonEquivariantBijection) && !mutated {
                    if let Some(bad) = swap_two_points(&f) {
                        report.check(bad.first_failure(group).is_none(), "isomorphism is equivariant", || {
                            bad.first_failure(group).unwrap_or_default()
                        });
                        mutated = true;
                    }
                }
                for l in &classes {
                    for s in orbit_spans(group, l, h, group.order())? {
                        let acted = act_span(group, l, &s, &f)?;
                        report.check(acted.validate(group).is_ok(), "span action is valid", || format!("{s:?}"));
                        let ok = compare_geometric(group, l, &s, &y).is_ok();
                        report.check(ok, "span action agrees with the geometric one", || format!("{s:?} on {y:?}"));
                        for m in &classes {
                            for t in orbit_spans(group, m, l, group.order())? {
                                let bc = beck_chevalley(group, m, &t, l, &s, &f)?;
                                report.check(
                                    bc.first_failure(group).is_none() && bc.is_isomorphism(),
                                    "Beck–Chevalley",
                                    || format!("{t:?} ; {s:?}"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    if mutation == Some(Mutation::NonEquivariantBijection) && !mutated {
        report.fail("isomorphism is equivariant", "no object with two free points to mutate".into());
    }
    Ok(report)
}

fn orbit_spans(group: &FiniteGroup, l: &Subgroup, h: &Subgroup, max_apex: usize) -> Result<Vec<Span>> {
    Ok(spans_up_to_iso(group, &coset_gset(group, l), &coset_gset(group, h), max_apex)?
        .into_iter()
        .filter(|s| s.apex_size() > 0 && s.data().apex.is_transitive())
        .collect())
}

/// The identity of `f` with two points of one component exchanged.
fn swap_two_points(f: &crate::hfp::HfpObject) -> Option<HfpMap> {
    let mut m = HfpMap::identity(f);
    let c = m.components.iter().position(|c| c.len() >= 2)?;
    m.components[c].swap(0, 1);
    debug_assert!(matches!(m.components[c][0], Point::Free(1)));
    Some(m)
}

/// Axioms of `R_S` and `M_S`, the multifunctor of span categories and
/// its module extension, both repackagings, and the identification of
/// iterated binary composition with one-step n-fold pullbacks.
pub fn multiparam_suite(
    group: &FiniteGroup,
    arity: usize,
    max_apex: usize,
    mutation: Option<Mutation>,
) -> Result<Report> {
    let mut report = Report::new("multicategories");
    let ring = SpanRing::new(group, class_representatives(group)?, max_apex)?;
    let size = ring.orbits.len();
    let (rs, ms) = (build_rs(size, arity)?, build_ms(size, arity)?);
    report.merge(named("R_S axioms", rs.multicat.check_axioms()));
    report.merge(named("M_S axioms", ms.multicat.check_axioms()));
    report.merge(named(
        "identity multifunctor",
        check_multifunctor_into(&rs.multicat, &rs.multicat, &MultifunctorData::identity(&rs.multicat)),
    ));
    let pairs: Vec<usize> = (0..size * size).collect();
    let sub = ms.multicat.full_sub(&pairs)?;
    report.check(sub == rs.multicat, "M_S restricts to R_S", || "restriction differs".into());
    report.merge(named(
        "inclusion of R_S into M_S",
        check_multifunctor_into(&rs.multicat, &ms.multicat, &MultifunctorData::inclusion(&rs.multicat, &pairs)),
    ));
    let bounds = MultiBounds { max_arity: arity.min(3), hom_limit: 2 };
    let spans = SpanEnriched::with_module(&ring, &GSet::regular(group), max_apex)?;
    let enriched = FromEnriched { enriched: &spans, params: &rs };
    if mutation == Some(Mutation::BrokenComposition) && size >= 2 {
        let at = rs.unique(vec![rs.pair(0, 1), rs.pair(1, 1)], rs.pair(0, 1)).expect("binary morphism");
        let broken = ConstantAt { functor: &enriched, at, value: Span::empty(&ring.orbits[0], &ring.orbits[1]) };
        report.merge(named("span categories", check_multifunctor(&broken, bounds)));
    } else {
        report.merge(named("span categories", check_multifunctor(&enriched, bounds)));
    }
    report.merge(check_enriched_round_trip(&enriched, &rs, bounds));
    let module = FromModule { module: &spans, params: &ms };
    report.merge(named("spans out of the regular G-set", check_multifunctor(&module, bounds)));
    report.merge(check_module_round_trip(&module, &enriched, &ms, &rs, bounds));
    let direct = IteratedPullback { spans: &spans, params: &ms };
    report.merge(named(
        "one-step pullbacks against iterated composition",
        check_multinatural(&module, &direct, &IdentityTransformation, bounds),
    ));
    Ok(report)
}

fn named(name: &str, mut r: Report) -> Report {
    r.name = name.to_string();
    r
}

/// θ coherence on C2: every span with apex at most 4, free parts at
/// most 3, over a point and the regular C2-set.
pub fn theta_bounds_c2(mutation: Option<ThetaMutation>) -> Result<(FiniteGroup, ThetaBounds)> {
    let g = FiniteGroup::cyclic(2);
    let bounds = ThetaBounds {
        max_apex: 4,
        max_free: 3,
        orbit_spans_only: false,
        subgroups: subgroups(&g)?,
        bases: vec![GSet::point(&g), GSet::regular(&g)],
        iso_limit: usize::MAX,
        mutation,
    };
    Ok((g, bounds))
}

/// θ coherence on S3: orbit spans, free parts at most 2, every subgroup,
/// over a point and `S3/C2`.
pub fn theta_bounds_s3(mutation: Option<ThetaMutation>) -> Result<(FiniteGroup, ThetaBounds)> {
    let g = FiniteGroup::symmetric(3);
    let subs = subgroups(&g)?;
    let c2 = subs.iter().find(|h| h.order() == 2).expect("S3 has an involution").clone();
    let bounds = ThetaBounds {
        max_apex: g.order(),
        max_free: 2,
        orbit_spans_only: true,
        subgroups: subs,
        bases: vec![GSet::point(&g), coset_gset(&g, &c2)],
        iso_limit: usize::MAX,
        mutation,
    };
    Ok((g, bounds))
}

pub fn theta_suite(group: &FiniteGroup, bounds: &ThetaBounds) -> Result<Report> {
    verify_theta_coherence(group, bounds)
}

/// The bounds on which the assembled comparison is certified.
pub fn assembly_bounds(group: &FiniteGroup) -> AssemblyBounds {
    AssemblyBounds { max_free: 2, max_ring_apex: 2, orbit_spans_only: group.order() > 2, hom_limit: 2 }
}

pub fn assembly_suite(group: &FiniteGroup, base: &GSet, bounds: &AssemblyBounds) -> Result<Assembly> {
    assemble_and_strictify(group, subgroups(group)?, base, bounds)
}

/// Burnside basis sizes double as a quick check of the orbit labels.
pub fn basis_sizes(group: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    let orbits: Vec<GSet> = class_representatives(group)?.iter().map(|h| coset_gset(group, h)).collect();
    orbits.iter().map(|a| orbits.iter().map(|b| Ok(burnside_basis(group, a, b)?.len())).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_agree_with_conjugation_counts() {
        for g in [FiniteGroup::cyclic(2), FiniteGroup::symmetric(3), FiniteGroup::klein_four()] {
            let (_, r) = marks_suite(&g).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn s3_transfer_then_restriction_at_c2() {
        let g = FiniteGroup::symmetric(3);
        let c2 = subgroups(&g).unwrap().into_iter().find(|h| h.order() == 2).unwrap();
        let s = transfer_then_restriction(&g, &c2, &c2).unwrap();
        let class = canonical_class(&g, &s);
        let mut isotropy: Vec<usize> = class.counts.iter().map(|(l, n)| l.isotropy.order() * 10 + n).collect();
        isotropy.sort_unstable();
        // one orbit with isotropy C2 and one free orbit
        assert_eq!(isotropy, vec![11, 21]);
    }

    #[test]
    fn mackey_suite_passes_on_s3() {
        let (_, r) = mackey_suite(&FiniteGroup::symmetric(3)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn tom_dieck_oracle_catches_a_swap() {
        let g = FiniteGroup::symmetric(3);
        let xs = tom_dieck_gsets(&g).unwrap();
        assert!(xs.len() >= 5);
        assert!(tom_dieck_suite(&g, &xs, None).unwrap().1.passed());
        let r = tom_dieck_suite(&g, &xs, Some(Mutation::NonEquivariantBijection)).unwrap().1;
        assert!(!r.passed());
    }

    #[test]
    fn broken_action_table_is_caught() {
        for g in [FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)] {
            assert!(action_table_suite(&g, None).passed());
            assert!(!action_table_suite(&g, Some(Mutation::BrokenActionTable)).passed());
        }
    }

    #[test]
    fn small_strictness_suite() {
        let s = span_strictness(&FiniteGroup::cyclic(2), 3).unwrap();
        assert!(s.report.passed(), "{}", s.report);
        assert!(s.identity_witness.is_some());
    }
}
