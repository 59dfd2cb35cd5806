//! The comparison `f_K: F ↦ (G/K ← G ×_K F(e,K) → X)` from homotopy fixed
//! point objects to spans over `X`, the coherence cells
//! `θ(S, F): S ∘ f_K(F) ≅ f_H(S* F)`, and their exhaustive verification.
//!
//! Coset representatives `γ` are the identity on the base coset and the
//! least element elsewhere.

use serde::{Deserialize, Serialize};

use crate::burnside::spans_up_to_iso;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::gset::{coset_gset, CosetSpace, GMap, GSet};
use crate::hfp::{
    act_span, act_span_iso, act_span_on_map, beck_chevalley, coset_section, embed_h_object, extend_from_base,
    hfp_isomorphisms, summand_offsets, HfpMap, HfpObject,
};
use crate::report::Report;
use crate::retractive::{retractive_sets_up_to, Point, RetractiveGSet};
use crate::span::{span_isomorphisms, Span, SpanIso};

/// `f_K(F)`: the point `c·|T| + x` is the class of `(γ_c, x)` with
/// `x ∈ T = F(e, K)`; `g(γ_c, x) = (γ_{gc}, k x)` with `k = γ_{gc}⁻¹ g γ_c`.
pub fn compare_f(group: &FiniteGroup, f: &HfpObject) -> Span {
    let cs = &f.cosets;
    let n = cs.index();
    let c0 = cs.base_coset(group);
    let part = &f.parts[c0];
    let t = part.size();
    let gamma: Vec<usize> = (0..n).map(|c| coset_section(group, cs, c)).collect();
    let action = group
        .elements()
        .map(|g| {
            let mut perm = Vec::with_capacity(n * t);
            for c in 0..n {
                let gc = cs.gset.act(g, c);
                let k = group.mul(group.mul(group.inv(gamma[gc]), g), gamma[c]);
                let kx = f.beta(group.inv(k), c0);
                perm.extend((0..t).map(|x| gc * t + kx[x]));
            }
            perm
        })
        .collect();
    let left = (0..n * t).map(|a| a / t).collect();
    let right = (0..n * t).map(|a| f.base.act(gamma[a / t], part.projection[a % t])).collect();
    Span::from_parts_unchecked(cs.gset.clone(), f.base.clone(), GSet::new_unchecked(n * t, action), left, right)
}

/// `f_K(φ)` for an isomorphism `φ`: `(c, x) ↦ (c, φ_K x)`.
pub fn compare_map(group: &FiniteGroup, phi: &HfpMap) -> Result<SpanIso> {
    if !phi.is_isomorphism() {
        return Err(Error::Domain("only isomorphisms map to span isomorphisms".into()));
    }
    let c0 = phi.source.cosets.base_coset(group);
    let t = phi.source.parts[c0].size();
    let comp = &phi.components[c0];
    let map = (0..phi.source.cosets.index() * t)
        .map(|a| match comp[a % t] {
            Point::Free(j) => (a / t) * t + j,
            Point::Base(_) => unreachable!("isomorphisms hit only free points"),
        })
        .collect();
    SpanIso::new(compare_f(group, &phi.source), compare_f(group, &phi.target), map)
}

/// The inverse comparison: the fibre of the left leg over `K`, with the
/// restricted K-action, embedded.
pub fn span_to_hfp(group: &FiniteGroup, k: &Subgroup, span: &Span) -> Result<HfpObject> {
    let cs = CosetSpace::new(group, k);
    if span.source() != &cs.gset {
        return Err(Error::Domain("span does not start at G/K".into()));
    }
    let d = span.data();
    let c0 = cs.base_coset(group);
    let fibre: Vec<usize> = (0..d.apex.size()).filter(|&a| d.left[a] == c0).collect();
    let pos = |a: usize| fibre.binary_search(&a).expect("K preserves the fibre");
    let action = k.elements().iter().map(|&h| fibre.iter().map(|&a| pos(d.apex.act(h, a))).collect()).collect();
    let y = RetractiveGSet::new(
        group,
        k.clone(),
        d.target.clone(),
        fibre.iter().map(|&a| vec![a]).collect(),
        action,
        fibre.iter().map(|&a| d.right[a]).collect(),
    )?;
    Ok(embed_h_object(group, &y))
}

/// `f_K(span_to_hfp(S)) ≅ S` by `(c, a) ↦ γ_c a`.
pub fn span_round_trip(group: &FiniteGroup, k: &Subgroup, span: &Span) -> Result<SpanIso> {
    let f = span_to_hfp(group, k, span)?;
    let back = compare_f(group, &f);
    let d = span.data();
    let c0 = f.cosets.base_coset(group);
    let fibre: Vec<usize> = (0..d.apex.size()).filter(|&a| d.left[a] == c0).collect();
    let t = fibre.len();
    let map = (0..back.apex_size()).map(|p| d.apex.act(coset_section(group, &f.cosets, p / t), fibre[p % t])).collect();
    SpanIso::new(back, span.clone(), map)
}

/// `span_to_hfp(f_K F) ≅ F`, the identity at `(e, K)`.
pub fn hfp_round_trip(group: &FiniteGroup, f: &HfpObject) -> Result<HfpMap> {
    let back = span_to_hfp(group, f.subgroup(), &compare_f(group, f))?;
    let c0 = f.cosets.base_coset(group);
    let id: Vec<Point> = (0..f.parts[c0].size()).map(Point::Free).collect();
    let phi = extend_from_base(group, &back, f, &id);
    match phi.first_failure(group) {
        None => Ok(phi),
        Some(w) => Err(Error::Validation(w)),
    }
}

/// Everything needed to evaluate `θ(S, F)` under any choice of
/// representatives.
struct ThetaCtx<'a> {
    group: &'a FiniteGroup,
    s: Span,
    f: &'a HfpObject,
    sf: HfpObject,
    hc: CosetSpace,
    offsets: Vec<usize>,
    lhs: Span,
    rhs: Span,
}

impl<'a> ThetaCtx<'a> {
    fn new(group: &'a FiniteGroup, h: &Subgroup, s: &Span, f: &'a HfpObject) -> Result<Self> {
        let sf = act_span(group, h, s, f)?;
        let lhs = s.compose(&compare_f(group, f))?;
        let rhs = compare_f(group, &sf);
        Ok(Self { group, s: s.materialize(), f, hc: sf.cosets.clone(), offsets: summand_offsets(s, f), sf, lhs, rhs })
    }

    /// Image of the triple `(s, γ_c k, k⁻¹x)` computed with the
    /// representative `γ_{p(s)} h` of `p(s)`, then normalized.
    fn image(&self, si: usize, a: usize, k: usize, h: usize) -> usize {
        let g = self.group;
        let (f, sf) = (self.f, &self.sf);
        let d = self.s.data();
        let kc = &f.cosets;
        let c0 = kc.base_coset(g);
        let t = f.parts[c0].size();
        let (c, x) = (a / t, a % t);
        let rep = g.mul(coset_section(g, kc, c), k);
        let xk = f.beta(k, c0)[x];
        let pc = d.left[si];
        let gamma = coset_section(g, &self.hc, pc);
        let gamma_h = g.mul(gamma, h);
        let i = d.apex.act(g.inv(gamma_h), si);
        let y = f.beta(g.mul(g.inv(rep), gamma_h), c0)[xk];
        let h0 = self.hc.base_coset(g);
        let z = sf.beta(g.inv(h), h0)[self.offsets[i] + y];
        pc * sf.parts[h0].size() + z
    }

    fn canonical(&self) -> Vec<usize> {
        let e = self.group.identity();
        self.s
            .composite_pairs(&compare_f(self.group, self.f))
            .into_iter()
            .map(|(si, a)| self.image(si, a, e, e))
            .collect()
    }
}

/// `θ(S, F)`; the identity on the formal unit.
pub fn theta(group: &FiniteGroup, h: &Subgroup, s: &Span, f: &HfpObject) -> Result<SpanIso> {
    if s.is_unit() {
        let fk = compare_f(group, f);
        if &coset_gset(group, h) != s.source() {
            return Err(Error::Domain("unit span over a different orbit".into()));
        }
        return Ok(SpanIso::identity(&fk));
    }
    let ctx = ThetaCtx::new(group, h, s, f)?;
    let map = ctx.canonical();
    Ok(SpanIso { source: ctx.lhs, target: ctx.rhs, map })
}

/// First point and choice `(k, h)` where a different choice of
/// representatives changes `θ(S, F)`.
pub fn representative_dependence(group: &FiniteGroup, h: &Subgroup, s: &Span, f: &HfpObject) -> Result<Option<String>> {
    if s.is_unit() {
        return Ok(None);
    }
    let ctx = ThetaCtx::new(group, h, s, f)?;
    let canonical = ctx.canonical();
    let pairs = ctx.s.composite_pairs(&compare_f(group, f));
    for (p, &(si, a)) in pairs.iter().enumerate() {
        for &k in f.subgroup().elements() {
            for &hh in h.elements() {
                if ctx.image(si, a, k, hh) != canonical[p] {
                    return Ok(Some(format!("point {p} with k = {k}, h = {hh}")));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThetaMutation {
    /// Exchange the images of the first two apex points of every cell.
    SwapOutputs,
}

/// Instance bounds for [`verify_theta_coherence`].
#[derive(Clone, Debug)]
pub struct ThetaBounds {
    pub max_apex: usize,
    pub max_free: usize,
    pub orbit_spans_only: bool,
    pub subgroups: Vec<Subgroup>,
    pub bases: Vec<GSet>,
    /// Isomorphisms tried per pair of objects in the naturality checks.
    pub iso_limit: usize,
    pub mutation: Option<ThetaMutation>,
}

struct Cells<'a> {
    group: &'a FiniteGroup,
    mutation: Option<ThetaMutation>,
}

impl Cells<'_> {
    fn theta(&self, h: &Subgroup, s: &Span, f: &HfpObject) -> Result<SpanIso> {
        let mut th = theta(self.group, h, s, f)?;
        if self.mutation == Some(ThetaMutation::SwapOutputs) && th.map.len() >= 2 {
            th.map.swap(0, 1);
        }
        Ok(th)
    }
}

/// Spans `G/H → G/K` within the bounds, the unit and identity span on the
/// diagonal, and one renumbered copy of each concrete span.
pub fn theta_spans(group: &FiniteGroup, h: &Subgroup, k: &Subgroup, bounds: &ThetaBounds) -> Result<Vec<Span>> {
    let (gh, gk) = (coset_gset(group, h), coset_gset(group, k));
    let mut spans: Vec<Span> = spans_up_to_iso(group, &gh, &gk, bounds.max_apex)?
        .into_iter()
        .filter(|s| !bounds.orbit_spans_only || (s.apex_size() > 0 && s.data().apex.is_transitive()))
        .collect();
    if h == k {
        spans.push(Span::identity(&gh));
    }
    let renumbered: Vec<Span> = spans
        .iter()
        .filter(|s| s.apex_size() > 1)
        .map(|s| s.relabel(&(0..s.apex_size()).rev().collect::<Vec<_>>()))
        .collect();
    spans.extend(renumbered);
    if h == k {
        spans.insert(0, Span::unit(&gh));
    }
    Ok(spans)
}

/// Homotopy fixed point objects over `K` within the bounds: embedded
/// retractive sets, and a renumbered copy of each whose transports are
/// no longer those of an embedding.
pub fn theta_objects(group: &FiniteGroup, k: &Subgroup, base: &GSet, max_free: usize) -> Result<Vec<HfpObject>> {
    let mut out = Vec::new();
    for y in retractive_sets_up_to(group, k, base, max_free)? {
        let f = embed_h_object(group, &y);
        if y.free_size() > 1 {
            let perms: Vec<Vec<usize>> = f
                .parts
                .iter()
                .enumerate()
                .map(|(c, p)| (0..p.size()).map(|x| (x + c + 1) % p.size()).collect())
                .collect();
            let g = f.relabel(group, &perms);
            out.push(f);
            out.push(g);
        } else {
            out.push(f);
        }
    }
    Ok(out)
}

/// Exhaustive coherence check of the θ cells within `bounds`: leg
/// compatibility, independence of representatives, naturality in `F` and
/// in `S` (including the canonical isomorphism from the formal unit to
/// the identity span), unit coherence, associativity after pasting with
/// Beck–Chevalley, and compatibility with base change.
pub fn verify_theta_coherence(group: &FiniteGroup, bounds: &ThetaBounds) -> Result<Report> {
    let cells = Cells { group, mutation: bounds.mutation };
    let mut legs = Report::new("leg compatibility");
    let mut reps = Report::new("representative independence");
    let mut nat_f = Report::new("naturality in F");
    let mut nat_s = Report::new("naturality in S");
    let mut unit = Report::new("unit coherence");
    let mut assoc = Report::new("associativity");
    let mut base_change = Report::new("base change");
    let mut comparison = Report::new("comparison round trip");

    let subs = &bounds.subgroups;
    let mut spans: Vec<Vec<Vec<Span>>> = Vec::new();
    for h in subs {
        spans.push(subs.iter().map(|k| theta_spans(group, h, k, bounds)).collect::<Result<_>>()?);
    }

    for base in &bounds.bases {
        let collapse = GMap::to_point(group, base);
        for (ki, k) in subs.iter().enumerate() {
            let objects = theta_objects(group, k, base, bounds.max_free)?;
            for f in &objects {
                let w = || format!("F over {:?} with {} free points", k.elements(), f.total_size());
                let ok = hfp_round_trip(group, f).is_ok();
                comparison.check(ok, "hfp round trip", w);
            }
            for s in spans_up_to_iso(group, &coset_gset(group, k), base, bounds.max_apex)? {
                let ok = span_round_trip(group, k, &s).is_ok();
                comparison.check(ok, "span round trip", || format!("{s:?}"));
            }
            for (hi, h) in subs.iter().enumerate() {
                for s in &spans[hi][ki] {
                    for f in &objects {
                        let wit =
                            || format!("S = {s:?}, F over {:?} with {} free points", k.elements(), f.total_size());
                        let th = cells.theta(h, s, f)?;
                        let lhs = s.compose(&compare_f(group, f))?;
                        let sf = act_span(group, h, s, f)?;
                        let fsf = compare_f(group, &sf);
                        if !legs.check(th.source == lhs && th.target == fsf, "endpoints", wit) {
                            continue;
                        }
                        legs.check(th.validate().is_ok(), "cell", wit);
                        if s.is_unit() {
                            unit.check(th == SpanIso::identity(&lhs), "identity on the unit", wit);
                        }
                        if bounds.mutation.is_none() {
                            let dep = representative_dependence(group, h, s, f)?;
                            reps.check(dep.is_none(), "choice of representatives", || format!("{}: {dep:?}", wit()));
                        }

                        for f2 in &objects {
                            for phi in hfp_isomorphisms(group, f, f2, bounds.iso_limit)? {
                                let th2 = cells.theta(h, s, f2)?;
                                let left =
                                    SpanIso::identity(s).compose_horizontal(&compare_map(group, &phi)?)?.then(&th2);
                                let right = th.then(&compare_map(group, &act_span_on_map(group, h, s, &phi)?)?);
                                nat_f
                                    .check(left == right, "square", || format!("{} along {:?}", wit(), phi.components));
                            }
                        }

                        let mut isos: Vec<SpanIso> = Vec::new();
                        for s2 in &spans[hi][ki] {
                            if !s.is_unit() && !s2.is_unit() {
                                isos.extend(span_isomorphisms(s, s2, bounds.iso_limit));
                            }
                        }
                        if s.is_unit() {
                            let id = Span::identity(s.source());
                            isos.push(SpanIso {
                                source: s.clone(),
                                target: id.clone(),
                                map: (0..id.apex_size()).collect(),
                            });
                        } else if s == &Span::identity(s.source()) {
                            let u = Span::unit(s.source());
                            isos.push(SpanIso { source: s.clone(), target: u, map: (0..s.apex_size()).collect() });
                        }
                        for sigma in isos {
                            let th2 = cells.theta(h, &sigma.target, f)?;
                            let fk = compare_f(group, f);
                            let left = sigma.compose_horizontal(&SpanIso::identity(&fk))?.then(&th2);
                            let right = th.then(&compare_map(group, &act_span_iso(group, h, &sigma, f)?)?);
                            nat_s.check(left == right, "square", || format!("{} along {:?}", wit(), sigma.map));
                        }

                        for (li, l) in subs.iter().enumerate() {
                            for t in &spans[li][hi] {
                                let ts = t.compose(s)?;
                                let whole = cells.theta(l, &ts, f)?;
                                let outer = cells.theta(l, t, &sf)?;
                                let bc = beck_chevalley(group, l, t, h, s, f)?;
                                let bc_inv = compare_map(group, &bc.inverse().expect("isomorphism"))?;
                                let pasted =
                                    SpanIso::identity(t).compose_horizontal(&th).map(|w| w.then(&outer).then(&bc_inv));
                                assoc.check(pasted.is_ok_and(|p| p == whole), "pasting", || {
                                    format!("T = {t:?}, {}", wit())
                                });
                            }
                        }

                        let pushed = f.pushforward_base(&collapse)?;
                        let th_pushed = cells.theta(h, s, &pushed)?;
                        base_change.check(
                            compare_f(group, &pushed) == compare_f(group, f).push_target(&collapse)?,
                            "comparison",
                            wit,
                        );
                        base_change.check(th_pushed == th.push_target(&collapse)?, "cell", wit);
                    }
                }
            }
        }
    }

    let mut report = Report::new(format!("theta coherence for a group of order {}", group.order()));
    for r in [legs, reps, nat_f, nat_s, unit, assoc, base_change, comparison] {
        report.merge(r);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroups;

    #[test]
    fn empty_free_part_gives_empty_apex() {
        let g = FiniteGroup::cyclic(2);
        let f = embed_h_object(&g, &RetractiveGSet::empty(&g.whole(), &GSet::regular(&g)));
        assert_eq!(compare_f(&g, &f).apex_size(), 0);
    }

    #[test]
    fn free_point_over_trivial_subgroup_gives_free_orbit() {
        let g = FiniteGroup::cyclic(2);
        let e = g.trivial_subgroup();
        let x = GSet::regular(&g);
        let y = RetractiveGSet::orbit_over(&g, &e, &e, &x, 0).unwrap();
        let s = compare_f(&g, &embed_h_object(&g, &y));
        let d = s.data();
        assert_eq!(d.apex.size(), 2);
        assert!(d.apex.is_transitive());
        assert_eq!(d.apex.stabilizer(0), e);
    }

    #[test]
    fn swap_example_is_a_four_point_bijection() {
        let g = FiniteGroup::cyclic(2);
        let (e, whole) = (g.trivial_subgroup(), g.whole());
        let (ge, gg) = (coset_gset(&g, &e), coset_gset(&g, &whole));
        let s = Span::from_maps(&GMap::identity(&ge), &GMap::new(ge.clone(), gg, vec![0, 0]).unwrap()).unwrap();
        let x = GSet::point(&g);
        let y = RetractiveGSet::orbit_over(&g, &whole, &e, &x, 0).unwrap();
        let f = embed_h_object(&g, &y);
        let th = theta(&g, &e, &s, &f).unwrap();
        assert_eq!(th.map.len(), 4);
        th.validate().unwrap();
        assert_eq!(representative_dependence(&g, &e, &s, &f).unwrap(), None);
    }

    #[test]
    fn trivial_group_cells_are_unique_bijections() {
        let g = FiniteGroup::trivial();
        let e = g.whole();
        let pt = coset_gset(&g, &e);
        let f = embed_h_object(&g, &RetractiveGSet::orbit_over(&g, &e, &e, &GSet::trivial(&g, 2), 1).unwrap());
        for s in spans_up_to_iso(&g, &pt, &pt, 1).unwrap() {
            let th = theta(&g, &e, &s, &f).unwrap();
            th.validate().unwrap();
            assert_eq!(th.map.len(), s.apex_size());
        }
        assert_eq!(theta(&g, &e, &Span::unit(&pt), &f).unwrap(), SpanIso::identity(&compare_f(&g, &f)));
    }

    #[test]
    fn comparison_round_trips_over_c2() {
        let g = FiniteGroup::cyclic(2);
        let x = GSet::regular(&g);
        for k in subgroups(&g).unwrap() {
            for s in spans_up_to_iso(&g, &coset_gset(&g, &k), &x, 6).unwrap() {
                span_round_trip(&g, &k, &s).unwrap();
            }
            for f in theta_objects(&g, &k, &x, 3).unwrap() {
                hfp_round_trip(&g, &f).unwrap();
            }
        }
    }

    fn c2_bounds(g: &FiniteGroup, mutation: Option<ThetaMutation>) -> ThetaBounds {
        ThetaBounds {
            max_apex: 2,
            max_free: 2,
            orbit_spans_only: false,
            subgroups: subgroups(g).unwrap(),
            bases: vec![GSet::point(g), GSet::regular(g)],
            iso_limit: 4,
            mutation,
        }
    }

    #[test]
    fn small_c2_suite_passes() {
        let g = FiniteGroup::cyclic(2);
        let r = verify_theta_coherence(&g, &c2_bounds(&g, None)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn swapped_outputs_are_caught() {
        let g = FiniteGroup::cyclic(2);
        let r = verify_theta_coherence(&g, &c2_bounds(&g, Some(ThetaMutation::SwapOutputs))).unwrap();
        let failed = r.failed_diagrams();
        assert!(failed.contains(&"naturality in S: square"), "{failed:?}");
        assert!(failed.contains(&"unit coherence: identity on the unit"), "{failed:?}");
    }
}
