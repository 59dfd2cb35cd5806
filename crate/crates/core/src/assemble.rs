//! The comparison as a pseudo-linear map from homotopy fixed point
//! objects to spans over `X`, its strictification, and the levelwise and
//! base-change certificates.
//!
//! The source module is made strict by keeping the acting span formal:
//! an object is a pair `(S, F)` standing for `S* F`, the ring acts by
//! `r·(S, F) = (r ∘ S, F)`, and morphisms are isomorphisms between the
//! realizations. Realizations of `(r ∘ S, F)` and `r*(S* F)` differ only
//! in tags, so the Beck–Chevalley comparison between them is the
//! identity on points.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::category::{check_equivalence, Category, Functor};
use crate::error::Result;
use crate::group::{FiniteGroup, Subgroup};
use crate::gset::{GMap, GSet};
use crate::hfp::{act_span, act_span_iso, act_span_on_map, hfp_isomorphisms, hfp_sum, HfpMap, HfpObject};
use crate::report::Report;
use crate::retractive::Point;
use crate::span::{Span, SpanIso};
use crate::spancat::{SpanCat, SpanModule, SpanRing};
use crate::strictify::{
    check_natural_square, strictify_map, underline_module, validate_module, CatModule, CatRing, PseudoLinearMap,
};
use crate::theta::{compare_f, compare_map, theta, theta_objects};

/// `S* F` kept formal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Thick {
    pub span: Span,
    pub object: HfpObject,
}

/// An isomorphism of realizations, given by its components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThickMor {
    pub source: Thick,
    pub target: Thick,
    pub components: Vec<Vec<usize>>,
}

pub struct ThickCat {
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
    orbits: Vec<GSet>,
    realized: RefCell<HashMap<Thick, HfpObject>>,
    homs: RefCell<HashMap<(Thick, Thick, usize), Vec<ThickMor>>>,
}

impl ThickCat {
    pub fn new(ring: &SpanRing) -> Self {
        Self {
            group: ring.group.clone(),
            subgroups: ring.subgroups.clone(),
            orbits: ring.orbits.clone(),
            realized: RefCell::new(HashMap::new()),
            homs: RefCell::new(HashMap::new()),
        }
    }

    fn subgroup_of(&self, orbit: &GSet) -> &Subgroup {
        &self.subgroups[self.orbits.iter().position(|o| o == orbit).expect("orbit of the ring")]
    }

    pub fn realize(&self, a: &Thick) -> HfpObject {
        if let Some(r) = self.realized.borrow().get(a) {
            return r.clone();
        }
        let h = self.subgroup_of(a.span.source()).clone();
        let r = act_span(&self.group, &h, &a.span, &a.object).expect("span ends match the object");
        self.realized.borrow_mut().insert(a.clone(), r.clone());
        r
    }

    fn as_hfp_map(&self, f: &ThickMor) -> HfpMap {
        HfpMap {
            source: self.realize(&f.source),
            target: self.realize(&f.target),
            components: f.components.iter().map(|c| c.iter().map(|&j| Point::Free(j)).collect()).collect(),
        }
    }

    fn from_hfp_map(source: &Thick, target: &Thick, m: &HfpMap) -> ThickMor {
        let components = m
            .components
            .iter()
            .map(|c| c.iter().map(|v| if let Point::Free(j) = *v { j } else { unreachable!("isomorphism") }).collect())
            .collect();
        ThickMor { source: source.clone(), target: target.clone(), components }
    }
}

impl Category for ThickCat {
    type Ob = Thick;
    type Mor = ThickMor;

    fn source(&self, f: &ThickMor) -> Thick {
        f.source.clone()
    }
    fn target(&self, f: &ThickMor) -> Thick {
        f.target.clone()
    }
    fn identity(&self, a: &Thick) -> ThickMor {
        let r = self.realize(a);
        ThickMor {
            source: a.clone(),
            target: a.clone(),
            components: r.parts.iter().map(|p| (0..p.size()).collect()).collect(),
        }
    }
    fn compose(&self, f: &ThickMor, g: &ThickMor) -> ThickMor {
        let components =
            f.components.iter().zip(&g.components).map(|(a, b)| a.iter().map(|&x| b[x]).collect()).collect();
        ThickMor { source: f.source.clone(), target: g.target.clone(), components }
    }
    fn hom(&self, a: &Thick, b: &Thick) -> Vec<ThickMor> {
        self.hom_limited(a, b, usize::MAX)
    }
    fn hom_limited(&self, a: &Thick, b: &Thick, limit: usize) -> Vec<ThickMor> {
        let key = (a.clone(), b.clone(), limit);
        if let Some(h) = self.homs.borrow().get(&key) {
            return h.clone();
        }
        let (ra, rb) = (self.realize(a), self.realize(b));
        let h: Vec<ThickMor> = hfp_isomorphisms(&self.group, &ra, &rb, limit)
            .expect("realizations are valid")
            .iter()
            .map(|m| Self::from_hfp_map(a, b, m))
            .collect();
        self.homs.borrow_mut().insert(key, h.clone());
        h
    }
    fn inverse(&self, f: &ThickMor) -> Option<ThickMor> {
        let m = self.as_hfp_map(f).inverse()?;
        Some(Self::from_hfp_map(&f.target, &f.source, &m))
    }
    fn find_isomorphism(&self, a: &Thick, b: &Thick) -> Option<ThickMor> {
        self.hom_limited(a, b, 1).pop()
    }
    fn is_morphism(&self, f: &ThickMor) -> bool {
        let m = self.as_hfp_map(f);
        m.is_isomorphism() && m.first_failure(&self.group).is_none()
    }
    fn coproduct(&self, a: &Thick, b: &Thick) -> Option<Thick> {
        if a.span != b.span {
            return None;
        }
        Some(Thick { span: a.span.clone(), object: hfp_sum(&self.group, &a.object, &b.object).ok()? })
    }
}

/// Homotopy fixed point objects over `X`, one level per orbit of the ring.
pub struct ThickModule<'a> {
    pub ring: &'a SpanRing,
    pub base: GSet,
    cat: ThickCat,
    samples: Vec<Vec<Thick>>,
}

impl<'a> ThickModule<'a> {
    pub fn new(ring: &'a SpanRing, base: &GSet, samples: Vec<Vec<Thick>>) -> Self {
        Self { ring, base: base.clone(), cat: ThickCat::new(ring), samples }
    }

    pub fn realize(&self, a: &Thick) -> HfpObject {
        self.cat.realize(a)
    }

    fn subgroup_at(&self, orbit: &GSet) -> &Subgroup {
        self.cat.subgroup_of(orbit)
    }
}

impl<'a> CatModule for ThickModule<'a> {
    type Ring = SpanRing;
    type Cat = ThickCat;

    fn ring(&self) -> &SpanRing {
        self.ring
    }
    fn cat(&self) -> &ThickCat {
        &self.cat
    }
    fn level(&self, m: &Thick) -> usize {
        self.ring.index_of(m.span.source())
    }
    fn samples(&self, s: &usize) -> Vec<Thick> {
        self.samples[*s].clone()
    }
    fn act(&self, r: &Span, m: &Thick) -> Thick {
        Thick { span: r.compose(&m.span).expect("composable"), object: m.object.clone() }
    }
    /// `ρ·φ = BC⁻¹ ∘ (ρ* ∘ r*φ) ∘ BC`, with both Beck–Chevalley maps the
    /// identity on points.
    fn act_mor(&self, rho: &SpanIso, phi: &ThickMor) -> ThickMor {
        let g = &self.ring.group;
        let h = self.subgroup_at(rho.source.source()).clone();
        let on_object = act_span_on_map(g, &h, &rho.source, &self.cat.as_hfp_map(phi)).expect("composable");
        let on_span = act_span_iso(g, &h, rho, &self.realize(&phi.target)).expect("composable");
        let m = on_object.then(&on_span);
        ThickCat::from_hfp_map(&self.act(&rho.source, &phi.source), &self.act(&rho.target, &phi.target), &m)
    }
}

/// `F ↦ f_H(F)` with cells `θ(r, S* F)` followed by the comparison of
/// `r*(S* F)` with `(r ∘ S)* F`.
pub struct Comparison<'a, 'b> {
    source: &'b ThickModule<'a>,
    target: &'b SpanModule<'a>,
    objects: RefCell<HashMap<Thick, Span>>,
    cells: RefCell<HashMap<(Span, Thick), SpanIso>>,
}

impl<'a, 'b> Comparison<'a, 'b> {
    pub fn new(source: &'b ThickModule<'a>, target: &'b SpanModule<'a>) -> Self {
        Self { source, target, objects: RefCell::new(HashMap::new()), cells: RefCell::new(HashMap::new()) }
    }
}

impl<'a, 'b> PseudoLinearMap for Comparison<'a, 'b> {
    type Ring = SpanRing;
    type Src = ThickModule<'a>;
    type Tgt = SpanModule<'a>;

    fn source(&self) -> &ThickModule<'a> {
        self.source
    }
    fn target(&self) -> &SpanModule<'a> {
        self.target
    }
    fn map_ob(&self, m: &Thick) -> Span {
        if let Some(s) = self.objects.borrow().get(m) {
            return s.clone();
        }
        let s = compare_f(&self.source.ring.group, &self.source.realize(m));
        self.objects.borrow_mut().insert(m.clone(), s.clone());
        s
    }
    fn map_mor(&self, f: &ThickMor) -> SpanIso {
        compare_map(&self.source.ring.group, &self.source.cat.as_hfp_map(f)).expect("isomorphism")
    }
    fn theta(&self, r: &Span, m: &Thick) -> SpanIso {
        let key = (r.clone(), m.clone());
        if let Some(c) = self.cells.borrow().get(&key) {
            return c.clone();
        }
        let c = self.cell(r, m);
        self.cells.borrow_mut().insert(key, c.clone());
        c
    }
}

impl<'a, 'b> Comparison<'a, 'b> {
    fn cell(&self, r: &Span, m: &Thick) -> SpanIso {
        let g = &self.source.ring.group;
        let l = self.source.subgroup_at(r.source());
        let cell = theta(g, l, r, &self.source.realize(m)).expect("composable");
        let bc_inverse = SpanIso::identity(&cell.target);
        let target = PseudoLinearMap::map_ob(self, &self.source.act(r, m));
        debug_assert_eq!(bc_inverse.target, target);
        SpanIso { source: cell.source, target, map: cell.map.iter().map(|&y| bc_inverse.map[y]).collect() }
    }
}

impl<'a, 'b> Functor for Comparison<'a, 'b> {
    type Src = ThickCat;
    type Tgt = SpanCat;
    fn map_ob(&self, a: &Thick) -> Span {
        PseudoLinearMap::map_ob(self, a)
    }
    fn map_mor(&self, f: &ThickMor) -> SpanIso {
        PseudoLinearMap::map_mor(self, f)
    }
}

/// Base change `(S, F) ↦ (S, f_! F)`; strictly linear.
pub struct PushThick<'a, 'b> {
    pub source: &'b ThickModule<'a>,
    pub target: &'b ThickModule<'a>,
    pub map: GMap,
}

impl<'a, 'b> PseudoLinearMap for PushThick<'a, 'b> {
    type Ring = SpanRing;
    type Src = ThickModule<'a>;
    type Tgt = ThickModule<'a>;

    fn source(&self) -> &ThickModule<'a> {
        self.source
    }
    fn target(&self) -> &ThickModule<'a> {
        self.target
    }
    fn map_ob(&self, m: &Thick) -> Thick {
        Thick { span: m.span.clone(), object: m.object.pushforward_base(&self.map).expect("same base") }
    }
    fn map_mor(&self, f: &ThickMor) -> ThickMor {
        ThickMor { source: self.map_ob(&f.source), target: self.map_ob(&f.target), components: f.components.clone() }
    }
    fn theta(&self, r: &Span, m: &Thick) -> ThickMor {
        self.target.cat().identity(&self.target.act(r, &self.map_ob(m)))
    }
}

/// Postcomposition `m ↦ f ∘ m` on spans over `X`; strictly linear.
pub struct PushSpan<'a, 'b> {
    pub source: &'b SpanModule<'a>,
    pub target: &'b SpanModule<'a>,
    pub map: GMap,
}

impl<'a, 'b> PseudoLinearMap for PushSpan<'a, 'b> {
    type Ring = SpanRing;
    type Src = SpanModule<'a>;
    type Tgt = SpanModule<'a>;

    fn source(&self) -> &SpanModule<'a> {
        self.source
    }
    fn target(&self) -> &SpanModule<'a> {
        self.target
    }
    fn map_ob(&self, m: &Span) -> Span {
        m.push_target(&self.map).expect("same base")
    }
    fn map_mor(&self, f: &SpanIso) -> SpanIso {
        f.push_target(&self.map).expect("same base")
    }
    fn theta(&self, r: &Span, m: &Span) -> SpanIso {
        SpanIso::identity(&r.compose(&self.map_ob(m)).expect("composable"))
    }
}

/// Bounds of the truncations on which the assembly is certified.
#[derive(Clone, Debug)]
pub struct AssemblyBounds {
    /// Free points of the objects `F` sampled at each level.
    pub max_free: usize,
    /// Apex bound of the sampled ring elements.
    pub max_ring_apex: usize,
    /// Sample only orbit spans in the ring.
    pub orbit_spans_only: bool,
    /// Morphisms sampled per hom set in the functoriality checks.
    pub hom_limit: usize,
}

pub fn assembly_ring(group: &FiniteGroup, subgroups: Vec<Subgroup>, bounds: &AssemblyBounds) -> Result<SpanRing> {
    let mut ring = SpanRing::new(group, subgroups, bounds.max_ring_apex)?;
    if bounds.orbit_spans_only {
        let n = ring.orbits.len();
        for i in 0..n {
            for j in 0..n {
                let kept = CatRing::samples(&ring, &i, &j)
                    .into_iter()
                    .filter(|s| s.is_unit() || (s.apex_size() > 0 && s.data().apex.is_transitive()))
                    .collect();
                ring.set_samples(i, j, kept);
            }
        }
    }
    Ok(ring)
}

/// Samples at each level: `(1, F)` for every `F` within the free bound,
/// and `(S, F)` for the sampled non-unit ring elements with apex at most 2
/// and `F` with at most one free point.
pub fn thick_samples(ring: &SpanRing, base: &GSet, max_free: usize) -> Result<Vec<Vec<Thick>>> {
    let g = &ring.group;
    let objects: Vec<Vec<HfpObject>> =
        ring.subgroups.iter().map(|k| theta_objects(g, k, base, max_free)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (h, orbit) in ring.orbits.iter().enumerate() {
        let mut level: Vec<Thick> =
            objects[h].iter().map(|f| Thick { span: Span::unit(orbit), object: f.clone() }).collect();
        for k in 0..ring.orbits.len() {
            for s in CatRing::samples(ring, &h, &k).into_iter().filter(|s| !s.is_unit() && s.apex_size() <= 2) {
                for f in objects[k].iter().filter(|f| f.parts[f.cosets.base_coset(g)].size() <= 1) {
                    level.push(Thick { span: s.clone(), object: f.clone() });
                }
            }
        }
        out.push(level);
    }
    Ok(out)
}

/// Equivalence certificate for one level `G/H` of the comparison.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LevelCertificate {
    pub orbit_size: usize,
    pub sources: usize,
    pub targets: usize,
    pub checked: u64,
    pub equivalence: bool,
}

#[derive(Clone, Debug)]
pub struct Assembly {
    pub report: Report,
    pub levels: Vec<LevelCertificate>,
}

/// Builds the comparison for `(G, X)`, validates both modules, validates
/// and strictifies the pseudo-linear map, certifies each level as an
/// equivalence onto spans with apex at most `|G/H|·max_free`, and checks
/// naturality in `X` along the collapse `X → *`.
pub fn assemble_and_strictify(
    group: &FiniteGroup,
    subgroups: Vec<Subgroup>,
    base: &GSet,
    bounds: &AssemblyBounds,
) -> Result<Assembly> {
    let ring = assembly_ring(group, subgroups, bounds)?;
    let point = GSet::point(group);
    let collapse = GMap::to_point(group, base);

    let n_x = ThickModule::new(&ring, base, thick_samples(&ring, base, bounds.max_free)?);
    let n_pt = ThickModule::new(&ring, &point, thick_samples(&ring, &point, bounds.max_free)?);
    let span_samples = |x: &GSet| -> Result<Vec<Vec<Span>>> {
        ring.orbits.iter().map(|o| crate::burnside::spans_up_to_iso(group, o, x, o.size() * bounds.max_free)).collect()
    };
    let m_x = SpanModule::with_samples(&ring, base, span_samples(base)?);
    let m_pt = SpanModule::with_samples(&ring, &point, span_samples(&point)?);

    let mut report = Report::new(format!("assembly over a base of size {}", base.size()));
    let hl = bounds.hom_limit;
    report.merge(named("source module", validate_module(&n_x, hl)));
    report.merge(named("target module", validate_module(&m_x, hl)));
    report.merge(named("thickened target module", underline_module(&m_x, hl)));

    let f_x = Comparison::new(&n_x, &m_x);
    report.merge(strictify_map(&f_x, hl));

    let mut levels = Vec::new();
    for (level, orbit) in ring.orbits.iter().enumerate() {
        let (sources, targets) = (CatModule::samples(&n_x, &level), CatModule::samples(&m_x, &level));
        let r =
            check_equivalence(&format!("comparison at level {level}"), n_x.cat(), m_x.cat(), &f_x, &sources, &targets);
        levels.push(LevelCertificate {
            orbit_size: orbit.size(),
            sources: sources.len(),
            targets: targets.len(),
            checked: r.checked,
            equivalence: r.passed(),
        });
        report.merge(r);
    }

    let f_pt = Comparison::new(&n_pt, &m_pt);
    let alpha = PushThick { source: &n_x, target: &n_pt, map: collapse.clone() };
    let beta = PushSpan { source: &m_x, target: &m_pt, map: collapse };
    report.merge(check_natural_square(&f_x, &f_pt, &alpha, &beta, hl));
    Ok(Assembly { report, levels })
}

fn named(name: &str, mut r: Report) -> Report {
    r.name = name.to_string();
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroups;

    #[test]
    fn trivial_group_over_a_point() {
        let g = FiniteGroup::trivial();
        let bounds = AssemblyBounds { max_free: 2, max_ring_apex: 2, orbit_spans_only: false, hom_limit: 2 };
        let r = assemble_and_strictify(&g, subgroups(&g).unwrap(), &GSet::point(&g), &bounds).unwrap();
        assert!(r.report.passed(), "{}", r.report);
        assert!(r.levels.iter().all(|l| l.equivalence));
    }

    #[test]
    fn c2_over_the_regular_set_with_orbit_spans() {
        let g = FiniteGroup::cyclic(2);
        let bounds = AssemblyBounds { max_free: 1, max_ring_apex: 2, orbit_spans_only: true, hom_limit: 2 };
        let r = assemble_and_strictify(&g, subgroups(&g).unwrap(), &GSet::regular(&g), &bounds).unwrap();
        assert!(r.report.passed(), "{}", r.report);
        assert_eq!(r.levels.len(), 2);
    }
}
