//! The categories of spans and span isomorphisms, the ring they form over
//! a list of orbits, and the module of spans into a fixed G-set.

use crate::burnside::spans_up_to_iso;
use crate::category::Category;
use crate::error::Result;
use crate::group::{FiniteGroup, Subgroup};
use crate::gset::{coset_gset, GSet};
use crate::span::{span_isomorphisms, Span, SpanIso};
use crate::strictify::{CatModule, CatRing};

/// Spans between arbitrary G-sets and their isomorphisms.
#[derive(Clone, Debug, Default)]
pub struct SpanCat;

impl Category for SpanCat {
    type Ob = Span;
    type Mor = SpanIso;

    fn source(&self, f: &SpanIso) -> Span {
        f.source.clone()
    }
    fn target(&self, f: &SpanIso) -> Span {
        f.target.clone()
    }
    fn identity(&self, a: &Span) -> SpanIso {
        SpanIso::identity(a)
    }
    fn compose(&self, f: &SpanIso, g: &SpanIso) -> SpanIso {
        f.then(g)
    }
    fn hom(&self, a: &Span, b: &Span) -> Vec<SpanIso> {
        span_isomorphisms(a, b, usize::MAX)
    }
    fn hom_limited(&self, a: &Span, b: &Span, limit: usize) -> Vec<SpanIso> {
        span_isomorphisms(a, b, limit)
    }
    fn inverse(&self, f: &SpanIso) -> Option<SpanIso> {
        Some(f.inverse())
    }
    fn find_isomorphism(&self, a: &Span, b: &Span) -> Option<SpanIso> {
        span_isomorphisms(a, b, 1).pop()
    }
    fn is_morphism(&self, f: &SpanIso) -> bool {
        f.validate().is_ok()
    }
    fn coproduct(&self, a: &Span, b: &Span) -> Option<Span> {
        a.sum(b).ok()
    }
}

/// The ring `R(H,K) = spans G/H → G/K` over a list of subgroups, with
/// finite samples per hom category.
#[derive(Clone, Debug)]
pub struct SpanRing {
    pub group: FiniteGroup,
    pub subgroups: Vec<Subgroup>,
    pub orbits: Vec<GSet>,
    samples: Vec<Vec<Vec<Span>>>,
    cat: SpanCat,
}

impl SpanRing {
    /// Samples: the unit, the identity span and every span up to
    /// isomorphism with apex at most `max_apex`.
    pub fn new(group: &FiniteGroup, subgroups: Vec<Subgroup>, max_apex: usize) -> Result<Self> {
        let orbits: Vec<GSet> = subgroups.iter().map(|h| coset_gset(group, h)).collect();
        let mut samples = Vec::new();
        for (i, a) in orbits.iter().enumerate() {
            let mut row = Vec::new();
            for (j, b) in orbits.iter().enumerate() {
                let mut s = spans_up_to_iso(group, a, b, max_apex)?;
                if i == j {
                    s.insert(0, Span::unit(a));
                    s.push(Span::identity(a));
                }
                row.push(s);
            }
            samples.push(row);
        }
        Ok(Self { group: group.clone(), subgroups, orbits, samples, cat: SpanCat })
    }

    /// Replaces the samples of `R(i,j)`.
    pub fn set_samples(&mut self, i: usize, j: usize, spans: Vec<Span>) {
        self.samples[i][j] = spans;
    }

    pub fn index_of(&self, a: &GSet) -> usize {
        self.orbits.iter().position(|o| o == a).expect("end is one of the ring's orbits")
    }
}

impl CatRing for SpanRing {
    type Idx = usize;
    type Cat = SpanCat;

    fn cat(&self) -> &SpanCat {
        &self.cat
    }
    fn indices(&self) -> Vec<usize> {
        (0..self.orbits.len()).collect()
    }
    fn ends(&self, r: &Span) -> (usize, usize) {
        (self.index_of(r.source()), self.index_of(r.target()))
    }
    fn samples(&self, s: &usize, t: &usize) -> Vec<Span> {
        self.samples[*s][*t].clone()
    }
    fn unit(&self, s: &usize) -> Span {
        Span::unit(&self.orbits[*s])
    }
    fn mul(&self, a: &Span, b: &Span) -> Span {
        a.compose(b).expect("composable ring objects")
    }
    fn mul_mor(&self, f: &SpanIso, g: &SpanIso) -> SpanIso {
        f.compose_horizontal(g).expect("composable ring morphisms")
    }
}

/// The module `M(H) = spans G/H → X`, acted on by precomposition.
#[derive(Clone, Debug)]
pub struct SpanModule<'a> {
    pub ring: &'a SpanRing,
    pub base: GSet,
    samples: Vec<Vec<Span>>,
}

impl<'a> SpanModule<'a> {
    pub fn new(ring: &'a SpanRing, base: &GSet, max_apex: usize) -> Result<Self> {
        let samples =
            ring.orbits.iter().map(|a| spans_up_to_iso(&ring.group, a, base, max_apex)).collect::<Result<Vec<_>>>()?;
        Ok(Self { ring, base: base.clone(), samples })
    }

    pub fn with_samples(ring: &'a SpanRing, base: &GSet, samples: Vec<Vec<Span>>) -> Self {
        Self { ring, base: base.clone(), samples }
    }
}

impl<'a> CatModule for SpanModule<'a> {
    type Ring = SpanRing;
    type Cat = SpanCat;

    fn ring(&self) -> &SpanRing {
        self.ring
    }
    fn cat(&self) -> &SpanCat {
        &self.ring.cat
    }
    fn level(&self, m: &Span) -> usize {
        self.ring.index_of(m.source())
    }
    fn samples(&self, s: &usize) -> Vec<Span> {
        self.samples[*s].clone()
    }
    fn act(&self, r: &Span, m: &Span) -> Span {
        r.compose(m).expect("composable")
    }
    fn act_mor(&self, f: &SpanIso, g: &SpanIso) -> SpanIso {
        f.compose_horizontal(g).expect("composable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroups;
    use crate::strictify::{underline_module, validate_module};

    #[test]
    fn c2_span_module_is_strict() {
        let g = FiniteGroup::cyclic(2);
        let ring = SpanRing::new(&g, subgroups(&g).unwrap(), 2).unwrap();
        let x = GSet::regular(&g);
        let m = SpanModule::new(&ring, &x, 4).unwrap();
        let r = validate_module(&m, 2);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn c2_span_module_thickens() {
        let g = FiniteGroup::cyclic(2);
        let ring = SpanRing::new(&g, subgroups(&g).unwrap(), 2).unwrap();
        let x = GSet::regular(&g);
        let m = SpanModule::new(&ring, &x, 2).unwrap();
        let r = underline_module(&m, 2);
        assert!(r.passed(), "{r}");
    }
}
