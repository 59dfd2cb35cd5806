//! Spans of finite G-sets with the lexicographic pullback composition and
//! an adjoined strict unit.
//!
//! A span `A ← P → B` is read as a morphism from `A` to `B`. For
//! `s1: A → B` and `s2: B → C`, `s1.compose(&s2)` is the span `A → C`
//! whose apex is the lexicographic pullback of `s1.right` and `s2.left`,
//! with `s1` the major coordinate.
//!
//! Under this model `s.compose(&Span::identity(b)) == s` holds on the nose
//! while `Span::identity(a).compose(&s)` reorders the apex by the left leg.
//! `Span::Unit` is the adjoined unit: it is absorbed on both sides and is
//! materialized as the identity span only when apex data is needed.

use std::borrow::Cow;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gset::{first_equivariance_failure, labelled_isomorphisms, lex_pullback_raw, GMap, GSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpanData {
    pub source: GSet,
    pub target: GSet,
    pub apex: GSet,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Span {
    /// The adjoined strict unit on a G-set.
    Unit(GSet),
    Concrete(SpanData),
}

impl Span {
    pub fn new(source: GSet, target: GSet, apex: GSet, left: Vec<usize>, right: Vec<usize>) -> Result<Self> {
        for (leg, end, name) in [(&left, &source, "left"), (&right, &target, "right")] {
            if leg.len() != apex.size() || leg.iter().any(|&y| y >= end.size()) {
                return Err(Error::Domain(format!("{name} leg out of range")));
            }
            if let Some((g, x)) = first_equivariance_failure(&apex, end, leg) {
                return Err(Error::Domain(format!("{name} leg not equivariant at g={g}, x={x}")));
            }
        }
        Ok(Span::Concrete(SpanData { source, target, apex, left, right }))
    }

    pub(crate) fn from_parts_unchecked(
        source: GSet,
        target: GSet,
        apex: GSet,
        left: Vec<usize>,
        right: Vec<usize>,
    ) -> Self {
        Span::Concrete(SpanData { source, target, apex, left, right })
    }

    pub fn from_maps(left: &GMap, right: &GMap) -> Result<Self> {
        if left.source() != right.source() {
            return Err(Error::Domain("legs have different sources".into()));
        }
        Ok(Self::from_parts_unchecked(
            left.target().clone(),
            right.target().clone(),
            left.source().clone(),
            left.values().to_vec(),
            right.values().to_vec(),
        ))
    }

    /// The honest identity span `A ← A → A`.
    pub fn identity(a: &GSet) -> Self {
        let id: Vec<usize> = (0..a.size()).collect();
        Self::from_parts_unchecked(a.clone(), a.clone(), a.clone(), id.clone(), id)
    }

    pub fn unit(a: &GSet) -> Self {
        Span::Unit(a.clone())
    }

    /// The empty span `A ← ∅ → B`.
    pub fn empty(source: &GSet, target: &GSet) -> Self {
        let apex = GSet::new_unchecked(0, vec![Vec::new(); source.action().len()]);
        Self::from_parts_unchecked(source.clone(), target.clone(), apex, Vec::new(), Vec::new())
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Span::Unit(_))
    }

    pub fn source(&self) -> &GSet {
        match self {
            Span::Unit(a) => a,
            Span::Concrete(d) => &d.source,
        }
    }

    pub fn target(&self) -> &GSet {
        match self {
            Span::Unit(a) => a,
            Span::Concrete(d) => &d.target,
        }
    }

    /// Apex data; the unit materializes as the identity span.
    pub fn data(&self) -> Cow<'_, SpanData> {
        match self {
            Span::Concrete(d) => Cow::Borrowed(d),
            Span::Unit(a) => match Span::identity(a) {
                Span::Concrete(d) => Cow::Owned(d),
                Span::Unit(_) => unreachable!(),
            },
        }
    }

    /// The unit replaced by the identity span.
    pub fn materialize(&self) -> Span {
        Span::Concrete(self.data().into_owned())
    }

    pub fn apex_size(&self) -> usize {
        match self {
            Span::Unit(a) => a.size(),
            Span::Concrete(d) => d.apex.size(),
        }
    }

    pub fn left_at(&self, x: usize) -> usize {
        match self {
            Span::Unit(_) => x,
            Span::Concrete(d) => d.left[x],
        }
    }

    pub fn right_at(&self, x: usize) -> usize {
        match self {
            Span::Unit(_) => x,
            Span::Concrete(d) => d.right[x],
        }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Span) -> Result<Span> {
        if self.target() != other.source() {
            return Err(Error::Domain("middle objects of the spans differ".into()));
        }
        Ok(match (self, other) {
            (Span::Unit(_), s) | (s, Span::Unit(_)) => s.clone(),
            (Span::Concrete(a), Span::Concrete(b)) => {
                let (apex, pairs) = lex_pullback_raw(&a.apex, &a.right, &b.apex, &b.left);
                let left = pairs.iter().map(|&(x, _)| a.left[x]).collect();
                let right = pairs.iter().map(|&(_, y)| b.right[y]).collect();
                Span::Concrete(SpanData { source: a.source.clone(), target: b.target.clone(), apex, left, right })
            }
        })
    }

    /// For each apex point of `self.compose(other)`, the pair of apex
    /// points of the materialized factors lying under it.
    pub fn composite_pairs(&self, other: &Span) -> Vec<(usize, usize)> {
        match (self, other) {
            (Span::Unit(_), Span::Unit(_)) => (0..self.apex_size()).map(|x| (x, x)).collect(),
            (Span::Unit(_), s) => (0..s.apex_size()).map(|y| (s.left_at(y), y)).collect(),
            (s, Span::Unit(_)) => (0..s.apex_size()).map(|x| (x, s.right_at(x))).collect(),
            (Span::Concrete(a), Span::Concrete(b)) => lex_pullback_raw(&a.apex, &a.right, &b.apex, &b.left).1,
        }
    }

    /// Postcomposes the right leg with `f`.
    pub fn push_target(&self, f: &GMap) -> Result<Span> {
        if self.target() != f.source() {
            return Err(Error::Domain("map does not start at the span's target".into()));
        }
        let d = self.data();
        Ok(Self::from_parts_unchecked(
            d.source.clone(),
            f.target().clone(),
            d.apex.clone(),
            d.left.clone(),
            d.right.iter().map(|&y| f.apply(y)).collect(),
        ))
    }

    /// Renumbers apex points: point `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Span {
        let d = self.data();
        let mut left = vec![0; d.left.len()];
        let mut right = vec![0; d.right.len()];
        for x in 0..perm.len() {
            left[perm[x]] = d.left[x];
            right[perm[x]] = d.right[x];
        }
        Self::from_parts_unchecked(d.source.clone(), d.target.clone(), d.apex.relabel(perm), left, right)
    }

    /// Disjoint union of apexes over the same ends.
    pub fn sum(&self, other: &Span) -> Result<Span> {
        if self.source() != other.source() || self.target() != other.target() {
            return Err(Error::Domain("spans have different ends".into()));
        }
        let (a, b) = (self.data(), other.data());
        let n = a.apex.size();
        let action = a
            .apex
            .action()
            .iter()
            .zip(b.apex.action())
            .map(|(pa, pb)| pa.iter().copied().chain(pb.iter().map(|&y| y + n)).collect())
            .collect();
        Ok(Self::from_parts_unchecked(
            a.source.clone(),
            a.target.clone(),
            GSet::new_unchecked(n + b.apex.size(), action),
            a.left.iter().chain(&b.left).copied().collect(),
            a.right.iter().chain(&b.right).copied().collect(),
        ))
    }

    fn leg_labels(&self) -> Vec<(usize, usize)> {
        (0..self.apex_size()).map(|x| (self.left_at(x), self.right_at(x))).collect()
    }
}

/// An isomorphism of spans: a bijection of materialized apexes over both legs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpanIso {
    pub source: Span,
    pub target: Span,
    pub map: Vec<usize>,
}

impl SpanIso {
    pub fn new(source: Span, target: Span, map: Vec<usize>) -> Result<Self> {
        let iso = Self { source, target, map };
        iso.validate()?;
        Ok(iso)
    }

    pub fn identity(s: &Span) -> Self {
        Self { source: s.clone(), target: s.clone(), map: (0..s.apex_size()).collect() }
    }

    pub fn validate(&self) -> Result<()> {
        let (a, b) = (self.source.data(), self.target.data());
        if a.source != b.source || a.target != b.target {
            return Err(Error::Domain("isomorphism between spans with different ends".into()));
        }
        let n = a.apex.size();
        let mut seen = vec![false; n];
        if b.apex.size() != n
            || self.map.len() != n
            || self.map.iter().any(|&y| y >= n || std::mem::replace(&mut seen[y], true))
        {
            return Err(Error::Domain("apex map is not a bijection".into()));
        }
        if let Some((g, x)) = first_equivariance_failure(&a.apex, &b.apex, &self.map) {
            return Err(Error::Domain(format!("apex map not equivariant at g={g}, x={x}")));
        }
        for x in 0..n {
            if a.left[x] != b.left[self.map[x]] || a.right[x] != b.right[self.map[x]] {
                return Err(Error::Domain(format!("apex map does not commute with the legs at {x}")));
            }
        }
        Ok(())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Self { source: self.target.clone(), target: self.source.clone(), map: inv }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SpanIso) -> Self {
        Self {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&y| other.map[y]).collect(),
        }
    }

    /// The induced isomorphism `s1 ∘ s2 → t1 ∘ t2` for `self: s1 → t1`
    /// and `other: s2 → t2`.
    pub fn compose_horizontal(&self, other: &SpanIso) -> Result<Self> {
        let source = self.source.compose(&other.source)?;
        let target = self.target.compose(&other.target)?;
        let target_index: HashMap<(usize, usize), usize> =
            self.target.composite_pairs(&other.target).into_iter().enumerate().map(|(k, p)| (p, k)).collect();
        let map = self
            .source
            .composite_pairs(&other.source)
            .into_iter()
            .map(|(a, b)| {
                target_index
                    .get(&(self.map[a], other.map[b]))
                    .copied()
                    .ok_or_else(|| Error::Domain("factor isomorphisms do not respect the middle legs".into()))
            })
            .collect::<Result<_>>()?;
        Ok(Self { source, target, map })
    }

    /// Whiskers by postcomposing the right legs with `f`.
    pub fn push_target(&self, f: &GMap) -> Result<Self> {
        Ok(Self { source: self.source.push_target(f)?, target: self.target.push_target(f)?, map: self.map.clone() })
    }
}

/// Span isomorphisms `a → b`, at most `limit` of them.
pub fn span_isomorphisms(a: &Span, b: &Span, limit: usize) -> Vec<SpanIso> {
    if a.source() != b.source() || a.target() != b.target() || a.apex_size() != b.apex_size() {
        return Vec::new();
    }
    let (da, db) = (a.data(), b.data());
    labelled_isomorphisms(da.apex.action(), &a.leg_labels(), db.apex.action(), &b.leg_labels(), limit)
        .into_iter()
        .map(|map| SpanIso { source: a.clone(), target: b.clone(), map })
        .collect()
}

pub fn spans_isomorphic(a: &Span, b: &Span) -> bool {
    !span_isomorphisms(a, b, 1).is_empty()
}

/// Brute-force isomorphism test over all apex bijections; the reference
/// for the canonical-form test.
pub fn spans_isomorphic_brute_force(a: &Span, b: &Span) -> bool {
    if a.source() != b.source() || a.target() != b.target() || a.apex_size() != b.apex_size() {
        return false;
    }
    let n = a.apex_size();
    let mut perm: Vec<usize> = (0..n).collect();
    let (da, db) = (a.data().into_owned(), b.data().into_owned());
    let check = |p: &[usize]| {
        (0..n).all(|x| da.left[x] == db.left[p[x]] && da.right[x] == db.right[p[x]])
            && first_equivariance_failure(&da.apex, &db.apex, p).is_none()
    };
    heap_any(n, &mut perm, &check)
}

fn heap_any(k: usize, arr: &mut [usize], f: &dyn Fn(&[usize]) -> bool) -> bool {
    if k <= 1 {
        return f(arr);
    }
    if heap_any(k - 1, arr, f) {
        return true;
    }
    for i in 0..k - 1 {
        if k.is_multiple_of(2) {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
        if heap_any(k - 1, arr, f) {
            return true;
        }
    }
    false
}

/// The first candidate `s` with `Span::identity(s.source()).compose(s) != s`.
pub fn right_unit_witness(candidates: &[Span]) -> Option<Span> {
    candidates.iter().find(|s| Span::identity(s.source()).compose(s).map(|c| &c != *s).unwrap_or(false)).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{subgroups, FiniteGroup};
    use crate::gset::coset_gset;

    fn c2_free_span() -> (FiniteGroup, Span) {
        let g = FiniteGroup::cyclic(2);
        let reg = GSet::regular(&g);
        let pt = GSet::point(&g);
        let s = Span::new(pt.clone(), pt, reg, vec![0, 0], vec![0, 0]).unwrap();
        (g, s)
    }

    #[test]
    fn free_orbit_square() {
        let (_, s) = c2_free_span();
        let c = s.compose(&s).unwrap();
        assert_eq!(c.apex_size(), 4);
        assert_eq!(c.data().apex.orbits().len(), 2);
    }

    #[test]
    fn units_are_strict_and_identity_is_one_sided() {
        let g = FiniteGroup::cyclic(2);
        let reg = GSet::regular(&g);
        let pt = GSet::point(&g);
        let s = Span::new(reg.clone(), pt.clone(), reg.clone(), vec![1, 0], vec![0, 0]).unwrap();
        assert_eq!(Span::unit(&reg).compose(&s).unwrap(), s);
        assert_eq!(s.compose(&Span::unit(&pt)).unwrap(), s);
        assert_eq!(s.compose(&Span::identity(&pt)).unwrap(), s);
        let reordered = Span::identity(&reg).compose(&s).unwrap();
        assert_ne!(reordered, s);
        assert!(spans_isomorphic(&reordered, &s));
        assert_eq!(right_unit_witness(std::slice::from_ref(&s)), Some(s));
    }

    #[test]
    fn composite_pairs_track_units() {
        let g = FiniteGroup::symmetric(3);
        let subs = subgroups(&g).unwrap();
        let a = coset_gset(&g, &subs[1]);
        let pt = GSet::point(&g);
        let s = Span::new(a.clone(), pt, a.clone(), (0..3).collect(), vec![0; 3]).unwrap();
        let pairs = Span::unit(&a).composite_pairs(&s);
        assert_eq!(pairs, vec![(0, 0), (1, 1), (2, 2)]);
        let id = SpanIso::identity(&s);
        let unit_to_id = SpanIso { source: Span::unit(&a), target: Span::identity(&a), map: (0..3).collect() };
        unit_to_id.validate().unwrap();
        let h = unit_to_id.compose_horizontal(&id).unwrap();
        h.validate().unwrap();
    }

    #[test]
    fn isomorphism_search_agrees_with_brute_force() {
        let g = FiniteGroup::symmetric(3);
        let reg = GSet::regular(&g);
        let pt = GSet::point(&g);
        let s = Span::new(pt.clone(), pt.clone(), reg.clone(), vec![0; 6], vec![0; 6]).unwrap();
        let t = s.relabel(&[3, 1, 4, 0, 5, 2]);
        assert!(spans_isomorphic(&s, &t));
        assert!(spans_isomorphic_brute_force(&s, &t));
        assert_eq!(span_isomorphisms(&s, &s, usize::MAX).len(), 6);
        let e = Span::empty(&pt, &pt);
        assert!(!spans_isomorphic(&s, &e));
        assert!(!spans_isomorphic_brute_force(&s, &e));
    }

    #[test]
    fn mismatched_middle_is_rejected() {
        let g = FiniteGroup::cyclic(2);
        let reg = GSet::regular(&g);
        let pt = GSet::point(&g);
        assert!(Span::identity(&reg).compose(&Span::identity(&pt)).is_err());
    }
}
