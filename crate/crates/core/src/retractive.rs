//! Discrete retractive H-sets `X ⊔ S` over a G-set `X`, their maps,
//! pushouts along cofibrations and the functorial splitting of cofiber
//! sequences.
//!
//! Cofibrations are maps injective into the free part of the target; weak
//! equivalences are isomorphisms.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{subgroups, FiniteGroup, Subgroup};
use crate::gset::{labelled_isomorphisms, GMap, GSet};
use crate::report::Report;

/// Free points carry tags so that disjoint unions and base changes are
/// strictly functorial; tags never affect equality of maps.
pub type Tag = Vec<usize>;

/// A point of `X ⊔ S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Point {
    Base(usize),
    Free(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RetractiveGSet {
    pub subgroup: Subgroup,
    pub base: GSet,
    pub tags: Vec<Tag>,
    /// `action[i]` permutes the free part by the `i`-th element of `subgroup`.
    pub action: Vec<Vec<usize>>,
    pub projection: Vec<usize>,
}

impl RetractiveGSet {
    pub fn new(
        group: &FiniteGroup,
        subgroup: Subgroup,
        base: GSet,
        tags: Vec<Tag>,
        action: Vec<Vec<usize>>,
        projection: Vec<usize>,
    ) -> Result<Self> {
        let y = Self { subgroup, base, tags, action, projection };
        y.validate(group)?;
        Ok(y)
    }

    pub fn empty(subgroup: &Subgroup, base: &GSet) -> Self {
        Self {
            subgroup: subgroup.clone(),
            base: base.clone(),
            tags: Vec::new(),
            action: vec![Vec::new(); subgroup.order()],
            projection: Vec::new(),
        }
    }

    /// Action axioms and equivariance of the projection.
    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        let n = self.free_size();
        let bad = |m: String| Err(Error::Validation(m));
        if self.tags.len() != n || self.action.len() != self.subgroup.order() {
            return bad("free part, tags and action disagree in size".into());
        }
        if self.projection.iter().any(|&x| x >= self.base.size()) {
            return bad("projection leaves the base".into());
        }
        for (i, p) in self.action.iter().enumerate() {
            let distinct: BTreeSet<usize> = p.iter().copied().collect();
            if p.len() != n || distinct.len() != n || p.iter().any(|&s| s >= n) {
                return bad(format!("element {} does not act by a permutation", self.subgroup.elements()[i]));
            }
        }
        let hs = self.subgroup.elements();
        for s in 0..n {
            if self.act(group.identity(), s) != s {
                return bad(format!("identity moves free point {s}"));
            }
            for &h in hs {
                if self.projection[self.act(h, s)] != self.base.act(h, self.projection[s]) {
                    return bad(format!("projection is not equivariant at ({h}, {s})"));
                }
                for &k in hs {
                    if self.act(group.mul(h, k), s) != self.act(h, self.act(k, s)) {
                        return bad(format!("action is not multiplicative at ({h}, {k}, {s})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn free_size(&self) -> usize {
        self.projection.len()
    }

    pub fn act(&self, h: usize, s: usize) -> usize {
        self.action[self.subgroup.position(h).expect("element of the subgroup")][s]
    }

    pub fn act_point(&self, h: usize, p: Point) -> Point {
        match p {
            Point::Base(x) => Point::Base(self.base.act(h, x)),
            Point::Free(s) => Point::Free(self.act(h, s)),
        }
    }

    pub fn project(&self, p: Point) -> usize {
        match p {
            Point::Base(x) => x,
            Point::Free(s) => self.projection[s],
        }
    }

    /// Elements of the subgroup fixing the free point `s`.
    pub fn stabilizer(&self, s: usize) -> Vec<usize> {
        let hs = self.subgroup.elements();
        (0..hs.len()).filter(|&i| self.action[i][s] == s).map(|i| hs[i]).collect()
    }

    /// Least point of each orbit of the free part.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        let mut seen = vec![false; self.free_size()];
        let mut reps = Vec::new();
        for s in 0..self.free_size() {
            if !seen[s] {
                reps.push(s);
                for p in &self.action {
                    seen[p[s]] = true;
                }
            }
        }
        reps
    }

    /// The free orbit `H/L` over a point `x ∈ X^L`, cosets numbered by
    /// least element.
    pub fn orbit_over(group: &FiniteGroup, h: &Subgroup, l: &Subgroup, base: &GSet, x: usize) -> Result<Self> {
        if !l.is_subgroup_of(h) || !base.is_fixed(l, x) {
            return Err(Error::Domain(format!(
                "point {x} is not fixed by {:?} inside {:?}",
                l.elements(),
                h.elements()
            )));
        }
        let reps: Vec<usize> =
            h.elements().iter().map(|&k| group.left_coset_rep(k, l)).collect::<BTreeSet<_>>().into_iter().collect();
        let index = |g: usize| reps.binary_search(&group.left_coset_rep(g, l)).expect("coset");
        let action = h.elements().iter().map(|&k| reps.iter().map(|&r| index(group.mul(k, r))).collect()).collect();
        Ok(Self {
            subgroup: h.clone(),
            base: base.clone(),
            tags: (0..reps.len()).map(|j| vec![j]).collect(),
            action,
            projection: reps.iter().map(|&r| base.act(r, x)).collect(),
        })
    }

    /// Disjoint union over the same base: `self` first, tags prefixed by
    /// 0 and 1.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.subgroup != other.subgroup || self.base != other.base {
            return Err(Error::Domain("summands over different bases".into()));
        }
        let n = self.free_size();
        let prefixed = |p: usize, t: &Tag| std::iter::once(p).chain(t.iter().copied()).collect::<Tag>();
        Ok(Self {
            subgroup: self.subgroup.clone(),
            base: self.base.clone(),
            tags: self.tags.iter().map(|t| prefixed(0, t)).chain(other.tags.iter().map(|t| prefixed(1, t))).collect(),
            action: self
                .action
                .iter()
                .zip(&other.action)
                .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&s| s + n)).collect())
                .collect(),
            projection: self.projection.iter().chain(&other.projection).copied().collect(),
        })
    }

    /// Base change `Y ↦ Y ∪_X X′` along `f`; free points keep their tags.
    pub fn pushforward(&self, f: &GMap) -> Result<Self> {
        if f.source() != &self.base {
            return Err(Error::Domain("base change from a different base".into()));
        }
        Ok(Self {
            base: f.target().clone(),
            projection: self.projection.iter().map(|&x| f.apply(x)).collect(),
            ..self.clone()
        })
    }
}

/// A map over and under the base, given on free points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RetractiveMap {
    pub source: RetractiveGSet,
    pub target: RetractiveGSet,
    pub values: Vec<Point>,
}

impl RetractiveMap {
    pub fn new(source: RetractiveGSet, target: RetractiveGSet, values: Vec<Point>) -> Result<Self> {
        let f = Self { source, target, values };
        if let Some(w) = f.first_failure() {
            return Err(Error::Validation(w));
        }
        Ok(f)
    }

    pub fn first_failure(&self) -> Option<String> {
        let (a, b) = (&self.source, &self.target);
        if a.subgroup != b.subgroup || a.base != b.base || self.values.len() != a.free_size() {
            return Some("ends do not match".into());
        }
        for (s, &v) in self.values.iter().enumerate() {
            if matches!(v, Point::Free(j) if j >= b.free_size()) {
                return Some(format!("free point {s} maps out of range"));
            }
            if b.project(v) != a.projection[s] {
                return Some(format!("free point {s} is not mapped over the base"));
            }
            for &h in a.subgroup.elements() {
                if self.values[a.act(h, s)] != b.act_point(h, v) {
                    return Some(format!("not equivariant at ({h}, {s})"));
                }
            }
        }
        None
    }

    pub fn identity(y: &RetractiveGSet) -> Self {
        Self { source: y.clone(), target: y.clone(), values: (0..y.free_size()).map(Point::Free).collect() }
    }

    pub fn apply(&self, p: Point) -> Point {
        match p {
            Point::Base(x) => Point::Base(x),
            Point::Free(s) => self.values[s],
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            source: self.source.clone(),
            target: other.target.clone(),
            values: self.values.iter().map(|&v| other.apply(v)).collect(),
        }
    }

    pub fn is_cofibration(&self) -> bool {
        let mut hit = vec![false; self.target.free_size()];
        self.values.iter().all(|v| match *v {
            Point::Free(j) => !std::mem::replace(&mut hit[j], true),
            Point::Base(_) => false,
        })
    }

    pub fn is_weak_equivalence(&self) -> bool {
        self.source.free_size() == self.target.free_size() && self.is_cofibration()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_weak_equivalence() {
            return None;
        }
        let mut values = vec![Point::Base(0); self.target.free_size()];
        for (s, v) in self.values.iter().enumerate() {
            if let Point::Free(j) = *v {
                values[j] = Point::Free(s);
            }
        }
        Some(Self { source: self.target.clone(), target: self.source.clone(), values })
    }
}

/// Every map `a → b`, at most `limit`. Each orbit representative is sent
/// to a point over its image whose stabilizer contains its own.
pub fn retractive_maps(a: &RetractiveGSet, b: &RetractiveGSet, limit: usize) -> Vec<RetractiveMap> {
    if a.subgroup != b.subgroup || a.base != b.base {
        return Vec::new();
    }
    let reps = a.orbit_representatives();
    let choices: Vec<Vec<Point>> = reps
        .iter()
        .map(|&s| {
            let stab = a.stabilizer(s);
            let x = a.projection[s];
            std::iter::once(Point::Base(x))
                .chain((0..b.free_size()).filter(|&j| b.projection[j] == x).map(Point::Free))
                .filter(|&t| stab.iter().all(|&h| b.act_point(h, t) == t))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; reps.len()];
    if choices.iter().any(|c| c.is_empty()) {
        return out;
    }
    loop {
        if out.len() >= limit {
            return out;
        }
        let mut values = vec![Point::Base(0); a.free_size()];
        for (k, &s) in reps.iter().enumerate() {
            let t = choices[k][pick[k]];
            for (i, p) in a.action.iter().enumerate() {
                values[p[s]] = b.act_point(a.subgroup.elements()[i], t);
            }
        }
        out.push(RetractiveMap { source: a.clone(), target: b.clone(), values });
        let mut k = 0;
        loop {
            if k == reps.len() {
                return out;
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// Isomorphisms `a → b`, at most `limit`.
pub fn retractive_isomorphisms(a: &RetractiveGSet, b: &RetractiveGSet, limit: usize) -> Vec<RetractiveMap> {
    if a.subgroup != b.subgroup || a.base != b.base {
        return Vec::new();
    }
    labelled_isomorphisms(&a.action, &a.projection, &b.action, &b.projection, limit)
        .into_iter()
        .map(|m| RetractiveMap {
            source: a.clone(),
            target: b.clone(),
            values: m.into_iter().map(Point::Free).collect(),
        })
        .collect()
}

/// `W ∪_Y Z` for a cofibration `c: Y ↪ Z` and any `f: Y → W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushout {
    pub object: RetractiveGSet,
    /// `W → P`.
    pub from_left: RetractiveMap,
    /// `Z → P`.
    pub from_right: RetractiveMap,
}

/// Free points of `c.target` outside the image of `c`, ascending.
fn complement(c: &RetractiveMap) -> Vec<usize> {
    let image: BTreeSet<usize> =
        c.values.iter().filter_map(|v| if let Point::Free(j) = *v { Some(j) } else { None }).collect();
    (0..c.target.free_size()).filter(|j| !image.contains(j)).collect()
}

fn restrict_to(z: &RetractiveGSet, points: &[usize]) -> RetractiveGSet {
    let pos = |j: usize| points.binary_search(&j).expect("stable subset");
    RetractiveGSet {
        subgroup: z.subgroup.clone(),
        base: z.base.clone(),
        tags: points.iter().map(|&j| z.tags[j].clone()).collect(),
        action: z.action.iter().map(|p| points.iter().map(|&j| pos(p[j])).collect()).collect(),
        projection: points.iter().map(|&j| z.projection[j]).collect(),
    }
}

pub fn pushout(c: &RetractiveMap, f: &RetractiveMap) -> Result<Pushout> {
    if !c.is_cofibration() {
        return Err(Error::NotCofibration("pushout leg is not injective into the free part".into()));
    }
    if c.source != f.source {
        return Err(Error::Domain("pushout legs start at different objects".into()));
    }
    let (w, z) = (&f.target, &c.target);
    let rest = complement(c);
    let object = w.sum(&restrict_to(z, &rest))?;
    let n = w.free_size();
    let from_left =
        RetractiveMap { source: w.clone(), target: object.clone(), values: (0..n).map(Point::Free).collect() };
    let mut values = vec![Point::Base(0); z.free_size()];
    for (y, v) in c.values.iter().enumerate() {
        if let Point::Free(j) = *v {
            values[j] = f.values[y];
        }
    }
    for (k, &j) in rest.iter().enumerate() {
        values[j] = Point::Free(n + k);
    }
    let from_right = RetractiveMap { source: z.clone(), target: object.clone(), values };
    Ok(Pushout { object, from_left, from_right })
}

/// The square commutes, and every cocone into each test object factors
/// through the pushout exactly once.
pub fn check_pushout(c: &RetractiveMap, f: &RetractiveMap, po: &Pushout, tests: &[RetractiveGSet]) -> Report {
    let mut report = Report::new("pushout");
    report.check(c.then(&po.from_right).values == f.then(&po.from_left).values, "square", || format!("{c:?}"));
    for q in tests {
        let maps_p = retractive_maps(&po.object, q, usize::MAX);
        for a in retractive_maps(&f.target, q, usize::MAX) {
            let fa = f.then(&a).values;
            for b in retractive_maps(&c.target, q, usize::MAX) {
                if c.then(&b).values != fa {
                    continue;
                }
                let factorizations = maps_p
                    .iter()
                    .filter(|u| po.from_left.then(u).values == a.values && po.from_right.then(u).values == b.values)
                    .count();
                report.check(factorizations == 1, "universal property", || {
                    format!("{factorizations} factorizations of ({:?}, {:?})", a.values, b.values)
                });
            }
        }
    }
    report
}

/// The canonical splitting of `Y ↪ Z ↠ Z/Y`: the cofiber is the
/// complement of the image, included back into `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub cofiber: RetractiveGSet,
    /// `Z → Y`, collapsing the complement to the base.
    pub retraction: RetractiveMap,
    /// `Z → Z/Y`, collapsing the image to the base.
    pub quotient: RetractiveMap,
    /// `Z/Y → Z`.
    pub section: RetractiveMap,
}

pub fn split_cofiber(c: &RetractiveMap) -> Result<Splitting> {
    if !c.is_cofibration() {
        return Err(Error::NotCofibration(format!("{:?} is not injective into the free part", c.values)));
    }
    let z = &c.target;
    let rest = complement(c);
    let cofiber = restrict_to(z, &rest);
    let mut retraction = vec![Point::Base(0); z.free_size()];
    let mut quotient = vec![Point::Base(0); z.free_size()];
    for (y, v) in c.values.iter().enumerate() {
        if let Point::Free(j) = *v {
            retraction[j] = Point::Free(y);
            quotient[j] = Point::Base(z.projection[j]);
        }
    }
    for (k, &j) in rest.iter().enumerate() {
        retraction[j] = Point::Base(z.projection[j]);
        quotient[j] = Point::Free(k);
    }
    Ok(Splitting {
        retraction: RetractiveMap { source: z.clone(), target: c.source.clone(), values: retraction },
        quotient: RetractiveMap { source: z.clone(), target: cofiber.clone(), values: quotient },
        section: RetractiveMap {
            source: cofiber.clone(),
            target: z.clone(),
            values: rest.iter().map(|&j| Point::Free(j)).collect(),
        },
        cofiber,
    })
}

fn is_zero(f: &RetractiveMap) -> bool {
    f.values.iter().all(|v| matches!(v, Point::Base(_)))
}

/// The splitting identities for one cofibration.
pub fn check_splitting(c: &RetractiveMap, sp: &Splitting) -> Report {
    let mut report = Report::new("splitting");
    for (name, m) in [("retraction", &sp.retraction), ("quotient", &sp.quotient), ("section", &sp.section)] {
        let failure = m.first_failure();
        report.check(failure.is_none(), "well defined", || format!("{name}: {failure:?}"));
    }
    report.check(c.then(&sp.retraction) == RetractiveMap::identity(&c.source), "retract", || format!("{:?}", c.values));
    report.check(sp.section.then(&sp.quotient) == RetractiveMap::identity(&sp.cofiber), "section", || {
        format!("{:?}", c.values)
    });
    report.check(is_zero(&c.then(&sp.quotient)), "cofiber sequence", || format!("{:?}", c.values));
    report.check(is_zero(&sp.section.then(&sp.retraction)), "complementary", || format!("{:?}", c.values));
    let mut hits = vec![0usize; c.target.free_size()];
    for v in c.values.iter().chain(&sp.section.values) {
        if let Point::Free(j) = *v {
            hits[j] += 1;
        }
    }
    report.check(hits.iter().all(|&h| h == 1), "decomposition", || format!("{:?}: {hits:?}", c.values));
    report
}

/// The splitting is natural along an isomorphism of cofiber sequences
/// `(α, β): c1 → c2`, where `c1 ; β = α ; c2`.
pub fn check_splitting_square(
    report: &mut Report,
    (c1, s1): (&RetractiveMap, &Splitting),
    (c2, s2): (&RetractiveMap, &Splitting),
    alpha: &RetractiveMap,
    beta: &RetractiveMap,
) {
    let witness = || format!("{:?} -> {:?} along {:?}, {:?}", c1.values, c2.values, alpha.values, beta.values);
    if !report.check(c1.then(beta).values == alpha.then(c2).values, "iso square", witness) {
        return;
    }
    let gamma = s1.section.then(beta).then(&s2.quotient);
    report.check(gamma.is_weak_equivalence(), "induced map on cofibers", witness);
    report.check(s1.retraction.then(alpha).values == beta.then(&s2.retraction).values, "retraction square", witness);
    report.check(s1.quotient.then(&gamma).values == beta.then(&s2.quotient).values, "quotient square", witness);
    report.check(s1.section.then(beta).values == gamma.then(&s2.section).values, "section square", witness);
}

/// Retractive H-sets over `base` with at most `max_free` free points, one
/// per isomorphism class. Orbit types `(L, x)` run over `L ≤ H` up to
/// H-conjugacy and `x ∈ X^L` up to `N_H(L)`.
pub fn retractive_sets_up_to(
    group: &FiniteGroup,
    h: &Subgroup,
    base: &GSet,
    max_free: usize,
) -> Result<Vec<RetractiveGSet>> {
    let mut types: Vec<RetractiveGSet> = Vec::new();
    let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
    for l in subgroups(group)?.into_iter().filter(|l| l.is_subgroup_of(h)) {
        let canon = h.elements().iter().map(|&k| group.conjugate_subgroup(k, &l)).min().expect("nonempty");
        if !seen.insert(canon.clone()) || h.order() / canon.order() > max_free {
            continue;
        }
        let normalizer: Vec<usize> =
            h.elements().iter().copied().filter(|&k| group.conjugate_subgroup(k, &canon) == canon).collect();
        for x in base.fixed_points(&canon) {
            if normalizer.iter().all(|&k| base.act(k, x) >= x) {
                types.push(RetractiveGSet::orbit_over(group, h, &canon, base, x)?);
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_multisets(&types, 0, max_free, &mut chosen, &mut out, h, base);
    Ok(out)
}

fn collect_multisets(
    types: &[RetractiveGSet],
    from: usize,
    budget: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<RetractiveGSet>,
    h: &Subgroup,
    base: &GSet,
) {
    let mut y = RetractiveGSet::empty(h, base);
    for (k, &t) in chosen.iter().enumerate() {
        let mut part = types[t].clone();
        for tag in &mut part.tags {
            tag.insert(0, k);
        }
        y = concat(&y, &part);
    }
    out.push(y);
    for t in from..types.len() {
        let size = types[t].free_size();
        if size <= budget {
            chosen.push(t);
            collect_multisets(types, t, budget - size, chosen, out, h, base);
            chosen.pop();
        }
    }
}

/// Disjoint union keeping tags as they are.
fn concat(a: &RetractiveGSet, b: &RetractiveGSet) -> RetractiveGSet {
    let mut y = a.sum(b).expect("same base");
    y.tags = a.tags.iter().chain(&b.tags).cloned().collect();
    y
}

/// Exhaustive splitting check: every cofibration between the listed
/// objects splits, and the splitting is natural along every isomorphism
/// of cofiber sequences out of it.
pub fn splitting_suite(objects: &[RetractiveGSet]) -> Report {
    let mut report = Report::new("functorial splitting");
    let autos: Vec<Vec<RetractiveMap>> = objects.iter().map(|y| retractive_isomorphisms(y, y, usize::MAX)).collect();
    for (iy, y) in objects.iter().enumerate() {
        for (iz, z) in objects.iter().enumerate() {
            if y.free_size() > z.free_size() {
                continue;
            }
            for c in retractive_maps(y, z, usize::MAX).into_iter().filter(RetractiveMap::is_cofibration) {
                let Ok(sp) = split_cofiber(&c) else {
                    report.fail("split", format!("{:?}", c.values));
                    continue;
                };
                report.merge(check_splitting(&c, &sp));
                for alpha in &autos[iy] {
                    let alpha_inv = alpha.inverse().expect("automorphism");
                    for beta in &autos[iz] {
                        let c2 = alpha_inv.then(&c).then(beta);
                        let sp2 = split_cofiber(&c2).expect("isomorphic to a cofibration");
                        check_splitting_square(&mut report, (&c, &sp), (&c2, &sp2), alpha, beta);
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gset::coset_gset;

    fn c2() -> FiniteGroup {
        FiniteGroup::cyclic(2)
    }

    #[test]
    fn orbit_types_over_a_point() {
        let g = c2();
        let all = retractive_sets_up_to(&g, &g.whole(), &GSet::point(&g), 3).unwrap();
        // multisets of {fixed point (size 1), free orbit (size 2)} of total size ≤ 3
        let mut sizes: Vec<usize> = all.iter().map(|y| y.free_size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![0, 1, 2, 2, 3, 3]);
        for y in &all {
            y.validate(&g).unwrap();
        }
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(retractive_isomorphisms(a, b, 1).is_empty());
            }
        }
    }

    #[test]
    fn map_enumeration_matches_brute_force() {
        let g = FiniteGroup::symmetric(3);
        let x = coset_gset(&g, &subgroups(&g).unwrap()[1]);
        let objs = retractive_sets_up_to(&g, &g.whole(), &x, 3).unwrap();
        for a in &objs {
            for b in &objs {
                let fast = retractive_maps(a, b, usize::MAX).len();
                let targets: Vec<Vec<Point>> = a
                    .projection
                    .iter()
                    .map(|&x| std::iter::once(Point::Base(x)).chain((0..b.free_size()).map(Point::Free)).collect())
                    .collect();
                let mut count = 0;
                let mut pick = vec![0; a.free_size()];
                'outer: loop {
                    let values: Vec<Point> = pick.iter().enumerate().map(|(s, &k)| targets[s][k]).collect();
                    if RetractiveMap::new(a.clone(), b.clone(), values).is_ok() {
                        count += 1;
                    }
                    for k in 0..pick.len() {
                        pick[k] += 1;
                        if pick[k] < targets[k].len() {
                            continue 'outer;
                        }
                        pick[k] = 0;
                    }
                    break;
                }
                assert_eq!(fast, count);
            }
        }
    }

    #[test]
    fn pushouts_along_cofibrations_are_universal() {
        let g = c2();
        let objs = retractive_sets_up_to(&g, &g.whole(), &GSet::regular(&g), 2).unwrap();
        for y in &objs {
            for z in &objs {
                for c in retractive_maps(y, z, usize::MAX).into_iter().filter(RetractiveMap::is_cofibration) {
                    for w in &objs {
                        for f in retractive_maps(y, w, usize::MAX) {
                            let po = pushout(&c, &f).unwrap();
                            let r = check_pushout(&c, &f, &po, &objs);
                            assert!(r.passed(), "{r}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_splittings() {
        let g = c2();
        let objs = retractive_sets_up_to(&g, &g.whole(), &GSet::point(&g), 3).unwrap();
        let z = objs.iter().find(|y| y.free_size() == 3).unwrap();
        let sp = split_cofiber(&RetractiveMap::identity(z)).unwrap();
        assert_eq!(sp.cofiber.free_size(), 0);
        let empty = &objs[0];
        let c = retractive_maps(empty, z, usize::MAX).pop().unwrap();
        let sp = split_cofiber(&c).unwrap();
        assert_eq!(sp.section.then(&sp.quotient), RetractiveMap::identity(&sp.cofiber));
        assert_eq!(sp.quotient.values, RetractiveMap::identity(z).values);
    }

    #[test]
    fn non_cofibrations_are_rejected() {
        let g = c2();
        let trivial = |n: usize| RetractiveGSet {
            subgroup: g.whole(),
            base: GSet::point(&g),
            tags: (0..n).map(|j| vec![j]).collect(),
            action: vec![(0..n).collect(); 2],
            projection: vec![0; n],
        };
        let (two_fixed, one_fixed) = (&trivial(2), &trivial(1));
        let fold = retractive_maps(two_fixed, one_fixed, usize::MAX)
            .into_iter()
            .find(|f| f.values == vec![Point::Free(0), Point::Free(0)])
            .unwrap();
        assert!(matches!(split_cofiber(&fold), Err(Error::NotCofibration(_))));
    }

    #[test]
    fn splitting_is_natural_for_c2() {
        let g = c2();
        for h in [g.trivial_subgroup(), g.whole()] {
            let objs = retractive_sets_up_to(&g, &h, &GSet::regular(&g), 4).unwrap();
            let r = splitting_suite(&objs);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn broken_splitting_is_caught() {
        let g = c2();
        let objs = retractive_sets_up_to(&g, &g.whole(), &GSet::point(&g), 2).unwrap();
        let fixed =
            |n: usize| objs.iter().find(|y| y.free_size() == n && y.orbit_representatives().len() == n).unwrap();
        let z = fixed(2);
        let c = retractive_maps(fixed(1), z, usize::MAX).into_iter().find(RetractiveMap::is_cofibration).unwrap();
        let mut sp = split_cofiber(&c).unwrap();
        sp.retraction.values.reverse();
        assert!(!check_splitting(&c, &sp).passed());
    }
}
