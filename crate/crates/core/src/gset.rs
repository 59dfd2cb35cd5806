//! Finite G-sets on `{0, …, n-1}` and their concrete limits and colimits.
//!
//! Points are 0-based here and on the wire. The concrete models of product,
//! coproduct and pullback below are the ones every strictness statement in
//! this crate refers to: products and pullbacks enumerate pairs in
//! lexicographic order, coproducts concatenate.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// A finite G-set: `action[g]` is the permutation by which `g` acts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GSet {
    size: usize,
    action: Vec<Vec<usize>>,
}

impl GSet {
    /// Checks that `action` is a homomorphism `G → Σ_size`.
    pub fn new(group: &FiniteGroup, size: usize, action: Vec<Vec<usize>>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::InvalidGSet(format!("expected {} permutations, got {}", group.order(), action.len())));
        }
        for (g, p) in action.iter().enumerate() {
            let mut seen = vec![false; size];
            if p.len() != size || p.iter().any(|&x| x >= size || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidGSet(format!("action of {g} is not a permutation")));
            }
        }
        let set = Self { size, action };
        set.check_homomorphism(group)?;
        Ok(set)
    }

    pub(crate) fn new_unchecked(size: usize, action: Vec<Vec<usize>>) -> Self {
        Self { size, action }
    }

    fn check_homomorphism(&self, group: &FiniteGroup) -> Result<()> {
        if self.action[group.identity()].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::InvalidGSet("identity does not act trivially".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                for x in 0..self.size {
                    if self.action[g][self.action[h][x]] != self.action[gh][x] {
                        return Err(Error::InvalidGSet(format!("g·(h·x) ≠ (gh)·x at g={g}, h={h}, x={x}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn empty(group: &FiniteGroup) -> Self {
        Self::trivial(group, 0)
    }

    pub fn point(group: &FiniteGroup) -> Self {
        Self::trivial(group, 1)
    }

    /// `n` points with trivial action.
    pub fn trivial(group: &FiniteGroup, n: usize) -> Self {
        Self { size: n, action: vec![(0..n).collect(); group.order()] }
    }

    /// `G` acting on itself by left multiplication.
    pub fn regular(group: &FiniteGroup) -> Self {
        let action = group.elements().map(|g| group.elements().map(|x| group.mul(g, x)).collect()).collect();
        Self { size: group.order(), action }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn is_fixed(&self, h: &Subgroup, x: usize) -> bool {
        h.elements().iter().all(|&g| self.act(g, x) == x)
    }

    /// `X^H`, ascending.
    pub fn fixed_points(&self, h: &Subgroup) -> Vec<usize> {
        (0..self.size).filter(|&x| self.is_fixed(h, x)).collect()
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let elems = (0..self.action.len()).filter(|&g| self.act(g, x) == x).collect();
        Subgroup::new_unchecked(elems)
    }

    /// Points whose stabilizer is exactly `H`.
    pub fn isotropy_stratum(&self, h: &Subgroup) -> Vec<usize> {
        (0..self.size).filter(|&x| &self.stabilizer(x) == h).collect()
    }

    /// Orbit containing `x`, ascending.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.action.iter().map(|p| p[x]).collect();
        set.into_iter().collect()
    }

    /// Orbits ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if !seen[x] {
                let o = self.orbit(x);
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.size > 0 && self.orbit(0).len() == self.size
    }

    /// Restriction of the action to the elements of `h`, listed in the
    /// order of `h.elements()`.
    pub fn restricted_action(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        h.elements().iter().map(|&g| self.action[g].clone()).collect()
    }

    /// Renumbers points: point `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut action = vec![vec![0; self.size]; self.action.len()];
        for (g, p) in self.action.iter().enumerate() {
            for x in 0..self.size {
                action[g][perm[x]] = perm[p[x]];
            }
        }
        Self { size: self.size, action }
    }
}

/// An equivariant map of G-sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GMap {
    source: GSet,
    target: GSet,
    values: Vec<usize>,
}

impl GMap {
    pub fn new(source: GSet, target: GSet, values: Vec<usize>) -> Result<Self> {
        if values.len() != source.size() || values.iter().any(|&y| y >= target.size()) {
            return Err(Error::Domain("map values out of range".into()));
        }
        if let Some((g, x)) = first_equivariance_failure(&source, &target, &values) {
            return Err(Error::Domain(format!("not equivariant at g={g}, x={x}")));
        }
        Ok(Self { source, target, values })
    }

    pub fn identity(x: &GSet) -> Self {
        Self { source: x.clone(), target: x.clone(), values: (0..x.size()).collect() }
    }

    pub fn to_point(group: &FiniteGroup, x: &GSet) -> Self {
        Self { source: x.clone(), target: GSet::point(group), values: vec![0; x.size()] }
    }

    pub fn source(&self) -> &GSet {
        &self.source
    }

    pub fn target(&self) -> &GSet {
        &self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GMap) -> Result<GMap> {
        if self.target != other.source {
            return Err(Error::Domain("maps are not composable".into()));
        }
        Ok(GMap {
            source: self.source.clone(),
            target: other.target.clone(),
            values: self.values.iter().map(|&y| other.values[y]).collect(),
        })
    }
}

/// First `(g, x)` with `f(g·x) ≠ g·f(x)`, if any.
pub fn first_equivariance_failure(source: &GSet, target: &GSet, values: &[usize]) -> Option<(usize, usize)> {
    for g in 0..source.action.len() {
        for x in 0..source.size() {
            if values[source.act(g, x)] != target.act(g, values[x]) {
                return Some((g, x));
            }
        }
    }
    None
}

/// The G-set of left cosets `G/H`, cosets numbered by least element,
/// with the quotient data needed to compute with `G ×_H (−)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CosetSpace {
    pub subgroup: Subgroup,
    pub gset: GSet,
    /// Least element of each coset; `representatives[0]` is the identity
    /// whenever the identity is element 0.
    pub representatives: Vec<usize>,
    /// `coset_of[g]` is the index of `gH`.
    pub coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn new(group: &FiniteGroup, h: &Subgroup) -> Self {
        let reps: BTreeSet<usize> = group.elements().map(|g| group.left_coset_rep(g, h)).collect();
        let representatives: Vec<usize> = reps.into_iter().collect();
        let coset_of: Vec<usize> = group
            .elements()
            .map(|g| representatives.binary_search(&group.left_coset_rep(g, h)).expect("rep"))
            .collect();
        let action =
            group.elements().map(|g| representatives.iter().map(|&r| coset_of[group.mul(g, r)]).collect()).collect();
        Self {
            subgroup: h.clone(),
            gset: GSet::new_unchecked(representatives.len(), action),
            representatives,
            coset_of,
        }
    }

    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    /// Coset containing the identity.
    pub fn base_coset(&self, group: &FiniteGroup) -> usize {
        self.coset_of[group.identity()]
    }

    /// The quotient map `G → G/H` out of the regular G-set.
    pub fn quotient_map(&self, group: &FiniteGroup) -> GMap {
        GMap { source: GSet::regular(group), target: self.gset.clone(), values: self.coset_of.clone() }
    }

    /// The element `k ∈ H` with `g = rep(gH) · k`.
    pub fn residue(&self, group: &FiniteGroup, g: usize) -> usize {
        let r = self.representatives[self.coset_of[g]];
        group.mul(group.inv(r), g)
    }
}

/// The orbit `G/H` as a G-set.
pub fn coset_gset(group: &FiniteGroup, h: &Subgroup) -> GSet {
    CosetSpace::new(group, h).gset
}

/// Lexicographically ordered product; pair `(a, b)` is point `a·|B| + b`.
pub fn product(a: &GSet, b: &GSet) -> GSet {
    let nb = b.size();
    let action = a
        .action
        .iter()
        .zip(&b.action)
        .map(|(pa, pb)| (0..a.size() * nb).map(|x| pa[x / nb] * nb + pb[x % nb]).collect())
        .collect();
    GSet { size: a.size() * nb, action }
}

/// Concatenation: `A` first, then `B` shifted by `|A|`.
pub fn coproduct(a: &GSet, b: &GSet) -> GSet {
    let na = a.size();
    let action = a
        .action
        .iter()
        .zip(&b.action)
        .map(|(pa, pb)| pa.iter().copied().chain(pb.iter().map(|&y| y + na)).collect())
        .collect();
    GSet { size: na + b.size(), action }
}

/// The pullback of `fa: A → Z` and `fb: B → Z`: the pairs `(a, b)` with
/// `fa(a) = fb(b)` in lexicographic order. Returns the G-set and the pairs.
pub fn lex_pullback_raw(a: &GSet, fa: &[usize], b: &GSet, fb: &[usize]) -> (GSet, Vec<(usize, usize)>) {
    let mut over: Vec<Vec<usize>> = Vec::new();
    for (y, &z) in fb.iter().enumerate() {
        if over.len() <= z {
            over.resize(z + 1, Vec::new());
        }
        over[z].push(y);
    }
    let mut pairs = Vec::new();
    for (x, &z) in fa.iter().enumerate() {
        if let Some(ys) = over.get(z) {
            pairs.extend(ys.iter().map(|&y| (x, y)));
        }
    }
    let lookup = |x: usize, y: usize| pairs.binary_search(&(x, y)).expect("pullback is G-stable");
    let action = a
        .action
        .iter()
        .zip(&b.action)
        .map(|(pa, pb)| pairs.iter().map(|&(x, y)| lookup(pa[x], pb[y])).collect())
        .collect();
    (GSet { size: pairs.len(), action }, pairs)
}

/// Pullback with its two projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pub apex: GSet,
    pub left: GMap,
    pub right: GMap,
}

pub fn lex_pullback(f: &GMap, g: &GMap) -> Result<Pullback> {
    if f.target() != g.target() {
        return Err(Error::Domain("pullback of maps with different targets".into()));
    }
    let (apex, pairs) = lex_pullback_raw(f.source(), f.values(), g.source(), g.values());
    let left = GMap { source: apex.clone(), target: f.source().clone(), values: pairs.iter().map(|p| p.0).collect() };
    let right = GMap { source: apex.clone(), target: g.source().clone(), values: pairs.iter().map(|p| p.1).collect() };
    Ok(Pullback { apex, left, right })
}

/// All equivariant maps `A → B`, by brute force over `B^|A|`.
/// Only for small inputs; used to cross-check fixed-point counts.
pub fn equivariant_maps_brute_force(a: &GSet, b: &GSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = a.size();
    if b.size() == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut values = vec![0; n];
    loop {
        if first_equivariance_failure(a, b, &values).is_none() {
            out.push(values.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            values[i] += 1;
            if values[i] < b.size() {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

/// The bijection `Hom_G(G/H, X) ≅ X^H`: the map sending `eH` to `x`.
pub fn orbit_map_from_fixed_point(group: &FiniteGroup, h: &Subgroup, x: &GSet, point: usize) -> Result<GMap> {
    if !x.is_fixed(h, point) {
        return Err(Error::Domain(format!("point {point} is not fixed by the subgroup")));
    }
    let cosets = CosetSpace::new(group, h);
    let values = cosets.representatives.iter().map(|&r| x.act(r, point)).collect();
    GMap::new(cosets.gset, x.clone(), values)
}

/// Equivariant bijections `A → B` that preserve the given labels.
///
/// `act_a` and `act_b` list the permutations of a common indexing of group
/// elements (for a subgroup action, pass the restricted actions). Each
/// orbit of `A` is assigned by choosing the image of its least point and
/// propagating; `limit` caps the number of results.
pub fn labelled_isomorphisms<L: PartialEq>(
    act_a: &[Vec<usize>],
    labels_a: &[L],
    act_b: &[Vec<usize>],
    labels_b: &[L],
    limit: usize,
) -> Vec<Vec<usize>> {
    let n = labels_a.len();
    let mut out = Vec::new();
    if n != labels_b.len() {
        return out;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    iso_search(act_a, labels_a, act_b, labels_b, &mut map, &mut used, 0, limit, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn iso_search<L: PartialEq>(
    act_a: &[Vec<usize>],
    labels_a: &[L],
    act_b: &[Vec<usize>],
    labels_b: &[L],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    from: usize,
    limit: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if out.len() >= limit {
        return;
    }
    let Some(x) = (from..map.len()).find(|&x| map[x] == usize::MAX) else {
        out.push(map.clone());
        return;
    };
    for y in 0..labels_b.len() {
        if used[y] || labels_a[x] != labels_b[y] {
            continue;
        }
        let mut assigned = Vec::new();
        let mut ok = true;
        for (pa, pb) in act_a.iter().zip(act_b) {
            let (gx, gy) = (pa[x], pb[y]);
            if map[gx] == usize::MAX {
                if used[gy] || labels_a[gx] != labels_b[gy] {
                    ok = false;
                    break;
                }
                map[gx] = gy;
                used[gy] = true;
                assigned.push(gx);
            } else if map[gx] != gy {
                ok = false;
                break;
            }
        }
        if ok {
            iso_search(act_a, labels_a, act_b, labels_b, map, used, x + 1, limit, out);
        }
        for gx in assigned {
            used[map[gx]] = false;
            map[gx] = usize::MAX;
        }
        if out.len() >= limit {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroups;

    #[test]
    fn coset_spaces() {
        let c2 = FiniteGroup::cyclic(2);
        let x = coset_gset(&c2, &c2.trivial_subgroup());
        assert_eq!(x.size(), 2);
        assert_eq!(x.act(1, 0), 1);
        let s3 = FiniteGroup::symmetric(3);
        let subs = subgroups(&s3).unwrap();
        assert_eq!(coset_gset(&s3, &subs[4]).size(), 2);
        let pt = coset_gset(&s3, &s3.whole());
        assert_eq!(pt, GSet::point(&s3));
        let q = CosetSpace::new(&s3, &subs[1]).quotient_map(&s3);
        assert_eq!(q.source().size(), 6);
    }

    #[test]
    fn fixed_points_and_strata() {
        let s3 = FiniteGroup::symmetric(3);
        let subs = subgroups(&s3).unwrap();
        let c2 = &subs[1];
        let x = coset_gset(&s3, c2);
        assert!(x.fixed_points(c2).contains(&0));
        assert_eq!(x.fixed_points(c2).len(), 1);
        assert!(x.isotropy_stratum(&s3.trivial_subgroup()).is_empty());
        let c2g = FiniteGroup::cyclic(2);
        let reg = GSet::regular(&c2g);
        assert!(reg.fixed_points(&c2g.whole()).is_empty());
        assert_eq!(reg.isotropy_stratum(&c2g.trivial_subgroup()), vec![0, 1]);
        assert_eq!(GSet::point(&s3).isotropy_stratum(&s3.whole()), vec![0]);
    }

    #[test]
    fn strata_partition_and_yoneda() {
        for g in [FiniteGroup::cyclic(4), FiniteGroup::symmetric(3), FiniteGroup::klein_four()] {
            let subs = subgroups(&g).unwrap();
            let mut x = GSet::empty(&g);
            for h in &subs {
                x = coproduct(&x, &coset_gset(&g, h));
            }
            let total: usize = subs.iter().map(|h| x.isotropy_stratum(h).len()).sum();
            assert_eq!(total, x.size());
            for h in &subs {
                let orbit = coset_gset(&g, h);
                assert_eq!(equivariant_maps_brute_force(&orbit, &x).len(), x.fixed_points(h).len());
                for p in x.fixed_points(h) {
                    let m = orbit_map_from_fixed_point(&g, h, &x, p).unwrap();
                    assert_eq!(m.apply(0), p);
                }
            }
        }
    }

    #[test]
    fn pullback_examples() {
        let c2 = FiniteGroup::cyclic(2);
        let reg = GSet::regular(&c2);
        let to_pt = GMap::to_point(&c2, &reg);
        assert_eq!(lex_pullback(&to_pt, &to_pt).unwrap().apex.size(), 4);

        let s3 = FiniteGroup::symmetric(3);
        let subs = subgroups(&s3).unwrap();
        let a = coset_gset(&s3, &subs[1]);
        let b = coset_gset(&s3, &subs[4]);
        let pb = lex_pullback(&GMap::to_point(&s3, &a), &GMap::to_point(&s3, &b)).unwrap();
        assert_eq!(pb.apex.size(), 6);
        assert!(pb.apex.is_transitive());
        assert!(pb.apex.stabilizer(0).order() == 1);

        let id = GMap::identity(&a);
        let pb = lex_pullback(&id, &id).unwrap();
        assert_eq!(pb.apex, a);

        assert!(lex_pullback(&id, &GMap::identity(&b)).is_err());
    }

    #[test]
    fn gset_validation() {
        let c2 = FiniteGroup::cyclic(2);
        assert!(GSet::new(&c2, 2, vec![vec![0, 1], vec![1, 0]]).is_ok());
        assert!(GSet::new(&c2, 2, vec![vec![1, 0], vec![1, 0]]).is_err());
        let c3 = FiniteGroup::cyclic(3);
        // a transposition cannot be the image of a generator of order 3
        assert!(GSet::new(&c3, 2, vec![vec![0, 1], vec![1, 0], vec![1, 0]]).is_err());
        let reg = GSet::regular(&c2);
        assert!(GMap::new(reg.clone(), reg.clone(), vec![0, 0]).is_err());
    }

    #[test]
    fn labelled_isos_count_automorphisms() {
        let s3 = FiniteGroup::symmetric(3);
        let reg = GSet::regular(&s3);
        let labels = vec![(); 6];
        // Aut of the regular G-set is G itself.
        assert_eq!(labelled_isomorphisms(reg.action(), &labels, reg.action(), &labels, usize::MAX).len(), 6);
        let triv = GSet::trivial(&s3, 3);
        assert_eq!(labelled_isomorphisms(triv.action(), &[0, 0, 1], triv.action(), &[1, 0, 0], usize::MAX).len(), 2);
    }
}
