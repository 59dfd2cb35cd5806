//! The homotopy fixed point model of retractive H-sets: G-equivariant
//! functors `𝓔G × G/H → R(X)`, the span action on them, base change and
//! the comparison with genuinely H-equivariant retractive sets.
//!
//! An object is stored by its values `T_c = F(e, c)` on one object per
//! G-orbit, `c ∈ G/H`, each with a projection `ρ_c: T_c → X`, together
//! with the transports `β(u, c): T_c → T_{u⁻¹c}` given by the morphism
//! `(e, c) → (u, c)` and the identification `F(u, c) = u · F(e, u⁻¹c)`.
//! Base points transport as `x ↦ u⁻¹x`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::gset::{CosetSpace, GMap, GSet};
use crate::retractive::{retractive_isomorphisms, Point, RetractiveGSet, RetractiveMap, Tag};
use crate::span::Span;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreePart {
    pub tags: Vec<Tag>,
    pub projection: Vec<usize>,
}

impl FreePart {
    pub fn size(&self) -> usize {
        self.projection.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HfpObject {
    pub cosets: CosetSpace,
    pub base: GSet,
    pub parts: Vec<FreePart>,
    /// `transport[u][c]` is `β(u, c)`.
    pub transport: Vec<Vec<Vec<usize>>>,
}

/// Chosen representative of a coset: the identity for `H` itself, the
/// least element otherwise.
pub fn coset_section(group: &FiniteGroup, cosets: &CosetSpace, c: usize) -> usize {
    if c == cosets.base_coset(group) {
        group.identity()
    } else {
        cosets.representatives[c]
    }
}

fn transport_point(group: &FiniteGroup, base: &GSet, beta: &[usize], u: usize, p: Point) -> Point {
    match p {
        Point::Base(x) => Point::Base(base.act(group.inv(u), x)),
        Point::Free(s) => Point::Free(beta[s]),
    }
}

impl HfpObject {
    pub fn subgroup(&self) -> &Subgroup {
        &self.cosets.subgroup
    }

    /// `u⁻¹ c`.
    pub fn shift(&self, group: &FiniteGroup, u: usize, c: usize) -> usize {
        self.cosets.gset.act(group.inv(u), c)
    }

    pub fn beta(&self, u: usize, c: usize) -> &[usize] {
        &self.transport[u][c]
    }

    /// Total number of free points over all cosets.
    pub fn total_size(&self) -> usize {
        self.parts.iter().map(FreePart::size).sum()
    }

    /// Functoriality along `𝓔G` and G-equivariance over `X`.
    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFunctor(m));
        let n = self.cosets.index();
        if self.parts.len() != n || self.transport.len() != group.order() {
            return bad("wrong number of parts or transports".into());
        }
        for part in &self.parts {
            if part.tags.len() != part.size() || part.projection.iter().any(|&x| x >= self.base.size()) {
                return bad("malformed free part".into());
            }
        }
        for u in group.elements() {
            if self.transport[u].len() != n {
                return bad(format!("transports of {u} do not cover G/H"));
            }
            for c in 0..n {
                let d = self.shift(group, u, c);
                let b = self.beta(u, c);
                let mut hit = vec![false; self.parts[d].size()];
                if b.len() != self.parts[c].size()
                    || hit.len() != b.len()
                    || b.iter().any(|&y| y >= hit.len() || std::mem::replace(&mut hit[y], true))
                {
                    return bad(format!("transport ({u}, {c}) is not a bijection"));
                }
                for (x, &y) in b.iter().enumerate() {
                    if self.base.act(u, self.parts[d].projection[y]) != self.parts[c].projection[x] {
                        return bad(format!("transport ({u}, {c}) is not over X at {x}"));
                    }
                }
            }
        }
        let e = group.identity();
        for c in 0..n {
            if self.beta(e, c).iter().enumerate().any(|(x, &y)| x != y) {
                return bad(format!("identity transport at {c} is not the identity"));
            }
        }
        for u in group.elements() {
            for w in group.elements() {
                let v = group.mul(group.inv(u), w);
                for c in 0..n {
                    let d = self.shift(group, u, c);
                    let (bw, bu, bv) = (self.beta(w, c), self.beta(u, c), self.beta(v, d));
                    if (0..bw.len()).any(|x| bw[x] != bv[bu[x]]) {
                        return bad(format!("transports do not compose at ({u}, {w}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Renumbers each part: point `x` of `T_c` becomes `perms[c][x]`.
    pub fn relabel(&self, group: &FiniteGroup, perms: &[Vec<usize>]) -> Self {
        let parts = self
            .parts
            .iter()
            .zip(perms)
            .map(|(part, p)| {
                let mut tags = vec![Vec::new(); part.size()];
                let mut projection = vec![0; part.size()];
                for x in 0..part.size() {
                    tags[p[x]] = part.tags[x].clone();
                    projection[p[x]] = part.projection[x];
                }
                FreePart { tags, projection }
            })
            .collect();
        let transport = group
            .elements()
            .map(|u| {
                (0..self.cosets.index())
                    .map(|c| {
                        let d = self.shift(group, u, c);
                        let b = self.beta(u, c);
                        let mut out = vec![0; b.len()];
                        for x in 0..b.len() {
                            out[perms[c][x]] = perms[d][b[x]];
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        Self { cosets: self.cosets.clone(), base: self.base.clone(), parts, transport }
    }

    /// Base change along `f: X → X′`; free parts keep their tags.
    pub fn pushforward_base(&self, f: &GMap) -> Result<Self> {
        if f.source() != &self.base {
            return Err(Error::Domain("base change from a different base".into()));
        }
        let parts = self
            .parts
            .iter()
            .map(|p| FreePart { tags: p.tags.clone(), projection: p.projection.iter().map(|&x| f.apply(x)).collect() })
            .collect();
        Ok(Self { base: f.target().clone(), parts, ..self.clone() })
    }
}

/// The value at `(e, H)` with `h` acting by the transport along
/// `(e, H) → (h⁻¹, H)`.
pub fn extract_h_action(group: &FiniteGroup, f: &HfpObject) -> Result<RetractiveGSet> {
    let c0 = f.cosets.base_coset(group);
    let h = f.subgroup();
    let part = &f.parts[c0];
    let action = h.elements().iter().map(|&k| f.beta(group.inv(k), c0).to_vec()).collect();
    RetractiveGSet::new(group, h.clone(), f.base.clone(), part.tags.clone(), action, part.projection.clone())
        .map_err(|e| Error::InvalidFunctor(format!("extracted action: {e}")))
}

/// The canonical equivariant functor of an H-set: `T_c = S` with
/// projection `γ_c ρ`, and `β(u, c)` acting by `h(u, c)⁻¹` where
/// `h(u, c) = γ_c⁻¹ u γ_{u⁻¹c} ∈ H`.
pub fn embed_h_object(group: &FiniteGroup, y: &RetractiveGSet) -> HfpObject {
    let cosets = CosetSpace::new(group, &y.subgroup);
    let n = cosets.index();
    let gamma: Vec<usize> = (0..n).map(|c| coset_section(group, &cosets, c)).collect();
    let parts = gamma
        .iter()
        .map(|&g| FreePart {
            tags: y.tags.clone(),
            projection: y.projection.iter().map(|&x| y.base.act(g, x)).collect(),
        })
        .collect();
    let transport = group
        .elements()
        .map(|u| {
            (0..n)
                .map(|c| {
                    let d = cosets.gset.act(group.inv(u), c);
                    let h = group.mul(group.mul(group.inv(gamma[c]), u), gamma[d]);
                    let hinv = group.inv(h);
                    (0..y.free_size()).map(|s| y.act(hinv, s)).collect()
                })
                .collect()
        })
        .collect();
    HfpObject { cosets, base: y.base.clone(), parts, transport }
}

/// A natural transformation, given on each `T_c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HfpMap {
    pub source: HfpObject,
    pub target: HfpObject,
    pub components: Vec<Vec<Point>>,
}

impl HfpMap {
    pub fn identity(f: &HfpObject) -> Self {
        Self {
            source: f.clone(),
            target: f.clone(),
            components: f.parts.iter().map(|p| (0..p.size()).map(Point::Free).collect()).collect(),
        }
    }

    pub fn first_failure(&self, group: &FiniteGroup) -> Option<String> {
        let (a, b) = (&self.source, &self.target);
        if a.cosets != b.cosets || a.base != b.base || self.components.len() != a.parts.len() {
            return Some("ends do not match".into());
        }
        for (c, comp) in self.components.iter().enumerate() {
            if comp.len() != a.parts[c].size() {
                return Some(format!("component {c} has the wrong size"));
            }
            for (x, &v) in comp.iter().enumerate() {
                let over = match v {
                    Point::Base(y) => y,
                    Point::Free(j) if j < b.parts[c].size() => b.parts[c].projection[j],
                    Point::Free(_) => return Some(format!("component {c} leaves the target at {x}")),
                };
                if over != a.parts[c].projection[x] {
                    return Some(format!("component {c} is not over X at {x}"));
                }
            }
        }
        for u in group.elements() {
            for c in 0..a.parts.len() {
                let d = a.shift(group, u, c);
                for (x, &v) in self.components[c].iter().enumerate() {
                    let lhs = self.components[d][a.beta(u, c)[x]];
                    let rhs = transport_point(group, &b.base, b.beta(u, c), u, v);
                    if lhs != rhs {
                        return Some(format!("not natural along ({u}, {c}) at {x}"));
                    }
                }
            }
        }
        None
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().zip(&self.target.parts).all(|(comp, part)| {
            let mut hit = vec![false; part.size()];
            comp.len() == part.size()
                && comp.iter().all(|v| matches!(*v, Point::Free(j) if !std::mem::replace(&mut hit[j], true)))
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Self) -> Self {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(f, g)| f.iter().map(|&v| if let Point::Free(j) = v { g[j] } else { v }).collect())
            .collect();
        Self { source: self.source.clone(), target: other.target.clone(), components }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_isomorphism() {
            return None;
        }
        let components = self
            .components
            .iter()
            .map(|comp| {
                let mut inv = vec![Point::Base(0); comp.len()];
                for (x, v) in comp.iter().enumerate() {
                    if let Point::Free(j) = *v {
                        inv[j] = Point::Free(x);
                    }
                }
                inv
            })
            .collect();
        Some(Self { source: self.target.clone(), target: self.source.clone(), components })
    }

    /// Component at `(e, H)` as a map of H-sets.
    pub fn extract(&self, group: &FiniteGroup) -> Result<RetractiveMap> {
        let c0 = self.source.cosets.base_coset(group);
        RetractiveMap::new(
            extract_h_action(group, &self.source)?,
            extract_h_action(group, &self.target)?,
            self.components[c0].clone(),
        )
    }
}

/// The transformation determined by its component at `(e, H)`:
/// `φ_c = β′(γ_c, c)⁻¹ ∘ φ_H ∘ β(γ_c, c)`.
pub fn extend_from_base(group: &FiniteGroup, a: &HfpObject, b: &HfpObject, phi0: &[Point]) -> HfpMap {
    let c0 = a.cosets.base_coset(group);
    let components = (0..a.parts.len())
        .map(|c| {
            let g = coset_section(group, &a.cosets, c);
            let ba = a.beta(g, c);
            let bb = b.beta(g, c);
            let mut bb_inv = vec![0; bb.len()];
            for (y, &z) in bb.iter().enumerate() {
                bb_inv[z] = y;
            }
            debug_assert_eq!(a.shift(group, g, c), c0);
            (0..a.parts[c].size())
                .map(|x| match phi0[ba[x]] {
                    Point::Base(y) => Point::Base(a.base.act(g, y)),
                    Point::Free(j) => Point::Free(bb_inv[j]),
                })
                .collect()
        })
        .collect();
    HfpMap { source: a.clone(), target: b.clone(), components }
}

pub fn embed_map(group: &FiniteGroup, f: &RetractiveMap) -> HfpMap {
    let a = embed_h_object(group, &f.source);
    let b = embed_h_object(group, &f.target);
    extend_from_base(group, &a, &b, &f.values)
}

/// The isomorphism `embed(extract(F)) → F`, identity at `(e, H)`.
pub fn embed_extract_iso(group: &FiniteGroup, f: &HfpObject) -> Result<HfpMap> {
    let e = embed_h_object(group, &extract_h_action(group, f)?);
    let c0 = f.cosets.base_coset(group);
    let id: Vec<Point> = (0..f.parts[c0].size()).map(Point::Free).collect();
    Ok(extend_from_base(group, &e, f, &id))
}

/// Isomorphisms `a → b`, at most `limit`, found on `(e, H)` and extended.
pub fn hfp_isomorphisms(group: &FiniteGroup, a: &HfpObject, b: &HfpObject, limit: usize) -> Result<Vec<HfpMap>> {
    if a.cosets != b.cosets || a.base != b.base {
        return Ok(Vec::new());
    }
    let (ya, yb) = (extract_h_action(group, a)?, extract_h_action(group, b)?);
    Ok(retractive_isomorphisms(&ya, &yb, limit).into_iter().map(|m| extend_from_base(group, a, b, &m.values)).collect())
}

/// `S* F = p_! q^* F` for `S: G/H ←p P →q G/K` and `F` over `K`:
/// `T′_c = ⨿_{i ∈ p⁻¹(c)} T_{q(i)}` in order of `(i, x)`, and
/// `β′(u, c)(i, x) = (u⁻¹i, β(u, q(i)) x)`. The formal unit acts as the
/// identity.
pub fn act_span(group: &FiniteGroup, h: &Subgroup, s: &Span, f: &HfpObject) -> Result<HfpObject> {
    let cosets = CosetSpace::new(group, h);
    if s.source() != &cosets.gset || s.target() != &f.cosets.gset {
        return Err(Error::Domain("span does not run from G/H to the orbit of the functor".into()));
    }
    if s.is_unit() {
        return Ok(f.clone());
    }
    let d = s.data();
    let n = cosets.index();
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut offset = vec![0usize; d.apex.size()];
    for i in 0..d.apex.size() {
        let c = d.left[i];
        offset[i] = fibers[c].iter().map(|&j| f.parts[d.right[j]].size()).sum();
        fibers[c].push(i);
    }
    let parts = fibers
        .iter()
        .map(|fib| {
            let mut tags = Vec::new();
            let mut projection = Vec::new();
            for &i in fib {
                let part = &f.parts[d.right[i]];
                tags.extend(part.tags.iter().map(|t| std::iter::once(i).chain(t.iter().copied()).collect::<Tag>()));
                projection.extend(&part.projection);
            }
            FreePart { tags, projection }
        })
        .collect();
    let transport = group
        .elements()
        .map(|u| {
            let uinv = group.inv(u);
            fibers
                .iter()
                .map(|fib| {
                    let mut out = Vec::new();
                    for &i in fib {
                        let j = d.apex.act(uinv, i);
                        out.extend(f.beta(u, d.right[i]).iter().map(|&y| offset[j] + y));
                    }
                    out
                })
                .collect()
        })
        .collect();
    Ok(HfpObject { cosets, base: f.base.clone(), parts, transport })
}

/// Position of the summand of apex point `i` inside `T′_{p(i)}` of `S* F`.
pub(crate) fn summand_offsets(s: &Span, f: &HfpObject) -> Vec<usize> {
    let d = s.data();
    let mut filled = vec![0usize; d.source.size()];
    d.left
        .iter()
        .zip(&d.right)
        .map(|(&c, &k)| {
            let o = filled[c];
            filled[c] += f.parts[k].size();
            o
        })
        .collect()
}

/// `S* φ`: `(i, x) ↦ (i, φ_{q(i)} x)`.
pub fn act_span_on_map(group: &FiniteGroup, h: &Subgroup, s: &Span, phi: &HfpMap) -> Result<HfpMap> {
    let source = act_span(group, h, s, &phi.source)?;
    let target = act_span(group, h, s, &phi.target)?;
    let d = s.data();
    let (oa, ob) = (summand_offsets(s, &phi.source), summand_offsets(s, &phi.target));
    let mut components: Vec<Vec<Point>> = source.parts.iter().map(|p| Vec::with_capacity(p.size())).collect();
    for i in 0..d.apex.size() {
        let c = d.left[i];
        debug_assert_eq!(components[c].len(), oa[i]);
        components[c].extend(phi.components[d.right[i]].iter().map(|&v| match v {
            Point::Free(j) => Point::Free(ob[i] + j),
            base => base,
        }));
    }
    Ok(HfpMap { source, target, components })
}

/// `σ* F` for a span isomorphism `σ: S → S′`: `(i, x) ↦ (σ i, x)`.
pub fn act_span_iso(group: &FiniteGroup, h: &Subgroup, sigma: &crate::span::SpanIso, f: &HfpObject) -> Result<HfpMap> {
    let source = act_span(group, h, &sigma.source, f)?;
    let target = act_span(group, h, &sigma.target, f)?;
    let d = sigma.source.data();
    let (oa, ob) = (summand_offsets(&sigma.source, f), summand_offsets(&sigma.target, f));
    let mut components: Vec<Vec<Point>> = source.parts.iter().map(|p| vec![Point::Base(0); p.size()]).collect();
    for i in 0..d.apex.size() {
        let j = sigma.map[i];
        for x in 0..f.parts[d.right[i]].size() {
            components[d.left[i]][oa[i] + x] = Point::Free(ob[j] + x);
        }
    }
    Ok(HfpMap { source, target, components })
}

/// Fibrewise disjoint union: `T_c` of `a` followed by `T_c` of `b`.
pub fn hfp_sum(group: &FiniteGroup, a: &HfpObject, b: &HfpObject) -> Result<HfpObject> {
    if a.cosets != b.cosets || a.base != b.base {
        return Err(Error::Domain("summands over different orbits or bases".into()));
    }
    let prefixed = |p: usize, t: &Tag| std::iter::once(p).chain(t.iter().copied()).collect::<Tag>();
    let parts = a
        .parts
        .iter()
        .zip(&b.parts)
        .map(|(pa, pb)| FreePart {
            tags: pa.tags.iter().map(|t| prefixed(0, t)).chain(pb.tags.iter().map(|t| prefixed(1, t))).collect(),
            projection: pa.projection.iter().chain(&pb.projection).copied().collect(),
        })
        .collect();
    let transport = group
        .elements()
        .map(|u| {
            (0..a.parts.len())
                .map(|c| {
                    let n = a.parts[a.shift(group, u, c)].size();
                    a.beta(u, c).iter().copied().chain(b.beta(u, c).iter().map(|&y| y + n)).collect()
                })
                .collect()
        })
        .collect();
    Ok(HfpObject { cosets: a.cosets.clone(), base: a.base.clone(), parts, transport })
}

/// `(S ∘ T)* F ≅ S*(T* F)` for `S: G/H → G/L`, `T: G/L → G/K`. Both
/// sides list the summands of `T_c` in the order of `(i, j, x)`, so the
/// comparison is the identity on points; only the tags differ.
pub fn beck_chevalley(
    group: &FiniteGroup,
    h: &Subgroup,
    s: &Span,
    l: &Subgroup,
    t: &Span,
    f: &HfpObject,
) -> Result<HfpMap> {
    let whole = act_span(group, h, &s.compose(t)?, f)?;
    let nested = act_span(group, h, s, &act_span(group, l, t, f)?)?;
    let components = whole.parts.iter().map(|p| (0..p.size()).map(Point::Free).collect()).collect();
    Ok(HfpMap { source: whole, target: nested, components })
}

/// The three-step action of an orbit span `G/H ←p G/L →q G/K` on a
/// K-set `Y`, with `p(e₀) = aH`, `q(e₀) = bK` and `L` the stabilizer of
/// `e₀`: restrict along `L → K, l ↦ b⁻¹lb`, conjugate to `a⁻¹La ≤ H`,
/// and induce up to `H`.
pub fn geometric_action(group: &FiniteGroup, h: &Subgroup, s: &Span, y: &RetractiveGSet) -> Result<RetractiveGSet> {
    let hc = CosetSpace::new(group, h);
    let kc = CosetSpace::new(group, &y.subgroup);
    if s.source() != &hc.gset || s.target() != &kc.gset {
        return Err(Error::Domain("span does not run from G/H to G/K".into()));
    }
    if s.is_unit() {
        return Ok(y.clone());
    }
    let d = s.data();
    if !d.apex.is_transitive() {
        return Err(Error::NotAnOrbit);
    }
    let l = d.apex.stabilizer(0);
    let a = hc.representatives[d.left[0]];
    let b = kc.representatives[d.right[0]];
    let (ainv, binv) = (group.inv(a), group.inv(b));
    let la = group.conjugate_subgroup(ainv, &l);
    // m ∈ a⁻¹La acts on Y through a m a⁻¹ ∈ L and then b⁻¹(−)b ∈ K
    let inner = |m: usize, s: usize| y.act(group.conjugate(binv, group.conjugate(a, m)), s);
    let reps: Vec<usize> = h
        .elements()
        .iter()
        .map(|&k| group.left_coset_rep(k, &la))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let ny = y.free_size();
    let shift = |x: usize| y.base.act(ainv, y.base.act(b, x));
    let mut tags = Vec::new();
    let mut projection = Vec::new();
    for (ri, &r) in reps.iter().enumerate() {
        for sidx in 0..ny {
            tags.push(std::iter::once(ri).chain(y.tags[sidx].iter().copied()).collect());
            projection.push(y.base.act(r, shift(y.projection[sidx])));
        }
    }
    let action = h
        .elements()
        .iter()
        .map(|&k| {
            let mut perm = Vec::with_capacity(reps.len() * ny);
            for &r in &reps {
                let kr = group.mul(k, r);
                let r2 = group.left_coset_rep(kr, &la);
                let m = group.mul(group.inv(r2), kr);
                let ri2 = reps.binary_search(&r2).expect("coset");
                perm.extend((0..ny).map(|sidx| ri2 * ny + inner(m, sidx)));
            }
            perm
        })
        .collect();
    RetractiveGSet::new(group, h.clone(), y.base.clone(), tags, action, projection)
}

/// An explicit isomorphism from the geometric action to the action
/// through the homotopy fixed point model.
pub fn compare_geometric(group: &FiniteGroup, h: &Subgroup, s: &Span, y: &RetractiveGSet) -> Result<RetractiveMap> {
    let direct = geometric_action(group, h, s, y)?;
    let modelled = extract_h_action(group, &act_span(group, h, s, &embed_h_object(group, y))?)?;
    retractive_isomorphisms(&direct, &modelled, 1)
        .pop()
        .ok_or_else(|| Error::Validation("geometric action differs from the span action".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroups;
    use crate::gset::coset_gset;
    use crate::retractive::{retractive_maps, retractive_sets_up_to};

    #[test]
    fn embed_extract_round_trip_c2() {
        let g = FiniteGroup::cyclic(2);
        for h in subgroups(&g).unwrap() {
            let x = coset_gset(&g, &h);
            for y in retractive_sets_up_to(&g, &h, &x, 3).unwrap() {
                let f = embed_h_object(&g, &y);
                f.validate(&g).unwrap();
                assert_eq!(extract_h_action(&g, &f).unwrap(), y);
                let iso = embed_extract_iso(&g, &f).unwrap();
                assert_eq!(iso.first_failure(&g), None);
            }
        }
    }

    #[test]
    fn embedded_maps_round_trip_s3() {
        let g = FiniteGroup::symmetric(3);
        let subs = subgroups(&g).unwrap();
        let h = &subs[1];
        let x = coset_gset(&g, &subs[1]);
        let objs = retractive_sets_up_to(&g, h, &x, 2).unwrap();
        for a in &objs {
            for b in &objs {
                for m in retractive_maps(a, b, usize::MAX) {
                    let em = embed_map(&g, &m);
                    assert_eq!(em.first_failure(&g), None);
                    assert_eq!(em.extract(&g).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn swap_transport_is_a_free_action() {
        let g = FiniteGroup::cyclic(2);
        let h = g.whole();
        let cosets = CosetSpace::new(&g, &h);
        let f = HfpObject {
            cosets,
            base: GSet::point(&g),
            parts: vec![FreePart { tags: vec![vec![0], vec![1]], projection: vec![0, 0] }],
            transport: vec![vec![vec![0, 1]], vec![vec![1, 0]]],
        };
        f.validate(&g).unwrap();
        let y = extract_h_action(&g, &f).unwrap();
        assert_eq!(y.action, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn broken_transport_is_rejected() {
        let g = FiniteGroup::cyclic(3);
        let y = RetractiveGSet::orbit_over(&g, &g.whole(), &g.trivial_subgroup(), &GSet::point(&g), 0).unwrap();
        let mut f = embed_h_object(&g, &y);
        f.transport[1][0] = vec![0, 2, 1];
        assert!(matches!(f.validate(&g), Err(Error::InvalidFunctor(_))));
        assert!(extract_h_action(&g, &f).is_err());
    }

    #[test]
    fn unit_acts_trivially_and_induction_doubles() {
        let g = FiniteGroup::cyclic(2);
        let (e, whole) = (g.trivial_subgroup(), g.whole());
        let (ge, gg) = (coset_gset(&g, &e), coset_gset(&g, &whole));
        let y = RetractiveGSet::orbit_over(&g, &e, &e, &GSet::point(&g), 0).unwrap();
        let f = embed_h_object(&g, &y);
        assert_eq!(act_span(&g, &e, &Span::unit(&ge), &f).unwrap(), f);
        let quotient = GMap::new(ge.clone(), gg.clone(), vec![0, 0]).unwrap();
        let induction = Span::from_maps(&quotient, &GMap::identity(&ge)).unwrap();
        let out = act_span(&g, &whole, &induction, &f).unwrap();
        out.validate(&g).unwrap();
        let z = extract_h_action(&g, &out).unwrap();
        assert_eq!(z.free_size(), 2);
        assert_eq!(z.action[1], vec![1, 0]);
        let direct = geometric_action(&g, &whole, &induction, &y).unwrap();
        assert_eq!(direct.action[1], vec![1, 0]);
    }

    #[test]
    fn geometric_action_agrees_on_s3_orbit_spans() {
        let g = FiniteGroup::symmetric(3);
        let subs = subgroups(&g).unwrap();
        let x = coset_gset(&g, &subs[1]);
        for h in &subs {
            for k in &subs {
                let (gh, gk) = (coset_gset(&g, h), coset_gset(&g, k));
                let spans = crate::burnside::spans_up_to_iso(&g, &gh, &gk, 6).unwrap();
                for s in spans.iter().filter(|s| s.apex_size() > 0 && s.data().apex.is_transitive()) {
                    for y in retractive_sets_up_to(&g, k, &x, 2).unwrap() {
                        let iso = compare_geometric(&g, h, s, &y).unwrap();
                        assert!(iso.is_weak_equivalence());
                    }
                }
            }
        }
    }

    #[test]
    fn non_orbit_apex_is_refused() {
        let g = FiniteGroup::cyclic(2);
        let e = g.trivial_subgroup();
        let ge = coset_gset(&g, &e);
        let s = Span::identity(&ge).sum(&Span::identity(&ge)).unwrap();
        let y = RetractiveGSet::empty(&e, &GSet::point(&g));
        assert!(matches!(geometric_action(&g, &e, &s, &y), Err(Error::NotAnOrbit)));
    }

    #[test]
    fn beck_chevalley_is_a_natural_isomorphism() {
        let g = FiniteGroup::cyclic(2);
        let e = g.trivial_subgroup();
        let ge = coset_gset(&g, &e);
        let spans = crate::burnside::spans_up_to_iso(&g, &ge, &ge, 4).unwrap();
        let y = RetractiveGSet::orbit_over(&g, &e, &e, &GSet::point(&g), 0).unwrap();
        let f = embed_h_object(&g, &y);
        for s in &spans {
            for t in &spans {
                let bc = beck_chevalley(&g, &e, s, &e, t, &f).unwrap();
                assert_eq!(bc.first_failure(&g), None);
                assert!(bc.is_isomorphism());
            }
        }
    }

    #[test]
    fn base_change_is_strictly_functorial() {
        let g = FiniteGroup::symmetric(3);
        let subs = subgroups(&g).unwrap();
        let x = GSet::regular(&g);
        let x1 = coset_gset(&g, &subs[1]);
        let f = CosetSpace::new(&g, &subs[1]).quotient_map(&g);
        let p = GMap::to_point(&g, &x1);
        let fp = f.then(&p).unwrap();
        for y in retractive_sets_up_to(&g, &subs[1], &x, 2).unwrap() {
            let obj = embed_h_object(&g, &y);
            let once = obj.pushforward_base(&fp).unwrap();
            let twice = obj.pushforward_base(&f).unwrap().pushforward_base(&p).unwrap();
            assert_eq!(once, twice);
            once.validate(&g).unwrap();
            assert_eq!(obj.pushforward_base(&GMap::identity(&x)).unwrap(), obj);
        }
    }
}
