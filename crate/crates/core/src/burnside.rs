//! Isomorphism classes of spans, Burnside bases, composition tensors,
//! the table of marks and the orbit-level tom Dieck bijection.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{canonical_conjugate, class_representatives, subgroups, weyl_group, FiniteGroup, Subgroup};
use crate::gset::{coset_gset, CosetSpace, GSet};
use crate::span::Span;

/// Label of a transitive span `A ← G/J → B`: the least pair of `A × B` in
/// the orbit of the image, and the isotropy of a point over that pair,
/// canonicalized under conjugation by the pair's stabilizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub pair: (usize, usize),
    pub isotropy: Subgroup,
}

/// Isomorphism class of a span as a multiset of orbit labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpanClass {
    pub counts: Vec<(OrbitLabel, usize)>,
}

impl SpanClass {
    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn multiplicity(&self, label: &OrbitLabel) -> usize {
        self.counts.iter().find(|(l, _)| l == label).map_or(0, |&(_, n)| n)
    }

    /// Coordinates against `basis`; fails if a label is missing from it.
    pub fn coordinates(&self, basis: &[OrbitLabel]) -> Result<Vec<i64>> {
        let mut v = vec![0i64; basis.len()];
        for (label, n) in &self.counts {
            let i = basis.binary_search(label).map_err(|_| Error::Domain(format!("label {label:?} not in basis")))?;
            v[i] = *n as i64;
        }
        Ok(v)
    }
}

fn pair_stabilizer(group: &FiniteGroup, a: &GSet, b: &GSet, p: (usize, usize)) -> Subgroup {
    let elems = group.elements().filter(|&g| a.act(g, p.0) == p.0 && b.act(g, p.1) == p.1).collect();
    Subgroup::new_unchecked(elems)
}

fn least_pair(group: &FiniteGroup, a: &GSet, b: &GSet, p: (usize, usize)) -> (usize, usize) {
    group.elements().map(|g| (a.act(g, p.0), b.act(g, p.1))).min().expect("groups are nonempty")
}

pub fn canonical_class(group: &FiniteGroup, span: &Span) -> SpanClass {
    let d = span.data();
    let mut counts: BTreeMap<OrbitLabel, usize> = BTreeMap::new();
    for orbit in d.apex.orbits() {
        let x0 = orbit[0];
        let p = least_pair(group, &d.source, &d.target, (d.left[x0], d.right[x0]));
        let x = *orbit.iter().find(|&&x| (d.left[x], d.right[x]) == p).expect("orbit covers its image");
        let stab_p = pair_stabilizer(group, &d.source, &d.target, p);
        let isotropy = canonical_conjugate(group, &d.apex.stabilizer(x), &stab_p);
        *counts.entry(OrbitLabel { pair: p, isotropy }).or_default() += 1;
    }
    SpanClass { counts: counts.into_iter().collect() }
}

/// All orbit labels for spans `A → B`, ascending.
pub fn burnside_basis(group: &FiniteGroup, a: &GSet, b: &GSet) -> Result<Vec<OrbitLabel>> {
    let subs = subgroups(group)?;
    let mut pairs = BTreeSet::new();
    for x in 0..a.size() {
        for y in 0..b.size() {
            pairs.insert(least_pair(group, a, b, (x, y)));
        }
    }
    let mut out = Vec::new();
    for p in pairs {
        let stab = pair_stabilizer(group, a, b, p);
        let classes: BTreeSet<Subgroup> =
            subs.iter().filter(|j| j.is_subgroup_of(&stab)).map(|j| canonical_conjugate(group, j, &stab)).collect();
        out.extend(classes.into_iter().map(|isotropy| OrbitLabel { pair: p, isotropy }));
    }
    Ok(out)
}

/// The transitive span `A ← G/J → B` sending `eJ` to `label.pair`.
pub fn basis_span(group: &FiniteGroup, a: &GSet, b: &GSet, label: &OrbitLabel) -> Span {
    let cosets = CosetSpace::new(group, &label.isotropy);
    let (x, y) = label.pair;
    let left = cosets.representatives.iter().map(|&r| a.act(r, x)).collect();
    let right = cosets.representatives.iter().map(|&r| b.act(r, y)).collect();
    Span::from_parts_unchecked(a.clone(), b.clone(), cosets.gset, left, right)
}

/// The span with the given multiplicities of basis orbits, orbits laid
/// out in basis order.
pub fn span_from_coordinates(group: &FiniteGroup, a: &GSet, b: &GSet, basis: &[OrbitLabel], coords: &[usize]) -> Span {
    let mut s = Span::empty(a, b);
    for (label, &n) in basis.iter().zip(coords) {
        let orbit = basis_span(group, a, b, label);
        for _ in 0..n {
            s = s.sum(&orbit).expect("same ends");
        }
    }
    s
}

/// One representative of every isomorphism class of spans `A → B` with
/// apex size at most `max_apex`, the empty span first.
pub fn spans_up_to_iso(group: &FiniteGroup, a: &GSet, b: &GSet, max_apex: usize) -> Result<Vec<Span>> {
    let basis = burnside_basis(group, a, b)?;
    let sizes: Vec<usize> = basis.iter().map(|l| group.order() / l.isotropy.order()).collect();
    let mut out = Vec::new();
    let mut coords = vec![0usize; basis.len()];
    enumerate_coords(&sizes, max_apex, 0, &mut coords, &mut |c| {
        out.push(span_from_coordinates(group, a, b, &basis, c));
    });
    Ok(out)
}

fn enumerate_coords(sizes: &[usize], budget: usize, i: usize, coords: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if i == sizes.len() {
        f(coords);
        return;
    }
    let mut n = 0;
    loop {
        coords[i] = n;
        enumerate_coords(sizes, budget - n * sizes[i], i + 1, coords, f);
        n += 1;
        if n * sizes[i] > budget {
            break;
        }
    }
    coords[i] = 0;
}

/// Composition in the Burnside category on basis orbits:
/// `tensor[i][j][k]` is the multiplicity of `basis_ac[k]` in
/// `basis_ab[i]` followed by `basis_bc[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionTensor {
    pub basis_ab: Vec<OrbitLabel>,
    pub basis_bc: Vec<OrbitLabel>,
    pub basis_ac: Vec<OrbitLabel>,
    pub tensor: Vec<Vec<Vec<i64>>>,
}

impl CompositionTensor {
    /// Bilinear extension to integer vectors.
    pub fn apply(&self, u: &[i64], v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.basis_ac.len()];
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                for (k, &t) in self.tensor[i][j].iter().enumerate() {
                    out[k] += ui * vj * t;
                }
            }
        }
        out
    }
}

pub fn k0_composition(group: &FiniteGroup, a: &GSet, b: &GSet, c: &GSet) -> Result<CompositionTensor> {
    let basis_ab = burnside_basis(group, a, b)?;
    let basis_bc = burnside_basis(group, b, c)?;
    let basis_ac = burnside_basis(group, a, c)?;
    let spans_bc: Vec<Span> = basis_bc.iter().map(|l| basis_span(group, b, c, l)).collect();
    let mut tensor = Vec::with_capacity(basis_ab.len());
    for l in &basis_ab {
        let s = basis_span(group, a, b, l);
        let row = spans_bc
            .iter()
            .map(|t| canonical_class(group, &s.compose(t)?).coordinates(&basis_ac))
            .collect::<Result<Vec<_>>>()?;
        tensor.push(row);
    }
    Ok(CompositionTensor { basis_ab, basis_bc, basis_ac, tensor })
}

/// Coordinates of the unit class on `G/H` in `burnside_basis(G/H, G/H)`.
pub fn unit_coordinates(group: &FiniteGroup, a: &GSet) -> Result<Vec<i64>> {
    canonical_class(group, &Span::unit(a)).coordinates(&burnside_basis(group, a, a)?)
}

/// Bases and composition tensors over all subgroup-class representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MackeyTable {
    pub classes: Vec<Subgroup>,
    /// `tensors[h][k][l]` for orbits `G/H_h`, `G/H_k`, `G/H_l`.
    pub tensors: Vec<Vec<Vec<CompositionTensor>>>,
}

impl MackeyTable {
    pub fn new(group: &FiniteGroup) -> Result<Self> {
        let classes = class_representatives(group)?;
        let orbits: Vec<GSet> = classes.iter().map(|h| coset_gset(group, h)).collect();
        let tensors = orbits
            .iter()
            .map(|a| {
                orbits
                    .iter()
                    .map(|b| orbits.iter().map(|c| k0_composition(group, a, b, c)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { classes, tensors })
    }

    /// First basis quadruple `(h,k,l,m; i,j,k')` where the two bracketings
    /// of a triple composite differ, if any.
    pub fn associativity_failure(&self) -> Option<[usize; 7]> {
        let n = self.classes.len();
        for h in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let (hkl, hlm) = (&self.tensors[h][k][l], &self.tensors[h][l][m]);
                        let (klm, hkm) = (&self.tensors[k][l][m], &self.tensors[h][k][m]);
                        for i in 0..hkl.basis_ab.len() {
                            for j in 0..hkl.basis_bc.len() {
                                for q in 0..klm.basis_bc.len() {
                                    let e = |len, idx| unit_vec(len, idx);
                                    let left = hlm.apply(
                                        &hkl.apply(&e(hkl.basis_ab.len(), i), &e(hkl.basis_bc.len(), j)),
                                        &e(klm.basis_bc.len(), q),
                                    );
                                    let right = hkm.apply(
                                        &e(hkl.basis_ab.len(), i),
                                        &klm.apply(&e(klm.basis_ab.len(), j), &e(klm.basis_bc.len(), q)),
                                    );
                                    if left != right {
                                        return Some([h, k, l, m, i, j, q]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

fn unit_vec(len: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// `m[i][j] = |(G/H_i)^{H_j}|` over subgroup-class representatives in
/// ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableOfMarks {
    pub classes: Vec<Subgroup>,
    pub marks: Vec<Vec<usize>>,
}

impl TableOfMarks {
    /// Lower triangular with nonzero diagonal, hence invertible over Q.
    pub fn is_triangular_invertible(&self) -> bool {
        let n = self.marks.len();
        (0..n).all(|i| self.marks[i][i] > 0 && (i + 1..n).all(|j| self.marks[i][j] == 0))
    }

    /// Marks of an arbitrary G-set, `|X^{H_j}|` per class.
    pub fn marks_of(&self, x: &GSet) -> Vec<usize> {
        self.classes.iter().map(|h| x.fixed_points(h).len()).collect()
    }
}

pub fn table_of_marks(group: &FiniteGroup) -> Result<TableOfMarks> {
    let classes = class_representatives(group)?;
    let marks = classes
        .iter()
        .map(|h| {
            let x = coset_gset(group, h);
            classes.iter().map(|k| x.fixed_points(k).len()).collect()
        })
        .collect();
    Ok(TableOfMarks { classes, marks })
}

/// The orbit-level tom Dieck splitting of `X`.
///
/// `left` lists conjugation classes of pairs `(H, x)` with `x ∈ X^H`, each
/// by its least member. `right` lists, per subgroup class `(H)`, the
/// `WH`-orbits on `X^H` as `(class index, least point)`. `bijection[i]` is
/// the index in `right` of the image of `left[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TomDieck {
    pub classes: Vec<Subgroup>,
    pub left: Vec<(Subgroup, usize)>,
    pub right: Vec<(usize, usize)>,
    pub bijection: Vec<usize>,
}

impl TomDieck {
    pub fn is_bijection(&self) -> bool {
        let mut hit = vec![false; self.right.len()];
        self.left.len() == self.right.len()
            && self.bijection.iter().all(|&j| j < hit.len() && !std::mem::replace(&mut hit[j], true))
    }
}

pub fn tom_dieck_pi0(group: &FiniteGroup, x: &GSet) -> Result<TomDieck> {
    let subs = subgroups(group)?;
    let classes = class_representatives(group)?;

    let mut left = BTreeSet::new();
    for h in &subs {
        for p in x.fixed_points(h) {
            let least =
                group.elements().map(|g| (group.conjugate_subgroup(g, h), x.act(g, p))).min().expect("nonempty");
            left.insert(least);
        }
    }
    let left: Vec<(Subgroup, usize)> = left.into_iter().collect();

    let mut right = Vec::new();
    for (ci, h) in classes.iter().enumerate() {
        let w = weyl_group(group, h);
        let mut seen = BTreeSet::new();
        for p in x.fixed_points(h) {
            let least = (0..w.representatives.len()).map(|k| w.act(x, k, p)).min().expect("nonempty");
            if seen.insert(least) {
                right.push((ci, least));
            }
        }
    }

    let mut bijection = Vec::with_capacity(left.len());
    for (h, p) in &left {
        let (ci, g) = classes
            .iter()
            .enumerate()
            .find_map(|(ci, c)| group.elements().find(|&g| &group.conjugate_subgroup(g, h) == c).map(|g| (ci, g)))
            .ok_or_else(|| Error::Domain("subgroup outside every class".into()))?;
        let w = weyl_group(group, &classes[ci]);
        let q = x.act(g, *p);
        let least = (0..w.representatives.len()).map(|k| w.act(x, k, q)).min().expect("nonempty");
        let j = right
            .iter()
            .position(|&r| r == (ci, least))
            .ok_or_else(|| Error::Domain("image outside right basis".into()))?;
        bijection.push(j);
    }
    Ok(TomDieck { classes, left, right, bijection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gset::coproduct;

    #[test]
    fn marks_of_small_groups() {
        let t = table_of_marks(&FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(t.marks, vec![vec![2, 0], vec![1, 1]]);
        let t = table_of_marks(&FiniteGroup::symmetric(3)).unwrap();
        assert_eq!(t.marks, vec![vec![6, 0, 0, 0], vec![3, 1, 0, 0], vec![2, 0, 2, 0], vec![1, 1, 1, 1]]);
        assert!(t.is_triangular_invertible());
        assert_eq!(table_of_marks(&FiniteGroup::trivial()).unwrap().marks, vec![vec![1]]);
    }

    #[test]
    fn basis_sizes() {
        let s3 = FiniteGroup::symmetric(3);
        let pt = GSet::point(&s3);
        assert_eq!(burnside_basis(&s3, &pt, &pt).unwrap().len(), 4);
        let c2 = FiniteGroup::cyclic(2);
        let free = GSet::regular(&c2);
        assert_eq!(burnside_basis(&c2, &free, &free).unwrap().len(), 2);
        let e = FiniteGroup::trivial();
        let pt = GSet::point(&e);
        assert_eq!(burnside_basis(&e, &pt, &pt).unwrap().len(), 1);
    }

    #[test]
    fn a_c2_free_square() {
        let c2 = FiniteGroup::cyclic(2);
        let pt = GSet::point(&c2);
        let t = k0_composition(&c2, &pt, &pt, &pt).unwrap();
        let free = t.basis_ab.iter().position(|l| l.isotropy.order() == 1).unwrap();
        let mut expect = vec![0; t.basis_ac.len()];
        expect[free] = 2;
        assert_eq!(t.tensor[free][free], expect);
    }

    #[test]
    fn unit_class_is_diagonal() {
        let s3 = FiniteGroup::symmetric(3);
        for h in class_representatives(&s3).unwrap() {
            let a = coset_gset(&s3, &h);
            let c = canonical_class(&s3, &Span::unit(&a));
            assert_eq!(c.counts, vec![(OrbitLabel { pair: (0, 0), isotropy: h.clone() }, 1)]);
            assert_eq!(c, canonical_class(&s3, &Span::identity(&a)));
        }
    }

    #[test]
    fn tom_dieck_examples() {
        let s3 = FiniteGroup::symmetric(3);
        let c2 = FiniteGroup::cyclic(2);
        let subs = subgroups(&s3).unwrap();
        let cases = [
            (c2.clone(), GSet::regular(&c2), 1),
            (s3.clone(), coset_gset(&s3, &subs[1]), 2),
            (s3.clone(), GSet::point(&s3), 4),
            (FiniteGroup::trivial(), GSet::point(&FiniteGroup::trivial()), 1),
        ];
        for (g, x, n) in cases {
            let td = tom_dieck_pi0(&g, &x).unwrap();
            assert_eq!(td.left.len(), n);
            assert!(td.is_bijection());
        }
        let x = coproduct(&GSet::regular(&s3), &coset_gset(&s3, &subs[4]));
        assert!(tom_dieck_pi0(&s3, &x).unwrap().is_bijection());
    }
}
