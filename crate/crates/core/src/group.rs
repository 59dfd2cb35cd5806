//! Finite groups given by multiplication tables, and their subgroups.
//!
//! Elements are the indices `0..order`. Every constructor in this module
//! places the identity at index 0; [`FiniteGroup::from_table`] accepts any
//! identity position.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on group orders accepted by subgroup enumeration.
pub const DEFAULT_ORDER_BOUND: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table `mul[a][b] = a * b`,
    /// checking every group axiom by exhaustion.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for row in &mul {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidGroup("table is not square over 0..n".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| mul[a][b] == identity && mul[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(Self { mul, identity, inverse })
    }

    /// Closes a set of permutations of `0..degree` to a group. Elements are
    /// numbered by the lexicographic order of their permutation images, so
    /// the identity is element 0. Composition is `(a * b)(x) = a(b(x))`.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        let id: Vec<usize> = (0..degree).collect();
        for g in generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidGroup(format!("{g:?} is not a permutation of 0..{degree}")));
            }
        }
        let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
        elements.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for g in generators {
                let q: Vec<usize> = (0..degree).map(|x| g[p[x]]).collect();
                if elements.insert(q.clone()) {
                    frontier.push(q);
                    if elements.len() > 1 << 16 {
                        return Err(Error::SizeBound { order: elements.len(), bound: 1 << 16 });
                    }
                }
            }
        }
        let elements: Vec<Vec<usize>> = elements.into_iter().collect();
        let index = |p: &Vec<usize>| elements.binary_search(p).expect("closed under composition");
        let n = elements.len();
        let mut mul = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let c: Vec<usize> = (0..degree).map(|x| elements[a][elements[b][x]]).collect();
                mul[a][b] = index(&c);
            }
        }
        Self::from_table(mul)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let n = n.max(1);
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(mul).expect("cyclic table")
    }

    pub fn klein_four() -> Self {
        Self::direct_product(&Self::cyclic(2), &Self::cyclic(2))
    }

    pub fn symmetric(n: usize) -> Self {
        if n <= 1 {
            return Self::trivial();
        }
        let mut cycle: Vec<usize> = (1..n).collect();
        cycle.push(0);
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        Self::from_permutations(n, &[cycle, swap]).expect("symmetric group generators")
    }

    pub fn dihedral(n: usize) -> Self {
        if n <= 2 {
            return Self::direct_product(&Self::cyclic(2), &Self::cyclic(n));
        }
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(n, &[rot, refl]).expect("dihedral generators")
    }

    pub fn alternating(n: usize) -> Self {
        if n <= 2 {
            return Self::trivial();
        }
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        Self::from_permutations(n, &gens).expect("3-cycles generate")
    }

    /// Elements are pairs `(a, b)` numbered `a * |B| + b`.
    pub fn direct_product(a: &Self, b: &Self) -> Self {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        let mut mul = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / nb, x % nb);
                let (ya, yb) = (y / nb, y % nb);
                mul[x][y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
            }
        }
        Self::from_table(mul).expect("product of groups")
    }

    /// Small named groups used by the command line and the test suites.
    pub fn by_name(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        Some(match lower.as_str() {
            "trivial" | "c1" | "1" => Self::trivial(),
            "c2xc2" | "v4" | "klein" => Self::klein_four(),
            "s3" => Self::symmetric(3),
            "s4" => Self::symmetric(4),
            "a4" => Self::alternating(4),
            "d4" | "d8" => Self::dihedral(4),
            "q8" => Self::quaternion(),
            _ => {
                let n: usize = lower.strip_prefix('c')?.parse().ok()?;
                Self::cyclic(n)
            }
        })
    }

    pub fn quaternion() -> Self {
        // i, j acting on the regular representation of Q8 as permutations.
        // Elements ±1, ±i, ±j, ±k numbered 1,-1,i,-i,j,-j,k,-k.
        let sign = |x: usize| x % 2;
        let unit = |x: usize| x / 2;
        // unit multiplication: (u, v) -> (sign flip, unit)
        let table = |u: usize, v: usize| -> (usize, usize) {
            match (u, v) {
                (0, w) | (w, 0) => (0, w),
                (a, b) if a == b => (1, 0),
                (1, 2) => (0, 3),
                (2, 3) => (0, 1),
                (3, 1) => (0, 2),
                (2, 1) => (1, 3),
                (3, 2) => (1, 1),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        let mul = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (s, u) = table(unit(x), unit(y));
                        2 * u + ((sign(x) + sign(y) + s) % 2)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(mul).expect("quaternion table")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { elements: self.elements().collect() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![self.identity] }
    }

    /// Smallest subgroup containing `gens`.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order()];
        member[self.identity] = true;
        let mut list = vec![self.identity];
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            for &g in gens {
                let b = self.mul(a, g);
                if !member[b] {
                    member[b] = true;
                    list.push(b);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        Subgroup { elements: list }
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let set: HashSet<usize> = elems.iter().copied().collect();
        set.contains(&self.identity)
            && elems.iter().all(|&a| set.contains(&self.inv(a)) && elems.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        let mut elems: Vec<usize> = h.elements.iter().map(|&x| self.conjugate(g, x)).collect();
        elems.sort_unstable();
        Subgroup { elements: elems }
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let elems = self.elements().filter(|&g| &self.conjugate_subgroup(g, h) == h).collect();
        Subgroup { elements: elems }
    }

    /// Least element of the left coset `g H`.
    pub fn left_coset_rep(&self, g: usize, h: &Subgroup) -> usize {
        h.elements.iter().map(|&x| self.mul(g, x)).min().expect("subgroups are nonempty")
    }

    /// Least element of the right coset `H g`.
    pub fn right_coset_rep(&self, h: &Subgroup, g: usize) -> usize {
        h.elements.iter().map(|&x| self.mul(x, g)).min().expect("subgroups are nonempty")
    }

    /// Writes `g = σ τ` with `σ ∈ H` and `τ` the least element of `H g`.
    /// Satisfies `σ(h g) = h σ(g)` for all `h ∈ H`.
    pub fn right_coset_split(&self, h: &Subgroup, g: usize) -> (usize, usize) {
        let tau = self.right_coset_rep(h, g);
        (self.mul(g, self.inv(tau)), tau)
    }
}

/// A subgroup, stored as its sorted element list.
///
/// Ordered by `(order, element list)`; this is the order used for every
/// listing of subgroups and for choosing conjugacy-class representatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&x| x >= group.order()) || !group.is_subgroup(&elements) {
            return Err(Error::InvalidGroup(format!("{elements:?} is not a subgroup")));
        }
        Ok(Self { elements })
    }

    /// Caller guarantees `elements` is a sorted subgroup.
    pub(crate) fn new_unchecked(elements: Vec<usize>) -> Self {
        Self { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    /// Position of `g` in the element list.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup { elements: self.elements.iter().copied().filter(|&g| other.contains(g)).collect() }
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All subgroups, sorted by `(order, element list)`.
///
/// Cyclic subgroups are closed under pairwise joins until nothing new
/// appears; every subgroup is a join of cyclic ones, so this is complete.
pub fn subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>> {
    subgroups_bounded(group, DEFAULT_ORDER_BOUND)
}

pub fn subgroups_bounded(group: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(Error::SizeBound { order: group.order(), bound });
    }
    let mut found: BTreeSet<Subgroup> = group.elements().map(|g| group.closure(&[g])).collect();
    let mut fresh: Vec<Subgroup> = found.iter().cloned().collect();
    while !fresh.is_empty() {
        let current: Vec<Subgroup> = found.iter().cloned().collect();
        let mut next = Vec::new();
        for a in &fresh {
            for b in &current {
                if a.is_subgroup_of(b) || b.is_subgroup_of(a) {
                    continue;
                }
                let mut gens = a.elements.clone();
                gens.extend_from_slice(&b.elements);
                let j = group.closure(&gens);
                if found.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        fresh = next;
    }
    Ok(found.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
}

/// Partition of `subs` into conjugacy classes, sorted by representative;
/// the representative is the least member.
pub fn conjugacy_classes_of_subgroups(group: &FiniteGroup, subs: &[Subgroup]) -> Vec<ConjugacyClass> {
    let mut assigned: HashSet<Subgroup> = HashSet::new();
    let mut classes = Vec::new();
    for h in subs {
        if assigned.contains(h) {
            continue;
        }
        let members: BTreeSet<Subgroup> = group.elements().map(|g| group.conjugate_subgroup(g, h)).collect();
        let members: Vec<Subgroup> = members.into_iter().collect();
        assigned.extend(members.iter().cloned());
        classes.push(ConjugacyClass { representative: members[0].clone(), members });
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    classes
}

/// Representatives of subgroup conjugacy classes, ascending.
pub fn class_representatives(group: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let subs = subgroups(group)?;
    Ok(conjugacy_classes_of_subgroups(group, &subs).into_iter().map(|c| c.representative).collect())
}

/// Least member of the class of `h` under conjugation by elements of `by`.
pub fn canonical_conjugate(group: &FiniteGroup, h: &Subgroup, by: &Subgroup) -> Subgroup {
    by.elements().iter().map(|&g| group.conjugate_subgroup(g, h)).min().expect("nonempty")
}

/// The Weyl group `N_G(H)/H` together with the least representative in `G`
/// of each of its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylGroup {
    pub subgroup: Subgroup,
    pub normalizer: Subgroup,
    pub group: FiniteGroup,
    pub representatives: Vec<usize>,
}

impl WeylGroup {
    /// Action of the Weyl element `w` on a point of `X^H`.
    pub fn act(&self, x: &crate::gset::GSet, w: usize, point: usize) -> usize {
        x.act(self.representatives[w], point)
    }
}

pub fn weyl_group(group: &FiniteGroup, h: &Subgroup) -> WeylGroup {
    let normalizer = group.normalizer(h);
    let reps: BTreeSet<usize> = normalizer.elements().iter().map(|&n| group.left_coset_rep(n, h)).collect();
    let representatives: Vec<usize> = reps.into_iter().collect();
    let index = |g: usize| {
        let r = group.left_coset_rep(g, h);
        representatives.binary_search(&r).expect("normalizer is closed")
    };
    let m = representatives.len();
    let mut mul = vec![vec![0; m]; m];
    for a in 0..m {
        for b in 0..m {
            mul[a][b] = index(group.mul(representatives[a], representatives[b]));
        }
    }
    WeylGroup {
        subgroup: h.clone(),
        normalizer,
        group: FiniteGroup::from_table(mul).expect("quotient of a group is a group"),
        representatives,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_subgroups(g: &FiniteGroup) -> BTreeSet<Subgroup> {
        let n = g.order();
        (0u32..(1 << n))
            .filter_map(|mask| {
                let elems: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                g.is_subgroup(&elems).then_some(Subgroup { elements: elems })
            })
            .collect()
    }

    #[test]
    fn table_axioms_are_checked() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![]).is_err());
        // a non-associative loop with identity and inverses
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(loop5), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn catalog_orders() {
        for (name, order) in [
            ("trivial", 1),
            ("c2", 2),
            ("c4", 4),
            ("c2xc2", 4),
            ("s3", 6),
            ("d4", 8),
            ("q8", 8),
            ("a4", 12),
            ("s4", 24),
        ] {
            let g = FiniteGroup::by_name(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.identity(), 0);
        }
        assert!(!FiniteGroup::symmetric(3).is_abelian());
        assert!(!FiniteGroup::quaternion().is_abelian());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(subgroups(&FiniteGroup::trivial()).unwrap().len(), 1);
        let c2 = subgroups(&FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(c2.iter().map(|s| s.elements().to_vec()).collect::<Vec<_>>(), vec![vec![0], vec![0, 1]]);
        let s3 = subgroups(&FiniteGroup::symmetric(3)).unwrap();
        let orders: Vec<usize> = s3.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        assert_eq!(subgroups(&FiniteGroup::symmetric(4)).unwrap().len(), 30);
        assert_eq!(subgroups(&FiniteGroup::alternating(4)).unwrap().len(), 10);
        assert_eq!(subgroups(&FiniteGroup::quaternion()).unwrap().len(), 6);
    }

    #[test]
    fn subgroups_match_brute_force() {
        for g in [
            FiniteGroup::cyclic(6),
            FiniteGroup::symmetric(3),
            FiniteGroup::dihedral(4),
            FiniteGroup::klein_four(),
            FiniteGroup::quaternion(),
        ] {
            let fast: BTreeSet<Subgroup> = subgroups(&g).unwrap().into_iter().collect();
            assert_eq!(fast, brute_force_subgroups(&g));
        }
    }

    #[test]
    fn order_bound_is_enforced() {
        let g = FiniteGroup::symmetric(4);
        assert_eq!(subgroups_bounded(&g, 12), Err(Error::SizeBound { order: 24, bound: 12 }));
    }

    #[test]
    fn conjugacy_class_counts() {
        let count = |g: FiniteGroup| conjugacy_classes_of_subgroups(&g, &subgroups(&g).unwrap()).len();
        assert_eq!(count(FiniteGroup::cyclic(2)), 2);
        assert_eq!(count(FiniteGroup::symmetric(3)), 4);
        assert_eq!(count(FiniteGroup::klein_four()), 5);
        assert_eq!(count(FiniteGroup::symmetric(4)), 11);
        let s3 = FiniteGroup::symmetric(3);
        let classes = conjugacy_classes_of_subgroups(&s3, &subgroups(&s3).unwrap());
        let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 3, 1, 1]);
        for c in &classes {
            assert_eq!(&c.representative, c.members.iter().min().unwrap());
        }
    }

    #[test]
    fn weyl_groups() {
        let s3 = FiniteGroup::symmetric(3);
        let subs = subgroups(&s3).unwrap();
        assert_eq!(weyl_group(&s3, &subs[4]).group.order(), 2); // C3
        assert_eq!(weyl_group(&s3, &subs[1]).group.order(), 1); // a C2
        assert_eq!(weyl_group(&s3, &s3.whole()).group.order(), 1);
        assert_eq!(weyl_group(&s3, &s3.trivial_subgroup()).group.order(), 6);
    }

    #[test]
    fn right_coset_split_is_equivariant() {
        let g = FiniteGroup::symmetric(3);
        for h in subgroups(&g).unwrap() {
            for x in g.elements() {
                let (s, t) = g.right_coset_split(&h, x);
                assert!(h.contains(s));
                assert_eq!(g.mul(s, t), x);
                for &k in h.elements() {
                    let (s2, t2) = g.right_coset_split(&h, g.mul(k, x));
                    assert_eq!((s2, t2), (g.mul(k, s), t));
                }
            }
        }
    }
}
