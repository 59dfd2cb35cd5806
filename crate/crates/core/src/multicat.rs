//! Finite non-symmetric multicategories, the parameter multicategories
//! `R_S` (enriched categories on `S`) and `M_S` (enriched categories with
//! a right module), and checkers for multifunctors into categories.

use std::collections::{BTreeMap, HashMap};

use crate::category::Category;
use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::report::Report;
use crate::span::{Span, SpanIso};
use crate::spancat::{SpanCat, SpanRing};
use crate::strictify::CatRing;

/// An n-ary morphism `sources → target`, numbered within its hom set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiMor {
    pub sources: Vec<usize>,
    pub target: usize,
    pub index: usize,
}

impl MultiMor {
    pub fn arity(&self) -> usize {
        self.sources.len()
    }
}

/// A multicategory with finitely many objects and hom sets, tabulated up
/// to an arity bound. Composites of arity above the bound are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMulticategory {
    pub names: Vec<String>,
    pub max_arity: usize,
    homs: BTreeMap<(Vec<usize>, usize), usize>,
    identities: Vec<usize>,
    mors: Vec<MultiMor>,
    ids: HashMap<MultiMor, usize>,
    by_target: Vec<Vec<usize>>,
    /// `(f, gs) ↦ f ∘ gs`, on morphism numbers.
    composites: HashMap<(usize, Vec<usize>), usize>,
}

impl FiniteMulticategory {
    /// Tabulates `compose(f, gs)` for every composable tuple within the
    /// arity bound; `compose` returns the index in the composite's hom set.
    pub fn new(
        names: Vec<String>,
        max_arity: usize,
        homs: BTreeMap<(Vec<usize>, usize), usize>,
        identities: Vec<usize>,
        compose: impl Fn(&MultiMor, &[MultiMor]) -> usize,
    ) -> Result<Self> {
        let n = names.len();
        if identities.len() != n {
            return Err(Error::Domain("one identity per object".into()));
        }
        if let Some(((src, t), _)) =
            homs.iter().find(|((src, t), _)| *t >= n || src.iter().any(|&a| a >= n) || src.len() > max_arity)
        {
            return Err(Error::Domain(format!("hom ({src:?}; {t}) outside the objects or the arity bound")));
        }
        let mut mors = Vec::new();
        let mut by_target = vec![Vec::new(); n];
        for ((src, t), &size) in &homs {
            for index in 0..size {
                by_target[*t].push(mors.len());
                mors.push(MultiMor { sources: src.clone(), target: *t, index });
            }
        }
        let ids = mors.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut c = Self { names, max_arity, homs, identities, mors, ids, by_target, composites: HashMap::new() };
        for a in 0..n {
            if c.identities[a] >= c.hom_size(&[a], a) {
                return Err(Error::Domain(format!("identity of {} is not in its hom set", c.names[a])));
            }
        }
        for f in 0..c.mors.len() {
            for gs in c.input_ids(&c.mors[f].sources, max_arity) {
                let gm: Vec<MultiMor> = gs.iter().map(|&g| c.mors[g].clone()).collect();
                let sources: Vec<usize> = gm.iter().flat_map(|g| g.sources.iter().copied()).collect();
                let index = compose(&c.mors[f], &gm);
                let target = c.mors[f].target;
                let Some(&h) = c.ids.get(&MultiMor { sources, target, index }) else {
                    return Err(Error::Domain(format!(
                        "composite of {:?} after {gm:?} is not in its hom set",
                        c.mors[f]
                    )));
                };
                c.composites.insert((f, gs), h);
            }
        }
        Ok(c)
    }

    /// Every hom set has at most one element; composition is forced.
    pub fn thin(
        names: Vec<String>,
        max_arity: usize,
        homs: impl IntoIterator<Item = (Vec<usize>, usize)>,
    ) -> Result<Self> {
        let n = names.len();
        Self::new(names, max_arity, homs.into_iter().map(|h| (h, 1)).collect(), vec![0; n], |_, _| 0)
    }

    /// One object, `Z/m` worth of n-ary morphisms in each arity, composing
    /// by addition.
    pub fn graded_monoid(modulus: usize, max_arity: usize) -> Result<Self> {
        let homs = (0..=max_arity).map(|k| ((vec![0; k], 0), modulus)).collect();
        Self::new(vec!["*".into()], max_arity, homs, vec![0], |f, gs| {
            (f.index + gs.iter().map(|g| g.index).sum::<usize>()) % modulus
        })
    }

    pub fn object_count(&self) -> usize {
        self.names.len()
    }

    pub fn hom_size(&self, sources: &[usize], target: usize) -> usize {
        self.homs.get(&(sources.to_vec(), target)).copied().unwrap_or(0)
    }

    pub fn identity(&self, a: usize) -> MultiMor {
        MultiMor { sources: vec![a], target: a, index: self.identities[a] }
    }

    pub fn is_identity(&self, f: &MultiMor) -> bool {
        f.arity() == 1 && *f == self.identity(f.target)
    }

    pub fn morphisms(&self) -> Vec<MultiMor> {
        self.mors.clone()
    }

    pub fn morphisms_into(&self, target: usize) -> Vec<MultiMor> {
        self.by_target[target].iter().map(|&i| self.mors[i].clone()).collect()
    }

    /// `f ∘ (g₁, …, gₙ)`, when tabulated.
    pub fn compose(&self, f: &MultiMor, gs: &[MultiMor]) -> Option<MultiMor> {
        let gs = gs.iter().map(|g| self.ids.get(g).copied()).collect::<Option<Vec<_>>>()?;
        let h = self.composites.get(&(*self.ids.get(f)?, gs))?;
        Some(self.mors[*h].clone())
    }

    /// Overwrites one composite, for negative tests.
    pub fn set_composite(&mut self, f: &MultiMor, gs: &[MultiMor], index: usize) {
        let sources = gs.iter().flat_map(|g| g.sources.iter().copied()).collect();
        let h = self.ids[&MultiMor { sources, target: f.target, index }];
        self.composites.insert((self.ids[f], gs.iter().map(|g| self.ids[g]).collect()), h);
    }

    /// Tuples `(g₁, …, gₙ)` with `gᵢ` ending at `objects[i]` and total
    /// arity at most `budget`.
    pub fn input_tuples(&self, objects: &[usize], budget: usize) -> Vec<Vec<MultiMor>> {
        self.input_ids(objects, budget).iter().map(|t| t.iter().map(|&g| self.mors[g].clone()).collect()).collect()
    }

    fn input_ids(&self, objects: &[usize], budget: usize) -> Vec<Vec<usize>> {
        let Some((&first, rest)) = objects.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        for &g in self.by_target[first].iter().filter(|&&g| self.mors[g].arity() <= budget) {
            for tail in self.input_ids(rest, budget - self.mors[g].arity()) {
                out.push([vec![g], tail].concat());
            }
        }
        out
    }

    /// The full sub-multicategory on `objects`, renumbered in that order.
    pub fn full_sub(&self, objects: &[usize]) -> Result<Self> {
        let pos: HashMap<usize, usize> = objects.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let renumber = |src: &[usize]| src.iter().map(|a| pos.get(a).copied()).collect::<Option<Vec<_>>>();
        let homs =
            self.homs.iter().filter_map(|((src, t), &size)| Some(((renumber(src)?, *pos.get(t)?), size))).collect();
        let names = objects.iter().map(|&a| self.names[a].clone()).collect();
        let identities = objects.iter().map(|&a| self.identities[a]).collect();
        let back = |m: &MultiMor| MultiMor {
            sources: m.sources.iter().map(|&i| objects[i]).collect(),
            target: objects[m.target],
            index: m.index,
        };
        Self::new(names, self.max_arity, homs, identities, |f, gs| {
            let gs: Vec<MultiMor> = gs.iter().map(back).collect();
            self.compose(&back(f), &gs).expect("composite within the bound").index
        })
    }

    /// Unit and associativity laws for every tabulated composite.
    pub fn check_axioms(&self) -> Report {
        let mut report = Report::new("multicategory axioms");
        let id_of = |a: usize| self.ids[&self.identity(a)];
        let compose = |f: usize, gs: Vec<usize>| self.composites.get(&(f, gs)).copied();
        for (f, fm) in self.mors.iter().enumerate() {
            report.check(compose(id_of(fm.target), vec![f]) == Some(f), "left unit", || format!("{fm:?}"));
            let ids = fm.sources.iter().map(|&a| id_of(a)).collect();
            report.check(compose(f, ids) == Some(f), "right unit", || format!("{fm:?}"));
            for gs in self.input_ids(&fm.sources, self.max_arity) {
                let fg = compose(f, gs.clone());
                for hs in self.nested_inputs(&gs, self.max_arity) {
                    let lhs = fg.and_then(|fg| compose(fg, hs.concat()));
                    let ghs: Option<Vec<usize>> = gs.iter().zip(&hs).map(|(&g, h)| compose(g, h.clone())).collect();
                    let rhs = ghs.and_then(|ghs| compose(f, ghs));
                    report.check(lhs.is_some() && lhs == rhs, "associativity", || {
                        let name = |t: &[usize]| t.iter().map(|&i| self.mors[i].clone()).collect::<Vec<_>>();
                        let hs: Vec<_> = hs.iter().map(|h| name(h)).collect();
                        format!("{fm:?} after {:?} after {hs:?}", name(&gs))
                    });
                }
            }
        }
        report
    }

    /// Tuples of input tuples, one per `gᵢ`, with total arity at most
    /// `budget`.
    fn nested_inputs(&self, gs: &[usize], budget: usize) -> Vec<Vec<Vec<usize>>> {
        let Some((&g, rest)) = gs.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        for h in self.input_ids(&self.mors[g].sources, budget) {
            let used = h.iter().map(|&x| self.mors[x].arity()).sum::<usize>();
            for tail in self.nested_inputs(rest, budget - used) {
                out.push([vec![h.clone()], tail].concat());
            }
        }
        out
    }
}

/// Objects of the parameter multicategories.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    /// A hom object `(s, t)`.
    Pair(usize, usize),
    /// A module object `s`.
    Module(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterMulticategory {
    pub size: usize,
    pub kinds: Vec<Param>,
    pub multicat: FiniteMulticategory,
}

impl ParameterMulticategory {
    pub fn pair(&self, s: usize, t: usize) -> usize {
        s * self.size + t
    }

    pub fn module(&self, s: usize) -> usize {
        assert!(self.has_modules(), "no module objects");
        self.size * self.size + s
    }

    pub fn has_modules(&self) -> bool {
        self.kinds.len() > self.size * self.size
    }

    /// The unique morphism with the given sources and target, if any.
    pub fn unique(&self, sources: Vec<usize>, target: usize) -> Option<MultiMor> {
        (self.multicat.hom_size(&sources, target) == 1).then_some(MultiMor { sources, target, index: 0 })
    }
}

/// All sequences of `len` elements of `0..size`.
fn sequences(size: usize, len: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter().flat_map(|c| (0..size).map(move |s| [c.clone(), vec![s]].concat())).collect()
    })
}

fn rs_homs(size: usize, max_arity: usize) -> Vec<(Vec<usize>, usize)> {
    let pair = |s: usize, t: usize| s * size + t;
    let mut homs: Vec<(Vec<usize>, usize)> = (0..size).map(|s| (Vec::new(), pair(s, s))).collect();
    for k in 1..=max_arity {
        for c in sequences(size, k + 1) {
            homs.push(((0..k).map(|i| pair(c[i], c[i + 1])).collect(), pair(c[0], c[k])));
        }
    }
    homs
}

fn pair_names(size: usize) -> Vec<String> {
    sequences(size, 2).iter().map(|c| format!("({},{})", c[0], c[1])).collect()
}

/// `R_S`: objects `S × S`; `hom((s₁,t₁), …, (sₙ,tₙ); (s,t))` is a point
/// when `s = s₁`, `tᵢ = sᵢ₊₁` and `tₙ = t` (for `n = 0`: when `s = t`),
/// and empty otherwise.
pub fn build_rs(size: usize, max_arity: usize) -> Result<ParameterMulticategory> {
    let kinds = sequences(size, 2).iter().map(|c| Param::Pair(c[0], c[1])).collect();
    let multicat = FiniteMulticategory::thin(pair_names(size), max_arity, rs_homs(size, max_arity))?;
    Ok(ParameterMulticategory { size, kinds, multicat })
}

/// `M_S`: `R_S` plus module objects `S`, with one morphism
/// `s₁, (s₁,s₂), …, (sₙ₋₁,sₙ); sₙ` for every chain.
pub fn build_ms(size: usize, max_arity: usize) -> Result<ParameterMulticategory> {
    let mut kinds: Vec<Param> = sequences(size, 2).iter().map(|c| Param::Pair(c[0], c[1])).collect();
    kinds.extend((0..size).map(Param::Module));
    let mut names = pair_names(size);
    names.extend((0..size).map(|s| s.to_string()));
    let (pair, module) = (|s: usize, t: usize| s * size + t, |s: usize| size * size + s);
    let mut homs = rs_homs(size, max_arity);
    for k in 1..=max_arity {
        for c in sequences(size, k) {
            let mut sources = vec![module(c[0])];
            sources.extend((0..k - 1).map(|i| pair(c[i], c[i + 1])));
            homs.push((sources, module(c[k - 1])));
        }
    }
    let multicat = FiniteMulticategory::thin(names, max_arity, homs)?;
    Ok(ParameterMulticategory { size, kinds, multicat })
}

/// A multifunctor between finite multicategories, as tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultifunctorData {
    pub objects: Vec<usize>,
    pub morphisms: BTreeMap<MultiMor, MultiMor>,
}

impl MultifunctorData {
    pub fn identity(c: &FiniteMulticategory) -> Self {
        Self {
            objects: (0..c.object_count()).collect(),
            morphisms: c.morphisms().into_iter().map(|f| (f.clone(), f)).collect(),
        }
    }

    /// The inclusion of the full sub-multicategory on `objects`.
    pub fn inclusion(sub: &FiniteMulticategory, objects: &[usize]) -> Self {
        let morphisms = sub
            .morphisms()
            .into_iter()
            .map(|f| {
                let image = MultiMor {
                    sources: f.sources.iter().map(|&a| objects[a]).collect(),
                    target: objects[f.target],
                    index: f.index,
                };
                (f, image)
            })
            .collect();
        Self { objects: objects.to_vec(), morphisms }
    }
}

/// Typing, identities and composites of a multifunctor between finite
/// multicategories.
pub fn check_multifunctor_into(src: &FiniteMulticategory, tgt: &FiniteMulticategory, f: &MultifunctorData) -> Report {
    let mut report = Report::new("multifunctor");
    if !report.check(
        f.objects.len() == src.object_count() && f.objects.iter().all(|&b| b < tgt.object_count()),
        "object map",
        || format!("{:?}", f.objects),
    ) {
        return report;
    }
    for m in src.morphisms() {
        let image = f.morphisms.get(&m);
        let typed = image.is_some_and(|i| {
            i.sources == m.sources.iter().map(|&a| f.objects[a]).collect::<Vec<_>>()
                && i.target == f.objects[m.target]
                && i.index < tgt.hom_size(&i.sources, i.target)
        });
        report.check(typed, "typing", || format!("{m:?} ↦ {image:?}"));
    }
    if report.failure_count > 0 {
        return report;
    }
    for a in 0..src.object_count() {
        report
            .check(f.morphisms[&src.identity(a)] == tgt.identity(f.objects[a]), "identities", || src.names[a].clone());
    }
    for m in src.morphisms() {
        for gs in src.input_tuples(&m.sources, src.max_arity) {
            let lhs = src.compose(&m, &gs).map(|c| f.morphisms[&c].clone());
            let images: Vec<MultiMor> = gs.iter().map(|g| f.morphisms[g].clone()).collect();
            let rhs = tgt.compose(&f.morphisms[&m], &images);
            if rhs.is_none() && images.iter().map(MultiMor::arity).sum::<usize>() > tgt.max_arity {
                continue;
            }
            report.check(lhs.is_some() && lhs == rhs, "composites", || format!("{m:?} after {gs:?}"));
        }
    }
    report
}

type Ob<C> = <C as Category>::Ob;
type Mor<C> = <C as Category>::Mor;

/// A multifunctor into categories: each object goes to a category with
/// chosen coproducts (given by samples of one ambient category), each
/// n-ary morphism to a functor out of the product.
pub trait CatMultifunctor {
    type Cat: Category;

    fn source(&self) -> &FiniteMulticategory;
    fn cat(&self) -> &Self::Cat;
    fn samples(&self, a: usize) -> Vec<Ob<Self::Cat>>;
    /// Whether `x` is an object of the category at `a`.
    fn contains(&self, a: usize, x: &Ob<Self::Cat>) -> bool;
    fn apply(&self, f: &MultiMor, xs: &[Ob<Self::Cat>]) -> Ob<Self::Cat>;
    fn apply_mor(&self, f: &MultiMor, xs: &[Mor<Self::Cat>]) -> Mor<Self::Cat>;
}

#[derive(Clone, Copy, Debug)]
pub struct MultiBounds {
    /// Largest arity of the morphisms and composites checked.
    pub max_arity: usize,
    /// Morphisms sampled per object.
    pub hom_limit: usize,
}

fn object_tuples<F: CatMultifunctor>(f: &F, objects: &[usize]) -> Vec<Vec<Ob<F::Cat>>> {
    objects.iter().fold(vec![Vec::new()], |acc, &a| {
        let xs = f.samples(a);
        acc.into_iter().flat_map(|t| xs.iter().map(move |x| [t.clone(), vec![x.clone()]].concat())).collect()
    })
}

fn automorphism_tuples<C: Category>(cat: &C, xs: &[C::Ob], limit: usize) -> Vec<Vec<C::Mor>> {
    xs.iter().fold(vec![Vec::new()], |acc, x| {
        let fs = cat.hom_limited(x, x, limit);
        acc.into_iter().flat_map(|t| fs.iter().map(move |f| [t.clone(), vec![f.clone()]].concat())).collect()
    })
}

fn split_by_arity<T: Clone>(xs: &[T], gs: &[MultiMor]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut at = 0;
    for g in gs {
        out.push(xs[at..at + g.arity()].to_vec());
        at += g.arity();
    }
    out
}

/// Typing, functoriality in each variable, coproducts in each slot,
/// identities and composites, on sampled objects and automorphisms.
pub fn check_multifunctor<F: CatMultifunctor>(functor: &F, bounds: MultiBounds) -> Report {
    let mut report = Report::new("category-valued multifunctor");
    let src = functor.source();
    let cat = functor.cat();
    let arity = bounds.max_arity.min(src.max_arity);
    for f in src.morphisms().into_iter().filter(|f| f.arity() <= arity) {
        for xs in object_tuples(functor, &f.sources) {
            let y = functor.apply(&f, &xs);
            if !report.check(functor.contains(f.target, &y), "typing", || format!("{f:?} on {xs:?}")) {
                continue;
            }
            let ids: Vec<_> = xs.iter().map(|x| cat.identity(x)).collect();
            report.check(functor.apply_mor(&f, &ids) == cat.identity(&y), "functor identities", || {
                format!("{f:?} on {xs:?}")
            });
            let autos = automorphism_tuples(cat, &xs, bounds.hom_limit);
            for phis in &autos {
                for psis in &autos {
                    let both: Vec<_> = phis.iter().zip(psis).map(|(p, q)| cat.compose(p, q)).collect();
                    let lhs = functor.apply_mor(&f, &both);
                    let rhs = cat.compose(&functor.apply_mor(&f, phis), &functor.apply_mor(&f, psis));
                    report.check(lhs == rhs, "functor composition", || format!("{f:?} on {phis:?} then {psis:?}"));
                }
            }
            if src.is_identity(&f) {
                report.check(y == xs[0], "identities", || format!("{f:?} on {xs:?}"));
                for phis in &autos {
                    report.check(functor.apply_mor(&f, phis) == phis[0], "identities on morphisms", || {
                        format!("{phis:?}")
                    });
                }
            }
            for (i, &a) in f.sources.iter().enumerate() {
                for other in functor.samples(a) {
                    let Some(sum) = cat.coproduct(&xs[i], &other) else { continue };
                    let mut with_other = xs.clone();
                    with_other[i] = other;
                    let mut with_sum = xs.clone();
                    with_sum[i] = sum;
                    let ok = cat
                        .coproduct(&y, &functor.apply(&f, &with_other))
                        .is_some_and(|c| cat.find_isomorphism(&functor.apply(&f, &with_sum), &c).is_some());
                    report.check(ok, "coproducts in each slot", || {
                        format!("{f:?} slot {i} on {xs:?} and {with_other:?}")
                    });
                }
            }
        }
        for gs in src.input_tuples(&f.sources, arity) {
            let h = src.compose(&f, &gs).expect("tabulated");
            for ws in object_tuples(functor, &h.sources) {
                let inner: Vec<_> =
                    gs.iter().zip(split_by_arity(&ws, &gs)).map(|(g, c)| functor.apply(g, &c)).collect();
                report.check(functor.apply(&h, &ws) == functor.apply(&f, &inner), "composites", || {
                    format!("{f:?} after {gs:?} on {ws:?}")
                });
                for phis in automorphism_tuples(cat, &ws, bounds.hom_limit) {
                    let inner: Vec<_> =
                        gs.iter().zip(split_by_arity(&phis, &gs)).map(|(g, c)| functor.apply_mor(g, &c)).collect();
                    report.check(
                        functor.apply_mor(&h, &phis) == functor.apply_mor(&f, &inner),
                        "composites on morphisms",
                        || format!("{f:?} after {gs:?} on {phis:?}"),
                    );
                }
            }
        }
    }
    report.note_unchecked("multilinear 2-cell conditions on the slotwise coproduct isomorphisms");
    report
}

/// Table equality of two multifunctors with the same source, on the
/// samples of the first.
pub fn compare_multifunctors<F, G>(name: &str, f: &F, g: &G, bounds: MultiBounds) -> Report
where
    F: CatMultifunctor,
    G: CatMultifunctor<Cat = F::Cat>,
{
    let mut report = Report::new(name);
    let cat = f.cat();
    for m in f.source().morphisms().into_iter().filter(|m| m.arity() <= bounds.max_arity) {
        for xs in object_tuples(f, &m.sources) {
            report.check(f.apply(&m, &xs) == g.apply(&m, &xs), "objects", || format!("{m:?} on {xs:?}"));
            for phis in automorphism_tuples(cat, &xs, bounds.hom_limit) {
                report.check(f.apply_mor(&m, &phis) == g.apply_mor(&m, &phis), "morphisms", || {
                    format!("{m:?} on {phis:?}")
                });
            }
        }
    }
    report
}

/// A category-enriched category on `0..size` with strict units.
pub trait EnrichedCategory {
    type Cat: Category;

    fn size(&self) -> usize;
    fn cat(&self) -> &Self::Cat;
    fn hom_samples(&self, s: usize, t: usize) -> Vec<Ob<Self::Cat>>;
    fn in_hom(&self, s: usize, t: usize, x: &Ob<Self::Cat>) -> bool;
    fn unit(&self, s: usize) -> Ob<Self::Cat>;
    /// `x: s → t` followed by `y: t → u`.
    fn compose(&self, x: &Ob<Self::Cat>, y: &Ob<Self::Cat>) -> Ob<Self::Cat>;
    fn compose_mor(&self, f: &Mor<Self::Cat>, g: &Mor<Self::Cat>) -> Mor<Self::Cat>;
}

/// A right module over an enriched category: categories `M(s)` and
/// actions `M(s) × C(s,t) → M(t)`.
pub trait EnrichedModule: EnrichedCategory {
    fn module_samples(&self, s: usize) -> Vec<Ob<Self::Cat>>;
    fn in_module(&self, s: usize, x: &Ob<Self::Cat>) -> bool;
    fn act(&self, m: &Ob<Self::Cat>, r: &Ob<Self::Cat>) -> Ob<Self::Cat>;
    fn act_mor(&self, f: &Mor<Self::Cat>, g: &Mor<Self::Cat>) -> Mor<Self::Cat>;
}

/// Strict units and associativity of an enriched category, and of a
/// module when given, on sampled objects.
pub fn check_enriched<E: EnrichedCategory>(e: &E) -> Report {
    let mut report = Report::new("enriched category");
    let n = e.size();
    for s in 0..n {
        report.check(e.in_hom(s, s, &e.unit(s)), "unit typing", || s.to_string());
        for t in 0..n {
            for x in e.hom_samples(s, t) {
                report.check(e.compose(&e.unit(s), &x) == x, "left unit", || format!("{x:?}"));
                report.check(e.compose(&x, &e.unit(t)) == x, "right unit", || format!("{x:?}"));
                for u in 0..n {
                    for y in e.hom_samples(t, u) {
                        let xy = e.compose(&x, &y);
                        report.check(e.in_hom(s, u, &xy), "composite typing", || format!("{x:?}, {y:?}"));
                        for v in 0..n {
                            for z in e.hom_samples(u, v) {
                                report.check(
                                    e.compose(&xy, &z) == e.compose(&x, &e.compose(&y, &z)),
                                    "associativity",
                                    || format!("{x:?}, {y:?}, {z:?}"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

pub fn check_enriched_module<E: EnrichedModule>(e: &E) -> Report {
    let mut report = Report::new("enriched module");
    report.merge(check_enriched(e));
    let n = e.size();
    for s in 0..n {
        for m in e.module_samples(s) {
            report.check(e.act(&m, &e.unit(s)) == m, "unit", || format!("{m:?}"));
            for t in 0..n {
                for r in e.hom_samples(s, t) {
                    let mr = e.act(&m, &r);
                    report.check(e.in_module(t, &mr), "action typing", || format!("{m:?}, {r:?}"));
                    for u in 0..n {
                        for q in e.hom_samples(t, u) {
                            report.check(e.act(&mr, &q) == e.act(&m, &e.compose(&r, &q)), "associativity", || {
                                format!("{m:?}, {r:?}, {q:?}")
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

/// The enriched category, and module when the source has module
/// objects, read off a multifunctor out of `R_S` or `M_S`: units from
/// the nullary morphisms, composition and action from the binary ones.
pub struct Repackaged<'a, F> {
    pub functor: &'a F,
    pub params: &'a ParameterMulticategory,
}

impl<'a, F: CatMultifunctor> Repackaged<'a, F> {
    fn hom_ends(&self, x: &Ob<F::Cat>) -> (usize, usize) {
        let n = self.params.size;
        (0..n * n).find(|&a| self.functor.contains(a, x)).map(|a| (a / n, a % n)).expect("object of some hom category")
    }

    fn module_end(&self, x: &Ob<F::Cat>) -> usize {
        (0..self.params.size)
            .find(|&s| self.functor.contains(self.params.module(s), x))
            .expect("object of some module category")
    }

    fn binary(&self, a: usize, b: usize, target: usize) -> MultiMor {
        self.params.unique(vec![a, b], target).expect("binary morphism of the parameter multicategory")
    }
}

impl<'a, F: CatMultifunctor> EnrichedCategory for Repackaged<'a, F> {
    type Cat = F::Cat;

    fn size(&self) -> usize {
        self.params.size
    }
    fn cat(&self) -> &F::Cat {
        self.functor.cat()
    }
    fn hom_samples(&self, s: usize, t: usize) -> Vec<Ob<F::Cat>> {
        self.functor.samples(self.params.pair(s, t))
    }
    fn in_hom(&self, s: usize, t: usize, x: &Ob<F::Cat>) -> bool {
        self.functor.contains(self.params.pair(s, t), x)
    }
    fn unit(&self, s: usize) -> Ob<F::Cat> {
        let f = self.params.unique(Vec::new(), self.params.pair(s, s)).expect("nullary morphism");
        self.functor.apply(&f, &[])
    }
    fn compose(&self, x: &Ob<F::Cat>, y: &Ob<F::Cat>) -> Ob<F::Cat> {
        let ((s, t), (_, u)) = (self.hom_ends(x), self.hom_ends(y));
        let p = |a, b| self.params.pair(a, b);
        self.functor.apply(&self.binary(p(s, t), p(t, u), p(s, u)), &[x.clone(), y.clone()])
    }
    fn compose_mor(&self, f: &Mor<F::Cat>, g: &Mor<F::Cat>) -> Mor<F::Cat> {
        let c = self.functor.cat();
        let ((s, t), (_, u)) = (self.hom_ends(&c.source(f)), self.hom_ends(&c.source(g)));
        let p = |a, b| self.params.pair(a, b);
        self.functor.apply_mor(&self.binary(p(s, t), p(t, u), p(s, u)), &[f.clone(), g.clone()])
    }
}

impl<'a, F: CatMultifunctor> EnrichedModule for Repackaged<'a, F> {
    fn module_samples(&self, s: usize) -> Vec<Ob<F::Cat>> {
        self.functor.samples(self.params.module(s))
    }
    fn in_module(&self, s: usize, x: &Ob<F::Cat>) -> bool {
        self.functor.contains(self.params.module(s), x)
    }
    fn act(&self, m: &Ob<F::Cat>, r: &Ob<F::Cat>) -> Ob<F::Cat> {
        let (s, (_, t)) = (self.module_end(m), self.hom_ends(r));
        let f = self.binary(self.params.module(s), self.params.pair(s, t), self.params.module(t));
        self.functor.apply(&f, &[m.clone(), r.clone()])
    }
    fn act_mor(&self, f: &Mor<F::Cat>, g: &Mor<F::Cat>) -> Mor<F::Cat> {
        let c = self.functor.cat();
        let (s, (_, t)) = (self.module_end(&c.source(f)), self.hom_ends(&c.source(g)));
        let b = self.binary(self.params.module(s), self.params.pair(s, t), self.params.module(t));
        self.functor.apply_mor(&b, &[f.clone(), g.clone()])
    }
}

/// The multifunctor out of `R_S` of an enriched category: nullary
/// morphisms go to units, n-ary ones to iterated composition.
pub struct FromEnriched<'a, E> {
    pub enriched: &'a E,
    pub params: &'a ParameterMulticategory,
}

impl<'a, E: EnrichedCategory> CatMultifunctor for FromEnriched<'a, E> {
    type Cat = E::Cat;

    fn source(&self) -> &FiniteMulticategory {
        &self.params.multicat
    }
    fn cat(&self) -> &E::Cat {
        self.enriched.cat()
    }
    fn samples(&self, a: usize) -> Vec<Ob<E::Cat>> {
        match self.params.kinds[a] {
            Param::Pair(s, t) => self.enriched.hom_samples(s, t),
            Param::Module(_) => Vec::new(),
        }
    }
    fn contains(&self, a: usize, x: &Ob<E::Cat>) -> bool {
        match self.params.kinds[a] {
            Param::Pair(s, t) => self.enriched.in_hom(s, t, x),
            Param::Module(_) => false,
        }
    }
    fn apply(&self, f: &MultiMor, xs: &[Ob<E::Cat>]) -> Ob<E::Cat> {
        let Param::Pair(s, _) = self.params.kinds[f.target] else { panic!("no module objects") };
        match xs.split_first() {
            None => self.enriched.unit(s),
            Some((x, rest)) => rest.iter().fold(x.clone(), |acc, y| self.enriched.compose(&acc, y)),
        }
    }
    fn apply_mor(&self, f: &MultiMor, xs: &[Mor<E::Cat>]) -> Mor<E::Cat> {
        match xs.split_first() {
            None => self.cat().identity(&self.apply(f, &[])),
            Some((x, rest)) => rest.iter().fold(x.clone(), |acc, y| self.enriched.compose_mor(&acc, y)),
        }
    }
}

/// The multifunctor out of `M_S` of an enriched category with a right
/// module: module-valued morphisms go to iterated action.
pub struct FromModule<'a, E> {
    pub module: &'a E,
    pub params: &'a ParameterMulticategory,
}

impl<'a, E: EnrichedModule> FromModule<'a, E> {
    fn ring(&self) -> FromEnriched<'a, E> {
        FromEnriched { enriched: self.module, params: self.params }
    }
}

impl<'a, E: EnrichedModule> CatMultifunctor for FromModule<'a, E> {
    type Cat = E::Cat;

    fn source(&self) -> &FiniteMulticategory {
        &self.params.multicat
    }
    fn cat(&self) -> &E::Cat {
        self.module.cat()
    }
    fn samples(&self, a: usize) -> Vec<Ob<E::Cat>> {
        match self.params.kinds[a] {
            Param::Pair(..) => self.ring().samples(a),
            Param::Module(s) => self.module.module_samples(s),
        }
    }
    fn contains(&self, a: usize, x: &Ob<E::Cat>) -> bool {
        match self.params.kinds[a] {
            Param::Pair(..) => self.ring().contains(a, x),
            Param::Module(s) => self.module.in_module(s, x),
        }
    }
    fn apply(&self, f: &MultiMor, xs: &[Ob<E::Cat>]) -> Ob<E::Cat> {
        match self.params.kinds[f.target] {
            Param::Pair(..) => self.ring().apply(f, xs),
            Param::Module(_) => xs[1..].iter().fold(xs[0].clone(), |acc, r| self.module.act(&acc, r)),
        }
    }
    fn apply_mor(&self, f: &MultiMor, xs: &[Mor<E::Cat>]) -> Mor<E::Cat> {
        match self.params.kinds[f.target] {
            Param::Pair(..) => self.ring().apply_mor(f, xs),
            Param::Module(_) => xs[1..].iter().fold(xs[0].clone(), |acc, r| self.module.act_mor(&acc, r)),
        }
    }
}

/// Restriction of a multifunctor out of `M_S` to `R_S`, whose objects
/// carry the same numbers.
pub struct Restricted<'a, F> {
    pub functor: &'a F,
    pub source: &'a FiniteMulticategory,
}

impl<'a, F: CatMultifunctor> CatMultifunctor for Restricted<'a, F> {
    type Cat = F::Cat;

    fn source(&self) -> &FiniteMulticategory {
        self.source
    }
    fn cat(&self) -> &F::Cat {
        self.functor.cat()
    }
    fn samples(&self, a: usize) -> Vec<Ob<F::Cat>> {
        self.functor.samples(a)
    }
    fn contains(&self, a: usize, x: &Ob<F::Cat>) -> bool {
        self.functor.contains(a, x)
    }
    fn apply(&self, f: &MultiMor, xs: &[Ob<F::Cat>]) -> Ob<F::Cat> {
        self.functor.apply(f, xs)
    }
    fn apply_mor(&self, f: &MultiMor, xs: &[Mor<F::Cat>]) -> Mor<F::Cat> {
        self.functor.apply_mor(f, xs)
    }
}

/// Multifunctor → enriched category → multifunctor is the identity on
/// tables, and so is enriched category → multifunctor → enriched
/// category on units and sampled composites.
pub fn check_enriched_round_trip<F: CatMultifunctor>(
    functor: &F,
    params: &ParameterMulticategory,
    bounds: MultiBounds,
) -> Report {
    let mut report = Report::new("enriched repackaging");
    let e = Repackaged { functor, params };
    report.merge(check_enriched(&e));
    let back = FromEnriched { enriched: &e, params };
    report.merge(compare_multifunctors(
        "multifunctor round trip",
        &Restricted { functor, source: &params.multicat },
        &back,
        bounds,
    ));
    let again = Repackaged { functor: &back, params };
    report.merge(compare_enriched("enriched round trip", &e, &again));
    report
}

/// The module version: the multifunctor out of `M_S` restricts to
/// `ring` on `R_S`, and both round trips are the identity.
pub fn check_module_round_trip<F, R>(
    functor: &F,
    ring: &R,
    ms: &ParameterMulticategory,
    rs: &ParameterMulticategory,
    bounds: MultiBounds,
) -> Report
where
    F: CatMultifunctor,
    R: CatMultifunctor<Cat = F::Cat>,
{
    let mut report = Report::new("module repackaging");
    report.merge(compare_multifunctors(
        "restriction to the ring",
        ring,
        &Restricted { functor, source: &rs.multicat },
        bounds,
    ));
    let e = Repackaged { functor, params: ms };
    report.merge(check_enriched_module(&e));
    let back = FromModule { module: &e, params: ms };
    report.merge(compare_multifunctors("multifunctor round trip", functor, &back, bounds));
    let again = Repackaged { functor: &back, params: ms };
    let mut modules = compare_enriched("enriched round trip", &e, &again);
    for s in 0..ms.size {
        for m in e.module_samples(s) {
            for t in 0..ms.size {
                for r in e.hom_samples(s, t) {
                    modules.check(e.act(&m, &r) == again.act(&m, &r), "action", || format!("{m:?}, {r:?}"));
                }
            }
        }
    }
    report.merge(modules);
    report
}

fn compare_enriched<A, B>(name: &str, a: &A, b: &B) -> Report
where
    A: EnrichedCategory,
    B: EnrichedCategory<Cat = A::Cat>,
{
    let mut report = Report::new(name);
    let n = a.size();
    for s in 0..n {
        report.check(a.unit(s) == b.unit(s), "units", || s.to_string());
        for t in 0..n {
            for x in a.hom_samples(s, t) {
                for u in 0..n {
                    for y in a.hom_samples(t, u) {
                        report.check(a.compose(&x, &y) == b.compose(&x, &y), "composition", || format!("{x:?}, {y:?}"));
                    }
                }
            }
        }
    }
    report
}

/// A transformation between multifunctors: a functor per object.
pub trait MultiTransformation {
    type Cat: Category;

    fn component(&self, a: usize, x: &Ob<Self::Cat>) -> Ob<Self::Cat>;
    fn component_mor(&self, a: usize, f: &Mor<Self::Cat>) -> Mor<Self::Cat>;
}

pub struct IdentityTransformation;

impl MultiTransformation for IdentityTransformation {
    type Cat = SpanCat;

    fn component(&self, _a: usize, x: &Span) -> Span {
        x.clone()
    }
    fn component_mor(&self, _a: usize, f: &SpanIso) -> SpanIso {
        f.clone()
    }
}

/// `η_b ∘ F(f) = G(f) ∘ (η_{a₁} × … × η_{aₙ})` for every morphism `f`
/// within the arity bound, on sampled objects and automorphisms, plus
/// functoriality and typing of each component.
pub fn check_multinatural<F, G, T>(f: &F, g: &G, eta: &T, bounds: MultiBounds) -> Report
where
    F: CatMultifunctor,
    G: CatMultifunctor<Cat = F::Cat>,
    T: MultiTransformation<Cat = F::Cat>,
{
    let mut report = Report::new("multinatural transformation");
    let cat = f.cat();
    let src = f.source();
    for a in 0..src.object_count() {
        for x in f.samples(a) {
            let ex = eta.component(a, &x);
            report.check(g.contains(a, &ex), "component typing", || format!("{} on {x:?}", src.names[a]));
            report.check(eta.component_mor(a, &cat.identity(&x)) == cat.identity(&ex), "component identities", || {
                format!("{x:?}")
            });
            let autos = cat.hom_limited(&x, &x, bounds.hom_limit);
            for p in &autos {
                for q in &autos {
                    let lhs = eta.component_mor(a, &cat.compose(p, q));
                    let rhs = cat.compose(&eta.component_mor(a, p), &eta.component_mor(a, q));
                    report.check(lhs == rhs, "component composition", || format!("{p:?} then {q:?}"));
                }
            }
        }
    }
    for m in src.morphisms().into_iter().filter(|m| m.arity() <= bounds.max_arity) {
        for xs in object_tuples(f, &m.sources) {
            let lhs = eta.component(m.target, &f.apply(&m, &xs));
            let moved: Vec<_> = m.sources.iter().zip(&xs).map(|(&a, x)| eta.component(a, x)).collect();
            report.check(lhs == g.apply(&m, &moved), "naturality", || format!("{m:?} on {xs:?}"));
            for phis in automorphism_tuples(cat, &xs, bounds.hom_limit) {
                let lhs = eta.component_mor(m.target, &f.apply_mor(&m, &phis));
                let moved: Vec<_> = m.sources.iter().zip(&phis).map(|(&a, p)| eta.component_mor(a, p)).collect();
                report
                    .check(lhs == g.apply_mor(&m, &moved), "naturality on morphisms", || format!("{m:?} on {phis:?}"));
            }
        }
    }
    report
}

/// Spans between the ring's orbits with lex pullback composition, and
/// optionally spans `X → G/H` acted on by postcomposition.
pub struct SpanEnriched<'a> {
    pub ring: &'a SpanRing,
    modules: Vec<Vec<Span>>,
    base: Option<GSet>,
}

impl<'a> SpanEnriched<'a> {
    pub fn new(ring: &'a SpanRing) -> Self {
        Self { ring, modules: vec![Vec::new(); ring.orbits.len()], base: None }
    }

    /// With the module of spans `X → G/H`, apex at most `max_apex`.
    pub fn with_module(ring: &'a SpanRing, base: &GSet, max_apex: usize) -> Result<Self> {
        let modules = ring
            .orbits
            .iter()
            .map(|o| crate::burnside::spans_up_to_iso(&ring.group, base, o, max_apex))
            .collect::<Result<_>>()?;
        Ok(Self { ring, modules, base: Some(base.clone()) })
    }
}

impl<'a> EnrichedCategory for SpanEnriched<'a> {
    type Cat = SpanCat;

    fn size(&self) -> usize {
        self.ring.orbits.len()
    }
    fn cat(&self) -> &SpanCat {
        CatRing::cat(self.ring)
    }
    fn hom_samples(&self, s: usize, t: usize) -> Vec<Span> {
        CatRing::samples(self.ring, &s, &t)
    }
    fn in_hom(&self, s: usize, t: usize, x: &Span) -> bool {
        x.source() == &self.ring.orbits[s] && x.target() == &self.ring.orbits[t]
    }
    fn unit(&self, s: usize) -> Span {
        Span::unit(&self.ring.orbits[s])
    }
    fn compose(&self, x: &Span, y: &Span) -> Span {
        x.compose(y).expect("composable")
    }
    fn compose_mor(&self, f: &SpanIso, g: &SpanIso) -> SpanIso {
        f.compose_horizontal(g).expect("composable")
    }
}

impl<'a> EnrichedModule for SpanEnriched<'a> {
    fn module_samples(&self, s: usize) -> Vec<Span> {
        self.modules[s].clone()
    }
    fn in_module(&self, s: usize, x: &Span) -> bool {
        self.base.as_ref() == Some(x.source()) && x.target() == &self.ring.orbits[s]
    }
    fn act(&self, m: &Span, r: &Span) -> Span {
        m.compose(r).expect("composable")
    }
    fn act_mor(&self, f: &SpanIso, g: &SpanIso) -> SpanIso {
        f.compose_horizontal(g).expect("composable")
    }
}

/// The n-ary composite of a chain of spans in one step: the apex is the
/// set of tuples `(a₁, …, aₙ)` with matching legs in lexicographic
/// order. Formal units are skipped. Returns the tuples.
pub fn multi_pullback(spans: &[Span]) -> (Span, Vec<Vec<usize>>) {
    let concrete: Vec<&Span> = spans.iter().filter(|s| !s.is_unit()).collect();
    if concrete.is_empty() {
        let s = spans[0].clone();
        let tuples = (0..s.apex_size()).map(|x| vec![x]).collect();
        return (s, tuples);
    }
    let data: Vec<_> = concrete.iter().map(|s| s.data()).collect();
    let mut tuples: Vec<Vec<usize>> = (0..data[0].apex.size()).map(|x| vec![x]).collect();
    for (prev, d) in data.iter().zip(&data[1..]) {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                let z = prev.right[*t.last().expect("nonempty")];
                (0..d.apex.size()).filter(move |&y| d.left[y] == z).map(move |y| [t.clone(), vec![y]].concat())
            })
            .collect();
    }
    let index: HashMap<&Vec<usize>, usize> = tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let group_order = data[0].apex.action().len();
    let action = (0..group_order)
        .map(|g| {
            tuples
                .iter()
                .map(|t| index[&t.iter().zip(&data).map(|(&x, d)| d.apex.act(g, x)).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    let (first, last) = (&data[0], &data[data.len() - 1]);
    let span = Span::from_parts_unchecked(
        spans[0].source().clone(),
        spans[spans.len() - 1].target().clone(),
        GSet::new_unchecked(tuples.len(), action),
        tuples.iter().map(|t| first.left[t[0]]).collect(),
        tuples.iter().map(|t| last.right[t[t.len() - 1]]).collect(),
    );
    (span, tuples)
}

/// Spans with every n-ary composite computed as one n-fold pullback,
/// on `R_S` or `M_S`.
pub struct IteratedPullback<'a> {
    pub spans: &'a SpanEnriched<'a>,
    pub params: &'a ParameterMulticategory,
}

impl<'a> CatMultifunctor for IteratedPullback<'a> {
    type Cat = SpanCat;

    fn source(&self) -> &FiniteMulticategory {
        &self.params.multicat
    }
    fn cat(&self) -> &SpanCat {
        self.spans.cat()
    }
    fn samples(&self, a: usize) -> Vec<Span> {
        match self.params.kinds[a] {
            Param::Pair(s, t) => self.spans.hom_samples(s, t),
            Param::Module(s) => self.spans.module_samples(s),
        }
    }
    fn contains(&self, a: usize, x: &Span) -> bool {
        match self.params.kinds[a] {
            Param::Pair(s, t) => self.spans.in_hom(s, t, x),
            Param::Module(s) => self.spans.in_module(s, x),
        }
    }
    fn apply(&self, f: &MultiMor, xs: &[Span]) -> Span {
        match self.params.kinds[f.target] {
            Param::Pair(s, _) if xs.is_empty() => self.spans.unit(s),
            _ => multi_pullback(xs).0,
        }
    }
    fn apply_mor(&self, f: &MultiMor, xs: &[SpanIso]) -> SpanIso {
        if xs.is_empty() {
            return SpanIso::identity(&self.apply(f, &[]));
        }
        let sources: Vec<Span> = xs.iter().map(|x| x.source.clone()).collect();
        let targets: Vec<Span> = xs.iter().map(|x| x.target.clone()).collect();
        let (source, from) = (self.apply(f, &sources), multi_pullback(&sources).1);
        let (target, to) = (self.apply(f, &targets), multi_pullback(&targets).1);
        let maps: Vec<&Vec<usize>> = xs.iter().filter(|x| !x.source.is_unit()).map(|x| &x.map).collect();
        let position: HashMap<&Vec<usize>, usize> = to.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let map = if maps.is_empty() {
            xs[0].map.clone()
        } else {
            from.iter().map(|t| position[&t.iter().zip(&maps).map(|(&x, m)| m[x]).collect::<Vec<_>>()]).collect()
        };
        SpanIso { source, target, map }
    }
}

/// `x ↦ x ⊔ x` at one object and the identity elsewhere: a functor at
/// each object that is not natural.
pub struct DoublingAt(pub usize);

impl MultiTransformation for DoublingAt {
    type Cat = SpanCat;

    fn component(&self, a: usize, x: &Span) -> Span {
        if a == self.0 {
            x.sum(x).expect("same ends")
        } else {
            x.clone()
        }
    }
    fn component_mor(&self, a: usize, f: &SpanIso) -> SpanIso {
        if a != self.0 {
            return f.clone();
        }
        let n = f.map.len();
        let map = f.map.iter().copied().chain(f.map.iter().map(|&y| y + n)).collect();
        SpanIso { source: self.component(a, &f.source), target: self.component(a, &f.target), map }
    }
}

/// A multifunctor with one functor replaced by a constant.
pub struct ConstantAt<'a, F: CatMultifunctor> {
    pub functor: &'a F,
    pub at: MultiMor,
    pub value: Ob<F::Cat>,
}

impl<'a, F: CatMultifunctor> CatMultifunctor for ConstantAt<'a, F> {
    type Cat = F::Cat;

    fn source(&self) -> &FiniteMulticategory {
        self.functor.source()
    }
    fn cat(&self) -> &F::Cat {
        self.functor.cat()
    }
    fn samples(&self, a: usize) -> Vec<Ob<F::Cat>> {
        self.functor.samples(a)
    }
    fn contains(&self, a: usize, x: &Ob<F::Cat>) -> bool {
        self.functor.contains(a, x)
    }
    fn apply(&self, f: &MultiMor, xs: &[Ob<F::Cat>]) -> Ob<F::Cat> {
        if *f == self.at {
            self.value.clone()
        } else {
            self.functor.apply(f, xs)
        }
    }
    fn apply_mor(&self, f: &MultiMor, xs: &[Mor<F::Cat>]) -> Mor<F::Cat> {
        if *f == self.at {
            self.cat().identity(&self.value)
        } else {
            self.functor.apply_mor(f, xs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{subgroups, FiniteGroup};

    fn c2_ring() -> SpanRing {
        let g = FiniteGroup::cyclic(2);
        SpanRing::new(&g, subgroups(&g).unwrap(), 2).unwrap()
    }

    const BOUNDS: MultiBounds = MultiBounds { max_arity: 3, hom_limit: 2 };

    #[test]
    fn one_point_gives_the_associative_operad() {
        let rs = build_rs(1, 4).unwrap();
        assert_eq!(rs.multicat.object_count(), 1);
        for k in 0..=4 {
            assert_eq!(rs.multicat.hom_size(&vec![0; k], 0), 1);
        }
        assert!(rs.multicat.check_axioms().passed());
    }

    #[test]
    fn parameter_multicategories_satisfy_the_axioms() {
        for size in 1..=3 {
            for c in [build_rs(size, 4).unwrap(), build_ms(size, 4).unwrap()] {
                let r = c.multicat.check_axioms();
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn two_points_hom_pattern() {
        let rs = build_rs(2, 3).unwrap();
        let p = |s, t| rs.pair(s, t);
        assert_eq!(rs.multicat.object_count(), 4);
        assert_eq!(rs.multicat.hom_size(&[p(0, 1), p(1, 0)], p(0, 0)), 1);
        assert_eq!(rs.multicat.hom_size(&[p(0, 1), p(0, 1)], p(0, 1)), 0);
        assert_eq!(rs.multicat.hom_size(&[], p(1, 1)), 1);
        assert_eq!(rs.multicat.hom_size(&[], p(0, 1)), 0);
    }

    #[test]
    fn module_multicategory_extends_the_ring() {
        let (rs, ms) = (build_rs(2, 3).unwrap(), build_ms(2, 3).unwrap());
        let restricted = ms.multicat.full_sub(&(0..4).collect::<Vec<_>>()).unwrap();
        assert_eq!(restricted, rs.multicat);
        assert_eq!(ms.multicat.hom_size(&[ms.module(0), ms.pair(0, 1)], ms.module(1)), 1);
        assert_eq!(ms.multicat.hom_size(&[ms.pair(0, 1), ms.module(0)], ms.module(1)), 0);
        assert!(ms.multicat.check_axioms().passed());
        let inc = MultifunctorData::inclusion(&rs.multicat, &(0..4).collect::<Vec<_>>());
        assert!(check_multifunctor_into(&rs.multicat, &ms.multicat, &inc).passed());
    }

    #[test]
    fn broken_composite_violates_associativity() {
        let mut c = FiniteMulticategory::graded_monoid(2, 3).unwrap();
        assert!(c.check_axioms().passed());
        let f = MultiMor { sources: vec![0, 0], target: 0, index: 1 };
        let g = MultiMor { sources: vec![0], target: 0, index: 1 };
        c.set_composite(&f, &[g.clone(), g], 0);
        let r = c.check_axioms();
        assert!(r.failed_diagrams().contains(&"associativity"), "{r}");
    }

    #[test]
    fn identity_multifunctor_is_accepted() {
        let rs = build_rs(2, 3).unwrap();
        let r = check_multifunctor_into(&rs.multicat, &rs.multicat, &MultifunctorData::identity(&rs.multicat));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn span_categories_form_a_multifunctor() {
        let ring = c2_ring();
        let rs = build_rs(2, 3).unwrap();
        let e = SpanEnriched::new(&ring);
        let f = FromEnriched { enriched: &e, params: &rs };
        let r = check_multifunctor(&f, BOUNDS);
        assert!(r.passed(), "{r}");
        assert!(!r.unchecked.is_empty());
        assert!(check_enriched_round_trip(&f, &rs, BOUNDS).passed());
    }

    #[test]
    fn constant_composition_is_rejected() {
        let ring = c2_ring();
        let rs = build_rs(2, 3).unwrap();
        let e = SpanEnriched::new(&ring);
        let f = FromEnriched { enriched: &e, params: &rs };
        let at = rs.unique(vec![rs.pair(0, 1), rs.pair(1, 1)], rs.pair(0, 1)).unwrap();
        let value = Span::empty(&ring.orbits[0], &ring.orbits[1]);
        let broken = ConstantAt { functor: &f, at, value };
        let r = check_multifunctor(&broken, BOUNDS);
        assert!(r.failed_diagrams().contains(&"composites"), "{r}");
    }

    #[test]
    fn module_multifunctor_round_trips() {
        let ring = c2_ring();
        let g = &ring.group;
        let (rs, ms) = (build_rs(2, 3).unwrap(), build_ms(2, 3).unwrap());
        let e = SpanEnriched::with_module(&ring, &GSet::regular(g), 2).unwrap();
        let m = FromModule { module: &e, params: &ms };
        let r = check_multifunctor(&m, BOUNDS);
        assert!(r.passed(), "{r}");
        let ringf = FromEnriched { enriched: &e, params: &rs };
        let r = check_module_round_trip(&m, &ringf, &ms, &rs, BOUNDS);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn one_step_pullbacks_agree_with_iterated_composition() {
        let ring = c2_ring();
        let ms = build_ms(2, 3).unwrap();
        let e = SpanEnriched::with_module(&ring, &GSet::regular(&ring.group), 2).unwrap();
        let iterated = FromModule { module: &e, params: &ms };
        let direct = IteratedPullback { spans: &e, params: &ms };
        let r = check_multinatural(&iterated, &direct, &IdentityTransformation, BOUNDS);
        assert!(r.passed(), "{r}");
        let bad = check_multinatural(&iterated, &direct, &DoublingAt(ms.pair(0, 1)), BOUNDS);
        assert!(bad.failed_diagrams().contains(&"naturality"), "{bad}");
    }
}
