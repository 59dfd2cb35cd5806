//! Finite categories presented by hom enumeration, functors between them,
//! and an exhaustive equivalence checker.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use crate::report::Report;

pub trait Category {
    type Ob: Clone + Eq + Hash + Debug;
    type Mor: Clone + Eq + Hash + Debug;

    fn source(&self, f: &Self::Mor) -> Self::Ob;
    fn target(&self, f: &Self::Mor) -> Self::Ob;
    fn identity(&self, a: &Self::Ob) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn hom(&self, a: &Self::Ob, b: &Self::Ob) -> Vec<Self::Mor>;

    /// At most `limit` elements of `hom(a, b)`.
    fn hom_limited(&self, a: &Self::Ob, b: &Self::Ob, limit: usize) -> Vec<Self::Mor> {
        let mut h = self.hom(a, b);
        h.truncate(limit);
        h
    }

    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        let (a, b) = (self.source(f), self.target(f));
        let (ida, idb) = (self.identity(&a), self.identity(&b));
        self.hom(&b, &a).into_iter().find(|g| self.compose(f, g) == ida && self.compose(g, f) == idb)
    }

    fn find_isomorphism(&self, a: &Self::Ob, b: &Self::Ob) -> Option<Self::Mor> {
        self.hom(a, b).into_iter().find(|f| self.inverse(f).is_some())
    }

    /// Whether `f` is a morphism of this category at all.
    fn is_morphism(&self, _f: &Self::Mor) -> bool {
        true
    }

    /// Chosen coproduct, when the category has one for this pair.
    fn coproduct(&self, _a: &Self::Ob, _b: &Self::Ob) -> Option<Self::Ob> {
        None
    }
}

pub trait Functor {
    type Src: Category;
    type Tgt: Category;

    fn map_ob(&self, a: &<Self::Src as Category>::Ob) -> <Self::Tgt as Category>::Ob;
    fn map_mor(&self, f: &<Self::Src as Category>::Mor) -> <Self::Tgt as Category>::Mor;
}

/// Identity functor on a category.
pub struct IdentityFunctor<C>(std::marker::PhantomData<C>);

impl<C> Default for IdentityFunctor<C> {
    fn default() -> Self {
        Self(std::marker::PhantomData)
    }
}

impl<C: Category> Functor for IdentityFunctor<C> {
    type Src = C;
    type Tgt = C;
    fn map_ob(&self, a: &C::Ob) -> C::Ob {
        a.clone()
    }
    fn map_mor(&self, f: &C::Mor) -> C::Mor {
        f.clone()
    }
}

/// Functor laws on the sampled objects: endpoints, identities and
/// composites of sampled morphisms.
pub fn check_functor<F: Functor>(
    name: &str,
    src: &F::Src,
    tgt: &F::Tgt,
    functor: &F,
    samples: &[<F::Src as Category>::Ob],
    hom_limit: usize,
) -> Report {
    let mut report = Report::new(name);
    for a in samples {
        let fa = functor.map_ob(a);
        report.check(functor.map_mor(&src.identity(a)) == tgt.identity(&fa), "identity", || format!("{a:?}"));
        for b in samples {
            for f in src.hom_limited(a, b, hom_limit) {
                let ff = functor.map_mor(&f);
                report.check(tgt.source(&ff) == fa && tgt.target(&ff) == functor.map_ob(b), "endpoints", || {
                    format!("{f:?}")
                });
                for c in samples {
                    for g in src.hom_limited(b, c, hom_limit) {
                        let lhs = functor.map_mor(&src.compose(&f, &g));
                        let rhs = tgt.compose(&ff, &functor.map_mor(&g));
                        report.check(lhs == rhs, "composition", || format!("{f:?} then {g:?}"));
                    }
                }
            }
        }
    }
    report
}

/// Full faithfulness on every sampled hom set and essential surjectivity
/// onto every sampled target object.
pub fn check_equivalence<F: Functor>(
    name: &str,
    src: &F::Src,
    tgt: &F::Tgt,
    functor: &F,
    src_samples: &[<F::Src as Category>::Ob],
    tgt_samples: &[<F::Tgt as Category>::Ob],
) -> Report {
    let mut report = Report::new(name);
    let images: Vec<_> = src_samples.iter().map(|a| functor.map_ob(a)).collect();
    for (a, fa) in src_samples.iter().zip(&images) {
        for (b, fb) in src_samples.iter().zip(&images) {
            let hom = src.hom(a, b);
            let mapped: HashSet<_> = hom.iter().map(|f| functor.map_mor(f)).collect();
            report.check(mapped.len() == hom.len(), "faithful", || format!("{a:?} -> {b:?}"));
            let target_hom = tgt.hom(fa, fb);
            report.check(
                target_hom.len() == mapped.len() && target_hom.iter().all(|g| mapped.contains(g)),
                "full",
                || format!("{a:?} -> {b:?}: {} of {} morphisms hit", mapped.len(), target_hom.len()),
            );
        }
    }
    for y in tgt_samples {
        let hit = images.iter().any(|fa| tgt.find_isomorphism(fa, y).is_some());
        report.check(hit, "essentially surjective", || format!("{y:?} is not isomorphic to an image"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{CommMonoid, LabelCat};

    struct Constant(usize);

    impl Functor for Constant {
        type Src = LabelCat;
        type Tgt = LabelCat;
        fn map_ob(&self, _: &usize) -> usize {
            self.0
        }
        fn map_mor(&self, _: &crate::table::LabelMor) -> crate::table::LabelMor {
            crate::table::LabelMor::identity(self.0)
        }
    }

    #[test]
    fn identity_is_an_equivalence() {
        let c = LabelCat::new(CommMonoid::cyclic(3));
        let objs = [0, 1];
        let r = check_equivalence("id", &c, &c, &IdentityFunctor::<LabelCat>::default(), &objs, &objs);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn constant_functor_misses_an_object() {
        let c = LabelCat::new(CommMonoid::trivial());
        let r = check_equivalence("const", &c, &c, &Constant(0), &[0], &[0, 1]);
        assert_eq!(r.failed_diagrams(), vec!["essentially surjective"]);
        let c = LabelCat::new(CommMonoid::cyclic(2));
        let r = check_equivalence("const", &c, &c, &Constant(0), &[0], &[0]);
        assert_eq!(r.failed_diagrams(), vec!["faithful", "full"]);
    }
}
