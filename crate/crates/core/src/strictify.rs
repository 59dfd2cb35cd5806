//! Rings and modules of categories on an object set, pseudo-linear maps,
//! the thickened module and strictification.
//!
//! A ring `R` on an index set `S` has categories `R(s,t)`, strictly
//! associative and unital multiplication `R(s,t) × R(t,u) → R(s,u)`, and
//! units `1_s ∈ R(s,s)`. A module has categories `M(s)` and a strict action
//! `R(s,t) × M(t) → M(s)`. A pseudo-linear map `f: M → M'` commutes with
//! the action up to cells `θ(r,m): r·f(m) → f(r·m)`.
//!
//! Every category here is infinite or large in practice, so each instance
//! supplies finite samples and the checks run over those.

use std::fmt::Debug;
use std::hash::Hash;

use crate::category::{check_equivalence, Category, Functor};
use crate::report::Report;

pub type Ob<C> = <C as Category>::Ob;
pub type Mor<C> = <C as Category>::Mor;
pub type RingOb<R> = Ob<<R as CatRing>::Cat>;
pub type RingMor<R> = Mor<<R as CatRing>::Cat>;
pub type ModOb<M> = Ob<<M as CatModule>::Cat>;
pub type ModMor<M> = Mor<<M as CatModule>::Cat>;
pub type Idx<R> = <R as CatRing>::Idx;

pub trait CatRing {
    type Idx: Clone + Eq + Hash + Debug;
    type Cat: Category;

    fn cat(&self) -> &Self::Cat;
    fn indices(&self) -> Vec<Self::Idx>;
    /// `(s, t)` with `r ∈ R(s,t)`.
    fn ends(&self, r: &RingOb<Self>) -> (Self::Idx, Self::Idx);
    fn samples(&self, s: &Self::Idx, t: &Self::Idx) -> Vec<RingOb<Self>>;
    fn unit(&self, s: &Self::Idx) -> RingOb<Self>;
    fn mul(&self, a: &RingOb<Self>, b: &RingOb<Self>) -> RingOb<Self>;
    fn mul_mor(&self, f: &RingMor<Self>, g: &RingMor<Self>) -> RingMor<Self>;
}

pub trait CatModule {
    type Ring: CatRing;
    type Cat: Category;

    fn ring(&self) -> &Self::Ring;
    fn cat(&self) -> &Self::Cat;
    fn level(&self, m: &ModOb<Self>) -> Idx<Self::Ring>;
    fn samples(&self, s: &Idx<Self::Ring>) -> Vec<ModOb<Self>>;
    fn act(&self, r: &RingOb<Self::Ring>, m: &ModOb<Self>) -> ModOb<Self>;
    fn act_mor(&self, f: &RingMor<Self::Ring>, g: &ModMor<Self>) -> ModMor<Self>;
}

pub trait PseudoLinearMap {
    type Ring: CatRing;
    type Src: CatModule<Ring = Self::Ring>;
    type Tgt: CatModule<Ring = Self::Ring>;

    fn source(&self) -> &Self::Src;
    fn target(&self) -> &Self::Tgt;
    fn map_ob(&self, m: &ModOb<Self::Src>) -> ModOb<Self::Tgt>;
    fn map_mor(&self, f: &ModMor<Self::Src>) -> ModMor<Self::Tgt>;
    /// `θ(r,m): r·f(m) → f(r·m)`.
    fn theta(&self, r: &RingOb<Self::Ring>, m: &ModOb<Self::Src>) -> ModMor<Self::Tgt>;
}

/// Sampled morphisms between sampled objects, at most `limit` per pair.
fn sampled_morphisms<C: Category>(cat: &C, objs: &[C::Ob], limit: usize) -> Vec<C::Mor> {
    let mut out = Vec::new();
    for a in objs {
        for b in objs {
            out.extend(cat.hom_limited(a, b, limit));
        }
    }
    out
}

/// Strict associativity and unitality of the multiplication and action,
/// on objects and on sampled morphisms, plus functoriality of both.
pub fn validate_module<M: CatModule>(module: &M, hom_limit: usize) -> Report {
    let mut report = Report::new("module");
    let ring = module.ring();
    let rc = ring.cat();
    let mc = module.cat();
    let idx = ring.indices();

    for s in &idx {
        for t in &idx {
            let rst = ring.samples(s, t);
            let rst_mor = sampled_morphisms(rc, &rst, hom_limit);
            for r in &rst {
                report.check(ring.ends(r) == (s.clone(), t.clone()), "ring ends", || format!("{r:?}"));
                report.check(ring.mul(&ring.unit(s), r) == *r, "ring left unit", || format!("{r:?}"));
                report.check(ring.mul(r, &ring.unit(t)) == *r, "ring right unit", || format!("{r:?}"));
            }
            for f in &rst_mor {
                let us = rc.identity(&ring.unit(s));
                let ut = rc.identity(&ring.unit(t));
                report.check(ring.mul_mor(&us, f) == *f, "ring left unit on morphisms", || format!("{f:?}"));
                report.check(ring.mul_mor(f, &ut) == *f, "ring right unit on morphisms", || format!("{f:?}"));
            }
            for u in &idx {
                let rtu = ring.samples(t, u);
                let rtu_mor = sampled_morphisms(rc, &rtu, hom_limit);
                for a in &rst {
                    for b in &rtu {
                        let ab = ring.mul(a, b);
                        report
                            .check(ring.ends(&ab) == (s.clone(), u.clone()), "ring ends", || format!("{a:?} * {b:?}"));
                        report.check(
                            ring.mul_mor(&rc.identity(a), &rc.identity(b)) == rc.identity(&ab),
                            "multiplication preserves identities",
                            || format!("{a:?} * {b:?}"),
                        );
                        for v in &idx {
                            for c in ring.samples(u, v) {
                                report.check(
                                    ring.mul(&ab, &c) == ring.mul(a, &ring.mul(b, &c)),
                                    "ring associativity",
                                    || format!("({a:?}, {b:?}, {c:?})"),
                                );
                            }
                        }
                    }
                }
                for f in &rst_mor {
                    for g in &rtu_mor {
                        let fg = ring.mul_mor(f, g);
                        for v in &idx {
                            for h in sampled_morphisms(rc, &ring.samples(u, v), 1) {
                                report.check(
                                    ring.mul_mor(&fg, &h) == ring.mul_mor(f, &ring.mul_mor(g, &h)),
                                    "ring associativity on morphisms",
                                    || format!("({f:?}, {g:?}, {h:?})"),
                                );
                            }
                        }
                        check_interchange(
                            &mut report,
                            rc,
                            rc,
                            rc,
                            f,
                            g,
                            &|x, y| ring.mul_mor(x, y),
                            hom_limit,
                            "multiplication",
                        );
                    }
                }
            }
        }
    }

    for t in &idx {
        let mt = module.samples(t);
        let mt_mor = sampled_morphisms(mc, &mt, hom_limit);
        for m in &mt {
            report.check(module.level(m) == *t, "module level", || format!("{m:?}"));
            report.check(module.act(&ring.unit(t), m) == *m, "action unit", || format!("{m:?}"));
        }
        for phi in &mt_mor {
            let u = rc.identity(&ring.unit(t));
            report.check(module.act_mor(&u, phi) == *phi, "action unit on morphisms", || format!("{phi:?}"));
        }
        for s in &idx {
            let rst = ring.samples(s, t);
            let rst_mor = sampled_morphisms(rc, &rst, hom_limit);
            for r in &rst {
                for m in &mt {
                    let rm = module.act(r, m);
                    report.check(module.level(&rm) == *s, "action level", || format!("{r:?} . {m:?}"));
                    report.check(
                        module.act_mor(&rc.identity(r), &mc.identity(m)) == mc.identity(&rm),
                        "action preserves identities",
                        || format!("{r:?} . {m:?}"),
                    );
                    for q in &idx {
                        for r0 in ring.samples(q, s) {
                            report.check(
                                module.act(&ring.mul(&r0, r), m) == module.act(&r0, &rm),
                                "action associativity",
                                || format!("({r0:?}, {r:?}, {m:?})"),
                            );
                        }
                    }
                }
            }
            for f in &rst_mor {
                for phi in &mt_mor {
                    for q in &idx {
                        for f0 in sampled_morphisms(rc, &ring.samples(q, s), 1) {
                            report.check(
                                module.act_mor(&ring.mul_mor(&f0, f), phi)
                                    == module.act_mor(&f0, &module.act_mor(f, phi)),
                                "action associativity on morphisms",
                                || format!("({f0:?}, {f:?}, {phi:?})"),
                            );
                        }
                    }
                    check_interchange(
                        &mut report,
                        rc,
                        mc,
                        mc,
                        f,
                        phi,
                        &|x, y| module.act_mor(x, y),
                        hom_limit,
                        "action",
                    );
                }
            }
        }
    }
    report
}

/// `(g ∘ f) ⊗ (g' ∘ f') = (g ⊗ g') ∘ (f ⊗ f')` for sampled `g`, `g'`
/// leaving the targets of `f`, `f'`.
#[allow(clippy::too_many_arguments, clippy::type_complexity)]
fn check_interchange<A: Category, B: Category, C: Category>(
    report: &mut Report,
    a: &A,
    b: &B,
    c: &C,
    f: &A::Mor,
    f2: &B::Mor,
    tensor: &dyn Fn(&A::Mor, &B::Mor) -> C::Mor,
    hom_limit: usize,
    what: &str,
) {
    let (ta, tb) = (a.target(f), b.target(f2));
    let gs = a.hom_limited(&ta, &ta, hom_limit);
    let g2s = b.hom_limited(&tb, &tb, hom_limit);
    for g in &gs {
        for g2 in &g2s {
            let lhs = tensor(&a.compose(f, g), &b.compose(f2, g2));
            let rhs = c.compose(&tensor(f, f2), &tensor(g, g2));
            report.check(lhs == rhs, &format!("{what} is functorial"), || {
                format!("({f:?}, {f2:?}) then ({g:?}, {g2:?})")
            });
        }
    }
}

/// The θ square, unit and associativity pastings, invertibility of each
/// cell, functoriality of the levels and preservation of chosen
/// coproducts up to isomorphism.
pub fn validate_pseudo_linear<F: PseudoLinearMap>(map: &F, hom_limit: usize) -> Report {
    let mut report = Report::new("pseudo-linear map");
    let src = map.source();
    let tgt = map.target();
    let ring = src.ring();
    let rc = ring.cat();
    let sc = src.cat();
    let tc = tgt.cat();
    let idx = ring.indices();

    for t in &idx {
        let mt = src.samples(t);
        let mt_mor = sampled_morphisms(sc, &mt, hom_limit);
        for m in &mt {
            let fm = map.map_ob(m);
            report.check(tgt.level(&fm) == *t, "level", || format!("{m:?}"));
            report.check(map.map_mor(&sc.identity(m)) == tc.identity(&fm), "functor identity", || format!("{m:?}"));
            report.check(map.theta(&ring.unit(t), m) == tc.identity(&fm), "unit", || format!("{m:?}"));
            for n in &mt {
                if let Some(mn) = sc.coproduct(m, n) {
                    let ok = tc
                        .coproduct(&fm, &map.map_ob(n))
                        .map(|c| tc.find_isomorphism(&c, &map.map_ob(&mn)).is_some())
                        .unwrap_or(false);
                    report.check(ok, "coproduct", || format!("{m:?} + {n:?}"));
                }
            }
        }
        for phi in &mt_mor {
            for psi in sc.hom_limited(&sc.target(phi), &sc.target(phi), hom_limit) {
                report.check(
                    map.map_mor(&sc.compose(phi, &psi)) == tc.compose(&map.map_mor(phi), &map.map_mor(&psi)),
                    "functor composition",
                    || format!("{phi:?} then {psi:?}"),
                );
            }
        }
        for s in &idx {
            let rst = ring.samples(s, t);
            for r in &rst {
                for m in &mt {
                    let th = map.theta(r, m);
                    let ends_ok =
                        tc.source(&th) == tgt.act(r, &map.map_ob(m)) && tc.target(&th) == map.map_ob(&src.act(r, m));
                    let ends_ok = ends_ok && tc.is_morphism(&th);
                    if !report.check(ends_ok, "theta endpoints", || format!("({r:?}, {m:?})")) {
                        continue;
                    }
                    report.check(tc.inverse(&th).is_some(), "invertible", || format!("({r:?}, {m:?})"));
                    for q in &idx {
                        for r0 in ring.samples(q, s) {
                            let lhs = map.theta(&ring.mul(&r0, r), m);
                            let inner = tgt.act_mor(&rc.identity(&r0), &th);
                            let rhs = tc.compose(&inner, &map.theta(&r0, &src.act(r, m)));
                            report.check(lhs == rhs, "associativity", || format!("({r0:?}, {r:?}, {m:?})"));
                        }
                    }
                }
            }
            let rst_mor = sampled_morphisms(rc, &rst, hom_limit);
            for rho in &rst_mor {
                for phi in &mt_mor {
                    let (r, r2) = (rc.source(rho), rc.target(rho));
                    let (m, n) = (sc.source(phi), sc.target(phi));
                    let lhs = tc.compose(&tgt.act_mor(rho, &map.map_mor(phi)), &map.theta(&r2, &n));
                    let rhs = tc.compose(&map.theta(&r, &m), &map.map_mor(&src.act_mor(rho, phi)));
                    report.check(lhs == rhs, "naturality", || format!("({rho:?}, {phi:?})"));
                }
            }
        }
    }
    report
}

/// Category of the thickened module: objects `(r, m)` with `r ∈ R(s,t)`,
/// `m ∈ M(t)`; morphisms `(r,m) → (r',n)` are morphisms `r·m → r'·n`.
pub struct UnderlineCat<'a, M> {
    module: &'a M,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnderlineMor<O, R, F> {
    pub source: (R, O),
    pub target: (R, O),
    pub inner: F,
}

type UOb<M> = (RingOb<<M as CatModule>::Ring>, ModOb<M>);
type UMor<M> = UnderlineMor<ModOb<M>, RingOb<<M as CatModule>::Ring>, ModMor<M>>;

impl<'a, M: CatModule> UnderlineCat<'a, M> {
    fn realize(&self, a: &UOb<M>) -> ModOb<M> {
        self.module.act(&a.0, &a.1)
    }

    fn wrap(&self, a: &UOb<M>, b: &UOb<M>, inner: ModMor<M>) -> UMor<M> {
        UnderlineMor { source: a.clone(), target: b.clone(), inner }
    }
}

impl<'a, M: CatModule> Category for UnderlineCat<'a, M> {
    type Ob = UOb<M>;
    type Mor = UMor<M>;

    fn source(&self, f: &Self::Mor) -> Self::Ob {
        f.source.clone()
    }
    fn target(&self, f: &Self::Mor) -> Self::Ob {
        f.target.clone()
    }
    fn identity(&self, a: &Self::Ob) -> Self::Mor {
        self.wrap(a, a, self.module.cat().identity(&self.realize(a)))
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        self.wrap(&f.source, &g.target, self.module.cat().compose(&f.inner, &g.inner))
    }
    fn hom(&self, a: &Self::Ob, b: &Self::Ob) -> Vec<Self::Mor> {
        self.module.cat().hom(&self.realize(a), &self.realize(b)).into_iter().map(|f| self.wrap(a, b, f)).collect()
    }
    fn hom_limited(&self, a: &Self::Ob, b: &Self::Ob, limit: usize) -> Vec<Self::Mor> {
        let c = self.module.cat();
        c.hom_limited(&self.realize(a), &self.realize(b), limit).into_iter().map(|f| self.wrap(a, b, f)).collect()
    }
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        self.module.cat().inverse(&f.inner).map(|g| self.wrap(&f.target, &f.source, g))
    }
    fn find_isomorphism(&self, a: &Self::Ob, b: &Self::Ob) -> Option<Self::Mor> {
        self.module.cat().find_isomorphism(&self.realize(a), &self.realize(b)).map(|f| self.wrap(a, b, f))
    }
    /// `(r, m) ⊔ (r, n) = (r, m ⊔ n)`; pairs with different ring
    /// coordinates have no chosen coproduct.
    fn coproduct(&self, a: &Self::Ob, b: &Self::Ob) -> Option<Self::Ob> {
        if a.0 != b.0 {
            return None;
        }
        self.module.cat().coproduct(&a.1, &b.1).map(|m| (a.0.clone(), m))
    }
}

/// The thickened module `M̲`, strictly associative whenever `R` is.
pub struct Underline<'a, M> {
    module: &'a M,
    cat: UnderlineCat<'a, M>,
}

impl<'a, M: CatModule> Underline<'a, M> {
    pub fn new(module: &'a M) -> Self {
        Self { module, cat: UnderlineCat { module } }
    }

    pub fn base(&self) -> &'a M {
        self.module
    }

    /// The strict module map `(r, m) ↦ r·m`.
    pub fn counit(&self) -> Counit<'_, 'a, M> {
        Counit { underline: self }
    }

    /// `(1_s, m)`, the preimage of `m` under the counit.
    pub fn lift(&self, m: &ModOb<M>) -> UOb<M> {
        (self.module.ring().unit(&self.module.level(m)), m.clone())
    }
}

impl<'a, M: CatModule> CatModule for Underline<'a, M> {
    type Ring = M::Ring;
    type Cat = UnderlineCat<'a, M>;

    fn ring(&self) -> &Self::Ring {
        self.module.ring()
    }
    fn cat(&self) -> &Self::Cat {
        &self.cat
    }
    fn level(&self, m: &UOb<M>) -> Idx<M::Ring> {
        self.module.ring().ends(&m.0).0
    }
    fn samples(&self, s: &Idx<M::Ring>) -> Vec<UOb<M>> {
        let ring = self.module.ring();
        let mut out = Vec::new();
        for t in ring.indices() {
            let ms = self.module.samples(&t);
            for r in ring.samples(s, &t) {
                out.extend(ms.iter().map(|m| (r.clone(), m.clone())));
            }
        }
        out
    }
    fn act(&self, r: &RingOb<M::Ring>, m: &UOb<M>) -> UOb<M> {
        (self.module.ring().mul(r, &m.0), m.1.clone())
    }
    fn act_mor(&self, f: &RingMor<M::Ring>, g: &UMor<M>) -> UMor<M> {
        let ring = self.module.ring();
        let rc = ring.cat();
        let (r0, r1) = (rc.source(f), rc.target(f));
        UnderlineMor {
            source: (ring.mul(&r0, &g.source.0), g.source.1.clone()),
            target: (ring.mul(&r1, &g.target.0), g.target.1.clone()),
            inner: self.module.act_mor(f, &g.inner),
        }
    }
}

pub struct Counit<'u, 'a, M> {
    underline: &'u Underline<'a, M>,
}

impl<'u, 'a, M: CatModule> Functor for Counit<'u, 'a, M> {
    type Src = UnderlineCat<'a, M>;
    type Tgt = M::Cat;
    fn map_ob(&self, a: &UOb<M>) -> ModOb<M> {
        self.underline.cat.realize(a)
    }
    fn map_mor(&self, f: &UMor<M>) -> ModMor<M> {
        f.inner.clone()
    }
}

/// Thickens `M` and certifies the result: strict module laws on `M̲`,
/// strict linearity of the counit, and the counit as a levelwise
/// equivalence.
pub fn underline_module<M: CatModule>(module: &M, hom_limit: usize) -> Report {
    let u = Underline::new(module);
    let mut report = Report::new("underline");
    report.merge(validate_module(&u, hom_limit));
    let counit = u.counit();
    let ring = module.ring();
    let rc = ring.cat();
    for s in ring.indices() {
        let samples = u.samples(&s);
        for q in ring.indices() {
            for r in ring.samples(&q, &s) {
                for m in &samples {
                    report.check(
                        counit.map_ob(&u.act(&r, m)) == module.act(&r, &counit.map_ob(m)),
                        "counit is linear",
                        || format!("({r:?}, {m:?})"),
                    );
                    let id = u.cat().identity(m);
                    report.check(
                        counit.map_mor(&u.act_mor(&rc.identity(&r), &id))
                            == module.act_mor(&rc.identity(&r), &id.inner),
                        "counit is linear on morphisms",
                        || format!("({r:?}, {m:?})"),
                    );
                }
            }
        }
        report.merge(check_equivalence(
            &format!("counit at {s:?}"),
            u.cat(),
            module.cat(),
            &counit,
            &samples,
            &module.samples(&s),
        ));
    }
    report
}

/// `f̲(r, m) = (r, f m)`; on a morphism `φ: r·m → r'·n` it is
/// `θ(r',n)⁻¹ ∘ f(φ) ∘ θ(r,m)`. Strictly linear.
pub struct StrictifiedMap<'a, F: PseudoLinearMap> {
    map: &'a F,
    source: Underline<'a, F::Src>,
    target: Underline<'a, F::Tgt>,
}

impl<'a, F: PseudoLinearMap> StrictifiedMap<'a, F> {
    pub fn new(map: &'a F) -> Self {
        Self { map, source: Underline::new(map.source()), target: Underline::new(map.target()) }
    }
}

impl<'a, F: PseudoLinearMap> PseudoLinearMap for StrictifiedMap<'a, F> {
    type Ring = F::Ring;
    type Src = Underline<'a, F::Src>;
    type Tgt = Underline<'a, F::Tgt>;

    fn source(&self) -> &Self::Src {
        &self.source
    }
    fn target(&self) -> &Self::Tgt {
        &self.target
    }
    fn map_ob(&self, m: &UOb<F::Src>) -> UOb<F::Tgt> {
        (m.0.clone(), self.map.map_ob(&m.1))
    }
    fn map_mor(&self, f: &UMor<F::Src>) -> UMor<F::Tgt> {
        let tc = self.map.target().cat();
        let into = self.map.theta(&f.source.0, &f.source.1);
        let out = tc.inverse(&self.map.theta(&f.target.0, &f.target.1)).expect("theta cells are invertible");
        let inner = tc.compose(&tc.compose(&into, &self.map.map_mor(&f.inner)), &out);
        UnderlineMor { source: self.map_ob(&f.source), target: self.map_ob(&f.target), inner }
    }
    fn theta(&self, r: &RingOb<F::Ring>, m: &UOb<F::Src>) -> UMor<F::Tgt> {
        let a = self.target.act(r, &self.map_ob(m));
        self.target.cat().identity(&a)
    }
}

/// Validates `f`, strictifies it and certifies the strict map: strict
/// linearity (all cells identities), functoriality and coproducts.
pub fn strictify_map<F: PseudoLinearMap>(map: &F, hom_limit: usize) -> Report {
    let mut report = Report::new("strictify");
    let pre = validate_pseudo_linear(map, hom_limit);
    let valid = pre.passed();
    report.merge(pre);
    if !valid {
        return report;
    }
    let strict = StrictifiedMap::new(map);
    report.merge(validate_pseudo_linear(&strict, hom_limit));
    let src = strict.source();
    let tgt = strict.target();
    let ring = src.ring();
    let rc = ring.cat();
    for t in ring.indices() {
        let mt = src.samples(&t);
        let mt_mor = sampled_morphisms(src.cat(), &mt, hom_limit);
        for s in ring.indices() {
            for rho in sampled_morphisms(rc, &ring.samples(&s, &t), hom_limit) {
                for phi in &mt_mor {
                    report.check(
                        strict.map_mor(&src.act_mor(&rho, phi)) == tgt.act_mor(&rho, &strict.map_mor(phi)),
                        "strictly linear",
                        || format!("({rho:?}, {phi:?})"),
                    );
                }
            }
        }
    }
    report
}

/// True when every sampled cell of `map` is an identity.
pub fn is_strict<F: PseudoLinearMap>(map: &F) -> bool {
    let ring = map.source().ring();
    let tc = map.target().cat();
    ring.indices().iter().all(|t| {
        let mt = map.source().samples(t);
        ring.indices().iter().all(|s| {
            ring.samples(s, t).iter().all(|r| {
                mt.iter().all(|m| {
                    let th = map.theta(r, m);
                    th == tc.identity(&tc.source(&th))
                })
            })
        })
    })
}

/// For a map with identity cells: `f̲` equals the functor induced by `f`
/// on `M̲`, table for table.
pub fn check_induced_agreement<F: PseudoLinearMap>(map: &F, hom_limit: usize) -> Report {
    let mut report = Report::new("induced functor");
    let strict = StrictifiedMap::new(map);
    let src = strict.source();
    for t in src.ring().indices() {
        let objs = src.samples(&t);
        for a in &objs {
            report.check(strict.map_ob(a) == (a.0.clone(), map.map_ob(&a.1)), "objects", || format!("{a:?}"));
        }
        for phi in sampled_morphisms(src.cat(), &objs, hom_limit) {
            report.check(strict.map_mor(&phi).inner == map.map_mor(&phi.inner), "morphisms", || format!("{phi:?}"));
        }
    }
    report
}

/// A square `g ∘ α = β ∘ f` of pseudo-linear `f`, `g` and strict `α`, `β`.
/// Checks the square itself, the cube of cells `β(θ_f(r,m)) = θ_g(r, α m)`,
/// and that the thickened square commutes strictly.
pub fn check_natural_square<F, G, A, B>(f: &F, g: &G, alpha: &A, beta: &B, hom_limit: usize) -> Report
where
    F: PseudoLinearMap,
    A: PseudoLinearMap<Ring = F::Ring, Src = F::Src>,
    G: PseudoLinearMap<Ring = F::Ring, Src = A::Tgt>,
    B: PseudoLinearMap<Ring = F::Ring, Src = F::Tgt, Tgt = G::Tgt>,
{
    let mut report = Report::new("natural square");
    let src = f.source();
    let ring = src.ring();
    let sc = src.cat();
    for t in ring.indices() {
        let mt = src.samples(&t);
        for m in &mt {
            report.check(g.map_ob(&alpha.map_ob(m)) == beta.map_ob(&f.map_ob(m)), "square on objects", || {
                format!("{m:?}")
            });
        }
        let mt_mor = sampled_morphisms(sc, &mt, hom_limit);
        for phi in &mt_mor {
            report.check(
                g.map_mor(&alpha.map_mor(phi)) == beta.map_mor(&f.map_mor(phi)),
                "square on morphisms",
                || format!("{phi:?}"),
            );
        }
        for s in ring.indices() {
            for r in ring.samples(&s, &t) {
                for m in &mt {
                    report.check(beta.map_mor(&f.theta(&r, m)) == g.theta(&r, &alpha.map_ob(m)), "cube", || {
                        format!("({r:?}, {m:?})")
                    });
                }
            }
        }
    }

    let (fu, gu, au, bu) =
        (StrictifiedMap::new(f), StrictifiedMap::new(g), StrictifiedMap::new(alpha), StrictifiedMap::new(beta));
    let usrc = fu.source();
    for t in ring.indices() {
        let objs = usrc.samples(&t);
        for a in &objs {
            report.check(gu.map_ob(&au.map_ob(a)) == bu.map_ob(&fu.map_ob(a)), "thickened square on objects", || {
                format!("{a:?}")
            });
        }
        for phi in sampled_morphisms(usrc.cat(), &objs, hom_limit) {
            report.check(
                gu.map_mor(&au.map_mor(&phi)) == bu.map_mor(&fu.map_mor(&phi)),
                "thickened square on morphisms",
                || format!("{phi:?}"),
            );
        }
    }
    report
}

/// `map` with the cell at one `(r, m)` replaced; used to inject faults.
pub struct ThetaOverride<'a, F: PseudoLinearMap> {
    pub map: &'a F,
    pub at: (RingOb<F::Ring>, ModOb<F::Src>),
    pub replacement: ModMor<F::Tgt>,
}

impl<'a, F: PseudoLinearMap> PseudoLinearMap for ThetaOverride<'a, F> {
    type Ring = F::Ring;
    type Src = F::Src;
    type Tgt = F::Tgt;

    fn source(&self) -> &F::Src {
        self.map.source()
    }
    fn target(&self) -> &F::Tgt {
        self.map.target()
    }
    fn map_ob(&self, m: &ModOb<F::Src>) -> ModOb<F::Tgt> {
        self.map.map_ob(m)
    }
    fn map_mor(&self, f: &ModMor<F::Src>) -> ModMor<F::Tgt> {
        self.map.map_mor(f)
    }
    fn theta(&self, r: &RingOb<F::Ring>, m: &ModOb<F::Src>) -> ModMor<F::Tgt> {
        if (r, m) == (&self.at.0, &self.at.1) {
            self.replacement.clone()
        } else {
            self.map.theta(r, m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{
        coherent_corpus, fault_instances, CommMonoid, LabelMor, TableModule, TablePseudoLinear, TableRing,
    };

    #[test]
    fn corpus_strictifies() {
        for e in coherent_corpus(11) {
            let r = underline_module(e.map.source(), 4);
            assert!(r.passed(), "{}: {r}", e.name);
            let r = strictify_map(&e.map, 4);
            assert!(r.passed(), "{}: {r}", e.name);
            if is_strict(&e.map) {
                assert!(check_induced_agreement(&e.map, 4).passed(), "{}", e.name);
            }
        }
    }

    #[test]
    fn trivial_ring_thickening_is_bookkeeping() {
        let ring = TableRing::indiscrete(CommMonoid::trivial(), 2);
        let module = TableModule::regular(&ring);
        let u = Underline::new(&module);
        // one ring object per (s,t), so M̲(s) has |S| copies of each object
        assert_eq!(u.samples(&0).len(), 2 * module.samples(&0).len());
        assert!(underline_module(&module, 4).passed());
    }

    #[test]
    fn identity_square_commutes() {
        let e = &coherent_corpus(3)[5];
        let id = TablePseudoLinear::strict(e.map.source());
        let r = check_natural_square(&e.map, &e.map, &id, &id, 4);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn mutated_cell_breaks_cube_and_thickened_square() {
        let corpus = coherent_corpus(3);
        let e = corpus.iter().find(|e| e.name.starts_with("Z/3 over Z/3") && e.name.ends_with("coboundary")).unwrap();
        let id = TablePseudoLinear::strict(e.map.source());
        let th = e.map.theta(&1, &0);
        let bad = ThetaOverride { map: &e.map, at: (1, 0), replacement: LabelMor { label: (th.label + 1) % 3, ..th } };
        let r = check_natural_square(&e.map, &bad, &id, &id, 4);
        let d = r.failed_diagrams();
        assert!(d.contains(&"cube"), "{r}");
        assert!(d.contains(&"thickened square on morphisms"), "{r}");
    }

    #[test]
    fn invalid_maps_are_not_strictified() {
        let f = fault_instances();
        assert!(!strictify_map(&f.associativity_only, 4).passed());
    }
}
