//! Table-presented rings, modules and pseudo-linear maps.
//!
//! Every category here is `Disc(E) × BA`: a discrete set of objects, each
//! with endomorphisms labelled by a finite commutative monoid `A`
//! (composition is addition in `A`). Ring multiplication and module action
//! are tables on objects and addition on labels, which is functorial
//! because `A` is commutative. Cells `θ(r,m)` are labels.

use serde::{Deserialize, Serialize};

use crate::category::Category;
use crate::error::{Error, Result};
use crate::strictify::{CatModule, CatRing, PseudoLinearMap};

/// A finite commutative monoid on `0..n` with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CommMonoid {
    pub table: Vec<Vec<usize>>,
}

impl CommMonoid {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let ok_shape = n > 0 && table.iter().all(|row| row.len() == n && row.iter().all(|&x| x < n));
        if !ok_shape {
            return Err(Error::Validation("monoid table is not square".into()));
        }
        let m = Self { table };
        for a in 0..n {
            if m.op(0, a) != a {
                return Err(Error::Validation("0 is not the identity".into()));
            }
            for b in 0..n {
                if m.op(a, b) != m.op(b, a) {
                    return Err(Error::Validation(format!("{a} and {b} do not commute")));
                }
                for c in 0..n {
                    if m.op(m.op(a, b), c) != m.op(a, m.op(b, c)) {
                        return Err(Error::Validation(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        Self { table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect() }
    }

    /// `{0, 1}` under "or": `1` is idempotent and not invertible.
    pub fn boolean() -> Self {
        Self { table: vec![vec![0, 1], vec![1, 1]] }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.op(a, b) == 0)
    }

    pub fn is_group(&self) -> bool {
        (0..self.size()).all(|a| self.inverse(a).is_some())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelMor {
    pub source: usize,
    pub target: usize,
    pub label: usize,
}

impl LabelMor {
    pub fn identity(a: usize) -> Self {
        Self { source: a, target: a, label: 0 }
    }
}

/// `Disc(N) × BA`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelCat {
    pub labels: CommMonoid,
}

impl LabelCat {
    pub fn new(labels: CommMonoid) -> Self {
        Self { labels }
    }

    fn tensor(&self, f: &LabelMor, g: &LabelMor, on: impl Fn(usize, usize) -> usize) -> LabelMor {
        LabelMor {
            source: on(f.source, g.source),
            target: on(f.target, g.target),
            label: self.labels.op(f.label, g.label),
        }
    }
}

impl Category for LabelCat {
    type Ob = usize;
    type Mor = LabelMor;

    fn source(&self, f: &LabelMor) -> usize {
        f.source
    }
    fn target(&self, f: &LabelMor) -> usize {
        f.target
    }
    fn identity(&self, a: &usize) -> LabelMor {
        LabelMor::identity(*a)
    }
    fn compose(&self, f: &LabelMor, g: &LabelMor) -> LabelMor {
        LabelMor { source: f.source, target: g.target, label: self.labels.op(f.label, g.label) }
    }
    fn hom(&self, a: &usize, b: &usize) -> Vec<LabelMor> {
        if a != b {
            return Vec::new();
        }
        (0..self.labels.size()).map(|label| LabelMor { source: *a, target: *b, label }).collect()
    }
    fn inverse(&self, f: &LabelMor) -> Option<LabelMor> {
        if !self.is_morphism(f) {
            return None;
        }
        self.labels.inverse(f.label).map(|label| LabelMor { source: f.target, target: f.source, label })
    }
    fn find_isomorphism(&self, a: &usize, b: &usize) -> Option<LabelMor> {
        (a == b).then(|| LabelMor::identity(*a))
    }
    fn is_morphism(&self, f: &LabelMor) -> bool {
        f.source == f.target && f.label < self.labels.size()
    }
}

/// A ring on indices `0..indices`; object `i` lies in `R(ends[i])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRing {
    pub indices: usize,
    pub cat: LabelCat,
    pub ends: Vec<(usize, usize)>,
    pub mul: Vec<Vec<Option<usize>>>,
    pub units: Vec<usize>,
}

impl TableRing {
    /// One index, objects the elements of a monoid given by its table with
    /// unit `unit`.
    pub fn from_monoid(labels: CommMonoid, mul: Vec<Vec<usize>>, unit: usize) -> Self {
        let n = mul.len();
        Self {
            indices: 1,
            cat: LabelCat::new(labels),
            ends: vec![(0, 0); n],
            mul: mul.into_iter().map(|row| row.into_iter().map(Some).collect()).collect(),
            units: vec![unit],
        }
    }

    /// One object in every `R(s,t)`: the indiscrete category on `k` objects.
    pub fn indiscrete(labels: CommMonoid, k: usize) -> Self {
        let ends: Vec<(usize, usize)> = (0..k).flat_map(|s| (0..k).map(move |t| (s, t))).collect();
        let id = |(s, t): (usize, usize)| s * k + t;
        let mul =
            ends.iter().map(|&(s, t)| ends.iter().map(|&(t2, u)| (t == t2).then(|| id((s, u)))).collect()).collect();
        Self { indices: k, cat: LabelCat::new(labels), ends, mul, units: (0..k).map(|s| id((s, s))).collect() }
    }

    /// Two indices with `R(0,0) = R(1,1) = {1}`, `R(0,1) = {a, b}` and
    /// `R(1,0)` empty.
    pub fn triangular(labels: CommMonoid) -> Self {
        let ends = vec![(0, 0), (1, 1), (0, 1), (0, 1)];
        let mut mul = vec![vec![None; 4]; 4];
        mul[0][0] = Some(0);
        mul[1][1] = Some(1);
        for x in [2, 3] {
            mul[0][x] = Some(x);
            mul[x][1] = Some(x);
        }
        Self { indices: 2, cat: LabelCat::new(labels), ends, mul, units: vec![0, 1] }
    }

    pub fn size(&self) -> usize {
        self.ends.len()
    }
}

impl CatRing for TableRing {
    type Idx = usize;
    type Cat = LabelCat;

    fn cat(&self) -> &LabelCat {
        &self.cat
    }
    fn indices(&self) -> Vec<usize> {
        (0..self.indices).collect()
    }
    fn ends(&self, r: &usize) -> (usize, usize) {
        self.ends[*r]
    }
    fn samples(&self, s: &usize, t: &usize) -> Vec<usize> {
        (0..self.size()).filter(|&r| self.ends[r] == (*s, *t)).collect()
    }
    fn unit(&self, s: &usize) -> usize {
        self.units[*s]
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.mul[*a][*b].expect("multiplying non-composable ring objects")
    }
    fn mul_mor(&self, f: &LabelMor, g: &LabelMor) -> LabelMor {
        self.cat.tensor(f, g, |a, b| self.mul(&a, &b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableModule {
    pub ring: TableRing,
    pub levels: Vec<usize>,
    /// `act[r][m]`, `None` when `r` and `m` are not composable.
    pub act: Vec<Vec<Option<usize>>>,
}

impl TableModule {
    /// `M(s) = ⨿_t R(s,t)` with the action by multiplication.
    pub fn regular(ring: &TableRing) -> Self {
        let levels = ring.ends.iter().map(|e| e.0).collect();
        Self { ring: ring.clone(), levels, act: ring.mul.clone() }
    }

    /// A one-index module given by an action table of the monoid on `0..n`.
    pub fn from_action(ring: &TableRing, act: Vec<Vec<usize>>) -> Self {
        let n = act.first().map_or(0, |row| row.len());
        Self {
            ring: ring.clone(),
            levels: vec![0; n],
            act: act.into_iter().map(|row| row.into_iter().map(Some).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.levels.len()
    }
}

impl CatModule for TableModule {
    type Ring = TableRing;
    type Cat = LabelCat;

    fn ring(&self) -> &TableRing {
        &self.ring
    }
    fn cat(&self) -> &LabelCat {
        &self.ring.cat
    }
    fn level(&self, m: &usize) -> usize {
        self.levels[*m]
    }
    fn samples(&self, s: &usize) -> Vec<usize> {
        (0..self.size()).filter(|&m| self.levels[m] == *s).collect()
    }
    fn act(&self, r: &usize, m: &usize) -> usize {
        self.act[*r][*m].expect("acting by a non-composable ring object")
    }
    fn act_mor(&self, f: &LabelMor, g: &LabelMor) -> LabelMor {
        self.ring.cat.tensor(f, g, |a, b| self.act(&a, &b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablePseudoLinear {
    pub source: TableModule,
    pub target: TableModule,
    /// Object function.
    pub map: Vec<usize>,
    /// Label function; must be a monoid endomorphism.
    pub label_map: Vec<usize>,
    /// `theta[r][m]`, the label of `θ(r,m)`.
    pub theta: Vec<Vec<usize>>,
}

impl TablePseudoLinear {
    /// Identity on objects and labels with the given cells.
    pub fn on_module(module: &TableModule, theta: Vec<Vec<usize>>) -> Self {
        Self {
            source: module.clone(),
            target: module.clone(),
            map: (0..module.size()).collect(),
            label_map: (0..module.ring.cat.labels.size()).collect(),
            theta,
        }
    }

    pub fn strict(module: &TableModule) -> Self {
        Self::on_module(module, vec![vec![0; module.size()]; module.ring.size()])
    }
}

impl PseudoLinearMap for TablePseudoLinear {
    type Ring = TableRing;
    type Src = TableModule;
    type Tgt = TableModule;

    fn source(&self) -> &TableModule {
        &self.source
    }
    fn target(&self) -> &TableModule {
        &self.target
    }
    fn map_ob(&self, m: &usize) -> usize {
        self.map[*m]
    }
    fn map_mor(&self, f: &LabelMor) -> LabelMor {
        LabelMor { source: self.map[f.source], target: self.map[f.target], label: self.label_map[f.label] }
    }
    fn theta(&self, r: &usize, m: &usize) -> LabelMor {
        LabelMor {
            source: self.target.act(r, &self.map[*m]),
            target: self.map[self.source.act(r, m)],
            label: self.theta[*r][*m],
        }
    }
}

/// Cells of the form `ε(r·m) − ε(m)`; they satisfy every coherence law.
pub fn coboundary(module: &TableModule, eps: &[usize]) -> Vec<Vec<usize>> {
    let labels = &module.ring.cat.labels;
    (0..module.ring.size())
        .map(|r| {
            (0..module.size())
                .map(|m| match module.act[r][m] {
                    Some(rm) => labels.op(eps[rm], labels.inverse(eps[m]).expect("coboundaries need a group")),
                    None => 0,
                })
                .collect()
        })
        .collect()
}

/// All label assignments `c` on ring objects with `c(r·r') = c(r) + c(r')`
/// and `c(1_s) = 0`; each gives coherent cells `θ(r,m) = c(r)`.
pub fn additive_characters(ring: &TableRing) -> Vec<Vec<usize>> {
    let n = ring.size();
    let a = ring.cat.labels.size();
    let mut out = Vec::new();
    let mut c = vec![0; n];
    loop {
        let ok = ring.units.iter().all(|&u| c[u] == 0)
            && (0..n).all(|x| (0..n).all(|y| ring.mul[x][y].is_none_or(|xy| c[xy] == ring.cat.labels.op(c[x], c[y]))));
        if ok {
            out.push(c.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            c[i] += 1;
            if c[i] < a {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Object maps `M → M` commuting with the action, by exhaustion.
pub fn equivariant_self_maps(module: &TableModule, limit: usize) -> Vec<Vec<usize>> {
    let n = module.size();
    let mut out = Vec::new();
    let mut f = vec![0; n];
    if n == 0 {
        return vec![Vec::new()];
    }
    loop {
        let ok = (0..n).all(|m| module.levels[f[m]] == module.levels[m])
            && (0..module.ring.size())
                .all(|r| (0..n).all(|m| module.act[r][m].is_none_or(|rm| module.act[r][f[m]] == Some(f[rm]))));
        if ok {
            out.push(f.clone());
            if out.len() >= limit {
                return out;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Monoids used as one-index rings: `(name, table, unit)`.
fn small_monoids() -> Vec<(&'static str, Vec<Vec<usize>>, usize)> {
    vec![
        ("trivial", cyclic_table(1), 0),
        ("Z/2", cyclic_table(2), 0),
        ("Z/3", cyclic_table(3), 0),
        // {1, 0} under multiplication, unit at index 0
        ("mult{0,1}", vec![vec![0, 1], vec![1, 1]], 0),
        // maps of a 2-element set: id, swap, const 0, const 1; a∘b
        ("End(2)", vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 2, 2, 2], vec![3, 3, 3, 3]], 0),
    ]
}

/// A named corpus instance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub map: TablePseudoLinear,
}

/// Coherent pseudo-linear maps over table rings: every combination of
/// label monoid, ring, module, equivariant object map and coherent cells
/// (identity, characters, coboundaries of seeded random potentials).
pub fn coherent_corpus(seed: u64) -> Vec<CorpusEntry> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rings: Vec<(String, TableRing)> = Vec::new();
    for n in [2, 3, 4] {
        let labels = CommMonoid::cyclic(n);
        for (name, table, unit) in small_monoids() {
            rings.push((format!("{name} over Z/{n}"), TableRing::from_monoid(labels.clone(), table, unit)));
        }
        rings.push((format!("indiscrete(2) over Z/{n}"), TableRing::indiscrete(labels.clone(), 2)));
        rings.push((format!("triangular over Z/{n}"), TableRing::triangular(labels)));
    }
    let mut out = Vec::new();
    for (rname, ring) in rings {
        let module = TableModule::regular(&ring);
        let labels = ring.cat.labels.clone();
        for (fi, f) in equivariant_self_maps(&module, 2).into_iter().enumerate() {
            let base = |theta: Vec<Vec<usize>>| TablePseudoLinear {
                source: module.clone(),
                target: module.clone(),
                map: f.clone(),
                label_map: (0..labels.size()).collect(),
                theta,
            };
            let strict = base(vec![vec![0; module.size()]; ring.size()]);
            out.push(CorpusEntry { name: format!("{rname}, map {fi}, strict"), map: strict });
            for (ci, c) in
                additive_characters(&ring).into_iter().filter(|c| c.iter().any(|&x| x != 0)).take(2).enumerate()
            {
                let theta = (0..ring.size()).map(|r| vec![c[r]; module.size()]).collect();
                out.push(CorpusEntry { name: format!("{rname}, map {fi}, character {ci}"), map: base(theta) });
            }
            let eps: Vec<usize> = (0..module.size()).map(|_| rng.gen_range(0..labels.size())).collect();
            out.push(CorpusEntry {
                name: format!("{rname}, map {fi}, coboundary"),
                map: base(coboundary(&module, &eps)),
            });
        }
    }
    out
}

/// The fault instances, each breaking a specific law.
pub struct FaultInstances {
    /// Constant idempotent non-identity cell: unit fails, associativity holds.
    pub unit_only: TablePseudoLinear,
    /// Cell `1 ∈ Z/3` at the generator of `Z/2`: unit holds, associativity fails.
    pub associativity_only: TablePseudoLinear,
    /// A coherent coboundary with one component inverted.
    pub inverted_component: TablePseudoLinear,
    /// A module whose action table is not associative.
    pub broken_action: TableModule,
}

pub fn fault_instances() -> FaultInstances {
    let z2 = cyclic_table(2);
    let ring = TableRing::from_monoid(CommMonoid::boolean(), z2.clone(), 0);
    let module = TableModule::regular(&ring);
    let unit_only = TablePseudoLinear::on_module(&module, vec![vec![1; 2]; 2]);

    let ring = TableRing::from_monoid(CommMonoid::cyclic(3), z2.clone(), 0);
    let module = TableModule::regular(&ring);
    let associativity_only = TablePseudoLinear::on_module(&module, vec![vec![0, 0], vec![1, 1]]);

    let ring = TableRing::from_monoid(CommMonoid::cyclic(3), cyclic_table(3), 0);
    let module = TableModule::regular(&ring);
    let mut theta = coboundary(&module, &[0, 1, 0]);
    let labels = &ring.cat.labels;
    let (r, m) = (1, 0);
    theta[r][m] = labels.inverse(theta[r][m]).unwrap();
    let inverted_component = TablePseudoLinear::on_module(&module, theta);

    let ring = TableRing::from_monoid(CommMonoid::cyclic(2), z2, 0);
    // the generator of Z/2 acting by a 3-cycle
    let broken_action = TableModule::from_action(&ring, vec![vec![0, 1, 2], vec![1, 2, 0]]);
    FaultInstances { unit_only, associativity_only, inverted_component, broken_action }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strictify::{validate_module, validate_pseudo_linear};

    #[test]
    fn monoid_axioms() {
        assert!(CommMonoid::new(CommMonoid::boolean().table).is_ok());
        assert!(CommMonoid::new(vec![vec![0, 1], vec![1, 0]]).is_ok());
        assert!(CommMonoid::new(vec![vec![1, 1], vec![1, 1]]).is_err());
        assert!(!CommMonoid::boolean().is_group());
    }

    #[test]
    fn regular_modules_validate() {
        for ring in [
            TableRing::indiscrete(CommMonoid::cyclic(2), 3),
            TableRing::triangular(CommMonoid::cyclic(3)),
            TableRing::from_monoid(CommMonoid::cyclic(2), small_monoids()[4].1.clone(), 0),
        ] {
            let r = validate_module(&TableModule::regular(&ring), 4);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn characters_of_z2_into_z4() {
        let ring = TableRing::from_monoid(CommMonoid::cyclic(4), cyclic_table(2), 0);
        assert_eq!(additive_characters(&ring), vec![vec![0, 0], vec![0, 2]]);
    }

    #[test]
    fn fault_instances_fail_as_labelled() {
        let f = fault_instances();
        let r = validate_pseudo_linear(&f.unit_only, 4);
        assert!(r.failed_diagrams().contains(&"unit"));
        assert!(!r.failed_diagrams().contains(&"associativity"));
        let r = validate_pseudo_linear(&f.associativity_only, 4);
        assert_eq!(r.failed_diagrams(), vec!["associativity"]);
        let r = validate_pseudo_linear(&f.inverted_component, 4);
        assert!(r.failed_diagrams().contains(&"associativity"));
        let r = validate_module(&f.broken_action, 4);
        assert!(r.failed_diagrams().contains(&"action associativity"));
    }

    #[test]
    fn corpus_is_coherent() {
        let corpus = coherent_corpus(7);
        assert!(corpus.len() >= 50, "{}", corpus.len());
        for e in &corpus {
            let r = validate_pseudo_linear(&e.map, 4);
            assert!(r.passed(), "{}: {r}", e.name);
        }
    }
}
