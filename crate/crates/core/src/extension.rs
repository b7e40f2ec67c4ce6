//! Witness sets, private-neighbor safety and the polynomial extendability
//! test for partial antichains, relative to a pair of forced sets K1, K2
//! inside the root clique.

use crate::clique_tree::{CliqueTree, SubProblem};
use crate::graph::{Graph, IdMap};
use crate::vertex_set::VertexSet;
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("forced sets must be disjoint")]
    ForcedOverlap,
    #[error("forced sets must lie within the root clique")]
    ForcedOutsideRoot,
    #[error("excluded vertices must lie within the root clique")]
    ExcludedOutsideRoot,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("clique {0} is out of range")]
    CliqueOutOfRange(usize),
    #[error("vertex {0} is neither in the set nor in K1")]
    NotAnOwner(usize),
    #[error("vertex {y} is not a private neighbor of {x}")]
    NotPrivate { x: usize, y: usize },
    #[error("vertex set is not a partial antichain")]
    NotPartialAntichain,
    #[error("partial antichain has no feasible extension")]
    NotExtendable,
}

/// Forced and excluded sets for one subproblem of a combination, in the
/// ids of the enclosing context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinationStep {
    pub clique: usize,
    pub k1: VertexSet,
    pub k2: VertexSet,
    pub excluded: VertexSet,
}

/// D_C(x) split into its two parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrivateWitness {
    pub clique: usize,
    /// `None` when x lies outside the clique.
    pub anchor: Option<usize>,
    pub z_part: VertexSet,
    pub greedy_part: VertexSet,
}

impl PrivateWitness {
    pub fn vertices(&self) -> VertexSet {
        self.z_part.union(&self.greedy_part)
    }
}

/// A graph, one of its clique trees, and the forced sets K1 (still needing a
/// private neighbor) and K2 (already provided with one). Vertices of
/// `excluded` lie in the root clique and are dominated from outside the
/// graph, so they cannot serve as private neighbors.
pub struct EnumContext<'a> {
    pub graph: &'a Graph,
    pub tree: &'a CliqueTree,
    pub k1: VertexSet,
    pub k2: VertexSet,
    pub excluded: VertexSet,
    registry: Rc<Registry>,
    /// Original clique whose subproblem this context works on; `None` for
    /// the registry's own graph.
    origin: Option<usize>,
    witnesses: Rc<WitnessTable>,
    step_memo: RefCell<HashMap<SubKey, bool>>,
}

type SubKey = (usize, VertexSet, VertexSet, VertexSet);

type WitnessTable = RefCell<HashMap<(usize, usize), VertexSet>>;

/// Subproblems of one input graph, shared by every context of a run.
///
/// Clique `i` of the subproblem of clique `o` is clique `o + i` of the input
/// tree, and id maps preserve vertex order, so a subproblem taken inside
/// another subproblem equals the input graph's subproblem of the same
/// original clique. Hence at most one entry per clique, one witness table
/// per entry and one id map per pair of cliques are ever stored.
pub(crate) struct Registry {
    graph: Graph,
    tree: CliqueTree,
    entries: RefCell<HashMap<usize, Rc<SubEntry>>>,
    maps: RefCell<HashMap<(usize, usize), Rc<IdMap>>>,
}

pub(crate) struct SubEntry {
    sub: SubProblem,
    witnesses: Rc<WitnessTable>,
}

/// A subproblem as seen from an enclosing context: `map` translates the
/// enclosing context's ids into the subproblem's.
pub(crate) struct Nested {
    entry: Rc<SubEntry>,
    pub map: Rc<IdMap>,
    origin: usize,
}

impl Registry {
    fn new(graph: &Graph, tree: &CliqueTree) -> Self {
        Self {
            graph: graph.clone(),
            tree: tree.clone(),
            entries: RefCell::default(),
            maps: RefCell::default(),
        }
    }

    fn entry(&self, c: usize) -> Rc<SubEntry> {
        if let Some(entry) = self.entries.borrow().get(&c) {
            return Rc::clone(entry);
        }
        let entry = Rc::new(SubEntry {
            sub: self.tree.subproblem(&self.graph, c),
            witnesses: Rc::default(),
        });
        self.entries.borrow_mut().insert(c, Rc::clone(&entry));
        entry
    }

    /// Id map from the subproblem of `outer` (the input graph when `None`)
    /// into the subproblem of `inner`.
    fn map(&self, outer: Option<usize>, inner: usize) -> Rc<IdMap> {
        let Some(o) = outer else {
            return Rc::new(self.entry(inner).sub.map.clone());
        };
        if let Some(map) = self.maps.borrow().get(&(o, inner)) {
            return Rc::clone(map);
        }
        let (from, to) = (self.entry(o), self.entry(inner));
        let old_to_new = from
            .sub
            .map
            .new_to_old
            .iter()
            .map(|&v| to.sub.map.to_new(v))
            .collect();
        let new_to_old = to
            .sub
            .map
            .new_to_old
            .iter()
            .map(|&v| {
                from.sub
                    .map
                    .to_new(v)
                    .expect("inner subproblem lies inside the outer one")
            })
            .collect();
        let map = Rc::new(IdMap {
            old_to_new,
            new_to_old,
        });
        self.maps.borrow_mut().insert((o, inner), Rc::clone(&map));
        map
    }
}

impl Nested {
    pub fn graph(&self) -> &Graph {
        &self.entry.sub.graph
    }

    pub fn tree(&self) -> &CliqueTree {
        &self.entry.sub.tree
    }
}

impl<'a> EnumContext<'a> {
    pub fn new(
        graph: &'a Graph,
        tree: &'a CliqueTree,
        k1: VertexSet,
        k2: VertexSet,
    ) -> Result<Self, ExtensionError> {
        let registry = Rc::new(Registry::new(graph, tree));
        Self::assemble(graph, tree, k1, k2, registry, None, Rc::default())
    }

    fn assemble(
        graph: &'a Graph,
        tree: &'a CliqueTree,
        k1: VertexSet,
        k2: VertexSet,
        registry: Rc<Registry>,
        origin: Option<usize>,
        witnesses: Rc<WitnessTable>,
    ) -> Result<Self, ExtensionError> {
        if k1.intersects(&k2) {
            return Err(ExtensionError::ForcedOverlap);
        }
        let k = k1.union(&k2);
        if !k.is_empty() && (tree.is_empty() || !k.is_subset(tree.clique(0))) {
            return Err(ExtensionError::ForcedOutsideRoot);
        }
        Ok(Self {
            graph,
            tree,
            k1,
            k2,
            excluded: VertexSet::new(),
            registry,
            origin,
            witnesses,
            step_memo: RefCell::new(HashMap::new()),
        })
    }

    /// Marks root-clique vertices as unusable private neighbors.
    pub fn with_excluded(mut self, excluded: VertexSet) -> Result<Self, ExtensionError> {
        if !excluded.is_empty()
            && (self.tree.is_empty() || !excluded.is_subset(self.tree.clique(0)))
        {
            return Err(ExtensionError::ExcludedOutsideRoot);
        }
        self.excluded = excluded;
        Ok(self)
    }

    /// Context over a subproblem of this one. The sets are given in this
    /// context's ids.
    pub(crate) fn within<'b>(
        &self,
        nested: &'b Nested,
        k1: &VertexSet,
        k2: &VertexSet,
        excluded: &VertexSet,
    ) -> EnumContext<'b> {
        let restrict = |s: &VertexSet| nested.map.restrict(s);
        EnumContext::assemble(
            nested.graph(),
            nested.tree(),
            restrict(k1),
            restrict(k2),
            Rc::clone(&self.registry),
            Some(nested.origin),
            Rc::clone(&nested.entry.witnesses),
        )
        .and_then(|ctx| ctx.with_excluded(restrict(excluded)))
        .expect("forced sets lie in the subproblem root")
    }

    /// P(S, x) minus the excluded vertices.
    pub(crate) fn usable_privates(&self, s: &VertexSet, x: usize) -> VertexSet {
        self.graph
            .private_neighbors_unchecked(s, x)
            .difference(&self.excluded)
    }

    /// K = K1 ∪ K2.
    pub fn k(&self) -> VertexSet {
        self.k1.union(&self.k2)
    }

    fn check_vertex(&self, x: usize) -> Result<(), ExtensionError> {
        if x < self.graph.vertex_count() {
            Ok(())
        } else {
            Err(ExtensionError::VertexOutOfRange(x))
        }
    }

    fn check_clique(&self, c: usize) -> Result<(), ExtensionError> {
        if c < self.tree.len() {
            Ok(())
        } else {
            Err(ExtensionError::CliqueOutOfRange(c))
        }
    }

    /// ℱ(C,x): cliques in the subtree of C that belong to ℒ′({x}).
    pub fn f_cliques(&self, c: usize, x: usize) -> VertexSet {
        self.tree
            .l_prime_set(&VertexSet::singleton(x))
            .iter()
            .filter(|&d| self.tree.is_ancestor_or_self(c, d))
            .collect()
    }

    pub fn private_witness(&self, c: usize, x: usize) -> Result<PrivateWitness, ExtensionError> {
        self.check_clique(c)?;
        self.check_vertex(x)?;
        Ok(self.witness_parts(c, x))
    }

    fn witness_parts(&self, c: usize, x: usize) -> PrivateWitness {
        let (g, t) = (self.graph, self.tree);
        let below = t.subtree_vertices(c);
        if !t.clique(c).contains(x) {
            return PrivateWitness {
                clique: c,
                anchor: None,
                z_part: VertexSet::new(),
                greedy_part: self.greedy(below),
            };
        }
        let z_part: VertexSet = self
            .f_cliques(c, x)
            .iter()
            .filter_map(|d| t.fset(d).first())
            .collect();
        let rest = below
            .difference(g.closed_neighborhood(x))
            .difference(&g.closed_neighborhood_of_set(&z_part));
        PrivateWitness {
            clique: c,
            anchor: Some(x),
            z_part,
            greedy_part: self.greedy(&rest),
        }
    }

    /// Greedy minimal dominating set of the induced subgraph; vertices are
    /// offered for removal from the highest number down, so low-numbered
    /// vertices are kept.
    fn greedy(&self, within: &VertexSet) -> VertexSet {
        let order: Vec<usize> = self
            .tree
            .vertices_by_number()
            .iter()
            .rev()
            .copied()
            .filter(|&v| within.contains(v))
            .collect();
        self.graph.greedy_on(within, order.into_iter())
    }

    /// D_C(x), memoized.
    pub fn witness(&self, c: usize, x: usize) -> VertexSet {
        if let Some(w) = self.witnesses.borrow().get(&(c, x)) {
            return w.clone();
        }
        let w = self.witness_parts(c, x).vertices();
        self.witnesses.borrow_mut().insert((c, x), w.clone());
        w
    }

    fn dominated_by_witness(&self, c: usize, y: usize) -> VertexSet {
        self.graph.closed_neighborhood_of_set(&self.witness(c, y))
    }

    /// Safety of `y` as a private neighbor of `x` with respect to D ∪ K.
    pub fn is_safe_private(
        &self,
        d: &VertexSet,
        x: usize,
        y: usize,
    ) -> Result<bool, ExtensionError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        let s = d.union(&self.k());
        if !d.contains(x) && !self.k1.contains(x) {
            return Err(ExtensionError::NotAnOwner(x));
        }
        if !self.usable_privates(&s, x).contains(y) {
            return Err(ExtensionError::NotPrivate { x, y });
        }
        Ok(self.safe_private(&s, x, y))
    }

    /// Safety test on S = D ∪ K without precondition checks.
    pub(crate) fn safe_private(&self, s: &VertexSet, x: usize, y: usize) -> bool {
        if x == y {
            return true;
        }
        let (g, t) = (self.graph, self.tree);
        let lp = t.l_prime_set(s);
        for c in &lp {
            if t.clique(c).contains(y) {
                let need = g.neighbors(y).intersection(t.subtree_vertices(c));
                if !need.is_subset(&self.dominated_by_witness(c, y)) {
                    return false;
                }
            }
        }
        let uncov = t.uncov(g, s);
        g.closed_neighborhood(y)
            .intersection(&uncov)
            .iter()
            .all(|z| {
                lp.iter()
                    .any(|c| self.dominated_by_witness(c, y).contains(z))
            })
    }

    /// Some private neighbor of `x` with respect to D ∪ K is safe. Only `x`
    /// itself and private neighbors homed below C(x) are tried.
    pub fn is_safe_vertex(&self, d: &VertexSet, x: usize) -> Result<bool, ExtensionError> {
        self.check_vertex(x)?;
        if !d.contains(x) && !self.k1.contains(x) {
            return Err(ExtensionError::NotAnOwner(x));
        }
        Ok(self.safe_vertex(&d.union(&self.k()), x))
    }

    pub(crate) fn safe_vertex(&self, s: &VertexSet, x: usize) -> bool {
        let privates = self.usable_privates(s, x);
        if privates.contains(x) {
            return true;
        }
        let below = self.tree.subtree_vertices(self.tree.home(x));
        privates
            .intersection(below)
            .iter()
            .any(|y| self.safe_private(s, x, y))
    }

    /// Same as [`Self::is_safe_vertex`] but scans every private neighbor.
    pub fn is_safe_vertex_exhaustive(
        &self,
        d: &VertexSet,
        x: usize,
    ) -> Result<bool, ExtensionError> {
        self.check_vertex(x)?;
        if !d.contains(x) && !self.k1.contains(x) {
            return Err(ExtensionError::NotAnOwner(x));
        }
        let s = d.union(&self.k());
        Ok(self
            .usable_privates(&s, x)
            .iter()
            .any(|y| self.safe_private(&s, x, y)))
    }

    /// Polynomial extendability test: every uncovered vertex of A ∪ K lies in
    /// a clique of ℒ′(A ∪ K), and every vertex of A ∪ K1 is safe.
    pub fn is_extendable(&self, a: &VertexSet) -> Result<bool, ExtensionError> {
        if !self.tree.partial_antichain_check(self.graph, &self.k(), a) {
            return Err(ExtensionError::NotPartialAntichain);
        }
        Ok(self.extendable(a))
    }

    pub(crate) fn extendable(&self, a: &VertexSet) -> bool {
        let (g, t) = (self.graph, self.tree);
        let s = a.union(&self.k());
        let mut reachable = VertexSet::new();
        for c in &t.l_prime_set(&s) {
            reachable.union_with(t.clique(c));
        }
        t.uncov(g, &s).is_subset(&reachable)
            && a.union(&self.k1).iter().all(|x| self.safe_vertex(&s, x))
    }

    /// Extendability of ∅ in the subproblem of `c` for the given forced and
    /// excluded sets, all in this context's ids.
    fn sub_extendable(
        &self,
        c: usize,
        k1: &VertexSet,
        k2: &VertexSet,
        excluded: &VertexSet,
    ) -> bool {
        let key = (c, k1.clone(), k2.clone(), excluded.clone());
        if let Some(&known) = self.step_memo.borrow().get(&key) {
            return known;
        }
        let nested = self.subproblem(c);
        let ctx = self.within(&nested, k1, k2, excluded);
        let known = ctx.extendable(&VertexSet::new());
        self.step_memo.borrow_mut().insert(key, known);
        known
    }

    /// Drops the memoized subproblem checks. The checks made by
    /// `combination_step` depend only on the antichain, so the enumerator
    /// clears them whenever it moves to the next antichain.
    pub(crate) fn clear_step_memo(&self) {
        self.step_memo.borrow_mut().clear();
    }

    pub(crate) fn subproblem(&self, c: usize) -> Nested {
        let origin = self.origin.unwrap_or(0) + c;
        Nested {
            entry: self.registry.entry(origin),
            map: self.registry.map(self.origin, origin),
            origin,
        }
    }

    /// Splits (A ∪ K) ∩ `cp` into the vertices that must obtain a private
    /// neighbor inside the subproblem of `cp` and the rest, given the partial
    /// extension `d` built over the cliques of 𝒞(A) before `cp`. A vertex is
    /// free when it already owns a private neighbor below an earlier clique,
    /// can still obtain one below a later clique, or owns a private neighbor
    /// that the subproblem cannot touch and later subproblems can keep. A
    /// needy vertex may also keep a private neighbor inside `cp` itself;
    /// those vertices stay usable in the subproblem and every other vertex
    /// of `cp` is excluded.
    pub fn combination_step(&self, a: &VertexSet, d: &VertexSet, cp: usize) -> CombinationStep {
        let t = self.tree;
        let homes = t.homes_of(a);
        let below = |c: usize| t.subtree_vertices(c).difference(t.clique(c));
        let later: Vec<usize> = homes.iter().filter(|&c| c > cp).collect();
        let mut below_earlier = VertexSet::new();
        let mut below_later = VertexSet::new();
        for c in &homes {
            if c < cp {
                below_earlier.union_with(&below(c));
            } else if c > cp {
                below_later.union_with(&below(c));
            }
        }
        let base = a.union(&self.k());
        let forced = base.intersection(t.clique(cp));
        let mut needy = VertexSet::new();
        let mut usable = VertexSet::new();
        for x in forced.iter().filter(|&x| !self.k2.contains(x)) {
            let privates = self.usable_privates(d, x);
            if privates.intersects(&below_earlier) {
                continue;
            }
            let rest_of = |l: usize| {
                base.intersection(t.clique(l))
                    .difference(&VertexSet::singleton(x))
            };
            let single = VertexSet::singleton(x);
            let deep_later = later.iter().any(|&l| {
                t.clique(l).contains(x) && self.sub_extendable(l, &single, &rest_of(l), t.clique(l))
            });
            if deep_later {
                continue;
            }
            let keepable = |y: usize| {
                later.iter().all(|&l| {
                    let mut open = t.clique(l).clone();
                    open.remove(y);
                    !t.clique(l).contains(y) || self.sub_extendable(l, &single, &rest_of(l), &open)
                })
            };
            let outside = privates.iter().any(|y| {
                !t.clique(cp).contains(y)
                    && !below(cp).contains(y)
                    && !below_later.contains(y)
                    && keepable(y)
            });
            if outside {
                continue;
            }
            needy.insert(x);
            usable.extend(
                privates
                    .intersection(t.clique(cp))
                    .iter()
                    .filter(|&y| keepable(y)),
            );
        }
        CombinationStep {
            clique: cp,
            k2: forced.difference(&needy),
            k1: needy,
            excluded: t.clique(cp).difference(&usable),
        }
    }

    /// The vertices of (A ∪ K) ∩ `cp` that must obtain a private neighbor
    /// inside the subproblem of `cp`.
    pub fn q_set(&self, a: &VertexSet, d: &VertexSet, cp: usize) -> VertexSet {
        self.combination_step(a, d, cp).k1
    }

    /// C*(D): the last clique of 𝒞(A) whose V(C) meets D ∖ (A ∪ K).
    pub fn c_star_high(&self, a: &VertexSet, d: &VertexSet) -> Option<usize> {
        let added = d.difference(&a.union(&self.k()));
        self.tree
            .homes_of(a)
            .iter()
            .filter(|&c| self.tree.subtree_vertices(c).intersects(&added))
            .last()
    }

    /// C_*(D): the first clique of 𝒞(A) whose V(C) is not dominated by D.
    pub fn c_star_low(&self, a: &VertexSet, d: &VertexSet) -> Option<usize> {
        let dominated = self.graph.closed_neighborhood_of_set(d);
        self.tree
            .homes_of(a)
            .iter()
            .find(|&c| !self.tree.subtree_vertices(c).is_subset(&dominated))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;

    #[test]
    fn f_cliques_on_e1() {
        let (g, t) = (fixtures::e1(), fixtures::e1_tree());
        let ctx = EnumContext::new(&g, &t, set(&[]), set(&[])).unwrap();
        assert_eq!(ctx.f_cliques(2, B), set(&[3]));
        assert_eq!(ctx.f_cliques(3, D), set(&[]));
    }

    #[test]
    fn witnesses_on_e1() {
        let (g, t) = (fixtures::e1(), fixtures::e1_tree());
        let ctx = EnumContext::new(&g, &t, set(&[]), set(&[])).unwrap();
        let w = ctx.private_witness(2, B).unwrap();
        assert_eq!((w.z_part, w.greedy_part), (set(&[E]), set(&[])));
        assert_eq!(ctx.private_witness(3, D).unwrap().vertices(), set(&[]));
        let w = ctx.private_witness(2, A).unwrap();
        assert_eq!((w.anchor, w.vertices()), (None, set(&[D])));
        assert_eq!(ctx.witness(2, B), set(&[E]));
        assert_eq!(
            ctx.private_witness(9, A),
            Err(ExtensionError::CliqueOutOfRange(9))
        );
    }

    #[test]
    fn safety_on_e1() {
        let (g, t) = (fixtures::e1(), fixtures::e1_tree());
        let ctx = EnumContext::new(&g, &t, set(&[]), set(&[])).unwrap();
        let d = set(&[B]);
        assert_eq!(ctx.is_safe_private(&d, B, B), Ok(true));
        assert_eq!(ctx.is_safe_private(&d, B, C), Ok(true));
        assert_eq!(ctx.is_safe_private(&d, B, D), Ok(false));
        assert_eq!(
            ctx.is_safe_private(&d, B, E),
            Err(ExtensionError::NotPrivate { x: B, y: E })
        );
        assert_eq!(
            ctx.is_safe_private(&d, C, C),
            Err(ExtensionError::NotAnOwner(C))
        );
        assert_eq!(ctx.is_safe_vertex(&d, B), Ok(true));
        let forced = EnumContext::new(&g, &t, set(&[]), set(&[B])).unwrap();
        assert_eq!(forced.is_safe_vertex(&set(&[B, D]), D), Ok(true));
        assert_eq!(forced.is_safe_vertex(&set(&[B, C]), C), Ok(false));
    }

    #[test]
    fn extendability_on_e1() {
        let (g, t) = (fixtures::e1(), fixtures::e1_tree());
        let ctx = EnumContext::new(&g, &t, set(&[]), set(&[])).unwrap();
        assert_eq!(ctx.is_extendable(&set(&[B])), Ok(true));
        assert_eq!(ctx.is_extendable(&set(&[C])), Ok(false));
        assert!(!ctx.extendable(&set(&[C, D])));
        assert_eq!(
            ctx.is_extendable(&set(&[A, E])),
            Err(ExtensionError::NotPartialAntichain)
        );
    }

    #[test]
    fn context_validation() {
        let (g, t) = (fixtures::e1(), fixtures::e1_tree());
        let none = set(&[]);
        assert!(matches!(
            EnumContext::new(&g, &t, set(&[B]), set(&[B])),
            Err(ExtensionError::ForcedOverlap)
        ));
        assert!(matches!(
            EnumContext::new(&g, &t, set(&[E]), none.clone()),
            Err(ExtensionError::ForcedOutsideRoot)
        ));
        let ctx = EnumContext::new(&g, &t, none.clone(), none).unwrap();
        assert!(matches!(
            ctx.with_excluded(set(&[C])),
            Err(ExtensionError::ExcludedOutsideRoot)
        ));
    }

    #[test]
    fn combination_bookkeeping() {
        let (g, t) = (fixtures::e1(), fixtures::e1_tree());
        let ctx = EnumContext::new(&g, &t, set(&[]), set(&[])).unwrap();
        let a = set(&[B]);
        assert_eq!(ctx.q_set(&a, &a, 0), set(&[B]));
        assert_eq!(ctx.c_star_low(&a, &a), Some(0));
        assert_eq!(ctx.c_star_low(&a, &set(&[B, D, E])), None);
        assert_eq!(ctx.c_star_high(&a, &a), None);
        assert_eq!(ctx.c_star_high(&a, &set(&[B, E])), Some(0));

        let k3 = fixtures::complete(3);
        let t3 = CliqueTree::build(&k3).unwrap();
        let ctx = EnumContext::new(&k3, &t3, set(&[]), set(&[])).unwrap();
        let step = ctx.combination_step(&set(&[1]), &set(&[1]), 0);
        assert_eq!((step.k1, step.k2), (set(&[1]), set(&[])));
    }
}
