//! Chordality recognition, clique trees, and the tree-relative vertex
//! operators (homes, `Up`, `Uncov`, top antichains, `L`, `L'`).
//!
//! Cliques are stored in depth-first preorder, so a clique's index is its
//! preorder position (0 is the root) and its subtree is the index range
//! `c..=hi(c)`.

use crate::graph::{Graph, IdMap};
use crate::vertex_set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("graph is not chordal")]
    NotChordal { witness: Option<Vec<usize>> },
    #[error("clique tree spec has {0} roots, expected exactly one")]
    RootCount(usize),
    #[error("clique {0} has an invalid parent index")]
    InvalidParent(usize),
    #[error("parent links of clique {0} form a cycle")]
    Cycle(usize),
    #[error("clique {0} is empty")]
    EmptyClique(usize),
    #[error("clique {0} mentions a vertex outside the graph")]
    VertexOutOfRange(usize),
    #[error("clique {0} is not a clique of the graph")]
    NotAClique(usize),
    #[error("clique {0} is not maximal")]
    NotMaximal(usize),
    #[error("cliques {0} and {1} are identical")]
    DuplicateClique(usize, usize),
    #[error("vertex {0} belongs to no clique")]
    UncoveredVertex(usize),
    #[error("edge {0}-{1} belongs to no clique")]
    UncoveredEdge(usize, usize),
    #[error("the cliques containing vertex {0} do not form a subtree")]
    DisconnectedSubtree(usize),
    #[error("the sets f(C) do not partition the vertices")]
    NotAPartition,
    #[error("vertex {vertex} is adjacent to part of f({clique})")]
    PartialAdjacency { clique: usize, vertex: usize },
    #[error("incomparable cliques {0} and {1} have adjacent f-sets")]
    IncomparableAdjacency(usize, usize),
    #[error("the set must lie within the root clique")]
    OutsideRoot,
}

/// Result of chordality recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering: each vertex's later neighbors form a clique.
    Chordal(Vec<usize>),
    /// A chordless cycle of length at least four when one was found.
    NotChordal(Option<Vec<usize>>),
}

/// Maximum cardinality search followed by an explicit simplicial check of
/// the resulting elimination order.
pub fn recognize_chordal(g: &Graph) -> Chordality {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unnumbered vertex left");
        numbered[v] = true;
        visit.push(v);
        for u in g.neighbors(v) {
            if !numbered[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    match check_elimination_order(g, &visit) {
        Ok(()) => Chordality::Chordal(visit),
        Err((v, p, w)) => Chordality::NotChordal(chordless_cycle(g, v, p, w)),
    }
}

/// Verifies that `order` is a perfect elimination ordering; on failure
/// returns a vertex with two non-adjacent later neighbors.
pub fn check_elimination_order(g: &Graph, order: &[usize]) -> Result<(), (usize, usize, usize)> {
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        let Some(&p) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        if let Some(&w) = later.iter().find(|&&w| w != p && !g.has_edge(p, w)) {
            return Err((v, p, w));
        }
    }
    Ok(())
}

/// Closes `p – … – w` with `v` using a shortest path that avoids the rest of N[v].
fn chordless_cycle(g: &Graph, v: usize, p: usize, w: usize) -> Option<Vec<usize>> {
    let mut blocked = g.closed_neighborhood(v).clone();
    blocked.remove(p);
    blocked.remove(w);
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    prev[p] = p;
    let mut queue = std::collections::VecDeque::from([p]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut cycle = vec![w];
            let mut cur = w;
            while cur != p {
                cur = prev[cur];
                cycle.push(cur);
            }
            cycle.push(v);
            return Some(cycle);
        }
        for y in g.neighbors(x) {
            if prev[y] == usize::MAX && !blocked.contains(y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Rooted clique tree with preorder numbering and the induced vertex numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    cliques: Vec<VertexSet>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    hi: Vec<usize>,
    fset: Vec<VertexSet>,
    subtree_vertices: Vec<VertexSet>,
    home: Vec<usize>,
    vnum: Vec<usize>,
    by_number: Vec<usize>,
    /// `fstart[c]` vertices are homed in cliques before `c` in preorder.
    fstart: Vec<usize>,
    /// Vertices homed in the subtree of each clique.
    homed_within: Vec<VertexSet>,
    /// Vertices homed at proper ancestors of each clique.
    homed_above: Vec<VertexSet>,
}

impl CliqueTree {
    /// Builds the clique tree of a chordal graph deterministically: maximal
    /// cliques sorted lexicographically, rooted at the first one containing
    /// vertex 0, linked by a maximum-weight spanning tree of the clique
    /// intersection graph (Prim, smallest-index tie-break).
    pub fn build(g: &Graph) -> Result<Self, TreeError> {
        let peo = match recognize_chordal(g) {
            Chordality::Chordal(order) => order,
            Chordality::NotChordal(witness) => return Err(TreeError::NotChordal { witness }),
        };
        let cliques = maximal_cliques_from_peo(g, &peo);
        let t = cliques.len();
        let mut parent = vec![None; t];
        if t > 0 {
            let mut in_tree = vec![false; t];
            let mut best: Vec<(usize, usize)> = vec![(0, 0); t];
            in_tree[0] = true;
            for j in 1..t {
                best[j] = (cliques[0].intersection_len(&cliques[j]), 0);
            }
            for _ in 1..t {
                let j = (0..t)
                    .filter(|&j| !in_tree[j])
                    .max_by(|&a, &b| best[a].0.cmp(&best[b].0).then(b.cmp(&a)))
                    .expect("clique left outside the tree");
                in_tree[j] = true;
                parent[j] = Some(best[j].1);
                for k in 0..t {
                    if !in_tree[k] {
                        let w = cliques[j].intersection_len(&cliques[k]);
                        if w > best[k].0 || (w == best[k].0 && j < best[k].1) {
                            best[k] = (w, j);
                        }
                    }
                }
            }
        }
        Ok(Self::from_parts(g.vertex_count(), &cliques, &parent))
    }

    /// Validates an explicit tree and computes its numbering.
    pub fn from_spec(
        g: &Graph,
        cliques: &[VertexSet],
        parent: &[Option<usize>],
    ) -> Result<Self, TreeError> {
        validate_structure(g, cliques, parent)?;
        let tree = Self::from_parts(g.vertex_count(), cliques, parent);
        tree.validate_properties(g)?;
        Ok(tree)
    }

    /// Numbers an already-valid tree. Children are visited by the smallest
    /// vertex id of their f-set; f-sets are numbered in ascending id.
    fn from_parts(n: usize, cliques: &[VertexSet], parent: &[Option<usize>]) -> Self {
        let t = cliques.len();
        let mut children = vec![Vec::new(); t];
        let mut root = None;
        for (c, p) in parent.iter().enumerate() {
            match p {
                Some(p) => children[*p].push(c),
                None => root = Some(c),
            }
        }
        let f_of = |c: usize| match parent[c] {
            Some(p) => cliques[c].difference(&cliques[p]),
            None => cliques[c].clone(),
        };
        for ch in children.iter_mut() {
            ch.sort_by_key(|&c| (f_of(c).first().unwrap_or(usize::MAX), c));
        }
        let mut order = Vec::with_capacity(t);
        if let Some(r) = root {
            let mut stack = vec![r];
            while let Some(c) = stack.pop() {
                order.push(c);
                stack.extend(children[c].iter().rev());
            }
        }
        let mut new_index = vec![0; t];
        for (i, &c) in order.iter().enumerate() {
            new_index[c] = i;
        }
        let cliques: Vec<VertexSet> = order.iter().map(|&c| cliques[c].clone()).collect();
        let parent: Vec<Option<usize>> = order
            .iter()
            .map(|&c| parent[c].map(|p| new_index[p]))
            .collect();
        let mut children = vec![Vec::new(); t];
        for (c, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p].push(c);
            }
        }
        let fset: Vec<VertexSet> = (0..t)
            .map(|c| match parent[c] {
                Some(p) => cliques[c].difference(&cliques[p]),
                None => cliques[c].clone(),
            })
            .collect();
        let mut hi: Vec<usize> = (0..t).collect();
        for c in (0..t).rev() {
            if let Some(p) = parent[c] {
                hi[p] = hi[p].max(hi[c]);
            }
        }
        let mut subtree_vertices = fset.clone();
        for c in (0..t).rev() {
            if let Some(p) = parent[c] {
                let sub = subtree_vertices[c].clone();
                subtree_vertices[p].union_with(&sub);
            }
        }
        let mut home = vec![usize::MAX; n];
        let mut by_number = Vec::with_capacity(n);
        let mut fstart = Vec::with_capacity(fset.len() + 1);
        for (c, f) in fset.iter().enumerate() {
            fstart.push(by_number.len());
            for x in f {
                home[x] = c;
                by_number.push(x);
            }
        }
        fstart.push(by_number.len());
        let homed_within: Vec<VertexSet> = (0..t)
            .map(|c| {
                by_number[fstart[c]..fstart[hi[c] + 1]]
                    .iter()
                    .copied()
                    .collect()
            })
            .collect();
        let mut homed_above = vec![VertexSet::new(); t];
        for c in 0..t {
            if let Some(p) = parent[c] {
                let mut above = homed_above[p].clone();
                above.union_with(&fset[p]);
                homed_above[c] = above;
            }
        }
        let mut vnum = vec![0; n];
        for (i, &x) in by_number.iter().enumerate() {
            vnum[x] = i + 1;
        }
        Self {
            cliques,
            parent,
            children,
            hi,
            fset,
            subtree_vertices,
            home,
            vnum,
            by_number,
            fstart,
            homed_within,
            homed_above,
        }
    }

    fn validate_properties(&self, g: &Graph) -> Result<(), TreeError> {
        let mut union = VertexSet::new();
        let mut total = 0;
        for f in &self.fset {
            union.union_with(f);
            total += f.len();
        }
        if union != g.vertices() || total != g.vertex_count() {
            return Err(TreeError::NotAPartition);
        }
        for c in 0..self.len() {
            let outside = g.vertices().difference(&self.subtree_vertices[c]);
            for x in &outside {
                let k = g.neighbors(x).intersection_len(&self.fset[c]);
                if k != 0 && k != self.fset[c].len() {
                    return Err(TreeError::PartialAdjacency {
                        clique: c,
                        vertex: x,
                    });
                }
            }
        }
        for c in 0..self.len() {
            for d in c + 1..self.len() {
                if !self.is_ancestor_or_self(c, d)
                    && self.fset[c]
                        .iter()
                        .any(|x| g.neighbors(x).intersects(&self.fset[d]))
                {
                    return Err(TreeError::IncomparableAdjacency(c, d));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.home.len()
    }

    pub fn root(&self) -> Option<usize> {
        (!self.cliques.is_empty()).then_some(0)
    }

    pub fn root_clique(&self) -> VertexSet {
        self.cliques.first().cloned().unwrap_or_default()
    }

    pub fn clique(&self, c: usize) -> &VertexSet {
        &self.cliques[c]
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn parent(&self, c: usize) -> Option<usize> {
        self.parent[c]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, c: usize) -> &[usize] {
        &self.children[c]
    }

    /// 1-based preorder number.
    pub fn preorder(&self, c: usize) -> usize {
        c + 1
    }

    /// Inclusive preorder span of the subtree rooted at `c`, 1-based.
    pub fn interval(&self, c: usize) -> (usize, usize) {
        (c + 1, self.hi[c] + 1)
    }

    /// Last clique index of the subtree rooted at `c`.
    pub fn subtree_end(&self, c: usize) -> usize {
        self.hi[c]
    }

    /// f(C).
    pub fn fset(&self, c: usize) -> &VertexSet {
        &self.fset[c]
    }

    /// V(C): vertices whose home lies in the subtree rooted at `c`.
    pub fn subtree_vertices(&self, c: usize) -> &VertexSet {
        &self.subtree_vertices[c]
    }

    /// C(x): the clique whose f-set contains `x`.
    pub fn home(&self, x: usize) -> usize {
        self.home[x]
    }

    /// 1-based vertex number, consistent with clique preorder.
    pub fn vnum(&self, x: usize) -> usize {
        self.vnum[x]
    }

    /// Vertices in ascending number.
    pub fn vertices_by_number(&self) -> &[usize] {
        &self.by_number
    }

    /// Positions in [`Self::vertices_by_number`] of the vertices homed
    /// strictly below clique `c`.
    pub fn numbers_below(&self, c: usize) -> std::ops::Range<usize> {
        self.fstart[c + 1]..self.fstart[self.hi[c] + 1]
    }

    /// `a` is `b` or an ancestor of `b`.
    #[inline]
    pub fn is_ancestor_or_self(&self, a: usize, b: usize) -> bool {
        a <= b && b <= self.hi[a]
    }

    #[inline]
    pub fn is_proper_ancestor(&self, a: usize, b: usize) -> bool {
        a < b && b <= self.hi[a]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.is_ancestor_or_self(a, b) || self.is_ancestor_or_self(b, a)
    }

    /// 𝒞(S) as a set of clique indices.
    pub fn homes_of(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|x| self.home[x]).collect()
    }

    /// Vertices whose home is a proper ancestor of some clique in 𝒞(S).
    pub fn up_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for c in &self.homes_of(s) {
            out.union_with(&self.homed_above[c]);
        }
        out
    }

    /// Up(S) minus N[S].
    pub fn uncov(&self, g: &Graph, s: &VertexSet) -> VertexSet {
        self.up_set(s).difference(&g.closed_neighborhood_of_set(s))
    }

    /// Members of S homed in the ⪯-maximal cliques of 𝒞(S).
    pub fn top_antichain(&self, s: &VertexSet) -> VertexSet {
        let homes = self.homes_of(s);
        s.iter()
            .filter(|&x| {
                let c = self.home[x];
                !homes.iter().any(|h| self.is_proper_ancestor(h, c))
            })
            .collect()
    }

    /// ℒ(S): upmost cliques whose subtree avoids 𝒞(S); {root} when S is empty.
    pub fn l_set(&self, s: &VertexSet) -> VertexSet {
        if s.is_empty() {
            return self.root().into_iter().collect();
        }
        let homes = self.homes_of(s);
        let mut out = VertexSet::new();
        let mut c = 0;
        while c < self.len() {
            if homes.iter().any(|h| self.is_ancestor_or_self(c, h)) {
                c += 1;
            } else {
                out.insert(c);
                c = self.hi[c] + 1;
            }
        }
        out
    }

    /// ℒ′(S): upmost cliques below ℒ(S) that avoid S.
    pub fn l_prime_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for l in &self.l_set(s) {
            let mut c = l;
            while c <= self.hi[l] {
                if self.cliques[c].is_disjoint(s) {
                    out.insert(c);
                    c = self.hi[c] + 1;
                } else {
                    c += 1;
                }
            }
        }
        out
    }

    fn check_k(&self, k: &VertexSet) -> Result<(), TreeError> {
        if k.is_empty() || (!self.is_empty() && k.is_subset(&self.cliques[0])) {
            Ok(())
        } else {
            Err(TreeError::OutsideRoot)
        }
    }

    /// No member of A is homed strictly above another member's home.
    pub fn is_pairwise_incomparable(&self, a: &VertexSet) -> bool {
        let homes = self.homes_of(a);
        homes
            .iter()
            .all(|h| !homes.iter().any(|k| self.is_proper_ancestor(k, h)))
    }

    /// Antichain test where vertices dominated by A ∪ K are exempt from the
    /// covering condition.
    pub fn is_antichain(&self, g: &Graph, k: &VertexSet, a: &VertexSet) -> Result<bool, TreeError> {
        self.check_k(k)?;
        Ok(self.antichain_check(g, k, a, false))
    }

    /// The covering condition without the domination exemption.
    pub fn is_antichain_literal(
        &self,
        g: &Graph,
        k: &VertexSet,
        a: &VertexSet,
    ) -> Result<bool, TreeError> {
        self.check_k(k)?;
        Ok(self.antichain_check(g, k, a, true))
    }

    /// With `literal`, the exemption is dropped for non-empty A only: the
    /// unamended condition never admits ∅, which would leave forced-only
    /// subproblems without any answer.
    pub(crate) fn antichain_check(
        &self,
        g: &Graph,
        k: &VertexSet,
        a: &VertexSet,
        literal: bool,
    ) -> bool {
        let literal = literal && !a.is_empty();
        if !self.is_pairwise_incomparable(a) {
            return false;
        }
        let mut settled = self.up_set(a);
        for h in &self.homes_of(a) {
            settled.union_with(&self.homed_within[h]);
        }
        if !literal {
            settled.union_with(&g.closed_neighborhood_of_set(&a.union(k)));
        }
        settled.len() == self.vertex_count()
    }

    /// Whether a vertex may still join an antichain of the current context:
    /// outside K, and below the root clique when K is non-empty.
    pub(crate) fn eligible(&self, k: &VertexSet, w: usize) -> bool {
        !k.contains(w) && (k.is_empty() || self.home[w] != 0)
    }

    /// A is pairwise incomparable and every vertex that still needs covering
    /// can be repaired by some admissible vertex numbered after tail(A).
    pub fn is_partial_antichain(
        &self,
        g: &Graph,
        k: &VertexSet,
        a: &VertexSet,
    ) -> Result<bool, TreeError> {
        self.check_k(k)?;
        Ok(self.partial_antichain_check(g, k, a))
    }

    pub(crate) fn partial_antichain_check(&self, g: &Graph, k: &VertexSet, a: &VertexSet) -> bool {
        if !self.is_pairwise_incomparable(a) {
            return false;
        }
        let homes = self.homes_of(a);
        let mut settled = self.up_set(a);
        settled.union_with(&g.closed_neighborhood_of_set(&a.union(k)));
        for h in &homes {
            settled.union_with(&self.homed_within[h]);
        }
        if settled.len() == self.vertex_count() {
            return true;
        }
        // A vertex z is repaired by an admissible w when z is homed in the
        // subtree of C(w), at a proper ancestor of C(w), or is adjacent to w.
        let tail = a.iter().map(|x| self.vnum[x]).max().unwrap_or(0);
        let mut repaired_homes = VertexSet::new();
        for &w in &self.by_number[tail..] {
            let hw = self.home[w];
            let admissible = self.eligible(k, w)
                && homes
                    .iter()
                    .all(|h| !self.is_proper_ancestor(h, hw) && !self.is_proper_ancestor(hw, h));
            if admissible {
                settled.union_with(g.closed_neighborhood(w));
                if repaired_homes.insert(hw) {
                    settled.union_with(&self.homed_within[hw]);
                    settled.union_with(&self.homed_above[hw]);
                }
            }
        }
        settled.len() == self.vertex_count()
    }

    /// The subproblem G[V(C) ∪ C] with the subtree of `c` re-rooted so that
    /// the new root's f-set is all of C.
    pub fn subproblem(&self, g: &Graph, c: usize) -> SubProblem {
        let keep = self.subtree_vertices[c].union(&self.cliques[c]);
        let (graph, map) = g.induced_subgraph(&keep);
        let end = self.hi[c];
        let cliques: Vec<VertexSet> = (c..=end).map(|d| map.restrict(&self.cliques[d])).collect();
        let parent: Vec<Option<usize>> = (c..=end)
            .map(|d| {
                if d == c {
                    None
                } else {
                    self.parent[d].map(|p| p - c)
                }
            })
            .collect();
        let tree = CliqueTree::from_parts(graph.vertex_count(), &cliques, &parent);
        SubProblem {
            graph,
            tree,
            map,
            clique_offset: c,
        }
    }

    /// Serializes to the text format: clique count, then `parent v1 v2 …`
    /// per clique with `-1` for the root.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.len());
        for c in 0..self.len() {
            let p = self.parent[c].map_or(-1, |p| p as i64);
            out.push_str(&p.to_string());
            for x in &self.cliques[c] {
                out.push(' ');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// An induced subproblem together with its re-rooted clique tree.
#[derive(Clone, Debug)]
pub struct SubProblem {
    pub graph: Graph,
    pub tree: CliqueTree,
    pub map: IdMap,
    /// Clique `i` of the subproblem tree is clique `i + clique_offset` of the parent tree.
    pub clique_offset: usize,
}

fn maximal_cliques_from_peo(g: &Graph, peo: &[usize]) -> Vec<VertexSet> {
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<VertexSet> = peo
        .iter()
        .map(|&v| {
            let mut c: VertexSet = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
            c.insert(v);
            c
        })
        .collect();
    let mut cliques: Vec<VertexSet> = candidates
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            !candidates
                .iter()
                .enumerate()
                .any(|(j, d)| j != *i && c.is_subset(d) && (c.len() < d.len() || j < *i))
        })
        .map(|(_, c)| c.clone())
        .collect();
    cliques.sort();
    cliques
}

fn validate_structure(
    g: &Graph,
    cliques: &[VertexSet],
    parent: &[Option<usize>],
) -> Result<(), TreeError> {
    let t = cliques.len();
    let n = g.vertex_count();
    if parent.len() != t {
        return Err(TreeError::InvalidParent(t.min(parent.len())));
    }
    if t == 0 {
        return if n == 0 {
            Ok(())
        } else {
            Err(TreeError::UncoveredVertex(0))
        };
    }
    let roots = parent.iter().filter(|p| p.is_none()).count();
    if roots != 1 {
        return Err(TreeError::RootCount(roots));
    }
    for (c, p) in parent.iter().enumerate() {
        if matches!(p, Some(p) if *p >= t || *p == c) {
            return Err(TreeError::InvalidParent(c));
        }
    }
    for c in 0..t {
        let mut cur = c;
        for _ in 0..=t {
            match parent[cur] {
                Some(p) => cur = p,
                None => break,
            }
        }
        if parent[cur].is_some() {
            return Err(TreeError::Cycle(c));
        }
    }
    for (c, q) in cliques.iter().enumerate() {
        if q.is_empty() {
            return Err(TreeError::EmptyClique(c));
        }
        if q.last().is_some_and(|x| x >= n) {
            return Err(TreeError::VertexOutOfRange(c));
        }
        if q.iter()
            .any(|x| !q.difference(g.closed_neighborhood(x)).is_empty())
        {
            return Err(TreeError::NotAClique(c));
        }
        let common = q.iter().fold(g.vertices(), |acc, x| {
            acc.intersection(g.closed_neighborhood(x))
        });
        if common != *q {
            return Err(TreeError::NotMaximal(c));
        }
    }
    for c in 0..t {
        for d in c + 1..t {
            if cliques[c] == cliques[d] {
                return Err(TreeError::DuplicateClique(c, d));
            }
        }
    }
    let mut covered = VertexSet::new();
    for q in cliques {
        covered.union_with(q);
    }
    if let Some(x) = g.vertices().difference(&covered).first() {
        return Err(TreeError::UncoveredVertex(x));
    }
    for (u, v) in g.edges() {
        if !cliques.iter().any(|q| q.contains(u) && q.contains(v)) {
            return Err(TreeError::UncoveredEdge(u, v));
        }
    }
    for x in 0..n {
        let tops = (0..t)
            .filter(|&c| {
                cliques[c].contains(x) && !parent[c].is_some_and(|p| cliques[p].contains(x))
            })
            .count();
        if tops != 1 {
            return Err(TreeError::DisconnectedSubtree(x));
        }
    }
    Ok(())
}
