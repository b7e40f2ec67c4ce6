//! Simple undirected graphs over dense vertex ids, plus the domination
//! predicates everything else is built on.

use crate::vertex_set::VertexSet;
use thiserror::Error;

/// Largest vertex count the exhaustive oracle accepts.
pub const BRUTE_FORCE_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is not a member of the set")]
    NotAMember { vertex: usize },
    #[error("order is not a permutation of the {n} vertices")]
    NotAPermutation { n: usize },
    #[error("brute force limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Bidirectional id translation between a graph and one of its induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdMap {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl IdMap {
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    /// Translates a set of new ids back to the parent graph.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.new_to_old[v]).collect()
    }

    /// Translates the members of `set` that survive in the subgraph.
    pub fn restrict(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.to_new(v)).collect()
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            for endpoint in [u, v] {
                if endpoint >= n {
                    return Err(GraphError::EndpointOutOfRange { endpoint, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Self::from_adjacency(adjacency))
    }

    fn from_adjacency(adjacency: Vec<VertexSet>) -> Self {
        let closed = adjacency
            .iter()
            .enumerate()
            .map(|(x, nb)| {
                let mut c = nb.clone();
                c.insert(x);
                c
            })
            .collect();
        Self {
            adjacency,
            closed,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = Some(labels);
        self
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adjacency.iter().enumerate() {
            out.extend(nb.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, x: usize) -> &VertexSet {
        &self.adjacency[x]
    }

    /// N[x].
    pub fn closed_neighborhood(&self, x: usize) -> &VertexSet {
        &self.closed[x]
    }

    pub fn checked_closed_neighborhood(&self, x: usize) -> Result<&VertexSet, GraphError> {
        self.closed.get(x).ok_or(GraphError::EndpointOutOfRange {
            endpoint: x,
            n: self.vertex_count(),
        })
    }

    /// N[S].
    pub fn closed_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for x in s {
            out.union_with(&self.closed[x]);
        }
        out
    }

    pub fn is_dominating(&self, d: &VertexSet) -> bool {
        self.closed_neighborhood_of_set(d) == self.vertices()
    }

    /// P(D, x) = { y : N[y] ∩ D = {x} }.
    pub fn private_neighbors(&self, d: &VertexSet, x: usize) -> Result<VertexSet, GraphError> {
        if !d.contains(x) {
            return Err(GraphError::NotAMember { vertex: x });
        }
        Ok(self.private_neighbors_unchecked(d, x))
    }

    pub(crate) fn private_neighbors_unchecked(&self, d: &VertexSet, x: usize) -> VertexSet {
        self.closed[x]
            .iter()
            .filter(|&y| self.closed[y].intersection_len(d) == 1)
            .collect()
    }

    pub fn has_private_neighbor(&self, d: &VertexSet, x: usize) -> bool {
        self.closed[x]
            .iter()
            .any(|y| self.closed[y].intersection_len(d) == 1)
    }

    pub fn is_irredundant(&self, d: &VertexSet) -> bool {
        d.iter().all(|x| self.has_private_neighbor(d, x))
    }

    pub fn is_minimal_dominating(&self, d: &VertexSet) -> bool {
        self.is_dominating(d) && self.is_irredundant(d)
    }

    /// Starts from the full vertex set and drops vertices in `order` whenever
    /// the rest still dominates. A vertex that is not removable stays
    /// non-removable as the set shrinks, so one pass suffices.
    pub fn greedy_minimal_dominating_set(&self, order: &[usize]) -> Result<VertexSet, GraphError> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if order.len() != n
            || order
                .iter()
                .any(|&x| x >= n || std::mem::replace(&mut seen[x], true))
        {
            return Err(GraphError::NotAPermutation { n });
        }
        Ok(self.greedy_on(&self.vertices(), order.iter().copied()))
    }

    /// Greedy minimal dominating set of the subgraph induced by `within`,
    /// scanning candidates in the given order (members outside `within` are skipped).
    pub(crate) fn greedy_on(
        &self,
        within: &VertexSet,
        order: impl Iterator<Item = usize>,
    ) -> VertexSet {
        let mut d = within.clone();
        let mut count = vec![0usize; self.vertex_count()];
        for x in within {
            count[x] = self.closed[x].intersection_len(within);
        }
        for x in order {
            if !d.contains(x) {
                continue;
            }
            let removable = self.closed[x]
                .iter()
                .filter(|&v| within.contains(v))
                .all(|v| count[v] >= 2);
            if removable {
                d.remove(x);
                for v in &self.closed[x] {
                    if within.contains(v) {
                        count[v] -= 1;
                    }
                }
            }
        }
        d
    }

    /// Every minimal dominating set by exhaustive subset scan, ordered by
    /// size and then lexicographically.
    pub fn brute_force_minimal_dominating_sets(&self) -> Result<Vec<VertexSet>, GraphError> {
        let n = self.vertex_count();
        if n > BRUTE_FORCE_LIMIT {
            return Err(GraphError::TooLarge {
                n,
                limit: BRUTE_FORCE_LIMIT,
            });
        }
        let closed: Vec<u32> = (0..n).map(|x| mask_of(&self.closed[x])).collect();
        let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
        let mut found: Vec<u32> = Vec::new();
        for mask in 0..=full {
            if is_minimal_dominating_mask(&closed, full, mask) {
                found.push(mask);
            }
        }
        let mut sets: Vec<VertexSet> = found.into_iter().map(set_of_mask).collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(sets)
    }

    /// G[X] with vertices renumbered densely in ascending original id order.
    pub fn induced_subgraph(&self, x: &VertexSet) -> (Graph, IdMap) {
        let new_to_old: Vec<usize> = x.iter().filter(|&v| v < self.vertex_count()).collect();
        let mut old_to_new = vec![None; self.vertex_count()];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let adjacency = new_to_old
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|u| old_to_new[u])
                    .collect()
            })
            .collect();
        let mut g = Graph::from_adjacency(adjacency);
        if let Some(labels) = &self.labels {
            g.labels = Some(new_to_old.iter().map(|&v| labels[v].clone()).collect());
        }
        (
            g,
            IdMap {
                old_to_new,
                new_to_old,
            },
        )
    }
}

fn mask_of(s: &VertexSet) -> u32 {
    s.iter().fold(0, |m, x| m | (1 << x))
}

fn set_of_mask(mask: u32) -> VertexSet {
    (0..32).filter(|b| mask & (1 << b) != 0).collect()
}

fn is_minimal_dominating_mask(closed: &[u32], full: u32, d: u32) -> bool {
    let mut covered = 0u32;
    for (x, &c) in closed.iter().enumerate() {
        if d & (1 << x) != 0 {
            covered |= c;
        }
    }
    if covered != full {
        return false;
    }
    (0..closed.len()).filter(|&x| d & (1 << x) != 0).all(|x| {
        let mut m = closed[x];
        while m != 0 {
            let y = m.trailing_zeros() as usize;
            m &= m - 1;
            if (closed[y] & d).count_ones() == 1 {
                return true;
            }
        }
        false
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete, e1, path};
    use proptest::prelude::*;

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(0, &[]).unwrap().vertex_count(), 0);
        let g = Graph::new(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::EndpointOutOfRange { endpoint: 2, n: 2 })
        );
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn neighborhoods() {
        let g = e1();
        assert_eq!(*g.closed_neighborhood(B), VertexSet::from([A, B, C, D]));
        let iso = Graph::new(2, &[]).unwrap();
        assert_eq!(*iso.closed_neighborhood(1), VertexSet::from([1]));
        let k3 = complete(3);
        assert_eq!(*k3.closed_neighborhood(2), VertexSet::from([0, 1, 2]));
        assert!(g.checked_closed_neighborhood(9).is_err());
    }

    #[test]
    fn domination_and_privates() {
        let g = e1();
        assert!(g.is_dominating(&VertexSet::from([B, E])));
        assert!(!g.is_dominating(&VertexSet::from([B])));
        assert!(g.is_dominating(&g.vertices()));
        assert_eq!(
            g.private_neighbors(&VertexSet::from([A, C]), A).unwrap(),
            VertexSet::from([A])
        );
        assert_eq!(
            g.private_neighbors(&VertexSet::from([B, D]), D).unwrap(),
            VertexSet::from([E])
        );
        assert!(g.private_neighbors(&VertexSet::from([B]), D).is_err());
        let k3 = complete(3);
        assert_eq!(
            k3.private_neighbors(&VertexSet::from([1]), 1).unwrap(),
            k3.vertices()
        );
    }

    #[test]
    fn minimality() {
        let g = e1();
        assert!(g.is_minimal_dominating(&VertexSet::from([A, C, D])));
        assert!(!g.is_minimal_dominating(&VertexSet::from([A, B])));
        assert!(Graph::new(0, &[])
            .unwrap()
            .is_minimal_dominating(&VertexSet::new()));
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(
            complete(3)
                .greedy_minimal_dominating_set(&[0, 1, 2])
                .unwrap(),
            VertexSet::from([2])
        );
        assert_eq!(
            path(3).greedy_minimal_dominating_set(&[0, 1, 2]).unwrap(),
            VertexSet::from([1])
        );
        assert_eq!(
            Graph::new(0, &[])
                .unwrap()
                .greedy_minimal_dominating_set(&[])
                .unwrap(),
            VertexSet::new()
        );
        assert!(path(3).greedy_minimal_dominating_set(&[0, 0, 2]).is_err());
        assert!(path(3).greedy_minimal_dominating_set(&[0, 1]).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            path(3).brute_force_minimal_dominating_sets().unwrap(),
            vec![VertexSet::from([1]), VertexSet::from([0, 2])]
        );
        let k4: Vec<_> = (0..4).map(VertexSet::singleton).collect();
        assert_eq!(
            complete(4).brute_force_minimal_dominating_sets().unwrap(),
            k4
        );
        assert_eq!(
            e1().brute_force_minimal_dominating_sets().unwrap(),
            vec![
                VertexSet::from([B, D]),
                VertexSet::from([B, E]),
                VertexSet::from([A, C, D]),
                VertexSet::from([A, C, E]),
            ]
        );
        assert!(Graph::new(21, &[])
            .unwrap()
            .brute_force_minimal_dominating_sets()
            .is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let g = e1();
        let (h, map) = g.induced_subgraph(&VertexSet::from([D, E]));
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert_eq!(map.new_to_old, vec![D, E]);
        assert_eq!(map.to_new(D), Some(0));
        assert_eq!(map.to_new(A), None);
        let (same, _) = g.induced_subgraph(&g.vertices());
        assert_eq!(same, g);
        let (empty, _) = g.induced_subgraph(&VertexSet::new());
        assert_eq!(empty.vertex_count(), 0);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn privates_lie_in_closed_neighborhood(g in arb_graph(9), mask in any::<u16>()) {
            let d: VertexSet = (0..g.vertex_count()).filter(|&x| mask & (1 << x) != 0).collect();
            for x in &d {
                prop_assert!(g.private_neighbors(&d, x).unwrap().is_subset(g.closed_neighborhood(x)));
            }
        }

        #[test]
        fn minimality_matches_no_dominating_proper_subset(g in arb_graph(8), mask in any::<u16>()) {
            let d: VertexSet = (0..g.vertex_count()).filter(|&x| mask & (1 << x) != 0).collect();
            let members = d.to_vec();
            let no_smaller = (0u32..(1 << members.len()) - 1).all(|sub| {
                let s: VertexSet = members.iter().enumerate()
                    .filter(|(i, _)| sub & (1 << i) != 0).map(|(_, &x)| x).collect();
                !g.is_dominating(&s)
            });
            prop_assert_eq!(g.is_minimal_dominating(&d), g.is_dominating(&d) && no_smaller);
        }

        #[test]
        fn greedy_is_an_oracle_member(g in arb_graph(10), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut order: Vec<usize> = (0..g.vertex_count()).collect();
            order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let d = g.greedy_minimal_dominating_set(&order).unwrap();
            prop_assert!(g.brute_force_minimal_dominating_sets().unwrap().contains(&d));
        }

        #[test]
        fn brute_force_is_duplicate_free_and_minimal(g in arb_graph(10)) {
            let sets = g.brute_force_minimal_dominating_sets().unwrap();
            let unique: std::collections::BTreeSet<_> = sets.iter().cloned().collect();
            prop_assert_eq!(unique.len(), sets.len());
            prop_assert!(sets.iter().all(|d| g.is_minimal_dominating(d)));
        }
    }
}
