//! Small named graphs used by tests, examples and the CLI.

use crate::clique_tree::CliqueTree;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n > 2 {
        edges.push((n - 1, 0));
    }
    Graph::new(n, &edges).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("valid clique")
}

/// K_{1,k} with the center at id 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::new(k + 1, &edges).expect("valid star")
}

/// The five-vertex tree a–b, b–c, b–d, d–e with ids a=0 … e=4.
pub fn e1() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)])
        .expect("valid fixture")
        .with_labels(["a", "b", "c", "d", "e"].map(String::from).to_vec())
}

/// Clique tree of [`e1`] rooted at {a,b} with children {b,c}, {b,d} and
/// {d,e} below {b,d}.
pub fn e1_tree() -> CliqueTree {
    let cliques = vec![
        VertexSet::from([0, 1]),
        VertexSet::from([1, 2]),
        VertexSet::from([1, 3]),
        VertexSet::from([3, 4]),
    ];
    CliqueTree::from_spec(&e1(), &cliques, &[None, Some(0), Some(0), Some(2)])
        .expect("valid fixture tree")
}
