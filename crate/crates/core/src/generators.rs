//! Instance factories: random chordal graphs, the CNF gadget with its
//! explicit clique tree, and split-graph doubling.

use crate::clique_tree::{CliqueTree, TreeError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Grows a chordal graph one vertex at a time. Each new vertex picks a
/// current maximal clique uniformly and joins each of its members with
/// probability `density` (at least one member when `density > 0`).
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Graph {
    let p = density.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    for v in 0..n {
        let Some(q) = (!cliques.is_empty()).then(|| rng.gen_range(0..cliques.len())) else {
            cliques.push(vec![v]);
            continue;
        };
        let mut picked: Vec<usize> = cliques[q]
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(p))
            .collect();
        if picked.is_empty() && p > 0.0 {
            picked.push(*cliques[q].choose(&mut rng).expect("cliques are non-empty"));
        }
        edges.extend(picked.iter().map(|&u| (u, v)));
        if picked.len() == cliques[q].len() {
            cliques[q].push(v);
        } else {
            picked.push(v);
            cliques.push(picked);
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// Split(G): the vertices of G form a clique, a copy x′ of each vertex forms
/// an independent set, and x–y′ is an edge when x ∈ N[y]. Copies get ids
/// `n..2n`; the returned vector maps each split vertex to its original.
pub fn split_double(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
        for y in g.closed_neighborhood(u) {
            edges.push((u, n + y));
        }
    }
    let split = Graph::new(2 * n, &edges).expect("split edges are valid");
    (split, (0..2 * n).map(|x| x % n).collect())
}

/// Rejected CNF input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CnfError {
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("clause {clause} contains both polarities of variable {var}")]
    Tautology { clause: usize, var: usize },
    #[error("literal {literal} in clause {clause} is outside 1..={vars}")]
    LiteralOutOfRange {
        clause: usize,
        literal: i64,
        vars: usize,
    },
    #[error("line {line}: {msg}")]
    Dimacs { line: usize, msg: String },
}

/// A formula in conjunctive normal form. Literals are signed 1-based
/// variable indices; each clause is sorted and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    vars: usize,
    clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    pub fn new(vars: usize, clauses: Vec<Vec<i64>>) -> Result<Self, CnfError> {
        let mut normalized = Vec::with_capacity(clauses.len());
        for (j, mut clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(CnfError::EmptyClause(j));
            }
            if let Some(&literal) = clause
                .iter()
                .find(|l| **l == 0 || l.unsigned_abs() as usize > vars)
            {
                return Err(CnfError::LiteralOutOfRange {
                    clause: j,
                    literal,
                    vars,
                });
            }
            clause.sort_unstable_by_key(|l| (l.unsigned_abs(), *l));
            clause.dedup();
            if let Some(w) = clause.windows(2).find(|w| w[0] == -w[1]) {
                return Err(CnfError::Tautology {
                    clause: j,
                    var: w[0].unsigned_abs() as usize,
                });
            }
            normalized.push(clause);
        }
        Ok(Self {
            vars,
            clauses: normalized,
        })
    }

    /// Parses DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>`
    /// header, then zero-terminated clauses that may span lines.
    pub fn from_dimacs(text: &str) -> Result<Self, CnfError> {
        let err = |line: usize, msg: &str| CnfError::Dimacs {
            line,
            msg: msg.to_string(),
        };
        let mut header = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
                continue;
            }
            if trimmed.starts_with('p') {
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if header.is_some() {
                    return Err(err(line, "duplicate header"));
                }
                match fields.as_slice() {
                    ["p", "cnf", v, m] => {
                        let v = v
                            .parse::<usize>()
                            .map_err(|_| err(line, "bad variable count"))?;
                        let m = m
                            .parse::<usize>()
                            .map_err(|_| err(line, "bad clause count"))?;
                        header = Some((v, m));
                    }
                    _ => return Err(err(line, "expected `p cnf <vars> <clauses>`")),
                }
                continue;
            }
            if header.is_none() {
                return Err(err(line, "clause before header"));
            }
            for token in trimmed.split_whitespace() {
                let literal = token
                    .parse::<i64>()
                    .map_err(|_| err(line, &format!("bad literal `{token}`")))?;
                if literal == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(literal);
                }
            }
        }
        let (vars, m) = header.ok_or_else(|| err(last_line.max(1), "missing header"))?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != m {
            return Err(err(
                last_line.max(1),
                &format!("header declares {m} clauses, found {}", clauses.len()),
            ));
        }
        Self::new(vars, clauses)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[Vec<i64>] {
        &self.clauses
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    /// Every satisfying assignment, by brute force over 2^vars candidates.
    pub fn satisfying_assignments(&self) -> Vec<Vec<bool>> {
        all_assignments(self.vars)
            .filter(|a| self.satisfied_by(a))
            .collect()
    }

    /// Random formula with clauses of 1 to `max_width` distinct variables.
    pub fn random(vars: usize, clauses: usize, max_width: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pool: Vec<i64> = (1..=vars as i64).collect();
        let width = max_width.clamp(1, vars.max(1));
        let clauses = (0..clauses)
            .map(|_| {
                let k = rng.gen_range(1..=width);
                pool.choose_multiple(&mut rng, k)
                    .map(|&v| if rng.gen_bool(0.5) { v } else { -v })
                    .collect()
            })
            .collect();
        Self::new(vars, clauses).expect("generated clauses are valid")
    }
}

fn all_assignments(vars: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << vars).map(move |bits| (0..vars).map(|i| bits >> i & 1 == 1).collect())
}

/// The reduction graph of a CNF formula with its explicit clique tree.
///
/// Vertex ids: clause vertices c_j are `0..m`; p_i and p̄_i are `m + 2i` and
/// `m + 2i + 1`; then each variable in turn gets a block x_i, y_i, z_i,
/// followed by l_i, q_i when the positive literal occurs and l̄_i, q̄_i when
/// the negative one does.
#[derive(Clone, Debug)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub tree: CliqueTree,
    pub s_set: VertexSet,
    pub x_set: VertexSet,
    /// Ids of l_i and l̄_i per variable, absent when the literal does not occur.
    pub literal_map: Vec<(Option<usize>, Option<usize>)>,
}

impl GadgetInstance {
    /// D contains S and avoids X.
    pub fn qualifies(&self, d: &VertexSet) -> bool {
        self.s_set.is_subset(d) && !d.intersects(&self.x_set)
    }

    /// The partial assignment fixed by the literal vertices in D.
    pub fn partial_assignment(&self, d: &VertexSet) -> Vec<Option<bool>> {
        self.literal_map
            .iter()
            .map(|&(pos, neg)| {
                match (
                    pos.is_some_and(|v| d.contains(v)),
                    neg.is_some_and(|v| d.contains(v)),
                ) {
                    (true, false) => Some(true),
                    (false, true) => Some(false),
                    _ => None,
                }
            })
            .collect()
    }

    /// Total assignments that agree with the partial assignment of D.
    pub fn completions(&self, d: &VertexSet) -> Vec<Vec<bool>> {
        let partial = self.partial_assignment(d);
        all_assignments(partial.len())
            .filter(|a| {
                partial
                    .iter()
                    .zip(a)
                    .all(|(p, v)| p.is_none_or(|p| p == *v))
            })
            .collect()
    }
}

/// Builds the reduction graph of `f` by listing its clique tree and
/// validating the tree against the induced graph.
pub fn sat_gadget(f: &CnfFormula) -> Result<GadgetInstance, TreeError> {
    let m = f.clauses().len();
    let n = f.vars();
    let occurs = |literal: i64| -> VertexSet {
        (0..m)
            .filter(|&j| f.clauses()[j].contains(&literal))
            .collect()
    };
    let mut labels: Vec<String> = (1..=m).map(|j| format!("c{j}")).collect();
    for i in 1..=n {
        labels.push(format!("p{i}"));
        labels.push(format!("~p{i}"));
    }
    let mut cliques: Vec<VertexSet> = vec![(0..m + 2 * n).collect()];
    let mut parent: Vec<Option<usize>> = vec![None];
    let mut s_set = VertexSet::new();
    let mut literal_map = Vec::with_capacity(n);
    let mut z_ids = Vec::with_capacity(n);
    let mut push = |cliques: &mut Vec<VertexSet>, members: VertexSet, up: usize| {
        cliques.push(members);
        parent.push(Some(up));
        cliques.len() - 1
    };
    for i in 0..n {
        let (p, pbar) = (m + 2 * i, m + 2 * i + 1);
        let x = labels.len();
        let (y, z) = (x + 1, x + 2);
        labels.extend([
            format!("x{}", i + 1),
            format!("y{}", i + 1),
            format!("z{}", i + 1),
        ]);
        s_set.extend([x, y]);
        z_ids.push(z);
        let cx = push(&mut cliques, VertexSet::from_iter([x, p, pbar]), 0);
        let cy = push(&mut cliques, VertexSet::from_iter([y, x]), cx);
        push(&mut cliques, VertexSet::from_iter([y, z]), cy);
        let mut literal = |sign: i64, anchor: usize, tag: &str| {
            let clauses = occurs(sign * (i as i64 + 1));
            if clauses.is_empty() {
                return None;
            }
            let l = labels.len();
            labels.extend([format!("{tag}l{}", i + 1), format!("{tag}q{}", i + 1)]);
            let mut members = clauses;
            members.extend([l, anchor]);
            let cl = push(&mut cliques, members, 0);
            push(&mut cliques, VertexSet::from_iter([l + 1, l]), cl);
            Some(l)
        };
        let pos = literal(1, p, "");
        let neg = literal(-1, pbar, "~");
        literal_map.push((pos, neg));
    }
    if cliques[0].is_empty() {
        cliques.clear();
        parent.clear();
    }
    let mut edges = Vec::new();
    for c in &cliques {
        let members = c.to_vec();
        for (k, &u) in members.iter().enumerate() {
            edges.extend(members[k + 1..].iter().map(|&v| (u, v)));
        }
    }
    let graph = Graph::new(labels.len(), &edges)
        .expect("gadget edges are valid")
        .with_labels(labels);
    let tree = CliqueTree::from_spec(&graph, &cliques, &parent)?;
    let mut x_set: VertexSet = (0..m + 2 * n).collect();
    x_set.extend(z_ids);
    Ok(GadgetInstance {
        graph,
        tree,
        s_set,
        x_set,
        literal_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique_tree::{recognize_chordal, Chordality};

    #[test]
    fn random_graphs_are_chordal() {
        for seed in 0..50 {
            for density in [0.0, 0.2, 0.5, 0.9, 1.0] {
                let g = random_chordal(15, density, seed);
                assert!(matches!(recognize_chordal(&g), Chordality::Chordal(_)));
            }
        }
        assert_eq!(random_chordal(0, 0.5, 1).vertex_count(), 0);
        assert_eq!(random_chordal(6, 1.0, 3).edge_count(), 15);
        assert_eq!(random_chordal(12, 0.4, 7), random_chordal(12, 0.4, 7));
    }

    #[test]
    fn split_graphs() {
        let (s, _) = split_double(&Graph::new(1, &[]).unwrap());
        assert_eq!(s.edges(), vec![(0, 1)]);
        let (s, _) = split_double(&crate::fixtures::e1());
        assert_eq!(s.vertex_count(), 10);
        assert!(matches!(recognize_chordal(&s), Chordality::Chordal(_)));
    }

    fn gadget_readout(f: &CnfFormula) -> std::collections::BTreeSet<Vec<bool>> {
        let gadget = sat_gadget(f).unwrap();
        crate::enumerate::minimal_dominating_sets(&gadget.graph)
            .unwrap()
            .iter()
            .filter(|d| gadget.qualifies(d))
            .flat_map(|d| gadget.completions(d))
            .collect()
    }

    #[test]
    fn single_positive_clause() {
        let f = CnfFormula::new(1, vec![vec![1]]).unwrap();
        let g = sat_gadget(&f).unwrap();
        let label = |c: usize| -> Vec<String> {
            g.tree.clique(c).iter().map(|v| g.graph.label(v)).collect()
        };
        assert_eq!(label(0), ["c1", "p1", "~p1"]);
        let mut all: Vec<Vec<String>> = (0..g.tree.len()).map(label).collect();
        all.sort();
        let expected: Vec<Vec<&str>> = vec![
            vec!["c1", "p1", "l1"],
            vec!["c1", "p1", "~p1"],
            vec!["p1", "~p1", "x1"],
            vec!["x1", "y1"],
            vec!["y1", "z1"],
            vec!["l1", "q1"],
        ];
        let mut expected: Vec<Vec<String>> = expected
            .into_iter()
            .map(|c| c.into_iter().map(String::from).collect())
            .collect();
        expected.sort();
        assert_eq!(all, expected);
        assert_eq!(g.literal_map, vec![(Some(6), None)]);
        assert_eq!(g.s_set.to_vec(), vec![3, 4]);
        assert_eq!(g.x_set.to_vec(), vec![0, 1, 2, 5]);
    }

    #[test]
    fn gadget_examples() {
        let contradiction = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(gadget_readout(&contradiction).is_empty());
        let either = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        let sat: std::collections::BTreeSet<_> =
            either.satisfying_assignments().into_iter().collect();
        assert_eq!(sat.len(), 3);
        assert_eq!(gadget_readout(&either), sat);
    }

    #[test]
    fn gadget_children_of_root_are_split_by_s_and_x() {
        for seed in 0..20 {
            let f = CnfFormula::random(3, 3, 3, seed);
            let g = sat_gadget(&f).unwrap();
            assert!(matches!(
                recognize_chordal(&g.graph),
                Chordality::Chordal(_)
            ));
            let sx = g.s_set.union(&g.x_set);
            for &c in g.tree.children(0) {
                let v = g.tree.subtree_vertices(c);
                assert!(v.is_subset(&sx) || !v.intersects(&sx));
            }
        }
    }

    #[test]
    fn cnf_validation_and_dimacs() {
        assert_eq!(
            CnfFormula::new(1, vec![vec![]]),
            Err(CnfError::EmptyClause(0))
        );
        assert_eq!(
            CnfFormula::new(2, vec![vec![2, -2]]),
            Err(CnfError::Tautology { clause: 0, var: 2 })
        );
        assert!(matches!(
            CnfFormula::new(1, vec![vec![3]]),
            Err(CnfError::LiteralOutOfRange { .. })
        ));
        let f = CnfFormula::from_dimacs("c demo\np cnf 3 2\n1 -3 0\n2\n3 0\n").unwrap();
        assert_eq!(f.clauses(), &[vec![1, -3], vec![2, 3]]);
        assert!(matches!(
            CnfFormula::from_dimacs("p cnf 2 2\n1 0\n"),
            Err(CnfError::Dimacs { line: 2, .. })
        ));
        assert!(matches!(
            CnfFormula::from_dimacs("1 0\n"),
            Err(CnfError::Dimacs { line: 1, .. })
        ));
    }
}
