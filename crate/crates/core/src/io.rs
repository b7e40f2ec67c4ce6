//! Text formats: graphs (`n m` then `u v` edge lines) and clique trees
//! (`t` then `parent v1 v2 …` per clique). `#` starts a comment.

use crate::clique_tree::{CliqueTree, TreeError};
use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange {
        line: usize,
        endpoint: usize,
        n: usize,
    },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("expected {expected} {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("invalid clique tree: {0}")]
    Tree(#[from] TreeError),
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn numbers<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>, ParseError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| ParseError::Malformed {
                line,
                msg: format!("bad number `{tok}`"),
            })
        })
        .collect()
}

/// Parses the graph format. Vertex ids are 0-based; duplicate edges collapse.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return Err(ParseError::Malformed {
            line: 1,
            msg: "missing `n m` header".into(),
        });
    };
    let [n, m] = numbers::<usize>(line, header)?[..] else {
        return Err(ParseError::Malformed {
            line,
            msg: "header must be `n m`".into(),
        });
    };
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let [u, v] = numbers::<usize>(line, body)?[..] else {
            return Err(ParseError::Malformed {
                line,
                msg: "edge must be `u v`".into(),
            });
        };
        if let Some(endpoint) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(ParseError::EndpointOutOfRange { line, endpoint, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            what: "edges",
            expected: m,
            found: edges.len(),
        });
    }
    Graph::new(n, &edges).map_err(|e| match e {
        GraphError::EndpointOutOfRange { endpoint, n } => ParseError::EndpointOutOfRange {
            line: 0,
            endpoint,
            n,
        },
        other => ParseError::Malformed {
            line: 0,
            msg: other.to_string(),
        },
    })
}

/// Serializes a graph in the format read by [`parse_graph`].
pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the clique-tree format and validates it against `g`.
pub fn parse_tree(text: &str, g: &Graph) -> Result<CliqueTree, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(ParseError::Malformed {
        line: 1,
        msg: "missing clique count".into(),
    })?;
    let [t] = numbers::<usize>(line, header)?[..] else {
        return Err(ParseError::Malformed {
            line,
            msg: "first line must be the clique count".into(),
        });
    };
    let mut cliques = Vec::with_capacity(t);
    let mut parents = Vec::with_capacity(t);
    for (line, body) in lines {
        let fields = numbers::<i64>(line, body)?;
        let Some((&p, members)) = fields.split_first() else {
            unreachable!("content lines are non-empty");
        };
        let parent = match p {
            -1 => None,
            p if p >= 0 => Some(p as usize),
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    msg: format!("bad parent index {p}"),
                })
            }
        };
        let mut clique = VertexSet::new();
        for &v in members {
            if v < 0 || v as usize >= g.vertex_count() {
                return Err(ParseError::Malformed {
                    line,
                    msg: format!("vertex {v} out of range"),
                });
            }
            clique.insert(v as usize);
        }
        cliques.push(clique);
        parents.push(parent);
    }
    if cliques.len() != t {
        return Err(ParseError::CountMismatch {
            what: "cliques",
            expected: t,
            found: cliques.len(),
        });
    }
    Ok(CliqueTree::from_spec(g, &cliques, &parents)?)
}
