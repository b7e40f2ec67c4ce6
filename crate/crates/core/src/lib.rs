//! Enumeration of minimal dominating sets in chordal graphs with polynomial
//! delay, built on a rooted clique tree.

pub mod clique_tree;
pub mod enumerate;
pub mod extension;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod vertex_set;

pub use clique_tree::{Chordality, CliqueTree, TreeError};
pub use enumerate::{enum_minimal_dominating_sets, minimal_dominating_sets, Sink};
pub use extension::{EnumContext, ExtensionError, PrivateWitness};
pub use generators::{CnfError, CnfFormula, GadgetInstance};
pub use graph::{Graph, GraphError, IdMap};
pub use io::ParseError;
pub use vertex_set::VertexSet;
