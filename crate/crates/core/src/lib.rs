//! Canonical linear encodings of circle graphs.
//!
//! A connected circle graph is decomposed into its minimal split tree, whose
//! nodes are prime circle graphs, complete graphs and stars. Each node gets a
//! linear canonical form (prime nodes through the rotation-invariant encoding
//! of their unique chord diagram), and the tree is canonized layer by layer
//! from the leaves towards its center. Two circle graphs are isomorphic
//! exactly when their encodings are equal, and every encoding decodes back to
//! a graph-labeled tree isomorphic to the one it came from.
//!
//! ```
//! use circle_canon::{canon_graph, CanonInput, CircleRep};
//!
//! // the path on four vertices, drawn as a chord diagram
//! let p4 = CircleRep::parse(&[0, 1, 0, 2, 1, 3, 2, 3]).unwrap().0;
//! // the same diagram, rotated and with different chord names
//! let other = CircleRep::parse(&[8, 5, 9, 8, 7, 9, 7, 5]).unwrap().0;
//!
//! let a = canon_graph(&CanonInput::from_rep(p4)).unwrap();
//! let b = canon_graph(&CanonInput::from_rep(other)).unwrap();
//! assert_eq!(a, b);
//! ```

pub mod canon;
pub mod chord;
pub mod error;
pub mod generate;
pub mod graph;
pub mod lexsort;
pub mod oracle;
pub mod pipeline;
pub mod rotation;
pub mod split;
pub mod text;
pub mod tree;

pub use canon::{canon_tree, center_root, decode, derive_node_representation, realize, NodeRep, RootedTree};
pub use chord::{CircleRep, LambdaWord};
pub use error::{Error, Result};
pub use graph::{ColoredGraph, Encoding};
pub use lexsort::lex_sort_sequences;
pub use pipeline::{canon_connected, canon_graph, isomorphic, CanonInput};
pub use rotation::min_rotation;
pub use split::{find_split, split_closure, SeedOrder, Split};
pub use tree::{NodeId, NodeKind, SplitTree, VertexId};
