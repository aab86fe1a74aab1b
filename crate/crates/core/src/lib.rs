//! Strongly chordal graphs and MAT-labelings.
//!
//! A graph is strongly chordal exactly when its edges admit a MAT-labeling,
//! and then the labeling yields the exponents of the graphic arrangement.
//! This crate recognizes strongly chordal graphs, builds MAT-labelings from
//! the clique intersection poset, verifies labelings, and reports obstructions
//! (holes, suns, crowns) when no labeling exists.
//!
//! ```
//! use matfree::graph::named;
//! use matfree::labeling::{construct_mat_labeling, verify_mat_labeling};
//! use matfree::invariants::exponents_from_labeling;
//!
//! let g = named::seven_vertex_example();
//! let lab = construct_mat_labeling(&g).unwrap();
//! assert!(verify_mat_labeling(&lab).is_ok());
//! assert_eq!(exponents_from_labeling(&lab).unwrap().values(), &[0, 1, 2, 2, 2, 3, 3]);
//! ```

pub mod batch;
pub mod chordal;
pub mod generate;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod labeling;
pub mod poset;
pub mod strong;

pub use batch::Exec;
pub use graph::{Edge, Graph, GraphError, Vertex, VertexSet};
pub use labeling::{EdgeLabeling, LabelingError, MatViolation};
