//! Simple expansion sets and their cubical complexes.
//!
//! An [`ExpansionInstance`] supplies elements with supports in a space `X`
//! and a unique proper expansion for those that can be expanded. Vertices are
//! finite sets of elements with disjoint supports covering `X`; two vertices
//! are joined by an edge when one arises from the other by expanding a single
//! element. The [`complex`] module computes links, cubes, joins, stabilizers
//! and explorations for any instance. Two instances ship with the crate:
//! [`thompson::ThompsonV`] and [`houghton::Houghton`].
//!
//! ```
//! use expansion_cubes::complex::{cube_vertices, cubes_at};
//! use expansion_cubes::thompson::{ball_vertex, ThompsonV};
//!
//! let v = ball_vertex(["0", "10", "11"]).unwrap();
//! let squares: Vec<_> = cubes_at(&ThompsonV, &v, 2).into_iter().filter(|c| c.dim() == 2).collect();
//! assert_eq!(squares.len(), 9);
//! assert_eq!(cube_vertices(&ThompsonV, &squares[0]).unwrap().len(), 4);
//! ```

pub mod complex;
pub mod error;
pub mod expansion;
pub mod houghton;
pub mod io;
pub mod oracle;
pub mod thompson;
pub mod verify;

pub use error::{Error, Result};
pub use expansion::{
    apply_move, canonical_key, is_full_support, validate_vertex, AscendingPath, ExpansionInstance, Move, Vertex,
};
