//! Finitely presented graded commutative rings over ℤ.
//!
//! Graded pieces come from the Smith form of the relation lattice in each
//! degree; ideal membership and normal forms use echelon bases. The engine is
//! plainly commutative, which is sound here because the only odd generator is
//! 2-torsion.

pub mod builtins;
pub mod error;
pub mod lattice;
pub mod maps;
pub mod parse;
pub mod poly;
pub mod presentation;

pub use builtins::{builtin, builtin_map};
pub use error::{ChowError, Result};
pub use maps::{pushforward_projection, solve_by_pullbacks, verify_map, RingMap};
pub use poly::Poly;
pub use presentation::{GradedPiece, Grading, Presentation};
