//! Exact arithmetic and invariant theory for pencils of binary cubics.
//!
//! Fields are ℚ, F_p and their quadratic extensions; every computation is exact.

pub mod atlas;
pub mod characters;
pub mod error;
pub mod field;
pub mod form;
pub mod invariants;
pub mod par;
pub mod pencil;
pub mod pgl2;
pub mod poly;
pub mod scalar;
pub mod wall;

pub use atlas::{classify_orbit, parse_pencil, OrbitLabel};
pub use error::{Error, Result};
pub use field::{Fe, Field};
pub use form::{BinaryForm, ProjPoint};
pub use invariants::{classify_stability, pencil_invariants, StabilityClass};
pub use par::Exec;
pub use pencil::Pencil;
pub use pgl2::{FiniteSubgroup, ProjMatrix, SubgroupName};
pub use wall::Rho;
