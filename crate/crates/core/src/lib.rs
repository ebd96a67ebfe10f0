//! Exact-arithmetic root combinatorics for symmetrizable Kac-Moody
//! superalgebras.
//!
//! The crate builds the root data of the finite and affine families
//! (`A(m|n)`, `B(m|n)`, `D(m|n)`, their twisted affinizations, `G(3)`,
//! `F(4)`, `D(2|1,a)` and the corresponding Lie-algebra degenerations),
//! computes integral root subsystems with their Kac-Moody identification,
//! classifies (quasi-)admissible weights and admissible levels, and verifies
//! character/denominator formulas on truncated series.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and
//! infinite real-root sets are represented by finitely many arithmetic
//! progressions of `delta`-shifts.

pub mod admissible;
pub mod cartan;
pub mod catalog;
pub mod charring;
pub mod integral;
pub mod lattice;
pub mod linalg;
pub mod ratio;
pub mod rootsys;
pub mod shifts;

pub use cartan::{build_algebra, AlgebraModel, SpineGraph};
pub use catalog::{Family, Twist};
pub use lattice::{coroot_pairing, dot_reflect, pair, reflect, Space, Weight};
pub use ratio::Q;
pub use rootsys::{CatalogId, ProgressionSet};
