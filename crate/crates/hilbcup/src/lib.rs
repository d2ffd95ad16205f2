//! Exact arithmetic for the graded cup product on integer class functions
//! of symmetric groups, and through it the ring structure of the
//! cohomology of Hilbert schemes of points in the plane.
//!
//! The weight-n class algebra carries the convolution product and its
//! associated graded cup product; the isomorphism onto the power-sum ring
//! turns products into differential operators, and the degree slices of
//! the alternating character carry the Chern classes of the tautological
//! sheaf. Everything is exact: arbitrary-precision integers in the
//! class-function basis, rationals on the polynomial side.

pub mod character;
pub mod classalg;
pub mod error;
pub mod hilbert;
pub mod json;
pub mod linalg;
pub mod partition;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};
