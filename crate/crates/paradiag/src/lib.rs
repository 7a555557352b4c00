//! Exact counts of convex-polygon triangulations by the number of diagonals
//! parallel to a fixed segment, with three independent routes to every
//! number: closed forms ([`closed_forms`]), brute-force enumeration
//! ([`polygon`]), and Dyck-path avoidance counts ([`dyck`]). The
//! [`identities`] registry cross-checks the Catalan identities connecting
//! them.
//!
//! Vertices of the n-gon are labeled `0..n` counterclockwise; two segments
//! are parallel exactly when their endpoint sums agree mod n.
//!
//! ```
//! use paradiag::closed_forms::{f, CountQuery};
//! use paradiag::polygon::histogram;
//!
//! // Hexagon triangulations with exactly one diagonal parallel to side 0-1:
//! // the closed form and the exhaustive enumeration agree.
//! let by_formula = f(&CountQuery { n: 6, x: 0, y: 1, k: 1 }).unwrap();
//! let by_enumeration = histogram(6, 0, 1).unwrap().count(1);
//! assert_eq!(by_formula, by_enumeration);
//! assert_eq!(by_formula, 4u32.into());
//! ```

pub mod catalan;
pub mod closed_forms;
pub mod dyck;
mod error;
pub mod identities;
pub mod polygon;

pub use error::Error;
