//! Tanabe algebras `T_l(r,p,n)` realised inside partition algebras.
//!
//! Diagrams are stored canonically, vectors live in either the diagram basis or
//! the orbit (x) basis, and all arithmetic is exact over `Q` or `Q(zeta_r)`.

pub mod action;
pub mod arith;
pub mod bratteli;
pub mod diagram;
pub mod error;
pub mod group;
pub mod level;
pub mod limits;
pub mod necklace;
pub mod spectrum;
pub mod tanabe;
pub mod vector;
pub mod verify;

pub use arith::{Cyclotomic, Matrix, Rational, Scalar};
pub use diagram::{Diagram, Vertex};
pub use error::{Error, Result};
pub use level::Level;
pub use tanabe::{TanabeClass, TanabeParams};
pub use vector::{Basis, DiagramVector};
