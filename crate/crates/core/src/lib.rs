//! Exact computations for Artinian algebras graded by finitely generated
//! abelian groups: Hilbert functions, Cox-Gorenstein checks, Lefschetz
//! properties, Hasse-Hilbert diagrams and toric reconstruction.

pub mod algebra;
pub mod arith;
pub mod error;
pub mod grading;
pub mod hasse;
pub mod lefschetz;
pub mod polyring;
pub mod toric;

pub use algebra::{AlgebraSupport, ArtinianStatus, DegreeSliceBasis, GorensteinVerdict, IdealPresentation};
pub use arith::{Integer, IntegerMatrix, Rational, RationalMatrix};
pub use error::{Error, Result};
pub use grading::{GroupElement, GroupSpec, OrderSpec, PositivityCertificate};
pub use hasse::HasseHilbertDiagram;
pub use lefschetz::{ComparabilityEdge, LefschetzReport, LinearSpace};
pub use polyring::{GradedRing, Monomial, Polynomial, Role};
pub use toric::{Fan, MonomialIdeal, Polyhedron, Reconstruction, WeightData};
