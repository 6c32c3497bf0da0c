//! Graded polynomial rings over the rationals, monomial bases of graded
//! pieces, and the differential (apolarity) action of `Q = K[X_1..X_n]` on
//! `S = K[x_1..x_n]`.

mod apolar;
mod poly;
mod ring;
mod text;

pub use apolar::{apply_diff, catalecticant, coordinates, partials_of_degree};
pub use poly::{Monomial, Polynomial};
pub use ring::{GradedRing, Role};
pub use text::{format_monomial, format_polynomial, parse_polynomial};

pub(crate) use poly::same_ring;
