//! Degree-by-degree linear algebra in graded quotients `A = S/I`.
//!
//! Ideals are never given a Groebner basis. Each graded piece `I_g` is
//! assembled as a row space in the monomial basis of `S_g` and brought to
//! reduced row-echelon form; the non-pivot monomials span `A_g`.

mod construct;
mod slice;
mod support;

pub use construct::{
    artinianize, colon_slice, gorensteinize, inverse_system_slice, lambda_functional,
    minimal_generators,
};
pub use slice::{hilbert_function, ideal_slice, multiplication_matrix, DegreeSliceBasis, IdealPresentation};
pub use support::{
    artinian_certify, is_cox_gorenstein, poincare_pairing, socle_slice, support_to_level,
    AlgebraSupport, ArtinianStatus, GorensteinVerdict, DEFAULT_LEVEL_CAP,
};

#[cfg(test)]
mod tests;
