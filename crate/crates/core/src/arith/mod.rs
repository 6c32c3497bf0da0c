//! Exact rational and integer linear algebra.
//!
//! Everything downstream (catalecticants, slice bases, pairings, lattice
//! kernels) is built on the two dense matrix types defined here.

mod integer;
mod rational;

pub use integer::{
    integer_kernel_with_congruences, smith_normal_form, IntegerMatrix, SmithForm,
};
pub use rational::{Rref, RationalMatrix};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Arbitrary-precision integer.
pub type Integer = BigInt;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q` (optional sign).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
