use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use crate::arith::{Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::grading::GroupElement;

use super::{Monomial, Polynomial};

/// Differential action of `op` on `f`: `X^a` sends `x^b` to
/// `prod_i b_i!/(b_i-a_i)! x^(b-a)` when `a <= b`, and to zero otherwise.
///
/// The two rings must carry the same variable degrees; the result lives in
/// the ring of `f`.
pub fn apply_diff(op: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if !op.ring().is_pairing_compatible(f.ring()) {
        return Err(Error::RingMismatch(
            "operator and polynomial have different variable degrees".into(),
        ));
    }
    let mut terms = Vec::new();
    for (a, c) in op.terms() {
        for (b, d) in f.terms() {
            if let Some(rest) = a.quotient_of(b) {
                terms.push((rest, c * d * a.falling_factorial(b)));
            }
        }
    }
    Ok(Polynomial::from_terms(f.ring(), terms))
}

/// Matrix of `Q_g -> S_(w-g)`, `alpha -> alpha(f)`, for `f` homogeneous of
/// degree `w`. Rows follow the monomial basis of `S_(w-g)`, columns the
/// basis of `Q_g`, both in the ring's basis order.
pub fn catalecticant(f: &Polynomial, g: &GroupElement) -> Result<RationalMatrix> {
    let ring = f.ring();
    let omega = f.homogeneous_degree()?;
    let target = ring.group().sub(omega, g);
    let rows = ring.monomials_of_degree(&target)?;
    let cols = ring.monomials_of_degree(g)?;
    let index: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mat = RationalMatrix::zeros(rows.len(), cols.len());
    for (j, a) in cols.iter().enumerate() {
        for (b, c) in f.terms() {
            if let Some(rest) = a.quotient_of(b) {
                let i = index[&rest];
                let v = mat.get(i, j) + c * a.falling_factorial(b);
                mat.set(i, j, v);
            }
        }
    }
    Ok(mat)
}

/// Spanning set of the degree-`g` slice of the cyclic module `Q.f`, produced
/// by repeated first-order partial derivatives (independent of
/// [`catalecticant`]).
pub fn partials_of_degree(f: &Polynomial, g: &GroupElement) -> Result<Vec<Polynomial>> {
    let ring = f.ring();
    let omega = f.homogeneous_degree()?.clone();
    let target_level = ring.level(g)?;
    let mut frontier = vec![f.clone()];
    let mut seen: BTreeSet<Vec<(Monomial, Rational)>> = BTreeSet::new();
    let mut out = Vec::new();
    let key = |p: &Polynomial| -> Vec<(Monomial, Rational)> {
        p.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect()
    };
    if omega == *g {
        out.push(f.clone());
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            for i in 0..ring.nvars() {
                let d = p.partial_derivative(i);
                if d.is_zero() {
                    continue;
                }
                let deg = d.homogeneous_degree()?.clone();
                if ring.level(&deg)? < target_level {
                    continue;
                }
                if !seen.insert(key(&d)) {
                    continue;
                }
                if deg == *g {
                    out.push(d.clone());
                }
                next.push(d);
            }
        }
        frontier = next;
    }
    if out.is_empty() && f.is_zero() {
        return Ok(Vec::new());
    }
    Ok(out.into_iter().filter(|p| !p.is_zero()).collect())
}

/// Coordinates of a homogeneous polynomial in a monomial basis.
pub fn coordinates(p: &Polynomial, basis: &[Monomial]) -> Result<Vec<Rational>> {
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut v = vec![Rational::zero(); basis.len()];
    for (m, c) in p.terms() {
        let i = index
            .get(m)
            .ok_or_else(|| Error::Invalid("monomial outside the given basis".into()))?;
        v[*i] = c.clone();
    }
    Ok(v)
}
