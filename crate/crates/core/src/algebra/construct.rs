use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::{Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::grading::{leq, GroupElement};
use crate::polyring::{coordinates, Monomial, Polynomial};

use super::slice::{ideal_slice, row_polynomial, DegreeSliceBasis, IdealPresentation};
use super::support::{artinian_certify, support_to_level, AlgebraSupport, ArtinianStatus};

/// Smallest Artinian enlargement `J = I + sum S_h` of `I` with greatest
/// element `omega`, `h` running over realized degrees incomparable with
/// `omega`. Span clauses are added by increasing level, skipping degrees
/// already swallowed by earlier clauses.
pub fn artinianize(ideal: &IdealPresentation, omega: &GroupElement, cap: i64) -> Result<IdealPresentation> {
    let ring = ideal.ring();
    let group = ring.group();
    let top = ring.level(omega)?;
    let window = ring.window()?;
    let original = support_to_level(ideal, top + window)?;
    let not_maximal = || Error::NotMaximal(group.format(omega));
    if original.h(omega)? == 0 {
        return Err(not_maximal());
    }
    for g in original.support() {
        if g != *omega && leq(omega, &g, ring)? {
            return Err(not_maximal());
        }
    }

    let mut region = top + window;
    loop {
        let mut j = ideal.clone();
        for h in ring.degrees_up_to_level(region)? {
            if leq(&h, omega, ring)? || leq(omega, &h, ring)? {
                continue;
            }
            if ideal_slice(&j, &h)?.h() > 0 {
                j.push_span(h)?;
            }
        }
        let check = artinian_certify(&j, cap.max(region + window))?;
        match check.status() {
            ArtinianStatus::Artinian { .. } if check.greatest() == Some(omega) => return Ok(j),
            ArtinianStatus::Artinian { .. } => return Err(not_maximal()),
            _ if region + window <= cap => region += window,
            _ => {
                return Err(Error::NotArtinian(format!(
                    "enlargement still has nonzero slices up to level {cap}"
                )))
            }
        }
    }
}

/// Coordinates of `Lambda : S_omega -> A_omega = Q` on the monomial basis of
/// `S_omega`: the coefficient of the single standard monomial.
pub fn lambda_functional(support: &AlgebraSupport, omega: &GroupElement) -> Result<(Arc<Vec<Monomial>>, Vec<Rational>)> {
    let top = support.slice(omega)?;
    if top.h() != 1 {
        return Err(Error::TopSliceDimension(top.h()));
    }
    let n = top.ambient.len();
    let values = (0..n)
        .map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            top.reduce(&e).swap_remove(0)
        })
        .collect();
    Ok((top.ambient.clone(), values))
}

fn factorial_product(m: &Monomial) -> Rational {
    m.falling_factorial(m)
}

/// Cox-Gorenstein quotient of `A` with socle degree `omega`:
/// `J_g = {P : Lambda(PQ) = 0 for all Q in S_(omega-g)}`.
///
/// Returned as `Ann(F)` with `F = sum_m Lambda(m)/m! M` in the paired ring,
/// since then `(PQ)(F) = Lambda(PQ)`.
pub fn gorensteinize(support: &AlgebraSupport, omega: &GroupElement) -> Result<IdealPresentation> {
    match support.status() {
        ArtinianStatus::Artinian { .. } => {}
        _ => return Err(Error::NotArtinian("gorensteinization needs an Artinian algebra".into())),
    }
    if support.greatest() != Some(omega) {
        return Err(Error::NoGreatestElement);
    }
    let (basis, lambda) = lambda_functional(support, omega)?;
    let dual = support.ring().dual();
    let f = Polynomial::from_terms(
        &dual,
        basis
            .iter()
            .zip(&lambda)
            .map(|(m, l)| (m.clone(), l / factorial_product(m))),
    );
    IdealPresentation::annihilator(support.ring(), &f)
}

/// `(I' : F)_g`. Fails when `F` lies in `I'`.
pub fn colon_slice(base: &IdealPresentation, f: &Polynomial, g: &GroupElement) -> Result<DegreeSliceBasis> {
    if f.is_zero() {
        return Err(Error::InIdeal);
    }
    ideal_slice(&IdealPresentation::colon(base, f)?, g)
}

/// Basis of `(I^-1)_g = {f in S_g : alpha(f) = 0 for all alpha in I}`,
/// as polynomials in the paired ring.
///
/// For homogeneous `f` of degree `g` it is enough to test `alpha in I_g`:
/// lower-degree `alpha` give `alpha(f)` in some `S_(g-h)`, which vanishes iff
/// every `beta alpha in I_g` kills `f`, by perfectness of the top pairing.
pub fn inverse_system_slice(ideal: &IdealPresentation, g: &GroupElement) -> Result<Vec<Polynomial>> {
    let slice = ideal_slice(ideal, g)?;
    let basis = &slice.ambient;
    let weights: Vec<Rational> = basis.iter().map(factorial_product).collect();
    let n = basis.len();
    let m = RationalMatrix::from_fn(slice.ideal_rref.rows(), n, |i, j| slice.ideal_rref.get(i, j) * &weights[j]);
    let dual = ideal.ring().dual();
    Ok(m.kernel_basis()
        .column_vecs()
        .into_iter()
        .map(|v| row_polynomial(&dual, basis, &v))
        .collect())
}

/// Minimal homogeneous generators of the ideal in each computed degree of
/// an Artinian support: a basis of `I_g` modulo `sum_i x_i I_(g - deg x_i)`.
pub fn minimal_generators(support: &AlgebraSupport) -> Result<Vec<(GroupElement, Vec<Polynomial>)>> {
    let ring = support.ring();
    let group = ring.group();
    let mut out = Vec::new();
    for g in support.computed_degrees() {
        let slice = support.slice(&g)?;
        if slice.ideal_dim() == 0 {
            continue;
        }
        let n = slice.ambient.len();
        let mut lower = Vec::new();
        for i in 0..ring.nvars() {
            let below = group.sub(&g, &ring.degrees()[i]);
            if ring.level(&below)? < 0 || !ring.has_monomial_of_degree(&below)? {
                continue;
            }
            let s = support.slice(&below)?;
            for p in s.ideal_basis(ring) {
                lower.push(coordinates(&p.multiply_by_variable(i), &slice.ambient)?);
            }
        }
        let mut span = RationalMatrix::from_rows(n, lower);
        let mut rank = span.rank();
        let mut gens = Vec::new();
        for p in slice.ideal_basis(ring) {
            let row = RationalMatrix::from_rows(n, vec![coordinates(&p, &slice.ambient)?]);
            let grown = span.vstack(&row);
            let r = grown.rank();
            if r > rank {
                span = grown;
                rank = r;
                gens.push(p);
            }
        }
        if !gens.is_empty() {
            out.push((g, gens));
        }
    }
    Ok(out)
}
