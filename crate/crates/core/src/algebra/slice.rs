use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::{Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::grading::GroupElement;
use crate::polyring::{catalecticant, coordinates, GradedRing, Monomial, Polynomial};

/// A homogeneous ideal, given as the sum of
/// * the ideal generated by homogeneous polynomials,
/// * whole graded pieces `S_h` ("span clauses"),
/// * an annihilator `Ann(f)` of a homogeneous form in the paired ring,
/// * colon ideals `(I' : F)`.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    ring: Arc<GradedRing>,
    generators: Vec<Polynomial>,
    spans: Vec<GroupElement>,
    apolar: Option<Polynomial>,
    colons: Vec<(IdealPresentation, Polynomial)>,
}

impl IdealPresentation {
    pub fn zero(ring: &Arc<GradedRing>) -> Self {
        IdealPresentation {
            ring: ring.clone(),
            generators: Vec::new(),
            spans: Vec::new(),
            apolar: None,
            colons: Vec::new(),
        }
    }

    /// The ideal generated by `generators`. Zero generators are dropped.
    pub fn new(ring: &Arc<GradedRing>, generators: Vec<Polynomial>) -> Result<Self> {
        let mut out = Self::zero(ring);
        for g in generators {
            out.push_generator(g)?;
        }
        Ok(out)
    }

    /// The maximal homogeneous ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Arc<GradedRing>) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)).collect();
        Self::new(ring, gens).expect("variables are homogeneous")
    }

    /// `Ann(f)` inside `ring`, for `f` homogeneous in a ring with the same
    /// variable degrees.
    pub fn annihilator(ring: &Arc<GradedRing>, f: &Polynomial) -> Result<Self> {
        let mut out = Self::zero(ring);
        out.set_apolar(f)?;
        Ok(out)
    }

    /// `(base : F)`. Fails with [`Error::InIdeal`] when `F` lies in `base`.
    pub fn colon(base: &IdealPresentation, f: &Polynomial) -> Result<Self> {
        if !crate::polyring::same_ring(base.ring(), f.ring()) {
            return Err(Error::RingMismatch("colon polynomial lives in another ring".into()));
        }
        let deg = f.homogeneous_degree()?;
        let slice = ideal_slice(base, deg)?;
        if slice.contains(f)? {
            return Err(Error::InIdeal);
        }
        let mut out = Self::zero(base.ring());
        out.colons.push((base.clone(), f.clone()));
        Ok(out)
    }

    pub fn push_generator(&mut self, g: Polynomial) -> Result<()> {
        if !crate::polyring::same_ring(&self.ring, g.ring()) {
            return Err(Error::RingMismatch("generator lives in another ring".into()));
        }
        if g.is_zero() {
            return Ok(());
        }
        g.homogeneous_degree()?;
        self.generators.push(g);
        Ok(())
    }

    /// Adds the clause "all of `S_h`".
    pub fn push_span(&mut self, h: GroupElement) -> Result<()> {
        self.ring.group().check(&h)?;
        if !self.spans.contains(&h) {
            self.spans.push(h);
        }
        Ok(())
    }

    pub fn set_apolar(&mut self, f: &Polynomial) -> Result<()> {
        if !self.ring.is_pairing_compatible(f.ring()) {
            return Err(Error::RingMismatch(
                "apolar form must live in a ring with the same degrees".into(),
            ));
        }
        f.homogeneous_degree()?;
        self.apolar = Some(f.clone());
        Ok(())
    }

    pub fn with_span(mut self, h: GroupElement) -> Result<Self> {
        self.push_span(h)?;
        Ok(self)
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn spans(&self) -> &[GroupElement] {
        &self.spans
    }

    pub fn apolar(&self) -> Option<&Polynomial> {
        self.apolar.as_ref()
    }

    pub fn colons(&self) -> &[(IdealPresentation, Polynomial)] {
        &self.colons
    }

    /// A variable `x_j` none of whose powers can lie in the ideal: no
    /// generator has a pure power of `x_j` among its terms and no span
    /// clause sits in a degree `k deg(x_j)`. Such an ideal is not Artinian.
    /// Returns `None` when the presentation has annihilator or colon parts.
    pub fn pure_power_obstruction(&self) -> Result<Option<usize>> {
        if self.apolar.is_some() || !self.colons.is_empty() {
            return Ok(None);
        }
        let ring = &self.ring;
        let n = ring.nvars();
        let weights = ring.weights()?;
        'vars: for j in 0..n {
            for g in &self.generators {
                let pure = g
                    .terms()
                    .keys()
                    .any(|m| m.exponents().iter().enumerate().all(|(i, &e)| i == j || e == 0));
                if pure {
                    continue 'vars;
                }
            }
            for h in &self.spans {
                let lvl = ring.level(h)?;
                if lvl >= 0 && lvl % weights[j] == 0 {
                    let k = lvl / weights[j];
                    if ring.group().scale(&ring.degrees()[j], k) == *h {
                        continue 'vars;
                    }
                }
            }
            return Ok(Some(j));
        }
        Ok(None)
    }
}

/// The degree-`g` piece of an ideal and of the quotient.
#[derive(Clone, Debug)]
pub struct DegreeSliceBasis {
    pub degree: GroupElement,
    /// Monomial basis of `S_g` in the ring's basis order.
    pub ambient: Arc<Vec<Monomial>>,
    /// Rows span `I_g` in monomial coordinates; reduced row-echelon form
    /// without zero rows.
    pub ideal_rref: RationalMatrix,
    pub pivots: Vec<usize>,
    /// Indices into `ambient` of the standard (non-pivot) monomials.
    pub standard: Vec<usize>,
}

impl DegreeSliceBasis {
    fn from_rows(degree: GroupElement, ambient: Arc<Vec<Monomial>>, rows: Vec<Vec<Rational>>) -> Self {
        let n = ambient.len();
        let r = RationalMatrix::from_rows(n, rows).rref();
        let ideal_rref = r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>());
        let standard = (0..n).filter(|c| !r.pivots.contains(c)).collect();
        DegreeSliceBasis {
            degree,
            ambient,
            ideal_rref,
            pivots: r.pivots,
            standard,
        }
    }

    /// `h_g = dim A_g`.
    pub fn h(&self) -> usize {
        self.standard.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn standard_monomials(&self) -> Vec<&Monomial> {
        self.standard.iter().map(|&i| &self.ambient[i]).collect()
    }

    /// Coordinates in the standard-monomial basis of `A_g` of the class of a
    /// vector given in monomial coordinates.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient.len(), "vector length mismatch");
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, x) in self.ideal_rref.row(i).iter().enumerate() {
                if !x.is_zero() {
                    v[j] -= &f * x;
                }
            }
        }
        self.standard.iter().map(|&j| v[j].clone()).collect()
    }

    /// Class of a homogeneous polynomial of degree `g` in `A_g`.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        if p.is_zero() {
            return Ok(vec![Rational::zero(); self.h()]);
        }
        if p.homogeneous_degree()? != &self.degree {
            return Err(Error::Invalid("polynomial has the wrong degree for this slice".into()));
        }
        Ok(self.reduce(&coordinates(p, &self.ambient)?))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.iter().all(Zero::is_zero))
    }

    /// Basis of `I_g` as polynomials.
    pub fn ideal_basis(&self, ring: &Arc<GradedRing>) -> Vec<Polynomial> {
        (0..self.ideal_rref.rows())
            .map(|i| row_polynomial(ring, &self.ambient, self.ideal_rref.row(i)))
            .collect()
    }
}

pub(crate) fn row_polynomial(ring: &Arc<GradedRing>, basis: &[Monomial], row: &[Rational]) -> Polynomial {
    Polynomial::from_terms(ring, basis.iter().cloned().zip(row.iter().cloned()))
}

/// `I_g`: the degree-`g` piece of the ideal, with the quotient basis.
pub fn ideal_slice(ideal: &IdealPresentation, g: &GroupElement) -> Result<DegreeSliceBasis> {
    let ring = ideal.ring();
    let ambient = ring.monomials_of_degree(g)?;
    let n = ambient.len();
    if n == 0 {
        return Ok(DegreeSliceBasis::from_rows(g.clone(), ambient, Vec::new()));
    }
    let group = ring.group();
    let index: HashMap<&Monomial, usize> = ambient.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    };

    for f in &ideal.generators {
        let rest = group.sub(g, f.homogeneous_degree()?);
        for m in ring.monomials_of_degree(&rest)?.iter() {
            let mut v = vec![Rational::zero(); n];
            for (b, c) in f.terms() {
                v[index[&m.mul(b)]] += c;
            }
            rows.push(v);
        }
    }

    let mut covered = vec![false; n];
    for h in &ideal.spans {
        let rest = group.sub(g, h);
        let lower = ring.monomials_of_degree(&rest)?;
        if lower.is_empty() {
            continue;
        }
        for a in ring.monomials_of_degree(h)?.iter() {
            for b in lower.iter() {
                covered[index[&a.mul(b)]] = true;
            }
        }
    }
    rows.extend((0..n).filter(|&i| covered[i]).map(unit));

    if let Some(f) = &ideal.apolar {
        let kernel = catalecticant(f, g)?.kernel_basis();
        rows.extend(kernel.column_vecs());
    }

    for (base, f) in &ideal.colons {
        let target = group.add(g, f.homogeneous_degree()?);
        let upper = ideal_slice(base, &target)?;
        let cols: Vec<Vec<Rational>> = ambient
            .iter()
            .map(|m| {
                let prod = &Polynomial::monomial(ring, m.clone(), Rational::one()) * f;
                upper.normal_form(&prod)
            })
            .collect::<Result<_>>()?;
        let residual = RationalMatrix::from_columns(upper.h(), &cols);
        rows.extend(residual.kernel_basis().column_vecs());
    }

    Ok(DegreeSliceBasis::from_rows(g.clone(), ambient, rows))
}

/// `h_g` for every requested degree.
pub fn hilbert_function(
    ideal: &IdealPresentation,
    degrees: &[GroupElement],
) -> Result<BTreeMap<GroupElement, usize>> {
    degrees
        .iter()
        .map(|g| Ok((g.clone(), ideal_slice(ideal, g)?.h())))
        .collect()
}

/// Matrix of `A_g -> A_(g + deg p)`, multiplication by `p`, in the
/// standard-monomial bases of the two slices.
pub(crate) fn multiplication_between(
    source: &DegreeSliceBasis,
    target: &DegreeSliceBasis,
    p: &Polynomial,
) -> Result<RationalMatrix> {
    let ring = p.ring();
    let cols: Vec<Vec<Rational>> = source
        .standard_monomials()
        .into_iter()
        .map(|m| {
            let prod = &Polynomial::monomial(ring, m.clone(), Rational::one()) * p;
            target.normal_form(&prod)
        })
        .collect::<Result<_>>()?;
    Ok(RationalMatrix::from_columns(target.h(), &cols))
}

/// Matrix of multiplication by the homogeneous polynomial `p` from `A_g` to
/// `A_(g + deg p)`, computed from fresh slices.
pub fn multiplication_matrix(ideal: &IdealPresentation, p: &Polynomial, g: &GroupElement) -> Result<RationalMatrix> {
    let deg = p.homogeneous_degree()?;
    let source = ideal_slice(ideal, g)?;
    let target = ideal_slice(ideal, &ideal.ring().group().add(g, deg))?;
    multiplication_between(&source, &target, p)
}
