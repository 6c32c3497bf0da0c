use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::grading::GroupElement;

use super::GradedRing;

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    /// Graded-lex comparison: total degree first, then lexicographic.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }

    /// Product of falling factorials `prod_i b_i! / (b_i - a_i)!` for `self = a`
    /// dividing `b`; the coefficient of `X^a` acting on `x^b`.
    pub fn falling_factorial(&self, b: &Monomial) -> Rational {
        let mut acc = num_bigint::BigInt::one();
        for (&a, &b) in self.0.iter().zip(&b.0) {
            for k in 0..a {
                acc *= b - k;
            }
        }
        Rational::from_integer(acc)
    }
}

/// Sparse polynomial with exact rational coefficients over a [`GradedRing`].
///
/// Zero coefficients are never stored. The degree is recorded when the
/// polynomial is nonzero and homogeneous.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<GradedRing>,
    terms: BTreeMap<Monomial, Rational>,
    degree: Option<GroupElement>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_ring(a: &Arc<GradedRing>, b: &Arc<GradedRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn from_terms(ring: &Arc<GradedRing>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.exponents().len(), ring.nvars(), "monomial length mismatch");
            if c.is_zero() {
                continue;
            }
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self::from_map(ring.clone(), map)
    }

    fn from_map(ring: Arc<GradedRing>, terms: BTreeMap<Monomial, Rational>) -> Self {
        let mut degree = None;
        let mut homogeneous = true;
        for m in terms.keys() {
            let d = ring.monomial_degree(m);
            match &degree {
                None => degree = Some(d),
                Some(prev) if *prev != d => {
                    homogeneous = false;
                    break;
                }
                _ => {}
            }
        }
        Polynomial {
            ring,
            terms,
            degree: if homogeneous { degree } else { None },
        }
    }

    pub fn zero(ring: &Arc<GradedRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
            degree: None,
        }
    }

    pub fn constant(ring: &Arc<GradedRing>, c: Rational) -> Self {
        Self::from_terms(ring, [(Monomial::one(ring.nvars()), c)])
    }

    pub fn one(ring: &Arc<GradedRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn variable(ring: &Arc<GradedRing>, i: usize) -> Self {
        Self::from_terms(ring, [(Monomial::var(ring.nvars(), i), Rational::one())])
    }

    pub fn monomial(ring: &Arc<GradedRing>, m: Monomial, c: Rational) -> Self {
        Self::from_terms(ring, [(m, c)])
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn degree(&self) -> Option<&GroupElement> {
        self.degree.as_ref()
    }

    /// Zero counts as homogeneous (of every degree).
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree.is_some()
    }

    pub fn homogeneous_degree(&self) -> Result<&GroupElement> {
        self.degree.as_ref().ok_or(Error::NotHomogeneous)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The same polynomial viewed in another ring with identical degrees.
    pub fn reinterpret(&self, ring: &Arc<GradedRing>) -> Result<Polynomial> {
        if !self.ring.is_pairing_compatible(ring) {
            return Err(Error::RingMismatch("rings have different gradings".into()));
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
            degree: self.degree.clone(),
        })
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "operands live in rings over {:?} and {:?}",
                self.ring.names(),
                other.ring.names()
            )))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut map = self.terms.clone();
        for (m, c) in &other.terms {
            let e = map.entry(m.clone()).or_insert_with(Rational::zero);
            *e += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self::from_map(self.ring.clone(), map))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                *map.entry(a.mul(b)).or_insert_with(Rational::zero) += c * d;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self::from_map(self.ring.clone(), map))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
            degree: self.degree.clone(),
        }
    }

    fn neg_ref(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[i];
            (e > 0).then(|| {
                let mut ex = m.exponents().to_vec();
                ex[i] -= 1;
                (Monomial::new(ex), c * Rational::from_integer(e.into()))
            })
        });
        Self::from_terms(&self.ring, terms)
    }

    pub fn multiply_by_variable(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut ex = m.exponents().to_vec();
            ex[i] += 1;
            (Monomial::new(ex), c.clone())
        });
        Self::from_terms(&self.ring, terms)
    }

    /// Evaluates at a rational point. Panics on a length mismatch.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars(), "point has wrong length");
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            acc + v
        })
    }

    /// Terms in descending graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_polynomial(self))
    }
}
