use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::grading::{positivity_certificate, GroupElement, GroupSpec, OrderSpec, PositivityCertificate};

use super::Monomial;

/// Whether a ring holds polynomials or the differential operators acting on them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Polynomial,
    Differential,
}

/// Variables, their degrees, the grading group and the order on it.
///
/// Rings are shared behind `Arc`; monomial bases are memoized per degree.
#[derive(Debug)]
pub struct GradedRing {
    names: Vec<String>,
    degrees: Vec<GroupElement>,
    group: GroupSpec,
    order: OrderSpec,
    role: Role,
    certificate: Option<PositivityCertificate>,
    weights: Option<Vec<i64>>,
    basis_cache: Mutex<HashMap<GroupElement, Arc<Vec<Monomial>>>>,
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.degrees == other.degrees
            && self.group == other.group
            && self.order == other.order
            && self.role == other.role
    }
}

impl Eq for GradedRing {}

impl GradedRing {
    pub fn new(
        names: Vec<String>,
        degrees: Vec<GroupElement>,
        group: GroupSpec,
        order: OrderSpec,
        role: Role,
    ) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        if names.len() != degrees.len() {
            return Err(Error::Invalid(format!(
                "{} names but {} degrees",
                names.len(),
                degrees.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Invalid(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate variable name `{n}`")));
            }
        }
        for d in &degrees {
            group.check(d)?;
        }
        if let OrderSpec::Functional(fs) = &order {
            if fs.is_empty() || fs.iter().any(|f| f.len() != group.free_rank()) {
                return Err(Error::Invalid(format!(
                    "functionals must be nonempty vectors of length {}",
                    group.free_rank()
                )));
            }
        }
        let certificate = positivity_certificate(&degrees, group.free_rank());
        let weights = certificate.as_ref().and_then(|c| c.integral()).map(|phi| {
            degrees
                .iter()
                .map(|d| phi.iter().zip(&d.free).map(|(p, x)| p * x).sum())
                .collect()
        });
        Ok(Arc::new(GradedRing {
            names,
            degrees,
            group,
            order,
            role,
            certificate,
            weights,
            basis_cache: Mutex::new(HashMap::new()),
        }))
    }

    /// The ring on the other side of the apolarity pairing: same degrees,
    /// variable names with ASCII case swapped (prefixed with `D` on collision).
    pub fn dual(&self) -> Arc<GradedRing> {
        let swapped: Vec<String> = self.names.iter().map(|n| swap_case(n)).collect();
        let collides = swapped.iter().any(|s| self.names.contains(s));
        let names = if collides {
            match self.role {
                Role::Polynomial => self.names.iter().map(|n| format!("D{n}")).collect(),
                Role::Differential => self
                    .names
                    .iter()
                    .map(|n| n.strip_prefix('D').unwrap_or(n).to_string())
                    .collect(),
            }
        } else {
            swapped
        };
        let role = match self.role {
            Role::Polynomial => Role::Differential,
            Role::Differential => Role::Polynomial,
        };
        Arc::new(GradedRing {
            names,
            degrees: self.degrees.clone(),
            group: self.group.clone(),
            order: self.order.clone(),
            role,
            certificate: self.certificate.clone(),
            weights: self.weights.clone(),
            basis_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn certificate(&self) -> Option<&PositivityCertificate> {
        self.certificate.as_ref()
    }

    /// Same variables and degrees (names and role may differ).
    pub fn is_pairing_compatible(&self, other: &GradedRing) -> bool {
        self.degrees == other.degrees && self.group == other.group
    }

    pub(crate) fn weights(&self) -> Result<&[i64]> {
        self.weights.as_deref().ok_or_else(|| {
            Error::UnsupportedGrading(
                "grading admits no positivity certificate, so graded pieces may be infinite".into(),
            )
        })
    }

    /// Integer phi-level of a degree under the certificate.
    pub fn level(&self, g: &GroupElement) -> Result<i64> {
        self.weights()?;
        Ok(self.certificate_level(g))
    }

    fn certificate_level(&self, g: &GroupElement) -> i64 {
        let phi = &self.certificate.as_ref().expect("weights imply certificate").phi;
        phi.iter()
            .zip(&g.free)
            .map(|(p, x)| i64::try_from(p.numer()).expect("small certificate") * x)
            .sum()
    }

    /// Maximal phi-weight of a variable.
    pub fn window(&self) -> Result<i64> {
        Ok(*self.weights()?.iter().max().expect("at least one variable"))
    }

    pub fn monomial_degree(&self, m: &Monomial) -> GroupElement {
        let mut acc = self.group.zero();
        for (e, d) in m.exponents().iter().zip(&self.degrees) {
            if *e > 0 {
                acc = self.group.add(&acc, &self.group.scale(d, *e as i64));
            }
        }
        acc
    }

    /// Monomials of degree `g`, in descending graded-lex order.
    pub fn monomials_of_degree(&self, g: &GroupElement) -> Result<Arc<Vec<Monomial>>> {
        self.group.check(g)?;
        self.weights()?;
        if let Some(hit) = self.basis_cache.lock().expect("cache poisoned").get(g) {
            return Ok(hit.clone());
        }
        let mut out = Vec::new();
        self.enumerate(g, false, &mut out);
        out.sort_by(|a, b| b.grlex_cmp(a));
        let out = Arc::new(out);
        self.basis_cache
            .lock()
            .expect("cache poisoned")
            .insert(g.clone(), out.clone());
        Ok(out)
    }

    /// True iff some monomial has degree `g`.
    pub fn has_monomial_of_degree(&self, g: &GroupElement) -> Result<bool> {
        self.group.check(g)?;
        self.weights()?;
        if let Some(hit) = self.basis_cache.lock().expect("cache poisoned").get(g) {
            return Ok(!hit.is_empty());
        }
        let mut out = Vec::new();
        self.enumerate(g, true, &mut out);
        Ok(!out.is_empty())
    }

    fn enumerate(&self, g: &GroupElement, first_only: bool, out: &mut Vec<Monomial>) {
        let budget = self.certificate_level(g);
        if budget < 0 {
            return;
        }
        let mut exps = vec![0u32; self.nvars()];
        let rest = g.clone();
        self.backtrack(0, budget, rest, &mut exps, first_only, out);
    }

    fn backtrack(
        &self,
        i: usize,
        budget: i64,
        rest: GroupElement,
        exps: &mut Vec<u32>,
        first_only: bool,
        out: &mut Vec<Monomial>,
    ) {
        if first_only && !out.is_empty() {
            return;
        }
        let w = self.weights.as_ref().expect("checked by caller");
        if i == self.nvars() {
            if rest.is_zero() {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let max_e = budget / w[i];
        let mut rest = rest;
        for e in 0..=max_e {
            exps[i] = e as u32;
            self.backtrack(i + 1, budget - e * w[i], rest.clone(), exps, first_only, out);
            rest = self.group.sub(&rest, &self.degrees[i]);
        }
        exps[i] = 0;
    }

    /// Degrees of all monomials with phi-level at most `max_level`, sorted by
    /// level and then by element.
    pub fn degrees_up_to_level(&self, max_level: i64) -> Result<Vec<GroupElement>> {
        let levels = self.degrees_by_level(max_level)?;
        Ok(levels.into_iter().flatten().collect())
    }

    /// `result[L]` = degrees of monomials at phi-level exactly `L`.
    pub fn degrees_by_level(&self, max_level: i64) -> Result<Vec<Vec<GroupElement>>> {
        let w = self.weights()?.to_vec();
        let top = max_level.max(-1);
        let mut levels: Vec<BTreeSet<GroupElement>> = vec![BTreeSet::new(); (top + 1) as usize];
        if top >= 0 {
            levels[0].insert(self.group.zero());
        }
        for lvl in 1..=top {
            let mut here = BTreeSet::new();
            for (wi, d) in w.iter().zip(&self.degrees) {
                if *wi <= lvl {
                    for g in &levels[(lvl - wi) as usize] {
                        here.insert(self.group.add(g, d));
                    }
                }
            }
            levels[lvl as usize] = here;
        }
        Ok(levels.into_iter().map(|s| s.into_iter().collect()).collect())
    }
}

fn swap_case(s: &str) -> String {
    s.chars()
        .map(|c| {
            if c.is_ascii_lowercase() {
                c.to_ascii_uppercase()
            } else {
                c.to_ascii_lowercase()
            }
        })
        .collect()
}
