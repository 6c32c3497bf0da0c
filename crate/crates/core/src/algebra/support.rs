use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::arith::RationalMatrix;
use crate::error::{Error, Result};
use crate::grading::{leq, GroupElement};
use crate::polyring::{GradedRing, Polynomial};

use super::slice::{ideal_slice, multiplication_between, DegreeSliceBasis, IdealPresentation};

/// Default cap on the certificate level explored by [`artinian_certify`].
pub const DEFAULT_LEVEL_CAP: i64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArtinianStatus {
    /// Every slice above certificate level `frontier` vanishes.
    Artinian { frontier: i64 },
    /// No power of this variable lies in the ideal.
    NotArtinian { variable: usize },
    /// Nonzero slices persisted up to the level cap.
    Inconclusive { cap: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinVerdict {
    Gorenstein { omega: GroupElement },
    NotGorenstein { socle: Vec<(GroupElement, usize)> },
}

/// All slices of `S/I` up to some certificate level, with the Artinian
/// status of the quotient.
#[derive(Debug)]
pub struct AlgebraSupport {
    ideal: IdealPresentation,
    slices: BTreeMap<GroupElement, Arc<DegreeSliceBasis>>,
    levels: Vec<Vec<GroupElement>>,
    status: ArtinianStatus,
    greatest: Option<GroupElement>,
    extra: Mutex<HashMap<GroupElement, Arc<DegreeSliceBasis>>>,
}

impl AlgebraSupport {
    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.ideal.ring()
    }

    pub fn status(&self) -> &ArtinianStatus {
        &self.status
    }

    pub fn is_artinian(&self) -> bool {
        matches!(self.status, ArtinianStatus::Artinian { .. })
    }

    pub fn greatest(&self) -> Option<&GroupElement> {
        self.greatest.as_ref()
    }

    /// Highest certificate level whose slices were computed.
    pub fn computed_level(&self) -> i64 {
        self.levels.len() as i64 - 1
    }

    /// Slice at `g`, from the computed table or freshly computed.
    pub fn slice(&self, g: &GroupElement) -> Result<Arc<DegreeSliceBasis>> {
        if let Some(s) = self.slices.get(g) {
            return Ok(s.clone());
        }
        if let Some(s) = self.extra.lock().expect("cache poisoned").get(g) {
            return Ok(s.clone());
        }
        let s = Arc::new(ideal_slice(&self.ideal, g)?);
        self.extra
            .lock()
            .expect("cache poisoned")
            .insert(g.clone(), s.clone());
        Ok(s)
    }

    pub fn h(&self, g: &GroupElement) -> Result<usize> {
        Ok(self.slice(g)?.h())
    }

    /// Computed degrees with `h_g > 0`, by certificate level and then by
    /// element.
    pub fn support(&self) -> Vec<GroupElement> {
        self.levels
            .iter()
            .flatten()
            .filter(|g| self.slices[*g].h() > 0)
            .cloned()
            .collect()
    }

    /// `(g, h_g)` over [`support`](Self::support).
    pub fn hilbert_function(&self) -> Vec<(GroupElement, usize)> {
        self.support()
            .into_iter()
            .map(|g| {
                let h = self.slices[&g].h();
                (g, h)
            })
            .collect()
    }

    /// All computed degrees (including those with `h_g = 0`), by level.
    pub fn computed_degrees(&self) -> Vec<GroupElement> {
        self.levels.iter().flatten().cloned().collect()
    }

    /// Matrix of multiplication by the homogeneous `p` from `A_g`.
    pub fn multiplication_matrix(&self, p: &Polynomial, g: &GroupElement) -> Result<RationalMatrix> {
        let deg = p.homogeneous_degree()?;
        let source = self.slice(g)?;
        let target = self.slice(&self.ring().group().add(g, deg))?;
        multiplication_between(&source, &target, p)
    }

    fn require_artinian(&self) -> Result<()> {
        match &self.status {
            ArtinianStatus::Artinian { .. } => Ok(()),
            ArtinianStatus::NotArtinian { variable } => Err(Error::NotArtinian(format!(
                "no power of {} lies in the ideal",
                self.ring().names()[*variable]
            ))),
            ArtinianStatus::Inconclusive { cap } => Err(Error::NotArtinian(format!(
                "nonzero slices persist up to level cap {cap}"
            ))),
        }
    }
}

/// Slices of `S/I` for every degree of certificate level at most `max_level`.
pub fn support_to_level(ideal: &IdealPresentation, max_level: i64) -> Result<AlgebraSupport> {
    let ring = ideal.ring();
    let levels = ring.degrees_by_level(max_level)?;
    let mut slices = BTreeMap::new();
    for g in levels.iter().flatten() {
        slices.insert(g.clone(), Arc::new(ideal_slice(ideal, g)?));
    }
    let mut out = AlgebraSupport {
        ideal: ideal.clone(),
        slices,
        levels,
        status: ArtinianStatus::Inconclusive { cap: max_level },
        greatest: None,
        extra: Mutex::new(HashMap::new()),
    };
    out.greatest = find_greatest(&out.support(), ring)?;
    Ok(out)
}

/// Walks certificate levels upward until a window of `W` consecutive empty
/// levels appears, `W` the largest variable weight. Then every monomial above
/// the window is a variable times a monomial inside it, so all higher slices
/// vanish too.
pub fn artinian_certify(ideal: &IdealPresentation, cap: i64) -> Result<AlgebraSupport> {
    let ring = ideal.ring();
    let window = ring.window()?;
    if let Some(variable) = ideal.pure_power_obstruction()? {
        let mut out = support_to_level(ideal, 0)?;
        out.status = ArtinianStatus::NotArtinian { variable };
        return Ok(out);
    }
    let all_levels = ring.degrees_by_level(cap)?;
    let mut slices = BTreeMap::new();
    let mut levels = Vec::new();
    let mut last_nonzero = -1i64;
    let mut status = ArtinianStatus::Inconclusive { cap };
    for (lvl, degrees) in all_levels.into_iter().enumerate() {
        let lvl = lvl as i64;
        let mut nonzero = false;
        for g in &degrees {
            let s = ideal_slice(ideal, g)?;
            nonzero |= s.h() > 0;
            slices.insert(g.clone(), Arc::new(s));
        }
        levels.push(degrees);
        if nonzero {
            last_nonzero = lvl;
        } else if lvl - last_nonzero >= window {
            status = ArtinianStatus::Artinian { frontier: last_nonzero };
            break;
        }
    }
    let mut out = AlgebraSupport {
        ideal: ideal.clone(),
        slices,
        levels,
        status,
        greatest: None,
        extra: Mutex::new(HashMap::new()),
    };
    out.greatest = find_greatest(&out.support(), ring)?;
    Ok(out)
}

fn find_greatest(support: &[GroupElement], ring: &GradedRing) -> Result<Option<GroupElement>> {
    let mut found = None;
    for g in support {
        let mut dominates = true;
        for h in support {
            if !leq(h, g, ring)? {
                dominates = false;
                break;
            }
        }
        if dominates {
            if found.is_some() {
                return Ok(None);
            }
            found = Some(g.clone());
        }
    }
    Ok(found)
}

/// Basis (as columns, in standard-monomial coordinates) of `soc(A)_g`, the
/// classes in `A_g` killed by every variable.
pub fn socle_slice(support: &AlgebraSupport, g: &GroupElement) -> Result<RationalMatrix> {
    support.require_artinian()?;
    let ring = support.ring();
    let h = support.h(g)?;
    let mut stacked = RationalMatrix::zeros(0, h);
    for i in 0..ring.nvars() {
        let m = support.multiplication_matrix(&Polynomial::variable(ring, i), g)?;
        stacked = stacked.vstack(&m);
    }
    Ok(stacked.kernel_basis())
}

/// Cox-Gorenstein test: the socle is one-dimensional.
pub fn is_cox_gorenstein(support: &AlgebraSupport) -> Result<GorensteinVerdict> {
    support.require_artinian()?;
    let mut socle = Vec::new();
    for g in support.support() {
        let d = socle_slice(support, &g)?.cols();
        if d > 0 {
            socle.push((g, d));
        }
    }
    if socle.len() == 1 && socle[0].1 == 1 {
        Ok(GorensteinVerdict::Gorenstein {
            omega: socle.pop().expect("one entry").0,
        })
    } else {
        Ok(GorensteinVerdict::NotGorenstein { socle })
    }
}

/// Matrix of `A_g x A_(omega-g) -> A_omega = Q`, rows indexed by the
/// standard monomials of `A_g`, columns by those of `A_(omega-g)`.
pub fn poincare_pairing(support: &AlgebraSupport, omega: &GroupElement, g: &GroupElement) -> Result<RationalMatrix> {
    let top = support.slice(omega)?;
    if top.h() != 1 {
        return Err(Error::TopSliceDimension(top.h()));
    }
    let ring = support.ring();
    let left = support.slice(g)?;
    let right = support.slice(&ring.group().sub(omega, g))?;
    let mut out = RationalMatrix::zeros(left.h(), right.h());
    for (i, a) in left.standard_monomials().into_iter().enumerate() {
        for (j, b) in right.standard_monomials().into_iter().enumerate() {
            let prod = crate::polyring::Polynomial::monomial(ring, a.mul(b), num_traits::One::one());
            let v = top.normal_form(&prod)?;
            if !v[0].is_zero() {
                out.set(i, j, v[0].clone());
            }
        }
    }
    Ok(out)
}
