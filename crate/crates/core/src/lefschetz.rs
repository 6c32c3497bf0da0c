//! Linear comparability of graded pieces, toric weak/strong Lefschetz
//! checks by randomized witness search, mixed Hessians and the Euler
//! identities behind the Hessian criterion.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraSupport;
use crate::arith::{rat, Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::grading::{cover_relations, eval_functional, leq, GroupElement};
use crate::polyring::{apply_diff, format_polynomial, GradedRing, Monomial, Polynomial};

/// Classes of the variables of degree `l` in `A_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSpace {
    pub degree: GroupElement,
    /// All variables of degree `l`.
    pub variables: Vec<usize>,
    /// A subset whose classes form a basis of the span in `A_l`.
    pub basis: Vec<usize>,
}

impl LinearSpace {
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
}

/// The linear spaces `L_l` for each distinct variable degree `l`, in order of
/// first appearance among the variables.
pub fn linear_spaces(support: &AlgebraSupport) -> Result<Vec<LinearSpace>> {
    let ring = support.ring();
    let mut out: Vec<LinearSpace> = Vec::new();
    for (i, d) in ring.degrees().iter().enumerate() {
        match out.iter_mut().find(|s| s.degree == *d) {
            Some(s) => s.variables.push(i),
            None => out.push(LinearSpace {
                degree: d.clone(),
                variables: vec![i],
                basis: Vec::new(),
            }),
        }
    }
    for s in &mut out {
        let slice = support.slice(&s.degree)?;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for &i in &s.variables {
            let v = slice.normal_form(&Polynomial::variable(ring, i))?;
            let mut trial = rows.clone();
            trial.push(v);
            if RationalMatrix::from_rows(slice.h(), trial.clone()).rank() > rows.len() {
                rows = trial;
                s.basis.push(i);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Consecutive,
    Comparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparabilityEdge {
    pub source: GroupElement,
    pub target: GroupElement,
    pub kind: EdgeKind,
    /// Degree of the linear element.
    pub l: GroupElement,
    /// `target = source + k l`.
    pub k: u32,
}

/// Consecutive edges (covers in the support with `L_(h-g) != 0`) followed
/// by comparable triples `(g, l, k)` with `h = g + k l`, `g <= h`, `k >= 1`.
pub fn comparability_graph(support: &AlgebraSupport) -> Result<Vec<ComparabilityEdge>> {
    let ring = support.ring();
    let group = ring.group();
    let spaces: Vec<LinearSpace> = linear_spaces(support)?.into_iter().filter(|s| !s.is_zero()).collect();
    let nodes = support.support();
    let mut out = Vec::new();
    for (g, h) in cover_relations(&nodes, ring)? {
        let l = group.sub(&h, &g);
        if spaces.iter().any(|s| s.degree == l) {
            out.push(ComparabilityEdge {
                source: g,
                target: h,
                kind: EdgeKind::Consecutive,
                l,
                k: 1,
            });
        }
    }
    for g in &nodes {
        for h in &nodes {
            if g == h || !leq(g, h, ring)? {
                continue;
            }
            let gap = ring.level(h)? - ring.level(g)?;
            for s in &spaces {
                let step = ring.level(&s.degree)?;
                if gap <= 0 || gap % step != 0 {
                    continue;
                }
                let k = gap / step;
                if group.add(g, &group.scale(&s.degree, k)) == *h {
                    out.push(ComparabilityEdge {
                        source: g.clone(),
                        target: h.clone(),
                        kind: EdgeKind::Comparable,
                        l: s.degree.clone(),
                        k: k as u32,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// `sum_i c_i X_i` over the variables of degree `l`.
pub fn linear_element(ring: &Arc<GradedRing>, variables: &[usize], coeffs: &[i64]) -> Polynomial {
    let n = ring.nvars();
    Polynomial::from_terms(
        ring,
        variables.iter().zip(coeffs).map(|(&i, &c)| (Monomial::var(n, i), rat(c))),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessResult {
    Found {
        linear: Polynomial,
        rank: usize,
        bound: usize,
    },
    NotFound {
        best_rank: usize,
        bound: usize,
        trials: usize,
    },
}

impl WitnessResult {
    pub fn is_found(&self) -> bool {
        matches!(self, WitnessResult::Found { .. })
    }

    pub fn rank(&self) -> usize {
        match self {
            WitnessResult::Found { rank, .. } => *rank,
            WitnessResult::NotFound { best_rank, .. } => *best_rank,
        }
    }
}

fn edge_variables(support: &AlgebraSupport, l: &GroupElement) -> Vec<usize> {
    support
        .ring()
        .degrees()
        .iter()
        .enumerate()
        .filter(|(_, d)| *d == l)
        .map(|(i, _)| i)
        .collect()
}

/// Coefficient vectors tried in order: all ones, then random integers from
/// ranges `[-r, r]` with `r` doubling every eight trials.
struct CandidateStream {
    rng: ChaCha8Rng,
    len: usize,
    issued: usize,
}

impl CandidateStream {
    fn new(seed: u64, len: usize) -> Self {
        CandidateStream {
            rng: ChaCha8Rng::seed_from_u64(seed),
            len,
            issued: 0,
        }
    }

    fn next(&mut self) -> Vec<i64> {
        let t = self.issued;
        self.issued += 1;
        if t == 0 {
            return vec![1; self.len];
        }
        let r = 1i64 << (1 + (t - 1) / 8).min(20);
        loop {
            let v: Vec<i64> = (0..self.len).map(|_| self.rng.gen_range(-r..=r)).collect();
            if v.iter().any(|c| *c != 0) {
                return v;
            }
        }
    }
}

fn power_rank(support: &AlgebraSupport, linear: &Polynomial, edge: &ComparabilityEdge) -> Result<usize> {
    Ok(support
        .multiplication_matrix(&linear.pow(edge.k), &edge.source)?
        .rank())
}

/// Searches for `L` in `L_l` with `L^k : A_g -> A_h` of maximal rank.
pub fn maximal_rank_witness(
    support: &AlgebraSupport,
    edge: &ComparabilityEdge,
    trials: usize,
    seed: u64,
) -> Result<WitnessResult> {
    let ring = support.ring();
    let vars = edge_variables(support, &edge.l);
    let bound = support.h(&edge.source)?.min(support.h(&edge.target)?);
    let mut stream = CandidateStream::new(seed, vars.len());
    let mut best = 0;
    for _ in 0..trials.max(1) {
        let linear = linear_element(ring, &vars, &stream.next());
        let rank = power_rank(support, &linear, edge)?;
        if rank == bound {
            return Ok(WitnessResult::Found { linear, rank, bound });
        }
        best = best.max(rank);
    }
    Ok(WitnessResult::NotFound {
        best_rank: best,
        bound,
        trials: trials.max(1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LefschetzMode {
    Weak,
    Strong,
}

#[derive(Clone, Debug)]
pub struct LefschetzConfig {
    pub trials: usize,
    pub seed: u64,
    /// Also look for one linear element per degree `l` serving every edge.
    pub uniform: bool,
}

impl Default for LefschetzConfig {
    fn default() -> Self {
        LefschetzConfig {
            trials: 64,
            seed: 0,
            uniform: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct EdgeVerdict {
    pub edge: ComparabilityEdge,
    pub result: WitnessResult,
}

#[derive(Clone, Debug)]
pub struct LefschetzReport {
    pub mode: LefschetzMode,
    pub edges: Vec<EdgeVerdict>,
    /// Per degree `l`: one element serving every edge of that degree, if
    /// the uniform search was requested and succeeded.
    pub uniform: Option<Vec<(GroupElement, Option<Polynomial>)>>,
    pub preorder: bool,
    group: crate::grading::GroupSpec,
}

impl LefschetzReport {
    /// Every comparable pair `(g, h)` has at least one triple `(g, l, k)`
    /// with a witness.
    pub fn holds(&self) -> bool {
        self.edges.iter().all(|e| {
            self.edges
                .iter()
                .any(|o| o.edge.source == e.edge.source && o.edge.target == e.edge.target && o.result.is_found())
        })
    }

    pub fn uniform_holds(&self) -> Option<bool> {
        self.uniform
            .as_ref()
            .map(|u| u.iter().all(|(_, l)| l.is_some()))
    }
}

impl fmt::Display for LefschetzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.group;
        let name = match self.mode {
            LefschetzMode::Weak => "TWLP",
            LefschetzMode::Strong => "TSLP",
        };
        if self.preorder {
            writeln!(f, "note: order is only a preorder; covers computed among realized degrees")?;
        }
        for e in &self.edges {
            let edge = &e.edge;
            write!(
                f,
                "{} -[{},{}]-> {}: ",
                g.format(&edge.source),
                g.format(&edge.l),
                edge.k,
                g.format(&edge.target)
            )?;
            match &e.result {
                WitnessResult::Found { linear, rank, bound } => {
                    writeln!(f, "rank {rank}/{bound}, witness L = {}", format_polynomial(linear))?
                }
                WitnessResult::NotFound {
                    best_rank,
                    bound,
                    trials,
                } => writeln!(f, "rank {best_rank}/{bound}, no witness in {trials} trials")?,
            }
        }
        if let Some(u) = &self.uniform {
            for (l, lin) in u {
                match lin {
                    Some(lin) => writeln!(f, "uniform L for {}: {}", g.format(l), format_polynomial(lin))?,
                    None => writeln!(f, "uniform L for {}: none found", g.format(l))?,
                }
            }
        }
        write!(f, "{name}: {}", if self.holds() { "holds" } else { "not verified" })
    }
}

fn edge_seed(master: u64, index: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(index as u64);
    rng.next_u64()
}

pub fn lefschetz_check(support: &AlgebraSupport, mode: LefschetzMode, config: &LefschetzConfig) -> Result<LefschetzReport> {
    if !support.is_artinian() {
        return Err(Error::NotArtinian("Lefschetz checks need an Artinian algebra".into()));
    }
    let kind = match mode {
        LefschetzMode::Weak => EdgeKind::Consecutive,
        LefschetzMode::Strong => EdgeKind::Comparable,
    };
    let edges: Vec<ComparabilityEdge> = comparability_graph(support)?
        .into_iter()
        .filter(|e| e.kind == kind)
        .collect();
    let mut verdicts = Vec::new();
    for (i, edge) in edges.iter().enumerate() {
        let result = maximal_rank_witness(support, edge, config.trials, edge_seed(config.seed, i))?;
        verdicts.push(EdgeVerdict {
            edge: edge.clone(),
            result,
        });
    }
    let uniform = if config.uniform {
        Some(uniform_elements(support, &edges, config)?)
    } else {
        None
    };
    let ring = support.ring();
    Ok(LefschetzReport {
        mode,
        edges: verdicts,
        uniform,
        preorder: ring.order().is_preorder_only(ring.group()),
        group: ring.group().clone(),
    })
}

fn uniform_elements(
    support: &AlgebraSupport,
    edges: &[ComparabilityEdge],
    config: &LefschetzConfig,
) -> Result<Vec<(GroupElement, Option<Polynomial>)>> {
    let mut degrees: Vec<GroupElement> = Vec::new();
    for e in edges {
        if !degrees.contains(&e.l) {
            degrees.push(e.l.clone());
        }
    }
    let mut out = Vec::new();
    for (j, l) in degrees.into_iter().enumerate() {
        let vars = edge_variables(support, &l);
        let mine: Vec<&ComparabilityEdge> = edges.iter().filter(|e| e.l == l).collect();
        let mut stream = CandidateStream::new(edge_seed(config.seed ^ 0x5eed, j), vars.len());
        let mut found = None;
        'search: for _ in 0..config.trials.max(1) {
            let linear = linear_element(support.ring(), &vars, &stream.next());
            for e in &mine {
                let bound = support.h(&e.source)?.min(support.h(&e.target)?);
                if power_rank(support, &linear, e)? != bound {
                    continue 'search;
                }
            }
            found = Some(linear);
            break;
        }
        out.push((l, found));
    }
    Ok(out)
}

pub fn twlp_check(support: &AlgebraSupport, trials: usize, seed: u64) -> Result<LefschetzReport> {
    let config = LefschetzConfig {
        trials,
        seed,
        uniform: false,
    };
    lefschetz_check(support, LefschetzMode::Weak, &config)
}

pub fn tslp_check(support: &AlgebraSupport, trials: usize, seed: u64) -> Result<LefschetzReport> {
    let config = LefschetzConfig {
        trials,
        seed,
        uniform: false,
    };
    lefschetz_check(support, LefschetzMode::Strong, &config)
}

/// Checks the generalized Euler relation
/// `sum_i phi(deg x_i) x_i df/dx_i = phi(deg f) f`, and, when a linear
/// element `L = sum a_i X_i` is supplied, the differential Euler identity
/// `L^N f = N! f(a)` with `N = phi(deg f)`.
///
/// The second identity needs `phi(deg L) = 1`, `N` a nonnegative integer
/// and `phi` positive on every variable degree.
pub fn euler_identity_check(f: &Polynomial, phi: &[Rational], linear: Option<&Polynomial>) -> Result<bool> {
    let ring = f.ring();
    if phi.len() != ring.group().free_rank() {
        return Err(Error::Invalid("functional has the wrong length".into()));
    }
    if f.is_zero() {
        return Ok(true);
    }
    let deg = f.homogeneous_degree()?;
    let mut lhs = Polynomial::zero(ring);
    for (i, d) in ring.degrees().iter().enumerate() {
        let w = eval_functional(phi, d);
        let term = f.partial_derivative(i).multiply_by_variable(i).scale(&w);
        lhs = &lhs + &term;
    }
    let euler = lhs == f.scale(&eval_functional(phi, deg));
    let Some(linear) = linear else {
        return Ok(euler);
    };
    Ok(euler && differential_euler(f, phi, linear)?)
}

fn differential_euler(f: &Polynomial, phi: &[Rational], linear: &Polynomial) -> Result<bool> {
    let ring = f.ring();
    let l = linear.homogeneous_degree()?;
    let pl = eval_functional(phi, l);
    if !pl.is_one() {
        return Err(Error::NotPhiLinear(crate::arith::format_rational(&pl)));
    }
    let n = eval_functional(phi, f.homogeneous_degree()?);
    if !n.is_integer() || n.is_negative() {
        return Err(Error::IdentityNotApplicable(format!(
            "phi(deg f) = {} is not a nonnegative integer",
            crate::arith::format_rational(&n)
        )));
    }
    if ring.degrees().iter().any(|d| !eval_functional(phi, d).is_positive()) {
        return Err(Error::IdentityNotApplicable(
            "phi must be positive on every variable degree".into(),
        ));
    }
    let a = linear_coefficients(linear)?;
    let n: u32 = n
        .to_integer()
        .try_into()
        .map_err(|_| Error::IdentityNotApplicable("phi(deg f) too large".into()))?;
    let lhs = apply_diff(&linear.pow(n), f)?;
    let rhs = Polynomial::constant(ring, f.eval(&a) * factorial(n));
    Ok(lhs == rhs)
}

/// Coefficient vector `a` of a linear form `sum a_i X_i`.
pub fn linear_coefficients(linear: &Polynomial) -> Result<Vec<Rational>> {
    let n = linear.ring().nvars();
    let mut a = vec![Rational::zero(); n];
    for (m, c) in linear.terms() {
        if m.total_degree() != 1 {
            return Err(Error::Invalid("linear element must be a combination of variables".into()));
        }
        let i = m.exponents().iter().position(|&e| e == 1).expect("degree one");
        a[i] = c.clone();
    }
    Ok(a)
}

pub(crate) fn factorial(n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * rat(k as i64))
}

/// Entries `(gamma*_i beta_j)(f)`: rows follow the dual basis `C*`, columns
/// the basis `B`.
#[derive(Clone, Debug)]
pub struct HessianData {
    pub rows: Vec<Polynomial>,
    pub cols: Vec<Polynomial>,
    pub entries: Vec<Vec<Polynomial>>,
}

impl HessianData {
    pub fn eval(&self, point: &[Rational]) -> RationalMatrix {
        RationalMatrix::from_fn(self.rows.len(), self.cols.len(), |i, j| self.entries[i][j].eval(point))
    }
}

pub fn mixed_hessian(f: &Polynomial, b: &[Polynomial], c_star: &[Polynomial]) -> Result<HessianData> {
    let entries = c_star
        .iter()
        .map(|g| {
            b.iter()
                .map(|beta| apply_diff(&(g * beta), f))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HessianData {
        rows: c_star.to_vec(),
        cols: b.to_vec(),
        entries,
    })
}

fn standard_basis(support: &AlgebraSupport, g: &GroupElement) -> Result<Vec<Polynomial>> {
    let ring = support.ring();
    Ok(support
        .slice(g)?
        .standard_monomials()
        .into_iter()
        .map(|m| Polynomial::monomial(ring, m.clone(), Rational::one()))
        .collect())
}

/// The basis `C*` of `A_(omega-h)` with `(gamma*_i gamma_j)(f) = delta_ij`.
/// `c` defaults to the standard monomials of `A_h`.
pub fn dual_basis(
    support: &AlgebraSupport,
    f: &Polynomial,
    h: &GroupElement,
    c: Option<&[Polynomial]>,
) -> Result<Vec<Polynomial>> {
    let ring = support.ring();
    let omega = f.homogeneous_degree()?;
    let c = match c {
        Some(c) => c.to_vec(),
        None => standard_basis(support, h)?,
    };
    let d = standard_basis(support, &ring.group().sub(omega, h))?;
    if d.len() != c.len() {
        return Err(Error::DegeneratePairing(format!(
            "paired slices have dimensions {} and {}",
            d.len(),
            c.len()
        )));
    }
    let pairing = RationalMatrix::from_fn(d.len(), c.len(), |a, b| {
        let v = apply_diff(&(&d[a] * &c[b]), f).expect("compatible rings");
        v.coefficient(&Monomial::one(ring.nvars()))
    });
    let t = pairing
        .inverse()
        .ok_or_else(|| Error::DegeneratePairing(format!("at degree {}", ring.group().format(h))))?;
    Ok((0..c.len())
        .map(|i| {
            let mut acc = Polynomial::zero(ring);
            for (a, da) in d.iter().enumerate() {
                acc = &acc + &da.scale(t.get(i, a));
            }
            acc
        })
        .collect())
}

/// `phi / phi(l)`, for a certificate `phi` of the ring: positive on every
/// variable and equal to 1 on `l`.
pub fn normalized_functional(ring: &GradedRing, l: &GroupElement) -> Result<Vec<Rational>> {
    let cert = ring
        .certificate()
        .ok_or_else(|| Error::UnsupportedGrading("no positivity certificate".into()))?;
    let at_l = cert.eval(l);
    if !at_l.is_positive() {
        return Err(Error::NotPhiLinear(crate::arith::format_rational(&at_l)));
    }
    Ok(cert.phi.iter().map(|p| p / &at_l).collect())
}

#[derive(Clone, Debug)]
pub struct HessianCheck {
    /// Matrix of `L^k : A_g -> A_h` in the bases `B`, `C`.
    pub multiplication: RationalMatrix,
    /// `k! Hess^(C*, B)(a)`.
    pub hessian: RationalMatrix,
}

impl HessianCheck {
    pub fn holds(&self) -> bool {
        self.multiplication == self.hessian
    }
}

/// Computes both sides of `[L^k]_B^C = k! Hess_f^(C*,B)(a)`, the left from the
/// quotient algebra and the right from derivatives of `f`. Bases default to
/// standard monomials.
pub fn hessian_criterion_verify(
    support: &AlgebraSupport,
    f: &Polynomial,
    edge: &ComparabilityEdge,
    linear: &Polynomial,
    phi: &[Rational],
    b: Option<&[Polynomial]>,
    c: Option<&[Polynomial]>,
) -> Result<HessianCheck> {
    let ring = support.ring();
    let group = ring.group();
    if !linear.is_zero() && linear.homogeneous_degree()? != &edge.l {
        return Err(Error::Invalid("linear element does not have the edge degree".into()));
    }
    if group.add(&edge.source, &group.scale(&edge.l, edge.k as i64)) != edge.target {
        return Err(Error::Invalid("edge target is not source + k l".into()));
    }
    let pl = eval_functional(phi, &edge.l);
    if !pl.is_one() {
        return Err(Error::NotPhiLinear(crate::arith::format_rational(&pl)));
    }
    let n = eval_functional(phi, f.homogeneous_degree()?);
    if !n.is_integer() || !n.is_positive() {
        return Err(Error::IdentityNotApplicable(format!(
            "phi(deg f) = {} is not a positive integer",
            crate::arith::format_rational(&n)
        )));
    }
    let b = match b {
        Some(b) => b.to_vec(),
        None => standard_basis(support, &edge.source)?,
    };
    let c = match c {
        Some(c) => c.to_vec(),
        None => standard_basis(support, &edge.target)?,
    };
    let source = support.slice(&edge.source)?;
    let target = support.slice(&edge.target)?;
    let coords = |slice: &crate::algebra::DegreeSliceBasis, ps: &[Polynomial]| -> Result<RationalMatrix> {
        let cols = ps.iter().map(|p| slice.normal_form(p)).collect::<Result<Vec<_>>>()?;
        Ok(RationalMatrix::from_columns(slice.h(), &cols))
    };
    let bmat = coords(&source, &b)?;
    let cmat = coords(&target, &c)?;
    let cinv = cmat
        .inverse()
        .ok_or_else(|| Error::Invalid("C is not a basis of the target slice".into()))?;
    let power = if edge.k == 0 { Polynomial::one(ring) } else { linear.pow(edge.k) };
    let std = support.multiplication_matrix(&power, &edge.source)?;
    let multiplication = cinv.mul(&std).mul(&bmat);

    let c_star = dual_basis(support, f, &edge.target, Some(&c))?;
    let a = linear_coefficients(linear)?;
    let hessian = mixed_hessian(f, &b, &c_star)?.eval(&a).scale(&factorial(edge.k));
    Ok(HessianCheck { multiplication, hessian })
}

#[cfg(test)]
mod tests;
