//! Toric reconstruction from a grading: the lattice of degree-zero
//! characters, rays, the normal fan of the polyhedron `{xi(a_i) >= alpha_i}`
//! and the irrelevant ideal. Also divisor polytopes, nef tests and the
//! complete-intersection socle check.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{
    artinian_certify, ideal_slice, is_cox_gorenstein, multiplication_matrix, ArtinianStatus, GorensteinVerdict,
    IdealPresentation, DEFAULT_LEVEL_CAP,
};
use crate::arith::{integer_kernel_with_congruences, rat, Integer, IntegerMatrix, Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::grading::GroupElement;
use crate::polyring::{format_monomial, GradedRing, Monomial, Polynomial};

/// Free weights `P_0` (n x rho) and one column of residues per torsion factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub p0: IntegerMatrix,
    pub torsion: Vec<Vec<i64>>,
    pub moduli: Vec<i64>,
}

impl WeightData {
    pub fn from_ring(ring: &GradedRing) -> Self {
        let n = ring.nvars();
        let group = ring.group();
        let degs = ring.degrees();
        let p0 = IntegerMatrix::from_fn(n, group.free_rank(), |i, j| Integer::from(degs[i].free[j]));
        let torsion = (0..group.moduli().len())
            .map(|j| degs.iter().map(|d| d.torsion[j]).collect())
            .collect();
        WeightData {
            p0,
            torsion,
            moduli: group.moduli().to_vec(),
        }
    }
}

fn to_i64(x: &Integer) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Invalid("lattice entry does not fit in 64 bits".into()))
}

/// Basis of `M = ker(Z^n -> G)` as the columns of an n x d matrix in column
/// Hermite form, together with the rows `a_i` of that matrix.
pub fn rays_from_grading(ring: &GradedRing) -> Result<(Vec<Vec<i64>>, IntegerMatrix)> {
    let w = WeightData::from_ring(ring);
    let n = ring.nvars();
    let a_free = w.p0.transpose();
    let a_tors = IntegerMatrix::from_fn(w.torsion.len(), n, |j, i| Integer::from(w.torsion[j][i]));
    let moduli: Vec<Integer> = w.moduli.iter().map(|&m| Integer::from(m)).collect();
    let kernel = integer_kernel_with_congruences(&a_free, &a_tors, &moduli);
    let mut rays = Vec::with_capacity(n);
    for i in 0..n {
        let row = kernel.row(i).iter().map(to_i64).collect::<Result<Vec<_>>>()?;
        if row.iter().all(|&x| x == 0) {
            return Err(Error::DegenerateGrading(format!(
                "variable `{}` pairs trivially with every degree-zero character",
                ring.names()[i]
            )));
        }
        rays.push(row);
    }
    Ok((rays, kernel))
}

fn primitive(v: &[i64]) -> (Vec<i64>, i64) {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return (v.to_vec(), 0);
    }
    (v.iter().map(|x| x / g).collect(), g)
}

fn dot(a: &[Rational], b: &[i64]) -> Rational {
    a.iter().zip(b).map(|(x, &y)| x * rat(y)).sum()
}

/// Combinations of `k` elements of `0..n`, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// `{xi in Q^d : <xi, a_i> >= alpha_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    pub dim: usize,
    pub normals: Vec<Vec<i64>>,
    pub alphas: Vec<Rational>,
    pub vertices: Vec<Vec<Rational>>,
    /// Extreme rays of the recession cone, primitive up to positive scaling.
    pub recession: Vec<Vec<Rational>>,
    pub bounded: bool,
}

impl Polyhedron {
    pub fn new(dim: usize, normals: Vec<Vec<i64>>, alphas: Vec<Rational>) -> Result<Self> {
        if normals.len() != alphas.len() || normals.iter().any(|a| a.len() != dim) {
            return Err(Error::Invalid("inequality data has inconsistent shape".into()));
        }
        let rows = normals.clone();
        let matrix = |idx: &[usize]| {
            RationalMatrix::from_rows(dim, idx.iter().map(|&i| rows[i].iter().map(|&x| rat(x)).collect()).collect())
        };
        let mut p = Polyhedron {
            dim,
            normals,
            alphas,
            vertices: Vec::new(),
            recession: Vec::new(),
            bounded: true,
        };
        let n = p.normals.len();
        for s in subsets(n, dim) {
            let m = matrix(&s);
            if m.rank() < dim {
                continue;
            }
            let b: Vec<Rational> = s.iter().map(|&i| p.alphas[i].clone()).collect();
            let v = m.solve(&b).expect("square and invertible");
            if p.contains(&v) && !p.vertices.contains(&v) {
                p.vertices.push(v);
            }
        }
        if dim == 0 && p.contains(&[]) {
            p.vertices.push(Vec::new());
        }
        for s in subsets(n, dim.saturating_sub(1)) {
            if dim == 0 {
                break;
            }
            let m = matrix(&s);
            let kernel = if s.is_empty() {
                RationalMatrix::identity(dim)
            } else {
                m.kernel_basis()
            };
            if kernel.cols() != 1 {
                continue;
            }
            let r = kernel.column(0);
            for sign in [1, -1] {
                let dir: Vec<Rational> = r.iter().map(|x| x * rat(sign)).collect();
                let ok = p.normals.iter().all(|a| !dot(&dir, a).is_negative());
                if ok && !p.recession.iter().any(|q| parallel(q, &dir)) {
                    p.recession.push(dir);
                }
            }
        }
        p.bounded = p.recession.is_empty();
        Ok(p)
    }

    pub fn contains(&self, xi: &[Rational]) -> bool {
        self.normals
            .iter()
            .zip(&self.alphas)
            .all(|(a, alpha)| dot(xi, a) >= *alpha)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Inequalities tight at `xi`.
    pub fn active(&self, xi: &[Rational]) -> Vec<usize> {
        (0..self.normals.len())
            .filter(|&i| dot(xi, &self.normals[i]) == self.alphas[i])
            .collect()
    }

    /// Dimension of the affine hull, `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        let v0 = self.vertices.first()?;
        let mut rows: Vec<Vec<Rational>> = self
            .vertices
            .iter()
            .skip(1)
            .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        rows.extend(self.recession.iter().cloned());
        Some(RationalMatrix::from_rows(self.dim, rows).rank())
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == Some(self.dim)
    }
}

fn parallel(a: &[Rational], b: &[Rational]) -> bool {
    // same direction: b = t a with t > 0
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let t = &b[i] / &a[i];
    t.is_positive() && a.iter().zip(b).all(|(x, y)| x * &t == *y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub dim: usize,
    /// Primitive ray generators, one per variable.
    pub rays: Vec<Vec<i64>>,
    /// Factor removed when primitivizing each kernel row.
    pub multiplicities: Vec<i64>,
    /// Ray index sets, one per vertex of the polyhedron.
    pub max_cones: Vec<Vec<usize>>,
    pub complete: bool,
    /// Indices into `max_cones` of cones with more than `dim` rays.
    pub non_simplicial: Vec<usize>,
}

impl Fan {
    pub fn is_simplicial(&self) -> bool {
        self.non_simplicial.is_empty()
    }

    /// Pairs of variables sharing a primitive ray.
    pub fn repeated_rays(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                if self.rays[i] == self.rays[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// The inner normal fan of `{xi(a_i) >= alpha_i}` with `a_i` primitivized.
pub fn normal_fan(rays: &[Vec<i64>], alphas: &[i64]) -> Result<(Fan, Polyhedron)> {
    let dim = rays.first().map_or(0, Vec::len);
    if alphas.len() != rays.len() {
        return Err(Error::Invalid(format!("{} rays but {} alphas", rays.len(), alphas.len())));
    }
    let (prim, mult): (Vec<Vec<i64>>, Vec<i64>) = rays.iter().map(|r| primitive(r)).unzip();
    let poly = Polyhedron::new(dim, prim.clone(), alphas.iter().map(|&a| rat(a)).collect())?;
    if poly.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let mut cones: Vec<Vec<usize>> = poly.vertices.iter().map(|v| poly.active(v)).collect();
    cones.sort();
    cones.dedup();
    let non_simplicial = (0..cones.len()).filter(|&i| cones[i].len() > dim).collect();
    let fan = Fan {
        dim,
        rays: prim,
        multiplicities: mult,
        max_cones: cones,
        complete: poly.bounded,
        non_simplicial,
    };
    Ok((fan, poly))
}

/// Monomial ideal kept as a minimal generating set in ascending exponent order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(gens: Vec<Monomial>) -> Self {
        let mut keep: Vec<Monomial> = Vec::new();
        for g in gens {
            if keep.iter().any(|k| k.divides(&g)) {
                continue;
            }
            keep.retain(|k| !g.divides(k));
            keep.push(g);
        }
        keep.sort_by(|a, b| a.exponents().cmp(b.exponents()));
        MonomialIdeal { generators: keep }
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn format(&self, ring: &GradedRing) -> String {
        let parts: Vec<String> = self.generators.iter().map(|m| format_monomial(ring.names(), m)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Generators `prod_(i not in sigma) x_i` over the maximal cones.
pub fn irrelevant_ideal(fan: &Fan, ring: &GradedRing) -> MonomialIdeal {
    let n = ring.nvars();
    MonomialIdeal::new(
        fan.max_cones
            .iter()
            .map(|c| Monomial::new((0..n).map(|i| u32::from(!c.contains(&i))).collect()))
            .collect(),
    )
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub weights: WeightData,
    pub kernel: IntegerMatrix,
    pub fan: Fan,
    pub ideal: MonomialIdeal,
    pub polyhedron: Polyhedron,
}

/// Grading to fan and irrelevant ideal; `alphas` default to `-1`.
pub fn reconstruct(ring: &GradedRing, alphas: Option<&[i64]>) -> Result<Reconstruction> {
    let (rays, kernel) = rays_from_grading(ring)?;
    let default = vec![-1; ring.nvars()];
    let (fan, polyhedron) = normal_fan(&rays, alphas.unwrap_or(&default))?;
    let ideal = irrelevant_ideal(&fan, ring);
    Ok(Reconstruction {
        weights: WeightData::from_ring(ring),
        kernel,
        fan,
        ideal,
        polyhedron,
    })
}

pub fn format_reconstruction(r: &Reconstruction, ring: &GradedRing) -> String {
    let names = ring.names();
    let tuple = |v: &[i64]| format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    let mut out = format!("dimension {}\nrays:\n", r.fan.dim);
    for (i, ray) in r.fan.rays.iter().enumerate() {
        out.push_str(&format!("  {}: {}", names[i], tuple(ray)));
        if r.fan.multiplicities[i] != 1 {
            out.push_str(&format!(" (multiplicity {})", r.fan.multiplicities[i]));
        }
        out.push('\n');
    }
    out.push_str("maximal cones:\n");
    for (k, c) in r.fan.max_cones.iter().enumerate() {
        let ids: Vec<&str> = c.iter().map(|&i| names[i].as_str()).collect();
        out.push_str(&format!("  {{{}}}", ids.join(",")));
        if r.fan.non_simplicial.contains(&k) {
            out.push_str(" (not simplicial)");
        }
        out.push('\n');
    }
    for (i, j) in r.fan.repeated_rays() {
        out.push_str(&format!("note: {} and {} share a ray\n", names[i], names[j]));
    }
    out.push_str(&format!("complete: {}\n", r.fan.complete));
    out.push_str(&format!("irrelevant ideal: {}\n", r.ideal.format(ring)));
    out
}

/// Row vectors `a_i T = b_i` for some `T` in `GL_d(Z)`.
pub fn unimodular_equivalence(a: &[Vec<i64>], b: &[Vec<i64>]) -> Option<IntegerMatrix> {
    if a.len() != b.len() {
        return None;
    }
    let d = a.first().map_or(0, Vec::len);
    let to_q = |v: &[Vec<i64>]| RationalMatrix::from_rows(d, v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect());
    let (qa, qb) = (to_q(a), to_q(b));
    let pivots = qa.transpose().rref().pivots;
    if pivots.len() != d {
        return None;
    }
    let t = qa.select_rows(&pivots).inverse()?.mul(&qb.select_rows(&pivots));
    if qa.mul(&t) != qb || (0..d).any(|i| (0..d).any(|j| !t.get(i, j).is_integer())) {
        return None;
    }
    let ti = IntegerMatrix::from_fn(d, d, |i, j| t.get(i, j).to_integer());
    ti.determinant().abs().eq(&Integer::from(1)).then_some(ti)
}

pub fn anticanonical_class(ring: &GradedRing) -> GroupElement {
    let group = ring.group();
    ring.degrees().iter().fold(group.zero(), |acc, d| group.add(&acc, d))
}

/// Coefficients `a` with `sum a_i deg x_i = c`.
pub fn class_representative(ring: &GradedRing, c: &GroupElement) -> Result<Vec<i64>> {
    let group = ring.group();
    group.check(c)?;
    let w = WeightData::from_ring(ring);
    let n = ring.nvars();
    let (rho, t) = (group.free_rank(), w.moduli.len());
    let m = IntegerMatrix::from_fn(rho + t, n + t, |i, j| {
        if i < rho {
            if j < n {
                w.p0.get(j, i).clone()
            } else {
                Integer::zero()
            }
        } else if j < n {
            Integer::from(w.torsion[i - rho][j])
        } else if j - n == i - rho {
            Integer::from(w.moduli[i - rho])
        } else {
            Integer::zero()
        }
    });
    let b: Vec<Integer> = c.free.iter().chain(&c.torsion).map(|&x| Integer::from(x)).collect();
    match m.solve_integer(&b) {
        Some(x) => x[..n].iter().map(to_i64).collect(),
        None => {
            let rational = w.p0.transpose().to_rational().solve(&c.free.iter().map(|&x| rat(x)).collect::<Vec<_>>());
            let why = if rational.is_some() && t == 0 {
                "only rational solutions exist"
            } else {
                "no integer combination of the variable degrees"
            };
            Err(Error::NoRepresentative(format!("{}: {why}", group.format(c))))
        }
    }
}

/// `P_D = {m : <m, u_i> >= -a_i}` for a representative `D = sum a_i D_i` of `c`.
pub fn divisor_polytope(fan: &Fan, ring: &GradedRing, c: &GroupElement) -> Result<Polyhedron> {
    let a = class_representative(ring, c)?;
    Polyhedron::new(fan.dim, fan.rays.clone(), a.iter().map(|&x| rat(-x)).collect())
}

/// Convexity of the support function: the `m_sigma` solving
/// `<m, u_i> = -a_i` on each maximal cone satisfy `<m, u_j> >= -a_j` for all `j`.
pub fn nef_check(fan: &Fan, ring: &GradedRing, c: &GroupElement) -> Result<bool> {
    if !fan.complete {
        return Err(Error::NonCompleteFan);
    }
    let a = class_representative(ring, c)?;
    for cone in &fan.max_cones {
        let m = RationalMatrix::from_rows(
            fan.dim,
            cone.iter().map(|&i| fan.rays[i].iter().map(|&x| rat(x)).collect()).collect(),
        );
        let b: Vec<Rational> = cone.iter().map(|&i| rat(-a[i])).collect();
        let Some(m_sigma) = m.solve(&b) else {
            return Ok(false);
        };
        if fan.rays.iter().zip(&a).any(|(u, &ai)| dot(&m_sigma, u) < rat(-ai)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct CiSocleReport {
    pub omega: GroupElement,
    /// `dim A_omega`.
    pub top_dimension: usize,
    /// Whether `x_i A_omega = 0`, per variable.
    pub annihilates: Vec<bool>,
    pub status: ArtinianStatus,
    pub verdict: Option<GorensteinVerdict>,
    /// Nef test per form degree; `None` when the fan is not complete.
    pub nef: Vec<(GroupElement, Option<bool>)>,
    /// Full-dimensionality of `P_eta` for every sum of distinct form degrees.
    pub full_dimensional: Vec<(GroupElement, bool)>,
    pub notes: Vec<String>,
    group: crate::grading::GroupSpec,
    names: Vec<String>,
}

impl CiSocleReport {
    /// Verified hypotheses, not counting the unverifiable common-zero one.
    pub fn hypotheses_hold(&self) -> bool {
        self.nef.iter().all(|(_, v)| *v == Some(true)) && self.full_dimensional.iter().all(|(_, v)| *v)
    }
}

impl fmt::Display for CiSocleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.group;
        writeln!(f, "omega = {}", g.format(&self.omega))?;
        writeln!(f, "dim A_omega = {}", self.top_dimension)?;
        for (name, a) in self.names.iter().zip(&self.annihilates) {
            writeln!(f, "{name} * A_omega = 0: {a}")?;
        }
        match &self.status {
            ArtinianStatus::Artinian { frontier } => writeln!(f, "artinian: yes (last nonzero level {frontier})")?,
            ArtinianStatus::NotArtinian { variable } => {
                writeln!(f, "artinian: no (no power of {} lies in the ideal)", self.names[*variable])?
            }
            ArtinianStatus::Inconclusive { cap } => writeln!(f, "artinian: undecided up to level {cap}")?,
        }
        match &self.verdict {
            Some(GorensteinVerdict::Gorenstein { omega }) => {
                writeln!(f, "Cox-Gorenstein with socle degree {}", g.format(omega))?
            }
            Some(GorensteinVerdict::NotGorenstein { .. }) => writeln!(f, "not Cox-Gorenstein")?,
            None => {}
        }
        for (d, v) in &self.nef {
            let v = match v {
                Some(true) => "verified",
                Some(false) => "fails",
                None => "not checked (fan not complete)",
            };
            writeln!(f, "hypothesis nef {}: {v}", g.format(d))?;
        }
        for (d, v) in &self.full_dimensional {
            writeln!(
                f,
                "hypothesis full-dimensional P_{}: {}",
                g.format(d),
                if *v { "verified" } else { "fails" }
            )?;
        }
        writeln!(f, "hypothesis no common zeros: assumed, not verified")?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Socle check for `d + 1` forms on a `d`-dimensional fan:
/// `omega = sum deg f_i - beta_0` and `A = S/(f)`.
pub fn ci_socle_check(ring: &GradedRing, fan: &Fan, forms: &[Polynomial]) -> Result<CiSocleReport> {
    if forms.len() != fan.dim + 1 {
        return Err(Error::Invalid(format!(
            "expected {} forms for a fan of dimension {}, got {}",
            fan.dim + 1,
            fan.dim,
            forms.len()
        )));
    }
    let arc = forms
        .first()
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::Invalid("no forms".into()))?;
    if arc.as_ref() != ring {
        return Err(Error::RingMismatch("forms do not live in the given ring".into()));
    }
    let group = ring.group();
    let degrees = forms
        .iter()
        .map(|p| p.homogeneous_degree().cloned())
        .collect::<Result<Vec<_>>>()?;
    let sum = degrees.iter().fold(group.zero(), |acc, d| group.add(&acc, d));
    let omega = group.sub(&sum, &anticanonical_class(ring));
    let ideal = IdealPresentation::new(&arc, forms.to_vec())?;

    let has_monomials = ring.level(&omega).map(|l| l >= 0).unwrap_or(true) && ring.has_monomial_of_degree(&omega)?;
    let top_dimension = if has_monomials { ideal_slice(&ideal, &omega)?.h() } else { 0 };
    let mut annihilates = Vec::new();
    for i in 0..ring.nvars() {
        let zero = top_dimension == 0
            || multiplication_matrix(&ideal, &Polynomial::variable(&arc, i), &omega)?.is_zero();
        annihilates.push(zero);
    }

    let support = artinian_certify(&ideal, DEFAULT_LEVEL_CAP)?;
    let status = support.status().clone();
    let verdict = if support.is_artinian() {
        Some(is_cox_gorenstein(&support)?)
    } else {
        None
    };

    let mut nef = Vec::new();
    for d in &degrees {
        let v = if fan.complete { Some(nef_check(fan, ring, d)?) } else { None };
        nef.push((d.clone(), v));
    }
    let mut etas: Vec<GroupElement> = Vec::new();
    for k in 1..=forms.len() {
        for s in subsets(forms.len(), k) {
            let eta = s.iter().fold(group.zero(), |acc, &i| group.add(&acc, &degrees[i]));
            if !etas.contains(&eta) {
                etas.push(eta);
            }
        }
    }
    let mut full_dimensional = Vec::new();
    for eta in etas {
        let full = divisor_polytope(fan, ring, &eta)?.is_full_dimensional();
        full_dimensional.push((eta, full));
    }

    let mut report = CiSocleReport {
        omega,
        top_dimension,
        annihilates,
        status,
        verdict,
        nef,
        full_dimensional,
        notes: Vec::new(),
        group: group.clone(),
        names: ring.names().to_vec(),
    };
    if group.free_rank() != 1 {
        report
            .notes
            .push(format!("Picard rank {} is not 1; the socle statement may fail", group.free_rank()));
    }
    if report.hypotheses_hold() && (report.top_dimension != 1 || report.annihilates.iter().any(|a| !a)) {
        report
            .notes
            .push("verified hypotheses hold but the conclusion fails: evidence that the forms share a zero".into());
    }
    Ok(report)
}
