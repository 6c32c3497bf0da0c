//! The grading group `G = Z^rho + Z/m_1 + ... + Z/m_N`, its elements, the
//! partial-order configurations used by the examples, and positivity
//! certificates that make every graded piece finite-dimensional.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::polyring::GradedRing;

/// Shape of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    free_rank: usize,
    moduli: Vec<i64>,
}

/// An element of a [`GroupSpec`]; torsion residues are kept reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

impl GroupElement {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&x| x == 0) && self.torsion.iter().all(|&x| x == 0)
    }
}

impl GroupSpec {
    pub fn new(free_rank: usize, moduli: Vec<i64>) -> Result<Self> {
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::Invalid(format!("torsion modulus {m} must be at least 2")));
        }
        Ok(GroupSpec { free_rank, moduli })
    }

    /// `Z^rank`.
    pub fn free(rank: usize) -> Self {
        GroupSpec { free_rank: rank, moduli: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            free: vec![0; self.free_rank],
            torsion: vec![0; self.moduli.len()],
        }
    }

    /// Builds an element, reducing torsion residues.
    pub fn element(&self, free: Vec<i64>, torsion: Vec<i64>) -> Result<GroupElement> {
        if free.len() != self.free_rank || torsion.len() != self.moduli.len() {
            return Err(Error::GroupMismatch(format!(
                "expected {} free and {} torsion entries, got {} and {}",
                self.free_rank,
                self.moduli.len(),
                free.len(),
                torsion.len()
            )));
        }
        let torsion = torsion
            .iter()
            .zip(&self.moduli)
            .map(|(t, m)| t.rem_euclid(*m))
            .collect();
        Ok(GroupElement { free, torsion })
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        let ok = g.free.len() == self.free_rank
            && g.torsion.len() == self.moduli.len()
            && g.torsion.iter().zip(&self.moduli).all(|(t, m)| (0..*m).contains(t));
        if ok {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("element {g:?} does not belong to {self}")))
        }
    }

    fn reduce(&self, mut g: GroupElement) -> GroupElement {
        for (t, m) in g.torsion.iter_mut().zip(&self.moduli) {
            *t = t.rem_euclid(*m);
        }
        g
    }

    pub fn checked_add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    pub fn checked_neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.neg(a))
    }

    pub fn checked_scale(&self, a: &GroupElement, k: i64) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.scale(a, k))
    }

    /// Panics if either operand has the wrong shape; see [`GroupSpec::checked_add`].
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        assert_eq!(a.free.len(), b.free.len(), "group mismatch");
        assert_eq!(a.torsion.len(), b.torsion.len(), "group mismatch");
        self.reduce(GroupElement {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a.torsion.iter().zip(&b.torsion).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.scale(a, -1)
    }

    pub fn scale(&self, a: &GroupElement, k: i64) -> GroupElement {
        self.reduce(GroupElement {
            free: a.free.iter().map(|x| x * k).collect(),
            torsion: a.torsion.iter().map(|x| x * k).collect(),
        })
    }

    /// Parses `(a,b;c~m,d~n)`. Torsion residues may omit `~m`; when present
    /// the modulus must agree with this group. A bare integer is accepted for
    /// `Z`.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let err = |message: String| Error::Parse { offset: 0, message };
        let t = text.trim();
        let inner = match t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            Some(s) => s,
            None if !t.contains(['(', ')', ';']) => t,
            None => return Err(err(format!("malformed degree `{text}`"))),
        };
        let (free_part, tors_part) = match inner.split_once(';') {
            Some((a, b)) => (a, Some(b)),
            None => (inner, None),
        };
        let split = |s: &str| -> Vec<String> {
            s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
        };
        let free = split(free_part)
            .iter()
            .map(|x| x.parse::<i64>().map_err(|_| err(format!("bad integer `{x}` in `{text}`"))))
            .collect::<Result<Vec<_>>>()?;
        let mut torsion = Vec::new();
        for (j, entry) in tors_part.map(split).unwrap_or_default().iter().enumerate() {
            let (r, m) = match entry.split_once('~') {
                Some((r, m)) => (r.trim(), Some(m.trim())),
                None => (entry.as_str(), None),
            };
            let r: i64 = r.parse().map_err(|_| err(format!("bad residue `{r}` in `{text}`")))?;
            if let Some(m) = m {
                let m: i64 = m.parse().map_err(|_| err(format!("bad modulus `{m}` in `{text}`")))?;
                if self.moduli.get(j) != Some(&m) {
                    return Err(Error::GroupMismatch(format!("modulus {m} in `{text}` does not match {self}")));
                }
            }
            torsion.push(r);
        }
        self.element(free, torsion)
    }

    /// Display adapter producing `(a,b;c~m)`.
    pub fn display<'a>(&'a self, g: &'a GroupElement) -> DisplayElement<'a> {
        DisplayElement { spec: self, g }
    }

    pub fn format(&self, g: &GroupElement) -> String {
        self.display(g).to_string()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 || self.moduli.is_empty() {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.moduli.iter().map(|m| format!("Z/{m}")));
        write!(f, "{}", parts.join(" + "))
    }
}

pub struct DisplayElement<'a> {
    spec: &'a GroupSpec,
    g: &'a GroupElement,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free: Vec<String> = self.g.free.iter().map(|x| x.to_string()).collect();
        write!(f, "({}", free.join(","))?;
        if !self.spec.moduli.is_empty() {
            let tors: Vec<String> = self
                .g
                .torsion
                .iter()
                .zip(&self.spec.moduli)
                .map(|(t, m)| format!("{t}~{m}"))
                .collect();
            write!(f, ";{}", tors.join(","))?;
        }
        write!(f, ")")
    }
}

/// How `g <= h` is decided.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum OrderSpec {
    /// `h - g` lies in the monoid generated by the variable degrees.
    #[default]
    Semigroup,
    /// `phi_j(free(h - g)) >= 0` for every listed functional; torsion is ignored.
    Functional(Vec<Vec<Rational>>),
}

impl OrderSpec {
    pub fn functional(functionals: Vec<Vec<Rational>>) -> Result<Self> {
        if functionals.is_empty() {
            return Err(Error::Invalid("functional order needs at least one functional".into()));
        }
        Ok(OrderSpec::Functional(functionals))
    }

    /// Componentwise order on `Z^rank`.
    pub fn componentwise(rank: usize) -> Self {
        OrderSpec::Functional(
            (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| Rational::from_integer(((i == j) as i64).into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Functional orders can fail antisymmetry when the group has torsion.
    pub fn is_preorder_only(&self, group: &GroupSpec) -> bool {
        matches!(self, OrderSpec::Functional(_)) && !group.moduli().is_empty()
    }
}

/// A homomorphism `phi: G -> Q` (free part only) that is positive on every
/// variable degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositivityCertificate {
    pub phi: Vec<Rational>,
}

impl PositivityCertificate {
    pub fn eval(&self, g: &GroupElement) -> Rational {
        eval_functional(&self.phi, g)
    }

    /// The certificate as integers; only certificates produced by
    /// [`positivity_certificate`] are guaranteed integral.
    pub(crate) fn integral(&self) -> Option<Vec<i64>> {
        self.phi
            .iter()
            .map(|q| {
                if q.is_integer() {
                    i64::try_from(q.numer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }
}

pub fn eval_functional(phi: &[Rational], g: &GroupElement) -> Rational {
    phi.iter()
        .zip(&g.free)
        .fold(Rational::zero(), |acc, (p, &x)| acc + p * Rational::from_integer(x.into()))
}

pub fn format_functional(phi: &[Rational]) -> String {
    let parts: Vec<String> = phi.iter().map(format_rational).collect();
    format!("({})", parts.join(","))
}

pub fn parse_functional(parts: &[String]) -> Result<Vec<Rational>> {
    parts
        .iter()
        .map(|p| {
            parse_rational(p).ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("bad rational `{p}`"),
            })
        })
        .collect()
}

const CERTIFICATE_SEARCH_LIMIT: usize = 400_000;

/// Searches small integer vectors, by increasing L1 norm and then
/// lexicographically, for `phi` with `phi(free(d)) > 0` for every degree.
///
/// Returns `None` when no such vector exists within the search budget; in
/// particular whenever some degree has zero free part.
pub fn positivity_certificate(degrees: &[GroupElement], free_rank: usize) -> Option<PositivityCertificate> {
    if free_rank == 0 || degrees.iter().any(|d| d.free.iter().all(|&x| x == 0)) {
        return None;
    }
    let mut visited = 0usize;
    for norm in 1..=24i64 {
        let mut candidates = Vec::new();
        vectors_with_l1_norm(free_rank, norm, &mut Vec::new(), &mut candidates);
        candidates.sort();
        for phi in candidates {
            visited += 1;
            let positive = degrees
                .iter()
                .all(|d| d.free.iter().zip(&phi).map(|(a, b)| a * b).sum::<i64>() > 0);
            if positive && gcd_all(&phi) == 1 {
                return Some(PositivityCertificate {
                    phi: phi.iter().map(|&x| Rational::from_integer(x.into())).collect(),
                });
            }
        }
        if visited > CERTIFICATE_SEARCH_LIMIT {
            break;
        }
    }
    None
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0, |a, &b| num_integer::gcd(a, b))
}

fn vectors_with_l1_norm(len: usize, norm: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if prefix.len() == len - 1 {
        let used: i64 = prefix.iter().map(|x| x.abs()).sum();
        let rest = norm - used;
        if rest == 0 {
            let mut v = prefix.clone();
            v.push(0);
            out.push(v);
        } else {
            for s in [-rest, rest] {
                let mut v = prefix.clone();
                v.push(s);
                out.push(v);
            }
        }
        return;
    }
    let used: i64 = prefix.iter().map(|x| x.abs()).sum();
    let rest = norm - used;
    for x in -rest..=rest {
        prefix.push(x);
        vectors_with_l1_norm(len, norm, prefix, out);
        prefix.pop();
    }
}

/// `g <= h` under the ring's configured order.
pub fn leq(g: &GroupElement, h: &GroupElement, ring: &GradedRing) -> Result<bool> {
    let group = ring.group();
    group.check(g)?;
    group.check(h)?;
    match ring.order() {
        OrderSpec::Semigroup => {
            if ring.certificate().is_none() {
                return Err(Error::UnsupportedGrading(
                    "semigroup order needs a positivity certificate".into(),
                ));
            }
            ring.has_monomial_of_degree(&group.sub(h, g))
        }
        OrderSpec::Functional(fs) => {
            let diff = group.sub(h, g);
            Ok(fs.iter().all(|phi| !eval_functional(phi, &diff).is_negative()))
        }
    }
}

/// `g < h`: `g <= h` and not `h <= g`.
pub fn strictly_less(g: &GroupElement, h: &GroupElement, ring: &GradedRing) -> Result<bool> {
    Ok(leq(g, h, ring)? && !leq(h, g, ring)?)
}

/// Cover pairs `(g, h)` of the strict order restricted to `degrees`, in the
/// order the degrees are given.
pub fn cover_relations(degrees: &[GroupElement], ring: &GradedRing) -> Result<Vec<(GroupElement, GroupElement)>> {
    let n = degrees.len();
    let mut less = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                less[i][j] = strictly_less(&degrees[i], &degrees[j], ring)?;
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if less[i][j] && !(0..n).any(|k| less[i][k] && less[k][j]) {
                out.push((degrees[i].clone(), degrees[j].clone()));
            }
        }
    }
    Ok(out)
}
