//! Shared fixtures for the benchmarks in `benches/`.

use std::sync::Arc;

use coxgor_core::polyring::parse_polynomial;
use coxgor_core::{GradedRing, GroupSpec, IdealPresentation, OrderSpec, Polynomial, Role};

pub fn ring(names: &[&str], group: GroupSpec, degrees: &[&str], order: OrderSpec) -> Arc<GradedRing> {
    let degs = degrees.iter().map(|d| group.parse_element(d).unwrap()).collect();
    GradedRing::new(names.iter().map(|s| s.to_string()).collect(), degs, group, order, Role::Polynomial).unwrap()
}

/// `P^1 x P^1` with componentwise order.
pub fn p1p1() -> Arc<GradedRing> {
    ring(&["x", "y", "u", "v"], GroupSpec::free(2), &["(1,0)", "(1,0)", "(0,1)", "(0,1)"], OrderSpec::componentwise(2))
}

/// The non-Gorenstein example with greatest element `(4,1)`.
pub fn ex1_ideal() -> IdealPresentation {
    let r = p1p1();
    let mut i = IdealPresentation::new(
        &r,
        ["x^2*u - y^2*v", "x^2*v", "y^2*u"].iter().map(|g| parse_polynomial(&r, g).unwrap()).collect(),
    )
    .unwrap();
    for h in ["(0,2)", "(5,0)"] {
        i.push_span(r.group().parse_element(h).unwrap()).unwrap();
    }
    i
}

/// A generic-looking form of bidegree `(a,b)` on `P^1 x P^1`.
pub fn bihomogeneous(a: u32, b: u32) -> Polynomial {
    let r = p1p1();
    let mut terms = Vec::new();
    for i in 0..=a {
        for j in 0..=b {
            let c = 1 + (i * 7 + j * 3) % 5;
            terms.push(format!("{c}*x^{i}*y^{}*u^{j}*v^{}", a - i, b - j));
        }
    }
    parse_polynomial(&r, &terms.join(" + ")).unwrap()
}

/// `x^d + y^d + z^(d/2)` with weights `(1,1,2)`; `d` even.
pub fn weighted_fermat(d: u32) -> Polynomial {
    let r = ring(&["x", "y", "z"], GroupSpec::free(1), &["(1)", "(1)", "(2)"], OrderSpec::Semigroup);
    parse_polynomial(&r, &format!("x^{d} + y^{d} + z^{}", d / 2)).unwrap()
}

/// Degrees `(1;0),(1;1),(2;1)` over `Z + Z/2`.
pub fn fake2() -> Arc<GradedRing> {
    ring(&["x1", "x2", "x3"], GroupSpec::new(1, vec![2]).unwrap(), &["(1;0)", "(1;1)", "(2;1)"], OrderSpec::Semigroup)
}

/// Hirzebruch surface `F_1`.
pub fn f1() -> Arc<GradedRing> {
    ring(&["u", "v", "s", "t"], GroupSpec::free(2), &["(1,0)", "(1,0)", "(0,1)", "(-1,1)"], OrderSpec::Semigroup)
}
