use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::arith::{rat, Rational, RationalMatrix};
use crate::grading::{leq, GroupElement, GroupSpec, OrderSpec};
use crate::polyring::{coordinates, parse_polynomial, partials_of_degree, GradedRing, Monomial, Polynomial, Role};

fn ring(names: &[&str], group: GroupSpec, degrees: &[&str], order: OrderSpec) -> Arc<GradedRing> {
    let degs = degrees.iter().map(|d| group.parse_element(d).unwrap()).collect();
    GradedRing::new(
        names.iter().map(|s| s.to_string()).collect(),
        degs,
        group,
        order,
        Role::Polynomial,
    )
    .unwrap()
}

fn p1p1() -> Arc<GradedRing> {
    ring(
        &["x", "y", "u", "v"],
        GroupSpec::free(2),
        &["(1,0)", "(1,0)", "(0,1)", "(0,1)"],
        OrderSpec::componentwise(2),
    )
}

fn el(r: &GradedRing, s: &str) -> GroupElement {
    r.group().parse_element(s).unwrap()
}

fn ideal(r: &Arc<GradedRing>, gens: &[&str], spans: &[&str]) -> IdealPresentation {
    let mut i = IdealPresentation::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap();
    for s in spans {
        i.push_span(el(r, s)).unwrap();
    }
    i
}

fn ex4_ideal(r: &Arc<GradedRing>) -> IdealPresentation {
    ideal(r, &["x^2*u - y^2*v", "x^2*v", "y^2*u"], &[])
}

fn ex1_ideal(r: &Arc<GradedRing>) -> IdealPresentation {
    ideal(r, &["x^2*u - y^2*v", "x^2*v", "y^2*u"], &["(0,2)", "(5,0)"])
}

fn weights(s: &AlgebraSupport) -> BTreeMap<String, usize> {
    let g = s.ring().group();
    s.hilbert_function().into_iter().map(|(d, h)| (g.format(&d), h)).collect()
}

fn expected(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|(d, h)| (d.to_string(), *h)).collect()
}

/// Independent count for monomial ideals: monomials of degree `g` divisible
/// by no generator.
fn monomial_quotient_dim(r: &GradedRing, gens: &[Monomial], g: &GroupElement) -> usize {
    r.monomials_of_degree(g)
        .unwrap()
        .iter()
        .filter(|m| !gens.iter().any(|a| a.divides(m)))
        .count()
}

#[test]
fn ex1_slice_at_2_1() {
    let r = p1p1();
    let s = ideal_slice(&ex1_ideal(&r), &el(&r, "(2,1)")).unwrap();
    assert_eq!(s.ambient.len(), 6);
    assert_eq!(s.h(), 3);
    for g in ["x^2*u - y^2*v", "x^2*v", "y^2*u"] {
        assert!(s.contains(&parse_polynomial(&r, g).unwrap()).unwrap());
    }
    assert!(!s.contains(&parse_polynomial(&r, "x*y*u").unwrap()).unwrap());
}

#[test]
fn degree_zero_of_proper_ideal() {
    let r = p1p1();
    assert_eq!(ideal_slice(&ex1_ideal(&r), &r.group().zero()).unwrap().h(), 1);
    assert_eq!(ideal_slice(&IdealPresentation::zero(&r), &r.group().zero()).unwrap().h(), 1);
}

#[test]
fn ex1_hilbert_function_socle_and_pairing() {
    let r = p1p1();
    let s = artinian_certify(&ex1_ideal(&r), DEFAULT_LEVEL_CAP).unwrap();
    assert!(s.is_artinian());
    assert_eq!(
        weights(&s),
        expected(&[
            ("(0,0)", 1),
            ("(1,0)", 2),
            ("(2,0)", 3),
            ("(3,0)", 4),
            ("(4,0)", 5),
            ("(0,1)", 2),
            ("(1,1)", 4),
            ("(2,1)", 3),
            ("(3,1)", 2),
            ("(4,1)", 1),
        ])
    );
    assert_eq!(s.greatest(), Some(&el(&r, "(4,1)")));

    let g40 = el(&r, "(4,0)");
    let soc = socle_slice(&s, &g40).unwrap();
    assert_eq!(soc.cols(), 3);
    // the socle is spanned by x^4, x^2y^2, y^4
    let slice = s.slice(&g40).unwrap();
    let spanning: Vec<Vec<Rational>> = ["x^4", "x^2*y^2", "y^4"]
        .iter()
        .map(|m| slice.normal_form(&parse_polynomial(&r, m).unwrap()).unwrap())
        .collect();
    let mine = soc.transpose();
    let both = mine.vstack(&RationalMatrix::from_rows(slice.h(), spanning));
    assert_eq!(both.rank(), 3);

    match is_cox_gorenstein(&s).unwrap() {
        GorensteinVerdict::NotGorenstein { socle } => {
            let degs: Vec<String> = socle.iter().map(|(g, d)| format!("{}:{d}", r.group().format(g))).collect();
            assert_eq!(degs, ["(4,0):3", "(4,1):1"]);
        }
        other => panic!("{other:?}"),
    }

    let omega = el(&r, "(4,1)");
    let pairing = poincare_pairing(&s, &omega, &g40).unwrap();
    assert_eq!((pairing.rows(), pairing.cols()), (5, 2));
    assert_eq!(pairing.left_kernel_basis().cols(), 3);
    assert_eq!(poincare_pairing(&s, &omega, &r.group().zero()).unwrap().rank(), 1);
    assert!(matches!(
        poincare_pairing(&s, &g40, &g40),
        Err(crate::Error::TopSliceDimension(5))
    ));
}

#[test]
fn ex2_chain_is_gorenstein() {
    let g = GroupSpec::new(1, vec![2]).unwrap();
    let r = ring(&["x", "y", "z"], g, &["(1;1)", "(1;0)", "(2;1)"], OrderSpec::componentwise(1));
    let i = ideal(&r, &["x", "y^2", "z^3"], &[]);
    let s = artinian_certify(&i, DEFAULT_LEVEL_CAP).unwrap();
    assert_eq!(
        weights(&s),
        expected(&[("(0;0~2)", 1), ("(1;0~2)", 1), ("(2;1~2)", 1), ("(3;1~2)", 1), ("(4;0~2)", 1), ("(5;0~2)", 1)])
    );
    let gens = [Monomial::new(vec![1, 0, 0]), Monomial::new(vec![0, 2, 0]), Monomial::new(vec![0, 0, 3])];
    for d in s.computed_degrees() {
        assert_eq!(s.h(&d).unwrap(), monomial_quotient_dim(&r, &gens, &d));
    }
    assert_eq!(
        is_cox_gorenstein(&s).unwrap(),
        GorensteinVerdict::Gorenstein { omega: el(&r, "(5;0)") }
    );
}

#[test]
fn maximal_ideal_support() {
    let r = p1p1();
    let s = artinian_certify(&IdealPresentation::maximal(&r), 10).unwrap();
    assert!(s.is_artinian());
    assert_eq!(s.support(), vec![r.group().zero()]);
    assert_eq!(s.greatest(), Some(&r.group().zero()));
}

#[test]
fn ex4_is_not_artinian() {
    let r = p1p1();
    let s = artinian_certify(&ex4_ideal(&r), DEFAULT_LEVEL_CAP).unwrap();
    assert_eq!(s.status(), &ArtinianStatus::NotArtinian { variable: 0 });
    let hs = hilbert_function(&ex4_ideal(&r), &(0..8).map(|k| el(&r, &format!("({k},0)"))).collect::<Vec<_>>()).unwrap();
    let values: Vec<usize> = hs.values().copied().collect();
    assert_eq!(values, (1..=8).collect::<Vec<_>>());
}

#[test]
fn inconclusive_is_distinct() {
    // (x - y) has no pure-power obstruction for x once the term x is present,
    // yet the quotient is a polynomial ring in one variable
    let r = ring(&["x", "y"], GroupSpec::free(1), &["(1)", "(1)"], OrderSpec::Semigroup);
    let s = artinian_certify(&ideal(&r, &["x - y"], &[]), 6).unwrap();
    assert_eq!(s.status(), &ArtinianStatus::Inconclusive { cap: 6 });
    assert!(is_cox_gorenstein(&s).is_err());
}

#[test]
fn multiplication_matrix_examples() {
    let r = p1p1();
    let q = r.dual();
    let f = parse_polynomial(&r, "x^2*u^3 + y^2*v^3").unwrap();
    let i = IdealPresentation::annihilator(&q, &f).unwrap();
    let l = parse_polynomial(&q, "U + V").unwrap();
    let m = multiplication_matrix(&i, &l, &el(&q, "(2,0)")).unwrap();
    assert_eq!((m.rows(), m.cols(), m.rank()), (2, 2, 2));

    let g = el(&q, "(1,1)");
    let h = ideal_slice(&i, &g).unwrap().h();
    let one = Polynomial::one(&q);
    assert_eq!(multiplication_matrix(&i, &one, &g).unwrap(), RationalMatrix::identity(h));
    let inside = parse_polynomial(&q, "X*Y").unwrap();
    assert!(multiplication_matrix(&i, &inside, &g).unwrap().is_zero());
}

#[test]
fn fermat_annihilator_matches_complete_intersection() {
    let g = GroupSpec::new(1, vec![2]).unwrap();
    let s = ring(&["x", "y", "z"], g, &["(1;1)", "(1;0)", "(2;1)"], OrderSpec::componentwise(1));
    let q = s.dual();
    let f = parse_polynomial(&s, "x^3*y^3*z").unwrap();
    let ann = IdealPresentation::annihilator(&q, &f).unwrap();
    let ci = ideal(&q, &["X^4", "Y^4", "Z^2"], &[]);
    for d in q.degrees_up_to_level(9).unwrap() {
        let a = ideal_slice(&ann, &d).unwrap();
        let b = ideal_slice(&ci, &d).unwrap();
        assert_eq!(a.ideal_rref, b.ideal_rref, "{}", q.group().format(&d));
    }
    let x4 = ideal_slice(&ann, &el(&q, "(4;0)")).unwrap();
    assert!(x4.contains(&parse_polynomial(&q, "X^4").unwrap()).unwrap());
    let sup = artinian_certify(&ann, DEFAULT_LEVEL_CAP).unwrap();
    assert_eq!(
        is_cox_gorenstein(&sup).unwrap(),
        GorensteinVerdict::Gorenstein { omega: el(&q, "(8;0)") }
    );
}

#[test]
fn annihilator_generators_weighted_fermat() {
    let s = ring(&["x", "y", "z"], GroupSpec::free(1), &["(1)", "(1)", "(2)"], OrderSpec::Semigroup);
    let q = s.dual();
    let f = parse_polynomial(&s, "x^4 + y^4 + z^2").unwrap();
    let ann = IdealPresentation::annihilator(&q, &f).unwrap();
    let listed = ideal(
        &q,
        &["X*Y", "X*Z", "Y*Z", "X^5", "Y^5", "Z^3", "X^4 - Y^4", "X^4 - 12*Z^2"],
        &[],
    );
    for d in q.degrees_up_to_level(10).unwrap() {
        assert_eq!(
            ideal_slice(&ann, &d).unwrap().ideal_rref,
            ideal_slice(&listed, &d).unwrap().ideal_rref
        );
    }
    let sup = artinian_certify(&ann, DEFAULT_LEVEL_CAP).unwrap();
    let hs: Vec<usize> = sup.hilbert_function().into_iter().map(|(_, h)| h).collect();
    assert_eq!(hs, [1, 2, 3, 2, 1]);
    let gens = minimal_generators(&sup).unwrap();
    let shown: Vec<String> = gens
        .iter()
        .flat_map(|(_, ps)| ps.iter().map(|p| p.to_string()))
        .collect();
    assert!(shown.contains(&"X*Y".to_string()), "{shown:?}");
    let count: usize = gens.iter().map(|(_, ps)| ps.len()).sum();
    // X*Y, X*Z, Y*Z, X^4 - Y^4, X^4 - 12*Z^2
    assert_eq!(count, 5, "{shown:?}");
}

#[test]
fn artinianize_ex4() {
    let r = p1p1();
    let i = ex4_ideal(&r);
    let omega = el(&r, "(4,1)");
    let j = artinianize(&i, &omega, DEFAULT_LEVEL_CAP).unwrap();
    let spans: Vec<String> = j.spans().iter().map(|h| r.group().format(h)).collect();
    assert_eq!(spans, ["(0,2)", "(5,0)"]);
    let s = artinian_certify(&j, DEFAULT_LEVEL_CAP).unwrap();
    assert!(s.is_artinian());
    assert_eq!(s.greatest(), Some(&omega));
    for g in r.degrees_up_to_level(5).unwrap() {
        if leq(&g, &omega, &r).unwrap() {
            let a = ideal_slice(&i, &g).unwrap();
            let b = ideal_slice(&j, &g).unwrap();
            assert_eq!(a.ideal_rref, b.ideal_rref);
            assert_eq!(a.standard, b.standard);
        }
    }
    // already Artinian with greatest element omega: nothing to add
    let again = artinianize(&ex1_ideal(&r), &omega, DEFAULT_LEVEL_CAP).unwrap();
    assert_eq!(again.spans().len(), 2);
    let j2 = artinianize(&j, &omega, DEFAULT_LEVEL_CAP).unwrap();
    assert_eq!(j2.spans(), j.spans());
    assert!(matches!(
        artinianize(&i, &el(&r, "(3,1)"), DEFAULT_LEVEL_CAP),
        Err(crate::Error::NotMaximal(_))
    ));
}

/// `J_g` as the left kernel of `(P, Q) -> Lambda(PQ)` on `S_g x S_(omega-g)`.
fn lambda_kernel_slice(s: &AlgebraSupport, omega: &GroupElement, g: &GroupElement) -> RationalMatrix {
    let r = s.ring();
    let (top, lambda) = lambda_functional(s, omega).unwrap();
    let left = r.monomials_of_degree(g).unwrap();
    let right = r.monomials_of_degree(&r.group().sub(omega, g)).unwrap();
    let m = RationalMatrix::from_fn(left.len(), right.len(), |i, j| {
        let prod = left[i].mul(&right[j]);
        let k = top.iter().position(|t| *t == prod).unwrap();
        lambda[k].clone()
    });
    let kernel = m.left_kernel_basis().transpose();
    let r = kernel.rref();
    r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>())
}

#[test]
fn gorensteinize_ex1() {
    let r = p1p1();
    let s = artinian_certify(&ex1_ideal(&r), DEFAULT_LEVEL_CAP).unwrap();
    let omega = el(&r, "(4,1)");
    let j = gorensteinize(&s, &omega).unwrap();
    let b = artinian_certify(&j, DEFAULT_LEVEL_CAP).unwrap();
    let mut w = weights(&s);
    w.insert("(4,0)".into(), 2);
    assert_eq!(weights(&b), w);
    assert_eq!(is_cox_gorenstein(&b).unwrap(), GorensteinVerdict::Gorenstein { omega: omega.clone() });
    for g in b.support() {
        assert_eq!(ideal_slice(&j, &g).unwrap().ideal_rref, lambda_kernel_slice(&s, &omega, &g));
        let p = poincare_pairing(&b, &omega, &g).unwrap();
        assert_eq!(p.rank(), p.rows());
        assert_eq!(p.rows(), p.cols());
    }
    // idempotent
    let again = gorensteinize(&b, &omega).unwrap();
    for g in b.computed_degrees() {
        assert_eq!(ideal_slice(&again, &g).unwrap().ideal_rref, ideal_slice(&j, &g).unwrap().ideal_rref);
    }
}

#[test]
fn symmetric_but_not_gorenstein() {
    // h = (1, 2, 1) with socle in degrees 1 and 2
    let r = ring(&["x", "y"], GroupSpec::free(1), &["(1)", "(1)"], OrderSpec::Semigroup);
    let s = artinian_certify(&ideal(&r, &["x^2", "x*y", "y^3"], &[]), 10).unwrap();
    let omega = el(&r, "(2)");
    assert_eq!(s.greatest(), Some(&omega));
    for (g, h) in s.hilbert_function() {
        assert_eq!(s.h(&r.group().sub(&omega, &g)).unwrap(), h);
    }
    match is_cox_gorenstein(&s).unwrap() {
        GorensteinVerdict::NotGorenstein { socle } => assert_eq!(socle.len(), 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn ex1_plus_degree_four_binomials() {
    // I + (x^3y, xy^3, x^4) also kills x^3yu, the generator of A_(4,1)
    let r = p1p1();
    let mut i = ex1_ideal(&r);
    for g in ["x^3*y", "x*y^3", "x^4"] {
        i.push_generator(parse_polynomial(&r, g).unwrap()).unwrap();
    }
    let s = artinian_certify(&i, DEFAULT_LEVEL_CAP).unwrap();
    assert_eq!(s.h(&el(&r, "(4,1)")).unwrap(), 0);
    assert_eq!(s.h(&el(&r, "(4,0)")).unwrap(), 2);
    assert_eq!(s.greatest(), None);
    // quotienting A_(4,0) by its socle instead keeps (4,1) and is Gorenstein
    let mut j = ex1_ideal(&r);
    for g in ["x^4", "x^2*y^2", "y^4"] {
        j.push_generator(parse_polynomial(&r, g).unwrap()).unwrap();
    }
    let b = artinian_certify(&j, DEFAULT_LEVEL_CAP).unwrap();
    assert_eq!(
        is_cox_gorenstein(&b).unwrap(),
        GorensteinVerdict::Gorenstein { omega: el(&r, "(4,1)") }
    );
}

#[test]
fn colon_by_variable_matches_derivative() {
    let s = ring(&["x", "y"], GroupSpec::free(1), &["(1)", "(1)"], OrderSpec::Semigroup);
    let q = s.dual();
    let base = IdealPresentation::annihilator(&q, &parse_polynomial(&s, "x^2*y^2").unwrap()).unwrap();
    let target = IdealPresentation::annihilator(&q, &parse_polynomial(&s, "x*y^2").unwrap()).unwrap();
    let x = parse_polynomial(&q, "X").unwrap();
    for k in 0..6 {
        let g = el(&q, &format!("({k})"));
        assert_eq!(
            colon_slice(&base, &x, &g).unwrap().ideal_rref,
            ideal_slice(&target, &g).unwrap().ideal_rref
        );
        let one = Polynomial::one(&q);
        assert_eq!(
            colon_slice(&base, &one, &g).unwrap().ideal_rref,
            ideal_slice(&base, &g).unwrap().ideal_rref
        );
    }
    let inside = parse_polynomial(&q, "X^3").unwrap();
    assert!(matches!(colon_slice(&base, &inside, &el(&q, "(0)")), Err(crate::Error::InIdeal)));
    let colon = IdealPresentation::colon(&base, &x).unwrap();
    let sup = artinian_certify(&colon, 20).unwrap();
    assert!(matches!(is_cox_gorenstein(&sup).unwrap(), GorensteinVerdict::Gorenstein { .. }));
}

#[test]
fn inverse_system_examples() {
    let g = GroupSpec::new(1, vec![2]).unwrap();
    let s = ring(&["x", "y", "z"], g, &["(1;1)", "(1;0)", "(2;1)"], OrderSpec::componentwise(1));
    let q = s.dual();
    let f = parse_polynomial(&s, "x^3*y^3*z").unwrap();
    let ann = IdealPresentation::annihilator(&q, &f).unwrap();
    let top = inverse_system_slice(&ann, f.degree().unwrap()).unwrap();
    assert_eq!(top.len(), 1);
    let ratio = top[0].reinterpret(&s).unwrap();
    let m = f.terms().keys().next().unwrap();
    assert_eq!(ratio.scale(&(f.coefficient(m) / ratio.coefficient(m))), f);

    let maximal = IdealPresentation::maximal(&q);
    assert!(inverse_system_slice(&maximal, &el(&q, "(2;1)")).unwrap().is_empty());
    assert_eq!(inverse_system_slice(&maximal, &q.group().zero()).unwrap().len(), 1);
}

#[test]
fn pure_power_obstruction() {
    let r = p1p1();
    assert_eq!(ex4_ideal(&r).pure_power_obstruction().unwrap(), Some(0));
    assert_eq!(ex1_ideal(&r).pure_power_obstruction().unwrap(), None);
    let i = ideal(&r, &["x^3 + y*x^2", "y^2", "u", "v^5"], &[]);
    assert_eq!(i.pure_power_obstruction().unwrap(), None);
    assert!(artinian_certify(&i, 30).unwrap().is_artinian());
}

fn random_ring(degs: &[(i64, i64)]) -> Arc<GradedRing> {
    let names: Vec<String> = (0..degs.len()).map(|i| format!("x{i}")).collect();
    let group = GroupSpec::free(2);
    let d = degs.iter().map(|&(a, b)| group.element(vec![a, b], vec![]).unwrap()).collect();
    GradedRing::new(names, d, group, OrderSpec::Semigroup, Role::Polynomial).unwrap()
}

fn ring_and_form() -> impl Strategy<Value = (Vec<(i64, i64)>, Vec<(i64, Vec<u32>)>)> {
    (2usize..=4).prop_flat_map(|n| {
        (
            proptest::collection::vec((0i64..3, 0i64..3).prop_filter("nonzero", |d| *d != (0, 0)), n),
            proptest::collection::vec((1i64..5, proptest::collection::vec(0u32..3, n)), 1..4),
        )
    })
}

/// Homogeneous `f` from the terms sharing the degree of the first term.
fn homogeneous_form(r: &Arc<GradedRing>, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    let first = r.monomial_degree(&Monomial::new(terms[0].1.clone()));
    Polynomial::from_terms(
        r,
        terms
            .iter()
            .map(|(c, e)| (Monomial::new(e.clone()), rat(*c)))
            .filter(|(m, _)| r.monomial_degree(m) == first),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn annihilator_quotients_are_gorenstein((degs, terms) in ring_and_form()) {
        let s = random_ring(&degs);
        prop_assume!(s.certificate().is_some());
        let f = homogeneous_form(&s, &terms);
        let q = s.dual();
        let ann = IdealPresentation::annihilator(&q, &f).unwrap();
        let sup = artinian_certify(&ann, DEFAULT_LEVEL_CAP).unwrap();
        prop_assert!(sup.is_artinian());
        let omega = f.degree().unwrap().clone();
        prop_assert_eq!(is_cox_gorenstein(&sup).unwrap(), GorensteinVerdict::Gorenstein { omega: omega.clone() });
        for (g, h) in sup.hilbert_function() {
            let dual = q.group().sub(&omega, &g);
            prop_assert_eq!(sup.h(&dual).unwrap(), h);
            let p = poincare_pairing(&sup, &omega, &g).unwrap();
            prop_assert_eq!(p.rank(), h);
            prop_assert_eq!(p.cols(), h);
            // inverse system slice = span of partials, same dimension as A_g
            let inv = inverse_system_slice(&ann, &g).unwrap();
            prop_assert_eq!(inv.len(), h);
            let basis = s.monomials_of_degree(&g).unwrap();
            let partials = partials_of_degree(&f, &g).unwrap();
            let mut rows: Vec<Vec<Rational>> = partials.iter().map(|p| coordinates(p, &basis).unwrap()).collect();
            let rank_partials = RationalMatrix::from_rows(basis.len(), rows.clone()).rank();
            prop_assert_eq!(rank_partials, h);
            rows.extend(inv.iter().map(|p| coordinates(&p.reinterpret(&s).unwrap(), &basis).unwrap()));
            prop_assert_eq!(RationalMatrix::from_rows(basis.len(), rows).rank(), h);
        }
        // gorensteinizing a Gorenstein algebra changes nothing
        let again = gorensteinize(&sup, &omega).unwrap();
        for g in sup.computed_degrees() {
            prop_assert_eq!(
                ideal_slice(&again, &g).unwrap().ideal_rref,
                ideal_slice(&ann, &g).unwrap().ideal_rref
            );
        }
    }

    #[test]
    fn monomial_ideal_dimensions((degs, terms) in ring_and_form(), k in 0i64..5) {
        let s = random_ring(&degs);
        prop_assume!(s.certificate().is_some());
        let gens: Vec<Monomial> = terms.iter().map(|(_, e)| Monomial::new(e.clone())).filter(|m| !m.is_one()).collect();
        let i = IdealPresentation::new(
            &s,
            gens.iter().map(|m| Polynomial::monomial(&s, m.clone(), rat(1))).collect(),
        ).unwrap();
        for g in s.degrees_up_to_level(k).unwrap() {
            prop_assert_eq!(ideal_slice(&i, &g).unwrap().h(), monomial_quotient_dim(&s, &gens, &g));
        }
    }
}

