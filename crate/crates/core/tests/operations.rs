//! Behaviour of the public operations on small, hand-checkable inputs.

use std::collections::BTreeSet;

use pigrowth::catalog::{self, InvolutionKind as K, Triangular};
use pigrowth::cochar::{
    cocharacter_table, codimension_from_cocharacters, fit_growth, hook_dimension, hwv_templates, multiplicity,
    Multipartition, Partition,
};
use pigrowth::eval::{
    codimension, contains_up_to, equivalent_up_to, evaluation_matrix, identity_space, is_identity, pattern_codimension,
    proper_codimension, proper_pattern_codimension,
};
use pigrowth::groups::{klein, validate_group, GroupViolation};
use pigrowth::gstar::AlgebraViolation;
use pigrowth::pattern::{one_plus, patterns, Pattern};
use pigrowth::poly::MultilinearPoly;
use pigrowth::scalar::{int, Scalar};
use pigrowth::select::Bindings;
use pigrowth::tideal::{multilinear_consequences, verify_tideal, GeneratorSet};
use pigrowth::{cyclic, direct_product, Error, GStarAlgebra, Sign, SignedDegree};

use Sign::{Minus as M, Plus as P};

fn sd(g: usize, s: Sign) -> SignedDegree {
    SignedDegree::new(g, s)
}

fn x(i: u32, g: usize, s: Sign) -> MultilinearPoly {
    MultilinearPoly::var(i, g, s)
}

fn bind(pairs: &[(&str, usize)]) -> Bindings {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn groups() {
    assert_eq!(cyclic(1).unwrap().order(), 1);
    assert_eq!(cyclic(2).unwrap().element_order(1), 2);
    let z4 = cyclic(4).unwrap();
    assert_eq!((z4.element_order(1), z4.element_order(2), z4.element_order(0)), (4, 2, 1));
    let k = klein();
    assert_eq!(k, direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()));
    assert_ne!(k.mul(2, 1), k.identity());
    assert_eq!(k.element_order(3), 2);
    let z3 = cyclic(3).unwrap();
    assert_eq!(direct_product(&cyclic(1).unwrap(), &z3).table(), z3.table());
    let z6 = direct_product(&cyclic(2).unwrap(), &z3);
    assert_eq!((z6.order(), z6.element_order(4)), (6, 6));
    assert!(validate_group(z3.table(), 0).is_ok());
    assert!(matches!(validate_group(&[vec![0, 1], vec![1, 1]], 0), Err(GroupViolation::NotLatinRow { row: 1 })));
    assert!(cyclic(0).is_err());
}

#[test]
fn algebra_axioms() {
    let z4 = cyclic(4).unwrap();
    // E_1 symmetric but E_1^2 skew cannot be an anti-automorphism.
    let bad = catalog::c_algebra_unchecked(3, 1, &z4, K::CStarAlt).unwrap();
    assert!(matches!(bad.validate(), Err(Error::Algebra(AlgebraViolation::NotAntiAutomorphism { .. }))));
    let w = catalog::w_algebra(1, 3, &z4, K::Nu1).unwrap();
    let mut grading = w.grading().to_vec();
    grading[1] = 2;
    let broken = GStarAlgebra::new(
        z4.clone(),
        grading,
        w.structure_triples(),
        w.involution_matrix().to_vec(),
        w.unit().map(<[Scalar]>::to_vec),
    );
    assert!(matches!(broken, Err(Error::Algebra(AlgebraViolation::Grading { .. }))));
}

#[test]
fn products_and_involutions() {
    let z1 = cyclic(1).unwrap();
    let g = catalog::grassmann2(0, 0, &z1, K::Tau).unwrap();
    let (e1, e2) = (g.basis_vector(1), g.basis_vector(2));
    assert_eq!(g.multiply(&e1, &e2), g.basis_vector(3));
    assert_eq!(g.multiply(&e2, &e1), g.basis_vector(3).iter().map(|c| -c).collect::<Vec<_>>());
    let unit = g.unit().unwrap().to_vec();
    assert_eq!(g.multiply(&unit, &e2), e2);
    assert_eq!(g.involute(&unit), unit);
    assert_eq!(g.involute(&e1), e1.iter().map(|c| -c).collect::<Vec<_>>());
    assert_eq!(g.involute(&g.basis_vector(3))[3], int(-1));
    let gam = catalog::grassmann2(0, 0, &z1, K::Gamma).unwrap();
    assert_eq!(gam.involute(&e1)[1], int(-1));
    assert_eq!(gam.involute(&e2)[2], int(1));
    assert_eq!(gam.involute(&gam.basis_vector(3))[3], int(1));
    let c3 = catalog::c_algebra(3, 0, &z1, K::Trivial).unwrap();
    assert_eq!(c3.multiply(&c3.basis_vector(1), &c3.basis_vector(1)), c3.basis_vector(2));
}

#[test]
fn components_and_supports() {
    let z4 = cyclic(4).unwrap();
    let c = catalog::c_algebra(3, 1, &z4, K::CStar).unwrap();
    assert_eq!(c.homogeneous_component(sd(1, M)), &[c.basis_vector(1)]);
    assert!(c.homogeneous_component(sd(1, P)).is_empty());
    assert_eq!(c.supp_star(), BTreeSet::from([sd(0, P), sd(1, M), sd(2, P)]));
    let u = catalog::triangular_pair(Triangular::U, 2, &z4).unwrap();
    assert_eq!(u.supp_star(), BTreeSet::from([sd(0, P), sd(2, P), sd(2, M)]));
    let t = catalog::grassmann2(1, 1, &z4, K::Tau).unwrap();
    assert_eq!(t.supp_star(), BTreeSet::from([sd(0, P), sd(1, M), sd(2, M)]));
    assert!(GStarAlgebra::zero(z4.clone()).supp_star().is_empty());
    let k = klein();
    let tk = catalog::grassmann2(2, 1, &k, K::Tau).unwrap();
    assert!([2, 1, 3].iter().all(|&d| tk.supp_star().contains(&sd(d, M))));
    let s = catalog::grassmann2(2, 1, &k, K::Psi).unwrap().direct_sum(&catalog::w_algebra(2, 1, &k, K::Nu1).unwrap()).unwrap();
    assert!(s.validate().is_ok());
    assert_eq!(s.dim(), 8);
}

#[test]
fn catalog_constructions() {
    let z2 = cyclic(2).unwrap();
    let c2 = catalog::c_algebra(2, 1, &z2, K::Trivial).unwrap();
    assert_eq!((c2.dim(), c2.supp_star()), (2, BTreeSet::from([sd(0, P), sd(1, P)])));
    assert_eq!(catalog::c_algebra(3, 1, &z2, K::Trivial).unwrap().grading(), &[0, 1, 0]);
    let z1 = cyclic(1).unwrap();
    assert_eq!(catalog::triangular_pair(Triangular::N, 0, &z1).unwrap().dim(), 5);
    let u1 = catalog::triangular_pair(Triangular::U, 0, &z1).unwrap();
    assert!(!is_identity(&u1, &x(1, 0, M)));
    assert!(is_identity(&catalog::c_algebra(3, 0, &z1, K::Trivial).unwrap(), &x(1, 0, M)));
    let n1 = catalog::triangular_pair(Triangular::N, 0, &z1).unwrap();
    assert!(!is_identity(&n1, &x(1, 0, P).commutator(&x(2, 0, M)).unwrap()));
    let w = catalog::w_algebra(0, 0, &z1, K::Nu3).unwrap();
    let (b, c) = (w.basis_vector(1), w.basis_vector(2));
    assert_eq!(w.multiply(&b, &c), w.multiply(&c, &b));
    assert!(w.multiply(&b, &b).iter().all(|v| *v == int(0)));
    assert_eq!(w.involute(&b)[1], int(-1));
    assert_eq!(w.involute(&c)[2], int(1));
    assert_eq!(w.involute(&w.basis_vector(3))[3], int(-1));
}

#[test]
fn json_round_trip() {
    let k = klein();
    let a = catalog::w_algebra(2, 1, &k, K::Nu2).unwrap();
    let b = GStarAlgebra::from_json(&a.to_json()).unwrap();
    assert_eq!(a.structure_triples(), b.structure_triples());
    assert_eq!(a.grading(), b.grading());
    let bad = a.to_json().replacen("\"1\"", "\"1/0\"", 1);
    assert!(matches!(GStarAlgebra::from_json(&bad), Err(Error::Schema(_) | Error::Parse(_))));
    let f = GStarAlgebra::from_json(&catalog::field(&cyclic(1).unwrap()).to_json()).unwrap();
    assert!((0..=4).all(|n| codimension(&f, n).unwrap() == 1));
}

#[test]
fn adjoining_a_unit() {
    let z1 = cyclic(1).unwrap();
    let nil = catalog::radical(&catalog::c_algebra(2, 0, &z1, K::Trivial).unwrap()).unwrap();
    let t = nil.adjoin_unity();
    assert_eq!((t.dim(), t.is_unital()), (2, true));
    assert!(t.homogeneous_component(sd(0, M)).is_empty());
    assert!((0..=4).all(|n| codimension(&t, n).unwrap() == 1));
    assert!(t.homogeneous_component(sd(0, P)).len() == 2);
}

#[test]
fn polynomials() {
    let (a, b) = (x(1, 0, P), x(2, 0, P));
    assert_eq!(a.commutator(&b).unwrap(), b.commutator(&a).unwrap().scale(&int(-1)));
    assert_eq!(a.jordan(&b).unwrap(), b.jordan(&a).unwrap());
    assert!(a.mul(&x(1, 0, M)).is_err());
    let z1 = cyclic(1).unwrap();
    let c3 = catalog::c_algebra(3, 0, &z1, K::Trivial).unwrap();
    assert!(is_identity(&c3, &a.commutator(&b).unwrap()));
    let plain = pigrowth::poly::GenPoly::parse("x1_g*x2_g", &cyclic(3).unwrap(), &bind(&[("g", 1)])).unwrap();
    assert_eq!(plain.expand().len(), 4);
    let mixed = pigrowth::poly::GenPoly::parse("[x1^+_e,x2_e]", &cyclic(3).unwrap(), &bind(&[("e", 0)])).unwrap();
    assert_eq!(mixed.expand().len(), 2);
    let signed = pigrowth::poly::GenPoly::parse("x1^-_e", &z1, &bind(&[("e", 0)])).unwrap();
    assert_eq!(signed.expand(), vec![x(1, 0, M)]);
}

#[test]
fn patterns_and_evaluation() {
    let z1 = cyclic(1).unwrap();
    assert_eq!(patterns(&z1, 0), vec![Pattern::empty()]);
    assert_eq!(patterns(&z1, 1).len(), 2);
    assert_eq!(patterns(&cyclic(2).unwrap(), 2).len(), 10);
    let z4 = cyclic(4).unwrap();
    let c3 = catalog::c_algebra(3, 1, &z4, K::Trivial).unwrap();
    let m = evaluation_matrix(&c3, &Pattern::empty());
    assert_eq!(m, vec![c3.unit().unwrap().to_vec()]);
    assert_eq!(pattern_codimension(&c3, &Pattern::empty()), 1);
    let c = catalog::c_algebra(3, 0, &z1, K::Trivial).unwrap();
    let skew = Pattern::from_types([sd(0, M)]);
    assert_eq!(pattern_codimension(&c, &skew), 0);
    assert_eq!(identity_space(&c, &skew).len(), 1);
    let c2 = catalog::c_algebra(2, 1, &z4, K::Trivial).unwrap();
    assert_eq!(pattern_codimension(&c2, &Pattern::from_types([sd(1, P)])), 1);
    let f = catalog::field(&z1);
    assert_eq!(pattern_codimension(&f, &Pattern::from_types([sd(0, P), sd(0, P)])), 1);
    let tau = catalog::grassmann2(1, 1, &z4, K::Tau).unwrap();
    assert_eq!(evaluation_matrix(&tau, &Pattern::from_types([sd(1, M), sd(1, M)])).len(), 2);
    assert_eq!(pattern_codimension(&tau, &Pattern::from_types([sd(1, M), sd(1, M)])), 1);
}

#[test]
fn codimensions() {
    let z4 = cyclic(4).unwrap();
    assert_eq!(codimension(&catalog::c_algebra(3, 1, &z4, K::Trivial).unwrap(), 3).unwrap(), 10);
    let k = klein();
    assert_eq!(codimension(&catalog::grassmann2(2, 1, &k, K::Tau).unwrap(), 2).unwrap(), 9);
    assert!((0..=4).all(|n| codimension(&catalog::field(&z4), n).unwrap() == 1));
    let c3 = catalog::c_algebra(3, 1, &z4, K::Trivial).unwrap();
    assert_eq!((0..4).map(|n| proper_codimension(&c3, n).unwrap()).collect::<Vec<_>>(), vec![1, 2, 1, 0]);
    assert!(matches!(codimension(&c3, 40), Err(Error::DegreeCap { .. })));
    let z1 = cyclic(1).unwrap();
    let u1 = catalog::triangular_pair(Triangular::U, 0, &z1).unwrap();
    assert_eq!(proper_pattern_codimension(&u1, &Pattern::from_types([sd(0, P), sd(0, P)])).unwrap(), 1);
    assert_eq!(proper_pattern_codimension(&u1, &Pattern::from_types([sd(0, P)])).unwrap(), 0);
    let nil = catalog::radical(&c3).unwrap();
    assert!(matches!(proper_codimension(&nil, 1), Err(Error::NotUnital)));
}

#[test]
fn proper_pattern_sums() {
    let z2 = cyclic(2).unwrap();
    for a in [
        catalog::triangular_pair(Triangular::N, 1, &z2).unwrap(),
        catalog::grassmann2(1, 1, &z2, K::Gamma).unwrap(),
        catalog::w_algebra(0, 1, &z2, K::Nu3).unwrap(),
    ] {
        for n in 0..=3 {
            let total: i128 = patterns(&z2, n)
                .iter()
                .map(|p| p.multinomial() as i128 * proper_pattern_codimension(&a, p).unwrap())
                .sum();
            assert_eq!(total, proper_codimension(&a, n).unwrap());
        }
    }
}

#[test]
fn identities() {
    let z2 = cyclic(2).unwrap();
    let c3h = catalog::c_algebra(3, 1, &z2, K::Trivial).unwrap();
    assert!(is_identity(&c3h, &x(1, 0, M)));
    let z4 = cyclic(4).unwrap();
    let tau = catalog::grassmann2(1, 1, &z4, K::Tau).unwrap();
    assert!(is_identity(&tau, &x(1, 1, M).jordan(&x(2, 1, M)).unwrap()));
    assert!(!is_identity(&tau, &x(1, 1, M).commutator(&x(2, 1, M)).unwrap()));
    let p = Pattern::from_types([sd(0, P), sd(0, P)]);
    let f = catalog::field(&z2);
    let comm = x(1, 0, P).commutator(&x(2, 0, P)).unwrap().canonical_row().1;
    let space = identity_space(&f, &p);
    assert_eq!(space.len(), 1);
    let row: Vec<Scalar> = space[0].iter().cloned().map(Scalar::from_integer).collect();
    assert_eq!(row[0].clone() * &comm[1], row[1].clone() * &comm[0]);
}

#[test]
fn varieties() {
    let z2 = cyclic(2).unwrap();
    let u = catalog::triangular_pair(Triangular::U, 1, &z2).unwrap();
    assert!(contains_up_to(&u, &u, 3).unwrap());
    assert!(contains_up_to(&u, &catalog::c_algebra(2, 1, &z2, K::Trivial).unwrap(), 3).unwrap());
    let z1 = cyclic(1).unwrap();
    let c3s = catalog::c_algebra(3, 0, &z1, K::CStar).unwrap();
    let u1 = catalog::triangular_pair(Triangular::U, 0, &z1).unwrap();
    assert!(!contains_up_to(&c3s, &u1, 2).unwrap());
    assert!(!equivalent_up_to(&c3s, &u1, 2).unwrap());
    assert!(equivalent_up_to(&u, &u.direct_sum(&u).unwrap(), 3).unwrap());
    assert!(!equivalent_up_to(
        &catalog::c_algebra(2, 1, &z2, K::Trivial).unwrap(),
        &catalog::c_algebra(3, 1, &z2, K::Trivial).unwrap(),
        2
    )
    .unwrap());
    assert!(matches!(contains_up_to(&u, &u1, 1), Err(Error::GroupMismatch)));
    let zero = GStarAlgebra::zero(z2.clone());
    assert!(equivalent_up_to(&u, &u.direct_sum(&zero).unwrap(), 3).unwrap());
}

#[test]
fn cocharacters() {
    let hd = |p: &[usize]| hook_dimension(&Partition::new(p.to_vec()).unwrap());
    assert_eq!((hd(&[4]), hd(&[1, 1, 1]), hd(&[2, 1]), hd(&[3, 2])), (1, 1, 2, 5));
    let e = one_plus(&cyclic(1).unwrap());
    assert_eq!(hwv_templates(&Multipartition::single(e, &[1, 1]), 0).unwrap().len(), 1);
    assert_eq!(hwv_templates(&Multipartition::pair(sd(1, M), sd(2, P)), 0).unwrap().len(), 2);
    let jordan = hwv_templates(&Multipartition::single(sd(1, M), &[2]), 0).unwrap();
    assert_eq!(jordan, vec![x(1, 1, M).jordan(&x(2, 1, M)).unwrap()]);
    let z4 = cyclic(4).unwrap();
    let c = catalog::c_algebra(3, 1, &z4, K::CStar).unwrap();
    assert_eq!(multiplicity(&c, &Multipartition::single(sd(1, M), &[2])).unwrap(), 1);
    assert_eq!(multiplicity(&c, &Multipartition::single(sd(1, M), &[1])).unwrap(), 1);
    assert_eq!(multiplicity(&c, &Multipartition::single(sd(3, M), &[1])).unwrap(), 0);
    let k = klein();
    let s = catalog::grassmann2(2, 1, &k, K::Psi).unwrap().direct_sum(&catalog::w_algebra(2, 1, &k, K::Nu1).unwrap()).unwrap();
    assert_eq!(multiplicity(&s, &Multipartition::pair(sd(2, P), sd(1, P))).unwrap(), 2);
    let z1 = cyclic(1).unwrap();
    let rows = cocharacter_table(&catalog::triangular_pair(Triangular::U, 0, &z1).unwrap());
    let got: Vec<(String, usize)> = rows.iter().map(|r| (r.mp.to_string(), r.mult)).collect();
    assert_eq!(got, vec![("((1)_{0-})".to_string(), 1), ("((1,1)_{0+})".to_string(), 1)]);
    assert!(cocharacter_table(&catalog::field(&z1)).is_empty());
    let z2 = cyclic(2).unwrap();
    assert_eq!(cocharacter_table(&catalog::w_algebra(1, 1, &z2, K::Nu3).unwrap()).len(), 4);
    let c3 = cocharacter_table(&catalog::c_algebra(3, 1, &z4, K::Trivial).unwrap());
    assert_eq!(codimension_from_cocharacters(&c3, 4), 15);
    let sum = catalog::grassmann2(1, 1, &z4, K::Gamma).unwrap().direct_sum(&catalog::w_algebra(1, 1, &z4, K::Nu3).unwrap()).unwrap();
    assert_eq!(codimension_from_cocharacters(&cocharacter_table(&sum), 2), 13);
    assert!((0..5).all(|n| codimension_from_cocharacters(&[], n) == 1));
}

#[test]
fn growth_fits() {
    let f = fit_growth(&[1, 3, 6, 10, 15]).unwrap();
    assert_eq!((f.degree, f.leading().clone()), (2, Scalar::new(1.into(), 2.into())));
    assert!(f.lower_bound_holds());
    assert_eq!(f.lower_bound(), *f.leading());
    let c = fit_growth(&[1, 1, 1, 1]).unwrap();
    assert_eq!((c.degree, c.leading().clone()), (0, int(1)));
    assert!(matches!(fit_growth(&[1, 2, 4, 8]), Err(Error::NotPolynomial)));
}

#[test]
fn consequences() {
    let z1 = cyclic(1).unwrap();
    let gens = GeneratorSet::new(vec![x(1, 0, M)]);
    let p = Pattern::from_types([sd(0, M)]);
    assert_eq!(multilinear_consequences(&z1, &gens, &p).unwrap().rank(), 1);
    assert_eq!(multilinear_consequences(&z1, &GeneratorSet::default(), &p).unwrap().rank(), 0);
    let z4 = cyclic(4).unwrap();
    let sq = GeneratorSet::new(vec![x(1, 2, P)]);
    let e = multilinear_consequences(&z4, &sq, &Pattern::from_types([sd(1, M), sd(1, M)])).unwrap();
    assert_eq!(e.rank(), 1);
    let jordan = x(1, 1, M).jordan(&x(2, 1, M)).unwrap().canonical_row().1;
    assert!(e.contains(&pigrowth::scalar::to_int_row(&jordan)));
}

fn tau_set(group: &pigrowth::FiniteGroup, texts: &[&str], a: &GStarAlgebra) -> GeneratorSet {
    GeneratorSet::parse(texts, group, &bind(&[("e", 0), ("g", 1), ("g2", 2)]))
        .unwrap()
        .with_star_closure()
        .with_outside_family(a)
}

#[test]
fn tau_generators_need_an_element_of_order_at_least_five() {
    let texts = ["x1^-_e", "x1^+_g", "x1^+_g2"];
    let z5 = cyclic(5).unwrap();
    let a = catalog::grassmann2(1, 1, &z5, K::Tau).unwrap();
    assert!(verify_tideal(&a, &tau_set(&z5, &texts, &a), 3).unwrap().ok);
    let r = verify_tideal(&a, &tau_set(&z5, &texts[..2], &a), 3).unwrap();
    assert!(!r.ok);
    assert!(r.first_failure().unwrap().pattern.size() <= 2);
    // For |g| = 4 the square g^2 has order 2 and x^-_{g^2} x^-_{g^2} is missed.
    let z4 = cyclic(4).unwrap();
    let b = catalog::grassmann2(1, 1, &z4, K::Tau).unwrap();
    let r = verify_tideal(&b, &tau_set(&z4, &texts, &b), 3).unwrap();
    assert_eq!(r.first_failure().unwrap().pattern, Pattern::from_types([sd(2, M), sd(2, M)]));
}

#[test]
fn zero_product_algebra() {
    let z2 = cyclic(2).unwrap();
    let nil = catalog::radical(&catalog::c_algebra(2, 1, &z2, K::Trivial).unwrap()).unwrap();
    let mut gens = GeneratorSet::parse(&["x1^-_g", "x1_e*x2_e", "x1_e*x2_g", "x1_g*x2_e", "x1_g*x2_g"], &z2, &bind(&[("e", 0), ("g", 1)])).unwrap();
    gens = gens.with_outside_family(&nil);
    assert!(verify_tideal(&nil, &gens, 2).unwrap().ok);
}
