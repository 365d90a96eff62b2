//! Worked examples: constructions, orbit data, identities and the
//! generation and fiber checks on small cases.

use std::collections::BTreeSet;

use minuscule::exact::{Matrix, Rational, Vector};
use minuscule::invariants::{
    filtered_subalgebra_dims, hilbert_series, invariant_dim, jacobian_rank, orbit_power_sum, random_points, reynolds,
    GeneratorSet, HilbertSpec,
};
use minuscule::poly::{linear_form, orbit_product, power_sum, Monomial, Polynomial};
use minuscule::roots::{is_minuscule, orthogonal_subsystem, RootSystem, RootSystemLabel};
use minuscule::verify::{
    triangle_witness, verify_identities, verify_orbit_structure, verify_prop1, verify_prop2, Status, Strategy, Triangle,
    VerifyReport,
};
use minuscule::weyl::{
    conjugate, conjugate_with, dominant_rep, enumerate_group, orbit, orbit_partition, reflect, stabilizer_simple_roots,
    DEFAULT_GROUP_CAP, DEFAULT_ORBIT_CAP,
};

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn v(s: &str) -> Vector {
    s.parse().unwrap()
}

fn sys(l: RootSystemLabel) -> RootSystem {
    RootSystem::build(l).unwrap()
}

fn find<'a>(reports: &'a [VerifyReport], id: &str) -> &'a VerifyReport {
    reports.iter().find(|r| r.check_id == id).unwrap_or_else(|| panic!("no report {id}"))
}

#[test]
fn norms() {
    assert_eq!(v("1,0,0,0").q(), r(1, 2));
    assert_eq!(v("1,-2/3,5").dot(&Vector::zeros(3)), Rational::zero());
    let a = v("3/4,-1/4,-1/4,-1/4,-1/4,-1/4,-1/4,3/4");
    assert_eq!(a.dot(&a), r(3, 2));
}

#[test]
fn constructions() {
    let e7 = sys(RootSystemLabel::e7());
    assert_eq!(e7.roots().len(), 126);
    assert_eq!(e7.minuscule_coweights().len(), 1);
    assert_eq!(e7.minuscule_coweights()[0].vector.q(), r(3, 4));

    for n in 1..=6usize {
        let s = sys(RootSystemLabel::a(n));
        for (i, cw) in s.minuscule_coweights().iter().enumerate() {
            let (rr, ss) = (i as i64 + 1, (n - i) as i64);
            assert_eq!(cw.name, format!("a{rr}"));
            assert_eq!(cw.vector.q(), r(rr * ss, 2 * (n as i64 + 1)));
        }
    }
    let a3 = sys(RootSystemLabel::a(3));
    assert_eq!(a3.coweight("a2").unwrap().vector.q(), r(1, 2));

    let d4 = sys(RootSystemLabel::d(4));
    let got: BTreeSet<Vector> = d4.minuscule_coweights().iter().map(|c| c.vector.clone()).collect();
    let want: BTreeSet<Vector> = [v("1,0,0,0"), v("1/2,1/2,1/2,-1/2"), v("1/2,1/2,1/2,1/2")].into();
    assert_eq!(got, want);
    assert!(d4.minuscule_coweights().iter().all(|c| c.vector.q() == r(1, 2)));
}

#[test]
fn minuscule_recognition() {
    let a3 = sys(RootSystemLabel::a(3));
    let a1 = a3.coweight("a1").unwrap().vector.clone();
    assert_eq!(is_minuscule(&a3, &a1.scale(&r(2, 1))), (true, Some(a1)));

    let d4 = sys(RootSystemLabel::d(4));
    let sum = &d4.coweight("b").unwrap().vector + &d4.coweight("c").unwrap().vector;
    assert!(!is_minuscule(&d4, &sum).0);
    assert_eq!(is_minuscule(&d4, &Vector::zeros(4)), (false, None));

    let e7 = sys(RootSystemLabel::e7());
    let a = e7.coweight("a").unwrap().vector.clone();
    assert_eq!(is_minuscule(&e7, &a), (true, Some(a)));
}

#[test]
fn orthogonal_subsystems() {
    let e7 = sys(RootSystemLabel::e7());
    let sub = orthogonal_subsystem(&e7, &e7.coweight("a").unwrap().vector);
    assert_eq!(sub.roots.len(), 72);
    assert_eq!(sub.simple_roots.len(), 6);

    let e6 = sys(RootSystemLabel::e6());
    let sub = orthogonal_subsystem(&e6, &e6.coweight("b+").unwrap().vector);
    assert_eq!(sub.roots.len(), 40);
    assert_eq!(sub.simple_roots.len(), 5);

    let a3 = sys(RootSystemLabel::a(3));
    assert!(orthogonal_subsystem(&a3, &v("3,1,-1,-3")).roots.is_empty());
}

#[test]
fn reflections_and_dominant_representatives() {
    let alpha = v("1,-1,0,0");
    assert_eq!(reflect(&alpha, &alpha).unwrap(), -&alpha);
    assert_eq!(reflect(&alpha, &v("1,0,0,0")).unwrap(), v("0,1,0,0"));

    let b3 = sys(RootSystemLabel::b(3));
    let (d, w) = dominant_rep(&b3, &v("1,1/2,0")).unwrap();
    assert_eq!((d, w.len()), (v("1,1/2,0"), 0));
    assert_eq!(dominant_rep(&b3, &v("-1,0,0")).unwrap().0, v("1,0,0"));

    let e7 = sys(RootSystemLabel::e7());
    let a = e7.coweight("a").unwrap().vector.clone();
    assert_eq!(dominant_rep(&e7, &-&a).unwrap().0, a);
}

#[test]
fn orbits_and_stabilizers() {
    let e7 = sys(RootSystemLabel::e7());
    let a = e7.coweight("a").unwrap().vector.clone();
    let big_a = orbit(e7.simple_roots(), &a, DEFAULT_ORBIT_CAP).unwrap();
    assert_eq!(big_a.len(), 56);

    let e6 = sys(RootSystemLabel::e6());
    let b = e6.coweight("b+").unwrap().vector.clone();
    let big_b = orbit(e6.simple_roots(), &b, DEFAULT_ORBIT_CAP).unwrap();
    assert_eq!(big_b.len(), 27);

    for n in 2..=6 {
        let s = sys(RootSystemLabel::b(n));
        assert_eq!(orbit(s.simple_roots(), &s.coweight("b").unwrap().vector, DEFAULT_ORBIT_CAP).unwrap().len(), 2 * n);
    }

    let a3 = sys(RootSystemLabel::a(3));
    let stab: BTreeSet<Vector> =
        stabilizer_simple_roots(&a3, &a3.coweight("a2").unwrap().vector).unwrap().into_iter().collect();
    assert_eq!(stab, [a3.simple_roots()[0].clone(), a3.simple_roots()[2].clone()].into());
    assert_eq!(enumerate_group(&stab.into_iter().collect::<Vec<_>>(), 4, DEFAULT_GROUP_CAP).unwrap().len(), 4);

    let r6: BTreeSet<Vector> = stabilizer_simple_roots(&e7, &a).unwrap().into_iter().collect();
    let want: BTreeSet<Vector> = e7.simple_roots()[1..].iter().cloned().collect();
    assert_eq!(r6, want);
    assert!(stabilizer_simple_roots(&a3, &v("3,1,-1,-3")).unwrap().is_empty());

    let a2 = sys(RootSystemLabel::a(2));
    assert_eq!(enumerate_group(a2.simple_roots(), 3, DEFAULT_GROUP_CAP).unwrap().len(), 6);
    let w5 = stabilizer_simple_roots(&e6, &b).unwrap();
    assert_eq!(enumerate_group(&w5, 8, DEFAULT_GROUP_CAP).unwrap().len(), 1920);
    let d4 = sys(RootSystemLabel::d(4));
    assert_eq!(enumerate_group(d4.simple_roots(), 4, DEFAULT_GROUP_CAP).unwrap().len(), 192);

    let r6: Vec<Vector> = r6.into_iter().collect();
    let mut sizes = orbit_partition(&r6, &big_a.to_vec()).unwrap().sizes();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 1, 27, 27]);
    let mut sizes = orbit_partition(&w5, &big_b.to_vec()).unwrap().sizes();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 10, 16]);
    assert_eq!(orbit_partition(&w5, &[b.clone()]).unwrap().sizes(), [1]);
}

#[test]
fn conjugacy() {
    let d4 = sys(RootSystemLabel::d(4));
    let c = d4.coweight("c").unwrap().vector.clone();
    let (flag, w) = conjugate(&d4, &c, &c).unwrap();
    assert!(flag);
    assert_eq!(w.unwrap().apply(d4.simple_roots(), &c).unwrap(), c);

    let cp = d4.coweight("c-prime").unwrap().vector.clone();
    assert!(!conjugate(&d4, &c, &cp).unwrap().0);
    let b4 = sys(RootSystemLabel::b(4));
    let (flag, w) = conjugate_with(b4.simple_roots(), &c, &cp, DEFAULT_ORBIT_CAP).unwrap();
    assert!(flag);
    assert_eq!(w.unwrap().apply(b4.simple_roots(), &cp).unwrap(), c);

    let e7 = sys(RootSystemLabel::e7());
    let a = e7.coweight("a").unwrap().vector.clone();
    let (flag, w) = conjugate(&e7, &a, &-&a).unwrap();
    assert!(flag);
    assert_eq!(w.unwrap().apply(e7.simple_roots(), &-&a).unwrap(), a);
}

#[test]
fn linear_forms_and_power_sums() {
    assert!(linear_form(&Vector::zeros(3)).is_zero());
    assert_eq!(linear_form(&v("1,0,0")), Polynomial::var(3, 0));
    for n in 1..=5usize {
        let s = sys(RootSystemLabel::a(n));
        for (i, cw) in s.minuscule_coweights().iter().enumerate() {
            let (rr, ss) = (i as i64 + 1, (n - i) as i64);
            assert_eq!(linear_form(&cw.vector).eval(&cw.vector), r(rr * ss, n as i64 + 1));
        }
    }

    let e7 = sys(RootSystemLabel::e7());
    let big_a = orbit(e7.simple_roots(), &e7.coweight("a").unwrap().vector, DEFAULT_ORBIT_CAP).unwrap();
    assert_eq!(orbit_power_sum(&big_a, 0).unwrap().constant_term(), r(56, 1));
    for i in [1, 3, 5] {
        assert!(orbit_power_sum(&big_a, i).unwrap().is_zero());
    }

    let b2 = sys(RootSystemLabel::b(2));
    let ob = orbit(b2.simple_roots(), &b2.coweight("b").unwrap().vector, DEFAULT_ORBIT_CAP).unwrap();
    let sq = |i| &Polynomial::var(2, i) * &Polynomial::var(2, i);
    assert_eq!(orbit_power_sum(&ob, 2).unwrap(), (&sq(0) + &sq(1)).scale(&r(2, 1)));

    let units: Vec<Vector> = (0..4).map(|i| Vector::unit(4, i)).collect();
    let x1234 = Polynomial::from_terms(4, [(Monomial::new(&[1, 1, 1, 1]), Rational::one())]).unwrap();
    assert_eq!(orbit_product(&units, 4).unwrap(), x1234);
    let b_prime: Vec<Vector> = units[1..].to_vec();
    let x234 = Polynomial::from_terms(4, [(Monomial::new(&[0, 1, 1, 1]), Rational::one())]).unwrap();
    assert_eq!(orbit_product(&b_prime, 4).unwrap(), x234);

    let w = v("2,-1/3,1");
    assert_eq!(power_sum(&[w.clone()], 1, 3).unwrap(), linear_form(&w));
}

#[test]
fn translations() {
    let f = &Polynomial::var(3, 0) * &Polynomial::var(3, 2);
    assert_eq!(f.translate(&Vector::zeros(3)), f);
    let w = v("1,-2,1/2");
    let a = v("3,1/3,-1");
    let want = &linear_form(&w) + &Polynomial::constant(3, w.dot(&a));
    assert_eq!(linear_form(&w).translate(&a), want);

    for n in 1..=5usize {
        let s = sys(RootSystemLabel::a(n));
        let r2 = power_sum(s.roots(), 2, n + 1).unwrap();
        for (i, cw) in s.minuscule_coweights().iter().enumerate() {
            let (rr, ss) = (i as i64 + 1, (n - i) as i64);
            let lhs = &r2.translate(&cw.vector) - &r2;
            let rhs = &linear_form(&cw.vector).scale(&r(4 * (n as i64 + 1), 1)) + &Polynomial::constant(n + 1, r(2 * rr * ss, 1));
            assert_eq!(lhs, rhs, "A{n} r={rr}");
        }
    }
}

#[test]
fn reynolds_operator() {
    let a2 = sys(RootSystemLabel::a(2));
    let group = enumerate_group(a2.simple_roots(), 3, DEFAULT_GROUP_CAP).unwrap();
    let x1 = Polynomial::var(3, 0);
    let avg = reynolds(&group, &(&x1 * &x1)).unwrap();
    for alpha in a2.simple_roots() {
        assert_eq!(avg.compose_linear(&Matrix::reflection(alpha).unwrap()).unwrap(), avg);
    }
    let p2 = power_sum(&(0..3).map(|i| Vector::unit(3, i)).collect::<Vec<_>>(), 2, 3).unwrap();
    assert_eq!(avg, p2.scale(&r(1, 3)));
    assert_eq!(reynolds(&group, &p2).unwrap(), p2);
    let trivial = enumerate_group(&[], 3, DEFAULT_GROUP_CAP).unwrap();
    assert_eq!(reynolds(&trivial, &x1).unwrap(), x1);
}

#[test]
fn hilbert_dimensions() {
    let quad = HilbertSpec { reflection_degrees: vec![2], trivial_directions: 0 };
    assert_eq!(invariant_dim(&quad, 4), 1);
    let w6 = HilbertSpec { reflection_degrees: vec![2, 5, 6, 8, 9, 12], trivial_directions: 1 };
    assert_eq!(invariant_dim(&w6, 2), 2);
    assert_eq!(hilbert_series(&w6, 3), [1, 1, 2, 2]);

    let b3 = sys(RootSystemLabel::b(3));
    let group = enumerate_group(b3.simple_roots(), 3, DEFAULT_GROUP_CAP).unwrap();
    let spec = HilbertSpec { reflection_degrees: vec![2, 4, 6], trivial_directions: 0 };
    let basis: Vec<Vector> = (0..3).map(|i| Vector::unit(3, i)).collect();
    for d in [2, 4, 6] {
        let k = minuscule::invariants::reynolds_invariant_dim(&group, &basis, d).unwrap();
        assert_eq!(k as u128, invariant_dim(&spec, d));
    }
}

#[test]
fn filtered_dimensions() {
    let q = power_sum(&[Vector::unit(2, 0), Vector::unit(2, 1)], 2, 2).unwrap();
    let mut g = GeneratorSet::new();
    g.push("q", q);
    assert_eq!(filtered_subalgebra_dims(&g, 5, None).unwrap(), [1, 1, 2, 2, 3, 3]);

    // A2 with a = a1: S^W alone misses the linear invariant of W_a.
    let a2 = sys(RootSystemLabel::a(2));
    let a = a2.coweight("a1").unwrap().vector.clone();
    let units: Vec<Vector> = (0..3).map(|i| Vector::unit(3, i)).collect();
    let basis = a2.simple_roots().to_vec();
    let m = Matrix::new(basis.clone()).unwrap().transpose();
    let mut without = GeneratorSet::new();
    let mut with = GeneratorSet::new();
    for k in [2, 3] {
        let p = power_sum(&units, k, 3).unwrap();
        without.push(format!("a{k}"), p.compose_linear(&m).unwrap());
        with.push(format!("a{k}"), p.compose_linear(&m).unwrap());
        with.push(format!("tau a{k}"), p.translate(&a).compose_linear(&m).unwrap());
    }
    let stab = stabilizer_simple_roots(&a2, &a).unwrap();
    let spec = HilbertSpec::for_reflection_group(&stab, 2, DEFAULT_GROUP_CAP).unwrap();
    let hilbert = minuscule::invariants::cumulative_dims(&spec, 6);
    assert_eq!(filtered_subalgebra_dims(&with, 6, None).unwrap(), hilbert);
    let short = filtered_subalgebra_dims(&without, 6, None).unwrap();
    assert_eq!((short[1], hilbert[1]), (1, 2));
}

#[test]
fn jacobian_ranks() {
    let x = |i| Polynomial::var(2, i);
    let pts = random_points(2, 3, 1);
    assert_eq!(jacobian_rank(&[x(0), x(1)], &pts), 2);
    let q = &(&x(0) * &x(0)) + &(&x(1) * &x(1));
    assert_eq!(jacobian_rank(&[q.clone(), &q * &q], &pts), 1);

    let a3 = sys(RootSystemLabel::a(3));
    let units: Vec<Vector> = (0..4).map(|i| Vector::unit(4, i)).collect();
    let m = Matrix::new(a3.simple_roots().to_vec()).unwrap().transpose();
    let gens: Vec<Polynomial> = (2..=4).map(|k| power_sum(&units, k, 4).unwrap().compose_linear(&m).unwrap()).collect();
    assert_eq!(jacobian_rank(&gens, &random_points(3, 4, 2)), 3);
}

#[test]
fn identity_examples() {
    let a3 = verify_identities(RootSystemLabel::a(3));
    assert_eq!(find(&a3, "A3.r2.identity.translated_root_sum").status, Status::Pass);
    let b2 = verify_identities(RootSystemLabel::b(2));
    assert!(b2.iter().all(|r| r.passed()), "{b2:?}");
}

#[test]
fn e7_root_sum_coefficients_from_first_principles() {
    // (tau - 1) sum (alpha, x)^2 = 2 (sum (alpha, a) alpha, x) + sum (alpha, a)^2.
    let e7 = sys(RootSystemLabel::e7());
    let a = e7.coweight("a").unwrap().vector.clone();
    let mut s = Vector::zeros(8);
    let mut mu = Rational::zero();
    for alpha in e7.roots() {
        s = s.add_scaled(&alpha.dot(&a), alpha);
        mu += &(alpha.dot(&a) * alpha.dot(&a));
    }
    // s is a multiple of a.
    let k = s.dot(&a) / a.dot(&a);
    assert_eq!(s, a.scale(&k));
    let lambda = k * r(2, 1);
    assert_eq!((lambda.clone(), mu.clone()), (r(72, 1), r(54, 1)));

    let reports = verify_identities(RootSystemLabel::e7());
    let printed = find(&reports, "E7.identity.translated_root_sum");
    assert_eq!(printed.status, Status::Fail);
    assert_eq!(printed.details["computed_linear_coefficient"], serde_json::json!(lambda.to_string()));
    assert_eq!(printed.details["computed_constant"], serde_json::json!(mu.to_string()));
    assert_eq!(find(&reports, "E7.identity.translated_root_sum_affine").status, Status::Pass);
}

#[test]
fn e6_root_sum_coefficients_from_first_principles() {
    let e6 = sys(RootSystemLabel::e6());
    let reports = verify_identities(RootSystemLabel::e6());
    for (name, tag) in [("b+", "plus"), ("b-", "minus")] {
        let b = e6.coweight(name).unwrap().vector.clone();
        let mut s = Vector::zeros(8);
        let mut mu = Rational::zero();
        for alpha in e6.roots() {
            s = s.add_scaled(&alpha.dot(&b), alpha);
            mu += &(alpha.dot(&b) * alpha.dot(&b));
        }
        let k = s.dot(&b) / b.dot(&b);
        assert_eq!(s, b.scale(&k));
        let lambda = k * r(2, 1);
        assert_eq!((lambda.clone(), mu.clone()), (r(48, 1), r(32, 1)));
        let printed = find(&reports, &format!("E6.{tag}.identity.translated_root_sum"));
        assert_eq!(printed.status, Status::Fail);
        assert_eq!(printed.details["computed_linear_coefficient"], serde_json::json!(lambda.to_string()));
        assert_eq!(printed.details["computed_constant"], serde_json::json!(mu.to_string()));
    }
}

#[test]
fn orbit_decomposition_examples() {
    let e7 = verify_orbit_structure(RootSystemLabel::e7());
    assert!(e7.iter().all(|r| r.passed()));
    let e6 = verify_orbit_structure(RootSystemLabel::e6());
    assert!(e6.iter().all(|r| r.passed()));
    let a4 = verify_orbit_structure(RootSystemLabel::a(4));
    assert!(a4.iter().all(|r| r.passed()));

    // A4, r = 2: the two blocks of the coweight orbit and their levels.
    let s = sys(RootSystemLabel::a(4));
    let a = s.coweight("a2").unwrap().vector.clone();
    let b_prime: Vec<Vector> = (0..5).map(|i| Vector::unit(5, i)).filter(|e| e.dot(&a) > Rational::zero()).collect();
    let c_prime: Vec<Vector> = (0..5).map(|i| Vector::unit(5, i)).filter(|e| e.dot(&a) < Rational::zero()).collect();
    assert_eq!((b_prime.len(), c_prime.len()), (2, 3));
    assert!(b_prime.iter().all(|e| e.dot(&a) == r(3, 5)));
    assert!(c_prime.iter().all(|e| e.dot(&a) == r(-2, 5)));
}

#[test]
fn generation_examples() {
    let r = verify_prop2(RootSystemLabel::a(3), "a1", 8, Strategy::Filtered, false).unwrap();
    assert_eq!(r.status, Status::Pass);
    let r = verify_prop2(RootSystemLabel::d(4), "c", 8, Strategy::Filtered, false).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.details["stabilizer_degrees"], serde_json::json!([2, 3, 4]));
    assert_eq!(r.details["trivial_directions"], serde_json::json!(1));
    assert!(verify_prop2(RootSystemLabel::a(3), "a4", 8, Strategy::Filtered, false).is_err());
    assert!(verify_prop2(RootSystemLabel::a(3), "a1", 2, Strategy::Filtered, false).is_err());
}

#[test]
fn e7_chevalley_certificate() {
    let r = verify_prop2(RootSystemLabel::e7(), "a", 12, Strategy::Chevalley, false).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.details["degrees"], serde_json::json!([1, 2, 5, 6, 8, 9, 12]));
    assert_eq!(r.details["degree_product"], serde_json::json!("51840"));
}

#[test]
fn fiber_examples() {
    let e7 = sys(RootSystemLabel::e7());
    let a = e7.coweight("a").unwrap().vector.clone();
    let rep = verify_prop1(RootSystemLabel::e7(), "a", "a", &a).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.details["orbit_size"], 56);
    assert_eq!(rep.details["fiber_sizes"], serde_json::json!([1, 1, 27, 27]));

    let rep = verify_prop1(RootSystemLabel::a(2), "a1", "zero", &Vector::zeros(3)).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.details["fiber_sizes"], serde_json::json!([1]));
}

#[test]
fn triangle_examples() {
    let a3 = sys(RootSystemLabel::a(3));
    let t = Triangle::new(a3.coweight("a2").unwrap().vector.clone(), v("1,-1,1/2,-1/2"));
    let w = triangle_witness(&a3, &t, &t).unwrap();
    assert_eq!(t.apply(&a3, &w).unwrap(), t);

    // Not minuscule.
    let bad = Triangle::new(v("2,1,-1,-2"), v("0,0,0,0"));
    assert!(matches!(triangle_witness(&a3, &bad, &bad), Err(minuscule::error::Error::Unsupported(_))));
    // Minuscule but sides not conjugate.
    let t2 = Triangle::new(a3.coweight("a2").unwrap().vector.clone(), v("2,-2,0,0"));
    assert!(matches!(triangle_witness(&a3, &t, &t2), Err(minuscule::error::Error::NoWitness(_))));
}
