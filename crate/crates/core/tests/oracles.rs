//! Independent recomputations of values the library derives: root sets by
//! explicit formulas, group orders by matrix closure, invariant dimensions
//! by counting, and brute-force searches over whole Weyl groups.

use std::collections::{BTreeSet, HashSet};

use minuscule::exact::{Matrix, Rational, Vector};
use minuscule::invariants::{hilbert_series, reynolds_invariant_dim, HilbertSpec};
use minuscule::roots::{RootSystem, RootSystemLabel};
use minuscule::verify::triangle::seeded_pair;
use minuscule::verify::{triangle_witness, verify_prop1};
use minuscule::weyl::{enumerate_group, stabilizer_generators, stabilizer_simple_roots, DEFAULT_GROUP_CAP};

fn half(k: i64) -> Rational {
    Rational::new(k, 2)
}

fn e(n: usize, i: usize) -> Vector {
    Vector::unit(n, i)
}

fn signed_pairs(n: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let v = e(n, i).scale(&Rational::from_integer(s)).add_scaled(&Rational::from_integer(t), &e(n, j));
                out.push(v);
            }
        }
    }
    out
}

fn expected_roots(label: RootSystemLabel) -> BTreeSet<Vector> {
    let n = label.rank();
    let mut out = BTreeSet::new();
    match label.to_string().as_bytes()[0] {
        b'A' => {
            for i in 0..=n {
                for j in 0..=n {
                    if i != j {
                        out.insert(&e(n + 1, i) - &e(n + 1, j));
                    }
                }
            }
        }
        b'B' | b'C' => {
            out.extend(signed_pairs(n));
            let k = if label.to_string().starts_with('B') { 1 } else { 2 };
            for i in 0..n {
                out.insert(e(n, i).scale(&Rational::from_integer(k)));
                out.insert(e(n, i).scale(&Rational::from_integer(-k)));
            }
        }
        b'D' => out.extend(signed_pairs(n)),
        _ => {
            // E7 in the sum-zero hyperplane of R^8.
            for i in 0..8 {
                for j in 0..8 {
                    if i != j {
                        out.insert(&e(8, i) - &e(8, j));
                    }
                }
            }
            for mask in 0u32..256 {
                if mask.count_ones() == 4 {
                    out.insert(Vector::new((0..8).map(|i| half(if mask >> i & 1 == 1 { 1 } else { -1 })).collect()));
                }
            }
        }
    }
    out
}

#[test]
fn classical_and_e7_roots_match_explicit_formulas() {
    let mut labels = vec![RootSystemLabel::e7()];
    for n in 2..=6 {
        labels.extend([RootSystemLabel::a(n), RootSystemLabel::b(n), RootSystemLabel::c(n)]);
    }
    labels.extend((3..=6).map(RootSystemLabel::d));
    for l in labels {
        let sys = RootSystem::build(l).unwrap();
        let got: BTreeSet<Vector> = sys.roots().iter().cloned().collect();
        assert_eq!(got, expected_roots(l), "{l}");
    }
}

#[test]
fn e6_is_the_part_of_e7_orthogonal_to_its_coweight() {
    let a = Vector::new(
        [3, -1, -1, -1, -1, -1, -1, 3].iter().map(|&k| Rational::new(k, 4)).collect(),
    );
    let want: BTreeSet<Vector> = expected_roots(RootSystemLabel::e7())
        .into_iter()
        .filter(|r| r.dot(&a).is_zero())
        .collect();
    assert_eq!(want.len(), 72);
    let e6 = RootSystem::build(RootSystemLabel::e6()).unwrap();
    let got: BTreeSet<Vector> = e6.roots().iter().cloned().collect();
    assert_eq!(got, want);
    let e7 = RootSystem::build(RootSystemLabel::e7()).unwrap();
    assert_eq!(e7.coweight("a").unwrap().vector, a);
}

fn closure(gens: &[Matrix]) -> usize {
    let n = gens[0].nrows();
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut frontier = vec![Matrix::identity(n)];
    seen.insert(Matrix::identity(n));
    while let Some(m) = frontier.pop() {
        for g in gens {
            let p = g.mul(&m);
            if seen.insert(p.clone()) {
                frontier.push(p);
            }
        }
    }
    seen.len()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn weyl_orders_by_matrix_closure() {
    let cases = [
        (RootSystemLabel::a(2), factorial(3)),
        (RootSystemLabel::a(3), factorial(4)),
        (RootSystemLabel::b(2), 8),
        (RootSystemLabel::b(3), 48),
        (RootSystemLabel::c(3), 48),
        (RootSystemLabel::d(4), 192),
    ];
    for (l, want) in cases {
        let sys = RootSystem::build(l).unwrap();
        let gens: Vec<Matrix> = sys.simple_roots().iter().map(|a| Matrix::reflection(a).unwrap()).collect();
        assert_eq!(closure(&gens), want, "{l}");
        assert_eq!(sys.weyl_order().to_string(), want.to_string(), "{l}");
    }
}

/// Partitions of `m` into at most `k` parts.
fn partitions(m: usize, k: usize) -> u128 {
    let mut p = vec![vec![0u128; k + 1]; m + 1];
    for j in 0..=k {
        p[0][j] = 1;
    }
    for i in 1..=m {
        for j in 1..=k {
            p[i][j] = p[i][j - 1] + if i >= j { p[i - j][j] } else { 0 };
        }
    }
    p[m][k]
}

#[test]
fn hyperoctahedral_invariants_by_counting_monomial_orbits() {
    // Invariants of signed permutations are symmetric in the squares, so
    // degree d has one per partition of d/2 into at most n parts.
    for n in 2..=3 {
        let sys = RootSystem::build(RootSystemLabel::b(n)).unwrap();
        let group = enumerate_group(sys.simple_roots(), n, DEFAULT_GROUP_CAP).unwrap();
        let basis: Vec<Vector> = (0..n).map(|i| e(n, i)).collect();
        let spec = HilbertSpec { reflection_degrees: (1..=n).map(|i| 2 * i).collect(), trivial_directions: 0 };
        let series = hilbert_series(&spec, 8);
        for d in 0..=8 {
            let want = if d % 2 == 0 { partitions(d / 2, n) } else { 0 };
            assert_eq!(series[d], want, "B{n} d={d} Hilbert");
            assert_eq!(reynolds_invariant_dim(&group, &basis, d).unwrap() as u128, want, "B{n} d={d} Reynolds");
        }
    }
}

/// Every element of W(D4) as a matrix.
fn d4_group(sys: &RootSystem) -> Vec<Matrix> {
    let gens: Vec<Matrix> = sys.simple_roots().iter().map(|a| Matrix::reflection(a).unwrap()).collect();
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut out = vec![Matrix::identity(4)];
    seen.insert(Matrix::identity(4));
    let mut i = 0;
    while i < out.len() {
        for g in &gens {
            let p = g.mul(&out[i]);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        i += 1;
    }
    out
}

#[test]
fn d4_witnesses_against_all_192_elements() {
    let sys = RootSystem::build(RootSystemLabel::d(4)).unwrap();
    let group = d4_group(&sys);
    assert_eq!(group.len(), 192);
    let c = sys.coweight("c").unwrap().vector.clone();
    assert_eq!(group.iter().filter(|g| g.apply(&c) == c).count(), 24);
    let stab = stabilizer_simple_roots(&sys, &c).unwrap();
    assert_eq!(enumerate_group(&stab, 4, DEFAULT_GROUP_CAP).unwrap().len(), 24);

    let roots = sys.roots().to_vec();
    for seed in 0..60u64 {
        // a = c, b a root, then a random image.
        let b = roots[(seed as usize * 7) % roots.len()].clone();
        let t = minuscule::verify::Triangle::new(c.clone(), b);
        let g = &group[(seed as usize * 37) % 192];
        let t2 = minuscule::verify::Triangle::new(g.apply(&t.a), g.apply(&t.b));
        let brute: Vec<&Matrix> = group
            .iter()
            .filter(|h| h.apply(&t2.a) == t.a && h.apply(&t2.b) == t.b && h.apply(&t2.c) == t.c)
            .collect();
        assert!(!brute.is_empty());
        let w = triangle_witness(&sys, &t, &t2).unwrap();
        let m = w.matrix(sys.simple_roots(), 4).unwrap();
        assert!(brute.contains(&&m), "seed {seed}");
    }

    // Random pairs from the library generator as well.
    for seed in 0..40u64 {
        let (t, t2) = seeded_pair(&sys, &c, seed).unwrap();
        assert!(group
            .iter()
            .any(|h| h.apply(&t2.a) == t.a && h.apply(&t2.b) == t.b && h.apply(&t2.c) == t.c));
        assert!(triangle_witness(&sys, &t, &t2).is_ok());
    }
}

#[test]
fn witness_search_is_confined_to_the_stabilizer() {
    let sys = RootSystem::build(RootSystemLabel::d(4)).unwrap();
    let c = sys.coweight("c").unwrap().vector.clone();
    let gens = stabilizer_generators(&sys, &c).unwrap();
    for (root, word) in &gens {
        assert_eq!(root.dot(&c), Rational::zero());
        assert_eq!(word.apply(sys.simple_roots(), &c).unwrap(), c);
    }
    let roots: Vec<Vector> = gens.into_iter().map(|(r, _)| r).collect();
    assert_eq!(enumerate_group(&roots, 4, DEFAULT_GROUP_CAP).unwrap().len(), 24);
}

/// Prop 1 by brute force over every group element.
fn prop1_brute(label: RootSystemLabel, coweight: &str, b: &Vector) -> (bool, Vec<usize>) {
    let sys = RootSystem::build(label).unwrap();
    let dim = sys.ambient_dim();
    let group = enumerate_group(sys.simple_roots(), dim, DEFAULT_GROUP_CAP).unwrap();
    let a = sys.coweight(coweight).unwrap().vector.clone();
    let orbit: BTreeSet<Vector> = group.iter().map(|g| g.apply(b)).collect();
    let orbit: Vec<Vector> = orbit.into_iter().collect();
    let stab: Vec<_> = group.iter().filter(|g| g.apply(&a) == a).collect();
    let mut ok = true;
    let mut blocks: Vec<BTreeSet<Vector>> = Vec::new();
    for x in &orbit {
        if !blocks.iter().any(|bl| bl.contains(x)) {
            blocks.push(stab.iter().map(|g| g.apply(x)).collect());
        }
        for y in &orbit {
            let same_block = stab.iter().any(|g| &g.apply(x) == y);
            let same_fiber = group.iter().any(|g| g.apply(&(&a + x)) == &a + y);
            ok &= same_block == same_fiber;
        }
    }
    let mut sizes: Vec<usize> = blocks.iter().map(BTreeSet::len).collect();
    sizes.sort_unstable();
    (ok, sizes)
}

#[test]
fn prop1_agrees_with_brute_force() {
    let sys = RootSystem::build(RootSystemLabel::a(2)).unwrap();
    let a1 = sys.coweight("a1").unwrap().vector.clone();
    let (ok, sizes) = prop1_brute(RootSystemLabel::a(2), "a1", &a1);
    assert!(ok);
    assert_eq!(sizes, [1, 2]);
    let r = verify_prop1(RootSystemLabel::a(2), "a1", "a1", &a1).unwrap();
    assert!(r.passed());
    assert_eq!(r.details["block_sizes"], serde_json::json!([1, 2]));

    for (label, cw) in [(RootSystemLabel::b(3), "b"), (RootSystemLabel::c(3), "c"), (RootSystemLabel::a(3), "a2")] {
        let sys = RootSystem::build(label).unwrap();
        for (name, b) in minuscule::verify::default_prop1_samples(&sys) {
            let (ok, sizes) = prop1_brute(label, cw, &b);
            assert!(ok, "{label} {cw} {name}");
            let r = verify_prop1(label, cw, &name, &b).unwrap();
            assert!(r.passed(), "{label} {cw} {name}");
            assert_eq!(r.details["block_sizes"], serde_json::json!(sizes));
        }
    }
}

#[test]
fn reflection_in_a_half_vector_matches_its_matrix() {
    let alpha = Vector::new(vec![half(-1); 8]);
    let m = Matrix::reflection(&alpha).unwrap();
    // I - 2 a a^T / (a, a), written out.
    let two_over = Rational::from_integer(2) / alpha.dot(&alpha);
    for k in 0..20i64 {
        let v = Vector::new((0..8).map(|i| Rational::new((i * 7 + k * 3) % 11 - 5, 1 + (i + k) % 3)).collect());
        let want = v.add_scaled(&(-(v.dot(&alpha) * &two_over)), &alpha);
        assert_eq!(minuscule::weyl::reflect(&alpha, &v).unwrap(), want);
        assert_eq!(m.apply(&v), want);
    }
}
