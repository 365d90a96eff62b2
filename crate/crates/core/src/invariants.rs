//! Invariant theory helpers: Reynolds averaging, Hilbert series of
//! reflection groups, filtered spans of subalgebras and Jacobian ranks.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Vector};
use crate::poly::{Monomial, Polynomial};
use crate::weyl::{root_closure, GroupElement};

pub use crate::poly::{orbit_product, power_sum, weighted_power_sum};

/// `sum_{x in orbit} (x, .)^i`.
pub fn orbit_power_sum(orbit: &crate::weyl::Orbit, i: usize) -> Result<Polynomial> {
    power_sum(&orbit.to_vec(), i, orbit.base().dim())
}

/// `f(x + a)`.
pub fn translate(f: &Polynomial, a: &Vector) -> Polynomial {
    f.translate(a)
}

/// Average of `x -> f(g x)` over the group.
pub fn reynolds(group: &[GroupElement], f: &Polynomial) -> Result<Polynomial> {
    if group.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let mut acc = Polynomial::zero(f.nvars());
    for g in group {
        acc.add_scaled(&Rational::one(), &f.compose_linear(&g.matrix)?);
    }
    Ok(acc.scale(&Rational::new(1, group.len() as i64)))
}

/// `f(s_alpha x) = f(x)` for every reflection.
pub fn is_invariant(f: &Polynomial, reflections: &[Vector]) -> Result<bool> {
    for alpha in reflections {
        if &f.compose_linear(&Matrix::reflection(alpha)?)? != f {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSpec {
    pub reflection_degrees: Vec<usize>,
    pub trivial_directions: usize,
}

impl HilbertSpec {
    pub fn degree_product(&self) -> u128 {
        self.reflection_degrees.iter().map(|&d| d as u128).product()
    }

    /// Reflection group generated by `generators`, acting on a space of
    /// dimension `space_dim` that contains them.
    pub fn for_reflection_group(generators: &[Vector], space_dim: usize, cap: usize) -> Result<Self> {
        let degrees = reflection_degrees(generators, cap)?;
        Ok(HilbertSpec {
            trivial_directions: space_dim - degrees.len(),
            reflection_degrees: degrees,
        })
    }
}

/// Coefficients `0..=d_max` of `1 / ((1 - t)^k prod (1 - t^{d_i}))`.
pub fn hilbert_series(spec: &HilbertSpec, d_max: usize) -> Vec<u128> {
    let mut c = vec![0u128; d_max + 1];
    c[0] = 1;
    let factors = std::iter::repeat_n(1usize, spec.trivial_directions).chain(spec.reflection_degrees.iter().copied());
    for d in factors {
        for i in d..=d_max {
            c[i] += c[i - d];
        }
    }
    c
}

pub fn invariant_dim(spec: &HilbertSpec, d: usize) -> u128 {
    hilbert_series(spec, d)[d]
}

/// Running sums of [`hilbert_series`]: the dimensions of invariants of degree `<= d`.
pub fn cumulative_dims(spec: &HilbertSpec, d_max: usize) -> Vec<u128> {
    hilbert_series(spec, d_max)
        .into_iter()
        .scan(0u128, |acc, x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Degrees of the reflection group generated by `generators`, read off the
/// height distribution of its positive roots: the number of exponents at
/// least `m` equals the number of positive roots of height `m`.
pub fn reflection_degrees(generators: &[Vector], cap: usize) -> Result<Vec<usize>> {
    if generators.is_empty() {
        return Ok(Vec::new());
    }
    let simple = simple_system(generators, cap)?;
    let k = simple.len();
    let gram = Matrix::new(simple.iter().map(|a| simple.iter().map(|b| a.dot(b)).collect()).collect())?;
    let ginv = gram
        .inverse()
        .ok_or_else(|| Error::Construction("dependent simple roots".into()))?;
    let mut by_height: BTreeMap<usize, usize> = BTreeMap::new();
    for r in root_closure(generators, cap)? {
        let pairings: Vec<Rational> = simple.iter().map(|a| a.dot(&r)).collect();
        let coeffs: Vec<Rational> = (0..k)
            .map(|i| pairings.iter().enumerate().map(|(j, p)| ginv.get(i, j) * p).sum())
            .collect();
        if coeffs.iter().all(|c| !c.is_negative()) {
            let h: Rational = coeffs.iter().sum();
            let h = h.to_i64().ok_or_else(|| Error::Construction("non-integral height".into()))?;
            *by_height.entry(h as usize).or_default() += 1;
        }
    }
    let mut exps = Vec::new();
    let mut prev = k;
    for m in 1.. {
        let count = by_height.get(&m).copied().unwrap_or(0);
        for _ in count..prev {
            exps.push(m - 1);
        }
        prev = count;
        if count == 0 {
            break;
        }
    }
    let mut degrees: Vec<usize> = exps.into_iter().map(|e| e + 1).collect();
    degrees.sort_unstable();
    Ok(degrees)
}

/// A simple system for the root subsystem generated by `generators`,
/// positive with respect to a generic linear functional.
pub fn simple_system(generators: &[Vector], cap: usize) -> Result<Vec<Vector>> {
    let roots = root_closure(generators, cap)?;
    let dim = generators[0].dim();
    let mut functional = None;
    for base in 3i64..200 {
        let f = Vector::from_ints(&(0..dim).map(|k| base.pow(k as u32) + k as i64).collect::<Vec<_>>());
        if roots.iter().all(|r| !r.dot(&f).is_zero()) {
            functional = Some(f);
            break;
        }
    }
    let f = functional.ok_or_else(|| Error::Resource("no generic functional".into()))?;
    let positive: Vec<&Vector> = roots.iter().filter(|r| r.dot(&f).is_positive()).collect();
    let set: std::collections::HashSet<&Vector> = positive.iter().copied().collect();
    Ok(positive
        .iter()
        .filter(|b| !positive.iter().any(|g| set.contains(&(**b - *g))))
        .map(|b| (*b).clone())
        .collect())
}

/// Rows in echelon form keyed by their greatest monomial.
///
/// Because the monomial order is graded, the number of rows of degree at
/// most `d` is the dimension of the span intersected with polynomials of
/// degree at most `d`.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<Monomial, Polynomial>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduce `f` against the rows; zero iff `f` is in the span.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let mut g = f.clone();
        let mut below: Option<Monomial> = None;
        loop {
            let next = match below {
                None => g.terms().iter().next_back(),
                Some(b) => g.terms().range(..b).next_back(),
            };
            let Some((m, c)) = next.map(|(m, c)| (*m, c.clone())) else {
                return g;
            };
            if let Some(row) = self.rows.get(&m) {
                let lead = row.leading().expect("nonzero row").1.clone();
                g.add_scaled(&-(c / lead), row);
            }
            below = Some(m);
        }
    }

    /// Insert `f`, returning the new row if it enlarged the span.
    pub fn insert(&mut self, f: &Polynomial) -> Option<Polynomial> {
        let r = self.reduce(f);
        let lead = *r.leading()?.0;
        let c = r.leading().unwrap().1.recip();
        let r = r.scale(&c);
        self.rows.insert(lead, r.clone());
        Some(r)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Polynomial> {
        self.rows.values()
    }

    /// `dims[d]` = number of rows of degree `<= d`.
    pub fn filtered_dims(&self, d_max: usize) -> Vec<u128> {
        let mut counts = vec![0u128; d_max + 1];
        for m in self.rows.keys() {
            if m.degree() <= d_max {
                counts[m.degree()] += 1;
            }
        }
        counts
            .into_iter()
            .scan(0u128, |acc, x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }
}

#[derive(Clone, Debug, Default)]
pub struct GeneratorSet {
    pub gens: Vec<Polynomial>,
    pub provenance: Vec<String>,
}

impl GeneratorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, label: impl Into<String>, g: Polynomial) {
        assert!(!g.is_zero(), "generators are nonzero");
        self.provenance.push(label.into());
        self.gens.push(g);
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Resource ceiling on the number of monomials of degree `<= D`.
pub const FILTERED_MONOMIAL_BUDGET: u128 = 2_000_000;

/// Lower bounds on `dim(S ∩ S_{<=d})`, `d = 0..=D`, for the algebra `S`
/// generated by `G`.
///
/// The span starts from `1` and the generators of degree `<= D`, and is
/// closed under products of spanning rows whose degrees sum to at most `D`
/// until nothing new appears. Reaching `target` (when given) stops early.
pub fn filtered_subalgebra_dims(g: &GeneratorSet, d_max: usize, target: Option<&[u128]>) -> Result<Vec<u128>> {
    let nvars = g.gens.first().map_or(0, Polynomial::nvars);
    let mut budget: u128 = 1;
    for k in 1..=nvars as u128 {
        budget = budget * (d_max as u128 + k) / k;
    }
    if budget > FILTERED_MONOMIAL_BUDGET {
        return Err(Error::Resource(format!(
            "{budget} monomials of degree <= {d_max} in {nvars} variables exceeds {FILTERED_MONOMIAL_BUDGET}"
        )));
    }
    let mut basis = EchelonBasis::new();
    let mut fresh = Vec::new();
    let done = |b: &EchelonBasis| target.is_some_and(|t| b.filtered_dims(d_max).as_slice() == t);
    if let Some(r) = basis.insert(&Polynomial::one(nvars)) {
        fresh.push(r);
    }
    for f in &g.gens {
        if f.degree() <= d_max {
            if let Some(r) = basis.insert(f) {
                fresh.push(r);
            }
        }
    }
    while !fresh.is_empty() && !done(&basis) {
        let all: Vec<Polynomial> = basis.rows().cloned().collect();
        let mut next = Vec::new();
        for f in &fresh {
            for h in &all {
                if f.degree() + h.degree() <= d_max && f.degree() > 0 && h.degree() > 0 {
                    if let Some(r) = basis.insert(&(f * h)) {
                        next.push(r);
                    }
                }
            }
        }
        fresh = next;
    }
    Ok(basis.filtered_dims(d_max))
}

/// Greatest rank of the Jacobian matrix over the sample points.
pub fn jacobian_rank(polys: &[Polynomial], points: &[Vector]) -> usize {
    let Some(n) = polys.first().map(Polynomial::nvars) else {
        return 0;
    };
    let partials: Vec<Vec<Polynomial>> = polys.iter().map(|p| (0..n).map(|i| p.partial(i)).collect()).collect();
    points
        .iter()
        .map(|pt| {
            let rows = partials
                .iter()
                .map(|row| row.iter().map(|d| d.eval(pt)).collect::<Vector>())
                .collect();
            Matrix::new(rows).expect("rectangular jacobian").rank()
        })
        .max()
        .unwrap_or(0)
}

/// Reproducible random points with small integer coordinates.
pub fn random_points(dim: usize, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let c: Vec<i64> = (0..dim).map(|_| rng.gen_range(-7..=7)).collect();
            Vector::from_ints(&c)
        })
        .collect()
}

/// Jacobian rank with up to three rounds of fresh random points, stopping
/// once `want` is reached.
pub fn jacobian_rank_sampled(polys: &[Polynomial], want: usize, seed: u64) -> usize {
    let n = polys.first().map_or(0, Polynomial::nvars);
    let mut best = 0;
    for round in 0..3 {
        best = best.max(jacobian_rank(polys, &random_points(n, 2, seed + round)));
        if best >= want {
            break;
        }
    }
    best
}

/// `dim S(V)^G_d` by brute force: Reynolds images of every monomial of
/// degree `d` in the ambient variables, restricted to `V = span(basis)`.
pub fn reynolds_invariant_dim(group: &[GroupElement], basis: &[Vector], d: usize) -> Result<usize> {
    let ambient = basis.first().map_or(0, Vector::dim);
    let restrict = Matrix::new(basis.to_vec())?.transpose();
    let mut span = EchelonBasis::new();
    for m in crate::poly::monomials_of_degree(ambient, d) {
        let f = Polynomial::from_terms(ambient, [(m, Rational::one())])?;
        let avg = reynolds(group, &f)?.compose_linear(&restrict)?;
        span.insert(&avg);
    }
    Ok(span.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{RootSystem, RootSystemLabel};
    use crate::weyl::{enumerate_group, DEFAULT_GROUP_CAP, DEFAULT_ORBIT_CAP};

    #[test]
    fn hilbert_examples() {
        let q = HilbertSpec {
            reflection_degrees: vec![2],
            trivial_directions: 0,
        };
        assert_eq!(invariant_dim(&q, 4), 1);
        assert_eq!(invariant_dim(&q, 3), 0);
        let w6 = HilbertSpec {
            reflection_degrees: vec![2, 5, 6, 8, 9, 12],
            trivial_directions: 1,
        };
        assert_eq!(invariant_dim(&w6, 2), 2);
        assert_eq!(w6.degree_product(), 51840);
    }

    #[test]
    fn degrees_from_heights() {
        let cases = [
            (RootSystemLabel::a(3), vec![2, 3, 4]),
            (RootSystemLabel::b(3), vec![2, 4, 6]),
            (RootSystemLabel::d(4), vec![2, 4, 4, 6]),
            (RootSystemLabel::e6(), vec![2, 5, 6, 8, 9, 12]),
            (RootSystemLabel::e7(), vec![2, 6, 8, 10, 12, 14, 18]),
        ];
        for (label, want) in cases {
            let sys = RootSystem::build(label).unwrap();
            assert_eq!(reflection_degrees(sys.simple_roots(), DEFAULT_ORBIT_CAP).unwrap(), want, "{label}");
        }
        // reducible: A1 x A1 inside A3
        let a3 = RootSystem::build(RootSystemLabel::a(3)).unwrap();
        let gens = [a3.simple_roots()[0].clone(), a3.simple_roots()[2].clone()];
        assert_eq!(reflection_degrees(&gens, DEFAULT_ORBIT_CAP).unwrap(), vec![2, 2]);
    }

    #[test]
    fn reynolds_examples() {
        let a2 = RootSystem::build(RootSystemLabel::a(2)).unwrap();
        let g = enumerate_group(a2.simple_roots(), 3, DEFAULT_GROUP_CAP).unwrap();
        let f = Polynomial::var(3, 0).pow(2);
        let r = reynolds(&g, &f).unwrap();
        assert!(is_invariant(&r, a2.simple_roots()).unwrap());
        assert_eq!(reynolds(&g, &r).unwrap(), r);
        let trivial = enumerate_group(&[], 3, 10).unwrap();
        assert_eq!(reynolds(&trivial, &f).unwrap(), f);
        assert!(matches!(reynolds(&[], &f), Err(Error::EmptyGroup)));
    }

    #[test]
    fn reynolds_matches_hilbert_b3() {
        let b3 = RootSystem::build(RootSystemLabel::b(3)).unwrap();
        let g = enumerate_group(b3.simple_roots(), 3, DEFAULT_GROUP_CAP).unwrap();
        let spec = HilbertSpec::for_reflection_group(b3.simple_roots(), 3, DEFAULT_ORBIT_CAP).unwrap();
        let basis: Vec<Vector> = (0..3).map(|i| Vector::unit(3, i)).collect();
        for d in [2, 4, 6] {
            assert_eq!(reynolds_invariant_dim(&g, &basis, d).unwrap() as u128, invariant_dim(&spec, d));
        }
    }

    #[test]
    fn filtered_univariate() {
        let mut g = GeneratorSet::new();
        let q = Polynomial::var(1, 0).pow(2);
        g.push("q", q);
        assert_eq!(filtered_subalgebra_dims(&g, 5, None).unwrap(), vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn echelon_reduction() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let mut b = EchelonBasis::new();
        assert!(b.insert(&(&x * &x + x.clone())).is_some());
        assert!(b.insert(&(&x * &x - y.clone())).is_some());
        // x + y lies in the span, with degree one
        assert!(b.contains(&(&x + &y)));
        assert_eq!(b.filtered_dims(2), vec![0, 1, 2]);
    }

    #[test]
    fn jacobians() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let pts = random_points(2, 3, 7);
        assert_eq!(jacobian_rank(&[x.clone(), y.clone()], &pts), 2);
        let q = &x * &x + &y * &y;
        assert_eq!(jacobian_rank(&[q.clone(), q.pow(2)], &pts), 1);
    }
}
