//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are keyed by [`Monomial`], whose derived order is graded
//! lexicographic: total degree first, then exponents from `x1` onwards. The
//! greatest monomial of a polynomial therefore has its total degree.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap as HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Vector};

pub const MAX_VARS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u16,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        deg: 0,
        exps: [0; MAX_VARS],
    };

    pub fn new(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| e as u16).sum();
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn degree(&self) -> usize {
        self.deg as usize
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u8] {
        &self.exps[..nvars]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        m.deg += other.deg;
        m
    }

    fn without(&self, i: usize) -> Monomial {
        let mut m = *self;
        m.exps[i] -= 1;
        m.deg -= 1;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

/// All monomials of total degree `d` in `nvars` variables, in ascending order.
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Monomial> {
    fn rec(i: usize, nvars: usize, left: usize, cur: &mut [u8; MAX_VARS], out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur[i] = left as u8;
            out.push(Monomial::new(&cur[..nvars]));
            cur[i] = 0;
            return;
        }
        for e in 0..=left {
            cur[i] = e as u8;
            rec(i + 1, nvars, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial::ONE] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, nvars, d, &mut [0; MAX_VARS], &mut out);
    out.sort();
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

fn check_vars(nvars: usize) -> Result<()> {
    if nvars > MAX_VARS {
        Err(Error::TooManyVariables {
            max: MAX_VARS,
            found: nvars,
        })
    } else {
        Ok(())
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        check_vars(nvars).expect("variable count");
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(i), Rational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        check_vars(nvars)?;
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.exps[nvars..].iter().any(|&e| e != 0) {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: MAX_VARS,
                });
            }
            *acc.entry(m).or_default() += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial { nvars, terms: acc })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.leading().map_or(0, |(m, _)| m.degree())
    }

    /// Greatest term in graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn homogeneous_part(&self, d: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::ONE)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomials in different rings");
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            let e = self.terms.entry(*m).or_default();
            *e += c * x;
            if e.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &Vector) -> Rational {
        assert_eq!(point.dim(), self.nvars);
        let top = self.terms.keys().map(|m| m.deg as usize).max().unwrap_or(0);
        let pows: Vec<Vec<Rational>> = (0..self.nvars)
            .map(|i| {
                let mut row = vec![Rational::one()];
                for k in 1..=top {
                    row.push(&row[k - 1] * &point[i]);
                }
                row
            })
            .collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, row) in pows.iter().enumerate() {
                let e = m.exps[i];
                if e > 0 {
                    t *= &row[e as usize];
                }
            }
            total += t;
        }
        total
    }

    pub fn partial(&self, i: usize) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e > 0 {
                terms.insert(m.without(i), c * &Rational::from_integer(e as i64));
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Directional derivative `(a . grad) f`.
    pub fn directional(&self, a: &Vector) -> Polynomial {
        assert_eq!(a.dim(), self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for i in 0..self.nvars {
            if !a[i].is_zero() {
                out.add_scaled(&a[i], &self.partial(i));
            }
        }
        out
    }

    /// `x -> f(M x)` where `M` has `nvars` rows; the result lives in
    /// `M.ncols()` variables.
    pub fn compose_linear(&self, m: &Matrix) -> Result<Polynomial> {
        if m.nrows() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: m.nrows(),
            });
        }
        let n = m.ncols();
        check_vars(n)?;
        let images: Vec<Polynomial> = m.rows().iter().map(linear_form_coeffs).collect();
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|l| vec![Polynomial::one(n), l.clone()]).collect();
        let mut out: HashMap<Monomial, Rational> = HashMap::default();
        for (mono, c) in &self.terms {
            let mut t = Polynomial::constant(n, c.clone());
            for i in 0..self.nvars {
                let e = mono.exps[i] as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
            }
            for (k, v) in t.terms {
                *out.entry(k).or_default() += v;
            }
        }
        Polynomial::from_terms(n, out)
    }

    /// `x -> f(x + a)`, by the Taylor expansion `sum_k (a . grad)^k f / k!`.
    pub fn translate(&self, a: &Vector) -> Polynomial {
        let mut out = self.clone();
        let mut term = self.clone();
        let mut k = 1i64;
        loop {
            term = term.directional(a);
            if term.is_zero() {
                break;
            }
            let inv = Rational::new(1, k);
            term = term.scale(&inv);
            out.add_scaled(&Rational::one(), &term);
            k += 1;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

fn linear_form_coeffs(v: &Vector) -> Polynomial {
    let n = v.dim();
    let mut p = Polynomial::zero(n);
    for i in 0..n {
        if !v[i].is_zero() {
            p.terms.insert(Monomial::var(i), v[i].clone());
        }
    }
    p
}

/// The degree-one polynomial `x -> (v, x)`.
pub fn linear_form(v: &Vector) -> Polynomial {
    check_vars(v.dim()).expect("variable count");
    linear_form_coeffs(v)
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different rings");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity_and_hasher(self.len() * rhs.len() / 2 + 1, Default::default());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_default() += c1 * c2;
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial { (&self).$f(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for i in 0..self.nvars {
                match m.exps[i] {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    e => write!(f, "*x{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<u8>,
    coefficient: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exponents: m.exponents(self.nvars).to_vec(),
                    coefficient: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pj = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(pj.terms.len());
        for t in pj.terms {
            if t.exponents.len() != pj.nvars {
                return Err(serde::de::Error::custom("exponent vector length differs from nvars"));
            }
            terms.push((Monomial::new(&t.exponents), t.coefficient));
        }
        Polynomial::from_terms(pj.nvars, terms).map_err(serde::de::Error::custom)
    }
}

fn multinomial(k: usize, exps: &[u8]) -> i128 {
    let mut acc: i128 = 1;
    let mut n = 0usize;
    for &e in exps {
        for j in 1..=e as usize {
            n += 1;
            acc = acc * n as i128 / j as i128;
        }
    }
    debug_assert_eq!(n, k);
    acc
}

/// `sum_x w_x (x, .)^k` for weighted points.
///
/// Points and weights are scaled to integers and every coefficient is an
/// exact `i128` sum; on overflow the coefficient is recomputed with
/// arbitrary precision.
pub fn weighted_power_sum(points: &[(Vector, Rational)], k: usize, nvars: usize) -> Result<Polynomial> {
    check_vars(nvars)?;
    if let Some((p, _)) = points.iter().find(|(p, _)| p.dim() != nvars) {
        return Err(Error::Dimension {
            expected: nvars,
            found: p.dim(),
        });
    }
    use num_integer::Integer;
    let den = points
        .iter()
        .fold(BigInt::from(1), |acc, (p, _)| acc.lcm(&p.common_denominator()));
    let wden = points.iter().fold(BigInt::from(1), |acc, (_, w)| acc.lcm(&w.denom()));
    let scaled: Option<Vec<(Vec<i128>, i128)>> = points
        .iter()
        .map(|(p, w)| {
            let coords = p
                .iter()
                .map(|x| i128::try_from(x.numer() * (&den / x.denom())).ok())
                .collect::<Option<Vec<_>>>()?;
            let wi = i128::try_from(w.numer() * (&wden / w.denom())).ok()?;
            Some((coords, wi))
        })
        .collect();
    let total_den = Rational::from_bigs(BigInt::from(1), den.pow(k as u32) * &wden);
    let mut terms = Vec::new();
    for m in monomials_of_degree(nvars, k) {
        let exps = m.exponents(nvars);
        let fast = scaled.as_ref().and_then(|sc| {
            let mut s: i128 = 0;
            for (coords, w) in sc {
                let mut t: i128 = *w;
                for (i, &e) in exps.iter().enumerate() {
                    for _ in 0..e {
                        t = t.checked_mul(coords[i])?;
                    }
                }
                s = s.checked_add(t)?;
            }
            s.checked_mul(multinomial(k, exps))
        });
        let c = match fast {
            Some(s) => Rational::from_i128(s, 1) * &total_den,
            None => {
                let mut s = Rational::zero();
                for (p, w) in points {
                    let mut t = w.clone();
                    for (i, &e) in exps.iter().enumerate() {
                        if e > 0 {
                            t *= &p[i].pow(e as i32);
                        }
                    }
                    s += t;
                }
                s * Rational::from_bigs(BigInt::from(multinomial(k, exps)), BigInt::from(1))
            }
        };
        if !c.is_zero() {
            terms.push((m, c));
        }
    }
    Polynomial::from_terms(nvars, terms)
}

/// `sum_{x in points} (x, .)^k`; the constant `|points|` when `k = 0`.
pub fn power_sum(points: &[Vector], k: usize, nvars: usize) -> Result<Polynomial> {
    let weighted: Vec<(Vector, Rational)> = points.iter().map(|p| (p.clone(), Rational::one())).collect();
    weighted_power_sum(&weighted, k, nvars)
}

/// `prod_{x in points} (x, .)`.
pub fn orbit_product(points: &[Vector], nvars: usize) -> Result<Polynomial> {
    check_vars(nvars)?;
    let mut acc = Polynomial::one(nvars);
    for p in points {
        if p.dim() != nvars {
            return Err(Error::Dimension {
                expected: nvars,
                found: p.dim(),
            });
        }
        acc = &acc * &linear_form(p);
    }
    Ok(acc)
}
