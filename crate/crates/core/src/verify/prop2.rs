//! Generation of `S^{W_a}` by `S^W` and its translate `tau(a)(S^W)`.
//!
//! Two certificates. `Filtered` compares the filtered dimensions of the
//! algebra generated by power-sum invariants and their translates with the
//! Hilbert series of `W_a`, itself checked against a brute-force Reynolds
//! computation. `Chevalley` follows the explicit chain of identities to
//! build a homogeneous generating set of `S^{W_a}` inside the algebra, then
//! certifies it by a Jacobian rank and the product of degrees.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exact::{rat, Matrix, Rational, Vector};
use crate::invariants::{
    cumulative_dims, filtered_subalgebra_dims, random_points, reflection_degrees, reynolds_invariant_dim,
    GeneratorSet, HilbertSpec,
};
use crate::poly::{orbit_product, power_sum, Polynomial};
use crate::roots::{Family, RootSystem, RootSystemLabel};
use crate::weyl::{enumerate_group, group_order, stabilizer_generators, DEFAULT_GROUP_CAP};

use super::common::*;
use super::edata::{E6Data, E7Data, Sign};
use super::report::{Check, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Filtered,
    Chevalley,
}

impl Strategy {
    fn tag(self) -> &'static str {
        match self {
            Strategy::Filtered => "F",
            Strategy::Chevalley => "C",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f" | "filtered" => Ok(Strategy::Filtered),
            "c" | "chevalley" => Ok(Strategy::Chevalley),
            _ => Err(Error::Parse(format!("unknown strategy {s:?}, expected F or C"))),
        }
    }
}

/// Ceiling on `|W_a|` times the number of monomials of degree `<= D`
/// averaged by the Reynolds oracle of the filtered strategy.
pub const REYNOLDS_WORK_BUDGET: u128 = 2_000_000;

/// One test case: a group `W` (the Weyl group of `sys`) and a coweight.
struct Setting {
    id: String,
    label: RootSystemLabel,
    /// `W` is the full group `W(B_n)` rather than `W(D_n)`.
    full: bool,
    name: String,
    sys: RootSystem,
    a: Vector,
    /// Roots whose reflections generate `W_a`.
    stab: Vec<Vector>,
    /// A basis of `V`, in ambient coordinates.
    basis: Vec<Vector>,
    /// Power-sum generators of `S^W`, in ambient variables.
    sw: Vec<(String, Polynomial)>,
}

impl Setting {
    fn new(label: RootSystemLabel, coweight: &str, full: bool) -> Result<Self> {
        let own = RootSystem::build(label)?;
        let cw = own.coweight(coweight)?.clone();
        let n = label.rank();
        if full && label.family() != Family::D {
            return Err(Error::Unsupported(format!(
                "the full group differs from W only for type D, not {label}"
            )));
        }
        let sys = if full { RootSystem::build(RootSystemLabel::b(n))? } else { own };
        let a = cw.vector.clone();
        let stab: Vec<Vector> = stabilizer_generators(&sys, &a)?.into_iter().map(|(r, _)| r).collect();
        let dim = sys.ambient_dim();
        let basis: Vec<Vector> = if dim == sys.rank() {
            (0..dim).map(|i| Vector::unit(dim, i)).collect()
        } else {
            sys.simple_roots().to_vec()
        };
        let sw = match (label.family(), full) {
            (Family::A, _) => {
                let a1 = sys.minuscule_coweights()[0].vector.clone();
                let orbit = orbit_vec(sys.simple_roots(), &a1)?;
                (2..=n + 1)
                    .map(|i| Ok((format!("a_{i}"), power_sum(&orbit, i, dim)?)))
                    .collect::<Result<Vec<_>>>()?
            }
            (Family::B | Family::C, _) | (Family::D, true) => (1..=n)
                .map(|i| Ok((format!("b_{}", 2 * i), power_sum(&signed_basis(n), 2 * i, dim)?)))
                .collect::<Result<Vec<_>>>()?,
            (Family::D, false) => {
                let mut g = (1..n)
                    .map(|i| Ok((format!("b_{}", 2 * i), power_sum(&signed_basis(n), 2 * i, dim)?)))
                    .collect::<Result<Vec<_>>>()?;
                let bplus = pairing_level(&signed_basis(n), &c_half(n), &rat(1, 2));
                g.push(("d".to_string(), orbit_product(&bplus, dim)?));
                g
            }
            (Family::E6 | Family::E7, _) => {
                let base = sys.minuscule_coweights()[0].vector.clone();
                let orbit = orbit_vec(sys.simple_roots(), &base)?;
                reflection_degrees(sys.simple_roots(), DEFAULT_GROUP_CAP)?
                    .into_iter()
                    .map(|i| Ok((format!("orbit_{i}"), power_sum(&orbit, i, dim)?)))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        let group = if full { "W" } else if label.family() == Family::D { "W°" } else { "W" };
        Ok(Setting {
            id: format!("{label}.{}.{group}", cw.name),
            label,
            full,
            name: cw.name,
            sys,
            a,
            stab,
            basis,
            sw,
        })
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Ambient-to-`V` substitution `x = M y`.
    fn restriction(&self) -> Matrix {
        Matrix::new(self.basis.clone()).expect("basis rows").transpose()
    }

    fn hilbert(&self) -> Result<HilbertSpec> {
        HilbertSpec::for_reflection_group(&self.stab, self.dim(), DEFAULT_GROUP_CAP)
    }
}

/// Check Prop 2 for one minuscule coweight. `full` selects `W(B_n)` in
/// place of `W(D_n)` for type D.
pub fn verify_prop2(
    label: RootSystemLabel,
    coweight: &str,
    max_degree: usize,
    strategy: Strategy,
    full: bool,
) -> Result<VerifyReport> {
    let s = Setting::new(label, coweight, full)?;
    Ok(match strategy {
        Strategy::Filtered => filtered(&s, max_degree)?,
        Strategy::Chevalley => chevalley(&s),
    })
}

fn filtered(s: &Setting, d_max: usize) -> Result<VerifyReport> {
    let spec = s.hilbert()?;
    let top = spec.reflection_degrees.iter().copied().max().unwrap_or(1);
    if d_max < top {
        return Err(Error::Unsupported(format!(
            "max degree {d_max} is below the top degree {top} of S^W_a"
        )));
    }
    let mut c = Check::new(
        format!("{}.prop2.F", s.id),
        "S^W_a is generated by S^W and tau(a)(S^W): filtered dimensions",
    );
    c.detail("max_degree", d_max);
    c.detail("stabilizer_degrees", &spec.reflection_degrees);
    c.detail("trivial_directions", spec.trivial_directions);
    let hilbert = cumulative_dims(&spec, d_max);
    c.detail("hilbert_cumulative", hilbert.iter().map(|x| x.to_string()).collect::<Vec<_>>());

    // Independent count of invariants by averaging over W_a.
    let dim = s.sys.ambient_dim();
    let order = group_order(&s.stab, DEFAULT_GROUP_CAP)? as u128;
    let monomials = (1..=dim as u128).fold(1u128, |acc, k| acc * (d_max as u128 + k) / k);
    if order * monomials > REYNOLDS_WORK_BUDGET {
        c.inconclusive(format!(
            "Reynolds oracle needs {order} x {monomials} monomial averages, over the budget {REYNOLDS_WORK_BUDGET}"
        ));
        return Ok(c.finish());
    }
    if let Some(group) = c.ok("enumerate W_a", enumerate_group(&s.stab, dim, DEFAULT_GROUP_CAP)) {
        c.detail("stabilizer_order", group.len());
        let mut acc = 0u128;
        let mut reynolds = Vec::new();
        for d in 0..=d_max {
            match reynolds_invariant_dim(&group, &s.basis, d) {
                Ok(k) => {
                    acc += k as u128;
                    reynolds.push(acc);
                }
                Err(e) => {
                    c.error("reynolds", &e);
                    break;
                }
            }
        }
        c.eq("Reynolds dims = Hilbert dims", &reynolds, &hilbert);
    }

    let m = s.restriction();
    let mut g = GeneratorSet::new();
    for (name, f) in &s.sw {
        if f.degree() > d_max {
            continue;
        }
        let Some(fv) = c.ok("restrict", f.compose_linear(&m)) else {
            return Ok(c.finish());
        };
        let Some(tv) = c.ok("restrict", f.translate(&s.a).compose_linear(&m)) else {
            return Ok(c.finish());
        };
        g.push(name.clone(), fv);
        g.push(format!("tau {name}"), tv);
    }
    c.detail("generators", &g.provenance);
    match filtered_subalgebra_dims(&g, d_max, Some(&hilbert)) {
        Ok(dims) => {
            c.detail("filtered_cumulative", dims.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            let excess = dims.iter().zip(&hilbert).any(|(x, h)| x > h);
            let short = dims.iter().zip(&hilbert).any(|(x, h)| x < h);
            if excess {
                c.truth("filtered dims do not exceed Hilbert dims", false);
            } else if short {
                c.inconclusive("filtered lower bound stays below the Hilbert dims within the degree bound");
            } else {
                c.truth("filtered dims = Hilbert dims", true);
            }
        }
        Err(e @ Error::Resource(_)) => c.inconclusive(e.to_string()),
        Err(e) => c.error("filtered dims", &e),
    }
    Ok(c.finish())
}

/// An element of the generated algebra with an independent description.
struct Exhibit {
    label: String,
    built: Polynomial,
    oracle: Polynomial,
    /// The set whose power sum `oracle` is.
    set: Option<Vec<Vector>>,
}

fn exhibit(label: impl Into<String>, built: Polynomial, oracle: Polynomial, set: Option<Vec<Vector>>) -> Exhibit {
    Exhibit {
        label: label.into(),
        built,
        oracle,
        set,
    }
}

/// `((tau - 1) g - const) / lambda`, the linear form of `a` recovered from a
/// quadratic invariant `g`.
fn linear_from(g: &Polynomial, a: &Vector) -> Result<Polynomial> {
    let diff = tau_minus_one(g, a);
    let (lambda, c0) = affine_in(&diff, &lf(a))
        .ok_or_else(|| Error::Construction("(tau-1) g is not affine in a".into()))?;
    Ok((&diff - &konst(g.nvars(), c0)).scale(&lambda.recip()))
}

fn sw_get<'a>(s: &'a Setting, name: &str) -> Result<&'a Polynomial> {
    s.sw
        .iter()
        .find(|(k, _)| k == name)
        .map(|(_, p)| p)
        .ok_or_else(|| Error::Construction(format!("{name} is not among the S^W generators")))
}

/// Solve `x + y = total`, `p x + q y = weighted` for `x`, `y`.
fn split_two(total: &Polynomial, weighted: &Polynomial, p: &Rational, q: &Rational) -> (Polynomial, Polynomial) {
    let x = (weighted - &total.scale(q)).scale(&(p - q).recip());
    let y = total - &x;
    (x, y)
}

fn chain_a(s: &Setting) -> Result<Vec<Exhibit>> {
    let n = s.label.rank();
    let dim = n + 1;
    let r = s.sys.coweight(&s.name)?.node + 1;
    let sn = n + 1 - r;
    let (lb, lc) = (Rational::new(sn as i64, dim as i64), Rational::new(-(r as i64), dim as i64));
    let mut pa = vec![konst(dim, int(dim as i64)), Polynomial::zero(dim)];
    for i in 2..=n + 1 {
        pa.push(sw_get(s, &format!("a_{i}"))?.clone());
    }
    let mut bp = vec![konst(dim, int(r as i64))];
    let mut cp = vec![konst(dim, int(sn as i64))];
    for i in 1..=n {
        // bp and cp hold j < i here, so the tails stop short of the unknowns.
        let rhs = tau_minus_one(&pa[i + 1], &s.a) - shifted_tail(&bp, i + 1, &lb) - shifted_tail(&cp, i + 1, &lc);
        let (b, c) = split_two(&pa[i], &rhs.scale(&Rational::new(1, i as i64 + 1)), &lb, &lc);
        bp.push(b);
        cp.push(c);
    }
    let l = linear_from(&pa[2], &s.a)?;
    let orbit = orbit_vec(s.sys.simple_roots(), &s.sys.minuscule_coweights()[0].vector)?;
    let bset = translate_set(&pairing_level(&orbit, &s.a, &lb), &s.a.scale(&Rational::new(-1, r as i64)));
    let cset = translate_set(&pairing_level(&orbit, &s.a, &lc), &s.a.scale(&Rational::new(1, sn as i64)));
    let mut out = vec![exhibit(format!("a_{r}"), l.clone(), lf(&s.a), None)];
    for i in 2..=r {
        let built = binomial_shift(&bp, i, &l.scale(&Rational::new(-1, r as i64)));
        out.push(exhibit(format!("b_{i}"), built, power_sum(&bset, i, dim)?, Some(bset.clone())));
    }
    for i in 2..=sn {
        let built = binomial_shift(&cp, i, &l.scale(&Rational::new(1, sn as i64)));
        out.push(exhibit(format!("c_{i}"), built, power_sum(&cset, i, dim)?, Some(cset.clone())));
    }
    Ok(out)
}

/// `b` with `W_b = W(B_{n-1})`, or `W(D_{n-1})` plus the product generator
/// when `with_product`.
fn chain_b(s: &Setting, with_product: bool) -> Result<Vec<Exhibit>> {
    let n = s.label.rank();
    let l = linear_from(sw_get(s, "b_2")?, &s.a)?;
    let bprime: Vec<Vector> = signed_basis(n).into_iter().filter(|x| x.dot(&s.a).is_zero()).collect();
    let mut out = vec![exhibit("b", l.clone(), lf(&s.a), None)];
    let top = if with_product { n - 2 } else { n - 1 };
    for i in 1..=top {
        let built = sw_get(s, &format!("b_{}", 2 * i))? - &l.pow(2 * i as u32).scale(&int(2));
        out.push(exhibit(
            format!("b'_{}", 2 * i),
            built,
            power_sum(&bprime, 2 * i, n)?,
            Some(bprime.clone()),
        ));
    }
    if with_product {
        let d = sw_get(s, "d")?;
        let built = tau_minus_one(d, &s.a);
        let positive: Vec<Vector> = bprime.iter().filter(|x| x.dot(&c_half(n)).is_positive()).cloned().collect();
        out.push(exhibit("d'", built, orbit_product(&positive, n)?, None));
    }
    Ok(out)
}

/// `c` (or `c'`) with `W_c` the symmetric group on `n` letters.
fn chain_c(s: &Setting) -> Result<Vec<Exhibit>> {
    let n = s.label.rank();
    let half = rat(1, 2);
    let mut bplus = vec![konst(n, int(n as i64))];
    for k in 1..=n {
        if k % 2 == 0 {
            bplus.push(sw_get(s, &format!("b_{k}"))?.scale(&half));
        } else {
            let i = (k + 1) / 2;
            let even = sw_get(s, &format!("b_{}", 2 * i))?.scale(&half);
            // The j = 2i - 1 term of the tail has coefficient 2i (1/2) = i.
            let rhs = tau_minus_one(&even, &s.a) - shifted_tail(&bplus, 2 * i, &half);
            bplus.push(rhs.scale(&Rational::new(1, i as i64)));
        }
    }
    let l = linear_from(sw_get(s, "b_2")?, &s.a)?;
    let shift = Rational::new(-2, n as i64);
    let aset = translate_set(&pairing_level(&signed_basis(n), &s.a, &half), &s.a.scale(&shift));
    let mut out = vec![exhibit(s.name.clone(), l.clone(), lf(&s.a), None)];
    for i in 2..=n {
        let built = binomial_shift(&bplus, i, &l.scale(&shift));
        out.push(exhibit(format!("a_{i}"), built, power_sum(&aset, i, n)?, Some(aset.clone())));
    }
    Ok(out)
}

fn chain_e7(s: &Setting) -> Result<Vec<Exhibit>> {
    let data = E7Data::new()?;
    let dim = 8;
    let pa = psums(&data.orbit, 12, dim)?;
    let l = linear_from(&pa[2], &s.a)?;
    let step = data.a.dot(&data.a);
    let half = rat(1, 2);
    let lpow = |k: usize| l.pow(k as u32);
    let shifted = &l + &konst(dim, step);
    let mut aplus = vec![konst(dim, int(27))];
    for k in 1..=12 {
        if k % 2 == 0 {
            aplus.push(pa[k].scale(&half) - lpow(k));
        } else {
            let i = (k + 1) / 2;
            // (tau - 1)(a_2i / 2 - a^2i), with tau(a) = a + (a, a).
            let moved = tau_minus_one(&pa[2 * i], &s.a).scale(&half) - (shifted.pow(2 * i as u32) - lpow(2 * i));
            let rhs = moved - shifted_tail(&aplus, 2 * i, &half);
            aplus.push(rhs.scale(&Rational::new(1, i as i64)));
        }
    }
    let u = l.scale(&rat(-1, 3));
    let bplus = translate_set(&data.a_plus, &data.a.scale(&rat(-1, 3)));
    let mut out = vec![exhibit("a", l.clone(), lf(&s.a), None)];
    for i in [2, 5, 6, 8, 9, 12] {
        out.push(exhibit(
            format!("b+_{i}"),
            binomial_shift(&aplus, i, &u),
            power_sum(&bplus, i, dim)?,
            Some(bplus.clone()),
        ));
    }
    Ok(out)
}

fn chain_e6(s: &Setting) -> Result<Vec<Exhibit>> {
    let sign = if s.name == "b+" { Sign::Plus } else { Sign::Minus };
    let data = E6Data::new(sign)?;
    let dim = 8;
    let pb = psums(&data.orbit, 9, dim)?;
    let l = linear_from(&pb[2], &s.a)?;
    let step = data.b.dot(&data.b);
    let shifted = &l + &konst(dim, step);
    let (lc, ld) = (rat(-2, 3), rat(1, 3));
    let split: Vec<Polynomial> = (0..=9).map(|i| &pb[i] - &l.pow(i as u32)).collect();
    let mut cs = vec![konst(dim, int(data.c6.len() as i64))];
    let mut ds = vec![konst(dim, int(data.d6.len() as i64))];
    for i in 1..=8 {
        // (tau - 1)(C_{i+1} + D_{i+1}), using tau(b) = b + (b, b).
        let moved = tau_minus_one(&pb[i + 1], &s.a)
            - (shifted.pow(i as u32 + 1) - l.pow(i as u32 + 1));
        let rhs = moved - shifted_tail(&cs, i + 1, &lc) - shifted_tail(&ds, i + 1, &ld);
        let (c, d) = split_two(&split[i], &rhs.scale(&Rational::new(1, i as i64 + 1)), &lc, &ld);
        cs.push(c);
        ds.push(d);
    }
    let mut out = vec![exhibit(s.name.clone(), l.clone(), lf(&s.a), None)];
    for i in [2, 4, 6, 8] {
        out.push(exhibit(
            format!("c_{i}"),
            binomial_shift(&cs, i, &l.scale(&rat(1, 2))),
            power_sum(&data.c_orbit, i, dim)?,
            Some(data.c_orbit.clone()),
        ));
    }
    out.push(exhibit(
        "d_5",
        binomial_shift(&ds, 5, &l.scale(&rat(-1, 4))),
        power_sum(&data.d_orbit, 5, dim)?,
        Some(data.d_orbit.clone()),
    ));
    Ok(out)
}

fn chain(s: &Setting) -> Result<Vec<Exhibit>> {
    match (s.label.family(), s.name.as_str()) {
        (Family::A, _) => chain_a(s),
        (Family::B, _) => chain_b(s, false),
        (Family::C, _) => chain_c(s),
        (Family::D, "b") => chain_b(s, !s.full),
        (Family::D, _) => chain_c(s),
        (Family::E7, _) => chain_e7(s),
        (Family::E6, _) => chain_e6(s),
    }
}

/// Rank of the Jacobian of the restrictions to `V`, sampled at random points
/// of `V`.
fn restricted_jacobian_rank(polys: &[Polynomial], basis: &[Vector], want: usize, seed: u64) -> usize {
    let Some(n) = polys.first().map(Polynomial::nvars) else {
        return 0;
    };
    let m = Matrix::new(basis.to_vec()).expect("basis rows");
    let partials: Vec<Vec<Polynomial>> = polys.iter().map(|p| (0..n).map(|i| p.partial(i)).collect()).collect();
    let mut best = 0;
    for round in 0..3 {
        for y in random_points(basis.len(), 2, seed + round) {
            let pt = basis.iter().zip(y.iter()).fold(Vector::zeros(n), |acc, (b, t)| acc.add_scaled(t, b));
            let rows: Vec<Vector> = partials
                .iter()
                .map(|row| {
                    let grad: Vector = row.iter().map(|d| d.eval(&pt)).collect();
                    m.apply(&grad)
                })
                .collect();
            best = best.max(Matrix::new(rows).expect("rectangular").rank());
        }
        if best >= want {
            break;
        }
    }
    best
}

fn chevalley(s: &Setting) -> VerifyReport {
    let mut c = Check::new(
        format!("{}.prop2.C", s.id),
        "S^W_a is generated by S^W and tau(a)(S^W): Chevalley certificate",
    );
    let Some(items) = c.ok("generation chain", chain(s)) else {
        return c.finish();
    };
    for e in &items {
        c.eq(&format!("{} built = oracle", e.label), &e.built, &e.oracle);
        if let Some(set) = &e.set {
            if let Some(ok) = c.ok("stability", is_stable(set, &s.stab)) {
                c.truth(&format!("{} set is W_a-stable", e.label), ok);
            }
        } else {
            let fixed = s.stab.iter().all(|r| r.dot(&s.a).is_zero());
            c.truth(&format!("{} fixed by W_a", e.label), fixed);
        }
        c.truth(&format!("{} homogeneous", e.label), e.oracle.is_homogeneous());
    }
    let degrees: Vec<usize> = items.iter().map(|e| e.oracle.degree()).collect();
    c.detail("elements", items.iter().map(|e| e.label.clone()).collect::<Vec<_>>());
    c.detail("degrees", &degrees);
    let dim = s.dim();
    c.eq("number of elements = dim V", &items.len(), &dim);
    let polys: Vec<Polynomial> = items.iter().map(|e| e.oracle.clone()).collect();
    let rank = restricted_jacobian_rank(&polys, &s.basis, dim, 0x5eed);
    c.detail("jacobian_rank", rank);
    c.eq("Jacobian rank = dim V", &rank, &dim);
    let product: u128 = degrees.iter().map(|&d| d as u128).product();
    c.detail("degree_product", product.to_string());
    if let Some(order) = c.ok("|W_a|", group_order(&s.stab, DEFAULT_GROUP_CAP)) {
        c.detail("stabilizer_order", order);
        c.eq("degree product = |W_a|", &BigUint::from(product), &BigUint::from(order));
    }
    if let Some(spec) = c.ok("stabilizer degrees", s.hilbert()) {
        let mut want: Vec<usize> = std::iter::repeat_n(1, spec.trivial_directions)
            .chain(spec.reflection_degrees.iter().copied())
            .collect();
        want.sort_unstable();
        let mut got = degrees.clone();
        got.sort_unstable();
        c.eq("degrees = degrees of W_a on V", &got, &want);
    }
    c.finish()
}

/// The settings exercised by the test suite for a system, with the
/// `full` flag for type D.
pub fn prop2_cases(label: RootSystemLabel) -> Vec<(String, bool)> {
    let sys = match RootSystem::build(label) {
        Ok(s) => s,
        Err(_) => return Vec::new(),
    };
    let names: Vec<String> = sys.minuscule_coweights().iter().map(|c| c.name.clone()).collect();
    let mut out: Vec<(String, bool)> = names.iter().map(|n| (n.clone(), false)).collect();
    if label.family() == Family::D {
        out.extend(names.into_iter().map(|n| (n, true)));
    }
    out
}

/// Default degree bound for the filtered strategy.
pub fn default_max_degree(label: RootSystemLabel) -> usize {
    match label.family() {
        Family::E6 | Family::E7 => 12,
        Family::A => 8.max(label.rank() + 1),
        Family::B | Family::C => 8.max(2 * label.rank()),
        Family::D => 8.max(2 * label.rank() - 2),
    }
}
