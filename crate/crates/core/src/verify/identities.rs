//! Exact polynomial identities behind the generation arguments.

use crate::exact::{rat, Matrix, Rational, Vector};
use crate::poly::{orbit_product, power_sum, Polynomial};
use crate::roots::{Family, RootSystemLabel};

use super::common::*;
use super::edata::{E6Data, E7Data, Sign};
use super::report::{Check, VerifyReport};

/// Every identity that applies to the given system.
pub fn verify_identities(label: RootSystemLabel) -> Vec<VerifyReport> {
    let n = label.rank();
    match label.family() {
        Family::A => identities_a(n),
        Family::B => identities_b(n),
        Family::C => identities_c(n),
        Family::D => identities_d(n),
        Family::E7 => identities_e7(),
        Family::E6 => Sign::both().into_iter().flat_map(identities_e6).collect(),
    }
}

fn identities_a(n: usize) -> Vec<VerifyReport> {
    let sys = build(RootSystemLabel::a(n));
    let dim = n + 1;
    let np1 = int(n as i64 + 1);
    let mut out = Vec::new();
    let a1 = sys.minuscule_coweights()[0].vector.clone();
    let orbit_a = orbit_vec(sys.simple_roots(), &a1).expect("small orbit");
    let r2 = power_sum(sys.roots(), 2, dim).expect("power sum");
    let pa = psums(&orbit_a, n + 1, dim).expect("power sums");

    let mut c = Check::new(
        format!("A{n}.identity.symmetric_power_sums"),
        "v_i = sum_j C(i,j) a_j (e/(n+1))^(i-j)",
    );
    let e = Vector::from_ints(&vec![1; dim]);
    let basis: Vec<Vector> = (0..dim).map(|i| Vector::unit(dim, i)).collect();
    c.eq(
        "V = A + e/(n+1)",
        &as_set(&basis),
        &as_set(&translate_set(&orbit_a, &e.scale(&np1.recip()))),
    );
    let u = lf(&e).scale(&np1.recip());
    for i in 1..=n + 1 {
        let v_i = power_sum(&basis, i, dim).expect("power sum");
        c.eq(&format!("v_{i}"), &v_i, &binomial_shift(&pa, i, &u));
    }
    out.push(c.finish());

    for cw in sys.minuscule_coweights() {
        let r = cw.node + 1;
        let s = n + 1 - r;
        let ar = cw.vector.clone();
        let tag = format!("A{n}.r{r}");

        let mut c = Check::new(
            format!("{tag}.identity.translated_root_sum"),
            "4(n+1) a_r = (tau-1)(r_2) - 2rs",
        );
        let lhs = tau_minus_one(&r2, &ar);
        let rhs = lf(&ar).scale(&(int(4) * &np1)) + konst(dim, int(2 * (r * s) as i64));
        c.eq("(tau-1) r_2", &lhs, &rhs);
        let rplus = pairing_level(sys.roots(), &ar, &rat(1, 1));
        c.eq("|R+|", &rplus.len(), &(r * s));
        let total = rplus.iter().fold(Vector::zeros(dim), |acc, x| &acc + x);
        c.eq("sum R+ = (n+1) a_r", &total, &ar.scale(&np1));
        out.push(c.finish());

        let lb = Rational::new(s as i64, n as i64 + 1);
        let lc = Rational::new(-(r as i64), n as i64 + 1);
        let bp = pairing_level(&orbit_a, &ar, &lb);
        let cp = pairing_level(&orbit_a, &ar, &lc);
        let pb = psums(&bp, n + 1, dim).expect("power sums");
        let pc = psums(&cp, n + 1, dim).expect("power sums");

        let mut c = Check::new(
            format!("{tag}.identity.split_recurrence"),
            "(tau-1) a_(i+1) = sum_j C(i+1,j) [(s/(n+1))^(i+1-j) b'_j + (-r/(n+1))^(i+1-j) c'_j]",
        );
        let m = Matrix::new(vec![Vector::from_ints(&[1, 1]), Vector::new(vec![lb.clone(), lc.clone()])]).unwrap();
        c.eq("2x2 rank", &m.rank(), &2);
        for i in 0..=n + 1 {
            c.eq(&format!("a_{i} = b'_{i} + c'_{i}"), &pa[i], &(&pb[i] + &pc[i]));
        }
        for i in 0..=n {
            let lhs = tau_minus_one(&pa[i + 1], &ar);
            let rhs = shifted_tail(&pb, i + 1, &lb) + shifted_tail(&pc, i + 1, &lc);
            c.eq(&format!("(tau-1) a_{}", i + 1), &lhs, &rhs);
        }
        out.push(c.finish());

        let mut c = Check::new(
            format!("{tag}.identity.projected_sums"),
            "b_i = sum_j C(i,j) (-a_r/r)^(i-j) b'_j and c_i = sum_j C(i,j) (a_r/s)^(i-j) c'_j",
        );
        let to_b = ar.scale(&Rational::new(-1, r as i64));
        let to_c = ar.scale(&Rational::new(1, s as i64));
        let bset = translate_set(&bp, &to_b);
        let cset = translate_set(&cp, &to_c);
        for i in 0..=n + 1 {
            let bi = power_sum(&bset, i, dim).expect("power sum");
            let ci = power_sum(&cset, i, dim).expect("power sum");
            c.eq(&format!("b_{i}"), &bi, &binomial_shift(&pb, i, &lf(&to_b)));
            c.eq(&format!("c_{i}"), &ci, &binomial_shift(&pc, i, &lf(&to_c)));
        }
        out.push(c.finish());
    }
    out
}

fn identities_b(n: usize) -> Vec<VerifyReport> {
    let sys = build(RootSystemLabel::b(n));
    let b = Vector::unit(n, 0);
    let mut c = Check::new(
        format!("B{n}.identity.translated_root_sum"),
        "(beta-1) r_2^B = 4(2n-1) b + 2(2n-1)",
    );
    let r2 = power_sum(sys.roots(), 2, n).expect("power sum");
    let k = 2 * n as i64 - 1;
    c.eq(
        "(beta-1) r_2",
        &tau_minus_one(&r2, &b),
        &(lf(&b).scale(&int(4 * k)) + konst(n, int(2 * k))),
    );
    let first = c.finish();

    let mut c = Check::new(format!("B{n}.identity.fixed_point_split"), "b_2i = 2 b^2i + b'_2i");
    let orbit_b = signed_basis(n);
    let bprime: Vec<Vector> = orbit_b.iter().filter(|x| x.dot(&b).is_zero()).cloned().collect();
    c.eq("|B'|", &bprime.len(), &(2 * n - 2));
    for i in 1..=2 * n {
        let full = power_sum(&orbit_b, i, n).expect("power sum");
        let rest = power_sum(&bprime, i, n).expect("power sum");
        if i % 2 == 0 {
            c.eq(&format!("b_{i}"), &full, &(lf(&b).pow(i as u32).scale(&int(2)) + rest));
        } else {
            c.truth(&format!("b_{i} = 0"), full.is_zero() && rest.is_zero());
        }
    }
    vec![first, c.finish()]
}

/// The identities for `gamma = tau(c)` with `c` either `1/2 (1, ..., 1)` or
/// its conjugate with the last sign flipped.
fn gamma_identities(prefix: &str, n: usize, c_vec: &Vector) -> Vec<VerifyReport> {
    let sys_c = build(RootSystemLabel::c(n));
    let mut out = Vec::new();
    let mut c = Check::new(
        format!("{prefix}.identity.translated_root_sum"),
        "(gamma-1) r_2^C = 8(n+1) c + (n^2+n)",
    );
    let r2 = power_sum(sys_c.roots(), 2, n).expect("power sum");
    let nn = n as i64;
    c.eq(
        "(gamma-1) r_2",
        &tau_minus_one(&r2, c_vec),
        &(lf(c_vec).scale(&int(8 * (nn + 1))) + konst(n, int(nn * nn + nn))),
    );
    out.push(c.finish());

    let mut c = Check::new(
        format!("{prefix}.identity.half_orbit_recurrence"),
        "(gamma-1) b+_2i = sum_(j<2i) C(2i,j) (1/2)^(2i-j) b+_j",
    );
    let orbit_b = signed_basis(n);
    let bplus = pairing_level(&orbit_b, c_vec, &rat(1, 2));
    let pplus = psums(&bplus, 2 * n, n).expect("power sums");
    c.eq("|B+|", &bplus.len(), &n);
    for i in 1..=n {
        let full = power_sum(&orbit_b, 2 * i, n).expect("power sum");
        c.eq(&format!("b_{} = 2 b+_{}", 2 * i, 2 * i), &full, &pplus[2 * i].scale(&int(2)));
        c.eq(
            &format!("(gamma-1) b+_{}", 2 * i),
            &tau_minus_one(&pplus[2 * i], c_vec),
            &shifted_tail(&pplus, 2 * i, &rat(1, 2)),
        );
    }
    out.push(c.finish());

    let mut c = Check::new(
        format!("{prefix}.identity.projected_sums"),
        "a_i = sum_j C(i,j) b+_j (-2c/n)^(i-j)",
    );
    let shift = c_vec.scale(&Rational::new(-2, nn));
    let a_set = translate_set(&bplus, &shift);
    let projected: Vec<Vector> = bplus.iter().map(|x| project_off(x, c_vec)).collect();
    c.eq("A = proj B+", &as_set(&a_set), &as_set(&projected));
    for i in 0..=n {
        c.eq(
            &format!("a_{i}"),
            &power_sum(&a_set, i, n).expect("power sum"),
            &binomial_shift(&pplus, i, &lf(&shift)),
        );
    }
    out.push(c.finish());
    out
}

fn identities_c(n: usize) -> Vec<VerifyReport> {
    gamma_identities(&format!("C{n}.c"), n, &c_half(n))
}

fn identities_d(n: usize) -> Vec<VerifyReport> {
    let b = Vector::unit(n, 0);
    let mut c = Check::new(format!("D{n}.identity.product_generator"), "(beta-1)(d) = (beta(b)-b) d' = d'");
    let orbit_b = signed_basis(n);
    let bplus = pairing_level(&orbit_b, &c_half(n), &rat(1, 2));
    let bprime_plus: Vec<Vector> = bplus.iter().filter(|x| x.dot(&b).is_zero()).cloned().collect();
    let d = orbit_product(&bplus, n).expect("product");
    let dp = orbit_product(&bprime_plus, n).expect("product");
    let all_ones = Polynomial::from_terms(n, [(crate::poly::Monomial::new(&vec![1; n]), Rational::one())]).unwrap();
    c.eq("d = x1...xn", &d, &all_ones);
    c.eq("d = b d'", &d, &(&lf(&b) * &dp));
    let beta_b = tau_minus_one(&lf(&b), &b);
    c.eq("beta(b) - b = 1", &beta_b, &konst(n, Rational::one()));
    c.eq("(beta-1) d", &tau_minus_one(&d, &b), &(&beta_b * &dp));
    let d_sys = build(RootSystemLabel::d(n));
    let b_sys = build(RootSystemLabel::b(n));
    if let Some(inv) = c.ok("d invariant", crate::invariants::is_invariant(&d, d_sys.simple_roots())) {
        c.truth("d is W°-invariant", inv);
    }
    if let Some(inv) = c.ok("d invariant", crate::invariants::is_invariant(&d, b_sys.simple_roots())) {
        c.truth("d is not W-invariant", !inv);
    }
    let mut out = vec![c.finish()];
    out.extend(gamma_identities(&format!("D{n}.c"), n, &c_half(n)));
    out.extend(gamma_identities(&format!("D{n}.c-prime"), n, &c_prime(n)));
    out
}

/// `(tau - 1)(sum_R alpha^2)` against the printed `k (u + 1)`, plus the
/// weaker statement that it is affine in `u` with nonzero slope.
fn root_sum_reports(
    prefix: &str,
    anchor: &str,
    lhs: &Polynomial,
    u: &Polynomial,
    printed: i64,
) -> Vec<VerifyReport> {
    let nvars = u.nvars();
    let mut c = Check::new(format!("{prefix}.identity.translated_root_sum"), anchor);
    let printed_rhs = (u + &konst(nvars, Rational::one())).scale(&int(printed));
    let affine = affine_in(lhs, u);
    if let Some((c1, c0)) = &affine {
        c.detail("computed_linear_coefficient", c1);
        c.detail("computed_constant", c0);
    }
    c.detail("printed_coefficient", printed);
    c.eq("(tau-1) r_2 as printed", lhs, &printed_rhs);
    let mut out = vec![c.finish()];

    let mut c = Check::new(
        format!("{prefix}.identity.translated_root_sum_affine"),
        "(tau-1) r_2 = lambda u + mu with lambda != 0",
    );
    c.truth("affine with nonzero slope", affine.is_some());
    if let Some((c1, c0)) = affine {
        c.detail("lambda", c1);
        c.detail("mu", c0);
    }
    out.push(c.finish());
    out
}

fn identities_e7() -> Vec<VerifyReport> {
    let data = E7Data::new().expect("E7 data");
    let dim = 8;
    let a = &data.a;
    let la = lf(a);
    let mut out = Vec::new();

    let r2 = power_sum(data.sys.roots(), 2, dim).expect("power sum");
    out.extend(root_sum_reports(
        "E7",
        "(tau-1)(r_7,2) = 54(a+1)",
        &tau_minus_one(&r2, a),
        &la,
        54,
    ));

    let mut c = Check::new("E7.identity.orbit_sum_parity", "a_i = 0 for odd i, a_i = 2(a^i + a+_i) for even i");
    let pa = psums(&data.orbit, 12, dim).expect("power sums");
    let pplus = psums(&data.a_plus, 12, dim).expect("power sums");
    for i in 1..=12 {
        if i % 2 == 1 {
            c.truth(&format!("a_{i} = 0"), pa[i].is_zero());
        } else {
            c.eq(&format!("a_{i}"), &pa[i], &(la.pow(i as u32) + pplus[i].clone()).scale(&int(2)));
        }
    }
    out.push(c.finish());

    let mut c = Check::new("E7.identity.translated_powers", "(tau-1)(a^i) = (a + 3/2)^i - a^i");
    let shifted = &la + &konst(dim, rat(3, 2));
    let (mut p, mut q) = (la.clone(), shifted.clone());
    for i in 1..=12u32 {
        c.eq(&format!("(tau-1) a^{i}"), &tau_minus_one(&p, a), &(&q - &p));
        p = &p * &la;
        q = &q * &shifted;
    }
    out.push(c.finish());

    let mut c = Check::new(
        "E7.identity.half_orbit_recurrence",
        "(tau-1) a+_2i = sum_(j<2i) C(2i,j) 2^(j-2i) a+_j",
    );
    for i in 1..=6 {
        c.eq(
            &format!("(tau-1) a+_{}", 2 * i),
            &tau_minus_one(&pplus[2 * i], a),
            &shifted_tail(&pplus, 2 * i, &rat(1, 2)),
        );
    }
    out.push(c.finish());

    let mut c = Check::new("E7.identity.projected_sums", "b+_i = sum_j C(i,j) (-a/3)^(i-j) a+_j");
    c.detail("reading", "the expansion is over the power sums of A+; the full-orbit sums a_j do not satisfy it");
    let shift = a.scale(&rat(-1, 3));
    let bplus = translate_set(&data.a_plus, &shift);
    for i in 0..=12 {
        c.eq(
            &format!("b+_{i}"),
            &power_sum(&bplus, i, dim).expect("power sum"),
            &binomial_shift(&pplus, i, &lf(&shift)),
        );
    }
    out.push(c.finish());
    out
}

fn identities_e6(sign: Sign) -> Vec<VerifyReport> {
    let data = E6Data::new(sign).expect("E6 data");
    let dim = 8;
    let b = &data.b;
    let lb = lf(b);
    let tag = format!("E6.{}", sign.word());
    let mut out = Vec::new();

    let r2 = power_sum(data.sys.roots(), 2, dim).expect("power sum");
    out.extend(root_sum_reports(
        &tag,
        "(tau^e-1)(r_6,2) = 32(b^e+1)",
        &tau_minus_one(&r2, b),
        &lb,
        32,
    ));

    let mut c = Check::new(format!("{tag}.identity.orbit_split"), "b_i = (b^e)^i + C_i + D_i");
    let pb = psums(&data.orbit, 12, dim).expect("power sums");
    let pc = psums(&data.c6, 12, dim).expect("power sums");
    let pd = psums(&data.d6, 12, dim).expect("power sums");
    for i in 0..=12 {
        c.eq(&format!("b_{i}"), &pb[i], &(lb.pow(i as u32) + pc[i].clone() + pd[i].clone()));
    }
    out.push(c.finish());

    let mut c = Check::new(format!("{tag}.identity.translated_powers"), "(tau^e-1)(b^e)^i = (b^e + 4/3)^i - (b^e)^i");
    let shifted = &lb + &konst(dim, rat(4, 3));
    let (mut p, mut q) = (lb.clone(), shifted.clone());
    for i in 1..=12u32 {
        c.eq(&format!("(tau-1) b^{i}"), &tau_minus_one(&p, b), &(&q - &p));
        p = &p * &lb;
        q = &q * &shifted;
    }
    out.push(c.finish());

    let mut c = Check::new(
        format!("{tag}.identity.split_recurrence"),
        "(tau^e-1)(C_i + D_i) = sum_(j<i) C(i,j) ((-2/3)^(i-j) C_j + (1/3)^(i-j) D_j)",
    );
    let m = Matrix::from_ints(&[&[3, 3], &[-2, 1]]).unwrap();
    c.eq("2x2 rank", &m.rank(), &2);
    for i in 1..=8 {
        let lhs = tau_minus_one(&(&pc[i] + &pd[i]), b);
        let rhs = shifted_tail(&pc, i, &rat(-2, 3)) + shifted_tail(&pd, i, &rat(1, 3));
        c.eq(&format!("(tau-1)(C_{i} + D_{i})"), &lhs, &rhs);
    }
    out.push(c.finish());

    let mut c = Check::new(
        format!("{tag}.identity.projected_sums"),
        "c_i = sum_j C(i,j) (b/2)^(i-j) C_j and d_i = sum_j C(i,j) (-b/4)^(i-j) D_j",
    );
    let half = b.scale(&rat(1, 2));
    let quarter = b.scale(&rat(-1, 4));
    c.eq("C = C6 + b/2", &as_set(&data.c_orbit), &as_set(&translate_set(&data.c6, &half)));
    c.eq("D = D6 - b/4", &as_set(&data.d_orbit), &as_set(&translate_set(&data.d6, &quarter)));
    for i in 0..=8 {
        c.eq(
            &format!("c_{i}"),
            &power_sum(&data.c_orbit, i, dim).expect("power sum"),
            &binomial_shift(&pc, i, &lf(&half)),
        );
        c.eq(
            &format!("d_{i}"),
            &power_sum(&data.d_orbit, i, dim).expect("power sum"),
            &binomial_shift(&pd, i, &lf(&quarter)),
        );
    }
    out.push(c.finish());
    out
}

/// Convenience for callers needing only pass/fail.
pub fn all_pass(reports: &[VerifyReport]) -> bool {
    reports.iter().all(VerifyReport::passed)
}
