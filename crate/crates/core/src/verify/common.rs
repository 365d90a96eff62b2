use std::collections::BTreeSet;

use crate::error::Result;
use crate::exact::{Rational, Vector};
use crate::poly::{linear_form, power_sum, Polynomial};
use crate::roots::{RootSystem, RootSystemLabel};
use crate::weyl::{orbit, reflect, DEFAULT_ORBIT_CAP};

pub(crate) fn binom(n: usize, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * Rational::from_integer((n - j) as i64) / Rational::from_integer(j as i64 + 1);
    }
    acc
}

pub(crate) fn konst(nvars: usize, c: Rational) -> Polynomial {
    Polynomial::constant(nvars, c)
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub(crate) fn tau_minus_one(f: &Polynomial, a: &Vector) -> Polynomial {
    &f.translate(a) - f
}

/// Power sums of degrees `0..=max`.
pub(crate) fn psums(points: &[Vector], max: usize, nvars: usize) -> Result<Vec<Polynomial>> {
    (0..=max).map(|k| power_sum(points, k, nvars)).collect()
}

/// `sum_{j < i} C(i, j) c^{i-j} sums[j]`: the image of `(tau - 1)` on the
/// degree-`i` power sum of a set on which the translation vector pairs to `c`.
pub(crate) fn shifted_tail(sums: &[Polynomial], i: usize, c: &Rational) -> Polynomial {
    let mut out = Polynomial::zero(sums[0].nvars());
    for (j, s) in sums.iter().enumerate().take(i) {
        out.add_scaled(&(binom(i, j) * c.pow((i - j) as i32)), s);
    }
    out
}

/// `sum_{j <= i} C(i, j) u^{i-j} sums[j]` for a polynomial `u`: the power
/// sum of a set translated by the vector whose linear form is `u`.
pub(crate) fn binomial_shift(sums: &[Polynomial], i: usize, u: &Polynomial) -> Polynomial {
    // Horner in u, so each step multiplies by a linear form only.
    let mut out = Polynomial::zero(u.nvars());
    for (j, s) in sums.iter().enumerate().take(i + 1) {
        out = &out * u;
        out.add_scaled(&binom(i, j), s);
    }
    out
}

pub(crate) fn translate_set(set: &[Vector], by: &Vector) -> Vec<Vector> {
    set.iter().map(|x| x + by).collect()
}

pub(crate) fn as_set(v: &[Vector]) -> BTreeSet<Vector> {
    v.iter().cloned().collect()
}

pub(crate) fn pairing_level(set: &[Vector], v: &Vector, level: &Rational) -> Vec<Vector> {
    set.iter().filter(|x| &x.dot(v) == level).cloned().collect()
}

/// Orthogonal projection of `x` onto the hyperplane `v^⊥`.
pub(crate) fn project_off(x: &Vector, v: &Vector) -> Vector {
    x.add_scaled(&-(x.dot(v) / v.dot(v)), v)
}

/// Whether each reflection maps the set into itself.
pub(crate) fn is_stable(set: &[Vector], reflections: &[Vector]) -> Result<bool> {
    let s = as_set(set);
    for alpha in reflections {
        for x in set {
            if !s.contains(&reflect(alpha, x)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn orbit_vec(generators: &[Vector], v: &Vector) -> Result<Vec<Vector>> {
    Ok(orbit(generators, v, DEFAULT_ORBIT_CAP)?.to_vec())
}

pub(crate) fn build(label: RootSystemLabel) -> RootSystem {
    RootSystem::build(label).expect("labels are validated")
}

pub(crate) fn lf(v: &Vector) -> Polynomial {
    linear_form(v)
}

/// `1/2 (1, ..., 1, -1)` in dimension `n`.
pub(crate) fn c_prime(n: usize) -> Vector {
    let mut v = vec![1i64; n];
    v[n - 1] = -1;
    Vector::scaled(2, &v)
}

/// `1/2 (1, ..., 1)` in dimension `n`.
pub(crate) fn c_half(n: usize) -> Vector {
    Vector::scaled(2, &vec![1; n])
}

/// The `W_n`-orbit `{±e_i}` of `b = e_1`.
pub(crate) fn signed_basis(n: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..n).flat_map(|i| [Vector::unit(n, i), -&Vector::unit(n, i)]).collect();
    out.sort();
    out
}

/// `lhs == c1 * u + c0` for rational `c1 != 0`: returns `(c1, c0)`.
pub(crate) fn affine_in(lhs: &Polynomial, u: &Polynomial) -> Option<(Rational, Rational)> {
    let c0 = lhs.constant_term();
    let rest = lhs - &konst(lhs.nvars(), c0.clone());
    let (m, c) = u.leading()?;
    let c1 = rest.coefficient(m) / c.clone();
    if c1.is_zero() || rest != u.scale(&c1) {
        return None;
    }
    Some((c1, c0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), rat(10, 1));
        assert_eq!(binom(12, 0), rat(1, 1));
        assert_eq!(binom(4, 4), rat(1, 1));
    }

    #[test]
    fn shift_matches_translation() {
        let pts = vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])];
        let by = Vector::scaled(3, &[1, -2]);
        let moved = translate_set(&pts, &by);
        let sums = psums(&pts, 4, 2).unwrap();
        for i in 0..=4 {
            assert_eq!(binomial_shift(&sums, i, &lf(&by)), power_sum(&moved, i, 2).unwrap());
        }
    }
}
