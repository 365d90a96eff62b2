use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A vector of exact rationals in some ambient space.
///
/// Equality, hashing and ordering are all on the canonical coordinates, so
/// vectors can key orbit sets directly. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    /// `(1/den) * (nums...)`.
    pub fn scaled(den: i64, nums: &[i64]) -> Self {
        Vector(nums.iter().map(|&n| Rational::new(n, den)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// Standard inner product. Panics on a length mismatch; use
    /// [`Vector::try_dot`] where the lengths are not already known to agree.
    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot product of vectors with different lengths");
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn try_dot(&self, other: &Vector) -> Result<Rational> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self.dot(other))
    }

    /// The quadratic form `q(v) = (v, v) / 2`.
    pub fn q(&self) -> Rational {
        self.dot(self) / Rational::from_integer(2)
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return self.clone();
        }
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| if y.is_zero() { x.clone() } else { x + &(c * y) })
                .collect(),
        )
    }

    /// Least common multiple of the coordinate denominators.
    pub fn common_denominator(&self) -> num_bigint::BigInt {
        use num_integer::Integer;
        self.0
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(&x.denom()))
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(v: Vec<Rational>) -> Self {
        Vector(v)
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `1,-1/2,0`, `(1, -1/2, 0)` or a JSON array of strings or numbers.
impl FromStr for Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
            .unwrap_or(t);
        if inner.trim().is_empty() {
            return Err(Error::Parse(format!("empty vector {s:?}")));
        }
        inner
            .split(',')
            .map(|c| {
                let c = c.trim().trim_matches('"');
                c.parse::<Rational>().map_err(|e| Error::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Vector)
    }
}

/// Exact standard inner product with a length check.
pub fn dot(u: &Vector, v: &Vector) -> Result<Rational> {
    u.try_dot(v)
}
