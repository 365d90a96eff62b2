//! Root systems of types A, B, C, D, E6 and E7 in explicit coordinates.
//!
//! Types A_n lives in `R^{n+1}` (orthogonal to `e = (1, ..., 1)`), B/C/D in
//! `R^n`, and E7 ⊃ E6 inside `R^8` as sublattices of E8: E7 is the part
//! orthogonal to `(1, ..., 1)` and E6 the part of E7 orthogonal to the
//! minuscule coweight `a` of E7. Every printed vector below is a literal
//! fixture, so the whole chain stays in the coordinates used for the
//! invariant-theoretic identities.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl Family {
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            Family::E6 => 6,
            Family::E7 => 7,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            other => Err(Error::Parse(format!(
                "unknown family {other:?} (expected A, B, C, D, E6 or E7)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemLabel {
    family: Family,
    rank: usize,
}

impl RootSystemLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if let Some(r) = family.fixed_rank() {
            if rank != r {
                return Err(Error::Construction(format!("{family} has rank {r}, not {rank}")));
            }
        }
        if rank < family.min_rank() {
            return Err(Error::Construction(format!(
                "{family}_{rank}: rank must be at least {}",
                family.min_rank()
            )));
        }
        Ok(RootSystemLabel { family, rank })
    }

    /// Label for a family, taking the fixed rank for E6/E7 when `rank` is `None`.
    pub fn parse_parts(family: Family, rank: Option<usize>) -> Result<Self> {
        match (family.fixed_rank(), rank) {
            (Some(r), None) => Self::new(family, r),
            (_, Some(r)) => Self::new(family, r),
            (None, None) => Err(Error::Construction(format!("family {family} needs a rank"))),
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("valid A_n")
    }
    pub fn b(n: usize) -> Self {
        Self::new(Family::B, n).expect("valid B_n")
    }
    pub fn c(n: usize) -> Self {
        Self::new(Family::C, n).expect("valid C_n")
    }
    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("valid D_n")
    }
    pub fn e6() -> Self {
        RootSystemLabel { family: Family::E6, rank: 6 }
    }
    pub fn e7() -> Self {
        RootSystemLabel { family: Family::E7, rank: 7 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for RootSystemLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::E6 | Family::E7 => write!(f, "{}", self.family),
            _ => write!(f, "{}{}", self.family, self.rank),
        }
    }
}

impl FromStr for RootSystemLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        if t == "E6" || t == "E7" {
            return Self::parse_parts(t.parse()?, None);
        }
        let (fam, rank) = t.split_at(1.min(t.len()));
        let family: Family = fam.parse()?;
        let rank = rank
            .trim_start_matches('_')
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad root system label {s:?}")))?;
        Self::new(family, rank)
    }
}

impl Serialize for RootSystemLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootSystemLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A named minuscule coweight, dual to the simple root at `node`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coweight {
    pub name: String,
    pub vector: Vector,
    pub node: usize,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    label: RootSystemLabel,
    ambient_dim: usize,
    roots: Vec<Vector>,
    root_set: HashSet<Vector>,
    positive_roots: Vec<Vector>,
    simple_roots: Vec<Vector>,
    simple_root_names: Vec<String>,
    highest_root: Vector,
    highest_root_multiplicities: Vec<i64>,
    minuscule_coweights: Vec<Coweight>,
    fundamental_coweights: Vec<Vector>,
    span_normals: Vec<Vector>,
    gram_inverse: Matrix,
    weyl_order: BigUint,
}

fn signed_pairs(n: usize, roots: &mut Vec<Vector>) {
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0i64; n];
                v[i] = si;
                v[j] = sj;
                roots.push(Vector::from_ints(&v));
            }
        }
    }
}

fn e8_roots() -> Vec<Vector> {
    let mut roots = Vec::with_capacity(240);
    signed_pairs(8, &mut roots);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            let nums: Vec<i64> = (0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            roots.push(Vector::scaled(2, &nums));
        }
    }
    roots
}

fn diff(n: usize, i: usize, j: usize) -> Vector {
    let mut v = vec![0i64; n];
    v[i] = 1;
    v[j] = -1;
    Vector::from_ints(&v)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

/// The E7 minuscule coweight `a = 1/2 (3/2, -1/2, ..., -1/2, 3/2)`.
pub fn e7_coweight() -> Vector {
    Vector::scaled(4, &[3, -1, -1, -1, -1, -1, -1, 3])
}

/// `b^+ = 1/3 (-3/2, 5/2, -1/2, ..., -1/2, 3/2)`.
pub fn e6_coweight_plus() -> Vector {
    Vector::scaled(6, &[-3, 5, -1, -1, -1, -1, -1, 3])
}

/// `b^- = 1/3 (-3/2, 1/2, ..., 1/2, -5/2, 3/2)`.
pub fn e6_coweight_minus() -> Vector {
    Vector::scaled(6, &[-3, 1, 1, 1, 1, 1, -5, 3])
}

/// The simple root `alpha_7' = 1/2 (-1, -1, -1, -1, 1, 1, 1, 1)` shared by E7 and E6.
pub fn alpha7_prime() -> Vector {
    Vector::scaled(2, &[-1, -1, -1, -1, 1, 1, 1, 1])
}

impl RootSystem {
    pub fn build(label: RootSystemLabel) -> Result<RootSystem> {
        let n = label.rank;
        let (dim, roots, simple, names, coweights, normals, order): (
            usize,
            Vec<Vector>,
            Vec<Vector>,
            Vec<String>,
            Vec<Coweight>,
            Vec<Vector>,
            BigUint,
        ) = match label.family {
            Family::A => {
                let dim = n + 1;
                let mut roots = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        if i != j {
                            roots.push(diff(dim, i, j));
                        }
                    }
                }
                let simple = (0..n).map(|i| diff(dim, i, i + 1)).collect();
                let den = (n + 1) as i64;
                let coweights = (1..=n)
                    .map(|r| {
                        let s = n + 1 - r;
                        let nums: Vec<i64> = (0..dim)
                            .map(|i| if i < r { s as i64 } else { -(r as i64) })
                            .collect();
                        Coweight {
                            name: format!("a{r}"),
                            vector: Vector::scaled(den, &nums),
                            node: r - 1,
                        }
                    })
                    .collect();
                (
                    dim,
                    roots,
                    simple,
                    (1..=n).map(|i| format!("alpha{i}")).collect(),
                    coweights,
                    vec![Vector::from_ints(&vec![1; dim])],
                    factorial(n + 1),
                )
            }
            Family::B | Family::C | Family::D => {
                let mut roots = Vec::new();
                signed_pairs(n, &mut roots);
                let long = match label.family {
                    Family::B => Some(1),
                    Family::C => Some(2),
                    _ => None,
                };
                if let Some(k) = long {
                    for i in 0..n {
                        for s in [k, -k] {
                            let mut v = vec![0i64; n];
                            v[i] = s;
                            roots.push(Vector::from_ints(&v));
                        }
                    }
                }
                let mut simple: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                let mut last = vec![0i64; n];
                match label.family {
                    Family::B => last[n - 1] = 1,
                    Family::C => last[n - 1] = 2,
                    _ => {
                        last[n - 2] = 1;
                        last[n - 1] = 1;
                    }
                }
                simple.push(Vector::from_ints(&last));
                let mut names: Vec<String> = (1..n).map(|i| format!("alpha{i}")).collect();
                names.push(format!("alpha{n}{}", label.family));
                let b = Coweight {
                    name: "b".into(),
                    vector: Vector::unit(n, 0),
                    node: 0,
                };
                let c = Coweight {
                    name: "c".into(),
                    vector: Vector::scaled(2, &vec![1; n]),
                    node: n - 1,
                };
                let mut cp = vec![1i64; n];
                cp[n - 1] = -1;
                let c_prime = Coweight {
                    name: "c-prime".into(),
                    vector: Vector::scaled(2, &cp),
                    node: n - 2,
                };
                let (coweights, order) = match label.family {
                    Family::B => (vec![b], factorial(n) << n),
                    Family::C => (vec![c], factorial(n) << n),
                    _ => (vec![b, c, c_prime], factorial(n) << (n - 1)),
                };
                (n, roots, simple, names, coweights, Vec::new(), order)
            }
            Family::E7 | Family::E6 => {
                let ones = Vector::from_ints(&[1; 8]);
                let a = e7_coweight();
                let mut roots: Vec<Vector> =
                    e8_roots().into_iter().filter(|r| r.dot(&ones).is_zero()).collect();
                let mut simple: Vec<Vector> = (0..6).map(|i| diff(8, i, i + 1)).collect();
                simple.push(alpha7_prime());
                let mut names: Vec<String> = (1..=6).map(|i| format!("alpha{i}")).collect();
                names.push("alpha7'".into());
                if label.family == Family::E7 {
                    let coweights = vec![Coweight {
                        name: "a".into(),
                        vector: a,
                        node: 0,
                    }];
                    (8, roots, simple, names, coweights, vec![ones], BigUint::from(2_903_040u32))
                } else {
                    roots.retain(|r| r.dot(&a).is_zero());
                    simple.remove(0);
                    names.remove(0);
                    let coweights = vec![
                        Coweight {
                            name: "b+".into(),
                            vector: e6_coweight_plus(),
                            node: 0,
                        },
                        Coweight {
                            name: "b-".into(),
                            vector: e6_coweight_minus(),
                            node: 4,
                        },
                    ];
                    (8, roots, simple, names, coweights, vec![ones, a], BigUint::from(51_840u32))
                }
            }
        };
        Self::assemble(label, dim, roots, simple, names, coweights, normals, order)
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        label: RootSystemLabel,
        ambient_dim: usize,
        mut roots: Vec<Vector>,
        simple_roots: Vec<Vector>,
        simple_root_names: Vec<String>,
        minuscule_coweights: Vec<Coweight>,
        span_normals: Vec<Vector>,
        weyl_order: BigUint,
    ) -> Result<RootSystem> {
        roots.sort();
        roots.dedup();
        let rank = simple_roots.len();
        let gram = Matrix::new(
            simple_roots
                .iter()
                .map(|a| simple_roots.iter().map(|b| a.dot(b)).collect())
                .collect(),
        )?;
        let gram_inverse = gram
            .inverse()
            .ok_or_else(|| Error::Construction(format!("{label}: simple roots are dependent")))?;
        let fundamental_coweights: Vec<Vector> = (0..rank)
            .map(|i| {
                let mut w = Vector::zeros(ambient_dim);
                for (j, alpha) in simple_roots.iter().enumerate() {
                    w = w.add_scaled(gram_inverse.get(i, j), alpha);
                }
                w
            })
            .collect();
        let mut sys = RootSystem {
            label,
            ambient_dim,
            root_set: roots.iter().cloned().collect(),
            roots,
            positive_roots: Vec::new(),
            simple_roots,
            simple_root_names,
            highest_root: Vector::zeros(ambient_dim),
            highest_root_multiplicities: Vec::new(),
            minuscule_coweights,
            fundamental_coweights,
            span_normals,
            gram_inverse,
            weyl_order,
        };
        let mut best: Option<(Rational, Vec<Rational>, Vector)> = None;
        for r in &sys.roots {
            let coeffs = sys.simple_coordinates(r);
            let nonneg = coeffs.iter().all(|c| !c.is_negative());
            let nonpos = coeffs.iter().all(|c| !c.is_positive());
            if !(nonneg || nonpos) || coeffs.iter().any(|c| !c.is_integer()) {
                return Err(Error::Construction(format!(
                    "{label}: root {r} is not an integral combination of one sign"
                )));
            }
            if nonneg {
                sys.positive_roots.push(r.clone());
                let height: Rational = coeffs.iter().sum();
                if best.as_ref().is_none_or(|(h, _, _)| height > *h) {
                    best = Some((height, coeffs, r.clone()));
                }
            }
        }
        let (_, coeffs, highest) =
            best.ok_or_else(|| Error::Construction(format!("{label}: no roots")))?;
        sys.highest_root = highest;
        sys.highest_root_multiplicities = coeffs
            .iter()
            .map(|c| c.to_i64().expect("integral multiplicity"))
            .collect();
        Ok(sys)
    }

    pub fn label(&self) -> RootSystemLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// All roots in canonical (lexicographic) order.
    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive_roots
    }

    pub fn is_root(&self, v: &Vector) -> bool {
        self.root_set.contains(v)
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn simple_root_names(&self) -> &[String] {
        &self.simple_root_names
    }

    pub fn highest_root(&self) -> &Vector {
        &self.highest_root
    }

    pub fn highest_root_multiplicities(&self) -> &[i64] {
        &self.highest_root_multiplicities
    }

    pub fn minuscule_coweights(&self) -> &[Coweight] {
        &self.minuscule_coweights
    }

    /// Dual basis to the simple roots inside the span of the roots.
    pub fn fundamental_coweights(&self) -> &[Vector] {
        &self.fundamental_coweights
    }

    /// Normals to the span of the roots inside the ambient space
    /// (`e` for A_n; the E8 simple root direction, and `a`, for E7/E6).
    pub fn span_normals(&self) -> &[Vector] {
        &self.span_normals
    }

    pub fn weyl_order(&self) -> &BigUint {
        &self.weyl_order
    }

    /// Summary used by `rootsys info`; roots in lexicographic order.
    pub fn info(&self) -> serde_json::Value {
        let mut roots: Vec<&Vector> = self.roots.iter().collect();
        roots.sort();
        serde_json::json!({
            "label": self.label,
            "ambient_dim": self.ambient_dim,
            "root_count": roots.len(),
            "roots": roots,
            "simple_roots": self.simple_roots,
            "simple_root_names": self.simple_root_names(),
            "highest_root": self.highest_root,
            "highest_root_multiplicities": self.highest_root_multiplicities(),
            "minuscule_coweights": self.minuscule_coweights.iter().map(|c| serde_json::json!({
                "name": c.name,
                "node": c.node + 1,
                "vector": c.vector,
                "q": c.vector.dot(&c.vector) / Rational::from_integer(2),
            })).collect::<Vec<_>>(),
            "weyl_order": self.weyl_order.to_string(),
        })
    }

    /// Look up a minuscule coweight by name (`"a2"`, `"c-prime"`, `"c'"`,
    /// `"b+"`) or by 1-based index.
    pub fn coweight(&self, name: &str) -> Result<&Coweight> {
        let key = name.trim().replace('\'', "-prime");
        let key = match key.as_str() {
            "bplus" | "b-plus" => "b+".to_string(),
            "bminus" | "b-minus" => "b-".to_string(),
            "cprime" => "c-prime".to_string(),
            _ => key,
        };
        if let Some(c) = self.minuscule_coweights.iter().find(|c| c.name == key) {
            return Ok(c);
        }
        if let Ok(i) = key.parse::<usize>() {
            if (1..=self.minuscule_coweights.len()).contains(&i) {
                return Ok(&self.minuscule_coweights[i - 1]);
            }
        }
        Err(Error::UnknownCoweight(name.to_string()))
    }

    /// Resolve a coweight name or a literal vector (`"1/2,1/2,1/2"`).
    pub fn resolve_vector(&self, input: &str) -> Result<Vector> {
        if let Ok(c) = self.coweight(input) {
            return Ok(c.vector.clone());
        }
        if input.trim() == "highest-root" {
            return Ok(self.highest_root.clone());
        }
        let v: Vector = input.parse().map_err(|_| Error::UnknownCoweight(input.to_string()))?;
        if v.dim() != self.ambient_dim {
            return Err(Error::Dimension {
                expected: self.ambient_dim,
                found: v.dim(),
            });
        }
        Ok(v)
    }

    /// Coordinates of `v` in the basis of simple roots (valid for `v` in the
    /// span of the roots).
    pub fn simple_coordinates(&self, v: &Vector) -> Vec<Rational> {
        let pairings: Vec<Rational> = self.simple_roots.iter().map(|a| a.dot(v)).collect();
        (0..self.rank())
            .map(|i| {
                pairings
                    .iter()
                    .enumerate()
                    .map(|(j, p)| self.gram_inverse.get(i, j) * p)
                    .sum()
            })
            .collect()
    }

    pub fn is_dominant(&self, v: &Vector) -> bool {
        self.simple_roots.iter().all(|a| !a.dot(v).is_negative())
    }

    pub fn in_span(&self, v: &Vector) -> bool {
        self.span_normals.iter().all(|n| n.dot(v).is_zero())
    }

    /// The set of values `(alpha, v)` over all roots.
    pub fn pairing_values(&self, v: &Vector) -> BTreeSet<Rational> {
        self.roots.iter().map(|r| r.dot(v)).collect()
    }

    /// Checks that every simple reflection permutes the roots.
    pub fn reflections_permute_roots(&self) -> bool {
        self.simple_roots.iter().all(|alpha| {
            let f = Rational::from_integer(2) / alpha.dot(alpha);
            self.roots.iter().all(|r| {
                let c = &f * &r.dot(alpha);
                self.is_root(&r.add_scaled(&-c, alpha))
            })
        })
    }

    /// Checks that every root reflection permutes the roots (quadratic in |R|).
    pub fn all_reflections_permute_roots(&self) -> bool {
        self.positive_roots.iter().all(|alpha| {
            let f = Rational::from_integer(2) / alpha.dot(alpha);
            self.roots.iter().all(|r| {
                let c = &f * &r.dot(alpha);
                self.is_root(&r.add_scaled(&-c, alpha))
            })
        })
    }

    /// `n(n+1)`, `2n^2`, `2n(n-1)`, 72 or 126.
    pub fn classical_root_count(label: RootSystemLabel) -> usize {
        let n = label.rank;
        match label.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E6 => 72,
            Family::E7 => 126,
        }
    }
}

/// Whether some positive multiple of `v` pairs with every root in `{0, ±1}`
/// (and with at least one root nontrivially). Returns that multiple.
///
/// Vectors with a component outside the span of the roots are rejected.
pub fn is_minuscule(system: &RootSystem, v: &Vector) -> (bool, Option<Vector>) {
    if v.is_zero() || !system.in_span(v) {
        return (false, None);
    }
    let values = system.pairing_values(v);
    let max = values.iter().map(Rational::abs).max().unwrap_or_else(Rational::zero);
    if max.is_zero() {
        return (false, None);
    }
    if values.iter().all(|p| p.is_zero() || p.abs() == max) {
        (true, Some(v.scale(&max.recip())))
    } else {
        (false, None)
    }
}

/// The roots orthogonal to a fixed vector, with a simple system inherited
/// from the parent's positivity.
#[derive(Clone, Debug)]
pub struct SubSystem {
    pub fixed_vector: Vector,
    pub roots: Vec<Vector>,
    pub positive_roots: Vec<Vector>,
    pub simple_roots: Vec<Vector>,
}

pub fn orthogonal_subsystem(system: &RootSystem, v: &Vector) -> SubSystem {
    let roots: Vec<Vector> = system.roots().iter().filter(|r| r.dot(v).is_zero()).cloned().collect();
    let positive: Vec<Vector> = system
        .positive_roots()
        .iter()
        .filter(|r| r.dot(v).is_zero())
        .cloned()
        .collect();
    let pos_set: HashSet<&Vector> = positive.iter().collect();
    let mut simple: Vec<(Rational, Vector)> = positive
        .iter()
        .filter(|beta| {
            !positive.iter().any(|gamma| {
                let rest = *beta - gamma;
                pos_set.contains(&rest)
            })
        })
        .map(|beta| (system.simple_coordinates(beta).iter().sum(), beta.clone()))
        .collect();
    simple.sort();
    SubSystem {
        fixed_vector: v.clone(),
        roots,
        positive_roots: positive,
        simple_roots: simple.into_iter().map(|(_, b)| b).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn set(v: &[Vector]) -> BTreeSet<Vector> {
        v.iter().cloned().collect()
    }

    #[test]
    fn labels() {
        assert!(RootSystemLabel::new(Family::B, 1).is_err());
        assert!(RootSystemLabel::new(Family::D, 2).is_err());
        assert!(RootSystemLabel::new(Family::E7, 6).is_err());
        assert!(RootSystemLabel::new(Family::A, 0).is_err());
        assert_eq!("a3".parse::<RootSystemLabel>().unwrap(), RootSystemLabel::a(3));
        assert_eq!("E7".parse::<RootSystemLabel>().unwrap(), RootSystemLabel::e7());
        assert_eq!("D_4".parse::<RootSystemLabel>().unwrap(), RootSystemLabel::d(4));
        assert_eq!(RootSystemLabel::c(5).to_string(), "C5");
        assert!("F4".parse::<RootSystemLabel>().is_err());
    }

    #[test]
    fn e7_construction() {
        let e7 = RootSystem::build(RootSystemLabel::e7()).unwrap();
        assert_eq!(e7.roots().len(), 126);
        assert_eq!(e7.highest_root_multiplicities(), &[1, 2, 3, 4, 3, 2, 2]);
        let a = &e7.minuscule_coweights()[0];
        assert_eq!(a.vector, Vector::scaled(4, &[3, -1, -1, -1, -1, -1, -1, 3]));
        assert_eq!(a.vector.q(), rat(3, 4));
        assert_eq!(e7.fundamental_coweights()[0], a.vector);
    }

    #[test]
    fn type_a_coweights() {
        let a3 = RootSystem::build(RootSystemLabel::a(3)).unwrap();
        let a2 = &a3.minuscule_coweights()[1].vector;
        assert_eq!(a2.q(), rat(1, 2));
        for n in 1..=6usize {
            let sys = RootSystem::build(RootSystemLabel::a(n)).unwrap();
            for (idx, cw) in sys.minuscule_coweights().iter().enumerate() {
                let r = idx + 1;
                let s = n + 1 - r;
                assert_eq!(cw.vector.q(), rat((r * s) as i64, 2 * (n as i64 + 1)));
                assert_eq!(cw.vector, sys.fundamental_coweights()[cw.node]);
            }
        }
    }

    #[test]
    fn d4_coweights() {
        let d4 = RootSystem::build(RootSystemLabel::d(4)).unwrap();
        let names: Vec<&str> = d4.minuscule_coweights().iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["b", "c", "c-prime"]);
        let vs: Vec<Vector> = d4.minuscule_coweights().iter().map(|c| c.vector.clone()).collect();
        assert_eq!(vs[0], Vector::from_ints(&[1, 0, 0, 0]));
        assert_eq!(vs[1], Vector::scaled(2, &[1, 1, 1, 1]));
        assert_eq!(vs[2], Vector::scaled(2, &[1, 1, 1, -1]));
        assert!(vs.iter().all(|v| v.q() == rat(1, 2)));
        assert_eq!(d4.coweight("c'").unwrap().name, "c-prime");
        assert_eq!(d4.coweight("2").unwrap().name, "c");
        assert!(d4.coweight("z").is_err());
    }

    #[test]
    fn minuscule_detection() {
        let a3 = RootSystem::build(RootSystemLabel::a(3)).unwrap();
        let a1 = a3.minuscule_coweights()[0].vector.clone();
        let (flag, norm) = is_minuscule(&a3, &a1.scale(&rat(2, 1)));
        assert!(flag);
        assert_eq!(norm.unwrap(), a1);

        let d4 = RootSystem::build(RootSystemLabel::d(4)).unwrap();
        let b = &d4.minuscule_coweights()[0].vector;
        let c = &d4.minuscule_coweights()[1].vector;
        assert_eq!(is_minuscule(&d4, &(b + c)), (false, None));
        assert_eq!(is_minuscule(&d4, &Vector::zeros(4)), (false, None));

        let e7 = RootSystem::build(RootSystemLabel::e7()).unwrap();
        let a = e7.minuscule_coweights()[0].vector.clone();
        assert_eq!(is_minuscule(&e7, &a), (true, Some(a.clone())));
        // off the span
        assert!(!is_minuscule(&a3, &Vector::from_ints(&[1, 1, 1, 1])).0);
    }

    #[test]
    fn orthogonal_subsystems() {
        let e7 = RootSystem::build(RootSystemLabel::e7()).unwrap();
        let a = e7.minuscule_coweights()[0].vector.clone();
        let sub = orthogonal_subsystem(&e7, &a);
        assert_eq!(sub.roots.len(), 72);
        assert_eq!(set(&sub.simple_roots), set(&e7.simple_roots()[1..]));

        let e6 = RootSystem::build(RootSystemLabel::e6()).unwrap();
        assert_eq!(set(&sub.roots), set(e6.roots()));
        let bp = e6.coweight("b+").unwrap().vector.clone();
        let d5 = orthogonal_subsystem(&e6, &bp);
        // brute-force count
        let brute = e6.roots().iter().filter(|r| r.dot(&bp).is_zero()).count();
        assert_eq!(brute, 40);
        assert_eq!(d5.roots.len(), 40);
        assert_eq!(d5.simple_roots.len(), 5);

        let a3 = RootSystem::build(RootSystemLabel::a(3)).unwrap();
        let generic = Vector::from_ints(&[3, 1, -1, -3]);
        let empty = orthogonal_subsystem(&a3, &generic);
        assert!(empty.roots.is_empty() && empty.simple_roots.is_empty());
    }
}
