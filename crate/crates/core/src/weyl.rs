//! Weyl group actions on exact vectors.
//!
//! A [`WeylWord`] lists indices into a list of generating roots. Words act
//! right to left: the leftmost letter is applied last, so `[i, j]` sends `v`
//! to `s_i(s_j(v))`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Vector};
use crate::roots::RootSystem;

pub const DEFAULT_ORBIT_CAP: usize = 100_000;
pub const DEFAULT_GROUP_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn empty() -> Self {
        WeylWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The inverse element (letters are involutions).
    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// The product `self * other`: `other` acts first.
    pub fn then_after(&self, other: &WeylWord) -> WeylWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }

    /// `s_i * self`.
    pub fn prepend(&self, i: usize) -> WeylWord {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        WeylWord(v)
    }

    pub fn validate(&self, ngens: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i >= ngens) {
            Some(&i) => Err(Error::Parse(format!(
                "word letter {i} out of range for {ngens} generators"
            ))),
            None => Ok(()),
        }
    }

    pub fn apply(&self, generators: &[Vector], v: &Vector) -> Result<Vector> {
        self.validate(generators.len())?;
        let mut x = v.clone();
        for &i in self.0.iter().rev() {
            x = reflect(&generators[i], &x)?;
        }
        Ok(x)
    }

    /// The matrix of the word acting on column vectors of length `dim`.
    pub fn matrix(&self, generators: &[Vector], dim: usize) -> Result<Matrix> {
        self.validate(generators.len())?;
        let mut m = Matrix::identity(dim);
        for &i in self.0.iter().rev() {
            m = reflect_matrix_left(&generators[i], &m)?;
        }
        Ok(m)
    }

    /// Rewrite letters through `map` (letter `i` becomes the word `map[i]`).
    pub fn expand(&self, map: &[WeylWord]) -> WeylWord {
        WeylWord(self.0.iter().flat_map(|&i| map[i].0.iter().copied()).collect())
    }
}

impl From<Vec<usize>> for WeylWord {
    fn from(v: Vec<usize>) -> Self {
        WeylWord(v)
    }
}

/// `s1 s3 s2` with 1-based letters, or `e` for the identity.
impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// `v - 2 (v, alpha) / (alpha, alpha) alpha`.
pub fn reflect(alpha: &Vector, v: &Vector) -> Result<Vector> {
    let norm = alpha.try_dot(alpha)?;
    if norm.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let p = alpha.try_dot(v)?;
    if p.is_zero() {
        return Ok(v.clone());
    }
    let c = Rational::from_integer(2) * p / norm;
    Ok(v.add_scaled(&-c, alpha))
}

fn reflect_matrix_left(alpha: &Vector, m: &Matrix) -> Result<Matrix> {
    // s_alpha M: reflect every column.
    let t = m.transpose();
    let cols = t.rows().iter().map(|c| reflect(alpha, c)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::new(cols)?.transpose())
}

/// Dominant representative with respect to an arbitrary list of simple roots.
pub fn dominant_rep_with(simple: &[Vector], v: &Vector, cap: usize) -> Result<(Vector, WeylWord)> {
    let mut x = v.clone();
    let mut word = WeylWord::empty();
    let mut steps = 0;
    'scan: loop {
        for (i, alpha) in simple.iter().enumerate() {
            if alpha.try_dot(&x)?.is_negative() {
                steps += 1;
                if steps > cap {
                    return Err(Error::IterationCap { cap });
                }
                x = reflect(alpha, &x)?;
                word = word.prepend(i);
                continue 'scan;
            }
        }
        return Ok((x, word));
    }
}

/// The unique dominant element of the orbit of `v`, and a word sending `v` to it.
pub fn dominant_rep(system: &RootSystem, v: &Vector) -> Result<(Vector, WeylWord)> {
    let cap = system.roots().len() * 8 + 16;
    dominant_rep_with(system.simple_roots(), v, cap)
}

/// An orbit with a word from the base to every element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    base: Vector,
    words: BTreeMap<Vector, WeylWord>,
}

impl Orbit {
    /// Rebuild from stored parts; `words` must contain `base`.
    pub fn from_parts(base: Vector, words: BTreeMap<Vector, WeylWord>) -> Result<Self> {
        if !words.contains_key(&base) {
            return Err(Error::Parse("orbit does not contain its base".into()));
        }
        Ok(Orbit { base, words })
    }

    pub fn base(&self) -> &Vector {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.words.contains_key(v)
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = &Vector> {
        self.words.keys()
    }

    pub fn to_vec(&self) -> Vec<Vector> {
        self.words.keys().cloned().collect()
    }

    /// A word `w` with `w . base = v`.
    pub fn word(&self, v: &Vector) -> Option<&WeylWord> {
        self.words.get(v)
    }

    pub fn words(&self) -> &BTreeMap<Vector, WeylWord> {
        &self.words
    }
}

/// Breadth-first closure of `{v}` under the reflections in `generators`.
/// Each layer is expanded in lexicographic order, so parent words are
/// reproducible.
pub fn orbit(generators: &[Vector], v: &Vector, cap: usize) -> Result<Orbit> {
    let mut words = BTreeMap::new();
    words.insert(v.clone(), WeylWord::empty());
    let mut layer = vec![v.clone()];
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for x in &layer {
            let wx = words[x].clone();
            for (i, alpha) in generators.iter().enumerate() {
                let y = reflect(alpha, x)?;
                if !words.contains_key(&y) {
                    if words.len() >= cap {
                        return Err(Error::OrbitCap { cap });
                    }
                    words.insert(y.clone(), wx.prepend(i));
                    next.insert(y);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    Ok(Orbit {
        base: v.clone(),
        words,
    })
}

/// Orbit size without recording words.
pub fn orbit_size(generators: &[Vector], v: &Vector, cap: usize) -> Result<usize> {
    let mut seen: HashSet<Vector> = HashSet::new();
    seen.insert(v.clone());
    let mut stack = vec![v.clone()];
    while let Some(x) = stack.pop() {
        for alpha in generators {
            let y = reflect(alpha, &x)?;
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::OrbitCap { cap });
                }
                seen.insert(y.clone());
                stack.push(y);
            }
        }
    }
    Ok(seen.len())
}

/// Simple roots orthogonal to a dominant `a`; they generate `W_a`.
pub fn stabilizer_simple_roots(system: &RootSystem, a: &Vector) -> Result<Vec<Vector>> {
    if !system.is_dominant(a) {
        return Err(Error::NotDominant(a.to_string()));
    }
    Ok(system
        .simple_roots()
        .iter()
        .filter(|alpha| alpha.dot(a).is_zero())
        .cloned()
        .collect())
}

/// Reflecting roots generating the stabilizer of any `v`, each with a word
/// in the simple reflections of `system` realizing the reflection.
pub fn stabilizer_generators(system: &RootSystem, v: &Vector) -> Result<Vec<(Vector, WeylWord)>> {
    let (dom, w) = dominant_rep(system, v)?;
    let winv = w.inverse();
    let mut out = Vec::new();
    for (i, alpha) in system.simple_roots().iter().enumerate() {
        if alpha.dot(&dom).is_zero() {
            let root = winv.apply(system.simple_roots(), alpha)?;
            out.push((root, winv.then_after(&WeylWord::new(vec![i])).then_after(&w)));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub matrix: Matrix,
    pub word: WeylWord,
}

impl GroupElement {
    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.apply(v)
    }
}

/// All elements of the group generated by the reflections in `generators`,
/// acting on an ambient space of dimension `dim`.
pub fn enumerate_group(generators: &[Vector], dim: usize, cap: usize) -> Result<Vec<GroupElement>> {
    if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
        return Err(Error::Dimension {
            expected: dim,
            found: g.dim(),
        });
    }
    let mut seen: HashSet<Matrix> = HashSet::new();
    let id = Matrix::identity(dim);
    seen.insert(id.clone());
    let mut out = vec![GroupElement {
        matrix: id,
        word: WeylWord::empty(),
    }];
    let mut head = 0;
    while head < out.len() {
        let (m, w) = (out[head].matrix.clone(), out[head].word.clone());
        head += 1;
        for (i, alpha) in generators.iter().enumerate() {
            let next = reflect_matrix_left(alpha, &m)?;
            if seen.contains(&next) {
                continue;
            }
            if out.len() >= cap {
                return Err(Error::GroupCap { cap });
            }
            seen.insert(next.clone());
            out.push(GroupElement {
                matrix: next,
                word: w.prepend(i),
            });
        }
    }
    Ok(out)
}

/// Order of the reflection group generated by `generators`, counted as the
/// orbit of a vector lying on no reflecting hyperplane (the stabilizer of
/// such a vector is trivial).
pub fn group_order(generators: &[Vector], cap: usize) -> Result<usize> {
    let Some(dim) = generators.first().map(Vector::dim) else {
        return Ok(1);
    };
    let roots = root_closure(generators, cap)?;
    for base in 2i64.. {
        let v = Vector::from_ints(&(0..dim).map(|k| base.pow(k as u32)).collect::<Vec<_>>());
        if roots.iter().all(|r| !r.dot(&v).is_zero()) {
            return orbit_size(generators, &v, cap);
        }
        if base > 64 {
            break;
        }
    }
    Err(Error::Resource("no regular vector found".into()))
}

/// Every root of the subsystem generated by `generators`.
pub fn root_closure(generators: &[Vector], cap: usize) -> Result<BTreeSet<Vector>> {
    let mut all = BTreeSet::new();
    for g in generators {
        if !all.contains(g) {
            all.extend(orbit(generators, g, cap)?.to_vec());
        }
    }
    Ok(all)
}

/// Disjoint blocks, each sorted, ordered by their least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPartition {
    pub blocks: Vec<Vec<Vector>>,
}

impl OrbitPartition {
    /// Block sizes in ascending order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    pub fn block_of(&self, v: &Vector) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(v).is_ok())
    }

    /// Blocks as sets, for order-free comparison.
    pub fn as_sets(&self) -> BTreeSet<BTreeSet<Vector>> {
        self.blocks.iter().map(|b| b.iter().cloned().collect()).collect()
    }
}

/// Partition a finite stable set into orbits of the group generated by
/// `generators`.
pub fn orbit_partition(generators: &[Vector], set: &[Vector]) -> Result<OrbitPartition> {
    let members: BTreeSet<Vector> = set.iter().cloned().collect();
    let mut assigned: HashSet<Vector> = HashSet::new();
    let mut blocks = Vec::new();
    for x in &members {
        if assigned.contains(x) {
            continue;
        }
        let mut block = BTreeSet::new();
        block.insert(x.clone());
        let mut stack = vec![x.clone()];
        while let Some(y) = stack.pop() {
            for alpha in generators {
                let z = reflect(alpha, &y)?;
                if !members.contains(&z) {
                    return Err(Error::NotStable(z.to_string()));
                }
                if block.insert(z.clone()) {
                    stack.push(z);
                }
            }
        }
        assigned.extend(block.iter().cloned());
        blocks.push(block.into_iter().collect::<Vec<_>>());
    }
    Ok(OrbitPartition { blocks })
}

/// Whether `v` and `w` are conjugate, with a word sending `w` to `v`.
pub fn conjugate(system: &RootSystem, v: &Vector, w: &Vector) -> Result<(bool, Option<WeylWord>)> {
    conjugate_with(system.simple_roots(), v, w, system.roots().len() * 8 + 16)
}

pub fn conjugate_with(
    simple: &[Vector],
    v: &Vector,
    w: &Vector,
    cap: usize,
) -> Result<(bool, Option<WeylWord>)> {
    let (dv, wv) = dominant_rep_with(simple, v, cap)?;
    let (dw, ww) = dominant_rep_with(simple, w, cap)?;
    if dv == dw {
        Ok((true, Some(wv.inverse().then_after(&ww))))
    } else {
        Ok((false, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystemLabel;

    fn sys(label: RootSystemLabel) -> RootSystem {
        RootSystem::build(label).unwrap()
    }

    #[test]
    fn reflect_examples() {
        let alpha = Vector::from_ints(&[1, -1, 0, 0]);
        assert_eq!(reflect(&alpha, &alpha).unwrap(), -&alpha);
        assert_eq!(
            reflect(&alpha, &Vector::from_ints(&[1, 0, 0, 0])).unwrap(),
            Vector::from_ints(&[0, 1, 0, 0])
        );
        assert!(matches!(reflect(&Vector::zeros(4), &alpha), Err(Error::ZeroRoot)));
        let a8 = Vector::scaled(2, &[-1; 8]);
        let m = Matrix::reflection(&a8).unwrap();
        for i in 0..8 {
            let e = Vector::unit(8, i);
            assert_eq!(reflect(&a8, &e).unwrap(), m.apply(&e));
        }
    }

    #[test]
    fn dominant_examples() {
        let b3 = sys(RootSystemLabel::b(3));
        let (d, w) = dominant_rep(&b3, &Vector::from_ints(&[-1, 0, 0])).unwrap();
        assert_eq!(d, Vector::from_ints(&[1, 0, 0]));
        assert_eq!(w.apply(b3.simple_roots(), &Vector::from_ints(&[-1, 0, 0])).unwrap(), d);
        let (d, w) = dominant_rep(&b3, &d).unwrap();
        assert!(w.is_empty() && d == Vector::from_ints(&[1, 0, 0]));

        let e7 = sys(RootSystemLabel::e7());
        let a = e7.minuscule_coweights()[0].vector.clone();
        assert_eq!(dominant_rep(&e7, &-&a).unwrap().0, a);
    }

    #[test]
    fn orbit_sizes() {
        let e7 = sys(RootSystemLabel::e7());
        let a = e7.minuscule_coweights()[0].vector.clone();
        let o = orbit(e7.simple_roots(), &a, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(o.len(), 56);
        for x in o.elements() {
            assert_eq!(&o.word(x).unwrap().apply(e7.simple_roots(), &a).unwrap(), x);
        }
        let e6 = sys(RootSystemLabel::e6());
        let bp = e6.coweight("b+").unwrap().vector.clone();
        assert_eq!(orbit(e6.simple_roots(), &bp, DEFAULT_ORBIT_CAP).unwrap().len(), 27);
        for n in 2..=5 {
            let bn = sys(RootSystemLabel::b(n));
            let b = bn.minuscule_coweights()[0].vector.clone();
            assert_eq!(orbit(bn.simple_roots(), &b, DEFAULT_ORBIT_CAP).unwrap().len(), 2 * n);
        }
        assert!(matches!(
            orbit(e7.simple_roots(), &a, 10),
            Err(Error::OrbitCap { cap: 10 })
        ));
    }

    #[test]
    fn stabilizers() {
        let a3 = sys(RootSystemLabel::a(3));
        let a2 = a3.minuscule_coweights()[1].vector.clone();
        let st = stabilizer_simple_roots(&a3, &a2).unwrap();
        assert_eq!(st, vec![a3.simple_roots()[0].clone(), a3.simple_roots()[2].clone()]);
        let e7 = sys(RootSystemLabel::e7());
        let a = e7.minuscule_coweights()[0].vector.clone();
        assert_eq!(stabilizer_simple_roots(&e7, &a).unwrap(), e7.simple_roots()[1..].to_vec());
        let regular = Vector::from_ints(&[3, 1, -1, -3]);
        assert!(stabilizer_simple_roots(&a3, &regular).unwrap().is_empty());
        assert!(matches!(
            stabilizer_simple_roots(&a3, &-&a2),
            Err(Error::NotDominant(_))
        ));
        // conjugated generators fix a non-dominant vector
        let v = -&a2;
        for (root, word) in stabilizer_generators(&a3, &v).unwrap() {
            assert!(root.dot(&v).is_zero());
            let m = word.matrix(a3.simple_roots(), 4).unwrap();
            assert_eq!(m, Matrix::reflection(&root).unwrap());
        }
    }

    #[test]
    fn group_enumeration() {
        let a2 = sys(RootSystemLabel::a(2));
        let g = enumerate_group(a2.simple_roots(), 3, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.len(), 6);
        for e in &g {
            assert!(e.matrix.is_orthogonal());
            assert_eq!(e.word.matrix(a2.simple_roots(), 3).unwrap(), e.matrix);
        }
        let d4 = sys(RootSystemLabel::d(4));
        assert_eq!(enumerate_group(d4.simple_roots(), 4, DEFAULT_GROUP_CAP).unwrap().len(), 192);
        assert_eq!(group_order(d4.simple_roots(), DEFAULT_GROUP_CAP).unwrap(), 192);
        assert!(matches!(
            enumerate_group(d4.simple_roots(), 4, 50),
            Err(Error::GroupCap { cap: 50 })
        ));
    }

    #[test]
    fn partitions() {
        let e7 = sys(RootSystemLabel::e7());
        let a = e7.minuscule_coweights()[0].vector.clone();
        let o = orbit(e7.simple_roots(), &a, DEFAULT_ORBIT_CAP).unwrap();
        let p = orbit_partition(&e7.simple_roots()[1..], &o.to_vec()).unwrap();
        assert_eq!(p.sizes(), vec![1, 1, 27, 27]);
        let single = orbit_partition(&e7.simple_roots()[1..], &[a.clone()]).unwrap();
        assert_eq!(single.sizes(), vec![1]);
        let unstable = orbit_partition(e7.simple_roots(), &[a.clone()]);
        assert!(matches!(unstable, Err(Error::NotStable(_))));
    }

    #[test]
    fn conjugacy() {
        let d4 = sys(RootSystemLabel::d(4));
        let c = d4.coweight("c").unwrap().vector.clone();
        let cp = d4.coweight("c'").unwrap().vector.clone();
        assert!(!conjugate(&d4, &c, &cp).unwrap().0);
        let b4 = sys(RootSystemLabel::b(4));
        let (flag, word) = conjugate(&b4, &c, &cp).unwrap();
        assert!(flag);
        assert_eq!(word.unwrap().apply(b4.simple_roots(), &cp).unwrap(), c);

        let e7 = sys(RootSystemLabel::e7());
        let a = e7.minuscule_coweights()[0].vector.clone();
        let (flag, word) = conjugate(&e7, &a, &-&a).unwrap();
        assert!(flag);
        assert_eq!(word.unwrap().apply(e7.simple_roots(), &-&a).unwrap(), a);
        let (flag, word) = conjugate(&e7, &a, &a).unwrap();
        assert!(flag && word.unwrap().is_empty());
    }
}
