//! Simultaneous conjugacy of triangles `a + b + c = 0` with `a` minuscule.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, Vector};
use crate::roots::{is_minuscule, RootSystem, RootSystemLabel};
use crate::weyl::{conjugate, orbit, stabilizer_generators, WeylWord, DEFAULT_ORBIT_CAP};

use super::report::{Check, VerifyReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangle {
    pub a: Vector,
    pub b: Vector,
    pub c: Vector,
}

impl Triangle {
    /// The triangle with sides `a`, `b` and `c = -a - b`.
    pub fn new(a: Vector, b: Vector) -> Self {
        let c = -&(&a + &b);
        Triangle { a, b, c }
    }

    pub fn from_parts(a: Vector, b: Vector, c: Vector) -> Result<Self> {
        let t = Triangle { a, b, c };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let sum = &(&self.a + &self.b) + &self.c;
        if !sum.is_zero() {
            return Err(Error::Construction(format!("a + b + c = {sum}, not zero")));
        }
        Ok(())
    }

    pub fn apply(&self, sys: &RootSystem, w: &WeylWord) -> Result<Triangle> {
        let g = sys.simple_roots();
        Ok(Triangle {
            a: w.apply(g, &self.a)?,
            b: w.apply(g, &self.b)?,
            c: w.apply(g, &self.c)?,
        })
    }
}

/// A word `w` with `w t2 = t`, or the reason none is produced.
pub fn triangle_witness(sys: &RootSystem, t: &Triangle, t2: &Triangle) -> Result<WeylWord> {
    t.validate()?;
    t2.validate()?;
    if !is_minuscule(sys, &t.a).0 {
        return Err(Error::Unsupported(format!("{} is not colinear to a minuscule coweight", t.a)));
    }
    let mut words = Vec::new();
    for (side, x, y) in [("a", &t.a, &t2.a), ("b", &t.b, &t2.b), ("c", &t.c, &t2.c)] {
        match conjugate(sys, x, y)? {
            (true, Some(w)) => words.push(w),
            _ => return Err(Error::NoWitness(format!("{side} sides are not W-conjugate"))),
        }
    }
    let w1 = words.swap_remove(0);
    let g = sys.simple_roots();
    let b1 = w1.apply(g, &t2.b)?;

    // Search the W_a-orbit of w1 b' for b.
    let stab = stabilizer_generators(sys, &t.a)?;
    let (roots, realize): (Vec<Vector>, Vec<WeylWord>) = stab.into_iter().unzip();
    let orb = orbit(&roots, &b1, DEFAULT_ORBIT_CAP)?;
    let u = orb
        .word(&t.b)
        .ok_or_else(|| Error::SearchExhausted(format!("{} not in the W_a-orbit of {}", t.b, b1)))?
        .expand(&realize);
    let w = u.then_after(&w1);
    if &t2.apply(sys, &w)? != t {
        return Err(Error::Construction("witness failed verification".into()));
    }
    Ok(w)
}

/// A uniformly long random word.
pub fn random_word(rng: &mut impl Rng, ngens: usize, max_len: usize) -> WeylWord {
    let len = rng.gen_range(0..=max_len);
    WeylWord::new((0..len).map(|_| rng.gen_range(0..ngens)).collect())
}

/// A triangle with first side in the orbit of `a` and a random second side
/// in the root lattice with half-integer coefficients, paired with its image
/// under a random word.
pub fn random_pair(sys: &RootSystem, rng: &mut impl Rng, a: &Vector) -> Result<(Triangle, Triangle)> {
    let g = sys.simple_roots();
    // Move a off the dominant chamber too.
    let a = random_word(rng, g.len(), 12).apply(g, a)?;
    let mut b = Vector::zeros(sys.ambient_dim());
    for alpha in g {
        b = b.add_scaled(&Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=2)), alpha);
    }
    let t = Triangle::new(a, b);
    let w = random_word(rng, g.len(), 40);
    let t2 = t.apply(sys, &w)?;
    Ok((t, t2))
}

/// [`random_pair`] from a seed.
pub fn seeded_pair(sys: &RootSystem, a: &Vector, seed: u64) -> Result<(Triangle, Triangle)> {
    random_pair(sys, &mut ChaCha8Rng::seed_from_u64(seed), a)
}

/// Random triangles `t` with minuscule `a`, paired with `w t` for a random
/// word `w`, run through [`triangle_witness`].
pub fn verify_triangles(label: RootSystemLabel, count: usize, seed: u64) -> Result<VerifyReport> {
    let sys = RootSystem::build(label)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Check::new(
        format!("{label}.triangle.round_trip"),
        "componentwise conjugate triangles with a minuscule side are conjugate",
    );
    let coweights = sys.minuscule_coweights();
    let mut found = 0usize;
    let mut max_len = 0usize;
    for _ in 0..count {
        let cw = &coweights[rng.gen_range(0..coweights.len())];
        let scale = Rational::from_integer([1, 2, -1, 3][rng.gen_range(0..4)]);
        let (t, t2) = random_pair(&sys, &mut rng, &cw.vector.scale(&scale))?;
        match triangle_witness(&sys, &t, &t2) {
            Ok(word) => {
                let back = t2.apply(&sys, &word)?;
                if c.eq("witness maps t2 to t", &back, &t) {
                    found += 1;
                }
                max_len = max_len.max(word.len());
            }
            Err(e) => c.error("witness", &e),
        }
    }
    c.detail("instances", count);
    c.detail("witnessed", found);
    c.detail("seed", seed);
    c.detail("longest_witness", max_len);
    c.eq("all instances witnessed", &found, &count);
    Ok(c.finish())
}
