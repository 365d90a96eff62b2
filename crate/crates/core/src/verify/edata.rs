//! Named sets inside `V8` for E7 ⊃ E6 ⊃ E5^ε.

use crate::error::Result;
use crate::exact::{rat, Rational, Vector};
use crate::roots::{RootSystem, RootSystemLabel};

use super::common::{build, orbit_vec, pairing_level, translate_set};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }

    pub fn value(self) -> Rational {
        match self {
            Sign::Plus => rat(1, 1),
            Sign::Minus => rat(-1, 1),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn word(self) -> &'static str {
        match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        }
    }
}

pub struct E7Data {
    pub sys: RootSystem,
    pub a: Vector,
    /// The 56-element orbit of `a`.
    pub orbit: Vec<Vector>,
    pub a_plus: Vec<Vector>,
    pub a_minus: Vec<Vector>,
    /// Roots pairing to `+1` with `a`.
    pub r_plus: Vec<Vector>,
}

impl E7Data {
    pub fn new() -> Result<Self> {
        let sys = build(RootSystemLabel::e7());
        let a = sys.minuscule_coweights()[0].vector.clone();
        let orbit = orbit_vec(sys.simple_roots(), &a)?;
        let a_plus = pairing_level(&orbit, &a, &rat(1, 2));
        let a_minus = pairing_level(&orbit, &a, &rat(-1, 2));
        let r_plus = pairing_level(sys.roots(), &a, &rat(1, 1));
        Ok(E7Data {
            sys,
            a,
            orbit,
            a_plus,
            a_minus,
            r_plus,
        })
    }
}

pub struct E6Data {
    pub sign: Sign,
    pub sys: RootSystem,
    /// The E7 coweight `a`, normal to `V6` inside `V7`.
    pub a: Vector,
    pub b: Vector,
    /// The 27-element orbit of `b^ε`.
    pub orbit: Vec<Vector>,
    /// `A^ε ⊂ A`.
    pub a_eps: Vec<Vector>,
    /// `a^ε = b^ε + ε a / 3`.
    pub a_point: Vector,
    pub c6: Vec<Vector>,
    pub d6: Vec<Vector>,
    pub c_vec: Vector,
    pub d_vec: Vector,
    /// `W5^ε`-orbits of `c^ε` and `d^ε`.
    pub c_orbit: Vec<Vector>,
    pub d_orbit: Vec<Vector>,
    /// Printed base of `R5^ε`.
    pub sub_base: Vec<Vector>,
    /// The simple roots of `R6` orthogonal to `b^ε`.
    pub stabilizer: Vec<Vector>,
}

pub fn c_eps(sign: Sign) -> Vector {
    match sign {
        Sign::Plus => Vector::scaled(4, &[-1, -1, 1, 1, 1, 1, -3, 1]),
        Sign::Minus => Vector::scaled(4, &[-1, 3, -1, -1, -1, -1, 1, 1]),
    }
}

pub fn d_eps(sign: Sign) -> Vector {
    match sign {
        Sign::Plus => Vector::scaled(8, &[-3, -3, 7, -1, -1, -1, -1, 3]),
        Sign::Minus => Vector::scaled(8, &[-3, 1, 1, 1, 1, -7, 3, 3]),
    }
}

impl E6Data {
    pub fn new(sign: Sign) -> Result<Self> {
        let sys = build(RootSystemLabel::e6());
        let a = crate::roots::e7_coweight();
        let name = match sign {
            Sign::Plus => "b+",
            Sign::Minus => "b-",
        };
        let b = sys.coweight(name)?.vector.clone();
        let orbit = orbit_vec(sys.simple_roots(), &b)?;
        let third = a.scale(&(sign.value() * rat(1, 3)));
        let a_eps = translate_set(&orbit, &third);
        let a_point = &b + &third;
        let c6 = pairing_level(&orbit, &b, &rat(-2, 3));
        let d6 = pairing_level(&orbit, &b, &rat(1, 3));
        let idx: &[usize] = match sign {
            Sign::Plus => &[1, 2, 3, 4, 5],
            Sign::Minus => &[0, 1, 2, 3, 5],
        };
        let sub_base: Vec<Vector> = idx.iter().map(|&i| sys.simple_roots()[i].clone()).collect();
        let stabilizer: Vec<Vector> = sys
            .simple_roots()
            .iter()
            .filter(|r| r.dot(&b).is_zero())
            .cloned()
            .collect();
        let c_vec = c_eps(sign);
        let d_vec = d_eps(sign);
        let c_orbit = orbit_vec(&stabilizer, &c_vec)?;
        let d_orbit = orbit_vec(&stabilizer, &d_vec)?;
        Ok(E6Data {
            sign,
            sys,
            a,
            b,
            orbit,
            a_eps,
            a_point,
            c6,
            d6,
            c_vec,
            d_vec,
            c_orbit,
            d_orbit,
            sub_base,
            stabilizer,
        })
    }
}
