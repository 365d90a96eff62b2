//! Orbit decompositions of minuscule orbits under coweight stabilizers.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;

use crate::exact::{rat, Rational, Vector};
use crate::roots::{is_minuscule, Family, RootSystem, RootSystemLabel};
use crate::weyl::{
    conjugate, enumerate_group, group_order, orbit_partition, root_closure, stabilizer_simple_roots,
    DEFAULT_GROUP_CAP,
};

use super::common::*;
use super::edata::{E6Data, E7Data, Sign};
use super::report::{Check, VerifyReport};

pub fn verify_orbit_structure(label: RootSystemLabel) -> Vec<VerifyReport> {
    let mut out = vec![orbit_stabilizer(label)];
    let n = label.rank();
    match label.family() {
        Family::A => out.extend(orbits_a(n)),
        Family::B => out.push(orbits_b(n)),
        Family::C => out.push(orbits_c(n)),
        Family::D => out.extend(orbits_d(n)),
        Family::E7 => out.push(orbits_e7()),
        Family::E6 => {
            out.extend(Sign::both().into_iter().map(orbits_e6));
            out.push(cardinals_e());
        }
    }
    out
}

/// `|W a| * |W_a| = |W|` for each minuscule coweight.
fn orbit_stabilizer(label: RootSystemLabel) -> VerifyReport {
    let sys = build(label);
    let mut c = Check::new(format!("{label}.orbit.orbit_stabilizer"), "|W a| |W_a| = |W|");
    for cw in sys.minuscule_coweights() {
        let Some(orbit) = c.ok("orbit", orbit_vec(sys.simple_roots(), &cw.vector)) else {
            continue;
        };
        let Some(stab) = c.ok("stabilizer", stabilizer_simple_roots(&sys, &cw.vector)) else {
            continue;
        };
        let Some(order) = c.ok("stabilizer order", group_order(&stab, DEFAULT_GROUP_CAP)) else {
            continue;
        };
        c.detail(&format!("{}.orbit_size", cw.name), orbit.len());
        c.detail(&format!("{}.stabilizer_order", cw.name), order);
        c.eq(
            &format!("{} orbit-stabilizer", cw.name),
            &(BigUint::from(orbit.len()) * BigUint::from(order)),
            sys.weyl_order(),
        );
        c.truth(&format!("{} minuscule", cw.name), is_minuscule(&sys, &cw.vector).0);
    }
    c.finish()
}

fn sizes_of(c: &mut Check, stab: &[Vector], set: &[Vector]) -> Option<Vec<usize>> {
    c.ok("partition", orbit_partition(stab, set)).map(|p| p.sizes())
}

fn orbits_a(n: usize) -> Vec<VerifyReport> {
    let sys = build(RootSystemLabel::a(n));
    let dim = n + 1;
    let a1 = sys.minuscule_coweights()[0].vector.clone();
    let orbit_a = orbit_vec(sys.simple_roots(), &a1).expect("small orbit");
    let mut out = Vec::new();
    for cw in sys.minuscule_coweights() {
        let r = cw.node + 1;
        let s = n + 1 - r;
        let ar = &cw.vector;
        let mut c = Check::new(
            format!("A{n}.r{r}.orbit.stabilizer_split"),
            "A splits under W_a into B' of size r and C' of size s",
        );
        c.eq("|A|", &orbit_a.len(), &(n + 1));
        let stab = stabilizer_simple_roots(&sys, ar).expect("dominant");
        if let Some(sizes) = sizes_of(&mut c, &stab, &orbit_a) {
            let mut want = vec![r, s];
            want.sort();
            c.eq("block sizes", &sizes, &want);
        }
        let lb = Rational::new(s as i64, n as i64 + 1);
        let lc = Rational::new(-(r as i64), n as i64 + 1);
        let bp = pairing_level(&orbit_a, ar, &lb);
        let cp = pairing_level(&orbit_a, ar, &lc);
        c.eq("|B'|", &bp.len(), &r);
        c.eq("|C'|", &cp.len(), &s);

        let b = translate_set(&bp, &ar.scale(&Rational::new(-1, r as i64)));
        let proj_b: Vec<Vector> = bp.iter().map(|x| project_off(x, ar)).collect();
        c.eq("B = proj B'", &as_set(&b), &as_set(&proj_b));
        let mut rep = vec![Rational::zero(); dim];
        rep[0] = Rational::new(r as i64 - 1, r as i64);
        for x in rep.iter_mut().take(r).skip(1) {
            *x = Rational::new(-1, r as i64);
        }
        if let Some(orb) = c.ok("orbit of B rep", orbit_vec(&stab, &Vector::new(rep))) {
            c.eq("B = W_a (r-1, -1, ..., 0)/r", &as_set(&b), &as_set(&orb));
        }

        let cc = translate_set(&cp, &ar.scale(&Rational::new(1, s as i64)));
        let proj_c: Vec<Vector> = cp.iter().map(|x| project_off(x, ar)).collect();
        c.eq("C = proj C'", &as_set(&cc), &as_set(&proj_c));
        let mut rep = vec![Rational::zero(); dim];
        rep[r] = Rational::new(s as i64 - 1, s as i64);
        for x in rep.iter_mut().skip(r + 1) {
            *x = Rational::new(-1, s as i64);
        }
        if let Some(orb) = c.ok("orbit of C rep", orbit_vec(&stab, &Vector::new(rep))) {
            c.eq("C = W_a (0, ..., s-1, -1, ...)/s", &as_set(&cc), &as_set(&orb));
        }
        out.push(c.finish());
    }
    out
}

fn orbits_b(n: usize) -> VerifyReport {
    let sys = build(RootSystemLabel::b(n));
    let b = sys.coweight("b").expect("b").vector.clone();
    let mut c = Check::new(
        format!("B{n}.orbit.stabilizer_split"),
        "B = {b} + {-b} + B' with B' orthogonal to b",
    );
    let orbit = orbit_vec(sys.simple_roots(), &b).expect("orbit");
    c.eq("B = {±e_i}", &as_set(&orbit), &as_set(&signed_basis(n)));
    let stab = stabilizer_simple_roots(&sys, &b).expect("dominant");
    if let Some(sizes) = sizes_of(&mut c, &stab, &orbit) {
        c.eq("block sizes", &sizes, &vec![1, 1, 2 * n - 2]);
    }
    let bprime = pairing_level(&orbit, &b, &Rational::zero());
    c.eq("|B'|", &bprime.len(), &(2 * n - 2));
    if let Some(p) = c.ok("partition", orbit_partition(&stab, &orbit)) {
        c.truth("B' is one block", p.as_sets().contains(&as_set(&bprime)));
    }
    c.finish()
}

/// The split of `B = {±e_i}` by `c = 1/2 (1, ..., 1)` or its conjugate.
fn c_split(c: &mut Check, sys: &RootSystem, cvec: &Vector, stab: &[Vector]) {
    let n = cvec.dim();
    let orbit = signed_basis(n);
    if let Some(sizes) = sizes_of(c, stab, &orbit) {
        c.eq("block sizes", &sizes, &vec![n, n]);
    }
    let plus = pairing_level(&orbit, cvec, &rat(1, 2));
    let minus = pairing_level(&orbit, cvec, &rat(-1, 2));
    c.eq("|B+| + |B-|", &(plus.len() + minus.len()), &(2 * n));
    let neg: Vec<Vector> = plus.iter().map(|x| -x).collect();
    c.eq("B- = -B+", &as_set(&minus), &as_set(&neg));
    let a = translate_set(&plus, &cvec.scale(&Rational::new(-2, n as i64)));
    // e_1 - 2c/n, which is (n-1, -1, ..., -1)/n when c = (1, ..., 1)/2.
    let rep = &Vector::unit(n, 0) + &cvec.scale(&Rational::new(-2, n as i64));
    c.truth("e_1 in B+", plus.contains(&Vector::unit(n, 0)));
    if let Some(orb) = c.ok("orbit of A rep", orbit_vec(stab, &rep)) {
        c.eq("A = B+ - 2c/n = W_c (e_1 - 2c/n)", &as_set(&a), &as_set(&orb));
    }
    c.detail("ambient_roots", sys.roots().len());
}

fn orbits_c(n: usize) -> VerifyReport {
    let sys = build(RootSystemLabel::c(n));
    let cvec = sys.coweight("c").expect("c").vector.clone();
    let mut c = Check::new(format!("C{n}.orbit.stabilizer_split"), "B = B+ + B- at levels ±1/2, B- = -B+");
    c.eq("c = (1, ..., 1)/2", &cvec, &c_half(n));
    let stab = stabilizer_simple_roots(&sys, &cvec).expect("dominant");
    c_split(&mut c, &sys, &cvec, &stab);
    c.finish()
}

fn orbits_d(n: usize) -> Vec<VerifyReport> {
    let sys = build(RootSystemLabel::d(n));
    let sys_b = build(RootSystemLabel::b(n));
    let sys_c = build(RootSystemLabel::c(n));
    let b = Vector::unit(n, 0);
    let mut out = Vec::new();

    let mut c = Check::new(format!("D{n}.orbit.b_split"), "B = {b} + {-b} + B' under W°_b");
    let orbit = orbit_vec(sys.simple_roots(), &b).expect("orbit");
    c.eq("B = {±e_i}", &as_set(&orbit), &as_set(&signed_basis(n)));
    let stab = stabilizer_simple_roots(&sys, &b).expect("dominant");
    if let Some(sizes) = sizes_of(&mut c, &stab, &orbit) {
        c.eq("block sizes", &sizes, &vec![1, 1, 2 * n - 2]);
    }
    out.push(c.finish());

    for (name, cvec) in [("c", c_half(n)), ("c-prime", c_prime(n))] {
        let mut c = Check::new(
            format!("D{n}.{name}.orbit.stabilizer_split"),
            "W°_c = W_c and B = B+ + B- at levels ±1/2",
        );
        let perp = |s: &RootSystem| -> BTreeSet<Vector> {
            s.roots().iter().filter(|r| r.dot(&cvec).is_zero()).cloned().collect()
        };
        c.eq("R°_c = R_c", &perp(&sys), &perp(&sys_c));
        let stab = stabilizer_simple_roots(&sys, &cvec).expect("dominant");
        c_split(&mut c, &sys, &cvec, &stab);
        out.push(c.finish());
    }

    let mut c = Check::new(
        format!("D{n}.orbit.c_conjugacy"),
        "c and c' are W-conjugate but not W°-conjugate",
    );
    if let Some((yes, word)) = c.ok("conjugate under W", conjugate(&sys_b, &c_half(n), &c_prime(n))) {
        c.truth("W-conjugate", yes);
        if let Some(w) = word {
            c.detail("witness", w.to_string());
        }
    }
    if let Some((yes, _)) = c.ok("conjugate under W°", conjugate(&sys, &c_half(n), &c_prime(n))) {
        c.truth("not W°-conjugate", !yes);
    }
    out.push(c.finish());
    out
}

fn e7_orbit_model() -> BTreeSet<Vector> {
    let mut out = BTreeSet::new();
    for i in 0..8 {
        for j in i + 1..8 {
            let mut v = vec![-1i64; 8];
            v[i] = 3;
            v[j] = 3;
            let x = Vector::scaled(4, &v);
            out.insert(-&x);
            out.insert(x);
        }
    }
    out
}

fn orbits_e7() -> VerifyReport {
    let data = E7Data::new().expect("E7 data");
    let a = &data.a;
    let mut c = Check::new(
        "E7.orbit.stabilizer_split",
        "A = {a} + {-a} + A+ + A- under W6, A± = ±a ∓ R7+",
    );
    c.detail("reading", "the orbit decomposition is under the stabilizer W6 of a");
    c.eq("|A|", &data.orbit.len(), &56);
    c.eq("A = permutations of ±1/2(3/2, 3/2, -1/2 x 6)", &as_set(&data.orbit), &e7_orbit_model());
    let stab = stabilizer_simple_roots(&data.sys, a).expect("dominant");
    if let Some(sizes) = sizes_of(&mut c, &stab, &data.orbit) {
        c.eq("block sizes", &sizes, &vec![1, 1, 27, 27]);
    }
    c.eq("|R7+|", &data.r_plus.len(), &27);
    for (sign, set) in [(1i64, &data.a_plus), (-1, &data.a_minus)] {
        let tag = if sign > 0 { "A+" } else { "A-" };
        let sa = a.scale(&Rational::from_integer(sign));
        let by_q: Vec<Vector> = data.orbit.iter().filter(|x| (*x - &sa).q() == Rational::one()).cloned().collect();
        c.eq(&format!("{tag} by q(x ∓ a) = 1"), &as_set(set), &as_set(&by_q));
        let by_roots: Vec<Vector> = data.r_plus.iter().map(|r| &sa - &r.scale(&Rational::from_integer(sign))).collect();
        c.eq(&format!("{tag} = ±(a - R7+)"), &as_set(set), &as_set(&by_roots));
    }
    for sign in Sign::both() {
        let e6 = E6Data::new(sign).expect("E6 data");
        let set = match sign {
            Sign::Plus => &data.a_plus,
            Sign::Minus => &data.a_minus,
        };
        c.eq(&format!("A^{} = B^{} + {}a/3", sign.tag(), sign.tag(), sign.tag()), &as_set(set), &as_set(&e6.a_eps));
        c.truth(&format!("a^{} in A^{}", sign.tag(), sign.tag()), set.contains(&e6.a_point));
    }
    c.finish()
}

/// BFS layers of `set` from `start`, adjacency `q(x' - x) = 1`.
fn distance_layers(set: &[Vector], start: &Vector) -> Vec<BTreeSet<Vector>> {
    let mut dist: BTreeMap<Vector, usize> = BTreeMap::new();
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for y in set {
            if !dist.contains_key(y) && (y - &x).q() == Rational::one() {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y.clone());
            }
        }
    }
    let max = dist.values().copied().max().unwrap_or(0);
    let mut layers = vec![BTreeSet::new(); max + 1];
    for (v, d) in dist {
        layers[d].insert(v);
    }
    layers
}

fn orbits_e6(sign: Sign) -> VerifyReport {
    let data = E6Data::new(sign).expect("E6 data");
    let t = sign.tag();
    let mut c = Check::new(
        format!("E6.{}.orbit.stabilizer_split", sign.word()),
        "A^e and B^e split under W5^e into blocks of sizes 1, 10, 16",
    );
    let shift = data.a.scale(&(sign.value() * rat(1, 3)));
    let proj: Vec<Vector> = data.a_eps.iter().map(|x| project_off(x, &data.a)).collect();
    c.eq("B^e = proj A^e", &as_set(&data.orbit), &as_set(&proj));
    c.eq("|B^e|", &data.orbit.len(), &27);
    c.eq("sub-base = simple roots orthogonal to b^e", &as_set(&data.sub_base), &as_set(&data.stabilizer));

    let stab = &data.stabilizer;
    let Some(part_a) = c.ok("partition of A^e", orbit_partition(stab, &data.a_eps)) else {
        return c.finish();
    };
    c.eq("A^e block sizes", &part_a.sizes(), &vec![1, 10, 16]);
    let layers = distance_layers(&data.a_eps, &data.a_point);
    c.eq("A^e blocks = distance layers from a^e", &part_a.as_sets(), &layers.iter().cloned().collect());
    c.detail("distance_layer_sizes", layers.iter().map(BTreeSet::len).collect::<Vec<_>>());
    if let Some(sizes) = sizes_of(&mut c, stab, &data.orbit) {
        c.eq("B^e block sizes", &sizes, &vec![1, 10, 16]);
    }
    c.eq("|C6|", &data.c6.len(), &10);
    c.eq("|D6|", &data.d6.len(), &16);

    let c7 = translate_set(&data.c6, &shift);
    let d7 = translate_set(&data.d6, &shift);
    let c_pt = &(&data.c_vec - &data.b.scale(&rat(1, 2))) + &shift;
    let d_pt = &(&data.d_vec + &data.b.scale(&rat(1, 4))) + &shift;
    for (name, pt, block) in [("C7", &c_pt, &c7), ("D7", &d_pt, &d7)] {
        match part_a.block_of(pt) {
            Some(i) => c.eq(&format!("{name} is the block of its point"), &as_set(&part_a.blocks[i]), &as_set(block)),
            None => c.truth(&format!("{name} point lies in A^e"), false),
        };
    }
    c.eq(
        "C6 = C - b/2",
        &as_set(&data.c6),
        &as_set(&translate_set(&data.c_orbit, &data.b.scale(&rat(-1, 2)))),
    );
    c.eq(
        "D6 = D + b/4",
        &as_set(&data.d6),
        &as_set(&translate_set(&data.d_orbit, &data.b.scale(&rat(1, 4)))),
    );

    let Some(r5) = c.ok("R5 closure", root_closure(&data.sub_base, DEFAULT_GROUP_CAP)) else {
        return c.finish();
    };
    c.eq("|R5|", &r5.len(), &40);
    for (name, v) in [("c", &data.c_vec), ("d", &data.d_vec)] {
        let dominant = data.sub_base.iter().all(|r| r.dot(v) >= Rational::zero());
        c.truth(&format!("{name}^{t} dominant for R5"), dominant);
        let minuscule = r5.iter().all(|r| {
            let p = r.dot(v);
            p == Rational::zero() || p == Rational::one() || p == -Rational::one()
        });
        c.truth(&format!("{name}^{t} minuscule for R5"), minuscule);
    }

    let other = E6Data::new(match sign {
        Sign::Plus => Sign::Minus,
        Sign::Minus => Sign::Plus,
    })
    .expect("E6 data");
    let neg: Vec<Vector> = data.orbit.iter().map(|x| -x).collect();
    c.eq("-B^e = B^-e", &as_set(&neg), &as_set(&other.orbit));
    c.finish()
}

fn cardinals_e() -> VerifyReport {
    let mut c = Check::new("E6.orbit.cardinals", "|W6| = 51840, |W5^e| = 1920, 56 |W6| = |W7|, 27 |W5^e| = |W6|");
    let e6 = build(RootSystemLabel::e6());
    let e7 = build(RootSystemLabel::e7());
    if let Some(w6) = c.ok("W6", group_order(e6.simple_roots(), DEFAULT_GROUP_CAP)) {
        c.eq("|W6|", &w6, &51840);
        c.eq("|W6| vs Weyl order", &BigUint::from(w6), e6.weyl_order());
    }
    c.eq("56 |W6| = |W7|", &(BigUint::from(56u32) * e6.weyl_order()), e7.weyl_order());
    c.eq("|W7|", e7.weyl_order(), &BigUint::from(2_903_040u32));
    for sign in Sign::both() {
        let data = E6Data::new(sign).expect("E6 data");
        let t = sign.tag();
        if let Some(w5) = c.ok("W5", group_order(&data.sub_base, DEFAULT_GROUP_CAP)) {
            c.eq(&format!("|W5^{t}| by orbit count"), &w5, &1920);
            c.eq(&format!("27 |W5^{t}| = |W6|"), &(BigUint::from(27 * w5)), e6.weyl_order());
        }
        if let Some(g) = c.ok("W5 elements", enumerate_group(&data.sub_base, 8, DEFAULT_GROUP_CAP)) {
            c.eq(&format!("|W5^{t}| by enumeration"), &g.len(), &1920);
        }
    }
    c.finish()
}
