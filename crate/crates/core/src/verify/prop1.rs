//! Fibers of `x -> W(a + x)` on a `W`-orbit against `W_a`-orbits.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::exact::Vector;
use crate::roots::{is_minuscule, Family, RootSystem, RootSystemLabel};
use crate::weyl::{dominant_rep, orbit, orbit_partition, stabilizer_simple_roots, DEFAULT_ORBIT_CAP};

use super::report::{Check, VerifyReport};

/// Prop 1 for the named minuscule coweight and one sample vector.
pub fn verify_prop1(label: RootSystemLabel, coweight: &str, sample_name: &str, b: &Vector) -> Result<VerifyReport> {
    let sys = RootSystem::build(label)?;
    let a = sys.coweight(coweight)?.vector.clone();
    fiber_check(&sys, &format!("{label}.{coweight}"), &a, sample_name, b)
}

/// The fiber test for any dominant `a`. For `a` not minuscule nothing is
/// claimed; the report records the outcome either way.
pub fn fiber_check(sys: &RootSystem, prefix: &str, a: &Vector, sample_name: &str, b: &Vector) -> Result<VerifyReport> {
    let mut c = Check::new(
        format!("{prefix}.prop1.{sample_name}"),
        "a + x and a + x' are W-conjugate iff x and x' are W_a-conjugate",
    );
    let stab = stabilizer_simple_roots(sys, a)?;
    let orb = orbit(sys.simple_roots(), b, DEFAULT_ORBIT_CAP)?.to_vec();
    let part = orbit_partition(&stab, &orb)?;
    c.detail("minuscule", is_minuscule(sys, a).0);
    c.detail("sample", b.to_string());
    c.detail("orbit_size", orb.len());
    c.detail("block_sizes", part.sizes());

    let mut keys = Vec::with_capacity(orb.len());
    for x in &orb {
        keys.push(dominant_rep(sys, &(a + x))?.0);
    }
    let mut fibers: BTreeMap<&Vector, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        fibers.entry(k).or_default().push(i);
    }
    let mut fiber_sizes: Vec<usize> = fibers.values().map(Vec::len).collect();
    fiber_sizes.sort_unstable();
    c.detail("fiber_sizes", &fiber_sizes);

    let block: Vec<usize> = orb.iter().map(|x| part.block_of(x).expect("partition covers the orbit")).collect();
    let mut mismatches = 0usize;
    for i in 0..orb.len() {
        for j in i + 1..orb.len() {
            if (keys[i] == keys[j]) != (block[i] == block[j]) {
                mismatches += 1;
            }
        }
    }
    c.detail("pairs_checked", orb.len() * orb.len().saturating_sub(1) / 2);
    c.eq("pairs where fiber and block disagree", &mismatches, &0);
    Ok(c.finish())
}

/// Sample vectors: the minuscule coweights, the dominant roots, the
/// fundamental coweights, their sum and zero. For E6 and E7 only the
/// coweights and a root, since regular orbits there are too large to pair up.
pub fn default_prop1_samples(sys: &RootSystem) -> Vec<(String, Vector)> {
    let mut out: Vec<(String, Vector)> = Vec::new();
    for cw in sys.minuscule_coweights() {
        out.push((cw.name.clone(), cw.vector.clone()));
    }
    out.push(("highest-root".into(), sys.highest_root().clone()));
    if matches!(sys.label().family(), Family::E6 | Family::E7) {
        return out;
    }
    let short = sys.roots().iter().map(|r| r.dot(r)).min().expect("roots");
    let long = sys.highest_root().dot(sys.highest_root());
    if short != long {
        let r = sys.roots().iter().find(|r| r.dot(r) == short).expect("short root");
        let dom = dominant_rep(sys, r).expect("dominant rep").0;
        out.push(("highest-short-root".into(), dom));
    }
    let dim = sys.ambient_dim();
    let mut rho = Vector::zeros(dim);
    for (i, w) in sys.fundamental_coweights().iter().enumerate() {
        out.push((format!("omega{}", i + 1), w.clone()));
        rho = &rho + w;
    }
    out.push(("rho".into(), rho));
    out.push(("zero".into(), Vector::zeros(dim)));
    out
}

/// Prop 1 for every minuscule coweight against every default sample.
pub fn verify_prop1_defaults(label: RootSystemLabel) -> Result<Vec<VerifyReport>> {
    let sys = RootSystem::build(label)?;
    let samples = default_prop1_samples(&sys);
    let mut out = Vec::new();
    for cw in sys.minuscule_coweights() {
        for (name, b) in &samples {
            out.push(fiber_check(&sys, &format!("{label}.{}", cw.name), &cw.vector, name, b)?);
        }
    }
    Ok(out)
}
