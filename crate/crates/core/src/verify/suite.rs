//! Grouped runs of the checks, including the numbered acceptance criteria.

use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::Error;
use crate::exact::{Matrix, Rational, Vector};
use crate::invariants::reynolds;
use crate::poly::{monomials_of_degree, Polynomial};
use crate::roots::{is_minuscule, Family, RootSystem, RootSystemLabel};
use crate::weyl::{dominant_rep, enumerate_group, orbit, DEFAULT_GROUP_CAP, DEFAULT_ORBIT_CAP};

use super::identities::verify_identities;
use super::orbits::verify_orbit_structure;
use super::prop1::verify_prop1_defaults;
use super::prop2::{prop2_cases, verify_prop2, Strategy};
use super::report::{Check, Status, VerifyReport};
use super::triangle::{random_word, verify_triangles};

/// A failed report standing in for a check that could not run.
pub fn error_report(id: impl Into<String>, anchor: &str, err: &Error) -> VerifyReport {
    let mut c = Check::new(id, anchor);
    c.error("error", err);
    c.finish()
}

fn expected_root_count(label: RootSystemLabel) -> usize {
    let n = label.rank();
    match label.family() {
        Family::A => n * (n + 1),
        Family::B | Family::C => 2 * n * n,
        Family::D => 2 * n * (n - 1),
        Family::E6 => 72,
        Family::E7 => 126,
    }
}

/// Highest-root multiplicities in the node order used by [`RootSystem`].
fn expected_multiplicities(label: RootSystemLabel) -> Vec<i64> {
    let n = label.rank();
    match label.family() {
        Family::A => vec![1; n],
        Family::B => std::iter::once(1).chain(std::iter::repeat_n(2, n - 1)).collect(),
        Family::C => std::iter::repeat_n(2, n - 1).chain(std::iter::once(1)).collect(),
        Family::D => {
            let mut m = vec![1];
            m.extend(std::iter::repeat_n(2, n - 3));
            m.extend([1, 1]);
            m
        }
        Family::E6 => vec![1, 2, 3, 2, 1, 2],
        Family::E7 => vec![1, 2, 3, 4, 3, 2, 2],
    }
}

/// Root count, highest root, and minuscule coweights at the nodes of
/// multiplicity one.
pub fn construction_report(label: RootSystemLabel) -> VerifyReport {
    let mut c = Check::new(
        format!("{label}.construction"),
        "root counts, highest root multiplicities, minuscule coweights dual to the nodes of multiplicity 1",
    );
    let sys = match RootSystem::build(label) {
        Ok(s) => s,
        Err(e) => {
            c.error("build", &e);
            return c.finish();
        }
    };
    c.eq("|R|", &sys.roots().len(), &expected_root_count(label));
    c.eq("|R| by formula", &sys.roots().len(), &RootSystem::classical_root_count(label));
    c.eq(
        "highest root multiplicities",
        &sys.highest_root_multiplicities().to_vec(),
        &expected_multiplicities(label),
    );
    let coords: Vec<Rational> = sys.simple_coordinates(sys.highest_root());
    let mult: Vec<Rational> = expected_multiplicities(label).into_iter().map(Rational::from_integer).collect();
    c.eq("highest root in simple coordinates", &coords, &mult);
    c.truth("highest root is dominant", sys.is_dominant(sys.highest_root()));
    c.truth("reflections permute the roots", sys.all_reflections_permute_roots());

    let nodes: Vec<usize> = sys.minuscule_coweights().iter().map(|w| w.node).collect();
    let ones: Vec<usize> = (0..sys.rank())
        .filter(|&i| expected_multiplicities(label)[i] == 1)
        .collect();
    let mut sorted = nodes.clone();
    sorted.sort_unstable();
    c.eq("minuscule nodes = nodes of multiplicity 1", &sorted, &ones);
    for w in sys.minuscule_coweights() {
        let pairings: Vec<Rational> = sys.simple_roots().iter().map(|a| a.dot(&w.vector)).collect();
        let dual: Vec<Rational> = (0..sys.rank())
            .map(|i| Rational::from_integer((i == w.node) as i64))
            .collect();
        c.eq(&format!("{} dual to its node", w.name), &pairings, &dual);
        c.truth(&format!("{} minuscule", w.name), is_minuscule(&sys, &w.vector).0);
        let unit = [-Rational::one(), Rational::zero(), Rational::one()];
        c.truth(
            &format!("{} pairs roots into {{-1, 0, 1}}", w.name),
            sys.pairing_values(&w.vector).iter().all(|x| unit.contains(x)),
        );
    }
    c.detail("roots", sys.roots().len());
    c.detail("weyl_order", sys.weyl_order().to_string());
    c.finish()
}

/// Orbit sizes of the base coweights.
pub fn cardinality_report() -> VerifyReport {
    let mut c = Check::new(
        "orbit.cardinalities",
        "|A| = 56 in E7, |B±| = 27 in E6, |W_n b| = 2n, |A| = n + 1 in A_n",
    );
    let mut sizes = serde_json::Map::new();
    let mut size = |c: &mut Check, label: RootSystemLabel, name: &str| -> Option<usize> {
        let sys = RootSystem::build(label).ok()?;
        let v = c.ok("coweight", sys.coweight(name).map(|w| w.vector.clone()))?;
        let k = c.ok("orbit", orbit(sys.simple_roots(), &v, DEFAULT_ORBIT_CAP))?.len();
        sizes.insert(format!("{label}.{name}"), json!(k));
        Some(k)
    };
    if let Some(k) = size(&mut c, RootSystemLabel::e7(), "a") {
        c.eq("|A|", &k, &56);
    }
    for name in ["b+", "b-"] {
        if let Some(k) = size(&mut c, RootSystemLabel::e6(), name) {
            c.eq(&format!("|B{}|", &name[1..]), &k, &27);
        }
    }
    for n in 2..=6 {
        if let Some(k) = size(&mut c, RootSystemLabel::b(n), "b") {
            c.eq(&format!("|W_{n} b| in B{n}"), &k, &(2 * n));
        }
        if let Some(k) = size(&mut c, RootSystemLabel::c(n), "c") {
            c.eq(&format!("|W_{n} c| in C{n}"), &k, &(1 << n));
        }
    }
    for n in 1..=6 {
        if let Some(k) = size(&mut c, RootSystemLabel::a(n), "a1") {
            c.eq(&format!("|A| in A{n}"), &k, &(n + 1));
        }
    }
    c.detail("sizes", sizes);
    c.finish()
}

/// Every Prop 2 case of a system; strategy F is skipped for E6 and E7.
pub fn prop2_reports(label: RootSystemLabel, max_degree: usize) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for (name, full) in prop2_cases(label) {
        let mut strategies = vec![Strategy::Chevalley];
        if !matches!(label.family(), Family::E6 | Family::E7) {
            strategies.insert(0, Strategy::Filtered);
        }
        for s in strategies {
            out.push(
                verify_prop2(label, &name, max_degree, s, full).unwrap_or_else(|e| {
                    error_report(format!("{label}.{name}.prop2.{s}"), "Prop 2", &e)
                }),
            );
        }
    }
    out
}

/// Randomized property checks on the exact layers.
pub fn property_report(cases: usize, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Check::new("properties.randomized", "translation is an algebra map; Reynolds is idempotent; dominant representatives are orbit invariants; row reduction is consistent");
    let small = |rng: &mut ChaCha8Rng| Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=3));
    let poly = |rng: &mut ChaCha8Rng, n: usize, d: usize| -> Polynomial {
        let mut terms = Vec::new();
        for k in 0..=d {
            for m in monomials_of_degree(n, k) {
                if rng.gen_bool(0.4) {
                    terms.push((m, Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))));
                }
            }
        }
        Polynomial::from_terms(n, terms).expect("few variables")
    };
    let labels = [
        RootSystemLabel::a(3),
        RootSystemLabel::b(3),
        RootSystemLabel::c(3),
        RootSystemLabel::d(4),
    ];
    let systems: Vec<RootSystem> = labels.iter().map(|l| RootSystem::build(*l).expect("small")).collect();
    let b2 = RootSystem::build(RootSystemLabel::b(2)).expect("B2");
    let group = enumerate_group(b2.simple_roots(), 2, DEFAULT_GROUP_CAP).expect("B2 group");
    let mut tally = [0usize; 4];
    for k in 0..cases {
        let n = 3;
        let a = Vector::new((0..n).map(|_| small(&mut rng)).collect());
        let b = Vector::new((0..n).map(|_| small(&mut rng)).collect());
        let (f, g) = (poly(&mut rng, n, 2), poly(&mut rng, n, 2));
        c.eq("tau(f + g)", &(&f + &g).translate(&a), &(f.translate(&a) + g.translate(&a)));
        c.eq("tau(f g)", &(&f * &g).translate(&a), &(&f.translate(&a) * &g.translate(&a)));
        c.eq("tau(a) tau(b)", &f.translate(&a).translate(&b), &f.translate(&(&a + &b)));
        tally[0] += 1;

        let h = poly(&mut rng, 2, 3);
        if let Some(r1) = c.ok("reynolds", reynolds(&group, &h)) {
            if let Some(r2) = c.ok("reynolds", reynolds(&group, &r1)) {
                c.eq("R(R(f)) = R(f)", &r2, &r1);
            }
        }
        tally[1] += 1;

        let sys = &systems[k % systems.len()];
        let dim = sys.ambient_dim();
        let mut v = Vector::zeros(dim);
        for alpha in sys.simple_roots() {
            v = v.add_scaled(&small(&mut rng), alpha);
        }
        let w = random_word(&mut rng, sys.rank(), 20);
        if let (Some((d1, _)), Some(moved)) = (
            c.ok("dominant", dominant_rep(sys, &v)),
            c.ok("apply", w.apply(sys.simple_roots(), &v)),
        ) {
            if let Some((d2, _)) = c.ok("dominant", dominant_rep(sys, &moved)) {
                c.eq("dominant rep constant on orbits", &d1, &d2);
                c.truth("dominant rep is dominant", sys.is_dominant(&d1));
            }
        }
        tally[2] += 1;

        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let m = Matrix::new(
            (0..rows)
                .map(|_| Vector::new((0..cols).map(|_| small(&mut rng)).collect()))
                .collect(),
        )
        .expect("rectangular");
        let once = m.row_reduce();
        let twice = once.echelon.row_reduce();
        c.eq("row reduce idempotent", &twice.echelon, &once.echelon);
        c.eq("rank of transpose", &m.transpose().rank(), &once.rank);
        tally[3] += 1;
    }
    c.detail("cases", json!({"translation": tally[0], "reynolds": tally[1], "dominant": tally[2], "row_reduce": tally[3]}));
    c.detail("seed", seed);
    c.finish()
}

/// One numbered acceptance criterion.
pub struct Criterion {
    pub number: u32,
    pub title: &'static str,
    /// Wall-clock limit in seconds, when the criterion has one.
    pub limit: Option<f64>,
    pub run: fn() -> Vec<VerifyReport>,
}

pub struct CriterionResult {
    pub number: u32,
    pub title: &'static str,
    pub limit: Option<f64>,
    pub reports: Vec<VerifyReport>,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        !self.reports.is_empty()
            && self.reports.iter().all(|r| r.status == Status::Pass)
            && self.limit.is_none_or(|l| self.seconds <= l)
    }

    pub fn line(&self) -> String {
        let failing: Vec<&str> = self
            .reports
            .iter()
            .filter(|r| r.status != Status::Pass)
            .map(|r| r.check_id.as_str())
            .collect();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {:>2} {verdict} {} ({} reports, {:.1}s)",
            self.number,
            self.title,
            self.reports.len(),
            self.seconds
        );
        if let Some(l) = self.limit.filter(|&l| self.seconds > l) {
            s.push_str(&format!(" over the {l}s limit"));
        }
        if !failing.is_empty() {
            s.push_str(&format!(" failing: {}", failing.join(", ")));
        }
        s
    }
}

fn labels(spec: &[(Family, std::ops::RangeInclusive<usize>)]) -> Vec<RootSystemLabel> {
    let mut out = Vec::new();
    for (f, ranks) in spec {
        for n in ranks.clone() {
            out.push(RootSystemLabel::new(*f, n).expect("in range"));
        }
    }
    out
}

fn exceptional() -> Vec<RootSystemLabel> {
    vec![RootSystemLabel::e6(), RootSystemLabel::e7()]
}

fn c1() -> Vec<VerifyReport> {
    let mut ls = labels(&[
        (Family::A, 1..=6),
        (Family::B, 2..=6),
        (Family::C, 2..=6),
        (Family::D, 3..=6),
    ]);
    ls.extend(exceptional());
    ls.into_iter().map(construction_report).collect()
}

fn c2() -> Vec<VerifyReport> {
    vec![cardinality_report()]
}

fn c3() -> Vec<VerifyReport> {
    let mut out: Vec<VerifyReport> = verify_orbit_structure(RootSystemLabel::e6())
        .into_iter()
        .filter(|r| r.check_id == "E6.orbit.cardinals")
        .collect();
    let mut c = Check::new("E7.orbit.cardinals", "|W7| = 56 |W6| with |W6| by enumeration");
    match (RootSystem::build(RootSystemLabel::e7()), RootSystem::build(RootSystemLabel::e6())) {
        (Ok(e7), Ok(e6)) => {
            let a = e7.minuscule_coweights()[0].vector.clone();
            match crate::weyl::stabilizer_simple_roots(&e7, &a)
                .and_then(|s| enumerate_group(&s, 8, DEFAULT_GROUP_CAP))
            {
                Ok(g) => {
                    c.eq("|W6| by enumeration", &g.len(), &51840);
                    c.eq("56 |W6|", &(BigUint::from(56 * g.len())), e7.weyl_order());
                    c.eq("|W6| = |W(E6)|", &BigUint::from(g.len()), e6.weyl_order());
                }
                Err(e) => c.error("enumerate", &e),
            }
        }
        (Err(e), _) | (_, Err(e)) => c.error("build", &e),
    }
    out.push(c.finish());
    out
}

fn c4() -> Vec<VerifyReport> {
    let mut ls = labels(&[
        (Family::A, 2..=5),
        (Family::B, 2..=5),
        (Family::C, 2..=5),
        (Family::D, 4..=5),
    ]);
    ls.extend(exceptional());
    ls.into_iter().flat_map(verify_orbit_structure).collect()
}

fn c5() -> Vec<VerifyReport> {
    let mut ls = labels(&[
        (Family::A, 2..=5),
        (Family::B, 2..=5),
        (Family::C, 2..=5),
        (Family::D, 3..=5),
    ]);
    ls.extend(exceptional());
    ls.into_iter().flat_map(verify_identities).collect()
}

fn prop2_for(labels: &[RootSystemLabel], strategy: Strategy) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for &l in labels {
        for (name, full) in prop2_cases(l) {
            out.push(
                verify_prop2(l, &name, 8, strategy, full)
                    .unwrap_or_else(|e| error_report(format!("{l}.{name}.prop2.{strategy}"), "Prop 2", &e)),
            );
        }
    }
    out
}

fn classical_prop2_labels() -> Vec<RootSystemLabel> {
    vec![
        RootSystemLabel::a(2),
        RootSystemLabel::a(3),
        RootSystemLabel::b(3),
        RootSystemLabel::c(3),
        RootSystemLabel::d(4),
    ]
}

fn c6() -> Vec<VerifyReport> {
    let mut out = prop2_for(&classical_prop2_labels(), Strategy::Filtered);
    // Strategies F and C must agree wherever both run.
    out.extend(prop2_for(&classical_prop2_labels(), Strategy::Chevalley));
    out
}

fn c7() -> Vec<VerifyReport> {
    prop2_for(&exceptional(), Strategy::Chevalley)
}

fn c8() -> Vec<VerifyReport> {
    let ls = [
        RootSystemLabel::a(3),
        RootSystemLabel::b(3),
        RootSystemLabel::c(3),
        RootSystemLabel::d(4),
        RootSystemLabel::e7(),
    ];
    let mut out = Vec::new();
    for l in ls {
        match verify_prop1_defaults(l) {
            Ok(r) => out.extend(r),
            Err(e) => out.push(error_report(format!("{l}.prop1"), "Prop 1", &e)),
        }
    }
    out
}

fn c9() -> Vec<VerifyReport> {
    let ls = [
        RootSystemLabel::a(3),
        RootSystemLabel::b(3),
        RootSystemLabel::c(3),
        RootSystemLabel::d(4),
        RootSystemLabel::e6(),
        RootSystemLabel::e7(),
    ];
    ls.iter()
        .enumerate()
        .map(|(i, &l)| {
            verify_triangles(l, 100, 1000 + i as u64)
                .unwrap_or_else(|e| error_report(format!("{l}.triangle.round_trip"), "triangles", &e))
        })
        .collect()
}

fn c10() -> Vec<VerifyReport> {
    vec![property_report(200, 10)]
}

pub fn acceptance_criteria() -> Vec<Criterion> {
    vec![
        Criterion { number: 1, title: "construction", limit: Some(5.0), run: c1 },
        Criterion { number: 2, title: "orbit cardinalities", limit: None, run: c2 },
        Criterion { number: 3, title: "orbit-stabilizer cardinals", limit: None, run: c3 },
        Criterion { number: 4, title: "orbit decompositions", limit: None, run: c4 },
        Criterion { number: 5, title: "identities", limit: Some(180.0), run: c5 },
        Criterion { number: 6, title: "Prop 2 strategy F", limit: None, run: c6 },
        Criterion { number: 7, title: "Prop 2 strategy C", limit: None, run: c7 },
        Criterion { number: 8, title: "Prop 1 fibers", limit: None, run: c8 },
        Criterion { number: 9, title: "triangle witnesses", limit: Some(60.0), run: c9 },
        Criterion { number: 10, title: "randomized properties", limit: None, run: c10 },
    ]
}

pub fn run_criterion(c: &Criterion) -> CriterionResult {
    let start = Instant::now();
    let reports = (c.run)();
    CriterionResult {
        number: c.number,
        title: c.title,
        limit: c.limit,
        reports,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Which group of checks to run for one system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Construction,
    Identities,
    Orbits,
    Prop1,
    Prop2,
    Triangles,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::Construction,
        Kind::Orbits,
        Kind::Identities,
        Kind::Prop1,
        Kind::Prop2,
        Kind::Triangles,
    ];
}

/// Reports of one kind for one system, with library defaults.
pub fn run_kind(label: RootSystemLabel, kind: Kind, max_degree: Option<usize>) -> Vec<VerifyReport> {
    match kind {
        Kind::Construction => vec![construction_report(label)],
        Kind::Identities => verify_identities(label),
        Kind::Orbits => verify_orbit_structure(label),
        Kind::Prop1 => verify_prop1_defaults(label)
            .unwrap_or_else(|e| vec![error_report(format!("{label}.prop1"), "Prop 1", &e)]),
        Kind::Prop2 => prop2_reports(
            label,
            max_degree.unwrap_or_else(|| super::prop2::default_max_degree(label)),
        ),
        Kind::Triangles => vec![verify_triangles(label, 100, 0)
            .unwrap_or_else(|e| error_report(format!("{label}.triangle.round_trip"), "triangles", &e))],
    }
}

/// Every kind for one system.
pub fn label_suite(label: RootSystemLabel, max_degree: Option<usize>) -> Vec<VerifyReport> {
    Kind::ALL.iter().flat_map(|&k| run_kind(label, k, max_degree)).collect()
}
