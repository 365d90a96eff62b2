use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use minuscule::cache::cached_orbit;
use minuscule::error::Error;
use minuscule::exact::Rational;
use minuscule::roots::{Family, RootSystem, RootSystemLabel};
use minuscule::verify::suite::{acceptance_criteria, label_suite, run_criterion, run_kind, Kind};
use minuscule::verify::triangle::seeded_pair;
use minuscule::verify::{fiber_check, triangle_witness, verify_prop1, verify_prop2, Status, Strategy, Triangle, VerifyReport};
use minuscule::weyl::{conjugate, dominant_rep_with, group_order, orbit, orbit_partition, stabilizer_simple_roots};

#[derive(Parser)]
#[command(name = "minuscule", version, about = "Exact checks on root systems and minuscule coweights")]
struct Cli {
    /// TOML file with orbit_cap, group_cap, max_degree, cache_dir, output.
    #[arg(long, global = true, env = "MINUSCULE_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long, global = true, env = "MINUSCULE_OUTPUT")]
    output: Option<Output>,
    #[arg(long, global = true, env = "MINUSCULE_ORBIT_CAP")]
    orbit_cap: Option<usize>,
    #[arg(long, global = true, env = "MINUSCULE_GROUP_CAP")]
    group_cap: Option<usize>,
    #[arg(long, global = true, env = "MINUSCULE_MAX_DEGREE")]
    max_degree: Option<usize>,
    #[arg(long, global = true, env = "MINUSCULE_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Leave `runtime_ms` out of reports so that output is reproducible.
    #[arg(long, global = true)]
    no_timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Root system data.
    Rootsys {
        #[command(subcommand)]
        command: RootsysCommand,
    },
    /// Orbit size and its blocks under the stabilizer of a coweight.
    Orbit {
        #[command(flatten)]
        sys: SystemArgs,
        /// A vector or a coweight name.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Dominant representative and the word reaching it.
    Dominant {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Whether two vectors are W-conjugate, with a word sending the second to the first.
    Conjugate {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// Run verification checks and print one report per line.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Triangles a + b + c = 0 with a minuscule side.
    Triangle {
        #[command(subcommand)]
        command: TriangleCommand,
    },
}

#[derive(Subcommand)]
enum RootsysCommand {
    Info {
        #[command(flatten)]
        sys: SystemArgs,
    },
}

#[derive(Args, Clone)]
struct SystemArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    rank: Option<usize>,
    /// Coweight by name ("c-prime", "b+") or 1-based index.
    #[arg(long)]
    coweight: Option<String>,
}

impl SystemArgs {
    fn label(&self) -> Result<RootSystemLabel, Error> {
        RootSystemLabel::parse_parts(self.family, self.rank)
    }
}

#[derive(Args, Clone)]
struct OptionalSystem {
    /// Restrict to one system; without it the acceptance scope runs.
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    rank: Option<usize>,
}

impl OptionalSystem {
    fn label(&self) -> Result<Option<RootSystemLabel>, Error> {
        self.family.map(|f| RootSystemLabel::parse_parts(f, self.rank)).transpose()
    }
}

#[derive(Subcommand)]
enum VerifyCommand {
    Identities {
        #[command(flatten)]
        sys: OptionalSystem,
    },
    Orbits {
        #[command(flatten)]
        sys: OptionalSystem,
    },
    /// Fibers of x -> W(a + x) against stabilizer orbits.
    Prop1 {
        #[command(flatten)]
        sys: SystemArgs,
        /// Sample vector; without it the default samples run.
        #[arg(long, allow_hyphen_values = true)]
        sample: Option<String>,
        /// Use this dominant `a` instead of a minuscule coweight. Exploration
        /// only; nothing is claimed for such `a`.
        #[arg(long, allow_hyphen_values = true)]
        explore_a: Option<String>,
    },
    /// Generation of the stabilizer invariants by invariants and their translates.
    Prop2 {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value = "f")]
        strategy: Strategy,
        /// D_n only: use the full group W instead of W°.
        #[arg(long)]
        full_group: bool,
    },
    /// The acceptance suite, or every check for one system.
    All {
        #[command(flatten)]
        sys: OptionalSystem,
    },
}

#[derive(Subcommand)]
enum TriangleCommand {
    /// A word w with w t2 = t. Sides are given as vectors or coweight
    /// names; c is -a - b. With --random a conjugate pair is generated.
    Witness {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a2: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b2: Option<String>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    orbit_cap: Option<usize>,
    group_cap: Option<usize>,
    max_degree: Option<usize>,
    cache_dir: Option<PathBuf>,
    output: Option<Output>,
}

struct Config {
    orbit_cap: usize,
    group_cap: usize,
    max_degree: Option<usize>,
    cache_dir: Option<PathBuf>,
    output: Output,
    timings: bool,
}

const DEFAULT_CONFIG_FILE: &str = "minuscule.toml";

impl Config {
    /// Flags and environment (merged by clap), then the config file, then defaults.
    fn resolve(cli: &Cli) -> Result<Config, String> {
        let path = cli.config.clone().or_else(|| {
            let p = PathBuf::from(DEFAULT_CONFIG_FILE);
            p.exists().then_some(p)
        });
        let file: FileConfig = match path {
            Some(p) => {
                let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
                toml::from_str(&text).map_err(|e| format!("{}: {e}", p.display()))?
            }
            None => FileConfig::default(),
        };
        let c = Config {
            orbit_cap: cli.orbit_cap.or(file.orbit_cap).unwrap_or(minuscule::weyl::DEFAULT_ORBIT_CAP),
            group_cap: cli.group_cap.or(file.group_cap).unwrap_or(minuscule::weyl::DEFAULT_GROUP_CAP),
            max_degree: cli.max_degree.or(file.max_degree),
            cache_dir: cli.cache_dir.clone().or(file.cache_dir),
            output: cli.output.or(file.output).unwrap_or(Output::Json),
            timings: !cli.no_timings,
        };
        if c.orbit_cap == 0 || c.group_cap == 0 {
            return Err("caps must be positive".into());
        }
        if c.max_degree.is_some_and(|d| d < 2) {
            return Err("max_degree must be at least 2".into());
        }
        Ok(c)
    }
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(cfg: &Config, v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = match cfg.output {
        Output::Json => writeln!(out, "{v}"),
        Output::Text => writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json")),
    };
}

fn section(id: &str) -> &str {
    const SECTIONS: [&str; 6] = ["construction", "identity", "orbit", "prop1", "prop2", "triangle"];
    id.split('.').find(|p| SECTIONS.contains(p)).unwrap_or("other")
}

fn emit_reports(cfg: &Config, reports: &[VerifyReport]) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match cfg.output {
        Output::Json => {
            for r in reports {
                let _ = writeln!(out, "{}", r.to_json(cfg.timings));
            }
        }
        Output::Text => {
            let mut sections: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
            for r in reports {
                let _ = writeln!(out, "{:<12} {}", r.status.to_string().to_uppercase(), r.check_id);
                let slot = match r.status {
                    Status::Pass => 0,
                    Status::Fail => 1,
                    Status::Inconclusive => 2,
                };
                sections.entry(section(&r.check_id)).or_default()[slot] += 1;
            }
            for (s, [p, f, i]) in sections {
                let _ = writeln!(out, "{s}: {p} pass, {f} fail, {i} inconclusive");
            }
        }
    }
    if reports.iter().any(|r| r.status == Status::Fail) {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}

fn build(sys: &SystemArgs) -> Result<RootSystem, Failure> {
    Ok(RootSystem::build(sys.label()?)?)
}

fn base_coweight<'a>(sys: &'a RootSystem, args: &SystemArgs) -> Result<&'a minuscule::roots::Coweight, Failure> {
    Ok(match &args.coweight {
        Some(c) => sys.coweight(c)?,
        None => &sys.minuscule_coweights()[0],
    })
}

fn acceptance_labels(kind: Kind) -> Vec<RootSystemLabel> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.extend([RootSystemLabel::a(n), RootSystemLabel::b(n), RootSystemLabel::c(n)]);
    }
    let d_from = if kind == Kind::Identities { 3 } else { 4 };
    out.extend((d_from..=5).map(RootSystemLabel::d));
    out.extend([RootSystemLabel::e6(), RootSystemLabel::e7()]);
    out
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = Config::resolve(&cli).map_err(Failure::Usage)?;
    match cli.command {
        Command::Rootsys { command: RootsysCommand::Info { sys } } => {
            emit(&cfg, &build(&sys)?.info());
        }
        Command::Orbit { sys: args, vector } => {
            let sys = build(&args)?;
            let v = sys.resolve_vector(&vector)?;
            let (orb, cached) = match &cfg.cache_dir {
                Some(dir) => cached_orbit(dir, &sys, &v, cfg.orbit_cap)?,
                None => (orbit(sys.simple_roots(), &v, cfg.orbit_cap)?, false),
            };
            let cw = base_coweight(&sys, &args)?;
            let stab = stabilizer_simple_roots(&sys, &cw.vector)?;
            let part = orbit_partition(&stab, &orb.to_vec())?;
            let mut blocks: Vec<Value> = part
                .as_sets()
                .into_iter()
                .map(|b| {
                    let levels: std::collections::BTreeSet<Rational> = b.iter().map(|x| x.dot(&cw.vector)).collect();
                    json!({"size": b.len(), "pairings_with_coweight": levels})
                })
                .collect();
            blocks.sort_by_key(|b| b["size"].as_u64());
            let mut value = json!({
                "label": sys.label(),
                "base": v,
                "size": orb.len(),
                "coweight": cw.name,
                "stabilizer_order": group_order(&stab, cfg.group_cap)?,
                "block_sizes": part.sizes(),
                "blocks": blocks,
            });
            if cfg.cache_dir.is_some() {
                value["cache_hit"] = json!(cached);
            }
            emit(&cfg, &value);
        }
        Command::Dominant { sys: args, vector } => {
            let sys = build(&args)?;
            let v = sys.resolve_vector(&vector)?;
            let (d, w) = dominant_rep_with(sys.simple_roots(), &v, cfg.orbit_cap)?;
            emit(&cfg, &json!({"label": sys.label(), "vector": v, "dominant": d, "word": w}));
        }
        Command::Conjugate { sys: args, vector, other } => {
            let sys = build(&args)?;
            let v = sys.resolve_vector(&vector)?;
            let w = sys.resolve_vector(&other)?;
            let (flag, word) = conjugate(&sys, &v, &w)?;
            emit(&cfg, &json!({"label": sys.label(), "vector": v, "other": w, "conjugate": flag, "word": word}));
        }
        Command::Verify { command } => verify(&cfg, command)?,
        Command::Triangle { command: TriangleCommand::Witness { sys: args, a, b, a2, b2, random, seed } } => {
            let sys = build(&args)?;
            let (t, t2) = if random {
                seeded_pair(&sys, &base_coweight(&sys, &args)?.vector, seed)?
            } else {
                let need = |s: &Option<String>, n: &str| {
                    s.as_deref()
                        .ok_or_else(|| Failure::Usage(format!("--{n} is required without --random")))
                        .and_then(|x| Ok(sys.resolve_vector(x)?))
                };
                (
                    Triangle::new(need(&a, "a")?, need(&b, "b")?),
                    Triangle::new(need(&a2, "a2")?, need(&b2, "b2")?),
                )
            };
            match triangle_witness(&sys, &t, &t2) {
                Ok(w) => emit(&cfg, &json!({"label": sys.label(), "t": t, "t2": t2, "word": w, "verified": true})),
                Err(e @ (Error::NoWitness(_) | Error::SearchExhausted(_) | Error::Construction(_))) => {
                    emit(&cfg, &json!({"label": sys.label(), "t": t, "t2": t2, "error": e.to_string()}));
                    return Err(Failure::Checks);
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(())
}

fn verify(cfg: &Config, command: VerifyCommand) -> Result<(), Failure> {
    let by_kind = |sys: &OptionalSystem, kind: Kind| -> Result<Vec<VerifyReport>, Failure> {
        let labels = match sys.label()? {
            Some(l) => vec![l],
            None => acceptance_labels(kind),
        };
        Ok(labels.into_iter().flat_map(|l| run_kind(l, kind, cfg.max_degree)).collect())
    };
    let reports = match command {
        VerifyCommand::Identities { sys } => by_kind(&sys, Kind::Identities)?,
        VerifyCommand::Orbits { sys } => by_kind(&sys, Kind::Orbits)?,
        VerifyCommand::Prop1 { sys: args, sample, explore_a } => {
            let sys = build(&args)?;
            let label = sys.label();
            match (explore_a, sample) {
                (Some(a), sample) => {
                    let a = sys.resolve_vector(&a)?;
                    let b = match &sample {
                        Some(s) => sys.resolve_vector(s)?,
                        None => sys.highest_root().clone(),
                    };
                    let mut r = fiber_check(&sys, &format!("{label}.explore"), &a, sample.as_deref().unwrap_or("highest-root"), &b)?;
                    if r.status == Status::Fail && r.details["minuscule"] == json!(false) {
                        // Outside the hypothesis a mismatch is a finding, not a failure.
                        r.status = Status::Inconclusive;
                        r.details["note"] = json!("a is not minuscule; fibers differ from stabilizer orbits");
                    }
                    vec![r]
                }
                (None, Some(s)) => {
                    let cw = base_coweight(&sys, &args)?.name.clone();
                    vec![verify_prop1(label, &cw, &s, &sys.resolve_vector(&s)?)?]
                }
                (None, None) => match &args.coweight {
                    None => run_kind(label, Kind::Prop1, None),
                    Some(c) => {
                        let cw = sys.coweight(c)?.name.clone();
                        let mut out = Vec::new();
                        for (name, b) in minuscule::verify::default_prop1_samples(&sys) {
                            out.push(verify_prop1(label, &cw, &name, &b)?);
                        }
                        out
                    }
                },
            }
        }
        VerifyCommand::Prop2 { sys: args, strategy, full_group } => {
            let sys = build(&args)?;
            let label = sys.label();
            let d = cfg.max_degree.unwrap_or_else(|| minuscule::verify::default_max_degree(label));
            let names: Vec<String> = match &args.coweight {
                Some(c) => vec![sys.coweight(c)?.name.clone()],
                None => sys.minuscule_coweights().iter().map(|c| c.name.clone()).collect(),
            };
            let mut out = Vec::new();
            for n in names {
                out.push(verify_prop2(label, &n, d, strategy, full_group)?);
            }
            out
        }
        VerifyCommand::All { sys } => match sys.label()? {
            Some(l) => label_suite(l, cfg.max_degree),
            None => {
                let mut all = Vec::new();
                for c in acceptance_criteria() {
                    let r = run_criterion(&c);
                    eprintln!("{}", r.line());
                    all.extend(r.reports);
                }
                all
            }
        },
    };
    emit_reports(cfg, &reports)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
