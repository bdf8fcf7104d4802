//! Command-line front end: argument parsing, report rendering and the result cache.

mod cache;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::adjoint::{dual_orbit, verify_adjoint_theorem};
use crate::error::{Error, Result};
use crate::gf::{make_field, parse_polynomial, FieldElement, FieldTower};
use crate::orbit::{
    extension_group_orbit, normalizer_orbit, orbit_size_lower_bound, singer_orbit, verify_inequality_lemmas,
    DEFAULT_ORBIT_CAP,
};
use crate::structure::{
    automorphism_group, brute_force_automorphisms, classify, fit_ell2, orbit_contains_subfield, predicted_weights, scan_exceptional,
    weight_distribution, AutMode, ClassifyOptions,
};
use crate::subspace::Subspace;

pub use report::{Format, Report, Row, Section};

#[derive(Parser, Debug, Clone, Serialize)]
#[command(name = "orbitcode", version, about = "Cyclic orbit codes in F_{q^n}")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone, Serialize)]
pub struct RunConfig {
    #[arg(long, global = true, default_value_t = 2)]
    pub p: u32,
    #[arg(long, global = true, default_value_t = 1)]
    pub e: u32,
    #[arg(long, global = true)]
    pub n: Option<u32>,
    #[arg(long, global = true)]
    pub k: Option<usize>,
    #[arg(long, global = true)]
    pub s: Option<u32>,
    /// Non-leading coefficients `c_0,..,c_{en-1}` of `x^{en} + Σ c_i x^i`.
    #[arg(long, global = true)]
    pub poly: Option<String>,
    /// Subspace literal, generators separated by `;` (e.g. `1;w^5`).
    #[arg(long, global = true)]
    pub subspace: Option<String>,
    /// Bound on enumerated subspaces and orbit sizes.
    #[arg(long, global = true, default_value_t = DEFAULT_ORBIT_CAP as u64)]
    pub cap: u64,
    /// Bound on orbit searches used to decide automorphism groups.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub group_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, global = true)]
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    #[serde(skip)]
    pub workers: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum OrbitGroup {
    Singer,
    Normalizer,
    Gl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum ModeArg {
    Singer,
    Normalizer,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
pub enum Command {
    /// Field tower parameters and subfield structure.
    Field,
    /// Singer orbits of k-subspaces grouped into isometry classes.
    Classify,
    /// Orbit of a subspace under a group.
    Orbit {
        #[arg(long, value_enum, default_value_t = OrbitGroup::Singer)]
        group: OrbitGroup,
        /// Also emit the dual orbit.
        #[arg(long)]
        dual: bool,
    },
    /// Weight distribution of a Singer orbit and the closed-form prediction.
    Weights,
    /// Automorphism group of a Singer or normalizer orbit.
    Aut {
        #[arg(long, value_enum, default_value_t = ModeArg::Singer)]
        mode: ModeArg,
        /// Compare with an exhaustive search over GL_n(q) of at most this order.
        #[arg(long)]
        brute_force: Option<u64>,
    },
    /// Checks that the canonical ρ conjugates adjoint groups back.
    AdjointVerify,
    /// Compares extension-field orbits with normalizer orbits where δ_s = 2.
    ScanExceptional,
    /// Exact check of the orbit and group-order inequalities.
    VerifyLemmas {
        #[arg(long, default_value_t = 5)]
        q_max: u64,
        #[arg(long, default_value_t = 4)]
        n_min: u32,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Field => "field",
            Command::Classify => "classify",
            Command::Orbit { .. } => "orbit",
            Command::Weights => "weights",
            Command::Aut { .. } => "aut",
            Command::AdjointVerify => "adjoint-verify",
            Command::ScanExceptional => "scan-exceptional",
            Command::VerifyLemmas { .. } => "verify-lemmas",
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } | Error::FieldTooLarge { .. } => EXIT_CAP,
        Error::NotPrime(_)
        | Error::InvalidParameter(_)
        | Error::NoDefaultPolynomial { .. }
        | Error::NonPrimitivePolynomial { .. }
        | Error::MalformedPolynomial(_)
        | Error::NotADivisor { .. }
        | Error::ZeroSubspace
        | Error::DimensionMismatch(..)
        | Error::MissingOne
        | Error::Literal(_)
        | Error::Precondition(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Parses `args`, runs the command and writes the report to `out`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    if let Some(w) = cli.config.workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    match execute_cached(&cli) {
        Ok((body, passed)) => {
            let _ = out.write_all(body.as_bytes());
            if passed {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs the command, consulting the cache directory when one is configured.
pub fn execute_cached(cli: &Cli) -> Result<(String, bool)> {
    let Some(dir) = &cli.config.cache_dir else {
        let r = execute(cli)?;
        return Ok((r.render(cli.config.format), r.passed));
    };
    let tower = tower_of(&cli.config).ok();
    let key = cache::key(cli, tower.as_deref().map(FieldTower::polynomial));
    if let Some(hit) = cache::load(dir, &key) {
        return Ok(hit);
    }
    let r = execute(cli)?;
    let body = r.render(cli.config.format);
    cache::store(dir, &key, &body, r.passed)?;
    Ok((body, r.passed))
}

fn tower_of(cfg: &RunConfig) -> Result<Arc<FieldTower>> {
    let n = cfg.n.ok_or_else(|| Error::InvalidParameter("--n is required".into()))?;
    let poly = cfg.poly.as_deref().map(parse_polynomial).transpose()?;
    make_field(cfg.p, cfg.e, n, poly.as_deref())
}

fn require_k(cfg: &RunConfig) -> Result<usize> {
    cfg.k.ok_or_else(|| Error::InvalidParameter("--k is required".into()))
}

fn require_s(cfg: &RunConfig) -> Result<u32> {
    cfg.s.ok_or_else(|| Error::InvalidParameter("--s is required".into()))
}

/// The `--subspace` literal, or `span{1, ω, .., ω^{k-1}}`.
fn subspace_of(t: &Arc<FieldTower>, cfg: &RunConfig) -> Result<Subspace> {
    match &cfg.subspace {
        Some(lit) => Subspace::parse(t, lit),
        None => {
            let k = require_k(cfg)?;
            let gens: Vec<FieldElement> = (0..k as i64).map(|i| t.omega_pow(i)).collect();
            Subspace::from_generators(t, &gens)
        }
    }
}

fn big(x: &impl ToString) -> Value {
    Value::String(x.to_string())
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn profile(p: &[(u32, usize)]) -> String {
    p.iter().map(|(s, d)| format!("{s}:{d}")).collect::<Vec<_>>().join(",")
}

fn tower_row(t: &FieldTower) -> Row {
    vec![
        ("p", json!(t.p())),
        ("e", json!(t.e())),
        ("n", json!(t.n())),
        ("q", json!(t.q())),
    ]
}

/// Runs one command without touching the cache.
pub fn execute(cli: &Cli) -> Result<Report> {
    let cfg = &cli.config;
    let name = cli.command.name();
    match &cli.command {
        Command::Field => {
            let t = tower_of(cfg)?;
            let mut head = tower_row(&t);
            head.push(("size", json!(t.size())));
            head.push(("polynomial", json!(join(t.polynomial()))));
            head.push(("omega_order", json!(t.omega_order())));
            let subfields = t
                .divisors()
                .into_iter()
                .map(|s| -> Result<Row> {
                    Ok(vec![
                        ("s", json!(s)),
                        ("order", json!(t.q_pow(s))),
                        ("generator", json!(t.format_element(t.subfield_generator(s)?))),
                        ("omega_exponent", json!(t.subfield_exponent(s)?)),
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            let ok = t.multiplicative_order(t.omega()) == Some(t.omega_order() as u64);
            Ok(Report::new(name, ok)
                .section("field", vec![head])
                .section("subfield", subfields)
                .summary("omega_primitive", json!(ok)))
        }
        Command::Classify => {
            let t = tower_of(cfg)?;
            let k = require_k(cfg)?;
            let c = classify(&t, k, ClassifyOptions { grassmannian_cap: cfg.cap, group_cap: cfg.group_cap })?;
            let rows = c
                .classes
                .iter()
                .map(|cl| {
                    vec![
                        ("rep", json!(cl.representative().literal())),
                        ("length", json!(cl.orbit_length)),
                        ("nu", json!(cl.nu())),
                        ("distance", json!(cl.distance.unwrap_or(0))),
                        ("omegas", json!(join(&cl.weights.omegas))),
                        ("delta", json!(profile(&cl.delta_profile))),
                        ("aut", json!(cl.aut.to_string())),
                        ("aut_order", cl.aut.order.as_ref().map(big).unwrap_or(Value::Null)),
                        ("ell2", json!(cl.ell2.map(|f| format!("eps={} r={}", f.epsilon, f.r)))),
                        ("resolution", json!(format!("{:?}", cl.resolution))),
                    ]
                })
                .collect();
            Ok(Report::new(name, true)
                .section("class", rows)
                .summary("orbits", json!(c.orbit_count))
                .summary("classes", json!(c.classes.len())))
        }
        Command::Orbit { group, dual } => {
            let t = tower_of(cfg)?;
            let u = subspace_of(&t, cfg)?;
            let orbit = match group {
                OrbitGroup::Singer => singer_orbit(&u),
                OrbitGroup::Normalizer => normalizer_orbit(&u),
                OrbitGroup::Gl => extension_group_orbit(&u, require_s(cfg)?, cfg.cap as usize)?,
            };
            let mut rows = vec![orbit_row(&orbit)];
            if *dual {
                rows.push(orbit_row(&dual_orbit(&orbit)?));
            }
            let mut rep = Report::new(name, true).section("orbit", rows).summary("size", json!(orbit.len()));
            if let (OrbitGroup::Gl, Some(s)) = (group, cfg.s) {
                let k = u.k() as u32;
                let r = u.delta_s(s)? as u32;
                if r >= 1 && s * r <= t.n() && r <= k {
                    let bound = orbit_size_lower_bound(t.q() as u64, t.n(), k, s, r.max(1))?;
                    rep = rep.summary("lower_bound", big(&bound));
                }
            }
            Ok(rep)
        }
        Command::Weights => {
            let t = tower_of(cfg)?;
            let u = subspace_of(&t, cfg)?.normalize_to_contain_one()?;
            let orbit = singer_orbit(&u);
            let w = weight_distribution(&orbit)?;
            let q = t.q() as u64;
            let (n, k) = (t.n(), u.k() as u32);
            let full = orbit.len() as u64 == (t.q_pow(n) - 1) / (q - 1);
            let d = w.distance().unwrap_or(0) as u32;
            let mut rep = Report::new(name, true).section(
                "weights",
                vec![vec![
                    ("rep", json!(orbit.canonical_rep().literal())),
                    ("length", json!(orbit.len())),
                    ("distance", json!(d)),
                    ("omegas", json!(join(&w.omegas))),
                ]],
            );
            let mut check = "none".to_string();
            let mut ok = true;
            if full && k >= 1 && d + 2 == 2 * k {
                let pred = predicted_weights(q, n, k, 1, 0, 0)?;
                ok = pred.omegas == w.omegas;
                check = "ell1".into();
            } else if full && k >= 2 && d + 4 == 2 * k {
                let contains = n % 2 == 0 && orbit_contains_subfield(&u, 2)?;
                match fit_ell2(q, w.omega(2 * k as usize - 4)) {
                    Some(f) => {
                        let pred = predicted_weights(q, n, k, 2, f.r, f.epsilon)?;
                        ok = pred.omegas == w.omegas && (f.epsilon == 1) == contains;
                        rep = rep.summary("epsilon", json!(f.epsilon)).summary("r", json!(f.r));
                    }
                    None => ok = false,
                }
                check = "ell2".into();
            }
            Ok(rep.summary("prediction", json!(check)).with_status(ok))
        }
        Command::Aut { mode, brute_force } => {
            let t = tower_of(cfg)?;
            let u = subspace_of(&t, cfg)?;
            let m = match mode {
                ModeArg::Singer => AutMode::Singer,
                ModeArg::Normalizer => AutMode::Normalizer,
            };
            let a = automorphism_group(&u, m, cfg.group_cap)?;
            let row = vec![
                ("kind", json!(format!("{:?}", a.kind))),
                ("s_min", json!(a.s_min)),
                ("galois_part", json!(join(&a.galois_part))),
                ("lower", json!(a.lower)),
                ("upper", json!(a.upper)),
                ("name", json!(a.name)),
                ("order", a.order.as_ref().map(big).unwrap_or(Value::Null)),
                ("exceptional", json!(join(&a.exceptional))),
            ];
            let mut rep = Report::new(name, true).section("aut", vec![row]);
            if let Some(cap) = brute_force {
                let code = match m {
                    AutMode::Singer => singer_orbit(&u),
                    AutMode::Normalizer => normalizer_orbit(&u),
                };
                let found = brute_force_automorphisms(&code, *cap)?.len();
                let agree = a.order.as_ref().is_some_and(|o| *o == found.into());
                rep = rep.summary("brute_force_order", json!(found)).with_status(agree);
            }
            Ok(rep)
        }
        Command::AdjointVerify => {
            let t = tower_of(cfg)?;
            let r = verify_adjoint_theorem(&t, cfg.samples, cfg.seed)?;
            let mut head = tower_row(&t);
            head.push(("rho_one", json!(r.rho_one)));
            head.push(("singer", json!(r.singer_ok)));
            head.push(("frobenius", json!(r.frobenius_ok)));
            let rows = r
                .ext_field
                .iter()
                .map(|c| vec![("s", json!(c.s)), ("samples", json!(c.samples)), ("failures", json!(c.failures))])
                .collect();
            Ok(Report::new(name, r.passed()).section("adjoint", vec![head]).section("ext_field", rows))
        }
        Command::ScanExceptional => {
            let t = tower_of(cfg)?;
            let r = scan_exceptional(&t, require_k(cfg)?, require_s(cfg)?, cfg.cap)?;
            let rows = r
                .hits
                .iter()
                .map(|h| vec![("rep", json!(h.rep)), ("size", json!(h.size)), ("singer_size", json!(h.singer_size))])
                .collect();
            Ok(Report::new(name, true)
                .section("hit", rows)
                .summary("delta2", json!(r.delta2_count))
                .summary("gl_orbits", json!(join(&r.gl_orbit_sizes)))
                .summary("normalizer_orbits", json!(r.normalizer_orbit_count))
                .summary("coinciding", json!(r.coinciding_subspaces))
                .summary("split_normalizer_orbits", json!(r.split_normalizer_orbits)))
        }
        Command::VerifyLemmas { q_max, n_min, n_max } => {
            let r = verify_inequality_lemmas(*q_max, *n_min, *n_max);
            let mut rows: Vec<Row> =
                r.checked.iter().map(|(l, c)| vec![("lemma", json!(l)), ("checked", json!(c))]).collect();
            rows.extend(r.violations.iter().map(|v| {
                vec![("lemma", json!(v.lemma)), ("violation", json!(format!("{:?}", v.params)))]
            }));
            let fails: Vec<Row> = r
                .normalizer_r2_failures
                .iter()
                .map(|&(q, n, k, s)| vec![("q", json!(q)), ("n", json!(n)), ("k", json!(k)), ("s", json!(s))])
                .collect();
            let triples = r.normalizer_r2_failure_triples();
            Ok(Report::new(name, r.violations.is_empty())
                .section("lemma", rows)
                .section("normalizer_r2_failure", fails)
                .summary("violations", json!(r.violations.len()))
                .summary(
                    "r2_failure_triples",
                    json!(triples.iter().map(|(q, n, k)| format!("({q},{n},{k})")).collect::<Vec<_>>().join(";")),
                ))
        }
    }
}

fn orbit_row(o: &crate::orbit::OrbitCode) -> Row {
    let rec = o.record();
    vec![
        ("group", json!(rec.group)),
        ("p", json!(rec.p)),
        ("e", json!(rec.e)),
        ("n", json!(rec.n)),
        ("k", json!(rec.k)),
        ("s", json!(rec.s)),
        ("rep", json!(rec.rep)),
        ("size", json!(rec.size)),
        ("distance", json!(o.min_distance())),
        ("digest", json!(rec.digest)),
    ]
}
