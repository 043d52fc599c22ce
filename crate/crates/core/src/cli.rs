//! Command-line front end. The binary only forwards to [`run`], which
//! returns the rendered output and the exit code.
//!
//! Exit codes: 0 Proved or pass, 1 Refuted or fail, 2 input error,
//! 3 capacity exceeded, 4 unknown at the configured bound.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::bounds::Bounds;
use crate::certificate::{Certificate, SpaceDef};
use crate::engine::{Engine, Mode};
use crate::error::{Error, Result};
use crate::report::analyze;
use crate::ring::FiniteRing;
use crate::schema::{AutomorphismSpec, InputDef};
use crate::suites::{resolve_suite, run_suites};
use crate::symbolic::{complementary_family, sym_minimal_generator_exists, OracleBounds, SymGenerator, SymOracle};
use crate::topology::chain::{chain_has_minimal_cover, chain_positively_expansive, shift_map, ChainCover};
use crate::topology::space::FiniteSpace;
use crate::topology::zariski::{spec_space, sym_spec};

#[derive(Debug, Parser)]
#[command(name = "ringdyn", version, about = "Expansive automorphisms of finite and semilocal rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// Validate a certificate file without searching.
    #[arg(long, value_name = "FILE", global = true)]
    pub check_certificate: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,

    #[command(flatten)]
    pub bounds: BoundsArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Export {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Expansive,
    Positive,
    Zero,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Expansive => Mode::Expansive,
            ModeArg::Positive => Mode::Positive,
            ModeArg::Zero => Mode::Zero,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChainCheck {
    /// Positive expansivity of a shift with a given cover.
    Positive,
    /// Existence of a cover refining every cover.
    Minimal,
}

#[derive(Debug, Default, Args)]
pub struct BoundsArgs {
    #[arg(long = "bounds.order", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub order: Option<u64>,
    #[arg(long = "bounds.automorphisms", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub automorphisms: Option<u64>,
    #[arg(long = "bounds.lattice", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub lattice: Option<u64>,
    #[arg(long = "bounds.search", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub search: Option<u64>,
    #[arg(long = "bounds.space-points", global = true, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub space_points: Option<u64>,
    #[arg(long = "bounds.covers", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub covers: Option<u64>,
    #[arg(long = "bounds.oracle-steps", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub oracle_steps: Option<u64>,
    #[arg(long = "bounds.oracle-exponent", global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub oracle_exponent: Option<u32>,
}

impl BoundsArgs {
    pub fn resolve(&self) -> Bounds {
        let mut b = Bounds::default();
        let set = |slot: &mut usize, v: Option<u64>| {
            if let Some(v) = v {
                *slot = v as usize;
            }
        };
        set(&mut b.order, self.order);
        set(&mut b.automorphisms, self.automorphisms);
        set(&mut b.lattice, self.lattice);
        set(&mut b.search, self.search);
        set(&mut b.space_points, self.space_points);
        set(&mut b.covers, self.covers);
        set(&mut b.oracle_steps, self.oracle_steps);
        if let Some(e) = self.oracle_exponent {
            b.oracle_exponent = e;
        }
        b
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ideals, maximal ideals, local decomposition and automorphism census.
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
    /// Decide expansivity of an automorphism.
    Expansivity {
        #[arg(long)]
        input: PathBuf,
        /// `identity`, `frobenius`, `swap:<i>,<j>` or a JSON image list.
        #[arg(long, default_value = "identity")]
        automorphism: String,
        #[arg(long, value_enum, default_value = "expansive")]
        mode: ModeArg,
        /// Candidate generator for the semilocal ring, as JSON.
        #[arg(long)]
        generator: Option<String>,
    },
    /// Export the prime spectrum of a ring, or a space definition.
    Spec {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    /// Decide properties of the chain space.
    Chain {
        #[arg(long, value_enum, default_value = "positive")]
        check: ChainCheck,
        /// +1 for the shift toward the endpoints, -1 for its inverse, 0 for
        /// the identity.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        shift: i64,
        /// Cover as a JSON list of `[neg, pos]` cut pairs.
        #[arg(long)]
        cover: Option<String>,
        /// Adversary cuts range over `[-window, window]`.
        #[arg(long, default_value_t = 5)]
        window: i64,
        /// Largest window product examined; defaults to `2 * window + 2`.
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Run a verification suite by name or number, or `all`.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Rendered output and exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn new(stdout: String, code: i32) -> Self {
        Self { stdout, code }
    }
}

fn read_input(path: &PathBuf) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn certificate_text(cert: &Certificate) -> String {
    let v = serde_json::to_value(cert).expect("serializable");
    let mut s = String::new();
    let _ = writeln!(s, "{} {:?}", v["kind"].as_str().unwrap_or(""), cert.status());
    let verdict = &v["verdict"];
    for key in ["witness", "refuter", "stable_from", "cycle_length", "uniform_n", "scope"] {
        if !verdict[key].is_null() {
            let _ = writeln!(s, "{key}: {}", verdict[key]);
        }
    }
    if let Some(t) = verdict["n_table"].as_array() {
        let _ = writeln!(s, "targets: {}", t.len());
    }
    s
}

fn emit_certificate(cert: &Certificate, format: Format) -> Result<Outcome> {
    let out = match format {
        Format::Text => certificate_text(cert),
        _ => to_json(cert),
    };
    Ok(Outcome::new(out, cert.status().exit_code()))
}

fn cmd_check_certificate(path: &PathBuf, bounds: &Bounds, format: Format) -> Result<Outcome> {
    let cert: Certificate = serde_json::from_value(read_input(path)?).map_err(|e| Error::Parse(e.to_string()))?;
    let status = cert.status();
    match cert.check(bounds) {
        Ok(()) => {
            let out = match format {
                Format::Text => format!("certificate valid: {status:?}\n"),
                _ => to_json(&serde_json::json!({ "valid": true, "status": status })),
            };
            Ok(Outcome::new(out, 0))
        }
        Err(e @ Error::Invariant(_)) | Err(e @ Error::Domain(_)) => {
            let out = match format {
                Format::Text => format!("{e}\n"),
                _ => to_json(&serde_json::json!({ "valid": false, "status": status, "reason": e.to_string() })),
            };
            Ok(Outcome::new(out, 1))
        }
        Err(e) => Err(e),
    }
}

fn cmd_analyze(input: &PathBuf, bounds: &Bounds, format: Format) -> Result<Outcome> {
    match InputDef::from_value(read_input(input)?)? {
        InputDef::Finite(def) => {
            let ring = FiniteRing::from_def(&def, bounds)?;
            if format == Format::Dot {
                return Ok(Outcome::new(ring.enumerate_ideals(bounds)?.to_dot(), 0));
            }
            let report = analyze(&ring, bounds)?;
            let out = match format {
                Format::Text => report.to_text(&ring),
                _ => to_json(&report),
            };
            Ok(Outcome::new(out, 0))
        }
        InputDef::Semilocal { .. } => Err(Error::Domain("analyze needs a finite ring".into())),
    }
}

fn cmd_expansivity(
    input: &PathBuf,
    automorphism: &str,
    mode: Mode,
    generator: Option<&str>,
    bounds: &Bounds,
    format: Format,
) -> Result<Outcome> {
    let spec: AutomorphismSpec = automorphism.parse()?;
    match InputDef::from_value(read_input(input)?)? {
        InputDef::Finite(def) => {
            let ring = FiniteRing::from_def(&def, bounds)?;
            let alpha = spec.resolve(&ring)?;
            let eng = Engine::new(&ring, bounds)?;
            let verdict = match generator {
                Some(g) => {
                    let elems: Vec<Value> = parse_json("generator", g)?;
                    let elems = elems.iter().map(|v| ring.decode(v)).collect::<Result<Vec<_>>>()?;
                    let cand = eng.lattice().generator_from_elements(&elems)?;
                    eng.is_expansivity_generator(&alpha, &cand, mode)?
                }
                None => eng.decide(&alpha, mode)?,
            };
            emit_certificate(&Certificate::ring_verdict(&eng, &alpha, mode, &verdict), format)
        }
        InputDef::Semilocal { k, .. } => {
            let perm = spec.resolve_perm(k)?;
            if mode == Mode::Zero {
                let verdict = sym_minimal_generator_exists(k)?;
                return emit_certificate(&Certificate::SymbolicMinimal { k, verdict }, format);
            }
            let cand = match generator {
                Some(g) => {
                    let members = parse_json("generator", g)?;
                    SymGenerator::new(k, members)?
                }
                None => complementary_family(k)?,
            };
            let ob = OracleBounds {
                max_steps: bounds.oracle_steps,
                adversary_bound: bounds.oracle_exponent,
            };
            let o = SymOracle::new(k, ob)?.decide(&cand, &perm, mode == Mode::Positive)?;
            match Certificate::symbolic_oracle(&perm, mode == Mode::Positive, ob, &o) {
                Some(c) => emit_certificate(&c, format),
                None => {
                    let out = match format {
                        Format::Text => format!("{:?}\n", o.verdict.status),
                        _ => to_json(&o),
                    };
                    Ok(Outcome::new(out, o.verdict.status.exit_code()))
                }
            }
        }
    }
}

fn space_of_input(v: Value, bounds: &Bounds) -> Result<FiniteSpace> {
    if v.get("points").is_some() && v.get("order").is_some() {
        // Exports list point labels; definitions give a point count.
        if let Some(labels) = v["points"].as_array() {
            let labels: Vec<String> = labels
                .iter()
                .map(|l| l.as_str().map(str::to_string).unwrap_or_else(|| l.to_string()))
                .collect();
            let order: Vec<(usize, usize)> =
                serde_json::from_value(v["order"].clone()).map_err(|e| Error::Parse(e.to_string()))?;
            if labels.len() > bounds.space_points {
                return Err(Error::capacity("space points", labels.len(), bounds.space_points));
            }
            let shape = SpaceDef { points: labels.len(), order }.build()?;
            return FiniteSpace::from_order(labels.len(), |a, b| shape.le(a, b), labels);
        }
        let def: SpaceDef = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        if def.points > bounds.space_points {
            return Err(Error::capacity("space points", def.points, bounds.space_points));
        }
        return def.build();
    }
    match InputDef::from_value(v)? {
        InputDef::Finite(def) => {
            let ring = FiniteRing::from_def(&def, bounds)?;
            let lat = ring.enumerate_ideals(bounds)?;
            Ok(spec_space(&lat, bounds)?.space().clone())
        }
        InputDef::Semilocal { k, .. } => sym_spec(k),
    }
}

fn cmd_spec(input: &PathBuf, export: Option<Export>, bounds: &Bounds, format: Format) -> Result<Outcome> {
    let space = space_of_input(read_input(input)?, bounds)?;
    let dot = match export {
        Some(e) => e == Export::Dot,
        None => format == Format::Dot,
    };
    let out = if dot {
        space.to_dot()
    } else if format == Format::Text && export.is_none() {
        let mut s = String::new();
        for (p, label) in space.labels().iter().enumerate() {
            let above: Vec<usize> = (0..space.len()).filter(|&q| q != p && space.le(p, q)).collect();
            let _ = writeln!(s, "{p} {label} below {above:?}");
        }
        s
    } else {
        to_json(&space.to_json())
    };
    Ok(Outcome::new(out, 0))
}

fn cmd_chain(
    check: ChainCheck,
    shift: i64,
    cover: Option<&str>,
    window: i64,
    steps: Option<usize>,
    format: Format,
) -> Result<Outcome> {
    if window < 0 {
        return Err(Error::Domain("window must be non-negative".into()));
    }
    let cert = match check {
        ChainCheck::Minimal => Certificate::ChainMinimal {
            verdict: chain_has_minimal_cover(window)?,
        },
        ChainCheck::Positive => {
            if !(-1..=1).contains(&shift) {
                return Err(Error::Domain("shift must be -1, 0 or 1".into()));
            }
            let u = match cover {
                Some(c) => {
                    let parsed: ChainCover = parse_json("cover", c)?;
                    ChainCover::new(parsed.members().to_vec())?
                }
                None => ChainCover::standard(),
            };
            let n_max = steps.unwrap_or(2 * window as usize + 2);
            let h = shift_map(shift);
            Certificate::ChainPositive {
                shift: h,
                verdict: chain_positively_expansive(h, &u, window, n_max)?,
            }
        }
    };
    emit_certificate(&cert, format)
}

fn cmd_verify(suite: &str, seed: u64, bounds: &Bounds, format: Format) -> Result<Outcome> {
    let ids = resolve_suite(suite)?;
    let reports = run_suites(&ids, bounds, seed)?;
    let passed = reports.iter().all(|r| r.passed);
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{}", r.summary_line());
                for f in &r.failures {
                    let _ = writeln!(s, "    failure: {f}");
                }
            }
            s
        }
        _ => to_json(&serde_json::json!({ "seed": seed, "passed": passed, "suites": reports })),
    };
    Ok(Outcome::new(out, if passed { 0 } else { 1 }))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let bounds = cli.bounds.resolve();
    let format = cli.format;
    if let Some(path) = &cli.check_certificate {
        return cmd_check_certificate(path, &bounds, format);
    }
    match &cli.command {
        None => Err(Error::Parse("no command given; see --help".into())),
        Some(Command::Analyze { input }) => cmd_analyze(input, &bounds, format),
        Some(Command::Expansivity {
            input,
            automorphism,
            mode,
            generator,
        }) => cmd_expansivity(input, automorphism, (*mode).into(), generator.as_deref(), &bounds, format),
        Some(Command::Spec { input, export }) => cmd_spec(input, *export, &bounds, format),
        Some(Command::Chain {
            check,
            shift,
            cover,
            window,
            steps,
        }) => cmd_chain(*check, *shift, cover.as_deref(), *window, *steps, format),
        Some(Command::Verify { suite, seed }) => cmd_verify(suite, *seed, &bounds, format),
    }
}

/// Runs a parsed command line. On error the exit code comes from
/// [`Error::exit_code`].
pub fn run(cli: &Cli) -> Result<Outcome> {
    dispatch(cli)
}
