//! Batch front end: argument parsing, the five commands, and report output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::checks::{bijection_table, check_hilbert, run_suite, stream_rng, CheckResult, SignFault, Status};
use crate::error::Error;
use crate::lattice::{enumerate_pd, verify_bijection, z_of};
use crate::pluecker::{sample_richardson_point_with, MinorTable, Monomial};
use crate::rings::hilbert;
use crate::setup::QuotientSetup;
use crate::straighten::straighten_invariant_product;
use crate::tableaux::{enumerate_invariant_tableaux, Tableau};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Args)]
pub struct RunConfig {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    /// Inner values l_1..l_{r-1}, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub l: Vec<usize>,
    #[arg(long = "dmax", default_value_t = 3)]
    pub d_max: usize,
    /// Oracle matrices per check.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flip the sign of one shuffle term in the oracle check.
    #[arg(long, hide = true)]
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub inject_sign_fault: bool,
}

impl RunConfig {
    pub fn new(r: usize, n: usize, l: &[usize]) -> Self {
        Self {
            r,
            n,
            l: l.to_vec(),
            d_max: 3,
            samples: 20,
            seed: 0,
            format: Format::Json,
            out: None,
            inject_sign_fault: false,
        }
    }

    pub fn setup(&self) -> Result<QuotientSetup, CliError> {
        if self.samples < 1 {
            return Err(CliError::Invalid("--samples must be at least 1".into()));
        }
        if self.d_max < 1 {
            return Err(CliError::Invalid("--dmax must be at least 1".into()));
        }
        Ok(QuotientSetup::new(self.r, self.n, &self.l)?)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Math(#[from] Error),
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INVALID_INPUT
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "richardson",
    version,
    about = "Invariant standard monomials on Richardson varieties X^{v_l}_w in G(r,n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// a, c, l, the coordinate blocks, w, v_l and the predicted quotient.
    Setup(RunConfig),
    /// ST(λ_d) and P_d for d <= dmax with the bijection table.
    Enumerate(RunConfig),
    /// All verification suites.
    Verify(RunConfig),
    /// dim R_d, dim A_d for d <= dmax.
    Hilbert(RunConfig),
    /// s(Γ1Γ2) for two invariant tableaux read from files.
    Straighten {
        #[command(flatten)]
        cfg: RunConfig,
        first: PathBuf,
        second: PathBuf,
    },
}

/// Output of one command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub results: Vec<CheckResult>,
    #[serde(skip)]
    pub table: Option<Vec<crate::rings::HilbertRow>>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(CheckResult::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_PASS
        } else {
            EXIT_CHECK_FAILED
        }
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        if let Some(rows) = &self.table {
            w.write_record(["d", "dimR", "dimA", "equal"]).expect("in-memory write");
            for row in rows {
                let rec = [row.d.to_string(), row.dim_r.to_string(), row.dim_a.to_string(), row.equal().to_string()];
                w.write_record(&rec).expect("in-memory write");
            }
        } else {
            w.write_record(["check", "status"]).expect("in-memory write");
            for c in &self.results {
                let status = if c.passed() { "pass" } else { "fail" };
                w.write_record([c.check.as_str(), status]).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.results {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(out, "[{tag}] {}", c.check);
            let _ = writeln!(out, "  {}", c.detail);
        }
        out
    }
}

fn report(cfg: &RunConfig, results: Vec<CheckResult>) -> Report {
    Report { config: cfg.clone(), results, table: None }
}

fn labelled(s: &QuotientSetup) -> Value {
    let blocks: Vec<Value> = (1..s.r())
        .map(|i| {
            json!({
                "i": i,
                "C1": s.c1(i).iter().collect::<Vec<_>>(),
                "C2": s.c2(i).iter().collect::<Vec<_>>(),
            })
        })
        .collect();
    let coords: Vec<String> = s.coordinates().iter().map(|(i, j)| format!("({i},{j})")).collect();
    json!({ "blocks": blocks, "coordinates": coords })
}

pub fn cmd_setup(cfg: &RunConfig) -> Result<Report, CliError> {
    let s = cfg.setup()?;
    let mut violations = s.invariant_violations();
    violations.extend(s.disjointness_violations());
    let factors: Vec<Value> =
        s.quotient_factors().iter().map(|&(dim, twist)| json!({ "projective_dim": dim, "twist": twist })).collect();
    let quotient =
        s.quotient_factors().iter().map(|&(dim, twist)| format!("P^{dim}(O({twist}))")).collect::<Vec<_>>().join(" x ");
    let detail = json!({
        "a": s.a_vec(),
        "c": s.c_vec(),
        "l": s.l_vec(),
        "C": labelled(&s),
        "w": s.w(),
        "v": s.v(),
        "v_l": s.vl(),
        "quotient": { "factors": factors, "display": quotient },
        "violations": violations,
    });
    Ok(report(cfg, vec![CheckResult { check: "setup".into(), status: status(violations.is_empty()), detail }]))
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

pub fn cmd_enumerate(cfg: &RunConfig) -> Result<Report, CliError> {
    let s = cfg.setup()?;
    let mut results = Vec::new();
    for d in 1..=cfg.d_max {
        let st = enumerate_invariant_tableaux(&s, d);
        let table = bijection_table(&s, d)?;
        let rep = verify_bijection(&s, d);
        let rows: Vec<Value> = table.iter().map(|(z, g)| json!({ "z": z, "tableau": g })).collect();
        let detail = json!({
            "d": d,
            "coordinates": labelled(&s)["coordinates"],
            "st_count": st.len(),
            "pd_count": enumerate_pd(&s, d).len(),
            "formula": rep.formula,
            "st": st,
            "bijection": rows,
            "failures": rep.failures,
        });
        results.push(CheckResult { check: format!("enumerate d={d}"), status: status(rep.passed()), detail });
    }
    Ok(report(cfg, results))
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Report, CliError> {
    let s = cfg.setup()?;
    let fault = cfg.inject_sign_fault.then(SignFault::default);
    Ok(report(cfg, run_suite(&s, cfg.d_max, cfg.samples, cfg.seed, fault)))
}

pub fn cmd_hilbert(cfg: &RunConfig) -> Result<Report, CliError> {
    let s = cfg.setup()?;
    let mut rep = report(cfg, vec![check_hilbert(&s, cfg.d_max)]);
    rep.table = Some(hilbert(&s, cfg.d_max));
    Ok(rep)
}

fn read_tableau(path: &Path) -> Result<Tableau, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    Tableau::parse_grid(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn degree_of(g: &Tableau, s: &QuotientSetup, path: &Path) -> Result<usize, CliError> {
    if g.rows() != s.r() || !g.cols().is_multiple_of(s.n()) {
        return Err(CliError::Invalid(format!(
            "{}: expected {} rows and a multiple of {} columns, found {}x{}",
            path.display(),
            s.r(),
            s.n(),
            g.rows(),
            g.cols()
        )));
    }
    Ok(g.cols() / s.n())
}

pub fn cmd_straighten(cfg: &RunConfig, first: &Path, second: &Path) -> Result<Report, CliError> {
    let s = cfg.setup()?;
    let g1 = read_tableau(first)?;
    let g2 = read_tableau(second)?;
    let d1 = degree_of(&g1, &s, first)?;
    let d2 = degree_of(&g2, &s, second)?;
    let out = straighten_invariant_product(&g1, &g2, &s, d1, d2)?;

    let mut rng = stream_rng(cfg.seed, 8);
    let mut agree = 0usize;
    let mut mismatch = None;
    let mut nonzero = false;
    let f = |g: &Tableau, m: &MinorTable| Monomial::of_tableau(g).expect("column standard").evaluate_with(m);
    for idx in 0..cfg.samples {
        let x = sample_richardson_point_with(&s, &mut rng)?;
        let m = MinorTable::new(&x);
        let (lhs, rhs) = (f(&g1, &m) * f(&g2, &m), f(&out, &m));
        nonzero |= !rhs.is_zero();
        if lhs == rhs {
            agree += 1;
        } else if mismatch.is_none() {
            mismatch = Some(json!({ "sample": idx, "matrix": x, "lhs": lhs.to_string(), "rhs": rhs.to_string() }));
        }
    }
    let z_ok = z_of(&out, &s) == z_of(&g1, &s).add(&z_of(&g2, &s));
    let ok = mismatch.is_none() && nonzero && z_ok;
    let detail = json!({
        "degrees": [d1, d2],
        "product": out,
        "z": z_of(&out, &s),
        "z_additive": z_ok,
        "samples_agreeing": agree,
        "samples": cfg.samples,
        "nonzero_sample": nonzero,
        "counterexample": mismatch,
    });
    Ok(report(cfg, vec![CheckResult { check: "straighten".into(), status: status(ok), detail }]))
}

/// Runs a parsed command line and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let (cfg, result) = match &cli.command {
        Command::Setup(c) => (c, cmd_setup(c)),
        Command::Enumerate(c) => (c, cmd_enumerate(c)),
        Command::Verify(c) => (c, cmd_verify(c)),
        Command::Hilbert(c) => (c, cmd_hilbert(c)),
        Command::Straighten { cfg, first, second } => (cfg, cmd_straighten(cfg, first, second)),
    };
    let rep = match result {
        Ok(rep) => rep,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let text = rep.render();
    match &cfg.out {
        Some(path) => {
            if let Err(source) = std::fs::write(path, text) {
                eprintln!("error: {}", CliError::Io { path: path.clone(), source });
                return EXIT_INVALID_INPUT;
            }
        }
        None => print!("{text}"),
    }
    rep.exit_code()
}
