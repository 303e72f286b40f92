//! Command-line front end. Exit codes: 0 when every check passes, 1 when
//! some check fails, 2 on a usage or configuration error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cherednik::{ModuleContext, MAX_DEGREE_CAP};
use crate::dihedral::{DihedralError, Irrep};
use crate::report::Report;
use crate::scalars::{parse_rational, ParamValues, Rational};
use crate::suites::{self, Suite};

/// Seed for the randomized decomposition inputs, fixed so reports are stable.
pub const SPINOR_SEED: u64 = 0xC11F;
/// Random round-trip inputs per `(k, l)` cell.
pub const SPINOR_SAMPLES: usize = 3;
/// Float threshold for Gram positivity.
pub const GRAM_TOL: f64 = 1e-8;

#[derive(Parser, Debug)]
#[command(name = "cherednik-howe", version, about = "Exact checks for dihedral Cherednik modules and their Howe dual pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run relation suites as exact matrix identities.
    Verify(CommonArgs),
    /// Spectrum of Z0 + epsilon sigma on harmonics, per degree.
    Spectrum(CommonArgs),
    /// Monogenic tables, weights and decomposition round trips.
    Spinor(CommonArgs),
    /// Positivity of the contravariant form, per degree.
    Gram(CommonArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Sl2,
    U11,
    U21,
    Scasimir,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Sl2 => Suite::Sl2,
            SuiteArg::U11 => Suite::U11,
            SuiteArg::U21 => Suite::U21,
            SuiteArg::Scasimir => Suite::Scasimir,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Order parameter of the dihedral group I_2(m).
    #[arg(long, allow_negative_numbers = true)]
    pub m: i64,
    /// Irrep: triv, sign, chi0, chi1 (even m) or rho:u.
    #[arg(long, default_value = "triv")]
    pub tau: String,
    /// Parameter on every reflection.
    #[arg(long)]
    pub c: Option<String>,
    /// Parameter on the reflections s_j with j even.
    #[arg(long)]
    pub c_even: Option<String>,
    /// Parameter on the reflections s_j with j odd.
    #[arg(long)]
    pub c_odd: Option<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub epsilon: String,
    #[arg(long, default_value_t = 10)]
    pub max_degree: usize,
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A validated configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub m: u32,
    pub tau: Irrep,
    pub params: ParamValues,
    pub epsilon: Rational,
    pub max_degree: usize,
    pub suite: Suite,
}

impl RunConfig {
    pub fn from_args(a: &CommonArgs) -> Result<Self, String> {
        if a.m < 3 {
            return Err(DihedralError::OrderTooSmall(a.m.max(0) as u32).to_string());
        }
        let m = u32::try_from(a.m).map_err(|_| format!("m = {} is too large", a.m))?;
        let tau: Irrep = a.tau.parse().map_err(|e: DihedralError| e.to_string())?;
        tau.validate(m).map_err(|e| e.to_string())?;
        let base = a.c.clone().unwrap_or_else(|| "0".into());
        let even = a.c_even.clone().unwrap_or_else(|| base.clone());
        let odd = a.c_odd.clone().unwrap_or(base);
        let params = ParamValues::parse(m, &even, &odd).map_err(|e| e.to_string())?;
        let epsilon = parse_rational(&a.epsilon).map_err(|e| e.to_string())?;
        if a.max_degree > MAX_DEGREE_CAP {
            return Err(format!("max-degree {} exceeds the cap of {MAX_DEGREE_CAP}", a.max_degree));
        }
        Ok(RunConfig {
            m,
            tau,
            params,
            epsilon,
            max_degree: a.max_degree,
            suite: a.suite.into(),
        })
    }

    fn to_json(&self, command: &str) -> serde_json::Value {
        json!({
            "command": command,
            "m": self.m,
            "tau": self.tau.to_string(),
            "c_even": self.params.c_even.to_string(),
            "c_odd": self.params.c_odd.to_string(),
            "epsilon": self.epsilon.to_string(),
            "max_degree": self.max_degree,
            "suite": self.suite.name(),
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn context(&self) -> Result<ModuleContext, String> {
        ModuleContext::new(self.m, self.tau, self.params.clone(), self.max_degree).map_err(|e| e.to_string())
    }
}

/// Runs one command and builds its report.
pub fn execute(command: &Command) -> Result<(Report, CommonArgs), String> {
    let (name, args) = match command {
        Command::Verify(a) => ("verify", a),
        Command::Spectrum(a) => ("spectrum", a),
        Command::Spinor(a) => ("spinor", a),
        Command::Gram(a) => ("gram", a),
    };
    let config = RunConfig::from_args(args)?;
    let ctx = config.context()?;
    let start = Instant::now();
    let entries = match command {
        Command::Verify(_) => suites::verify(&ctx, config.suite),
        Command::Spectrum(_) => suites::spectrum_entries(&ctx, &config.epsilon),
        Command::Spinor(_) => suites::spinor_entries(&ctx, SPINOR_SAMPLES, SPINOR_SEED),
        Command::Gram(_) => suites::gram_entries(&ctx, GRAM_TOL),
    }
    .map_err(|e| e.to_string())?;
    let mut report = Report::new(config.to_json(name), entries);
    report.summary.elapsed_seconds = Some(start.elapsed().as_secs_f64());
    Ok((report, args.clone()))
}

/// Parses `args`, runs the command, writes the report and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (report, args) = match execute(&cli.command) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let text = match args.output {
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Csv => match report.to_csv() {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        },
    };
    let written = match &args.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    eprintln!(
        "{} checks: {} passed, {} failed, {} skipped",
        report.summary.total, report.summary.passed, report.summary.failed, report.summary.skipped
    );
    if report.all_passed() {
        0
    } else {
        1
    }
}
