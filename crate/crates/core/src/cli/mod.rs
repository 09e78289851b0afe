//! Command-line front end. [`run`] parses arguments, dispatches one job and
//! returns the process exit code.

mod commands;
mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::fock::FockConfig;
use crate::hecke::HeckeParams;
use crate::shapes::Modulus;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_ASSERTION: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cyclohecke", version, about = "Exact computations in cyclotomic Hecke algebras, Fock spaces and canonical bases")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Level m.
    #[arg(short = 'm', global = true)]
    pub m: Option<usize>,
    /// Rank n.
    #[arg(short = 'n', global = true)]
    pub n: Option<usize>,
    /// Residue modulus r (integer >= 2 or `inf`).
    #[arg(short = 'r', global = true)]
    pub r: Option<String>,
    /// Residue vector, e.g. "[0,1]".
    #[arg(long, global = true)]
    pub gamma: Option<String>,
    /// Parameter q, e.g. "z3^1" or "-1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Parameters v_1..v_m, e.g. "[1,-1]".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub v: Option<String>,
    /// Multipartition, e.g. "[[2],[1]]".
    #[arg(long, global = true)]
    pub lambda: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest Hecke algebra dimension m^n n! accepted.
    #[arg(long, global = true, default_value_t = 5000)]
    pub max_dim: usize,
    /// Largest n accepted by the combinatorial subcommands.
    #[arg(long, global = true, default_value_t = 12)]
    pub max_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tex,
    Table,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Semisimplicity criterion with the first vanishing term.
    Semisimple,
    /// Gram matrices and ranks for --lambda or every shape of size n.
    Gram,
    /// Shapes with D^λ ≠ 0, from Gram ranks.
    Simples,
    /// Kleshchev test for --lambda, or enumeration.
    Kleshchev {
        /// List the Kleshchev multipartitions of this size.
        #[arg(long)]
        enumerate: Option<usize>,
        /// Counts for sizes 0..=N.
        #[arg(long)]
        series: Option<usize>,
    },
    /// Crystal graph of ∅ to depth n, as DOT.
    Crystal,
    /// Apply a word such as "f1 f0" (rightmost first) to --lambda.
    FockApply {
        #[arg(long)]
        word: String,
    },
    /// Level-one canonical basis and decomposition matrix.
    Llt {
        /// Only the decomposition matrix.
        #[arg(long)]
        matrix: bool,
        /// Only the canonical basis.
        #[arg(long)]
        basis: bool,
    },
    /// Check Σ_μ d_λμ dim D^μ = dim S^λ against Gram ranks at q = ζ_r.
    DecompCheck,
    /// Multisegment counts.
    Multiseg {
        /// List the aperiodic multisegments.
        #[arg(long)]
        enumerate: bool,
        /// Number of labels for the family count.
        #[arg(long, default_value_t = 1)]
        labels: usize,
        /// Start window for r = inf.
        #[arg(long)]
        window: Option<usize>,
    },
    /// Run the invariant suites at desk scale.
    Selftest,
}

/// Rendered result of one job.
pub enum Output {
    Structured { json: Value, table: String, tex: String },
    Raw(String),
}

impl Output {
    fn render(&self, format: Format) -> String {
        match self {
            Output::Raw(s) => s.clone(),
            Output::Structured { json, table, tex } => match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(json).expect("json")),
                Format::Table => table.clone(),
                Format::Tex => tex.clone(),
            },
        }
    }
}

/// A job result with the exit code it implies.
pub struct Outcome {
    pub output: Output,
    pub code: i32,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Outcome { output, code: EXIT_OK }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) | Error::Singular | Error::NotDivisible(..) => EXIT_ASSERTION,
        Error::ResourceCap(_) => EXIT_CAP,
        _ => EXIT_INVALID,
    }
}

/// Parse `args` (including the program name), run the job, and return the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.common.threads {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::InvalidArgument(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(outcome) => {
            let text = outcome.output.render(cli.common.format);
            let written = match &cli.common.out {
                Some(path) => std::fs::write(path, text.as_bytes()),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return EXIT_INVALID;
            }
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let c = &cli.common;
    match &cli.command {
        Command::Semisimple => commands::semisimple(c).map(Into::into),
        Command::Gram => commands::gram(c).map(Into::into),
        Command::Simples => commands::simples(c).map(Into::into),
        Command::Kleshchev { enumerate, series } => commands::kleshchev(c, *enumerate, *series).map(Into::into),
        Command::Crystal => commands::crystal(c).map(Into::into),
        Command::FockApply { word } => commands::fock_apply(c, word).map(Into::into),
        Command::Llt { matrix, basis } => commands::llt(c, *matrix, *basis).map(Into::into),
        Command::DecompCheck => commands::decomp_check(c),
        Command::Multiseg { enumerate, labels, window } => commands::multiseg(c, *enumerate, *labels, *window).map(Into::into),
        Command::Selftest => selftest::selftest(c),
    }
}

/// Split `"[a,b,c]"` into its top-level items.
pub(crate) fn parse_list(s: &str) -> Result<Vec<String>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got '{s}'")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').map(|x| x.trim().to_string()).collect())
}

impl Common {
    pub(crate) fn require_n(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::InvalidArgument("-n is required".into()))
    }

    pub(crate) fn modulus(&self) -> Result<Option<Modulus>> {
        self.r.as_deref().map(Modulus::parse).transpose()
    }

    fn gamma(&self) -> Result<Option<Vec<i64>>> {
        let Some(g) = &self.gamma else { return Ok(None) };
        let items = parse_list(g)?;
        let gamma = items
            .iter()
            .map(|x| x.parse::<i64>().map_err(|_| Error::Parse(format!("bad residue '{x}' in --gamma"))))
            .collect::<Result<Vec<_>>>()?;
        if gamma.is_empty() {
            return Err(Error::InvalidArgument("--gamma must be nonempty".into()));
        }
        Ok(Some(gamma))
    }

    fn v_list(&self) -> Result<Option<Vec<Scalar>>> {
        let Some(v) = &self.v else { return Ok(None) };
        Ok(Some(parse_list(v)?.iter().map(|x| x.parse()).collect::<Result<Vec<Scalar>>>()?))
    }

    /// Level from -m, --gamma or --v, which must agree; default 1.
    pub(crate) fn level(&self) -> Result<usize> {
        let mut found: Vec<(usize, &str)> = Vec::new();
        if let Some(m) = self.m {
            found.push((m, "-m"));
        }
        if let Some(g) = self.gamma()? {
            found.push((g.len(), "--gamma"));
        }
        if let Some(v) = self.v_list()? {
            found.push((v.len(), "--v"));
        }
        if let Some(&(m, _)) = found.first() {
            if let Some((k, flag)) = found.iter().find(|(k, _)| *k != m) {
                return Err(Error::InvalidArgument(format!("{flag} gives level {k}, but {} gives {m}", found[0].1)));
            }
            if m == 0 {
                return Err(Error::InvalidArgument("level must be >= 1".into()));
            }
            return Ok(m);
        }
        Ok(1)
    }

    fn gamma_or_zero(&self) -> Result<Vec<i64>> {
        Ok(self.gamma()?.unwrap_or_else(|| vec![0; self.level().unwrap_or(1)]))
    }

    pub(crate) fn fock_config(&self) -> Result<FockConfig> {
        let modulus = self.modulus()?.ok_or_else(|| Error::InvalidArgument("-r is required".into()))?;
        self.level()?;
        FockConfig::new(modulus, self.gamma_or_zero()?)
    }

    /// `q` from --q, else `ζ_r`; `v` from --v, else `v_i = q^{γ_i}`.
    pub(crate) fn params(&self) -> Result<HeckeParams> {
        let n = self.require_n()?;
        let m = self.level()?;
        let q: Scalar = match (&self.q, self.modulus()?) {
            (Some(q), _) => q.parse()?,
            (None, Some(Modulus::Finite(r))) => Scalar::root_of_unity(r, 1)?,
            _ => return Err(Error::InvalidArgument("--q (or a finite -r) is required".into())),
        };
        match self.v_list()? {
            Some(v) => HeckeParams::new(m, n, q, v),
            None => HeckeParams::from_gamma(n, q, &self.gamma_or_zero()?),
        }
    }

    /// [`Common::params`], refusing algebras larger than `--max-dim`.
    pub(crate) fn hecke_params(&self) -> Result<HeckeParams> {
        let params = self.params()?;
        let (m, n) = (params.m(), params.n());
        let dim = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(m)?.checked_mul(k));
        match dim {
            Some(d) if d <= self.max_dim => Ok(params),
            _ => Err(Error::ResourceCap(format!(
                "algebra dimension m^n n! for m={m}, n={n} exceeds --max-dim {}",
                self.max_dim
            ))),
        }
    }

    pub(crate) fn cap_n(&self, n: usize) -> Result<usize> {
        if n > self.max_n {
            return Err(Error::ResourceCap(format!("n = {n} exceeds --max-n {}", self.max_n)));
        }
        Ok(n)
    }
}
