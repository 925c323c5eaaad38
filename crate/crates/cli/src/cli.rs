//! Command-line front end.
//!
//! Exit codes: 0 verdict holds, 1 I/O or input error, 2 usage error,
//! 3 verdict fails, 4 verdict ambiguous.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ginv_core::generalized::{check_law, product_mp, verify_product_penrose};
use ginv_core::pinv::mp_inverse_detailed;
use ginv_core::{
    verify_penrose, DenseTensor, Factorization, LawId, LawReport, PenroseReport, RankPolicy,
    Verdict, DEFAULT_LAW_TOLERANCE,
};

use crate::examples::{run_examples, AssetSource, ExampleOutcome, Which};
use crate::io::{parse_tensor, save_tensor, sha256_hex, IoError};
use crate::oracle::{run_fuzz, FuzzConfig, Summary};
use crate::report::{verdict_word, InputDigest, ReportFile};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FAILS: i32 = 3;
pub const EXIT_AMBIGUOUS: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "ginv",
    version,
    about = "Generalized inverses of tensors under the Einstein product"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Relative tolerance for the verdict
    #[arg(long, default_value_t = DEFAULT_LAW_TOLERANCE)]
    tol: f64,
    /// relative | relative:RTOL | absolute:TOL | fixed:K
    #[arg(long, default_value = "relative", value_parser = parse_policy)]
    rank_policy: RankPolicy,
    /// Write a JSON report here
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Moore-Penrose inverse of a tensor, with its Penrose residuals
    Pinv {
        input: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Product Moore-Penrose inverse of R*S*T, with its six defining residuals
    ProductPinv {
        r: PathBuf,
        s: PathBuf,
        t: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Decide a law for the factorization R*S*T
    Check {
        law: CheckLaw,
        r: PathBuf,
        s: PathBuf,
        t: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Penrose residuals of a candidate inverse X of A
    Verify {
        a: PathBuf,
        x: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Reproduce bundled worked examples
    Examples {
        #[command(subcommand)]
        set: ExampleSet,
    },
    /// Randomized invariant check against the matrix oracle
    Fuzz {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=3))]
        max_dim: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ExampleSet {
    /// The three worked factorization examples
    Paper {
        #[arg(long)]
        which: Option<Which>,
        /// Read golden tensors from this directory instead of the bundled copies
        #[arg(long)]
        assets: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckLaw {
    Coincidence,
    TripleRol,
    YDecomposition,
    #[value(name = "b-c-cross")]
    BCCross,
    Involution,
}

impl CheckLaw {
    fn law(self) -> LawId {
        match self {
            CheckLaw::Coincidence => LawId::Coincidence,
            CheckLaw::TripleRol => LawId::TripleRol,
            CheckLaw::YDecomposition => LawId::YDecomposition,
            CheckLaw::BCCross => LawId::BEqualsAdag,
            CheckLaw::Involution => LawId::Involution,
        }
    }
}

fn parse_policy(s: &str) -> Result<RankPolicy, String> {
    let num = |v: &str| v.parse::<f64>().map_err(|e| format!("{v}: {e}"));
    let policy = match s.split_once(':') {
        None if s == "relative" => RankPolicy::Relative(None),
        Some(("relative", v)) => RankPolicy::Relative(Some(num(v)?)),
        Some(("absolute", v)) => RankPolicy::Absolute(num(v)?),
        Some(("fixed", v)) => RankPolicy::FixedRank(v.parse().map_err(|e| format!("{v}: {e}"))?),
        _ => return Err(format!("unknown rank policy {s:?}")),
    };
    policy.validate().map_err(|e| e.to_string())?;
    Ok(policy)
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut session = Session {
        out,
        started: Instant::now(),
        command: args
            .iter()
            .map(|a| a.to_string_lossy().into_owned())
            .collect(),
        inputs: Vec::new(),
    };
    match session.dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

struct Session<'a> {
    out: &'a mut dyn Write,
    started: Instant,
    command: Vec<String>,
    inputs: Vec<InputDigest>,
}

fn law_exit(r: &LawReport) -> i32 {
    match r.outcome() {
        Verdict::Holds => EXIT_OK,
        Verdict::Fails => EXIT_FAILS,
        Verdict::Ambiguous => EXIT_AMBIGUOUS,
    }
}

fn pass_exit(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_FAILS
    }
}

impl Session<'_> {
    fn load(&mut self, path: &Path) -> Result<DenseTensor, Error> {
        let bytes = std::fs::read(path).map_err(|source| IoError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(&bytes),
        });
        let text = String::from_utf8_lossy(&bytes);
        Ok(parse_tensor(&text)?)
    }

    fn factorization(
        &mut self,
        r: &Path,
        s: &Path,
        t: &Path,
        p: RankPolicy,
    ) -> Result<Factorization, Error> {
        let (r, s, t) = (self.load(r)?, self.load(s)?, self.load(t)?);
        Ok(Factorization::with_policy(r, s, t, p)?)
    }

    fn report(&mut self, tol: f64) -> ReportFile {
        let mut rep = ReportFile::new(self.command.clone(), tol);
        rep.inputs = std::mem::take(&mut self.inputs);
        rep.wall_time_seconds = self.started.elapsed().as_secs_f64();
        rep
    }

    fn dispatch(&mut self, command: Command) -> Result<i32, Error> {
        match command {
            Command::Pinv {
                input,
                output,
                common,
            } => {
                let a = self.load(&input)?;
                let detail = mp_inverse_detailed(&a, &common.rank_policy)?;
                let pr = verify_penrose(&a, &detail.inverse, common.tol)?;
                writeln!(
                    self.out,
                    "shape: {} -> {}",
                    a.shape(),
                    detail.inverse.shape()
                )
                .ok();
                writeln!(self.out, "rank: {}", detail.rank).ok();
                if let Some(cut) = detail.cutoff {
                    writeln!(self.out, "cutoff: {cut:.16e}").ok();
                }
                if let Some(sv) = detail.nearest_to_cutoff() {
                    writeln!(
                        self.out,
                        "warning: singular value {sv:.3e} within a factor 10 of the cutoff"
                    )
                    .ok();
                }
                self.print_penrose(&pr);
                if let Some(path) = output {
                    save_tensor(&detail.inverse, &path, None)?;
                }
                if let Some(path) = common.report {
                    let mut rep = self.report(common.tol).with_penrose(&pr);
                    if let Some(sv) = detail.nearest_to_cutoff() {
                        rep.warnings.push(format!(
                            "singular value {sv:e} within a factor 10 of the cutoff"
                        ));
                    }
                    rep.write(&path)?;
                }
                Ok(pass_exit(pr.pass))
            }
            Command::ProductPinv {
                r,
                s,
                t,
                output,
                common,
            } => {
                let f = self.factorization(&r, &s, &t, common.rank_policy)?;
                let x = product_mp(&f)?;
                let rep = verify_product_penrose(&f, &x, common.tol)?;
                self.print_law(&rep);
                if let Some(path) = output {
                    save_tensor(&x, &path, None)?;
                }
                if let Some(path) = common.report {
                    self.report(common.tol).with_law(&rep).write(&path)?;
                }
                Ok(law_exit(&rep))
            }
            Command::Check {
                law,
                r,
                s,
                t,
                common,
            } => {
                let f = self.factorization(&r, &s, &t, common.rank_policy)?;
                let rep = check_law(law.law(), &f, common.tol)?;
                self.print_law(&rep);
                if let Some(path) = common.report {
                    self.report(common.tol).with_law(&rep).write(&path)?;
                }
                Ok(law_exit(&rep))
            }
            Command::Verify { a, x, common } => {
                let (a, x) = (self.load(&a)?, self.load(&x)?);
                let pr = verify_penrose(&a, &x, common.tol)?;
                self.print_penrose(&pr);
                if let Some(path) = common.report {
                    self.report(common.tol).with_penrose(&pr).write(&path)?;
                }
                Ok(pass_exit(pr.pass))
            }
            Command::Examples {
                set:
                    ExampleSet::Paper {
                        which,
                        assets,
                        report,
                    },
            } => {
                let which: Vec<Which> = which.map_or(Which::ALL.to_vec(), |w| vec![w]);
                let src = assets.map_or(AssetSource::Embedded, AssetSource::Dir);
                let outcomes = run_examples(&which, &src)?;
                let pass = outcomes.iter().all(ExampleOutcome::pass);
                for o in &outcomes {
                    self.print_example(o);
                }
                writeln!(
                    self.out,
                    "overall: {}",
                    if pass { "match" } else { "MISMATCH" }
                )
                .ok();
                if let Some(path) = report {
                    let mut rep = self.report(crate::examples::GOLDEN_TOL);
                    rep.verdict = if pass { "holds" } else { "fails" }.into();
                    rep.details = Some(serde_json::to_value(&outcomes).expect("serializable"));
                    rep.write(&path)?;
                }
                Ok(pass_exit(pass))
            }
            Command::Fuzz {
                trials,
                max_dim,
                seed,
                report,
            } => {
                let summary = run_fuzz(&FuzzConfig::new(max_dim as usize, trials, seed));
                self.print_summary(&summary);
                if let Some(path) = report {
                    let mut rep = self.report(crate::oracle::IDENTITY_TOL);
                    rep.verdict = if summary.is_clean() { "holds" } else { "fails" }.into();
                    rep.details = Some(serde_json::to_value(&summary).expect("serializable"));
                    rep.write(&path)?;
                }
                Ok(pass_exit(summary.is_clean()))
            }
        }
    }

    fn print_penrose(&mut self, pr: &PenroseReport) {
        for (k, v) in pr.residuals.iter().enumerate() {
            let mark = if *v <= pr.tolerance { "ok" } else { "FAIL" };
            writeln!(self.out, "penrose_{}  {v:.16e}  {mark}", k + 1).ok();
        }
        writeln!(self.out, "tolerance: {:e}", pr.tolerance).ok();
        writeln!(
            self.out,
            "verdict: {}",
            if pr.pass { "holds" } else { "fails" }
        )
        .ok();
    }

    fn print_law(&mut self, r: &LawReport) {
        writeln!(self.out, "law: {}", r.law).ok();
        let width = r
            .residuals()
            .map(|x| x.name.chars().count())
            .max()
            .unwrap_or(0);
        let mut line = |kind: &str, name: &str, value: f64| {
            let mark = if value <= r.tolerance {
                "holds"
            } else {
                "fails"
            };
            let pad = width - name.chars().count();
            writeln!(
                self.out,
                "  {kind:<10} {name}{:pad$}  {value:.16e}  {mark}",
                ""
            )
            .ok();
        };
        for c in &r.conditions {
            line("condition", c.name, c.value);
        }
        if let Some(d) = r.direct {
            line("direct", d.name, d.value);
        }
        for e in &r.equivalents {
            line("equivalent", e.name, e.value);
        }
        for (a, b) in &r.paired {
            line("pair", a.name, a.value);
            line("pair", b.name, b.value);
        }
        for w in &r.warnings {
            writeln!(self.out, "warning: {w}").ok();
        }
        writeln!(self.out, "tolerance: {:e}", r.tolerance).ok();
        writeln!(self.out, "verdict: {}", verdict_word(r)).ok();
    }

    fn print_example(&mut self, o: &ExampleOutcome) {
        writeln!(self.out, "example {}", o.example).ok();
        for c in &o.comparisons {
            let mark = if c.pass { "match" } else { "MISMATCH" };
            writeln!(
                self.out,
                "  {:<10} vs {:<18} max error {:.3e}  {mark}",
                c.quantity, c.golden, c.max_abs_error
            )
            .ok();
        }
        for c in &o.claims {
            let mark = if c.pass { "ok" } else { "FAIL" };
            writeln!(self.out, "  claim {}: {:.3e}  {mark}", c.statement, c.value).ok();
        }
    }

    fn print_summary(&mut self, s: &Summary) {
        writeln!(
            self.out,
            "trials: {}  max_dim: {}  seed: {}",
            s.trials, s.max_dim, s.seed
        )
        .ok();
        for v in &s.violations {
            let residual = v.residual.map_or(String::new(), |r| format!(" ({r:.3e})"));
            writeln!(
                self.out,
                "violation: trial {} seed {:#x}: {}{residual}",
                v.trial, v.seed, v.invariant
            )
            .ok();
        }
        writeln!(self.out, "violations: {}", s.violations.len()).ok();
    }
}
