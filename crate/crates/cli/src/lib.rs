//! The `aw` command line: argument handling, commands and exit codes.
//!
//! Exit codes: 0 success or proved equal, 1 proved different, 2
//! inconclusive, 3 usage error, 4 internal error.

pub mod suites;

use std::io::Write;
use std::path::PathBuf;

use aw_core::algebra::Poly;
use aw_core::casimir::{check_centrality, omega, subset};
use aw_core::morphisms::{apply_word, MorphismWord};
use aw_core::racah::{substitute_k, leading_term, Limit, RacahError, DEFAULT_PRECISION};
use aw_core::relations::{catalogue, family_notice, Adjacency, RelationFamily};
use aw_core::rewriter::{Engine, Outcome, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_ITER};
use aw_core::syntax::{format_kpoly, format_poly, parse, parse_poly, lower_expanded};
use aw_core::uq::{Realization, RepSpec};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use suites::{run_level, Level};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIFFERENT: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "aw", version, about = "Exact computations in the higher-rank Askey-Wilson algebra aw(n)")]
pub struct Cli {
    /// Rank of the algebra.
    #[arg(long, global = true, default_value_t = 3)]
    pub n: u8,
    /// Largest word length considered during completion.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_BOUND)]
    pub degree_bound: u16,
    /// Completion round cap.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    /// Spins of the tensor factors, e.g. `1/2,1,1/2`.
    #[arg(long, global = true)]
    pub spins: Option<RepSpec>,
    /// Rational evaluation points for q, e.g. `3/2`; repeatable.
    #[arg(long = "eval-q", global = true)]
    pub eval_q: Vec<BigRational>,
    /// Seed for the random evaluation points.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory for completed rule sets.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Include non-adjacent instances of relation families.
    #[arg(long, global = true)]
    pub generalized: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Central,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Fast,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an element.
    Nf { expr: String },
    /// Decide whether two elements are equal.
    Eq { lhs: String, rhs: String },
    /// Apply a word of maps, e.g. "r1 rb2 d3" (rightmost first).
    Apply { word: String, expr: String },
    /// List relation instances.
    Relations {
        #[arg(long)]
        family: Option<RelationFamily>,
    },
    /// The Casimir element of a subset.
    Casimir {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<u8>,
        #[arg(long)]
        check: Option<CheckKind>,
    },
    /// Matrix of an element in a tensor product representation.
    Phi {
        expr: String,
        /// Print only the verdict.
        #[arg(long)]
        verdict_only: bool,
    },
    /// Leading term of the q -> 1 limit.
    Racah {
        expr: String,
        /// Keep terms that vanish by commutation of nested or disjoint K.
        #[arg(long)]
        free: bool,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Run the built-in verification suites.
    Selfcheck {
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
    },
}

struct Failure(i32, String);

fn usage(e: impl ToString) -> Failure {
    Failure(EXIT_USAGE, e.to_string())
}

fn internal(e: impl ToString) -> Failure {
    Failure(EXIT_INTERNAL, e.to_string())
}

impl Cli {
    fn engine(&self) -> Result<Engine, Failure> {
        let mut e = Engine::new(self.seed);
        e.degree_bound = self.degree_bound;
        e.max_iter = self.max_iter;
        e.eval_q = self.eval_q.clone();
        if self.spins.is_some() {
            e.falsifiers.insert(self.n, vec![self.spec()?]);
        }
        if let Some(dir) = &self.cache {
            std::fs::create_dir_all(dir).map_err(|err| usage(format!("cache directory {}: {err}", dir.display())))?;
            e.cache_dir = Some(dir.clone());
        }
        Ok(e)
    }

    fn spec(&self) -> Result<RepSpec, Failure> {
        let spec = self.spins.clone().unwrap_or_else(|| RepSpec::halves(self.n as usize));
        if spec.rank() != self.n as usize {
            return Err(usage(format!("--spins has {} factors, expected {}", spec.rank(), self.n)));
        }
        Ok(spec)
    }

    fn poly(&self, text: &str) -> Result<Poly, Failure> {
        parse_poly(text, self.n).map_err(|e| usage(format!("{text}: {e}")))
    }
}

fn outcome_code(o: &Outcome) -> i32 {
    match o {
        Outcome::Syntactic | Outcome::ProvedZero => EXIT_OK,
        Outcome::ProvedNonzero { .. } => EXIT_DIFFERENT,
        Outcome::RepConsistent => EXIT_INCONCLUSIVE,
        Outcome::Error(_) => EXIT_INTERNAL,
    }
}

fn exec(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    if !(2..=63).contains(&cli.n) {
        return Err(usage(format!("--n {} is out of range", cli.n)));
    }
    // A closed pipe (`aw relations | head`) is not an error.
    let io = |e: std::io::Error| match e.kind() {
        std::io::ErrorKind::BrokenPipe => Failure(EXIT_OK, String::new()),
        _ => internal(e),
    };
    match &cli.command {
        Command::Nf { expr } => {
            let x = cli.poly(expr)?;
            let mut engine = cli.engine()?;
            engine.rewrite_max_rank = engine.rewrite_max_rank.max(cli.n);
            let rs = engine.rules(cli.n).ok_or_else(|| usage(format!("no rewriting at n={}", cli.n)))?;
            let nf = rs.reduce(&x).map_err(internal)?;
            writeln!(out, "{}", format_poly(&nf)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Eq { lhs, rhs } => {
            let (a, b) = (cli.poly(lhs)?, cli.poly(rhs)?);
            let mut engine = cli.engine()?;
            let o = engine.compare(&a, &b, cli.n);
            let msg = match &o {
                Outcome::Syntactic => "equal (syntactic)".to_string(),
                Outcome::ProvedZero => "equal (proved by rewriting)".to_string(),
                Outcome::RepConsistent => "inconclusive (equal in every representation tried)".to_string(),
                Outcome::ProvedNonzero { spec, q0 } => format!("different (differ on spins {spec} at q={q0})"),
                Outcome::Error(e) => format!("error: {e}"),
            };
            writeln!(out, "{msg}").map_err(io)?;
            Ok(outcome_code(&o))
        }
        Command::Apply { word, expr } => {
            let w: MorphismWord = word.parse().map_err(|e| usage(format!("{word}: {e}")))?;
            let x = cli.poly(expr)?;
            let (img, rank) = apply_word(&w, &x, cli.n).map_err(usage)?;
            if rank != cli.n {
                writeln!(out, "# in aw({rank})").map_err(io)?;
            }
            writeln!(out, "{}", format_poly(&img)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Relations { family } => {
            let adjacency = if cli.generalized { Adjacency::Generalized } else { Adjacency::AdjacentOnly };
            let families: Vec<RelationFamily> = match family {
                Some(f) => vec![*f],
                None => RelationFamily::ALL.to_vec(),
            };
            for f in families {
                if let Some(note) = family_notice(cli.n, f, adjacency) {
                    writeln!(out, "# {note}").map_err(io)?;
                }
                for inst in catalogue(cli.n, f, adjacency) {
                    let p: Vec<String> = inst.params.iter().map(|l| l.as_ref().map_or("-".into(), |l| l.to_string())).collect();
                    writeln!(out, "{} {}: {} = 0", inst.name, p.join(","), format_poly(&inst.symbolic)).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Casimir { set, check } => {
            if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > cli.n) {
                return Err(usage(format!("element {bad} is outside 1..{}", cli.n)));
            }
            let s = subset(set);
            let w = omega(s, None).map_err(usage)?;
            writeln!(out, "{}", format_poly(&w)).map_err(io)?;
            if check.is_some() {
                let mut engine = cli.engine()?;
                let rep = check_centrality(s, cli.n, &mut engine).map_err(internal)?;
                write!(out, "{rep}").map_err(io)?;
                return Ok(if rep.all_proved() {
                    EXIT_OK
                } else if !rep.no_refutation() {
                    EXIT_DIFFERENT
                } else {
                    EXIT_INCONCLUSIVE
                });
            }
            Ok(EXIT_OK)
        }
        Command::Phi { expr, verdict_only } => {
            let x = cli.poly(expr)?;
            let spec = cli.spec()?;
            let mut zero = true;
            if cli.eval_q.is_empty() {
                let m = Realization::symbolic(spec).phi(&x).map_err(usage)?;
                if !verdict_only {
                    write!(out, "{m}").map_err(io)?;
                }
                zero = m.is_zero();
            } else {
                for q0 in &cli.eval_q {
                    let m = Realization::at(spec.clone(), q0.clone()).and_then(|mut r| r.phi(&x)).map_err(usage)?;
                    if !verdict_only {
                        writeln!(out, "q = {q0}").map_err(io)?;
                        write!(out, "{m}").map_err(io)?;
                    }
                    zero &= m.is_zero();
                }
            }
            writeln!(out, "verdict: {}", if zero { "zero" } else { "nonzero" }).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Racah { expr, free, precision } => {
            let e = parse(expr).map_err(|err| usage(format!("{expr}: {err}")))?;
            let x = lower_expanded(&e, cli.n).map_err(|err| usage(format!("{expr}: {err}")))?;
            let mode = if *free { Limit::Free } else { Limit::Commuting };
            let series = substitute_k(&x, *precision, mode).map_err(usage)?;
            match leading_term(&series) {
                Ok((k, lead)) => {
                    let lead = if *free { lead } else { lead.modulo_commutation() };
                    writeln!(out, "h^{k} : {}", format_kpoly(&lead)).map_err(io)?;
                    Ok(EXIT_OK)
                }
                Err(RacahError::AllZero) => {
                    writeln!(out, "{}", RacahError::AllZero).map_err(io)?;
                    Ok(EXIT_INCONCLUSIVE)
                }
                Err(err) => Err(internal(err)),
            }
        }
        Command::Selfcheck { level } => {
            let mut engine = cli.engine()?;
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let suites = run_level(level, &mut engine);
            for s in &suites {
                write!(out, "{s}").map_err(io)?;
            }
            let passed = suites.iter().filter(|s| s.passed()).count();
            writeln!(out, "selfcheck {}: {passed}/{} suites passed", if level == Level::Fast { "fast" } else { "full" }, suites.len())
                .map_err(io)?;
            Ok(if passed == suites.len() {
                EXIT_OK
            } else if suites.iter().any(|s| s.refuted()) {
                EXIT_DIFFERENT
            } else {
                EXIT_INCONCLUSIVE
            })
        }
    }
}

/// Run a parsed command line, writing results to `out` and errors to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match exec(cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                let _ = writeln!(err, "aw: {msg}");
            }
            code
        }
    }
}

/// Parse `args` (program name first) and run.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
            } else {
                let _ = write!(out, "{}", e.render());
            }
            code
        }
    }
}
