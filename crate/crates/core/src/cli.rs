//! Command-line front end. [`run`] does all the work and returns the exit
//! code and captured output, so the binary is a thin wrapper and tests can
//! drive every subcommand in-process.
//!
//! Exit codes: 0 success (or the checked property holds), 1 the property
//! fails, 2 usage, input or parse error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{bounds_table, check_chain, crossover, known_lcs, stirling_check, BoundsRow};
use crate::constructions::{
    all_but_first_row_col, back_circulant, five_by_five_critical, nelder_triangle,
};
use crate::criticality::{
    lcs_exhaustive, lcs_heuristic, minimize_uc, verify_critical, CriticalityReport, RemovalOrder,
    DEFAULT_PORTFOLIO, EXHAUSTIVE_LIMIT,
};
use crate::enumeration::{count_all, iter_reduced, OrderLimit};
use crate::error::Error;
use crate::solver::{count_completions, is_uniquely_completable, Cap};
use crate::square::{LatinSquare, PartialLatinSquare};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default `--count-cap` for `complete`.
pub const DEFAULT_COUNT_CAP: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "critset", version, about = "Critical sets of Latin squares")]
struct Cli {
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count completions of a partial square.
    Complete {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_COUNT_CAP)]
        count_cap: u64,
        /// Print up to two witness completions.
        #[arg(long)]
        witnesses: bool,
    },
    /// Check whether a partial square is a critical set.
    Verify { file: PathBuf },
    /// Shrink a uniquely completable square to a critical set.
    Minimize {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OrderArg::RowMajor)]
        order: OrderArg,
    },
    /// Largest critical set size for order n.
    Lcs {
        n: usize,
        #[arg(long, conflicts_with = "heuristic")]
        exhaustive: bool,
        #[arg(long)]
        heuristic: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_PORTFOLIO)]
        starts: usize,
        /// Allow exhaustive search one order past the default limit.
        #[arg(long)]
        extended: bool,
    },
    /// Emit a construction in grid format.
    Construct {
        #[arg(value_enum)]
        kind: Construction,
        #[arg(long)]
        n: Option<usize>,
        /// Input square for `minus-first-rc`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Verify the construction and fail if the check does not hold.
        #[arg(long)]
        verify: bool,
    },
    /// Exact counts R(n) and L(n).
    Count {
        n: usize,
        /// Stream the reduced squares in grid format.
        #[arg(long)]
        list: bool,
        /// Allow order 6.
        #[arg(long)]
        extended: bool,
    },
    /// Bounds table, or the crossover order.
    Bounds {
        #[arg(required_unless_present = "crossover")]
        n_from: Option<u64>,
        #[arg(required_unless_present = "crossover")]
        n_to: Option<u64>,
        #[arg(long)]
        csv: bool,
        #[arg(long, conflicts_with_all = ["n_from", "n_to", "csv"])]
        crossover: bool,
    },
    /// Check the counting chain at order n.
    CheckChain {
        n: usize,
        /// lcs(n) to use instead of the known value.
        #[arg(long)]
        lcs: Option<usize>,
    },
    /// Check the Stirling lower bound on n! for 1..=n_max.
    CheckStirling { n_max: u64 },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OrderArg {
    RowMajor,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Construction {
    BackCirculant,
    NelderTriangle,
    #[value(name = "paper-5x5")]
    FiveByFive,
    MinusFirstRc,
}

/// Exit code plus captured output of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(err: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

struct Out {
    stdout: String,
    stderr: String,
}

impl Out {
    fn finish(self, code: i32) -> Outcome {
        Outcome {
            code,
            stdout: self.stdout,
            stderr: self.stderr,
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Outcome::usage("--threads must be at least 1");
        }
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => return Outcome::usage(e),
    };

    pool.install(|| {
        let mut out = Out {
            stdout: String::new(),
            stderr: String::new(),
        };
        match dispatch(cli.command, &mut out) {
            Ok(code) => out.finish(code),
            Err(e) => {
                let _ = writeln!(out.stderr, "error: {e}");
                out.finish(EXIT_USAGE)
            }
        }
    })
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Input(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Input(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e)
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| CliError::Io(path.clone(), e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))
    }
}

fn read_partial(path: &PathBuf) -> Result<PartialLatinSquare, CliError> {
    Ok(read_input(path)?.parse()?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dispatch(cmd: Command, out: &mut Out) -> Result<i32, CliError> {
    match cmd {
        Command::Complete {
            file,
            count_cap,
            witnesses,
        } => {
            if count_cap == 0 {
                return Err(Error::InvalidArgument("--count-cap must be positive".into()).into());
            }
            let p = read_partial(&file)?;
            let report = count_completions(&p, Cap::at(count_cap));
            let o = &mut out.stdout;
            if report.capped {
                let _ = writeln!(o, "completions: >= {} (capped)", report.count);
            } else {
                let _ = writeln!(o, "completions: {}", report.count);
            }
            let _ = writeln!(o, "uniquely completable: {}", yes_no(report.is_unique()));
            if report.is_unique() {
                let _ = write!(o, "{}", report.witnesses[0]);
            } else if witnesses {
                for (i, w) in report.witnesses.iter().enumerate() {
                    let _ = writeln!(o, "witness {}:", i + 1);
                    let _ = write!(o, "{w}");
                }
            }
            Ok(EXIT_OK)
        }

        Command::Verify { file } => {
            let p = read_partial(&file)?;
            let report = verify_critical(&p);
            write_report(&mut out.stdout, &report);
            Ok(if report.is_critical() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }

        Command::Minimize { file, seed, order } => {
            let p = read_partial(&file)?;
            let order = match order {
                OrderArg::RowMajor => RemovalOrder::RowMajor,
                OrderArg::Random => RemovalOrder::Shuffled(seed),
            };
            match minimize_uc(&p, order) {
                Ok(c) => {
                    let _ = write!(out.stdout, "{c}");
                    let _ = writeln!(out.stderr, "critical set of size {}", c.size());
                    Ok(EXIT_OK)
                }
                Err(e @ Error::NotUnique { .. }) => {
                    let _ = writeln!(out.stderr, "error: {e}");
                    Ok(EXIT_FAILED)
                }
                Err(e) => Err(e.into()),
            }
        }

        Command::Lcs {
            n,
            exhaustive,
            heuristic,
            seed,
            starts,
            extended,
        } => {
            let limit = if extended {
                OrderLimit::Extended
            } else {
                OrderLimit::Standard
            };
            let exact = exhaustive || (!heuristic && n <= EXHAUSTIVE_LIMIT);
            let rec = if exact {
                lcs_exhaustive(n, limit)?
            } else {
                if starts == 0 {
                    return Err(Error::InvalidArgument("--starts must be positive".into()).into());
                }
                lcs_heuristic(n, seed, starts)?
            };
            let o = &mut out.stdout;
            if exact {
                let _ = writeln!(o, "lcs({n}) = {}", rec.value);
            } else {
                let _ = writeln!(
                    o,
                    "lcs({n}) >= {} (heuristic lower bound, seed {seed})",
                    rec.value
                );
            }
            let _ = writeln!(o, "square:");
            let _ = write!(o, "{}", rec.witness_square);
            let _ = writeln!(o, "critical set:");
            let _ = write!(o, "{}", rec.witness_set);
            Ok(EXIT_OK)
        }

        Command::Construct {
            kind,
            n,
            input,
            verify,
        } => construct(kind, n, input, verify, out),

        Command::Count { n, list, extended } => {
            let limit = if extended {
                OrderLimit::Extended
            } else {
                OrderLimit::Standard
            };
            let counts = count_all(n, limit)?;
            let summary = format!(
                "R({n}) = {}\nL({n}) = {}\n",
                counts.reduced_count, counts.total_count
            );
            if list {
                for (i, l) in iter_reduced(n, limit)?.enumerate() {
                    if i > 0 {
                        out.stdout.push('\n');
                    }
                    let _ = write!(out.stdout, "{l}");
                }
                out.stderr.push_str(&summary);
            } else {
                out.stdout.push_str(&summary);
            }
            Ok(EXIT_OK)
        }

        Command::Bounds {
            n_from,
            n_to,
            csv,
            crossover: want_crossover,
        } => {
            if want_crossover {
                let _ = writeln!(out.stdout, "{}", crossover());
                return Ok(EXIT_OK);
            }
            let rows = bounds_table(
                n_from.expect("required by clap"),
                n_to.expect("required by clap"),
            )?;
            out.stdout = if csv {
                bounds_csv(&rows)
            } else {
                bounds_text(&rows)
            };
            Ok(EXIT_OK)
        }

        Command::CheckChain { n, lcs } => {
            let lcs = match lcs.or_else(|| known_lcs(n)) {
                Some(v) => v,
                None => {
                    return Err(
                        Error::InvalidArgument(format!("no known lcs({n}); pass --lcs")).into(),
                    )
                }
            };
            let c = check_chain(n, lcs)?;
            let o = &mut out.stdout;
            let _ = writeln!(o, "n = {n}, lcs = {lcs}");
            let _ = writeln!(o, "ln lower bound on L(n): {:.4}", c.lhs_log);
            let _ = writeln!(o, "ln L(n):                {:.4}", c.mid_log);
            let _ = writeln!(o, "ln upper count:         {:.4}", c.rhs_log);
            let _ = writeln!(o, "holds: {}", yes_no(c.holds));
            Ok(if c.holds { EXIT_OK } else { EXIT_FAILED })
        }

        Command::CheckStirling { n_max } => {
            if n_max == 0 {
                return Err(Error::InvalidArgument("n_max must be at least 1".into()).into());
            }
            let failures: Vec<u64> = (1..=n_max).filter(|&n| !stirling_check(n)).collect();
            if failures.is_empty() {
                let _ = writeln!(out.stdout, "stirling bound holds for n = 1..{n_max}");
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(out.stdout, "stirling bound fails for n = {failures:?}");
                Ok(EXIT_FAILED)
            }
        }
    }
}

fn construct(
    kind: Construction,
    n: Option<usize>,
    input: Option<PathBuf>,
    verify: bool,
    out: &mut Out,
) -> Result<i32, CliError> {
    let need_n =
        || n.ok_or_else(|| CliError::Input(Error::InvalidArgument("--n is required".into())));
    let grid: PartialLatinSquare = match kind {
        Construction::BackCirculant => back_circulant(need_n()?)?.to_partial(),
        Construction::NelderTriangle => nelder_triangle(need_n()?)?,
        Construction::FiveByFive => five_by_five_critical(),
        Construction::MinusFirstRc => {
            let square: LatinSquare = match (&input, n) {
                (Some(path), _) => read_input(path)?.parse()?,
                (None, Some(n)) => back_circulant(n)?,
                (None, None) => {
                    return Err(Error::InvalidArgument("pass --in <file> or --n <N>".into()).into())
                }
            };
            all_but_first_row_col(&square)
        }
    };
    let _ = write!(out.stdout, "{grid}");
    if !verify {
        return Ok(EXIT_OK);
    }
    let ok = match kind {
        Construction::BackCirculant => {
            let ok = grid.is_complete();
            let _ = writeln!(out.stderr, "latin square: {}", yes_no(ok));
            ok
        }
        Construction::NelderTriangle | Construction::FiveByFive => {
            let report = verify_critical(&grid);
            write_report(&mut out.stderr, &report);
            report.is_critical()
        }
        Construction::MinusFirstRc => {
            let ok = is_uniquely_completable(&grid);
            let _ = writeln!(out.stderr, "uniquely completable: {}", yes_no(ok));
            ok
        }
    };
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn write_report(o: &mut String, r: &CriticalityReport) {
    let _ = writeln!(o, "size: {}", r.size);
    let _ = writeln!(
        o,
        "uniquely completable: {}",
        yes_no(r.uniquely_completable)
    );
    let _ = writeln!(o, "minimal: {}", yes_no(r.minimal));
    let _ = writeln!(o, "critical: {} (size {})", yes_no(r.is_critical()), r.size);
    let removable = r.violations();
    if !removable.is_empty() {
        let list: Vec<String> = removable.iter().map(ToString::to_string).collect();
        let _ = writeln!(o, "removable entries: {}", list.join(" "));
    }
    if !r.uniquely_completable {
        let _ = writeln!(o, "completions found: {}", r.witnesses.len());
    }
}

fn real(x: Option<f64>) -> String {
    x.map_or_else(|| "undefined".to_string(), |v| format!("{v:.4}"))
}

fn opt_int<T: ToString>(x: &Option<T>) -> String {
    x.as_ref()
        .map_or_else(|| "-".to_string(), ToString::to_string)
}

const COLUMNS: [&str; 9] = [
    "n",
    "nelder",
    "bm_upper",
    "theorem1",
    "exact_counting_lower",
    "svr",
    "log_L_lower",
    "log_shape_count",
    "log_n",
];

fn row_fields(r: &BoundsRow) -> [String; 9] {
    [
        r.order.to_string(),
        r.nelder.to_string(),
        r.bm_upper.to_string(),
        real(r.theorem1),
        real(r.exact_counting_lower),
        opt_int(&r.svr),
        format!("{:.4}", r.log_latin_lower),
        format!("{:.4}", r.log_cs_count_upper_coeffs.0),
        format!("{:.4}", r.log_cs_count_upper_coeffs.1),
    ]
}

fn bounds_csv(rows: &[BoundsRow]) -> String {
    let mut s = COLUMNS.join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&row_fields(r).join(","));
        s.push('\n');
    }
    s
}

fn bounds_text(rows: &[BoundsRow]) -> String {
    let fields: Vec<[String; 9]> = rows.iter().map(row_fields).collect();
    let widths: Vec<usize> = (0..COLUMNS.len())
        .map(|i| {
            fields
                .iter()
                .map(|f| f[i].len())
                .chain([COLUMNS[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ") + "\n"
    };
    let mut s = line(COLUMNS.to_vec());
    for f in &fields {
        s.push_str(&line(f.iter().map(String::as_str).collect()));
    }
    s
}
