use std::io::{self, Write};
use std::process::ExitCode;

use binofib::bench::bench;
use binofib::closed_forms::{catalog, eval_pair, IdentityId, IdentityParams};
use binofib::integers::{direct_sum, Index, Rational, SequenceKind};
use binofib::verify::{run_grid, summarize, GridSpec, IntRange};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "binofib", version, about = "Exact binomial Fibonacci/Lucas power sums")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for `verify` (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print F_n.
    #[command(allow_negative_numbers = true)]
    Fib {
        n: Index,
    },
    /// Print L_n.
    #[command(allow_negative_numbers = true)]
    Lucas {
        n: Index,
    },
    /// Evaluate sum_k C(n,k) x^(n-k) z^k G_(j(rk+s))^m by direct summation.
    #[command(allow_negative_numbers = true)]
    Sum(SumArgs),
    /// Evaluate one catalog identity both ways.
    #[command(allow_negative_numbers = true)]
    Closed(PointArgs),
    /// Check identities over a parameter grid.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
    /// Time direct summation against the closed form.
    #[command(allow_negative_numbers = true)]
    Bench {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
    /// List the identity catalog.
    List,
}

#[derive(Args)]
struct SumArgs {
    #[arg(long)]
    n: Index,
    #[arg(long, default_value_t = 1)]
    j: Index,
    #[arg(long, default_value_t = 1)]
    r: Index,
    #[arg(long, default_value_t = 0)]
    s: Index,
    #[arg(long, default_value_t = 1)]
    m: Index,
    /// Integer or fraction, e.g. `-3` or `1/2`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    x: Rational,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    z: Rational,
    #[arg(long, default_value = "F")]
    seq: SequenceKind,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long)]
    id: IdentityId,
    #[arg(long, default_value_t = 0)]
    n: Index,
    #[arg(long, default_value_t = 1)]
    j: Index,
    #[arg(long, default_value_t = 1)]
    r: Index,
    #[arg(long, default_value_t = 0)]
    s: Index,
    #[arg(long, default_value_t = 1)]
    p: Index,
    #[arg(long, default_value_t = 1)]
    m: Index,
    #[arg(long, default_value_t = 1)]
    x: Index,
    #[arg(long, default_value_t = 1)]
    z: Index,
}

impl PointArgs {
    fn params(&self) -> IdentityParams {
        IdentityParams {
            n: self.n,
            j: self.j,
            r: self.r,
            s: self.s,
            p: self.p,
            m: self.m,
            x: self.x,
            z: self.z,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated identity ids (default: all).
    #[arg(long, value_delimiter = ',')]
    ids: Vec<IdentityId>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<IntRange>,
    /// Range of m for all families except the odd-power ones.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<IntRange>,
    /// Range of m for the odd-power families.
    #[arg(long, allow_hyphen_values = true)]
    odd_m: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<IntRange>,
    /// Also evaluate points outside soft domain restrictions.
    #[arg(long)]
    out_of_contract: bool,
}

impl VerifyArgs {
    fn spec(&self) -> GridSpec {
        let d = GridSpec::default();
        GridSpec {
            ids: if self.ids.is_empty() { d.ids } else { self.ids.clone() },
            n: self.n.unwrap_or(d.n),
            j: self.j.unwrap_or(d.j),
            r: self.r.unwrap_or(d.r),
            s: self.s.unwrap_or(d.s),
            p: self.p.unwrap_or(d.p),
            m: self.m.unwrap_or(d.m),
            odd_m: self.odd_m.unwrap_or(d.odd_m),
            x: self.x.unwrap_or(d.x),
            z: self.z.unwrap_or(d.z),
            skip_inapplicable: !self.out_of_contract,
        }
    }
}

enum Failure {
    ClosedPipe,
    Usage(String),
    Verification(String),
}

impl From<binofib::Error> for Failure {
    fn from(e: binofib::Error) -> Self {
        match e {
            binofib::Error::Mismatch { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::ClosedPipe) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether the run verified.
fn run(cli: &Cli, out: &mut impl Write) -> Result<bool, Failure> {
    let json = cli.format == Format::Json;
    let io_err = |e: io::Error| match e.kind() {
        io::ErrorKind::BrokenPipe => Failure::ClosedPipe,
        _ => Failure::Usage(e.to_string()),
    };
    match &cli.command {
        Command::Fib { n } => print_seq(out, json, SequenceKind::Fib, *n).map_err(io_err)?,
        Command::Lucas { n } => print_seq(out, json, SequenceKind::Lucas, *n).map_err(io_err)?,
        Command::Sum(a) => {
            let v = direct_sum(a.n, &a.x, &a.z, a.j, a.r, a.s, a.m, a.seq)?;
            if json {
                let line = json!({
                    "n": a.n, "j": a.j, "r": a.r, "s": a.s, "m": a.m,
                    "x": a.x.to_string(), "z": a.z.to_string(),
                    "seq": a.seq, "value": v.to_string(),
                });
                writeln!(out, "{line}").map_err(io_err)?;
            } else {
                writeln!(out, "{v}").map_err(io_err)?;
            }
        }
        Command::Closed(a) => {
            let params = a.params();
            let pair = eval_pair(a.id, &params)?;
            if json {
                let line = json!({
                    "id": a.id,
                    "params": params_json(a.id, &params),
                    "lhs": pair.lhs.to_string(),
                    "rhs": pair.rhs.to_string(),
                    "match": pair.matched,
                });
                writeln!(out, "{line}").map_err(io_err)?;
            } else {
                let verdict = if pair.matched { "MATCH" } else { "MISMATCH" };
                writeln!(out, "lhs={} rhs={} {verdict}", pair.lhs, pair.rhs).map_err(io_err)?;
            }
            return Ok(pair.matched);
        }
        Command::Verify(a) => {
            let jobs = cli.jobs.unwrap_or_else(default_jobs);
            let report = run_grid(&a.spec(), jobs)?;
            let text = if json { report.to_json_lines() } else { summarize(&report) };
            out.write_all(text.as_bytes()).map_err(io_err)?;
            return Ok(report.passed());
        }
        Command::Bench { point, reps } => {
            let params = point.params();
            let r = bench(point.id, &params, *reps)?;
            if json {
                let line = json!({
                    "id": r.id,
                    "params": params_json(r.id, &params),
                    "value": r.value.to_string(),
                    "reps": r.reps,
                    "oracle_median_s": r.oracle_median.as_secs_f64(),
                    "closed_median_s": r.closed_median.as_secs_f64(),
                    "speedup": r.speedup(),
                });
                writeln!(out, "{line}").map_err(io_err)?;
            } else {
                let digits = r.value.to_string().trim_start_matches('-').len();
                writeln!(
                    out,
                    "{} value verified ({digits} digits), {} reps\n  direct sum   {:>12.3?}\n  closed form  {:>12.3?}\n  speedup      {:>11.1}x",
                    r.id,
                    r.reps,
                    r.oracle_median,
                    r.closed_median,
                    r.speedup()
                )
                .map_err(io_err)?;
            }
        }
        Command::List => {
            for d in catalog() {
                let slots: Vec<&str> = d.slots.iter().map(|s| s.name()).collect();
                if json {
                    let line = json!({ "id": d.id, "slots": slots, "anchor": d.anchor });
                    writeln!(out, "{line}").map_err(io_err)?;
                } else {
                    writeln!(out, "{:<11} {:<16} {}", d.id.tag(), slots.join(","), d.anchor)
                        .map_err(io_err)?;
                }
            }
        }
    }
    Ok(true)
}

fn print_seq(out: &mut impl Write, json: bool, kind: SequenceKind, n: Index) -> io::Result<()> {
    let v = kind.eval(n);
    if json {
        writeln!(out, "{}", json!({ "seq": kind, "n": n, "value": v.to_string() }))
    } else {
        writeln!(out, "{v}")
    }
}

fn params_json(id: IdentityId, params: &IdentityParams) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = params
        .used(id)
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.into()))
        .collect();
    map.into()
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
