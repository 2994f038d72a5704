use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use regpow::compute::{self, ComputeRequest, Method, Task};
use regpow::corpus::Subject;
use regpow::report::write_lines;
use regpow::verify::{self, Suite, VerifyParams};
use regpow::{exit, search, with_jobs, HarnessError, Result};
use regpow_core::Field;

#[derive(Parser)]
#[command(name = "regpow", version, about = "Regularity of powers of edge ideals: computation and verification")]
struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, env = "REGPOW_JOBS", default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One computation on a graph or an ideal.
    Compute(ComputeArgs),
    /// Check a theorem over a corpus of graphs or ideals.
    Verify(VerifyArgs),
    /// Look for counterexamples to the power formula on gap-free graphs.
    Search(SearchArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Graph file (text or JSON), or a family such as `cycle:5`.
    #[arg(long, conflicts_with = "ideal", required_unless_present = "ideal")]
    graph: Option<String>,
    /// Ideal file (JSON, or `n` followed by monomials).
    #[arg(long)]
    ideal: Option<String>,
    /// reg, betti, linres, power, symbolic, gapfree or extremal.
    #[arg(long, default_value = "reg")]
    task: Task,
    #[arg(long)]
    s: Option<u32>,
    /// gf2, gfp:P or q.
    #[arg(long, default_value = "gf2")]
    field: Field,
    /// degree-complex, koszul or both.
    #[arg(long, default_value = "degree-complex")]
    method: Method,
    /// Cross-check against the unpruned scan over a widened box.
    #[arg(long)]
    audit_full_scan: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// pow2, pow3, lowerbound, froberg, char2, char3, colon-identities,
    /// extremal-bounds, oracle or differential.
    suite: Suite,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    /// Random items on nmax+1 or nmax+2 vertices.
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "gf2")]
    field: Field,
    /// Restrict to one power instead of the suite's default set.
    #[arg(long)]
    s: Option<u32>,
    /// Random intermediate ideals per graph and power.
    #[arg(long, default_value_t = 3)]
    intermediates: usize,
    #[arg(long)]
    audit_full_scan: bool,
    /// Skip the rational recheck of every tenth item.
    #[arg(long)]
    no_rational_recheck: bool,
    /// Include wall-clock times; output is then not reproducible.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Examine one graph (file or family such as `cycle:5`) instead of a corpus.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long, default_value_t = 2)]
    s: u32,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "gf2")]
    field: Field,
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match with_jobs(cli.jobs, || run(cli.command)).and_then(|r| r) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("regpow: {e}");
            exit::INPUT_ERROR
        }
    };
    ExitCode::from(code as u8)
}

fn run(command: Command) -> Result<i32> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match command {
        Command::Compute(args) => {
            let (descriptor, subject) = match (&args.graph, &args.ideal) {
                (Some(g), _) => {
                    let (d, graph) = compute::load_graph(g)?;
                    (d, Subject::Graph(graph))
                }
                (None, Some(i)) => {
                    let (d, ideal) = compute::load_ideal(i)?;
                    (d, Subject::Ideal(ideal))
                }
                (None, None) => return Err(HarnessError::input("pass --graph or --ideal")),
            };
            let outcome = compute::compute(&ComputeRequest {
                descriptor,
                subject,
                task: args.task,
                s: args.s,
                field: args.field,
                method: args.method,
                audit_full_scan: args.audit_full_scan,
            })?;
            write_lines(&mut out, std::slice::from_ref(&outcome.report)).map_err(io_error)?;
            outcome.exit_code()
        }
        Command::Verify(args) => {
            let params = VerifyParams {
                nmax: args.nmax,
                samples: args.samples,
                seed: args.seed,
                field: args.field,
                s: args.s,
                intermediates: args.intermediates,
                rational_recheck: !args.no_rational_recheck,
                audit_full_scan: args.audit_full_scan,
                timings: args.timings,
            };
            let outcome = verify::run(args.suite, &params)?;
            write_lines(&mut out, &outcome.reports).map_err(io_error)?;
            write_lines(&mut out, std::slice::from_ref(&outcome.summary)).map_err(io_error)?;
            outcome.exit_code()
        }
        Command::Search(args) => {
            let graph = args.graph.as_deref().map(compute::load_graph).transpose()?;
            let outcome = search::run(&search::SearchParams {
                graph,
                s: args.s,
                nmax: args.nmax,
                samples: args.samples,
                seed: args.seed,
                field: args.field,
                timings: args.timings,
            })?;
            for w in &outcome.warnings {
                eprintln!("regpow: warning: {w}");
            }
            write_lines(&mut out, &outcome.reports).map_err(io_error)?;
            write_lines(&mut out, std::slice::from_ref(&outcome.summary)).map_err(io_error)?;
            exit::SUCCESS
        }
    };
    out.flush().map_err(io_error)?;
    Ok(code)
}

fn io_error(source: io::Error) -> HarnessError {
    HarnessError::Io {
        path: "<stdout>".into(),
        source,
    }
}
