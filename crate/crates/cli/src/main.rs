//! `carc`: build, verify and inspect interval routing schemes for
//! circular-arc graphs.
//!
//! Exit codes: 0 success, 1 verification or routing failure, 2 bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use carc::oracle::DEFAULT_LIMIT;
use carc::{
    build_scheme, gen_complete, gen_random, gen_ring, gen_wheel, has_shortest_path_1irs, interval_stats,
    parse_model, route, verify_scheme, ArcModel, CliqueCycle, Error, RoutingScheme,
};
use clap::{Parser, Subcommand, ValueEnum};

const THREADS_ENV: &str = "CARC_THREADS";

#[derive(Parser)]
#[command(name = "carc", version, about = "Shortest-path interval routing on circular-arc graphs")]
struct Cli {
    /// Worker threads for parallel checks (default: all cores). CARC_THREADS takes precedence.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a routing scheme and print its interval statistics.
    Build {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a scheme against a model; prints the report as JSON.
    Verify {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        scheme: PathBuf,
    },
    /// Follow a scheme from one vertex to another.
    Route {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        src: usize,
        #[arg(long)]
        dst: usize,
        /// Print the path as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Generate an arc model.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search all vertex orders for a shortest-path 1-interval scheme.
    Oracle1 {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        /// Intervals of a vertex may not contain the vertex itself.
        #[arg(long)]
        strict: bool,
        /// Write the witness scheme here when one exists.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump the clique-cycle of a model.
    Cliques {
        #[arg(long)]
        model: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ring,
    Wheel,
    Random,
    Complete,
}

enum Failure {
    /// Well-formed input that does not check out.
    Check(String),
    /// Unreadable or inconsistent input.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RouteHole { .. } | Error::RouteAmbiguous { .. } | Error::RouteLoop { .. } => {
                Failure::Check(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_model(path: &Path) -> Result<ArcModel, Failure> {
    Ok(parse_model(&read(path)?)?)
}

fn load_scheme(path: &Path) -> Result<RoutingScheme, Failure> {
    Ok(RoutingScheme::from_json(&read(path)?)?)
}

fn build(model: &Path, out: &Path) -> Outcome {
    let model = load_model(model)?;
    let scheme = build_scheme(&model)?;
    write(out, &scheme.to_json())?;
    let stats = interval_stats(&scheme, &model.intersection_graph());
    println!("{}", serde_json::to_string_pretty(&stats).expect("serialization is infallible"));
    Ok(ExitCode::SUCCESS)
}

fn verify(model: &Path, scheme: &Path) -> Outcome {
    let graph = load_model(model)?.intersection_graph();
    let scheme = load_scheme(scheme)?;
    let report = verify_scheme(&graph, &scheme)?;
    println!("{}", report.to_json());
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("verification failed: {} violations", report.violation_count());
        Ok(ExitCode::from(1))
    }
}

fn route_cmd(model: &Path, scheme: &Path, src: usize, dst: usize, json: bool) -> Outcome {
    let graph = load_model(model)?.intersection_graph();
    let scheme = load_scheme(scheme)?;
    for v in [src, dst] {
        if v >= graph.n() {
            return Err(Failure::Input(format!("vertex {v} out of range 0..{}", graph.n())));
        }
    }
    let path = route(&scheme, &graph, src, dst)?;
    if json {
        println!("{}", serde_json::to_string(&path).expect("serialization is infallible"));
    } else {
        let text: Vec<String> = path.iter().map(|v| format!("v{v}")).collect();
        println!("{}", text.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn gen(family: Family, n: usize, seed: u64, out: Option<&Path>) -> Outcome {
    let model = match family {
        Family::Ring => gen_ring(n),
        Family::Wheel => gen_wheel(n),
        Family::Random => gen_random(n, seed),
        Family::Complete => gen_complete(n),
    }?;
    match out {
        Some(path) => write(path, &model.to_json())?,
        None => println!("{}", model.to_json()),
    }
    Ok(ExitCode::SUCCESS)
}

fn oracle1(model: &Path, limit: usize, strict: bool, out: Option<&Path>) -> Outcome {
    let graph = load_model(model)?.intersection_graph();
    let res = has_shortest_path_1irs(&graph, limit, strict)?;
    eprintln!("{} vertex orders checked", res.orders_checked);
    match res.witness {
        Some(witness) => {
            let order: Vec<String> = witness.order().items().iter().map(|v| v.to_string()).collect();
            println!("1-IRS found, order {}", order.join(" "));
            if let Some(path) = out {
                write(path, &witness.to_json())?;
            }
        }
        None => println!("no 1-IRS"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cliques(model: &Path) -> Outcome {
    let model = load_model(model)?;
    print!("{}", CliqueCycle::build(&model)?);
    Ok(ExitCode::SUCCESS)
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Input(format!("{THREADS_ENV}={s:?} is not a thread count"))),
        Err(_) => Ok(flag),
    }
}

fn run(cli: Cli) -> Outcome {
    if let Some(n) = thread_count(cli.threads)? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    match cli.command {
        Command::Build { model, out } => build(&model, &out),
        Command::Verify { model, scheme } => verify(&model, &scheme),
        Command::Route { model, scheme, src, dst, json } => route_cmd(&model, &scheme, src, dst, json),
        Command::Gen { family, n, seed, out } => gen(family, n, seed, out.as_deref()),
        Command::Oracle1 { model, limit, strict, out } => oracle1(&model, limit, strict, out.as_deref()),
        Command::Cliques { model } => cliques(&model),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
