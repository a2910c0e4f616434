use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use modwidth::engine::{respond, ComposeOracle, CorruptOracle, OracleMode};
use modwidth::generators::{random_bounded_mw, GenSpec};
use modwidth::problem::{reference_answer, solve_problem_with};
use modwidth::{decision, decompose, Answer, Error, Graph, Problem, System};

#[derive(Parser)]
#[command(name = "modwidth", version, about = "Modular decomposition and modular-width solvers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Function,
    Membership,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a problem on an edge-list graph.
    Solve {
        problem: String,
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "function")]
        oracle_mode: Mode,
        /// Write the query transcript here.
        #[arg(long)]
        transcript: Option<PathBuf>,
        /// Also print the decision for threshold k.
        #[arg(long)]
        k: Option<u64>,
    },
    /// Print the modular decomposition tree and the modular-width.
    Mdtree { graph: PathBuf },
    /// Generate a random graph of bounded modular-width (k = 0 gives a cograph).
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        depth_cap: usize,
    },
    /// Compare the engine against exhaustive search.
    Verify {
        problem: String,
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "function")]
        oracle_mode: Mode,
        #[arg(long, hide = true)]
        corrupt_oracle: bool,
    },
    /// Answer hex-encoded queries from stdin, one per line.
    Oracle {
        #[arg(long)]
        system: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Parse { .. } | Error::UnknownProblem(_) | Error::UnknownSystem(_) => 2,
        Error::CapExceeded { .. } => 2,
        _ => 3,
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text)
}

fn mode(m: Mode) -> OracleMode {
    match m {
        Mode::Function => OracleMode::Function,
        Mode::Membership => OracleMode::membership(),
    }
}

fn print_answer(a: Answer) {
    match a {
        Answer::Exists(b) => println!("{}", if b { "yes" } else { "no" }),
        other => println!("value {other}"),
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Solve { problem, graph, oracle_mode, transcript, k } => {
            let p: Problem = problem.parse()?;
            let g = read_graph(&graph)?;
            let run = solve_problem_with(p, &g, mode(oracle_mode), &mut ComposeOracle::new(p.system()))?;
            print_answer(run.answer);
            if let Some(k) = k {
                if !matches!(run.answer, Answer::Exists(_)) {
                    println!("{}", if decision(p, run.answer, k) { "yes" } else { "no" });
                }
            }
            if let Some(path) = transcript {
                let text = run.transcript.map(|t| t.dump()).unwrap_or_default();
                std::fs::write(&path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(0)
        }
        Cmd::Mdtree { graph } => {
            let t = decompose(&read_graph(&graph)?);
            print!("{}", t.serialize());
            println!("mw={}", t.modular_width());
            Ok(0)
        }
        Cmd::Gen { n, k, seed, depth_cap } => {
            let g = random_bounded_mw(&GenSpec { n, k, seed, depth_cap })?;
            println!("# gen n={n} k={k} seed={seed}");
            print!("{}", g.to_edge_list());
            Ok(0)
        }
        Cmd::Verify { problem, graph, oracle_mode, corrupt_oracle } => {
            let p: Problem = problem.parse()?;
            let g = read_graph(&graph)?;
            let brute = reference_answer(p, &g)?;
            let oracle = ComposeOracle::new(p.system());
            let engine = if corrupt_oracle {
                solve_problem_with(p, &g, mode(oracle_mode), &mut CorruptOracle(oracle))
            } else {
                solve_problem_with(p, &g, mode(oracle_mode), &mut { oracle })
            };
            let engine = match engine {
                Ok(r) => r.answer,
                Err(e @ (Error::Consistency(_) | Error::MalformedQuery(_) | Error::Contract(_))) if corrupt_oracle => {
                    eprintln!("{e}");
                    println!("MISMATCH engine=error brute={brute}");
                    return Ok(4);
                }
                Err(e) => return Err(e),
            };
            if engine == brute {
                println!("MATCH value={brute}");
                Ok(0)
            } else {
                println!("MISMATCH engine={engine} brute={brute}");
                Ok(4)
            }
        }
        Cmd::Oracle { system } => {
            let sys: System = system.parse()?;
            let stdin = std::io::stdin();
            let mut out = std::io::stdout().lock();
            for line in stdin.lock().lines() {
                let line = line.map_err(|e| Error::Input(e.to_string()))?;
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let reply = hex::decode(line)
                    .map_err(|e| Error::MalformedQuery(format!("bad hex: {e}")))
                    .and_then(|bytes| respond(sys, &bytes))
                    .unwrap_or_else(|e| format!("error {e}"));
                writeln!(out, "{reply}").and_then(|_| out.flush()).map_err(|e| Error::Input(e.to_string()))?;
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
