//! Command-line front end for the ordered-cycle constructions and oracle.
//!
//! Exit codes: 0 success / valid / yes, 1 usage, IO or bounds, 2 invalid
//! certificate / no, 3 internal invariant violation.

mod edgelist;

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use kordered::dispatch::{order, resolve_family, Family};
use kordered::gen::GraphSpec;
use kordered::graph::{power, Graph};
use kordered::oracle::{oracle_cycle, sweep_pk, QUERY_MAX_N, SWEEP_MAX_N};
use kordered::par::Exec;
use kordered::verify::{verify, CycleCertificate};
use kordered::witness::{find_cycle_lower, witness_path_lower};
use kordered::Error;

use edgelist::{parse_edge_list, parse_vertex_list, write_edge_list};

#[derive(Parser)]
#[command(name = "kordered", version, about = "k-ordered Hamiltonian cycles in graph powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list file ("n m" header, then "u v" lines).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generator: path:N, cycle:N, complete:N, star:N, rand-tree:N:SEED,
    /// rand-conn:N:M:SEED.
    #[arg(long)]
    gen: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the p-th power of a graph as an edge list.
    Power {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        p: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build an ordered Hamiltonian cycle certificate for an anchor sequence.
    Order {
        #[command(flatten)]
        source: Source,
        /// Anchors as comma-separated 0-indexed vertices.
        #[arg(long)]
        seq: String,
        /// auto, general, path, cycle5, four or host5.
        #[arg(long, default_value = "auto")]
        family: String,
        /// Hamiltonian cycle of the input graph (for host5).
        #[arg(long)]
        ham: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Exhaustive search for a cycle through the anchors in order.
    Oracle {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        seq: String,
        /// Require the cycle to be Hamiltonian.
        #[arg(long)]
        hamiltonian: bool,
        #[arg(long, default_value_t = QUERY_MAX_N)]
        max_n: usize,
    },
    /// Lower-bound instances, confirmed by the oracle.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Empirical sweeps.
    Bench {
        #[command(subcommand)]
        kind: BenchKind,
    },
}

#[derive(Subcommand)]
enum WitnessKind {
    /// Path instance with no ordered cycle at power floor(3k/2) - 3.
    PathLower {
        #[arg(long)]
        k: usize,
    },
    /// Smallest cycle length where the layout is not 2m-ordered at power m.
    CycleLower {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = QUERY_MAX_N)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum BenchKind {
    /// Exact p_k by sweeping powers with the oracle.
    Pk {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = SWEEP_MAX_N)]
        max_n: usize,
        /// Print CSV rows instead of a table.
        #[arg(long)]
        csv: bool,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_invariant() { 3 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    }
}

fn read(path: &std::path::Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn load(source: &Source) -> Result<Graph, Failure> {
    match (&source.input, &source.gen) {
        (Some(path), _) => Ok(parse_edge_list(&read(path)?)?),
        (None, Some(spec)) => Ok(spec.parse::<GraphSpec>()?.build()?),
        (None, None) => unreachable!("clap enforces one source"),
    }
}

fn csv(seq: &str) -> Result<Vec<usize>, Failure> {
    Ok(parse_vertex_list(seq)?)
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Outcome of a command that answers yes or no.
enum Answer {
    Yes,
    No,
}

fn run(cli: Cli) -> Result<Answer, Failure> {
    match cli.command {
        Command::Power { source, p, output } => {
            let g = load(&source)?;
            let text = write_edge_list(&power(&g, p)?);
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| io_error(&path, e))?,
                None => print!("{text}"),
            }
            Ok(Answer::Yes)
        }
        Command::Order { source, seq, family, ham } => {
            let g = load(&source)?;
            let anchors = csv(&seq)?;
            let family: Family = family.parse()?;
            let ring = ham.map(|p| read(&p).and_then(|t| csv(&t))).transpose()?;
            let chosen = match family {
                Family::Auto => resolve_family(&g, anchors.len()),
                f => f,
            };
            let cert = order(&g, &anchors, chosen, ring.as_deref())?;
            eprintln!("family: {chosen} power: {}", cert.power);
            println!("{}", cert.to_json());
            Ok(Answer::Yes)
        }
        Command::Verify { source, cert } => {
            let g = load(&source)?;
            let cert = CycleCertificate::from_json(&read(&cert)?)?;
            let report = verify(&g, &cert)?;
            if report.is_valid() {
                eprintln!("valid");
                return Ok(Answer::Yes);
            }
            let kind = if !report.edges_ok {
                "edge"
            } else if !report.hamiltonian_ok {
                "hamiltonicity"
            } else {
                "order"
            };
            let detail = report.first_violation.unwrap_or_default();
            eprintln!("{kind} violation: {detail}");
            Ok(Answer::No)
        }
        Command::Oracle {
            source,
            seq,
            hamiltonian,
            max_n,
        } => {
            let g = load(&source)?;
            let anchors = csv(&seq)?;
            match oracle_cycle(&g, &anchors, hamiltonian, max_n)? {
                Some(cycle) => {
                    println!("yes");
                    println!("{}", join(&cycle));
                    Ok(Answer::Yes)
                }
                None => {
                    println!("no");
                    Ok(Answer::No)
                }
            }
        }
        Command::Witness { kind } => match kind {
            WitnessKind::PathLower { k } => {
                let w = witness_path_lower(k)?;
                let zero: Vec<usize> = w.anchors.iter().map(|a| a - 1).collect();
                println!("n={} power={} anchors(1-indexed)={} anchors={}", w.n, w.power, join(&w.anchors), join(&zero));
                let h = power(&Graph::path(w.n), w.power)?;
                let started = Instant::now();
                match oracle_cycle(&h, &zero, false, QUERY_MAX_N) {
                    Ok(None) => {
                        println!("confirmed: no ordered cycle ({:.2?})", started.elapsed());
                        Ok(Answer::Yes)
                    }
                    Ok(Some(c)) => {
                        println!("not confirmed: ordered cycle {}", join(&c));
                        Ok(Answer::No)
                    }
                    Err(e @ Error::BoundExceeded { .. }) => {
                        println!("not confirmed: {e}");
                        Ok(Answer::No)
                    }
                    Err(e) => Err(e.into()),
                }
            }
            WitnessKind::CycleLower { m, max_n } => {
                let s = find_cycle_lower(m, max_n)?;
                for (n, found) in &s.tried {
                    println!("n={n} ordered cycle {}", if *found { "found" } else { "absent" });
                }
                match s.n {
                    Some(n) => {
                        println!("confirmed: n={n} power={m} anchors={} ({:.2?})", join(&s.anchors), s.elapsed);
                        Ok(Answer::Yes)
                    }
                    None => {
                        println!("not confirmed up to n={max_n}");
                        Ok(Answer::No)
                    }
                }
            }
        },
        Command::Bench { kind } => match kind {
            BenchKind::Pk { source, k, max_n, csv } => {
                let g = load(&source)?;
                let sweep = sweep_pk(&g, k, Exec::Parallel, max_n)?;
                let mut out = std::io::stdout().lock();
                let w = |out: &mut std::io::StdoutLock, s: String| writeln!(out, "{s}").map_err(|e| Failure {
                    code: 1,
                    message: e.to_string(),
                });
                if csv {
                    w(&mut out, "power,all_pass,counterexample".into())?;
                }
                for row in &sweep.rows {
                    let cex = row.counterexample.as_deref().map(join).unwrap_or_default();
                    if csv {
                        w(&mut out, format!("{},{},\"{cex}\"", row.power, row.all_pass))?;
                    } else {
                        w(&mut out, format!("p={} all_pass={} counterexample=[{cex}]", row.power, row.all_pass))?;
                    }
                }
                if !csv {
                    w(&mut out, format!("p_k={}", sweep.pk))?;
                }
                Ok(Answer::Yes)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(2),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
