use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};
use domflip::edge_dom::{enumerate_min_eds, line_graph};
use domflip::flip::{DelayStats, Enumerator};
use domflip::gen::{BipartiteLineGenerator, GirthGenerator, LineGenerator};
use domflip::io::{format_edge_set, read_edge_list};
use domflip::mis::MisEnumerator;
use domflip::{oracle, Error, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Minimal dominating sets of a line graph.
    MdsLine,
    /// Minimal dominating sets of the line graph of a bipartite graph.
    MdsBipartiteLine,
    /// Minimal dominating sets of a graph of girth at least 7.
    MdsGirth7,
    /// Minimal edge dominating sets.
    Eds,
    /// Maximal independent sets in lexicographic order.
    Mis,
    OracleMds,
    OracleEds,
    OracleMis,
}

/// Enumerate minimal dominating sets, minimal edge dominating sets or
/// maximal independent sets of a graph given as an edge list.
#[derive(Debug, Parser)]
#[command(version)]
struct Cli {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Edge list file; standard input when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Stop after this many results.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    limit: Option<u64>,
    /// Print only the number of results.
    #[arg(long)]
    count: bool,
    /// Print delay statistics to standard error.
    #[arg(long)]
    stats: bool,
    /// In eds mode, use the general line-graph generator on bipartite roots.
    #[arg(long)]
    force_general: bool,
}

#[derive(Debug, Default)]
struct Timing {
    results: u64,
    max_gap: Duration,
    total: Duration,
}

/// Writes results as they arrive, one per line, flushing each.
fn drive(results: &mut dyn Iterator<Item = String>, cli: &Cli, out: &mut impl Write) -> io::Result<Timing> {
    let mut timing = Timing::default();
    let started = Instant::now();
    let mut last = started;
    while cli.limit.is_none_or(|k| timing.results < k) {
        let Some(line) = results.next() else { break };
        let now = Instant::now();
        timing.max_gap = timing.max_gap.max(now - last);
        last = now;
        timing.results += 1;
        if !cli.count {
            writeln!(out, "{line}")?;
            out.flush()?;
        }
    }
    timing.total = started.elapsed();
    if cli.count {
        writeln!(out, "{}", timing.results)?;
        out.flush()?;
    }
    Ok(timing)
}

fn report(timing: &Timing, search: Option<&DelayStats>) {
    let mean = if timing.results == 0 { Duration::ZERO } else { timing.total / timing.results as u32 };
    eprintln!("results: {}", timing.results);
    eprintln!("max_delay_ms: {:.3}", timing.max_gap.as_secs_f64() * 1e3);
    eprintln!("mean_delay_ms: {:.3}", mean.as_secs_f64() * 1e3);
    if let Some(s) = search {
        eprintln!("ledger_size: {}", s.ledger_size);
        eprintln!("max_stack_depth: {}", s.max_stack_depth);
        eprintln!("duplicates: {}", s.duplicates);
    }
}

fn read_graph(cli: &Cli) -> domflip::Result<Graph> {
    match &cli.input {
        Some(path) => read_edge_list(BufReader::new(File::open(path)?)),
        None => read_edge_list(io::stdin().lock()),
    }
}

fn run(cli: &Cli) -> domflip::Result<()> {
    let graph = read_graph(cli)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let out = &mut out;
    let (timing, search) = match cli.mode {
        Mode::MdsLine => {
            let mut e = Enumerator::new(&graph, LineGenerator::new(&graph)?);
            let t = drive(&mut (&mut e).map(|s| s.to_string()), cli, out)?;
            (t, Some(e.stats().clone()))
        }
        Mode::MdsBipartiteLine => {
            let mut e = Enumerator::new(&graph, BipartiteLineGenerator::new(&graph)?);
            let t = drive(&mut (&mut e).map(|s| s.to_string()), cli, out)?;
            (t, Some(e.stats().clone()))
        }
        Mode::MdsGirth7 => {
            let mut e = Enumerator::new(&graph, GirthGenerator::new(&graph)?);
            let t = drive(&mut (&mut e).map(|s| s.to_string()), cli, out)?;
            (t, Some(e.stats().clone()))
        }
        Mode::Eds => {
            let map = line_graph(&graph)?;
            let mut e = enumerate_min_eds(&map, cli.force_general)?;
            let t = drive(&mut (&mut e).map(|a| format_edge_set(&a)), cli, out)?;
            (t, Some(e.stats().clone()))
        }
        Mode::Mis => {
            let t = drive(&mut MisEnumerator::new(&graph).map(|s| s.to_string()), cli, out)?;
            (t, None)
        }
        Mode::OracleMds => {
            let all = oracle::brute_mds(&graph)?;
            (drive(&mut all.iter().map(|s| s.to_string()), cli, out)?, None)
        }
        Mode::OracleMis => {
            let all = oracle::brute_mis(&graph)?;
            (drive(&mut all.iter().map(|s| s.to_string()), cli, out)?, None)
        }
        Mode::OracleEds => {
            let all = oracle::brute_eds(&graph)?;
            (drive(&mut all.iter().map(|a| format_edge_set(a)), cli, out)?, None)
        }
    };
    if cli.stats {
        report(&timing, search.as_ref());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e @ Error::Unsupported(_)) => {
            eprintln!("domflip: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("domflip: {e}");
            ExitCode::from(1)
        }
    }
}
