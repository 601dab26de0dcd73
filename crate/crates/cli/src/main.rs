use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};

use perfect_digraph::gen::{named_instance, random_digraph, GenSpec, Named};
use perfect_digraph::patterns::{first_difference, Side};
use perfect_digraph::verify::{run_suite, Execution, Suite, SuiteConfig};
use perfect_digraph::{
    build_cotree, clique_number, dichromatic_number, is_perfect_bruteforce, is_perfect_structural,
    min_path_cover, p4c_signature, parse_digraph, render_digraph, render_dot, Digraph, Error,
    PerfectionReport,
};

const ANALYZE_MAX: usize = 16;
const BRUTE_MAX: usize = 12;
const PATHCOVER_MAX: usize = 20;

#[derive(Parser)]
#[command(name = "pdig", version, about = "Perfect digraph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clique number, dichromatic number and perfection of a digraph
    Analyze {
        file: PathBuf,
        /// Also run the definitional checker and require agreement
        #[arg(long)]
        brute: bool,
    },
    /// P4C-isomorphism of two digraphs on the same vertex set
    Compare { file_a: PathBuf, file_b: PathBuf },
    /// Run a seeded verification suite
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Run trials on one thread
        #[arg(long)]
        sequential: bool,
    },
    /// Emit a random or named digraph
    Generate(GenerateArgs),
    /// Canonical cotree of the symmetric part
    Cotree { file: PathBuf },
    /// Minimum cover by vertex-disjoint directed paths
    Pathcover { file: PathBuf },
    /// Graphviz rendering
    ExportDot { file: PathBuf },
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["model", "named"])))]
struct GenerateArgs {
    /// Random model; only `er` (independent pairs) exists
    #[arg(long, requires_all = ["n", "psym", "pasym"])]
    model: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    psym: Option<f64>,
    #[arg(long)]
    pasym: Option<f64>,
    #[arg(long)]
    named: Option<String>,
    #[arg(long, requires = "named")]
    k: Option<usize>,
    #[arg(long)]
    seed: u64,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::anyhow!(msg.into())
}

fn load(path: &Path) -> Result<Digraph> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_digraph(&text).map_err(|e| match e {
        Error::Parse { line, reason } => usage(format!("{}:{line}: {reason}", path.display())),
        other => usage(format!("{}: {other}", path.display())),
    })
}

fn check_size(d: &Digraph, max: usize, what: &str) -> Result<()> {
    if d.n() > max {
        return Err(usage(format!(
            "{what} supports at most {max} vertices, got {}",
            d.n()
        )));
    }
    Ok(())
}

fn witness_line(report: &PerfectionReport) -> String {
    report
        .witness
        .as_ref()
        .map_or_else(|| "none".to_string(), |w| w.to_string())
}

fn analyze(file: &Path, brute: bool, out: &mut String) -> Result<u8> {
    let d = load(file)?;
    check_size(&d, ANALYZE_MAX, "analyze")?;
    if brute {
        check_size(&d, BRUTE_MAX, "analyze --brute")?;
    }
    let structural = is_perfect_structural(&d);
    writeln!(out, "n: {}", d.n())?;
    writeln!(out, "arcs: {}", d.arc_count())?;
    writeln!(out, "omega: {}", clique_number(&d).omega)?;
    writeln!(out, "chi: {}", dichromatic_number(&d).chi)?;
    writeln!(out, "perfect: {}", structural.verdict)?;
    writeln!(out, "witness: {}", witness_line(&structural))?;
    if brute {
        let definitional = is_perfect_bruteforce(&d);
        let agree = definitional.verdict == structural.verdict;
        writeln!(out, "perfect_definitional: {}", definitional.verdict)?;
        writeln!(out, "witness_definitional: {}", witness_line(&definitional))?;
        writeln!(out, "agreement: {agree}")?;
        if !agree {
            return Ok(1);
        }
    }
    Ok(0)
}

fn compare(a: &Path, b: &Path, out: &mut String) -> Result<u8> {
    let (da, db) = (load(a)?, load(b)?);
    if da.n() != db.n() {
        return Err(usage(format!(
            "vertex counts differ: {} has {}, {} has {}",
            a.display(),
            da.n(),
            b.display(),
            db.n()
        )));
    }
    match first_difference(&p4c_signature(&da), &p4c_signature(&db)) {
        None => {
            writeln!(out, "isomorphic: true")?;
            Ok(0)
        }
        Some((entry, side)) => {
            writeln!(out, "isomorphic: false")?;
            writeln!(out, "first_difference: {entry}")?;
            let side = match side {
                Side::Left => "A",
                Side::Right => "B",
            };
            writeln!(out, "only_in: {side}")?;
            Ok(1)
        }
    }
}

fn verify(suite: Suite, config: SuiteConfig, sequential: bool, out: &mut String) -> Result<u8> {
    if config.nmax == 0 || config.nmax > suite.max_n() {
        return Err(usage(format!(
            "--nmax for {suite} must be in 1..={}",
            suite.max_n()
        )));
    }
    let exec = if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let report = run_suite(suite, &config, exec);
    writeln!(out, "suite: {}", report.suite)?;
    writeln!(out, "nmax: {}", config.nmax)?;
    writeln!(out, "seed: {}", config.seed)?;
    writeln!(out, "trials: {}", report.trials)?;
    writeln!(out, "failures: {}", report.failures.len())?;
    for f in &report.failures {
        writeln!(
            out,
            "failure: {} expected={} actual={}",
            f.input, f.expected, f.actual
        )?;
    }
    eprintln!("elapsed_ms: {}", report.elapsed.as_millis());
    Ok(if report.passed() { 0 } else { 1 })
}

fn generate(args: &GenerateArgs, out: &mut String) -> Result<u8> {
    let d = if let Some(model) = &args.model {
        if model != "er" {
            return Err(usage(format!("unknown model `{model}`")));
        }
        let spec = GenSpec {
            n: args.n.unwrap_or_default(),
            p_sym: args.psym.unwrap_or_default(),
            p_asym: args.pasym.unwrap_or_default(),
            seed: args.seed,
        };
        random_digraph(&spec).map_err(|e| usage(e.to_string()))?
    } else {
        let name = args.named.as_deref().unwrap_or_default();
        let named: Named = name.parse().map_err(|e: Error| usage(e.to_string()))?;
        named_instance(named, args.k).map_err(|e| usage(e.to_string()))?
    };
    let text = render_digraph(&d);
    match &args.output {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?
        }
        None => out.push_str(&text),
    }
    Ok(0)
}

fn cotree(file: &Path, out: &mut String) -> Result<u8> {
    let d = load(file)?;
    match build_cotree(&d.symmetric_part()) {
        Ok(t) => {
            writeln!(out, "{t}")?;
            Ok(0)
        }
        Err(Error::NotCograph { witness }) => {
            let ids: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
            writeln!(out, "not-cograph: {}", ids.join(" "))?;
            Ok(1)
        }
        Err(e) => bail!(e),
    }
}

fn pathcover(file: &Path, out: &mut String) -> Result<u8> {
    let d = load(file)?;
    check_size(&d, PATHCOVER_MAX, "pathcover")?;
    let r = min_path_cover(&d);
    writeln!(out, "count: {}", r.count)?;
    for p in &r.paths {
        let ids: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", ids.join(" "))?;
    }
    Ok(0)
}

fn run(cli: Cli, out: &mut String) -> Result<u8> {
    match cli.command {
        Command::Analyze { file, brute } => analyze(&file, brute, out),
        Command::Compare { file_a, file_b } => compare(&file_a, &file_b, out),
        Command::Verify {
            suite,
            nmax,
            trials,
            seed,
            sequential,
        } => verify(suite, SuiteConfig { nmax, trials, seed }, sequential, out),
        Command::Generate(args) => generate(&args, out),
        Command::Cotree { file } => cotree(&file, out),
        Command::Pathcover { file } => pathcover(&file, out),
        Command::ExportDot { file } => {
            out.push_str(&render_dot(&load(&file)?));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
