//! Command-line front end.
//!
//! Subcommands: `solve`, `calc`, `table`, `estimate`, `oracle`, `gen`.
//! Output is plain text by default; `--format csv|json` switches to
//! machine-readable renderings that are byte-identical across runs
//! for fixed flags and seed (wall-clock time is reported only in text
//! mode). Exit codes: 0 success, 2 configuration error, 3 parse
//! error, 4 resource cap.

use crate::calculator::{
    self, best_runtime, round_half_even, RuntimeQuery, Table, TableColumn,
};
use crate::error::{Error, Result};
use crate::framework::{
    sampling_with_a_black_box, BlackBoxSolver, BruteForceSolver, DriverPath, GreedyEtaSolver,
    RunConfig,
};
use crate::hypergraph::{gen_random, parse, serialize, RandomModel};
use crate::oracle::{brute_opt, estimate_sampling_success};
use crate::problems::ProblemSpec;
use crate::sampling::{Rng, SamplingStep};
use crate::scalar::Scalar;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverChoice {
    /// Exact optimum by subset enumeration (alpha = 1).
    Brute,
    /// Witness-deletion greedy (alpha = eta for finite forbidden sets).
    Greedy,
}

#[derive(Debug, Parser)]
#[command(name = "samplebox", version, about = "Approximate vertex-deletion problems by \
iterated vertex sampling with a pluggable black-box solver, and reproduce the associated \
running-time exponent tables")]
pub struct Cli {
    /// RNG seed shared by all randomized work.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Worker threads for independent driver trials (1 keeps runs
    /// fully sequential).
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the sample-and-extend driver on an instance file.
    Solve {
        /// Problem name (see `oracle --help` for the list).
        problem: String,
        /// Instance file.
        input: PathBuf,
        /// Target approximation ratio (rational like 3/2, or decimal).
        #[arg(long)]
        beta: String,
        /// Solution-size budget the guarantee is relative to.
        #[arg(long)]
        k: u64,
        /// Procedure budget factor; defaults to the optimizer's choice.
        #[arg(long)]
        delta: Option<String>,
        /// Black box extending the sampled set.
        #[arg(long, value_enum, default_value_t = SolverChoice::Brute)]
        alpha_solver: SolverChoice,
        /// Extra cap on the number of trials.
        #[arg(long)]
        repeat_override: Option<u64>,
        /// Safety cap on the number of trials.
        #[arg(long, default_value_t = 1_000_000)]
        max_trials: u64,
    },
    /// Evaluate the running-time exponent base.
    Calc {
        /// Use a registered problem's constants (overrides --alpha/--c/--q).
        #[arg(long)]
        problem: Option<String>,
        /// Target ratio beta.
        #[arg(long)]
        beta: String,
        /// Black-box ratio alpha (with --c and --q).
        #[arg(long)]
        alpha: Option<String>,
        /// Black-box exponent base c.
        #[arg(long)]
        c: Option<f64>,
        /// Sampling success probability q.
        #[arg(long)]
        q: Option<String>,
    },
    /// Emit an exponent-base table as CSV.
    Table {
        #[arg(long)]
        problem: String,
        /// Inclusive range `start:end:step`.
        #[arg(long, value_name = "A:B:STEP")]
        beta_range: String,
        /// Comma-separated: ours, fellows, paper-baseline.
        #[arg(long, default_value = "ours")]
        columns: String,
        /// Output CSV path; unrounded values go to a `.raw.csv`
        /// companion. Prints to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Monte-Carlo estimate of the sampling step's success probability.
    Estimate {
        problem: String,
        input: PathBuf,
        #[arg(long, default_value_t = 2000)]
        trials: u64,
    },
    /// Exact optimum of an instance by brute force.
    Oracle { problem: String, input: PathBuf },
    /// Generate a random instance.
    Gen {
        /// gnp | tournament | hyper
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: usize,
        /// Edge probability (ignored by tournament).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Edge size for the hyper model.
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Entry point used by the binary: parses `std::env::args`, runs, and
/// maps errors to exit codes.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own message; usage problems exit 2.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut out = std::io::stdout();
    match run(cli, &mut out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed invocation, writing all normal output to `out`.
pub fn run<W: Write + Send>(cli: Cli, out: &mut W) -> Result<()> {
    if cli.threads == 0 {
        return Err(Error::Config("--threads must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| Error::Config(format!("--threads: {e}")))?;
    pool.install(|| dispatch(&cli, out))
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> Result<()> {
    match &cli.command {
        Command::Solve {
            problem,
            input,
            beta,
            k,
            delta,
            alpha_solver,
            repeat_override,
            max_trials,
        } => cmd_solve(
            cli,
            out,
            problem,
            input,
            beta,
            *k,
            delta.as_deref(),
            *alpha_solver,
            *repeat_override,
            *max_trials,
        ),
        Command::Calc { problem, beta, alpha, c, q } => {
            cmd_calc(cli, out, problem.as_deref(), beta, alpha.as_deref(), *c, q.as_deref())
        }
        Command::Table { problem, beta_range, columns, output } => {
            cmd_table(out, problem, beta_range, columns, output.as_deref())
        }
        Command::Estimate { problem, input, trials } => {
            cmd_estimate(cli, out, problem, input, *trials)
        }
        Command::Oracle { problem, input } => cmd_oracle(cli, out, problem, input),
        Command::Gen { model, n, p, d, output } => {
            cmd_gen(cli, out, model, *n, *p, *d, output.as_deref())
        }
    }
}

fn parse_flag_scalar(flag: &str, value: &str) -> Result<Scalar> {
    Scalar::parse(value).map_err(|e| Error::Config(format!("{flag}: {e}")))
}

fn load_instance(path: &Path) -> Result<crate::hypergraph::Hypergraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read `{}`: {e}", path.display())))?;
    parse(&text)
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve<W: Write>(
    cli: &Cli,
    out: &mut W,
    problem: &str,
    input: &Path,
    beta: &str,
    k: u64,
    delta: Option<&str>,
    solver_choice: SolverChoice,
    repeat_override: Option<u64>,
    max_trials: u64,
) -> Result<()> {
    let spec = ProblemSpec::by_name(problem)?;
    let g = load_instance(input)?;
    let beta = parse_flag_scalar("--beta", beta)?;
    let step = SamplingStep::new(&spec);
    let solver: Box<dyn BlackBoxSolver> = match solver_choice {
        SolverChoice::Brute => Box::new(BruteForceSolver::new(&spec)),
        SolverChoice::Greedy => Box::new(GreedyEtaSolver::new(&spec)),
    };
    let mut config = RunConfig::new(beta).with_seed(cli.seed);
    config.max_trials_safety = max_trials;
    config.repeat_override = repeat_override;
    if let Some(d) = delta {
        config.delta = Some(parse_flag_scalar("--delta", d)?);
    }
    let report = sampling_with_a_black_box(&spec, &step, solver.as_ref(), &g, k, &config)?;
    let size = report.solution.set.len() as i128;
    let within = Scalar::from_int(size) <= beta * Scalar::from_int(k as i128);
    let vertices: Vec<String> = report.solution.set.iter().map(|v| v.to_string()).collect();
    let path_name = match report.path {
        DriverPath::Enumeration => "enumeration",
        DriverPath::Sampled => "sampled",
    };
    match cli.format {
        OutputFormat::Text => {
            writeln!(out, "problem: {}", spec.name()).ok();
            writeln!(out, "solver: {} (alpha = {})", solver.name(), Scalar::rat(solver.alpha()))
                .ok();
            writeln!(out, "beta: {beta}  k: {k}  delta: {}", report.delta).ok();
            writeln!(out, "path: {path_name}  t*: {}  trials: {}", report.t_star,
                report.trials_executed)
            .ok();
            if report.capped {
                writeln!(out, "note: trial count truncated by cap").ok();
            }
            if report.budget_infeasible {
                writeln!(out, "note: no solution of size <= k exists; greedy completion").ok();
            }
            writeln!(out, "solution ({} vertices): {}", size, vertices.join(" ")).ok();
            writeln!(out, "within beta*k: {within}").ok();
            writeln!(out, "wall: {:?}", report.wall).ok();
        }
        OutputFormat::Csv => {
            writeln!(
                out,
                "problem,k,beta,delta,path,t_star,trials,capped,budget_infeasible,size,within_beta_k,solution"
            )
            .ok();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                spec.name(),
                k,
                beta,
                report.delta,
                path_name,
                report.t_star,
                report.trials_executed,
                report.capped,
                report.budget_infeasible,
                size,
                within,
                vertices.join(" ")
            )
            .ok();
        }
        OutputFormat::Json => {
            let value = json!({
                "schema": 1,
                "problem": spec.name(),
                "solver": solver.name(),
                "k": k,
                "beta": beta.to_string(),
                "delta": report.delta.to_string(),
                "path": path_name,
                "t_star": report.t_star,
                "trials": report.trials_executed,
                "capped": report.capped,
                "budget_infeasible": report.budget_infeasible,
                "size": size as u64,
                "within_beta_k": within,
                "solution": report.solution.set.as_slice(),
            });
            writeln!(out, "{value}").ok();
        }
    }
    Ok(())
}

fn cmd_calc<W: Write>(
    cli: &Cli,
    out: &mut W,
    problem: Option<&str>,
    beta: &str,
    alpha: Option<&str>,
    c: Option<f64>,
    q: Option<&str>,
) -> Result<()> {
    let beta = parse_flag_scalar("--beta", beta)?.as_f64();
    if let Some(name) = problem {
        let spec = ProblemSpec::by_name(name)?;
        let algs: Vec<(f64, f64)> = spec
            .known_algorithms()
            .iter()
            .map(|a| (*a.alpha.numer() as f64 / *a.alpha.denom() as f64, a.c))
            .collect();
        let (d, idx) = best_runtime(&algs, beta, spec.q_f64())?;
        let winner = &spec.known_algorithms()[idx];
        match cli.format {
            OutputFormat::Text => {
                writeln!(out, "problem: {}  q: {}", spec.name(), Scalar::rat(spec.q())).ok();
                writeln!(out, "beta: {beta}").ok();
                writeln!(out, "d: {d}").ok();
                writeln!(
                    out,
                    "via: {} (alpha = {}, c = {})",
                    winner.label,
                    Scalar::rat(winner.alpha),
                    winner.c
                )
                .ok();
            }
            OutputFormat::Csv => {
                writeln!(out, "problem,beta,d,alpha,c").ok();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    spec.name(),
                    beta,
                    d,
                    Scalar::rat(winner.alpha),
                    winner.c
                )
                .ok();
            }
            OutputFormat::Json => {
                let value = json!({
                    "schema": 1,
                    "problem": spec.name(),
                    "beta": beta,
                    "d": d,
                    "via": { "label": winner.label,
                             "alpha": Scalar::rat(winner.alpha).to_string(),
                             "c": winner.c },
                });
                writeln!(out, "{value}").ok();
            }
        }
        return Ok(());
    }
    let alpha = parse_flag_scalar("--alpha", alpha.ok_or_else(missing_calc_flags)?)?.as_f64();
    let c = c.ok_or_else(missing_calc_flags)?;
    let q = parse_flag_scalar("--q", q.ok_or_else(missing_calc_flags)?)?.as_f64();
    let rq = RuntimeQuery::new(alpha, beta, c, q)?;
    let result = calculator::runtime(&rq)?;
    match cli.format {
        OutputFormat::Text => {
            writeln!(out, "alpha: {alpha}  beta: {beta}  c: {c}  q: {q}").ok();
            writeln!(out, "d: {}", result.d).ok();
            writeln!(out, "branch: {}", result.branch).ok();
            writeln!(out, "delta_star: {}", result.delta_star).ok();
            writeln!(out, "residual: {:e}", result.residual).ok();
        }
        OutputFormat::Csv => {
            writeln!(out, "alpha,beta,c,q,d,branch,delta_star,residual").ok();
            writeln!(
                out,
                "{alpha},{beta},{c},{q},{},{},{},{:e}",
                result.d, result.branch, result.delta_star, result.residual
            )
            .ok();
        }
        OutputFormat::Json => {
            let value = json!({
                "schema": 1,
                "alpha": alpha,
                "beta": beta,
                "c": c,
                "q": q,
                "d": result.d,
                "branch": result.branch.to_string(),
                "delta_star": result.delta_star,
                "residual": result.residual,
            });
            writeln!(out, "{value}").ok();
        }
    }
    Ok(())
}

fn missing_calc_flags() -> Error {
    Error::Config("calc needs either --problem or all of --alpha, --c, --q".into())
}

fn parse_beta_range(range: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = range.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Config(format!("--beta-range must be `a:b:step`, got `{range}`")));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| {
            p.parse::<f64>()
                .map_err(|_| Error::Config(format!("--beta-range: bad number `{p}`")))
        })
        .collect::<Result<_>>()?;
    let (start, end, step) = (nums[0], nums[1], nums[2]);
    if step <= 0.0 || end < start {
        return Err(Error::Config("--beta-range needs start <= end and step > 0".into()));
    }
    let mut betas = Vec::new();
    let mut i = 0u32;
    loop {
        let b = start + step * i as f64;
        if b > end + 1e-9 {
            break;
        }
        // Snap to the grid to avoid 1.7000000000000002-style drift.
        betas.push((b * 1e9).round() / 1e9);
        i += 1;
    }
    Ok(betas)
}

fn parse_columns(spec: &str) -> Result<Vec<TableColumn>> {
    spec.split(',')
        .map(|c| match c.trim() {
            "ours" => Ok(TableColumn::Ours),
            "fellows" => Ok(TableColumn::Fidelity),
            "paper-baseline" => Ok(TableColumn::Baseline),
            other => Err(Error::Config(format!(
                "--columns: unknown column `{other}` (expected ours, fellows, paper-baseline)"
            ))),
        })
        .collect()
}

fn render_table(table: &Table, rounded: bool) -> String {
    let mut s = String::new();
    let headers: Vec<&str> = table.columns.iter().map(|c| c.header()).collect();
    s.push_str(&format!("beta,{}\n", headers.join(",")));
    for (beta, values) in &table.rows {
        let cells: Vec<String> = values
            .iter()
            .map(|v| {
                if rounded {
                    format!("{:.4}", round_half_even(*v, 4))
                } else {
                    format!("{v}")
                }
            })
            .collect();
        s.push_str(&format!("{beta},{}\n", cells.join(",")));
    }
    s
}

fn cmd_table<W: Write>(
    out: &mut W,
    problem: &str,
    beta_range: &str,
    columns: &str,
    output: Option<&Path>,
) -> Result<()> {
    let spec = ProblemSpec::by_name(problem)?;
    let betas = parse_beta_range(beta_range)?;
    let columns = parse_columns(columns)?;
    let table = calculator::make_table(&spec, &betas, &columns)?;
    let rounded = render_table(&table, true);
    let raw = render_table(&table, false);
    match output {
        Some(path) => {
            std::fs::write(path, &rounded)
                .map_err(|e| Error::Config(format!("cannot write `{}`: {e}", path.display())))?;
            let raw_path = path.with_extension("raw.csv");
            std::fs::write(&raw_path, &raw).map_err(|e| {
                Error::Config(format!("cannot write `{}`: {e}", raw_path.display()))
            })?;
            writeln!(out, "wrote {} and {}", path.display(), raw_path.display()).ok();
        }
        None => {
            write!(out, "{rounded}").ok();
        }
    }
    Ok(())
}

fn cmd_estimate<W: Write>(
    cli: &Cli,
    out: &mut W,
    problem: &str,
    input: &Path,
    trials: u64,
) -> Result<()> {
    let spec = ProblemSpec::by_name(problem)?;
    let g = load_instance(input)?;
    let step = SamplingStep::new(&spec);
    let mut rng = Rng::seeded(cli.seed);
    let report = estimate_sampling_success(&step, &g, trials, &mut rng)?;
    let q = spec.q_f64();
    match cli.format {
        OutputFormat::Text => {
            writeln!(out, "problem: {}  guaranteed q: {}", spec.name(), Scalar::rat(spec.q()))
                .ok();
            writeln!(out, "trials: {}  successes: {}", report.trials, report.successes).ok();
            writeln!(out, "estimate: {}", report.estimate).ok();
            writeln!(
                out,
                "lower bound ({}% one-sided): {}",
                report.confidence * 100.0,
                report.lower_bound
            )
            .ok();
        }
        OutputFormat::Csv => {
            writeln!(out, "problem,q,trials,successes,estimate,lower_bound,confidence").ok();
            writeln!(
                out,
                "{},{q},{},{},{},{},{}",
                spec.name(),
                report.trials,
                report.successes,
                report.estimate,
                report.lower_bound,
                report.confidence
            )
            .ok();
        }
        OutputFormat::Json => {
            let value = json!({
                "schema": 1,
                "problem": spec.name(),
                "q": q,
                "trials": report.trials,
                "successes": report.successes,
                "estimate": report.estimate,
                "lower_bound": report.lower_bound,
                "confidence": report.confidence,
            });
            writeln!(out, "{value}").ok();
        }
    }
    Ok(())
}

fn cmd_oracle<W: Write>(cli: &Cli, out: &mut W, problem: &str, input: &Path) -> Result<()> {
    let spec = ProblemSpec::by_name(problem)?;
    let g = load_instance(input)?;
    let result = brute_opt(&spec, &g)?;
    let witness: Vec<String> = result.witness.iter().map(|v| v.to_string()).collect();
    match cli.format {
        OutputFormat::Text => {
            writeln!(out, "problem: {}", spec.name()).ok();
            writeln!(out, "opt: {}", result.opt).ok();
            writeln!(out, "witness: {}", witness.join(" ")).ok();
            writeln!(out, "subsets explored: {}", result.explored).ok();
        }
        OutputFormat::Csv => {
            writeln!(out, "problem,opt,explored,witness").ok();
            writeln!(out, "{},{},{},{}", spec.name(), result.opt, result.explored,
                witness.join(" "))
            .ok();
        }
        OutputFormat::Json => {
            let value = json!({
                "schema": 1,
                "problem": spec.name(),
                "opt": result.opt,
                "explored": result.explored,
                "witness": result.witness.as_slice(),
            });
            writeln!(out, "{value}").ok();
        }
    }
    Ok(())
}

fn cmd_gen<W: Write>(
    cli: &Cli,
    out: &mut W,
    model: &str,
    n: usize,
    p: f64,
    d: usize,
    output: Option<&Path>,
) -> Result<()> {
    let model = match model {
        "gnp" => RandomModel::Gnp,
        "tournament" => RandomModel::Tournament,
        "hyper" => RandomModel::UniformHyper(d),
        other => {
            return Err(Error::Config(format!(
                "--model: unknown model `{other}` (expected gnp, tournament, hyper)"
            )))
        }
    };
    let g = gen_random(model, n, p, cli.seed)?;
    let text = serialize(&g);
    match output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Error::Config(format!("cannot write `{}`: {e}", path.display())))?;
            writeln!(out, "wrote {} ({} vertices, {} edges)", path.display(), g.n(),
                g.edge_count())
            .ok();
        }
        None => {
            write!(out, "{text}").ok();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_string(args: &[&str]) -> Result<String> {
        let cli = Cli::try_parse_from(args).expect("args must parse");
        let mut buf = Vec::new();
        run(cli, &mut buf)?;
        Ok(String::from_utf8(buf).unwrap())
    }

    #[test]
    fn calc_matches_table_value() {
        let out = run_to_string(&[
            "samplebox", "calc", "--alpha", "1", "--beta", "1.1", "--c", "2.7", "--q", "0.25",
            "--format", "json",
        ])
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        let d = v["d"].as_f64().unwrap();
        assert!((d - 2.483).abs() < 1.5e-3);
        assert_eq!(v["branch"], "right");
    }

    #[test]
    fn calc_with_problem_preset() {
        let out =
            run_to_string(&["samplebox", "calc", "--problem", "3pvc", "--beta", "1.9", "--format",
                "json"])
            .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let d = v["d"].as_f64().unwrap();
        assert!((d - 1.0718).abs() < 1.5e-3);
    }

    #[test]
    fn calc_trivial_equalities() {
        let out = run_to_string(&[
            "samplebox", "calc", "--alpha", "2", "--beta", "2", "--c", "1", "--q", "0.25",
            "--format", "json",
        ])
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["d"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn calc_requires_flags() {
        let err = run_to_string(&["samplebox", "calc", "--beta", "1.5"]).unwrap_err();
        assert!(err.to_string().contains("--alpha"));
    }

    #[test]
    fn beta_range_parsing() {
        let betas = parse_beta_range("1.1:1.9:0.1").unwrap();
        assert_eq!(betas.len(), 9);
        assert!((betas[8] - 1.9).abs() < 1e-12);
        assert!(parse_beta_range("1:2").is_err());
        assert!(parse_beta_range("2:1:0.1").is_err());
        assert!(parse_beta_range("1:2:0").is_err());
    }

    #[test]
    fn gen_is_deterministic_and_parseable() {
        let a = run_to_string(&[
            "samplebox", "gen", "--model", "gnp", "--n", "10", "--p", "0.3", "--seed", "1",
        ])
        .unwrap();
        let b = run_to_string(&[
            "samplebox", "gen", "--model", "gnp", "--n", "10", "--p", "0.3", "--seed", "1",
        ])
        .unwrap();
        assert_eq!(a, b);
        let g = parse(&a).unwrap();
        assert_eq!(g.n(), 10);
    }

    #[test]
    fn table_stdout_has_expected_shape() {
        let out = run_to_string(&[
            "samplebox", "table", "--problem", "fvs", "--beta-range", "1.1:1.3:0.1",
        ])
        .unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "beta,ours");
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("1.1,2.483"));
    }

    #[test]
    fn unknown_problem_is_config_error() {
        let err = run_to_string(&["samplebox", "calc", "--problem", "nope", "--beta", "1.5"])
            .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
