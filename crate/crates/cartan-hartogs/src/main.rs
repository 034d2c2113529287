//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (a counterexample is
//! printed to stderr), 2 invalid input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::Signed;
use serde_json::json;

use cartan_hartogs::algebra::{parse_rational, rational_to_f64, Rational};
use cartan_hartogs::domains::{catalog, parse_label, CartanDomain, FiberCoordinate, HartogsSpec};
use cartan_hartogs::epsilon::{epsilon_bipoly, eval_gamma_form, extract_coefficients};
use cartan_hartogs::report;
use cartan_hartogs::verifier::{certify_locus, verdict_for, verify_theorem_sweep, SweepConfig};

#[derive(Parser)]
#[command(
    name = "cartan-hartogs",
    version,
    about = "Exact Englis expansion of the Rawnsley epsilon function on Cartan-Hartogs domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the expansion coefficients a_j(t) with constancy flags
    Expand(SpecArgs),
    /// Constancy profile, bridge check and consistency verdict for one spec
    Check(SpecArgs),
    /// Verify the constancy characterization over the catalog and a mu grid
    Sweep(SweepArgs),
    /// Exact constancy locus in mu for one (domain, d0, j)
    Locus(LocusArgs),
    /// Evaluate the epsilon polynomial at (t, alpha), exact and floating
    Eval(EvalArgs),
    /// List the bounded symmetric domain catalog
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct DomainArgs {
    /// Catalog label: I(p,q), II(n), III(n), IV(n), E6 or E7
    #[arg(long, conflicts_with_all = ["r", "a", "b"])]
    label: Option<String>,
    /// Rank; selects the domain explicitly together with --a and --b
    #[arg(long)]
    r: Option<u32>,
    /// Invariant a (optional when r = 1, where it is irrelevant)
    #[arg(long)]
    a: Option<u32>,
    /// Invariant b
    #[arg(long)]
    b: Option<u32>,
}

impl DomainArgs {
    fn resolve(&self) -> Result<CartanDomain, String> {
        match (&self.label, self.r) {
            (Some(label), None) => parse_label(label).map_err(|e| e.to_string()),
            (None, Some(r)) => {
                let a = match self.a {
                    Some(a) => a,
                    None if r == 1 => 2,
                    None => return Err("--a is required when r >= 2".into()),
                };
                let b = self.b.ok_or("--b is required with --r")?;
                CartanDomain::new(r, a, b).map_err(|e| e.to_string())
            }
            (None, None) => Err("select a domain with --label or with --r/--a/--b".into()),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct SpecArgs {
    #[command(flatten)]
    domain: DomainArgs,
    /// Hartogs exponent: rational "p/q" or finite decimal, converted exactly
    #[arg(long)]
    mu: String,
    /// Fiber dimension
    #[arg(long, default_value_t = 1)]
    d0: u32,
    #[command(flatten)]
    output: OutputArgs,
}

impl SpecArgs {
    fn resolve(&self) -> Result<HartogsSpec, String> {
        let domain = self.domain.resolve()?;
        let mu = parse_rational(&self.mu).map_err(|e| e.to_string())?;
        HartogsSpec::new(domain, mu, self.d0).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Catalog bound on the base dimension d
    #[arg(long, default_value_t = 8)]
    max_d: u32,
    /// Comma-separated fiber dimensions
    #[arg(long, default_value = "1,2,3")]
    d0: String,
    /// mu grid: "start:end:step" or a comma-separated rational list
    #[arg(long, default_value = "1/10:3:1/10")]
    grid: String,
    /// Skip the exact per-(domain, d0, j) locus certification
    #[arg(long)]
    skip_locus: bool,
    #[arg(long, hide = true)]
    inject_fault: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct LocusArgs {
    #[command(flatten)]
    domain: DomainArgs,
    /// Fiber dimension
    #[arg(long, default_value_t = 1)]
    d0: u32,
    /// Coefficient index, 2 <= j <= d + d0
    #[arg(long)]
    j: u32,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Fiber coordinate in (0, 1], rational or finite decimal
    #[arg(long)]
    t: String,
    /// Quantization parameter, rational or finite decimal
    #[arg(long)]
    alpha: String,
}

#[derive(Args)]
struct CatalogArgs {
    /// Largest base dimension to list
    #[arg(long, default_value_t = 16)]
    max_d: u32,
    #[command(flatten)]
    output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> Result<ExitCode, String> {
    match command {
        Command::Expand(args) => cmd_expand(args),
        Command::Check(args) => cmd_check(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Locus(args) => cmd_locus(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Catalog(args) => cmd_catalog(args),
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), String> {
    match &output.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn cmd_expand(args: &SpecArgs) -> Result<ExitCode, String> {
    let spec = args.resolve()?;
    let expansion = extract_coefficients(&spec).map_err(|e| e.to_string())?;
    let text = match args.output.format {
        Format::Table => report::expansion_table(&expansion),
        Format::Json => json_text(&report::expansion_json(&expansion)),
        Format::Csv => report::expansion_csv(&expansion),
    };
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(args: &SpecArgs) -> Result<ExitCode, String> {
    let spec = args.resolve()?;
    let verdict = verdict_for(&spec).map_err(|e| e.to_string())?;
    let text = match args.output.format {
        Format::Table => {
            let constant_js = verdict
                .constant_js
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",");
            format!(
                "{}\nconstant_js: {{{constant_js}}}\nbridge_holds: {}\ntheorem_consistent: {}\n",
                spec, verdict.bridge_holds, verdict.theorem_consistent
            )
        }
        Format::Json => json_text(&report::verdict_json(&verdict)),
        Format::Csv => format!(
            "{}\n{}\n",
            report::VERDICT_CSV_HEADER,
            report::verdict_csv_row(&verdict)
        ),
    };
    emit(&args.output, &text)?;
    if verdict.theorem_consistent && verdict.bridge_holds {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("counterexample: {spec}");
        Ok(ExitCode::from(1))
    }
}

fn parse_d0_list(text: &str) -> Result<Vec<u32>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| part.parse::<u32>().map_err(|_| format!("bad d0 value '{part}'")))
        .collect()
}

fn parse_grid(text: &str) -> Result<Vec<Rational>, String> {
    let text = text.trim();
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid '{text}' is not start:end:step"));
        }
        let start = parse_rational(parts[0]).map_err(|e| e.to_string())?;
        let end = parse_rational(parts[1]).map_err(|e| e.to_string())?;
        let step = parse_rational(parts[2]).map_err(|e| e.to_string())?;
        if !step.is_positive() {
            return Err(format!("grid step {step} must be positive"));
        }
        let mut grid = Vec::new();
        let mut value = start;
        while value <= end {
            grid.push(value.clone());
            value += &step;
        }
        Ok(grid)
    } else {
        text.split(',')
            .map(str::trim)
            .filter(|part| !part.is_empty())
            .map(|part| parse_rational(part).map_err(|e| e.to_string()))
            .collect()
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<ExitCode, String> {
    let config = SweepConfig {
        d0_values: parse_d0_list(&args.d0)?,
        mu_grid: parse_grid(&args.grid)?,
        certify_locus: !args.skip_locus,
        inject_fault: args.inject_fault,
    };
    let domains = catalog(args.max_d);
    let report_data = verify_theorem_sweep(&domains, &config).map_err(|e| e.to_string())?;
    let text = match args.output.format {
        Format::Table => report::sweep_table(&report_data),
        Format::Json => json_text(&report::sweep_json(&report_data)),
        Format::Csv => report::sweep_csv(&report_data),
    };
    emit(&args.output, &text)?;
    if report_data.all_consistent() {
        Ok(ExitCode::SUCCESS)
    } else {
        for verdict in report_data.failing_verdicts() {
            eprintln!("counterexample: {}", verdict.spec);
        }
        for cert in report_data.failing_certificates() {
            eprintln!(
                "counterexample locus: {} d0={} j={} roots={}",
                cert.domain,
                cert.d0,
                cert.j,
                report::roots_str(&cert.roots)
            );
        }
        Ok(ExitCode::from(1))
    }
}

fn cmd_locus(args: &LocusArgs) -> Result<ExitCode, String> {
    let domain = args.domain.resolve()?;
    let n = domain.d() + args.d0;
    if args.j < 2 || args.j > n {
        return Err(format!("j = {} outside [2, {n}]", args.j));
    }
    let cert = certify_locus(&domain, args.d0, args.j).map_err(|e| e.to_string())?;
    let text = match args.output.format {
        Format::Table => report::locus_table(&cert),
        Format::Json => json_text(&report::locus_json(&cert)),
        Format::Csv => report::locus_csv(std::slice::from_ref(&cert)),
    };
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(args: &EvalArgs) -> Result<ExitCode, String> {
    let spec = args.spec.resolve()?;
    let t = parse_rational(&args.t).map_err(|e| e.to_string())?;
    let t = FiberCoordinate::new(t).map_err(|e| e.to_string())?;
    let alpha = parse_rational(&args.alpha).map_err(|e| e.to_string())?;
    let bipoly = epsilon_bipoly(&spec).map_err(|e| e.to_string())?;
    let exact = bipoly.eval(t.t(), &alpha);
    let exact_f64 = rational_to_f64(&exact);
    let gamma_form = eval_gamma_form(&spec, rational_to_f64(t.t()), rational_to_f64(&alpha));
    let scale = exact_f64.abs().max(gamma_form.abs());
    let rel_diff = if scale == 0.0 { 0.0 } else { (exact_f64 - gamma_form).abs() / scale };
    let text = match args.spec.output.format {
        Format::Json => json_text(&json!({
            "spec": report::domain_json(spec.domain()),
            "mu": spec.mu().to_string(),
            "d0": spec.d0(),
            "t": t.t().to_string(),
            "alpha": alpha.to_string(),
            "exact": exact.to_string(),
            "exact_f64": exact_f64,
            "gamma_form": gamma_form,
            "rel_diff": rel_diff,
        })),
        _ => format!(
            "exact: {exact}\nexact_f64: {exact_f64}\ngamma_form: {gamma_form}\nrel_diff: {rel_diff}\n"
        ),
    };
    emit(&args.spec.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalog(args: &CatalogArgs) -> Result<ExitCode, String> {
    let domains = catalog(args.max_d);
    let text = match args.output.format {
        Format::Table => report::catalog_table(&domains),
        Format::Json => json_text(&report::catalog_json(&domains)),
        Format::Csv => report::catalog_csv(&domains),
    };
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}
