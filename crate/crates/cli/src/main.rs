#![allow(clippy::result_large_err)]

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chainlab::adjuster::{adjust_family, conditions_compatible, interpolate_gap, InsertionOrder};
use chainlab::chain_core::{
    chain_defect_set, is_barely_alternating, is_chain, validate_almost_chain, ChainFamily,
    Condition, IndexValue,
};
use chainlab::format::{
    adjustment_report_text, family_from_json, family_to_json, function_from_json, gap_to_json,
    harness_report_csv, model_from_json, parse_family, schedule_from_json, towers_from_json,
    triple_table_csv,
};
use chainlab::generators::{generate, GeneratorConfig, GeneratorKind};
use chainlab::line_operator::{
    apply_operator, compute_triples, continuity_harness, norm_witness, operator_norm, LineModel,
    TriplePattern,
};
use chainlab::{ErrorClass, Result as CoreResult};

mod sweep;

#[derive(Parser)]
#[command(
    name = "chainlab",
    version,
    about = "Almost chains, barely alternating adjustments and extension operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family from a config file or flags.
    Generate(GenerateArgs),
    /// Report chain, barely-alternating and defect-budget verdicts.
    Check(CheckArgs),
    /// Finitely adjust a family into a barely alternating one.
    Adjust(AdjustArgs),
    /// Check two partial families for compatibility.
    Compat(CompatArgs),
    /// Interpolate an ascending and a descending tower.
    Gap(GapArgs),
    /// Print the triple table of a barely alternating family.
    Triples(LineArgs),
    /// Operator norm, optional function evaluation and schedule harness.
    Operator(OperatorArgs),
    /// Run the generate/adjust/operator pipeline over a parameter grid.
    Sweep(sweep::SweepArgs),
}

#[derive(Args)]
struct Output {
    /// Write the main artifact here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    InitialSegment,
    Marciszewski,
    Perturbed,
}

#[derive(Args)]
struct GenerateArgs {
    /// Generator config document; replaces the generator flags.
    #[arg(long, conflicts_with_all = ["kind", "ground_size", "depth", "count", "flips"])]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    ground_size: Option<usize>,
    #[arg(long)]
    depth: Option<u32>,
    #[arg(long)]
    count: Option<usize>,
    /// Bits toggled per set (perturbed only).
    #[arg(long)]
    flips: Option<usize>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    budget: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Sorted,
    Given,
    Random,
}

#[derive(Args)]
struct AdjustArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Order::Sorted)]
    order: Order,
    /// Seed for `--order random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the adjustment report here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct CompatArgs {
    /// Two condition files.
    #[arg(long, num_args = 1, required = true)]
    input: Vec<PathBuf>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct GapArgs {
    /// Towers document.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    budget: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct LineArgs {
    #[arg(long)]
    input: PathBuf,
    /// Line model document; defaults to `K = Y` over the family's indices.
    #[arg(long)]
    model: Option<PathBuf>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct OperatorArgs {
    #[command(flatten)]
    line: LineArgs,
    /// Function document to extend.
    #[arg(long)]
    function: Option<PathBuf>,
    /// Schedule document for the continuity harness; needs `--function`.
    #[arg(long, requires = "function")]
    schedule: Option<PathBuf>,
}

enum CliError {
    Core(chainlab::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<chainlab::Error> for CliError {
    fn from(err: chainlab::Error) -> Self {
        CliError::Core(err)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e.class() {
                ErrorClass::Format => 2,
                ErrorClass::Input => 3,
                ErrorClass::NotFound => 5,
                ErrorClass::Inconsistency => 6,
            },
            CliError::Io(..) => 4,
            CliError::Usage(_) => 2,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            CliError::Core(e) => match e.class() {
                ErrorClass::Format => "format",
                ErrorClass::Input => "input",
                ErrorClass::NotFound => "not-found",
                ErrorClass::Inconsistency => "inconsistency",
            },
            CliError::Io(..) => "io",
            CliError::Usage(_) => "usage",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// `-` reads stdin.
fn read(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut text)
            .map_err(|e| CliError::Io(path.to_owned(), e))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_owned(), e))
}

fn write_to(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.to_owned(), e))
}

fn emit(out: &Output, text: &str) -> Result<()> {
    match &out.output {
        Some(path) => write_to(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_family(path: &Path) -> Result<ChainFamily> {
    Ok(family_from_json(&read(path)?)?)
}

fn line_model(args: &LineArgs, family: &ChainFamily) -> Result<LineModel> {
    let model = match &args.model {
        Some(path) => model_from_json(&read(path)?)?,
        None => LineModel::from_family(family)?,
    };
    Ok(model)
}

fn run_generate(args: &GenerateArgs) -> Result<()> {
    let config = match &args.config {
        Some(path) => GeneratorConfig::from_json(&read(path)?)?,
        None => {
            let kind = args
                .kind
                .ok_or_else(|| CliError::Usage("either --config or --kind is required".into()))?;
            GeneratorConfig {
                kind: Some(match kind {
                    Kind::InitialSegment => GeneratorKind::InitialSegment,
                    Kind::Marciszewski => GeneratorKind::Marciszewski,
                    Kind::Perturbed => GeneratorKind::Perturbed,
                }),
                seed: args.seed,
                ground_size: args.ground_size,
                depth: args.depth,
                count: args.count,
                flips_per_set: args.flips,
                ..GeneratorConfig::default()
            }
        }
    };
    emit(&args.out, &family_to_json(&generate(&config)?))
}

fn run_check(args: &CheckArgs) -> Result<()> {
    let family = read_family(&args.input)?;
    let mut text = String::new();
    let verdict = |ok: bool, witness: String| {
        if ok {
            "ok".to_string()
        } else {
            format!("violated {witness}")
        }
    };
    let chain = is_chain(&family);
    text += &format!(
        "chain: {}\n",
        verdict(
            chain.is_ok(),
            chain.witness().map(ToString::to_string).unwrap_or_default()
        )
    );
    let alt = is_barely_alternating(&family);
    text += &format!(
        "barely_alternating: {}\n",
        verdict(
            alt.is_ok(),
            alt.witness().map(ToString::to_string).unwrap_or_default()
        )
    );
    let report = validate_almost_chain(&family, args.budget);
    text += &format!("max_defect: {}\n", report.max_defect_size);
    let flagged = report.flagged().count();
    text += &format!(
        "budget: {} {}\n",
        args.budget,
        if flagged == 0 {
            "ok".to_string()
        } else {
            format!("exceeded pairs={flagged}")
        }
    );
    if let Some(p) = report.flagged().next() {
        text += &format!(
            "first_over_budget: x={} y={} defect={}\n",
            p.x, p.y, p.defect
        );
    }
    text += &format!("chain_defect_set: {}\n", chain_defect_set(&family));
    emit(&args.out, &text)
}

fn run_adjust(args: &AdjustArgs) -> Result<()> {
    let parsed = parse_family(&read(&args.input)?)?;
    let order = match args.order {
        Order::Sorted => InsertionOrder::Sorted,
        Order::Given => InsertionOrder::Given(parsed.file_order.clone()),
        Order::Random => InsertionOrder::Random(args.seed),
    };
    let sequence: Vec<IndexValue> = order.resolve(&parsed.family);
    let (out, report) = adjust_family(&parsed.family, &sequence)?;
    if let Some(path) = &args.report {
        write_to(path, &adjustment_report_text(&report))?;
    }
    emit(&args.out, &family_to_json(&out))
}

fn run_compat(args: &CompatArgs) -> Result<()> {
    let [a, b] = args.input.as_slice() else {
        return Err(CliError::Usage(format!(
            "compat needs exactly two --input files, got {}",
            args.input.len()
        )));
    };
    let c1 = Condition::from(read_family(a)?);
    let c2 = Condition::from(read_family(b)?);
    let text = match conditions_compatible(&c1, &c2)?.witness() {
        None => "compatible\n".to_string(),
        Some(w) => format!("incompatible {w}\n"),
    };
    emit(&args.out, &text)
}

fn run_gap(args: &GapArgs) -> Result<()> {
    let towers = towers_from_json(&read(&args.input)?)?;
    let gap = interpolate_gap(&towers.lower, &towers.upper, args.budget)?;
    emit(&args.out, &gap_to_json(&gap))
}

fn run_triples(args: &LineArgs) -> Result<()> {
    let family = read_family(&args.input)?;
    let model = line_model(args, &family)?;
    emit(
        &args.out,
        &triple_table_csv(&compute_triples(&family, &model)?),
    )
}

fn run_operator(args: &OperatorArgs) -> Result<()> {
    let family = read_family(&args.line.input)?;
    let model = line_model(&args.line, &family)?;
    let table = compute_triples(&family, &model)?;
    let strict = table
        .triples()
        .iter()
        .filter(|t| t.pattern() == TriplePattern::Strict)
        .count();
    let mut text = format!(
        "norm: {}\n",
        chainlab::chain_core::format_rational(&operator_norm(&table))
    );
    text += &format!("strict_rows: {strict}\n");
    if let Some((n, _)) = norm_witness(&table, &model) {
        let t = &table.triples()[n];
        text += &format!(
            "witness: n={n} f(x0)=1 f(x1)=-1 f(x2)=1 at {} {} {}\n",
            t.x0, t.x1, t.x2
        );
    }
    if let Some(path) = &args.function {
        let f = function_from_json(&read(path)?, &model)?;
        let ef = apply_operator(&f, &table)?;
        let fmt = chainlab::chain_core::format_rational;
        text += &format!("sup_f: {}\n", fmt(&f.sup_norm()));
        text += &format!("sup_ef: {}\n", fmt(&ef.sup_norm()));
        for (n, v) in ef.on_omega.iter().enumerate() {
            text += &format!("ef {n} {}\n", fmt(v));
        }
        if let Some(path) = &args.schedule {
            let schedule = schedule_from_json(&read(path)?)?;
            text += &harness_report_csv(&continuity_harness(&family, &model, &schedule, &f)?);
        }
    }
    emit(&args.line.out, &text)
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Generate(a) => run_generate(a),
        Command::Check(a) => run_check(a),
        Command::Adjust(a) => run_adjust(a),
        Command::Compat(a) => run_compat(a),
        Command::Gap(a) => run_gap(a),
        Command::Triples(a) => run_triples(a),
        Command::Operator(a) => run_operator(a),
        Command::Sweep(a) => {
            let table: CoreResult<String> = sweep::run(a);
            emit(&a.out, &table?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.tag());
            ExitCode::from(e.exit_code())
        }
    }
}
