use clap::{Args, ValueEnum};
use rayon::prelude::*;

use chainlab::adjuster::{adjust_family_with, InsertionOrder};
use chainlab::chain_core::{
    format_rational, is_barely_alternating, is_chain, validate_almost_chain,
};
use chainlab::generators::{generate, GeneratorConfig, GeneratorKind};
use chainlab::line_operator::{compute_triples, operator_norm, LineModel, TriplePattern};
use chainlab::Result;

use crate::Output;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Perturbed,
    Marciszewski,
}

#[derive(Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = SweepKind::Perturbed)]
    kind: SweepKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances per grid point.
    #[arg(long, default_value_t = 4)]
    instances: usize,
    /// Ground sizes (perturbed).
    #[arg(long, value_delimiter = ',', default_value = "16,32,64")]
    ground_size: Vec<usize>,
    /// Depths (marciszewski).
    #[arg(long, value_delimiter = ',', default_value = "4,6,8")]
    depth: Vec<u32>,
    /// Flips per set (perturbed).
    #[arg(long, value_delimiter = ',', default_value = "0,1,2,3")]
    flips: Vec<usize>,
    /// Indices per instance.
    #[arg(long, default_value_t = 32)]
    count: usize,
    /// Insert in sorted order instead of a seeded shuffle.
    #[arg(long)]
    sorted: bool,
    #[command(flatten)]
    pub out: Output,
}

struct Point {
    size_param: u64,
    flips: usize,
    instance: usize,
    seed: u64,
}

const HEADER: &str = "kind,param,flips,instance,seed,indices,ground_size,input_chain,input_barely_alternating,input_max_defect,total_cost,max_cost,output_barely_alternating,norm,strict_rows";

/// SplitMix64 step, so neighbouring grid points get unrelated seeds.
fn derive_seed(base: u64, k: u64) -> u64 {
    let mut z = base.wrapping_add(k.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn grid(args: &SweepArgs) -> Vec<Point> {
    let params: Vec<u64> = match args.kind {
        SweepKind::Perturbed => args.ground_size.iter().map(|&n| n as u64).collect(),
        SweepKind::Marciszewski => args.depth.iter().map(|&d| d as u64).collect(),
    };
    let flips: &[usize] = match args.kind {
        SweepKind::Perturbed => &args.flips,
        SweepKind::Marciszewski => &[0],
    };
    let mut points = Vec::new();
    for &size_param in &params {
        for &f in flips {
            for instance in 0..args.instances {
                let k = points.len() as u64;
                points.push(Point {
                    size_param,
                    flips: f,
                    instance,
                    seed: derive_seed(args.seed, k),
                });
            }
        }
    }
    points
}

fn row(args: &SweepArgs, p: &Point) -> Result<String> {
    let config = match args.kind {
        SweepKind::Perturbed => GeneratorConfig {
            kind: Some(GeneratorKind::Perturbed),
            seed: p.seed,
            ground_size: Some(p.size_param as usize),
            count: Some(args.count),
            flips_per_set: Some(p.flips),
            ..GeneratorConfig::default()
        },
        SweepKind::Marciszewski => GeneratorConfig {
            kind: Some(GeneratorKind::Marciszewski),
            seed: p.seed,
            depth: Some(p.size_param as u32),
            count: Some(args.count),
            ..GeneratorConfig::default()
        },
    };
    let family = generate(&config)?;
    let order = if args.sorted {
        InsertionOrder::Sorted
    } else {
        InsertionOrder::Random(p.seed)
    };
    let (out, report) = adjust_family_with(&family, &order)?;
    let (norm, strict) = if out.is_empty() {
        ("1".to_string(), 0)
    } else {
        let model = LineModel::from_family(&out)?;
        let table = compute_triples(&out, &model)?;
        let strict = table
            .triples()
            .iter()
            .filter(|t| t.pattern() == TriplePattern::Strict)
            .count();
        (format_rational(&operator_norm(&table)), strict)
    };
    let kind = match args.kind {
        SweepKind::Perturbed => "perturbed",
        SweepKind::Marciszewski => "marciszewski",
    };
    Ok(format!(
        "{kind},{},{},{},{},{},{},{},{},{},{},{},{},{norm},{strict}",
        p.size_param,
        p.flips,
        p.instance,
        p.seed,
        family.len(),
        family.ground_size(),
        is_chain(&family).is_ok(),
        is_barely_alternating(&family).is_ok(),
        validate_almost_chain(&family, 0).max_defect_size,
        report.total_cost,
        report.max_cost,
        is_barely_alternating(&out).is_ok(),
    ))
}

/// One CSV row per grid point, in grid order regardless of scheduling.
pub fn run(args: &SweepArgs) -> Result<String> {
    let rows = grid(args)
        .par_iter()
        .map(|p| row(args, p))
        .collect::<Result<Vec<String>>>()?;
    let mut text = String::from(HEADER);
    text.push('\n');
    for r in rows {
        text += &r;
        text.push('\n');
    }
    Ok(text)
}
