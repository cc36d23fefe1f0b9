//! Text documents read and written by the front end.
//!
//! Families, towers, models, functions and schedules are JSON; reports and
//! tables are line-oriented, with `#` marking summary lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::adjuster::{AdjustmentReport, GapInterpolation};
use crate::chain_core::{
    format_rational, parse_rational, ChainFamily, GroundSet, IndexValue, SetBits,
};
use crate::error::{Error, Result};
use crate::line_operator::{FunctionOnLine, HarnessReport, LineModel, ScheduleStep, TripleTable};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDoc {
    ground_size: usize,
    entries: Vec<EntryDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    index: String,
    set: Vec<usize>,
}

/// A family together with the order its entries appeared in the document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedFamily {
    pub family: ChainFamily,
    pub file_order: Vec<IndexValue>,
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn family_to_json(family: &ChainFamily) -> String {
    let doc = FamilyDoc {
        ground_size: family.ground_size(),
        entries: family
            .entries()
            .map(|(x, set)| EntryDoc {
                index: x.to_string(),
                set: set.to_vec(),
            })
            .collect(),
    };
    to_pretty(&doc)
}

fn sorted_set(ground: GroundSet, elements: &[usize]) -> Result<SetBits> {
    if elements.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Format(format!(
            "set {elements:?} is not strictly increasing"
        )));
    }
    SetBits::from_elements(ground, elements.iter().copied())
}

pub fn parse_family(text: &str) -> Result<ParsedFamily> {
    let doc: FamilyDoc = serde_json::from_str(text)?;
    let ground = GroundSet::new(doc.ground_size)?;
    let entries = doc
        .entries
        .iter()
        .map(|e| Ok((e.index.parse::<IndexValue>()?, sorted_set(ground, &e.set)?)))
        .collect::<Result<Vec<_>>>()?;
    let file_order = entries.iter().map(|(x, _)| x.clone()).collect();
    Ok(ParsedFamily {
        family: ChainFamily::new(ground, entries)?,
        file_order,
    })
}

pub fn family_from_json(text: &str) -> Result<ChainFamily> {
    parse_family(text).map(|p| p.family)
}

fn set_text(set: &SetBits) -> String {
    set.iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One receipt per line: `index<TAB>|delta|<TAB>delta elements`.
pub fn adjustment_report_text(report: &AdjustmentReport) -> String {
    let mut out = String::from("# index\tcost\tdelta\n");
    for r in &report.receipts {
        let _ = writeln!(
            out,
            "{}\t{}\t{}",
            r.inserted_index,
            r.cost(),
            set_text(&r.delta_from_input)
        );
    }
    let _ = writeln!(out, "# total_cost: {}", report.total_cost);
    let _ = writeln!(out, "# max_cost: {}", report.max_cost);
    out
}

/// `n,x0,x1,x2,tag` with a header row.
pub fn triple_table_csv(table: &TripleTable) -> String {
    let mut out = String::from("n,x0,x1,x2,tag\n");
    for (n, t) in table.triples().iter().enumerate() {
        let _ = writeln!(out, "{n},{},{},{},{}", t.x0, t.x1, t.x2, t.pattern());
    }
    out
}

pub fn harness_report_csv(report: &HarnessReport) -> String {
    let mut out = String::from("stage,n,x0,x1,x2,tag,value\n");
    for row in &report.trajectory {
        let t = &row.triple;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.stage,
            row.n,
            t.x0,
            t.x1,
            t.x2,
            t.pattern(),
            format_rational(&row.value)
        );
    }
    let _ = writeln!(out, "# limit_point: {}", report.limit_point);
    let _ = writeln!(
        out,
        "# final_value: {}",
        format_rational(&report.final_value)
    );
    let _ = writeln!(
        out,
        "# limit_value: {}",
        format_rational(&report.limit_value)
    );
    let _ = writeln!(out, "# agrees: {}", report.agrees());
    out
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionDoc {
    values: BTreeMap<String, String>,
}

/// `{"values": {"p/q": "r/s", ...}}`, one value per carrier point.
pub fn function_from_json(text: &str, model: &LineModel) -> Result<FunctionOnLine> {
    let doc: FunctionDoc = serde_json::from_str(text)?;
    let values = doc
        .values
        .iter()
        .map(|(x, v)| Ok((x.parse::<IndexValue>()?, parse_rational(v)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    FunctionOnLine::new(model, values)
}

pub fn function_to_json(f: &FunctionOnLine) -> String {
    let doc = FunctionDoc {
        values: f
            .values()
            .iter()
            .map(|(x, v)| (x.to_string(), format_rational(v)))
            .collect(),
    };
    to_pretty(&doc)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    carrier: Vec<String>,
    dense: Vec<String>,
}

fn parse_indices(items: &[String]) -> Result<Vec<IndexValue>> {
    items.iter().map(|s| s.parse()).collect()
}

pub fn model_from_json(text: &str) -> Result<LineModel> {
    let doc: ModelDoc = serde_json::from_str(text)?;
    LineModel::new(parse_indices(&doc.carrier)?, parse_indices(&doc.dense)?)
}

pub fn model_to_json(model: &LineModel) -> String {
    let strings = |xs: &[IndexValue]| xs.iter().map(ToString::to_string).collect();
    to_pretty(&ModelDoc {
        carrier: strings(model.carrier()),
        dense: strings(model.dense()),
    })
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepDoc {
    n: usize,
    stage: usize,
}

/// `[{"n": .., "stage": ..}, ...]`
pub fn schedule_from_json(text: &str) -> Result<Vec<ScheduleStep>> {
    let docs: Vec<StepDoc> = serde_json::from_str(text)?;
    Ok(docs
        .into_iter()
        .map(|d| ScheduleStep {
            n: d.n,
            stage: d.stage,
        })
        .collect())
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TowersDoc {
    ground_size: usize,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

/// An ascending tower `U` and a descending tower `V` over one ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Towers {
    pub lower: Vec<SetBits>,
    pub upper: Vec<SetBits>,
}

pub fn towers_from_json(text: &str) -> Result<Towers> {
    let doc: TowersDoc = serde_json::from_str(text)?;
    let ground = GroundSet::new(doc.ground_size)?;
    let sets = |rows: &[Vec<usize>]| {
        rows.iter()
            .map(|r| sorted_set(ground, r))
            .collect::<Result<Vec<_>>>()
    };
    Ok(Towers {
        lower: sets(&doc.lower)?,
        upper: sets(&doc.upper)?,
    })
}

pub fn towers_to_json(towers: &Towers) -> String {
    let size = towers
        .lower
        .iter()
        .chain(&towers.upper)
        .next()
        .map_or(0, SetBits::ground_size);
    to_pretty(&TowersDoc {
        ground_size: size,
        lower: towers.lower.iter().map(SetBits::to_vec).collect(),
        upper: towers.upper.iter().map(SetBits::to_vec).collect(),
    })
}

#[derive(Debug, Serialize)]
struct GapDoc {
    ground_size: usize,
    interpolant: Vec<usize>,
    lower_exceptions: Vec<Vec<usize>>,
    upper_exceptions: Vec<Vec<usize>>,
}

pub fn gap_to_json(gap: &GapInterpolation) -> String {
    to_pretty(&GapDoc {
        ground_size: gap.interpolant.ground_size(),
        interpolant: gap.interpolant.to_vec(),
        lower_exceptions: gap.lower_exceptions.iter().map(SetBits::to_vec).collect(),
        upper_exceptions: gap.upper_exceptions.iter().map(SetBits::to_vec).collect(),
    })
}
