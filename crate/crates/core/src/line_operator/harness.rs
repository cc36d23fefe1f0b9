use std::cmp::Ordering;

use num_rational::BigRational;

use crate::chain_core::{ChainFamily, IndexValue};
use crate::error::{Error, Result};
use crate::line_operator::{
    apply_operator, compute_triples, limit_eval_point, FunctionOnLine, LineModel, Triple,
};

/// One step `(n_k, stage)` of a convergence schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScheduleStep {
    pub n: usize,
    pub stage: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessRow {
    pub stage: usize,
    pub n: usize,
    pub triple: Triple,
    pub value: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessReport {
    pub trajectory: Vec<HarnessRow>,
    pub limit_point: IndexValue,
    /// `Ef(n_k)` at the last stage.
    pub final_value: BigRational,
    /// `f(z)` at the limit point.
    pub limit_value: BigRational,
}

impl HarnessReport {
    pub fn agrees(&self) -> bool {
        self.final_value == self.limit_value
    }
}

/// Direction a coordinate has taken so far.
fn track(dir: &mut Option<Ordering>, prev: &IndexValue, next: &IndexValue) -> bool {
    match (prev.cmp(next), *dir) {
        (Ordering::Equal, _) => true,
        (step, None) => {
            *dir = Some(step);
            true
        }
        (step, Some(d)) => step == d,
    }
}

/// Runs `f` through `Ef` along a schedule of ground elements whose triples
/// move monotonically, and compares the last value with `f` at the limit.
///
/// The schedule is a finite stand-in for a convergent sequence `n_k → z`: its
/// last triple is taken as the limit.
pub fn continuity_harness(
    family: &ChainFamily,
    model: &LineModel,
    schedule: &[ScheduleStep],
    f: &FunctionOnLine,
) -> Result<HarnessReport> {
    if schedule.is_empty() {
        return Err(Error::EmptySchedule);
    }
    if let Some(w) = schedule.windows(2).find(|w| w[0].stage >= w[1].stage) {
        return Err(Error::NonMonotoneSchedule(format!(
            "stage {} is followed by stage {}",
            w[0].stage, w[1].stage
        )));
    }
    for step in schedule {
        family.ground().check_element(step.n)?;
    }
    let table = compute_triples(family, model)?;
    let values = apply_operator(f, &table)?.on_omega;

    let mut dirs = [None, None, None];
    for w in schedule.windows(2) {
        let (a, b) = (&table.triples()[w[0].n], &table.triples()[w[1].n]);
        let ok = track(&mut dirs[0], &a.x0, &b.x0)
            && track(&mut dirs[1], &a.x1, &b.x1)
            && track(&mut dirs[2], &a.x2, &b.x2);
        if !ok {
            return Err(Error::NonMonotoneSchedule(format!(
                "triple of n={} reverses direction after n={}",
                w[1].n, w[0].n
            )));
        }
    }

    let trajectory: Vec<HarnessRow> = schedule
        .iter()
        .map(|s| HarnessRow {
            stage: s.stage,
            n: s.n,
            triple: table.triples()[s.n].clone(),
            value: values[s.n].clone(),
        })
        .collect();
    let last = &trajectory.last().expect("nonempty schedule").triple;
    let limit_point = limit_eval_point(&last.x0, &last.x1, &last.x2)?;
    let limit_value = f.eval(&limit_point)?.clone();
    let final_value = trajectory.last().expect("nonempty schedule").value.clone();
    Ok(HarnessReport {
        trajectory,
        limit_point,
        final_value,
        limit_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain_core::{GroundSet, SetBits};

    fn q(p: i64, d: i64) -> IndexValue {
        IndexValue::ratio(p, d)
    }

    fn r(p: i64) -> BigRational {
        BigRational::from_integer(p.into())
    }

    /// Rows are traces per ground element over indices 1/5 … 4/5.
    fn family(rows: &[&str]) -> ChainFamily {
        let g = GroundSet::new(rows.len()).unwrap();
        let ys: Vec<IndexValue> = (1..=4).map(|i| q(i, 5)).collect();
        let entries = ys.iter().enumerate().map(|(j, y)| {
            let members = rows
                .iter()
                .enumerate()
                .filter(|(_, row)| row.as_bytes()[j] == b'1')
                .map(|(n, _)| n);
            (y.clone(), SetBits::from_elements(g, members).unwrap())
        });
        ChainFamily::new(g, entries).unwrap()
    }

    fn steps(ns: &[usize]) -> Vec<ScheduleStep> {
        ns.iter()
            .enumerate()
            .map(|(stage, &n)| ScheduleStep { n, stage })
            .collect()
    }

    #[test]
    fn collapsed_schedule() {
        let fam = family(&["0000", "0000"]);
        let model = LineModel::with_top(&fam, q(1, 1)).unwrap();
        let f = FunctionOnLine::from_fn(&model, |x| x.as_rational().clone());
        let report = continuity_harness(&fam, &model, &steps(&[0, 1]), &f).unwrap();
        assert_eq!(report.limit_point, q(1, 1));
        assert!(report.trajectory.iter().all(|row| row.value == r(1)));
        assert!(report.agrees());
    }

    #[test]
    fn lower_split_converges_to_x0() {
        // x0 descends 3/5, 2/5, 1/5; x1 = x2 = 1
        let fam = family(&["0011", "0111", "1111"]);
        let model = LineModel::with_top(&fam, q(1, 1)).unwrap();
        let f = FunctionOnLine::from_fn(&model, |x| x.as_rational() * x.as_rational());
        let report = continuity_harness(&fam, &model, &steps(&[0, 1, 2]), &f).unwrap();
        assert_eq!(report.limit_point, q(1, 5));
        assert_eq!(report.final_value, report.limit_value);
    }

    #[test]
    fn strict_final_triple_is_inconsistent() {
        let fam = family(&["1001", "1101"]);
        let model = LineModel::from_family(&fam).unwrap();
        let f = FunctionOnLine::from_fn(&model, |x| x.as_rational() * r(10));
        // n=0: (1/5, 2/5, 4/5), strict; n=1: (1/5, 3/5, 4/5), strict
        let err = continuity_harness(&fam, &model, &steps(&[0, 1]), &f).unwrap_err();
        assert!(matches!(err, Error::InconsistentTriple { .. }));

        let fam = family(&["0001", "1001"]);
        let model = LineModel::from_family(&fam).unwrap();
        let f = FunctionOnLine::from_fn(&model, |x| x.as_rational() * r(10));
        let report = continuity_harness(&fam, &model, &steps(&[0]), &f).unwrap();
        // n=0: x0 = 4/5 = max K, so all three coincide
        assert_eq!(report.limit_point, q(4, 5));
        assert_eq!(report.limit_value, r(8));
        assert!(report.agrees());
    }

    #[test]
    fn schedule_errors() {
        let fam = family(&["0011", "0111", "1111"]);
        let model = LineModel::with_top(&fam, q(1, 1)).unwrap();
        let f = FunctionOnLine::constant(&model, r(0));
        assert_eq!(
            continuity_harness(&fam, &model, &[], &f),
            Err(Error::EmptySchedule)
        );
        assert!(matches!(
            continuity_harness(&fam, &model, &steps(&[0, 2, 1]), &f),
            Err(Error::NonMonotoneSchedule(_))
        ));
        let backwards = [
            ScheduleStep { n: 0, stage: 2 },
            ScheduleStep { n: 1, stage: 1 },
        ];
        assert!(matches!(
            continuity_harness(&fam, &model, &backwards, &f),
            Err(Error::NonMonotoneSchedule(_))
        ));
        assert!(matches!(
            continuity_harness(&fam, &model, &steps(&[7]), &f),
            Err(Error::ElementOutOfRange { .. })
        ));
    }
}
