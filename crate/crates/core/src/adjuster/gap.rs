use crate::chain_core::SetBits;
use crate::error::{Error, Result};

/// Interpolant of a pair of towers together with its recorded exceptions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapInterpolation {
    pub interpolant: SetBits,
    /// `E_n = ⋃_{m≤n} (U_n ∖ V_m)`; `U_n ∖ W ⊆ E_n`.
    pub lower_exceptions: Vec<SetBits>,
    /// `F_m = ⋃_{n<m} (U_n ∖ V_m)`; `W ∖ V_m ⊆ F_m`.
    pub upper_exceptions: Vec<SetBits>,
}

/// `W = ⋃_n (U_n ∖ ⋃_{m≤n} (U_n ∖ V_m))`.
///
/// Requires `|U_n ∖ V_m| ≤ defect_budget` for every pair. On success every
/// `U_n` lies in `W` up to `E_n` and `W` lies in every `V_m` up to `F_m`.
pub fn interpolate_gap(
    lower: &[SetBits],
    upper: &[SetBits],
    defect_budget: usize,
) -> Result<GapInterpolation> {
    let reference = lower.first().or(upper.first()).ok_or(Error::EmptyTowers)?;
    for set in lower.iter().chain(upper) {
        reference.ensure_same_ground(set)?;
    }
    let ground = reference.ground();
    for (n, u) in lower.iter().enumerate() {
        for (m, v) in upper.iter().enumerate() {
            let size = u.difference(v).len();
            if size > defect_budget {
                return Err(Error::GapPrecondition {
                    lower: n,
                    upper: m,
                    size,
                    budget: defect_budget,
                });
            }
        }
    }

    let mut interpolant = SetBits::empty(ground);
    let mut lower_exceptions = Vec::with_capacity(lower.len());
    for (n, u) in lower.iter().enumerate() {
        let mut exc = SetBits::empty(ground);
        for v in upper.iter().take(n + 1) {
            exc.union_with(&u.difference(v));
        }
        interpolant.union_with(&u.difference(&exc));
        lower_exceptions.push(exc);
    }
    let upper_exceptions = upper
        .iter()
        .enumerate()
        .map(|(m, v)| {
            let mut exc = SetBits::empty(ground);
            for u in lower.iter().take(m) {
                exc.union_with(&u.difference(v));
            }
            exc
        })
        .collect();
    Ok(GapInterpolation {
        interpolant,
        lower_exceptions,
        upper_exceptions,
    })
}

impl GapInterpolation {
    /// Both exception inclusions, checked literally.
    pub fn holds_for(&self, lower: &[SetBits], upper: &[SetBits]) -> bool {
        let w = &self.interpolant;
        lower
            .iter()
            .zip(&self.lower_exceptions)
            .all(|(u, e)| u.difference(w).is_subset(e))
            && upper
                .iter()
                .zip(&self.upper_exceptions)
                .all(|(v, f)| w.difference(v).is_subset(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain_core::GroundSet;

    fn s(n: usize, xs: &[usize]) -> SetBits {
        SetBits::from_elements(GroundSet::new(n).unwrap(), xs.iter().copied()).unwrap()
    }

    #[test]
    fn nested_segments_interpolate_exactly() {
        let n = 10;
        let lower: Vec<_> = (1..4).map(|k| s(n, &(0..k).collect::<Vec<_>>())).collect();
        let upper: Vec<_> = (6..9)
            .rev()
            .map(|k| s(n, &(0..k).collect::<Vec<_>>()))
            .collect();
        let gap = interpolate_gap(&lower, &upper, 0).unwrap();
        for u in &lower {
            assert!(u.is_subset(&gap.interpolant));
        }
        for v in &upper {
            assert!(gap.interpolant.is_subset(v));
        }
        assert!(gap.lower_exceptions.iter().all(SetBits::is_empty));
    }

    #[test]
    fn single_pair_with_defect() {
        let lower = [s(2, &[0, 1])];
        let upper = [s(2, &[1])];
        let gap = interpolate_gap(&lower, &upper, 1).unwrap();
        assert_eq!(gap.interpolant.to_vec(), vec![1]);
        assert_eq!(gap.lower_exceptions[0].to_vec(), vec![0]);
        assert!(gap.holds_for(&lower, &upper));
    }

    #[test]
    fn precondition_reports_pair() {
        let lower = [s(4, &[]), s(4, &[0, 1, 2])];
        let upper = [s(4, &[3]), s(4, &[0])];
        assert_eq!(
            interpolate_gap(&lower, &upper, 1),
            Err(Error::GapPrecondition {
                lower: 1,
                upper: 0,
                size: 3,
                budget: 1
            })
        );
    }

    #[test]
    fn degenerate_towers() {
        assert_eq!(interpolate_gap(&[], &[], 0), Err(Error::EmptyTowers));
        let only_upper = interpolate_gap(&[], &[s(3, &[1])], 0).unwrap();
        assert!(only_upper.interpolant.is_empty());
        let only_lower = interpolate_gap(&[s(3, &[1]), s(3, &[2])], &[], 0).unwrap();
        assert_eq!(only_lower.interpolant.to_vec(), vec![1, 2]);
        assert!(matches!(
            interpolate_gap(&[s(3, &[])], &[s(4, &[])], 0),
            Err(Error::GroundMismatch { .. })
        ));
    }
}
