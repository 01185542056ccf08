//! Batch harness around tail attachment: sweep several attachment points
//! and tail lengths at once and aggregate the stabilization evidence.

use crate::error::{Error, Result};
use crate::graph::{Graph, RelativeSet};
use crate::invariants::{tail_invariance_report, TailInvarianceReport};

/// Configuration for a tail sweep. Tail edges always carry parity 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailSweepConfig {
    attachment_points: Vec<String>,
    max_length: usize,
}

impl TailSweepConfig {
    pub fn new<I, S>(attachment_points: I, max_length: usize) -> Result<TailSweepConfig>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if max_length < 1 {
            return Err(Error::ZeroTailLength);
        }
        let attachment_points: Vec<String> =
            attachment_points.into_iter().map(Into::into).collect();
        for (i, p) in attachment_points.iter().enumerate() {
            if attachment_points[..i].contains(p) {
                return Err(Error::DuplicateAttachmentPoint(p.clone()));
            }
        }
        Ok(TailSweepConfig {
            attachment_points,
            max_length,
        })
    }

    pub fn attachment_points(&self) -> &[String] {
        &self.attachment_points
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }
}

/// Per-point outcome: either the invariance report or the error that point
/// produced. A failing point does not stop the others from being swept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub per_point: Vec<(String, Result<TailInvarianceReport>)>,
}

impl SweepOutcome {
    /// Overall pass: every point produced a report with all groups constant
    /// across lengths and equal to the original problem's groups.
    pub fn pass(&self) -> bool {
        self.per_point
            .iter()
            .all(|(_, r)| matches!(r, Ok(report) if report.verified))
    }
}

/// Runs [`tail_invariance_report`] for every configured attachment point,
/// aggregating results in input order.
pub fn sweep(g: &Graph, v_set: &RelativeSet, cfg: &TailSweepConfig) -> SweepOutcome {
    let per_point = cfg
        .attachment_points
        .iter()
        .map(|at| {
            (
                at.clone(),
                tail_invariance_report(g, v_set, at, cfg.max_length),
            )
        })
        .collect();
    SweepOutcome { per_point }
}
