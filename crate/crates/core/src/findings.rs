//! Structured comparisons between printed closed forms and computed values.

use serde::Serialize;

/// A printed formula or claim that disagrees with the computation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub id: &'static str,
    /// Which printed display is contradicted.
    pub location: &'static str,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DisplayOutcome {
    Matched {
        samples: usize,
        max_deviation: f64,
    },
    Finding {
        detail: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        max_deviation: Option<f64>,
    },
}

/// Verdict for one printed display: either it agrees with the computation
/// or exactly one finding explains the disagreement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DisplayCheck {
    pub id: &'static str,
    pub location: &'static str,
    #[serde(flatten)]
    pub outcome: DisplayOutcome,
}

impl DisplayCheck {
    pub fn matched(
        id: &'static str,
        location: &'static str,
        samples: usize,
        max_deviation: f64,
    ) -> Self {
        DisplayCheck {
            id,
            location,
            outcome: DisplayOutcome::Matched {
                samples,
                max_deviation,
            },
        }
    }

    pub fn finding(
        id: &'static str,
        location: &'static str,
        detail: String,
        max_deviation: Option<f64>,
    ) -> Self {
        DisplayCheck {
            id,
            location,
            outcome: DisplayOutcome::Finding {
                detail,
                max_deviation,
            },
        }
    }

    /// Matched when `max_deviation ≤ tol`, otherwise a finding built by `detail`.
    pub fn compare(
        id: &'static str,
        location: &'static str,
        samples: usize,
        max_deviation: f64,
        tol: f64,
        detail: impl FnOnce(f64) -> String,
    ) -> Self {
        if max_deviation <= tol {
            Self::matched(id, location, samples, max_deviation)
        } else {
            Self::finding(id, location, detail(max_deviation), Some(max_deviation))
        }
    }

    pub fn is_matched(&self) -> bool {
        matches!(self.outcome, DisplayOutcome::Matched { .. })
    }

    pub fn as_finding(&self) -> Option<Finding> {
        match &self.outcome {
            DisplayOutcome::Finding {
                detail,
                max_deviation,
            } => Some(Finding {
                id: self.id,
                location: self.location,
                detail: detail.clone(),
                max_deviation: *max_deviation,
            }),
            DisplayOutcome::Matched { .. } => None,
        }
    }
}

/// Max-abs deviation over paired samples, treating any non-finite pair as infinite.
pub fn max_deviation<'a>(pairs: impl IntoIterator<Item = (&'a [f64], &'a [f64])>) -> f64 {
    pairs.into_iter().fold(0.0, |m, (a, b)| {
        a.iter().zip(b).fold(m, |m, (x, y)| {
            let d = (x - y).abs();
            if d.is_nan() {
                f64::INFINITY
            } else {
                m.max(d)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_picks_outcome() {
        let ok = DisplayCheck::compare("a", "loc", 3, 1e-12, 1e-9, |_| unreachable!());
        assert!(ok.is_matched());
        let bad = DisplayCheck::compare("a", "loc", 3, 0.5, 1e-9, |d| format!("off by {d}"));
        assert_eq!(bad.as_finding().unwrap().detail, "off by 0.5");
    }

    #[test]
    fn nan_counts_as_infinite() {
        let a = [1.0, f64::NAN];
        let b = [1.0, 2.0];
        assert_eq!(max_deviation([(&a[..], &b[..])]), f64::INFINITY);
    }

    #[test]
    fn serializes_flat() {
        let c = DisplayCheck::matched("ad", "printed adjoint matrix", 10, 0.0);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["outcome"], "matched");
        assert_eq!(v["samples"], 10);
        let f = DisplayCheck::finding("x", "loc", "bad".into(), None);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(
            text,
            r#"{"id":"x","location":"loc","outcome":"finding","detail":"bad"}"#
        );
    }
}
