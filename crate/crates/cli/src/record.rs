use areal_core::MCEstimate;
use serde::Serialize;

/// Largest |z| accepted for a Monte Carlo comparison.
pub const Z_LIMIT: f64 = 4.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One closed-form value checked against an independent numeric one.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub case: String,
    pub theorem: String,
    pub closed: f64,
    pub numeric: f64,
    /// Standard error of a Monte Carlo estimate; absent for deterministic checks.
    pub stderr: Option<f64>,
    pub discrepancy: f64,
    pub z: Option<f64>,
    pub status: Status,
    pub ms: f64,
    /// Bound on the discrepancy when there is no z-score.
    #[serde(skip)]
    pub tolerance: f64,
}

impl VerificationRecord {
    pub fn from_estimate(case: &str, theorem: &str, closed: f64, est: &MCEstimate) -> Self {
        let z = est.z_score(closed);
        Self {
            case: case.into(),
            theorem: theorem.into(),
            closed,
            numeric: est.mean,
            stderr: Some(est.stderr),
            discrepancy: (est.mean - closed).abs(),
            z: Some(z),
            status: if z.abs() <= Z_LIMIT { Status::Pass } else { Status::Fail },
            ms: 0.0,
            tolerance: f64::NAN,
        }
    }

    pub fn from_value(case: &str, theorem: &str, closed: f64, numeric: f64, tolerance: f64) -> Self {
        let discrepancy = (numeric - closed).abs();
        Self {
            case: case.into(),
            theorem: theorem.into(),
            closed,
            numeric,
            stderr: None,
            discrepancy,
            z: None,
            // NaN compares false, so a failed computation fails the record
            status: if discrepancy <= tolerance { Status::Pass } else { Status::Fail },
            ms: 0.0,
            tolerance,
        }
    }

    /// A record whose numeric side could not be computed.
    pub fn failed(case: &str, theorem: &str, closed: f64) -> Self {
        Self::from_value(case, theorem, closed, f64::NAN, 0.0)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
