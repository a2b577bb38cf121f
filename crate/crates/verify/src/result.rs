use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A reported discrepancy that does not fail a run.
    Flagged,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One check on one triple, possibly over several truncations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub triple: String,
    pub truncations: Vec<String>,
    pub residuals: Vec<f64>,
    pub decay_exponent: Option<f64>,
    pub verdict: Verdict,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn new(check_id: impl Into<String>, triple: impl Into<String>) -> Self {
        CheckResult {
            check_id: check_id.into(),
            triple: triple.into(),
            truncations: Vec::new(),
            residuals: Vec::new(),
            decay_exponent: None,
            verdict: Verdict::Pass,
            tolerance: 0.0,
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Worst residual, 0 when there are none.
    pub fn worst(&self) -> f64 {
        self.residuals.iter().cloned().fold(0.0, f64::max)
    }
}
