use reps::{RepScalar, Representation};

use crate::norms::EXACT_TOL;
use crate::{CheckResult, Verdict};

/// Interior residuals of every defining relation.
pub fn check_relations<T: RepScalar>(rep: &Representation<T>, triple_name: &str) -> CheckResult {
    let res = rep.relation_residuals();
    let mut out = CheckResult::new("relations", triple_name);
    out.truncations = vec![triples::cutoff_label(rep.basis.cutoff)];
    out.residuals = res.iter().map(|r| r.1.as_f64()).collect();
    out.tolerance = EXACT_TOL;
    out.verdict = Verdict::from_bool(out.residuals.iter().all(|r| *r < EXACT_TOL));
    out
}
