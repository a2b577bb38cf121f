//! One line per acceptance criterion, tolerances pinned here. Criteria that
//! are known not to hold are listed in `KNOWN_DEVIATIONS`; the target fails
//! if the set of failing criteria differs from that list in either
//! direction.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use cli::{run, Command, RunManifest, Suite};
use ncalg::{check_projector, AlgebraId, AlgebraPreset, ExactCtx, NCPoly};
use qcore::{cs_pair, cs_pair_squared_exact, q_number, HalfInt};
use reps::Cutoff;
use triples::{abs_spectrum, solve_equivariant_dirac, spectrum, ActionFamilyTag, Constraint, SolverOptions, SpectralTriple, TripleKind};
use verify::{check_commutator_bounded, check_equivariance, check_relations, cocycle_suite, commutant_suite, commutator_norm, grading_suite, real_structure_suite, CheckResult, Verdict};
use zeta::{multiplicity_law, pole_set, summability_report, validate_law, AbsSpectrum};

const Q: f64 = 0.5;

const EXACT_TOL: f64 = 1e-12;
const COUPLING_FLOAT_TOL: f64 = 1e-13;
const COVARIANCE_TOL: f64 = 1e-10;
const CAUCHY_TOL: f64 = 0.01;
const GROWTH_TOL: f64 = 0.10;
const EXPONENT_TOL: f64 = 0.15;
const FLOOR: f64 = 1e-3;
const OVERLAP_TOL: f64 = 1e-10;
const TRACE_TARGET: f64 = 13.24;
const TRACE_TOL: f64 = 0.01;
const RELATIONS_BUDGET_S: f64 = 60.0;
const COCYCLE_BUDGET_S: f64 = 300.0;

/// Criteria that fail on this implementation, with the measured reason in
/// the decisions ledger. The fitted decay of the commutant and first-order
/// operators on the spinor and equatorial triples is about q^{2j} (and up to
/// q^{3.7j} for some equatorial pairs), not q^j.
const KNOWN_DEVIATIONS: &[u32] = &[6];

type Outcome = Result<(bool, String), String>;

fn spin(twice: i32) -> Cutoff {
    Cutoff::Spin(HalfInt::from_twice(twice))
}

fn worst(rs: &[CheckResult]) -> f64 {
    rs.iter().map(|r| r.worst()).fold(0.0, f64::max)
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn relations() -> Outcome {
    let t0 = Instant::now();
    let kinds = [
        TripleKind::Cp,
        TripleKind::dlssv_default(),
        TripleKind::Bk,
        TripleKind::ds_standard_default(),
        TripleKind::DlpsEquatorial,
        TripleKind::CpGeneric { c: 1.0 },
        TripleKind::CpShift,
    ];
    let mut w = 0.0f64;
    for k in kinds {
        let t = SpectralTriple::build_default(k, Q).map_err(e)?;
        w = w.max(check_relations(&t.rep, k.slug()).worst());
    }
    let su: AlgebraPreset<qcore::ExactLaurent> = AlgebraPreset::su_q2(ExactCtx::default());
    let pod = AlgebraPreset::new(AlgebraId::PodlesStandard, ExactCtx::default());
    let proj = check_projector(&su, &pod).map_err(e)?.all_zero();
    let secs = t0.elapsed().as_secs_f64();
    Ok((w < EXACT_TOL && proj && secs < RELATIONS_BUDGET_S, format!("worst relation {w:.2e} over 7 families; projector exact: {proj}; {secs:.1} s")))
}

fn coupling() -> Outcome {
    let mut exact = true;
    let mut w = 0.0f64;
    for tj in 1..=50 {
        let j = HalfInt::from_twice(tj);
        for mu in j.projections() {
            let (c, s, d) = cs_pair_squared_exact(j, mu).map_err(e)?;
            exact &= (c + s - d).is_zero();
            let p = cs_pair(j, mu, Q).map_err(e)?;
            w = w.max((p.c * p.c + p.s * p.s - 1.0).abs());
        }
    }
    Ok((exact && w < COUPLING_FLOAT_TOL, format!("symbolic exact: {exact}; floating worst {w:.2e}")))
}

fn spectra() -> Outcome {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b.abs().max(1.0);
    let ds = SpectralTriple::build(TripleKind::ds_standard_default(), spin(41), Q).map_err(e)?;
    let a = abs_spectrum(&ds.dirac);
    let ds_ok = a.len() == 21 && a.iter().enumerate().all(|(i, x)| close(x.eigenvalue, q_number((i + 1) as f64, Q)) && x.multiplicity == 4 * (i + 1));
    let eq = SpectralTriple::build(TripleKind::DlpsEquatorial, spin(41), Q).map_err(e)?;
    let a = abs_spectrum(&eq.dirac);
    let eq_ok = a.len() == 21 && a.iter().enumerate().all(|(i, x)| close(x.eigenvalue, (i + 1) as f64) && x.multiplicity == 4 * (i + 1));
    // up: 2j + 2 for j ≤ L - 1/2; down: -2j for 1/2 ≤ j ≤ L + 1/2
    let dl = SpectralTriple::build(TripleKind::dlssv_default(), spin(20), Q).map_err(e)?;
    let s = spectrum(&dl.dirac);
    let mut want: Vec<(f64, usize)> = Vec::new();
    for tj in 1..=21 {
        want.push((-(tj as f64), (tj * (tj + 1)) as usize));
    }
    for tj in 0..=19 {
        want.push((tj as f64 + 2.0, ((tj + 1) * (tj + 2)) as usize));
    }
    want.sort_by(|x, y| x.0.total_cmp(&y.0));
    // 2j + 2 and -2j never meet, but 2j+2 for different sectors can; merge
    let mut merged: Vec<(f64, usize)> = Vec::new();
    for (l, m) in want {
        match merged.last_mut() {
            Some(x) if x.0 == l => x.1 += m,
            _ => merged.push((l, m)),
        }
    }
    let dl_ok = s.len() == merged.len() && s.iter().zip(&merged).all(|(x, w)| close(x.eigenvalue, w.0) && x.multiplicity == w.1);
    Ok((ds_ok && eq_ok && dl_ok, format!("standard [k]_q x 4k: {ds_ok}; equatorial k x 4k: {eq_ok}; spinor (2j+1)(2j+2), 2j(2j+1): {dl_ok}")))
}

fn boundedness() -> Outcome {
    let alpha = NCPoly::generator(0);
    let n = |l: i32| -> Result<f64, String> { Ok(commutator_norm(&SpectralTriple::build(TripleKind::dlssv_default(), spin(2 * l), Q).map_err(e)?, &alpha)) };
    let norms: Vec<f64> = (8..=12).map(n).collect::<Result<_, _>>()?;
    let spread = norms.iter().map(|x| (x - norms[4]).abs() / norms[4]).fold(0.0, f64::max);
    let bk = check_commutator_bounded(TripleKind::Bk, &alpha, "alpha", &[spin(12), spin(14), spin(16), spin(18)], Q).map_err(e)?;
    let ratios: Vec<f64> = bk.residuals.windows(2).map(|w| w[1] / w[0]).collect();
    let growth_ok = ratios.iter().all(|r| (r * Q * Q - 1.0).abs() <= GROWTH_TOL);
    Ok((spread <= CAUCHY_TOL && growth_ok, format!("spinor norms L=8..12 spread {spread:.2e}; BK ratios {ratios:.5?} vs q^-2 = 4")))
}

fn structures() -> Outcome {
    let mut w = 0.0f64;
    let mut n = 0;
    for (k, c) in [(TripleKind::dlssv_default(), spin(16)), (TripleKind::ds_standard_default(), spin(17)), (TripleKind::DlpsEquatorial, spin(17))] {
        let t = SpectralTriple::build(k, c, Q).map_err(e)?;
        let mut rs = real_structure_suite(&t).map_err(e)?;
        if t.gamma.is_some() {
            rs.extend(grading_suite(&t).map_err(e)?);
        }
        n += rs.len();
        w = w.max(worst(&rs));
    }
    Ok((w < EXACT_TOL, format!("{n} identities, worst {w:.2e}")))
}

fn commutant() -> Outcome {
    let ds = SpectralTriple::build(TripleKind::ds_standard_default(), spin(21), Q).map_err(e)?;
    let dsr = commutant_suite(&ds).map_err(e)?;
    let ds_w = worst(&dsr);
    let mut lines = vec![format!("standard exact worst {ds_w:.2e}")];
    let mut ok = ds_w < EXACT_TOL;
    for (k, c) in [(TripleKind::dlssv_default(), spin(20)), (TripleKind::DlpsEquatorial, spin(21))] {
        let t = SpectralTriple::build(k, c, Q).map_err(e)?;
        let rs = commutant_suite(&t).map_err(e)?;
        let ratios: Vec<f64> = rs.iter().filter_map(|r| r.decay_exponent).map(|s| s / Q.ln()).collect();
        let within = ratios.iter().filter(|r| (*r - 1.0).abs() <= EXPONENT_TOL).count();
        let (lo, hi) = ratios.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |a, r| (a.0.min(*r), a.1.max(*r)));
        // the tail from level 2 is a lower bound for the unweighted norm
        let floor = rs.iter().filter_map(|r| r.residuals.first().copied()).fold(f64::INFINITY, f64::min);
        ok &= within == ratios.len() && ratios.len() == rs.len() && floor > FLOOR;
        lines.push(format!(
            "{}: slope/ln q in [{lo:.2}, {hi:.2}], {within}/{} within 15%, smallest norm {floor:.2e}, all in the ideal: {}",
            k.slug(),
            ratios.len(),
            lo >= 1.0 - EXPONENT_TOL
        ));
    }
    Ok((ok, lines.join("; ")))
}

fn equivariance() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, c) in [(TripleKind::dlssv_default(), spin(12)), (TripleKind::ds_standard_default(), spin(13)), (TripleKind::DlpsEquatorial, spin(13))] {
        let rs = check_equivariance(&SpectralTriple::build(k, c, Q).map_err(e)?).map_err(e)?;
        let claimed: Vec<&CheckResult> = rs.iter().filter(|r| !r.check_id.ends_with(".broken")).collect();
        let w = claimed.iter().map(|r| r.residuals[0]).fold(0.0, f64::max);
        ok &= rs.iter().all(|r| r.passed()) && w < COVARIANCE_TOL && !claimed.is_empty();
        parts.push(format!("{} {:.1e} ({} copies)", k.slug(), w, claimed.len()));
    }
    let cp = check_equivariance(&SpectralTriple::build(TripleKind::Cp, spin(12), Q).map_err(e)?).map_err(e)?;
    let right = cp.iter().any(|r| r.check_id == "equivariance.right" && r.passed());
    let left_broken = cp.iter().any(|r| r.check_id == "equivariance.left.broken" && r.passed());
    ok &= right && left_broken;
    parts.push(format!("cp right holds {right}, left fails {left_broken}"));
    Ok((ok, parts.join("; ")))
}

fn dirac_uniqueness() -> Outcome {
    let t = SpectralTriple::build(TripleKind::ds_standard_default(), spin(13), Q).map_err(e)?;
    let cons = [
        Constraint::Equivariance { family: ActionFamilyTag::PodlesStandard, right: false },
        Constraint::SelfAdjoint,
        Constraint::OddGrading,
        Constraint::RealStructure,
        Constraint::FirstOrder,
    ];
    let s = solve_equivariant_dirac(&t, &cons, SolverOptions::default()).map_err(e)?;
    Ok((s.dimension == 2 && s.overlap > 1.0 - OVERLAP_TOL, format!("dimension {}, overlap 1 - {:.1e}", s.dimension, 1.0 - s.overlap)))
}

fn summability() -> Outcome {
    let t = SpectralTriple::build(TripleKind::ds_standard_default(), spin(41), Q).map_err(e)?;
    let (rows, checks) = summability_report(&t, &[1.0]).map_err(e)?;
    let (lo, hi) = rows[0].trace_interval();
    let in_window = (lo - TRACE_TARGET).abs() <= TRACE_TOL && (hi - TRACE_TARGET).abs() <= TRACE_TOL;
    let bound16 = hi <= rows[0].corrected_bound && (rows[0].corrected_bound - 16.0).abs() < 1e-12;
    let flagged = checks.iter().any(|c| c.check_id.starts_with("summability.printed-bound") && c.verdict == Verdict::Flagged);
    let decreasing = checks.iter().any(|c| c.check_id.starts_with("summability.sigma-over-log") && c.passed());
    Ok((in_window && bound16 && flagged && decreasing, format!("trace in [{lo:.6}, {hi:.6}]; <= 16: {bound16}; 12 flagged: {flagged}; sigma_N/ln N decreasing: {decreasing}")))
}

fn poles() -> Outcome {
    let get = |k: TripleKind, c: Cutoff| -> Result<Vec<i64>, String> {
        let law = multiplicity_law(&k, c).map_err(e)?;
        validate_law(&law, &AbsSpectrum::of(&SpectralTriple::build(k, c, Q).map_err(e)?)).map_err(e)?;
        Ok(pole_set(&law).map_err(e)?.iter().map(|p| p.to_integer()).collect())
    };
    let cp = get(TripleKind::Cp, spin(16))?;
    let eq = get(TripleKind::DlpsEquatorial, spin(21))?;
    let dl = get(TripleKind::dlssv_default(), spin(16))?;
    let ok = cp == [1, 2, 3] && eq.last() == Some(&2) && dl.last() == Some(&3);
    Ok((ok, format!("cp {cp:?}; equatorial {eq:?}; spinor {dl:?}")))
}

fn cocycle() -> Outcome {
    let t0 = Instant::now();
    let rs = cocycle_suite(Q).map_err(e)?;
    let secs = t0.elapsed().as_secs_f64();
    let ok = rs.len() == 3 && rs.iter().all(|r| r.passed()) && secs < COCYCLE_BUDGET_S;
    let parts: Vec<String> = rs.iter().map(|r| format!("{} {:.1e}", r.check_id, r.worst())).collect();
    Ok((ok, format!("{}; {secs:.1} s", parts.join(", "))))
}

fn reproducibility() -> Outcome {
    let mut m = RunManifest::new(Command::Check, TripleKind::ds_standard_default());
    m.suites = vec![Suite::Axioms, Suite::Equivariance, Suite::Cocycle, Suite::Summability];
    m.truncations = vec![spin(13), spin(17)];
    let dirs = [tempfile::tempdir().map_err(e)?, tempfile::tempdir().map_err(e)?];
    let mut files = Vec::new();
    for d in &dirs {
        let r = run(&m, Some(d.path())).map_err(e)?;
        let mut names = r.artifacts.clone();
        names.push("report.json".into());
        let bytes: Vec<Vec<u8>> = names.iter().map(|n| std::fs::read(d.path().join(n))).collect::<Result<_, _>>().map_err(e)?;
        files.push(bytes);
    }
    let mut m2 = RunManifest::new(Command::Zeta, TripleKind::Cp);
    m2.truncations = vec![spin(12)];
    let a = run(&m2, None).map_err(e)?.to_json().map_err(e)?;
    let b = run(&m2, None).map_err(e)?.to_json().map_err(e)?;
    let ok = files[0] == files[1] && a == b;
    Ok((ok, format!("{} files byte-identical across two runs, zeta report identical: {}", files[0].len(), a == b)))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 12] = [
        (1, "algebra relations and projector", relations),
        (2, "coupling identity", coupling),
        (3, "spectra", spectra),
        (4, "boundedness dichotomy", boundedness),
        (5, "real structure and grading", structures),
        (6, "commutant and first order", commutant),
        (7, "equivariance", equivariance),
        (8, "Dirac uniqueness", dirac_uniqueness),
        (9, "summability", summability),
        (10, "dimension spectrum", poles),
        (11, "Haar state and cocycle", cocycle),
        (12, "reproducibility", reproducibility),
    ];
    let mut failed = BTreeSet::new();
    for (id, name, f) in criteria {
        let t0 = Instant::now();
        let (ok, detail) = match f() {
            Ok(x) => x,
            Err(err) => (false, format!("error: {err}")),
        };
        if !ok {
            failed.insert(id);
        }
        let tag = match (ok, KNOWN_DEVIATIONS.contains(&id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("[{tag}] {id:>2} {name}: {detail} [{:.1} s]", t0.elapsed().as_secs_f64());
    }
    let known: BTreeSet<u32> = KNOWN_DEVIATIONS.iter().copied().collect();
    if failed == known {
        println!("acceptance: {} of 12 pass; failures match the known deviations {known:?}", 12 - failed.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing {failed:?}, expected {known:?}");
        ExitCode::FAILURE
    }
}
