use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use ncalg::{parse_poly, NCPoly};
use reps::Cutoff;
use triples::{cutoff_label, solve_equivariant_dirac, spectrum, ActionFamilyTag, Constraint, SolverOptions, SpectralTriple, SpectrumEntry, TripleKind};
use verify::{
    check_commutator_bounded, check_dh_formula, check_equivariance, check_relations, cocycle_suite, commutant_suite, expectation, grading_suite,
    real_structure_suite, CheckResult, Verdict,
};
use zeta::{multiplicity_law, pole_set, summability_report, validate_law, write_spectrum_csv, write_summability_csv, write_zeta_csv, zeta_grid, AbsSpectrum, MultiplicityLaw};

use crate::manifest::{Command, Format, RunManifest, Suite};
use crate::{to_json, CliError};

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub manifest: RunManifest,
    pub results: Vec<CheckResult>,
    /// File names inside the output directory.
    pub artifacts: Vec<String>,
    pub version: String,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.results.iter().any(|r| r.verdict == Verdict::Fail)
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(to_json(self)?)
    }
}

/// Artifacts are produced in memory and written after assembly, so that a
/// run's outputs do not depend on the order jobs finish in.
struct Artifact {
    name: String,
    bytes: Vec<u8>,
}

type JobOutput = (Vec<CheckResult>, Vec<Artifact>);

fn build(m: &RunManifest, c: Cutoff) -> Result<SpectralTriple<f64>, CliError> {
    Ok(SpectralTriple::build(m.triple, c, m.q)?)
}

fn stem(m: &RunManifest, c: Cutoff) -> String {
    let t = match c {
        Cutoff::Spin(l) => format!("L{}", l.to_f64()),
        Cutoff::Shift { ni, nj } => format!("N{ni}x{nj}"),
        Cutoff::Count(n) => format!("N{n}"),
    };
    format!("{}_{t}", m.triple.slug())
}

/// A truncation just large enough to carry the algebra preset.
fn small_cutoff(kind: &TripleKind) -> Cutoff {
    match kind {
        TripleKind::CpShift => Cutoff::Shift { ni: 1, nj: 1 },
        TripleKind::CpGeneric { .. } => Cutoff::Count(1),
        _ => Cutoff::Spin(qcore::HalfInt::HALF),
    }
}

fn generators(kind: &TripleKind, q: f64) -> Result<Vec<(String, NCPoly<f64>)>, CliError> {
    let t = SpectralTriple::build(*kind, small_cutoff(kind), q)?;
    let alg = t.rep.preset();
    Ok((0..alg.num_generators() as u8).map(|g| (alg.word_to_string(&[g]), NCPoly::generator(g))).collect())
}

fn axioms(m: &RunManifest, c: Cutoff, with_relations: bool) -> Result<Vec<CheckResult>, CliError> {
    let t = build(m, c)?;
    let mut out = Vec::new();
    if with_relations {
        out.push(check_relations(&t.rep, t.kind.slug()));
    }
    if t.gamma.is_some() {
        out.extend(grading_suite(&t)?);
    }
    if t.real.is_some() {
        out.extend(real_structure_suite(&t)?);
    }
    if t.kind.has_real_structure() && expectation(&t.kind).is_some() {
        out.extend(commutant_suite(&t)?);
    }
    Ok(out)
}

fn boundedness(m: &RunManifest, cutoffs: &[Cutoff]) -> Result<Vec<CheckResult>, CliError> {
    let mut elems = generators(&m.triple, m.q)?;
    if !m.elements.is_empty() {
        let t = SpectralTriple::build(m.triple, small_cutoff(&m.triple), m.q)?;
        let alg = t.rep.preset();
        for e in &m.elements {
            elems.push((e.clone(), parse_poly(&alg, e)?));
        }
    }
    let mut out: Vec<CheckResult> = elems
        .par_iter()
        .map(|(label, x)| check_commutator_bounded(m.triple, x, label, cutoffs, m.q).map_err(CliError::from))
        .collect::<Result<_, _>>()?;
    if matches!(m.triple, TripleKind::DsStandard { z_re, z_im } if z_re == 1.0 && z_im == 0.0) {
        out.push(check_dh_formula(&build(m, *cutoffs.last().expect("nonempty"))?)?);
    }
    if m.triple == TripleKind::GoswamiAbs {
        let last = out.len() - 1;
        let note = out[last].note.take().unwrap_or_default();
        out[last].note = Some(format!("{note}; sign(|D|) is the identity, so the index pairing is trivial"));
    }
    Ok(out)
}

fn summability(m: &RunManifest, c: Cutoff) -> Result<JobOutput, CliError> {
    let t = build(m, c)?;
    let (rows, checks) = summability_report(&t, &m.epsilons)?;
    let name = format!("summability_{}.{}", stem(m, c), ext(m.format));
    let bytes = match m.format {
        Format::Csv => {
            let mut b = Vec::new();
            write_summability_csv(&mut b, &rows)?;
            b
        }
        Format::Json => to_json(&rows)?.into_bytes(),
    };
    Ok((checks, vec![Artifact { name, bytes }]))
}

fn ext(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
    }
}

fn check_jobs(m: &RunManifest) -> Result<Vec<JobOutput>, CliError> {
    let suites = if m.suites.is_empty() { vec![Suite::Axioms] } else { m.suites.clone() };
    // one job per (suite, truncation); boundedness and cocycle are one job each
    let mut jobs: Vec<(Suite, Vec<Cutoff>)> = Vec::new();
    for s in suites {
        let cs = m.cutoffs_for(Some(s));
        match s {
            Suite::Boundedness | Suite::Cocycle => jobs.push((s, cs)),
            _ => jobs.extend(cs.into_iter().map(|c| (s, vec![c]))),
        }
    }
    jobs.par_iter()
        .map(|(s, cs)| -> Result<JobOutput, CliError> {
            let none = |v: Vec<CheckResult>| (v, Vec::new());
            Ok(match s {
                Suite::Axioms => none(axioms(m, cs[0], true)?),
                Suite::Commutant => none(commutant_suite(&build(m, cs[0])?)?),
                Suite::Relations => {
                    let t = build(m, cs[0])?;
                    none(vec![check_relations(&t.rep, t.kind.slug())])
                }
                Suite::Equivariance => none(check_equivariance(&build(m, cs[0])?)?),
                Suite::Boundedness => {
                    if cs.len() < 2 {
                        return Err(CliError::Input("the boundedness suite needs at least two truncations".into()));
                    }
                    none(boundedness(m, cs)?)
                }
                Suite::Cocycle => {
                    if !matches!(m.triple, TripleKind::DsStandard { .. }) {
                        return Err(CliError::Input("the cocycle suite is defined for ds-standard only".into()));
                    }
                    none(cocycle_suite(m.q)?)
                }
                Suite::Summability => summability(m, cs[0])?,
            })
        })
        .collect()
}

fn spectrum_jobs(m: &RunManifest) -> Result<Vec<JobOutput>, CliError> {
    m.cutoffs_for(None)
        .par_iter()
        .map(|&c| -> Result<JobOutput, CliError> {
            let t = build(m, c)?;
            let entries = spectrum(&t.dirac);
            let abs = AbsSpectrum::from_entries(&entries);
            let mut check = CheckResult::new("spectrum.multiplicity-law", t.kind.slug());
            check.truncations = vec![cutoff_label(c)];
            check.residuals = vec![entries.len() as f64, abs.kernel_dim as f64];
            match multiplicity_law(&t.kind, c) {
                Ok(law @ MultiplicityLaw::Polynomial(_)) => {
                    if let Err(e) = validate_law(&law, &abs) {
                        check.verdict = Verdict::Fail;
                        check.note = Some(e.to_string());
                    } else {
                        check.note = Some("multiplicities match the closed formula exactly".into());
                    }
                }
                _ => {
                    let levels = zeta::summability_report(&t, &[1.0]).map(|_| ());
                    check.note = Some(match levels {
                        Ok(()) => "levels [k]_q with multiplicity 4k".into(),
                        Err(_) => "no closed multiplicity formula checked".into(),
                    });
                }
            }
            let name = format!("spectrum_{}.{}", stem(m, c), ext(m.format));
            Ok((vec![check], vec![Artifact { name, bytes: entries_bytes(m.format, &entries)? }]))
        })
        .collect()
}

fn entries_bytes(f: Format, entries: &[SpectrumEntry]) -> Result<Vec<u8>, CliError> {
    Ok(match f {
        Format::Csv => {
            let mut b = Vec::new();
            write_spectrum_csv(&mut b, entries)?;
            b
        }
        Format::Json => to_json(&entries)?.into_bytes(),
    })
}

fn zeta_jobs(m: &RunManifest) -> Result<Vec<JobOutput>, CliError> {
    m.cutoffs_for(None)
        .par_iter()
        .map(|&c| -> Result<JobOutput, CliError> {
            let t = build(m, c)?;
            let abs = AbsSpectrum::of(&t);
            let mut checks = Vec::new();
            let mut arts = Vec::new();
            match multiplicity_law(&t.kind, c) {
                Ok(law @ MultiplicityLaw::Polynomial(_)) => {
                    let mut r = CheckResult::new("zeta.pole-set", t.kind.slug());
                    r.truncations = vec![cutoff_label(c)];
                    match validate_law(&law, &abs).and_then(|_| pole_set(&law)) {
                        Ok(poles) => {
                            r.residuals = poles.iter().map(|p| *p.numer() as f64 / *p.denom() as f64).collect();
                            let s: Vec<String> = poles.iter().map(|p| p.to_string()).collect();
                            r.note = Some(format!("poles {{{}}}, kernel dimension {}", s.join(", "), abs.kernel_dim));
                        }
                        Err(e) => {
                            r.verdict = Verdict::Fail;
                            r.note = Some(e.to_string());
                        }
                    }
                    checks.push(r);
                }
                Ok(MultiplicityLaw::Exponential { .. }) if matches!(t.kind, TripleKind::DsStandard { .. }) => {
                    let (c2, a) = summability(m, c)?;
                    checks.extend(c2);
                    arts.extend(a);
                }
                _ => {}
            }
            let grid = zeta_grid(&abs, &m.grid_re, &m.grid_im);
            let bytes = match m.format {
                Format::Csv => {
                    let mut b = Vec::new();
                    write_zeta_csv(&mut b, &grid)?;
                    b
                }
                Format::Json => to_json(&grid.iter().map(|(z, v)| [z.re, z.im, v.re, v.im]).collect::<Vec<_>>())?.into_bytes(),
            };
            arts.push(Artifact { name: format!("zeta_{}.{}", stem(m, c), ext(m.format)), bytes });
            Ok((checks, arts))
        })
        .collect()
}

fn constraints(kind: &TripleKind) -> Result<Vec<Constraint>, CliError> {
    use Constraint::*;
    Ok(match kind {
        TripleKind::DsStandard { .. } => vec![
            Equivariance { family: ActionFamilyTag::PodlesStandard, right: false },
            SelfAdjoint,
            OddGrading,
            RealStructure,
            FirstOrder,
        ],
        TripleKind::DlpsEquatorial => vec![
            Equivariance { family: ActionFamilyTag::PodlesEquatorial, right: false },
            SelfAdjoint,
            OddGrading,
            RealStructure,
            FirstOrderModG,
        ],
        TripleKind::Dlssv { .. } => vec![
            Equivariance { family: ActionFamilyTag::Spinor, right: false },
            Equivariance { family: ActionFamilyTag::Spinor, right: true },
            SelfAdjoint,
            RealStructure,
        ],
        TripleKind::Cp => vec![Equivariance { family: ActionFamilyTag::L2, right: true }, SelfAdjoint],
        k => return Err(CliError::Input(format!("dirac-solve is not set up for {}", k.slug()))),
    })
}

/// SHA-256 of the union of the supports of the basis operators. It does not
/// depend on which orthonormal basis of the solution space was returned.
fn support_digest(basis: &[reps::OperatorMatrix<f64>]) -> String {
    let mut cells: Vec<(usize, usize)> = basis.iter().flat_map(|b| b.entries().filter(|e| e.2.norm() > 1e-9).map(|e| (e.0, e.1)).collect::<Vec<_>>()).collect();
    cells.sort_unstable();
    cells.dedup();
    let mut h = Sha256::new();
    for (r, c) in cells {
        h.update(format!("{r},{c};").as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn dirac_jobs(m: &RunManifest) -> Result<Vec<JobOutput>, CliError> {
    let cons = constraints(&m.triple)?;
    m.cutoffs_for(None)
        .iter()
        .map(|&c| -> Result<JobOutput, CliError> {
            let t = build(m, c)?;
            let s = solve_equivariant_dirac(&t, &cons, SolverOptions::default())?;
            let mut r = CheckResult::new("dirac-solve.dimension", t.kind.slug());
            r.truncations = vec![cutoff_label(c)];
            r.residuals = vec![s.dimension as f64, s.nullity as f64, s.unknowns as f64, s.gap.0, s.gap.1, s.overlap];
            // the weighted stage keeps D only approximately
            r.tolerance = if cons.contains(&Constraint::FirstOrderModG) { 1e-2 } else { 1e-10 };
            r.verdict = Verdict::from_bool(s.overlap > 1.0 - r.tolerance);
            r.note = Some(format!(
                "real dimension {} (interior), nullity {}, {} unknowns, support digest {}",
                s.dimension,
                s.nullity,
                s.unknowns,
                support_digest(&s.basis)
            ));
            Ok((vec![r], Vec::new()))
        })
        .collect()
}

/// Runs a manifest. Jobs run in parallel; the report is assembled in job
/// order. With `out`, artifacts and `report.json` are written there.
pub fn run(m: &RunManifest, out: Option<&Path>) -> Result<Report, CliError> {
    if !(m.q > 0.0 && m.q < 1.0) {
        return Err(CliError::Input(format!("q = {} is outside (0, 1)", m.q)));
    }
    let jobs = match m.command {
        Command::Check => check_jobs(m)?,
        Command::Spectrum => spectrum_jobs(m)?,
        Command::Zeta => zeta_jobs(m)?,
        Command::DiracSolve => dirac_jobs(m)?,
    };
    let mut results = Vec::new();
    let mut arts = Vec::new();
    for (r, a) in jobs {
        results.extend(r);
        arts.extend(a);
    }
    let report = Report { manifest: m.clone(), results, artifacts: arts.iter().map(|a| a.name.clone()).collect(), version: env!("CARGO_PKG_VERSION").to_string() };
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        for a in &arts {
            fs::write(dir.join(&a.name), &a.bytes)?;
        }
        fs::write(dir.join("report.json"), report.to_json()?)?;
    }
    Ok(report)
}
