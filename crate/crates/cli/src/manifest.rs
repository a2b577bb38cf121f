use serde::{Serialize, Serializer};

use qcore::HalfInt;
use reps::Cutoff;
use triples::{cutoff_label, TripleKind};
use verify::norms::{COMPOSITE_TOL, EXACT_TOL, EXPONENT_TOL};
use verify::{CAUCHY_TOL, GROWTH_TOL};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Check,
    Spectrum,
    Zeta,
    DiracSolve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Relations, grading, real structure, commutant and first order.
    Axioms,
    Equivariance,
    Boundedness,
    Commutant,
    Cocycle,
    Relations,
    Summability,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub exact: f64,
    pub composite: f64,
    pub exponent: f64,
    pub cauchy: f64,
    pub growth: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { exact: EXACT_TOL, composite: COMPOSITE_TOL, exponent: EXPONENT_TOL, cauchy: CAUCHY_TOL, growth: GROWTH_TOL }
    }
}

fn labels<S: Serializer>(c: &[Cutoff], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(|c| cutoff_label(*c)))
}

/// Everything that determines a run's numbers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub command: Command,
    pub triple: TripleKind,
    pub q: f64,
    #[serde(serialize_with = "labels")]
    pub truncations: Vec<Cutoff>,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub format: Format,
    /// Exponents of `|D|^{-ε}` for summability.
    pub epsilons: Vec<f64>,
    /// Real and imaginary parts of the zeta grid.
    pub grid_re: Vec<f64>,
    pub grid_im: Vec<f64>,
    /// Extra algebra elements for the boundedness suite, as typed.
    pub elements: Vec<String>,
    pub tolerances: Tolerances,
}

impl RunManifest {
    pub fn new(command: Command, triple: TripleKind) -> Self {
        RunManifest {
            command,
            triple,
            q: 0.5,
            truncations: Vec::new(),
            suites: Vec::new(),
            seed: 0,
            format: Format::Json,
            epsilons: vec![1.0],
            grid_re: (0..=12).map(|i| 1.0 + 0.25 * i as f64).collect(),
            grid_im: (-4..=4).map(|i| 0.5 * i as f64).collect(),
            elements: Vec::new(),
            tolerances: Tolerances::default(),
        }
    }

    /// Fills in the truncations a suite uses when none were given.
    pub fn cutoffs_for(&self, suite: Option<Suite>) -> Vec<Cutoff> {
        if !self.truncations.is_empty() {
            return self.truncations.clone();
        }
        default_cutoffs(&self.triple, suite, self.command)
    }
}

fn spin(twice: &[i32]) -> Vec<Cutoff> {
    twice.iter().map(|&t| Cutoff::Spin(HalfInt::from_twice(t))).collect()
}

pub fn default_cutoffs(kind: &TripleKind, suite: Option<Suite>, command: Command) -> Vec<Cutoff> {
    use TripleKind::*;
    match (command, suite) {
        (Command::Check, Some(Suite::Boundedness)) => match kind {
            Bk => spin(&[12, 14, 16, 18]),
            GoswamiAbs | Cp | Dlssv { .. } => spin(&[16, 20, 24]),
            DsStandard { .. } | DlpsEquatorial => spin(&[17, 21, 25]),
            CpShift => [10, 20, 30].iter().map(|&n| Cutoff::Shift { ni: n, nj: n }).collect(),
            CpGeneric { .. } => [10, 20, 30].iter().map(|&n| Cutoff::Count(n)).collect(),
        },
        (Command::Check, Some(Suite::Equivariance)) => match kind {
            DsStandard { .. } | DlpsEquatorial => spin(&[13]),
            CpShift => vec![Cutoff::Shift { ni: 10, nj: 10 }],
            CpGeneric { .. } => vec![Cutoff::Count(10)],
            _ => spin(&[12]),
        },
        (Command::Check, Some(Suite::Commutant | Suite::Axioms)) => match kind {
            DsStandard { .. } | DlpsEquatorial => spin(&[21]),
            Cp | Bk | GoswamiAbs | Dlssv { .. } => spin(&[20]),
            _ => vec![kind.default_cutoff()],
        },
        (Command::DiracSolve, _) => match kind {
            DsStandard { .. } => spin(&[13]),
            // the weighted stage needs room between low and high levels
            DlpsEquatorial => spin(&[21]),
            _ => spin(&[6]),
        },
        _ => vec![kind.default_cutoff()],
    }
}

/// `6.5,8.5` for spin cutoffs, `30` or `20x30` for the shift families.
pub fn parse_cutoffs(kind: &TripleKind, big_l: Option<&str>, big_n: Option<&str>) -> Result<Vec<Cutoff>, CliError> {
    let split = |s: &str| s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect::<Vec<_>>();
    match (kind, big_l, big_n) {
        (_, Some(_), Some(_)) => Err(CliError::Input("give --L or --N, not both".into())),
        (TripleKind::CpShift | TripleKind::CpGeneric { .. }, Some(_), None) => Err(CliError::Input(format!("{} is truncated with --N", kind.slug()))),
        (TripleKind::CpShift | TripleKind::CpGeneric { .. }, None, Some(n)) => split(n)
            .iter()
            .map(|s| {
                let int = |x: &str| x.parse::<i32>().ok().filter(|v| *v >= 1).ok_or_else(|| CliError::Input(format!("bad truncation `{s}`")));
                match (kind, s.split_once('x')) {
                    (TripleKind::CpShift, Some((a, b))) => Ok(Cutoff::Shift { ni: int(a)?, nj: int(b)? }),
                    (TripleKind::CpShift, None) => Ok(Cutoff::Shift { ni: int(s)?, nj: int(s)? }),
                    (_, None) => Ok(Cutoff::Count(int(s)?)),
                    _ => Err(CliError::Input(format!("bad truncation `{s}`"))),
                }
            })
            .collect(),
        (_, None, Some(_)) => Err(CliError::Input(format!("{} is truncated with --L", kind.slug()))),
        (_, Some(l), None) => split(l)
            .iter()
            .map(|s| {
                let h: HalfInt = s.parse().map_err(CliError::Input)?;
                if h <= HalfInt::ZERO {
                    return Err(CliError::Input(format!("truncation {s} must be positive")));
                }
                Ok(Cutoff::Spin(h))
            })
            .collect(),
        (_, None, None) => Ok(Vec::new()),
    }
}
