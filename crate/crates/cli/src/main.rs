use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cli::{parse_cutoffs, run, Command, Format, RunManifest, Suite};
use triples::TripleKind;

#[derive(Parser)]
#[command(name = "qspectral", version, about = "Truncated spectral triples on SU_q(2) and the Podleś spheres")]
struct Opts {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites and write report.json.
    Check(Common),
    /// Write the spectrum of D with multiplicities.
    Spectrum(Common),
    /// Zeta partial sums, pole sets and the summability table.
    Zeta(Common),
    /// Solve for the equivariant Dirac operators and report the dimension.
    DiracSolve(Common),
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum TripleName {
    Bk,
    GoswamiAbs,
    Cp,
    CpShift,
    Dlssv,
    DsStandard,
    DlpsEquatorial,
    CpGeneric,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum)]
    triple: TripleName,
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    /// Spin truncations, comma separated: `6.5,8.5` or `13/2`.
    #[arg(long = "L")]
    big_l: Option<String>,
    /// Truncations of cp-shift (`30` or `20x30`) and cp-generic (`30`).
    #[arg(long = "N")]
    big_n: Option<String>,
    /// cp-generic: the sphere parameter c > 0, default 1. dlssv: `c1,c2` for the up
    /// sector, the down sector following from the constraints.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    c: Vec<f64>,
    /// ds-standard: the scale z as `re` or `re,im`.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    z: Vec<f64>,
    #[arg(long, value_enum, value_delimiter = ',')]
    suite: Vec<Suite>,
    /// Exponents ε of |D|^{-ε} for the summability table.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    epsilon: Vec<f64>,
    /// Real parts of the zeta grid.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    re: Vec<f64>,
    /// Imaginary parts of the zeta grid.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    im: Vec<f64>,
    /// Extra elements for the boundedness suite. Grammar: sums and
    /// differences of terms; a term is an optional rational coefficient
    /// followed by `*`-separated factors `gen` or `gen^n`, or a
    /// parenthesized expression. Generators: alpha, beta, alphastar,
    /// betastar on SU_q(2); a, b, bstar on the spheres.
    #[arg(long)]
    element: Vec<String>,
    /// Recorded in the manifest. The suites are deterministic; the only
    /// random draws are the fixed-seed starts of the power iteration.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn kind_of(c: &Common) -> Result<TripleKind, String> {
    let one = |v: &[f64], what: &str| -> Result<Option<f64>, String> {
        match v {
            [] => Ok(None),
            [x] => Ok(Some(*x)),
            _ => Err(format!("--{what} takes one value for this triple")),
        }
    };
    let no = |v: &[f64], what: &str| if v.is_empty() { Ok(()) } else { Err(format!("--{what} does not apply to this triple")) };
    Ok(match c.triple {
        TripleName::Dlssv => {
            no(&c.z, "z")?;
            match c.c[..] {
                [] => TripleKind::dlssv_default(),
                [c1, c2] => TripleKind::dlssv_constrained(c1, c2),
                _ => return Err("--c takes `c1,c2` for dlssv".into()),
            }
        }
        TripleName::CpGeneric => {
            no(&c.z, "z")?;
            let v = one(&c.c, "c")?.unwrap_or(1.0);
            TripleKind::CpGeneric { c: v }
        }
        TripleName::DsStandard => {
            no(&c.c, "c")?;
            match c.z[..] {
                [] => TripleKind::ds_standard_default(),
                [re] => TripleKind::DsStandard { z_re: re, z_im: 0.0 },
                [re, im] => TripleKind::DsStandard { z_re: re, z_im: im },
                _ => return Err("--z takes `re` or `re,im`".into()),
            }
        }
        other => {
            no(&c.c, "c")?;
            no(&c.z, "z")?;
            match other {
                TripleName::Bk => TripleKind::Bk,
                TripleName::GoswamiAbs => TripleKind::GoswamiAbs,
                TripleName::Cp => TripleKind::Cp,
                TripleName::CpShift => TripleKind::CpShift,
                TripleName::DlpsEquatorial => TripleKind::DlpsEquatorial,
                _ => unreachable!(),
            }
        }
    })
}

fn manifest(command: Command, c: &Common) -> Result<RunManifest, String> {
    let kind = kind_of(c)?;
    let mut m = RunManifest::new(command, kind);
    m.q = c.q;
    m.truncations = parse_cutoffs(&kind, c.big_l.as_deref(), c.big_n.as_deref()).map_err(|e| e.to_string())?;
    m.suites = c.suite.clone();
    if command != Command::Check && !m.suites.is_empty() {
        return Err("--suite applies to `check` only".into());
    }
    m.seed = c.seed;
    m.format = c.format;
    m.epsilons = c.epsilon.clone();
    if !c.re.is_empty() {
        m.grid_re = c.re.clone();
    }
    if !c.im.is_empty() {
        m.grid_im = c.im.clone();
    }
    m.elements = c.element.clone();
    Ok(m)
}

fn main() -> ExitCode {
    let opts = Opts::parse();
    let (command, common) = match &opts.cmd {
        Cmd::Check(c) => (Command::Check, c),
        Cmd::Spectrum(c) => (Command::Spectrum, c),
        Cmd::Zeta(c) => (Command::Zeta, c),
        Cmd::DiracSolve(c) => (Command::DiracSolve, c),
    };
    let m = match manifest(command, common) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&m, Some(&common.out)) {
        Ok(report) => {
            // a closed pipe on stdout is not an error of the run
            let mut out = std::io::stdout().lock();
            for r in &report.results {
                let verdict = format!("{:?}", r.verdict).to_lowercase();
                let note = r.note.as_ref().map(|n| format!("  ({n})")).unwrap_or_default();
                let _ = writeln!(out, "{verdict:<8} {:<40} {:<16} worst {:.3e}{note}", r.check_id, r.triple, r.worst());
            }
            let _ = writeln!(out, "report: {}", common.out.join("report.json").display());
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
