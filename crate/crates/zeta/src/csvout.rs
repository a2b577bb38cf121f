use std::io::Write;

use num_complex::Complex64;
use triples::SpectrumEntry;

use crate::{SummabilityRow, ZetaError};

/// Floats as `{:.16e}`, so that files are byte-identical across runs.
fn f(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_spectrum_csv<W: Write>(w: W, entries: &[SpectrumEntry]) -> Result<(), ZetaError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["eigenvalue", "multiplicity"])?;
    for e in entries {
        out.write_record([f(e.eigenvalue), e.multiplicity.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_zeta_csv<W: Write>(w: W, grid: &[(Complex64, Complex64)]) -> Result<(), ZetaError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["z_re", "z_im", "zeta_re", "zeta_im"])?;
    for (z, v) in grid {
        out.write_record([f(z.re), f(z.im), f(v.re), f(v.im)])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_summability_csv<W: Write>(w: W, rows: &[SummabilityRow]) -> Result<(), ZetaError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["epsilon", "trace", "tail_bound", "corrected_bound", "printed_bound", "verdict"])?;
    for r in rows {
        let v = format!("{:?}", r.verdict).to_lowercase();
        out.write_record([f(r.epsilon), f(r.trace()), f(r.tail_bound), f(r.corrected_bound), f(r.printed_bound), v])?;
    }
    out.flush()?;
    Ok(())
}
