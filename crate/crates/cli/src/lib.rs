//! Library side of the `qspectral` command: run manifests, suites, the
//! report schema and its fixed-width JSON encoding.

mod json;
mod manifest;
mod run;

pub use json::to_json;
pub use manifest::{default_cutoffs, parse_cutoffs, Command, Format, RunManifest, Suite, Tolerances};
pub use run::{run, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Triple(#[from] triples::TripleError),
    #[error(transparent)]
    Verify(#[from] verify::VerifyError),
    #[error(transparent)]
    Zeta(#[from] zeta::ZetaError),
    #[error(transparent)]
    Algebra(#[from] ncalg::NcError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
