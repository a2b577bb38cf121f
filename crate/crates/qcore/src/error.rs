use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QError {
    #[error("deformation parameter q = {0} must lie in (0, 1)")]
    QOutOfRange(f64),
    #[error("spin label out of range: j = {j}, mu = {mu}")]
    Domain { j: String, mu: String },
}
