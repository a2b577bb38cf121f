use serde::{Deserialize, Serialize};

use qcore::HalfInt;
use reps::Cutoff;

/// The eight triples, with their free parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum TripleKind {
    /// Bibikov–Kulish: eigenvalues `[ℓ]_{q²}` on `v^+`, `-[ℓ+1]_{q²}` on `v^-`.
    Bk,
    /// `|D̃| = ℓ + ½` on the same eigenvectors.
    GoswamiAbs,
    /// `D ε_{ℓ,i,j} = (1 - 2δ_{i,ℓ}) ℓ ε_{ℓ,i,j}`.
    Cp,
    /// `D ε_{i,j} = (i sign(j) + j) ε_{i,j}` with `sign(0) = 1`.
    CpShift,
    /// `d↑_j = c1_up j + c2_up`, `d↓_j = c1_dn j + c2_dn`.
    Dlssv { c1_up: f64, c2_up: f64, c1_dn: f64, c2_dn: f64 },
    /// `D |ℓ,m,±> = z^{(±)} [ℓ+½] |ℓ,m,∓>` with `z^{(+)} = z`, `z^{(-)} = z̄`.
    DsStandard { z_re: f64, z_im: f64 },
    /// `D |ℓ,m,s> = (ℓ + ½) |ℓ,m,-s>`.
    DlpsEquatorial,
    /// `D ε_{n,s} = n ε_{n,-s}`.
    CpGeneric { c: f64 },
}

impl TripleKind {
    /// DLSSV constants obeying `c1_dn = -c1_up`, `c2_dn = c1_up - c2_up`.
    pub fn dlssv_constrained(c1_up: f64, c2_up: f64) -> Self {
        TripleKind::Dlssv { c1_up, c2_up, c1_dn: -c1_up, c2_dn: c1_up - c2_up }
    }

    /// The default DLSSV triple, `c = (2, 2)`, whose spectrum is the
    /// classical one shifted by ½.
    pub fn dlssv_default() -> Self {
        Self::dlssv_constrained(2.0, 2.0)
    }

    pub fn ds_standard_default() -> Self {
        TripleKind::DsStandard { z_re: 1.0, z_im: 0.0 }
    }

    /// Short name used on the command line.
    pub fn slug(&self) -> &'static str {
        match self {
            TripleKind::Bk => "bk",
            TripleKind::GoswamiAbs => "goswami-abs",
            TripleKind::Cp => "cp",
            TripleKind::CpShift => "cp-shift",
            TripleKind::Dlssv { .. } => "dlssv",
            TripleKind::DsStandard { .. } => "ds-standard",
            TripleKind::DlpsEquatorial => "dlps-equatorial",
            TripleKind::CpGeneric { .. } => "cp-generic",
        }
    }

    /// Truncations used when none is given.
    pub fn default_cutoff(&self) -> Cutoff {
        match self {
            TripleKind::Bk | TripleKind::GoswamiAbs | TripleKind::Cp | TripleKind::Dlssv { .. } => Cutoff::Spin(HalfInt::from_int(10)),
            TripleKind::DsStandard { .. } | TripleKind::DlpsEquatorial => Cutoff::Spin(HalfInt::from_twice(41)),
            TripleKind::CpShift => Cutoff::Shift { ni: 30, nj: 30 },
            TripleKind::CpGeneric { .. } => Cutoff::Count(30),
        }
    }

    pub fn is_even(&self) -> bool {
        matches!(self, TripleKind::DsStandard { .. } | TripleKind::DlpsEquatorial | TripleKind::CpGeneric { .. })
    }

    pub fn has_real_structure(&self) -> bool {
        matches!(self, TripleKind::Dlssv { .. } | TripleKind::DsStandard { .. } | TripleKind::DlpsEquatorial)
    }
}

/// Serializable description of a built instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Descriptor {
    pub triple: TripleKind,
    pub truncation: String,
    pub q: f64,
    pub dimension: usize,
}
