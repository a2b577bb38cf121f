use std::collections::HashMap;
use std::fmt;

use qcore::HalfInt;

/// Which Hilbert space a basis spans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `L²(SU_q(2))` with `ε_{ℓ,i,j}`.
    L2,
    /// `L²(SU_q(2)) ⊗ C²`, product labels `(ℓ, i, j, s)`.
    L2Spin,
    /// Coupled spinor basis `|j μ n ↑/↓>`.
    Spinor,
    /// `v^±_{ℓ,i,μ}` in `C² ⊗ L²(SU_q(2))`, coupled on the second index.
    Bk,
    /// `|ℓ, m, s>` with half-odd `ℓ`, both spheres.
    Podles,
    /// A single irrep `V_ℓ`.
    Irrep,
    /// `ε_{i,j}`, `i ∈ N`, `j ∈ Z`.
    Shift,
    /// `ε_{n,s}`, `n ∈ N`, `s = ±1`.
    Generic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    L2 { l: HalfInt, i: HalfInt, j: HalfInt },
    L2Spin { l: HalfInt, i: HalfInt, j: HalfInt, s: HalfInt },
    Spinor { j: HalfInt, up: bool, mu: HalfInt, n: HalfInt },
    Bk { l: HalfInt, i: HalfInt, plus: bool, mu: HalfInt },
    Podles { l: HalfInt, s: i8, m: HalfInt },
    Weight { l: HalfInt, m: HalfInt },
    Shift { i: i32, j: i32 },
    Generic { n: i32, s: i8 },
}

impl BasisLabel {
    /// The spin-like index that generators shift and truncation cuts.
    pub fn level(&self) -> HalfInt {
        match *self {
            BasisLabel::L2 { l, .. } | BasisLabel::L2Spin { l, .. } | BasisLabel::Podles { l, .. } => l,
            BasisLabel::Weight { l, .. } => l,
            BasisLabel::Spinor { j, .. } => j,
            BasisLabel::Bk { l, .. } => l,
            BasisLabel::Shift { i, j } => HalfInt::from_int(i.max(j.abs())),
            BasisLabel::Generic { n, .. } => HalfInt::from_int(n),
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::L2 { l, i, j } => write!(f, "L2({l},{i},{j})"),
            BasisLabel::L2Spin { l, i, j, s } => write!(f, "L2Spin({l},{i},{j};{s})"),
            BasisLabel::Spinor { j, up, mu, n } => write!(f, "Spinor({j},{},{mu},{n})", if *up { "up" } else { "dn" }),
            BasisLabel::Bk { l, i, plus, mu } => write!(f, "Bk({l},{i},{},{mu})", if *plus { "+" } else { "-" }),
            BasisLabel::Podles { l, s, m } => write!(f, "Podles({l},{m},{s})"),
            BasisLabel::Weight { l, m } => write!(f, "V({l},{m})"),
            BasisLabel::Shift { i, j } => write!(f, "Shift({i},{j})"),
            BasisLabel::Generic { n, s } => write!(f, "Generic({n},{s})"),
        }
    }
}

/// Truncation size: a maximal spin, or index bounds for the shift families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cutoff {
    Spin(HalfInt),
    Shift { ni: i32, nj: i32 },
    Count(i32),
}

/// Ordered orthonormal basis of a truncated Hilbert space.
#[derive(Debug, Clone)]
pub struct Basis {
    pub family: Family,
    pub cutoff: Cutoff,
    labels: Vec<BasisLabel>,
    index: HashMap<BasisLabel, usize>,
}

impl PartialEq for Basis {
    fn eq(&self, o: &Self) -> bool {
        self.family == o.family && self.labels == o.labels
    }
}

fn spins(max: HalfInt) -> impl Iterator<Item = HalfInt> {
    (0..=max.twice()).map(HalfInt::from_twice)
}

impl Basis {
    pub fn from_labels(family: Family, cutoff: Cutoff, labels: Vec<BasisLabel>) -> Self {
        let index = labels.iter().enumerate().map(|(k, l)| (*l, k)).collect();
        Basis { family, cutoff, labels, index }
    }

    /// `ε_{ℓ,i,j}` for `ℓ ≤ L`, ordered by `ℓ`, then `i`, then `j`.
    pub fn l2(big_l: HalfInt) -> Self {
        let mut v = Vec::new();
        for l in spins(big_l) {
            for i in l.projections() {
                for j in l.projections() {
                    v.push(BasisLabel::L2 { l, i, j });
                }
            }
        }
        Self::from_labels(Family::L2, Cutoff::Spin(big_l), v)
    }

    /// `ε_{ℓ,i,j} ⊗ e_s`, the L² ordering with the C² index innermost.
    pub fn l2_spin(big_l: HalfInt) -> Self {
        let mut v = Vec::new();
        for l in spins(big_l) {
            for i in l.projections() {
                for j in l.projections() {
                    for s in [-HalfInt::HALF, HalfInt::HALF] {
                        v.push(BasisLabel::L2Spin { l, i, j, s });
                    }
                }
            }
        }
        Self::from_labels(Family::L2Spin, Cutoff::Spin(big_l), v)
    }

    /// Coupled spinor basis built from `ℓ ≤ L`: `↑` at `j = ℓ - 1/2` with
    /// `|n| ≤ j + 1/2`, `↓` at `j = ℓ + 1/2` with `|n| ≤ j - 1/2`.
    pub fn spinor(big_l: HalfInt) -> Self {
        let mut v = Vec::new();
        for j in spins(big_l + HalfInt::HALF) {
            if j + HalfInt::HALF <= big_l {
                for mu in j.projections() {
                    for n in (j + HalfInt::HALF).projections() {
                        v.push(BasisLabel::Spinor { j, up: true, mu, n });
                    }
                }
            }
            if j >= HalfInt::HALF {
                for mu in j.projections() {
                    for n in (j - HalfInt::HALF).projections() {
                        v.push(BasisLabel::Spinor { j, up: false, mu, n });
                    }
                }
            }
        }
        Self::from_labels(Family::Spinor, Cutoff::Spin(big_l), v)
    }

    /// `v^±_{ℓ,i,μ}` for `ℓ ≤ L`: `v^+` has `|μ| ≤ ℓ + 1/2`, `v^-` has
    /// `|μ| ≤ ℓ - 1/2`; ordered by `ℓ`, `i`, `-` before `+`, `μ`.
    pub fn bk(big_l: HalfInt) -> Self {
        let mut v = Vec::new();
        for l in spins(big_l) {
            for i in l.projections() {
                if l >= HalfInt::HALF {
                    for mu in (l - HalfInt::HALF).projections() {
                        v.push(BasisLabel::Bk { l, i, plus: false, mu });
                    }
                }
                for mu in (l + HalfInt::HALF).projections() {
                    v.push(BasisLabel::Bk { l, i, plus: true, mu });
                }
            }
        }
        Self::from_labels(Family::Bk, Cutoff::Spin(big_l), v)
    }

    /// `|ℓ, m, s>` for half-odd `ℓ ≤ L`, ordered by `ℓ`, `s`, `m`.
    pub fn podles(big_l: HalfInt) -> Self {
        assert!(!big_l.is_integer(), "the Podleś truncation must be half-odd");
        let mut v = Vec::new();
        for l in spins(big_l).filter(|l| !l.is_integer()) {
            for s in [-1i8, 1] {
                for m in l.projections() {
                    v.push(BasisLabel::Podles { l, s, m });
                }
            }
        }
        Self::from_labels(Family::Podles, Cutoff::Spin(big_l), v)
    }

    pub fn irrep(l: HalfInt) -> Self {
        let v = l.projections().map(|m| BasisLabel::Weight { l, m }).collect();
        Self::from_labels(Family::Irrep, Cutoff::Spin(l), v)
    }

    /// `ε_{i,j}`, `0 ≤ i ≤ ni`, `|j| ≤ nj`.
    pub fn shift(ni: i32, nj: i32) -> Self {
        let mut v = Vec::new();
        for i in 0..=ni {
            for j in -nj..=nj {
                v.push(BasisLabel::Shift { i, j });
            }
        }
        Self::from_labels(Family::Shift, Cutoff::Shift { ni, nj }, v)
    }

    /// `ε_{n,s}`, `0 ≤ n ≤ n_max`.
    pub fn generic(n_max: i32) -> Self {
        let mut v = Vec::new();
        for n in 0..=n_max {
            for s in [-1i8, 1] {
                v.push(BasisLabel::Generic { n, s });
            }
        }
        Self::from_labels(Family::Generic, Cutoff::Count(n_max), v)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn label(&self, k: usize) -> BasisLabel {
        self.labels[k]
    }

    pub fn index_of(&self, l: &BasisLabel) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn max_spin(&self) -> HalfInt {
        match self.cutoff {
            Cutoff::Spin(l) => l,
            Cutoff::Shift { ni, nj } => HalfInt::from_int(ni.max(nj)),
            Cutoff::Count(n) => HalfInt::from_int(n),
        }
    }

    /// Labels at least `margin` away from every edge of the truncation.
    pub fn interior_mask(&self, margin: HalfInt) -> Vec<bool> {
        self.labels
            .iter()
            .map(|lab| match (self.cutoff, lab) {
                (Cutoff::Shift { ni, nj }, BasisLabel::Shift { i, j }) => {
                    HalfInt::from_int(*i) + margin <= HalfInt::from_int(ni)
                        && HalfInt::from_int(j.abs()) + margin <= HalfInt::from_int(nj)
                }
                (Cutoff::Spin(big_l), l) => l.level() + margin <= big_l,
                (Cutoff::Count(n), l) => l.level() + margin <= HalfInt::from_int(n),
                _ => false,
            })
            .collect()
    }

    /// Labels with level in `[lo, hi]`.
    pub fn level_mask(&self, lo: HalfInt, hi: HalfInt) -> Vec<bool> {
        self.labels.iter().map(|l| l.level() >= lo && l.level() <= hi).collect()
    }
}
