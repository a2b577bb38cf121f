use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// A half-integer stored as twice its value, so spins never round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i32) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    /// The values `-self, -self + 1, ..., self`; empty for negative spins.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        let t = self.twice;
        (0..=t.max(-1)).filter(move |_| t >= 0).map(move |k| HalfInt::from_twice(-t + 2 * k))
    }

    /// Spins `0, 1/2, 1, ..., self`.
    pub fn spins_up_to(self) -> impl Iterator<Item = HalfInt> {
        (0..=self.twice.max(-1)).map(HalfInt::from_twice)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + o.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - o.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl PartialEq<i32> for HalfInt {
    fn eq(&self, o: &i32) -> bool {
        self.twice == 2 * o
    }
}

impl PartialOrd<i32> for HalfInt {
    fn partial_cmp(&self, o: &i32) -> Option<Ordering> {
        self.twice.partial_cmp(&(2 * o))
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = String;

    /// Accepts `3`, `3/2`, `1.5`, `-0.5`.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: i32 = n.trim().parse().map_err(|_| format!("bad half-integer `{s}`"))?;
            return match d.trim() {
                "2" => Ok(HalfInt::from_twice(n)),
                "1" => Ok(HalfInt::from_int(n)),
                _ => Err(format!("bad half-integer `{s}`")),
            };
        }
        let x: f64 = s.parse().map_err(|_| format!("bad half-integer `{s}`"))?;
        let t = 2.0 * x;
        if (t - t.round()).abs() > 1e-12 {
            return Err(format!("`{s}` is not a multiple of 1/2"));
        }
        Ok(HalfInt::from_twice(t.round() as i32))
    }
}
