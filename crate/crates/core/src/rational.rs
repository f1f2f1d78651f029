//! Exact rational exponents `delta = a/b` for divisor thresholds.
//!
//! Thresholds of the form `d <= n^delta` are only decidable when `delta` is
//! rational: the comparison becomes `d^b <= n^a` in integer arithmetic.
//! Decimal input is deliberately not accepted anywhere; parse from `"a/b"`.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A reduced rational in `(0, 1]`, stored as `a/b` with `gcd(a,b) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalDelta {
    a: u64,
    b: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalError {
    /// Numerator or denominator is zero, or a/b > 1.
    OutOfRange { a: u64, b: u64 },
    /// Input string is not of the form "a/b".
    Parse(String),
}

impl fmt::Display for RationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalError::OutOfRange { a, b } => {
                write!(f, "{a}/{b} is outside (0, 1]")
            }
            RationalError::Parse(s) => write!(f, "expected a rational \"a/b\", got {s:?}"),
        }
    }
}

impl std::error::Error for RationalError {}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

impl RationalDelta {
    /// Builds `a/b` reduced to lowest terms. Requires `0 < a <= b`.
    pub fn new(a: u64, b: u64) -> Result<Self, RationalError> {
        if a == 0 || b == 0 || a > b {
            return Err(RationalError::OutOfRange { a, b });
        }
        let g = gcd_u64(a, b);
        Ok(RationalDelta { a: a / g, b: b / g })
    }

    pub fn numer(&self) -> u64 {
        self.a
    }

    pub fn denom(&self) -> u64 {
        self.b
    }

    pub fn as_f64(&self) -> f64 {
        self.a as f64 / self.b as f64
    }

    /// True when `a/b <= 1/2`; several constructions require this half-range.
    pub fn is_at_most_half(&self) -> bool {
        2 * self.a <= self.b
    }

    pub fn is_one(&self) -> bool {
        self.a == self.b
    }

    /// Continued fraction terms `[a0; a1, ..., ar]` via the Euclidean
    /// algorithm. For values in `(0,1)` the leading term is 0; `1/1 -> [1]`.
    pub fn continued_fraction(&self) -> Vec<u64> {
        if self.a == self.b {
            return vec![1];
        }
        let mut terms = Vec::new();
        let (mut p, mut q) = (self.a, self.b);
        terms.push(0);
        // expand b/a, a/b < 1
        std::mem::swap(&mut p, &mut q);
        while q != 0 {
            terms.push(p / q);
            let r = p % q;
            p = q;
            q = r;
        }
        terms
    }
}

impl fmt::Display for RationalDelta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl FromStr for RationalDelta {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| RationalError::Parse(s.to_string()))?;
        let a: u64 = num
            .trim()
            .parse()
            .map_err(|_| RationalError::Parse(s.to_string()))?;
        let b: u64 = den
            .trim()
            .parse()
            .map_err(|_| RationalError::Parse(s.to_string()))?;
        RationalDelta::new(a, b)
    }
}

impl Serialize for RationalDelta {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format!("{}/{}", self.a, self.b))
    }
}

impl<'de> Deserialize<'de> for RationalDelta {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let d = RationalDelta::new(2, 6).unwrap();
        assert_eq!((d.numer(), d.denom()), (1, 3));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(RationalDelta::new(0, 5).is_err());
        assert!(RationalDelta::new(3, 2).is_err());
        assert!(RationalDelta::new(1, 0).is_err());
    }

    #[test]
    fn parses_and_displays() {
        let d: RationalDelta = "4/8".parse().unwrap();
        assert_eq!(d, RationalDelta::new(1, 2).unwrap());
        assert_eq!(d.to_string(), "1/2");
        assert!("0.5".parse::<RationalDelta>().is_err());
        assert!("1/0".parse::<RationalDelta>().is_err());
    }

    #[test]
    fn continued_fractions() {
        let d = RationalDelta::new(1, 2).unwrap();
        assert_eq!(d.continued_fraction(), vec![0, 2]);
        let d = RationalDelta::new(2, 5).unwrap();
        assert_eq!(d.continued_fraction(), vec![0, 2, 2]);
        let d = RationalDelta::new(1, 1).unwrap();
        assert_eq!(d.continued_fraction(), vec![1]);
        let d = RationalDelta::new(7, 8).unwrap();
        assert_eq!(d.continued_fraction(), vec![0, 1, 7]);
    }

    #[test]
    fn half_range_flag() {
        assert!(RationalDelta::new(1, 2).unwrap().is_at_most_half());
        assert!(!RationalDelta::new(2, 3).unwrap().is_at_most_half());
    }
}
