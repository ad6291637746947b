//! Exact rationals for densities and average degrees.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// A normalized rational `num/den` with `den > 0` and `gcd(|num|, den) = 1`.
///
/// Comparisons cross-multiply in `i128`, so every pair of `i64` fractions
/// compares exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };

    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_wide(num as i128, den as i128)
    }

    pub fn from_int(v: i64) -> Self {
        Fraction { num: v, den: 1 }
    }

    fn from_wide(num: i128, den: i128) -> Self {
        assert!(den != 0, "fraction with zero denominator");
        let g = gcd(num, den).max(1);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Fraction {
            num: i64::try_from(num).expect("fraction numerator overflows i64"),
            den: i64::try_from(den).expect("fraction denominator overflows i64"),
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// Greatest integer `<= self`.
    pub fn floor(&self) -> i64 {
        self.num.div_euclid(self.den)
    }

    /// Least integer `>= self`.
    pub fn ceil(&self) -> i64 {
        -(-self.num).div_euclid(self.den)
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl Default for Fraction {
    fn default() -> Self {
        Fraction::ZERO
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Fraction {
    type Output = Fraction;
    fn add(self, rhs: Fraction) -> Fraction {
        Fraction::from_wide(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Fraction {
    type Output = Fraction;
    fn sub(self, rhs: Fraction) -> Fraction {
        Fraction::from_wide(
            self.num as i128 * rhs.den as i128 - rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Mul for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Fraction) -> Fraction {
        Fraction::from_wide(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Mul<i64> for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: i64) -> Fraction {
        Fraction::from_wide(self.num as i128 * rhs as i128, self.den as i128)
    }
}

impl From<i64> for Fraction {
    fn from(v: i64) -> Self {
        Fraction::from_int(v)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFractionError(String);

impl fmt::Display for ParseFractionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid fraction {:?}", self.0)
    }
}

impl std::error::Error for ParseFractionError {}

impl FromStr for Fraction {
    type Err = ParseFractionError;

    /// Accepts `"a/b"` or a bare integer `"a"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseFractionError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| err())?,
                d.trim().parse::<i64>().map_err(|_| err())?,
            ),
            None => (s.trim().parse::<i64>().map_err(|_| err())?, 1),
        };
        if den == 0 {
            return Err(err());
        }
        Ok(Fraction::new(num, den))
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
