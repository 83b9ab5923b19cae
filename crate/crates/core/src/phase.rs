//! Exact elements of Q/Z.
//!
//! A [`Phase`] `t` stands for the root of unity `exp(2πi·t)`. Multiplicative
//! statements about scalars in `k^×` are written additively here: the unit
//! scalar is `0/1` and `-1` is `1/2`.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest denominator accepted when parsing a phase from text.
pub const MAX_PARSED_DENOMINATOR: i64 = 1_000_000;

/// A reduced fraction in `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    num: i64,
    den: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhaseParseError {
    #[error("malformed fraction {0:?}: expected \"a/b\" or an integer")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("denominator of {0:?} exceeds {MAX_PARSED_DENOMINATOR}")]
    DenominatorTooLarge(String),
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };
    pub const HALF: Phase = Phase { num: 1, den: 2 };

    /// Builds `num/den mod 1` in lowest terms. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Phase {
        assert!(den != 0, "phase with zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        Phase {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn denominator(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// `n · self` in Q/Z.
    pub fn times(self, n: i64) -> Phase {
        let n = n.rem_euclid(self.den);
        Phase::new((n as i128 * self.num as i128 % self.den as i128) as i64, self.den)
    }

    /// The additive order of this phase, i.e. its reduced denominator.
    pub fn order(self) -> i64 {
        self.den
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ZERO
    }
}

impl Add for Phase {
    type Output = Phase;

    fn add(self, rhs: Phase) -> Phase {
        let den = self.den.lcm(&rhs.den);
        let num = self.num * (den / self.den) + rhs.num * (den / rhs.den);
        Phase::new(num, den)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl Neg for Phase {
    type Output = Phase;

    fn neg(self) -> Phase {
        Phase::new(-self.num, self.den)
    }
}

impl Sub for Phase {
    type Output = Phase;

    fn sub(self, rhs: Phase) -> Phase {
        self + (-rhs)
    }
}

impl std::iter::Sum for Phase {
    fn sum<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ZERO, Add::add)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phase({}/{})", self.num, self.den)
    }
}

impl FromStr for Phase {
    type Err = PhaseParseError;

    fn from_str(s: &str) -> Result<Phase, PhaseParseError> {
        let text = s.trim();
        let malformed = || PhaseParseError::Malformed(s.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| malformed())?,
                d.trim().parse::<i64>().map_err(|_| malformed())?,
            ),
            None => (text.parse::<i64>().map_err(|_| malformed())?, 1),
        };
        if den == 0 {
            return Err(PhaseParseError::ZeroDenominator(s.to_string()));
        }
        if den.abs() > MAX_PARSED_DENOMINATOR {
            return Err(PhaseParseError::DenominatorTooLarge(s.to_string()));
        }
        Ok(Phase::new(num, den))
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Phase, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalizes() {
        assert_eq!(Phase::new(3, 6), Phase::HALF);
        assert_eq!(Phase::new(-1, 4), Phase::new(3, 4));
        assert_eq!(Phase::new(5, 4), Phase::new(1, 4));
        assert_eq!(Phase::new(1, -4), Phase::new(3, 4));
        assert_eq!(Phase::new(8, 8), Phase::ZERO);
        assert_eq!(Phase::ZERO.denominator(), 1);
    }

    #[test]
    fn parses_and_prints() {
        assert_eq!("2/8".parse::<Phase>().unwrap().to_string(), "1/4");
        assert_eq!("-1/2".parse::<Phase>().unwrap(), Phase::HALF);
        assert_eq!("0".parse::<Phase>().unwrap(), Phase::ZERO);
        assert!(matches!("1/0".parse::<Phase>(), Err(PhaseParseError::ZeroDenominator(_))));
        assert!(matches!("x/3".parse::<Phase>(), Err(PhaseParseError::Malformed(_))));
        assert!(matches!(
            "1/1000001".parse::<Phase>(),
            Err(PhaseParseError::DenominatorTooLarge(_))
        ));
        assert!("1/1000000".parse::<Phase>().is_ok());
    }

    #[test]
    fn arithmetic() {
        let q = Phase::new(1, 8);
        assert_eq!(q + q, Phase::new(1, 4));
        assert_eq!(q.times(4), Phase::HALF);
        assert_eq!(q.times(-1), Phase::new(7, 8));
        assert_eq!(Phase::new(1, 3) + Phase::new(1, 6), Phase::HALF);
        assert_eq!(Phase::new(1, 4) - Phase::new(3, 4), Phase::HALF);
    }

    proptest! {
        #[test]
        fn group_laws(a in -50i64..50, b in 1i64..40, c in -50i64..50, d in 1i64..40, n in -20i64..20) {
            let x = Phase::new(a, b);
            let y = Phase::new(c, d);
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!(x + (-x), Phase::ZERO);
            prop_assert_eq!((x + y).times(n), x.times(n) + y.times(n));
            prop_assert!(x.numerator() >= 0 && x.numerator() < x.denominator());
            prop_assert_eq!(x.numerator().gcd(&x.denominator()), 1);
            let printed: Phase = x.to_string().parse().unwrap();
            prop_assert_eq!(printed, x);
        }
    }
}
