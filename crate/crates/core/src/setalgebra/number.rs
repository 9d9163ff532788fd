use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::SetAlgebraError;

/// An exact positive integer of unbounded size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveInt(BigUint);

impl PositiveInt {
    pub fn new(value: BigUint) -> Option<Self> {
        if value.is_zero() {
            None
        } else {
            Some(PositiveInt(value))
        }
    }

    pub fn from_u64(value: u64) -> Option<Self> {
        Self::new(BigUint::from(value))
    }

    pub fn one() -> Self {
        PositiveInt(BigUint::one())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn pow(&self, exp: u32) -> Self {
        PositiveInt(self.0.pow(exp))
    }

    pub fn is_multiple_of(&self, divisor: &PositiveInt) -> bool {
        self.0.is_multiple_of(&divisor.0)
    }
}

impl Mul for &PositiveInt {
    type Output = PositiveInt;

    fn mul(self, rhs: &PositiveInt) -> PositiveInt {
        PositiveInt(&self.0 * &rhs.0)
    }
}

impl fmt::Display for PositiveInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for PositiveInt {
    type Err = SetAlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // BigUint accepts a leading '+' and underscores; the JSON form is plain digits.
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(SetAlgebraError::Parse(format!("not a decimal integer: {s:?}")));
        }
        let value: BigUint = s
            .parse()
            .map_err(|_| SetAlgebraError::Parse(format!("not a decimal integer: {s:?}")))?;
        PositiveInt::new(value).ok_or_else(|| SetAlgebraError::NonPositive(s.to_string()))
    }
}

impl Serialize for PositiveInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for PositiveInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A positive rational number kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: BigUint,
    denom: BigUint,
}

impl Rational {
    /// Builds `numer / denom` reduced to lowest terms. Returns `None` if either part is zero.
    pub fn new(numer: BigUint, denom: BigUint) -> Option<Self> {
        if numer.is_zero() || denom.is_zero() {
            return None;
        }
        let g = numer.gcd(&denom);
        Some(Rational {
            numer: numer / &g,
            denom: denom / g,
        })
    }

    pub fn from_ratio(numer: &PositiveInt, denom: &PositiveInt) -> Self {
        Rational::new(numer.as_biguint().clone(), denom.as_biguint().clone())
            .expect("positive operands")
    }

    pub fn from_integer(value: u64) -> Option<Self> {
        Rational::new(BigUint::from(value), BigUint::one())
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_one(&self) -> bool {
        self.numer == self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    pub fn exceeds_one(&self) -> bool {
        self.numer > self.denom
    }

    pub fn pow(&self, exp: u32) -> Self {
        // Powers of coprime parts stay coprime.
        Rational {
            numer: self.numer.pow(exp),
            denom: self.denom.pow(exp),
        }
    }
}

impl Mul for &Rational {
    type Output = Rational;

    fn mul(self, rhs: &Rational) -> Rational {
        Rational::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom).expect("positive")
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl FromStr for Rational {
    type Err = SetAlgebraError;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: PositiveInt = p.parse()?;
        let q: PositiveInt = q.parse()?;
        Ok(Rational::from_ratio(&p, &q))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
