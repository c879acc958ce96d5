//! Exact scalar types: probabilities, odds and likelihood ratios.
//!
//! Every analytic value in the crate is an arbitrary-precision rational.
//! Floating point only appears when a value is rendered for display.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Parse an exact rational from `"a/b"`, an integer, or a decimal string.
///
/// Decimals convert exactly (`"0.02"` is `1/50`), and an optional exponent
/// is accepted on either side (`"4e6"`, `"1.5E-3"`).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Validation(format!("`{text}` is not a rational number"));
    match text.split_once('/') {
        Some((num, den)) => {
            let num = parse_decimal(num).ok_or_else(bad)?;
            let den = parse_decimal(den).ok_or_else(bad)?;
            if den.is_zero() {
                return Err(Error::Validation(format!("`{text}` has a zero denominator")));
            }
            Ok(num / den)
        }
        None => parse_decimal(text).ok_or_else(bad),
    }
}

fn parse_decimal(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(at) => (&text[..at], text[at + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(all_digits.parse::<BigInt>().ok()?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10u8));
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, scale.unsigned_abs() as usize);
    }
    Some(if negative { -value } else { value })
}

/// Render a rational as `"numerator/denominator"`.
pub fn rational_string(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

#[cfg(test)]
pub(crate) fn ratio_of(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// A probability: an exact rational in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prob(BigRational);

impl Prob {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(Error::Validation("probability with zero denominator".into()));
        }
        Self::from_rational(BigRational::new(numerator.into(), denominator))
    }

    pub fn from_rational(value: BigRational) -> Result<Self> {
        if value.is_negative() || value > BigRational::one() {
            return Err(Error::Validation(format!(
                "probability {} lies outside [0, 1]",
                rational_string(&value)
            )));
        }
        Ok(Prob(value))
    }

    pub fn zero() -> Self {
        Prob(BigRational::zero())
    }

    pub fn one() -> Self {
        Prob(BigRational::one())
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn complement(&self) -> Prob {
        Prob(BigRational::one() - &self.0)
    }

    /// Product of two probabilities, which is always a probability.
    pub fn times(&self, other: &Prob) -> Prob {
        Prob(&self.0 * &other.0)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.0)
    }
}

impl fmt::Display for Prob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rational_string(&self.0))
    }
}

impl FromStr for Prob {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Prob::from_rational(parse_rational(s)?)
    }
}

impl Serialize for Prob {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Prob {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Odds `for : against`, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Odds {
    favour: BigUint,
    against: BigUint,
}

impl Odds {
    pub fn new(favour: impl Into<BigUint>, against: impl Into<BigUint>) -> Result<Self> {
        let (favour, against) = (favour.into(), against.into());
        if favour.is_zero() && against.is_zero() {
            return Err(Error::Validation("odds 0:0 are undefined".into()));
        }
        Ok(Self::normalized(favour, against))
    }

    fn normalized(favour: BigUint, against: BigUint) -> Self {
        if favour.is_zero() {
            return Odds {
                favour,
                against: BigUint::one(),
            };
        }
        if against.is_zero() {
            return Odds {
                favour: BigUint::one(),
                against,
            };
        }
        let g = favour.gcd(&against);
        Odds {
            favour: favour / &g,
            against: against / g,
        }
    }

    pub fn favour(&self) -> &BigUint {
        &self.favour
    }

    pub fn against(&self) -> &BigUint {
        &self.against
    }

    /// Odds `a:b` scaled by the rational `n/d`, i.e. `a·n : b·d`.
    pub(crate) fn scaled(&self, factor: &BigRational) -> Odds {
        let n = factor.numer().magnitude().clone();
        let d = factor.denom().magnitude().clone();
        Self::normalized(&self.favour * n, &self.against * d)
    }
}

impl fmt::Display for Odds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.favour, self.against)
    }
}

/// A likelihood ratio; `Infinite` when only the alternative likelihood is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ratio {
    Finite(BigRational),
    Infinite,
}

impl Ratio {
    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Ratio::Finite(value) => Some(value),
            Ratio::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Ratio::Infinite)
    }

    /// Three-way comparison against 1.
    pub fn cmp_one(&self) -> Ordering {
        match self {
            Ratio::Finite(value) => value.cmp(&BigRational::one()),
            Ratio::Infinite => Ordering::Greater,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Ratio::Finite(value) => rational_to_f64(value),
            Ratio::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Finite(value) => f.write_str(&rational_string(value)),
            Ratio::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        if text == "inf" {
            return Ok(Ratio::Infinite);
        }
        let value = parse_rational(&text).map_err(de::Error::custom)?;
        if value.is_negative() {
            return Err(de::Error::custom("likelihood ratio cannot be negative"));
        }
        Ok(Ratio::Finite(value))
    }
}

/// How the evidence moves the probability of a hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProbativeDirection {
    Supports,
    Neutral,
    Undermines,
}

impl fmt::Display for ProbativeDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProbativeDirection::Supports => "Supports",
            ProbativeDirection::Neutral => "Neutral",
            ProbativeDirection::Undermines => "Undermines",
        })
    }
}

/// Nearest `f64` to a rational, robust to numerators and denominators far
/// outside the `f64` range.
pub fn rational_to_f64(value: &BigRational) -> f64 {
    if value.is_zero() {
        return 0.0;
    }
    let num = value.numer().magnitude();
    let den = value.denom().magnitude();
    // Shift so the integer quotient carries 63 or 64 significant bits.
    let shift = den.bits() as i64 - num.bits() as i64 + 63;
    let quotient = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let mantissa = quotient.to_u64().expect("quotient fits in 64 bits") as f64;
    let magnitude = scale_by_power_of_two(mantissa, -shift);
    if value.is_negative() {
        -magnitude
    } else {
        magnitude
    }
}

fn scale_by_power_of_two(mut value: f64, mut exponent: i64) -> f64 {
    while exponent != 0 && value != 0.0 && value.is_finite() {
        let step = exponent.clamp(-1000, 1000);
        value *= 2f64.powi(step as i32);
        exponent -= step;
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_parse_exactly() {
        assert_eq!(parse_rational("0.02").unwrap(), ratio_of(1, 50));
        assert_eq!(parse_rational("0.005").unwrap(), ratio_of(1, 200));
        assert_eq!(parse_rational("99/100").unwrap(), ratio_of(99, 100));
        assert_eq!(parse_rational(" 4e6 ").unwrap(), ratio_of(4_000_000, 1));
        assert_eq!(parse_rational("1.5E-3").unwrap(), ratio_of(3, 2000));
        assert_eq!(parse_rational("0.5/2").unwrap(), ratio_of(1, 4));
        assert_eq!(parse_rational(".25").unwrap(), ratio_of(1, 4));
    }

    #[test]
    fn malformed_rationals_are_rejected() {
        for text in ["", "/", "1/0", "abc", "1/2/3", "1..2", "e5", "0x10"] {
            assert!(parse_rational(text).is_err(), "{text}");
        }
    }

    #[test]
    fn prob_rejects_out_of_range() {
        assert!(Prob::new(3, 2).is_err());
        assert!(Prob::new(-1, 2).is_err());
        assert!(Prob::new(1, 0).is_err());
        assert_eq!(Prob::new(2, 4).unwrap().to_string(), "1/2");
    }

    #[test]
    fn odds_normalize() {
        let odds = Odds::new(10u32, 55u32).unwrap();
        assert_eq!(odds.to_string(), "2:11");
        assert_eq!(Odds::new(0u32, 7u32).unwrap().to_string(), "0:1");
        assert_eq!(Odds::new(5u32, 0u32).unwrap().to_string(), "1:0");
        assert!(Odds::new(0u32, 0u32).is_err());
    }

    #[test]
    fn ratio_serde_round_trip() {
        let lr = Ratio::Finite(ratio_of(997, 6));
        let text = serde_json::to_string(&lr).unwrap();
        assert_eq!(text, "\"997/6\"");
        assert_eq!(serde_json::from_str::<Ratio>(&text).unwrap(), lr);
        assert_eq!(serde_json::from_str::<Ratio>("\"inf\"").unwrap(), Ratio::Infinite);
    }

    #[test]
    fn f64_conversion_handles_huge_magnitudes() {
        let tiny = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 400));
        assert_eq!(rational_to_f64(&tiny), 0.0);
        let v = rational_to_f64(&ratio_of(997, 6));
        assert!((v - 166.166_666_666_666_67).abs() < 1e-12);
        let big = BigRational::from_integer(num_traits::pow(BigInt::from(10), 20));
        assert_eq!(rational_to_f64(&big), 1e20);
        let small = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 20));
        assert!((rational_to_f64(&small) / 1e-20 - 1.0).abs() < 1e-15);
    }
}
