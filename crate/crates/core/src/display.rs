//! Decimal rendering of exact values.
//!
//! Rounding is done on the exact rational (half away from zero), so a
//! displayed value is never perturbed by an intermediate `f64`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::Ratio;

/// Default number of significant figures in reports.
pub const DEFAULT_SIG_FIGS: usize = 3;

/// A value rounded to a fixed number of significant figures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rounded {
    negative: bool,
    /// Exactly `sig` digits, first digit non-zero (empty for zero).
    digits: String,
    /// Decimal exponent of the first digit.
    exponent: i64,
}

impl Rounded {
    pub fn new(value: &BigRational, sig: usize) -> Self {
        assert!(sig >= 1, "need at least one significant figure");
        if value.is_zero() {
            return Rounded {
                negative: false,
                digits: String::new(),
                exponent: 0,
            };
        }
        let negative = value.is_negative();
        let magnitude = value.abs();
        let mut exponent = decimal_exponent(&magnitude);
        let mut mantissa = round_scaled(&magnitude, sig as i64 - 1 - exponent);
        if mantissa == pow10(sig as u32) {
            mantissa /= 10;
            exponent += 1;
        }
        Rounded {
            negative,
            digits: mantissa.to_string(),
            exponent,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    fn sign(&self) -> &'static str {
        if self.negative {
            "-"
        } else {
            ""
        }
    }

    fn mantissa(&self, trim: bool) -> String {
        let (head, tail) = self.digits.split_at(1);
        let tail = if trim { tail.trim_end_matches('0') } else { tail };
        if tail.is_empty() {
            format!("{}{head}", self.sign())
        } else {
            format!("{}{head}.{tail}", self.sign())
        }
    }

    /// Positional notation, e.g. `0.201` or `166`.
    pub fn positional(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sig = self.digits.len() as i64;
        if self.exponent < 0 {
            let zeros = "0".repeat((-self.exponent - 1) as usize);
            format!("{}0.{zeros}{}", self.sign(), self.digits)
        } else if self.exponent + 1 >= sig {
            let zeros = "0".repeat((self.exponent + 1 - sig) as usize);
            format!("{}{}{zeros}", self.sign(), self.digits)
        } else {
            let (int, frac) = self.digits.split_at(self.exponent as usize + 1);
            format!("{}{int}.{frac}", self.sign())
        }
    }

    /// Machine notation, e.g. `6.42e14`.
    pub fn e_notation(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        format!("{}e{}", self.mantissa(false), self.exponent)
    }

    /// Human notation, e.g. `6.42×10^14`; `trim` drops trailing zeros (`4×10^6`).
    pub fn times_ten(&self, trim: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        format!("{}×10^{}", self.mantissa(trim), self.exponent)
    }
}

/// Exact `floor(log10(x))` for `x > 0`.
fn decimal_exponent(x: &BigRational) -> i64 {
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    // Estimate from digit counts, then correct.
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    loop {
        if *x < pow10_rational(e) {
            e -= 1;
        } else if *x >= pow10_rational(e + 1) {
            e += 1;
        } else {
            return e;
        }
    }
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u8), e as usize)
}

fn pow10_rational(e: i64) -> BigRational {
    let p = pow10(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `round(x · 10^scale)`, ties away from zero, for `x ≥ 0`.
fn round_scaled(x: &BigRational, scale: i64) -> BigInt {
    let scaled = x * pow10_rational(scale);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    if r * 2u8 >= *scaled.denom() {
        q + 1u8
    } else {
        q
    }
}

/// Display rule used across reports: values at or beyond `10^4` in
/// magnitude, or at or below `10^-4`, use scientific notation; everything
/// else is positional with trailing fractional zeros dropped. Both at `sig`
/// significant figures.
pub fn decimal(value: &BigRational, sig: usize) -> String {
    let rounded = Rounded::new(value, sig);
    if rounded.is_zero() {
        return "0".into();
    }
    if uses_scientific(value, &rounded) {
        rounded.e_notation()
    } else {
        trim_fraction(rounded.positional())
    }
}

/// Decided on the rounded value at the top end, so 9999 at 3 s.f. is `1.00e4`.
fn uses_scientific(value: &BigRational, rounded: &Rounded) -> bool {
    rounded.exponent() >= 4 || value.abs() <= pow10_rational(-4)
}

fn trim_fraction(text: String) -> String {
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    }
}

/// Like [`decimal`] but with `×10^` notation for people.
pub fn human(value: &BigRational, sig: usize) -> String {
    if value.is_zero() {
        return "0".into();
    }
    let rounded = Rounded::new(value, sig);
    if uses_scientific(value, &rounded) {
        rounded.times_ten(false)
    } else {
        trim_fraction(rounded.positional())
    }
}

pub fn ratio_decimal(ratio: &Ratio, sig: usize) -> String {
    match ratio {
        Ratio::Finite(value) => decimal(value, sig),
        Ratio::Infinite => "inf".into(),
    }
}

/// Convert a machine decimal (`6.42e14`) to the human form (`6.42×10^14`).
pub fn e_to_human(text: &str) -> String {
    match text.split_once('e') {
        Some((mantissa, exponent)) => format!("{mantissa}×10^{exponent}"),
        None => text.to_string(),
    }
}
