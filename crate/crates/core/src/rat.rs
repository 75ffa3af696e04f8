//! Arbitrary-precision rationals and the decimal/fraction conversions used
//! at the solver boundary.
//!
//! `Rat` is always stored in lowest terms with a positive denominator
//! (guaranteed by `num-rational`), so equality is plain structural equality.

use alloc::string::String;
use alloc::string::ToString;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Shorthand for `n/d`. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseRatError {
    Empty,
    InvalidDigit,
    ZeroDenominator,
    ExponentOverflow,
}

impl core::fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ParseRatError::Empty => write!(f, "empty numeric literal"),
            ParseRatError::InvalidDigit => write!(f, "invalid digit in numeric literal"),
            ParseRatError::ZeroDenominator => write!(f, "zero denominator"),
            ParseRatError::ExponentOverflow => write!(f, "exponent out of range"),
        }
    }
}

impl core::error::Error for ParseRatError {}

/// Parses `"num/den"`, a plain integer, or a decimal with optional
/// scientific exponent (`-1.25e-3`) into an exact rational.
///
/// Decimals are taken literally: `"1.14"` becomes `57/50`, not a float.
pub fn parse_rat(text: &str) -> Result<Rat, ParseRatError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRatError::Empty);
    }
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().map_err(|_| ParseRatError::InvalidDigit)?;
        let den: BigInt = d.trim().parse().map_err(|_| ParseRatError::InvalidDigit)?;
        if den.is_zero() {
            return Err(ParseRatError::ZeroDenominator);
        }
        return Ok(Rat::new(num, den));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<Rat, ParseRatError> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = s[pos + 1..]
                .parse()
                .map_err(|_| ParseRatError::ExponentOverflow)?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (Sign::Minus, &mantissa[1..]),
        Some(b'+') => (Sign::Plus, &mantissa[1..]),
        _ => (Sign::Plus, mantissa),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ParseRatError::Empty);
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRatError::InvalidDigit);
    }
    let mut num: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().map_err(|_| ParseRatError::InvalidDigit)?
    };
    let ten = BigInt::from(10u8);
    for b in frac_part.bytes() {
        num = num * &ten + BigInt::from(b - b'0');
    }
    if sign == Sign::Minus {
        num = -num;
    }
    let shift = exp as i64 - frac_part.len() as i64;
    let mut value = Rat::from_integer(num);
    if shift > 0 {
        value *= Rat::from_integer(ten.pow(shift as u32));
    } else if shift < 0 {
        value /= Rat::from_integer(ten.pow((-shift) as u32));
    }
    Ok(value)
}

/// Best rational approximation to `x` among all fractions with denominator
/// at most `max_den`, by walking the continued-fraction convergents and the
/// final run of semiconvergents.
///
/// This is how float solver output is snapped back to candidate exact
/// values; the result is a *candidate* until a certificate proves it.
pub fn best_approx(x: &Rat, max_den: &BigInt) -> Rat {
    assert!(max_den >= &BigInt::one(), "denominator cap must be >= 1");
    if x.denom() <= max_den {
        return x.clone();
    }
    if x.is_negative() {
        // The continued-fraction walk below assumes floor(), which
        // to_integer() only is for nonnegative values.
        return -best_approx(&-x, max_den);
    }
    // Continued fraction state: p/q convergents of x.
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (x.to_integer(), BigInt::one());
    let mut rem = x - Rat::from_integer(p1.clone());
    while !rem.is_zero() {
        let inv = rem.recip();
        let a = inv.to_integer();
        rem = inv - Rat::from_integer(a.clone());
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if &q2 > max_den {
            // Largest semiconvergent with denominator within the cap.
            let t = (max_den - &q0) / &q1;
            let sp = &t * &p1 + &p0;
            let sq = &t * &q1 + &q0;
            let conv = Rat::new(p1, q1);
            if sq.is_zero() {
                return conv;
            }
            let semi = Rat::new(sp, sq);
            // t >= ceil(a/2) is required for a semiconvergent to beat the
            // previous convergent; comparing distances settles ties too.
            return if (x - &semi).abs() < (x - &conv).abs() {
                semi
            } else {
                conv
            };
        }
        (p0, q0) = (p1, q1);
        (p1, q1) = (p2, q2);
    }
    Rat::new(p1, q1)
}

/// Formats `x` as a decimal with exactly `digits` fractional digits,
/// rounding half away from zero. Used for report output.
pub fn to_decimal_string(x: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10u8).pow(digits);
    let scaled = x * Rat::from_integer(scale.clone());
    let num = scaled.numer() * 2 + scaled.denom() * if x.is_negative() { -1 } else { 1 };
    let rounded = num / (scaled.denom() * 2);
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    let (int_part, frac_part) = (&abs / &scale, &abs % &scale);
    let mut frac_str = frac_part.to_string();
    while (frac_str.len() as u32) < digits {
        frac_str.insert(0, '0');
    }
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        alloc::format!("{sign}{int_part}")
    } else {
        alloc::format!("{sign}{int_part}.{frac_str}")
    }
}

/// `true` iff `x` has a terminating decimal expansion (denominator 2^a 5^b).
pub fn has_finite_decimal(x: &Rat) -> bool {
    let mut d = x.denom().clone();
    for p in [2u8, 5u8] {
        let p = BigInt::from(p);
        while (&d % &p).is_zero() {
            d /= &p;
        }
    }
    d.is_one()
}

/// Exact decimal expansion for a rational with `has_finite_decimal`.
pub fn to_exact_decimal(x: &Rat) -> String {
    debug_assert!(has_finite_decimal(x));
    let mut digits = 0u32;
    let mut d = x.denom().clone();
    let (two, five) = (BigInt::from(2u8), BigInt::from(5u8));
    while (&d % &two).is_zero() {
        d /= &two;
        digits += 1;
    }
    let mut fives = 0u32;
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    digits = digits.max(fives);
    if digits == 0 {
        return x.numer().to_string();
    }
    to_decimal_string(x, digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rat("135/119").unwrap(), frac(135, 119));
        assert_eq!(parse_rat("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rat("1.14").unwrap(), frac(57, 50));
        assert_eq!(parse_rat("-1.25e-3").unwrap(), frac(-1, 800));
        assert_eq!(parse_rat("2.5E+2").unwrap(), int(250));
        assert_eq!(parse_rat(".5").unwrap(), frac(1, 2));
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
    }

    #[test]
    fn best_approx_recovers_table_values() {
        // Truncated decimal printed by a float solver for 135/119.
        let x = parse_rat("1.134453781").unwrap();
        assert_eq!(best_approx(&x, &BigInt::from(1_000_000)), frac(135, 119));
        // Exact short decimal stays what it is.
        let y = parse_rat("1.14").unwrap();
        assert_eq!(best_approx(&y, &BigInt::from(1_000_000)), frac(57, 50));
        // Near-zero noise snaps to zero.
        let z = parse_rat("1e-12").unwrap();
        assert_eq!(best_approx(&z, &BigInt::from(1_000_000)), int(0));
    }

    #[test]
    fn best_approx_handles_negatives_and_small_caps() {
        let x = parse_rat("-1.134453781").unwrap();
        assert_eq!(best_approx(&x, &BigInt::from(1_000_000)), frac(-135, 119));
        let pi_ish = parse_rat("3.14159265358979").unwrap();
        assert_eq!(best_approx(&pi_ish, &BigInt::from(150)), frac(355, 113));
        assert_eq!(best_approx(&pi_ish, &BigInt::from(7)), frac(22, 7));
        assert_eq!(best_approx(&pi_ish, &BigInt::from(1)), int(3));
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(to_decimal_string(&frac(135, 119), 6), "1.134454");
        assert_eq!(to_decimal_string(&frac(17, 15), 6), "1.133333");
        assert_eq!(to_decimal_string(&frac(-1, 2), 2), "-0.50");
        assert_eq!(to_decimal_string(&int(3), 0), "3");
        assert!(has_finite_decimal(&frac(3, 8)));
        assert!(!has_finite_decimal(&frac(1, 3)));
        assert_eq!(to_exact_decimal(&frac(3, 8)), "0.375");
        assert_eq!(to_exact_decimal(&int(7)), "7");
        assert_eq!(to_exact_decimal(&frac(57, 50)), "1.14");
    }
}
