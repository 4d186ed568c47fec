//! Arbitrary-precision rationals and the few helpers the rest of the crate
//! needs on top of `num-rational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact scalar used for every construction coefficient.
pub type Exact = BigRational;

pub fn int(n: i64) -> Exact {
    Exact::from_integer(BigInt::from(n))
}

/// `p/q`; panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Exact {
    Exact::new(BigInt::from(p), BigInt::from(q))
}

/// Exact binary value of a finite float.
pub fn from_f64(x: f64) -> Result<Exact> {
    Exact::from_float(x).ok_or_else(|| Error::InvalidInput(format!("non-finite value {x}")))
}

pub fn to_f64(x: &Exact) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Numerator/denominator beyond the f64 range: shift both into range first.
    let n_bits = x.numer().bits() as i64;
    let d_bits = x.denom().bits() as i64;
    let shift_n = (n_bits - 1000).max(0);
    let shift_d = (d_bits - 1000).max(0);
    let n = (x.numer() >> shift_n as usize).to_f64().unwrap_or(0.0);
    let d = (x.denom() >> shift_d as usize).to_f64().unwrap_or(1.0);
    (n / d) * 2f64.powi((shift_n - shift_d) as i32)
}

/// Parses `"p/q"`, integers and decimal strings (optionally with an exponent)
/// into exact rationals; `"0.1"` becomes `1/10`, not the nearest float.
pub fn parse(s: &str) -> Result<Exact> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("malformed rational {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = parse(p)?;
        let q = parse(q)?;
        if q.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
        }
        return Ok(p / q);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut value = Exact::from_integer(all.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    if scale >= 0 {
        value *= Exact::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Exact::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if negative { -value } else { value })
}

pub fn floor(x: &Exact) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// The rational with the smallest denominator (then smallest numerator) in
/// the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Exact, hi: &Exact) -> Exact {
    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Exact::zero()
    }
}

fn simplest_positive(lo: &Exact, hi: &Exact) -> Exact {
    let fl = Exact::from_integer(floor(lo));
    if &fl == lo {
        return fl;
    }
    let next = &fl + Exact::one();
    if &next <= hi {
        return next;
    }
    // lo and hi share the integer part; recurse on the reciprocals of the
    // fractional parts (continued-fraction descent).
    let inner = simplest_positive(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// Decimal rendering with `digits` digits after the point (truncated toward zero).
pub fn to_decimal(x: &Exact, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (x.numer() * &scale) / x.denom();
    let negative = scaled.is_negative();
    let s = scaled.abs().to_string();
    let s = format!("{s:0>width$}", width = digits + 1);
    let (i, f) = s.split_at(s.len() - digits);
    format!("{}{i}.{f}", if negative { "-" } else { "" })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals_exactly() {
        assert_eq!(parse("240/13").unwrap(), ratio(240, 13));
        assert_eq!(parse("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse("2.5e2").unwrap(), int(250));
        assert_eq!(parse("1e-3").unwrap(), ratio(1, 1000));
        assert_eq!(parse("7").unwrap(), int(7));
        assert_eq!(parse(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse("1.5/0.5").unwrap(), int(3));
    }

    #[test]
    fn rejects_malformed_input() {
        for s in ["", "abc", "1/0", "1.2.3", "--1", "e5", "1/"] {
            assert!(parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn simplest_rational_recovers_small_fractions() {
        let eps = ratio(1, 1_000_000_000);
        for (p, q) in [(2, 1), (1, 2), (5, 1), (240, 13), (-3, 4), (0, 1)] {
            let x = ratio(p, q);
            assert_eq!(simplest_between(&(&x - &eps), &(&x + &eps)), x);
        }
        assert_eq!(simplest_between(&ratio(3, 10), &ratio(4, 10)), ratio(1, 3));
    }

    #[test]
    fn huge_rationals_convert_to_float() {
        let den = num_traits::pow(BigInt::from(10), 400);
        let big = Exact::new(&den * 3 + 1, den);
        assert!((to_f64(&big) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&ratio(1, 3), 5), "0.33333");
        assert_eq!(to_decimal(&ratio(-7, 2), 2), "-3.50");
    }
}
