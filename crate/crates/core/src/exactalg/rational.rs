use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number. Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `base^exp` for any integer exponent. Panics on `0^negative`.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let e = exp.unsigned_abs();
    let e32 = u32::try_from(e).expect("exponent too large");
    let num = base.numer().pow(e32);
    let den = base.denom().pow(e32);
    if exp > 0 {
        Rational::new(num, den)
    } else {
        assert!(!num.is_zero(), "zero raised to a negative power");
        Rational::new(den, num)
    }
}

/// Same as [`pow`] with an arbitrary-precision exponent.
pub fn pow_big(base: &Rational, exp: &BigInt) -> Rational {
    let e = exp.to_i64().expect("exponent too large");
    pow(base, e)
}

/// `p/q` form, denominator always printed.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short form used inside polynomial expressions: `p` for integers, `p/q` otherwise.
pub fn format_rational_short(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts `p`, `-p`, `p/q`; rejects zero denominators.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers() {
        assert_eq!(pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(pow(&rat(-2, 3), -3), rat(-27, 8));
        assert_eq!(pow(&rat(5, 1), 0), int(1));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&int(6)), "6/1");
        assert_eq!(format_rational_short(&rat(-1, 3)), "-1/3");
    }
}
