//! Exact rationals and the integer-row helpers used by the elimination code.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q` with decimal integers and `q > 0`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let bad = || Error::Schema(format!("malformed rational {s:?}"));
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let digits = |x: &str, signed: bool| {
        let body = if signed { x.strip_prefix('-').or_else(|| x.strip_prefix('+')).unwrap_or(x) } else { x };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(p, true) || !digits(q, false) {
        return Err(bad());
    }
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(p, q))
}

pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Scales a rational row to a primitive integer row spanning the same line.
pub fn to_int_row(row: &[Scalar]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    let mut out: Vec<BigInt> = row.iter().map(|x| (x.numer() * &l) / x.denom()).collect();
    make_primitive(&mut out);
    out
}

/// Divides by the content and makes the leading nonzero entry positive.
pub fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let neg = row.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    if !g.is_one() || neg {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x /= &g;
                if neg {
                    *x = -&*x;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-6/4").unwrap(), ratio(-3, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1/-2").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn formats_rationals() {
        assert_eq!(format_scalar(&ratio(4, 2)), "2");
        assert_eq!(format_scalar(&ratio(-1, 3)), "-1/3");
    }

    #[test]
    fn int_rows_are_primitive() {
        let r = to_int_row(&[ratio(1, 2), ratio(-3, 4), int(0)]);
        assert_eq!(r, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
        let r = to_int_row(&[int(0), int(-4), int(6)]);
        assert_eq!(r, vec![BigInt::from(0), BigInt::from(2), BigInt::from(-3)]);
    }
}
