//! Exact rational scalars. All arithmetic in the crate is exact; floating
//! point is never used.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Parses `"p/q"` or a plain integer, with an optional leading sign.
/// The result is auto-reduced with a positive denominator; an unreduced
/// fraction is accepted, a zero denominator is not.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::syntax(0, "empty rational"));
    }
    let (num_s, den_s) = match s.find('/') {
        Some(pos) => {
            let (a, b) = s.split_at(pos);
            (a, Some((&b[1..], pos + 1)))
        }
        None => (s, None),
    };
    let numer = parse_int(num_s, 0)?;
    let denom = match den_s {
        Some((d, pos)) => parse_int(d, pos)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Value(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

fn parse_int(s: &str, offset: usize) -> Result<BigInt> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::syntax(offset, "missing integer"));
    }
    t.parse::<BigInt>()
        .map_err(|_| Error::syntax(offset, format!("not an integer: {t:?}")))
}

/// Canonical rendering: reduced, positive denominator, `"p"` when the
/// denominator is 1 and `"p/q"` otherwise. `parse_rational` inverts it.
pub fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

pub fn is_nonnegative(r: &BigRational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_and_normalizes_sign() {
        assert_eq!(parse_rational("4/6").unwrap(), rational(2, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), rational(-2, 3));
        assert_eq!(parse_rational("4/-6").unwrap(), rational(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), integer(7));
        assert_eq!(parse_rational(" 3/2 ").unwrap(), rational(3, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/").is_err());
    }

    #[test]
    fn render_round_trips() {
        for text in ["0", "7", "-7", "2/3", "-2/3", "22/7"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(render_rational(&r), text);
            assert_eq!(parse_rational(&render_rational(&r)).unwrap(), r);
        }
        assert_eq!(render_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(render_rational(&parse_rational("14/7").unwrap()), "2");
    }
}
