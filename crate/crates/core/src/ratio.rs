//! Exact rational scalars and their `"p/q"` string form.
//!
//! All arithmetic in this crate is exact; no floating point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(num: i64) -> Q {
    BigRational::from_integer(BigInt::from(num))
}

pub fn q0() -> Q {
    Q::zero()
}

pub fn q1() -> Q {
    Q::one()
}

/// True iff `x` is an integer.
pub fn is_int(x: &Q) -> bool {
    x.is_integer()
}

/// True iff `x` is an odd integer.
pub fn is_odd_int(x: &Q) -> bool {
    x.is_integer() && (x.to_integer() % 2i32).abs() == BigInt::one()
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Renders `x` as `"p/q"` with `q > 0` and `gcd(p,q) = 1`.
pub fn q_to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn q_from_str(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n: BigInt = num
        .trim()
        .parse()
        .map_err(|e| format!("bad rational numerator {s:?}: {e}"))?;
    let d: BigInt = den
        .trim()
        .parse()
        .map_err(|e| format!("bad rational denominator {s:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for (n, d) in [(1, 2), (-3, 4), (0, 1), (7, 1), (10, -4)] {
            let x = q(n, d);
            assert_eq!(q_from_str(&q_to_string(&x)).unwrap(), x);
        }
        assert_eq!(q_from_str("5").unwrap(), qi(5));
        assert_eq!(q_from_str(" -2/6 ").unwrap(), q(-1, 3));
        assert!(q_from_str("1/0").is_err());
    }

    #[test]
    fn parity_predicates() {
        assert!(is_odd_int(&qi(-3)));
        assert!(!is_odd_int(&qi(4)));
        assert!(!is_odd_int(&q(1, 2)));
        assert!(is_int(&q(4, 2)));
    }
}
