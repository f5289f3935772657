//! Exact rational arithmetic, univariate polynomials over Q, Sturm-sequence
//! root isolation and bracketed high-precision refinement.

mod poly;
mod refine;
mod sturm;
mod surd;

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational;
pub use poly::{interpolate, rational_function_derivative, squarefree, RationalPolynomial};
pub use refine::{refine_root, RefinedRoot};
pub use sturm::{sturm_count, sturm_isolate, sturm_sequence, IsolatingInterval};
pub use surd::QuadSurd;

use crate::error::{Error, Result};

/// Commutative ring with integer and rational embeddings.
pub trait Ring: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn from_i64(v: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;

    fn zero_elem() -> Self {
        Self::from_i64(0)
    }

    fn one_elem() -> Self {
        Self::from_i64(1)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one_elem();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

pub trait Field: Ring + Div<Output = Self> {}

impl Ring for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_rational(q: &BigRational) -> Self {
        to_f64(q)
    }

    fn pow(&self, e: u32) -> Self {
        self.powi(e as i32)
    }
}

impl Field for f64 {}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn pow(&self, e: u32) -> Self {
        num_traits::pow(self.clone(), e as usize)
    }
}

impl Field for BigRational {}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| if q.is_positive() { f64::INFINITY } else { f64::NEG_INFINITY })
}

/// Exact conversion of a finite double.
pub fn from_f64(v: f64) -> Result<BigRational> {
    BigRational::from_float(v).ok_or_else(|| Error::Domain(format!("{v} is not finite")))
}

pub fn sign(q: &BigRational) -> i8 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// `"num/den"`.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Serde helper writing a rational as `"num/den"`.
pub fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_rational(q))
}

/// Serde helper for optional rationals.
pub fn ser_opt_rational<S: serde::Serializer>(q: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.collect_str(&format_rational(q)),
        None => s.serialize_none(),
    }
}

/// Parses `"a/b"`, an integer, or a finite decimal such as `"-1.25"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parameter(format!("cannot parse rational from {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let digits = format!("{}{}", ip.trim_start_matches(['-', '+']), fp);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let q = BigRational::new(n, d);
        return Ok(if neg { -q } else { q });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// Decimal rendering with `digits` significant digits, rounded half away
/// from zero. Uses exponent notation outside `[1e-5, 1e21)`.
pub fn to_decimal(q: &BigRational, digits: u32) -> String {
    let digits = digits.max(1);
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let a = q.abs();
    // exponent e with 10^e <= a < 10^(e+1)
    let mut e: i64 = (a.numer().bits() as i64 - a.denom().bits() as i64) * 30103 / 100000;
    let ten_pow = |e: i64| -> BigRational {
        if e >= 0 {
            BigRational::from_integer(pow10(e as u32))
        } else {
            BigRational::new(BigInt::one(), pow10((-e) as u32))
        }
    };
    while ten_pow(e) > a {
        e -= 1;
    }
    while ten_pow(e + 1) <= a {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = &a * ten_pow(shift);
    let (qt, rem) = scaled.numer().div_rem(scaled.denom());
    let mut m = qt;
    if BigInt::from(2) * rem >= *scaled.denom() {
        m += 1;
    }
    if m == pow10(digits) {
        m /= 10;
        e += 1;
    }
    let ds = m.to_string();
    let body = if (-5..21).contains(&e) {
        if e >= 0 {
            let e = e as usize;
            if e + 1 >= ds.len() {
                format!("{}{}", ds, "0".repeat(e + 1 - ds.len()))
            } else {
                format!("{}.{}", &ds[..e + 1], &ds[e + 1..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), ds)
        }
    } else {
        let frac = &ds[1..];
        if frac.is_empty() {
            format!("{}e{}", &ds[..1], e)
        } else {
            format!("{}.{}e{}", &ds[..1], frac, e)
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Nearest multiple of `2^-bits` (ties away from zero).
pub fn round_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits as usize;
    let scaled = q * BigRational::from_integer(scale.clone());
    let (fl, rem) = scaled.numer().div_mod_floor(scaled.denom());
    let twice = BigInt::from(2) * rem;
    let m = match twice.cmp(scaled.denom()) {
        Ordering::Less => fl,
        Ordering::Greater => fl + 1,
        Ordering::Equal => {
            if fl.is_negative() {
                fl
            } else {
                fl + 1
            }
        }
    };
    BigRational::new(m, scale)
}

/// `2^e` for possibly negative `e`.
pub fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// `n` log-spaced rationals in `(0, hi]`, from `hi / 10^decades` up to `hi`.
/// Each point is rounded to a short dyadic, the last one is `hi` exactly.
pub fn log_grid(hi: &BigRational, n: usize, decades: u32) -> Vec<BigRational> {
    let h = to_f64(hi);
    let lo = h / 10f64.powi(decades as i32);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        if i + 1 == n {
            out.push(hi.clone());
            break;
        }
        let t = if n == 1 { 1.0 } else { i as f64 / (n - 1) as f64 };
        let v = lo * (h / lo).powf(t);
        let q = round_dyadic(&BigRational::from_float(v).expect("finite"), 40);
        out.push(q);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_formatting() {
        assert_eq!(to_decimal(&ratio(1, 3), 5), "0.33333");
        assert_eq!(to_decimal(&ratio(2, 3), 5), "0.66667");
        assert_eq!(to_decimal(&ratio(-7, 2), 3), "-3.50");
        assert_eq!(to_decimal(&int(1443420), 7), "1443420");
        assert_eq!(to_decimal(&int(1443420), 3), "1440000");
        assert_eq!(to_decimal(&ratio(1, 4000000), 2), "2.5e-7");
        assert_eq!(to_decimal(&ratio(999, 1000), 2), "1.0");
        assert_eq!(to_decimal(&int(0), 4), "0");
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse_rational("660/73").unwrap(), ratio(660, 73));
        assert_eq!(parse_rational("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational("288").unwrap(), int(288));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
    }

    #[test]
    fn dyadic_rounding() {
        assert_eq!(round_dyadic(&ratio(1, 3), 2), ratio(1, 4));
        assert_eq!(round_dyadic(&ratio(3, 8), 2), ratio(2, 4));
        assert_eq!(round_dyadic(&ratio(-3, 8), 2), ratio(-2, 4));
    }

    #[test]
    fn grid_is_increasing_and_ends_at_hi() {
        let g = log_grid(&int(18), 100, 4);
        assert_eq!(g.len(), 100);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g[99], int(18));
        assert!(sign(&g[0]) > 0);
    }
}
