use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::{squarefree, RationalPolynomial};
use super::sturm::IsolatingInterval;
use super::{format_rational, pow2, round_dyadic, sign, to_decimal};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RefinedRoot {
    /// Dyadic approximation (the root itself when it is rational).
    pub value: BigRational,
    /// Bracket with a sign change of the square-free part, `lo <= value <= hi`.
    pub lo: BigRational,
    pub hi: BigRational,
    pub precision_bits: u32,
    pub newton_steps: usize,
    pub bisection_steps: usize,
}

impl RefinedRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl Serialize for RefinedRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RefinedRoot", 4)?;
        st.serialize_field("decimal", &to_decimal(&self.value, 30))?;
        st.serialize_field("lo", &format_rational(&self.lo))?;
        st.serialize_field("hi", &format_rational(&self.hi))?;
        st.serialize_field("precision_bits", &self.precision_bits)?;
        st.end()
    }
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// Safeguarded Newton iteration on dyadic rationals: every Newton iterate
/// and a probe one step beyond it are used to shrink the exact bracket, with
/// bisection whenever Newton leaves the bracket or stalls. Stops once the
/// bracket is narrower than `2^-precision_bits`.
pub fn refine_root(
    poly: &RationalPolynomial,
    interval: &IsolatingInterval,
    precision_bits: u32,
) -> Result<RefinedRoot> {
    if let Some(r) = &interval.exact {
        return Ok(RefinedRoot {
            value: r.clone(),
            lo: r.clone(),
            hi: r.clone(),
            precision_bits,
            newton_steps: 0,
            bisection_steps: 0,
        });
    }
    let q = squarefree(poly)?;
    let dq = q.derivative();
    let mut lo = interval.lo.clone();
    let mut hi = interval.hi.clone();
    let s_lo = q.sign_at(&lo);
    if s_lo == 0 || s_lo == q.sign_at(&hi) {
        return Err(Error::Refinement { bits: 0, lo: format_rational(&lo), hi: format_rational(&hi) });
    }
    let target = pow2(-(precision_bits as i64));
    let grid = precision_bits + 16;
    let max_iter = 4 * precision_bits as usize + 400;
    let mut x = (&lo + &hi) * half();
    let (mut newton_steps, mut bisection_steps) = (0, 0);

    // Sign at `t`, or None when `t` is outside the bracket.
    let shrink = |t: &BigRational, lo: &mut BigRational, hi: &mut BigRational| -> Option<i8> {
        if t <= lo || t >= hi {
            return None;
        }
        let s = q.sign_at(t);
        if s == 0 {
            *lo = t.clone();
            *hi = t.clone();
        } else if s == s_lo {
            *lo = t.clone();
        } else {
            *hi = t.clone();
        }
        Some(s)
    };

    for _ in 0..max_iter {
        if &hi - &lo <= target {
            break;
        }
        let before = &hi - &lo;
        let d = dq.eval(&x);
        let mut used_newton = false;
        if !d.is_zero() {
            let xn = round_dyadic(&(&x - q.eval(&x) / d), grid);
            if let Some(s) = shrink(&xn, &mut lo, &mut hi) {
                used_newton = true;
                newton_steps += 1;
                if s == 0 {
                    break;
                }
                let mut step = (&xn - &x).abs();
                if step.is_zero() {
                    step = pow2(-(grid as i64));
                }
                let probe = if s == s_lo { &xn + &step } else { &xn - &step };
                if shrink(&probe, &mut lo, &mut hi) == Some(0) {
                    break;
                }
                x = xn;
            }
        }
        if !used_newton || (&hi - &lo) * BigRational::from_integer(2.into()) > before {
            let m = (&lo + &hi) * half();
            bisection_steps += 1;
            if shrink(&m, &mut lo, &mut hi) == Some(0) {
                break;
            }
            if !used_newton {
                x = (&lo + &hi) * half();
            }
        }
    }

    if &hi - &lo > target {
        return Err(Error::Refinement { bits: precision_bits, lo: format_rational(&lo), hi: format_rational(&hi) });
    }
    let value = (&lo + &hi) * half();
    let deg = poly.degree().unwrap_or(0) as u32;
    let xabs = value.abs().max(BigRational::one());
    let bound = pow2(-(precision_bits as i64) / 2) * poly.max_abs_coeff() * num_traits::pow(xabs, deg as usize);
    if poly.eval(&value).abs() > bound {
        return Err(Error::Refinement { bits: precision_bits, lo: format_rational(&lo), hi: format_rational(&hi) });
    }
    debug_assert!(sign(&(&hi - &lo)) >= 0);
    Ok(RefinedRoot { value, lo, hi, precision_bits, newton_steps, bisection_steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, sturm_isolate, to_decimal};

    #[test]
    fn sqrt2_to_128_bits() {
        let f = RationalPolynomial::from_integers(&[-2, 0, 1]);
        let iv = &sturm_isolate(&f, &int(0), Some(&int(10))).unwrap()[0];
        let r = refine_root(&f, iv, 128).unwrap();
        assert!(&r.hi - &r.lo <= pow2(-127));
        assert!(to_decimal(&r.value, 37).starts_with("1.41421356237309504880168872420969807"));
        assert!(&r.lo * &r.lo < int(2) && &r.hi * &r.hi > int(2));
        assert!(r.newton_steps > 0);
    }

    #[test]
    fn exact_root_is_returned_as_is() {
        let f = RationalPolynomial::from_integers(&[-1, 1]);
        let iv = &sturm_isolate(&f, &int(0), Some(&int(3))).unwrap()[0];
        let r = refine_root(&f, iv, 64).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.value, int(1));
    }

    #[test]
    fn deterministic() {
        let f = RationalPolynomial::from_integers(&[108, -168, 52]);
        let ivs = sturm_isolate(&f, &int(0), None).unwrap();
        for iv in &ivs {
            assert_eq!(refine_root(&f, iv, 200).unwrap(), refine_root(&f, iv, 200).unwrap());
        }
    }
}
