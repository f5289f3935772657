use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::system::{case2_metric, system_f, x2_polys};
use super::tables::{Term, F3_TABLE, G3_TABLE};
use super::SystemParams;
use crate::error::{Error, Result};
use crate::exactpoly::{int, interpolate, RationalPolynomial};

fn eval_terms(terms: &[Term], k1: u32, k: u32, p: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for &(c, e1, ek, ep) in terms {
        acc += BigInt::from(c)
            * num_traits::pow(BigInt::from(k1), e1 as usize)
            * num_traits::pow(BigInt::from(k), ek as usize)
            * num_traits::pow(BigInt::from(p), ep as usize);
    }
    acc
}

/// The degree-16 polynomial `F3` whose positive roots give the Case 2
/// metrics, from the expanded coefficient table.
pub fn f3_coeffs(params: &SystemParams) -> Result<RationalPolynomial> {
    let (k1, k, p) = params.triple();
    let coeffs: Vec<BigInt> = F3_TABLE.iter().map(|t| eval_terms(t, k1, k, p)).collect();
    if !coeffs[0].is_positive() || !coeffs[16].is_positive() {
        return Err(Error::TheoremViolation(format!(
            "F3 end coefficients must be positive for {params}: a0 = {}, a16 = {}",
            coeffs[0], coeffs[16]
        )));
    }
    Ok(RationalPolynomial::from_bigints(coeffs))
}

/// The cofactor `G3` with `F3 = k^2 (x - 1) G3` when `k1 = k`.
pub fn g3_coeffs(params: &SystemParams) -> Result<RationalPolynomial> {
    let (k1, k, p) = params.triple();
    if k1 != k {
        return Err(Error::UnsupportedShape(format!("G3 needs k1 = k, got {params}")));
    }
    let coeffs: Vec<BigInt> = G3_TABLE.iter().map(|t| eval_terms(t, k1, k, p)).collect();
    let g = RationalPolynomial::from_bigints(coeffs);
    if !g.coeff(0).is_negative() || !g.eval(&int(1)).is_positive() {
        return Err(Error::TheoremViolation(format!(
            "G3 sign conditions fail for {params}: b0 = {}, G3(1) = {}",
            g.coeff(0),
            g.eval(&int(1))
        )));
    }
    Ok(g)
}

/// `k^2 (x - 1) G3`.
pub fn g3_product(params: &SystemParams) -> Result<RationalPolynomial> {
    let g = g3_coeffs(params)?;
    let k = params.k as i64;
    let lin = RationalPolynomial::from_integers(&[-k * k, k * k]);
    Ok(&lin * &g)
}

const ELIM_SAMPLES: i64 = 30;
const ELIM_FIT: usize = 25;

/// Rebuilds `F3` (up to a constant) directly from the equations: the
/// remaining equation `f3` is evaluated on the Case 2 branch, multiplied by
/// `((k^2(p-1)+2)x^2 + k k1) * den(x2)^3` to clear denominators, and the resulting
/// polynomial is interpolated from exact samples and divided by `x^2`.
pub fn f3_via_elimination(params: &SystemParams) -> Result<RationalPolynomial> {
    let (k1, k, p) = (params.k1 as i64, params.k as i64, params.p as i64);
    let l = RationalPolynomial::from_integers(&[k * k1, 0, k * k * (p - 1) + 2]);
    let (_, d2) = x2_polys(params);
    let sample = |x: &BigRational| -> Result<BigRational> {
        let m = case2_metric(params, x)?;
        let f = system_f(params, &m)?;
        Ok(f[2].clone() * l.eval(x) * num_traits::pow(d2.eval(x), 3))
    };
    let pts: Vec<(BigRational, BigRational)> = (1..=ELIM_SAMPLES)
        .map(|i| {
            let x = int(i);
            sample(&x).map(|y| (x, y))
        })
        .collect::<Result<_>>()?;
    let poly = interpolate(&pts[..ELIM_FIT])?;
    for (x, y) in &pts[ELIM_FIT..] {
        if poly.eval(x) != *y {
            return Err(Error::EliminationMismatch(format!(
                "numerator for {params} is not a polynomial of degree < {ELIM_FIT}"
            )));
        }
    }
    if !poly.coeff(0).is_zero() || !poly.coeff(1).is_zero() {
        return Err(Error::EliminationMismatch(format!("numerator for {params} lacks the factor x^2")));
    }
    let x2 = RationalPolynomial::monomial(BigRational::one(), 2);
    let reduced = poly.div_exact(&x2)?;
    if reduced.degree() != Some(16) {
        return Err(Error::EliminationMismatch(format!(
            "eliminant for {params} has degree {:?}, expected 16",
            reduced.degree()
        )));
    }
    Ok(reduced)
}

/// Ratio `c` with `f3_via_elimination = c * f3_coeffs`, or an
/// elimination-mismatch error when the two are not proportional.
pub fn check_f3_table(params: &SystemParams) -> Result<BigRational> {
    let table = f3_coeffs(params)?;
    let elim = f3_via_elimination(params)?;
    elim.proportionality(&table)
        .ok_or_else(|| Error::EliminationMismatch(format!("coefficient table for {params} disagrees with elimination")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::sturm_isolate;

    fn prm(k1: u32, k: u32, p: u32) -> SystemParams {
        SystemParams::new(k1, k, p).unwrap()
    }

    #[test]
    fn end_coefficients_for_323() {
        let f = f3_coeffs(&prm(3, 2, 3)).unwrap();
        assert_eq!(f.coeff(0), int(1_443_420));
        assert_eq!(f.coeff(16), int(31_036_096));
        assert!(f.eval(&int(1)) < int(0));
    }

    #[test]
    fn g3_for_223() {
        let g = g3_coeffs(&prm(2, 2, 3)).unwrap();
        assert_eq!(g.eval(&int(1)), int(1_285_632));
        assert_eq!(g.coeff(0), int(-12_096));
        assert_eq!(g.degree(), Some(15));
        assert!(g3_coeffs(&prm(3, 2, 3)).is_err());
    }

    #[test]
    fn factorization_for_equal_blocks() {
        for (k, p) in [(2, 3), (3, 3), (2, 4), (4, 5)] {
            let pr = prm(k, k, p);
            assert_eq!(f3_coeffs(&pr).unwrap(), g3_product(&pr).unwrap());
        }
    }

    #[test]
    fn elimination_matches_table() {
        for (k1, k, p) in [(3, 2, 3), (2, 2, 3)] {
            let c = check_f3_table(&prm(k1, k, p)).unwrap();
            assert!(!c.is_zero());
        }
    }

    #[test]
    fn roots_for_323() {
        let f = f3_coeffs(&prm(3, 2, 3)).unwrap();
        assert_eq!(sturm_isolate(&f, &int(0), Some(&int(18))).unwrap().len(), 2);
        assert_eq!(sturm_isolate(&f, &int(0), Some(&int(1))).unwrap().len(), 1);
        assert_eq!(sturm_isolate(&f, &int(1), Some(&int(18))).unwrap().len(), 1);
    }
}
