use num_bigint::BigInt;
use num_rational::BigRational;

use super::SystemParams;
use crate::curvature::SymmetricMetric;
use crate::error::{Error, Result};
use crate::exactpoly::{Field, RationalPolynomial, Ring};

struct Consts {
    k1: i64,
    k: i64,
    p: i64,
}

impl Consts {
    fn of(params: &SystemParams) -> Self {
        Consts { k1: params.k1 as i64, k: params.k as i64, p: params.p as i64 }
    }
}

fn c<T: Ring>(v: i64) -> T {
    T::from_i64(v)
}

fn require_positive<T: Ring + PartialOrd>(v: &T, what: &str) -> Result<()> {
    if *v > T::zero_elem() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be positive")))
    }
}

/// The five normalized Einstein equations `f1..f5` (requires `x23 = 1`).
pub fn system_f<T: Ring + PartialEq>(params: &SystemParams, m: &SymmetricMetric<T>) -> Result<[T; 5]> {
    if m.x23 != T::one_elem() {
        return Err(Error::Domain("system is normalized by x23 = 1".into()));
    }
    let Consts { k1, k, p } = Consts::of(params);
    let SymmetricMetric { y1, y2, x1, x2, x12, .. } = m.clone();
    let n = k * p - k + k1;
    let s = x12.clone() * x12.clone();
    let x2s = x2.clone() * x2.clone();

    let f1 = c::<T>(-k * k * k1 * (p - 1) * (p + 1)) * s.clone()
        + c::<T>(2 * (k - 1) * (k + 1) * k1 * (p - 1)) * s.clone() * x2.clone()
        + c::<T>(2 * k * k1 * (p - 1) * n) * x12.clone()
        - c::<T>(k * (k1 - 1) * (k1 + 1) * (p - 1)) * x1.clone()
        - c::<T>((k - 1) * (k + 1) * k1 * (p - 1)) * x2.clone()
        - c::<T>(n) * y1.clone()
        - c::<T>(k * k1 * (p - 1) * (k * p - 2 * k + k1))
        + c::<T>(2 * k1 * (p - 1)) * s.clone() * y2.clone()
        - c::<T>(k1 * (p - 2)) * y2.clone();
    let f2 = -(c::<T>(k * k * p - 2) * s.clone() * x2s.clone()) + c::<T>(k * k * (p + 1)) * s.clone() * x2.clone()
        - c::<T>(k * k) * s.clone()
        - c::<T>(k * k1) * x2s.clone()
        + c::<T>(k * k1) * x2.clone()
        - c::<T>(2) * s.clone() * x2.clone() * y2.clone();
    let f3 = c::<T>(k * (p - 1)) * x1.clone() * x1.clone() * x2.clone()
        - c::<T>(k * (p - 2)) * x1.clone() * s.clone() * x2s.clone()
        - c::<T>(k) * x1.clone() * s.clone()
        - c::<T>(k1) * x1.clone() * x2s.clone()
        + c::<T>(k1) * s.clone() * x2.clone();
    let f4 = -(c::<T>(n) * x2.clone() * y1.clone())
        + c::<T>(k * (p - 2)) * s.clone() * x2s.clone()
        + c::<T>(k) * s.clone()
        + c::<T>(k1) * x2s.clone();
    let f5 = c::<T>(n) * y1 - c::<T>(k * (p - 1)) * s * y2.clone() - c::<T>(k1) * y2;
    Ok([f1, f2, f3, f4, f5])
}

/// Positive factors `d_i` with `f_i = d_i * (Ricci difference)` for the
/// differences `r12-r23, r23-r2, r1-r2, r2-rr1, rr1-rr2` (at `x23 = 1`).
pub fn ricci_difference_factors<T: Ring>(params: &SystemParams, m: &SymmetricMetric<T>) -> [T; 5] {
    let Consts { k1, k, p } = Consts::of(params);
    let four_n = c::<T>(4 * (k * p - k + k1));
    let s = m.x12.clone() * m.x12.clone();
    [
        four_n.clone() * c::<T>(k * k1 * (p - 1)) * s.clone(),
        four_n.clone() * c::<T>(k) * s.clone() * m.x2.clone(),
        four_n.clone() * m.x1.clone() * s.clone() * m.x2.clone(),
        four_n.clone() * s.clone() * m.x2.clone(),
        four_n * s,
    ]
}

/// `(y1, y2)` solving `f4 = f5 = 0` for given `x12, x2`.
pub fn back_substitute_y<T: Field + PartialOrd>(params: &SystemParams, x12: &T, x2: &T) -> Result<(T, T)> {
    require_positive(x12, "x12")?;
    require_positive(x2, "x2")?;
    let Consts { k1, k, p } = Consts::of(params);
    let s = x12.clone() * x12.clone();
    let num = c::<T>(k * (p - 2)) * s.clone() * x2.clone() * x2.clone()
        + c::<T>(k) * s.clone()
        + c::<T>(k1) * x2.clone() * x2.clone();
    let y1 = num.clone() / (x2.clone() * c::<T>(k * (p - 1) + k1));
    let y2 = num / (x2.clone() * (c::<T>(k * (p - 1)) * s + c::<T>(k1)));
    Ok((y1, y2))
}

/// Numerator and denominator of `x2` as polynomials in `x12`.
pub fn x2_polys(params: &SystemParams) -> (RationalPolynomial, RationalPolynomial) {
    let Consts { k1, k, p } = Consts::of(params);
    let num = RationalPolynomial::from_integers(&[0, 0, k * k1, 0, k * k * (p - 1) + 2]);
    let den = RationalPolynomial::from_integers(&[k1 * k1, 0, k * k1 * (2 * p - 1), 0, k * k * (p - 1) * p - 2]);
    (num, den)
}

/// `x2` as a function of `x12` on the Case 2 branch.
pub fn x2_of_x12<T: Field + PartialOrd>(params: &SystemParams, x12: &T) -> Result<T> {
    require_positive(x12, "x12")?;
    let (num, den) = x2_polys(params);
    Ok(num.eval_in(x12) / den.eval_in(x12))
}

/// `1 - x2` in factored form: numerator factors and the common denominator.
pub fn one_minus_x2<T: Field + PartialOrd>(params: &SystemParams, x12: &T) -> Result<(T, T, T)> {
    require_positive(x12, "x12")?;
    let Consts { k1, k, p } = Consts::of(params);
    let s = x12.clone() * x12.clone();
    let a = s.clone() * c::<T>(k * (p - 1) - 2) + c::<T>(k1);
    let b = s * c::<T>(k * (p - 1) + 2) + c::<T>(k1);
    let (_, den) = x2_polys(params);
    Ok((a, b, den.eval_in(x12)))
}

/// `x1` from `x12` and `x2` on the Case 2 branch.
pub fn x1_from(params: &SystemParams, x12: &BigRational, x2: &BigRational) -> Result<BigRational> {
    x1_generic(params, x12, x2)
}

pub(crate) fn x1_generic<T: Field + PartialOrd>(params: &SystemParams, x12: &T, x2: &T) -> Result<T> {
    require_positive(x12, "x12")?;
    require_positive(x2, "x2")?;
    let Consts { k1, k, p } = Consts::of(params);
    if k1 * k1 == 1 {
        return Err(Error::Parameter("x1 requires k1 >= 2".into()));
    }
    let s = x12.clone() * x12.clone();
    let s2 = s.clone() * s.clone();
    let x2s = x2.clone() * x2.clone();
    let l = c::<T>(k * (p - 1)) * s.clone() + c::<T>(k1);

    let inner = -(s2 * c::<T>(-2 * (k * k + 1) * k1 + k * p * (2 * k * k1 - 1) + 2 * k))
        + c::<T>(k * k1 * k1)
        + c::<T>(k * k1 * (k * p - k - 2 * k1)) * s.clone();
    let num = -(x2s * inner) - c::<T>(k * k1 * (p + 1)) * s.clone() * x2.clone() * l.clone()
        + c::<T>(2 * k1 * (k * (p - 1) + k1)) * x12.clone() * x2.clone() * l.clone()
        - c::<T>(k1 * (k * (p - 2) + k1)) * x2.clone() * l.clone()
        + s.clone() * (-(s * c::<T>(k - 2 * k1)) - c::<T>(k1));
    let den = c::<T>(k1 * k1 - 1) * x2.clone() * l;
    Ok(num / den)
}

/// `x1` as a function of `x12` (with `x2` from [`x2_of_x12`]).
pub fn x1_of_x12<T: Field + PartialOrd>(params: &SystemParams, x12: &T) -> Result<T> {
    let x2 = x2_of_x12(params, x12)?;
    x1_generic(params, x12, &x2)
}

/// Full Case 2 metric at `x12` (with `x23 = 1`); coefficients are not
/// checked for positivity.
pub fn case2_metric<T: Field + PartialOrd>(params: &SystemParams, x12: &T) -> Result<SymmetricMetric<T>> {
    let x2 = x2_of_x12(params, x12)?;
    let x1 = x1_generic(params, x12, &x2)?;
    let (y1, y2) = back_substitute_y(params, x12, &x2)?;
    Ok(SymmetricMetric { y1, y2, x1, x2, x12: x12.clone(), x23: T::one_elem() })
}

/// The Case 1 quadratic in `x12`.
pub fn q1_poly(params: &SystemParams) -> RationalPolynomial {
    let Consts { k1, k, p } = Consts::of(params);
    let a = k * (p - 1) * (k * k1 * (p - 1) + 1);
    let b = -2 * k * k1 * (p - 1) * (k1 + k * (p - 1));
    let c0 = k1 * (k * k * (p - 1) * (p - 1) + k * k1 * (p - 1) + k1 * k1 - 1);
    RationalPolynomial::from_integers(&[c0, b, a])
}

/// Case 1 metric: `x2 = y2 = x23 = 1`, `x1 = k1/(k(p-1))`.
pub fn case1_metric<T: Field>(params: &SystemParams, x12: &T) -> SymmetricMetric<T> {
    let Consts { k1, k, p } = Consts::of(params);
    let s = x12.clone() * x12.clone();
    let y1 = (c::<T>(k * (p - 1)) * s + c::<T>(k1)) / c::<T>(k * (p - 1) + k1);
    SymmetricMetric {
        y1,
        y2: T::one_elem(),
        x1: c::<T>(k1) / c::<T>(k * (p - 1)),
        x2: T::one_elem(),
        x12: x12.clone(),
        x23: T::one_elem(),
    }
}

/// Numerator and denominator of the Einstein constant on the Case 2 branch.
pub fn lambda_polys(params: &SystemParams) -> (RationalPolynomial, RationalPolynomial) {
    let Consts { k1, k, p } = Consts::of(params);
    let l = RationalPolynomial::from_integers(&[k1, 0, k * (p - 1)]);
    let sextic = RationalPolynomial::from_integers(&[
        k * k1 * k1 * k1,
        0,
        3 * k * k * k1 * k1 * p,
        0,
        3 * k * k * k * k1 * (p - 1) * (p + 1),
        0,
        k.pow(4) * (p - 1) * (p - 1) * (p + 2) - 8 * k * k + 4,
    ]);
    let num = &l * &sextic;
    let d1 = RationalPolynomial::from_integers(&[0, 0, 4 * (k * (p - 1) + k1)]);
    let d2 = RationalPolynomial::from_integers(&[k * k1, 0, k * k * (p - 1) + 2]);
    let (_, d3) = x2_polys(params);
    let den = &(&d1 * &d2) * &d3;
    (num, den)
}

/// Einstein constant of the Case 2 metric at `x12` (normalized by `x23 = 1`).
pub fn einstein_constant<T: Field + PartialOrd>(params: &SystemParams, x12: &T) -> Result<T> {
    require_positive(x12, "x12")?;
    let (num, den) = lambda_polys(params);
    Ok(num.eval_in(x12) / den.eval_in(x12))
}

/// The abscissa `β` separating the two middle roots for large `k1`.
pub fn beta(params: &SystemParams) -> BigRational {
    let Consts { k1, k, p } = Consts::of(params);
    let b = |v: i64| BigInt::from(v);
    let num = b(k * k * (p - 1) + 2) * b(k * k * (p - 1) * p - 2) * b(k1);
    let den = b(k * (p - 1)) * b(k.pow(4) * (p - 1) * (p - 1) * (p + 2) - 8 * k * k + 4);
    BigRational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::ricci_components_symmetric;
    use crate::exactpoly::{int, ratio, QuadSurd};
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn prm(k1: u32, k: u32, p: u32) -> SystemParams {
        SystemParams::new(k1, k, p).unwrap()
    }

    fn rand_q(rng: &mut ChaCha8Rng) -> BigRational {
        ratio(rng.random_range(1..400), rng.random_range(1..200))
    }

    #[test]
    fn bi_invariant_is_a_zero() {
        for (k1, k, p) in [(2, 2, 3), (3, 2, 3), (5, 3, 4)] {
            let f = system_f(&prm(k1, k, p), &SymmetricMetric::<BigRational>::ones()).unwrap();
            assert!(f.iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn f5_at_y1_two() {
        let mut m = SymmetricMetric::<BigRational>::ones();
        m.y1 = int(2);
        let f = system_f(&prm(3, 2, 3), &m).unwrap();
        assert_eq!(f[4], int(7));
    }

    #[test]
    fn requires_normalization() {
        let mut m = SymmetricMetric::<BigRational>::ones();
        m.x23 = int(2);
        assert!(system_f(&prm(3, 2, 3), &m).is_err());
    }

    #[test]
    fn equations_are_scaled_ricci_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (k1, k, p) in [(3, 2, 3), (2, 2, 3), (4, 3, 4)] {
            let pr = prm(k1, k, p);
            for _ in 0..20 {
                let m = SymmetricMetric {
                    y1: rand_q(&mut rng),
                    y2: rand_q(&mut rng),
                    x1: rand_q(&mut rng),
                    x2: rand_q(&mut rng),
                    x12: rand_q(&mut rng),
                    x23: int(1),
                };
                let r = ricci_components_symmetric(k1, k, p, &m).unwrap();
                let diffs = [&r.r12 - &r.r23, &r.r23 - &r.r2, &r.r1 - &r.r2, &r.r2 - &r.rr1, &r.rr1 - &r.rr2];
                let f = system_f(&pr, &m).unwrap();
                let d = ricci_difference_factors(&pr, &m);
                for i in 0..5 {
                    assert_eq!(f[i], &d[i] * &diffs[i], "f{} at {:?}", i + 1, (k1, k, p));
                }
            }
        }
    }

    #[test]
    fn y_back_substitution() {
        let pr = prm(3, 2, 3);
        assert_eq!(back_substitute_y(&pr, &int(1), &int(1)).unwrap(), (int(1), int(1)));
        assert_eq!(back_substitute_y(&pr, &int(2), &int(1)).unwrap().0, ratio(19, 7));
        let (x12, x2) = (ratio(5, 3), ratio(2, 7));
        let (y1, y2) = back_substitute_y(&pr, &x12, &x2).unwrap();
        let m = SymmetricMetric { y1, y2, x1: int(3), x2, x12, x23: int(1) };
        let f = system_f(&pr, &m).unwrap();
        assert!(f[3].is_zero() && f[4].is_zero());
        assert!(back_substitute_y(&pr, &int(0), &int(1)).is_err());
    }

    #[test]
    fn x2_values() {
        assert_eq!(x2_of_x12(&prm(2, 2, 3), &int(1)).unwrap(), ratio(7, 23));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (k1, k, p) in [(2, 2, 3), (3, 2, 3), (48, 2, 3), (4, 3, 4)] {
            let pr = prm(k1, k, p);
            for _ in 0..10 {
                let x = rand_q(&mut rng);
                let x2 = x2_of_x12(&pr, &x).unwrap();
                assert!(x2 > int(0) && x2 < int(1));
                let (a, b, d) = one_minus_x2(&pr, &x).unwrap();
                assert_eq!(int(1) - &x2, &a * &b / &d);
            }
        }
    }

    #[test]
    fn case2_substitution_kills_four_equations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (k1, k, p) in [(3, 2, 3), (2, 2, 3), (5, 3, 3)] {
            let pr = prm(k1, k, p);
            for _ in 0..10 {
                let m = case2_metric(&pr, &rand_q(&mut rng)).unwrap();
                let f = system_f(&pr, &m).unwrap();
                for i in [0, 1, 3, 4] {
                    assert!(f[i].is_zero(), "f{} nonzero for {:?}", i + 1, (k1, k, p));
                }
            }
        }
    }

    #[test]
    fn f3_at_one_for_323_is_negative() {
        let pr = prm(3, 2, 3);
        let m = case2_metric(&pr, &int(1)).unwrap();
        let f = system_f(&pr, &m).unwrap();
        assert!(f[2] < int(0));
    }

    #[test]
    fn q1_for_323() {
        assert_eq!(q1_poly(&prm(3, 2, 3)), RationalPolynomial::from_integers(&[108, -168, 52]));
        for (k1, k, p) in [(2, 2, 3), (48, 2, 3), (4, 3, 5)] {
            assert!(q1_poly(&prm(k1, k, p)).coeff(0) > int(0));
        }
    }

    #[test]
    fn case1_metric_solves_system_exactly() {
        let pr = prm(3, 2, 3);
        for sgn in [1, -1] {
            let x = QuadSurd::new(ratio(21, 13), ratio(3 * sgn, 13), BigInt::from(10));
            let f = system_f(&pr, &case1_metric(&pr, &x)).unwrap();
            assert!(f.iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn lambda_equals_rr1() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (k1, k, p) in [(3, 2, 3), (2, 2, 3), (4, 3, 4)] {
            let pr = prm(k1, k, p);
            for _ in 0..10 {
                let x = rand_q(&mut rng);
                let x2 = x2_of_x12(&pr, &x).unwrap();
                let (y1, _) = back_substitute_y(&pr, &x, &x2).unwrap();
                assert_eq!(einstein_constant(&pr, &x).unwrap(), y1 / (int(4) * &x * &x));
            }
        }
    }

    #[test]
    fn beta_for_48_2_3() {
        assert_eq!(beta(&prm(48, 2, 3)), ratio(660, 73));
    }
}
