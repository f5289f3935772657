use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{format_rational, sign, Ring};
use crate::error::{Error, Result};

/// Polynomial over Q, coefficients stored lowest degree first with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in any ring containing Q.
    pub fn eval_in<T: Ring>(&self, x: &T) -> T {
        let mut acc = T::zero_elem();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + T::from_rational(c);
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign(&self.eval(x))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(BigRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division `self = q * d + r`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or_else(|| Error::DegeneratePolynomial("division by the zero polynomial".into()))?;
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![BigRational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &r[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dj;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::DegeneratePolynomial("division is not exact".into()))
        }
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        Self::from_bigints(ints.into_iter().map(|c| c / &g).collect())
    }

    /// Integer coefficients of [`Self::primitive`].
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.primitive().coeffs.iter().map(|c| c.to_integer()).collect()
    }

    /// `1 + max |a_i / a_n|`; every real root has smaller modulus.
    pub fn cauchy_bound(&self) -> BigRational {
        let Some(lead) = self.leading() else {
            return BigRational::one();
        };
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(BigRational::zero);
        m + BigRational::one()
    }

    pub fn max_abs_coeff(&self) -> BigRational {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
    }

    /// If `self = c * other` for a nonzero rational `c`, returns `c`.
    pub fn proportionality(&self, other: &Self) -> Option<BigRational> {
        if self.degree() != other.degree() || self.is_zero() {
            return None;
        }
        let c = self.leading()? / other.leading()?;
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// Rendering such as `52*x^2 - 168*x + 108`.
    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let cs = if a.is_integer() { a.numer().to_string() } else { format!("({})", format_rational(&a)) };
            match i {
                0 => out.push_str(&cs),
                _ => {
                    if !a.is_one() {
                        out.push_str(&cs);
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("x"))
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(format_rational))
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, o: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, o: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, o: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || o.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RationalPolynomial::new(v)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Divides out the repeated factors: `p / gcd(p, p')`, made primitive.
pub fn squarefree(p: &RationalPolynomial) -> Result<RationalPolynomial> {
    if p.is_zero() {
        return Err(Error::DegeneratePolynomial("square-free part of zero".into()));
    }
    let g = p.gcd(&p.derivative());
    Ok(p.div_exact(&g)?.primitive())
}

/// Exact interpolating polynomial of degree `< points.len()` (Newton form).
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<RationalPolynomial> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateAbscissa(format_rational(xi)));
        }
    }
    let n = points.len();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
        }
    }
    let mut acc = RationalPolynomial::zero();
    for i in (0..n).rev() {
        let lin = RationalPolynomial::new(vec![-points[i].0.clone(), BigRational::one()]);
        acc = &(&acc * &lin) + &RationalPolynomial::constant(dd[i].clone());
    }
    Ok(acc)
}

/// Quotient rule: `(n/d)' = (n' d - n d') / d^2`, without cancellation.
pub fn rational_function_derivative(
    num: &RationalPolynomial,
    den: &RationalPolynomial,
) -> Result<(RationalPolynomial, RationalPolynomial)> {
    if den.is_zero() {
        return Err(Error::DegeneratePolynomial("zero denominator".into()));
    }
    let top = &(&num.derivative() * den) - &(num * &den.derivative());
    Ok((top, den * den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, ratio};

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integers(c)
    }

    #[test]
    fn arithmetic_and_division() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(&q * &b, a);
        assert!(a.div_rem(&RationalPolynomial::zero()).is_err());
        assert_eq!(a.eval(&int(3)), int(8));
        assert_eq!(a.derivative(), p(&[0, 2]));
    }

    #[test]
    fn squarefree_examples() {
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(squarefree(&f).unwrap(), &p(&[-1, 1]) * &p(&[2, 1]));
        let g = p(&[108, -168, 52]);
        assert!(squarefree(&g).unwrap().proportionality(&g).is_some());
        assert!(squarefree(&RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn interpolation_examples() {
        let pts: Vec<_> = (0..3).map(|i| (int(i), int(i * i))).collect();
        assert_eq!(interpolate(&pts).unwrap(), p(&[0, 0, 1]));
        let pts = vec![(int(1), int(0)), (int(1), int(2))];
        assert!(matches!(interpolate(&pts), Err(Error::DuplicateAbscissa(_))));
    }

    #[test]
    fn quotient_rule_examples() {
        let (n, d) = rational_function_derivative(&p(&[1]), &p(&[0, 1])).unwrap();
        assert_eq!((n, d), (p(&[-1]), p(&[0, 0, 1])));
        let (n, d) = rational_function_derivative(&p(&[0, 0, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(n, p(&[0, 2, 1]));
        assert_eq!(d, p(&[1, 2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[108, -168, 52]).to_string(), "52*x^2 - 168*x + 108");
        let q = RationalPolynomial::new(vec![ratio(-1, 2), int(1)]);
        assert_eq!(q.to_string(), "x - (1/2)");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn primitive_keeps_sign() {
        let q = RationalPolynomial::new(vec![ratio(-2, 3), ratio(4, 9)]);
        assert_eq!(q.primitive(), p(&[-3, 2]));
        assert_eq!(q.integer_coeffs(), vec![BigInt::from(-3), BigInt::from(2)]);
    }
}
