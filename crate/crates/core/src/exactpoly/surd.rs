use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{format_rational, sign, to_f64, Field, Ring};

/// `a + b sqrt(d)` with rational `a, b` and a positive integer radicand `d`.
/// A radicand of zero marks a plain rational; two nonzero radicands must agree.
#[derive(Debug, Clone)]
pub struct QuadSurd {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl QuadSurd {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Self {
        assert!(!d.is_negative(), "radicand must be nonnegative");
        QuadSurd { a, b, d }.normalized()
    }

    pub fn rational(a: BigRational) -> Self {
        QuadSurd { a, b: BigRational::zero(), d: BigInt::zero() }
    }

    fn normalized(mut self) -> Self {
        if self.b.is_zero() || self.d.is_zero() {
            self.b = BigRational::zero();
            self.d = BigInt::zero();
        }
        self
    }

    fn radicand(&self, o: &QuadSurd) -> BigInt {
        match (self.d.is_zero(), o.d.is_zero()) {
            (true, _) => o.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, o.d, "mixed radicands");
                self.d.clone()
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    pub fn conj(&self) -> QuadSurd {
        QuadSurd { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// Exact sign.
    pub fn sign(&self) -> i8 {
        let (sa, sb) = (sign(&self.a), sign(&self.b));
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let d = to_f64(&BigRational::from_integer(self.d.clone()));
        to_f64(&self.a) + to_f64(&self.b) * d.sqrt()
    }
}

impl PartialEq for QuadSurd {
    fn eq(&self, o: &Self) -> bool {
        (self.clone() - o.clone()).is_zero()
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some((self.clone() - o.clone()).sign().cmp(&0))
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", format_rational(&self.a))
        } else {
            write!(f, "{} + ({})*sqrt({})", format_rational(&self.a), format_rational(&self.b), self.d)
        }
    }
}

impl Add for QuadSurd {
    type Output = QuadSurd;
    fn add(self, o: QuadSurd) -> QuadSurd {
        let d = self.radicand(&o);
        QuadSurd { a: self.a + o.a, b: self.b + o.b, d }.normalized()
    }
}

impl Sub for QuadSurd {
    type Output = QuadSurd;
    fn sub(self, o: QuadSurd) -> QuadSurd {
        let d = self.radicand(&o);
        QuadSurd { a: self.a - o.a, b: self.b - o.b, d }.normalized()
    }
}

impl Mul for QuadSurd {
    type Output = QuadSurd;
    fn mul(self, o: QuadSurd) -> QuadSurd {
        let d = self.radicand(&o);
        let dq = BigRational::from_integer(d.clone());
        let a = &self.a * &o.a + &self.b * &o.b * dq;
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadSurd { a, b, d }.normalized()
    }
}

impl Div for QuadSurd {
    type Output = QuadSurd;
    fn div(self, o: QuadSurd) -> QuadSurd {
        let c = o.conj();
        let den = o * c.clone();
        debug_assert!(den.is_rational());
        let num = self * c;
        QuadSurd { a: &num.a / &den.a, b: &num.b / &den.a, d: num.d }.normalized()
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Ring for QuadSurd {
    fn from_i64(v: i64) -> Self {
        QuadSurd::rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn from_rational(q: &BigRational) -> Self {
        QuadSurd::rational(q.clone())
    }
}

impl Field for QuadSurd {}
