use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::poly::{squarefree, RationalPolynomial};
use super::{format_rational, to_decimal};
use crate::error::{Error, Result};

/// Interval `(lo, hi)` holding exactly one real root. Endpoint signs are those
/// of the square-free part. `exact` is set when the root was hit exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub sign_lo: i8,
    pub sign_hi: i8,
    pub exact: Option<BigRational>,
    pub multiplicity: usize,
}

impl IsolatingInterval {
    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo < *x && *x < self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }
}

impl Serialize for IsolatingInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IsolatingInterval", 6)?;
        st.serialize_field("lo", &format_rational(&self.lo))?;
        st.serialize_field("hi", &format_rational(&self.hi))?;
        st.serialize_field("lo_decimal", &to_decimal(&self.lo, 30))?;
        st.serialize_field("hi_decimal", &to_decimal(&self.hi, 30))?;
        st.serialize_field("exact", &self.exact.as_ref().map(format_rational))?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

/// `p, p', -rem(p, p'), ...` with every member made primitive.
pub fn sturm_sequence(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let mut seq = vec![p.primitive()];
    let d = p.derivative().primitive();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push((-&r).primitive());
    }
    seq
}

fn variations(seq: &[RationalPolynomial], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for q in seq {
        let s = q.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn sturm_count(p: &RationalPolynomial, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    let q = squarefree(p)?;
    let seq = sturm_sequence(&q);
    Ok(variations(&seq, lo).saturating_sub(variations(&seq, hi)))
}

struct Isolator<'a> {
    q: &'a RationalPolynomial,
    seq: Vec<RationalPolynomial>,
    out: Vec<IsolatingInterval>,
}

impl Isolator<'_> {
    fn var(&self, x: &BigRational) -> usize {
        variations(&self.seq, x)
    }

    fn run(&mut self, a: BigRational, b: BigRational, va: usize, vb: usize) {
        let c = va.saturating_sub(vb);
        if c == 0 {
            return;
        }
        if c == 1 {
            let sb = self.q.sign_at(&b);
            if sb == 0 {
                let iv = self.around(&b, &(&b - &a));
                self.out.push(iv);
                return;
            }
            let sa = self.q.sign_at(&a);
            if sa != 0 {
                let m = (&a + &b) / BigRational::from_integer(2.into());
                if self.q.sign_at(&m).is_zero() {
                    let iv = self.around(&m, &(&b - &m));
                    self.out.push(iv);
                    return;
                }
                self.out.push(IsolatingInterval {
                    lo: a,
                    hi: b,
                    sign_lo: sa,
                    sign_hi: sb,
                    exact: None,
                    multiplicity: 1,
                });
                return;
            }
        }
        let m = (&a + &b) / BigRational::from_integer(2.into());
        let vm = self.var(&m);
        self.run(a, m.clone(), va, vm);
        self.run(m, b, vm, vb);
    }

    /// Isolating interval around an exact rational root.
    fn around(&self, r: &BigRational, start: &BigRational) -> IsolatingInterval {
        let mut delta = start.clone();
        loop {
            let lo = r - &delta;
            let hi = r + &delta;
            let (sl, sh) = (self.q.sign_at(&lo), self.q.sign_at(&hi));
            if sl != 0 && sh != 0 && self.var(&lo) - self.var(&hi) == 1 {
                return IsolatingInterval { lo, hi, sign_lo: sl, sign_hi: sh, exact: Some(r.clone()), multiplicity: 1 };
            }
            delta /= BigRational::from_integer(2.into());
        }
    }
}

fn multiplicity(p: &RationalPolynomial, iv: &IsolatingInterval) -> Result<usize> {
    let mut m = 1;
    let mut g = p.gcd(&p.derivative());
    while g.degree().unwrap_or(0) > 0 {
        let hit = match &iv.exact {
            Some(r) => g.eval(r).is_zero(),
            None => sturm_count(&g, &iv.lo, &iv.hi)? > 0,
        };
        if !hit {
            break;
        }
        m += 1;
        g = g.gcd(&g.derivative());
    }
    Ok(m)
}

/// Isolates the distinct real roots of `poly` in `(lo, hi]`, in increasing
/// order. Without `hi` the Cauchy bound is used.
pub fn sturm_isolate(
    poly: &RationalPolynomial,
    lo: &BigRational,
    hi: Option<&BigRational>,
) -> Result<Vec<IsolatingInterval>> {
    if poly.is_zero() {
        return Err(Error::DegeneratePolynomial("cannot isolate roots of zero".into()));
    }
    let q = squarefree(poly)?;
    let hi = match hi {
        Some(h) => h.clone(),
        None => {
            let b = q.cauchy_bound();
            if b > *lo {
                b
            } else {
                lo + BigRational::one()
            }
        }
    };
    if hi <= *lo {
        return Ok(vec![]);
    }
    let mut iso = Isolator { seq: sturm_sequence(&q), q: &q, out: vec![] };
    let (va, vb) = (iso.var(lo), iso.var(&hi));
    iso.run(lo.clone(), hi, va, vb);
    let mut out = iso.out;
    // keep exact-root intervals clear of their neighbours
    for i in 0..out.len() {
        let Some(r) = out[i].exact.clone() else { continue };
        let mut room = &out[i].hi - &r;
        if i > 0 {
            room = room.min(&r - &out[i - 1].hi);
        }
        if i + 1 < out.len() {
            room = room.min(&out[i + 1].lo - &r);
        }
        if room < &out[i].hi - &r {
            out[i] = iso_around(&q, &r, &room);
        }
    }
    for iv in &mut out {
        iv.multiplicity = multiplicity(poly, iv)?;
    }
    Ok(out)
}

fn iso_around(q: &RationalPolynomial, r: &BigRational, room: &BigRational) -> IsolatingInterval {
    let iso = Isolator { seq: sturm_sequence(q), q, out: vec![] };
    iso.around(r, &(room / BigRational::from_integer(2.into())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, ratio};

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integers(c)
    }

    #[test]
    fn sqrt2() {
        let r = sturm_isolate(&p(&[-2, 0, 1]), &int(0), Some(&int(10))).unwrap();
        assert_eq!(r.len(), 1);
        assert!(&r[0].lo * &r[0].lo < int(2) && &r[0].hi * &r[0].hi > int(2));
    }

    #[test]
    fn q1_for_323() {
        let r = sturm_isolate(&p(&[108, -168, 52]), &int(0), None).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].contains(&ratio(8857, 10000)) || r[0].width() < ratio(1, 2));
        assert!(r[0].hi <= r[1].lo);
        assert!(r[0].sign_lo != r[0].sign_hi && r[1].sign_lo != r[1].sign_hi);
    }

    #[test]
    fn double_root_at_one() {
        let r = sturm_isolate(&p(&[1, -2, 1]), &int(0), Some(&int(2))).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].exact, Some(int(1)));
        assert_eq!(r[0].multiplicity, 2);
        assert!(r[0].contains(&int(1)));
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(sturm_isolate(&RationalPolynomial::zero(), &int(0), None).is_err());
    }

    #[test]
    fn counts_half_open() {
        let f = p(&[0, -1, 1]);
        assert_eq!(sturm_count(&f, &int(0), &int(1)).unwrap(), 1);
        assert_eq!(sturm_count(&f, &int(-1), &int(1)).unwrap(), 2);
        assert_eq!(sturm_count(&f, &ratio(1, 2), &int(2)).unwrap(), 1);
    }
}
