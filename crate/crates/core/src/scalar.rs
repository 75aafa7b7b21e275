//! Exact arithmetic in the quadratic field Q(sqrt 2).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// An element `rat + irr * sqrt(2)` with rational coefficients.
///
/// The representation is canonical, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub rat: Rational,
    pub irr: Rational,
}

fn ri(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn new(rat: Rational, irr: Rational) -> Self {
        Scalar { rat, irr }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(ri(n), Rational::zero())
    }

    /// `n/d` as a rational scalar. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::new(Rational::new(BigInt::from(n), BigInt::from(d)), Rational::zero())
    }

    pub fn from_rational(q: Rational) -> Self {
        Scalar::new(q, Rational::zero())
    }

    pub fn sqrt2() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    /// `a + b sqrt 2` from small integer ratios `(an/ad) + (bn/bd) sqrt 2`.
    pub fn quad(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        Scalar::new(
            Rational::new(BigInt::from(an), BigInt::from(ad)),
            Rational::new(BigInt::from(bn), BigInt::from(bd)),
        )
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// Galois conjugate `a - b sqrt 2`.
    pub fn conj(&self) -> Self {
        Scalar::new(self.rat.clone(), -self.irr.clone())
    }

    /// Field norm `a^2 - 2 b^2`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - ri(2) * &self.irr * &self.irr
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(Scalar::new(c.rat / &n, c.irr / n))
    }

    /// Sign of the real number under the embedding with `sqrt 2 > 0`.
    pub fn sign(&self) -> i8 {
        let sa = sgn(&self.rat);
        let sb = sgn(&self.irr);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        let a2 = &self.rat * &self.rat;
        let b2 = ri(2) * &self.irr * &self.irr;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact square root inside Q(sqrt 2) when one exists (the non-negative root).
    pub fn sqrt(&self) -> Option<Self> {
        match self.sign() {
            0 => return Some(Scalar::zero()),
            s if s < 0 => return None,
            _ => {}
        }
        // (x + y sqrt 2)^2 = x^2 + 2y^2 + 2xy sqrt 2, so x^2 = (a +- sqrt(norm)) / 2.
        let d = rational_sqrt(&self.norm())?;
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        for cand in [(&self.rat + &d) * &half, (&self.rat - &d) * &half] {
            if cand.is_negative() {
                continue;
            }
            if let Some(x) = rational_sqrt(&cand) {
                let y = if x.is_zero() {
                    match rational_sqrt(&(&self.rat / ri(2))) {
                        Some(y) => y,
                        None => continue,
                    }
                } else {
                    &self.irr / (ri(2) * &x)
                };
                let root = Scalar::new(x, y).abs();
                if &root * &root == *self {
                    return Some(root);
                }
            }
        }
        None
    }

    /// Real cube root of a rational perfect cube.
    pub fn cbrt(&self) -> Option<Self> {
        if !self.is_rational() {
            return None;
        }
        let q = &self.rat;
        let n = q.numer().cbrt();
        let d = q.denom().cbrt();
        if &(&n * &n * &n) == q.numer() && &(&d * &d * &d) == q.denom() {
            Some(Scalar::from_rational(Rational::new(n, d)))
        } else {
            None
        }
    }

    /// Approximate value, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.rat.to_f64().unwrap_or(f64::NAN)
            + self.irr.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

fn sgn(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::new(&self.rat + &o.rat, &self.irr + &o.irr)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::new(&self.rat - &o.rat, &self.irr - &o.irr)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.irr.is_zero() && o.irr.is_zero() {
            return Scalar::from_rational(&self.rat * &o.rat);
        }
        let rat = &self.rat * &o.rat + ri(2) * &self.irr * &o.irr;
        let irr = &self.rat * &o.irr + &self.irr * &o.rat;
        Scalar::new(rat, irr)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::inverse`] for a checked version.
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inverse().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.rat, -self.irr)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.rat, -&self.irr)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.rat += &o.rat;
        self.irr += &o.irr;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.rat -= &o.rat;
        self.irr -= &o.irr;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        *self -= &o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Prints in the text syntax: `0`, `p/q`, `p/q r2`, `a + b r2`, `a - b r2`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let irr_part = |b: &Rational| -> String {
            if b.is_one() {
                "r2".to_string()
            } else {
                format!("{} r2", fmt_rational(b))
            }
        };
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rational(&self.rat)),
            (true, false) => {
                if self.irr.is_negative() {
                    write!(f, "-{}", irr_part(&-self.irr.clone()))
                } else {
                    write!(f, "{}", irr_part(&self.irr))
                }
            }
            (false, false) => {
                let op = if self.irr.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{} {} {}",
                    fmt_rational(&self.rat),
                    op,
                    irr_part(&self.irr.abs())
                )
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        crate::text::parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn norm_of_one_plus_sqrt2() {
        assert_eq!(s("1 + r2") * s("1 - r2"), s("-1"));
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt2(), Scalar::from_int(2));
        assert_eq!(Scalar::zero() + s("3/4 r2"), s("3/4 r2"));
    }

    #[test]
    fn inverses() {
        assert_eq!(Scalar::sqrt2().inverse().unwrap(), s("1/2 r2"));
        assert_eq!(s("2").inverse().unwrap(), s("1/2"));
        assert_eq!(s("1 + r2").inverse().unwrap(), s("-1 + r2"));
        assert_eq!(Scalar::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn signs() {
        assert_eq!(s("1 - r2").sign(), -1);
        assert_eq!(s("3 - 2 r2").sign(), 1);
        assert_eq!(Scalar::zero().sign(), 0);
        assert_eq!(s("-3 + 2 r2").sign(), -1);
        assert_eq!(s("-1 + r2").sign(), 1);
    }

    #[test]
    fn printing_round_trips() {
        for t in ["0", "3", "-7/2", "r2", "-r2", "1/2 r2", "-3/5 r2", "1 + r2", "1/3 - 2/7 r2"] {
            assert_eq!(s(t).to_string(), t);
        }
    }

    #[test]
    fn square_roots() {
        assert_eq!(s("4").sqrt(), Some(s("2")));
        assert_eq!(s("2").sqrt(), Some(s("r2")));
        assert_eq!(s("3 + 2 r2").sqrt(), Some(s("1 + r2")));
        assert_eq!(s("3").sqrt(), None);
        assert_eq!(s("-1").sqrt(), None);
        assert_eq!(s("-8").cbrt(), Some(s("-2")));
        assert_eq!(s("8/27").cbrt(), Some(s("2/3")));
    }

    #[test]
    fn ordering() {
        assert!(s("r2") > s("7/5"));
        assert!(s("r2") < s("3/2"));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn scalar() -> impl Strategy<Value = Scalar> {
            (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6).prop_map(|(a, b, c, d)| Scalar::quad(a, b, c, d))
        }

        proptest! {
            #[test]
            fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
                prop_assert_eq!(&x + &y, &y + &x);
                prop_assert_eq!(&x * &y, &y * &x);
                prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
                prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
                prop_assert_eq!(&x - &x, Scalar::zero());
                if !x.is_zero() {
                    prop_assert_eq!(&x * &x.inverse().unwrap(), Scalar::one());
                }
            }

            #[test]
            fn sign_is_multiplicative_and_matches_f64(x in scalar(), y in scalar()) {
                prop_assert_eq!((&x * &y).sign(), x.sign() * y.sign());
                let f = x.to_f64();
                if f.abs() > 1e-9 {
                    prop_assert_eq!(x.sign(), if f > 0.0 { 1 } else { -1 });
                }
            }

            #[test]
            fn order_is_translation_invariant(x in scalar(), y in scalar(), z in scalar()) {
                prop_assert_eq!(x < y, &x + &z < &y + &z);
            }

            #[test]
            fn text_round_trip(x in scalar()) {
                prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
            }
        }
    }
}
