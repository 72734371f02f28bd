//! Exact arithmetic in the field Q(sqrt2, i).
//!
//! An element is stored as four rationals `(a, b, c, d)` standing for
//! `a + b*sqrt2 + (c + d*sqrt2)*i`. Every operation is exact.

mod parse;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Element `a + b*sqrt2 + (c + d*sqrt2)*i` of Q(sqrt2, i).
///
/// `BigRational` keeps every component reduced with a positive
/// denominator, so derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactNumber {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

// (x0 + x1 r)(y0 + y1 r) with r = sqrt2
fn q2_mul(x0: &BigRational, x1: &BigRational, y0: &BigRational, y1: &BigRational) -> (BigRational, BigRational) {
    let two = rat(2);
    let mut re = x0 * y0;
    if !x1.is_zero() && !y1.is_zero() {
        re += x1 * y1 * two;
    }
    let mut ir = BigRational::zero();
    if !x0.is_zero() && !y1.is_zero() {
        ir += x0 * y1;
    }
    if !x1.is_zero() && !y0.is_zero() {
        ir += x1 * y0;
    }
    (re, ir)
}

impl ExactNumber {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        ExactNumber { a, b, c, d }
    }

    /// Build from integer numerator/denominator pairs, handy in tests and catalogs.
    pub fn from_parts(parts: [(i64, i64); 4]) -> Self {
        let r = |(n, d): (i64, i64)| BigRational::new(BigInt::from(n), BigInt::from(d));
        ExactNumber::new(r(parts[0]), r(parts[1]), r(parts[2]), r(parts[3]))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ExactNumber { a: rat(n), ..Default::default() }
    }

    pub fn from_rational(q: BigRational) -> Self {
        ExactNumber { a: q, ..Default::default() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn i() -> Self {
        ExactNumber { c: rat(1), ..Default::default() }
    }

    pub fn sqrt2() -> Self {
        ExactNumber { b: rat(1), ..Default::default() }
    }

    /// 1/sqrt2 = sqrt2/2.
    pub fn inv_sqrt2() -> Self {
        ExactNumber { b: BigRational::new(1.into(), 2.into()), ..Default::default() }
    }

    /// The primitive 8th root of unity (1+i)/sqrt2.
    pub fn alpha() -> Self {
        let h = BigRational::new(1.into(), 2.into());
        ExactNumber { b: h.clone(), d: h, ..Default::default() }
    }

    /// `alpha^s` for any integer s (alpha has order 8).
    pub fn alpha_pow(s: i64) -> Self {
        let s = s.rem_euclid(8);
        let mut x = Self::one();
        let a = Self::alpha();
        for _ in 0..s {
            x = &x * &a;
        }
        x
    }

    /// `i^k` for any integer k.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::from_int(1),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.d.is_zero()
    }

    /// True when the value lies in Q (no sqrt2, no i part).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        ExactNumber { a: self.a.clone(), b: self.b.clone(), c: -&self.c, d: -&self.d }
    }

    pub fn re(&self) -> Self {
        ExactNumber { a: self.a.clone(), b: self.b.clone(), ..Default::default() }
    }

    pub fn im(&self) -> Self {
        ExactNumber { a: self.c.clone(), b: self.d.clone(), ..Default::default() }
    }

    /// `x * conj(x)`, a nonnegative real.
    pub fn norm_sq(&self) -> Self {
        let (r0, r1) = q2_mul(&self.a, &self.b, &self.a, &self.b);
        let (s0, s1) = q2_mul(&self.c, &self.d, &self.c, &self.d);
        ExactNumber { a: r0 + s0, b: r1 + s1, ..Default::default() }
    }

    /// Sign of a real element: -1, 0 or 1. `None` when the value is not real.
    pub fn real_sign(&self) -> Option<i32> {
        if !self.is_real() {
            return None;
        }
        Some(q2_sign(&self.a, &self.b))
    }

    /// Total order on real elements; `None` if either side is not real.
    pub fn real_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        let diff = self - other;
        diff.real_sign().map(|s| s.cmp(&0))
    }

    pub fn abs_real(&self) -> Option<Self> {
        self.real_sign().map(|s| if s < 0 { -self.clone() } else { self.clone() })
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        // 1/x = conj(x) / |x|^2 with |x|^2 = u + v*sqrt2 real
        let n = self.norm_sq();
        let (u, v) = (&n.a, &n.b);
        let den = u * u - v * v * rat(2);
        let inv_u = u / &den;
        let inv_v = -(v / &den);
        let cj = self.conj();
        let (a, b) = q2_mul(&cj.a, &cj.b, &inv_u, &inv_v);
        let (c, d) = q2_mul(&cj.c, &cj.d, &inv_u, &inv_v);
        Ok(ExactNumber { a, b, c, d })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        ExactNumber { a: &self.a * q, b: &self.b * q, c: &self.c * q, d: &self.d * q }
    }

    /// Floating approximation, for display only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let f = |q: &BigRational| q.to_f64().unwrap_or(f64::NAN);
        let s = std::f64::consts::SQRT_2;
        (f(&self.a) + f(&self.b) * s, f(&self.c) + f(&self.d) * s)
    }

    /// Canonical text without spaces, suitable as a single token.
    pub fn to_compact_string(&self) -> String {
        self.render("+")
    }

    fn render(&self, sep: &str) -> String {
        let mut terms = Vec::new();
        for (q, unit) in [(&self.a, ""), (&self.b, "r2"), (&self.c, "i"), (&self.d, "r2*i")] {
            if q.is_zero() {
                continue;
            }
            let t = if unit.is_empty() {
                q.to_string()
            } else if q.is_one() {
                unit.to_string()
            } else {
                format!("{}*{}", q, unit)
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(sep)
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse::parse_number(text)
    }
}

// sign of u + v*sqrt2
fn q2_sign(u: &BigRational, v: &BigRational) -> i32 {
    let su = sgn(u);
    let sv = sgn(v);
    if sv == 0 {
        return su;
    }
    if su == 0 || su == sv {
        return if su == 0 { sv } else { su };
    }
    // opposite signs: compare u^2 with 2 v^2
    let lhs = u * u;
    let rhs = v * v * rat(2);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => su,
        std::cmp::Ordering::Less => sv,
        std::cmp::Ordering::Equal => 0,
    }
}

fn sgn(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for ExactNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(" + "))
    }
}

impl fmt::Debug for ExactNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(" + "))
    }
}

impl std::str::FromStr for ExactNumber {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl From<i64> for ExactNumber {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a ExactNumber> for &'a ExactNumber {
    type Output = ExactNumber;
    fn add(self, o: &ExactNumber) -> ExactNumber {
        ExactNumber { a: &self.a + &o.a, b: &self.b + &o.b, c: &self.c + &o.c, d: &self.d + &o.d }
    }
}

impl<'a> Sub<&'a ExactNumber> for &'a ExactNumber {
    type Output = ExactNumber;
    fn sub(self, o: &ExactNumber) -> ExactNumber {
        ExactNumber { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }
}

impl<'a> Mul<&'a ExactNumber> for &'a ExactNumber {
    type Output = ExactNumber;
    fn mul(self, o: &ExactNumber) -> ExactNumber {
        if self.is_zero() || o.is_zero() {
            return ExactNumber::zero();
        }
        if self.is_rational() {
            return o.scale_rational(&self.a);
        }
        if o.is_rational() {
            return self.scale_rational(&o.a);
        }
        // (p1 + q1 i)(p2 + q2 i) with p, q in Q(sqrt2)
        let (pp0, pp1) = q2_mul(&self.a, &self.b, &o.a, &o.b);
        let (qq0, qq1) = q2_mul(&self.c, &self.d, &o.c, &o.d);
        let (pq0, pq1) = q2_mul(&self.a, &self.b, &o.c, &o.d);
        let (qp0, qp1) = q2_mul(&self.c, &self.d, &o.a, &o.b);
        ExactNumber { a: pp0 - qq0, b: pp1 - qq1, c: pq0 + qp0, d: pq1 + qp1 }
    }
}

impl<'a> Div<&'a ExactNumber> for &'a ExactNumber {
    type Output = ExactNumber;
    /// Panics on a zero divisor; use `checked_div` to get an error instead.
    fn div(self, o: &ExactNumber) -> ExactNumber {
        self.checked_div(o).expect("division by zero")
    }
}

impl Neg for ExactNumber {
    type Output = ExactNumber;
    fn neg(self) -> ExactNumber {
        ExactNumber { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }
}

impl Neg for &ExactNumber {
    type Output = ExactNumber;
    fn neg(self) -> ExactNumber {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactNumber> for ExactNumber {
            type Output = ExactNumber;
            fn $m(self, o: ExactNumber) -> ExactNumber {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a ExactNumber> for ExactNumber {
            type Output = ExactNumber;
            fn $m(self, o: &ExactNumber) -> ExactNumber {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&ExactNumber> for ExactNumber {
    fn add_assign(&mut self, o: &ExactNumber) {
        if o.is_zero() {
            return;
        }
        self.a += &o.a;
        self.b += &o.b;
        self.c += &o.c;
        self.d += &o.d;
    }
}

impl AddAssign for ExactNumber {
    fn add_assign(&mut self, o: ExactNumber) {
        *self += &o;
    }
}

impl SubAssign<&ExactNumber> for ExactNumber {
    fn sub_assign(&mut self, o: &ExactNumber) {
        self.a -= &o.a;
        self.b -= &o.b;
        self.c -= &o.c;
        self.d -= &o.d;
    }
}

impl MulAssign<&ExactNumber> for ExactNumber {
    fn mul_assign(&mut self, o: &ExactNumber) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for ExactNumber {
    fn sum<I: Iterator<Item = ExactNumber>>(iter: I) -> Self {
        let mut acc = ExactNumber::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl std::iter::Product for ExactNumber {
    fn product<I: Iterator<Item = ExactNumber>>(iter: I) -> Self {
        let mut acc = ExactNumber::one();
        for x in iter {
            acc = &acc * &x;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> ExactNumber {
        s.parse().unwrap()
    }

    #[test]
    fn basic_identities() {
        assert_eq!(&ExactNumber::sqrt2() * &ExactNumber::sqrt2(), ExactNumber::from_int(2));
        assert_eq!(&ExactNumber::i() * &ExactNumber::i(), ExactNumber::from_int(-1));
        let a = ExactNumber::alpha();
        assert!((&a * &a.conj()).is_one());
        assert_eq!(ExactNumber::alpha_pow(2), ExactNumber::i());
        assert_eq!(ExactNumber::alpha_pow(8), ExactNumber::one());
    }

    #[test]
    fn conjugation() {
        assert_eq!(ExactNumber::i().conj(), -ExactNumber::i());
        assert_eq!(ExactNumber::from_int(3).conj(), ExactNumber::from_int(3));
        let x = n("1/2*r2 + -1/2*r2*i");
        assert_eq!(x.conj(), ExactNumber::alpha());
    }

    #[test]
    fn norms() {
        assert_eq!(n("1 + i").norm_sq(), ExactNumber::from_int(2));
        assert_eq!(ExactNumber::from_int(-3).norm_sq(), ExactNumber::from_int(9));
        assert!(ExactNumber::alpha().norm_sq().is_one());
    }

    #[test]
    fn division() {
        let x = n("3 + -2*r2 + 5/7*i + r2*i");
        let q = x.inv().unwrap();
        assert!((&x * &q).is_one());
        assert_eq!(ExactNumber::zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn real_sign() {
        assert_eq!(n("3 + -2*r2").real_sign(), Some(1));
        assert_eq!(n("1 + -1*r2").real_sign(), Some(-1));
        assert_eq!(n("-3 + 2*r2").real_sign(), Some(-1));
        assert_eq!(n("i").real_sign(), None);
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1", "-1/2*r2", "1 + -1/2*r2*i", "r2*i", "7/3 + r2 + -1*i"] {
            let x = n(s);
            assert_eq!(n(&x.to_string()), x);
            assert_eq!(n(&x.to_compact_string()), x);
        }
    }
}
