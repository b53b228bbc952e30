//! Exact integers with an inline fast path for values that fit in `i64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An arbitrary-precision integer.
///
/// The `Big` variant is only used for values outside the `i64` range, so two
/// equal values always have the same representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    fn from_i128(v: i128) -> Integer {
        match i64::try_from(v) {
            Ok(s) => Integer::Small(s),
            Err(_) => Integer::Big(BigInt::from(v)),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    /// True for 1 and -1.
    pub fn is_unit(&self) -> bool {
        matches!(self, Integer::Small(1) | Integer::Small(-1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Integer::Small(v) => v.signum() as i32,
            Integer::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::Big(BigInt::from(*v).abs()),
            },
            Integer::Big(b) => Integer::from_big(b.abs()),
        }
    }

    /// Compare absolute values.
    pub fn cmp_abs(&self, other: &Integer) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_big().abs().cmp(&other.to_big().abs()),
        }
    }

    /// Truncated division and remainder, as with Rust's `/` and `%`.
    ///
    /// Panics on division by zero.
    pub fn div_rem(&self, d: &Integer) -> (Integer, Integer) {
        assert!(!d.is_zero(), "division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, d) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (Integer::Small(q), Integer::Small(r));
            }
        }
        let (q, r) = self.to_big().div_rem(&d.to_big());
        (Integer::from_big(q), Integer::from_big(r))
    }

    /// Floor division.
    pub fn div_floor(&self, d: &Integer) -> Integer {
        assert!(!d.is_zero(), "division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, d) {
            if let Some(q) = a.checked_div_euclid(*b) {
                // div_euclid rounds toward -inf only for positive divisors
                if *b > 0 {
                    return Integer::Small(q);
                }
            }
        }
        Integer::from_big(self.to_big().div_floor(&d.to_big()))
    }

    /// Remainder in `[0, |d|)`.
    pub fn rem_euclid(&self, d: &Integer) -> Integer {
        assert!(!d.is_zero(), "division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, d) {
            if let Some(r) = a.checked_rem_euclid(*b) {
                return Integer::Small(r);
            }
        }
        let m = d.to_big().abs();
        Integer::from_big(self.to_big().mod_floor(&m))
    }

    /// Division that the caller knows to be exact.
    pub fn div_exact(&self, d: &Integer) -> Integer {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division {self} / {d}");
        q
    }

    pub fn divides(&self, other: &Integer) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Nonnegative greatest common divisor.
    pub fn gcd(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
            while y != 0 {
                let t = x % y;
                x = y;
                y = t;
            }
            if let Ok(v) = i64::try_from(x) {
                return Integer::Small(v);
            }
        }
        Integer::from_big(self.to_big().gcd(&other.to_big()))
    }

    /// Returns `(g, s, t)` with `g = s*a + t*b` and `g >= 0`.
    pub fn ext_gcd(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
        if let (Integer::Small(x), Integer::Small(y)) = (a, b) {
            let (mut r0, mut r1) = (*x as i128, *y as i128);
            let (mut s0, mut s1) = (1i128, 0i128);
            let (mut t0, mut t1) = (0i128, 1i128);
            while r1 != 0 {
                let q = r0 / r1;
                (r0, r1) = (r1, r0 - q * r1);
                (s0, s1) = (s1, s0 - q * s1);
                (t0, t1) = (t1, t0 - q * t1);
            }
            if r0 < 0 {
                r0 = -r0;
                s0 = -s0;
                t0 = -t0;
            }
            return (
                Integer::from_i128(r0),
                Integer::from_i128(s0),
                Integer::from_i128(t0),
            );
        }
        let e = a.to_big().extended_gcd(&b.to_big());
        let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
        if g.is_negative() {
            g = -g;
            s = -s;
            t = -t;
        }
        (Integer::from_big(g), Integer::from_big(s), Integer::from_big(t))
    }

    /// `self += a * b` without intermediate allocation in the small case.
    pub fn add_mul(&mut self, a: &Integer, b: &Integer) {
        if let (Integer::Small(s), Integer::Small(x), Integer::Small(y)) = (&*self, a, b) {
            let v = *s as i128 + (*x as i128) * (*y as i128);
            *self = Integer::from_i128(v);
            return;
        }
        let v = &*self + &(a * b);
        *self = v;
    }

    /// `self -= a * b`.
    pub fn sub_mul(&mut self, a: &Integer, b: &Integer) {
        if let (Integer::Small(s), Integer::Small(x), Integer::Small(y)) = (&*self, a, b) {
            let v = *s as i128 - (*x as i128) * (*y as i128);
            *self = Integer::from_i128(v);
            return;
        }
        let v = &*self - &(a * b);
        *self = v;
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<usize> for Integer {
    fn from(v: usize) -> Self {
        match i64::try_from(v) {
            Ok(s) => Integer::Small(s),
            Err(_) => Integer::Big(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl From<&Integer> for BigInt {
    fn from(v: &Integer) -> Self {
        v.to_big()
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<i64> for Integer {
    fn eq(&self, other: &i64) -> bool {
        matches!(self, Integer::Small(v) if v == other)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Integer::Small(v));
        }
        s.parse::<BigInt>().map(Integer::from_big)
    }
}

impl Serialize for Integer {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Integer {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident, $wide:tt) => {
        impl $trait<&Integer> for &Integer {
            type Output = Integer;
            fn $method(self, rhs: &Integer) -> Integer {
                if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
                    return match a.$checked(*b) {
                        Some(v) => Integer::Small(v),
                        None => Integer::from_i128((*a as i128) $wide (*b as i128)),
                    };
                }
                Integer::from_big(self.to_big() $wide rhs.to_big())
            }
        }
        impl $trait<Integer> for Integer {
            type Output = Integer;
            fn $method(self, rhs: Integer) -> Integer {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Integer> for Integer {
            type Output = Integer;
            fn $method(self, rhs: &Integer) -> Integer {
                (&self).$method(rhs)
            }
        }
        impl $trait<Integer> for &Integer {
            type Output = Integer;
            fn $method(self, rhs: Integer) -> Integer {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add, +);
binop!(Sub, sub, checked_sub, -);
binop!(Mul, mul, checked_mul, *);

impl AddAssign<&Integer> for Integer {
    fn add_assign(&mut self, rhs: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&*self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                *self = Integer::Small(v);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl AddAssign<Integer> for Integer {
    fn add_assign(&mut self, rhs: Integer) {
        *self += &rhs;
    }
}

impl SubAssign<&Integer> for Integer {
    fn sub_assign(&mut self, rhs: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&*self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                *self = Integer::Small(v);
                return;
            }
        }
        *self = &*self - rhs;
    }
}

impl SubAssign<Integer> for Integer {
    fn sub_assign(&mut self, rhs: Integer) {
        *self -= &rhs;
    }
}

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl std::iter::Sum for Integer {
    fn sum<I: Iterator<Item = Integer>>(iter: I) -> Integer {
        let mut acc = Integer::ZERO;
        for v in iter {
            acc += &v;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> Integer {
        s.parse().unwrap()
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let m = Integer::from(i64::MAX);
        let s = &m + &Integer::ONE;
        assert!(matches!(s, Integer::Big(_)));
        assert_eq!(s.to_string(), "9223372036854775808");
        let back = &s - &Integer::ONE;
        assert!(matches!(back, Integer::Small(_)));
        let sq = &m * &m;
        assert_eq!(sq.to_string(), "85070591730234615847396907784232501249");
        let min = Integer::from(i64::MIN);
        assert_eq!((-&min).to_string(), "9223372036854775808");
        assert_eq!(min.abs().to_string(), "9223372036854775808");
    }

    #[test]
    fn division_conventions() {
        let a = Integer::from(-7);
        let b = Integer::from(2);
        assert_eq!(a.div_rem(&b), (Integer::from(-3), Integer::from(-1)));
        assert_eq!(a.div_floor(&b), Integer::from(-4));
        assert_eq!(a.rem_euclid(&b), Integer::from(1));
        assert_eq!(Integer::from(7).div_floor(&Integer::from(-2)), Integer::from(-4));
        assert_eq!(Integer::from(7).rem_euclid(&Integer::from(-2)), Integer::from(1));
        let x = big("100000000000000000000000000001");
        assert_eq!(x.rem_euclid(&Integer::from(10)), Integer::ONE);
    }

    #[test]
    fn ext_gcd_bezout() {
        for (a, b) in [(12i64, 18i64), (-4, 6), (0, 5), (7, 0), (0, 0), (-9, -6)] {
            let (a, b) = (Integer::from(a), Integer::from(b));
            let (g, s, t) = Integer::ext_gcd(&a, &b);
            assert_eq!(&(&s * &a) + &(&t * &b), g);
            assert_eq!(g, a.gcd(&b));
        }
        let a = big("123456789012345678901234567890");
        let b = big("987654321098765432109876543210");
        let (g, s, t) = Integer::ext_gcd(&a, &b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, big("9000000000900000000090"));
    }

    #[test]
    fn serde_uses_strings() {
        let x = big("-123456789012345678901234567890");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "\"-123456789012345678901234567890\"");
        let y: Integer = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }
}
