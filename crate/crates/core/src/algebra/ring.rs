//! Scalar rings.
//!
//! Every scalar type carries a context (`Ring::Ctx`) so that rings whose
//! elements need side information, like the modulus of a prime field, can
//! still produce `zero` and `one` without an existing element in hand.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Which ring a matrix or polynomial lives in, for serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "ring")]
pub enum RingTag {
    #[serde(rename = "Z")]
    Integers,
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Z_p")]
    PrimeField {
        #[serde(serialize_with = "crate::report::ser_decimal")]
        modulus: u64,
    },
}

pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool;

    fn tag(ctx: &Self::Ctx) -> RingTag;
}

pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
}

/// Rings that are (or embed) the integers: the source of every reduction.
pub trait IntegerRing: Ring<Ctx = ()> {
    fn to_bigint(&self) -> BigInt;
    fn from_bigint(v: &BigInt) -> Self;
    fn residue(&self, p: u64) -> u64;
    fn is_odd(&self) -> bool;
    fn abs_value(&self) -> Self;
}

// ---------------------------------------------------------------------------
// Machine integers with overflow detection.

impl Ring for i64 {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        0
    }
    fn one(_: &()) -> Self {
        1
    }
    fn from_i64(_: &(), v: i64) -> Self {
        v
    }
    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(*rhs).expect("i64 overflow in exact arithmetic")
    }
    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(*rhs).expect("i64 overflow in exact arithmetic")
    }
    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(*rhs).expect("i64 overflow in exact arithmetic")
    }
    #[inline]
    fn neg(&self) -> Self {
        self.checked_neg().expect("i64 overflow in exact arithmetic")
    }
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn tag(_: &()) -> RingTag {
        RingTag::Integers
    }
}

impl IntegerRing for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.to_i64().expect("integer does not fit in i64")
    }
    fn residue(&self, p: u64) -> u64 {
        (*self as i128).rem_euclid(p as i128) as u64
    }
    fn is_odd(&self) -> bool {
        self.rem_euclid(2) == 1
    }
    fn abs_value(&self) -> Self {
        self.checked_abs().expect("i64 overflow in exact arithmetic")
    }
}

// ---------------------------------------------------------------------------
// Arbitrary precision integers and rationals.

impl Ring for BigInt {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        <BigInt as num_traits::Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <BigInt as num_traits::One>::one()
    }
    fn from_i64(_: &(), v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn tag(_: &()) -> RingTag {
        RingTag::Integers
    }
}

impl IntegerRing for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
    fn residue(&self, p: u64) -> u64 {
        self.mod_floor(&BigInt::from(p))
            .to_u64()
            .expect("residue below modulus")
    }
    fn is_odd(&self) -> bool {
        Integer::is_odd(self)
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

impl Ring for BigRational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        <BigRational as num_traits::Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <BigRational as num_traits::One>::one()
    }
    fn from_i64(_: &(), v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn tag(_: &()) -> RingTag {
        RingTag::Rationals
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

// ---------------------------------------------------------------------------
// Prime fields.

/// Modulus of a prime field. Construction checks primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Modulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue modulo a prime, always stored reduced to `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zp {
    value: u64,
    modulus: Modulus,
}

impl Zp {
    pub fn new(value: u64, modulus: Modulus) -> Self {
        Zp {
            value: value % modulus.0,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    #[inline]
    fn p(self) -> u64 {
        self.modulus.0
    }
}

impl fmt::Display for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Zp {
    type Ctx = Modulus;

    fn zero(ctx: &Modulus) -> Self {
        Zp::new(0, *ctx)
    }
    fn one(ctx: &Modulus) -> Self {
        Zp::new(1, *ctx)
    }
    fn from_i64(ctx: &Modulus, v: i64) -> Self {
        Zp::new((v as i128).rem_euclid(ctx.0 as i128) as u64, *ctx)
    }
    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = (self.value as u128 + rhs.value as u128) % self.p() as u128;
        Zp {
            value: s as u64,
            modulus: self.modulus,
        }
    }
    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.p();
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            p - (rhs.value - self.value)
        };
        Zp {
            value: v,
            modulus: self.modulus,
        }
    }
    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let m = (self.value as u128 * rhs.value as u128) % self.p() as u128;
        Zp {
            value: m as u64,
            modulus: self.modulus,
        }
    }
    #[inline]
    fn neg(&self) -> Self {
        let v = if self.value == 0 {
            0
        } else {
            self.p() - self.value
        };
        Zp {
            value: v,
            modulus: self.modulus,
        }
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn tag(ctx: &Modulus) -> RingTag {
        RingTag::PrimeField { modulus: ctx.0 }
    }
}

impl Field for Zp {
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on (value, p)
        let (mut r0, mut r1) = (self.p() as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(Zp::new(t0.rem_euclid(self.p() as i128) as u64, self.modulus))
    }
}
