//! Exact arithmetic in the prime field GF(p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// A prime field GF(p), identified by its modulus.
///
/// Primality is checked eagerly, so a `FieldSpec` value always describes a
/// field. The spec is `Copy` and is carried by every value built on top of
/// it; mixing values from different fields is a usage error and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    /// The field with `p` elements. Fails unless `p` is prime.
    pub fn new(p: u64) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(FieldSpec { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Canonical residue of `value`.
    pub fn scalar(&self, value: u64) -> Scalar {
        Scalar {
            value: value % self.p,
            field: *self,
        }
    }

    /// Canonical residue of a signed integer.
    pub fn scalar_from_i64(&self, value: i64) -> Scalar {
        let p = self.p as i64;
        self.scalar(value.rem_euclid(p) as u64)
    }

    pub fn zero(&self) -> Scalar {
        self.scalar(0)
    }

    pub fn one(&self) -> Scalar {
        self.scalar(1)
    }

    /// All field elements in residue order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        (0..self.p).map(move |v| self.scalar(v))
    }

    pub(crate) fn add_mod(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub(crate) fn sub_mod(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub(crate) fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub(crate) fn neg_mod(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub(crate) fn inv_mod(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        pow_mod(a, self.p - 2, self.p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b: u128 = (base % p) as u128;
    let m = p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// An element of GF(p), stored as its canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u64,
    field: FieldSpec,
}

impl Scalar {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse. Fails on zero.
    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar {
            value: self.field.inv_mod(self.value),
            field: self.field,
        })
    }

    pub fn pow(&self, exp: u64) -> Scalar {
        Scalar {
            value: pow_mod(self.value, exp, self.field.p),
            field: self.field,
        }
    }
}

fn check_fields(a: &Scalar, b: &Scalar) {
    assert_eq!(
        a.field, b.field,
        "scalars from different fields (p = {} vs p = {})",
        a.field.p, b.field.p
    );
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        check_fields(&self, &rhs);
        self.field.scalar(self.value + rhs.value)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        check_fields(&self, &rhs);
        self.field.scalar(self.value + self.field.p - rhs.value)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        check_fields(&self, &rhs);
        Scalar {
            value: self.field.mul_mod(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: self.field.neg_mod(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
