use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, ToPrimitive, Unsigned};

/// Unsigned integer type the arithmetic routines are generic over.
///
/// Implemented for `u64`, `u128` and [`BigUint`]. The only operation that
/// needs per-type care is modular multiplication, since the product of two
/// residues may not fit in `Self`.
pub trait Natural:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Integer
    + Roots
    + Unsigned
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// `self * rhs mod modulus` without overflow.
    fn mul_mod(&self, rhs: &Self, modulus: &Self) -> Self;

    /// Number of significant bits.
    fn bit_len(&self) -> u64;

    /// Remainder by a machine word.
    fn rem_u64(&self, d: u64) -> u64;

    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("every Natural holds a u64")
    }

    fn to_big(&self) -> BigUint;

    fn from_big(v: &BigUint) -> Option<Self>;

    fn pow_mod(&self, exp: &Self, modulus: &Self) -> Self {
        let two = Self::from_u64_exact(2);
        let mut result = Self::one() % modulus.clone();
        let mut base = self.clone() % modulus.clone();
        let mut e = exp.clone();
        while !e.is_zero() {
            if e.is_odd() {
                result = result.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            e = e / two.clone();
        }
        result
    }
}

impl Natural for u64 {
    fn mul_mod(&self, rhs: &Self, modulus: &Self) -> Self {
        ((*self as u128 * *rhs as u128) % *modulus as u128) as u64
    }

    fn bit_len(&self) -> u64 {
        (64 - self.leading_zeros()) as u64
    }

    fn rem_u64(&self, d: u64) -> u64 {
        self % d
    }

    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }

    fn from_big(v: &BigUint) -> Option<Self> {
        v.to_u64()
    }
}

impl Natural for u128 {
    fn mul_mod(&self, rhs: &Self, modulus: &Self) -> Self {
        let (a, b) = (self % modulus, rhs % modulus);
        match a.checked_mul(b) {
            Some(p) => p % modulus,
            None => ((BigUint::from(a) * BigUint::from(b)) % BigUint::from(*modulus))
                .to_u128()
                .expect("residue below a u128 modulus"),
        }
    }

    fn bit_len(&self) -> u64 {
        (128 - self.leading_zeros()) as u64
    }

    fn rem_u64(&self, d: u64) -> u64 {
        (self % d as u128) as u64
    }

    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }

    fn from_big(v: &BigUint) -> Option<Self> {
        v.to_u128()
    }
}

impl Natural for BigUint {
    fn mul_mod(&self, rhs: &Self, modulus: &Self) -> Self {
        (self * rhs) % modulus
    }

    fn bit_len(&self) -> u64 {
        self.bits()
    }

    fn rem_u64(&self, d: u64) -> u64 {
        (self % d).to_u64().expect("remainder below a u64 divisor")
    }

    fn to_big(&self) -> BigUint {
        self.clone()
    }

    fn from_big(v: &BigUint) -> Option<Self> {
        Some(v.clone())
    }

    fn pow_mod(&self, exp: &Self, modulus: &Self) -> Self {
        self.modpow(exp, modulus)
    }
}

/// Exact conversion between two `Natural` types, if the value fits.
pub fn convert<A: Natural, B: Natural>(v: &A) -> Option<B> {
    match v.to_u64() {
        Some(small) => B::from_u64(small),
        None => B::from_big(&v.to_big()),
    }
}
