use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::natural::{convert, Natural};
use super::primes::is_prime;
use crate::error::{Error, Result};

/// A positive integer in factored form: ascending primes with nonzero
/// exponents. The empty factorization is the integer 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Factorization<T: Natural> {
    entries: BTreeMap<T, u32>,
}

impl<T: Natural> Factorization<T> {
    pub fn one() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    /// Builds a factorization from `(prime, exponent)` pairs, checking that
    /// every base is prime. Zero exponents are dropped and repeated primes
    /// accumulate.
    pub fn from_prime_powers<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (T, u32)>,
    {
        let mut f = Self::one();
        for (p, e) in pairs {
            if !is_prime(&p) {
                return Err(Error::NotPrime(p.to_string()));
            }
            f.insert_prime(p, e);
        }
        Ok(f)
    }

    /// Multiplies in `p^e`. The caller guarantees `p` is prime.
    pub(crate) fn insert_prime(&mut self, p: T, e: u32) {
        debug_assert!(is_prime(&p), "{p} is not prime");
        if e > 0 {
            *self.entries.entry(p).or_insert(0) += e;
        }
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct primes.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(prime, exponent)` pairs in ascending prime order.
    pub fn iter(&self) -> impl Iterator<Item = (&T, u32)> + '_ {
        self.entries.iter().map(|(p, &e)| (p, e))
    }

    /// Ascending prime support.
    pub fn primes(&self) -> impl Iterator<Item = &T> + '_ {
        self.entries.keys()
    }

    pub fn contains(&self, p: &T) -> bool {
        self.entries.contains_key(p)
    }

    /// Exponent of `p`, zero when absent. Rejects non-prime `p`.
    pub fn valuation(&self, p: &T) -> Result<u32> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(self.entries.get(p).copied().unwrap_or(0))
    }

    pub fn largest_prime(&self) -> Result<&T> {
        self.entries
            .keys()
            .next_back()
            .ok_or(Error::EmptyFactorization)
    }

    /// The product `p^e` over all entries. Panics on overflow of `T`; use
    /// [`Factorization::value_big`] when the value may be wide.
    pub fn value(&self) -> T {
        self.iter().fold(T::one(), |acc, (p, e)| {
            let mut acc = acc;
            for _ in 0..e {
                acc = acc * p.clone();
            }
            acc
        })
    }

    pub fn value_big(&self) -> BigUint {
        self.iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.to_big().pow(e))
    }

    /// Product of two factorizations.
    pub fn merge(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.merge_in(other);
        out
    }

    pub fn merge_in(&mut self, other: &Self) {
        for (p, e) in other.iter() {
            *self.entries.entry(p.clone()).or_insert(0) += e;
        }
    }

    /// Raises every exponent by the factor `k`.
    pub fn pow(&self, k: u32) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|_| k > 0)
                .map(|(p, &e)| (p.clone(), e * k))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (p, e) in divisor.iter() {
            let have = out.entries.get(p).copied().unwrap_or(0);
            if have < e {
                return Err(Error::NotDivisible(format!(
                    "{p}^{e} does not divide the dividend (valuation {have})"
                )));
            }
            if have == e {
                out.entries.remove(p);
            } else {
                out.entries.insert(p.clone(), have - e);
            }
        }
        Ok(out)
    }

    /// True when `divisor` divides `self`.
    pub fn divides_by(&self, divisor: &Self) -> bool {
        divisor
            .iter()
            .all(|(p, e)| self.entries.get(p).copied().unwrap_or(0) >= e)
    }

    /// Re-types the primes, if every one fits in `U`.
    pub fn convert<U: Natural>(&self) -> Option<Factorization<U>> {
        let mut entries = BTreeMap::new();
        for (p, e) in self.iter() {
            entries.insert(convert::<T, U>(p)?, e);
        }
        Some(Factorization { entries })
    }
}

/// `2^4 * 5^1 * 73^1`; the empty factorization renders as `1`.
impl<T: Natural> fmt::Display for Factorization<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, e) in self.iter() {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            write!(f, "{p}^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        let f = Factorization::from_prime_powers([(2u64, 3)]).unwrap();
        assert_eq!(f.valuation(&7).unwrap(), 0);
        assert_eq!(f.valuation(&2).unwrap(), 3);
        assert!(matches!(f.valuation(&4), Err(Error::NotPrime(_))));
    }

    #[test]
    fn largest_prime_of_alt5() {
        let f = Factorization::from_prime_powers([(2u64, 2), (3, 1), (5, 1)]).unwrap();
        assert_eq!(*f.largest_prime().unwrap(), 5);
        assert_eq!(f.value(), 60);
        assert_eq!(
            Factorization::<u64>::one().largest_prime(),
            Err(Error::EmptyFactorization)
        );
    }

    #[test]
    fn rejects_composite_base() {
        assert_eq!(
            Factorization::from_prime_powers([(6u64, 1)]),
            Err(Error::NotPrime("6".into()))
        );
    }

    #[test]
    fn zero_exponents_are_not_stored() {
        let f = Factorization::from_prime_powers([(2u64, 0), (3, 2)]).unwrap();
        assert_eq!(f.len(), 1);
        assert!(!f.contains(&2));
    }

    #[test]
    fn exact_division() {
        let a = Factorization::from_prime_powers([(2u64, 3), (3, 1)]).unwrap();
        let b = Factorization::from_prime_powers([(2u64, 3)]).unwrap();
        assert_eq!(a.checked_div(&b).unwrap().value(), 3);
        assert!(b.checked_div(&a).is_err());
        assert!(a.divides_by(&b));
    }

    #[test]
    fn display() {
        let f = Factorization::from_prime_powers([(73u64, 1), (2, 4)]).unwrap();
        assert_eq!(f.to_string(), "2^4 * 73^1");
        assert_eq!(Factorization::<u64>::one().to_string(), "1");
    }
}
