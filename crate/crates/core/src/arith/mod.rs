//! Exact integer arithmetic: primality, factorization and factored integers.
//!
//! Everything here is generic over [`Natural`] so that small values stay in
//! machine words and group orders can grow to arbitrary precision.

mod factor;
mod factorization;
mod natural;
mod primes;

pub use factor::{factor, smooth_part};
pub use factorization::Factorization;
pub use natural::{convert, Natural};
pub use primes::{is_prime, prime_power, primes_up_to, small_primes, SIEVE_LIMIT, TRIAL_LIMIT};

/// Exponent of `p` in `f`; errors when `p` is not prime.
pub fn valuation<T: Natural>(f: &Factorization<T>, p: &T) -> crate::Result<u32> {
    f.valuation(p)
}

/// Largest prime in `f`; errors on the empty factorization.
pub fn largest_prime<T: Natural>(f: &Factorization<T>) -> crate::Result<T> {
    f.largest_prime().cloned()
}
