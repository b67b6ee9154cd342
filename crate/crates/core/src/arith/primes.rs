use std::sync::OnceLock;

use super::natural::Natural;

/// Inputs below this bound are decided by sieve lookup.
pub const SIEVE_LIMIT: u64 = 1 << 20;

/// Above 64 bits, trial division by every prime up to this bound is mandatory
/// before the probabilistic test runs.
pub const TRIAL_LIMIT: u64 = 1_000_000;

const MR_BASES_64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const MR_BASES_WIDE: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

struct Sieve {
    composite: Vec<bool>,
    primes: Vec<u64>,
}

fn sieve() -> &'static Sieve {
    static SIEVE: OnceLock<Sieve> = OnceLock::new();
    SIEVE.get_or_init(|| {
        let n = SIEVE_LIMIT as usize;
        let mut composite = vec![false; n];
        composite[0] = true;
        composite[1] = true;
        let mut i = 2;
        while i * i < n {
            if !composite[i] {
                let mut j = i * i;
                while j < n {
                    composite[j] = true;
                    j += i;
                }
            }
            i += 1;
        }
        let primes = (2..n as u64).filter(|&k| !composite[k as usize]).collect();
        Sieve { composite, primes }
    })
}

/// All primes below 2^20, ascending.
pub fn small_primes() -> &'static [u64] {
    &sieve().primes
}

/// Primes `p <= bound` (bound clamped to the sieve range).
pub fn primes_up_to(bound: u64) -> &'static [u64] {
    let primes = small_primes();
    let end = primes.partition_point(|&p| p <= bound);
    &primes[..end]
}

fn strong_probable_prime<T: Natural>(n: &T, base: u64) -> bool {
    let one = T::one();
    let n_minus_one = n.clone() - one.clone();
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    let two = T::from_u64_exact(2);
    while d.is_even() {
        d = d / two.clone();
        s += 1;
    }
    let a = T::from_u64_exact(base) % n.clone();
    if a.is_zero() {
        return true;
    }
    let mut x = a.pow_mod(&d, n);
    if x == one || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = x.mul_mod(&x, n);
        if x == n_minus_one {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

fn is_prime_u64(n: u64) -> bool {
    if n < SIEVE_LIMIT {
        return !sieve().composite[n as usize];
    }
    for &p in primes_up_to(251) {
        if n.is_multiple_of(p) {
            return false;
        }
    }
    MR_BASES_64.iter().all(|&b| strong_probable_prime(&n, b))
}

/// Primality test.
///
/// Exact for every input below 2^64 (sieve lookup below 2^20, then a
/// strong-pseudoprime test with the first twelve prime bases). Wider inputs
/// are trial-divided by every prime up to 10^6 and then run through twenty
/// fixed Miller-Rabin rounds.
pub fn is_prime<T: Natural>(n: &T) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in primes_up_to(TRIAL_LIMIT) {
        if n.rem_u64(p) == 0 {
            return false;
        }
    }
    MR_BASES_WIDE.iter().all(|&b| strong_probable_prime(n, b))
}

/// Returns `(p, f)` when `q = p^f` with `p` prime and `f >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    if is_prime_u64(q) {
        return Some((q, 1));
    }
    for f in (2..=q.ilog2()).rev() {
        let root = (q as f64).powf(1.0 / f as f64).round() as u64;
        for r in root.saturating_sub(1)..=root + 1 {
            if r >= 2 && r.checked_pow(f) == Some(q) && is_prime_u64(r) {
                return Some((r, f));
            }
        }
    }
    None
}
