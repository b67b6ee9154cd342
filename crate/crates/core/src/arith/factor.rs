use super::factorization::Factorization;
use super::natural::Natural;
use super::primes::{is_prime, primes_up_to, TRIAL_LIMIT};
use crate::error::{Error, Result};

/// Full prime factorization: trial division by primes up to 10^6, then
/// Pollard-rho with Brent's cycle detection on whatever remains.
pub fn factor<T: Natural>(n: &T) -> Result<Factorization<T>> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    // Narrow to u64 when possible; the wide types only pay for wide inputs.
    if let Some(small) = n.to_u64() {
        if std::any::TypeId::of::<T>() != std::any::TypeId::of::<u64>() {
            return Ok(factor(&small)?
                .convert()
                .expect("u64 primes fit every Natural"));
        }
    }
    let (mut f, rest) = trial_divide(n, TRIAL_LIMIT);
    if !rest.is_one() {
        split_into(rest, &mut f);
    }
    Ok(f)
}

/// Divides out primes `p <= bound`, stopping once `p^2` exceeds the
/// remaining cofactor. Returns the factored part and the cofactor; a cofactor
/// below `next_prime(bound)^2` is prime or 1.
fn trial_divide<T: Natural>(n: &T, bound: u64) -> (Factorization<T>, T) {
    let mut f = Factorization::one();
    let mut rest = n.clone();
    let mut root = rest.sqrt();
    let mut cofactor_is_prime = false;
    for &p in primes_up_to(bound) {
        if T::from_u64_exact(p) > root {
            cofactor_is_prime = true;
            break;
        }
        if rest.rem_u64(p) != 0 {
            continue;
        }
        let pt = T::from_u64_exact(p);
        let mut e = 0;
        while rest.rem_u64(p) == 0 {
            rest = rest / pt.clone();
            e += 1;
        }
        f.insert_prime(pt, e);
        root = rest.sqrt();
    }
    if !rest.is_one() && cofactor_is_prime {
        f.insert_prime(rest, 1);
        return (f, T::one());
    }
    (f, rest)
}

fn split_into<T: Natural>(n: T, f: &mut Factorization<T>) {
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            f.insert_prime(m, 1);
            continue;
        }
        if let Some(r) = exact_root(&m) {
            let (root, k) = r;
            for _ in 0..k {
                stack.push(root.clone());
            }
            continue;
        }
        let d = pollard_brent(&m);
        let other = m / d.clone();
        stack.push(d);
        stack.push(other);
    }
}

/// `m = r^k` with `k >= 2`, smallest such `r`; rho stalls on prime powers.
fn exact_root<T: Natural>(m: &T) -> Option<(T, u32)> {
    let bits = m.bit_len() as u32;
    for k in (2..=bits).rev() {
        let r = m.nth_root(k);
        if r > T::one() && num_traits::pow(r.clone(), k as usize) == *m {
            return Some((r, k));
        }
    }
    None
}

/// A nontrivial divisor of the odd composite `n` (not a perfect power).
/// Polynomial `x^2 + c` with seeds `c = 1, 2, 3, ...` in order.
pub(crate) fn pollard_brent<T: Natural>(n: &T) -> T {
    let two = T::from_u64_exact(2);
    if n.is_even() {
        return two;
    }
    const BATCH: u64 = 128;
    for seed in 1u64.. {
        let c = T::from_u64_exact(seed) % n.clone();
        let step = |x: &T| (x.mul_mod(x, n) + c.clone()) % n.clone();
        let mut y = two.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut g = T::one();
        let mut q = T::one();
        let mut r = 1u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = step(&y);
                    q = q.mul_mod(&abs_diff(&x, &y), n);
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = step(&ys);
                g = abs_diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
    }
    unreachable!("seed sequence is unbounded")
}

fn abs_diff<T: Natural>(a: &T, b: &T) -> T {
    if a >= b {
        a.clone() - b.clone()
    } else {
        b.clone() - a.clone()
    }
}

/// Splits `n` over the given primes: returns the factored part and the
/// cofactor left after removing every listed prime. Used to test
/// smoothness without factoring the cofactor.
pub fn smooth_part<T: Natural>(n: &T, primes: &[u64]) -> (Factorization<T>, T) {
    let mut f = Factorization::one();
    let mut rest = n.clone();
    for &p in primes {
        if rest.is_one() {
            break;
        }
        if rest.rem_u64(p) != 0 {
            continue;
        }
        let pt = T::from_u64_exact(p);
        let mut e = 0;
        while rest.rem_u64(p) == 0 {
            rest = rest / pt.clone();
            e += 1;
        }
        f.insert_prime(pt, e);
    }
    (f, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;

    #[test]
    fn examples() {
        assert!(factor(&1u64).unwrap().is_empty());
        assert_eq!(factor(&0u64), Err(Error::Zero));
        let f = factor(&531440u64).unwrap();
        let pairs: Vec<_> = f.iter().map(|(p, e)| (*p, e)).collect();
        assert_eq!(pairs, vec![(2, 4), (5, 1), (7, 1), (13, 1), (73, 1)]);
        let f = factor(&19682u64).unwrap();
        let pairs: Vec<_> = f.iter().map(|(p, e)| (*p, e)).collect();
        assert_eq!(pairs, vec![(2, 1), (13, 1), (757, 1)]);
    }

    #[test]
    fn semiprime_needs_rho() {
        // two primes above the trial-division limit
        let (a, b) = (1_000_003u64, 1_000_033u64);
        let f = factor(&(a * b)).unwrap();
        assert_eq!(f.primes().copied().collect::<Vec<_>>(), vec![a, b]);
        assert!(pollard_brent(&(a * b)) % a == 0 || (a * b) % pollard_brent(&(a * b)) == 0);
    }

    #[test]
    fn prime_square_above_trial_limit() {
        let p = 1_000_003u64;
        let f = factor(&(p * p)).unwrap();
        assert_eq!(f.valuation(&p).unwrap(), 2);
    }

    #[test]
    fn wide_value() {
        // 757^8 + 1 does not fit in u64
        let n = BigUint::from(757u32).pow(8) + 1u32;
        let f = factor(&n).unwrap();
        assert_eq!(f.value_big(), n);
        assert!(f.primes().all(is_prime));
        let g = factor(&n.to_u128().unwrap()).unwrap();
        assert_eq!(g.convert::<BigUint>().unwrap(), f);
    }

    #[test]
    fn smooth_split() {
        let (f, rest) = smooth_part(&(2u64 * 2 * 13 * 757 * 1009), &[2, 3, 13, 757]);
        assert_eq!(f.value(), 2 * 2 * 13 * 757);
        assert_eq!(rest, 1009);
    }
}
