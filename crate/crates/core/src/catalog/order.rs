use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::group::{Family, GroupId};
use crate::arith::{factor, prime_power, primes_up_to, Factorization};
use crate::error::{Error, Result};
use crate::Order;

/// A factor of the form `q^k - 1`, `q^k + 1`, or a product of cyclotomic
/// values given directly.
#[derive(Clone, Copy, Debug)]
enum Term {
    Minus(u32),
    Plus(u32),
    Cyclotomic(&'static [u32]),
}

impl Term {
    /// Indices `d` with `term = prod Phi_d(q)`.
    fn cyclotomic_indices(self) -> Vec<u32> {
        match self {
            Term::Minus(k) => divisors(k),
            Term::Plus(k) => divisors(2 * k).into_iter().filter(|d| k % d != 0).collect(),
            Term::Cyclotomic(ds) => ds.to_vec(),
        }
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn mobius(mut n: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `Phi_d(q) = prod_{e | d} (q^e - 1)^mu(d/e)`.
pub(crate) fn cyclotomic_value(d: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for e in divisors(d) {
        let t = q.pow(e) - 1u32;
        match mobius(d / e) {
            1 => num *= t,
            -1 => den *= t,
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem == BigUint::ZERO);
    quot
}

/// An order `p^exponent * prod(cofactors) / center`, with each cofactor a
/// cyclotomic value `Phi_d(q)`.
#[derive(Clone, Debug)]
pub struct LieOrder {
    pub characteristic: u64,
    pub exponent: u64,
    pub cofactors: Vec<BigUint>,
    pub center: u64,
}

/// Order data in the cheapest form available: fully factored for
/// alternating and sporadic groups, as an unfactored formula for Lie type.
#[derive(Clone, Debug)]
pub enum OrderData {
    Factored(Order),
    Lie(LieOrder),
}

fn gcd_pow_pm(modulus: u64, q: u64, k: u32, plus: bool) -> u64 {
    // gcd(modulus, q^k -/+ 1) for small modulus
    let r = (0..k).fold(1u64, |acc, _| acc * (q % modulus) % modulus);
    let v = if plus {
        (r + 1) % modulus
    } else {
        (r + modulus - 1) % modulus
    };
    v.gcd(&modulus)
}

/// `(N, terms, center)` with `|G| = q^N * prod(terms) / center`.
fn lie_formula(g: &GroupId) -> (u64, Vec<Term>, u64) {
    use Term::*;
    let (family, dim, q) = match *g {
        GroupId::Classical { family, dim, q } => (family, dim, q),
        GroupId::Exceptional { family, q } => (family, 0, q),
        _ => unreachable!("lie_formula on a non-Lie group"),
    };
    let n = dim as u64;
    let m = dim / 2;
    let mu = m as u64;
    let symplectic = |m: u32| (1..=m).map(|i| Minus(2 * i)).collect::<Vec<_>>();
    match family {
        Family::L => (
            n * (n - 1) / 2,
            (2..=dim).map(Minus).collect(),
            n.gcd(&(q - 1)),
        ),
        Family::U => (
            n * (n - 1) / 2,
            (2..=dim)
                .map(|i| if i % 2 == 0 { Minus(i) } else { Plus(i) })
                .collect(),
            n.gcd(&(q + 1)),
        ),
        Family::S | Family::O => (mu * mu, symplectic(m), 2u64.gcd(&(q - 1))),
        Family::OPlus => {
            let mut t = vec![Minus(m)];
            t.extend(symplectic(m - 1));
            (mu * (mu - 1), t, gcd_pow_pm(4, q, m, false))
        }
        Family::OMinus => {
            let mut t = vec![Plus(m)];
            t.extend(symplectic(m - 1));
            (mu * (mu - 1), t, gcd_pow_pm(4, q, m, true))
        }
        Family::G2 => (6, vec![Minus(6), Minus(2)], 1),
        Family::F4 => (24, vec![Minus(12), Minus(8), Minus(6), Minus(2)], 1),
        Family::E6 => (
            36,
            vec![Minus(12), Minus(9), Minus(8), Minus(6), Minus(5), Minus(2)],
            3u64.gcd(&(q - 1)),
        ),
        Family::E6Twisted => (
            36,
            vec![Minus(12), Plus(9), Minus(8), Minus(6), Plus(5), Minus(2)],
            3u64.gcd(&(q + 1)),
        ),
        Family::E7 => (
            63,
            vec![
                Minus(18),
                Minus(14),
                Minus(12),
                Minus(10),
                Minus(8),
                Minus(6),
                Minus(2),
            ],
            2u64.gcd(&(q - 1)),
        ),
        Family::E8 => (
            120,
            vec![
                Minus(30),
                Minus(24),
                Minus(20),
                Minus(18),
                Minus(14),
                Minus(12),
                Minus(8),
                Minus(2),
            ],
            1,
        ),
        // q^8 + q^4 + 1 = Phi_3 Phi_6 Phi_12
        Family::D4Triality => (12, vec![Cyclotomic(&[3, 6, 12]), Minus(6), Minus(2)], 1),
        Family::Suzuki => (2, vec![Plus(2), Minus(1)], 1),
        Family::Ree => (3, vec![Plus(3), Minus(1)], 1),
        Family::F4Twisted => (12, vec![Plus(6), Minus(4), Plus(3), Minus(1)], 1),
        Family::Alt | Family::Sporadic => unreachable!(),
    }
}

/// `n!/2` by Legendre's formula.
fn alternating_order(n: u32) -> Order {
    let mut f = Factorization::one();
    for &p in primes_up_to(n as u64) {
        let mut e = 0u32;
        let mut pk = p;
        while pk <= n as u64 {
            e += (n as u64 / pk) as u32;
            pk *= p;
        }
        f.insert_prime(BigUint::from(p), e);
    }
    f.checked_div(&Factorization::from_prime_powers([(BigUint::from(2u32), 1)]).unwrap())
        .expect("n! is even for n >= 2")
}

/// Order in the form the search can filter cheaply.
pub fn order_data(g: &GroupId) -> Result<OrderData> {
    g.validate()?;
    Ok(match *g {
        GroupId::Alt { n } => OrderData::Factored(alternating_order(n)),
        GroupId::Sporadic(s) => OrderData::Factored(s.order()),
        _ => {
            let q = g.field_size().expect("Lie type");
            let (p, f) = prime_power(q).expect("validated");
            let (n, terms, center) = lie_formula(g);
            let cofactors = terms
                .into_iter()
                .flat_map(Term::cyclotomic_indices)
                .map(|d| cyclotomic_value(d, q))
                .filter(|v| !v.is_one())
                .collect();
            OrderData::Lie(LieOrder {
                characteristic: p,
                exponent: n * f as u64,
                cofactors,
                center,
            })
        }
    })
}

impl LieOrder {
    /// Factors each cofactor separately, then divides out the center.
    pub fn factor(&self) -> Result<Order> {
        let mut total = Factorization::one();
        total.insert_prime(BigUint::from(self.characteristic), self.exponent as u32);
        for c in &self.cofactors {
            let part = match c.to_u128() {
                Some(small) => factor(&small)?.convert().expect("u128 primes widen"),
                None => factor(c)?,
            };
            total.merge_in(&part);
        }
        let center: Order = factor(&BigUint::from(self.center))?;
        total.checked_div(&center).map_err(|e| {
            Error::NotDivisible(format!("center {} of the order formula: {e}", self.center))
        })
    }
}

/// Exact factored order of the simple group.
pub fn order(g: &GroupId) -> Result<Order> {
    match order_data(g)? {
        OrderData::Factored(f) => Ok(f),
        OrderData::Lie(lie) => lie.factor(),
    }
}

/// Ascending prime divisors of the order.
pub fn pi(g: &GroupId) -> Result<Vec<BigUint>> {
    Ok(order(g)?.primes().cloned().collect())
}

/// `|Out(G)|`, known only for `E6(3)` and `2E6(3)`.
pub fn out_order(g: &GroupId) -> Result<u64> {
    match *g {
        GroupId::Exceptional {
            family: Family::E6 | Family::E6Twisted,
            q: 3,
        } => Ok(2),
        _ => Err(Error::Unsupported {
            group: g.to_string(),
            reason: "outer automorphism orders are recorded only for E6(3) and 2E6(3)".into(),
        }),
    }
}
