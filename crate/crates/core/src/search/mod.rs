//! Bounded enumeration of finite simple groups and filtering by order
//! constraints.

mod bounds;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

pub use bounds::{BoundFamily, SearchBounds};

use crate::arith::{factor, primes_up_to, smooth_part, Factorization, SIEVE_LIMIT};
use crate::catalog::{order, order_data, Family, GroupId, LieOrder, OrderData, ALL_SPORADIC};
use crate::error::{Error, Result};
use crate::Order;

/// Conditions on the factored order. At least one field must be set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraint {
    pub largest_prime_equals: Option<u64>,
    pub required_divisor: Option<BigUint>,
    pub pi_subset_of: Option<BTreeSet<u64>>,
}

impl Constraint {
    pub fn validate(&self) -> Result<()> {
        if self.largest_prime_equals.is_none()
            && self.required_divisor.is_none()
            && self.pi_subset_of.is_none()
        {
            return Err(Error::Bounds("constraint sets no field".into()));
        }
        if let Some(p) = self.largest_prime_equals {
            if !crate::arith::is_prime(&p) {
                return Err(Error::NotPrime(p.to_string()));
            }
        }
        if let Some(n) = &self.required_divisor {
            if n.is_one() || *n == BigUint::ZERO {
                return Err(Error::Bounds("required divisor must exceed 1".into()));
            }
        }
        Ok(())
    }

    /// Checks a fully factored order.
    pub fn holds_for(&self, f: &Order) -> Result<bool> {
        if let Some(p) = self.largest_prime_equals {
            if f.largest_prime().ok() != Some(&BigUint::from(p)) {
                return Ok(false);
            }
        }
        if let Some(n) = &self.required_divisor {
            if !f.divides_by(&factor(n)?) {
                return Ok(false);
            }
        }
        if let Some(set) = &self.pi_subset_of {
            if !f
                .primes()
                .all(|p| p.to_u64().is_some_and(|p| set.contains(&p)))
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn prime_powers_up_to(cap: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for &p in primes_up_to(cap) {
        let mut q = p;
        while q <= cap {
            out.push(q);
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
        }
    }
    out.sort_unstable();
    out
}

/// Every simple group inside `bounds`, one name per isomorphism class
/// (the canonical one), sorted by family and then parameters.
pub fn enumerate(bounds: &SearchBounds) -> Result<Vec<GroupId>> {
    bounds.validate()?;
    let mut found = BTreeSet::new();
    let mut push = |g: GroupId| {
        if g.validate().is_ok() {
            found.insert(g.canonical());
        }
    };
    for n in 5..=bounds.alt_max_n {
        push(GroupId::alt(n));
    }
    for q in prime_powers_up_to(bounds.q_cap(BoundFamily::L2)) {
        push(GroupId::l2(q));
    }
    for family in Family::LIE {
        let bf = BoundFamily::Lie(family);
        let qs = prime_powers_up_to(bounds.q_cap(bf));
        if family.is_classical() {
            for rank in bf.min_rank()..=bounds.rank_cap(bf) {
                let dim = match family {
                    Family::L | Family::U => rank,
                    Family::O => 2 * rank + 1,
                    _ => 2 * rank,
                };
                for &q in &qs {
                    push(GroupId::classical(family, dim, q));
                }
            }
        } else {
            for &q in &qs {
                push(GroupId::exceptional(family, q));
            }
        }
    }
    if bounds.include_sporadics {
        for s in ALL_SPORADIC {
            push(GroupId::Sporadic(s));
        }
    }
    Ok(found.into_iter().collect())
}

/// Factors a Lie-type order whose cofactors are all divisible only by the
/// given primes; `None` if some cofactor has another prime factor.
fn factor_over(lie: &LieOrder, primes: &[u64]) -> Result<Option<Order>> {
    if primes.binary_search(&lie.characteristic).is_err() {
        return Ok(None);
    }
    let mut total = Factorization::one();
    total.insert_prime(BigUint::from(lie.characteristic), lie.exponent as u32);
    for c in &lie.cofactors {
        let (part, rest): (Order, bool) = match c.to_u128() {
            Some(small) => {
                let (f, r) = smooth_part(&small, primes);
                (f.convert().expect("u128 primes widen"), r == 1)
            }
            None => {
                let (f, r) = smooth_part(c, primes);
                (f, r.is_one())
            }
        };
        if !rest {
            return Ok(None);
        }
        total.merge_in(&part);
    }
    Ok(Some(
        total.checked_div(&factor(&BigUint::from(lie.center))?)?,
    ))
}

/// Valuation of `r` in a Lie-type order without factoring it.
fn lie_valuation(lie: &LieOrder, r: u64) -> u32 {
    let mut v = if lie.characteristic == r {
        lie.exponent as u32
    } else {
        0
    };
    for c in &lie.cofactors {
        let mut c = c.clone();
        while &c % r == BigUint::ZERO {
            c /= r;
            v += 1;
        }
    }
    let mut center = lie.center;
    while center.is_multiple_of(r) {
        center /= r;
        v -= 1;
    }
    v
}

/// Whether the order of `g` satisfies `c`. Cheap filters run first: the
/// largest-prime test only trial-divides by primes up to that prime, the
/// divisor test only computes the needed valuations, and the subset test
/// only divides by the allowed primes.
pub fn satisfies(g: &GroupId, c: &Constraint) -> Result<bool> {
    let lie = match order_data(g)? {
        OrderData::Factored(f) => return c.holds_for(&f),
        OrderData::Lie(lie) => lie,
    };
    if let Some(p) = c.largest_prime_equals {
        if p >= SIEVE_LIMIT {
            return c.holds_for(&lie.factor()?);
        }
        return match factor_over(&lie, primes_up_to(p))? {
            Some(f) => c.holds_for(&f),
            None => Ok(false),
        };
    }
    if let Some(n) = &c.required_divisor {
        for (r, e) in factor(n)?.iter() {
            let Some(r) = r.to_u64() else {
                return Ok(false);
            };
            if lie_valuation(&lie, r) < e {
                return Ok(false);
            }
        }
    }
    if let Some(set) = &c.pi_subset_of {
        let primes: Vec<u64> = set.iter().copied().collect();
        return Ok(factor_over(&lie, &primes)?.is_some());
    }
    Ok(true)
}

/// Groups within `bounds` whose order satisfies `c`, in enumeration order.
pub fn find(bounds: &SearchBounds, c: &Constraint) -> Result<Vec<GroupId>> {
    c.validate()?;
    let candidates = enumerate(bounds)?;
    let verdicts: Vec<Result<bool>> = candidates.par_iter().map(|g| satisfies(g, c)).collect();
    let mut out = Vec::new();
    for (g, verdict) in candidates.into_iter().zip(verdicts) {
        if verdict? {
            out.push(g);
        }
    }
    Ok(out)
}

/// Re-checks a group against `c` from its fully factored order.
pub fn recheck(g: &GroupId, c: &Constraint) -> Result<bool> {
    c.holds_for(&order(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_group;

    #[test]
    fn tiny_enumeration() {
        let mut b = SearchBounds::empty();
        b.alt_max_n = 6;
        assert_eq!(
            enumerate(&b).unwrap(),
            vec![GroupId::alt(5), GroupId::alt(6)]
        );
    }

    #[test]
    fn sporadics_only() {
        let mut b = SearchBounds::empty();
        b.include_sporadics = true;
        assert_eq!(enumerate(&b).unwrap().len(), 27);
    }

    #[test]
    fn isomorphic_names_collapse() {
        let mut b = SearchBounds::empty();
        b.alt_max_n = 8;
        b.q_max.insert(BoundFamily::L2, 9);
        let list = enumerate(&b).unwrap();
        assert_eq!(list.iter().filter(|g| **g == GroupId::alt(5)).count(), 1);
        assert!(!list.contains(&GroupId::l2(4)));
        assert!(!list.contains(&GroupId::l2(9)));
        assert!(list.contains(&GroupId::l2(7)));
        assert!(list.contains(&GroupId::l2(8)));
    }

    #[test]
    fn cheap_filters_agree_with_full_factorization() {
        let c = Constraint {
            largest_prime_equals: Some(757),
            ..Default::default()
        };
        for s in [
            "E6(3)",
            "L(2,757)",
            "U(6,27)",
            "O(7,27)",
            "2E6(3)",
            "L(3,729)",
            "S(16,757)",
        ] {
            let g = parse_group(s).unwrap();
            assert_eq!(satisfies(&g, &c).unwrap(), recheck(&g, &c).unwrap(), "{s}");
        }
        let d = Constraint {
            required_divisor: Some(BigUint::from(51319u32)),
            ..Default::default()
        };
        for s in ["U(4,27)", "2E6(3)", "E6(3)", "L(2,73)"] {
            let g = parse_group(s).unwrap();
            assert_eq!(satisfies(&g, &d).unwrap(), recheck(&g, &d).unwrap(), "{s}");
        }
    }

    #[test]
    fn empty_constraint_rejected() {
        assert!(find(&SearchBounds::empty(), &Constraint::default()).is_err());
    }
}
