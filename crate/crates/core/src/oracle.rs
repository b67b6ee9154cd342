//! Brute-force element-order spectra for small groups.
//!
//! These are deliberately naive: they enumerate cycle types or matrices and
//! serve as an independent check on the rule-based graphs.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::arith::is_prime;
use crate::catalog::GroupId;
use crate::error::{Error, Result};
use crate::gkgraph::GkGraph;

pub const ALT_DEGREE_RANGE: std::ops::RangeInclusive<u32> = 5..=30;
pub const L2_FIELD_RANGE: std::ops::RangeInclusive<u64> = 5..=101;

/// Set of element orders of a group; always contains 1 and is closed under
/// divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub orders: BTreeSet<u64>,
    pub group: GroupId,
}

impl Spectrum {
    fn from_maximal(group: GroupId, orders: impl IntoIterator<Item = u64>) -> Self {
        let mut closed = BTreeSet::new();
        for m in orders {
            closed.extend((1..=m).filter(|d| m % d == 0));
        }
        Self {
            orders: closed,
            group,
        }
    }

    pub fn contains(&self, k: u64) -> bool {
        self.orders.contains(&k)
    }
}

/// Calls `visit` on every partition of `n` (parts non-increasing).
fn for_each_partition(n: u32, visit: &mut impl FnMut(&[u32])) {
    fn go(rest: u32, max: u32, parts: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if rest == 0 {
            visit(parts);
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            parts.push(k);
            go(rest - k, k, parts, visit);
            parts.pop();
        }
    }
    go(n, n, &mut Vec::new(), visit);
}

/// Number of partitions of `n`, counted by the enumerator.
pub fn partition_count(n: u32) -> usize {
    let mut count = 0;
    for_each_partition(n, &mut |_| count += 1);
    count
}

/// Spectrum of `Alt(n)`: a cycle type is even iff `n - #parts` is even, and
/// its order is the lcm of the parts.
pub fn spectrum_alt(n: u32) -> Result<Spectrum> {
    if !ALT_DEGREE_RANGE.contains(&n) {
        return Err(Error::OutOfRange(format!(
            "spectrum_alt supports 5 <= n <= 30, got {n}"
        )));
    }
    let mut orders = BTreeSet::new();
    for_each_partition(n, &mut |parts| {
        if (n as usize - parts.len()).is_multiple_of(2) {
            orders.insert(parts.iter().fold(1u64, |acc, &k| acc.lcm(&(k as u64))));
        }
    });
    Ok(Spectrum::from_maximal(GroupId::alt(n), orders))
}

type Mat = [u64; 4];

fn mat_mul(a: &Mat, b: &Mat, q: u64) -> Mat {
    [
        (a[0] * b[0] + a[1] * b[2]) % q,
        (a[0] * b[1] + a[1] * b[3]) % q,
        (a[2] * b[0] + a[3] * b[2]) % q,
        (a[2] * b[1] + a[3] * b[3]) % q,
    ]
}

/// Order of the image of `m` in `PSL(2,q)`: least `k` with `m^k = +-I`.
fn projective_order(m: &Mat, q: u64) -> u64 {
    let identity = [1, 0, 0, 1];
    let minus_identity = [q - 1, 0, 0, q - 1];
    let mut power = *m;
    let mut k = 1;
    while power != identity && power != minus_identity {
        power = mat_mul(&power, m, q);
        k += 1;
    }
    k
}

fn inverse_mod(a: u64, q: u64) -> u64 {
    // q is prime
    let mut result = 1;
    let (mut base, mut e) = (a % q, q - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    result
}

/// All determinant-one matrices over `GF(q)`, `q` prime, in a fixed order.
/// For `a != 0` the entry `d` is solved from `ad - bc = 1`; for `a = 0`,
/// `c = -1/b` and `d` is free.
fn for_each_sl2(q: u64, visit: &mut impl FnMut(&Mat)) {
    for a in 0..q {
        for b in 0..q {
            if a == 0 {
                if b == 0 {
                    continue;
                }
                let c = q - inverse_mod(b, q);
                for d in 0..q {
                    visit(&[a, b, c, d]);
                }
            } else {
                let a_inv = inverse_mod(a, q);
                for c in 0..q {
                    let d = (1 + b * c) % q * a_inv % q;
                    visit(&[a, b, c, d]);
                }
            }
        }
    }
}

/// Number of matrices [`spectrum_l2`] enumerates; equals `q^3 - q`.
pub fn sl2_enumeration_count(q: u64) -> u64 {
    let mut count = 0;
    for_each_sl2(q, &mut |_| count += 1);
    count
}

/// Spectrum of `L(2,q)` for prime `5 <= q <= 101`, by enumerating `SL(2,q)`
/// and taking orders modulo the center.
pub fn spectrum_l2(q: u64) -> Result<Spectrum> {
    if !L2_FIELD_RANGE.contains(&q) || !is_prime(&q) {
        return Err(Error::OutOfRange(format!(
            "spectrum_l2 needs a prime 5 <= q <= 101, got {q}"
        )));
    }
    let mut orders = BTreeSet::new();
    for_each_sl2(q, &mut |m| {
        debug_assert_eq!((m[0] * m[3] + q * q - m[1] * m[2] % q) % q, 1);
        orders.insert(projective_order(m, q));
    });
    Ok(Spectrum::from_maximal(GroupId::l2(q), orders))
}

/// Spectrum for any group the oracle supports (`Alt(n)` and `L(2,p)`,
/// including names isomorphic to them).
pub fn spectrum(g: &GroupId) -> Result<Spectrum> {
    for candidate in [*g, g.canonical()] {
        match candidate {
            GroupId::Alt { n } => return spectrum_alt(n),
            GroupId::Classical {
                family: crate::catalog::Family::L,
                dim: 2,
                q,
            } if is_prime(&q) => return spectrum_l2(q),
            _ => {}
        }
    }
    Err(Error::Unsupported {
        group: g.to_string(),
        reason: "the oracle covers Alt(n), 5 <= n <= 30, and L(2,p), p prime <= 101".into(),
    })
}

/// Prime graph of a spectrum: `r -- s` iff `rs` is an element order.
pub fn graph_from_spectrum(s: &Spectrum) -> Result<GkGraph> {
    let primes: BTreeSet<u64> = s
        .orders
        .iter()
        .filter(|&&k| k > 1 && is_prime(&k))
        .copied()
        .collect();
    let primes: Vec<u64> = primes.into_iter().collect();
    let mut edges = Vec::new();
    for (i, &r) in primes.iter().enumerate() {
        for &t in &primes[i + 1..] {
            if s.contains(r * t) {
                edges.push((r, t));
            }
        }
    }
    GkGraph::new(primes, edges)
}
