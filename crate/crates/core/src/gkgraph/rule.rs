use num_integer::Integer;

use super::graph::GkGraph;
use crate::arith::{factor, prime_power, primes_up_to, SIEVE_LIMIT};
use crate::catalog::{Family, GroupId};
use crate::error::{Error, Result};

/// Prime graph from the classical spectrum descriptions of `Alt(n)` and
/// `L(2,q)`. Other groups are accepted only if they are isomorphic to one
/// of these.
pub fn rule_graph(g: &GroupId) -> Result<GkGraph> {
    g.validate()?;
    for candidate in [*g, g.canonical()] {
        match candidate {
            GroupId::Alt { n } => return alternating_graph(n),
            GroupId::Classical {
                family: Family::L,
                dim: 2,
                q,
            } => return l2_graph(q),
            _ => {}
        }
    }
    Err(Error::Unsupported {
        group: g.to_string(),
        reason: "rule-based graphs cover Alt(n) and L(2,q) only".into(),
    })
}

/// Odd primes `r != s` are adjacent iff `r + s <= n`; 2 and odd `r` iff
/// `r + 4 <= n`.
pub fn alternating_graph(n: u32) -> Result<GkGraph> {
    if n < 5 {
        return Err(Error::OutOfRange(format!("Alt({n}) is not simple")));
    }
    if n as u64 >= SIEVE_LIMIT {
        return Err(Error::OutOfRange(format!(
            "Alt({n}) exceeds the prime table"
        )));
    }
    let primes = primes_up_to(n as u64);
    let n = n as u64;
    let mut edges = Vec::new();
    for (i, &r) in primes.iter().enumerate() {
        for &s in &primes[i + 1..] {
            let adjacent = if r == 2 { s + 4 <= n } else { r + s <= n };
            if adjacent {
                edges.push((r, s));
            }
        }
    }
    GkGraph::new(primes.iter().copied(), edges)
}

/// `L(2,q)`, `q = p^f`: element orders are `p` and the divisors of
/// `(q-1)/d` and `(q+1)/d`, `d = gcd(2, q-1)`. The two torus parts are
/// cliques, `p` is isolated, and nothing joins the three parts.
pub fn l2_graph(q: u64) -> Result<GkGraph> {
    let (p, _) = prime_power(q).ok_or_else(|| Error::NotPrimePower(q.to_string()))?;
    if q < 4 {
        return Err(Error::NotSimple {
            group: format!("L(2,{q})"),
            constraint: "L(2,q) requires q >= 4".into(),
        });
    }
    let d = 2u64.gcd(&(q - 1));
    let plus = q
        .checked_add(1)
        .ok_or_else(|| Error::OutOfRange(format!("q = {q} too large")))?;
    let torus = |m: u64| -> Result<Vec<u64>> { Ok(factor(&(m / d))?.primes().copied().collect()) };
    let minus_part = torus(q - 1)?;
    let plus_part = torus(plus)?;
    let mut edges = Vec::new();
    for part in [&minus_part, &plus_part] {
        for (i, &a) in part.iter().enumerate() {
            edges.extend(part[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    let vertices = std::iter::once(p)
        .chain(minus_part.iter().copied())
        .chain(plus_part.iter().copied());
    GkGraph::new(vertices, edges)
}
