use gk_core::arith::{factor, is_prime, Factorization};
use gk_core::coclique::{max_coclique, max_coclique_containing};
use gk_core::gkgraph::GkGraph;
use gk_core::Factorization64;
use num_bigint::BigUint;
use proptest::prelude::*;

const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Builds a graph on the first `n` primes from an adjacency bit string.
fn graph(n: usize, bits: &[bool]) -> GkGraph {
    let vertices = PRIMES[..n].to_vec();
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k] {
                edges.push((vertices[i], vertices[j]));
            }
            k += 1;
        }
    }
    GkGraph::new(vertices, edges).unwrap()
}

/// Independence number by scanning all subsets; `(size, lexicographically smallest witness)`.
fn exhaustive(g: &GkGraph, anchor: Option<u64>) -> (usize, Vec<u64>) {
    let v = g.vertices();
    let mut best: Option<Vec<u64>> = None;
    for mask in 0u32..1 << v.len() {
        let set: Vec<u64> = (0..v.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| v[i])
            .collect();
        if anchor.is_some_and(|a| !set.contains(&a)) || !g.is_coclique(&set) {
            continue;
        }
        best = match best {
            Some(b) if b.len() > set.len() || (b.len() == set.len() && b <= set) => Some(b),
            _ => Some(set),
        };
    }
    let b = best.unwrap();
    (b.len(), b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn factor_round_trip(n in 1u64..=1_000_000_000_000) {
        let f = factor(&n).unwrap();
        prop_assert_eq!(f.value(), n);
        for (p, e) in f.iter() {
            prop_assert!(is_prime(p));
            prop_assert!(e >= 1);
        }
    }

    #[test]
    fn factor_is_multiplicative(a in 1u64..=1_000_000, b in 1u64..=1_000_000) {
        let fa = factor(&a).unwrap();
        let fb = factor(&b).unwrap();
        let fab = factor(&(a * b)).unwrap();
        prop_assert_eq!(fa.merge(&fb), fab);
    }

    #[test]
    fn valuation_matches_division(n in 1u64..=1_000_000_000, pi in 0usize..PRIMES.len()) {
        let p = PRIMES[pi];
        let mut k = 0;
        let mut m = n;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        prop_assert_eq!(factor(&n).unwrap().valuation(&p).unwrap(), k);
    }

    #[test]
    fn big_factor_agrees_with_u64(n in 1u64..=1_000_000_000_000) {
        let small = factor(&n).unwrap();
        let big = factor(&BigUint::from(n)).unwrap();
        prop_assert_eq!(small.convert::<BigUint>().unwrap(), big);
    }

    #[test]
    fn coclique_matches_exhaustive(
        (n, bits) in (1usize..=12).prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
    ) {
        let g = graph(n, &bits);
        let r = max_coclique(&g).unwrap();
        let (size, witness) = exhaustive(&g, None);
        prop_assert_eq!(r.size, size);
        prop_assert_eq!(&r.witness, &witness);
        for &v in g.vertices() {
            let a = max_coclique_containing(&g, v).unwrap();
            let (size_v, witness_v) = exhaustive(&g, Some(v));
            prop_assert_eq!(a.size, size_v);
            prop_assert_eq!(&a.witness, &witness_v);
            prop_assert!(a.size <= r.size);
        }
    }

    #[test]
    fn adding_an_edge_never_grows_t(
        (n, bits, i, j) in (2usize..=10).prop_flat_map(|n| (
            Just(n),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            0..n,
            0..n,
        ))
    ) {
        prop_assume!(i != j);
        let g = graph(n, &bits);
        let h = g.with_edge(PRIMES[i], PRIMES[j]).unwrap();
        prop_assert!(max_coclique(&h).unwrap().size <= max_coclique(&g).unwrap().size);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn factor_round_trip_u128(a in 2u64..1 << 40, b in 2u64..1 << 34) {
        let n = a as u128 * b as u128;
        let f = factor(&n).unwrap();
        prop_assert_eq!(f.value(), n);
        for (p, _) in f.iter() {
            prop_assert!(is_prime(p));
        }
    }
}

#[test]
fn one_and_zero() {
    assert!(factor(&1u64).unwrap().is_one());
    assert!(factor(&0u64).is_err());
    let e: Factorization64 = Factorization::one();
    assert_eq!(e.to_string(), "1");
}
