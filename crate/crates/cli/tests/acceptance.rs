//! Acceptance criteria, one PASS/FAIL line each. Lines go straight to stderr
//! so they show up without `--nocapture`.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::Instant;

use gk_core::arith::factor;
use gk_core::catalog::{order, out_order, parse_group, pi, GroupId};
use gk_core::coclique::{max_coclique, max_coclique_containing};
use gk_core::gkgraph::{encoded_graph, nonneighbors_of, rule_graph, GkGraph};
use gk_core::ledger::expected_candidates;
use gk_core::oracle::{graph_from_spectrum, spectrum_alt, spectrum_l2};
use gk_core::search::{find, Constraint, SearchBounds};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g(spec: &str) -> GroupId {
    parse_group(spec).unwrap()
}

fn pi64(spec: &str) -> Vec<u64> {
    pi(&g(spec))
        .unwrap()
        .iter()
        .map(|p| u64::try_from(p).unwrap())
        .collect()
}

fn names(groups: &[GroupId]) -> BTreeSet<String> {
    groups.iter().map(|h| h.to_string()).collect()
}

fn graph(spec: &str) -> GkGraph {
    encoded_graph(&g(spec)).unwrap()
}

/// Lexicographically first maximum coclique by scanning all subsets.
fn exhaustive(gr: &GkGraph, anchor: Option<u64>) -> (usize, Vec<u64>) {
    let v = gr.vertices();
    let mut best: Vec<u64> = Vec::new();
    let mut found = false;
    for mask in 0u32..1 << v.len() {
        let set: Vec<u64> = (0..v.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| v[i])
            .collect();
        if anchor.is_some_and(|a| !set.contains(&a)) {
            continue;
        }
        let independent = set
            .iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| !gr.has_edge(a, b)));
        if independent
            && (!found || set.len() > best.len() || (set.len() == best.len() && set < best))
        {
            best = set;
            found = true;
        }
    }
    (best.len(), best)
}

fn c1() -> Outcome {
    let minus = pi64("2E6(3)");
    let plus = pi64("E6(3)");
    ensure(minus == [2, 3, 5, 7, 13, 19, 37, 41, 61, 73], || {
        format!("pi(2E6(3)) = {minus:?}")
    })?;
    ensure(plus == [2, 3, 5, 7, 11, 13, 41, 73, 757], || {
        format!("pi(E6(3)) = {plus:?}")
    })?;
    Ok(format!("{minus:?} / {plus:?}"))
}

fn c2() -> Outcome {
    let mut out = Vec::new();
    for spec in ["2E6(3)", "E6(3)"] {
        let gr = graph(spec);
        let t = max_coclique(&gr).map_err(|e| e.to_string())?;
        let t2 = max_coclique_containing(&gr, 2).map_err(|e| e.to_string())?;
        for w in [&t.witness, &t2.witness] {
            for (i, &a) in w.iter().enumerate() {
                for &b in &w[i + 1..] {
                    ensure(!gr.has_edge(a, b), || {
                        format!("{spec}: witness edge {a}-{b}")
                    })?;
                }
            }
        }
        ensure(t.size == 5 && t2.size == 3, || {
            format!("{spec}: t = {}, t2 = {}", t.size, t2.size)
        })?;
        let scan = exhaustive(&gr, None);
        let scan2 = exhaustive(&gr, Some(2));
        ensure(scan == (5, t.witness.clone()), || {
            format!("{spec}: exhaustive {scan:?}")
        })?;
        ensure(scan2 == (3, t2.witness.clone()), || {
            format!("{spec}: exhaustive t2 {scan2:?}")
        })?;
        out.push(format!("{spec} t=5 {:?} t2=3 {:?}", t.witness, t2.witness));
    }
    Ok(out.join("; "))
}

fn c3() -> Outcome {
    let minus = nonneighbors_of(&graph("2E6(3)"), 2).map_err(|e| e.to_string())?;
    let plus = nonneighbors_of(&graph("E6(3)"), 2).map_err(|e| e.to_string())?;
    ensure(minus == [19, 37, 73] && plus == [73, 757], || {
        format!("{minus:?} / {plus:?}")
    })?;
    Ok(format!("{minus:?} / {plus:?}"))
}

fn c4() -> Outcome {
    let c = Constraint {
        largest_prime_equals: Some(73),
        required_divisor: Some(BigUint::from(51_319u32)),
        pi_subset_of: Some(pi64("2E6(3)").into_iter().collect()),
    };
    let found = names(&find(&SearchBounds::default(), &c).map_err(|e| e.to_string())?);
    let expected = names(&[g("U(4,27)"), g("2E6(3)")]);
    ensure(found == expected, || {
        format!("expected {expected:?}, actual {found:?}")
    })?;
    Ok(format!("{found:?}"))
}

fn c5() -> Outcome {
    let c = Constraint {
        largest_prime_equals: Some(757),
        ..Default::default()
    };
    let found = names(&find(&SearchBounds::default(), &c).map_err(|e| e.to_string())?);
    let expected = names(&expected_candidates(gk_core::ledger::Epsilon::Plus).0);
    ensure(expected.len() == 17, || {
        format!("expected list has {} groups", expected.len())
    })?;
    ensure(found == expected, || {
        format!("expected {expected:?}, actual {found:?}")
    })?;
    Ok(format!("{} groups", found.len()))
}

fn c6() -> Outcome {
    for q in [757u64, 19_683, 573_049] {
        let t = max_coclique(&rule_graph(&GroupId::l2(q)).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?
            .size;
        ensure(t == 3, || format!("t(L(2,{q})) = {t}"))?;
    }
    let p = pi64("L(2,73)");
    ensure(!p.contains(&19), || format!("pi(L(2,73)) = {p:?}"))?;
    Ok("t = 3 for all three; 19 not in pi(L(2,73))".into())
}

fn c7() -> Outcome {
    let f4 = pi64("F4(3)");
    ensure(f4.contains(&73), || format!("pi(F4(3)) = {f4:?}"))?;
    let v = |spec: &str, p: u32| {
        order(&g(spec))
            .unwrap()
            .valuation(&BigUint::from(p))
            .unwrap()
    };
    ensure(v("3D4(3)", 73) >= 1, || {
        "73 does not divide |3D4(3)|".into()
    })?;
    let (a, b) = (v("E6(3)", 5), v("O+(8,3)", 5));
    ensure(a == 2 && b == 2, || format!("v5: {a}, {b}"))?;
    for spec in ["E6(3)", "2E6(3)"] {
        let o = out_order(&g(spec)).map_err(|e| e.to_string())?;
        ensure(o == 2, || format!("out({spec}) = {o}"))?;
    }
    Ok("73 | |F4(3)|, 73 | |3D4(3)|, v5 = 2 = 2, out = 2".into())
}

fn c8() -> Outcome {
    for n in 5..=20 {
        let o = graph_from_spectrum(&spectrum_alt(n).unwrap()).unwrap();
        ensure(o == rule_graph(&GroupId::alt(n)).unwrap(), || {
            format!("Alt({n}) differs")
        })?;
    }
    for q in [5u64, 7, 11, 13, 17, 19, 23, 29, 31] {
        let o = graph_from_spectrum(&spectrum_l2(q).unwrap()).unwrap();
        ensure(o == rule_graph(&GroupId::l2(q)).unwrap(), || {
            format!("L(2,{q}) differs")
        })?;
    }
    let a5 = spectrum_alt(5).unwrap();
    let a6 = spectrum_alt(6).unwrap();
    let w5: Vec<u64> = a5.orders.iter().copied().collect();
    ensure(w5 == [1, 2, 3, 5], || format!("omega(Alt5) = {w5:?}"))?;
    let mut w6 = a5.orders.clone();
    w6.insert(4);
    ensure(a6.orders == w6, || format!("omega(Alt6) = {:?}", a6.orders))?;
    ensure(
        graph_from_spectrum(&a5).unwrap() == graph_from_spectrum(&a6).unwrap(),
        || "Alt5 and Alt6 graphs differ".into(),
    )?;
    Ok("Alt(5..20), L(2,5..31) agree; omega(Alt5), omega(Alt6) as expected".into())
}

fn c9() -> Outcome {
    let run = |eps: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_gk"))
            .args(["verify", "--epsilon", eps, "--json"])
            .env_remove("GK_BOUNDS")
            .output()
            .expect("run gk");
        (out.status.code(), out.stdout)
    };
    let mut parts = Vec::new();
    for eps in ["minus", "plus"] {
        let (code1, first) = run(eps);
        let (code2, second) = run(eps);
        ensure(code1 == Some(0) && code2 == Some(0), || {
            format!("{eps}: exit {code1:?}, {code2:?}")
        })?;
        ensure(first == second, || {
            format!("{eps}: output differs between runs")
        })?;
        let v: serde_json::Value = serde_json::from_slice(&first).map_err(|e| e.to_string())?;
        ensure(v["summary"]["fail"] == 0, || {
            format!("{eps}: fail = {}", v["summary"]["fail"])
        })?;
        let results = v["results"].as_array().ok_or("no results")?;
        let mut ids = BTreeSet::new();
        for r in results {
            ensure(ids.insert(r["id"].to_string()), || {
                format!("duplicate id {}", r["id"])
            })?;
            if r["status"] == "ASSUMED" {
                ensure(
                    r["citation"].as_str().is_some_and(|c| !c.is_empty()),
                    || format!("{} lacks citation", r["id"]),
                )?;
            }
        }
        parts.push(format!(
            "{eps}: {} checks, {} assumed",
            results.len(),
            v["summary"]["assumed"]
        ));
    }
    Ok(parts.join("; "))
}

fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b);
    for _ in 0..10_000 {
        let n: u64 = rng.gen_range(1..=1_000_000_000_000);
        let f = factor(&n).map_err(|e| e.to_string())?;
        ensure(f.value() == n, || format!("round trip failed for {n}"))?;
    }
    const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let p: f64 = rng.gen();
        let mut edges = Vec::new();
        for (i, &a) in PRIMES[..n].iter().enumerate() {
            for &b in &PRIMES[i + 1..n] {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let gr = GkGraph::new(PRIMES[..n].to_vec(), edges).map_err(|e| e.to_string())?;
        let r = max_coclique(&gr).map_err(|e| e.to_string())?;
        let scan = exhaustive(&gr, None);
        ensure((r.size, r.witness.clone()) == scan, || {
            format!("coclique mismatch on {gr:?}")
        })?;
    }
    Ok("10000 factorizations, 200 graphs".into())
}

fn report(line: String) {
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("pi reproduction", c1),
        ("coclique reproduction", c2),
        ("omega reproduction", c3),
        ("candidate set, minus", c4),
        ("candidate set, plus", c5),
        ("L2 eliminations", c6),
        ("spot facts", c7),
        ("oracle equivalence", c8),
        ("ledger integrity", c9),
        ("arithmetic properties", c10),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(d) => report(format!("criterion {:>2} PASS {name} ({ms} ms): {d}", i + 1)),
            Err(d) => {
                report(format!("criterion {:>2} FAIL {name} ({ms} ms): {d}", i + 1));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
