use std::collections::BTreeSet;

use gk_core::ledger::{render, run_ledger, CheckLedger, Epsilon, ReportFormat, Status};
use gk_core::search::SearchBounds;

fn ledger(eps: Epsilon) -> CheckLedger {
    run_ledger(eps, &SearchBounds::default())
}

fn integrity(l: &CheckLedger) {
    let ids: BTreeSet<_> = l.results.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids.len(), l.results.len(), "duplicate check id");
    for r in &l.results {
        if r.status == Status::Assumed {
            assert!(!r.citation.is_empty(), "{} lacks a citation", r.id);
        }
    }
}

#[test]
fn minus_has_no_failures() {
    let l = ledger(Epsilon::Minus);
    print!("{}", render(&l, ReportFormat::Text));
    assert_eq!(l.summary.fail, 0);
    assert_eq!(l.get("C04").unwrap().detail, "{19,37,73}");
    assert!(l.get("C09").is_some());
    assert!(l.get("C11").is_none());
    assert!(l.get("C12.1").unwrap().description.contains("U(4,27)"));
    assert!(l.get("C12.2").is_none());
    integrity(&l);

    let text = render(&l, ReportFormat::Text);
    let c02 = text.lines().find(|s| s.starts_with("C02 PASS")).unwrap();
    assert!(c02.contains('5'));
}

#[test]
fn plus_has_no_failures() {
    let l = ledger(Epsilon::Plus);
    print!("{}", render(&l, ReportFormat::Text));
    assert_eq!(l.summary.fail, 0);
    assert_eq!(l.get("C07").unwrap().detail, "757");
    assert!(l.get("C09").is_none());
    assert_eq!(l.get("C11").unwrap().status, Status::Pass);
    assert_eq!(l.get("C05").unwrap().status, Status::Assumed);
    let c12 = l
        .results
        .iter()
        .filter(|r| r.id.starts_with("C12."))
        .count();
    assert_eq!(c12, 9);
    assert!(l.summary.assumed >= 1);
    integrity(&l);
}

#[test]
fn starved_bounds_fail_candidate_search() {
    let bounds: SearchBounds = {
        let mut b = SearchBounds::default();
        b.set("q_max.L2", "71").unwrap();
        b
    };
    let l = run_ledger(Epsilon::Minus, &bounds);
    let c10 = l.get("C10").unwrap();
    assert_eq!(c10.status, Status::Fail);
    assert!(c10.detail.contains("expected") && c10.detail.contains("actual"));
    assert!(c10.detail.contains("L(2,73)"));
    assert_eq!(l.get("C18").unwrap().status, Status::Fail);
    integrity(&l);
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let a = render(&ledger(Epsilon::Minus), ReportFormat::Json);
    let b = render(&ledger(Epsilon::Minus), ReportFormat::Json);
    assert_eq!(a, b);
    let back = gk_core::ledger::parse_json_report(&a).unwrap();
    assert_eq!(back, ledger(Epsilon::Minus));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["epsilon"], "minus");
    assert_eq!(v["results"][0]["id"], "C01");
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn epsilon_parses() {
    assert_eq!("plus".parse::<Epsilon>().unwrap(), Epsilon::Plus);
    assert_eq!("MINUS".parse::<Epsilon>().unwrap(), Epsilon::Minus);
    assert!("zero".parse::<Epsilon>().is_err());
}
