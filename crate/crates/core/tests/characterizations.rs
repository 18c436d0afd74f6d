use matroid_split::catalog::{self, verify_obligations, OBLIGATIONS};
use matroid_split::corpus::connected_multigraphs;
use matroid_split::theorems::{PreconditionStatus, Route};
use matroid_split::{decide_by_forbidden_minors, oracle_all_splits, verify_minimality, BinaryMatroid, CaseId, Limits, Property, TheoremCase};

fn small_graphic() -> Vec<BinaryMatroid> {
    connected_multigraphs(6, 5).iter().map(BinaryMatroid::from_graph).collect()
}

#[test]
fn redundant_minor_does_not_change_graphic_verdicts() {
    let limits = Limits::default();
    let base = TheoremCase::new(CaseId::GraphicToGraphic);
    let extended = base.clone().with_forbidden(&["G1", "G2", "G3", "G4"]).unwrap();
    for m in small_graphic() {
        let a = decide_by_forbidden_minors(&m, &base, &limits).unwrap();
        let b = decide_by_forbidden_minors(&m, &extended, &limits).unwrap();
        assert_eq!(a.verdict, b.verdict, "{}", m.to_text());
    }
}

#[test]
fn graphic_verdicts_match_the_oracle_on_small_graphs() {
    let limits = Limits::default();
    let case = TheoremCase::new(CaseId::GraphicToGraphic);
    for m in small_graphic() {
        let decided = decide_by_forbidden_minors(&m, &case, &limits).unwrap();
        let oracle = oracle_all_splits(&m, Property::Graphic, &limits).unwrap();
        assert_eq!(decided.route, Route::ForbiddenMinors);
        assert_eq!(oracle.route, Route::AllSplits);
        assert_eq!(decided.verdict, oracle.verdict, "{}", m.to_text());
    }
}

#[test]
fn verdicts_are_minor_closed() {
    let limits = Limits::default();
    let case = TheoremCase::new(CaseId::GraphicToGraphic);
    for m in small_graphic().into_iter().filter(|m| m.len() >= 5) {
        if !decide_by_forbidden_minors(&m, &case, &limits).unwrap().verdict {
            continue;
        }
        for e in m.elements() {
            for n in [m.delete(&[e.as_str()]).unwrap(), m.contract(&[e.as_str()]).unwrap()] {
                assert!(decide_by_forbidden_minors(&n, &case, &limits).unwrap().verdict);
            }
        }
    }
}

#[test]
fn k5_separates_the_two_cographic_forbidden_sets() {
    let limits = Limits::default();
    let k5 = catalog::matroid("K5").unwrap();
    let with_g3 = TheoremCase::new(CaseId::RegularToCographic);
    let with_a1 = with_g3.clone().with_forbidden(&["G1", "G2", "MA1"]).unwrap();
    let oracle = oracle_all_splits(&k5, Property::Cographic, &limits).unwrap();
    let a = decide_by_forbidden_minors(&k5, &with_g3, &limits).unwrap();
    let b = decide_by_forbidden_minors(&k5, &with_a1, &limits).unwrap();
    assert!(a.precondition.passed());
    assert!(oracle.verdict);
    assert!(!a.verdict);
    assert_eq!(a.forbidden_minor.unwrap().minor, "G3");
    assert!(b.verdict);
}

#[test]
fn precondition_violation_is_reported() {
    let limits = Limits::default();
    // a coloop pair next to K5: deleting both leaves K5
    let k5 = catalog::matroid("K5").unwrap();
    let host = matroid_split::corpus::add_coloop(&matroid_split::corpus::add_coloop(&k5, "x"), "y");
    let case = TheoremCase::new(CaseId::GraphicToCographic);
    match case.precondition(&host, &limits).unwrap() {
        PreconditionStatus::Violated { excluded, .. } => assert_eq!(excluded, "K5"),
        other => panic!("expected a violation, got {other:?}"),
    }
}

#[test]
fn minimal_forbidden_minors() {
    let limits = Limits::default();
    for (name, case) in [("G1", CaseId::GraphicToGraphic), ("G2", CaseId::CographicToCographic), ("G5", CaseId::GraphicToCographic)] {
        let report = verify_minimality(name, &TheoremCase::new(case), &limits).unwrap();
        assert!(report.passed(), "{name}: {report:?}");
    }
}

#[test]
fn every_catalog_obligation_holds() {
    let results = verify_obligations();
    assert_eq!(results.len(), OBLIGATIONS.len());
    for r in results {
        assert!(r.passed, "{}", r.name);
    }
}
