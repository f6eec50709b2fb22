use tori_core::catalog::{catalog, catalog_get, CatalogEntry, Provenance};
use tori_core::{Budget, Error};

#[test]
fn fixture_entries_build_with_recorded_order() {
    let cat = catalog();
    let b = Budget::default();
    let mut built = 0;
    for label in cat.labels() {
        let e = cat.entry(label).unwrap();
        if e.order > 20_000 {
            assert!(e.order <= b.max_elements as u128 || e.group(&b).is_err());
            continue;
        }
        let g = e.group(&b).unwrap();
        assert_eq!(g.order() as u128, e.order, "{label}");
        assert_eq!(g.degree(), e.degree, "{label}");
        built += 1;
    }
    assert!(built > 500);
}

#[test]
fn named_orders() {
    for (label, order) in [
        ("2T1", 2),
        ("8T37", 168),
        ("14T30", 1092),
        ("PSL(2,7)", 168),
        ("PSL(2,13)", 1092),
        ("A5", 60),
        ("S4", 24),
        ("D5", 10),
        ("C2^3", 8),
        ("V4", 4),
    ] {
        assert_eq!(catalog_get(label).unwrap().order(), order, "{label}");
    }
}

#[test]
fn entries_round_trip_through_json() {
    let e = catalog().entry("8T31").unwrap();
    assert_eq!(e.provenance, Provenance::PaperCitation);
    let text = serde_json::to_string(&e).unwrap();
    assert!(text.contains("\"paper-citation\""));
    let back: CatalogEntry = serde_json::from_str(&text).unwrap();
    assert_eq!(back, e);
    let f = catalog().entry("D7").unwrap();
    assert_eq!(f.provenance, Provenance::Constructed);
    assert_eq!(serde_json::from_str::<CatalogEntry>(&serde_json::to_string(&f).unwrap()).unwrap(), f);
}

#[test]
fn budget_refusal_names_the_limit() {
    let b = Budget::default();
    match catalog().get("15T104", &b) {
        Err(Error::Budget { budget, .. }) => assert_eq!(budget, "max_elements"),
        other => panic!("{other:?}"),
    }
}
