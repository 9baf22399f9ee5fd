use replica_knots::catalogue::*;

#[test]
fn full_validation_with_exact_moments() {
    let t = std::time::Instant::now();
    let r = validate_catalogue();
    assert!(r.pass, "{r:?}");
    let trefoil = r.entries.iter().find(|e| e.name == "3_1").unwrap();
    assert_eq!(trefoil.replica.as_deref(), Some("3"));
    assert!(r.entries.iter().all(|e| e.replica.is_some()));
    eprintln!("validated {} entries in {:?}", r.entries.len(), t.elapsed());
}

#[test]
fn round_trip_and_torus_series() {
    for e in catalogue() {
        assert!(knots_for_mean(&mean_for_knot(&e.name).unwrap().powers())
            .iter()
            .any(|f| f.name == e.name));
    }
    for (name, powers) in torus_series(7) {
        assert_eq!(mean_for_knot(&name).unwrap().powers(), powers);
    }
}
