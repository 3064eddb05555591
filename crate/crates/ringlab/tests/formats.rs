use std::time::Duration;

use proptest::prelude::*;
use ringlab::catalog::{self, CATALOG_RINGS};
use ringlab::format::RingFile;
use ringlab::registry::{
    registry, CheckResult, Expected, Instance, RunConfig, Status, REQUIRED_IDS,
};
use ringlab::report::{render_text, Report};

#[test]
fn every_catalog_ring_round_trips_through_json() {
    for name in CATALOG_RINGS {
        let r = catalog::ring(name).unwrap();
        let text = RingFile::from_ring(&r).to_json().unwrap();
        let back = RingFile::from_json(&text).unwrap().to_ring().unwrap();
        assert!(back.same_tables(&r), "{name}");
        assert_eq!(back.labels(), r.labels());
        assert_eq!(
            (back.zero(), back.one(), back.name()),
            (r.zero(), r.one(), r.name())
        );
    }
}

#[test]
fn registry_covers_every_required_id_once() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len(), "duplicate ids");
    for id in REQUIRED_IDS {
        assert!(ids.contains(id), "{id} missing");
    }
    assert!(registry().iter().all(|c| !c.description.is_empty()));
}

fn result(id: &'static str, statuses: &[Status]) -> CheckResult {
    let instances: Vec<Instance> = statuses
        .iter()
        .enumerate()
        .map(|(i, &s)| Instance::new(format!("case {i}"), s, "detail"))
        .collect();
    CheckResult {
        id,
        description: "synthetic",
        expected: Expected::Pass,
        status: statuses.iter().copied().max().unwrap_or(Status::Deviation),
        instances,
        wall_time: Duration::from_millis(7),
    }
}

fn status_strategy() -> impl Strategy<Value = Status> {
    prop_oneof![
        Just(Status::Pass),
        Just(Status::Skipped),
        Just(Status::Deviation)
    ]
}

proptest! {
    /// Reports survive a JSON round trip, count statuses exactly, and flag
    /// deviations only when some instance deviates.
    #[test]
    fn reports_round_trip(checks in prop::collection::vec(prop::collection::vec(status_strategy(), 1..5), 0..6)) {
        const IDS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
        let results: Vec<CheckResult> = checks.iter().enumerate().map(|(i, s)| result(IDS[i], s)).collect();
        let report = Report::new(&results, &RunConfig::default());
        let json = report.to_json().unwrap();
        prop_assert_eq!(Report::from_json(&json).unwrap(), report.clone());
        let any_dev = checks.iter().any(|s| s.contains(&Status::Deviation));
        prop_assert_eq!(report.has_deviation(), any_dev);
        let s = report.summary;
        prop_assert_eq!(s.expected + s.skipped + s.deviations, checks.len());
        // wall time stays out of the JSON
        prop_assert!(!json.contains("wall"));
        let tail = format!("{} deviations\n", s.deviations);
        prop_assert!(render_text(&results, false).ends_with(&tail));
    }
}
