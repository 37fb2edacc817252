use std::path::PathBuf;

use cslcolour_cli::{analyze_job, read_job, AnalysisReport, JobConfig};

const BUNDLED: [&str; 5] = ["example1", "example2", "example2_rect", "ammann_beenker", "identity"];

fn configs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs")
}

#[test]
fn reports_match_golden_files() {
    for name in BUNDLED {
        let job = read_job(&configs().join(format!("{name}.json"))).unwrap();
        let fresh = analyze_job(&job).unwrap().to_json();
        let golden = std::fs::read_to_string(configs().join(format!("{name}.report.json"))).unwrap();
        assert_eq!(fresh, golden, "{name}");
    }
}

#[test]
fn reports_round_trip() {
    for name in BUNDLED {
        let golden = std::fs::read_to_string(configs().join(format!("{name}.report.json"))).unwrap();
        let report = AnalysisReport::from_json(&golden).unwrap();
        assert_eq!(report.to_json(), golden, "{name}");
        // the config echo is itself a valid config
        let echo = JobConfig::from_json(&report.config.to_json()).unwrap();
        assert_eq!(echo, report.config);
    }
}

#[test]
fn golden_values() {
    let load = |name: &str| {
        let text = std::fs::read_to_string(configs().join(format!("{name}.report.json"))).unwrap();
        AnalysisReport::from_json(&text).unwrap()
    };
    let r = load("example1");
    assert_eq!((r.sigma1, r.sigma2, r.s, r.t, r.u, r.v), (5, 10, 6, 6, 2, 2));
    assert!(!r.colour_coincidence);
    let r = load("example2");
    assert_eq!(r.sigma2, 5);
    assert_eq!(r.permutation, Some(vec![(0, 0), (1, 2), (2, 1)]));
    let r = load("ammann_beenker");
    assert_eq!((r.m, r.sigma1, r.sigma2), (4, 9, 9));
    assert_eq!(r.permutation, Some(vec![(0, 0), (1, 1), (2, 2), (3, 3)]));
    let r = load("identity");
    assert!(r.permutation.unwrap().iter().all(|(i, j)| i == j));
}
