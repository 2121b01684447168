use std::path::PathBuf;
use std::process::{Command, Output};

use cqsres::Report;
use cqsres_core::{
    enumerate_presolutions, m_resolution, maximal_resolution, minimal_resolution, CyclicQuotient, NVector,
};

fn cqsres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cqsres")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn analyze_json_matches_golden_files() {
    for (n, q, file) in [("19", "7", "analyze_19_7.json"), ("2", "1", "analyze_2_1.json")] {
        let o = cqsres(&["analyze", n, q, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), golden(file), "Y({n},{q})");
    }
}

#[test]
fn analyze_19_7_content() {
    let report: Report = serde_json::from_str(&golden("analyze_19_7.json")).unwrap();
    assert_eq!(report.p_resolutions.len(), 3);
    assert!(report.p_resolutions.iter().all(|p| p.verified));
    let alphas = &report.maximal_resolution.alphas;
    assert_eq!(alphas[1..alphas.len() - 1], ["8/19", "13/19", "18/19", "5/19", "17/19", "12/19"]);
    assert_eq!(report.maximal_resolution.r_vector, ["1/1", "8/19"]);
}

#[test]
fn analyze_2_1_is_its_own_presolution() {
    let report: Report = serde_json::from_str(&golden("analyze_2_1.json")).unwrap();
    assert_eq!(report.p_resolutions.len(), 1);
    let p = &report.p_resolutions[0];
    assert_eq!(p.rays, [["1", "0"], ["-1", "2"]]);
    assert_eq!(p.m_resolution_rays, report.minimal_resolution.rays);
}

#[test]
fn json_round_trip_rebuilds_fans() {
    for (n, q) in [(19, 7), (2, 1), (31, 12), (4, 1)] {
        let cq = CyclicQuotient::new(n, q).unwrap();
        let text = serde_json::to_string(&Report::build(&cq).unwrap()).unwrap();
        let report: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(report.minimal_fan().unwrap(), minimal_resolution(&cq));
        assert_eq!(report.maximal_fan().unwrap(), maximal_resolution(&cq));
        let records = enumerate_presolutions(&cq).unwrap();
        let fans = report.presolution_fans().unwrap();
        assert_eq!(fans.len(), records.len());
        for ((fan, mres), p) in fans.iter().zip(&records) {
            assert_eq!(fan, &p.fan);
            assert_eq!(mres, &m_resolution(p));
        }
    }
}

#[test]
fn analyze_reports_canonical_parameter() {
    let a = stdout(&cqsres(&["analyze", "19", "11", "--json"]));
    assert_eq!(a, golden("analyze_19_7.json"));
}

#[test]
fn invalid_input_exits_with_2() {
    let o = cqsres(&["analyze", "4", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("gcd(n,q) must be 1"));
    for args in [["analyze", "1", "1"], ["analyze", "5", "7"], ["analyze", "5", "-1"]] {
        assert_eq!(cqsres(&args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(cqsres(&["chains", "0"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_4() {
    assert_eq!(cqsres(&["analyze", "19"]).status.code(), Some(4));
    assert_eq!(cqsres(&["analyze", "x", "7"]).status.code(), Some(4));
    assert_eq!(cqsres(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(cqsres(&["chains"]).status.code(), Some(4));
    assert_eq!(cqsres(&["--help"]).status.code(), Some(0));
}

#[test]
fn chains_command() {
    assert_eq!(stdout(&cqsres(&["chains", "4", "--count"])), "5\n");
    assert_eq!(stdout(&cqsres(&["chains", "2"])), "1 1\n");
    assert_eq!(stdout(&cqsres(&["chains", "--for", "19", "7"])), "1 2 2 1\n1 3 1 2\n2 2 1 3\n");
    assert_eq!(stdout(&cqsres(&["chains", "3", "--json"])), "[[\"1\",\"2\",\"1\"],[\"2\",\"1\",\"2\"]]\n");
    let o = cqsres(&["--verify", "chains", "6", "--count"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "42\n".to_string()));
}

#[test]
fn verify_flag_passes() {
    for args in
        [["--verify", "analyze", "19", "7"], ["--verify", "analyze", "2", "1"], ["--verify", "analyze", "45", "19"]]
    {
        let o = cqsres(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    }
}

fn svg(args: &[&str]) -> String {
    let o = cqsres(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    stdout(&o)
}

fn count(haystack: &str, needle: &str) -> usize {
    haystack.matches(needle).count()
}

#[test]
fn svg_is_deterministic_and_complete() {
    let a = svg(&["svg", "19", "7", "--what", "maximal"]);
    assert_eq!(a, svg(&["svg", "19", "7", "--what", "maximal"]));
    assert!(a.starts_with("<?xml") && a.trim_end().ends_with("</svg>"));
    assert!(a.contains("[R=1]"));
    assert!(a.contains("α_3=18/19"));
    // six interior rays plus the two boundary rays
    let rays = &a[a.find("<g id=\"rays\"").unwrap()..];
    let rays = &rays[..rays.find("</g>").unwrap()];
    assert_eq!(count(rays, "<line"), 8);
    assert_eq!(count(rays, "stroke-width=\"1\""), 6);
}

#[test]
fn svg_presolution_and_mres() {
    let p = svg(&["svg", "19", "7", "--what", "presolution:1,3,1,2"]);
    assert!(p.contains("u^1") && p.contains("u^2") && !p.contains("u^4"));
    assert!(p.contains("w^4=[5,2]  q_4=2"));
    let m = svg(&["svg", "19", "7", "--what", "mres:1,2,2,1"]);
    assert!(m.contains("u^3") && !m.contains("u^5"));
    let min = svg(&["svg", "2", "1", "--what", "minimal"]);
    assert!(min.contains("u^1") && !min.contains("u^3"));
}

#[test]
fn svg_errors() {
    assert_eq!(cqsres(&["svg", "19", "7", "--what", "presolution:1,2,1"]).status.code(), Some(2));
    assert_eq!(cqsres(&["svg", "19", "7", "--what", "everything"]).status.code(), Some(2));
    assert_eq!(cqsres(&["svg", "19", "7", "--what", "mres:1,x"]).status.code(), Some(2));
}

#[test]
fn svg_writes_file() {
    let dir = std::env::temp_dir().join(format!("cqsres-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("max.svg");
    let o = cqsres(&["svg", "19", "7", "--what", "maximal", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), svg(&["svg", "19", "7", "--what", "maximal"]));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn selftest_small_range() {
    let o = cqsres(&["selftest", "--max-n", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("0 failure(s)"));
}

#[test]
fn report_rays_are_primitive_vectors() {
    let report: Report = serde_json::from_str(&golden("analyze_19_7.json")).unwrap();
    let parsed: Vec<NVector> = report
        .maximal_resolution
        .rays
        .iter()
        .map(|[x, y]| NVector::new(x.parse::<i64>().unwrap(), y.parse::<i64>().unwrap()))
        .collect();
    assert!(parsed.iter().all(NVector::is_primitive));
}
