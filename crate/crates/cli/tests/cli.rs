use std::path::{Path, PathBuf};
use std::process::Command;

use deloop_cli::checks::{verify_all, VerifyOptions, CHECKS};
use deloop_cli::compute::{compute, parse, Atom, ComputeInput, Query, Step};
use deloop_cli::fixtures::dump_fixtures;
use deloop_cli::report::{replay, Evidence, Report, Status};
use deloop_core::io::{read_algebra, read_module};
use deloop_core::{Matrix, Scalar};

fn two() -> Scalar {
    Scalar::from_int(2)
}

fn small_run() -> Report {
    verify_all(&VerifyOptions::new(two(), 2, 0)).unwrap()
}

fn repo_fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn deloop() -> Command {
    Command::new(env!("CARGO_BIN_EXE_deloop"))
}

#[test]
fn report_is_deterministic_and_replays() {
    let a = small_run();
    let b = small_run();
    assert_eq!(a.without_timings(), b.without_timings());
    assert!(a.all_passed(), "{}", a.render());
    let ids: Vec<_> = a.checks.iter().map(|c| c.id.as_str()).collect();
    let registered: Vec<_> = CHECKS.iter().map(|c| c.id).collect();
    assert_eq!(ids, registered);
    let r = replay(&a);
    assert!(r.ok(), "{:?}", r.failures);
    assert!(a.checks.iter().all(|c| !c.evidence.is_empty()));

    let round: Report = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(round, a);
}

#[test]
fn tampered_evidence_fails_replay() {
    let mut rep = small_run();
    let iso = rep
        .checks
        .iter_mut()
        .flat_map(|c| c.evidence.iter_mut())
        .find_map(|e| match e {
            Evidence::Isomorphism { matrix, .. } => Some(matrix),
            _ => None,
        })
        .unwrap();
    *iso = Matrix::zeros(iso.rows(), iso.cols());
    let r = replay(&rep);
    assert_eq!(r.failures.len(), 1);

    let mut rep = small_run();
    rep.algebras.remove("extension_op");
    assert!(!replay(&rep).ok());
}

#[test]
fn invalid_q_is_rejected() {
    for q in [0, 1, -1] {
        assert!(verify_all(&VerifyOptions::new(Scalar::from_int(q), 2, 0)).is_err());
    }
    let out = deloop().args(["verify-all", "--q", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sign_drop_aborts_the_run() {
    let mut opts = VerifyOptions::new(two(), 2, 0);
    opts.corrupt_sign = true;
    let rep = verify_all(&opts).unwrap();
    assert!(rep.aborted.is_some());
    assert_eq!(rep.checks.len(), 1);
    assert_eq!(rep.checks[0].status, Status::Fail);
    assert!(rep.checks[0].detail.contains("yx+qxy"));
    assert_eq!(rep.exit_code(), 1);
    assert!(replay(&rep).ok());
}

#[test]
fn binary_writes_report_and_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let status = deloop()
        .args(["verify-all", "--n-max", "1", "--out"])
        .arg(&out)
        .output()
        .unwrap()
        .status;
    assert!(status.success());
    let replayed = deloop().arg("--replay").arg(&out).output().unwrap();
    assert!(replayed.status.success(), "{}", String::from_utf8_lossy(&replayed.stdout));

    let bad = dir.path().join("bad.json");
    let status = deloop().args(["verify-all", "--corrupt-sign", "--out"]).arg(&bad).output().unwrap().status;
    assert_eq!(status.code(), Some(1));

    let unwritable = dir.path().join("missing").join("r.json");
    let status = deloop().args(["verify-all", "--n-max", "0", "--out"]).arg(&unwritable).output().unwrap().status;
    assert_eq!(status.code(), Some(2));
}

#[test]
fn fixtures_are_byte_stable_and_match_golden() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let fa = dump_fixtures(&two(), a.path()).unwrap();
    let fb = dump_fixtures(&two(), b.path()).unwrap();
    assert_eq!(fa.len(), fb.len());
    for (x, y) in fa.iter().zip(&fb) {
        let bytes = std::fs::read(x).unwrap();
        assert_eq!(bytes, std::fs::read(y).unwrap());
        let golden = repo_fixtures().join(x.file_name().unwrap());
        assert_eq!(bytes, std::fs::read(&golden).unwrap(), "{} differs from the committed copy", golden.display());
    }

    let lambda = read_algebra(&a.path().join("lambda.json")).unwrap();
    assert_eq!(lambda.labels(), ["1", "x", "y", "z", "yx", "zx"]);
    assert_eq!(read_algebra(&a.path().join("extension.json")).unwrap().dim(), 10);
    let m = read_module(&a.path().join("m_2.json"), None).unwrap();
    assert_eq!(m.dim(), 3);
}

#[test]
fn parse_expressions() {
    let e = parse("omega^3 M(2)").unwrap();
    assert_eq!((e.query, e.steps, e.atom), (Query::Module, vec![Step::Omega(3)], Atom::M(two())));
    let e = parse("dell_upper sigma tr S1").unwrap();
    assert_eq!((e.query, e.steps, e.atom), (Query::DellUpper, vec![Step::Sigma(1), Step::Tr], Atom::Simple(1)));
    assert_eq!(parse("pdim M(-1/3)").unwrap().atom, Atom::M(Scalar::ratio(-1, 3)));
    assert!(parse("omega^x M(2)").is_err());
    assert!(parse("frobnicate Lambda").is_err());
    assert!(parse("").is_err());
}

fn input() -> ComputeInput {
    ComputeInput { algebra: None, module: None, q: two(), n_max: 3, seed: 0 }
}

#[test]
fn compute_examples() {
    let out = compute("omega^3 M(2)", &input()).unwrap();
    assert!(out.contains("isomorphic to M(16)"), "{out}");
    assert!(out.contains("result: dim 3"));

    let out = compute("sigma Lambda", &input()).unwrap();
    assert!(out.contains("result: dim 0"), "{out}");

    let dir = tempfile::tempdir().unwrap();
    dump_fixtures(&two(), dir.path()).unwrap();
    let mut i = input();
    i.algebra = Some(read_algebra(&dir.path().join("dual_numbers.json")).unwrap());
    let out = compute("dell_upper S", &i).unwrap();
    assert!(out.contains("dell_upper: exactly 0"), "{out}");

    let out = compute("ext M(2)", &input()).unwrap();
    assert!(out.contains("[0, 0, 0]"), "{out}");

    let out = deloop()
        .args(["compute", "omega module", "--module"])
        .arg(dir.path().join("extension_simple.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("result: dim 3"));
}

#[test]
fn compute_reports_format_errors_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"algebra": "lambda.json", "dim": 2, "action": {"x": [["1"]]}}"#).unwrap();
    dump_fixtures(&two(), dir.path()).unwrap();
    let out = deloop().args(["compute", "omega module", "--module"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.json") && err.contains("action.x"), "{err}");
}
