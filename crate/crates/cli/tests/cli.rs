//! End-to-end tests of `run`: exit codes, JSON round-trips, golden reports,
//! determinism and checkpoint resume.
//!
//! `CASAS_UPDATE_GOLDEN=1 cargo test -p casas-cli --test cli` rewrites the
//! files under `tests/golden/`.

use std::path::PathBuf;

use casas_cli::{
    parse_poly, run, JsonReport, Payload, EXIT_BUDGET, EXIT_EXPECTATION, EXIT_OK, EXIT_USAGE,
};
use casas_core::{Integers, UniPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

const GIANT: &str = "X^6+3144481702696843*X^4+X^3+2707944513497181*X^2";

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn casas(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("casas").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> (Run, JsonReport) {
    let mut full = args.to_vec();
    full.push("--json");
    let r = casas(&full);
    assert_eq!(r.code, EXIT_OK, "{args:?}: {}", r.err);
    let report: JsonReport = serde_json::from_str(&r.out).unwrap();
    (r, report)
}

#[test]
fn documented_invocations() {
    let r = casas(&["check", "--field", "p=2", "--poly", "X^3+X^2"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.ends_with("verdict: counterexample\n"), "{}", r.out);

    let r = casas(&[
        "search",
        "--degree",
        "4",
        "--field",
        "p=2",
        "--expect-empty",
    ]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.ends_with("verdict: 0 hits\n"));

    let r = casas(&["coverage", "--max", "30"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.ends_with("verdict: open degrees 12, 20, 24, 28\n"));

    let r = casas(&["check", "--field", "p=2", "--poly", "X^2++1"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("syntax error at offset 4"), "{}", r.err);
}

#[test]
fn exit_code_contract() {
    let cases: &[(&[&str], i32)] = &[
        (
            &[
                "check",
                "--field",
                "p=2",
                "--poly",
                "X^3+X^2",
                "--expect-counterexample",
            ],
            EXIT_OK,
        ),
        (
            &[
                "check",
                "--field",
                "p=2",
                "--poly",
                "X^3+X^2",
                "--expect-no-counterexample",
            ],
            EXIT_EXPECTATION,
        ),
        (
            &[
                "check",
                "--field",
                "p=3",
                "--poly",
                "X^2+X",
                "--expect-no-counterexample",
            ],
            EXIT_OK,
        ),
        (
            &["check", "--field", "q", "--poly", "2*X^2+4*X"],
            EXIT_USAGE,
        ),
        (&["check", "--field", "p=4", "--poly", "X^2"], EXIT_USAGE),
        (
            &["check", "--field", "p=2,m=2,mod=X^2+1", "--poly", "X^2"],
            EXIT_USAGE,
        ),
        (
            &[
                "check",
                "--field",
                "p=7390044713023799",
                "--poly",
                GIANT,
                "--expect-counterexample",
            ],
            EXIT_OK,
        ),
        (
            &["search", "--degree", "3", "--field", "p=2", "--expect-hits"],
            EXIT_OK,
        ),
        (
            &[
                "search",
                "--degree",
                "3",
                "--field",
                "p=2",
                "--expect-empty",
            ],
            EXIT_EXPECTATION,
        ),
        (
            &["search", "--degree", "6", "--field", "p=3", "--expect-hits"],
            EXIT_EXPECTATION,
        ),
        (&["search", "--degree", "12", "--field", "p=7"], EXIT_BUDGET),
        (
            &["search", "--degree", "4", "--field", "p=2", "--budget", "3"],
            EXIT_BUDGET,
        ),
        (
            &[
                "search",
                "--degree",
                "3",
                "--field",
                "p=170141183460469231731687303715884105727",
            ],
            EXIT_BUDGET,
        ),
        (&["search", "--degree", "3", "--field", "q"], EXIT_USAGE),
        (
            &["search", "--degree", "3", "--field", "p=2", "--range", "5"],
            EXIT_USAGE,
        ),
        (
            &[
                "search",
                "--degree",
                "3",
                "--field",
                "p=2",
                "--expect-hits",
                "--expect-empty",
            ],
            EXIT_USAGE,
        ),
        (&["cascade", "--degree", "6", "--prime", "5"], EXIT_USAGE),
        (&["cascade", "--degree", "6", "--prime", "4"], EXIT_USAGE),
        (&["symbolic", "--degree", "3", "--gb"], EXIT_USAGE),
        (&["symbolic", "--degree", "7"], EXIT_BUDGET),
        (
            &["quad", "scan", "--prime", "17", "--expect-empty"],
            EXIT_OK,
        ),
        (&["quad", "scan", "--prime", "13", "--expect-hits"], EXIT_OK),
        (
            &["quad", "scan", "--prime", "1009", "--budget", "1000"],
            EXIT_BUDGET,
        ),
        (
            &["quad", "closure", "--prime", "17", "--expect-no-point"],
            EXIT_OK,
        ),
        (
            &["quad", "closure", "--prime", "21379", "--expect-point"],
            EXIT_OK,
        ),
        (
            &[
                "quad",
                "point",
                "--prime",
                "13",
                "--a",
                "0",
                "--b",
                "0",
                "--expect-counterexample",
            ],
            EXIT_EXPECTATION,
        ),
        (&["verify-m"], EXIT_OK),
        (&["frobnicate"], EXIT_USAGE),
        (&["--help"], EXIT_OK),
        (&["--version"], EXIT_OK),
    ];
    for (args, code) in cases {
        let r = casas(args);
        assert_eq!(
            r.code, *code,
            "{args:?}\nstdout: {}\nstderr: {}",
            r.out, r.err
        );
    }
}

#[test]
fn budget_comes_from_the_environment() {
    let binary = env!("CARGO_BIN_EXE_casas");
    let status = |extra: &[&str]| {
        std::process::Command::new(binary)
            .args(["search", "--degree", "4", "--field", "p=2", "--quiet"])
            .args(extra)
            .env("CASAS_BUDGET", "3")
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status(&[]), Some(EXIT_BUDGET));
    assert_eq!(status(&["--budget", "7"]), Some(EXIT_OK));
}

#[test]
fn quiet_prints_only_the_verdict() {
    let r = casas(&["check", "--field", "p=5", "--poly", "X^6+4*X^5", "--quiet"]);
    assert_eq!(r.out, "verdict: counterexample\n");
    let r = casas(&[
        "quad",
        "point",
        "--prime",
        "7390044713023799",
        "--a",
        "3144481702696843",
        "--b",
        "2707944513497181",
        "--quiet",
    ]);
    assert_eq!(r.out, "verdict: counterexample\n");
}

#[test]
fn reports_round_trip() {
    let invocations: &[&[&str]] = &[
        &["check", "--field", "q", "--poly", "X^2+2*X+1"],
        &["hasse", "--field", "p=3", "--poly", "X^4+X"],
        &["search", "--degree", "6", "--field", "p=2,m=2", "--timings"],
        &["cascade", "--degree", "8", "--prime", "2"],
        &["coverage", "--max", "16"],
        &["symbolic", "--degree", "4"],
        &["symbolic", "--degree", "5", "--field", "p=5", "--gb"],
        &["quad", "scan", "--prime", "19", "--timings"],
        &["quad", "closure", "--prime", "13"],
        &["quad", "point", "--prime", "13", "--a", "-1", "--b", "27"],
        &["quad", "resultants", "--samples", "2"],
        &["verify-m"],
    ];
    for args in invocations {
        let (r, report) = json(args);
        assert_eq!(report.schema_version, casas_cli::SCHEMA_VERSION);
        assert_eq!(report.command.first().map(String::as_str), Some(args[0]));
        assert_eq!(report.timings.is_some(), args.contains(&"--timings"));
        let again = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(again.trim_end(), r.out.trim_end(), "{args:?}");
        let reparsed: JsonReport = serde_json::from_str(&again).unwrap();
        assert_eq!(reparsed, report);
    }
}

#[test]
fn payload_contents() {
    let (_, report) = json(&["quad", "point", "--prime", "13", "--a", "-1", "--b", "27"]);
    let Payload::QuadPoint {
        a, b, polynomial, ..
    } = report.payload
    else {
        panic!("wrong payload")
    };
    assert_eq!((a.as_str(), b.as_str()), ("12", "1"));
    assert_eq!(polynomial, "X^6 + 12*X^4 + X^3 + X^2");

    let (_, report) = json(&["search", "--degree", "12", "--field", "p=2"]);
    let Payload::Search(search) = report.payload else {
        panic!("wrong payload")
    };
    assert_eq!(search.hit_polynomials(), ["X^12 + X^4", "X^12 + X^8"]);

    let (_, report) = json(&["quad", "resultants"]);
    let Payload::QuadResultants(r) = report.payload else {
        panic!("wrong payload")
    };
    assert_eq!((r.zero, r.nonzero), (vec![1, 5], vec![2, 3, 4]));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let invocations: &[&[&str]] = &[
        &[
            "search",
            "--degree",
            "8",
            "--field",
            "p=2",
            "--block-size",
            "5",
            "--json",
        ],
        &[
            "search",
            "--degree",
            "6",
            "--field",
            "p=5",
            "--block-size",
            "97",
            "--json",
        ],
        &["quad", "scan", "--prime", "23993", "--json"],
        &["quad", "closure", "--prime", "67", "--json"],
    ];
    for args in invocations {
        let mut outputs = Vec::new();
        for threads in ["1", "1", "3", "3"] {
            let mut full = args.to_vec();
            full.extend(["--threads", threads, "--seed", "11"]);
            let r = casas(&full);
            assert_eq!(r.code, EXIT_OK, "{}", r.err);
            outputs.push(r.out);
        }
        assert_eq!(outputs[0], outputs[1], "{args:?}");
        assert_eq!(outputs[2], outputs[3], "{args:?}");
        // Across thread counts only the recorded partition may differ.
        let hits = |text: &str| match serde_json::from_str::<JsonReport>(text).unwrap().payload {
            Payload::Search(r) | Payload::QuadScan(r) => serde_json::to_string(&r.hits).unwrap(),
            other => serde_json::to_string(&other).unwrap(),
        };
        assert_eq!(hits(&outputs[0]), hits(&outputs[2]), "{args:?}");
    }
}

#[test]
fn resumed_search_matches_a_fresh_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d6f5.json");
    let path = path.to_str().unwrap();
    let base = [
        "search",
        "--degree",
        "6",
        "--field",
        "p=5",
        "--block-size",
        "50",
        "--json",
    ];
    let fresh = casas(&base);
    assert_eq!(fresh.code, EXIT_OK);

    // Half the range first, then the whole range resumed from the checkpoint.
    let mut half = base.to_vec();
    half.extend(["--checkpoint", path, "--range", "1..1550"]);
    assert_eq!(casas(&half).code, EXIT_OK);
    let mut mismatched = base.to_vec();
    mismatched.extend(["--checkpoint", path, "--resume"]);
    let r = casas(&mismatched);
    assert_eq!(
        r.code, EXIT_USAGE,
        "range differs from the checkpoint: {}",
        r.err
    );

    let mut first = base.to_vec();
    first.extend(["--checkpoint", path]);
    let whole = casas(&first);
    let mut resumed = base.to_vec();
    resumed.extend(["--checkpoint", path, "--resume"]);
    let again = casas(&resumed);
    assert_eq!(again.code, EXIT_OK, "{}", again.err);
    let strip = |r: &Run| {
        let mut report: JsonReport = serde_json::from_str(&r.out).unwrap();
        report.command.clear();
        // Blocks restored from the checkpoint are not cross-checked again.
        if let Payload::Search(search) = &mut report.payload {
            search.consistency_checks = 0;
        }
        report
    };
    assert_eq!(strip(&whole), strip(&fresh));
    assert_eq!(strip(&again), strip(&fresh));
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn golden_reports() {
    let cases: &[(&str, &[&str])] = &[
        (
            "check_family_p2",
            &["check", "--field", "p=2", "--poly", "X^3+X^2"],
        ),
        (
            "check_giant_quadrinomial",
            &["check", "--field", "p=7390044713023799", "--poly", GIANT],
        ),
        (
            "check_extension",
            &["check", "--field", "p=3,m=2", "--poly", "X^4+X^3"],
        ),
        ("hasse_f3", &["hasse", "--field", "p=3", "--poly", "X^4+X"]),
        (
            "search_d3_f2",
            &["search", "--degree", "3", "--field", "p=2"],
        ),
        (
            "search_d4_f2",
            &["search", "--degree", "4", "--field", "p=2"],
        ),
        (
            "cascade_d6_p3",
            &["cascade", "--degree", "6", "--prime", "3"],
        ),
        ("coverage_30", &["coverage", "--max", "30"]),
        ("symbolic_d3_z", &["symbolic", "--degree", "3"]),
        (
            "symbolic_d4_f2_gb",
            &["symbolic", "--degree", "4", "--field", "p=2", "--gb"],
        ),
        ("quad_scan_13", &["quad", "scan", "--prime", "13"]),
        ("quad_closure_67", &["quad", "closure", "--prime", "67"]),
        (
            "quad_point_giant",
            &[
                "quad",
                "point",
                "--prime",
                "7390044713023799",
                "--a",
                "3144481702696843",
                "--b",
                "2707944513497181",
            ],
        ),
        ("quad_resultants", &["quad", "resultants", "--samples", "4"]),
        ("verify_m", &["verify-m"]),
    ];
    let update = std::env::var_os("CASAS_UPDATE_GOLDEN").is_some();
    let mut stale = Vec::new();
    for (name, args) in cases {
        let (r, _) = json(args);
        let path = golden_dir().join(format!("{name}.json"));
        if update {
            std::fs::write(&path, &r.out).unwrap();
        } else {
            let expected = std::fs::read_to_string(&path).unwrap_or_default();
            if expected != r.out {
                stale.push(*name);
            }
        }
    }
    assert!(
        stale.is_empty(),
        "reports differ from golden files: {stale:?}"
    );
}

fn z_poly(coeffs: &[i64]) -> UniPoly<Integers> {
    UniPoly::from_i64s(Integers::new(), coeffs)
}

proptest! {
    #[test]
    fn display_parses_back(coeffs in prop::collection::vec(-1000i64..=1000, 0..9)) {
        let z = Integers::new();
        let p = z_poly(&coeffs);
        prop_assert_eq!(parse_poly(&p.to_string(), &z).unwrap(), p.clone());
        let list: Vec<String> = if p.is_zero() {
            vec!["0".to_string()]
        } else {
            p.coeffs().iter().rev().map(BigInt::to_string).collect()
        };
        prop_assert_eq!(parse_poly(&list.join(","), &z).unwrap(), p);
    }
}
