use std::path::PathBuf;
use std::process::Command;

use cycloweight::catalog::{enumerate_codes, CatalogDocument};
use cycloweight::numth::{gcd, prime_power, radical};
use cycloweight_cli::{run, EXIT_INVALID, EXIT_OK};

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cycloweight")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

fn normalized(s: &str) -> Vec<String> {
    s.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|l| !l.is_empty())
        .collect()
}

#[test]
fn enumerate_matches_golden_files() {
    for (q, n) in [("31", "288"), ("3", "8"), ("7", "16"), ("5", "4")] {
        let (code, out, _) = bin(&["enumerate", "--q", q, "--n", n]);
        assert_eq!(code, 0);
        assert_eq!(normalized(&out), normalized(&golden(&format!("enumerate_q{q}_n{n}.txt"))), "q={q} n={n}");
    }
}

#[test]
fn other_golden_outputs() {
    let (_, out, _) = bin(&["enumerate", "--q", "3", "--n", "8", "--format", "json", "--expand"]);
    assert_eq!(out, golden("enumerate_q3_n8.json"));
    let (_, out, _) = bin(&["enumerate", "--q", "3", "--n", "8", "--check-poly", "x^2+1", "--format", "csv"]);
    assert_eq!(out, golden("weights_q3_n8_x2p1.csv"));
    let (_, out, _) = bin(&["factor", "--q", "3", "--n", "8", "--oracle"]);
    assert_eq!(out, golden("factor_q3_n8.txt"));
}

#[test]
fn out_of_regime_diagnostics() {
    let (code, _, err) = bin(&["enumerate", "--q", "6", "--n", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("gcd(n,q) ≠ 1"), "{err}");
    let (code, _, err) = bin(&["enumerate", "--q", "5", "--n", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("rad(n)"), "{err}");
    let (code, _, err) = bin(&["verify", "--q", "10", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("prime power"), "{err}");
    let (code, _, _) = bin(&["enumerate", "--q", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn factor_subcommand() {
    let out = run(["cycloweight", "factor", "--q", "2", "--n", "7", "--oracle"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("3 irreducible factors (coset oracle)"));
    assert!(out.stdout.contains("degrees 1x1 3x2"));
    let out = run(["cycloweight", "factor", "--q", "2", "--n", "7"]);
    assert_eq!(out.code, EXIT_INVALID);
    let out = run(["cycloweight", "factor", "--q", "31", "--n", "288", "--oracle"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("degrees 1x6 2x45 3x4 6x30"));
    assert!(out.stdout.ends_with("oracle: agree\n"));
    let out = run(["cycloweight", "factor", "--q", "3", "--n", "8", "--format", "csv"]);
    assert!(out.stdout.starts_with("degree,kind,nu2u,poly\n1,binomial,,x + 1\n"));
}

#[test]
fn verify_subcommand() {
    let out = run(["cycloweight", "verify", "--q", "3", "--n", "8"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.starts_with("verify q = 3, n = 8, cap = 1000000: 5 codes, 5 passed, 0 failed"));

    let out = run(["cycloweight", "verify", "--q", "31", "--n", "288"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.matches("skip distribution: cap").count(), 30);

    let out = run(["cycloweight", "verify", "--q", "31", "--n", "288", "--cap", "100", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["passed"], true);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 85);
    let mut enumerated = 0;
    for r in reports {
        let skipped = r["skipped"].as_array().unwrap();
        if !skipped.iter().any(|s| s["name"] == "distribution") {
            enumerated += 1;
        }
        let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
        assert!(names.contains(&"mass") && names.contains(&"divisibility"));
    }
    // only the six one-dimensional codes (31 codewords) fit under the cap
    assert_eq!(enumerated, 6);
    let flagged: Vec<&serde_json::Value> = doc["count_audit"].as_array().unwrap().iter().filter(|a| a["agrees"] == false).collect();
    assert_eq!(flagged.len(), 6);
    assert!(flagged.iter().all(|a| a["predicted"].is_object() && a["measured"].is_u64()));

    let out = run(["cycloweight", "verify", "--q", "7", "--n", "16", "--check-poly", "x^2 + 3x + 1", "--format", "csv"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("x^2 + 3x + 1,pair count,24,24,pass"));
}

#[test]
fn pue_subcommand() {
    let (code, out, err) = bin(&["pue", "--q", "3", "--n", "8", "--check-poly", "x^2+1", "--p", "0.3", "--channel", "qary"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0.000487227656250\n");
    assert!(err.contains("q-ary (extension)"));
    let (_, out, _) = bin(&["pue", "--q", "3", "--n", "8", "--check-poly", "x^2+1", "--p", "0"]);
    assert_eq!(out, "0.000000000000\n");
    let (code, _, err) = bin(&["pue", "--q", "3", "--n", "8", "--check-poly", "x^2+1", "--p", "0.3", "--channel", "binary"]);
    assert_eq!(code, 2);
    assert!(err.contains("binary channel requires q = 2"));
    let (code, _, err) = bin(&["pue", "--q", "3", "--n", "8", "--check-poly", "x^2+x+1", "--p", "0.3"]);
    assert_eq!(code, 2);
    assert!(err.contains("remainder"), "{err}");
    let (code, _, err) = bin(&["pue", "--q", "3", "--n", "8", "--check-poly", "x^^2", "--p", "0.3"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot parse"), "{err}");
    let (code, _, _) = bin(&["pue", "--q", "3", "--n", "8", "--check-poly", "x^2+1", "--p", "1.5"]);
    assert_eq!(code, 2);

    // simplex code over F_2, outside the closed-form regime
    let (code, out, err) = bin(&["pue", "--q", "2", "--n", "7", "--check-poly", "x^3+x+1", "--p", "0.1"]);
    assert_eq!(code, 0);
    assert!(err.contains("binary (exact)"));
    let v: f64 = out.trim().parse().unwrap();
    let expected = 7.0 * 0.1f64.powi(4) * 0.9f64.powi(3);
    assert!((v - expected).abs() < 1e-15, "{v} {expected}");
}

#[test]
fn expanded_csv_has_exact_integers() {
    let out = run(["cycloweight", "enumerate", "--q", "31", "--n", "288", "--check-poly", "x^6 + 5", "--format", "csv"]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "weight,count");
    assert_eq!(lines.len(), 1 + 7);
    let weights: Vec<usize> = lines[1..].iter().map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert!(weights.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(*lines.last().unwrap(), format!("288,{}", num_bigint::BigUint::from(30u32).pow(6)));
    assert!(lines[1..].iter().all(|l| !l.contains('e') && !l.contains('.')));
}

#[test]
fn catalog_json_round_trips_over_grid() {
    let mut pairs = 0;
    for q in 3..=49u64 {
        if prime_power(q).is_none() {
            continue;
        }
        for n in (2..=512u64).filter(|&n| gcd(n, q) == 1 && (q - 1) % radical(n).unwrap() == 0) {
            let (params, _, codes) = enumerate_codes(q, n).unwrap();
            let doc = CatalogDocument::build(&params, &codes, n <= 64);
            assert_eq!(CatalogDocument::from_json(&doc.to_json()).unwrap(), doc, "q={q} n={n}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, 502);
}
