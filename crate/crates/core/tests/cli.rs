use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitcode")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn last_line(s: &str) -> &str {
    s.lines().last().unwrap()
}

#[test]
fn classify_reports() {
    let (code, out, _) = run(&["classify", "--n", "6", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(last_line(&out), "PASS classify orbits=23 classes=7");
    let (_, out, _) = run(&["classify", "--n", "7", "--k", "3"]);
    assert!(last_line(&out).contains("orbits=93"));
    let (_, out, _) = run(&["classify", "--n", "5", "--k", "1", "--format", "jsonl"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    let class: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(class["length"], 31);
    assert_eq!(class["nu"], 1);
}

#[test]
fn orbit_sizes() {
    let (_, out, _) = run(&["orbit", "--group", "normalizer", "--n", "4", "--subspace", "1;w"]);
    assert!(last_line(&out).ends_with("size=30"));
    let (_, out, _) = run(&["orbit", "--group", "singer", "--n", "6", "--subspace", "1;w^9;w^18"]);
    assert!(last_line(&out).ends_with("size=9"));
    for (lit, want) in [("1;w;w^2", 61200), ("1;w;w^17", 15300), ("1;w^17;w^34", 255)] {
        let (code, out, _) = run(&["orbit", "--group", "gl", "--s", "4", "--n", "8", "--subspace", lit]);
        assert_eq!(code, 0);
        assert!(last_line(&out).contains(&format!("size={want} ")), "{lit}: {out}");
    }
}

#[test]
fn weights_and_adjoint() {
    let (_, out, _) = run(&["weights", "--n", "6", "--subspace", "1;w^9;w^18", "--format", "jsonl"]);
    let rec: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(rec["omegas"], "1,0,0,0,0,0,8");
    let (code, out, _) = run(&["adjoint-verify", "--n", "6", "--samples", "20"]);
    assert_eq!(code, 0);
    assert!(last_line(&out).starts_with("PASS adjoint-verify"));
}

#[test]
fn scan_and_lemmas() {
    let (_, out, _) = run(&["scan-exceptional", "--n", "8", "--k", "4", "--s", "4", "--format", "jsonl"]);
    let hits: Vec<&str> = out.lines().filter(|l| l.contains("\"record\":\"hit\"")).collect();
    assert_eq!(hits.len(), 1);
    assert!(hits[0].contains("\"size\":340"));
    let (code, out, _) = run(&["verify-lemmas"]);
    assert_eq!(code, 0);
    assert!(last_line(&out).contains("r2_failure_triples=(2,8,3);(2,11,4)"));
}

#[test]
fn aut_against_brute_force() {
    let (code, out, _) = run(&["aut", "--n", "4", "--subspace", "1;w^5", "--brute-force", "30000"]);
    assert_eq!(code, 0);
    assert!(last_line(&out).contains("brute_force_order=360"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "--n", "6"]).0, 2);
    assert_eq!(run(&["field", "--p", "4", "--n", "2"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
    assert_eq!(run(&["orbit", "--n", "6", "--subspace", "1;x"]).0, 2);
    assert_eq!(run(&["classify", "--n", "8", "--k", "4", "--cap", "1000"]).0, 3);
    assert_eq!(run(&["orbit", "--group", "gl", "--s", "1", "--n", "8", "--k", "3", "--cap", "100"]).0, 3);
    assert_eq!(run(&["field", "--n", "40"]).0, 3);
    assert_eq!(run(&["verify-lemmas", "--n-min", "2", "--n-max", "3"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn reproducible_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["adjoint-verify", "--p", "3", "--n", "4", "--samples", "15", "--seed", "9"];
    let cold = run(&args);
    assert_eq!(cold, run(&args));
    let with_cache: Vec<&str> = args.iter().copied().chain(["--cache-dir", cache]).collect();
    let first = run(&with_cache);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let hit = run(&with_cache);
    assert_eq!(first, hit);
    assert_eq!(first.1, cold.1);
    let other: Vec<&str> = with_cache.iter().map(|a| if *a == "9" { "10" } else { a }).collect();
    run(&other);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}
