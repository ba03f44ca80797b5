use std::fs;
use std::path::Path;
use std::process::Command;

use af2db::cli::{run_command, Output};
use af2db::samples::EXAMPLE_ONE_APX;

fn run(args: &[&str]) -> Output {
    run_command(args.iter().copied())
}

fn with_example(dir: &Path) -> String {
    let path = dir.join("ex1.apx");
    fs::write(&path, EXAMPLE_ONE_APX).unwrap();
    path.to_str().unwrap().to_string()
}

fn lines(s: &str) -> Vec<&str> {
    s.lines().collect()
}

#[test]
fn solve_af_prints_sorted_sets() {
    let dir = tempfile::tempdir().unwrap();
    let apx = with_example(dir.path());
    let out = run(&["solve-af", "--in", &apx, "--semantics", "preferred"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "{a}\n{b,d}\n");
    let out = run(&["solve-af", "--in", &apx, "--semantics", "admissible"]);
    assert_eq!(lines(&out.stdout), ["{}", "{a}", "{b}", "{b,d}"]);
}

#[test]
fn tgf_input_is_detected_by_extension() {
    let dir = tempfile::tempdir().unwrap();
    let tgf = dir.path().join("f.tgf");
    fs::write(&tgf, "a\nb\n#\na b\n").unwrap();
    let out = run(&["solve-af", "--in", tgf.to_str().unwrap(), "--semantics", "stable"]);
    assert_eq!(out.stdout, "{a}\n");
}

#[test]
fn defense_translation_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let apx = with_example(dir.path());
    let out_dir = dir.path().join("def");
    let out = run(&["translate", "--in", &apx, "--target", "defense", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let table = out_dir.join("table.csv");
    let deps = out_dir.join("dependencies.json");
    assert!(out_dir.join("manifest.json").exists());
    let out = run(&[
        "solve-db",
        "--table",
        table.to_str().unwrap(),
        "--deps",
        deps.to_str().unwrap(),
        "--class",
        "all",
    ]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let sets = lines(&out.stdout);
    for want in ["{a}", "{b}", "{a,b,c}"] {
        assert!(sets.contains(&want), "{want} missing from {sets:?}");
    }
    for absent in ["{c}", "{d}"] {
        assert!(!sets.contains(&absent), "{absent} present in {sets:?}");
    }
}

#[test]
fn verify_all_passes_on_example_one() {
    let dir = tempfile::tempdir().unwrap();
    let apx = with_example(dir.path());
    let out = run(&["verify", "--in", &apx, "--all"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert!(out.stdout.ends_with("7/7 correspondences pass\n"), "{}", out.stdout);
    let single = run(&["verify", "--in", &apx, "--semantics", "stage"]);
    assert!(single.stdout.ends_with("1/1 correspondences pass\n"));
    let complete = run(&["verify", "--in", &apx, "--semantics", "complete"]);
    assert_eq!(complete.status, 2);
    assert!(complete.stderr.contains("no database counterpart"));
}

#[test]
fn random_verification_and_fault_injection() {
    let out = run(&["verify", "--random", "20", "--max-args", "5", "--seed", "3"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert!(out.stdout.contains("20 instances"));

    let json = run(&["verify", "--random", "5", "--max-args", "4", "--seed", "3", "--json"]);
    let parsed: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(parsed["instances"], 5);

    let broken = run(&["verify", "--random", "20", "--max-args", "5", "--seed", "3", "--inject-fault", "drop-all-ids"]);
    assert_eq!(broken.status, 1);
    assert!(broken.stdout.contains("FAIL admissible"), "{}", broken.stdout);
    assert!(broken.stdout.contains("counterexample {"), "{}", broken.stdout);
}

#[test]
fn usage_and_input_errors() {
    let out = run(&["translate", "--target", "range"]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("Usage"));
    assert_eq!(run(&["frobnicate"]).status, 2);
    assert_eq!(run(&["solve-af", "--in", "x.apx", "--semantics", "grounded"]).status, 2);
    assert_eq!(run(&["verify", "--max-args", "3"]).status, 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.apx");
    fs::write(&bad, "arg(a).\natt(a,b).\n").unwrap();
    let out_dir = dir.path().join("never");
    let out = run(&["translate", "--in", bad.to_str().unwrap(), "--target", "afdb", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    assert!(!out_dir.exists(), "no partial output on error");
}

#[test]
fn solve_db_covering_classes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["example", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let table = dir.path().join("scheduling.csv");
    let deps = dir.path().join("scheduling.deps.json");
    let solve = |class: &str, attrs: Option<&str>| {
        let mut args = vec![
            "solve-db".to_string(),
            "--table".into(),
            table.to_str().unwrap().into(),
            "--deps".into(),
            deps.to_str().unwrap().into(),
            "--class".into(),
            class.into(),
        ];
        if let Some(a) = attrs {
            args.push("--attrs".into());
            args.push(a.into());
        }
        run_command(args)
    };
    assert_eq!(solve("maximal", None).stdout.lines().count(), 4);
    assert_eq!(solve("max-covering", None).stdout, "{s1,s3,s5}\n{s2,s3,s5}\n");
    assert_eq!(solve("full-covering", None).stdout, "");
    assert_eq!(solve("full-covering", Some("Tutor,Time,Room")).stdout, "{s1,s3,s5}\n");
    assert_eq!(solve("full-covering", Some("Nope")).status, 2);
}

#[test]
fn outputs_are_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let apx = with_example(a.path());
    for dir in [a.path(), b.path()] {
        let out = run(&["translate", "--in", &apx, "--target", "afdb", "--out", dir.join("t").to_str().unwrap()]);
        assert_eq!(out.status, 0);
    }
    for file in ["table.csv", "dependencies.json", "manifest.json"] {
        assert_eq!(
            fs::read(a.path().join("t").join(file)).unwrap(),
            fs::read(b.path().join("t").join(file)).unwrap(),
            "{file}"
        );
    }
    let leftovers: Vec<_> = fs::read_dir(a.path().join("t"))
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".tmp"))
        .collect();
    assert!(leftovers.is_empty(), "{leftovers:?}");
    let first = run(&["verify", "--random", "10", "--max-args", "6", "--seed", "9"]);
    let second = run(&["verify", "--random", "10", "--max-args", "6", "--seed", "9"]);
    assert_eq!(first, second);
}

#[test]
fn example_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["example", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status, 0);
    let table = fs::read_to_string(dir.path().join("example1-defense/table.csv")).unwrap();
    assert_eq!(
        table,
        "_id,u_a,v_a,u_b,v_b,u_c,v_c,u_d,v_d\n\
         a,0,0,b,b,c,c,d,d\n\
         b,a,a,0,0,c,c,0,0\n\
         c,a,0,b,0,0,0,d,d\n\
         d,a,0,0,0,c,c,0,0\n"
    );
    let apx = fs::read_to_string(dir.path().join("example1.apx")).unwrap();
    assert_eq!(
        af2db::af::parse_af(&apx, af2db::af::AfFormat::Apx).unwrap(),
        af2db::samples::example_one()
    );
}

#[test]
fn binary_honours_the_enumeration_cap() {
    let dir = tempfile::tempdir().unwrap();
    let apx = with_example(dir.path());
    let bin = env!("CARGO_BIN_EXE_af2db");
    let capped = Command::new(bin)
        .args(["solve-af", "--in", &apx, "--semantics", "naive"])
        .env("AF2DB_ENUM_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
    let fine = Command::new(bin)
        .args(["solve-af", "--in", &apx, "--semantics", "naive"])
        .env_remove("AF2DB_ENUM_CAP")
        .output()
        .unwrap();
    assert_eq!(fine.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&fine.stdout), "{a}\n{b,d}\n{c}\n");
    let garbage = Command::new(bin)
        .args(["solve-af", "--in", &apx, "--semantics", "naive"])
        .env("AF2DB_ENUM_CAP", "lots").output().unwrap();
    assert_eq!(garbage.status.code(), Some(2));
}
