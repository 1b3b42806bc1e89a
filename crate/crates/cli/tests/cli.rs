use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use superschur_cli::AlgebraFile;
use superschur_core::catalog::{catalog_default, catalog_list};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(args)
        .env("SUPERSCHUR_SEED", "11")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn emit(dir: &Path, key: &str, extra: &[&str]) -> String {
    let path = dir.join(format!("{}.json", key.replace('+', "_")));
    let p = path.to_str().unwrap().to_string();
    let mut args = vec!["catalog", "emit", key, "--output", &p];
    args.extend_from_slice(extra);
    assert_eq!(run(&args).status.code(), Some(0));
    p
}

const BASE: &str =
    r#"{"name": "T", "even_basis": ["a"], "odd_basis": ["α", "β"], "brackets": [BRACKETS]}"#;

fn write(dir: &Path, brackets: &str) -> String {
    let path = dir.join("t.json");
    fs::write(&path, BASE.replace("BRACKETS", brackets)).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = emit(dir.path(), "L12_1", &[]);
    assert_eq!(run(&["validate", &ok]).status.code(), Some(0));

    let float = write(
        dir.path(),
        r#"{"left": "α", "right": "α", "value": [{"basis": "a", "coeff": "0.5"}]}"#,
    );
    let o = run(&["validate", &float]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("floating point not accepted"));

    let mixed = write(
        dir.path(),
        r#"{"left": "α", "right": "β", "value": [{"basis": "a", "coeff": "1"}, {"basis": "α", "coeff": "1"}]}"#,
    );
    let o = run(&["validate", &mixed]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(α, β)"), "{}", stdout(&o));

    let o = run(&["info", &mixed]);
    assert_eq!(o.status.code(), Some(1));

    let missing = dir.path().join("nope.json");
    assert_eq!(
        run(&["validate", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn info_reports_series_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&run(&["info", &emit(dir.path(), "E22", &[])]));
    assert!(out.contains("class: nilpotent, class 4"));
    assert!(out.contains("L²: (0|3)"));
    assert!(out.contains("maximal class: true"));

    let out = stdout(&run(&[
        "info",
        &emit(dir.path(), "A", &["--m", "3", "--n", "2"]),
    ]));
    assert!(out.contains("class: nilpotent, class 1"));
    assert!(out.contains("L²: (0|0)"));

    let out = stdout(&run(&["info", &emit(dir.path(), "L31_1", &[])]));
    assert!(out.contains("not nilpotent"));
}

#[test]
fn multiplier_with_representatives() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&run(&[
        "multiplier",
        "--representatives",
        &emit(dir.path(), "L12_3", &[]),
    ]));
    assert!(out.contains("= A(1|1)"));
    assert!(out.contains("odd: a∧α"));
    assert!(out.contains("even: β∧β"));

    let out = stdout(&run(&[
        "multiplier",
        "--representatives",
        &emit(dir.path(), "A", &["--m", "1", "--n", "1"]),
    ]));
    assert!(out.contains("= A(1|1)"));
    assert!(out.contains("odd: x1∧ξ1"));
    assert!(out.contains("even: ξ1∧ξ1"));

    let out = stdout(&run(&["multiplier", &emit(dir.path(), "D15A11_4", &[])]));
    assert!(out.contains("= A(1|1)"));
}

#[test]
fn invariants_report() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["invariants", &emit(dir.path(), "L13_5", &[])]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("t(L) = 6"));
    assert!(out.contains("s(L) = 4"));
    assert!(out.contains("8 <= 12"));
    assert!(out.contains("12 < 18"));

    let out = stdout(&run(&[
        "invariants",
        &emit(dir.path(), "A", &["--m", "2", "--n", "2"]),
    ]));
    assert!(out.contains("t(L) = 0"));
    assert!(out.contains("s(L): not applicable"));

    let out = stdout(&run(&["invariants", &emit(dir.path(), "H10", &[])]));
    assert!(out.contains("equality case: attained; L is of the form"));
}

#[test]
fn capability_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let h = emit(dir.path(), "H10", &[]);
    let out = stdout(&run(&["capability", &h]));
    assert!(out.contains("not injective"));
    assert!(out.contains("no obstruction found (exhaustive)"));

    let o = run(&["capability", &h, "--candidate", "e1=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("[e1, e2]"));

    let sum = emit(dir.path(), "H10+A", &["--m", "4", "--n", "0"]);
    let text = fs::read_to_string(&sum).unwrap();
    let l = AlgebraFile::from_json(&text).unwrap().to_algebra().unwrap();
    let extra = l.even_names()[3].clone();
    let o = run(&["capability", &sum, "--candidate", &format!("{extra}=1")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.matches(&format!("x = {extra} (even)")).count(),
        2,
        "{out}"
    );
    assert!(out.contains("not exhaustive"));

    let line = emit(dir.path(), "A", &["--m", "1", "--n", "0"]);
    let out = stdout(&run(&["capability", &line]));
    assert!(out.contains("injective, x in Z*(L)"), "{out}");
    assert!(out.contains(": holds"));
    assert!(out.contains("conclusion: not capable"));
}

#[test]
fn classify_reports_buckets_and_divergence() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&run(&["classify", &emit(dir.path(), "E22", &[])]));
    assert!(out.contains("s(L) = 8"));
    assert!(out.contains("listed under s = 5 but the computed s is 8"));
    assert!(out.contains("isomorphism is not established"));

    let o = run(&[
        "classify",
        &emit(dir.path(), "A", &["--m", "2", "--n", "1"]),
    ]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("non-abelian required"));
}

#[test]
fn catalog_commands() {
    let out = stdout(&run(&["catalog", "list"]));
    assert_eq!(out.lines().count(), 19);

    let o = run(&["catalog", "emit", "L_{2,2}^{(11)}", "--p", "2"]);
    let f = AlgebraFile::from_json(&stdout(&o)).unwrap();
    let ab = f
        .brackets
        .iter()
        .find(|b| b.left == "α" && b.right == "β")
        .unwrap();
    assert_eq!(ab.value.len(), 2);
    assert!(ab.value.iter().all(|t| t.coeff == "2"));

    assert_eq!(
        run(&["catalog", "emit", "L22_11", "--p", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["catalog", "emit", "L22_11", "--p", "-1/2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["catalog", "emit", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "emit", "A"]).status.code(), Some(2));
}

#[test]
fn emit_then_parse_round_trips() {
    for e in catalog_list() {
        let Some(l) = catalog_default(&e) else {
            continue;
        };
        let o = run(&["catalog", "emit", e.key]);
        let back = AlgebraFile::from_json(&stdout(&o))
            .unwrap()
            .to_algebra()
            .unwrap();
        assert_eq!(back.stored_brackets(), l.stored_brackets(), "{}", e.key);
        assert_eq!(back.even_names(), l.even_names());
        assert_eq!(back.odd_names(), l.odd_names());
    }
}

#[test]
fn verify_paper_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = run(&["verify-paper", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let csv = fs::read_to_string(out.join("report.csv")).unwrap();
    assert!(csv.starts_with(
        "key,m,n,claimed_dim,claimed_even,claimed_odd,computed_dim,computed_even,computed_odd,s_claimed,s_computed,status\n"
    ));
    assert!(csv.contains("L12_3,1,2,2,1,1,2,1,1,2,2,MATCH"));
    assert!(csv.contains("L22_9,2,2,2,1,1,1,1,0,4,5,MISMATCH"));
    assert!(csv.contains("H01,1,1,,,,0,0,0,,2,UNTABULATED"));
    let txt = fs::read_to_string(out.join("report.txt")).unwrap();
    assert_eq!(txt, stdout(&o));
    assert!(txt.contains("seed 11"));
}
