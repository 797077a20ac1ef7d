use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn numsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numsg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn has_line(text: &str, line: &str) -> bool {
    text.lines().any(|l| l == line)
}

#[test]
fn analyze_generators() {
    let o = numsg(&["analyze", "gens=5,7,9"]);
    assert!(o.status.success());
    let s = stdout(&o);
    for line in [
        "t: 2",
        "PF: 11,13",
        "almost symmetric: false",
        "F: 13",
        "g: 8",
        "minimal generators: 5,7,9",
    ] {
        assert!(has_line(&s, line), "missing {line:?} in\n{s}");
    }
}

#[test]
fn analyze_symmetric_gaps() {
    let s = stdout(&numsg(&["analyze", "gaps=1,2,4,7"]));
    assert!(has_line(&s, "symmetric: true"));
    assert!(has_line(&s, "t: 1"));
}

#[test]
fn analyze_naturals_marks_transforms_not_applicable() {
    let s = stdout(&numsg(&["analyze", "gens=1"]));
    assert!(has_line(&s, "F: -1"));
    assert!(has_line(&s, "t: n/a"));
    assert!(has_line(&s, "T-set: n/a"));
}

#[test]
fn analyze_parse_error_reports_position() {
    let o = numsg(&["analyze", "gaps=1,x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 7"), "{}", stderr(&o));
}

#[test]
fn analyze_rejects_gcd_above_one() {
    let o = numsg(&["analyze", "gens=4,6"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("gcd"), "{}", stderr(&o));
}

#[test]
fn family_almost_symmetric() {
    let o = numsg(&["family", "as", "F=19", "k=0"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.starts_with("gaps=")).count(), 4);
    assert!(has_line(&s, "# type: 3"));
    assert!(has_line(&s, "# all almost symmetric: true"));
}

#[test]
fn family_general_with_rational_beta() {
    let s = stdout(&numsg(&[
        "family",
        "gen",
        "F=23",
        "k=1",
        "beta=43/100+1/1000000",
    ]));
    assert_eq!(s.lines().filter(|l| l.starts_with("gaps=")).count(), 4);
    assert!(has_line(&s, "# type: 2"));
    let flags = stdout(&numsg(&[
        "family",
        "gen",
        "F=23",
        "--k",
        "1",
        "--beta",
        "43/100+1/1000000",
    ]));
    assert_eq!(s, flags);
}

#[test]
fn family_errors_name_the_constraint() {
    let o = numsg(&["family", "as", "F=10", "k=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("F > 6k+6 = 12"), "{}", stderr(&o));

    let o = numsg(&["family", "gen", "F=23", "k=1", "beta=1/2"]);
    assert!(
        stderr(&o).contains("strictly between 2/5 and 1/2"),
        "{}",
        stderr(&o)
    );

    let o = numsg(&["family", "gen", "F=20", "k=1", "beta=9/20"]);
    assert!(
        stderr(&o).contains("must not be an integer"),
        "{}",
        stderr(&o)
    );

    let o = numsg(&["family", "gen", "F=23", "k=1"]);
    assert!(stderr(&o).contains("needs beta"), "{}", stderr(&o));
}

#[test]
fn family_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("members.txt");
    let o = numsg(&[
        "family",
        "as",
        "F=25",
        "k=1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(path).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("gaps=")).count(), 4);
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn tables_fast_mode_rows() {
    let dir = tempfile::tempdir().unwrap();
    let o = numsg(&["tables", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let pf = read(dir.path(), "parity_by_frobenius.csv");
    assert!(pf.starts_with("F,odd,even\n1,1,0\n2,0,1\n3,2,0\n"));
    assert!(has_line(&pf, "11,35,16"));
    assert!(has_line(&pf, "20,368,532"));
    assert!(!pf.contains("\n23,"));
    let pg = read(dir.path(), "parity_by_genus.csv");
    assert!(has_line(&pg, "13,552,449"));
    assert!(has_line(&pg, "16,2548,2258"));
    let t = read(dir.path(), "t_by_frobenius.csv");
    assert!(t.starts_with("F,t,count\n1,1,1\n2,2,1\n"));
    let t1 = read(dir.path(), "t1_by_frobenius.csv");
    assert!(t1.starts_with("F,t,count\n"));
    assert!(read(dir.path(), "t_by_genus.csv").starts_with("g,t,count\n1,1,1\n"));
}

#[test]
fn tables_are_identical_across_worker_counts() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for (dir, w) in [(&a, "1"), (&b, "4")] {
        let o = numsg(&[
            "tables",
            "--max-f",
            "20",
            "--max-g",
            "14",
            "--workers",
            w,
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    for name in [
        "t_by_frobenius.csv",
        "t1_by_frobenius.csv",
        "t_by_genus.csv",
        "parity_by_frobenius.csv",
        "parity_by_genus.csv",
    ] {
        assert_eq!(read(a.path(), name), read(b.path(), name), "{name}");
    }
}

#[test]
fn plotdata_full_mode_matches_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = numsg(&[
        "plotdata",
        "--mode",
        "full",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for entry in fs::read_dir(&golden).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        assert_eq!(read(dir.path(), &name), read(&golden, &name), "{name}");
    }
    let ratio = read(dir.path(), "parity_ratio_by_frobenius.csv");
    assert!(has_line(&ratio, "30,15023,16799,0.472095,0.527905"));
}

#[test]
fn plotdata_zero_counts_are_empty_cells() {
    let dir = tempfile::tempdir().unwrap();
    numsg(&[
        "plotdata",
        "--max-f",
        "8",
        "--max-g",
        "4",
        "--alpha",
        "2,7",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    let even = read(dir.path(), "log2_t_by_frobenius_even.csv");
    assert!(even.starts_with("F,t2,t7\n2,0.000000,\n"), "{even}");
    assert!(!even.contains("inf") && !even.contains("NaN"));
}

#[test]
fn verify_fast_mode_passes() {
    let o = numsg(&["verify"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.lines().all(|l| !l.starts_with("FAIL")));
    assert!(has_line(&s, "all checks passed"));
}

#[test]
fn bounds_outside_capacity_are_rejected() {
    let o = numsg(&["tables", "--max-f", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--max-f must be between 1 and 60"));
}
