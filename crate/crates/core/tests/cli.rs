use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use pseudoline::format::{parse_coloring, parse_report_records, parse_wd};
use pseudoline::oracles::Bound;
use pseudoline::Arrangement;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudoline"))
        .args(args)
        .current_dir(dir)
        .env_remove("PSEUDOLINE_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn generate_kinds() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = run(d, &["generate", "trivial", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "4\n0 4\n");

    assert!(run(d, &["generate", "gap", "3", "-o", "gap.wd"]).status.success());
    assert_eq!(parse_wd(&fs::read_to_string(d.join("gap.wd")).unwrap()).unwrap().n(), 9);

    let o = run(d, &["generate", "simple", "5", "--seed", "42"]);
    let wd = parse_wd(&stdout(&o)).unwrap();
    assert_eq!(wd.events().len(), 10);
    assert!(wd.validate().valid);

    for args in [
        &["generate", "polygon", "6"][..],
        &["generate", "twisted-bundles", "3", "7"],
        &["generate", "efl-reduction", "P3"],
        &["generate", "efl-reduction", "4:0-1,2-3"],
        &["generate", "random", "7", "--merge", "0.5"],
    ] {
        let o = run(d, args);
        assert!(o.status.success(), "{args:?}");
        assert!(parse_wd(&stdout(&o)).unwrap().validate().valid, "{args:?}");
    }

    assert!(run(d, &["generate", "enumerate", "4", "-o", "all"]).status.success());
    assert_eq!(fs::read_dir(d.join("all")).unwrap().count(), 25);

    assert!(!run(d, &["generate", "twisted-bundles", "5", "3"]).status.success());
}

#[test]
fn seed_comes_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let a = Command::new(env!("CARGO_BIN_EXE_pseudoline"))
        .args(["generate", "simple", "7"])
        .env("PSEUDOLINE_SEED", "9")
        .output()
        .unwrap();
    let b = run(dir.path(), &["generate", "simple", "7", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn validate_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("ok.wd"), "3\n0 2\n1 2\n0 2\n").unwrap();
    fs::write(d.join("twice.wd"), "3\n0 2\n0 2\n").unwrap();
    fs::write(d.join("garbage.wd"), "three\n").unwrap();
    assert_eq!(run(d, &["validate", "ok.wd"]).status.code(), Some(0));
    assert_eq!(run(d, &["validate", "twice.wd"]).status.code(), Some(3));
    assert_eq!(run(d, &["validate", "garbage.wd"]).status.code(), Some(2));
    assert_eq!(run(d, &["color", "twice.wd", "--mode", "cell"]).status.code(), Some(3));
    assert_eq!(run(d, &["stats", "garbage.wd"]).status.code(), Some(2));

    fs::write(d.join("poly.wd"), stdout(&run(d, &["generate", "polygon", "5"]))).unwrap();
    let o = run(d, &["exact", "poly.wd", "--mode", "cell", "--cap", "4"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).contains("exceeds cap 4"));
}

#[test]
fn color_and_exact() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("poly.wd"), stdout(&run(d, &["generate", "polygon", "5"]))).unwrap();
    fs::write(d.join("simple4.wd"), stdout(&run(d, &["generate", "simple", "4"]))).unwrap();
    fs::write(d.join("pencil9.wd"), stdout(&run(d, &["generate", "trivial", "9"]))).unwrap();
    fs::write(d.join("gap.wd"), stdout(&run(d, &["generate", "gap", "3"]))).unwrap();
    fs::write(d.join("simple5.wd"), stdout(&run(d, &["generate", "simple", "5"]))).unwrap();

    let o = run(d, &["color", "poly.wd", "--mode", "cell", "-o", "poly.col"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("K 5"));
    assert!(stdout(&o).contains("verified"));
    let col = parse_coloring(&fs::read_to_string(d.join("poly.col")).unwrap()).unwrap();
    assert_eq!(col.coloring.num_colors(), 5);

    assert!(stdout(&run(d, &["color", "simple4.wd", "--mode", "line", "-o", "l.col"])).contains("K 3"));
    assert!(stdout(&run(d, &["color", "pencil9.wd", "--mode", "deg4", "-o", "p.col"])).contains("K 2"));
    assert!(run(d, &["color", "gap.wd", "--mode", "pl", "-o", "g.col"]).status.success());
    assert!(run(d, &["color", "gap.wd", "--mode", "lll", "--l", "3", "--r", "0", "-o", "g2.col"]).status.success());
    assert_eq!(run(d, &["color", "simple5.wd", "--mode", "line", "--budget", "4"]).status.code(), Some(1));

    assert!(stdout(&run(d, &["exact", "gap.wd", "--mode", "pl"])).contains("minimum 6"));
    assert!(stdout(&run(d, &["exact", "simple5.wd", "--mode", "line"])).contains("minimum 5"));
    assert!(stdout(&run(d, &["exact", "pencil9.wd", "--mode", "cell"])).contains("minimum 1"));
    let o = run(d, &["exact", "simple4.wd", "--mode", "simultaneous", "-o", "s.col"]);
    assert!(stdout(&o).contains("minimum 6"));
    let s = parse_coloring(&fs::read_to_string(d.join("s.col")).unwrap()).unwrap();
    assert_eq!(s.coloring.num_colors(), 6);
}

#[test]
fn search_reports() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = run(d, &["search", "simultaneous", "--n", "3"]);
    assert!(o.status.success());
    assert!(parse_report_records(&stdout(&o)).unwrap().is_empty());

    let o = run(d, &["search", "simultaneous", "--n", "5", "--threshold", "6", "--max-witnesses", "3"]);
    let records = parse_report_records(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 3);
    for r in &records {
        assert!(matches!(r.minimum, Bound::Exact(v) if v >= 6));
        assert!(Arrangement::new(r.diagram.clone()).is_ok());
    }

    let o = run(d, &["search", "mx-gap", "--n", "4"]);
    assert!(stdout(&o).contains("# max_gap="));
    assert!(!parse_report_records(&stdout(&o)).unwrap().is_empty());

    let a = run(d, &["search", "mx-gap", "--n", "6", "--samples", "20", "--seed", "3"]);
    let b = run(d, &["search", "mx-gap", "--n", "6", "--samples", "20", "--seed", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn render_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("s3.wd"), "3\n0 2\n1 2\n0 2\n").unwrap();
    fs::write(d.join("pencil.wd"), "4\n0 4\n").unwrap();
    let svg = stdout(&run(d, &["render", "s3.wd"]));
    assert_eq!(svg.matches("<polyline").count(), 3);
    assert_eq!(svg.matches("<circle").count(), 3);
    assert_eq!(stdout(&run(d, &["render", "pencil.wd"])).matches("<circle").count(), 1);

    fs::write(d.join("poly.wd"), stdout(&run(d, &["generate", "polygon", "5"]))).unwrap();
    assert!(run(d, &["color", "poly.wd", "--mode", "cell", "-o", "poly.col"]).status.success());
    let a = run(d, &["render", "poly.wd", "--coloring", "poly.col"]);
    let b = run(d, &["render", "poly.wd", "--coloring", "poly.col"]);
    assert_eq!(a.stdout, b.stdout);
    let svg = stdout(&a);
    let fills: std::collections::BTreeSet<&str> = svg
        .lines()
        .filter(|l| l.starts_with("<circle"))
        .map(|l| l.split("fill=\"").nth(1).unwrap().split('"').next().unwrap())
        .collect();
    assert_eq!(fills.len(), 5);

    let o = run(d, &["render", "poly.wd", "--coloring", "poly.col", "--palette", "red,blue"]);
    assert!(!o.status.success());
}
