use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const CORE_DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data");

fn motivic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motivic"))
        .args(args)
        .env_remove("MOTIVIC_STEMS_DATA")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_prints_region() {
    let out = motivic(&["classify", "20", "14"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "region=EtaLocal\n");
    assert_eq!(stdout(&motivic(&["classify", "-3", "-5"])), "region=Zero\n");
}

#[test]
fn group_on_the_tau_tower() {
    let out = motivic(&["group", "0", "-4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "region=TauLocal\ngroup=Z2 generator=tau^4\n");
}

#[test]
fn group_uses_stems_table() {
    let out = motivic(&["group", "7", "3"]);
    assert_eq!(stdout(&out), "region=TauLocal\ngroup=Z/16 generator=pi_7\n");
    let out = motivic(&["group", "32", "18"]);
    assert_eq!(stdout(&out), "region=NotUnderstood\ngroup=? generator=-\n");
}

#[test]
fn pretty_output() {
    let out = motivic(&["--pretty", "group", "8", "8"]);
    assert!(stdout(&out).contains("generated by eta^8"));
}

#[test]
fn ctau_sample() {
    let out = motivic(&["ctau", "0", "0", "--chart", "sample"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "group=Z2\n");
    let out = motivic(&["ctau", "99", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(motivic(&["classify", "x", "1"]).status.code(), Some(2));
    assert_eq!(motivic(&["nonsense"]).status.code(), Some(2));
    assert_eq!(motivic(&[]).status.code(), Some(2));
}

#[test]
fn missing_files_name_the_path() {
    let out = motivic(&["group", "3", "1", "--stems", "/nonexistent/stems.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/stems.txt"));
}

#[test]
fn data_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("stems.txt"), "0 Z\n3 8\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_motivic"))
        .args(["group", "3", "1"])
        .env("MOTIVIC_STEMS_DATA", dir.path())
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "region=TauLocal\ngroup=Z/8 generator=pi_3\n");
    let out = Command::new(env!("CARGO_BIN_EXE_motivic"))
        .args(["group", "6", "1"])
        .env("MOTIVIC_STEMS_DATA", dir.path())
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "region=TauLocal\ngroup=pi_6 generator=-\n");
}

#[test]
fn ingest_validates() {
    let fixtures = Path::new(CORE_DATA).join("fixtures");
    for name in [
        "missing_unit.txt",
        "bad_eta_edge.txt",
        "filtration_zero.txt",
    ] {
        let path = fixtures.join(name);
        let out = motivic(&["ingest", "--chart", path.to_str().unwrap(), "--validate"]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        assert!(stdout(&out).contains("violation="), "{name}");
    }
    let chart = Path::new(CORE_DATA).join("sample_chart.txt");
    let stems = Path::new(CORE_DATA).join("stems.txt");
    let out = motivic(&[
        "ingest",
        "--chart",
        chart.to_str().unwrap(),
        "--stems",
        stems.to_str().unwrap(),
        "--validate",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("violations=0"));
}

#[test]
fn chart_regions_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for path in [&a, &b] {
        let out = motivic(&[
            "chart",
            "regions",
            "--smax",
            "40",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    assert_eq!(
        first,
        fs::read(Path::new(CORE_DATA).join("golden/regions.svg")).unwrap()
    );
}

#[test]
fn chart_groups_and_motivic() {
    let dir = tempfile::tempdir().unwrap();
    let tsv = dir.path().join("g.tsv");
    let out = motivic(&[
        "chart",
        "groups",
        "--window",
        "s=-2..24,w=-4..24",
        "--out",
        tsv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        fs::read(&tsv).unwrap(),
        fs::read(Path::new(CORE_DATA).join("golden/groups.tsv")).unwrap()
    );

    let svg = dir.path().join("m.svg");
    let out = motivic(&[
        "chart",
        "motivic",
        "--chart",
        "sample",
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(fs::read_to_string(&svg).unwrap().contains("w ≤ 0"));

    let out = motivic(&[
        "chart",
        "regions",
        "--smax=-10",
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn families_and_census() {
    let out = motivic(&["families", "list"]);
    assert!(stdout(&out)
        .lines()
        .any(|l| l.starts_with("family=Pk_h1_4 ")));
    let out = motivic(&["families", "check", "--kmax", "100"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("on_line=false"));
    let out = motivic(&["may-census", "--max-stem", "30"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("h10 stem=0 weight=0"));
    assert!(stdout(&out).ends_with("weight_le_stem=true\n"));
}

#[test]
fn localize_sample() {
    let out = motivic(&["localize"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("s=4 f=4 status=stable rank=1 survivors=alpha1^4"));
}

#[test]
fn verify_suites() {
    let out = motivic(&["verify", "einfty"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS einfty.basis"));
    assert!(text.contains("degree=(0,0,0) expected=1 computed=1 ok"));

    let out = motivic(&["verify", "partition", "--max", "200"]);
    assert!(out.status.success());
    let out = motivic(&[
        "verify",
        "golden",
        "roundtrip",
        "families",
        "ctau",
        "localization",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("result=PASS\n"));

    let empty = tempfile::tempdir().unwrap();
    let out = motivic(&[
        "verify",
        "golden",
        "--golden-dir",
        empty.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL golden.regions.svg"));

    assert_eq!(motivic(&["verify", "bogus"]).status.code(), Some(1));
}
