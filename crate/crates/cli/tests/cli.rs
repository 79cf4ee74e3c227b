use std::process::{Command, Output};

use binrel::tablegen::{
    build_table, parse_csv, wilson_accuracy_sweep, Format, Preset, Render, RenderOptions,
};
use binrel::{confidence, Probability, TrialOutcome};

fn binrel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binrel"))
        .args(args)
        .env_remove("BINREL_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = binrel(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn answer(args: &[&str]) -> String {
    stdout(args).trim_end().to_string()
}

fn exit_code(args: &[&str]) -> i32 {
    let out = binrel(args);
    assert!(out.stdout.is_empty(), "nothing on stdout for a failure");
    assert!(!out.stderr.is_empty(), "diagnostic on stderr");
    out.status.code().unwrap()
}

#[test]
fn confidence_examples() {
    assert_eq!(
        answer(&[
            "confidence",
            "--samples",
            "10",
            "--failures",
            "0",
            "--reliability",
            "0.90"
        ]),
        "65.1"
    );
    assert_eq!(
        answer(&[
            "confidence",
            "--samples",
            "10",
            "--failures",
            "0",
            "--reliability",
            "90%"
        ]),
        "65.1"
    );
    assert_eq!(
        answer(&[
            "confidence",
            "--samples",
            "10",
            "--failures",
            "10",
            "--reliability",
            "0.90"
        ]),
        "0.0"
    );
}

#[test]
fn confidence_matches_the_library_at_scale() {
    let printed = answer(&[
        "confidence",
        "--samples",
        "5000",
        "--failures",
        "3",
        "--reliability",
        "0.999",
        "--fraction",
        "--precision",
        "15",
    ]);
    let lib = confidence(
        TrialOutcome::new(5000, 3).unwrap(),
        Probability::new(0.999).unwrap(),
    );
    assert_eq!(
        printed,
        RenderOptions {
            precision: 15,
            percent: false
        }
        .format(lib.value())
    );
    assert!(printed.starts_with("0.7351145241"), "{printed}");
}

#[test]
fn reliability_examples() {
    assert_eq!(
        answer(&[
            "reliability",
            "--samples",
            "10",
            "--failures",
            "0",
            "--confidence",
            "0.95"
        ]),
        "74.1"
    );
    assert_eq!(
        answer(&[
            "reliability",
            "--samples",
            "1",
            "--failures",
            "0",
            "--confidence",
            "0.5"
        ]),
        "50.0"
    );
    let exact = answer(&[
        "reliability",
        "--samples",
        "40",
        "--failures",
        "4",
        "--confidence",
        "0.95",
    ]);
    assert_eq!(exact, "78.6");
    let cc: f64 = answer(&[
        "reliability",
        "--samples",
        "40",
        "--failures",
        "4",
        "--confidence",
        "0.95",
        "--method",
        "wilson-cc",
    ])
    .parse()
    .unwrap();
    assert!((cc - 78.6).abs() < 5.0, "{cc}");
    let closed = answer(&[
        "reliability",
        "--samples",
        "10",
        "--confidence",
        "0.95",
        "--method",
        "closed-form",
    ]);
    assert_eq!(closed, "74.1");
}

#[test]
fn assurance_examples() {
    assert_eq!(
        answer(&["assurance", "--samples", "3", "--failures", "1"]),
        "50.0"
    );
    assert_eq!(
        answer(&["assurance", "--samples", "2", "--failures", "2"]),
        "0.0"
    );
    // the root is 0.900445; the published 90.1 comes from the loose solver
    assert_eq!(
        answer(&["assurance", "--samples", "22", "--failures", "0"]),
        "90.0"
    );
    assert_eq!(
        answer(&[
            "assurance",
            "--samples",
            "22",
            "--failures",
            "0",
            "--tolerance",
            "1e-3"
        ]),
        "90.1"
    );
    assert_eq!(
        answer(&[
            "assurance",
            "--samples",
            "22",
            "--fraction",
            "--precision",
            "6"
        ]),
        "0.900445"
    );
}

#[test]
fn sample_size_examples() {
    assert_eq!(
        answer(&[
            "sample-size",
            "--metric",
            "assurance",
            "--target",
            "0.99",
            "--failures",
            "0"
        ]),
        "459"
    );
    assert_eq!(
        answer(&[
            "sample-size",
            "--metric",
            "assurance",
            "--target",
            "0.5",
            "--failures",
            "0"
        ]),
        "1"
    );
    let brute = (1..).find(|&n| 1.0 - 0.9f64.powi(n) >= 0.95).unwrap();
    assert_eq!(
        answer(&[
            "sample-size",
            "--metric",
            "confidence",
            "--target",
            "0.95",
            "--reliability",
            "0.9",
            "--failures",
            "0",
        ]),
        brute.to_string()
    );
}

#[test]
fn preset_tables_match_the_library() {
    for (name, preset) in [
        ("table1", Preset::Table1),
        ("table2", Preset::Table2),
        ("table3", Preset::Table3),
    ] {
        let printed = stdout(&["table", "--preset", name, "--format", "csv"]);
        let lib = build_table(&preset.grid(), preset.solver_tolerance())
            .render(Format::Csv, &RenderOptions::default());
        assert_eq!(printed, lib, "{name}");
    }
    let t1 = parse_csv(&stdout(&["table", "--preset", "table1"])).unwrap();
    assert_eq!((t1.f_values.len(), t1.n_values.len()), (6, 10));
    assert_eq!(t1.cells[0][0], Some(74.1));
}

#[test]
fn table3_markdown_has_four_panels() {
    let md = stdout(&["table", "--preset", "table3", "--format", "markdown"]);
    assert_eq!(md.matches("| f \\ n |").count(), 4);
    assert!(md.contains("| 0 | 50.0 | 61.8 |"));
}

#[test]
fn custom_grid_corners_match_table2() {
    let csv = stdout(&[
        "table",
        "--quantity",
        "confidence",
        "--reliability",
        "0.9",
        "--samples",
        "10..30:10",
        "--failures",
        "0..2",
    ]);
    let t = parse_csv(&csv).unwrap();
    assert_eq!(t.n_values, vec![10, 20, 30]);
    assert_eq!(t.f_values, vec![0, 1, 2]);
    assert_eq!(t.cells[0][0], Some(65.1));
    assert_eq!(t.cells[0][2], Some(95.8));
    assert_eq!(t.cells[2][0], Some(7.0));
    assert_eq!(t.cells[2][2], Some(58.9));
}

#[test]
fn format_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_binrel"))
        .args([
            "table",
            "--quantity",
            "assurance",
            "--samples",
            "1..3",
            "--failures",
            "0",
        ])
        .env("BINREL_FORMAT", "markdown")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("|---:|"));
    let out = Command::new(env!("CARGO_BIN_EXE_binrel"))
        .args([
            "table",
            "--quantity",
            "assurance",
            "--samples",
            "1..3",
            "--failures",
            "0",
            "--format",
            "csv",
        ])
        .env("BINREL_FORMAT", "markdown")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("f,1,2,3\n"));
}

#[test]
fn sweep_output() {
    let csv = stdout(&["sweep", "--samples", "40"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "f,r_exact,r_wilson,r_wilson_cc,err_wilson,err_wilson_cc"
    );
    assert_eq!(lines.len(), 40);
    let lib = wilson_accuracy_sweep(40, Default::default(), Default::default()).unwrap();
    assert_eq!(
        csv,
        lib.render(
            Format::Csv,
            &RenderOptions {
                precision: 6,
                percent: false
            }
        )
    );

    let detail = stdout(&[
        "sweep",
        "--samples",
        "40",
        "--detail",
        "--c-source",
        "zero-failure",
    ]);
    assert!(detail.starts_with(
        "f,r_exact,r_wilson,r_wilson_cc,err_wilson,err_wilson_cc,r_point,confidence,err_exact\n"
    ));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        exit_code(&["confidence", "--samples", "10", "--reliability", "90"]),
        2
    );
    assert_eq!(
        exit_code(&["confidence", "--samples", "10", "--reliability", "1.5"]),
        2
    );
    assert_eq!(
        exit_code(&["confidence", "--samples", "ten", "--reliability", "0.9"]),
        2
    );
    assert_eq!(
        exit_code(&["assurance", "--samples", "10", "--tolerance", "0.5"]),
        2
    );
    assert_eq!(
        exit_code(&[
            "reliability",
            "--samples",
            "10",
            "--failures",
            "1",
            "--confidence",
            "0.9",
            "--method",
            "closed-form"
        ]),
        2
    );
    assert_eq!(
        exit_code(&["sample-size", "--metric", "confidence", "--target", "0.9"]),
        2
    );
    assert_eq!(
        exit_code(&[
            "table",
            "--quantity",
            "reliability",
            "--samples",
            "10",
            "--failures",
            "0"
        ]),
        2
    );
    assert_eq!(
        exit_code(&[
            "table",
            "--quantity",
            "assurance",
            "--samples",
            "30..10",
            "--failures",
            "0"
        ]),
        2
    );
    assert_eq!(
        exit_code(&[
            "table",
            "--quantity",
            "assurance",
            "--samples",
            "10,5",
            "--failures",
            "0"
        ]),
        2
    );
    assert_eq!(exit_code(&["table", "--preset", "table4"]), 2);
    assert_eq!(exit_code(&["sweep", "--samples", "2"]), 2);
    assert_eq!(exit_code(&["frobnicate"]), 2);
}

#[test]
fn domain_errors_exit_3() {
    assert_eq!(
        exit_code(&[
            "confidence",
            "--samples",
            "3",
            "--failures",
            "5",
            "--reliability",
            "0.9"
        ]),
        3
    );
    assert_eq!(
        exit_code(&[
            "reliability",
            "--samples",
            "4",
            "--failures",
            "4",
            "--confidence",
            "0.9"
        ]),
        3
    );
    assert_eq!(
        exit_code(&["sample-size", "--metric", "assurance", "--target", "1"]),
        3
    );
    assert_eq!(
        exit_code(&["sample-size", "--metric", "assurance", "--target", "100%"]),
        3
    );
}
