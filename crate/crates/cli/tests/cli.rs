use std::process::{Command, Output};

use qcap::bounds::{bb84_upper, corollary7_bound, uniform_grid};

fn qcap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn qcap_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcap"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn parse(csv: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = csv.lines();
    let header = lines
        .next()
        .unwrap()
        .split(',')
        .map(str::to_owned)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn dep_curve_contents() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dep.csv");
    let o = qcap(&["dep-curve", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(!text.contains('\r'));
    assert!(text.lines().all(|l| !l.ends_with(',')));
    let (header, rows) = parse(&text);
    assert_eq!(
        header.join(","),
        "p,hashing,one_minus_Hp,one_minus_4p,ad_bound,delta,thm6_hull,cor7_hull"
    );
    assert_eq!(rows.len(), 601);
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .skip(1)
        .all(|c| c == "1.000000000"));

    let quarter = rows.iter().find(|r| (r[0] - 0.25).abs() < 1e-12).unwrap();
    assert_eq!(quarter[3], 0.0);
    assert!(quarter[6] <= 0.0 && quarter[7] <= 0.0);
    for r in &rows {
        assert!(r[7] <= r[2].min(r[3]) + 1e-9, "p={}", r[0]);
    }

    // values round-trip to within the printed precision
    let grid = uniform_grid(0.0, 0.3, 601).unwrap();
    let cor7 = corollary7_bound(&grid).unwrap();
    for (r, v) in rows.iter().zip(cor7.values()) {
        assert!((r[7] - v).abs() <= 5e-10 + 1e-15);
    }
}

#[test]
fn dep_curve_clamped_columns() {
    let o = qcap(&["dep-curve", "--steps", "31", "--include-clamped"]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = parse(&stdout(&o));
    assert_eq!(
        header.join(","),
        "p,hashing,one_minus_Hp,one_minus_4p,ad_bound,delta,thm6_hull,cor7_hull,thm6_hull_clamped,cor7_hull_clamped"
    );
    for r in &rows {
        assert_eq!(r[8], r[6].max(0.0));
        assert_eq!(r[9], r[7].max(0.0));
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["dep-curve", "--steps", "121"];
    let a = qcap_env(&args, "QCAP_THREADS", "1");
    let b = qcap_env(&args, "QCAP_THREADS", "4");
    let c = qcap_env(&args, "QCAP_THREADS", "0");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert_eq!(
        qcap_env(&args, "QCAP_THREADS", "lots").status.code(),
        Some(2)
    );
}

#[test]
fn bb84_curve_contents() {
    let o = qcap(&["bb84-curve"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let (header, rows) = parse(&text);
    assert_eq!(header.join(","), "q,bb84_upper,bb84_upper_clamped");
    assert_eq!(rows.len(), 501);
    assert_eq!(
        text.lines().nth(1).unwrap(),
        "0.000000000,1.000000000,1.000000000"
    );
    assert!(rows.iter().all(|r| r[2] >= 0.0));
    for r in &rows {
        assert!((r[1] - bb84_upper(r[0]).unwrap()).abs() <= 5e-10 + 1e-15);
    }

    let (_, bracket) = parse(&stdout(&qcap(&[
        "bb84-curve",
        "--qmin",
        "0.146",
        "--qmax",
        "0.147",
        "--steps",
        "2",
    ])));
    assert!(bracket[0][1] > 0.0 && bracket[1][1] < 0.0);
}

#[test]
fn verify_passes_by_default_and_is_reproducible() {
    let a = qcap(&["verify", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let lines: Vec<String> = stdout(&a).lines().map(str::to_owned).collect();
    assert!(lines.iter().filter(|l| l.starts_with("PASS")).count() >= 9);
    let b = qcap(&["verify", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_fails_at_impossible_tolerance() {
    let o = qcap(&["verify", "--tol", "1e-15"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert_eq!(qcap(&["verify", "--tol", "-1"]).status.code(), Some(2));
}

#[test]
fn point_queries() {
    assert_eq!(
        stdout(&qcap(&["point", "--bound", "bb84_upper", "--x", "0"])),
        "bb84_upper(0) = 1\n"
    );
    assert_eq!(
        stdout(&qcap(&["point", "--bound", "one_minus_4p", "--x", "0.2"])),
        "one_minus_4p(0.2) = 0.2\n"
    );

    let out = stdout(&qcap(&["point", "--bound", "delta", "--x", "0.1"]));
    let mut lines = out.lines();
    let value: f64 = lines
        .next()
        .unwrap()
        .strip_prefix("delta(0.1) = ")
        .unwrap()
        .parse()
        .unwrap();
    // the minimizer is the symmetric point; compare with its closed form
    let h = |x: f64| -x * x.log2() - (1.0 - x) * (1.0 - x).log2();
    let s = 0.9f64.sqrt();
    let g = 4.0 * s * (1.0 - s);
    assert!((value - (h((1.0 - g) / 2.0) - h(g / 2.0))).abs() < 1e-9);
    assert!(lines.next().unwrap().starts_with("argmin (u, v) = ("));

    assert_eq!(
        qcap(&["point", "--bound", "nonsense", "--x", "0.1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qcap(&["point", "--bound", "hashing", "--x", "1.5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn svg_output() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("dep.csv");
    let svg = dir.path().join("dep.svg");
    let svg2 = dir.path().join("again.svg");
    assert_eq!(
        qcap(&[
            "dep-curve",
            "--steps",
            "61",
            "--out",
            csv.to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap()
        ])
        .status
        .code(),
        Some(0)
    );
    let doc = std::fs::read_to_string(&svg).unwrap();
    assert!(doc.starts_with("<svg") && doc.trim_end().ends_with("</svg>"));
    assert!(doc.matches("<polyline").count() >= 4);
    for name in ["hashing", "one_minus_Hp", "one_minus_4p", "cor7_hull"] {
        assert!(doc.contains(&format!(">{name}</text>")));
    }

    assert_eq!(
        qcap(&[
            "svg",
            "--from",
            csv.to_str().unwrap(),
            "--out",
            svg2.to_str().unwrap()
        ])
        .status
        .code(),
        Some(0)
    );
    assert_eq!(std::fs::read(&svg2).unwrap(), std::fs::read(&svg).unwrap());

    let empty = qcap(&[
        "svg",
        "--from",
        csv.to_str().unwrap(),
        "--columns",
        "",
        "--out",
        svg2.to_str().unwrap(),
    ]);
    assert_eq!(empty.status.code(), Some(2));
    let unwritable = qcap(&["svg", "--set", "bb84", "--out", "/nonexistent/dir/x.svg"]);
    assert_eq!(unwritable.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["dep-curve", "--steps", "1"],
        vec!["dep-curve", "--pmin", "0.3", "--pmax", "0.1"],
        vec!["bb84-curve", "--qmax", "0.7"],
        vec!["dep-curve", "--out", "/nonexistent/dir/x.csv"],
        vec!["no-such-command"],
    ] {
        assert_eq!(qcap(&args).status.code(), Some(2), "{args:?}");
    }
}
