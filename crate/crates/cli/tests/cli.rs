use std::process::{Command, Output};

fn lejakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lejakit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_disc_four() {
    let o = lejakit(&["gen", "disc", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<(f64, f64)> = rdr
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[3].parse().unwrap(), r[4].parse().unwrap())
        })
        .collect();
    assert_eq!(rows, vec![(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]);
    assert!(!text.contains('\r'));
    assert!(text.starts_with("index,angle_num,angle_log2den,re,im\n"));
}

#[test]
fn gen_interval_three() {
    let o = lejakit(&["gen", "interval", "3"]);
    let text = stdout(&o);
    let xs: Vec<f64> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(xs, vec![1.0, -1.0, 0.0]);
    let o = lejakit(&["gen", "interval", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn seventeen_significant_digits_round_trip() {
    let o = lejakit(&["gen", "disc", "64"]);
    let text = stdout(&o);
    let pts = lejakit::leja_section(64).unwrap().points();
    for (line, z) in text.lines().skip(1).zip(pts) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f[3].parse::<f64>().unwrap(), z.re);
        assert_eq!(f[4].parse::<f64>().unwrap(), z.im);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["gen", "disc", "0"],
        vec!["gen", "square", "3"],
        vec!["lebesgue", "disc", "5", "2"],
        vec!["lebesgue", "disc", "0", "2"],
        vec!["verify", "all", "0"],
        vec!["verify", "disc", "2000"],
        vec!["gamma", "0"],
        vec!["gamma", "11"],
        vec!["figure", "2"],
        vec!["bogus"],
    ] {
        assert_eq!(lejakit(&args).status.code(), Some(2), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_lejakit"))
        .args(["gen", "disc", "3"])
        .env("LEJAKIT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lebesgue_output_is_byte_stable() {
    let a = lejakit(&["lebesgue", "interval", "--kmin", "3", "--kmax", "20", "--seed", "5"]);
    let b = lejakit(&["lebesgue", "interval", "3", "20", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let o = Command::new(env!("CARGO_BIN_EXE_lejakit"))
        .args(["lebesgue", "interval", "3", "20", "--seed", "5"])
        .env("LEJAKIT_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.stdout, a.stdout);
    assert_eq!(stdout(&a).lines().count(), 19);
}

#[test]
fn out_file_gets_a_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.csv");
    let o = lejakit(&["gamma", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let body = std::fs::read_to_string(&out).unwrap();
    assert_eq!(body.lines().count(), 1 + 1 + 2 + 4);
    let m: lejakit_cli::RunManifest =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("g.csv.manifest.json")).unwrap()).unwrap();
    assert_eq!(m.command, "gamma");
    assert_eq!(m.parameters["mmax"], 3);
    assert_eq!(m.seed, 0);
}

#[test]
fn gamma_rows() {
    let text = stdout(&lejakit(&["gamma", "4"]));
    let rows: Vec<Vec<String>> = text.lines().skip(1).map(|l| l.split(',').map(String::from).collect()).collect();
    assert_eq!(rows.len(), 1 + 2 + 4 + 8);
    assert_eq!(rows[0][2].parse::<f64>().unwrap(), 1.25);
    assert_eq!(rows[0][3].parse::<f64>().unwrap(), 1.25);
    assert!((rows[1][2].parse::<f64>().unwrap() - 1.125).abs() < 1e-15);
    for m in 1..=4 {
        let last = (1u64 << (m - 1)).to_string();
        assert!(rows.iter().any(|r| r[0] == m.to_string() && r[1] == last));
    }
}

#[test]
fn verify_disc_passes() {
    let o = lejakit(&["verify", "disc", "64"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["outcome"], "pass");
    assert_eq!(v["manifest"]["command"], "verify");
}

#[test]
fn verify_interval_reports_conjecture() {
    let o = lejakit(&["verify", "interval", "129"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["conjecture"], "holds up to 129");
}

#[test]
fn figure_rows() {
    let text = stdout(&lejakit(&["figure", "7"]));
    let last: Vec<f64> = text.lines().last().unwrap().split(',').take(5).map(|s| s.parse().unwrap()).collect();
    assert_eq!(last[0], 7.0);
    assert!((last[1] - 7.0).abs() < 7e-6);
    assert!((last[2] - 21.0).abs() < 1e-12);
}
