use std::path::Path;
use std::process::{Command, Output};

use rdi_core::geometry::PairGeometry;
use rdi_core::scalar::{scalar_energy, scalar_energy_static, ScalarParams};
use rdi_core::BellSign;

const FIG: [&str; 8] = ["--sep", "0.075", "--z", "0.02", "--omega0", "4.17", "--a", "0.5"];

fn rdi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdi"))
        .args(args)
        .env_remove("RDI_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn energy_lines(o: &Output) -> Vec<f64> {
    stdout(o)
        .lines()
        .map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap())
        .collect()
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut r = csv::Reader::from_path(path).unwrap();
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(|f| f.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs().max(a.abs())
    }
}

#[test]
fn static_perp_energy() {
    let o = rdi(&["energy", "--a", "0", "--sep", "0.075", "--z", "0.02", "--omega0", "4.17"]);
    assert!(o.status.success());
    let e = energy_lines(&o);
    assert!(rel(e[2], -9.890_966_32e-2) < 1e-8, "{e:?}");
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["sweep", "--param", "a", "--from", "1e-3", "--to", "10", "--points", "9", "--scale", "log"];
    let args: Vec<&str> = args.iter().copied().chain(FIG).collect();
    let first = rdi(&args);
    let second = rdi(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let e1 = rdi(&[&["energy", "--field", "em", "--preset", "cross-xz"][..], &FIG[..]].concat());
    let e2 = rdi(&[&["energy", "--field", "em", "--preset", "cross-xz"][..], &FIG[..]].concat());
    assert_eq!(e1.stdout, e2.stdout);
}

#[test]
fn sweep_round_trips_to_nine_digits() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let o = rdi(&[
        &["sweep", "--geometry", "par", "--param", "a", "--from", "1e-8", "--to", "1e-2", "--points", "13", "--scale", "log"][..],
        &FIG[..6],
        &["--a", "0", "--out", out.to_str().unwrap()][..],
    ]
    .concat());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let (header, rows) = read_csv(&out);
    assert_eq!(header, ["param", "free", "boundary", "total", "static_total"]);
    assert_eq!(rows.len(), 13);
    let raw = std::fs::read_to_string(&out).unwrap();
    assert!(!raw.contains('\r'));

    for row in &rows {
        let g = PairGeometry::parallel(0.075, 0.02, row[0]).unwrap();
        let p = ScalarParams::new(g, 4.17, 1.0, BellSign::Symmetric).unwrap();
        let e = scalar_energy(&p).unwrap();
        let s = scalar_energy_static(&p).unwrap();
        for (got, want) in row[1..].iter().zip([e.free_term, e.boundary_term, e.total, s.total]) {
            assert!(rel(*got, want) < 5e-9, "{got} vs {want}");
        }
        // Small a: accelerated converges to static.
        assert!(rel(row[3], row[4]) < 1e-6);
    }
    assert!(rows.iter().all(|r| r[4] == rows[0][4]));
}

#[test]
fn two_point_sweep_matches_energy() {
    let base = ["--geometry", "perp", "--sep", "0.3", "--z", "0.1", "--omega0", "2.5", "--state", "anti", "--lambda-sq", "2"];
    let o = rdi(&[&["sweep", "--param", "a", "--from", "0.2", "--to", "7", "--points", "2"][..], &base[..], &["--a", "1"][..]].concat());
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<f64>> = text.lines().skip(1).map(|l| l.split(',').map(|f| f.parse().unwrap()).collect()).collect();
    for (row, a) in rows.iter().zip(["0.2", "7"]) {
        let e = energy_lines(&rdi(&[&["energy", "--a", a][..], &base[..]].concat()));
        assert_eq!(&row[1..4], &e[..]);
    }
}

#[test]
fn log_sweep_param_column_increases() {
    let o = rdi(&[&["sweep", "--param", "z", "--from", "1e-3", "--to", "5", "--points", "50", "--scale", "log"][..], &FIG[..]].concat());
    let params: Vec<f64> = stdout(&o).lines().skip(1).map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(params.len(), 50);
    assert!(params.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn cross_dipoles_vanish_at_rest() {
    let o = rdi(&["energy", "--field", "em", "--preset", "cross-xz", "--a", "0", "--sep", "0.075", "--z", "0.02", "--omega0", "4.17"]);
    assert!(o.status.success());
    assert_eq!(energy_lines(&o)[2], 0.0);
    let o = rdi(&["energy", "--field", "em", "--dipole-a", "1,0,0", "--dipole-b", "0,1,0", "--geometry", "par", "--a", "0", "--sep", "1", "--z", "0.5", "--omega0", "1"]);
    assert_eq!(energy_lines(&o)[2], 0.0);
}

#[test]
fn si_output_adds_joules() {
    let o = rdi(&["energy", "--units", "si", "--a", "1e20", "--sep", "1.5e-8", "--z", "1e-8", "--omega0", "4.17"]);
    assert!(o.status.success());
    for line in stdout(&o).lines() {
        let f: Vec<&str> = line.split_whitespace().collect();
        let (ev, j): (f64, f64) = (f[1].parse().unwrap(), f[3].parse().unwrap());
        assert_eq!(f[4], "J");
        assert!(rel(j, ev * 1.602_176_634e-19) < 1e-8);
    }
}

#[test]
fn config_file_and_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("fig.conf");
    std::fs::write(&cfg, "# reference geometry\nsep = 0.075\nz = 0.02\nomega0 = 4.17\na = 3\n").unwrap();
    let from_file = rdi(&["energy", "--config", cfg.to_str().unwrap(), "--a", "0"]);
    let direct = rdi(&["energy", "--a", "0", "--sep", "0.075", "--z", "0.02", "--omega0", "4.17"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, direct.stdout);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| rdi(args).status.code().unwrap();
    assert_eq!(code(&["energy", "--a", "0", "--sep", "0", "--z", "0.02", "--omega0", "4.17"]), 2);
    assert_eq!(code(&["energy", "--a", "0", "--z", "0.02", "--omega0", "4.17"]), 2);
    assert_eq!(code(&[&["energy", "--field", "em"][..], &FIG[..]].concat()), 2);
    assert_eq!(code(&[&["energy", "--lambda-sq", "1", "--field", "em", "--preset", "cross-xz"][..], &FIG[..]].concat()), 2);
    assert_eq!(code(&["energy", "--geometry", "diagonal"]), 2);
    assert_eq!(code(&[&["sweep", "--param", "a", "--from", "0", "--to", "1", "--scale", "log"][..], &FIG[..]].concat()), 2);
    assert_eq!(code(&[&["sweep", "--param", "a", "--from", "2", "--to", "1"][..], &FIG[..]].concat()), 2);
    assert_eq!(code(&[&["sweep", "--param", "a", "--from", "0", "--to", "1", "--points", "1"][..], &FIG[..]].concat()), 2);
    assert_eq!(code(&["validate", "--filter", "no-such-case"]), 2);
    assert_eq!(code(&["energy", "--config", "/nonexistent/rdi.conf"]), 3);
    let blocked = [&["sweep", "--param", "a", "--from", "0", "--to", "1", "--out", "/nonexistent/dir/x.csv"][..], &FIG[..]].concat();
    assert_eq!(code(&blocked), 3);
}

#[test]
fn validate_reports_every_case() {
    let all = rdi(&["validate"]);
    assert_eq!(all.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&all).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), rdi_core::validation::run_validation_suite().len());
    assert!(lines.iter().all(|v| v["passed"] == true));

    let scalar = rdi(&["validate", "--filter", "scalar"]);
    let ids: Vec<String> = stdout(&scalar)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["case_id"].as_str().unwrap().to_owned())
        .collect();
    assert!(!ids.is_empty() && ids.len() < lines.len());
    assert!(ids.iter().all(|id| id.starts_with("scalar")));
}

#[test]
fn figure3_writes_csv_and_script() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_rdi"))
        .args(["figure3", "--points", "41"])
        .env("RDI_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let (header, rows) = read_csv(&dir.path().join("figure3.csv"));
    assert_eq!(header, ["a", "perp_accelerated", "par_accelerated", "perp_static", "par_static"]);
    assert_eq!(rows.len(), 41);
    assert_eq!(rows[0][0], 1e-4);
    assert_eq!(rows[40][0], 1e4);
    let script = std::fs::read_to_string(dir.path().join("figure3.gp")).unwrap();
    assert!(script.contains("'figure3.csv'"));
}

#[test]
fn convert_units() {
    let o = rdi(&["convert", "length", "1.5e-8"]);
    assert_eq!(stdout(&o), "7.60159608e-2 eV^-1\n");
    let o = rdi(&["convert", "acceleration", "2.2e-6", "--to", "si"]);
    let ms2: f64 = stdout(&o).split(' ').next().unwrap().parse().unwrap();
    assert!(rel(ms2, 2.2e-6 * 299_792_458.0 / 6.582_119_569e-16) < 1e-8);
    assert_eq!(rdi(&["convert", "energy", "-1"]).status.code(), Some(2));
}
