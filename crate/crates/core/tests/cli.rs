use std::path::PathBuf;
use std::process::{Command, Output};

fn wpsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpsep")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "circuits", name].iter().collect();
    p.display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn qcc_exit_zero_and_table() {
    let o = wpsep(&["qcc"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for line in ["Pi_L       1.0", "Pi_R       0.0", "sigma_z^L  0.0", "sigma_z^R  1.0", "PASS"] {
        assert!(s.contains(line), "missing {line:?} in\n{s}");
    }
}

#[test]
fn weakvalues_exit_codes() {
    assert_eq!(wpsep(&["weakvalues", "--alpha", "pi/4"]).status.code(), Some(0));
    assert_eq!(wpsep(&["weakvalues", "--alpha", "0"]).status.code(), Some(0));
    assert_eq!(wpsep(&["weakvalues", "--alpha", "bogus"]).status.code(), Some(2));
    assert_eq!(wpsep(&["weakvalues"]).status.code(), Some(2));
    assert_eq!(wpsep(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn weakvalues_pure_wave_branch() {
    let s = stdout(&wpsep(&["weakvalues", "--alpha", "0", "--format", "csv"]));
    let rows: Vec<&str> = s.lines().collect();
    assert_eq!(rows[0], "observable,re,im");
    let ones: Vec<&str> = rows.iter().filter(|r| r.ends_with(",1.0,0.0")).copied().collect();
    assert_eq!(ones, vec!["Pi_W^R1,1.0,0.0", "Pi_W'^L2,1.0,0.0", "sum_photon1,1.0,0.0", "sum_photon2,1.0,0.0"]);
}

#[test]
fn sweep_is_byte_deterministic() {
    let args = ["sweep", "--steps", "41", "--phi1", "0.3"];
    let a = wpsep(&args);
    let b = wpsep(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert_eq!(s.lines().count(), 42);
    for row in s.lines().skip(1) {
        let f: Vec<&str> = row.split(',').collect();
        assert_eq!((f[5], f[6]), ("1.0", "1.0"), "{row}");
    }
}

#[test]
fn sweep_writes_file_and_reports_io_errors() {
    let dir = std::env::temp_dir().join(format!("wpsep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("sweep.csv");
    let o = wpsep(&["sweep", "--steps", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("alpha,wv_W_R1,wv_P_L1,wv_Wp_L2,wv_Pp_R2,sum_photon1,sum_photon2,p_D5\n"));
    std::fs::remove_dir_all(&dir).unwrap();

    let o = wpsep(&["sweep", "--out", "/nonexistent/dir/sweep.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sweep_json_format() {
    let o = wpsep(&["sweep", "--steps", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[1]["p_D5"], 1.0);
}

#[test]
fn postselect_builtin_and_file_agree() {
    for alpha in ["pi/4", "pi/6", "0.2"] {
        let a = wpsep(&["postselect", "--alpha", alpha]);
        let b = wpsep(&["postselect", "--alpha", alpha, "--circuit", &fixture("fig1.circuit")]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "alpha={alpha}");
    }
    let s = stdout(&wpsep(&["postselect", "--alpha", "pi/6"]));
    assert!(s.contains("D5=0.9330127019\n"), "{s}");
    let d6: f64 = s.lines().find_map(|l| l.strip_prefix("D6=")).unwrap().parse().unwrap();
    assert!((d6 - 0.0669872981).abs() <= 1e-10);
}

#[test]
fn postselect_errors() {
    let dir = std::env::temp_dir().join(format!("wpsep-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let bad = dir.join("bad.circuit");
    std::fs::write(&bad, "space a labels=x,y\nlaser a\n").unwrap();
    let o = wpsep(&["postselect", "--alpha", "0", "--circuit", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":2:1:"), "{err}");

    let wrong = dir.join("wrong.circuit");
    std::fs::write(&wrong, "space a labels=x,y\ndetector D space=a label=x\n").unwrap();
    let o = wpsep(&["postselect", "--alpha", "0", "--circuit", wrong.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn parse_subcommand() {
    for f in ["fig1.circuit", "mach_zehnder.circuit", "filter_bench.circuit"] {
        let o = wpsep(&["parse", &fixture(f)]);
        assert_eq!(o.status.code(), Some(0), "{f}");
    }
    let canon = stdout(&wpsep(&["parse", "--canonical", &fixture("fig1.circuit")]));
    assert!(canon.starts_with("space path1 labels=L1,R1\n"));
    assert!(!canon.contains('#'));
}

#[test]
fn help_exits_zero() {
    assert_eq!(wpsep(&["--help"]).status.code(), Some(0));
}
