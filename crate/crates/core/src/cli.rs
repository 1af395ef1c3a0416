//! Subcommands of the `wpsep` binary.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary is a
//! thin wrapper and tests can call commands in-process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::angle::parse_angle;
use crate::cheshire_single::{build_qcc_scenario, max_deviation, QccScenario};
use crate::circuit_parser::{parse_circuit_named, render_circuit};
use crate::optical_network::{run_postselection_pipeline, DetectionResult};
use crate::qstate::C64;
use crate::weakvalue::WeakValueReport;
use crate::wp_states::{
    complementarity_sums, make_preselected, observable_name, separation_weak_values, Arm,
    Attribute, Representation, WpParams,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Tolerance for the pass/fail checks the commands report.
pub const CHECK_TOL: f64 = 1e-10;

/// Magnitudes below this print as zero.
const DISPLAY_FLOOR: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }
}

#[derive(Debug, Parser)]
#[command(name = "wpsep", version, about = "Weak values of wave and particle attributes of entangled photons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Single-photon Cheshire cat weak values, checked against the expected pattern.
    Qcc(QccArgs),
    /// The eight attribute weak values and the two complementarity sums.
    Weakvalues(WeakvaluesArgs),
    /// Weak values and D5 probability over a grid of mixing angles.
    Sweep(SweepArgs),
    /// Simulate the post-selection network and print detector probabilities.
    Postselect(PostselectArgs),
    /// Syntax-check a .circuit file.
    Parse(ParseArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReprArg {
    Attribute,
    Mode,
}

impl From<ReprArg> for Representation {
    fn from(r: ReprArg) -> Self {
        match r {
            ReprArg::Attribute => Representation::Attribute,
            ReprArg::Mode => Representation::Mode,
        }
    }
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Phases {
    #[arg(long, default_value = "0", value_parser = parse_angle, allow_hyphen_values = true)]
    pub phi1: f64,
    #[arg(long, default_value = "0", value_parser = parse_angle, allow_hyphen_values = true)]
    pub phi1p: f64,
    /// Read angle arguments as degrees.
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Args)]
pub struct QccArgs {
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct WeakvaluesArgs {
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub alpha: f64,
    #[command(flatten)]
    pub phases: Phases,
    #[arg(long, value_enum, default_value = "attribute")]
    pub repr: ReprArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value = "0", value_parser = parse_angle, allow_hyphen_values = true)]
    pub alpha_start: f64,
    #[arg(long, default_value = "pi/2", value_parser = parse_angle, allow_hyphen_values = true)]
    pub alpha_end: f64,
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
    #[command(flatten)]
    pub phases: Phases,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct PostselectArgs {
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub alpha: f64,
    #[command(flatten)]
    pub phases: Phases,
    /// Simulate this circuit file instead of the built-in network.
    #[arg(long)]
    pub circuit: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ParseArgs {
    pub file: PathBuf,
    /// Print the canonical rendering of the file.
    #[arg(long)]
    pub canonical: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::error(code, text)
            }
        }
    }
}

pub fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Qcc(a) => deliver(cmd_qcc(&build_qcc_scenario(), a.output.format), a.output.out.as_deref()),
        Command::Weakvalues(a) => {
            let p = a.phases.params(a.alpha);
            deliver(cmd_weakvalues(&p, a.repr.into(), a.output.format), a.output.out.as_deref())
        }
        Command::Sweep(a) => {
            let conv = |x: f64| if a.phases.degrees { x.to_radians() } else { x };
            let spec = SweepSpec {
                alpha_start: conv(a.alpha_start),
                alpha_end: conv(a.alpha_end),
                steps: a.steps,
                phi1: conv(a.phases.phi1),
                phi1p: conv(a.phases.phi1p),
                format: a.output.format.unwrap_or(Format::Csv),
            };
            deliver(cmd_sweep(&spec), a.output.out.as_deref())
        }
        Command::Postselect(a) => {
            let p = a.phases.params(a.alpha);
            deliver(cmd_postselect(&p, a.circuit.as_deref(), a.output.format), a.output.out.as_deref())
        }
        Command::Parse(a) => cmd_parse(&a.file, a.canonical),
    }
}

impl Phases {
    fn params(&self, alpha: f64) -> WpParams {
        let conv = |x: f64| if self.degrees { x.to_radians() } else { x };
        WpParams::with_phases(conv(alpha), conv(self.phi1), conv(self.phi1p))
    }
}

/// Sends stdout to `out` when given. A write failure is exit code 1.
fn deliver(outcome: Outcome, out: Option<&Path>) -> Outcome {
    let Some(path) = out else { return outcome };
    if outcome.stdout.is_empty() {
        return outcome;
    }
    match std::fs::write(path, &outcome.stdout) {
        Ok(()) => Outcome { stdout: String::new(), ..outcome },
        Err(e) => Outcome::error(EXIT_FAIL, format!("cannot write {}: {e}", path.display())),
    }
}

/// Rounds to 10 significant digits; noise below the display floor becomes 0.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < DISPLAY_FLOOR {
        return 0.0;
    }
    format!("{x:.9e}").parse().expect("formatted float parses")
}

/// `x` at 10 significant digits, always with a decimal point: `1.0`, `0.9330127019`.
pub fn fmt_num(x: f64) -> String {
    let s = format!("{}", round_sig(x));
    if s.contains('.') || s.contains("inf") || s.contains("NaN") {
        s
    } else {
        s + ".0"
    }
}

fn fmt_complex(c: C64) -> String {
    let im = round_sig(c.im);
    if im == 0.0 {
        fmt_num(c.re)
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", fmt_num(c.re), fmt_num(im.abs()))
    }
}

fn complex_json(c: C64) -> Value {
    json!({ "re": round_sig(c.re), "im": round_sig(c.im) })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii content")
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value") + "\n"
}

fn report_rows(reports: &[WeakValueReport]) -> Vec<Vec<String>> {
    reports
        .iter()
        .map(|r| vec![r.observable_name.clone(), fmt_num(r.value.re), fmt_num(r.value.im)])
        .collect()
}

fn report_text(reports: &[WeakValueReport]) -> String {
    let width = reports.iter().map(|r| r.observable_name.chars().count()).max().unwrap_or(0);
    reports
        .iter()
        .map(|r| {
            let pad = width - r.observable_name.chars().count();
            format!("{}{}  {}\n", r.observable_name, " ".repeat(pad), fmt_complex(r.value))
        })
        .collect()
}

/// Weak values of the Cheshire cat scenario and PASS when they match the
/// expected pattern to [`CHECK_TOL`].
pub fn cmd_qcc(scenario: &QccScenario, format: Option<Format>) -> Outcome {
    let reports = match scenario.weak_values() {
        Ok(r) => r,
        Err(e) => return Outcome::error(EXIT_FAIL, e.to_string()),
    };
    let dev = max_deviation(&reports);
    let pass = dev <= CHECK_TOL;
    let text = match format.unwrap_or(Format::Text) {
        Format::Text => format!("{}{}\n", report_text(&reports), verdict(pass)),
        Format::Csv => csv_text(&["observable", "re", "im"], &report_rows(&reports)),
        Format::Json => json_text(&json!({
            "weak_values": reports.iter().map(|r| json!({
                "observable": r.observable_name,
                "value": complex_json(r.value),
            })).collect::<Vec<_>>(),
            "overlap": complex_json(scenario.pair.overlap()),
            "max_deviation": round_sig(dev),
            "pass": pass,
        })),
    };
    Outcome::with_code(if pass { EXIT_OK } else { EXIT_FAIL }, text)
}

/// The eight attribute weak values. PASS when both complementarity sums are 1.
pub fn cmd_weakvalues(params: &WpParams, repr: Representation, format: Option<Format>) -> Outcome {
    let reports = match separation_weak_values(params, repr) {
        Ok(r) => r,
        Err(e) => return Outcome::error(EXIT_FAIL, e.to_string()),
    };
    let (s1, s2) = complementarity_sums(&reports).expect("all eight observables present");
    let pass = (s1 - 1.0).norm() <= CHECK_TOL && (s2 - 1.0).norm() <= CHECK_TOL;
    let text = match format.unwrap_or(Format::Text) {
        Format::Text => format!(
            "alpha = {}\n{}sum_photon1  {}\nsum_photon2  {}\n{}\n",
            fmt_num(params.alpha),
            report_text(&reports),
            fmt_complex(s1),
            fmt_complex(s2),
            verdict(pass)
        ),
        Format::Csv => {
            let mut rows = report_rows(&reports);
            rows.push(vec!["sum_photon1".into(), fmt_num(s1.re), fmt_num(s1.im)]);
            rows.push(vec!["sum_photon2".into(), fmt_num(s2.re), fmt_num(s2.im)]);
            csv_text(&["observable", "re", "im"], &rows)
        }
        Format::Json => json_text(&json!({
            "alpha": round_sig(params.alpha),
            "phi1": round_sig(params.phi1),
            "phi1p": round_sig(params.phi1p),
            "weak_values": reports.iter().map(|r| json!({
                "observable": r.observable_name,
                "value": complex_json(r.value),
            })).collect::<Vec<_>>(),
            "sum_photon1": complex_json(s1),
            "sum_photon2": complex_json(s2),
            "pass": pass,
        })),
    };
    Outcome::with_code(if pass { EXIT_OK } else { EXIT_FAIL }, text)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub alpha_start: f64,
    pub alpha_end: f64,
    pub steps: usize,
    pub phi1: f64,
    pub phi1p: f64,
    pub format: Format,
}

impl SweepSpec {
    pub fn grid(&self) -> Vec<f64> {
        let span = self.alpha_end - self.alpha_start;
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| if i + 1 == self.steps { self.alpha_end } else { self.alpha_start + span * i as f64 / last })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub wv_w_r1: f64,
    pub wv_p_l1: f64,
    pub wv_wp_l2: f64,
    pub wv_pp_r2: f64,
    pub sum_photon1: f64,
    pub sum_photon2: f64,
    pub p_d5: f64,
}

pub const SWEEP_HEADER: [&str; 8] =
    ["alpha", "wv_W_R1", "wv_P_L1", "wv_Wp_L2", "wv_Pp_R2", "sum_photon1", "sum_photon2", "p_D5"];

pub fn sweep_row(params: &WpParams) -> crate::Result<SweepRow> {
    let reports = separation_weak_values(params, Representation::Attribute)?;
    let get = |attr, arm| {
        let name = observable_name(attr, arm);
        reports.iter().find(|r| r.observable_name == name).map_or(f64::NAN, |r| r.value.re)
    };
    let (s1, s2) = complementarity_sums(&reports).expect("all eight observables present");
    let input = make_preselected(params, Representation::Mode);
    let det = run_postselection_pipeline(&input, params)?;
    Ok(SweepRow {
        alpha: params.alpha,
        wv_w_r1: get(Attribute::W, Arm::R1),
        wv_p_l1: get(Attribute::P, Arm::L1),
        wv_wp_l2: get(Attribute::Wp, Arm::L2),
        wv_pp_r2: get(Attribute::Pp, Arm::R2),
        sum_photon1: s1.re,
        sum_photon2: s2.re,
        p_d5: det.prob("D5"),
    })
}

/// Computes the grid in parallel and emits rows in grid order.
pub fn cmd_sweep(spec: &SweepSpec) -> Outcome {
    if spec.steps < 2 {
        return Outcome::error(EXIT_USAGE, "--steps must be at least 2");
    }
    if spec.alpha_start.partial_cmp(&spec.alpha_end) != Some(std::cmp::Ordering::Less) {
        return Outcome::error(EXIT_USAGE, "--alpha-start must be below --alpha-end");
    }
    let rows: crate::Result<Vec<SweepRow>> = spec
        .grid()
        .into_par_iter()
        .map(|a| sweep_row(&WpParams::with_phases(a, spec.phi1, spec.phi1p)))
        .collect();
    let rows = match rows {
        Ok(r) => r,
        Err(e) => return Outcome::error(EXIT_FAIL, e.to_string()),
    };
    let pass = rows
        .iter()
        .all(|r| (r.sum_photon1 - 1.0).abs() <= CHECK_TOL && (r.sum_photon2 - 1.0).abs() <= CHECK_TOL);
    let fields = |r: &SweepRow| {
        [r.alpha, r.wv_w_r1, r.wv_p_l1, r.wv_wp_l2, r.wv_pp_r2, r.sum_photon1, r.sum_photon2, r.p_d5]
    };
    let text = match spec.format {
        Format::Json => json_text(&Value::Array(
            rows.iter()
                .map(|r| {
                    let obj = SWEEP_HEADER
                        .iter()
                        .zip(fields(r))
                        .map(|(k, v)| (k.to_string(), json!(round_sig(v))))
                        .collect::<serde_json::Map<_, _>>();
                    Value::Object(obj)
                })
                .collect(),
        )),
        Format::Csv | Format::Text => {
            let table: Vec<Vec<String>> =
                rows.iter().map(|r| fields(r).iter().map(|v| fmt_num(*v)).collect()).collect();
            csv_text(&SWEEP_HEADER, &table)
        }
    };
    Outcome::with_code(if pass { EXIT_OK } else { EXIT_FAIL }, text)
}

/// Detector probabilities and the per-element norm trace.
pub fn cmd_postselect(params: &WpParams, circuit: Option<&Path>, format: Option<Format>) -> Outcome {
    let input = make_preselected(params, Representation::Mode);
    let result = match circuit {
        None => run_postselection_pipeline(&input, params),
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return Outcome::error(EXIT_FAIL, format!("cannot read {}: {e}", path.display())),
            };
            let doc = match parse_circuit_named(&path.display().to_string(), &text) {
                Ok(d) => d,
                Err(e) => return Outcome::error(EXIT_USAGE, format!("{}:{e}", path.display())),
            };
            match doc.circuit() {
                Ok(c) => c.simulate(&input),
                Err(e) => return Outcome::error(EXIT_USAGE, format!("{}: {e}", path.display())),
            }
        }
    };
    match result {
        Ok(det) => render_detection(params, &det, format.unwrap_or(Format::Text)),
        Err(e) => Outcome::error(EXIT_FAIL, e.to_string()),
    }
}

fn render_detection(params: &WpParams, det: &DetectionResult, format: Format) -> Outcome {
    let pass = (det.total() - 1.0).abs() <= CHECK_TOL;
    let text = match format {
        Format::Text => {
            let mut s = format!("alpha = {}\n", fmt_num(params.alpha));
            for (name, p) in &det.detector_probs {
                s.push_str(&format!("{name}={}\n", fmt_num(*p)));
            }
            s.push_str("trace:\n");
            for t in &det.trace {
                s.push_str(&format!("  {} norm_after={}\n", t.element, fmt_num(t.norm_after)));
            }
            s.push_str(verdict(pass));
            s.push('\n');
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                det.detector_probs.iter().map(|(n, p)| vec![n.clone(), fmt_num(*p)]).collect();
            csv_text(&["detector", "probability"], &rows)
        }
        Format::Json => json_text(&json!({
            "alpha": round_sig(params.alpha),
            "detectors": det.detector_probs.iter()
                .map(|(n, p)| (n.clone(), json!(round_sig(*p))))
                .collect::<serde_json::Map<_, _>>(),
            "trace": det.trace.iter()
                .map(|t| json!({ "element": t.element, "norm_after": round_sig(t.norm_after) }))
                .collect::<Vec<_>>(),
            "pass": pass,
        })),
    };
    Outcome::with_code(if pass { EXIT_OK } else { EXIT_FAIL }, text)
}

pub fn cmd_parse(path: &Path, canonical: bool) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::error(EXIT_FAIL, format!("cannot read {}: {e}", path.display())),
    };
    let doc = match parse_circuit_named(&path.display().to_string(), &text) {
        Ok(d) => d,
        Err(e) => return Outcome::error(EXIT_USAGE, format!("{}:{e}", path.display())),
    };
    if let Err(e) = doc.circuit() {
        return Outcome::error(EXIT_USAGE, format!("{}: {e}", path.display()));
    }
    if canonical {
        Outcome::ok(render_circuit(&doc))
    } else {
        Outcome::ok(format!(
            "{}: ok, {} spaces, {} elements\n",
            path.display(),
            doc.declarations.len(),
            doc.element_lines.len()
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheshire_single::sigma_z;
    use crate::qstate::ONE;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("wpsep").chain(args.iter().copied()))
    }

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(1.0), "1.0");
        assert_eq!(fmt_num(0.0), "0.0");
        assert_eq!(fmt_num(-0.0), "0.0");
        assert_eq!(fmt_num(3e-17), "0.0");
        assert_eq!(fmt_num(0.9999999999999998), "1.0");
        assert_eq!(fmt_num(0.9330127018922193), "0.9330127019");
        assert_eq!(fmt_num(0.5), "0.5");
    }

    #[test]
    fn qcc_passes() {
        let o = run_args(&["qcc"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("Pi_L       1.0"), "{}", o.stdout);
        assert!(o.stdout.contains("sigma_z^R  1.0"));
        assert!(o.stdout.trim_end().ends_with("PASS"));
    }

    #[test]
    fn qcc_json() {
        let o = run_args(&["qcc", "--format", "json"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["weak_values"][0]["observable"], "Pi_L");
        assert_eq!(v["weak_values"][0]["value"]["re"], 1.0);
        assert_eq!(v["weak_values"][3]["value"]["re"], 1.0);
    }

    #[test]
    fn tampered_qcc_fails() {
        let tampered = QccScenario::with_sigma_z(&sigma_z().scale(-ONE)).unwrap();
        let o = cmd_qcc(&tampered, None);
        assert_eq!(o.code, EXIT_FAIL);
        assert!(o.stdout.contains("sigma_z^R  -1.0"));
        assert!(o.stdout.trim_end().ends_with("FAIL"));
    }

    #[test]
    fn weakvalues_at_quarter_pi() {
        let o = run_args(&["weakvalues", "--alpha", "pi/4", "--format", "json"]);
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        let vals: Vec<f64> = v["weak_values"]
            .as_array()
            .unwrap()
            .iter()
            .map(|w| w["value"]["re"].as_f64().unwrap())
            .collect();
        assert_eq!(vals.iter().filter(|x| **x == 0.5).count(), 4);
        assert_eq!(vals.iter().filter(|x| **x == 0.0).count(), 4);
        assert_eq!(v["sum_photon1"]["re"], 1.0);
    }

    #[test]
    fn weakvalues_third_pi_text() {
        let o = run_args(&["weakvalues", "--alpha", "1.0471975512"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("Pi_W^R1   0.3660254038"), "{}", o.stdout);
        let deg = run_args(&["weakvalues", "--alpha", "60", "--degrees"]);
        assert!(deg.stdout.contains("0.3660254038"));
    }

    #[test]
    fn bad_alpha_is_usage_error() {
        assert_eq!(run_args(&["weakvalues", "--alpha", "quarter"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["weakvalues"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["nonsense"]).code, EXIT_USAGE);
    }

    #[test]
    fn sweep_endpoints() {
        let spec = SweepSpec {
            alpha_start: 0.0,
            alpha_end: FRAC_PI_2,
            steps: 2,
            phi1: 0.0,
            phi1p: 0.0,
            format: Format::Csv,
        };
        let o = cmd_sweep(&spec);
        assert_eq!(o.code, 0);
        let lines: Vec<&str> = o.stdout.lines().collect();
        assert_eq!(lines[0], SWEEP_HEADER.join(","));
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[1], "0.0,1.0,0.0,1.0,0.0,1.0,1.0,0.5");
        assert!(lines[2].starts_with("1.570796327,0.0,1.0,0.0,1.0,1.0,1.0,0.5"), "{}", lines[2]);
    }

    #[test]
    fn sweep_midpoint_certainty() {
        let spec = SweepSpec {
            alpha_start: 0.0,
            alpha_end: FRAC_PI_2,
            steps: 3,
            phi1: 0.0,
            phi1p: 0.0,
            format: Format::Csv,
        };
        let o = cmd_sweep(&spec);
        let mid = o.stdout.lines().nth(2).unwrap();
        assert!(mid.ends_with(",1.0"), "{mid}");
    }

    #[test]
    fn sweep_rejects_bad_spec() {
        assert_eq!(run_args(&["sweep", "--steps", "1"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["sweep", "--alpha-start", "1", "--alpha-end", "0"]).code, EXIT_USAGE);
    }

    #[test]
    fn postselect_sixth_pi() {
        let o = cmd_postselect(&WpParams::new(FRAC_PI_6), None, None);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("D5=0.9330127019"));
        assert!(o.stdout.contains("D6=0.06698729811"));
    }

    #[test]
    fn postselect_quarter_pi() {
        let o = run_args(&["postselect", "--alpha", "pi/4"]);
        assert_eq!(o.code, 0);
        for d in ["D1", "D2", "D3", "D4", "D6"] {
            assert!(o.stdout.contains(&format!("{d}=0.0\n")), "{d}: {}", o.stdout);
        }
        assert!(o.stdout.contains("D5=1.0\n"));
    }

    #[test]
    fn missing_circuit_file_is_io_failure() {
        let o = run_args(&["postselect", "--alpha", "0", "--circuit", "/nonexistent/x.circuit"]);
        assert_eq!(o.code, EXIT_FAIL);
    }

    #[test]
    fn unwritable_out_is_io_failure() {
        let o = run_args(&["qcc", "--out", "/nonexistent/dir/out.txt"]);
        assert_eq!(o.code, EXIT_FAIL);
    }
}
