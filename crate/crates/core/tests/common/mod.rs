#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use wpsep::qstate::{Operator, Space, StateVector, C64};

pub fn fixture_path(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "circuits", name].iter().collect()
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).expect("fixture exists")
}

pub const FIXTURES: [&str; 3] = ["fig1.circuit", "mach_zehnder.circuit", "filter_bench.circuit"];

pub fn random_complex<R: Rng>(rng: &mut R) -> C64 {
    C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_state<R: Rng>(rng: &mut R, space: &Space) -> StateVector {
    loop {
        let v: Vec<C64> = (0..space.dim()).map(|_| random_complex(rng)).collect();
        let s = StateVector::new(space.clone(), v).unwrap();
        if s.norm() > 1e-3 {
            return s.normalized().unwrap();
        }
    }
}

pub fn random_operator<R: Rng>(rng: &mut R, space: &Space) -> Operator {
    let n = space.dim();
    Operator::new(space.clone(), (0..n * n).map(|_| random_complex(rng)).collect()).unwrap()
}

/// Columns of a random matrix orthonormalized by Gram-Schmidt.
pub fn random_unitary<R: Rng>(rng: &mut R, space: &Space) -> Operator {
    let n = space.dim();
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<C64> = (0..n).map(|_| random_complex(rng)).collect();
        for u in &cols {
            let p: C64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(u) {
                *x -= p * y;
            }
        }
        let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            cols.push(v.into_iter().map(|c| c / norm).collect());
        }
    }
    let mut m = vec![C64::default(); n * n];
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            m[i * n + j] = c[i];
        }
    }
    Operator::new(space.clone(), m).unwrap()
}

/// Corrupts one statement line so that it no longer parses on its own.
/// Returns the mutated text and the 1-based line that was changed.
pub fn mutate_one_line<R: Rng>(rng: &mut R, text: &str) -> (String, usize) {
    let lines: Vec<&str> = text.lines().collect();
    let statements: Vec<usize> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, _)| i)
        .collect();
    let idx = statements[rng.random_range(0..statements.len())];
    let tokens: Vec<&str> = lines[idx].split('#').next().unwrap().split_whitespace().collect();
    let keyword = tokens[0];
    let first_opt = tokens.iter().position(|t| t.contains('=')).expect("statements carry options");

    let mut ops: Vec<u8> = vec![0, 1, 2, 3, 4];
    if !matches!(keyword, "space" | "detector") {
        ops.push(5);
    }
    if keyword == "wavefilter" {
        ops.push(6);
    }
    let op = ops[rng.random_range(0..ops.len())];
    let mut t: Vec<String> = tokens.iter().map(|s| s.to_string()).collect();
    match op {
        0 => t[0] = "frobnicate".into(),
        1 => t.push("bogus=1".into()),
        2 => t.truncate(1),
        3 => t.push(t[first_opt].clone()),
        4 => {
            let key = t[first_opt].split('=').next().unwrap().to_string();
            t[first_opt] = format!("{key}=");
        }
        5 => t[1] = "nosuch".into(),
        _ => {
            let phi = t.iter().position(|s| s.starts_with("phi=")).unwrap();
            t[phi] = "phi=not_a_number".into();
        }
    }
    let mut out: Vec<String> = lines.iter().map(|s| s.to_string()).collect();
    out[idx] = t.join(" ");
    (out.join("\n") + "\n", idx + 1)
}
