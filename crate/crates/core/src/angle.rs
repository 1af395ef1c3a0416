//! Angle literals: decimal floats or rational multiples of π.
//!
//! Accepted forms: `0.5`, `-1e-3`, `pi`, `-pi`, `pi/4`, `3pi/4`, `3*pi/4`, `2.5*pi`.

use std::f64::consts::PI;

pub fn parse_angle(text: &str) -> Result<f64, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty angle".into());
    }
    let Some(pi_at) = t.find("pi") else {
        return parse_float(t);
    };
    let (head, tail) = (&t[..pi_at], &t[pi_at + 2..]);
    let coef = match head.strip_suffix('*').unwrap_or(head) {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => parse_float(c)?,
    };
    let denom = match tail {
        "" => 1.0,
        d => {
            let d = d.strip_prefix('/').ok_or_else(|| format!("malformed angle '{t}'"))?;
            let v = parse_float(d)?;
            if v == 0.0 {
                return Err(format!("division by zero in angle '{t}'"));
            }
            v
        }
    };
    Ok(coef * PI / denom)
}

fn parse_float(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!("'{s}' is not a number")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6};

    #[test]
    fn literals() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("pi/2").unwrap(), FRAC_PI_2);
        assert_eq!(parse_angle("pi/4").unwrap(), FRAC_PI_4);
        assert!((parse_angle("pi/6").unwrap() - FRAC_PI_6).abs() < 1e-15);
        assert_eq!(parse_angle("-pi/4").unwrap(), -FRAC_PI_4);
        assert!((parse_angle("3*pi/4").unwrap() - 3.0 * FRAC_PI_4).abs() < 1e-15);
        assert!((parse_angle("3pi/4").unwrap() - 3.0 * FRAC_PI_4).abs() < 1e-15);
        assert_eq!(parse_angle("1.25").unwrap(), 1.25);
        assert_eq!(parse_angle(" 0 ").unwrap(), 0.0);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "pi/", "pi/0", "pi4", "x*pi", "nan", "inf", "1..2"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }
}
