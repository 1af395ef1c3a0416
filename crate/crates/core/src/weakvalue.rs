//! Weak values of observables for pre- and post-selected pairs.
//!
//! For a system prepared in `pre` and found in `post`, the weak value of `C` is
//! `⟨post|C|pre⟩ / ⟨post|pre⟩`. It is undefined when the two states are
//! orthogonal; below [`OVERLAP_EPS`] the evaluation is refused.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qstate::{Operator, StateVector, C64};

/// Post-selection amplitudes with modulus at or below this are treated as zero.
pub const OVERLAP_EPS: f64 = 1e-10;

/// Pre-selected and post-selected states over one space.
#[derive(Debug, Clone, PartialEq)]
pub struct PrePostPair {
    pre: StateVector,
    post: StateVector,
}

impl PrePostPair {
    pub fn new(pre: StateVector, post: StateVector) -> Result<Self> {
        if pre.space() != post.space() {
            return Err(Error::Shape(
                "pre- and post-selected states live on different spaces".into(),
            ));
        }
        pre.require_normalized()?;
        post.require_normalized()?;
        Ok(PrePostPair { pre, post })
    }

    pub fn pre(&self) -> &StateVector {
        &self.pre
    }

    pub fn post(&self) -> &StateVector {
        &self.post
    }

    /// `⟨post|pre⟩`.
    pub fn overlap(&self) -> C64 {
        self.post.inner(&self.pre).expect("spaces checked at construction")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeakValueReport {
    pub observable_name: String,
    #[serde(serialize_with = "ser_complex")]
    pub value: C64,
    #[serde(serialize_with = "ser_complex")]
    pub overlap: C64,
    pub success_probability: f64,
}

fn ser_complex<S: serde::Serializer>(c: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [c.re, c.im].serialize(s)
}

/// Weak value of `obs`. The report's `observable_name` is left empty; use
/// [`weak_value_table`] to attach names.
pub fn weak_value(pair: &PrePostPair, obs: &Operator) -> Result<WeakValueReport> {
    let overlap = pair.overlap();
    if overlap.norm() <= OVERLAP_EPS {
        return Err(Error::OrthogonalSelection { overlap_abs: overlap.norm() });
    }
    let numerator = pair.post.inner(&obs.apply(&pair.pre)?)?;
    Ok(WeakValueReport {
        observable_name: String::new(),
        value: numerator / overlap,
        overlap,
        success_probability: overlap.norm_sqr(),
    })
}

/// Evaluates every named observable in order. Errors carry the observable's name.
pub fn weak_value_table<S: AsRef<str>>(
    pair: &PrePostPair,
    named_obs: &[(S, Operator)],
) -> Result<Vec<WeakValueReport>> {
    named_obs
        .iter()
        .map(|(name, obs)| {
            let name = name.as_ref();
            weak_value(pair, obs)
                .map(|r| WeakValueReport { observable_name: name.to_string(), ..r })
                .map_err(|e| Error::Observable { name: name.to_string(), source: Box::new(e) })
        })
        .collect()
}
