//! Single-photon quantum Cheshire cat in a Mach-Zehnder interferometer.
//!
//! The photon enters as `(i|L⟩ + |R⟩)|H⟩/√2` and is post-selected in
//! `(|L⟩|H⟩ + |R⟩|V⟩)/√2`. Path projectors report the photon in the left arm
//! while the circular-polarization observable reports its polarization in the
//! right arm.
//!
//! The circular-polarization observable is `|↑y⟩⟨↑y| − |↓y⟩⟨↓y|` with
//! `|↑y⟩ = (|H⟩ + i|V⟩)/√2`. In the `{H, V}` basis that is the Pauli-Y matrix,
//! not Pauli-Z.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::Result;
use crate::qstate::{Operator, Space, SpaceLabel, StateVector, C64, I};
use crate::weakvalue::{weak_value_table, PrePostPair, WeakValueReport};

pub const PI_L: &str = "Pi_L";
pub const PI_R: &str = "Pi_R";
pub const SIGMA_Z_L: &str = "sigma_z^L";
pub const SIGMA_Z_R: &str = "sigma_z^R";

/// The Kronecker-delta pattern the four observables must reproduce.
pub const EXPECTED: [(&str, f64); 4] = [(PI_L, 1.0), (PI_R, 0.0), (SIGMA_Z_L, 0.0), (SIGMA_Z_R, 1.0)];

pub fn path_factor() -> SpaceLabel {
    SpaceLabel::new("path", &["L", "R"]).expect("static labels")
}

pub fn pol_factor() -> SpaceLabel {
    SpaceLabel::new("pol", &["H", "V"]).expect("static labels")
}

/// Circular-polarization observable on the `pol` factor.
pub fn sigma_z() -> Operator {
    let pol = Space::single(pol_factor());
    let h = C64::from(FRAC_1_SQRT_2);
    let up = StateVector::new(pol.clone(), vec![h, I * h]).expect("dim 2");
    let down = StateVector::new(pol, vec![h, -I * h]).expect("dim 2");
    Operator::projector_onto(&up)
        .and_then(|p| p.sub(&Operator::projector_onto(&down)?))
        .expect("normalized states")
}

#[derive(Debug, Clone)]
pub struct QccScenario {
    pub space: Space,
    pub pair: PrePostPair,
    pub observables: Vec<(String, Operator)>,
}

impl QccScenario {
    /// Builds the scenario with a caller-supplied polarization observable.
    pub fn with_sigma_z(sigma: &Operator) -> Result<Self> {
        let path = path_factor();
        let pol = pol_factor();
        let space = Space::new(vec![path.clone(), pol.clone()])?;
        let h = C64::from(FRAC_1_SQRT_2);

        // (i|L⟩ + |R⟩)|H⟩ / √2
        let path_sup = StateVector::new(Space::single(path.clone()), vec![I * h, h])?;
        let pre = path_sup.tensor(&StateVector::basis(Space::single(pol.clone()), &["H"])?)?;

        // (|L⟩|H⟩ + |R⟩|V⟩) / √2
        let post = StateVector::basis(space.clone(), &["L", "H"])?
            .add(&StateVector::basis(space.clone(), &["R", "V"])?)?
            .scale(h);

        let pi_l = Operator::basis_projector(&path, "L")?;
        let pi_r = Operator::basis_projector(&path, "R")?;
        let observables = vec![
            (PI_L.to_string(), pi_l.embed(&space)?),
            (PI_R.to_string(), pi_r.embed(&space)?),
            (SIGMA_Z_L.to_string(), pi_l.kron(sigma)?.embed(&space)?),
            (SIGMA_Z_R.to_string(), pi_r.kron(sigma)?.embed(&space)?),
        ];
        Ok(QccScenario { pair: PrePostPair::new(pre, post)?, space, observables })
    }

    pub fn weak_values(&self) -> Result<Vec<WeakValueReport>> {
        weak_value_table(&self.pair, &self.observables)
    }
}

pub fn build_qcc_scenario() -> QccScenario {
    QccScenario::with_sigma_z(&sigma_z()).expect("static scenario is well formed")
}

/// `{⟨Π_L⟩, ⟨Π_R⟩, ⟨σ_z^L⟩, ⟨σ_z^R⟩}` in that order.
pub fn qcc_weak_values() -> Vec<WeakValueReport> {
    build_qcc_scenario().weak_values().expect("post-selection overlap is i/2")
}

/// Largest deviation of `reports` from [`EXPECTED`], counting imaginary parts.
/// Returns `f64::INFINITY` if an expected observable is missing.
pub fn max_deviation(reports: &[WeakValueReport]) -> f64 {
    EXPECTED
        .iter()
        .map(|(name, want)| {
            reports
                .iter()
                .find(|r| r.observable_name == *name)
                .map_or(f64::INFINITY, |r| (r.value - C64::from(*want)).norm())
        })
        .fold(0.0, f64::max)
}
