//! Two-photon wave/particle states and the attribute weak values.
//!
//! A polarization-entangled pair `cos α|VV⟩ + sin α|HH⟩` is sent through two
//! wave-particle toolboxes, producing `cos α|W W'⟩ + sin α|P P'⟩`. Wave
//! filters route the wave component of photon 1 into arm `R1` and of photon 2
//! into `L2`; the particle components go to `L1` and `R2`. The resulting
//! pre-selected state is
//!
//! ```text
//! |ψ_i⟩ = cos α |R1 L2⟩|W W'⟩ + sin α |L1 R2⟩|P P'⟩
//! ```
//!
//! and the post-selected state is the same family at `α = π/4`.
//!
//! Two concrete representations are provided:
//!
//! * [`Representation::Attribute`]: `path1 ⊗ path2 ⊗ attr1 ⊗ attr2` (dim 16),
//!   with `attr1 = {W, P}` and `attr2 = {W', P'}` as abstract basis labels.
//! * [`Representation::Mode`]: `path1 ⊗ path2 ⊗ modes1 ⊗ modes2` (dim 64),
//!   with the attribute kets expanded over the four toolbox output modes.
//!
//! Weak values are identical in both; the mode representation is the
//! cross-check.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qstate::{Operator, Space, SpaceLabel, StateVector, C64, I, ZERO};
use crate::weakvalue::{weak_value_table, PrePostPair, WeakValueReport};

/// Mixing angle and toolbox phases, all in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WpParams {
    pub alpha: f64,
    pub phi1: f64,
    pub phi1p: f64,
}

impl WpParams {
    pub fn new(alpha: f64) -> Self {
        WpParams { alpha, phi1: 0.0, phi1p: 0.0 }
    }

    pub fn with_phases(alpha: f64, phi1: f64, phi1p: f64) -> Self {
        WpParams { alpha, phi1, phi1p }
    }

    pub fn phase(&self, photon: Photon) -> f64 {
        match photon {
            Photon::First => self.phi1,
            Photon::Second => self.phi1p,
        }
    }
}

impl Default for WpParams {
    fn default() -> Self {
        WpParams::new(FRAC_PI_4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Photon {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Representation {
    #[default]
    Attribute,
    Mode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arm {
    L1,
    R1,
    L2,
    R2,
}

impl Arm {
    pub const ALL: [Arm; 4] = [Arm::L1, Arm::R1, Arm::L2, Arm::R2];

    pub fn photon(self) -> Photon {
        match self {
            Arm::L1 | Arm::R1 => Photon::First,
            Arm::L2 | Arm::R2 => Photon::Second,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Arm::L1 => "L1",
            Arm::R1 => "R1",
            Arm::L2 => "L2",
            Arm::R2 => "R2",
        }
    }

    pub fn is_left(self) -> bool {
        matches!(self, Arm::L1 | Arm::L2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attribute {
    W,
    P,
    Wp,
    Pp,
}

impl Attribute {
    pub fn photon(self) -> Photon {
        match self {
            Attribute::W | Attribute::P => Photon::First,
            Attribute::Wp | Attribute::Pp => Photon::Second,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Attribute::W => "W",
            Attribute::P => "P",
            Attribute::Wp => "W'",
            Attribute::Pp => "P'",
        }
    }

    pub fn is_wave(self) -> bool {
        matches!(self, Attribute::W | Attribute::Wp)
    }
}

impl fmt::Display for Arm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl fmt::Display for Attribute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The eight arm/attribute observables, in report order.
pub const OBSERVABLES: [(Attribute, Arm); 8] = [
    (Attribute::W, Arm::L1),
    (Attribute::W, Arm::R1),
    (Attribute::P, Arm::L1),
    (Attribute::P, Arm::R1),
    (Attribute::Wp, Arm::L2),
    (Attribute::Wp, Arm::R2),
    (Attribute::Pp, Arm::L2),
    (Attribute::Pp, Arm::R2),
];

pub fn observable_name(attr: Attribute, arm: Arm) -> String {
    format!("Pi_{attr}^{arm}")
}

fn factor(name: &str, labels: &[&str]) -> SpaceLabel {
    SpaceLabel::new(name, labels).expect("static labels")
}

pub fn path1() -> SpaceLabel {
    factor("path1", &["L1", "R1"])
}

pub fn path2() -> SpaceLabel {
    factor("path2", &["L2", "R2"])
}

pub fn attr1() -> SpaceLabel {
    factor("attr1", &["W", "P"])
}

pub fn attr2() -> SpaceLabel {
    factor("attr2", &["W'", "P'"])
}

pub fn modes1() -> SpaceLabel {
    factor("modes1", &["1", "2", "3", "4"])
}

pub fn modes2() -> SpaceLabel {
    factor("modes2", &["1'", "2'", "3'", "4'"])
}

pub fn pol1() -> SpaceLabel {
    factor("pol1", &["H", "V"])
}

pub fn pol2() -> SpaceLabel {
    factor("pol2", &["H", "V"])
}

pub fn path_factor(photon: Photon) -> SpaceLabel {
    match photon {
        Photon::First => path1(),
        Photon::Second => path2(),
    }
}

pub fn mode_factor(photon: Photon) -> SpaceLabel {
    match photon {
        Photon::First => modes1(),
        Photon::Second => modes2(),
    }
}

pub fn attr_factor(photon: Photon) -> SpaceLabel {
    match photon {
        Photon::First => attr1(),
        Photon::Second => attr2(),
    }
}

/// Internal factor carrying a photon's attribute in the given representation.
pub fn carrier_factor(photon: Photon, repr: Representation) -> SpaceLabel {
    match repr {
        Representation::Attribute => attr_factor(photon),
        Representation::Mode => mode_factor(photon),
    }
}

/// `path1 ⊗ path2 ⊗ carrier1 ⊗ carrier2`.
pub fn composite_space(repr: Representation) -> Space {
    Space::new(vec![
        path1(),
        path2(),
        carrier_factor(Photon::First, repr),
        carrier_factor(Photon::Second, repr),
    ])
    .expect("distinct factor names")
}

/// `cos α|V⟩|V⟩ + sin α|H⟩|H⟩` over `pol1 ⊗ pol2`.
pub fn make_input_state(alpha: f64) -> StateVector {
    let space = Space::new(vec![pol1(), pol2()]).expect("distinct factor names");
    let vv = StateVector::basis(space.clone(), &["V", "V"]).expect("known labels");
    let hh = StateVector::basis(space, &["H", "H"]).expect("known labels");
    vv.scale(C64::from(alpha.cos()))
        .add(&hh.scale(C64::from(alpha.sin())))
        .expect("same space")
}

/// `e^{iφ/2}(cos(φ/2)|1⟩ − i sin(φ/2)|3⟩)` over the photon's mode factor.
pub fn make_wave(photon: Photon, phi: f64) -> StateVector {
    wave_on(mode_factor(photon), phi).expect("four modes")
}

/// `(|2⟩ + e^{iφ}|4⟩)/√2` over the photon's mode factor.
pub fn make_particle(photon: Photon, phi: f64) -> StateVector {
    particle_on(mode_factor(photon), phi).expect("four modes")
}

/// Wave state over any four-label factor; labels are taken positionally as modes 1..4.
pub fn wave_on(modes: SpaceLabel, phi: f64) -> Result<StateVector> {
    let global = C64::from_polar(1.0, phi / 2.0);
    let c = global * (phi / 2.0).cos();
    let s = -I * global * (phi / 2.0).sin();
    StateVector::new(Space::single(modes), vec![c, ZERO, s, ZERO])
}

/// Particle state over any four-label factor.
pub fn particle_on(modes: SpaceLabel, phi: f64) -> Result<StateVector> {
    let h = C64::from(FRAC_1_SQRT_2);
    StateVector::new(
        Space::single(modes),
        vec![ZERO, h, ZERO, C64::from_polar(FRAC_1_SQRT_2, phi)],
    )
}

/// Ket for a photon's wave or particle attribute in the requested representation.
pub fn attribute_ket(photon: Photon, wave: bool, phi: f64, repr: Representation) -> StateVector {
    match repr {
        Representation::Attribute => {
            let f = attr_factor(photon);
            let label = f.labels()[if wave { 0 } else { 1 }].clone();
            StateVector::basis(Space::single(f), &[label]).expect("known label")
        }
        Representation::Mode if wave => make_wave(photon, phi),
        Representation::Mode => make_particle(photon, phi),
    }
}

/// Toolbox output `cos α|W⟩|W'⟩ + sin α|P⟩|P'⟩` over `modes1 ⊗ modes2`.
pub fn toolbox_output(params: &WpParams) -> StateVector {
    let ww = make_wave(Photon::First, params.phi1)
        .tensor(&make_wave(Photon::Second, params.phi1p))
        .expect("distinct factors");
    let pp = make_particle(Photon::First, params.phi1)
        .tensor(&make_particle(Photon::Second, params.phi1p))
        .expect("distinct factors");
    ww.scale(C64::from(params.alpha.cos()))
        .add(&pp.scale(C64::from(params.alpha.sin())))
        .expect("same space")
}

/// Applies the wave filters to a toolbox output over `modes1 ⊗ modes2`.
///
/// For each photon the `|W⟩⟨W|` component is transmitted into the wave arm
/// (`R1` for photon 1, `L2` for photon 2) and the complement is reflected into
/// the other arm. Lossless, so the result has the input's norm. The result is
/// over `path1 ⊗ path2 ⊗ modes1 ⊗ modes2`.
pub fn route_through_filters(out: &StateVector, params: &WpParams) -> Result<StateVector> {
    let x1 = Operator::projector_onto(&make_wave(Photon::First, params.phi1))?;
    let x2 = Operator::projector_onto(&make_wave(Photon::Second, params.phi1p))?;
    let branches1 = [("R1", x1.clone()), ("L1", x1.complement())];
    let branches2 = [("L2", x2.clone()), ("R2", x2.complement())];
    let paths = Space::new(vec![path1(), path2()])?;
    let mut total = StateVector::zeros(composite_space(Representation::Mode));
    for (p1, a1) in &branches1 {
        for (p2, a2) in &branches2 {
            let component = a1.kron(a2)?.embed(out.space())?.apply(out)?;
            let routed = StateVector::basis(paths.clone(), &[*p1, *p2])?.tensor(&component)?;
            total = total.add(&routed)?;
        }
    }
    Ok(total)
}

/// `cos α |R1 L2⟩|W W'⟩ + sin α |L1 R2⟩|P P'⟩`.
pub fn make_preselected(params: &WpParams, repr: Representation) -> StateVector {
    let wave_branch = StateVector::basis(Space::new(vec![path1(), path2()]).unwrap(), &["R1", "L2"])
        .and_then(|p| p.tensor(&attribute_ket(Photon::First, true, params.phi1, repr)))
        .and_then(|p| p.tensor(&attribute_ket(Photon::Second, true, params.phi1p, repr)))
        .expect("static construction");
    let particle_branch =
        StateVector::basis(Space::new(vec![path1(), path2()]).unwrap(), &["L1", "R2"])
            .and_then(|p| p.tensor(&attribute_ket(Photon::First, false, params.phi1, repr)))
            .and_then(|p| p.tensor(&attribute_ket(Photon::Second, false, params.phi1p, repr)))
            .expect("static construction");
    wave_branch
        .scale(C64::from(params.alpha.cos()))
        .add(&particle_branch.scale(C64::from(params.alpha.sin())))
        .expect("same space")
}

/// The pre-selected family at `α = π/4`; `params.alpha` is ignored.
pub fn make_postselected(params: &WpParams, repr: Representation) -> StateVector {
    make_preselected(&WpParams { alpha: FRAC_PI_4, ..*params }, repr)
}

pub fn make_pair(params: &WpParams, repr: Representation) -> PrePostPair {
    PrePostPair::new(make_preselected(params, repr), make_postselected(params, repr))
        .expect("both states are normalized on the same space")
}

/// `|arm⟩⟨arm| ⊗ |attr⟩⟨attr|` on the composite space.
pub fn attribute_observable(
    arm: Arm,
    attr: Attribute,
    repr: Representation,
    params: &WpParams,
) -> Result<Operator> {
    if arm.photon() != attr.photon() {
        return Err(Error::Domain(format!(
            "attribute {attr} belongs to the other photon than arm {arm}"
        )));
    }
    let photon = arm.photon();
    let arm_proj = Operator::basis_projector(&path_factor(photon), arm.label())?;
    let ket = attribute_ket(photon, attr.is_wave(), params.phase(photon), repr);
    let attr_proj = Operator::projector_onto(&ket)?;
    arm_proj.kron(&attr_proj)?.embed(&composite_space(repr))
}

/// All eight weak values in [`OBSERVABLES`] order.
pub fn separation_weak_values(
    params: &WpParams,
    repr: Representation,
) -> Result<Vec<WeakValueReport>> {
    let named = OBSERVABLES
        .iter()
        .map(|&(attr, arm)| {
            Ok((observable_name(attr, arm), attribute_observable(arm, attr, repr, params)?))
        })
        .collect::<Result<Vec<_>>>()?;
    weak_value_table(&make_pair(params, repr), &named)
}

/// Closed-form weak value of `Π_attr^arm` at mixing angle `alpha`.
pub fn predicted_weak_value(attr: Attribute, arm: Arm, alpha: f64) -> f64 {
    if arm.photon() != attr.photon() {
        return 0.0;
    }
    // Wave sits in R1 / L2, particle in L1 / R2.
    let wave_arm_is_left = arm.photon() == Photon::Second;
    let occupied = if attr.is_wave() {
        arm.is_left() == wave_arm_is_left
    } else {
        arm.is_left() != wave_arm_is_left
    };
    if !occupied {
        return 0.0;
    }
    let (c, s) = (alpha.cos(), alpha.sin());
    if attr.is_wave() {
        c / (c + s)
    } else {
        s / (c + s)
    }
}

/// `(⟨Π_P^L1⟩ + ⟨Π_W^R1⟩, ⟨Π_P'^R2⟩ + ⟨Π_W'^L2⟩)` from a report list.
pub fn complementarity_sums(reports: &[WeakValueReport]) -> Option<(C64, C64)> {
    let get = |attr, arm| {
        let name = observable_name(attr, arm);
        reports.iter().find(|r| r.observable_name == name).map(|r| r.value)
    };
    Some((
        get(Attribute::P, Arm::L1)? + get(Attribute::W, Arm::R1)?,
        get(Attribute::Pp, Arm::R2)? + get(Attribute::Wp, Arm::L2)?,
    ))
}
