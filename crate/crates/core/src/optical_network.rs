//! Element-by-element simulation of the post-selection verification network.
//!
//! A [`Circuit`] is an ordered list of optical [`Element`]s acting on a
//! sub-normalized state. Unitary elements (beam splitters, the mode switch)
//! act in place. Filters, path merges and detectors split the state into
//! orthogonal branches; branches sent to a detector are removed from the state
//! and their squared norm is credited to that detector. Every element may be
//! placed in a single arm (`at`): it then acts only on the component where the
//! given factor carries the given label and passes the rest through.
//!
//! [`fig1_circuit`] builds the two-photon verification network:
//!
//! 1. `BS1` (modes of photon 1, arm `L1`) and `BS2` (photon 2, arm `R2`), each
//!    followed by the 1↔2, 3↔4 mode switch. These turn `|P⟩` into `|W⟩`.
//! 2. `BS3/BS4` merge `|R1 L2⟩ → |R⟩` and `|L1 R2⟩ → |L⟩`; `|R1 R2⟩` leaks to
//!    `D1` and `|L1 L2⟩` to `D2`.
//! 3. Wave filters `X3` (arm `R`) and `X4` (arm `L`) on both photons' modes;
//!    reflected light goes to `D3` / `D4`.
//! 4. `BS5` on the merged path, then `D5` on `R` and `D6` on `L`.
//!
//! Mirrors and the routing beam splitters carry no phase.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qstate::{Operator, Space, SpaceLabel, StateVector, C64, I, ONE, ZERO};
use crate::wp_states::{self, WpParams};

/// Beam-splitter phase convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BsConvention {
    /// `|a⟩ → (|a⟩ + |b⟩)/√2`, `|b⟩ → (|a⟩ − |b⟩)/√2`.
    #[default]
    Paper,
    /// `|a⟩ → (|a⟩ + i|b⟩)/√2`, `|b⟩ → (i|a⟩ + |b⟩)/√2`.
    Symmetric,
}

impl BsConvention {
    pub fn keyword(self) -> &'static str {
        match self {
            BsConvention::Paper => "paper",
            BsConvention::Symmetric => "symmetric",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "paper" => Some(BsConvention::Paper),
            "symmetric" => Some(BsConvention::Symmetric),
            _ => None,
        }
    }
}

/// Where a filter output port goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Sink {
    Next,
    Detector(String),
}

impl fmt::Display for Sink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sink::Next => f.write_str("next"),
            Sink::Detector(name) => write!(f, "detector:{name}"),
        }
    }
}

/// A factor name together with one of its basis labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Port {
    pub space: String,
    pub label: String,
}

impl Port {
    pub fn new(space: impl Into<String>, label: impl Into<String>) -> Self {
        Port { space: space.into(), label: label.into() }
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.space, self.label)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ElementKind {
    BeamSplitter {
        space: String,
        couple: (String, String),
        convention: BsConvention,
    },
    ModeSwitch {
        space: String,
    },
    WaveFilter {
        space: String,
        phi: f64,
        transmit_to: Sink,
        reflect_to: Sink,
    },
    PathMerge {
        inputs: (String, String),
        /// `((label in first input, label in second input), merged label)`.
        map: Vec<((String, String), String)>,
        /// One leak detector per map entry; unmapped pairs leak to the entry
        /// sharing their first-input label.
        leak_to: Vec<String>,
        into: String,
    },
    Detector {
        space: String,
        label: String,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub kind: ElementKind,
    /// Restricts the element to one arm.
    pub at: Option<Port>,
    /// Display name; detectors always have one.
    pub name: Option<String>,
}

impl Element {
    pub fn beam_splitter(space: &str, a: &str, b: &str, convention: BsConvention) -> Self {
        Self::from_kind(ElementKind::BeamSplitter {
            space: space.into(),
            couple: (a.into(), b.into()),
            convention,
        })
    }

    pub fn mode_switch(space: &str) -> Self {
        Self::from_kind(ElementKind::ModeSwitch { space: space.into() })
    }

    pub fn wave_filter(space: &str, phi: f64, transmit_to: Sink, reflect_to: Sink) -> Self {
        Self::from_kind(ElementKind::WaveFilter { space: space.into(), phi, transmit_to, reflect_to })
    }

    pub fn path_merge(
        inputs: (&str, &str),
        map: &[((&str, &str), &str)],
        leak_to: &[&str],
        into: &str,
    ) -> Self {
        Self::from_kind(ElementKind::PathMerge {
            inputs: (inputs.0.into(), inputs.1.into()),
            map: map.iter().map(|((a, b), t)| (((*a).into(), (*b).into()), (*t).into())).collect(),
            leak_to: leak_to.iter().map(|s| (*s).into()).collect(),
            into: into.into(),
        })
    }

    pub fn detector(name: &str, space: &str, label: &str) -> Self {
        Element {
            kind: ElementKind::Detector { space: space.into(), label: label.into() },
            at: None,
            name: Some(name.into()),
        }
    }

    fn from_kind(kind: ElementKind) -> Self {
        Element { kind, at: None, name: None }
    }

    pub fn at(mut self, space: &str, label: &str) -> Self {
        self.at = Some(Port::new(space, label));
        self
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Name used in traces: the explicit name, or a description of the element.
    pub fn display_name(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        let base = match &self.kind {
            ElementKind::BeamSplitter { space, couple, .. } => {
                format!("bs({space}:{},{})", couple.0, couple.1)
            }
            ElementKind::ModeSwitch { space } => format!("switch1234({space})"),
            ElementKind::WaveFilter { space, .. } => format!("wavefilter({space})"),
            ElementKind::PathMerge { inputs, into, .. } => {
                format!("merge({},{}->{into})", inputs.0, inputs.1)
            }
            ElementKind::Detector { space, label } => format!("detector({space}.{label})"),
        };
        match &self.at {
            Some(p) => format!("{base}@{p}"),
            None => base,
        }
    }

    /// Detector names this element can credit.
    pub fn detectors(&self) -> Vec<&str> {
        match &self.kind {
            ElementKind::WaveFilter { transmit_to, reflect_to, .. } => [transmit_to, reflect_to]
                .into_iter()
                .filter_map(|s| match s {
                    Sink::Detector(n) => Some(n.as_str()),
                    Sink::Next => None,
                })
                .collect(),
            ElementKind::PathMerge { leak_to, .. } => leak_to.iter().map(String::as_str).collect(),
            ElementKind::Detector { .. } => self.name.iter().map(String::as_str).collect(),
            _ => Vec::new(),
        }
    }

    /// Factor names the element reads, with the labels it names in each.
    fn references(&self) -> Vec<(&str, Vec<&str>)> {
        let mut refs = match &self.kind {
            ElementKind::BeamSplitter { space, couple, .. } => {
                vec![(space.as_str(), vec![couple.0.as_str(), couple.1.as_str()])]
            }
            ElementKind::ModeSwitch { space } | ElementKind::WaveFilter { space, .. } => {
                vec![(space.as_str(), vec![])]
            }
            ElementKind::PathMerge { inputs, map, into, .. } => vec![
                (inputs.0.as_str(), map.iter().map(|((a, _), _)| a.as_str()).collect()),
                (inputs.1.as_str(), map.iter().map(|((_, b), _)| b.as_str()).collect()),
                (into.as_str(), map.iter().map(|(_, t)| t.as_str()).collect()),
            ],
            ElementKind::Detector { space, label } => vec![(space.as_str(), vec![label.as_str()])],
        };
        if let Some(p) = &self.at {
            refs.push((p.space.as_str(), vec![p.label.as_str()]));
        }
        refs
    }

    /// Checks the element against the declared factors (not against the
    /// factors live at its position, which only simulation knows).
    pub fn validate(&self, declared: &[SpaceLabel]) -> Result<()> {
        let lookup = |name: &str| {
            declared
                .iter()
                .find(|f| f.name() == name)
                .ok_or_else(|| Error::Shape(format!("undeclared space '{name}'")))
        };
        for (space, labels) in self.references() {
            let f = lookup(space)?;
            for l in labels {
                if f.index_of(l).is_none() {
                    return Err(Error::Label(format!("'{l}' is not a label of space '{space}'")));
                }
            }
        }
        match &self.kind {
            ElementKind::BeamSplitter { couple, .. } if couple.0 == couple.1 => {
                return Err(Error::Shape("a beam splitter couples two distinct labels".into()))
            }
            ElementKind::ModeSwitch { space } | ElementKind::WaveFilter { space, .. } => {
                if lookup(space)?.dim() != 4 {
                    return Err(Error::Shape(format!("space '{space}' must have exactly 4 modes")));
                }
            }
            ElementKind::PathMerge { inputs, map, leak_to, into } => {
                validate_merge(declared, inputs, map, leak_to, into)?
            }
            _ => {}
        }
        if let Some(p) = &self.at {
            let own = match &self.kind {
                ElementKind::BeamSplitter { space, .. }
                | ElementKind::ModeSwitch { space }
                | ElementKind::WaveFilter { space, .. }
                | ElementKind::Detector { space, .. } => vec![space.as_str()],
                ElementKind::PathMerge { inputs, into, .. } => {
                    vec![inputs.0.as_str(), inputs.1.as_str(), into.as_str()]
                }
            };
            if own.contains(&p.space.as_str()) {
                return Err(Error::Shape(format!(
                    "element cannot be placed on its own space '{}'",
                    p.space
                )));
            }
        }
        Ok(())
    }
}

fn validate_merge(
    declared: &[SpaceLabel],
    inputs: &(String, String),
    map: &[((String, String), String)],
    leak_to: &[String],
    into: &str,
) -> Result<()> {
    if inputs.0 == inputs.1 || inputs.0 == into || inputs.1 == into {
        return Err(Error::Shape("merge inputs and target must be three distinct spaces".into()));
    }
    if map.is_empty() {
        return Err(Error::Shape("merge needs at least one mapping".into()));
    }
    if leak_to.len() != map.len() {
        return Err(Error::Shape(format!(
            "merge has {} mappings but {} leak detectors",
            map.len(),
            leak_to.len()
        )));
    }
    for (i, (src, dst)) in map.iter().enumerate() {
        if map[..i].iter().any(|(s, _)| s == src) {
            return Err(Error::Shape(format!("pair {}.{} mapped twice", src.0, src.1)));
        }
        if map[..i].iter().any(|(_, d)| d == dst) {
            return Err(Error::Shape(format!("merged label '{dst}' used twice")));
        }
    }
    let a = declared.iter().find(|f| f.name() == inputs.0).expect("checked by references");
    let b = declared.iter().find(|f| f.name() == inputs.1).expect("checked by references");
    for la in a.labels() {
        for lb in b.labels() {
            let mapped = map.iter().any(|((x, y), _)| x == la && y == lb);
            if !mapped && !map.iter().any(|((x, _), _)| x == la) {
                return Err(Error::Shape(format!(
                    "pair {la}.{lb} is neither mapped nor routable to a leak detector"
                )));
            }
        }
    }
    Ok(())
}

/// Declared spaces plus an ordered element list.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    spaces: Vec<SpaceLabel>,
    elements: Vec<Element>,
}

/// One trace record: element name and the state norm after it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceEntry {
    pub element: String,
    pub norm_after: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionResult {
    pub detector_probs: BTreeMap<String, f64>,
    /// What is left after every element, i.e. amplitude no detector absorbed.
    pub surviving_state: StateVector,
    pub trace: Vec<TraceEntry>,
}

impl DetectionResult {
    pub fn prob(&self, detector: &str) -> f64 {
        self.detector_probs.get(detector).copied().unwrap_or(0.0)
    }

    /// Sum of all detector probabilities plus the surviving norm².
    pub fn total(&self) -> f64 {
        self.detector_probs.values().sum::<f64>() + self.surviving_state.norm_sqr()
    }

    /// Trace as JSON lines `{"element": ..., "norm_after": ...}`.
    pub fn trace_json_lines(&self) -> String {
        self.trace
            .iter()
            .map(|t| serde_json::to_string(t).expect("plain struct") + "\n")
            .collect()
    }
}

impl Circuit {
    pub fn new(spaces: Vec<SpaceLabel>, elements: Vec<Element>) -> Result<Self> {
        Space::new(spaces.clone())?;
        for e in &elements {
            e.validate(&spaces)?;
        }
        Ok(Circuit { spaces, elements })
    }

    pub fn spaces(&self) -> &[SpaceLabel] {
        &self.spaces
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Declared spaces that are not produced by a merge, in declaration order.
    pub fn input_space(&self) -> Space {
        let targets: Vec<&str> = self
            .elements
            .iter()
            .filter_map(|e| match &e.kind {
                ElementKind::PathMerge { into, .. } => Some(into.as_str()),
                _ => None,
            })
            .collect();
        Space::new(self.spaces.iter().filter(|f| !targets.contains(&f.name())).cloned().collect())
            .expect("declared names are distinct")
    }

    /// Every detector name the circuit can credit, deduplicated.
    pub fn detector_names(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        for e in &self.elements {
            for d in e.detectors() {
                if !names.iter().any(|n| n == d) {
                    names.push(d.to_string());
                }
            }
        }
        names
    }

    fn declared(&self, name: &str) -> &SpaceLabel {
        self.spaces.iter().find(|f| f.name() == name).expect("validated at construction")
    }

    pub fn simulate(&self, input: &StateVector) -> Result<DetectionResult> {
        let expected = self.input_space();
        if input.space() != &expected {
            return Err(Error::Shape(format!(
                "input state is over [{}], circuit expects [{}]",
                input.space().names().join(","),
                expected.names().join(",")
            )));
        }
        let mut probs: BTreeMap<String, f64> =
            self.detector_names().into_iter().map(|n| (n, 0.0)).collect();
        let mut state = input.clone();
        let mut trace = Vec::with_capacity(self.elements.len());
        for e in &self.elements {
            state = self.step(e, state, &mut probs)?;
            trace.push(TraceEntry { element: e.display_name(), norm_after: state.norm() });
        }
        Ok(DetectionResult { detector_probs: probs, surviving_state: state, trace })
    }

    fn step(
        &self,
        e: &Element,
        state: StateVector,
        probs: &mut BTreeMap<String, f64>,
    ) -> Result<StateVector> {
        let space = state.space().clone();
        let placed = |local: &Operator| -> Result<Operator> { place(local, e.at.as_ref(), &space) };
        let gated = |proj: &Operator| -> Result<Operator> { gate(proj, e.at.as_ref(), &space) };
        match &e.kind {
            ElementKind::BeamSplitter { space: f, couple, convention } => {
                let u = beam_splitter(self.declared(f), &couple.0, &couple.1, *convention)?;
                placed(&u)?.apply(&state)
            }
            ElementKind::ModeSwitch { space: f } => placed(&sigma1234(self.declared(f))?)?.apply(&state),
            ElementKind::WaveFilter { space: f, phi, transmit_to, reflect_to } => {
                let (transmit, reflect) = wave_filter(self.declared(f), *phi)?;
                let mut state = state;
                for (proj, sink) in [(transmit, transmit_to), (reflect, reflect_to)] {
                    if let Sink::Detector(name) = sink {
                        state = absorb(&gated(&proj)?, state, name, probs)?;
                    }
                }
                Ok(state)
            }
            ElementKind::Detector { space: f, label } => {
                let proj = Operator::basis_projector(self.declared(f), label)?;
                let name = e.name.as_deref().expect("detectors are named");
                absorb(&gated(&proj)?, state, name, probs)
            }
            ElementKind::PathMerge { inputs, map, leak_to, into } => {
                let merge = PathMerge {
                    first: self.declared(&inputs.0).clone(),
                    second: self.declared(&inputs.1).clone(),
                    into: self.declared(into).clone(),
                    map: map.clone(),
                    leak_to: leak_to.clone(),
                };
                if let Some(p) = &e.at {
                    return Err(Error::Shape(format!("a merge cannot be placed in arm {p}")));
                }
                let (merged, leaks) = merge.apply(&state)?;
                for (name, p) in leaks {
                    *probs.entry(name).or_insert(0.0) += p;
                }
                Ok(merged)
            }
        }
    }
}

/// Removes `proj·state` from the state and credits its norm² to `detector`.
fn absorb(
    proj: &Operator,
    state: StateVector,
    detector: &str,
    probs: &mut BTreeMap<String, f64>,
) -> Result<StateVector> {
    let hit = proj.apply(&state)?;
    *probs.entry(detector.to_string()).or_insert(0.0) += hit.norm_sqr();
    state.sub(&hit)
}

/// Embeds a unitary into `space`. With `at`, it acts in that arm and is the
/// identity elsewhere.
fn place(local: &Operator, at: Option<&Port>, space: &Space) -> Result<Operator> {
    let full = local.embed(space)?;
    let Some(port) = at else { return Ok(full) };
    let arm = arm_projector(port, space)?;
    arm.compose(&full)?.add(&arm.complement())
}

/// Embeds a detection projector into `space`. With `at`, nothing outside that
/// arm is detected.
fn gate(proj: &Operator, at: Option<&Port>, space: &Space) -> Result<Operator> {
    let full = proj.embed(space)?;
    let Some(port) = at else { return Ok(full) };
    arm_projector(port, space)?.compose(&full)
}

fn arm_projector(port: &Port, space: &Space) -> Result<Operator> {
    let factor = space
        .factor(&port.space)
        .ok_or_else(|| Error::Shape(format!("arm space '{}' is not live here", port.space)))?;
    Operator::basis_projector(factor, &port.label)?.embed(space)
}

/// Two-port beam splitter coupling labels `a` and `b` of `factor`; identity elsewhere.
pub fn beam_splitter(factor: &SpaceLabel, a: &str, b: &str, convention: BsConvention) -> Result<Operator> {
    let ia = factor.index_of(a).ok_or_else(|| Error::Label(format!("unknown label '{a}'")))?;
    let ib = factor.index_of(b).ok_or_else(|| Error::Label(format!("unknown label '{b}'")))?;
    if ia == ib {
        return Err(Error::Shape("a beam splitter couples two distinct labels".into()));
    }
    let h = C64::from(FRAC_1_SQRT_2);
    // Columns are images: U|a⟩ = u_aa|a⟩ + u_ba|b⟩.
    let (u_aa, u_ba, u_ab, u_bb) = match convention {
        BsConvention::Paper => (h, h, h, -h),
        BsConvention::Symmetric => (h, I * h, I * h, h),
    };
    let space = Space::single(factor.clone());
    let n = factor.dim();
    let mut m = Operator::identity(space.clone()).matrix().to_vec();
    m[ia * n + ia] = u_aa;
    m[ib * n + ia] = u_ba;
    m[ia * n + ib] = u_ab;
    m[ib * n + ib] = u_bb;
    Operator::new(space, m)
}

/// Beam splitter on modes 2 and 4 of a four-mode factor.
pub fn bs_24(modes: &SpaceLabel, convention: BsConvention) -> Result<Operator> {
    require_four(modes)?;
    beam_splitter(modes, &modes.labels()[1], &modes.labels()[3], convention)
}

/// Permutation swapping modes 1↔2 and 3↔4.
pub fn sigma1234(modes: &SpaceLabel) -> Result<Operator> {
    require_four(modes)?;
    let rows = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];
    let matrix = rows
        .iter()
        .flatten()
        .map(|&x| if x == 1 { ONE } else { ZERO })
        .collect();
    Operator::new(Space::single(modes.clone()), matrix)
}

/// `(|W(φ)⟩⟨W(φ)|, I − |W(φ)⟩⟨W(φ)|)` on a four-mode factor.
pub fn wave_filter(modes: &SpaceLabel, phi: f64) -> Result<(Operator, Operator)> {
    require_four(modes)?;
    let transmit = Operator::projector_onto(&wp_states::wave_on(modes.clone(), phi)?)?;
    let reflect = transmit.complement();
    Ok((transmit, reflect))
}

/// `|R⟩ → (|R⟩+|L⟩)/√2`, `|L⟩ → (|R⟩−|L⟩)/√2` on the merged path.
pub fn bs5() -> Operator {
    beam_splitter(&merged_path(), "R", "L", BsConvention::Paper).expect("static labels")
}

fn require_four(modes: &SpaceLabel) -> Result<()> {
    if modes.dim() != 4 {
        return Err(Error::Shape(format!("'{}' must have exactly 4 modes", modes.name())));
    }
    Ok(())
}

/// Merged path factor `{R, L}` after the routing beam splitters.
pub fn merged_path() -> SpaceLabel {
    SpaceLabel::new("path", &["R", "L"]).expect("static labels")
}

/// Isometry folding two path factors into one, with leak detection for
/// unmapped label pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct PathMerge {
    pub first: SpaceLabel,
    pub second: SpaceLabel,
    pub into: SpaceLabel,
    pub map: Vec<((String, String), String)>,
    pub leak_to: Vec<String>,
}

impl PathMerge {
    /// Replaces `first ⊗ second` with `into`, placed where `first` was. Returns
    /// the merged state and the probability credited to each leak detector.
    pub fn apply(&self, state: &StateVector) -> Result<(StateVector, Vec<(String, f64)>)> {
        let space = state.space();
        let (Some(pa), Some(pb)) = (space.position(self.first.name()), space.position(self.second.name()))
        else {
            return Err(Error::Shape(format!(
                "merge inputs '{}', '{}' are not both live",
                self.first.name(),
                self.second.name()
            )));
        };
        if space.position(self.into.name()).is_some() {
            return Err(Error::Shape(format!("merge target '{}' already live", self.into.name())));
        }
        let mut factors = Vec::new();
        for (k, f) in space.factors().iter().enumerate() {
            if k == pa {
                factors.push(self.into.clone());
            } else if k != pb {
                factors.push(f.clone());
            }
        }
        let out_space = Space::new(factors)?;
        let out_strides = out_space.strides();

        let mut out = vec![ZERO; out_space.dim()];
        let mut leaks: Vec<(String, f64)> = self.leak_to.iter().map(|n| (n.clone(), 0.0)).collect();
        for (index, amp) in state.amplitudes().iter().enumerate() {
            let digits = space.digits(index);
            let la = &self.first.labels()[digits[pa]];
            let lb = &self.second.labels()[digits[pb]];
            match self.map.iter().find(|((x, y), _)| x == la && y == lb) {
                Some((_, target)) => {
                    let t = self.into.index_of(target).ok_or_else(|| {
                        Error::Label(format!("'{target}' is not a label of '{}'", self.into.name()))
                    })?;
                    let mut new_index = 0;
                    let mut slot = 0;
                    for (k, d) in digits.iter().enumerate() {
                        if k == pb {
                            continue;
                        }
                        let digit = if k == pa { t } else { *d };
                        new_index += digit * out_strides[slot];
                        slot += 1;
                    }
                    out[new_index] += amp;
                }
                None => {
                    let entry = self
                        .map
                        .iter()
                        .position(|((x, _), _)| x == la)
                        .ok_or_else(|| Error::Shape(format!("pair {la}.{lb} has no leak port")))?;
                    leaks[entry].1 += amp.norm_sqr();
                }
            }
        }
        Ok((StateVector::new(out_space, out)?, leaks))
    }
}

/// Routing used by the verification network: `R1 L2 → R`, `L1 R2 → L`,
/// with `R1 R2` leaking to `D1` and `L1 L2` to `D2`.
pub fn merge_paths() -> PathMerge {
    PathMerge {
        first: wp_states::path1(),
        second: wp_states::path2(),
        into: merged_path(),
        map: vec![
            (("R1".into(), "L2".into()), "R".into()),
            (("L1".into(), "R2".into()), "L".into()),
        ],
        leak_to: vec!["D1".into(), "D2".into()],
    }
}

/// The two-photon post-selection verification network.
pub fn fig1_circuit(params: &WpParams) -> Circuit {
    let d = |n: &str| Sink::Detector(n.into());
    let spaces = vec![
        wp_states::path1(),
        wp_states::path2(),
        wp_states::modes1(),
        wp_states::modes2(),
        merged_path(),
    ];
    let paper = BsConvention::Paper;
    let elements = vec![
        Element::beam_splitter("modes1", "2", "4", paper).at("path1", "L1").named("BS1"),
        Element::beam_splitter("modes2", "2'", "4'", paper).at("path2", "R2").named("BS2"),
        Element::mode_switch("modes1").at("path1", "L1").named("SW1"),
        Element::mode_switch("modes2").at("path2", "R2").named("SW2"),
        Element::path_merge(
            ("path1", "path2"),
            &[(("R1", "L2"), "R"), (("L1", "R2"), "L")],
            &["D1", "D2"],
            "path",
        )
        .named("BS3/BS4"),
        Element::wave_filter("modes1", params.phi1, Sink::Next, d("D3")).at("path", "R").named("X3"),
        Element::wave_filter("modes2", params.phi1p, Sink::Next, d("D3")).at("path", "R").named("X3'"),
        Element::wave_filter("modes1", params.phi1, Sink::Next, d("D4")).at("path", "L").named("X4"),
        Element::wave_filter("modes2", params.phi1p, Sink::Next, d("D4")).at("path", "L").named("X4'"),
        Element::beam_splitter("path", "R", "L", paper).named("BS5"),
        Element::detector("D5", "path", "R"),
        Element::detector("D6", "path", "L"),
    ];
    Circuit::new(spaces, elements).expect("static circuit is valid")
}

/// Runs `input` (over `path1 ⊗ path2 ⊗ modes1 ⊗ modes2`) through [`fig1_circuit`].
pub fn run_postselection_pipeline(input: &StateVector, params: &WpParams) -> Result<DetectionResult> {
    fig1_circuit(params).simulate(input)
}

/// Detector names of the verification network, in order.
pub const FIG1_DETECTORS: [&str; 6] = ["D1", "D2", "D3", "D4", "D5", "D6"];
