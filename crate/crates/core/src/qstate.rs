//! Dense complex linear algebra over small labeled tensor-product spaces.
//!
//! A [`Space`] is an ordered list of named factors ([`SpaceLabel`]). Amplitudes
//! and matrix entries are stored row-major over the product basis: the first
//! factor is the most significant digit. For `path{L,R} ⊗ pol{H,V}` the basis
//! order is `LH, LV, RH, RV`.
//!
//! Everything here is immutable once built. The largest space in use is 64
//! dimensional, so matrices are plain dense `Vec`s.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Tolerance used for all exactness checks (normalization, unitarity, idempotence).
pub const TOL: f64 = 1e-12;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// A named tensor factor with an ordered list of distinct basis labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpaceLabel {
    name: String,
    labels: Vec<String>,
}

impl SpaceLabel {
    pub fn new<S: AsRef<str>>(name: impl Into<String>, labels: &[S]) -> Result<Self> {
        Self::from_labels(name, labels.iter().map(|l| l.as_ref().to_string()).collect())
    }

    pub fn from_labels(name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::Label("factor name must not be empty".into()));
        }
        if labels.is_empty() {
            return Err(Error::Label(format!("factor '{name}' needs at least one basis label")));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::Label(format!("factor '{name}' has an empty basis label")));
            }
            if labels[..i].contains(l) {
                return Err(Error::Label(format!("factor '{name}' repeats basis label '{l}'")));
            }
        }
        Ok(SpaceLabel { name, labels })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| {
            Error::Label(format!("'{label}' is not a basis label of factor '{}'", self.name))
        })
    }
}

/// Ordered list of tensor factors with distinct names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Space(Vec<SpaceLabel>);

impl Space {
    pub fn new(factors: Vec<SpaceLabel>) -> Result<Self> {
        for (i, f) in factors.iter().enumerate() {
            if factors[..i].iter().any(|g| g.name == f.name) {
                return Err(Error::Shape(format!("duplicate factor name '{}'", f.name)));
            }
        }
        Ok(Space(factors))
    }

    pub fn single(factor: SpaceLabel) -> Self {
        Space(vec![factor])
    }

    pub fn factors(&self) -> &[SpaceLabel] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(SpaceLabel::dim).product()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|f| f.name == name)
    }

    pub fn factor(&self, name: &str) -> Option<&SpaceLabel> {
        self.0.iter().find(|f| f.name == name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.0.iter().map(|f| f.name.as_str()).collect()
    }

    /// Row-major strides, one per factor.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.0.len()];
        for k in (0..self.0.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.0[k + 1].dim();
        }
        strides
    }

    /// Flat index of a product basis vector given one label per factor.
    pub fn index_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        if labels.len() != self.0.len() {
            return Err(Error::Shape(format!(
                "expected {} basis labels, got {}",
                self.0.len(),
                labels.len()
            )));
        }
        let mut index = 0;
        for (f, l) in self.0.iter().zip(labels) {
            index = index * f.dim() + f.require_index(l.as_ref())?;
        }
        Ok(index)
    }

    /// Per-factor digits of a flat index.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.0.len()];
        for k in (0..self.0.len()).rev() {
            let d = self.0[k].dim();
            digits[k] = index % d;
            index /= d;
        }
        digits
    }

    pub fn labels_at(&self, index: usize) -> Vec<&str> {
        self.digits(index)
            .into_iter()
            .zip(&self.0)
            .map(|(d, f)| f.labels[d].as_str())
            .collect()
    }

    pub fn concat(&self, other: &Space) -> Result<Space> {
        let mut factors = self.0.clone();
        factors.extend(other.0.iter().cloned());
        Space::new(factors)
    }

    fn require_same(&self, other: &Space, what: &str) -> Result<()> {
        if self != other {
            return Err(Error::Shape(format!(
                "{what}: space [{}] does not match [{}]",
                self.names().join(","),
                other.names().join(",")
            )));
        }
        Ok(())
    }
}

/// Complex amplitude vector over a labeled product basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    space: Space,
    amplitudes: Vec<C64>,
}

#[derive(Serialize)]
struct StateJson<'a> {
    space: &'a Space,
    amplitudes: Vec<[f64; 2]>,
}

impl StateVector {
    pub fn new(space: Space, amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() != space.dim() {
            return Err(Error::Shape(format!(
                "{} amplitudes supplied for a {}-dimensional space",
                amplitudes.len(),
                space.dim()
            )));
        }
        Ok(StateVector { space, amplitudes })
    }

    pub fn zeros(space: Space) -> Self {
        let n = space.dim();
        StateVector { space, amplitudes: vec![ZERO; n] }
    }

    /// Product basis vector with amplitude 1 at the labeled index.
    pub fn basis<S: AsRef<str>>(space: Space, labels: &[S]) -> Result<Self> {
        let index = space.index_of(labels)?;
        let mut s = Self::zeros(space);
        s.amplitudes[index] = ONE;
        Ok(s)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude<S: AsRef<str>>(&self, labels: &[S]) -> Result<C64> {
        Ok(self.amplitudes[self.space.index_of(labels)?])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(C64::norm_sqr).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= TOL
    }

    pub fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::Normalization { norm_sqr: self.norm_sqr() })
        }
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n <= TOL {
            return Err(Error::Normalization { norm_sqr: n * n });
        }
        Ok(self.scale(C64::from(1.0 / n)))
    }

    pub fn scale(&self, c: C64) -> Self {
        StateVector {
            space: self.space.clone(),
            amplitudes: self.amplitudes.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &StateVector) -> Result<Self> {
        self.space.require_same(&other.space, "add")?;
        Ok(StateVector {
            space: self.space.clone(),
            amplitudes: self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &StateVector) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    /// Kronecker product `self ⊗ other`; the result's factors are `self`'s followed by `other`'s.
    pub fn tensor(&self, other: &StateVector) -> Result<Self> {
        let space = self.space.concat(&other.space)?;
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Ok(StateVector { space, amplitudes })
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        self.space.require_same(&other.space, "inner")?;
        Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum())
    }

    /// Reorders the tensor factors. `order` lists every factor name exactly once.
    pub fn permuted<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        let perm = permutation(&self.space, order)?;
        let new_space = Space(perm.iter().map(|&k| self.space.0[k].clone()).collect());
        let old_strides = self.space.strides();
        let mut amplitudes = vec![ZERO; self.dim()];
        for (new_index, amp) in amplitudes.iter_mut().enumerate() {
            let digits = new_space.digits(new_index);
            let old_index: usize = digits.iter().zip(&perm).map(|(d, &k)| d * old_strides[k]).sum();
            *amp = self.amplitudes[old_index];
        }
        Ok(StateVector { space: new_space, amplitudes })
    }

    /// Number of amplitudes with modulus above `tol`.
    pub fn support_size(&self, tol: f64) -> usize {
        self.amplitudes.iter().filter(|a| a.norm() > tol).count()
    }

    /// Debug serialization `{"space": [...], "amplitudes": [[re, im], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(StateJson {
            space: &self.space,
            amplitudes: self.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        })
        .expect("state serialization is infallible")
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.amplitudes.iter().enumerate() {
            if a.norm() <= TOL {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:.6}{:+.6}i)|{}⟩", a.re, a.im, self.space.labels_at(i).join(","))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn permutation<S: AsRef<str>>(space: &Space, order: &[S]) -> Result<Vec<usize>> {
    if order.len() != space.0.len() {
        return Err(Error::Shape(format!(
            "permutation lists {} factors, space has {}",
            order.len(),
            space.0.len()
        )));
    }
    let mut perm = Vec::with_capacity(order.len());
    for name in order {
        let k = space
            .position(name.as_ref())
            .ok_or_else(|| Error::Shape(format!("unknown factor '{}'", name.as_ref())))?;
        if perm.contains(&k) {
            return Err(Error::Shape(format!("factor '{}' listed twice", name.as_ref())));
        }
        perm.push(k);
    }
    Ok(perm)
}

/// Square complex matrix acting on a labeled space. Stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    space: Space,
    matrix: Vec<C64>,
}

impl Operator {
    pub fn new(space: Space, matrix: Vec<C64>) -> Result<Self> {
        let n = space.dim();
        if matrix.len() != n * n {
            return Err(Error::Shape(format!(
                "{} matrix entries supplied for a {n}x{n} operator",
                matrix.len()
            )));
        }
        Ok(Operator { space, matrix })
    }

    /// Builds an operator from nested rows.
    pub fn from_rows(space: Space, rows: &[Vec<C64>]) -> Result<Self> {
        let n = space.dim();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("expected a {n}x{n} array of rows")));
        }
        Self::new(space, rows.concat())
    }

    pub fn zeros(space: Space) -> Self {
        let n = space.dim();
        Operator { space, matrix: vec![ZERO; n * n] }
    }

    pub fn identity(space: Space) -> Self {
        let n = space.dim();
        let mut op = Self::zeros(space);
        for k in 0..n {
            op.matrix[k * n + k] = ONE;
        }
        op
    }

    /// `|ket⟩⟨bra|`.
    pub fn outer(ket: &StateVector, bra: &StateVector) -> Result<Self> {
        ket.space.require_same(&bra.space, "outer")?;
        let matrix = ket
            .amplitudes
            .iter()
            .flat_map(|k| bra.amplitudes.iter().map(move |b| k * b.conj()))
            .collect();
        Ok(Operator { space: ket.space.clone(), matrix })
    }

    /// Rank-one projector `|s⟩⟨s|`; `s` must be normalized.
    pub fn projector_onto(s: &StateVector) -> Result<Self> {
        s.require_normalized()?;
        Self::outer(s, s)
    }

    /// Projector onto a single basis label of a one-factor space.
    pub fn basis_projector(factor: &SpaceLabel, label: &str) -> Result<Self> {
        let s = StateVector::basis(Space::single(factor.clone()), &[label])?;
        Self::projector_onto(&s)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn matrix(&self) -> &[C64] {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.matrix[row * self.dim() + col]
    }

    pub fn apply(&self, s: &StateVector) -> Result<StateVector> {
        self.space.require_same(&s.space, "apply")?;
        let n = self.dim();
        let amplitudes = self
            .matrix
            .chunks_exact(n)
            .map(|row| row.iter().zip(&s.amplitudes).map(|(m, a)| m * a).sum())
            .collect();
        Ok(StateVector { space: s.space.clone(), amplitudes })
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim();
        let mut matrix = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                matrix[c * n + r] = self.matrix[r * n + c].conj();
            }
        }
        Operator { space: self.space.clone(), matrix }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Operator) -> Result<Self> {
        self.space.require_same(&other.space, "compose")?;
        let n = self.dim();
        let mut matrix = vec![ZERO; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.matrix[r * n + k];
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    matrix[r * n + c] += a * other.matrix[k * n + c];
                }
            }
        }
        Ok(Operator { space: self.space.clone(), matrix })
    }

    pub fn add(&self, other: &Operator) -> Result<Self> {
        self.space.require_same(&other.space, "add")?;
        Ok(Operator {
            space: self.space.clone(),
            matrix: self.matrix.iter().zip(&other.matrix).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Operator) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, c: C64) -> Self {
        Operator {
            space: self.space.clone(),
            matrix: self.matrix.iter().map(|m| m * c).collect(),
        }
    }

    /// `I − self`.
    pub fn complement(&self) -> Self {
        Self::identity(self.space.clone()).sub(self).expect("same space")
    }

    /// Kronecker product; factor list is `self`'s followed by `other`'s.
    pub fn kron(&self, other: &Operator) -> Result<Self> {
        let space = self.space.concat(&other.space)?;
        let (n, m) = (self.dim(), other.dim());
        let size = n * m;
        let mut matrix = vec![ZERO; size * size];
        for r1 in 0..n {
            for c1 in 0..n {
                let a = self.matrix[r1 * n + c1];
                if a == ZERO {
                    continue;
                }
                for r2 in 0..m {
                    for c2 in 0..m {
                        matrix[(r1 * m + r2) * size + c1 * m + c2] = a * other.matrix[r2 * m + c2];
                    }
                }
            }
        }
        Ok(Operator { space, matrix })
    }

    /// Extends the operator to `full` by tensoring identities onto the missing
    /// factors, in `full`'s factor order.
    pub fn embed(&self, full: &Space) -> Result<Self> {
        let mut positions = Vec::with_capacity(self.space.0.len());
        for f in &self.space.0 {
            match full.factor(&f.name) {
                Some(g) if g == f => positions.push(full.position(&f.name).unwrap()),
                Some(_) => {
                    return Err(Error::Shape(format!(
                        "factor '{}' has different basis labels in the target space",
                        f.name
                    )))
                }
                None => {
                    return Err(Error::Shape(format!(
                        "factor '{}' is not part of the target space",
                        f.name
                    )))
                }
            }
        }
        let op_strides = self.space.strides();
        let passive: Vec<usize> = (0..full.0.len()).filter(|k| !positions.contains(k)).collect();
        let n = full.dim();
        let m = self.dim();
        let digits: Vec<Vec<usize>> = (0..n).map(|i| full.digits(i)).collect();
        let local: Vec<usize> = digits
            .iter()
            .map(|d| positions.iter().zip(&op_strides).map(|(&p, s)| d[p] * s).sum())
            .collect();
        let mut matrix = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                if passive.iter().all(|&k| digits[r][k] == digits[c][k]) {
                    matrix[r * n + c] = self.matrix[local[r] * m + local[c]];
                }
            }
        }
        Ok(Operator { space: full.clone(), matrix })
    }

    pub fn trace(&self) -> C64 {
        let n = self.dim();
        (0..n).map(|k| self.matrix[k * n + k]).sum()
    }

    /// Largest entry-wise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Operator) -> Result<f64> {
        self.space.require_same(&other.space, "compare")?;
        Ok(self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()).is_ok_and(|d| d <= tol)
    }

    pub fn is_projector(&self, tol: f64) -> bool {
        let squared = self.compose(self).expect("same space");
        self.is_hermitian(tol) && squared.max_abs_diff(self).is_ok_and(|d| d <= tol)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let product = self.adjoint().compose(self).expect("same space");
        product
            .max_abs_diff(&Self::identity(self.space.clone()))
            .is_ok_and(|d| d <= tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn path() -> SpaceLabel {
        SpaceLabel::new("path", &["L", "R"]).unwrap()
    }

    fn pol() -> SpaceLabel {
        SpaceLabel::new("pol", &["H", "V"]).unwrap()
    }

    fn modes() -> SpaceLabel {
        SpaceLabel::new("modes1", &["1", "2", "3", "4"]).unwrap()
    }

    fn close(a: C64, b: C64) -> bool {
        (a - b).norm() <= TOL
    }

    #[test]
    fn space_label_rejects_duplicates_and_empty() {
        assert!(matches!(SpaceLabel::new("p", &["L", "L"]), Err(Error::Label(_))));
        assert!(matches!(SpaceLabel::new("p", &[] as &[&str]), Err(Error::Label(_))));
        assert!(matches!(SpaceLabel::new("", &["a"]), Err(Error::Label(_))));
    }

    #[test]
    fn basis_state_single_factor() {
        let s = StateVector::basis(Space::single(path()), &["L"]).unwrap();
        assert_eq!(s.amplitudes(), &[ONE, ZERO]);
        assert!(s.is_normalized());
    }

    #[test]
    fn basis_state_row_major() {
        let space = Space::new(vec![path(), pol()]).unwrap();
        let s = StateVector::basis(space, &["R", "V"]).unwrap();
        for (i, a) in s.amplitudes().iter().enumerate() {
            assert_eq!(*a, if i == 3 { ONE } else { ZERO });
        }
    }

    #[test]
    fn basis_state_mode_column() {
        let s = StateVector::basis(Space::single(modes()), &["3"]).unwrap();
        assert_eq!(s.amplitudes(), &[ZERO, ZERO, ONE, ZERO]);
    }

    #[test]
    fn basis_state_errors() {
        let space = Space::new(vec![path(), pol()]).unwrap();
        assert!(matches!(StateVector::basis(space.clone(), &["X", "H"]), Err(Error::Label(_))));
        assert!(matches!(StateVector::basis(space, &["L"]), Err(Error::Shape(_))));
    }

    #[test]
    fn tensor_of_first_basis_vectors() {
        let a = StateVector::basis(Space::single(path()), &["L"]).unwrap();
        let b = StateVector::basis(Space::single(pol()), &["H"]).unwrap();
        let ab = a.tensor(&b).unwrap();
        assert_eq!(ab.amplitudes(), &[ONE, ZERO, ZERO, ZERO]);
        assert_eq!(ab.space().names(), vec!["path", "pol"]);
    }

    #[test]
    fn tensor_builds_mzi_input() {
        let h = FRAC_1_SQRT_2;
        let p = StateVector::new(Space::single(path()), vec![I * h, C64::from(h)]).unwrap();
        let hpol = StateVector::basis(Space::single(pol()), &["H"]).unwrap();
        let s = p.tensor(&hpol).unwrap();
        let want = [I * h, ZERO, C64::from(h), ZERO];
        for (a, b) in s.amplitudes().iter().zip(want) {
            assert!(close(*a, b));
        }
    }

    #[test]
    fn tensor_rejects_duplicate_factor() {
        let a = StateVector::basis(Space::single(path()), &["L"]).unwrap();
        assert!(matches!(a.tensor(&a), Err(Error::Shape(_))));
    }

    #[test]
    fn inner_requires_same_space() {
        let a = StateVector::basis(Space::single(path()), &["L"]).unwrap();
        let b = StateVector::basis(Space::single(pol()), &["H"]).unwrap();
        assert!(close(a.inner(&a).unwrap(), ONE));
        assert!(matches!(a.inner(&b), Err(Error::Shape(_))));
    }

    #[test]
    fn embed_projector_annihilates_orthogonal_path() {
        let full = Space::new(vec![path(), pol()]).unwrap();
        let pi_l = Operator::basis_projector(&path(), "L").unwrap().embed(&full).unwrap();
        let rh = StateVector::basis(full, &["R", "H"]).unwrap();
        assert!(pi_l.apply(&rh).unwrap().norm() <= TOL);
    }

    #[test]
    fn embed_respects_target_factor_order() {
        // pol-only operator embedded into (path, pol) and (pol, path) must agree after permuting.
        let flip = Operator::from_rows(
            Space::single(pol()),
            &[vec![ZERO, ONE], vec![ONE, ZERO]],
        )
        .unwrap();
        let a = Space::new(vec![path(), pol()]).unwrap();
        let b = Space::new(vec![pol(), path()]).unwrap();
        let s = StateVector::basis(a.clone(), &["R", "H"]).unwrap();
        let out_a = flip.embed(&a).unwrap().apply(&s).unwrap();
        let out_b = flip
            .embed(&b)
            .unwrap()
            .apply(&s.permuted(&["pol", "path"]).unwrap())
            .unwrap()
            .permuted(&["path", "pol"])
            .unwrap();
        assert_eq!(out_a, out_b);
        assert_eq!(out_a.amplitude(&["R", "V"]).unwrap(), ONE);
    }

    #[test]
    fn embed_identity_is_identity() {
        let full = Space::new(vec![path(), pol(), modes()]).unwrap();
        let id = Operator::identity(Space::single(pol())).embed(&full).unwrap();
        assert_eq!(id, Operator::identity(full));
    }

    #[test]
    fn embed_unknown_factor() {
        let full = Space::single(path());
        let op = Operator::identity(Space::single(pol()));
        assert!(matches!(op.embed(&full), Err(Error::Shape(_))));
    }

    #[test]
    fn projector_onto_basis_and_errors() {
        let l = StateVector::basis(Space::single(path()), &["L"]).unwrap();
        let p = Operator::projector_onto(&l).unwrap();
        assert_eq!(p.matrix(), &[ONE, ZERO, ZERO, ZERO]);
        let unnormalized = l.scale(C64::from(2.0));
        assert!(matches!(
            Operator::projector_onto(&unnormalized),
            Err(Error::Normalization { .. })
        ));
    }

    #[test]
    fn kron_matches_embed() {
        let a = Operator::basis_projector(&path(), "R").unwrap();
        let b = Operator::from_rows(Space::single(pol()), &[vec![ZERO, -I], vec![I, ZERO]]).unwrap();
        let full = Space::new(vec![path(), pol()]).unwrap();
        let k = a.kron(&b).unwrap();
        let e = a.embed(&full).unwrap().compose(&b.embed(&full).unwrap()).unwrap();
        assert!(k.max_abs_diff(&e).unwrap() <= TOL);
    }

    #[test]
    fn permuted_rejects_bad_orders() {
        let s = StateVector::basis(Space::new(vec![path(), pol()]).unwrap(), &["L", "H"]).unwrap();
        assert!(s.permuted(&["path"]).is_err());
        assert!(s.permuted(&["path", "path"]).is_err());
        assert!(s.permuted(&["path", "nope"]).is_err());
    }

    #[test]
    fn json_debug_form() {
        let s = StateVector::basis(Space::single(path()), &["R"]).unwrap();
        let v = s.to_json();
        assert_eq!(v["space"][0]["name"], "path");
        assert_eq!(v["space"][0]["labels"][1], "R");
        assert_eq!(v["amplitudes"][1][0], 1.0);
        assert_eq!(v["amplitudes"][0][1], 0.0);
    }

    #[test]
    fn display_lists_support() {
        let s = StateVector::basis(Space::new(vec![path(), pol()]).unwrap(), &["R", "V"]).unwrap();
        assert_eq!(s.to_string(), "(1.000000+0.000000i)|R,V⟩");
    }
}
