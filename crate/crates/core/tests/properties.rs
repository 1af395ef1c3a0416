use proptest::prelude::*;

use wpsep::optical_network::{fig1_circuit, Circuit};
use wpsep::qstate::{Operator, Space, SpaceLabel, StateVector, C64, ONE};
use wpsep::weakvalue::{weak_value, PrePostPair};
use wpsep::wp_states::{
    complementarity_sums, predicted_weak_value, separation_weak_values, Representation, WpParams,
    OBSERVABLES,
};

const EPS: f64 = 1e-10;

fn factor(name: &str, dim: usize) -> SpaceLabel {
    let labels: Vec<String> = (0..dim).map(|i| i.to_string()).collect();
    SpaceLabel::new(name, &labels).unwrap()
}

fn complex_vec(len: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
        .prop_map(|v| v.into_iter().map(|(re, im)| C64::new(re, im)).collect())
}

fn state_on(space: Space) -> impl Strategy<Value = StateVector> {
    complex_vec(space.dim())
        .prop_filter("non-zero", |v| v.iter().map(|c| c.norm_sqr()).sum::<f64>() > 1e-3)
        .prop_map(move |v| StateVector::new(space.clone(), v).unwrap().normalized().unwrap())
}

fn operator_on(space: Space) -> impl Strategy<Value = Operator> {
    let n = space.dim();
    complex_vec(n * n).prop_map(move |m| Operator::new(space.clone(), m).unwrap())
}

/// Gram-Schmidt on the columns of a random matrix.
fn unitary_on(space: Space) -> impl Strategy<Value = Operator> {
    let n = space.dim();
    complex_vec(n * n)
        .prop_filter_map("full rank", move |m| {
            let mut cols: Vec<Vec<C64>> = Vec::new();
            for j in 0..n {
                let mut v: Vec<C64> = (0..n).map(|i| m[i * n + j]).collect();
                for u in &cols {
                    let p: C64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                    for (x, y) in v.iter_mut().zip(u) {
                        *x -= p * y;
                    }
                }
                let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
                if norm < 1e-3 {
                    return None;
                }
                cols.push(v.into_iter().map(|c| c / norm).collect());
            }
            let mut out = vec![C64::default(); n * n];
            for (j, c) in cols.iter().enumerate() {
                for i in 0..n {
                    out[i * n + j] = c[i];
                }
            }
            Some(out)
        })
        .prop_map(move |m| Operator::new(space.clone(), m).unwrap())
}

fn qubit_pair() -> Space {
    Space::new(vec![factor("a", 2), factor("b", 3)]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unitaries_preserve_norm(u in unitary_on(qubit_pair()), s in state_on(qubit_pair())) {
        prop_assert!(u.is_unitary(EPS));
        prop_assert!((u.apply(&s).unwrap().norm() - 1.0).abs() <= EPS);
    }

    #[test]
    fn projectors_are_idempotent_and_hermitian(s in state_on(qubit_pair())) {
        let p = Operator::projector_onto(&s).unwrap();
        prop_assert!(p.is_projector(EPS));
        prop_assert!(p.is_hermitian(EPS));
        prop_assert!((p.trace() - ONE).norm() <= EPS);
        prop_assert!(p.complement().is_projector(EPS));
    }

    #[test]
    fn tensor_is_associative_and_normalized(
        a in state_on(Space::single(factor("a", 2))),
        b in state_on(Space::single(factor("b", 3))),
        c in state_on(Space::single(factor("c", 2))),
    ) {
        let left = a.tensor(&b).unwrap().tensor(&c).unwrap();
        let right = a.tensor(&b.tensor(&c).unwrap()).unwrap();
        prop_assert_eq!(left.space(), right.space());
        for (x, y) in left.amplitudes().iter().zip(right.amplitudes()) {
            prop_assert!((x - y).norm() <= EPS);
        }
        prop_assert!(left.is_normalized());
    }

    #[test]
    fn adjoint_moves_across_inner_product(
        o in operator_on(qubit_pair()),
        a in state_on(qubit_pair()),
        b in state_on(qubit_pair()),
    ) {
        let lhs = a.inner(&o.apply(&b).unwrap()).unwrap();
        let rhs = o.adjoint().apply(&a).unwrap().inner(&b).unwrap();
        prop_assert!((lhs - rhs).norm() <= EPS);
        prop_assert!((a.inner(&b).unwrap() - b.inner(&a).unwrap().conj()).norm() <= EPS);
    }

    #[test]
    fn weak_value_is_linear(
        pre in state_on(qubit_pair()),
        post in state_on(qubit_pair()),
        a in operator_on(qubit_pair()),
        b in operator_on(qubit_pair()),
        x in (-2.0f64..2.0, -2.0f64..2.0),
        y in (-2.0f64..2.0, -2.0f64..2.0),
    ) {
        let pair = PrePostPair::new(pre, post).unwrap();
        prop_assume!(pair.overlap().norm() > 1e-3);
        let (x, y) = (C64::new(x.0, x.1), C64::new(y.0, y.1));
        let combo = a.scale(x).add(&b.scale(y)).unwrap();
        let wa = weak_value(&pair, &a).unwrap().value;
        let wb = weak_value(&pair, &b).unwrap().value;
        let wc = weak_value(&pair, &combo).unwrap().value;
        let scale = 1.0 + wa.norm() + wb.norm();
        prop_assert!((wc - (x * wa + y * wb)).norm() <= EPS * scale);
    }

    #[test]
    fn basis_projectors_sum_to_one(pre in state_on(qubit_pair()), post in state_on(qubit_pair())) {
        let pair = PrePostPair::new(pre, post).unwrap();
        prop_assume!(pair.overlap().norm() > 1e-3);
        let space = qubit_pair();
        for f in space.factors() {
            let total: C64 = f
                .labels()
                .iter()
                .map(|l| {
                    let p = Operator::basis_projector(f, l).unwrap().embed(&space).unwrap();
                    weak_value(&pair, &p).unwrap().value
                })
                .sum();
            prop_assert!((total - ONE).norm() <= 1e-9);
        }
    }

    #[test]
    fn weak_value_ignores_global_phases(
        pre in state_on(qubit_pair()),
        post in state_on(qubit_pair()),
        o in operator_on(qubit_pair()),
        t1 in 0.0f64..6.3,
        t2 in 0.0f64..6.3,
    ) {
        let pair = PrePostPair::new(pre.clone(), post.clone()).unwrap();
        prop_assume!(pair.overlap().norm() > 1e-3);
        let turned = PrePostPair::new(
            pre.scale(C64::from_polar(1.0, t1)),
            post.scale(C64::from_polar(1.0, t2)),
        )
        .unwrap();
        let w0 = weak_value(&pair, &o).unwrap().value;
        let w1 = weak_value(&turned, &o).unwrap().value;
        prop_assert!((w0 - w1).norm() <= EPS * (1.0 + w0.norm()));
    }

    #[test]
    fn network_conserves_probability(
        input in state_on(fig1_circuit(&WpParams::default()).input_space()),
        phi1 in -3.2f64..3.2,
        phi1p in -3.2f64..3.2,
    ) {
        let circuit: Circuit = fig1_circuit(&WpParams::with_phases(0.3, phi1, phi1p));
        let r = circuit.simulate(&input).unwrap();
        prop_assert!((r.total() - 1.0).abs() <= EPS);
        for p in r.detector_probs.values() {
            prop_assert!(*p >= -EPS);
        }
        let mut last = 1.0 + EPS;
        for t in &r.trace {
            prop_assert!(t.norm_after <= last + EPS);
            last = t.norm_after;
        }
    }

    #[test]
    fn attribute_weak_values_follow_closed_form(
        alpha in 0.0f64..std::f64::consts::FRAC_PI_2,
        phi1 in -3.2f64..3.2,
        phi1p in -3.2f64..3.2,
    ) {
        let params = WpParams::with_phases(alpha, phi1, phi1p);
        let reports = separation_weak_values(&params, Representation::Attribute).unwrap();
        for ((attr, arm), r) in OBSERVABLES.iter().zip(&reports) {
            prop_assert!((r.value - C64::from(predicted_weak_value(*attr, *arm, alpha))).norm() <= EPS);
        }
        let (s1, s2) = complementarity_sums(&reports).unwrap();
        prop_assert!((s1 - ONE).norm() <= EPS && (s2 - ONE).norm() <= EPS);
    }
}
