//! Flow-level checks of the Euler-Poincare integrator: conserved quantities,
//! fourth-order convergence, reconstruction consistency, and failure modes.

use csdp_core::algebra::{LinearSpace, Matrix};
use csdp_core::csdp::{ActionPair, AlgebraElement};
use csdp_core::dynamics::{
    action_gradient_check, integrate, EpSetup, Orientation, QuadraticLagrangian, VariationCurve,
};
use csdp_core::instances::{GlMat, GlT12};
use csdp_core::sampling;
use csdp_core::Error;

fn scaled_algebra<A: ActionPair>(act: &A, seed: u64, scale: f64) -> AlgebraElement<A::V> {
    let mut rng = sampling::rng_from_seed(seed);
    act.random_algebra(&mut rng).scale(scale)
}

#[test]
fn right_flow_conserves_energy_and_transported_momentum() {
    let act = GlMat::new(2).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let xi0 = scaled_algebra(&act, 41, 0.4);
    let setup = EpSetup::Right { xi0 };
    let flow = integrate(&act, &l, &setup, 0.01, 100).unwrap();

    assert_eq!(flow.orientation, Orientation::Right);
    assert_eq!(flow.samples.len(), 101);
    assert!(flow.max_energy_drift() < 1e-8);
    assert!(flow.max_noether_residual() < 1e-8);

    // The flow must actually move, otherwise conservation is vacuous.
    let moved = flow.last().momentum.sub(&flow.initial().momentum).max_abs();
    assert!(moved > 1e-3, "momentum barely moved: {moved}");
}

#[test]
fn left_flow_conserves_energy_and_transported_momentum() {
    let act = GlT12::symmetric(2).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let xi0 = scaled_algebra(&act, 42, 0.4);
    let setup = EpSetup::Left { xi0 };
    let flow = integrate(&act, &l, &setup, 0.01, 100).unwrap();

    assert_eq!(flow.orientation, Orientation::Left);
    assert!(flow.max_energy_drift() < 1e-8);
    assert!(flow.max_noether_residual() < 1e-8);
}

#[test]
fn left_and_right_flows_differ() {
    let act = GlMat::new(2).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let xi0 = scaled_algebra(&act, 43, 0.4);
    let right = integrate(&act, &l, &EpSetup::Right { xi0: xi0.clone() }, 0.01, 100).unwrap();
    let left = integrate(&act, &l, &EpSetup::Left { xi0 }, 0.01, 100).unwrap();
    let gap = right.last().momentum.sub(&left.last().momentum).max_abs();
    assert!(gap > 1e-3, "orientations produced the same flow: {gap}");
}

#[test]
fn halving_the_step_divides_drift_by_about_sixteen() {
    let act = GlMat::new(2).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let xi0 = scaled_algebra(&act, 44, 0.9);
    let coarse = integrate(&act, &l, &EpSetup::Right { xi0: xi0.clone() }, 0.02, 50).unwrap();
    let fine = integrate(&act, &l, &EpSetup::Right { xi0 }, 0.01, 100).unwrap();

    let coarse_drift = coarse.max_energy_drift();
    let fine_drift = fine.max_energy_drift();
    assert!(
        coarse_drift > 1e-12,
        "drift too close to rounding floor to compare: {coarse_drift}"
    );
    let ratio = coarse_drift / fine_drift;
    assert!(
        ratio > 10.0,
        "energy drift ratio under step halving was {ratio}, expected about 16"
    );

    let residual_ratio = coarse.max_noether_residual() / fine.max_noether_residual();
    assert!(
        residual_ratio > 10.0,
        "momentum residual ratio under step halving was {residual_ratio}"
    );
}

#[test]
fn advected_scalar_flow_matches_exponential_solution() {
    // For n = 1 the matrix momentum is constant, the advected value obeys
    // dv/dt = 2 xi v, and the flow is v(t) = v0 exp(2 xi t) exactly.
    let act = GlMat::new(1).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let xi0_g = Matrix::diagonal(&[0.5]);
    let v0 = Matrix::diagonal(&[2.0]);

    let error_at = |step: f64, steps: usize| -> f64 {
        let setup = EpSetup::Advected {
            xi0_g: xi0_g.clone(),
            v0: v0.clone(),
        };
        let flow = integrate(&act, &l, &setup, step, steps).unwrap();
        let exact = 2.0 * (1.0f64).exp();
        (flow.last().group.v[(0, 0)] - exact).abs()
    };

    let coarse = error_at(0.1, 10);
    let fine = error_at(0.05, 20);
    assert!(coarse < 1e-4, "coarse error too large: {coarse}");
    assert!(coarse > 1e-9, "coarse error too small to measure order");
    let ratio = coarse / fine;
    assert!(
        (12.0..=20.0).contains(&ratio),
        "fourth-order step halving should give ratio near 16, got {ratio}"
    );
}

#[test]
fn advected_tensor_flow_keeps_pulled_back_value_and_symmetry() {
    let act = GlT12::symmetric(2).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let mut rng = sampling::rng_from_seed(45);
    let xi0_g = sampling::random_matrix(2, &mut rng).scale(0.4);
    let v0 = sampling::random_sym12(2, &mut rng);

    let run = |step: f64, steps: usize| {
        integrate(
            &act,
            &l,
            &EpSetup::Advected {
                xi0_g: xi0_g.clone(),
                v0: v0.clone(),
            },
            step,
            steps,
        )
        .unwrap()
    };

    let coarse = run(0.02, 50);
    assert!(coarse.max_noether_residual() < 1e-6);
    for s in &coarse.samples {
        assert!(s.group.v.is_symmetric());
        assert_eq!(s.group.v.max_asymmetry(), 0.0);
    }

    let fine = run(0.01, 100);
    let ratio = coarse.max_noether_residual() / fine.max_noether_residual();
    assert!(
        ratio > 10.0,
        "pulled-back residual should drop fourth order, ratio {ratio}"
    );
}

#[test]
fn reconstruction_matches_trivialized_velocity() {
    let act = GlMat::new(2).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let step = 0.01;

    for orientation in [Orientation::Right, Orientation::Left] {
        let xi0 = scaled_algebra(&act, 46, 0.4);
        let setup = match orientation {
            Orientation::Right => EpSetup::Right { xi0 },
            _ => EpSetup::Left { xi0 },
        };
        let flow = integrate(&act, &l, &setup, step, 60).unwrap();

        // Central differences of the reconstructed path should recover the
        // recorded velocity through the matching trivialization.
        for k in (5..55).step_by(7) {
            let prev = &flow.samples[k - 1];
            let next = &flow.samples[k + 1];
            let here = &flow.samples[k];
            let dg = next.group.g.sub(&prev.group.g).scale(1.0 / (2.0 * step));
            let dv = next.group.v.sub(&prev.group.v).scale(1.0 / (2.0 * step));
            let (expected_dg, expected_dv) = match orientation {
                Orientation::Right => (
                    here.velocity.xi_g.multiply(&here.group.g).unwrap(),
                    act.inf_left(&here.velocity.xi_g, &here.group.v)
                        .unwrap()
                        .add(&act.right_act(&here.velocity.xi_v, &here.group.g).unwrap()),
                ),
                _ => (
                    here.group.g.multiply(&here.velocity.xi_g).unwrap(),
                    act.left_act(&here.group.g, &here.velocity.xi_v)
                        .unwrap()
                        .add(&act.inf_right(&here.group.v, &here.velocity.xi_g).unwrap()),
                ),
            };
            assert!(dg.sub(&expected_dg).max_abs() < 1e-3);
            assert!(dv.sub(&expected_dv).max_abs() < 1e-3);
        }
    }
}

#[test]
fn action_gradient_vanishes_at_second_order_on_solutions() {
    let act = GlMat::new(2).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let xi0 = scaled_algebra(&act, 47, 0.3);
    let total_time = 1.0;

    let coefficient_at = |steps: usize| -> f64 {
        let step = total_time / steps as f64;
        let flow = integrate(&act, &l, &EpSetup::Right { xi0: xi0.clone() }, step, steps).unwrap();
        let mut rng = sampling::rng_from_seed(48);
        let curves: Vec<VariationCurve<Matrix>> = (0..3)
            .map(|_| {
                VariationCurve::sine_modes(&act, steps + 1, total_time, 2, 1.0, &mut rng).unwrap()
            })
            .collect();
        action_gradient_check(&act, &l, &flow, &curves)
            .unwrap()
            .into_iter()
            .fold(0.0, |acc, c| acc.max(c.abs()))
    };

    let coarse = coefficient_at(80);
    let fine = coefficient_at(160);
    assert!(coarse < 1e-3, "gradient coefficient too large: {coarse}");
    assert!(coarse > 1e-12, "coefficient at rounding floor: {coarse}");
    let ratio = coarse / fine;
    assert!(
        (2.5..=6.0).contains(&ratio),
        "trapezoid refinement should shrink coefficients about fourfold, got {ratio}"
    );
}

#[test]
fn integrate_rejects_bad_arguments() {
    let act = GlMat::new(2).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let xi0 = scaled_algebra(&act, 49, 0.4);

    let bad_step = integrate(&act, &l, &EpSetup::Right { xi0: xi0.clone() }, 0.0, 10);
    assert!(matches!(bad_step, Err(Error::InvalidArgument(_))));

    let bad_steps = integrate(&act, &l, &EpSetup::Right { xi0: xi0.clone() }, 0.1, 0);
    assert!(matches!(bad_steps, Err(Error::InvalidArgument(_))));

    let short_weights = QuadraticLagrangian::new(vec![1.0; 3], vec![1.0; 4]).unwrap();
    let bad_dims = integrate(&act, &short_weights, &EpSetup::Right { xi0 }, 0.1, 10);
    assert!(matches!(bad_dims, Err(Error::DimensionMismatch { .. })));
}

#[test]
fn runaway_flow_reports_the_failing_step() {
    let act = GlMat::new(2).unwrap();
    let l = QuadraticLagrangian::isotropic(&act);
    let xi0 = scaled_algebra(&act, 50, 5.0);
    let result = integrate(&act, &l, &EpSetup::Right { xi0 }, 50.0, 10);
    match result {
        Err(Error::SingularReconstruction { step }) => {
            assert!((1..=10).contains(&step), "step index out of range: {step}");
        }
        other => panic!("expected a reconstruction failure, got {other:?}"),
    }
}
