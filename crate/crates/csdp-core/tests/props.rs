//! Randomized invariants over wider input distributions than the seeded
//! suites cover.

use csdp_core::algebra::{LinearSpace, Matrix, Tensor12, Tensor21};
use csdp_core::csdp::{ActionPair, AlgebraElement};
use csdp_core::instances::{GlMat, GlT12};
use proptest::prelude::*;

fn entries(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, len)
}

fn group_matrix(flat: &[f64]) -> Matrix {
    Matrix::from_flat(2, flat).unwrap().scale(0.5).exp()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn matrix_group_inverse_round_trip(gs in entries(4), vs in entries(4)) {
        let act = GlMat::new(2).unwrap();
        let a = csdp_core::csdp::GroupElement::new(
            group_matrix(&gs),
            Matrix::from_flat(2, &vs).unwrap(),
        );
        let prod = act.compose(&a, &act.inverse(&a).unwrap()).unwrap();
        let id = act.identity_element();
        prop_assert!(prod.g.sub(&id.g).max_abs() < 1e-9);
        prop_assert!(prod.v.sub(&id.v).max_abs() < 1e-9);
    }

    #[test]
    fn tensor_group_inverse_round_trip(gs in entries(4), vs in entries(8)) {
        let act = GlT12::full(2).unwrap();
        let a = csdp_core::csdp::GroupElement::new(
            group_matrix(&gs),
            Tensor12::from_flat(2, &vs).unwrap(),
        );
        let prod = act.compose(&act.inverse(&a).unwrap(), &a).unwrap();
        let id = act.identity_element();
        prop_assert!(prod.g.sub(&id.g).max_abs() < 1e-9);
        prop_assert!(prod.v.sub(&id.v).max_abs() < 1e-9);
    }

    #[test]
    fn bracket_is_antisymmetric(x_g in entries(4), x_v in entries(4), y_g in entries(4), y_v in entries(4)) {
        let act = GlMat::new(2).unwrap();
        let x = AlgebraElement::new(
            Matrix::from_flat(2, &x_g).unwrap(),
            Matrix::from_flat(2, &x_v).unwrap(),
        );
        let y = AlgebraElement::new(
            Matrix::from_flat(2, &y_g).unwrap(),
            Matrix::from_flat(2, &y_v).unwrap(),
        );
        let forward = act.bracket(&x, &y).unwrap();
        let backward = act.bracket(&y, &x).unwrap();
        prop_assert!(forward.add(&backward).max_abs() < 1e-12);
    }

    #[test]
    fn bracket_satisfies_jacobi(x_g in entries(4), y_g in entries(4), z_g in entries(4), v in entries(4)) {
        let act = GlMat::new(2).unwrap();
        let x = AlgebraElement::new(Matrix::from_flat(2, &x_g).unwrap(), Matrix::from_flat(2, &v).unwrap());
        let y = AlgebraElement::new(Matrix::from_flat(2, &y_g).unwrap(), Matrix::zeros(2));
        let z = AlgebraElement::new(Matrix::from_flat(2, &z_g).unwrap(), Matrix::zeros(2));
        let a = act.bracket(&x, &act.bracket(&y, &z).unwrap()).unwrap();
        let b = act.bracket(&y, &act.bracket(&z, &x).unwrap()).unwrap();
        let c = act.bracket(&z, &act.bracket(&x, &y).unwrap()).unwrap();
        prop_assert!(a.add(&b).add(&c).max_abs() < 1e-11);
    }

    #[test]
    fn heart_is_dual_to_the_commutator_action(xi in entries(4), alpha in entries(8), v in entries(8)) {
        let act = GlT12::full(2).unwrap();
        let xi = Matrix::from_flat(2, &xi).unwrap();
        let alpha = Tensor21::from_flat(2, &alpha).unwrap();
        let v = Tensor12::from_flat(2, &v).unwrap();
        let lhs = act.pair(&act.heart(&xi, &alpha).unwrap(), &v).unwrap();
        let commutator = act
            .inf_left(&xi, &v)
            .unwrap()
            .sub(&act.inf_right(&v, &xi).unwrap());
        let rhs = act.pair(&alpha, &commutator).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-10);
    }

    #[test]
    fn diamond_is_dual_to_the_commutator_action(xi in entries(4), alpha in entries(8), v in entries(8)) {
        let act = GlT12::full(2).unwrap();
        let xi = Matrix::from_flat(2, &xi).unwrap();
        let alpha = Tensor21::from_flat(2, &alpha).unwrap();
        let v = Tensor12::from_flat(2, &v).unwrap();
        let lhs = act.diamond(&v, &alpha).unwrap().dot(&xi);
        // Diamond is oriented opposite to heart: v·xi - xi·v.
        let commutator = act
            .inf_right(&v, &xi)
            .unwrap()
            .sub(&act.inf_left(&xi, &v).unwrap());
        let rhs = act.pair(&alpha, &commutator).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-10);
    }

    #[test]
    fn conjugation_by_inverse_undoes_conjugation(gs in entries(4), vs in entries(4), xs in entries(4), us in entries(4)) {
        let act = GlMat::new(2).unwrap();
        let a = csdp_core::csdp::GroupElement::new(
            group_matrix(&gs),
            Matrix::from_flat(2, &vs).unwrap(),
        );
        let b = csdp_core::csdp::GroupElement::new(
            group_matrix(&xs),
            Matrix::from_flat(2, &us).unwrap(),
        );
        let there = act.conjugate(&a, &b).unwrap();
        let back = act.conjugate(&act.inverse(&a).unwrap(), &there).unwrap();
        prop_assert!(back.g.sub(&b.g).max_abs() < 1e-8);
        prop_assert!(back.v.sub(&b.v).max_abs() < 1e-8);
    }

    #[test]
    fn adjoint_respects_the_bracket(gs in entries(4), vs in entries(4), x_g in entries(4), x_v in entries(4), y_g in entries(4), y_v in entries(4)) {
        let act = GlMat::new(2).unwrap();
        let a = csdp_core::csdp::GroupElement::new(
            group_matrix(&gs),
            Matrix::from_flat(2, &vs).unwrap(),
        );
        let x = AlgebraElement::new(
            Matrix::from_flat(2, &x_g).unwrap(),
            Matrix::from_flat(2, &x_v).unwrap(),
        );
        let y = AlgebraElement::new(
            Matrix::from_flat(2, &y_g).unwrap(),
            Matrix::from_flat(2, &y_v).unwrap(),
        );
        let lhs = act.adjoint(&a, &act.bracket(&x, &y).unwrap()).unwrap();
        let rhs = act
            .bracket(&act.adjoint(&a, &x).unwrap(), &act.adjoint(&a, &y).unwrap())
            .unwrap();
        prop_assert!(lhs.sub(&rhs).max_abs() < 1e-8);
    }

    #[test]
    fn pairing_is_bilinear(alpha in entries(8), u in entries(8), v in entries(8), c in -2.0f64..2.0) {
        let act = GlT12::full(2).unwrap();
        let alpha = Tensor21::from_flat(2, &alpha).unwrap();
        let u = Tensor12::from_flat(2, &u).unwrap();
        let v = Tensor12::from_flat(2, &v).unwrap();
        let lhs = act.pair(&alpha, &u.axpy(c, &v)).unwrap();
        let rhs = act.pair(&alpha, &u).unwrap() + c * act.pair(&alpha, &v).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-10);
    }
}
