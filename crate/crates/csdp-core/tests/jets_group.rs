//! The 2-jet group is the centered product of `GL(n)` with symmetric
//! `(1,2)`-tensors: conversion commutes with composition and inversion, and
//! jet composition reproduces actual polynomial composition up to the cubic
//! Taylor remainder.

use csdp_core::algebra::LinearSpace;
use csdp_core::csdp::ActionPair;
use csdp_core::instances::GlT12;
use csdp_core::jets::{Jet2, PolyMap2};
use csdp_core::sampling;

fn random_jet(n: usize, rng: &mut impl rand::Rng) -> Jet2 {
    Jet2::new(
        sampling::random_group_matrix(n, rng),
        sampling::random_sym12(n, rng),
    )
    .unwrap()
}

#[test]
fn conversion_intertwines_composition() {
    let act = GlT12::symmetric(3).unwrap();
    let mut rng = sampling::rng_from_seed(31);
    for _ in 0..20 {
        let a = random_jet(3, &mut rng);
        let b = random_jet(3, &mut rng);
        let via_jets = a.compose(&b).unwrap().into_group_element();
        let via_group = act
            .compose(
                &a.clone().into_group_element(),
                &b.clone().into_group_element(),
            )
            .unwrap();
        assert!(via_jets.g.sub(&via_group.g).max_abs() <= 1e-12);
        assert!(via_jets.v.sub(&via_group.v).max_abs() <= 1e-12);
    }
}

#[test]
fn conversion_intertwines_inversion() {
    let act = GlT12::symmetric(2).unwrap();
    let mut rng = sampling::rng_from_seed(32);
    for _ in 0..20 {
        let a = random_jet(2, &mut rng);
        let via_jets = a.inverse().unwrap().into_group_element();
        let via_group = act.inverse(&a.clone().into_group_element()).unwrap();
        assert!(via_jets.g.sub(&via_group.g).max_abs() <= 1e-10);
        assert!(via_jets.v.sub(&via_group.v).max_abs() <= 1e-10);
    }
}

#[test]
fn group_element_round_trip() {
    let mut rng = sampling::rng_from_seed(33);
    let jet = random_jet(2, &mut rng);
    let back = Jet2::from_group_element(jet.clone().into_group_element()).unwrap();
    assert_eq!(jet, back);
}

#[test]
fn jet_composition_is_associative() {
    let mut rng = sampling::rng_from_seed(34);
    for _ in 0..10 {
        let a = random_jet(2, &mut rng);
        let b = random_jet(2, &mut rng);
        let c = random_jet(2, &mut rng);
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert!(left.a1().sub(right.a1()).max_abs() <= 1e-11);
        assert!(left.a2().sub(right.a2()).max_abs() <= 1e-11);
    }
}

/// Evaluating the composed jet against the honest composition of the two
/// quadratic maps leaves only the cubic Taylor remainder, so shrinking the
/// evaluation point by half must shrink the mismatch by about eight.
#[test]
fn composition_error_is_third_order_in_the_point() {
    let mut rng = sampling::rng_from_seed(35);
    let outer = random_jet(2, &mut rng);
    let inner = random_jet(2, &mut rng);
    let outer_map = PolyMap2::from_jet(&outer);
    let inner_map = PolyMap2::from_jet(&inner);
    let composed = PolyMap2::from_jet(&outer.compose(&inner).unwrap());

    let mismatch = |scale: f64| -> f64 {
        let x = [0.3 * scale, -0.2 * scale];
        let honest = outer_map.eval(&inner_map.eval(&x).unwrap()).unwrap();
        let truncated = composed.eval(&x).unwrap();
        honest
            .iter()
            .zip(&truncated)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    };

    let coarse = mismatch(1.0);
    let fine = mismatch(0.5);
    assert!(coarse > 1e-6, "mismatch too small to measure: {coarse}");
    let ratio = coarse / fine;
    assert!(
        (6.0..=10.0).contains(&ratio),
        "cubic remainder should scale by ~8, got {ratio}"
    );
}

#[test]
fn quadratic_part_of_composition_stays_symmetric() {
    let mut rng = sampling::rng_from_seed(36);
    let a = random_jet(3, &mut rng);
    let b = random_jet(3, &mut rng);
    let composed = a.compose(&b).unwrap();
    assert!(composed.a2().is_symmetric());
    assert_eq!(composed.a2().max_asymmetry(), 0.0);
    let inverted = a.inverse().unwrap();
    assert!(inverted.a2().is_symmetric());
    assert_eq!(inverted.a2().max_asymmetry(), 0.0);
}

#[test]
fn identity_jet_is_group_identity() {
    let act = GlT12::symmetric(2).unwrap();
    let id = Jet2::identity(2).into_group_element();
    let group_id = act.identity_element();
    assert_eq!(id.g, group_id.g);
    assert!(id.v.sub(&group_id.v).max_abs() == 0.0);
}
