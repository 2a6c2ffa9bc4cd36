use alloc::vec::Vec;

use super::action_pair::ActionPair;
use super::elements::{AlgebraElement, GroupElement};
use crate::algebra::{LinearSpace, Matrix, Tolerances, FD_STEP};
use crate::sampling;
use crate::scalar;

/// Result of one law checked over a batch of random samples.
#[derive(Debug, Clone, PartialEq)]
pub struct LawCheck {
    /// Identifier of the law, unique within a report.
    pub name: &'static str,
    /// Largest violation seen across all samples.
    pub max_violation: f64,
    /// Bound the violation is held to.
    pub tolerance: f64,
}

impl LawCheck {
    /// Whether the violation stayed within tolerance (NaN fails).
    pub fn passed(&self) -> bool {
        self.max_violation <= self.tolerance
    }
}

/// A batch of law checks, sorted by name.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    /// Individual checks.
    pub checks: Vec<LawCheck>,
}

impl SuiteReport {
    /// Whether every check passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    /// The checks that failed.
    pub fn failures(&self) -> Vec<&LawCheck> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(b.name));
    }
}

struct Recorder {
    name: &'static str,
    worst: f64,
}

impl Recorder {
    fn new(name: &'static str) -> Self {
        Recorder { name, worst: 0.0 }
    }

    fn see(&mut self, violation: f64) {
        if self.worst.is_nan() {
            return;
        }
        if violation.is_nan() || violation > self.worst {
            self.worst = violation;
        }
    }

    fn finish(self, tolerance: f64) -> LawCheck {
        LawCheck {
            name: self.name,
            max_violation: self.worst,
            tolerance,
        }
    }
}

fn diff<T: LinearSpace>(a: &T, b: &T) -> f64 {
    a.sub(b).max_abs()
}

/// Check the action laws of an [`ActionPair`] on random samples: identity
/// and composition for both actions, commutation of the two, and agreement
/// of the infinitesimal actions with central differences of the full ones.
///
/// Composition of the product group is associative exactly when these laws
/// hold, so this is the gatekeeper for a proposed instance.
pub fn verify_action_pair<A: ActionPair>(
    act: &A,
    tol: &Tolerances,
    seed: u64,
    samples: usize,
) -> SuiteReport {
    let mut rng = sampling::rng_from_seed(seed);
    let n = act.n();

    let mut left_id = Recorder::new("action_left_identity");
    let mut right_id = Recorder::new("action_right_identity");
    let mut left_comp = Recorder::new("action_left_compose");
    let mut right_comp = Recorder::new("action_right_compose");
    let mut commute = Recorder::new("action_commutation");
    let mut inf_left_fd = Recorder::new("action_inf_left_fd");
    let mut inf_right_fd = Recorder::new("action_inf_right_fd");

    let eye = Matrix::identity(n);
    for _ in 0..samples {
        let g = sampling::random_group_matrix(n, &mut rng);
        let h = sampling::random_group_matrix(n, &mut rng);
        let xi = sampling::random_matrix(n, &mut rng);
        let v = act.random_v(&mut rng);

        let ok = (|| {
            left_id.see(diff(&act.left_act(&eye, &v)?, &v));
            right_id.see(diff(&act.right_act(&v, &eye)?, &v));

            let gh = g.multiply(&h)?;
            left_comp.see(diff(
                &act.left_act(&g, &act.left_act(&h, &v)?)?,
                &act.left_act(&gh, &v)?,
            ));
            right_comp.see(diff(
                &act.right_act(&act.right_act(&v, &g)?, &h)?,
                &act.right_act(&v, &gh)?,
            ));
            commute.see(diff(
                &act.right_act(&act.left_act(&g, &v)?, &h)?,
                &act.left_act(&g, &act.right_act(&v, &h)?)?,
            ));

            let h_step = FD_STEP;
            let fd_left = act
                .left_act(&xi.scale(h_step).exp(), &v)?
                .sub(&act.left_act(&xi.scale(-h_step).exp(), &v)?)
                .scale(0.5 / h_step);
            inf_left_fd.see(diff(&fd_left, &act.inf_left(&xi, &v)?));

            let fd_right = act
                .right_act(&v, &xi.scale(h_step).exp())?
                .sub(&act.right_act(&v, &xi.scale(-h_step).exp())?)
                .scale(0.5 / h_step);
            inf_right_fd.see(diff(&fd_right, &act.inf_right(&v, &xi)?));
            Ok::<(), crate::Error>(())
        })();
        if ok.is_err() {
            // An action that errors on valid samples is as broken as one
            // that violates a law.
            for rec in [
                &mut left_id,
                &mut right_id,
                &mut left_comp,
                &mut right_comp,
                &mut commute,
                &mut inf_left_fd,
                &mut inf_right_fd,
            ] {
                rec.see(f64::NAN);
            }
        }
    }

    let mut report = SuiteReport {
        checks: alloc::vec![
            left_id.finish(tol.exact_tol),
            right_id.finish(tol.exact_tol),
            left_comp.finish(tol.exact_tol),
            right_comp.finish(tol.exact_tol),
            commute.finish(tol.exact_tol),
            inf_left_fd.finish(tol.fd_tol),
            inf_right_fd.finish(tol.fd_tol),
        ],
    };
    report.sort();
    report
}

/// Check the derived structure of the product on random samples: group
/// axioms, the adjoint representation against conjugation, the bracket
/// against the adjoint flow, Jacobi, and the duality identities defining
/// the coadjoint, heart, and diamond operators.
///
/// Conjugation chains use exponential samples at half scale so that the
/// round-off carried by products of several group elements stays well below
/// the exact tolerance.
pub fn structure_suite<A: ActionPair>(
    act: &A,
    tol: &Tolerances,
    seed: u64,
    samples: usize,
) -> SuiteReport {
    let mut report = verify_action_pair(act, tol, seed, samples);
    let mut rng = sampling::rng_from_seed(seed.wrapping_add(1));
    let n = act.n();

    let mut assoc = Recorder::new("group_associativity");
    let mut identity = Recorder::new("group_identity");
    let mut inverse = Recorder::new("group_inverse");
    let mut ad_fd = Recorder::new("adjoint_conjugation_fd");
    let mut ad_hom = Recorder::new("adjoint_homomorphism");
    let mut antisym = Recorder::new("bracket_antisymmetry");
    let mut jacobi = Recorder::new("bracket_jacobi");
    let mut bracket_fd = Recorder::new("bracket_adjoint_fd");
    let mut coad_dual = Recorder::new("coadjoint_duality");
    let mut heart_dual = Recorder::new("heart_duality");
    let mut diamond_dual = Recorder::new("diamond_duality");

    let e = act.identity_element();
    for _ in 0..samples {
        let result = (|| {
            let a = act.random_element(&mut rng);
            let b = act.random_element(&mut rng);
            let c = act.random_element(&mut rng);

            let ab_c = act.compose(&act.compose(&a, &b)?, &c)?;
            let a_bc = act.compose(&a, &act.compose(&b, &c)?)?;
            assoc.see(scalar::max(diff(&ab_c.g, &a_bc.g), diff(&ab_c.v, &a_bc.v)));

            let ea = act.compose(&e, &a)?;
            let ae = act.compose(&a, &e)?;
            identity.see(scalar::max(
                scalar::max(diff(&ea.g, &a.g), diff(&ea.v, &a.v)),
                scalar::max(diff(&ae.g, &a.g), diff(&ae.v, &a.v)),
            ));

            let a_inv = act.inverse(&a)?;
            let left = act.compose(&a_inv, &a)?;
            let right = act.compose(&a, &a_inv)?;
            inverse.see(scalar::max(
                scalar::max(diff(&left.g, &e.g), diff(&left.v, &e.v)),
                scalar::max(diff(&right.g, &e.g), diff(&right.v, &e.v)),
            ));

            // Half-scale samples for the conjugation-based checks.
            let p = GroupElement::new(
                sampling::random_matrix(n, &mut rng).scale(0.5).exp(),
                act.random_v(&mut rng),
            );
            let q = GroupElement::new(
                sampling::random_matrix(n, &mut rng).scale(0.5).exp(),
                act.random_v(&mut rng),
            );
            let x = act.random_algebra(&mut rng);
            let y = act.random_algebra(&mut rng);
            let m = act.random_momentum(&mut rng);

            let h = FD_STEP;
            let curve = |t: f64| -> crate::Result<GroupElement<A::V>> {
                Ok(GroupElement::new(x.xi_g.scale(t).exp(), x.xi_v.scale(t)))
            };
            let plus = act.conjugate(&p, &curve(h)?)?;
            let minus = act.conjugate(&p, &curve(-h)?)?;
            let fd = AlgebraElement::new(
                plus.g.sub(&minus.g).scale(0.5 / h),
                plus.v.sub(&minus.v).scale(0.5 / h),
            );
            let ad = act.adjoint(&p, &x)?;
            ad_fd.see(scalar::max(
                diff(&fd.xi_g, &ad.xi_g),
                diff(&fd.xi_v, &ad.xi_v),
            ));

            let pq = act.compose(&p, &q)?;
            let lhs = act.adjoint(&pq, &x)?;
            let rhs = act.adjoint(&p, &act.adjoint(&q, &x)?)?;
            ad_hom.see(scalar::max(
                diff(&lhs.xi_g, &rhs.xi_g),
                diff(&lhs.xi_v, &rhs.xi_v),
            ));

            let xy = act.bracket(&x, &y)?;
            let yx = act.bracket(&y, &x)?;
            let anti = xy.add(&yx);
            antisym.see(anti.max_abs());

            let z = act.random_algebra(&mut rng);
            let jac = act
                .bracket(&x, &act.bracket(&y, &z)?)?
                .add(&act.bracket(&y, &act.bracket(&z, &x)?)?)
                .add(&act.bracket(&z, &act.bracket(&x, &y)?)?);
            jacobi.see(jac.max_abs());

            let ad_plus = act.adjoint(&curve(h)?, &y)?;
            let ad_minus = act.adjoint(&curve(-h)?, &y)?;
            let fd_bracket = ad_plus.sub(&ad_minus).scale(0.5 / h);
            bracket_fd.see(scalar::max(
                diff(&fd_bracket.xi_g, &xy.xi_g),
                diff(&fd_bracket.xi_v, &xy.xi_v),
            ));

            let coad = act.coadjoint(&x, &m)?;
            coad_dual.see(scalar::abs(
                act.pair_full(&coad, &y)? - act.pair_full(&m, &xy)?,
            ));

            let v = act.random_v(&mut rng);
            let alpha = act.random_dual(&mut rng);
            let hearted = act.heart(&x.xi_g, &alpha)?;
            let moved = act.inf_left(&x.xi_g, &v)?.sub(&act.inf_right(&v, &x.xi_g)?);
            heart_dual.see(scalar::abs(
                act.pair(&hearted, &v)? - act.pair(&alpha, &moved)?,
            ));

            let diamonded = act.diamond(&v, &alpha)?;
            let moved_r = act.inf_right(&v, &x.xi_g)?.sub(&act.inf_left(&x.xi_g, &v)?);
            diamond_dual.see(scalar::abs(
                diamonded.dot(&x.xi_g) - act.pair(&alpha, &moved_r)?,
            ));
            Ok::<(), crate::Error>(())
        })();
        if result.is_err() {
            for rec in [
                &mut assoc,
                &mut identity,
                &mut inverse,
                &mut ad_fd,
                &mut ad_hom,
                &mut antisym,
                &mut jacobi,
                &mut bracket_fd,
                &mut coad_dual,
                &mut heart_dual,
                &mut diamond_dual,
            ] {
                rec.see(f64::NAN);
            }
        }
    }

    report.checks.push(assoc.finish(tol.exact_tol));
    report.checks.push(identity.finish(tol.exact_tol));
    report.checks.push(inverse.finish(tol.exact_tol));
    report.checks.push(ad_fd.finish(tol.fd_tol));
    report.checks.push(ad_hom.finish(tol.exact_tol));
    report.checks.push(antisym.finish(tol.exact_tol));
    report.checks.push(jacobi.finish(tol.exact_tol));
    report.checks.push(bracket_fd.finish(tol.fd_tol));
    report.checks.push(coad_dual.finish(tol.exact_tol));
    report.checks.push(heart_dual.finish(tol.exact_tol));
    report.checks.push(diamond_dual.finish(tol.exact_tol));
    report.sort();
    report
}
