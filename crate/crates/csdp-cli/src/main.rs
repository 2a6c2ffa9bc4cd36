//! `csdp`: structure verification, Euler-Poincare simulation, and 2-jet
//! composition for centered product groups.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage or input errors,
//! 3 singular reconstruction during a simulation.

mod config;
mod format;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use csdp_core::algebra::{LinearSpace, Matrix, Tolerances};
use csdp_core::csdp::{
    structure_suite, ActionPair, AlgebraElement, CoalgebraElement, LawCheck, SuiteReport,
};
use csdp_core::dynamics::{integrate, EpSetup, QuadraticLagrangian};
use csdp_core::instances::{glmat, glt12, GlMat, GlT12, NoncommutingT12};
use csdp_core::jets::PolyMap2;
use csdp_core::sampling;
use csdp_core::Error;

use config::{ConfigDoc, InstanceKind, OrientationKind};
use format::fmt_f64;

const EXIT_CHECKS_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SINGULAR: u8 = 3;

/// Tolerance for closed-form-vs-generic agreement; tighter than the law
/// tolerance because both routes evaluate the same exact quantity.
const CLOSED_FORM_TOL: f64 = 1e-12;

#[derive(Parser)]
#[command(
    name = "csdp",
    version,
    about = "Centered product groups: verify structure laws, run Euler-Poincare flows, compose 2-jets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the structure-law suite for an instance and report each check.
    Verify {
        /// Instance to check.
        #[arg(long, value_enum)]
        instance: InstanceArg,
        /// Matrix dimension.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=6))]
        n: u8,
        /// Seed for the random samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random samples per law.
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u16).range(1..))]
        samples: u16,
    },
    /// Integrate an Euler-Poincare flow described by a JSON config and write
    /// the trajectory as CSV.
    Simulate {
        /// Path to the JSON configuration.
        #[arg(long)]
        config: PathBuf,
    },
    /// Compose two 2-jets read from JSON files and print the result.
    JetCompose {
        /// Outer jet (applied second).
        #[arg(long)]
        left: PathBuf,
        /// Inner jet (applied first).
        #[arg(long)]
        right: PathBuf,
        /// Also compose via truncated polynomial evaluation and report the
        /// largest deviation between the two routes.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InstanceArg {
    /// Matrices acting on matrices.
    #[value(name = "glmat")]
    Glmat,
    /// Matrices acting on (1,2)-tensors.
    #[value(name = "glt12")]
    Glt12,
    /// Matrices acting on symmetric (1,2)-tensors.
    #[value(name = "glt12_sym")]
    Glt12Sym,
    /// Deliberately non-commuting action pair; its checks are expected to
    /// fail, exercising the failure reporting path.
    #[value(name = "broken_t12")]
    BrokenT12,
}

impl InstanceArg {
    fn name(self) -> &'static str {
        match self {
            InstanceArg::Glmat => "glmat",
            InstanceArg::Glt12 => "glt12",
            InstanceArg::Glt12Sym => "glt12_sym",
            InstanceArg::BrokenT12 => "broken_t12",
        }
    }
}

/// A command failure with a dedicated exit code.
enum Failure {
    Usage(String),
    Singular(usize),
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests land here too; they are not errors.
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Verify {
            instance,
            n,
            seed,
            samples,
        } => cmd_verify(instance, n as usize, seed, samples as usize),
        Command::Simulate { config } => cmd_simulate(&config),
        Command::JetCompose {
            left,
            right,
            oracle,
        } => cmd_jet_compose(&left, &right, oracle),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Singular(step)) => {
            eprintln!("error: singular reconstruction at step {step}");
            ExitCode::from(EXIT_SINGULAR)
        }
    }
}

fn cmd_verify(instance: InstanceArg, n: usize, seed: u64, samples: usize) -> Result<u8, Failure> {
    let tol = Tolerances::default();
    let mut report = match instance {
        InstanceArg::Glmat => {
            let act = GlMat::new(n).map_err(|e| Failure::usage(e.to_string()))?;
            let mut report = structure_suite(&act, &tol, seed, samples);
            report
                .checks
                .extend(glmat_closed_form_checks(&act, seed, samples));
            report
        }
        InstanceArg::Glt12 => {
            let act = GlT12::full(n).map_err(|e| Failure::usage(e.to_string()))?;
            let mut report = structure_suite(&act, &tol, seed, samples);
            report
                .checks
                .extend(glt12_closed_form_checks(&act, seed, samples));
            report
        }
        InstanceArg::Glt12Sym => {
            let act = GlT12::symmetric(n).map_err(|e| Failure::usage(e.to_string()))?;
            let mut report = structure_suite(&act, &tol, seed, samples);
            report
                .checks
                .extend(glt12_closed_form_checks(&act, seed, samples));
            report
        }
        InstanceArg::BrokenT12 => {
            if n < 2 {
                return Err(Failure::usage(
                    "broken_t12 needs n >= 2; scalars commute, so the twist is invisible at n = 1",
                ));
            }
            let act = NoncommutingT12::new(n).map_err(|e| Failure::usage(e.to_string()))?;
            structure_suite(&act, &tol, seed, samples)
        }
    };
    report.checks.sort_by(|a, b| a.name.cmp(b.name));
    print_report(&report, instance.name(), n);
    Ok(if report.all_passed() {
        0
    } else {
        EXIT_CHECKS_FAILED
    })
}

fn print_report(report: &SuiteReport, instance: &str, n: usize) {
    for check in &report.checks {
        let status = if check.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} {name} max_violation={v} tolerance={t}",
            name = check.name,
            v = fmt_f64(check.max_violation),
            t = fmt_f64(check.tolerance),
        );
    }
    let failed = report.failures().len();
    let total = report.checks.len();
    if failed == 0 {
        println!("verify {instance} n={n}: all {total} checks passed");
    } else {
        println!("verify {instance} n={n}: {failed} of {total} checks FAILED");
    }
}

/// Compare the matrix-instance closed forms against the generic
/// basis-assembled operators on random inputs.
fn glmat_closed_form_checks(act: &GlMat, seed: u64, samples: usize) -> Vec<LawCheck> {
    let mut rng = sampling::rng_from_seed(seed.wrapping_add(0x9e37_79b9_7f4a_7c15));
    let n = act.n();
    let mut heart = 0.0f64;
    let mut diamond = 0.0f64;
    let mut coadjoint = 0.0f64;
    for _ in 0..samples {
        let xi = sampling::random_matrix(n, &mut rng);
        let v = sampling::random_matrix(n, &mut rng);
        let alpha = sampling::random_matrix(n, &mut rng);
        let gamma = sampling::random_matrix(n, &mut rng);
        let mu = sampling::random_matrix(n, &mut rng);

        let generic = act
            .heart(&xi, &alpha)
            .and_then(|g| Ok(g.sub(&glmat::heart_direct(&xi, &alpha)?).max_abs()));
        heart = heart.max(generic.unwrap_or(f64::NAN));

        let generic = act
            .diamond(&v, &alpha)
            .and_then(|g| Ok(g.sub(&glmat::diamond_direct(&v, &alpha)?).max_abs()));
        diamond = diamond.max(generic.unwrap_or(f64::NAN));

        let generic = act
            .coadjoint(
                &AlgebraElement::new(xi.clone(), v.clone()),
                &CoalgebraElement::new(mu.clone(), gamma.clone()),
            )
            .and_then(|full| {
                let mu_block =
                    glmat::coadjoint_direct(&xi, &mu)?.add(&glmat::diamond_direct(&v, &gamma)?);
                let gamma_block = glmat::heart_direct(&xi, &gamma)?;
                Ok(full
                    .sub(&CoalgebraElement::new(mu_block, gamma_block))
                    .max_abs())
            });
        coadjoint = coadjoint.max(generic.unwrap_or(f64::NAN));
    }
    vec![
        LawCheck {
            name: "heart_closed_form",
            max_violation: heart,
            tolerance: CLOSED_FORM_TOL,
        },
        LawCheck {
            name: "diamond_closed_form",
            max_violation: diamond,
            tolerance: CLOSED_FORM_TOL,
        },
        LawCheck {
            name: "coadjoint_closed_form",
            max_violation: coadjoint,
            tolerance: CLOSED_FORM_TOL,
        },
    ]
}

/// Compare the tensor-instance closed forms against the generic operators;
/// draws from the symmetric subspace when the instance is restricted to it.
fn glt12_closed_form_checks(act: &GlT12, seed: u64, samples: usize) -> Vec<LawCheck> {
    let mut rng = sampling::rng_from_seed(seed.wrapping_add(0x9e37_79b9_7f4a_7c15));
    let n = act.n();
    let mut heart = 0.0f64;
    let mut diamond = 0.0f64;
    for _ in 0..samples {
        let xi = sampling::random_matrix(n, &mut rng);
        let v = act.random_v(&mut rng);
        let alpha = act.random_dual(&mut rng);

        let generic = act
            .heart(&xi, &alpha)
            .and_then(|g| Ok(g.sub(&glt12::heart_direct(&xi, &alpha)?).max_abs()));
        heart = heart.max(generic.unwrap_or(f64::NAN));

        let generic = act
            .diamond(&v, &alpha)
            .and_then(|g| Ok(g.sub(&glt12::diamond_direct(&v, &alpha)?).max_abs()));
        diamond = diamond.max(generic.unwrap_or(f64::NAN));
    }
    vec![
        LawCheck {
            name: "heart_closed_form",
            max_violation: heart,
            tolerance: CLOSED_FORM_TOL,
        },
        LawCheck {
            name: "diamond_closed_form",
            max_violation: diamond,
            tolerance: CLOSED_FORM_TOL,
        },
    ]
}

fn cmd_simulate(path: &Path) -> Result<u8, Failure> {
    let doc = ConfigDoc::load(path).map_err(Failure::Usage)?;
    match doc.instance {
        InstanceKind::Glmat => {
            let act = GlMat::new(doc.n).map_err(|e| Failure::usage(e.to_string()))?;
            run_simulation(&act, &doc)
        }
        InstanceKind::Glt12 => {
            let act = GlT12::full(doc.n).map_err(|e| Failure::usage(e.to_string()))?;
            run_simulation(&act, &doc)
        }
        InstanceKind::Glt12Sym => {
            let act = GlT12::symmetric(doc.n).map_err(|e| Failure::usage(e.to_string()))?;
            run_simulation(&act, &doc)
        }
    }
}

fn run_simulation<A: ActionPair>(act: &A, doc: &ConfigDoc) -> Result<u8, Failure> {
    let l = match &doc.lagrangian {
        Some(lc) => QuadraticLagrangian::new(lc.weights_g.clone(), lc.weights_v.clone())
            .map_err(|e| Failure::usage(e.to_string()))?,
        None => QuadraticLagrangian::isotropic(act),
    };
    let setup = build_setup(act, doc)?;
    let flow =
        integrate(act, &l, &setup, doc.integrator.h, doc.integrator.steps).map_err(
            |e| match e {
                Error::SingularReconstruction { step } => Failure::Singular(step),
                other => Failure::usage(other.to_string()),
            },
        )?;
    let csv = format::trajectory_csv(&flow, act.n());
    format::write_atomic(&doc.output, &csv).map_err(Failure::Usage)?;
    println!(
        "simulate {instance} n={n} orientation={orientation}: final_time={t} \
         max_energy_drift={drift} max_noether_residual={residual} samples={count} output={path}",
        instance = doc.instance,
        n = doc.n,
        orientation = doc.orientation,
        t = fmt_f64(flow.total_time()),
        drift = fmt_f64(flow.max_energy_drift()),
        residual = fmt_f64(flow.max_noether_residual()),
        count = flow.samples.len(),
        path = doc.output.display(),
    );
    Ok(0)
}

fn build_setup<A: ActionPair>(act: &A, doc: &ConfigDoc) -> Result<EpSetup<A::V>, Failure> {
    let mut rng = sampling::rng_from_seed(doc.seed);
    let from_coords = |coords: &[f64]| A::V::combination(&act.basis(), coords);
    match doc.orientation {
        OrientationKind::Right | OrientationKind::Left => {
            let xi0 = match &doc.initial {
                Some(init) => {
                    let xi_g = Matrix::from_flat(act.n(), &init.xi_g)
                        .map_err(|e| Failure::usage(e.to_string()))?;
                    let coords = init.xi_v.as_ref().expect("validated by ConfigDoc::load");
                    AlgebraElement::new(xi_g, from_coords(coords))
                }
                None => act.random_algebra(&mut rng),
            };
            Ok(match doc.orientation {
                OrientationKind::Right => EpSetup::Right { xi0 },
                _ => EpSetup::Left { xi0 },
            })
        }
        OrientationKind::Advected => {
            let (xi0_g, v0) = match &doc.initial {
                Some(init) => {
                    let xi_g = Matrix::from_flat(act.n(), &init.xi_g)
                        .map_err(|e| Failure::usage(e.to_string()))?;
                    let coords = init.v0.as_ref().expect("validated by ConfigDoc::load");
                    (xi_g, from_coords(coords))
                }
                None => (
                    sampling::random_matrix(act.n(), &mut rng),
                    act.random_v(&mut rng),
                ),
            };
            Ok(EpSetup::Advected { xi0_g, v0 })
        }
    }
}

fn cmd_jet_compose(left: &Path, right: &Path, oracle: bool) -> Result<u8, Failure> {
    let read = |path: &Path| -> Result<csdp_core::jets::Jet2, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        format::jet_from_json(&text)
            .map_err(|msg| Failure::Usage(format!("{}: {msg}", path.display())))
    };
    let outer = read(left)?;
    let inner = read(right)?;
    let composed = outer
        .compose(&inner)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let deviation = if oracle {
        let poly = PolyMap2::from_jet(&outer)
            .compose_truncated(&PolyMap2::from_jet(&inner))
            .map_err(|e| Failure::usage(e.to_string()))?;
        let poly_jet = poly.jet().map_err(|e| Failure::usage(e.to_string()))?;
        let gap_linear = composed.a1().sub(poly_jet.a1()).max_abs();
        let gap_quadratic = composed.a2().sub(poly_jet.a2()).max_abs();
        Some(gap_linear.max(gap_quadratic))
    } else {
        None
    };
    print!("{}", format::jet_to_json(&composed, deviation));
    Ok(0)
}
