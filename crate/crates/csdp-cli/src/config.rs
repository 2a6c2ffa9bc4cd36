//! Simulation configuration: a single JSON document describing the instance,
//! the Lagrangian, initial data, and the integrator grid.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

/// Largest dimension the CLI accepts; bases grow like `n^3`, so desk-scale
/// runs stay small.
pub const MAX_N: usize = 6;

/// Which shipped instance a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    /// Matrices acting on matrices by multiplication.
    Glmat,
    /// Matrices acting on `(1,2)`-tensors.
    Glt12,
    /// Matrices acting on covariant-symmetric `(1,2)`-tensors.
    Glt12Sym,
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            InstanceKind::Glmat => "glmat",
            InstanceKind::Glt12 => "glt12",
            InstanceKind::Glt12Sym => "glt12_sym",
        };
        f.write_str(name)
    }
}

/// Flow orientation selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationKind {
    /// Right-trivialized momentum flow.
    Right,
    /// Left-trivialized momentum flow.
    Left,
    /// Right-trivialized matrix flow with an advected vector.
    Advected,
}

impl fmt::Display for OrientationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OrientationKind::Right => "right",
            OrientationKind::Left => "left",
            OrientationKind::Advected => "advected",
        };
        f.write_str(name)
    }
}

/// Diagonal quadratic Lagrangian weights.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LagrangianConfig {
    /// Weights over the matrix entries, row-major, length `n^2`.
    pub weights_g: Vec<f64>,
    /// Weights over the vector-space basis, length `v_dim`.
    pub weights_v: Vec<f64>,
}

/// Initial data in basis coordinates. Whole block optional: absent means
/// seeded random data.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialConfig {
    /// Matrix velocity, row-major, length `n^2`.
    pub xi_g: Vec<f64>,
    /// Vector velocity coordinates, length `v_dim` (right/left flows only).
    #[serde(default)]
    pub xi_v: Option<Vec<f64>>,
    /// Advected vector coordinates, length `v_dim` (advected flows only).
    #[serde(default)]
    pub v0: Option<Vec<f64>>,
}

/// Fixed-step integrator grid.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntegratorConfig {
    /// Step size, positive and finite.
    pub h: f64,
    /// Number of steps, at least one.
    pub steps: usize,
}

/// One simulation run, as read from the JSON config file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDoc {
    /// Instance selector.
    pub instance: InstanceKind,
    /// Matrix dimension.
    pub n: usize,
    /// Flow orientation.
    pub orientation: OrientationKind,
    /// Quadratic weights; absent means unit weights.
    #[serde(default)]
    pub lagrangian: Option<LagrangianConfig>,
    /// Initial data; absent means random data drawn from `seed`.
    #[serde(default)]
    pub initial: Option<InitialConfig>,
    /// Integrator grid.
    pub integrator: IntegratorConfig,
    /// Seed for random initial data; fixing it makes runs reproducible.
    #[serde(default)]
    pub seed: u64,
    /// CSV output path.
    pub output: PathBuf,
}

impl ConfigDoc {
    /// Read and validate a config file. All failures are reported as
    /// human-readable strings; the caller maps them to the usage exit code.
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let doc: ConfigDoc = serde_json::from_str(&text)
            .map_err(|e| format!("config {} is not valid: {e}", path.display()))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), String> {
        if self.n == 0 || self.n > MAX_N {
            return Err(format!("n must be between 1 and {MAX_N}, got {}", self.n));
        }
        if !(self.integrator.h.is_finite() && self.integrator.h > 0.0) {
            return Err("integrator.h must be positive and finite".into());
        }
        if self.integrator.steps == 0 {
            return Err("integrator.steps must be at least 1".into());
        }
        if self.output.as_os_str().is_empty() {
            return Err("output path must not be empty".into());
        }
        let v_dim = self.v_dim();
        if let Some(l) = &self.lagrangian {
            if l.weights_g.len() != self.n * self.n {
                return Err(format!(
                    "lagrangian.weights_g must have length {}, got {}",
                    self.n * self.n,
                    l.weights_g.len()
                ));
            }
            if l.weights_v.len() != v_dim {
                return Err(format!(
                    "lagrangian.weights_v must have length {v_dim}, got {}",
                    l.weights_v.len()
                ));
            }
            for w in l.weights_g.iter().chain(&l.weights_v) {
                if !(w.is_finite() && *w > 0.0) {
                    return Err("lagrangian weights must all be positive and finite".into());
                }
            }
        }
        if let Some(init) = &self.initial {
            if init.xi_g.len() != self.n * self.n {
                return Err(format!(
                    "initial.xi_g must have length {}, got {}",
                    self.n * self.n,
                    init.xi_g.len()
                ));
            }
            let advected = self.orientation == OrientationKind::Advected;
            match (&init.xi_v, &init.v0, advected) {
                (Some(xi_v), None, false) => {
                    if xi_v.len() != v_dim {
                        return Err(format!(
                            "initial.xi_v must have length {v_dim}, got {}",
                            xi_v.len()
                        ));
                    }
                }
                (None, Some(v0), true) => {
                    if v0.len() != v_dim {
                        return Err(format!(
                            "initial.v0 must have length {v_dim}, got {}",
                            v0.len()
                        ));
                    }
                }
                (_, Some(_), false) => {
                    return Err("initial.v0 is only meaningful for advected runs".into())
                }
                (Some(_), _, true) => {
                    return Err("advected runs take initial.v0, not initial.xi_v".into())
                }
                (None, None, false) => {
                    return Err("right/left runs need initial.xi_v alongside xi_g".into())
                }
                (None, None, true) => {
                    return Err("advected runs need initial.v0 alongside xi_g".into())
                }
            }
            for x in init
                .xi_g
                .iter()
                .chain(init.xi_v.iter().flatten())
                .chain(init.v0.iter().flatten())
            {
                if !x.is_finite() {
                    return Err("initial data must be finite".into());
                }
            }
        }
        Ok(())
    }

    /// Coordinate dimension of the vector space for this instance.
    pub fn v_dim(&self) -> usize {
        let n = self.n;
        match self.instance {
            InstanceKind::Glmat => n * n,
            InstanceKind::Glt12 => n * n * n,
            InstanceKind::Glt12Sym => n * n * (n + 1) / 2,
        }
    }
}
