//! Output formatting: 17-significant-digit floats, atomically written CSV
//! trajectories, and the jet JSON encoding.

use std::fs;
use std::io::Write;
use std::path::Path;

use csdp_core::algebra::{LinearSpace, Matrix, Tensor12};
use csdp_core::dynamics::Trajectory;
use csdp_core::jets::Jet2;

/// Render a float with 17 significant digits, enough to round-trip f64
/// exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Column labels for a dual-space component vector: pairs of indices when it
/// is matrix-shaped, triples when tensor-shaped, a flat index otherwise.
fn component_labels(prefix: &str, len: usize, n: usize) -> Vec<String> {
    if len == n * n {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("{prefix}_{i}{j}")))
            .collect()
    } else if len == n * n * n {
        (0..n)
            .flat_map(|i| {
                (0..n).flat_map(move |j| (0..n).map(move |k| format!("{prefix}_{i}{j}{k}")))
            })
            .collect()
    } else {
        (0..len).map(|k| format!("{prefix}_{k}")).collect()
    }
}

/// Render a trajectory as CSV: header
/// `t,energy,noether_residual,mu_00,...,gamma_...`, one row per sample,
/// momentum components flattened row-major.
pub fn trajectory_csv<V: LinearSpace, D: LinearSpace>(
    trajectory: &Trajectory<V, D>,
    n: usize,
) -> String {
    let gamma_len = trajectory.initial().momentum.gamma.dim();
    let mut header = vec![
        "t".to_string(),
        "energy".to_string(),
        "noether_residual".to_string(),
    ];
    header.extend(component_labels("mu", n * n, n));
    header.extend(component_labels("gamma", gamma_len, n));

    let mut out = header.join(",");
    out.push('\n');
    for s in &trajectory.samples {
        let mut row = Vec::with_capacity(3 + n * n + gamma_len);
        row.push(fmt_f64(s.time));
        row.push(fmt_f64(s.energy));
        row.push(fmt_f64(s.noether_residual));
        row.extend(s.momentum.mu.components().iter().copied().map(fmt_f64));
        row.extend(s.momentum.gamma.components().iter().copied().map(fmt_f64));
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Write a file atomically: the content lands under a temporary name in the
/// destination directory and is renamed into place, so a failed run leaves
/// no partial file.
pub fn write_atomic(path: &Path, content: &str) -> Result<(), String> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => std::path::PathBuf::from("."),
    };
    let file_name = path
        .file_name()
        .ok_or_else(|| format!("output path {} has no file name", path.display()))?;
    let mut tmp = dir.join(file_name);
    tmp.set_extension(format!("tmp-{}", std::process::id()));
    let write = (|| -> std::io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(content.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)?;
        Ok(())
    })();
    if write.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    write.map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Parse a jet from its JSON encoding `{"a1": [[...]], "a2": [[[...]]]}`.
/// The quadratic part must be symmetric in its two covariant slots.
pub fn jet_from_json(text: &str) -> Result<Jet2, String> {
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct JetDoc {
        // Optional so that emitted output (which records them) parses back.
        #[serde(default)]
        n: Option<usize>,
        a1: Vec<Vec<f64>>,
        a2: Vec<Vec<Vec<f64>>>,
        #[serde(default, rename = "oracle_max_deviation")]
        _oracle: Option<f64>,
    }
    let doc: JetDoc = serde_json::from_str(text).map_err(|e| format!("invalid jet JSON: {e}"))?;
    if let Some(n) = doc.n {
        if n != doc.a1.len() {
            return Err(format!(
                "declared n = {n} does not match the linear part ({} rows)",
                doc.a1.len()
            ));
        }
    }
    let a1 = Matrix::from_rows(&doc.a1).map_err(|e| format!("invalid linear part: {e}"))?;
    let a2 = Tensor12::from_nested(&doc.a2).map_err(|e| format!("invalid quadratic part: {e}"))?;
    if a2.max_asymmetry() > 1e-12 {
        return Err(format!(
            "quadratic part must be symmetric in its lower indices (asymmetry {})",
            a2.max_asymmetry()
        ));
    }
    Jet2::new(a1, a2.symmetrized()).map_err(|e| format!("invalid jet: {e}"))
}

fn json_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().copied().map(fmt_f64).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn json_tensor(t: &Tensor12) -> String {
    let planes: Vec<String> = t
        .to_nested()
        .iter()
        .map(|plane| {
            let rows: Vec<String> = plane
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row.iter().copied().map(fmt_f64).collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            format!("[{}]", rows.join(", "))
        })
        .collect();
    format!("[{}]", planes.join(", "))
}

/// Render a jet as JSON with full-precision floats; `oracle_deviation`
/// appends the measured gap against the polynomial-composition route.
pub fn jet_to_json(jet: &Jet2, oracle_deviation: Option<f64>) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"n\": {},\n", jet.n()));
    out.push_str(&format!("  \"a1\": {},\n", json_matrix(jet.a1())));
    out.push_str(&format!("  \"a2\": {}", json_tensor(jet.a2())));
    if let Some(dev) = oracle_deviation {
        out.push_str(&format!(",\n  \"oracle_max_deviation\": {}", fmt_f64(dev)));
    }
    out.push_str("\n}\n");
    out
}
