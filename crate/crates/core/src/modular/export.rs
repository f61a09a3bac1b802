//! JSON and text renderings of S.

use serde_json::{json, Value};

use super::{describe_closed_entry, ModularData};

fn coeff_strings(v: &crate::exact::CycNumber) -> Vec<String> {
    v.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Conductor, weights, and every S entry as power-basis coefficients (as exact fraction
/// strings) in Q(ζ_conductor). The integral kernel and its scale are included as well.
pub fn smatrix_json(md: &ModularData) -> Value {
    let n = md.conductor();
    let d = md.dim();
    let entries: Vec<Vec<Vec<String>>> = (0..d)
        .map(|i| (0..d).map(|j| coeff_strings(&md.s(i, j).embed(n))).collect())
        .collect();
    let kernel: Vec<Vec<Vec<i64>>> = (0..d)
        .map(|i| (0..d).map(|j| md.kernel.entry(i, j).to_vec()).collect())
        .collect();
    json!({
        "algebra": md.alg,
        "conductor": n,
        "weights": md.weights,
        "weight_names": md.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "entries": entries,
        "kernel": {
            "conductor": md.kernel.conductor(),
            "scale": { "conductor": md.scale.conductor(), "coeffs": coeff_strings(&md.scale) },
            "norm": md.norm,
            "entries": kernel,
        },
    })
}

/// Numeric table, with closed-form names at level 2.
pub fn smatrix_table(md: &ModularData) -> String {
    let mut out = String::new();
    let d = md.dim();
    out.push_str(&format!("S matrix of {} ({} weights, conductor {})\n", md.alg, d, md.conductor()));
    for (i, w) in md.weights.iter().enumerate() {
        out.push_str(&format!("  [{i}] {w}  labels {:?}\n", w.0));
    }
    for i in 0..d {
        for j in 0..d {
            let (re, im) = md.s(i, j).to_complex_f64();
            let name = if md.alg.level == 2 {
                describe_closed_entry(&md.alg, &md.weights, i, j).map(|s| format!("  = {s}")).unwrap_or_default()
            } else {
                String::new()
            };
            out.push_str(&format!("S[{i}][{j}] = {re:+.8} {im:+.8}i{name}\n"));
        }
    }
    out
}
