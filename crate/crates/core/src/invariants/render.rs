//! Partition-function text: Σ M_{λμ} χ_λ χ̄_μ, written as a sum of |·|² blocks when the
//! matrix allows it.

use super::{Indexer, InvariantMatrix};

fn chi(idx: &Indexer, i: usize) -> String {
    format!("χ[{}]", idx.weights[i])
}

/// Connected components of the support, if M restricted to each is a constant
/// multiple of the all-ones matrix.
fn blocks(m: &InvariantMatrix) -> Option<Vec<(i64, Vec<usize>)>> {
    if !m.is_symmetric() {
        return None;
    }
    let d = m.dim();
    let mut seen = vec![false; d];
    let mut out = Vec::new();
    for s in 0..d {
        if seen[s] || m.entries[s].iter().all(|&x| x == 0) {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..d {
                if m.entries[i][j] != 0 && !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let c = m.entries[comp[0]][comp[0]];
        if comp.iter().any(|&i| comp.iter().any(|&j| m.entries[i][j] != c)) {
            return None;
        }
        out.push((c, comp));
    }
    Some(out)
}

pub fn partition_function(m: &InvariantMatrix) -> String {
    let idx = Indexer::new(&m.alg);
    if let Some(bs) = blocks(m) {
        let terms: Vec<String> = bs
            .iter()
            .map(|(c, comp)| {
                let inner: Vec<String> = comp.iter().map(|&i| chi(&idx, i)).collect();
                let coef = if *c == 1 { String::new() } else { format!("{c}·") };
                format!("{coef}|{}|²", inner.join(" + "))
            })
            .collect();
        return terms.join(" + ");
    }
    let mut terms = Vec::new();
    for (i, row) in m.entries.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x != 0 {
                let coef = if x == 1 { String::new() } else { format!("{x}·") };
                terms.push(format!("{coef}{}·{}*", chi(&idx, i), chi(&idx, j)));
            }
        }
    }
    terms.join(" + ")
}
