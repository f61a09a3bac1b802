//! Invariant matrices: physicality, simple-current and conjugation invariants, the named
//! level-2/3 families, and selection rules.

mod currents;
mod exceptional;
mod family_b;
mod family_d;
mod physical;
mod render;
mod rules;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::{enumerate_weights, AlgebraSpec, Weight};
use crate::error::{Error, Result};

pub use currents::{conjugation_matrix, simple_current_invariant};
pub use exceptional::exceptional_d73;
pub use family_b::{family_b, family_b_exceptional, family_b_pair, BExceptional};
pub use family_d::{family_d, family_d_exceptional, family_d_pair, DExceptional};
pub use physical::{verify_physical, PhysicalityReport};
pub use render::partition_function;
pub use rules::{selection_rules, SelectionReport};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantMatrix {
    pub alg: AlgebraSpec,
    pub name: String,
    pub entries: Vec<Vec<i64>>,
}

impl fmt::Debug for InvariantMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} [{}]", self.name, self.alg)?;
        for row in &self.entries {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Canonical weights of an algebra together with a lookup table.
pub(crate) struct Indexer {
    pub weights: Vec<Weight>,
    map: HashMap<Weight, usize>,
}

impl Indexer {
    pub fn new(alg: &AlgebraSpec) -> Self {
        let weights = enumerate_weights(alg);
        let map = weights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Indexer { weights, map }
    }

    pub fn get(&self, w: &Weight) -> Result<usize> {
        self.map.get(w).copied().ok_or_else(|| Error::UnknownWeight(w.0.clone()))
    }
}

impl InvariantMatrix {
    pub fn zeros(alg: &AlgebraSpec, name: impl Into<String>) -> Self {
        let d = enumerate_weights(alg).len();
        InvariantMatrix {
            alg: *alg,
            name: name.into(),
            entries: vec![vec![0; d]; d],
        }
    }

    pub fn identity(alg: &AlgebraSpec) -> Self {
        let mut m = Self::zeros(alg, "I");
        for i in 0..m.dim() {
            m.entries[i][i] = 1;
        }
        m
    }

    /// Validates shape and nonnegativity.
    pub fn new(alg: &AlgebraSpec, name: impl Into<String>, entries: Vec<Vec<i64>>) -> Result<Self> {
        let d = enumerate_weights(alg).len();
        if entries.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: entries.len(),
            });
        }
        for row in &entries {
            if row.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: row.len(),
                });
            }
            if row.iter().any(|&x| x < 0) {
                return Err(Error::Parse("invariant matrices have nonnegative entries".into()));
            }
        }
        Ok(InvariantMatrix {
            alg: *alg,
            name: name.into(),
            entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Permutation matrix fixing the vacuum?
    pub fn is_automorphism(&self) -> bool {
        self.entries[0][0] == 1
            && self.entries.iter().all(|row| row.iter().filter(|&&x| x != 0).count() == 1 && row.iter().sum::<i64>() == 1)
            && transpose(self).entries.iter().all(|row| row.iter().sum::<i64>() == 1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let weights = enumerate_weights(&self.alg);
        serde_json::json!({
            "algebra": self.alg,
            "weights": weights,
            "name": self.name,
            "entries": self.entries,
        })
    }

    /// Reads the JSON written by `to_json`, checking the weight order.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let alg: AlgebraSpec = serde_json::from_value(v["algebra"].clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(ws) = v.get("weights") {
            let ws: Vec<Weight> = serde_json::from_value(ws.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            if ws != enumerate_weights(&alg) {
                return Err(Error::Parse("weight order does not match the canonical order".into()));
            }
        }
        let entries: Vec<Vec<i64>> =
            serde_json::from_value(v["entries"].clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let name = v.get("name").and_then(|n| n.as_str()).unwrap_or("input").to_string();
        Self::new(&alg, name, entries)
    }
}

/// A·B, with a name recording the product.
pub fn product(a: &InvariantMatrix, b: &InvariantMatrix) -> Result<InvariantMatrix> {
    if a.alg != b.alg {
        return Err(Error::Precondition(format!("cannot multiply {} by {}", a.alg, b.alg)));
    }
    let d = a.dim();
    let mut out = vec![vec![0i64; d]; d];
    for i in 0..d {
        for k in 0..d {
            let x = a.entries[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..d {
                out[i][j] += x * b.entries[k][j];
            }
        }
    }
    Ok(InvariantMatrix {
        alg: a.alg,
        name: format!("{}·{}", a.name, b.name),
        entries: out,
    })
}

pub fn transpose(a: &InvariantMatrix) -> InvariantMatrix {
    let d = a.dim();
    InvariantMatrix {
        alg: a.alg,
        name: format!("({})ᵀ", a.name),
        entries: (0..d).map(|i| (0..d).map(|j| a.entries[j][i]).collect()).collect(),
    }
}

/// ½(A + B)·P, exactly: every entry of (A + B)·P must be even.
pub(crate) fn half_sum_times(a: &InvariantMatrix, b: &InvariantMatrix, p: &InvariantMatrix, name: String) -> Result<InvariantMatrix> {
    let d = a.dim();
    let sum = InvariantMatrix {
        alg: a.alg,
        name: String::new(),
        entries: (0..d).map(|i| (0..d).map(|j| a.entries[i][j] + b.entries[i][j]).collect()).collect(),
    };
    let prod = product(&sum, p)?;
    let mut entries = prod.entries;
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            if *x % 2 != 0 {
                return Err(Error::Construction(format!("{name}: odd entry {x} at ({i}, {j}) before halving")));
            }
            *x /= 2;
        }
    }
    Ok(InvariantMatrix {
        alg: a.alg,
        name,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_json() {
        let alg = AlgebraSpec::d(5, 2);
        let i = InvariantMatrix::identity(&alg);
        let c1 = conjugation_matrix(crate::affine::Conjugation(1), &alg).unwrap();
        assert_eq!(product(&i, &c1).unwrap().entries, c1.entries);
        assert_eq!(product(&c1, &c1).unwrap().entries, i.entries);
        let back = InvariantMatrix::from_json(&c1.to_json()).unwrap();
        assert_eq!(back, c1);
        assert!(InvariantMatrix::new(&alg, "bad", vec![vec![1]]).is_err());
    }
}
