use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::InvariantMatrix;
use crate::error::{Error, Result};
use crate::exact::{CycNumber, Rational};
use crate::modular::ModularData;

#[derive(Clone, Debug, Serialize)]
pub struct PhysicalityReport {
    pub commutes_s: bool,
    /// M_{λμ} ≠ 0 ⇒ equal norm residues mod 2n.
    pub commutes_t: bool,
    /// M commutes with the diagonal of residue classes (the same condition, computed as
    /// a matrix identity).
    pub commutes_t_diagonal: bool,
    pub nonnegative: bool,
    pub vacuum_ok: bool,
    /// Σ S_{0λ} S_{0μ} M_{λμ}; None if it is not even rational.
    pub sum_rule: Option<String>,
    pub failures: Vec<(String, usize, usize)>,
}

impl PhysicalityReport {
    pub fn is_physical(&self) -> bool {
        self.commutes_s && self.commutes_t && self.commutes_t_diagonal && self.nonnegative && self.vacuum_ok && self.sum_rule.as_deref() == Some("1")
    }
}

/// Σ_{λμ} S_{0λ} S_{0μ} M_{λμ}, as (1/K)·Σ X_{0λ} X_{0μ} M_{λμ}.
pub(crate) fn sum_rule(m: &InvariantMatrix, md: &ModularData) -> CycNumber {
    let d = md.dim();
    let row: Vec<CycNumber> = (0..d).map(|j| md.kernel.entry_cyc(0, j)).collect();
    let mut acc = CycNumber::zero(md.kernel.conductor());
    for i in 0..d {
        let mut inner = CycNumber::zero(md.kernel.conductor());
        for j in 0..d {
            if m.entries[i][j] != 0 {
                inner = &inner + &row[j].scale(&Rational::from_integer(BigInt::from(m.entries[i][j])));
            }
        }
        if !inner.is_zero() {
            acc = &acc + &(&row[i] * &inner);
        }
    }
    acc.scale(&Rational::new(BigInt::from(1), BigInt::from(md.norm)))
}

pub fn verify_physical(m: &InvariantMatrix, md: &ModularData) -> Result<PhysicalityReport> {
    let d = md.dim();
    if m.alg != md.alg || m.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: m.dim() });
    }
    let mut failures = Vec::new();

    let ms = md.kernel.left_int(&m.entries)?;
    let sm = md.kernel.right_int(&m.entries)?;
    let mut commutes_s = true;
    'outer: for i in 0..d {
        for j in 0..d {
            if ms.entry(i, j) != sm.entry(i, j) {
                commutes_s = false;
                failures.push(("MS≠SM".to_string(), i, j));
                break 'outer;
            }
        }
    }

    let mut commutes_t = true;
    for i in 0..d {
        for j in 0..d {
            if m.entries[i][j] != 0 && !md.same_t(i, j) {
                if commutes_t {
                    failures.push(("norm residues differ".to_string(), i, j));
                }
                commutes_t = false;
            }
        }
    }
    // diagonal of class labels: (MD)_{ij} = M_{ij} t_j, (DM)_{ij} = t_i M_{ij}
    let mut labels: BTreeMap<&Rational, i64> = BTreeMap::new();
    for r in &md.normsq2n {
        let next = labels.len() as i64;
        labels.entry(r).or_insert(next);
    }
    let t: Vec<i64> = md.normsq2n.iter().map(|r| labels[r]).collect();
    let mut commutes_t_diagonal = true;
    for i in 0..d {
        for j in 0..d {
            if m.entries[i][j] * t[j] != t[i] * m.entries[i][j] {
                if commutes_t_diagonal {
                    failures.push(("MT≠TM".to_string(), i, j));
                }
                commutes_t_diagonal = false;
            }
        }
    }

    let nonnegative = m.entries.iter().flatten().all(|&x| x >= 0);
    let vacuum_ok = m.entries[0][0] == 1;
    if !vacuum_ok {
        failures.push(("M₀₀ ≠ 1".to_string(), 0, 0));
    }
    let sr = sum_rule(m, md).to_rational();
    if sr.as_ref().map(|q| q != &Rational::from_integer(BigInt::from(1))).unwrap_or(true) {
        failures.push(("sum rule ≠ 1".to_string(), 0, 0));
    }
    Ok(PhysicalityReport {
        commutes_s,
        commutes_t,
        commutes_t_diagonal,
        nonnegative,
        vacuum_ok,
        sum_rule: sr.map(|q| q.to_string()),
        failures,
    })
}
