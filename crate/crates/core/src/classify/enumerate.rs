//! Bounded search for every physical invariant. A physical M lies in the commutant, so
//! M = Σ c_k B_k with c_k = M at the k-th distinguishing entry: a nonnegative integer.
//! The vacuum sum rule Σ S₀λS₀μ M_{λμ} = M₀₀ = 1 over nonnegative terms bounds each
//! c_k, and every entry fixed by the assigned coefficients must be a nonnegative integer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::commutant::{commutant_basis, CommutantBasis};
use crate::affine::AlgebraSpec;
use crate::error::{Error, Result};
use crate::invariants::{verify_physical, InvariantMatrix};
use crate::modular::ModularData;

/// Slack on the floating-point sum-rule bound; it only ever admits more candidates,
/// each of which is then checked exactly.
const SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    pub max_weights: usize,
    pub max_dimension: usize,
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_weights: 40,
            max_dimension: 32,
            node_budget: 50_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    Complete,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub candidates: u64,
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub alg: AlgebraSpec,
    pub status: SearchStatus,
    pub commutant_dimension: usize,
    pub invariants: Vec<InvariantMatrix>,
    pub stats: SearchStats,
}

struct Search<'a> {
    coeffs: Vec<Vec<i64>>,
    // entries touched by some basis element, and their sum-rule weights
    support: Vec<(usize, usize)>,
    weight: Vec<f64>,
    last: Vec<usize>,
    pos_after: Vec<Vec<bool>>,
    neg_after: Vec<Vec<bool>>,
    pivot_slot: Vec<usize>,
    denom: i64,
    budget: u64,
    stats: SearchStats,
    found: Vec<Vec<i64>>,
    exhausted: bool,
    _basis: &'a CommutantBasis,
}

impl<'a> Search<'a> {
    fn new(basis: &'a CommutantBasis, md: &ModularData, budget: u64) -> Result<Self> {
        let n = basis.size;
        let mut denom = BigInt::one();
        for x in basis.basis.iter().flatten().flatten() {
            denom = denom.lcm(x.denom());
        }
        let denom_i = denom.to_i64().ok_or(Error::Overflow)?;
        let support: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| basis.basis.iter().any(|b| !num_traits::Zero::is_zero(&b[i][j])))
            .collect();
        let coeffs: Vec<Vec<i64>> = basis
            .basis
            .iter()
            .map(|b| {
                support
                    .iter()
                    .map(|&(i, j)| (&b[i][j] * &denom).to_integer().to_i64().ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let s0: Vec<f64> = (0..n).map(|j| md.vacuum_s_f64(j)).collect();
        let weight = support.iter().map(|&(i, j)| s0[i] * s0[j]).collect();
        let dim = coeffs.len();
        let last = (0..support.len())
            .map(|u| (0..dim).rev().find(|&k| coeffs[k][u] != 0).unwrap_or(0))
            .collect();
        // pos_after[k][u]: some basis element after k has a positive coefficient at u
        let mut pos_after = vec![vec![false; support.len()]; dim + 1];
        let mut neg_after = vec![vec![false; support.len()]; dim + 1];
        for k in (0..dim).rev() {
            for u in 0..support.len() {
                pos_after[k][u] = pos_after[k + 1][u] || coeffs[k][u] > 0;
                neg_after[k][u] = neg_after[k + 1][u] || coeffs[k][u] < 0;
            }
        }
        let pivot_slot = basis
            .pivots
            .iter()
            .map(|p| support.iter().position(|s| s == p).ok_or_else(|| Error::Construction("pivot outside support".into())))
            .collect::<Result<_>>()?;
        Ok(Search {
            coeffs,
            support,
            weight,
            last,
            pos_after,
            neg_after,
            pivot_slot,
            denom: denom_i,
            budget,
            stats: SearchStats::default(),
            found: Vec::new(),
            exhausted: false,
            _basis: basis,
        })
    }

    /// Checks the state after variables 0..k are assigned; returns the lower bound on the
    /// sum-rule weight already committed, or None to prune.
    fn check(&self, k: usize, partial: &[i64]) -> Option<f64> {
        let l = self.denom;
        let mut used = 0.0;
        for u in 0..self.support.len() {
            let v = partial[u];
            if self.last[u] < k {
                if v < 0 || v % l != 0 {
                    return None;
                }
                used += self.weight[u] * (v / l) as f64;
            } else {
                if v < 0 && !self.pos_after[k][u] {
                    return None;
                }
                if v > 0 && !self.neg_after[k][u] {
                    used += self.weight[u] * v as f64 / l as f64;
                }
            }
        }
        if used > 1.0 + SLACK {
            None
        } else {
            Some(used)
        }
    }

    fn run(&mut self, k: usize, partial: &mut Vec<i64>) {
        if self.exhausted {
            return;
        }
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let Some(used) = self.check(k, partial) else {
            self.stats.prunes += 1;
            return;
        };
        if k == self.coeffs.len() {
            self.stats.candidates += 1;
            self.found.push(partial.clone());
            return;
        }
        let hi = if k == 0 {
            // the first distinguishing entry is the vacuum entry
            1
        } else {
            let w = self.weight[self.pivot_slot[k]];
            ((1.0 + SLACK - used) / w).floor().max(0.0) as i64
        };
        let lo = if k == 0 { 1 } else { 0 };
        for c in lo..=hi {
            for u in 0..partial.len() {
                partial[u] += c * self.coeffs[k][u];
            }
            self.run(k + 1, partial);
            for u in 0..partial.len() {
                partial[u] -= c * self.coeffs[k][u];
            }
            if self.exhausted {
                return;
            }
        }
    }
}

pub fn enumerate_physical(md: &ModularData) -> Result<EnumerationResult> {
    enumerate_physical_with(md, SearchLimits::default())
}

pub fn enumerate_physical_with(md: &ModularData, limits: SearchLimits) -> Result<EnumerationResult> {
    if md.dim() > limits.max_weights {
        return Err(Error::Unsupported(format!(
            "{} has {} weights; search is capped at {}",
            md.alg,
            md.dim(),
            limits.max_weights
        )));
    }
    let basis = commutant_basis(md)?;
    if basis.dimension() > limits.max_dimension {
        return Err(Error::Unsupported(format!(
            "commutant of {} has dimension {} > {}",
            md.alg,
            basis.dimension(),
            limits.max_dimension
        )));
    }
    if basis.pivots.first() != Some(&(0, 0)) {
        return Err(Error::Construction("vacuum entry is not a distinguishing entry".into()));
    }
    let mut search = Search::new(&basis, md, limits.node_budget)?;
    let mut partial = vec![0i64; search.support.len()];
    search.run(0, &mut partial);

    let n = md.dim();
    let mut invariants = Vec::new();
    for sol in &search.found {
        let mut entries = vec![vec![0i64; n]; n];
        for (u, &(i, j)) in search.support.iter().enumerate() {
            entries[i][j] = sol[u] / search.denom;
        }
        let m = InvariantMatrix::new(&md.alg, "", entries)?;
        if verify_physical(&m, md)?.is_physical() && !invariants.contains(&m) {
            invariants.push(m);
        }
    }
    invariants.sort_by(|a, b| a.entries.cmp(&b.entries));
    Ok(EnumerationResult {
        alg: md.alg,
        status: if search.exhausted { SearchStatus::Inconclusive } else { SearchStatus::Complete },
        commutant_dimension: basis.dimension(),
        invariants,
        stats: search.stats,
    })
}
