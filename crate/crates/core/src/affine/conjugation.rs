use serde::{Deserialize, Serialize};

use super::{AlgebraSpec, Series, Weight};
use crate::error::{Error, Result};

/// A diagram symmetry fixing the 0-node. `Conjugation(0)` is the identity and
/// `Conjugation(1)` swaps λ_{r−1} ↔ λ_r; for D₄ indices 2..=5 complete the
/// permutations of (λ₁, λ₃, λ₄).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Conjugation(pub usize);

// Images of the label positions (1, 3, 4) under each D₄ conjugation.
const D4_PERMS: [[usize; 3]; 6] = [
    [1, 3, 4], // identity
    [1, 4, 3], // (3 4)
    [3, 1, 4], // (1 3)
    [4, 3, 1], // (1 4)
    [3, 4, 1], // (1 3 4)
    [4, 1, 3], // (1 4 3)
];

impl std::fmt::Display for Conjugation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "C{}", self.0)
    }
}

pub fn conjugations(alg: &AlgebraSpec) -> Vec<Conjugation> {
    let count = match alg.series {
        Series::B => 1,
        Series::D if alg.rank == 4 => 6,
        Series::D => 2,
    };
    (0..count).map(Conjugation).collect()
}

pub fn apply_conjugation(c: Conjugation, w: &Weight, alg: &AlgebraSpec) -> Result<Weight> {
    let available = conjugations(alg).len();
    if c.0 >= available {
        return Err(Error::ConjugationOutOfRange {
            index: c.0,
            available,
        });
    }
    let r = alg.rank as usize;
    let mut out = w.0.clone();
    if c.0 == 0 {
        return Ok(Weight(out));
    }
    if alg.rank != 4 {
        out.swap(r - 1, r);
        return Ok(Weight(out));
    }
    let src = [1usize, 3, 4];
    for (k, &to) in D4_PERMS[c.0].iter().enumerate() {
        out[to] = w.0[src[k]];
    }
    Ok(Weight(out))
}
