//! Weight combinatorics of B_r^(1) and D_r^(1) at low level.

mod conjugation;
mod currents;
mod norms;
mod weights;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use conjugation::{apply_conjugation, conjugations, Conjugation};
pub use currents::{
    apply_current, charge, current_group, current_r, currents, fixed_points, orbits,
    simple_current_orbit, untwisted_set, SimpleCurrent,
};
pub use norms::{closed_form_norm, doubled_coordinates, inner_product_norm, norm_residue, norm_shift};
pub use weights::{enumerate_raw, enumerate_weights, is_spinor, named};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    B,
    D,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::B => write!(f, "B"),
            Series::D => write!(f, "D"),
        }
    }
}

impl std::str::FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Series::B),
            "D" | "d" => Ok(Series::D),
            other => Err(Error::InvalidAlgebra(format!("unknown series {other:?}"))),
        }
    }
}

/// An algebra instance X_{r,k}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct AlgebraSpec {
    pub series: Series,
    pub rank: u32,
    pub level: u32,
}

#[derive(Deserialize)]
struct RawSpec {
    series: Series,
    rank: u32,
    level: u32,
}

impl TryFrom<RawSpec> for AlgebraSpec {
    type Error = Error;
    fn try_from(r: RawSpec) -> Result<Self> {
        AlgebraSpec::new(r.series, r.rank, r.level)
    }
}

impl AlgebraSpec {
    pub fn new(series: Series, rank: u32, level: u32) -> Result<Self> {
        let min_rank = match series {
            Series::B => 3,
            Series::D => 4,
        };
        if rank < min_rank {
            return Err(Error::InvalidAlgebra(format!(
                "{series}_{rank} needs rank at least {min_rank}"
            )));
        }
        if !(1..=3).contains(&level) {
            return Err(Error::InvalidAlgebra(format!("level {level} is outside 1..=3")));
        }
        Ok(AlgebraSpec {
            series,
            rank,
            level,
        })
    }

    pub fn b(rank: u32, level: u32) -> Self {
        Self::new(Series::B, rank, level).expect("valid B algebra")
    }

    pub fn d(rank: u32, level: u32) -> Self {
        Self::new(Series::D, rank, level).expect("valid D algebra")
    }

    /// k + h∨.
    pub fn n(&self) -> u32 {
        match self.series {
            Series::B => self.level + 2 * self.rank - 1,
            Series::D => self.level + 2 * self.rank - 2,
        }
    }

    /// Comarks a_i^∨, the coefficients in the level constraint.
    pub fn comarks(&self) -> Vec<u32> {
        let r = self.rank as usize;
        (0..=r)
            .map(|i| match self.series {
                Series::B => {
                    if i <= 1 || i == r {
                        1
                    } else {
                        2
                    }
                }
                Series::D => {
                    if i <= 1 || i >= r - 1 {
                        1
                    } else {
                        2
                    }
                }
            })
            .collect()
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{},{}", self.series, self.rank, self.level)
    }
}

/// A highest weight as Dynkin labels (λ₀, λ₁, …, λ_r).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_vacuum(&self) -> bool {
        self.0[1..].iter().all(|&x| x == 0)
    }

    /// Builds the weight Σ c_i Λ_i (i ≥ 1) at the given algebra, filling in λ₀.
    pub fn from_fundamentals(alg: &AlgebraSpec, terms: &[(usize, u32)]) -> Result<Self> {
        let r = alg.rank as usize;
        let marks = alg.comarks();
        let mut labels = vec![0u32; r + 1];
        for &(i, c) in terms {
            if i == 0 || i > r {
                return Err(Error::InvalidAlgebra(format!("no fundamental weight Λ_{i}")));
            }
            labels[i] += c;
        }
        let used: u32 = (1..=r).map(|i| labels[i] * marks[i]).sum();
        if used > alg.level {
            return Err(Error::UnknownWeight(labels));
        }
        labels[0] = alg.level - used;
        Ok(Weight(labels))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.0[1..]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("L{}", i + 1)
                } else {
                    format!("{c}L{}", i + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(AlgebraSpec::new(Series::B, 2, 2).is_err());
        assert!(AlgebraSpec::new(Series::D, 3, 1).is_err());
        assert!(AlgebraSpec::new(Series::B, 3, 4).is_err());
        assert_eq!(AlgebraSpec::b(4, 2).n(), 9);
        assert_eq!(AlgebraSpec::d(7, 3).n(), 15);
    }

    #[test]
    fn json_roundtrip() {
        let a = AlgebraSpec::d(5, 2);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<AlgebraSpec>(&s).unwrap(), a);
        assert!(serde_json::from_str::<AlgebraSpec>(r#"{"series":"B","rank":2,"level":2}"#).is_err());
        let w = Weight(vec![1, 0, 2]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,0,2]");
    }

    #[test]
    fn display() {
        let alg = AlgebraSpec::d(7, 3);
        let w = Weight::from_fundamentals(&alg, &[(1, 1), (5, 1)]).unwrap();
        assert_eq!(w.to_string(), "L1+L5");
        assert_eq!(w.0[0], 0);
        assert_eq!(Weight(vec![3, 0, 0, 0, 0]).to_string(), "0");
    }
}
