//! Independent re-derivation of the classification: exact commutants, bounded search
//! for all physical invariants, permutation search, and the theorem lists.

pub mod ade7;
pub mod commutant;
pub mod enumerate;
pub mod theorems;
pub mod unfold;

pub use ade7::{ade7_search, Ade7Result};
pub use commutant::{commutant_basis, commutant_of, CommutantBasis, CommutantSummary};
pub use enumerate::{enumerate_physical, enumerate_physical_with, EnumerationResult, SearchLimits, SearchStats, SearchStatus};
pub use theorems::{count_formulas, theorem_list, CountPrediction, ListedInvariant, TheoremList};
pub use unfold::{fold, unfold, unfolded_basis, unfolded_commutant, UnfoldedElement, UnfoldedMatrix, Variant};
