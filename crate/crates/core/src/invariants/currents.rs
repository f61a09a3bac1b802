use num_bigint::BigInt;

use super::{Indexer, InvariantMatrix};
use crate::affine::{apply_conjugation, apply_current, charge, conjugations, current_r, AlgebraSpec, Conjugation, SimpleCurrent};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// I[J]_{μν} = Σ_{ℓ=1..N} δ(J^ℓμ, ν)·[Q_J(μ) + ℓR(J)/2N ∈ Z].
pub fn simple_current_invariant(j: SimpleCurrent, alg: &AlgebraSpec) -> Result<InvariantMatrix> {
    let idx = Indexer::new(alg);
    let big_n = j.order(alg) as i64;
    let r = current_r(j, alg)?;
    let mut m = InvariantMatrix::zeros(alg, if j == SimpleCurrent::Id { "I".to_string() } else { format!("I[{j}]") });
    for (a, mu) in idx.weights.iter().enumerate() {
        let q = charge(j, mu, alg)?;
        for ell in 1..=big_n {
            let t = &q + Rational::new(BigInt::from(ell * r), BigInt::from(2 * big_n));
            if !t.is_integer() {
                continue;
            }
            let nu = apply_current(j.power(ell as u32, alg), mu, alg)?;
            m.entries[a][idx.get(&nu)?] += 1;
        }
    }
    Ok(m)
}

/// The permutation matrix M_{λ,Cλ} = 1.
pub fn conjugation_matrix(c: Conjugation, alg: &AlgebraSpec) -> Result<InvariantMatrix> {
    let available = conjugations(alg).len();
    if c.0 >= available {
        return Err(Error::ConjugationOutOfRange { index: c.0, available });
    }
    let idx = Indexer::new(alg);
    let mut m = InvariantMatrix::zeros(alg, if c.0 == 0 { "I".to_string() } else { format!("C{}", c.0) });
    for (a, w) in idx.weights.iter().enumerate() {
        m.entries[a][idx.get(&apply_conjugation(c, w, alg)?)?] = 1;
    }
    Ok(m)
}
