use super::{Indexer, InvariantMatrix};
use crate::affine::{apply_current, currents, AlgebraSpec, Weight};
use crate::error::Result;

/// E(D_{7,3}) = Σ_J |χ_{J0} + χ_{J(Λ₁+Λ₅)}|² + Σ_J |χ_{JΛ₃} + χ_{J(Λ₁+Λ₆+Λ₇)}|².
pub fn exceptional_d73() -> Result<InvariantMatrix> {
    let alg = AlgebraSpec::d(7, 3);
    let idx = Indexer::new(&alg);
    let mut m = InvariantMatrix::zeros(&alg, "E(D7,3)");
    let pairs = [
        (Weight::from_fundamentals(&alg, &[])?, Weight::from_fundamentals(&alg, &[(1, 1), (5, 1)])?),
        (
            Weight::from_fundamentals(&alg, &[(3, 1)])?,
            Weight::from_fundamentals(&alg, &[(1, 1), (6, 1), (7, 1)])?,
        ),
    ];
    for (a, b) in &pairs {
        for j in currents(&alg) {
            let x = idx.get(&apply_current(j, a, &alg)?)?;
            let y = idx.get(&apply_current(j, b, &alg)?)?;
            for p in [x, y] {
                for q in [x, y] {
                    m.entries[p][q] += 1;
                }
            }
        }
    }
    Ok(m)
}
