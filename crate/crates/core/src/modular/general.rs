//! The Kac–Peterson S matrix from the Weyl alternating sum.
//!
//! For B_r the sum over signed permutations factors as det[ζ^{−ab} − ζ^{ab}], and for
//! D_r (even sign changes only) as det[ζ^{−ab} + ζ^{ab}] + det[ζ^{−ab} − ζ^{ab}] up to
//! a factor 2 that the normalisation absorbs; a, b are the doubled orthogonal
//! coordinates of λ+ρ, μ+ρ and ζ = ζ_{4n}. Determinants are evaluated in the group ring
//! Z[x]/(x^{4n} − 1) by a subset recursion over columns, which is exact and costs
//! r·2^r ring operations per entry.

use rayon::prelude::*;

use crate::affine::{doubled_coordinates, enumerate_weights, AlgebraSpec, Series};
use crate::error::{Error, Result};
use crate::exact::field::field;
use crate::exact::matrix::reduce_group_ring;
use crate::exact::{sign_of_real, CycMatrix, CycNumber, Rational};

pub const DEFAULT_MAX_RANK: u32 = 10;

/// Unnormalised S together with its normalisation: S = scale · kernel with
/// kernel·kernel† = norm · I.
#[derive(Clone, Debug)]
pub struct RawSMatrix {
    pub kernel: CycMatrix,
    pub norm: i64,
}

fn group_ring_det(rows: &[i64], cols: &[i64], m: usize, plus: bool) -> Vec<i64> {
    let r = rows.len();
    let full = (1usize << r) - 1;
    let mut f = vec![vec![0i64; m]; 1 << r];
    f[0][0] = 1;
    let mm = m as i64;
    for mask in 0..full {
        let row = mask.count_ones() as usize;
        if f[mask].iter().all(|&c| c == 0) {
            continue;
        }
        let cur = f[mask].clone();
        for j in 0..r {
            if mask & (1 << j) != 0 {
                continue;
            }
            let above = (mask >> (j + 1)).count_ones();
            let sign: i64 = if above % 2 == 0 { 1 } else { -1 };
            let x = (rows[row] * cols[j]).rem_euclid(mm) as usize;
            let neg = (mm as usize - x) % m;
            let target = &mut f[mask | (1 << j)];
            let s_pos = if plus { sign } else { -sign };
            for (e, &c) in cur.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                // c·x^e · (x^{−ab} ± x^{ab})
                target[(e + neg) % m] += sign * c;
                target[(e + x) % m] += s_pos * c;
            }
        }
    }
    f.swap_remove(full)
}

/// Exponent convention: entries are built from exp(sign · 2πi (λ+ρ, μ+ρ)/n).
const EXPONENT_SIGN: i64 = -1;

fn unnormalised_entry(a: &[i64], b: &[i64], m: usize, series: Series) -> Vec<i64> {
    let b: Vec<i64> = b.iter().map(|x| -EXPONENT_SIGN * x).collect();
    match series {
        Series::B => group_ring_det(a, &b, m, false),
        Series::D => {
            let p = group_ring_det(a, &b, m, true);
            let q = group_ring_det(a, &b, m, false);
            p.iter().zip(&q).map(|(x, y)| x + y).collect()
        }
    }
}

/// The S matrix by the Weyl-sum construction, for rank up to `max_rank`.
pub fn general_raw(alg: &AlgebraSpec, max_rank: u32) -> Result<(RawSMatrix, CycNumber)> {
    if alg.rank > max_rank {
        return Err(Error::Unsupported(format!(
            "general S construction is capped at rank {max_rank} (asked for {alg})"
        )));
    }
    let weights = enumerate_weights(alg);
    let coords: Vec<Vec<i64>> = weights.iter().map(|w| doubled_coordinates(w, alg)).collect();
    let m = 4 * alg.n() as usize;
    let fld = field(m as u32);
    let dim = weights.len();
    let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i..dim).map(move |j| (i, j))).collect();
    let values: Vec<Result<Vec<i64>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let g = unnormalised_entry(&coords[i], &coords[j], m, alg.series);
            reduce_group_ring(&fld, &g)
        })
        .collect();
    let mut rows = vec![vec![Vec::new(); dim]; dim];
    for (&(i, j), v) in pairs.iter().zip(values) {
        let v = v?;
        rows[j][i] = v.clone();
        rows[i][j] = v;
    }
    let mut kernel = CycMatrix::from_coeff_rows(m as u32, rows)?;

    // Phase: rotate so that the vacuum entry is real and positive.
    let s00 = kernel.entry_cyc(0, 0);
    let mut phase = None;
    for p in 0..4i64 {
        let u = CycNumber::root_of_unity(4, p);
        let t = &s00 * &u;
        if t.is_real() && sign_of_real(&t)? > 0 {
            phase = Some(p);
            break;
        }
    }
    let p = phase.ok_or_else(|| Error::Construction(format!("vacuum entry of {alg} has no quarter-turn phase")))?;
    if p != 0 {
        let rot = (m as i64 / 4) * p;
        let rows: Result<Vec<Vec<Vec<i64>>>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let u = fld.power(rot).to_vec();
                        crate::exact::matrix::mul_coeffs(&fld, kernel.entry(i, j), &u)
                    })
                    .collect()
            })
            .collect();
        kernel = CycMatrix::from_coeff_rows(m as u32, rows?)?;
    }

    // norm = Σ_μ |S_0μ|², which must be a rational integer.
    let mut total = CycNumber::zero(m as u32);
    for j in 0..dim {
        let e = kernel.entry_cyc(0, j);
        total = &total + &(&e * &e.conj());
    }
    let norm = total
        .to_rational()
        .filter(|q| q.is_integer())
        .and_then(|q| num_traits::ToPrimitive::to_i64(&q.to_integer()))
        .ok_or_else(|| Error::Construction(format!("vacuum row norm of {alg} is not an integer")))?;
    let scale = crate::exact::sqrt_rational(&Rational::new(1.into(), norm.into()));
    Ok((RawSMatrix { kernel, norm }, scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_identity_like() {
        // rows·cols = 0 everywhere: det of the all-(x^0 + x^0) matrix is 0 for r ≥ 2
        let d = group_ring_det(&[0, 0], &[1, 2], 8, true);
        assert!(d.iter().all(|&c| c == 0));
        // 1×1: x^{−ab} − x^{ab}
        let d1 = group_ring_det(&[1], &[1], 8, false);
        let mut want = vec![0i64; 8];
        want[7] = 1;
        want[1] = -1;
        assert_eq!(d1, want);
    }

    #[test]
    fn two_by_two_matches_expansion() {
        let m = 12;
        let (a, b) = ([1i64, 2], [3i64, 5]);
        let e = |i: usize, j: usize| {
            let mut v = vec![0i64; m];
            let x = (a[i] * b[j]).rem_euclid(m as i64) as usize;
            v[(m - x) % m] += 1;
            v[x] -= 1;
            v
        };
        let conv = |p: &[i64], q: &[i64]| {
            let mut out = vec![0i64; m];
            for (i, &x) in p.iter().enumerate() {
                for (j, &y) in q.iter().enumerate() {
                    out[(i + j) % m] += x * y;
                }
            }
            out
        };
        let lhs = conv(&e(0, 0), &e(1, 1));
        let rhs = conv(&e(0, 1), &e(1, 0));
        let want: Vec<i64> = lhs.iter().zip(&rhs).map(|(x, y)| x - y).collect();
        assert_eq!(group_ring_det(&a, &b, m, false), want);
    }
}
