//! Dense matrices over Z[ζ_N] in the power basis, with i64 coefficients.
//!
//! This is the workhorse for modular-data checks: products are accumulated in i128 and
//! reduced through the `x^e mod Φ_N` table, so an S·S† over a 36×36 matrix never
//! touches a bignum. Every narrowing back to i64 is checked.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::field::{field, CycField};
use super::number::CycNumber;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct CycMatrix {
    field: Arc<CycField>,
    dim: usize,
    data: Vec<i64>,
}

impl std::fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CycMatrix({}x{} over ζ_{})", self.dim, self.dim, self.conductor())
    }
}

impl PartialEq for CycMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.dim == other.dim && self.data == other.data
    }
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

impl CycMatrix {
    pub fn zeros(conductor: u32, dim: usize) -> Self {
        let field = field(conductor);
        let d = field.degree;
        CycMatrix {
            field,
            dim,
            data: vec![0; dim * dim * d],
        }
    }

    /// Builds a matrix from power-basis integer coefficient vectors, row-major.
    pub fn from_coeff_rows(conductor: u32, rows: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let dim = rows.len();
        let mut m = CycMatrix::zeros(conductor, dim);
        let d = m.degree();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for (j, c) in row.into_iter().enumerate() {
                if c.len() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        got: c.len(),
                    });
                }
                m.entry_mut(i, j).copy_from_slice(&c);
            }
        }
        Ok(m)
    }

    /// Writes `entries = scale · X` with X integral; returns `(X, scale)`.
    /// The scale is `base / den`, where `den` clears every coefficient denominator.
    pub fn factor(entries: &[Vec<CycNumber>], base: &CycNumber) -> Result<(Self, CycNumber)> {
        let inv = base.inv()?;
        let conductor = entries
            .iter()
            .flatten()
            .map(|e| e.conductor())
            .chain(std::iter::once(base.conductor()))
            .fold(1u32, |a, b| a.lcm(&b));
        let scaled: Vec<Vec<CycNumber>> = entries
            .par_iter()
            .map(|row| row.iter().map(|e| (e * &inv).embed(conductor)).collect())
            .collect();
        let mut den = BigInt::one();
        for e in scaled.iter().flatten() {
            for c in e.coeffs() {
                den = den.lcm(c.denom());
            }
        }
        let dim = entries.len();
        let mut m = CycMatrix::zeros(conductor, dim);
        for (i, row) in scaled.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let slot = m.entry_mut(i, j);
                for (k, c) in e.coeffs().iter().enumerate() {
                    let v = (c.numer() * (&den / c.denom()))
                        .to_i64()
                        .ok_or(Error::Overflow)?;
                    slot[k] = v;
                }
            }
        }
        let scale = base.scale(&Rational::new(BigInt::one(), den));
        Ok((m, scale))
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn degree(&self) -> usize {
        self.field.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &[i64] {
        let d = self.degree();
        let at = (i * self.dim + j) * d;
        &self.data[at..at + d]
    }

    fn entry_mut(&mut self, i: usize, j: usize) -> &mut [i64] {
        let d = self.degree();
        let at = (i * self.dim + j) * d;
        &mut self.data[at..at + d]
    }

    pub fn entry_cyc(&self, i: usize, j: usize) -> CycNumber {
        let coeffs = self
            .entry(i, j)
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        CycNumber::from_coeffs(self.conductor(), coeffs)
    }

    pub fn is_zero_entry(&self, i: usize, j: usize) -> bool {
        self.entry(i, j).iter().all(|&c| c == 0)
    }

    /// Embeds every entry into Q(ζ_M) for a multiple M of the conductor.
    pub fn embed(&self, m: u32) -> Result<Self> {
        let n = self.conductor();
        if m % n != 0 {
            return Err(Error::IncompatibleConductor {
                element: n,
                automorphism: m,
            });
        }
        if m == n {
            return Ok(self.clone());
        }
        let target = field(m);
        let step = (m / n) as i64;
        let mut out = CycMatrix {
            field: target.clone(),
            dim: self.dim,
            data: vec![0; self.dim * self.dim * target.degree],
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                let src: Vec<i64> = self.entry(i, j).to_vec();
                let mut acc = vec![0i128; target.degree];
                for (k, &c) in src.iter().enumerate() {
                    if c != 0 {
                        for (t, &r) in target.power(k as i64 * step).iter().enumerate() {
                            acc[t] += c as i128 * r as i128;
                        }
                    }
                }
                let slot = out.entry_mut(i, j);
                for t in 0..acc.len() {
                    slot[t] = narrow(acc[t])?;
                }
            }
        }
        Ok(out)
    }

    fn reduce_conv(&self, conv: &[i128]) -> Result<Vec<i64>> {
        let d = self.degree();
        let mut out = vec![0i128; d];
        for (e, &c) in conv.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if e < d {
                out[e] += c;
            } else {
                for (t, &r) in self.field.power(e as i64).iter().enumerate() {
                    if r != 0 {
                        out[t] += c * r as i128;
                    }
                }
            }
        }
        out.into_iter().map(narrow).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.conductor() != other.conductor() {
            let m = self.conductor().lcm(&other.conductor());
            return self.embed(m)?.mul(&other.embed(m)?);
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let dim = self.dim;
        let d = self.degree();
        let rows: Result<Vec<Vec<i64>>> = (0..dim)
            .into_par_iter()
            .map(|i| {
                let mut row = Vec::with_capacity(dim * d);
                for j in 0..dim {
                    let mut conv = vec![0i128; 2 * d - 1];
                    for k in 0..dim {
                        let a = self.entry(i, k);
                        let b = other.entry(k, j);
                        for (p, &x) in a.iter().enumerate() {
                            if x == 0 {
                                continue;
                            }
                            for (q, &y) in b.iter().enumerate() {
                                conv[p + q] += x as i128 * y as i128;
                            }
                        }
                    }
                    row.extend(self.reduce_conv(&conv)?);
                }
                Ok(row)
            })
            .collect();
        Ok(CycMatrix {
            field: self.field.clone(),
            dim,
            data: rows?.concat(),
        })
    }

    /// `M · self` for an integer matrix M.
    pub fn left_int(&self, m: &[Vec<i64>]) -> Result<Self> {
        self.check_int(m)?;
        let dim = self.dim;
        let d = self.degree();
        let mut out = CycMatrix::zeros(self.conductor(), dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = vec![0i128; d];
                for (k, &c) in m[i].iter().enumerate() {
                    if c != 0 {
                        for (t, &v) in self.entry(k, j).iter().enumerate() {
                            acc[t] += c as i128 * v as i128;
                        }
                    }
                }
                let slot = out.entry_mut(i, j);
                for t in 0..d {
                    slot[t] = narrow(acc[t])?;
                }
            }
        }
        Ok(out)
    }

    /// `self · M` for an integer matrix M.
    pub fn right_int(&self, m: &[Vec<i64>]) -> Result<Self> {
        self.check_int(m)?;
        let dim = self.dim;
        let d = self.degree();
        let mut out = CycMatrix::zeros(self.conductor(), dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = vec![0i128; d];
                for k in 0..dim {
                    let c = m[k][j];
                    if c != 0 {
                        for (t, &v) in self.entry(i, k).iter().enumerate() {
                            acc[t] += c as i128 * v as i128;
                        }
                    }
                }
                let slot = out.entry_mut(i, j);
                for t in 0..d {
                    slot[t] = narrow(acc[t])?;
                }
            }
        }
        Ok(out)
    }

    fn check_int(&self, m: &[Vec<i64>]) -> Result<()> {
        if m.len() != self.dim || m.iter().any(|r| r.len() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: m.len(),
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut out = CycMatrix::zeros(self.conductor(), self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entry_mut(j, i).copy_from_slice(self.entry(i, j));
            }
        }
        out
    }

    /// Applies σ_ℓ to every entry (ℓ must be a unit mod N; not checked here).
    pub fn galois(&self, ell: i64) -> Result<Self> {
        let d = self.degree();
        let mut out = CycMatrix::zeros(self.conductor(), self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = galois_coeffs(&self.field, self.entry(i, j), ell)?;
                out.entry_mut(i, j)[..d].copy_from_slice(&v);
            }
        }
        Ok(out)
    }

    pub fn conj_transpose(&self) -> Result<Self> {
        Ok(self.galois(-1)?.transpose())
    }

    /// True when the matrix equals `q · I`, for integer `q`.
    pub fn is_scalar(&self, q: i64) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let e = self.entry(i, j);
                let want0 = if i == j { q } else { 0 };
                e[0] == want0 && e[1..].iter().all(|&c| c == 0)
            })
        })
    }

    /// If the matrix is `q` times a permutation matrix, returns the permutation as a vector
    /// `p` with `self[i][p[i]] = q`.
    pub fn as_scaled_permutation(&self, q: i64) -> Option<Vec<usize>> {
        let mut perm = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut hit = None;
            for j in 0..self.dim {
                let e = self.entry(i, j);
                if e.iter().all(|&c| c == 0) {
                    continue;
                }
                if e[0] == q && e[1..].iter().all(|&c| c == 0) && hit.is_none() {
                    hit = Some(j);
                } else {
                    return None;
                }
            }
            perm.push(hit?);
        }
        Some(perm)
    }

    pub fn row(&self, i: usize) -> &[i64] {
        let d = self.degree();
        &self.data[i * self.dim * d..(i + 1) * self.dim * d]
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }
}

/// σ_ℓ on a power-basis integer vector.
pub fn galois_coeffs(field: &CycField, v: &[i64], ell: i64) -> Result<Vec<i64>> {
    let mut acc = vec![0i128; field.degree];
    for (k, &c) in v.iter().enumerate() {
        if c != 0 {
            for (t, &r) in field.power(k as i64 * ell).iter().enumerate() {
                acc[t] += c as i128 * r as i128;
            }
        }
    }
    acc.into_iter().map(narrow).collect()
}

/// Product of two power-basis integer vectors in the same field.
pub fn mul_coeffs(field: &CycField, a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    let d = field.degree;
    let mut conv = vec![0i128; 2 * d - 1];
    for (p, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (q, &y) in b.iter().enumerate() {
            conv[p + q] += x as i128 * y as i128;
        }
    }
    let mut out = vec![0i128; d];
    for (e, &c) in conv.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (t, &r) in field.power(e as i64).iter().enumerate() {
            out[t] += c * r as i128;
        }
    }
    out.into_iter().map(narrow).collect()
}

/// Reduces an element of the group ring Z[x]/(x^N − 1), given by its N coefficients,
/// to the power basis of Z[ζ_N].
pub fn reduce_group_ring(field: &CycField, g: &[i64]) -> Result<Vec<i64>> {
    let mut acc = vec![0i128; field.degree];
    for (e, &c) in g.iter().enumerate() {
        if c != 0 {
            for (t, &r) in field.power(e as i64).iter().enumerate() {
                acc[t] += c as i128 * r as i128;
            }
        }
    }
    acc.into_iter().map(narrow).collect()
}

/// True if `v` is the zero vector.
pub fn is_zero_coeffs(v: &[i64]) -> bool {
    v.iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dft(n: u32) -> CycMatrix {
        let rows = (0..n as i64)
            .map(|a| {
                (0..n as i64)
                    .map(|b| field(n).power(a * b).to_vec())
                    .collect()
            })
            .collect();
        CycMatrix::from_coeff_rows(n, rows).unwrap()
    }

    #[test]
    fn dft_unitary_up_to_scale() {
        for n in [3u32, 5, 8, 9] {
            let f = dft(n);
            let g = f.mul(&f.conj_transpose().unwrap()).unwrap();
            assert!(g.is_scalar(n as i64), "n = {n}");
            let sq = f.mul(&f).unwrap();
            let p = sq.as_scaled_permutation(n as i64).unwrap();
            for (a, &b) in p.iter().enumerate() {
                assert_eq!((a + b) % n as usize, 0);
            }
        }
    }

    #[test]
    fn factor_roundtrip() {
        let half = Rational::new(1.into(), 2.into());
        let e = vec![
            vec![CycNumber::from_rational(half.clone(), 4), CycNumber::root_of_unity(4, 1)],
            vec![CycNumber::root_of_unity(4, 1), CycNumber::from_int(-3)],
        ];
        let (m, scale) = CycMatrix::factor(&e, &CycNumber::one(1)).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(&m.entry_cyc(i, j) * &scale, e[i][j]);
            }
        }
        let emb = m.embed(12).unwrap();
        assert_eq!(emb.entry_cyc(0, 1), CycNumber::root_of_unity(4, 1).scale(&Rational::from_integer(2.into())));
    }

    #[test]
    fn int_products() {
        let f = dft(3);
        let swap = vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]];
        let l = f.left_int(&swap).unwrap();
        assert_eq!(l.entry(0, 1), f.entry(1, 1));
        let r = f.right_int(&swap).unwrap();
        assert_eq!(r.entry(1, 0), f.entry(1, 1));
    }
}
