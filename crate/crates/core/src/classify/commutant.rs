//! Exact commutants: the space of matrices M with MS = SM whose support respects a
//! diagonal class labelling (the T residues). Solved modulo a large prime, lifted by
//! rational reconstruction, then checked exactly against the integral kernel of S.

use num_bigint::BigInt;
use num_integer::Integer;
use num_prime::nt_funcs::is_prime64;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{CycMatrix, Rational};
use crate::modular::ModularData;

#[derive(Clone, Debug)]
pub struct CommutantBasis {
    /// Side length of the matrices.
    pub size: usize,
    /// Distinguishing entry of each basis element: 1 there, 0 in every other element.
    pub pivots: Vec<(usize, usize)>,
    pub basis: Vec<Vec<Vec<Rational>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutantSummary {
    pub size: usize,
    pub dimension: usize,
    pub pivots: Vec<(usize, usize)>,
}

impl CommutantBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn summary(&self) -> CommutantSummary {
        CommutantSummary {
            size: self.size,
            dimension: self.dimension(),
            pivots: self.pivots.clone(),
        }
    }

    /// Coordinates of `m` if it lies in the span.
    pub fn coordinates(&self, m: &[Vec<Rational>]) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.pivots.iter().map(|&(i, j)| m[i][j].clone()).collect();
        for i in 0..self.size {
            for j in 0..self.size {
                let mut v = Rational::zero();
                for (k, b) in self.basis.iter().enumerate() {
                    if !b[i][j].is_zero() && !c[k].is_zero() {
                        v += &b[i][j] * &c[k];
                    }
                }
                if v != m[i][j] {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn contains_int(&self, m: &[Vec<i64>]) -> bool {
        self.coordinates(&to_rational(m)).is_some()
    }

    /// Each basis element as an integer matrix and its common denominator.
    pub fn integer_basis(&self) -> Vec<(Vec<Vec<i64>>, i64)> {
        self.basis.iter().map(|b| clear_denominators(b)).collect()
    }
}

pub(crate) fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect()
}

fn clear_denominators(b: &[Vec<Rational>]) -> (Vec<Vec<i64>>, i64) {
    let mut l = BigInt::one();
    for x in b.iter().flatten() {
        l = l.lcm(x.denom());
    }
    let m = b
        .iter()
        .map(|r| r.iter().map(|x| (x * &l).to_integer().to_i64().unwrap_or(i64::MAX)).collect())
        .collect();
    (m, l.to_i64().unwrap_or(i64::MAX))
}

struct Fp(u64);

impl Fp {
    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }
    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.0 - 2)
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
}

/// a ≡ num/den (mod p) with |num|, den ≤ √(p/2).
fn reconstruct(a: u64, p: u64) -> Option<Rational> {
    let bound = ((p / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    Some(Rational::new(BigInt::from(r1), BigInt::from(t1)))
}

fn primes_below_2_61() -> impl Iterator<Item = u64> {
    (0..).map(|k| (1u64 << 61) - 1 - 2 * k).filter(|&p| is_prime64(p))
}

/// Commutant of the kernel X (hence of S = scale·X) among matrices supported on
/// equal-class pairs. `preference` orders the unknowns; earlier entries are chosen as
/// distinguishing entries first.
pub fn commutant_of(kernel: &CycMatrix, classes: &[usize], preference: &[(usize, usize)]) -> Result<CommutantBasis> {
    let n = kernel.dim();
    if classes.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: classes.len(),
        });
    }
    // unknowns: equal-class pairs, least preferred first so the echelon form leaves the
    // preferred ones free
    let mut unknowns: Vec<(usize, usize)> = preference.iter().rev().copied().filter(|&(i, j)| classes[i] == classes[j]).collect();
    let mut seen = vec![vec![false; n]; n];
    for &(i, j) in &unknowns {
        seen[i][j] = true;
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| classes[i] == classes[j] && !seen[i][j])
        .collect();
    rest.reverse();
    rest.extend(unknowns);
    unknowns = rest;
    let mut col = vec![vec![usize::MAX; n]; n];
    for (c, &(i, j)) in unknowns.iter().enumerate() {
        col[i][j] = c;
    }

    for p in primes_below_2_61().take(4) {
        let basis = solve_mod(kernel, &unknowns, &col, p);
        if let Some(basis) = basis {
            let ok = basis.iter().all(|(b, _)| {
                let (m, _) = clear_denominators(b);
                matches!((kernel.left_int(&m), kernel.right_int(&m)), (Ok(a), Ok(c)) if a == c)
            });
            if ok {
                let (basis, pivots): (Vec<_>, Vec<_>) = basis.into_iter().unzip();
                let mut out = CommutantBasis { size: n, pivots, basis };
                // order by preference
                let rank = |e: &(usize, usize)| preference.iter().position(|x| x == e).unwrap_or(usize::MAX);
                let mut order: Vec<usize> = (0..out.basis.len()).collect();
                order.sort_by_key(|&k| (rank(&out.pivots[k]), out.pivots[k]));
                out.basis = order.iter().map(|&k| out.basis[k].clone()).collect();
                out.pivots = order.iter().map(|&k| out.pivots[k]).collect();
                return Ok(out);
            }
        }
    }
    Err(Error::Construction("commutant lift failed for four primes".into()))
}

type Lifted = (Vec<Vec<Rational>>, (usize, usize));

fn solve_mod(kernel: &CycMatrix, unknowns: &[(usize, usize)], col: &[Vec<usize>], p: u64) -> Option<Vec<Lifted>> {
    let f = Fp(p);
    let n = kernel.dim();
    let u = unknowns.len();
    let deg = kernel.degree();
    let mut rows: Vec<Option<Vec<u64>>> = vec![None; u];
    let mut rank = 0;
    let mut v = vec![0u64; u];
    'eqs: for i in 0..n {
        for j in 0..n {
            for c in 0..deg {
                if rank + 1 >= u {
                    break 'eqs;
                }
                v.iter_mut().for_each(|x| *x = 0);
                let mut any = false;
                // (MX)_{ij} − (XM)_{ij}, coefficient c
                for k in 0..n {
                    let a = col[i][k];
                    if a != usize::MAX {
                        let x = kernel.entry(k, j)[c];
                        if x != 0 {
                            v[a] = (v[a] + f.from_i64(x)) % p;
                            any = true;
                        }
                    }
                    let b = col[k][j];
                    if b != usize::MAX {
                        let x = kernel.entry(i, k)[c];
                        if x != 0 {
                            v[b] = f.sub(v[b], f.from_i64(x));
                            any = true;
                        }
                    }
                }
                if !any {
                    continue;
                }
                for t in 0..u {
                    if v[t] == 0 {
                        continue;
                    }
                    match &rows[t] {
                        Some(r) => {
                            let s = v[t];
                            for q in t..u {
                                if r[q] != 0 {
                                    v[q] = f.sub(v[q], f.mul(s, r[q]));
                                }
                            }
                        }
                        None => {
                            let inv = f.inv(v[t]);
                            let r: Vec<u64> = v.iter().map(|&x| f.mul(x, inv)).collect();
                            rows[t] = Some(r);
                            rank += 1;
                            break;
                        }
                    }
                }
            }
        }
    }
    // back-substitute to reduced form
    let pivots: Vec<usize> = (0..u).filter(|&t| rows[t].is_some()).collect();
    for &t in pivots.iter().rev() {
        let r = rows[t].clone()?;
        for &s in &pivots {
            if s >= t {
                break;
            }
            if let Some(other) = rows[s].as_mut() {
                let k = other[t];
                if k != 0 {
                    for q in t..u {
                        if r[q] != 0 {
                            other[q] = f.sub(other[q], f.mul(k, r[q]));
                        }
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for free in (0..u).filter(|&t| rows[t].is_none()) {
        let mut m = vec![vec![Rational::zero(); n]; n];
        let (fi, fj) = unknowns[free];
        m[fi][fj] = Rational::one();
        for &t in &pivots {
            let x = rows[t].as_ref()?[free];
            if x != 0 {
                let (a, b) = unknowns[t];
                m[a][b] = -reconstruct(x, p)?;
            }
        }
        out.push((m, (fi, fj)));
    }
    Some(out)
}

/// The vacuum entry first, then unknowns by decreasing S₀λS₀μ: the distinguishing
/// entries are then the ones the sum rule bounds most tightly.
pub fn vacuum_preference(md: &ModularData) -> Vec<(usize, usize)> {
    let d = md.dim();
    let s0: Vec<f64> = (0..d).map(|j| md.vacuum_s_f64(j)).collect();
    let mut all: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
    all.sort_by(|a, b| {
        let wa = s0[a.0] * s0[a.1];
        let wb = s0[b.0] * s0[b.1];
        (*b == (0, 0))
            .cmp(&(*a == (0, 0)))
            .then(wb.partial_cmp(&wa).unwrap_or(std::cmp::Ordering::Equal))
            .then(a.cmp(b))
    });
    all
}

pub(crate) fn residue_classes<T: PartialEq>(labels: &[T]) -> Vec<usize> {
    let mut reps: Vec<&T> = Vec::new();
    labels
        .iter()
        .map(|x| match reps.iter().position(|r| *r == x) {
            Some(k) => k,
            None => {
                reps.push(x);
                reps.len() - 1
            }
        })
        .collect()
}

pub fn commutant_basis(md: &ModularData) -> Result<CommutantBasis> {
    if md.dim() > 64 {
        return Err(Error::Unsupported(format!("commutant of {} needs |P_+| ≤ 64", md.alg)));
    }
    commutant_of(&md.kernel, &residue_classes(&md.normsq2n), &vacuum_preference(md))
}
