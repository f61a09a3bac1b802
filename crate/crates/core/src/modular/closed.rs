//! Level-2 S matrices from their closed forms.
//!
//! Entries are given on a small set of representatives (the γ^a and the spinor
//! fundamentals); every other weight is J^i of a representative, and
//! S_{J^i x, J^j y} = e^{2πi (i·Q_J(y) + j·Q_J(x))} S_{xy}.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::affine::named::{fundamental, gamma};
use crate::affine::{apply_current, charge, AlgebraSpec, Series, SimpleCurrent, Weight};
use crate::error::{Error, Result};
use crate::exact::{sqrt_rational, CycMatrix, CycNumber, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rep {
    Gamma(i64),
    /// Λ_r, or Λ_{r−1} for D.
    Spinor(i64),
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

fn phase(x: &Rational) -> CycNumber {
    let num: i64 = x.numer().try_into().expect("small charge");
    let den: u32 = x.denom().try_into().expect("small charge");
    CycNumber::root_of_unity(den, num)
}

/// (−i)^r.
fn minus_i_pow(r: i64) -> CycNumber {
    CycNumber::root_of_unity(4, -r)
}

/// 2cos(2π·k/m), as ζ_m^k + ζ_m^{−k}.
fn two_cos(k: i64, m: u32) -> CycNumber {
    CycNumber::from_exponents(m, &[(k, Rational::one()), (-k, Rational::one())])
}

/// Weights as (power of the current, representative).
fn rep_table(alg: &AlgebraSpec, weights: &[Weight]) -> Result<(SimpleCurrent, Vec<(u32, Rep, Weight)>)> {
    let r = alg.rank as i64;
    let (j, reps): (SimpleCurrent, Vec<Rep>) = match alg.series {
        Series::B => (
            SimpleCurrent::Jb,
            (0..=r).map(Rep::Gamma).chain([Rep::Spinor(r)]).collect(),
        ),
        Series::D => (
            SimpleCurrent::Jv,
            (0..=r).map(Rep::Gamma).chain([Rep::Spinor(r), Rep::Spinor(r - 1)]).collect(),
        ),
    };
    let rep_weight = |x: Rep| match x {
        Rep::Gamma(a) => gamma(alg, a as u32),
        Rep::Spinor(s) => fundamental(alg, s as u32),
    };
    let mut table = Vec::with_capacity(weights.len());
    'w: for w in weights {
        for i in 0..2u32 {
            for &x in &reps {
                let base = rep_weight(x)?;
                let moved = if i == 0 { base.clone() } else { apply_current(j, &base, alg)? };
                if &moved == w {
                    table.push((i, x, base));
                    continue 'w;
                }
            }
        }
        return Err(Error::Construction(format!("{w} is not reached by a level-2 representative of {alg}")));
    }
    Ok((j, table))
}

/// S on representatives, times 2√n: the entries then lie in Q(ζ_{lcm(8, 2n)}).
fn rep_entry(alg: &AlgebraSpec, x: Rep, y: Rep) -> CycNumber {
    let r = alg.rank as i64;
    let n = alg.n() as i64;
    let sqrt_n = sqrt_rational(&q(n, 1));
    let half = |a: i64, top: i64| if a == 0 || a == top { q(1, 2) } else { Rational::one() };
    match alg.series {
        Series::B => match (x, y) {
            // (2/√n)cos(2πab/n)·f(a)f(b), times 2√n
            (Rep::Gamma(a), Rep::Gamma(b)) => {
                let f = half(a, -1) * half(b, -1) * q(2, 1);
                two_cos(a * b, n as u32).scale(&f)
            }
            (Rep::Gamma(0), Rep::Spinor(_)) | (Rep::Spinor(_), Rep::Gamma(0)) | (Rep::Spinor(_), Rep::Spinor(_)) => {
                sqrt_n
            }
            _ => CycNumber::zero(1),
        },
        Series::D => {
            // S_{0Λ_r}·2√n = √r·... = √n/√2 · 1 = √r
            let s0 = sqrt_rational(&q(r, 1));
            match (x, y) {
                (Rep::Gamma(a), Rep::Gamma(b)) => {
                    let f = half(a, r) * half(b, r) * q(2, 1);
                    two_cos(a * b, 2 * r as u32).scale(&f)
                }
                (Rep::Gamma(0), Rep::Spinor(_)) | (Rep::Spinor(_), Rep::Gamma(0)) => s0,
                (Rep::Gamma(a), Rep::Spinor(s)) | (Rep::Spinor(s), Rep::Gamma(a)) if a == r => {
                    let t = &minus_i_pow(r) * &s0;
                    if s == r {
                        t
                    } else {
                        -t
                    }
                }
                (Rep::Spinor(s), Rep::Spinor(t)) => {
                    let p = minus_i_pow(r);
                    let one = CycNumber::one(1);
                    let v = if s == t { &one + &p } else { &one - &p };
                    (&v * &sqrt_n).scale(&q(1, 2))
                }
                _ => CycNumber::zero(1),
            }
        }
    }
}

/// Closed-form S at level 2, as an integral kernel and a scale.
pub fn closed_form(alg: &AlgebraSpec, weights: &[Weight]) -> Result<(CycMatrix, CycNumber)> {
    if alg.level != 2 {
        return Err(Error::Unsupported(format!("closed forms exist only at level 2, not {alg}")));
    }
    let (j, table) = rep_table(alg, weights)?;
    let dim = weights.len();
    let mut entries = vec![vec![CycNumber::zero(1); dim]; dim];
    for (a, (i, x, xw)) in table.iter().enumerate() {
        for (b, (jj, y, yw)) in table.iter().enumerate() {
            let base = rep_entry(alg, *x, *y);
            if base.is_zero() {
                continue;
            }
            let mut exponent = Rational::zero();
            if *i == 1 {
                exponent += charge(j, yw, alg)?;
            }
            if *jj == 1 {
                exponent += charge(j, xw, alg)?;
            }
            entries[a][b] = &base * &phase(&exponent);
        }
    }
    // divide out the 2√n carried by rep_entry
    let base = sqrt_rational(&q(1, 4 * alg.n() as i64));
    let lifted: Vec<Vec<CycNumber>> = entries
        .iter()
        .map(|row| row.iter().map(|e| e * &base).collect())
        .collect();
    CycMatrix::factor(&lifted, &base)
}

/// Human-readable closed-form description of S_{λμ} on representatives.
pub fn describe(alg: &AlgebraSpec, weights: &[Weight], a: usize, b: usize) -> Option<String> {
    let (_, table) = rep_table(alg, weights).ok()?;
    let (i, x, _) = table[a];
    let (jj, y, _) = table[b];
    let twist = if i + jj > 0 { "e(Q)·" } else { "" };
    let r = alg.rank as i64;
    let n = alg.n();
    let body = match (alg.series, x, y) {
        (Series::B, Rep::Gamma(p), Rep::Gamma(t)) => {
            let f = match (p == 0, t == 0) {
                (true, true) => "1/4·",
                (true, false) | (false, true) => "1/2·",
                _ => "",
            };
            format!("{f}2/√{n}·cos(2π·{}/{n})", p * t)
        }
        (Series::D, Rep::Gamma(p), Rep::Gamma(t)) => {
            let edge = |c: i64| c == 0 || c == r;
            let f = match (edge(p), edge(t)) {
                (true, true) => "1/4·",
                (true, false) | (false, true) => "1/2·",
                _ => "",
            };
            format!("{f}2/√{n}·cos(π·{}/{r})", p * t)
        }
        _ => {
            let v = rep_entry(alg, x, y);
            if v.is_zero() {
                "0".to_string()
            } else {
                let (re, im) = v.to_complex_f64();
                let d = 2.0 * (n as f64).sqrt();
                format!("{:.6}{:+.6}i", re / d, im / d)
            }
        }
    };
    Some(format!("{twist}{body}"))
}
