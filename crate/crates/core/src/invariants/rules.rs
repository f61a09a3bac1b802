//! Consequences every physical invariant must satisfy: the Galois rules, the simple-current
//! rules for J_L/J_R, and Π_L = Π(J_L) when the vacuum row and column are current orbits.

use num_integer::Integer;
use serde::Serialize;

use super::{Indexer, InvariantMatrix};
use crate::affine::{apply_current, charge, currents, untwisted_set, SimpleCurrent};
use crate::error::{Error, Result};
use crate::modular::{galois_data, ModularData};

#[derive(Clone, Debug, Serialize)]
pub struct SelectionReport {
    pub galois_automorphisms: usize,
    pub j_left: Vec<SimpleCurrent>,
    pub j_right: Vec<SimpleCurrent>,
    pub pi_left: Vec<usize>,
    pub pi_right: Vec<usize>,
    /// Whether the vacuum row and column are exactly current orbits, so that
    /// Π_L = Π(J_L) was tested.
    pub vacuum_orbit_form: bool,
}

fn fail(msg: String) -> Error {
    Error::SelectionRule(msg)
}

/// Checks the rules on a matrix already known to be physical; any failure is an error.
pub fn selection_rules(m: &InvariantMatrix, md: &ModularData) -> Result<SelectionReport> {
    let alg = &md.alg;
    let d = md.dim();
    let e = &m.entries;
    let idx = Indexer::new(alg);

    let n = md.conductor() as i64;
    let ells: Vec<i64> = (1..n).filter(|l| l.gcd(&n) == 1).collect();
    for &ell in &ells {
        let g = galois_data(md, ell)?;
        for i in 0..d {
            for j in 0..d {
                if e[i][j] != 0 && g.parity[i] != g.parity[j] {
                    return Err(fail(format!("Galois parity differs at ({i},{j}) for ℓ={ell}")));
                }
                let s = (g.parity[i] * g.parity[j]) as i64;
                if e[i][j] != s * e[g.perm[i]][g.perm[j]] {
                    return Err(fail(format!("Galois symmetry fails at ({i},{j}) for ℓ={ell}")));
                }
            }
        }
    }

    let cur = currents(alg);
    let at = |j: SimpleCurrent, i: usize| -> Result<usize> { idx.get(&apply_current(j, &idx.weights[i], alg)?) };
    for &ja in &cur {
        for &jb in &cur {
            let x = at(ja, 0)?;
            let y = at(jb, 0)?;
            let i = e[x][y] != 0;
            let ii = e[x][y] == 1;
            let mut iii = true;
            let mut iv = true;
            for l in 0..d {
                for u in 0..d {
                    if e[l][u] != 0 && charge(ja, &idx.weights[l], alg)? != charge(jb, &idx.weights[u], alg)? {
                        iii = false;
                    }
                    if e[at(ja, l)?][at(jb, u)?] != e[l][u] {
                        iv = false;
                    }
                }
            }
            if !(i == ii && ii == iii && iii == iv) {
                return Err(fail(format!(
                    "current rules inconsistent for ({ja},{jb}): {i} {ii} {iii} {iv}"
                )));
            }
        }
    }

    let j_left: Vec<SimpleCurrent> = cur.iter().copied().filter(|&j| at(j, 0).map(|x| e[x][0] != 0).unwrap_or(false)).collect();
    let j_right: Vec<SimpleCurrent> = cur.iter().copied().filter(|&j| at(j, 0).map(|x| e[0][x] != 0).unwrap_or(false)).collect();
    let pi_left: Vec<usize> = (0..d).filter(|&i| e[i].iter().any(|&x| x != 0)).collect();
    let pi_right: Vec<usize> = (0..d).filter(|&j| (0..d).any(|i| e[i][j] != 0)).collect();

    let orbit_column = |js: &[SimpleCurrent], row: bool| -> Result<bool> {
        let mut want = vec![0i64; d];
        for &j in js {
            want[at(j, 0)?] += 1;
        }
        Ok((0..d).all(|k| (if row { e[0][k] } else { e[k][0] }) == want[k]))
    };
    let vacuum_orbit_form = orbit_column(&j_right, true)? && orbit_column(&j_left, false)?;
    if vacuum_orbit_form {
        if untwisted_set(&j_left, &idx.weights, alg)? != pi_left {
            return Err(fail("Π_L(M) ≠ Π(J_L)".into()));
        }
        if untwisted_set(&j_right, &idx.weights, alg)? != pi_right {
            return Err(fail("Π_R(M) ≠ Π(J_R)".into()));
        }
    }
    Ok(SelectionReport {
        galois_automorphisms: ells.len(),
        j_left,
        j_right,
        pi_left,
        pi_right,
        vacuum_orbit_form,
    })
}
