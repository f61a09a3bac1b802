//! Per-conductor tables for Q(ζ_N) = Q[x]/Φ_N(x).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::ToPrimitive;

use super::poly::cyclotomic_polynomial;

/// Reduction data for one conductor. `reduce[e]` holds `x^e mod Φ_N` for `0 <= e < N`.
#[derive(Debug)]
pub struct CycField {
    pub conductor: u32,
    pub degree: usize,
    pub reduce: Vec<Vec<i64>>,
}

impl CycField {
    fn build(n: u32) -> Self {
        let phi: Vec<i64> = cyclotomic_polynomial(n)
            .iter()
            .map(|c| c.to_i64().expect("cyclotomic coefficient fits i64"))
            .collect();
        let degree = phi.len() - 1;
        let mut reduce = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for e in 0..n as usize {
            if e > 0 {
                // multiply by x, then eliminate x^degree with the monic relation
                let top = cur[degree - 1];
                for j in (1..degree).rev() {
                    cur[j] = cur[j - 1];
                }
                cur[0] = 0;
                if top != 0 {
                    for j in 0..degree {
                        cur[j] -= top * phi[j];
                    }
                }
            }
            reduce.push(cur.clone());
        }
        CycField {
            conductor: n,
            degree,
            reduce,
        }
    }

    /// `x^e mod Φ_N`, for any integer exponent.
    pub fn power(&self, e: i64) -> &[i64] {
        let n = self.conductor as i64;
        &self.reduce[e.rem_euclid(n) as usize]
    }
}

/// Shared, lazily built field tables.
pub fn field(n: u32) -> Arc<CycField> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return f.clone();
    }
    let built = Arc::new(CycField::build(n));
    cache.lock().unwrap().entry(n).or_insert(built).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_table_wraps() {
        let f = field(8);
        assert_eq!(f.degree, 4);
        // x^4 = -1 mod x^4 + 1
        assert_eq!(f.power(4), &[-1, 0, 0, 0]);
        assert_eq!(f.power(8), &[1, 0, 0, 0]);
        assert_eq!(f.power(-1), &[0, 0, 0, -1]);
    }

    #[test]
    fn conductor_one() {
        let f = field(1);
        assert_eq!(f.degree, 1);
        assert_eq!(f.power(5), &[1]);
    }
}
