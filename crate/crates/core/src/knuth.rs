//! One-dimensional partition counts and the topological-sequence
//! convolution p_m(n) = sum_k d_m(k) p_1(n-k).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// p_1(0..=n_max) by the Euler pentagonal-number recurrence.
pub fn p1_euler(n_max: usize) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); n_max + 1];
    table[0] = BigInt::one();
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let positive = k % 2 == 1;
            if positive {
                acc += &table[n - g1];
            } else {
                acc -= &table[n - g1];
            }
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                if positive {
                    acc += &table[n - g2];
                } else {
                    acc -= &table[n - g2];
                }
            }
            k += 1;
        }
        table[n] = acc;
    }
    table
}

/// Deconvolve: d_m(k) = p_m(k) - sum_{j<k} d_m(j) p_1(k-j). Both inputs
/// are indexed from 0 with p(0) = 1.
pub fn topo_deconvolve(pm: &[BigInt], p1: &[BigInt]) -> Result<Vec<BigInt>> {
    if pm.is_empty() || p1.len() < pm.len() {
        return Err(Error::Config("series too short to deconvolve".into()));
    }
    if !pm[0].is_one() || !p1[0].is_one() {
        return Err(Error::Config("series must start with p(0) = 1".into()));
    }
    let mut d = Vec::with_capacity(pm.len());
    for k in 0..pm.len() {
        let mut acc = pm[k].clone();
        for (j, dj) in d.iter().enumerate().take(k) {
            acc -= dj * &p1[k - j];
        }
        d.push(acc);
    }
    Ok(d)
}

/// Reconvolve: p_m(n) = sum_k d_m(k) p_1(n-k); exact inverse of
/// [`topo_deconvolve`].
pub fn reconvolve(d: &[BigInt], p1: &[BigInt]) -> Vec<BigInt> {
    let mut pm = Vec::with_capacity(d.len());
    for n in 0..d.len() {
        let mut acc = BigInt::zero();
        for (k, dk) in d.iter().enumerate().take(n + 1) {
            acc += dk * &p1[n - k];
        }
        pm.push(acc);
    }
    pm
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_matches_known_values() {
        let p = p1_euler(30);
        let known: Vec<i64> = vec![
            1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627,
            792, 1002, 1255, 1575, 1958,
        ];
        for (n, v) in known.iter().enumerate() {
            assert_eq!(p[n], BigInt::from(*v), "p_1({n})");
        }
        assert_eq!(p[30], BigInt::from(5604));
    }

    #[test]
    fn deconvolution_round_trip() {
        // p_3(0..8) from the partition table
        let p3: Vec<BigInt> = [1i64, 1, 4, 10, 26, 59, 140, 307, 684]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        let p1 = p1_euler(8);
        let d = topo_deconvolve(&p3, &p1).unwrap();
        assert_eq!(d[0], BigInt::from(1));
        assert_eq!(d[1], BigInt::from(0));
        // counts of topological sequences are nonnegative
        assert!(d.iter().all(|v| v >= &BigInt::from(0)), "{d:?}");
        assert_eq!(reconvolve(&d, &p1), p3);
    }

    #[test]
    fn d1_is_delta() {
        let p1 = p1_euler(10);
        let d = topo_deconvolve(&p1, &p1).unwrap();
        assert_eq!(d[0], BigInt::from(1));
        assert!(d[1..].iter().all(|v| v == &BigInt::from(0)));
    }
}
