//! The alpha and beta triangles.
//!
//! g_m(r) = (2m)!! sum_x C(r,x) c_{m,x} is a degree-2m polynomial in r
//! with g_m(0) = 0 for m > 0 and unit leading coefficient. Expanding the
//! binomials symbolically over exact rationals (equivalent to using
//! Stirling numbers of the first kind) gives alpha_{m,z} as the
//! coefficient of r^{2m-z}. Integrality of alpha and beta is conjectural;
//! a fractional entry is reported as a violation, never rounded.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binom::{binomial, double_factorial};
use crate::triangle::{Triangle, TriangleKind};
use crate::{Error, Result};

/// Coefficients of C(r, x) as a polynomial in r, degree x, exact.
fn binom_poly(x: usize) -> Vec<BigRational> {
    // prod_{i=0}^{x-1} (r - i) / x!
    let mut coeffs = vec![BigRational::one()]; // the constant polynomial 1
    for i in 0..x {
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c; // r * c r^k
            next[k] -= c * BigRational::from_integer(BigInt::from(i));
        }
        coeffs = next;
    }
    let fact = BigRational::from_integer(crate::binom::factorial(x));
    coeffs.into_iter().map(|c| c / &fact).collect()
}

/// g_m(r) as exact rational coefficients by degree (length 2m+1).
pub fn g_poly(c: &Triangle, m: usize) -> Result<Vec<BigRational>> {
    let mut coeffs = vec![BigRational::zero(); 2 * m + 1];
    for x in 0..=2 * m {
        let cv = c.need(m, x)?;
        if cv.is_zero() {
            continue;
        }
        let cv = BigRational::from_integer(cv);
        for (k, b) in binom_poly(x).into_iter().enumerate() {
            coeffs[k] += b * &cv;
        }
    }
    let df = BigRational::from_integer(double_factorial(2 * m as i64));
    for c in &mut coeffs {
        *c *= &df;
    }
    // structural checks: g_m(0) = 0 for m > 0, leading coefficient 1
    if m > 0 && !coeffs[0].is_zero() {
        return Err(Error::Support(format!("g_{m}(0) = {} != 0", coeffs[0])));
    }
    if coeffs[2 * m] != BigRational::one() {
        return Err(Error::Support(format!(
            "leading coefficient of g_{m} is {}, expected 1",
            coeffs[2 * m]
        )));
    }
    Ok(coeffs)
}

/// alpha rows 0..=m_max from C rows 0..=m_max; alpha_{m,z} is the
/// coefficient of r^{2m-z} in g_m(r).
pub fn alpha_from_c(c: &Triangle, m_max: usize) -> Result<Triangle> {
    let mut tri = Triangle::new(TriangleKind::Alpha);
    for m in 0..=m_max {
        let g = g_poly(c, m)?;
        let mut row = Vec::with_capacity(2 * m + 1);
        for z in 0..=2 * m {
            let q = &g[2 * m - z];
            if !q.is_integer() {
                return Err(Error::Integrality(format!(
                    "alpha_{{{m},{z}}} = {q} is not an integer (conjecture violation)"
                )));
            }
            row.push(q.to_integer());
        }
        tri.push_row(row);
    }
    Ok(tri)
}

/// All beta entries computable from the available alpha rows:
/// beta_{z,y} = sum_{m=0}^{z-y} (-1)^{m+z-y} C(z-y,m) alpha_{m,z},
/// defined for y <= floor(z/2) and computable iff z - y <= m_max.
pub fn beta_entries(alpha: &Triangle) -> Result<BTreeMap<(usize, usize), BigInt>> {
    let m_max = alpha.last_row().unwrap_or(0);
    let mut out = BTreeMap::new();
    for z in 0..=2 * m_max {
        for y in z.saturating_sub(m_max)..=z / 2 {
            let mut acc = BigInt::zero();
            for m in 0..=z - y {
                // m <= z - y <= m_max, so the row is always present
                let a = alpha.need(m, z)?;
                if a.is_zero() {
                    continue;
                }
                let term = binomial(z - y, m) * a;
                if (m + z - y) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            out.insert((z, y), acc);
        }
    }
    // conjectured boundary: beta_{2y,y} = 0 for y > 0
    for ((z, y), v) in &out {
        if *y > 0 && *z == 2 * y && !v.is_zero() {
            return Err(Error::Integrality(format!(
                "beta_{{{z},{y}}} = {v}, expected 0 (conjecture violation)"
            )));
        }
    }
    Ok(out)
}

/// The beta triangle restricted to fully computable rows z <= m_max.
pub fn beta_triangle(alpha: &Triangle, z_max: usize) -> Result<Triangle> {
    let m_max = alpha.last_row().unwrap_or(0);
    if z_max > m_max {
        return Err(Error::MissingData(format!(
            "beta rows beyond z = {m_max} need alpha rows beyond m = {m_max}"
        )));
    }
    let entries = beta_entries(alpha)?;
    let mut tri = Triangle::new(TriangleKind::Beta);
    for z in 0..=z_max {
        let row = (0..=z / 2)
            .map(|y| entries.get(&(z, y)).cloned().expect("covered entry"))
            .collect();
        tri.push_row(row);
    }
    Ok(tri)
}

/// H_n(1/2) for the physicists' Hermite polynomials, via the integer
/// recurrence h_{n+1} = h_n - 2n h_{n-1} (the 2x factor is 1 at x = 1/2).
pub fn hermite_half(n_max: usize) -> Vec<BigInt> {
    let mut h = Vec::with_capacity(n_max + 1);
    h.push(BigInt::one());
    if n_max >= 1 {
        h.push(BigInt::one());
    }
    for n in 1..n_max {
        let next = &h[n] - 2 * n * &h[n - 1];
        h.push(next);
    }
    h
}

/// One Meeussen-conjecture comparison: beta_{z,0} vs H_z(1/2).
#[derive(Clone, Debug)]
pub struct MeeussenRow {
    pub z: usize,
    pub beta: BigInt,
    pub hermite: BigInt,
    pub matches: bool,
}

pub fn meeussen_check(
    beta: &BTreeMap<(usize, usize), BigInt>,
    z_max: usize,
) -> Result<Vec<MeeussenRow>> {
    let h = hermite_half(z_max);
    let mut rows = Vec::new();
    for z in 0..=z_max {
        let b = beta.get(&(z, 0)).ok_or_else(|| {
            Error::MissingData(format!("beta_{{{z},0}} not computable from available rows"))
        })?;
        rows.push(MeeussenRow {
            z,
            beta: b.clone(),
            hermite: h[z].clone(),
            matches: *b == h[z],
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn c5() -> Triangle {
        let data: Vec<Vec<i64>> = vec![
            vec![1],
            vec![0, 1, 1],
            vec![0, 1, 3, 6, 3],
            vec![0, 1, 7, 20, 46, 45, 15],
            vec![0, 1, 11, 61, 198, 480, 645, 420, 105],
            vec![0, 1, 18, 138, 706, 2508, 6441, 10395, 9660, 4725, 945],
        ];
        Triangle::from_rows(
            TriangleKind::C,
            data.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    #[test]
    fn binom_poly_values() {
        // C(r,2) = (r^2 - r)/2
        let p = binom_poly(2);
        let half = BigRational::new(big(1), big(2));
        assert_eq!(p[2], half);
        assert_eq!(p[1], -half.clone());
        assert_eq!(p[0], BigRational::zero());
    }

    #[test]
    fn g1_and_alpha_row1() {
        let c = c5();
        // g_1(r) = 2(C(r,1) + C(r,2)) = r^2 + r
        let g = g_poly(&c, 1).unwrap();
        assert_eq!(g[2], BigRational::one());
        assert_eq!(g[1], BigRational::one());
        assert_eq!(g[0], BigRational::zero());
        let alpha = alpha_from_c(&c, 2).unwrap();
        assert_eq!(alpha.row(1).unwrap(), &[big(1), big(1), big(0)][..]);
        // g_2(r) = r^4 + 2r^3 - r^2 + 6r
        assert_eq!(
            alpha.row(2).unwrap(),
            &[big(1), big(2), big(-1), big(6), big(0)][..]
        );
    }

    #[test]
    fn beta_rows_match_published_values() {
        let c = c5();
        let alpha = alpha_from_c(&c, 5).unwrap();
        let entries = beta_entries(&alpha).unwrap();
        assert_eq!(entries[&(3, 0)], big(-5));
        assert_eq!(entries[&(3, 1)], big(6));
        assert_eq!(entries[&(2, 0)], big(-1));
        assert_eq!(entries[&(4, 0)], big(1));
        assert_eq!(entries[&(4, 1)], big(74));
        assert_eq!(entries[&(5, 0)], big(41));
        assert_eq!(entries[&(5, 1)], big(252));
        assert_eq!(entries[&(5, 2)], big(-40));
        // alpha decomposition round trip: alpha_{m,z} = sum_y C(m,z-y) beta_{z,y}
        for m in 0..=5usize {
            for z in 0..=2 * m.min(5) {
                if z > 5 {
                    continue;
                }
                let mut acc = BigInt::zero();
                for y in 0..=z / 2 {
                    acc += binomial(m, z - y) * &entries[&(z, y)];
                }
                assert_eq!(acc, alpha.need(m, z).unwrap(), "(m,z)=({m},{z})");
            }
        }
    }

    #[test]
    fn hermite_at_one_half() {
        let h = hermite_half(11);
        let expect: Vec<i64> = vec![1, 1, -1, -5, 1, 41, 31, -461, -895, 6481, 22591, -107029];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(h[n], big(*e), "H_{n}(1/2)");
        }
    }

    #[test]
    fn meeussen_small() {
        let c = c5();
        let alpha = alpha_from_c(&c, 5).unwrap();
        let entries = beta_entries(&alpha).unwrap();
        let rows = meeussen_check(&entries, 5).unwrap();
        assert!(rows.iter().all(|r| r.matches), "{rows:?}");
    }

    #[test]
    fn beta_triangle_rows() {
        let c = c5();
        let alpha = alpha_from_c(&c, 5).unwrap();
        let beta = beta_triangle(&alpha, 5).unwrap();
        assert_eq!(beta.row(5).unwrap(), &[big(41), big(252), big(-40)][..]);
        assert!(beta_triangle(&alpha, 6).is_err());
    }
}
