//! Hanna's triangle T: an integral lower-triangular matrix with unit
//! diagonal whose d-th power has row sums p_d(n).
//!
//! T is determined row by row from B through the triangular system
//! sum_{x<m} tau_{m,x} b_{x,r-1} = b_{m,r}: isolating the unknown with
//! b_{r,r-1} = 1 gives
//!
//!   tau_{m,j} = b_{m,j} - sum_{x=j+1}^{m-1} tau_{m,x} b_{x,j-1}
//!
//! solved for j = m-1 down to 1, with tau_{m,m} = 1. Every step is a
//! difference of integers, which is the integrality proof in executable
//! form. The zeroth row and column (tau_{0,0} = 1, rest 0) are dropped;
//! rows here start at n = 1 and columns at j = 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::triangle::{Triangle, TriangleKind};
use crate::Result;

/// Solve for T rows 1..=n_max from B (which must have rows 1..=n_max).
pub fn t_from_b(b: &Triangle, n_max: usize) -> Result<Triangle> {
    let mut tri = Triangle::new(TriangleKind::T);
    for m in 1..=n_max {
        let mut row = vec![BigInt::zero(); m]; // columns 1..=m
        row[m - 1] = BigInt::one();
        for j in (1..m).rev() {
            let mut acc = b.need(m, j)?;
            for x in j + 1..m {
                let t = &row[x - 1];
                if t.is_zero() {
                    continue;
                }
                acc -= t * b.need(x, j - 1)?;
            }
            row[j - 1] = acc;
        }
        tri.push_row(row);
    }
    Ok(tri)
}

/// One mismatch of the row-sum identity.
#[derive(Clone, Debug)]
pub struct HannaMismatch {
    pub n: usize,
    pub d: usize,
    pub row_sum: BigInt,
    pub expected: BigInt,
}

/// Verify sum_j (T^d)_{n,j} = p_d(n) for all n <= n_max, d <= d_max,
/// where `pd` supplies the reference values. Exact comparison.
pub fn hanna_check(
    t: &Triangle,
    pd: impl Fn(usize, usize) -> Result<BigInt>,
    n_max: usize,
    d_max: usize,
) -> Result<Vec<HannaMismatch>> {
    let n_rows = n_max.min(t.last_row().unwrap_or(0));
    // dense copy of T restricted to rows/cols 1..=n_rows
    let mut mat = vec![vec![BigInt::zero(); n_rows]; n_rows];
    for (n, row) in mat.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = t.need(n + 1, j + 1)?;
        }
    }
    let identity = |k: usize| {
        let mut m = vec![vec![BigInt::zero(); k]; k];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        m
    };
    let mul = |a: &Vec<Vec<BigInt>>, b: &Vec<Vec<BigInt>>| {
        let k = a.len();
        let mut out = vec![vec![BigInt::zero(); k]; k];
        for i in 0..k {
            for l in 0..k {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..=l {
                    if !b[l][j].is_zero() {
                        out[i][j] += &a[i][l] * &b[l][j];
                    }
                }
            }
        }
        out
    };

    let mut mismatches = Vec::new();
    let mut power = identity(n_rows);
    for d in 0..=d_max {
        for n in 1..=n_rows {
            let row_sum: BigInt = power[n - 1].iter().sum();
            let expected = pd(n, d)?;
            if row_sum != expected {
                mismatches.push(HannaMismatch {
                    n,
                    d,
                    row_sum,
                    expected,
                });
            }
        }
        if d < d_max {
            power = mul(&power, &mat);
        }
    }
    Ok(mismatches)
}
