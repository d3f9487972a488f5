//! Truncated two-variable series with exact rational coefficients, for
//! the box-transform identities. A series holds the coefficients of
//! q^m t^r for m <= q_order, r <= t_order; multiplication truncates
//! consistently (a retained product coefficient depends only on retained
//! factors), so equality checks are exact with no tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::binom::factorial;
use crate::triangle::Triangle;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    pub q_order: usize,
    pub t_order: usize,
    /// coeffs[m][r] of q^m t^r.
    pub coeffs: Vec<Vec<BigRational>>,
}

impl BivariateSeries {
    pub fn zero(q_order: usize, t_order: usize) -> Self {
        BivariateSeries {
            q_order,
            t_order,
            coeffs: vec![vec![BigRational::zero(); t_order + 1]; q_order + 1],
        }
    }

    /// The box transform of an A-family triangle:
    /// sum a_{m+r+1,r} q^m t^r / r!.
    pub fn from_a_family(tri: &Triangle, q_order: usize, t_order: usize) -> Result<Self> {
        Self::build(q_order, t_order, |m, r| tri.need(m + r + 1, r))
    }

    /// The box transform of a C-family triangle: sum c_{m,r} q^m t^r / r!.
    pub fn from_c_family(tri: &Triangle, q_order: usize, t_order: usize) -> Result<Self> {
        Self::build(q_order, t_order, |m, r| tri.need(m, r))
    }

    /// The box transform of an F-family triangle (row index m+r+1):
    /// sum f_{m+r+1,r} q^m t^r / r!.
    pub fn from_f_family(tri: &Triangle, q_order: usize, t_order: usize) -> Result<Self> {
        Self::build(q_order, t_order, |m, r| tri.need(m + r + 1, r))
    }

    /// Build from an arbitrary (m, r) -> integer accessor, with the
    /// t^r/r! normalization.
    pub fn from_fn(
        q_order: usize,
        t_order: usize,
        entry: impl Fn(usize, usize) -> Result<BigInt>,
    ) -> Result<Self> {
        Self::build(q_order, t_order, entry)
    }

    fn build(
        q_order: usize,
        t_order: usize,
        entry: impl Fn(usize, usize) -> Result<BigInt>,
    ) -> Result<Self> {
        let mut s = BivariateSeries::zero(q_order, t_order);
        for m in 0..=q_order {
            for r in 0..=t_order {
                let v = entry(m, r)?;
                if !v.is_zero() {
                    s.coeffs[m][r] = BigRational::new(v, factorial(r));
                }
            }
        }
        Ok(s)
    }

    /// Truncated product; orders are the pointwise minima.
    pub fn mul(&self, other: &BivariateSeries) -> BivariateSeries {
        let q_order = self.q_order.min(other.q_order);
        let t_order = self.t_order.min(other.t_order);
        let mut out = BivariateSeries::zero(q_order, t_order);
        for m1 in 0..=q_order {
            for r1 in 0..=t_order {
                let a = &self.coeffs[m1][r1];
                if a.is_zero() {
                    continue;
                }
                for m2 in 0..=q_order - m1 {
                    for r2 in 0..=t_order - r1 {
                        let b = &other.coeffs[m2][r2];
                        if !b.is_zero() {
                            let prod = a * b;
                            out.coeffs[m1 + m2][r1 + r2] += prod;
                        }
                    }
                }
            }
        }
        out
    }

    /// All (m, r, lhs, rhs) where the two series differ on the common
    /// truncation rectangle.
    pub fn diff(&self, other: &BivariateSeries) -> Vec<(usize, usize, BigRational, BigRational)> {
        let q_order = self.q_order.min(other.q_order);
        let t_order = self.t_order.min(other.t_order);
        let mut out = Vec::new();
        for m in 0..=q_order {
            for r in 0..=t_order {
                if self.coeffs[m][r] != other.coeffs[m][r] {
                    out.push((m, r, self.coeffs[m][r].clone(), other.coeffs[m][r].clone()));
                }
            }
        }
        out
    }

    /// JSON map "m,r" -> rational string, nonzero coefficients only.
    pub fn to_json(&self) -> String {
        let mut map = serde_json::Map::new();
        for (m, row) in self.coeffs.iter().enumerate() {
            for (r, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    map.insert(format!("{m},{r}"), serde_json::Value::String(v.to_string()));
                }
            }
        }
        serde_json::to_string_pretty(&map).expect("series json")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::TriangleKind;
    use num_traits::One;

    #[test]
    fn constant_and_t_column() {
        // A restricted to rows mu_r only: a_{r+1,r} = 1
        let rows = (1..=6usize)
            .map(|n| {
                let mut row = vec![BigInt::zero(); n];
                row[n - 1] = BigInt::from(1);
                row
            })
            .collect();
        let tri = Triangle::from_rows(TriangleKind::A, rows);
        let s = BivariateSeries::from_a_family(&tri, 0, 5).unwrap();
        // coefficient of q^0 t^r is 1/r!
        for r in 0..=5usize {
            assert_eq!(s.coeffs[0][r], BigRational::new(BigInt::one(), factorial(r)));
        }
    }

    #[test]
    fn json_dump_format() {
        let mut s = BivariateSeries::zero(1, 1);
        s.coeffs[0][0] = BigRational::one();
        s.coeffs[1][1] = BigRational::new(BigInt::from(1), BigInt::from(2));
        let v: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(v["0,0"], "1");
        assert_eq!(v["1,1"], "1/2");
        assert!(v.get("0,1").is_none(), "zero coefficients are omitted");
    }

    #[test]
    fn multiplication_truncates_consistently() {
        let mut a = BivariateSeries::zero(2, 2);
        let mut b = BivariateSeries::zero(2, 2);
        // a = 1 + q t, b = 1 - q t
        a.coeffs[0][0] = BigRational::one();
        a.coeffs[1][1] = BigRational::one();
        b.coeffs[0][0] = BigRational::one();
        b.coeffs[1][1] = -BigRational::one();
        let p = a.mul(&b);
        // 1 - q^2 t^2
        assert_eq!(p.coeffs[0][0], BigRational::one());
        assert!(p.coeffs[1][1].is_zero());
        assert_eq!(p.coeffs[2][2], -BigRational::one());
        assert!(a.diff(&b).len() == 1);
    }
}
