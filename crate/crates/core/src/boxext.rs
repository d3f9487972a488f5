//! Box-restricted refinements: the all-type-1 family counts e_{m,r} and
//! their inverse transform c^D, the reduced triangles Chat and Fhat
//! (removing reducible components that fit in a box of size two), and the
//! generating-series box-transform identities A = A^box2 x Fhat and
//! C = C^box2 x Chat.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::binom::binomial;
use crate::series::BivariateSeries;
use crate::transform::a_entry_from_c;
use crate::triangle::{Triangle, TriangleKind};
use crate::Result;

/// e_{m,r} = C(C(r,2), m): diagrams in D obtained by adding m nodes to
/// mu_r (any m-subset of the C(r,2) type-1 nodes is downward-closed).
pub fn e_entry(m: usize, r: usize) -> BigInt {
    binomial(r * r.saturating_sub(1) / 2, m)
}

/// c^D rows 0..=m_max: the inverse binomial transform of r -> e_{m,r},
/// i.e. the contribution of D to the C-triangle.
pub fn cd_triangle(m_max: usize) -> Triangle {
    let mut tri = Triangle::new(TriangleKind::CD);
    for m in 0..=m_max {
        let mut row = Vec::with_capacity(2 * m + 1);
        for x in 0..=2 * m {
            let mut acc = BigInt::zero();
            for j in 0..=x {
                let term = binomial(x, j) * e_entry(m, j);
                if (x - j) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            row.push(acc);
        }
        tri.push_row(row);
    }
    tri
}

/// Solve Chat from the relation c_{m,x} = chat_{m,x} + c^box2_{m,x}
/// plus sum_{y=1}^{x-1} sum_{p=1}^{m-1} C(x,y) c^box2_{m-p,x-y} chat_{p,y},
/// triangular because the double sum only involves chat rows p < m.
/// chat_{m,x} = 0 for x > m must emerge and is asserted.
pub fn chat_from_c(c: &Triangle, cbox2: &Triangle, m_max: usize) -> Result<Triangle> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for m in 0..=m_max {
        let mut row = Vec::with_capacity(2 * m + 1);
        for x in 0..=2 * m {
            if m == 0 && x == 0 {
                // chat_{0,0} = 1 by definition; the rewritten relation
                // degenerates here (its two extracted terms coincide)
                row.push(BigInt::one());
                continue;
            }
            let mut acc = c.need(m, x)? - cbox2.need(m, x)?;
            for y in 1..x {
                for (p, prev) in rows.iter().enumerate().skip(1) {
                    if p > m.saturating_sub(1) {
                        break;
                    }
                    let chat_py = prev.get(y).cloned().unwrap_or_else(BigInt::zero);
                    if chat_py.is_zero() {
                        continue;
                    }
                    let cb = cbox2.need(m - p, x - y)?;
                    if cb.is_zero() {
                        continue;
                    }
                    acc -= binomial(x, y) * cb * chat_py;
                }
            }
            row.push(acc);
        }
        rows.push(row);
    }
    let mut tri = Triangle::from_rows(TriangleKind::Chat, rows);
    tri.enforce_support()?;
    Ok(tri)
}

/// a^box2_{m+r+1,r} from C^box2 via the binomial transform (the box-2
/// mirror of the C transform), valid for any r with m within the rows.
pub fn abox2_entry(cbox2: &Triangle, m: usize, r: usize) -> Result<BigInt> {
    a_entry_from_c(cbox2, m, r)
}

/// Build A^box2 rows 1..=n_max from C^box2 (needs C^box2 rows up to
/// n_max - 1, so only small n_max; band computations go through
/// [`abox2_entry`] instead).
pub fn abox2_from_cbox2(cbox2: &Triangle, n_max: usize) -> Result<Triangle> {
    let mut tri = Triangle::new(TriangleKind::ABox2);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n);
        for r in 0..n {
            row.push(abox2_entry(cbox2, n - r - 1, r)?);
        }
        tri.push_row(row);
    }
    Ok(tri)
}

/// Solve fhat_{m+r+1,r} for m <= m_max, r <= r_max from the m-indexed
/// form a_{m+r+1,r} = fhat_{m+r+1,r} + a^box2_{m+r+1,r} plus
/// sum_{s=1}^{r-1} sum_{p=0}^{m} C(r,s) a^box2_{m-p+r-s+1,r-s} fhat_{p+s+1,s}.
/// Every reference stays on the same band (s < r, p <= m), so only A and
/// C^box2 entries with m' <= m_max are needed. Returned as vals[r][m].
/// The support zeros fhat_{m+r+1,r} = 0 for r > m+1 must emerge and are
/// asserted.
pub fn fhat_band(
    a: &Triangle,
    cbox2: &Triangle,
    m_max: usize,
    r_max: usize,
) -> Result<Vec<Vec<BigInt>>> {
    let mut band: Vec<Vec<BigInt>> = Vec::with_capacity(r_max + 1);
    // column 0: fhat_{1,0} = 1, fhat_{n,0} = 0 for n > 1
    let mut col0 = vec![BigInt::zero(); m_max + 1];
    col0[0] = BigInt::one();
    band.push(col0);
    for r in 1..=r_max {
        let mut col = Vec::with_capacity(m_max + 1);
        for m in 0..=m_max {
            let n = m + r + 1;
            let mut acc = a.need(n, r)? - abox2_entry(cbox2, m, r)?;
            for s in 1..r {
                let r_choose_s = binomial(r, s);
                for p in 0..=m {
                    let fv = &band[s][p];
                    if fv.is_zero() {
                        continue;
                    }
                    let ab = abox2_entry(cbox2, m - p, r - s)?;
                    if ab.is_zero() {
                        continue;
                    }
                    acc -= &r_choose_s * ab * fv;
                }
            }
            // r > m+1 lies outside the support region
            if r > m + 1 && !acc.is_zero() {
                return Err(crate::Error::Support(format!(
                    "fhat_{{{n},{r}}} = {acc}, expected 0 beyond the support region"
                )));
            }
            col.push(acc);
        }
        band.push(col);
    }
    Ok(band)
}

/// The Fhat triangle rows 1..=n_max (n_max <= 2*r_band+1 with the band
/// chosen to cover every in-support cell).
pub fn fhat_from_a(a: &Triangle, cbox2: &Triangle, n_max: usize) -> Result<Triangle> {
    let m_max = n_max.saturating_sub(2);
    let r_max = n_max / 2;
    let band = fhat_band(a, cbox2, m_max, r_max)?;
    let mut tri = Triangle::new(TriangleKind::Fhat);
    for n in 1..=n_max {
        let width = TriangleKind::Fhat.support_width(n).unwrap();
        let mut row = Vec::with_capacity(width);
        for r in 0..width {
            if r == 0 {
                // fhat_{1,0} = 1, fhat_{n,0} = 0 for n > 1
                row.push(if n == 1 { BigInt::one() } else { BigInt::zero() });
            } else {
                row.push(band[r][n - r - 1].clone());
            }
        }
        tri.push_row(row);
    }
    Ok(tri)
}

/// Result of a coefficientwise series comparison.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub q_order: usize,
    pub t_order: usize,
    pub mismatches: Vec<(usize, usize, String, String)>,
}

impl SeriesReport {
    pub fn is_exact(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Verify A(q,t) = A^box2(q,t) x Fhat(q,t) coefficientwise to orders
/// (q_order, t_order), with the t^r/r! normalization. The A^box2 factor
/// comes from C^box2 and the Fhat factor from a precomputed band
/// (vals[r][m], from [`fhat_band`]).
pub fn series_box_identity_a(
    a: &Triangle,
    cbox2: &Triangle,
    fhat: &[Vec<BigInt>],
    q_order: usize,
    t_order: usize,
) -> Result<SeriesReport> {
    let lhs = BivariateSeries::from_a_family(a, q_order, t_order)?;
    let box_series =
        BivariateSeries::from_fn(q_order, t_order, |m, r| abox2_entry(cbox2, m, r))?;
    let fhat_series =
        BivariateSeries::from_fn(q_order, t_order, |m, r| Ok(fhat[r][m].clone()))?;
    let rhs = box_series.mul(&fhat_series);
    Ok(report(lhs, rhs))
}

/// Verify C(q,t) = C^box2(q,t) x Chat(q,t) likewise.
pub fn series_box_identity_c(
    c: &Triangle,
    cbox2: &Triangle,
    chat: &Triangle,
    q_order: usize,
    t_order: usize,
) -> Result<SeriesReport> {
    let lhs = BivariateSeries::from_c_family(c, q_order, t_order)?;
    let rhs = BivariateSeries::from_c_family(cbox2, q_order, t_order)?
        .mul(&BivariateSeries::from_c_family(chat, q_order, t_order)?);
    Ok(report(lhs, rhs))
}

fn report(lhs: BivariateSeries, rhs: BivariateSeries) -> SeriesReport {
    SeriesReport {
        q_order: lhs.q_order.min(rhs.q_order),
        t_order: lhs.t_order.min(rhs.t_order),
        mismatches: lhs
            .diff(&rhs)
            .into_iter()
            .map(|(m, r, a, b)| (m, r, a.to_string(), b.to_string()))
            .collect(),
    }
}

/// fhat_{m+x+1,x} = chat_{m,x}: the bijection between the two reduced
/// counts. Returns the indices where it fails.
pub fn chat_fhat_identity(chat: &Triangle, fhat: &Triangle) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    let m_max = chat.last_row().unwrap_or(0);
    let n_max = fhat.last_row().unwrap_or(0);
    for m in 0..=m_max {
        for x in 0..=m {
            if m + x + 1 > n_max {
                continue;
            }
            match (chat.entry(m, x), fhat.entry(m + x + 1, x)) {
                (Some(cv), Some(fv)) if cv == fv => {}
                _ => bad.push((m, x)),
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn e_values() {
        assert_eq!(e_entry(1, 3), big(3));
        for x in 0..6 {
            assert_eq!(e_entry(0, x), big(1));
        }
        assert_eq!(e_entry(2, 4), big(15)); // C(6,2)
    }

    #[test]
    fn cd_row_one() {
        let cd = cd_triangle(3);
        // invert e_{1,r} = C(r,2): c^D_{1,1} = 0, c^D_{1,2} = 1
        assert_eq!(cd.row(1).unwrap(), &[big(0), big(0), big(1)][..]);
        // round trip: sum_x C(r,x) c^D_{m,x} = e_{m,r}
        for m in 0..=3usize {
            for r in 0..=8usize {
                assert_eq!(
                    a_entry_from_c(&cd, m, r).unwrap(),
                    e_entry(m, r),
                    "(m,r)=({m},{r})"
                );
            }
        }
    }

    fn c4() -> Triangle {
        let data: Vec<Vec<i64>> = vec![
            vec![1],
            vec![0, 1, 1],
            vec![0, 1, 3, 6, 3],
            vec![0, 1, 7, 20, 46, 45, 15],
            vec![0, 1, 11, 61, 198, 480, 645, 420, 105],
        ];
        Triangle::from_rows(
            TriangleKind::C,
            data.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    fn cbox2_4() -> Triangle {
        let data: Vec<Vec<i64>> = vec![
            vec![1],
            vec![0, 0, 1],
            vec![0, 0, 0, 3, 3],
            vec![0, 0, 0, 1, 16, 30, 15],
            vec![0, 0, 0, 1, 15, 135, 330, 315, 105],
        ];
        Triangle::from_rows(
            TriangleKind::CBox2,
            data.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    #[test]
    fn chat_small_rows() {
        let chat = chat_from_c(&c4(), &cbox2_4(), 4).unwrap();
        assert_eq!(chat.row(2).unwrap(), &[big(0), big(1), big(3)][..]);
        assert_eq!(chat.row(3).unwrap(), &[big(0), big(1), big(7), big(16)][..]);
        assert_eq!(
            chat.row(4).unwrap(),
            &[big(0), big(1), big(11), big(57), big(125)][..]
        );
        // chat_{m,m} = (m+1)^{m-1}: 5^3 = 125
        assert_eq!(chat.entry(4, 4).unwrap(), big(125));
    }

    #[test]
    fn series_identity_small() {
        let c = c4();
        let cbox2 = cbox2_4();
        let chat = chat_from_c(&c, &cbox2, 4).unwrap();
        let rep = series_box_identity_c(&c, &cbox2, &chat, 4, 6).unwrap();
        assert!(rep.is_exact(), "{:?}", rep.mismatches);
    }
}
