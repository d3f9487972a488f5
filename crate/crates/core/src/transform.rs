//! The exact transform chain between the triangles:
//! p_d(n) <-> A, A <-> C, C <-> D, A <-> F, B from A, and the closed
//! forms for the near-diagonal C entries. Round-trips are exact and the
//! support-region zeros of each inversion are asserted, not assumed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binom::{binomial, double_factorial, factorial};
use crate::triangle::{Triangle, TriangleKind};
use crate::{Error, Result};

/// p_d(n) = sum_{r=0}^{min(d+1, n-1)} C(d+1, r) a_{n,r}.
pub fn pd_from_a(a: &Triangle, n: usize, d: usize) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for r in 0..=(d + 1).min(n.saturating_sub(1)) {
        let coeff = binomial(d + 1, r);
        if coeff.is_zero() {
            continue;
        }
        acc += coeff * a.need(n, r)?;
    }
    Ok(acc)
}

/// Inverse binomial transform: a_{n,r} = sum_{d=0}^{r-1} (-1)^{d+r+1}
/// C(r, d+1) p_d(n), with p_0(n) = 1. `pd` holds columns d >= 1.
pub fn a_from_pd(pd: &Triangle, n: usize, r: usize) -> Result<BigInt> {
    if n < r + 1 {
        return Ok(BigInt::zero());
    }
    if n == 1 {
        return Ok(if r == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let mut acc = BigInt::zero();
    for d in 0..r {
        let p = if d == 0 { BigInt::one() } else { pd.need(n, d)? };
        let term = binomial(r, d + 1) * p;
        if (d + r + 1).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// a_{m+r+1,r} = sum_{x=0}^{2m} C(r,x) c_{m,x}, valid for all r.
pub fn a_entry_from_c(c: &Triangle, m: usize, r: usize) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for x in 0..=(2 * m).min(r) {
        let coeff = binomial(r, x);
        if coeff.is_zero() {
            continue;
        }
        acc += coeff * c.need(m, x)?;
    }
    Ok(acc)
}

/// Invert the C transform row by row: c_{m,x} = sum_j (-1)^{x-j} C(x,j)
/// a_{m+j+1,j}. Requires A entries along the m-th diagonal up to column 2m.
pub fn c_from_a(a: &Triangle, m_max: usize) -> Result<Triangle> {
    let mut tri = Triangle::new(TriangleKind::C);
    for m in 0..=m_max {
        let mut row = Vec::with_capacity(2 * m + 1);
        for x in 0..=2 * m {
            let mut acc = BigInt::zero();
            for j in 0..=x {
                let term = binomial(x, j) * a.need(m + j + 1, j)?;
                if (x - j).is_multiple_of(2) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            row.push(acc);
        }
        tri.push_row(row);
    }
    Ok(tri)
}

/// Forward D transform: c_{m,x} = sum_y x!/((2y)!! (x-2y)!) d_{m-y,x-2y},
/// y running from max(0, 2x-3m) to min(floor(x/2), m); the factorial
/// domains force the clamps.
pub fn c_entry_from_d(d: &Triangle, m: usize, x: usize) -> Result<BigInt> {
    let y_min = (2 * x).saturating_sub(3 * m);
    let y_max = (x / 2).min(m);
    let x_fact = factorial(x);
    let mut acc = BigInt::zero();
    for y in y_min..=y_max {
        let pre = &x_fact / (double_factorial(2 * y as i64) * factorial(x - 2 * y));
        acc += pre * d.need(m - y, x - 2 * y)?;
    }
    Ok(acc)
}

/// Invert the D transform (triangular in y: the y=0 term is d_{m,x}).
/// The support zeros d_{m,x} = 0 for x > 3m/2 must emerge; they are
/// asserted before trimming each row to its support width.
pub fn d_from_c(c: &Triangle, m_max: usize) -> Result<Triangle> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for m in 0..=m_max {
        let mut row = Vec::with_capacity(2 * m + 1);
        for x in 0..=2 * m {
            let x_fact = factorial(x);
            let mut acc = c.need(m, x)?;
            for y in 1..=(x / 2).min(m) {
                let pre = &x_fact / (double_factorial(2 * y as i64) * factorial(x - 2 * y));
                acc -= pre * &rows[m - y][x - 2 * y];
            }
            row.push(acc);
        }
        rows.push(row);
    }
    let mut tri = Triangle::from_rows(TriangleKind::D, rows);
    tri.enforce_support()?;
    Ok(tri)
}

/// Forward F transform: a_{m+r+1,r} = sum_{x=0}^{r} sum_p C(r,x)
/// C(C(r-x,2), m-p) f_{p+x+1,x}. The x=0 term contributes
/// C(C(r,2), m) f_{1,0} with f_{1,0} = 1; without it a_{r+1,r} = 1 is
/// not reproduced.
pub fn a_entry_from_f(f: &Triangle, m: usize, r: usize) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for x in 0..=r {
        let r_choose_x = binomial(r, x);
        if r_choose_x.is_zero() {
            continue;
        }
        let pool = (r - x) * (r - x).saturating_sub(1) / 2; // C(r-x, 2)
        for p in 0..=m {
            let e = binomial(pool, m - p);
            if e.is_zero() {
                continue;
            }
            let fv = f.need(p + x + 1, x)?;
            if fv.is_zero() {
                continue;
            }
            acc += &r_choose_x * e * fv;
        }
    }
    Ok(acc)
}

/// Build A rows 1..=n_max from an F triangle; F rows 1..=n_max determine
/// them completely.
pub fn a_from_f(f: &Triangle, n_max: usize) -> Result<Triangle> {
    let mut tri = Triangle::new(TriangleKind::A);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n);
        for r in 0..n {
            row.push(a_entry_from_f(f, n - r - 1, r)?);
        }
        tri.push_row(row);
    }
    Ok(tri)
}

/// Invert the F transform column by column (the (x,p) = (r,m) term is
/// f_{m+r+1,r} itself; everything else involves columns x < r). The
/// support zeros f_{m+r+1,r} = 0 for r > m must emerge; they are asserted
/// and trimmed.
pub fn f_from_a(a: &Triangle, n_max: usize) -> Result<Triangle> {
    f_from_a_kind(a, n_max, TriangleKind::F)
}

/// Same inversion with an explicit output kind: the box-restricted
/// triangles mirror the transform exactly, so inverting an A^box2 input
/// with kind `FBox2` yields the restricted F.
pub fn f_from_a_kind(a: &Triangle, n_max: usize, kind: TriangleKind) -> Result<Triangle> {
    // full (n, r) rectangle first, r <= n-1
    let mut full: Vec<Vec<BigInt>> = vec![Vec::new(); n_max + 1];
    if n_max >= 1 {
        full[1].push(BigInt::one()); // f_{1,0} = 1
    }
    for n in 2..=n_max {
        full[n].push(BigInt::zero()); // f_{n,0} = 0
    }
    for r in 1..n_max {
        for m in 0..=(n_max - r - 1) {
            let n = m + r + 1;
            let mut acc = a.need(n, r)?;
            for x in 0..r {
                let r_choose_x = binomial(r, x);
                let pool = (r - x) * (r - x - 1) / 2;
                for p in 0..=m {
                    let e = binomial(pool, m - p);
                    if e.is_zero() {
                        continue;
                    }
                    let fv = &full[p + x + 1][x];
                    if fv.is_zero() {
                        continue;
                    }
                    acc -= &r_choose_x * e * fv;
                }
            }
            full[n].push(acc);
        }
    }
    let mut tri = Triangle::from_rows(kind, full[1..].to_vec());
    tri.enforce_support()?;
    Ok(tri)
}

/// b_{n,r} = a_{n,r} + a_{n,r+1} (entrywise sum of adjacent columns).
pub fn b_from_a(a: &Triangle) -> Result<Triangle> {
    let mut tri = Triangle::new(TriangleKind::B);
    let last = a.last_row().unwrap_or(0);
    for n in 1..=last {
        let mut row = Vec::with_capacity(n);
        for r in 0..n {
            row.push(a.need(n, r)? + a.need(n, r + 1)?);
        }
        tri.push_row(row);
    }
    Ok(tri)
}

/// Closed forms for c_{m,2m-z}, z <= 5. Evaluations are exact; the
/// factorial quotients always divide out (checked via rational
/// arithmetic). Small m where the shifted index leaves the triangle is
/// answered directly (c_{0,0} = 1, c_{m,0} = 0 for m > 0).
pub fn closed_form_c(m: usize, z: usize) -> Result<BigInt> {
    if z > 5 {
        return Err(Error::Config(format!(
            "no closed form implemented for z = {z} (z <= 5)"
        )));
    }
    if 2 * m < z {
        return Err(Error::Config(format!(
            "c_{{m,2m-z}} undefined for m = {m}, z = {z}"
        )));
    }
    let x = 2 * m - z;
    if x == 0 {
        return Ok(if m == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let mi = m as i64;
    let poly = |coeffs: &[i64]| -> BigInt {
        // sum coeffs[k] m^k
        let mut acc = BigInt::zero();
        let mut pw = BigInt::one();
        for &c in coeffs {
            acc += c * &pw;
            pw *= mi;
        }
        acc
    };
    let ratio = |num: BigInt, den: BigInt| -> Result<BigInt> {
        let q = BigRational::new(num, den);
        if !q.is_integer() {
            return Err(Error::Integrality(format!(
                "closed form for (m,z)=({m},{z}) is not an integer: {q}"
            )));
        }
        Ok(q.to_integer())
    };
    match z {
        0 => Ok(double_factorial(2 * mi - 1)),
        1 => ratio(mi * factorial(2 * m - 1), double_factorial(2 * mi - 2)),
        2 => ratio(
            factorial(2 * m - 2) * poly(&[-1, -1, 3]),
            6 * double_factorial(2 * mi - 4),
        ),
        3 => ratio(
            factorial(2 * m - 3) * poly(&[4, 3, 3, -6, 2]),
            6 * double_factorial(2 * mi - 4),
        ),
        4 => ratio(
            factorial(2 * m - 4) * poly(&[42, 88, 21, 95, -75, 15]),
            180 * double_factorial(2 * mi - 6),
        ),
        5 => ratio(
            factorial(2 * m - 5) * poly(&[258, -167, -80, 111, -174, 116, -31, 3]),
            90 * double_factorial(2 * mi - 6),
        ),
        _ => unreachable!(),
    }
}

/// d_{2m,3m} = (3m)! / (m! 2^m): the unique sigma_3^m contribution at
/// density 2/3.
pub fn d_density_two_thirds(m: usize) -> BigInt {
    factorial(3 * m) / (factorial(m) * BigInt::from(2).pow(m as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::{a_triangle_by_enumeration, EnumOptions};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rows(kind: TriangleKind, data: &[&[i64]]) -> Triangle {
        Triangle::from_rows(
            kind,
            data.iter()
                .map(|r| r.iter().map(|&v| big(v)).collect())
                .collect(),
        )
    }

    fn a12() -> Triangle {
        rows(
            TriangleKind::A,
            &[
                &[1],
                &[0, 1],
                &[0, 1, 1],
                &[0, 1, 3, 1],
                &[0, 1, 5, 6, 1],
                &[0, 1, 9, 18, 10, 1],
                &[0, 1, 13, 44, 49, 15, 1],
                &[0, 1, 20, 97, 172, 110, 21, 1],
                &[0, 1, 28, 195, 512, 550, 216, 28, 1],
                &[0, 1, 40, 377, 1370, 2195, 1486, 385, 36, 1],
                &[0, 1, 54, 694, 3396, 7603, 7886, 3514, 638, 45, 1],
                &[0, 1, 75, 1251, 7968, 23860, 35115, 24318, 7484, 999, 55, 1],
            ],
        )
    }

    #[test]
    fn pd_from_a_rows() {
        let a = a12();
        assert_eq!(pd_from_a(&a, 4, 3).unwrap(), big(26));
        assert_eq!(pd_from_a(&a, 7, 0).unwrap(), big(1));
        assert_eq!(pd_from_a(&a, 6, 2).unwrap(), big(48));
        // d far beyond the row width still works (columns r >= n are zero)
        assert_eq!(pd_from_a(&a, 2, 50).unwrap(), big(51));
    }

    #[test]
    fn a_from_pd_small() {
        // columns d = 1, 2 of the partition table, rows n = 1..5
        let pd = rows(
            TriangleKind::PdGrid,
            &[&[1, 1], &[2, 3], &[3, 6], &[5, 13], &[7, 24]],
        );
        // a_{5,2} = -C(2,1) p_0(5) + C(2,2) p_1(5) = -2 + 7 = 5
        assert_eq!(a_from_pd(&pd, 5, 2).unwrap(), big(5));
        assert_eq!(a_from_pd(&pd, 3, 7).unwrap(), big(0)); // n < r+1
        assert_eq!(a_from_pd(&pd, 5, 3).unwrap(), big(6));
    }

    #[test]
    fn c_transform_cross_checks() {
        let c = rows(
            TriangleKind::C,
            &[
                &[1],
                &[0, 1, 1],
                &[0, 1, 3, 6, 3],
                &[0, 1, 7, 20, 46, 45, 15],
            ],
        );
        // m=3, r=3: 3*1 + 3*7 + 1*20 = 44 = a_{7,3}
        assert_eq!(a_entry_from_c(&c, 3, 3).unwrap(), big(44));
        // m=1: a_{r+2,r} = r + C(r,2) from c_{1,1} = c_{1,2} = 1
        for r in 0..8usize {
            let expect = big(r as i64) + binomial(r, 2);
            assert_eq!(a_entry_from_c(&c, 1, r).unwrap(), expect, "r={r}");
        }
    }

    #[test]
    fn c_from_a_matches_known_rows() {
        let a = a12();
        let c = c_from_a(&a, 2).unwrap();
        assert_eq!(c.row(1).unwrap(), &[big(0), big(1), big(1)][..]);
        assert_eq!(
            c.row(2).unwrap(),
            &[big(0), big(1), big(3), big(6), big(3)][..]
        );
        // c_{m,2m} = (2m-1)!!
        assert_eq!(c.entry(2, 4).unwrap(), double_factorial(3));
    }

    #[test]
    fn d_transform_round_trip() {
        let c = rows(
            TriangleKind::C,
            &[
                &[1],
                &[0, 1, 1],
                &[0, 1, 3, 6, 3],
                &[0, 1, 7, 20, 46, 45, 15],
                &[0, 1, 11, 61, 198, 480, 645, 420, 105],
            ],
        );
        let d = d_from_c(&c, 4).unwrap();
        assert_eq!(d.row(2).unwrap(), &[big(0), big(1), big(3), big(3)][..]);
        assert_eq!(
            d.row(3).unwrap(),
            &[big(0), big(1), big(7), big(17), big(28)][..]
        );
        // c_{3,3} = d_{3,3} + 3 d_{2,1} = 17 + 3
        assert_eq!(c_entry_from_d(&d, 3, 3).unwrap(), big(20));
        for m in 0..=4usize {
            for x in 0..=2 * m {
                assert_eq!(
                    c_entry_from_d(&d, m, x).unwrap(),
                    c.need(m, x).unwrap(),
                    "(m,x)=({m},{x})"
                );
            }
        }
        // d_{2m,3m} = (3m)!/(m! 2^m) at m=2 -> 90
        assert_eq!(d.entry(4, 6).unwrap(), big(90));
        assert_eq!(d_density_two_thirds(2), big(90));
    }

    #[test]
    fn f_transform_hand_expansions() {
        let f = rows(
            TriangleKind::F,
            &[
                &[1],
                &[0],
                &[0, 1],
                &[0, 1],
                &[0, 1, 3],
                &[0, 1, 7],
                &[0, 1, 11, 16],
            ],
        );
        // m=1, r=2: 1 + 2 f_{3,1} = 3 = a_{4,2}
        assert_eq!(a_entry_from_f(&f, 1, 2).unwrap(), big(3));
        // m=3, r=3: C(3,3) + 3(f_{4,1}+f_{5,1}) + 3 f_{6,2} + f_{7,3} = 44
        assert_eq!(a_entry_from_f(&f, 3, 3).unwrap(), big(44));
        // m=0: a_{r+1,r} = 1 needs the x=0 term
        for r in 0..6 {
            assert_eq!(a_entry_from_f(&f, 0, r).unwrap(), big(1), "r={r}");
        }
    }

    #[test]
    fn f_from_a_inverts_and_asserts_support() {
        let a = a12();
        let f = f_from_a(&a, 12).unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![1],
            vec![0],
            vec![0, 1],
            vec![0, 1],
            vec![0, 1, 3],
            vec![0, 1, 7],
            vec![0, 1, 11, 16],
            vec![0, 1, 18, 58],
            vec![0, 1, 26, 135, 125],
            vec![0, 1, 38, 293, 618],
            vec![0, 1, 52, 574, 1927, 1296],
            vec![0, 1, 73, 1089, 5256, 8220],
        ];
        for (i, row) in expect.iter().enumerate() {
            let got = f.row(i + 1).unwrap();
            let want: Vec<BigInt> = row.iter().map(|&v| big(v)).collect();
            assert_eq!(got, &want[..], "row {}", i + 1);
        }
        // round trip back to A
        for n in 1..=12usize {
            for r in 0..n {
                assert_eq!(
                    a_entry_from_f(&f, n - r - 1, r).unwrap(),
                    a.need(n, r).unwrap(),
                    "(n,r)=({n},{r})"
                );
            }
        }
    }

    #[test]
    fn b_from_a_edges() {
        let a = a12();
        let b = b_from_a(&a).unwrap();
        assert_eq!(b.entry(4, 1).unwrap(), big(4));
        assert_eq!(b.entry(4, 2).unwrap(), big(4));
        for n in 1..=12usize {
            assert_eq!(b.entry(n, 0).unwrap(), big(1), "b_{{{n},0}}");
            assert_eq!(b.entry(n, n - 1).unwrap(), big(1), "b_{{{n},{}}}", n - 1);
        }
        // p_d(n) = 1 + sum_{r>=1} C(d,r) b_{n,r} reproduces pd_from_a
        for n in 1..=12usize {
            for d in 0..=6usize {
                let mut acc = BigInt::zero();
                for r in 0..n {
                    acc += binomial(d, r) * b.need(n, r).unwrap();
                }
                assert_eq!(acc, pd_from_a(&a, n, d).unwrap(), "(n,d)=({n},{d})");
            }
        }
    }

    #[test]
    fn closed_forms_match_small_table() {
        assert_eq!(closed_form_c(2, 0).unwrap(), big(3));
        assert_eq!(closed_form_c(3, 1).unwrap(), big(45));
        assert_eq!(closed_form_c(3, 2).unwrap(), big(46));
        assert_eq!(closed_form_c(3, 3).unwrap(), big(20));
        assert_eq!(closed_form_c(3, 5).unwrap(), big(1));
        assert_eq!(closed_form_c(4, 4).unwrap(), big(198));
        assert_eq!(closed_form_c(5, 5).unwrap(), big(2508));
        assert_eq!(closed_form_c(0, 0).unwrap(), big(1));
        assert_eq!(closed_form_c(1, 2).unwrap(), big(0));
    }

    #[test]
    fn enumerated_a_agrees_with_embedded_rows() {
        let o = EnumOptions::default();
        let a = a_triangle_by_enumeration(8, None, &o).unwrap();
        let reference = a12();
        for n in 1..=8usize {
            for r in 0..n {
                assert_eq!(a.entry(n, r), reference.entry(n, r), "(n,r)=({n},{r})");
            }
        }
    }
}
