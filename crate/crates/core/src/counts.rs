//! High-level enumeration counters: p_d(n), A-columns, C-entries,
//! F-columns, the rooted-forest refinement, and their box-restricted
//! variants, plus assembly of whole triangles by enumeration.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::enumerate::{enumerate, Classify, CountLedger, EnumConfig, Parallelism};
use crate::triangle::{Triangle, TriangleKind};
use crate::Result;

/// Knobs shared by all counting runs.
#[derive(Clone, Copy, Debug, Default)]
pub struct EnumOptions {
    pub threads: Parallelism,
    pub allow_large: bool,
    pub progress: bool,
}

impl EnumOptions {
    fn apply(&self, mut cfg: EnumConfig) -> EnumConfig {
        cfg.threads = self.threads;
        cfg.allow_large = self.allow_large;
        cfg.progress = self.progress;
        cfg
    }
}

fn ledger(cfg: EnumConfig) -> Result<CountLedger> {
    enumerate(&cfg)
}

/// Exact p_d(1..=n_max) by enumeration in ambient dimension d+1
/// (restricted to a box when `box_bound` is set).
pub fn count_pd(
    d: usize,
    n_max: usize,
    box_bound: Option<u32>,
    opts: &EnumOptions,
) -> Result<Vec<BigUint>> {
    if n_max == 0 {
        return Err(crate::Error::Config("n_max must be at least 1".into()));
    }
    let mut cfg = opts.apply(EnumConfig::origin_seeded(d + 1, n_max - 1));
    cfg.box_bound = box_bound;
    Ok(ledger(cfg)?.totals)
}

/// a_{m+r+1,r} for m = 0..=m_max: strict diagrams obtained by adding m
/// nodes to mu_r. With `box_bound` = 2 this is the A^box2 column.
pub fn count_a_column(
    r: usize,
    m_max: usize,
    box_bound: Option<u32>,
    opts: &EnumOptions,
) -> Result<Vec<BigUint>> {
    if r == 0 {
        // a_{m+1,0} = delta_{m,0}
        let mut col = vec![BigUint::zero(); m_max + 1];
        col[0] = BigUint::from(1u32);
        return Ok(col);
    }
    let mut cfg = opts.apply(EnumConfig::mu_seeded(r, m_max));
    cfg.box_bound = box_bound;
    Ok(ledger(cfg)?.totals)
}

/// Restricted A-column for a general box size b.
pub fn box_b_column(b: u32, r: usize, m_max: usize, opts: &EnumOptions) -> Result<Vec<BigUint>> {
    count_a_column(r, m_max, Some(b), opts)
}

/// c_{m,x} for m = 0..=m_max: diagrams over mu_x whose reduced dimension
/// is exactly x, so the binomial prefactor of the classification is 1.
/// Subtrees that cannot reach r.d. x within the depth budget are pruned.
pub fn count_c_entry(
    x: usize,
    m_max: usize,
    box_bound: Option<u32>,
    opts: &EnumOptions,
) -> Result<Vec<BigUint>> {
    if x == 0 {
        // c_{0,0} = 1, c_{m,0} = 0 for m > 0
        let mut col = vec![BigUint::zero(); m_max + 1];
        col[0] = BigUint::from(1u32);
        return Ok(col);
    }
    let mut cfg = opts.apply(EnumConfig::mu_seeded(x, m_max).with_min_rd(x));
    cfg.box_bound = box_bound;
    cfg.classify = Classify::ByRd;
    let led = ledger(cfg)?;
    let by_rd = led.by_rd.expect("ByRd ledger");
    Ok(by_rd.into_iter().map(|row| row[x].clone()).collect())
}

/// f_{m+r+1,r} for m = 0..=m_max: strict diagrams with r.d. = r whose
/// skew decomposition has no component lying entirely in D.
pub fn count_f_column(
    r: usize,
    m_max: usize,
    box_bound: Option<u32>,
    opts: &EnumOptions,
) -> Result<Vec<BigUint>> {
    if r == 0 {
        // f_{1,0} = 1 by convention, f_{n,0} = 0 for n > 1
        let mut col = vec![BigUint::zero(); m_max + 1];
        col[0] = BigUint::from(1u32);
        return Ok(col);
    }
    let mut cfg = opts.apply(EnumConfig::mu_seeded(r, m_max));
    cfg.box_bound = box_bound;
    cfg.classify = Classify::FCounts;
    Ok(ledger(cfg)?.f_counts.expect("FCounts ledger"))
}

/// The Cayley refinement f_{2m+1,m}(alpha) for alpha = 0..=m, classified
/// by the number of Type2 skew nodes. The alpha = 0 slot must be zero.
pub fn count_forests(m: usize, opts: &EnumOptions) -> Result<Vec<BigUint>> {
    if m == 0 {
        return Err(crate::Error::Config("forest refinement needs m >= 1".into()));
    }
    let mut cfg = opts.apply(EnumConfig::mu_seeded(m, m));
    cfg.classify = Classify::ForestRefined;
    let led = ledger(cfg)?;
    let by_t2 = led.f_by_type2.expect("ForestRefined ledger");
    Ok(by_t2[m][..=m].to_vec())
}

fn to_bigint(v: Vec<BigUint>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

/// Assemble A (or A^box2) rows 1..=n_max by per-column enumeration.
pub fn a_triangle_by_enumeration(
    n_max: usize,
    box_bound: Option<u32>,
    opts: &EnumOptions,
) -> Result<Triangle> {
    let kind = if box_bound.is_some() {
        TriangleKind::ABox2
    } else {
        TriangleKind::A
    };
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for r in 0..n_max {
        let m_max = n_max.saturating_sub(r + 1);
        cols.push(to_bigint(count_a_column(r, m_max, box_bound, opts)?));
    }
    let mut tri = Triangle::new(kind);
    for n in 1..=n_max {
        let row = (0..n).map(|r| cols[r][n - r - 1].clone()).collect();
        tri.push_row(row);
    }
    Ok(tri)
}

/// Assemble C (or C^box2) rows 0..=m_max by per-column enumeration.
pub fn c_triangle_by_enumeration(
    m_max: usize,
    box_bound: Option<u32>,
    opts: &EnumOptions,
) -> Result<Triangle> {
    let kind = if box_bound.is_some() {
        TriangleKind::CBox2
    } else {
        TriangleKind::C
    };
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for x in 0..=2 * m_max {
        cols.push(to_bigint(count_c_entry(x, m_max, box_bound, opts)?));
    }
    let mut tri = Triangle::new(kind);
    for m in 0..=m_max {
        let row = (0..=2 * m).map(|x| cols[x][m].clone()).collect();
        tri.push_row(row);
    }
    Ok(tri)
}

/// Assemble F (or F^box2) rows 1..=n_max by per-column enumeration.
pub fn f_triangle_by_enumeration(
    n_max: usize,
    box_bound: Option<u32>,
    opts: &EnumOptions,
) -> Result<Triangle> {
    let kind = if box_bound.is_some() {
        TriangleKind::FBox2
    } else {
        TriangleKind::F
    };
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    let r_max = n_max.saturating_sub(1) / 2;
    for r in 0..=r_max {
        let m_max = n_max.saturating_sub(r + 1);
        cols.push(to_bigint(count_f_column(r, m_max, box_bound, opts)?));
    }
    let mut tri = Triangle::new(kind);
    for n in 1..=n_max {
        let width = kind.support_width(n).unwrap();
        let row = (0..width.min(n)).map(|r| cols[r][n - r - 1].clone()).collect();
        tri.push_row(row);
    }
    Ok(tri)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn u64s(v: Vec<BigUint>) -> Vec<u64> {
        v.into_iter().map(|b| b.to_u64().unwrap()).collect()
    }

    #[test]
    fn pd_small() {
        let o = EnumOptions::default();
        assert_eq!(u64s(count_pd(1, 6, None, &o).unwrap()), vec![1, 2, 3, 5, 7, 11]);
        assert_eq!(u64s(count_pd(0, 5, None, &o).unwrap()), vec![1; 5]);
        assert_eq!(
            u64s(count_pd(3, 6, None, &o).unwrap()),
            vec![1, 4, 10, 26, 59, 140]
        );
    }

    #[test]
    fn a_column_r4() {
        let o = EnumOptions::default();
        // column 4 of A, rows 5..10
        let col = u64s(count_a_column(4, 5, None, &o).unwrap());
        assert_eq!(col, vec![1, 10, 49, 172, 512, 1370]);
        // the m = 2 diagonal a_{r+3,r} for r = 1..6
        let diag: Vec<u64> = (1..=6)
            .map(|r| u64s(count_a_column(r, 2, None, &o).unwrap())[2])
            .collect();
        assert_eq!(diag, vec![1, 5, 18, 49, 110, 216]);
        // a_{r+1,r} = 1 for arbitrary r
        for r in [0usize, 1, 3, 6] {
            assert_eq!(u64s(count_a_column(r, 0, None, &o).unwrap()), vec![1]);
        }
    }

    #[test]
    fn a_column_box2() {
        let o = EnumOptions::default();
        // the only box-2 addition to mu_2 is (1,1)
        let col = u64s(count_a_column(2, 1, Some(2), &o).unwrap());
        assert_eq!(col, vec![1, 1]);
    }

    #[test]
    fn c_entries() {
        let o = EnumOptions::default();
        assert_eq!(u64s(count_c_entry(3, 3, None, &o).unwrap()), vec![0, 0, 6, 20]);
        assert_eq!(u64s(count_c_entry(4, 2, None, &o).unwrap()), vec![0, 0, 3]);
        // c_{m,x} = 0 for x > 2m
        assert_eq!(u64s(count_c_entry(5, 2, None, &o).unwrap()), vec![0, 0, 0]);
        assert_eq!(u64s(count_c_entry(1, 3, None, &o).unwrap()), vec![0, 1, 1, 1]);
    }

    #[test]
    fn f_columns() {
        let o = EnumOptions::default();
        // f_{5,2} = 3, f_{r+1,r} = 0, f_{r+2,r} = 0 for r > 1
        assert_eq!(u64s(count_f_column(2, 2, None, &o).unwrap()), vec![0, 0, 3]);
        assert_eq!(u64s(count_f_column(3, 3, None, &o).unwrap()), vec![0, 0, 0, 16]);
        assert_eq!(u64s(count_f_column(1, 2, None, &o).unwrap()), vec![0, 1, 1]);
    }

    #[test]
    fn forests_m2_m3() {
        let o = EnumOptions::default();
        assert_eq!(u64s(count_forests(2, &o).unwrap()), vec![0, 2, 1]);
        // C(m-1, a-1) m^{m-a} at m=3: 9, 6, 1
        assert_eq!(u64s(count_forests(3, &o).unwrap()), vec![0, 9, 6, 1]);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn pruned_runs_are_thread_invariant() {
        use crate::enumerate::Parallelism;
        let mut seq = EnumOptions::default();
        seq.threads = Parallelism::Sequential;
        let mut par = EnumOptions::default();
        par.threads = Parallelism::Threads(3);
        for x in [6usize, 8] {
            assert_eq!(
                count_c_entry(x, 4, None, &seq).unwrap(),
                count_c_entry(x, 4, None, &par).unwrap(),
                "x={x}"
            );
        }
    }

    #[test]
    fn box3_one_dimensional_column() {
        let o = EnumOptions::default();
        // box-3 strict 1-dim diagrams: mu_1, then {0,1,2}, then nothing
        assert_eq!(u64s(box_b_column(3, 1, 3, &o).unwrap()), vec![1, 1, 0, 0]);
        // any box b >= 2, m = 0: mu_r fits
        assert_eq!(u64s(box_b_column(2, 3, 0, &o).unwrap()), vec![1]);
    }

    #[test]
    fn one_dimensional_counts_agree_with_euler_to_30() {
        let o = EnumOptions::default();
        let enumerated = count_pd(1, 30, None, &o).unwrap();
        let euler = crate::knuth::p1_euler(30);
        for n in 1..=30usize {
            assert_eq!(BigInt::from(enumerated[n - 1].clone()), euler[n].clone().into(), "p_1({n})");
        }
    }

    #[test]
    fn small_a_triangle() {
        let o = EnumOptions::default();
        let a = a_triangle_by_enumeration(6, None, &o).unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![1],
            vec![0, 1],
            vec![0, 1, 1],
            vec![0, 1, 3, 1],
            vec![0, 1, 5, 6, 1],
            vec![0, 1, 9, 18, 10, 1],
        ];
        for (n, row) in expect.iter().enumerate() {
            for (r, v) in row.iter().enumerate() {
                assert_eq!(a.entry(n + 1, r), Some(BigInt::from(*v)), "a[{},{}]", n + 1, r);
            }
        }
    }
}
