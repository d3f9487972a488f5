//! The p_d(n) service: partitions of n <= 25 in any dimension, computed
//! from the embedded F data. The F rows determine A rows 1..=25 through
//! the forward transform, and a binomial transform of row n then yields
//! p_d(n) for arbitrary d.

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::golden::golden;
use crate::transform::{a_from_f, pd_from_a};
use crate::triangle::Triangle;
use crate::{Error, Result};

/// Largest n served by the embedded data.
pub const N_MAX: usize = 25;

/// A rows 1..=25 derived from the embedded F table (computed once).
pub fn a_from_embedded_f() -> Result<&'static Triangle> {
    static A: OnceLock<Triangle> = OnceLock::new();
    if let Some(a) = A.get() {
        return Ok(a);
    }
    let f = golden("F")?.triangle()?;
    let a = a_from_f(&f, N_MAX)?;
    Ok(A.get_or_init(|| a))
}

/// Exact p_d(n) for n <= 25 and any d.
pub fn pd(n: usize, d: usize) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    if n > N_MAX {
        return Err(Error::MissingData(format!(
            "p_d(n) served for n <= {N_MAX}, got n = {n}"
        )));
    }
    pd_from_a(a_from_embedded_f()?, n, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knuth::p1_euler;

    #[test]
    fn serves_spot_values() {
        assert_eq!(pd(20, 10).unwrap(), BigInt::from(2403142436321i64));
        assert_eq!(pd(6, 3).unwrap(), BigInt::from(140));
        assert_eq!(pd(9, 0).unwrap(), BigInt::from(1));
        assert!(pd(26, 1).is_err());
    }

    #[test]
    fn arbitrary_dimension_from_one_row() {
        // p_d(4) = C(d+1,1) + 3 C(d+1,2) + C(d+1,3) for any d
        assert_eq!(pd(4, 50).unwrap(), BigInt::from(51 + 3 * 1275 + 20825));
        assert_eq!(pd(2, 1000).unwrap(), BigInt::from(1001));
    }

    #[test]
    fn one_dimensional_column_matches_euler_through_25() {
        // exercises all 25 embedded F rows, including 24 and 25
        let p1 = p1_euler(25);
        for n in 1..=25usize {
            assert_eq!(pd(n, 1).unwrap(), p1[n], "p_1({n})");
        }
    }
}
