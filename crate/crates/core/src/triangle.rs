//! Named lower-triangular integer arrays with explicit index origins.
//!
//! The triangles use mixed indexing conventions (A/B/F/T rows start at
//! n=1, C/D/alpha rows at m=0, beta rows at z=0) and each has its own
//! support region outside which entries are exactly zero. `Triangle`
//! carries the origins explicitly and knows each kind's support width, so
//! lookups distinguish implicit zeros (outside the support) from genuinely
//! unknown entries (inside the support but not stored).

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The triangle families handled by this crate, plus the p_d(n) grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleKind {
    A,
    B,
    C,
    D,
    F,
    T,
    Alpha,
    Beta,
    ABox2,
    CBox2,
    FBox2,
    Chat,
    Fhat,
    CD,
    /// Rectangular p_d(n) table (no support rule).
    PdGrid,
}

impl TriangleKind {
    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::A => "A",
            TriangleKind::B => "B",
            TriangleKind::C => "C",
            TriangleKind::D => "D",
            TriangleKind::F => "F",
            TriangleKind::T => "T",
            TriangleKind::Alpha => "alpha",
            TriangleKind::Beta => "beta",
            TriangleKind::ABox2 => "Abox2",
            TriangleKind::CBox2 => "Cbox2",
            TriangleKind::FBox2 => "Fbox2",
            TriangleKind::Chat => "Chat",
            TriangleKind::Fhat => "Fhat",
            TriangleKind::CD => "cD",
            TriangleKind::PdGrid => "pd",
        }
    }

    /// (row index, column index) labels for CSV headers.
    pub fn labels(self) -> (&'static str, &'static str) {
        match self {
            TriangleKind::A | TriangleKind::B | TriangleKind::ABox2 => ("n", "r"),
            TriangleKind::F | TriangleKind::FBox2 | TriangleKind::Fhat => ("n", "r"),
            TriangleKind::T => ("n", "j"),
            TriangleKind::C | TriangleKind::D | TriangleKind::CBox2 => ("m", "x"),
            TriangleKind::Chat | TriangleKind::CD => ("m", "x"),
            TriangleKind::Alpha => ("m", "z"),
            TriangleKind::Beta => ("z", "y"),
            TriangleKind::PdGrid => ("n", "d"),
        }
    }

    pub fn row_origin(self) -> usize {
        match self {
            TriangleKind::A
            | TriangleKind::B
            | TriangleKind::F
            | TriangleKind::T
            | TriangleKind::ABox2
            | TriangleKind::FBox2
            | TriangleKind::Fhat
            | TriangleKind::PdGrid => 1,
            _ => 0,
        }
    }

    pub fn col_origin(self) -> usize {
        match self {
            TriangleKind::T | TriangleKind::PdGrid => 1,
            _ => 0,
        }
    }

    /// Number of support columns in the row with natural index `row`
    /// (entries at or beyond `col_origin + width` are exactly zero).
    /// `None` means no support rule (rectangular grid).
    pub fn support_width(self, row: usize) -> Option<usize> {
        let w = match self {
            TriangleKind::A | TriangleKind::B | TriangleKind::ABox2 => row, // r <= n-1
            TriangleKind::C | TriangleKind::CBox2 | TriangleKind::Alpha | TriangleKind::CD => {
                2 * row + 1 // x <= 2m
            }
            TriangleKind::D => 3 * row / 2 + 1,          // x <= 3m/2
            TriangleKind::F | TriangleKind::FBox2 => row.saturating_sub(1) / 2 + 1, // r <= (n-1)/2
            TriangleKind::Fhat => row / 2 + 1,           // r <= n/2
            TriangleKind::Chat => row + 1,               // x <= m
            TriangleKind::T => row,                      // j <= n
            TriangleKind::Beta => row / 2 + 1,           // y <= z/2
            TriangleKind::PdGrid => return None,
        };
        Some(w)
    }
}

impl FromStr for TriangleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let all = [
            TriangleKind::A,
            TriangleKind::B,
            TriangleKind::C,
            TriangleKind::D,
            TriangleKind::F,
            TriangleKind::T,
            TriangleKind::Alpha,
            TriangleKind::Beta,
            TriangleKind::ABox2,
            TriangleKind::CBox2,
            TriangleKind::FBox2,
            TriangleKind::Chat,
            TriangleKind::Fhat,
            TriangleKind::CD,
            TriangleKind::PdGrid,
        ];
        all.into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTable(s.to_string()))
    }
}

/// A jagged arbitrary-precision integer triangle with explicit origins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub kind: TriangleKind,
    pub rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    pub fn new(kind: TriangleKind) -> Self {
        Triangle { kind, rows: Vec::new() }
    }

    pub fn from_rows(kind: TriangleKind, rows: Vec<Vec<BigInt>>) -> Self {
        Triangle { kind, rows }
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn row_origin(&self) -> usize {
        self.kind.row_origin()
    }

    pub fn col_origin(&self) -> usize {
        self.kind.col_origin()
    }

    /// Number of stored rows.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Natural index of the last stored row.
    pub fn last_row(&self) -> Option<usize> {
        self.rows.len().checked_sub(1).map(|i| i + self.row_origin())
    }

    pub fn push_row(&mut self, row: Vec<BigInt>) {
        self.rows.push(row);
    }

    /// Stored row by natural index.
    pub fn row(&self, row: usize) -> Option<&[BigInt]> {
        row.checked_sub(self.row_origin())
            .and_then(|i| self.rows.get(i))
            .map(|r| r.as_slice())
    }

    /// Entry by their natural indices. `Some(0)` beyond the kind's support width,
    /// `None` when the entry is inside the support but not stored (or the
    /// row is absent).
    pub fn entry(&self, row: usize, col: usize) -> Option<BigInt> {
        let r = self.row(row)?;
        let ci = col.checked_sub(self.col_origin())?;
        if let Some(v) = r.get(ci) {
            return Some(v.clone());
        }
        match self.kind.support_width(row) {
            Some(w) if ci >= w => Some(BigInt::zero()),
            _ => None,
        }
    }

    /// Like [`entry`](Self::entry) but a hard error when unknown.
    pub fn need(&self, row: usize, col: usize) -> Result<BigInt> {
        self.entry(row, col).ok_or_else(|| {
            Error::MissingData(format!(
                "{}[{row},{col}] is not available",
                self.kind.name()
            ))
        })
    }

    /// Assert that all stored entries at or beyond the support width are
    /// zero, then trim them away. Violations are reported, not silenced.
    pub fn enforce_support(&mut self) -> Result<()> {
        let origin = self.row_origin();
        for (i, row) in self.rows.iter_mut().enumerate() {
            let idx = origin + i;
            let w = match self.kind.support_width(idx) {
                Some(w) => w,
                None => continue,
            };
            for (j, v) in row.iter().enumerate().skip(w) {
                if !v.is_zero() {
                    return Err(Error::Support(format!(
                        "{}[{idx},{}] = {v} but the support region ends at column {}",
                        self.kind.name(),
                        j + self.kind.col_origin(),
                        w as i64 - 1 + self.kind.col_origin() as i64,
                    )));
                }
            }
            row.truncate(w);
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TriangleRepr::from(self)).expect("triangle to json")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: TriangleRepr = serde_json::from_str(s)?;
        repr.try_into()
    }

    /// CSV with a header row of column indices; integers in full decimal.
    pub fn to_csv(&self) -> String {
        let (rl, cl) = self.kind.labels();
        let width = self.rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut out = String::new();
        write!(out, "{rl}\\{cl}").unwrap();
        for c in 0..width {
            write!(out, ",{}", c + self.col_origin()).unwrap();
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            write!(out, "{}", i + self.row_origin()).unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Serialized form: integers as strings so 64-bit-lossy consumers survive.
#[derive(Serialize, Deserialize)]
struct TriangleRepr {
    name: String,
    row_origin: usize,
    col_origin: usize,
    rows: Vec<Vec<String>>,
}

impl From<&Triangle> for TriangleRepr {
    fn from(t: &Triangle) -> Self {
        TriangleRepr {
            name: t.kind.name().to_string(),
            row_origin: t.row_origin(),
            col_origin: t.col_origin(),
            rows: t
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<TriangleRepr> for Triangle {
    type Error = Error;
    fn try_from(repr: TriangleRepr) -> Result<Self> {
        let kind: TriangleKind = repr.name.parse()?;
        if repr.row_origin != kind.row_origin() || repr.col_origin != kind.col_origin() {
            return Err(Error::Config(format!(
                "origins {}//{} do not match triangle kind {}",
                repr.row_origin,
                repr.col_origin,
                kind.name()
            )));
        }
        let mut rows = Vec::with_capacity(repr.rows.len());
        for row in repr.rows {
            let mut out = Vec::with_capacity(row.len());
            for cell in row {
                let v = BigInt::parse_bytes(cell.as_bytes(), 10).ok_or_else(|| {
                    Error::Config(format!("bad integer literal {cell:?} in triangle JSON"))
                })?;
                out.push(v);
            }
            rows.push(out);
        }
        Ok(Triangle { kind, rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_a() -> Triangle {
        let rows = vec![
            vec![BigInt::from(1)],
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(3), BigInt::from(1)],
        ];
        Triangle::from_rows(TriangleKind::A, rows)
    }

    #[test]
    fn entry_semantics() {
        let a = small_a();
        assert_eq!(a.entry(4, 2), Some(BigInt::from(3)));
        // beyond the support width: implicit zero
        assert_eq!(a.entry(4, 7), Some(BigInt::zero()));
        // row not stored
        assert_eq!(a.entry(9, 0), None);
        assert!(a.need(9, 0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = small_a();
        let s = a.to_json();
        assert!(s.contains("\"name\": \"A\""));
        let back = Triangle::from_json(&s).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn csv_header_and_rows() {
        let a = small_a();
        let csv = a.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "n\\r,0,1,2,3");
        assert_eq!(lines.next().unwrap(), "1,1");
        assert_eq!(lines.last().unwrap(), "4,0,1,3,1");
    }

    #[test]
    fn support_enforcement() {
        let mut f = Triangle::from_rows(
            TriangleKind::F,
            vec![
                vec![BigInt::from(1)],
                vec![BigInt::from(0), BigInt::from(7)], // f_{2,1} must be 0
            ],
        );
        assert!(matches!(f.enforce_support(), Err(Error::Support(_))));
        let mut ok = Triangle::from_rows(
            TriangleKind::F,
            vec![
                vec![BigInt::from(1)],
                vec![BigInt::from(0), BigInt::from(0)],
            ],
        );
        ok.enforce_support().unwrap();
        assert_eq!(ok.rows[1].len(), 1);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(Triangle::from_json("{").is_err());
        // wrong origins for the named kind
        let s = r#"{"name":"A","row_origin":0,"col_origin":0,"rows":[["1"]]}"#;
        assert!(Triangle::from_json(s).is_err());
        // non-integer cell
        let s = r#"{"name":"A","row_origin":1,"col_origin":0,"rows":[["x"]]}"#;
        assert!(Triangle::from_json(s).is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("alpha".parse::<TriangleKind>().unwrap(), TriangleKind::Alpha);
        assert_eq!("Abox2".parse::<TriangleKind>().unwrap(), TriangleKind::ABox2);
        assert!("nope".parse::<TriangleKind>().is_err());
    }
}
