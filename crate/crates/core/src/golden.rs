//! Embedded reference tables and the verifier that compares computed
//! triangles against them.
//!
//! The data ships as a versioned JSON resource (`golden.json`). Cells are
//! decimal strings; `null` marks entries the source leaves symbolic. Each
//! table carries transcription notes recording the known source quirks
//! (trimmed trailing zeros, the shifted F^box2 column header, the
//! in-text/diagonal exponent conflict resolved in favor of the tables).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::triangle::{Triangle, TriangleKind};
use crate::{Error, Result};

const GOLDEN_JSON: &str = include_str!("golden.json");

#[derive(Deserialize)]
struct GoldenFile {
    version: String,
    tables: Vec<GoldenRaw>,
}

#[derive(Deserialize)]
struct GoldenRaw {
    id: String,
    row_origin: usize,
    col_origin: usize,
    row_label: String,
    col_label: String,
    rows: Vec<Vec<Option<String>>>,
    notes: Vec<String>,
}

/// One reference table: known cells indexed by their natural indices.
pub struct GoldenTable {
    pub id: String,
    pub row_origin: usize,
    pub col_origin: usize,
    pub row_label: String,
    pub col_label: String,
    /// `None` cells are symbolic in the source and carry no value.
    pub cells: Vec<Vec<Option<BigInt>>>,
    pub notes: Vec<String>,
}

impl GoldenTable {
    pub fn get(&self, row: usize, col: usize) -> Option<&BigInt> {
        let r = row.checked_sub(self.row_origin)?;
        let c = col.checked_sub(self.col_origin)?;
        self.cells.get(r)?.get(c)?.as_ref()
    }

    pub fn last_row(&self) -> usize {
        self.row_origin + self.cells.len() - 1
    }

    /// Iterate all known cells as (row, col, value) in natural indices.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.cells.iter().enumerate().flat_map(move |(i, row)| {
            row.iter().enumerate().filter_map(move |(j, v)| {
                v.as_ref()
                    .map(|v| (i + self.row_origin, j + self.col_origin, v))
            })
        })
    }

    /// Convert to a Triangle. Fails if the table has symbolic holes.
    pub fn triangle(&self) -> Result<Triangle> {
        let kind: TriangleKind = self.id.parse()?;
        let mut rows = Vec::with_capacity(self.cells.len());
        for (i, row) in self.cells.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, v) in row.iter().enumerate() {
                match v {
                    Some(v) => out.push(v.clone()),
                    None => {
                        return Err(Error::MissingData(format!(
                            "golden {}[{},{}] is symbolic",
                            self.id,
                            i + self.row_origin,
                            j + self.col_origin
                        )))
                    }
                }
            }
            rows.push(out);
        }
        Ok(Triangle::from_rows(kind, rows))
    }
}

fn store() -> &'static BTreeMap<String, GoldenTable> {
    static STORE: OnceLock<BTreeMap<String, GoldenTable>> = OnceLock::new();
    STORE.get_or_init(|| {
        let file: GoldenFile = serde_json::from_str(GOLDEN_JSON).expect("golden.json parses");
        assert_eq!(file.version, "1");
        file.tables
            .into_iter()
            .map(|raw| {
                let cells = raw
                    .rows
                    .into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|cell| {
                                cell.map(|s| {
                                    BigInt::parse_bytes(s.as_bytes(), 10)
                                        .expect("golden cells are decimal integers")
                                })
                            })
                            .collect()
                    })
                    .collect();
                let table = GoldenTable {
                    id: raw.id.clone(),
                    row_origin: raw.row_origin,
                    col_origin: raw.col_origin,
                    row_label: raw.row_label,
                    col_label: raw.col_label,
                    cells,
                    notes: raw.notes,
                };
                (raw.id, table)
            })
            .collect()
    })
}

/// Look up an embedded table: one of pd, A, C, D, F, beta, Cbox2, Fbox2,
/// Chat, Fhat.
pub fn golden(id: &str) -> Result<&'static GoldenTable> {
    store()
        .get(id)
        .ok_or_else(|| Error::UnknownTable(id.to_string()))
}

pub fn golden_ids() -> Vec<&'static str> {
    store().keys().map(|s| s.as_str()).collect()
}

/// One disagreement between a computed value and the reference.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub computed: BigInt,
    pub golden: BigInt,
}

/// Outcome of comparing computed data against a golden table on the
/// intersection of their known cells.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub table: String,
    pub matched: usize,
    pub mismatched: Vec<Mismatch>,
    /// Golden cells the computed data does not cover.
    pub uncovered: usize,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatched.is_empty()
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} matched, {} mismatched, {} uncovered",
            self.table,
            self.matched,
            self.mismatched.len(),
            self.uncovered
        )?;
        for m in self.mismatched.iter().take(5) {
            write!(
                f,
                "\n  [{},{}] computed {} != golden {}",
                m.row, m.col, m.computed, m.golden
            )?;
        }
        Ok(())
    }
}

/// Compare arbitrary computed cells against a golden table. `lookup`
/// returns `None` where the computation does not cover an index.
pub fn verify_cells(
    golden_id: &str,
    lookup: impl Fn(usize, usize) -> Option<BigInt>,
) -> Result<VerifyReport> {
    let table = golden(golden_id)?;
    let mut report = VerifyReport {
        table: golden_id.to_string(),
        ..Default::default()
    };
    for (row, col, want) in table.iter() {
        match lookup(row, col) {
            Some(got) if &got == want => report.matched += 1,
            Some(got) => report.mismatched.push(Mismatch {
                row,
                col,
                computed: got,
                golden: want.clone(),
            }),
            None => report.uncovered += 1,
        }
    }
    Ok(report)
}

/// Compare a computed triangle against a golden table by their natural indices.
pub fn verify_triangle(computed: &Triangle, golden_id: &str) -> Result<VerifyReport> {
    verify_cells(golden_id, |row, col| computed.entry(row, col))
}

/// The embedded C rows 0..=m_max (m_max <= 10) completed on the right:
/// the source prints row 10 only through x = 19, so the diagonal cell
/// c_{10,20} is filled from the closed form (2m-1)!!. All other cells are
/// the embedded data.
pub fn complete_c(m_max: usize) -> Result<Triangle> {
    let g = golden("C")?;
    if m_max > g.last_row() {
        return Err(Error::MissingData(format!(
            "C rows only available up to {}",
            g.last_row()
        )));
    }
    let mut tri = Triangle::new(TriangleKind::C);
    for m in 0..=m_max {
        let mut row = Vec::with_capacity(2 * m + 1);
        for x in 0..=2 * m {
            match g.get(m, x) {
                Some(v) => row.push(v.clone()),
                None => row.push(crate::transform::closed_form_c(m, 2 * m - x)?),
            }
        }
        tri.push_row(row);
    }
    Ok(tri)
}

/// The A-matrix with every row 1..=n_max complete (n_max <= 23):
/// printed columns r <= 11 from the embedded table, columns r >= 12 from
/// the C rows via the binomial transform (those entries have m <= 10).
pub fn assemble_full_a(n_max: usize) -> Result<Triangle> {
    let a_gold = golden("A")?;
    if n_max > a_gold.last_row() {
        return Err(Error::MissingData(format!(
            "full A rows only available up to {}",
            a_gold.last_row()
        )));
    }
    let c = golden("C")?.triangle()?;
    let mut tri = Triangle::new(TriangleKind::A);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n);
        for r in 0..n {
            match a_gold.get(n, r) {
                Some(v) => row.push(v.clone()),
                None => {
                    let m = n - r - 1;
                    row.push(crate::transform::a_entry_from_c(&c, m, r)?);
                }
            }
        }
        tri.push_row(row);
    }
    Ok(tri)
}
