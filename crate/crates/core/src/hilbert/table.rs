//! Finite grids of Hilbert function values and their CSV/JSON forms.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cells::CellFunction;
use crate::error::{Error, Result};
use crate::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableKind {
    /// Partial sums of `h_T` in `i`.
    H10,
    /// Partial sums of `H10` in `j`.
    H11,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::H10 => "H10",
            TableKind::H11 => "H11",
        }
    }
}

/// Exact values `h(i, j)` for `0 <= i <= i_max`, `0 <= j <= j_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedTable {
    pub kind: TableKind,
    /// `values[i][j]`.
    pub values: Vec<Vec<BigInt>>,
    pub source: String,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    kind: TableKind,
    #[serde(rename = "iMax")]
    i_max: usize,
    #[serde(rename = "jMax")]
    j_max: usize,
    values: Vec<Vec<serde_json::Value>>,
}

impl BigradedTable {
    pub fn i_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn j_max(&self) -> usize {
        self.values[0].len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.values[i][j]
    }

    /// Header `i\j,0,1,...`, then one row per `i` led by its index.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i\\j");
        for j in 0..=self.j_max() {
            write!(out, ",{j}").unwrap();
        }
        out.push('\n');
        for (i, row) in self.values.iter().enumerate() {
            write!(out, "{i}").unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// `{kind, iMax, jMax, values}` with `values` row-major by `i`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableJson {
            kind: self.kind,
            i_max: self.i_max(),
            j_max: self.j_max(),
            values: self.values.iter().map(|r| r.iter().map(json::int).collect()).collect(),
        })
        .expect("table serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> std::result::Result<Self, String> {
        let raw: TableJson = serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
        if raw.values.len() != raw.i_max + 1 || raw.values.iter().any(|r| r.len() != raw.j_max + 1) {
            return Err("values do not match iMax/jMax".into());
        }
        let values = raw
            .values
            .iter()
            .map(|r| r.iter().map(|v| json::to_int(v).ok_or_else(|| format!("not an integer: {v}"))).collect())
            .collect::<std::result::Result<Vec<Vec<BigInt>>, String>>()?;
        Ok(Self { kind: raw.kind, values, source: String::new() })
    }
}

/// Evaluates `cells` on the full grid. Rows in `j` are independent and are
/// spread over the rayon pool when `parallel` is set.
pub fn tabulate<C: CellFunction + ?Sized>(
    cells: &C,
    i_max: usize,
    j_max: usize,
    parallel: bool,
    source: impl Into<String>,
) -> Result<BigradedTable> {
    let columns: Vec<Vec<BigInt>> = if parallel {
        (0..=j_max).into_par_iter().map(|j| cells.row(j, i_max)).collect::<Result<_>>()?
    } else {
        (0..=j_max).map(|j| cells.row(j, i_max)).collect::<Result<_>>()?
    };
    let values = (0..=i_max).map(|i| columns.iter().map(|col| col[i].clone()).collect()).collect();
    Ok(BigradedTable { kind: TableKind::H10, values, source: source.into() })
}

/// Prefix sums along `j`: `H11(i, j) = Σ_{v <= j} H10(i, v)`.
pub fn sum_transform_j(table: &BigradedTable) -> Result<BigradedTable> {
    if table.kind != TableKind::H10 {
        return Err(Error::WrongTableKind { expected: "H10" });
    }
    let values = table
        .values
        .iter()
        .map(|row| {
            let mut acc = BigInt::default();
            row.iter()
                .map(|v| {
                    acc += v;
                    acc.clone()
                })
                .collect()
        })
        .collect();
    Ok(BigradedTable { kind: TableKind::H11, values, source: table.source.clone() })
}
