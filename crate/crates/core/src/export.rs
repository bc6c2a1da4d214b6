//! Matrix and spectrum serialization.
//!
//! Matrix CSV: a `family,kind,n,ordering,N` header line, one metadata row,
//! then `N` rows of entries. The JSON envelope carries the same metadata
//! plus the entries as nested arrays.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::bitspace::OrderingScheme;
use crate::cubegraphs::{Family, GraphMatrix, MatrixKind};
use crate::error::{Error, Result};
use crate::spectra::Spectrum;

pub const MATRIX_HEADER: &str = "family,kind,n,ordering,N";
pub const SPECTRUM_HEADER: &str = "value,multiplicity,cluster_representative";

/// Integers print without a fractional part; everything else in the
/// shortest form that round-trips.
pub fn format_number(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

fn parse_family(s: &str) -> Result<Family> {
    s.parse()
}

fn parse_kind(s: &str) -> Result<MatrixKind> {
    match s {
        "adjacency" => Ok(MatrixKind::Adjacency),
        "distance" => Ok(MatrixKind::Distance),
        "laplacian" => Ok(MatrixKind::Laplacian),
        _ => Err(Error::Parse(format!("unknown matrix kind '{s}'"))),
    }
}

pub fn matrix_csv(m: &GraphMatrix) -> String {
    let mut out = format!(
        "{MATRIX_HEADER}\n{},{},{},{},{}\n",
        m.family.name(),
        m.kind.name(),
        m.n,
        m.ordering,
        m.dim()
    );
    for row in m.entries.row_iter() {
        let cells: Vec<String> = row.iter().map(|&x| format_number(x)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn read_matrix_csv(text: &str) -> Result<GraphMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    if lines.next().map(str::trim) != Some(MATRIX_HEADER) {
        return Err(Error::Parse(format!("expected header '{MATRIX_HEADER}'")));
    }
    let meta = lines.next().ok_or_else(|| Error::Parse("missing metadata row".into()))?;
    let fields: Vec<&str> = meta.split(',').map(str::trim).collect();
    let [family, kind, n, ordering, size] = fields[..] else {
        return Err(Error::Parse(format!("bad metadata row '{meta}'")));
    };
    let num = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse(format!("'{s}': {e}")));
    let size = num(size)?;
    let mut values = Vec::with_capacity(size * size);
    for (r, line) in lines.enumerate() {
        let row = line
            .split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("matrix row {}: {e}", r + 1)))?;
        if row.len() != size {
            return Err(Error::DimensionMismatch { expected: size, actual: row.len() });
        }
        values.extend(row);
    }
    if values.len() != size * size {
        return Err(Error::DimensionMismatch { expected: size, actual: values.len() / size.max(1) });
    }
    Ok(GraphMatrix {
        family: parse_family(family)?,
        kind: parse_kind(kind)?,
        n: num(n)?,
        ordering: ordering.parse::<OrderingScheme>()?,
        entries: DMatrix::from_row_slice(size, size, &values),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixEnvelope {
    pub family: String,
    pub kind: String,
    pub n: usize,
    pub ordering: String,
    #[serde(rename = "N")]
    pub size: usize,
    pub entries: Vec<Vec<f64>>,
}

impl From<&GraphMatrix> for MatrixEnvelope {
    fn from(m: &GraphMatrix) -> Self {
        MatrixEnvelope {
            family: m.family.name().to_string(),
            kind: m.kind.name().to_string(),
            n: m.n,
            ordering: m.ordering.to_string(),
            size: m.dim(),
            entries: m.entries.row_iter().map(|r| r.iter().copied().collect()).collect(),
        }
    }
}

impl TryFrom<MatrixEnvelope> for GraphMatrix {
    type Error = Error;

    fn try_from(e: MatrixEnvelope) -> Result<Self> {
        if e.entries.len() != e.size || e.entries.iter().any(|r| r.len() != e.size) {
            return Err(Error::DimensionMismatch { expected: e.size, actual: e.entries.len() });
        }
        let flat: Vec<f64> = e.entries.into_iter().flatten().collect();
        Ok(GraphMatrix {
            family: parse_family(&e.family)?,
            kind: parse_kind(&e.kind)?,
            n: e.n,
            ordering: e.ordering.parse()?,
            entries: DMatrix::from_row_slice(e.size, e.size, &flat),
        })
    }
}

pub fn matrix_json(m: &GraphMatrix) -> Result<String> {
    Ok(serde_json::to_string_pretty(&MatrixEnvelope::from(m))?)
}

pub fn read_matrix_json(text: &str) -> Result<GraphMatrix> {
    serde_json::from_str::<MatrixEnvelope>(text)?.try_into()
}

/// One row per eigenvalue, ascending, with its cluster's multiplicity and
/// representative value.
pub fn spectrum_csv(spec: &Spectrum) -> String {
    let mut out = format!("{SPECTRUM_HEADER}\n");
    let mut values = spec.values.iter();
    for c in &spec.clusters {
        for v in values.by_ref().take(c.multiplicity) {
            out.push_str(&format!("{v},{},{}\n", c.multiplicity, c.value));
        }
    }
    out
}
