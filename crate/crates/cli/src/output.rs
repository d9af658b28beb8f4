use std::io::Write;

use serde_json::{Map, Value as Json};

use crate::args::Format;
use crate::CliError;

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Float(x) => format_float(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Cell::Float(x) => serde_json::Number::from_f64(*x).map_or(Json::Null, Json::Number),
            Cell::Int(n) => Json::from(*n),
            Cell::Text(s) => Json::from(s.as_str()),
            Cell::Empty => Json::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as u64)
    }
}

impl From<u32> for Cell {
    fn from(n: u32) -> Self {
        Cell::Int(n.into())
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

/// Seventeen significant digits in scientific notation.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// A result table with metadata.
///
/// In CSV, non-empty metadata is written as leading `# key: value` lines
/// only when `csv_metadata` is set; JSON always carries it.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub metadata: Vec<(&'static str, Cell)>,
    pub csv_metadata: bool,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, ..Default::default() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn meta(&mut self, key: &'static str, value: impl Into<Cell>) {
        self.metadata.push((key, value.into()));
    }

    /// Drops columns that are empty in every row.
    pub fn prune_empty_columns(&mut self) {
        let keep: Vec<bool> =
            (0..self.columns.len()).map(|c| self.rows.iter().any(|r| r[c] != Cell::Empty)).collect();
        let filter = |v: Vec<Cell>| v.into_iter().zip(&keep).filter(|(_, k)| **k).map(|(c, _)| c).collect();
        self.columns = self.columns.iter().zip(&keep).filter(|(_, k)| **k).map(|(c, _)| *c).collect();
        self.rows = std::mem::take(&mut self.rows).into_iter().map(filter).collect();
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut buf = Vec::new();
        if self.csv_metadata {
            for (k, v) in self.metadata.iter().filter(|(_, v)| *v != Cell::Empty) {
                writeln!(buf, "# {k}: {}", v.csv()).expect("write to memory");
            }
        }
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(buf);
        let enc = |e: csv::Error| CliError::Encode(e.to_string());
        w.write_record(&self.columns).map_err(enc)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).map_err(enc)?;
        }
        w.into_inner().map_err(|e| CliError::Encode(e.to_string()))
    }

    pub fn to_json(&self) -> Result<Vec<u8>, CliError> {
        let metadata: Map<String, Json> = self.metadata.iter().map(|(k, v)| ((*k).to_owned(), v.json())).collect();
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|r| Json::Object(self.columns.iter().zip(r).map(|(c, v)| ((*c).to_owned(), v.json())).collect()))
            .collect();
        let doc = serde_json::json!({ "metadata": metadata, "rows": rows });
        let mut out = serde_json::to_vec_pretty(&doc).map_err(|e| CliError::Encode(e.to_string()))?;
        out.push(b'\n');
        Ok(out)
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, CliError> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(vec!["x", "n", "opt"]);
        t.push(vec![0.1.into(), 3usize.into(), Cell::Empty]);
        t.push(vec![(-2.5e-300).into(), 4usize.into(), Cell::Empty]);
        t.meta("geometry", "circle");
        t
    }

    #[test]
    fn csv_layout() {
        let mut t = sample();
        let plain = String::from_utf8(t.to_csv().unwrap()).unwrap();
        assert_eq!(plain, "x,n,opt\n1.0000000000000001e-1,3,\n-2.5000000000000000e-300,4,\n");
        t.csv_metadata = true;
        t.prune_empty_columns();
        let with_meta = String::from_utf8(t.to_csv().unwrap()).unwrap();
        assert!(with_meta.starts_with("# geometry: circle\nx,n\n"));
    }

    #[test]
    fn floats_round_trip() {
        for x in [std::f64::consts::PI, 1e-17, 6.02214076e23, -0.0] {
            assert_eq!(format_float(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn json_layout() {
        let doc: Json = serde_json::from_slice(&sample().to_json().unwrap()).unwrap();
        assert_eq!(doc["metadata"]["geometry"], "circle");
        assert_eq!(doc["rows"][0]["x"], 0.1);
        assert_eq!(doc["rows"][1]["n"], 4);
        assert!(doc["rows"][0]["opt"].is_null());
    }
}
