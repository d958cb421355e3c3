use std::fmt::Write as _;

use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// A table cell. Reals are always rendered with six decimals.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(u128),
    Signed(i64),
    Real(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Signed(v) => v.to_string(),
            Cell::Real(v) => format!("{v:.6}"),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

impl From<u128> for Cell {
    fn from(v: u128) -> Self {
        Cell::Int(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(u128::from(v))
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Signed(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Real)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Int(v) => s.serialize_u128(*v),
            Cell::Signed(v) => s.serialize_i64(*v),
            // round so that JSON carries the same six decimals as CSV
            Cell::Real(v) => s.serialize_f64(format!("{v:.6}").parse::<f64>().unwrap()),
            Cell::Text(v) => s.serialize_str(v),
            Cell::Empty => s.serialize_none(),
        }
    }
}

/// Named table with a fixed header; every row has one cell per column.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputTable {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl OutputTable {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Self {
            name: name.to_string(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn with_header(name: &str, header: Vec<String>) -> Self {
        Self {
            name: name.to_string(),
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row width for table {}", self.name);
        self.rows.push(row);
    }

    /// Rendered CSV lines of the data rows (no header), mainly for tests.
    pub fn csv_rows(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| r.iter().map(Cell::render).collect::<Vec<_>>().join(","))
            .collect()
    }

    fn to_csv(&self) -> Result<String, CliError> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.header)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::render))?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
    }
}

struct Records<'a>(&'a OutputTable);

struct Record<'a> {
    header: &'a [String],
    cells: &'a [Cell],
}

impl Serialize for Record<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.header.len()))?;
        for (key, cell) in self.header.iter().zip(self.cells) {
            map.serialize_entry(key, cell)?;
        }
        map.end()
    }
}

impl Serialize for Records<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.rows.len()))?;
        for cells in &self.0.rows {
            seq.serialize_element(&Record {
                header: &self.0.header,
                cells,
            })?;
        }
        seq.end()
    }
}

struct Tables<'a>(&'a [OutputTable]);

impl Serialize for Tables<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for table in self.0 {
            map.serialize_entry(&table.name, &Records(table))?;
        }
        map.end()
    }
}

/// CSV tables are separated by a blank line. JSON is an array of records for
/// a single table and an object keyed by table name otherwise.
pub fn render(tables: &[OutputTable], format: Format) -> Result<String, CliError> {
    match format {
        Format::Csv => {
            let mut out = String::new();
            for (i, table) in tables.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&table.to_csv()?);
            }
            Ok(out)
        }
        Format::Json => {
            let mut out = match tables {
                [single] => serde_json::to_string_pretty(&Records(single))?,
                _ => serde_json::to_string_pretty(&Tables(tables))?,
            };
            writeln!(out).unwrap();
            Ok(out)
        }
    }
}
