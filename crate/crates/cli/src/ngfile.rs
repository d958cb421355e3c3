//! Reader for tables of `n_g`.
//!
//! Accepted input is comma-separated, with blank lines and `#` comment lines
//! ignored. A file either has exactly
//! two columns `g,n_g` without a header, or a header row naming columns `g`
//! and `n_g` (so `census` output can be read back). Genera must run
//! contiguously from 0.

use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use kunz_core::analytics::NgSeries;
use kunz_core::Count;

use crate::error::CliError;

pub fn read_ng_file(path: &Path) -> Result<NgSeries, CliError> {
    let file = std::fs::File::open(path)?;
    parse_ng(file, path)
}

pub fn parse_ng<R: Read>(input: R, path: &Path) -> Result<NgSeries, CliError> {
    let fail = |line: usize, reason: String| CliError::NgFile {
        path: path.to_path_buf(),
        line: line as u64,
        reason,
    };
    let mut columns: Option<(usize, usize)> = None;
    let mut seen_record = false;
    let mut values: Vec<Count> = Vec::new();
    for (index, text) in BufReader::new(input).lines().enumerate() {
        let line = index + 1;
        let text = text?;
        let text = text.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if !seen_record && fields[0].parse::<u64>().is_err() {
            seen_record = true;
            let find = |name: &str| fields.iter().position(|f| *f == name);
            match (find("g"), find("n_g")) {
                (Some(g), Some(n)) => columns = Some((g, n)),
                _ => return Err(fail(line, "header must name columns g and n_g".into())),
            }
            continue;
        }
        seen_record = true;
        let (g_col, n_col) = match columns {
            Some(cols) => cols,
            None if fields.len() == 2 => (0, 1),
            None => return Err(fail(line, format!("expected 2 fields, found {}", fields.len()))),
        };
        let field = |col: usize| fields.get(col).copied().unwrap_or("");
        let g: usize = field(g_col)
            .parse()
            .map_err(|_| fail(line, format!("bad genus {:?}", field(g_col))))?;
        let n: Count = field(n_col)
            .parse()
            .map_err(|_| fail(line, format!("bad count {:?}", field(n_col))))?;
        if g != values.len() {
            return Err(fail(line, format!("expected genus {}, found {g}", values.len())));
        }
        values.push(n);
    }
    Ok(NgSeries::new(values)?)
}
