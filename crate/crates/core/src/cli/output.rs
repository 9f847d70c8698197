use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::report::{write_csv_table, CSV_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Accumulates named tables in the chosen format.
#[derive(Debug)]
pub struct Report {
    format: Format,
    csv: Vec<u8>,
    json: Vec<Value>,
}

impl Report {
    pub fn new(format: Format) -> Self {
        Report { format, csv: Vec::new(), json: Vec::new() }
    }

    pub fn table<T: Serialize>(&mut self, name: &str, rows: &[T]) -> Result<()> {
        match self.format {
            Format::Csv => write_csv_table(&mut self.csv, name, rows)
                .map_err(|e| Error::InvalidParameter(format!("cannot serialize table {name}: {e}"))),
            Format::Json => {
                let rows = serde_json::to_value(rows)
                    .map_err(|e| Error::InvalidParameter(format!("cannot serialize table {name}: {e}")))?;
                self.json.push(json!({ "table": name, "rows": rows }));
                Ok(())
            }
        }
    }

    pub fn finish(self) -> Vec<u8> {
        match self.format {
            Format::Csv => self.csv,
            Format::Json => {
                let doc = json!({ "format": CSV_VERSION.replace("csv", "json"), "tables": self.json });
                let mut out = serde_json::to_vec_pretty(&doc).expect("values are serializable");
                out.push(b'\n');
                out
            }
        }
    }
}
