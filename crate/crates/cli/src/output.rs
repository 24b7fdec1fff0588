//! Row sinks: CSV with a header row, or a JSON array of objects, written as rows arrive.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

enum Inner {
    Csv(Box<csv::Writer<Box<dyn Write>>>),
    Json { out: Box<dyn Write>, rows: usize },
}

pub struct RowSink {
    inner: Inner,
}

impl RowSink {
    /// Writes to `path`, or standard output when `None`.
    pub fn open(format: Format, path: Option<&Path>) -> Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        let inner = match format {
            Format::Csv => Inner::Csv(Box::new(csv::Writer::from_writer(out))),
            Format::Json => Inner::Json { out, rows: 0 },
        };
        Ok(Self { inner })
    }

    pub fn write<R: Serialize>(&mut self, row: &R) -> Result<()> {
        match &mut self.inner {
            Inner::Csv(w) => w.serialize(row)?,
            Inner::Json { out, rows } => {
                out.write_all(if *rows == 0 { b"[\n  " } else { b",\n  " })?;
                serde_json::to_writer(&mut *out, row)?;
                *rows += 1;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Result<()> {
        match self.inner {
            Inner::Csv(mut w) => w.flush()?,
            Inner::Json { mut out, rows } => {
                out.write_all(if rows == 0 { b"[]\n" } else { b"\n]\n" })?;
                out.flush()?;
            }
        }
        Ok(())
    }
}
