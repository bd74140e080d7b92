use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use qgauss_core::{CheckReport, Status};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub type Out = Box<dyn Write + Send>;

pub fn open(path: Option<&Path>) -> io::Result<Out> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

/// Running count of report outcomes.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

impl Tally {
    pub fn record(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Error => self.error += 1,
        }
    }

    /// 0 when nothing failed, 1 for a mathematical failure, 3 when a check
    /// could not be completed.
    pub fn exit_code(&self) -> u8 {
        if self.error > 0 {
            3
        } else if self.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.error
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    check: &'a str,
    params: String,
    status: Status,
    witness: String,
    failing_index: Option<usize>,
    note: Option<&'a str>,
    wall_time_us: u64,
}

enum Backend {
    Plain(Out),
    Csv(Box<csv::Writer<Out>>),
}

/// Streams reports in the chosen format and tallies them.
pub struct ReportWriter {
    format: Format,
    backend: Backend,
    tally: Tally,
}

fn params_text(r: &CheckReport, sep: &str) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(sep)
}

impl ReportWriter {
    pub fn new(format: Format, out: Out) -> Self {
        let backend = match format {
            Format::Csv => Backend::Csv(Box::new(csv::Writer::from_writer(out))),
            _ => Backend::Plain(out),
        };
        ReportWriter {
            format,
            backend,
            tally: Tally::default(),
        }
    }

    pub fn write(&mut self, r: &CheckReport) -> io::Result<()> {
        self.tally.record(r.status);
        match &mut self.backend {
            Backend::Csv(w) => {
                let witness = r
                    .witness
                    .as_ref()
                    .map(|p| {
                        p.coeffs()
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .unwrap_or_default();
                w.serialize(CsvRow {
                    check: &r.check,
                    params: params_text(r, ";"),
                    status: r.status,
                    witness,
                    failing_index: r.failing_index,
                    note: r.note.as_deref(),
                    wall_time_us: r.wall_time_us,
                })?;
                Ok(())
            }
            Backend::Plain(out) if self.format == Format::Json => {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)
            }
            Backend::Plain(out) => {
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Error => "ERROR",
                };
                write!(out, "{status:<5} {} {}", r.check, params_text(r, " "))?;
                if let Some(note) = &r.note {
                    write!(out, "  [{note}]")?;
                }
                writeln!(out, "  {} us", r.wall_time_us)?;
                if let Some(w) = &r.witness {
                    writeln!(out, "      witness: {w}")?;
                }
                if let Some(i) = r.failing_index {
                    writeln!(out, "      first offending coefficient: q^{i}")?;
                }
                Ok(())
            }
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        match &mut self.backend {
            Backend::Plain(out) => out.flush(),
            Backend::Csv(w) => w.flush(),
        }
    }

    /// Writes the closing summary (text only) and flushes.
    pub fn finish(mut self) -> io::Result<Tally> {
        if let (Format::Text, Backend::Plain(out)) = (self.format, &mut self.backend) {
            let t = self.tally;
            writeln!(
                out,
                "{} checks: {} passed, {} failed, {} errors",
                t.total(),
                t.pass,
                t.fail,
                t.error
            )?;
        }
        self.flush()?;
        Ok(self.tally)
    }
}
