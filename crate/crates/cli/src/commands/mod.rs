pub mod conjecture;
pub mod identity;

use std::io::Write;
use std::path::Path;

use qgauss_core::identities::{ck_table, Params};
use qgauss_core::selftest;
use qgauss_core::verify::{wz_check_q, wz_check_q1};
use qgauss_core::{CheckReport, IntPoly, ToReport};
use serde::Serialize;

use crate::exec::{self, usage, CliError, Task};
use crate::output::{Format, Out, ReportWriter, Tally};
use crate::range::{grid, RangeSpec};

pub const MAX_I_CAP: i64 = 64;

pub struct Context {
    pub format: Format,
    pub out: Out,
    pub workers: Option<usize>,
}

#[derive(Serialize)]
struct TableRow {
    i: usize,
    entries: Vec<String>,
}

pub fn table_ck(ctx: Context, max_i: i64) -> Result<u8, CliError> {
    if !(1..=MAX_I_CAP).contains(&max_i) {
        return Err(usage(format!(
            "--max-i must be in 1..={MAX_I_CAP}, got {max_i}"
        )));
    }
    let table = ck_table(max_i).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut out = ctx.out;
    match ctx.format {
        Format::Text => {
            let width = table
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(1);
            for row in &table {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
                writeln!(out, "{}", cells.join(" ").trim_start())?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .flexible(true)
                .from_writer(&mut out);
            for row in &table {
                w.write_record(row.iter().map(ToString::to_string))
                    .map_err(|e| CliError::Internal(e.to_string()))?;
            }
            w.flush()?;
        }
        Format::Json => {
            for (idx, row) in table.iter().enumerate() {
                let line = TableRow {
                    i: idx + 1,
                    entries: row.iter().map(ToString::to_string).collect(),
                };
                serde_json::to_writer(&mut out, &line)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                writeln!(out)?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}

/// Range flags shared by the instance-grid commands, keyed by variable.
pub type RangeFlags = Vec<(&'static str, RangeSpec)>;

fn run_grid(ctx: Context, name: &str, task: Task, jobs: &[Params]) -> Result<u8, CliError> {
    if jobs.is_empty() {
        return Err(usage("the requested ranges contain no instances"));
    }
    let pool = exec::pool(ctx.workers)?;
    let reports = exec::run_all(&pool, name, task, jobs)?;
    let mut w = ReportWriter::new(ctx.format, ctx.out);
    for r in &reports {
        w.write(r)?;
    }
    Ok(w.finish()?.exit_code())
}

pub fn check_identity(
    ctx: Context,
    name: &str,
    flags: RangeFlags,
    max_n: Option<i64>,
) -> Result<u8, CliError> {
    let spec = identity::lookup(name).ok_or_else(|| CliError::UnknownIdentity(name.to_string()))?;
    let mut flags = flags;
    if let Some(m) = max_n {
        if !spec.vars.iter().any(|(v, _)| *v == "n") || spec.expand.is_none() {
            return Err(usage(format!("--max-n does not apply to {name}")));
        }
        if !(1..=conjecture::MAX_N_CAP).contains(&m) {
            return Err(usage(format!(
                "--max-n must be in 1..={}, got {m}",
                conjecture::MAX_N_CAP
            )));
        }
        if flags.iter().any(|(v, _)| *v == "n") {
            return Err(usage("give either --n or --max-n, not both"));
        }
        flags.push(("n", format!("1..{m}").parse().map_err(usage)?));
    }
    for (flag, _) in &flags {
        if !spec.vars.iter().any(|(v, _)| v == flag) {
            let known: Vec<String> = spec.vars.iter().map(|(v, _)| format!("--{v}")).collect();
            return Err(usage(format!(
                "--{flag} does not apply to {name} (it takes {})",
                known.join(", ")
            )));
        }
    }
    let specs: Vec<(&'static str, RangeSpec)> = spec
        .vars
        .iter()
        .map(|(v, default)| {
            let r = flags
                .iter()
                .find(|(f, _)| f == v)
                .map(|(_, r)| r.clone())
                .unwrap_or_else(|| default.parse().expect("default range parses"));
            (*v, r)
        })
        .collect();
    let outer = grid(&vec![], &specs).map_err(usage)?;
    let jobs: Vec<Params> = match spec.expand {
        Some(f) => outer.iter().flat_map(f).collect(),
        None => outer,
    };
    run_grid(ctx, name, spec.task, &jobs)
}

pub fn check_conjecture(
    ctx: Context,
    which: u8,
    args: &conjecture::ScanArgs,
    checkpoint: Option<&Path>,
) -> Result<u8, CliError> {
    let plan = conjecture::plan(which, args)?;
    let mut ck = match checkpoint {
        Some(p) => Some(conjecture::Checkpoint::resume(
            p,
            &plan.command,
            &plan.ranges,
        )?),
        None => None,
    };
    let pool = exec::pool(ctx.workers)?;
    let mut w = ReportWriter::new(ctx.format, ctx.out);
    for (key, tuples) in &plan.slices {
        if ck.as_ref().is_some_and(|c| c.is_done(*key)) {
            continue;
        }
        for r in exec::run_all(&pool, &plan.name, plan.task, tuples)? {
            w.write(&r)?;
        }
        w.flush()?;
        if let (Some(c), Some(path)) = (ck.as_mut(), checkpoint) {
            c.complete(*key, path)?;
        }
    }
    Ok(w.finish()?.exit_code())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum WzVariantArg {
    Q1,
    Q,
}

pub fn wz(
    ctx: Context,
    variant: WzVariantArg,
    a: RangeSpec,
    i: RangeSpec,
    k: Option<RangeSpec>,
) -> Result<u8, CliError> {
    let specs = vec![("a", a), ("i", i)];
    let jobs = grid(&vec![], &specs).map_err(usage)?;
    if let Some(bad) = jobs.iter().find(|p| p[0].1 < 1 || p[1].1 < 1) {
        return Err(usage(format!(
            "wz needs a, i >= 1 (got a = {}, i = {})",
            bad[0].1, bad[1].1
        )));
    }
    // explicit k ranges are resolved per (a, i) before the pool starts
    let mut k_ranges = Vec::with_capacity(jobs.len());
    for p in &jobs {
        k_ranges.push(match &k {
            Some(r) => Some(r.values(p).map_err(|e| usage(format!("--k: {e}")))?),
            None => None,
        });
    }
    let pool = exec::pool(ctx.workers)?;
    let name = match variant {
        WzVariantArg::Q1 => "wz-q1",
        WzVariantArg::Q => "wz-q",
    };
    let reports: Vec<CheckReport> = pool.install(|| {
        use rayon::prelude::*;
        jobs.par_iter()
            .zip(k_ranges.par_iter())
            .map(|(p, kr)| {
                let start = std::time::Instant::now();
                let (a, i) = (p[0].1, p[1].1);
                let check = match variant {
                    WzVariantArg::Q1 => wz_check_q1(a, i, kr.clone()),
                    WzVariantArg::Q => wz_check_q(a, i, kr.clone()),
                };
                match check {
                    Ok(c) => c.to_report(),
                    Err(e) => CheckReport::error(name, p, e.to_string()),
                }
                .with_wall_time(start.elapsed())
            })
            .collect()
    });
    let mut w = ReportWriter::new(ctx.format, ctx.out);
    for r in &reports {
        w.write(r)?;
    }
    Ok(w.finish()?.exit_code())
}

/// Runs every acceptance criterion in order. Text output prints one line
/// per criterion as it finishes.
pub fn selftest(ctx: Context) -> Result<u8, CliError> {
    let mut out = ctx.out;
    let mut reports = Vec::new();
    for c in selftest::criteria() {
        let outcome = c.run();
        if ctx.format == Format::Text {
            writeln!(out, "{}", outcome.line())?;
            out.flush()?;
        }
        let params: Params = vec![("criterion", i64::from(c.id))];
        let report = if outcome.passed() {
            CheckReport::pass("selftest", &params)
        } else {
            CheckReport::fail("selftest", &params, IntPoly::zero(), None)
        };
        reports.push(
            report
                .with_note(outcome.line())
                .with_wall_time(outcome.elapsed),
        );
    }
    let mut tally = Tally::default();
    if ctx.format == Format::Text {
        reports.iter().for_each(|r| tally.record(r.status));
        writeln!(out, "{} of {} criteria passed", tally.pass, tally.total())?;
        out.flush()?;
    } else {
        let mut w = ReportWriter::new(ctx.format, out);
        for r in &reports {
            w.write(r)?;
        }
        tally = w.finish()?;
    }
    Ok(tally.exit_code())
}
