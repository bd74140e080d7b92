use std::time::Instant;

use qgauss_core::identities::Params;
use qgauss_core::{CheckReport, Error as CoreError};
use rayon::prelude::*;
use rayon::ThreadPool;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown identity `{0}`; known: {known}", known = crate::commands::identity::names().join(", "))]
    UnknownIdentity(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    /// The reader went away; not worth a message.
    #[error("output closed")]
    Closed,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::UnknownIdentity(_) | CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
            CliError::Closed => 0,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return CliError::Closed;
        }
        CliError::Internal(format!("I/O error: {e}"))
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// One check over one parameter tuple; may emit several reports.
pub type Task = fn(&Params) -> qgauss_core::Result<Vec<CheckReport>>;

pub fn pool(workers: Option<usize>) -> Result<ThreadPool, CliError> {
    if workers == Some(0) {
        return Err(usage("--workers must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Internal(format!("cannot start worker pool: {e}")))
}

fn describe(params: &Params) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_one(name: &str, task: Task, params: &Params) -> Result<Vec<CheckReport>, CliError> {
    let start = Instant::now();
    match task(params) {
        Ok(reports) => {
            let elapsed = start.elapsed();
            Ok(reports
                .into_iter()
                .map(|r| r.with_wall_time(elapsed))
                .collect())
        }
        Err(
            e @ (CoreError::BadParams(_)
            | CoreError::BadQuadruple { .. }
            | CoreError::TooLarge { .. }),
        ) => Err(usage(format!("{name} {}: {e}", describe(params)))),
        Err(e) => Ok(vec![
            CheckReport::error(name, params, e.to_string()).with_wall_time(start.elapsed())
        ]),
    }
}

/// Runs `task` over every tuple on the pool. Output order follows `jobs`.
pub fn run_all(
    pool: &ThreadPool,
    name: &str,
    task: Task,
    jobs: &[Params],
) -> Result<Vec<CheckReport>, CliError> {
    let per_job: Vec<Result<Vec<CheckReport>, CliError>> =
        pool.install(|| jobs.par_iter().map(|p| run_one(name, task, p)).collect());
    let mut out = Vec::new();
    for r in per_job {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qgauss_core::IntPoly;

    fn echo(p: &Params) -> qgauss_core::Result<Vec<CheckReport>> {
        let n = p[0].1;
        match n {
            0 => Err(CoreError::BadParams("zero".into())),
            7 => Err(CoreError::DivisionByZero),
            13 => Ok(vec![CheckReport::fail(
                "echo",
                p,
                IntPoly::from_ints(&[1]),
                Some(0),
            )]),
            _ => Ok(vec![CheckReport::pass("echo", p)]),
        }
    }

    #[test]
    fn order_follows_parameters() {
        let workers = pool(Some(4)).unwrap();
        let jobs: Vec<Params> = (1..=200).map(|n| vec![("n", n)]).collect();
        let reports = run_all(&workers, "echo", echo, &jobs).unwrap();
        let ns: Vec<i64> = reports.iter().map(|r| r.params["n"]).collect();
        assert_eq!(ns, (1..=200).collect::<Vec<_>>());
        assert_eq!(reports[6].status, qgauss_core::Status::Error);
        assert_eq!(reports[12].status, qgauss_core::Status::Fail);
    }

    #[test]
    fn parameter_errors_are_usage_errors() {
        let single = pool(Some(1)).unwrap();
        let err = run_all(&single, "echo", echo, &[vec![("n", 0)]]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(pool(Some(0)).is_err());
    }
}
