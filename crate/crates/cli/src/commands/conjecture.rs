use std::fs;
use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use qgauss_core::identities::Params;
use qgauss_core::verify::{check_c1_c2, check_c3, check_c4, quadruples_with_product, Conjecture};
use qgauss_core::ToReport;
use serde::{Deserialize, Serialize};

use crate::exec::{usage, CliError, Task};
use crate::range::{grid, RangeSpec};

/// Hard cap on `--max-n`.
pub const MAX_N_CAP: i64 = 10_000;

/// Progress of a scan, keyed by slice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub command: String,
    pub ranges: IndexMap<String, String>,
    pub last_completed: Option<i64>,
}

impl Checkpoint {
    /// Loads `path` if it exists; a file written for a different scan is
    /// rejected.
    pub fn resume(
        path: &Path,
        command: &str,
        ranges: &IndexMap<String, String>,
    ) -> Result<Self, CliError> {
        let fresh = Checkpoint {
            command: command.to_string(),
            ranges: ranges.clone(),
            last_completed: None,
        };
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(fresh),
            Err(e) => return Err(e.into()),
        };
        let saved: Checkpoint = serde_json::from_str(&text)
            .map_err(|e| usage(format!("checkpoint {} is unreadable: {e}", path.display())))?;
        if saved.command != fresh.command || saved.ranges != fresh.ranges {
            return Err(usage(format!(
                "checkpoint {} belongs to `{}` with ranges {:?}, not this scan",
                path.display(),
                saved.command,
                saved.ranges
            )));
        }
        Ok(saved)
    }

    pub fn is_done(&self, slice: i64) -> bool {
        self.last_completed.is_some_and(|last| slice <= last)
    }

    /// Records `slice` as finished and writes the file atomically.
    pub fn complete(&mut self, slice: i64, path: &Path) -> Result<(), CliError> {
        self.last_completed = Some(slice);
        let mut tmp = PathBuf::from(path);
        tmp.as_mut_os_string().push(".tmp");
        let body =
            serde_json::to_string_pretty(self).map_err(|e| CliError::Internal(e.to_string()))?;
        fs::write(&tmp, body + "\n")?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

/// What a `check-conjecture` run will scan.
pub struct ScanPlan {
    pub name: String,
    pub command: String,
    pub ranges: IndexMap<String, String>,
    pub task: Task,
    /// `(slice key, tuples)` in increasing key order.
    pub slices: Vec<(i64, Vec<Params>)>,
}

#[derive(Debug, Default, Clone)]
pub struct ScanArgs {
    pub max_n: Option<i64>,
    pub beta: Option<RangeSpec>,
    pub a: Option<RangeSpec>,
    pub b: Option<RangeSpec>,
    pub k: Option<RangeSpec>,
}

fn or_default(r: &Option<RangeSpec>, default: &str) -> RangeSpec {
    r.clone()
        .unwrap_or_else(|| default.parse().expect("default range parses"))
}

fn quadruple_task(which: Conjecture) -> Task {
    match which {
        Conjecture::C1 => |p| {
            let [a, b, c, d] = [p[0].1, p[1].1, p[2].1, p[3].1];
            Ok(vec![check_c1_c2(a, b, c, d, Conjecture::C1)?.to_report()])
        },
        _ => |p| {
            let [a, b, c, d] = [p[0].1, p[1].1, p[2].1, p[3].1];
            Ok(vec![check_c1_c2(a, b, c, d, Conjecture::C2)?.to_report()])
        },
    }
}

fn reject(flag: &str, given: bool, which: u8) -> Result<(), CliError> {
    if given {
        Err(usage(format!(
            "--{flag} does not apply to conjecture {which}"
        )))
    } else {
        Ok(())
    }
}

pub fn plan(which: u8, args: &ScanArgs) -> Result<ScanPlan, CliError> {
    let command = format!("check-conjecture {which}");
    let mut ranges = IndexMap::new();
    let conj = match which {
        1 => Conjecture::C1,
        2 => Conjecture::C2,
        3 => Conjecture::C3,
        4 => Conjecture::C4,
        _ => {
            return Err(usage(format!(
                "conjecture must be 1, 2, 3 or 4, got {which}"
            )))
        }
    };
    let (task, slices): (Task, Vec<(i64, Vec<Params>)>) = match conj {
        Conjecture::C1 | Conjecture::C2 => {
            reject("beta", args.beta.is_some(), which)?;
            reject("a", args.a.is_some(), which)?;
            reject("b", args.b.is_some(), which)?;
            reject("k", args.k.is_some(), which)?;
            let max_n = args.max_n.unwrap_or(64);
            if !(1..=MAX_N_CAP).contains(&max_n) {
                return Err(usage(format!(
                    "--max-n must be in 1..={MAX_N_CAP}, got {max_n}"
                )));
            }
            ranges.insert("max_n".to_string(), max_n.to_string());
            let slices = (1..=max_n)
                .map(|n| {
                    let tuples = quadruples_with_product(n)
                        .into_iter()
                        .map(|q| vec![("a", q.a), ("b", q.b), ("c", q.c), ("d", q.d)])
                        .collect();
                    (n, tuples)
                })
                .collect();
            (quadruple_task(conj), slices)
        }
        Conjecture::C3 => {
            reject("max-n", args.max_n.is_some(), which)?;
            reject("k", args.k.is_some(), which)?;
            let specs = vec![
                ("beta", or_default(&args.beta, "1..3")),
                ("a", or_default(&args.a, "1..8")),
                ("b", or_default(&args.b, "a+1..9")),
            ];
            let task: Task = |p| Ok(vec![check_c3(p[1].1, p[2].1, p[0].1)?.to_report()]);
            (task, sliced(&specs, &mut ranges)?)
        }
        Conjecture::C4 => {
            reject("max-n", args.max_n.is_some(), which)?;
            reject("beta", args.beta.is_some(), which)?;
            let specs = vec![
                ("a", or_default(&args.a, "0..9")),
                ("b", or_default(&args.b, "a+1..10")),
                ("k", or_default(&args.k, "0..a")),
            ];
            let task: Task = |p| Ok(vec![check_c4(p[0].1, p[1].1, p[2].1)?.to_report()]);
            (task, sliced(&specs, &mut ranges)?)
        }
    };
    Ok(ScanPlan {
        name: conj.to_string(),
        command,
        ranges,
        task,
        slices,
    })
}

/// Slices on the outermost variable, which must not depend on the others.
fn sliced(
    specs: &[(&'static str, RangeSpec)],
    ranges: &mut IndexMap<String, String>,
) -> Result<Vec<(i64, Vec<Params>)>, CliError> {
    for (name, spec) in specs {
        ranges.insert(name.to_string(), spec.to_string());
    }
    let (outer_name, outer) = &specs[0];
    let mut slices = Vec::new();
    for v in outer
        .values(&vec![])
        .map_err(|e| usage(format!("--{outer_name}: {e}")))?
    {
        let prefix = vec![(*outer_name, v)];
        slices.push((v, grid(&prefix, &specs[1..]).map_err(usage)?));
    }
    if slices.iter().all(|(_, t)| t.is_empty()) {
        return Err(usage("the requested ranges contain no instances"));
    }
    Ok(slices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranges() -> IndexMap<String, String> {
        [("max_n".to_string(), "12".to_string())]
            .into_iter()
            .collect()
    }

    #[test]
    fn checkpoint_round_trip_and_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.json");
        let mut ck = Checkpoint::resume(&path, "check-conjecture 1", &ranges()).unwrap();
        assert_eq!(ck.last_completed, None);
        ck.complete(5, &path).unwrap();
        assert!(!dir.path().join("scan.json.tmp").exists());

        let again = Checkpoint::resume(&path, "check-conjecture 1", &ranges()).unwrap();
        assert_eq!(again.last_completed, Some(5));
        assert!(again.is_done(5) && !again.is_done(6));

        assert!(Checkpoint::resume(&path, "check-conjecture 2", &ranges()).is_err());
        let other = [("max_n".to_string(), "13".to_string())]
            .into_iter()
            .collect();
        assert!(Checkpoint::resume(&path, "check-conjecture 1", &other).is_err());

        fs::write(&path, "not json").unwrap();
        assert_eq!(
            Checkpoint::resume(&path, "check-conjecture 1", &ranges())
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn plans_cover_the_expected_instances() {
        let p = plan(
            1,
            &ScanArgs {
                max_n: Some(12),
                ..Default::default()
            },
        )
        .unwrap();
        let total: usize = p.slices.iter().map(|(_, t)| t.len()).sum();
        assert_eq!(total, qgauss_core::verify::enumerate_quadruples(12).len());

        let p = plan(3, &ScanArgs::default()).unwrap();
        assert_eq!(
            p.slices.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        assert_eq!(p.slices[0].1.len(), 36);

        let p = plan(4, &ScanArgs::default()).unwrap();
        let total: usize = p.slices.iter().map(|(_, t)| t.len()).sum();
        // sum over a of (10 - a) * (a + 1)
        assert_eq!(
            total,
            (0..=9).map(|a| (10 - a) * (a + 1)).sum::<i64>() as usize
        );
    }

    #[test]
    fn bad_arguments() {
        assert!(plan(5, &ScanArgs::default()).is_err());
        assert!(plan(
            1,
            &ScanArgs {
                max_n: Some(10_001),
                ..Default::default()
            }
        )
        .is_err());
        assert!(plan(
            1,
            &ScanArgs {
                max_n: Some(0),
                ..Default::default()
            }
        )
        .is_err());
        let beta = Some("2".parse().unwrap());
        assert!(plan(
            1,
            &ScanArgs {
                beta,
                ..Default::default()
            }
        )
        .is_err());
        let a = Some("5..1".parse().unwrap());
        assert!(plan(
            4,
            &ScanArgs {
                a,
                ..Default::default()
            }
        )
        .is_err());
    }
}
