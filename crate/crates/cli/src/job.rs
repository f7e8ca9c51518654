//! Batch job files.
//!
//! A job file is a JSON object naming one field, a target selection,
//! and a list of checks. Batch output is fully deterministic — rows
//! are sorted canonically and the `millis` column is pinned to 0 — so
//! identical job files produce byte-identical output at any
//! parallelism width (timing goes to stderr instead).

use std::fs;
use std::path::Path;

use anyhow::Context;
use quadpart::par::Width;
use quadpart::FieldCtx;
use serde::Deserialize;

use crate::rows::{sort_rows, OutFormat, Row};
use crate::run::{resolve_targets, run_checks, Check};

fn default_format() -> String {
    "csv".to_string()
}

fn default_jobs() -> usize {
    1
}

/// A batch job: one field, a target selection, and a check list.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    /// Radicand of the field.
    pub d: i64,
    /// Explicit target elements (element text or bare integers).
    #[serde(default)]
    pub targets: Vec<String>,
    /// Also include every totally positive element with trace at most
    /// this value.
    #[serde(default)]
    pub trace_max: Option<i64>,
    /// Check names, as in [`Check::parse`].
    pub checks: Vec<String>,
    /// Output format: `"csv"` (default) or `"json"`.
    #[serde(default = "default_format")]
    pub format: String,
    /// Parallelism width (`1` = sequential, `0` = machine default).
    #[serde(default = "default_jobs")]
    pub jobs: usize,
}

impl JobSpec {
    /// Reads and parses a job file.
    pub fn load(path: &Path) -> anyhow::Result<JobSpec> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading job file {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing job file {}", path.display()))
    }

    /// Runs the job and returns its sorted, millis-zeroed rows plus
    /// the output format.
    pub fn run(&self, jobs_override: Option<usize>) -> anyhow::Result<(Vec<Row>, OutFormat)> {
        let format = OutFormat::parse(&self.format)?;
        let ctx = FieldCtx::new(self.d)?;
        let targets = resolve_targets(ctx, &self.targets, self.trace_max)?;
        let checks = self
            .checks
            .iter()
            .map(|text| Check::parse(text))
            .collect::<anyhow::Result<Vec<Check>>>()?;
        if checks.is_empty() {
            anyhow::bail!("job file lists no checks");
        }
        let width = Width::from_jobs(jobs_override.unwrap_or(self.jobs));
        let mut rows = run_checks(width, &targets, &checks)?;
        for row in &mut rows {
            row.millis = 0;
        }
        sort_rows(&mut rows);
        Ok((rows, format))
    }
}
