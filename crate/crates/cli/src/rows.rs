//! Report rows and their emission.
//!
//! Every verification command reduces to a list of [`Row`]s with the
//! fixed column set `field, target, check, lhs, rhs, verdict, millis`.
//! Rows are sorted canonically — by field, target embedding pair,
//! then check name — before emission, so output is independent of the
//! schedule that produced them.

use std::io::Write;

use anyhow::Context;
use quadpart::QuadInt;
use serde::Serialize;

/// Outcome of one check on one target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Both routes produced identical values.
    Equal,
    /// The routes disagree.
    Unequal,
    /// The check does not apply to this field (reason in `rhs`).
    Skipped,
}

impl Verdict {
    /// The lowercase column text.
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::Unequal => "unequal",
            Verdict::Skipped => "skipped",
        }
    }

    /// Convenience constructor from an equality flag.
    pub fn from_equal(equal: bool) -> Verdict {
        if equal {
            Verdict::Equal
        } else {
            Verdict::Unequal
        }
    }
}

/// One report line: a check applied to a target with both computed
/// values, the verdict, and wall-clock time.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    /// Radicand of the field, or `0` for purely classical checks.
    pub field: i64,
    /// Element text of the target (or a classical truncation label).
    pub target: String,
    /// Check name, including its parameters.
    pub check: String,
    /// Left value (first route).
    pub lhs: String,
    /// Right value (second route).
    pub rhs: String,
    /// Agreement verdict.
    pub verdict: Verdict,
    /// Wall-clock milliseconds for the producing check (`0` in batch
    /// mode, where byte-identical output across widths is guaranteed).
    pub millis: u64,
    /// Embedding pair of the target for canonical sorting; classical
    /// rows sort before all elements.
    #[serde(skip)]
    sort_target: (i64, i64),
}

impl Row {
    /// A row about one field element.
    pub fn for_element(
        delta: &QuadInt,
        check: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        verdict: Verdict,
    ) -> Row {
        Row {
            field: delta.ctx().d(),
            target: delta.to_string(),
            check: check.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            verdict,
            millis: 0,
            sort_target: delta.embedding_pair(),
        }
    }

    /// A row about a classical (integer-exponent) check.
    pub fn classical(
        target: impl Into<String>,
        check: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        verdict: Verdict,
    ) -> Row {
        Row {
            field: 0,
            target: target.into(),
            check: check.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            verdict,
            millis: 0,
            sort_target: (0, 0),
        }
    }

    fn sort_key(&self) -> (i64, (i64, i64), &str, &str) {
        (self.field, self.sort_target, &self.target, &self.check)
    }
}

/// Sorts rows into the canonical emission order.
pub fn sort_rows(rows: &mut [Row]) {
    rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Output format selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutFormat {
    /// Comma-separated with a header line.
    #[default]
    Csv,
    /// A JSON array of row objects.
    Json,
}

impl OutFormat {
    /// Parses the `format` field of a job file.
    pub fn parse(text: &str) -> anyhow::Result<OutFormat> {
        match text {
            "csv" => Ok(OutFormat::Csv),
            "json" => Ok(OutFormat::Json),
            other => anyhow::bail!("unknown format {other:?} (expected \"csv\" or \"json\")"),
        }
    }
}

/// Writes rows in the chosen format.
pub fn write_rows(out: &mut dyn Write, format: OutFormat, rows: &[Row]) -> anyhow::Result<()> {
    match format {
        OutFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "field", "target", "check", "lhs", "rhs", "verdict", "millis",
            ])?;
            for r in rows {
                w.write_record([
                    r.field.to_string(),
                    r.target.clone(),
                    r.check.clone(),
                    r.lhs.clone(),
                    r.rhs.clone(),
                    r.verdict.as_str().to_string(),
                    r.millis.to_string(),
                ])?;
            }
            w.flush()?;
        }
        OutFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, rows).context("serializing rows")?;
            writeln!(out)?;
        }
    }
    Ok(())
}
