//! Check vocabulary and execution.
//!
//! A [`Check`] is one named verification applied per target element;
//! the same vocabulary is used by the direct `verify-*` subcommands
//! and by batch job files. Each check produces one or two [`Row`]s
//! carrying the values computed by both routes, so a disagreement is
//! visible in the output itself, not just in the exit code.

use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::{bail, Context};
use quadpart::par::{map_vec, Width};
use quadpart::qsum::checks::{
    cauchy_check, gordon_gf_check, leveque_check, leveque_lifted_check, modp_gf_check,
    sylvester_gf_check,
};
use quadpart::qsum::{euler_product, gordon_product_side, modp_product_side, QSumError};
use quadpart::quadfield::{FieldCtx, FieldError, QuadInt};
use quadpart::{
    count_class, count_class_via_sections, count_partitions, count_via_factorization,
    enumerate_partitions, verify_identity, ClassError, ClassSpec, IdentityKind, ResidueClass,
    ShapeVariant, Side,
};

use crate::rows::{Row, Verdict};

/// One named verification, applied per target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    /// Count a class by direct enumeration and by sectional
    /// factorization; the class is named in the restriction syntax
    /// (`all`, `sylA:k=3`, `gorB:k=2,i=1`, `modp:parts=14`, ...).
    Count(String),
    /// Unrestricted count two ways plus the Euler-product coefficient.
    Euler,
    /// Odd-parts vs distinct-parts refinement at one level.
    Sylvester { k: i64 },
    /// Residue class vs difference conditions at one (level, index).
    Gordon { k: i64, i: i64 },
    /// Both Rogers-Ramanujan cases (`k = 2`, `i = 1, 2`).
    Rr,
    /// Both mod-5 count equalities (parts form vs shape form).
    ModP,
    /// Both mod-5 generating-function identities.
    ModPGf,
    /// The Gordon generating-function identity at one (level, index).
    GordonGf { k: i64, i: i64 },
}

fn check_params(text: &str) -> anyhow::Result<Vec<(String, i64)>> {
    text.split(',')
        .map(|piece| {
            let (key, value) = piece
                .split_once('=')
                .with_context(|| format!("expected key=value in {piece:?}"))?;
            let value: i64 = value
                .parse()
                .with_context(|| format!("bad integer in {piece:?}"))?;
            Ok((key.to_string(), value))
        })
        .collect()
}

fn take_params(text: &str, keys: &[&str]) -> anyhow::Result<Vec<i64>> {
    let params = check_params(text)?;
    if params.len() != keys.len() || !params.iter().zip(keys).all(|((k, _), want)| k == want) {
        bail!(
            "expected parameters {} in order, got {text:?}",
            keys.join(",")
        );
    }
    Ok(params.into_iter().map(|(_, v)| v).collect())
}

impl Check {
    /// Parses a check name as used in batch job files.
    pub fn parse(text: &str) -> anyhow::Result<Check> {
        if let Some(rest) = text.strip_prefix("count:") {
            return Ok(Check::Count(rest.to_string()));
        }
        if let Some(rest) = text.strip_prefix("sylvester:") {
            let v = take_params(rest, &["k"])?;
            return Ok(Check::Sylvester { k: v[0] });
        }
        if let Some(rest) = text.strip_prefix("gordon-gf:") {
            let v = take_params(rest, &["k", "i"])?;
            return Ok(Check::GordonGf { k: v[0], i: v[1] });
        }
        if let Some(rest) = text.strip_prefix("gordon:") {
            let v = take_params(rest, &["k", "i"])?;
            return Ok(Check::Gordon { k: v[0], i: v[1] });
        }
        match text {
            "count" => Ok(Check::Count("all".to_string())),
            "euler" => Ok(Check::Euler),
            "rr" => Ok(Check::Rr),
            "modp" => Ok(Check::ModP),
            "modp-gf" => Ok(Check::ModPGf),
            other => bail!("unknown check {other:?}"),
        }
    }

    /// Runs the check on one target, producing its rows. A field where
    /// 5 does not split turns mod-5 checks into a single skipped row.
    pub fn rows(&self, delta: &QuadInt) -> anyhow::Result<Vec<Row>> {
        let started = Instant::now();
        let mut rows = self.rows_inner(delta)?;
        let millis = started.elapsed().as_millis() as u64;
        for row in &mut rows {
            row.millis = millis;
        }
        Ok(rows)
    }

    fn rows_inner(&self, delta: &QuadInt) -> anyhow::Result<Vec<Row>> {
        match self {
            Check::Count(class_text) => count_rows(delta, class_text),
            Check::Euler => euler_rows(delta),
            Check::Sylvester { k } => identity_rows(
                delta,
                IdentityKind::Sylvester { k: *k },
                format!("sylvester:k={k}"),
            ),
            Check::Gordon { k, i } => identity_rows(
                delta,
                IdentityKind::Gordon { k: *k, i: *i },
                format!("gordon:k={k},i={i}"),
            ),
            Check::Rr => {
                let mut rows = Vec::new();
                for i in [1, 2] {
                    rows.extend(identity_rows(
                        delta,
                        IdentityKind::Gordon { k: 2, i },
                        format!("rr:i={i}"),
                    )?);
                }
                Ok(rows)
            }
            Check::ModP => modp_rows(delta),
            Check::ModPGf => modp_gf_rows(delta),
            Check::GordonGf { k, i } => gordon_gf_rows(delta, *k, *i),
        }
    }
}

fn class_is_inert(err: &ClassError) -> bool {
    matches!(err, ClassError::Field(FieldError::Inert5(_)))
}

fn qsum_is_inert(err: &QSumError) -> bool {
    matches!(
        err,
        QSumError::Field(FieldError::Inert5(_))
            | QSumError::Class(ClassError::Field(FieldError::Inert5(_)))
    )
}

fn skipped(delta: &QuadInt, check: &str) -> Row {
    Row::for_element(delta, check, "-", "inert5", Verdict::Skipped)
}

fn eq_text(equal: bool) -> &'static str {
    if equal {
        "equal"
    } else {
        "unequal"
    }
}

fn count_rows(delta: &QuadInt, class_text: &str) -> anyhow::Result<Vec<Row>> {
    let spec = match ClassSpec::parse(class_text, delta.ctx()) {
        Ok(spec) => spec,
        Err(err) if class_is_inert(&err) => {
            return Ok(vec![skipped(delta, &format!("count:{class_text}"))]);
        }
        Err(err) => return Err(err).context(format!("parsing class {class_text:?}")),
    };
    let (lhs, rhs) = if spec == ClassSpec::All {
        (count_partitions(delta)?, count_via_factorization(delta)?)
    } else {
        (
            count_class(delta, &spec)?,
            count_class_via_sections(delta, &spec)?,
        )
    };
    Ok(vec![Row::for_element(
        delta,
        format!("count:{spec}"),
        lhs.to_string(),
        rhs.to_string(),
        Verdict::from_equal(lhs == rhs),
    )])
}

fn euler_rows(delta: &QuadInt) -> anyhow::Result<Vec<Row>> {
    let direct = count_partitions(delta)?;
    let sectional = count_via_factorization(delta)?;
    let coefficient = euler_product(delta)?.coefficient(delta, &[])?;
    Ok(vec![
        Row::for_element(
            delta,
            "euler:count",
            direct.to_string(),
            sectional.to_string(),
            Verdict::from_equal(direct == sectional),
        ),
        Row::for_element(
            delta,
            "euler:gf",
            coefficient.to_string(),
            direct.to_string(),
            Verdict::from_equal(coefficient == direct),
        ),
    ])
}

fn identity_rows(delta: &QuadInt, kind: IdentityKind, base: String) -> anyhow::Result<Vec<Row>> {
    let report = verify_identity(delta, kind)?;
    let verdict = Verdict::from_equal(report.holds());
    Ok(vec![
        Row::for_element(
            delta,
            base.clone(),
            report.a_direct.to_string(),
            report.b_direct.to_string(),
            verdict,
        ),
        Row::for_element(
            delta,
            format!("{base}:sections"),
            report.a_sectional.to_string(),
            report.b_sectional.to_string(),
            verdict,
        ),
    ])
}

fn variant_text(variant: ShapeVariant) -> &'static str {
    match variant {
        ShapeVariant::V1 => "v1",
        ShapeVariant::V2 => "v2",
    }
}

fn modp_rows(delta: &QuadInt) -> anyhow::Result<Vec<Row>> {
    let mut rows = Vec::new();
    for variant in [ShapeVariant::V1, ShapeVariant::V2] {
        let base = format!("modp:{}", variant_text(variant));
        match verify_identity(delta, IdentityKind::ModP { variant }) {
            Ok(report) => {
                let verdict = Verdict::from_equal(report.holds());
                rows.push(Row::for_element(
                    delta,
                    base.clone(),
                    report.a_direct.to_string(),
                    report.b_direct.to_string(),
                    verdict,
                ));
                rows.push(Row::for_element(
                    delta,
                    format!("{base}:sections"),
                    report.a_sectional.to_string(),
                    report.b_sectional.to_string(),
                    verdict,
                ));
            }
            Err(err) if class_is_inert(&err) => return Ok(vec![skipped(delta, "modp")]),
            Err(err) => return Err(err.into()),
        }
    }
    Ok(rows)
}

fn modp_gf_rows(delta: &QuadInt) -> anyhow::Result<Vec<Row>> {
    let mut rows = Vec::new();
    for variant in [ShapeVariant::V1, ShapeVariant::V2] {
        let check = format!("modp-gf:{}", variant_text(variant));
        match modp_gf_check(delta, variant) {
            Ok(report) => {
                let residues = match variant {
                    ShapeVariant::V1 => ResidueClass::OneFour,
                    ShapeVariant::V2 => ResidueClass::TwoThree,
                };
                let coefficient = modp_product_side(delta, residues)?.coefficient(delta, &[])?;
                let count = count_class(delta, &ClassSpec::modp_parts(delta.ctx(), residues)?)?;
                rows.push(Row::for_element(
                    delta,
                    check,
                    coefficient.to_string(),
                    count.to_string(),
                    Verdict::from_equal(report.sides_equal && report.counting_bridge_equal),
                ));
            }
            Err(err) if qsum_is_inert(&err) => return Ok(vec![skipped(delta, "modp-gf")]),
            Err(err) => return Err(err.into()),
        }
    }
    Ok(rows)
}

fn gordon_gf_rows(delta: &QuadInt, k: i64, i: i64) -> anyhow::Result<Vec<Row>> {
    let report = gordon_gf_check(delta, k, i)?;
    let coefficient = gordon_product_side(k, i, delta)?.coefficient(delta, &[])?;
    let count = count_class(delta, &ClassSpec::gordon(Side::A, k, i)?)?;
    Ok(vec![Row::for_element(
        delta,
        format!("gordon-gf:k={k},i={i}"),
        coefficient.to_string(),
        count.to_string(),
        Verdict::from_equal(report.sides_equal && report.counting_bridge_equal),
    )])
}

/// Rows for the classical bivariate expansion check; the marker caps
/// are part of the check name so different invocations stay distinct.
pub fn cauchy_rows(n_bound: i64, a_cap: u16, t_cap: u16) -> anyhow::Result<Vec<Row>> {
    let started = Instant::now();
    let report = cauchy_check(n_bound, a_cap, t_cap)?;
    let mut row = Row::classical(
        format!("n<={n_bound}"),
        format!("cauchy:a<={a_cap},t<={t_cap}"),
        format!("standard:{}", eq_text(report.standard_equal)),
        format!("printed:{}", eq_text(report.printed_equal)),
        Verdict::from_equal(report.standard_equal),
    );
    row.millis = started.elapsed().as_millis() as u64;
    Ok(vec![row])
}

/// Rows for the classical triangular-number sum check.
pub fn leveque_rows(n_bound: i64, a_cap: u16) -> anyhow::Result<Vec<Row>> {
    let started = Instant::now();
    let report = leveque_check(n_bound, a_cap)?;
    let mut row = Row::classical(
        format!("n<={n_bound}"),
        format!("leveque:a<={a_cap}"),
        format!("corrected:{}", eq_text(report.corrected_equal)),
        format!("printed:{}", eq_text(report.printed_equal)),
        Verdict::from_equal(report.corrected_equal),
    );
    row.millis = started.elapsed().as_millis() as u64;
    Ok(vec![row])
}

/// Rows for the lifted triangular-number sum check at a field bound.
pub fn leveque_lift_rows(delta: &QuadInt, a_cap: u16) -> anyhow::Result<Vec<Row>> {
    let started = Instant::now();
    let report = leveque_lifted_check(delta, a_cap)?;
    let mut row = Row::for_element(
        delta,
        format!("leveque-lift:a<={a_cap}"),
        format!("corrected:{}", eq_text(report.corrected_equal)),
        format!("printed:{}", eq_text(report.printed_equal)),
        Verdict::from_equal(report.corrected_equal),
    );
    row.millis = started.elapsed().as_millis() as u64;
    Ok(vec![row])
}

/// Rows for the bivariate Sylvester expansion over one section.
pub fn sylvester_gf_rows(gamma: &QuadInt, delta: &QuadInt, a_cap: u16) -> anyhow::Result<Vec<Row>> {
    let started = Instant::now();
    let report = sylvester_gf_check(gamma, delta, a_cap)?;
    let mut row = Row::for_element(
        delta,
        format!("sylvester-gf:gamma={gamma},k<={a_cap}"),
        format!("odd:{}", eq_text(report.odd_side_equal)),
        format!("runs:{}", eq_text(report.distinct_side_equal)),
        Verdict::from_equal(report.odd_side_equal && report.distinct_side_equal),
    );
    row.millis = started.elapsed().as_millis() as u64;
    Ok(vec![row])
}

/// Resolves the target selection: explicit element texts plus an
/// optional full trace sweep, deduplicated into canonical order.
pub fn resolve_targets(
    ctx: FieldCtx,
    targets: &[String],
    trace_max: Option<i64>,
) -> anyhow::Result<Vec<QuadInt>> {
    let mut set = BTreeSet::new();
    for text in targets {
        let element =
            QuadInt::parse_in(ctx, text).with_context(|| format!("parsing target {text:?}"))?;
        if !element.is_totally_positive() {
            bail!("target {text:?} is not totally positive");
        }
        set.insert(element);
    }
    if let Some(t) = trace_max {
        if t < 1 {
            bail!("--trace-max must be at least 1");
        }
        set.extend(ctx.elements_with_trace_at_most(t));
    }
    if set.is_empty() {
        bail!("no targets: give --target and/or --trace-max");
    }
    Ok(set.into_iter().collect())
}

/// Applies every check to every target, in parallel over the
/// (target, check) pairs, and returns the rows (unsorted).
pub fn run_checks(width: Width, targets: &[QuadInt], checks: &[Check]) -> anyhow::Result<Vec<Row>> {
    let items: Vec<(QuadInt, Check)> = targets
        .iter()
        .flat_map(|t| checks.iter().map(move |c| (*t, c.clone())))
        .collect();
    let results = map_vec(width, &items, |(target, check)| check.rows(target));
    let mut rows = Vec::new();
    for result in results {
        rows.extend(result?);
    }
    Ok(rows)
}

/// Prints one partition of `delta` per line, restricted to a class.
pub fn print_partitions(delta: &QuadInt, class_text: &str) -> anyhow::Result<u64> {
    let spec = ClassSpec::parse(class_text, delta.ctx())
        .with_context(|| format!("parsing class {class_text:?}"))?;
    let mut n = 0u64;
    for partition in enumerate_partitions(delta, &spec)? {
        println!("{partition}");
        n += 1;
    }
    Ok(n)
}
