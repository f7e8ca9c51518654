//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS/FAIL` line (visible with `--nocapture`, or
//! automatically when a criterion fails) before asserting.
//!
//! Expected values are pinned, not computed here: the small ones are
//! checkable by hand, the larger ones were produced up front by
//! independent scripted oracles and frozen. One pinned value is
//! knowingly contested; see [`criterion_1_showcase_level_counts`].

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use quadpart::partitions::classical;
use quadpart::qsum::{
    cauchy_check, euler_product, gordon_product_side, gordon_sum_side, leveque_check,
    leveque_lifted_check, modp_gf_check, sylvester_gf_check,
};
use quadpart::{
    count_class, count_class_via_sections, count_partitions, count_via_factorization,
    enumerate_partitions, verify_identity, ClassError, ClassSpec, FieldCtx, FieldError,
    IdentityKind, Partition, PrimeAbove5, QSum, QuadInt, ResidueClass, ShapeVariant, Side,
};

fn report(criterion: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {verdict} — {detail}");
}

/// The fields swept by the bulk criteria.
const SWEEP_FIELDS: [i64; 3] = [2, 3, 5];

/// Every totally positive element of `Q(sqrt(d))` with trace at most 10.
fn sweep_targets(d: i64) -> Vec<QuadInt> {
    FieldCtx::new(d).unwrap().elements_with_trace_at_most(10)
}

/// Showcase target: level-3 counts at 21 + 7*sqrt(3), plus the two
/// block products of the primitive partition (1^7 eps^7).
///
/// The externally pinned reference count for the level-3 case is 526.
/// Every route in this workspace — direct enumeration of either side,
/// the classical per-section counters on either side, and the q-sum
/// coefficient — computes 433 instead. The pinned value is asserted
/// verbatim rather than adjusted to match the code, so this test is
/// expected to fail; the README records the situation.
#[test]
fn criterion_1_showcase_level_counts() {
    let t0 = Instant::now();
    let ctx = FieldCtx::new(3).unwrap();
    let delta = ctx.element(21, 7);
    let a_spec = ClassSpec::sylvester(Side::A, 3).unwrap();
    let b_spec = ClassSpec::sylvester(Side::B, 3).unwrap();
    let a_direct = count_class(&delta, &a_spec).unwrap();
    let b_direct = count_class(&delta, &b_spec).unwrap();
    let a_sectional = count_class_via_sections(&delta, &a_spec).unwrap();
    let b_sectional = count_class_via_sections(&delta, &b_spec).unwrap();

    // Block counts for mu = (1^7 eps^7): distributing level 3 as 1+2
    // or 2+1 over the two sections, on both sides of the identity.
    let odd = |n, k| classical::sylvester_odd_distinct(n, k);
    let runs = |n, k| classical::sylvester_distinct_runs(n, k);
    let blocks = [
        odd(7, 1) * odd(7, 2),
        odd(7, 2) * odd(7, 1),
        runs(7, 1) * runs(7, 2),
        runs(7, 2) * runs(7, 1),
    ];

    let elapsed = t0.elapsed();
    let ok =
        a_direct == 526 && b_direct == 526 && blocks == [6; 4] && elapsed < Duration::from_secs(60);
    report(
        1,
        ok,
        &format!(
            "level-3 counts at {delta}: A={a_direct} B={b_direct} \
             (sectional routes {a_sectional}/{b_sectional}) vs pinned 526; \
             block products {blocks:?} vs [6, 6, 6, 6]; {} ms",
            elapsed.as_millis()
        ),
    );
    assert_eq!(blocks, [6; 4], "block products of (1^7 eps^7)");
    assert!(
        elapsed < Duration::from_secs(60),
        "showcase took {elapsed:?}, budget is 60 s"
    );
    assert_eq!(
        a_direct, 526,
        "pinned reference count for the odd side at level 3; \
         computed routes agree on {a_direct} (direct) and {a_sectional} (sectional)"
    );
    assert_eq!(
        b_direct, 526,
        "pinned reference count for the runs side at level 3; \
         computed routes agree on {b_direct} (direct) and {b_sectional} (sectional)"
    );
}

/// The five explicitly listed sectional sets of the worked example at
/// 21 + 7*sqrt(3), reproduced element for element in canonical form.
#[test]
fn criterion_2_worked_example_set_listings() {
    let ctx = FieldCtx::new(3).unwrap();
    let one = ctx.from_int(1);
    let eps = ctx.element(2, 1);
    let seven = ctx.from_int(7);
    let seven_eps = 7 * eps;
    let n = |m: i64| ctx.from_int(m);

    let listed = |lists: &[&[QuadInt]]| -> BTreeSet<Partition> {
        lists.iter().map(|ps| Partition::new(ps.to_vec())).collect()
    };
    let members = |delta: &QuadInt, side: Side, k: i64, gamma: &QuadInt| -> BTreeSet<Partition> {
        let spec = ClassSpec::sylvester(side, k).unwrap();
        enumerate_partitions(delta, &spec)
            .unwrap()
            .filter(|p| p.is_sectional(gamma))
            .collect()
    };

    let cases: Vec<(&str, BTreeSet<Partition>, BTreeSet<Partition>)> = vec![
        (
            "odd scales, two distinct parts, 1-section of 7",
            members(&seven, Side::A, 2, &one),
            listed(&[
                &[n(5), n(1), n(1)],
                &[n(3), n(1), n(1), n(1), n(1)],
                &[n(3), n(3), n(1)],
            ]),
        ),
        (
            "distinct parts, one run, 1-section of 7",
            members(&seven, Side::B, 1, &one),
            listed(&[&[n(4), n(3)], &[n(7)]]),
        ),
        (
            "distinct parts, two runs, 1-section of 7",
            members(&seven, Side::B, 2, &one),
            listed(&[&[n(6), n(1)], &[n(5), n(2)], &[n(4), n(2), n(1)]]),
        ),
        (
            "odd scales, one distinct part, 1-section of 7",
            members(&seven, Side::A, 1, &one),
            listed(&[&[n(1); 7], &[n(7)]]),
        ),
        (
            "distinct parts, two runs, eps-section of 7*eps",
            members(&seven_eps, Side::B, 2, &eps),
            listed(&[
                &[6 * eps, eps],
                &[5 * eps, 2 * eps],
                &[4 * eps, 2 * eps, eps],
            ]),
        ),
    ];

    let ok = cases.iter().all(|(_, got, want)| got == want);
    let sizes: Vec<usize> = cases.iter().map(|(_, got, _)| got.len()).collect();
    report(
        2,
        ok,
        &format!(
            "five listed sectional sets reproduced, sizes {sizes:?} (expected [3, 2, 3, 2, 3])"
        ),
    );
    for (name, got, want) in &cases {
        assert_eq!(got, want, "{name}");
    }
}

/// Level-k refinement identity across d = 2, 3, 5: direct enumeration
/// of both sides and the per-section classical counters all agree.
#[test]
fn criterion_3_sylvester_identity_sweep() {
    let t0 = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for d in SWEEP_FIELDS {
        for delta in sweep_targets(d) {
            for k in 1..=4 {
                let rep = verify_identity(&delta, IdentityKind::Sylvester { k }).unwrap();
                checked += 1;
                if !rep.holds() {
                    failures.push(format!(
                        "d={d} delta={delta} k={k}: {}/{}/{}/{}",
                        rep.a_direct, rep.a_sectional, rep.b_direct, rep.b_sectional
                    ));
                }
            }
        }
    }
    let elapsed = t0.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(300);
    report(
        3,
        ok,
        &format!(
            "{checked} (target, level) cases over d=2,3,5 with trace <= 10, \
             {} disagreements; {} ms",
            failures.len(),
            elapsed.as_millis()
        ),
    );
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(
        elapsed < Duration::from_secs(300),
        "sweep took {elapsed:?}, budget is 5 min"
    );
}

/// Gordon identity across the same range: counting agreement on both
/// sides by both routes, and the restricted product equal to the
/// product of the per-section sum sides, coefficient by coefficient.
#[test]
fn criterion_4_gordon_identity_sweep() {
    const PAIRS: [(i64, i64); 5] = [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)];
    let t0 = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for d in SWEEP_FIELDS {
        for delta in sweep_targets(d) {
            for (k, i) in PAIRS {
                let rep = verify_identity(&delta, IdentityKind::Gordon { k, i }).unwrap();
                if !rep.holds() {
                    failures.push(format!(
                        "counting d={d} delta={delta} k={k} i={i}: {}/{}/{}/{}",
                        rep.a_direct, rep.a_sectional, rep.b_direct, rep.b_sectional
                    ));
                }
                let product = gordon_product_side(k, i, &delta).unwrap();
                let mut sums = QSum::one(delta, vec![]);
                for gamma in delta.primitives_up_to().unwrap() {
                    sums = &sums * &gordon_sum_side(&gamma, k, i, &delta).unwrap();
                }
                if product != sums {
                    failures.push(format!("series d={d} delta={delta} k={k} i={i}"));
                }
                checked += 1;
            }
        }
    }
    let elapsed = t0.elapsed();
    let ok = failures.is_empty();
    report(
        4,
        ok,
        &format!(
            "{checked} (target, k, i) cases over d=2,3,5 with trace <= 10, counting and \
             series routes; {} disagreements; {} ms",
            failures.len(),
            elapsed.as_millis()
        ),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Unrestricted counting: direct memoized count, the
/// primitive-factorization route, and the Euler-product coefficient
/// agree at every target.
#[test]
fn criterion_5_total_count_routes() {
    let t0 = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for d in SWEEP_FIELDS {
        for delta in sweep_targets(d) {
            let direct = count_partitions(&delta).unwrap();
            let via_fact = count_via_factorization(&delta).unwrap();
            let coeff = euler_product(&delta)
                .unwrap()
                .coefficient(&delta, &[])
                .unwrap();
            checked += 1;
            if !(direct == via_fact && direct == coeff) {
                failures.push(format!(
                    "d={d} delta={delta}: direct {direct}, factorization {via_fact}, coefficient {coeff}"
                ));
            }
        }
    }
    let elapsed = t0.elapsed();
    let ok = failures.is_empty();
    report(
        5,
        ok,
        &format!(
            "{checked} targets, three routes each; {} disagreements; {} ms",
            failures.len(),
            elapsed.as_millis()
        ),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

/// All integer partitions of `n`, parts nonincreasing. Deliberately
/// the crudest possible enumerator: it shares no code with the
/// library and serves as the oracle for the classical counters.
fn integer_partitions(n: i64) -> Vec<Vec<i64>> {
    fn rec(rem: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of distinct values among nonincreasing `parts` if all are
/// odd, else `None`.
fn odd_level(parts: &[i64]) -> Option<i64> {
    if parts.iter().any(|p| p % 2 == 0) {
        return None;
    }
    let mut distinct = parts.to_vec();
    distinct.dedup();
    Some(distinct.len() as i64)
}

/// Number of maximal runs of consecutive values if all parts are
/// distinct, else `None`.
fn runs_level(parts: &[i64]) -> Option<i64> {
    if parts.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut asc = parts.to_vec();
    asc.sort_unstable();
    Some(1 + asc.windows(2).filter(|w| w[1] != w[0] + 1).count() as i64)
}

/// True iff no part is congruent to `0`, `i`, or `-i` mod `2k + 1`.
fn residues_ok(parts: &[i64], k: i64, i: i64) -> bool {
    let m = 2 * k + 1;
    parts.iter().all(|p| {
        let r = p.rem_euclid(m);
        r != 0 && r != i && r != m - i
    })
}

/// True iff nonincreasing `parts` satisfy the level-`(k, i)`
/// difference conditions: parts `k - 1` positions apart differ by at
/// least 2, and at most `i - 1` parts equal 1.
fn differences_ok(parts: &[i64], k: i64, i: i64) -> bool {
    let ku = k as usize;
    let gaps = (0..parts.len()).all(|j| j + ku > parts.len() || parts[j] - parts[j + ku - 1] >= 2);
    let ones = parts.iter().filter(|&&p| p == 1).count() as i64;
    gaps && ones < i
}

/// Classical backstops: the library's per-section counters against a
/// self-contained brute-force enumerator, plus the pinned small cases.
#[test]
fn criterion_6_classical_backstops() {
    let t0 = Instant::now();

    let p5 = integer_partitions(5).len() as i64;
    let parts7 = integer_partitions(7);
    let a2_7 = parts7.iter().filter(|p| odd_level(p) == Some(2)).count() as i64;
    let b2_7 = parts7.iter().filter(|p| runs_level(p) == Some(2)).count() as i64;
    let parts9 = integer_partitions(9);
    let b22_9 = parts9.iter().filter(|p| differences_ok(p, 2, 2)).count() as i64;
    let a22_9 = parts9.iter().filter(|p| residues_ok(p, 2, 2)).count() as i64;

    let mut mismatches = Vec::new();
    for n in 1..=40 {
        let all = integer_partitions(n);
        for k in 1..=10 {
            let a = all.iter().filter(|p| odd_level(p) == Some(k)).count() as i64;
            let b = all.iter().filter(|p| runs_level(p) == Some(k)).count() as i64;
            let lib_a = classical::sylvester_odd_distinct(n, k);
            let lib_b = classical::sylvester_distinct_runs(n, k);
            if !(a == b && a == lib_a && a == lib_b) {
                mismatches.push(format!(
                    "level n={n} k={k}: brute {a}/{b}, library {lib_a}/{lib_b}"
                ));
            }
        }
        if n <= 30 {
            for k in 2..=4 {
                for i in 1..=k {
                    let a = all.iter().filter(|p| residues_ok(p, k, i)).count() as i64;
                    let b = all.iter().filter(|p| differences_ok(p, k, i)).count() as i64;
                    let lib_a = classical::gordon_allowed_residues(n, k, i);
                    let lib_b = classical::gordon_difference(n, k, i);
                    if !(a == b && a == lib_a && a == lib_b) {
                        mismatches.push(format!(
                            "gordon n={n} k={k} i={i}: brute {a}/{b}, library {lib_a}/{lib_b}"
                        ));
                    }
                }
            }
        }
    }

    let elapsed = t0.elapsed();
    let pinned_ok = p5 == 7
        && classical::partition_count(5) == 7
        && a2_7 == 3
        && b2_7 == 3
        && b22_9 == 5
        && a22_9 == 5;
    let ok = pinned_ok && mismatches.is_empty();
    report(
        6,
        ok,
        &format!(
            "p(5)={p5}, level-2 at 7: {a2_7}/{b2_7}, (2,2) at 9: {a22_9}/{b22_9}; \
             level sweep n<=40, gordon sweep n<=30 k<=4: {} mismatches; {} ms",
            mismatches.len(),
            elapsed.as_millis()
        ),
    );
    assert_eq!(p5, 7);
    assert_eq!(classical::partition_count(5), 7);
    assert_eq!((a2_7, b2_7), (3, 3));
    assert_eq!((a22_9, b22_9), (5, 5));
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}

/// Truncated q-sum identities: marker-graded section coefficients
/// against the classical counters, the triangular-number identity in
/// classical and lifted form, and the bivariate expansion — with the
/// printed-vs-standard resolutions pinned as data.
#[test]
fn criterion_7_qsum_identity_checks() {
    let t0 = Instant::now();
    let ctx2 = FieldCtx::new(2).unwrap();
    let ctx3 = FieldCtx::new(3).unwrap();
    let ctx5 = FieldCtx::new(5).unwrap();
    let eps3 = ctx3.element(2, 1);

    // Bivariate section series: coefficients of a^j q^(n*gamma) for
    // n * trace(gamma) <= 20, over a rational and an irrational section.
    let sy_rational = sylvester_gf_check(&ctx2.from_int(1), &ctx2.from_int(10), 4).unwrap();
    let sy_irrational = sylvester_gf_check(&eps3, &(5 * eps3), 4).unwrap();

    let lv_classical = leveque_check(20, 6).unwrap();
    let lv_lifted = [
        leveque_lifted_check(&ctx2.from_int(6), 4).unwrap(),
        leveque_lifted_check(&ctx3.element(4, 2), 3).unwrap(),
        leveque_lifted_check(&ctx5.from_int(4), 3).unwrap(),
    ];
    let cauchy = cauchy_check(15, 5, 5).unwrap();

    let elapsed = t0.elapsed();
    let sy_ok = sy_rational.odd_side_equal
        && sy_rational.distinct_side_equal
        && sy_irrational.odd_side_equal
        && sy_irrational.distinct_side_equal;
    let lv_ok = lv_classical.corrected_equal
        && !lv_classical.printed_equal
        && lv_lifted
            .iter()
            .all(|r| r.corrected_equal && !r.printed_equal);
    let cauchy_ok = cauchy.standard_equal && !cauchy.printed_equal;
    let ok = sy_ok && lv_ok && cauchy_ok;
    report(
        7,
        ok,
        &format!(
            "section series match both classical counters (rational and eps sections); \
             triangular-number identity holds in the sign-corrected form only \
             (classical and 3 lifted targets); bivariate expansion holds with the \
             standard factor length only; {} ms",
            elapsed.as_millis()
        ),
    );
    assert!(sy_ok, "section series: {sy_rational:?} / {sy_irrational:?}");
    assert!(lv_ok, "triangular-number: {lv_classical:?} / {lv_lifted:?}");
    assert!(cauchy_ok, "bivariate expansion: {cauchy:?}");
}

/// Mod-5 suite over the split fields d = 5 and d = 11: counting
/// equalities for both variants, the generating-function equality on
/// each downset, and the inert field d = 2 reporting its obstruction.
#[test]
fn criterion_8_mod5_suite() {
    let t0 = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for d in [5, 11] {
        for delta in sweep_targets(d) {
            for variant in [ShapeVariant::V1, ShapeVariant::V2] {
                let rep = verify_identity(&delta, IdentityKind::ModP { variant }).unwrap();
                if !rep.holds() {
                    failures.push(format!(
                        "counting d={d} delta={delta} {variant:?}: {}/{}/{}/{}",
                        rep.a_direct, rep.a_sectional, rep.b_direct, rep.b_sectional
                    ));
                }
                let gf = modp_gf_check(&delta, variant).unwrap();
                if !(gf.sides_equal && gf.counting_bridge_equal) {
                    failures.push(format!(
                        "series d={d} delta={delta} {variant:?}: sides {} bridge {}",
                        gf.sides_equal, gf.counting_bridge_equal
                    ));
                }
                checked += 1;
            }
        }
    }
    let inert = FieldCtx::new(2).unwrap();
    let prime_reports_inert = matches!(PrimeAbove5::find(inert), Err(FieldError::Inert5(2)));
    let class_reports_inert = matches!(
        ClassSpec::modp_parts(inert, ResidueClass::OneFour),
        Err(ClassError::Field(FieldError::Inert5(2)))
    );

    let elapsed = t0.elapsed();
    let ok = failures.is_empty() && prime_reports_inert && class_reports_inert;
    report(
        8,
        ok,
        &format!(
            "{checked} (target, variant) cases over d=5,11 with trace <= 10, counting and \
             series routes; {} disagreements; d=2 reports the inert prime: {}; {} ms",
            failures.len(),
            prime_reports_inert && class_reports_inert,
            elapsed.as_millis()
        ),
    );
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(prime_reports_inert, "d=2 must report 5 as inert");
    assert!(
        class_reports_inert,
        "mod-5 classes over d=2 must fail with the inert error"
    );
}
