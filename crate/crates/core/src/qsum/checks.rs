//! Identity verdicts: each check builds both sides of an identity as
//! truncated series through independent routes and reports whether
//! they agree term-by-term.
//!
//! The reports carry plain booleans rather than panicking so that a
//! failing variant (several of the checks exist precisely to separate
//! a correct form from a near-miss form) is data, not an error.

use crate::partitions::classical;
use crate::partitions::{ClassSpec, ResidueClass, ShapeVariant, Side};
use crate::quadfield::QuadInt;

use super::builders::{gordon_product_side, gordon_sum_side, modp_product_side, modp_sum_side};
use super::poch::{exponents_first_n, exponents_from, pochhammer_s};
use super::{Exponent, QSum, QSumError};

/// Verdict of the bivariate geometric-series expansion check
/// comparing the product form against two sum forms: the standard one
/// with a full length-`n` rising factor, and a variant with the
/// factor shortened by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CauchyReport {
    /// Exponent truncation `0..=n_bound`.
    pub n_bound: i64,
    /// Cap on powers of the first marker.
    pub a_cap: u16,
    /// Cap on powers of the second marker.
    pub t_cap: u16,
    /// True iff the shortened-factor sum matches the product.
    pub printed_equal: bool,
    /// True iff the standard sum matches the product.
    pub standard_equal: bool,
}

/// Verdict of the triangular-number sum check against two product
/// forms that differ in the sign of the second factor's series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeVequeReport {
    /// Human-readable description of the truncation used.
    pub truncation: String,
    /// Cap on powers of the marker.
    pub a_cap: u16,
    /// True iff the `(q^s; q^s)`-style product matches the sum.
    pub printed_equal: bool,
    /// True iff the `(-q^s; q^s)`-style product matches the sum.
    pub corrected_equal: bool,
}

/// Verdict of the Gordon generating-function check at one truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GordonGfReport {
    /// Gordon level.
    pub k: i64,
    /// Gordon index, `1 <= i <= k`.
    pub i: i64,
    /// Truncation bound.
    pub delta: QuadInt,
    /// True iff the restricted product equals the product of the
    /// per-section sum sides.
    pub sides_equal: bool,
    /// True iff every downset coefficient of the product equals the
    /// independently counted number of difference-condition partitions.
    pub counting_bridge_equal: bool,
}

/// Verdict of the bivariate Sylvester expansion check over one
/// section: coefficients against both classical refinement counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterGfReport {
    /// The section generator.
    pub gamma: QuadInt,
    /// Truncation bound.
    pub delta: QuadInt,
    /// Cap on powers of the marker.
    pub a_cap: u16,
    /// True iff marker-graded coefficients count partitions into odd
    /// parts with a given number of distinct part sizes.
    pub odd_side_equal: bool,
    /// True iff they also count partitions into distinct parts with a
    /// given number of maximal runs.
    pub distinct_side_equal: bool,
}

/// Verdict of the mod-5 generating-function check at one truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPGfReport {
    /// Which residue pairing is used.
    pub variant: ShapeVariant,
    /// Truncation bound.
    pub delta: QuadInt,
    /// True iff the residue-restricted product equals the product of
    /// the per-section sum sides.
    pub sides_equal: bool,
    /// True iff every downset coefficient of the product equals the
    /// independently counted number of residue-restricted partitions.
    pub counting_bridge_equal: bool,
}

/// `1/(q; q)_n` over integer exponents, with factors outside the
/// truncation skipped (they are congruent to 1).
fn inverse_q_factorial(bound: i64, caps: &[u16], n: usize) -> Result<QSum<i64>, QSumError> {
    let mut acc = QSum::one(bound, caps.to_vec());
    for e in exponents_first_n(1i64, 1i64, &bound, n) {
        let factor = QSum::monomial(bound, caps.to_vec(), 1, e, &vec![0; caps.len()])?;
        acc = &acc * &factor.geom_inverse()?;
    }
    Ok(acc)
}

/// Compares the product `(at; q)_{n_bound+1} * prod_j 1/(1 - t q^j)`
/// against the two sum expansions in markers `a` and `t`.
pub fn cauchy_check(n_bound: i64, a_cap: u16, t_cap: u16) -> Result<CauchyReport, QSumError> {
    let caps = vec![a_cap, t_cap];
    let a = QSum::monomial(n_bound, caps.clone(), 1, 0i64, &[1, 0])?;
    let t = QSum::monomial(n_bound, caps.clone(), 1, 0i64, &[0, 1])?;

    let at = &a * &t;
    let all_exps: Vec<i64> = (0..=n_bound).collect();
    let mut product = pochhammer_s(&at, &all_exps)?;
    for j in 0..=n_bound {
        let tqj = &t * &QSum::monomial(n_bound, caps.clone(), 1, j, &[0, 0])?;
        product = &product * &tqj.geom_inverse()?;
    }

    let t_power = |n: u16| QSum::monomial(n_bound, caps.clone(), 1, 0i64, &[0, n]);
    let rising = |len: usize| -> Result<QSum<i64>, QSumError> {
        pochhammer_s(&a, &exponents_first_n(0i64, 1i64, &n_bound, len))
    };

    let mut standard = QSum::zero(n_bound, caps.clone());
    let mut printed = QSum::zero(n_bound, caps.clone());
    for n in 0..=t_cap {
        let tail = &t_power(n)? * &inverse_q_factorial(n_bound, &caps, n as usize)?;
        standard = &standard + &(&rising(n as usize)? * &tail);
        printed = &printed + &(&rising((n as usize).saturating_sub(1))? * &tail);
    }

    Ok(CauchyReport {
        n_bound,
        a_cap,
        t_cap,
        printed_equal: printed == product,
        standard_equal: standard == product,
    })
}

/// Compares the sum `sum_n (a; q)_n q^(n(n+1)/2) / (q; q)_n` against
/// the products `(aq; q^2)_inf (q; q)_inf` (printed verdict) and
/// `(aq; q^2)_inf (-q; q)_inf` (corrected verdict) over integer
/// exponents `0..=n_bound`.
pub fn leveque_check(n_bound: i64, a_cap: u16) -> Result<LeVequeReport, QSumError> {
    let caps = vec![a_cap];
    let a = QSum::monomial(n_bound, caps.clone(), 1, 0i64, &[1])?;
    let q1 = QSum::monomial(n_bound, caps.clone(), 1, 1i64, &[0])?;

    let mut sum = QSum::zero(n_bound, caps.clone());
    let mut n = 0i64;
    while n * (n + 1) / 2 <= n_bound {
        let rising = pochhammer_s(&a, &exponents_first_n(0i64, 1i64, &n_bound, n as usize))?;
        let triangular = QSum::monomial(n_bound, caps.clone(), 1, n * (n + 1) / 2, &[0])?;
        let term = &(&rising * &triangular) * &inverse_q_factorial(n_bound, &caps, n as usize)?;
        sum = &sum + &term;
        n += 1;
    }

    let aq = &a * &q1;
    let even_exps: Vec<i64> = (0..=n_bound).step_by(2).collect();
    let all_exps: Vec<i64> = (0..=n_bound).collect();
    let f_aq = pochhammer_s(&aq, &even_exps)?;
    let f_q = pochhammer_s(&q1, &all_exps)?;
    let f_mq = pochhammer_s(&q1.scaled(-1), &all_exps)?;

    Ok(LeVequeReport {
        truncation: format!("n <= {n_bound}"),
        a_cap,
        printed_equal: &f_aq * &f_q == sum,
        corrected_equal: &f_aq * &f_mq == sum,
    })
}

/// The field lift of the triangular-number sum check: the marker `a`
/// stays scalar while exponents run over the downset of `delta`, one
/// sum/product pair per primitive section, all multiplied together.
pub fn leveque_lifted_check(delta: &QuadInt, a_cap: u16) -> Result<LeVequeReport, QSumError> {
    if !QuadInt::valid_bound(delta) {
        return Err(QSumError::OutsideTruncation(delta.to_string()));
    }
    let caps = vec![a_cap];
    let zero = delta.ctx().zero();
    let one = QSum::one(*delta, caps.clone());
    let a = QSum::monomial(*delta, caps.clone(), 1, zero, &[1])?;

    let mut printed = one.clone();
    let mut corrected = one.clone();
    let mut sum_side = one.clone();
    for gamma in delta.primitives_up_to()? {
        let odd_multiples = exponents_from(gamma, gamma.plus(&gamma), delta);
        let all_multiples = exponents_from(gamma, gamma, delta);
        let f_aq = pochhammer_s(&a, &odd_multiples)?;
        let f_q = pochhammer_s(&one, &all_multiples)?;
        let f_mq = pochhammer_s(&QSum::constant(*delta, caps.clone(), -1), &all_multiples)?;

        let mut section_sum = QSum::zero(*delta, caps.clone());
        let trace_bound = delta.trace() / gamma.trace();
        let mut n = 0i64;
        while n * (n + 1) / 2 <= trace_bound {
            let triangular = n * (n + 1) / 2;
            let exp = if triangular == 0 {
                zero
            } else {
                triangular * gamma
            };
            if exp.within(delta) {
                let mut term =
                    pochhammer_s(&a, &exponents_first_n(zero, gamma, delta, n as usize))?;
                term = &term * &QSum::monomial(*delta, caps.clone(), 1, exp, &[0])?;
                for e in exponents_first_n(gamma, gamma, delta, n as usize) {
                    let factor = QSum::monomial(*delta, caps.clone(), 1, e, &[0])?;
                    term = &term * &factor.geom_inverse()?;
                }
                section_sum = &section_sum + &term;
            }
            n += 1;
        }

        printed = &(&printed * &f_aq) * &f_q;
        corrected = &(&corrected * &f_aq) * &f_mq;
        sum_side = &sum_side * &section_sum;
    }

    Ok(LeVequeReport {
        truncation: delta.to_string(),
        a_cap,
        printed_equal: printed == sum_side,
        corrected_equal: corrected == sum_side,
    })
}

/// Checks the Gordon identity at level `k`, index `i`: the scale-
/// restricted product against the product of per-section sum sides,
/// plus the counting bridge from product coefficients to partition
/// counts.
pub fn gordon_gf_check(delta: &QuadInt, k: i64, i: i64) -> Result<GordonGfReport, QSumError> {
    let product = gordon_product_side(k, i, delta)?;
    let mut sums = QSum::one(*delta, vec![]);
    for gamma in delta.primitives_up_to()? {
        sums = &sums * &gordon_sum_side(&gamma, k, i, delta)?;
    }
    let spec = ClassSpec::gordon(Side::A, k, i)?;
    let mut bridge = true;
    for e in delta.downset()? {
        if product.coefficient(&e, &[])? != count_for(&e, &spec)? {
            bridge = false;
        }
    }
    Ok(GordonGfReport {
        k,
        i,
        delta: *delta,
        sides_equal: product == sums,
        counting_bridge_equal: bridge,
    })
}

fn count_for(e: &QuadInt, spec: &ClassSpec) -> Result<i64, QSumError> {
    Ok(crate::partitions::count_class(e, spec)?)
}

/// Checks the mod-5 identity in the given variant: the residue-
/// restricted product against the per-section sum sides, plus the
/// counting bridge.
pub fn modp_gf_check(delta: &QuadInt, variant: ShapeVariant) -> Result<ModPGfReport, QSumError> {
    let residues = match variant {
        ShapeVariant::V1 => ResidueClass::OneFour,
        ShapeVariant::V2 => ResidueClass::TwoThree,
    };
    let product = modp_product_side(delta, residues)?;
    let sums = modp_sum_side(delta, variant)?;
    let spec = ClassSpec::modp_parts(delta.ctx(), residues)?;
    let mut bridge = true;
    for e in delta.downset()? {
        if product.coefficient(&e, &[])? != count_for(&e, &spec)? {
            bridge = false;
        }
    }
    Ok(ModPGfReport {
        variant,
        delta: *delta,
        sides_equal: product == sums,
        counting_bridge_equal: bridge,
    })
}

/// Checks the bivariate Sylvester series over the `gamma`-section:
/// its coefficient at `a^j q^(n gamma)` must equal both classical
/// refinement counters, with the `n = 0` and `j = 0` edges reducing
/// to the indicator of the empty partition.
pub fn sylvester_gf_check(
    gamma: &QuadInt,
    delta: &QuadInt,
    a_cap: u16,
) -> Result<SylvesterGfReport, QSumError> {
    let series = super::builders::sylvester_bivariate(gamma, delta, a_cap)?;
    let zero = delta.ctx().zero();
    let mut odd_ok = true;
    let mut distinct_ok = true;
    let mut n = 0i64;
    loop {
        let e = if n == 0 { zero } else { n * *gamma };
        if !e.within(delta) {
            break;
        }
        for j in 0..=a_cap {
            let got = series.coefficient(&e, &[j])?;
            let (want_odd, want_distinct) = if n == 0 || j == 0 {
                let edge = i64::from(n == 0 && j == 0);
                (edge, edge)
            } else {
                (
                    classical::sylvester_odd_distinct(n, j as i64),
                    classical::sylvester_distinct_runs(n, j as i64),
                )
            };
            if got != want_odd {
                odd_ok = false;
            }
            if got != want_distinct {
                distinct_ok = false;
            }
        }
        n += 1;
    }
    Ok(SylvesterGfReport {
        gamma: *gamma,
        delta: *delta,
        a_cap,
        odd_side_equal: odd_ok,
        distinct_side_equal: distinct_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::FieldCtx;

    fn f(d: i64) -> FieldCtx {
        FieldCtx::new(d).unwrap()
    }

    #[test]
    fn cauchy_standard_holds_printed_fails() {
        let report = cauchy_check(15, 5, 5).unwrap();
        assert!(report.standard_equal);
        assert!(!report.printed_equal);
    }

    #[test]
    fn leveque_corrected_holds_printed_fails() {
        let report = leveque_check(20, 6).unwrap();
        assert!(report.corrected_equal);
        assert!(!report.printed_equal);
    }

    #[test]
    fn leveque_lift_corrected_holds_printed_fails() {
        let cases = [
            (f(2).from_int(6), 4u16),
            (f(3).element(4, 2), 3),
            (f(5).from_int(4), 3),
        ];
        for (delta, cap) in cases {
            let report = leveque_lifted_check(&delta, cap).unwrap();
            assert!(report.corrected_equal, "delta = {delta}");
            assert!(!report.printed_equal, "delta = {delta}");
        }
    }

    #[test]
    fn gordon_gf_holds_at_small_truncations() {
        let delta = f(2).from_int(4);
        for (k, i) in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
            let report = gordon_gf_check(&delta, k, i).unwrap();
            assert!(report.sides_equal, "(k, i) = ({k}, {i})");
            assert!(report.counting_bridge_equal, "(k, i) = ({k}, {i})");
        }
        let delta3 = f(3).element(4, 2);
        for (k, i) in [(2, 2), (3, 1)] {
            let report = gordon_gf_check(&delta3, k, i).unwrap();
            assert!(report.sides_equal, "(k, i) = ({k}, {i})");
            assert!(report.counting_bridge_equal, "(k, i) = ({k}, {i})");
        }
    }

    #[test]
    fn modp_gf_holds_and_distinguishes_variants() {
        let ctx = f(5);
        let delta = ctx.from_int(5);
        let v1 = modp_gf_check(&delta, ShapeVariant::V1).unwrap();
        assert!(v1.sides_equal);
        assert!(v1.counting_bridge_equal);
        let v2 = modp_gf_check(&delta, ShapeVariant::V2).unwrap();
        assert!(v2.sides_equal);
        assert!(v2.counting_bridge_equal);
        let product = modp_product_side(&delta, ResidueClass::OneFour).unwrap();
        assert_eq!(product.coefficient(&delta, &[]).unwrap(), 5);
        let product2 = modp_product_side(&delta, ResidueClass::TwoThree).unwrap();
        assert_eq!(product2.coefficient(&delta, &[]).unwrap(), 1);
    }

    #[test]
    fn modp_gf_holds_for_second_split_field() {
        let delta = f(11).from_int(5);
        let report = modp_gf_check(&delta, ShapeVariant::V1).unwrap();
        assert!(report.sides_equal);
        assert!(report.counting_bridge_equal);
    }

    #[test]
    fn sylvester_gf_holds_on_rational_and_irrational_sections() {
        let ctx = f(2);
        let report = sylvester_gf_check(&ctx.from_int(1), &ctx.from_int(8), 4).unwrap();
        assert!(report.odd_side_equal);
        assert!(report.distinct_side_equal);
        let ctx3 = f(3);
        let eps = ctx3.element(2, 1);
        let report3 = sylvester_gf_check(&eps, &ctx3.element(12, 6), 3).unwrap();
        assert!(report3.odd_side_equal);
        assert!(report3.distinct_side_equal);
    }
}
