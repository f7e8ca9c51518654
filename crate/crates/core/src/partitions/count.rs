//! Counting partitions: direct, by primitive factorization, and by
//! per-section classical counters.
//!
//! Every class count is available by two genuinely different routes:
//!
//! * **direct** — enumerate partitions of the target and test
//!   membership ([`count_class`]);
//! * **sectional** — enumerate partitions into primitive parts and
//!   weight each by classical integer-partition counters applied to
//!   the scale sums of its sections ([`count_class_via_sections`]).
//!
//! The unrestricted count likewise comes both from a memoized direct
//! recursion ([`count_partitions`]) and from the factorization route
//! ([`count_via_factorization`], which weights each primitive
//! partition by a product of ordinary partition numbers).
//! [`verify_identity`] runs all routes for an A/B class pair and
//! reports the four values.

use std::collections::HashMap;

use crate::quadfield::{FieldError, QuadInt};

use super::classical;
use super::{
    enumerate_partitions, require_tp, ClassError, ClassSpec, ResidueClass, ShapeVariant, Side,
};

/// Number of partitions of `delta`, by memoized recursion over the
/// downset.
pub fn count_partitions(delta: &QuadInt) -> Result<i64, FieldError> {
    require_tp(delta)?;
    let ground: Vec<QuadInt> = delta.downset()?.into_iter().rev().collect();
    let mut memo: HashMap<(i64, i64, usize), i64> = HashMap::new();
    Ok(count_rec(&ground, *delta, 0, &mut memo))
}

fn count_rec(
    ground: &[QuadInt],
    rem: QuadInt,
    idx: usize,
    memo: &mut HashMap<(i64, i64, usize), i64>,
) -> i64 {
    if rem.is_zero() {
        return 1;
    }
    let key = (rem.x(), rem.y(), idx);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut acc = 0i64;
    for j in idx..ground.len() {
        if ground[j].precedes_eq(&rem) {
            acc += count_rec(ground, rem - ground[j], j, memo);
        }
    }
    memo.insert(key, acc);
    acc
}

/// Number of partitions of `delta` via the factorization route: sum
/// over partitions into primitives of the product of ordinary
/// partition numbers of the section multiplicities.
pub fn count_via_factorization(delta: &QuadInt) -> Result<i64, FieldError> {
    require_tp(delta)?;
    let prims: Vec<QuadInt> = delta.primitives_up_to()?.into_iter().rev().collect();
    let mut memo: HashMap<(i64, i64, usize), i64> = HashMap::new();
    Ok(fact_rec(&prims, *delta, 0, &mut memo))
}

fn fact_rec(
    prims: &[QuadInt],
    rem: QuadInt,
    idx: usize,
    memo: &mut HashMap<(i64, i64, usize), i64>,
) -> i64 {
    if rem.is_zero() {
        return 1;
    }
    let key = (rem.x(), rem.y(), idx);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut acc = 0i64;
    for j in idx..prims.len() {
        let g = prims[j];
        let mut n = 1i64;
        loop {
            let scaled = n * g;
            if !scaled.precedes_eq(&rem) {
                break;
            }
            acc += classical::partition_count(n) * fact_rec(prims, rem - scaled, j + 1, memo);
            n += 1;
        }
    }
    memo.insert(key, acc);
    acc
}

/// Counts the partitions of `delta` in `spec` by direct enumeration.
pub fn count_class(delta: &QuadInt, spec: &ClassSpec) -> Result<i64, FieldError> {
    Ok(enumerate_partitions(delta, spec)?.count() as i64)
}

/// One section of a primitive partition: `(primitive, scale sum)`.
type SectionBlock = (QuadInt, i64);

/// Runs `f` on every partition of `rem` into primitive parts,
/// presented as [`SectionBlock`]s with distinct primitives.
fn for_each_primitive_partition(
    prims: &[QuadInt],
    rem: QuadInt,
    idx: usize,
    blocks: &mut Vec<SectionBlock>,
    f: &mut dyn FnMut(&[SectionBlock]),
) {
    if rem.is_zero() {
        f(blocks);
        return;
    }
    for j in idx..prims.len() {
        let g = prims[j];
        let mut n = 1i64;
        loop {
            let scaled = n * g;
            if !scaled.precedes_eq(&rem) {
                break;
            }
            blocks.push((g, n));
            for_each_primitive_partition(prims, rem - scaled, j + 1, blocks, f);
            blocks.pop();
            n += 1;
        }
    }
}

/// Sum over compositions `k = k_1 + ... + k_l` (each `k_h >= 1`) of
/// the product of `counter(n_h, k_h)` over the sections.
fn composition_sum(mults: &[i64], k: i64, counter: &mut dyn FnMut(i64, i64) -> i64) -> i64 {
    fn rec(
        mults: &[i64],
        idx: usize,
        k_left: i64,
        counter: &mut dyn FnMut(i64, i64) -> i64,
    ) -> i64 {
        if idx == mults.len() {
            return i64::from(k_left == 0);
        }
        let still_needed = (mults.len() - idx - 1) as i64;
        let mut acc = 0i64;
        for kh in 1..=(k_left - still_needed) {
            let c = counter(mults[idx], kh);
            if c != 0 {
                acc += c * rec(mults, idx + 1, k_left - kh, counter);
            }
        }
        acc
    }
    rec(mults, 0, k, counter)
}

/// Allowed scale residues mod 5 for a section over a primitive of
/// residue `r`, for the given multiplicative class.
fn scale_residues(r: u8, residues: ResidueClass) -> [u8; 2] {
    match (r, residues) {
        (1 | 4, ResidueClass::OneFour) | (2 | 3, ResidueClass::TwoThree) => [1, 4],
        (1 | 4, ResidueClass::TwoThree) | (2 | 3, ResidueClass::OneFour) => [2, 3],
        _ => unreachable!("residue 0 is handled by the caller"),
    }
}

/// Counts the partitions of `delta` in `spec` through the sectional
/// route: classical counters on scale sums, summed over partitions
/// into primitives. For [`ClassSpec::All`] this is the factorization
/// count.
pub fn count_class_via_sections(delta: &QuadInt, spec: &ClassSpec) -> Result<i64, FieldError> {
    require_tp(delta)?;
    if matches!(spec, ClassSpec::All) {
        return count_via_factorization(delta);
    }
    let prims: Vec<QuadInt> = delta.primitives_up_to()?.into_iter().rev().collect();
    let mut blocks: Vec<SectionBlock> = Vec::new();
    let mut total = 0i64;
    match spec {
        ClassSpec::All => unreachable!(),
        ClassSpec::Sylvester { side, k } => {
            let mut cache: HashMap<(i64, i64), i64> = HashMap::new();
            let mut counter = |n: i64, kh: i64| {
                *cache.entry((n, kh)).or_insert_with(|| match side {
                    Side::A => classical::sylvester_odd_distinct(n, kh),
                    Side::B => classical::sylvester_distinct_runs(n, kh),
                })
            };
            for_each_primitive_partition(&prims, *delta, 0, &mut blocks, &mut |blocks| {
                if blocks.len() as i64 > *k {
                    return;
                }
                let mults: Vec<i64> = blocks.iter().map(|b| b.1).collect();
                total += composition_sum(&mults, *k, &mut counter);
            });
        }
        ClassSpec::Gordon { side, k, i } => {
            let mut cache: HashMap<i64, i64> = HashMap::new();
            for_each_primitive_partition(&prims, *delta, 0, &mut blocks, &mut |blocks| {
                let mut w = 1i64;
                for &(_, n) in blocks {
                    let c = *cache.entry(n).or_insert_with(|| match side {
                        Side::A => classical::gordon_allowed_residues(n, *k, *i),
                        Side::B => classical::gordon_difference(n, *k, *i),
                    });
                    if c == 0 {
                        w = 0;
                        break;
                    }
                    w *= c;
                }
                total += w;
            });
        }
        ClassSpec::ModPParts { prime, residues } => {
            let mut cache: HashMap<(u8, i64), i64> = HashMap::new();
            for_each_primitive_partition(&prims, *delta, 0, &mut blocks, &mut |blocks| {
                let mut w = 1i64;
                for &(g, n) in blocks {
                    let r = prime.residue(&g);
                    if r == 0 {
                        w = 0;
                        break;
                    }
                    let set = scale_residues(r, *residues);
                    let c = *cache
                        .entry((set[0], n))
                        .or_insert_with(|| classical::parts_in_residues_mod5(n, &set));
                    if c == 0 {
                        w = 0;
                        break;
                    }
                    w *= c;
                }
                total += w;
            });
        }
        ClassSpec::ModPShape { prime, variant } => {
            let mut cache: HashMap<(bool, i64), i64> = HashMap::new();
            for_each_primitive_partition(&prims, *delta, 0, &mut blocks, &mut |blocks| {
                let mut w = 1i64;
                for &(g, n) in blocks {
                    let r = prime.residue(&g);
                    if r == 0 {
                        w = 0;
                        break;
                    }
                    let ones_ok = !variant.banned_unit_residues().contains(&r);
                    let c = *cache.entry((ones_ok, n)).or_insert_with(|| {
                        classical::gordon_difference(n, 2, if ones_ok { 2 } else { 1 })
                    });
                    if c == 0 {
                        w = 0;
                        break;
                    }
                    w *= c;
                }
                total += w;
            });
        }
    }
    Ok(total)
}

/// The identity families whose two sides the library can compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    /// Odd-distinct versus distinct-runs at level `k`.
    Sylvester {
        /// Level, `k >= 1`.
        k: i64,
    },
    /// Residue-avoidance versus difference conditions at `(k, i)`.
    Gordon {
        /// Level, `k >= 2`.
        k: i64,
        /// Index, `1 <= i <= k`.
        i: i64,
    },
    /// Mod-5 residue class versus gap-2 shape class.
    ModP {
        /// Which variant pairing.
        variant: ShapeVariant,
    },
}

/// All four counts for one identity at one target.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    /// The identity family and parameters.
    pub kind: IdentityKind,
    /// The target element.
    pub delta: QuadInt,
    /// The A-side class.
    pub a_spec: ClassSpec,
    /// The B-side class.
    pub b_spec: ClassSpec,
    /// A-side, direct enumeration.
    pub a_direct: i64,
    /// A-side, sectional route.
    pub a_sectional: i64,
    /// B-side, direct enumeration.
    pub b_direct: i64,
    /// B-side, sectional route.
    pub b_sectional: i64,
}

impl IdentityReport {
    /// True iff all four counts agree.
    pub fn holds(&self) -> bool {
        self.a_direct == self.a_sectional
            && self.a_direct == self.b_direct
            && self.a_direct == self.b_sectional
    }
}

/// Computes both sides of the identity at `delta` by both routes.
pub fn verify_identity(delta: &QuadInt, kind: IdentityKind) -> Result<IdentityReport, ClassError> {
    let ctx = delta.ctx();
    let (a_spec, b_spec) = match kind {
        IdentityKind::Sylvester { k } => (
            ClassSpec::sylvester(Side::A, k)?,
            ClassSpec::sylvester(Side::B, k)?,
        ),
        IdentityKind::Gordon { k, i } => (
            ClassSpec::gordon(Side::A, k, i)?,
            ClassSpec::gordon(Side::B, k, i)?,
        ),
        IdentityKind::ModP { variant } => {
            let residues = match variant {
                ShapeVariant::V1 => ResidueClass::OneFour,
                ShapeVariant::V2 => ResidueClass::TwoThree,
            };
            (
                ClassSpec::modp_parts(ctx, residues)?,
                ClassSpec::modp_shape(ctx, variant)?,
            )
        }
    };
    Ok(IdentityReport {
        kind,
        delta: *delta,
        a_direct: count_class(delta, &a_spec)?,
        a_sectional: count_class_via_sections(delta, &a_spec)?,
        b_direct: count_class(delta, &b_spec)?,
        b_sectional: count_class_via_sections(delta, &b_spec)?,
        a_spec,
        b_spec,
    })
}
