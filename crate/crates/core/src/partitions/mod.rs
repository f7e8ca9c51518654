//! Partitions of totally positive quadratic integers.
//!
//! A partition of `delta` is a finite multiset of totally positive
//! elements summing to `delta`, kept in canonical nonincreasing order.
//! Grouping parts by their primitive factor gives the sectional
//! decomposition ([`Partition::sections`]): parts `n*gamma` of one
//! section behave exactly like the integer partition of their scales,
//! which is what every counting argument here exploits.
//!
//! The module provides:
//! * [`Partition`] — canonical form, sectional decomposition, primitive
//!   refinement, text round-trip;
//! * [`ClassSpec`] — the partition classes under study (Sylvester odd /
//!   distinct variants, Gordon difference classes, and the mod-5
//!   residue classes), with membership tests;
//! * [`enumerate_partitions`] — pruned depth-first enumeration;
//! * counting routines: direct memoized counting, the
//!   primitive-factorization route, per-class counting both directly
//!   and through classical per-section counters;
//! * [`verify_identity`] — the A-side/B-side verdicts with all four
//!   routes reported.

mod classes;
pub mod classical;
mod count;
mod enumerate;
mod text;

pub use classes::{ClassError, ClassSpec, ResidueClass, ShapeVariant, Side};
pub use count::{
    count_class, count_class_via_sections, count_partitions, count_via_factorization,
    verify_identity, IdentityKind, IdentityReport,
};
pub use enumerate::{enumerate_partitions, primitive_partitions, PartitionIter};

use crate::quadfield::{FieldCtx, FieldError, QuadInt};

/// A partition: a nonempty multiset of totally positive elements, in
/// canonical nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<QuadInt>,
}

/// One section of a partition: the parts sharing a primitive factor
/// `gamma`, recorded by their scales in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionBlock {
    /// The primitive generator of the section.
    pub gamma: QuadInt,
    /// Scales of the parts in this section, nonincreasing.
    pub scales: Vec<i64>,
}

impl SectionBlock {
    /// Number of maximal runs of consecutive integers among the
    /// distinct scales (e.g. `{4, 3, 1}` has two).
    pub fn runs(&self) -> i64 {
        let mut asc: Vec<i64> = self.scales.clone();
        asc.sort_unstable();
        asc.dedup();
        if asc.is_empty() {
            return 0;
        }
        1 + asc.windows(2).filter(|w| w[1] != w[0] + 1).count() as i64
    }
}

impl Partition {
    /// Builds a partition from parts in any order. Panics if `parts` is
    /// empty, mixes fields, or contains a non-totally-positive element.
    pub fn new(mut parts: Vec<QuadInt>) -> Partition {
        assert!(!parts.is_empty(), "a partition has at least one part");
        let ctx = parts[0].ctx();
        for p in &parts {
            assert_eq!(p.ctx(), ctx, "parts of different fields");
            assert!(p.is_totally_positive(), "part {p} is not totally positive");
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Internal: parts already nonincreasing and validated.
    pub(crate) fn from_sorted(parts: Vec<QuadInt>) -> Partition {
        debug_assert!(!parts.is_empty());
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// The parts, nonincreasing.
    pub fn parts(&self) -> &[QuadInt] {
        &self.parts
    }

    /// The field of the parts.
    pub fn ctx(&self) -> FieldCtx {
        self.parts[0].ctx()
    }

    /// The partitioned element: the sum of all parts.
    pub fn total(&self) -> QuadInt {
        let mut acc = self.parts[0];
        for p in &self.parts[1..] {
            acc = acc + *p;
        }
        acc
    }

    /// Distinct parts with multiplicities, ascending — the exponent
    /// view used by the text form.
    pub fn exponents(&self) -> Vec<(QuadInt, u32)> {
        let mut out: Vec<(QuadInt, u32)> = Vec::new();
        for p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if q == p => *m += 1,
                _ => out.push((*p, 1)),
            }
        }
        out
    }

    /// Sectional decomposition: blocks grouped by primitive factor,
    /// blocks ascending by `gamma`, scales nonincreasing inside each.
    pub fn sections(&self) -> Vec<SectionBlock> {
        let mut blocks: Vec<SectionBlock> = Vec::new();
        // parts are nonincreasing, so within one gamma the scales
        // arrive nonincreasing already; group via a sorted scan.
        let mut tagged: Vec<(QuadInt, i64)> = self
            .parts
            .iter()
            .map(|p| {
                let rd = p.radial_decompose().expect("parts are totally positive");
                (rd.primitive, rd.scale)
            })
            .collect();
        tagged.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        for (gamma, scale) in tagged {
            match blocks.last_mut() {
                Some(b) if b.gamma == gamma => b.scales.push(scale),
                _ => blocks.push(SectionBlock {
                    gamma,
                    scales: vec![scale],
                }),
            }
        }
        blocks
    }

    /// True iff every part lies in the `gamma`-section.
    pub fn is_sectional(&self, gamma: &QuadInt) -> bool {
        self.parts.iter().all(|p| {
            p.radial_decompose()
                .map(|rd| rd.primitive == *gamma)
                .unwrap_or(false)
        })
    }

    /// The primitive partition refining this one: every part `n*gamma`
    /// is split into `n` copies of `gamma`.
    pub fn primitive_refinement(&self) -> Partition {
        let mut parts = Vec::new();
        for block in self.sections() {
            let n: i64 = block.scales.iter().sum();
            parts.extend(std::iter::repeat_n(block.gamma, n as usize));
        }
        Partition::new(parts)
    }

    /// Number of distinct parts.
    pub fn distinct_parts(&self) -> usize {
        self.exponents().len()
    }
}

/// Checks that `delta` may be partitioned at all, normalizing the error
/// for the enumeration and counting entry points.
pub(crate) fn require_tp(delta: &QuadInt) -> Result<(), FieldError> {
    if delta.is_totally_positive() {
        Ok(())
    } else {
        Err(FieldError::NotTotallyPositive(delta.to_string()))
    }
}
