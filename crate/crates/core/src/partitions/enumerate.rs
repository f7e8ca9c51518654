//! Depth-first enumeration of partitions.
//!
//! Parts are drawn from the candidate set below the target (its
//! downset), filtered pointwise by the class, and chosen in
//! nonincreasing order, so every multiset is produced exactly once and
//! already in canonical form. Cheap structural prunes (distinctness,
//! caps on distinct parts) cut the search for the shape-restricted
//! classes; the full membership test at each leaf keeps the result
//! correct regardless of how much was pruned.

use crate::quadfield::{FieldError, QuadInt};

use super::{require_tp, ClassSpec, Partition};

/// Iterator over the partitions of one target in a class, in
/// lexicographically decreasing canonical order.
pub struct PartitionIter {
    ground: Vec<QuadInt>,
    spec: ClassSpec,
    /// `(remaining, next candidate index, distinct parts so far)`.
    frames: Vec<(QuadInt, usize, i64)>,
    parts: Vec<QuadInt>,
    distinct_only: bool,
    distinct_cap: Option<i64>,
}

impl PartitionIter {
    fn new(delta: &QuadInt, ground: Vec<QuadInt>, spec: ClassSpec) -> PartitionIter {
        let distinct_only = spec.requires_distinct_parts();
        let distinct_cap = spec.distinct_parts_cap();
        PartitionIter {
            ground,
            spec,
            frames: vec![(*delta, 0, 0)],
            parts: Vec::new(),
            distinct_only,
            distinct_cap,
        }
    }

    fn backtrack(&mut self) {
        self.frames.pop();
        self.parts.pop();
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let &(rem, next, distinct) = self.frames.last()?;
            if rem.is_zero() {
                let candidate = Partition::from_sorted(self.parts.clone());
                self.backtrack();
                if self.spec.contains(&candidate) {
                    return Some(candidate);
                }
                continue;
            }
            // Advance this frame through the candidates.
            let mut chosen = None;
            for (i, cand) in self.ground.iter().enumerate().skip(next) {
                if !cand.precedes_eq(&rem) {
                    continue;
                }
                let is_new = self.parts.last() != Some(cand);
                let next_distinct = distinct + i64::from(is_new);
                if let Some(cap) = self.distinct_cap {
                    if next_distinct > cap {
                        continue;
                    }
                }
                chosen = Some((i, next_distinct));
                break;
            }
            match chosen {
                Some((i, next_distinct)) => {
                    let top = self.frames.last_mut().expect("frame present");
                    top.1 = i + 1;
                    let cand = self.ground[i];
                    self.parts.push(cand);
                    let child_start = if self.distinct_only { i + 1 } else { i };
                    self.frames.push((rem - cand, child_start, next_distinct));
                }
                None => {
                    self.frames.pop();
                    self.parts.pop();
                }
            }
        }
    }
}

/// Enumerates the partitions of `delta` lying in `spec`, largest-first.
pub fn enumerate_partitions(
    delta: &QuadInt,
    spec: &ClassSpec,
) -> Result<PartitionIter, FieldError> {
    require_tp(delta)?;
    let mut ground: Vec<QuadInt> = delta
        .downset()?
        .into_iter()
        .filter(|p| spec.part_allowed(p))
        .collect();
    ground.reverse();
    Ok(PartitionIter::new(delta, ground, spec.clone()))
}

/// Enumerates the partitions of `delta` into primitive parts.
pub fn primitive_partitions(delta: &QuadInt) -> Result<PartitionIter, FieldError> {
    require_tp(delta)?;
    let mut ground: Vec<QuadInt> = delta
        .downset()?
        .into_iter()
        .filter(|p| p.is_primitive())
        .collect();
    ground.reverse();
    Ok(PartitionIter::new(delta, ground, ClassSpec::All))
}
