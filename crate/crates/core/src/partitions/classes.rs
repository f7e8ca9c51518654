//! Partition classes: specification, validation, and membership.
//!
//! A [`ClassSpec`] names one of the restricted classes whose counts
//! the library equates. Each class has an A-side (multiplicative /
//! residue form) and a B-side (shape / difference form); the sides are
//! separate specs so both can be counted independently.

use std::fmt;

use crate::quadfield::{FieldCtx, FieldError, PrimeAbove5, QuadInt};

use super::Partition;

/// Which side of an identity a class spec describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Multiplicative / residue-restriction form.
    A,
    /// Shape / difference-condition form.
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// Residue set mod 5 used by the multiplicative mod-5 classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidueClass {
    /// Residues `{1, 4}`.
    OneFour,
    /// Residues `{2, 3}`.
    TwoThree,
}

impl ResidueClass {
    /// The residues as digits.
    pub fn residues(self) -> [u8; 2] {
        match self {
            ResidueClass::OneFour => [1, 4],
            ResidueClass::TwoThree => [2, 3],
        }
    }
}

/// Variant selector for the shape-side mod-5 classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeVariant {
    /// Pairs with the `{1, 4}` multiplicative class: scale-1 parts may
    /// not sit over residues `{2, 3}`.
    V1,
    /// Pairs with the `{2, 3}` multiplicative class: scale-1 parts may
    /// not sit over residues `{1, 4}`.
    V2,
}

impl ShapeVariant {
    /// Residues a scale-1 part's primitive factor must avoid.
    pub fn banned_unit_residues(self) -> [u8; 2] {
        match self {
            ShapeVariant::V1 => [2, 3],
            ShapeVariant::V2 => [1, 4],
        }
    }
}

/// Errors from building or parsing a class spec.
#[derive(Debug, thiserror::Error)]
pub enum ClassError {
    /// The level parameter is out of range for the class.
    #[error("level k = {k} is out of range for {family}")]
    BadLevel {
        /// Family name for the message.
        family: &'static str,
        /// Offending level.
        k: i64,
    },
    /// The index parameter must satisfy `1 <= i <= k`.
    #[error("index i = {i} must lie in 1..=k (k = {k})")]
    BadIndex {
        /// Level.
        k: i64,
        /// Offending index.
        i: i64,
    },
    /// Unrecognized class text.
    #[error("cannot parse class spec {0:?}")]
    Parse(String),
    /// Field-level failure (mod-5 classes need a split prime).
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A restricted partition class over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    /// No restriction: all partitions.
    All,
    /// Sylvester classes at level `k`: side A is "odd scales, exactly
    /// `k` distinct parts"; side B is "distinct parts, exactly `k`
    /// runs of consecutive scales across all sections".
    Sylvester {
        /// Which side.
        side: Side,
        /// Level, `k >= 1`.
        k: i64,
    },
    /// Gordon classes at `(k, i)`: side A restricts scales to residues
    /// other than `0, i, -i` mod `2k + 1`; side B imposes the
    /// difference conditions per section with at most `i - 1` scale-1
    /// parts per section.
    Gordon {
        /// Which side.
        side: Side,
        /// Level, `k >= 2`.
        k: i64,
        /// Index, `1 <= i <= k`.
        i: i64,
    },
    /// Multiplicative mod-5 class: every part's residue under the
    /// prime above 5 lies in the given set.
    ModPParts {
        /// The split prime above 5.
        prime: PrimeAbove5,
        /// Allowed residues.
        residues: ResidueClass,
    },
    /// Shape-side mod-5 class: no primitive factor of residue 0,
    /// per-section scales distinct with gaps at least 2, and scale-1
    /// parts avoid the variant's banned residues.
    ModPShape {
        /// The split prime above 5.
        prime: PrimeAbove5,
        /// Variant selector.
        variant: ShapeVariant,
    },
}

impl ClassSpec {
    /// Sylvester class at level `k` (requires `k >= 1`).
    pub fn sylvester(side: Side, k: i64) -> Result<ClassSpec, ClassError> {
        if k < 1 {
            return Err(ClassError::BadLevel {
                family: "sylvester",
                k,
            });
        }
        Ok(ClassSpec::Sylvester { side, k })
    }

    /// Gordon class at `(k, i)` (requires `k >= 2`, `1 <= i <= k`).
    pub fn gordon(side: Side, k: i64, i: i64) -> Result<ClassSpec, ClassError> {
        if k < 2 {
            return Err(ClassError::BadLevel {
                family: "gordon",
                k,
            });
        }
        if i < 1 || i > k {
            return Err(ClassError::BadIndex { k, i });
        }
        Ok(ClassSpec::Gordon { side, k, i })
    }

    /// Multiplicative mod-5 class over `ctx` (requires 5 to split).
    pub fn modp_parts(ctx: FieldCtx, residues: ResidueClass) -> Result<ClassSpec, ClassError> {
        Ok(ClassSpec::ModPParts {
            prime: PrimeAbove5::find(ctx)?,
            residues,
        })
    }

    /// Shape-side mod-5 class over `ctx` (requires 5 to split).
    pub fn modp_shape(ctx: FieldCtx, variant: ShapeVariant) -> Result<ClassSpec, ClassError> {
        Ok(ClassSpec::ModPShape {
            prime: PrimeAbove5::find(ctx)?,
            variant,
        })
    }

    /// Parses the compact text form used by the command line:
    /// `all`, `sylA:k=3`, `sylB:k=3`, `gorA:k=2,i=1`, `gorB:k=2,i=2`,
    /// `modp:parts=14`, `modp:parts=23`, `modp:shape=1`, `modp:shape=2`.
    pub fn parse(text: &str, ctx: FieldCtx) -> Result<ClassSpec, ClassError> {
        let bad = || ClassError::Parse(text.to_string());
        let text = text.trim();
        if text == "all" {
            return Ok(ClassSpec::All);
        }
        let (head, args) = text.split_once(':').ok_or_else(bad)?;
        match head {
            "sylA" | "sylB" => {
                let side = if head == "sylA" { Side::A } else { Side::B };
                let k = args.strip_prefix("k=").ok_or_else(bad)?;
                let k: i64 = k.parse().map_err(|_| bad())?;
                ClassSpec::sylvester(side, k)
            }
            "gorA" | "gorB" => {
                let side = if head == "gorA" { Side::A } else { Side::B };
                let (ka, ia) = args.split_once(',').ok_or_else(bad)?;
                let k: i64 = ka
                    .strip_prefix("k=")
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?;
                let i: i64 = ia
                    .strip_prefix("i=")
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?;
                ClassSpec::gordon(side, k, i)
            }
            "modp" => match args {
                "parts=14" => ClassSpec::modp_parts(ctx, ResidueClass::OneFour),
                "parts=23" => ClassSpec::modp_parts(ctx, ResidueClass::TwoThree),
                "shape=1" => ClassSpec::modp_shape(ctx, ShapeVariant::V1),
                "shape=2" => ClassSpec::modp_shape(ctx, ShapeVariant::V2),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }

    /// True iff a single part may appear in a member partition. This
    /// is the pointwise restriction; shape conditions across parts are
    /// checked by [`ClassSpec::contains`].
    pub fn part_allowed(&self, part: &QuadInt) -> bool {
        if !part.is_totally_positive() {
            return false;
        }
        match self {
            ClassSpec::All => true,
            ClassSpec::Sylvester { side: Side::A, .. } => part.scale() % 2 == 1,
            ClassSpec::Sylvester { side: Side::B, .. } => true,
            ClassSpec::Gordon {
                side: Side::A,
                k,
                i,
                ..
            } => {
                let m = 2 * k + 1;
                let r = part.scale().rem_euclid(m);
                r != 0 && r != i.rem_euclid(m) && r != (-i).rem_euclid(m)
            }
            ClassSpec::Gordon { side: Side::B, .. } => true,
            ClassSpec::ModPParts { prime, residues } => {
                residues.residues().contains(&prime.residue(part))
            }
            ClassSpec::ModPShape { prime, variant } => {
                let gamma = part.primitive_factor().expect("part is totally positive");
                let r = prime.residue(&gamma);
                if r == 0 {
                    return false;
                }
                !(part.scale() == 1 && variant.banned_unit_residues().contains(&r))
            }
        }
    }

    /// Full membership test.
    pub fn contains(&self, partition: &Partition) -> bool {
        if !partition.parts().iter().all(|p| self.part_allowed(p)) {
            return false;
        }
        match self {
            ClassSpec::All
            | ClassSpec::Gordon { side: Side::A, .. }
            | ClassSpec::ModPParts { .. } => true,
            ClassSpec::Sylvester { side: Side::A, k } => partition.distinct_parts() as i64 == *k,
            ClassSpec::Sylvester { side: Side::B, k } => {
                let all_distinct = partition.parts().windows(2).all(|w| w[0] != w[1]);
                if !all_distinct {
                    return false;
                }
                let runs: i64 = partition.sections().iter().map(|b| b.runs()).sum();
                runs == *k
            }
            ClassSpec::Gordon {
                side: Side::B,
                k,
                i,
            } => {
                partition.sections().iter().all(|block| {
                    let b = &block.scales; // nonincreasing
                    let kk = *k as usize;
                    let diff_ok =
                        (0..b.len()).all(|j| j + kk > b.len() || b[j] - b[j + kk - 1] >= 2);
                    let ones = b.iter().filter(|&&s| s == 1).count() as i64;
                    diff_ok && ones < *i
                })
            }
            ClassSpec::ModPShape { .. } => partition.sections().iter().all(|block| {
                let b = &block.scales; // nonincreasing
                b.windows(2).all(|w| w[0] - w[1] >= 2)
            }),
        }
    }

    /// True for classes whose direct count needs no shape information
    /// (membership is exactly the pointwise filter).
    pub fn is_pointwise(&self) -> bool {
        matches!(
            self,
            ClassSpec::All | ClassSpec::Gordon { side: Side::A, .. } | ClassSpec::ModPParts { .. }
        )
    }

    /// True if member partitions must have all parts distinct; used to
    /// prune enumeration.
    pub(crate) fn requires_distinct_parts(&self) -> bool {
        matches!(
            self,
            ClassSpec::Sylvester { side: Side::B, .. } | ClassSpec::ModPShape { .. }
        )
    }

    /// Cap on the number of distinct parts, if the class imposes one.
    pub(crate) fn distinct_parts_cap(&self) -> Option<i64> {
        match self {
            ClassSpec::Sylvester { side: Side::A, k } => Some(*k),
            _ => None,
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::All => f.write_str("all"),
            ClassSpec::Sylvester { side, k } => write!(f, "syl{side}:k={k}"),
            ClassSpec::Gordon { side, k, i } => write!(f, "gor{side}:k={k},i={i}"),
            ClassSpec::ModPParts { residues, .. } => match residues {
                ResidueClass::OneFour => f.write_str("modp:parts=14"),
                ResidueClass::TwoThree => f.write_str("modp:parts=23"),
            },
            ClassSpec::ModPShape { variant, .. } => match variant {
                ShapeVariant::V1 => f.write_str("modp:shape=1"),
                ShapeVariant::V2 => f.write_str("modp:shape=2"),
            },
        }
    }
}
