//! Exact partition arithmetic over real quadratic fields.
//!
//! This crate studies partitions of totally positive integers of
//! `Q(sqrt(d))`: decompositions into sums of totally positive parts,
//! organized by each part's primitive factor. It provides
//!
//! * [`quadfield`] — the ring of integers, the totally positive cone
//!   and its partial order, radial decomposition, and the split prime
//!   above 5;
//! * [`partitions`] — canonical partitions, the restricted classes
//!   (Sylvester, Gordon, mod-5), and counting by independent routes;
//! * [`qsum`] — truncated formal q-sums with field or integer
//!   exponents, the classical product/sum constructions lifted to each
//!   section, and term-by-term identity verdicts;
//! * [`par`] — order-preserving parallel evaluation of independent
//!   targets (rayon behind the `parallel` feature), bit-identical to
//!   sequential evaluation.
//!
//! Everything is exact `i64`/`i128` integer arithmetic; no floats are
//! involved anywhere, so all results are bit-reproducible.

pub mod par;
pub mod partitions;
pub mod qsum;
pub mod quadfield;

pub use par::Width;
pub use partitions::{
    count_class, count_class_via_sections, count_partitions, count_via_factorization,
    enumerate_partitions, primitive_partitions, verify_identity, ClassError, ClassSpec,
    IdentityKind, IdentityReport, Partition, PartitionIter, ResidueClass, SectionBlock,
    ShapeVariant, Side,
};
pub use qsum::{Exponent, FactorFamily, QSum, QSumError};
pub use quadfield::{BasisKind, FieldCtx, FieldError, PrimeAbove5, QuadInt, RadialDecomposition};
