//! Quadratic integers of a real field `Q(sqrt(d))` in exact coordinates.
//!
//! Elements are stored as `x + y*w` over the integral basis `{1, w}`,
//! where `w = (1+sqrt(d))/2` when `d == 1 (mod 4)` and `w = sqrt(d)`
//! otherwise. All predicates (total positivity, the induced partial
//! order) reduce to integer comparisons through the doubled embedding
//! pair `(p, q)` with `alpha = (p + q*sqrt(d)) / 2`, so nothing here
//! ever touches floating point.
//!
//! The module provides:
//! * [`FieldCtx`] / [`QuadInt`] — field handle and element arithmetic;
//! * [`QuadInt::downset`] — every totally positive `alpha` with
//!   `alpha <= delta` in the total-positivity order, canonically sorted;
//! * [`RadialDecomposition`] — the unique `delta = scale * primitive`
//!   splitting with `scale = gcd` of the coordinates;
//! * [`PrimeAbove5`] — the residue map modulo a degree-one prime above
//!   5, when 5 splits or ramifies in the field.

mod prime;
mod text;

pub use prime::PrimeAbove5;

use std::cmp::Ordering;
use thiserror::Error;

/// Errors raised by field construction, element parsing, and the
/// enumeration entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    /// `d` must be at least 2 for a real quadratic field.
    #[error("d must be >= 2, got {0}")]
    DTooSmall(i64),
    /// `d` must be squarefree so that `{1, w}` is an integral basis.
    #[error("d must be squarefree, got {0}")]
    NotSquarefree(i64),
    /// The operation requires a totally positive element.
    #[error("element {0} is not totally positive")]
    NotTotallyPositive(String),
    /// 5 has no degree-one prime above it in this field.
    #[error("5 is inert in Q(sqrt({0})); no degree-one prime above 5")]
    Inert5(i64),
    /// The element text did not match `x+y*w@d` (or a bare integer where
    /// the field is known from context).
    #[error("cannot parse element from {0:?}")]
    Parse(String),
    /// An element text carried an explicit `@d` that contradicts the
    /// field it is being parsed into.
    #[error("element {text:?} names field d={found}, expected d={expected}")]
    FieldMismatch {
        text: String,
        found: i64,
        expected: i64,
    },
}

/// Which integral basis `{1, w}` the field uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// `w = sqrt(d)` (for `d == 2, 3 (mod 4)`).
    Plain,
    /// `w = (1 + sqrt(d)) / 2` (for `d == 1 (mod 4)`).
    Half,
}

/// A real quadratic field `Q(sqrt(d))` with `d >= 2` squarefree.
///
/// The context is tiny and `Copy`; every [`QuadInt`] carries one so that
/// elements are self-describing and mixing fields is caught early.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    d: i64,
    basis: BasisKind,
}

fn is_squarefree(d: i64) -> bool {
    let mut n = d;
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl FieldCtx {
    /// Builds the field context for `Q(sqrt(d))`.
    pub fn new(d: i64) -> Result<Self, FieldError> {
        if d < 2 {
            return Err(FieldError::DTooSmall(d));
        }
        if !is_squarefree(d) {
            return Err(FieldError::NotSquarefree(d));
        }
        let basis = if d % 4 == 1 {
            BasisKind::Half
        } else {
            BasisKind::Plain
        };
        Ok(FieldCtx { d, basis })
    }

    /// The squarefree radicand `d`.
    pub fn d(&self) -> i64 {
        self.d
    }

    /// The integral-basis convention in force.
    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    /// Human-readable description of the basis element `w`.
    pub fn omega_text(&self) -> String {
        match self.basis {
            BasisKind::Plain => format!("sqrt({})", self.d),
            BasisKind::Half => format!("(1+sqrt({}))/2", self.d),
        }
    }

    /// The zero element of the ring.
    pub fn zero(&self) -> QuadInt {
        QuadInt {
            ctx: *self,
            x: 0,
            y: 0,
        }
    }

    /// The rational integer `n` as an element.
    pub fn from_int(&self, n: i64) -> QuadInt {
        QuadInt {
            ctx: *self,
            x: n,
            y: 0,
        }
    }

    /// The element `x + y*w`.
    pub fn element(&self, x: i64, y: i64) -> QuadInt {
        QuadInt { ctx: *self, x, y }
    }

    /// Every totally positive element with trace at most `t`, in
    /// canonical order. This is the finite "trace box" used when a sweep
    /// wants all small targets rather than the downset of one bound.
    pub fn elements_with_trace_at_most(&self, t: i64) -> Vec<QuadInt> {
        let mut out = Vec::new();
        scan_box(*self, t, |cand| out.push(cand));
        out
    }
}

/// An element of the ring of integers of `Q(sqrt(d))`, stored as
/// `x + y*w` over the integral basis.
///
/// Equality, hashing and ordering are exact. The canonical order is
/// lexicographic on the doubled embedding pair `(p, q)` — i.e. by trace
/// first — which is the order every enumeration in this crate uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadInt {
    ctx: FieldCtx,
    x: i64,
    y: i64,
}

/// The unique splitting `delta = scale * primitive` of a totally
/// positive element, where `scale = gcd(x, y)` in coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadialDecomposition {
    /// The positive rational integer `gcd` of the coordinates.
    pub scale: i64,
    /// The primitive factor `delta / scale` (coordinate gcd 1).
    pub primitive: QuadInt,
}

fn gcd64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

impl QuadInt {
    /// The field this element lives in.
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Coordinate on `1`.
    pub fn x(&self) -> i64 {
        self.x
    }

    /// Coordinate on `w`.
    pub fn y(&self) -> i64 {
        self.y
    }

    /// The doubled embedding pair `(p, q)` with
    /// `alpha = (p + q*sqrt(d)) / 2`. For the half basis `p = 2x + y`,
    /// `q = y`; for the plain basis `p = 2x`, `q = 2y`.
    pub fn embedding_pair(&self) -> (i64, i64) {
        match self.ctx.basis {
            BasisKind::Half => (2 * self.x + self.y, self.y),
            BasisKind::Plain => (2 * self.x, 2 * self.y),
        }
    }

    /// Field trace `alpha + alpha'`, which equals `p`.
    pub fn trace(&self) -> i64 {
        self.embedding_pair().0
    }

    /// Field norm `alpha * alpha' = (p^2 - q^2 d) / 4`, always an
    /// integer for ring elements.
    pub fn norm(&self) -> i64 {
        let (p, q) = self.embedding_pair();
        let n = (p as i128 * p as i128 - q as i128 * q as i128 * self.ctx.d as i128) / 4;
        n as i64
    }

    /// True for the additive identity.
    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// True iff both real embeddings of the element are positive:
    /// `p > 0` and `p^2 > q^2 d`, checked in integers.
    pub fn is_totally_positive(&self) -> bool {
        let (p, q) = self.embedding_pair();
        p > 0 && (p as i128) * (p as i128) > (q as i128) * (q as i128) * self.ctx.d as i128
    }

    /// The partial order of the cone: `self <= other` iff
    /// `other - self` is zero or totally positive.
    pub fn precedes_eq(&self, other: &QuadInt) -> bool {
        let diff = *other - *self;
        diff.is_zero() || diff.is_totally_positive()
    }

    /// Strict form of [`QuadInt::precedes_eq`].
    pub fn precedes(&self, other: &QuadInt) -> bool {
        self != other && self.precedes_eq(other)
    }

    /// Scale of a nonzero element: the positive gcd of its coordinates.
    pub fn scale(&self) -> i64 {
        assert!(!self.is_zero(), "scale of zero is undefined");
        gcd64(self.x, self.y)
    }

    /// True iff the coordinate gcd is 1.
    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.scale() == 1
    }

    /// Splits a totally positive element into `scale * primitive`.
    pub fn radial_decompose(&self) -> Result<RadialDecomposition, FieldError> {
        if !self.is_totally_positive() {
            return Err(FieldError::NotTotallyPositive(self.to_string()));
        }
        let s = self.scale();
        Ok(RadialDecomposition {
            scale: s,
            primitive: QuadInt {
                ctx: self.ctx,
                x: self.x / s,
                y: self.y / s,
            },
        })
    }

    /// The primitive factor `self / scale` of a totally positive
    /// element.
    pub fn primitive_factor(&self) -> Result<QuadInt, FieldError> {
        Ok(self.radial_decompose()?.primitive)
    }

    /// Every totally positive `alpha` with `alpha <= self` in the cone
    /// order, in canonical `(p, q)` order. `self` is the last entry.
    ///
    /// The scan runs over the finite box `1 <= p <= trace(self)`,
    /// `q^2 d < p^2` with the basis parity constraint, then filters by
    /// the order predicate; the box is exactly the set of totally
    /// positive elements of bounded trace, so nothing is missed.
    pub fn downset(&self) -> Result<Vec<QuadInt>, FieldError> {
        if !self.is_totally_positive() {
            return Err(FieldError::NotTotallyPositive(self.to_string()));
        }
        let mut out = Vec::new();
        scan_box(self.ctx, self.trace(), |cand| {
            if cand.precedes_eq(self) {
                out.push(cand);
            }
        });
        debug_assert_eq!(out.last(), Some(self));
        Ok(out)
    }

    /// The primitive elements of [`QuadInt::downset`], in canonical
    /// order. These are the section generators `gamma` relevant below a
    /// bound.
    pub fn primitives_up_to(&self) -> Result<Vec<QuadInt>, FieldError> {
        Ok(self
            .downset()?
            .into_iter()
            .filter(QuadInt::is_primitive)
            .collect())
    }

    /// Canonical sort key: `(p, q)` of the embedding pair, with the
    /// radicand first so elements of different fields still order
    /// totally (they never meaningfully mix).
    fn sort_key(&self) -> (i64, i64, i64) {
        let (p, q) = self.embedding_pair();
        (self.ctx.d, p, q)
    }
}

/// Visits every totally positive element with trace at most `t`, in
/// canonical `(p, q)` order.
fn scan_box(ctx: FieldCtx, t: i64, mut visit: impl FnMut(QuadInt)) {
    let d = ctx.d;
    match ctx.basis {
        BasisKind::Plain => {
            // p = 2x, q = 2y: every x in 1..=t/2, |y| with y^2 d < x^2.
            for x in 1..=t / 2 {
                for y in -x..=x {
                    if (y as i128) * (y as i128) * d as i128 >= (x as i128) * (x as i128) {
                        continue;
                    }
                    visit(ctx.element(x, y));
                }
            }
        }
        BasisKind::Half => {
            // q == p (mod 2); x = (p - q)/2, y = q.
            for p in 1..=t {
                for q in (1 - p)..p {
                    if (q - p) % 2 != 0 {
                        continue;
                    }
                    if (q as i128) * (q as i128) * d as i128 >= (p as i128) * (p as i128) {
                        continue;
                    }
                    visit(ctx.element((p - q) / 2, q));
                }
            }
        }
    }
}

impl PartialOrd for QuadInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl std::ops::Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        assert_eq!(self.ctx, rhs.ctx, "elements of different fields");
        QuadInt {
            ctx: self.ctx,
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl std::ops::Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        assert_eq!(self.ctx, rhs.ctx, "elements of different fields");
        QuadInt {
            ctx: self.ctx,
            x: self.x - rhs.x,
            y: self.y - rhs.y,
        }
    }
}

impl std::ops::Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            ctx: self.ctx,
            x: -self.x,
            y: -self.y,
        }
    }
}

/// Scalar multiple `n * alpha`.
impl std::ops::Mul<QuadInt> for i64 {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        QuadInt {
            ctx: rhs.ctx,
            x: self * rhs.x,
            y: self * rhs.y,
        }
    }
}
