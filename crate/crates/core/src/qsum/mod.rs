//! Truncated formal q-sums.
//!
//! A [`QSum`] is a finitely supported integer coefficient map over
//! monomials `q^e * a^j * t^k * ...`, where the exponent `e` is either
//! a nonnegative integer (classical series) or a totally positive
//! element of a real quadratic field, and the optional marker
//! variables carry bounded degrees. Everything is computed in a
//! quotient: exponents outside the downset of the bound, or marker
//! powers above their caps, are dropped during multiplication. The
//! quotient is well defined because the order is translation
//! compatible: if `e + f` survives then so do `e` and `f`.
//!
//! Submodules build the structured series used by the identity checks:
//!
//! * [`poch`] — Pochhammer-style products `prod (1 - a q^s)` with the
//!   factor-family validation (every factor must have constant term 1);
//! * [`lift`] — the substitution `q -> q^gamma` and products of lifted
//!   classical series over all primitives below the bound;
//! * [`builders`] — Euler, Gordon, Sylvester, and mod-5 series;
//! * [`checks`] — two-sided identity verdicts with reports.

pub mod builders;
pub mod checks;
pub mod lift;
pub mod poch;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::partitions::ClassError;
use crate::quadfield::{FieldError, QuadInt};

pub use builders::{
    euler_product, gordon_product_side, gordon_sum_side, modp_product_side, modp_sum_side,
    sylvester_bivariate,
};
pub use checks::{
    cauchy_check, gordon_gf_check, leveque_check, leveque_lifted_check, modp_gf_check,
    sylvester_gf_check, CauchyReport, GordonGfReport, LeVequeReport, ModPGfReport,
    SylvesterGfReport,
};
pub use lift::{lift_product, substitute_scale};
pub use poch::{exponents_first_n, exponents_from, pochhammer_s, FactorFamily};

/// Errors from building or evaluating truncated q-sums.
#[derive(Debug, thiserror::Error)]
pub enum QSumError {
    /// An explicitly requested exponent lies outside the truncation.
    #[error("exponent {0} lies outside the truncation")]
    OutsideTruncation(String),
    /// A marker vector has the wrong number of entries.
    #[error("marker vector length {got} does not match the {want} marker(s) of the series")]
    MarkerArity {
        /// Entries supplied.
        got: usize,
        /// Markers of the series.
        want: usize,
    },
    /// An explicitly requested marker power exceeds its cap.
    #[error("marker {index} power {got} exceeds its cap {cap}")]
    MarkerCap {
        /// Marker index.
        index: usize,
        /// Requested power.
        got: u16,
        /// The cap.
        cap: u16,
    },
    /// Geometric expansion of `1/(1 - u)` requires `u` to have
    /// constant term 0.
    #[error("geometric series needs a vanishing constant term")]
    ConstantTermNotZero,
    /// A factor family contained a factor with constant term other
    /// than 1.
    #[error("factor {index} has constant term {got}; factor families require constant term 1")]
    FactorConstantTerm {
        /// Position in the family.
        index: usize,
        /// The offending constant term.
        got: i64,
    },
    /// A substitution or per-section builder was given a non-primitive
    /// base.
    #[error("{0} is not a primitive totally positive element")]
    NotPrimitive(String),
    /// Gordon parameters must satisfy `k >= 2` and `1 <= i <= k`.
    #[error("gordon parameters out of range: k = {k}, i = {i}")]
    GordonParams {
        /// Level.
        k: i64,
        /// Index.
        i: i64,
    },
    /// Field-level failure.
    #[error(transparent)]
    Field(#[from] FieldError),
    /// Class-level failure (mod-5 classes need a split prime).
    #[error(transparent)]
    Class(#[from] ClassError),
}

/// Exponent types a [`QSum`] can range over: nonnegative integers for
/// classical series, field elements for lifted ones.
pub trait Exponent: Copy + Ord + fmt::Debug + fmt::Display {
    /// The truncation bound for series over this exponent type.
    type Bound: Copy + Eq + fmt::Debug;

    /// Whether the bound itself is admissible.
    fn valid_bound(bound: &Self::Bound) -> bool;

    /// The zero exponent for series at this bound.
    fn zero_for(bound: &Self::Bound) -> Self;

    /// Exponent addition.
    fn plus(&self, other: &Self) -> Self;

    /// Whether this is the zero exponent.
    fn is_zero_exp(&self) -> bool;

    /// Whether `q^self` survives at this truncation.
    fn within(&self, bound: &Self::Bound) -> bool;
}

impl Exponent for i64 {
    type Bound = i64;

    fn valid_bound(bound: &i64) -> bool {
        *bound >= 0
    }

    fn zero_for(_: &i64) -> i64 {
        0
    }

    fn plus(&self, other: &i64) -> i64 {
        self + other
    }

    fn is_zero_exp(&self) -> bool {
        *self == 0
    }

    fn within(&self, bound: &i64) -> bool {
        *self >= 0 && *self <= *bound
    }
}

impl Exponent for QuadInt {
    type Bound = QuadInt;

    fn valid_bound(bound: &QuadInt) -> bool {
        bound.is_totally_positive()
    }

    fn zero_for(bound: &QuadInt) -> QuadInt {
        bound.ctx().zero()
    }

    fn plus(&self, other: &QuadInt) -> QuadInt {
        *self + *other
    }

    fn is_zero_exp(&self) -> bool {
        self.is_zero()
    }

    fn within(&self, bound: &QuadInt) -> bool {
        self.is_zero() || (self.is_totally_positive() && self.precedes_eq(bound))
    }
}

/// Human-readable name of the marker variable at `index`.
pub fn marker_name(index: usize) -> String {
    match index {
        0 => "a".to_string(),
        1 => "t".to_string(),
        _ => format!("m{index}"),
    }
}

/// A truncated formal q-sum: sparse integer coefficients, exponents
/// confined to the downset of the bound plus zero, marker powers
/// confined below their caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSum<E: Exponent> {
    bound: E::Bound,
    caps: Vec<u16>,
    terms: BTreeMap<(E, Vec<u16>), i64>,
}

impl<E: Exponent> QSum<E> {
    /// The zero series at the given truncation.
    pub fn zero(bound: E::Bound, caps: Vec<u16>) -> QSum<E> {
        assert!(E::valid_bound(&bound), "invalid truncation bound");
        QSum {
            bound,
            caps,
            terms: BTreeMap::new(),
        }
    }

    /// The constant series `c`.
    pub fn constant(bound: E::Bound, caps: Vec<u16>, c: i64) -> QSum<E> {
        let mut out = QSum::zero(bound, caps);
        if c != 0 {
            let zeros = vec![0u16; out.caps.len()];
            out.terms.insert((E::zero_for(&out.bound), zeros), c);
        }
        out
    }

    /// The constant series 1.
    pub fn one(bound: E::Bound, caps: Vec<u16>) -> QSum<E> {
        QSum::constant(bound, caps, 1)
    }

    /// The single term `c * q^e * markers`. Errors if the exponent or
    /// a marker power lies outside the truncation.
    pub fn monomial(
        bound: E::Bound,
        caps: Vec<u16>,
        c: i64,
        e: E,
        markers: &[u16],
    ) -> Result<QSum<E>, QSumError> {
        let mut out = QSum::zero(bound, caps);
        if markers.len() != out.caps.len() {
            return Err(QSumError::MarkerArity {
                got: markers.len(),
                want: out.caps.len(),
            });
        }
        for (index, (&got, &cap)) in markers.iter().zip(out.caps.iter()).enumerate() {
            if got > cap {
                return Err(QSumError::MarkerCap { index, got, cap });
            }
        }
        if !e.within(&out.bound) {
            return Err(QSumError::OutsideTruncation(e.to_string()));
        }
        if c != 0 {
            out.terms.insert((e, markers.to_vec()), c);
        }
        Ok(out)
    }

    /// The truncation bound.
    pub fn bound(&self) -> &E::Bound {
        &self.bound
    }

    /// The marker degree caps.
    pub fn caps(&self) -> &[u16] {
        &self.caps
    }

    /// True iff the series has no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&E, &[u16], i64)> {
        self.terms.iter().map(|((e, m), &c)| (e, m.as_slice(), c))
    }

    /// The coefficient of `q^e * markers`. Errors if the monomial is
    /// not representable at this truncation (so a zero return always
    /// means a genuine zero coefficient).
    pub fn coefficient(&self, e: &E, markers: &[u16]) -> Result<i64, QSumError> {
        if markers.len() != self.caps.len() {
            return Err(QSumError::MarkerArity {
                got: markers.len(),
                want: self.caps.len(),
            });
        }
        for (index, (&got, &cap)) in markers.iter().zip(self.caps.iter()).enumerate() {
            if got > cap {
                return Err(QSumError::MarkerCap { index, got, cap });
            }
        }
        if !e.within(&self.bound) {
            return Err(QSumError::OutsideTruncation(e.to_string()));
        }
        Ok(self
            .terms
            .get(&(*e, markers.to_vec()))
            .copied()
            .unwrap_or(0))
    }

    /// The coefficient of the fully trivial monomial (`q^0`, all
    /// marker powers zero).
    pub fn constant_term(&self) -> i64 {
        let zeros = vec![0u16; self.caps.len()];
        self.terms
            .get(&(E::zero_for(&self.bound), zeros))
            .copied()
            .unwrap_or(0)
    }

    /// The series multiplied by the integer `c`.
    pub fn scaled(&self, c: i64) -> QSum<E> {
        if c == 0 {
            return QSum::zero(self.bound, self.caps.clone());
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Accumulates one term, dropping it silently if truncated away
    /// and removing the key if the coefficient cancels.
    pub(crate) fn accumulate(&mut self, e: E, markers: Vec<u16>, c: i64) {
        if c == 0 || !e.within(&self.bound) {
            return;
        }
        debug_assert_eq!(markers.len(), self.caps.len());
        if markers
            .iter()
            .zip(self.caps.iter())
            .any(|(&m, &cap)| m > cap)
        {
            return;
        }
        let key = (e, markers);
        if let Some(v) = self.terms.get_mut(&key) {
            *v += c;
            if *v == 0 {
                self.terms.remove(&key);
            }
            return;
        }
        self.terms.insert(key, c);
    }

    /// Expands `1/(1 - self)` as the geometric series
    /// `1 + self + self^2 + ...`, which terminates at this truncation.
    /// Errors unless the constant term vanishes.
    pub fn geom_inverse(&self) -> Result<QSum<E>, QSumError> {
        if self.constant_term() != 0 {
            return Err(QSumError::ConstantTermNotZero);
        }
        let one = QSum::one(self.bound, self.caps.clone());
        let mut acc = one.clone();
        let mut pw = one;
        loop {
            pw = &pw * self;
            if pw.is_zero() {
                return Ok(acc);
            }
            acc = &acc + &pw;
        }
    }

    fn assert_compatible(&self, other: &QSum<E>) {
        assert!(self.bound == other.bound, "truncation bounds differ");
        assert!(self.caps == other.caps, "marker caps differ");
    }
}

impl<E: Exponent> Add<&QSum<E>> for &QSum<E> {
    type Output = QSum<E>;

    fn add(self, rhs: &QSum<E>) -> QSum<E> {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for ((e, m), &c) in rhs.terms.iter() {
            let entry = out.terms.entry((*e, m.clone())).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.terms.remove(&(*e, m.clone()));
            }
        }
        out
    }
}

impl<E: Exponent> Sub<&QSum<E>> for &QSum<E> {
    type Output = QSum<E>;

    fn sub(self, rhs: &QSum<E>) -> QSum<E> {
        self + &(-rhs)
    }
}

impl<E: Exponent> Neg for &QSum<E> {
    type Output = QSum<E>;

    fn neg(self) -> QSum<E> {
        self.scaled(-1)
    }
}

impl<E: Exponent> Mul<&QSum<E>> for &QSum<E> {
    type Output = QSum<E>;

    fn mul(self, rhs: &QSum<E>) -> QSum<E> {
        self.assert_compatible(rhs);
        let mut out = QSum::zero(self.bound, self.caps.clone());
        for ((e1, m1), &c1) in self.terms.iter() {
            for ((e2, m2), &c2) in rhs.terms.iter() {
                let e = e1.plus(e2);
                if !e.within(&self.bound) {
                    continue;
                }
                let mut m = m1.clone();
                let mut capped = false;
                for (slot, (&p2, &cap)) in m.iter_mut().zip(m2.iter().zip(self.caps.iter())) {
                    *slot += p2;
                    if *slot > cap {
                        capped = true;
                        break;
                    }
                }
                if capped {
                    continue;
                }
                let entry = out.terms.entry((e, m)).or_insert(0);
                *entry += c1 * c2;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }
}

impl<E: Exponent> fmt::Display for QSum<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, ((e, m), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{c}")?;
            if !e.is_zero_exp() {
                write!(f, " * q^({e})")?;
            }
            for (i, &p) in m.iter().enumerate() {
                if p == 1 {
                    write!(f, " * {}", marker_name(i))?;
                } else if p > 1 {
                    write!(f, " * {}^{}", marker_name(i), p)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::FieldCtx;

    fn f(d: i64) -> FieldCtx {
        FieldCtx::new(d).unwrap()
    }

    fn q_int(bound: i64, e: i64) -> QSum<i64> {
        QSum::monomial(bound, vec![], 1, e, &[]).unwrap()
    }

    #[test]
    fn truncated_products_over_a_field() {
        // d = 2, bound 2: q^1 * q^1 = q^2, q^1 * q^2 = 0.
        let ctx = f(2);
        let two = ctx.from_int(2);
        let q1 = QSum::monomial(two, vec![], 1, ctx.from_int(1), &[]).unwrap();
        let q2 = QSum::monomial(two, vec![], 1, two, &[]).unwrap();
        assert_eq!(&q1 * &q1, q2);
        assert!((&q1 * &q2).is_zero());
    }

    #[test]
    fn geometric_inverse_of_a_monomial() {
        let ctx = f(2);
        let four = ctx.from_int(4);
        let one_elt = ctx.from_int(1);
        let u = QSum::monomial(four, vec![], 1, one_elt, &[]).unwrap();
        let inv = u.geom_inverse().unwrap();
        // 1 + q + q^2 + q^3 + q^4 plus nothing else on the rational
        // line; irrational downset elements never appear.
        for n in 0..=4 {
            assert_eq!(inv.coefficient(&ctx.from_int(n), &[]).unwrap(), 1);
        }
        assert_eq!(
            inv.coefficient(&ctx.element(2, 1), &[]).unwrap(),
            0,
            "no irrational exponents from a rational seed"
        );
        // multiply-back: (1 - u) * inv == 1.
        let one = QSum::one(four, vec![]);
        assert_eq!(&(&one - &u) * &inv, one);
    }

    #[test]
    fn geometric_inverse_requires_zero_constant_term() {
        let one: QSum<i64> = QSum::one(5, vec![]);
        assert!(matches!(
            one.geom_inverse(),
            Err(QSumError::ConstantTermNotZero)
        ));
    }

    #[test]
    fn marker_caps_truncate_products_silently() {
        // caps a <= 2: a^2 * a = 0, but probing a^3 is an error.
        let a = QSum::monomial(10i64, vec![2], 1, 0, &[1]).unwrap();
        let a2 = &a * &a;
        assert_eq!(a2.coefficient(&0, &[2]).unwrap(), 1);
        assert!((&a2 * &a).is_zero());
        assert!(matches!(
            a2.coefficient(&0, &[3]),
            Err(QSumError::MarkerCap { .. })
        ));
        assert!(matches!(
            QSum::monomial(10i64, vec![2], 1, 0, &[3]),
            Err(QSumError::MarkerCap { .. })
        ));
        assert!(matches!(
            a2.coefficient(&0, &[]),
            Err(QSumError::MarkerArity { .. })
        ));
    }

    #[test]
    fn monomial_outside_truncation_is_an_error() {
        assert!(matches!(
            QSum::monomial(4i64, vec![], 1, 5, &[]),
            Err(QSumError::OutsideTruncation(_))
        ));
        let ctx = f(3);
        let delta = ctx.element(2, 1);
        assert!(matches!(
            QSum::monomial(delta, vec![], 1, ctx.from_int(1), &[]),
            Err(QSumError::OutsideTruncation(_))
        ));
    }

    #[test]
    fn ring_identities_smoke() {
        let bound = 8i64;
        let u = &q_int(bound, 1) + &q_int(bound, 3).scaled(-2);
        let v = &q_int(bound, 2) + &QSum::one(bound, vec![]);
        let w = q_int(bound, 5);
        assert_eq!(&u * &v, &v * &u);
        assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
        let one = QSum::one(bound, vec![]);
        assert_eq!(&u * &one, u);
    }

    #[test]
    fn display_is_line_per_term() {
        let ctx = f(3);
        let delta = ctx.element(4, 2);
        let eps = ctx.element(2, 1);
        let s = &QSum::constant(delta, vec![1, 0], 2)
            + &QSum::monomial(delta, vec![1, 0], -1, eps, &[1, 0]).unwrap();
        assert_eq!(s.to_string(), "2\n-1 * q^(2+1*w@3) * a");
        let z: QSum<i64> = QSum::zero(3, vec![]);
        assert_eq!(z.to_string(), "0");
    }
}
