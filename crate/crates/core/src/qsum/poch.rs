//! Pochhammer-style products and validated factor families.
//!
//! The products here all have the shape `prod over s in S of
//! (1 - a * q^s)` for a coefficient series `a` and a finite exponent
//! list `S`. A [`FactorFamily`] holds the expanded factors and
//! enforces the structural condition that makes truncated infinite
//! products meaningful: every factor must have constant term 1, so
//! that factors beyond the truncation (which would all be congruent
//! to 1) can be discarded without changing the result.

use super::{Exponent, QSum, QSumError};

/// The exponents `first, first+step, first+2*step, ...` for as long
/// as they survive the truncation. Requires a nonzero step; because
/// the order is translation compatible, once one multiple falls
/// outside the truncation all later ones do too.
pub fn exponents_from<E: Exponent>(first: E, step: E, bound: &E::Bound) -> Vec<E> {
    assert!(!step.is_zero_exp(), "progression step must be nonzero");
    let mut out = Vec::new();
    let mut e = first;
    while e.within(bound) {
        out.push(e);
        e = e.plus(&step);
    }
    out
}

/// The first `n` exponents of the progression, clipped to the
/// truncation. Clipping is harmless: a factor `1 - a q^s` with `s`
/// outside the truncation is congruent to 1.
pub fn exponents_first_n<E: Exponent>(first: E, step: E, bound: &E::Bound, n: usize) -> Vec<E> {
    assert!(!step.is_zero_exp(), "progression step must be nonzero");
    let mut out = Vec::new();
    let mut e = first;
    while out.len() < n && e.within(bound) {
        out.push(e);
        e = e.plus(&step);
    }
    out
}

/// An ordered list of series factors, each validated to have constant
/// term 1 so their product is a well-defined truncated product.
#[derive(Debug, Clone)]
pub struct FactorFamily<E: Exponent> {
    bound: E::Bound,
    caps: Vec<u16>,
    factors: Vec<QSum<E>>,
}

impl<E: Exponent> FactorFamily<E> {
    /// Validates and stores the factors. Every factor must share the
    /// truncation and have constant term exactly 1.
    pub fn new(
        bound: E::Bound,
        caps: Vec<u16>,
        factors: Vec<QSum<E>>,
    ) -> Result<FactorFamily<E>, QSumError> {
        for (index, factor) in factors.iter().enumerate() {
            assert!(*factor.bound() == bound, "factor truncation differs");
            assert!(factor.caps() == caps, "factor marker caps differ");
            let got = factor.constant_term();
            if got != 1 {
                return Err(QSumError::FactorConstantTerm { index, got });
            }
        }
        Ok(FactorFamily {
            bound,
            caps,
            factors,
        })
    }

    /// The validated factors, in order.
    pub fn factors(&self) -> &[QSum<E>] {
        &self.factors
    }

    /// Number of factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// True iff the family is empty (its product is 1).
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The product of all factors.
    pub fn product(&self) -> QSum<E> {
        let mut acc = QSum::one(self.bound, self.caps.clone());
        for factor in &self.factors {
            acc = &acc * factor;
        }
        acc
    }
}

/// The product `prod over s in S of (1 - a_series * q^s)`, validated
/// as a factor family. Errors if an exponent in `S` lies outside the
/// truncation or if some factor fails the constant-term condition
/// (which happens exactly when `a_series` has a nonzero constant term
/// and `S` contains the zero exponent).
pub fn pochhammer_s<E: Exponent>(a_series: &QSum<E>, s: &[E]) -> Result<QSum<E>, QSumError> {
    let bound = *a_series.bound();
    let caps = a_series.caps().to_vec();
    let one = QSum::one(bound, caps.clone());
    let zeros = vec![0u16; caps.len()];
    let mut factors = Vec::with_capacity(s.len());
    for &e in s {
        let qe = QSum::monomial(bound, caps.clone(), 1, e, &zeros)?;
        factors.push(&one - &(a_series * &qe));
    }
    FactorFamily::new(bound, caps, factors).map(|family| family.product())
}
