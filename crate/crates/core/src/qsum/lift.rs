//! Lifting classical series into a field: the substitution
//! `q -> q^gamma` and products of lifted series over all primitives.
//!
//! A classical series in integer exponents maps onto the
//! `gamma`-section of a field by sending `q^n` to `q^(n*gamma)`.
//! Because distinct primitives generate disjoint sections, a product
//! of substituted series over several primitives never collides in
//! exponents, and multiplying the per-primitive lifts of a classical
//! identity yields its field version. Truncation commutes with the
//! substitution as long as the classical truncation is at least
//! `trace(bound) / trace(gamma)`, since every surviving field exponent
//! `n*gamma` has `n` below that quotient.

use crate::quadfield::QuadInt;

use super::poch::FactorFamily;
use super::{Exponent, QSum, QSumError};

/// Maps a classical series into the `gamma`-section below `delta`:
/// every term `c * q^n * markers` becomes `c * q^(n*gamma) * markers`,
/// with terms outside the truncation dropped.
pub fn substitute_scale(
    classical: &QSum<i64>,
    gamma: &QuadInt,
    delta: &QuadInt,
) -> Result<QSum<QuadInt>, QSumError> {
    if !gamma.is_totally_positive() || !gamma.is_primitive() {
        return Err(QSumError::NotPrimitive(gamma.to_string()));
    }
    if !QuadInt::valid_bound(delta) {
        return Err(QSumError::OutsideTruncation(delta.to_string()));
    }
    let mut out = QSum::zero(*delta, classical.caps().to_vec());
    let zero = delta.ctx().zero();
    for (&n, markers, c) in classical.terms() {
        let e = if n == 0 { zero } else { n * *gamma };
        out.accumulate(e, markers.to_vec(), c);
    }
    Ok(out)
}

/// The product over all primitives `gamma` below `delta` of the
/// substituted classical series `builder(gamma, n_bound)`, where
/// `n_bound = trace(delta) / trace(gamma)` is the classical truncation
/// that keeps the substitution exact. The substituted factors are
/// validated as a factor family (each must have constant term 1).
pub fn lift_product<F>(
    delta: &QuadInt,
    caps: Vec<u16>,
    mut builder: F,
) -> Result<QSum<QuadInt>, QSumError>
where
    F: FnMut(&QuadInt, i64) -> Result<QSum<i64>, QSumError>,
{
    let prims = delta.primitives_up_to()?;
    let mut factors = Vec::with_capacity(prims.len());
    for gamma in &prims {
        let n_bound = delta.trace() / gamma.trace();
        let classical = builder(gamma, n_bound)?;
        assert_eq!(
            classical.caps(),
            caps,
            "builder must produce series with the family's marker caps"
        );
        factors.push(substitute_scale(&classical, gamma, delta)?);
    }
    FactorFamily::new(*delta, caps, factors).map(|family| family.product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::count_partitions;
    use crate::qsum::poch::exponents_from;
    use crate::quadfield::FieldCtx;

    #[test]
    fn substitution_maps_sections() {
        let ctx = FieldCtx::new(3).unwrap();
        let eps = ctx.element(2, 1);
        let delta = ctx.element(8, 4); // 4 * eps
        let classical =
            &QSum::one(9i64, vec![]) + &QSum::monomial(9i64, vec![], 5, 3, &[]).unwrap();
        let lifted = substitute_scale(&classical, &eps, &delta).unwrap();
        assert_eq!(lifted.coefficient(&ctx.zero(), &[]).unwrap(), 1);
        assert_eq!(lifted.coefficient(&(3 * eps), &[]).unwrap(), 5);
        // exponents over other primitives never appear, and multiples
        // of eps absent from the classical series stay absent.
        assert_eq!(lifted.coefficient(&ctx.from_int(1), &[]).unwrap(), 0);
        assert_eq!(lifted.coefficient(&eps, &[]).unwrap(), 0);
    }

    #[test]
    fn substitution_rejects_imprimitive_base() {
        let ctx = FieldCtx::new(3).unwrap();
        let classical: QSum<i64> = QSum::one(4, vec![]);
        let err = substitute_scale(&classical, &ctx.from_int(2), &ctx.from_int(4));
        assert!(matches!(err, Err(QSumError::NotPrimitive(_))));
    }

    #[test]
    fn euler_lift_counts_partitions() {
        // builder(gamma) = truncated prod_n 1/(1 - q^n): the lifted
        // product is the partition generating function of the field.
        let ctx = FieldCtx::new(3).unwrap();
        let delta = ctx.element(4, 2);
        let lift = lift_product(&delta, vec![], |_, n_bound| {
            let mut acc = QSum::one(n_bound, vec![]);
            for s in exponents_from(1i64, 1, &n_bound) {
                let qs = QSum::monomial(n_bound, vec![], 1, s, &[])?;
                acc = &acc * &qs.geom_inverse()?;
            }
            Ok(acc)
        })
        .unwrap();
        for e in delta.downset().unwrap() {
            assert_eq!(
                lift.coefficient(&e, &[]).unwrap(),
                count_partitions(&e).unwrap(),
                "coefficient at {e}"
            );
        }
        assert_eq!(lift.constant_term(), 1);
    }
}
