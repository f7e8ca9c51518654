//! Structured q-sum builders: Euler, Gordon, Sylvester, and mod-5
//! series over a field truncation.
//!
//! Each builder returns the truncated series directly; the identity
//! verdicts in [`super::checks`] compare pairs of them. The sum sides
//! follow the classical shapes with `q` replaced by `q^gamma` for a
//! primitive `gamma`; the product sides run over the whole downset of
//! the bound with scale or residue restrictions on the factors.

use crate::partitions::{ResidueClass, ShapeVariant};
use crate::quadfield::{PrimeAbove5, QuadInt};

use super::poch::{exponents_first_n, exponents_from};
use super::{Exponent, QSum, QSumError};

fn require_bound(delta: &QuadInt) -> Result<(), QSumError> {
    if QuadInt::valid_bound(delta) {
        Ok(())
    } else {
        Err(QSumError::OutsideTruncation(delta.to_string()))
    }
}

fn require_primitive(gamma: &QuadInt) -> Result<(), QSumError> {
    if gamma.is_totally_positive() && gamma.is_primitive() {
        Ok(())
    } else {
        Err(QSumError::NotPrimitive(gamma.to_string()))
    }
}

fn require_gordon_params(k: i64, i: i64) -> Result<(), QSumError> {
    if k >= 2 && (1..=k).contains(&i) {
        Ok(())
    } else {
        Err(QSumError::GordonParams { k, i })
    }
}

/// `1/(1 - q^e)` as a truncated series.
fn inverse_factor(delta: &QuadInt, e: QuadInt) -> Result<QSum<QuadInt>, QSumError> {
    QSum::monomial(*delta, vec![], 1, e, &[])?.geom_inverse()
}

/// The Euler product `prod over e <= delta of 1/(1 - q^e)`: the
/// partition generating function of the field, truncated.
pub fn euler_product(delta: &QuadInt) -> Result<QSum<QuadInt>, QSumError> {
    require_bound(delta)?;
    let mut acc = QSum::one(*delta, vec![]);
    for e in delta.downset()? {
        acc = &acc * &inverse_factor(delta, e)?;
    }
    Ok(acc)
}

/// The Gordon product side: `prod 1/(1 - q^e)` over the downset
/// elements whose scale avoids `0, i, -i` mod `2k + 1`.
pub fn gordon_product_side(k: i64, i: i64, delta: &QuadInt) -> Result<QSum<QuadInt>, QSumError> {
    require_gordon_params(k, i)?;
    require_bound(delta)?;
    let m = 2 * k + 1;
    let banned = [0, i.rem_euclid(m), (-i).rem_euclid(m)];
    let mut acc = QSum::one(*delta, vec![]);
    for e in delta.downset()? {
        if banned.contains(&e.scale().rem_euclid(m)) {
            continue;
        }
        acc = &acc * &inverse_factor(delta, e)?;
    }
    Ok(acc)
}

/// Builds the Gordon sum side over one section: the sum over tuples
/// `(n_1, ..., n_{k-1}) >= 0` of
/// `q^(E * gamma) / ((q^gamma)_{n_1} ... (q^gamma)_{n_{k-1}})` with
/// `E = N_1^2 + ... + N_{k-1}^2 + N_i + ... + N_{k-1}` and
/// `N_j = n_j + ... + n_{k-1}`, truncated below `delta`.
struct GordonSum {
    gamma: QuadInt,
    delta: QuadInt,
    k: usize,
    i: usize,
    trace_bound: i64,
    tuple: Vec<i64>,
    inv_cache: Vec<Option<QSum<QuadInt>>>,
    acc: QSum<QuadInt>,
}

impl GordonSum {
    /// The exponent multiplier `E` of the current tuple.
    fn exponent_of_tuple(&self) -> i64 {
        let len = self.tuple.len();
        let mut e = 0i64;
        let mut suffix = 0i64;
        for j in (0..len).rev() {
            suffix += self.tuple[j];
            e += suffix * suffix;
            if j + 1 >= self.i {
                e += suffix;
            }
        }
        e
    }

    /// `1/((q^gamma; q^gamma)_n)`, cached; factors outside the
    /// truncation are congruent to 1 and skipped.
    fn inverse_pochhammer(&mut self, n: i64) -> Result<QSum<QuadInt>, QSumError> {
        let n = n as usize;
        if self.inv_cache.len() <= n {
            self.inv_cache.resize(n + 1, None);
        }
        if let Some(cached) = &self.inv_cache[n] {
            return Ok(cached.clone());
        }
        let mut acc = QSum::one(self.delta, vec![]);
        for e in exponents_first_n(self.gamma, self.gamma, &self.delta, n) {
            acc = &acc * &inverse_factor(&self.delta, e)?;
        }
        self.inv_cache[n] = Some(acc.clone());
        Ok(acc)
    }

    /// Depth-first sweep over tuples; positions past `pos` are zero on
    /// entry, so the current exponent is the minimum for this prefix.
    fn sweep(&mut self, pos: usize) -> Result<(), QSumError> {
        if pos == self.k - 1 {
            let e_mult = self.exponent_of_tuple();
            if e_mult > self.trace_bound {
                return Ok(());
            }
            let exp = if e_mult == 0 {
                self.delta.ctx().zero()
            } else {
                e_mult * self.gamma
            };
            if !exp.within(&self.delta) {
                return Ok(());
            }
            let mut term = QSum::monomial(self.delta, vec![], 1, exp, &[])?;
            for slot in 0..self.tuple.len() {
                let n = self.tuple[slot];
                term = &term * &self.inverse_pochhammer(n)?;
            }
            self.acc = &self.acc + &term;
            return Ok(());
        }
        let mut n = 0i64;
        loop {
            self.tuple[pos] = n;
            if self.exponent_of_tuple() > self.trace_bound {
                self.tuple[pos] = 0;
                return Ok(());
            }
            self.sweep(pos + 1)?;
            n += 1;
        }
    }
}

/// The Gordon sum side over the `gamma`-section at truncation `delta`.
pub fn gordon_sum_side(
    gamma: &QuadInt,
    k: i64,
    i: i64,
    delta: &QuadInt,
) -> Result<QSum<QuadInt>, QSumError> {
    require_gordon_params(k, i)?;
    require_primitive(gamma)?;
    require_bound(delta)?;
    let mut builder = GordonSum {
        gamma: *gamma,
        delta: *delta,
        k: k as usize,
        i: i as usize,
        trace_bound: delta.trace() / gamma.trace(),
        tuple: vec![0; (k - 1) as usize],
        inv_cache: Vec::new(),
        acc: QSum::zero(*delta, vec![]),
    };
    builder.sweep(0)?;
    Ok(builder.acc)
}

/// The mod-5 multiplicative product side: `prod 1/(1 - q^e)` over
/// downset elements whose residue under the prime above 5 lies in the
/// given class.
pub fn modp_product_side(
    delta: &QuadInt,
    residues: ResidueClass,
) -> Result<QSum<QuadInt>, QSumError> {
    require_bound(delta)?;
    let prime = PrimeAbove5::find(delta.ctx())?;
    let allowed = residues.residues();
    let mut acc = QSum::one(*delta, vec![]);
    for e in delta.downset()? {
        if allowed.contains(&prime.residue(&e)) {
            acc = &acc * &inverse_factor(delta, e)?;
        }
    }
    Ok(acc)
}

/// The mod-5 sum side: over each primitive with nonzero residue, the
/// level-2 Gordon sum with index 2 where a scale-1 part is permitted
/// and index 1 where it is banned, per the variant's pairing.
pub fn modp_sum_side(delta: &QuadInt, variant: ShapeVariant) -> Result<QSum<QuadInt>, QSumError> {
    require_bound(delta)?;
    let prime = PrimeAbove5::find(delta.ctx())?;
    let mut acc = QSum::one(*delta, vec![]);
    for gamma in delta.primitives_up_to()? {
        let r = prime.residue(&gamma);
        if r == 0 {
            continue;
        }
        let ones_ok = !variant.banned_unit_residues().contains(&r);
        let i = if ones_ok { 2 } else { 1 };
        acc = &acc * &gordon_sum_side(&gamma, 2, i, delta)?;
    }
    Ok(acc)
}

/// The bivariate Sylvester series over one section:
/// `((1-a) q^gamma; q^(2 gamma))_inf * (-q^gamma; q^gamma)_inf`, whose
/// coefficient of `a^k q^(n gamma)` counts level-`k` partitions of `n`.
pub fn sylvester_bivariate(
    gamma: &QuadInt,
    delta: &QuadInt,
    a_cap: u16,
) -> Result<QSum<QuadInt>, QSumError> {
    require_primitive(gamma)?;
    require_bound(delta)?;
    let caps = vec![a_cap];
    let one = QSum::one(*delta, caps.clone());
    let a = QSum::monomial(*delta, caps.clone(), 1, delta.ctx().zero(), &[1])?;
    let one_minus_a = &one - &a;
    let odd_multiples = exponents_from(*gamma, gamma.plus(gamma), delta);
    let f1 = super::poch::pochhammer_s(&one_minus_a, &odd_multiples)?;
    let minus_one = QSum::constant(*delta, caps, -1);
    let all_multiples = exponents_from(*gamma, *gamma, delta);
    let f2 = super::poch::pochhammer_s(&minus_one, &all_multiples)?;
    Ok(&f1 * &f2)
}
