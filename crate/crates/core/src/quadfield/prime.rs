//! The degree-one prime above 5 and its residue map.
//!
//! When the minimal polynomial of `w` has a root `r` modulo 5, the map
//! `x + y*w -> x + y*r (mod 5)` is a ring homomorphism onto `F_5` whose
//! kernel is a degree-one prime ideal above 5. When no root exists, 5
//! is inert and the construction fails with [`FieldError::Inert5`].

use super::{BasisKind, FieldCtx, FieldError, QuadInt};

/// A degree-one prime above 5, represented by the residue root `r` of
/// the minimal polynomial of `w` modulo 5 (the smallest root is chosen
/// so the reduction map is deterministic).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeAbove5 {
    ctx: FieldCtx,
    residue_root: u8,
}

impl PrimeAbove5 {
    /// Finds the degree-one prime above 5 in `ctx`, if one exists.
    ///
    /// For the plain basis the root solves `r^2 == d (mod 5)`; for the
    /// half basis it solves `r^2 - r - (d-1)/4 == 0 (mod 5)` (the
    /// minimal polynomial of `(1+sqrt(d))/2`).
    pub fn find(ctx: FieldCtx) -> Result<Self, FieldError> {
        let d = ctx.d();
        let root = (0u8..5).find(|&r| {
            let r = r as i64;
            match ctx.basis() {
                BasisKind::Plain => (r * r - d).rem_euclid(5) == 0,
                BasisKind::Half => (r * r - r - (d - 1) / 4).rem_euclid(5) == 0,
            }
        });
        match root {
            Some(residue_root) => Ok(PrimeAbove5 { ctx, residue_root }),
            None => Err(FieldError::Inert5(d)),
        }
    }

    /// The chosen root of the minimal polynomial of `w` modulo 5.
    pub fn residue_root(&self) -> u8 {
        self.residue_root
    }

    /// The field the prime lives over.
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Reduces an element modulo the prime: `x + y*w -> x + y*r` in
    /// `F_5`.
    pub fn residue(&self, alpha: &QuadInt) -> u8 {
        assert_eq!(alpha.ctx(), self.ctx, "element from a different field");
        (alpha.x() + alpha.y() * self.residue_root as i64).rem_euclid(5) as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(d: i64) -> FieldCtx {
        FieldCtx::new(d).unwrap()
    }

    #[test]
    fn split_and_inert_fields() {
        // d=5 (ramified): w = (1+sqrt5)/2, r^2 - r - 1 == 0 mod 5 -> r=3.
        assert_eq!(PrimeAbove5::find(f(5)).unwrap().residue_root(), 3);
        // d=11: r^2 == 11 == 1 mod 5 -> roots {1, 4}, smallest 1.
        assert_eq!(PrimeAbove5::find(f(11)).unwrap().residue_root(), 1);
        // d=2 and d=3 are non-residues mod 5: inert.
        assert_eq!(PrimeAbove5::find(f(2)).unwrap_err(), FieldError::Inert5(2));
        assert_eq!(PrimeAbove5::find(f(3)).unwrap_err(), FieldError::Inert5(3));
        // d=19: 19 == 4 mod 5 -> roots {2, 3}, smallest 2.
        assert_eq!(PrimeAbove5::find(f(19)).unwrap().residue_root(), 2);
    }

    #[test]
    fn residue_map_is_a_ring_hom() {
        let p = PrimeAbove5::find(f(5)).unwrap();
        // spot values: w -> 3, 2 -> 2, 1+w -> 4.
        assert_eq!(p.residue(&f(5).element(0, 1)), 3);
        assert_eq!(p.residue(&f(5).from_int(2)), 2);
        assert_eq!(p.residue(&f(5).element(1, 1)), 4);
        // additivity on a grid.
        for x1 in -3..4 {
            for y1 in -3..4 {
                for x2 in -3..4 {
                    let a = f(5).element(x1, y1);
                    let b = f(5).element(x2, 2);
                    assert_eq!(p.residue(&(a + b)), (p.residue(&a) + p.residue(&b)) % 5);
                }
            }
        }
    }

    #[test]
    fn residue_respects_scaling() {
        let p = PrimeAbove5::find(f(11)).unwrap();
        for n in 1..8 {
            let g = f(11).element(4, 1);
            assert_eq!(p.residue(&(n * g)), ((n as u8 % 5) * p.residue(&g)) % 5);
        }
    }
}
