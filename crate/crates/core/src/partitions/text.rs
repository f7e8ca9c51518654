//! Text form for partitions.
//!
//! A partition prints as its exponent view, ascending:
//! `(1^7)(2+1*w@3^2)` means seven copies of 1 and two copies of
//! `2 + omega` in the field tagged `@3`. Multiplicities are always
//! written, so the form round-trips through [`Partition::parse_in`].

use std::fmt;

use crate::quadfield::{FieldCtx, FieldError, QuadInt};

use super::Partition;

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (part, mult) in self.exponents() {
            write!(f, "({}^{})", part.part_text(), mult)?;
        }
        Ok(())
    }
}

impl Partition {
    /// Parses the exponent-view text form in the given field. Bare
    /// integers are read as rational parts of that field.
    pub fn parse_in(ctx: FieldCtx, text: &str) -> Result<Partition, FieldError> {
        let bad = || FieldError::Parse(text.to_string());
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let mut parts: Vec<QuadInt> = Vec::new();
        for chunk in inner.split(")(") {
            let (base, mult) = chunk.rsplit_once('^').ok_or_else(bad)?;
            let mult: u32 = mult.parse().map_err(|_| bad())?;
            if mult == 0 {
                return Err(bad());
            }
            let part = QuadInt::parse_in(ctx, base)?;
            if !part.is_totally_positive() {
                return Err(FieldError::NotTotallyPositive(part.to_string()));
            }
            parts.extend(std::iter::repeat_n(part, mult as usize));
        }
        if parts.is_empty() {
            return Err(bad());
        }
        Ok(Partition::new(parts))
    }
}
