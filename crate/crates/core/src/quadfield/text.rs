//! Canonical text form for elements: `x+y*w@d` (for example
//! `21+7*w@3`, `3-1*w@5`, `0+1*w@5`). Printing and parsing round-trip
//! exactly; the `@d` suffix makes the form self-contained.

use super::{FieldCtx, FieldError, QuadInt};
use std::fmt;
use std::str::FromStr;

impl fmt::Display for QuadInt {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.y < 0 { '-' } else { '+' };
        write!(
            out,
            "{}{}{}*w@{}",
            self.x,
            sign,
            self.y.unsigned_abs(),
            self.ctx.d()
        )
    }
}

impl QuadInt {
    /// Compact form for use inside partition text: rational integers
    /// print as a bare integer, everything else as the full canonical
    /// form.
    pub fn part_text(&self) -> String {
        if self.y == 0 {
            format!("{}", self.x)
        } else {
            format!("{self}")
        }
    }

    /// Parses element text against a known field. Accepts the canonical
    /// `x+y*w@d` form (whose `@d` must agree with `ctx`) and, because
    /// the field is known, a bare rational integer like `7`.
    pub fn parse_in(ctx: FieldCtx, s: &str) -> Result<QuadInt, FieldError> {
        let s = s.trim();
        if let Ok(n) = s.parse::<i64>() {
            return Ok(ctx.from_int(n));
        }
        let q: QuadInt = s.parse()?;
        if q.ctx != ctx {
            return Err(FieldError::FieldMismatch {
                text: s.to_string(),
                found: q.ctx.d(),
                expected: ctx.d(),
            });
        }
        Ok(q)
    }
}

impl FromStr for QuadInt {
    type Err = FieldError;

    /// Parses the canonical form `x+y*w@d` / `x-y*w@d`.
    fn from_str(s: &str) -> Result<Self, FieldError> {
        let bad = || FieldError::Parse(s.to_string());
        let t = s.trim();
        let (coords, d_text) = t.split_once("*w@").ok_or_else(bad)?;
        let d: i64 = d_text.parse().map_err(|_| bad())?;
        // split "x+y" / "x-y" at the sign that separates the
        // coordinates: the last '+' or '-' not in position 0.
        let sep = coords
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .ok_or_else(bad)?;
        let (x_text, y_text) = (&coords[..sep.0], &coords[sep.0 + 1..]);
        let x: i64 = x_text.parse().map_err(|_| bad())?;
        let y_mag: i64 = y_text.parse().map_err(|_| bad())?;
        if y_mag < 0 {
            return Err(bad());
        }
        let y = if sep.1 == '-' { -y_mag } else { y_mag };
        let ctx = FieldCtx::new(d)?;
        Ok(ctx.element(x, y))
    }
}
