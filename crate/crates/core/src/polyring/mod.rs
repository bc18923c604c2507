//! Exact polynomial algebra over [`Rational`](crate::exactnum::Rational).
//!
//! [`Poly`] is a dense univariate polynomial, [`BiPoly`] a sparse polynomial
//! in an ordered pair of indeterminates. Both are kept in canonical form, so
//! structural equality is polynomial equality.

mod bivariate;
mod univariate;

use std::fmt;

use crate::exactnum::Rational;

pub use bivariate::BiPoly;
pub use univariate::Poly;

/// Name of an indeterminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(&'static str);

impl Var {
    pub const X: Var = Var("x");
    pub const Y: Var = Var("y");
    pub const T: Var = Var("t");

    pub const fn new(name: &'static str) -> Self {
        Var(name)
    }

    pub fn name(&self) -> &'static str {
        self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("indeterminate mismatch: {left} vs {right}")]
    VarMismatch { left: String, right: String },
    #[error("unknown indeterminate {0}")]
    UnknownVar(Var),
}

/// First differing coefficient between two canonical polynomials, scanning
/// in rendering order (highest term first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of {}: lhs {}, rhs {}",
            self.monomial, self.lhs, self.rhs
        )
    }
}

/// Renders `x^e` (`1` for `e == 0`, `x` for `e == 1`).
fn power_str(v: Var, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    }
}

/// Writes a sum of `(coefficient, monomial)` terms in canonical text form:
/// explicit ` + `/` - ` separators, unit coefficients elided.
fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, Option<String>)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let neg = c.is_negative();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let mag = c.abs();
        match mono {
            None => write!(f, "{mag}")?,
            Some(m) if mag.is_one() => f.write_str(&m)?,
            Some(m) => write!(f, "{mag}*{m}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
