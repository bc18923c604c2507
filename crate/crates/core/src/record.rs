//! Pass/fail records produced by every identity check.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::exactnum::Rational;
use crate::padic::PadicNumber;
use crate::polyring::{BiPoly, Poly};

/// Named integer parameters of one identity instance, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Params(Vec<(&'static str, i64)>);

impl Params {
    pub fn new(entries: &[(&'static str, i64)]) -> Self {
        Params(entries.to_vec())
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }

    pub fn entries(&self) -> &[(&'static str, i64)] {
        &self.0
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.iter().map(|(_, v)| *v).collect()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Flat, serializable outcome of one identity instance.
///
/// `verdict` is `Pass` exactly when the canonical renderings `lhs` and `rhs`
/// coincide; `mismatch` names the first differing coefficient otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub family: String,
    pub params: Params,
    pub verdict: Verdict,
    pub lhs: String,
    pub rhs: String,
    pub mismatch: Option<String>,
}

impl VerificationRecord {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone)]
struct Part {
    label: Option<String>,
    lhs: String,
    rhs: String,
    mismatch: Option<String>,
}

/// Accumulates one or more side-by-side comparisons into a single record.
///
/// Multi-part checks render as `label: side ; label: side`, so the joined
/// strings agree iff every part agrees.
#[derive(Debug, Clone, Default)]
pub struct Comparison {
    parts: Vec<Part>,
}

impl Comparison {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, label: Option<&str>, lhs: String, rhs: String, mismatch: Option<String>) {
        let mismatch = match mismatch {
            Some(m) => Some(m),
            None if lhs != rhs => Some(format!("lhs {lhs}, rhs {rhs}")),
            None => None,
        };
        self.parts.push(Part {
            label: label.map(str::to_string),
            lhs,
            rhs,
            mismatch,
        });
    }

    pub fn poly(mut self, label: Option<&str>, lhs: &Poly, rhs: &Poly) -> Self {
        let m = lhs.first_mismatch(rhs).map(|m| m.to_string());
        self.push(label, lhs.to_string(), rhs.to_string(), m);
        self
    }

    pub fn bipoly(mut self, label: Option<&str>, lhs: &BiPoly, rhs: &BiPoly) -> Self {
        let m = lhs.first_mismatch(rhs).map(|m| m.to_string());
        self.push(label, lhs.to_string(), rhs.to_string(), m);
        self
    }

    pub fn value(mut self, label: Option<&str>, lhs: &Rational, rhs: &Rational) -> Self {
        let m = (lhs != rhs).then(|| format!("value: lhs {lhs}, rhs {rhs}"));
        self.push(label, lhs.to_string(), rhs.to_string(), m);
        self
    }

    /// p-adic values, rendered at the precision they share.
    pub fn padic(mut self, label: Option<&str>, lhs: &PadicNumber, rhs: &PadicNumber) -> Self {
        let (a, b) = lhs.common_form(rhs);
        self.push(label, a.to_string(), b.to_string(), None);
        self
    }

    /// Any two displayable values compared by their rendering.
    pub fn rendered(
        mut self,
        label: Option<&str>,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) -> Self {
        self.push(label, lhs.to_string(), rhs.to_string(), None);
        self
    }

    pub fn finish(self, family: impl Into<String>, params: Params) -> VerificationRecord {
        let join = |side: fn(&Part) -> &str| {
            self.parts
                .iter()
                .map(|p| match &p.label {
                    Some(l) => format!("{l}: {}", side(p)),
                    None => side(p).to_string(),
                })
                .collect::<Vec<_>>()
                .join(" ; ")
        };
        let lhs = join(|p| &p.lhs);
        let rhs = join(|p| &p.rhs);
        let mismatch = self.parts.iter().find_map(|p| {
            p.mismatch.as_ref().map(|m| match &p.label {
                Some(l) => format!("{l}: {m}"),
                None => m.clone(),
            })
        });
        let verdict = if lhs == rhs {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationRecord {
            family: family.into(),
            params,
            verdict,
            lhs,
            rhs,
            mismatch,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Var;

    #[test]
    fn single_part_record() {
        let a = Poly::from_coeffs(vec![Rational::from(-3), Rational::from(6)], Var::X);
        let b = Poly::from_coeffs(vec![Rational::from(-3), Rational::from(2)], Var::X);
        let rec = Comparison::new()
            .poly(None, &a, &b)
            .finish("demo", Params::new(&[("m", 2)]));
        assert_eq!(rec.verdict, Verdict::Fail);
        assert_eq!(rec.lhs, "6*x - 3");
        assert_eq!(
            rec.mismatch.as_deref(),
            Some("coefficient of x: lhs 6, rhs 2")
        );
        assert_eq!(rec.params.to_string(), "m=2");

        let ok = Comparison::new()
            .poly(None, &a, &a)
            .finish("demo", Params::default());
        assert!(ok.passed());
        assert_eq!(ok.mismatch, None);
    }

    #[test]
    fn multi_part_mismatch_names_failing_part() {
        let one = Rational::one();
        let rec = Comparison::new()
            .value(Some("first"), &one, &one)
            .value(Some("second"), &one, &Rational::zero())
            .finish("demo", Params::new(&[("n", 1), ("k", 0)]));
        assert!(!rec.passed());
        assert_eq!(rec.lhs, "first: 1 ; second: 1");
        assert_eq!(rec.rhs, "first: 1 ; second: 0");
        assert_eq!(rec.mismatch.as_deref(), Some("second: value: lhs 1, rhs 0"));
        assert_eq!(rec.params.to_string(), "n=1,k=0");
    }
}
