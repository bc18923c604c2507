use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::univariate::falling_factorial;
use super::{power_str, write_terms, Mismatch, Poly, PolyError, Var};
use crate::exactnum::Rational;

/// Sparse polynomial in an ordered pair of indeterminates.
///
/// `terms` maps `(e1, e2)` to the coefficient of `v1^e1 * v2^e2` and never
/// stores a zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
    vars: (Var, Var),
}

impl BiPoly {
    pub fn zero(vars: (Var, Var)) -> Self {
        debug_assert_ne!(vars.0, vars.1);
        BiPoly {
            terms: BTreeMap::new(),
            vars,
        }
    }

    pub fn constant(c: Rational, vars: (Var, Var)) -> Self {
        Self::monomial(c, 0, 0, vars)
    }

    pub fn one(vars: (Var, Var)) -> Self {
        Self::constant(Rational::one(), vars)
    }

    pub fn monomial(c: Rational, e1: u32, e2: u32, vars: (Var, Var)) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert((e1, e2), c);
        }
        p
    }

    /// The indeterminate `which` as a polynomial.
    pub fn var(which: Var, vars: (Var, Var)) -> Result<Self, PolyError> {
        let p = Self::zero(vars);
        Ok(match p.index_of(which)? {
            0 => Self::monomial(Rational::one(), 1, 0, vars),
            _ => Self::monomial(Rational::one(), 0, 1, vars),
        })
    }

    /// `a*v1 + b*v2 + c`
    pub fn affine(a: Rational, b: Rational, c: Rational, vars: (Var, Var)) -> Self {
        let mut p = Self::zero(vars);
        for (k, v) in [((1, 0), a), ((0, 1), b), ((0, 0), c)] {
            if !v.is_zero() {
                p.terms.insert(k, v);
            }
        }
        p
    }

    /// Embeds a univariate polynomial whose indeterminate is one of `vars`.
    pub fn from_poly(p: &Poly, vars: (Var, Var)) -> Result<Self, PolyError> {
        let mut out = Self::zero(vars);
        let idx = out.index_of(p.var())?;
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let key = if idx == 0 {
                    (i as u32, 0)
                } else {
                    (0, i as u32)
                };
                out.terms.insert(key, c.clone());
            }
        }
        Ok(out)
    }

    /// `p(inner)` for a univariate `p`, regardless of `p`'s own indeterminate.
    pub fn compose_poly(p: &Poly, inner: &BiPoly) -> BiPoly {
        p.coeffs()
            .iter()
            .rev()
            .fold(BiPoly::zero(inner.vars), |acc, c| {
                &(&acc * inner) + &BiPoly::constant(c.clone(), inner.vars)
            })
    }

    /// Same coefficients over a different pair of indeterminates.
    pub fn rename(&self, vars: (Var, Var)) -> BiPoly {
        BiPoly {
            terms: self.terms.clone(),
            vars,
        }
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    /// Nonzero terms as `((e1, e2), coefficient)` in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e1: u32, e2: u32) -> Rational {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    fn index_of(&self, which: Var) -> Result<usize, PolyError> {
        if which == self.vars.0 {
            Ok(0)
        } else if which == self.vars.1 {
            Ok(1)
        } else {
            Err(PolyError::UnknownVar(which))
        }
    }

    fn check_vars(&self, other: &BiPoly) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VarMismatch {
                left: format!("({},{})", self.vars.0, self.vars.1),
                right: format!("({},{})", other.vars.0, other.vars.1),
            })
        }
    }

    fn from_map(mut terms: BTreeMap<(u32, u32), Rational>, vars: (Var, Var)) -> Self {
        terms.retain(|_, c| !c.is_zero());
        BiPoly { terms, vars }
    }

    pub fn checked_add(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            *terms.entry(*k).or_default() += c;
        }
        Ok(Self::from_map(terms, self.vars))
    }

    pub fn checked_sub(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        self.check_vars(other)?;
        let mut terms: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &other.terms {
                *terms.entry((a1 + b1, a2 + b2)).or_default() += ca * cb;
            }
        }
        Ok(Self::from_map(terms, self.vars))
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero(self.vars);
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
            vars: self.vars,
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut result = BiPoly::one(self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal `order`-th partial derivative in `which`.
    pub fn derivative(&self, which: Var, order: u32) -> Result<BiPoly, PolyError> {
        let idx = self.index_of(which)?;
        let mut terms = BTreeMap::new();
        for (&(e1, e2), c) in &self.terms {
            let e = if idx == 0 { e1 } else { e2 };
            if e < order {
                continue;
            }
            let key = if idx == 0 {
                (e1 - order, e2)
            } else {
                (e1, e2 - order)
            };
            terms.insert(key, c * &falling_factorial(e as u64, order as u64));
        }
        Ok(Self::from_map(terms, self.vars))
    }

    /// Replaces `which` by `replacement`, a polynomial in the same pair of
    /// indeterminates (e.g. `t -> t + 1`, `t -> -t`).
    pub fn substitute(&self, which: Var, replacement: &BiPoly) -> Result<BiPoly, PolyError> {
        let idx = self.index_of(which)?;
        self.check_vars(replacement)?;
        // group by the exponent of `which`
        let mut groups: BTreeMap<u32, BiPoly> = BTreeMap::new();
        for (&(e1, e2), c) in &self.terms {
            let (e, rest) = if idx == 0 {
                (e1, (0, e2))
            } else {
                (e2, (e1, 0))
            };
            groups
                .entry(e)
                .or_insert_with(|| BiPoly::zero(self.vars))
                .terms
                .insert(rest, c.clone());
        }
        let mut out = BiPoly::zero(self.vars);
        let mut power = BiPoly::one(self.vars);
        let mut at = 0;
        for (e, rest) in groups {
            while at < e {
                power = &power * replacement;
                at += 1;
            }
            out = &out + &(&rest * &power);
        }
        Ok(out)
    }

    /// Sets `which = value`, leaving a polynomial in the other indeterminate.
    pub fn eval_at(&self, which: Var, value: &Rational) -> Result<Poly, PolyError> {
        let idx = self.index_of(which)?;
        let other = if idx == 0 { self.vars.1 } else { self.vars.0 };
        let mut coeffs: Vec<Rational> = Vec::new();
        for (&(e1, e2), c) in &self.terms {
            let (e, keep) = if idx == 0 { (e1, e2) } else { (e2, e1) };
            let keep = keep as usize;
            if coeffs.len() <= keep {
                coeffs.resize(keep + 1, Rational::zero());
            }
            coeffs[keep] += c * &value.pow(e as i32).expect("nonnegative exponent");
        }
        Ok(Poly::from_coeffs(coeffs, other))
    }

    pub fn checked_eq(&self, other: &BiPoly) -> Result<bool, PolyError> {
        self.check_vars(other)?;
        Ok(self.terms == other.terms)
    }

    /// Exponent pairs in rendering order: total degree descending, then
    /// first exponent descending.
    fn render_order(&self) -> Vec<(u32, u32)> {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        keys
    }

    fn monomial_str(&self, (e1, e2): (u32, u32)) -> Option<String> {
        match (power_str(self.vars.0, e1), power_str(self.vars.1, e2)) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (Some(a), Some(b)) => Some(format!("{a}*{b}")),
        }
    }

    pub fn first_mismatch(&self, other: &BiPoly) -> Option<Mismatch> {
        let mut keys: Vec<_> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let (l, r) = (self.coeff(k.0, k.1), other.coeff(k.0, k.1));
            (l != r).then(|| Mismatch {
                monomial: self.monomial_str(k).unwrap_or_else(|| "1".into()),
                lhs: l,
                rhs: r,
            })
        })
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = self.render_order();
        write_terms(
            f,
            order
                .iter()
                .map(|k| (&self.terms[k], self.monomial_str(*k))),
        )
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{},{}]({})", self.vars.0, self.vars.1, self)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.checked_add(rhs).expect("bipoly add")
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self.checked_sub(rhs).expect("bipoly sub")
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        self.checked_mul(rhs).expect("bipoly mul")
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
            vars: self.vars,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TX: (Var, Var) = (Var::T, Var::X);

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn t() -> BiPoly {
        BiPoly::var(Var::T, TX).unwrap()
    }

    fn x() -> BiPoly {
        BiPoly::var(Var::X, TX).unwrap()
    }

    fn c(n: i64) -> BiPoly {
        BiPoly::constant(r(n), TX)
    }

    #[test]
    fn square_of_sum() {
        let s = &x() + &t();
        let expect = BiPoly::monomial(r(1), 2, 0, TX)
            .checked_add(&BiPoly::monomial(r(2), 1, 1, TX))
            .unwrap()
            .checked_add(&BiPoly::monomial(r(1), 0, 2, TX))
            .unwrap();
        assert_eq!(s.pow(2), expect);
        assert_eq!(s.pow(0), c(1));
    }

    #[test]
    fn substitution_at_zero() {
        // R(t;x) = (x+t)(x+t-1) at t = 0
        let s = &x() + &t();
        let rr = &s * &(&s - &c(1));
        let at0 = rr.eval_at(Var::T, &Rational::zero()).unwrap();
        let expect = Poly::from_coeffs(vec![r(0), r(-1), r(1)], Var::X);
        assert_eq!(at0, expect);
        assert_eq!(at0.to_string(), "x^2 - x");
    }

    #[test]
    fn identity_substitution_is_noop() {
        let p = (&(&x() + &t()).pow(3) - &BiPoly::monomial(Rational::frac(1, 2), 0, 2, TX)).pow(2);
        assert_eq!(p.substitute(Var::T, &t()).unwrap(), p);
        assert_eq!(p.substitute(Var::X, &x()).unwrap(), p);
    }

    #[test]
    fn reflection_and_shift_substitutions() {
        let p = &(&x() + &t()).pow(2) * &t();
        let neg_t = p.substitute(Var::T, &-&t()).unwrap();
        assert_eq!(neg_t, -&(&(&x() - &t()).pow(2) * &t()));
        let shifted = p.substitute(Var::T, &(&t() + &c(1))).unwrap();
        assert_eq!(shifted, &(&(&x() + &t()) + &c(1)).pow(2) * &(&t() + &c(1)));
    }

    #[test]
    fn unknown_indeterminate_rejected() {
        let p = &x() + &t();
        assert_eq!(p.derivative(Var::Y, 1), Err(PolyError::UnknownVar(Var::Y)));
        assert!(p.substitute(Var::Y, &t()).is_err());
        assert!(p.eval_at(Var::Y, &r(0)).is_err());
        let q = BiPoly::var(Var::X, (Var::X, Var::Y)).unwrap();
        assert!(p.checked_add(&q).is_err());
        assert!(p.checked_eq(&q).is_err());
    }

    #[test]
    fn partial_derivatives() {
        let t3 = BiPoly::monomial(r(1), 3, 0, TX);
        assert_eq!(
            t3.derivative(Var::T, 2).unwrap(),
            BiPoly::monomial(r(6), 1, 0, TX)
        );
        assert!(c(5).derivative(Var::T, 1).unwrap().is_zero());
        assert!(BiPoly::monomial(r(1), 2, 0, TX)
            .derivative(Var::T, 3)
            .unwrap()
            .is_zero());
        // the x-exponent is untouched by D_t
        let m = BiPoly::monomial(r(1), 2, 4, TX);
        assert_eq!(
            m.derivative(Var::T, 1).unwrap(),
            BiPoly::monomial(r(2), 1, 4, TX)
        );
        assert_eq!(
            m.derivative(Var::X, 4).unwrap(),
            BiPoly::monomial(r(24), 2, 0, TX)
        );
    }

    #[test]
    fn compose_univariate() {
        // (1 - x - y)^2 via composition
        let xy = (Var::X, Var::Y);
        let z = BiPoly::affine(r(-1), r(-1), r(1), xy);
        let sq = Poly::monomial(r(1), 2, Var::new("z"));
        assert_eq!(BiPoly::compose_poly(&sq, &z), z.pow(2));
    }

    #[test]
    fn rendering_and_mismatch() {
        let p = &(&x() + &t()).pow(2) - &c(1);
        assert_eq!(p.to_string(), "t^2 + 2*t*x + x^2 - 1");
        let q = &p + &x();
        assert_eq!(
            p.first_mismatch(&q).unwrap().to_string(),
            "coefficient of x: lhs 0, rhs 1"
        );
        assert_eq!(BiPoly::zero(TX).to_string(), "0");
    }

    fn small_bipoly() -> impl Strategy<Value = BiPoly> {
        proptest::collection::vec(((0u32..5, 0u32..5), -20i64..=20, 1i64..=9), 0..8).prop_map(|v| {
            v.into_iter().fold(BiPoly::zero(TX), |acc, ((a, b), n, d)| {
                &acc + &BiPoly::monomial(Rational::frac(n, d), a, b, TX)
            })
        })
    }

    proptest! {
        #[test]
        fn leibniz_in_t(p in small_bipoly(), q in small_bipoly()) {
            let lhs = (&p * &q).derivative(Var::T, 1).unwrap();
            let rhs = &(&p.derivative(Var::T, 1).unwrap() * &q) + &(&p * &q.derivative(Var::T, 1).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn bipoly_ring_axioms(a in small_bipoly(), b in small_bipoly(), c in small_bipoly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn substitution_is_a_ring_map(a in small_bipoly(), b in small_bipoly()) {
            let s = &t() + &c(1);
            let lhs = (&a * &b).substitute(Var::T, &s).unwrap();
            let rhs = &a.substitute(Var::T, &s).unwrap() * &b.substitute(Var::T, &s).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
