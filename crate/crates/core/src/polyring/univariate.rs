use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{power_str, write_terms, Mismatch, PolyError, Var};
use crate::exactnum::Rational;

/// Dense univariate polynomial; `coeffs[i]` multiplies `var^i`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial has
/// no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
    var: Var,
}

impl Poly {
    pub fn zero(var: Var) -> Self {
        Poly {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(Rational::one(), var)
    }

    pub fn constant(c: Rational, var: Var) -> Self {
        Self::from_coeffs(vec![c], var)
    }

    /// The indeterminate itself.
    pub fn var_poly(var: Var) -> Self {
        Self::monomial(Rational::one(), 1, var)
    }

    pub fn monomial(c: Rational, degree: usize, var: Var) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs, var)
    }

    /// `a*var + b`
    pub fn linear(a: Rational, b: Rational, var: Var) -> Self {
        Self::from_coeffs(vec![b, a], var)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, var: Var) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Same coefficients under a different indeterminate name.
    pub fn rename(&self, var: Var) -> Poly {
        Poly {
            coeffs: self.coeffs.clone(),
            var,
        }
    }

    fn check_var(&self, other: &Poly) -> Result<(), PolyError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(PolyError::VarMismatch {
                left: self.var.to_string(),
                right: other.var.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Poly::from_coeffs(coeffs, self.var))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.var));
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Poly::from_coeffs(coeffs, self.var))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    /// `self^e`, with `p^0 = 1`.
    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(self.var);
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

    /// `q(var) = self(a*var + b)`, by Horner's scheme.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Poly {
        let inner = Poly::linear(a.clone(), b.clone(), self.var);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(self.var), |acc, c| {
                &(&acc * &inner) + &Poly::constant(c.clone(), self.var)
            })
    }

    /// `q(var) = self(var + c)`.
    pub fn shift(&self, c: &Rational) -> Poly {
        self.compose_affine(&Rational::one(), c)
    }

    /// `q(var) = self(-var)`.
    pub fn reflect(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Poly::from_coeffs(coeffs, self.var)
    }

    /// Formal `order`-th derivative.
    pub fn derivative(&self, order: u32) -> Poly {
        let order = order as usize;
        if order == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(order)
            .map(|(i, c)| c * &falling_factorial(i as u64, order as u64))
            .collect();
        Poly::from_coeffs(coeffs, self.var)
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * a + c)
    }

    /// Exact equality, rejecting polynomials in different indeterminates.
    pub fn checked_eq(&self, other: &Poly) -> Result<bool, PolyError> {
        self.check_var(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    /// Highest-degree coefficient at which `self` and `other` differ.
    pub fn first_mismatch(&self, other: &Poly) -> Option<Mismatch> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).rev().find_map(|i| {
            let (l, r) = (self.coeff(i), other.coeff(i));
            (l != r).then(|| Mismatch {
                monomial: power_str(self.var, i as u32).unwrap_or_else(|| "1".into()),
                lhs: l,
                rhs: r,
            })
        })
    }
}

/// `n (n-1) ... (n-k+1)`
pub(crate) fn falling_factorial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    ((n - k + 1)..=n).map(Rational::from).product()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c, power_str(self.var, i as u32))),
        )
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.var, self)
    }
}

// Operator forms panic on an indeterminate mismatch; the `checked_*`
// methods report it instead.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("poly add")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("poly sub")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("poly mul")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            var: self.var,
        }
    }
}
