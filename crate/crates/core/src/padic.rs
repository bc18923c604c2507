//! p-adic numbers at finite precision and the Volkenborn integral of
//! polynomial integrands.
//!
//! Two independent routes to the same integral are provided:
//!
//! * [`volkenborn_exact`] applies linearity and `∫ t^k dt = B_k`, reading
//!   Bernoulli numbers from [`crate::bernoulli`];
//! * [`volkenborn_converge`] evaluates the partial sums
//!   `S_N = p^-N * sum_{j < p^N} f(j)` exactly and watches them settle in
//!   `Q_p`. The power sums behind `S_N` come from the telescoping recurrence
//!   `P^(k+1) = sum_{i<=k} C(k+1, i) * sum_{j<P} j^i`, so this route never
//!   touches a Bernoulli number.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial};
use crate::exactnum::{binomial_nonneg, BigInt, Rational};
use crate::polyring::{BiPoly, Poly, PolyError, Var};
use crate::record::{Comparison, Params, VerificationRecord};

/// Largest prime accepted; keeps `p^N` tables and trial division cheap.
pub const MAX_PRIME: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PadicError {
    #[error("{0} is not a prime (or exceeds {MAX_PRIME})")]
    NotPrime(u64),
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("repetition count must be positive")]
    ZeroRepetition,
    #[error("partial sums did not stabilize at precision {precision} for p = {prime} by level {max_level}")]
    NoConvergence {
        prime: u64,
        precision: u32,
        max_level: u32,
    },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub fn is_prime(p: u64) -> bool {
    if !(2..=MAX_PRIME).contains(&p) {
        return false;
    }
    (2..)
        .take_while(|d| d * d <= p)
        .all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u64) -> Result<(), PadicError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(PadicError::NotPrime(p))
    }
}

/// Exponent of `p` in a nonzero integer, and the cofactor.
fn split_power(n: &BigInt, p: &BigInt) -> (i64, BigInt) {
    let mut v = 0;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return (v, n);
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation of a rational; `None` for zero.
pub fn valuation(r: &Rational, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    Some(split_power(r.numer(), &pb).0 - split_power(r.denom(), &pb).0)
}

/// Element of `Q_p` written `p^valuation * unit`, the unit known modulo
/// `p^precision`.
///
/// A zero unit marks an element only known to vanish modulo `p^valuation`
/// (`O(p^K)`); the exact zero carries `valuation == i64::MAX`.
#[derive(Debug, Clone)]
pub struct PadicNumber {
    prime: u64,
    valuation: i64,
    /// In `[1, p^precision)` and prime to `p`, or zero as described above.
    unit: BigInt,
    precision: u32,
}

impl PadicNumber {
    pub fn zero(prime: u64, precision: u32) -> Self {
        Self::vanishing(prime, precision, i64::MAX)
    }

    /// `O(p^bound)`: known only to be divisible by `p^bound`.
    pub fn vanishing(prime: u64, precision: u32, bound: i64) -> Self {
        PadicNumber {
            prime,
            valuation: bound,
            unit: BigInt::zero(),
            precision,
        }
    }

    pub fn from_rational(r: &Rational, prime: u64, precision: u32) -> Result<Self, PadicError> {
        check_prime(prime)?;
        if precision == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        if r.is_zero() {
            return Ok(Self::zero(prime, precision));
        }
        let pb = BigInt::from(prime);
        let (vn, num) = split_power(r.numer(), &pb);
        let (vd, den) = split_power(r.denom(), &pb);
        let modulus = num_traits::pow(pb, precision as usize);
        let inv = den.extended_gcd(&modulus).x;
        let unit = (num * inv).mod_floor(&modulus);
        Ok(PadicNumber {
            prime,
            valuation: vn - vd,
            unit,
            precision,
        })
    }

    /// Like [`Self::from_rational`], but anything divisible by `p^bound`
    /// collapses to `O(p^bound)`.
    pub fn from_rational_bounded(
        r: &Rational,
        prime: u64,
        precision: u32,
        bound: i64,
    ) -> Result<Self, PadicError> {
        Ok(Self::from_rational(r, prime, precision)?.coarsen(precision, bound))
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.valuation)
    }

    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// True for the exact zero and for `O(p^K)`.
    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    /// Absolute bound `K` of an `O(p^K)` element; `None` when nonzero or
    /// exactly zero.
    pub fn vanishing_bound(&self) -> Option<i64> {
        (self.is_zero() && self.valuation != i64::MAX).then_some(self.valuation)
    }

    /// Reduces to unit precision `precision` and absolute bound `bound`.
    pub fn coarsen(&self, precision: u32, bound: i64) -> PadicNumber {
        let precision = precision.min(self.precision);
        if self.is_zero() || self.valuation >= bound {
            return Self::vanishing(self.prime, precision, bound.min(self.valuation));
        }
        let m = num_traits::pow(BigInt::from(self.prime), precision as usize);
        PadicNumber {
            prime: self.prime,
            valuation: self.valuation,
            unit: self.unit.mod_floor(&m),
            precision,
        }
    }

    /// Both values brought to the precision and absolute bound they share.
    pub fn common_form(&self, other: &PadicNumber) -> (PadicNumber, PadicNumber) {
        let precision = self.precision.min(other.precision);
        let bound = |x: &PadicNumber| if x.is_zero() { x.valuation } else { i64::MAX };
        let b = bound(self).min(bound(other));
        (self.coarsen(precision, b), other.coarsen(precision, b))
    }
}

/// Equality at the precision both sides share: same prime, and either both
/// vanish to the common bound or valuations match with units congruent
/// modulo `p^min(precision)`.
impl PartialEq for PadicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.prime != other.prime {
            return false;
        }
        let (a, b) = self.common_form(other);
        a.valuation == b.valuation && a.unit == b.unit
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.prime;
        let v = self.valuation;
        if self.is_zero() {
            return if v == i64::MAX {
                write!(f, "0")
            } else {
                write!(f, "O({p}^{v})")
            };
        }
        let err = v + self.precision as i64;
        if v == 0 {
            write!(f, "{} + O({p}^{err})", self.unit)
        } else {
            write!(f, "{}*{p}^{v} + O({p}^{err})", self.unit)
        }
    }
}

pub fn rational_to_padic(
    r: &Rational,
    prime: u64,
    precision: u32,
) -> Result<PadicNumber, PadicError> {
    PadicNumber::from_rational(r, prime, precision)
}

/// `sum_{j=0}^{upper-1} j^k` for every `k <= max_k`.
fn power_sums(upper: &BigInt, max_k: usize) -> Vec<BigInt> {
    let mut sums: Vec<BigInt> = Vec::with_capacity(max_k + 1);
    let mut upper_pow = upper.clone();
    for k in 0..=max_k {
        // upper^(k+1) = sum_{i<=k} C(k+1, i) S_i
        let mut acc = upper_pow.clone();
        for (i, s) in sums.iter().enumerate() {
            acc -= binomial_nonneg(k as u64 + 1, i as i64) * s;
        }
        sums.push(acc / BigInt::from(k + 1));
        upper_pow *= upper;
    }
    sums
}

/// Exact `S_N = p^-N * sum_{j=0}^{p^N - 1} f(j)`.
pub fn volkenborn_partial_sum(f: &Poly, prime: u64, level: u32) -> Rational {
    let upper = num_traits::pow(BigInt::from(prime), level as usize);
    let Some(deg) = f.degree() else {
        return Rational::zero();
    };
    let sums = power_sums(&upper, deg);
    let total: Rational = f
        .coeffs()
        .iter()
        .zip(&sums)
        .map(|(a, s)| a * &Rational::from(s.clone()))
        .sum();
    total / Rational::from(upper)
}

/// Exact Volkenborn integral: `sum_k a_k B_k` for `f = sum_k a_k t^k`.
pub fn volkenborn_exact(f: &Poly) -> Rational {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| a * &bernoulli_number(k))
        .sum()
}

/// Integrates a bivariate integrand over `var`, the other indeterminate
/// staying symbolic.
pub fn volkenborn_exact_in(f: &BiPoly, var: Var) -> Result<Poly, PadicError> {
    let (v1, v2) = f.vars();
    let (idx, other) = if var == v1 {
        (0, v2)
    } else if var == v2 {
        (1, v1)
    } else {
        return Err(PolyError::UnknownVar(var).into());
    };
    let mut coeffs: Vec<Rational> = Vec::new();
    for (&(e1, e2), c) in f.terms() {
        let (e_int, e_keep) = if idx == 0 { (e1, e2) } else { (e2, e1) };
        let keep = e_keep as usize;
        if coeffs.len() <= keep {
            coeffs.resize(keep + 1, Rational::zero());
        }
        coeffs[keep] += c * &bernoulli_number(e_int as usize);
    }
    Ok(Poly::from_coeffs(coeffs, other))
}

/// `(x0 + t)^n` as a polynomial in `t`.
pub fn shifted_power(n: u32, x0: &Rational) -> Poly {
    Poly::monomial(Rational::one(), n as usize, Var::T).shift(x0)
}

/// One level of the partial-sum sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Level {
    pub level: u32,
    pub partial_sum: Rational,
    pub padic: PadicNumber,
}

/// Partial sums `S_N` of one integrand, with the level at which two
/// consecutive sums first agreed at the requested precision.
#[derive(Debug, Clone)]
pub struct VolkenbornSeries {
    pub integrand: Poly,
    pub prime: u64,
    pub precision: u32,
    pub levels: Vec<Level>,
    pub stabilized: Option<PadicNumber>,
}

impl VolkenbornSeries {
    /// Highest level tried: `precision + deg f + 4`.
    pub fn max_level(f: &Poly, precision: u32) -> u32 {
        precision + f.degree().unwrap_or(0) as u32 + 4
    }

    /// Absolute bound below which a limit is resolved to unit precision:
    /// `min_k v(a_k) - 1 + M`. Every `B_k` has valuation at least `-1`, so a
    /// nonzero integral with smaller valuation keeps its leading digits;
    /// anything smaller is reported as `O(p^bound)`.
    pub fn zero_bound(f: &Poly, prime: u64, precision: u32) -> i64 {
        let floor = f
            .coeffs()
            .iter()
            .filter_map(|a| valuation(a, prime))
            .min()
            .unwrap_or(0);
        floor - 1 + precision as i64
    }

    /// Walks `N = M+1, M+2, ...` up to [`Self::max_level`], stopping at the
    /// first pair of consecutive sums equal in `Q_p` to precision `M`.
    pub fn run(f: &Poly, prime: u64, precision: u32) -> Result<Self, PadicError> {
        check_prime(prime)?;
        if precision == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        let mut series = VolkenbornSeries {
            integrand: f.clone(),
            prime,
            precision,
            levels: Vec::new(),
            stabilized: None,
        };
        let bound = Self::zero_bound(f, prime, precision);
        for level in (precision + 1)..=Self::max_level(f, precision) {
            let partial_sum = volkenborn_partial_sum(f, prime, level);
            let padic = PadicNumber::from_rational_bounded(&partial_sum, prime, precision, bound)?;
            let settled = series.levels.last().is_some_and(|prev| prev.padic == padic);
            series.levels.push(Level {
                level,
                partial_sum,
                padic: padic.clone(),
            });
            if settled {
                series.stabilized = Some(padic);
                break;
            }
        }
        Ok(series)
    }
}

/// The p-adic value of `∫ f(t) dt` to unit precision `precision`, found
/// from the partial sums alone.
pub fn volkenborn_converge(
    f: &Poly,
    prime: u64,
    precision: u32,
) -> Result<PadicNumber, PadicError> {
    let series = VolkenbornSeries::run(f, prime, precision)?;
    series.stabilized.ok_or(PadicError::NoConvergence {
        prime,
        precision,
        max_level: VolkenbornSeries::max_level(f, precision),
    })
}

/// Precision used by the numeric side of [`check_lemma1`].
pub const LEMMA_PRECISION: u32 = 4;

/// Shift and reflection rules `∫f(-t) = ∫f(t+1) = ∫f(t) + f'(0)`, plus
/// `∫f = -f'(0)/2` when `f` is odd. Checked exactly in `Q`, then the two
/// transformed integrals are also recovered from partial sums in `Q_p`.
pub fn check_lemma1(f: &Poly, prime: u64) -> Result<VerificationRecord, PadicError> {
    check_lemma1_with(f, prime, Params::new(&[("p", prime as i64)]))
}

pub(crate) fn check_lemma1_with(
    f: &Poly,
    prime: u64,
    params: Params,
) -> Result<VerificationRecord, PadicError> {
    let reflected = f.reflect();
    let shifted = f.shift(&Rational::one());
    let int_reflected = volkenborn_exact(&reflected);
    let int_shifted = volkenborn_exact(&shifted);
    let int_f = volkenborn_exact(f);
    let slope = f.derivative(1).eval(&Rational::zero());

    let mut cmp = Comparison::new()
        .value(Some("reflect=shift"), &int_reflected, &int_shifted)
        .value(Some("shift"), &int_shifted, &(&int_f + &slope));
    if reflected == -f {
        cmp = cmp.value(Some("odd"), &int_f, &(-&slope / Rational::from(2)));
    }
    let numeric_reflected = volkenborn_converge(&reflected, prime, LEMMA_PRECISION)?;
    let numeric_shifted = volkenborn_converge(&shifted, prime, LEMMA_PRECISION)?;
    cmp = cmp
        .padic(
            Some("numeric reflect"),
            &numeric_reflected,
            &rational_to_padic(&int_reflected, prime, LEMMA_PRECISION)?,
        )
        .padic(
            Some("numeric shift"),
            &numeric_shifted,
            &rational_to_padic(&int_shifted, prime, LEMMA_PRECISION)?,
        );
    Ok(cmp.finish("volkenborn_lemma", params))
}

/// `F(x) = ∫ f(x+t) dt` as a polynomial in `x`.
pub fn shifted_integral(f: &Poly) -> Poly {
    let tx = (Var::T, Var::X);
    let inner = BiPoly::affine(Rational::one(), Rational::one(), Rational::zero(), tx);
    let integrand = BiPoly::compose_poly(f, &inner);
    volkenborn_exact_in(&integrand, Var::T).expect("t is one of the integrand's indeterminates")
}

/// Difference equations `F(x+1) - F(x) = f'(x)` and
/// `F(x+r) - F(x) = sum_{i<r} f'(x+i)` for `F(x) = ∫ f(x+t) dt`, as exact
/// polynomial identities and at the point `x0`.
pub fn check_functional_equation(
    f: &Poly,
    x0: &Rational,
    r: u32,
) -> Result<VerificationRecord, PadicError> {
    check_functional_equation_with(f, x0, r, Params::new(&[("r", r as i64)]))
}

pub(crate) fn check_functional_equation_with(
    f: &Poly,
    x0: &Rational,
    r: u32,
    params: Params,
) -> Result<VerificationRecord, PadicError> {
    if r == 0 {
        return Err(PadicError::ZeroRepetition);
    }
    let big_f = shifted_integral(f);
    let df = f.derivative(1).rename(Var::X);
    let one_step = &big_f.shift(&Rational::one()) - &big_f;
    let many_steps = &big_f.shift(&Rational::from(r)) - &big_f;
    let telescoped = (0..r).fold(Poly::zero(Var::X), |acc, i| {
        &acc + &df.shift(&Rational::from(i))
    });
    let at_point = big_f.eval(&(x0 + &Rational::from(r))) - big_f.eval(x0);
    let at_point_rhs: Rational = (0..r).map(|i| df.eval(&(x0 + &Rational::from(i)))).sum();
    Ok(Comparison::new()
        .poly(Some("step 1"), &one_step, &df)
        .poly(Some("step r"), &many_steps, &telescoped)
        .value(Some("at x0"), &at_point, &at_point_rhs)
        .finish("functional_equation", params))
}

/// Lemma cross-check for one `(n, x0, p, M)`: the stabilized partial sums of
/// `(x0+t)^n` against `B_n(x0)` in `Q_p`, and the exact monomial expansion
/// against `B_n(x0)` in `Q`.
pub fn check_witt(
    n: u32,
    x0: i64,
    prime: u64,
    precision: u32,
) -> Result<VerificationRecord, PadicError> {
    let x0_q = Rational::from(x0);
    let f = shifted_power(n, &x0_q);
    let target = bernoulli_polynomial(n as usize).eval(&x0_q);
    let numeric = volkenborn_converge(&f, prime, precision)?;
    let expected = rational_to_padic(&target, prime, precision)?;
    Ok(Comparison::new()
        .padic(Some("numeric"), &numeric, &expected)
        .value(Some("exact"), &volkenborn_exact(&f), &target)
        .finish(
            "witt_oracle",
            Params::new(&[
                ("p", prime as i64),
                ("n", n as i64),
                ("x0", x0),
                ("M", precision as i64),
            ]),
        ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn t_pow(n: usize) -> Poly {
        Poly::monomial(Rational::one(), n, Var::T)
    }

    /// Literal enumeration of the partial sum, feasible for small `p^N`.
    fn enumerate_sum(f: &Poly, p: u64, level: u32) -> Rational {
        let upper = p.pow(level);
        let s: Rational = (0..upper).map(|j| f.eval(&Rational::from(j))).sum();
        s / Rational::from(upper)
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(5) && is_prime(7) && is_prime(101));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(4) && !is_prime(91));
    }

    #[test]
    fn rational_images() {
        let a = rational_to_padic(&q(1, 6), 5, 4).unwrap();
        assert_eq!(a.valuation(), Some(0));
        assert_eq!(*a.unit(), BigInt::from(521));
        assert!(rational_to_padic(&Rational::zero(), 3, 4)
            .unwrap()
            .is_zero());
        let half = rational_to_padic(&q(1, 2), 2, 4).unwrap();
        assert_eq!(half.valuation(), Some(-1));
        assert_eq!(*half.unit(), BigInt::from(1));
        let neg = rational_to_padic(&q(-1, 2), 2, 4).unwrap();
        assert_eq!(*neg.unit(), BigInt::from(15));
        assert_eq!(neg.to_string(), "15*2^-1 + O(2^3)");
        assert_eq!(valuation(&q(50, 3), 5), Some(2));
        assert_eq!(valuation(&q(3, 50), 5), Some(-2));
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(
            rational_to_padic(&q(1, 2), 4, 4).unwrap_err(),
            PadicError::NotPrime(4)
        );
        assert_eq!(
            rational_to_padic(&q(1, 2), 3, 0).unwrap_err(),
            PadicError::ZeroPrecision
        );
        assert!(check_functional_equation(&t_pow(2), &Rational::zero(), 0).is_err());
    }

    #[test]
    fn equality_uses_shared_precision() {
        let a = rational_to_padic(&q(1, 6), 5, 4).unwrap();
        let b = rational_to_padic(&(q(1, 6) + Rational::from(625)), 5, 6).unwrap();
        assert_eq!(a, b);
        let c = rational_to_padic(&(q(1, 6) + Rational::from(125)), 5, 4).unwrap();
        assert_ne!(a, c);
        assert_ne!(a, rational_to_padic(&q(1, 6), 7, 4).unwrap());
    }

    #[test]
    fn vanishing_elements() {
        let small = rational_to_padic(&q(81, 2), 3, 4).unwrap();
        let o3 = PadicNumber::vanishing(3, 4, 3);
        assert_eq!(o3.to_string(), "O(3^3)");
        assert_eq!(o3, small);
        assert_eq!(o3, PadicNumber::zero(3, 4));
        assert_ne!(o3, rational_to_padic(&q(9, 2), 3, 4).unwrap());
        assert_ne!(PadicNumber::zero(3, 4), small);
        assert_eq!(PadicNumber::zero(3, 4).to_string(), "0");
        let (a, b) = o3.common_form(&small);
        assert_eq!(a.to_string(), b.to_string());
    }

    #[test]
    fn zero_integral_resolves_to_bound() {
        // ∫ t^3 = B_3 = 0
        let v = volkenborn_converge(&t_pow(3), 3, 4).unwrap();
        assert_eq!(v.vanishing_bound(), Some(3));
        assert_eq!(v, PadicNumber::zero(3, 4));
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(volkenborn_partial_sum(&t_pow(1), 2, 3), q(7, 2));
        assert_eq!(volkenborn_partial_sum(&t_pow(1), 3, 2), Rational::from(4));
        for (p, n) in [(2, 0), (3, 4), (7, 5)] {
            assert_eq!(
                volkenborn_partial_sum(&Poly::one(Var::T), p, n),
                Rational::one()
            );
        }
    }

    #[test]
    fn partial_sums_match_enumeration() {
        let f = Poly::from_coeffs(
            vec![q(1, 3), q(-2, 1), Rational::zero(), q(5, 7), q(1, 2)],
            Var::T,
        );
        for (p, lvl) in [(2, 0), (2, 5), (3, 3), (5, 2), (7, 2)] {
            assert_eq!(
                volkenborn_partial_sum(&f, p, lvl),
                enumerate_sum(&f, p, lvl)
            );
        }
        for n in 0..=10 {
            assert_eq!(
                volkenborn_partial_sum(&t_pow(n), 3, 4),
                enumerate_sum(&t_pow(n), 3, 4)
            );
        }
    }

    #[test]
    fn exact_integrals() {
        assert_eq!(volkenborn_exact(&t_pow(1)), q(-1, 2));
        assert_eq!(volkenborn_exact(&t_pow(3)), Rational::zero());
        assert_eq!(volkenborn_exact(&t_pow(2)), q(1, 6));
    }

    #[test]
    fn shifted_integral_is_bernoulli_polynomial() {
        for n in 0..=12 {
            assert_eq!(shifted_integral(&t_pow(n)), bernoulli_polynomial(n));
        }
    }

    #[test]
    fn convergence_examples() {
        let v = volkenborn_converge(&t_pow(1), 2, 4).unwrap();
        assert_eq!(v, rational_to_padic(&q(-1, 2), 2, 4).unwrap());
        assert_eq!(v.valuation(), Some(-1));
        let v = volkenborn_converge(&t_pow(2), 5, 4).unwrap();
        assert_eq!(v, rational_to_padic(&q(1, 6), 5, 4).unwrap());
        let c = Poly::constant(q(3, 5), Var::T);
        assert_eq!(
            volkenborn_converge(&c, 5, 3).unwrap(),
            rational_to_padic(&q(3, 5), 5, 3).unwrap()
        );
    }

    #[test]
    fn convergence_rate_for_identity() {
        for level in 2..=12 {
            let s = volkenborn_partial_sum(&t_pow(1), 2, level);
            assert_eq!(s, q((1 << level) - 1, 2));
            assert_eq!(valuation(&(s + q(1, 2)), 2), Some(level as i64 - 1));
        }
    }

    #[test]
    fn lemma_examples() {
        for n in [1usize, 2, 3] {
            let rec = check_lemma1(&t_pow(n), 3).unwrap();
            assert!(rec.passed(), "{rec:?}");
        }
        let odd = check_lemma1(&t_pow(1), 2).unwrap();
        assert!(odd.lhs.contains("odd: -1/2"));
        let even = check_lemma1(&t_pow(2), 2).unwrap();
        assert!(!even.lhs.contains("odd"));
        assert!(even.lhs.starts_with("reflect=shift: 1/6 ; shift: 1/6"));
    }

    #[test]
    fn functional_equation_examples() {
        assert!(check_functional_equation(&t_pow(2), &Rational::zero(), 1)
            .unwrap()
            .passed());
        let c = Poly::constant(q(4, 9), Var::T);
        let rec = check_functional_equation(&c, &q(1, 2), 2).unwrap();
        assert!(rec.passed());
        assert!(rec.lhs.starts_with("step 1: 0"));
        assert!(check_functional_equation(&t_pow(3), &Rational::from(2), 3)
            .unwrap()
            .passed());
    }

    #[test]
    fn witt_examples() {
        assert!(check_witt(1, 0, 2, 4).unwrap().passed());
        assert!(check_witt(2, 1, 5, 4).unwrap().passed());
        assert!(check_witt(0, 2, 7, 4).unwrap().passed());
    }

    proptest::proptest! {
        #[test]
        fn exact_integral_is_linear(
            a in -50i64..50, b in -50i64..50,
            f in proptest::collection::vec(-20i64..20, 0..8),
            g in proptest::collection::vec(-20i64..20, 0..8),
        ) {
            let f = Poly::from_coeffs(f.into_iter().map(Rational::from).collect(), Var::T);
            let g = Poly::from_coeffs(g.into_iter().map(Rational::from).collect(), Var::T);
            let (a, b) = (Rational::from(a), Rational::from(b));
            let combo = &f.scale(&a) + &g.scale(&b);
            proptest::prop_assert_eq!(
                volkenborn_exact(&combo),
                &a * &volkenborn_exact(&f) + &b * &volkenborn_exact(&g)
            );
        }
    }
}
