//! Both sides of each Bernoulli polynomial identity, built term by term
//! from the summation formulas.
//!
//! Summation filters such as "k + m odd" are explicit predicates on the
//! summation index. Terms whose Bernoulli index or exponent would be
//! negative always carry a vanishing binomial factor and are skipped.

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial};
use crate::exactnum::{binom_q, Rational};
use crate::polyring::{BiPoly, Poly, Var};

use super::IdentityError;

/// How the summation filter of the constant-term identity with a lower limit
/// `k = l` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParityReading {
    /// Keep the terms with `k + m` odd, as in every sibling identity.
    #[default]
    IndexParity,
    /// Literal `l + m` odd: all terms kept when `l + m` is odd, none otherwise.
    LowerLimitParity,
}

/// Right-hand side used for the shifted-index identity (lower limit
/// `k = l`) and its `nu = 0` specialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShiftedRhs {
    /// Carries the factor `C(j+m-nu, l+m-nu)` produced by differentiating
    /// `(x+t)^(j+m-nu)` exactly `l+m-nu` times.
    #[default]
    Derived,
    /// The factor omitted; fails already at `m = 2, nu = 0, l = 0`.
    Printed,
}

fn violation(family: &'static str, reason: impl Into<String>) -> IdentityError {
    IdentityError::ConstraintViolation {
        family,
        reason: reason.into(),
    }
}

fn require(ok: bool, family: &'static str, reason: &str) -> Result<(), IdentityError> {
    if ok {
        Ok(())
    } else {
        Err(violation(family, reason))
    }
}

fn bern(k: i64) -> Poly {
    bernoulli_polynomial(usize::try_from(k).expect("nonnegative Bernoulli index"))
}

fn bnum(k: i64) -> Rational {
    bernoulli_number(usize::try_from(k).expect("nonnegative Bernoulli index"))
}

fn xpow(c: Rational, e: i64) -> Poly {
    Poly::monomial(c, usize::try_from(e).expect("nonnegative exponent"), Var::X)
}

fn odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

fn half() -> Rational {
    Rational::frac(1, 2)
}

fn sum_polys(terms: impl Iterator<Item = Poly>) -> Poly {
    terms.fold(Poly::zero(Var::X), |acc, p| &acc + &p)
}

/// Full-range constant-term-free identity with `B_k(x)` on the left:
///
/// `sum_{k<m, k+m odd} C(m,k) C(k+m,nu) C(k+m-nu,m-nu) B_k(x)
///  = 1/2 sum_{j<m} (-1)^(j+m+1) C(m,j+1) C(j+m,nu) C(j+m-nu,m-nu) (j+m+1) x^j`
///
/// for `m >= 1`, `0 <= nu <= m`.
pub fn build_thm1_part1(m: u32, nu: u32) -> Result<(Poly, Poly), IdentityError> {
    const F: &str = "thm1_1";
    require(m >= 1, F, "m >= 1")?;
    require(nu <= m, F, "0 <= nu <= m")?;
    let (m, nu) = (m as i64, nu as i64);
    let lhs = sum_polys((0..m).filter(|k| odd(k + m)).map(|k| {
        let c = binom_q(m, k) * binom_q(k + m, nu) * binom_q(k + m - nu, m - nu);
        bern(k).scale(&c)
    }));
    let rhs = sum_polys((0..m).map(|j| {
        let c = Rational::sign_power(j + m + 1)
            * binom_q(m, j + 1)
            * binom_q(j + m, nu)
            * binom_q(j + m - nu, m - nu)
            * Rational::from(j + m + 1);
        xpow(c * half(), j)
    }));
    Ok((lhs, rhs))
}

/// `B_{k+1}(x)` variant, for `m >= 1`, `0 <= nu <= m-1`.
pub fn build_thm1_part2(m: u32, nu: u32) -> Result<(Poly, Poly), IdentityError> {
    const F: &str = "thm1_2";
    require(m >= 1, F, "m >= 1")?;
    require(nu < m, F, "0 <= nu <= m-1")?;
    let (m, nu) = (m as i64, nu as i64);
    let lhs = sum_polys((0..m).filter(|k| odd(k + m)).map(|k| {
        let c = binom_q(m, k) * binom_q(k + m, nu) * binom_q(k + m - nu, m - nu - 1);
        bern(k + 1).scale(&c)
    }));
    let rhs = sum_polys((0..=m).map(|j| {
        let c = Rational::sign_power(j + m)
            * binom_q(m, j)
            * binom_q(j + m - 1, nu)
            * binom_q(j + m - nu - 1, m - nu - 1)
            * Rational::from(j + m);
        xpow(c * half(), j)
    }));
    Ok((lhs, rhs))
}

/// `B_{k+m-nu-l}(x)` variant, for `m >= 1`, `0 <= nu <= m-1`,
/// `0 <= l <= m-nu-1`. The exponent `j+m-nu-l-1` is never negative there.
pub fn build_thm1_part3(m: u32, nu: u32, l: u32) -> Result<(Poly, Poly), IdentityError> {
    const F: &str = "thm1_3";
    require(m >= 1, F, "m >= 1")?;
    require(nu < m, F, "0 <= nu <= m-1")?;
    require(l < m - nu, F, "0 <= l <= m-nu-1")?;
    let (m, nu, l) = (m as i64, nu as i64, l as i64);
    let lhs = sum_polys((0..m).filter(|k| odd(k + m)).map(|k| {
        let c = binom_q(m, k) * binom_q(k + m, nu) * binom_q(k + m - nu, l);
        bern(k + m - nu - l).scale(&c)
    }));
    let rhs = sum_polys((0..=m).map(|j| {
        let c = Rational::sign_power(j + m)
            * binom_q(m, j)
            * binom_q(j + m - 1, nu)
            * binom_q(j + m - nu - 1, l)
            * Rational::from(j + m);
        xpow(c * half(), j + m - nu - l - 1)
    }));
    Ok((lhs, rhs))
}

/// `B_{k-l}(x)` variant with lower limit `k = l`, for `m >= 1`,
/// `0 <= nu <= m`, `0 <= l <= m-1`.
pub fn build_thm1_part4(
    m: u32,
    nu: u32,
    l: u32,
    rhs_form: ShiftedRhs,
) -> Result<(Poly, Poly), IdentityError> {
    const F: &str = "thm1_4";
    require(m >= 1, F, "m >= 1")?;
    require(nu <= m, F, "0 <= nu <= m")?;
    require(l < m, F, "0 <= l <= m-1")?;
    let (m, nu, l) = (m as i64, nu as i64, l as i64);
    let lhs = sum_polys((l..m).filter(|k| odd(k + m)).map(|k| {
        let c = binom_q(m, k) * binom_q(k + m, nu) * binom_q(k + m - nu, l + m - nu);
        bern(k - l).scale(&c)
    }));
    let rhs = sum_polys((l..m).map(|j| {
        let mut c = Rational::sign_power(j + m + 1)
            * binom_q(m, j + 1)
            * binom_q(j + m, nu)
            * Rational::from(j + m + 1);
        if rhs_form == ShiftedRhs::Derived {
            c = c * binom_q(j + m - nu, l + m - nu);
        }
        xpow(c * half(), j - l)
    }));
    Ok((lhs, rhs))
}

/// The `nu = 0` specializations, written out from their own formulas:
/// part 1 has `B_{k+m-l}(x)`, part 2 has `B_{k-l}(x)` with lower limit `l`.
/// Both take `m >= 1`, `0 <= l <= m-1`.
pub fn build_corollary(
    part: u8,
    m: u32,
    l: u32,
    rhs_form: ShiftedRhs,
) -> Result<(Poly, Poly), IdentityError> {
    let family = match part {
        1 => "cor1",
        2 => "cor2",
        _ => return Err(violation("cor", "part is 1 or 2")),
    };
    require(m >= 1, family, "m >= 1")?;
    require(l < m, family, "0 <= l <= m-1")?;
    let (m, l) = (m as i64, l as i64);
    if part == 1 {
        let lhs = sum_polys(
            (0..m)
                .filter(|k| odd(k + m))
                .map(|k| bern(k + m - l).scale(&(binom_q(m, k) * binom_q(k + m, l)))),
        );
        let rhs = sum_polys((0..=m).map(|j| {
            let c = Rational::sign_power(j + m)
                * binom_q(m, j)
                * binom_q(j + m - 1, l)
                * Rational::from(j + m);
            xpow(c * half(), j + m - l - 1)
        }));
        Ok((lhs, rhs))
    } else {
        let lhs = sum_polys(
            (l..m)
                .filter(|k| odd(k + m))
                .map(|k| bern(k - l).scale(&(binom_q(m, k) * binom_q(k + m, l + m)))),
        );
        let rhs = sum_polys((l..m).map(|j| {
            let mut c =
                Rational::sign_power(j + m + 1) * binom_q(m, j + 1) * Rational::from(j + m + 1);
            if rhs_form == ShiftedRhs::Derived {
                c = c * binom_q(j + m, l + m);
            }
            xpow(c * half(), j - l)
        }));
        Ok((lhs, rhs))
    }
}

/// `sum_{k<m, k+m odd} C(m,k) C(k+m,nu) B_{k+m-nu}(x)
///  = 1/2 sum_{j<=m} (-1)^(j+m) C(m,j) C(j+m-1,nu) (j+m) x^(j+m-nu-1)`
/// for `m >= 1`, `0 <= nu <= m`. At `nu = m` the `j = 0` term has a
/// negative exponent and the vanishing factor `C(m-1, m)`.
pub fn build_alzer_kwong_poly(m: u32, nu: u32) -> Result<(Poly, Poly), IdentityError> {
    const F: &str = "alzer_kwong_poly";
    require(m >= 1, F, "m >= 1")?;
    require(nu <= m, F, "0 <= nu <= m")?;
    let (m, nu) = (m as i64, nu as i64);
    let lhs = sum_polys(
        (0..m)
            .filter(|k| odd(k + m))
            .map(|k| bern(k + m - nu).scale(&(binom_q(m, k) * binom_q(k + m, nu)))),
    );
    let rhs = sum_polys((0..=m).filter(|j| j + m > nu).map(|j| {
        let c = Rational::sign_power(j + m)
            * binom_q(m, j)
            * binom_q(j + m - 1, nu)
            * Rational::from(j + m);
        xpow(c * half(), j + m - nu - 1)
    }));
    Ok((lhs, rhs))
}

/// Constant-term identities (the polynomial identities at `x = 0`), computed
/// directly from Bernoulli numbers against their closed-form right sides.
///
/// * part 1: `0 <= nu <= m`, right side `(-1)^(m+1) m(m+1)/2 C(m,nu)`;
/// * part 2: `0 <= nu <= m-1`, right side `(-1)^m m/2 C(m-1,nu)`;
/// * part 3: `0 <= l <= m-nu-2`, right side `0`;
/// * part 4: `0 <= nu <= m`, `0 <= l <= m-1`, right side
///   `(-1)^(l+m+1) (l+m+1)/2 C(m,l+1) C(l+m,nu)`.
pub fn eval_ak_constant(
    part: u8,
    m: u32,
    nu: u32,
    l: Option<u32>,
    parity: ParityReading,
) -> Result<(Rational, Rational), IdentityError> {
    let family = match part {
        1 => "ak_const_1",
        2 => "ak_const_2",
        3 => "ak_const_3",
        4 => "ak_const_4",
        _ => return Err(violation("ak_const", "part is 1 to 4")),
    };
    require(m >= 1, family, "m >= 1")?;
    let needs_l = part >= 3;
    require(
        l.is_some() == needs_l,
        family,
        "l is given exactly for parts 3 and 4",
    )?;
    let (mi, nui, li) = (m as i64, nu as i64, l.unwrap_or(0) as i64);
    let terms = |lo: i64, keep: &dyn Fn(i64) -> bool, f: &dyn Fn(i64) -> Rational| -> Rational {
        (lo..mi).filter(|&k| keep(k)).map(f).sum()
    };
    let k_odd = |k: i64| odd(k + mi);
    match part {
        1 => {
            require(nu <= m, family, "0 <= nu <= m")?;
            let lhs = terms(0, &k_odd, &|k| {
                binom_q(mi, k) * binom_q(k + mi, nui) * binom_q(k + mi - nui, mi - nui) * bnum(k)
            });
            let rhs =
                Rational::sign_power(mi + 1) * Rational::frac(mi * (mi + 1), 2) * binom_q(mi, nui);
            Ok((lhs, rhs))
        }
        2 => {
            require(nu < m, family, "0 <= nu <= m-1")?;
            let lhs = terms(0, &k_odd, &|k| {
                binom_q(mi, k)
                    * binom_q(k + mi, nui)
                    * binom_q(k + mi - nui, mi - 1 - nui)
                    * bnum(k + 1)
            });
            let rhs = Rational::sign_power(mi) * Rational::frac(mi, 2) * binom_q(mi - 1, nui);
            Ok((lhs, rhs))
        }
        3 => {
            require(nui + li + 2 <= mi, family, "0 <= l <= m-nu-2")?;
            let lhs = terms(0, &k_odd, &|k| {
                binom_q(mi, k)
                    * binom_q(k + mi, nui)
                    * binom_q(k + mi - nui, li)
                    * bnum(k + mi - nui - li)
            });
            Ok((lhs, Rational::zero()))
        }
        _ => {
            require(nu <= m, family, "0 <= nu <= m")?;
            require(li < mi, family, "0 <= l <= m-1")?;
            let keep: Box<dyn Fn(i64) -> bool> = match parity {
                ParityReading::IndexParity => Box::new(k_odd),
                ParityReading::LowerLimitParity => Box::new(move |_| odd(li + mi)),
            };
            let lhs = terms(li, &keep, &|k| {
                binom_q(mi, k)
                    * binom_q(k + mi, nui)
                    * binom_q(k + mi - nui, li + mi - nui)
                    * bnum(k - li)
            });
            let rhs = Rational::sign_power(li + mi + 1)
                * Rational::frac(li + mi + 1, 2)
                * binom_q(mi, li + 1)
                * binom_q(li + mi, nui);
            Ok((lhs, rhs))
        }
    }
}

/// `sum_{k<=m} C(m,k) B_{n+k}(x) = (-1)^(n+m) sum_{k<=n} C(n,k) B_{m+k}(-x)`
/// for `m, n >= 1`.
pub fn build_wu_sun_pan(m: u32, n: u32) -> Result<(Poly, Poly), IdentityError> {
    const F: &str = "wu_sun_pan";
    require(m >= 1 && n >= 1, F, "m, n >= 1")?;
    let (m, n) = (m as i64, n as i64);
    let lhs = sum_polys((0..=m).map(|k| bern(n + k).scale(&binom_q(m, k))));
    let rhs = sum_polys((0..=n).map(|k| bern(m + k).reflect().scale(&binom_q(n, k))))
        .scale(&Rational::sign_power(n + m));
    Ok((lhs, rhs))
}

/// `sum_{j<=m+q} C(m+q,j) (n+q+j) B_{n+q+j-1}(x)
///  = -(-1)^(m+n) sum_{k<=n+q} C(n+q,k) (m+q+k) B_{m+q+k-1}(-x)`
/// for `q, m, n >= 0` with `m + n > 0`.
pub fn build_momiyama_ext(q: u32, m: u32, n: u32) -> Result<(Poly, Poly), IdentityError> {
    const F: &str = "momiyama_ext";
    require(m + n > 0, F, "m + n > 0")?;
    let (q, m, n) = (q as i64, m as i64, n as i64);
    // a zero weight (n+q+j) accompanies the only possible index -1
    let lhs = sum_polys(
        (0..=m + q)
            .filter(|j| n + q + j > 0)
            .map(|j| bern(n + q + j - 1).scale(&(binom_q(m + q, j) * Rational::from(n + q + j)))),
    );
    let rhs = sum_polys((0..=n + q).filter(|k| m + q + k > 0).map(|k| {
        bern(m + q + k - 1)
            .reflect()
            .scale(&(binom_q(n + q, k) * Rational::from(m + q + k)))
    }))
    .scale(&-Rational::sign_power(m + n));
    Ok((lhs, rhs))
}

/// `sum_{j<=n+1} C(n+1,j) (n+j+1) B_{n+j}`, which vanishes for `n >= 1`.
pub fn eval_kaneko(n: u32) -> Result<Rational, IdentityError> {
    require(n >= 1, "kaneko", "n >= 1")?;
    let n = n as i64;
    Ok((0..=n + 1)
        .map(|j| binom_q(n + 1, j) * Rational::from(n + j + 1) * bnum(n + j))
        .sum())
}

/// `sum_{j<=m} C(m,j) C(n+j,nu) B_{n+j-nu}(x)
///  = sum_{k<=n} (-1)^(n-k) C(n,k) C(m+k,nu) B_{m+k-nu}(x+1)`
/// for `nu, m, n >= 0` with `m + n > 0`.
pub fn build_binom_shift(nu: u32, m: u32, n: u32) -> Result<(Poly, Poly), IdentityError> {
    const F: &str = "thm_binom_shift";
    require(m + n > 0, F, "m + n > 0")?;
    let (nu, m, n) = (nu as i64, m as i64, n as i64);
    let lhs = sum_polys(
        (0..=m)
            .filter(|j| n + j >= nu)
            .map(|j| bern(n + j - nu).scale(&(binom_q(m, j) * binom_q(n + j, nu)))),
    );
    let one = Rational::one();
    let rhs = sum_polys((0..=n).filter(|k| m + k >= nu).map(|k| {
        let c = Rational::sign_power(n - k) * binom_q(n, k) * binom_q(m + k, nu);
        bern(m + k - nu).shift(&one).scale(&c)
    }));
    Ok((lhs, rhs))
}

/// Three-variable identity with `x + y + z = 1`, as a polynomial in `(x, y)`
/// after `z = 1 - x - y`:
///
/// `(-1)^m sum_j C(m,j) x^(m-j) B_{n+j}(y) = (-1)^n sum_k C(n,k) x^(n-k) B_{m+k}(z)`.
pub fn build_sun(m: u32, n: u32) -> (BiPoly, BiPoly) {
    let xy = (Var::X, Var::Y);
    let (m, n) = (m as i64, n as i64);
    let z = BiPoly::affine(-Rational::one(), -Rational::one(), Rational::one(), xy);
    let x_pow = |c: Rational, e: i64| BiPoly::monomial(c, e as u32, 0, xy);
    let mut lhs = BiPoly::zero(xy);
    for j in 0..=m {
        let b = BiPoly::from_poly(&bern(n + j).rename(Var::Y), xy).expect("y is in (x, y)");
        lhs = &lhs + &(&x_pow(binom_q(m, j), m - j) * &b);
    }
    let mut rhs = BiPoly::zero(xy);
    for k in 0..=n {
        let b = BiPoly::compose_poly(&bern(m + k), &z);
        rhs = &rhs + &(&x_pow(binom_q(n, k), n - k) * &b);
    }
    (
        lhs.scale(&Rational::sign_power(m)),
        rhs.scale(&Rational::sign_power(n)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn assert_equal_sides((l, r): (Poly, Poly)) {
        assert_eq!(l, r, "lhs {l} vs rhs {r}");
    }

    #[test]
    fn part1_examples() {
        let (l, r) = build_thm1_part1(1, 0).unwrap();
        assert_eq!(l, Poly::one(Var::X));
        assert_eq!(r, Poly::one(Var::X));
        assert_equal_sides(build_thm1_part1(2, 2).unwrap());
        assert_equal_sides(build_thm1_part1(1, 1).unwrap());
        assert!(build_thm1_part1(0, 0).is_err());
        assert!(build_thm1_part1(2, 3).is_err());
    }

    #[test]
    fn part2_examples() {
        assert_equal_sides(build_thm1_part2(1, 0).unwrap());
        assert_equal_sides(build_thm1_part2(2, 0).unwrap());
        assert_equal_sides(build_thm1_part2(2, 1).unwrap());
        assert!(build_thm1_part2(2, 2).is_err());
    }

    #[test]
    fn part3_examples() {
        assert_equal_sides(build_thm1_part3(1, 0, 0).unwrap());
        assert_equal_sides(build_thm1_part3(3, 1, 1).unwrap());
        assert!(build_thm1_part3(3, 1, 2).is_err());
        for m in 1..=6 {
            for nu in 0..m {
                assert_eq!(
                    build_thm1_part3(m, nu, 0).unwrap(),
                    build_alzer_kwong_poly(m, nu).unwrap()
                );
            }
        }
    }

    #[test]
    fn part4_examples() {
        for (m, nu, l) in [(1, 0, 0), (2, 1, 1), (3, 3, 2)] {
            assert_equal_sides(build_thm1_part4(m, nu, l, ShiftedRhs::Derived).unwrap());
            assert_equal_sides(build_thm1_part4(m, nu, l, ShiftedRhs::Printed).unwrap());
        }
        assert!(build_thm1_part4(3, 4, 0, ShiftedRhs::Derived).is_err());
        assert!(build_thm1_part4(3, 0, 3, ShiftedRhs::Derived).is_err());
    }

    // m = 2, nu = 0, l = 0 by hand:
    // lhs = C(2,1) C(3,0) C(3,2) B_1(x) = 6x - 3;
    // rhs without the C(j+m-nu, l+m-nu) factor = -3 + 2x, with it = -3 + 6x.
    #[test]
    fn printed_shifted_rhs_counterexample() {
        let (l, r) = build_thm1_part4(2, 0, 0, ShiftedRhs::Printed).unwrap();
        assert_eq!(l.to_string(), "6*x - 3");
        assert_eq!(r.to_string(), "2*x - 3");
        let (l2, r2) = build_thm1_part4(2, 0, 0, ShiftedRhs::Derived).unwrap();
        assert_eq!(l2, l);
        assert_eq!(r2.to_string(), "6*x - 3");
    }

    #[test]
    fn corollary_examples() {
        assert_equal_sides(build_corollary(1, 2, 1, ShiftedRhs::Derived).unwrap());
        assert_equal_sides(build_corollary(2, 2, 0, ShiftedRhs::Derived).unwrap());
        for m in 1..=6 {
            for l in 0..m {
                assert_eq!(
                    build_corollary(1, m, l, ShiftedRhs::Derived).unwrap(),
                    build_thm1_part3(m, 0, l).unwrap()
                );
                assert_eq!(
                    build_corollary(2, m, l, ShiftedRhs::Derived).unwrap(),
                    build_thm1_part4(m, 0, l, ShiftedRhs::Derived).unwrap()
                );
            }
        }
        assert!(build_corollary(3, 2, 0, ShiftedRhs::Derived).is_err());
        assert!(build_corollary(1, 2, 2, ShiftedRhs::Derived).is_err());
    }

    #[test]
    fn alzer_kwong_examples() {
        let (l, r) = build_alzer_kwong_poly(1, 0).unwrap();
        // k = 0 term: C(1,0) C(1,0) B_1(x)
        assert_eq!(l, bernoulli_polynomial(1));
        assert_eq!(l, r);
        assert_equal_sides(build_alzer_kwong_poly(1, 1).unwrap());
        assert_equal_sides(build_alzer_kwong_poly(4, 2).unwrap());
    }

    #[test]
    fn constant_examples() {
        let p = ParityReading::IndexParity;
        assert_eq!(
            eval_ak_constant(1, 2, 1, None, p).unwrap(),
            (Rational::from(-6), Rational::from(-6))
        );
        assert_eq!(
            eval_ak_constant(1, 1, 0, None, p).unwrap(),
            (Rational::one(), Rational::one())
        );
        assert_eq!(
            eval_ak_constant(3, 3, 0, Some(1), p).unwrap(),
            (Rational::zero(), Rational::zero())
        );
        assert!(eval_ak_constant(3, 3, 1, Some(1), p).is_err());
        assert!(eval_ak_constant(1, 3, 1, Some(1), p).is_err());
        assert!(eval_ak_constant(5, 3, 1, None, p).is_err());
    }

    #[test]
    fn constants_match_polynomials_at_zero() {
        let z = Rational::zero();
        let p = ParityReading::IndexParity;
        for m in 1..=8u32 {
            for nu in 0..=m {
                let (l, r) = build_thm1_part1(m, nu).unwrap();
                let (cl, cr) = eval_ak_constant(1, m, nu, None, p).unwrap();
                assert_eq!((l.eval(&z), r.eval(&z)), (cl, cr));
                for l_ in 0..m {
                    let (l, r) = build_thm1_part4(m, nu, l_, ShiftedRhs::Derived).unwrap();
                    let (cl, cr) = eval_ak_constant(4, m, nu, Some(l_), p).unwrap();
                    assert_eq!((l.eval(&z), r.eval(&z)), (cl, cr));
                }
            }
            for nu in 0..m {
                let (l, r) = build_thm1_part2(m, nu).unwrap();
                let (cl, cr) = eval_ak_constant(2, m, nu, None, p).unwrap();
                assert_eq!((l.eval(&z), r.eval(&z)), (cl, cr));
                for l_ in 0..(m - nu).saturating_sub(1) {
                    let (l, r) = build_thm1_part3(m, nu, l_).unwrap();
                    let (cl, cr) = eval_ak_constant(3, m, nu, Some(l_), p).unwrap();
                    assert_eq!((l.eval(&z), r.eval(&z)), (cl, cr));
                }
            }
        }
    }

    #[test]
    fn lower_limit_parity_reading_differs() {
        let strict = ParityReading::LowerLimitParity;
        // m = 2, l = 0: l + m even, so the literal filter keeps nothing
        let (l, r) = eval_ak_constant(4, 2, 0, Some(0), strict).unwrap();
        assert_eq!(l, Rational::zero());
        assert_eq!(r, Rational::from(-3));
    }

    #[test]
    fn wu_sun_pan_examples() {
        let (l, r) = build_wu_sun_pan(1, 1).unwrap();
        assert_eq!(l.to_string(), "x^2 - 1/3");
        assert_eq!(r.to_string(), "x^2 - 1/3");
        assert_equal_sides(build_wu_sun_pan(2, 1).unwrap());
        let (l12, r12) = build_wu_sun_pan(1, 2).unwrap();
        let (l21, r21) = build_wu_sun_pan(2, 1).unwrap();
        // swapping (m, n) trades the sides up to x -> -x and the sign (-1)^(m+n)
        let s = Rational::sign_power(3);
        assert_eq!(l12, r21.reflect().scale(&s));
        assert_eq!(r12, l21.reflect().scale(&s));
        assert!(build_wu_sun_pan(0, 1).is_err());
    }

    #[test]
    fn momiyama_examples() {
        assert_equal_sides(build_momiyama_ext(0, 1, 1).unwrap());
        assert_equal_sides(build_momiyama_ext(1, 2, 0).unwrap());
        assert!(build_momiyama_ext(2, 0, 0).is_err());
    }

    #[test]
    fn momiyama_at_zero_gives_kaneko() {
        // q = 1, m = n, x = 0: both sides are the Kaneko sum up to sign
        let z = Rational::zero();
        for n in 1..=8u32 {
            let (l, r) = build_momiyama_ext(1, n, n).unwrap();
            let k = eval_kaneko(n).unwrap();
            assert_eq!(l.eval(&z), k);
            assert_eq!(r.eval(&z), -k);
        }
    }

    #[test]
    fn kaneko_examples() {
        for n in [1, 2, 12] {
            assert_eq!(eval_kaneko(n).unwrap(), Rational::zero());
        }
        assert!(eval_kaneko(0).is_err());
    }

    #[test]
    fn kaneko_by_hand_n1() {
        // C(2,0)*2*B_1 + C(2,1)*3*B_2 + C(2,2)*4*B_3 = -1 + 1 + 0
        let terms = [q(-1, 1), q(1, 1), q(0, 1)];
        assert_eq!(terms.iter().sum::<Rational>(), eval_kaneko(1).unwrap());
    }

    #[test]
    fn binom_shift_examples() {
        assert_equal_sides(build_binom_shift(0, 1, 1).unwrap());
        assert_equal_sides(build_binom_shift(1, 2, 1).unwrap());
        assert_equal_sides(build_binom_shift(0, 0, 1).unwrap());
        assert!(build_binom_shift(0, 0, 0).is_err());
    }

    #[test]
    fn sun_examples() {
        let (l, r) = build_sun(1, 1);
        assert_eq!(l, r);
        let (l, r) = build_sun(0, 0);
        assert_eq!(l, BiPoly::one((Var::X, Var::Y)));
        assert_eq!(l, r);
        let (l, r) = build_sun(2, 1);
        assert_eq!(l, r);
    }
}
