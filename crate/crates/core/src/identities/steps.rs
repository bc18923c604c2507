//! Intermediate algebraic steps behind the identities, each checked as an
//! exact polynomial equality in `(t, x)` before any integration.

use crate::exactnum::{binom_q, factorial, Rational};
use crate::padic::volkenborn_exact_in;
use crate::polyring::{BiPoly, Poly, Var};
use crate::record::{Comparison, Params, VerificationRecord};

use super::IdentityError;

const TX: (Var, Var) = (Var::T, Var::X);
/// `s` stands for `y + t` in the three-variable step.
const S: Var = Var::new("s");
/// `w` stands for `t - y` after `t -> -t`.
const W: Var = Var::new("w");

fn violation(family: &'static str, reason: &str) -> IdentityError {
    IdentityError::ConstraintViolation {
        family,
        reason: reason.to_string(),
    }
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn fact(n: i64) -> Rational {
    Rational::from(factorial(n as u64))
}

/// `a*t + b*x + c`.
fn lin(a: i64, b: i64, c: i64) -> BiPoly {
    BiPoly::affine(q(a), q(b), q(c), TX)
}

fn pow(p: &BiPoly, e: i64) -> BiPoly {
    p.pow(u32::try_from(e).expect("nonnegative exponent"))
}

fn sum(vars: (Var, Var), terms: impl Iterator<Item = BiPoly>) -> BiPoly {
    terms.fold(BiPoly::zero(vars), |acc, p| &acc + &p)
}

fn odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

fn dt(p: &BiPoly, order: i64) -> BiPoly {
    p.derivative(Var::T, order as u32)
        .expect("t is an indeterminate")
}

fn at_t(p: &BiPoly, replacement: &BiPoly) -> BiPoly {
    p.substitute(Var::T, replacement)
        .expect("t is an indeterminate")
}

/// `C(j+m, nu) (j+m-nu) = C(j+m-1, nu) (j+m)` for `m >= 1`, `0 <= nu <= j+m`.
pub fn check_step_binom(
    j: u32,
    m: u32,
    nu: u32,
    params: Params,
) -> Result<VerificationRecord, IdentityError> {
    if m < 1 || nu > j + m {
        return Err(violation("step_binom", "m >= 1, 0 <= nu <= j+m"));
    }
    let (j, m, nu) = (j as i64, m as i64, nu as i64);
    let lhs = binom_q(j + m, nu) * q(j + m - nu);
    let rhs = binom_q(j + m - 1, nu) * q(j + m);
    Ok(Comparison::new()
        .value(None, &lhs, &rhs)
        .finish("step_binom", params))
}

/// `R(t; x) = (x+t)^m (x+t-1)^m`.
fn r_poly(m: i64) -> BiPoly {
    &pow(&lin(1, 1, 0), m) * &pow(&lin(1, 1, -1), m)
}

/// Binomial expansions of `R(t+1)` and `R(t)` in powers of `x+t`, and the
/// `nu`-th `t`-derivative of their difference, where only `k + m` odd
/// survives. For `m >= 1`, `0 <= nu <= m`.
pub fn check_step_r_difference(
    m: u32,
    nu: u32,
    params: Params,
) -> Result<VerificationRecord, IdentityError> {
    if m < 1 || nu > m {
        return Err(violation("step_r_difference", "m >= 1, 0 <= nu <= m"));
    }
    let (m, nu) = (m as i64, nu as i64);
    let r = r_poly(m);
    let s = lin(1, 1, 0);
    let r_next = at_t(&r, &lin(1, 0, 1));
    let r_next_expanded = sum(TX, (0..=m).map(|k| pow(&s, k + m).scale(&binom_q(m, k))));
    let r_expanded = sum(
        TX,
        (0..=m).map(|k| pow(&s, k + m).scale(&(Rational::sign_power(k + m) * binom_q(m, k)))),
    );
    let diff = dt(&(&r_next - &r), nu);
    let term = |k: i64| pow(&s, k + m - nu).scale(&(fact(nu) * binom_q(m, k) * binom_q(k + m, nu)));
    let odd_part = sum(
        TX,
        (0..m).filter(|k| odd(k + m)).map(|k| term(k).scale(&q(2))),
    );
    let even_part = sum(
        TX,
        (0..=m)
            .filter(|k| !odd(k + m))
            .map(|k| term(k).scale(&(Rational::one() - Rational::sign_power(k + m)))),
    );
    Ok(Comparison::new()
        .bipoly(Some("R(t+1)"), &r_next, &r_next_expanded)
        .bipoly(Some("R(t)"), &r, &r_expanded)
        .bipoly(Some("difference"), &diff, &odd_part)
        .bipoly(Some("even parity"), &even_part, &BiPoly::zero(TX))
        .finish("step_r_difference", params))
}

/// `R^(nu+1)(0; x)` in closed form, and its `(m-nu)`-th derivative after
/// reindexing, before and after absorbing `(j+m-nu+1)` into the binomials.
/// For `m >= 1`, `0 <= nu <= m`.
pub fn check_step_r_deriv_value(
    m: u32,
    nu: u32,
    params: Params,
) -> Result<VerificationRecord, IdentityError> {
    if m < 1 || nu > m {
        return Err(violation("step_r_deriv_value", "m >= 1, 0 <= nu <= m"));
    }
    let (m, nu) = (m as i64, nu as i64);
    let x = |c: Rational, e: i64| Poly::monomial(c, e as usize, Var::X);
    let sum_x = |terms: Vec<Poly>| terms.iter().fold(Poly::zero(Var::X), |a, p| &a + p);

    let deriv = dt(&r_poly(m), nu + 1);
    let value = deriv
        .eval_at(Var::T, &Rational::zero())
        .expect("t is an indeterminate");
    let expanded = sum_x(
        (0..=m)
            .filter(|j| j + m - nu > 0)
            .map(|j| {
                x(
                    Rational::sign_power(j + m)
                        * binom_q(m, j)
                        * binom_q(j + m, nu)
                        * q(j + m - nu),
                    j + m - nu - 1,
                )
            })
            .collect(),
    )
    .scale(&fact(nu));
    let closed = sum_x(
        (0..=m)
            .filter(|j| j + m - nu > 0)
            .map(|j| {
                x(
                    Rational::sign_power(j + m) * binom_q(m, j) * binom_q(j + m - 1, nu) * q(j + m),
                    j + m - nu - 1,
                )
            })
            .collect(),
    )
    .scale(&fact(nu));

    let higher = dt(&deriv, m - nu)
        .eval_at(Var::T, &Rational::zero())
        .expect("t is an indeterminate");
    let scale = fact(nu) * fact(m - nu);
    let reindexed = sum_x(
        (0..m)
            .map(|j| {
                let c = Rational::sign_power(j + m + 1)
                    * binom_q(m, j + 1)
                    * binom_q(j + m + 1, nu)
                    * binom_q(j + m - nu, m - nu)
                    * q(j + m - nu + 1);
                x(c, j)
            })
            .collect(),
    )
    .scale(&scale);
    let absorbed = sum_x(
        (0..m)
            .map(|j| {
                let c = Rational::sign_power(j + m + 1)
                    * binom_q(m, j + 1)
                    * binom_q(j + m, nu)
                    * binom_q(j + m - nu, m - nu)
                    * q(j + m + 1);
                x(c, j)
            })
            .collect(),
    )
    .scale(&scale);
    Ok(Comparison::new()
        .poly(Some("value"), &value, &expanded)
        .poly(Some("closed form"), &expanded, &closed)
        .poly(Some("reindexed"), &higher, &reindexed)
        .poly(Some("absorbed"), &reindexed, &absorbed)
        .finish("step_r_deriv_value", params))
}

/// `H(t; x) = (x+t)^(m+q) (x+t-1)^(n+q) + (-1)^(m+n) (t-x)^(n+q) (t-x-1)^(m+q)`:
/// the symmetry `H(-t) = H(t+1)`, both expansions, the derivative
/// `H'(t+1)` in powers of `x+t` and `t-x`, and `∫ H'(t+1) dt = 0`.
/// For `q, m, n >= 0` with `m + n > 0`.
pub fn check_step_h_symmetry(
    q_: u32,
    m: u32,
    n: u32,
    params: Params,
) -> Result<VerificationRecord, IdentityError> {
    if m + n == 0 {
        return Err(violation("step_h_symmetry", "m + n > 0"));
    }
    let (qq, m, n) = (q_ as i64, m as i64, n as i64);
    let (a, b) = (m + qq, n + qq);
    let sign = Rational::sign_power(m + n);
    let s = lin(1, 1, 0);
    let u = lin(1, -1, 0);
    let h = &(&pow(&s, a) * &pow(&lin(1, 1, -1), b))
        + &(&pow(&u, b) * &pow(&lin(1, -1, -1), a)).scale(&sign);
    let h_neg = at_t(&h, &lin(-1, 0, 0));
    let h_next = at_t(&h, &lin(1, 0, 1));
    let h_neg_expanded = &(&pow(&u, a) * &pow(&lin(1, -1, 1), b)).scale(&sign)
        + &(&pow(&s, b) * &pow(&lin(1, 1, 1), a));
    let h_next_expanded = &(&pow(&lin(1, 1, 1), a) * &pow(&s, b))
        + &(&pow(&lin(1, -1, 1), b) * &pow(&u, a)).scale(&sign);

    let dh = dt(&h, 1);
    let dh_next = at_t(&dh, &lin(1, 0, 1));
    let dh_neg = at_t(&dh, &lin(-1, 0, 0));
    let series = |base: &BiPoly, top: i64, off: i64| {
        sum(
            TX,
            (0..=top)
                .filter(|j| off + j > 0)
                .map(|j| pow(base, off + j - 1).scale(&(binom_q(top, j) * q(off + j)))),
        )
    };
    let dh_next_expanded = &series(&s, a, b) + &series(&u, b, a).scale(&sign);
    let integral = volkenborn_exact_in(&dh_next, Var::T).map_err(IdentityError::Padic)?;
    Ok(Comparison::new()
        .bipoly(Some("H(-t)=H(t+1)"), &h_neg, &h_next)
        .bipoly(Some("H(-t)"), &h_neg, &h_neg_expanded)
        .bipoly(Some("H(t+1)"), &h_next, &h_next_expanded)
        .bipoly(Some("H'(t+1)"), &dh_next, &dh_next_expanded)
        .bipoly(Some("-H'(-t)=H'(t+1)"), &-&dh_neg, &dh_next)
        .poly(Some("integral"), &integral, &Poly::zero(Var::X))
        .finish("step_h_symmetry", params))
}

/// `G(t; x) = (-1)^m (x+t)^m (x+t-1)^n`: expansions of `G(-t)` in powers of
/// `t-x` and of `G(t+1)` in powers of `x+t`, and equality of their
/// integrals over `t`. For `m, n >= 1`.
pub fn check_step_g_expansion(
    m: u32,
    n: u32,
    params: Params,
) -> Result<VerificationRecord, IdentityError> {
    if m < 1 || n < 1 {
        return Err(violation("step_g_expansion", "m, n >= 1"));
    }
    let (m, n) = (m as i64, n as i64);
    let s = lin(1, 1, 0);
    let u = lin(1, -1, 0);
    let g = (&pow(&s, m) * &pow(&lin(1, 1, -1), n)).scale(&Rational::sign_power(m));
    let g_neg = at_t(&g, &lin(-1, 0, 0));
    let g_next = at_t(&g, &lin(1, 0, 1));
    let g_neg_expanded = sum(TX, (0..=n).map(|k| pow(&u, m + k).scale(&binom_q(n, k))))
        .scale(&Rational::sign_power(n));
    let g_next_expanded = sum(TX, (0..=m).map(|k| pow(&s, n + k).scale(&binom_q(m, k))))
        .scale(&Rational::sign_power(m));
    let int_neg = volkenborn_exact_in(&g_neg, Var::T).map_err(IdentityError::Padic)?;
    let int_next = volkenborn_exact_in(&g_next, Var::T).map_err(IdentityError::Padic)?;
    Ok(Comparison::new()
        .bipoly(Some("G(-t)"), &g_neg, &g_neg_expanded)
        .bipoly(Some("G(t+1)"), &g_next, &g_next_expanded)
        .poly(Some("integrals"), &int_neg, &int_next)
        .finish("step_g_expansion", params))
}

/// `sum_j C(m,j) (x+t)^(n+j) = sum_k (-1)^(n-k) C(n,k) (x+t+1)^(m+k)`, both
/// sides being `(x+t)^n (x+t+1)^m`, and the `nu`-th `t`-derivative of it.
/// For `m + n > 0`, `0 <= nu <= m+n`.
pub fn check_step_thm4_p1(
    nu: u32,
    m: u32,
    n: u32,
    params: Params,
) -> Result<VerificationRecord, IdentityError> {
    if m + n == 0 || nu > m + n {
        return Err(violation("step_thm4_p1", "m + n > 0, 0 <= nu <= m+n"));
    }
    let (nu, m, n) = (nu as i64, m as i64, n as i64);
    let s = lin(1, 1, 0);
    let s1 = lin(1, 1, 1);
    let product = &pow(&s, n) * &pow(&s1, m);
    let lhs = sum(TX, (0..=m).map(|j| pow(&s, n + j).scale(&binom_q(m, j))));
    let rhs = sum(
        TX,
        (0..=n).map(|k| pow(&s1, m + k).scale(&(Rational::sign_power(n - k) * binom_q(n, k)))),
    );
    let p2_lhs = sum(
        TX,
        (0..=m)
            .filter(|j| n + j >= nu)
            .map(|j| pow(&s, n + j - nu).scale(&(binom_q(m, j) * binom_q(n + j, nu)))),
    );
    let p2_rhs = sum(
        TX,
        (0..=n).filter(|k| m + k >= nu).map(|k| {
            pow(&s1, m + k - nu)
                .scale(&(Rational::sign_power(n - k) * binom_q(n, k) * binom_q(m + k, nu)))
        }),
    );
    Ok(Comparison::new()
        .bipoly(Some("lhs expansion"), &product, &lhs)
        .bipoly(Some("rhs expansion"), &product, &rhs)
        .bipoly(Some("p1"), &lhs, &rhs)
        .bipoly(Some("p2 lhs"), &dt(&lhs, nu), &p2_lhs.scale(&fact(nu)))
        .bipoly(Some("p2 rhs"), &dt(&rhs, nu), &p2_rhs.scale(&fact(nu)))
        .bipoly(Some("p2"), &p2_lhs, &p2_rhs)
        .finish("step_thm4_p1", params))
}

/// `L = (-1)^m (y+t-1)^n (y+t+x-1)^m` depends on `t` and `y` only through
/// `s = y + t`. With `z = 1 - x - y`:
///
/// * `L(t+1) = (-1)^m sum_j C(m,j) x^(m-j) s^(n+j)`;
/// * `L(-t) = (-1)^n (t+x+z)^n (t+z)^m
///   = (-1)^n sum_k C(n,k) x^(n-k) (t+z)^(m+k)`, in `w = t - y`.
///
/// For `m, n >= 0`.
pub fn check_step_l_expansion(m: u32, n: u32, params: Params) -> VerificationRecord {
    let (m, n) = (m as i64, n as i64);
    let sx = (S, Var::X);
    let wx = (W, Var::X);
    let l = (&pow(&BiPoly::affine(q(1), q(0), q(-1), sx), n)
        * &pow(&BiPoly::affine(q(1), q(1), q(-1), sx), m))
        .scale(&Rational::sign_power(m));
    let sub = |by: BiPoly| l.substitute(S, &by).expect("s is an indeterminate");
    let l_next = sub(BiPoly::affine(q(1), q(0), q(1), sx));
    let l_neg = sub(BiPoly::affine(q(-1), q(0), q(0), sx)).rename(wx);

    let x_pow = |c: Rational, e: i64, vars| BiPoly::monomial(c, 0, e as u32, vars);
    let s_pow = |e: i64| BiPoly::monomial(q(1), e as u32, 0, sx);
    let l_next_expanded = sum(
        sx,
        (0..=m).map(|j| &x_pow(binom_q(m, j), m - j, sx) * &s_pow(n + j)),
    )
    .scale(&Rational::sign_power(m));
    // t + z = w + 1 - x and t + x + z = w + 1
    let t_plus_z = BiPoly::affine(q(1), q(-1), q(1), wx);
    let t_plus_x_z = BiPoly::affine(q(1), q(0), q(1), wx);
    let l_neg_product = (&pow(&t_plus_x_z, n) * &pow(&t_plus_z, m)).scale(&Rational::sign_power(n));
    let l_neg_expanded = sum(
        wx,
        (0..=n).map(|k| &x_pow(binom_q(n, k), n - k, wx) * &pow(&t_plus_z, m + k)),
    )
    .scale(&Rational::sign_power(n));
    Comparison::new()
        .bipoly(Some("L(t+1)"), &l_next, &l_next_expanded)
        .bipoly(Some("L(-t) product"), &l_neg, &l_neg_product)
        .bipoly(Some("L(-t)"), &l_neg, &l_neg_expanded)
        .finish("step_l_expansion", params)
}
