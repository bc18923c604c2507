//! Bernoulli numbers and polynomials, with the convention `B_1 = -1/2`
//! (`B_n = B_n(0)`).

use std::sync::{LazyLock, RwLock};

use crate::exactnum::{binom_q, Rational};
use crate::polyring::{Poly, Var};

/// Memo of `B_n` and `B_n(x)`, grown monotonically on demand.
///
/// Reads of already computed entries only take the shared lock; growth takes
/// the exclusive lock once per extension.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    inner: RwLock<Tables>,
}

#[derive(Debug, Default)]
struct Tables {
    numbers: Vec<Rational>,
    polynomials: Vec<Poly>,
}

impl Tables {
    fn grow_numbers(&mut self, n: usize) {
        if self.numbers.is_empty() {
            self.numbers.push(Rational::one());
        }
        // sum_{j=0}^{k} C(k+1, j) B_j = 0
        while self.numbers.len() <= n {
            let k = self.numbers.len() as i64;
            if k > 1 && k % 2 == 1 {
                self.numbers.push(Rational::zero());
                continue;
            }
            let s: Rational = self
                .numbers
                .iter()
                .enumerate()
                .map(|(j, b)| binom_q(k + 1, j as i64) * b)
                .sum();
            self.numbers.push(-s / Rational::from(k + 1));
        }
    }

    fn grow_polynomials(&mut self, n: usize) {
        self.grow_numbers(n);
        while self.polynomials.len() <= n {
            let k = self.polynomials.len();
            // coefficient of x^{k-j} is C(k, j) B_j
            let coeffs = (0..=k)
                .map(|i| binom_q(k as i64, (k - i) as i64) * &self.numbers[k - i])
                .collect();
            self.polynomials.push(Poly::from_coeffs(coeffs, Var::X));
        }
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Precomputes every entry up to index `n`.
    pub fn warm(&self, n: usize) {
        let ready = self
            .inner
            .read()
            .expect("bernoulli cache poisoned")
            .polynomials
            .len()
            > n;
        if !ready {
            self.inner
                .write()
                .expect("bernoulli cache poisoned")
                .grow_polynomials(n);
        }
    }

    pub fn number(&self, n: usize) -> Rational {
        if let Some(b) = self
            .inner
            .read()
            .expect("bernoulli cache poisoned")
            .numbers
            .get(n)
        {
            return b.clone();
        }
        let mut t = self.inner.write().expect("bernoulli cache poisoned");
        t.grow_numbers(n);
        t.numbers[n].clone()
    }

    /// `B_n(x)` in the indeterminate `x`.
    pub fn polynomial(&self, n: usize) -> Poly {
        if let Some(p) = self
            .inner
            .read()
            .expect("bernoulli cache poisoned")
            .polynomials
            .get(n)
        {
            return p.clone();
        }
        let mut t = self.inner.write().expect("bernoulli cache poisoned");
        t.grow_polynomials(n);
        t.polynomials[n].clone()
    }

    pub fn at(&self, n: usize, a: &Rational) -> Rational {
        self.polynomial(n).eval(a)
    }

    /// Number of polynomial entries currently memoized.
    pub fn len(&self) -> usize {
        self.inner
            .read()
            .expect("bernoulli cache poisoned")
            .polynomials
            .len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

static GLOBAL: LazyLock<BernoulliCache> = LazyLock::new(BernoulliCache::new);

/// The process-wide cache used by the free functions below.
pub fn cache() -> &'static BernoulliCache {
    &GLOBAL
}

pub fn bernoulli_number(n: usize) -> Rational {
    GLOBAL.number(n)
}

pub fn bernoulli_polynomial(n: usize) -> Poly {
    GLOBAL.polynomial(n)
}

pub fn bernoulli_at(n: usize, a: &Rational) -> Rational {
    GLOBAL.at(n, a)
}
