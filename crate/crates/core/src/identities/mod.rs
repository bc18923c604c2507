//! Identity families, parameter sweeps and their verification records.

mod steps;
mod theorems;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bernoulli;
use crate::exactnum::Rational;
use crate::padic::{self, PadicError};
use crate::polyring::{BiPoly, Poly, Var};

pub use crate::record::{Comparison, Params, Verdict, VerificationRecord};
pub use steps::{
    check_step_binom, check_step_g_expansion, check_step_h_symmetry, check_step_l_expansion,
    check_step_r_deriv_value, check_step_r_difference, check_step_thm4_p1,
};
pub use theorems::{
    build_alzer_kwong_poly, build_binom_shift, build_corollary, build_momiyama_ext, build_sun,
    build_thm1_part1, build_thm1_part2, build_thm1_part3, build_thm1_part4, build_wu_sun_pan,
    eval_ak_constant, eval_kaneko, ParityReading, ShiftedRhs,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("{family}: parameters outside the admissible range ({reason})")]
    ConstraintViolation {
        family: &'static str,
        reason: String,
    },
    #[error("unknown identity family `{0}`")]
    UnknownFamily(String),
    #[error("{family}: missing parameter `{name}`")]
    MissingParam {
        family: &'static str,
        name: &'static str,
    },
    #[error("{0}: coefficient corruption is only available for closed-form identity families")]
    CorruptionUnsupported(&'static str),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

macro_rules! families {
    ($($variant:ident => $tag:literal, [$($p:literal),*], $summary:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Family {
            $($variant,)*
        }

        impl Family {
            pub const ALL: &'static [Family] = &[$(Family::$variant,)*];

            pub fn tag(self) -> &'static str {
                match self {
                    $(Family::$variant => $tag,)*
                }
            }

            pub fn param_names(self) -> &'static [&'static str] {
                match self {
                    $(Family::$variant => &[$($p),*],)*
                }
            }

            /// One-line statement of what the family checks.
            pub fn summary(self) -> &'static str {
                match self {
                    $(Family::$variant => $summary,)*
                }
            }
        }
    };
}

families! {
    Thm1Part1 => "thm1_1", ["m", "nu"],
        "sum_{k+m odd} C(m,k)C(k+m,nu)C(k+m-nu,m-nu) B_k(x) in powers of x";
    Thm1Part2 => "thm1_2", ["m", "nu"],
        "sum_{k+m odd} C(m,k)C(k+m,nu)C(k+m-nu,m-nu-1) B_{k+1}(x) in powers of x";
    Thm1Part3 => "thm1_3", ["m", "nu", "l"],
        "sum_{k+m odd} C(m,k)C(k+m,nu)C(k+m-nu,l) B_{k+m-nu-l}(x) in powers of x";
    Thm1Part4 => "thm1_4", ["m", "nu", "l"],
        "sum_{k>=l, k+m odd} C(m,k)C(k+m,nu)C(k+m-nu,l+m-nu) B_{k-l}(x) in powers of x";
    Cor1 => "cor1", ["m", "l"],
        "sum_{k+m odd} C(m,k)C(k+m,l) B_{k+m-l}(x) in powers of x";
    Cor2 => "cor2", ["m", "l"],
        "sum_{k>=l, k+m odd} C(m,k)C(k+m,l+m) B_{k-l}(x) in powers of x";
    AlzerKwongPoly => "alzer_kwong_poly", ["m", "nu"],
        "sum_{k+m odd} C(m,k)C(k+m,nu) B_{k+m-nu}(x) in powers of x";
    AkConst1 => "ak_const_1", ["m", "nu"],
        "constant term of thm1_1: (-1)^(m+1) m(m+1)/2 C(m,nu)";
    AkConst2 => "ak_const_2", ["m", "nu"],
        "constant term of thm1_2: (-1)^m m/2 C(m-1,nu)";
    AkConst3 => "ak_const_3", ["m", "nu", "l"],
        "constant term of thm1_3 for l <= m-nu-2: 0";
    AkConst4 => "ak_const_4", ["m", "nu", "l"],
        "constant term of thm1_4: (-1)^(l+m+1) (l+m+1)/2 C(m,l+1)C(l+m,nu)";
    WuSunPan => "wu_sun_pan", ["m", "n"],
        "sum_k C(m,k) B_{n+k}(x) = (-1)^(n+m) sum_k C(n,k) B_{m+k}(-x)";
    MomiyamaExt => "momiyama_ext", ["q", "m", "n"],
        "sum_j C(m+q,j)(n+q+j) B_{n+q+j-1}(x) = -(-1)^(m+n) sum_k C(n+q,k)(m+q+k) B_{m+q+k-1}(-x)";
    Kaneko => "kaneko", ["n"],
        "sum_j C(n+1,j)(n+j+1) B_{n+j} = 0";
    BinomShift => "thm_binom_shift", ["nu", "m", "n"],
        "sum_j C(m,j)C(n+j,nu) B_{n+j-nu}(x) = sum_k (-1)^(n-k) C(n,k)C(m+k,nu) B_{m+k-nu}(x+1)";
    SunTrivariate => "sun_trivariate", ["m", "n"],
        "(-1)^m sum_j C(m,j) x^(m-j) B_{n+j}(y) = (-1)^n sum_k C(n,k) x^(n-k) B_{m+k}(z), x+y+z=1";
    StepBinom => "step_binom", ["j", "m", "nu"],
        "C(j+m,nu)(j+m-nu) = C(j+m-1,nu)(j+m)";
    StepRDifference => "step_r_difference", ["m", "nu"],
        "D_t^nu [R(t+1) - R(t)] keeps only k+m odd, R = (x+t)^m (x+t-1)^m";
    StepRDerivValue => "step_r_deriv_value", ["m", "nu"],
        "R^(nu+1)(0; x) and its (m-nu)-th derivative in closed form";
    StepHSymmetry => "step_h_symmetry", ["q", "m", "n"],
        "H(-t) = H(t+1), H'(t+1) expansion and its vanishing integral";
    StepGExpansion => "step_g_expansion", ["m", "n"],
        "G(-t) and G(t+1) expansions, G = (-1)^m (x+t)^m (x+t-1)^n";
    StepThm4P1 => "step_thm4_p1", ["nu", "m", "n"],
        "(x+t)^n (x+t+1)^m expanded two ways, and its nu-th derivative";
    StepLExpansion => "step_l_expansion", ["m", "n"],
        "L(t+1) and L(-t) expansions, L = (-1)^m (y+t-1)^n (y+t+x-1)^m";
    WittOracle => "witt_oracle", ["p", "n", "x0", "M"],
        "partial sums of (x0+t)^n settle on B_n(x0) in Q_p";
    VolkenbornLemma => "volkenborn_lemma", ["p", "n"],
        "reflection and shift rules for the integral of t^n";
    FunctionalEquation => "functional_equation", ["n", "r", "x0"],
        "F(x+r) - F(x) = sum_{i<r} f'(x+i) for F(x) = integral of (x+t)^n";
}

impl Family {
    pub fn is_step(self) -> bool {
        self.tag().starts_with("step_")
    }

    pub fn is_padic(self) -> bool {
        matches!(
            self,
            Family::WittOracle | Family::VolkenbornLemma | Family::FunctionalEquation
        )
    }

    /// Families whose right-hand side can be deliberately corrupted.
    pub fn supports_corruption(self) -> bool {
        !self.is_step() && !self.is_padic()
    }

    /// Every admissible parameter tuple within the configured bounds, in
    /// lexicographic order of the enumeration loops.
    pub fn instances(self, cfg: &SweepConfig) -> Vec<Params> {
        use Family::*;
        let (mm, mn, mq) = (cfg.max_m as i64, cfg.max_n as i64, cfg.max_q as i64);
        let names = self.param_names();
        let mut out = Vec::new();
        let mut push = |vals: &[i64]| {
            let entries: Vec<_> = names.iter().copied().zip(vals.iter().copied()).collect();
            out.push(Params::new(&entries));
        };
        match self {
            Thm1Part1 | AlzerKwongPoly | AkConst1 | StepRDifference | StepRDerivValue => {
                for m in 1..=mm {
                    for nu in 0..=m {
                        push(&[m, nu]);
                    }
                }
            }
            Thm1Part2 | AkConst2 => {
                for m in 1..=mm {
                    for nu in 0..m {
                        push(&[m, nu]);
                    }
                }
            }
            Thm1Part3 => {
                for m in 1..=mm {
                    for nu in 0..m {
                        for l in 0..m - nu {
                            push(&[m, nu, l]);
                        }
                    }
                }
            }
            AkConst3 => {
                for m in 1..=mm {
                    for nu in 0..=m - 2 {
                        for l in 0..=m - nu - 2 {
                            push(&[m, nu, l]);
                        }
                    }
                }
            }
            Thm1Part4 | AkConst4 => {
                for m in 1..=mm {
                    for nu in 0..=m {
                        for l in 0..m {
                            push(&[m, nu, l]);
                        }
                    }
                }
            }
            Cor1 | Cor2 => {
                for m in 1..=mm {
                    for l in 0..m {
                        push(&[m, l]);
                    }
                }
            }
            WuSunPan | StepGExpansion => {
                for m in 1..=mm {
                    for n in 1..=mn {
                        push(&[m, n]);
                    }
                }
            }
            MomiyamaExt | StepHSymmetry => {
                for q in 0..=mq {
                    for m in 0..=mm {
                        for n in 0..=mn {
                            if m + n > 0 {
                                push(&[q, m, n]);
                            }
                        }
                    }
                }
            }
            Kaneko => {
                for n in 1..=mn {
                    push(&[n]);
                }
            }
            BinomShift | StepThm4P1 => {
                for m in 0..=mm {
                    for n in 0..=mn {
                        if m + n > 0 {
                            for nu in 0..=m + n {
                                push(&[nu, m, n]);
                            }
                        }
                    }
                }
            }
            SunTrivariate | StepLExpansion => {
                for m in 0..=mm {
                    for n in 0..=mn {
                        push(&[m, n]);
                    }
                }
            }
            StepBinom => {
                for j in 0..=mn {
                    for m in 1..=mm {
                        for nu in 0..=j + m {
                            push(&[j, m, nu]);
                        }
                    }
                }
            }
            WittOracle => {
                for &p in &cfg.primes {
                    for n in 0..=mn {
                        for x0 in 0..=2 {
                            push(&[p as i64, n, x0, cfg.precision as i64]);
                        }
                    }
                }
            }
            VolkenbornLemma => {
                for &p in &cfg.primes {
                    for n in 0..=mn {
                        push(&[p as i64, n]);
                    }
                }
            }
            FunctionalEquation => {
                for n in 0..=mn {
                    for r in 1..=3 {
                        for x0 in 0..=2 {
                            push(&[n, r, x0]);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.tag() == s)
            .ok_or_else(|| IdentityError::UnknownFamily(s.to_string()))
    }
}

/// Bounds and readings shared by every family in a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_m: u32,
    pub max_n: u32,
    pub max_q: u32,
    pub primes: Vec<u64>,
    pub precision: u32,
    pub parity: ParityReading,
    pub shifted_rhs: ShiftedRhs,
    /// Adds 1 to the constant coefficient of every right-hand side of this
    /// family, to exercise failure reporting.
    pub corrupt: Option<Family>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_m: 12,
            max_n: 12,
            max_q: 12,
            primes: vec![2, 3, 5, 7],
            precision: 4,
            parity: ParityReading::default(),
            shifted_rhs: ShiftedRhs::default(),
            corrupt: None,
        }
    }
}

impl SweepConfig {
    /// Highest Bernoulli index any family can reach within these bounds.
    pub fn bernoulli_bound(&self) -> usize {
        (2 * (self.max_m + self.max_n + self.max_q) + 4) as usize
    }
}

fn arg(family: Family, params: &Params, name: &'static str) -> Result<u32, IdentityError> {
    let v = params.get(name).ok_or(IdentityError::MissingParam {
        family: family.tag(),
        name,
    })?;
    u32::try_from(v).map_err(|_| IdentityError::ConstraintViolation {
        family: family.tag(),
        reason: format!("{name} must be a nonnegative integer"),
    })
}

fn bump(p: Poly) -> Poly {
    let one = Poly::one(p.var());
    &p + &one
}

/// Checks a single instance of `family`.
pub fn verify_instance(
    family: Family,
    params: &Params,
    cfg: &SweepConfig,
) -> Result<VerificationRecord, IdentityError> {
    use Family::*;
    if cfg.corrupt == Some(family) && !family.supports_corruption() {
        return Err(IdentityError::CorruptionUnsupported(family.tag()));
    }
    let corrupt = cfg.corrupt == Some(family);
    let a = |name| arg(family, params, name);
    let poly = |(l, r): (Poly, Poly)| {
        let r = if corrupt { bump(r) } else { r };
        Comparison::new()
            .poly(None, &l, &r)
            .finish(family.tag(), params.clone())
    };
    let value = |(l, r): (Rational, Rational)| {
        let r = if corrupt { r + Rational::one() } else { r };
        Comparison::new()
            .value(None, &l, &r)
            .finish(family.tag(), params.clone())
    };
    let p = params.clone();
    let record = match family {
        Thm1Part1 => poly(build_thm1_part1(a("m")?, a("nu")?)?),
        Thm1Part2 => poly(build_thm1_part2(a("m")?, a("nu")?)?),
        Thm1Part3 => poly(build_thm1_part3(a("m")?, a("nu")?, a("l")?)?),
        Thm1Part4 => poly(build_thm1_part4(
            a("m")?,
            a("nu")?,
            a("l")?,
            cfg.shifted_rhs,
        )?),
        Cor1 => poly(build_corollary(1, a("m")?, a("l")?, cfg.shifted_rhs)?),
        Cor2 => poly(build_corollary(2, a("m")?, a("l")?, cfg.shifted_rhs)?),
        AlzerKwongPoly => poly(build_alzer_kwong_poly(a("m")?, a("nu")?)?),
        AkConst1 => value(eval_ak_constant(1, a("m")?, a("nu")?, None, cfg.parity)?),
        AkConst2 => value(eval_ak_constant(2, a("m")?, a("nu")?, None, cfg.parity)?),
        AkConst3 => value(eval_ak_constant(
            3,
            a("m")?,
            a("nu")?,
            Some(a("l")?),
            cfg.parity,
        )?),
        AkConst4 => value(eval_ak_constant(
            4,
            a("m")?,
            a("nu")?,
            Some(a("l")?),
            cfg.parity,
        )?),
        WuSunPan => poly(build_wu_sun_pan(a("m")?, a("n")?)?),
        MomiyamaExt => poly(build_momiyama_ext(a("q")?, a("m")?, a("n")?)?),
        Kaneko => value((eval_kaneko(a("n")?)?, Rational::zero())),
        BinomShift => poly(build_binom_shift(a("nu")?, a("m")?, a("n")?)?),
        SunTrivariate => {
            let (l, r) = build_sun(a("m")?, a("n")?);
            let r = if corrupt {
                &r + &BiPoly::one(r.vars())
            } else {
                r
            };
            Comparison::new()
                .bipoly(None, &l, &r)
                .finish(family.tag(), p)
        }
        StepBinom => check_step_binom(a("j")?, a("m")?, a("nu")?, p)?,
        StepRDifference => check_step_r_difference(a("m")?, a("nu")?, p)?,
        StepRDerivValue => check_step_r_deriv_value(a("m")?, a("nu")?, p)?,
        StepHSymmetry => check_step_h_symmetry(a("q")?, a("m")?, a("n")?, p)?,
        StepGExpansion => check_step_g_expansion(a("m")?, a("n")?, p)?,
        StepThm4P1 => check_step_thm4_p1(a("nu")?, a("m")?, a("n")?, p)?,
        StepLExpansion => check_step_l_expansion(a("m")?, a("n")?, p),
        WittOracle => {
            let x0 = params.get("x0").ok_or(IdentityError::MissingParam {
                family: family.tag(),
                name: "x0",
            })?;
            padic::check_witt(a("n")?, x0, a("p")? as u64, a("M")?)?
        }
        VolkenbornLemma => {
            let f = Poly::monomial(Rational::one(), a("n")? as usize, Var::T);
            padic::check_lemma1_with(&f, a("p")? as u64, p)?
        }
        FunctionalEquation => {
            let f = Poly::monomial(Rational::one(), a("n")? as usize, Var::T);
            padic::check_functional_equation_with(&f, &Rational::from(a("x0")?), a("r")?, p)?
        }
    };
    Ok(record)
}

/// Checks every instance of `family` within the configured bounds, in
/// parallel; records come back in enumeration order.
pub fn sweep(family: Family, cfg: &SweepConfig) -> Result<Vec<VerificationRecord>, IdentityError> {
    sweep_families(&[family], cfg)
}

pub fn sweep_families(
    families: &[Family],
    cfg: &SweepConfig,
) -> Result<Vec<VerificationRecord>, IdentityError> {
    bernoulli::cache().warm(cfg.bernoulli_bound());
    let jobs: Vec<(Family, Params)> = families
        .iter()
        .flat_map(|&f| f.instances(cfg).into_iter().map(move |p| (f, p)))
        .collect();
    jobs.par_iter()
        .map(|(f, p)| verify_instance(*f, p, cfg))
        .collect()
}
