//! Generating polynomials of `(des_L, rmaj_{L,n})` and `des_L` over `C_a ≀ S_n`.
//!
//! `A^maj_{a,L,n}(t,q) = Σ_σ t^{des_L σ} q^{rmaj_{L,n} σ}` is built two ways:
//! by enumerating the group and by the coefficient recurrence in `n`. The two
//! agree for every `L`, which is why the recurrence only needs `ℓ = |L|`.
//! The Eulerian polynomials `A_{a,ℓ,n}(t) = A^maj_{a,ℓ,n}(t,1)` have four
//! constructions.

mod verify;

use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{q_int, BiPoly};
use crate::perm::{
    check_guard, des_rmaj, ColoredPermutation, GroupElements, LOrder, DEFAULT_ENUMERATION_LIMIT,
};
use crate::{Error, Result};

pub use verify::{verify_identity, Identity, Source, VerificationReport, VerifyParams, Witness};

/// Parameters of `A^maj_{a,ℓ,n}`, optionally pinning an explicit `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MahonianSpec {
    pub a: u32,
    pub ell: u32,
    pub n: usize,
    colors: Option<Vec<u32>>,
}

impl MahonianSpec {
    pub fn new(a: u32, ell: u32, n: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameter("a must be at least 1".into()));
        }
        if ell > a {
            return Err(Error::InvalidParameter(format!(
                "ℓ = {ell} exceeds a = {a}"
            )));
        }
        Ok(MahonianSpec {
            a,
            ell,
            n,
            colors: None,
        })
    }

    /// Spec with an explicit color set `L`; `ℓ` is taken from it.
    pub fn with_colors(a: u32, colors: &[u32], n: usize) -> Result<Self> {
        let order = LOrder::new(a, colors)?;
        Ok(MahonianSpec {
            a,
            ell: order.ell(),
            n,
            colors: Some(order.colors()),
        })
    }

    pub fn colors(&self) -> Option<&[u32]> {
        self.colors.as_deref()
    }

    /// The explicit `L`, or `{0, …, ℓ-1}`.
    pub fn order(&self) -> Result<LOrder> {
        match &self.colors {
            Some(c) => LOrder::new(self.a, c),
            None => LOrder::first_colors(self.a, self.ell),
        }
    }

    /// The explicit `L` alone, or every `L` with `|L| = ℓ`.
    pub fn orders(&self) -> Result<Vec<LOrder>> {
        match &self.colors {
            Some(c) => Ok(vec![LOrder::new(self.a, c)?]),
            None => Ok(LOrder::subsets_of_size(self.a, self.ell)),
        }
    }
}

/// Limits and threading for enumeration-backed constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Largest group `a^n · n!` that may be enumerated.
    pub limit: u64,
    /// Split the group across the rayon pool and merge partial counts.
    pub parallel: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            limit: DEFAULT_ENUMERATION_LIMIT,
            parallel: false,
        }
    }
}

impl EnumConfig {
    pub fn parallel() -> Self {
        EnumConfig {
            parallel: true,
            ..Self::default()
        }
    }
}

const CHUNK: u64 = 1 << 14;

/// `Σ_σ t^{x(σ)} q^{y(σ)}` over `C_a ≀ S_n` for a pair of statistics with
/// `x <= n` and `y <= n(n+1)/2`.
pub fn joint_distribution<F>(a: u32, n: usize, cfg: &EnumConfig, stat: F) -> Result<BiPoly>
where
    F: Fn(&ColoredPermutation) -> (usize, usize) + Sync,
{
    if a == 0 {
        return Err(Error::InvalidParameter("a must be at least 1".into()));
    }
    let size = check_guard(a, n, cfg.limit)?;
    let width = n * (n + 1) / 2 + 1;
    let cells = (n + 1) * width;
    let count_range = |start: u64, end: u64| {
        let mut table = vec![0u64; cells];
        GroupElements::range(a, n, start, end).for_each_ref(|sigma| {
            let (x, y) = stat(sigma);
            table[x * width + y] += 1;
        });
        table
    };

    let table = if cfg.parallel && size > CHUNK {
        let chunks = size.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .map(|c| count_range(c * CHUNK, ((c + 1) * CHUNK).min(size)))
            .reduce(
                || vec![0u64; cells],
                |mut acc, part| {
                    acc.iter_mut().zip(part).for_each(|(x, y)| *x += y);
                    acc
                },
            )
    } else {
        count_range(0, size)
    };

    Ok(BiPoly::from_terms(
        table
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, &c)| (((idx / width) as u32, (idx % width) as u32), c)),
    ))
}

/// `A^maj_{a,L,n}(t,q)` by enumerating `C_a ≀ S_n`.
pub fn maj_a_enumerate(order: &LOrder, n: usize, cfg: &EnumConfig) -> Result<BiPoly> {
    joint_distribution(order.modulus(), n, cfg, |sigma| {
        des_rmaj(sigma.window(), order)
    })
}

/// One step of the recurrence in `n`: from `A^maj_{a,ℓ,n-1}` to `A^maj_{a,ℓ,n}`,
///
/// `A_{n,s} = (a[s+1]_q - ℓ) A_{n-1,s} + (a q^s [n-s]_q + ℓ q^n) A_{n-1,s-1}`.
pub fn maj_a_step(a: u32, ell: u32, n: usize, prev: &BiPoly) -> BiPoly {
    let a_big = BigInt::from(a);
    let ell_const = BiPoly::constant(ell);
    let n32 = n as u32;
    let mut coeffs = Vec::with_capacity(n + 1);
    for s in 0..=n32 {
        let stay = &q_int(s + 1).scale(&a_big) - &ell_const;
        let mut c = &stay * &prev.coeff_t(s);
        if s > 0 {
            let rise = &q_int(n32 - s).scale(&a_big).shift(0, s) + &BiPoly::monomial(ell, 0, n32);
            c += &rise * &prev.coeff_t(s - 1);
        }
        coeffs.push(c);
    }
    BiPoly::from_t_coeffs(&coeffs)
}

fn check_range(a: u32, ell: u32) -> Result<()> {
    MahonianSpec::new(a, ell, 0).map(|_| ())
}

/// `A^maj_{a,ℓ,0}, …, A^maj_{a,ℓ,n}` by the recurrence from `A^maj_{a,ℓ,0} = 1`.
pub fn maj_a_sequence(a: u32, ell: u32, n: usize) -> Result<Vec<BiPoly>> {
    check_range(a, ell)?;
    let mut out = vec![BiPoly::one()];
    for m in 1..=n {
        let next = maj_a_step(a, ell, m, &out[m - 1]);
        out.push(next);
    }
    Ok(out)
}

/// `A^maj_{a,ℓ,n}(t,q)` by the recurrence.
pub fn maj_a_recurrence(a: u32, ell: u32, n: usize) -> Result<BiPoly> {
    Ok(maj_a_sequence(a, ell, n)?
        .pop()
        .expect("sequence is never empty"))
}

/// How to build `A_{a,ℓ,n}(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerianMethod {
    /// Count `des_L` over the group.
    Enumerate,
    /// `A_{n,s} = (a(s+1) - ℓ) A_{n-1,s} + (a(n-s) + ℓ) A_{n-1,s-1}`.
    Recurrence,
    /// `A_n = (a - ℓ + (a(n-1) + ℓ)t) A_{n-1} + a t (1-t) A'_{n-1}`.
    Derivative,
    /// `A^maj_{a,ℓ,n}(t, 1)`.
    Specialize,
}

impl EulerianMethod {
    pub const ALL: [EulerianMethod; 4] = [
        EulerianMethod::Enumerate,
        EulerianMethod::Recurrence,
        EulerianMethod::Derivative,
        EulerianMethod::Specialize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EulerianMethod::Enumerate => "enumerate",
            EulerianMethod::Recurrence => "recurrence",
            EulerianMethod::Derivative => "derivative",
            EulerianMethod::Specialize => "specialize",
        }
    }
}

impl FromStr for EulerianMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown method {s:?}")))
    }
}

fn eulerian_step_recurrence(a: u32, ell: u32, n: usize, prev: &BiPoly) -> BiPoly {
    let (a, ell, n) = (i64::from(a), i64::from(ell), n as i64);
    BiPoly::from_terms((0..=n).map(|s| {
        let mut c = BigInt::from(a * (s + 1) - ell) * prev.coeff(s as u32, 0);
        if s > 0 {
            c += BigInt::from(a * (n - s) + ell) * prev.coeff(s as u32 - 1, 0);
        }
        ((s as u32, 0), c)
    }))
}

fn eulerian_step_derivative(a: u32, ell: u32, n: usize, prev: &BiPoly) -> BiPoly {
    let linear = BiPoly::from_terms([
        ((0, 0), i64::from(a) - i64::from(ell)),
        ((1, 0), i64::from(a) * (n as i64 - 1) + i64::from(ell)),
    ]);
    let t_one_minus_t = BiPoly::from_terms([((1, 0), i64::from(a)), ((2, 0), -i64::from(a))]);
    &(&linear * prev) + &(&t_one_minus_t * &prev.derivative_t())
}

/// `A_{a,ℓ,0}(t), …, A_{a,ℓ,n}(t)`. For [`EulerianMethod::Enumerate`] the
/// color set comes from `spec`; the other methods use only `ℓ`.
pub fn eulerian_sequence(
    spec: &MahonianSpec,
    method: EulerianMethod,
    cfg: &EnumConfig,
) -> Result<Vec<BiPoly>> {
    let (a, ell, n) = (spec.a, spec.ell, spec.n);
    check_range(a, ell)?;
    match method {
        EulerianMethod::Enumerate => {
            let order = spec.order()?;
            check_guard(a, n, cfg.limit)?;
            (0..=n)
                .map(|m| {
                    joint_distribution(a, m, cfg, |sigma| (des_rmaj(sigma.window(), &order).0, 0))
                })
                .collect()
        }
        EulerianMethod::Specialize => Ok(maj_a_sequence(a, ell, n)?
            .iter()
            .map(BiPoly::eval_q1)
            .collect()),
        EulerianMethod::Recurrence | EulerianMethod::Derivative => {
            let step = if method == EulerianMethod::Recurrence {
                eulerian_step_recurrence
            } else {
                eulerian_step_derivative
            };
            let mut out = vec![BiPoly::one()];
            for m in 1..=n {
                let next = step(a, ell, m, &out[m - 1]);
                out.push(next);
            }
            Ok(out)
        }
    }
}

/// `A_{a,ℓ,n}(t) = Σ_σ t^{des_L σ}`.
pub fn eulerian(spec: &MahonianSpec, method: EulerianMethod, cfg: &EnumConfig) -> Result<BiPoly> {
    let (a, ell, n) = (spec.a, spec.ell, spec.n);
    match method {
        EulerianMethod::Enumerate => {
            let order = spec.order()?;
            joint_distribution(a, n, cfg, |sigma| (des_rmaj(sigma.window(), &order).0, 0))
        }
        EulerianMethod::Specialize => Ok(maj_a_recurrence(a, ell, n)?.eval_q1()),
        _ => Ok(eulerian_sequence(spec, method, cfg)?
            .pop()
            .expect("sequence is never empty")),
    }
}
