//! Exact verification of the identities satisfied by `A^maj_{a,ℓ,n}` and
//! `A_{a,ℓ,n}`.
//!
//! Identities involving quotients are checked multiplied through by their
//! denominators, so that every comparison is an equality of polynomials (or
//! of truncated `u`-series with polynomial coefficients).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{
    eulerian_sequence, joint_distribution, maj_a_enumerate, maj_a_sequence, maj_a_step, EnumConfig,
    EulerianMethod, MahonianSpec,
};
use crate::algebra::{q_int, q_poch_t, BiPoly, TPolyQ, USeries};
use crate::perm::{
    check_guard, des_rmaj, enumerate_group, lemma_violation, tilde_descent_data, LOrder,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// The coefficient recurrence, checked on enumerated polynomials.
    Recursion,
    /// `(1-q)A_n(t,q) = (a-(1-q)ℓ)(1-tq^n)A_{n-1}(t,q) - aq(1-t)A_{n-1}(tq,q)`.
    Recursion2,
    /// `A_n(t,q) = (t;q)_{n+1} Σ_s t^s (a[s+1]_q - ℓ)^n`, truncated in `t`.
    Quotient,
    /// `A_n(t) = (1-t)^{n+1} Σ_s t^s (a(s+1) - ℓ)^n`, truncated in `t`.
    DesQuotient,
    /// `Σ_n u^n/n! A_n(t) · (e^{(a-ℓ)(t-1)u} - t e^{ℓ(1-t)u}) = 1 - t`.
    Gf,
    /// Both exponential generating functions of the quotients, one `u`-coefficient at a time.
    Egf,
    /// The effect of inserting the maximal letter on `(des_L, rmaj_{L,n})`.
    Lemma,
    /// `A^maj_{a,L,n}` is the same for every `L` of a given size.
    LIndependence,
    /// `(des, maj)` and `(des, rmaj_{∅,n})` are equidistributed on `S_n`.
    MajRmaj,
    /// `(des~_L, maj~_L)` and `(des_{L^c}, rmaj_{L^c,n})` are equidistributed.
    Tilde,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::Recursion,
        Identity::Recursion2,
        Identity::Quotient,
        Identity::DesQuotient,
        Identity::Gf,
        Identity::Egf,
        Identity::Lemma,
        Identity::LIndependence,
        Identity::MajRmaj,
        Identity::Tilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Recursion => "recursion",
            Identity::Recursion2 => "recursion2",
            Identity::Quotient => "quotient",
            Identity::DesQuotient => "des-quotient",
            Identity::Gf => "gf",
            Identity::Egf => "egf",
            Identity::Lemma => "lemma",
            Identity::LIndependence => "l-independence",
            Identity::MajRmaj => "maj-rmaj",
            Identity::Tilde => "tilde",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Which construction supplies the polynomials an identity is checked on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Source {
    #[default]
    Recurrence,
    Enumeration,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Recurrence => "recurrence",
            Source::Enumeration => "enumeration",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyParams {
    pub spec: MahonianSpec,
    /// `S`: highest power of `t` compared by the quotient checks (default `n + 3`).
    pub t_truncation: Option<usize>,
    /// `N`: order in `u` of the generating-function checks (default 5 for
    /// `egf`, 6 for `gf`).
    pub u_order: Option<usize>,
    pub source: Source,
    pub enumeration: EnumConfig,
}

impl VerifyParams {
    pub fn new(spec: MahonianSpec) -> Self {
        VerifyParams {
            spec,
            t_truncation: None,
            u_order: None,
            source: Source::default(),
            enumeration: EnumConfig::default(),
        }
    }

    pub fn t_truncation(mut self, s: usize) -> Self {
        self.t_truncation = Some(s);
        self
    }

    pub fn u_order(mut self, n: usize) -> Self {
        self.u_order = Some(n);
        self
    }

    pub fn source(mut self, source: Source) -> Self {
        self.source = source;
        self
    }

    pub fn enumeration(mut self, cfg: EnumConfig) -> Self {
        self.enumeration = cfg;
        self
    }
}

/// The first place an identity fails. `t`/`q` locate a coefficient; `u` is
/// set for series identities and `element` names the permutation or color set
/// involved when there is one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub t: u32,
    pub q: u32,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
}

impl Witness {
    fn with_element(mut self, element: String) -> Self {
        self.element = Some(element);
        self
    }

    fn with_u(mut self, u: usize) -> Self {
        self.u = Some(u);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    pub a: u32,
    pub ell: u32,
    pub n: usize,
    #[serde(rename = "L", skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<u32>>,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub t_truncation: Option<usize>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub u_order: Option<usize>,
    pub source: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: ReportParams,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    fn new(identity: Identity, params: ReportParams, witness: Option<Witness>) -> Self {
        VerificationReport {
            identity: identity.name().to_string(),
            params,
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Runs one identity check and reports the first discrepancy, if any.
pub fn verify_identity(identity: Identity, params: &VerifyParams) -> Result<VerificationReport> {
    let spec = &params.spec;
    let n = spec.n;
    let mut report_params = ReportParams {
        a: spec.a,
        ell: spec.ell,
        n,
        colors: spec.colors().map(<[u32]>::to_vec),
        t_truncation: None,
        u_order: None,
        source: params.source.name(),
    };

    let witness = match identity {
        Identity::Recursion => check_recursion(params)?,
        Identity::Recursion2 => check_recursion2(params)?,
        Identity::Quotient | Identity::DesQuotient => {
            let s = params.t_truncation.unwrap_or(n + 3);
            report_params.t_truncation = Some(s);
            if identity == Identity::Quotient {
                check_quotient(params, n, s)?
            } else {
                check_des_quotient(params, n, s)?
            }
        }
        Identity::Gf | Identity::Egf => {
            let default = if identity == Identity::Gf { 6 } else { 5 };
            let order = params.u_order.unwrap_or(default);
            report_params.u_order = Some(order);
            if identity == Identity::Gf {
                check_gf(params, order)?
            } else {
                check_egf(params, order)?
            }
        }
        Identity::Lemma => check_lemma(params)?,
        Identity::LIndependence => check_l_independence(params)?,
        Identity::MajRmaj => check_maj_rmaj(params)?,
        Identity::Tilde => check_tilde(params)?,
    };
    Ok(VerificationReport::new(identity, report_params, witness))
}

fn poly_witness(lhs: &BiPoly, rhs: &BiPoly) -> Option<Witness> {
    lhs.first_difference(rhs).map(|((t, q), l, r)| Witness {
        t,
        q,
        lhs: l.to_string(),
        rhs: r.to_string(),
        u: None,
        element: None,
    })
}

fn color_set(order: &LOrder) -> String {
    let colors: Vec<String> = order.colors().iter().map(u32::to_string).collect();
    format!("L={{{}}}", colors.join(","))
}

/// `A^maj_{a,ℓ,0..=upto}` from the chosen source.
fn maj_a_polys(params: &VerifyParams, upto: usize) -> Result<Vec<BiPoly>> {
    let spec = &params.spec;
    match params.source {
        Source::Recurrence => maj_a_sequence(spec.a, spec.ell, upto),
        Source::Enumeration => {
            let order = spec.order()?;
            check_guard(spec.a, upto, params.enumeration.limit)?;
            (0..=upto)
                .map(|m| maj_a_enumerate(&order, m, &params.enumeration))
                .collect()
        }
    }
}

/// `A_{a,ℓ,0..=upto}(t)` from the chosen source.
fn eulerian_polys(params: &VerifyParams, upto: usize) -> Result<Vec<BiPoly>> {
    let mut spec = params.spec.clone();
    spec.n = upto;
    let method = match params.source {
        Source::Recurrence => EulerianMethod::Recurrence,
        Source::Enumeration => EulerianMethod::Enumerate,
    };
    eulerian_sequence(&spec, method, &params.enumeration)
}

fn check_recursion(params: &VerifyParams) -> Result<Option<Witness>> {
    let spec = &params.spec;
    let order = spec.order()?;
    let cfg = &params.enumeration;
    let actual = maj_a_enumerate(&order, spec.n, cfg)?;
    let predicted = if spec.n == 0 {
        BiPoly::one()
    } else {
        let prev = maj_a_enumerate(&order, spec.n - 1, cfg)?;
        maj_a_step(spec.a, order.ell(), spec.n, &prev)
    };
    Ok(poly_witness(&actual, &predicted))
}

fn check_recursion2(params: &VerifyParams) -> Result<Option<Witness>> {
    let spec = &params.spec;
    let n = spec.n;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "recursion2 relates n to n-1 and needs n >= 1".into(),
        ));
    }
    let polys = maj_a_polys(params, n)?;
    let (cur, prev) = (&polys[n], &polys[n - 1]);
    let one_minus_q = BiPoly::one() - BiPoly::q();
    let one_minus_t = BiPoly::one() - BiPoly::t();
    let a = BiPoly::constant(spec.a);

    let lhs = &one_minus_q * cur;
    let factor = &a - &one_minus_q.scale(&BigInt::from(spec.ell));
    let first = &(&factor * &(BiPoly::one() - BiPoly::monomial(1, 1, n as u32))) * prev;
    let second = &(&BiPoly::monomial(spec.a, 0, 1) * &one_minus_t) * &prev.subst_t_tq();
    let rhs = &first - &second;
    Ok(poly_witness(&lhs, &rhs))
}

fn require_truncation(n: usize, s: usize) -> Result<()> {
    if s < n {
        return Err(Error::InvalidParameter(format!(
            "t-truncation S = {s} must be at least n = {n}"
        )));
    }
    Ok(())
}

/// `(t;q)_{n+1} · Σ_{s=0}^{S} t^s (a[s+1]_q - ℓ)^n` against `A^maj_{a,ℓ,n}`, up to `t^S`.
fn quotient_witness(a: u32, ell: u32, n: usize, s_max: usize, poly: &BiPoly) -> Option<Witness> {
    let ell_const = BiPoly::constant(ell);
    let mut sum = BiPoly::zero();
    for s in 0..=s_max as u32 {
        let base = &q_int(s + 1).scale(&BigInt::from(a)) - &ell_const;
        sum += base.pow(n as u32).shift(s, 0);
    }
    let rhs = (&q_poch_t(n as u32 + 1) * &sum).truncate_t(s_max as u32);
    poly_witness(&poly.truncate_t(s_max as u32), &rhs)
}

/// The same at `q = 1`: `(1-t)^{n+1} Σ_{s=0}^{S} t^s (a(s+1) - ℓ)^n`.
fn des_quotient_witness(
    a: u32,
    ell: u32,
    n: usize,
    s_max: usize,
    poly: &BiPoly,
) -> Option<Witness> {
    let sum = BiPoly::from_terms((0..=s_max as u32).map(|s| {
        let base = BigInt::from(i64::from(a) * i64::from(s + 1) - i64::from(ell));
        ((s, 0), num_traits::Pow::pow(base, n as u32))
    }));
    let one_minus_t = BiPoly::one() - BiPoly::t();
    let rhs = (&one_minus_t.pow(n as u32 + 1) * &sum).truncate_t(s_max as u32);
    poly_witness(&poly.truncate_t(s_max as u32), &rhs)
}

fn check_quotient(params: &VerifyParams, n: usize, s_max: usize) -> Result<Option<Witness>> {
    require_truncation(n, s_max)?;
    let polys = maj_a_polys(params, n)?;
    Ok(quotient_witness(
        params.spec.a,
        params.spec.ell,
        n,
        s_max,
        &polys[n],
    ))
}

fn check_des_quotient(params: &VerifyParams, n: usize, s_max: usize) -> Result<Option<Witness>> {
    require_truncation(n, s_max)?;
    let polys = eulerian_polys(params, n)?;
    Ok(des_quotient_witness(
        params.spec.a,
        params.spec.ell,
        n,
        s_max,
        &polys[n],
    ))
}

/// Coefficient `u^m/m!` of both exponential generating functions reduces to
/// the quotient identity at `n = m`, since the `1/m!` appears on both sides.
fn check_egf(params: &VerifyParams, order: usize) -> Result<Option<Witness>> {
    let (a, ell) = (params.spec.a, params.spec.ell);
    let maj = maj_a_polys(params, order)?;
    let des = eulerian_polys(params, order)?;
    for m in 0..=order {
        let s_max = m + 3;
        if let Some(w) = quotient_witness(a, ell, m, s_max, &maj[m]) {
            return Ok(Some(w.with_u(m).with_element("q-quotient".into())));
        }
        if let Some(w) = des_quotient_witness(a, ell, m, s_max, &des[m]) {
            return Ok(Some(w.with_u(m).with_element("des-quotient".into())));
        }
    }
    Ok(None)
}

fn check_gf(params: &VerifyParams, order: usize) -> Result<Option<Witness>> {
    let (a, ell) = (i64::from(params.spec.a), i64::from(params.spec.ell));
    let polys = eulerian_polys(params, order)?;

    let mut factorial = BigInt::from(1);
    let mut lhs_coeffs = Vec::with_capacity(order + 1);
    for (m, p) in polys.iter().enumerate() {
        if m > 0 {
            factorial *= m;
        }
        let inv = BigRational::new(1.into(), factorial.clone());
        let c = TPolyQ::from_bipoly(p).expect("Eulerian polynomials are free of q");
        lhs_coeffs.push(c.scale(&inv));
    }
    let egf = USeries::from_coeffs(lhs_coeffs);

    // e^{ℓ(1-t)u} and e^{(a-ℓ)(t-1)u}
    let exp_l = USeries::monomial(order, 1, TPolyQ::from_ints(&[ell, -ell])).exp()?;
    let exp_u = USeries::monomial(order, 1, TPolyQ::from_ints(&[ell - a, a - ell])).exp()?;
    let denominator = &exp_u - &exp_l.scale(&TPolyQ::from_ints(&[0, 1]));
    let product = &egf * &denominator;
    let expected = USeries::constant(order, TPolyQ::from_ints(&[1, -1]));

    let Some(k) = product.first_difference(&expected)? else {
        return Ok(None);
    };
    let (l, r) = (product.coeff(k), expected.coeff(k));
    let len = l.coeffs().len().max(r.coeffs().len());
    let i = (0..len).find(|&i| l.coeff(i) != r.coeff(i)).unwrap_or(0);
    Ok(Some(Witness {
        t: i as u32,
        q: 0,
        lhs: l.coeff(i).to_string(),
        rhs: r.coeff(i).to_string(),
        u: Some(k),
        element: None,
    }))
}

fn check_lemma(params: &VerifyParams) -> Result<Option<Witness>> {
    let spec = &params.spec;
    if spec.n == 0 {
        return Err(Error::InvalidParameter(
            "the insertion lemma maps C_a≀S_{n-1} to C_a≀S_n and needs n >= 1".into(),
        ));
    }
    for order in spec.orders()? {
        let elements = enumerate_group(spec.a, spec.n - 1, params.enumeration.limit)?;
        for sigma in elements {
            if let Some(v) = lemma_violation(&sigma, &order)? {
                return Ok(Some(Witness {
                    t: v.k as u32,
                    q: v.color,
                    lhs: format!("des={},rmaj={}", v.actual.0, v.actual.1),
                    rhs: format!("des={},rmaj={}", v.predicted.0, v.predicted.1),
                    u: None,
                    element: Some(format!("σ=[{}] {}", v.sigma, color_set(&order))),
                }));
            }
        }
    }
    Ok(None)
}

fn check_l_independence(params: &VerifyParams) -> Result<Option<Witness>> {
    let spec = &params.spec;
    let orders = LOrder::subsets_of_size(spec.a, spec.ell);
    let reference = maj_a_enumerate(&orders[0], spec.n, &params.enumeration)?;
    for order in &orders[1..] {
        let p = maj_a_enumerate(order, spec.n, &params.enumeration)?;
        if let Some(w) = poly_witness(&p, &reference) {
            return Ok(Some(w.with_element(format!(
                "{} vs {}",
                color_set(order),
                color_set(&orders[0])
            ))));
        }
    }
    Ok(None)
}

fn check_maj_rmaj(params: &VerifyParams) -> Result<Option<Witness>> {
    let n = params.spec.n;
    let cfg = &params.enumeration;
    let classical = joint_distribution(1, n, cfg, |pi| {
        let w = pi.window();
        (1..w.len())
            .filter(|&i| w[i - 1].value() > w[i].value())
            .fold((0, 0), |(d, m), i| (d + 1, m + i))
    })?;
    let empty = LOrder::new(1, &[])?;
    let reversed = joint_distribution(1, n, cfg, |pi| des_rmaj(pi.window(), &empty))?;
    Ok(poly_witness(&classical, &reversed).map(|w| w.with_element("S_n".into())))
}

fn check_tilde(params: &VerifyParams) -> Result<Option<Witness>> {
    let spec = &params.spec;
    let cfg = &params.enumeration;
    for order in spec.orders()? {
        let complement = order.complement();
        let tilde = joint_distribution(spec.a, spec.n, cfg, |sigma| {
            let d = tilde_descent_data(sigma, &order).expect("moduli agree");
            (d.des, d.rmaj)
        })?;
        let plain = joint_distribution(spec.a, spec.n, cfg, |sigma| {
            des_rmaj(sigma.window(), &complement)
        })?;
        if let Some(w) = poly_witness(&tilde, &plain) {
            return Ok(Some(w.with_element(color_set(&order))));
        }
    }
    Ok(None)
}
