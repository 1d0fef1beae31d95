//! Sparse bivariate polynomials in `t` and `q` over big integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `Σ c_{i,j} t^i q^j`, stored as a map `(i, j) -> c_{i,j}` with no zero entries.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · t^t_deg · q^q_deg`.
    pub fn monomial(c: impl Into<BigInt>, t_deg: u32, q_deg: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((t_deg, q_deg), c);
        }
        BiPoly { terms }
    }

    pub fn t() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `((t, q), c)` pairs, summing repeated monomials.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), C)>,
        C: Into<BigInt>,
    {
        let mut p = BiPoly::zero();
        for (key, c) in terms {
            p.add_term(key, c.into());
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(t, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, t_deg: u32, q_deg: u32) -> BigInt {
        self.terms
            .get(&(t_deg, q_deg))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// The coefficient of `t^s`, as a polynomial in `q` alone.
    pub fn coeff_t(&self, s: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .range((s, 0)..=(s, u32::MAX))
                .map(|(&(_, j), c)| ((0, j), c.clone()))
                .collect(),
        }
    }

    /// Assembles `Σ_s t^s · coeffs[s]`, where each `coeffs[s]` is free of `t`.
    pub fn from_t_coeffs(coeffs: &[BiPoly]) -> Self {
        let mut out = BiPoly::zero();
        for (s, c) in coeffs.iter().enumerate() {
            out += c.shift(s as u32, 0);
        }
        out
    }

    /// Drops all terms of `t`-degree above `max_t`.
    pub fn truncate_t(&self, max_t: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, _), _)| i <= max_t)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// Multiplication by `t^dt q^dq`.
    pub fn shift(&self, dt: u32, dq: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + dt, j + dq), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> BiPoly {
        if k.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&key, c)| (key, c * k)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(t, q) ↦ p(tq, q)`: sends `t^i q^j` to `t^i q^{i+j}`.
    pub fn subst_t_tq(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, i + j), c.clone()))
                .collect(),
        }
    }

    /// `∂p/∂t`.
    pub fn derivative_t(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * BigInt::from(i)))
                .collect(),
        }
    }

    /// `p(t, 1)`.
    pub fn eval_q1(&self) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|(&(i, _), c)| ((i, 0), c.clone())))
    }

    pub fn eval(&self, t: &BigInt, q: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * Pow::pow(t, i) * Pow::pow(q, j))
            .sum()
    }

    /// The first monomial, in `(t, q)` order, where `self` and `other` differ.
    pub fn first_difference(&self, other: &BiPoly) -> Option<((u32, u32), BigInt, BigInt)> {
        let diff = self - other;
        diff.terms
            .keys()
            .next()
            .map(|&(i, j)| ((i, j), self.coeff(i, j), other.coeff(i, j)))
    }

    /// Plain-text rendering, e.g. `1 + 3t*q + t^2*q^3`.
    pub fn to_text(&self) -> String {
        self.render(|i, j| {
            let mut parts = Vec::new();
            match i {
                0 => {}
                1 => parts.push("t".to_string()),
                _ => parts.push(format!("t^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("q".to_string()),
                _ => parts.push(format!("q^{j}")),
            }
            parts.join("*")
        })
    }

    /// LaTeX rendering, e.g. `1 + 3tq + t^{2}q^{3}`.
    pub fn to_latex(&self) -> String {
        self.render(|i, j| {
            let mut s = String::new();
            match i {
                0 => {}
                1 => s.push('t'),
                _ => s.push_str(&format!("t^{{{i}}}")),
            }
            match j {
                0 => {}
                1 => s.push('q'),
                _ => s.push_str(&format!("q^{{{j}}}")),
            }
            s
        })
    }

    fn render(&self, monomial: impl Fn(u32, u32) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (&(i, j), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let m = monomial(i, j);
            let mag = c.abs();
            if m.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&m);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `[m]_q = 1 + q + … + q^{m-1}`; `[0]_q = 0`.
pub fn q_int(m: u32) -> BiPoly {
    BiPoly::from_terms((0..m).map(|j| ((0, j), 1)))
}

/// `(t; q)_m = (1 - t)(1 - tq)⋯(1 - tq^{m-1})`; `(t; q)_0 = 1`.
pub fn q_poch_t(m: u32) -> BiPoly {
    (0..m).fold(BiPoly::one(), |acc, j| {
        &acc * &(BiPoly::one() - BiPoly::monomial(1, 1, j))
    })
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(mut self, rhs: BiPoly) -> BiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl AddAssign for BiPoly {
    fn add_assign(&mut self, rhs: BiPoly) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        -&self
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

/// One entry of the JSON form of a [`BiPoly`]: `{"t": i, "q": j, "c": "<decimal>"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub t: u32,
    pub q: u32,
    pub c: String,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(&(t, q), c)| Term {
                t,
                q,
                c: c.to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        let mut p = BiPoly::zero();
        for term in terms {
            let c: BigInt = term
                .c
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad coefficient {:?}", term.c)))?;
            p.add_term((term.t, term.q), c);
        }
        Ok(p)
    }
}
