//! Truncated power series in `u` whose coefficients are polynomials in `t`
//! with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::BiPoly;
use crate::{Error, Result};

/// A polynomial in `t` over the rationals, stored densely from `t^0` upward
/// with no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TPolyQ {
    coeffs: Vec<BigRational>,
}

impl TPolyQ {
    pub fn zero() -> Self {
        TPolyQ::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPolyQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Converts a polynomial free of `q`. Returns `None` if `q` occurs.
    pub fn from_bipoly(p: &BiPoly) -> Option<Self> {
        let mut coeffs = Vec::new();
        for ((i, j), c) in p.terms() {
            if j != 0 {
                return None;
            }
            let i = i as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, BigRational::zero());
            }
            coeffs[i] = BigRational::from_integer(c.clone());
        }
        Some(Self::from_coeffs(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, k: &BigRational) -> TPolyQ {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }
}

impl<'a> Add<&'a TPolyQ> for &'a TPolyQ {
    type Output = TPolyQ;

    fn add(self, rhs: &TPolyQ) -> TPolyQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPolyQ::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a TPolyQ> for &'a TPolyQ {
    type Output = TPolyQ;

    fn sub(self, rhs: &TPolyQ) -> TPolyQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPolyQ::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &TPolyQ {
    type Output = TPolyQ;

    fn neg(self) -> TPolyQ {
        TPolyQ::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a TPolyQ> for &'a TPolyQ {
    type Output = TPolyQ;

    fn mul(self, rhs: &TPolyQ) -> TPolyQ {
        if self.is_zero() || rhs.is_zero() {
            return TPolyQ::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPolyQ::from_coeffs(out)
    }
}

impl fmt::Display for TPolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{i}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `Σ_{k=0}^{N} c_k(t) u^k + O(u^{N+1})`.
#[derive(Debug, Clone)]
pub struct USeries {
    coeffs: Vec<TPolyQ>,
}

impl USeries {
    pub fn zero(order: usize) -> Self {
        USeries {
            coeffs: vec![TPolyQ::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, TPolyQ::one())
    }

    pub fn constant(order: usize, c: TPolyQ) -> Self {
        Self::monomial(order, 0, c)
    }

    /// `c(t) · u^k` at the given order; vanishes if `k > order`.
    pub fn monomial(order: usize, k: usize, c: TPolyQ) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Coefficients of `u^0 … u^N`; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    ///
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<TPolyQ>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the u^0 coefficient"
        );
        USeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &TPolyQ {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[TPolyQ] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> USeries {
        USeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &TPolyQ) -> USeries {
        USeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn scale_rational(&self, k: &BigRational) -> USeries {
        USeries {
            coeffs: self.coeffs.iter().map(|x| x.scale(k)).collect(),
        }
    }

    /// `Σ_{k=0}^{N} s^k / k!`.
    pub fn exp(&self) -> Result<USeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut result = USeries::one(order);
        let mut term = USeries::one(order);
        for k in 1..=order {
            let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
            term = (&term * self).scale_rational(&inv_k);
            result = &result + &term;
        }
        Ok(result)
    }

    /// Exact equality; series of different order are not comparable.
    pub fn try_eq(&self, other: &USeries) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }

    /// Index of the first `u`-coefficient where the two series differ.
    pub fn first_difference(&self, other: &USeries) -> Result<Option<usize>> {
        if self.order() != other.order() {
            return Err(Error::SeriesOrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok((0..self.coeffs.len()).find(|&k| self.coeffs[k] != other.coeffs[k]))
    }
}

impl<'a> Add<&'a USeries> for &'a USeries {
    type Output = USeries;

    fn add(self, rhs: &USeries) -> USeries {
        let order = self.order().min(rhs.order());
        USeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl<'a> Sub<&'a USeries> for &'a USeries {
    type Output = USeries;

    fn sub(self, rhs: &USeries) -> USeries {
        let order = self.order().min(rhs.order());
        USeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Neg for &USeries {
    type Output = USeries;

    fn neg(self) -> USeries {
        USeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product truncated at the smaller of the two orders.
impl<'a> Mul<&'a USeries> for &'a USeries {
    type Output = USeries;

    fn mul(self, rhs: &USeries) -> USeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![TPolyQ::zero(); order + 1];
        for (k, slot) in coeffs.iter_mut().enumerate() {
            for i in 0..=k {
                let (x, y) = (&self.coeffs[i], &rhs.coeffs[k - i]);
                if !x.is_zero() && !y.is_zero() {
                    *slot = &*slot + &(x * y);
                }
            }
        }
        USeries { coeffs }
    }
}

pub fn series_exp(s: &USeries) -> Result<USeries> {
    s.exp()
}

pub fn series_mul(p: &USeries, r: &USeries) -> USeries {
    p * r
}

pub fn series_equal(p: &USeries, r: &USeries) -> Result<bool> {
    p.try_eq(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn u(order: usize) -> USeries {
        USeries::monomial(order, 1, TPolyQ::one())
    }

    #[test]
    fn exp_of_u() {
        let e = u(2).exp().unwrap();
        let expected = USeries::from_coeffs(vec![
            TPolyQ::one(),
            TPolyQ::one(),
            TPolyQ::from_coeffs(vec![rat(1, 2)]),
        ]);
        assert!(e.try_eq(&expected).unwrap());
    }

    #[test]
    fn exp_of_zero_and_first_order() {
        assert!(USeries::zero(3)
            .exp()
            .unwrap()
            .try_eq(&USeries::one(3))
            .unwrap());
        let one_minus_t = TPolyQ::from_ints(&[1, -1]);
        let s = USeries::monomial(1, 1, one_minus_t.clone());
        let expected = USeries::from_coeffs(vec![TPolyQ::one(), one_minus_t]);
        assert!(s.exp().unwrap().try_eq(&expected).unwrap());
    }

    #[test]
    fn exp_needs_zero_constant() {
        assert_eq!(
            USeries::one(2).exp().unwrap_err(),
            Error::NonzeroConstantTerm
        );
    }

    #[test]
    fn products() {
        let one = USeries::one(2);
        let p = &one + &u(2);
        let r = &one - &u(2);
        let expected = USeries::from_coeffs(vec![
            TPolyQ::one(),
            TPolyQ::zero(),
            TPolyQ::from_ints(&[-1]),
        ]);
        assert!((&p * &r).try_eq(&expected).unwrap());
        assert!((&p * &one).try_eq(&p).unwrap());

        let e = u(4).exp().unwrap();
        let e_neg = (-&u(4)).exp().unwrap();
        assert!((&e * &e_neg).try_eq(&USeries::one(4)).unwrap());
    }

    #[test]
    fn order_mismatch_and_truncation() {
        assert!(USeries::one(2).try_eq(&USeries::one(3)).is_err());
        let prod = &USeries::one(2) * &USeries::one(5);
        assert_eq!(prod.order(), 2);
        assert!(USeries::one(5)
            .truncate(2)
            .try_eq(&USeries::one(2))
            .unwrap());
    }

    #[test]
    fn tpoly_from_bipoly() {
        let p = BiPoly::from_terms([((0, 0), 1), ((2, 0), 3)]);
        assert_eq!(TPolyQ::from_bipoly(&p), Some(TPolyQ::from_ints(&[1, 0, 3])));
        assert_eq!(TPolyQ::from_bipoly(&BiPoly::q()), None);
    }

    fn linear_series(order: usize) -> impl Strategy<Value = USeries> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, 0..3), order).prop_map(move |cs| {
            let mut coeffs = vec![TPolyQ::zero()];
            coeffs.extend(cs.iter().map(|c| TPolyQ::from_ints(c)));
            USeries::from_coeffs(coeffs)
        })
    }

    proptest! {
        #[test]
        fn exp_turns_sums_into_products(x in linear_series(4), y in linear_series(4)) {
            let lhs = (&x + &y).exp().unwrap();
            let rhs = &x.exp().unwrap() * &y.exp().unwrap();
            prop_assert!(lhs.try_eq(&rhs).unwrap());
        }
    }
}
