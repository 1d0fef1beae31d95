//! `Des_L`, `des_L`, `rmaj_{L,n}` and their tilde variants.

use serde::Serialize;

use super::{ColoredLetter, ColoredPermutation, LOrder};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentData {
    /// Descent positions, ascending.
    pub descent_set: Vec<usize>,
    pub des: usize,
    /// `rmaj_{L,n}` for [`descent_data`], `maj~_L` for [`tilde_descent_data`].
    pub rmaj: usize,
}

fn check_modulus(sigma: &ColoredPermutation, order: &LOrder) -> Result<()> {
    if sigma.modulus() != order.modulus() {
        return Err(Error::ModulusMismatch {
            expected: order.modulus(),
            found: sigma.modulus(),
        });
    }
    Ok(())
}

/// `Des_L(σ) = {0 <= i <= n-1 : σ(i) >_L σ(i+1)}` with `σ(0) = 0`, and
/// `rmaj_{L,n}(σ) = Σ_{i ∈ Des_L(σ)} (n - i)`.
pub fn descent_data(sigma: &ColoredPermutation, order: &LOrder) -> Result<DescentData> {
    check_modulus(sigma, order)?;
    let n = sigma.len();
    let descent_set: Vec<usize> = (0..n)
        .filter(|&i| order.greater(sigma.at(i), sigma.at(i + 1)))
        .collect();
    let rmaj = descent_set.iter().map(|&i| n - i).sum();
    Ok(DescentData {
        des: descent_set.len(),
        descent_set,
        rmaj,
    })
}

/// `(des_L, rmaj_{L,n})` of a raw window without allocating. Colors must be
/// below `order.modulus()`.
#[inline]
pub fn des_rmaj(window: &[ColoredLetter], order: &LOrder) -> (usize, usize) {
    let n = window.len();
    let mut des = 0;
    let mut rmaj = 0;
    let mut prev = ColoredLetter::ZERO;
    for (i, &cur) in window.iter().enumerate() {
        if order.greater(prev, cur) {
            des += 1;
            rmaj += n - i;
        }
        prev = cur;
    }
    (des, rmaj)
}

/// `Des~_L(σ) = {1 <= i <= n : σ(i) >_L σ(i+1)}` with `σ(n+1) = 0`; the
/// `rmaj` field carries `maj~_L(σ) = Σ_{i ∈ Des~_L(σ)} i`.
pub fn tilde_descent_data(sigma: &ColoredPermutation, order: &LOrder) -> Result<DescentData> {
    check_modulus(sigma, order)?;
    let n = sigma.len();
    let right = |i: usize| {
        if i == n + 1 {
            ColoredLetter::ZERO
        } else {
            sigma.at(i)
        }
    };
    let descent_set: Vec<usize> = (1..=n)
        .filter(|&i| order.greater(sigma.at(i), right(i + 1)))
        .collect();
    Ok(DescentData {
        des: descent_set.len(),
        rmaj: descent_set.iter().sum(),
        descent_set,
    })
}

/// Classical `(des, maj)` of an uncolored permutation, over positions `1..n-1`.
pub fn classical_stats(pi: &ColoredPermutation) -> Result<(usize, usize)> {
    if pi.modulus() != 1 {
        return Err(Error::ModulusMismatch {
            expected: 1,
            found: pi.modulus(),
        });
    }
    let w = pi.window();
    let mut des = 0;
    let mut maj = 0;
    for i in 1..w.len() {
        if w[i - 1].value() > w[i].value() {
            des += 1;
            maj += i;
        }
    }
    Ok((des, maj))
}

/// A disagreement between the insertion formulas and a direct evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub sigma: ColoredPermutation,
    pub k: usize,
    pub color: u32,
    pub inserted: ColoredPermutation,
    /// `(des, rmaj)` predicted by the case formulas.
    pub predicted: (usize, usize),
    /// `(des, rmaj)` evaluated directly.
    pub actual: (usize, usize),
}

/// Checks the effect of `φ_n(σ, i_k, t)` on `(des_L, rmaj_{L,n})` for every
/// `k ∈ 1..=n` and color `t`, where `i_1 < … < i_s` are the descents of `σ`
/// and `i_{s+1} > … > i_n` the remaining positions of `0..=n-1`, right to left.
///
/// Returns the first violation found, if any.
pub fn lemma_violation(
    sigma: &ColoredPermutation,
    order: &LOrder,
) -> Result<Option<LemmaViolation>> {
    let base = descent_data(sigma, order)?;
    let n = sigma.len() + 1;
    let s = base.des;

    let mut slots = base.descent_set.clone();
    let mut is_descent = vec![false; n];
    for &i in &base.descent_set {
        is_descent[i] = true;
    }
    slots.extend((0..n).rev().filter(|&i| !is_descent[i]));
    debug_assert_eq!(slots.len(), n);

    for (idx, &slot) in slots.iter().enumerate() {
        let k = idx + 1;
        for color in 0..sigma.modulus() {
            let in_l = order.contains(color);
            let des = if k < s + 1 || (k == s + 1 && !in_l) {
                s
            } else {
                s + 1
            };
            let rmaj = if in_l {
                base.rmaj + k
            } else {
                base.rmaj + k - 1
            };
            let inserted = sigma.insert_max(slot, color)?;
            let actual = des_rmaj(inserted.window(), order);
            if actual != (des, rmaj) {
                return Ok(Some(LemmaViolation {
                    sigma: sigma.clone(),
                    k,
                    color,
                    inserted,
                    predicted: (des, rmaj),
                    actual,
                }));
            }
        }
    }
    Ok(None)
}

pub fn lemma_check(sigma: &ColoredPermutation, order: &LOrder) -> Result<bool> {
    Ok(lemma_violation(sigma, order)?.is_none())
}
