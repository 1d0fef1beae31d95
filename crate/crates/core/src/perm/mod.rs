//! Colored permutations of `C_a ≀ S_n` in window notation.
//!
//! A colored permutation is written `[σ(1), …, σ(n)]` where every entry is a
//! letter `α^c·j`: an absolute value `j ∈ 1..=n` carrying a color `c ∈ 0..a`.
//! The absolute values of a window form an ordinary permutation `|σ| ∈ S_n`.

mod enumerate;
mod order;
mod stats;

use std::fmt;

use crate::{Error, Result};

pub use enumerate::{
    check_guard, element_at, enumerate_group, group_order, GroupElements, DEFAULT_ENUMERATION_LIMIT,
};
pub use order::{l_compare, LOrder, TieBreak};
pub use stats::{
    classical_stats, des_rmaj, descent_data, lemma_check, lemma_violation, tilde_descent_data,
    DescentData, LemmaViolation,
};

/// A colored letter `α^color · value`.
///
/// `value == 0` is the sentinel letter `0` that sits in front of every window
/// (`σ(0) := 0`); it never carries a color and never appears inside a window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredLetter {
    value: u32,
    color: u32,
}

impl ColoredLetter {
    pub const ZERO: ColoredLetter = ColoredLetter { value: 0, color: 0 };

    /// # Panics
    ///
    /// If `value == 0` and `color != 0`.
    pub fn new(value: u32, color: u32) -> Self {
        assert!(value != 0 || color == 0, "the zero letter has no color");
        ColoredLetter { value, color }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn color(self) -> u32 {
        self.color
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.value, self.color)
    }
}

/// An element of `C_a ≀ S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    modulus: u32,
    window: Vec<ColoredLetter>,
}

impl ColoredPermutation {
    /// Builds a permutation from its window, checking every color against
    /// `modulus` and that the absolute values are exactly `1..=n`.
    pub fn new(modulus: u32, window: Vec<ColoredLetter>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter(
                "color modulus must be at least 1".into(),
            ));
        }
        let len = window.len();
        let mut seen = vec![false; len + 1];
        for (i, letter) in window.iter().enumerate() {
            let position = i + 1;
            if letter.color >= modulus {
                return Err(Error::ColorOutOfRange {
                    position,
                    color: letter.color,
                    modulus,
                });
            }
            let v = letter.value as usize;
            if v == 0 || v > len || seen[v] {
                return Err(Error::NotAPermutation {
                    position,
                    value: letter.value,
                    len,
                });
            }
            seen[v] = true;
        }
        Ok(ColoredPermutation { modulus, window })
    }

    /// Convenience constructor from `(value, color)` pairs.
    pub fn from_pairs(modulus: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut window = Vec::with_capacity(pairs.len());
        for (i, &(value, color)) in pairs.iter().enumerate() {
            if value == 0 {
                return Err(Error::NotAPermutation {
                    position: i + 1,
                    value,
                    len: pairs.len(),
                });
            }
            window.push(ColoredLetter::new(value, color));
        }
        Self::new(modulus, window)
    }

    pub fn identity(modulus: u32, n: usize) -> Self {
        assert!(modulus >= 1);
        let window = (1..=n as u32).map(|v| ColoredLetter::new(v, 0)).collect();
        ColoredPermutation { modulus, window }
    }

    pub(crate) fn from_raw(modulus: u32, window: Vec<ColoredLetter>) -> Self {
        ColoredPermutation { modulus, window }
    }

    /// Parses whitespace-separated `value^color` tokens. For `a = 2` a signed
    /// integer token is also accepted, with `-j` meaning `j^1` and `j` meaning
    /// `j^0`. The empty string is the empty permutation.
    pub fn parse(text: &str, modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter(
                "color modulus must be at least 1".into(),
            ));
        }
        let mut window = Vec::new();
        let tokens: Vec<&str> = text.split_whitespace().collect();
        for (i, token) in tokens.iter().enumerate() {
            let position = i + 1;
            let malformed = || Error::MalformedToken {
                position,
                token: token.to_string(),
            };
            let (value, color) = match token.split_once('^') {
                Some((v, c)) => {
                    let v = parse_digits(v).ok_or_else(malformed)?;
                    let c = parse_digits(c).ok_or_else(malformed)?;
                    (v, c)
                }
                None if modulus == 2 => {
                    let (negative, digits) = match token.strip_prefix('-') {
                        Some(rest) => (true, rest),
                        None => (false, token.strip_prefix('+').unwrap_or(token)),
                    };
                    let v = parse_digits(digits).ok_or_else(malformed)?;
                    (v, u32::from(negative))
                }
                None => return Err(malformed()),
            };
            if color >= modulus {
                return Err(Error::ColorOutOfRange {
                    position,
                    color,
                    modulus,
                });
            }
            if value == 0 {
                return Err(Error::NotAPermutation {
                    position,
                    value,
                    len: tokens.len(),
                });
            }
            window.push(ColoredLetter::new(value, color));
        }
        Self::new(modulus, window)
    }

    /// Space-separated `value^color` tokens; the inverse of [`parse`](Self::parse).
    pub fn to_window_string(&self) -> String {
        let tokens: Vec<String> = self.window.iter().map(|l| l.to_string()).collect();
        tokens.join(" ")
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn window(&self) -> &[ColoredLetter] {
        &self.window
    }

    /// `σ(i)` for `0 <= i <= n`, with `σ(0)` the zero letter.
    pub fn at(&self, i: usize) -> ColoredLetter {
        if i == 0 {
            ColoredLetter::ZERO
        } else {
            self.window[i - 1]
        }
    }

    /// `|σ|`, the underlying uncolored permutation.
    pub fn absolute(&self) -> Vec<u32> {
        self.window.iter().map(|l| l.value).collect()
    }

    /// `σ · [n, n-1, …, 1]`: the window read right to left.
    pub fn reverse(&self) -> Self {
        let mut window = self.window.clone();
        window.reverse();
        ColoredPermutation {
            modulus: self.modulus,
            window,
        }
    }

    /// `φ_n(σ, r, t)`: inserts `α^t·n` after position `r`, where `n = len + 1`.
    pub fn insert_max(&self, r: usize, color: u32) -> Result<Self> {
        let n = self.len() + 1;
        if r > n - 1 {
            return Err(Error::InvalidParameter(format!(
                "insertion position {r} outside 0..={}",
                n - 1
            )));
        }
        if color >= self.modulus {
            return Err(Error::InvalidParameter(format!(
                "color {color} outside 0..{}",
                self.modulus
            )));
        }
        let mut window = Vec::with_capacity(n);
        window.extend_from_slice(&self.window[..r]);
        window.push(ColoredLetter::new(n as u32, color));
        window.extend_from_slice(&self.window[r..]);
        Ok(ColoredPermutation {
            modulus: self.modulus,
            window,
        })
    }

    /// Inverse of [`insert_max`](Self::insert_max): removes the letter of
    /// maximal absolute value and returns `(σ, r, t)`.
    pub fn remove_max(&self) -> Result<(Self, usize, u32)> {
        let n = self.len() as u32;
        let r = self
            .window
            .iter()
            .position(|l| l.value == n)
            .ok_or_else(|| {
                Error::InvalidParameter("cannot remove from the empty permutation".into())
            })?;
        let mut window = self.window.clone();
        let removed = window.remove(r);
        Ok((
            ColoredPermutation {
                modulus: self.modulus,
                window,
            },
            r,
            removed.color,
        ))
    }
}

/// `φ_n(σ, r, t)`.
pub fn phi(sigma: &ColoredPermutation, r: usize, color: u32) -> Result<ColoredPermutation> {
    sigma.insert_max(r, color)
}

/// `φ_n^{-1}(τ) = (σ, r, t)`.
pub fn phi_inverse(tau: &ColoredPermutation) -> Result<(ColoredPermutation, usize, u32)> {
    tau.remove_max()
}

pub fn reverse(sigma: &ColoredPermutation) -> ColoredPermutation {
    sigma.reverse()
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_window_string())
    }
}

fn parse_digits(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
