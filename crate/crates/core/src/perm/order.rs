use std::cmp::Ordering;

use super::ColoredLetter;
use crate::{Error, Result};

/// How letters with equal absolute value and colors in the same class are
/// ordered against each other. Any choice gives the same statistics, since a
/// window never holds two letters of equal absolute value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    AscendingColor,
    DescendingColor,
}

/// The linear order `<_L` on `{α^v·j} ∪ {0}` determined by a color set `L`.
///
/// Letters colored in `L` lie below `0` and are ordered by decreasing absolute
/// value; letters colored in the complement `U` lie above `0` and are ordered
/// by increasing absolute value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LOrder {
    in_l: Vec<bool>,
    tie_break: TieBreak,
}

impl LOrder {
    /// `L` given as a list of colors; repeats are allowed.
    pub fn new(modulus: u32, colors: &[u32]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter(
                "color modulus must be at least 1".into(),
            ));
        }
        let mut in_l = vec![false; modulus as usize];
        for &c in colors {
            if c >= modulus {
                return Err(Error::InvalidParameter(format!(
                    "color {c} not in 0..{modulus}"
                )));
            }
            in_l[c as usize] = true;
        }
        Ok(LOrder {
            in_l,
            tie_break: TieBreak::default(),
        })
    }

    /// `L = {0, …, ell-1}`.
    pub fn first_colors(modulus: u32, ell: u32) -> Result<Self> {
        if ell > modulus {
            return Err(Error::InvalidParameter(format!(
                "|L| = {ell} exceeds the modulus {modulus}"
            )));
        }
        let colors: Vec<u32> = (0..ell).collect();
        Self::new(modulus, &colors)
    }

    /// Every `L ⊆ {0,…,a-1}` with `|L| = ell`, in lexicographic order.
    pub fn subsets_of_size(modulus: u32, ell: u32) -> Vec<LOrder> {
        Self::all_subsets(modulus)
            .into_iter()
            .filter(|o| o.ell() == ell)
            .collect()
    }

    /// All `2^a` color subsets, ordered by bitmask.
    pub fn all_subsets(modulus: u32) -> Vec<LOrder> {
        assert!(
            (1..32).contains(&modulus),
            "modulus too large for subset listing"
        );
        (0u32..(1 << modulus))
            .map(|mask| LOrder {
                in_l: (0..modulus).map(|c| mask >> c & 1 == 1).collect(),
                tie_break: TieBreak::default(),
            })
            .collect()
    }

    pub fn with_tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }

    /// The order determined by `{0,…,a-1} \ L`.
    pub fn complement(&self) -> Self {
        LOrder {
            in_l: self.in_l.iter().map(|b| !b).collect(),
            tie_break: self.tie_break,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.in_l.len() as u32
    }

    pub fn contains(&self, color: u32) -> bool {
        self.in_l[color as usize]
    }

    /// `ℓ = |L|`.
    pub fn ell(&self) -> u32 {
        self.in_l.iter().filter(|&&b| b).count() as u32
    }

    pub fn colors(&self) -> Vec<u32> {
        (0..self.modulus()).filter(|&c| self.contains(c)).collect()
    }

    fn key(&self, x: ColoredLetter) -> (u8, i64, i64) {
        if x.is_zero() {
            return (1, 0, 0);
        }
        let color = match self.tie_break {
            TieBreak::AscendingColor => i64::from(x.color()),
            TieBreak::DescendingColor => -i64::from(x.color()),
        };
        if self.contains(x.color()) {
            (0, -i64::from(x.value()), color)
        } else {
            (2, i64::from(x.value()), color)
        }
    }

    pub fn compare(&self, x: ColoredLetter, y: ColoredLetter) -> Ordering {
        self.key(x).cmp(&self.key(y))
    }

    /// `x >_L y`.
    #[inline]
    pub fn greater(&self, x: ColoredLetter, y: ColoredLetter) -> bool {
        self.compare(x, y) == Ordering::Greater
    }
}

pub fn l_compare(x: ColoredLetter, y: ColoredLetter, order: &LOrder) -> Ordering {
    order.compare(x, y)
}
