//! Exhaustive enumeration of `C_a ≀ S_n`.
//!
//! Elements are listed with the absolute values in lexicographic order and,
//! for each value permutation, the colors counting up like an odometer whose
//! last position turns fastest. Element `k` is therefore
//! `(perm_rank, color_code) = (k / a^n, k % a^n)`, which lets a range of
//! indices be handed to a worker without walking the prefix.

use super::{ColoredLetter, ColoredPermutation};
use crate::{Error, Result};

/// Default upper bound on `a^n · n!` for enumeration-backed computations.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;

/// `a^n · n!`, or `None` on overflow.
pub fn group_order(modulus: u32, n: usize) -> Option<u128> {
    let mut size: u128 = 1;
    for k in 1..=n as u128 {
        size = size.checked_mul(k)?.checked_mul(u128::from(modulus))?;
    }
    Some(size)
}

/// Returns `a^n · n!` if it is within `limit`.
pub fn check_guard(modulus: u32, n: usize, limit: u64) -> Result<u64> {
    match group_order(modulus, n) {
        Some(size) if size <= u128::from(limit) => Ok(size as u64),
        Some(size) => Err(Error::GuardExceeded {
            size: size.to_string(),
            limit,
        }),
        None => Err(Error::GuardExceeded {
            size: format!("{modulus}^{n}·{n}!"),
            limit,
        }),
    }
}

/// Streams every element of `C_a ≀ S_n` exactly once.
pub fn enumerate_group(modulus: u32, n: usize, limit: u64) -> Result<GroupElements> {
    if modulus == 0 {
        return Err(Error::InvalidParameter(
            "color modulus must be at least 1".into(),
        ));
    }
    let size = check_guard(modulus, n, limit)?;
    Ok(GroupElements::range(modulus, n, 0, size))
}

/// The element at position `index` of the enumeration order.
///
/// # Panics
///
/// If `index >= a^n · n!`.
pub fn element_at(modulus: u32, n: usize, index: u64) -> ColoredPermutation {
    let colorings = u128::from(modulus).pow(n as u32);
    let index = u128::from(index);
    assert!(index < colorings * factorial(n), "index out of range");
    let mut rank = index / colorings;
    let mut code = index % colorings;

    let mut available: Vec<u32> = (1..=n as u32).collect();
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        let d = (rank / f) as usize;
        rank %= f;
        values.push(available.remove(d));
    }
    let mut colors = vec![0u32; n];
    for slot in colors.iter_mut().rev() {
        *slot = (code % u128::from(modulus)) as u32;
        code /= u128::from(modulus);
    }
    let window = values
        .into_iter()
        .zip(colors)
        .map(|(v, c)| ColoredLetter::new(v, c))
        .collect();
    ColoredPermutation::from_raw(modulus, window)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Iterator over a contiguous index range of the enumeration order.
#[derive(Debug, Clone)]
pub struct GroupElements {
    current: ColoredPermutation,
    remaining: u64,
}

impl GroupElements {
    /// Elements with index in `start..end`.
    pub fn range(modulus: u32, n: usize, start: u64, end: u64) -> Self {
        let current = if start < end {
            element_at(modulus, n, start)
        } else {
            ColoredPermutation::identity(modulus, n)
        };
        GroupElements {
            current,
            remaining: end.saturating_sub(start),
        }
    }

    /// Visits the remaining elements by reference, reusing one buffer.
    pub fn for_each_ref(mut self, mut f: impl FnMut(&ColoredPermutation)) {
        while self.remaining > 0 {
            f(&self.current);
            self.remaining -= 1;
            if self.remaining > 0 {
                self.advance();
            }
        }
    }

    fn advance(&mut self) {
        let modulus = self.current.modulus;
        let window = &mut self.current.window;
        for letter in window.iter_mut().rev() {
            if letter.color + 1 < modulus {
                letter.color += 1;
                return;
            }
            letter.color = 0;
        }
        next_permutation(window);
    }
}

impl Iterator for GroupElements {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        if self.remaining == 0 {
            return None;
        }
        let out = self.current.clone();
        self.remaining -= 1;
        if self.remaining > 0 {
            self.advance();
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for GroupElements {}

/// Lexicographic successor by absolute value; returns `false` at the last one.
fn next_permutation(w: &mut [ColoredLetter]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1].value >= w[i].value {
        i -= 1;
    }
    if i == 0 {
        w.reverse();
        return false;
    }
    let mut j = w.len() - 1;
    while w[j].value <= w[i - 1].value {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn b1_has_two_elements() {
        let all: Vec<String> = enumerate_group(2, 1, DEFAULT_ENUMERATION_LIMIT)
            .unwrap()
            .map(|p| p.to_window_string())
            .collect();
        assert_eq!(all, vec!["1^0", "1^1"]);
    }

    #[test]
    fn c3_wr_s2_has_18_distinct() {
        let all: HashSet<_> = enumerate_group(3, 2, DEFAULT_ENUMERATION_LIMIT)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 18);
    }

    #[test]
    fn s3_in_lexicographic_order() {
        let all: Vec<Vec<u32>> = enumerate_group(1, 3, DEFAULT_ENUMERATION_LIMIT)
            .unwrap()
            .map(|p| p.absolute())
            .collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
    }

    #[test]
    fn empty_group_has_one_element() {
        let all: Vec<_> = enumerate_group(5, 0, 10).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
    }

    #[test]
    fn element_at_agrees_with_stream() {
        for (a, n) in [(1, 4), (2, 3), (3, 3), (4, 2)] {
            let stream: Vec<_> = enumerate_group(a, n, u64::MAX).unwrap().collect();
            for (k, p) in stream.iter().enumerate() {
                assert_eq!(&element_at(a, n, k as u64), p);
            }
            let tail: Vec<_> = GroupElements::range(a, n, 5, stream.len() as u64).collect();
            assert_eq!(&tail[..], &stream[5..]);
        }
    }

    #[test]
    fn guard_refuses_large_groups() {
        assert_eq!(check_guard(2, 3, 48), Ok(48));
        assert!(matches!(
            enumerate_group(2, 3, 47),
            Err(Error::GuardExceeded { limit: 47, .. })
        ));
        assert!(check_guard(1000, 40, u64::MAX).is_err());
    }
}
