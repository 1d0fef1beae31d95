//! Brute-force oracle shared by the integration tests.
//!
//! Nothing here calls into the library's comparator or enumerator: the order
//! `<_L` is materialised as an explicit ranked list of letters and the group is
//! generated by recursive insertion.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

pub type Letter = (u32, u32);

/// Rank of every letter `(value, color)` and of `0` (as `(0, 0)`) under `<_L`:
/// `α^{L} n < … < α^{L} 1 < 0 < α^{U} 1 < … < α^{U} n`, colors ascending within
/// each value.
pub fn ranks(a: u32, n: u32, l: &[u32]) -> HashMap<Letter, usize> {
    let mut list = Vec::new();
    for j in (1..=n).rev() {
        for v in 0..a {
            if l.contains(&v) {
                list.push((j, v));
            }
        }
    }
    list.push((0, 0));
    for j in 1..=n {
        for v in 0..a {
            if !l.contains(&v) {
                list.push((j, v));
            }
        }
    }
    list.into_iter().enumerate().map(|(r, x)| (x, r)).collect()
}

/// All windows of `C_a ≀ S_n`, by inserting `n` into every window of size `n-1`.
pub fn all_windows(a: u32, n: u32) -> Vec<Vec<Letter>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for w in all_windows(a, n - 1) {
        for pos in 0..=w.len() {
            for c in 0..a {
                let mut x = w.clone();
                x.insert(pos, (n, c));
                out.push(x);
            }
        }
    }
    out
}

/// `(Des_L, des_L, rmaj_{L,n})` from the rank table.
pub fn stats(window: &[Letter], ranks: &HashMap<Letter, usize>) -> (Vec<usize>, usize, usize) {
    let n = window.len();
    let mut padded = vec![(0, 0)];
    padded.extend_from_slice(window);
    let set: Vec<usize> = (0..n)
        .filter(|&i| ranks[&padded[i]] > ranks[&padded[i + 1]])
        .collect();
    let rmaj = set.iter().map(|&i| n - i).sum();
    (set.clone(), set.len(), rmaj)
}

/// `(Des~_L, des~_L, maj~_L)` from the rank table.
pub fn tilde_stats(
    window: &[Letter],
    ranks: &HashMap<Letter, usize>,
) -> (Vec<usize>, usize, usize) {
    let n = window.len();
    let mut padded = vec![(0, 0)];
    padded.extend_from_slice(window);
    padded.push((0, 0));
    let set: Vec<usize> = (1..=n)
        .filter(|&i| ranks[&padded[i]] > ranks[&padded[i + 1]])
        .collect();
    let maj = set.iter().sum();
    (set.clone(), set.len(), maj)
}

/// Classical `(des, maj)` on values.
pub fn classical(window: &[Letter]) -> (usize, usize) {
    let mut des = 0;
    let mut maj = 0;
    for i in 1..window.len() {
        if window[i - 1].0 > window[i].0 {
            des += 1;
            maj += i;
        }
    }
    (des, maj)
}

/// `{(des, rmaj) -> count}` over the whole group.
pub fn maj_a(a: u32, l: &[u32], n: u32) -> BTreeMap<(u32, u32), u64> {
    let r = ranks(a, n, l);
    let mut out = BTreeMap::new();
    for w in all_windows(a, n) {
        let (_, d, m) = stats(&w, &r);
        *out.entry((d as u32, m as u32)).or_insert(0) += 1;
    }
    out
}

pub fn subsets(a: u32) -> Vec<Vec<u32>> {
    (0u32..(1 << a))
        .map(|mask| (0..a).filter(|c| mask >> c & 1 == 1).collect())
        .collect()
}
