//! Bit-set helpers for the exhaustive searches.
//!
//! [`Bits`] is a growable set for searches with no vertex ceiling; the `u64`
//! mask helpers serve the bounded searches (barriers, cycle covers).

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn empty(n: usize) -> Self {
        Bits { words: vec![0; n.div_ceil(64)] }
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::empty(n);
        for v in it {
            b.insert(v);
        }
        b
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn and_not(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    pub fn and_count(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

/// Adjacency rows as [`Bits`].
pub(crate) fn adjacency_bits(g: &Graph) -> Vec<Bits> {
    g.vertices()
        .map(|v| Bits::from_iter(g.order(), g.neighbors(v).iter().copied()))
        .collect()
}

/// Adjacency rows as `u64` masks; callers guarantee `n <= 64`.
pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    debug_assert!(g.order() <= 64);
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

pub(crate) fn mask_of(set: &VertexSet) -> u64 {
    set.iter().fold(0u64, |m, v| m | 1 << v)
}

pub(crate) fn set_of(mask: u64) -> VertexSet {
    VertexSet::from_sorted_unchecked(mask_iter(mask).collect())
}

pub(crate) fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Connected component of `start` inside `within`.
#[inline]
pub(crate) fn flood(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut comp = 1u64 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for v in mask_iter(frontier) {
            next |= adj[v];
        }
        next &= within & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

/// Number of connected components of the subgraph induced by `within`.
pub(crate) fn count_components(adj: &[u64], within: u64) -> usize {
    let mut rest = within;
    let mut count = 0;
    while rest != 0 {
        let comp = flood(adj, rest.trailing_zeros() as usize, rest);
        rest &= !comp;
        count += 1;
    }
    count
}

/// Calls `f` on every subset of `n` elements of size `k`, as masks in
/// lexicographic order of their sorted member lists.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if !f(mask) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
