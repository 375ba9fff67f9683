//! Cyclic orders over dense ids `0..n` and the ring-intervals they induce.
//!
//! A [`CyclicOrder`] arranges the ids on a clock face. A [`RingInterval`]
//! `[a, b]` is the run of ids met when walking clockwise from `a` up to and
//! including `b`; it is directional, so `[a, b]` and `[b, a]` differ unless
//! `a == b`. An interval is never empty.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct RingInterval {
    pub from: usize,
    pub to: usize,
}

impl RingInterval {
    pub const fn new(from: usize, to: usize) -> Self {
        RingInterval { from, to }
    }

    pub const fn singleton(x: usize) -> Self {
        RingInterval { from: x, to: x }
    }
}

impl From<RingInterval> for [usize; 2] {
    fn from(ivl: RingInterval) -> Self {
        [ivl.from, ivl.to]
    }
}

impl From<[usize; 2]> for RingInterval {
    fn from([from, to]: [usize; 2]) -> Self {
        RingInterval { from, to }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicOrder {
    items: Vec<usize>,
    position: Vec<usize>,
}

impl CyclicOrder {
    /// Builds the order `items[0] -> items[1] -> ... -> items[n-1] -> items[0]`.
    /// `items` must be a permutation of `0..n` with `n >= 1`.
    pub fn new(items: Vec<usize>) -> Result<Self> {
        let n = items.len();
        if n == 0 {
            return Err(Error::NotAPermutation(0));
        }
        let mut position = vec![usize::MAX; n];
        for (i, &x) in items.iter().enumerate() {
            if x >= n || position[x] != usize::MAX {
                return Err(Error::NotAPermutation(n));
            }
            position[x] = i;
        }
        Ok(CyclicOrder { items, position })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "cyclic order needs at least one element");
        CyclicOrder {
            items: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[usize] {
        &self.items
    }

    pub fn position(&self, x: usize) -> Result<usize> {
        self.position
            .get(x)
            .copied()
            .ok_or(Error::UnknownElement(x))
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement(x))
        }
    }

    pub fn successor(&self, a: usize) -> Result<usize> {
        self.check(a)?;
        Ok(self.succ(a))
    }

    pub fn predecessor(&self, a: usize) -> Result<usize> {
        self.check(a)?;
        Ok(self.pred(a))
    }

    /// `C^steps(a)`.
    pub fn advance(&self, a: usize, steps: usize) -> Result<usize> {
        self.check(a)?;
        Ok(self.items[(self.position[a] + steps % self.len()) % self.len()])
    }

    pub fn ring_sequence(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        self.check(from)?;
        self.check(to)?;
        Ok(self.iter_from(from).take(self.dist(from, to) + 1).collect())
    }

    pub fn interval_contains(&self, ivl: RingInterval, x: usize) -> Result<bool> {
        self.check(ivl.from)?;
        self.check(ivl.to)?;
        self.check(x)?;
        Ok(self.contains(ivl, x))
    }

    /// Joins `left` and `right` into one interval when they are disjoint and
    /// `right` starts at the successor of `left.to`.
    pub fn join(&self, left: RingInterval, right: RingInterval) -> Result<Option<RingInterval>> {
        for x in [left.from, left.to, right.from, right.to] {
            self.check(x)?;
        }
        Ok(self.try_join(left, right))
    }

    pub fn interval_len(&self, ivl: RingInterval) -> Result<usize> {
        self.check(ivl.from)?;
        self.check(ivl.to)?;
        Ok(self.dist(ivl.from, ivl.to) + 1)
    }

    pub fn members(&self, ivl: RingInterval) -> Result<Vec<usize>> {
        self.ring_sequence(ivl.from, ivl.to)
    }

    // Unchecked helpers. Callers guarantee ids are in range.

    #[inline]
    pub(crate) fn pos(&self, x: usize) -> usize {
        self.position[x]
    }

    #[inline]
    pub(crate) fn succ(&self, a: usize) -> usize {
        let i = self.position[a] + 1;
        self.items[if i == self.len() { 0 } else { i }]
    }

    #[inline]
    pub(crate) fn pred(&self, a: usize) -> usize {
        let i = self.position[a];
        self.items[if i == 0 { self.len() - 1 } else { i - 1 }]
    }

    /// Number of successor steps from `a` to `b`.
    #[inline]
    pub(crate) fn dist(&self, a: usize, b: usize) -> usize {
        let n = self.len();
        (self.position[b] + n - self.position[a]) % n
    }

    #[inline]
    pub(crate) fn contains(&self, ivl: RingInterval, x: usize) -> bool {
        self.dist(ivl.from, x) <= self.dist(ivl.from, ivl.to)
    }

    #[inline]
    pub(crate) fn len_of(&self, ivl: RingInterval) -> usize {
        self.dist(ivl.from, ivl.to) + 1
    }

    pub(crate) fn disjoint(&self, a: RingInterval, b: RingInterval) -> bool {
        !self.contains(a, b.from) && !self.contains(b, a.from)
    }

    pub(crate) fn is_subset(&self, inner: RingInterval, outer: RingInterval) -> bool {
        self.contains(outer, inner.from)
            && self.contains(outer, inner.to)
            && self.dist(outer.from, inner.from) <= self.dist(outer.from, inner.to)
            || self.len_of(outer) == self.len()
    }

    pub(crate) fn try_join(&self, left: RingInterval, right: RingInterval) -> Option<RingInterval> {
        (self.disjoint(left, right) && self.succ(left.to) == right.from)
            .then(|| RingInterval::new(left.from, right.to))
    }

    pub(crate) fn iter_from(&self, start: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.position[start];
        self.items[p..].iter().chain(&self.items[..p]).copied()
    }

    pub(crate) fn iter_interval(&self, ivl: RingInterval) -> impl Iterator<Item = usize> + '_ {
        self.iter_from(ivl.from).take(self.len_of(ivl))
    }
}
