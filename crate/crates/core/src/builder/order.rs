//! The vertex order L: vertices bucketed by left clique, starting at clique 0,
//! each bucket sorted by how far its vertices reach to the right.

use crate::clique_cycle::CliqueCycle;
use crate::ring::CyclicOrder;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    order: CyclicOrder,
    head: Vec<Option<usize>>,
    tail: Vec<Option<usize>>,
    // latest[c]: tail of the closest non-empty bucket at or before clique c
    latest: Vec<usize>,
}

/// Buckets by left clique; within a bucket by broadness, then id. Every
/// later vertex of a bucket thus reaches at least as far right as an earlier one.
pub fn build_vertex_order(cycle: &CliqueCycle) -> VertexOrder {
    let k = cycle.len();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); k];
    for v in 0..cycle.n() {
        buckets[cycle.lc(v)].push(v);
    }
    let mut items = Vec::with_capacity(cycle.n());
    let mut head = vec![None; k];
    let mut tail = vec![None; k];
    for (c, bucket) in buckets.iter_mut().enumerate() {
        bucket.sort_by_key(|&v| (cycle.broadness(v), v));
        head[c] = bucket.first().copied();
        tail[c] = bucket.last().copied();
        items.extend_from_slice(bucket);
    }
    let start = tail.iter().rposition(Option::is_some).expect("some vertex has a left clique");
    let mut latest = vec![0; k];
    let mut cur = tail[start].unwrap();
    for c in 0..k {
        if let Some(t) = tail[c] {
            cur = t;
        }
        latest[c] = cur;
    }
    VertexOrder {
        order: CyclicOrder::new(items).expect("buckets partition the vertices"),
        head,
        tail,
        latest,
    }
}

impl VertexOrder {
    pub fn order(&self) -> &CyclicOrder {
        &self.order
    }

    /// First vertex whose left clique is `clique`.
    pub fn head(&self, clique: usize) -> Option<usize> {
        self.head[clique]
    }

    /// Last vertex whose left clique is `clique`.
    pub fn tail(&self, clique: usize) -> Option<usize> {
        self.tail[clique]
    }

    /// Last vertex of L whose left clique lies at or before `clique`, i.e. the
    /// tail of `clique` when its bucket is non-empty.
    pub fn last_upto(&self, clique: usize) -> usize {
        self.latest[clique]
    }
}
