//! Independent checking of routing schemes against the graph alone.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::ring::{CyclicOrder, RingInterval};
use crate::scheme::RoutingScheme;

/// One failed check. `arc` is the head of the outgoing arc involved, when
/// one is; `destination` the vertex whose routing is wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub arc: Option<usize>,
    pub destination: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalStats {
    pub total_intervals: usize,
    pub bound: usize,
    pub max_intervals_per_arc: usize,
    /// Vertices with at least one double-labelled outgoing arc.
    pub double_labeled_arcs_per_vertex: BTreeMap<usize, usize>,
    pub total_ok: bool,
    pub per_arc_ok: bool,
    pub doubles_ok: bool,
}

impl IntervalStats {
    pub fn ok(&self) -> bool {
        self.total_ok && self.per_arc_ok && self.doubles_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub strict: bool,
    pub strictness_ok: bool,
    pub disjoint_ok: bool,
    pub coverage_ok: bool,
    pub shortest_ok: bool,
    pub strictness: Vec<Violation>,
    pub disjoint: Vec<Violation>,
    pub coverage: Vec<Violation>,
    pub shortest: Vec<Violation>,
    pub stats: IntervalStats,
}

impl VerificationReport {
    /// All routing checks hold. Interval-count bounds are reported separately
    /// in `stats`.
    pub fn passed(&self) -> bool {
        self.strictness_ok && self.disjoint_ok && self.coverage_ok && self.shortest_ok
    }

    pub fn violation_count(&self) -> usize {
        self.strictness.len() + self.disjoint.len() + self.coverage.len() + self.shortest.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }
}

pub fn verify_scheme(graph: &Graph, scheme: &RoutingScheme) -> Result<VerificationReport> {
    verify_scheme_with(graph, scheme, true)
}

/// With `strict = false` a vertex may appear in one of its own intervals.
pub fn verify_scheme_with(graph: &Graph, scheme: &RoutingScheme, strict: bool) -> Result<VerificationReport> {
    check_structure(graph, scheme)?;
    let n = graph.n();
    let dist: Vec<Vec<usize>> = (0..n).into_par_iter().map(|s| graph.bfs_distances(s)).collect();

    let per_vertex: Vec<[Vec<Violation>; 4]> = (0..n)
        .into_par_iter()
        .map(|v| check_vertex(scheme, &dist, v, strict))
        .collect();

    let mut buckets: [Vec<Violation>; 4] = Default::default();
    for found in per_vertex {
        for (bucket, list) in buckets.iter_mut().zip(found) {
            bucket.extend(list);
        }
    }
    let [strictness, disjoint, coverage, shortest] = buckets;
    Ok(VerificationReport {
        strict,
        strictness_ok: strictness.is_empty(),
        disjoint_ok: disjoint.is_empty(),
        coverage_ok: coverage.is_empty(),
        shortest_ok: shortest.is_empty(),
        strictness,
        disjoint,
        coverage,
        shortest,
        stats: interval_stats(scheme, graph),
    })
}

fn check_structure(graph: &Graph, scheme: &RoutingScheme) -> Result<()> {
    if scheme.n() != graph.n() {
        return Err(Error::MalformedScheme(format!(
            "scheme orders {} vertices, graph has {}",
            scheme.n(),
            graph.n()
        )));
    }
    for (v, w, _) in scheme.arcs() {
        if !graph.adjacent(v, w) {
            return Err(Error::MalformedScheme(format!("{v}->{w} is not an edge of the graph")));
        }
    }
    Ok(())
}

fn members(order: &CyclicOrder, ivl: RingInterval) -> impl Iterator<Item = usize> + '_ {
    order.iter_interval(ivl)
}

fn check_vertex(scheme: &RoutingScheme, dist: &[Vec<usize>], v: usize, strict: bool) -> [Vec<Violation>; 4] {
    let order = scheme.order();
    let n = order.len();
    let mut strictness = Vec::new();
    let mut disjoint = Vec::new();
    let mut coverage = Vec::new();
    let mut shortest = Vec::new();
    let violation = |arc: Option<usize>, destination: Option<usize>, detail: String| Violation {
        vertex: v,
        arc,
        destination,
        detail,
    };

    // hits[p]: number of intervals containing the vertex at position p
    let mut diff = vec![0i64; n + 1];
    for label in scheme.outgoing(v) {
        let w = label.target;
        for &ivl in &label.intervals {
            let (a, b) = (order.pos(ivl.from), order.pos(ivl.to));
            if a <= b {
                diff[a] += 1;
                diff[b + 1] -= 1;
            } else {
                diff[a] += 1;
                diff[n] -= 1;
                diff[0] += 1;
                diff[b + 1] -= 1;
            }
            for u in members(order, ivl) {
                if u == v {
                    if strict {
                        strictness.push(violation(
                            Some(w),
                            Some(v),
                            format!("interval [{},{}] contains its own source", ivl.from, ivl.to),
                        ));
                    }
                    continue;
                }
                let (dv, dw) = (dist[v][u], dist[w][u]);
                if dv == UNREACHABLE || dw == UNREACHABLE || dw + 1 != dv {
                    shortest.push(violation(
                        Some(w),
                        Some(u),
                        format!("{w} is not a first vertex from {v} to {u}"),
                    ));
                }
            }
        }
    }
    let mut acc = 0i64;
    for (p, d) in diff[..n].iter().enumerate() {
        acc += d;
        let u = order.items()[p];
        if u == v {
            if acc > 1 {
                disjoint.push(violation(None, Some(u), format!("source lies in {acc} intervals")));
            }
            continue;
        }
        match acc {
            0 => coverage.push(violation(None, Some(u), format!("no interval contains {u}"))),
            1 => {}
            _ => disjoint.push(violation(None, Some(u), format!("{u} lies in {acc} intervals"))),
        }
    }
    [strictness, disjoint, coverage, shortest]
}

/// Interval accounting against the `2m + n` total, at most two intervals per
/// arc and at most one double-labelled arc per vertex.
pub fn interval_stats(scheme: &RoutingScheme, graph: &Graph) -> IntervalStats {
    let mut total = 0;
    let mut max_per_arc = 0;
    let mut doubles: BTreeMap<usize, usize> = BTreeMap::new();
    for (v, _, ivls) in scheme.arcs() {
        total += ivls.len();
        max_per_arc = max_per_arc.max(ivls.len());
        if ivls.len() >= 2 {
            *doubles.entry(v).or_default() += 1;
        }
    }
    let bound = 2 * graph.edge_count() + graph.n();
    IntervalStats {
        total_intervals: total,
        bound,
        max_intervals_per_arc: max_per_arc,
        total_ok: total <= bound,
        per_arc_ok: max_per_arc <= 2,
        doubles_ok: doubles.values().all(|&d| d <= 1),
        double_labeled_arcs_per_vertex: doubles,
    }
}

/// Follows the scheme hop by hop from `src` to `dst`.
pub fn route(scheme: &RoutingScheme, graph: &Graph, src: usize, dst: usize) -> Result<Vec<usize>> {
    let n = scheme.n();
    for x in [src, dst] {
        if x >= n || x >= graph.n() {
            return Err(Error::UnknownElement(x));
        }
    }
    let order = scheme.order();
    let mut path = vec![src];
    let mut at = src;
    while at != dst {
        if path.len() > n {
            return Err(Error::RouteLoop { src, dst, hops: n });
        }
        let mut next = None;
        let mut count = 0;
        for label in scheme.outgoing(at) {
            for &ivl in &label.intervals {
                if order.contains(ivl, dst) {
                    count += 1;
                    next = Some(label.target);
                }
            }
        }
        let hop = match (count, next) {
            (1, Some(w)) => w,
            (0, _) => return Err(Error::RouteHole { at, dst }),
            _ => return Err(Error::RouteAmbiguous { at, dst, count }),
        };
        if !graph.adjacent(at, hop) {
            return Err(Error::MalformedScheme(format!("{at}->{hop} is not an edge of the graph")));
        }
        path.push(hop);
        at = hop;
    }
    Ok(path)
}
