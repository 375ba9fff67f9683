//! Exhaustive search for shortest-path 1-interval routing schemes on small
//! graphs.
//!
//! Any 1-IRS must put each neighbour `w` of `v` into the interval of arc
//! `(v, w)`, since `w` is the only first vertex from `v` to `w`. The intervals
//! of `v` therefore follow the cyclic order of its neighbours, and between two
//! consecutive neighbours the only freedom is where to cut. Each such gap is
//! decided on its own, which makes checking one vertex order `O(n^2)`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::ring::{CyclicOrder, RingInterval};
use crate::scheme::{ArcLabel, RoutingScheme};
use crate::verifier::verify_scheme_with;

pub const DEFAULT_LIMIT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub exists_1irs: bool,
    /// First witness in lexicographic order of the vertex orders tried.
    pub witness: Option<RoutingScheme>,
    pub orders_checked: usize,
}

/// Decides whether `graph` admits a shortest-path 1-IRS. With `strict` the
/// intervals of `v` must avoid `v`.
pub fn has_shortest_path_1irs(graph: &Graph, limit: usize, strict: bool) -> Result<OracleResult> {
    let n = graph.n();
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    if n == 0 {
        return Ok(OracleResult { exists_1irs: false, witness: None, orders_checked: 0 });
    }
    let dist = graph.distance_matrix();
    if dist[0].contains(&UNREACHABLE) {
        return Ok(OracleResult { exists_1irs: false, witness: None, orders_checked: 0 });
    }
    let search = Search { graph, dist: &dist, strict };

    // orders start with vertex 0; branches are split on the second vertex
    let branches: Vec<usize> = (1..n).collect();
    let found: Vec<(usize, Option<RoutingScheme>)> = if n == 1 {
        vec![(1, search.try_order(&[0]))]
    } else {
        branches
            .par_iter()
            .map(|&second| {
                let mut prefix = vec![0, second];
                let mut rest: Vec<usize> = (1..n).filter(|&x| x != second).collect();
                let mut checked = 0;
                let w = search.enumerate(&mut prefix, &mut rest, &mut checked);
                (checked, w)
            })
            .collect()
    };
    let orders_checked = found.iter().map(|(c, _)| c).sum();
    let witness = found.into_iter().find_map(|(_, w)| w);
    if let Some(w) = &witness {
        let report = verify_scheme_with(graph, w, strict)?;
        if !report.passed() || report.stats.max_intervals_per_arc > 1 {
            return Err(Error::internal(0, "oracle witness failed verification"));
        }
    }
    Ok(OracleResult {
        exists_1irs: witness.is_some(),
        witness,
        orders_checked,
    })
}

struct Search<'a> {
    graph: &'a Graph,
    dist: &'a [Vec<usize>],
    strict: bool,
}

impl Search<'_> {
    /// Lexicographic DFS; `rest` stays sorted between calls.
    fn enumerate(&self, prefix: &mut Vec<usize>, rest: &mut Vec<usize>, checked: &mut usize) -> Option<RoutingScheme> {
        if rest.is_empty() {
            *checked += 1;
            return self.try_order(prefix);
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            let found = self.enumerate(prefix, rest, checked);
            prefix.pop();
            rest.insert(i, x);
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn try_order(&self, items: &[usize]) -> Option<RoutingScheme> {
        let order = CyclicOrder::new(items.to_vec()).expect("enumerated orders are permutations");
        let mut labels = Vec::with_capacity(items.len());
        for v in 0..items.len() {
            labels.push(self.label_vertex(&order, v)?);
        }
        Some(RoutingScheme::new(order, labels).expect("oracle labels are well formed"))
    }

    /// `w` is a first vertex from `v` to `u`, or `u = v` in the non-strict case.
    fn allowed(&self, v: usize, w: usize, u: usize) -> bool {
        if u == v {
            return !self.strict;
        }
        self.dist[w][u] + 1 == self.dist[v][u]
    }

    fn label_vertex(&self, order: &CyclicOrder, v: usize) -> Option<Vec<ArcLabel>> {
        let nbrs: Vec<usize> = order.iter_from(v).filter(|&w| self.graph.adjacent(v, w)).collect();
        if nbrs.is_empty() {
            return (order.len() == 1).then(Vec::new);
        }
        let k = nbrs.len();
        // cut[i]: how many vertices after nbrs[i] stay on arc nbrs[i]; the rest
        // of that gap goes to nbrs[i + 1]
        let mut cut = Vec::with_capacity(k);
        for i in 0..k {
            let (w, next) = (nbrs[i], nbrs[(i + 1) % k]);
            let gap: Vec<usize> = order.iter_from(order.succ(w)).take_while(|&u| u != next).collect();
            let prefix = gap.iter().take_while(|&&u| self.allowed(v, w, u)).count();
            let suffix = gap.iter().rev().take_while(|&&u| self.allowed(v, next, u)).count();
            let split = if self.strict {
                match gap.iter().position(|&u| u == v) {
                    Some(t) if prefix >= t && suffix >= gap.len() - t - 1 => t,
                    Some(_) => return None,
                    None if prefix + suffix >= gap.len() => prefix.min(gap.len()),
                    None => return None,
                }
            } else if prefix + suffix >= gap.len() {
                prefix.min(gap.len())
            } else {
                return None;
            };
            cut.push((gap, split));
        }
        let mut labels = Vec::with_capacity(k);
        for i in 0..k {
            let w = nbrs[i];
            let (prev_gap, prev_split) = &cut[(i + k - 1) % k];
            let (gap, split) = &cut[i];
            // in the strict case the source itself is skipped at the cut
            let skip = usize::from(self.strict && prev_gap.get(*prev_split) == Some(&v));
            let from = prev_gap.get(prev_split + skip).copied().unwrap_or(w);
            let to = if *split == 0 { w } else { gap[split - 1] };
            labels.push(ArcLabel {
                target: w,
                intervals: vec![RingInterval::new(from, to)],
            });
        }
        Some(labels)
    }
}
