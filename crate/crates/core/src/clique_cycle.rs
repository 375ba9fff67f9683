//! Clique-cycles: the point-cliques of an arc model that are maximal among all
//! point-cliques, in clockwise order, together with each vertex's left and
//! right clique.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::ArcModel;
use crate::ring::{CyclicOrder, RingInterval};

/// How far `w` reaches in one direction compared with `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reach {
    Further,
    Equal,
    Less,
}

#[derive(Debug, Clone)]
pub struct CliqueCycle {
    cliques: CyclicOrder,
    gap: Vec<usize>,
    members: Vec<Vec<usize>>,
    lc: Vec<usize>,
    rc: Vec<usize>,
    dominating: Vec<bool>,
}

impl CliqueCycle {
    pub fn build(model: &ArcModel) -> Result<Self> {
        Self::with_graph(model, &model.intersection_graph())
    }

    /// Same as [`CliqueCycle::build`] with the intersection graph supplied.
    pub fn with_graph(model: &ArcModel, graph: &Graph) -> Result<Self> {
        if !model.is_real() {
            return Err(Error::NotRealCircularArc);
        }
        let n = model.n();
        let c = model.circle_size();
        let coverage = model.gap_coverage();

        // owner[p] = (arc, is_start) for endpoint position p
        let mut owner = vec![(0usize, false); c];
        for (i, a) in model.arcs().iter().enumerate() {
            owner[a.start] = (i, true);
            owner[a.end] = (i, false);
        }

        // A gap clique that is not a local maximum is a strict subset of a
        // neighbouring gap clique, so only local maxima are candidates.
        let mut kept: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut counts = Vec::new();
        for g in 0..c {
            let (a, a_starts) = owner[g];
            let (b, b_starts) = owner[(g + 1) % c];
            if !a_starts || b_starts {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&x| model.covers_gap(x, g)).collect();
            debug_assert_eq!(members.len(), coverage[g]);

            // Any other gap whose clique contains this one must be covered by
            // both `a` (which starts at g) and `b` (which ends right after g).
            // Offsets relative to g: a covers [0, len_a), b covers (c-len_b, c].
            let len_a = model.span(a);
            let len_b = model.span(b);
            let lo = c + 1 - len_b;
            let hi = len_a;
            let mut dominated = false;
            if a != b && lo < hi {
                counts.clear();
                counts.resize(hi - lo + 1, 0i64);
                for &x in &members {
                    let u = (model.arcs()[x].start + c - g) % c;
                    let len = model.span(x);
                    let mut add = |from: usize, to: usize| {
                        let (from, to) = (from.max(lo), to.min(hi - 1));
                        if from <= to {
                            counts[from - lo] += 1;
                            counts[to - lo + 1] -= 1;
                        }
                    };
                    if u + len <= c {
                        add(u, u + len - 1);
                    } else {
                        add(u, c - 1);
                        add(0, u + len - 1 - c);
                    }
                }
                let mut acc = 0;
                for t in lo..hi {
                    acc += counts[t - lo];
                    if acc as usize == members.len() {
                        let other = (g + t) % c;
                        if coverage[other] > members.len() || other < g {
                            dominated = true;
                            break;
                        }
                    }
                }
            }
            if !dominated {
                kept.push((g, members));
            }
        }

        let k = kept.len();
        let (gap, members): (Vec<usize>, Vec<Vec<usize>>) = kept.into_iter().unzip();

        let mut lc = vec![0; n];
        let mut rc = vec![0; n];
        let dominating: Vec<bool> = (0..n).map(|v| graph.is_dominating(v)).collect();
        for x in 0..n {
            if dominating[x] {
                // Every dominating vertex shares the span (C(z), z) with z = clique 0.
                lc[x] = 1 % k;
                rc[x] = 0;
                continue;
            }
            let s = model.arcs()[x].start;
            let len = model.span(x);
            let mut first: Option<(usize, usize)> = None;
            let mut last: Option<(usize, usize)> = None;
            let mut inside = 0;
            for (id, &g) in gap.iter().enumerate() {
                let off = (g + c - s) % c;
                if off < len {
                    inside += 1;
                    if first.is_none_or(|(o, _)| off < o) {
                        first = Some((off, id));
                    }
                    if last.is_none_or(|(o, _)| off > o) {
                        last = Some((off, id));
                    }
                }
            }
            let (Some((_, l)), Some((_, r))) = (first, last) else {
                return Err(Error::internal(x, "vertex lies in no maximal point-clique"));
            };
            if (r + k - l) % k + 1 != inside {
                return Err(Error::internal(x, "cliques containing vertex are not a ring-interval"));
            }
            lc[x] = l;
            rc[x] = r;
        }

        Ok(CliqueCycle {
            cliques: CyclicOrder::identity(k),
            gap,
            members,
            lc,
            rc,
            dominating,
        })
    }

    pub fn cliques(&self) -> &CyclicOrder {
        &self.cliques
    }

    /// Number of cliques.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn n(&self) -> usize {
        self.lc.len()
    }

    pub fn members(&self, clique: usize) -> &[usize] {
        &self.members[clique]
    }

    /// Gap position the clique was taken at.
    pub fn gap(&self, clique: usize) -> usize {
        self.gap[clique]
    }

    pub fn lc(&self, v: usize) -> usize {
        self.lc[v]
    }

    pub fn rc(&self, v: usize) -> usize {
        self.rc[v]
    }

    pub fn span(&self, v: usize) -> RingInterval {
        RingInterval::new(self.lc[v], self.rc[v])
    }

    /// Number of cliques in the span of `v`.
    pub fn broadness(&self, v: usize) -> usize {
        self.cliques.len_of(self.span(v))
    }

    pub fn is_dominating(&self, v: usize) -> bool {
        self.dominating[v]
    }

    pub fn span_contains(&self, v: usize, clique: usize) -> bool {
        self.dominating[v] || self.cliques.contains(self.span(v), clique)
    }

    /// Cyclic successor of a clique id.
    #[inline]
    pub(crate) fn next(&self, clique: usize) -> usize {
        if clique + 1 == self.len() {
            0
        } else {
            clique + 1
        }
    }

    #[inline]
    pub(crate) fn clique_dist(&self, a: usize, b: usize) -> usize {
        self.cliques.dist(a, b)
    }

    /// True when `v` and `w` share cliques that split into two ring-intervals.
    /// Dominating vertices are never part of a counter pair.
    pub fn is_counter_pair(&self, v: usize, w: usize) -> bool {
        if v == w || self.dominating[v] || self.dominating[w] {
            return false;
        }
        let (lv, lw, rw) = (self.lc[v], self.lc[w], self.rc[w]);
        let sv = self.span(v);
        self.cliques.contains(sv, lw)
            && self.cliques.contains(sv, rw)
            && self.clique_dist(lv, lw) > self.clique_dist(lv, rw)
    }

    pub fn counter_vertices(&self, graph: &Graph, v: usize) -> Vec<usize> {
        graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.is_counter_pair(v, w))
            .collect()
    }

    fn check_pair(&self, v: usize, w: usize, at: usize) -> Result<()> {
        for x in [v, w] {
            if !self.span_contains(x, at) {
                return Err(Error::NotInClique { vertex: x, clique: at });
            }
        }
        if self.is_counter_pair(v, w) {
            return Err(Error::CounterPair(v, w));
        }
        Ok(())
    }

    /// Compares `[lc(v), at]` with `[lc(w), at]`: `Further` when `w` reaches
    /// strictly further to the left than `v`.
    pub fn reaches_further_left(&self, v: usize, w: usize, at: usize) -> Result<Reach> {
        self.check_pair(v, w, at)?;
        let dv = self.clique_dist(self.lc[v], at);
        let dw = self.clique_dist(self.lc[w], at);
        Ok(compare(dw, dv))
    }

    /// Compares `[at, rc(v)]` with `[at, rc(w)]`.
    pub fn reaches_further_right(&self, v: usize, w: usize, at: usize) -> Result<Reach> {
        self.check_pair(v, w, at)?;
        let dv = self.clique_dist(at, self.rc[v]);
        let dw = self.clique_dist(at, self.rc[w]);
        Ok(compare(dw, dv))
    }
}

fn compare(w: usize, v: usize) -> Reach {
    match w.cmp(&v) {
        std::cmp::Ordering::Greater => Reach::Further,
        std::cmp::Ordering::Equal => Reach::Equal,
        std::cmp::Ordering::Less => Reach::Less,
    }
}

impl fmt::Display for CliqueCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, members) in self.members.iter().enumerate() {
            let list: Vec<String> = members.iter().map(usize::to_string).collect();
            writeln!(f, "{id}: {{{}}}", list.join(","))?;
        }
        for v in 0..self.n() {
            writeln!(f, "{v}: lc={} rc={}", self.lc[v], self.rc[v])?;
        }
        Ok(())
    }
}
