//! Per-vertex frames: the left, middle and right vertex of `v` and the
//! partition of `V - {v}` into the vertices to the right of, face-to-face
//! with, and to the left of `v`.

use crate::clique_cycle::CliqueCycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ring::{CyclicOrder, RingInterval};

use super::order::VertexOrder;

/// Which rule distributed the face-to-face vertices of `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceCase {
    /// `v` is dominating; every arc carries a singleton.
    Dominating,
    /// Nothing is face-to-face with `v`.
    Empty,
    /// Dominating vertices are face-to-face with `v`.
    DominatingFaceToFace,
    /// `v` has counter vertices or the graph has dominating vertices.
    CounterOrDominating,
    /// Some counter pair exists and `v` is adjacent to both of its members.
    PairBoth,
    /// Some counter pair exists and `v` is adjacent to one member.
    PairOne,
    /// No dominating and no counter vertices: split at the separator.
    Separator,
    /// As `Separator`, but no arc crosses from some clique into the next, so
    /// the split happens at that boundary.
    Cut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFrame {
    pub v: usize,
    pub left: Option<usize>,
    pub middle: usize,
    pub right: Option<usize>,
    pub a: Option<RingInterval>,
    pub b: Option<RingInterval>,
    pub c: Option<RingInterval>,
    pub apex: Option<usize>,
    pub separator: Option<usize>,
    pub case: Option<FaceCase>,
}

/// Read-only structure shared by every per-vertex step.
pub(crate) struct Ctx<'a> {
    pub graph: &'a Graph,
    pub cycle: &'a CliqueCycle,
    pub vo: &'a VertexOrder,
    pub has_counter: Vec<bool>,
    pub any_dominating: bool,
    pub pair: Option<(usize, usize)>,
    /// A clique sharing no vertex with its predecessor.
    pub cut: Option<usize>,
}

impl<'a> Ctx<'a> {
    pub fn new(graph: &'a Graph, cycle: &'a CliqueCycle, vo: &'a VertexOrder) -> Self {
        let n = graph.n();
        let mut has_counter = vec![false; n];
        let mut pair = None;
        for (v, flag) in has_counter.iter_mut().enumerate() {
            for &w in graph.neighbors(v) {
                if cycle.is_counter_pair(v, w) {
                    *flag = true;
                    if pair.is_none() {
                        pair = Some((v, w));
                    }
                }
            }
        }
        Ctx {
            graph,
            cycle,
            vo,
            has_counter,
            any_dominating: (0..n).any(|v| cycle.is_dominating(v)),
            pair,
            cut: find_cut(cycle),
        }
    }

    #[inline]
    pub fn l(&self) -> &CyclicOrder {
        self.vo.order()
    }

    /// Whether `w` reaches further left than `v`; only meaningful for
    /// adjacent, non-dominating, non-counter pairs.
    fn further_left(&self, v: usize, w: usize) -> bool {
        !self.cycle.cliques().contains(self.cycle.span(v), self.cycle.lc(w))
    }

    /// Clique steps from `lc(w)` to `rc(v)`: larger reaches further left.
    fn left_reach(&self, v: usize, w: usize) -> usize {
        self.cycle.clique_dist(self.cycle.lc(w), self.cycle.rc(v))
    }

    /// Clique steps from `lc(v)` to `rc(w)`: larger reaches further right.
    fn right_reach(&self, v: usize, w: usize) -> usize {
        self.cycle.clique_dist(self.cycle.lc(v), self.cycle.rc(w))
    }
}

/// First clique that no non-dominating vertex enters from its predecessor.
fn find_cut(cycle: &CliqueCycle) -> Option<usize> {
    let k = cycle.len();
    if k < 2 {
        return None;
    }
    // crossing[c]: vertices holding both clique c - 1 and clique c
    let mut diff = vec![0i64; k + 1];
    for x in (0..cycle.n()).filter(|&x| !cycle.is_dominating(x)) {
        let (lc, rc) = (cycle.lc(x), cycle.rc(x));
        if lc == rc {
            continue;
        }
        let from = cycle.next(lc);
        if from <= rc {
            diff[from] += 1;
            diff[rc + 1] -= 1;
        } else {
            diff[from] += 1;
            diff[k] -= 1;
            diff[0] += 1;
            diff[rc + 1] -= 1;
        }
    }
    let mut acc = 0;
    (0..k).find(|&c| {
        acc += diff[c];
        acc == 0
    })
}

pub(crate) fn left_vertex(ctx: &Ctx, v: usize) -> Option<usize> {
    let l = ctx.l();
    let cc = ctx.cycle;
    let mut best: Option<usize> = None;
    let mut consider = |w: usize| {
        if best.is_none_or(|b| l.dist(w, v) > l.dist(b, v)) {
            best = Some(w);
        }
    };
    for &w in ctx.graph.neighbors(v) {
        if !cc.is_dominating(w) && !cc.is_counter_pair(v, w) && ctx.further_left(v, w) {
            consider(w);
        }
    }
    let head = ctx.vo.head(cc.lc(v)).expect("v sits in its own bucket");
    if head != v {
        consider(head);
    }
    best
}

pub(crate) fn middle_vertex(ctx: &Ctx, v: usize) -> usize {
    ctx.vo.last_upto(ctx.cycle.rc(v))
}

/// Left, middle and partition of a non-dominating vertex, with the
/// structural guarantees of the construction checked.
pub(crate) fn compute_frame(ctx: &Ctx, v: usize) -> Result<VertexFrame> {
    let cc = ctx.cycle;
    let l = ctx.l();
    if cc.is_dominating(v) {
        return Err(Error::internal(v, "frame requested for a dominating vertex"));
    }
    let left = left_vertex(ctx, v);
    let middle = middle_vertex(ctx, v);
    if !cc.cliques().contains(cc.span(v), cc.lc(middle)) {
        return Err(Error::internal(v, "middle vertex outside the span"));
    }
    let a = (middle != v).then(|| RingInterval::new(l.succ(v), middle));
    let after_m = l.succ(middle);
    let (b, c) = match left {
        Some(lv) => {
            if l.dist(v, lv) <= l.dist(v, middle) {
                return Err(Error::internal(v, "left vertex lies right of v"));
            }
            let b = (after_m != lv).then(|| RingInterval::new(after_m, l.pred(lv)));
            (b, Some(RingInterval::new(lv, l.pred(v))))
        }
        None => ((after_m != v).then(|| RingInterval::new(after_m, l.pred(v))), None),
    };

    if let Some(a) = a {
        for w in l.iter_interval(a) {
            if !ctx.graph.adjacent(v, w) {
                return Err(Error::internal(v, format!("vertex {w} right of v is not adjacent")));
            }
        }
    }
    if let Some(b) = b {
        for w in l.iter_interval(b) {
            if !cc.is_dominating(w) && ctx.graph.adjacent(v, w) {
                return Err(Error::internal(v, format!("face-to-face vertex {w} is adjacent")));
            }
        }
    }
    if let Some(lv) = left {
        let reach = ctx.left_reach(v, lv);
        for &u in ctx.graph.neighbors(v) {
            if !cc.is_dominating(u)
                && !cc.is_counter_pair(v, u)
                && ctx.further_left(v, u)
                && ctx.left_reach(v, u) > reach
            {
                return Err(Error::internal(v, format!("neighbour {u} reaches further left than {lv}")));
            }
        }
    }

    Ok(VertexFrame {
        v,
        left,
        middle,
        right: None,
        a,
        b,
        c,
        apex: None,
        separator: None,
        case: None,
    })
}

/// A neighbour of `v` reaching farthest right: the left vertex if it does,
/// else the middle vertex if it does, else the one closest after `v` in L.
pub(crate) fn right_vertex(ctx: &Ctx, frame: &VertexFrame) -> Result<usize> {
    let v = frame.v;
    let l = ctx.l();
    let best = ctx
        .graph
        .neighbors(v)
        .iter()
        .map(|&w| ctx.right_reach(v, w))
        .max()
        .ok_or_else(|| Error::internal(v, "isolated vertex"))?;
    let in_r = |w: usize| ctx.graph.adjacent(v, w) && ctx.right_reach(v, w) == best;
    if let Some(lv) = frame.left.filter(|&lv| in_r(lv)) {
        return Ok(lv);
    }
    if in_r(frame.middle) {
        return Ok(frame.middle);
    }
    Ok(ctx
        .graph
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| in_r(w))
        .min_by_key(|&w| l.dist(v, w))
        .expect("R is non-empty"))
}

/// Smallest `i` at which the iterated left and right vertices meet.
pub(crate) fn apex_number(ctx: &Ctx, left: &[usize], right: &[usize], v: usize) -> Result<usize> {
    let cc = ctx.cycle;
    let (l1, r1) = (left[v], right[v]);
    let back = RingInterval::new(cc.rc(r1), cc.lc(l1));
    if cc.lc(l1) == cc.rc(r1) || cc.cliques().is_subset(cc.span(v), back) {
        return Ok(1);
    }
    let (mut li, mut ri) = (l1, r1);
    for i in 2..=ctx.graph.n() + 1 {
        li = left[li];
        ri = right[ri];
        if li == ri || ctx.graph.adjacent(li, ri) {
            return Ok(i);
        }
    }
    Err(Error::internal(v, "apex iteration did not terminate"))
}

/// Last vertex of `B_v` routed through the right vertex.
pub(crate) fn separator(
    ctx: &Ctx,
    left: &[usize],
    right: &[usize],
    frame: &VertexFrame,
    apex: usize,
) -> Result<usize> {
    let l = ctx.l();
    let v = frame.v;
    let lv = frame.left.ok_or_else(|| Error::internal(v, "separator without left vertex"))?;
    if apex == 1 {
        return Ok(l.pred(lv));
    }
    let (mut l_prev, mut r_prev) = (lv, right[v]);
    for _ in 2..apex {
        l_prev = left[l_prev];
        r_prev = right[r_prev];
    }
    let start = l.succ(ctx.vo.last_upto(ctx.cycle.rc(r_prev)));
    let in_scope = RingInterval::new(l.succ(frame.middle), lv);
    let mut x = start;
    for _ in 0..l.len() {
        if x == l_prev || ctx.graph.adjacent(x, l_prev) {
            if !l.contains(in_scope, x) {
                return Err(Error::internal(v, format!("separator scan stopped at {x} outside B_v")));
            }
            return Ok(l.pred(x));
        }
        x = l.succ(x);
    }
    Err(Error::internal(v, "separator scan exhausted L"))
}
