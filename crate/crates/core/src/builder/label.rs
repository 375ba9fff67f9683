//! Arc labelling for a single vertex.

use crate::error::{Error, Result};
use crate::ring::{CyclicOrder, RingInterval};
use crate::scheme::ArcLabel;

use super::frame::{apex_number, right_vertex, separator, Ctx, FaceCase, VertexFrame};

/// Intervals assigned to the outgoing arcs of one vertex, in assignment order.
#[derive(Debug, Default)]
pub(crate) struct Assignments {
    items: Vec<(usize, RingInterval)>,
}

impl Assignments {
    pub fn push(&mut self, target: usize, ivl: RingInterval) {
        self.items.push((target, ivl));
    }

    /// Groups by target and joins adjacent intervals until nothing changes.
    pub fn into_labels(mut self, order: &CyclicOrder) -> Vec<ArcLabel> {
        self.items.sort_by_key(|&(t, _)| t);
        let mut out: Vec<ArcLabel> = Vec::new();
        for (target, ivl) in self.items {
            match out.last_mut() {
                Some(last) if last.target == target => last.intervals.push(ivl),
                _ => out.push(ArcLabel { target, intervals: vec![ivl] }),
            }
        }
        for arc in &mut out {
            compress(order, &mut arc.intervals);
        }
        out
    }
}

pub(crate) fn compress(order: &CyclicOrder, ivls: &mut Vec<RingInterval>) {
    'again: loop {
        for i in 0..ivls.len() {
            for j in 0..ivls.len() {
                if i == j {
                    continue;
                }
                if let Some(joined) = order.try_join(ivls[i], ivls[j]) {
                    ivls[i] = joined;
                    ivls.swap_remove(j);
                    continue 'again;
                }
            }
        }
        break;
    }
}

pub(crate) fn label_dominating(ctx: &Ctx, v: usize, out: &mut Assignments) {
    for &w in ctx.graph.neighbors(v) {
        out.push(w, RingInterval::singleton(w));
    }
}

pub(crate) fn label_right(ctx: &Ctx, frame: &VertexFrame, out: &mut Assignments) {
    if let Some(a) = frame.a {
        for w in ctx.l().iter_interval(a) {
            out.push(w, RingInterval::singleton(w));
        }
    }
}

/// Each neighbour `v_i` in `C_v` takes the run up to the next neighbour.
pub(crate) fn label_left(ctx: &Ctx, frame: &VertexFrame, out: &mut Assignments) {
    let Some(c) = frame.c else { return };
    let l = ctx.l();
    let mut current: Option<usize> = None;
    for w in l.iter_interval(c) {
        if ctx.graph.adjacent(frame.v, w) {
            if let Some(prev) = current {
                out.push(prev, RingInterval::new(prev, l.pred(w)));
            }
            current = Some(w);
        }
    }
    if let Some(prev) = current {
        out.push(prev, RingInterval::new(prev, l.pred(frame.v)));
    }
}

/// Globally computed left and right vertices, present only when the graph has
/// neither dominating nor counter vertices.
pub(crate) struct Iterates {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub(crate) fn label_face_to_face(
    ctx: &Ctx,
    frame: &mut VertexFrame,
    iterates: Option<&Iterates>,
    out: &mut Assignments,
) -> Result<()> {
    let v = frame.v;
    let l = ctx.l();
    let cc = ctx.cycle;
    let Some(b) = frame.b else {
        frame.case = Some(FaceCase::Empty);
        return Ok(());
    };

    let doms: Vec<usize> = l.iter_interval(b).filter(|&w| cc.is_dominating(w)).collect();
    if let (Some(&dl), Some(&dr)) = (doms.first(), doms.last()) {
        frame.case = Some(FaceCase::DominatingFaceToFace);
        if dl == dr {
            out.push(dl, b);
            return Ok(());
        }
        out.push(dl, RingInterval::new(b.from, dl));
        out.push(dr, RingInterval::new(dr, b.to));
        let inner = RingInterval::new(l.succ(dl), l.pred(dr));
        if l.succ(dl) != dr {
            for w in l.iter_interval(inner) {
                if !cc.is_dominating(w) {
                    return Err(Error::internal(v, "dominating vertices are not consecutive in L"));
                }
                out.push(w, RingInterval::singleton(w));
            }
        }
        return Ok(());
    }

    if ctx.has_counter[v] || ctx.any_dominating {
        frame.case = Some(FaceCase::CounterOrDominating);
        let eligible = |u: usize| cc.is_dominating(u) || cc.is_counter_pair(v, u);
        let u = if eligible(frame.middle) {
            frame.middle
        } else {
            ctx.graph
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| eligible(u))
                .ok_or_else(|| Error::internal(v, "no counter or dominating vertex to route through"))?
        };
        out.push(u, b);
        return Ok(());
    }

    if let Some((w, cw)) = ctx.pair {
        let lv = frame
            .left
            .ok_or_else(|| Error::internal(v, "face-to-face vertices but no left vertex"))?;
        let (adj_w, adj_cw) = (ctx.graph.adjacent(v, w), ctx.graph.adjacent(v, cw));
        if adj_w && adj_cw {
            frame.case = Some(FaceCase::PairBoth);
            let target = pair_side(ctx, v, w, cw)?;
            out.push(target, b);
            return Ok(());
        }
        if !adj_w && !adj_cw {
            return Err(Error::internal(v, format!("adjacent to neither of counter pair ({w},{cw})")));
        }
        frame.case = Some(FaceCase::PairOne);
        let r = right_vertex(ctx, frame)?;
        frame.right = Some(r);
        let mr = ctx.vo.last_upto(cc.rc(r));
        let mut x = l.succ(frame.middle);
        loop {
            if x == lv {
                out.push(r, b);
                return Ok(());
            }
            if x == mr {
                out.push(r, RingInterval::new(b.from, mr));
                if l.succ(mr) != lv {
                    out.push(lv, RingInterval::new(l.succ(mr), b.to));
                }
                return Ok(());
            }
            x = l.succ(x);
        }
    }

    if let Some(cut) = ctx.cut {
        // No arc crosses into `cut`: vertices of B_v before its bucket are
        // reached through the right vertex, the rest through the left one.
        frame.case = Some(FaceCase::Cut);
        let rv = right_vertex(ctx, frame)?;
        frame.right = Some(rv);
        let head = ctx.vo.head(cut).ok_or_else(|| Error::internal(v, "cut clique has no bucket"))?;
        let s = match frame.left {
            Some(lv) if l.contains(RingInterval::new(b.from, lv), head) => l.pred(head),
            Some(_) => return Err(Error::internal(v, "cut lies outside the face-to-face vertices")),
            None => b.to,
        };
        frame.separator = Some(s);
        if s != frame.middle {
            out.push(rv, RingInterval::new(b.from, s));
        }
        if s != b.to {
            let lv = frame.left.expect("only a left vertex leaves vertices after the separator");
            out.push(lv, RingInterval::new(l.succ(s), b.to));
        }
        return Ok(());
    }

    let it = iterates.ok_or_else(|| Error::internal(v, "left/right iterates unavailable"))?;
    frame.case = Some(FaceCase::Separator);
    let lv = frame
        .left
        .ok_or_else(|| Error::internal(v, "face-to-face vertices but no left vertex"))?;
    let rv = it.right[v];
    frame.right = Some(rv);
    let apex = apex_number(ctx, &it.left, &it.right, v)?;
    let s = separator(ctx, &it.left, &it.right, frame, apex)?;
    frame.apex = Some(apex);
    frame.separator = Some(s);
    if s != frame.middle {
        out.push(rv, RingInterval::new(b.from, s));
    }
    if l.succ(s) != lv {
        out.push(lv, RingInterval::new(l.succ(s), b.to));
    }
    Ok(())
}

/// For `v` adjacent to both members of a counter pair: walking the clique
/// cycle from a clique holding all three, the member that stays longer.
fn pair_side(ctx: &Ctx, v: usize, w: usize, cw: usize) -> Result<usize> {
    let cc = ctx.cycle;
    let k = cc.len();
    let span = cc.span(v);
    let start = cc
        .cliques()
        .iter_interval(span)
        .find(|&c| cc.span_contains(w, c) && cc.span_contains(cw, c))
        .ok_or_else(|| Error::internal(v, format!("no clique holds {v}, {w} and {cw}")))?;
    let mut c = start;
    for _ in 0..k {
        let (hw, hc) = (cc.span_contains(w, c), cc.span_contains(cw, c));
        if hw != hc {
            return Ok(if hw { w } else { cw });
        }
        c = cc.next(c);
    }
    Err(Error::internal(v, "counter pair never separates along the clique cycle"))
}
