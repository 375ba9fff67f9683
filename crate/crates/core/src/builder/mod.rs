//! Shortest-path 2-interval routing schemes for real circular-arc graphs.

mod frame;
mod label;
mod order;

pub use frame::{FaceCase, VertexFrame};
pub use order::{build_vertex_order, VertexOrder};

use crate::clique_cycle::CliqueCycle;
use crate::error::Result;
use crate::graph::Graph;
use crate::model::ArcModel;
use crate::scheme::RoutingScheme;

use frame::{compute_frame, right_vertex, Ctx};
use label::{label_dominating, label_face_to_face, label_left, label_right, Assignments, Iterates};

/// Everything the construction produced, for inspection.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub cycle: CliqueCycle,
    pub order: VertexOrder,
    /// `None` for dominating vertices.
    pub frames: Vec<Option<VertexFrame>>,
    pub scheme: RoutingScheme,
}

pub fn build_scheme(model: &ArcModel) -> Result<RoutingScheme> {
    Ok(construct(model)?.scheme)
}

pub fn construct(model: &ArcModel) -> Result<Construction> {
    let graph = model.intersection_graph();
    let cycle = CliqueCycle::with_graph(model, &graph)?;
    let order = build_vertex_order(&cycle);
    let ctx = Ctx::new(&graph, &cycle, &order);
    let n = graph.n();

    let mut frames: Vec<Option<VertexFrame>> = Vec::with_capacity(n);
    for v in 0..n {
        frames.push(if cycle.is_dominating(v) {
            None
        } else {
            Some(compute_frame(&ctx, v)?)
        });
    }

    let iterates = if !ctx.any_dominating && ctx.pair.is_none() && ctx.cut.is_none() {
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for f in frames.iter().flatten() {
            left.push(f.left.ok_or_else(|| crate::error::Error::internal(f.v, "no left vertex"))?);
            right.push(right_vertex(&ctx, f)?);
        }
        Some(Iterates { left, right })
    } else {
        None
    };

    let mut labels = Vec::with_capacity(n);
    for (v, slot) in frames.iter_mut().enumerate() {
        let mut out = Assignments::default();
        match slot {
            None => label_dominating(&ctx, v, &mut out),
            Some(frame) => {
                label_right(&ctx, frame, &mut out);
                label_left(&ctx, frame, &mut out);
                label_face_to_face(&ctx, frame, iterates.as_ref(), &mut out)?;
            }
        }
        labels.push(out.into_labels(ctx.l()));
    }

    let scheme = RoutingScheme::new(order.order().clone(), labels)?;
    Ok(Construction {
        graph,
        cycle,
        order,
        frames,
        scheme,
    })
}
