//! Shortest-path interval routing on circular-arc graphs.
//!
//! The pipeline runs from an [`ArcModel`] through its [`CliqueCycle`] and the
//! vertex order to a [`RoutingScheme`] with at most two ring-intervals per arc,
//! which [`verify_scheme`] checks against the graph alone.

pub mod builder;
pub mod clique_cycle;
pub mod error;
pub mod generator;
pub mod graph;
pub mod model;
pub mod oracle;
pub mod ring;
pub mod scheme;
pub mod verifier;

pub use builder::{build_scheme, build_vertex_order, construct, Construction, FaceCase, VertexFrame, VertexOrder};
pub use clique_cycle::{CliqueCycle, Reach};
pub use error::{Error, Result};
pub use generator::{gen_complete, gen_random, gen_ring, gen_wheel};
pub use graph::{Graph, UNREACHABLE};
pub use model::{parse_model, Arc, ArcModel};
pub use oracle::{has_shortest_path_1irs, OracleResult};
pub use ring::{CyclicOrder, RingInterval};
pub use scheme::{ArcLabel, RoutingScheme};
pub use verifier::{interval_stats, route, verify_scheme, verify_scheme_with, IntervalStats, VerificationReport, Violation};
