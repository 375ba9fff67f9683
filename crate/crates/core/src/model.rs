//! Circular-arc models on a discrete circle.
//!
//! A model with `n` arcs lives on a circle of `2n` positions. Every position is
//! the endpoint of exactly one arc. Between position `g` and `g + 1 (mod 2n)`
//! lies the open gap `g`. An arc `(start, end)` runs clockwise and covers the
//! gaps `start, start+1, ..., end-1`. With distinct endpoints two closed arcs
//! meet exactly when they cover a common gap.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Arc {
    pub start: usize,
    pub end: usize,
}

impl From<Arc> for [usize; 2] {
    fn from(a: Arc) -> Self {
        [a.start, a.end]
    }
}

impl From<[usize; 2]> for Arc {
    fn from([start, end]: [usize; 2]) -> Self {
        Arc { start, end }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcModel {
    arcs: Vec<Arc>,
}

#[derive(Serialize)]
struct ModelFile<'a> {
    n: usize,
    arcs: &'a [Arc],
}

#[derive(Deserialize)]
struct RawModel {
    n: usize,
    arcs: Vec<[i64; 2]>,
}

impl ArcModel {
    pub fn new(arcs: Vec<Arc>) -> Result<Self> {
        let n = arcs.len();
        if n == 0 {
            return Err(Error::MalformedModel("model has no arcs".into()));
        }
        let circle = 2 * n;
        let mut seen = vec![false; circle];
        for (i, a) in arcs.iter().enumerate() {
            for p in [a.start, a.end] {
                if p >= circle {
                    return Err(Error::PositionOutOfRange {
                        arc: i,
                        position: p as i64,
                        circle,
                    });
                }
            }
            if a.start == a.end {
                return Err(Error::DegenerateArc {
                    arc: i,
                    position: a.start,
                });
            }
        }
        for a in &arcs {
            for p in [a.start, a.end] {
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::DuplicateEndpoint(p));
                }
            }
        }
        Ok(ArcModel { arcs })
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(start, end)| Arc { start, end }).collect())
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn circle_size(&self) -> usize {
        2 * self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Number of gaps covered by arc `i`.
    pub fn span(&self, i: usize) -> usize {
        let a = self.arcs[i];
        let c = self.circle_size();
        (a.end + c - a.start) % c
    }

    #[inline]
    pub fn covers_gap(&self, i: usize, gap: usize) -> bool {
        let a = self.arcs[i];
        let c = self.circle_size();
        (gap + c - a.start) % c < (a.end + c - a.start) % c
    }

    /// Coverage count of every gap.
    pub fn gap_coverage(&self) -> Vec<usize> {
        let c = self.circle_size();
        let mut diff = vec![0i64; c + 1];
        for a in &self.arcs {
            if a.start < a.end {
                diff[a.start] += 1;
                diff[a.end] -= 1;
            } else {
                diff[a.start] += 1;
                diff[c] -= 1;
                diff[0] += 1;
                diff[a.end] -= 1;
            }
        }
        let mut acc = 0i64;
        diff[..c]
            .iter()
            .map(|d| {
                acc += d;
                acc as usize
            })
            .collect()
    }

    /// True when the arcs cover the whole circle.
    pub fn is_real(&self) -> bool {
        self.gap_coverage().iter().all(|&c| c > 0)
    }

    pub fn intersects(&self, i: usize, j: usize) -> bool {
        i != j && (self.covers_gap(i, self.arcs[j].start) || self.covers_gap(j, self.arcs[i].start))
    }

    pub fn intersection_graph(&self) -> Graph {
        let n = self.n();
        let mut matrix = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                if self.intersects(i, j) {
                    matrix[i * n + j] = true;
                    matrix[j * n + i] = true;
                }
            }
        }
        Graph::from_matrix(n, matrix)
    }

    /// Canonical compact JSON: `{"n":<n>,"arcs":[[s,e],...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ModelFile {
            n: self.n(),
            arcs: &self.arcs,
        })
        .expect("model serialization is infallible")
    }
}

pub fn parse_model(bytes: &[u8]) -> Result<ArcModel> {
    let raw: RawModel =
        serde_json::from_slice(bytes).map_err(|e| Error::MalformedModel(e.to_string()))?;
    if raw.arcs.len() != raw.n {
        return Err(Error::ArcCountMismatch {
            declared: raw.n,
            listed: raw.arcs.len(),
        });
    }
    let circle = 2 * raw.n;
    let mut arcs = Vec::with_capacity(raw.n);
    for (i, [s, e]) in raw.arcs.into_iter().enumerate() {
        for p in [s, e] {
            if p < 0 || p as usize >= circle {
                return Err(Error::PositionOutOfRange {
                    arc: i,
                    position: p,
                    circle,
                });
            }
        }
        arcs.push(Arc {
            start: s as usize,
            end: e as usize,
        });
    }
    ArcModel::new(arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const C4: &str = r#"{"n":4,"arcs":[[0,3],[2,5],[4,7],[6,1]]}"#;

    #[test]
    fn parse_examples() {
        let one = parse_model(br#"{"n":1,"arcs":[[0,1]]}"#).unwrap();
        assert_eq!(one.n(), 1);
        let c4 = parse_model(C4.as_bytes()).unwrap();
        assert_eq!(c4.to_json(), C4);
        assert_eq!(
            parse_model(br#"{"n":2,"arcs":[[0,1],[1,2]]}"#),
            Err(Error::DuplicateEndpoint(1))
        );
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(
            parse_model(br#"{"n":1,"arcs":[[0,2]]}"#),
            Err(Error::PositionOutOfRange { position: 2, .. })
        ));
        assert!(matches!(
            parse_model(br#"{"n":1,"arcs":[[0,-1]]}"#),
            Err(Error::PositionOutOfRange { position: -1, .. })
        ));
        assert!(matches!(
            parse_model(br#"{"n":1,"arcs":[[1,1]]}"#),
            Err(Error::DegenerateArc { arc: 0, position: 1 })
        ));
        assert!(matches!(
            parse_model(br#"{"n":2,"arcs":[[0,1]]}"#),
            Err(Error::ArcCountMismatch { declared: 2, listed: 1 })
        ));
        assert!(matches!(parse_model(b"{"), Err(Error::MalformedModel(_))));
    }

    #[test]
    fn c4_intersection_graph() {
        let g = parse_model(C4.as_bytes()).unwrap().intersection_graph();
        assert_eq!(g.edge_count(), 4);
        for i in 0..4 {
            assert!(g.adjacent(i, (i + 1) % 4));
        }
        assert!(!g.adjacent(0, 2));
        assert!(!g.adjacent(1, 3));
    }

    #[test]
    fn small_intersection_examples() {
        let k2 = ArcModel::from_pairs(&[(0, 2), (1, 3)]).unwrap();
        assert!(k2.intersection_graph().adjacent(0, 1));
        let apart = ArcModel::from_pairs(&[(0, 1), (2, 3)]).unwrap();
        assert_eq!(apart.intersection_graph().edge_count(), 0);
    }

    #[test]
    fn realness_examples() {
        assert!(parse_model(C4.as_bytes()).unwrap().is_real());
        assert!(!ArcModel::from_pairs(&[(0, 1), (2, 3)]).unwrap().is_real());
        assert!(!ArcModel::from_pairs(&[(0, 1)]).unwrap().is_real());
        assert!(ArcModel::from_pairs(&[(0, 3), (2, 1)]).unwrap().is_real());
    }

    fn arb_model() -> impl Strategy<Value = ArcModel> {
        (1usize..=7)
            .prop_flat_map(|n| Just((0..2 * n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|p| {
                let arcs = p.chunks(2).map(|c| Arc { start: c[0], end: c[1] }).collect();
                ArcModel::new(arcs).unwrap()
            })
    }

    // Point-level coverage on the doubled circle: even index 2q is endpoint q,
    // odd index 2q+1 is gap q.
    fn covers_point(model: &ArcModel, i: usize, pt: usize) -> bool {
        let c2 = 2 * model.circle_size();
        let a = model.arcs()[i];
        (pt + c2 - 2 * a.start) % c2 <= (2 * a.end + c2 - 2 * a.start) % c2
    }

    proptest! {
        #[test]
        fn graph_is_symmetric_and_loop_free(model in arb_model()) {
            let g = model.intersection_graph();
            for u in 0..g.n() {
                prop_assert!(!g.adjacent(u, u));
                for v in 0..g.n() {
                    prop_assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
                }
            }
        }

        #[test]
        fn gap_test_matches_pointwise_geometry(model in arb_model()) {
            let g = model.intersection_graph();
            let points = 2 * model.circle_size();
            for i in 0..model.n() {
                for j in 0..model.n() {
                    if i == j { continue; }
                    let share = (0..points).any(|p| covers_point(&model, i, p) && covers_point(&model, j, p));
                    prop_assert_eq!(g.adjacent(i, j), share);
                }
            }
        }

        #[test]
        fn real_models_are_connected(model in arb_model()) {
            if model.is_real() {
                prop_assert!(model.intersection_graph().is_connected());
            }
        }

        #[test]
        fn canonical_json_round_trips(model in arb_model()) {
            prop_assert_eq!(parse_model(model.to_json().as_bytes()).unwrap(), model);
        }
    }
}
