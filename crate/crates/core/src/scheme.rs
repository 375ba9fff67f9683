//! Routing schemes: a cyclic vertex order plus ring-interval labels on arcs.
//!
//! File format (UTF-8 JSON, keys ascending by source then target):
//!
//! ```text
//! {"order":[0,1,2,3],"labels":{"0->1":[[1,2]],"0->3":[[3,3]],...}}
//! ```

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{CyclicOrder, RingInterval};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabel {
    pub target: usize,
    pub intervals: Vec<RingInterval>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutingScheme {
    order: CyclicOrder,
    labels: Vec<Vec<ArcLabel>>,
}

impl RoutingScheme {
    /// `labels[v]` holds the outgoing arcs of `v`; they are sorted by target
    /// and arcs without intervals are dropped.
    pub fn new(order: CyclicOrder, mut labels: Vec<Vec<ArcLabel>>) -> Result<Self> {
        let n = order.len();
        if labels.len() != n {
            return Err(Error::MalformedScheme(format!(
                "{} label rows for {n} vertices",
                labels.len()
            )));
        }
        for (v, row) in labels.iter_mut().enumerate() {
            row.retain(|a| !a.intervals.is_empty());
            row.sort_by_key(|a| a.target);
            for pair in row.windows(2) {
                if pair[0].target == pair[1].target {
                    return Err(Error::MalformedScheme(format!("arc {v}->{} listed twice", pair[0].target)));
                }
            }
            for arc in row.iter() {
                if arc.target >= n || arc.target == v {
                    return Err(Error::MalformedScheme(format!("bad arc {v}->{}", arc.target)));
                }
                for ivl in &arc.intervals {
                    if ivl.from >= n || ivl.to >= n {
                        return Err(Error::MalformedScheme(format!(
                            "interval [{},{}] on {v}->{} names an unknown vertex",
                            ivl.from, ivl.to, arc.target
                        )));
                    }
                }
            }
        }
        Ok(RoutingScheme { order, labels })
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &CyclicOrder {
        &self.order
    }

    pub fn outgoing(&self, v: usize) -> &[ArcLabel] {
        &self.labels[v]
    }

    pub fn intervals(&self, v: usize, w: usize) -> &[RingInterval] {
        self.labels[v]
            .binary_search_by_key(&w, |a| a.target)
            .map(|i| self.labels[v][i].intervals.as_slice())
            .unwrap_or(&[])
    }

    /// Every labelled arc `(v, w, intervals)`, ascending by `v` then `w`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, &[RingInterval])> + '_ {
        self.labels.iter().enumerate().flat_map(|(v, row)| {
            row.iter()
                .map(move |a| (v, a.target, a.intervals.as_slice()))
        })
    }

    pub fn total_intervals(&self) -> usize {
        self.arcs().map(|(_, _, ivls)| ivls.len()).sum()
    }

    /// Mutable access for tests and fault injection.
    pub fn labels_mut(&mut self) -> &mut Vec<Vec<ArcLabel>> {
        &mut self.labels
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SchemeFile { scheme: self }).expect("scheme serialization is infallible")
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let raw: RawScheme =
            serde_json::from_slice(bytes).map_err(|e| Error::MalformedScheme(e.to_string()))?;
        let n = raw.order.len();
        let order = CyclicOrder::new(raw.order)
            .map_err(|_| Error::MalformedScheme(format!("order is not a permutation of 0..{n}")))?;
        let mut labels: Vec<Vec<ArcLabel>> = vec![Vec::new(); n];
        for (key, ivls) in raw.labels {
            let (v, w) = parse_arc_key(&key)
                .ok_or_else(|| Error::MalformedScheme(format!("bad arc key {key:?}")))?;
            if v >= n {
                return Err(Error::MalformedScheme(format!("arc {key} leaves unknown vertex")));
            }
            labels[v].push(ArcLabel {
                target: w,
                intervals: ivls.into_iter().map(RingInterval::from).collect(),
            });
        }
        RoutingScheme::new(order, labels)
    }
}

fn parse_arc_key(key: &str) -> Option<(usize, usize)> {
    let (v, w) = key.split_once("->")?;
    Some((v.trim().parse().ok()?, w.trim().parse().ok()?))
}

struct SchemeFile<'a> {
    scheme: &'a RoutingScheme,
}

struct LabelMap<'a>(&'a RoutingScheme);

impl Serialize for SchemeFile<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("order", self.scheme.order.items())?;
        map.serialize_entry("labels", &LabelMap(self.scheme))?;
        map.end()
    }
}

impl Serialize for LabelMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (v, w, ivls) in self.0.arcs() {
            map.serialize_entry(&format!("{v}->{w}"), ivls)?;
        }
        map.end()
    }
}

#[derive(Deserialize)]
struct RawScheme {
    order: Vec<usize>,
    labels: BTreeMap<String, Vec<[usize; 2]>>,
}
