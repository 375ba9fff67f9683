//! Undirected simple graphs plus the shortest-path oracles the verifier leans on.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Distance reported for vertices in another component.
pub const UNREACHABLE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Self-loops are dropped and
    /// parallel edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut matrix = vec![false; n * n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            if u != v {
                matrix[u * n + v] = true;
                matrix[v * n + u] = true;
            }
        }
        Self::from_matrix(n, matrix)
    }

    pub(crate) fn from_matrix(n: usize, matrix: Vec<bool>) -> Self {
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| matrix[u * n + v]).collect())
            .collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { n, adj, matrix, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Arcs of the directed symmetric version.
    pub fn arc_count(&self) -> usize {
        2 * self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_dominating(&self, v: usize) -> bool {
        self.adj[v].len() + 1 == self.n
    }

    pub fn dominating_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_dominating(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances, row `s` holding distances from `s`.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|s| self.bfs_distances(s)).collect()
    }

    /// Neighbours of `u` that start some shortest path from `u` to `w`.
    pub fn first_vertices(&self, u: usize, w: usize) -> Result<Vec<usize>> {
        let to_w = self.bfs_distances(w);
        first_vertices_with(self, &to_w, u, w)
    }
}

/// Like [`Graph::first_vertices`], with distances to `w` already computed.
pub fn first_vertices_with(graph: &Graph, dist_to_w: &[usize], u: usize, w: usize) -> Result<Vec<usize>> {
    let d = dist_to_w[u];
    if u == w || d == UNREACHABLE {
        return Err(Error::Unreachable(u, w));
    }
    Ok(graph
        .neighbors(u)
        .iter()
        .copied()
        .filter(|&v| dist_to_w[v] + 1 == d)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(cycle(4).bfs_distances(0), vec![0, 1, 2, 1]);
        assert_eq!(complete(2).bfs_distances(0), vec![0, 1]);
        let isolated = Graph::from_edges(2, []);
        assert_eq!(isolated.bfs_distances(0), vec![0, UNREACHABLE]);
        assert!(!isolated.is_connected());
    }

    #[test]
    fn first_vertex_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.first_vertices(0, 2).unwrap(), vec![1, 3]);
        assert_eq!(c4.first_vertices(0, 1).unwrap(), vec![1]);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(path.first_vertices(0, 2).unwrap(), vec![1]);
        let isolated = Graph::from_edges(2, []);
        assert_eq!(isolated.first_vertices(0, 1), Err(Error::Unreachable(0, 1)));
    }

    #[test]
    fn dominating_examples() {
        assert_eq!(complete(4).dominating_vertices(), vec![0, 1, 2, 3]);
        assert!(cycle(4).dominating_vertices().is_empty());
        // hub 6 over the 6-cycle
        let wheel = Graph::from_edges(7, (0..6).map(|i| (i, (i + 1) % 6)).chain((0..6).map(|i| (i, 6))));
        assert_eq!(wheel.dominating_vertices(), vec![6]);
    }

    #[test]
    fn symmetric_arc_count() {
        let g = cycle(5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.arc_count(), 10);
        assert_eq!(g.edges().count(), 5);
    }
}
