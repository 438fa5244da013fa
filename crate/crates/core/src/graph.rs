//! Simple undirected graphs on dense vertex ids `0..n-1`, with the BFS,
//! component, and ball machinery the spectral layers are built on.
//!
//! Vertices are capped at 64 so adjacency rows fit in one word; every
//! consumer in this workspace operates at desk scale (enumeration budgets
//! stop at 10 vertices, constructions below 64).

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on vertex count; adjacency rows are single `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph: no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Ball of a given radius around a center vertex: the vertex set within
/// that graph distance together with the induced subgraph.
#[derive(Clone, Debug)]
pub struct Ball {
    pub center: usize,
    pub radius: usize,
    pub vertices: Vec<usize>,
    pub mask: u64,
    pub induced: Graph,
}

impl Graph {
    /// Build a graph from an explicit edge list. Rejects loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Parameter(format!(
                "vertex count {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let mut g = Graph {
            n,
            adj: vec![0u64; n],
        };
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Structure(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::Structure(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::Structure(format!("duplicate edge ({u},{v})")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges)
    }

    /// Star with center 0 and the given number of leaves.
    pub fn star(leaves: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges)
    }

    /// Disjoint union of `count` cliques on `k` vertices each.
    pub fn disjoint_cliques(count: usize, k: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for c in 0..count {
            let base = c * k;
            for u in 0..k {
                for v in u + 1..k {
                    edges.push((base + u, base + v));
                }
            }
        }
        Graph::new(count * k, &edges)
    }

    pub fn petersen() -> Graph {
        // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::new(10, &edges).expect("valid construction")
    }

    /// Paley graph on 9 vertices: elements of GF(9), edges at differences
    /// that are nonzero squares.
    pub fn paley9() -> Graph {
        // GF(9) as pairs (a, b) = a + b*i over F_3 with i^2 = -1.
        let idx = |a: usize, b: usize| 3 * a + b;
        let mut squares = [false; 9];
        for a in 0..3usize {
            for b in 0..3usize {
                if a == 0 && b == 0 {
                    continue;
                }
                let sa = (a * a + 2 * b * b) % 3; // a^2 - b^2
                let sb = (2 * a * b) % 3;
                squares[idx(sa, sb)] = true;
            }
        }
        let mut edges = Vec::new();
        for u in 0..9usize {
            for v in u + 1..9 {
                let (ua, ub) = (u / 3, u % 3);
                let (va, vb) = (v / 3, v % 3);
                let da = (ua + 3 - va) % 3;
                let db = (ub + 3 - vb) % 3;
                if squares[idx(da, db)] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(9, &edges).expect("valid construction")
    }

    /// Disjoint union, relabeling each part after the previous ones.
    pub fn disjoint_union(parts: &[&Graph]) -> Result<Graph> {
        let n: usize = parts.iter().map(|g| g.n).sum();
        let mut edges = Vec::new();
        let mut base = 0;
        for g in parts {
            for (u, v) in g.edges() {
                edges.push((base + u, base + v));
            }
            base += g.n;
        }
        Graph::new(n, &edges)
    }

    /// Graph with the given adjacency bit rows; callers must supply a
    /// symmetric, loop-free structure.
    pub(crate) fn from_adj_unchecked(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> v) & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut m = self.adj[v];
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(u)
            }
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// All-vertices bitmask.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on the vertices of `mask`, plus the map from new
    /// ids back to the originals.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = (0..self.n).filter(|&v| (mask >> v) & 1 == 1).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            let mut m = self.adj[v] & mask;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                adj[i] |= 1 << pos[u];
            }
        }
        (Graph::from_adj_unchecked(verts.len(), adj), verts)
    }

    /// Delete the vertices of `mask`; returns the remaining induced graph
    /// and its vertex map.
    pub fn without_vertices(&self, mask: u64) -> (Graph, Vec<usize>) {
        self.induced(self.full_mask() & !mask)
    }

    /// Seidel switching: complement all edges across the cut (s, V - s).
    pub fn switch_cut(&self, s_mask: u64) -> Graph {
        let full = self.full_mask();
        let s = s_mask & full;
        let t = full & !s;
        let mut adj = self.adj.clone();
        for v in 0..self.n {
            let across = if (s >> v) & 1 == 1 { t } else { s };
            adj[v] = (adj[v] & !across) | (!adj[v] & across & full & !(1 << v));
        }
        Graph::from_adj_unchecked(self.n, adj)
    }

    /// BFS distances from `v`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut frontier = 1u64 << v;
        let mut seen = frontier;
        let mut d = 0usize;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[u];
            }
            next &= !seen;
            seen |= next;
            let mut m = next;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                dist[u] = d;
            }
            frontier = next;
        }
        dist
    }

    /// Multi-source BFS distances from every vertex of `mask`. An empty
    /// source set leaves every distance at `usize::MAX`.
    pub fn distances_from_set(&self, mask: u64) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut frontier = mask & self.full_mask();
        let mut seen = frontier;
        let mut m = frontier;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            dist[u] = 0;
        }
        let mut d = 0usize;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[u];
            }
            next &= !seen;
            seen |= next;
            let mut m = next;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                dist[u] = d;
            }
            frontier = next;
        }
        dist
    }

    /// Ball of radius `r` around `v`: all vertices at distance <= r with
    /// the induced subgraph.
    pub fn ball(&self, v: usize, r: usize) -> Result<Ball> {
        if v >= self.n {
            return Err(Error::Parameter(format!("vertex {v} out of range")));
        }
        let dist = self.bfs_distances(v);
        let mut mask = 0u64;
        for u in 0..self.n {
            if dist[u] <= r {
                mask |= 1 << u;
            }
        }
        let (induced, vertices) = self.induced(mask);
        Ok(Ball {
            center: v,
            radius: r,
            vertices,
            mask,
            induced,
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Connected components as induced subgraphs with maps back to the
    /// original vertex ids.
    pub fn components(&self) -> Vec<(Graph, Vec<usize>)> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if (seen >> v) & 1 == 1 {
                continue;
            }
            let dist = self.bfs_distances(v);
            let mut mask = 0u64;
            for u in 0..self.n {
                if dist[u] != usize::MAX {
                    mask |= 1 << u;
                }
            }
            seen |= mask;
            out.push(self.induced(mask));
        }
        out
    }

    /// Dense adjacency matrix as row-major f64 entries.
    pub fn adjacency_f64(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                a[u * self.n + v] = 1.0;
            }
        }
        a
    }

    // -- text formats ------------------------------------------------------

    /// Edge-list text format: first line `n m`, then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Compact single-line encoding: `n|bits` where the bits are the
    /// upper-triangle rows of the adjacency matrix after relabeling the
    /// vertices by descending degree (stable on ids). This is the witness
    /// format the search emits.
    pub fn to_compact(&self) -> String {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut bits = String::with_capacity(self.n * (self.n.saturating_sub(1)) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                bits.push(if self.has_edge(order[i], order[j]) {
                    '1'
                } else {
                    '0'
                });
            }
        }
        format!("{}|{}", self.n, bits)
    }

    /// Parse either text format; a `|` marks the compact encoding.
    pub fn from_text(s: &str) -> Result<Graph> {
        let trimmed = s.trim();
        if trimmed.contains('|') {
            return Graph::from_compact(trimmed);
        }
        let mut lines = trimmed.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad header: expected `n m`".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad header: expected `n m`".into()))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declared {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, &edges)
    }

    pub fn from_compact(s: &str) -> Result<Graph> {
        let (n_str, bits) = s
            .trim()
            .split_once('|')
            .ok_or_else(|| Error::Parse("compact encoding needs `n|bits`".into()))?;
        let n: usize = n_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {n_str:?}")))?;
        let expect = n * n.saturating_sub(1) / 2;
        let bits = bits.trim();
        if bits.len() != expect {
            return Err(Error::Parse(format!(
                "compact encoding for n={n} needs {expect} bits, got {}",
                bits.len()
            )));
        }
        let mut edges = Vec::new();
        let mut it = bits.chars();
        for i in 0..n {
            for j in i + 1..n {
                match it.next() {
                    Some('1') => edges.push((i, j)),
                    Some('0') => {}
                    _ => return Err(Error::Parse("compact bits must be 0/1".into())),
                }
            }
        }
        Graph::new(n, &edges)
    }

    /// Upper-triangle bits packed into a u64, most significant bit first
    /// (edge (0,1) highest). Integer order equals lexicographic order of
    /// the bit string. Only defined for n <= 11.
    pub(crate) fn triangle_code(&self) -> u64 {
        assert!(self.n <= 11, "triangle_code needs n <= 11");
        let mut code = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code = (code << 1) | u64::from(self.has_edge(i, j));
            }
        }
        code
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            Graph::new(3, &[(0, 0)]),
            Err(Error::Structure(_))
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::Structure(_))
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 5)]),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn ball_on_path() {
        let p5 = Graph::path(5).unwrap();
        let b = p5.ball(2, 1).unwrap();
        assert_eq!(b.vertices, vec![1, 2, 3]);
        assert_eq!(b.induced.edge_count(), 2);
    }

    #[test]
    fn radius_zero_ball_is_center() {
        let g = Graph::petersen();
        let b = g.ball(7, 0).unwrap();
        assert_eq!(b.vertices, vec![7]);
        assert_eq!(b.induced.n(), 1);
    }

    #[test]
    fn ball_never_leaves_component() {
        let g = Graph::disjoint_cliques(3, 3).unwrap();
        let b = g.ball(0, 5).unwrap();
        assert_eq!(b.vertices, vec![0, 1, 2]);
    }

    #[test]
    fn ball_monotone_and_stabilizes() {
        let g = Graph::disjoint_cliques(2, 4).unwrap();
        let mut prev = 0usize;
        for r in 0..6 {
            let b = g.ball(1, r).unwrap();
            assert!(b.vertices.len() >= prev);
            prev = b.vertices.len();
        }
        assert_eq!(prev, 4);
    }

    #[test]
    fn components_of_clique_union() {
        let g = Graph::disjoint_cliques(3, 3).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|(c, _)| c.n() == 3 && c.edge_count() == 3));

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.components().len(), 1);

        let e4 = Graph::empty(4).unwrap();
        assert_eq!(e4.components().len(), 4);
    }

    #[test]
    fn switching_is_involutive() {
        let g = Graph::petersen();
        let s = 0b1010101010u64;
        assert_eq!(g.switch_cut(s).switch_cut(s), g);
        // s and its complement give the same switch
        assert_eq!(g.switch_cut(s), g.switch_cut(g.full_mask() & !s));
    }

    #[test]
    fn switch_flips_cut_edges_only() {
        let g = Graph::path(3).unwrap(); // edges (0,1),(1,2)
        let h = g.switch_cut(0b001); // cut between {0} and {1,2}
        assert!(!h.has_edge(0, 1));
        assert!(h.has_edge(0, 2));
        assert!(h.has_edge(1, 2));
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::petersen();
        let parsed = Graph::from_text(&g.to_text()).unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn compact_round_trip_preserves_isomorphism_class_size() {
        let g = Graph::star(3).unwrap();
        let c = g.to_compact();
        let parsed = Graph::from_text(&c).unwrap();
        assert_eq!(parsed.n(), 4);
        assert_eq!(parsed.edge_count(), 3);
        // degree-sorted: the center comes first
        assert_eq!(parsed.degree(0), 3);
    }

    #[test]
    fn paley9_is_srg_9_4() {
        let g = Graph::paley9();
        assert_eq!(g.n(), 9);
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.edge_count(), 18);
    }
}
