//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit mask per vertex, so a [`VertexSet`]
//! is a single machine word and all set algebra is a handful of bit
//! operations. Vertices are dense integers `0..n`. Every value is immutable
//! after construction and every operation is a pure function, so graphs and
//! sets can be shared freely across threads.

mod canonical;
mod graph6;

pub mod build;

pub use canonical::{are_isomorphic, canonical_form, CANONICAL_MAX_VERTICES};
pub use graph6::{from_graph6, read_graph6_file, to_graph6, write_graph6_file};

use crate::{Error, Result};

/// Hard representation cap: a vertex set must fit in one `u64`.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices of a graph, stored as a bit mask.
///
/// The set itself does not remember which graph it belongs to; operations
/// that combine a set with a graph check containment in `0..n` at the API
/// boundary.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest-indexed vertex, if any.
    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for v in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// An immutable simple undirected graph on `0..n` with `n <= 64`.
///
/// Invariants established at construction and preserved by every operation:
/// adjacency is symmetric, irreflexive, and every set bit is `< n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidVertex(format!(
                    "edge ({u},{v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidVertex(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency masks, validating the
    /// symmetry/irreflexivity/range invariants.
    pub fn from_adj(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let full = VertexSet::full(n).bits();
        for (v, &mask) in adj.iter().enumerate() {
            if mask & !full != 0 {
                return Err(Error::InvalidVertex(format!(
                    "adjacency of vertex {v} has bits >= n"
                )));
            }
            if mask & (1u64 << v) != 0 {
                return Err(Error::InvalidVertex(format!("loop at vertex {v}")));
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                let uv = adj[u] & (1u64 << v) != 0;
                let vu = adj[v] & (1u64 << u) != 0;
                if uv != vu {
                    return Err(Error::InvalidVertex(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Neighbours of `v` restricted to `within`.
    pub fn neighbours_in(&self, v: usize, within: VertexSet) -> VertexSet {
        VertexSet(self.adj[v] & within.bits())
    }

    /// Open neighbourhood of a set: vertices outside `s` with a neighbour in `s`.
    pub fn neighbourhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s.iter() {
            acc |= self.adj[v];
        }
        VertexSet(acc & !s.bits())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = self.adj[u] >> 1 >> u; // bits for v > u
            let mut bits = above;
            while bits != 0 {
                let off = bits.trailing_zeros() as usize;
                out.push((u, u + 1 + off));
                bits &= bits - 1;
            }
        }
        out
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = self.full_set().bits();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are relabelled to follow ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Subgraph induced by `s`; vertices of `s` are relabelled `0..|s|` in
    /// ascending order of their original index.
    pub fn induced(&self, s: VertexSet) -> Graph {
        self.induced_with_map(s).0
    }

    /// Like [`Graph::induced`], also returning `map[new] = old`.
    pub fn induced_with_map(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        debug_assert!(s.is_subset_of(self.full_set()));
        let map: Vec<usize> = s.iter().collect();
        let k = map.len();
        let mut adj = vec![0u64; k];
        for (new_u, &old_u) in map.iter().enumerate() {
            for (new_v, &old_v) in map.iter().enumerate() {
                if self.adj[old_u] & (1u64 << old_v) != 0 {
                    adj[new_u] |= 1u64 << new_v;
                }
            }
        }
        (Graph { n: k, adj }, map)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidVertex("permutation length mismatch".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::InvalidVertex("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbours(u).iter() {
                adj[perm[u]] |= 1u64 << perm[v];
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Connected components as vertex sets, ordered by lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.full_set())
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while let Some(start) = remaining.lowest() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbours_in(v, within).difference(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// No edge inside `s`.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// Every edge has an endpoint in `s`.
    pub fn is_vertex_cover(&self, s: VertexSet) -> bool {
        let outside = self.full_set().difference(s);
        self.is_independent(outside)
    }

    /// The subgraph induced by `alive` is acyclic.
    pub fn is_acyclic_within(&self, alive: VertexSet) -> bool {
        // A graph is a forest iff every component has |E| = |V| - 1,
        // equivalently total edges = vertices - components.
        let comps = self.components_within(alive);
        let verts = alive.len();
        let mut edges = 0usize;
        for v in alive.iter() {
            edges += (self.adj[v] & alive.bits()).count_ones() as usize;
        }
        edges / 2 == verts - comps.len()
    }

    /// The subgraph induced by `alive` is bipartite (2-colourable).
    pub fn is_bipartite_within(&self, alive: VertexSet) -> bool {
        self.two_colour_within(alive).is_some()
    }

    /// BFS 2-colouring of the subgraph induced by `alive`. Returns the side
    /// containing, per component, its lowest-indexed vertex (the other side
    /// is `alive - returned`); `None` when an odd cycle makes this impossible.
    pub fn two_colour_within(&self, alive: VertexSet) -> Option<VertexSet> {
        let mut side0 = VertexSet::EMPTY;
        let mut side1 = VertexSet::EMPTY;
        let mut visited = VertexSet::EMPTY;
        for comp in self.components_within(alive) {
            let start = comp.lowest().expect("components are non-empty");
            side0.insert(start);
            visited.insert(start);
            let mut frontier = VertexSet::singleton(start);
            let mut frontier_even = true;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbours_in(v, alive));
                }
                next = next.difference(visited);
                visited = visited.union(next);
                if frontier_even {
                    side1 = side1.union(next);
                } else {
                    side0 = side0.union(next);
                }
                frontier = next;
                frontier_even = !frontier_even;
            }
        }
        for v in side0.iter() {
            if self.adj[v] & side0.bits() != 0 {
                return None;
            }
        }
        for v in side1.iter() {
            if self.adj[v] & side1.bits() != 0 {
                return None;
            }
        }
        Some(side0)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An induced embedding of a pattern graph into a host graph.
///
/// `map[p] = h` sends pattern vertex `p` to host vertex `h`; the map is
/// injective and preserves both adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    /// Validates injectivity and induced-ness before constructing.
    pub fn new(pattern: &Graph, host: &Graph, map: Vec<usize>) -> Result<Embedding> {
        if map.len() != pattern.n() {
            return Err(Error::InvalidVertex("embedding length mismatch".into()));
        }
        let mut used = VertexSet::EMPTY;
        for &h in &map {
            if h >= host.n() {
                return Err(Error::InvalidVertex("embedding target out of range".into()));
            }
            if used.contains(h) {
                return Err(Error::InvalidVertex("embedding not injective".into()));
            }
            used.insert(h);
        }
        for u in 0..pattern.n() {
            for v in (u + 1)..pattern.n() {
                if pattern.has_edge(u, v) != host.has_edge(map[u], map[v]) {
                    return Err(Error::InvalidVertex(format!(
                        "embedding does not preserve the pair ({u},{v})"
                    )));
                }
            }
        }
        Ok(Embedding { map })
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Image of the pattern's vertex set in the host.
    pub fn image(&self) -> VertexSet {
        VertexSet::from_iter(self.map.iter().copied())
    }
}

/// Iterator over all `k`-subsets of `0..n` as masks, in increasing numeric
/// order (Gosper's hack). Used by the solvers for lexicographically smallest
/// witnesses and by test oracles.
pub struct Combinations {
    n: usize,
    next: Option<u64>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Combinations {
        debug_assert!(n <= MAX_VERTICES);
        let next = if k > n {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some((1u64 << (k - 1) << 1) - 1) // (1 << k) - 1, safe for k = 64
        };
        Combinations { n, next }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        // advance to the next mask of equal popcount, or stop
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            match cur.checked_add(low) {
                None => None,
                Some(carry) => {
                    let shifted = ((cur ^ carry) / low) >> 2;
                    let next = carry | shifted;
                    let limit_ok = if self.n == MAX_VERTICES {
                        true
                    } else {
                        next < (1u64 << self.n)
                    };
                    if limit_ok {
                        Some(next)
                    } else {
                        None
                    }
                }
            }
        };
        Some(cur)
    }
}
