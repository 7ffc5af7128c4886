//! Constructors for the standard small graphs used throughout the crate:
//! paths, cycles, cliques, stars and their common combinations.

use crate::graph::Graph;
use crate::Result;

/// `P_n`, the path 0-1-...-(n-1).
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `nP_1`, the edgeless graph.
pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// `K_{s,t}` with the first side on `0..s` and the second on `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(s * t);
    for u in 0..s {
        for v in 0..t {
            edges.push((u, s + v));
        }
    }
    Graph::from_edges(s + t, &edges)
}

/// Complete multipartite graph with the given part sizes, parts consecutive.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut edges = Vec::new();
    let mut start = 0usize;
    let mut ranges = Vec::new();
    for &p in parts {
        ranges.push(start..start + p);
        start += p;
    }
    for i in 0..ranges.len() {
        for j in (i + 1)..ranges.len() {
            for u in ranges[i].clone() {
                for v in ranges[j].clone() {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// The star `K_{1,r}`: leaves `0..r`, centre `r`.
pub fn star(r: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..r).map(|leaf| (leaf, r)).collect();
    Graph::from_edges(r + 1, &edges)
}

/// The star `K_{1,r}` with one edge subdivided, for `r >= 1`.
///
/// Labels: plain leaves `0..r-1`, tip of the subdivided edge `r-1`,
/// subdivision vertex `r`, centre `r+1`.
pub fn subdivided_star(r: usize) -> Result<Graph> {
    assert!(r >= 1);
    let centre = r + 1;
    let subdiv = r;
    let tip = r - 1;
    let mut edges: Vec<_> = (0..r - 1).map(|leaf| (leaf, centre)).collect();
    edges.push((centre, subdiv));
    edges.push((subdiv, tip));
    Graph::from_edges(r + 2, &edges)
}

/// Disjoint union of `k` copies of `g`.
pub fn copies(k: usize, g: &Graph) -> Result<Graph> {
    let mut acc = Graph::empty(0)?;
    for _ in 0..k {
        acc = acc.disjoint_union(g)?;
    }
    Ok(acc)
}

/// The paw: a triangle with a pendant vertex. Constructed as the complement
/// of `P_1 + P_3` rather than from a hard-coded edge list.
pub fn paw() -> Result<Graph> {
    let p1p3 = empty_graph(1)?.disjoint_union(&path(3)?)?;
    Ok(p1p3.complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(4).unwrap().edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(complete_bipartite(3, 3).unwrap().edge_count(), 9);
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().edge_count(), 12);
        assert_eq!(star(3).unwrap().degree(3), 3);
        // K_{1,3}^+ has 5 vertices, 4 edges, max degree 3
        let s = subdivided_star(3).unwrap();
        assert_eq!((s.n(), s.edge_count(), s.max_degree()), (5, 4, 3));
    }

    #[test]
    fn paw_is_triangle_with_pendant() {
        let p = paw().unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.edge_count(), 4);
        let mut degs: Vec<_> = (0..4).map(|v| p.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 2, 2, 3]);
    }
}
