//! Exact minimum transversal computation: vertex cover, feedback vertex set
//! and odd cycle transversal, plus their independent variants.
//!
//! Optimal sizes come from branch and bound (edge branching for covers,
//! cycle branching for feedback sets, odd-cycle branching for
//! bipartization); the returned witness is then the numerically smallest
//! optimal mask, found by enumerating subsets of the optimal size in
//! increasing mask order. All six measures are additive over connected
//! components, so inputs are decomposed first. Every solution re-verifies
//! its defining property before it is returned.

use crate::graph::{Combinations, Graph, VertexSet};
use crate::recognition::{self, Certificate};

/// An optimal transversal witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub set: VertexSet,
    pub size: usize,
    pub independent: bool,
}

impl Solution {
    fn checked(g: &Graph, set: VertexSet, property_holds: bool, what: &str) -> Solution {
        assert!(property_holds, "returned {what} fails verification");
        Solution {
            set,
            size: set.len(),
            independent: g.is_independent(set),
        }
    }
}

fn solve_per_component(g: &Graph, solve: impl Fn(&Graph) -> VertexSet) -> VertexSet {
    let mut acc = VertexSet::EMPTY;
    for comp in g.components() {
        let (cg, map) = g.induced_with_map(comp);
        for v in solve(&cg).iter() {
            acc.insert(map[v]);
        }
    }
    acc
}

fn try_solve_per_component(
    g: &Graph,
    solve: impl Fn(&Graph) -> Option<VertexSet>,
) -> Option<VertexSet> {
    let mut acc = VertexSet::EMPTY;
    for comp in g.components() {
        let (cg, map) = g.induced_with_map(comp);
        let local = solve(&cg)?;
        for v in local.iter() {
            acc.insert(map[v]);
        }
    }
    Some(acc)
}

/// Smallest mask of exactly `size` vertices satisfying `pred`.
fn lexmin_witness(g: &Graph, size: usize, pred: impl Fn(VertexSet) -> bool) -> VertexSet {
    for mask in Combinations::new(g.n(), size) {
        let s = VertexSet::from_bits(mask);
        if pred(s) {
            return s;
        }
    }
    unreachable!("no witness of the optimal size; size bound computation is wrong")
}

// ---------------------------------------------------------------------------
// vertex cover

fn greedy_matching_size(g: &Graph, alive: VertexSet) -> usize {
    let mut avail = alive;
    let mut size = 0;
    while let Some(u) = avail.lowest() {
        avail.remove(u);
        if let Some(v) = g.neighbours_in(u, avail).lowest() {
            avail.remove(v);
            size += 1;
        }
    }
    size
}

fn vc_branch(g: &Graph, alive: VertexSet, count: usize, best: &mut usize) {
    if count >= *best {
        return;
    }
    // lowest vertex with an uncovered edge
    let mut pick = None;
    for u in alive.iter() {
        if !g.neighbours_in(u, alive).is_empty() {
            pick = Some(u);
            break;
        }
    }
    let Some(u) = pick else {
        *best = count;
        return;
    };
    if count + greedy_matching_size(g, alive) >= *best {
        return;
    }
    let v = g.neighbours_in(u, alive).lowest().expect("u has a neighbour");
    let mut without_u = alive;
    without_u.remove(u);
    vc_branch(g, without_u, count + 1, best);
    let mut without_v = alive;
    without_v.remove(v);
    vc_branch(g, without_v, count + 1, best);
}

fn vc_size(g: &Graph) -> usize {
    let mut best = g.n();
    vc_branch(g, g.full_set(), 0, &mut best);
    best
}

/// Minimum vertex cover; among optima, the numerically smallest mask.
pub fn min_vc(g: &Graph) -> Solution {
    let set = solve_per_component(g, |cg| {
        let opt = vc_size(cg);
        lexmin_witness(cg, opt, |s| cg.is_vertex_cover(s))
    });
    Solution::checked(g, set, g.is_vertex_cover(set), "vertex cover")
}

/// Minimum independent vertex cover, or `None` when the graph is not
/// bipartite. Computed structurally: per connected component the smaller
/// bipartition side (ties by smaller mask), nothing for edgeless
/// components.
pub fn min_ivc(g: &Graph) -> Option<Solution> {
    recognition::bipartition(g)?;
    let set = try_solve_per_component(g, |cg| {
        if cg.edge_count() == 0 {
            return Some(VertexSet::EMPTY);
        }
        let x = cg
            .two_colour_within(cg.full_set())
            .expect("component of a bipartite graph");
        let y = cg.full_set().difference(x);
        Some(std::cmp::min_by_key(x, y, |s| (s.len(), s.bits())))
    })?;
    let sol = Solution::checked(
        g,
        set,
        g.is_vertex_cover(set) && g.is_independent(set),
        "independent vertex cover",
    );
    assert!(sol.independent);
    Some(sol)
}

// ---------------------------------------------------------------------------
// feedback vertex set

/// Some cycle in the subgraph induced by `alive`, as a vertex list.
///
/// Recursive DFS: in an undirected graph a visited neighbour other than the
/// tree parent is always an ancestor, so the parent chain closes the cycle.
fn find_cycle(g: &Graph, alive: VertexSet) -> Option<Vec<usize>> {
    fn dfs(
        g: &Graph,
        alive: VertexSet,
        u: usize,
        from: usize,
        visited: &mut VertexSet,
        parent: &mut [usize],
    ) -> Option<(usize, usize)> {
        visited.insert(u);
        for w in g.neighbours_in(u, alive).iter() {
            if w == from {
                continue;
            }
            if visited.contains(w) {
                return Some((u, w));
            }
            parent[w] = u;
            if let Some(found) = dfs(g, alive, w, u, visited, parent) {
                return Some(found);
            }
        }
        None
    }

    let mut parent = vec![usize::MAX; g.n()];
    let mut visited = VertexSet::EMPTY;
    for root in alive.iter() {
        if visited.contains(root) {
            continue;
        }
        if let Some((u, w)) = dfs(g, alive, root, usize::MAX, &mut visited, &mut parent) {
            let mut path = vec![u];
            let mut cur = u;
            while cur != w {
                cur = parent[cur];
                path.push(cur);
            }
            return Some(path);
        }
    }
    None
}

fn fvs_branch(g: &Graph, alive: VertexSet, count: usize, best: &mut usize) {
    if count >= *best {
        return;
    }
    match find_cycle(g, alive) {
        None => *best = count,
        Some(cycle) => {
            for v in cycle {
                let mut next = alive;
                next.remove(v);
                fvs_branch(g, next, count + 1, best);
            }
        }
    }
}

fn fvs_size(g: &Graph) -> usize {
    let mut best = g.n();
    if g.n() == 0 {
        return 0;
    }
    fvs_branch(g, g.full_set(), 0, &mut best);
    best
}

/// Minimum feedback vertex set; smallest optimal mask.
pub fn min_fvs(g: &Graph) -> Solution {
    let set = solve_per_component(g, |cg| {
        let opt = fvs_size(cg);
        lexmin_witness(cg, opt, |s| cg.is_acyclic_within(cg.full_set().difference(s)))
    });
    Solution::checked(
        g,
        set,
        g.is_acyclic_within(g.full_set().difference(set)),
        "feedback vertex set",
    )
}

/// Minimum independent feedback vertex set, or `None` when the graph is not
/// near-bipartite. Delegates to the near-bipartition search, whose witness
/// is minimal.
pub fn min_ifvs(g: &Graph) -> Option<Solution> {
    let cert = recognition::near_bipartition(g)?;
    let Certificate::NearBipartition { independent, .. } = cert else {
        unreachable!()
    };
    let sol = Solution::checked(
        g,
        independent,
        g.is_acyclic_within(g.full_set().difference(independent)) && g.is_independent(independent),
        "independent feedback vertex set",
    );
    assert!(sol.independent);
    Some(sol)
}

// ---------------------------------------------------------------------------
// odd cycle transversal

/// Some odd cycle in the subgraph induced by `alive`, as a vertex list.
fn find_odd_cycle(g: &Graph, alive: VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut depth = vec![usize::MAX; g.n()];
    for root in alive.iter() {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbours_in(u, alive).iter() {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if depth[w] % 2 == depth[u] % 2 {
                    // odd cycle through u, w and their lowest common ancestor
                    let mut up_u = vec![u];
                    let mut up_w = vec![w];
                    let (mut a, mut b) = (u, w);
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            up_u.push(a);
                        } else {
                            b = parent[b];
                            up_w.push(b);
                        }
                    }
                    up_w.pop(); // drop the duplicated ancestor
                    up_u.extend(up_w.into_iter().rev());
                    return Some(up_u);
                }
            }
        }
    }
    None
}

fn oct_branch(g: &Graph, alive: VertexSet, count: usize, best: &mut usize) {
    if count >= *best {
        return;
    }
    match find_odd_cycle(g, alive) {
        None => *best = count,
        Some(cycle) => {
            for v in cycle {
                let mut next = alive;
                next.remove(v);
                oct_branch(g, next, count + 1, best);
            }
        }
    }
}

fn oct_size(g: &Graph) -> usize {
    let mut best = g.n();
    if g.n() == 0 {
        return 0;
    }
    oct_branch(g, g.full_set(), 0, &mut best);
    best
}

/// Minimum odd cycle transversal; smallest optimal mask.
pub fn min_oct(g: &Graph) -> Solution {
    let set = solve_per_component(g, |cg| {
        let opt = oct_size(cg);
        lexmin_witness(cg, opt, |s| {
            cg.is_bipartite_within(cg.full_set().difference(s))
        })
    });
    Solution::checked(
        g,
        set,
        g.is_bipartite_within(g.full_set().difference(set)),
        "odd cycle transversal",
    )
}

/// Minimum independent odd cycle transversal, or `None` when the graph is
/// not 3-colourable. Searches independent sets in increasing size and mask
/// order; equivalently, the smallest colour class over all 3-colourings.
pub fn min_ioct(g: &Graph) -> Option<Solution> {
    recognition::three_colouring(g)?;
    let set = try_solve_per_component(g, |cg| {
        let n = cg.n();
        for k in 0..=n {
            for mask in Combinations::new(n, k) {
                let s = VertexSet::from_bits(mask);
                if cg.is_independent(s)
                    && cg.is_bipartite_within(cg.full_set().difference(s))
                {
                    return Some(s);
                }
            }
        }
        None
    })?;
    let sol = Solution::checked(
        g,
        set,
        g.is_bipartite_within(g.full_set().difference(set)) && g.is_independent(set),
        "independent odd cycle transversal",
    );
    assert!(sol.independent);
    Some(sol)
}

/// Convenience dispatch by measure name, used by the CLI and the harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Vc,
    Ivc,
    Fvs,
    Ifvs,
    Oct,
    Ioct,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::Vc,
        Measure::Ivc,
        Measure::Fvs,
        Measure::Ifvs,
        Measure::Oct,
        Measure::Ioct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Vc => "vc",
            Measure::Ivc => "ivc",
            Measure::Fvs => "fvs",
            Measure::Ifvs => "ifvs",
            Measure::Oct => "oct",
            Measure::Ioct => "ioct",
        }
    }

    pub fn parse(s: &str) -> Option<Measure> {
        Measure::ALL.iter().copied().find(|m| m.name() == s)
    }

    /// Computes the measure; `None` when the independent variant does not
    /// exist for this graph.
    pub fn solve(self, g: &Graph) -> Option<Solution> {
        match self {
            Measure::Vc => Some(min_vc(g)),
            Measure::Ivc => min_ivc(g),
            Measure::Fvs => Some(min_fvs(g)),
            Measure::Ifvs => min_ifvs(g),
            Measure::Oct => Some(min_oct(g)),
            Measure::Ioct => min_ioct(g),
        }
    }
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{self, GadgetSpec};
    use crate::graph::build;

    #[test]
    fn vc_examples() {
        let d22 = gadgets::build(&GadgetSpec::DoubleStar { p: 2, q: 2 }).unwrap();
        let sol = min_vc(&d22);
        assert_eq!(sol.size, 2);
        // the two hub vertices, labelled last
        assert_eq!(sol.set, VertexSet::from_iter([4, 5]));

        assert_eq!(min_vc(&build::cycle(5).unwrap()).size, 3);
        assert_eq!(min_vc(&build::empty_graph(6).unwrap()).size, 0);
    }

    #[test]
    fn ivc_examples() {
        let d22 = gadgets::build(&GadgetSpec::DoubleStar { p: 2, q: 2 }).unwrap();
        assert_eq!(min_ivc(&d22).unwrap().size, 3);

        let d31 = gadgets::build(&GadgetSpec::D { s: 3, r: 1 }).unwrap();
        assert_eq!(min_ivc(&d31).unwrap().size, 4); // r + s

        assert!(min_ivc(&build::cycle(5).unwrap()).is_none());
    }

    #[test]
    fn fvs_examples() {
        let s22 = gadgets::build(&GadgetSpec::S { s: 2, r: 2 }).unwrap();
        assert_eq!(min_fvs(&s22).size, 2);

        let t4 = gadgets::build(&GadgetSpec::T { s: 4 }).unwrap();
        assert_eq!(min_fvs(&t4).size, 3);

        assert_eq!(min_fvs(&build::path(7).unwrap()).size, 0);
    }

    #[test]
    fn ifvs_examples() {
        let fig = gadgets::build(&GadgetSpec::FigFvs1).unwrap();
        assert_eq!(min_ifvs(&fig).unwrap().size, 3);

        let s22 = gadgets::build(&GadgetSpec::S { s: 2, r: 2 }).unwrap();
        assert_eq!(min_ifvs(&s22).unwrap().size, 3); // s + 1

        assert_eq!(min_ifvs(&build::path(4).unwrap()).unwrap().size, 0);
    }

    #[test]
    fn oct_examples() {
        let q3 = gadgets::build(&GadgetSpec::Q { s: 3 }).unwrap();
        assert_eq!(min_oct(&q3).size, 2);

        let y1 = gadgets::build(&GadgetSpec::Y { s: 1 }).unwrap();
        assert_eq!(min_oct(&y1).size, 2);

        assert_eq!(min_oct(&build::complete_bipartite(3, 4).unwrap()).size, 0);
    }

    #[test]
    fn ioct_examples() {
        let y1 = gadgets::build(&GadgetSpec::Y { s: 1 }).unwrap();
        assert_eq!(min_ioct(&y1).unwrap().size, 4); // 4s

        let q3 = gadgets::build(&GadgetSpec::Q { s: 3 }).unwrap();
        assert_eq!(min_ioct(&q3).unwrap().size, 3); // s

        assert_eq!(min_ioct(&build::complete(3).unwrap()).unwrap().size, 1);
        assert!(min_ioct(&build::complete(4).unwrap()).is_none());
    }

    #[test]
    fn witnesses_are_smallest_masks() {
        // C4 has two optimal covers {0,2} and {1,3}; 0b0101 < 0b1010
        let c4 = build::cycle(4).unwrap();
        assert_eq!(min_vc(&c4).set, VertexSet::from_iter([0, 2]));

        // K3: all three singletons work; vertex 0 wins
        let k3 = build::complete(3).unwrap();
        assert_eq!(min_oct(&k3).set, VertexSet::from_iter([0]));
        assert_eq!(min_fvs(&k3).set, VertexSet::from_iter([0]));
    }

    #[test]
    fn component_additivity() {
        let g = build::cycle(5)
            .unwrap()
            .disjoint_union(&build::complete(4).unwrap())
            .unwrap();
        assert_eq!(min_vc(&g).size, 3 + 3);
        assert_eq!(min_fvs(&g).size, 1 + 2);
        assert_eq!(min_oct(&g).size, 1 + 2);
    }

    #[test]
    fn independence_flag_is_accurate() {
        let c6 = build::cycle(6).unwrap();
        let sol = min_vc(&c6);
        assert_eq!(sol.size, 3);
        assert!(sol.independent);

        let k4 = build::complete(4).unwrap();
        assert!(!min_vc(&k4).independent);
    }
}
