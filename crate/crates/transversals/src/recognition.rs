//! Class membership tests and structural classifiers: bipartite,
//! near-bipartite, 3-colourable, induced-subgraph containment, and the
//! structure theorems the certified bounds rely on.

use crate::graph::{build, Combinations, Embedding, Graph, VertexSet};
use crate::{Error, Result};

/// A validated partition witness.
///
/// Invariants (checked by [`Certificate::validate`], which every
/// constructor in this module calls before returning): the parts are
/// pairwise disjoint, their union is the whole vertex set, every part of a
/// bipartition or three-colouring is independent, and for a
/// near-bipartition the first part is independent while the rest induces a
/// forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Bipartition { parts: [VertexSet; 2] },
    NearBipartition { independent: VertexSet, forest: VertexSet },
    ThreeColouring { parts: [VertexSet; 3] },
}

impl Certificate {
    pub fn parts(&self) -> Vec<VertexSet> {
        match self {
            Certificate::Bipartition { parts } => parts.to_vec(),
            Certificate::NearBipartition { independent, forest } => {
                vec![*independent, *forest]
            }
            Certificate::ThreeColouring { parts } => parts.to_vec(),
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let parts = self.parts();
        let mut seen = VertexSet::EMPTY;
        for p in &parts {
            if !p.intersection(seen).is_empty() {
                return Err(Error::StructuralViolation(
                    "certificate parts overlap".into(),
                ));
            }
            seen = seen.union(*p);
        }
        if seen != g.full_set() {
            return Err(Error::StructuralViolation(
                "certificate parts do not cover the vertex set".into(),
            ));
        }
        match self {
            Certificate::Bipartition { parts } => {
                for p in parts {
                    if !g.is_independent(*p) {
                        return Err(Error::StructuralViolation(
                            "bipartition side is not independent".into(),
                        ));
                    }
                }
            }
            Certificate::ThreeColouring { parts } => {
                for p in parts {
                    if !g.is_independent(*p) {
                        return Err(Error::StructuralViolation(
                            "colour class is not independent".into(),
                        ));
                    }
                }
            }
            Certificate::NearBipartition { independent, forest } => {
                if !g.is_independent(*independent) {
                    return Err(Error::StructuralViolation(
                        "near-bipartition part is not independent".into(),
                    ));
                }
                if !g.is_acyclic_within(*forest) {
                    return Err(Error::StructuralViolation(
                        "near-bipartition remainder is not a forest".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// 2-colouring certificate, or `None` when the graph has an odd cycle.
/// Per connected component the side containing its lowest-indexed vertex is
/// listed first.
pub fn bipartition(g: &Graph) -> Option<Certificate> {
    let side0 = g.two_colour_within(g.full_set())?;
    let cert = Certificate::Bipartition {
        parts: [side0, g.full_set().difference(side0)],
    };
    cert.validate(g).expect("constructed bipartition is valid");
    Some(cert)
}

/// True iff the graph is acyclic.
pub fn is_forest(g: &Graph) -> bool {
    g.is_acyclic_within(g.full_set())
}

fn colour_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn three_colour_rec(g: &Graph, order: &[usize], idx: usize, classes: &mut [VertexSet; 3]) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    for class in 0..3 {
        if g.neighbours(v).intersection(classes[class]).is_empty() {
            classes[class].insert(v);
            if three_colour_rec(g, order, idx + 1, classes) {
                return true;
            }
            classes[class].remove(v);
        }
    }
    false
}

/// First proper 3-colouring found by backtracking, branching on vertices in
/// descending-degree order (ties by index), or `None` if the graph is not
/// 3-colourable. Classes may be empty.
pub fn three_colouring(g: &Graph) -> Option<Certificate> {
    let order = colour_order(g);
    let mut classes = [VertexSet::EMPTY; 3];
    if !three_colour_rec(g, &order, 0, &mut classes) {
        return None;
    }
    let cert = Certificate::ThreeColouring { parts: classes };
    cert.validate(g).expect("constructed colouring is valid");
    Some(cert)
}

fn enumerate_colourings_rec(
    g: &Graph,
    v: usize,
    used: usize,
    classes: &mut [VertexSet; 3],
    cap: usize,
    out: &mut Vec<Certificate>,
) {
    if out.len() == cap {
        return;
    }
    if v == g.n() {
        let cert = Certificate::ThreeColouring { parts: *classes };
        cert.validate(g).expect("enumerated colouring is valid");
        out.push(cert);
        return;
    }
    // a vertex may open at most one new colour class, which canonicalizes
    // away global colour permutations
    let limit = (used + 1).min(3);
    for class in 0..limit {
        if g.neighbours(v).intersection(classes[class]).is_empty() {
            classes[class].insert(v);
            enumerate_colourings_rec(g, v + 1, used.max(class + 1), classes, cap, out);
            classes[class].remove(v);
        }
    }
}

/// All proper 3-colourings up to a global permutation of the colours,
/// truncated at `cap`. Vertices are assigned in index order and a vertex may
/// only open the lowest unused colour as a new class, so each partition
/// appears exactly once and the output order is deterministic.
pub fn enumerate_three_colourings(g: &Graph, cap: usize) -> Vec<Certificate> {
    assert!(cap >= 1, "cap must be at least 1");
    let mut out = Vec::new();
    let mut classes = [VertexSet::EMPTY; 3];
    enumerate_colourings_rec(g, 0, 0, &mut classes, cap, &mut out);
    out
}

/// Minimum independent set whose removal leaves a forest, as a
/// near-bipartition certificate; `None` when no such set exists.
///
/// The search tries candidate sets in increasing size and, within a size,
/// in increasing mask order, per connected component. The witness therefore
/// doubles as a minimum independent feedback vertex set.
pub fn near_bipartition(g: &Graph) -> Option<Certificate> {
    let mut independent = VertexSet::EMPTY;
    for comp in g.components() {
        let (cg, map) = g.induced_with_map(comp);
        // cheap rejection: a near-bipartite graph is 3-colourable
        three_colouring(&cg)?;
        let local = smallest_independent_with(&cg, |sub, removed| {
            sub.is_acyclic_within(sub.full_set().difference(removed))
        })?;
        for v in local.iter() {
            independent.insert(map[v]);
        }
    }
    let cert = Certificate::NearBipartition {
        independent,
        forest: g.full_set().difference(independent),
    };
    cert.validate(g).expect("constructed near-bipartition is valid");
    Some(cert)
}

/// Smallest independent set (size-then-mask order) whose removal satisfies
/// `pred`; exhausts all independent sets before giving up.
fn smallest_independent_with(
    g: &Graph,
    pred: impl Fn(&Graph, VertexSet) -> bool,
) -> Option<VertexSet> {
    let n = g.n();
    for k in 0..=n {
        for mask in Combinations::new(n, k) {
            let s = VertexSet::from_bits(mask);
            if g.is_independent(s) && pred(g, s) {
                return Some(s);
            }
        }
    }
    None
}

/// Splits the forest part of a near-bipartition into two independent sets,
/// giving a three-colouring whose last two classes together induce a forest.
pub fn refine_near_bipartition(g: &Graph, cert: &Certificate) -> Result<Certificate> {
    let Certificate::NearBipartition { independent, forest } = cert else {
        return Err(Error::Precondition(
            "expected a near-bipartition certificate".into(),
        ));
    };
    cert.validate(g)?;
    let side = g.two_colour_within(*forest).expect("forests are bipartite");
    let refined = Certificate::ThreeColouring {
        parts: [*independent, side, forest.difference(side)],
    };
    refined.validate(g)?;
    Ok(refined)
}

fn embed_rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut VertexSet) -> bool {
    let idx = map.len();
    if idx == pattern.n() {
        return true;
    }
    // candidate mask: intersect host neighbourhoods/non-neighbourhoods of
    // the already-mapped pattern vertices
    let mut allowed = host.full_set().difference(*used);
    for (u, &hu) in map.iter().enumerate() {
        if pattern.has_edge(u, idx) {
            allowed = allowed.intersection(host.neighbours(hu));
        } else {
            allowed = allowed.difference(host.neighbours(hu));
        }
    }
    for cand in allowed.iter() {
        if host.degree(cand) < pattern.degree(idx) {
            continue;
        }
        map.push(cand);
        used.insert(cand);
        if embed_rec(host, pattern, map, used) {
            return true;
        }
        map.pop();
        used.remove(cand);
    }
    false
}

/// First induced embedding of `pattern` into `host` (pattern vertices
/// mapped in index order, host candidates in ascending order), or `None`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.n());
    let mut used = VertexSet::EMPTY;
    if !embed_rec(host, pattern, &mut map, &mut used) {
        return None;
    }
    Some(Embedding::new(pattern, host, map).expect("search result is a valid embedding"))
}

/// True iff `host` has no induced copy of any of the given patterns.
pub fn is_free_of_all(host: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|p| contains_induced(host, p).is_none())
}

/// Partition into independent sets that are pairwise complete to each
/// other, or `None`. Computed as the connected components of the
/// complement; parts are ordered by their lowest vertex.
pub fn is_complete_multipartite(g: &Graph) -> Option<Vec<VertexSet>> {
    let comp = g.complement();
    let parts = comp.components();
    for part in &parts {
        if !g.is_independent(*part) {
            return None;
        }
    }
    Some(parts)
}

/// True iff the graph can be obtained from a complete bipartite graph by
/// deleting a (possibly empty) matching; equivalently, some bipartition
/// leaves every vertex with at most one non-neighbour on the other side.
pub fn is_almost_complete_bipartite(g: &Graph) -> bool {
    if bipartition(g).is_none() {
        return false;
    }
    let n = g.n();
    if g.edge_count() == 0 {
        // K_{0,n}
        return true;
    }
    // bipartitions with a side of at most one vertex
    for v in 0..n {
        let rest = g.full_set().difference(VertexSet::singleton(v));
        if g.is_independent(rest) && g.degree(v) + 1 >= n - 1 {
            return true;
        }
    }
    // both sides have >= 2 vertices; an isolated vertex would force a side
    // of size <= 1, so none exist here
    if g.is_connected() {
        let x = g.two_colour_within(g.full_set()).expect("checked bipartite");
        let y = g.full_set().difference(x);
        return x.iter().all(|v| g.degree(v) + 1 >= y.len())
            && y.iter().all(|v| g.degree(v) + 1 >= x.len());
    }
    // disconnected with both sides >= 2 forces every component to be a
    // single edge with one endpoint per side, and at most two components
    g.n() == 4 && g.edge_count() == 2 && g.max_degree() == 1 && g.components().len() == 2
}

/// Structure tags for connected bipartite graphs without an induced
/// subdivided claw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlekseevClass {
    Path,
    Cycle,
    AlmostCompleteBipartite,
    /// The input is non-bipartite or contains an induced `K_{1,3}^+`.
    NotApplicable,
}

/// Classifies a connected graph: every connected bipartite graph with no
/// induced subdivided claw is a path, a cycle or an almost complete
/// bipartite graph. Overlaps resolve with priority path > cycle > almost
/// complete bipartite.
pub fn alekseev_classify(g: &Graph) -> Result<AlekseevClass> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "alekseev_classify requires a connected graph".into(),
        ));
    }
    if bipartition(g).is_none() {
        return Ok(AlekseevClass::NotApplicable);
    }
    let pattern = build::subdivided_star(3).expect("fixed pattern");
    if contains_induced(g, &pattern).is_some() {
        return Ok(AlekseevClass::NotApplicable);
    }
    if g.max_degree() <= 2 {
        let has_endpoint = (0..g.n()).any(|v| g.degree(v) <= 1);
        return Ok(if has_endpoint {
            AlekseevClass::Path
        } else {
            AlekseevClass::Cycle
        });
    }
    if is_almost_complete_bipartite(g) {
        return Ok(AlekseevClass::AlmostCompleteBipartite);
    }
    Err(Error::StructuralViolation(
        "connected subdivided-claw-free bipartite graph fits none of the three structures".into(),
    ))
}

/// Structure tag per connected component of a paw-free graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentStructure {
    TriangleFree,
    CompleteMultipartite,
}

fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|&(u, v)| !g.neighbours(u).intersection(g.neighbours(v)).is_empty())
}

/// Per-component structure of a paw-free graph (`None` when the graph
/// contains an induced paw): each component is triangle-free or complete
/// multipartite. Triangle-free is reported first where both apply.
pub fn olariu_decompose(g: &Graph) -> Option<Vec<(VertexSet, ComponentStructure)>> {
    let paw = build::paw().expect("fixed pattern");
    if contains_induced(g, &paw).is_some() {
        return None;
    }
    let mut out = Vec::new();
    for comp in g.components() {
        let (cg, _) = g.induced_with_map(comp);
        let tag = if !has_triangle(&cg) {
            ComponentStructure::TriangleFree
        } else if is_complete_multipartite(&cg).is_some() {
            ComponentStructure::CompleteMultipartite
        } else {
            unreachable!("paw-free component is neither triangle-free nor complete multipartite")
        };
        out.push((comp, tag));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{self, GadgetSpec};
    use crate::graph::build;

    #[test]
    fn bipartition_of_c4_and_c5() {
        let c4 = build::cycle(4).unwrap();
        match bipartition(&c4).unwrap() {
            Certificate::Bipartition { parts } => {
                assert_eq!(parts[0], VertexSet::from_iter([0, 2]));
                assert_eq!(parts[1], VertexSet::from_iter([1, 3]));
            }
            _ => unreachable!(),
        }
        assert!(bipartition(&build::cycle(5).unwrap()).is_none());
    }

    #[test]
    fn bipartition_of_double_star() {
        let d22 = gadgets::build(&GadgetSpec::DoubleStar { p: 2, q: 2 }).unwrap();
        let Certificate::Bipartition { parts } = bipartition(&d22).unwrap() else {
            unreachable!()
        };
        assert_eq!(parts[0].len(), 3);
        assert_eq!(parts[1].len(), 3);
    }

    #[test]
    fn forest_checks() {
        assert!(is_forest(&build::path(4).unwrap()));
        assert!(!is_forest(&build::cycle(3).unwrap()));
        for (s, r) in [(2, 1), (3, 2), (2, 3)] {
            let d = gadgets::build(&GadgetSpec::D { s, r }).unwrap();
            assert!(is_forest(&d), "D with s={s}, r={r} should be a tree");
        }
    }

    #[test]
    fn three_colouring_cases() {
        assert!(three_colouring(&build::complete(4).unwrap()).is_none());
        let c5 = build::cycle(5).unwrap();
        let Certificate::ThreeColouring { parts } = three_colouring(&c5).unwrap() else {
            unreachable!()
        };
        let mut sizes: Vec<_> = parts.iter().map(|p| p.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2]);
    }

    #[test]
    fn three_colouring_sizes_of_y1() {
        let y1 = gadgets::build(&GadgetSpec::Y { s: 1 }).unwrap();
        let Certificate::ThreeColouring { parts } = three_colouring(&y1).unwrap() else {
            unreachable!()
        };
        let mut sizes: Vec<_> = parts.iter().map(|p| p.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 5, 5]);
    }

    #[test]
    fn colouring_enumeration_counts() {
        let k3 = build::complete(3).unwrap();
        assert_eq!(enumerate_three_colourings(&k3, 100).len(), 1);

        let c5 = build::cycle(5).unwrap();
        assert_eq!(enumerate_three_colourings(&c5, 100).len(), 5);

        let y1 = gadgets::build(&GadgetSpec::Y { s: 1 }).unwrap();
        assert_eq!(enumerate_three_colourings(&y1, 100).len(), 1);
    }

    #[test]
    fn colouring_enumeration_matches_brute_force_on_c5() {
        // oracle: all 3^5 assignments, deduplicated as class partitions
        let c5 = build::cycle(5).unwrap();
        let mut partitions = std::collections::HashSet::new();
        for code in 0..3usize.pow(5) {
            let mut c = code;
            let mut classes = [VertexSet::EMPTY; 3];
            for v in 0..5 {
                classes[c % 3].insert(v);
                c /= 3;
            }
            if classes.iter().all(|cl| c5.is_independent(*cl)) {
                let mut key: Vec<u64> = classes.iter().map(|cl| cl.bits()).collect();
                key.sort_unstable();
                partitions.insert(key);
            }
        }
        assert_eq!(partitions.len(), 5);
    }

    #[test]
    fn colouring_enumeration_respects_cap() {
        let c5 = build::cycle(5).unwrap();
        assert_eq!(enumerate_three_colourings(&c5, 2).len(), 2);
    }

    #[test]
    fn near_bipartition_cases() {
        let forest = build::path(5).unwrap();
        let Certificate::NearBipartition { independent, .. } = near_bipartition(&forest).unwrap()
        else {
            unreachable!()
        };
        assert!(independent.is_empty());

        assert!(near_bipartition(&build::complete(4).unwrap()).is_none());

        let fig = gadgets::build(&GadgetSpec::FigFvs1).unwrap();
        let Certificate::NearBipartition { independent, .. } = near_bipartition(&fig).unwrap()
        else {
            unreachable!()
        };
        assert_eq!(independent.len(), 3);
    }

    #[test]
    fn induced_containment_cases() {
        let t5 = gadgets::build(&GadgetSpec::T { s: 5 }).unwrap();
        let two_p2 = build::copies(2, &build::path(2).unwrap()).unwrap();
        assert!(contains_induced(&t5, &two_p2).is_none());

        let t5p = gadgets::build(&GadgetSpec::TPrime { s: 5 }).unwrap();
        assert!(contains_induced(&t5p, &build::path(4).unwrap()).is_none());

        let d22 = gadgets::build(&GadgetSpec::DoubleStar { p: 2, q: 2 }).unwrap();
        let pat = build::empty_graph(2)
            .unwrap()
            .disjoint_union(&build::path(3).unwrap())
            .unwrap();
        let emb = contains_induced(&d22, &pat).expect("double star contains 2P1+P3");
        assert_eq!(emb.map().len(), 5);
    }

    #[test]
    fn induced_containment_matches_subset_oracle() {
        // oracle: check every |V(h)|-subset of the host for an isomorphic
        // induced subgraph via canonical forms
        let hosts = [
            build::cycle(6).unwrap(),
            build::paw().unwrap(),
            gadgets::build(&GadgetSpec::DoubleStar { p: 2, q: 1 }).unwrap(),
            build::complete_bipartite(2, 3).unwrap(),
        ];
        let patterns = [
            build::path(3).unwrap(),
            build::path(4).unwrap(),
            build::complete(3).unwrap(),
            build::copies(2, &build::path(2).unwrap()).unwrap(),
            build::star(3).unwrap(),
        ];
        for host in &hosts {
            for pat in &patterns {
                let fast = contains_induced(host, pat).is_some();
                let mut slow = false;
                for mask in Combinations::new(host.n(), pat.n()) {
                    let sub = host.induced(VertexSet::from_bits(mask));
                    if crate::graph::are_isomorphic(&sub, pat).unwrap() {
                        slow = true;
                        break;
                    }
                }
                assert_eq!(fast, slow, "host {host:?} pattern {pat:?}");
            }
        }
    }

    #[test]
    fn complete_multipartite_cases() {
        let k222 = build::complete_multipartite(&[2, 2, 2]).unwrap();
        let parts = is_complete_multipartite(&k222).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.len() == 2));

        assert!(is_complete_multipartite(&build::path(4).unwrap()).is_none());

        let kst = build::complete_bipartite(2, 5).unwrap();
        assert_eq!(is_complete_multipartite(&kst).unwrap().len(), 2);
    }

    #[test]
    fn almost_complete_bipartite_cases() {
        // K_{3,3} minus a perfect matching
        let g = Graph::from_edges(6, &[(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)]).unwrap();
        assert!(is_almost_complete_bipartite(&g));
        assert!(is_almost_complete_bipartite(
            &build::complete_bipartite(3, 3).unwrap()
        ));
        // P5 = K_{2,3} minus a 2-edge matching
        assert!(is_almost_complete_bipartite(&build::path(5).unwrap()));
        // P6 would need two cross non-edges at a single vertex
        assert!(!is_almost_complete_bipartite(&build::path(6).unwrap()));
        assert!(!is_almost_complete_bipartite(&build::cycle(5).unwrap()));
    }

    #[test]
    fn almost_complete_bipartite_matches_bipartition_oracle() {
        // oracle: try every side assignment; non-edges across sides must
        // form a matching (every vertex misses at most one cross vertex)
        fn oracle(g: &Graph) -> bool {
            let n = g.n();
            for bits in 0..(1u64 << n) {
                let x = VertexSet::from_bits(bits);
                let y = g.full_set().difference(x);
                if !g.is_independent(x) || !g.is_independent(y) {
                    continue;
                }
                let ok = x.iter().all(|v| g.degree(v) + 1 >= y.len())
                    && y.iter().all(|v| g.degree(v) + 1 >= x.len());
                if ok {
                    return true;
                }
            }
            false
        }
        let samples = [
            build::path(5).unwrap(),
            build::path(6).unwrap(),
            build::cycle(4).unwrap(),
            build::cycle(6).unwrap(),
            build::star(3).unwrap(),
            build::complete_bipartite(2, 3).unwrap(),
            build::copies(2, &build::path(2).unwrap()).unwrap(),
            build::copies(3, &build::path(2).unwrap()).unwrap(),
            build::empty_graph(4).unwrap(),
            build::path(3)
                .unwrap()
                .disjoint_union(&build::path(2).unwrap())
                .unwrap(),
            build::star(3)
                .unwrap()
                .disjoint_union(&build::empty_graph(1).unwrap())
                .unwrap(),
        ];
        for g in &samples {
            assert_eq!(is_almost_complete_bipartite(g), oracle(g), "graph {g:?}");
        }
    }

    #[test]
    fn alekseev_cases() {
        assert_eq!(
            alekseev_classify(&build::cycle(6).unwrap()).unwrap(),
            AlekseevClass::Cycle
        );
        assert_eq!(
            alekseev_classify(&build::path(5).unwrap()).unwrap(),
            AlekseevClass::Path
        );
        assert_eq!(
            alekseev_classify(&build::complete_bipartite(3, 3).unwrap()).unwrap(),
            AlekseevClass::AlmostCompleteBipartite
        );
        assert_eq!(
            alekseev_classify(&build::cycle(5).unwrap()).unwrap(),
            AlekseevClass::NotApplicable
        );
        let disconnected = build::copies(2, &build::path(2).unwrap()).unwrap();
        assert!(alekseev_classify(&disconnected).is_err());
    }

    #[test]
    fn olariu_cases() {
        let c5 = build::cycle(5).unwrap();
        let tags = olariu_decompose(&c5).unwrap();
        assert_eq!(tags.len(), 1);
        assert_eq!(tags[0].1, ComponentStructure::TriangleFree);

        let k222 = build::complete_multipartite(&[2, 2, 2]).unwrap();
        let tags = olariu_decompose(&k222).unwrap();
        assert_eq!(tags[0].1, ComponentStructure::CompleteMultipartite);

        assert!(olariu_decompose(&build::paw().unwrap()).is_none());
    }
}
