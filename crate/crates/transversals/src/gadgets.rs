//! Generators for the extremal graph families that witness tightness and
//! unboundedness of the transversal bounds, each bundled with its expected,
//! machine-checkable invariants.
//!
//! Labelling conventions are fixed per family so regression snapshots and
//! drawings can be cross-read: path segments occupy consecutive indices and
//! hub vertices come last.

use crate::graph::{build, Graph};
use crate::recognition;
use crate::solvers::Measure;
use crate::{Error, Result};

/// A gadget family instance: which family, with which parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetSpec {
    /// Two adjacent hubs `x`, `y` with `p` and `q` pendant leaves.
    /// Labels: x-leaves `0..p`, y-leaves `p..p+q`, then `x`, `y`.
    DoubleStar { p: usize, q: usize },
    /// Two stars with `s` leaves each, centres joined by a path on `2r`
    /// vertices (the centres are the path endpoints). `s >= 2`, `r >= 1`;
    /// `r = 1` is the double star with equal sides.
    /// Labels: first leaves `0..s`, second leaves `s..2s`, path
    /// `2s..2s+2r`.
    D { s: usize, r: usize },
    /// `2s` paths on `2r` vertices each; hub `u` is adjacent to both
    /// endpoints of the first `s` paths, hub `v` to both endpoints of the
    /// other `s`, and `u`, `v` are adjacent. Every induced cycle is an odd
    /// `C_{2r+1}`. `s, r >= 2`.
    /// Labels: paths consecutive (`u`-side first), then `u`, `v`.
    S { s: usize, r: usize },
    /// A path on four vertices plus an independent set of `s` vertices
    /// complete to the path. `s >= 3`.
    /// Labels: independent set `0..s`, path `s..s+4`.
    T { s: usize },
    /// `T` with the middle path edge removed (the path becomes `2P_2`).
    TPrime { s: usize },
    /// Three independent sets `A`, `B`, `C` of size `s` with chosen
    /// vertices `a`, `b`, `c`; each chosen vertex is complete to the other
    /// two sets. `s >= 2`.
    /// Labels: `A = 0..s` (a = 0), `B = s..2s` (b = s), `C = 2s..3s`
    /// (c = 2s).
    Q { s: usize },
    /// `s` paths on four vertices; adjacent hubs `a`, `b` are both adjacent
    /// to both endpoints of every path. `s >= 1`.
    /// Labels: paths consecutive, then `a`, `b`.
    Z { s: usize },
    /// Four paths on `3s` vertices with rung and diagonal edges between
    /// them, closed off by adjacent hubs `x`, `y`; has a unique
    /// 3-colouring. `s >= 1`.
    /// Labels: a-path `0..3s`, b-path `3s..6s`, c-path `6s..9s`,
    /// d-path `9s..12s`, then `x`, `y`.
    Y { s: usize },
    /// 7-vertex graph whose two hubs form the unique minimum feedback
    /// vertex set; deleting them leaves a five-vertex path.
    FigFvs1,
    /// Two bowties (pairs of triangles sharing a hub) with the hubs joined
    /// by an edge; 10 vertices.
    FigOct1,
    /// Two wheels over a four-cycle with the hubs joined by an edge;
    /// 10 vertices.
    FigOct2,
}

impl GadgetSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            GadgetSpec::DoubleStar { .. } => "double_star",
            GadgetSpec::D { .. } => "D",
            GadgetSpec::S { .. } => "S",
            GadgetSpec::T { .. } => "T",
            GadgetSpec::TPrime { .. } => "T_prime",
            GadgetSpec::Q { .. } => "Q",
            GadgetSpec::Z { .. } => "Z",
            GadgetSpec::Y { .. } => "Y",
            GadgetSpec::FigFvs1 => "fig_fvs1",
            GadgetSpec::FigOct1 => "fig_oct1",
            GadgetSpec::FigOct2 => "fig_oct2",
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GadgetSpec::DoubleStar { p, q } => format!("double_star(p={p},q={q})"),
            GadgetSpec::D { s, r } => format!("D(s={s},r={r})"),
            GadgetSpec::S { s, r } => format!("S(s={s},r={r})"),
            GadgetSpec::T { s } => format!("T(s={s})"),
            GadgetSpec::TPrime { s } => format!("T_prime(s={s})"),
            GadgetSpec::Q { s } => format!("Q(s={s})"),
            GadgetSpec::Z { s } => format!("Z(s={s})"),
            GadgetSpec::Y { s } => format!("Y(s={s})"),
            GadgetSpec::FigFvs1 => "fig_fvs1".into(),
            GadgetSpec::FigOct1 => "fig_oct1".into(),
            GadgetSpec::FigOct2 => "fig_oct2".into(),
        }
    }

    /// Exact vertex count of the built graph.
    pub fn vertex_count(&self) -> usize {
        match *self {
            GadgetSpec::DoubleStar { p, q } => p + q + 2,
            GadgetSpec::D { s, r } => 2 * s + 2 * r,
            GadgetSpec::S { s, r } => 4 * r * s + 2,
            GadgetSpec::T { s } | GadgetSpec::TPrime { s } => s + 4,
            GadgetSpec::Q { s } => 3 * s,
            GadgetSpec::Z { s } => 4 * s + 2,
            GadgetSpec::Y { s } => 12 * s + 2,
            GadgetSpec::FigFvs1 => 7,
            GadgetSpec::FigOct1 | GadgetSpec::FigOct2 => 10,
        }
    }

    fn check_params(&self) -> Result<()> {
        let ok = match *self {
            GadgetSpec::DoubleStar { .. } => true,
            GadgetSpec::D { s, r } => s >= 2 && r >= 1,
            GadgetSpec::S { s, r } => s >= 2 && r >= 2,
            GadgetSpec::T { s } | GadgetSpec::TPrime { s } => s >= 3,
            GadgetSpec::Q { s } => s >= 2,
            GadgetSpec::Z { s } | GadgetSpec::Y { s } => s >= 1,
            GadgetSpec::FigFvs1 | GadgetSpec::FigOct1 | GadgetSpec::FigOct2 => true,
        };
        if !ok {
            return Err(Error::Precondition(format!(
                "parameters out of range for {}",
                self.describe()
            )));
        }
        if self.vertex_count() > crate::graph::MAX_VERTICES {
            return Err(Error::Precondition(format!(
                "{} would have {} vertices, over the 64-vertex limit",
                self.describe(),
                self.vertex_count()
            )));
        }
        Ok(())
    }
}

/// Builds the gadget graph. Deterministic; labelling as documented on each
/// [`GadgetSpec`] variant.
pub fn build(spec: &GadgetSpec) -> Result<Graph> {
    spec.check_params()?;
    let n = spec.vertex_count();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match *spec {
        GadgetSpec::DoubleStar { p, q } => {
            let x = p + q;
            let y = p + q + 1;
            edges.push((x, y));
            edges.extend((0..p).map(|i| (x, i)));
            edges.extend((0..q).map(|j| (y, p + j)));
        }
        GadgetSpec::D { s, r } => {
            let path_start = 2 * s;
            for i in 0..2 * r - 1 {
                edges.push((path_start + i, path_start + i + 1));
            }
            let first_centre = path_start;
            let second_centre = path_start + 2 * r - 1;
            edges.extend((0..s).map(|i| (first_centre, i)));
            edges.extend((0..s).map(|i| (second_centre, s + i)));
        }
        GadgetSpec::S { s, r } => {
            let seg = 2 * r;
            let u = 4 * r * s;
            let v = u + 1;
            for p in 0..2 * s {
                let start = p * seg;
                for i in 0..seg - 1 {
                    edges.push((start + i, start + i + 1));
                }
                let hub = if p < s { u } else { v };
                edges.push((hub, start));
                edges.push((hub, start + seg - 1));
            }
            edges.push((u, v));
        }
        GadgetSpec::T { s } | GadgetSpec::TPrime { s } => {
            let x = |i: usize| s + i; // x(0) = x_1 ... x(3) = x_4
            edges.push((x(0), x(1)));
            edges.push((x(2), x(3)));
            if matches!(spec, GadgetSpec::T { .. }) {
                edges.push((x(1), x(2)));
            }
            for v in 0..s {
                for i in 0..4 {
                    edges.push((v, x(i)));
                }
            }
        }
        GadgetSpec::Q { s } => {
            let (a, b, c) = (0, s, 2 * s);
            for i in 0..s {
                edges.push((a, s + i)); // a complete to B
                edges.push((a, 2 * s + i)); // a complete to C
                edges.push((b, i)); // b complete to A
                edges.push((b, 2 * s + i)); // b complete to C
                edges.push((c, i)); // c complete to A
                edges.push((c, s + i)); // c complete to B
            }
            let _ = (a, b, c);
        }
        GadgetSpec::Z { s } => {
            let a = 4 * s;
            let b = a + 1;
            edges.push((a, b));
            for p in 0..s {
                let start = 4 * p;
                for i in 0..3 {
                    edges.push((start + i, start + i + 1));
                }
                for hub in [a, b] {
                    edges.push((hub, start));
                    edges.push((hub, start + 3));
                }
            }
        }
        GadgetSpec::Y { s } => {
            let m = 3 * s;
            let a = |i: usize| i - 1; // i in 1..=3s
            let b = |i: usize| m + i - 1;
            let c = |i: usize| 2 * m + i - 1;
            let d = |i: usize| 3 * m + i - 1;
            let x = 4 * m;
            let y = x + 1;
            for i in 1..m {
                edges.push((a(i), a(i + 1)));
                edges.push((b(i), b(i + 1)));
                edges.push((c(i), c(i + 1)));
                edges.push((d(i), d(i + 1)));
            }
            for i in 1..=m {
                edges.push((a(i), b(i)));
                edges.push((c(i), d(i)));
            }
            for i in 1..m {
                edges.push((a(i), c(i + 1)));
                edges.push((d(i), b(i + 1)));
            }
            edges.push((x, y));
            edges.push((x, a(1)));
            edges.push((x, d(1)));
            for first in [a(1), b(1), c(1), d(1)] {
                edges.push((y, first));
            }
        }
        GadgetSpec::FigFvs1 => {
            // hubs 0, 1; deleting them leaves the path 4-2-5-3-6
            edges.extend([
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 5),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 4),
                (2, 5),
                (3, 5),
                (3, 6),
            ]);
        }
        GadgetSpec::FigOct1 => {
            // hubs 0, 1; triangles (1,4,2), (1,5,3), (0,6,7), (0,8,9)
            edges.extend([
                (0, 1),
                (1, 4),
                (4, 2),
                (1, 2),
                (1, 5),
                (5, 3),
                (1, 3),
                (0, 6),
                (6, 7),
                (0, 7),
                (0, 8),
                (8, 9),
                (0, 9),
            ]);
        }
        GadgetSpec::FigOct2 => {
            // hubs 0, 1, each complete to a four-cycle: 2-4-3-5-2 on the
            // right, 6-7-9-8-6 on the left
            edges.extend([
                (0, 1),
                (1, 2),
                (1, 4),
                (1, 5),
                (1, 3),
                (2, 4),
                (4, 3),
                (3, 5),
                (5, 2),
                (0, 6),
                (0, 7),
                (0, 8),
                (0, 9),
                (6, 7),
                (7, 9),
                (9, 8),
                (8, 6),
            ]);
        }
    }
    Graph::from_edges(n, &edges)
}

/// The relation an expectation asserts between a measured and an expected
/// value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
}

/// One machine-checkable claim about a gadget instance.
#[derive(Clone, Debug)]
pub enum Check {
    /// `measure(g) relation value`; exact values only where equality is
    /// known, lower bounds (`>=`) elsewhere.
    Measure {
        measure: Measure,
        relation: Relation,
        value: usize,
    },
    /// Two measures exist and have equal value.
    MeasuresEqual { a: Measure, b: Measure },
    /// The gadget has no induced copy of the pattern.
    FreeOf { name: &'static str, pattern: Graph },
    /// Exactly one proper 3-colouring up to colour permutation.
    UniqueThreeColouring,
    /// Exact vertex count.
    VertexCount(usize),
}

impl Check {
    pub fn describe(&self) -> String {
        match self {
            Check::Measure {
                measure,
                relation,
                value,
            } => {
                let op = match relation {
                    Relation::Eq => "=",
                    Relation::Ge => ">=",
                };
                format!("{measure} {op} {value}")
            }
            Check::MeasuresEqual { a, b } => format!("{a} = {b}"),
            Check::FreeOf { name, .. } => format!("{name}-free"),
            Check::UniqueThreeColouring => "unique 3-colouring".into(),
            Check::VertexCount(n) => format!("|V| = {n}"),
        }
    }

    /// Evaluates the claim against the exact solvers and recognizers.
    pub fn evaluate(&self, g: &Graph) -> bool {
        match self {
            Check::Measure {
                measure,
                relation,
                value,
            } => match measure.solve(g) {
                None => false,
                Some(sol) => match relation {
                    Relation::Eq => sol.size == *value,
                    Relation::Ge => sol.size >= *value,
                },
            },
            Check::MeasuresEqual { a, b } => match (a.solve(g), b.solve(g)) {
                (Some(x), Some(y)) => x.size == y.size,
                _ => false,
            },
            Check::FreeOf { pattern, .. } => recognition::contains_induced(g, pattern).is_none(),
            Check::UniqueThreeColouring => recognition::enumerate_three_colourings(g, 2).len() == 1,
            Check::VertexCount(n) => g.n() == *n,
        }
    }
}

fn eq(measure: Measure, value: usize) -> Check {
    Check::Measure {
        measure,
        relation: Relation::Eq,
        value,
    }
}

fn ge(measure: Measure, value: usize) -> Check {
    Check::Measure {
        measure,
        relation: Relation::Ge,
        value,
    }
}

fn free(name: &'static str, pattern: Graph) -> Check {
    Check::FreeOf { name, pattern }
}

fn p1_plus(k: usize, g: &Graph) -> Graph {
    build::empty_graph(k)
        .unwrap()
        .disjoint_union(g)
        .expect("small fixed pattern")
}

/// The expected invariants of a gadget instance. Exact values are emitted
/// only where equality is known; families proved only as lower bounds carry
/// `>=` relations, with the exact value left to the solvers at check time.
pub fn expectations(spec: &GadgetSpec) -> Result<Vec<Check>> {
    spec.check_params()?;
    let mut checks = vec![Check::VertexCount(spec.vertex_count())];
    match *spec {
        GadgetSpec::DoubleStar { .. } => {
            checks.push(eq(Measure::Fvs, 0)); // double stars are trees
        }
        GadgetSpec::D { s, r } => {
            checks.push(eq(Measure::Vc, r + 1));
            checks.push(eq(Measure::Ivc, r + s));
        }
        GadgetSpec::S { s, .. } => {
            checks.push(eq(Measure::Fvs, 2));
            checks.push(eq(Measure::Oct, 2));
            checks.push(ge(Measure::Ifvs, s + 1));
            checks.push(ge(Measure::Ioct, s + 1));
            checks.push(Check::MeasuresEqual {
                a: Measure::Ifvs,
                b: Measure::Ioct,
            });
        }
        GadgetSpec::T { s } => {
            checks.push(eq(Measure::Fvs, 3));
            checks.push(ge(Measure::Ifvs, s - 1));
            checks.push(free("P1+P3", p1_plus(1, &build::path(3).unwrap())));
            checks.push(free("2P1+P2", p1_plus(2, &build::path(2).unwrap())));
            checks.push(free(
                "2P2",
                build::copies(2, &build::path(2).unwrap()).unwrap(),
            ));
        }
        GadgetSpec::TPrime { s } => {
            checks.push(eq(Measure::Fvs, 3));
            checks.push(ge(Measure::Ifvs, s - 1));
            checks.push(free("P4", build::path(4).unwrap()));
        }
        GadgetSpec::Q { s } => {
            checks.push(eq(Measure::Oct, 2));
            checks.push(ge(Measure::Ioct, s));
            checks.push(free("P1+P4", p1_plus(1, &build::path(4).unwrap())));
            checks.push(free(
                "2P2",
                build::copies(2, &build::path(2).unwrap()).unwrap(),
            ));
        }
        GadgetSpec::Z { s } => {
            checks.push(eq(Measure::Oct, 2));
            checks.push(ge(Measure::Ioct, s));
        }
        GadgetSpec::Y { s } => {
            checks.push(eq(Measure::Oct, 2));
            checks.push(eq(Measure::Ioct, 4 * s));
            checks.push(free("K1,5", build::star(5).unwrap()));
            checks.push(Check::UniqueThreeColouring);
        }
        GadgetSpec::FigFvs1 => {
            checks.push(eq(Measure::Fvs, 2));
            checks.push(eq(Measure::Ifvs, 3));
            checks.push(free("4P1", build::empty_graph(4).unwrap()));
        }
        GadgetSpec::FigOct1 => {
            checks.push(eq(Measure::Oct, 2));
            checks.push(eq(Measure::Ioct, 3));
            checks.push(free("K1,4", build::star(4).unwrap()));
            checks.push(free("K1,3+P1", p1_plus(1, &build::star(3).unwrap())));
            checks.push(free("5P1", build::empty_graph(5).unwrap()));
        }
        GadgetSpec::FigOct2 => {
            checks.push(eq(Measure::Oct, 2));
            checks.push(eq(Measure::Ioct, 3));
            checks.push(free("3P1+P2", p1_plus(3, &build::path(2).unwrap())));
        }
    }
    Ok(checks)
}

/// Builds the gadget and evaluates all its expectations, returning the
/// failures (empty = all good).
pub fn verify(spec: &GadgetSpec) -> Result<Vec<String>> {
    let g = build(spec)?;
    let mut failures = Vec::new();
    for check in expectations(spec)? {
        if !check.evaluate(&g) {
            failures.push(format!("{}: {}", spec.describe(), check.describe()));
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::to_graph6;

    #[test]
    fn d_family_matches_double_star_at_r1() {
        let d = build(&GadgetSpec::D { s: 3, r: 1 }).unwrap();
        let ds = build(&GadgetSpec::DoubleStar { p: 3, q: 3 }).unwrap();
        assert_eq!(d, ds);
        assert_eq!(d.n(), 8);
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(build(&GadgetSpec::Y { s: 2 }).unwrap().n(), 26);
        assert_eq!(build(&GadgetSpec::S { s: 3, r: 2 }).unwrap().n(), 26);
        assert_eq!(build(&GadgetSpec::Q { s: 4 }).unwrap().n(), 12);
        assert_eq!(build(&GadgetSpec::Z { s: 4 }).unwrap().n(), 18);
        assert_eq!(build(&GadgetSpec::FigFvs1).unwrap().n(), 7);
    }

    #[test]
    fn fig_fvs1_hub_deletion_leaves_p5() {
        let g = build(&GadgetSpec::FigFvs1).unwrap();
        let rest = g.induced(
            g.full_set()
                .difference(crate::graph::VertexSet::from_iter([0, 1])),
        );
        assert!(crate::graph::are_isomorphic(&rest, &build::path(5).unwrap()).unwrap());
    }

    #[test]
    fn out_of_range_params_rejected() {
        assert!(build(&GadgetSpec::D { s: 1, r: 1 }).is_err());
        assert!(build(&GadgetSpec::S { s: 1, r: 2 }).is_err());
        assert!(build(&GadgetSpec::T { s: 2 }).is_err());
        assert!(build(&GadgetSpec::Q { s: 1 }).is_err());
        assert!(build(&GadgetSpec::Z { s: 0 }).is_err());
        assert!(build(&GadgetSpec::Y { s: 6 }).is_err()); // 74 vertices
    }

    #[test]
    fn build_is_deterministic() {
        for spec in [
            GadgetSpec::D { s: 2, r: 2 },
            GadgetSpec::S { s: 2, r: 2 },
            GadgetSpec::Q { s: 3 },
            GadgetSpec::Y { s: 1 },
            GadgetSpec::FigOct2,
        ] {
            let a = to_graph6(&build(&spec).unwrap());
            let b = to_graph6(&build(&spec).unwrap());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn expectation_descriptions() {
        let checks = expectations(&GadgetSpec::D { s: 2, r: 2 }).unwrap();
        let descs: Vec<_> = checks.iter().map(|c| c.describe()).collect();
        assert!(descs.contains(&"ivc = 4".to_string())); // r + s
        let checks = expectations(&GadgetSpec::Q { s: 3 }).unwrap();
        let descs: Vec<_> = checks.iter().map(|c| c.describe()).collect();
        assert!(descs.contains(&"P1+P4-free".to_string()));
        let checks = expectations(&GadgetSpec::Y { s: 1 }).unwrap();
        let descs: Vec<_> = checks.iter().map(|c| c.describe()).collect();
        assert!(descs.contains(&"unique 3-colouring".to_string()));
    }

    #[test]
    fn small_gadget_expectations_hold() {
        // the acceptance suite runs the full parameter grids; this is the
        // smallest instance of each family as a quick regression
        for spec in [
            GadgetSpec::DoubleStar { p: 2, q: 2 },
            GadgetSpec::D { s: 2, r: 1 },
            GadgetSpec::S { s: 2, r: 2 },
            GadgetSpec::T { s: 3 },
            GadgetSpec::TPrime { s: 3 },
            GadgetSpec::Q { s: 2 },
            GadgetSpec::Z { s: 1 },
            GadgetSpec::Y { s: 1 },
            GadgetSpec::FigFvs1,
            GadgetSpec::FigOct1,
            GadgetSpec::FigOct2,
        ] {
            let failures = verify(&spec).unwrap();
            assert!(failures.is_empty(), "failed checks: {failures:?}");
        }
    }

    #[test]
    fn graph6_roundtrip_over_gadgets() {
        for spec in [
            GadgetSpec::DoubleStar { p: 3, q: 1 },
            GadgetSpec::D { s: 3, r: 2 },
            GadgetSpec::S { s: 2, r: 3 },
            GadgetSpec::T { s: 5 },
            GadgetSpec::TPrime { s: 4 },
            GadgetSpec::Q { s: 4 },
            GadgetSpec::Z { s: 3 },
            GadgetSpec::Y { s: 2 },
            GadgetSpec::FigFvs1,
            GadgetSpec::FigOct1,
            GadgetSpec::FigOct2,
        ] {
            let g = build(&spec).unwrap();
            let enc = to_graph6(&g);
            assert_eq!(crate::graph::from_graph6(&enc).unwrap(), g);
        }
    }
}
