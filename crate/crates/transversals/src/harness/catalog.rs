//! The declarative statement catalog: each entry relates an independent
//! transversal number to its unrestricted counterpart over a hereditary
//! graph class, as either an identity or a parameterized upper bound.
//! Statements are data; the checking machinery lives in the harness core.

use super::enumerate::ClassTag;
use crate::graph::{build, Graph};
use crate::recognition;
use crate::solvers::Measure;
use crate::{Error, Result};

/// Concrete values for the catalog parameters `r` (star arity) and `s`
/// (independent-set count). Statements ignore the components they do not
/// use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub r: usize,
    pub s: usize,
}

impl Params {
    pub const NONE: Params = Params { r: 0, s: 0 };
}

/// Forbidden-pattern templates, instantiated with concrete `(r, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternTemplate {
    /// `K_{1,3}^+`
    SubdividedClaw,
    /// `2P_1 + P_3`
    TwoP1P3,
    /// `K_{1,3} + P_1`
    ClawP1,
    /// `sP_1`
    SP1,
    /// `sP_1 + P_2`
    SP1P2,
    /// `sP_1 + P_3`
    SP1P3,
    /// `K_{1,3} + sP_1`
    ClawSP1,
    /// `K_{1,r}`
    StarR,
    /// `K_{1,r} + sP_1`
    StarRSP1,
    /// `K_{1,r}^+`
    StarRPlus,
    /// `P_3`
    P3,
    /// `P_2 + P_1`
    P2P1,
    /// `3P_1`
    ThreeP1,
    /// `P_4`
    P4,
    /// `P_3 + P_1`
    P3P1,
    /// `2P_1 + P_2`
    TwoP1P2,
    /// `4P_1`
    FourP1,
    /// `K_{1,3}`
    Claw,
}

fn sum(a: Graph, b: Graph) -> Graph {
    a.disjoint_union(&b).expect("patterns are tiny")
}

impl PatternTemplate {
    pub fn build(self, p: Params) -> Graph {
        let e = |k| build::empty_graph(k).unwrap();
        let pa = |k| build::path(k).unwrap();
        match self {
            PatternTemplate::SubdividedClaw => build::subdivided_star(3).unwrap(),
            PatternTemplate::TwoP1P3 => sum(e(2), pa(3)),
            PatternTemplate::ClawP1 => sum(build::star(3).unwrap(), e(1)),
            PatternTemplate::SP1 => e(p.s),
            PatternTemplate::SP1P2 => sum(e(p.s), pa(2)),
            PatternTemplate::SP1P3 => sum(e(p.s), pa(3)),
            PatternTemplate::ClawSP1 => sum(build::star(3).unwrap(), e(p.s)),
            PatternTemplate::StarR => build::star(p.r).unwrap(),
            PatternTemplate::StarRSP1 => sum(build::star(p.r).unwrap(), e(p.s)),
            PatternTemplate::StarRPlus => build::subdivided_star(p.r).unwrap(),
            PatternTemplate::P3 => pa(3),
            PatternTemplate::P2P1 => sum(pa(2), e(1)),
            PatternTemplate::ThreeP1 => e(3),
            PatternTemplate::P4 => pa(4),
            PatternTemplate::P3P1 => sum(pa(3), e(1)),
            PatternTemplate::TwoP1P2 => sum(e(2), pa(2)),
            PatternTemplate::FourP1 => e(4),
            PatternTemplate::Claw => build::star(3).unwrap(),
        }
    }

    pub fn name(self, p: Params) -> String {
        match self {
            PatternTemplate::SubdividedClaw => "K1,3^+".into(),
            PatternTemplate::TwoP1P3 => "2P1+P3".into(),
            PatternTemplate::ClawP1 => "K1,3+P1".into(),
            PatternTemplate::SP1 => format!("{}P1", p.s),
            PatternTemplate::SP1P2 => format!("{}P1+P2", p.s),
            PatternTemplate::SP1P3 => format!("{}P1+P3", p.s),
            PatternTemplate::ClawSP1 => format!("K1,3+{}P1", p.s),
            PatternTemplate::StarR => format!("K1,{}", p.r),
            PatternTemplate::StarRSP1 => format!("K1,{}+{}P1", p.r, p.s),
            PatternTemplate::StarRPlus => format!("K1,{}^+", p.r),
            PatternTemplate::P3 => "P3".into(),
            PatternTemplate::P2P1 => "P2+P1".into(),
            PatternTemplate::ThreeP1 => "3P1".into(),
            PatternTemplate::P4 => "P4".into(),
            PatternTemplate::P3P1 => "P3+P1".into(),
            PatternTemplate::TwoP1P2 => "2P1+P2".into(),
            PatternTemplate::FourP1 => "4P1".into(),
            PatternTemplate::Claw => "K1,3".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Le,
}

/// One catalog entry. A graph is in scope when it belongs to `class` and is
/// free of every pattern in at least one group of `free_any`; the relation
/// then requires `lhs_coeff * lhs  (= | <=)  rhs_coeff * rhs^rhs_power +
/// offset`.
#[derive(Clone)]
pub struct Statement {
    pub id: &'static str,
    pub summary: &'static str,
    pub class: ClassTag,
    pub free_any: &'static [&'static [PatternTemplate]],
    pub lhs: Measure,
    pub rhs: Measure,
    pub cmp: Cmp,
    pub lhs_coeff: fn(Params) -> i64,
    pub rhs_coeff: fn(Params) -> i64,
    pub rhs_power: u32,
    pub offset: fn(Params) -> i64,
    /// Whether equality is attained on some graph in the class.
    pub tight: bool,
    pub r_min: Option<usize>,
    pub s_min: Option<usize>,
}

impl Statement {
    pub fn uses_r(&self) -> bool {
        self.r_min.is_some()
    }

    pub fn uses_s(&self) -> bool {
        self.s_min.is_some()
    }

    pub fn validate_params(&self, p: Params) -> Result<()> {
        if let Some(r_min) = self.r_min {
            if p.r < r_min {
                return Err(Error::Precondition(format!(
                    "{} needs r >= {r_min}, got {}",
                    self.id, p.r
                )));
            }
        }
        if let Some(s_min) = self.s_min {
            if p.s < s_min {
                return Err(Error::Precondition(format!(
                    "{} needs s >= {s_min}, got {}",
                    self.id, p.s
                )));
            }
        }
        Ok(())
    }

    /// The default instantiation grid: `r` over `{3,4}` and `s` over
    /// `{1,2,3}` where the statement admits them; a statement whose domain
    /// excludes the whole grid falls back to its minimal valid parameters.
    pub fn default_param_grid(&self) -> Vec<Params> {
        let rs: Vec<usize> = match self.r_min {
            None => vec![0],
            Some(r_min) => {
                let in_grid: Vec<usize> = [3usize, 4].into_iter().filter(|&r| r >= r_min).collect();
                if in_grid.is_empty() {
                    vec![r_min]
                } else {
                    in_grid
                }
            }
        };
        let ss: Vec<usize> = match self.s_min {
            None => vec![0],
            Some(s_min) => {
                let in_grid: Vec<usize> =
                    [1usize, 2, 3].into_iter().filter(|&s| s >= s_min).collect();
                if in_grid.is_empty() {
                    vec![s_min]
                } else {
                    in_grid
                }
            }
        };
        let mut out = Vec::new();
        for &r in &rs {
            for &s in &ss {
                out.push(Params { r, s });
            }
        }
        out
    }

    /// Class membership plus freeness of at least one pattern group.
    pub fn applicable(&self, g: &Graph, p: Params) -> bool {
        if !self.class.contains(g) {
            return false;
        }
        self.free_any.iter().any(|group| {
            group
                .iter()
                .all(|tpl| recognition::contains_induced(g, &tpl.build(p)).is_none())
        })
    }

    /// Right-hand side of the relation for a measured base value.
    pub fn bound_value(&self, rhs_val: usize, p: Params) -> i64 {
        let powered = (rhs_val as i64).pow(self.rhs_power);
        (self.rhs_coeff)(p) * powered + (self.offset)(p)
    }

    /// Returns `(pass, equality)` for measured values of both sides.
    pub fn holds(&self, lhs_val: usize, rhs_val: usize, p: Params) -> (bool, bool) {
        let lhs = (self.lhs_coeff)(p) * lhs_val as i64;
        let bound = self.bound_value(rhs_val, p);
        match self.cmp {
            Cmp::Eq => (lhs == bound, lhs == bound),
            Cmp::Le => (lhs <= bound, lhs == bound),
        }
    }

    /// Human-readable description of the filter for a given instantiation.
    pub fn describe_filter(&self, p: Params) -> String {
        let groups: Vec<String> = self
            .free_any
            .iter()
            .map(|group| {
                let names: Vec<String> = group.iter().map(|t| t.name(p)).collect();
                format!("({})-free", names.join(","))
            })
            .collect();
        format!("{} {}", groups.join(" or "), self.class)
    }
}

fn c0(_: Params) -> i64 {
    0
}
fn c1(_: Params) -> i64 {
    1
}
fn c2(_: Params) -> i64 {
    2
}
fn c3(_: Params) -> i64 {
    3
}

/// The full statement catalog, in a fixed order. `ID-VC`, `ID-FVS` and
/// `ID-OCT` are the umbrella identity statements; they share their filter
/// and relation with `VC-1`, `FVS-1` and `OCT-1`.
pub fn catalog() -> Vec<Statement> {
    let identity_vc = Statement {
        id: "VC-1",
        summary: "ivc = vc",
        class: ClassTag::Bipartite,
        free_any: &[
            &[PatternTemplate::SubdividedClaw],
            &[PatternTemplate::TwoP1P3],
        ],
        lhs: Measure::Ivc,
        rhs: Measure::Vc,
        cmp: Cmp::Eq,
        lhs_coeff: c1,
        rhs_coeff: c1,
        rhs_power: 1,
        offset: c0,
        tight: true,
        r_min: None,
        s_min: None,
    };
    let identity_fvs = Statement {
        id: "FVS-1",
        summary: "ifvs = fvs",
        class: ClassTag::NearBipartite,
        free_any: &[
            &[PatternTemplate::P3],
            &[PatternTemplate::P2P1],
            &[PatternTemplate::ThreeP1],
        ],
        lhs: Measure::Ifvs,
        rhs: Measure::Fvs,
        cmp: Cmp::Eq,
        lhs_coeff: c1,
        rhs_coeff: c1,
        rhs_power: 1,
        offset: c0,
        tight: true,
        r_min: None,
        s_min: None,
    };
    let identity_oct = Statement {
        id: "OCT-1",
        summary: "ioct = oct",
        class: ClassTag::ThreeColourable,
        free_any: &[
            &[PatternTemplate::P4],
            &[PatternTemplate::P3P1],
            &[PatternTemplate::TwoP1P2],
            &[PatternTemplate::FourP1],
        ],
        lhs: Measure::Ioct,
        rhs: Measure::Oct,
        cmp: Cmp::Eq,
        lhs_coeff: c1,
        rhs_coeff: c1,
        rhs_power: 1,
        offset: c0,
        tight: true,
        r_min: None,
        s_min: None,
    };

    let mut cat = vec![
        identity_vc.clone(),
        Statement {
            id: "VC-2",
            summary: "ivc <= vc + 1",
            class: ClassTag::Bipartite,
            free_any: &[&[PatternTemplate::ClawP1]],
            lhs: Measure::Ivc,
            rhs: Measure::Vc,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c1,
            rhs_power: 1,
            offset: c1,
            tight: true,
            r_min: None,
            s_min: None,
        },
        Statement {
            id: "VC-3",
            summary: "ivc <= vc + s - 3 on sP1-free (s >= 5)",
            class: ClassTag::Bipartite,
            free_any: &[&[PatternTemplate::SP1]],
            lhs: Measure::Ivc,
            rhs: Measure::Vc,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c1,
            rhs_power: 1,
            offset: |p| p.s as i64 - 3,
            tight: false,
            r_min: None,
            s_min: Some(5),
        },
        Statement {
            id: "VC-4",
            summary: "ivc <= vc + s - 2 on (sP1+P2)-free (s >= 3)",
            class: ClassTag::Bipartite,
            free_any: &[&[PatternTemplate::SP1P2]],
            lhs: Measure::Ivc,
            rhs: Measure::Vc,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c1,
            rhs_power: 1,
            offset: |p| p.s as i64 - 2,
            tight: false,
            r_min: None,
            s_min: Some(3),
        },
        Statement {
            id: "VC-5",
            summary: "ivc <= vc + s - 2 on (sP1+P3)-free (s >= 3)",
            class: ClassTag::Bipartite,
            free_any: &[&[PatternTemplate::SP1P3]],
            lhs: Measure::Ivc,
            rhs: Measure::Vc,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c1,
            rhs_power: 1,
            offset: |p| p.s as i64 - 2,
            tight: true,
            r_min: None,
            s_min: Some(3),
        },
        Statement {
            id: "VC-6",
            summary: "ivc <= vc + 3s + 2 on (K1,3+sP1)-free (s >= 2)",
            class: ClassTag::Bipartite,
            free_any: &[&[PatternTemplate::ClawSP1]],
            lhs: Measure::Ivc,
            rhs: Measure::Vc,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c1,
            rhs_power: 1,
            offset: |p| 3 * p.s as i64 + 2,
            tight: false,
            r_min: None,
            s_min: Some(2),
        },
        Statement {
            id: "VC-7",
            summary: "ivc <= r*vc/2 - 1 on K1,r-free (r >= 4)",
            class: ClassTag::Bipartite,
            free_any: &[&[PatternTemplate::StarR]],
            lhs: Measure::Ivc,
            rhs: Measure::Vc,
            cmp: Cmp::Le,
            lhs_coeff: c2,
            rhs_coeff: |p| p.r as i64,
            rhs_power: 1,
            offset: |_| -2,
            tight: true,
            r_min: Some(4),
            s_min: None,
        },
        Statement {
            id: "VC-8",
            summary: "ivc <= r*vc + r*s on (K1,r+sP1)-free (r >= 4, s >= 1)",
            class: ClassTag::Bipartite,
            free_any: &[&[PatternTemplate::StarRSP1]],
            lhs: Measure::Ivc,
            rhs: Measure::Vc,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: |p| p.r as i64,
            rhs_power: 1,
            offset: |p| (p.r * p.s) as i64,
            tight: false,
            r_min: Some(4),
            s_min: Some(1),
        },
        Statement {
            id: "VC-9",
            summary: "ivc <= (r-1)*vc^2 on K1,r^+-free (r >= 4)",
            class: ClassTag::Bipartite,
            free_any: &[&[PatternTemplate::StarRPlus]],
            lhs: Measure::Ivc,
            rhs: Measure::Vc,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: |p| p.r as i64 - 1,
            rhs_power: 2,
            offset: c0,
            tight: false,
            r_min: Some(4),
            s_min: None,
        },
        identity_fvs.clone(),
        Statement {
            id: "FVS-2",
            summary: "ifvs <= fvs + 1 on 4P1-free",
            class: ClassTag::NearBipartite,
            free_any: &[&[PatternTemplate::FourP1]],
            lhs: Measure::Ifvs,
            rhs: Measure::Fvs,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c1,
            rhs_power: 1,
            offset: c1,
            tight: true,
            r_min: None,
            s_min: None,
        },
        Statement {
            id: "FVS-3",
            summary: "ifvs <= fvs + s - 3 on sP1-free (s >= 5)",
            class: ClassTag::NearBipartite,
            free_any: &[&[PatternTemplate::SP1]],
            lhs: Measure::Ifvs,
            rhs: Measure::Fvs,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c1,
            rhs_power: 1,
            offset: |p| p.s as i64 - 3,
            tight: false,
            r_min: None,
            s_min: Some(5),
        },
        Statement {
            id: "FVS-4",
            summary: "ifvs <= (2r^2-5r+3)*fvs on K1,r-free (r >= 3)",
            class: ClassTag::NearBipartite,
            free_any: &[&[PatternTemplate::StarR]],
            lhs: Measure::Ifvs,
            rhs: Measure::Fvs,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: |p| {
                let r = p.r as i64;
                2 * r * r - 5 * r + 3
            },
            rhs_power: 1,
            offset: c0,
            tight: false,
            r_min: Some(3),
            s_min: None,
        },
        identity_oct.clone(),
        Statement {
            id: "OCT-2",
            summary: "ioct <= oct + s - 3 on sP1-free (s >= 5)",
            class: ClassTag::ThreeColourable,
            free_any: &[&[PatternTemplate::SP1]],
            lhs: Measure::Ioct,
            rhs: Measure::Oct,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c1,
            rhs_power: 1,
            offset: |p| p.s as i64 - 3,
            tight: false,
            r_min: None,
            s_min: Some(5),
        },
        Statement {
            id: "OCT-3",
            summary: "ioct <= oct + 3s - 1 on (sP1+P2)-free (s >= 3)",
            class: ClassTag::ThreeColourable,
            free_any: &[&[PatternTemplate::SP1P2]],
            lhs: Measure::Ioct,
            rhs: Measure::Oct,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c1,
            rhs_power: 1,
            offset: |p| 3 * p.s as i64 - 1,
            tight: false,
            r_min: None,
            s_min: Some(3),
        },
        Statement {
            id: "OCT-4",
            summary: "ioct <= 2*oct + 6s on (sP1+P3)-free (s >= 2)",
            class: ClassTag::ThreeColourable,
            free_any: &[&[PatternTemplate::SP1P3]],
            lhs: Measure::Ioct,
            rhs: Measure::Oct,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c2,
            rhs_power: 1,
            offset: |p| 6 * p.s as i64,
            tight: false,
            r_min: None,
            s_min: Some(2),
        },
        Statement {
            id: "OCT-5",
            summary: "ioct <= 3*oct on K1,3-free",
            class: ClassTag::ThreeColourable,
            free_any: &[&[PatternTemplate::Claw]],
            lhs: Measure::Ioct,
            rhs: Measure::Oct,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c3,
            rhs_power: 1,
            offset: c0,
            tight: false,
            r_min: None,
            s_min: None,
        },
        Statement {
            id: "OCT-6",
            summary: "ioct <= 3*oct + 9s + 3 on (K1,3+sP1)-free (s >= 1)",
            class: ClassTag::ThreeColourable,
            free_any: &[&[PatternTemplate::ClawSP1]],
            lhs: Measure::Ioct,
            rhs: Measure::Oct,
            cmp: Cmp::Le,
            lhs_coeff: c1,
            rhs_coeff: c3,
            rhs_power: 1,
            offset: |p| 9 * p.s as i64 + 3,
            tight: false,
            r_min: None,
            s_min: Some(1),
        },
    ];

    for (alias, mut stmt) in [
        ("ID-VC", identity_vc),
        ("ID-FVS", identity_fvs),
        ("ID-OCT", identity_oct),
    ] {
        stmt.id = alias;
        cat.push(stmt);
    }
    cat
}

/// Looks up a statement by its catalog key.
pub fn find(id: &str) -> Option<Statement> {
    catalog().into_iter().find(|s| s.id == id)
}

/// Expands a selection string: a comma-separated list of catalog keys, the
/// keyword `all`, or one of the group prefixes `VC`, `FVS`, `OCT`, `ID`.
pub fn select(selection: &str) -> Result<Vec<Statement>> {
    let cat = catalog();
    let mut out = Vec::new();
    for token in selection.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if token.eq_ignore_ascii_case("all") {
            out.extend(cat.iter().cloned());
            continue;
        }
        let as_prefix: Vec<&Statement> = cat
            .iter()
            .filter(|s| {
                s.id == token
                    || s.id
                        .strip_prefix(token)
                        .is_some_and(|rest| rest.starts_with('-'))
            })
            .collect();
        if as_prefix.is_empty() {
            return Err(Error::Unsupported(format!(
                "unknown statement selector: {token}"
            )));
        }
        out.extend(as_prefix.into_iter().cloned());
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|s| seen.insert(s.id));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{self, GadgetSpec};

    #[test]
    fn catalog_keys_are_unique_and_complete() {
        let cat = catalog();
        let ids: Vec<_> = cat.iter().map(|s| s.id).collect();
        let unique: std::collections::HashSet<_> = ids.iter().collect();
        assert_eq!(ids.len(), unique.len());
        assert_eq!(cat.len(), 9 + 4 + 6 + 3);
        for prefix in ["VC", "FVS", "OCT", "ID"] {
            assert!(ids.iter().any(|id| id.starts_with(prefix)));
        }
    }

    #[test]
    fn selection_syntax() {
        assert_eq!(select("all").unwrap().len(), 22);
        assert_eq!(select("VC").unwrap().len(), 9);
        assert_eq!(select("VC-2,OCT-5").unwrap().len(), 2);
        assert_eq!(select("ID").unwrap().len(), 3);
        assert!(select("VC-99").is_err());
    }

    #[test]
    fn default_grids() {
        assert_eq!(find("VC-2").unwrap().default_param_grid().len(), 1);
        // s >= 5 falls back to the minimal valid value
        assert_eq!(
            find("VC-3").unwrap().default_param_grid(),
            vec![Params { r: 0, s: 5 }]
        );
        // r in {3,4} intersected with r >= 4
        assert_eq!(
            find("VC-7").unwrap().default_param_grid(),
            vec![Params { r: 4, s: 0 }]
        );
        assert_eq!(find("VC-8").unwrap().default_param_grid().len(), 3);
        assert_eq!(find("FVS-4").unwrap().default_param_grid().len(), 2);
    }

    #[test]
    fn relation_evaluation() {
        let vc7 = find("VC-7").unwrap();
        let p = Params { r: 4, s: 0 };
        // 2*ivc <= r*vc - 2: the double star with two leaves per hub gives
        // vc = 2, ivc = 3, equality
        let (pass, eq) = vc7.holds(3, 2, p);
        assert!(pass && eq);
        let (pass, eq) = vc7.holds(2, 2, p);
        assert!(pass && !eq);
        let (pass, _) = vc7.holds(4, 2, p);
        assert!(!pass);
    }

    #[test]
    fn applicability_uses_class_and_patterns() {
        let d22 = gadgets::build(&GadgetSpec::DoubleStar { p: 2, q: 2 }).unwrap();
        let vc2 = find("VC-2").unwrap();
        assert!(vc2.applicable(&d22, Params::NONE));

        let vc1 = find("VC-1").unwrap();
        // the double star contains both a subdivided claw and 2P1+P3
        assert!(!vc1.applicable(&d22, Params::NONE));

        let c5 = crate::graph::build::cycle(5).unwrap();
        assert!(!vc2.applicable(&c5, Params::NONE)); // not bipartite
    }

    #[test]
    fn parameter_validation() {
        let vc8 = find("VC-8").unwrap();
        assert!(vc8.validate_params(Params { r: 4, s: 1 }).is_ok());
        assert!(vc8.validate_params(Params { r: 3, s: 1 }).is_err());
        assert!(vc8.validate_params(Params { r: 4, s: 0 }).is_err());
    }
}
