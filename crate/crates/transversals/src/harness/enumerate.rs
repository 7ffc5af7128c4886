//! Exhaustive generation of small graphs, one representative per
//! isomorphism class, by augmenting each (n-1)-vertex representative with
//! every possible neighbourhood for a new vertex and deduplicating via
//! canonical forms.

use crate::graph::{canonical_form, Graph, VertexSet};
use crate::recognition;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Internal generation is capped here; larger corpora come from files.
pub const ENUMERATION_MAX_N: usize = 8;

/// Graph class filters for corpus generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassTag {
    All,
    Bipartite,
    NearBipartite,
    ThreeColourable,
}

impl ClassTag {
    pub const ALL_TAGS: [ClassTag; 4] = [
        ClassTag::All,
        ClassTag::Bipartite,
        ClassTag::NearBipartite,
        ClassTag::ThreeColourable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::All => "all",
            ClassTag::Bipartite => "bipartite",
            ClassTag::NearBipartite => "near-bipartite",
            ClassTag::ThreeColourable => "3-colourable",
        }
    }

    pub fn parse(s: &str) -> Option<ClassTag> {
        match s {
            "all" => Some(ClassTag::All),
            "bipartite" => Some(ClassTag::Bipartite),
            "near-bipartite" | "near_bipartite" => Some(ClassTag::NearBipartite),
            "3-colourable" | "3-colorable" | "three-colourable" => Some(ClassTag::ThreeColourable),
            _ => None,
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            ClassTag::All => true,
            ClassTag::Bipartite => recognition::bipartition(g).is_some(),
            ClassTag::NearBipartite => recognition::near_bipartition(g).is_some(),
            ClassTag::ThreeColourable => recognition::three_colouring(g).is_some(),
        }
    }
}

impl std::fmt::Display for ClassTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// All isomorphism-class representatives on exactly `n` vertices that
/// satisfy the filter, in canonical-form order. `1 <= n <= 8`.
pub fn enumerate_graphs(n: usize, filter: ClassTag) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_MAX_N {
        return Err(Error::Unsupported(format!(
            "internal enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    let mut layer: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1)?;
    layer.insert(canonical_form(&k1)?, k1);
    for size in 2..=n {
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for g in layer.values() {
            let base = g
                .disjoint_union(&Graph::empty(1)?)
                .expect("size stays within the cap");
            let new_vertex = size - 1;
            for mask in 0u64..(1u64 << (size - 1)) {
                let mut extended = base.clone();
                // attach the new vertex according to the mask
                let edges: Vec<(usize, usize)> = VertexSet::from_bits(mask)
                    .iter()
                    .map(|v| (v, new_vertex))
                    .collect();
                if !edges.is_empty() {
                    let mut all_edges = extended.edges();
                    all_edges.extend(edges);
                    extended = Graph::from_edges(size, &all_edges)?;
                }
                let form = canonical_form(&extended)?;
                next.entry(form).or_insert(extended);
            }
        }
        layer = next;
    }
    Ok(layer
        .into_values()
        .filter(|g| filter.contains(g))
        .collect())
}

/// Representatives of every size `1..=max_n`, concatenated in ascending
/// size, canonical order within a size.
pub fn enumerate_up_to(max_n: usize, filter: ClassTag) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs(n, filter)?);
    }
    Ok(out)
}
