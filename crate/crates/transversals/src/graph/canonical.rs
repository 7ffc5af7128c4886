//! Labelling-invariant canonical forms for small graphs.
//!
//! The canonical form is the lexicographically minimal upper-triangle bit
//! string (column-major, the same pair order graph6 uses) over all vertex
//! permutations, found by a depth-first search over partial placements with
//! prefix pruning. Equal byte strings correspond exactly to isomorphic
//! graphs.

use crate::graph::Graph;
use crate::{Error, Result};

/// Permutation search is only used on graphs this small.
pub const CANONICAL_MAX_VERTICES: usize = 10;

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    total_bits: usize,
    assigned: Vec<usize>,
    used: u64,
    best: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, prefix: u64, prefix_len: usize) {
        let k = self.assigned.len();
        if k == self.n {
            if self.best.map_or(true, |b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        // column bits for placing each unused vertex at position k,
        // ascending, so the first strictly-worse candidate ends the loop
        let mut cands: Vec<(u16, usize)> = (0..self.n)
            .filter(|v| self.used & (1u64 << v) == 0)
            .map(|v| {
                let mut col: u16 = 0;
                for &earlier in &self.assigned {
                    col = (col << 1) | u16::from(self.g.has_edge(earlier, v));
                }
                (col, v)
            })
            .collect();
        cands.sort_unstable();
        for (col, v) in cands {
            let new_prefix = (prefix << k) | u64::from(col);
            let new_len = prefix_len + k;
            if let Some(b) = self.best {
                if new_prefix > (b >> (self.total_bits - new_len)) {
                    break;
                }
            }
            self.assigned.push(v);
            self.used |= 1u64 << v;
            self.run(new_prefix, new_len);
            self.assigned.pop();
            self.used &= !(1u64 << v);
        }
    }
}

/// Canonical byte string of `g`; requires `n <= 10`.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::CanonicalUnsupported {
            n,
            max: CANONICAL_MAX_VERTICES,
        });
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut search = Search {
        g,
        n,
        total_bits,
        assigned: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.run(0, 0);
    let bits = search.best.expect("search always places all vertices");

    let mut out = Vec::with_capacity(1 + total_bits.div_ceil(8));
    out.push(n as u8);
    let mut byte = 0u8;
    for i in 0..total_bits {
        byte = (byte << 1) | (((bits >> (total_bits - 1 - i)) & 1) as u8);
        if i % 8 == 7 {
            out.push(byte);
            byte = 0;
        }
    }
    if total_bits % 8 != 0 {
        byte <<= 8 - total_bits % 8;
        out.push(byte);
    }
    Ok(out)
}

/// Isomorphism test via canonical forms; both graphs must have `n <= 10`.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build;

    #[test]
    fn relabelling_invariance_p4() {
        let p4 = build::path(4).unwrap();
        // b-d-a-c relabelled: the path 1-3-0-2
        let other = Graph::from_edges(4, &[(1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&p4).unwrap(), canonical_form(&other).unwrap());
    }

    #[test]
    fn distinguishes_c4_from_p4() {
        let c4 = build::cycle(4).unwrap();
        let p4 = build::path(4).unwrap();
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&p4).unwrap());
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        // oracle: every labelled 4-vertex graph, deduplicated by canonical form
        let mut forms = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| *e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn size_cap() {
        let g = Graph::empty(11).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(Error::CanonicalUnsupported { n: 11, .. })
        ));
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).unwrap(), vec![0]);
        assert_eq!(canonical_form(&Graph::empty(1).unwrap()).unwrap(), vec![1]);
    }
}
