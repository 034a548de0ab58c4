//! Brute-force computations on graded pieces of the edge ring.

use std::collections::{BTreeMap, HashMap, HashSet};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::linalg::{rank, rank_dense, SparseRow};

/// Maximum number of edge monomials enumerated across all degrees.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationBudget(pub u64);

pub const DEFAULT_ENUMERATION_BUDGET: EnumerationBudget = EnumerationBudget(10_000_000);

impl Default for EnumerationBudget {
    fn default() -> Self {
        DEFAULT_ENUMERATION_BUDGET
    }
}

struct Counter {
    used: u64,
    limit: u64,
}

impl Counter {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::Budget { what: "edge monomials enumerated", limit: self.limit });
        }
        Ok(())
    }
}

fn image(graph: &SimpleGraph, edges: &[usize]) -> Vec<u32> {
    let mut v = vec![0u32; graph.num_vertices()];
    for &e in edges {
        for x in graph.edges()[e].ends() {
            v[x] += 1;
        }
    }
    v
}

/// `dim (R/I_G)_k` for `k = 0..=max_deg`: distinct images of degree-`k` edge monomials.
pub fn hilbert_enumeration_oracle(graph: &SimpleGraph, max_deg: usize, budget: EnumerationBudget) -> Result<Vec<u64>> {
    let mut counter = Counter { used: 0, limit: budget.0 };
    let mut out = Vec::with_capacity(max_deg + 1);
    for k in 0..=max_deg {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for combo in (0..graph.num_edges()).combinations_with_replacement(k) {
            counter.tick()?;
            seen.insert(image(graph, &combo));
        }
        out.push(seen.len() as u64);
    }
    Ok(out)
}

/// Monomials of one degree grouped by image: the fibers of the edge map.
struct Piece {
    /// fiber id and position within the fiber, keyed by sorted edge multiset
    index: HashMap<Vec<usize>, (usize, usize)>,
    fibers: Vec<Vec<Vec<usize>>>,
}

fn graded_piece(graph: &SimpleGraph, k: usize, counter: &mut Counter) -> Result<Piece> {
    let mut by_image: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut fibers: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut index = HashMap::new();
    for combo in (0..graph.num_edges()).combinations_with_replacement(k) {
        counter.tick()?;
        let id = *by_image.entry(image(graph, &combo)).or_insert_with(|| {
            fibers.push(Vec::new());
            fibers.len() - 1
        });
        index.insert(combo.clone(), (id, fibers[id].len()));
        fibers[id].push(combo);
    }
    Ok(Piece { index, fibers })
}

impl Piece {
    fn len(&self) -> usize {
        self.index.len()
    }

    /// `dim I_k`: each fiber of size `s` contributes `s - 1` independent binomials.
    fn ideal_dim(&self) -> usize {
        self.len() - self.fibers.len()
    }
}

/// `beta_{0,j}(I_G)` for `j = 2..=max_deg` as `dim I_j - dim R_1 I_{j-1}`.
pub fn minimal_generators_oracle(
    graph: &SimpleGraph,
    max_deg: usize,
    budget: EnumerationBudget,
) -> Result<BTreeMap<usize, u64>> {
    let mut counter = Counter { used: 0, limit: budget.0 };
    let mut out = BTreeMap::new();
    if max_deg < 2 {
        return Ok(out);
    }
    let mut prev = graded_piece(graph, 1, &mut counter)?;
    for j in 2..=max_deg {
        let cur = graded_piece(graph, j, &mut counter)?;
        // R_1 I_{j-1} is spanned by e (m - m_0) over fibers of degree j - 1
        let mut rows: Vec<Vec<SparseRow>> = vec![Vec::new(); cur.fibers.len()];
        for fiber in prev.fibers.iter().filter(|f| f.len() > 1) {
            for m in &fiber[1..] {
                for e in 0..graph.num_edges() {
                    let (fid, p0) = cur.index[&with_edge(&fiber[0], e)];
                    let (_, p1) = cur.index[&with_edge(m, e)];
                    if p0 != p1 {
                        rows[fid].push(vec![(p1, 1), (p0, -1)]);
                    }
                }
            }
        }
        let generated: usize = rows.iter().map(|r| rank(r)).sum();
        out.insert(j, (cur.ideal_dim() - generated) as u64);
        prev = cur;
    }
    Ok(out)
}

fn with_edge(m: &[usize], e: usize) -> Vec<usize> {
    let mut v = m.to_vec();
    let pos = v.partition_point(|&x| x <= e);
    v.insert(pos, e);
    v
}

/// Rank of the edge-vertex incidence matrix.
pub fn krull_dim(graph: &SimpleGraph) -> usize {
    let rows: Vec<Vec<i64>> = graph
        .edges()
        .iter()
        .map(|e| {
            let mut row = vec![0; graph.num_vertices()];
            for v in e.ends() {
                row[v] = 1;
            }
            row
        })
        .collect();
    rank_dense(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_grd, build_k2d};

    fn path(n: usize) -> SimpleGraph {
        let vertices: Vec<String> = (0..=n).map(|i| format!("p{i}")).collect();
        let edges = (0..n).map(|i| (format!("f{i}"), format!("p{i}"), format!("p{}", i + 1)));
        SimpleGraph::new(vertices, edges).unwrap()
    }

    #[test]
    fn small_family_hilbert() {
        let g = build_grd(3, 2).unwrap();
        assert_eq!(hilbert_enumeration_oracle(&g, 2, EnumerationBudget::default()).unwrap(), [1, 8, 35]);
    }

    #[test]
    fn low_degrees() {
        let g = build_k2d(3).unwrap();
        let h = hilbert_enumeration_oracle(&g, 1, EnumerationBudget::default()).unwrap();
        assert_eq!(h, [1, 6]);
    }

    #[test]
    fn k2d_generators() {
        for d in 2..=4 {
            let g = build_k2d(d).unwrap();
            let gens = minimal_generators_oracle(&g, 3, EnumerationBudget::default()).unwrap();
            assert_eq!(gens, BTreeMap::from([(2, (d * (d - 1) / 2) as u64), (3, 0)]));
        }
    }

    #[test]
    fn tree_has_no_generators() {
        let gens = minimal_generators_oracle(&path(4), 4, EnumerationBudget::default()).unwrap();
        assert!(gens.values().all(|&c| c == 0));
        assert_eq!(gens.len(), 3);
    }

    #[test]
    fn krull_dimensions() {
        assert_eq!(krull_dim(&build_grd(3, 2).unwrap()), 6);
        assert_eq!(krull_dim(&path(1)), 1);
        // odd cycle: full rank
        let tri = SimpleGraph::new(
            ["u", "v", "w"],
            [("f", "u", "v"), ("g", "v", "w"), ("h", "w", "u")].map(|(n, a, b)| (n.to_string(), a.to_string(), b.to_string())),
        )
        .unwrap();
        assert_eq!(krull_dim(&tri), 3);
    }

    #[test]
    fn budget() {
        let g = build_grd(3, 3).unwrap();
        let err = hilbert_enumeration_oracle(&g, 4, EnumerationBudget(100)).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
        assert!(minimal_generators_oracle(&g, 4, EnumerationBudget(100)).is_err());
    }
}
