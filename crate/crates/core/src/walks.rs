//! Closed even walks, their binomials, and primitive-walk enumeration.
//!
//! A closed even walk `(w_1, ..., w_2s)` maps to the binomial
//! `w_1 w_3 ... w_{2s-1} - w_2 w_4 ... w_2s` in the edge ring. The primitive
//! walks of a graph generate its toric ideal and form a Gröbner basis for every
//! monomial order.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{domain, Error, Result};
use crate::graph::{build_grd, Family, SimpleGraph};
use crate::grobner::{Binomial, Monomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedEvenWalk {
    edges: Vec<usize>,
    vertices: Vec<usize>,
}

impl ClosedEvenWalk {
    /// Validates an edge sequence as a closed walk of even length.
    ///
    /// The start vertex is the first endpoint of the first edge from which the
    /// sequence can be traversed and closes up.
    pub fn new(graph: &SimpleGraph, edges: Vec<usize>) -> Result<Self> {
        if edges.is_empty() || !edges.len().is_multiple_of(2) {
            return Err(domain(format!("a closed even walk needs positive even length, got {}", edges.len())));
        }
        if let Some(&bad) = edges.iter().find(|&&e| e >= graph.num_edges()) {
            return Err(domain(format!("edge index {bad} is out of range")));
        }
        for start in graph.edges()[edges[0]].ends() {
            if let Some(vertices) = trace(graph, start, &edges) {
                if vertices.last() == Some(&start) {
                    return Ok(ClosedEvenWalk { edges, vertices });
                }
            }
        }
        Err(domain("edge sequence is not a closed walk"))
    }

    pub fn from_names(graph: &SimpleGraph, names: &[&str]) -> Result<Self> {
        let edges = names
            .iter()
            .map(|n| graph.edge_index(n).ok_or_else(|| domain(format!("unknown edge '{n}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, edges)
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// `v_0, v_1, ..., v_2s` with `v_0 == v_2s`.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_names(&self, graph: &SimpleGraph) -> Vec<String> {
        self.edges.iter().map(|&e| graph.edges()[e].name().to_string()).collect()
    }

    /// The same closed walk started `k` steps later.
    pub fn rotated(&self, k: usize) -> ClosedEvenWalk {
        let n = self.edges.len();
        let k = k % n;
        let edges = (0..n).map(|i| self.edges[(i + k) % n]).collect();
        let vertices = (0..=n).map(|i| self.vertices[(i + k) % n]).collect();
        ClosedEvenWalk { edges, vertices }
    }

    pub fn reversed(&self) -> ClosedEvenWalk {
        let mut edges = self.edges.clone();
        edges.reverse();
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        ClosedEvenWalk { edges, vertices }
    }
}

fn trace(graph: &SimpleGraph, start: usize, edges: &[usize]) -> Option<Vec<usize>> {
    let mut vertices = Vec::with_capacity(edges.len() + 1);
    vertices.push(start);
    let mut cur = start;
    for &e in edges {
        cur = graph.edges()[e].other_end(cur)?;
        vertices.push(cur);
    }
    Some(vertices)
}

/// `f_W`: odd positions (1-indexed) on the left, even positions on the right.
pub fn walk_to_binomial(walk: &ClosedEvenWalk) -> Binomial {
    let odd: Vec<usize> = walk.edges.iter().step_by(2).copied().collect();
    let even: Vec<usize> = walk.edges.iter().skip(1).step_by(2).copied().collect();
    Binomial::new(Monomial::from_vars(&odd), Monomial::from_vars(&even)).expect("both halves of an even walk have equal length")
}

/// No two cyclically consecutive edges coincide.
pub fn is_minimal(walk: &ClosedEvenWalk) -> bool {
    let n = walk.edges.len();
    (0..n).all(|i| walk.edges[i] != walk.edges[(i + 1) % n])
}

/// Whether some vertex is visited at two positions an even, nonzero distance
/// apart, so that a rotation of the walk is two closed even walks in sequence.
pub fn splits_into_closed_even_walks(walk: &ClosedEvenWalk) -> bool {
    let n = walk.edges.len();
    (0..n).any(|p| (p + 2..n).step_by(2).any(|q| walk.vertices[p] == walk.vertices[q]))
}

/// Vertex exponent vector of the image of an edge monomial under `e -> x_i x_j`.
pub fn edge_monomial_image(graph: &SimpleGraph, m: &Monomial) -> Vec<u32> {
    let mut image = vec![0; graph.num_vertices()];
    for &(e, k) in m.terms() {
        for v in graph.edges()[e].ends() {
            image[v] += k;
        }
    }
    image
}

/// `f` lies in the toric ideal iff both sides have the same image.
pub fn lies_in_toric_ideal(graph: &SimpleGraph, f: &Binomial) -> bool {
    edge_monomial_image(graph, f.lhs()) == edge_monomial_image(graph, f.rhs())
}

/// Binomials against which primitivity is decided by divisibility.
///
/// Both orientations of each binomial are indexed, so a candidate `g = u' - v'`
/// is found whether `u' | u, v' | v` or `u' | v, v' | u`.
#[derive(Clone, Debug, Default)]
pub struct CandidateSet {
    by_side: HashMap<Monomial, Vec<Monomial>>,
}

impl CandidateSet {
    pub fn new<'a>(binomials: impl IntoIterator<Item = &'a Binomial>) -> Self {
        let mut set = CandidateSet::default();
        for b in binomials {
            set.insert(b);
        }
        set
    }

    pub fn insert(&mut self, b: &Binomial) {
        if b.is_zero() {
            return;
        }
        for (one, other) in [(b.lhs(), b.rhs()), (b.rhs(), b.lhs())] {
            let entry = self.by_side.entry(one.clone()).or_default();
            if !entry.contains(other) {
                entry.push(other.clone());
            }
        }
    }

    pub fn len(&self) -> usize {
        self.by_side.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.by_side.is_empty()
    }

    /// Some candidate other than `u - v` (or its negative) divides it side by side.
    fn has_proper_divisor(&self, u: &Monomial, v: &Monomial) -> bool {
        divisors(u).iter().any(|du| {
            self.by_side.get(du).is_some_and(|rhs_list| {
                rhs_list.iter().any(|dv| dv.divides(v) && !(du == u && dv == v))
            })
        })
    }
}

fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for &(v, e) in m.terms() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            for k in 0..=e {
                next.push(d * &Monomial::from_exponents([(v, k)]));
            }
        }
        out = next;
    }
    out
}

/// `true` iff `walk` is minimal, has a nonzero binomial `f = u - v`, and no
/// candidate binomial `g != +-f` satisfies `u' | u, v' | v` (or the swapped
/// condition). `candidates` must contain the binomials of all minimal closed even
/// walks of the graph up to the length of `walk`.
pub fn is_primitive(walk: &ClosedEvenWalk, candidates: &CandidateSet) -> bool {
    if !is_minimal(walk) {
        return false;
    }
    let f = walk_to_binomial(walk);
    !f.is_zero() && !candidates.has_proper_divisor(f.lhs(), f.rhs())
}

/// The lexicographically least rotation or reflection, comparing edge names.
pub fn canonical_form(graph: &SimpleGraph, walk: &ClosedEvenWalk) -> ClosedEvenWalk {
    let ranks = name_ranks(graph);
    let key = canonical_edges(&walk.edges, &ranks);
    let n = walk.len();
    (0..n)
        .flat_map(|k| [walk.rotated(k), walk.rotated(k).reversed()])
        .find(|w| w.edges == key)
        .expect("the canonical edge sequence is one of the rotations or reflections")
}

fn name_ranks(graph: &SimpleGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..graph.num_edges()).collect();
    order.sort_by(|&a, &b| graph.edges()[a].name().cmp(graph.edges()[b].name()));
    let mut ranks = vec![0; graph.num_edges()];
    for (pos, e) in order.into_iter().enumerate() {
        ranks[e] = pos;
    }
    ranks
}

fn canonical_edges(edges: &[usize], ranks: &[usize]) -> Vec<usize> {
    let n = edges.len();
    let mut best: Option<Vec<usize>> = None;
    for k in 0..n {
        let fwd: Vec<usize> = (0..n).map(|i| edges[(k + i) % n]).collect();
        let bwd: Vec<usize> = (0..n).map(|i| edges[(k + n - i) % n]).collect();
        for cand in [fwd, bwd] {
            let better = match &best {
                None => true,
                Some(b) => cand.iter().map(|&e| ranks[e]).lt(b.iter().map(|&e| ranks[e])),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

#[derive(Clone, Copy, Debug)]
pub struct WalkSearchConfig {
    /// Maximum number of search-tree nodes visited.
    pub node_budget: u64,
}

impl Default for WalkSearchConfig {
    fn default() -> Self {
        WalkSearchConfig { node_budget: 10_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct WalkEnumeration {
    /// Canonical representatives, ordered by length then by edge names, one per binomial.
    pub walks: Vec<ClosedEvenWalk>,
    pub max_len: usize,
    /// The search stopped below the length at which completeness is known.
    pub cap_binds: bool,
    pub nodes_visited: u64,
    /// Number of minimal closed even walks (up to rotation and reflection) examined.
    pub minimal_walks: usize,
}

/// The length cap below which every primitive walk is known to lie.
///
/// `2r` for `G_{r,d}` and `4` for `K_{2,d}`. For other graphs this is `2|E|`:
/// an edge occurs at most twice in a primitive walk.
pub fn default_max_len(graph: &SimpleGraph) -> usize {
    match graph.family() {
        Some(Family::Grd { r, .. }) => 2 * r,
        Some(Family::K2d { .. }) => 4,
        None => 2 * graph.num_edges(),
    }
}

pub fn enumerate_primitive_walks(graph: &SimpleGraph, max_len: usize) -> Result<Vec<ClosedEvenWalk>> {
    Ok(search_primitive_walks(graph, max_len, WalkSearchConfig::default())?.walks)
}

/// All primitive closed even walks of length at most `max_len`, one per class
/// under rotation and reflection.
pub fn search_primitive_walks(graph: &SimpleGraph, max_len: usize, config: WalkSearchConfig) -> Result<WalkEnumeration> {
    if max_len < 4 || !max_len.is_multiple_of(2) {
        return Err(domain(format!("max_len must be an even integer >= 4, got {max_len}")));
    }
    let (classes, nodes_visited) = minimal_closed_walks(graph, max_len, config)?;
    let walks_all: Vec<ClosedEvenWalk> = classes
        .into_iter()
        .map(|edges| ClosedEvenWalk::new(graph, edges).expect("search only produces closed walks"))
        .collect();
    let candidates = CandidateSet::new(walks_all.iter().map(walk_to_binomial).collect::<Vec<_>>().iter());
    let ranks = name_ranks(graph);
    let mut walks: Vec<ClosedEvenWalk> = walks_all
        .iter()
        .filter(|w| is_primitive(w, &candidates))
        .map(|w| canonical_form(graph, w))
        .collect();
    walks.sort_by(|a, b| {
        a.len().cmp(&b.len()).then_with(|| a.edges.iter().map(|&e| ranks[e]).cmp(b.edges.iter().map(|&e| ranks[e])))
    });
    // walks differing only in the direction of an odd sub-cycle share a binomial
    let mut seen = HashSet::new();
    walks.retain(|w| seen.insert(walk_to_binomial(w).unsigned_key()));
    Ok(WalkEnumeration {
        walks,
        max_len,
        cap_binds: max_len < default_max_len(graph),
        nodes_visited,
        minimal_walks: walks_all.len(),
    })
}

/// Depth-first search over non-backtracking walks, pruned by distance back to
/// the start. Returns canonical edge sequences of the closed ones.
fn minimal_closed_walks(
    graph: &SimpleGraph,
    max_len: usize,
    config: WalkSearchConfig,
) -> Result<(BTreeSet<Vec<usize>>, u64)> {
    let adj = graph.adjacency();
    let dist: Vec<Vec<usize>> = (0..graph.num_vertices())
        .map(|v| graph.distances_from(v).into_iter().map(|d| d.unwrap_or(usize::MAX)).collect())
        .collect();
    let ranks = name_ranks(graph);
    let mut search = Search {
        adj: &adj,
        dist: &dist,
        ranks: &ranks,
        max_len,
        budget: config.node_budget,
        nodes: 0,
        found: BTreeSet::new(),
        path: Vec::with_capacity(max_len),
    };
    for start in 0..graph.num_vertices() {
        search.extend(start, start)?;
    }
    Ok((search.found, search.nodes))
}

struct Search<'a> {
    adj: &'a [Vec<(usize, usize)>],
    dist: &'a [Vec<usize>],
    ranks: &'a [usize],
    max_len: usize,
    budget: u64,
    nodes: u64,
    found: BTreeSet<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, start: usize, cur: usize) -> Result<()> {
        let len = self.path.len();
        if len >= 2 && len.is_multiple_of(2) && cur == start && self.path[0] != self.path[len - 1] {
            self.found.insert(canonical_edges(&self.path, self.ranks));
        }
        if len == self.max_len {
            return Ok(());
        }
        let remaining = self.max_len - len - 1;
        for &(e, w) in &self.adj[cur] {
            if self.path.last() == Some(&e) || self.dist[w][start] > remaining {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Budget { what: "walk search nodes", limit: self.budget });
            }
            self.path.push(e);
            self.extend(start, w)?;
            self.path.pop();
        }
        Ok(())
    }
}

/// Binomials of all primitive walks up to `max_len`: a generating set of the
/// toric ideal whenever `max_len` reaches [`default_max_len`].
pub fn toric_generators(graph: &SimpleGraph, max_len: usize, config: WalkSearchConfig) -> Result<Vec<Binomial>> {
    Ok(search_primitive_walks(graph, max_len, config)?.walks.iter().map(walk_to_binomial).collect())
}

/// `(a_i, b_i, b_j, a_j)` for `i < j`, then `(a_i, e_1, ..., e_{2r-2}, b_i)`,
/// as walks in `build_grd(r, d)`.
pub fn grd_primitive_walks(r: usize, d: usize) -> Result<Vec<ClosedEvenWalk>> {
    let graph = build_grd(r, d)?;
    let a = |i: usize| i - 1;
    let b = |i: usize| d + i - 1;
    let e = |k: usize| 2 * d + k - 1;
    let mut walks = Vec::with_capacity(d * (d + 1) / 2);
    for i in 1..=d {
        for j in i + 1..=d {
            walks.push(ClosedEvenWalk::new(&graph, vec![a(i), b(i), b(j), a(j)])?);
        }
    }
    for i in 1..=d {
        let mut edges = vec![a(i)];
        edges.extend((1..=2 * r - 2).map(e));
        edges.push(b(i));
        walks.push(ClosedEvenWalk::new(&graph, edges)?);
    }
    Ok(walks)
}
