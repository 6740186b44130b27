//! Finite simple graphs, chordality with checkable witnesses, clique
//! complexes, and the graph-side equivalences for quasi-trees.

use std::collections::VecDeque;

use itertools::Itertools;

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideals::{Monomial, MonomialIdeal};
use crate::limits::Limits;
use crate::quasitrees::leaf_order;
use crate::vertex::{check_ambient, full_mask};

/// A simple graph on `[n]`, stored as neighbourhood bitmasks (vertex `v` at bit `v - 1`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_ambient(n)?;
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, ambient: n });
                }
            }
            if a == b {
                return Err(Error::domain(format!("loop at vertex {a}")));
            }
            if adj[a - 1] >> (b - 1) & 1 == 1 {
                return Err(Error::domain(format!("edge {{{a},{b}}} listed twice")));
            }
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_ambient(n)?;
        Ok(Self::from_adjacency((0..n).map(|v| full_mask(n) & !(1 << v)).collect()))
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)`, `i < j`, 1-based and sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).filter(move |&j| self.adj[i] >> j & 1 == 1).map(move |j| (i + 1, j + 1)))
            .collect()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    pub(crate) fn is_clique_mask(&self, mask: u64) -> bool {
        mask_iter(mask).all(|v| mask & !(1 << v) & !self.adj[v] == 0)
    }

    /// The graph on the same vertices with edges `{i,j} ∉ E(G)`.
    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        Self::from_adjacency((0..self.n).map(|v| !self.adj[v] & full & !(1 << v)).collect())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> + Clone {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

/// A witness for either answer to "is the graph chordal?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// Vertex order (1-based) in which the earlier neighbours of every vertex form a clique.
    Chordal { order: Vec<usize> },
    /// A chordless cycle of length at least four, starting at its least vertex.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Maximum-cardinality search followed by verification of the resulting order.
pub fn is_chordal(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    match first_violation(g, &order) {
        None => Chordality::Chordal { order: order.iter().map(|v| v + 1).collect() },
        Some((v, x, y)) => {
            let cycle = chordless_cycle_through(g, v, x, y)
                .or_else(|| {
                    (0..g.n).find_map(|v| {
                        mask_iter(g.adj[v])
                            .tuple_combinations()
                            .filter(|&(x, y)| g.adj[x] >> y & 1 == 0)
                            .find_map(|(x, y)| chordless_cycle_through(g, v, x, y))
                    })
                })
                .expect("a graph without a perfect elimination order has a chordless cycle");
            Chordality::NotChordal { cycle: normalize_cycle(cycle) }
        }
    }
}

fn mcs_order(g: &Graph) -> Vec<usize> {
    let mut weight = vec![0usize; g.n];
    let mut done = 0u64;
    let mut order = Vec::with_capacity(g.n);
    for _ in 0..g.n {
        let v = (0..g.n).filter(|&v| done >> v & 1 == 0).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        order.push(v);
        done |= 1 << v;
        for u in mask_iter(g.adj[v] & !done) {
            weight[u] += 1;
        }
    }
    order
}

/// `(v, x, y)` with `x, y` earlier neighbours of `v` that are not adjacent.
fn first_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let mut earlier = 0u64;
    for &v in order {
        let back = g.adj[v] & earlier;
        for x in mask_iter(back) {
            let missing = back & !(1 << x) & !g.adj[x];
            if missing != 0 {
                return Some((v, x, missing.trailing_zeros() as usize));
            }
        }
        earlier |= 1 << v;
    }
    None
}

/// `v, x, ..., y` closed by a shortest `x`-`y` path avoiding the other neighbours of `v`.
fn chordless_cycle_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let blocked = (g.adj[v] | 1 << v) & !(1 << x) & !(1 << y);
    let mut prev = vec![usize::MAX; g.n];
    prev[x] = x;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            break;
        }
        for w in mask_iter(g.adj[u] & !blocked) {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    if prev[y] == usize::MAX {
        return None;
    }
    let mut path = vec![y];
    while *path.last().unwrap() != x {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

fn normalize_cycle(cycle0: Vec<usize>) -> Vec<usize> {
    let k = cycle0.len();
    let start = (0..k).min_by_key(|&i| cycle0[i]).unwrap();
    let forward: Vec<usize> = (0..k).map(|i| cycle0[(start + i) % k] + 1).collect();
    let backward: Vec<usize> = (0..k).map(|i| cycle0[(start + k - i) % k] + 1).collect();
    forward.min(backward)
}

/// Checks that every vertex's earlier neighbours in `order` (1-based) form a clique.
pub fn verify_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n || order.iter().any(|&v| v == 0 || v > g.n) || !order.iter().all_unique() {
        return false;
    }
    let mut earlier = 0u64;
    for &v in order {
        if !g.is_clique_mask(g.adj[v - 1] & earlier) {
            return false;
        }
        earlier |= 1 << (v - 1);
    }
    true
}

/// Checks that `cycle` (1-based) is a cycle of length at least four without chords.
pub fn verify_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || !cycle.iter().all_unique() || cycle.iter().any(|&v| v == 0 || v > g.n) {
        return false;
    }
    (0..k).all(|a| {
        (a + 1..k).all(|b| {
            let consecutive = b == a + 1 || (a == 0 && b == k - 1);
            g.has_edge(cycle[a], cycle[b]) == consecutive
        })
    })
}

/// `(x_i x_j : {i,j} ∈ E(G))`; the zero ideal for an edgeless graph.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g.edges().into_iter().map(|(i, j)| Monomial::from_mask(g.n, 1 << (i - 1) | 1 << (j - 1))).collect();
    MonomialIdeal::from_minimal_unchecked(g.n, gens)
}

/// The clique complex: faces are the cliques of `G`, facets the maximal cliques.
pub fn clique_complex(g: &Graph, limits: &Limits) -> Result<SimplicialComplex> {
    if g.n > limits.max_clique_vertices {
        return Err(Error::resource(format!(
            "clique enumeration on {} vertices exceeds the cap of {}",
            g.n, limits.max_clique_vertices
        )));
    }
    let mut cliques = Vec::new();
    bron_kerbosch(g, 0, full_mask(g.n), 0, &mut cliques);
    if g.n == 0 {
        cliques = vec![0];
    }
    Ok(SimplicialComplex::from_masks(g.n, cliques))
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = mask_iter(p | x).max_by_key(|&u| (p & g.adj[u]).count_ones()).unwrap();
    for v in mask_iter(p & !g.adj[pivot]) {
        bron_kerbosch(g, r | 1 << v, p & g.adj[v], x & g.adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// The graph of 2-element faces of a complex.
pub fn one_skeleton_graph(complex: &SimplicialComplex) -> Graph {
    let n = complex.ambient();
    let mut adj = vec![0u64; n];
    for f in complex.facets() {
        for (a, b) in mask_iter(f.bits()).tuple_combinations() {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    Graph::from_adjacency(adj)
}

/// Vertices of `[n]` that are not faces of the complex.
pub fn missing_vertices(complex: &SimplicialComplex) -> Vec<usize> {
    let covered = complex.vertex_support().bits();
    (1..=complex.ambient()).filter(|v| covered >> (v - 1) & 1 == 0).collect()
}

/// Both sides of "chordal iff the clique complex is a quasi-tree".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracReport {
    pub chordal: Chordality,
    pub leaf_order: Option<Vec<usize>>,
}

impl DiracReport {
    pub fn agrees(&self) -> bool {
        self.chordal.is_chordal() == self.leaf_order.is_some()
    }
}

pub fn dirac_check(g: &Graph, limits: &Limits) -> Result<DiracReport> {
    let delta = clique_complex(g, limits)?;
    Ok(DiracReport { chordal: is_chordal(g), leaf_order: leaf_order(&delta)? })
}

/// Both sides of "a pure `ℓ`-dimensional complex is the `ℓ`-skeleton of a
/// quasi-tree iff its graph is chordal and it is the `ℓ`-skeleton of the
/// clique complex of that graph".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigherDiracReport {
    pub dimension: usize,
    /// The clique complex of the 1-skeleton is a quasi-tree whose `ℓ`-skeleton is the input.
    pub skeleton_of_quasi_tree: bool,
    pub chordal: bool,
    pub skeleton_of_clique_complex: bool,
}

impl HigherDiracReport {
    pub fn holds(&self) -> bool {
        self.skeleton_of_quasi_tree == (self.chordal && self.skeleton_of_clique_complex)
    }
}

pub fn higher_dirac_check(complex: &SimplicialComplex, limits: &Limits) -> Result<HigherDiracReport> {
    let (dim, pure) = complex.dimension_info()?;
    if !pure {
        return Err(Error::domain("the higher Dirac check needs a pure complex"));
    }
    if dim < 0 {
        return Err(Error::domain("the higher Dirac check needs a nonempty facet"));
    }
    let l = dim as usize;
    let g = one_skeleton_graph(complex);
    let sigma = clique_complex(&g, limits)?;
    let is_skeleton = sigma.skeleton(l)? == *complex;
    let side_a = is_skeleton && leaf_order(&sigma)?.is_some();
    Ok(HigherDiracReport {
        dimension: l,
        skeleton_of_quasi_tree: side_a,
        chordal: is_chordal(&g).is_chordal(),
        skeleton_of_clique_complex: is_skeleton,
    })
}

/// Parses the graph6 format (graphs with at most 62 vertices).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().strip_prefix(">>graph6<<").unwrap_or(text.trim()).as_bytes();
    let bad = |msg: &str| Error::domain(format!("graph6: {msg}"));
    let (&first, rest) = bytes.split_first().ok_or_else(|| bad("empty input"))?;
    if !(63..=125).contains(&first) {
        return Err(bad("vertex counts above 62 are not supported"));
    }
    let n = (first - 63) as usize;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != needed {
        return Err(bad(&format!("expected {needed} data bytes for {n} vertices, found {}", rest.len())));
    }
    let mut bits = Vec::with_capacity(needed * 6);
    for &b in rest {
        if !(63..=126).contains(&b) {
            return Err(bad(&format!("byte {b} out of range")));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|k| v >> k & 1 == 1));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    if g.n > 62 {
        return Err(Error::domain("graph6 output supports at most 62 vertices"));
    }
    let mut bits = Vec::new();
    for j in 1..g.n {
        for i in 0..j {
            bits.push(g.adj[i] >> j & 1 == 1);
        }
    }
    let mut out = String::new();
    out.push((g.n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().enumerate().fold(0u8, |acc, (k, &b)| acc | (b as u8) << (5 - k));
        out.push((v + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn c4() -> Graph {
        graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)])
    }

    #[test]
    fn chordality_examples() {
        assert_eq!(is_chordal(&c4()), Chordality::NotChordal { cycle: vec![1, 2, 3, 4] });
        let k4 = Graph::complete(4).unwrap();
        let Chordality::Chordal { order } = is_chordal(&k4) else { panic!() };
        assert!(verify_elimination_order(&k4, &order));
        let chorded = graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]);
        let Chordality::Chordal { order } = is_chordal(&chorded) else { panic!() };
        assert!(verify_elimination_order(&chorded, &order));
        assert!(!verify_elimination_order(&c4(), &[1, 2, 3, 4]));
    }

    #[test]
    fn long_chordless_cycle_with_pendant() {
        let g = graph(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (6, 7), (1, 7)]);
        let Chordality::NotChordal { cycle } = is_chordal(&g) else { panic!() };
        assert!(verify_chordless_cycle(&g, &cycle));
        assert_eq!(cycle.len(), 6);
        assert!(!verify_chordless_cycle(&g, &[1, 2, 3]));
    }

    #[test]
    fn complements_and_edge_ideals() {
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::empty(4).unwrap());
        assert_eq!(c4().complement().edges(), vec![(1, 3), (2, 4)]);
        let dq = SimplicialComplex::from_lists(6, &[[1, 2, 3], [2, 3, 4], [3, 4, 5], [3, 4, 6]]).unwrap();
        let g = one_skeleton_graph(&dq);
        assert_eq!(g.num_edges(), 9);
        assert_eq!(g.complement().edges(), vec![(1, 4), (1, 5), (1, 6), (2, 5), (2, 6), (5, 6)]);
        assert_eq!(
            edge_ideal(&g.complement()),
            crate::ideals::stanley_reisner_ideal(&dq).unwrap()
        );
        assert_eq!(edge_ideal(&graph(3, &[(1, 2), (2, 3)])).to_string(), "(x1*x2, x2*x3)");
        assert!(edge_ideal(&Graph::empty(3).unwrap()).is_zero());
    }

    #[test]
    fn clique_complexes() {
        let lim = Limits::default();
        let fig = graph(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(clique_complex(&fig, &lim).unwrap(), SimplicialComplex::from_lists(5, &[vec![1, 2, 3], vec![3, 4], vec![4, 5]]).unwrap());
        assert_eq!(clique_complex(&Graph::complete(4).unwrap(), &lim).unwrap(), SimplicialComplex::simplex(4).unwrap());
        assert_eq!(clique_complex(&c4(), &lim).unwrap().facet_count(), 4);
        assert!(clique_complex(&Graph::empty(25).unwrap(), &lim).unwrap_err().is_resource());
        let points = clique_complex(&Graph::empty(2).unwrap(), &lim).unwrap();
        assert_eq!(points, SimplicialComplex::from_lists(2, &[[1], [2]]).unwrap());
        assert_eq!(one_skeleton_graph(&points), Graph::empty(2).unwrap());
        assert_eq!(one_skeleton_graph(&SimplicialComplex::simplex(4).unwrap()), Graph::complete(4).unwrap());
    }

    #[test]
    fn higher_dirac_examples() {
        let lim = Limits::default();
        let dq = SimplicialComplex::from_lists(6, &[[1, 2, 3], [2, 3, 4], [3, 4, 5], [3, 4, 6]]).unwrap();
        let r = higher_dirac_check(&dq.skeleton(1).unwrap(), &lim).unwrap();
        assert!(r.holds() && r.skeleton_of_quasi_tree && r.chordal);
        let r = higher_dirac_check(&dq, &lim).unwrap();
        assert!(r.holds() && r.skeleton_of_quasi_tree);
        let dn = SimplicialComplex::from_lists(6, &[[1, 2, 3], [3, 4, 5], [2, 4, 6]]).unwrap();
        let r = higher_dirac_check(&dn, &lim).unwrap();
        assert!(r.holds() && !r.skeleton_of_quasi_tree && !(r.chordal && r.skeleton_of_clique_complex));
        let c4c = SimplicialComplex::from_lists(4, &[[1, 2], [2, 3], [3, 4], [1, 4]]).unwrap();
        let r = higher_dirac_check(&c4c, &lim).unwrap();
        assert!(r.holds() && !r.skeleton_of_quasi_tree && !r.chordal);
        assert!(higher_dirac_check(&SimplicialComplex::from_lists(3, &[vec![1, 2], vec![3]]).unwrap(), &lim).is_err());
    }

    #[test]
    fn dirac_on_small_graphs() {
        let lim = Limits::default();
        assert!(dirac_check(&c4(), &lim).unwrap().agrees());
        assert!(dirac_check(&Graph::complete(5).unwrap(), &lim).unwrap().agrees());
    }

    #[test]
    fn graph6_round_trip() {
        // 'h' carries the bits 101001 of the upper triangle x12 x13 x23 x14 x24 x34.
        let g = parse_graph6("Ch").unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(to_graph6(&g).unwrap(), "Ch");
        assert_eq!(parse_graph6(&to_graph6(&c4()).unwrap()).unwrap(), c4());
        assert!(parse_graph6("C").is_err());
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn malformed_graphs() {
        assert!(Graph::new(3, &[(1, 1)]).is_err());
        assert!(Graph::new(3, &[(1, 4)]).is_err());
        assert!(Graph::new(3, &[(1, 2), (2, 1)]).is_err());
    }
}
