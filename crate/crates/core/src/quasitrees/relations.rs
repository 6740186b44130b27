use std::collections::{BTreeSet, HashMap, VecDeque};

use itertools::Itertools;

use super::matrix::{build_m_delta, MonomialMatrix, SignedMonomial};
use super::{branches_within, leaf_order};
use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideals::Monomial;

pub const DEFAULT_TREE_LIMIT: usize = 1000;

const MAX_PARTIAL_TREES: usize = 200_000;
const MAX_CERTIFICATE_FACETS: usize = 7;

/// The Taylor relation `u_ji e_i - u_ij e_j` between generators `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorRelation {
    pub i: usize,
    pub j: usize,
    pub u_ij: Monomial,
    pub u_ji: Monomial,
}

/// All `C(t,2)` Taylor relations of an ordered generator list.
pub fn taylor_relations(generators: &[Monomial]) -> Result<Vec<TaylorRelation>> {
    let t = generators.len();
    if t < 2 {
        return Err(Error::domain("Taylor relations need at least two generators"));
    }
    Ok((0..t)
        .tuple_combinations()
        .map(|(i, j)| TaylorRelation {
            i,
            j,
            u_ij: generators[i].colon(&generators[j]),
            u_ji: generators[j].colon(&generators[i]),
        })
        .collect())
}

/// A spanning tree on `t` generators whose edges are Taylor relations.
///
/// `labels[k]` holds `(u_ij, u_ji)` for `edges[k] = (i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTree {
    num_vars: usize,
    t: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<(Monomial, Monomial)>,
}

impl RelationTree {
    pub fn new(num_vars: usize, t: usize, edges: Vec<(usize, usize)>, labels: Vec<(Monomial, Monomial)>) -> Result<Self> {
        if edges.len() != labels.len() {
            return Err(Error::domain("every edge needs exactly one label"));
        }
        check_tree(t, &edges)?;
        for ((i, j), (a, b)) in edges.iter().zip(&labels) {
            if a.num_vars() != num_vars || b.num_vars() != num_vars {
                return Err(Error::VariableCount(num_vars, a.num_vars().max(b.num_vars())));
            }
            if !a.gcd(b).is_one() {
                return Err(Error::domain(format!("labels of edge {}-{} share a variable", i + 1, j + 1)));
            }
        }
        let mut pairs: Vec<_> = edges.into_iter().zip(labels).collect();
        pairs.sort_by_key(|a| a.0);
        let (edges, labels) = pairs.into_iter().unzip();
        Ok(RelationTree { num_vars, t, edges, labels })
    }

    /// Labels the edges from an ordered generator list.
    pub fn from_generators(generators: &[Monomial], edges: Vec<(usize, usize)>) -> Result<Self> {
        let t = generators.len();
        let n = generators.first().map_or(0, Monomial::num_vars);
        check_tree(t, &edges)?;
        let labels = edges.iter().map(|&(i, j)| (generators[i].colon(&generators[j]), generators[j].colon(&generators[i]))).collect();
        Self::new(n, t, edges, labels)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_generators(&self) -> usize {
        self.t
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[(Monomial, Monomial)] {
        &self.labels
    }

    /// `u_kj` for a tree edge between `k` and `j`.
    fn u(&self, k: usize, j: usize) -> &Monomial {
        let pos = self.edges.iter().position(|&e| e == (k.min(j), k.max(j))).expect("tree edge");
        if k < j {
            &self.labels[pos].0
        } else {
            &self.labels[pos].1
        }
    }

    /// The `(t-1) x t` relation matrix, one row `u_ji e_i - u_ij e_j` per edge.
    pub fn relation_matrix(&self) -> MonomialMatrix {
        let rows = self.edges.iter().zip(&self.labels).map(|(&e, (uij, uji))| (e, uji.clone(), uij.clone()));
        MonomialMatrix::from_pairs(self.num_vars, self.t, rows)
    }

    /// `det A_i` for every column `i`, where `A_i` drops column `i`.
    pub fn maximal_minors(&self) -> Result<Vec<Option<SignedMonomial>>> {
        let m = self.relation_matrix();
        (0..self.t).map(|i| m.minor_without_column(i)).collect()
    }
}

fn check_tree(t: usize, edges: &[(usize, usize)]) -> Result<()> {
    if t == 0 {
        return Err(Error::domain("a relation tree needs at least one generator"));
    }
    if edges.len() + 1 != t {
        return Err(Error::domain(format!("{} edges cannot span a tree on {t} vertices", edges.len())));
    }
    let mut parent: Vec<usize> = (0..t).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(i, j) in edges {
        if i >= j || j >= t {
            return Err(Error::domain(format!("invalid edge {}-{}", i + 1, j + 1)));
        }
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a == b {
            return Err(Error::domain(format!("edge {}-{} closes a cycle", i + 1, j + 1)));
        }
        parent[a] = b;
    }
    Ok(())
}

/// `u_i` as the product of `u_kj` over the edges of the tree oriented away
/// from `i`.
///
/// The result equals the original generators divided by their greatest
/// common divisor.
pub fn reconstruct_generators(tree: &RelationTree) -> Result<Vec<Monomial>> {
    check_tree(tree.t, &tree.edges)?;
    let mut adj = vec![Vec::new(); tree.t];
    for &(i, j) in &tree.edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut out = Vec::with_capacity(tree.t);
    for root in 0..tree.t {
        let mut u = Monomial::one(tree.num_vars);
        let mut seen = vec![false; tree.t];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(k) = queue.pop_front() {
            for &j in &adj[k] {
                if !seen[j] {
                    seen[j] = true;
                    u = u.mul(tree.u(k, j));
                    queue.push_back(j);
                }
            }
        }
        out.push(u);
    }
    Ok(out)
}

/// Checks that the rows of the complex's matrix indexed by the tree edges
/// have maximal minors `|det M(j)| = x_V / x_{F_j}`, where `V` is the set
/// of vertices covered by the facets.
pub fn verify_minor_certificate(complex: &SimplicialComplex, edges: &[(usize, usize)]) -> Result<bool> {
    let t = complex.facet_count();
    check_tree(t, edges)?;
    if t == 1 {
        return Ok(true);
    }
    let sharp = build_m_delta(complex)?.select_rows(edges)?;
    let n = complex.ambient();
    let v = complex.vertex_support().bits();
    for (j, f) in complex.facets().iter().enumerate() {
        let want = Monomial::from_mask(n, v & !f.bits());
        match sharp.minor_without_column(j)? {
            Some(d) if d.monomial == want => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Searches all spanning trees on the facets for one passing
/// [`verify_minor_certificate`].
pub fn find_minor_certificate(complex: &SimplicialComplex) -> Result<Option<Vec<(usize, usize)>>> {
    let t = complex.facet_count();
    if t == 0 {
        return Err(Error::domain("complex has no facets"));
    }
    if t > MAX_CERTIFICATE_FACETS {
        return Err(Error::resource(format!("spanning-tree search is limited to {MAX_CERTIFICATE_FACETS} facets")));
    }
    let pairs: Vec<(usize, usize)> = (0..t).tuple_combinations().collect();
    for edges in pairs.into_iter().combinations(t - 1) {
        if check_tree(t, &edges).is_ok() && verify_minor_certificate(complex, &edges)? {
            return Ok(Some(edges));
        }
    }
    Ok(None)
}

/// Every relation tree produced by repeatedly removing a leaf `F_i` and
/// joining it to one of its branches `F_j`, over all choices of leaf and
/// branch. Sorted by edge list and truncated to `limit`.
pub fn relation_trees(complex: &SimplicialComplex, limit: usize) -> Result<Vec<RelationTree>> {
    if leaf_order(complex)?.is_none() {
        return Err(Error::domain("relation trees exist only for quasi-trees"));
    }
    let t = complex.facet_count();
    if t > 64 {
        return Err(Error::resource("relation-tree enumeration supports at most 64 facets"));
    }
    let masks: Vec<u64> = complex.facets().iter().map(|g| g.bits()).collect();
    let full = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
    let mut memo = HashMap::new();
    let edge_sets = trees_of(&masks, full, &mut memo)?;
    let n = complex.ambient();
    edge_sets
        .into_iter()
        .take(limit)
        .map(|edges| {
            let labels = edges
                .iter()
                .map(|&(i, j)| (Monomial::from_mask(n, masks[j] & !masks[i]), Monomial::from_mask(n, masks[i] & !masks[j])))
                .collect();
            RelationTree::new(n, t, edges, labels)
        })
        .collect()
}

type EdgeSets = BTreeSet<Vec<(usize, usize)>>;

fn trees_of(masks: &[u64], members: u64, memo: &mut HashMap<u64, EdgeSets>) -> Result<EdgeSets> {
    if let Some(known) = memo.get(&members) {
        return Ok(known.clone());
    }
    let idx: Vec<usize> = (0..masks.len()).filter(|&i| members >> i & 1 == 1).collect();
    let mut out = EdgeSets::new();
    if idx.len() == 1 {
        out.insert(Vec::new());
    } else {
        for &leaf in &idx {
            let branches = branches_within(masks, &idx, leaf);
            if branches.is_empty() {
                continue;
            }
            let rest = trees_of(masks, members & !(1u64 << leaf), memo)?;
            for &b in &branches {
                let edge = (leaf.min(b), leaf.max(b));
                for tree in &rest {
                    let mut e = tree.clone();
                    let pos = e.binary_search(&edge).unwrap_or_else(|p| p);
                    e.insert(pos, edge);
                    out.insert(e);
                }
            }
            if out.len() > MAX_PARTIAL_TREES {
                return Err(Error::resource(format!("more than {MAX_PARTIAL_TREES} partial relation trees")));
            }
        }
    }
    memo.insert(members, out.clone());
    Ok(out)
}
