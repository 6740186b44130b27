//! Leaves, branches, leaf orders and the relation-tree machinery for
//! ideals of projective dimension one.

mod matrix;
mod relations;

pub use matrix::{build_m_delta, taylor_matrix, MonomialMatrix, SignedMonomial};
pub use relations::{
    find_minor_certificate, reconstruct_generators, relation_trees, taylor_relations, verify_minor_certificate,
    RelationTree, TaylorRelation, DEFAULT_TREE_LIMIT,
};

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafReport {
    pub is_leaf: bool,
    /// Facet indices `G` with `H ∩ F ⊆ G ∩ F` for every other facet `H`.
    pub branches: Vec<usize>,
    /// Vertices of `F` lying in no other facet.
    pub free_vertices: VertexSet,
}

/// Leaf data for facet `f` of `complex`.
pub fn leaf_report(complex: &SimplicialComplex, f: usize) -> Result<LeafReport> {
    let t = complex.facet_count();
    if f >= t {
        return Err(Error::domain(format!("facet index {} out of range for {t} facets", f + 1)));
    }
    let masks: Vec<u64> = complex.facets().iter().map(|g| g.bits()).collect();
    let all = (0..t).collect::<Vec<_>>();
    let branches = branches_within(&masks, &all, f);
    let others = (0..t).filter(|&h| h != f).fold(0u64, |acc, h| acc | masks[h]);
    Ok(LeafReport {
        is_leaf: t == 1 || !branches.is_empty(),
        branches,
        free_vertices: VertexSet::from_bits_unchecked(complex.ambient(), masks[f] & !others),
    })
}

/// Branches of `members[..]`'s facet `f` inside the subcomplex on `members`.
pub(crate) fn branches_within(masks: &[u64], members: &[usize], f: usize) -> Vec<usize> {
    let fm = masks[f];
    members
        .iter()
        .copied()
        .filter(|&g| g != f)
        .filter(|&g| {
            let dom = masks[g] & fm;
            members.iter().all(|&h| h == f || masks[h] & fm & !dom == 0)
        })
        .collect()
}

fn is_leaf_within(masks: &[u64], members: &[usize], f: usize) -> bool {
    members.len() == 1 || !branches_within(masks, members, f).is_empty()
}

/// A leaf order as facet indices, or `None` if the complex is not a quasi-tree.
///
/// Leaves are peeled off from the end: removing a leaf from a quasi-tree
/// leaves a quasi-tree, so the greedy choice never causes a false negative.
/// The highest-index leaf is removed first, which makes orders start with
/// low indices.
pub fn leaf_order(complex: &SimplicialComplex) -> Result<Option<Vec<usize>>> {
    if complex.is_void() {
        return Err(Error::domain("complex has no facets"));
    }
    let masks: Vec<u64> = complex.facets().iter().map(|g| g.bits()).collect();
    let mut remaining: Vec<usize> = (0..masks.len()).collect();
    let mut removed = Vec::with_capacity(masks.len());
    while !remaining.is_empty() {
        let Some(pos) = (0..remaining.len()).rev().find(|&p| is_leaf_within(&masks, &remaining, remaining[p])) else {
            return Ok(None);
        };
        removed.push(remaining.remove(pos));
    }
    removed.reverse();
    Ok(Some(removed))
}

/// Checks that every `order[i]` is a leaf of the subcomplex generated by `order[..=i]`.
pub fn is_leaf_order(complex: &SimplicialComplex, order: &[usize]) -> bool {
    let t = complex.facet_count();
    let mut seen = vec![false; t];
    if order.len() != t || order.iter().any(|&i| i >= t || std::mem::replace(&mut seen[i], true)) {
        return false;
    }
    (0..t).all(|i| {
        let prefix = complex.sub_complex(&order[..=i]);
        let f = complex.facets()[order[i]];
        let idx = prefix.facets().iter().position(|g| *g == f).expect("facet survives in its prefix");
        leaf_report(&prefix, idx).map(|r| r.is_leaf).unwrap_or(false)
    })
}

pub fn is_quasi_tree(complex: &SimplicialComplex) -> Result<bool> {
    Ok(leaf_order(complex)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn delta_q() -> SimplicialComplex {
        SimplicialComplex::from_lists(6, &[[1, 2, 3], [2, 3, 4], [3, 4, 5], [3, 4, 6]]).unwrap()
    }

    pub(crate) fn delta_n() -> SimplicialComplex {
        SimplicialComplex::from_lists(6, &[[1, 2, 3], [3, 4, 5], [2, 4, 6]]).unwrap()
    }

    #[test]
    fn leaf_reports() {
        let r = leaf_report(&delta_q(), 0).unwrap();
        assert!(r.is_leaf);
        assert_eq!(r.branches, vec![1]);
        assert_eq!(r.free_vertices.members(), vec![1]);

        let r = leaf_report(&delta_n(), 0).unwrap();
        assert!(!r.is_leaf);
        assert!(r.branches.is_empty());

        let single = SimplicialComplex::from_lists(3, &[[1, 2]]).unwrap();
        let r = leaf_report(&single, 0).unwrap();
        assert!(r.is_leaf && r.branches.is_empty());
        assert!(leaf_report(&single, 1).is_err());
    }

    #[test]
    fn leaf_orders() {
        assert_eq!(leaf_order(&delta_q()).unwrap(), Some(vec![0, 1, 2, 3]));
        assert!(is_leaf_order(&delta_q(), &[0, 1, 2, 3]));
        assert_eq!(leaf_order(&delta_n()).unwrap(), None);
        let path = SimplicialComplex::from_lists(3, &[[1, 2], [2, 3]]).unwrap();
        assert!(is_leaf_order(&path, &[0, 1]) && is_leaf_order(&path, &[1, 0]));
        assert!(!is_leaf_order(&path, &[0, 0]));
    }

    #[test]
    fn prefix_matters() {
        // 12, 34, 23: starting with the two disjoint edges strands 23.
        let c = SimplicialComplex::from_lists(4, &[[1, 2], [2, 3], [3, 4]]).unwrap();
        assert!(leaf_order(&c).unwrap().is_some());
        let idx = |f: [usize; 2]| c.facets().iter().position(|g| g.members() == f).unwrap();
        assert!(!is_leaf_order(&c, &[idx([1, 2]), idx([3, 4]), idx([2, 3])]));
    }
}
