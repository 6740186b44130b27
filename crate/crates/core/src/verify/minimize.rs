//! Greedy shrinking of failing instances: drop one facet, edge or
//! generator at a time while the failure persists.

use crate::complexes::SimplicialComplex;
use crate::graphs::Graph;
use crate::ideals::MonomialIdeal;

fn shrink_list<T: Clone>(items: Vec<T>, min_len: usize, fails: &dyn Fn(&[T]) -> bool) -> Vec<T> {
    let mut cur = items;
    let mut i = 0;
    while i < cur.len() && cur.len() > min_len {
        let mut next = cur.clone();
        next.remove(i);
        if fails(&next) {
            cur = next;
        } else {
            i += 1;
        }
    }
    cur
}

/// Removes facets while `fails` stays true. At least one facet is kept.
pub fn minimize_complex(c: &SimplicialComplex, fails: &dyn Fn(&SimplicialComplex) -> bool) -> SimplicialComplex {
    let n = c.ambient();
    let build = |masks: &[u64]| SimplicialComplex::from_masks(n, masks.to_vec());
    let masks: Vec<u64> = c.facets().iter().map(|f| f.bits()).collect();
    build(&shrink_list(masks, 1, &|m| fails(&build(m))))
}

/// Removes edges while `fails` stays true.
pub fn minimize_graph(g: &Graph, fails: &dyn Fn(&Graph) -> bool) -> Graph {
    let n = g.num_vertices();
    let build = |edges: &[(usize, usize)]| Graph::new(n, edges).expect("subset of a valid edge list");
    build(&shrink_list(g.edges(), 0, &|e| fails(&build(e))))
}

/// Removes generators while `fails` stays true. At least one generator is kept.
pub fn minimize_ideal(i: &MonomialIdeal, fails: &dyn Fn(&MonomialIdeal) -> bool) -> MonomialIdeal {
    let n = i.num_vars();
    let build = |gens: &[crate::ideals::Monomial]| {
        MonomialIdeal::generated_by(n, gens.to_vec()).expect("subset of minimal generators")
    };
    build(&shrink_list(i.generators().to_vec(), 1, &|g| fails(&build(g))))
}
