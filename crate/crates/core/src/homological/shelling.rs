use std::collections::HashSet;

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Pairwise check of a facet order: for all `j < i` there are
/// `x ∈ F_i \ F_j` and `k < i` with `F_i \ F_k = {x}`.
pub fn is_shelling_order(complex: &SimplicialComplex, order: &[usize]) -> bool {
    let f = complex.facets();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != f.len() || order.len() != f.len() || sorted.iter().any(|&i| i >= f.len()) {
        return false;
    }
    for i in 1..order.len() {
        let fi = f[order[i]].bits();
        let singles = order[..i]
            .iter()
            .map(|&k| fi & !f[k].bits())
            .filter(|d| d.count_ones() == 1)
            .fold(0u64, |acc, d| acc | d);
        if order[..i].iter().any(|&j| fi & !f[j].bits() & singles == 0) {
            return false;
        }
    }
    true
}

/// Finds a shelling order of a pure complex, as facet indices, or `None`.
///
/// Whether a facet may be appended depends only on the set of facets
/// already placed, so failed sets are memoized and the search is complete.
/// Candidates meeting the current union in the most vertices are tried
/// first.
pub fn shelling_order(complex: &SimplicialComplex, limits: &Limits) -> Result<Option<Vec<usize>>> {
    if complex.is_void() {
        return Err(Error::domain("complex has no facets"));
    }
    if !complex.is_pure() {
        return Err(Error::domain("shellability is defined for pure complexes"));
    }
    let t = complex.facet_count();
    if t > limits.max_facets || t > 128 {
        return Err(Error::resource(format!("{t} facets exceed the cap of {}", limits.max_facets)));
    }
    let facets: Vec<u64> = complex.facets().iter().map(|f| f.bits()).collect();
    let mut search = Search { facets: &facets, dead: HashSet::new(), nodes: 0, budget: limits.search_budget };
    let mut order = Vec::with_capacity(t);
    if search.dfs(&mut order, 0)? {
        debug_assert!(is_shelling_order(complex, &order));
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    facets: &'a [u64],
    dead: HashSet<u128>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn can_append(&self, order: &[usize], i: usize) -> bool {
        let fi = self.facets[i];
        let mut singles = 0u64;
        for &k in order {
            let d = fi & !self.facets[k];
            if d.count_ones() == 1 {
                singles |= d;
            }
        }
        order.iter().all(|&j| fi & !self.facets[j] & singles != 0)
    }

    fn dfs(&mut self, order: &mut Vec<usize>, used: u128) -> Result<bool> {
        let t = self.facets.len();
        if order.len() == t {
            return Ok(true);
        }
        if self.dead.contains(&used) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::resource(format!("shelling search exceeded {} nodes", self.budget)));
        }
        let union = order.iter().fold(0u64, |acc, &k| acc | self.facets[k]);
        let mut candidates: Vec<(u32, usize)> = (0..t)
            .filter(|&i| used & (1u128 << i) == 0 && self.can_append(order, i))
            .map(|i| ((self.facets[i] & union).count_ones(), i))
            .collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, i) in candidates {
            order.push(i);
            if self.dfs(order, used | (1u128 << i))? {
                return Ok(true);
            }
            order.pop();
        }
        self.dead.insert(used);
        Ok(false)
    }
}
