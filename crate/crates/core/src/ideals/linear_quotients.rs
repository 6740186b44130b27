use std::collections::HashSet;

use super::{minimal_generators, Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Checks an ordering directly: every colon ideal `(f_1..f_{i-1}) : f_i`,
/// generated by the `f_k / gcd(f_k, f_i)`, must be minimally generated by
/// variables.
pub fn has_linear_quotients(order: &[Monomial]) -> bool {
    (1..order.len()).all(|i| {
        let colon: Vec<Monomial> = order[..i].iter().map(|f| f.colon(&order[i])).collect();
        minimal_generators(colon).iter().all(|g| g.degree() == 1)
    })
}

/// Precomputed colon data: `var[k][i]` is the variable bit when
/// `f_k / gcd(f_k, f_i)` is a single variable, `support[j][i]` is the
/// support of `f_j / gcd(f_j, f_i)`.
struct ColonTable {
    var: Vec<Vec<u64>>,
    support: Vec<Vec<u64>>,
}

impl ColonTable {
    fn new(gens: &[Monomial]) -> Self {
        let t = gens.len();
        let mut var = vec![vec![0u64; t]; t];
        let mut support = vec![vec![0u64; t]; t];
        for k in 0..t {
            for i in 0..t {
                if k == i {
                    continue;
                }
                let q = gens[k].colon(&gens[i]);
                support[k][i] = q.support_mask();
                if q.degree() == 1 {
                    var[k][i] = support[k][i];
                }
            }
        }
        ColonTable { var, support }
    }

    /// Whether appending `i` after the generators in `prefix` keeps the colon linear.
    fn extends(&self, prefix: &[usize], i: usize) -> bool {
        let vars = prefix.iter().fold(0u64, |acc, &k| acc | self.var[k][i]);
        prefix.iter().all(|&j| self.support[j][i] & vars != 0)
    }

    fn linear_count(&self, prefix: &[usize], i: usize) -> usize {
        prefix.iter().filter(|&&k| self.var[k][i] != 0).count()
    }
}

struct Search {
    table: ColonTable,
    t: usize,
    dead: HashSet<Vec<u64>>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search {
    fn key(&self, used: &[bool]) -> Vec<u64> {
        let mut words = vec![0u64; self.t.div_ceil(64)];
        for (i, &u) in used.iter().enumerate() {
            if u {
                words[i / 64] |= 1u64 << (i % 64);
            }
        }
        words
    }

    fn dfs(&mut self, prefix: &mut Vec<usize>, used: &mut Vec<bool>) -> Result<bool> {
        if prefix.len() == self.t {
            return Ok(true);
        }
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return Err(Error::resource(format!(
                    "linear-quotients search exceeded {b} nodes on {} generators",
                    self.t
                )));
            }
        }
        let key = self.key(used);
        if self.dead.contains(&key) {
            return Ok(false);
        }
        let mut candidates: Vec<(usize, usize)> = (0..self.t)
            .filter(|&i| !used[i] && self.table.extends(prefix, i))
            .map(|i| (self.table.linear_count(prefix, i), i))
            .collect();
        // Most linear colon generators first; index breaks ties.
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, i) in candidates {
            prefix.push(i);
            used[i] = true;
            if self.dfs(prefix, used)? {
                return Ok(true);
            }
            prefix.pop();
            used[i] = false;
        }
        self.dead.insert(key);
        Ok(false)
    }
}

/// Searches for an ordering of `G(I)` with linear quotients.
///
/// Backtracking over prefixes; whether a generator may come next depends
/// only on the set of earlier generators, so failed sets are memoized and
/// the search is complete. Above `limits.lq_exhaustive` generators the
/// search is capped at `limits.search_budget` nodes and reports a resource
/// error when the cap is hit.
pub fn linear_quotients_order(ideal: &MonomialIdeal, limits: &Limits) -> Result<Option<Vec<Monomial>>> {
    let gens = ideal.generators();
    if gens.is_empty() {
        return Err(Error::domain("linear quotients of the zero ideal"));
    }
    if ideal.num_vars() > 64 {
        return Err(Error::domain("linear-quotients search supports at most 64 variables"));
    }
    let t = gens.len();
    let mut search = Search {
        table: ColonTable::new(gens),
        t,
        dead: HashSet::new(),
        nodes: 0,
        budget: (t > limits.lq_exhaustive).then_some(limits.search_budget),
    };
    let mut prefix = Vec::with_capacity(t);
    let mut used = vec![false; t];
    if search.dfs(&mut prefix, &mut used)? {
        let order: Vec<Monomial> = prefix.iter().map(|&i| gens[i].clone()).collect();
        debug_assert!(has_linear_quotients(&order));
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::SimplicialComplex;
    use crate::ideals::facet_ideal;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        let ms = gens.iter().map(|g| Monomial::parse(n, g).unwrap()).collect();
        MonomialIdeal::generated_by(n, ms).unwrap()
    }

    #[test]
    fn two_generator_examples() {
        let lim = Limits::default();
        let order = linear_quotients_order(&ideal(3, &["x1*x2", "x2*x3"]), &lim).unwrap().unwrap();
        assert_eq!(order.len(), 2);
        assert!(has_linear_quotients(&order));
        assert_eq!(linear_quotients_order(&ideal(4, &["x1*x2", "x3*x4"]), &lim).unwrap(), None);
    }

    #[test]
    fn non_quasi_tree_pure_complement_has_linear_quotients() {
        let dn = SimplicialComplex::from_lists(6, &[[1, 2, 3], [3, 4, 5], [2, 4, 6]]).unwrap();
        let i = facet_ideal(&dn.pure_complement().unwrap()).unwrap();
        assert_eq!(i.len(), 17);
        let order = linear_quotients_order(&i, &Limits::default()).unwrap().unwrap();
        assert!(has_linear_quotients(&order));
    }

    #[test]
    fn colon_uses_quotient_not_generator() {
        // (x2^2) : x1*x2 = (x2) is linear, (x1^2) : x2^2 = (x1^2) is not.
        assert!(has_linear_quotients(&[Monomial::parse(2, "x2^2").unwrap(), Monomial::parse(2, "x1*x2").unwrap()]));
        assert!(!has_linear_quotients(&[Monomial::parse(2, "x1^2").unwrap(), Monomial::parse(2, "x2^2").unwrap()]));
        let i = ideal(2, &["x1^2", "x2^2", "x1*x2"]);
        let order = linear_quotients_order(&i, &Limits::default()).unwrap().unwrap();
        assert!(has_linear_quotients(&order));
    }

    #[test]
    fn zero_ideal_is_rejected() {
        assert!(linear_quotients_order(&MonomialIdeal::zero(3), &Limits::default()).is_err());
    }
}
