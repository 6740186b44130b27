//! Instance families for the verification suites: exhaustive complexes up
//! to isomorphism, small facet families, and seeded random generators.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::complexes::SimplicialComplex;
use crate::graphs::Graph;
use crate::ideals::{has_linear_quotients, Monomial, MonomialIdeal};
use crate::vertex::{full_mask, k_subsets_of};

/// Every complex on `[n]` with at least one face, one per isomorphism
/// class, for `n ≤ 6`.
///
/// A complex is a down-set of subsets of `[n]`, stored as a mask over the
/// `2^n` subsets. The representative of a class is the numerically largest
/// mask among relabellings whose vertex degrees are non-increasing.
pub fn complexes_up_to_isomorphism(n: usize) -> Vec<SimplicialComplex> {
    assert!((1..=6).contains(&n), "exhaustive enumeration supports 1 <= n <= 6");
    let tables = PermTables::new(n);
    let order: Vec<u64> = (0..1u64 << n).sorted_by_key(|s| (s.count_ones(), *s)).collect();
    let mut out = Vec::new();
    let mut visit = |d: u64| {
        if d != 0 && tables.is_canonical(d) {
            out.push(down_set_to_complex(n, d));
        }
    };
    down_sets(n, &order, 0, 0, &mut visit);
    out
}

fn down_sets(n: usize, order: &[u64], pos: usize, d: u64, visit: &mut impl FnMut(u64)) {
    if pos == order.len() {
        visit(d);
        return;
    }
    let s = order[pos];
    down_sets(n, order, pos + 1, d, visit);
    let closed = (0..n).filter(|v| s >> v & 1 == 1).all(|v| d >> (s & !(1 << v)) & 1 == 1);
    if closed {
        down_sets(n, order, pos + 1, d | 1 << s, visit);
    }
}

fn down_set_to_complex(n: usize, d: u64) -> SimplicialComplex {
    let facets = (0..1u64 << n)
        .filter(|&s| d >> s & 1 == 1)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || d >> (s | 1 << v) & 1 == 0))
        .collect();
    SimplicialComplex::from_masks(n, facets)
}

struct PermTables {
    n: usize,
    perms: Vec<Vec<usize>>,
    /// `bytes[p][k][b]`: image under permutation `p` of byte `k` of a face mask holding `b`.
    bytes: Vec<Vec<[u64; 256]>>,
    vertex_masks: Vec<u64>,
}

impl PermTables {
    fn new(n: usize) -> Self {
        let subsets = 1usize << n;
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let nbytes = subsets.div_ceil(8);
        let bytes = perms
            .iter()
            .map(|p| {
                let image = |s: usize| (0..n).filter(|v| s >> v & 1 == 1).fold(0usize, |acc, v| acc | 1 << p[v]);
                (0..nbytes)
                    .map(|k| {
                        let mut t = [0u64; 256];
                        for (b, slot) in t.iter_mut().enumerate() {
                            for bit in 0..8 {
                                let s = k * 8 + bit;
                                if b >> bit & 1 == 1 && s < subsets {
                                    *slot |= 1 << image(s);
                                }
                            }
                        }
                        t
                    })
                    .collect()
            })
            .collect();
        let vertex_masks =
            (0..n).map(|v| (0..subsets).filter(|s| s >> v & 1 == 1).fold(0u64, |acc, s| acc | 1 << s)).collect();
        PermTables { n, perms, bytes, vertex_masks }
    }

    fn apply(&self, p: usize, d: u64) -> u64 {
        self.bytes[p].iter().enumerate().fold(0u64, |acc, (k, t)| acc | t[(d >> (8 * k) & 0xff) as usize])
    }

    fn is_canonical(&self, d: u64) -> bool {
        let deg: Vec<u32> = self.vertex_masks.iter().map(|m| (d & m).count_ones()).collect();
        if deg.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        (0..self.perms.len())
            .filter(|&p| (0..self.n).all(|v| deg[self.perms[p][v]] == deg[v]))
            .all(|p| self.apply(p, d) <= d)
    }
}

/// Every complex on `[n]` with between `1` and `max_facets` facets, each
/// of size at most `max_size`, listed once.
pub fn small_facet_complexes(n: usize, max_facets: usize, max_size: usize) -> Vec<SimplicialComplex> {
    let candidates: Vec<u64> = (0..=max_size.min(n)).flat_map(|k| k_subsets_of(full_mask(n), k)).collect();
    let mut out = Vec::new();
    for m in 1..=max_facets {
        for combo in candidates.iter().copied().combinations(m) {
            let antichain = combo.iter().tuple_combinations().all(|(a, b)| a & !b != 0 && b & !a != 0);
            if antichain {
                out.push(SimplicialComplex::from_masks(n, combo));
            }
        }
    }
    out
}

/// All graphs on `[n]`, by edge subset.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    assert!(pairs.len() < 32, "exhaustive graph enumeration supports n <= 8");
    (0..1u64 << pairs.len()).map(move |bits| graph_from_bits(n, &pairs, bits))
}

fn graph_from_bits(n: usize, pairs: &[(usize, usize)], bits: u64) -> Graph {
    let mut adj = vec![0u64; n];
    for (k, &(a, b)) in pairs.iter().enumerate() {
        if bits >> k & 1 == 1 {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    Graph::from_adjacency(adj)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let bits = pairs.iter().enumerate().fold(0u64, |acc, (k, _)| if rng.gen_bool(p) { acc | 1 << k } else { acc });
    graph_from_bits(n, &pairs, bits)
}

/// A chordal graph built by repeatedly adding a vertex joined to a clique.
pub fn random_chordal_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut adj = vec![0u64; n];
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut clique = 1u64 << anchor;
        for u in 0..v {
            if adj[anchor] >> u & 1 == 1 && clique & !adj[u] & !(1 << u) == 0 && rng.gen_bool(0.5) {
                clique |= 1 << u;
            }
        }
        if rng.gen_bool(0.15) {
            clique = 0;
        }
        for u in 0..v {
            if clique >> u & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut out = vec![0u64; n];
    for a in 0..n {
        for b in 0..n {
            if adj[a] >> b & 1 == 1 {
                out[perm[a]] |= 1 << perm[b];
            }
        }
    }
    Graph::from_adjacency(out)
}

/// A random complex on `[n]` generated by up to `max_facets` random proper
/// subsets of `[n]`, so never the full simplex.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, max_facets: usize) -> SimplicialComplex {
    let m = rng.gen_range(1..=max_facets);
    let masks = (0..m).map(|_| rng.gen_range(0..full_mask(n))).collect();
    SimplicialComplex::from_masks(n, crate::complexes::maximal_masks(masks))
}

/// A random pure complex with `m` distinct facets of size `d`.
pub fn random_pure_complex<R: Rng>(rng: &mut R, n: usize, d: usize, m: usize) -> SimplicialComplex {
    let mut all = k_subsets_of(full_mask(n), d);
    all.shuffle(rng);
    all.truncate(m.max(1));
    SimplicialComplex::from_masks(n, all)
}

/// The clique complex of a random graph.
pub fn random_flag_complex<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimplicialComplex {
    let g = random_graph(rng, n, p);
    crate::graphs::clique_complex(&g, &crate::limits::Limits::default()).expect("n is within the clique cap")
}

/// A random quasi-tree on exactly `n` vertices: each new facet meets the
/// existing ones inside a proper subset of a single old facet. With
/// `pure = Some(d)` every facet has `d` vertices.
pub fn random_quasi_tree<R: Rng>(rng: &mut R, n: usize, pure: Option<usize>) -> SimplicialComplex {
    let n = n.max(1);
    let pure = pure.map(|d| d.clamp(1, n));
    let first = pure.unwrap_or_else(|| rng.gen_range(1..=n.min(4)));
    let mut facets: Vec<u64> = vec![full_mask(first)];
    let mut used = first;
    while used < n {
        let g = facets[rng.gen_range(0..facets.len())];
        let members: Vec<usize> = (0..64).filter(|v| g >> v & 1 == 1).collect();
        let (keep, fresh) = match pure {
            Some(d) => {
                let lo = d.saturating_sub(n - used);
                let keep = rng.gen_range(lo..d);
                (keep, d - keep)
            }
            None => {
                let keep = rng.gen_range(0..members.len());
                (keep, rng.gen_range(1..=(n - used).min(3)))
            }
        };
        let fresh = fresh.min(n - used);
        if fresh == 0 {
            break;
        }
        let mut shared = members.clone();
        shared.shuffle(rng);
        let mut f = shared[..keep].iter().fold(0u64, |acc, v| acc | 1 << v);
        for v in used..used + fresh {
            f |= 1 << v;
        }
        used += fresh;
        facets.push(f);
    }
    let mut perm: Vec<usize> = (0..used).collect();
    perm.shuffle(rng);
    let relabel = |m: u64| (0..used).filter(|v| m >> v & 1 == 1).fold(0u64, |acc, v| acc | 1 << perm[v]);
    SimplicialComplex::from_masks(used, crate::complexes::maximal_masks(facets.into_iter().map(relabel).collect()))
}

/// An ideal with linear quotients, grown one generator at a time: a random
/// degree-`d` monomial is kept only if the colon by it stays linear.
pub fn random_linear_quotient_ideal<R: Rng>(rng: &mut R, n: usize, d: u32, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let random_monomial = |rng: &mut R| {
        let mut e = vec![0u32; n];
        let mut left = d;
        while left > 0 {
            let v = rng.gen_range(0..n);
            if e[v] < max_exp {
                e[v] += 1;
                left -= 1;
            }
        }
        Monomial::new(e)
    };
    let mut order = vec![random_monomial(rng)];
    let target = rng.gen_range(1..=max_gens);
    for _ in 0..40 * max_gens {
        if order.len() >= target {
            break;
        }
        let cand = random_monomial(rng);
        if order.contains(&cand) {
            continue;
        }
        order.push(cand);
        if !has_linear_quotients(&order) {
            order.pop();
        }
    }
    MonomialIdeal::generated_by(n, order).expect("equigenerated nonunit monomials")
}

/// A random ideal generated in a single degree, not necessarily with a linear resolution.
pub fn random_equigenerated_ideal<R: Rng>(rng: &mut R, n: usize, d: u32, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let m = rng.gen_range(1..=max_gens);
    let gens = (0..m)
        .map(|_| {
            let mut e = vec![0u32; n];
            let mut left = d;
            while left > 0 {
                let v = rng.gen_range(0..n);
                if e[v] < max_exp {
                    e[v] += 1;
                    left -= 1;
                }
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::generated_by(n, gens).expect("equigenerated nonunit monomials")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasitrees::leaf_order;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn isomorphism_class_counts() {
        // Inequivalent monotone Boolean functions, minus the void complex.
        let counts: Vec<usize> = (1..=5).map(|n| complexes_up_to_isomorphism(n).len()).collect();
        assert_eq!(counts, vec![2, 4, 9, 29, 209]);
    }

    #[test]
    fn small_families() {
        // Antichains of 1 or 2 subsets of [2] of size <= 1: {}, {1}, {2}, {1},{2}.
        assert_eq!(small_facet_complexes(2, 2, 1).len(), 4);
        assert_eq!(all_graphs(4).count(), 64);
    }

    #[test]
    fn generators_produce_what_they_claim() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let q = random_quasi_tree(&mut rng, n, None);
            assert_eq!(q.ambient(), n);
            assert_eq!(q.vertex_support().len(), n);
            assert!(leaf_order(&q).unwrap().is_some(), "{q:?}");
            let d = rng.gen_range(1..=n.min(4));
            let p = random_quasi_tree(&mut rng, n.max(d), Some(d));
            assert!(p.is_pure() && leaf_order(&p).unwrap().is_some(), "{p:?}");
            let g = random_chordal_graph(&mut rng, 7);
            assert!(crate::graphs::is_chordal(&g).is_chordal());
            let i = random_linear_quotient_ideal(&mut rng, 5, 2, 6, 2);
            assert!(crate::ideals::linear_quotients_order(&i, &crate::limits::Limits::default()).unwrap().is_some());
        }
    }
}
