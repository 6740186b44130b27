//! Brute-force oracles, written directly from the definitions and sharing
//! no code with the library beyond its data types.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dirac_core::graphs::Graph;
use dirac_core::{Monomial, MonomialIdeal, SimplicialComplex};
use itertools::Itertools;
use rand::Rng;

pub fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_lists(n, facets).unwrap()
}

pub fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::generated_by(n, gens.iter().map(|g| Monomial::parse(n, g).unwrap()).collect()).unwrap()
}

pub fn masks(c: &SimplicialComplex) -> Vec<u64> {
    c.facets().iter().map(|f| f.bits()).collect()
}

pub fn sets_of(n: usize, masks: &[u64]) -> BTreeSet<Vec<usize>> {
    masks.iter().map(|m| (0..n).filter(|v| m >> v & 1 == 1).map(|v| v + 1).collect()).collect()
}

/// Every face, by scanning all subsets of `[n]`.
pub fn faces(c: &SimplicialComplex) -> Vec<u64> {
    let f = masks(c);
    (0..1u64 << c.ambient()).filter(|s| f.iter().any(|m| s & !m == 0)).collect()
}

fn maximal(sets: Vec<u64>) -> Vec<u64> {
    sets.iter().copied().filter(|&a| !sets.iter().any(|&b| b != a && a & !b == 0)).unique().collect()
}

fn minimal(sets: Vec<u64>) -> Vec<u64> {
    sets.iter().copied().filter(|&a| !sets.iter().any(|&b| b != a && b & !a == 0)).unique().collect()
}

pub fn minimal_nonfaces(c: &SimplicialComplex) -> BTreeSet<Vec<usize>> {
    let fs: BTreeSet<u64> = faces(c).into_iter().collect();
    let non: Vec<u64> = (0..1u64 << c.ambient()).filter(|s| !fs.contains(s)).collect();
    sets_of(c.ambient(), &minimal(non))
}

/// Facets of `{[n] \ F : F not a face}`; empty when every set is a face.
pub fn dual_facets(c: &SimplicialComplex) -> BTreeSet<Vec<usize>> {
    let n = c.ambient();
    let full = (1u64 << n) - 1;
    let fs: BTreeSet<u64> = faces(c).into_iter().collect();
    let dual: Vec<u64> = (0..=full).filter(|s| !fs.contains(s)).map(|s| !s & full).collect();
    sets_of(n, &maximal(dual))
}

pub fn is_flag(c: &SimplicialComplex) -> bool {
    minimal_nonfaces(c).iter().all(|s| s.len() == 2)
}

/// Linear quotients by exhaustive search over generator orders: for each
/// `i`, every `f_j / gcd(f_j, f_i)` with `j < i` is divisible by some
/// `f_k / gcd(f_k, f_i)` of degree one.
pub fn has_linear_quotient_order(gens: &[Monomial]) -> bool {
    fn quotient(a: &Monomial, b: &Monomial) -> Vec<u32> {
        a.exponents().iter().zip(b.exponents()).map(|(x, y)| x.saturating_sub(*y)).collect()
    }
    fn ok(order: &[&Monomial]) -> bool {
        let (last, prev) = order.split_last().unwrap();
        let colons: Vec<Vec<u32>> = prev.iter().map(|p| quotient(p, last)).collect();
        let vars: Vec<usize> = colons
            .iter()
            .filter(|q| q.iter().sum::<u32>() == 1)
            .map(|q| q.iter().position(|&e| e == 1).unwrap())
            .collect();
        colons.iter().all(|q| vars.iter().any(|&v| q[v] > 0))
    }
    fn rec<'a>(gens: &'a [Monomial], used: &mut Vec<bool>, order: &mut Vec<&'a Monomial>) -> bool {
        if order.len() == gens.len() {
            return true;
        }
        for i in 0..gens.len() {
            if !used[i] {
                order.push(&gens[i]);
                if (order.len() == 1 || ok(order)) && {
                    used[i] = true;
                    let r = rec(gens, used, order);
                    used[i] = false;
                    r
                } {
                    return true;
                }
                order.pop();
            }
        }
        false
    }
    assert!(gens.len() <= 8, "oracle limited to 8 generators");
    rec(gens, &mut vec![false; gens.len()], &mut Vec::new())
}

/// Shellability by exhaustive search, using "F_i meets the earlier facets
/// in a pure complex of codimension one".
pub fn is_shellable(c: &SimplicialComplex) -> bool {
    let f = masks(c);
    fn good(f: &[u64], order: &[usize]) -> bool {
        let (&last, prev) = order.split_last().unwrap();
        if prev.is_empty() {
            return true;
        }
        let size = f[last].count_ones();
        let meets = maximal(prev.iter().map(|&j| f[j] & f[last]).collect());
        meets.iter().all(|m| m.count_ones() + 1 == size)
    }
    fn rec(f: &[u64], order: &mut Vec<usize>) -> bool {
        if order.len() == f.len() {
            return true;
        }
        for i in 0..f.len() {
            if !order.contains(&i) {
                order.push(i);
                if good(f, order) && rec(f, order) {
                    return true;
                }
                order.pop();
            }
        }
        false
    }
    assert!(f.len() <= 9, "oracle limited to 9 facets");
    rec(&f, &mut Vec::new())
}

/// Quasi-tree by definition: the facets can be removed one leaf at a time.
/// `F` is a leaf if some other facet `G` contains every `H ∩ F`, `H ≠ F`.
pub fn is_quasi_tree(c: &SimplicialComplex) -> bool {
    fn is_leaf(f: &[u64], alive: &[usize], i: usize) -> bool {
        alive.len() == 1
            || alive
                .iter()
                .filter(|&&g| g != i)
                .any(|&g| alive.iter().filter(|&&h| h != i).all(|&h| (f[h] & f[i]) & !(f[g] & f[i]) == 0))
    }
    fn rec(f: &[u64], alive: Vec<usize>) -> bool {
        if alive.is_empty() {
            return true;
        }
        alive.iter().any(|&i| is_leaf(f, &alive, i) && rec(f, alive.iter().copied().filter(|&j| j != i).collect()))
    }
    let f = masks(c);
    rec(&f, (0..f.len()).collect())
}

/// Chordal iff no vertex subset of size at least four induces a cycle.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.num_vertices();
    (0..1u64 << n).filter(|s| s.count_ones() >= 4).all(|s| {
        let vs: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).map(|v| v + 1).collect();
        let degs: Vec<usize> = vs.iter().map(|&a| vs.iter().filter(|&&b| g.has_edge(a, b)).count()).collect();
        if degs.iter().any(|&d| d != 2) {
            return true;
        }
        // All degrees two: a cycle exactly when connected.
        let mut seen = vec![vs[0]];
        let mut stack = vec![vs[0]];
        while let Some(a) = stack.pop() {
            for &b in &vs {
                if g.has_edge(a, b) && !seen.contains(&b) {
                    seen.push(b);
                    stack.push(b);
                }
            }
        }
        seen.len() != vs.len()
    })
}

pub fn clique_complex_facets(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.num_vertices();
    let cliques: Vec<u64> = (1..1u64 << n)
        .filter(|s| (0..n).tuple_combinations().all(|(a, b)| s >> a & 1 == 0 || s >> b & 1 == 0 || g.has_edge(a + 1, b + 1)))
        .collect();
    sets_of(n, &maximal(cliques))
}

/// Exact rank over `Q` (fraction-free elimination) or over `GF(p)`.
pub fn rank(mut m: Vec<Vec<i128>>, p: Option<i128>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if let Some(p) = p {
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x = x.rem_euclid(p);
            }
        }
    }
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pivot);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = match p {
                    None => (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev,
                    Some(p) => (m[r][c] * m[i][j] - m[i][c] * m[r][j]).rem_euclid(p),
                };
            }
            m[i][c] = 0;
        }
        if p.is_none() {
            prev = m[r][c];
        }
        r += 1;
    }
    r
}

/// Multigraded Betti numbers of `I` from the Taylor complex: in multidegree
/// `b` the strand is spanned by the generator subsets with lcm `b`, and
/// `β_{i,b}(I)` is the homology in subset size `i + 1`.
pub fn taylor_betti(i: &MonomialIdeal, p: Option<i128>) -> BTreeMap<(usize, Vec<u32>), usize> {
    let gens = i.generators();
    let t = gens.len();
    assert!(t <= 10, "Taylor oracle limited to 10 generators");
    let mut by_lcm: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    for s in 1u32..1 << t {
        let l = (0..t)
            .filter(|k| s >> k & 1 == 1)
            .map(|k| gens[k].exponents().to_vec())
            .reduce(|a, b| a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect())
            .unwrap();
        by_lcm.entry(l).or_default().push(s);
    }
    let mut out = BTreeMap::new();
    for (b, subsets) in by_lcm {
        let layer = |k: u32| subsets.iter().copied().filter(|s| s.count_ones() == k).collect::<Vec<_>>();
        // d_k : C_k -> C_{k-1}, entries signed by position of the removed generator.
        let boundary_rank = |k: u32| -> usize {
            if k <= 1 {
                return 0;
            }
            let src = layer(k);
            let dst = layer(k - 1);
            if src.is_empty() || dst.is_empty() {
                return 0;
            }
            let m: Vec<Vec<i128>> = dst
                .iter()
                .map(|&d| {
                    src.iter()
                        .map(|&s| {
                            if d & !s != 0 || (s & !d).count_ones() != 1 {
                                return 0;
                            }
                            let removed = (s & !d).trailing_zeros();
                            let pos = (s & ((1 << removed) - 1)).count_ones();
                            if pos % 2 == 0 {
                                1
                            } else {
                                -1
                            }
                        })
                        .collect()
                })
                .collect();
            rank(m, p)
        };
        for k in 1..=t as u32 {
            let dim = layer(k).len();
            let h = dim as i64 - boundary_rank(k) as i64 - boundary_rank(k + 1) as i64;
            if h > 0 {
                out.insert(((k - 1) as usize, b.clone()), h as usize);
            }
        }
    }
    out
}

pub fn projdim(i: &MonomialIdeal) -> usize {
    taylor_betti(i, None).keys().map(|(k, _)| *k).max().unwrap()
}

/// Seeded monomial ideals: squarefree and not, with at most `max_gens` generators.
pub fn random_ideals<R: Rng>(rng: &mut R, count: usize, max_n: usize, max_gens: usize, max_exp: u32) -> Vec<MonomialIdeal> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(1..=max_gens);
            let gens = (0..m)
                .map(|_| loop {
                    let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
                    if e.iter().any(|&x| x > 0) {
                        break Monomial::new(e);
                    }
                })
                .collect();
            MonomialIdeal::generated_by(n, gens).unwrap()
        })
        .collect()
}

/// The fixed part of the ideal corpus: worked examples, edge ideals,
/// powers and a few non-squarefree ideals.
pub fn named_ideals() -> Vec<(&'static str, MonomialIdeal)> {
    vec![
        ("complement facets of the quasi-tree example", ideal(6, &["x4*x5*x6", "x1*x5*x6", "x1*x2*x6", "x1*x2*x5"])),
        ("maximal ideal", ideal(4, &["x1", "x2", "x3", "x4"])),
        ("four-cycle edge ideal", ideal(4, &["x1*x2", "x2*x3", "x3*x4", "x1*x4"])),
        ("five-cycle edge ideal", ideal(5, &["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"])),
        ("path edge ideal", ideal(5, &["x1*x2", "x2*x3", "x3*x4", "x4*x5"])),
        ("two disjoint edges", ideal(4, &["x1*x2", "x3*x4"])),
        ("triangulated square", ideal(4, &["x1*x3"])),
        ("square of the maximal ideal in two variables", ideal(2, &["x1^2", "x1*x2", "x2^2"])),
        ("mixed degrees", ideal(3, &["x1^2", "x1*x2*x3", "x2^3"])),
        ("non-squarefree path", ideal(3, &["x1^2*x2", "x2^2*x3", "x1*x3^2"])),
        ("six triangles", ideal(6, &["x1*x2*x3", "x1*x2*x4", "x1*x3*x5", "x1*x4*x6", "x1*x5*x6", "x2*x3*x6"])),
    ]
}

/// Checks a given generator order directly against the colon criterion.
pub fn is_linear_quotient_order(order: &[Monomial]) -> bool {
    (1..order.len()).all(|i| {
        let colons: Vec<Vec<u32>> = order[..i]
            .iter()
            .map(|p| p.exponents().iter().zip(order[i].exponents()).map(|(x, y)| x.saturating_sub(*y)).collect())
            .collect();
        colons.iter().all(|q| {
            colons.iter().any(|v| v.iter().sum::<u32>() == 1 && q.iter().zip(v).any(|(a, b)| *b == 1 && *a > 0))
        })
    })
}
