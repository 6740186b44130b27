use std::collections::{BTreeMap, HashSet};

use super::homology::reduced_homology_of_faces;
use super::FieldChoice;
use crate::complexes::maximal_masks;
use crate::error::{Error, Result};
use crate::ideals::{Monomial, MonomialIdeal};
use crate::limits::Limits;
use crate::vertex::submasks;

/// Multigraded Betti numbers `β_{i,b}(I)` of a monomial ideal.
///
/// Homological degree `0` counts minimal generators. Only nonzero ranks are
/// stored. Projective dimension and regularity refer to the ideal `I`; for
/// the quotient `S/I` add one to the projective dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    num_vars: usize,
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiEntry {
    pub i: usize,
    pub multidegree: Vec<u32>,
    pub rank: usize,
}

/// `(projdim I, reg I, linear resolution?)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolutionSummary {
    pub projdim: usize,
    pub reg: i64,
    pub linear_resolution: bool,
}

impl BettiTable {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries.iter().map(|((i, b), &rank)| BettiEntry { i: *i, multidegree: b.clone(), rank })
    }

    pub fn get(&self, i: usize, multidegree: &[u32]) -> usize {
        self.entries.get(&(i, multidegree.to_vec())).copied().unwrap_or(0)
    }

    /// `β_i = Σ_b β_{i,b}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((j, _), _)| *j == i).map(|(_, r)| r).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn projdim(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    pub fn reg(&self) -> Option<i64> {
        self.entries.keys().map(|(i, b)| b.iter().map(|&e| e as i64).sum::<i64>() - *i as i64).max()
    }

    /// Every entry sits in total degree `d + i` for the common generator degree `d`.
    pub fn is_linear(&self) -> bool {
        let degrees: HashSet<u32> =
            self.entries.keys().filter(|(i, _)| *i == 0).map(|(_, b)| b.iter().sum()).collect();
        if degrees.len() != 1 {
            return false;
        }
        let d = *degrees.iter().next().unwrap() as usize;
        self.entries.keys().all(|(i, b)| b.iter().sum::<u32>() as usize == d + i)
    }

    pub fn summary(&self) -> Option<ResolutionSummary> {
        Some(ResolutionSummary { projdim: self.projdim()?, reg: self.reg()?, linear_resolution: self.is_linear() })
    }
}

/// All lcms of non-empty subsets of `gens`, by closure under pairwise lcm.
pub fn lcm_lattice(gens: &[Monomial], cap: usize) -> Result<Vec<Monomial>> {
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let l = a.lcm(g);
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::resource(format!("lcm lattice exceeds {cap} elements")));
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The multigraded Betti table of `I`.
///
/// `β_{i,b}(I)` is the rank of `H̃_{i-1}` of the upper Koszul simplicial
/// complex `K^b(I) = {F ⊆ supp b : x^{b-F} ∈ I}`, and only multidegrees in
/// the lcm lattice can carry nonzero entries. `K^b(I)` is generated by the
/// sets `supp(b) \ {v : g_v = b_v}` for the generators `g` dividing `x^b`.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldChoice, limits: &Limits) -> Result<BettiTable> {
    let n = ideal.num_vars();
    if n > limits.max_vars {
        return Err(Error::resource(format!("{n} variables exceed the cap of {}", limits.max_vars)));
    }
    let gens = ideal.generators();
    if gens.len() > limits.max_generators {
        return Err(Error::resource(format!(
            "{} generators exceed the cap of {}",
            gens.len(),
            limits.max_generators
        )));
    }
    let mut entries = BTreeMap::new();
    for b in lcm_lattice(gens, limits.max_lattice)? {
        let support = b.support_mask();
        let mut generating = Vec::new();
        for g in gens.iter().filter(|g| g.divides(&b)) {
            let tight = g
                .exponents()
                .iter()
                .zip(b.exponents())
                .enumerate()
                .filter(|(_, (ge, be))| ge == be && **be > 0)
                .fold(0u64, |acc, (v, _)| acc | (1u64 << v));
            generating.push(support & !tight);
        }
        let layers = faces_generated_by(&maximal_masks(generating));
        let profile = reduced_homology_of_faces(&layers, field, limits)?;
        for (i, &rank) in profile.ranks.iter().enumerate() {
            if rank > 0 {
                entries.insert((i, b.exponents().to_vec()), rank);
            }
        }
    }
    Ok(BettiTable { num_vars: n, entries })
}

/// All faces of the complex with the given facets, grouped by size.
fn faces_generated_by(facets: &[u64]) -> Vec<Vec<u64>> {
    let Some(top) = facets.iter().map(|f| f.count_ones() as usize).max() else {
        return Vec::new();
    };
    let mut seen = HashSet::new();
    for &f in facets {
        seen.extend(submasks(f));
    }
    let mut layers = vec![Vec::new(); top + 1];
    for s in seen {
        layers[s.count_ones() as usize].push(s);
    }
    for l in &mut layers {
        l.sort_unstable();
    }
    layers
}

/// Projective dimension, regularity and linearity of the resolution of `I`.
pub fn projdim_and_reg(ideal: &MonomialIdeal, field: FieldChoice, limits: &Limits) -> Result<ResolutionSummary> {
    if ideal.is_zero() {
        return Err(Error::domain("the zero ideal has no resolution invariants"));
    }
    let table = betti_table(ideal, field, limits)?;
    let mut summary = table.summary().expect("a nonzero ideal has generators");
    if ideal.generated_in_degree().is_none() {
        summary.linear_resolution = false;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        let ms = gens.iter().map(|g| Monomial::parse(n, g).unwrap()).collect();
        MonomialIdeal::generated_by(n, ms).unwrap()
    }

    fn q() -> FieldChoice {
        FieldChoice::Rationals
    }

    #[test]
    fn worked_example_has_projdim_one() {
        let i = ideal(6, &["x4*x5*x6", "x1*x5*x6", "x1*x2*x6", "x1*x2*x5"]);
        let t = betti_table(&i, q(), &Limits::default()).unwrap();
        assert_eq!(t.total(0), 4);
        assert_eq!(t.total(1), 3);
        assert_eq!(t.projdim(), Some(1));
        assert_eq!(
            projdim_and_reg(&i, q(), &Limits::default()).unwrap(),
            ResolutionSummary { projdim: 1, reg: 3, linear_resolution: true }
        );
    }

    #[test]
    fn principal_ideals() {
        let t = betti_table(&ideal(1, &["x1"]), q(), &Limits::default()).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![BettiEntry { i: 0, multidegree: vec![1], rank: 1 }]);
        assert_eq!(
            projdim_and_reg(&ideal(3, &["x1*x2*x3"]), q(), &Limits::default()).unwrap(),
            ResolutionSummary { projdim: 0, reg: 3, linear_resolution: true }
        );
    }

    #[test]
    fn three_generator_complement_ideal_has_projdim_two() {
        let i = ideal(6, &["x4*x5*x6", "x1*x2*x6", "x1*x3*x5"]);
        let s = projdim_and_reg(&i, q(), &Limits::default()).unwrap();
        assert_eq!(s.projdim, 2);
        // No subset has the same lcm as one of its proper subsets, so the Taylor resolution is minimal.
        let t = betti_table(&i, q(), &Limits::default()).unwrap();
        assert_eq!((t.total(0), t.total(1), t.total(2)), (3, 3, 1));
        assert_eq!(t.get(2, &[1; 6]), 1);
    }

    #[test]
    fn mixed_degrees_are_not_linear() {
        let s = projdim_and_reg(&ideal(2, &["x1", "x2^2"]), q(), &Limits::default()).unwrap();
        assert!(!s.linear_resolution);
        assert!(projdim_and_reg(&MonomialIdeal::zero(2), q(), &Limits::default()).is_err());
    }

    #[test]
    fn caps() {
        let gens: Vec<String> = (1..=13).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let i = ideal(13, &refs);
        assert!(betti_table(&i, q(), &Limits::default()).unwrap_err().is_resource());
        assert!(betti_table(&ideal(17, &["x17"]), q(), &Limits::default()).unwrap_err().is_resource());
    }

    #[test]
    fn lattice_of_two_generators() {
        let gens = ideal(3, &["x1*x2", "x2*x3"]).generators().to_vec();
        let l = lcm_lattice(&gens, 100).unwrap();
        assert_eq!(l.len(), 3);
    }
}
