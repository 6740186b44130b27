//! Monomial ideals and the bridges between complexes and squarefree ideals.

mod linear_quotients;
mod monomial;

use std::collections::HashSet;
use std::fmt;

pub use linear_quotients::{has_linear_quotients, linear_quotients_order};
pub use monomial::Monomial;

use crate::complexes::{minimal_transversals, SimplicialComplex};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::vertex::{check_ambient, full_mask, k_subsets_of};

/// A monomial ideal given by its unique minimal generating set `G(I)`.
///
/// Generators are pairwise non-dividing and canonically sorted. An empty
/// generator list is the zero ideal; the unit ideal is never constructed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Monomial>,
}

/// How [`complex_from_ideal`] reads the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexMode {
    /// The complex whose Stanley-Reisner ideal is the input.
    StanleyReisner,
    /// The complex whose facets are the generator supports.
    Facet,
}

impl MonomialIdeal {
    /// The zero ideal of `K[x1..xn]`.
    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal { num_vars, generators: Vec::new() }
    }

    /// Minimal generators of the ideal generated by `monomials` (which may be empty).
    pub fn generated_by(num_vars: usize, monomials: Vec<Monomial>) -> Result<Self> {
        for m in &monomials {
            if m.num_vars() != num_vars {
                return Err(Error::VariableCount(num_vars, m.num_vars()));
            }
            if m.is_one() {
                return Err(Error::domain("the unit ideal is not supported"));
            }
        }
        Ok(MonomialIdeal { num_vars, generators: minimal_generators(monomials) })
    }

    pub(crate) fn from_minimal_unchecked(num_vars: usize, mut generators: Vec<Monomial>) -> Self {
        generators.sort();
        MonomialIdeal { num_vars, generators }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// The common degree of all generators, if there is one.
    pub fn generated_in_degree(&self) -> Option<u32> {
        let d = self.generators.first()?.degree();
        self.generators.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.generators.iter().map(Monomial::degree).min()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Drops every monomial divisible by another one and sorts the rest.
fn minimal_generators(mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    monomials.sort();
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monomials.len());
    for m in monomials {
        // Sorted by degree, so only earlier entries can divide `m`.
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

/// The minimal generating set of the ideal generated by a non-empty list.
pub fn minimalize(monomials: &[Monomial]) -> Result<MonomialIdeal> {
    let first = monomials.first().ok_or_else(|| Error::domain("no monomials given"))?;
    MonomialIdeal::generated_by(first.num_vars(), monomials.to_vec())
}

/// `I_Δ`, generated by the monomials of the minimal nonfaces.
///
/// The simplex gives the zero ideal. The void complex would give the unit
/// ideal and is rejected.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    if complex.is_void() {
        return Err(Error::domain("the void complex has the unit ideal as Stanley-Reisner ideal"));
    }
    let n = complex.ambient();
    let gens = complex.minimal_nonface_masks().into_iter().map(|m| Monomial::from_mask(n, m)).collect();
    Ok(MonomialIdeal::from_minimal_unchecked(n, gens))
}

/// `I(Δ)`, generated by the monomials of the facets.
pub fn facet_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    if complex.is_void() {
        return Err(Error::domain("facet ideal of a complex without facets"));
    }
    if complex.facets().iter().any(|f| f.is_empty()) {
        return Err(Error::domain("the empty facet gives the unit ideal"));
    }
    let gens = complex.facets().iter().map(Monomial::from_set).collect();
    Ok(MonomialIdeal::from_minimal_unchecked(complex.ambient(), gens))
}

/// Inverse of [`stanley_reisner_ideal`] or [`facet_ideal`], depending on `mode`.
pub fn complex_from_ideal(ideal: &MonomialIdeal, mode: ComplexMode) -> Result<SimplicialComplex> {
    let n = ideal.num_vars();
    check_ambient(n)?;
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::domain(format!("generator {g} is not squarefree")));
    }
    let supports: Vec<u64> = ideal.generators().iter().map(Monomial::support_mask).collect();
    match mode {
        // Faces are the sets containing no generator support; the maximal
        // ones are complements of minimal transversals of the supports.
        ComplexMode::StanleyReisner => {
            let full = full_mask(n);
            let facets = minimal_transversals(&supports).into_iter().map(|t| !t & full).collect();
            Ok(SimplicialComplex::from_masks(n, facets))
        }
        ComplexMode::Facet => Ok(SimplicialComplex::from_masks(n, supports)),
    }
}

/// Minimal generators of `I^k`.
pub fn power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::domain("the zeroth power is the unit ideal"));
    }
    let mut acc = ideal.clone();
    for _ in 1..k {
        let mut products = HashSet::new();
        for a in &acc.generators {
            for b in &ideal.generators {
                products.insert(a.mul(b));
            }
        }
        acc = MonomialIdeal { num_vars: ideal.num_vars, generators: minimal_generators(products.into_iter().collect()) };
    }
    Ok(acc)
}

/// `L_<j>`: the ideal generated by the degree-`j` part of `L`.
pub fn graded_component_ideal(ideal: &MonomialIdeal, j: u32, limits: &Limits) -> Result<MonomialIdeal> {
    let min = ideal.min_degree().ok_or_else(|| Error::domain("graded component of the zero ideal"))?;
    if j < min {
        return Err(Error::domain(format!("degree {j} is below the least generator degree {min}")));
    }
    if j > min + limits.degree_cap {
        return Err(Error::resource(format!("degree {j} exceeds least generator degree {min} + cap {}", limits.degree_cap)));
    }
    let n = ideal.num_vars();
    let mut out = HashSet::new();
    for g in &ideal.generators {
        let d = g.degree();
        if d > j {
            continue;
        }
        for m in monomials_of_degree(n, j - d) {
            out.insert(g.mul(&m));
        }
    }
    Ok(MonomialIdeal { num_vars: n, generators: minimal_generators(out.into_iter().collect()) })
}

/// Every monomial of degree `d` in `n` variables.
pub(crate) fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Monomial::new(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if n == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// `I^{<=a}`: the generators `x^b` of `I` with `b <= a`.
pub fn restrict_ideal(ideal: &MonomialIdeal, bound: &[u32]) -> Result<MonomialIdeal> {
    if bound.len() != ideal.num_vars() {
        return Err(Error::VariableCount(ideal.num_vars(), bound.len()));
    }
    let gens = ideal
        .generators
        .iter()
        .filter(|g| g.exponents().iter().zip(bound).all(|(e, a)| e <= a))
        .cloned()
        .collect();
    Ok(MonomialIdeal { num_vars: ideal.num_vars, generators: gens })
}

/// All squarefree monomials of degree `l + 1` in `n` variables that are
/// divisible by a generator of `one_skeleton_ideal` (squarefree, quadratic).
pub fn skeleton_ideal_from_one_skeleton(one_skeleton_ideal: &MonomialIdeal, l: usize, n: usize) -> Result<MonomialIdeal> {
    check_ambient(n)?;
    if one_skeleton_ideal.num_vars() != n {
        return Err(Error::VariableCount(n, one_skeleton_ideal.num_vars()));
    }
    if l + 1 < 2 || l + 1 > n {
        return Err(Error::domain(format!("need 2 <= l + 1 <= n, got l = {l}, n = {n}")));
    }
    if one_skeleton_ideal.generators().iter().any(|g| !g.is_squarefree() || g.degree() != 2) {
        return Err(Error::domain("expected a squarefree ideal generated in degree 2"));
    }
    let pairs: Vec<u64> = one_skeleton_ideal.generators().iter().map(Monomial::support_mask).collect();
    let gens = k_subsets_of(full_mask(n), l + 1)
        .into_iter()
        .filter(|&s| pairs.iter().any(|&p| p & !s == 0))
        .map(|s| Monomial::from_mask(n, s))
        .collect();
    Ok(MonomialIdeal::from_minimal_unchecked(n, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        let ms = gens.iter().map(|g| Monomial::parse(n, g).unwrap()).collect();
        MonomialIdeal::generated_by(n, ms).unwrap()
    }

    fn strs(i: &MonomialIdeal) -> Vec<String> {
        i.generators().iter().map(|g| g.to_string()).collect()
    }

    fn cx(n: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, f).unwrap()
    }

    fn delta_q() -> SimplicialComplex {
        cx(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[3, 4, 6]])
    }

    fn i_ex() -> MonomialIdeal {
        ideal(6, &["x4*x5*x6", "x1*x5*x6", "x1*x2*x6", "x1*x2*x5"])
    }

    #[test]
    fn minimalize_examples() {
        let p = |s: &str| Monomial::parse(3, s).unwrap();
        assert_eq!(strs(&minimalize(&[p("x1"), p("x1*x2")]).unwrap()), ["x1"]);
        assert_eq!(strs(&minimalize(&[p("x1*x2"), p("x2*x3"), p("x1*x2*x3")]).unwrap()), ["x1*x2", "x2*x3"]);
        assert_eq!(i_ex().len(), 4);
        assert!(minimalize(&[]).is_err());
        assert!(minimalize(&[p("x1"), Monomial::parse(4, "x1").unwrap()]).is_err());
        assert!(minimalize(&[p("1")]).is_err());
    }

    #[test]
    fn minimalize_is_idempotent() {
        let i = ideal(4, &["x1^2*x2", "x1*x2", "x3*x4", "x1*x2*x3", "x4^2*x3"]);
        let again = minimalize(i.generators()).unwrap();
        assert_eq!(i, again);
        assert_eq!(strs(&i), ["x1*x2", "x3*x4"]);
    }

    #[test]
    fn stanley_reisner_examples() {
        let boundary = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(stanley_reisner_ideal(&boundary).unwrap(), ideal(3, &["x1*x2*x3"]));
        assert_eq!(
            stanley_reisner_ideal(&delta_q()).unwrap(),
            ideal(6, &["x1*x4", "x1*x5", "x1*x6", "x2*x5", "x2*x6", "x5*x6"])
        );
        assert!(stanley_reisner_ideal(&cx(3, &[&[1, 2, 3]])).unwrap().is_zero());
        assert!(stanley_reisner_ideal(&SimplicialComplex::void(3).unwrap()).is_err());
    }

    #[test]
    fn facet_ideal_examples() {
        assert_eq!(facet_ideal(&cx(3, &[&[1, 2], &[2, 3]])).unwrap(), ideal(3, &["x1*x2", "x2*x3"]));
        assert_eq!(facet_ideal(&delta_q().complement_complex().unwrap()).unwrap(), i_ex());
        assert_eq!(facet_ideal(&cx(2, &[&[1]])).unwrap(), ideal(2, &["x1"]));
        assert!(facet_ideal(&SimplicialComplex::void(2).unwrap()).is_err());
    }

    #[test]
    fn complex_from_ideal_examples() {
        let boundary = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(complex_from_ideal(&ideal(3, &["x1*x2*x3"]), ComplexMode::StanleyReisner).unwrap(), boundary);
        assert_eq!(
            complex_from_ideal(&i_ex(), ComplexMode::Facet).unwrap(),
            cx(6, &[&[4, 5, 6], &[1, 5, 6], &[1, 2, 6], &[1, 2, 5]])
        );
        assert!(complex_from_ideal(&MonomialIdeal::zero(4), ComplexMode::StanleyReisner).unwrap().is_simplex());
        assert!(complex_from_ideal(&ideal(3, &["x1^2"]), ComplexMode::Facet).is_err());
    }

    #[test]
    fn power_examples() {
        assert_eq!(strs(&power(&ideal(1, &["x1"]), 3).unwrap()), ["x1^3"]);
        assert_eq!(
            strs(&power(&ideal(3, &["x1*x2", "x2*x3"]), 2).unwrap()),
            ["x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"]
        );
        let sq = power(&i_ex(), 2).unwrap();
        assert_eq!(sq.len(), 10);
        assert!(sq.generators().iter().all(|g| g.degree() == 6));
        assert!(power(&i_ex(), 0).is_err());
    }

    #[test]
    fn graded_component_examples() {
        let lim = Limits::default();
        assert_eq!(
            strs(&graded_component_ideal(&ideal(3, &["x1", "x2*x3"]), 2, &lim).unwrap()),
            ["x1^2", "x1*x2", "x1*x3", "x2*x3"]
        );
        assert_eq!(strs(&graded_component_ideal(&ideal(2, &["x1*x2"]), 2, &lim).unwrap()), ["x1*x2"]);
        assert_eq!(strs(&graded_component_ideal(&ideal(2, &["x1*x2"]), 3, &lim).unwrap()), ["x1^2*x2", "x1*x2^2"]);
        assert!(graded_component_ideal(&ideal(2, &["x1*x2"]), 1, &lim).is_err());
        assert!(graded_component_ideal(&ideal(2, &["x1*x2"]), 11, &lim).unwrap_err().is_resource());
    }

    #[test]
    fn restrict_examples() {
        let i = ideal(3, &["x1^2", "x1*x2", "x2*x3"]);
        assert_eq!(strs(&restrict_ideal(&i, &[1, 1, 1]).unwrap()), ["x1*x2", "x2*x3"]);
        let sq = power(&i_ex(), 2).unwrap();
        assert_eq!(restrict_ideal(&sq, &[2; 6]).unwrap(), sq);
        assert!(restrict_ideal(&ideal(1, &["x1^2"]), &[1]).unwrap().is_zero());
        assert!(restrict_ideal(&i, &[1, 1]).is_err());
    }

    #[test]
    fn skeleton_ideal_examples() {
        let q = delta_q();
        let i1 = facet_ideal(&q.skeleton(1).unwrap().pure_complement().unwrap()).unwrap();
        let i2 = skeleton_ideal_from_one_skeleton(&i1, 2, 6).unwrap();
        assert_eq!(i2, facet_ideal(&q.skeleton(2).unwrap().pure_complement().unwrap()).unwrap());
        assert_eq!(
            skeleton_ideal_from_one_skeleton(&ideal(3, &["x1*x2"]), 2, 3).unwrap(),
            ideal(3, &["x1*x2*x3"])
        );
        assert!(skeleton_ideal_from_one_skeleton(&MonomialIdeal::zero(4), 2, 4).unwrap().is_zero());
        assert!(skeleton_ideal_from_one_skeleton(&ideal(3, &["x1*x2"]), 3, 3).is_err());
    }

    #[test]
    fn monomials_of_degree_count() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
    }
}
