//! Simplicial complexes on a fixed vertex set `[n]`, stored by their facets.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex::{check_ambient, full_mask, k_subsets_of, submasks, VertexSet};

/// A simplicial complex on `[n]` given by its facets.
///
/// The ambient size is stored explicitly; vertices of `[n]` need not be
/// faces. This matters for Alexander duals such as `<{2}>` on `[3]`.
/// Facets form an antichain and are kept in canonical order (size, then
/// lexicographic), so derived `PartialEq` is equality of complexes.
///
/// A complex with no facets is the void complex; a complex whose only facet
/// is the empty set is `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ambient: usize,
    facets: Vec<VertexSet>,
}

/// Result of [`SimplicialComplex::alexander_dual`].
///
/// The full simplex has no nonfaces, so its dual has no faces at all, not
/// even the empty one. That case is reported as `Void` instead of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlexanderDual {
    Complex(SimplicialComplex),
    Void,
}

impl AlexanderDual {
    pub fn into_complex(self) -> Option<SimplicialComplex> {
        match self {
            AlexanderDual::Complex(c) => Some(c),
            AlexanderDual::Void => None,
        }
    }
}

/// Minimal nonfaces together with the flag verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalNonfaces {
    pub nonfaces: Vec<VertexSet>,
    pub is_flag: bool,
}

impl SimplicialComplex {
    /// Builds a complex, rejecting duplicate or nested facets.
    pub fn new(ambient: usize, facets: Vec<VertexSet>) -> Result<Self> {
        check_ambient(ambient)?;
        for f in &facets {
            if f.ambient() != ambient {
                return Err(Error::domain(format!(
                    "facet {f} has ambient size {} but the complex has {ambient}",
                    f.ambient()
                )));
            }
        }
        let mut facets = facets;
        facets.sort();
        for (a, f) in facets.iter().enumerate() {
            for g in &facets[a + 1..] {
                if f.is_subset(g) {
                    return Err(Error::ComparableFacets(f.members(), g.members()));
                }
            }
        }
        Ok(SimplicialComplex { ambient, facets })
    }

    /// Builds a complex from 1-based vertex lists.
    pub fn from_lists<L: AsRef<[usize]>>(ambient: usize, facets: &[L]) -> Result<Self> {
        let sets = facets
            .iter()
            .map(|f| VertexSet::new(ambient, f.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient, sets)
    }

    /// Builds the complex generated by `faces`, keeping only the maximal ones.
    pub fn generated_by(ambient: usize, faces: Vec<VertexSet>) -> Result<Self> {
        check_ambient(ambient)?;
        if let Some(f) = faces.iter().find(|f| f.ambient() != ambient) {
            return Err(Error::domain(format!("face {f} has ambient size {}", f.ambient())));
        }
        let masks: Vec<u64> = faces.iter().map(|f| f.bits()).collect();
        Ok(Self::from_masks(ambient, maximal_masks(masks)))
    }

    /// Trusted constructor from an antichain of masks.
    pub(crate) fn from_masks(ambient: usize, masks: Vec<u64>) -> Self {
        let mut facets: Vec<VertexSet> =
            masks.into_iter().map(|m| VertexSet::from_bits_unchecked(ambient, m)).collect();
        facets.sort();
        facets.dedup();
        SimplicialComplex { ambient, facets }
    }

    /// The complex with no faces at all.
    pub fn void(ambient: usize) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(SimplicialComplex { ambient, facets: Vec::new() })
    }

    /// The full simplex on `[n]`.
    pub fn simplex(ambient: usize) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(SimplicialComplex { ambient, facets: vec![VertexSet::full(ambient)] })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// True for the complex without facets.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == VertexSet::full(self.ambient)
    }

    /// The union of all facets.
    pub fn vertex_support(&self) -> VertexSet {
        let bits = self.facets.iter().fold(0u64, |acc, f| acc | f.bits());
        VertexSet::from_bits_unchecked(self.ambient, bits)
    }

    /// Facets as 1-based vertex lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.members()).collect()
    }

    /// `(dim, is_pure)`; the dimension of `{∅}` is `-1`.
    pub fn dimension_info(&self) -> Result<(isize, bool)> {
        let first = self.facets.first().ok_or_else(|| Error::domain("complex has no facets"))?;
        let max = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let pure = self.facets.iter().all(|f| f.len() == first.len());
        Ok((max as isize - 1, pure))
    }

    pub fn dim(&self) -> Result<isize> {
        self.dimension_info().map(|(d, _)| d)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Faces are exactly the subsets of facets.
    pub fn contains_face(&self, face: &VertexSet) -> Result<bool> {
        if face.ambient() != self.ambient {
            return Err(Error::domain(format!(
                "face {face} has ambient size {} but the complex has {}",
                face.ambient(),
                self.ambient
            )));
        }
        Ok(self.contains_mask(face.bits()))
    }

    pub(crate) fn contains_mask(&self, mask: u64) -> bool {
        self.facets.iter().any(|f| mask & !f.bits() == 0)
    }

    /// The complex whose facets are the `i`-dimensional faces.
    pub fn skeleton(&self, i: usize) -> Result<SimplicialComplex> {
        let dim = self.dim()?;
        if i as isize > dim {
            return Err(Error::domain(format!("skeleton dimension {i} exceeds dim = {dim}")));
        }
        let mut seen = HashSet::new();
        for f in &self.facets {
            for s in k_subsets_of(f.bits(), i + 1) {
                seen.insert(s);
            }
        }
        Ok(Self::from_masks(self.ambient, seen.into_iter().collect()))
    }

    /// The pure complement: all `d`-subsets of `[n]` that are not faces, for
    /// a pure complex of dimension `d - 1`. May be void.
    pub fn pure_complement(&self) -> Result<SimplicialComplex> {
        let (dim, pure) = self.dimension_info()?;
        if !pure {
            return Err(Error::domain("pure complement needs a pure complex"));
        }
        let d = (dim + 1) as usize;
        let masks = k_subsets_of(full_mask(self.ambient), d)
            .into_iter()
            .filter(|&s| !self.contains_mask(s))
            .collect();
        Ok(Self::from_masks(self.ambient, masks))
    }

    /// The Alexander dual `{[n] \ F : F not a face}`, given by the
    /// complements of the minimal nonfaces.
    pub fn alexander_dual(&self) -> AlexanderDual {
        let nonfaces = self.minimal_nonface_masks();
        if nonfaces.is_empty() {
            return AlexanderDual::Void;
        }
        let full = full_mask(self.ambient);
        AlexanderDual::Complex(Self::from_masks(
            self.ambient,
            nonfaces.into_iter().map(|m| !m & full).collect(),
        ))
    }

    /// The complex of facet complements.
    pub fn complement_complex(&self) -> Result<SimplicialComplex> {
        if self.facets.is_empty() {
            return Err(Error::domain("complex has no facets"));
        }
        if self.facets.iter().any(|f| f.len() == self.ambient) {
            return Err(Error::domain("a facet equals [n]; its complement is empty"));
        }
        Ok(Self::from_masks(self.ambient, self.facets.iter().map(|f| f.complement().bits()).collect()))
    }

    /// Inclusion-minimal nonfaces and whether all of them are edges.
    ///
    /// The simplex has no nonfaces and counts as flag.
    pub fn minimal_nonfaces(&self) -> MinimalNonfaces {
        let masks = self.minimal_nonface_masks();
        let is_flag = masks.iter().all(|m| m.count_ones() == 2);
        let mut nonfaces: Vec<VertexSet> =
            masks.into_iter().map(|m| VertexSet::from_bits_unchecked(self.ambient, m)).collect();
        nonfaces.sort();
        MinimalNonfaces { nonfaces, is_flag }
    }

    /// A set is a nonface iff it meets every facet complement, so the minimal
    /// nonfaces are the minimal transversals of the complements.
    pub(crate) fn minimal_nonface_masks(&self) -> Vec<u64> {
        let full = full_mask(self.ambient);
        let edges: Vec<u64> = self.facets.iter().map(|f| !f.bits() & full).collect();
        minimal_transversals(&edges)
    }

    /// The link `{G : G ∩ F = ∅, G ∪ F ∈ Δ}` of a face; `None` if `face` is not a face.
    pub fn link(&self, face: &VertexSet) -> Option<SimplicialComplex> {
        let f = face.bits();
        let masks: Vec<u64> =
            self.facets.iter().filter(|g| f & !g.bits() == 0).map(|g| g.bits() & !f).collect();
        if masks.is_empty() {
            return None;
        }
        Some(Self::from_masks(self.ambient, masks))
    }

    /// Subcomplex generated by the facets at `indices`.
    pub fn sub_complex(&self, indices: &[usize]) -> SimplicialComplex {
        Self::from_masks(self.ambient, indices.iter().map(|&i| self.facets[i].bits()).collect())
    }

    /// Every face as a mask, grouped by cardinality (index `k` holds the `k`-sets).
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            for s in submasks(f.bits()) {
                seen.insert(s);
            }
        }
        let top = self.facets.iter().map(|f| f.len()).max();
        let mut out = match top {
            Some(t) => vec![Vec::new(); t + 1],
            None => return Vec::new(),
        };
        for s in seen {
            out[s.count_ones() as usize].push(s);
        }
        for layer in &mut out {
            layer.sort_unstable();
        }
        out
    }

    /// Checks the antichain and canonical-order invariants.
    pub fn check_invariants(&self) -> Result<()> {
        check_ambient(self.ambient)?;
        for w in self.facets.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::domain(format!("facets out of canonical order: {} then {}", w[0], w[1])));
            }
        }
        for (a, f) in self.facets.iter().enumerate() {
            if f.ambient() != self.ambient || f.bits() & !full_mask(self.ambient) != 0 {
                return Err(Error::domain(format!("facet {f} leaves [n]")));
            }
            for g in &self.facets[a + 1..] {
                if f.is_subset(g) {
                    return Err(Error::ComparableFacets(f.members(), g.members()));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> on [{}]", self.ambient)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Keeps the inclusion-maximal masks, deduplicated.
pub(crate) fn maximal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    kept
}

/// Keeps the inclusion-minimal masks, deduplicated.
pub(crate) fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| m.count_ones());
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & !m == 0) {
            kept.push(m);
        }
    }
    kept
}

/// Minimal transversals (hitting sets) of a hypergraph, by Berge's
/// incremental algorithm. An empty edge admits no transversal; no edges
/// yields the single transversal `∅`.
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut edges = minimal_masks(edges.to_vec());
    edges.sort_unstable_by_key(|e| e.count_ones());
    let mut current = vec![0u64];
    for &e in &edges {
        if e == 0 {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            } else {
                let mut rest = e;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    next.push(t | bit);
                    rest &= rest - 1;
                }
            }
        }
        current = minimal_masks(next);
    }
    current
}
