//! Subsets of the ambient vertex set `[n] = {1, ..., n}`, stored as bitmasks.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient size.
pub const MAX_AMBIENT: usize = 64;

/// A subset of `[n]` for a fixed ambient size `n <= 64`.
///
/// Vertex `v` is stored at bit `v - 1`. The ordering is the canonical facet
/// order: by cardinality first, then lexicographically on the sorted member
/// lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    ambient: usize,
    bits: u64,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_ambient(n: usize) -> Result<()> {
    if n == 0 || n > MAX_AMBIENT {
        return Err(Error::AmbientSize(n));
    }
    Ok(())
}

impl VertexSet {
    /// Builds a set from 1-based members, rejecting out-of-range and repeated vertices.
    pub fn new(ambient: usize, members: &[usize]) -> Result<Self> {
        check_ambient(ambient)?;
        let mut bits = 0u64;
        for &v in members {
            if v == 0 || v > ambient {
                return Err(Error::VertexOutOfRange { vertex: v, ambient });
            }
            let bit = 1u64 << (v - 1);
            if bits & bit != 0 {
                return Err(Error::DuplicateVertex(v));
            }
            bits |= bit;
        }
        Ok(VertexSet { ambient, bits })
    }

    /// Builds a set from a raw mask; bits above `ambient` are an error.
    pub fn from_bits(ambient: usize, bits: u64) -> Result<Self> {
        check_ambient(ambient)?;
        if bits & !full_mask(ambient) != 0 {
            let vertex = 64 - bits.leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, ambient });
        }
        Ok(VertexSet { ambient, bits })
    }

    pub(crate) fn from_bits_unchecked(ambient: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(ambient) == 0);
        VertexSet { ambient, bits }
    }

    pub fn empty(ambient: usize) -> Self {
        VertexSet { ambient, bits: 0 }
    }

    /// The whole vertex set `[n]`.
    pub fn full(ambient: usize) -> Self {
        VertexSet { ambient, bits: full_mask(ambient) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.ambient && self.bits & (1u64 << (v - 1)) != 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet { ambient: self.ambient, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet { ambient: self.ambient, bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet { ambient: self.ambient, bits: self.bits & !other.bits }
    }

    /// `[n] \ self`.
    pub fn complement(&self) -> VertexSet {
        VertexSet { ambient: self.ambient, bits: !self.bits & full_mask(self.ambient) }
    }

    /// Members in increasing order (1-based).
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v + 1)
        })
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| cmp_lex_bits(self.bits, other.bits))
            .then_with(|| self.ambient.cmp(&other.ambient))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic comparison of the sorted member lists of two sets of equal size.
///
/// The smaller list is the one holding the least element of the symmetric difference.
pub(crate) fn cmp_lex_bits(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff & diff.wrapping_neg();
    if a & low != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All submasks of `mask` with exactly `k` bits, in increasing numeric order.
pub(crate) fn k_subsets_of(mask: u64, k: usize) -> Vec<u64> {
    let positions: Vec<u32> = {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            out.push(rest.trailing_zeros());
            rest &= rest - 1;
        }
        out
    };
    let m = positions.len();
    if k > m {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    if k == m {
        return vec![mask];
    }
    let mut out = Vec::new();
    // Gosper's hack over the compressed index space, then spread back onto `mask`.
    let mut compressed: u64 = (1u64 << k) - 1;
    let limit: u128 = 1u128 << m;
    while (compressed as u128) < limit {
        let mut spread = 0u64;
        let mut c = compressed;
        while c != 0 {
            let i = c.trailing_zeros() as usize;
            spread |= 1u64 << positions[i];
            c &= c - 1;
        }
        out.push(spread);
        let low = compressed & compressed.wrapping_neg();
        let ripple = compressed.wrapping_add(low);
        if ripple == 0 {
            break;
        }
        compressed = (((ripple ^ compressed) >> 2) / low) | ripple;
    }
    out
}

/// All submasks of `mask`, including `0` and `mask` itself.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}
