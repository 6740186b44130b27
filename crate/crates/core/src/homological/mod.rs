//! Homological invariants: reduced homology, multigraded Betti numbers,
//! projective dimension, regularity, Cohen-Macaulayness and shellings.

mod betti;
mod cohen_macaulay;
mod homology;
pub mod linalg;
mod shelling;

use std::fmt;
use std::str::FromStr;

pub use betti::{betti_table, lcm_lattice, projdim_and_reg, BettiEntry, BettiTable, ResolutionSummary};
pub use cohen_macaulay::is_cohen_macaulay;
pub use homology::{reduced_homology, reduced_homology_of_faces, HomologyProfile};
pub use shelling::{is_shelling_order, shelling_order};

use crate::error::{Error, Result};

/// The coefficient field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldChoice {
    /// Characteristic zero, computed with exact integer elimination.
    #[default]
    Rationals,
    /// `GF(p)` for a prime `p`.
    Prime(u64),
}

impl FieldChoice {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        Ok(FieldChoice::Prime(p))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FromStr for FieldChoice {
    type Err = Error;

    /// Accepts `q`, `gf2`, `gf<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "q" {
            return Ok(FieldChoice::Rationals);
        }
        let p = s
            .strip_prefix("gf")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::domain(format!("unknown field {s:?}; expected q, gf2 or gf<p>")))?;
        if p > u32::MAX as u64 {
            return Err(Error::domain("prime too large"));
        }
        FieldChoice::prime(p)
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rationals => write!(f, "q"),
            FieldChoice::Prime(p) => write!(f, "gf{p}"),
        }
    }
}
