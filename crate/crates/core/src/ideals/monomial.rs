use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex::VertexSet;

/// A monomial `x^b` in `n` variables, stored as its exponent vector.
///
/// Ordered by total degree, then lexicographically with `x1 > x2 > ...`, so
/// among monomials of equal degree the one with the larger `x1` exponent
/// sorts first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: vec![0; num_vars] }
    }

    /// The variable `x_i` (1-based).
    pub fn var(num_vars: usize, i: usize) -> Result<Self> {
        if i == 0 || i > num_vars {
            return Err(Error::VertexOutOfRange { vertex: i, ambient: num_vars });
        }
        let mut exps = vec![0; num_vars];
        exps[i - 1] = 1;
        Ok(Monomial { exps })
    }

    /// `x_F`, the squarefree monomial of a vertex set.
    pub fn from_set(set: &VertexSet) -> Self {
        let mut exps = vec![0; set.ambient()];
        for v in set.iter() {
            exps[v - 1] = 1;
        }
        Monomial { exps }
    }

    pub(crate) fn from_mask(num_vars: usize, mask: u64) -> Self {
        let exps = (0..num_vars).map(|i| ((mask >> i) & 1) as u32).collect();
        Monomial { exps }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variables with positive exponent, as a bitmask (`n <= 64`).
    pub(crate) fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << i))
    }

    pub fn support(&self) -> Result<VertexSet> {
        VertexSet::from_bits(self.num_vars(), self.support_mask())
    }

    /// Componentwise `self <= other`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()?;
        Some(Monomial { exps })
    }

    /// `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)).collect() }
    }

    /// The single variable index (1-based) if this is a variable.
    pub fn as_variable(&self) -> Option<usize> {
        if self.degree() != 1 {
            return None;
        }
        self.exps.iter().position(|&e| e == 1).map(|i| i + 1)
    }

    /// Parses `x4*x5*x6`, `x1^2*x3` or `1`.
    pub fn parse(num_vars: usize, text: &str) -> Result<Monomial> {
        let mut exps = vec![0u32; num_vars];
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial { exps });
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::domain(format!("cannot parse monomial factor {factor:?}")))?;
            let (idx, pow) = match body.split_once('^') {
                Some((i, p)) => (i, p),
                None => (body, "1"),
            };
            let idx: usize =
                idx.trim().parse().map_err(|_| Error::domain(format!("bad variable index in {factor:?}")))?;
            let pow: u32 =
                pow.trim().parse().map_err(|_| Error::domain(format!("bad exponent in {factor:?}")))?;
            if idx == 0 || idx > num_vars {
                return Err(Error::VertexOutOfRange { vertex: idx, ambient: num_vars });
            }
            exps[idx - 1] += pow;
        }
        Ok(Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.exps.len().cmp(&other.exps.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let m = Monomial::parse(6, "x4*x5*x6").unwrap();
        assert_eq!(m.exponents(), &[0, 0, 0, 1, 1, 1]);
        assert_eq!(m.to_string(), "x4*x5*x6");
        let p = Monomial::parse(3, "x1^2 * x3").unwrap();
        assert_eq!(p.exponents(), &[2, 0, 1]);
        assert_eq!(p.to_string(), "x1^2*x3");
        assert!(Monomial::parse(3, "x4").is_err());
        assert!(Monomial::parse(3, "y1").is_err());
        assert!(Monomial::parse(3, "1").unwrap().is_one());
    }

    #[test]
    fn arithmetic() {
        let a = Monomial::new(vec![2, 1, 0]);
        let b = Monomial::new(vec![1, 0, 3]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 1, 3]);
        assert_eq!(a.gcd(&b).exponents(), &[1, 0, 0]);
        assert_eq!(a.colon(&b).exponents(), &[1, 1, 0]);
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.mul(&b).degree(), 7);
        assert!(Monomial::new(vec![1, 0, 0]).divides(&a));
        assert_eq!(Monomial::new(vec![0, 1, 0]).as_variable(), Some(2));
    }

    #[test]
    fn order_is_degree_then_x1_first() {
        let mut v = [Monomial::parse(3, "x2*x3").unwrap(),
            Monomial::parse(3, "x1^2").unwrap(),
            Monomial::parse(3, "x1*x3").unwrap(),
            Monomial::parse(3, "x3").unwrap(),
            Monomial::parse(3, "x1*x2").unwrap()];
        v.sort();
        let s: Vec<String> = v.iter().map(|m| m.to_string()).collect();
        assert_eq!(s, ["x3", "x1^2", "x1*x2", "x1*x3", "x2*x3"]);
    }
}
