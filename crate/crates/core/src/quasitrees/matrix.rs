use std::collections::BTreeMap;
use std::fmt;

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideals::Monomial;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    pub negative: bool,
    pub monomial: Monomial,
}

impl SignedMonomial {
    pub fn positive(monomial: Monomial) -> Self {
        SignedMonomial { negative: false, monomial }
    }

    pub fn negative(monomial: Monomial) -> Self {
        SignedMonomial { negative: true, monomial }
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    fn times(&self, other: &SignedMonomial) -> SignedMonomial {
        SignedMonomial { negative: self.negative != other.negative, monomial: self.monomial.mul(&other.monomial) }
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{}", self.monomial)
    }
}

impl fmt::Debug for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse matrix of signed monomials whose rows are labelled by index
/// pairs `(i, j)`, `i < j`; row `(i, j)` has its entries in columns `i`
/// and `j` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    num_vars: usize,
    row_labels: Vec<(usize, usize)>,
    num_cols: usize,
    entries: BTreeMap<(usize, usize), SignedMonomial>,
}

impl MonomialMatrix {
    /// Rows `(i, j)` carrying `+a` in column `i` and `-b` in column `j`.
    pub(crate) fn from_pairs(
        num_vars: usize,
        num_cols: usize,
        rows: impl IntoIterator<Item = ((usize, usize), Monomial, Monomial)>,
    ) -> Self {
        let mut row_labels = Vec::new();
        let mut entries = BTreeMap::new();
        for (r, ((i, j), a, b)) in rows.into_iter().enumerate() {
            row_labels.push((i, j));
            entries.insert((r, i), SignedMonomial::positive(a));
            entries.insert((r, j), SignedMonomial::negative(b));
        }
        MonomialMatrix { num_vars, row_labels, num_cols, entries }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn row_labels(&self) -> &[(usize, usize)] {
        &self.row_labels
    }

    pub fn num_rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&SignedMonomial> {
        self.entries.get(&(row, col))
    }

    /// The submatrix on the rows with the given labels, in the given order.
    pub fn select_rows(&self, labels: &[(usize, usize)]) -> Result<MonomialMatrix> {
        let mut entries = BTreeMap::new();
        for (r, label) in labels.iter().enumerate() {
            let src = self
                .row_labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::domain(format!("no row labelled {}-{}", label.0 + 1, label.1 + 1)))?;
            for c in [label.0, label.1] {
                if let Some(e) = self.entries.get(&(src, c)) {
                    entries.insert((r, c), e.clone());
                }
            }
        }
        Ok(MonomialMatrix { num_vars: self.num_vars, row_labels: labels.to_vec(), num_cols: self.num_cols, entries })
    }

    /// Determinant of the square matrix left after deleting column `col`;
    /// `None` when it vanishes.
    ///
    /// Columns with a single nonzero entry are expanded first. For rows
    /// forming a tree this always succeeds and every intermediate value is
    /// a signed monomial. Anything else falls back to cofactor expansion
    /// (at most 8 columns), which must also produce a single term.
    pub fn minor_without_column(&self, col: usize) -> Result<Option<SignedMonomial>> {
        if col >= self.num_cols || self.num_rows() + 1 != self.num_cols {
            return Err(Error::domain("maximal minors need a (t-1) x t matrix and a valid column"));
        }
        let mut rows: Vec<usize> = (0..self.num_rows()).collect();
        let mut cols: Vec<usize> = (0..self.num_cols).filter(|&c| c != col).collect();
        let mut acc = SignedMonomial::positive(Monomial::one(self.num_vars));
        while !rows.is_empty() {
            let mut pivot = None;
            for (q, &c) in cols.iter().enumerate() {
                let hits: Vec<usize> = (0..rows.len()).filter(|&p| self.entries.contains_key(&(rows[p], c))).collect();
                match hits.len() {
                    0 => return Ok(None),
                    1 => {
                        pivot = Some((hits[0], q));
                        break;
                    }
                    _ => {}
                }
            }
            let Some((p, q)) = pivot else {
                return self.cofactor(&rows, &cols).map(|d| d.map(|d| acc.times(&d)));
            };
            let mut e = self.entries[&(rows[p], cols[q])].clone();
            if (p + q) % 2 == 1 {
                e.negative = !e.negative;
            }
            acc = acc.times(&e);
            rows.remove(p);
            cols.remove(q);
        }
        Ok(Some(acc))
    }

    fn cofactor(&self, rows: &[usize], cols: &[usize]) -> Result<Option<SignedMonomial>> {
        if cols.len() > 8 {
            return Err(Error::resource("cofactor expansion is limited to 8 columns"));
        }
        let poly = self.expand(rows, cols);
        let mut terms = poly.into_iter().filter(|(_, c)| *c != 0);
        match (terms.next(), terms.next()) {
            (None, _) => Ok(None),
            (Some((exps, c)), None) if c.abs() == 1 => {
                Ok(Some(SignedMonomial { negative: c < 0, monomial: Monomial::new(exps) }))
            }
            _ => Err(Error::domain("determinant is not a single signed monomial")),
        }
    }

    fn expand(&self, rows: &[usize], cols: &[usize]) -> BTreeMap<Vec<u32>, i64> {
        let mut out = BTreeMap::new();
        if rows.is_empty() {
            out.insert(vec![0; self.num_vars], 1);
            return out;
        }
        for (q, &c) in cols.iter().enumerate() {
            let Some(e) = self.entries.get(&(rows[0], c)) else { continue };
            let mut rest = cols.to_vec();
            rest.remove(q);
            let sign = if (q % 2 == 1) != e.negative { -1 } else { 1 };
            for (exps, coef) in self.expand(&rows[1..], &rest) {
                let m = Monomial::new(exps).mul(&e.monomial);
                *out.entry(m.exponents().to_vec()).or_insert(0) += sign * coef;
            }
        }
        out
    }
}

/// The `C(t,2) x t` matrix of a complex with facets `F_1..F_t`: row `(i,j)`
/// holds `+x_{F_i \ F_j}` in column `i` and `-x_{F_j \ F_i}` in column `j`.
pub fn build_m_delta(complex: &SimplicialComplex) -> Result<MonomialMatrix> {
    let t = complex.facet_count();
    if t < 2 {
        return Err(Error::domain("the matrix needs at least two facets"));
    }
    let n = complex.ambient();
    let f: Vec<u64> = complex.facets().iter().map(|g| g.bits()).collect();
    let rows = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).map(|(i, j)| {
        ((i, j), Monomial::from_mask(n, f[i] & !f[j]), Monomial::from_mask(n, f[j] & !f[i]))
    });
    Ok(MonomialMatrix::from_pairs(n, t, rows))
}

/// The Taylor differential `T_2 -> T_1` for the generators in the given
/// order: row `(i,j)` is `u_ji e_i - u_ij e_j` with `u_ij = u_i / gcd(u_i, u_j)`.
pub fn taylor_matrix(generators: &[Monomial]) -> Result<MonomialMatrix> {
    let t = generators.len();
    if t < 2 {
        return Err(Error::domain("Taylor relations need at least two generators"));
    }
    let n = generators[0].num_vars();
    let rows = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).map(|(i, j)| {
        ((i, j), generators[j].colon(&generators[i]), generators[i].colon(&generators[j]))
    });
    Ok(MonomialMatrix::from_pairs(n, t, rows))
}
