use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::variables::VariableSet;

/// Row-major matrix of polynomials over one shared ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Invalid("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let ring = entries[0].ring();
        if entries.iter().any(|p| p.ring() != ring) {
            return Err(Error::RingMismatch("matrix entries over different rings".into()));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    /// Jacobian of a family of polynomials: one row per polynomial, one
    /// column per ring variable.
    pub fn jacobian(polys: &[Polynomial]) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::Invalid("jacobian of an empty family".into()));
        }
        let ring = polys[0].ring().clone();
        let n = ring.len();
        let mut entries = Vec::with_capacity(polys.len() * n);
        for p in polys {
            for v in 0..n {
                entries.push(p.partial_derivative(v));
            }
        }
        PolyMatrix::new(polys.len(), n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn ring(&self) -> &Arc<VariableSet> {
        self.entries[0].ring()
    }

    fn det_of(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let k = rows.len();
        if k == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        // cofactor expansion along the first listed row
        let mut acc = Polynomial::zero(self.ring());
        for (j, &c) in cols.iter().enumerate() {
            let entry = self.get(rows[0], c);
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|(jj, _)| *jj != j)
                .map(|(_, &cc)| cc)
                .collect();
            let minor = self.det_of(&rows[1..], &sub_cols);
            let signed = if j % 2 == 0 { minor } else { minor.neg() };
            acc = &acc + &(entry * &signed);
        }
        acc
    }

    /// All k x k minors, in lexicographic order of (row subset, column
    /// subset); determinants are exact.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::Invalid(format!(
                "minor size {k} out of range for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut out = Vec::new();
        for rows in (0..self.rows).combinations(k) {
            for cols in (0..self.cols).combinations(k) {
                out.push(self.det_of(&rows, &cols));
            }
        }
        Ok(out)
    }
}
