//! The Apéry table of the powers of the maximal ideal, the reduction number
//! and the Hilbert function of the tangent cone.

use crate::error::{checked_add, Result};
use crate::semigroup::{NumericalSemigroup, OrderTable};

/// Apéry table of a semigroup with respect to its multiplicity.
///
/// Row `n` lists the smallest element of `nM` in every residue class, one
/// column per Apéry element of the semigroup (ascending by that element).
/// Row 0 is the Apéry set itself with `0` in column 0; row 1 replaces it by
/// the multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    semigroup: NumericalSemigroup,
    reduction_number: usize,
    rows: Vec<Vec<u64>>,
    /// Row `r + 1`, kept to certify the reduction number.
    next_row: Vec<u64>,
}

impl AperyTable {
    /// Builds rows by the inductive rule: a column keeps its value while that
    /// value lies in the next ideal power, otherwise it moves up by `a1`.
    pub fn new(semigroup: &NumericalSemigroup) -> Result<Self> {
        let a1 = semigroup.multiplicity();
        let mut keys = semigroup.apery_by_residue().to_vec();
        keys.sort_unstable();

        let mut orders = OrderTable::new(semigroup);
        let mut row1 = keys.clone();
        row1[0] = a1;
        let mut rows = vec![keys, row1];
        loop {
            let n = rows.len() - 1;
            let mut next = Vec::with_capacity(rows[n].len());
            let mut all_step = true;
            for &v in &rows[n] {
                let ord = orders.get(v)?.expect("table entries are semigroup elements");
                if ord as usize > n {
                    next.push(v);
                    all_step = false;
                } else {
                    next.push(checked_add(v, a1)?);
                }
            }
            if all_step {
                return Ok(Self {
                    semigroup: semigroup.clone(),
                    reduction_number: n,
                    rows,
                    next_row: next,
                });
            }
            rows.push(next);
        }
    }

    /// Assembles a table from precomputed rows `0..=r`; row `r + 1` is derived
    /// as the `+a1` step of row `r`.
    pub(crate) fn from_rows(semigroup: &NumericalSemigroup, rows: Vec<Vec<u64>>) -> Result<Self> {
        let a1 = semigroup.multiplicity();
        let next_row = rows
            .last()
            .expect("at least one row")
            .iter()
            .map(|&v| checked_add(v, a1))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            semigroup: semigroup.clone(),
            reduction_number: rows.len() - 1,
            rows,
            next_row,
        })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn reduction_number(&self) -> usize {
        self.reduction_number
    }

    /// Rows `0..=r`.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, column: usize) -> u64 {
        self.rows[row][column]
    }

    /// The Apéry elements identifying each column, ascending.
    pub fn column_keys(&self) -> &[u64] {
        &self.rows[0]
    }

    pub fn num_columns(&self) -> usize {
        self.rows[0].len()
    }

    /// Values of one column over rows `0..=r`.
    pub fn column(&self, column: usize) -> Vec<u64> {
        self.rows.iter().map(|row| row[column]).collect()
    }

    /// Row `n` for any `n`, extending past `r` by constant `+a1` steps.
    pub fn row_extended(&self, n: usize) -> Vec<u64> {
        if n <= self.reduction_number {
            return self.rows[n].clone();
        }
        let extra = (n - self.reduction_number - 1) as u64 * self.semigroup.multiplicity();
        self.next_row.iter().map(|v| v + extra).collect()
    }

    /// `#(nM \ (n+1)M)`: the number of columns that step between rows `n` and `n + 1`.
    pub fn hilbert_function(&self, n: usize) -> u64 {
        if n >= self.reduction_number {
            return self.semigroup.multiplicity();
        }
        self.rows[n]
            .iter()
            .zip(&self.rows[n + 1])
            .filter(|(a, b)| a != b)
            .count() as u64
    }
}

pub fn apery_table(semigroup: &NumericalSemigroup) -> Result<AperyTable> {
    AperyTable::new(semigroup)
}

/// Least `r >= 1` with `(r+1)M = a1 + rM`.
pub fn reduction_number(semigroup: &NumericalSemigroup) -> Result<usize> {
    Ok(AperyTable::new(semigroup)?.reduction_number())
}

pub fn hilbert_function(semigroup: &NumericalSemigroup, n: usize) -> Result<u64> {
    Ok(AperyTable::new(semigroup)?.hilbert_function(n))
}
