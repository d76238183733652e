//! Ladders and landings of Apéry-table columns, the resulting decomposition of
//! the tangent cone over the fiber cone, and its Hilbert series.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::table::AperyTable;

/// A maximal run of at least two equal consecutive values in a ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Landing {
    pub start: usize,
    pub end: usize,
}

/// Landing structure of one non-zero column of an Apéry table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderProfile {
    pub column_index: usize,
    pub column_key: u64,
    pub values: Vec<u64>,
    pub landings: Vec<Landing>,
    /// Number of landings minus one.
    pub p: usize,
    /// End of the last landing.
    pub d: usize,
    /// `b_j = e_{j-1}` for `j = 1..=p`.
    pub b_list: Vec<usize>,
    /// `c_j = s_j - e_{j-1}` for `j = 1..=p`.
    pub c_list: Vec<usize>,
}

/// Maximal runs of length >= 2 of equal adjacent values.
pub fn landings(values: &[u64]) -> Vec<Landing> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i] != values[start] {
            if i - 1 > start {
                out.push(Landing { start, end: i - 1 });
            }
            start = i;
        }
    }
    out
}

impl LadderProfile {
    pub fn from_values(column_index: usize, values: Vec<u64>) -> Self {
        let landings = landings(&values);
        // Row 0 and row 1 agree in every non-zero column, so there is always a landing.
        let last = landings.last().expect("non-zero columns start with a landing");
        let d = last.end;
        let p = landings.len() - 1;
        let b_list = landings[..p].iter().map(|l| l.end).collect();
        let c_list = landings
            .windows(2)
            .map(|w| w[1].start - w[0].end)
            .collect();
        Self {
            column_index,
            column_key: values[0],
            values,
            landings,
            p,
            d,
            b_list,
            c_list,
        }
    }
}

pub fn ladder_profile(table: &AperyTable, column_index: usize) -> Result<LadderProfile> {
    let columns = table.num_columns();
    if column_index == 0 || column_index >= columns {
        return Err(Error::ColumnOutOfRange {
            index: column_index,
            columns,
        });
    }
    Ok(LadderProfile::from_values(column_index, table.column(column_index)))
}

/// Profiles of columns `1..a1`.
pub fn ladder_profiles(table: &AperyTable) -> Vec<LadderProfile> {
    (1..table.num_columns())
        .map(|i| LadderProfile::from_values(i, table.column(i)))
        .collect()
}

/// Shifted free and cyclic torsion summands of the tangent cone as a module
/// over the fiber cone of the multiplicity element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeDecomposition {
    /// Ascending; one `0` for the fiber cone itself plus `d_i` per column.
    pub free_shifts: Vec<usize>,
    /// `(b, c)` pairs, ascending.
    pub torsion: Vec<(usize, usize)>,
}

impl ConeDecomposition {
    pub fn from_profiles(profiles: &[LadderProfile]) -> Self {
        let mut free_shifts = vec![0];
        let mut torsion = Vec::new();
        for prof in profiles {
            free_shifts.push(prof.d);
            torsion.extend(prof.b_list.iter().copied().zip(prof.c_list.iter().copied()));
        }
        free_shifts.sort_unstable();
        torsion.sort_unstable();
        Self {
            free_shifts,
            torsion,
        }
    }

    pub fn from_table(table: &AperyTable) -> Self {
        Self::from_profiles(&ladder_profiles(table))
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// `(shift, multiplicity)` pairs of the free part, ascending by shift.
    pub fn free_histogram(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &s in &self.free_shifts {
            match out.last_mut() {
                Some((shift, count)) if *shift == s => *count += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        hilbert_series(self)
    }
}

pub fn cone_decomposition(semigroup: &NumericalSemigroup) -> Result<ConeDecomposition> {
    Ok(ConeDecomposition::from_table(&AperyTable::new(semigroup)?))
}

pub fn is_free(semigroup: &NumericalSemigroup) -> Result<bool> {
    Ok(cone_decomposition(semigroup)?.is_free())
}

/// Decided by freeness over the fiber cone.
pub fn is_cohen_macaulay(semigroup: &NumericalSemigroup) -> Result<bool> {
    is_free(semigroup)
}

/// Hilbert series `numerator(x) / (1 - x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Coefficient of `x^k` at index `k`, trailing zeros trimmed.
    pub numerator: Vec<i64>,
}

impl HilbertSeries {
    pub const DENOMINATOR_EXPONENT: u32 = 1;

    pub fn numerator_at_one(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// Coefficient of `x^n` in the expanded series.
    pub fn coefficient(&self, n: usize) -> i64 {
        self.numerator.iter().take(n + 1).sum()
    }
}

pub fn hilbert_series(dec: &ConeDecomposition) -> HilbertSeries {
    let top = dec
        .free_shifts
        .iter()
        .copied()
        .chain(dec.torsion.iter().map(|&(b, c)| b + c))
        .max()
        .unwrap_or(0);
    let mut numerator = vec![0i64; top + 1];
    for &s in &dec.free_shifts {
        numerator[s] += 1;
    }
    for &(b, c) in &dec.torsion {
        numerator[b] += 1;
        numerator[b + c] -= 1;
    }
    while numerator.len() > 1 && numerator.last() == Some(&0) {
        numerator.pop();
    }
    HilbertSeries { numerator }
}

pub fn hilbert_function_from_series(series: &HilbertSeries, n: usize) -> i64 {
    series.coefficient(n)
}
