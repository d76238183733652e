//! Closed forms for two families of four-generated semigroups.
//!
//! Bresinsky: `<2h(2h-1), (2h+1)(2h-1), 2h(2h+1), 2h(2h+1)+(2h-1)>` for `h >= 2`.
//! Arslan: `<m(m+1), m(m+1)+1, (m+1)^2, (m+1)^2+1>` for `m >= 2`.
//!
//! In both families every Apéry element (with respect to the multiplicity)
//! is `i*g` or `i*g + j*g'` for fixed generators `g, g'`, it has a unique
//! factorization, and its order is `i` resp. `i + j`. Everything below is
//! produced from those index sets alone and never calls the generic
//! algorithms, so the two can be compared.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{checked_add, checked_mul, Error, Result};
use crate::par::Execution;
use crate::semigroup::{AperySet, NumericalSemigroup, MAX_MODULUS};
use crate::table::AperyTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Bresinsky,
    Arslan,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Bresinsky => "bresinsky",
            Family::Arslan => "arslan",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bresinsky" => Ok(Family::Bresinsky),
            "arslan" => Ok(Family::Arslan),
            other => Err(format!("unknown family `{other}` (expected bresinsky or arslan)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BresinskyParams {
    pub h: u64,
    pub m0: u64,
    pub m1: u64,
    pub m2: u64,
    pub m3: u64,
}

impl BresinskyParams {
    pub fn new(h: u64) -> Result<Self> {
        if h < 2 {
            return Err(Error::ParamTooSmall {
                family: "bresinsky",
                min: 2,
                got: h,
            });
        }
        let two_h = checked_mul(2, h)?;
        let two_h_plus = checked_add(two_h, 1)?;
        let m0 = checked_mul(two_h, two_h - 1)?;
        let m1 = checked_mul(two_h_plus, two_h - 1)?;
        let m2 = checked_mul(two_h, two_h_plus)?;
        let m3 = checked_add(m2, two_h - 1)?;
        // Largest closed-form table entry stays below 2h * (m3 + m0).
        checked_mul(two_h, checked_add(m3, m0)?)?;
        Ok(Self { h, m0, m1, m2, m3 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArslanParams {
    pub m: u64,
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
    pub n4: u64,
}

impl ArslanParams {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::ParamTooSmall {
                family: "arslan",
                min: 2,
                got: m,
            });
        }
        let m_plus = checked_add(m, 1)?;
        let n1 = checked_mul(m, m_plus)?;
        let n3 = checked_mul(m_plus, m_plus)?;
        let (n2, n4) = (checked_add(n1, 1)?, checked_add(n3, 1)?);
        checked_mul(m_plus, checked_add(n4, n1)?)?;
        Ok(Self { m, n1, n2, n3, n4 })
    }
}

/// Parameters of a family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilyParams {
    Bresinsky(BresinskyParams),
    Arslan(ArslanParams),
}

/// An Apéry element together with its closed-form order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockElement {
    pub value: u64,
    pub order: u32,
}

/// A named group of table columns (`T0..T5`, `A0..A5`, with `T4_i` etc. for
/// the two-generator sub-blocks).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub caption: String,
    pub elements: Vec<BlockElement>,
}

fn single_block(caption: &str, g: u64, count: u64) -> Block {
    Block {
        caption: caption.to_string(),
        elements: (1..=count)
            .map(|i| BlockElement {
                value: i * g,
                order: i as u32,
            })
            .collect(),
    }
}

/// Sub-blocks `i*g + s*g2`, `s = 1..=limit - i`, for `i = 1..=i_max`.
fn double_blocks(prefix: &str, g: u64, g2: u64, i_max: u64, limit: u64) -> Vec<Block> {
    (1..=i_max)
        .map(|i| Block {
            caption: format!("{prefix}_{i}"),
            elements: (1..=limit - i)
                .map(|s| BlockElement {
                    value: i * g + s * g2,
                    order: (i + s) as u32,
                })
                .collect(),
        })
        .collect()
}

/// Closed-form number of non-zero Apéry elements of each order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct OrderCensus {
    pub counts: BTreeMap<u32, u64>,
}

impl OrderCensus {
    /// Histogram of the given orders, ignoring order 0.
    pub fn from_orders(orders: impl IntoIterator<Item = u32>) -> Self {
        let mut counts = BTreeMap::new();
        for o in orders.into_iter().filter(|&o| o > 0) {
            *counts.entry(o).or_insert(0) += 1;
        }
        Self { counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Counts at orders `1..=max`, zero-filled.
    pub fn dense(&self) -> Vec<u64> {
        let max = self.counts.keys().next_back().copied().unwrap_or(0);
        (1..=max).map(|k| self.counts.get(&k).copied().unwrap_or(0)).collect()
    }
}

/// Closed-form Apéry table: columns ascending as in [`AperyTable`], plus the
/// block layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTable {
    pub table: AperyTable,
    pub blocks: Vec<Block>,
    /// For each column in block order, its index among the ascending columns.
    pub block_order: Vec<usize>,
}

impl FamilyTable {
    /// Table rows with columns rearranged into block order.
    pub fn rows_in_block_order(&self) -> Vec<Vec<u64>> {
        self.table
            .rows()
            .iter()
            .map(|row| self.block_order.iter().map(|&c| row[c]).collect())
            .collect()
    }

    /// Column of the block-ordered table for a given Apéry element.
    pub fn column_of(&self, key: u64) -> Option<Vec<u64>> {
        let idx = self.table.column_keys().binary_search(&key).ok()?;
        Some(self.table.column(idx))
    }
}

impl FamilyParams {
    pub fn new(family: Family, parameter: u64) -> Result<Self> {
        let params = match family {
            Family::Bresinsky => FamilyParams::Bresinsky(BresinskyParams::new(parameter)?),
            Family::Arslan => FamilyParams::Arslan(ArslanParams::new(parameter)?),
        };
        if params.multiplicity() > MAX_MODULUS {
            return Err(Error::TooLarge(format!(
                "{family} parameter {parameter} gives multiplicity {} above {MAX_MODULUS}",
                params.multiplicity()
            )));
        }
        Ok(params)
    }

    pub fn family(&self) -> Family {
        match self {
            FamilyParams::Bresinsky(_) => Family::Bresinsky,
            FamilyParams::Arslan(_) => Family::Arslan,
        }
    }

    /// `h` or `m`.
    pub fn parameter(&self) -> u64 {
        match self {
            FamilyParams::Bresinsky(p) => p.h,
            FamilyParams::Arslan(p) => p.m,
        }
    }

    pub fn generators(&self) -> [u64; 4] {
        match self {
            FamilyParams::Bresinsky(p) => [p.m0, p.m1, p.m2, p.m3],
            FamilyParams::Arslan(p) => [p.n1, p.n2, p.n3, p.n4],
        }
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators()[0]
    }

    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        let s = NumericalSemigroup::new(&self.generators())?;
        debug_assert_eq!(s.generators(), &self.generators()[..]);
        Ok(s)
    }

    /// Recovers the family parameters of `semigroup`, if it is a member.
    pub fn recognize(semigroup: &NumericalSemigroup) -> Option<Self> {
        let gens = semigroup.generators();
        if gens.len() != 4 {
            return None;
        }
        let a1 = gens[0];
        let root = a1.isqrt();
        // 2h(2h-1) = a1 puts 2h near sqrt(a1); m(m+1) = a1 puts m near sqrt(a1).
        let candidates = [
            (Family::Bresinsky, root / 2),
            (Family::Bresinsky, root / 2 + 1),
            (Family::Arslan, root),
            (Family::Arslan, root.saturating_sub(1)),
        ];
        candidates.into_iter().find_map(|(family, param)| {
            let p = FamilyParams::new(family, param).ok()?;
            (p.generators()[..] == *gens).then_some(p)
        })
    }

    /// `2h - 1` resp. `m`: the largest closed-form order.
    pub fn reduction_number(&self) -> usize {
        match self {
            FamilyParams::Bresinsky(p) => (2 * p.h - 1) as usize,
            FamilyParams::Arslan(p) => p.m as usize,
        }
    }

    /// Apéry elements grouped into blocks, each with its closed-form order.
    pub fn blocks(&self) -> Vec<Block> {
        let zero = Block {
            caption: String::new(),
            elements: vec![BlockElement { value: 0, order: 0 }],
        };
        let mut blocks = match *self {
            FamilyParams::Bresinsky(BresinskyParams { h, m1, m2, m3, .. }) => {
                let t = 2 * h;
                let mut b = vec![
                    Block { caption: "T0".into(), ..zero },
                    single_block("T1", m1, t - 1),
                    single_block("T2", m2, t - 2),
                    single_block("T3", m3, t - 2),
                ];
                b.extend(double_blocks("T4", m1, m3, t - 2, t - 1));
                b.extend(double_blocks("T5", m2, m3, t - 3, t - 2));
                b
            }
            FamilyParams::Arslan(ArslanParams { m, n2, n3, n4, .. }) => {
                let mut b = vec![
                    Block { caption: "A0".into(), ..zero },
                    single_block("A1", n2, m),
                    single_block("A2", n3, m - 1),
                    single_block("A3", n4, m - 1),
                ];
                b.extend(double_blocks("A4", n2, n4, m - 1, m));
                b.extend(double_blocks("A5", n3, n4, m - 2, m - 1));
                b
            }
        };
        blocks.retain(|b| !b.elements.is_empty());
        blocks
    }

    fn block_elements(&self) -> impl Iterator<Item = BlockElement> {
        self.blocks().into_iter().flat_map(|b| b.elements)
    }

    /// The Apéry set with respect to the multiplicity, from the index families.
    pub fn apery_closed_form(&self) -> AperySet {
        AperySet::from_elements(self.multiplicity(), self.block_elements().map(|e| e.value))
    }

    /// Order of every Apéry element.
    pub fn orders_closed_form(&self) -> BTreeMap<u64, u32> {
        self.block_elements().map(|e| (e.value, e.order)).collect()
    }

    /// `2k+1` elements of order `k` below the top order, then `2h-1` resp. `m` at the top.
    pub fn census_closed_form(&self) -> OrderCensus {
        let top = self.reduction_number() as u32;
        let mut counts: BTreeMap<u32, u64> = (1..top).map(|k| (k, 2 * k as u64 + 1)).collect();
        counts.insert(top, top as u64);
        OrderCensus { counts }
    }

    /// Column of element `w` with order `o`: `w` through row `o`, then `+a1` per row.
    pub fn table_closed_form(&self) -> Result<FamilyTable> {
        let a1 = self.multiplicity();
        let r = self.reduction_number();
        let blocks = self.blocks();
        let mut ascending: Vec<BlockElement> =
            blocks.iter().flat_map(|b| b.elements.iter().copied()).collect();
        ascending.sort_unstable_by_key(|e| e.value);
        let keys: Vec<u64> = ascending.iter().map(|e| e.value).collect();
        let rows: Vec<Vec<u64>> = (0..=r)
            .map(|n| {
                ascending
                    .iter()
                    .map(|e| {
                        let o = e.order as usize;
                        if n <= o {
                            e.value
                        } else {
                            e.value + (n - o) as u64 * a1
                        }
                    })
                    .collect()
            })
            .collect();
        let block_order = blocks
            .iter()
            .flat_map(|b| b.elements.iter())
            .map(|e| keys.binary_search(&e.value).expect("key present"))
            .collect();
        Ok(FamilyTable {
            table: AperyTable::from_rows(&self.semigroup()?, rows)?,
            blocks,
            block_order,
        })
    }

    /// Whether every closed-form Apéry element has exactly one factorization.
    pub fn verify_uniqueness(&self, exec: Execution) -> Result<bool> {
        let s = self.semigroup()?;
        let elements = self.apery_closed_form().elements;
        Ok(exec.all(&elements, |&w| s.factorizations(w).len() == 1))
    }
}

pub fn bresinsky(h: u64) -> Result<NumericalSemigroup> {
    FamilyParams::new(Family::Bresinsky, h)?.semigroup()
}

pub fn arslan(m: u64) -> Result<NumericalSemigroup> {
    FamilyParams::new(Family::Arslan, m)?.semigroup()
}

/// Uniqueness check for an arbitrary semigroup; fails unless it is a family member.
pub fn verify_uniqueness(semigroup: &NumericalSemigroup, exec: Execution) -> Result<bool> {
    FamilyParams::recognize(semigroup)
        .ok_or_else(|| Error::NotFamilyMember(semigroup.to_string()))?
        .verify_uniqueness(exec)
}
