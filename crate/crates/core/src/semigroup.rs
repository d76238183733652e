//! Numerical semigroups given by generators: membership, Frobenius number,
//! Apéry sets, factorizations, orders and length sets.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result, MAX_VALUE};

/// Largest modulus for which an Apéry set (one slot per residue class) is materialized.
pub const MAX_MODULUS: u64 = 1 << 22;

/// Largest value for which orders are tabulated.
pub const MAX_ORDER_VALUE: u64 = 1 << 28;

const UNREACHED: u64 = u64::MAX;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest combination of `generators` in every residue class mod `modulus`.
///
/// Fixed-point relaxation on the cycle graph Z/modulus: each generator is an
/// edge of its own weight. Classes that stay unreachable hold `UNREACHED`;
/// candidates beyond the 63-bit range are discarded.
fn residue_minima(generators: &[u64], modulus: u64) -> Result<Vec<u64>> {
    if modulus > MAX_MODULUS {
        return Err(Error::TooLarge(format!(
            "modulus {modulus} exceeds {MAX_MODULUS} residue classes"
        )));
    }
    let m = modulus as usize;
    let mut best = vec![UNREACHED; m];
    let mut queued = vec![false; m];
    let mut work = VecDeque::new();
    best[0] = 0;
    work.push_back(0usize);
    queued[0] = true;
    while let Some(r) = work.pop_front() {
        queued[r] = false;
        let base = best[r];
        for &g in generators {
            let Some(cand) = base.checked_add(g).filter(|&v| v <= MAX_VALUE) else {
                continue;
            };
            let next = ((r as u64 + g % modulus) % modulus) as usize;
            if cand < best[next] {
                best[next] = cand;
                if !queued[next] {
                    queued[next] = true;
                    work.push_back(next);
                }
            }
        }
    }
    Ok(best)
}

/// A numerical semigroup, stored by its unique minimal system of generators.
///
/// Immutable once built; the Apéry set with respect to the multiplicity is
/// computed at construction and makes membership an O(1) test.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery_by_residue: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reduced to its minimal generators.
    pub fn new(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        if raw.iter().any(|&g| g > MAX_VALUE) {
            return Err(Error::Overflow);
        }
        let g = raw.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        // A generator can only be a combination of smaller ones.
        let mut minimal: Vec<u64> = Vec::with_capacity(sorted.len());
        for &cand in &sorted {
            if let Some(&first) = minimal.first() {
                let minima = residue_minima(&minimal, first)?;
                if minima[(cand % first) as usize] <= cand {
                    continue;
                }
            }
            minimal.push(cand);
        }

        let a1 = minimal[0];
        let apery_by_residue = residue_minima(&minimal, a1)?;
        if apery_by_residue.contains(&UNREACHED) {
            // gcd is 1, so every class is reachable unless values left the 63-bit range.
            return Err(Error::Overflow);
        }
        Ok(Self {
            generators: minimal,
            apery_by_residue,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// True for the trivial semigroup N = <1>.
    pub fn is_n(&self) -> bool {
        self.generators[0] == 1
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.apery_by_residue[(x % self.multiplicity()) as usize]
    }

    pub(crate) fn contains_u(&self, x: u64) -> bool {
        x >= self.apery_by_residue[(x % self.multiplicity()) as usize]
    }

    /// Largest integer outside the semigroup.
    pub fn frobenius(&self) -> Result<i64> {
        if self.is_n() {
            return Err(Error::SemigroupIsN);
        }
        let max = *self.apery_by_residue.iter().max().expect("nonempty");
        Ok(max as i64 - self.multiplicity() as i64)
    }

    /// Apéry element of each residue class mod the multiplicity, indexed by residue.
    pub fn apery_by_residue(&self) -> &[u64] {
        &self.apery_by_residue
    }

    /// Apéry set with respect to a nonzero element `a` of the semigroup.
    pub fn apery_set(&self, a: u64) -> Result<AperySet> {
        if a == 0 || a > MAX_VALUE || !self.contains_u(a) {
            return Err(Error::NotInSemigroup(a.min(MAX_VALUE) as i64));
        }
        let elements = if a == self.multiplicity() {
            self.apery_by_residue.clone()
        } else {
            let minima = residue_minima(&self.generators, a)?;
            if minima.contains(&UNREACHED) {
                return Err(Error::Overflow);
            }
            minima
        };
        Ok(AperySet::from_residues(a, elements))
    }

    /// Every coefficient vector `s` with `sum(s_i * a_i) == x`, in lexicographic order.
    pub fn factorizations(&self, x: u64) -> Vec<Factorization> {
        let mut out = Vec::new();
        let mut coeffs = vec![0u64; self.generators.len()];
        self.factorize_rec(0, x, &mut coeffs, &mut out);
        out
    }

    fn factorize_rec(&self, idx: usize, rest: u64, coeffs: &mut [u64], out: &mut Vec<Factorization>) {
        let g = self.generators[idx];
        if idx + 1 == self.generators.len() {
            if rest.is_multiple_of(g) {
                coeffs[idx] = rest / g;
                out.push(Factorization::new(coeffs.to_vec()));
                coeffs[idx] = 0;
            }
            return;
        }
        for c in 0..=rest / g {
            coeffs[idx] = c;
            self.factorize_rec(idx + 1, rest - c * g, coeffs, out);
        }
        coeffs[idx] = 0;
    }

    /// Largest factorization length of `x`.
    pub fn order(&self, x: u64) -> Result<u32> {
        let mut table = OrderTable::new(self);
        table.get(x)?.ok_or(Error::NotInSemigroup(x.min(MAX_VALUE) as i64))
    }

    /// The set of factorization lengths of `x`.
    pub fn length_set(&self, x: u64) -> Result<BTreeSet<u64>> {
        if x > MAX_VALUE || !self.contains_u(x) {
            return Err(Error::NotInSemigroup(x.min(MAX_VALUE) as i64));
        }
        Ok(self
            .factorizations(x)
            .iter()
            .map(|f| f.total_order)
            .collect())
    }

    /// Membership in the n-fold sumset nM, where M is the maximal ideal and 0M is
    /// the whole semigroup. An element of order L >= n regroups into n nonzero parts.
    pub fn n_fold_contains(&self, x: i64, n: u32) -> Result<bool> {
        if !self.contains(x) {
            return Ok(false);
        }
        if n == 0 {
            return Ok(true);
        }
        Ok(self.order(x as u64)? >= n)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Convenience wrapper for [`NumericalSemigroup::new`].
pub fn new_semigroup(raw: &[u64]) -> Result<NumericalSemigroup> {
    NumericalSemigroup::new(raw)
}

/// A factorization of an element over the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    pub coefficients: Vec<u64>,
    pub total_order: u64,
}

impl Factorization {
    pub fn new(coefficients: Vec<u64>) -> Self {
        let total_order = coefficients.iter().sum();
        Self {
            coefficients,
            total_order,
        }
    }

    /// The element this factorization evaluates to.
    pub fn value(&self, semigroup: &NumericalSemigroup) -> u64 {
        self.coefficients
            .iter()
            .zip(semigroup.generators())
            .map(|(c, g)| c * g)
            .sum()
    }
}

/// Apéry set: the smallest semigroup element in each residue class mod `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    pub modulus: u64,
    /// Ascending.
    pub elements: Vec<u64>,
}

impl AperySet {
    fn from_residues(modulus: u64, mut elements: Vec<u64>) -> Self {
        elements.sort_unstable();
        Self { modulus, elements }
    }

    pub fn from_elements(modulus: u64, elements: impl IntoIterator<Item = u64>) -> Self {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        elements.sort_unstable();
        Self { modulus, elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: u64) -> bool {
        self.elements.binary_search(&w).is_ok()
    }

    pub fn max(&self) -> u64 {
        self.elements.last().copied().unwrap_or(0)
    }
}

const NO_ORDER: u32 = u32::MAX;

/// Orders of semigroup elements, tabulated bottom-up and grown on demand.
///
/// `ord(0) = 0` and `ord(x) = 1 + max ord(x - a_i)` over generators with
/// `x - a_i` in the semigroup. Each instance is owned by a single caller.
#[derive(Debug, Clone)]
pub struct OrderTable<'a> {
    semigroup: &'a NumericalSemigroup,
    orders: Vec<u32>,
}

impl<'a> OrderTable<'a> {
    pub fn new(semigroup: &'a NumericalSemigroup) -> Self {
        Self {
            semigroup,
            orders: vec![0],
        }
    }

    fn ensure(&mut self, x: u64) -> Result<()> {
        if x > MAX_ORDER_VALUE {
            return Err(Error::TooLarge(format!(
                "order lookup of {x} exceeds tabulation limit {MAX_ORDER_VALUE}"
            )));
        }
        let target = x as usize;
        self.orders.reserve((target + 1).saturating_sub(self.orders.len()));
        while self.orders.len() <= target {
            let v = self.orders.len() as u64;
            let ord = if self.semigroup.contains_u(v) {
                self.semigroup
                    .generators
                    .iter()
                    .take_while(|&&g| g <= v)
                    .map(|&g| self.orders[(v - g) as usize])
                    .filter(|&o| o != NO_ORDER)
                    .max()
                    .map_or(NO_ORDER, |o| o + 1)
            } else {
                NO_ORDER
            };
            self.orders.push(ord);
        }
        Ok(())
    }

    /// Order of `x`, or `None` when `x` is not in the semigroup.
    pub fn get(&mut self, x: u64) -> Result<Option<u32>> {
        self.ensure(x)?;
        let o = self.orders[x as usize];
        Ok((o != NO_ORDER).then_some(o))
    }
}
