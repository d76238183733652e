//! Brute-force reference computations.
//!
//! Nothing here calls the residue-class relaxation, the order tables or the
//! Apéry-table construction; only the generator list is taken from the
//! semigroup. Slow by intent.

use crate::error::{Error, Result};
use crate::semigroup::{AperySet, NumericalSemigroup};

/// `reachable[x]` is true iff `x <= bound` is a non-negative combination of `gens`.
pub fn reachable(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut r = vec![false; bound + 1];
    r[0] = true;
    for x in 1..=bound {
        r[x] = gens
            .iter()
            .any(|&g| g as usize <= x && r[x - g as usize]);
    }
    r
}

/// Largest integer outside the semigroup, found by scanning for `a1`
/// consecutive members; `-1` for N.
pub fn brute_frobenius(gens: &[u64]) -> i64 {
    let a1 = *gens.iter().min().expect("nonempty") as usize;
    let max = *gens.iter().max().expect("nonempty") as usize;
    // Frobenius number < a1 * max for gcd-1 generator sets.
    let r = reachable(gens, a1 * max + a1);
    let mut last_gap: i64 = -1;
    let mut run = 0;
    for (x, &inside) in r.iter().enumerate() {
        if inside {
            run += 1;
            if run == a1 {
                break;
            }
        } else {
            last_gap = x as i64;
            run = 0;
        }
    }
    last_gap
}

/// Apéry set by scanning `0..=a * max_gen`. An Apéry element has a
/// factorization with fewer than `a` summands (otherwise two partial sums
/// agree mod `a` and their difference could be removed), so the bound covers
/// every class.
pub fn brute_apery(semigroup: &NumericalSemigroup, a: u64) -> Result<AperySet> {
    let gens = semigroup.generators();
    let max = *gens.last().expect("nonempty");
    let bound = (a * max) as usize;
    let r = reachable(gens, bound.max(a as usize));
    if a == 0 || !r[a as usize] {
        return Err(Error::NotInSemigroup(a as i64));
    }
    let m = a as usize;
    let mut best = vec![None; m];
    for (x, &inside) in r.iter().enumerate() {
        if inside && best[x % m].is_none() {
            best[x % m] = Some(x as u64);
        }
    }
    Ok(AperySet::from_elements(
        a,
        best.into_iter().map(|b| b.expect("every class is reached within the bound")),
    ))
}

fn longest(gens: &[u64], idx: usize, rest: u64, used: u64, best: &mut Option<u64>) {
    let g = gens[idx];
    if idx + 1 == gens.len() {
        if rest.is_multiple_of(g) {
            let total = used + rest / g;
            if best.is_none_or(|b| total > b) {
                *best = Some(total);
            }
        }
        return;
    }
    let mut c = 0;
    while c * g <= rest {
        longest(gens, idx + 1, rest - c * g, used + c, best);
        c += 1;
    }
}

/// Maximal factorization length, by enumerating every coefficient vector.
pub fn brute_order(semigroup: &NumericalSemigroup, x: u64) -> Result<u32> {
    let mut best = None;
    longest(semigroup.generators(), 0, x, 0, &mut best);
    best.map(|b| b as u32).ok_or(Error::NotInSemigroup(x as i64))
}

/// Fixed-width bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn unset(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// `self |= other << shift`, truncated to `len`.
    fn or_shifted(&mut self, other: &Bits, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        for i in (ws..self.words.len()).rev() {
            let src = i - ws;
            let mut v = other.words[src] << bs;
            if bs > 0 && src > 0 {
                v |= other.words[src - 1] >> (64 - bs);
            }
            self.words[i] |= v;
        }
        let tail = self.len % 64;
        if tail > 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << tail) - 1;
        }
    }

    /// Elements of `self` missing from `other`.
    fn count_minus(&self, other: &Bits) -> u64 {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as u64)
            .sum()
    }
}

/// The ideals `0M = S, M, 2M, ..., kM` built as explicit sumsets inside a
/// finite window.
///
/// The window is `[0, (k+1)*a1 + F + 1)`. Any `x > n*a1 + F` satisfies
/// `x - n*a1 > F`, so `x - n*a1` lies in S and `x` lies in `nM`; every
/// element of `nM \ (n+1)M` and every per-class minimum of `nM` (for `n <= k`)
/// is therefore inside the window, and truncating the sumsets loses nothing
/// below it because all summands are non-negative.
#[derive(Debug, Clone)]
pub struct IdealPowers {
    multiplicity: usize,
    window: usize,
    powers: Vec<Bits>,
}

impl IdealPowers {
    pub fn new(semigroup: &NumericalSemigroup, max_power: usize) -> Self {
        let gens = semigroup.generators();
        let a1 = gens[0] as usize;
        let frob = brute_frobenius(gens);
        let window = ((max_power + 1) * a1) as i64 + frob + 1;
        let window = window.max(1) as usize + 1;

        let r = reachable(gens, window - 1);
        let mut whole = Bits::new(window);
        for (x, _) in r.iter().enumerate().filter(|(_, &b)| b) {
            whole.set(x);
        }
        let mut maximal = whole.clone();
        maximal.unset(0);
        let m_elems: Vec<usize> = maximal.ones().collect();

        let mut powers = vec![whole, maximal.clone()];
        for _ in 2..=max_power + 1 {
            let prev = powers.last().expect("nonempty");
            let mut next = Bits::new(window);
            for &x in &m_elems {
                next.or_shifted(prev, x);
            }
            powers.push(next);
        }
        Self {
            multiplicity: a1,
            window,
            powers,
        }
    }

    /// Largest ideal power available.
    pub fn max_power(&self) -> usize {
        self.powers.len() - 2
    }

    /// Membership of `x` in `nM`; values past the window are members.
    pub fn contains(&self, n: usize, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as usize;
        x >= self.window || self.powers[n].get(x)
    }

    /// `#(nM \ (n+1)M)` for `n <= max_power()`.
    pub fn hilbert(&self, n: usize) -> u64 {
        self.powers[n].count_minus(&self.powers[n + 1])
    }

    /// Smallest element of `nM` congruent to `residue` mod the multiplicity.
    pub fn min_in_class(&self, n: usize, residue: u64) -> u64 {
        let start = residue as usize % self.multiplicity;
        (start..self.window)
            .step_by(self.multiplicity)
            .find(|&x| self.powers[n].get(x))
            .expect("class minimum lies inside the window") as u64
    }
}

/// `#(nM \ (n+1)M)` from explicit sumsets.
pub fn brute_hilbert_function(semigroup: &NumericalSemigroup, n: usize) -> u64 {
    IdealPowers::new(semigroup, n).hilbert(n)
}

/// `brute_hilbert_function` for every `n` in `0..=upto`, sharing the sumsets.
pub fn brute_hilbert_values(semigroup: &NumericalSemigroup, upto: usize) -> Vec<u64> {
    let powers = IdealPowers::new(semigroup, upto);
    (0..=upto).map(|n| powers.hilbert(n)).collect()
}
