//! Cross-checks of the generic algorithms against the brute-force oracle and,
//! for family members, against the closed forms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::cone::{ladder_profiles, ConeDecomposition};
use crate::error::{Error, Result};
use crate::families::{Family, FamilyParams, OrderCensus};
use crate::oracle::{brute_apery, brute_order, IdealPowers};
use crate::par::Execution;
use crate::semigroup::{NumericalSemigroup, OrderTable};
use crate::table::AperyTable;

/// Generators above this make the oracle too slow.
pub const MAX_VERIFY_GENERATOR: u64 = 500;

const SUMMARY_LIMIT: usize = 160;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// A place where a printed closed formula disagrees with the computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaDelta {
    pub code: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub generators: Vec<u64>,
    pub family: Option<Family>,
    pub parameter: Option<u64>,
    pub free: bool,
    pub cohen_macaulay: bool,
    pub checks: Vec<Check>,
    pub formula_deltas: Vec<FormulaDelta>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn delta(&self, code: &str) -> Option<&FormulaDelta> {
        self.formula_deltas.iter().find(|d| d.code == code)
    }
}

fn summarize<T: Debug>(v: &T) -> String {
    let s = format!("{v:?}");
    if s.chars().count() <= SUMMARY_LIMIT {
        s
    } else {
        let head: String = s.chars().take(SUMMARY_LIMIT).collect();
        format!("{head}...")
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: PartialEq + Debug>(&mut self, name: impl Into<String>, expected: &T, actual: &T) {
        self.0.push(Check {
            name: name.into(),
            expected: summarize(expected),
            actual: summarize(actual),
            pass: expected == actual,
        });
    }
}

/// Runs every generic-vs-oracle comparison, plus the closed-form comparisons
/// when the semigroup is a Bresinsky or Arslan member.
pub fn full_verify(semigroup: &NumericalSemigroup, exec: Execution) -> Result<VerificationReport> {
    if let Some(&g) = semigroup.generators().iter().find(|&&g| g > MAX_VERIFY_GENERATOR) {
        return Err(Error::TooLarge(format!(
            "generator {g} exceeds the verification limit {MAX_VERIFY_GENERATOR}"
        )));
    }
    let a1 = semigroup.multiplicity();
    let mut checks = Checks::default();

    let apery = semigroup.apery_set(a1)?;
    checks.eq(
        "apery set: relaxation vs brute scan",
        &brute_apery(semigroup, a1)?.elements,
        &apery.elements,
    );

    let table = AperyTable::new(semigroup)?;
    let r = table.reduction_number();
    checks.eq("apery table row 0 equals apery set", &apery.elements, &table.rows()[0]);

    let powers = IdealPowers::new(semigroup, r + 3);
    let keys = table.column_keys().to_vec();
    let brute_rows: Vec<Vec<u64>> = (0..=r + 2)
        .map(|n| keys.iter().map(|&k| powers.min_in_class(n, k)).collect())
        .collect();
    checks.eq(
        "apery table rows are the class minima of nM (brute sumsets)",
        &brute_rows[..=r].to_vec(),
        &table.rows().to_vec(),
    );
    let brute_r = (1..=r + 1)
        .find(|&n| brute_rows[n].iter().zip(&brute_rows[n + 1]).all(|(a, b)| a + a1 == *b))
        .unwrap_or(usize::MAX);
    checks.eq("reduction number: table vs brute sumsets", &brute_r, &r);

    // Orders of every distinct table value.
    let values: Vec<u64> = table
        .rows()
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut orders = OrderTable::new(semigroup);
    let generic: Vec<u32> = values
        .iter()
        .map(|&v| orders.get(v).map(|o| o.unwrap_or(u32::MAX)))
        .collect::<Result<_>>()?;
    let brute: Vec<u32> = exec.map(&values, |&v| brute_order(semigroup, v).unwrap_or(u32::MAX));
    checks.eq(
        format!("orders of {} table entries: memoized vs enumeration", values.len()),
        &brute,
        &generic,
    );
    let order_of: BTreeMap<u64, u32> = values.iter().copied().zip(generic).collect();
    let apery_orders: Vec<u32> = apery.elements.iter().map(|w| order_of[w]).collect();

    let profiles = ladder_profiles(&table);
    let dec = ConeDecomposition::from_profiles(&profiles);
    let series = dec.hilbert_series();
    let horizon = r + 3;
    let from_series: Vec<i64> = (0..=horizon).map(|n| series.coefficient(n)).collect();
    let from_table: Vec<i64> = (0..=horizon).map(|n| table.hilbert_function(n) as i64).collect();
    let from_sumsets: Vec<i64> = (0..=horizon).map(|n| powers.hilbert(n) as i64).collect();
    checks.eq("hilbert function: series vs brute sumsets", &from_sumsets, &from_series);
    checks.eq("hilbert function: apery table vs brute sumsets", &from_sumsets, &from_table);
    checks.eq(
        "hilbert function equals multiplicity from r on",
        &vec![a1 as i64; 4],
        &from_sumsets[r..=horizon].to_vec(),
    );
    checks.eq("numerator at 1 equals multiplicity", &(a1 as i64), &series.numerator_at_one());
    checks.eq("free summand count equals multiplicity", &(a1 as usize), &dec.free_shifts.len());

    let free = dec.is_free();
    if free {
        let census = OrderCensus::from_orders(apery_orders.iter().copied());
        let shifts = OrderCensus::from_orders(dec.free_shifts.iter().map(|&s| s as u32));
        checks.eq("free shift histogram equals apery order census", &census, &shifts);
        let d: Vec<u32> = profiles.iter().map(|p| p.d as u32).collect();
        checks.eq("last landing ends at the column's order", &apery_orders[1..].to_vec(), &d);
    }

    let params = FamilyParams::recognize(semigroup);
    let mut deltas = Vec::new();
    if let Some(params) = params {
        family_checks(&mut checks, &params, &table, &mut orders, &apery_orders, free, exec)?;
        deltas = formula_deltas(&params, &series.numerator, &dec);
    }

    Ok(VerificationReport {
        subject: semigroup.to_string(),
        generators: semigroup.generators().to_vec(),
        family: params.map(|p| p.family()),
        parameter: params.map(|p| p.parameter()),
        free,
        cohen_macaulay: free,
        checks: checks.0,
        formula_deltas: deltas,
    })
}

fn family_checks(
    checks: &mut Checks,
    params: &FamilyParams,
    table: &AperyTable,
    orders: &mut OrderTable<'_>,
    apery_orders: &[u32],
    free: bool,
    exec: Execution,
) -> Result<()> {
    let closed = params.apery_closed_form();
    checks.eq(
        "closed-form apery set vs generic",
        &closed.elements,
        &table.column_keys().to_vec(),
    );
    checks.eq(
        "closed-form apery set cardinality",
        &(params.multiplicity() as usize),
        &closed.len(),
    );
    let closed_table = params.table_closed_form()?;
    checks.eq(
        "closed-form apery table vs generic",
        &closed_table.table.rows().to_vec(),
        &table.rows().to_vec(),
    );
    checks.eq(
        "reduction number equals closed form",
        &params.reduction_number(),
        &table.reduction_number(),
    );
    let closed_orders = params.orders_closed_form();
    let a1 = params.multiplicity();
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for (&w, &o) in &closed_orders {
        for k in 0..=3u32 {
            expected.push((w, k, o + k));
            computed.push((w, k, orders.get(w + k as u64 * a1)?.unwrap_or(u32::MAX)));
        }
    }
    checks.eq(
        "closed-form orders vs generic",
        &closed_orders,
        &computed
            .iter()
            .filter(|&&(_, k, _)| k == 0)
            .map(|&(w, _, o)| (w, o))
            .collect::<BTreeMap<u64, u32>>(),
    );
    checks.eq("order of w + k*a1 is ord(w) + k for k <= 3", &expected, &computed);

    checks.eq(
        "closed-form census vs generic order histogram",
        &params.census_closed_form(),
        &OrderCensus::from_orders(apery_orders.iter().copied()),
    );
    checks.eq(
        "every apery element has a unique factorization",
        &true,
        &params.verify_uniqueness(exec)?,
    );
    checks.eq("tangent cone is free (cohen-macaulay)", &true, &free);
    Ok(())
}

/// Numerator printed alongside the family's Hilbert series, index = degree.
pub fn printed_numerator(params: &FamilyParams) -> Vec<i64> {
    let top = params.reduction_number();
    let mut out = vec![0i64; top + 1];
    for (k, c) in out.iter_mut().enumerate().take(top).skip(1) {
        *c = match params.family() {
            Family::Bresinsky => 2 * k as i64 + 1,
            Family::Arslan => 2 * k as i64 - 1,
        };
    }
    out[top] = top as i64;
    out
}

/// Free summands printed in the family's decomposition, as
/// `(generator degree, rank)` pairs.
pub fn printed_free_summands(params: &FamilyParams) -> Vec<(i64, u64)> {
    let top = params.reduction_number() as i64;
    let mut out: Vec<(i64, u64)> = (1..top)
        .map(|k| match params.family() {
            Family::Bresinsky => (k, 2 * k as u64 + 1),
            Family::Arslan => (k, 2 * top as u64 - 1),
        })
        .collect();
    match params.family() {
        // written with shift +(2h-1), i.e. a generator in degree -(2h-1)
        Family::Bresinsky => out.push((-top, top as u64)),
        Family::Arslan => out.push((top, top as u64)),
    }
    out
}

/// Compares printed closed formulas with the computed numerator and decomposition.
pub fn formula_deltas(
    params: &FamilyParams,
    numerator: &[i64],
    dec: &ConeDecomposition,
) -> Vec<FormulaDelta> {
    let mut out = Vec::new();
    let printed = printed_numerator(params);
    let at = |v: &[i64], k: usize| v.get(k).copied().unwrap_or(0);

    if at(&printed, 0) != at(numerator, 0) {
        out.push(FormulaDelta {
            code: "hilbert-constant-term".into(),
            note: format!(
                "printed Hilbert-series numerator has constant term {}; computed numerator has {} \
                 (the order-0 Apery element 0 contributes x^0)",
                at(&printed, 0),
                at(numerator, 0)
            ),
        });
    }

    let len = printed.len().max(numerator.len());
    let differing: Vec<usize> = (1..len).filter(|&k| at(&printed, k) != at(numerator, k)).collect();
    if !differing.is_empty() {
        let pairs: Vec<String> = differing
            .iter()
            .map(|&k| format!("x^{k}: printed {} vs computed {}", at(&printed, k), at(numerator, k)))
            .collect();
        let odd_pattern = differing.iter().all(|&k| {
            at(&printed, k) == 2 * k as i64 - 1 && at(numerator, k) == 2 * k as i64 + 1
        });
        let pattern = if odd_pattern {
            "; printed coefficients follow 2k-1 while the order census (total row of the order \
             table) gives 2k+1"
        } else {
            ""
        };
        out.push(FormulaDelta {
            code: "hilbert-coefficients".into(),
            note: format!("numerator coefficients differ at {}{pattern}", pairs.join(", ")),
        });
    }

    let computed: Vec<(i64, u64)> = dec
        .free_histogram()
        .into_iter()
        .map(|(s, c)| (s as i64, c as u64))
        .collect();
    let printed_free = printed_free_summands(params);
    if !printed_free.iter().any(|&(s, _)| s == 0) && computed.first().map(|p| p.0) == Some(0) {
        out.push(FormulaDelta {
            code: "decomposition-degree-zero".into(),
            note: "printed decomposition omits the rank-1 free summand generated in degree 0"
                .into(),
        });
    }
    for &(deg, rank) in printed_free.iter().filter(|p| p.0 < 0) {
        if computed.contains(&(-deg, rank)) {
            out.push(FormulaDelta {
                code: "decomposition-shift-sign".into(),
                note: format!(
                    "printed top summand has shift +{} (generator degree {deg}); computed rank-{rank} \
                     summand is generated in degree {}",
                    -deg, -deg
                ),
            });
        }
    }
    let rank_diffs: Vec<String> = printed_free
        .iter()
        .filter(|p| p.0 > 0)
        .filter_map(|&(deg, rank)| {
            let got = computed.iter().find(|p| p.0 == deg).map_or(0, |p| p.1);
            (got != rank).then(|| format!("degree {deg}: printed rank {rank} vs computed {got}"))
        })
        .collect();
    if !rank_diffs.is_empty() {
        out.push(FormulaDelta {
            code: "decomposition-ranks".into(),
            note: format!("free summand ranks differ at {}", rank_diffs.join(", ")),
        });
    }
    out
}

/// Verifies every family member with parameter in `range`; output follows parameter order.
pub fn verify_family_range(
    family: Family,
    range: RangeInclusive<u64>,
    exec: Execution,
) -> Result<Vec<VerificationReport>> {
    let params: Vec<FamilyParams> = range
        .map(|p| FamilyParams::new(family, p))
        .collect::<Result<_>>()?;
    exec.map(&params, |p| full_verify(&p.semigroup()?, exec))
        .into_iter()
        .collect()
}
