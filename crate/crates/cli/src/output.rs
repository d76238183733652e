//! Payloads for each subcommand, rendered as text or JSON.

use std::fmt::Write as _;

use apery::{
    AperyTable, Block, ConeDecomposition, Family, FamilyParams, HilbertSeries, LadderProfile,
    NumericalSemigroup, OrderTable, Result, VerificationReport,
};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// A rendered result: the JSON value and its text form.
pub struct Document {
    json: Value,
    text: String,
    passed: bool,
}

impl Document {
    fn new(payload: &impl Serialize, text: String) -> Self {
        Self {
            json: serde_json::to_value(payload).expect("payloads serialize"),
            text,
            passed: true,
        }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    /// JSON goes through [`Value`], so re-parsing and re-rendering the output
    /// reproduces it byte for byte.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
        }
    }
}

#[derive(Serialize)]
struct Header {
    generators: Vec<u64>,
    multiplicity: u64,
    embedding_dimension: usize,
}

impl Header {
    fn of(s: &NumericalSemigroup) -> Self {
        Self {
            generators: s.generators().to_vec(),
            multiplicity: s.multiplicity(),
            embedding_dimension: s.embedding_dimension(),
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn write_grid(out: &mut String, header: &[u64], rows: &[Vec<u64>]) {
    let width = rows
        .iter()
        .flatten()
        .chain(header)
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let line = |cells: &[u64]| join(cells.iter().map(|v| format!("{v:>width$}")), " ");
    let _ = writeln!(out, "  n | {}", line(header));
    let _ = writeln!(out, "  --+-{}", "-".repeat(header.len() * (width + 1)));
    for (n, row) in rows.iter().enumerate() {
        let _ = writeln!(out, "{n:>3} | {}", line(row));
    }
}

#[derive(Serialize)]
struct AperyEntry {
    element: u64,
    order: u32,
}

#[derive(Serialize)]
struct AperyPayload {
    #[serde(flatten)]
    header: Header,
    frobenius: i64,
    modulus: u64,
    apery: Vec<AperyEntry>,
}

pub fn apery(s: &NumericalSemigroup, a: u64) -> Result<Document> {
    let set = s.apery_set(a)?;
    let mut orders = OrderTable::new(s);
    let apery = set
        .elements
        .iter()
        .map(|&w| {
            Ok(AperyEntry {
                element: w,
                order: orders.get(w)?.expect("Apéry elements lie in the semigroup"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let payload = AperyPayload {
        header: Header::of(s),
        frobenius: s.frobenius()?,
        modulus: a,
        apery,
    };
    let mut text = String::new();
    let _ = writeln!(
        text,
        "semigroup {s}  multiplicity {}  embedding dimension {}  Frobenius number {}",
        payload.header.multiplicity, payload.header.embedding_dimension, payload.frobenius
    );
    let _ = writeln!(text, "Apéry set with respect to {a} ({} elements):", set.len());
    let _ = writeln!(text, "{:>12} {:>6}", "element", "order");
    for e in &payload.apery {
        let _ = writeln!(text, "{:>12} {:>6}", e.element, e.order);
    }
    Ok(Document::new(&payload, text))
}

#[derive(Serialize)]
struct TablePayload {
    #[serde(flatten)]
    header: Header,
    reduction_number: usize,
    column_keys: Vec<u64>,
    table: Vec<Vec<u64>>,
}

pub fn table(s: &NumericalSemigroup) -> Result<Document> {
    let t = AperyTable::new(s)?;
    let payload = TablePayload {
        header: Header::of(s),
        reduction_number: t.reduction_number(),
        column_keys: t.column_keys().to_vec(),
        table: t.rows().to_vec(),
    };
    let mut text = String::new();
    let _ = writeln!(
        text,
        "Apéry table of {s}  multiplicity {}  reduction number {}",
        payload.header.multiplicity, payload.reduction_number
    );
    write_grid(&mut text, &payload.column_keys, &payload.table);
    Ok(Document::new(&payload, text))
}

#[derive(Serialize)]
struct BlockColumns {
    caption: String,
    columns: Vec<u64>,
    orders: Vec<u32>,
}

impl BlockColumns {
    fn of(b: &Block) -> Self {
        Self {
            caption: b.caption.clone(),
            columns: b.elements.iter().map(|e| e.value).collect(),
            orders: b.elements.iter().map(|e| e.order).collect(),
        }
    }
}

#[derive(Serialize)]
struct BlockTablePayload {
    family: Family,
    parameter: u64,
    #[serde(flatten)]
    header: Header,
    reduction_number: usize,
    blocks: Vec<BlockColumns>,
    column_keys: Vec<u64>,
    table: Vec<Vec<u64>>,
}

fn block_table_payload(params: &FamilyParams) -> Result<BlockTablePayload> {
    let s = params.semigroup()?;
    let ft = params.table_closed_form()?;
    let keys = ft.table.column_keys();
    Ok(BlockTablePayload {
        family: params.family(),
        parameter: params.parameter(),
        header: Header::of(&s),
        reduction_number: ft.table.reduction_number(),
        blocks: ft.blocks.iter().map(BlockColumns::of).collect(),
        column_keys: ft.block_order.iter().map(|&c| keys[c]).collect(),
        table: ft.rows_in_block_order(),
    })
}

fn write_blocks(out: &mut String, payload: &BlockTablePayload) {
    let mut start = 0;
    for block in &payload.blocks {
        let width = block.columns.len();
        let rows: Vec<Vec<u64>> = payload
            .table
            .iter()
            .map(|row| row[start..start + width].to_vec())
            .collect();
        let _ = writeln!(out, "block {} (orders {})", block.caption, join(&block.orders, " "));
        write_grid(out, &block.columns, &rows);
        start += width;
    }
}

pub fn block_table(params: &FamilyParams) -> Result<Document> {
    let payload = block_table_payload(params)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "Apéry table of {} {} = <{}>  reduction number {}",
        payload.family,
        payload.parameter,
        join(&payload.header.generators, ","),
        payload.reduction_number
    );
    write_blocks(&mut text, &payload);
    Ok(Document::new(&payload, text))
}

#[derive(Serialize)]
struct LadderEntry {
    column: u64,
    index: usize,
    values: Vec<u64>,
    landings: Vec<[usize; 2]>,
    p: usize,
    d: usize,
    b: Vec<usize>,
    c: Vec<usize>,
}

impl LadderEntry {
    fn of(p: &LadderProfile) -> Self {
        Self {
            column: p.column_key,
            index: p.column_index,
            values: p.values.clone(),
            landings: p.landings.iter().map(|l| [l.start, l.end]).collect(),
            p: p.p,
            d: p.d,
            b: p.b_list.clone(),
            c: p.c_list.clone(),
        }
    }
}

#[derive(Serialize)]
struct LaddersPayload {
    #[serde(flatten)]
    header: Header,
    reduction_number: usize,
    profiles: Vec<LadderEntry>,
}

pub fn ladders(s: &NumericalSemigroup) -> Result<Document> {
    let t = AperyTable::new(s)?;
    let payload = LaddersPayload {
        header: Header::of(s),
        reduction_number: t.reduction_number(),
        profiles: apery::ladder_profiles(&t).iter().map(LadderEntry::of).collect(),
    };
    let mut text = String::new();
    let _ = writeln!(
        text,
        "ladders of {s}  reduction number {}",
        payload.reduction_number
    );
    for l in &payload.profiles {
        let landings = join(l.landings.iter().map(|[a, b]| format!("[{a},{b}]")), " ");
        let _ = writeln!(
            text,
            "column {:>4} (w={}): values {}  landings {}  p={} d={} b=[{}] c=[{}]",
            l.index,
            l.column,
            join(&l.values, " "),
            if landings.is_empty() { "none".into() } else { landings },
            l.p,
            l.d,
            join(&l.b, ","),
            join(&l.c, ","),
        );
    }
    Ok(Document::new(&payload, text))
}

#[derive(Serialize)]
struct Decomposition {
    free_shifts: Vec<usize>,
    torsion: Vec<[usize; 2]>,
}

impl Decomposition {
    fn of(dec: &ConeDecomposition) -> Self {
        Self {
            free_shifts: dec.free_shifts.clone(),
            torsion: dec.torsion.iter().map(|&(b, c)| [b, c]).collect(),
        }
    }
}

/// `{0, 1×3, 2×5}`: each shift with its multiplicity when above one.
fn shift_summary(dec: &ConeDecomposition) -> String {
    let parts = dec.free_histogram().into_iter().map(|(shift, count)| {
        if count == 1 {
            shift.to_string()
        } else {
            format!("{shift}×{count}")
        }
    });
    format!("{{{}}}", join(parts, ", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_decomposition(out: &mut String, dec: &ConeDecomposition) {
    let _ = writeln!(out, "free summand shifts: {}", shift_summary(dec));
    let torsion = join(dec.torsion.iter().map(|(b, c)| format!("(b={b}, c={c})")), ", ");
    let _ = writeln!(
        out,
        "torsion summands: {}",
        if torsion.is_empty() { "none".into() } else { torsion }
    );
}

#[derive(Serialize)]
struct ConePayload {
    #[serde(flatten)]
    header: Header,
    reduction_number: usize,
    decomposition: Decomposition,
    free: bool,
    cohen_macaulay: bool,
}

pub fn cone(s: &NumericalSemigroup) -> Result<Document> {
    let t = AperyTable::new(s)?;
    let dec = ConeDecomposition::from_table(&t);
    let payload = ConePayload {
        header: Header::of(s),
        reduction_number: t.reduction_number(),
        decomposition: Decomposition::of(&dec),
        free: dec.is_free(),
        cohen_macaulay: dec.is_free(),
    };
    let mut text = String::new();
    let _ = writeln!(text, "tangent cone of {s} over the fiber cone");
    write_decomposition(&mut text, &dec);
    let _ = writeln!(text, "free: {}", yes_no(payload.free));
    let _ = writeln!(text, "Cohen-Macaulay: {}", yes_no(payload.cohen_macaulay));
    Ok(Document::new(&payload, text))
}

#[derive(Serialize)]
struct Series {
    numerator: Vec<i64>,
    denominator: [i64; 2],
    /// `H(0..r+5)`.
    values: Vec<u64>,
}

impl Series {
    fn of(series: &HilbertSeries, t: &AperyTable) -> Self {
        Self {
            numerator: series.numerator.clone(),
            denominator: [1, -1],
            values: (0..t.reduction_number() + 5).map(|n| t.hilbert_function(n)).collect(),
        }
    }
}

fn polynomial(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        let abs = c.unsigned_abs();
        match (k, abs) {
            (0, _) => {
                let _ = write!(out, "{abs}");
            }
            (_, 1) => {}
            _ => {
                let _ = write!(out, "{abs}");
            }
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => {
                let _ = write!(out, "x^{k}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Serialize)]
struct HilbertPayload {
    #[serde(flatten)]
    header: Header,
    reduction_number: usize,
    hilbert: Series,
    cohen_macaulay: bool,
}

pub fn hilbert(s: &NumericalSemigroup) -> Result<Document> {
    let t = AperyTable::new(s)?;
    let dec = ConeDecomposition::from_table(&t);
    let r = t.reduction_number();
    let payload = HilbertPayload {
        header: Header::of(s),
        reduction_number: r,
        hilbert: Series::of(&dec.hilbert_series(), &t),
        cohen_macaulay: dec.is_free(),
    };
    let mut text = String::new();
    let _ = writeln!(
        text,
        "Hilbert series of the tangent cone of {s}: ({})/(1 - x)",
        polynomial(&payload.hilbert.numerator)
    );
    let _ = writeln!(
        text,
        "H(n) for n = 0..{}: {}",
        r + 4,
        join(&payload.hilbert.values, " ")
    );
    let _ = writeln!(text, "Cohen-Macaulay: {}", yes_no(payload.cohen_macaulay));
    Ok(Document::new(&payload, text))
}

#[derive(Serialize)]
struct CensusEntry {
    order: u32,
    count: u64,
}

#[derive(Serialize)]
struct FamilyPayload {
    #[serde(flatten)]
    table: BlockTablePayload,
    census: Vec<CensusEntry>,
    decomposition: Decomposition,
    hilbert: Series,
    unique_factorizations: bool,
    free: bool,
    cohen_macaulay: bool,
}

pub fn family(params: &FamilyParams) -> Result<Document> {
    let table = block_table_payload(params)?;
    let census = params.census_closed_form();
    let s = params.semigroup()?;
    let generic = AperyTable::new(&s)?;
    let dec = ConeDecomposition::from_table(&generic);
    let payload = FamilyPayload {
        table,
        census: census
            .counts
            .iter()
            .map(|(&order, &count)| CensusEntry { order, count })
            .collect(),
        decomposition: Decomposition::of(&dec),
        hilbert: Series::of(&dec.hilbert_series(), &generic),
        unique_factorizations: params.verify_uniqueness(apery::Execution::Parallel)?,
        free: dec.is_free(),
        cohen_macaulay: dec.is_free(),
    };

    let mut text = String::new();
    let _ = writeln!(
        text,
        "{} {} = <{}>  multiplicity {}  reduction number {}",
        params.family(),
        params.parameter(),
        join(&payload.table.header.generators, ","),
        payload.table.header.multiplicity,
        payload.table.reduction_number
    );
    let _ = writeln!(
        text,
        "non-zero Apéry elements by order: {{{}}} (total {})",
        join(census.dense(), ","),
        census.total()
    );
    write_blocks(&mut text, &payload.table);
    write_decomposition(&mut text, &dec);
    let _ = writeln!(
        text,
        "Hilbert series: ({})/(1 - x)",
        polynomial(&payload.hilbert.numerator)
    );
    let _ = writeln!(
        text,
        "unique factorization of Apéry elements: {}",
        yes_no(payload.unique_factorizations)
    );
    let _ = writeln!(text, "Cohen-Macaulay: {}", yes_no(payload.cohen_macaulay));
    Ok(Document::new(&payload, text))
}

#[derive(Serialize)]
struct VerifyPayload {
    reports: Vec<VerificationReport>,
    checks: usize,
    failed_checks: usize,
    passed: bool,
}

pub fn verify(reports: Vec<VerificationReport>) -> Document {
    let checks = reports.iter().map(|r| r.checks.len()).sum();
    let failed_checks = reports.iter().map(|r| r.failed().count()).sum();
    let payload = VerifyPayload {
        reports,
        checks,
        failed_checks,
        passed: failed_checks == 0,
    };
    let mut text = String::new();
    for r in &payload.reports {
        let _ = writeln!(text, "== {} <{}>", r.subject, join(&r.generators, ","));
        for c in &r.checks {
            if c.pass {
                let _ = writeln!(text, "  PASS {}", c.name);
            } else {
                let _ = writeln!(
                    text,
                    "  FAIL {}: expected {}, got {}",
                    c.name, c.expected, c.actual
                );
            }
        }
        for d in &r.formula_deltas {
            let _ = writeln!(text, "  delta [{}] {}", d.code, d.note);
        }
    }
    let _ = writeln!(
        text,
        "{} reports, {} checks, {} failed",
        payload.reports.len(),
        payload.checks,
        payload.failed_checks
    );
    let mut doc = Document::new(&payload, text);
    doc.passed = payload.passed;
    doc
}
