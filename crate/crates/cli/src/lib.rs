//! Command implementations behind the `tempered-atlas` binary. Each command
//! returns its full output as a string, or a [`Failure`] carrying the exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use tempered_atlas::group::{self, serialize_descriptor, validate};
use tempered_atlas::krep::{self, IrreducibleKType, WeightMultiset};
use tempered_atlas::matching::{match_inverse, summarize, summarize_datum, ComponentSummary};
use tempered_atlas::vogan::enumerate_norm_sq;
use tempered_atlas::weight::{format_rational, parse_rational, Weight, Q};
use tempered_atlas::{Error, RealFormDescriptor, CATALOG_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_AMBIGUOUS: i32 = 4;
pub const EXIT_RANGE: i32 = 5;

/// Environment variable holding extra descriptor directories.
pub const SEARCH_PATH_VAR: &str = "TEMPERED_ATLAS_PATH";

/// Widest figure axis accepted.
pub const MAX_FIGURE_SPAN: i64 = 400;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = exit_code(&e);
        let message = if code == EXIT_INTERNAL { format!("internal invariant failure: {e}") } else { e.to_string() };
        Failure { code, message }
    }
}

pub type CmdResult = Result<String, Failure>;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        e if e.is_internal() => EXIT_INTERNAL,
        Error::AmbiguousPositiveSystem { .. } => EXIT_AMBIGUOUS,
        _ => EXIT_INPUT,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A file path if one exists, then the built-in catalog, then
/// `<name>.toml` in each directory of the search path.
pub fn resolve_group(name_or_path: &str) -> Result<RealFormDescriptor, Failure> {
    let search = std::env::var_os(SEARCH_PATH_VAR)
        .map(|v| std::env::split_paths(&v).collect::<Vec<_>>())
        .unwrap_or_default();
    resolve_group_in(name_or_path, &search)
}

pub fn resolve_group_in(name_or_path: &str, search: &[PathBuf]) -> Result<RealFormDescriptor, Failure> {
    let path = Path::new(name_or_path);
    if path.is_file() {
        return Ok(group::load_descriptor(path)?);
    }
    if CATALOG_NAMES.contains(&name_or_path) {
        return Ok(group::catalog(name_or_path)?);
    }
    for dir in search {
        let candidate = dir.join(format!("{name_or_path}.toml"));
        if candidate.is_file() {
            return Ok(group::load_descriptor(candidate)?);
        }
    }
    Err(Error::UnknownGroup(name_or_path.to_string()).into())
}

pub fn parse_weight(s: &str) -> Result<Weight, Failure> {
    Ok(s.parse::<Weight>()?)
}

/// Weight without spaces: `1/2` in rank one, `(1/2,-1/2)` otherwise.
pub fn compact(w: &Weight) -> String {
    let parts: Vec<String> = w.coords().iter().map(format_rational).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(","))
    }
}

fn compact_list(ws: &[Weight]) -> String {
    ws.iter().map(compact).collect::<Vec<_>>().join(" ")
}

fn coords(w: &Weight) -> Vec<String> {
    w.coords().iter().map(format_rational).collect()
}

pub fn cmd_catalog(name: Option<&str>) -> CmdResult {
    match name {
        Some(n) => Ok(serialize_descriptor(&resolve_group(n)?)),
        None => {
            let mut out = String::new();
            for n in CATALOG_NAMES {
                let d = group::catalog(n)?;
                writeln!(
                    out,
                    "{n}\trank_tc={} rank_g={} compact={} noncompact={} m0={}",
                    d.rank_tc(),
                    d.rank_g(),
                    d.compact_roots().len(),
                    d.noncompact_weights().len(),
                    d.zero_weight_s_dim()
                )
                .unwrap();
            }
            Ok(out)
        }
    }
}

pub fn cmd_validate(path: &Path) -> CmdResult {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    let d = match group::parse_descriptor(&text) {
        Ok(d) => d,
        Err(Error::Validation(report)) => return Err(Failure::new(EXIT_INPUT, report.to_string())),
        Err(e) => return Err(e.into()),
    };
    let report = validate(&d);
    if report.ok {
        Ok(format!("{}: ok\n", d.name()))
    } else {
        Err(Failure::new(EXIT_INPUT, report.to_string()))
    }
}

/// Summaries of every component with `‖κ‖² ≤ radius_sq`, ordered by `κ`.
pub fn classify_summaries(d: &RealFormDescriptor, radius_sq: &Q) -> Result<Vec<ComponentSummary>, Failure> {
    let run = enumerate_norm_sq(d, radius_sq)?;
    let mut out = Vec::with_capacity(run.entries.len());
    for e in &run.entries {
        out.push(summarize_datum(d, e)?);
    }
    Ok(out)
}

#[derive(Serialize)]
struct CsvRecord {
    kappa: String,
    n: usize,
    r_order: u64,
    minimal_k_types: String,
    dirac_hw: String,
}

#[derive(Serialize)]
struct JsonRecord {
    kappa: Vec<String>,
    n: usize,
    r_order: u64,
    minimal_k_types: Vec<Vec<String>>,
    dirac_hw: Vec<String>,
}

pub fn cmd_classify(group: &str, radius: &str, format: Format) -> CmdResult {
    let d = resolve_group(group)?;
    let r = parse_rational(radius)?;
    if r <= Q::from_integer(0.into()) {
        return Err(Error::InvalidRadius(format_rational(&r)).into());
    }
    let rows = classify_summaries(&d, &(&r * &r))?;
    render_classification(&rows, format)
}

pub fn render_classification(rows: &[ComponentSummary], format: Format) -> CmdResult {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for s in rows {
                w.serialize(CsvRecord {
                    kappa: compact(&s.kappa),
                    n: s.n,
                    r_order: s.r_order,
                    minimal_k_types: compact_list(&s.minimal_k_types),
                    dirac_hw: compact(&s.dirac_hw),
                })
                .map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
            }
            if rows.is_empty() {
                w.write_record(["kappa", "n", "r_order", "minimal_k_types", "dirac_hw"])
                    .map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
        }
        Format::Json => {
            let recs: Vec<JsonRecord> = rows
                .iter()
                .map(|s| JsonRecord {
                    kappa: coords(&s.kappa),
                    n: s.n,
                    r_order: s.r_order,
                    minimal_k_types: s.minimal_k_types.iter().map(coords).collect(),
                    dirac_hw: coords(&s.dirac_hw),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&recs).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Table => {
            let header = ["kappa", "N", "|R|", "minimal K-types", "dirac_hw"].map(String::from).to_vec();
            let mut table = vec![header];
            for s in rows {
                table.push(vec![
                    compact(&s.kappa),
                    s.n.to_string(),
                    s.r_order.to_string(),
                    compact_list(&s.minimal_k_types),
                    compact(&s.dirac_hw),
                ]);
            }
            Ok(align(&table))
        }
    }
}

fn align(table: &[Vec<String>]) -> String {
    let cols = table.first().map_or(0, Vec::len);
    let widths: Vec<usize> =
        (0..cols).map(|c| table.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in table {
        let cells: Vec<String> =
            row.iter().zip(&widths).map(|(cell, &w)| format!("{cell:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn summary_text(s: &ComponentSummary) -> String {
    format!(
        "kappa: {}\nN: {}\nr_order: {}\nminimal_k_types: {}\ndirac_hw: {}\n",
        compact(&s.kappa),
        s.n,
        s.r_order,
        compact_list(&s.minimal_k_types),
        compact(&s.dirac_hw)
    )
}

pub fn cmd_match(group: &str, mu: &str, direction: Direction) -> CmdResult {
    let d = resolve_group(group)?;
    let w = parse_weight(mu)?;
    match direction {
        Direction::Forward => Ok(summary_text(&summarize(&d, &w)?)),
        Direction::Inverse => {
            let kappa = match_inverse(&d, &w)?;
            let s = summarize(&d, &kappa)?;
            if !s.minimal_k_types.contains(&w) {
                return Err(Failure::new(
                    EXIT_INPUT,
                    format!("{} is not a minimal K-type of the component with kappa = {}", compact(&w), compact(&kappa)),
                ));
            }
            Ok(format!("mu: {}\n{}", compact(&w), summary_text(&s)))
        }
    }
}

/// Contents of one figure position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellContent {
    Empty,
    /// Minimal K-type of a component with `N = 0`.
    Bullet(Weight),
    /// Minimal K-type of the component with this `κ` and `N ≥ 1`.
    Component(Weight, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCell {
    pub position: (i64, i64),
    pub content: CellContent,
}

/// Positions `(m, n)` of a box, rows by `n` from top (largest) to bottom,
/// columns by `m` increasing.
#[derive(Debug, Clone)]
pub struct Grid {
    pub m_range: (i64, i64),
    pub n_range: (i64, i64),
    pub cells: BTreeMap<(i64, i64), CellContent>,
    /// Components with at least one position in the box, ordered by `κ`.
    pub components: Vec<ComponentSummary>,
}

impl Grid {
    pub fn get(&self, m: i64, n: i64) -> &CellContent {
        self.cells.get(&(m, n)).unwrap_or(&CellContent::Empty)
    }

    pub fn rows(&self) -> Vec<Vec<GridCell>> {
        (self.n_range.0..=self.n_range.1)
            .rev()
            .map(|n| {
                (self.m_range.0..=self.m_range.1)
                    .map(|m| GridCell { position: (m, n), content: self.get(m, n).clone() })
                    .collect()
            })
            .collect()
    }
}

pub fn component_id(kappa: &Weight, n: usize) -> String {
    format!("N{n}-{}", compact(kappa))
}

pub fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::new(EXIT_RANGE, format!("`{s}` is not a range lo..hi or lo:hi of integers"));
    let (a, b) = s.split_once("..").or_else(|| s.split_once(':')).ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

fn max_norm_sq_of_rho_s(d: &RealFormDescriptor) -> Q {
    let reps = d.noncompact_weights().lex_representatives();
    let mut best = Q::from_integer(0.into());
    for bits in 0..1usize << reps.len() {
        let mut sum = Weight::zero(d.rank_tc());
        for (j, g) in reps.iter().enumerate() {
            if bits >> j & 1 == 0 {
                sum += g;
            } else {
                sum += &-g;
            }
        }
        let half = sum.scale(&tempered_atlas::weight::frac(1, 2));
        let n = d.inner(&half, &half);
        if n > best {
            best = n;
        }
    }
    best
}

/// Squared radius covering every `κ` that can own a position in the box.
/// `κ = μ − ρ_G + ρ_K` and `ρ_G − ρ_K` is the half-sum of some noncompact
/// positive system, so `‖κ‖² ≤ (‖μ‖ + b)² ≤ 2‖μ‖² + 2b²`.
pub fn figure_radius_sq(d: &RealFormDescriptor, m_range: (i64, i64), n_range: (i64, i64)) -> Q {
    let mut corner = Q::from_integer(0.into());
    for m in [m_range.0, m_range.1] {
        for n in [n_range.0, n_range.1] {
            let w = Weight::from_ints(&[m, n]);
            let x = d.inner(&w, &w);
            if x > corner {
                corner = x;
            }
        }
    }
    let two = Q::from_integer(2.into());
    &two * corner + &two * max_norm_sq_of_rho_s(d)
}

pub fn build_grid(d: &RealFormDescriptor, m_range: (i64, i64), n_range: (i64, i64)) -> Result<Grid, Failure> {
    if d.rank_tc() != 2 {
        return Err(Failure::new(EXIT_RANGE, format!("{} has rank {}, figures need rank 2", d.name(), d.rank_tc())));
    }
    for (label, (lo, hi)) in [("m", m_range), ("n", n_range)] {
        if lo > hi {
            return Err(Failure::new(EXIT_RANGE, format!("empty {label} range {lo}..{hi}")));
        }
        if hi - lo > MAX_FIGURE_SPAN {
            return Err(Failure::new(EXIT_RANGE, format!("{label} range wider than {MAX_FIGURE_SPAN}")));
        }
    }
    let in_box = |w: &Weight| -> Option<(i64, i64)> {
        let c = w.to_i64s()?;
        let (m, n) = (c[0], c[1]);
        (m_range.0 <= m && m <= m_range.1 && n_range.0 <= n && n <= n_range.1).then_some((m, n))
    };
    let summaries = classify_summaries(d, &figure_radius_sq(d, m_range, n_range))?;
    let mut cells = BTreeMap::new();
    let mut components = Vec::new();
    for s in summaries {
        let mut hit = false;
        for mk in &s.minimal_k_types {
            let Some(pos) = in_box(mk) else { continue };
            hit = true;
            let content = if s.n == 0 {
                CellContent::Bullet(s.kappa.clone())
            } else {
                CellContent::Component(s.kappa.clone(), s.n)
            };
            if let Some(prev) = cells.insert(pos, content) {
                return Err(Failure::new(
                    EXIT_INTERNAL,
                    format!("internal invariant failure: position {pos:?} claimed twice ({prev:?} and kappa = {})", s.kappa),
                ));
            }
            let back = match_inverse(d, mk)?;
            if back != s.kappa {
                return Err(Failure::new(
                    EXIT_INTERNAL,
                    format!("internal invariant failure: {} matches back to {back}, not {}", compact(mk), s.kappa),
                ));
            }
        }
        if hit {
            components.push(s);
        }
    }
    Ok(Grid { m_range, n_range, cells, components })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureFormat {
    Text,
    Csv,
}

pub fn render_grid_csv(grid: &Grid) -> CmdResult {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Failure::new(EXIT_INTERNAL, e.to_string());
    w.write_record(["m", "n", "content", "component"]).map_err(err)?;
    for row in grid.rows() {
        for cell in row {
            let (kind, id) = match &cell.content {
                CellContent::Empty => ("empty", String::new()),
                CellContent::Bullet(k) => ("bullet", component_id(k, 0)),
                CellContent::Component(k, n) => ("component", component_id(k, *n)),
            };
            let (m, n) = cell.position;
            w.write_record([m.to_string(), n.to_string(), kind.to_string(), id]).map_err(err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Aligned text: `•` for `N = 0`, a numbered tag per `N ≥ 1` component,
/// `.` for unclaimed dominant positions, blank where `m < n`.
pub fn render_grid_text(grid: &Grid) -> String {
    let mut tags: BTreeMap<Weight, String> = BTreeMap::new();
    for s in grid.components.iter().filter(|s| s.n > 0) {
        let t = format!("#{}", tags.len() + 1);
        tags.insert(s.kappa.clone(), t);
    }
    let label_w = grid.n_range.0.to_string().len().max(grid.n_range.1.to_string().len());
    let cell_w = tags
        .values()
        .map(|t| t.len())
        .chain((grid.m_range.0..=grid.m_range.1).map(|m| m.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut out = String::from("rows: n, descending; columns: m, ascending\n");
    for row in grid.rows() {
        let mut line = format!("{:>label_w$} |", row[0].position.1);
        for cell in &row {
            let (m, n) = cell.position;
            let text = match &cell.content {
                CellContent::Bullet(_) => "•".to_string(),
                CellContent::Component(k, _) => tags[k].clone(),
                CellContent::Empty if m >= n => ".".to_string(),
                CellContent::Empty => String::new(),
            };
            write!(line, " {text:>cell_w$}").unwrap();
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let ncols = (grid.m_range.1 - grid.m_range.0 + 1) as usize;
    writeln!(out, "{} +{}", " ".repeat(label_w), "-".repeat(ncols * (cell_w + 1))).unwrap();
    let mut axis = format!("{} |", " ".repeat(label_w));
    for m in grid.m_range.0..=grid.m_range.1 {
        write!(axis, " {m:>cell_w$}").unwrap();
    }
    out.push_str(&axis);
    out.push('\n');
    out.push_str("legend:\n");
    for s in &grid.components {
        let tag = tags.get(&s.kappa).map_or("•", String::as_str);
        let here: Vec<Weight> = s
            .minimal_k_types
            .iter()
            .filter(|w| {
                w.to_i64s().is_some_and(|c| {
                    grid.m_range.0 <= c[0] && c[0] <= grid.m_range.1 && grid.n_range.0 <= c[1] && c[1] <= grid.n_range.1
                })
            })
            .cloned()
            .collect();
        writeln!(out, "  {tag:>cell_w$} {}: {}", component_id(&s.kappa, s.n), compact_list(&here)).unwrap();
    }
    out
}

pub fn cmd_figure(group: &str, m_range: &str, n_range: &str, format: FigureFormat) -> CmdResult {
    let d = resolve_group(group)?;
    let grid = build_grid(&d, parse_range(m_range)?, parse_range(n_range)?)?;
    match format {
        FigureFormat::Csv => render_grid_csv(&grid),
        FigureFormat::Text => Ok(render_grid_text(&grid)),
    }
}

/// `{w:m, ...}` in weight order.
pub fn render_multiset(m: &WeightMultiset) -> String {
    let parts: Vec<String> = m.iter().map(|(w, k)| format!("{}:{k}", compact(w))).collect();
    format!("{{{}}}\n", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KrepQuery {
    Dim(String),
    Weights(String),
    Tensor(String, String),
    Spin,
    DiracMult { tau: String, v: String },
}

pub fn cmd_krep(group: &str, query: &KrepQuery) -> CmdResult {
    let d = resolve_group(group)?;
    match query {
        KrepQuery::Dim(hw) => Ok(format!("{}\n", krep::weyl_dim(&d, &parse_weight(hw)?)?)),
        KrepQuery::Weights(hw) => Ok(render_multiset(&krep::freudenthal(&d, &parse_weight(hw)?)?)),
        KrepQuery::Tensor(a, b) => {
            let pieces = krep::tensor_decompose(&d, &parse_weight(a)?, &parse_weight(b)?)?;
            Ok(render_multiset(&pieces.into_iter().collect()))
        }
        KrepQuery::Spin => Ok(render_multiset(&krep::spin_weights(&d))),
        KrepQuery::DiracMult { tau, v } => {
            let tau = IrreducibleKType::new(&d, parse_weight(tau)?)?;
            let v = IrreducibleKType::new(&d, parse_weight(v)?)?;
            Ok(format!("{}\n", krep::dirac_multiplicity(&d, &tau, &v)?))
        }
    }
}
