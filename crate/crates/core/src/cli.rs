//! Command-line front end.
//!
//! Every command produces an [`OutputRecord`], which is printed either as
//! JSON (`--json`) or as aligned text. Caps resolve in the order flag,
//! `HODGEREP_*` environment variable, `--config` file, built-in default.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::enumerate::{
    self, annotate, canonicalize, classify_gradings, group_families, parse_pattern,
    ClassifiedTuple, Flag, GradingKind, PatternEntry, SearchConstraints,
};
use crate::error::{Error, ErrorKind, Result};
use crate::hodge::{self, describe, real_form, AlgebraFactor, HodgeTuple};
use crate::rational;
use crate::repdata::DEFAULT_WEIGHT_CAP;
use crate::rootdata::{root_datum, GradingElement, SimpleType, Weight};

/// Bumped on every change to the machine-readable output format.
pub const SCHEMA_VERSION: &str = "1.0.0";

pub const ENV_PREFIX: &str = "HODGEREP_";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Vec<Value>,
    pub notes: Vec<String>,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records contain only JSON-safe values")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("output record: {e}")))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hodgerep",
    version,
    about = "Hodge representations of semisimple Lie algebras"
)]
pub struct Cli {
    /// Emit a JSON output record instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// key=value file with default caps (max-rank, max-factors, max-dim, weight-cap).
    #[arg(long, global = true, env = "HODGEREP_CONFIG")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe a single tuple (g, E, μ, c).
    RepInfo(RepInfoArgs),
    /// Enumerate tuples with prescribed Hodge numbers.
    Classify(ClassifyArgs),
    /// Grading of the adjoint representation induced by E.
    Adjoint(AdjointArgs),
    /// Recompute one of the reference tables.
    Tables(TablesArgs),
}

#[derive(Debug, Args)]
pub struct RepInfoArgs {
    /// Algebra, e.g. `C3` or `A1+B2`.
    #[arg(short = 'a', long)]
    pub algebra: String,
    /// Grading coefficients, e.g. `0,0,1` or `(1)+(1,0)`.
    #[arg(short = 'e', long, allow_hyphen_values = true)]
    pub grading: String,
    /// Highest weight in fundamental-weight coordinates.
    #[arg(short = 'w', long = "highest-weight", allow_hyphen_values = true)]
    pub weight: String,
    /// Center scalar as `p/q`.
    #[arg(short = 'c', long, default_value = "0", allow_hyphen_values = true)]
    pub c: String,
    #[arg(long, env = "HODGEREP_WEIGHT_CAP")]
    pub weight_cap: Option<u128>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Weight n of the Hodge structure.
    #[arg(long)]
    pub weight: u32,
    /// Palindromic Hodge pattern with `*` wildcards, e.g. `2,*,2`.
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long)]
    pub horizontal: bool,
    #[arg(long)]
    pub contact: bool,
    #[arg(long)]
    pub non_horizontal: bool,
    #[arg(long)]
    pub cy: bool,
    #[arg(long)]
    pub period_domain: bool,
    /// Require every interior Hodge number to be nonzero.
    #[arg(long)]
    pub require_nonzero_middle: bool,
    #[arg(long, env = "HODGEREP_MAX_RANK")]
    pub max_rank: Option<usize>,
    #[arg(long, env = "HODGEREP_MAX_FACTORS")]
    pub max_factors: Option<usize>,
    /// Bound on dim V; required when the pattern has wildcards.
    #[arg(long, env = "HODGEREP_MAX_DIM")]
    pub max_dim: Option<u128>,
    #[arg(long, env = "HODGEREP_WEIGHT_CAP")]
    pub weight_cap: Option<u128>,
}

#[derive(Debug, Args)]
pub struct AdjointArgs {
    #[arg(short = 'a', long)]
    pub algebra: String,
    #[arg(short = 'e', long)]
    pub grading: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Appendix,
    Hermitian,
    Contact,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(value_enum)]
    pub which: TableKind,
    #[arg(long, env = "HODGEREP_MAX_RANK")]
    pub max_rank: Option<usize>,
}

/// Caps after merging flags, environment and the config file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_rank: usize,
    pub max_factors: usize,
    pub max_dim: Option<u128>,
    pub weight_cap: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_rank: 8,
            max_factors: 3,
            max_dim: None,
            weight_cap: DEFAULT_WEIGHT_CAP,
        }
    }
}

/// Reads a `key=value` config file; `#` starts a comment.
pub fn load_config(path: &Path) -> Result<Caps> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read config {}: {e}", path.display())))?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<Caps> {
    let mut caps = Caps::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::Parse(format!("config line {}: expected key=value", lineno + 1))
        })?;
        let (k, v) = (k.trim().replace('_', "-"), v.trim());
        let bad = || {
            Error::Parse(format!(
                "config line {}: bad value `{v}` for {k}",
                lineno + 1
            ))
        };
        match k.as_str() {
            "max-rank" => caps.max_rank = v.parse().map_err(|_| bad())?,
            "max-factors" => caps.max_factors = v.parse().map_err(|_| bad())?,
            "max-dim" => caps.max_dim = Some(v.parse().map_err(|_| bad())?),
            "weight-cap" => caps.weight_cap = v.parse().map_err(|_| bad())?,
            _ => {
                return Err(Error::Parse(format!(
                    "config line {}: unknown key `{k}`",
                    lineno + 1
                )))
            }
        }
    }
    Ok(caps)
}

fn split_factors(spec: &str) -> Vec<String> {
    spec.split('+').map(|s| s.trim().to_string()).collect()
}

pub fn parse_algebra(spec: &str) -> Result<Vec<SimpleType>> {
    split_factors(spec).iter().map(|s| s.parse()).collect()
}

/// Splits `(a,b)+(c)` or a bare `a,b` into per-factor coordinate lists.
fn parse_coordinate_lists(spec: &str, what: &str, factors: usize) -> Result<Vec<Vec<i64>>> {
    let parts = split_factors(spec);
    if parts.len() != factors {
        return Err(Error::Parse(format!(
            "{what} `{spec}` has {} factor(s), the algebra has {factors}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            let inner = p.strip_prefix('(').and_then(|s| s.strip_suffix(')'));
            let body = match inner {
                Some(b) => b,
                None if factors == 1 => p.as_str(),
                None => {
                    return Err(Error::Parse(format!(
                        "{what} factor `{p}` must be parenthesized in a multi-factor spec"
                    )))
                }
            };
            body.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad {what} coordinate `{tok}`")))
                })
                .collect()
        })
        .collect()
}

fn parse_gradings(spec: &str, types: &[SimpleType]) -> Result<Vec<GradingElement>> {
    parse_coordinate_lists(spec, "grading", types.len())?
        .into_iter()
        .zip(types)
        .map(|(v, ty)| {
            if v.len() != ty.rank() {
                return Err(Error::RankMismatch {
                    what: "grading",
                    ty: ty.to_string(),
                    expected: ty.rank(),
                    found: v.len(),
                });
            }
            let coords = v
                .iter()
                .map(|&x| {
                    u8::try_from(x).map_err(|_| {
                        Error::InvalidGrading(format!("coefficient {x} is not 0 or 1"))
                    })
                })
                .collect::<Result<Vec<u8>>>()?;
            GradingElement::new(coords)
        })
        .collect()
}

/// Parses a full tuple from the command-line grammar.
pub fn parse_tuple(algebra: &str, grading: &str, weight: &str, c: &str) -> Result<HodgeTuple> {
    let types = parse_algebra(algebra)?;
    let gradings = parse_gradings(grading, &types)?;
    let weights = parse_coordinate_lists(weight, "weight", types.len())?;
    let c = rational::parse(c)?;
    let factors = types
        .iter()
        .zip(gradings)
        .zip(weights)
        .map(|((&ty, e), mu)| {
            if mu.len() != ty.rank() {
                return Err(Error::RankMismatch {
                    what: "weight",
                    ty: ty.to_string(),
                    expected: ty.rank(),
                    found: mu.len(),
                });
            }
            AlgebraFactor::new(ty, e, Weight::new(mu))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HodgeTuple::new(factors, c))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn flags_of(ct: &ClassifiedTuple) -> String {
    let d = &ct.descriptor;
    let mut f = Vec::new();
    if d.horizontal {
        f.push("horizontal");
    }
    if d.contact {
        f.push("contact");
    }
    if d.period_domain {
        f.push("period-domain");
    }
    if d.cy_type {
        f.push("cy");
    }
    f.join(",")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if i + 1 < cells.len() {
                s.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// Result of a command: the machine record and its text rendering.
pub struct Report {
    pub record: OutputRecord,
    pub text: String,
}

fn rep_info(a: &RepInfoArgs, caps: Caps) -> Result<Report> {
    let t = parse_tuple(&a.algebra, &a.grading, &a.weight, &a.c)?;
    let d = describe(&t, caps.weight_cap)?;
    let notes = annotate(&t, &d)?;
    let canon = canonicalize(&t);
    let ct = ClassifiedTuple {
        tuple: t,
        descriptor: d,
        notes,
    };

    let mut rec = OutputRecord::new("rep-info");
    rec.inputs.insert("algebra".into(), json!(a.algebra));
    rec.inputs.insert("grading".into(), json!(a.grading));
    rec.inputs.insert("highest_weight".into(), json!(a.weight));
    rec.inputs.insert("c".into(), json!(a.c));
    rec.inputs
        .insert("weight_cap".into(), to_value(&caps.weight_cap));
    rec.results.push(to_value(&ct));
    rec.notes = ct.notes.clone();
    rec.notes.push(format!("canonical form: {canon}"));

    let d = &ct.descriptor;
    let mut s = String::new();
    let _ = writeln!(s, "tuple            {}", ct.tuple);
    let _ = writeln!(s, "canonical        {canon}");
    let chars: Vec<String> = d
        .u_character
        .iter()
        .map(|e| format!("{}:{}", rational::format(&e.eigenvalue), e.dim))
        .collect();
    let _ = writeln!(s, "character of U   {}", chars.join(" "));
    let _ = writeln!(s, "dim U, dim V     {}, {}", d.dim_u, d.dim_v);
    let _ = writeln!(s, "level            {}", d.level);
    let _ = writeln!(s, "hodge numbers    ({})", join(&d.hodge_numbers));
    let _ = writeln!(s, "reality          {}", d.reality);
    let grads: Vec<String> = d
        .adjoint_grading
        .iter()
        .map(|g| format!("({})", join(g)))
        .collect();
    let _ = writeln!(s, "adjoint grading  {}", grads.join(" "));
    let _ = writeln!(s, "depth            {}", d.depth);
    let _ = writeln!(s, "horizontal       {}", d.horizontal);
    let _ = writeln!(s, "contact          {}", d.contact);
    let _ = writeln!(s, "period domain    {}", d.period_domain);
    let _ = writeln!(s, "cy type          {}", d.cy_type);
    let _ = writeln!(s, "compact dim      {}", d.compact_dim);
    for n in &ct.notes {
        let _ = writeln!(s, "note             {n}");
    }
    Ok(Report {
        record: rec,
        text: s,
    })
}

pub fn constraints_from(a: &ClassifyArgs, caps: Caps) -> Result<SearchConstraints> {
    let pattern = match &a.pattern {
        Some(p) => parse_pattern(p)?,
        None => vec![PatternEntry::Any; a.weight as usize + 1],
    };
    let mut sc = SearchConstraints::new(a.weight, pattern);
    for (on, flag) in [
        (a.horizontal, Flag::Horizontal),
        (a.contact, Flag::Contact),
        (a.non_horizontal, Flag::NonHorizontal),
        (a.cy, Flag::Cy),
        (a.period_domain, Flag::PeriodDomain),
    ] {
        if on {
            sc.require.insert(flag);
        }
    }
    if a.horizontal && a.non_horizontal {
        return Err(Error::Parse(
            "--horizontal and --non-horizontal are mutually exclusive".into(),
        ));
    }
    sc.max_rank = caps.max_rank;
    sc.max_factors = caps.max_factors;
    sc.max_dim_v = caps.max_dim;
    sc.weight_cap = caps.weight_cap;
    sc.require_nonzero_middle = a.require_nonzero_middle;
    Ok(sc)
}

fn classify(a: &ClassifyArgs, caps: Caps) -> Result<Report> {
    let sc = constraints_from(a, caps)?;
    let found = enumerate::enumerate(&sc)?;
    let families = group_families(&found);

    let mut rec = OutputRecord::new("classify");
    rec.inputs.insert("constraints".into(), to_value(&sc));
    rec.results = found.iter().map(to_value).collect();
    for g in &families {
        let members: Vec<String> = g
            .members
            .iter()
            .map(|m| {
                format!(
                    "r={} c={} h=({})",
                    join(&m.ranks),
                    rational::format(&m.c),
                    join(&m.hodge_numbers)
                )
            })
            .collect();
        rec.notes
            .push(format!("family {}: {}", g.family, members.join("; ")));
    }

    let rows: Vec<Vec<String>> = found
        .iter()
        .enumerate()
        .map(|(i, ct)| {
            let parts: Vec<String> = ct.tuple.factors.iter().map(ToString::to_string).collect();
            vec![
                (i + 1).to_string(),
                parts.join(" ⊕ "),
                rational::format(&ct.tuple.c),
                format!("({})", join(&ct.descriptor.hodge_numbers)),
                ct.descriptor.reality.to_string(),
                flags_of(ct),
            ]
        })
        .collect();
    let mut s = table(&["#", "tuple", "c", "hodge", "reality", "flags"], &rows);
    let _ = writeln!(s, "\n{} tuple(s)", found.len());
    if !families.is_empty() {
        s.push_str("\nfamilies\n");
        for n in &rec.notes {
            let _ = writeln!(s, "  {}", n.trim_start_matches("family "));
        }
    }
    Ok(Report {
        record: rec,
        text: s,
    })
}

fn adjoint(a: &AdjointArgs) -> Result<Report> {
    let types = parse_algebra(&a.algebra)?;
    let gradings = parse_gradings(&a.grading, &types)?;
    let mut rec = OutputRecord::new("adjoint");
    rec.inputs.insert("algebra".into(), json!(a.algebra));
    rec.inputs.insert("grading".into(), json!(a.grading));
    let mut rows = Vec::new();
    for (ty, e) in types.into_iter().zip(gradings) {
        let f = AlgebraFactor::new(ty, e.clone(), Weight::fundamental(ty.rank(), 1))?;
        let g = hodge::adjoint_grading(&f);
        let depth = hodge::depth(&f);
        let contact = g.len() == 5 && g[0] == 1;
        let rf = real_form(ty, &e);
        rows.push(vec![
            ty.to_string(),
            e.to_string(),
            format!("({})", join(&g)),
            depth.to_string(),
            (depth == 1).to_string(),
            contact.to_string(),
            rf.as_ref().map(|r| r.real_form.clone()).unwrap_or_default(),
        ]);
        rec.results.push(json!({
            "type": ty,
            "e": e,
            "adjoint_grading": g,
            "depth": depth,
            "horizontal": depth == 1,
            "contact": contact,
            "real_form": rf,
        }));
    }
    let text = table(
        &[
            "type",
            "E",
            "dims g^l",
            "depth",
            "horizontal",
            "contact",
            "real form",
        ],
        &rows,
    );
    Ok(Report { record: rec, text })
}

/// One evaluation row of the appendix table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixRow {
    pub table: GradingKind,
    #[serde(rename = "type")]
    pub ty: SimpleType,
    pub e: GradingElement,
    /// Index `i` of the fundamental weight `ω_i`.
    pub weight: usize,
    #[serde(with = "rational::serde_str")]
    pub on_e: Rational64,
    #[serde(with = "rational::serde_str")]
    pub on_t: Rational64,
    /// Index `j` with `ω_i* = ω_j`.
    pub dual: usize,
}

pub fn appendix_rows(max_rank: usize) -> Vec<AppendixRow> {
    let mut rows = Vec::new();
    for kind in [GradingKind::Hermitian, GradingKind::Contact] {
        for (ty, e) in classify_gradings(kind, max_rank) {
            let d = root_datum(ty);
            let r = ty.rank();
            for i in 1..=r {
                let w = Weight::fundamental(r, i);
                let dual = d.duality_permutation()[i - 1] + 1;
                rows.push(AppendixRow {
                    table: kind,
                    ty,
                    e: e.clone(),
                    weight: i,
                    on_e: d.eval_on_grading(&w, &e),
                    on_t: d.parity_element_eval(&w, &e),
                    dual,
                });
            }
        }
    }
    rows
}

fn tables(a: &TablesArgs, caps: Caps) -> Result<Report> {
    let mut rec = OutputRecord::new("tables");
    let which = match a.which {
        TableKind::Appendix => "appendix",
        TableKind::Hermitian => "hermitian",
        TableKind::Contact => "contact",
    };
    rec.inputs.insert("which".into(), json!(which));
    rec.inputs.insert("max_rank".into(), json!(caps.max_rank));
    let text = match a.which {
        TableKind::Appendix => {
            let rows = appendix_rows(caps.max_rank);
            rec.results = rows.iter().map(to_value).collect();
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        format!("{:?}", r.table).to_lowercase(),
                        r.ty.to_string(),
                        r.e.to_string(),
                        format!("ω{}", r.weight),
                        rational::format(&r.on_e),
                        rational::format(&r.on_t),
                        format!("ω{}", r.dual),
                    ]
                })
                .collect();
            table(
                &["table", "type", "E", "weight", "ω(E)", "ω(T)", "dual"],
                &cells,
            )
        }
        TableKind::Hermitian | TableKind::Contact => {
            let kind = if a.which == TableKind::Hermitian {
                GradingKind::Hermitian
            } else {
                GradingKind::Contact
            };
            let mut cells = Vec::new();
            for (ty, e) in classify_gradings(kind, caps.max_rank) {
                let f = AlgebraFactor::new(ty, e.clone(), Weight::fundamental(ty.rank(), 1))?;
                let g = hodge::adjoint_grading(&f);
                let rf = real_form(ty, &e);
                cells.push(vec![
                    ty.to_string(),
                    e.to_string(),
                    rf.as_ref().map(|r| r.real_form.clone()).unwrap_or_default(),
                    rf.as_ref().map(|r| r.compact.clone()).unwrap_or_default(),
                    format!("({})", join(&g)),
                ]);
                rec.results.push(json!({
                    "type": ty,
                    "e": e,
                    "real_form": rf,
                    "adjoint_grading": g,
                }));
            }
            table(&["type", "E", "real form", "compact", "dims g^l"], &cells)
        }
    };
    Ok(Report { record: rec, text })
}

fn resolve_caps(cli: &Cli) -> Result<Caps> {
    let mut caps = match &cli.config {
        Some(p) => load_config(p)?,
        None => Caps::default(),
    };
    match &cli.command {
        Command::RepInfo(a) => {
            if let Some(w) = a.weight_cap {
                caps.weight_cap = w;
            }
        }
        Command::Classify(a) => {
            if let Some(x) = a.max_rank {
                caps.max_rank = x;
            }
            if let Some(x) = a.max_factors {
                caps.max_factors = x;
            }
            if a.max_dim.is_some() {
                caps.max_dim = a.max_dim;
            }
            if let Some(x) = a.weight_cap {
                caps.weight_cap = x;
            }
        }
        Command::Tables(a) => {
            if let Some(x) = a.max_rank {
                caps.max_rank = x;
            }
        }
        Command::Adjoint(_) => {}
    }
    Ok(caps)
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let caps = resolve_caps(cli)?;
    match &cli.command {
        Command::RepInfo(a) => rep_info(a, caps),
        Command::Classify(a) => classify(a, caps),
        Command::Adjoint(a) => adjoint(a),
        Command::Tables(a) => tables(a, caps),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Usage => 2,
        ErrorKind::Domain => 3,
        ErrorKind::Resource => 4,
    }
}

/// Parses arguments, runs the command and returns `(exit code, stdout, stderr)`.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                (0, msg, String::new())
            } else {
                (code, String::new(), msg)
            };
        }
    };
    match execute(&cli) {
        Ok(rep) => {
            let out = if cli.json {
                let mut j = rep.record.to_json();
                j.push('\n');
                j
            } else {
                rep.text
            };
            (0, out, String::new())
        }
        Err(e) => (exit_code(&e), String::new(), format!("error: {e}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let t = parse_tuple("A1+B2", "(1)+(1,0)", "(1)+(0,1)", "-1/2").unwrap();
        assert_eq!(t.factors.len(), 2);
        assert_eq!(t.c, Rational64::new(-1, 2));
        assert!(matches!(
            parse_tuple("A1+B2", "1,1,0", "(1)+(0,1)", "0"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_tuple("C3", "0,1", "0,0,1", "0"),
            Err(Error::RankMismatch { .. })
        ));
        let err = parse_tuple("C3", "0,0,1", "0,x,1", "0").unwrap_err();
        assert!(err.to_string().contains("`x`"));
    }

    #[test]
    fn config_file() {
        let caps = parse_config("# caps\nmax-rank = 5\nmax_dim=40\n").unwrap();
        assert_eq!(caps.max_rank, 5);
        assert_eq!(caps.max_dim, Some(40));
        assert!(parse_config("bogus=1").is_err());
    }

    #[test]
    fn aligned_table() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }
}
