//! Text formats: algebra spec files, tensor files and JSON report files.
//!
//! A spec file is TOML with rational strings for every coefficient:
//!
//! ```toml
//! dim = 2
//! basis = ["e1", "e2"]
//! weight = "0"
//!
//! [ops]
//! prec = [[0, 0, 0, "-1"], [1, 1, 1, "-1"]]
//!
//! [coprods]
//! coprec = [[0, 0, 0, "-1"]]
//!
//! [maps]
//! partial = [[0, 1, "1/2"]]
//! ```
//!
//! Op entries are `[i, j, k, c]` for `e_i e_j ∋ c e_k`, coprod entries
//! `[k, i, j, c]` for `Δe_k ∋ c e_i⊗e_j`, map entries `[row, col, c]`, form
//! and tensor entries `[i, j, c]`. A `[rep]` table carries `dim`, `actions`
//! with entries `[i, j, k, c]` for `ρ(e_i)v_j ∋ c v_k`, and `maps`; the rep map
//! `T` goes from the carrier to the algebra, every other rep map is square on
//! the carrier. Omitted entries are zero.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Range;
use std::path::Path;

use serde::{Deserialize, Serialize};
use toml::{Spanned, Value};

use crate::error::{Error, Result};
use crate::linalg::{BilinearForm, LinMap, Matrix, Scalar, Tensor2};
use crate::model::{
    all_passed, ActionTable, AlgebraSpec, CoprodTable, MulTable, Report, Representation,
};

type Entries = Vec<Spanned<Vec<Value>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    dim: Spanned<i64>,
    basis: Option<Vec<String>>,
    weight: Option<Spanned<Value>>,
    #[serde(default)]
    ops: BTreeMap<String, Entries>,
    #[serde(default)]
    coprods: BTreeMap<String, Entries>,
    #[serde(default)]
    maps: BTreeMap<String, Entries>,
    #[serde(default)]
    forms: BTreeMap<String, Entries>,
    #[serde(default)]
    tensors: BTreeMap<String, Entries>,
    rep: Option<RawRep>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    dim: Spanned<i64>,
    #[serde(default)]
    actions: BTreeMap<String, Entries>,
    #[serde(default)]
    maps: BTreeMap<String, Entries>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTensor {
    dim: Spanned<i64>,
    #[serde(default)]
    entries: Entries,
}

struct Source<'a> {
    text: &'a str,
}

impl Source<'_> {
    fn line(&self, span: Range<usize>) -> usize {
        self.text[..span.start.min(self.text.len())].matches('\n').count() + 1
    }

    fn err(&self, span: Range<usize>, field: &str, msg: impl std::fmt::Display) -> Error {
        Error::Parse(format!("line {}: {field}: {msg}", self.line(span)))
    }

    fn dim(&self, d: &Spanned<i64>, field: &str) -> Result<usize> {
        usize::try_from(*d.get_ref()).map_err(|_| self.err(d.span(), field, "must be a non-negative integer"))
    }

    fn scalar(&self, v: &Value, span: Range<usize>, field: &str) -> Result<Scalar> {
        match v {
            Value::String(s) => s
                .parse()
                .map_err(|_| self.err(span, field, format!("malformed rational {s:?}"))),
            Value::Integer(i) => Ok(Scalar::from_int(*i)),
            other => Err(self.err(span, field, format!("expected a rational string, got {}", other.type_str()))),
        }
    }

    /// Entries with `bounds.len()` indices followed by one coefficient.
    fn entries(
        &self,
        entries: &Entries,
        bounds: &[usize],
        field: &str,
    ) -> Result<BTreeMap<Vec<usize>, Scalar>> {
        let mut out = BTreeMap::new();
        for (n, e) in entries.iter().enumerate() {
            let field = format!("{field}[{n}]");
            let span = e.span();
            let items = e.get_ref();
            if items.len() != bounds.len() + 1 {
                return Err(self.err(
                    span,
                    &field,
                    format!("expected {} indices and a coefficient, got {} items", bounds.len(), items.len()),
                ));
            }
            let mut idx = Vec::with_capacity(bounds.len());
            for (v, &bound) in items.iter().zip(bounds) {
                let i = v
                    .as_integer()
                    .and_then(|i| usize::try_from(i).ok())
                    .ok_or_else(|| self.err(span.clone(), &field, format!("index {v} is not a non-negative integer")))?;
                if i >= bound {
                    return Err(self.err(span.clone(), &field, format!("index {i} out of range (< {bound})")));
                }
                idx.push(i);
            }
            let c = self.scalar(&items[bounds.len()], span.clone(), &field)?;
            if out.insert(idx.clone(), c).is_some() {
                return Err(self.err(span, &field, format!("duplicate entry for {idx:?}")));
            }
        }
        Ok(out)
    }
}

fn matrix(rows: usize, cols: usize, e: &BTreeMap<Vec<usize>, Scalar>) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for (idx, c) in e {
        m.set(idx[0], idx[1], c.clone());
    }
    m
}

fn toml_error(text: &str, e: toml::de::Error) -> Error {
    let src = Source { text };
    match e.span() {
        Some(span) => src.err(span, "syntax", e.message()),
        None => Error::Parse(e.message().to_string()),
    }
}

/// Parses a spec file.
pub fn parse_spec_str(text: &str) -> Result<AlgebraSpec> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| toml_error(text, e))?;
    let src = Source { text };
    let n = src.dim(&raw.dim, "dim")?;
    let mut spec = AlgebraSpec::new(n);
    if let Some(w) = &raw.weight {
        spec.weight = src.scalar(w.get_ref(), w.span(), "weight")?;
    }
    if let Some(b) = raw.basis {
        if b.len() != n {
            return Err(src.err(raw.dim.span(), "basis", format!("{} labels for dim {n}", b.len())));
        }
        spec.basis = Some(b);
    }
    for (name, e) in &raw.ops {
        let e = src.entries(e, &[n, n, n], &format!("ops.{name}"))?;
        spec.ops.insert(name.clone(), MulTable::from_fn(n, |i, j, k| e.get(&vec![i, j, k]).cloned().unwrap_or_default()));
    }
    for (name, e) in &raw.coprods {
        let e = src.entries(e, &[n, n, n], &format!("coprods.{name}"))?;
        spec.coprods.insert(name.clone(), CoprodTable::from_fn(n, |k, i, j| e.get(&vec![k, i, j]).cloned().unwrap_or_default()));
    }
    for (name, e) in &raw.maps {
        let e = src.entries(e, &[n, n], &format!("maps.{name}"))?;
        spec.maps.insert(name.clone(), LinMap(matrix(n, n, &e)));
    }
    for (name, e) in &raw.forms {
        let e = src.entries(e, &[n, n], &format!("forms.{name}"))?;
        spec.forms.insert(name.clone(), BilinearForm(matrix(n, n, &e)));
    }
    for (name, e) in &raw.tensors {
        let e = src.entries(e, &[n, n], &format!("tensors.{name}"))?;
        spec.tensors.insert(name.clone(), Tensor2(matrix(n, n, &e)));
    }
    if let Some(r) = &raw.rep {
        let m = src.dim(&r.dim, "rep.dim")?;
        let mut rep = Representation::new(m);
        for (name, e) in &r.actions {
            let e = src.entries(e, &[n, m, m], &format!("rep.actions.{name}"))?;
            rep.actions.insert(
                name.clone(),
                ActionTable::from_fn(n, m, |i, j, k| e.get(&vec![i, j, k]).cloned().unwrap_or_default()),
            );
        }
        for (name, e) in &r.maps {
            let rows = if name == "T" { n } else { m };
            let e = src.entries(e, &[rows, m], &format!("rep.maps.{name}"))?;
            rep.maps.insert(name.clone(), LinMap(matrix(rows, m, &e)));
        }
        spec.rep = Some(rep);
    }
    spec.validate()?;
    Ok(spec)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn parse_spec(path: &Path) -> Result<AlgebraSpec> {
    with_path(path, parse_spec_str(&read(path)?))
}

/// A standalone tensor: `dim = n` and `entries = [[i, j, c], ...]`.
pub fn parse_tensor_str(text: &str) -> Result<Tensor2> {
    let raw: RawTensor = toml::from_str(text).map_err(|e| toml_error(text, e))?;
    let src = Source { text };
    let n = src.dim(&raw.dim, "dim")?;
    let e = src.entries(&raw.entries, &[n, n], "entries")?;
    Ok(Tensor2(matrix(n, n, &e)))
}

pub fn parse_tensor(path: &Path) -> Result<Tensor2> {
    with_path(path, parse_tensor_str(&read(path)?))
}

fn key(name: &str) -> String {
    if !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-') {
        name.to_string()
    } else {
        serde_json::to_string(name).expect("string serializes")
    }
}

fn write_entries<'a>(out: &mut String, name: &str, entries: impl Iterator<Item = (Vec<usize>, &'a Scalar)>) {
    let lines: Vec<String> = entries
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| {
            let idx: Vec<String> = idx.iter().map(usize::to_string).collect();
            format!("  [{}, \"{c}\"],\n", idx.join(", "))
        })
        .collect();
    if lines.is_empty() {
        let _ = writeln!(out, "{} = []", key(name));
    } else {
        let _ = writeln!(out, "{} = [\n{}]", key(name), lines.concat());
    }
}

fn cube_entries(get: impl Fn(usize, usize, usize) -> Scalar, a: usize, b: usize, c: usize) -> Vec<(Vec<usize>, Scalar)> {
    let mut v = Vec::new();
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                v.push((vec![i, j, k], get(i, j, k)));
            }
        }
    }
    v
}

fn matrix_entries(m: &Matrix) -> Vec<(Vec<usize>, Scalar)> {
    let mut v = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            v.push((vec![i, j], m.get(i, j).clone()));
        }
    }
    v
}

fn section(out: &mut String, header: &str, items: Vec<(String, Vec<(Vec<usize>, Scalar)>)>) {
    if items.is_empty() {
        return;
    }
    let _ = writeln!(out, "\n[{header}]");
    for (name, e) in items {
        write_entries(out, &name, e.iter().map(|(i, c)| (i.clone(), c)));
    }
}

/// Deterministic text for a spec: sorted names, lexicographic nonzero entries.
pub fn write_spec_string(spec: &AlgebraSpec) -> String {
    let n = spec.dim;
    let mut out = format!("dim = {n}\n");
    if let Some(b) = &spec.basis {
        let labels: Vec<String> = b.iter().map(|l| serde_json::to_string(l).expect("string")).collect();
        let _ = writeln!(out, "basis = [{}]", labels.join(", "));
    }
    let _ = writeln!(out, "weight = \"{}\"", spec.weight);
    section(
        &mut out,
        "ops",
        spec.ops.iter().map(|(k, t)| (k.clone(), cube_entries(|i, j, l| t.get(i, j, l).clone(), n, n, n))).collect(),
    );
    section(
        &mut out,
        "coprods",
        spec.coprods.iter().map(|(k, t)| (k.clone(), cube_entries(|i, j, l| t.get(i, j, l).clone(), n, n, n))).collect(),
    );
    section(&mut out, "maps", spec.maps.iter().map(|(k, m)| (k.clone(), matrix_entries(&m.0))).collect());
    section(&mut out, "forms", spec.forms.iter().map(|(k, f)| (k.clone(), matrix_entries(&f.0))).collect());
    section(&mut out, "tensors", spec.tensors.iter().map(|(k, r)| (k.clone(), matrix_entries(&r.0))).collect());
    if let Some(rep) = &spec.rep {
        let m = rep.dim;
        let _ = writeln!(out, "\n[rep]\ndim = {m}");
        section(
            &mut out,
            "rep.actions",
            rep.actions
                .iter()
                .map(|(k, a)| (k.clone(), cube_entries(|i, j, l| a.get(i, j, l).clone(), n, m, m)))
                .collect(),
        );
        section(&mut out, "rep.maps", rep.maps.iter().map(|(k, t)| (k.clone(), matrix_entries(&t.0))).collect());
    }
    out
}

pub fn write_tensor_string(r: &Tensor2) -> String {
    let mut out = format!("dim = {}\n", r.dim());
    write_entries(&mut out, "entries", matrix_entries(&r.0).iter().map(|(i, c)| (i.clone(), c)));
    out
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_spec(path: &Path, spec: &AlgebraSpec) -> Result<()> {
    write(path, &write_spec_string(spec))
}

pub fn write_tensor(path: &Path, r: &Tensor2) -> Result<()> {
    write(path, &write_tensor_string(r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Machine-readable results of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportFile {
    pub verdict: Verdict,
    pub passed: usize,
    pub failed: usize,
    pub reports: Vec<Report>,
}

impl ReportFile {
    pub fn new(reports: Vec<Report>) -> Self {
        let passed = reports.iter().filter(|r| r.passed()).count();
        ReportFile {
            verdict: if all_passed(&reports) { Verdict::Pass } else { Verdict::Fail },
            passed,
            failed: reports.len() - passed,
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write(path, &self.to_json())
    }
}
