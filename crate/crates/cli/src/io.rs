//! JSON model files.
//!
//! Rationals are strings `"p/q"` or `"p"`; `"CHECK"` names ✓. Absent
//! transition entries mean weight 0, multiplicity 0 or the empty set.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use prodcheck_core::models::{validate_mc, Alphabet, Dfa, Mfa, Nfa, StateNames, Target, CHECK};
use prodcheck_core::natlaws::FinMonoid;
use prodcheck_core::product::pair_name;
use prodcheck_core::{parse_rational, Mc, Product, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McFile {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub label: BTreeMap<String, String>,
    #[serde(default)]
    pub trans: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DfaEdge {
    pub to: String,
    pub accept: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DfaFile {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub delta: BTreeMap<String, BTreeMap<String, DfaEdge>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NfaFile {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    #[serde(default)]
    pub delta: BTreeMap<String, BTreeMap<String, Vec<String>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MfaFile {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    #[serde(default)]
    pub delta: BTreeMap<String, BTreeMap<String, BTreeMap<String, u64>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    pub elements: Vec<String>,
    pub op: Vec<Vec<String>>,
    pub zero: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductFile {
    pub alphabet: Vec<String>,
    pub pairs: Vec<(String, String)>,
    #[serde(default)]
    pub trans: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModelFile {
    Mc(McFile),
    Dfa(DfaFile),
    Nfa(NfaFile),
    Mfa(MfaFile),
    Monoid(MonoidFile),
    Product(ProductFile),
}

impl ModelFile {
    pub fn kind(&self) -> &'static str {
        match self {
            ModelFile::Mc(_) => "mc",
            ModelFile::Dfa(_) => "dfa",
            ModelFile::Nfa(_) => "nfa",
            ModelFile::Mfa(_) => "mfa",
            ModelFile::Monoid(_) => "monoid",
            ModelFile::Product(_) => "product",
        }
    }
}

/// A specification automaton as loaded from a file.
#[derive(Clone, Debug)]
pub enum Spec {
    Dfa(Dfa),
    Nfa(Nfa),
    Mfa(Mfa),
}

impl Spec {
    pub fn states(&self) -> &StateNames {
        match self {
            Spec::Dfa(d) => d.states(),
            Spec::Nfa(n) => n.states(),
            Spec::Mfa(m) => m.states(),
        }
    }
}

fn input(path: &Path, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{}: {msg}", path.display()))
}

/// Parses text, reporting syntax and schema errors with line and column.
pub fn parse_model(text: &str, path: &Path) -> Result<ModelFile, CliError> {
    serde_json::from_str(text).map_err(|e| {
        input(path, format!("line {}, column {}: {}", e.line(), e.column(), strip_position(&e.to_string())))
    })
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn read_model(path: &Path) -> Result<ModelFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| input(path, e))?;
    parse_model(&text, path)
}

fn model_err(path: &Path) -> impl Fn(prodcheck_core::models::ModelError) -> CliError + '_ {
    move |e| input(path, e)
}

fn rational(path: &Path, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| input(path, e))
}

pub fn mc_from_file(f: &McFile, path: &Path) -> Result<Mc, CliError> {
    let err = model_err(path);
    let alphabet = Alphabet::new(f.alphabet.iter()).map_err(&err)?;
    let states = StateNames::new(f.states.iter()).map_err(&err)?;
    let mut trans = Vec::new();
    for (s, row) in &f.trans {
        for (t, p) in row {
            trans.push((s.as_str(), t.as_str(), rational(path, p)?));
        }
    }
    let mc =
        Mc::from_names(alphabet, states, f.label.iter().map(|(s, l)| (s.as_str(), l.as_str())), trans).map_err(&err)?;
    let report = validate_mc(&mc);
    if let Some(v) = report.violations.first() {
        return Err(input(path, &v.message));
    }
    Ok(mc)
}

pub fn dfa_from_file(f: &DfaFile, path: &Path) -> Result<Dfa, CliError> {
    let err = model_err(path);
    let alphabet = Alphabet::new(f.alphabet.iter()).map_err(&err)?;
    let states = StateNames::new(f.states.iter()).map_err(&err)?;
    let delta = f
        .delta
        .iter()
        .flat_map(|(s, row)| row.iter().map(move |(l, e)| (s.as_str(), l.as_str(), e.to.as_str(), e.accept)));
    Dfa::from_names(alphabet, states, delta).map_err(&err)
}

pub fn nfa_from_file(f: &NfaFile, path: &Path) -> Result<Nfa, CliError> {
    let err = model_err(path);
    let alphabet = Alphabet::new(f.alphabet.iter()).map_err(&err)?;
    let states = StateNames::new(f.states.iter()).map_err(&err)?;
    let delta = f.delta.iter().flat_map(|(s, row)| {
        row.iter().flat_map(move |(l, ts)| ts.iter().map(move |t| (s.as_str(), l.as_str(), t.as_str())))
    });
    Nfa::from_names(alphabet, states, delta).map_err(&err)
}

pub fn mfa_from_file(f: &MfaFile, path: &Path) -> Result<Mfa, CliError> {
    let err = model_err(path);
    let alphabet = Alphabet::new(f.alphabet.iter()).map_err(&err)?;
    let states = StateNames::new(f.states.iter()).map_err(&err)?;
    let delta = f.delta.iter().flat_map(|(s, row)| {
        row.iter().flat_map(move |(l, ts)| ts.iter().map(move |(t, m)| (s.as_str(), l.as_str(), t.as_str(), *m)))
    });
    Mfa::from_names(alphabet, states, delta).map_err(&err)
}

pub fn monoid_from_file(f: &MonoidFile, path: &Path) -> Result<FinMonoid, CliError> {
    FinMonoid::from_names(&f.elements, &f.op, &f.zero).map_err(|e| input(path, e))
}

pub fn product_from_file(f: &ProductFile, path: &Path) -> Result<Product, CliError> {
    let alphabet = Alphabet::new(f.alphabet.iter()).map_err(model_err(path))?;
    let index: BTreeMap<String, usize> = f.pairs.iter().enumerate().map(|(i, p)| (pair_name(p), i)).collect();
    let mut rows = vec![Vec::new(); f.pairs.len()];
    for (s, row) in &f.trans {
        let i = *index.get(s).ok_or_else(|| input(path, format!("unknown pair {s:?}")))?;
        for (t, w) in row {
            let target = if t == CHECK {
                Target::Check
            } else {
                Target::State(*index.get(t).ok_or_else(|| input(path, format!("unknown pair {t:?} in row {s}")))?)
            };
            rows[i].push((target, rational(path, w)?));
        }
    }
    Product::from_parts(alphabet, f.pairs.clone(), rows).map_err(|e| input(path, e))
}

pub fn load_mc(path: &Path) -> Result<Mc, CliError> {
    match read_model(path)? {
        ModelFile::Mc(f) => mc_from_file(&f, path),
        other => Err(input(path, format!("expected kind \"mc\", found {:?}", other.kind()))),
    }
}

pub fn load_spec(path: &Path) -> Result<Spec, CliError> {
    match read_model(path)? {
        ModelFile::Dfa(f) => dfa_from_file(&f, path).map(Spec::Dfa),
        ModelFile::Nfa(f) => nfa_from_file(&f, path).map(Spec::Nfa),
        ModelFile::Mfa(f) => mfa_from_file(&f, path).map(Spec::Mfa),
        other => Err(input(path, format!("expected kind \"dfa\", \"nfa\" or \"mfa\", found {:?}", other.kind()))),
    }
}

/// Monoid files may omit `"kind"`.
pub fn load_monoid(path: &Path) -> Result<FinMonoid, CliError> {
    let text = fs::read_to_string(path).map_err(|e| input(path, e))?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| {
        input(path, format!("line {}, column {}: {}", e.line(), e.column(), strip_position(&e.to_string())))
    })?;
    if value.get("kind").is_none() {
        let f: MonoidFile = serde_json::from_value(value).map_err(|e| input(path, e))?;
        return monoid_from_file(&f, path);
    }
    match parse_model(&text, path)? {
        ModelFile::Monoid(f) => monoid_from_file(&f, path),
        other => Err(input(path, format!("expected kind \"monoid\", found {:?}", other.kind()))),
    }
}

pub fn load_product(path: &Path) -> Result<Product, CliError> {
    match read_model(path)? {
        ModelFile::Product(f) => product_from_file(&f, path),
        other => Err(input(path, format!("expected kind \"product\", found {:?}", other.kind()))),
    }
}

/// Serializes a product; [`load_product`] reads it back unchanged.
pub fn product_to_file(p: &Product) -> ModelFile {
    let name = |t: &Target| match t {
        Target::Check => CHECK.to_string(),
        Target::State(j) => p.state_name(*j),
    };
    let trans = (0..p.num_states())
        .filter(|&s| !p.row(s).is_empty())
        .map(|s| (p.state_name(s), p.row(s).iter().map(|(t, w)| (name(t), w.to_string())).collect()))
        .collect();
    ModelFile::Product(ProductFile { alphabet: p.alphabet().names().to_vec(), pairs: p.pairs().to_vec(), trans })
}

pub fn to_json(model: &ModelFile) -> String {
    serde_json::to_string_pretty(model).expect("serializable")
}
