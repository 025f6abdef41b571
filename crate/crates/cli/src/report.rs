use std::fmt::Write;

use prodcheck_core::{Rational, Scalar, Value};
use serde::Serialize;

/// An exact value with its six-place decimal, or `"infinity"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueOutput {
    pub exact: String,
    pub decimal: Option<String>,
    pub infinite: bool,
}

impl ValueOutput {
    pub fn of(v: &Value) -> Self {
        match v.finite() {
            Some(r) => Self::rational(r),
            None => ValueOutput { exact: "infinity".into(), decimal: None, infinite: true },
        }
    }

    pub fn rational(r: &Rational) -> Self {
        ValueOutput { exact: r.to_string(), decimal: Some(r.to_decimal(6)), infinite: false }
    }

    fn text(&self) -> String {
        match &self.decimal {
            Some(d) => format!("{} ({d})", self.exact),
            None => self.exact.clone(),
        }
    }
}

fn json<T: Serialize>(t: &T) -> String {
    serde_json::to_string_pretty(t).expect("serializable report")
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleOutput {
    pub depth: usize,
    pub value: ValueOutput,
    pub gap: ValueOutput,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub spec_kind: String,
    pub init: (String, String),
    pub product_states: usize,
    pub value: ValueOutput,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
    /// For NFA specs unambiguous from the initial state: the run-count
    /// value through the MFA embedding.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub run_count_value: Option<ValueOutput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleOutput>,
    #[serde(skip)]
    pub exact: Value,
}

impl CheckReport {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            return json(self);
        }
        let mut s = String::new();
        if let Some(n) = &self.notice {
            writeln!(s, "note: {n}").ok();
        }
        writeln!(s, "spec kind: {}", self.spec_kind).ok();
        writeln!(s, "initial pair: ({},{})", self.init.0, self.init.1).ok();
        writeln!(s, "product states: {}", self.product_states).ok();
        write!(s, "value: {}", self.value.text()).ok();
        if let Some(v) = &self.run_count_value {
            write!(s, "\nrun-count value (unambiguous, via MFA embedding): {}", v.text()).ok();
        }
        if let Some(o) = &self.oracle {
            write!(s, "\noracle at depth {}: {}\ngap: {}", o.depth, o.value.text(), o.gap.text()).ok();
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub out: String,
    pub states: usize,
    pub max_row_sum: Option<ValueOutput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

impl ProductReport {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            return json(self);
        }
        let mut s = String::new();
        if let Some(n) = &self.notice {
            writeln!(s, "note: {n}").ok();
        }
        write!(s, "wrote {} product states to {}", self.states, self.out).ok();
        if let Some(m) = &self.max_row_sum {
            write!(s, "\nmax row sum: {}", m.text()).ok();
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyOutput {
    /// `(u,v)->(p,q)` entries of the `⟨2⟩` component.
    pub table: Vec<String>,
    /// Parameter recovered from the family, when the source is cyclic.
    pub parameter: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NatscanReport {
    pub monoid_a: Vec<String>,
    pub monoid_b: Vec<String>,
    pub max_set: usize,
    pub candidates: u64,
    pub count: usize,
    pub families: Vec<FamilyOutput>,
    pub certification: String,
}

impl NatscanReport {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            return json(self);
        }
        let mut s = String::new();
        writeln!(s, "A = {{{}}}, B = {{{}}}", self.monoid_a.join(", "), self.monoid_b.join(", ")).ok();
        writeln!(s, "natural transformations: {} (of {} candidate tables)", self.count, self.candidates).ok();
        for (i, f) in self.families.iter().enumerate() {
            write!(s, "#{}: {}", i + 1, f.table.join(" ")).ok();
            if let Some(p) = &f.parameter {
                write!(s, "  b = [{}]", p.join(", ")).ok();
            }
            s.push('\n');
        }
        s.push_str(&self.certification);
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FailureOutput {
    pub index: usize,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessOutput {
    pub r: String,
    pub word: String,
    pub left: String,
    pub right: String,
    pub contradiction: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NoGoOutput {
    pub forced_pairs: String,
    pub forced_check: String,
    pub witnesses: Vec<WitnessOutput>,
    /// Inputs on which the forced law does satisfy the equation.
    pub agreeing: Vec<WitnessOutput>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutput {
    pub law: String,
    pub seed: u64,
    pub samples: usize,
    pub passed: usize,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FailureOutput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub no_go: Option<NoGoOutput>,
}

impl CriterionOutput {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            return json(self);
        }
        let mut s = String::new();
        writeln!(s, "law: {}", self.law).ok();
        writeln!(s, "sampled inputs (seed {}): {}/{} satisfy the criterion", self.seed, self.passed, self.samples).ok();
        if let Some(f) = &self.first_failure {
            writeln!(s, "first failing input #{}: left = {}, right = {}", f.index, f.left, f.right).ok();
        }
        if let Some(n) = &self.no_go {
            writeln!(s, "forced on pairs: {}", n.forced_pairs).ok();
            writeln!(s, "forced on CHECK: {}", n.forced_check).ok();
            for w in &n.witnesses {
                writeln!(
                    s,
                    "witness r = {}, w = {}: left = {}, right = {}{}",
                    w.r,
                    w.word,
                    w.left,
                    w.right,
                    if w.contradiction { "  (contradiction)" } else { "" }
                )
                .ok();
            }
            for w in &n.agreeing {
                writeln!(s, "zero-successor input r = {}, {}: left = {}, right = {}", w.r, w.word, w.left, w.right)
                    .ok();
            }
        }
        write!(s, "verdict: {}", self.verdict).ok();
        s
    }
}
