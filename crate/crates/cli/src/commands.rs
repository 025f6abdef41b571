use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use prodcheck_core::models::{check_unambiguous, determinize, embed_nfa_as_mfa, subset_name, Dfa, Nfa, StateNames};
use prodcheck_core::natlaws::{
    cyclic_shape, enumerate_nat_trans, extract_cyclic, no_go_witness, run_law, sigma_one_check, CommMonoid, Law,
    NoGoReport,
};
use prodcheck_core::product::{mc_dfa_product, mc_mfa_product, ProductError, ProductOptions};
use prodcheck_core::semantics::{
    dfa_bounded_language, infer_q_expected, infer_q_prob, mc_bounded_traces, mfa_bounded_multiset,
    nfa_bounded_language, product_value_exact, ExtValue,
};
use prodcheck_core::{ratio, Mc, Product, Rational, Value};

use crate::io::{load_mc, load_monoid, load_spec, product_to_file, to_json, Spec};
use crate::report::*;
use crate::{CheckArgs, CliError, CriterionArgs, LawArg, NatscanArgs, ProductArgs};

pub const MAX_STATES_VAR: &str = "PRODCHECK_MAX_STATES";
const DEFAULT_MAX_STATES: usize = 100_000;

const NFA_NOTICE: &str = "NFA specification: no distributive law of chains over NFAs satisfies the correctness \
criterion, so the NFA is determinized by subset construction and the DFA product is checked instead";

pub fn max_states_from_env() -> Result<usize, CliError> {
    match std::env::var(MAX_STATES_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{MAX_STATES_VAR} must be a natural number, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_STATES),
    }
}

fn parse_init(text: &str) -> Result<(String, String), CliError> {
    text.split_once(',')
        .map(|(x, y)| (x.trim().to_string(), y.trim().to_string()))
        .ok_or_else(|| CliError::Input(format!("--init expects MCSTATE,SPECSTATE, got {text:?}")))
}

fn lookup(names: &StateNames, name: &str, what: &str) -> Result<usize, CliError> {
    names.get(name).ok_or_else(|| CliError::Input(format!("unknown initial {what} state {name:?}")))
}

fn product_err(e: ProductError) -> CliError {
    CliError::Input(e.to_string())
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

fn options(initial: Option<(usize, usize)>, max_states: usize) -> ProductOptions {
    ProductOptions { initial: initial.map(|p| vec![p]), max_states }
}

/// DFA for an NFA spec, with the DFA state standing for `{y}`.
fn determinized(nfa: &Nfa, y: Option<usize>) -> (Dfa, Option<usize>) {
    let dfa = determinize(nfa, y.as_ref().map(std::slice::from_ref));
    let start = y.map(|y| dfa.states().get(&subset_name(nfa, &BTreeSet::from([y]))).expect("start subset is built"));
    (dfa, start)
}

fn solve(p: &Product, x: &str, y: &str) -> Result<(usize, Value), CliError> {
    let s = p.find(x, y).ok_or_else(|| internal(format!("initial pair ({x},{y}) missing from product")))?;
    Ok((s, product_value_exact(p, s).map_err(internal)?))
}

pub fn cmd_check(args: &CheckArgs, max_states: usize) -> Result<CheckReport, CliError> {
    let mc = load_mc(&args.mc)?;
    let spec = load_spec(&args.spec)?;
    let (xn, yn) = parse_init(&args.init)?;
    let x = lookup(mc.states(), &xn, "chain")?;
    let y = lookup(spec.states(), &yn, "spec")?;
    let mut notice = None;
    let mut run_count_value = None;
    let (kind, product, spec_state) = match &spec {
        Spec::Dfa(d) => {
            ("dfa", mc_dfa_product(&mc, d, &options(Some((x, y)), max_states)).map_err(product_err)?, yn.clone())
        }
        Spec::Mfa(m) => {
            ("mfa", mc_mfa_product(&mc, m, &options(Some((x, y)), max_states)).map_err(product_err)?, yn.clone())
        }
        Spec::Nfa(n) => {
            notice = Some(NFA_NOTICE.to_string());
            if check_unambiguous(n, Some(&[y]), 0).unambiguous {
                let p = mc_mfa_product(&mc, &embed_nfa_as_mfa(n), &options(Some((x, y)), max_states))
                    .map_err(product_err)?;
                run_count_value = Some(ValueOutput::of(&solve(&p, &xn, &yn)?.1));
            }
            let (dfa, start) = determinized(n, Some(y));
            let start = start.expect("requested");
            let p = mc_dfa_product(&mc, &dfa, &options(Some((x, start)), max_states)).map_err(product_err)?;
            ("nfa", p, dfa.states().name(start).to_string())
        }
    };
    let (_, exact) = solve(&product, &xn, &spec_state)?;
    let oracle = match args.oracle_depth {
        Some(depth) => Some(oracle(&mc, &spec, x, y, depth, &exact)?),
        None => None,
    };
    Ok(CheckReport {
        spec_kind: kind.into(),
        init: (xn, yn),
        product_states: product.num_states(),
        value: ValueOutput::of(&exact),
        notice,
        run_count_value,
        oracle,
        exact,
    })
}

fn oracle(mc: &Mc, spec: &Spec, x: usize, y: usize, depth: usize, exact: &Value) -> Result<OracleOutput, CliError> {
    let traces = mc_bounded_traces(mc, x, depth).map_err(internal)?;
    let tr = mc.alphabet().translation_to(match spec {
        Spec::Dfa(d) => d.alphabet(),
        Spec::Nfa(n) => n.alphabet(),
        Spec::Mfa(m) => m.alphabet(),
    });
    let tr = tr.map_err(|e| CliError::Input(e.to_string()))?;
    let traces = traces.iter().map(|(w, p)| (w.iter().map(|&a| tr[a]).collect(), p.clone())).collect();
    let value: Rational = match spec {
        Spec::Dfa(d) => infer_q_prob(&traces, &dfa_bounded_language(d, y, depth).map_err(internal)?),
        Spec::Nfa(n) => infer_q_prob(&traces, &nfa_bounded_language(n, y, depth).map_err(internal)?),
        Spec::Mfa(m) => infer_q_expected(&traces, &mfa_bounded_multiset(m, y, depth).map_err(internal)?),
    };
    let gap = match exact {
        ExtValue::Finite(e) => ExtValue::Finite(num_abs(e.clone() - value.clone())),
        ExtValue::Infinite => ExtValue::Infinite,
    };
    Ok(OracleOutput { depth, value: ValueOutput::rational(&value), gap: ValueOutput::of(&gap) })
}

fn num_abs(r: Rational) -> Rational {
    if r < ratio(0, 1) {
        -r
    } else {
        r
    }
}

pub fn cmd_product(args: &ProductArgs, max_states: usize) -> Result<ProductReport, CliError> {
    let mc = load_mc(&args.mc)?;
    let spec = load_spec(&args.spec)?;
    let init = match &args.init {
        Some(t) => {
            let (xn, yn) = parse_init(t)?;
            Some((lookup(mc.states(), &xn, "chain")?, lookup(spec.states(), &yn, "spec")?))
        }
        None => None,
    };
    let mut notice = None;
    let product = match &spec {
        Spec::Dfa(d) => mc_dfa_product(&mc, d, &options(init, max_states)).map_err(product_err)?,
        Spec::Mfa(m) => mc_mfa_product(&mc, m, &options(init, max_states)).map_err(product_err)?,
        Spec::Nfa(n) => {
            notice = Some(NFA_NOTICE.to_string());
            let (dfa, start) = determinized(n, init.map(|(_, y)| y));
            let init = init.map(|(x, _)| (x, start.expect("requested")));
            mc_dfa_product(&mc, &dfa, &options(init, max_states)).map_err(product_err)?
        }
    };
    let max_row_sum = (0..product.num_states()).map(|s| product.row_sum(s)).max();
    write_file(&args.out, &to_json(&product_to_file(&product)))?;
    Ok(ProductReport {
        out: args.out.display().to_string(),
        states: product.num_states(),
        max_row_sum: max_row_sum.map(|m| ValueOutput::rational(&m)),
        notice,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, format!("{text}\n")).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn cmd_natscan(args: &NatscanArgs) -> Result<NatscanReport, CliError> {
    let a = load_monoid(&args.monoid_a)?;
    let b = load_monoid(&args.monoid_b)?;
    let e = enumerate_nat_trans(&a, &b, args.max_set).map_err(|e| CliError::Input(e.to_string()))?;
    let cyclic = cyclic_shape(&a).is_ok();
    let mut families = Vec::with_capacity(e.families.len());
    for fam in &e.families {
        let parameter = if cyclic {
            let p = extract_cyclic(fam).map_err(internal)?;
            Some(p.iter().map(|c| b.show(c)).collect())
        } else {
            None
        };
        families.push(FamilyOutput { table: fam.describe(), parameter });
    }
    Ok(NatscanReport {
        monoid_a: a.names().to_vec(),
        monoid_b: b.names().to_vec(),
        max_set: e.max_set,
        candidates: e.candidates,
        count: families.len(),
        families,
        certification: format!(
            "bounded certification: each listed table passes every naturality square between sets of size <= {}; \
             natural extension to larger sets is not checked",
            e.max_set
        ),
    })
}

fn witness_output(rep: &NoGoReport<Rational>, word: String) -> WitnessOutput {
    WitnessOutput {
        r: rep.r.to_string(),
        word,
        left: rep.left.to_string(),
        right: rep.right.to_string(),
        contradiction: rep.contradiction(),
    }
}

pub fn cmd_criterion(args: &CriterionArgs) -> Result<CriterionOutput, CliError> {
    let law = match args.law {
        LawArg::Mfa => Law::Mfa,
        LawArg::Dfa => Law::Dfa,
        LawArg::NfaCandidate => Law::NfaCandidate,
    };
    let rep = run_law::<Rational>(law, args.samples, args.seed);
    let first_failure = rep.first_failure.as_ref().map(|f| FailureOutput {
        index: f.index,
        left: f.left.to_string(),
        right: f.right.to_string(),
    });
    let (no_go, verdict) = if law == Law::NfaCandidate {
        let mut witnesses = Vec::new();
        for (r, w, text) in [(ratio(1, 1), vec![0], "a"), (ratio(1, 2), vec![0, 1], "ab")] {
            let rep = no_go_witness(r, 0, &w, 2).map_err(internal)?;
            witnesses.push(witness_output(&rep, text.into()));
        }
        let mut agreeing = Vec::new();
        for checks in [[true, false], [false, true]] {
            let rep = sigma_one_check(ratio(1, 3), 0, &checks).map_err(internal)?;
            agreeing.push(witness_output(&rep, format!("CHECK in delta(a) = {}", checks[0])));
        }
        let broken = witnesses.iter().any(|w| w.contradiction);
        let out = NoGoOutput {
            forced_pairs: "lambda''(sigma, delta) = 0".into(),
            forced_check: "lambda'(sigma, delta) = (1 - sum sigma) * [CHECK in delta(a)]".into(),
            witnesses,
            agreeing,
        };
        (Some(out), if broken || !rep.all_passed() { "fail" } else { "pass" })
    } else {
        (None, if rep.all_passed() { "pass" } else { "fail" })
    };
    Ok(CriterionOutput {
        law: law.to_string(),
        seed: args.seed,
        samples: rep.samples,
        passed: rep.passed,
        verdict: verdict.into(),
        first_failure,
        no_go,
    })
}
