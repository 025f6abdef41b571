use std::path::PathBuf;
use std::process::{Command, Output};

use prodcheck_cli::io::{load_mc, load_product, load_spec, Spec};
use prodcheck_cli::{
    cmd_check, cmd_criterion, cmd_natscan, cmd_product, CheckArgs, CliError, CriterionArgs, LawArg, NatscanArgs,
    ProductArgs,
};
use prodcheck_core::parse_rational;
use prodcheck_core::product::{mc_mfa_product, ProductOptions};
use prodcheck_core::ratio;
use prodcheck_core::semantics::ExtValue;

fn model(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("models").join(name)
}

fn prodcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prodcheck"))
        .args(args)
        .env_remove("PRODCHECK_MAX_STATES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn check(mc: &str, spec: &str, init: &str) -> Result<prodcheck_cli::CheckReport, CliError> {
    cmd_check(&CheckArgs { mc: model(mc), spec: model(spec), init: init.into(), oracle_depth: None }, 100_000)
}

#[test]
fn check_values_for_bundled_models() {
    let rep = check("chain_geometric.json", "spec_run_counter_mfa.json", "x,y1").unwrap();
    assert_eq!(rep.exact, ExtValue::Finite(ratio(3, 1)));
    assert_eq!(rep.value.exact, "3");
    assert_eq!(rep.spec_kind, "mfa");

    let rep = check("chain_geometric.json", "spec_accept_all_dfa.json", "x,y").unwrap();
    assert_eq!(rep.exact, ExtValue::Finite(ratio(1, 1)));

    let rep = check("chain_half_loop.json", "spec_triple_loop_mfa.json", "x,y").unwrap();
    assert!(rep.value.infinite);
    assert_eq!(rep.value.exact, "infinity");
}

#[test]
fn nfa_spec_is_determinized_with_notice() {
    let rep = check("chain_two_letters.json", "spec_ends_in_a_nfa.json", "s,q").unwrap();
    assert_eq!(rep.spec_kind, "nfa");
    assert!(rep.notice.is_some());
    let run_count = rep.run_count_value.expect("unambiguous spec");
    assert_eq!(run_count.exact, rep.value.exact);
}

#[test]
fn oracle_approaches_exact_value() {
    let args = CheckArgs {
        mc: model("chain_geometric.json"),
        spec: model("spec_run_counter_mfa.json"),
        init: "x,y1".into(),
        oracle_depth: Some(12),
    };
    let rep = cmd_check(&args, 100_000).unwrap();
    let o = rep.oracle.expect("requested");
    let value = parse_rational(&o.value.exact).unwrap();
    assert!(value < ratio(3, 1));
    assert!(parse_rational(&o.gap.exact).unwrap() < ratio(1, 5));
}

#[test]
fn rendered_values_parse_back() {
    let rep = check("chain_geometric.json", "spec_run_counter_mfa.json", "x,y1").unwrap();
    let json: serde_json::Value = serde_json::from_str(&rep.render(true)).unwrap();
    let exact = json["value"]["exact"].as_str().unwrap();
    assert_eq!(parse_rational(exact).unwrap(), ratio(3, 1));
    assert_eq!(json["value"]["decimal"], "3.000000");
}

#[test]
fn product_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("product.json");
    let rep = cmd_product(
        &ProductArgs {
            mc: model("chain_geometric.json"),
            spec: model("spec_run_counter_mfa.json"),
            out: out.clone(),
            init: None,
        },
        100_000,
    )
    .unwrap();
    assert_eq!(rep.max_row_sum.unwrap().exact, "5/3");

    let mc = load_mc(&model("chain_geometric.json")).unwrap();
    let Spec::Mfa(mfa) = load_spec(&model("spec_run_counter_mfa.json")).unwrap() else {
        panic!("expected an MFA spec");
    };
    let built = mc_mfa_product(&mc, &mfa, &ProductOptions::default()).unwrap();
    let read = load_product(&out).unwrap();
    assert_eq!(read.num_states(), built.num_states());
    for s in 0..built.num_states() {
        assert_eq!(read.row_sum(s), built.row_sum(s));
    }
    assert_eq!(read, built);
}

#[test]
fn natscan_counts_and_parameters() {
    let scan =
        |a: &str, b: &str| cmd_natscan(&NatscanArgs { monoid_a: model(a), monoid_b: model(b), max_set: 4 }).unwrap();
    assert_eq!(scan("monoid_boolean.json", "monoid_boolean.json").count, 2);
    assert_eq!(scan("monoid_boolean.json", "monoid_max01.json").count, 2);
    assert_eq!(scan("monoid_boolean.json", "monoid_mult01.json").count, 2);
    let z3 = scan("monoid_z3.json", "monoid_z3.json");
    assert_eq!(z3.count, 27);
    assert!(z3.families.iter().all(|f| f.parameter.as_ref().is_some_and(|p| p.len() == 3)));
    assert!(z3.certification.starts_with("bounded certification"));
}

#[test]
fn natscan_rejects_bad_monoid() {
    let err = cmd_natscan(&NatscanArgs {
        monoid_a: model("monoid_not_associative.json"),
        monoid_b: model("monoid_boolean.json"),
        max_set: 4,
    })
    .unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.to_string().contains("associativity"));
}

#[test]
fn criterion_verdicts() {
    let run = |law| cmd_criterion(&CriterionArgs { law, samples: 50, seed: 9 }).unwrap();
    assert_eq!(run(LawArg::Mfa).verdict, "pass");
    assert_eq!(run(LawArg::Dfa).verdict, "pass");
    let nfa = run(LawArg::NfaCandidate);
    assert_eq!(nfa.verdict, "fail");
    let no_go = nfa.no_go.unwrap();
    assert!(no_go.witnesses.iter().all(|w| w.contradiction));
    assert!(no_go.agreeing.iter().all(|w| !w.contradiction));
}

#[test]
fn binary_check_succeeds() {
    let o = prodcheck(&[
        "check",
        "--mc",
        model("chain_geometric.json").to_str().unwrap(),
        "--spec",
        model("spec_run_counter_mfa.json").to_str().unwrap(),
        "--init",
        "x,y1",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("value: 3 (3.000000)"));
}

#[test]
fn binary_output_is_deterministic() {
    let args = ["--json", "criterion", "--law", "nfa-candidate", "--samples", "40", "--seed", "17"];
    let a = prodcheck(&args);
    let b = prodcheck(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn binary_input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"kind\": \"mc\",\n  \"alphabet\": [").unwrap();
    let mc = model("chain_geometric.json");
    let spec = model("spec_run_counter_mfa.json");

    let o = prodcheck(&["check", "--mc", broken.to_str().unwrap(), "--spec", spec.to_str().unwrap(), "--init", "x,y1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = prodcheck(&["check", "--mc", mc.to_str().unwrap(), "--spec", spec.to_str().unwrap(), "--init", "nope,y1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_prodcheck"))
        .args(["check", "--mc", mc.to_str().unwrap(), "--spec", spec.to_str().unwrap(), "--init", "x,y1"])
        .env("PRODCHECK_MAX_STATES", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
