use serde_json::Value;
use symgw::cli::run_command;

fn json(argv: &[&str]) -> (i32, Value) {
    let (code, out) = run_command(argv);
    (code, serde_json::from_str(&out).expect("cli output is json"))
}

#[test]
fn invariant_both_reports_equal_audit() {
    let (code, v) = json(&[
        "invariant", "--n", "2", "--r", "2", "--mu1", "2(E1)", "--mu2", "2(E2)", "--a", "0", "--beta", "1,1",
        "--formula", "both",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "t1+t2");
    assert_eq!(v["audit"]["status"], "EQUAL");
    assert_eq!(v["t_sum_multiplicity"], 1);
}

#[test]
fn invariant_closed_form_values() {
    for d in 1..=3 {
        let beta = d.to_string();
        let (_, v) = json(&[
            "invariant", "--n", "2", "--r", "1", "--mu1", "1(E1),1(E1)", "--mu2", "1(E1),1(E1)", "--a", "2", "--beta",
            &beta,
        ]);
        assert_eq!(v["value"], format!("{}*t1+{}*t2", 4 * d, 4 * d));
    }
}

#[test]
fn adjacent_label_is_flagged() {
    let (code, v) = json(&[
        "invariant", "--n", "1", "--r", "3", "--mu1", "1(E1)", "--mu2", "1(E1)", "--a", "0", "--beta", "0,1,0",
        "--formula", "both",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["audit"]["status"], "DISCREPANT");
    assert_eq!(v["audit"]["family"], "adjacent_label");
    assert_eq!(v["value"], "0");
}

#[test]
fn hurwitz_oracles_agree() {
    let (code, v) = json(&["hurwitz", "--lambda", "2,1", "--rho", "3", "--genus", "0", "--oracle", "both"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "1");
    assert_eq!(v["agreement"], true);
}

#[test]
fn pairing_gram_is_symmetric() {
    let (code, v) = json(&["pairing", "--r", "1", "--gram", "2"]);
    assert_eq!(code, 0);
    let gram = v["gram"].as_array().expect("gram rows");
    for (i, row) in gram.iter().enumerate() {
        for (j, x) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(x, &gram[j][i]);
        }
    }
}

#[test]
fn series_flags_missing_degree_zero() {
    let (code, v) = json(&[
        "series", "--r", "1", "--alpha1", "2(E1)", "--theta", "D1", "--alpha2", "2(E1)", "--u-order", "1", "--s-order",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["partial"], true);
    assert_eq!(v["missing_degree_zero"], serde_json::json!([0, 1]));
}

#[test]
fn wdvv_on_builtin_fixture_verifies() {
    let (code, v) = json(&["wdvv", "--s-order", "2", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["verify"]["violations"], serde_json::json!([]));
}

#[test]
fn check_cartan_passes() {
    let (code, v) = json(&["check", "--suite", "cartan"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
}

#[test]
fn errors_are_structured() {
    let (code, v) = json(&["hurwitz", "--lambda", "2,x", "--rho", "3", "--genus", "0"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "parse");
    let (code, v) = json(&["hurwitz", "--lambda", "2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "usage");
    let (code, v) = json(&["invariant", "--n", "2", "--r", "1", "--mu1", "2(E1)", "--mu2", "1(E1)", "--a", "0", "--beta", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "size_mismatch");
}

#[test]
fn output_is_deterministic() {
    let argv = ["wdvv", "--s-order", "1", "--order", "reversed"];
    assert_eq!(run_command(&argv), run_command(&argv));
}
