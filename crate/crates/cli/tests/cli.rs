use std::process::{Command, Output};

use wreath_mahonian::algebra::BiPoly;
use wreath_mahonian::distributions::{
    eulerian, maj_a_enumerate, maj_a_recurrence, EnumConfig, EulerianMethod, MahonianSpec,
};
use wreath_mahonian::perm::LOrder;

fn wreath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn stats_examples() {
    let out = wreath(&[
        "stats", "--a", "2", "--L", "1", "--perm", "1^1 2^0", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, serde_json::json!({"des": 1, "set": [0], "rmaj": 2}));

    let out = wreath(&[
        "stats", "--a", "1", "--L", "", "--perm", "2^0 1^0", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, serde_json::json!({"des": 1, "set": [1], "rmaj": 1}));

    let out = wreath(&["stats", "--a", "2", "--L", "1", "--perm", "1^1 2^0"]);
    assert_eq!(stdout(&out), "des=1 set=[0] rmaj=2");
}

#[test]
fn stats_tilde_and_signed_input() {
    let out = wreath(&[
        "stats", "--a", "2", "--L", "1", "--perm", "2 1", "--tilde", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["tilde"],
        serde_json::json!({"des": 2, "set": [1, 2], "maj": 3})
    );
}

#[test]
fn stats_parse_error_exits_2() {
    let out = wreath(&["stats", "--a", "2", "--L", "1", "--perm", "1^9 2^0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("color 9 out of range"), "{err}");
}

#[test]
fn poly_examples() {
    let out = wreath(&[
        "poly",
        "--a",
        "2",
        "--ell",
        "1",
        "--n",
        "1",
        "--method",
        "recurrence",
        "--format",
        "text",
    ]);
    assert_eq!(stdout(&out), "1 + t*q");
    let out = wreath(&[
        "poly",
        "--a",
        "1",
        "--ell",
        "0",
        "--n",
        "3",
        "--method",
        "enumerate",
        "--q1",
    ]);
    assert_eq!(stdout(&out), "1 + 4t + t^2");
    let out = wreath(&["poly", "--a", "3", "--ell", "2", "--n", "0"]);
    assert_eq!(stdout(&out), "1");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn poly_json_round_trips_to_library_values() {
    let cfg = EnumConfig::default();
    for (a, ell, n) in [(2u32, 1u32, 3usize), (3, 2, 3), (4, 0, 2)] {
        let (a_s, ell_s, n_s) = (a.to_string(), ell.to_string(), n.to_string());
        let base = [
            "poly", "--a", &a_s, "--ell", &ell_s, "--n", &n_s, "--format", "json",
        ];

        let out = wreath(&base);
        let parsed: BiPoly = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(parsed, maj_a_recurrence(a, ell, n).unwrap());

        let mut args = base.to_vec();
        args.extend(["--method", "enumerate", "--jobs", "2"]);
        let parsed: BiPoly = serde_json::from_str(&stdout(&wreath(&args))).unwrap();
        let order = LOrder::first_colors(a, ell).unwrap();
        assert_eq!(parsed, maj_a_enumerate(&order, n, &cfg).unwrap());

        let spec = MahonianSpec::new(a, ell, n).unwrap();
        for method in ["enumerate", "recurrence", "derivative", "specialize"] {
            let mut args = base.to_vec();
            args.extend(["--q1", "--method", method]);
            let parsed: BiPoly = serde_json::from_str(&stdout(&wreath(&args))).unwrap();
            let expected =
                eulerian(&spec, method.parse::<EulerianMethod>().unwrap(), &cfg).unwrap();
            assert_eq!(parsed, expected, "{method}");
        }
    }
}

#[test]
fn poly_latex() {
    let out = wreath(&[
        "poly", "--a", "2", "--L", "1", "--n", "2", "--format", "latex",
    ]);
    assert_eq!(stdout(&out), "1 + 3tq + 3tq^{2} + t^{2}q^{3}");
}

#[test]
fn poly_usage_errors() {
    let out = wreath(&["poly", "--a", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = wreath(&["poly", "--a", "2", "--ell", "1", "--L", "1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = wreath(&["poly", "--a", "2", "--ell", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = wreath(&[
        "poly",
        "--a",
        "2",
        "--ell",
        "1",
        "--n",
        "2",
        "--method",
        "derivative",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guard_exceeded_exits_3() {
    let out = wreath(&[
        "poly",
        "--a",
        "4",
        "--ell",
        "1",
        "--n",
        "9",
        "--method",
        "enumerate",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = wreath(&[
        "poly",
        "--a",
        "2",
        "--ell",
        "1",
        "--n",
        "4",
        "--method",
        "enumerate",
        "--limit",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = wreath(&[
        "poly",
        "--a",
        "2",
        "--ell",
        "1",
        "--n",
        "4",
        "--method",
        "enumerate",
        "--limit",
        "100",
        "--no-guard",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn table_rows() {
    let out = wreath(&["table", "--a", "2", "--ell", "1", "--N", "3", "--q1"]);
    assert_eq!(
        stdout(&out),
        "n=0: 1\nn=1: 1 + t\nn=2: 1 + 6t + t^2\nn=3: 1 + 23t + 23t^2 + t^3"
    );
    let out = wreath(&[
        "table", "--a", "2", "--ell", "1", "--N", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let p2: BiPoly = serde_json::from_value(rows[2]["poly"].clone()).unwrap();
    assert_eq!(p2, maj_a_recurrence(2, 1, 2).unwrap());
}

#[test]
fn verify_examples() {
    let out = wreath(&[
        "verify",
        "--identity",
        "quotient",
        "--a",
        "2",
        "--ell",
        "1",
        "--n",
        "3",
        "--S",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "quotient: holds");

    let out = wreath(&[
        "verify",
        "--identity",
        "gf",
        "--a",
        "2",
        "--ell",
        "2",
        "--N",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["identity"], "gf");
    assert_eq!(v["holds"], true);
    assert!(v["witness"].is_null());
    assert_eq!(v["params"]["N"], 4);

    let out = wreath(&["verify", "--identity", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_every_identity_from_the_command_line() {
    for id in [
        "recursion",
        "recursion2",
        "quotient",
        "des-quotient",
        "gf",
        "egf",
        "lemma",
        "l-independence",
        "maj-rmaj",
        "tilde",
    ] {
        let out = wreath(&[
            "verify",
            "--identity",
            id,
            "--a",
            "3",
            "--ell",
            "1",
            "--n",
            "3",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{id}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let out = wreath(&[
        "verify",
        "--identity",
        "quotient",
        "--a",
        "2",
        "--L",
        "0",
        "--n",
        "3",
        "--source",
        "enumeration",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_guard_exits_3() {
    let out = wreath(&[
        "verify",
        "--identity",
        "tilde",
        "--a",
        "4",
        "--ell",
        "1",
        "--n",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(3));
}
