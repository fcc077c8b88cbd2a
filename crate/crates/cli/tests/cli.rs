use std::process::{Command, Output};

const THETA: &str = "(a+ b+ c+)(c+ b+ a+)";

fn ribbon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ribbon(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

#[test]
fn info_of_twisted_loop() {
    assert_eq!(stdout(&["info", "(e+ e-)"]), "v=1 e=1 f=1 genus=1 nonorientable\n");
}

#[test]
fn info_as_json() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "info", THETA])).unwrap();
    assert_eq!(v["v"], 2);
    assert_eq!(v["f"], 3);
    assert_eq!(v["orientable"], true);
}

#[test]
fn penrose_of_theta() {
    assert_eq!(stdout(&["poly", "penrose", THETA]), "x^3 - 3*x^2 + 2*x\n");
    for route in ["weights", "subsets", "chromatic-sum"] {
        assert_eq!(stdout(&["poly", "penrose", THETA, "--route", route]), "x^3 - 3*x^2 + 2*x\n");
    }
}

#[test]
fn penrose_evaluated() {
    assert_eq!(stdout(&["poly", "penrose", THETA, "--at", "x=3"]), "6\n");
    assert_eq!(stdout(&["poly", "penrose", THETA, "--at", "x=-2"]), "-24\n");
}

#[test]
fn chroma_sum_needs_a_plane_graph() {
    let out = ribbon(&["poly", "penrose", "(e+ e-)", "--route", "chromatic-sum"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn transition_with_numeric_weights() {
    assert_eq!(stdout(&["poly", "transition", "(e+ e+)", "--weights", "[1,1,1]"]), "t^2 + 2*t\n");
    assert_eq!(
        stdout(&["poly", "transition", "(e+ e+)", "--weights", "[1,1,1]", "--recursive"]),
        "t^2 + 2*t\n"
    );
}

#[test]
fn bollobas_riordan_of_theta() {
    assert_eq!(stdout(&["poly", "br", THETA]), "y^2 + 3*y + x + 2\n");
}

#[test]
fn partial_substitution() {
    assert_eq!(stdout(&["poly", "br", THETA, "--at", "x=1"]), "y^2 + 3*y + 3\n");
}

#[test]
fn orbit_of_the_loop_is_every_one_edge_graph() {
    let orbit = stdout(&["orbit", "(e+ e+)", "--subgroup", "full"]);
    assert_eq!(orbit, stdout(&["enumerate", "1"]));
    assert_eq!(orbit.lines().count(), 3);
}

#[test]
fn partial_duals_of_the_loop() {
    assert_eq!(stdout(&["orbit", "(e+ e+)", "--subgroup", "delta"]).lines().count(), 2);
}

#[test]
fn apply_and_dual() {
    let twisted = stdout(&["apply", "(e+ e+)", "--gamma", "tau(e)"]);
    assert_eq!(stdout(&["info", twisted.trim()]), "v=1 e=1 f=1 genus=1 nonorientable\n");
    let dual = stdout(&["dual", "(e+)(e+)"]);
    assert_eq!(stdout(&["info", dual.trim()]), "v=1 e=1 f=2 genus=0 orientable\n");
    assert_eq!(stdout(&["dual", "(e+)(e+)", "--edges", "e"]), dual);
}

#[test]
fn medial_and_cycle_family_graphs() {
    let m = stdout(&["medial", "(e+ e+)"]);
    let f = m.lines().next().unwrap();
    assert_eq!(stdout(&["cfg", f]), stdout(&["orbit", "(e+ e+)"]));
    assert_eq!(stdout(&["cfg", f, "--duality-only"]), stdout(&["orbit", "(e+ e+)", "--subgroup", "delta"]));
}

#[test]
fn valuations_of_theta() {
    assert_eq!(stdout(&["valuations", THETA, "-k", "3"]), "6\n");
}

#[test]
fn graph_from_file() {
    let path = std::env::temp_dir().join(format!("ribbon-cli-{}.txt", std::process::id()));
    std::fs::write(&path, format!("{THETA}\n")).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["poly", "penrose", "--file", p]), "x^3 - 3*x^2 + 2*x\n");
    // The inline graph takes precedence over the file.
    assert_eq!(stdout(&["info", "(e+ e-)", "--file", p]), "v=1 e=1 f=1 genus=1 nonorientable\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn verify_group_relations() {
    let out = ribbon(&["verify", "group-relations", "--max-edges", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("group-relations: PASS"));
}

#[test]
fn verify_pac_on_plane_graphs() {
    assert_eq!(ribbon(&["verify", "pac", "--max-edges", "3"]).status.code(), Some(0));
}

#[test]
fn verify_failure_exits_one() {
    let out = ribbon(&["verify", "aigner", "--max-edges", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn verify_describe_and_list() {
    assert!(stdout(&["verify", "qsd", "--describe"]).contains("Q(G^{Γ}, (α,β,γ)^{Γ}, t)"));
    assert_eq!(stdout(&["verify", "--list"]).lines().count(), 26);
}

#[test]
fn verify_report_as_json() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "verify", "euler-dual", "--max-edges", "2"])).unwrap();
    assert_eq!(v["name"], "euler-dual");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ribbon(&["info", "(e+"]).status.code(), Some(2));
    assert_eq!(ribbon(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ribbon(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(ribbon(&["info"]).status.code(), Some(2));
}
