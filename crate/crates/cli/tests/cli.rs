use pencil_cli::run;
use serde_json::Value;

fn go(args: &[&str]) -> pencil_cli::Output {
    run(std::iter::once("pencil-git").chain(args.iter().copied()))
}

#[test]
fn classify_representative() {
    let out = go(&["classify", "--field", "fp:13", "--pencil", "rep:Z1"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "Z1\n"));
    let out = go(&["classify", "--pencil", "f=[0,0,1,0];g=[1,1,0,0]"]);
    assert_eq!(out.stdout, "Z3_1\n");
}

#[test]
fn chow_piece_final() {
    let out = go(&["chow", "piece", "FINAL", "1"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "Z/2 + Z/3\n"));
    assert_eq!(go(&["chow", "piece", "PGL2_PT", "6"]).stdout, "Z + Z/2\n");
}

#[test]
fn invariants_over_q() {
    let out = go(&["invariants", "--field", "q", "--pencil", "wall:2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "I'=7\nJ=-143/216\npoint=(74088:-143)\nstability=stable\n");
}

#[test]
fn other_commands() {
    let out = go(&["stabilizer", "--pencil", "wall:2"]);
    assert!(out.stdout.starts_with("order=4\n"), "{}", out.stdout);
    let out = go(&["stabilizer", "--group", "S4"]);
    assert!(out.stdout.starts_with("order=24\ntype=S4\n"));
    let out = go(&["fiber", "--pencil", "wall:6"]);
    assert!(out.stdout.starts_with("size=24\nparameters=2\n"));
    let out = go(&["fiber", "--field", "q", "--point", "(-216:1)"]);
    assert_eq!(out.stdout, "roots=-3^2 0^2 3^2\nsplit=true\n");
    // p_inf lies over (216 : 1) together with +-1
    let out = go(&["fiber", "--field", "q", "--point", "216:1"]);
    assert_eq!(out.stdout, "roots=-1^2 1^2 inf^2\nsplit=true\n");
    let out = go(&["orbit", "--rho", "2"]);
    assert!(out.stdout.starts_with("orbit={2, 4, 5, 8, 9, 11}\nsize=6\n"));
    let out = go(&["wall-form", "--pencil", "wall:5"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("rho="));
    let out = go(&["chars", "D8"]);
    assert!(out.stdout.contains("V = triv + k_D4\nsl2 = k_C4 + k2\n"), "{}", out.stdout);
    let out = go(&["chow", "member", "D8_COHOM", "beta'", "--quotient", "3beta'"]);
    assert!(out.stdout.starts_with("true\n"));
    assert_eq!(go(&["chow", "map", "res"]).code, 0);
    assert!(go(&["chow", "show", "FINAL"]).stdout.contains("rel 3*zeta"));
}

#[test]
fn exit_codes() {
    assert_eq!(go(&["invariants", "--pencil", "f=[1,0];g=[0,1]"]).code, 2);
    assert_eq!(go(&["invariants", "--field", "fp:12", "--pencil", "wall:2"]).code, 2);
    assert_eq!(go(&["invariants", "--field", "fp:3", "--pencil", "wall:2"]).code, 2);
    assert_eq!(go(&["classify", "--pencil", "plucker=[1,0,0,0,0,1]"]).code, 2);
    assert_eq!(go(&["bogus"]).code, 2);
    assert_eq!(go(&[]).code, 2);
    assert_eq!(go(&["chow", "piece", "NOPE", "1"]).code, 2);
    assert_eq!(go(&["stabilizer", "--field", "q", "--pencil", "wall:2"]).code, 1);
    assert_eq!(go(&["wall-form", "--pencil", "rep:Z1"]).code, 1);
    assert_eq!(go(&["verify-all", "--field", "q"]).code, 2);
    let help = go(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify-all"));
    assert!(!help.stdout.contains("corrupt"));
}

#[test]
fn json_report_shape() {
    let out = go(&["invariants", "--json", "--pencil", "wall:2"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["version"], "pencil-git/1");
    assert_eq!(v["command"], "invariants");
    assert_eq!(v["field"], "fp:13");
    assert_eq!(v["status"], "pass");
    let c = &v["checks"][0];
    for k in ["id", "anchor", "status", "witness"] {
        assert!(c.get(k).is_some(), "{k}");
    }
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let a = go(&["verify-all", "--json", "--seed", "3"]);
    let b = go(&["verify-all", "--json", "--seed", "3"]);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for n in 1..=12 {
        assert!(ids.iter().any(|id| id.starts_with(&format!("{n:02}."))), "criterion {n}");
    }
    assert!(checks.iter().all(|c| !c["anchor"].as_str().unwrap().is_empty()));
    let observed: Vec<&str> =
        checks.iter().filter(|c| c["status"] == "observed").map(|c| c["id"].as_str().unwrap()).collect();
    assert!(observed.iter().all(|id| id.starts_with("08.closure.z2_2")));
    let z32 = checks.iter().find(|c| c["id"] == "08.closure.z2_2.z3_2_representative").unwrap();
    assert_eq!(z32["witness"]["satisfies"], true);
}

#[test]
fn corrupted_builtin_fails_loudly() {
    let out = go(&["verify-all", "--corrupt-builtin", "FINAL", "--json"]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(failing.contains(&"09.pieces.final"), "{failing:?}");
    assert!(failing.contains(&"12.ring_map.i_star"));
}

#[test]
fn out_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("pencil-git-{}.json", std::process::id()));
    let out = go(&["classify", "--json", "--pencil", "rep:Z2_2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, out.stdout);
    assert!(written.contains("\"label\": \"Z2_2\""));
}

#[test]
fn binary_runs() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_pencil-git"))
        .args(["chow", "piece", "FINAL", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Z/3 + Z/4\n");
    let bad = std::process::Command::new(env!("CARGO_BIN_EXE_pencil-git")).args(["classify"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
