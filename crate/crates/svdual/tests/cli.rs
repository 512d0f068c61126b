use svdual::cli::{run_args, Outcome};

fn run(args: &[&str]) -> Outcome {
    run_args(std::iter::once("svdual").chain(args.iter().copied()))
}

const C5_PSI: &str = "chi(2)xR[2] + chi(-2)xR[2]";

#[test]
fn list_spaces_has_thirteen_rows() {
    let o = run(&["list-spaces"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.out.lines().filter(|l| !l.trim().is_empty()).count(), 13);
}

#[test]
fn packet_case5() {
    let o = run(&["packet", "--space", "case5:p=1,q=1", "--psi", C5_PSI]);
    assert_eq!((o.code, o.out.trim()), (0, "(--)"));
    let all = run(&["packet", "--space", "case5:p=1,q=1", "--psi", C5_PSI, "--all"]);
    assert_eq!(all.out.lines().filter(|l| l.ends_with("accept")).count(), 1);
    assert_eq!(all.out.lines().count(), 4);
}

#[test]
fn non_principal_exits_2() {
    let psi = "chi(3)xR[1]+chi(1)xR[1]+chi(-1)xR[1]+chi(-3)xR[1]";
    let o = run(&["factorize", "--space", "case5:p=1,q=1", "--psi", psi]);
    assert_eq!(o.code, 2);
    assert!(o.out.contains("principal"));
}

#[test]
fn validation_errors_exit_2() {
    assert_eq!(run(&["validate-space", "--space", "case3:r=2,s=0,rp=1,sp=0"]).code, 2);
    assert_eq!(run(&["bogus"]).code, 2);
    assert_eq!(run(&["packet", "--space", "case5:p=1,q=1", "--psi", "chi(1)xR[2"]).code, 2);
}

#[test]
fn json_output_parses() {
    let o = run(&["--format", "json", "gen-params", "--space", "case5:p=1,q=0", "--height", "3"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["parameters"].as_array().unwrap().len(), 3);
    assert_eq!(v["space"], "case5:p=1,q=0");
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "gen-params", "--space", "case3:r=1,s=1,rp=1,sp=1", "--height", "5"];
    assert_eq!(run(&args).out, run(&args).out);
    let p = ["packet", "--space", "case5:p=1,q=1", "--psi", C5_PSI, "--all"];
    assert_eq!(run(&p).out, run(&p).out);
}

// the only failures are ξ_SO(j)² for n even with 2p < n
#[test]
fn check_matrices_reports_known_failures() {
    let o = run(&["check-matrices", "--max-size", "8"]);
    assert_eq!(o.code, 1);
    let fails: Vec<&str> = o.out.lines().filter(|l| l.contains(" FAIL ")).collect();
    assert!(!fails.is_empty());
    assert!(fails.iter().all(|l| l.starts_with("xi_so.j_square")), "{fails:?}");
}
