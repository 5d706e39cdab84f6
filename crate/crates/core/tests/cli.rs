use std::process::Command;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_crystal-charge"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn kostka_adjoint_in_q() {
    let (code, out, _) = bin(&["kostka", "--rank", "2", "--lambda", "2,1", "--mu", "1,1,1", "--variable", "q"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(1,1,1)  q + q^2\n");
}

#[test]
fn kostka_json_schema() {
    let (code, out, _) = bin(&["kostka", "--rank", "1", "--lambda", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["mu"], serde_json::json!([4, 0]));
    assert_eq!(rows[0]["q_poly"], "1");
    assert_eq!(rows[1]["q_poly"], "q");
    assert_eq!(rows[2]["q_poly"], "q^2");
    assert_eq!(rows[2]["v_poly"]["v_coeffs"]["4"], 1);
}

#[test]
fn oracle_sweep_matches() {
    for lam in ["1", "2", "1,1", "3", "2,1", "1,1,1", "4", "3,1", "2,2", "2,1,1", "4,2", "3,2,1", "2,2,2"] {
        for rank in ["1", "2"] {
            let parts = lam.split(',').count();
            if parts > rank.parse::<usize>().unwrap() + 1 {
                continue;
            }
            let (code, out, err) = bin(&["kostka", "--rank", rank, "--lambda", lam, "--oracle", "both"]);
            assert_eq!(code, 0, "{lam} {rank}: {err}");
            assert!(out.ends_with("all match\n"));
        }
    }
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = bin(&["kostka", "--rank", "1", "--lambda", "2,1,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("more than 2 parts"), "{err}");
    let (code, _, _) = bin(&["wallcross", "--rank", "2"]);
    assert_eq!(code, 2);
    let (code, _, err) = bin(&["kostka", "--rank", "2", "--lambda", "2,1", "--mu", "0,1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("not dominant"));
}

#[test]
fn wallcross_trace() {
    let (code, out, _) = bin(&["wallcross", "--rank", "1", "--lambda", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 5);
    let walls: Vec<i64> = steps[2..]
        .iter()
        .map(|s| s["wall"]["level"].as_i64().unwrap())
        .collect();
    assert_eq!(walls, vec![3, 2, 1]);
    assert!(steps[2..].iter().all(|s| s["recurrence_ok"] == true && s["gammam_ok"] == true));

    let (code, out, _) = bin(&["wallcross", "--rank", "2", "--lambda", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("all checks passed"));
}

#[test]
fn graphs() {
    let (_, moment, _) = bin(&["graph", "--rank", "2", "--lambda", "2,1", "--moment"]);
    assert_eq!(moment.matches("[label=").count(), 7 + 15);
    let (_, twisted, _) = bin(&["graph", "--rank", "2", "--lambda", "2,1", "--twisted", "--m", "2"]);
    // two walls, each labelling a single edge of this graph
    assert_eq!(twisted.matches("reversed=true").count(), 2);
    let (code, _, _) = bin(&["graph", "--rank", "2", "--lambda", "2,1", "--twisted", "--m", "3"]);
    assert_eq!(code, 2);
    let (_, atom, _) = bin(&["graph", "--rank", "2", "--lambda", "2,1", "--atom", "1"]);
    assert_eq!(atom.matches(" -> ").count(), 0);
    assert_eq!(atom.matches("[label=").count(), 1);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["atoms", "--rank", "3", "--lambda", "3,2,1", "--format", "json"],
        vec!["wallcross", "--rank", "2", "--lambda", "3,1", "--format", "json"],
        vec!["graph", "--rank", "2", "--lambda", "3,1", "--crystal"],
    ] {
        assert_eq!(bin(&args), bin(&args));
    }
}
