use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], env: &[(&str, &str)], dir: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_minuscule"));
    cmd.args(args);
    for var in ["MINUSCULE_OUTPUT", "MINUSCULE_CACHE_DIR", "MINUSCULE_CONFIG", "MINUSCULE_MAX_DEGREE"] {
        cmd.env_remove(var);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    if let Some(d) = dir {
        cmd.current_dir(d);
    }
    cmd.output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("{e}: {l}")))
        .collect()
}

#[test]
fn rootsys_info_a3() {
    let out = run(&["rootsys", "info", "--family", "A", "--rank", "3"], &[], None);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["root_count"], 12);
    assert_eq!(v["minuscule_coweights"].as_array().unwrap().len(), 3);
}

#[test]
fn rootsys_info_e7() {
    let out = run(&["rootsys", "info", "--family", "E7"], &[], None);
    let v = &json_lines(&out)[0];
    assert_eq!(v["root_count"], 126);
    assert_eq!(v["weyl_order"], "2903040");
    assert_eq!(v["highest_root_multiplicities"], serde_json::json!([1, 2, 3, 4, 3, 2, 2]));
    assert_eq!(v["simple_roots"].as_array().unwrap().len(), 7);
    assert_eq!(v["minuscule_coweights"][0]["q"], "3/4");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["rootsys", "info", "--family", "A", "--bogus"], &[], None).status.code(), Some(2));
    assert_eq!(run(&["rootsys", "info", "--family", "A"], &[], None).status.code(), Some(2));
    assert_eq!(run(&["orbit", "--family", "E7", "--vector", "nope"], &[], None).status.code(), Some(2));
}

#[test]
fn random_triangle_witness_in_d4() {
    for seed in ["1", "2", "3"] {
        let out = run(&["triangle", "witness", "--family", "D", "--rank", "4", "--random", "--seed", seed], &[], None);
        assert!(out.status.success());
        let v = &json_lines(&out)[0];
        assert!(v["word"].is_array());
        assert_eq!(v["verified"], true);
    }
}

#[test]
fn explicit_triangles() {
    let ok = run(
        &["triangle", "witness", "--family", "A", "--rank", "2", "--a", "a1", "--b", "0,0,0", "--a2", "-1/3,2/3,-1/3", "--b2", "0,0,0"],
        &[],
        None,
    );
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stderr));
    let bad = run(
        &["triangle", "witness", "--family", "A", "--rank", "2", "--a", "a1", "--b", "1,-1,0", "--a2", "a1", "--b2", "2,-2,0"],
        &[],
        None,
    );
    assert_eq!(bad.status.code(), Some(1));
    assert!(json_lines(&bad)[0]["error"].as_str().unwrap().contains("no witness"));
}

#[test]
fn e7_orbit_blocks() {
    let out = run(&["orbit", "--family", "E7", "--vector", "a"], &[], None);
    let v = &json_lines(&out)[0];
    assert_eq!(v["size"], 56);
    assert_eq!(v["block_sizes"], serde_json::json!([1, 1, 27, 27]));
    assert_eq!(v["stabilizer_order"], 51840);
}

#[test]
fn reports_have_the_documented_fields() {
    let out = run(&["verify", "orbits", "--family", "D", "--rank", "4"], &[], None);
    assert!(out.status.success());
    for r in json_lines(&out) {
        for k in ["check_id", "paper_anchor", "status", "details", "runtime_ms"] {
            assert!(r.get(k).is_some(), "{k} missing in {r}");
        }
        assert_eq!(r["status"], "pass");
    }
}

#[test]
fn identical_invocations_are_byte_identical_without_timings() {
    let args = ["verify", "prop1", "--family", "B", "--rank", "3", "--no-timings"];
    let a = run(&args, &[], None);
    let b = run(&args, &[], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(json_lines(&a).iter().all(|r| r.get("runtime_ms").is_none()));
}

#[test]
fn e7_identities_report_the_printed_coefficient_failure() {
    let out = run(&["verify", "identities", "--family", "E7"], &[], None);
    assert_eq!(out.status.code(), Some(1));
    let lines = json_lines(&out);
    let printed = lines.iter().find(|r| r["check_id"] == "E7.identity.translated_root_sum").unwrap();
    assert_eq!(printed["status"], "fail");
    assert_eq!(printed["details"]["computed_linear_coefficient"], "72");
    let affine = lines.iter().find(|r| r["check_id"] == "E7.identity.translated_root_sum_affine").unwrap();
    assert_eq!(affine["status"], "pass");
}

#[test]
fn prop2_full_group_in_d4() {
    let out = run(&["verify", "prop2", "--family", "D", "--rank", "4", "--full-group", "--strategy", "c"], &[], None);
    assert!(out.status.success());
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|r| r["check_id"].as_str().unwrap().contains(".W.prop2.C")));
}

#[test]
fn config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("minuscule.toml"), "output = \"text\"\n").unwrap();
    let args = ["rootsys", "info", "--family", "A", "--rank", "2"];
    let is_text = |o: &Output| String::from_utf8_lossy(&o.stdout).lines().count() > 1;
    // File alone.
    assert!(is_text(&run(&args, &[], Some(dir.path()))));
    // Environment beats the file.
    assert!(!is_text(&run(&args, &[("MINUSCULE_OUTPUT", "json")], Some(dir.path()))));
    // Flag beats the environment.
    let mut with_flag = args.to_vec();
    with_flag.extend(["--output", "text"]);
    assert!(is_text(&run(&with_flag, &[("MINUSCULE_OUTPUT", "json")], Some(dir.path()))));

    std::fs::write(dir.path().join("bad.toml"), "orbit_cap = 0\n").unwrap();
    let out = run(&["--config", "bad.toml", "rootsys", "info", "--family", "E6"], &[], Some(dir.path()));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_hit_and_miss_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["orbit", "--family", "E6", "--vector", "b+", "--cache-dir", cache];
    let mut first = json_lines(&run(&args, &[], None)).remove(0);
    let mut second = json_lines(&run(&args, &[], None)).remove(0);
    assert_eq!(first["cache_hit"], false);
    assert_eq!(second["cache_hit"], true);
    first.as_object_mut().unwrap().remove("cache_hit");
    second.as_object_mut().unwrap().remove("cache_hit");
    assert_eq!(first, second);
    assert_eq!(first["block_sizes"], serde_json::json!([1, 10, 16]));
}

#[test]
fn text_output_summarizes_sections() {
    let out = run(&["verify", "identities", "--family", "B", "--rank", "2", "--output", "text"], &[], None);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("identity: "));
    assert!(text.lines().any(|l| l.starts_with("PASS")));
}
