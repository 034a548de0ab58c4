use std::time::{Duration, Instant};

use toric_betti_cli::{run, verify_grd};

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["toric-betti".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn oracle_betti_json() {
    let (code, out, _) = cli(&["betti", "--grd", "3", "2", "--method", "oracle", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"[{"i":0,"j":2,"beta":1},{"i":0,"j":3,"beta":2},{"i":1,"j":4,"beta":2}]"#);
}

#[test]
fn betti_methods_print_the_same_grid() {
    let grids: Vec<String> =
        ["formula", "quotients", "oracle"].iter().map(|m| cli(&["betti", "--grd", "4", "3", "--method", m]).1).collect();
    assert_eq!(grids[0], grids[1]);
    assert_eq!(grids[0], grids[2]);
    assert!(grids[0].contains("total:"));
}

#[test]
fn out_of_range_family_is_an_input_error() {
    let (code, _, err) = cli(&["gen", "--grd", "2", "4"]);
    assert_eq!(code, 1);
    assert!(err.contains("r >= 3"), "{err}");
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(cli(&["frobnicate"]).0, 1);
    assert_eq!(cli(&["gen"]).0, 1);
    assert_eq!(cli(&["gen", "--grd", "3", "3", "--k2d", "3"]).0, 1);
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["gen", "walks", "gb", "initial", "betti", "hilbert", "bounds", "verify"] {
        assert!(out.contains(sub), "{sub} missing from help");
    }
    let (code, out, _) = cli(&["betti", "--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("--method") && out.contains("--order"));
}

#[test]
fn budget_exhaustion_exit_code() {
    assert_eq!(cli(&["walks", "--grd", "3", "4", "--budget", "5"]).0, 3);
    assert_eq!(cli(&["hilbert", "--grd", "3", "4", "--method", "enumerate", "--budget", "10"]).0, 3);
    assert_eq!(cli(&["betti", "--grd", "3", "4", "--method", "oracle", "--budget", "4"]).0, 3);
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["verify", "--grd", "3", "4", "--json"][..],
        &["walks", "--grd", "4", "3", "--json"],
        &["gb", "--k2d", "4", "--json"],
        &["hilbert", "--grd", "3", "3", "--method", "betti", "--json"],
    ] {
        let first = cli(args);
        let second = cli(args);
        assert_eq!(first.0, 0);
        assert_eq!(first.1, second.1, "{args:?}");
    }
}

#[test]
fn verify_passes_and_is_fast() {
    for r in 3..=5 {
        for d in 2..=5 {
            let start = Instant::now();
            let report = verify_grd(r, d).unwrap();
            assert!(report.passed(), "{}", report.to_text());
            assert!(start.elapsed() < Duration::from_secs(60));
        }
    }
    let (code, out, _) = cli(&["verify", "--grd", "3", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("overall: PASS"));
    assert!(out.contains("reg 3, pdim 4, dim 9"));
}

#[test]
fn verify_skips_oracle_beyond_cap() {
    let report = verify_grd(3, 6).unwrap();
    assert!(report.passed());
    let json = report.to_json(false);
    assert!(json.contains("\"status\": \"skip\""));
}

#[test]
fn hilbert_methods_agree() {
    let formula = cli(&["hilbert", "--grd", "4", "3", "--json"]).1;
    let betti = cli(&["hilbert", "--grd", "4", "3", "--method", "betti", "--json"]).1;
    assert_eq!(formula, betti);
    let v: serde_json::Value = serde_json::from_str(&formula).unwrap();
    let dims: Vec<u64> = v["dims"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    let enumerated = cli(&["hilbert", "--grd", "4", "3", "--method", "enumerate", "--json"]).1;
    let e: serde_json::Value = serde_json::from_str(&enumerated).unwrap();
    let e: Vec<u64> = e["dims"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(dims, e);
    assert_eq!(cli(&["hilbert", "--grd", "3", "2"]).1.lines().next().unwrap(), "HS(t) = (1 + 2t + 2t^2) / (1 - t)^6");
}

#[test]
fn bounds_command() {
    let (code, out, _) = cli(&["bounds", "--components", "(3,2),(4,3)", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"pdim_lower_bound":4,"reg_lower_bound":6}"#);
    assert_eq!(cli(&["bounds", "--components", ""]).0, 1);
    assert_eq!(cli(&["bounds", "--components", "(2,2)"]).0, 1);
}

#[test]
fn graph_file_input_and_custom_order() {
    let dir = std::env::temp_dir().join(format!("toric-betti-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.json");
    std::fs::write(
        &path,
        r#"{"vertices":["p","q","s","t"],"edges":[
            {"name":"w","ends":["p","q"]},{"name":"x","ends":["q","s"]},
            {"name":"y","ends":["s","t"]},{"name":"z","ends":["t","p"]}]}"#,
    )
    .unwrap();
    let file = path.to_str().unwrap();
    let (code, out, err) = cli(&["gb", "--graph", file]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.trim(), "w*y - x*z");
    let (_, out, _) = cli(&["gb", "--graph", file, "--order", "z,y,x,w"]);
    assert_eq!(out.trim(), "x*z - w*y");
    assert_eq!(cli(&["gb", "--graph", file, "--order", "w,x"]).0, 1);
    assert_eq!(cli(&["betti", "--graph", file, "--method", "formula"]).0, 1);
    let (code, out, _) = cli(&["betti", "--graph", file, "--method", "oracle", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"[{"i":0,"j":2,"beta":1}]"#);
    assert_eq!(cli(&["gen", "--graph", dir.join("missing.json").to_str().unwrap()]).0, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn capped_walk_search_warns() {
    let (code, _, err) = cli(&["walks", "--grd", "4", "2", "--max-len", "6"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"));
}
