use std::process::Command;

use zasym::cli::run;

fn go(args: &str) -> zasym::cli::Outcome {
    run(std::iter::once("zasym").chain(args.split_whitespace()))
}

#[test]
fn documented_invocations() {
    let out = go("partitions --weight 6 --z-asym 1");
    assert_eq!((out.code, out.stdout.as_str()), (0, "[[3,1,1,1],[2,2,2]]\n"));
    assert_eq!(go("tabloids count --shape 4,2,2,1 --n 4").stdout, "60480\n");
    assert_eq!(go("tabloids count --shape 4,2,2,1 --hook").stdout, "1680\n");
    assert_eq!(go("frobenius --shape 4,2,2,1").stdout, "{\"alpha\":[3,0],\"beta\":[3,1]}\n");
    assert_eq!(go("frobenius --alpha 3,0 --beta 3,1").stdout, "[4,2,2,1]\n");
    assert_eq!(go("dim --shape 2,1 --n 3").stdout, "8\n");
    assert_eq!(go("partitions --weight 6 --z-asym -1").stdout, "[[4,1,1],[3,3]]\n");
}

#[test]
fn bijection_round_trip() {
    let applied = go("bijection apply --rows 2,0,1,3,-3;2,1,1;3 --n 3 --m 1");
    assert_eq!(applied.code, 0, "{}", applied.stderr);
    assert_eq!(
        applied.stdout,
        "{\"shape\":[4,2,2,1],\"kind\":\"content\",\"n\":4,\"rows\":[[1,2,4,-2],[3,2],[3,2],[4]]}\n"
    );
    let inverted = go("bijection invert --rows 1,2,4,-2;3,2;3,2;4 --n 4 --m 1");
    assert!(inverted.stdout.contains("\"rows\":[[2,0,1,3,-3],[2,1,1],[3]]"));
    let bad = go("bijection apply --rows 2,0,1,3,-9;2,1,1;3 --n 3 --m 1");
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.starts_with("error:"));
}

#[test]
fn content_sequences_both_ways() {
    let out = go("content-seq --shape 5,3,1");
    assert_eq!(out.stdout, "{\"counts\":[[-2,1],[-1,1],[0,2],[1,2],[2,1],[3,1],[4,1]],\"peak_at\":0}\n");
    assert_eq!(go("content-seq --values 1,1,2,2,1,1,1 --origin 2").stdout, "[5,3,1]\n");
    assert_eq!(go("content-seq --values 1,3,1 --origin 1").code, 2);
}

#[test]
fn schur_subcommands() {
    assert_eq!(go("schur eval --shape 1,1 --points 2,3,5").stdout, "31\n");
    assert_eq!(go("schur eval --shape 1 --points 4,4").stdout, "8\n");
    assert_eq!(go("schur specialize --shape 2,1 --n 2").stdout, "[[1,\"1\"],[2,\"1\"]]\n");
    assert_eq!(go("schur stepped --shape 1 --start -1 --count 2 --format text").stdout, "q^-1 + q\n");
}

#[test]
fn verify_exit_codes_follow_reports() {
    let out = go("verify thm22 --max-weight 5 --max-m 1");
    assert_eq!(out.code, 0);
    let last = out.stdout.lines().last().unwrap();
    let summary: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(summary["summary"]["failed"], 0);
    // No shape this small has unequal hook products, so the search fails.
    let out = go("verify hook-products --max-weight 2 --max-m 1");
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("\"status\":\"fail\""));
    assert_eq!(go("verify nonsense").code, 2);
}

#[test]
fn output_is_deterministic() {
    let args = "verify oracles --max-weight 4 --seed 3";
    let a = go(args);
    assert_eq!(a, go(args));
    assert_eq!(a.stdout, go(&format!("{args} --jobs 3")).stdout);
    assert_ne!(a.stdout, go("verify oracles --max-weight 4 --seed 4").stdout);
    assert!(!a.stdout.contains("elapsed_ms"));
    assert!(go(&format!("{args} --timings")).stdout.contains("elapsed_ms"));
}

#[test]
fn text_format_renders_grids() {
    let out = go("bijection apply --rows 2,0,1,3,-3;2,1,1;3 --n 3 --m 1 --format text");
    assert_eq!(out.stdout, " 1  2  4 -2\n 3  2\n 3  2\n 4\n");
    let out = go("frobenius --alpha 1 --beta 0 --format text");
    assert_eq!(out.stdout, "(2)\n##\n");
}

#[test]
fn binary_reports_exit_status() {
    let bin = env!("CARGO_BIN_EXE_zasym");
    let ok = Command::new(bin).args(["partitions", "--weight", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "[[3],[2,1],[1,1,1]]\n");
    let usage = Command::new(bin).args(["tabloids"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
