//! End-to-end tests of the `injchroma` binary: line formats, exit codes,
//! stream order, and the subcommand plumbing.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_injchroma"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (String, String, Option<i32>) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code(),
    )
}

#[test]
fn chi_i_reports_per_line_records_in_order() {
    let (stdout, _, code) = run_with_stdin(&["chi-i"], "Bw\nA?\n");
    assert_eq!(code, Some(0));
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines, vec!["3 2 3 3", "2 0 inf 1"]);
}

#[test]
fn chi_i_on_the_marked_fixture_line() {
    let g5 = injchroma::families::manifest()
        .iter()
        .find(|f| f.name == "g5_base")
        .unwrap();
    let (stdout, _, code) = run_with_stdin(&["chi-i"], &format!("{}\n", g5.graph6));
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "10 5 3 10");
}

#[test]
fn chi_i_strict_mode_exits_2_on_malformed_line() {
    let (_, stderr, code) = run_with_stdin(&["chi-i", "--strict"], "Bw\n!!nope\nA?\n");
    assert_eq!(code, Some(2));
    assert!(stderr.contains("line 2"), "{stderr}");
}

#[test]
fn chi_i_lenient_mode_skips_and_continues() {
    let (stdout, stderr, code) = run_with_stdin(&["chi-i"], "Bw\n!!nope\nA?\n");
    assert_eq!(code, Some(0));
    assert_eq!(stdout.lines().count(), 2);
    assert!(stderr.contains("line 2"));
}

#[test]
fn gen_emits_the_right_class_count() {
    let out = bin().args(["gen", "-n", "6"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 112);
    for line in text.lines() {
        injchroma::graph6::parse_graph6(line).unwrap();
    }
}

#[test]
fn gen_split_shares_partition_the_run() {
    let full = bin().args(["gen", "-n", "6"]).output().unwrap();
    let mut merged: Vec<String> = Vec::new();
    for i in 0..3 {
        let part = bin()
            .args(["gen", "-n", "6", "--split", &format!("{i}/3")])
            .output()
            .unwrap();
        merged.extend(
            String::from_utf8(part.stdout)
                .unwrap()
                .lines()
                .map(str::to_string),
        );
    }
    let mut want: Vec<String> = String::from_utf8(full.stdout)
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect();
    want.sort();
    merged.sort();
    assert_eq!(merged, want);
}

#[test]
fn family_emits_decodable_graphs() {
    for (args, order) in [
        (vec!["family", "prism", "--k", "6"], 12),
        (vec!["family", "g4", "--steps", "1"], 18),
        (vec!["family", "dodecahedron", "--r", "5"], 20),
        (vec!["family", "shannon", "--delta", "4"], 9),
    ] {
        let out = bin().args(&args).output().unwrap();
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        let g = injchroma::graph6::parse_graph6(text.trim()).unwrap();
        assert_eq!(g.order(), order, "{args:?}");
    }
}

#[test]
fn family_rejects_unknown_names_and_bad_domains() {
    let out = bin().args(["family", "moebius", "--k", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["family", "cubic", "--cycles", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_exit_codes_signal_verdicts() {
    // A prism stream satisfies the girth-4 bound: exit 0.
    let dir = std::env::temp_dir().join(format!("injchroma-cli-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    let prisms: String = (4..=12)
        .map(|k| injchroma::graph6::write_graph6(&injchroma::families::prism(k)) + "\n")
        .collect();
    let input = dir.join("prisms.g6");
    std::fs::write(&input, prisms).unwrap();
    let out = bin()
        .args([
            "check",
            "--input",
            input.to_str().unwrap(),
            "--bound",
            "la-storgel",
            "--girth-min",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    // The order-9 quartic fixture violates the original bound: exit 1 and a
    // standalone-verifiable certificate.
    let d4 = injchroma::families::manifest()
        .iter()
        .find(|f| f.name == "d4_chi9")
        .unwrap();
    let input = dir.join("d4.g6");
    std::fs::write(&input, format!("{}\n", d4.graph6)).unwrap();
    let outdir = dir.join("report");
    let out = bin()
        .args([
            "check",
            "--input",
            input.to_str().unwrap(),
            "--bound",
            "chen",
            "--output",
            outdir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("VIOLATION"), "{stdout}");
    assert!(outdir.join("violations.jsonl").exists());
    assert!(outdir.join("table.csv").exists());

    // Operational error: missing input file gives exit 2.
    let out = bin()
        .args(["check", "--input", "/nonexistent.g6", "--bound", "chen"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn check_family_source_works() {
    let out = bin()
        .args(["check", "--family", "prism", "--k", "6", "--bound", "la-storgel"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("judged=1"), "{stdout}");
}

#[test]
fn fixtures_list_and_verify() {
    let out = bin().args(["fixtures", "list"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("g5_base") && text.contains("52994"));

    let out = bin().args(["fixtures", "verify"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .args(["fixtures", "fetch", "--id", "50484", "--dir", "/tmp"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--enable-network"));
}
