use std::path::PathBuf;

use thom_cli::{ingest_custom_table, ingest_str, run, ResultDocument};

fn thom(args: &[&str]) -> thom_cli::Outcome {
    run(std::iter::once("thom").chain(args.iter().copied()))
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("thom-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const SHIPPED: &str = include_str!("../../euler/data/euler_classes.tbl");

fn mu3_rows() -> String {
    let mut keep = false;
    let mut out = String::new();
    for line in SHIPPED.lines() {
        if line.starts_with("# mu = ") {
            keep = line == "# mu = 3";
            continue;
        }
        if keep && !line.trim().is_empty() && !line.starts_with('#') {
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}

#[test]
fn printed_examples() {
    let o = thom(&["tp", "--algebra", "A2", "--l", "0", "--basis", "schur"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "Δ_{1,1} + 2Δ_{2}\n"));
    let o = thom(&["tp", "--algebra", "A3", "--l", "0", "--basis", "chern"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "c1^3 + 3*c1*c2 + 2*c3\n"));
    let o = thom(&["tp", "--algebra", "A_2", "--n", "1", "--p", "1", "--basis", "roots"]);
    // c1² + c2 with c1 = b1 − a1, c2 = a1² − a1 b1
    assert_eq!(o.stdout, "2*a1^2 - 3*a1*b1 + b1^2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(thom(&["tp", "--algebra", "B_2", "--l", "0"]).code, 2);
    assert_eq!(thom(&["tp", "--algebra", "A2"]).code, 2);
    assert_eq!(thom(&["tp", "--algebra", "A2", "--n", "3", "--p", "2"]).code, 2);
    assert_eq!(thom(&["tp", "--algebra", "A2", "--l", "1", "--basis", "roots"]).code, 2);
    assert_eq!(thom(&["frobnicate"]).code, 2);
    assert_eq!(thom(&["residue", "--algebra", "A_4", "--l", "0"]).code, 2);
    assert_eq!(thom(&["--help"]).code, 0);
    let bad = scratch("bad_degree.tbl", "A_2 | (x^3) | 1\nA_2 | (x^2,xy,y^2) | a1\n");
    let o = thom(&["tp", "--algebra", "A2", "--l", "0", "--table", bad.to_str().unwrap()]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
}

#[test]
fn json_round_trip() {
    for args in [
        &["tp", "--algebra", "I_{2,2}", "--l", "1", "--format", "json"][..],
        &["series", "--algebra", "A2", "--index-bound", "2", "--format", "json"],
        &["euler", "--algebra", "A3", "--format", "json"],
        &["residue", "--algebra", "Sigma^{2,1}", "--l", "0", "--format", "json"],
        &["verify", "--suite", "fast", "--format", "json"],
    ] {
        let o = thom(args);
        assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
        let doc = ResultDocument::from_json(&o.stdout).unwrap();
        assert_eq!(doc.to_json() + "\n", o.stdout);
        assert_eq!(ResultDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
    let doc = ResultDocument::from_json(&thom(&["tp", "--algebra", "I22", "--l", "1", "--format", "json"]).stdout).unwrap();
    assert_eq!(doc.codim, Some(7));
    let terms: Vec<(&str, &str)> = doc.terms.iter().map(|t| (t.partition.as_str(), t.coeff.as_str())).collect();
    assert_eq!(terms, [("3,3,1", "1"), ("4,3", "3")]);
}

#[test]
fn identical_jobs_identical_bytes() {
    let args = ["tp", "--algebra", "Phi_{3,2}", "--l", "0", "--format", "json"];
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| thom(&args));
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(|| thom(&args));
    assert_eq!(one, four);
    assert_eq!(one, thom(&args));
}

#[test]
fn series_and_residue_commands() {
    let o = thom(&["series", "--algebra", "A2", "--index-bound", "3"]);
    assert_eq!(o.stdout, "d_0^2 + d_{-1}d_1 + 2d_{-2}d_2 + 4d_{-3}d_3 + …\n");
    let o = thom(&["residue", "--algebra", "III23", "--l", "0"]);
    assert_eq!(o.stdout, "2Δ_{2,2,1} + 4Δ_{3,2}\n");
    let o = thom(&["residue", "--algebra", "A2", "--l", "1", "--basis", "chern"]);
    assert_eq!(o.stdout, "c1*c3 + c2^2 + 2*c4\n");
}

#[test]
fn reingest_is_byte_identical() {
    let rows = mu3_rows();
    let path = scratch("mu3.tbl", &rows);
    let first = ingest_custom_table(&path).unwrap();
    let text = first.table.to_text();
    let again = ingest_str(&text).unwrap();
    assert_eq!(again.table, first.table);
    assert_eq!(again.table.to_text(), text);
    // rows are normalized but equal to the input, line for line
    assert_eq!(text.lines().count(), rows.lines().count());
}

#[test]
fn wrong_degree_names_the_row() {
    let mut rows = mu3_rows();
    rows = rows.replace("III_{2,3} | (x^2,xy,y^3) | a1-a2", "III_{2,3} | (x^2,xy,y^3) | (a1-a2)^2");
    let e = ingest_str(&rows).unwrap_err().to_string();
    assert!(e.contains("line 9") && e.contains("III_{2,3}") && e.contains("(x^2,xy,y^3)"), "{e}");
}

#[test]
fn missing_max_square_is_completed() {
    let rows = "A_2 | (x^3) | 1\n";
    let ing = ingest_str(rows).unwrap();
    assert!(ing.notes.iter().any(|n| n.contains("A_2") && n.contains("completed")), "{:?}", ing.notes);
    let path = scratch("a2.tbl", rows);
    let o = thom(&["euler", "--algebra", "A2", "--table", path.to_str().unwrap()]);
    assert_eq!(o.stdout, "(x^3) | 1 | given\n(x^2,xy,y^2) | -(1/3)*(a1 - 2*a2)*(2*a1 - a2) | reciprocity\n");
    let o = thom(&["tp", "--algebra", "A2", "--l", "2", "--table", path.to_str().unwrap(), "--format", "json"]);
    let doc = ResultDocument::from_json(&o.stdout).unwrap();
    assert!(doc.provenance.iter().any(|n| n.contains("completed")));
    assert_eq!(doc.display.as_deref(), Some("Δ_{3,3} + 2Δ_{4,2} + 4Δ_{5,1} + 8Δ_{6}"));
}

#[test]
fn verify_fast_passes() {
    let o = thom(&["verify", "--suite", "fast"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert_eq!(o.stdout.lines().count(), 7);
}
