use std::io::Write;
use std::process::{Command, Output, Stdio};

fn twofactor(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_twofactor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generate(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend(args);
    let o = twofactor(&full, "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn flower_pipeline() {
    let g6 = generate(&["flower", "5"]);
    let o = twofactor(&["classify", "-"], &g6);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"odd_two_factored\":true"));
    assert!(out.contains("\"types\":[[5,15],[7,13],[9,11]]"));
    assert!(out.contains("\"spu\":true"));
    assert!(out.contains("\"u\":false"));
}

#[test]
fn petersen_report_is_exact() {
    let g6 = generate(&["named", "petersen"]);
    let out = stdout(&twofactor(&["classify"], &g6));
    assert_eq!(
        out,
        "{\"graph\":{\"n\":10,\"m\":15,\"graph6\":\"IheA@GUAo\"},\"has_two_factor\":true,\"two_factor_count\":6,\
         \"types\":[[5,5]],\"flags\":{\"hu\":false,\"u\":true,\"spu\":true,\"pu\":true,\"odd_two_factored\":true},\
         \"profile\":{\"parity\":0,\"t0\":0,\"t1\":0},\"inconclusive\":false}\n"
    );
}

#[test]
fn one_report_per_line() {
    let mut input = generate(&["named", "cube"]);
    input.push('\n');
    input.push_str(&generate(&["named", "k4"]));
    let out = stdout(&twofactor(&["classify"], &input));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("\"pu\":false") && lines[0].contains("\"profile\":null"));
    assert!(lines[1].contains("\"hu\":true"));
}

#[test]
fn cap_gives_inconclusive_exit_code() {
    let g6 = generate(&["named", "k5"]);
    let o = twofactor(&["classify", "--max-factors", "3"], &g6);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("\"inconclusive\":true"));
    let o = twofactor(&["classify", "--max-factors", "12"], &g6);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn errors_exit_with_one() {
    let o = twofactor(&["generate", "named", "nope"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nope"));
    let o = twofactor(&["classify"], "not graph6 !!\n");
    assert_eq!(o.status.code(), Some(1));
    let o = twofactor(&["generate", "flower", "4"], "");
    assert_eq!(o.status.code(), Some(1));
    let o = twofactor(&["classify", "/nonexistent/file.g6"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(twofactor(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(
        twofactor(&["tables", "section9"], "").status.code(),
        Some(2)
    );
}

#[test]
fn hierarchy_table_matches() {
    let o = twofactor(&["tables", "section5"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("all 11 rows match"));
    assert!(out.contains("Dodecahedron"));
}

#[test]
fn snark_table_reports_only_the_missing_row() {
    let o = twofactor(&["tables", "section4"], "");
    let out = stdout(&o);
    let failing: Vec<&str> = out.lines().filter(|l| l.contains("FAIL")).collect();
    assert_eq!(failing.len(), 1, "{out}");
    assert!(failing[0].starts_with("Celmins-Swart"));
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn output_is_deterministic() {
    let input = generate(&["hn", "16"]);
    let a = twofactor(&["classify"], &input);
    let b = twofactor(&["classify"], &input);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(generate(&["hstar", "1"]), generate(&["hstar", "1"]));
}

#[test]
fn constructions_through_the_cli() {
    let prism = generate(&["starprod", "k4", "0", "k4", "0"]);
    assert!(stdout(&twofactor(&["classify"], &prism)).contains("\"hu\":false"));

    let joined = generate(&[
        "threejoin",
        "flower:5",
        "1",
        "18",
        "flower:5",
        "1",
        "18",
        "flower:5",
        "1",
        "18",
    ]);
    let out = stdout(&twofactor(&["classify"], &joined));
    assert!(out.contains("[5,5,5,15,32]") && out.contains("[5,5,11,15,26]"));
    assert!(out.contains("\"spu\":false"));

    let graft = generate(&["graft", "k5", "0", "1"]);
    assert!(stdout(&twofactor(&["classify"], &graft)).contains("\"spu\":true"));

    let inflated = generate(&["inflate", "k33", "0"]);
    assert!(stdout(&twofactor(&["classify"], &inflated)).contains("\"pu\":true"));

    let arranged = generate(&["hn", "16", "--k33-positions", "0,2"]);
    assert!(stdout(&twofactor(&["classify"], &arranged)).contains("\"spu\":true"));

    let keys = generate(&["named", "list"]);
    assert!(keys.lines().any(|k| k == "szekeres"));
}

#[test]
fn snark_check_and_scan() {
    let mut input = generate(&["named", "petersen"]);
    input.push_str(&generate(&["named", "k33"]));
    let out = stdout(&twofactor(&["snark-check"], &input));
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].ends_with("\"snark\":true}"));
    assert!(lines[1].ends_with("\"snark\":false}"));

    let out = stdout(&twofactor(&["scan"], &input));
    assert!(out.contains("\"family\":\"petersen\""));
    assert!(out.lines().last().unwrap().contains("\"candidates\":[]"));
    assert_eq!(stdout(&twofactor(&["scan"], "")).lines().count(), 1);
}

#[test]
fn digraph_classification() {
    let out = stdout(&twofactor(&["classify-digraph"], "3 3\n0 1\n1 2\n2 0\n"));
    assert!(out.contains("\"directed\":true"));
    assert!(out.contains("\"types\":[[3]]"));
    assert!(out.contains("\"pu\":true"));
    let o = twofactor(&["classify-digraph"], "3 2\n0 1\n");
    assert_eq!(o.status.code(), Some(1));
}
