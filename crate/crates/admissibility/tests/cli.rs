use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_admissibility"));
    c.current_dir(env!("CARGO_MANIFEST_DIR"));
    c.env_remove("ADMISSIBILITY_SEARCH_BUDGET");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

const PRESETS: [&str; 8] = [
    "sensitive-count",
    "s3-epimorphisms",
    "order-2-10",
    "local-realizability",
    "liedahl-fixtures",
    "metacyclic-identity",
    "brauer-examples",
    "diagram",
];

#[test]
fn presets_match_golden_files() {
    assert_eq!(PRESETS.to_vec(), admissibility::suite::PRESETS.to_vec());
    for preset in PRESETS {
        let out = run(&["paper-suite", preset, "--no-timings"]);
        assert!(out.status.success(), "{preset}: {}", String::from_utf8_lossy(&out.stderr));
        let got = stdout(&out);
        if std::env::var_os("BLESS").is_some() {
            std::fs::write(golden(preset), &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(golden(preset)).unwrap();
        assert_eq!(got, want, "{preset} drifted from its golden file");
    }
}

fn body(text: &str) -> String {
    text.lines().skip(2).collect::<Vec<_>>().join("\n")
}

#[test]
fn worker_count_does_not_change_results() {
    for preset in ["order-2-10", "s3-epimorphisms", "local-realizability"] {
        let one = run(&["paper-suite", preset, "--no-timings", "--workers", "1"]);
        let four = run(&["paper-suite", preset, "--no-timings", "--workers", "4"]);
        assert_eq!(body(&stdout(&one)), body(&stdout(&four)), "{preset}");
    }
}

#[test]
fn spec_examples() {
    let out = stdout(&run(&["paper-suite", "sensitive-count"]));
    assert!(out.contains("29 = 1+1+(1+3+(4+18))+1"));
    let out = stdout(&run(&["epi-count", "--preset", "s3-q3"]));
    assert!(out.contains("epimorphisms               36"));
    assert!(out.contains("normal subgroups           6"));
    let out = run(&["quotient-test", "--preset", "q2i-2to10"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("quotient                   FALSE"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["group", "--spec", "nonsense:3"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    let refused = run(&["quotient-test", "--presentation", "a^2 b^2", "--mode", "pro-2", "--group", "abelian:4,2", "--budget", "1"]);
    assert_eq!(refused.status.code(), Some(3));
    let refused = bin()
        .args(["quotient-test", "--presentation", "a^2 b^2", "--mode", "pro-2", "--group", "abelian:4,2"])
        .env("ADMISSIBILITY_SEARCH_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(refused.status.code(), Some(3));
    let false_verdict = run(&["local", "realizable", "--field", "Q3", "--group", "abelian:3,3,3"]);
    assert_eq!(false_verdict.status.code(), Some(0));
    assert!(stdout(&false_verdict).contains("realizable                 FALSE"));
}

#[test]
fn structured_output_is_versioned_json() {
    let out = stdout(&run(&["--format", "structured", "paper-suite", "diagram", "--no-timings"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "admissibility-run/1");
    assert!(v["inputs_digest"].as_str().unwrap().starts_with("sha256:"));
    assert!(v.get("timings").is_none());
    let passes = v["verdicts"].as_array().unwrap().iter().find(|e| e["name"] == "ledger passes").unwrap();
    assert_eq!(passes["value"], true);
}

#[test]
fn data_file_commands() {
    let cases: [(&[&str], &str); 9] = [
        (&["admissible", "search", "--facts", "data/facts_s3.json"], "preadmissible              TRUE"),
        (&["admissible", "wildness", "--facts", "data/facts_s3.json"], "non-wild-available"),
        (&["admissible", "wildness", "--facts", "data/facts_heisenberg.json"], "wildness                   wild"),
        (&["admissible", "check", "--certificate", "data/certificate_c6.json"], "schacher                   TRUE"),
        (&["admissible", "transfer", "--input", "data/transfer_metacyclic.json"], "admissible (p=5: 2 divisors)"),
        (&["admissible", "transfer", "--input", "data/transfer_heisenberg.json"], "not admissible"),
        (&["brauer", "image", "--ledger", "data/ledger_uniform.json"], "{v1: 1/729, v2: 728/729}"),
        (&["brauer", "image", "--ledger", "data/ledger_same_place.json"], "differ by 2/27"),
        (&["brauer", "restrict", "--ledger", "data/ledger_base_class.json"], "w2: 24/25"),
    ];
    for (args, needle) in cases {
        let out = run(args);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout(&out).contains(needle), "{args:?}:\n{}", stdout(&out));
    }
    let out = run(&["admissible", "diagram", "--ledger", "data/diagram_ledger.json", "--implies", "5=>1"]);
    assert!(stdout(&out).contains("5=>1                       TRUE"));
    assert!(stdout(&out).contains("ledger passes              TRUE"));
}

#[test]
fn input_digest_covers_file_contents() {
    let a = stdout(&run(&["brauer", "index", "--ledger", "data/ledger_uniform.json"]));
    let dir = std::env::temp_dir().join(format!("admissibility-digest-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let copy = dir.join("ledger.json");
    let text = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/ledger_uniform.json")).unwrap();
    std::fs::write(&copy, text.replace("1/27", "2/27").replace("-1/27", "-2/27")).unwrap();
    let b = stdout(&run(&["brauer", "index", "--ledger", copy.to_str().unwrap()]));
    let digest = |s: &str| s.lines().nth(1).unwrap().to_string();
    assert_ne!(digest(&a), digest(&b));
    std::fs::remove_dir_all(dir).unwrap();
}
