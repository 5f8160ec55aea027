use std::path::PathBuf;

use quantlang::{fixtures, rat, ValueFunction, WeightedAutomaton};
use quantlang_cli::AutomatonDocument;

fn library_fixtures() -> Vec<(&'static str, WeightedAutomaton)> {
    vec![
        ("motor_a", fixtures::motor_a()),
        ("motor_b", fixtures::motor_b()),
        ("bank_a1", fixtures::bank_a1(rat(1, 2))),
        ("bank_a2", fixtures::bank_a2(rat(1, 2))),
        ("freq_a_limavg", fixtures::freq_a_limavg()),
        ("two_scc_limavg", fixtures::two_scc_limavg()),
        ("disc_quarter", fixtures::single_state(ValueFunction::Disc(rat(1, 4)), rat(1, 1), rat(0, 1))),
        ("limavg_a", fixtures::single_state(ValueFunction::LimAvg, rat(1, 1), rat(0, 1))),
        ("limavg_b", fixtures::single_state(ValueFunction::LimAvg, rat(0, 1), rat(1, 1))),
        ("count_a", fixtures::sum_counter("a")),
        ("count_b", fixtures::sum_counter("b")),
    ]
}

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

#[test]
fn fixture_files_describe_the_library_fixtures() {
    for (name, a) in library_fixtures() {
        let expected = AutomatonDocument::from_weighted(name, &a);
        if std::env::var_os("QUANTLANG_WRITE_FIXTURES").is_some() {
            let text = serde_json::to_string_pretty(&expected).unwrap();
            std::fs::write(path(name), text + "\n").unwrap();
        }
        let text = std::fs::read_to_string(path(name)).unwrap();
        let doc: AutomatonDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc, expected, "{name}");
        let back = doc.to_weighted().unwrap();
        assert_eq!(back.transitions(), a.transitions(), "{name}");
    }
}
