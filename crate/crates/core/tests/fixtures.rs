use std::path::PathBuf;

use wbound_core::code::{
    parse_generator, spectrum, CodeParams, LinearCode, RankPolicy, DEFAULT_ENUMERATION_LIMIT,
};
use wbound_core::corpus::{named_code, published_enumerator};

fn fixture(name: &str) -> LinearCode {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_generator(&text, RankPolicy::Reject).unwrap()
}

#[test]
fn fixture_files_match_constructors() {
    for (file, name) in [
        ("example_11_3_6.gen", "example_11_3_6"),
        ("rm_1_4.gen", "rm_1_4"),
        ("hamming_13_10_3_ternary.gen", "hamming_13_10_3_ternary"),
        ("ratio_code_4.gen", "ratio_code(4)"),
    ] {
        assert_eq!(fixture(file), named_code(name).unwrap(), "{file}");
    }
}

#[test]
fn cyclic_fixture_matches_published_enumerator() {
    let code = fixture("cyclic_15_10_4.gen");
    let spec = spectrum(&code, DEFAULT_ENUMERATION_LIMIT).unwrap();
    assert_eq!(spec, published_enumerator("cyclic_15_10_4").unwrap());
    assert_eq!(code.params_from(&spec), CodeParams::new(15, 10, 4, 2));
}

#[test]
fn fixture_parameters() {
    let cases = [
        ("example_11_3_6.gen", CodeParams::new(11, 3, 6, 2)),
        ("rm_1_4.gen", CodeParams::new(16, 5, 8, 2)),
        ("hamming_13_10_3_ternary.gen", CodeParams::new(13, 10, 3, 3)),
        ("ratio_code_4.gen", CodeParams::new(5, 2, 4, 4)),
    ];
    for (file, want) in cases {
        assert_eq!(
            fixture(file).params(DEFAULT_ENUMERATION_LIMIT).unwrap(),
            want,
            "{file}"
        );
    }
}
