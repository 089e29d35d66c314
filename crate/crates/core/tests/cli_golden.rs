mod support;

#[test]
fn corpus_has_every_subcommand() {
    let names = support::case_names();
    assert!(names.len() >= 20);
    let mut seen = std::collections::BTreeSet::new();
    for name in &names {
        let args = std::fs::read_to_string(support::golden_dir().join(format!("{name}.args"))).unwrap();
        if let Some(cmd) = args.lines().find(|l| !l.starts_with("--")) {
            seen.insert(cmd.to_string());
        }
    }
    for cmd in [
        "eval",
        "equal",
        "epsilon",
        "normalize",
        "member",
        "witness",
        "relations",
        "kernel-scan",
        "oracle-equal",
        "pure-gen",
    ] {
        assert!(seen.contains(cmd), "no golden case for {cmd}");
    }
}

#[test]
fn corpus_matches() {
    let failures = support::check_corpus();
    for name in &failures {
        eprintln!("--- {name}\n{}", support::render(name));
    }
    assert!(failures.is_empty(), "golden mismatches: {failures:?}");
}

#[test]
fn output_is_deterministic() {
    for name in support::case_names() {
        assert_eq!(support::render(&name), support::render(&name), "{name}");
    }
}
