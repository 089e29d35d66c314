//! Drives the command-line interface in-process.

fn main() {
    let runs: &[&[&str]] = &[
        &["equal", "--family", "circular", "--n", "3", "z^-1 s1 z", "s2"],
        &["epsilon", "--family", "necklace", "--n", "3", "t s1 t"],
        &[
            "--plain",
            "normalize",
            "--family",
            "circular",
            "--n",
            "3",
            "s1 z s2",
        ],
        &[
            "member",
            "--check",
            "affine",
            "--from-word",
            "t",
            "--family",
            "necklace",
            "--n",
            "3",
        ],
        &[
            "witness",
            "--target",
            "welded",
            "--from-word",
            "r1 s2 r1",
            "--family",
            "welded",
            "--n",
            "3",
        ],
        &["--plain", "relations", "--family", "necklace", "--n", "4"],
        &["kernel-scan", "--n", "2", "--max-len", "4"],
        &["oracle-equal", "--n", "3", "z^3", "1"],
        &["pure-gen", "--kind", "lambda", "--i", "1", "--j", "3", "--n", "4"],
        &["eval", "--family", "circular", "--n", "3", "s9"],
    ];
    for args in runs {
        let out = necklace::cli::run(std::iter::once("necklace").chain(args.iter().copied()));
        println!(
            "$ necklace {}\n{}[exit {}]\n",
            args.join(" "),
            out.stdout,
            out.code
        );
    }
}
