//! The acceptance suite: one line per criterion, non-zero exit on any failure.

mod support;

use std::time::{Duration, Instant};

use necklace::characterize::{
    artin_witness, check_affine, check_braid, check_necklace, check_welded, g_x1_word, g_xk_word,
    necklace_witness, welded_witness,
};
use necklace::families::{epsilon_word, equal_elements, generator_automorphism, normalize_zeta, represent};
use necklace::presentations::{
    builtin_assignment, builtin_presentation, check_assignment, kernel_scan, PresentationKind,
};
use necklace::semidirect::{sd_multiply, ThetaTable};
use necklace::{Automorphism, Endomorphism, Family, FamilyKind, Generator, GroupWord, Syllable, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fam(kind: FamilyKind, n: usize) -> Family {
    Family::new(kind, n).unwrap()
}

fn gen(kind: FamilyKind, n: usize, g: Generator) -> Automorphism {
    generator_automorphism(fam(kind, n), g).unwrap()
}

fn word(text: &str, n: usize) -> Word {
    Word::parse(text, n).unwrap()
}

fn presentations_pass() -> Outcome {
    let start = Instant::now();
    let mut relations = 0;
    for kind in PresentationKind::ALL {
        for n in 2..=8 {
            let p = builtin_presentation(kind, n).map_err(|e| e.to_string())?;
            let report = check_assignment(&p, &builtin_assignment(kind, n).unwrap()).unwrap();
            if !report.all_pass() {
                return Err(format!("{kind} n={n}: {} relations fail", report.failed));
            }
            relations += report.passed;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(5) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "{relations} relations across 7 presentations, n = 2..8, in {elapsed:.2?}"
    ))
}

fn kernel_enumeration() -> Outcome {
    let r = kernel_scan(3, 6).map_err(|e| e.to_string())?;
    let expected: u64 = (0..=6).map(|k| 8u64.pow(k)).sum();
    if r.scanned != expected {
        return Err(format!("scanned {} words, expected {expected}", r.scanned));
    }
    if r.violations != 0 {
        return Err(format!(
            "{} violations, e.g. {:?}",
            r.violations, r.violation_examples
        ));
    }
    Ok(format!(
        "{} words ({} of length 6), {} act trivially, 0 violations",
        r.scanned,
        8u64.pow(6),
        r.kernel_hits
    ))
}

/// Inserts `lhs · rhs⁻¹` of a random relation at a random position.
fn insert_relator(u: &GroupWord, rng: &mut ChaCha8Rng) -> GroupWord {
    let family = u.family();
    let p = builtin_presentation(PresentationKind::Family(FamilyKind::Circular), family.n()).unwrap();
    let r = &p.relations()[rng.gen_range(0..p.relations().len())];
    let lhs = GroupWord::parse(&p.format_word(&r.lhs), family).unwrap();
    let rhs = GroupWord::parse(&p.format_word(&r.rhs), family).unwrap();
    let relator = lhs.concat(&rhs.inverse()).unwrap();
    let cut = rng.gen_range(0..=u.len());
    let (a, b) = u.syllables().split_at(cut);
    let mut s = a.to_vec();
    s.extend_from_slice(relator.syllables());
    s.extend_from_slice(b);
    GroupWord::new(family, s).unwrap()
}

fn theta_oracle_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let tables: Vec<ThetaTable> = (2..=5).map(|n| ThetaTable::new(n).unwrap()).collect();
    let (mut equal_pairs, mut kernel_pairs) = (0, 0);
    for trial in 0..10_000 {
        let n = rng.gen_range(2..=5);
        let table = &tables[n - 2];
        let family = fam(FamilyKind::Circular, n);
        let u = GroupWord::random(family, rng.gen_range(0..=12), &mut rng);
        let v = match trial % 3 {
            0 => GroupWord::random(family, rng.gen_range(0..=12), &mut rng),
            1 => insert_relator(&u, &mut rng),
            _ => {
                kernel_pairs += 1;
                u.concat(&GroupWord::power(family, Generator::Zeta, n as i64).unwrap())
                    .unwrap()
            }
        };
        let (tu, tv) = (table.theta(&u).unwrap(), table.theta(&v).unwrap());
        let tuv = table.theta(&u.concat(&v).unwrap()).unwrap();
        if !table.equal(&tuv, &sd_multiply(&tu, &tv).unwrap()) {
            return Err(format!("theta not multiplicative on {u} / {v}"));
        }
        let oracle = table.equal(&tu, &tv);
        if oracle != equal_elements(&u, &v).unwrap() {
            return Err(format!("deciders disagree on {u} / {v}"));
        }
        equal_pairs += usize::from(oracle);
    }
    Ok(format!(
        "10000 pairs, {equal_pairs} equal, {kernel_pairs} differing by z^n, 0 disagreements"
    ))
}

fn generator_identities() -> Outcome {
    for n in 3..=8 {
        let nk = fam(FamilyKind::Necklace, n);
        let tau = gen(FamilyKind::Necklace, n, Generator::Tau);
        // g_{x_1} = σ_1 ∘ ⋯ ∘ σ_{n-1} ∘ τ̄
        let mut g1 = tau.inverse();
        for i in (1..n).rev() {
            g1 = gen(FamilyKind::Necklace, n, Generator::Sigma(i))
                .compose(&g1)
                .unwrap();
        }
        if represent(&g_x1_word(n).unwrap()) != g1 {
            return Err(format!("g_x1 mismatch at n={n}"));
        }
        let mut shift = Automorphism::identity(n).with_y_fixed(true);
        for k in 1..=n {
            let expected = shift.compose(&g1).unwrap().compose(&shift.inverse()).unwrap();
            if represent(&g_xk_word(k, n).unwrap()) != expected {
                return Err(format!("g_x{k} mismatch at n={n}"));
            }
            if expected.forward().apply(&Word::delta(n)).unwrap()
                != Word::generator(n, k).conjugate(&Word::delta(n))
            {
                return Err(format!("g_x{k}(Δ) is not x{k} Δ x{k}^-1 at n={n}"));
            }
            shift = tau.compose(&shift).unwrap();
        }
        let delta = Word::delta(n);
        let sn = gen(FamilyKind::Necklace, n, Generator::Sigma(n));
        let conj = word(&format!("x{n} x1^-1"), n);
        if sn.apply(&delta).unwrap() != conj.conjugate(&delta) {
            return Err(format!("σ_n(Δ) mismatch at n={n}"));
        }
        let d_conj = sn.apply(&delta).unwrap().delta_conjugator().unwrap();
        if d_conj.algebraic_length() != 0 || sn.forward().delta_conjugator_residue() != Some(0) {
            return Err(format!("σ_n conjugator length nonzero at n={n}"));
        }
        if tau.apply(&delta).unwrap() != word("x1^-1", n).conjugate(&delta) {
            return Err(format!("τ(Δ) mismatch at n={n}"));
        }
        for i in 1..=n {
            let s = GroupWord::power(nk, Generator::Sigma(i), 1).unwrap();
            if epsilon_word(&s).unwrap() != 0 {
                return Err(format!("ε(σ_{i}) ≠ 0"));
            }
        }
        if epsilon_word(&GroupWord::power(nk, Generator::Tau, 1).unwrap()).unwrap() != 1 {
            return Err("ε(τ) ≠ 1".into());
        }
        let zn = GroupWord::power(fam(FamilyKind::Circular, n), Generator::Zeta, n as i64).unwrap();
        if !represent(&zn).forward().is_identity() {
            return Err(format!("ρ(ζ^{n}) is not the identity"));
        }
    }
    Ok("g_x1, g_xk, σ_n(Δ), τ(Δ), ε values and ρ(ζ^n) = 1 hold for n = 3..8".into())
}

fn necklace_quotient() -> Outcome {
    for n in 2..=6 {
        let family = fam(FamilyKind::Necklace, n);
        let one = GroupWord::identity(family);
        let t = |k: usize| GroupWord::power(family, Generator::Tau, k as i64).unwrap();
        if !equal_elements(&t(2 * n), &one).unwrap() {
            return Err(format!("τ^{} ≠ 1 at n={n}", 2 * n));
        }
        if equal_elements(&t(n), &one).unwrap() {
            return Err(format!("τ^{n} = 1 at n={n}"));
        }
    }
    Ok("τ^(2n) = 1 and τ^n ≠ 1 for n = 2..6".into())
}

fn witness_round_trips() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for kind in [FamilyKind::Braid, FamilyKind::Welded, FamilyKind::Necklace] {
        for _ in 0..1000 {
            let family = fam(kind, rng.gen_range(2..=5));
            let w = GroupWord::random(family, rng.gen_range(0..=10), &mut rng);
            let phi = represent(&w).forward().clone();
            let (accepted, witness) = match kind {
                FamilyKind::Braid => (check_braid(&phi).accepted, artin_witness(&phi)),
                FamilyKind::Welded => (check_welded(&phi).accepted, welded_witness(&phi)),
                _ => (check_necklace(&phi).accepted, necklace_witness(&phi)),
            };
            if !accepted {
                return Err(format!("{kind} check rejects {w}"));
            }
            let witness = witness.map_err(|e| format!("{kind} witness for {w}: {e}"))?;
            if represent(&witness).forward() != &phi {
                return Err(format!("{kind} witness {witness} does not match {w}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "3 x 1000 words, all accepted and realized, in {elapsed:.2?}"
    ))
}

fn characterization_separations() -> Outcome {
    let twist = gen(FamilyKind::Rings, 3, Generator::Twist(1));
    let shear = Endomorphism::new(vec![word("x1 x2", 2), word("x2", 2)], false).unwrap();
    let tau = gen(FamilyKind::Necklace, 3, Generator::Tau);
    let aff = gen(FamilyKind::Affine, 3, Generator::Sigma(3));
    let checks = [
        (
            "twist rejected by welded",
            !check_welded(twist.forward()).accepted,
        ),
        (
            "x1 -> x1 x2 rejected by all",
            [check_braid, check_welded, check_necklace, check_affine]
                .iter()
                .all(|c| !c(&shear).accepted),
        ),
        ("τ accepted by necklace", check_necklace(tau.forward()).accepted),
        ("τ rejected by braid", !check_braid(tau.forward()).accepted),
        ("τ rejected by affine", !check_affine(tau.forward()).accepted),
        (
            "affine σ_n accepted by affine",
            check_affine(aff.forward()).accepted,
        ),
    ];
    match checks.iter().find(|c| !c.1) {
        Some((label, _)) => Err(format!("failed: {label}")),
        None => Ok("all 6 separations hold".into()),
    }
}

fn epsilon_residue() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..10_000 {
        let kind = if trial % 2 == 0 {
            FamilyKind::Circular
        } else {
            FamilyKind::Necklace
        };
        let n = rng.gen_range(2..=6);
        let w = GroupWord::random(fam(kind, n), rng.gen_range(0..=12), &mut rng);
        let residue = represent(&w).forward().delta_conjugator_residue();
        let eps = epsilon_word(&w).unwrap().rem_euclid(n as i64) as usize;
        if residue != Some(eps) {
            return Err(format!("{kind} {w}: residue {residue:?}, ε mod n = {eps}"));
        }
    }
    Ok("10000 circular/necklace words, 0 mismatches".into())
}

fn zero_angular_word(family: Family, rng: &mut ChaCha8Rng) -> GroupWord {
    let w = GroupWord::random(family, rng.gen_range(0..=12), rng);
    let eps = epsilon_word(&w).unwrap();
    w.concat(&GroupWord::power(family, Generator::Zeta, -eps).unwrap())
        .unwrap()
}

fn affine_image(w: &GroupWord) -> Automorphism {
    let n = w.family().n();
    let (k, tail) = normalize_zeta(w).unwrap();
    assert_eq!(k, 0);
    represent(&tail.reinterpret(fam(FamilyKind::Affine, n)).unwrap())
}

fn affine_faithfulness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let tables: Vec<ThetaTable> = (2..=5).map(|n| ThetaTable::new(n).unwrap()).collect();
    let (mut distinct, mut skipped) = (0, 0);
    while distinct < 5000 {
        let n = rng.gen_range(2..=5);
        let family = fam(FamilyKind::Circular, n);
        let u = zero_angular_word(family, &mut rng);
        let v = if rng.gen_bool(0.5) {
            zero_angular_word(family, &mut rng)
        } else {
            // a near miss: u with one σ letter flipped
            let mut s = u.syllables().to_vec();
            if let Some(pos) = s.iter().position(|x| !x.generator.is_rotation()) {
                s[pos] = Syllable::inverse(s[pos]);
            }
            GroupWord::new(family, s).unwrap()
        };
        let table = &tables[n - 2];
        if table.equal(&table.theta(&u).unwrap(), &table.theta(&v).unwrap()) {
            skipped += 1;
            continue;
        }
        distinct += 1;
        if affine_image(&u) == affine_image(&v) {
            return Err(format!("collision: {u} / {v}"));
        }
    }
    Ok(format!(
        "5000 Θ-distinct pairs, 0 collisions ({skipped} Θ-equal pairs skipped)"
    ))
}

fn golden_corpus() -> Outcome {
    let names = support::case_names();
    if names.len() < 20 {
        return Err(format!("only {} cases", names.len()));
    }
    let failures = support::check_corpus();
    if failures.is_empty() {
        Ok(format!("{} invocations byte-identical", names.len()))
    } else {
        Err(format!("mismatched: {failures:?}"))
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("presentation suites", presentations_pass),
        ("kernel scan", kernel_enumeration),
        ("theta homomorphism and oracle agreement", theta_oracle_agreement),
        ("generator identities", generator_identities),
        ("necklace quotient structure", necklace_quotient),
        ("witness round-trips", witness_round_trips),
        ("characterization separations", characterization_separations),
        ("epsilon residue cross-check", epsilon_residue),
        ("affine faithfulness spot-check", affine_faithfulness),
        ("cli golden files", golden_corpus),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
