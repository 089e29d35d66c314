//! Group presentations, verification of generator assignments against them,
//! and the exhaustive scan of the kernel of the circular representation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::autos::{Automorphism, Endomorphism};
use crate::error::{Error, Result};
use crate::families::{
    generator_automorphism, Family, FamilyKind, Generator, GroupWord, RepresentationTable, Syllable,
};
use crate::semidirect::{sd_power, ThetaTable};
use crate::words::{split_exponent, Word};

/// A word in the generators of a presentation: `(generator index, exponent)`.
pub type RelatorWord = Vec<(usize, i64)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: RelatorWord,
    pub rhs: RelatorWord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        for r in &relations {
            for &(g, e) in r.lhs.iter().chain(&r.rhs) {
                if g >= generators.len() || e == 0 {
                    return Err(Error::input(format!("relation uses undeclared generator {g}")));
                }
            }
        }
        Ok(Presentation {
            generators,
            relations,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Parses a relator word such as `s1 s2^-1 z` against the generator names.
    pub fn parse_word(&self, text: &str) -> Result<RelatorWord> {
        parse_relator(&self.generators, text)
    }

    pub fn format_word(&self, w: &RelatorWord) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter()
            .map(|&(g, e)| match e {
                1 => self.generators[g].clone(),
                _ => format!("{}^{e}", self.generators[g]),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn parse_relator(generators: &[String], text: &str) -> Result<RelatorWord> {
    let mut out = Vec::new();
    for (pos, token) in text.split_whitespace().enumerate() {
        if token == "1" {
            continue;
        }
        let (base, e) = split_exponent(token, pos + 1)?;
        let g = generators
            .iter()
            .position(|name| name == base)
            .ok_or_else(|| Error::parse(pos + 1, format!("undeclared generator `{base}`")))?;
        out.push((g, e));
    }
    Ok(out)
}

/// The presentations built in: the six families plus `B_n ⋉ F_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresentationKind {
    Family(FamilyKind),
    Semidirect,
}

impl PresentationKind {
    pub const ALL: [PresentationKind; 7] = [
        PresentationKind::Family(FamilyKind::Braid),
        PresentationKind::Family(FamilyKind::Welded),
        PresentationKind::Family(FamilyKind::Rings),
        PresentationKind::Family(FamilyKind::Circular),
        PresentationKind::Family(FamilyKind::Necklace),
        PresentationKind::Family(FamilyKind::Affine),
        PresentationKind::Semidirect,
    ];
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationKind::Family(k) => f.pad(k.name()),
            PresentationKind::Semidirect => f.pad("semidirect"),
        }
    }
}

impl FromStr for PresentationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "semidirect" {
            Ok(PresentationKind::Semidirect)
        } else {
            s.parse().map(PresentationKind::Family)
        }
    }
}

/// Collects relations written as text over a generator list.
struct Builder {
    generators: Vec<String>,
    relations: Vec<Relation>,
}

impl Builder {
    fn new(generators: Vec<String>) -> Self {
        Builder {
            generators,
            relations: Vec::new(),
        }
    }

    fn rel(&mut self, lhs: &str, rhs: &str) {
        let lhs = parse_relator(&self.generators, lhs).expect("built-in relation");
        let rhs = parse_relator(&self.generators, rhs).expect("built-in relation");
        self.relations.push(Relation { lhs, rhs });
    }

    fn finish(self) -> Presentation {
        Presentation {
            generators: self.generators,
            relations: self.relations,
        }
    }
}

fn cyclic_distance(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

/// Artin relations on `σ_1..σ_{n-1}` under generator prefix `p` (`s` or `a`).
fn linear_braid_relations(b: &mut Builder, p: &str, n: usize) {
    for i in 1..n.saturating_sub(1) {
        b.rel(
            &format!("{p}{i} {p}{j} {p}{i}", j = i + 1),
            &format!("{p}{j} {p}{i} {p}{j}", j = i + 1),
        );
    }
    for i in 1..n {
        for j in i + 2..n {
            b.rel(&format!("{p}{i} {p}{j}"), &format!("{p}{j} {p}{i}"));
        }
    }
}

/// Braid relations on `σ_1..σ_n` with indices mod `n`. For `n = 2` the affine
/// diagram `Ã_1` has an infinite edge, so there is no relation at all.
fn cyclic_braid_relations(b: &mut Builder, n: usize) {
    if n < 3 {
        return;
    }
    for i in 1..=n {
        let j = i % n + 1;
        b.rel(&format!("s{i} s{j} s{i}"), &format!("s{j} s{i} s{j}"));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if cyclic_distance(i, j, n) >= 2 {
                b.rel(&format!("s{i} s{j}"), &format!("s{j} s{i}"));
            }
        }
    }
}

fn names(family: Family) -> Vec<String> {
    family.generators().iter().map(ToString::to_string).collect()
}

pub fn builtin_presentation(kind: PresentationKind, n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::input(format!("rank must be at least 2, got {n}")));
    }
    let p = match kind {
        PresentationKind::Family(fk) => {
            let family = Family::new(fk, n)?;
            let mut b = Builder::new(names(family));
            match fk {
                FamilyKind::Braid => linear_braid_relations(&mut b, "s", n),
                FamilyKind::Welded | FamilyKind::Rings => {
                    welded_relations(&mut b, n);
                    if fk == FamilyKind::Rings {
                        twist_relations(&mut b, n);
                    }
                }
                FamilyKind::Circular | FamilyKind::Necklace => {
                    cyclic_braid_relations(&mut b, n);
                    let r = if fk == FamilyKind::Circular { "z" } else { "t" };
                    for i in 1..=n {
                        b.rel(&format!("{r}^-1 s{i} {r}"), &format!("s{}", i % n + 1));
                    }
                    if fk == FamilyKind::Necklace {
                        b.rel(&format!("t^{}", 2 * n), "1");
                    }
                }
                FamilyKind::Affine => cyclic_braid_relations(&mut b, n),
            }
            b.finish()
        }
        PresentationKind::Semidirect => {
            let mut gens: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
            gens.extend((1..=n).map(|k| format!("e{k}")));
            let mut b = Builder::new(gens);
            linear_braid_relations(&mut b, "a", n);
            for i in 1..n {
                b.rel(
                    &format!("a{i}^-1 e{i} a{i}"),
                    &format!("e{i} e{j} e{i}^-1", j = i + 1),
                );
                b.rel(&format!("a{i}^-1 e{j} a{i}", j = i + 1), &format!("e{i}"));
                for k in (1..=n).filter(|&k| k != i && k != i + 1) {
                    b.rel(&format!("a{i}^-1 e{k} a{i}"), &format!("e{k}"));
                }
            }
            b.finish()
        }
    };
    Ok(p)
}

fn welded_relations(b: &mut Builder, n: usize) {
    linear_braid_relations(b, "s", n);
    linear_braid_relations(b, "r", n);
    for i in 1..n {
        b.rel(&format!("r{i}^2"), "1");
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                b.rel(&format!("s{i} r{j}"), &format!("r{j} s{i}"));
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        b.rel(&format!("r{i} r{j} s{i}"), &format!("s{j} r{i} r{j}"));
        b.rel(&format!("r{i} s{j} s{i}"), &format!("s{j} s{i} r{j}"));
    }
}

fn twist_relations(b: &mut Builder, n: usize) {
    for i in 1..=n {
        b.rel(&format!("u{i}^2"), "1");
        for j in i + 1..=n {
            b.rel(&format!("u{i} u{j}"), &format!("u{j} u{i}"));
        }
        for j in (1..n).filter(|&j| j + 1 != i && j != i) {
            b.rel(&format!("u{i} s{j}"), &format!("s{j} u{i}"));
            b.rel(&format!("u{i} r{j}"), &format!("r{j} u{i}"));
        }
    }
    for i in 1..n {
        let j = i + 1;
        b.rel(&format!("r{i} u{i}"), &format!("u{j} r{i}"));
        b.rel(&format!("u{i} s{i}"), &format!("s{i} u{j}"));
        b.rel(&format!("u{j} s{i}"), &format!("r{i} s{i}^-1 r{i} u{i}"));
    }
}

/// The representation that each built-in presentation is checked against:
/// the family tables, or `α_j ↦ ρ_A(σ_j)`, `η_i ↦ (x_k ↦ x_i⁻¹ x_k x_i)` for
/// the semidirect product.
pub fn builtin_assignment(kind: PresentationKind, n: usize) -> Result<BTreeMap<String, Automorphism>> {
    let mut out = BTreeMap::new();
    match kind {
        PresentationKind::Family(fk) => {
            let family = Family::new(fk, n)?;
            for g in family.generators() {
                out.insert(g.to_string(), generator_automorphism(family, g)?);
            }
        }
        PresentationKind::Semidirect => {
            let braid = Family::new(FamilyKind::Braid, n)?;
            for i in 1..n {
                out.insert(
                    format!("a{i}"),
                    generator_automorphism(braid, Generator::Sigma(i))?,
                );
            }
            for k in 1..=n {
                out.insert(
                    format!("e{k}"),
                    Automorphism::inner(&Word::generator(n, k).inverse())?,
                );
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageDifference {
    pub generator: String,
    pub lhs_image: String,
    pub rhs_image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_difference: Option<ImageDifference>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssignmentReport {
    pub relations: Vec<RelationCheck>,
    pub passed: usize,
    pub failed: usize,
}

impl AssignmentReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// Evaluates both sides of every relation (leftmost letter acts first) and
/// compares the resulting maps.
pub fn check_assignment(
    p: &Presentation,
    images: &BTreeMap<String, Automorphism>,
) -> Result<AssignmentReport> {
    let mut table = Vec::with_capacity(p.generators.len());
    for name in &p.generators {
        let a = images
            .get(name)
            .ok_or_else(|| Error::input(format!("no image assigned to generator `{name}`")))?;
        table.push(a);
    }
    let rank = match table.first() {
        Some(a) => a.rank(),
        None => return Err(Error::input("presentation has no generators")),
    };
    for a in &table {
        Error::check_rank(rank, a.rank())?;
    }
    let eval = |w: &RelatorWord| -> Endomorphism {
        let mut cur = Endomorphism::identity(rank);
        for &(g, e) in w.iter().rev() {
            let step = if e > 0 {
                table[g].forward()
            } else {
                table[g].backward()
            };
            for _ in 0..e.unsigned_abs() {
                cur.precompose_in_place(step);
            }
        }
        cur
    };
    let mut relations = Vec::with_capacity(p.relations.len());
    for r in &p.relations {
        let (l, rr) = (eval(&r.lhs), eval(&r.rhs));
        let first_difference = (1..=rank)
            .find(|&k| l.image(k) != rr.image(k))
            .map(|k| ImageDifference {
                generator: format!("x{k}"),
                lhs_image: l.image(k).to_string(),
                rhs_image: rr.image(k).to_string(),
            });
        relations.push(RelationCheck {
            lhs: p.format_word(&r.lhs),
            rhs: p.format_word(&r.rhs),
            pass: first_difference.is_none(),
            first_difference,
        });
    }
    let passed = relations.iter().filter(|r| r.pass).count();
    Ok(AssignmentReport {
        failed: relations.len() - passed,
        passed,
        relations,
    })
}

/// Largest enumeration `kernel_scan` accepts.
pub const MAX_SCAN_WORDS: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub max_len: usize,
    pub scanned: u64,
    pub kernel_hits: u64,
    pub violations: u64,
    /// Up to ten offending words, in enumeration order.
    pub violation_examples: Vec<String>,
}

#[derive(Default)]
struct ScanCounts {
    scanned: u64,
    kernel_hits: u64,
    violations: u64,
    examples: Vec<String>,
}

impl ScanCounts {
    fn merge(mut self, other: ScanCounts) -> ScanCounts {
        self.scanned += other.scanned;
        self.kernel_hits += other.kernel_hits;
        self.violations += other.violations;
        self.examples.extend(other.examples);
        self.examples.truncate(10);
        self
    }
}

struct Scanner<'a> {
    family: Family,
    reps: &'a RepresentationTable,
    theta: &'a ThetaTable,
    letters: Vec<Syllable>,
    max_len: usize,
}

impl Scanner<'_> {
    /// `suffix` holds the word built so far in reverse (words grow to the left).
    fn visit(&self, rep: &Endomorphism, suffix: &mut Vec<Syllable>, counts: &mut ScanCounts) {
        counts.scanned += 1;
        if rep.is_identity() {
            counts.kernel_hits += 1;
            let word: Vec<Syllable> = suffix.iter().rev().copied().collect();
            if !self.kernel_element_ok(&word) {
                counts.violations += 1;
                if counts.examples.len() < 10 {
                    counts
                        .examples
                        .push(GroupWord::new_unchecked(self.family, word).to_string());
                }
            }
        }
        if suffix.len() == self.max_len {
            return;
        }
        for &s in &self.letters {
            let mut next = rep.clone();
            next.precompose_in_place(self.reps.syllable(s));
            suffix.push(s);
            self.visit(&next, suffix, counts);
            suffix.pop();
        }
    }

    /// `w` acts trivially; it must be `ζ^{ε(w)}` with `n | ε(w)`.
    fn kernel_element_ok(&self, word: &[Syllable]) -> bool {
        let n = self.family.n() as i64;
        let (mut eps, mut sigma) = (0i64, 0i64);
        for s in word {
            match s.generator {
                Generator::Zeta => eps += i64::from(s.sign()),
                _ => sigma += i64::from(s.sign()),
            }
        }
        if eps.rem_euclid(n) != 0 || sigma != 0 {
            return false;
        }
        let w = GroupWord::new_unchecked(self.family, word.to_vec());
        let lhs = self.theta.theta(&w).expect("circular word");
        let rhs = sd_power(self.theta.generator_image(Syllable::pos(Generator::Zeta)), eps);
        self.theta.equal(&lhs, &rhs)
    }
}

/// Enumerates every circular word of length at most `max_len` and checks each
/// one acting trivially on `F_n` against the kernel `⟨ζ^n⟩`.
pub fn kernel_scan(n: usize, max_len: usize) -> Result<ScanReport> {
    let family = Family::new(FamilyKind::Circular, n)?;
    let letters: Vec<Syllable> = family
        .generators()
        .into_iter()
        .flat_map(|g| [Syllable::pos(g), Syllable::neg(g)])
        .collect();
    let total = (0..=max_len as u32).try_fold(0u64, |acc, k| {
        (letters.len() as u64)
            .checked_pow(k)
            .and_then(|c| acc.checked_add(c))
    });
    match total {
        Some(t) if t <= MAX_SCAN_WORDS => {}
        _ => {
            return Err(Error::input(format!(
                "scan of length {max_len} at n = {n} exceeds {MAX_SCAN_WORDS} words"
            )))
        }
    }
    let reps = RepresentationTable::new(family);
    let theta = ThetaTable::new(n)?;
    let scanner = Scanner {
        family,
        reps: &reps,
        theta: &theta,
        letters: letters.clone(),
        max_len,
    };

    // The empty word, then one partition per final letter.
    let identity = Endomorphism::identity(n);
    let mut root = ScanCounts::default();
    {
        let mut empty = Vec::new();
        root.scanned += 1;
        root.kernel_hits += 1;
        if !scanner.kernel_element_ok(&empty) {
            root.violations += 1;
            root.examples.push("1".to_string());
        }
        empty.clear();
    }
    let parts: Vec<ScanCounts> = if max_len == 0 {
        Vec::new()
    } else {
        letters
            .par_iter()
            .map(|&s| {
                let mut counts = ScanCounts::default();
                let mut rep = identity.clone();
                rep.precompose_in_place(reps.syllable(s));
                let mut suffix = vec![s];
                scanner.visit(&rep, &mut suffix, &mut counts);
                counts
            })
            .collect()
    };
    let counts = parts.into_iter().fold(root, ScanCounts::merge);
    Ok(ScanReport {
        n,
        max_len,
        scanned: counts.scanned,
        kernel_hits: counts.kernel_hits,
        violations: counts.violations,
        violation_examples: counts.examples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_strings(p: &Presentation) -> Vec<String> {
        p.relations()
            .iter()
            .map(|r| format!("{} = {}", p.format_word(&r.lhs), p.format_word(&r.rhs)))
            .collect()
    }

    #[test]
    fn circular_n4_relations() {
        let p = builtin_presentation(PresentationKind::Family(FamilyKind::Circular), 4).unwrap();
        let rels = rel_strings(&p);
        assert!(rels.contains(&"s4 s1 s4 = s1 s4 s1".to_string()));
        assert!(rels.contains(&"z^-1 s1 z = s2".to_string()));
        assert!(rels.contains(&"z^-1 s4 z = s1".to_string()));
        assert!(rels.contains(&"s1 s3 = s3 s1".to_string()));
        assert!(!rels.contains(&"s1 s4 = s4 s1".to_string()));
    }

    #[test]
    fn necklace_has_torsion_relation() {
        let p = builtin_presentation(PresentationKind::Family(FamilyKind::Necklace), 3).unwrap();
        assert!(rel_strings(&p).contains(&"t^6 = 1".to_string()));
    }

    #[test]
    fn braid_n3_has_one_relation() {
        let p = builtin_presentation(PresentationKind::Family(FamilyKind::Braid), 3).unwrap();
        assert_eq!(rel_strings(&p), vec!["s1 s2 s1 = s2 s1 s2".to_string()]);
    }

    #[test]
    fn builtin_assignments_pass() {
        for kind in PresentationKind::ALL {
            for n in 2..=6 {
                let p = builtin_presentation(kind, n).unwrap();
                let images = builtin_assignment(kind, n).unwrap();
                let report = check_assignment(&p, &images).unwrap();
                assert!(report.all_pass(), "{kind} n={n}: {report:?}");
            }
        }
    }

    #[test]
    fn verbatim_cyclic_relation_fails_at_n2() {
        let family = Family::new(FamilyKind::Circular, 2).unwrap();
        let mut b = Builder::new(names(family));
        b.rel("s1 s2 s1", "s2 s1 s2");
        let report = check_assignment(
            &b.finish(),
            &builtin_assignment(PresentationKind::Family(FamilyKind::Circular), 2).unwrap(),
        )
        .unwrap();
        assert!(!report.all_pass());
    }

    #[test]
    fn forbidden_welded_relation_fails() {
        let family = Family::new(FamilyKind::Welded, 3).unwrap();
        let mut b = Builder::new(names(family));
        b.rel("s1 s2 r1", "r2 s1 s2");
        let report = check_assignment(
            &b.finish(),
            &builtin_assignment(PresentationKind::Family(FamilyKind::Welded), 3).unwrap(),
        )
        .unwrap();
        assert_eq!(report.failed, 1);
    }

    #[test]
    fn zeta_as_identity_breaks_conjugation_relation() {
        let kind = PresentationKind::Family(FamilyKind::Circular);
        let p = builtin_presentation(kind, 3).unwrap();
        let mut images = builtin_assignment(kind, 3).unwrap();
        images.insert("z".into(), Automorphism::identity(3));
        let report = check_assignment(&p, &images).unwrap();
        let failing = report.relations.iter().find(|r| r.lhs == "z^-1 s1 z").unwrap();
        assert!(!failing.pass);
        let diff = failing.first_difference.as_ref().unwrap();
        assert_eq!(diff.generator, "x1");
    }

    #[test]
    fn each_family_detects_a_mutated_generator() {
        for kind in PresentationKind::ALL {
            let n = 4;
            let p = builtin_presentation(kind, n).unwrap();
            let mut images = builtin_assignment(kind, n).unwrap();
            let (first, second) = {
                let mut keys = images.keys();
                (keys.next().unwrap().clone(), keys.next().unwrap().clone())
            };
            // give the first generator the image of the second
            let replacement = images[&second].clone();
            images.insert(first, replacement);
            let report = check_assignment(&p, &images).unwrap();
            assert!(report.failed > 0, "{kind}: mutation went undetected");
        }
    }

    #[test]
    fn missing_assignment_is_an_error() {
        let kind = PresentationKind::Family(FamilyKind::Braid);
        let p = builtin_presentation(kind, 3).unwrap();
        let mut images = builtin_assignment(kind, 3).unwrap();
        images.remove("s2");
        assert!(matches!(check_assignment(&p, &images), Err(Error::Input(_))));
    }

    #[test]
    fn small_kernel_scans() {
        let r = kernel_scan(3, 0).unwrap();
        assert_eq!((r.scanned, r.kernel_hits, r.violations), (1, 1, 0));
        let r = kernel_scan(3, 3).unwrap();
        assert_eq!(r.scanned, 1 + 8 + 64 + 512);
        assert_eq!(r.violations, 0);
        // identity-acting words up to length 3: the empty word, the 8·1 pairs
        // g g⁻¹ ... and ζ^{±3}
        assert!(r.kernel_hits >= 1 + 8 + 2);
        let r = kernel_scan(2, 4).unwrap();
        assert_eq!(r.violations, 0);
        assert_eq!(r.scanned, 1 + 6 + 36 + 216 + 1296);
    }

    #[test]
    fn oversized_scan_is_rejected() {
        assert!(kernel_scan(3, 12).is_err());
    }
}
