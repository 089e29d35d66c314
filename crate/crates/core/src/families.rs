//! Symbolic elements of the braid-like groups and their actions on `F_n`.
//!
//! Group words act diagrammatically: the leftmost syllable acts first, so for
//! `w = g_1 g_2 ⋯ g_k` the induced map is `ρ(g_k) ∘ ⋯ ∘ ρ(g_1)` and
//! `represent(u·v) = represent(v) ∘ represent(u)`. This is the only order in
//! which the relation `ζ⁻¹ σ_i ζ = σ_{i+1}` holds for the tables below.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::autos::{Automorphism, Endomorphism};
use crate::error::{Error, Result};
use crate::words::{split_exponent, write_runs, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// Artin braid group `B_n`.
    Braid,
    /// Welded braid group `WB_n`.
    Welded,
    /// Ring group `R_n` (welded plus circle twists).
    Rings,
    /// Circular braid group `CB_n`.
    Circular,
    /// Fundamental group of the necklace configuration space, `CB_n / ⟨ζ^{2n}⟩`.
    Necklace,
    /// Affine braid group of type `Ã_{n-1}`.
    Affine,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Braid,
        FamilyKind::Welded,
        FamilyKind::Rings,
        FamilyKind::Circular,
        FamilyKind::Necklace,
        FamilyKind::Affine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Braid => "braid",
            FamilyKind::Welded => "welded",
            FamilyKind::Rings => "rings",
            FamilyKind::Circular => "circular",
            FamilyKind::Necklace => "necklace",
            FamilyKind::Affine => "affine",
        }
    }

    /// σ indices run over `1..=n` with wrap-around.
    fn cyclic(self) -> bool {
        matches!(
            self,
            FamilyKind::Circular | FamilyKind::Necklace | FamilyKind::Affine
        )
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::input(format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    kind: FamilyKind,
    n: usize,
}

impl Family {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::input(format!("rank must be at least 2, got {n}")));
        }
        Ok(Family { kind, n })
    }

    pub fn kind(self) -> FamilyKind {
        self.kind
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Admissible generators in a fixed order.
    pub fn generators(self) -> Vec<Generator> {
        let n = self.n;
        let mut gens = Vec::new();
        let sigma_max = if self.kind.cyclic() { n } else { n - 1 };
        gens.extend((1..=sigma_max).map(Generator::Sigma));
        if matches!(self.kind, FamilyKind::Welded | FamilyKind::Rings) {
            gens.extend((1..n).map(Generator::Rho));
        }
        if self.kind == FamilyKind::Rings {
            gens.extend((1..=n).map(Generator::Twist));
        }
        match self.kind {
            FamilyKind::Circular => gens.push(Generator::Zeta),
            FamilyKind::Necklace => gens.push(Generator::Tau),
            _ => {}
        }
        gens
    }

    pub fn admits(self, g: Generator) -> bool {
        let n = self.n;
        match (self.kind, g) {
            (k, Generator::Sigma(i)) => i >= 1 && if k.cyclic() { i <= n } else { i < n },
            (FamilyKind::Welded | FamilyKind::Rings, Generator::Rho(i)) => i >= 1 && i < n,
            (FamilyKind::Rings, Generator::Twist(j)) => j >= 1 && j <= n,
            (FamilyKind::Circular, Generator::Zeta) => true,
            (FamilyKind::Necklace, Generator::Tau) => true,
            _ => false,
        }
    }

    fn check(self, g: Generator) -> Result<()> {
        if self.admits(g) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "generator {g} is not admissible for {} with n = {}",
                self.kind, self.n
            )))
        }
    }

    /// Whether the representation acts on `F_n × Z` with `y ↦ y`.
    pub fn y_fixed(self) -> bool {
        matches!(self.kind, FamilyKind::Necklace | FamilyKind::Rings)
    }

    /// The rotation generator (`ζ` or `τ`) if the family has one.
    pub fn rotation(self) -> Option<Generator> {
        match self.kind {
            FamilyKind::Circular => Some(Generator::Zeta),
            FamilyKind::Necklace => Some(Generator::Tau),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma(usize),
    Rho(usize),
    /// Ring twist `τ_j`.
    Twist(usize),
    Zeta,
    /// Necklace rotation `τ`.
    Tau,
}

impl Generator {
    pub fn is_rotation(self) -> bool {
        matches!(self, Generator::Zeta | Generator::Tau)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(i) => write!(f, "s{i}"),
            Generator::Rho(i) => write!(f, "r{i}"),
            Generator::Twist(i) => write!(f, "u{i}"),
            Generator::Zeta => f.write_str("z"),
            Generator::Tau => f.write_str("t"),
        }
    }
}

/// A generator raised to `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: Generator,
    inverse: bool,
}

impl Syllable {
    pub const fn pos(generator: Generator) -> Self {
        Syllable {
            generator,
            inverse: false,
        }
    }

    pub const fn neg(generator: Generator) -> Self {
        Syllable {
            generator,
            inverse: true,
        }
    }

    pub fn new(generator: Generator, sign: i32) -> Result<Self> {
        match sign {
            1 => Ok(Syllable::pos(generator)),
            -1 => Ok(Syllable::neg(generator)),
            _ => Err(Error::input(format!("syllable sign must be ±1, got {sign}"))),
        }
    }

    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Self {
        Syllable {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// The automorphism table of one generator.
pub fn generator_automorphism(family: Family, g: Generator) -> Result<Automorphism> {
    family.check(g)?;
    Ok(table_entry(family, g))
}

fn table_entry(family: Family, g: Generator) -> Automorphism {
    let n = family.n;
    let x = |k: usize| Word::generator(n, k);
    let xi = |k: usize| Word::generator(n, k).inverse();
    let next = |k: usize| k % n + 1;
    let prev = |k: usize| (k + n - 2) % n + 1;
    let (forward, backward) = match g {
        Generator::Sigma(i) => {
            let j = next(i);
            // x_i ↦ x_i x_j x̄_i, x_j ↦ x_i; inverse x_i ↦ x_j, x_j ↦ x̄_j x_i x_j
            (
                vec![(i, x(i).conjugate(&x(j))), (j, x(i))],
                vec![(i, x(j)), (j, xi(j).conjugate(&x(i)))],
            )
        }
        Generator::Rho(i) => {
            let swap = vec![(i, x(i + 1)), (i + 1, x(i))];
            (swap.clone(), swap)
        }
        Generator::Twist(j) => {
            let flip = vec![(j, xi(j))];
            (flip.clone(), flip)
        }
        Generator::Zeta | Generator::Tau => (
            (1..=n).map(|k| (k, x(next(k)))).collect(),
            (1..=n).map(|k| (k, x(prev(k)))).collect(),
        ),
    };
    let y = family.y_fixed();
    Automorphism::from_parts_unchecked(
        Endomorphism::from_moves(n, &forward, y),
        Endomorphism::from_moves(n, &backward, y),
    )
}

/// All generator automorphisms of a family, built once.
#[derive(Clone, Debug)]
pub struct RepresentationTable {
    family: Family,
    generators: Vec<Generator>,
    entries: Vec<Automorphism>,
}

impl RepresentationTable {
    pub fn new(family: Family) -> Self {
        let generators = family.generators();
        let entries = generators.iter().map(|&g| table_entry(family, g)).collect();
        RepresentationTable {
            family,
            generators,
            entries,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn get(&self, g: Generator) -> &Automorphism {
        let idx = self
            .generators
            .iter()
            .position(|&h| h == g)
            .unwrap_or_else(|| panic!("{g} not in table for {:?}", self.family));
        &self.entries[idx]
    }

    /// Forward map of a signed syllable.
    pub fn syllable(&self, s: Syllable) -> &Endomorphism {
        let a = self.get(s.generator);
        if s.is_inverse() {
            a.backward()
        } else {
            a.forward()
        }
    }

    /// Only the forward map of `represent(syllables)`.
    pub fn represent_forward(&self, syllables: &[Syllable]) -> Endomorphism {
        let mut cur = Endomorphism::identity(self.family.n).with_y_fixed(self.family.y_fixed());
        for &s in syllables.iter().rev() {
            cur.precompose_in_place(self.syllable(s));
        }
        cur
    }

    pub fn represent(&self, syllables: &[Syllable]) -> Automorphism {
        let forward = self.represent_forward(syllables);
        let mut backward = Endomorphism::identity(self.family.n).with_y_fixed(self.family.y_fixed());
        for &s in syllables {
            backward.precompose_in_place(self.syllable(s.inverse()));
        }
        Automorphism::from_parts_unchecked(forward, backward)
    }
}

/// A word in the generators of one family. No normalization is applied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupWord {
    family: Family,
    syllables: Vec<Syllable>,
}

impl GroupWord {
    pub fn identity(family: Family) -> Self {
        GroupWord {
            family,
            syllables: Vec::new(),
        }
    }

    pub fn new(family: Family, syllables: Vec<Syllable>) -> Result<Self> {
        for s in &syllables {
            family.check(s.generator)?;
        }
        Ok(GroupWord { family, syllables })
    }

    pub(crate) fn new_unchecked(family: Family, syllables: Vec<Syllable>) -> Self {
        debug_assert!(syllables.iter().all(|s| family.admits(s.generator)));
        GroupWord { family, syllables }
    }

    /// `g^e` as a word of `|e|` syllables.
    pub fn power(family: Family, g: Generator, e: i64) -> Result<Self> {
        family.check(g)?;
        let s = if e < 0 { Syllable::neg(g) } else { Syllable::pos(g) };
        Ok(GroupWord {
            family,
            syllables: vec![s; e.unsigned_abs() as usize],
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> Result<GroupWord> {
        check_same_family(self.family, other.family)?;
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        Ok(GroupWord {
            family: self.family,
            syllables,
        })
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            family: self.family,
            syllables: self.syllables.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> GroupWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut syllables = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            syllables.extend_from_slice(&base.syllables);
        }
        GroupWord {
            family: self.family,
            syllables,
        }
    }

    /// Cancels adjacent `g g⁻¹` pairs. Valid in every family.
    pub fn free_reduce(&self) -> GroupWord {
        let mut out: Vec<Syllable> = Vec::with_capacity(self.syllables.len());
        for &s in &self.syllables {
            if out.last() == Some(&s.inverse()) {
                out.pop();
            } else {
                out.push(s);
            }
        }
        GroupWord {
            family: self.family,
            syllables: out,
        }
    }

    /// The same syllables read in another family (must be admissible there).
    pub fn reinterpret(&self, family: Family) -> Result<GroupWord> {
        GroupWord::new(family, self.syllables.clone())
    }

    /// A uniformly random word of the given length over the signed generators.
    pub fn random<R: Rng + ?Sized>(family: Family, len: usize, rng: &mut R) -> GroupWord {
        let gens = family.generators();
        let syllables = (0..len)
            .map(|_| {
                let g = gens[rng.gen_range(0..gens.len())];
                if rng.gen_bool(0.5) {
                    Syllable::pos(g)
                } else {
                    Syllable::neg(g)
                }
            })
            .collect();
        GroupWord { family, syllables }
    }

    pub fn parse(text: &str, family: Family) -> Result<GroupWord> {
        let mut syllables = Vec::new();
        for (pos, token) in text.split_whitespace().enumerate() {
            let position = pos + 1;
            if token == "1" {
                continue;
            }
            let (base, e) = split_exponent(token, position)?;
            let index = |digits: &str| -> Result<usize> {
                digits
                    .parse::<usize>()
                    .map_err(|_| Error::parse(position, format!("bad index in `{token}`")))
            };
            let g = match base.chars().next() {
                Some('s') => Generator::Sigma(index(&base[1..])?),
                Some('r') => Generator::Rho(index(&base[1..])?),
                Some('u') => Generator::Twist(index(&base[1..])?),
                Some('z') if base == "z" => Generator::Zeta,
                Some('t') if base == "t" => Generator::Tau,
                _ => return Err(Error::parse(position, format!("unknown token `{token}`"))),
            };
            if !family.admits(g) {
                return Err(Error::parse(
                    position,
                    format!("{g} is not a generator of {} with n = {}", family.kind, family.n),
                ));
            }
            let s = if e < 0 { Syllable::neg(g) } else { Syllable::pos(g) };
            syllables.extend(std::iter::repeat_n(s, e.unsigned_abs() as usize));
        }
        Ok(GroupWord { family, syllables })
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        write_runs(
            f,
            self.syllables.iter().map(|s| (s.generator, i64::from(s.sign()))),
            |g| g.to_string(),
            &mut first,
        )
    }
}

fn check_same_family(a: Family, b: Family) -> Result<()> {
    if a.kind != b.kind {
        return Err(Error::input(format!("family mismatch: {} vs {}", a.kind, b.kind)));
    }
    Error::check_rank(a.n, b.n)
}

/// The automorphism induced by a group word.
pub fn represent(w: &GroupWord) -> Automorphism {
    RepresentationTable::new(w.family).represent(&w.syllables)
}

fn require_kind(w: &GroupWord, allowed: &[FamilyKind], op: &str) -> Result<()> {
    if allowed.contains(&w.family.kind) {
        Ok(())
    } else {
        Err(Error::input(format!(
            "{op} is not defined for the {} family",
            w.family.kind
        )))
    }
}

/// Exponent sum of the rotation generator (`ζ` or `τ`); zero for affine words.
pub fn epsilon_word(w: &GroupWord) -> Result<i64> {
    require_kind(
        w,
        &[FamilyKind::Circular, FamilyKind::Necklace, FamilyKind::Affine],
        "epsilon",
    )?;
    Ok(rotation_sum(&w.syllables))
}

fn rotation_sum(syllables: &[Syllable]) -> i64 {
    syllables
        .iter()
        .filter(|s| s.generator.is_rotation())
        .map(|s| i64::from(s.sign()))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub sigma_total: i64,
    pub rot_total: i64,
}

pub fn abelianization(w: &GroupWord) -> Result<Abelianization> {
    require_kind(w, &[FamilyKind::Circular, FamilyKind::Necklace], "abelianization")?;
    let sigma_total = w
        .syllables
        .iter()
        .filter(|s| matches!(s.generator, Generator::Sigma(_)))
        .map(|s| i64::from(s.sign()))
        .sum();
    Ok(Abelianization {
        sigma_total,
        rot_total: rotation_sum(&w.syllables),
    })
}

/// Rewrites `w = ζ^k · tail` with `tail` a σ-word, using `σ_i ζ = ζ σ_{i+1}`.
pub fn normalize_zeta(w: &GroupWord) -> Result<(i64, GroupWord)> {
    require_kind(w, &[FamilyKind::Circular, FamilyKind::Necklace], "normalize")?;
    let n = w.family.n as i64;
    let mut shift = 0i64;
    let mut tail_rev = Vec::new();
    for s in w.syllables.iter().rev() {
        match s.generator {
            Generator::Sigma(i) => {
                let j = (i as i64 - 1 + shift).rem_euclid(n) as usize + 1;
                tail_rev.push(Syllable {
                    generator: Generator::Sigma(j),
                    inverse: s.inverse,
                });
            }
            _ => shift += i64::from(s.sign()),
        }
    }
    tail_rev.reverse();
    Ok((shift, GroupWord::new_unchecked(w.family, tail_rev)))
}

/// Decides equality of two words in their group.
///
/// Representation equality suffices for braid, welded, rings and affine words.
/// The circular representation has kernel `⟨ζ^n⟩`, which `ε` detects exactly;
/// in the necklace group `τ^{2n} = 1`, so `ε` is compared mod `2n`.
pub fn equal_elements(u: &GroupWord, v: &GroupWord) -> Result<bool> {
    check_same_family(u.family, v.family)?;
    let table = RepresentationTable::new(u.family);
    let same_action = table.represent_forward(&u.syllables) == table.represent_forward(&v.syllables);
    let n = u.family.n as i64;
    let (eu, ev) = (rotation_sum(&u.syllables), rotation_sum(&v.syllables));
    Ok(same_action
        && match u.family.kind {
            FamilyKind::Circular => eu == ev,
            FamilyKind::Necklace => (eu - ev).rem_euclid(2 * n) == 0,
            _ => true,
        })
}

/// Membership in the σ-generated (zero angular sum) subgroup.
pub fn zero_angular(w: &GroupWord) -> Result<bool> {
    require_kind(w, &[FamilyKind::Circular, FamilyKind::Necklace], "zero-angular")?;
    let e = rotation_sum(&w.syllables);
    Ok(match w.family.kind {
        FamilyKind::Necklace => e.rem_euclid(2 * w.family.n as i64) == 0,
        _ => e == 0,
    })
}

fn check_pair(i: usize, j: usize, n: usize) -> Result<()> {
    if i >= 1 && i < j && j <= n {
        Ok(())
    } else {
        Err(Error::input(format!(
            "pure generator needs 1 <= i < j <= n, got i={i}, j={j}, n={n}"
        )))
    }
}

/// The band generator `λ_{i,j} = σ_{j-1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j-1}⁻¹` of the pure braid group.
pub fn lambda(i: usize, j: usize, n: usize) -> Result<GroupWord> {
    check_pair(i, j, n)?;
    let family = Family::new(FamilyKind::Braid, n)?;
    let mut syllables: Vec<Syllable> = (i + 1..j)
        .rev()
        .map(|k| Syllable::pos(Generator::Sigma(k)))
        .collect();
    syllables.push(Syllable::pos(Generator::Sigma(i)));
    syllables.push(Syllable::pos(Generator::Sigma(i)));
    syllables.extend((i + 1..j).map(|k| Syllable::neg(Generator::Sigma(k))));
    Ok(GroupWord::new_unchecked(family, syllables))
}

/// The basis-conjugating automorphism `x_i ↦ x_j x_i x_j⁻¹`, other generators fixed.
pub fn delta(i: usize, j: usize, n: usize) -> Result<Automorphism> {
    check_pair(i, j, n)?;
    Ok(basis_conjugation(i, j, n))
}

/// `x_i ↦ x_j x_i x̄_j` for any `i ≠ j`.
pub(crate) fn basis_conjugation(i: usize, j: usize, n: usize) -> Automorphism {
    let xj = Word::generator(n, j);
    let xi = Word::generator(n, i);
    Automorphism::from_parts_unchecked(
        Endomorphism::from_moves(n, &[(i, xj.conjugate(&xi))], false),
        Endomorphism::from_moves(n, &[(i, xj.inverse().conjugate(&xi))], false),
    )
}

/// A welded word realizing `delta(i, j)`.
pub fn delta_word(i: usize, j: usize, n: usize) -> Result<GroupWord> {
    check_pair(i, j, n)?;
    basis_conjugation_word(i, j, n)
}

/// Welded word for `x_i ↦ x_j x_i x̄_j` (`i ≠ j`): the permutation conjugate of `σ_1 ρ_1`.
pub(crate) fn basis_conjugation_word(i: usize, j: usize, n: usize) -> Result<GroupWord> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::input(format!("bad basis conjugation indices ({i}, {j})")));
    }
    let family = Family::new(FamilyKind::Welded, n)?;
    // p(1) = i, p(2) = j, remaining indices in increasing order
    let mut p = vec![i, j];
    p.extend((1..=n).filter(|&k| k != i && k != j));
    let p_word = permutation_word(family, &p)?;
    let mut syllables = p_word.inverse().syllables;
    syllables.push(Syllable::pos(Generator::Sigma(1)));
    syllables.push(Syllable::pos(Generator::Rho(1)));
    syllables.extend_from_slice(&p_word.syllables);
    Ok(GroupWord::new_unchecked(family, syllables))
}

/// A ρ-word whose representation is the permutation automorphism `x_k ↦ x_{p(k)}`
/// (`p[k-1] = p(k)`, 1-based).
pub fn permutation_word(family: Family, p: &[usize]) -> Result<GroupWord> {
    if !matches!(family.kind, FamilyKind::Welded | FamilyKind::Rings) {
        return Err(Error::input("permutation words need the ρ generators"));
    }
    let n = family.n;
    let mut sorted = p.to_vec();
    sorted.sort_unstable();
    if p.len() != n || sorted != (1..=n).collect::<Vec<_>>() {
        return Err(Error::input(format!("{p:?} is not a permutation of 1..={n}")));
    }
    // p = s_{m_r} ∘ ⋯ ∘ s_{m_1}; the word ρ_{m_1} ⋯ ρ_{m_r} acts in that order.
    let mut q = p.to_vec();
    let mut syllables = Vec::new();
    while let Some(m) = (0..n - 1).find(|&m| q[m] > q[m + 1]) {
        q.swap(m, m + 1);
        syllables.push(Syllable::pos(Generator::Rho(m + 1)));
    }
    Ok(GroupWord::new_unchecked(family, syllables))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PureKind {
    Lambda,
    Delta,
}

#[derive(Clone, Debug)]
pub enum PureGenerator {
    /// `λ_{i,j}` as a braid word.
    Lambda(GroupWord),
    /// `δ_{i,j}` as an automorphism.
    Delta(Automorphism),
}

impl PureGenerator {
    pub fn automorphism(&self) -> Automorphism {
        match self {
            PureGenerator::Lambda(w) => represent(w),
            PureGenerator::Delta(a) => a.clone(),
        }
    }
}

pub fn pure_generator(kind: PureKind, i: usize, j: usize, n: usize) -> Result<PureGenerator> {
    match kind {
        PureKind::Lambda => lambda(i, j, n).map(PureGenerator::Lambda),
        PureKind::Delta => delta(i, j, n).map(PureGenerator::Delta),
    }
}
