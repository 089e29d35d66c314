//! Membership tests for the images of the braid, welded, necklace and affine
//! representations, and synthesis of group words realizing accepted maps.

use serde::{Serialize, Serializer};

use crate::autos::{Endomorphism, PermConjData};
use crate::error::{Error, Result};
use crate::families::{
    basis_conjugation, basis_conjugation_word, permutation_word, Family, FamilyKind, Generator, GroupWord,
    RepresentationTable, Syllable,
};
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectReason {
    NotPermConj,
    DeltaNotConjugate,
    DeltaNotFixed,
    ResidueNonzero,
}

impl RejectReason {
    pub fn code(self) -> &'static str {
        match self {
            RejectReason::NotPermConj => "not-perm-conj",
            RejectReason::DeltaNotConjugate => "delta-not-conjugate",
            RejectReason::DeltaNotFixed => "delta-not-fixed",
            RejectReason::ResidueNonzero => "residue-nonzero",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub accepted: bool,
    pub data: Option<PermConjData>,
    /// `ℓ(w̄) mod n` where `φ(Δ) = w Δ w̄`, whenever `φ(Δ)` is conjugate to `Δ`.
    pub residue: Option<usize>,
    pub reason: Option<RejectReason>,
}

impl MembershipVerdict {
    fn accept(data: PermConjData, residue: Option<usize>) -> Self {
        MembershipVerdict {
            accepted: true,
            data: Some(data),
            residue,
            reason: None,
        }
    }

    fn reject(data: Option<PermConjData>, residue: Option<usize>, reason: RejectReason) -> Self {
        MembershipVerdict {
            accepted: false,
            data,
            residue,
            reason: Some(reason),
        }
    }
}

impl Serialize for MembershipVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Flat<'a> {
            accepted: bool,
            permutation: Option<&'a [usize]>,
            conjugators: Option<Vec<String>>,
            residue: Option<usize>,
            reason: Option<RejectReason>,
        }
        Flat {
            accepted: self.accepted,
            permutation: self.data.as_ref().map(|d| d.permutation.as_slice()),
            conjugators: self
                .data
                .as_ref()
                .map(|d| d.conjugators.iter().map(ToString::to_string).collect()),
            residue: self.residue,
            reason: self.reason,
        }
        .serialize(s)
    }
}

/// Which membership test to run; `FromStr` accepts the lowercase names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Braid,
    Welded,
    Necklace,
    Affine,
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "braid" => Ok(Check::Braid),
            "welded" => Ok(Check::Welded),
            "necklace" => Ok(Check::Necklace),
            "affine" => Ok(Check::Affine),
            _ => Err(Error::input(format!("unknown check `{s}`"))),
        }
    }
}

pub fn check(kind: Check, phi: &Endomorphism) -> MembershipVerdict {
    match kind {
        Check::Braid => check_braid(phi),
        Check::Welded => check_welded(phi),
        Check::Necklace => check_necklace(phi),
        Check::Affine => check_affine(phi),
    }
}

fn delta_image(phi: &Endomorphism) -> Word {
    phi.apply_unchecked(&Word::delta(phi.rank()))
}

pub fn check_braid(phi: &Endomorphism) -> MembershipVerdict {
    let residue = phi.delta_conjugator_residue();
    match phi.perm_conj_decompose() {
        None => MembershipVerdict::reject(None, residue, RejectReason::NotPermConj),
        Some(d) if delta_image(phi) == Word::delta(phi.rank()) => MembershipVerdict::accept(d, residue),
        Some(d) => MembershipVerdict::reject(Some(d), residue, RejectReason::DeltaNotFixed),
    }
}

pub fn check_welded(phi: &Endomorphism) -> MembershipVerdict {
    let residue = phi.delta_conjugator_residue();
    match phi.perm_conj_decompose() {
        None => MembershipVerdict::reject(None, residue, RejectReason::NotPermConj),
        Some(d) => MembershipVerdict::accept(d, residue),
    }
}

pub fn check_necklace(phi: &Endomorphism) -> MembershipVerdict {
    let residue = phi.delta_conjugator_residue();
    match (phi.perm_conj_decompose(), residue) {
        (None, _) => MembershipVerdict::reject(None, residue, RejectReason::NotPermConj),
        (Some(d), None) => MembershipVerdict::reject(Some(d), None, RejectReason::DeltaNotConjugate),
        (Some(d), Some(_)) => MembershipVerdict::accept(d, residue),
    }
}

pub fn check_affine(phi: &Endomorphism) -> MembershipVerdict {
    let residue = phi.delta_conjugator_residue();
    match (phi.perm_conj_decompose(), residue) {
        (None, _) => MembershipVerdict::reject(None, residue, RejectReason::NotPermConj),
        (Some(d), None) => MembershipVerdict::reject(Some(d), None, RejectReason::DeltaNotConjugate),
        (Some(d), Some(0)) => MembershipVerdict::accept(d, residue),
        (Some(d), Some(_)) => MembershipVerdict::reject(Some(d), residue, RejectReason::ResidueNonzero),
    }
}

/// Nodes the descent may visit before giving up.
const NODE_BUDGET: usize = 200_000;

struct Move {
    map: Endomorphism,
    /// A word representing the inverse of `map`.
    inverse_word: Vec<Syllable>,
}

enum Side {
    Source,
    Target,
}

/// Reduces `φ` to the identity by composing with moves on either side, each
/// step strictly shrinking the total image length. With `φ = L ∘ cur ∘ R`
/// the result is `word(R) · word(L)`.
struct Descent<'a> {
    moves: &'a [Move],
    nodes: usize,
    left: Vec<Vec<Syllable>>,
    right: Vec<Vec<Syllable>>,
}

impl<'a> Descent<'a> {
    fn run(moves: &'a [Move], phi: &Endomorphism) -> Option<Vec<Syllable>> {
        let mut d = Descent {
            moves,
            nodes: 0,
            left: Vec::new(),
            right: Vec::new(),
        };
        if !d.search(phi) {
            return None;
        }
        let mut out: Vec<Syllable> = d.right.concat();
        for w in d.left.iter().rev() {
            out.extend_from_slice(w);
        }
        Some(out)
    }

    fn search(&mut self, cur: &Endomorphism) -> bool {
        if cur.is_identity() {
            return true;
        }
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return false;
        }
        let measure = cur.total_length();
        let mut candidates: Vec<(usize, usize, Side, Endomorphism)> = Vec::new();
        for (idx, m) in self.moves.iter().enumerate() {
            let mut src = cur.clone();
            src.precompose_in_place(&m.map);
            if src.total_length() < measure {
                candidates.push((src.total_length(), 2 * idx, Side::Source, src));
            }
            let tgt = m.map.compose_unchecked(cur);
            if tgt.total_length() < measure {
                candidates.push((tgt.total_length(), 2 * idx + 1, Side::Target, tgt));
            }
        }
        candidates.sort_by_key(|c| (c.0, c.1));
        for (_, key, side, next) in candidates {
            let word = self.moves[key / 2].inverse_word.clone();
            match side {
                Side::Source => self.right.push(word),
                Side::Target => self.left.push(word),
            }
            if self.search(&next) {
                return true;
            }
            match side {
                Side::Source => self.right.pop(),
                Side::Target => self.left.pop(),
            };
            if self.nodes > NODE_BUDGET {
                return false;
            }
        }
        false
    }
}

fn verified(word: GroupWord, phi: &Endomorphism) -> Result<GroupWord> {
    let table = RepresentationTable::new(word.family());
    if table.represent_forward(word.syllables()) == *phi {
        Ok(word)
    } else {
        Err(Error::Internal(format!(
            "witness {word} does not evaluate to the target map"
        )))
    }
}

/// A braid word `w` with `represent(w) = φ`.
pub fn artin_witness(phi: &Endomorphism) -> Result<GroupWord> {
    let verdict = check_braid(phi);
    if !verdict.accepted {
        return Err(Error::input(format!(
            "map is not a braid automorphism ({})",
            verdict.reason.map_or("", RejectReason::code)
        )));
    }
    let family = Family::new(FamilyKind::Braid, phi.rank())?;
    let table = RepresentationTable::new(family);
    let moves: Vec<Move> = family
        .generators()
        .into_iter()
        .flat_map(|g| [Syllable::pos(g), Syllable::neg(g)])
        .map(|s| Move {
            map: table.syllable(s).clone(),
            inverse_word: vec![s.inverse()],
        })
        .collect();
    let syllables = Descent::run(&moves, &phi.clone().with_y_fixed(false))
        .ok_or_else(|| Error::Internal("braid descent exhausted its budget".into()))?;
    verified(GroupWord::new_unchecked(family, syllables).free_reduce(), phi)
}

/// Moves conjugating every `x_i` with `i` in `subset` by `x_j^{±1}`.
fn subset_moves(n: usize, single_only: bool) -> Result<Vec<Move>> {
    let mut moves = Vec::new();
    for j in 1..=n {
        let others: Vec<usize> = (1..=n).filter(|&i| i != j).collect();
        for mask in 1u32..(1 << others.len()) {
            if single_only && mask.count_ones() != 1 {
                continue;
            }
            let subset: Vec<usize> = (0..others.len())
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| others[b])
                .collect();
            let mut forward = Endomorphism::identity(n);
            let mut backward = Endomorphism::identity(n);
            let mut word = Vec::new();
            for &i in &subset {
                let a = basis_conjugation(i, j, n);
                forward.precompose_in_place(a.forward());
                backward.precompose_in_place(a.backward());
                word.extend_from_slice(basis_conjugation_word(i, j, n)?.syllables());
            }
            let inverse: Vec<Syllable> = word.iter().rev().map(|s| s.inverse()).collect();
            moves.push(Move {
                map: forward,
                inverse_word: inverse,
            });
            moves.push(Move {
                map: backward,
                inverse_word: word,
            });
        }
    }
    Ok(moves)
}

/// A welded word `w` with `represent(w) = φ`.
pub fn welded_witness(phi: &Endomorphism) -> Result<GroupWord> {
    let verdict = check_welded(phi);
    let data = match (verdict.accepted, verdict.data) {
        (true, Some(d)) => d,
        _ => return Err(Error::input("map is not a welded automorphism (not-perm-conj)")),
    };
    let n = phi.rank();
    let family = Family::new(FamilyKind::Welded, n)?;
    // Q(x_j) = x_{π⁻¹(j)} makes Q ∘ φ pure.
    let mut pi_inv = vec![0; n];
    for (i, &p) in data.permutation.iter().enumerate() {
        pi_inv[p - 1] = i + 1;
    }
    let q = Endomorphism::new(
        (1..=n).map(|j| Word::generator(n, pi_inv[j - 1])).collect(),
        false,
    )?;
    let pure = q.compose_unchecked(&phi.clone().with_y_fixed(false));
    let back = permutation_word(family, &data.permutation)?;

    let mut found = None;
    for single_only in [true, false] {
        let moves = subset_moves(n, single_only)?;
        if let Some(w) = Descent::run(&moves, &pure) {
            found = Some(w);
            break;
        }
    }
    let mut syllables = found.ok_or_else(|| Error::Internal("welded descent exhausted its budget".into()))?;
    syllables.extend_from_slice(back.syllables());
    verified(GroupWord::new_unchecked(family, syllables).free_reduce(), phi)
}

/// The necklace word for `g_{x_1} = σ_1 ∘ ⋯ ∘ σ_{n-1} ∘ τ̄`.
pub fn g_x1_word(n: usize) -> Result<GroupWord> {
    let family = Family::new(FamilyKind::Necklace, n)?;
    let mut syllables = vec![Syllable::neg(Generator::Tau)];
    syllables.extend((1..n).rev().map(|i| Syllable::pos(Generator::Sigma(i))));
    Ok(GroupWord::new_unchecked(family, syllables))
}

/// The necklace word for `g_{x_k} = τ^{k-1} ∘ g_{x_1} ∘ τ̄^{k-1}`.
pub fn g_xk_word(k: usize, n: usize) -> Result<GroupWord> {
    if k == 0 || k > n {
        return Err(Error::input(format!("generator index {k} out of range 1..={n}")));
    }
    let family = Family::new(FamilyKind::Necklace, n)?;
    let shift = GroupWord::power(family, Generator::Tau, k as i64 - 1)?;
    shift.inverse().concat(&g_x1_word(n)?)?.concat(&shift)
}

/// The necklace word for `g_u = g_{l_1} ∘ ⋯ ∘ g_{l_m}` where `u = l_1 ⋯ l_m`.
/// Its image sends `Δ` to `u Δ ū`.
pub fn g_word(u: &Word) -> Result<GroupWord> {
    let n = u.rank();
    let mut out = GroupWord::identity(Family::new(FamilyKind::Necklace, n)?);
    for l in u.letters().iter().rev() {
        let g = g_xk_word(l.index(), n)?;
        out = out.concat(&if l.is_positive() { g } else { g.inverse() })?;
    }
    Ok(out)
}

/// A necklace word `w` with `represent(w) = φ`: correct the action on `Δ`
/// with `g_ū`, then realize the remaining braid automorphism.
pub fn necklace_witness(phi: &Endomorphism) -> Result<GroupWord> {
    let verdict = check_necklace(phi);
    if !verdict.accepted {
        return Err(Error::input(format!(
            "map is not a necklace automorphism ({})",
            verdict.reason.map_or("", RejectReason::code)
        )));
    }
    let n = phi.rank();
    let u = delta_image(phi)
        .delta_conjugator()
        .ok_or_else(|| Error::Internal("accepted map lost its Δ-conjugator".into()))?;
    let ubar = u.inverse();
    let corrected = Endomorphism::new(phi.images().iter().map(|w| ubar.conjugate(w)).collect(), false)?;
    let braid = artin_witness(&corrected)?;
    let family = Family::new(FamilyKind::Necklace, n)?;
    let word = braid.reinterpret(family)?.concat(&g_word(&u)?)?;
    verified(word.free_reduce(), phi)
}
