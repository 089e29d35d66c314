//! The semidirect product `B_n ⋉ F_n` and the isomorphism `Θ : CB_n → B_n ⋉ F_n`.
//!
//! Elements are kept in the normal form `α · η` with `α` a braid word (generators
//! `α_i`, written `s<i>`) and `η` a free word (generators `η_i`, written `x<i>`).
//! The braid part is compared through the Artin representation, which is
//! faithful, so no braid normal form is needed.

use serde::Serialize;

use crate::autos::Endomorphism;
use crate::error::{Error, Result};
use crate::families::{Family, FamilyKind, Generator, GroupWord, RepresentationTable, Syllable};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SDElement {
    braid: GroupWord,
    fiber: Word,
}

impl SDElement {
    pub fn identity(n: usize) -> Result<Self> {
        Ok(SDElement {
            braid: GroupWord::identity(Family::new(FamilyKind::Braid, n)?),
            fiber: Word::identity(n),
        })
    }

    pub fn new(braid: GroupWord, fiber: Word) -> Result<Self> {
        if braid.family().kind() != FamilyKind::Braid {
            return Err(Error::input("braid part must be a braid-family word"));
        }
        Error::check_rank(braid.family().n(), fiber.rank())?;
        if fiber.has_central() {
            return Err(Error::input("fiber must not contain y"));
        }
        Ok(SDElement { braid, fiber })
    }

    /// `(α_i, 1)`.
    pub fn alpha(n: usize, i: usize) -> Result<Self> {
        let family = Family::new(FamilyKind::Braid, n)?;
        Ok(SDElement {
            braid: GroupWord::power(family, Generator::Sigma(i), 1)?,
            fiber: Word::identity(n),
        })
    }

    /// `(1, η_k)`.
    pub fn eta(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::input(format!("η_{k} outside 1..={n}")));
        }
        Ok(SDElement {
            braid: GroupWord::identity(Family::new(FamilyKind::Braid, n)?),
            fiber: Word::generator(n, k),
        })
    }

    pub fn rank(&self) -> usize {
        self.fiber.rank()
    }

    pub fn braid(&self) -> &GroupWord {
        &self.braid
    }

    pub fn fiber(&self) -> &Word {
        &self.fiber
    }

    pub fn to_record(&self) -> SDRecord {
        SDRecord {
            braid: self.braid.to_string(),
            fiber: self.fiber.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SDRecord {
    pub braid: String,
    pub fiber: String,
}

/// `(α₁, η₁)·(α₂, η₂) = (α₁α₂, α₂(η₁)·η₂)`, where `α₂` acts by the Artin
/// representation. This follows from `α_i⁻¹ η_k α_i = ρ_A(σ_i)(η_k)`.
pub fn sd_multiply(a: &SDElement, b: &SDElement) -> Result<SDElement> {
    Error::check_rank(a.rank(), b.rank())?;
    let table = RepresentationTable::new(b.braid.family());
    let action = table.represent_forward(b.braid.syllables());
    Ok(multiply_with(a, b, &action))
}

fn multiply_with(a: &SDElement, b: &SDElement, b_action: &Endomorphism) -> SDElement {
    let braid = GroupWord::new_unchecked(
        a.braid.family(),
        a.braid
            .syllables()
            .iter()
            .chain(b.braid.syllables())
            .copied()
            .collect(),
    )
    .free_reduce();
    let mut fiber = b_action.apply_unchecked(&a.fiber);
    fiber.extend(&b.fiber);
    SDElement { braid, fiber }
}

/// `(α, η)⁻¹ = (α⁻¹, α⁻¹(η⁻¹))`.
pub fn sd_inverse(a: &SDElement) -> SDElement {
    let braid = a.braid.inverse();
    let action = RepresentationTable::new(braid.family()).represent_forward(braid.syllables());
    SDElement {
        fiber: action.apply_unchecked(&a.fiber.inverse()),
        braid,
    }
}

pub fn sd_power(a: &SDElement, k: i64) -> SDElement {
    let base = if k < 0 { sd_inverse(a) } else { a.clone() };
    let action = RepresentationTable::new(base.braid.family()).represent_forward(base.braid.syllables());
    let mut acc = SDElement {
        braid: GroupWord::identity(base.braid.family()),
        fiber: Word::identity(base.rank()),
    };
    for _ in 0..k.unsigned_abs() {
        acc = multiply_with(&acc, &base, &action);
    }
    acc
}

/// Equal braid actions and identical fibers.
pub fn sd_equal(a: &SDElement, b: &SDElement) -> Result<bool> {
    Error::check_rank(a.rank(), b.rank())?;
    if a.fiber != b.fiber {
        return Ok(false);
    }
    let table = RepresentationTable::new(a.braid.family());
    Ok(table.represent_forward(a.braid.syllables()) == table.represent_forward(b.braid.syllables()))
}

/// Images of the circular generators under `Θ`, with the braid actions needed
/// to multiply by them.
pub struct ThetaTable {
    n: usize,
    /// `(image, action)` for `σ_1..σ_n` then `ζ`, positive and inverse.
    positive: Vec<(SDElement, Endomorphism)>,
    negative: Vec<(SDElement, Endomorphism)>,
    braid_table: RepresentationTable,
}

impl ThetaTable {
    pub fn new(n: usize) -> Result<Self> {
        let braid_family = Family::new(FamilyKind::Braid, n)?;
        let braid_table = RepresentationTable::new(braid_family);
        let alpha_word = |syllables: Vec<Syllable>| SDElement {
            braid: GroupWord::new_unchecked(braid_family, syllables),
            fiber: Word::identity(n),
        };
        let eta1 = SDElement::eta(n, 1)?;
        let mut images = Vec::with_capacity(n + 1);
        for j in 1..n {
            images.push(alpha_word(vec![Syllable::pos(Generator::Sigma(j))]));
        }
        // Θ(σ_n) = η_1⁻¹ · α_1⁻¹ ⋯ α_{n-2}⁻¹ · α_{n-1} α_{n-2} ⋯ α_1 · η_1
        let mut middle: Vec<Syllable> = (1..n - 1).map(|k| Syllable::neg(Generator::Sigma(k))).collect();
        middle.extend((1..n).rev().map(|k| Syllable::pos(Generator::Sigma(k))));
        let sigma_n = sd_multiply(&sd_multiply(&sd_inverse(&eta1), &alpha_word(middle))?, &eta1)?;
        images.push(sigma_n);
        // Θ(ζ) = α_{n-1} ⋯ α_1 · η_1
        let rot = alpha_word((1..n).rev().map(|k| Syllable::pos(Generator::Sigma(k))).collect());
        images.push(sd_multiply(&rot, &eta1)?);

        let with_action = |e: SDElement| {
            let action = braid_table.represent_forward(e.braid.syllables());
            (e, action)
        };
        let negative = images.iter().map(|e| with_action(sd_inverse(e))).collect();
        let positive = images.into_iter().map(with_action).collect();
        Ok(ThetaTable {
            n,
            positive,
            negative,
            braid_table,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn slot(&self, g: Generator) -> usize {
        match g {
            Generator::Sigma(i) => i - 1,
            Generator::Zeta => self.n,
            other => panic!("{other} is not a circular generator"),
        }
    }

    pub fn generator_image(&self, s: Syllable) -> &SDElement {
        self.entry(s).0
    }

    fn entry(&self, s: Syllable) -> (&SDElement, &Endomorphism) {
        let slot = self.slot(s.generator);
        let (e, a) = if s.is_inverse() {
            &self.negative[slot]
        } else {
            &self.positive[slot]
        };
        (e, a)
    }

    pub fn theta(&self, w: &GroupWord) -> Result<SDElement> {
        if w.family().kind() != FamilyKind::Circular {
            return Err(Error::input("theta is defined on circular words"));
        }
        Error::check_rank(self.n, w.family().n())?;
        let mut acc = SDElement::identity(self.n)?;
        for &s in w.syllables() {
            let (e, action) = self.entry(s);
            acc = multiply_with(&acc, e, action);
        }
        Ok(acc)
    }

    pub fn equal(&self, a: &SDElement, b: &SDElement) -> bool {
        a.fiber == b.fiber
            && self.braid_table.represent_forward(a.braid.syllables())
                == self.braid_table.represent_forward(b.braid.syllables())
    }
}

/// `Θ(w)` for a circular word.
pub fn theta(w: &GroupWord) -> Result<SDElement> {
    ThetaTable::new(w.family().n())?.theta(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::represent;

    fn circ(text: &str, n: usize) -> GroupWord {
        GroupWord::parse(text, Family::new(FamilyKind::Circular, n).unwrap()).unwrap()
    }

    fn braid(text: &str, n: usize) -> GroupWord {
        GroupWord::parse(text, Family::new(FamilyKind::Braid, n).unwrap()).unwrap()
    }

    fn word(text: &str, n: usize) -> Word {
        Word::parse(text, n).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let a1 = SDElement::alpha(3, 1).unwrap();
        let e1 = SDElement::eta(3, 1).unwrap();
        let p = sd_multiply(&a1, &e1).unwrap();
        assert_eq!(p.braid().to_string(), "s1");
        assert_eq!(p.fiber(), &word("x1", 3));
        // η_1 α_1 = α_1 (α_1⁻¹ η_1 α_1) = α_1 η_1 η_2 η_1⁻¹
        let q = sd_multiply(&e1, &a1).unwrap();
        assert_eq!(q.braid().to_string(), "s1");
        assert_eq!(q.fiber(), &word("x1 x2 x1^-1", 3));
        assert!(sd_multiply(&a1, &SDElement::eta(2, 1).unwrap()).is_err());
    }

    #[test]
    fn inverse_examples() {
        let id = SDElement::identity(3).unwrap();
        let e1 = SDElement::eta(3, 1).unwrap();
        assert_eq!(sd_inverse(&e1).fiber(), &word("x1^-1", 3));
        let a1 = SDElement::alpha(3, 1).unwrap();
        let inv = sd_inverse(&a1);
        assert_eq!(inv.braid().to_string(), "s1^-1");
        assert!(inv.fiber().is_identity());
        let a = SDElement::new(braid("s1", 3), word("x2", 3)).unwrap();
        let inv = sd_inverse(&a);
        // α⁻¹ acting on x2⁻¹: σ_1⁻¹ sends x2 to x2⁻¹ x1 x2
        assert_eq!(inv.fiber(), &word("x2^-1 x1^-1 x2", 3));
        assert!(sd_equal(&sd_multiply(&a, &inv).unwrap(), &id).unwrap());
        assert!(sd_equal(&sd_multiply(&inv, &a).unwrap(), &id).unwrap());
    }

    #[test]
    fn theta_examples() {
        let t = theta(&circ("s1", 3)).unwrap();
        assert_eq!(t.braid().to_string(), "s1");
        assert!(t.fiber().is_identity());
        let lhs = theta(&circ("z^-1 s1 z", 3)).unwrap();
        let rhs = theta(&circ("s2", 3)).unwrap();
        assert!(sd_equal(&lhs, &rhs).unwrap());
        assert!(sd_equal(&theta(&circ("1", 3)).unwrap(), &SDElement::identity(3).unwrap()).unwrap());
        let z = theta(&circ("z", 3)).unwrap();
        assert_eq!(z.braid().to_string(), "s2 s1");
        assert_eq!(z.fiber(), &word("x1", 3));
        assert!(theta(&braid("s1", 3)).is_err());
    }

    #[test]
    fn sd_equal_examples() {
        let zn = theta(&circ("z^3", 3)).unwrap();
        assert!(!sd_equal(&zn, &SDElement::identity(3).unwrap()).unwrap());
        // although ζ^3 acts trivially on F_3
        assert!(represent(&circ("z^3", 3)).forward().is_identity());
        let a = theta(&circ("s1 s2 s1", 3)).unwrap();
        let b = theta(&circ("s2 s1 s2", 3)).unwrap();
        assert!(sd_equal(&a, &b).unwrap());
        let id = SDElement::identity(3).unwrap();
        assert!(sd_equal(&id, &id).unwrap());
    }

    #[test]
    fn theta_respects_circular_relations() {
        for n in 2..=6 {
            let table = ThetaTable::new(n).unwrap();
            for i in 1..=n {
                let j = i % n + 1;
                let lhs = table.theta(&circ(&format!("z^-1 s{i} z"), n)).unwrap();
                let rhs = table.theta(&circ(&format!("s{j}"), n)).unwrap();
                assert!(table.equal(&lhs, &rhs), "n={n} i={i}");
            }
        }
    }
}
