//! Endomorphisms and certified automorphisms of `F_n`.
//!
//! Composition is right-to-left: `compose(φ, ψ)` applies `ψ` first.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// A map `F_n → F_n` given by the images of `x_1..x_n`.
///
/// `y_fixed` marks maps read on `F_n × Z` with `y ↦ y`. It does not take part in
/// equality: two endomorphisms are equal when their generator images agree.
#[derive(Clone, Debug, Eq)]
pub struct Endomorphism {
    rank: usize,
    images: Vec<Word>,
    y_fixed: bool,
}

impl PartialEq for Endomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Endomorphism {
    pub fn identity(rank: usize) -> Self {
        Endomorphism {
            rank,
            images: (1..=rank).map(|k| Word::generator(rank, k)).collect(),
            y_fixed: false,
        }
    }

    /// `images[i]` is the image of `x_{i+1}`.
    pub fn new(images: Vec<Word>, y_fixed: bool) -> Result<Self> {
        let rank = images.len();
        if rank == 0 {
            return Err(Error::input("an endomorphism needs at least one generator"));
        }
        for (i, w) in images.iter().enumerate() {
            Error::check_rank(rank, w.rank())?;
            if w.has_central() {
                return Err(Error::input(format!("image of x{} contains y", i + 1)));
            }
        }
        Ok(Endomorphism {
            rank,
            images,
            y_fixed,
        })
    }

    /// Builds from a sparse list of moved generators; all others are fixed.
    pub(crate) fn from_moves(rank: usize, moves: &[(usize, Word)], y_fixed: bool) -> Self {
        let mut e = Endomorphism::identity(rank);
        for (k, w) in moves {
            e.images[k - 1] = w.clone();
        }
        e.y_fixed = y_fixed;
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `x_k` (1-based).
    pub fn image(&self, k: usize) -> &Word {
        &self.images[k - 1]
    }

    pub fn y_fixed(&self) -> bool {
        self.y_fixed
    }

    pub fn with_y_fixed(mut self, y_fixed: bool) -> Self {
        self.y_fixed = y_fixed;
        self
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| matches!(w.letters(), [l] if l.index() == i + 1 && l.is_positive()))
    }

    /// Sum of the reduced lengths of all generator images.
    pub fn total_length(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        Error::check_rank(self.rank, w.rank())?;
        if w.has_central() && !self.y_fixed {
            return Err(Error::input("word contains y but the map is not defined on y"));
        }
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &Word) -> Word {
        let mut out = Word::identity(self.rank);
        for &l in w.letters() {
            let image = &self.images[l.index() - 1];
            if l.is_positive() {
                out.extend(image);
            } else {
                out.extend_inverse(image);
            }
        }
        if w.y_power() != 0 {
            out.extend(&Word::from_letters_unchecked(
                self.rank,
                std::iter::repeat_n(
                    if w.y_power() > 0 {
                        Letter::y()
                    } else {
                        Letter::y().inverse()
                    },
                    w.y_power().unsigned_abs() as usize,
                ),
            ));
        }
        out
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        Error::check_rank(self.rank, other.rank)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism {
            rank: self.rank,
            images: other.images.iter().map(|w| self.apply_unchecked(w)).collect(),
            y_fixed: self.y_fixed && other.y_fixed,
        }
    }

    /// Replaces `self` by `self ∘ other`, recomputing only the images that
    /// `other` moves. Cheap when `other` is a generator table.
    pub(crate) fn precompose_in_place(&mut self, other: &Endomorphism) {
        let moved: Vec<(usize, Word)> = other
            .images
            .iter()
            .enumerate()
            .filter(|(i, w)| !matches!(w.letters(), [l] if l.index() == i + 1 && l.is_positive()))
            .map(|(i, w)| (i, self.apply_unchecked(w)))
            .collect();
        for (i, w) in moved {
            self.images[i] = w;
        }
        self.y_fixed = self.y_fixed && other.y_fixed;
    }

    /// Writes every image as `w_i · x_{π(i)} · w_i⁻¹`, if possible with a
    /// bijective `π` and positive generators.
    pub fn perm_conj_decompose(&self) -> Option<PermConjData> {
        let mut permutation = Vec::with_capacity(self.rank);
        let mut conjugators = Vec::with_capacity(self.rank);
        let mut seen = vec![false; self.rank + 1];
        for image in &self.images {
            let (k, u) = image.generator_conjugate_decompose()?;
            if std::mem::replace(&mut seen[k], true) {
                return None;
            }
            permutation.push(k);
            conjugators.push(u);
        }
        Some(PermConjData {
            permutation,
            conjugators,
        })
    }

    /// Algebraic length of `w⁻¹` mod `n`, where `self(Δ) = w Δ w⁻¹`.
    pub fn delta_conjugator_residue(&self) -> Option<usize> {
        let image = self.apply_unchecked(&Word::delta(self.rank));
        let u = image.delta_conjugator()?;
        Some((-u.algebraic_length()).rem_euclid(self.rank as i64) as usize)
    }

    pub fn to_record(&self) -> EndomorphismRecord {
        EndomorphismRecord {
            rank: self.rank,
            images: self
                .images
                .iter()
                .enumerate()
                .map(|(i, w)| (i + 1, w.to_string()))
                .collect(),
            y_fixed: self.y_fixed,
        }
    }

    pub fn from_record(record: &EndomorphismRecord) -> Result<Self> {
        let rank = record.rank;
        if rank == 0 {
            return Err(Error::input("rank must be at least 1"));
        }
        let mut images = vec![None; rank];
        for (k, text) in &record.images {
            if *k == 0 || *k > rank {
                return Err(Error::input(format!("image for x{k} outside rank {rank}")));
            }
            images[k - 1] = Some(Word::parse(text, rank)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or_else(|| Error::input(format!("missing image for x{}", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Endomorphism::new(images, record.y_fixed)
    }
}

/// Serialized endomorphism: `{rank, images: {"x1": "...", ...}, y_fixed}` with
/// image keys ordered by generator index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndomorphismRecord {
    pub rank: usize,
    pub images: BTreeMap<usize, String>,
    pub y_fixed: bool,
}

impl Serialize for EndomorphismRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeStruct};

        struct Images<'a>(&'a BTreeMap<usize, String>);
        impl Serialize for Images<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(&format!("x{k}"), v)?;
                }
                m.end()
            }
        }

        let mut st = s.serialize_struct("Endomorphism", 3)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("images", &Images(&self.images))?;
        st.serialize_field("y_fixed", &self.y_fixed)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for EndomorphismRecord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;

        #[derive(Deserialize)]
        struct Raw {
            rank: usize,
            images: BTreeMap<String, String>,
            #[serde(default)]
            y_fixed: bool,
        }
        let raw = Raw::deserialize(d)?;
        let mut images = BTreeMap::new();
        for (key, value) in raw.images {
            let k = key
                .strip_prefix('x')
                .and_then(|digits| digits.parse::<usize>().ok())
                .ok_or_else(|| D::Error::custom(format!("bad image key `{key}`")))?;
            images.insert(k, value);
        }
        Ok(EndomorphismRecord {
            rank: raw.rank,
            images,
            y_fixed: raw.y_fixed,
        })
    }
}

/// An endomorphism paired with a verified two-sided inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    forward: Endomorphism,
    backward: Endomorphism,
}

impl Automorphism {
    pub fn identity(rank: usize) -> Self {
        Automorphism {
            forward: Endomorphism::identity(rank),
            backward: Endomorphism::identity(rank),
        }
    }

    /// Accepts the pair only if both composites are the identity on every
    /// basis generator.
    pub fn certify(forward: Endomorphism, backward: Endomorphism) -> Result<Self> {
        Error::check_rank(forward.rank, backward.rank)?;
        if !forward.compose_unchecked(&backward).is_identity() {
            return Err(Error::Certification(
                "forward ∘ backward is not the identity".into(),
            ));
        }
        if !backward.compose_unchecked(&forward).is_identity() {
            return Err(Error::Certification(
                "backward ∘ forward is not the identity".into(),
            ));
        }
        Ok(Automorphism { forward, backward })
    }

    /// For pairs whose inverse property holds by construction.
    pub(crate) fn from_parts_unchecked(forward: Endomorphism, backward: Endomorphism) -> Self {
        debug_assert!(forward.compose_unchecked(&backward).is_identity());
        Automorphism { forward, backward }
    }

    /// The inner automorphism `g_w : x_i ↦ w x_i w⁻¹`.
    pub fn inner(w: &Word) -> Result<Self> {
        if w.has_central() {
            return Err(Error::input("conjugating word must not contain y"));
        }
        let rank = w.rank();
        let conj = |u: &Word| -> Endomorphism {
            Endomorphism {
                rank,
                images: (1..=rank)
                    .map(|k| u.conjugate(&Word::generator(rank, k)))
                    .collect(),
                y_fixed: false,
            }
        };
        Ok(Automorphism {
            forward: conj(w),
            backward: conj(&w.inverse()),
        })
    }

    pub fn forward(&self) -> &Endomorphism {
        &self.forward
    }

    pub fn backward(&self) -> &Endomorphism {
        &self.backward
    }

    pub fn rank(&self) -> usize {
        self.forward.rank
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.forward.apply(w)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        Error::check_rank(self.rank(), other.rank())?;
        Ok(Automorphism {
            forward: self.forward.compose_unchecked(&other.forward),
            backward: other.backward.compose_unchecked(&self.backward),
        })
    }

    pub fn with_y_fixed(self, y_fixed: bool) -> Self {
        Automorphism {
            forward: self.forward.with_y_fixed(y_fixed),
            backward: self.backward.with_y_fixed(y_fixed),
        }
    }

    pub fn to_record(&self) -> AutomorphismRecord {
        AutomorphismRecord {
            forward: self.forward.to_record(),
            backward: self.backward.to_record(),
        }
    }

    pub fn from_record(record: &AutomorphismRecord) -> Result<Self> {
        Automorphism::certify(
            Endomorphism::from_record(&record.forward)?,
            Endomorphism::from_record(&record.backward)?,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismRecord {
    pub forward: EndomorphismRecord,
    pub backward: EndomorphismRecord,
}

/// `φ(x_i) = w_i · x_{π(i)} · w_i⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermConjData {
    /// `permutation[i - 1] = π(i)`, 1-based.
    pub permutation: Vec<usize>,
    #[serde(serialize_with = "serialize_words")]
    pub conjugators: Vec<Word>,
}

fn serialize_words<S: serde::Serializer>(words: &[Word], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(words.iter().map(|w| w.to_string()))
}

impl PermConjData {
    pub fn rank(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_pure(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// The endomorphism `x_i ↦ w_i x_{π(i)} w_i⁻¹`.
    pub fn reconstruct(&self) -> Endomorphism {
        let rank = self.rank();
        Endomorphism {
            rank,
            images: self
                .permutation
                .iter()
                .zip(&self.conjugators)
                .map(|(&p, w)| w.conjugate(&Word::generator(rank, p)))
                .collect(),
            y_fixed: false,
        }
    }
}
