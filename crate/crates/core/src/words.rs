//! Free-group words over `x_1..x_n`, optionally extended by a central letter `y`
//! (the group `F_n × Z`).
//!
//! A [`Word`] is always freely reduced. The `y` letters commute with everything,
//! so they are collected into a single trailing power and equality of words is
//! plain structural equality.

use std::fmt;

use crate::error::{Error, Result};

/// A basis letter `x_index^sign`; index 0 is the central letter `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: u32,
    positive: bool,
}

impl Letter {
    pub fn new(index: usize, sign: i32) -> Result<Self> {
        match sign {
            1 | -1 => Ok(Letter {
                index: index as u32,
                positive: sign == 1,
            }),
            _ => Err(Error::input(format!("letter sign must be +1 or -1, got {sign}"))),
        }
    }

    pub const fn x(index: usize) -> Self {
        Letter {
            index: index as u32,
            positive: true,
        }
    }

    pub const fn x_inv(index: usize) -> Self {
        Letter {
            index: index as u32,
            positive: false,
        }
    }

    pub const fn y() -> Self {
        Letter::x(0)
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn sign(self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    pub fn is_central(self) -> bool {
        self.index == 0
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            positive: !self.positive,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.positive != other.positive
    }
}

/// A freely reduced word of `F_n` (or `F_n × Z` when `y_power != 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
    y_power: i64,
}

/// Appends `letter` to an already reduced stack, cancelling if possible.
#[inline]
fn push_reduced(stack: &mut Vec<Letter>, letter: Letter) {
    match stack.last() {
        Some(&last) if last.cancels(letter) => {
            stack.pop();
        }
        _ => stack.push(letter),
    }
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
            y_power: 0,
        }
    }

    /// The basis generator `x_k`.
    pub fn generator(rank: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= rank, "generator x{k} outside rank {rank}");
        Word {
            rank,
            letters: vec![Letter::x(k)],
            y_power: 0,
        }
    }

    /// `Δ = x_1 x_2 ⋯ x_n`.
    pub fn delta(rank: usize) -> Self {
        Word {
            rank,
            letters: (1..=rank).map(Letter::x).collect(),
            y_power: 0,
        }
    }

    /// Freely reduces `raw`; `y` letters are gathered into the trailing power.
    pub fn reduce(raw: &[Letter], rank: usize) -> Result<Self> {
        let mut letters = Vec::with_capacity(raw.len());
        let mut y_power = 0i64;
        for &letter in raw {
            if letter.index() > rank {
                return Err(Error::input(format!(
                    "letter x{} outside rank {rank}",
                    letter.index()
                )));
            }
            if letter.is_central() {
                y_power += i64::from(letter.sign());
            } else {
                push_reduced(&mut letters, letter);
            }
        }
        Ok(Word {
            rank,
            letters,
            y_power,
        })
    }

    /// Builds a word from letters already known to be in range.
    pub(crate) fn from_letters_unchecked(rank: usize, raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::identity(rank);
        for letter in raw {
            w.push(letter);
        }
        w
    }

    pub(crate) fn push(&mut self, letter: Letter) {
        debug_assert!(letter.index() <= self.rank);
        if letter.is_central() {
            self.y_power += i64::from(letter.sign());
        } else {
            push_reduced(&mut self.letters, letter);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The `x` letters in order (the `y` power is reported separately).
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn y_power(&self) -> i64 {
        self.y_power
    }

    pub fn has_central(&self) -> bool {
        self.y_power != 0
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty() && self.y_power == 0
    }

    /// Number of `x` letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// The same element in the free group of another rank. Fails if a letter
    /// would fall out of range.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        if self.letters.iter().any(|l| l.index() > rank) {
            return Err(Error::input(format!("word {self} does not fit in rank {rank}")));
        }
        Ok(Word {
            rank,
            letters: self.letters.clone(),
            y_power: self.y_power,
        })
    }

    pub fn product(&self, other: &Word) -> Result<Word> {
        Error::check_rank(self.rank, other.rank)?;
        Ok(self.times(other))
    }

    /// Product of two words of equal rank.
    pub(crate) fn times(&self, other: &Word) -> Word {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub(crate) fn extend(&mut self, other: &Word) {
        for &l in &other.letters {
            push_reduced(&mut self.letters, l);
        }
        self.y_power += other.y_power;
    }

    pub(crate) fn extend_inverse(&mut self, other: &Word) {
        for &l in other.letters.iter().rev() {
            push_reduced(&mut self.letters, l.inverse());
        }
        self.y_power -= other.y_power;
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            y_power: -self.y_power,
        }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            out.extend(&base);
        }
        out
    }

    /// `self · w · self⁻¹`.
    pub fn conjugate(&self, w: &Word) -> Word {
        let mut out = self.times(w);
        out.extend_inverse(self);
        out
    }

    /// Exponent sum over the `x` letters; `y` letters do not count.
    pub fn algebraic_length(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.sign())).sum()
    }

    /// Splits `self = prefix · core · prefix⁻¹` with `core` cyclically reduced and
    /// `prefix` maximal. The `y` power stays with the core.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let letters = &self.letters;
        let mut k = 0;
        while 2 * (k + 1) <= letters.len() && letters[k].cancels(letters[letters.len() - 1 - k]) {
            k += 1;
        }
        let prefix = Word {
            rank: self.rank,
            letters: letters[..k].to_vec(),
            y_power: 0,
        };
        let core = Word {
            rank: self.rank,
            letters: letters[k..letters.len() - k].to_vec(),
            y_power: self.y_power,
        };
        (prefix, core)
    }

    /// Writes `self = u · x_k · u⁻¹` with `x_k` a positive generator, using the
    /// cyclic-reduction prefix as `u`. `None` when the cyclic core is anything
    /// else (including a negative letter `x_k⁻¹`).
    pub fn generator_conjugate_decompose(&self) -> Option<(usize, Word)> {
        let (prefix, core) = self.cyclic_reduce();
        match core.letters.as_slice() {
            [l] if l.is_positive() && core.y_power == 0 => Some((l.index(), prefix)),
            _ => None,
        }
    }

    /// Canonical `u` with `self = u · Δ · u⁻¹` for `Δ = x_1⋯x_n`, or `None` if
    /// `self` is not conjugate to `Δ`. Conjugators are unique up to a right
    /// factor `Δ^m`; the one returned comes from the cyclic-reduction prefix.
    pub fn delta_conjugator(&self) -> Option<Word> {
        let n = self.rank;
        if self.y_power != 0 || n == 0 {
            return None;
        }
        let (prefix, core) = self.cyclic_reduce();
        let c = core.letters();
        if c.len() != n || !c[0].is_positive() {
            return None;
        }
        let start = c[0].index();
        let is_rotation = c
            .iter()
            .enumerate()
            .all(|(m, l)| l.is_positive() && l.index() == (start - 1 + m) % n + 1);
        if !is_rotation {
            return None;
        }
        let mut u = prefix;
        for k in (1..start).rev() {
            u.push(Letter::x_inv(k));
        }
        Some(u)
    }

    /// Parses the text grammar `x1 x2^-1 y^3`; `1` (or empty text) is the identity.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut raw = Vec::new();
        for (pos, token) in text.split_whitespace().enumerate() {
            let position = pos + 1;
            if token == "1" {
                continue;
            }
            let (base, exp) = split_exponent(token, position)?;
            let index = if base == "y" {
                0
            } else if let Some(digits) = base.strip_prefix('x') {
                let k: usize = digits
                    .parse()
                    .map_err(|_| Error::parse(position, format!("bad generator `{token}`")))?;
                if k == 0 || k > rank {
                    return Err(Error::parse(
                        position,
                        format!("generator x{k} outside 1..={rank}"),
                    ));
                }
                k
            } else {
                return Err(Error::parse(position, format!("unknown token `{token}`")));
            };
            let letter = if exp > 0 {
                Letter::x(index)
            } else {
                Letter::x_inv(index)
            };
            raw.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Word::reduce(&raw, rank)
    }
}

/// Splits `base^e`; a missing exponent means `1`. Zero exponents are rejected.
pub(crate) fn split_exponent(token: &str, position: usize) -> Result<(&str, i64)> {
    match token.split_once('^') {
        None => Ok((token, 1)),
        Some((base, e)) => {
            let e: i64 = e
                .parse()
                .map_err(|_| Error::parse(position, format!("bad exponent in `{token}`")))?;
            if e == 0 {
                return Err(Error::parse(position, format!("zero exponent in `{token}`")));
            }
            Ok((base, e))
        }
    }
}

/// Writes `name^e` runs, merging equal adjacent symbols.
pub(crate) fn write_runs<T: PartialEq + Copy>(
    f: &mut fmt::Formatter<'_>,
    items: impl IntoIterator<Item = (T, i64)>,
    name: impl Fn(T) -> String,
    first: &mut bool,
) -> fmt::Result {
    let mut run: Option<(T, i64)> = None;
    let flush = |f: &mut fmt::Formatter<'_>, sym: T, e: i64, first: &mut bool| -> fmt::Result {
        if !*first {
            f.write_str(" ")?;
        }
        *first = false;
        if e == 1 {
            write!(f, "{}", name(sym))
        } else {
            write!(f, "{}^{}", name(sym), e)
        }
    };
    for (sym, sign) in items {
        run = match run {
            Some((s, e)) if s == sym && e.signum() == sign => Some((s, e + sign)),
            Some((s, e)) => {
                flush(f, s, e, first)?;
                Some((sym, sign))
            }
            None => Some((sym, sign)),
        };
    }
    if let Some((s, e)) = run {
        flush(f, s, e, first)?;
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let mut first = true;
        write_runs(
            f,
            self.letters.iter().map(|l| (l.index(), i64::from(l.sign()))),
            |k| format!("x{k}"),
            &mut first,
        )?;
        if self.y_power != 0 {
            if !first {
                f.write_str(" ")?;
            }
            if self.y_power == 1 {
                f.write_str("y")?;
            } else {
                write!(f, "y^{}", self.y_power)?;
            }
        }
        Ok(())
    }
}
