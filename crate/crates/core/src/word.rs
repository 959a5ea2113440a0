//! Reduced words, cyclic words and automorphisms of a finitely generated free group.
//!
//! Everything here works on [`Letter`]s, which pack a generator index and an
//! exponent sign into one `i32` (`+(i+1)` for `x_i`, `-(i+1)` for `x_i^-1`).
//! All words handed out by this module are freely reduced.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on the length of any intermediate word.
pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator index {index} out of range for rank {rank}")]
    InvalidGenerator { index: usize, rank: usize },
    #[error("zero is not a valid exponent sign")]
    ZeroSign,
    #[error("word length {length} exceeded the budget of {limit} letters")]
    Budget { length: usize, limit: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("alphabet needs at least one generator")]
    EmptyAlphabet,
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
}

/// Hard limit on intermediate word length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget(pub usize);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    fn check(self, length: usize) -> Result<(), WordError> {
        if length > self.0 {
            Err(WordError::Budget {
                length,
                limit: self.0,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: usize, positive: bool) -> Letter {
        let v = generator as i32 + 1;
        Letter(if positive { v } else { -v })
    }

    pub fn generator(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn sign(self) -> i64 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn raw(self) -> i32 {
        self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Generator labels of a free group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Alphabet, WordError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(WordError::DuplicateName(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Renders a word as `x1 x2^-1 ...`, or `1` for the identity.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|l| {
                let name = &self.names[l.generator()];
                if l.is_positive() {
                    name.clone()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A freely reduced word.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

/// Appends `l` to a reduced stack, cancelling against the top.
#[inline]
fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    if stack.last() == Some(&l.inverse()) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    /// Freely reduces a raw sequence of `(generator, sign)` pairs.
    pub fn reduce(raw: &[(usize, i8)], rank: usize) -> Result<Word, WordError> {
        let mut stack = Vec::with_capacity(raw.len());
        for &(g, s) in raw {
            if g >= rank {
                return Err(WordError::InvalidGenerator { index: g, rank });
            }
            if s == 0 {
                return Err(WordError::ZeroSign);
            }
            push_reduced(&mut stack, Letter::new(g, s > 0));
        }
        Ok(Word { letters: stack })
    }

    /// Reduces a sequence in the signed-integer encoding (`+(i+1)` / `-(i+1)`).
    pub fn from_signed(raw: &[i32]) -> Word {
        let mut stack = Vec::with_capacity(raw.len());
        for &v in raw {
            assert!(v != 0, "zero letter");
            push_reduced(&mut stack, Letter(v));
        }
        Word { letters: stack }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut stack = Vec::new();
        for l in letters {
            push_reduced(&mut stack, l);
        }
        Word { letters: stack }
    }

    pub fn generator(g: usize) -> Word {
        Word {
            letters: vec![Letter::new(g, true)],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator()).max()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut stack = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut stack, l);
        }
        Word { letters: stack }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `u w u^-1`
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.mul(self).mul(&u.inverse())
    }

    /// Exponent sums per generator.
    pub fn abelianize(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for l in &self.letters {
            v[l.generator()] += l.sign();
        }
        v
    }

    /// Splits off the longest `u` with `self = u c u^-1`, returning `(u, c)`
    /// where `c` is cyclically reduced.
    pub fn cyclic_core(&self) -> (Word, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        (
            Word {
                letters: self.letters[..k].to_vec(),
            },
            Word {
                letters: self.letters[k..n - k].to_vec(),
            },
        )
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) => self.letters.len() == 1 || *a != b.inverse(),
            _ => true,
        }
    }
}

/// Index of the lexicographically least rotation (two-pointer minimum
/// expression search, linear time).
fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j).min(n.saturating_sub(1))
}

fn rotated(s: &[Letter], k: usize) -> Vec<Letter> {
    s[k..].iter().chain(s[..k].iter()).copied().collect()
}

/// A conjugacy class of words, further identified with its inverse.
///
/// The stored representative is cyclically reduced and lexicographically
/// least among all rotations of the word and of its inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.letters)
    }
}

impl CyclicWord {
    pub fn canonical(w: &Word) -> CyclicWord {
        let (_, core) = w.cyclic_core();
        let fwd = core.letters;
        if fwd.is_empty() {
            return CyclicWord { letters: fwd };
        }
        let inv: Vec<Letter> = fwd.iter().rev().map(|l| l.inverse()).collect();
        let a = rotated(&fwd, least_rotation(&fwd));
        let b = rotated(&inv, least_rotation(&inv));
        let letters = match a.cmp(&b) {
            Ordering::Greater => b,
            _ => a,
        };
        CyclicWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn as_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
        }
    }
}

/// An endomorphism of the free group given by generator images. Every
/// instance built by this crate is an automorphism.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeAutomorphism {
    images: Vec<Word>,
}

impl fmt::Debug for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images.iter()).finish()
    }
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> FreeAutomorphism {
        FreeAutomorphism {
            images: (0..rank).map(Word::generator).collect(),
        }
    }

    pub fn from_images(images: Vec<Word>) -> Result<FreeAutomorphism, WordError> {
        let rank = images.len();
        for w in &images {
            if let Some(g) = w.max_generator() {
                if g >= rank {
                    return Err(WordError::InvalidGenerator { index: g, rank });
                }
            }
        }
        Ok(FreeAutomorphism { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &Word {
        &self.images[g]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(g, w)| w.letters.len() == 1 && w.letters[0] == Letter::new(g, true))
    }

    /// Substitutes generator images into `w`.
    pub fn apply(&self, w: &Word, budget: Budget) -> Result<Word, WordError> {
        let rank = self.rank();
        let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
        for &l in &w.letters {
            let g = l.generator();
            if g >= rank {
                return Err(WordError::InvalidGenerator { index: g, rank });
            }
            let img = &self.images[g].letters;
            if l.is_positive() {
                for &x in img {
                    push_reduced(&mut stack, x);
                }
            } else {
                for &x in img.iter().rev() {
                    push_reduced(&mut stack, x.inverse());
                }
            }
            budget.check(stack.len())?;
        }
        Ok(Word { letters: stack })
    }

    /// `f ∘ g`: `g` is applied first.
    pub fn compose(
        f: &FreeAutomorphism,
        g: &FreeAutomorphism,
        budget: Budget,
    ) -> Result<FreeAutomorphism, WordError> {
        if f.rank() != g.rank() {
            return Err(WordError::RankMismatch {
                left: f.rank(),
                right: g.rank(),
            });
        }
        let images = g
            .images
            .iter()
            .map(|w| f.apply(w, budget))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FreeAutomorphism { images })
    }

    /// Total letter count over all images.
    pub fn size(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }

    /// Induced map on the abelianization, as a column-major integer matrix
    /// (`m[i][j]` is the coefficient of generator `i` in the image of `j`).
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let rank = self.rank();
        let cols: Vec<Vec<i64>> = self.images.iter().map(|w| w.abelianize(rank)).collect();
        (0..rank)
            .map(|i| (0..rank).map(|j| cols[j][i]).collect())
            .collect()
    }
}
