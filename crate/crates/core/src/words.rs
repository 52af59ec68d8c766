//! Words over an ordered alphabet and the Higman ordering of `Λ*`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poset::{Alphabet, Letter};

/// A finite sequence of letters; the empty word is `□`.
///
/// Words order canonically by length first and then lexicographically by
/// letter index. This is the enumeration order used everywhere a set of
/// words is printed or compared.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letter(letter: Letter) -> Word {
        Word(vec![letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Juxtaposition `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn concat_all<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(
            parts
                .into_iter()
                .flat_map(|w| w.0.iter().copied())
                .collect(),
        )
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// Subword `self[from..to]`.
    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// The word with the letter at `position` replaced.
    pub fn with_letter(&self, position: usize, letter: Letter) -> Word {
        let mut letters = self.0.clone();
        letters[position] = letter;
        Word(letters)
    }

    /// The word with the letter at `position` removed.
    pub fn without(&self, position: usize) -> Word {
        let mut letters = self.0.clone();
        letters.remove(position);
        Word(letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Alphabet {
    /// Parses a word literal: letter names concatenated when every name is a
    /// single character, else joined by `.`. The empty string is `□`.
    pub fn parse_word(&self, literal: &str) -> Result<Word> {
        if literal.is_empty() {
            return Ok(Word::empty());
        }
        if self.single_char() {
            let mut buf = [0u8; 4];
            literal
                .chars()
                .map(|c| self.letter(c.encode_utf8(&mut buf)))
                .collect()
        } else {
            literal.split('.').map(|name| self.letter(name)).collect()
        }
    }

    pub fn parse_words<S: AsRef<str>>(&self, literals: &[S]) -> Result<Vec<Word>> {
        literals
            .iter()
            .map(|s| self.parse_word(s.as_ref()))
            .collect()
    }

    /// Canonical literal for `word`; inverse of [`Alphabet::parse_word`].
    pub fn format_word(&self, word: &Word) -> String {
        let names = word.letters().iter().map(|&l| self.name(l));
        if self.single_char() {
            names.collect()
        } else {
            names.collect::<Vec<_>>().join(".")
        }
    }

    /// Builds a word from letter names.
    pub fn word<S: AsRef<str>>(&self, names: &[S]) -> Result<Word> {
        names.iter().map(|n| self.letter(n.as_ref())).collect()
    }

    /// Rejects words carrying letters outside this alphabet.
    pub fn check_word(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(Error::AlphabetMismatch {
                index: l.index(),
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn check_words<'a>(&self, words: impl IntoIterator<Item = &'a Word>) -> Result<()> {
        words.into_iter().try_for_each(|w| self.check_word(w))
    }
}

/// Higman order: `w ≤ x` iff some subsequence of `x` dominates `w`
/// letter-wise.
///
/// Leftmost-greedy matching: each letter of `w` is matched at the first
/// remaining position of `x` carrying a letter above it. Matching a letter
/// as early as possible never removes options for the rest of `w`, since
/// the condition on a position depends on that position alone.
pub fn higman_leq(alphabet: &Alphabet, w: &Word, x: &Word) -> bool {
    if w.len() > x.len() {
        return false;
    }
    let mut rest = x.letters().iter();
    'outer: for &a in w.letters() {
        for &b in rest.by_ref() {
            if alphabet.leq(a, b) {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn strictly_less(alphabet: &Alphabet, w: &Word, x: &Word) -> bool {
    w != x && higman_leq(alphabet, w, x)
}

/// Every word of length at most `max_len`, each exactly once, in canonical
/// (length, then lexicographic) order.
pub fn enumerate_words(alphabet: &Alphabet, max_len: usize) -> impl Iterator<Item = Word> + '_ {
    let k = alphabet.len();
    (0..=max_len).flat_map(move |len| {
        let total = k.checked_pow(len as u32).expect("enumeration too large");
        (0..total).map(move |mut code| {
            let mut letters = vec![Letter::new(0); len];
            for slot in letters.iter_mut().rev() {
                *slot = Letter::new(code % k);
                code /= k;
            }
            Word::from_letters(letters)
        })
    })
}

/// Words of length exactly `len` in canonical order.
pub fn words_of_length(alphabet: &Alphabet, len: usize) -> impl Iterator<Item = Word> + '_ {
    enumerate_words(alphabet, len).filter(move |w| w.len() == len)
}
