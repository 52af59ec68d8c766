//! Finite ordered alphabets.
//!
//! An [`Alphabet`] is built from letter names and cover pairs `a < b`; the
//! order is stored as its full reflexive-transitive closure so that every
//! order query is a table lookup. Meets and maximal common lower bounds are
//! precomputed because the rule engine and the lower-cone computation query
//! them in inner loops.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of an [`Alphabet`], identified by its position in the input list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u16);

impl Letter {
    pub(crate) fn new(index: usize) -> Letter {
        Letter(u16::try_from(index).expect("alphabet too large"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite partially ordered set of letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    by_name: HashMap<String, Letter>,
    leq: Vec<bool>,
    meets: Vec<Option<Letter>>,
    joins: Vec<Option<Letter>>,
    max_lower: Vec<Vec<Letter>>,
    single_char: bool,
}

/// Wire form of an alphabet: `{"letters": [...], "covers": [[a, b], ...]}`
/// where `[a, b]` means `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphabetDoc {
    pub letters: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

impl Alphabet {
    /// Builds an alphabet whose order is the reflexive-transitive closure of
    /// `covers`. Any consistent list of strict pairs is accepted.
    pub fn new<S: AsRef<str>>(letters: &[S], covers: &[(S, S)]) -> Result<Alphabet> {
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut names = Vec::with_capacity(letters.len());
        let mut by_name = HashMap::new();
        for (i, name) in letters.iter().enumerate() {
            let name = name.as_ref().to_string();
            if by_name.insert(name.clone(), Letter::new(i)).is_some() {
                return Err(Error::DuplicateLetter(name));
            }
            names.push(name);
        }
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in covers {
            let lookup = |s: &str| {
                by_name
                    .get(s)
                    .copied()
                    .ok_or_else(|| Error::UnknownLetter(s.to_string()))
            };
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if a == b {
                return Err(Error::Cycle(
                    names[a.index()].clone(),
                    names[b.index()].clone(),
                ));
            }
            leq[a.index() * n + b.index()] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::Cycle(names[i].clone(), names[j].clone()));
                }
            }
        }
        let single_char = names.iter().all(|s| s.chars().count() == 1);
        let mut alphabet = Alphabet {
            names,
            by_name,
            leq,
            meets: Vec::new(),
            joins: Vec::new(),
            max_lower: Vec::new(),
            single_char,
        };
        alphabet.precompute_bounds();
        Ok(alphabet)
    }

    pub fn from_doc(doc: &AlphabetDoc) -> Result<Alphabet> {
        let covers: Vec<(&str, &str)> = doc
            .covers
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let letters: Vec<&str> = doc.letters.iter().map(String::as_str).collect();
        Alphabet::new(&letters, &covers)
    }

    /// The document form, listing only the covering pairs of the order.
    pub fn to_doc(&self) -> AlphabetDoc {
        let mut covers = Vec::new();
        for a in self.letters() {
            for b in self.letters() {
                if self.lt(a, b) && !self.letters().any(|c| self.lt(a, c) && self.lt(c, b)) {
                    covers.push((self.name(a).to_string(), self.name(b).to_string()));
                }
            }
        }
        AlphabetDoc {
            letters: self.names.clone(),
            covers,
        }
    }

    /// The letters listed as pairwise incomparable.
    pub fn antichain<S: AsRef<str>>(letters: &[S]) -> Result<Alphabet> {
        Alphabet::new::<S>(letters, &[])
    }

    /// The letters listed in increasing order.
    pub fn chain<S: AsRef<str>>(letters: &[S]) -> Result<Alphabet> {
        let names: Vec<&str> = letters.iter().map(AsRef::as_ref).collect();
        let covers: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0], w[1])).collect();
        Alphabet::new(&names, &covers)
    }

    /// The two-letter antichain `{+, -}` coding forward and backward arcs.
    pub fn zigzag() -> Alphabet {
        Alphabet::antichain(&["+", "-"]).expect("static alphabet")
    }

    fn precompute_bounds(&mut self) {
        let n = self.len();
        self.meets = vec![None; n * n];
        self.joins = vec![None; n * n];
        self.max_lower = vec![Vec::new(); n * n];
        let all: Vec<Letter> = self.letters().collect();
        for &a in &all {
            for &b in &all {
                let lower: Vec<Letter> = self
                    .letters()
                    .filter(|&c| self.leq(c, a) && self.leq(c, b))
                    .collect();
                let upper: Vec<Letter> = self
                    .letters()
                    .filter(|&c| self.leq(a, c) && self.leq(b, c))
                    .collect();
                let slot = a.index() * n + b.index();
                self.meets[slot] = lower
                    .iter()
                    .copied()
                    .find(|&m| lower.iter().all(|&c| self.leq(c, m)));
                self.joins[slot] = upper
                    .iter()
                    .copied()
                    .find(|&j| upper.iter().all(|&c| self.leq(j, c)));
                self.max_lower[slot] = lower
                    .iter()
                    .copied()
                    .filter(|&c| !lower.iter().any(|&d| self.lt(c, d)))
                    .collect();
            }
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Letters in input order, which is also the canonical letter order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone + '_ {
        (0..self.names.len()).map(Letter::new)
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.len()
    }

    /// True when every letter name is a single character, so words print
    /// without separators.
    pub fn single_char(&self) -> bool {
        self.single_char
    }

    #[inline]
    pub fn leq(&self, a: Letter, b: Letter) -> bool {
        self.leq[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn lt(&self, a: Letter, b: Letter) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: Letter, b: Letter) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Greatest common lower bound, if one exists. `None` both when the pair
    /// has no lower bound and when it has several maximal ones; use
    /// [`Alphabet::compatible`] to tell the two apart.
    pub fn meet(&self, a: Letter, b: Letter) -> Option<Letter> {
        self.meets[a.index() * self.len() + b.index()]
    }

    pub fn join(&self, a: Letter, b: Letter) -> Option<Letter> {
        self.joins[a.index() * self.len() + b.index()]
    }

    /// Maximal elements of the set of common lower bounds.
    pub fn maximal_lower_bounds(&self, a: Letter, b: Letter) -> &[Letter] {
        &self.max_lower[a.index() * self.len() + b.index()]
    }

    pub fn upper_bounds(&self, a: Letter, b: Letter) -> Vec<Letter> {
        self.letters()
            .filter(|&c| self.leq(a, c) && self.leq(b, c))
            .collect()
    }

    pub fn lower_bounds(&self, a: Letter, b: Letter) -> Vec<Letter> {
        self.letters()
            .filter(|&c| self.leq(c, a) && self.leq(c, b))
            .collect()
    }

    /// Two letters are compatible when they have a common lower bound.
    pub fn compatible(&self, a: Letter, b: Letter) -> bool {
        !self.maximal_lower_bounds(a, b).is_empty()
    }

    pub fn bounded_above(&self, a: Letter, b: Letter) -> bool {
        self.letters().any(|c| self.leq(a, c) && self.leq(b, c))
    }

    /// Name-level order query.
    pub fn leq_names(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.leq(self.letter(a)?, self.letter(b)?))
    }

    pub fn classify(&self) -> AlphabetClass {
        let pairs = || {
            self.letters()
                .flat_map(move |a| self.letters().map(move |b| (a, b)))
        };
        let incomparable = || pairs().filter(|&(a, b)| !self.comparable(a, b));
        let is_antichain = pairs().all(|(a, b)| a == b || !self.comparable(a, b));
        let is_chain = incomparable().next().is_none();
        let is_disjoint_union_of_chains = self.letters().all(|a| {
            self.letters().all(|b| {
                self.letters().all(|c| {
                    !(self.comparable(a, b) && self.comparable(b, c)) || self.comparable(a, c)
                })
            })
        });
        let is_dual_forest = incomparable().all(|(a, b)| !self.compatible(a, b));
        let is_lattice =
            pairs().all(|(a, b)| self.meet(a, b).is_some() && self.join(a, b).is_some());
        let is_conditional_meet_semilattice = pairs()
            .filter(|&(a, b)| self.compatible(a, b))
            .all(|(a, b)| self.meet(a, b).is_some());
        let is_conditional_lattice = is_conditional_meet_semilattice
            && pairs()
                .filter(|&(a, b)| self.bounded_above(a, b))
                .all(|(a, b)| self.join(a, b).is_some());
        let bounded_below_has_meet_and_upper_bound = pairs()
            .filter(|&(a, b)| self.compatible(a, b))
            .all(|(a, b)| self.meet(a, b).is_some() && self.bounded_above(a, b));
        let bounded_below_is_bounded_above = pairs()
            .filter(|&(a, b)| self.compatible(a, b))
            .all(|(a, b)| self.bounded_above(a, b));
        AlphabetClass {
            is_antichain,
            is_chain,
            is_disjoint_union_of_chains,
            is_dual_forest,
            is_lattice,
            is_conditional_meet_semilattice,
            is_conditional_lattice,
            bounded_below_has_meet_and_upper_bound,
            bounded_below_is_bounded_above,
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(", "))
    }
}

/// Order-theoretic classification flags of an alphabet.
///
/// `bounded_below_has_meet_and_upper_bound` holds when every pair of letters bounded below has a
/// meet and an upper bound; under it closedness of upper sets of words is
/// decided by the syntactic rules. `bounded_below_is_bounded_above` holds when every pair
/// bounded below is also bounded above; under it every finitely generated
/// lower set of words is closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphabetClass {
    pub is_antichain: bool,
    pub is_chain: bool,
    pub is_disjoint_union_of_chains: bool,
    pub is_dual_forest: bool,
    pub is_lattice: bool,
    pub is_conditional_meet_semilattice: bool,
    pub is_conditional_lattice: bool,
    pub bounded_below_has_meet_and_upper_bound: bool,
    pub bounded_below_is_bounded_above: bool,
}
