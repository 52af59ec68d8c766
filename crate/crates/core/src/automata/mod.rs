//! Deterministic automata for the languages that upper sets of words form.
//!
//! Upper sets over a finite alphabet are regular. Each generator `g` gets a
//! chain automaton with states `0..=|g|` that advances on any letter above
//! the next letter of `g` (greedy subword matching keeps it deterministic),
//! and unions and intersections go through the product construction. Every
//! constructed automaton is minimized and renumbered in breadth-first order,
//! so equal languages yield identical automata.

mod violation;

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::cones::{min_antichain, Antichain, UpperSet};
use crate::error::{Error, Result};
use crate::poset::{Alphabet, Letter};
use crate::words::Word;

pub use violation::{rule_violation, shortest_violations, violation_dfa};

/// Semantic annotation carried by a [`Dfa`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureKind {
    None,
    Upward,
    Downward,
}

/// A complete deterministic automaton over the letters of an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    letters: usize,
    start: usize,
    accepting: Vec<bool>,
    delta: Vec<usize>,
    kind: ClosureKind,
}

/// Outcome of an inclusion test `L(B) ⊆ L(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inclusion {
    Holds,
    /// A shortest word of `L(B) ∖ L(A)`, least in canonical order.
    Fails(Word),
}

impl Inclusion {
    pub fn holds(&self) -> bool {
        matches!(self, Inclusion::Holds)
    }
}

impl Dfa {
    /// Explores the reachable part of an implicitly given automaton
    /// breadth-first, numbering states in discovery order.
    pub fn explore<S, F, A>(
        letters: usize,
        start: S,
        mut step: F,
        mut accept: A,
        kind: ClosureKind,
    ) -> Dfa
    where
        S: Clone + Eq + Hash,
        F: FnMut(&S, Letter) -> S,
        A: FnMut(&S) -> bool,
    {
        let mut ids: HashMap<S, usize> = HashMap::new();
        let mut states = vec![start.clone()];
        ids.insert(start, 0);
        let mut delta = Vec::new();
        let mut accepting = Vec::new();
        let mut next = 0;
        while next < states.len() {
            let state = states[next].clone();
            accepting.push(accept(&state));
            for l in 0..letters {
                let succ = step(&state, Letter::new(l));
                let id = match ids.get(&succ) {
                    Some(&id) => id,
                    None => {
                        let id = states.len();
                        ids.insert(succ.clone(), id);
                        states.push(succ);
                        id
                    }
                };
                delta.push(id);
            }
            next += 1;
        }
        Dfa {
            letters,
            start: 0,
            accepting,
            delta,
            kind,
        }
    }

    /// Accepts every word.
    pub fn universal(letters: usize) -> Dfa {
        Dfa {
            letters,
            start: 0,
            accepting: vec![true],
            delta: vec![0; letters],
            kind: ClosureKind::Upward,
        }
    }

    /// Accepts nothing.
    pub fn empty(letters: usize) -> Dfa {
        Dfa {
            letters,
            start: 0,
            accepting: vec![false],
            delta: vec![0; letters],
            kind: ClosureKind::Upward,
        }
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn num_letters(&self) -> usize {
        self.letters
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn kind(&self) -> ClosureKind {
        self.kind
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    #[inline]
    pub fn step(&self, state: usize, letter: Letter) -> usize {
        self.delta[state * self.letters + letter.index()]
    }

    pub fn run(&self, state: usize, word: &Word) -> usize {
        word.letters().iter().fold(state, |q, &l| self.step(q, l))
    }

    pub fn accepts(&self, word: &Word) -> bool {
        self.accepting[self.run(self.start, word)]
    }

    fn all_letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.letters).map(Letter::new)
    }

    /// Moore partition refinement over the reachable states, renumbered
    /// breadth-first from the start state.
    pub fn minimize(&self) -> Dfa {
        let mut class: Vec<usize> = self.accepting.iter().map(|&a| usize::from(a)).collect();
        let mut count = class.iter().copied().max().map_or(0, |m| m + 1);
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let next: Vec<usize> = (0..self.num_states())
                .map(|q| {
                    let mut sig = Vec::with_capacity(self.letters + 1);
                    sig.push(class[q]);
                    sig.extend(self.all_letters().map(|l| class[self.step(q, l)]));
                    let n = ids.len();
                    *ids.entry(sig).or_insert(n)
                })
                .collect();
            let new_count = ids.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut rep = vec![usize::MAX; count];
        for (q, &c) in class.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = q;
            }
        }
        Dfa::explore(
            self.letters,
            class[self.start],
            |&c, l| class[self.step(rep[c], l)],
            |&c| self.accepting[rep[c]],
            self.kind,
        )
    }

    /// Shortest accepted word, least in canonical order among those.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let mut parent: Vec<Option<(usize, Letter)>> = vec![None; self.num_states()];
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::from([self.start]);
        seen[self.start] = true;
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                return Some(trace_back(&parent, q));
            }
            for l in self.all_letters() {
                let r = self.step(q, l);
                if !seen[r] {
                    seen[r] = true;
                    parent[r] = Some((q, l));
                    queue.push_back(r);
                }
            }
        }
        None
    }

    pub fn is_empty_language(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    pub fn with_kind(mut self, kind: ClosureKind) -> Dfa {
        self.kind = kind;
        self
    }

    pub fn to_dump(&self, alphabet: &Alphabet) -> DfaDump {
        let mut delta = Vec::new();
        for q in 0..self.num_states() {
            for l in self.all_letters() {
                delta.push((q, alphabet.name(l).to_string(), self.step(q, l)));
            }
        }
        DfaDump {
            states: self.num_states(),
            start: self.start,
            accepting: (0..self.num_states())
                .filter(|&q| self.accepting[q])
                .collect(),
            delta,
        }
    }
}

fn trace_back(parent: &[Option<(usize, Letter)>], mut q: usize) -> Word {
    let mut letters = Vec::new();
    while let Some((p, l)) = parent[q] {
        letters.push(l);
        q = p;
    }
    letters.reverse();
    Word::from_letters(letters)
}

/// Diagnostic dump: `{"states": n, "start": 0, "accepting": [...],
/// "delta": [[state, letter, state], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfaDump {
    pub states: usize,
    pub start: usize,
    pub accepting: Vec<usize>,
    pub delta: Vec<(usize, String, usize)>,
}

/// Automaton for `↑g`: state `i` means the first `i` letters of `g` have
/// been matched greedily.
pub fn chain_dfa(alphabet: &Alphabet, g: &Word) -> Dfa {
    let n = g.len();
    Dfa::explore(
        alphabet.len(),
        0usize,
        |&i, l| {
            if i < n && alphabet.leq(g.letters()[i], l) {
                i + 1
            } else {
                i
            }
        },
        |&i| i == n,
        ClosureKind::Upward,
    )
}

/// Automaton accepting exactly `↑Z.gens`.
pub fn upset_dfa(alphabet: &Alphabet, z: &UpperSet) -> Dfa {
    z.gens().iter().fold(Dfa::empty(alphabet.len()), |acc, g| {
        union_dfa(&acc, &chain_dfa(alphabet, g))
    })
}

/// Automaton for the common upper bounds of `words`.
pub(crate) fn common_upper_bounds_dfa(alphabet: &Alphabet, words: &[Word]) -> Dfa {
    words.iter().fold(Dfa::universal(alphabet.len()), |acc, x| {
        intersect_dfa(&acc, &chain_dfa(alphabet, x))
    })
}

fn product(a: &Dfa, b: &Dfa, accept: impl Fn(bool, bool) -> bool, kind: ClosureKind) -> Dfa {
    assert_eq!(a.letters, b.letters, "automata over different alphabets");
    Dfa::explore(
        a.letters,
        (a.start, b.start),
        |&(p, q), l| (a.step(p, l), b.step(q, l)),
        |&(p, q)| accept(a.accepting[p], b.accepting[q]),
        kind,
    )
    .minimize()
}

pub fn intersect_dfa(a: &Dfa, b: &Dfa) -> Dfa {
    let kind = if a.kind == b.kind {
        a.kind
    } else {
        ClosureKind::None
    };
    product(a, b, |x, y| x && y, kind)
}

pub fn union_dfa(a: &Dfa, b: &Dfa) -> Dfa {
    let kind = if a.kind == b.kind {
        a.kind
    } else {
        ClosureKind::None
    };
    product(a, b, |x, y| x || y, kind)
}

pub fn complement_dfa(a: &Dfa) -> Dfa {
    let kind = match a.kind {
        ClosureKind::Upward => ClosureKind::Downward,
        ClosureKind::Downward => ClosureKind::Upward,
        ClosureKind::None => ClosureKind::None,
    };
    Dfa {
        accepting: a.accepting.iter().map(|x| !x).collect(),
        kind,
        ..a.clone()
    }
}

/// Decides `L(B) ⊆ L(A)` by breadth-first search on the product; a failure
/// carries the shortest, canonically least word of `L(B) ∖ L(A)`.
pub fn includes(a: &Dfa, b: &Dfa) -> Inclusion {
    assert_eq!(a.letters, b.letters, "automata over different alphabets");
    let witness = Dfa::explore(
        a.letters,
        (a.start, b.start),
        |&(p, q), l| (a.step(p, l), b.step(q, l)),
        |&(p, q)| b.accepting[q] && !a.accepting[p],
        ClosureKind::None,
    )
    .shortest_accepted();
    match witness {
        None => Inclusion::Holds,
        Some(w) => Inclusion::Fails(w),
    }
}

pub fn equivalent(a: &Dfa, b: &Dfa) -> bool {
    includes(a, b).holds() && includes(b, a).holds()
}

/// Minimal words of the language of `dfa`, for any language.
///
/// Minimal words accepted from a state `q` are `□` if `q` accepts, else the
/// minimal elements of `σ·M(step(q, σ))` over all letters `σ`: a minimal
/// word's tail must itself be minimal in the residual. Iterating from empty
/// sets computes the minimal words of length at most `k` after `k` rounds;
/// every minimal word is shorter than the number of states (a repeated
/// state could be pumped out), so the iteration stops after at most that
/// many rounds.
pub fn minimal_words_unchecked(alphabet: &Alphabet, dfa: &Dfa) -> Antichain {
    let n = dfa.num_states();
    let mut current: Vec<Antichain> = vec![Antichain::empty(); n];
    loop {
        let next: Vec<Antichain> = (0..n)
            .map(|q| {
                if dfa.accepting[q] {
                    return min_antichain(alphabet, [Word::empty()]);
                }
                let candidates = dfa.all_letters().flat_map(|l| {
                    current[dfa.step(q, l)]
                        .iter()
                        .map(move |w| Word::letter(l).concat(w))
                        .collect::<Vec<_>>()
                });
                min_antichain(alphabet, candidates)
            })
            .collect();
        if next == current {
            break;
        }
        current = next;
    }
    current.swap_remove(dfa.start)
}

/// Minimal words of an upward-closed language.
///
/// Fails with `NotUpwardClosed` when `↑min(L) ⊄ L`, i.e. the language is
/// not upward closed; the check is exact.
pub fn minimal_words(alphabet: &Alphabet, dfa: &Dfa) -> Result<Antichain> {
    let gens = minimal_words_unchecked(alphabet, dfa);
    let up = upset_dfa(alphabet, &UpperSet::from_antichain(gens.clone()));
    match includes(dfa, &up) {
        Inclusion::Holds => Ok(gens),
        Inclusion::Fails(w) => Err(Error::NotUpwardClosed(alphabet.format_word(&w))),
    }
}
