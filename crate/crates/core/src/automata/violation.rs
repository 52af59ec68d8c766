//! Detecting words that a syntactic rule forces into an upper set.
//!
//! A rule instance is described, relative to the state `p` reached after a
//! prefix `y`, by triples `(q1, q2, m)`: `q1` and `q2` are the states after
//! reading the two premise infixes from `p`, and `m` is the infix of the
//! forced word. The forced word `y·m·z` is a violation when both premises
//! `y·u·z`, `y·v·z` are accepted and `y·m·z` is not. Whether `y·m·z` is
//! accepted depends only on the whole word, so a single deterministic
//! automaton tracks the state of the word read so far together with the set
//! of pending premise pairs; a split point is guessed at every position.

use std::collections::HashMap;

use super::{ClosureKind, Dfa};
use crate::cones::Antichain;
use crate::poset::{Alphabet, Letter};
use crate::rules::{instances, Instance, Rule};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct SearchState {
    cur: usize,
    forced: bool,
    // (q1, q2, middle id, letters of the middle already read)
    pending: Vec<(u32, u32, u32, u16)>,
}

/// Automaton accepting the words some instance forces into `L(z)` while
/// `z` rejects them. `z` must accept an upward-closed language.
pub fn violation_dfa(alphabet: &Alphabet, z: &Dfa, instances: &[Instance]) -> Dfa {
    let mut middles: Vec<Word> = Vec::new();
    let mut middle_ids: HashMap<Word, u32> = HashMap::new();
    let spawns: Vec<Vec<(u32, u32, u32)>> = (0..z.num_states())
        .map(|p| {
            let mut out: Vec<(u32, u32, u32)> = instances
                .iter()
                .flat_map(|inst| inst.spawns(alphabet, z, p))
                .map(|(q1, q2, m)| {
                    let id = *middle_ids.entry(m.clone()).or_insert_with(|| {
                        middles.push(m);
                        (middles.len() - 1) as u32
                    });
                    (q1 as u32, q2 as u32, id)
                })
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();

    let normalize = |mut s: SearchState| -> SearchState {
        if !s.forced {
            s.pending
                .extend(spawns[s.cur].iter().map(|&(q1, q2, m)| (q1, q2, m, 0)));
            s.forced = s.pending.iter().any(|&(q1, q2, m, pos)| {
                pos as usize == middles[m as usize].len()
                    && z.is_accepting(q1 as usize)
                    && z.is_accepting(q2 as usize)
            });
        }
        if s.forced {
            // accepting states of an upward-closed automaton are absorbing
            s.pending.clear();
        } else {
            s.pending.sort_unstable();
            s.pending.dedup();
        }
        s
    };

    let start = normalize(SearchState {
        cur: z.start(),
        forced: false,
        pending: Vec::new(),
    });
    Dfa::explore(
        alphabet.len(),
        start,
        |s, l: Letter| {
            let pending = s
                .pending
                .iter()
                .filter_map(|&(q1, q2, m, pos)| {
                    let middle = &middles[m as usize];
                    if (pos as usize) < middle.len() {
                        (middle.letters()[pos as usize] == l).then_some((q1, q2, m, pos + 1))
                    } else {
                        Some((
                            z.step(q1 as usize, l) as u32,
                            z.step(q2 as usize, l) as u32,
                            m,
                            pos,
                        ))
                    }
                })
                .collect();
            normalize(SearchState {
                cur: z.step(s.cur, l),
                forced: s.forced,
                pending,
            })
        },
        |s| s.forced && !z.is_accepting(s.cur),
        ClosureKind::None,
    )
    .minimize()
}

/// A shortest word that `rule` forces into `L(z)` but `z` lacks, least in
/// canonical order; `None` when `L(z)` is stable under the rule. Rules
/// without instances in the alphabet are vacuously satisfied.
pub fn rule_violation(alphabet: &Alphabet, z: &Dfa, rule: Rule) -> Option<Word> {
    let insts = instances(alphabet, rule);
    if insts.is_empty() {
        return None;
    }
    violation_dfa(alphabet, z, &insts).shortest_accepted()
}

/// The minimal violations of the shortest length, in canonical order.
pub fn shortest_violations(alphabet: &Alphabet, z: &Dfa, instances: &[Instance]) -> Antichain {
    if instances.is_empty() {
        return Antichain::empty();
    }
    let dfa = violation_dfa(alphabet, z, instances);
    let minimal = super::minimal_words_unchecked(alphabet, &dfa);
    let Some(len) = minimal.iter().map(Word::len).min() else {
        return minimal;
    };
    crate::cones::min_antichain(
        alphabet,
        minimal.into_words().into_iter().filter(|w| w.len() == len),
    )
}
