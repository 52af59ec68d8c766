//! Syntactic rules on upper sets of words, stability, and the stable
//! closure `[Y]`: the least upper set containing `Y` that is stable under a
//! chosen set of rules.
//!
//! Every rule has the shape "if `y·u·z ∈ Z` and `y·v·z ∈ Z` then
//! `y·m·z ∈ Z`" for letter-level infixes `u`, `v`, `m` fixed by an
//! [`Instance`]. The compound rule has an unbounded first infix and is
//! handled by a small search instead of a list of triples.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automata::{includes, rule_violation, shortest_violations, upset_dfa, Dfa, Inclusion};
use crate::cones::{closure_up, UpperSet};
use crate::error::{Error, Result};
use crate::poset::{Alphabet, AlphabetClass, Letter};
use crate::words::{enumerate_words, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `yαz, yβz ⊢ yz` for incompatible `α, β`.
    Cancellation,
    /// `yααz, yγz ⊢ yαz` for `α < γ`.
    Reduction,
    /// `yαβz, yγz ⊢ yβαz` for incomparable `α, β` below `γ`.
    Permutation,
    /// `yαz, yβz ⊢ y(α∧β)z` for incomparable `α, β` with a meet.
    Meet,
    /// Permutation, plus `yδz` for every `δ` above both `α` and `β`.
    PermutoReduction,
    /// Cancellation and meet in one: `yαz, yβz ⊢ ywz` where `w` is the meet
    /// of the incomparable letters `α, β` in the word order.
    ExtendedMeet,
    /// `yα₁…αₙz, yβz ⊢ ytz` for `β ≰ αᵢ`, where `t` lists the maximal
    /// existing meets `αᵢ∧β`.
    Compound,
}

impl Rule {
    /// The basic rules generating all the others.
    pub const FOUR: [Rule; 4] = [
        Rule::Cancellation,
        Rule::Reduction,
        Rule::Permutation,
        Rule::Meet,
    ];

    pub const ALL: [Rule; 7] = [
        Rule::Cancellation,
        Rule::Reduction,
        Rule::Permutation,
        Rule::Meet,
        Rule::PermutoReduction,
        Rule::ExtendedMeet,
        Rule::Compound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Cancellation => "cancellation",
            Rule::Reduction => "reduction",
            Rule::Permutation => "permutation",
            Rule::Meet => "meet",
            Rule::PermutoReduction => "permuto_reduction",
            Rule::ExtendedMeet => "extended_meet",
            Rule::Compound => "compound",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = Error;

    /// Accepts snake_case or kebab-case names.
    fn from_str(s: &str) -> Result<Rule> {
        let norm = s.trim().replace('-', "_");
        Rule::ALL
            .into_iter()
            .find(|r| r.name() == norm)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

/// A rule together with the letters satisfying its side conditions.
///
/// Letter tuples: cancellation and meet and extended meet `[α, β]`,
/// reduction `[α, γ]`, permutation and permuto-reduction `[α, β, γ]`,
/// compound `[β]` (the `αᵢ` range over every letter with `β ≰ αᵢ`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    pub rule: Rule,
    pub letters: Vec<Letter>,
}

/// Every instance of `rule` in the alphabet, in letter-index order.
pub fn instances(alphabet: &Alphabet, rule: Rule) -> Vec<Instance> {
    let ls: Vec<Letter> = alphabet.letters().collect();
    let mut out = Vec::new();
    let mut push = |letters: Vec<Letter>| out.push(Instance { rule, letters });
    match rule {
        Rule::Cancellation | Rule::Meet | Rule::ExtendedMeet => {
            for (i, &a) in ls.iter().enumerate() {
                for &b in &ls[i + 1..] {
                    let applies = match rule {
                        Rule::Cancellation => !alphabet.compatible(a, b),
                        Rule::Meet => !alphabet.comparable(a, b) && alphabet.meet(a, b).is_some(),
                        _ => {
                            !alphabet.comparable(a, b)
                                && (!alphabet.compatible(a, b) || alphabet.meet(a, b).is_some())
                        }
                    };
                    if applies {
                        push(vec![a, b]);
                    }
                }
            }
        }
        Rule::Reduction => {
            for &a in &ls {
                for &g in &ls {
                    if alphabet.lt(a, g) {
                        push(vec![a, g]);
                    }
                }
            }
        }
        Rule::Permutation | Rule::PermutoReduction => {
            for &a in &ls {
                for &b in &ls {
                    if alphabet.comparable(a, b) {
                        continue;
                    }
                    for &g in &ls {
                        if alphabet.lt(a, g) && alphabet.lt(b, g) {
                            push(vec![a, b, g]);
                        }
                    }
                }
            }
        }
        Rule::Compound => {
            assert!(
                alphabet.len() <= 128,
                "compound rule supports at most 128 letters"
            );
            for &b in &ls {
                push(vec![b]);
            }
        }
    }
    out
}

/// Instances of several rules, concatenated in the given rule order.
pub fn instances_of(alphabet: &Alphabet, rules: &[Rule]) -> Vec<Instance> {
    rules.iter().flat_map(|&r| instances(alphabet, r)).collect()
}

impl Instance {
    /// The `(u, v, m)` infix triples of a fixed-shape rule; `None` for the
    /// compound rule.
    pub fn fixed_triples(&self, alphabet: &Alphabet) -> Option<Vec<(Word, Word, Word)>> {
        let w = |ls: &[Letter]| Word::from_letters(ls.to_vec());
        let l = &self.letters;
        let triples = match self.rule {
            Rule::Cancellation => vec![(w(&l[..1]), w(&l[1..2]), Word::empty())],
            Rule::Reduction => vec![(w(&[l[0], l[0]]), w(&l[1..2]), w(&l[..1]))],
            Rule::Permutation => vec![(w(&l[..2]), w(&l[2..3]), w(&[l[1], l[0]]))],
            Rule::Meet => {
                let m = alphabet.meet(l[0], l[1]).expect("meet instance");
                vec![(w(&l[..1]), w(&l[1..2]), Word::letter(m))]
            }
            Rule::PermutoReduction => {
                let mut t = vec![(w(&l[..2]), w(&l[2..3]), w(&[l[1], l[0]]))];
                t.extend(
                    alphabet
                        .letters()
                        .filter(|&d| alphabet.lt(l[0], d) && alphabet.lt(l[1], d))
                        .map(|d| (w(&l[..2]), w(&l[2..3]), Word::letter(d))),
                );
                t
            }
            Rule::ExtendedMeet => {
                let m = alphabet
                    .meet(l[0], l[1])
                    .map(Word::letter)
                    .unwrap_or_default();
                vec![(w(&l[..1]), w(&l[1..2]), m)]
            }
            Rule::Compound => return None,
        };
        Some(triples)
    }

    /// Triples `(q1, q2, m)` seen from state `p` of `z`: the states after
    /// the two premise infixes, and the forced infix.
    pub(crate) fn spawns(
        &self,
        alphabet: &Alphabet,
        z: &Dfa,
        p: usize,
    ) -> Vec<(usize, usize, Word)> {
        match self.fixed_triples(alphabet) {
            Some(triples) => triples
                .into_iter()
                .map(|(u, v, m)| (z.run(p, &u), z.run(p, &v), m))
                .collect(),
            None => {
                let beta = self.letters[0];
                let q2 = z.step(p, beta);
                let mut out = Vec::new();
                for node in compound_search(alphabet, z, p, beta).nodes {
                    if node.nonempty {
                        let t = maximal_in_mask(alphabet, node.mask);
                        for order in permutations(&t) {
                            out.push((node.state, q2, Word::from_letters(order)));
                        }
                    }
                }
                out
            }
        }
    }

    /// If this instance forces `w` into `L(z)`, the concrete letter tuple
    /// used (for the compound rule, `[α₁, …, αₙ, β]`).
    pub fn forcing_letters(&self, alphabet: &Alphabet, z: &Dfa, w: &Word) -> Option<Vec<Letter>> {
        let accepts_from = |q: usize, rest: &Word| z.is_accepting(z.run(q, rest));
        let triples = self.fixed_triples(alphabet);
        for i in 0..=w.len() {
            let p = z.run(z.start(), &w.slice(0, i));
            match &triples {
                Some(triples) => {
                    for (u, v, m) in triples {
                        if i + m.len() > w.len() || w.slice(i, i + m.len()) != *m {
                            continue;
                        }
                        let rest = w.slice(i + m.len(), w.len());
                        if accepts_from(z.run(p, u), &rest) && accepts_from(z.run(p, v), &rest) {
                            return Some(self.letters.clone());
                        }
                    }
                }
                None => {
                    let beta = self.letters[0];
                    let search = compound_search(alphabet, z, p, beta);
                    for j in i..=w.len() {
                        let t = w.slice(i, j);
                        let mut sorted = t.letters().to_vec();
                        sorted.sort();
                        sorted.dedup();
                        if sorted.len() != t.len() {
                            continue;
                        }
                        let rest = w.slice(j, w.len());
                        if !accepts_from(z.step(p, beta), &rest) {
                            continue;
                        }
                        let hit = search.nodes.iter().position(|n| {
                            n.nonempty
                                && accepts_from(n.state, &rest)
                                && maximal_in_mask(alphabet, n.mask) == sorted
                        });
                        if let Some(k) = hit {
                            let mut letters = search.path(k);
                            letters.push(beta);
                            return Some(letters);
                        }
                    }
                }
            }
        }
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct CompoundNode {
    state: usize,
    mask: u128,
    nonempty: bool,
}

struct CompoundSearch {
    nodes: Vec<CompoundNode>,
    parent: Vec<Option<(usize, Letter)>>,
}

impl CompoundSearch {
    fn path(&self, mut k: usize) -> Vec<Letter> {
        let mut letters = Vec::new();
        while let Some((prev, l)) = self.parent[k] {
            letters.push(l);
            k = prev;
        }
        letters.reverse();
        letters
    }
}

/// Breadth-first search over words `α₁…αₙ` with `β ≰ αᵢ` read from state
/// `p`, tracking the set of existing meets `αᵢ∧β`.
fn compound_search(alphabet: &Alphabet, z: &Dfa, p: usize, beta: Letter) -> CompoundSearch {
    let allowed: Vec<Letter> = alphabet
        .letters()
        .filter(|&a| !alphabet.leq(beta, a))
        .collect();
    let start = CompoundNode {
        state: p,
        mask: 0,
        nonempty: false,
    };
    let mut index = HashMap::from([(start, 0usize)]);
    let mut search = CompoundSearch {
        nodes: vec![start],
        parent: vec![None],
    };
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let node = search.nodes[k];
        for &a in &allowed {
            let bit = alphabet.meet(a, beta).map_or(0, |m| 1u128 << m.index());
            let next = CompoundNode {
                state: z.step(node.state, a),
                mask: node.mask | bit,
                nonempty: true,
            };
            if let Entry::Vacant(slot) = index.entry(next) {
                slot.insert(search.nodes.len());
                search.nodes.push(next);
                search.parent.push(Some((k, a)));
                queue.push_back(search.nodes.len() - 1);
            }
        }
    }
    search
}

fn maximal_in_mask(alphabet: &Alphabet, mask: u128) -> Vec<Letter> {
    let present: Vec<Letter> = alphabet
        .letters()
        .filter(|l| mask >> l.index() & 1 == 1)
        .collect();
    present
        .iter()
        .copied()
        .filter(|&a| !present.iter().any(|&b| alphabet.lt(a, b)))
        .collect()
}

fn permutations(items: &[Letter]) -> Vec<Vec<Letter>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// The word a rule instance forces from `y` and `z`, after checking the
/// side conditions. For the compound rule `letters` is `[α₁, …, αₙ, β]`
/// and the meets in `t` are listed in canonical letter order. For
/// permuto-reduction, `[α, β, γ]` forces `yβαz` and `[α, β, γ, δ]` forces
/// `yδz`.
pub fn apply_rule_instance(
    alphabet: &Alphabet,
    rule: Rule,
    y: &Word,
    z: &Word,
    letters: &[Letter],
) -> Result<Word> {
    alphabet.check_word(y)?;
    alphabet.check_word(z)?;
    alphabet.check_word(&Word::from_letters(letters.to_vec()))?;
    let fail = |condition: String| Error::SideConditionViolated {
        rule: rule.name(),
        condition,
    };
    let n = |l: Letter| alphabet.name(l).to_string();
    let arity_ok = match rule {
        Rule::Cancellation | Rule::Reduction | Rule::Meet | Rule::ExtendedMeet => {
            letters.len() == 2
        }
        Rule::Permutation => letters.len() == 3,
        Rule::PermutoReduction => letters.len() == 3 || letters.len() == 4,
        Rule::Compound => letters.len() >= 2,
    };
    if !arity_ok {
        return Err(fail(format!("wrong number of letters ({})", letters.len())));
    }
    let incomparable = |a: Letter, b: Letter| -> Result<()> {
        if alphabet.comparable(a, b) {
            Err(fail(format!("{} and {} are comparable", n(a), n(b))))
        } else {
            Ok(())
        }
    };
    let below = |a: Letter, g: Letter| -> Result<()> {
        if alphabet.lt(a, g) {
            Ok(())
        } else {
            Err(fail(format!("{} is not below {}", n(a), n(g))))
        }
    };
    let middle = match rule {
        Rule::Cancellation => {
            let (a, b) = (letters[0], letters[1]);
            if alphabet.compatible(a, b) {
                return Err(fail(format!("{} and {} are compatible", n(a), n(b))));
            }
            Word::empty()
        }
        Rule::Reduction => {
            below(letters[0], letters[1])?;
            Word::letter(letters[0])
        }
        Rule::Permutation | Rule::PermutoReduction => {
            let (a, b, g) = (letters[0], letters[1], letters[2]);
            incomparable(a, b)?;
            below(a, g)?;
            below(b, g)?;
            match letters.get(3) {
                Some(&d) => {
                    below(a, d)?;
                    below(b, d)?;
                    Word::letter(d)
                }
                None => Word::from_letters(vec![b, a]),
            }
        }
        Rule::Meet | Rule::ExtendedMeet => {
            let (a, b) = (letters[0], letters[1]);
            incomparable(a, b)?;
            match alphabet.meet(a, b) {
                Some(m) => Word::letter(m),
                None if rule == Rule::ExtendedMeet && !alphabet.compatible(a, b) => Word::empty(),
                None => return Err(fail(format!("{} and {} have no meet", n(a), n(b)))),
            }
        }
        Rule::Compound => {
            let (alphas, beta) = letters.split_at(letters.len() - 1);
            let beta = beta[0];
            let mut mask = 0u128;
            for &a in alphas {
                if alphabet.leq(beta, a) {
                    return Err(fail(format!("{} is below {}", n(beta), n(a))));
                }
                if let Some(m) = alphabet.meet(a, beta) {
                    mask |= 1 << m.index();
                }
            }
            Word::from_letters(maximal_in_mask(alphabet, mask))
        }
    };
    Ok(Word::concat_all([y, &middle, z]))
}

/// How the closure was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    RulesSaturation,
    GaloisOracle,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// Saturation round; all words of a round are shortest violations of
    /// the set as it stood when the round began.
    pub round: usize,
    pub rule: Rule,
    pub letters: Vec<Letter>,
    pub added: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub input: Vec<Word>,
    pub result: UpperSet,
    pub method: Method,
    /// Whether the alphabet satisfies the hypothesis under which stable and
    /// closed upper sets coincide.
    pub applicable: bool,
    pub trace: Vec<TraceStep>,
    /// Set when both methods ran.
    pub agreement: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepDoc {
    pub round: usize,
    pub rule: Rule,
    pub letters: Vec<String>,
    pub added: String,
}

/// Wire form of a [`ClosureReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReportDoc {
    pub input: Vec<String>,
    pub result: Vec<String>,
    pub method: Method,
    pub applicable: bool,
    pub trace: Vec<TraceStepDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

impl ClosureReport {
    pub fn to_doc(&self, alphabet: &Alphabet) -> ClosureReportDoc {
        ClosureReportDoc {
            input: self.input.iter().map(|w| alphabet.format_word(w)).collect(),
            result: self.result.format(alphabet),
            method: self.method,
            applicable: self.applicable,
            trace: self
                .trace
                .iter()
                .map(|s| TraceStepDoc {
                    round: s.round,
                    rule: s.rule,
                    letters: s
                        .letters
                        .iter()
                        .map(|&l| alphabet.name(l).to_string())
                        .collect(),
                    added: alphabet.format_word(&s.added),
                })
                .collect(),
            agreement: self.agreement,
        }
    }
}

/// Which violations each saturation round adds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Saturation {
    /// All minimal violations of the shortest length, over all rules at
    /// once, added one by one in canonical order.
    #[default]
    Layered,
    /// One shortest violation of the first rule (in scan order) that has
    /// any.
    SingleWitness,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClosureOptions {
    pub strategy: Saturation,
    /// Prefer the canonically last shortest witness instead of the first.
    pub reverse_tiebreak: bool,
}

/// `[Y]` under `rules` with default options.
pub fn stable_closure(alphabet: &Alphabet, y: &[Word], rules: &[Rule]) -> Result<ClosureReport> {
    stable_closure_with(alphabet, y, rules, ClosureOptions::default())
}

/// `[Y]` by saturation: starting from `↑Y`, violations are added until the
/// set is stable. Each step strictly enlarges an upper set, and ascending
/// chains of upper sets of words are finite, so the loop terminates.
pub fn stable_closure_with(
    alphabet: &Alphabet,
    y: &[Word],
    rules: &[Rule],
    options: ClosureOptions,
) -> Result<ClosureReport> {
    let mut z = UpperSet::new(alphabet, y)?;
    let per_rule: Vec<Vec<Instance>> = rules.iter().map(|&r| instances(alphabet, r)).collect();
    let all: Vec<Instance> = per_rule.iter().flatten().cloned().collect();
    let mut trace = Vec::new();
    let mut round = 0;
    while !z.is_empty() {
        let dfa = upset_dfa(alphabet, &z);
        let mut batch = match options.strategy {
            Saturation::Layered => shortest_violations(alphabet, &dfa, &all).into_words(),
            Saturation::SingleWitness => per_rule
                .iter()
                .map(|insts| shortest_violations(alphabet, &dfa, insts).into_words())
                .find(|ws| !ws.is_empty())
                .map(|ws| {
                    let pick = if options.reverse_tiebreak {
                        ws.len() - 1
                    } else {
                        0
                    };
                    vec![ws[pick].clone()]
                })
                .unwrap_or_default(),
        };
        if batch.is_empty() {
            break;
        }
        if options.reverse_tiebreak {
            batch.reverse();
        }
        for w in batch {
            let (rule, letters) = all
                .iter()
                .find_map(|inst| {
                    inst.forcing_letters(alphabet, &dfa, &w)
                        .map(|l| (inst.rule, l))
                })
                .expect("every violation is forced by some instance");
            z = z.union(alphabet, &UpperSet::principal(w.clone()));
            trace.push(TraceStep {
                round,
                rule,
                letters,
                added: w,
            });
        }
        round += 1;
    }
    Ok(ClosureReport {
        input: y.to_vec(),
        result: z,
        method: Method::RulesSaturation,
        applicable: alphabet.classify().bounded_below_has_meet_and_upper_bound,
        trace,
        agreement: None,
    })
}

/// Saturation cross-checked against the Galois closure `Y^∇Δ`.
pub fn stable_closure_with_oracle(
    alphabet: &Alphabet,
    y: &[Word],
    rules: &[Rule],
) -> Result<ClosureReport> {
    let mut report = stable_closure(alphabet, y, rules)?;
    let oracle = closure_up(alphabet, y)?;
    report.method = Method::Both;
    report.agreement = Some(oracle == report.result);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Violated { rule: Rule, witness: Word },
}

impl Stability {
    pub fn is_stable(&self) -> bool {
        matches!(self, Stability::Stable)
    }
}

/// Checks `z` against every rule; the first violated rule in the given
/// order is reported with its least shortest witness.
pub fn is_stable(alphabet: &Alphabet, z: &UpperSet, rules: &[Rule]) -> Result<Stability> {
    alphabet.check_words(z.gens())?;
    let dfa = upset_dfa(alphabet, z);
    let found: Vec<Option<Word>> = rules
        .par_iter()
        .map(|&r| rule_violation(alphabet, &dfa, r))
        .collect();
    Ok(rules
        .iter()
        .zip(found)
        .find_map(|(&rule, w)| w.map(|witness| Stability::Violated { rule, witness }))
        .unwrap_or(Stability::Stable))
}

/// The smallest rule subset deciding closedness for the special alphabet
/// classes; `None` outside them.
pub fn corollary_rules(class: &AlphabetClass) -> Option<Vec<Rule>> {
    use Rule::*;
    if class.is_antichain {
        Some(vec![Cancellation])
    } else if class.is_chain {
        Some(vec![Reduction])
    } else if class.is_disjoint_union_of_chains {
        Some(vec![Cancellation, Reduction])
    } else if class.is_dual_forest {
        Some(vec![Cancellation, Reduction, Permutation])
    } else if class.is_lattice {
        Some(vec![Reduction, Permutation, Meet])
    } else {
        None
    }
}

/// Closedness verdict for an upper set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosednessDecision {
    pub closed: bool,
    pub method: Method,
    /// Whether the rules decide closedness for this alphabet.
    pub applicable: bool,
    /// Rules checked; empty when only the oracle ran.
    pub rules: Vec<Rule>,
    /// A word of `Z^∇Δ` missing from `Z`, with the rule that forced it when
    /// the rules found it.
    pub witness: Option<Word>,
    pub violated_rule: Option<Rule>,
    pub agreement: Option<bool>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosednessDoc {
    pub set: Vec<String>,
    pub closed: bool,
    pub method: Method,
    pub applicable: bool,
    pub rules: Vec<Rule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violated_rule: Option<Rule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ClosednessDecision {
    pub fn to_doc(&self, alphabet: &Alphabet, z: &UpperSet) -> ClosednessDoc {
        ClosednessDoc {
            set: z.format(alphabet),
            closed: self.closed,
            method: self.method,
            applicable: self.applicable,
            rules: self.rules.clone(),
            witness: self.witness.as_ref().map(|w| alphabet.format_word(w)),
            violated_rule: self.violated_rule,
            agreement: self.agreement,
            note: self.note.clone(),
        }
    }
}

/// A shortest word of `Z^∇Δ` outside `Z`, if any.
pub fn oracle_witness(alphabet: &Alphabet, z: &UpperSet) -> Result<Option<Word>> {
    let closed = closure_up(alphabet, z.gens().words())?;
    Ok(
        match includes(
            &upset_dfa(alphabet, &z.clone()),
            &upset_dfa(alphabet, &closed),
        ) {
            Inclusion::Holds => None,
            Inclusion::Fails(w) => Some(w),
        },
    )
}

/// Decides whether `z` is closed. Under the rule-decidable hypothesis the
/// rules answer, restricted to the smallest sufficient subset for special
/// alphabet classes; otherwise the Galois closure answers. With `verify`,
/// the four rules and the Galois closure are also run and compared.
pub fn closedness_decision(
    alphabet: &Alphabet,
    z: &UpperSet,
    verify: bool,
) -> Result<ClosednessDecision> {
    alphabet.check_words(z.gens())?;
    let class = alphabet.classify();
    if !class.bounded_below_has_meet_and_upper_bound {
        let witness = oracle_witness(alphabet, z)?;
        return Ok(ClosednessDecision {
            closed: witness.is_none(),
            method: Method::GaloisOracle,
            applicable: false,
            rules: Vec::new(),
            witness,
            violated_rule: None,
            agreement: None,
            note: Some(
                "alphabet is outside the classes where stability under the rules is known to \
                 coincide with closedness; decided by the Galois closure"
                    .into(),
            ),
        });
    }
    let rules = corollary_rules(&class).unwrap_or_else(|| Rule::FOUR.to_vec());
    let (closed, witness, violated_rule) = match is_stable(alphabet, z, &rules)? {
        Stability::Stable => (true, None, None),
        Stability::Violated { rule, witness } => (false, Some(witness), Some(rule)),
    };
    let agreement = if verify {
        let four = is_stable(alphabet, z, &Rule::FOUR)?.is_stable();
        let oracle = oracle_witness(alphabet, z)?.is_none();
        Some(four == closed && oracle == closed)
    } else {
        None
    };
    Ok(ClosednessDecision {
        closed,
        method: if verify {
            Method::Both
        } else {
            Method::RulesSaturation
        },
        applicable: true,
        rules,
        witness,
        violated_rule,
        agreement,
        note: None,
    })
}

/// A generator set whose stable closure differs from its Galois closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: Vec<Word>,
    pub stable: UpperSet,
    pub closure: UpperSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub max_gens: usize,
    pub max_len: usize,
    /// Generator antichains compared.
    pub checked: usize,
    pub mismatches: usize,
    /// Sets where the stable closure was not contained in the Galois
    /// closure; always zero for a correct rule engine.
    pub soundness_failures: usize,
    /// First mismatch in enumeration order.
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub input: Vec<String>,
    pub stable: Vec<String>,
    pub closure: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureDoc {
    pub max_gens: usize,
    pub max_len: usize,
    pub checked: usize,
    pub mismatches: usize,
    pub soundness_failures: usize,
    pub counterexample: Option<CounterexampleDoc>,
    pub verdict: String,
}

impl ConjectureReport {
    pub fn to_doc(&self, alphabet: &Alphabet) -> ConjectureDoc {
        let fmt = |ws: &[Word]| ws.iter().map(|w| alphabet.format_word(w)).collect();
        ConjectureDoc {
            max_gens: self.max_gens,
            max_len: self.max_len,
            checked: self.checked,
            mismatches: self.mismatches,
            soundness_failures: self.soundness_failures,
            counterexample: self.counterexample.as_ref().map(|c| CounterexampleDoc {
                input: fmt(&c.input),
                stable: c.stable.format(alphabet),
                closure: c.closure.format(alphabet),
            }),
            verdict: match &self.counterexample {
                Some(_) => "counterexample found".into(),
                None => format!(
                    "no counterexample within bounds (at most {} generators of length at most {})",
                    self.max_gens, self.max_len
                ),
            },
        }
    }
}

/// All nonempty antichains of at most `max_gens` words of length at most
/// `max_len`, in lexicographic order of their canonical word lists.
pub fn generator_sets(alphabet: &Alphabet, max_gens: usize, max_len: usize) -> Vec<Vec<Word>> {
    let words: Vec<Word> = enumerate_words(alphabet, max_len).collect();
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn extend(
        alphabet: &Alphabet,
        words: &[Word],
        max_gens: usize,
        from: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<Word>>,
    ) {
        for i in from..words.len() {
            let w = &words[i];
            if current.iter().any(|&j| {
                crate::words::higman_leq(alphabet, &words[j], w)
                    || crate::words::higman_leq(alphabet, w, &words[j])
            }) {
                continue;
            }
            current.push(i);
            out.push(current.iter().map(|&j| words[j].clone()).collect());
            if current.len() < max_gens {
                extend(alphabet, words, max_gens, i + 1, current, out);
            }
            current.pop();
        }
    }
    extend(alphabet, &words, max_gens, 0, &mut current, &mut out);
    out
}

/// Compares `[Y]` under the four rules with `Y^∇Δ` for every generator
/// antichain within the bounds. Requires a conditional lattice. A `None`
/// counterexample is evidence within the bounds only.
pub fn conjecture_search(
    alphabet: &Alphabet,
    max_gens: usize,
    max_len: usize,
) -> Result<ConjectureReport> {
    if !alphabet.classify().is_conditional_lattice {
        return Err(Error::HypothesisViolated(
            "conjecture search needs a conditional lattice".into(),
        ));
    }
    let sets = generator_sets(alphabet, max_gens, max_len);
    let results: Vec<(bool, bool, Counterexample)> = sets
        .par_iter()
        .map(|y| {
            let stable = stable_closure(alphabet, y, &Rule::FOUR)?.result;
            let closure = closure_up(alphabet, y)?;
            let sound = includes(
                &upset_dfa(alphabet, &closure),
                &upset_dfa(alphabet, &stable),
            )
            .holds();
            Ok((
                stable == closure,
                sound,
                Counterexample {
                    input: y.clone(),
                    stable,
                    closure,
                },
            ))
        })
        .collect::<Result<_>>()?;
    Ok(ConjectureReport {
        max_gens,
        max_len,
        checked: results.len(),
        mismatches: results.iter().filter(|r| !r.0).count(),
        soundness_failures: results.iter().filter(|r| !r.1).count(),
        counterexample: results.into_iter().find(|r| !r.0).map(|r| r.2),
    })
}
