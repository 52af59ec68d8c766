//! Upper and lower sets of words, the cone operators and the Galois closures.
//!
//! Every set is stored through its extremal antichain: minimal generators
//! for upper sets, maximal generators for lower sets. Each operation
//! re-canonicalizes, so two sets are equal exactly when their generator
//! lists are equal.
//!
//! `X^∇` (common lower bounds) is computed by folding pairwise intersections
//! of principal lower sets. `X^Δ` (common upper bounds) goes through the
//! automata in [`crate::automata`], since its antichain has no simple
//! closed form.

use serde::{Deserialize, Serialize};

use crate::automata::{self, Dfa};
use crate::error::{Error, Result};
use crate::poset::Alphabet;
use crate::words::{enumerate_words, higman_leq, Word};

/// Pairwise incomparable words, sorted in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Antichain(Vec<Word>);

impl Antichain {
    pub fn empty() -> Antichain {
        Antichain(Vec::new())
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn into_words(self) -> Vec<Word> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.0.iter()
    }

    pub fn format(&self, alphabet: &Alphabet) -> Vec<String> {
        self.0.iter().map(|w| alphabet.format_word(w)).collect()
    }
}

impl<'a> IntoIterator for &'a Antichain {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Minimal elements of `words`.
pub fn min_antichain(alphabet: &Alphabet, words: impl IntoIterator<Item = Word>) -> Antichain {
    let mut words: Vec<Word> = words.into_iter().collect();
    words.sort();
    words.dedup();
    let mut kept: Vec<Word> = Vec::new();
    let mut start = 0;
    while start < words.len() {
        let len = words[start].len();
        let end = start + words[start..].iter().take_while(|w| w.len() == len).count();
        let shorter = kept.len();
        for i in start..end {
            let w = &words[i];
            let dominated = kept[..shorter].iter().any(|v| higman_leq(alphabet, v, w))
                || (start..end).any(|j| j != i && higman_leq(alphabet, &words[j], w));
            if !dominated {
                kept.push(w.clone());
            }
        }
        start = end;
    }
    Antichain(kept)
}

/// Maximal elements of `words`.
pub fn max_antichain(alphabet: &Alphabet, words: impl IntoIterator<Item = Word>) -> Antichain {
    let mut words: Vec<Word> = words.into_iter().collect();
    words.sort_by(|a, b| b.cmp(a));
    words.dedup();
    let mut kept: Vec<Word> = Vec::new();
    let mut start = 0;
    while start < words.len() {
        let len = words[start].len();
        let end = start + words[start..].iter().take_while(|w| w.len() == len).count();
        let longer = kept.len();
        for i in start..end {
            let w = &words[i];
            let dominated = kept[..longer].iter().any(|v| higman_leq(alphabet, w, v))
                || (start..end).any(|j| j != i && higman_leq(alphabet, w, &words[j]));
            if !dominated {
                kept.push(w.clone());
            }
        }
        start = end;
    }
    kept.sort();
    Antichain(kept)
}

/// Checked form of [`min_antichain`].
pub fn try_min_antichain(alphabet: &Alphabet, words: &[Word]) -> Result<Antichain> {
    alphabet.check_words(words)?;
    Ok(min_antichain(alphabet, words.iter().cloned()))
}

/// Checked form of [`max_antichain`].
pub fn try_max_antichain(alphabet: &Alphabet, words: &[Word]) -> Result<Antichain> {
    alphabet.check_words(words)?;
    Ok(max_antichain(alphabet, words.iter().cloned()))
}

/// An upward-closed set of words `↑gens`. The empty antichain is `∅`,
/// `{□}` is all of `Λ*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpperSet {
    gens: Antichain,
}

impl UpperSet {
    pub fn new(alphabet: &Alphabet, gens: &[Word]) -> Result<UpperSet> {
        Ok(UpperSet {
            gens: try_min_antichain(alphabet, gens)?,
        })
    }

    pub fn parse<S: AsRef<str>>(alphabet: &Alphabet, literals: &[S]) -> Result<UpperSet> {
        UpperSet::new(alphabet, &alphabet.parse_words(literals)?)
    }

    pub(crate) fn from_antichain(gens: Antichain) -> UpperSet {
        UpperSet { gens }
    }

    pub fn empty() -> UpperSet {
        UpperSet {
            gens: Antichain::empty(),
        }
    }

    /// `Λ* = ↑□`.
    pub fn all() -> UpperSet {
        UpperSet {
            gens: Antichain(vec![Word::empty()]),
        }
    }

    pub fn principal(word: Word) -> UpperSet {
        UpperSet {
            gens: Antichain(vec![word]),
        }
    }

    pub fn gens(&self) -> &Antichain {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.gens.0.len() == 1 && self.gens.0[0].is_empty()
    }

    pub fn contains(&self, alphabet: &Alphabet, word: &Word) -> bool {
        self.gens.iter().any(|g| higman_leq(alphabet, g, word))
    }

    pub fn format(&self, alphabet: &Alphabet) -> Vec<String> {
        self.gens.format(alphabet)
    }

    /// Plain set union, which is again an upper set.
    pub fn union(&self, alphabet: &Alphabet, other: &UpperSet) -> UpperSet {
        UpperSet::from_antichain(min_antichain(
            alphabet,
            self.gens.iter().chain(other.gens.iter()).cloned(),
        ))
    }

    pub fn dfa(&self, alphabet: &Alphabet) -> Dfa {
        automata::upset_dfa(alphabet, self)
    }
}

/// A downward-closed set of words: either `Λ*` itself, which has no finite
/// generating set over a nonempty alphabet, or `↓gens`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LowerSet {
    All,
    Gens(Antichain),
}

impl LowerSet {
    pub fn new(alphabet: &Alphabet, gens: &[Word]) -> Result<LowerSet> {
        Ok(LowerSet::Gens(try_max_antichain(alphabet, gens)?))
    }

    pub fn parse<S: AsRef<str>>(alphabet: &Alphabet, literals: &[S]) -> Result<LowerSet> {
        LowerSet::new(alphabet, &alphabet.parse_words(literals)?)
    }

    pub fn contains(&self, alphabet: &Alphabet, word: &Word) -> bool {
        match self {
            LowerSet::All => true,
            LowerSet::Gens(gens) => gens.iter().any(|g| higman_leq(alphabet, word, g)),
        }
    }

    pub fn gens(&self) -> Option<&Antichain> {
        match self {
            LowerSet::All => None,
            LowerSet::Gens(g) => Some(g),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, LowerSet::Gens(g) if g.is_empty())
    }
}

/// Maximal common lower bounds of two words, i.e. the generators of
/// `↓a ∩ ↓b`.
///
/// A common lower bound of the suffixes `a[i..]` and `b[j..]` either skips
/// `a[i]`, skips `b[j]`, or starts with a letter below both. Only maximal
/// letters and maximal tails need to be kept.
pub fn common_lower_bounds(alphabet: &Alphabet, a: &Word, b: &Word) -> Antichain {
    let (n, m) = (a.len(), b.len());
    let width = m + 1;
    let mut table: Vec<Vec<Word>> = vec![Vec::new(); (n + 1) * width];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            if i == n || j == m {
                table[i * width + j] = vec![Word::empty()];
                continue;
            }
            let mut candidates: Vec<Word> = Vec::new();
            candidates.extend(table[(i + 1) * width + j].iter().cloned());
            candidates.extend(table[i * width + j + 1].iter().cloned());
            for &c in alphabet.maximal_lower_bounds(a.letters()[i], b.letters()[j]) {
                for tail in &table[(i + 1) * width + j + 1] {
                    candidates.push(Word::letter(c).concat(tail));
                }
            }
            table[i * width + j] = max_antichain(alphabet, candidates).into_words();
        }
    }
    Antichain(std::mem::take(&mut table[0]))
}

/// The lower cone `Y^∇ = ⋂_{y∈Y} ↓y`; `∅^∇ = Λ*`.
pub fn lower_cone(alphabet: &Alphabet, words: &[Word]) -> Result<LowerSet> {
    alphabet.check_words(words)?;
    let Some((first, rest)) = words.split_first() else {
        return Ok(LowerSet::All);
    };
    let mut acc = vec![first.clone()];
    for y in rest {
        let mut next = Vec::new();
        for a in &acc {
            next.extend(common_lower_bounds(alphabet, a, y).into_words());
        }
        acc = max_antichain(alphabet, next).into_words();
    }
    Ok(LowerSet::Gens(Antichain(acc)))
}

/// The upper cone `X^Δ = ⋂_{x∈X} ↑x`; `∅^Δ = Λ*`.
///
/// Built as the product of the per-word `↑x` automata accepting when every
/// component accepts, followed by minimal-word extraction.
pub fn upper_cone(alphabet: &Alphabet, words: &[Word]) -> Result<UpperSet> {
    alphabet.check_words(words)?;
    if words.is_empty() {
        return Ok(UpperSet::all());
    }
    let dfa = automata::common_upper_bounds_dfa(alphabet, words);
    Ok(UpperSet::from_antichain(automata::minimal_words_unchecked(
        alphabet, &dfa,
    )))
}

/// `Δ` applied to a lower set. `Λ*` has no upper bound.
pub fn upper_cone_of_lower(alphabet: &Alphabet, lower: &LowerSet) -> Result<UpperSet> {
    match lower {
        LowerSet::All => Ok(UpperSet::empty()),
        LowerSet::Gens(g) => upper_cone(alphabet, g.words()),
    }
}

/// `Y^∇Δ`, the smallest closed upper set containing `Y`.
pub fn closure_up(alphabet: &Alphabet, words: &[Word]) -> Result<UpperSet> {
    let lower = lower_cone(alphabet, words)?;
    upper_cone_of_lower(alphabet, &lower)
}

/// `X^Δ∇`, the smallest closed lower set containing `X`.
pub fn closure_down(alphabet: &Alphabet, words: &[Word]) -> Result<LowerSet> {
    let upper = upper_cone(alphabet, words)?;
    lower_cone(alphabet, upper.gens().words())
}

/// Whether `Z = Z^∇Δ`. The cones of an upper set equal the cones of its
/// generators.
pub fn is_closed_upper(alphabet: &Alphabet, z: &UpperSet) -> Result<bool> {
    Ok(&closure_up(alphabet, z.gens().words())? == z)
}

/// Whether `X = X^Δ∇`.
///
/// `Λ*` counts as closed: it is the top of the lattice of closed lower
/// sets, even though the raw composite sends it to `{□}` because its
/// upper cone is empty.
pub fn is_closed_lower(alphabet: &Alphabet, x: &LowerSet) -> Result<bool> {
    Ok(lower_closure_witness(alphabet, x)?.is_none())
}

/// A maximal generator of `X^Δ∇` lying outside `X`, if any.
pub fn lower_closure_witness(alphabet: &Alphabet, x: &LowerSet) -> Result<Option<Word>> {
    let LowerSet::Gens(gens) = x else {
        return Ok(None);
    };
    let closure = closure_down(alphabet, gens.words())?;
    let witness = match &closure {
        // ↓gens is finite, so some word just past the longest generator is outside
        LowerSet::All => {
            enumerate_words(alphabet, gens.iter().map(Word::len).max().unwrap_or(0) + 1)
                .find(|w| !x.contains(alphabet, w))
        }
        LowerSet::Gens(c) => c.iter().find(|w| !x.contains(alphabet, w)).cloned(),
    };
    Ok(witness)
}

/// `XY = {xy}`; for upper sets `↑A·↑B = ↑(AB)`. `∅` absorbs.
pub fn product_upper(alphabet: &Alphabet, x: &UpperSet, y: &UpperSet) -> UpperSet {
    let concats = x
        .gens()
        .iter()
        .flat_map(|a| y.gens().iter().map(move |b| a.concat(b)));
    UpperSet::from_antichain(min_antichain(alphabet, concats))
}

/// Product of lower sets; `Λ*` times a nonempty lower set is `Λ*`.
pub fn product_lower(alphabet: &Alphabet, x: &LowerSet, y: &LowerSet) -> LowerSet {
    match (x, y) {
        _ if x.is_empty() || y.is_empty() => LowerSet::Gens(Antichain::empty()),
        (LowerSet::All, _) | (_, LowerSet::All) => LowerSet::All,
        (LowerSet::Gens(a), LowerSet::Gens(b)) => {
            let concats = a.iter().flat_map(|u| b.iter().map(move |v| u.concat(v)));
            LowerSet::Gens(max_antichain(alphabet, concats))
        }
    }
}

/// Closed union `(⋃ Z_i)^∇Δ`, the infimum in the completion.
pub fn closed_union(alphabet: &Alphabet, sets: &[UpperSet]) -> Result<UpperSet> {
    let gens: Vec<Word> = sets.iter().flat_map(|z| z.gens().iter().cloned()).collect();
    closure_up(alphabet, &gens)
}

/// Set intersection of upper sets, the supremum in the completion.
pub fn intersect_upper(alphabet: &Alphabet, x: &UpperSet, y: &UpperSet) -> UpperSet {
    let mut gens = Vec::new();
    for a in x.gens() {
        for b in y.gens() {
            let pair = [a.clone(), b.clone()];
            let cone = upper_cone(alphabet, &pair).expect("words already validated");
            gens.extend(cone.gens.into_words());
        }
    }
    UpperSet::from_antichain(min_antichain(alphabet, gens))
}

/// Wire form of a set: `{"kind": "upper"|"lower"|"all", "gens": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetDoc {
    pub kind: SetKind,
    #[serde(default)]
    pub gens: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Upper,
    Lower,
    All,
}

impl SetDoc {
    pub fn from_upper(alphabet: &Alphabet, z: &UpperSet) -> SetDoc {
        SetDoc {
            kind: SetKind::Upper,
            gens: z.format(alphabet),
        }
    }

    pub fn from_lower(alphabet: &Alphabet, x: &LowerSet) -> SetDoc {
        match x {
            LowerSet::All => SetDoc {
                kind: SetKind::All,
                gens: Vec::new(),
            },
            LowerSet::Gens(g) => SetDoc {
                kind: SetKind::Lower,
                gens: g.format(alphabet),
            },
        }
    }

    pub fn to_upper(&self, alphabet: &Alphabet) -> Result<UpperSet> {
        match self.kind {
            SetKind::Upper => UpperSet::parse(alphabet, &self.gens),
            _ => Err(Error::Document(format!(
                "expected an upper set, found kind {:?}",
                self.kind
            ))),
        }
    }

    pub fn to_lower(&self, alphabet: &Alphabet) -> Result<LowerSet> {
        match self.kind {
            SetKind::Lower => LowerSet::parse(alphabet, &self.gens),
            SetKind::All => Ok(LowerSet::All),
            SetKind::Upper => Err(Error::Document(
                "expected a lower set, found kind Upper".to_string(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_words;

    fn pm() -> Alphabet {
        Alphabet::zigzag()
    }

    fn words(a: &Alphabet, lits: &[&str]) -> Vec<Word> {
        a.parse_words(lits).unwrap()
    }

    fn upper(a: &Alphabet, lits: &[&str]) -> UpperSet {
        UpperSet::parse(a, lits).unwrap()
    }

    fn lower(a: &Alphabet, lits: &[&str]) -> LowerSet {
        LowerSet::parse(a, lits).unwrap()
    }

    #[test]
    fn antichains() {
        let a = pm();
        let m = min_antichain(&a, words(&a, &["+", "++", "-"]));
        assert_eq!(m.format(&a), ["+", "-"]);
        let m = max_antichain(&a, words(&a, &["+", "++", "-"]));
        assert_eq!(m.format(&a), ["-", "++"]);
        assert!(min_antichain(&a, Vec::new()).is_empty());
        // idempotent
        let once = min_antichain(&a, words(&a, &["+-", "-", "++-", "+"]));
        assert_eq!(min_antichain(&a, once.words().to_vec()), once);
    }

    #[test]
    fn antichain_with_reversed_letter_indices() {
        // `hi` is listed first but sits above `lo`
        let a = Alphabet::new(&["h", "l"], &[("l", "h")]).unwrap();
        let m = min_antichain(&a, words(&a, &["h", "l"]));
        assert_eq!(m.format(&a), ["l"]);
        let m = max_antichain(&a, words(&a, &["hl", "lh", "hh", "l"]));
        assert_eq!(m.format(&a), ["hh"]);
    }

    #[test]
    fn lower_cone_worked_example() {
        let a = pm();
        let cone = lower_cone(&a, &words(&a, &["-+-+-", "+-+-+", "+--+-"])).unwrap();
        assert_eq!(cone, lower(&a, &["--+", "+-+-"]));
        assert_eq!(lower_cone(&a, &words(&a, &[""])).unwrap(), lower(&a, &[""]));
        assert_eq!(
            lower_cone(&a, &words(&a, &["+", "-"])).unwrap(),
            lower(&a, &[""])
        );
        assert_eq!(lower_cone(&a, &[]).unwrap(), LowerSet::All);
    }

    #[test]
    fn upper_cone_worked_example() {
        let a = pm();
        let cone = upper_cone(&a, &words(&a, &["--+", "+-+-"])).unwrap();
        assert_eq!(cone, upper(&a, &["-+-+-", "+-+-+", "+--+-"]));
        assert_eq!(
            upper_cone(&a, &words(&a, &["+", "-"])).unwrap(),
            upper(&a, &["+-", "-+"])
        );
        assert_eq!(upper_cone(&a, &words(&a, &[""])).unwrap(), UpperSet::all());
        assert_eq!(upper_cone(&a, &[]).unwrap(), UpperSet::all());
    }

    #[test]
    fn closures() {
        let a = pm();
        assert_eq!(
            closure_up(&a, &words(&a, &["+", "-"])).unwrap(),
            UpperSet::all()
        );
        let z = upper(&a, &["-+-+-", "+-+-+", "+--+-"]);
        assert!(is_closed_upper(&a, &z).unwrap());
        assert!(!is_closed_upper(&a, &upper(&a, &["+", "-"])).unwrap());
        assert!(is_closed_upper(&a, &UpperSet::empty()).unwrap());

        let chain = Alphabet::chain(&["a", "b"]).unwrap();
        assert_eq!(
            closure_up(&chain, &words(&chain, &["aa", "b"])).unwrap(),
            upper(&chain, &["a"])
        );

        let lat =
            Alphabet::new(&["a", "b", "c", "j"], &[("a", "j"), ("b", "j"), ("j", "c")]).unwrap();
        // α = a, β = b incomparable, both below γ = c, join j
        assert_eq!(
            closure_up(&lat, &words(&lat, &["ab", "c"])).unwrap(),
            upper(&lat, &["ab", "ba", "j"])
        );
    }

    #[test]
    fn lower_closures() {
        let v = Alphabet::new(&["l", "a", "b"], &[("l", "a"), ("l", "b")]).unwrap();
        let w = lower(&v, &["a", "b"]);
        let closure = closure_down(&v, &words(&v, &["a", "b"])).unwrap();
        assert!(closure.contains(&v, &v.parse_word("ll").unwrap()));
        assert!(!w.contains(&v, &v.parse_word("ll").unwrap()));
        assert!(!is_closed_lower(&v, &w).unwrap());
        assert_eq!(
            lower_closure_witness(&v, &w).unwrap(),
            Some(v.parse_word("ll").unwrap())
        );
        let a = pm();
        assert_eq!(
            closure_down(&a, &words(&a, &[""])).unwrap(),
            lower(&a, &[""])
        );
        assert_eq!(closure_down(&a, &[]).unwrap(), lower(&a, &[""]));
        assert!(is_closed_lower(&a, &LowerSet::All).unwrap());
        assert!(is_closed_lower(&a, &lower(&a, &["+-", "--"])).unwrap());
    }

    #[test]
    fn products() {
        let a = pm();
        assert_eq!(
            product_upper(&a, &upper(&a, &["+"]), &upper(&a, &["-"])),
            upper(&a, &["+-"])
        );
        assert_eq!(
            product_upper(&a, &UpperSet::all(), &UpperSet::all()),
            UpperSet::all()
        );
        assert_eq!(
            product_upper(&a, &UpperSet::empty(), &upper(&a, &["+"])),
            UpperSet::empty()
        );
        assert_eq!(
            product_lower(&a, &lower(&a, &["+"]), &lower(&a, &["-", "+"])),
            lower(&a, &["++", "+-"])
        );
        assert_eq!(
            product_lower(&a, &LowerSet::All, &lower(&a, &[""])),
            LowerSet::All
        );
        assert!(product_lower(&a, &LowerSet::All, &lower(&a, &[])).is_empty());
    }

    #[test]
    fn unions_and_intersections() {
        let a = pm();
        let plus = upper(&a, &["+"]);
        let minus = upper(&a, &["-"]);
        assert_eq!(
            closed_union(&a, &[plus.clone(), minus.clone()]).unwrap(),
            UpperSet::all()
        );
        let z = upper(&a, &["-+-+-", "+-+-+", "+--+-"]);
        assert_eq!(closed_union(&a, std::slice::from_ref(&z)).unwrap(), z);
        assert_eq!(intersect_upper(&a, &plus, &minus), upper(&a, &["+-", "-+"]));
        assert_eq!(intersect_upper(&a, &z, &UpperSet::all()), z);

        let chain = Alphabet::chain(&["a", "b"]).unwrap();
        assert_eq!(
            intersect_upper(&chain, &upper(&chain, &["a"]), &upper(&chain, &["b"])),
            upper(&chain, &["b"])
        );
        let d = Alphabet::new(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        assert_eq!(
            closed_union(&d, &[upper(&d, &["a"]), upper(&d, &["b"])]).unwrap(),
            upper(&d, &["0"])
        );
    }

    #[test]
    fn pairwise_lower_bounds_match_enumeration() {
        let alphabets = [
            pm(),
            Alphabet::new(&["#", "+", "-"], &[("#", "+"), ("#", "-")]).unwrap(),
            Alphabet::chain(&["a", "b"]).unwrap(),
        ];
        for a in &alphabets {
            let all: Vec<Word> = enumerate_words(a, 3).collect();
            for x in &all {
                for y in &all {
                    let expected = max_antichain(
                        a,
                        all.iter()
                            .filter(|u| higman_leq(a, u, x) && higman_leq(a, u, y))
                            .cloned(),
                    );
                    assert_eq!(common_lower_bounds(a, x, y), expected);
                }
            }
        }
    }

    #[test]
    fn set_documents() {
        let a = pm();
        let z = upper(&a, &["--", "+-"]);
        let doc = SetDoc::from_upper(&a, &z);
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(json, r#"{"kind":"upper","gens":["+-","--"]}"#);
        let back: SetDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_upper(&a).unwrap(), z);
        let all = SetDoc::from_lower(&a, &LowerSet::All);
        assert_eq!(all.to_lower(&a).unwrap(), LowerSet::All);
        assert!(all.to_upper(&a).is_err());
    }

    #[test]
    fn foreign_letters_are_rejected() {
        let a = pm();
        let big = Alphabet::antichain(&["x", "y", "z"]).unwrap();
        let w = big.parse_word("z").unwrap();
        assert!(matches!(
            lower_cone(&a, std::slice::from_ref(&w)),
            Err(Error::AlphabetMismatch { index: 2, size: 2 })
        ));
        assert!(upper_cone(&a, std::slice::from_ref(&w)).is_err());
        assert!(UpperSet::new(&a, &[w]).is_err());
    }
}
