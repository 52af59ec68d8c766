//! Brute-force oracles shared by the integration tests. None of these go
//! through the automata or the cone algorithms of the library.
#![allow(dead_code)]

use macneille_core::graphs::OrientedGraph;
use macneille_core::words::enumerate_words;
use macneille_core::{Alphabet, Word};
use rand::seq::SliceRandom;
use rand::Rng;

/// Exhaustive embedding search over increasing position tuples.
pub fn embeds(a: &Alphabet, w: &Word, x: &Word) -> bool {
    fn go(a: &Alphabet, w: &[macneille_core::Letter], x: &[macneille_core::Letter]) -> bool {
        match w.split_first() {
            None => true,
            Some((&first, rest)) => {
                (0..x.len()).any(|i| a.leq(first, x[i]) && go(a, rest, &x[i + 1..]))
            }
        }
    }
    w.len() <= x.len() && go(a, w.letters(), x.letters())
}

pub fn in_upper(a: &Alphabet, gens: &[Word], w: &Word) -> bool {
    gens.iter().any(|g| embeds(a, g, w))
}

pub fn in_lower(a: &Alphabet, gens: &[Word], w: &Word) -> bool {
    gens.iter().any(|g| embeds(a, w, g))
}

/// `Y^∇` listed in full: every word below all of `Y` (`Y` nonempty).
pub fn lower_cone_words(a: &Alphabet, y: &[Word]) -> Vec<Word> {
    let bound = y.iter().map(Word::len).min().expect("nonempty");
    enumerate_words(a, bound)
        .filter(|u| y.iter().all(|g| embeds(a, u, g)))
        .collect()
}

/// Membership in `Y^∇Δ` by definition; `∅^∇Δ = ∅`.
pub fn in_closure_up(a: &Alphabet, y: &[Word], w: &Word) -> bool {
    if y.is_empty() {
        return false;
    }
    lower_cone_words(a, y).iter().all(|u| embeds(a, u, w))
}

/// Minimal words of `X^Δ` (`X` nonempty), found among words of length at
/// most `Σ|x|`, which bounds every minimal common upper bound.
pub fn upper_cone_minimal(a: &Alphabet, x: &[Word]) -> Vec<Word> {
    let bound: usize = x.iter().map(Word::len).sum();
    let ups: Vec<Word> = enumerate_words(a, bound)
        .filter(|w| x.iter().all(|g| embeds(a, g, w)))
        .collect();
    ups.iter()
        .filter(|w| !ups.iter().any(|v| v != *w && embeds(a, v, w)))
        .cloned()
        .collect()
}

/// Membership in `X^Δ∇` by definition, for nonempty `X`.
pub fn in_closure_down(a: &Alphabet, x: &[Word], w: &Word) -> bool {
    let ups = upper_cone_minimal(a, x);
    ups.iter().all(|u| embeds(a, w, u))
}

/// Words read along lazy walks from `a` to `b`, by direct recursion.
pub fn lazy_walk_accepts(g: &OrientedGraph, a: usize, b: usize, w: &Word) -> bool {
    fn go(g: &OrientedGraph, v: usize, b: usize, rest: &[macneille_core::Letter]) -> bool {
        match rest.split_first() {
            None => v == b,
            Some((&l, tail)) => (0..g.len()).any(|u| {
                let ok = u == v
                    || if l.index() == 0 {
                        g.has_arc(v, u)
                    } else {
                        g.has_arc(u, v)
                    };
                ok && go(g, u, b, tail)
            }),
        }
    }
    go(g, a, b, w.letters())
}

/// Whether the zigzag coded by `w` maps homomorphically into `g` with its
/// ends on `a` and `b`: enumerates every vertex map of the path.
pub fn zigzag_maps(g: &OrientedGraph, a: usize, b: usize, w: &Word) -> bool {
    let n = w.len();
    let mut image = vec![0usize; n + 1];
    image[0] = a;
    fn assign(g: &OrientedGraph, w: &Word, b: usize, i: usize, image: &mut Vec<usize>) -> bool {
        let n = w.len();
        if i > n {
            return image[n] == b;
        }
        for v in 0..g.len() {
            if i == 0 && v != image[0] {
                continue;
            }
            if i > 0 {
                let (u, plus) = (image[i - 1], w.letters()[i - 1].index() == 0);
                let arc_ok = u == v
                    || if plus {
                        g.has_arc(u, v)
                    } else {
                        g.has_arc(v, u)
                    };
                if !arc_ok {
                    continue;
                }
            }
            image[i] = v;
            if assign(g, w, b, i + 1, image) {
                return true;
            }
        }
        false
    }
    assign(g, w, b, 0, &mut image)
}

pub fn random_word<R: Rng>(rng: &mut R, a: &Alphabet, max_len: usize) -> Word {
    let letters: Vec<_> = a.letters().collect();
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *letters.choose(rng).unwrap()).collect()
}

pub fn random_words<R: Rng>(rng: &mut R, a: &Alphabet, count: usize, max_len: usize) -> Vec<Word> {
    (0..count).map(|_| random_word(rng, a, max_len)).collect()
}

/// `count` distinct random words of length at most `max_len`.
pub fn random_distinct_words<R: Rng>(
    rng: &mut R,
    a: &Alphabet,
    count: usize,
    max_len: usize,
) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    while out.len() < count {
        let w = random_word(rng, a, max_len);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

pub mod alphabets {
    use macneille_core::Alphabet;

    pub fn antichain2() -> Alphabet {
        Alphabet::zigzag()
    }

    pub fn chain2() -> Alphabet {
        Alphabet::chain(&["a", "b"]).unwrap()
    }

    pub fn chain3() -> Alphabet {
        Alphabet::chain(&["a", "b", "c"]).unwrap()
    }

    /// `a < b` beside `c < d`.
    pub fn two_chains() -> Alphabet {
        Alphabet::new(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap()
    }

    /// `a, b < c < d`: incomparable letters have no common lower bound.
    pub fn dual_forest() -> Alphabet {
        Alphabet::new(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("c", "d")]).unwrap()
    }

    pub fn diamond() -> Alphabet {
        Alphabet::new(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap()
    }

    /// `# < +, # < -`: a bottom below two maximal letters.
    pub fn sharp() -> Alphabet {
        Alphabet::new(&["#", "+", "-"], &[("#", "+"), ("#", "-")]).unwrap()
    }

    /// `a, b < c`.
    pub fn wedge() -> Alphabet {
        Alphabet::new(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap()
    }

    /// `a, b < c, d`: two minimal upper bounds, no join.
    pub fn bowtie() -> Alphabet {
        Alphabet::new(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("b", "c"), ("a", "d"), ("b", "d")],
        )
        .unwrap()
    }

    /// Every alphabet used across the suites, by name.
    pub fn all() -> Vec<(&'static str, Alphabet)> {
        vec![
            ("antichain2", antichain2()),
            ("chain2", chain2()),
            ("chain3", chain3()),
            ("two_chains", two_chains()),
            ("dual_forest", dual_forest()),
            ("diamond", diamond()),
            ("sharp", sharp()),
            ("wedge", wedge()),
            ("bowtie", bowtie()),
        ]
    }
}

/// Builds a word from letter indices, reduced modulo the alphabet size.
pub fn word_from_indices(a: &Alphabet, indices: &[usize]) -> Word {
    let letters: Vec<_> = a.letters().collect();
    indices
        .iter()
        .map(|&i| letters[i % letters.len()])
        .collect()
}
