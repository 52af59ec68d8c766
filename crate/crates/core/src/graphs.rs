//! Oriented graphs and their word-valued distances.
//!
//! A zigzag is coded by a word over `{+, -}`: `+` for an arc traversed
//! forward, `-` for an arc traversed backward. The distance `d(a, b)` is
//! the set of codes of zigzags mapping homomorphically into the graph with
//! ends on `a` and `b`. Since every vertex carries an implicit loop, an arc
//! of the zigzag may collapse onto a vertex, so `d(a, b)` is the set of
//! words read along lazy walks from `a` to `b`.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automata::{minimal_words, rule_violation, ClosureKind, Dfa};
use crate::cones::{lower_cone, LowerSet, SetDoc, UpperSet};
use crate::error::{Error, Result};
use crate::poset::{Alphabet, Letter};
use crate::rules::Rule;
use crate::words::Word;

/// A reflexive digraph with at most one arc between two vertices. Loops
/// are implicit and never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    succ: Vec<BTreeSet<usize>>,
    pred: Vec<BTreeSet<usize>>,
}

/// Wire form: `{"vertices": [...], "arcs": [[u, v], ...]}` with `[u, v]`
/// meaning `u → v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arcs: Vec<(String, String)>,
}

/// Validates vertices and arcs: no duplicate vertices, no explicit loops,
/// no pair of opposite arcs. Repeated arcs are merged.
pub fn validate_graph<S: AsRef<str>>(vertices: &[S], arcs: &[(S, S)]) -> Result<OrientedGraph> {
    let mut names = Vec::with_capacity(vertices.len());
    let mut index = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        let v = v.as_ref();
        if index.insert(v.to_string(), i).is_some() {
            return Err(Error::DuplicateVertex(v.to_string()));
        }
        names.push(v.to_string());
    }
    let n = names.len();
    let mut succ = vec![BTreeSet::new(); n];
    let mut pred = vec![BTreeSet::new(); n];
    let lookup = |v: &str| {
        index
            .get(v)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    };
    for (u, v) in arcs {
        let (u, v) = (lookup(u.as_ref())?, lookup(v.as_ref())?);
        if u == v {
            return Err(Error::Loop(names[u].clone()));
        }
        if succ[v].contains(&u) {
            return Err(Error::DoubleArc(names[u].clone(), names[v].clone()));
        }
        succ[u].insert(v);
        pred[v].insert(u);
    }
    Ok(OrientedGraph {
        names,
        index,
        succ,
        pred,
    })
}

impl OrientedGraph {
    pub fn from_doc(doc: &GraphDoc) -> Result<OrientedGraph> {
        validate_graph(&doc.vertices, &doc.arcs)
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            vertices: self.names.clone(),
            arcs: self
                .arcs()
                .map(|(u, v)| (self.names[u].clone(), self.names[v].clone()))
                .collect(),
        }
    }

    /// The zigzag coded by `code` over [`Alphabet::zigzag`], on vertices
    /// `v0, …, vn`.
    pub fn zigzag(code: &Word) -> OrientedGraph {
        let vertices: Vec<String> = (0..=code.len()).map(|i| format!("v{i}")).collect();
        let arcs: Vec<(String, String)> = code
            .letters()
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let (a, b) = (vertices[i].clone(), vertices[i + 1].clone());
                if l.index() == 0 {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        validate_graph(&vertices, &arcs).expect("a zigzag is an oriented graph")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.succ[u].contains(&v)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Vertices one lazy step from `v` reading `letter`: `v` itself and its
    /// out-neighbours for `+`, in-neighbours for `-`.
    pub fn lazy_step(&self, v: usize, letter: Letter) -> impl Iterator<Item = usize> + '_ {
        let next = if letter.index() == 0 {
            &self.succ[v]
        } else {
            &self.pred[v]
        };
        std::iter::once(v).chain(next.iter().copied())
    }
}

/// Arc direction along a zigzag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

fn plus() -> Letter {
    Letter::new(0)
}

fn minus() -> Letter {
    Letter::new(1)
}

/// Code over [`Alphabet::zigzag`] of a zigzag given by arc directions.
pub fn code_zigzag(directions: &[Direction]) -> Word {
    directions
        .iter()
        .map(|d| match d {
            Direction::Forward => plus(),
            Direction::Backward => minus(),
        })
        .collect()
}

/// The code of the same zigzag walked from the other end.
pub fn reverse_code(code: &Word) -> Word {
    code.letters()
        .iter()
        .rev()
        .map(|l| if l.index() == 0 { minus() } else { plus() })
        .collect()
}

/// Automaton for `d(a, b)` over [`Alphabet::zigzag`], by subset
/// construction over lazy walks from `a`.
pub fn distance_dfa(g: &OrientedGraph, a: &str, b: &str) -> Result<Dfa> {
    let (a, b) = (g.vertex(a)?, g.vertex(b)?);
    let mut start = vec![false; g.len()];
    start[a] = true;
    let dfa = Dfa::explore(
        2,
        start,
        |set: &Vec<bool>, l| {
            let mut next = vec![false; g.len()];
            for v in (0..g.len()).filter(|&v| set[v]) {
                for w in g.lazy_step(v, l) {
                    next[w] = true;
                }
            }
            next
        },
        |set| set[b],
        ClosureKind::Upward,
    );
    Ok(dfa.minimize())
}

/// The generators of `d(a, b)`.
pub fn distance_antichain(g: &OrientedGraph, a: &str, b: &str) -> Result<UpperSet> {
    let alphabet = Alphabet::zigzag();
    let gens = minimal_words(&alphabet, &distance_dfa(g, a, b)?)?;
    UpperSet::new(&alphabet, gens.words())
}

/// `d(a, b)^∇`, the codes of zigzags below every zigzag in `d(a, b)`.
pub fn distance_lower_cone(g: &OrientedGraph, a: &str, b: &str) -> Result<LowerSet> {
    let d = distance_antichain(g, a, b)?;
    lower_cone(&Alphabet::zigzag(), d.gens().words())
}

/// `None` when `d(a, b)` is closed, else a shortest word the cancellation
/// rule forces into it. Over `{+, -}` cancellation decides closedness.
pub fn is_distance_closed(g: &OrientedGraph, a: &str, b: &str) -> Result<Option<Word>> {
    let dfa = distance_dfa(g, a, b)?;
    Ok(rule_violation(
        &Alphabet::zigzag(),
        &dfa,
        Rule::Cancellation,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceEntry {
    pub from: String,
    pub to: String,
    pub distance: UpperSet,
    pub lower_cone: LowerSet,
    pub witness: Option<Word>,
}

impl DistanceEntry {
    pub fn closed(&self) -> bool {
        self.witness.is_none()
    }
}

/// All ordered-pair distances with their closedness verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    pub entries: Vec<DistanceEntry>,
}

impl DistanceTable {
    /// Whether every distance is closed, which holds exactly when the graph
    /// embeds isometrically into a product of zigzags.
    pub fn embeddable(&self) -> bool {
        self.entries.iter().all(DistanceEntry::closed)
    }

    pub fn failing(&self) -> impl Iterator<Item = &DistanceEntry> {
        self.entries.iter().filter(|e| !e.closed())
    }

    pub fn get(&self, from: &str, to: &str) -> Option<&DistanceEntry> {
        self.entries.iter().find(|e| e.from == from && e.to == to)
    }

    pub fn to_doc(&self) -> DistanceTableDoc {
        let alphabet = Alphabet::zigzag();
        let entries: Vec<DistanceEntryDoc> = self
            .entries
            .iter()
            .map(|e| DistanceEntryDoc {
                from: e.from.clone(),
                to: e.to.clone(),
                distance: e.distance.format(&alphabet),
                lower_cone: SetDoc::from_lower(&alphabet, &e.lower_cone),
                closed: e.closed(),
                witness: e.witness.as_ref().map(|w| alphabet.format_word(w)),
            })
            .collect();
        DistanceTableDoc {
            embeddable: self.embeddable(),
            failing: entries.iter().filter(|e| !e.closed).cloned().collect(),
            entries,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceEntryDoc {
    pub from: String,
    pub to: String,
    pub distance: Vec<String>,
    pub lower_cone: SetDoc,
    pub closed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceTableDoc {
    pub embeddable: bool,
    pub failing: Vec<DistanceEntryDoc>,
    pub entries: Vec<DistanceEntryDoc>,
}

/// Distances between all ordered pairs, computed in parallel.
pub fn distance_table(g: &OrientedGraph) -> Result<DistanceTable> {
    let pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|a| (0..g.len()).map(move |b| (a, b)))
        .collect();
    let entries = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (from, to) = (&g.names[a], &g.names[b]);
            let distance = distance_antichain(g, from, to)?;
            debug_assert!(
                a == b
                    || distance.gens().len() != 2
                    || distance.gens().iter().any(|w| w.len() != 1),
                "distance equals all nonempty words"
            );
            Ok(DistanceEntry {
                from: from.clone(),
                to: to.clone(),
                lower_cone: lower_cone(&Alphabet::zigzag(), distance.gens().words())?,
                witness: is_distance_closed(g, from, to)?,
                distance,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DistanceTable { entries })
}

/// Verdict on isometric embeddability into a product of zigzags.
pub fn embeddable_verdict(g: &OrientedGraph) -> Result<DistanceTable> {
    distance_table(g)
}
