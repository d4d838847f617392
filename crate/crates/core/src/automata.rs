//! Rational subsets of free groups as finite automata.
//!
//! The decision pipeline for "does `S` generate `F_n` as a semigroup?" is
//!
//! ```text
//! flower(S)  →  saturate  →  restrict to reduced words  →  determinize
//!                                                        →  compare with the reduced-word recognizer
//! ```
//!
//! Saturation adds an ε-edge `p → q` whenever a path `p –x→ p′ ⇒ε* q′ –x⁻¹→ q`
//! exists, so that the reduced form of every accepted word becomes readable
//! along a path of the saturated automaton. Intersecting with the set of all
//! reduced words then yields a recognizer for the reduced forms of `S⁺`, and
//! `S⁺ = F_n` iff that language is the full set of reduced words.
//!
//! [`stallings_fold`] provides the companion *group*-generation check: the
//! folded wedge of loops is the rose on all `n` letters iff `⟨S⟩ = F_n`.

use crate::words::{ReducedWord, Sign, SignedGenerator, Word};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomataError {
    #[error("flower automaton requires a nonempty set of words")]
    EmptyWordSet,
    #[error("flower automaton rejects the empty word as a petal")]
    EmptyWordPetal,
    #[error("word uses generator {index} but the alphabet has rank {rank}")]
    RankMismatch { index: usize, rank: usize },
}

/// Dense encoding of a signed letter: `2·index` for `a_i`, `2·index + 1`
/// for `a_i⁻¹`.
fn letter_id(g: SignedGenerator) -> usize {
    2 * g.index
        + match g.sign {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
}

fn letter_from_id(id: usize) -> SignedGenerator {
    SignedGenerator {
        index: id / 2,
        sign: if id.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        },
    }
}

/// Nondeterministic automaton over the inverse-closed alphabet of a rank-`n`
/// free group, with ε-moves. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Nfa {
    state_count: usize,
    rank: usize,
    /// Per-state adjacency; `None` labels are ε-moves.
    transitions: Vec<Vec<(Option<SignedGenerator>, usize)>>,
    initial: BTreeSet<usize>,
    accepting: BTreeSet<usize>,
}

impl Nfa {
    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn epsilon_edge_count(&self) -> usize {
        self.transitions
            .iter()
            .map(|out| out.iter().filter(|(l, _)| l.is_none()).count())
            .sum()
    }

    fn epsilon_closure(&self, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut closure = seed.clone();
        let mut queue: VecDeque<usize> = seed.iter().copied().collect();
        while let Some(state) = queue.pop_front() {
            for &(label, target) in &self.transitions[state] {
                if label.is_none() && closure.insert(target) {
                    queue.push_back(target);
                }
            }
        }
        closure
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let mut current = self.epsilon_closure(&self.initial);
        for &letter in word.letters() {
            let mut next = BTreeSet::new();
            for &state in &current {
                for &(label, target) in &self.transitions[state] {
                    if label == Some(letter) {
                        next.insert(target);
                    }
                }
            }
            current = self.epsilon_closure(&next);
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|s| self.accepting.contains(s))
    }
}

/// Deterministic automaton with a total transition function over the `2n`
/// signed letters.
#[derive(Debug, Clone)]
pub struct Dfa {
    state_count: usize,
    rank: usize,
    /// `transitions[state][letter_id]`.
    transitions: Vec<Vec<usize>>,
    initial: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let mut state = self.initial;
        for &letter in word.letters() {
            state = self.transitions[state][letter_id(letter)];
        }
        self.accepting[state]
    }
}

/// Summary of the automata built during a free-group decision; surfaced in
/// CLI reports.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AutomatonStats {
    pub flower_states: usize,
    pub saturated_epsilon_edges: usize,
    pub dfa_states: usize,
}

/// Recognizer for `S⁺` as unreduced words: one petal per element of `S`
/// between a start hub and an accept hub, with an ε-edge looping back.
/// Petals may be unreduced; the empty word is rejected.
pub fn flower_automaton(words: &[Word], rank: usize) -> Result<Nfa, AutomataError> {
    if words.is_empty() {
        return Err(AutomataError::EmptyWordSet);
    }
    for word in words {
        if word.is_empty() {
            return Err(AutomataError::EmptyWordPetal);
        }
        if let Some(bad) = word.letters().iter().find(|l| l.index >= rank) {
            return Err(AutomataError::RankMismatch {
                index: bad.index,
                rank,
            });
        }
    }

    // State 0: start hub (initial). State 1: accept hub, ε-edge back to 0.
    let mut transitions: Vec<Vec<(Option<SignedGenerator>, usize)>> = vec![Vec::new(), Vec::new()];
    transitions[1].push((None, 0));
    for word in words {
        let letters = word.letters();
        let mut current = 0usize;
        for (pos, &letter) in letters.iter().enumerate() {
            let target = if pos + 1 == letters.len() {
                1
            } else {
                transitions.push(Vec::new());
                transitions.len() - 1
            };
            transitions[current].push((Some(letter), target));
            current = target;
        }
    }
    let state_count = transitions.len();
    Ok(Nfa {
        state_count,
        rank,
        transitions,
        initial: BTreeSet::from([0]),
        accepting: BTreeSet::from([1]),
    })
}

/// Benois saturation: close under the rule "`p –x→ p′ ⇒ε* q′ –x⁻¹→ q`
/// yields ε-edge `p → q`". Terminates since at most `|Q|²` ε-edges can be
/// added.
pub fn benois_saturate(nfa: &Nfa) -> Nfa {
    let mut result = nfa.clone();
    let mut epsilon: HashSet<(usize, usize)> = HashSet::new();
    for (state, out) in result.transitions.iter().enumerate() {
        for &(label, target) in out {
            if label.is_none() {
                epsilon.insert((state, target));
            }
        }
    }

    loop {
        let mut added = Vec::new();
        for p in 0..result.state_count {
            for &(label, p_prime) in &result.transitions[p] {
                let Some(x) = label else { continue };
                let closure = result.epsilon_closure(&BTreeSet::from([p_prime]));
                for q_prime in closure {
                    for &(label2, q) in &result.transitions[q_prime] {
                        if label2 == Some(x.inverse()) && !epsilon.contains(&(p, q)) {
                            added.push((p, q));
                            epsilon.insert((p, q));
                        }
                    }
                }
            }
        }
        if added.is_empty() {
            return result;
        }
        for (p, q) in added {
            result.transitions[p].push((None, q));
        }
    }
}

/// Intersection with the set of all reduced words, by product with the
/// `2n+1`-state reduced-word recognizer (ε-moves leave the recognizer
/// component untouched).
pub fn restrict_to_reduced(nfa: &Nfa) -> Nfa {
    // Recognizer component: 0 = "no last letter", 1 + id = "last letter id".
    let forbidden_after = |component: usize, letter: SignedGenerator| -> bool {
        component > 0 && letter_from_id(component - 1).cancels(letter)
    };

    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut transitions: Vec<Vec<(Option<SignedGenerator>, usize)>> = Vec::new();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let mut initial = BTreeSet::new();
    for &s in &nfa.initial {
        let pair = (s, 0);
        index.insert(pair, transitions.len());
        transitions.push(Vec::new());
        initial.insert(index[&pair]);
        queue.push_back(pair);
    }
    while let Some((s, c)) = queue.pop_front() {
        let from = index[&(s, c)];
        let outgoing: Vec<(Option<SignedGenerator>, usize)> = nfa.transitions[s].clone();
        for (label, target) in outgoing {
            let next_component = match label {
                None => c,
                Some(letter) => {
                    if forbidden_after(c, letter) {
                        continue;
                    }
                    1 + letter_id(letter)
                }
            };
            let pair = (target, next_component);
            let to = *index.entry(pair).or_insert_with(|| {
                transitions.push(Vec::new());
                queue.push_back(pair);
                transitions.len() - 1
            });
            transitions[from].push((label, to));
        }
    }
    let accepting = index
        .iter()
        .filter(|((s, _), _)| nfa.accepting.contains(s))
        .map(|(_, &id)| id)
        .collect();
    Nfa {
        state_count: transitions.len(),
        rank: nfa.rank,
        transitions,
        initial,
        accepting,
    }
}

/// The total DFA accepting precisely the reduced words of rank `n`
/// (including ε): a start state, one live state per signed letter, and a
/// sink.
pub fn all_reduced_words(rank: usize) -> Dfa {
    let letters = 2 * rank;
    let sink = letters + 1;
    let state_count = letters + 2;
    let mut transitions = vec![vec![sink; letters]; state_count];
    let mut accepting = vec![true; state_count];
    accepting[sink] = false;
    for (id, target) in transitions[0].iter_mut().enumerate() {
        *target = 1 + id;
    }
    for last in 0..letters {
        let last_letter = letter_from_id(last);
        for (id, target) in transitions[1 + last].iter_mut().enumerate() {
            let letter = letter_from_id(id);
            *target = if last_letter.cancels(letter) {
                sink
            } else {
                1 + id
            };
        }
    }
    Dfa {
        state_count,
        rank,
        transitions,
        initial: 0,
        accepting,
    }
}

/// ε-closure-aware subset construction.
pub fn determinize(nfa: &Nfa) -> Dfa {
    let letters = 2 * nfa.rank;
    let start = nfa.epsilon_closure(&nfa.initial);
    let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let mut subsets: Vec<BTreeSet<usize>> = Vec::new();
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    index.insert(start.clone(), 0);
    subsets.push(start);
    transitions.push(vec![usize::MAX; letters]);
    let mut next_unprocessed = 0;
    while next_unprocessed < subsets.len() {
        let current = subsets[next_unprocessed].clone();
        for id in 0..letters {
            let letter = letter_from_id(id);
            let mut moved = BTreeSet::new();
            for &state in &current {
                for &(label, target) in &nfa.transitions[state] {
                    if label == Some(letter) {
                        moved.insert(target);
                    }
                }
            }
            let closed = nfa.epsilon_closure(&moved);
            let target_id = *index.entry(closed.clone()).or_insert_with(|| {
                subsets.push(closed);
                transitions.push(vec![usize::MAX; letters]);
                subsets.len() - 1
            });
            transitions[next_unprocessed][id] = target_id;
        }
        next_unprocessed += 1;
    }
    let accepting = subsets
        .iter()
        .map(|subset| subset.iter().any(|s| nfa.accepting.contains(s)))
        .collect();
    Dfa {
        state_count: subsets.len(),
        rank: nfa.rank,
        transitions,
        initial: 0,
        accepting,
    }
}

/// Language equality of two total DFAs over the same alphabet, by
/// synchronized-product search for a distinguishing state pair.
pub fn equivalent(left: &Dfa, right: &Dfa) -> bool {
    assert_eq!(left.rank, right.rank, "alphabet ranks must match");
    let letters = 2 * left.rank;
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([(left.initial, right.initial)]);
    seen.insert((left.initial, right.initial));
    while let Some((a, b)) = queue.pop_front() {
        if left.accepting[a] != right.accepting[b] {
            return false;
        }
        for id in 0..letters {
            let pair = (left.transitions[a][id], right.transitions[b][id]);
            if seen.insert(pair) {
                queue.push_back(pair);
            }
        }
    }
    true
}

pub fn is_empty(dfa: &Dfa) -> bool {
    let letters = 2 * dfa.rank;
    let mut seen = HashSet::from([dfa.initial]);
    let mut queue = VecDeque::from([dfa.initial]);
    while let Some(state) = queue.pop_front() {
        if dfa.accepting[state] {
            return false;
        }
        for id in 0..letters {
            let target = dfa.transitions[state][id];
            if seen.insert(target) {
                queue.push_back(target);
            }
        }
    }
    true
}

/// Deduplicated, ε-free copy of the input set. ε contributes nothing to
/// `S⁺` for a nontrivial group, so it is dropped.
fn sanitize(words: &[ReducedWord]) -> Vec<ReducedWord> {
    let set: BTreeSet<ReducedWord> = words.iter().filter(|w| !w.is_empty()).cloned().collect();
    set.into_iter().collect()
}

/// `S⁺ = F_n`?
pub fn decide_semigroup_generates_free(words: &[ReducedWord], rank: usize) -> bool {
    decide_semigroup_generates_free_with_stats(words, rank).0
}

pub fn decide_semigroup_generates_free_with_stats(
    words: &[ReducedWord],
    rank: usize,
) -> (bool, Option<AutomatonStats>) {
    if rank == 0 {
        return (!words.is_empty(), None);
    }
    let sanitized: Vec<Word> = sanitize(words).into_iter().map(|w| w.as_word()).collect();
    if sanitized.is_empty() {
        return (false, None);
    }
    let flower = flower_automaton(&sanitized, rank).expect("sanitized set is valid");
    let saturated = benois_saturate(&flower);
    let reduced_only = restrict_to_reduced(&saturated);
    let dfa = determinize(&reduced_only);
    let stats = AutomatonStats {
        flower_states: flower.state_count(),
        saturated_epsilon_edges: saturated.epsilon_edge_count(),
        dfa_states: dfa.state_count(),
    };
    (equivalent(&dfa, &all_reduced_words(rank)), Some(stats))
}

/// `S` is a semigroup basis of `F_n` iff it generates and has the minimum
/// size `n + 1` (for `n ≥ 1`; the trivial group's unique basis is `{ε}`).
pub fn decide_semigroup_basis_free(words: &[ReducedWord], rank: usize) -> bool {
    let distinct: BTreeSet<&ReducedWord> = words.iter().collect();
    if rank == 0 {
        return distinct.len() == 1 && words[0].is_empty();
    }
    distinct.len() == rank + 1 && decide_semigroup_generates_free(words, rank)
}

/// Folded Stallings graph of the subgroup `⟨S⟩ ≤ F_n`: edges carry positive
/// generator labels, no vertex has two incident equally-labeled edges with
/// the same orientation.
#[derive(Debug, Clone)]
pub struct CoreGraph {
    pub vertex_count: usize,
    /// `(source, generator index, target)` with positive orientation.
    pub edges: Vec<(usize, usize, usize)>,
    pub basepoint: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[rb] = ra;
        true
    }
}

/// Fold the wedge of loops spelled by `S`.
pub fn stallings_fold(words: &[ReducedWord], _rank: usize) -> CoreGraph {
    // Wedge: walk each word from the basepoint, back to the basepoint.
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut vertex_count = 1usize;
    for word in sanitize(words) {
        let letters = word.letters();
        let mut current = 0usize;
        for (pos, &letter) in letters.iter().enumerate() {
            let target = if pos + 1 == letters.len() {
                0
            } else {
                vertex_count += 1;
                vertex_count - 1
            };
            match letter.sign {
                Sign::Plus => edges.push((current, letter.index, target)),
                Sign::Minus => edges.push((target, letter.index, current)),
            }
            current = target;
        }
    }

    // Fold: merge targets of equally-labeled edges leaving (or entering) the
    // same vertex until no conflict remains.
    let mut uf = UnionFind::new(vertex_count);
    loop {
        let mut merged = false;
        let mut by_source: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut by_target: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(u, label, v) in &edges {
            let (ru, rv) = (uf.find(u), uf.find(v));
            if let Some(&other) = by_source.get(&(ru, label)) {
                if uf.union(other, rv) {
                    merged = true;
                    break;
                }
            } else {
                by_source.insert((ru, label), rv);
            }
            if let Some(&other) = by_target.get(&(rv, label)) {
                if uf.union(other, ru) {
                    merged = true;
                    break;
                }
            } else {
                by_target.insert((rv, label), ru);
            }
        }
        if !merged {
            break;
        }
    }

    // Compact to dense vertex ids and deduplicate parallel edges.
    let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
    let basepoint_root = uf.find(0);
    relabel.insert(basepoint_root, 0);
    let mut folded_edges: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    let mut next_id = 1usize;
    let mut id_of = |root: usize, relabel: &mut BTreeMap<usize, usize>| -> usize {
        *relabel.entry(root).or_insert_with(|| {
            next_id += 1;
            next_id - 1
        })
    };
    for &(u, label, v) in &edges {
        let ru = uf.find(u);
        let rv = uf.find(v);
        let su = id_of(ru, &mut relabel);
        let sv = id_of(rv, &mut relabel);
        folded_edges.insert((su, label, sv));
    }
    CoreGraph {
        vertex_count: relabel.len().max(1),
        edges: folded_edges.into_iter().collect(),
        basepoint: 0,
    }
}

impl CoreGraph {
    /// Drop hanging trees: repeatedly delete non-basepoint vertices of
    /// degree ≤ 1.
    pub fn trim(&self) -> CoreGraph {
        let mut edges = self.edges.clone();
        loop {
            let mut degree = vec![0usize; self.vertex_count];
            for &(u, _, v) in &edges {
                degree[u] += 1;
                degree[v] += 1;
            }
            let before = edges.len();
            edges.retain(|&(u, _, v)| {
                !((u != self.basepoint && degree[u] <= 1)
                    || (v != self.basepoint && degree[v] <= 1))
            });
            if edges.len() == before {
                break;
            }
        }
        let mut live: BTreeSet<usize> = BTreeSet::from([self.basepoint]);
        for &(u, _, v) in &edges {
            live.insert(u);
            live.insert(v);
        }
        let relabel: BTreeMap<usize, usize> = live
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        CoreGraph {
            vertex_count: live.len(),
            edges: edges
                .into_iter()
                .map(|(u, label, v)| (relabel[&u], label, relabel[&v]))
                .collect(),
            basepoint: relabel[&self.basepoint],
        }
    }

    /// Rose check: a single vertex carrying loops for all `rank` labels.
    pub fn is_rose(&self, rank: usize) -> bool {
        let trimmed = self.trim();
        if trimmed.vertex_count != 1 {
            return false;
        }
        let labels: BTreeSet<usize> = trimmed.edges.iter().map(|&(_, l, _)| l).collect();
        labels.len() == rank && labels.iter().all(|&l| l < rank)
    }
}

/// `⟨S⟩ = F_n`?
pub fn decide_group_generates_free(words: &[ReducedWord], rank: usize) -> bool {
    if rank == 0 {
        return true;
    }
    stallings_fold(words, rank).is_rose(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rw(s: &str) -> ReducedWord {
        ReducedWord::parse(s).unwrap()
    }

    fn set(words: &[&str]) -> Vec<ReducedWord> {
        words.iter().map(|s| rw(s)).collect()
    }

    fn wset(words: &[&str]) -> Vec<Word> {
        words.iter().map(|s| Word::parse(s).unwrap()).collect()
    }

    #[test]
    fn flower_single_generator() {
        let nfa = flower_automaton(&wset(&["a"]), 1).unwrap();
        assert!(nfa.accepts(&Word::parse("a").unwrap()));
        assert!(nfa.accepts(&Word::parse("aa").unwrap()));
        assert!(nfa.accepts(&Word::parse("aaa").unwrap()));
        assert!(!nfa.accepts(&Word::parse("").unwrap()));
        assert!(!nfa.accepts(&Word::parse("A").unwrap()));
    }

    #[test]
    fn flower_two_generators() {
        let nfa = flower_automaton(&wset(&["a", "b"]), 2).unwrap();
        for accepted in ["ab", "ba", "aab"] {
            assert!(nfa.accepts(&Word::parse(accepted).unwrap()), "{accepted}");
        }
        assert!(!nfa.accepts(&Word::parse("").unwrap()));
    }

    #[test]
    fn flower_word_petal() {
        let nfa = flower_automaton(&wset(&["ab"]), 2).unwrap();
        assert!(nfa.accepts(&Word::parse("ab").unwrap()));
        assert!(nfa.accepts(&Word::parse("abab").unwrap()));
        assert!(!nfa.accepts(&Word::parse("a").unwrap()));
        assert!(!nfa.accepts(&Word::parse("ba").unwrap()));
    }

    #[test]
    fn flower_rejects_bad_input() {
        assert!(matches!(
            flower_automaton(&[], 1),
            Err(AutomataError::EmptyWordSet)
        ));
        assert!(matches!(
            flower_automaton(&wset(&["a", ""]), 1),
            Err(AutomataError::EmptyWordPetal)
        ));
        assert!(matches!(
            flower_automaton(&wset(&["ab"]), 1),
            Err(AutomataError::RankMismatch { index: 1, rank: 1 })
        ));
    }

    #[test]
    fn saturation_reaches_identity() {
        // The unreduced petal a·a⁻¹ cancels to ε.
        let nfa = flower_automaton(&wset(&["aA"]), 1).unwrap();
        let restricted = restrict_to_reduced(&benois_saturate(&nfa));
        assert!(restricted.accepts(&Word::parse("").unwrap()));
    }

    #[test]
    fn saturation_examples() {
        // flower({ab, b⁻¹}) saturated accepts the reduced word a.
        let nfa = flower_automaton(&wset(&["ab", "B"]), 2).unwrap();
        let saturated = benois_saturate(&nfa);
        assert!(saturated.accepts(&Word::parse("a").unwrap()));
        // flower({a}) needs no ε-edges beyond the loop-back.
        let plain = flower_automaton(&wset(&["a"]), 1).unwrap();
        let saturated_plain = benois_saturate(&plain);
        assert_eq!(
            saturated_plain.epsilon_edge_count(),
            plain.epsilon_edge_count()
        );
    }

    #[test]
    fn restrict_examples() {
        let nfa = flower_automaton(&wset(&["ab", "B"]), 2).unwrap();
        let restricted = restrict_to_reduced(&benois_saturate(&nfa));
        assert!(restricted.accepts(&Word::parse("a").unwrap()));
        assert!(!restricted.accepts(&Word::parse("abB").unwrap()));
    }

    #[test]
    fn all_reduced_words_examples() {
        let d1 = all_reduced_words(1);
        assert!(d1.accepts(&Word::parse("").unwrap()));
        assert!(d1.accepts(&Word::parse("a").unwrap()));
        assert!(d1.accepts(&Word::parse("AA").unwrap()));
        assert!(!d1.accepts(&Word::parse("aA").unwrap()));

        let d2 = all_reduced_words(2);
        assert!(!d2.accepts(&Word::parse("Bb").unwrap()));

        let d0 = all_reduced_words(0);
        assert!(d0.accepts(&Word::parse("").unwrap()));
        assert_eq!(d0.state_count(), 2);
    }

    #[test]
    fn determinize_and_equivalence() {
        assert!(equivalent(&all_reduced_words(1), &all_reduced_words(1)));
        let flower = flower_automaton(&wset(&["a"]), 1).unwrap();
        let dfa = determinize(&flower);
        assert!(dfa.accepts(&Word::parse("a").unwrap()));
        assert!(dfa.accepts(&Word::parse("aaa").unwrap()));
        assert!(!dfa.accepts(&Word::parse("").unwrap()));
        assert!(!is_empty(&dfa));
    }

    #[test]
    fn semigroup_generation_examples() {
        assert!(decide_semigroup_generates_free(&set(&["a", "b", "BA"]), 2));
        assert!(!decide_semigroup_generates_free(&set(&["a", "b"]), 2));
        // {2, −3} in Z, written multiplicatively.
        assert!(decide_semigroup_generates_free(&set(&["aa", "AAA"]), 1));
    }

    #[test]
    fn semigroup_basis_examples() {
        assert!(decide_semigroup_basis_free(&set(&["aa", "AAA"]), 1));
        assert!(!decide_semigroup_basis_free(
            &set(&["a", "b", "BA", "ab"]),
            2
        ));
        assert!(decide_semigroup_basis_free(&set(&["a", "A"]), 1));
    }

    #[test]
    fn trivial_rank_cases() {
        assert!(!decide_semigroup_generates_free(&[], 0));
        assert!(decide_semigroup_generates_free(&set(&[""]), 0));
        assert!(decide_semigroup_basis_free(&set(&[""]), 0));
        assert!(!decide_semigroup_basis_free(&[], 0));
        // ε dropped for rank ≥ 1.
        assert!(!decide_semigroup_generates_free(&set(&[""]), 1));
        assert!(decide_semigroup_generates_free(&set(&["", "a", "A"]), 1));
    }

    #[test]
    fn folding_examples() {
        assert!(decide_group_generates_free(&set(&["a", "b"]), 2));
        assert!(!decide_group_generates_free(&set(&["abA", "b"]), 2));
        // gcd(2,3) = 1 in Z.
        assert!(decide_group_generates_free(&set(&["aa", "aaa"]), 1));
        assert!(!decide_group_generates_free(&set(&["aa"]), 1));
        assert!(!decide_group_generates_free(&set(&["a"]), 2));
    }

    #[test]
    fn semigroup_implies_group_generation() {
        for (words, rank) in [(set(&["a", "b", "BA"]), 2), (set(&["aa", "AAA"]), 1)] {
            assert!(decide_semigroup_generates_free(&words, rank));
            assert!(decide_group_generates_free(&words, rank));
        }
    }
}
