//! Generating-set transformations with machine-checkable witness tables.
//!
//! Each construction outputs, besides the transformed set, an explicit
//! expression of every inverse generator as a positive word over the
//! output set. Three verifiers apply, matching what is actually decidable:
//! free reduction ([`WitnessTable::verify_by_free_reduction`]), the
//! conjugate-of-relator identity ([`PositiveRelatorWitnesses::verify`]),
//! and evaluation in a concrete abelian group
//! ([`WitnessTable::verify_by_abelian_evaluation`]).

use crate::abelian::{AbelianElement, AbelianGroup};
use crate::words::{SignedGenerator, Word};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("the construction needs at least one generator")]
    NoGenerators,
    #[error("torsion order must be at least 2, got {0}")]
    OrderTooSmall(u64),
    #[error("torsion generator index {index} out of range for {count} generators")]
    TorsionIndexOutOfRange { index: usize, count: usize },
    #[error("generator {0} occurs in no positive relator")]
    UncoveredGenerator(String),
    #[error("relator uses generator {index} but the presentation has rank {rank}")]
    RelatorOutOfRank { index: usize, rank: usize },
}

/// `Gp⟨ a_1, …, a_rank | relators ⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub rank: usize,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(rank: usize, relators: Vec<Word>) -> Result<Self, ConstructionError> {
        for relator in &relators {
            if let Some(bad) = relator.letters().iter().find(|l| l.index >= rank) {
                return Err(ConstructionError::RelatorOutOfRank {
                    index: bad.index,
                    rank,
                });
            }
        }
        Ok(Presentation { rank, relators })
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationWire {
    rank: usize,
    relators: Vec<String>,
}

impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PresentationWire {
            rank: self.rank,
            relators: self.relators.iter().map(|r| r.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = PresentationWire::deserialize(deserializer)?;
        let relators = wire
            .relators
            .iter()
            .map(|text| Word::parse_in_rank(text, wire.rank))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Presentation::new(wire.rank, relators).map_err(D::Error::custom)
    }
}

/// One witness: `target` (an inverse letter, or a positive letter that left
/// the generating set) expressed as a product of output-set elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessEntry {
    pub target: SignedGenerator,
    /// Indices into the owning table's generating set; nonempty.
    pub factors: Vec<usize>,
}

/// Positive-word expressions of inverse generators over a declared output
/// generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTable {
    /// The output generating set; witness factors index into it.
    pub generating_set: Vec<Word>,
    pub entries: Vec<WitnessEntry>,
}

impl WitnessTable {
    /// Spell the witness out as a word over the original generators.
    pub fn expand(&self, entry: &WitnessEntry) -> Word {
        entry
            .factors
            .iter()
            .fold(Word::empty(), |acc, &i| acc.concat(&self.generating_set[i]))
    }

    /// Every witness is a nonempty product of output-set elements.
    pub fn is_positive_over_output_set(&self) -> bool {
        self.entries.iter().all(|e| {
            !e.factors.is_empty() && e.factors.iter().all(|&i| i < self.generating_set.len())
        })
    }

    /// Each expansion must freely reduce to its single-letter target.
    /// Applicable when the witnesses hold in the free group itself.
    pub fn verify_by_free_reduction(&self) -> bool {
        self.entries.iter().all(|entry| {
            let expanded = self.expand(entry).reduce();
            expanded.letters() == [entry.target]
        })
    }

    /// Each expansion must evaluate to the same element as its target under
    /// the given assignment of abelian-group elements to generators.
    /// Applicable when witness validity is modulo relations the free group
    /// cannot see (torsion).
    pub fn verify_by_abelian_evaluation(
        &self,
        group: &AbelianGroup,
        assignment: &[AbelianElement],
    ) -> bool {
        self.entries.iter().all(|entry| {
            let expanded = group.evaluate_word(&self.expand(entry), assignment);
            let target = group.evaluate_word(&Word::new(vec![entry.target]), assignment);
            expanded == target
        })
    }
}

/// Append `a = a_n⁻¹·…·a_1⁻¹` to a group generating set `a_1, …, a_n`,
/// turning it into a semigroup generating set: each inverse is
/// `a_i⁻¹ = a_{i+1}…a_n · a · a_1…a_{i-1}`.
pub fn augment_to_semigroup_gens(n: usize) -> Result<(Word, WitnessTable), ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::NoGenerators);
    }
    let added: Word = (0..n).rev().map(SignedGenerator::negative).collect();
    let mut generating_set: Vec<Word> = (0..n).map(Word::generator).collect();
    generating_set.push(added.clone());
    let added_index = n;

    let entries = (0..n)
        .map(|i| {
            let mut factors: Vec<usize> = (i + 1..n).collect();
            factors.push(added_index);
            factors.extend(0..i);
            WitnessEntry {
                target: SignedGenerator::negative(i),
                factors,
            }
        })
        .collect();
    Ok((
        added,
        WitnessTable {
            generating_set,
            entries,
        },
    ))
}

/// Output of [`torsion_shrink`]: a same-size semigroup generating set
/// obtained by trading the finite-order generator for the full inverse
/// product.
#[derive(Debug, Clone)]
pub struct TorsionShrink {
    /// `n` words over the original generators: the non-torsion generators
    /// followed by `w = a_n⁻¹·…·a_1⁻¹`.
    pub set: Vec<Word>,
    pub witnesses: WitnessTable,
    /// `permutation[j]` is the original index of the generator in position
    /// `j` after moving the torsion generator last.
    pub permutation: Vec<usize>,
}

/// Shrink a group basis `a_1, …, a_n` whose member at `torsion_index` has
/// finite order `m ≥ 2` into the `n`-element semigroup generating set
/// `{a_1, …, a_{n-1}, a_n⁻¹·…·a_1⁻¹}` (after moving the torsion generator
/// last). Witness validity is modulo `a_n^m = 1`, so verification is by
/// evaluation in a concrete group.
pub fn torsion_shrink(
    n: usize,
    torsion_index: usize,
    order: u64,
) -> Result<TorsionShrink, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::NoGenerators);
    }
    if torsion_index >= n {
        return Err(ConstructionError::TorsionIndexOutOfRange {
            index: torsion_index,
            count: n,
        });
    }
    if order < 2 {
        return Err(ConstructionError::OrderTooSmall(order));
    }

    let mut permutation: Vec<usize> = (0..n).filter(|&i| i != torsion_index).collect();
    permutation.push(torsion_index);

    // w = b_n⁻¹ … b_1⁻¹ in original letters, where b_j = a_{permutation[j]}.
    let w: Word = permutation
        .iter()
        .rev()
        .map(|&orig| SignedGenerator::negative(orig))
        .collect();
    let mut set: Vec<Word> = permutation[..n - 1]
        .iter()
        .map(|&orig| Word::generator(orig))
        .collect();
    set.push(w.clone());
    let w_index = n - 1;
    let torsion_letter = permutation[n - 1];

    // b_n⁻¹ = w · b_1 … b_{n-1}
    let inverse_factors: Vec<usize> = std::iter::once(w_index).chain(0..n - 1).collect();
    // b_n = (b_n⁻¹)^{m-1}, expanded through the previous witness.
    let positive_factors: Vec<usize> = (0..order - 1)
        .flat_map(|_| inverse_factors.iter().copied())
        .collect();

    let mut entries = vec![
        WitnessEntry {
            target: SignedGenerator::negative(torsion_letter),
            factors: inverse_factors.clone(),
        },
        WitnessEntry {
            target: SignedGenerator::positive(torsion_letter),
            factors: positive_factors.clone(),
        },
    ];
    // Remaining inverses via the augmentation pattern, with b_n expanded.
    for (j, &original) in permutation.iter().take(n - 1).enumerate() {
        let mut factors: Vec<usize> = (j + 1..n - 1).collect();
        factors.extend(positive_factors.iter().copied());
        factors.push(w_index);
        factors.extend(0..j);
        entries.push(WitnessEntry {
            target: SignedGenerator::negative(original),
            factors,
        });
    }

    Ok(TorsionShrink {
        set: set.clone(),
        witnesses: WitnessTable {
            generating_set: set,
            entries,
        },
        permutation,
    })
}

/// Where a witness came from: `relator[relator_index] = u · a · v` with
/// `|u| = position`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub generator: usize,
    pub relator_index: usize,
    pub position: usize,
}

#[derive(Debug, Clone)]
pub struct PositiveRelatorWitnesses {
    pub table: WitnessTable,
    pub occurrences: Vec<Occurrence>,
}

impl PositiveRelatorWitnesses {
    /// The conjugate-of-relator identity: with `r = u·a·v` a relator,
    /// `u⁻¹·r·u` freely reduces to `a·v·u`, so `a⁻¹ = v·u` holds in the
    /// presented group.
    pub fn verify(&self, presentation: &Presentation) -> bool {
        self.occurrences.iter().all(|occ| {
            let relator = &presentation.relators[occ.relator_index];
            let letters = relator.letters();
            let u = Word::new(letters[..occ.position].to_vec());
            let a = letters[occ.position];
            let v = Word::new(letters[occ.position + 1..].to_vec());
            let conjugated = u.invert().concat(relator).concat(&u).reduce();
            let expected = Word::new(vec![a]).concat(&v).concat(&u).reduce();
            a.index == occ.generator && conjugated == expected
        })
    }
}

/// For every generator `a` occurring as `u·a·v` in a positive relator,
/// emit the witness `a⁻¹ ↦ v·u`. Occurrence choice is deterministic: first
/// positive relator containing the letter, leftmost occurrence.
pub fn positive_inverse_witnesses(
    presentation: &Presentation,
) -> Result<PositiveRelatorWitnesses, ConstructionError> {
    let generating_set: Vec<Word> = (0..presentation.rank).map(Word::generator).collect();
    let mut entries = Vec::new();
    let mut occurrences = Vec::new();
    for generator in 0..presentation.rank {
        let found = presentation
            .relators
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_positive())
            .find_map(|(relator_index, r)| {
                r.letters()
                    .iter()
                    .position(|l| l.index == generator)
                    .map(|position| (relator_index, position))
            });
        let Some((relator_index, position)) = found else {
            return Err(ConstructionError::UncoveredGenerator(
                Word::generator(generator).to_string(),
            ));
        };
        let letters = presentation.relators[relator_index].letters();
        let factors: Vec<usize> = letters[position + 1..]
            .iter()
            .chain(&letters[..position])
            .map(|l| l.index)
            .collect();
        entries.push(WitnessEntry {
            target: SignedGenerator::negative(generator),
            factors,
        });
        occurrences.push(Occurrence {
            generator,
            relator_index,
            position,
        });
    }
    Ok(PositiveRelatorWitnesses {
        table: WitnessTable {
            generating_set,
            entries,
        },
        occurrences,
    })
}
