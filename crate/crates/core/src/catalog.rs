//! Closed-form rank results and worked examples as executable fixtures.
//!
//! Covers the two variety branches (periodic vs. containing `Z`), surface
//! groups of either orientability, the monoid/semigroup rank conversions,
//! and a fixture table of concrete groups used by the regression harness.
//!
//! Whether `rk_S = rk_G` holds for every finitely generated nilpotent
//! group with non-torsion-free abelianization is an open question; the
//! fixture for the one known torsion-free witness records its ranks as
//! asserted values, not computed ones.

use crate::abelian::AbelianGroup;
use crate::constructions::{
    augment_to_semigroup_gens, positive_inverse_witnesses, PositiveRelatorWitnesses, Presentation,
    WitnessTable,
};
use crate::words::Word;
use num_bigint::BigInt;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("a non-orientable surface needs genus at least 1")]
    NonOrientableGenusZero,
}

/// The dichotomy that decides relatively free ranks: a nontrivial variety
/// either satisfies an identity `x^k = 1` or contains the additive group
/// of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VarietyKind {
    Periodic,
    ContainsZ,
}

/// Connected closed surface: orientable of genus `g ≥ 0`, or
/// non-orientable of genus `g ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceDescriptor {
    pub genus: usize,
    pub orientable: bool,
}

impl SurfaceDescriptor {
    pub fn new(genus: usize, orientable: bool) -> Result<Self, CatalogError> {
        if !orientable && genus == 0 {
            return Err(CatalogError::NonOrientableGenusZero);
        }
        Ok(SurfaceDescriptor { genus, orientable })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rank {
    Finite(usize),
    Infinite,
}

impl Serialize for Rank {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Rank::Finite(n) => serializer.serialize_u64(*n as u64),
            Rank::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

impl Rank {
    pub fn finite(self) -> Option<usize> {
        match self {
            Rank::Finite(n) => Some(n),
            Rank::Infinite => None,
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(n) => write!(f, "{n}"),
            Rank::Infinite => write!(f, "infinite"),
        }
    }
}

/// Group, semigroup and monoid rank of one group; always satisfies
/// `group ≤ semigroup ≤ group + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankTriple {
    pub group_rank: Rank,
    pub semigroup_rank: Rank,
    pub monoid_rank: Rank,
}

impl RankTriple {
    pub fn finite(group: usize, semigroup: usize, monoid: usize) -> Self {
        RankTriple {
            group_rank: Rank::Finite(group),
            semigroup_rank: Rank::Finite(semigroup),
            monoid_rank: Rank::Finite(monoid),
        }
    }
}

/// Ranks of the relatively free group of rank `n` in a nontrivial variety.
/// `n = 0` is the trivial group: `(0, 1, 0)`.
pub fn variety_rank(kind: VarietyKind, n: usize) -> RankTriple {
    if n == 0 {
        return RankTriple::finite(0, 1, 0);
    }
    match kind {
        VarietyKind::Periodic => RankTriple::finite(n, n, n),
        VarietyKind::ContainsZ => RankTriple::finite(n, n + 1, n + 1),
    }
}

/// How the semigroup generating set of a surface group is witnessed.
#[derive(Debug, Clone)]
pub enum SurfaceWitness {
    /// Orientable case: the augmented `(2g+1)`-element set.
    Augmented { added: Word, table: WitnessTable },
    /// Non-orientable case: inverse witnesses read off the positive relator.
    PositiveRelator(PositiveRelatorWitnesses),
    /// The sphere; nothing to witness.
    Trivial,
}

#[derive(Debug, Clone)]
pub struct SurfaceInfo {
    pub presentation: Presentation,
    pub ranks: RankTriple,
    pub witness: SurfaceWitness,
}

/// Presentation, ranks and semigroup witnesses of a surface group.
///
/// Orientable genus `g`: generators `a_1,b_1,…,a_g,b_g` with relator
/// `[a_1,b_1]⋯[a_g,b_g]`, ranks `(2g, 2g+1)`. Non-orientable genus `g`:
/// relator `a_1²⋯a_g²`, ranks `(g, g)`.
pub fn surface_info(surface: SurfaceDescriptor) -> SurfaceInfo {
    if surface.orientable {
        let g = surface.genus;
        let relator = (0..g).fold(Word::empty(), |acc, i| {
            acc.concat(&Word::generator(2 * i).commutator(&Word::generator(2 * i + 1)))
        });
        let relators = if g == 0 { Vec::new() } else { vec![relator] };
        let presentation = Presentation::new(2 * g, relators).expect("relator within rank");
        if g == 0 {
            return SurfaceInfo {
                presentation,
                ranks: RankTriple::finite(0, 1, 0),
                witness: SurfaceWitness::Trivial,
            };
        }
        let (added, table) = augment_to_semigroup_gens(2 * g).expect("2g >= 1");
        SurfaceInfo {
            presentation,
            ranks: RankTriple::finite(2 * g, 2 * g + 1, 2 * g + 1),
            witness: SurfaceWitness::Augmented { added, table },
        }
    } else {
        let g = surface.genus;
        let relator = (0..g).fold(Word::empty(), |acc, i| {
            acc.concat(&Word::generator(i).pow(2))
        });
        let presentation = Presentation::new(g, vec![relator]).expect("relator within rank");
        let witnesses =
            positive_inverse_witnesses(&presentation).expect("relator covers every generator");
        SurfaceInfo {
            presentation,
            ranks: RankTriple::finite(g, g, g),
            witness: SurfaceWitness::PositiveRelator(witnesses),
        }
    }
}

/// `rk_M` from `rk_S`: for the trivial group the identity is free, so the
/// monoid rank drops by one; otherwise they coincide.
pub fn monoid_rank_from_semigroup(semigroup_rank: usize, is_trivial_group: bool) -> usize {
    if is_trivial_group {
        semigroup_rank - 1
    } else {
        semigroup_rank
    }
}

/// `rk_S` from `rk_M` for a monoid. The caller supplies the predicate
/// "the identity is a nonempty product of non-identity elements"
/// (`one_decomposable`), which is not decidable here in general.
pub fn monoid_semigroup_conversion(
    monoid_rank: Rank,
    one_decomposable: bool,
    finitely_generated: bool,
) -> Rank {
    match monoid_rank {
        Rank::Finite(m) if finitely_generated && !one_decomposable => Rank::Finite(m + 1),
        other => other,
    }
}

/// One concrete claim from the worked examples, in machine-checkable form.
/// Fields are populated as applicable; the regression harness re-derives
/// whatever the live decision procedures can check.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub id: &'static str,
    pub description: &'static str,
    pub group_rank: usize,
    pub semigroup_rank: usize,
    /// Subset of `Z`, decidable along both the automata and the integer
    /// pathways.
    pub integer_elements: Option<Vec<i64>>,
    /// Elements of a specific abelian group, integer coordinates.
    pub abelian_instance: Option<(AbelianGroup, Vec<Vec<i64>>)>,
    pub expect_semigroup_generates: Option<bool>,
    pub expect_semigroup_basis: Option<bool>,
    /// Every proper nonempty subset fails to semigroup-generate.
    pub no_proper_subset_generates: bool,
    pub presentation: Option<Presentation>,
    pub abelianization: Option<AbelianGroup>,
    pub nilpotent: bool,
    /// A recorded semigroup generating set whose correctness is asserted,
    /// not machine-verified.
    pub recorded_witness: Option<Vec<Word>>,
    pub witness_verified: bool,
}

impl Fixture {
    fn base(id: &'static str, description: &'static str, group: usize, semigroup: usize) -> Self {
        Fixture {
            id,
            description,
            group_rank: group,
            semigroup_rank: semigroup,
            integer_elements: None,
            abelian_instance: None,
            expect_semigroup_generates: None,
            expect_semigroup_basis: None,
            no_proper_subset_generates: false,
            presentation: None,
            abelianization: None,
            nilpotent: false,
            recorded_witness: None,
            witness_verified: true,
        }
    }
}

fn word(text: &str) -> Word {
    Word::parse(text).expect("fixture words are well formed")
}

fn group(free_rank: usize, factors: &[i64]) -> AbelianGroup {
    let factors: Vec<BigInt> = factors.iter().map(|&f| BigInt::from(f)).collect();
    AbelianGroup::new(free_rank, &factors).expect("fixture factors are positive")
}

/// The worked examples as structured fixtures.
pub fn worked_examples() -> Vec<Fixture> {
    vec![
        Fixture {
            integer_elements: Some(vec![2, -3]),
            expect_semigroup_generates: Some(true),
            expect_semigroup_basis: Some(true),
            ..Fixture::base("int-basis", "{2, -3} is a semigroup basis of Z that contains no group basis", 1, 2)
        },
        Fixture {
            integer_elements: Some(vec![-6, 2, 3]),
            expect_semigroup_generates: Some(true),
            expect_semigroup_basis: Some(false),
            no_proper_subset_generates: true,
            ..Fixture::base("int-min-gen", "{-6, 2, 3} semigroup-generates Z but contains no semigroup basis", 1, 2)
        },
        Fixture {
            presentation: Some(
                Presentation::new(4, vec![word("cbaBA"), word("acAC"), word("bcBC"), word("Cdd")])
                    .expect("relators within rank"),
            ),
            abelianization: Some(group(2, &[2])),
            nilpotent: true,
            recorded_witness: Some(vec![word("a"), word("b"), word("ABD")]),
            witness_verified: false,
            ..Fixture::base(
                "nilpotent-witness",
                "torsion-free nilpotent group with non-torsion-free abelianization; rk_G = rk_S = 3",
                3,
                3,
            )
        },
        Fixture {
            presentation: Some(
                Presentation::new(2, vec![word("abAB").pow(2)]).expect("relator within rank"),
            ),
            abelianization: Some(group(2, &[])),
            ..Fixture::base(
                "one-relator-torsion",
                "one-relator group with torsion whose semigroup rank still exceeds its group rank",
                2,
                3,
            )
        },
        Fixture {
            abelian_instance: Some((group(1, &[2]), vec![vec![1, 0], vec![0, 1]])),
            expect_semigroup_generates: Some(false),
            expect_semigroup_basis: Some(false),
            ..Fixture::base(
                "z-x-z2",
                "Z x Z_2: the obvious group basis is not a semigroup basis",
                2,
                2,
            )
        },
        Fixture {
            presentation: Some(Presentation::new(2, vec![word("aabb")]).expect("relator within rank")),
            abelianization: Some(group(1, &[2])),
            ..Fixture::base("klein-bottle", "Klein bottle group: torsion-free with rk_S = rk_G = 2", 2, 2)
        },
        Fixture {
            presentation: Some(Presentation::new(1, vec![word("aa")]).expect("relator within rank")),
            abelianization: Some(group(0, &[2])),
            ..Fixture::base("projective-plane", "projective plane: Z_2, rk_S = rk_G = 1", 1, 1)
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::semigroup_rank_abelian;

    #[test]
    fn variety_rank_examples() {
        assert_eq!(
            variety_rank(VarietyKind::Periodic, 5),
            RankTriple::finite(5, 5, 5)
        );
        assert_eq!(
            variety_rank(VarietyKind::ContainsZ, 1),
            RankTriple::finite(1, 2, 2)
        );
        assert_eq!(
            variety_rank(VarietyKind::ContainsZ, 3),
            RankTriple::finite(3, 4, 4)
        );
        assert_eq!(
            variety_rank(VarietyKind::Periodic, 0),
            RankTriple::finite(0, 1, 0)
        );
    }

    #[test]
    fn variety_rank_matches_free_abelian() {
        for n in 1..=6 {
            let triple = variety_rank(VarietyKind::ContainsZ, n);
            assert_eq!(
                triple.semigroup_rank,
                Rank::Finite(semigroup_rank_abelian(&AbelianGroup::free(n)))
            );
        }
    }

    #[test]
    fn surface_examples() {
        let genus_two = surface_info(SurfaceDescriptor::new(2, true).unwrap());
        assert_eq!(genus_two.ranks, RankTriple::finite(4, 5, 5));
        assert_eq!(genus_two.presentation.rank, 4);
        assert_eq!(genus_two.presentation.relators[0], word("abABcdCD"));

        let projective = surface_info(SurfaceDescriptor::new(1, false).unwrap());
        assert_eq!(projective.ranks, RankTriple::finite(1, 1, 1));

        let klein = surface_info(SurfaceDescriptor::new(2, false).unwrap());
        assert_eq!(klein.ranks, RankTriple::finite(2, 2, 2));
        assert_eq!(klein.presentation.relators[0], word("aabb"));

        let sphere = surface_info(SurfaceDescriptor::new(0, true).unwrap());
        assert_eq!(sphere.ranks, RankTriple::finite(0, 1, 0));

        assert_eq!(
            SurfaceDescriptor::new(0, false),
            Err(CatalogError::NonOrientableGenusZero)
        );
    }

    #[test]
    fn surface_witnesses_verify() {
        for g in 1..=4 {
            let orientable = surface_info(SurfaceDescriptor::new(g, true).unwrap());
            match orientable.witness {
                SurfaceWitness::Augmented { table, .. } => {
                    assert!(table.verify_by_free_reduction(), "orientable genus {g}")
                }
                _ => panic!("orientable surface must carry an augmented witness"),
            }
            let nonorientable = surface_info(SurfaceDescriptor::new(g, false).unwrap());
            match nonorientable.witness {
                SurfaceWitness::PositiveRelator(witnesses) => {
                    assert!(
                        witnesses.verify(&nonorientable.presentation),
                        "non-orientable genus {g}"
                    )
                }
                _ => panic!("non-orientable surface must carry relator witnesses"),
            }
        }
    }

    #[test]
    fn monoid_conversions() {
        assert_eq!(monoid_rank_from_semigroup(1, true), 0);
        assert_eq!(monoid_rank_from_semigroup(2, false), 2);
        assert_eq!(
            monoid_semigroup_conversion(Rank::Finite(3), false, true),
            Rank::Finite(4)
        );
        assert_eq!(
            monoid_semigroup_conversion(Rank::Finite(3), true, true),
            Rank::Finite(3)
        );
        assert_eq!(
            monoid_semigroup_conversion(Rank::Infinite, false, false),
            Rank::Infinite
        );
    }

    #[test]
    fn rank_gap_invariant_on_catalog_outputs() {
        let mut triples = vec![
            variety_rank(VarietyKind::Periodic, 3),
            variety_rank(VarietyKind::ContainsZ, 3),
            variety_rank(VarietyKind::Periodic, 0),
        ];
        for g in 0..=4 {
            triples.push(surface_info(SurfaceDescriptor::new(g, true).unwrap()).ranks);
            if g >= 1 {
                triples.push(surface_info(SurfaceDescriptor::new(g, false).unwrap()).ranks);
            }
        }
        for triple in triples {
            let group = triple.group_rank.finite().unwrap();
            let semigroup = triple.semigroup_rank.finite().unwrap();
            assert!(semigroup == group || semigroup == group + 1, "{triple:?}");
        }
    }

    #[test]
    fn fixtures_are_well_formed() {
        let fixtures = worked_examples();
        let ids: Vec<&str> = fixtures.iter().map(|f| f.id).collect();
        assert_eq!(
            ids,
            vec![
                "int-basis",
                "int-min-gen",
                "nilpotent-witness",
                "one-relator-torsion",
                "z-x-z2",
                "klein-bottle",
                "projective-plane"
            ]
        );
        for fixture in &fixtures {
            assert!(
                fixture.semigroup_rank == fixture.group_rank
                    || fixture.semigroup_rank == fixture.group_rank + 1,
                "{}",
                fixture.id
            );
        }
        let ex47 = fixtures
            .iter()
            .find(|f| f.id == "nilpotent-witness")
            .unwrap();
        assert!(!ex47.witness_verified);
        assert_eq!(ex47.abelianization, Some(group(2, &[2])));
    }
}
