//! Rank bounds for finitely presented groups.
//!
//! Given a presentation (and, optionally, a user-asserted nilpotency
//! flag), derive the tightest group- and semigroup-rank bounds the
//! implemented rules justify. Rules fire in a fixed order and only ever
//! tighten: lower bounds combine by maximum, upper bounds by minimum, so
//! reports are deterministic.
//!
//! The nilpotency flag is trusted, never verified; conclusions that
//! depend on it are marked conditional in the report.

use crate::abelian::{abelian_from_relations, group_rank_abelian, AbelianGroup, IntMatrix};
use crate::constructions::Presentation;
use crate::words::Sign;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

/// User-asserted structural facts about the presented group.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct StructuralFlags {
    pub nilpotent: bool,
}

/// One rule application, with the mathematical fact that justifies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleFired {
    pub rule: &'static str,
    pub justification: &'static str,
}

/// Rank bounds with provenance. Invariants: `lower ≤ upper`; a rank is
/// decided iff its bounds coincide; the semigroup bounds stay within
/// `[group_lower, group_upper + 1]`.
#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub group_rank_lower: usize,
    pub group_rank_upper: usize,
    pub semigroup_rank_lower: usize,
    pub semigroup_rank_upper: usize,
    pub group_rank_decided: bool,
    pub semigroup_rank_decided: bool,
    /// True when a fired rule relied on an unverified structural flag.
    pub conditional: bool,
    pub rules_fired: Vec<RuleFired>,
}

/// Exponent-sum abelianization: `Z^rank` modulo the lattice spanned by the
/// relators' exponent vectors.
pub fn abelianization(presentation: &Presentation) -> AbelianGroup {
    let columns: Vec<Vec<BigInt>> = presentation
        .relators
        .iter()
        .map(|relator| {
            let mut column = vec![BigInt::zero(); presentation.rank];
            for letter in relator.letters() {
                match letter.sign {
                    Sign::Plus => column[letter.index] += 1,
                    Sign::Minus => column[letter.index] -= 1,
                }
            }
            column
        })
        .collect();
    abelian_from_relations(&IntMatrix::from_columns(presentation.rank, &columns))
}

fn every_generator_in_positive_relator(presentation: &Presentation) -> bool {
    (0..presentation.rank).all(|generator| {
        presentation
            .relators
            .iter()
            .filter(|r| r.is_positive())
            .any(|r| r.letters().iter().any(|l| l.index == generator))
    })
}

/// Apply every rule whose hypothesis holds, in fixed order.
pub fn rank_bounds(presentation: &Presentation, flags: StructuralFlags) -> RankReport {
    let n = presentation.rank;
    let quotient = abelianization(presentation);
    let quotient_rank = group_rank_abelian(&quotient);

    let mut group_lower = 0usize;
    let mut group_upper = n;
    let mut semigroup_lower = 0usize;
    let mut semigroup_upper = n + 1;
    let mut conditional = false;
    let mut rules_fired = Vec::new();

    // R1: the presentation's generators bound the group rank, and the
    // semigroup rank never exceeds the group rank by more than one.
    rules_fired.push(RuleFired {
        rule: "R1",
        justification: "the generating set bounds the group rank; the semigroup rank is at most the group rank plus one",
    });

    // R2: ranks can only drop along a surjection, so the abelianization
    // bounds the group rank from below.
    group_lower = group_lower.max(quotient_rank);
    rules_fired.push(RuleFired {
        rule: "R2",
        justification: "the group surjects onto its abelianization, whose rank is computable",
    });

    // R3: a surjection onto a free abelian group of full rank pins both
    // ranks: the group rank equals the generator count and the semigroup
    // rank exceeds it by one.
    if quotient.free_rank() == n {
        group_lower = group_lower.max(n);
        group_upper = group_upper.min(n);
        semigroup_lower = semigroup_lower.max(n + 1);
        semigroup_upper = semigroup_upper.min(n + 1);
        rules_fired.push(RuleFired {
            rule: "R3",
            justification: "the abelianization is free abelian of full rank, forcing semigroup rank = group rank + 1",
        });
    }

    // R4: if every generator occurs in a positive relator, the images of
    // the generators already semigroup-generate.
    if n >= 1 && every_generator_in_positive_relator(presentation) {
        semigroup_upper = semigroup_upper.min(n);
        rules_fired.push(RuleFired {
            rule: "R4",
            justification: "every generator occurs in a positive relator, so the generators alone semigroup-generate",
        });
    }

    // R5: for nilpotent groups the group rank equals the rank of the
    // abelianization (commutators lie in the Frattini subgroup).
    if flags.nilpotent {
        group_lower = group_lower.max(quotient_rank);
        group_upper = group_upper.min(quotient_rank);
        conditional = true;
        rules_fired.push(RuleFired {
            rule: "R5",
            justification: "nilpotent (asserted): the group rank equals the abelianization's rank",
        });
    }

    // R6: nilpotent with torsion-free abelianization forces the gap.
    if flags.nilpotent && quotient.is_torsion_free() {
        let decided = quotient_rank + 1;
        semigroup_lower = semigroup_lower.max(decided);
        semigroup_upper = semigroup_upper.min(decided);
        conditional = true;
        rules_fired.push(RuleFired {
            rule: "R6",
            justification: "nilpotent (asserted) with torsion-free abelianization: semigroup rank = group rank + 1",
        });
    }

    // The semigroup bounds inherit the group bounds.
    semigroup_lower = semigroup_lower.max(group_lower);
    semigroup_upper = semigroup_upper.min(group_upper + 1);

    RankReport {
        group_rank_lower: group_lower,
        group_rank_upper: group_upper,
        semigroup_rank_lower: semigroup_lower,
        semigroup_rank_upper: semigroup_upper,
        group_rank_decided: group_lower == group_upper,
        semigroup_rank_decided: semigroup_lower == semigroup_upper,
        conditional,
        rules_fired,
    }
}
