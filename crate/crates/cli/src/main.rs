//! `rank-forge`: command-line front end for the rank computations.
//!
//! Every subcommand prints a JSON report on stdout (or a human-readable
//! rendering with `--pretty`). Exit codes: 0 success, 2 invalid input,
//! 1 internal error (including regression failures).

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rank_forge_core::abelian::{
    decide_group_generates_abelian, decide_semigroup_basis_abelian,
    decide_semigroup_generates_abelian, group_rank_abelian, semigroup_generation_certificate,
    semigroup_rank_abelian, snf, AbelianElement, AbelianGroup, IntMatrix,
};
use rank_forge_core::analyzer::{abelianization, rank_bounds, StructuralFlags};
use rank_forge_core::automata::{
    decide_group_generates_free, decide_semigroup_basis_free,
    decide_semigroup_generates_free_with_stats,
};
use rank_forge_core::catalog::{
    monoid_rank_from_semigroup, surface_info, variety_rank, worked_examples, RankTriple,
    SurfaceDescriptor, SurfaceWitness, VarietyKind,
};
use rank_forge_core::constructions::{
    augment_to_semigroup_gens, positive_inverse_witnesses, torsion_shrink, Presentation,
    WitnessTable,
};
use rank_forge_core::words::{ReducedWord, Word};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rank-forge",
    version,
    about = "Semigroup and group rank computations"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decisions in free groups, via automata.
    Fg {
        #[command(subcommand)]
        command: FgCommand,
    },
    /// Decisions in finitely generated abelian groups, via exact linear algebra.
    Ab {
        #[command(subcommand)]
        command: AbCommand,
    },
    /// Generating-set constructions with witness tables.
    Witness {
        #[command(subcommand)]
        command: WitnessCommand,
    },
    /// Presentation, ranks and witnesses of a closed-surface group.
    Surface {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        non_orientable: bool,
    },
    /// Ranks of the relatively free group of rank n in a nontrivial variety.
    Variety(VarietyArgs),
    /// Rank bounds for a finitely presented group (presentation JSON file).
    Analyze {
        presentation: std::path::PathBuf,
        /// Assert (unverified) that the presented group is nilpotent.
        #[arg(long)]
        nilpotent: bool,
    },
    /// List the bundled worked examples.
    Examples,
    /// Re-derive every checkable claim of the bundled examples.
    Regress,
}

#[derive(Subcommand)]
enum FgCommand {
    /// Does S semigroup-generate the free group of the given rank?
    DecideSgen {
        #[arg(long)]
        rank: usize,
        words: Vec<String>,
    },
    /// Is S a semigroup basis (minimum-size semigroup generating set)?
    DecideSbasis {
        #[arg(long)]
        rank: usize,
        words: Vec<String>,
    },
    /// Does S generate the free group as a group (Stallings folding)?
    GroupGen {
        #[arg(long)]
        rank: usize,
        words: Vec<String>,
    },
}

#[derive(Subcommand)]
enum AbCommand {
    /// Group/semigroup/monoid rank of Z^R x Z_d1 x ... x Z_dk.
    Rank {
        #[arg(long)]
        free_rank: usize,
        /// Comma-separated invariant factors, e.g. "2,4".
        #[arg(long, default_value = "")]
        factors: String,
    },
    /// Does X semigroup-generate the group?
    DecideSgen {
        /// Group syntax, e.g. "Z", "Z^2xZ_4", "1".
        #[arg(long)]
        group: String,
        /// Elements, e.g. "(1,0,0);(0,1,1)" or "2;-3" for rank-1 groups.
        #[arg(long, allow_hyphen_values = true)]
        elems: String,
    },
    /// Is X a semigroup basis of the group?
    DecideSbasis {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        elems: String,
    },
    /// Smith normal form of an integer matrix, rows separated by ';'.
    Snf {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// Append the inverse product to a generator list; witness every inverse.
    Augment { generators: Vec<String> },
    /// Trade a finite-order basis member for the inverse product.
    Torsion {
        /// Number of generators.
        #[arg(long)]
        n: usize,
        /// Index (0-based) of the finite-order generator.
        #[arg(long)]
        index: usize,
        /// Its order m >= 2.
        #[arg(long)]
        order: u64,
    },
    /// Read inverse witnesses off positive relators of a presentation.
    Qp {
        #[arg(long)]
        presentation: std::path::PathBuf,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VarietyKindArg {
    /// The variety satisfies an identity x^k = 1.
    #[arg(long)]
    periodic: bool,
    /// The variety contains the additive group of integers.
    #[arg(long)]
    contains_z: bool,
}

#[derive(Args)]
struct VarietyArgs {
    #[command(flatten)]
    kind: VarietyKindArg,
    #[arg(long)]
    n: usize,
}

/// Errors surfaced to the user; the variant picks the exit code.
enum CliError {
    /// Malformed input: exit 2.
    Invalid(String),
    /// Broken internal expectation or failed regression: exit 1.
    Internal(String),
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        CliError::Invalid(message.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Invalid(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(message)) => {
            eprintln!("internal error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let report = match cli.command {
        Command::Fg { command } => run_fg(command)?,
        Command::Ab { command } => run_ab(command)?,
        Command::Witness { command } => run_witness(command)?,
        Command::Surface {
            genus,
            non_orientable,
        } => run_surface(genus, !non_orientable)?,
        Command::Variety(args) => run_variety(args)?,
        Command::Analyze {
            presentation,
            nilpotent,
        } => run_analyze(&presentation, nilpotent)?,
        Command::Examples => run_examples(),
        Command::Regress => run_regress()?,
    };
    if cli.pretty {
        print_pretty(&report, 0);
        println!();
    } else {
        println!("{report}");
    }
    Ok(())
}

// ---------------------------------------------------------------- parsing

fn parse_words(texts: &[String], rank: usize) -> Result<Vec<ReducedWord>, CliError> {
    if texts.is_empty() {
        return Err(CliError::invalid("at least one word is required"));
    }
    texts
        .iter()
        .map(|text| {
            Word::parse_in_rank(text, rank)
                .map(|w| w.reduce())
                .map_err(|e| CliError::invalid(format!("word {text:?}: {e}")))
        })
        .collect()
}

/// "Z", "Z^2", "Z_4", products joined with 'x', or "1" for the trivial group.
fn parse_group(text: &str) -> Result<AbelianGroup, CliError> {
    let text = text.trim();
    if text == "1" {
        return Ok(AbelianGroup::trivial());
    }
    let mut free_rank = 0usize;
    let mut factors: Vec<BigInt> = Vec::new();
    for part in text.split('x') {
        let part = part.trim();
        if part == "Z" {
            free_rank += 1;
        } else if let Some(exp) = part.strip_prefix("Z^") {
            free_rank += exp
                .parse::<usize>()
                .map_err(|_| CliError::invalid(format!("bad exponent in {part:?}")))?;
        } else if let Some(modulus) = part.strip_prefix("Z_") {
            let d = modulus
                .parse::<BigInt>()
                .map_err(|_| CliError::invalid(format!("bad modulus in {part:?}")))?;
            factors.push(d);
        } else {
            return Err(CliError::invalid(format!(
                "cannot parse group factor {part:?} (expected Z, Z^k or Z_d)"
            )));
        }
    }
    AbelianGroup::new(free_rank, &factors).map_err(|e| CliError::invalid(e.to_string()))
}

/// "(1,0,0);(0,1,1)" — parentheses optional, so "2;-3" works for rank one.
fn parse_elements(text: &str, group: &AbelianGroup) -> Result<Vec<AbelianElement>, CliError> {
    text.split(';')
        .map(|tuple| {
            let inner = tuple.trim().trim_start_matches('(').trim_end_matches(')');
            let coords = inner
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<BigInt>()
                        .map_err(|_| CliError::invalid(format!("bad coordinate {c:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            group
                .element(&coords)
                .map_err(|e| CliError::invalid(e.to_string()))
        })
        .collect()
}

/// "1,2;3,4" — rows separated by ';', entries by ','.
fn parse_matrix(text: &str) -> Result<IntMatrix, CliError> {
    let rows: Vec<Vec<BigInt>> = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|entry| {
                    entry
                        .trim()
                        .parse::<BigInt>()
                        .map_err(|_| CliError::invalid(format!("bad matrix entry {entry:?}")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(CliError::invalid("matrix rows have unequal lengths"));
    }
    IntMatrix::new(height, width, rows.into_iter().flatten().collect())
        .map_err(|e| CliError::invalid(e.to_string()))
}

fn load_presentation(path: &std::path::Path) -> Result<Presentation, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::invalid(format!("malformed presentation JSON: {e}")))
}

// ------------------------------------------------------------ serialization

fn big_string(value: &BigInt) -> Value {
    Value::String(value.to_string())
}

fn matrix_json(matrix: &IntMatrix) -> Value {
    Value::Array(
        (0..matrix.rows())
            .map(|i| {
                Value::Array(
                    (0..matrix.cols())
                        .map(|j| big_string(&matrix[(i, j)]))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn element_json(element: &AbelianElement) -> Value {
    Value::Array(element.coords().iter().map(big_string).collect())
}

fn witness_table_json(table: &WitnessTable) -> Value {
    json!({
        "generating_set": table.generating_set.iter().map(Word::to_string).collect::<Vec<_>>(),
        "entries": table.entries.iter().map(|entry| json!({
            "target": entry.target.to_string(),
            "factors": entry.factors,
            "word": table.expand(entry).to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn ranks_json(ranks: &RankTriple) -> Value {
    serde_json::to_value(ranks).expect("rank triples serialize")
}

// ------------------------------------------------------------- subcommands

fn run_fg(command: FgCommand) -> Result<Value, CliError> {
    let report = |rank, texts: &[String], want_basis: bool| -> Result<Value, CliError> {
        let words = parse_words(texts, rank)?;
        let (generates, stats) = decide_semigroup_generates_free_with_stats(&words, rank);
        let mut report = json!({
            "rank": rank,
            "words": texts,
            "generates": generates,
            "automaton_stats": stats,
        });
        if want_basis {
            report["basis"] = Value::Bool(decide_semigroup_basis_free(&words, rank));
        }
        Ok(report)
    };
    match command {
        FgCommand::DecideSgen { rank, words } => report(rank, &words, false),
        FgCommand::DecideSbasis { rank, words } => report(rank, &words, true),
        FgCommand::GroupGen { rank, words } => {
            let parsed = parse_words(&words, rank)?;
            Ok(json!({
                "rank": rank,
                "words": words,
                "group_generates": decide_group_generates_free(&parsed, rank),
            }))
        }
    }
}

fn run_ab(command: AbCommand) -> Result<Value, CliError> {
    match command {
        AbCommand::Rank { free_rank, factors } => {
            let factors: Vec<BigInt> = factors
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| {
                    p.trim()
                        .parse::<BigInt>()
                        .map_err(|_| CliError::invalid(format!("bad factor {p:?}")))
                })
                .collect::<Result<_, _>>()?;
            let group = AbelianGroup::new(free_rank, &factors)
                .map_err(|e| CliError::invalid(e.to_string()))?;
            let semigroup = semigroup_rank_abelian(&group);
            Ok(json!({
                "group": group.to_string(),
                "group_rank": group_rank_abelian(&group),
                "semigroup_rank": semigroup,
                "monoid_rank": monoid_rank_from_semigroup(semigroup, group.is_trivial()),
            }))
        }
        AbCommand::DecideSgen { group, elems } | AbCommand::DecideSbasis { group, elems } => {
            let group = parse_group(&group)?;
            let elements = parse_elements(&elems, &group)?;
            let generates = decide_semigroup_generates_abelian(&elements, &group);
            let certificate = semigroup_generation_certificate(&elements, &group)
                .map(|c| Value::Array(c.coefficients.iter().map(big_string).collect()))
                .unwrap_or(Value::Null);
            Ok(json!({
                "group": group.to_string(),
                "elements": elements.iter().map(element_json).collect::<Vec<_>>(),
                "group_rank": group_rank_abelian(&group),
                "semigroup_rank": semigroup_rank_abelian(&group),
                "group_generates": decide_group_generates_abelian(&elements, &group),
                "generates": generates,
                "basis": decide_semigroup_basis_abelian(&elements, &group),
                "certificate": certificate,
            }))
        }
        AbCommand::Snf { matrix } => {
            let a = parse_matrix(&matrix)?;
            let result = snf(&a);
            Ok(json!({
                "input": matrix_json(&a),
                "u": matrix_json(&result.u),
                "d": matrix_json(&result.d),
                "v": matrix_json(&result.v),
                "diagonal": result.diagonal().iter().map(big_string).collect::<Vec<_>>(),
            }))
        }
    }
}

fn run_witness(command: WitnessCommand) -> Result<Value, CliError> {
    match command {
        WitnessCommand::Augment { generators } => {
            for (i, name) in generators.iter().enumerate() {
                let expected = Word::generator(i).to_string();
                if *name != expected {
                    return Err(CliError::invalid(format!(
                        "generator #{i} must be {expected:?}, got {name:?} (generators are positional)"
                    )));
                }
            }
            let (added, table) = augment_to_semigroup_gens(generators.len())
                .map_err(|e| CliError::invalid(e.to_string()))?;
            if !table.verify_by_free_reduction() {
                return Err(CliError::Internal(
                    "augmentation witness failed free reduction".into(),
                ));
            }
            Ok(json!({
                "added": added.to_string(),
                "witnesses": witness_table_json(&table),
                "verified": true,
            }))
        }
        WitnessCommand::Torsion { n, index, order } => {
            let shrink =
                torsion_shrink(n, index, order).map_err(|e| CliError::invalid(e.to_string()))?;
            // Verify by evaluation in Z^{n-1} x Z_order with the permuted
            // standard basis: position j of the reordered list is the j-th
            // coordinate, the torsion generator last.
            let group = AbelianGroup::new(n - 1, &[BigInt::from(order)])
                .map_err(|e| CliError::Internal(e.to_string()))?;
            let mut assignment = vec![group.zero(); n];
            for (position, &original) in shrink.permutation.iter().enumerate() {
                let mut coords = vec![BigInt::from(0); n];
                coords[position] = BigInt::from(1);
                assignment[original] = group
                    .element(&coords)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
            }
            let verified = shrink
                .witnesses
                .verify_by_abelian_evaluation(&group, &assignment);
            if !verified {
                return Err(CliError::Internal(
                    "torsion witness failed evaluation".into(),
                ));
            }
            Ok(json!({
                "set": shrink.set.iter().map(Word::to_string).collect::<Vec<_>>(),
                "permutation": shrink.permutation,
                "witnesses": witness_table_json(&shrink.witnesses),
                "verified_in": group.to_string(),
                "verified": true,
            }))
        }
        WitnessCommand::Qp { presentation } => {
            let presentation = load_presentation(&presentation)?;
            let witnesses = positive_inverse_witnesses(&presentation)
                .map_err(|e| CliError::invalid(e.to_string()))?;
            let verified = witnesses.verify(&presentation);
            if !verified {
                return Err(CliError::Internal(
                    "relator witness failed the conjugacy check".into(),
                ));
            }
            Ok(json!({
                "presentation": serde_json::to_value(&presentation).expect("presentations serialize"),
                "witnesses": witness_table_json(&witnesses.table),
                "occurrences": witnesses.occurrences.iter().map(|occ| json!({
                    "generator": Word::generator(occ.generator).to_string(),
                    "relator_index": occ.relator_index,
                    "position": occ.position,
                })).collect::<Vec<_>>(),
                "verified": true,
            }))
        }
    }
}

fn run_surface(genus: usize, orientable: bool) -> Result<Value, CliError> {
    let descriptor =
        SurfaceDescriptor::new(genus, orientable).map_err(|e| CliError::invalid(e.to_string()))?;
    let info = surface_info(descriptor);
    let witness = match &info.witness {
        SurfaceWitness::Augmented { added, table } => json!({
            "kind": "augmented",
            "added": added.to_string(),
            "witnesses": witness_table_json(table),
        }),
        SurfaceWitness::PositiveRelator(witnesses) => json!({
            "kind": "positive_relator",
            "witnesses": witness_table_json(&witnesses.table),
        }),
        SurfaceWitness::Trivial => json!({ "kind": "trivial" }),
    };
    Ok(json!({
        "genus": genus,
        "orientable": orientable,
        "presentation": serde_json::to_value(&info.presentation).expect("presentations serialize"),
        "ranks": ranks_json(&info.ranks),
        "witness": witness,
    }))
}

fn run_variety(args: VarietyArgs) -> Result<Value, CliError> {
    let kind = if args.kind.periodic {
        VarietyKind::Periodic
    } else {
        VarietyKind::ContainsZ
    };
    let ranks = variety_rank(kind, args.n);
    Ok(json!({
        "kind": match kind {
            VarietyKind::Periodic => "periodic",
            VarietyKind::ContainsZ => "contains_z",
        },
        "n": args.n,
        "ranks": ranks_json(&ranks),
    }))
}

fn run_analyze(path: &std::path::Path, nilpotent: bool) -> Result<Value, CliError> {
    let presentation = load_presentation(path)?;
    let flags = StructuralFlags { nilpotent };
    let report = rank_bounds(&presentation, flags);
    Ok(json!({
        "presentation": serde_json::to_value(&presentation).expect("presentations serialize"),
        "abelianization": abelianization(&presentation).to_string(),
        "report": serde_json::to_value(&report).expect("reports serialize"),
    }))
}

fn run_examples() -> Value {
    let rows: Vec<Value> = worked_examples()
        .iter()
        .map(|fixture| {
            json!({
                "id": fixture.id,
                "description": fixture.description,
                "group_rank": fixture.group_rank,
                "semigroup_rank": fixture.semigroup_rank,
                "witness_verified": fixture.witness_verified,
            })
        })
        .collect();
    json!({ "examples": rows })
}

// -------------------------------------------------------------- regression

struct Check {
    fixture: &'static str,
    claim: String,
    passed: bool,
}

fn integer_to_word(value: i64) -> ReducedWord {
    let magnitude = value.unsigned_abs() as usize;
    let base = Word::generator(0).pow(magnitude);
    let word = if value < 0 { base.invert() } else { base };
    word.reduce()
}

fn run_regress() -> Result<Value, CliError> {
    let mut checks: Vec<Check> = Vec::new();
    let mut push = |fixture: &'static str, claim: String, passed: bool| {
        checks.push(Check {
            fixture,
            claim,
            passed,
        });
    };

    for fixture in worked_examples() {
        if let Some(values) = &fixture.integer_elements {
            let z = AbelianGroup::free(1);
            let elements: Vec<AbelianElement> = values
                .iter()
                .map(|&v| z.element_i64(&[v]).expect("rank-one coordinates"))
                .collect();
            let words: Vec<ReducedWord> = values.iter().map(|&v| integer_to_word(v)).collect();
            if let Some(expected) = fixture.expect_semigroup_generates {
                let via_integers = decide_semigroup_generates_abelian(&elements, &z);
                let via_automata = decide_semigroup_generates_free_with_stats(&words, 1).0;
                push(
                    fixture.id,
                    format!("semigroup-generates = {expected} (integer path)"),
                    via_integers == expected,
                );
                push(
                    fixture.id,
                    format!("semigroup-generates = {expected} (automata path)"),
                    via_automata == expected,
                );
            }
            if let Some(expected) = fixture.expect_semigroup_basis {
                let via_integers = decide_semigroup_basis_abelian(&elements, &z);
                let via_automata = decide_semigroup_basis_free(&words, 1);
                push(
                    fixture.id,
                    format!("semigroup-basis = {expected} (both paths)"),
                    via_integers == expected && via_automata == expected,
                );
            }
            if fixture.no_proper_subset_generates {
                let all_fail = (0..elements.len()).all(|skip| {
                    let subset: Vec<AbelianElement> = elements
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, e)| e.clone())
                        .collect();
                    !decide_semigroup_generates_abelian(&subset, &z)
                });
                push(
                    fixture.id,
                    "no proper subset semigroup-generates".into(),
                    all_fail,
                );
            }
        }

        if let Some((group, coords)) = &fixture.abelian_instance {
            let elements: Vec<AbelianElement> = coords
                .iter()
                .map(|c| group.element_i64(c).expect("fixture coordinates"))
                .collect();
            if let Some(expected) = fixture.expect_semigroup_generates {
                push(
                    fixture.id,
                    format!("semigroup-generates = {expected}"),
                    decide_semigroup_generates_abelian(&elements, group) == expected,
                );
            }
            if let Some(expected) = fixture.expect_semigroup_basis {
                push(
                    fixture.id,
                    format!("semigroup-basis = {expected}"),
                    decide_semigroup_basis_abelian(&elements, group) == expected,
                );
            }
        }

        if let Some(presentation) = &fixture.presentation {
            if let Some(expected) = &fixture.abelianization {
                push(
                    fixture.id,
                    format!("abelianization = {expected}"),
                    abelianization(presentation) == *expected,
                );
            }
            let report = rank_bounds(
                presentation,
                StructuralFlags {
                    nilpotent: fixture.nilpotent,
                },
            );
            let consistent = report.group_rank_lower <= fixture.group_rank
                && fixture.group_rank <= report.group_rank_upper
                && report.semigroup_rank_lower <= fixture.semigroup_rank
                && fixture.semigroup_rank <= report.semigroup_rank_upper;
            push(
                fixture.id,
                "analyzer bounds contain the recorded ranks".into(),
                consistent,
            );
        }
    }

    let failed = checks.iter().filter(|c| !c.passed).count();
    let report = json!({
        "total": checks.len(),
        "failed": failed,
        "checks": checks.iter().map(|c| json!({
            "fixture": c.fixture,
            "claim": c.claim,
            "passed": c.passed,
        })).collect::<Vec<_>>(),
    });
    if failed > 0 {
        println!("{report}");
        return Err(CliError::Internal(format!(
            "{failed} regression check(s) failed"
        )));
    }
    Ok(report)
}

// ------------------------------------------------------------------ pretty

fn print_pretty(value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, entry) in map {
                match entry {
                    Value::Object(_) | Value::Array(_) if !is_flat(entry) => {
                        println!("{pad}{key}:");
                        print_pretty(entry, indent + 1);
                    }
                    _ => println!("{pad}{key}: {}", flat(entry)),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    println!("{pad}- {}", flat(item));
                } else {
                    println!("{pad}-");
                    print_pretty(item, indent + 1);
                }
            }
        }
        other => println!("{pad}{}", flat(other)),
    }
}

fn is_flat(value: &Value) -> bool {
    match value {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn flat(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(flat).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}
