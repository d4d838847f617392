//! Finitely generated abelian groups with exact integer arithmetic.
//!
//! The workhorse is Smith normal form over arbitrary-precision integers:
//! it turns presentation matrices into invariant-factor decompositions
//! `Z^r × Z_{d1} × … × Z_{dk}` and answers group-generation questions by
//! lattice membership. Semigroup generation additionally needs a strictly
//! positive rational kernel vector of the free-part matrix, decided by
//! Fourier–Motzkin elimination over exact rationals. Floating point is
//! never used in any decision.
//!
//! The derived semigroup criterion is validated against
//! [`bfs_closure_oracle`], a brute-force closure that is authoritative
//! whenever the two disagree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("matrix dimensions {rows}x{cols} do not match {len} entries")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("invariant factor must be a positive integer, got {0}")]
    InvalidFactor(BigInt),
    #[error("element has {got} coordinates, group needs {expected}")]
    ElementShape { expected: usize, got: usize },
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, AbelianError> {
        if entries.len() != rows * cols {
            return Err(AbelianError::DimensionMismatch {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        IntMatrix::new(
            rows,
            cols,
            entries.iter().map(|&e| BigInt::from(e)).collect(),
        )
        .expect("entry count matches dimensions")
    }

    /// Build from column vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = IntMatrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, e) in col.iter().enumerate() {
                m[(i, j)] = e.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let swap = (k + 1..n).find(|&i| !at(&m, i, k).is_zero());
                match swap {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j)) / &prev;
                    m[i * n + j] = v;
                }
            }
            prev = at(&m, k, k);
        }
        sign * at(&m, n - 1, n - 1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[a] += q * row[b]`
    fn add_row_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let add = q * &self[(b, j)];
            self[(a, j)] += add;
        }
    }

    /// `col[a] += q * col[b]`
    fn add_col_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let add = q * &self[(i, b)];
            self[(i, a)] += add;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, nonnegative,
/// `d_1 | d_2 | …`.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

/// Smith normal form. Pivoting always selects the smallest nonzero absolute
/// value in the remaining submatrix to limit entry growth.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let limit = a.rows().min(a.cols());

    for t in 0..limit {
        loop {
            // Smallest-absolute-value nonzero pivot in the submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d.rows() {
                for j in t..d.cols() {
                    if !d[(i, j)].is_zero()
                        && pivot.is_none_or(|(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                // Remaining submatrix is zero; done entirely.
                break;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Reduce column t below the pivot and row t right of the pivot.
            let mut clean = true;
            for i in t + 1..d.rows() {
                if !d[(i, t)].is_zero() {
                    let q = -(&d[(i, t)] / &d[(t, t)]);
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    if !d[(i, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..d.cols() {
                if !d[(t, j)].is_zero() {
                    let q = -(&d[(t, j)] / &d[(t, t)]);
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    if !d[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }

            // Divisibility: the pivot must divide everything that follows.
            let mut offender = None;
            'scan: for i in t + 1..d.rows() {
                for j in t + 1..d.cols() {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        if d[(t, t)].is_zero() {
            break;
        }
    }
    SnfResult { u, d, v }
}

/// Normalized invariant-factor form `Z^r × Z_{d1} × … × Z_{dk}` with
/// `2 ≤ d_1 | d_2 | …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    /// Accepts arbitrary positive factors and canonicalizes: unit factors
    /// are dropped and the rest are rewritten into a divisibility chain
    /// (e.g. `Z_2 × Z_3` becomes `Z_6`).
    pub fn new(free_rank: usize, factors: &[BigInt]) -> Result<Self, AbelianError> {
        for f in factors {
            if !f.is_positive() {
                return Err(AbelianError::InvalidFactor(f.clone()));
            }
        }
        let mut diag = IntMatrix::zero(factors.len(), factors.len());
        for (i, f) in factors.iter().enumerate() {
            diag[(i, i)] = f.clone();
        }
        let chain = snf(&diag);
        let invariant_factors = chain
            .diagonal()
            .into_iter()
            .filter(|d| d > &BigInt::one())
            .collect();
        Ok(AbelianGroup {
            free_rank,
            invariant_factors,
        })
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup::free(0)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Total coordinate count `r + k`.
    pub fn dimension(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    pub fn zero(&self) -> AbelianElement {
        AbelianElement {
            free: vec![BigInt::zero(); self.free_rank],
            torsion: vec![BigInt::zero(); self.invariant_factors.len()],
        }
    }

    /// Element from `r + k` integer coordinates, free part first; torsion
    /// coordinates are reduced modulo their factor.
    pub fn element(&self, coords: &[BigInt]) -> Result<AbelianElement, AbelianError> {
        if coords.len() != self.dimension() {
            return Err(AbelianError::ElementShape {
                expected: self.dimension(),
                got: coords.len(),
            });
        }
        let free = coords[..self.free_rank].to_vec();
        let torsion = coords[self.free_rank..]
            .iter()
            .zip(&self.invariant_factors)
            .map(|(c, d)| c.mod_floor(d))
            .collect();
        Ok(AbelianElement { free, torsion })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<AbelianElement, AbelianError> {
        let big: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
        self.element(&big)
    }

    pub fn add(&self, a: &AbelianElement, b: &AbelianElement) -> AbelianElement {
        let free = a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(&self.invariant_factors)
            .map(|((x, y), d)| (x + y).mod_floor(d))
            .collect();
        AbelianElement { free, torsion }
    }

    pub fn neg(&self, a: &AbelianElement) -> AbelianElement {
        let free = a.free.iter().map(|x| -x).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&self.invariant_factors)
            .map(|(x, d)| (-x).mod_floor(d))
            .collect();
        AbelianElement { free, torsion }
    }

    /// Evaluate a free-group word under an assignment of one group element
    /// per generator index.
    pub fn evaluate_word(
        &self,
        word: &crate::words::Word,
        assignment: &[AbelianElement],
    ) -> AbelianElement {
        let mut acc = self.zero();
        for letter in word.letters() {
            let value = &assignment[letter.index];
            let term = match letter.sign {
                crate::words::Sign::Plus => value.clone(),
                crate::words::Sign::Minus => self.neg(value),
            };
            acc = self.add(&acc, &term);
        }
        acc
    }

    /// Enumerate every element whose free coordinates lie in `[-bound, bound]`.
    pub fn box_elements(&self, bound: i64) -> Vec<AbelianElement> {
        let mut coords = vec![BigInt::zero(); self.dimension()];
        let mut out = Vec::new();
        self.enumerate_box(0, bound, &mut coords, &mut out);
        out
    }

    fn enumerate_box(
        &self,
        pos: usize,
        bound: i64,
        coords: &mut Vec<BigInt>,
        out: &mut Vec<AbelianElement>,
    ) {
        if pos == self.dimension() {
            out.push(self.element(coords).expect("coordinate count matches"));
            return;
        }
        if pos < self.free_rank {
            for c in -bound..=bound {
                coords[pos] = BigInt::from(c);
                self.enumerate_box(pos + 1, bound, coords, out);
            }
        } else {
            let modulus = self.invariant_factors[pos - self.free_rank].clone();
            let mut c = BigInt::zero();
            while c < modulus {
                coords[pos] = c.clone();
                self.enumerate_box(pos + 1, bound, coords, out);
                c += 1;
            }
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z_{d}"));
        }
        write!(f, "{}", parts.join("x"))
    }
}

/// Element in invariant-factor coordinates: free part over `Z`, torsion
/// part reduced modulo the respective factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianElement {
    free: Vec<BigInt>,
    torsion: Vec<BigInt>,
}

impl AbelianElement {
    pub fn free_part(&self) -> &[BigInt] {
        &self.free
    }

    pub fn torsion_part(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn coords(&self) -> Vec<BigInt> {
        self.free.iter().chain(&self.torsion).cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|c| c.is_zero()) && self.torsion.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for AbelianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Quotient `Z^g` by the column lattice of `relations` (a matrix with `g`
/// rows), in normalized invariant-factor form.
pub fn abelian_from_relations(relations: &IntMatrix) -> AbelianGroup {
    let g = relations.rows();
    let diagonal = snf(relations).diagonal();
    let nonzero = diagonal.iter().filter(|d| !d.is_zero()).count();
    let factors: Vec<BigInt> = diagonal
        .into_iter()
        .filter(|d| d > &BigInt::one())
        .collect();
    AbelianGroup {
        free_rank: g - nonzero,
        invariant_factors: factors,
    }
}

/// `r + k`: free rank plus number of invariant factors.
pub fn group_rank_abelian(group: &AbelianGroup) -> usize {
    group.free_rank + group.invariant_factors.len()
}

/// One more than the group rank exactly when the group is torsion-free
/// (including the trivial group, whose unique semigroup basis is `{0}`).
pub fn semigroup_rank_abelian(group: &AbelianGroup) -> usize {
    if group.is_torsion_free() {
        group_rank_abelian(group) + 1
    } else {
        group_rank_abelian(group)
    }
}

/// `⟨X⟩ = G`? Stack the elements of `X` as columns next to the relation
/// columns `d_i·e_{r+i}` and demand that the SNF diagonal is all ones.
pub fn decide_group_generates_abelian(elements: &[AbelianElement], group: &AbelianGroup) -> bool {
    let dim = group.dimension();
    if dim == 0 {
        return true;
    }
    let mut columns: Vec<Vec<BigInt>> = elements.iter().map(|e| e.coords()).collect();
    for (i, d) in group.invariant_factors.iter().enumerate() {
        let mut col = vec![BigInt::zero(); dim];
        col[group.free_rank + i] = d.clone();
        columns.push(col);
    }
    let stacked = IntMatrix::from_columns(dim, &columns);
    let diagonal = snf(&stacked).diagonal();
    diagonal.len() >= dim && diagonal.iter().take(dim).all(|d| d.is_one())
}

/// Witness that a strictly positive rational vector lies in the kernel of
/// the free-part matrix, scaled to positive integers (each `≥ 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveKernelCertificate {
    pub coefficients: Vec<BigInt>,
}

/// Linear constraint `coeffs · x ≤ bound` over exact rationals.
#[derive(Debug, Clone)]
struct Constraint {
    coeffs: Vec<BigRational>,
    bound: BigRational,
}

/// Does `M·c = 0` admit a rational solution with every `c_i ≥ 1`?
/// Fourier–Motzkin elimination with back-substitution for the witness.
pub fn positive_kernel_exists(matrix: &IntMatrix) -> Option<PositiveKernelCertificate> {
    let nvars = matrix.cols();
    if nvars == 0 {
        return Some(PositiveKernelCertificate {
            coefficients: Vec::new(),
        });
    }

    let mut constraints: Vec<Constraint> = Vec::new();
    for i in 0..matrix.rows() {
        let row: Vec<BigRational> = (0..nvars)
            .map(|j| BigRational::from(matrix[(i, j)].clone()))
            .collect();
        // Equality row·c = 0 as two inequalities.
        constraints.push(Constraint {
            coeffs: row.clone(),
            bound: BigRational::zero(),
        });
        constraints.push(Constraint {
            coeffs: row.iter().map(|c| -c).collect(),
            bound: BigRational::zero(),
        });
    }
    for j in 0..nvars {
        let mut coeffs = vec![BigRational::zero(); nvars];
        coeffs[j] = -BigRational::one();
        constraints.push(Constraint {
            coeffs,
            bound: -BigRational::one(),
        });
    }

    // Eliminate the last variable first; stages[j] bounds variable j in
    // terms of variables 0..j.
    let mut stages: Vec<Vec<Constraint>> = Vec::new();
    for j in (0..nvars).rev() {
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        let mut rest = Vec::new();
        for c in constraints {
            if c.coeffs[j].is_zero() {
                rest.push(c);
            } else if c.coeffs[j].is_positive() {
                uppers.push(c);
            } else {
                lowers.push(c);
            }
        }
        for lo in &lowers {
            for hi in &uppers {
                // Scale so the j-coefficients cancel.
                let scale_lo = &hi.coeffs[j];
                let scale_hi = -&lo.coeffs[j];
                let coeffs: Vec<BigRational> = (0..j)
                    .map(|k| &lo.coeffs[k] * scale_lo + &hi.coeffs[k] * &scale_hi)
                    .collect();
                let bound = &lo.bound * scale_lo + &hi.bound * &scale_hi;
                rest.push(Constraint {
                    coeffs: {
                        let mut full = coeffs;
                        full.resize(nvars, BigRational::zero());
                        full
                    },
                    bound,
                });
            }
        }
        let mut stage = lowers;
        stage.extend(uppers);
        stages.push(stage);
        constraints = rest;
    }
    stages.reverse();

    // All variables eliminated: remaining constraints are `0 ≤ bound`.
    if constraints.iter().any(|c| c.bound.is_negative()) {
        return None;
    }

    // Back-substitute from variable 0 upward, taking the tightest lower
    // bound (the `c_j ≥ 1` constraint guarantees one exists).
    let mut values: Vec<BigRational> = Vec::with_capacity(nvars);
    for (j, stage) in stages.iter().enumerate() {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for c in stage {
            let partial = (0..j).fold(BigRational::zero(), |acc, k| {
                acc + &c.coeffs[k] * &values[k]
            });
            let limit = (&c.bound - partial) / &c.coeffs[j];
            if c.coeffs[j].is_positive() {
                upper = Some(match upper {
                    Some(u) if u < limit => u,
                    _ => limit,
                });
            } else {
                lower = Some(match lower {
                    Some(l) if l > limit => l,
                    _ => limit,
                });
            }
        }
        let value = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l <= u, "feasible system must leave a nonempty interval");
                l
            }
            (Some(l), None) => l,
            (None, Some(u)) => u,
            (None, None) => BigRational::one(),
        };
        values.push(value);
    }

    // Scale to integers; multiplying by a positive integer keeps every
    // coordinate ≥ 1 and preserves M·c = 0.
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let coefficients: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    debug_assert!(coefficients.iter().all(|c| c >= &BigInt::one()));
    Some(PositiveKernelCertificate { coefficients })
}

fn free_part_matrix(elements: &[AbelianElement], group: &AbelianGroup) -> IntMatrix {
    let columns: Vec<Vec<BigInt>> = elements.iter().map(|e| e.free_part().to_vec()).collect();
    IntMatrix::from_columns(group.free_rank, &columns)
}

/// `X⁺ = G`? Group generation plus a strictly positive kernel vector of
/// the free-part matrix: raising the resulting torsion element to its
/// order expresses 0 as a nonempty positive combination, whence every
/// inverse is a positive word.
pub fn decide_semigroup_generates_abelian(
    elements: &[AbelianElement],
    group: &AbelianGroup,
) -> bool {
    if elements.is_empty() {
        return false;
    }
    decide_group_generates_abelian(elements, group)
        && positive_kernel_exists(&free_part_matrix(elements, group)).is_some()
}

/// Semigroup generation certificate alongside the verdict, for reporting.
pub fn semigroup_generation_certificate(
    elements: &[AbelianElement],
    group: &AbelianGroup,
) -> Option<PositiveKernelCertificate> {
    if elements.is_empty() || !decide_group_generates_abelian(elements, group) {
        return None;
    }
    positive_kernel_exists(&free_part_matrix(elements, group))
}

/// Basis iff the set generates and meets the minimum size exactly.
pub fn decide_semigroup_basis_abelian(elements: &[AbelianElement], group: &AbelianGroup) -> bool {
    let distinct: BTreeSet<&AbelianElement> = elements.iter().collect();
    distinct.len() == semigroup_rank_abelian(group)
        && decide_semigroup_generates_abelian(elements, group)
}

/// All elements of `X⁺` whose free coordinates stay in `[-bound, bound]`,
/// by breadth-first closure. Exact for finite groups (bound ignored).
pub fn bfs_closure_oracle(
    elements: &[AbelianElement],
    group: &AbelianGroup,
    bound: i64,
) -> BTreeSet<AbelianElement> {
    let in_box = |e: &AbelianElement| {
        group.is_finite() || e.free_part().iter().all(|c| c.abs() <= BigInt::from(bound))
    };
    let mut closure: BTreeSet<AbelianElement> = BTreeSet::new();
    let mut queue: VecDeque<AbelianElement> = VecDeque::new();
    for e in elements {
        if in_box(e) && closure.insert(e.clone()) {
            queue.push_back(e.clone());
        }
    }
    while let Some(current) = queue.pop_front() {
        for step in elements {
            let next = group.add(&current, step);
            if in_box(&next) && closure.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    closure
}

/// Brute-force generation check: the boxed closure must contain every
/// element of the box. Authoritative test oracle for
/// [`decide_semigroup_generates_abelian`].
///
/// The closure is taken over the doubled box `[-2·bound, 2·bound]`: some
/// box elements are only reachable through partial sums that leave the
/// box (e.g. a corner of `Z²` whose every positive expression overshoots
/// first), and pruning at the box edge would report them missing.
pub fn oracle_semigroup_generates(
    elements: &[AbelianElement],
    group: &AbelianGroup,
    bound: i64,
) -> bool {
    let closure = bfs_closure_oracle(elements, group, 2 * bound);
    group
        .box_elements(if group.is_finite() { 0 } else { bound })
        .iter()
        .all(|e| closure.contains(e))
}
