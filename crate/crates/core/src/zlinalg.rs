//! Exact integer linear algebra: Smith normal form and finitely generated
//! abelian group arithmetic.
//!
//! Everything here works over arbitrary-precision integers; intermediate
//! entries of a Smith reduction can be much larger than anything in the
//! input, so no machine-word arithmetic is used anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZlinalgError {
    #[error("entry vector has length {got}, expected {rows} x {cols} = {expected}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        got: usize,
        expected: usize,
    },
    #[error("denominator generators are not contained in the numerator lattice")]
    DenominatorNotContained,
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, ZlinalgError> {
        if entries.len() != rows * cols {
            return Err(ZlinalgError::ShapeMismatch {
                rows,
                cols,
                got: entries.len(),
                expected: rows * cols,
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Test helper and CLI convenience: build from machine-word rows.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Self {
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column of wrong height");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
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

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out.get(r, c) + a * rhs.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "row mismatch in hstack");
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.get(r, c).is_one()
                    } else {
                        self.get(r, c).is_zero()
                    }
                })
            })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row(i) += q * row(j)
    fn add_row_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(i, c) + q * self.get(j, c);
            self.set(i, c, v);
        }
    }

    /// col(i) += q * col(j)
    fn add_col_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, i) + q * self.get(r, j);
            self.set(r, i, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }
}

/// Outcome of a Smith reduction: `left * a * right == diag(d)` with `left`
/// and `right` unimodular, the `d` nonnegative and each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SnfResult {
    /// Number of nonzero invariant factors, i.e. the rank of the input.
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, cols);
        for (i, v) in self.d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }
}

/// Smith normal form over the integers.
///
/// Pivot rule: among the nonzero entries of the trailing submatrix, the one
/// of smallest absolute value, ties broken by lowest (row, col).  This makes
/// the reduction (and hence `left`/`right`) fully deterministic.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let bound = rows.min(cols);

    let find_pivot = |m: &IntMatrix, t: usize| -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                let v = m.get(r, c);
                if v.is_zero() {
                    continue;
                }
                let av = v.abs();
                let better = match &best {
                    None => true,
                    Some((b, _, _)) => av < *b,
                };
                if better {
                    best = Some((av, r, c));
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    };

    let mut t = 0;
    while t < bound {
        let (pr, pc) = match find_pivot(&m, t) {
            Some(p) => p,
            None => break,
        };
        m.swap_rows(t, pr);
        left.swap_rows(t, pr);
        m.swap_cols(t, pc);
        right.swap_cols(t, pc);
        if m.get(t, t).is_negative() {
            m.negate_row(t);
            left.negate_row(t);
        }

        loop {
            // Clear column t below the pivot by floor division; leftover
            // remainders are strictly smaller than the pivot, so re-pivoting
            // terminates.
            let mut dirty = false;
            for i in t + 1..rows {
                if m.get(i, t).is_zero() {
                    continue;
                }
                let q = m.get(i, t).div_floor(m.get(t, t));
                let nq = -q;
                m.add_row_multiple(i, t, &nq);
                left.add_row_multiple(i, t, &nq);
                if !m.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if m.get(t, j).is_zero() {
                    continue;
                }
                let q = m.get(t, j).div_floor(m.get(t, t));
                let nq = -q;
                m.add_col_multiple(j, t, &nq);
                right.add_col_multiple(j, t, &nq);
                if !m.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pr, pc) = find_pivot(&m, t).expect("nonzero residue must remain");
                m.swap_rows(t, pr);
                left.swap_rows(t, pr);
                m.swap_cols(t, pc);
                right.swap_cols(t, pc);
                if m.get(t, t).is_negative() {
                    m.negate_row(t);
                    left.negate_row(t);
                }
                continue;
            }
            // Row and column t are clear; make the pivot divide the rest of
            // the submatrix before moving on.
            let pivot = m.get(t, t).clone();
            let offender = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !m.get(r, c).mod_floor(&pivot).is_zero());
            match offender {
                Some((r, _)) => {
                    m.add_row_multiple(t, r, &BigInt::one());
                    left.add_row_multiple(t, r, &BigInt::one());
                }
                None => break,
            }
        }
        t += 1;
    }

    let d: Vec<BigInt> = (0..bound).map(|i| m.get(i, i).clone()).collect();
    SnfResult { d, left, right }
}

/// The cokernel `Z^rows / im(a)` as an abstract group.
pub fn cokernel(a: &IntMatrix) -> FgAbelianGroup {
    let snf = smith_normal_form(a);
    let free_rank = a.rows() - snf.rank();
    let torsion: Vec<BigInt> = snf
        .d
        .iter()
        .filter(|v| !v.is_zero() && !v.is_one())
        .cloned()
        .collect();
    FgAbelianGroup::from_normalized(free_rank, torsion)
}

/// Basis of the integer kernel of `a`, as columns.  The span is saturated:
/// the columns extend to a basis of the ambient lattice.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let cols: Vec<Vec<BigInt>> = (0..a.cols())
        .filter(|&j| j >= snf.d.len() || snf.d[j].is_zero())
        .map(|j| snf.right.column(j))
        .collect();
    IntMatrix::from_columns(a.cols(), &cols)
}

/// Particular integer solution of `a x = v`, if one exists.
/// Free coordinates are set to zero, so the answer is deterministic.
pub fn solve_columns(a: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), v.len(), "solve_columns: length mismatch");
    let snf = smith_normal_form(a);
    let w = snf.left.mul_vec(v);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, wi) in w.iter().enumerate() {
        let di = snf.d.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !wi.is_zero() {
                return None;
            }
        } else {
            let (q, r) = wi.div_mod_floor(&di);
            if !r.is_zero() {
                return None;
            }
            if i < y.len() {
                y[i] = q;
            } else {
                return None;
            }
        }
    }
    Some(snf.right.mul_vec(&y))
}

/// Whether `v` lies in the lattice spanned by the columns of `a`.
pub fn lattice_contains(a: &IntMatrix, v: &[BigInt]) -> bool {
    solve_columns(a, v).is_some()
}

/// Inverse of a unimodular matrix.  Panics if the input is not unimodular.
pub fn inverse_unimodular(u: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(u);
    assert!(
        snf.d.iter().all(|d| d.is_one()),
        "inverse_unimodular: matrix is not unimodular"
    );
    // left * u * right = I  =>  u^{-1} = right * left
    snf.right.mul(&snf.left)
}

/// A lattice basis for the column span of `a`, together with the data needed
/// to express further vectors in that basis.
pub struct ColumnLatticeBasis {
    /// n x r matrix whose columns are a basis of the column span.
    pub basis: IntMatrix,
    left: IntMatrix,
    d: Vec<BigInt>,
}

impl ColumnLatticeBasis {
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Coordinates of `v` in the basis, or None if `v` is outside the span.
    pub fn express(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let w = self.left.mul_vec(v);
        let mut coords = Vec::with_capacity(self.d.len());
        for (i, wi) in w.iter().enumerate() {
            if i < self.d.len() {
                let (q, r) = wi.div_mod_floor(&self.d[i]);
                if !r.is_zero() {
                    return None;
                }
                coords.push(q);
            } else if !wi.is_zero() {
                return None;
            }
        }
        Some(coords)
    }
}

pub fn column_lattice_basis(a: &IntMatrix) -> ColumnLatticeBasis {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let left_inv = inverse_unimodular(&snf.left);
    let cols: Vec<Vec<BigInt>> = (0..rank)
        .map(|i| {
            left_inv
                .column(i)
                .into_iter()
                .map(|x| x * &snf.d[i])
                .collect()
        })
        .collect();
    ColumnLatticeBasis {
        basis: IntMatrix::from_columns(a.rows(), &cols),
        left: snf.left,
        d: snf.d[..rank].to_vec(),
    }
}

/// Quotient of the column lattice of `num_gens` by the column lattice of
/// `den_gens`.  Every denominator column must lie in the numerator span.
pub fn subquotient(
    num_gens: &IntMatrix,
    den_gens: &IntMatrix,
) -> Result<FgAbelianGroup, ZlinalgError> {
    assert_eq!(
        num_gens.rows(),
        den_gens.rows(),
        "subquotient: ambient rank mismatch"
    );
    let basis = column_lattice_basis(num_gens);
    let r = basis.rank();
    let mut x_cols = Vec::with_capacity(den_gens.cols());
    for j in 0..den_gens.cols() {
        let col = den_gens.column(j);
        match basis.express(&col) {
            Some(coords) => x_cols.push(coords),
            None => return Err(ZlinalgError::DenominatorNotContained),
        }
    }
    let x = IntMatrix::from_columns(r, &x_cols);
    Ok(cokernel(&x))
}

/// Finitely generated abelian group in invariant-factor form.
///
/// `torsion` entries are each > 1 and each divides the next, so structural
/// equality is canonical equality of groups.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => Self {
                free_rank: 0,
                torsion: vec![BigInt::from(n)],
            },
        }
    }

    /// Build from arbitrary torsion coefficients (each may be any integer;
    /// zeros count toward the free rank) and normalize to invariant factors.
    pub fn from_torsion_gens(free_rank: usize, coeffs: &[BigInt]) -> Self {
        let n = coeffs.len();
        let mut diag = IntMatrix::zeros(n, n);
        for (i, c) in coeffs.iter().enumerate() {
            diag.set(i, i, c.clone());
        }
        let inner = cokernel(&diag);
        Self {
            free_rank: free_rank + inner.free_rank,
            torsion: inner.torsion,
        }
    }

    fn from_normalized(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        debug_assert!(torsion.iter().all(|t| *t > BigInt::one()));
        debug_assert!(torsion
            .windows(2)
            .all(|w| w[1].mod_floor(&w[0]).is_zero()));
        Self { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut coeffs = self.torsion.clone();
        coeffs.extend(other.torsion.iter().cloned());
        Self::from_torsion_gens(self.free_rank + other.free_rank, &coeffs)
    }

    /// Rank as an elementary 2-group.  Panics if the group is not of the
    /// form (Z/2)^k; the classification invariants this feeds are always of
    /// that shape.
    pub fn elementary_two_rank(&self) -> usize {
        assert_eq!(self.free_rank, 0, "group has free part");
        let two = BigInt::from(2);
        assert!(
            self.torsion.iter().all(|t| *t == two),
            "group has torsion other than Z/2"
        );
        self.torsion.len()
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" \u{2295} "))
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn assert_snf_valid(a: &IntMatrix) -> SnfResult {
        let snf = smith_normal_form(a);
        // left * a * right == diag(d), exactly
        let prod = snf.left.mul(a).mul(&snf.right);
        assert_eq!(prod, snf.diagonal_matrix(a.rows(), a.cols()));
        // divisibility chain, nonnegative entries
        for v in &snf.d {
            assert!(!v.is_negative());
        }
        for w in snf.d.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].mod_floor(&w[0]).is_zero());
            }
        }
        assert!(snf.left.determinant().abs().is_one());
        assert!(snf.right.determinant().abs().is_one());
        snf
    }

    #[test]
    fn snf_diag_2_3() {
        let a = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let snf = assert_snf_valid(&a);
        assert_eq!(snf.d, vec![big(1), big(6)]);
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMatrix::zeros(2, 2);
        let snf = assert_snf_valid(&a);
        assert_eq!(snf.d, vec![big(0), big(0)]);
    }

    #[test]
    fn snf_unimodular_input() {
        let a = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let snf = assert_snf_valid(&a);
        assert_eq!(snf.d, vec![big(1), big(1)]);
    }

    #[test]
    fn snf_empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let a = IntMatrix::zeros(r, c);
            let snf = assert_snf_valid(&a);
            assert!(snf.d.is_empty());
        }
    }

    #[test]
    fn cokernel_examples() {
        // A = [2]: Z/2
        let a = IntMatrix::from_i64_rows(&[&[2]]);
        assert_eq!(cokernel(&a), FgAbelianGroup::cyclic(2));
        // empty 2x0: Z^2
        let a = IntMatrix::zeros(2, 0);
        assert_eq!(cokernel(&a), FgAbelianGroup::free(2));
        // diag(2,3): Z/6
        let a = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(cokernel(&a), FgAbelianGroup::cyclic(6));
    }

    #[test]
    fn kernel_examples() {
        // [1 1]: kernel spanned by (1,-1)
        let a = IntMatrix::from_i64_rows(&[&[1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        let col = k.column(0);
        assert!(col == vec![big(1), big(-1)] || col == vec![big(-1), big(1)]);

        // identity: trivial kernel
        let k = kernel_basis(&IntMatrix::identity(3));
        assert_eq!(k.cols(), 0);
    }

    #[test]
    fn kernel_2_4_matches_enumeration() {
        let a = IntMatrix::from_i64_rows(&[&[2, 4]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        // Independent oracle: every small solution of 2x + 4y = 0 must be an
        // integer multiple of the basis vector.
        let b0 = k.get(0, 0).clone();
        let b1 = k.get(1, 0).clone();
        assert!(b0.abs() == big(2) && b1.abs() == big(1));
        for x in -5i64..=5 {
            for y in -5i64..=5 {
                if 2 * x + 4 * y != 0 {
                    continue;
                }
                let v = vec![big(x), big(y)];
                assert!(lattice_contains(&k, &v), "({x},{y}) not spanned");
            }
        }
    }

    #[test]
    fn kernel_is_saturated() {
        let a = IntMatrix::from_i64_rows(&[&[2, 4], &[1, 2]]);
        let k = kernel_basis(&a);
        assert!(a.mul(&k).is_zero());
        let snf = smith_normal_form(&k);
        assert!(snf.d.iter().all(|d| d.is_one()));
    }

    #[test]
    fn subquotient_examples() {
        let id = IntMatrix::identity(1);
        assert_eq!(
            subquotient(&id, &id).unwrap(),
            FgAbelianGroup::trivial()
        );
        let two = IntMatrix::from_i64_rows(&[&[2]]);
        assert_eq!(subquotient(&id, &two).unwrap(), FgAbelianGroup::cyclic(2));

        // num = {(1,-2)}, den = {(-1,2)}: same line, trivial quotient
        let num = IntMatrix::from_i64_rows(&[&[1], &[-2]]);
        let den = IntMatrix::from_i64_rows(&[&[-1], &[2]]);
        assert_eq!(subquotient(&num, &den).unwrap(), FgAbelianGroup::trivial());
    }

    #[test]
    fn subquotient_rejects_outside_denominator() {
        let num = IntMatrix::from_i64_rows(&[&[2]]);
        let den = IntMatrix::from_i64_rows(&[&[1]]);
        assert_eq!(
            subquotient(&num, &den),
            Err(ZlinalgError::DenominatorNotContained)
        );
    }

    #[test]
    fn group_normalization_and_sum() {
        let g = FgAbelianGroup::from_torsion_gens(0, &[big(2), big(3)]);
        assert_eq!(g, FgAbelianGroup::cyclic(6));
        let h = FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::cyclic(4));
        assert_eq!(h.torsion(), &[big(2), big(4)]);
        assert_eq!(h.order(), Some(big(8)));
        let s = FgAbelianGroup::free(1).direct_sum(&FgAbelianGroup::cyclic(2));
        assert_eq!(format!("{s}"), "Z \u{2295} Z/2");
    }

    #[test]
    fn solve_columns_basics() {
        let a = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let x = solve_columns(&a, &[big(4), big(-3)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![big(4), big(-3)]);
        assert!(solve_columns(&a, &[big(1), big(0)]).is_none());
    }

    #[test]
    fn inverse_unimodular_roundtrip() {
        let u = IntMatrix::from_i64_rows(&[&[2, 3], &[1, 2]]);
        let inv = inverse_unimodular(&u);
        assert!(u.mul(&inv).is_identity());
        assert!(inv.mul(&u).is_identity());
    }

    fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
        (0usize..=4, 0usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c).prop_map(move |v| {
                IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
            })
        })
    }

    fn arb_unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
        // product of a few elementary operations
        proptest::collection::vec((0usize..n, 0usize..n, -2i64..=2, any::<bool>()), 0..8)
            .prop_map(move |ops| {
                let mut u = IntMatrix::identity(n);
                for (i, j, q, swap) in ops {
                    if i == j {
                        continue;
                    }
                    if swap {
                        u.swap_rows(i, j);
                    } else {
                        u.add_row_multiple(i, j, &BigInt::from(q));
                    }
                }
                u
            })
    }

    proptest! {
        #[test]
        fn snf_invariants_hold(a in arb_matrix()) {
            assert_snf_valid(&a);
        }

        #[test]
        fn cokernel_invariant_under_unimodular(
            a in (2usize..=4).prop_flat_map(|n| {
                (proptest::collection::vec(-6i64..=6, n * n), arb_unimodular(n), arb_unimodular(n))
                    .prop_map(move |(v, u1, u2)| {
                        (IntMatrix::new(n, n, v.into_iter().map(BigInt::from).collect()).unwrap(), u1, u2)
                    })
            })
        ) {
            let (m, u1, u2) = a;
            let base = cokernel(&m);
            prop_assert_eq!(cokernel(&u1.mul(&m)), base.clone());
            prop_assert_eq!(cokernel(&m.mul(&u2)), base);
        }

        #[test]
        fn kernel_saturated_and_annihilated(a in arb_matrix()) {
            let k = kernel_basis(&a);
            prop_assert!(a.mul(&k).is_zero());
            let snf = smith_normal_form(&k);
            prop_assert!(snf.d.iter().all(|d| d.is_one()));
            // rank-nullity over Q
            let rank = smith_normal_form(&a).rank();
            prop_assert_eq!(k.cols() + rank, a.cols());
        }
    }
}
