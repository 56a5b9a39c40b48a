//! Arbitrary-precision integer and rational matrices.
//!
//! Everything here is exact: determinants use fraction-free (Bareiss)
//! elimination, inverses are rational with no intermediate rounding, and the
//! Hermite normal form is the column-style lower-triangular canonical form
//! used by the lattice layer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IntVec = Vec<Int>;
pub type RatVec = Vec<Rat>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn int_vec(vs: &[i64]) -> IntVec {
    vs.iter().map(|&v| int(v)).collect()
}

pub fn rat_vec(vs: &[i64]) -> RatVec {
    vs.iter().map(|&v| Rat::from_integer(int(v))).collect()
}

pub fn to_rat_vec(v: &[Int]) -> RatVec {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// True iff every component of the rational vector is an integer.
pub fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn rat_vec_to_int(v: &[Rat]) -> Option<IntVec> {
    if is_integral(v) {
        Some(v.iter().map(|x| x.to_integer()).collect())
    } else {
        None
    }
}

/// A dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Int>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        assert!(rows >= 1, "matrices have at least one row");
        IntMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![Int::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| int(v)));
        }
        IntMatrix::new(r, c, data)
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_cols(dim: usize, cols: &[IntVec]) -> Self {
        let mut m = IntMatrix::zero(dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), dim, "column length mismatch");
            for i in 0..dim {
                *m.get_mut(i, j) = col[i].clone();
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

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Selects the listed columns, in the given order.
    pub fn select_cols(&self, indices: &[usize]) -> Self {
        let cols: Vec<IntVec> = indices.iter().map(|&j| self.col(j)).collect();
        IntMatrix::from_cols(self.rows, &cols)
    }

    pub fn transpose(&self) -> Self {
        assert!(self.cols >= 1, "cannot transpose a zero-column matrix");
        let mut m = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        m
    }

    /// Largest absolute value of an entry (the parameter written Δ elsewhere).
    pub fn infinity_norm(&self) -> Int {
        self.data
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                *out.get_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Int]) -> Result<IntVec> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|k| self.get(i, k) * &v[k]).sum())
            .collect())
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| Rat::from_integer(v.clone()))
                .collect(),
        }
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Int> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<Int>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                // pivot search: swap in a row with a nonzero entry in column k
                let Some(r) = (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) else {
                    return Ok(Int::zero());
                };
                for j in 0..n {
                    m.swap(k * n + j, r * n + j);
                }
                sign = -sign;
            }
            let pivot = at(&m, k, k);
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &pivot * at(&m, i, j) - at(&m, i, k) * at(&m, k, j);
                    // exact integer division is the Bareiss invariant
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = Int::zero();
            }
            prev = pivot;
        }
        Ok(sign * at(&m, n - 1, n - 1))
    }

    /// Solves `self * X = B` exactly; fails on singular or non-square input.
    ///
    /// Forward elimination is fraction-free; back-substitution runs over
    /// rationals on the resulting triangular integer system.
    pub fn solve_many(&self, b: &IntMatrix) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {}x{} vs rhs {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let n = self.rows;
        let w = n + b.cols;
        // augmented [A | B]
        let mut m: Vec<Int> = Vec::with_capacity(n * w);
        for i in 0..n {
            m.extend_from_slice(self.row(i));
            m.extend_from_slice(b.row(i));
        }
        let at = |m: &Vec<Int>, i: usize, j: usize| m[i * w + j].clone();
        let mut prev = Int::one();
        for k in 0..n {
            if at(&m, k, k).is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) else {
                    return Err(Error::SingularMatrix);
                };
                for j in 0..w {
                    m.swap(k * w + j, r * w + j);
                }
            }
            let pivot = at(&m, k, k);
            for i in k + 1..n {
                for j in k + 1..w {
                    let num = &pivot * at(&m, i, j) - at(&m, i, k) * at(&m, k, j);
                    m[i * w + j] = num / &prev;
                }
                m[i * w + k] = Int::zero();
            }
            prev = pivot;
        }
        // back-substitution over rationals
        let mut x = vec![Rat::zero(); n * b.cols];
        for c in 0..b.cols {
            for i in (0..n).rev() {
                let mut acc = Rat::from_integer(at(&m, i, n + c));
                for j in i + 1..n {
                    acc -= Rat::from_integer(at(&m, i, j)) * &x[j * b.cols + c];
                }
                x[i * b.cols + c] = acc / Rat::from_integer(at(&m, i, i));
            }
        }
        Ok(RatMatrix { rows: n, cols: b.cols, data: x })
    }

    pub fn solve_vec(&self, v: &[Int]) -> Result<RatVec> {
        let b = IntMatrix::from_cols(v.len(), &[v.to_vec()]);
        let x = self.solve_many(&b)?;
        Ok(x.col(0))
    }

    /// Exact rational inverse; `self * inverse(self) = I`.
    pub fn inverse(&self) -> Result<RatMatrix> {
        self.solve_many(&IntMatrix::identity(self.rows))
    }
}

/// A dense rational matrix; every entry is kept reduced by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        RatMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn col(&self, j: usize) -> RatVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                *out.get_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<RatVec> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|k| self.get(i, k) * &v[k]).sum())
            .collect())
    }

    /// Rational Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Err(Error::SingularMatrix);
            };
            if p != k {
                for j in 0..n {
                    let tmp = a.get(p, j).clone();
                    *a.get_mut(p, j) = a.get(k, j).clone();
                    *a.get_mut(k, j) = tmp;
                    let tmp = inv.get(p, j).clone();
                    *inv.get_mut(p, j) = inv.get(k, j).clone();
                    *inv.get_mut(k, j) = tmp;
                }
            }
            let pivot = a.get(k, k).clone();
            for j in 0..n {
                *a.get_mut(k, j) = a.get(k, j) / &pivot;
                *inv.get_mut(k, j) = inv.get(k, j) / &pivot;
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                for j in 0..n {
                    let av = a.get(k, j) * &f;
                    *a.get_mut(i, j) = a.get(i, j) - av;
                    let iv = inv.get(k, j) * &f;
                    *inv.get_mut(i, j) = inv.get(i, j) - iv;
                }
            }
        }
        Ok(inv)
    }
}

/// Column-style Hermite normal form `A * U = H`.
///
/// `h` is m x n with the leading m x m block lower triangular, positive
/// diagonal, and off-diagonal entries reduced modulo the diagonal; the
/// remaining n - m columns are zero. `u` is n x n unimodular.
#[derive(Debug, Clone)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub u: IntMatrix,
}

impl HnfResult {
    /// The leading m x m block of H: a triangular basis of the column lattice.
    pub fn lattice_basis(&self) -> IntMatrix {
        let m = self.h.rows();
        let cols: Vec<IntVec> = (0..m).map(|j| self.h.col(j)).collect();
        IntMatrix::from_cols(m, &cols)
    }
}

/// Hermite normal form of a full-row-rank integer matrix by unimodular
/// column operations. Fails with `RankDeficient` when rank(A) < m.
pub fn hnf(a: &IntMatrix) -> Result<HnfResult> {
    let m = a.rows();
    let n = a.cols();
    if n < m {
        return Err(Error::RankDeficient);
    }
    let mut h = a.clone();
    let mut u = IntMatrix::identity(n);

    let swap_cols = |h: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize| {
        if a == b {
            return;
        }
        for i in 0..m {
            let tmp = h.get(i, a).clone();
            *h.get_mut(i, a) = h.get(i, b).clone();
            *h.get_mut(i, b) = tmp;
        }
        for i in 0..n {
            let tmp = u.get(i, a).clone();
            *u.get_mut(i, a) = u.get(i, b).clone();
            *u.get_mut(i, b) = tmp;
        }
    };
    // col[dst] -= q * col[src]
    let add_col = |h: &mut IntMatrix, u: &mut IntMatrix, dst: usize, src: usize, q: &Int| {
        if q.is_zero() {
            return;
        }
        for i in 0..m {
            let v = h.get(i, src) * q;
            *h.get_mut(i, dst) = h.get(i, dst) - v;
        }
        for i in 0..n {
            let v = u.get(i, src) * q;
            *u.get_mut(i, dst) = u.get(i, dst) - v;
        }
    };
    let negate_col = |h: &mut IntMatrix, u: &mut IntMatrix, c: usize| {
        for i in 0..m {
            let v = -h.get(i, c).clone();
            *h.get_mut(i, c) = v;
        }
        for i in 0..n {
            let v = -u.get(i, c).clone();
            *u.get_mut(i, c) = v;
        }
    };

    for i in 0..m {
        // Euclidean reduction across columns i..n until row i has a single
        // nonzero entry, which becomes the pivot H[i][i].
        loop {
            let pivot_col = (i..n)
                .filter(|&j| !h.get(i, j).is_zero())
                .min_by_key(|&j| h.get(i, j).abs());
            let Some(p) = pivot_col else {
                return Err(Error::RankDeficient);
            };
            swap_cols(&mut h, &mut u, i, p);
            let pivot = h.get(i, i).clone();
            let mut all_zero = true;
            for j in i + 1..n {
                let v = h.get(i, j).clone();
                if v.is_zero() {
                    continue;
                }
                let q = v.div_floor(&pivot);
                add_col(&mut h, &mut u, j, i, &q);
                if !h.get(i, j).is_zero() {
                    all_zero = false;
                }
            }
            if all_zero {
                break;
            }
        }
        if h.get(i, i).is_negative() {
            negate_col(&mut h, &mut u, i);
        }
        // normalize earlier columns: 0 <= H[i][j] < H[i][i] for j < i
        let pivot = h.get(i, i).clone();
        for j in 0..i {
            let q = h.get(i, j).div_floor(&pivot);
            add_col(&mut h, &mut u, j, i, &q);
        }
    }
    Ok(HnfResult { h, u })
}

/// Primitive integer normal of the span of m-1 columns in dimension m.
///
/// Returns `None` unless the columns span a space of dimension exactly m-1;
/// the result has coprime entries and positive leading nonzero entry.
pub fn primitive_normal(s: &IntMatrix) -> Option<IntVec> {
    let m = s.rows();
    if s.cols() + 1 != m {
        return None;
    }
    // Solve S^T a = 0 by rational elimination on the (m-1) x m system.
    let k = s.cols();
    let mut rows: Vec<RatVec> = (0..k)
        .map(|j| (0..m).map(|i| Rat::from_integer(s.get(i, j).clone())).collect())
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &pv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..m {
                    let v = &rows[r][j] * &f;
                    rows[i][j] = &rows[i][j] - v;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if r != k {
        return None; // rank(S) < m-1: no unique normal direction
    }
    // one free column; back out the kernel vector with free coordinate 1
    let pivot_cols: Vec<usize> = pivot_col_of_row;
    let free_col = (0..m).find(|c| !pivot_cols.contains(c))?;
    let mut a = vec![Rat::zero(); m];
    a[free_col] = Rat::one();
    for (row_idx, &pc) in pivot_cols.iter().enumerate() {
        a[pc] = -rows[row_idx][free_col].clone();
    }
    // clear denominators, divide by gcd, canonicalize sign
    let mut lcm = Int::one();
    for x in &a {
        lcm = lcm.lcm(x.denom());
    }
    let mut v: IntVec = a
        .iter()
        .map(|x| (x * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = Int::zero();
    for x in &v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    // independent oracle: determinant by cofactor expansion along row 0
    fn det_cofactor(a: &IntMatrix) -> Int {
        let n = a.rows();
        if n == 1 {
            return a.get(0, 0).clone();
        }
        let mut acc = Int::zero();
        for j in 0..n {
            if a.get(0, j).is_zero() {
                continue;
            }
            let minor_cols: Vec<IntVec> = (0..n)
                .filter(|&c| c != j)
                .map(|c| (1..n).map(|r| a.get(r, c).clone()).collect())
                .collect();
            let minor = IntMatrix::from_cols(n - 1, &minor_cols);
            let term = a.get(0, j) * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn adjugate(a: &IntMatrix) -> IntMatrix {
        let n = a.rows();
        let mut adj = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor_cols: Vec<IntVec> = (0..n)
                    .filter(|&c| c != i)
                    .map(|c| {
                        (0..n)
                            .filter(|&r| r != j)
                            .map(|r| a.get(r, c).clone())
                            .collect()
                    })
                    .collect();
                let minor = IntMatrix::from_cols(n - 1, &minor_cols);
                let mut v = det_cofactor(&minor);
                if (i + j) % 2 == 1 {
                    v = -v;
                }
                *adj.get_mut(i, j) = v;
            }
        }
        adj
    }

    fn lcg(state: &mut u64) -> i64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((*state >> 33) % 7) as i64 - 3
    }

    #[test]
    fn mat_mul_identity_and_hand_cases() {
        let i2 = IntMatrix::identity(2);
        let v = IntMatrix::from_rows(&[&[3], &[5]]);
        assert_eq!(i2.mul(&v).unwrap(), v);

        let a = IntMatrix::from_rows(&[&[2, 1], &[0, 1]]);
        let b = IntMatrix::from_rows(&[&[1], &[1]]);
        assert_eq!(a.mul(&b).unwrap(), IntMatrix::from_rows(&[&[3], &[1]]));
    }

    #[test]
    fn mat_mul_dimension_mismatch() {
        let a = IntMatrix::identity(2);
        let b = IntMatrix::identity(3);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn adjugate_identity_on_random_3x3() {
        let mut st = 17u64;
        for _ in 0..20 {
            let mut data = Vec::new();
            for _ in 0..9 {
                data.push(int(lcg(&mut st)));
            }
            let a = IntMatrix::new(3, 3, data);
            let d = a.det().unwrap();
            assert_eq!(d, det_cofactor(&a));
            let prod = a.mul(&adjugate(&a)).unwrap();
            let mut expect = IntMatrix::zero(3, 3);
            for i in 0..3 {
                *expect.get_mut(i, i) = d.clone();
            }
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn det_triangular_and_identity() {
        let a = IntMatrix::from_rows(&[&[1, 1], &[0, 2]]);
        assert_eq!(a.det().unwrap(), int(2));
        for m in 1..=4 {
            assert_eq!(IntMatrix::identity(m).det().unwrap(), int(1));
        }
    }

    #[test]
    fn det_matches_cofactor_oracle_on_random_4x4() {
        let mut st = 3u64;
        for _ in 0..30 {
            let mut data = Vec::new();
            for _ in 0..16 {
                data.push(int(lcg(&mut st)));
            }
            let a = IntMatrix::new(4, 4, data);
            assert_eq!(a.det().unwrap(), det_cofactor(&a));
        }
    }

    #[test]
    fn inverse_diagonal_and_identity() {
        let a = IntMatrix::from_rows(&[&[2, 0], &[0, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &rat(1, 2));
        assert_eq!(inv.get(1, 1), &rat(1, 2));
        assert_eq!(inv.get(0, 1), &Rat::zero());
        let i3 = IntMatrix::identity(3);
        assert_eq!(i3.inverse().unwrap(), RatMatrix::identity(3));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let mut st = 99u64;
        let mut done = 0;
        while done < 20 {
            let mut data = Vec::new();
            for _ in 0..9 {
                data.push(int(lcg(&mut st)));
            }
            let a = IntMatrix::new(3, 3, data);
            if a.det().unwrap().is_zero() {
                continue;
            }
            let inv = a.inverse().unwrap();
            assert_eq!(a.to_rat().mul(&inv).unwrap(), RatMatrix::identity(3));
            done += 1;
        }
    }

    #[test]
    fn inverse_rejects_singular() {
        let a = IntMatrix::from_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(a.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn hnf_identity_and_gcd() {
        let i3 = IntMatrix::identity(3);
        let r = hnf(&i3).unwrap();
        assert_eq!(r.h, i3);
        assert_eq!(r.u, i3);

        let a = IntMatrix::from_rows(&[&[3, 5]]);
        let r = hnf(&a).unwrap();
        assert_eq!(r.lattice_basis(), IntMatrix::from_rows(&[&[1]]));
        assert_eq!(a.mul(&r.u).unwrap(), r.h);
    }

    #[test]
    fn hnf_shape_and_unimodularity() {
        let a = IntMatrix::from_rows(&[&[1, 1], &[0, 2]]);
        let r = hnf(&a).unwrap();
        assert_eq!(a.mul(&r.u).unwrap(), r.h);
        assert_eq!(r.u.det().unwrap().abs(), int(1));
        let hb = r.lattice_basis();
        // lower triangular, positive diagonal, reduced off-diagonals
        for i in 0..2 {
            assert!(hb.get(i, i).is_positive());
            for j in i + 1..2 {
                assert!(hb.get(i, j).is_zero());
            }
            for j in 0..i {
                assert!(!hb.get(i, j).is_negative() && hb.get(i, j) < hb.get(i, i));
            }
        }
    }

    #[test]
    fn hnf_rejects_rank_deficient() {
        let a = IntMatrix::from_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(hnf(&a), Err(Error::RankDeficient)));
    }

    // lattice membership via a triangular solve against H
    fn in_lattice(h: &IntMatrix, v: &[Int]) -> bool {
        let m = h.rows();
        let mut rem: IntVec = v.to_vec();
        for i in 0..m {
            let (q, r) = rem[i].div_rem(h.get(i, i));
            if !r.is_zero() {
                return false;
            }
            for row in i..m {
                let dv = h.get(row, i) * &q;
                rem[row] = &rem[row] - dv;
            }
        }
        true
    }

    #[test]
    fn hnf_preserves_lattice_membership() {
        let mut st = 41u64;
        for _ in 0..20 {
            let mut data = Vec::new();
            for _ in 0..6 {
                data.push(int(lcg(&mut st)));
            }
            let a = IntMatrix::new(2, 3, data);
            let Ok(r) = hnf(&a) else { continue };
            let hb = r.lattice_basis();
            // v in Λ(A) iff v in Λ(H): sample v = A z and random v
            for _ in 0..50 {
                let z = int_vec(&[lcg(&mut st), lcg(&mut st), lcg(&mut st)]);
                let v = a.mul_vec(&z).unwrap();
                assert!(in_lattice(&hb, &v));
                let w = int_vec(&[lcg(&mut st), lcg(&mut st)]);
                let in_h = in_lattice(&hb, &w);
                // membership in Λ(A) by solving with the full column set:
                // w ∈ Λ(A) iff w ∈ Λ(H) by construction; cross-check via U
                if in_h {
                    // reconstruct coefficients through H then map back via U
                    let coeffs = hb.solve_vec(&w).unwrap();
                    assert!(is_integral(&coeffs));
                }
            }
        }
    }

    #[test]
    fn primitive_normal_planes() {
        let s = IntMatrix::from_cols(2, &[int_vec(&[1, 0])]);
        assert_eq!(primitive_normal(&s).unwrap(), int_vec(&[0, 1]));

        let s = IntMatrix::from_cols(2, &[int_vec(&[1, 1])]);
        assert_eq!(primitive_normal(&s).unwrap(), int_vec(&[1, -1]));

        let s = IntMatrix::from_cols(2, &[int_vec(&[0, 0])]);
        assert!(primitive_normal(&s).is_none());
    }

    #[test]
    fn primitive_normal_is_primitive_and_orthogonal() {
        let mut st = 7u64;
        for _ in 0..40 {
            let cols: Vec<IntVec> = (0..2)
                .map(|_| int_vec(&[lcg(&mut st), lcg(&mut st), lcg(&mut st)]))
                .collect();
            let s = IntMatrix::from_cols(3, &cols);
            let Some(a) = primitive_normal(&s) else { continue };
            let mut g = Int::zero();
            for x in &a {
                g = g.gcd(x);
            }
            assert_eq!(g, int(1));
            for col in &cols {
                let dot: Int = a.iter().zip(col).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
            assert!(a.iter().find(|x| !x.is_zero()).unwrap().is_positive());
        }
    }
}
