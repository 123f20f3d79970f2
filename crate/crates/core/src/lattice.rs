//! Exact integer and rational linear algebra.
//!
//! The work horse is [`smith_normal_form`]: for an integer matrix `A` it
//! produces unimodular `U`, `V` (with tracked inverses) and a diagonal `D`
//! with `U * A * V = D` and a divisibility chain `d1 | d2 | ...` on the
//! diagonal.  Membership in row lattices, integer kernels and annihilator
//! computations all reduce to it.
//!
//! Pivoting is deterministic: always the smallest-absolute-value nonzero
//! entry, ties broken by lowest row index then lowest column index.  The same
//! input therefore always yields the same decomposition.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::{Error, Int, Rat};

/// Dense row-major matrix over arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    /// `cols` is explicit so that 0-row matrices keep their width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Int>>) -> Result<Self, Error> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(IntMatrix { rows: nrows, cols, data })
    }

    /// Convenience constructor for literal matrices.
    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Int::from(v)).collect())
            .collect();
        IntMatrix::from_rows(cols, rows).expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Int> {
        self.row(i).to_vec()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Int]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.entry(i, j).clone());
            }
        }
        t
    }

    /// Vertical concatenation; widths must agree.
    pub fn stack(&self, below: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: below.cols });
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(IntMatrix { rows: self.rows + below.rows, cols: self.cols, data })
    }

    /// Matrix product; panics on shape mismatch (internal use only).
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.entry(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        out
    }

    /// `self * x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn row_add(&mut self, dst: usize, src: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.entry(src, j) * c;
            let cur = self.entry(dst, j).clone();
            self.set(dst, j, cur + v);
        }
    }

    /// col[dst] += c * col[src]
    fn col_add(&mut self, dst: usize, src: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.entry(i, src) * c;
            let cur = self.entry(i, dst).clone();
            self.set(i, dst, cur + v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.entry(i, j).clone();
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.entry(i, j).clone();
            self.set(i, j, v);
        }
    }
}

/// `w * A` for a row vector `w`.
pub fn row_times_matrix(w: &[Int], a: &IntMatrix) -> Vec<Int> {
    assert_eq!(w.len(), a.rows());
    let mut out = vec![Int::zero(); a.cols()];
    for (i, wi) in w.iter().enumerate() {
        if wi.is_zero() {
            continue;
        }
        for j in 0..a.cols() {
            out[j] += wi * a.entry(i, j);
        }
    }
    out
}

/// Result of [`smith_normal_form`]: `u * a * v = d`, with `u`, `v`
/// unimodular and their exact inverses tracked alongside.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Positive diagonal entries `d1 | d2 | ... | dk`.
    pub invariant_factors: Vec<Int>,
    pub rank: usize,
}

struct SnfState {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += c * row[src]
    fn row_add(&mut self, dst: usize, src: usize, c: &Int) {
        self.d.row_add(dst, src, c);
        self.u.row_add(dst, src, c);
        let neg = -c.clone();
        self.u_inv.col_add(src, dst, &neg);
    }

    /// col[dst] += c * col[src]
    fn col_add(&mut self, dst: usize, src: usize, c: &Int) {
        self.d.col_add(dst, src, c);
        self.v.col_add(dst, src, c);
        let neg = -c.clone();
        self.v_inv.row_add(src, dst, &neg);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }
}

/// Smallest-absolute-value nonzero entry of `d[t.., t..]`,
/// ties by lowest row then lowest column.
fn find_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let e = d.entry(i, j);
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            match &best {
                Some((ba, _, _)) if *ba <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Computes the Smith normal form of `a` with deterministic pivoting.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let m = a.rows();
    let n = a.cols();
    let mut s = SnfState {
        d: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = find_pivot(&s.d, t) else { break };
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        loop {
            clear_cross(&mut s, t, m, n);
            // Divisibility of the remaining block by the pivot. If an entry
            // resists, pull its row into row t and clear again; the pivot
            // strictly shrinks, so this terminates.
            let p = s.d.entry(t, t).clone();
            let mut offender = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !(s.d.entry(i, j) % &p).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => s.row_add(t, i, &Int::one()),
                None => break,
            }
        }

        if s.d.entry(t, t).is_negative() {
            s.negate_row(t);
        }
        t += 1;
    }

    let mut invariant_factors = Vec::new();
    for k in 0..m.min(n) {
        let e = s.d.entry(k, k);
        if e.is_zero() {
            break;
        }
        invariant_factors.push(e.clone());
    }
    let rank = invariant_factors.len();
    SmithDecomposition {
        u: s.u,
        u_inv: s.u_inv,
        d: s.d,
        v: s.v,
        v_inv: s.v_inv,
        invariant_factors,
        rank,
    }
}

/// Euclidean clearing of column `t` (below the pivot) and row `t` (right of
/// the pivot).  Whenever a nonzero remainder survives, the smallest one is
/// swapped into the pivot slot and the pass restarts; `|d[t][t]|` strictly
/// decreases, so the loop terminates.
fn clear_cross(s: &mut SnfState, t: usize, m: usize, n: usize) {
    loop {
        let p = s.d.entry(t, t).clone();
        debug_assert!(!p.is_zero());
        for i in t + 1..m {
            let e = s.d.entry(i, t).clone();
            if e.is_zero() {
                continue;
            }
            let q = -(&e / &p);
            s.row_add(i, t, &q);
        }
        for j in t + 1..n {
            let e = s.d.entry(t, j).clone();
            if e.is_zero() {
                continue;
            }
            let q = -(&e / &p);
            s.col_add(j, t, &q);
        }
        // Remainders are all smaller than the pivot; promote the smallest
        // (row-t entries scan first: their row index t is the lowest).
        let mut best: Option<(Int, bool, usize)> = None;
        for j in t + 1..n {
            let e = s.d.entry(t, j);
            if !e.is_zero() {
                let a = e.abs();
                if best.as_ref().map_or(true, |(ba, _, _)| a < *ba) {
                    best = Some((a, false, j));
                }
            }
        }
        for i in t + 1..m {
            let e = s.d.entry(i, t);
            if !e.is_zero() {
                let a = e.abs();
                if best.as_ref().map_or(true, |(ba, _, _)| a < *ba) {
                    best = Some((a, true, i));
                }
            }
        }
        match best {
            None => return,
            Some((_, true, i)) => s.swap_rows(t, i),
            Some((_, false, j)) => s.swap_cols(t, j),
        }
    }
}

/// Is the row vector `w` an integer combination of the rows of `a`?
pub fn row_lattice_contains(a: &IntMatrix, w: &[Int]) -> Result<bool, Error> {
    if w.len() != a.cols() {
        return Err(Error::DimensionMismatch { expected: a.cols(), found: w.len() });
    }
    let snf = smith_normal_form(a);
    // x a = w  <=>  (x u_inv) d = w v, coordinate by coordinate.
    let wv = row_times_matrix(w, &snf.v);
    for (j, c) in wv.iter().enumerate() {
        if j < snf.rank {
            if !(c % &snf.invariant_factors[j]).is_zero() {
                return Ok(false);
            }
        } else if !c.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every row of `b` lies in the row lattice of `a`.
pub fn row_lattice_contains_all(a: &IntMatrix, b: &IntMatrix) -> Result<bool, Error> {
    for i in 0..b.rows() {
        if !row_lattice_contains(a, b.row(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis (as matrix rows) of the saturated lattice `{x : a * x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let n = a.cols();
    let mut rows = Vec::with_capacity(n - snf.rank);
    for k in snf.rank..n {
        let mut row = Vec::with_capacity(n);
        for i in 0..n {
            row.push(snf.v.entry(i, k).clone());
        }
        rows.push(row);
    }
    IntMatrix::from_rows(n, rows).expect("kernel rows have ambient length")
}

/// Determinant via fraction-free Bareiss elimination.
pub fn determinant(a: &IntMatrix) -> Int {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return Int::one();
    }
    let mut m = a.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m.entry(k, k).is_zero() {
            let swap = (k + 1..n).find(|&i| !m.entry(i, k).is_zero());
            match swap {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m.entry(i, j) * m.entry(k, k) - m.entry(i, k) * m.entry(k, j);
                m.set(i, j, &num / &prev);
            }
        }
        for i in k + 1..n {
            m.set(i, k, Int::zero());
        }
        prev = m.entry(k, k).clone();
    }
    sign * m.entry(n - 1, n - 1).clone()
}

/// Dense row-major matrix over arbitrary-precision rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(RatMatrix { rows: nrows, cols, data })
    }

    pub fn from_int(a: &IntMatrix) -> Self {
        let rows = a
            .rows_iter()
            .map(|r| r.iter().map(|v| Rat::from_integer(v.clone())).collect())
            .collect();
        RatMatrix::from_rows(a.cols(), rows).expect("shape preserved")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.entry(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.entry(r, c).clone();
            for j in c..self.cols {
                let v = self.entry(r, j) / &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.entry(i, c).is_zero() {
                    continue;
                }
                let f = self.entry(i, c).clone();
                for j in c..self.cols {
                    let v = self.entry(i, j) - &f * self.entry(r, j);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Canonical (RREF) basis of the row space.
    pub fn row_space_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
    }
}

/// Basis of the right kernel `{x : a * x = 0}`, one vector per free column,
/// in ascending free-column order.
pub fn rational_nullspace(a: &RatMatrix) -> Vec<Vec<Rat>> {
    let mut m = a.clone();
    let pivots = m.rref();
    let n = a.cols();
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in 0..n {
        if is_pivot[f] {
            continue;
        }
        let mut x = vec![Rat::zero(); n];
        x[f] = Rat::one();
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = -m.entry(r, f).clone();
        }
        basis.push(x);
    }
    basis
}

/// Solves `m * y = u` for a single column `u`; `None` if inconsistent.
pub fn solve_linear(m: &RatMatrix, u: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(m.rows(), u.len());
    let mut aug = RatMatrix::zero(m.rows(), m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            aug.set(i, j, m.entry(i, j).clone());
        }
        aug.set(i, m.cols(), u[i].clone());
    }
    let pivots = aug.rref();
    if pivots.contains(&m.cols()) {
        return None;
    }
    let mut y = vec![Rat::zero(); m.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        y[c] = aug.entry(r, m.cols()).clone();
    }
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn check_contract(a: &IntMatrix) {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "u*a*v != d");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(s.u_inv.mul(&s.u), IntMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(a.cols()));
        assert_eq!(s.v_inv.mul(&s.v), IntMatrix::identity(a.cols()));
        assert_eq!(determinant(&s.u).abs(), int(1));
        assert_eq!(determinant(&s.v).abs(), int(1));
        for w in s.invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "no divisibility chain: {:?}", s.invariant_factors);
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.entry(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn identity_is_its_own_smith_form() {
        let a = IntMatrix::identity(3);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors, vec![int(1), int(1), int(1)]);
        check_contract(&a);
    }

    #[test]
    fn diag_2_3_has_factors_1_6() {
        let a = IntMatrix::from_i64(2, &[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors, vec![int(1), int(6)]);
        check_contract(&a);
    }

    #[test]
    fn zero_and_empty_matrices() {
        let z = IntMatrix::zero(2, 3);
        let s = smith_normal_form(&z);
        assert_eq!(s.rank, 0);
        assert!(s.invariant_factors.is_empty());
        check_contract(&z);

        let e = IntMatrix::zero(0, 4);
        let s = smith_normal_form(&e);
        assert_eq!(s.rank, 0);
        assert_eq!(s.v, IntMatrix::identity(4));
    }

    #[test]
    fn row_lattice_membership() {
        let a = IntMatrix::from_i64(2, &[&[1, 1], &[0, 2]]);
        assert!(row_lattice_contains(&a, &[int(1), int(-1)]).unwrap());
        assert!(!row_lattice_contains(&a, &[int(0), int(1)]).unwrap());
        assert!(row_lattice_contains(&a, &[int(0), int(0)]).unwrap());
        let err = row_lattice_contains(&a, &[int(1)]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn kernel_of_2_4() {
        let a = IntMatrix::from_i64(2, &[&[2, 4]]);
        let k = integer_kernel(&a);
        assert_eq!(k.rows(), 1);
        let r = k.row_vec(0);
        let pos = [int(2), int(-1)];
        let neg = [int(-2), int(1)];
        assert!(r == pos || r == neg, "kernel row {r:?}");
        assert!(a.mul_vec(&r).iter().all(Zero::is_zero));
    }

    #[test]
    fn kernel_is_saturated() {
        // ker [[2, 0], [0, 3]] over the integers is trivial even though the
        // matrix is far from unimodular.
        let a = IntMatrix::from_i64(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(integer_kernel(&a).rows(), 0);
    }

    #[test]
    fn nullspace_dimensions() {
        let a = RatMatrix::from_int(&IntMatrix::from_i64(3, &[&[1, 2, 3], &[2, 4, 6]]));
        let ns = rational_nullspace(&a);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for i in 0..a.rows() {
                let dot: Rat = a.row(i).iter().zip(x).map(|(p, q)| p * q).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = RatMatrix::from_int(&IntMatrix::from_i64(2, &[&[1, 0], &[1, 1], &[0, 1]]));
        // columns: m is 3x2; solve m*y = u
        let u = [
            Rat::from_integer(int(1)),
            Rat::from_integer(int(3)),
            Rat::from_integer(int(2)),
        ];
        let y = solve_linear(&m, &u).unwrap();
        assert_eq!(y, vec![Rat::from_integer(int(1)), Rat::from_integer(int(2))]);
        let bad = [
            Rat::from_integer(int(1)),
            Rat::from_integer(int(0)),
            Rat::from_integer(int(2)),
        ];
        assert!(solve_linear(&m, &bad).is_none());
    }

    #[test]
    fn bareiss_determinant() {
        let a = IntMatrix::from_i64(3, &[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]]);
        // expand: 2*(1*1-0*3) - 0 + 1*(1*3-1*0) = 2 + 3 = 5
        assert_eq!(determinant(&a), int(5));
        let sing = IntMatrix::from_i64(2, &[&[1, 2], &[2, 4]]);
        assert_eq!(determinant(&sing), int(0));
    }

    #[test]
    fn deterministic_pivoting() {
        let a = IntMatrix::from_i64(3, &[&[4, 6, 2], &[6, 4, 8], &[2, 8, 4]]);
        let s1 = smith_normal_form(&a);
        let s2 = smith_normal_form(&a);
        assert_eq!(s1.u, s2.u);
        assert_eq!(s1.v, s2.v);
        assert_eq!(s1.d, s2.d);
        check_contract(&a);
    }
}
