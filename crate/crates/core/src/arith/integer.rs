use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Integer, Rational, RationalMatrix};

/// Dense rows x cols integer matrix, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Integer>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![Integer::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Integer::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Integer) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntegerMatrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
        }
        Self::from_fn(rows.len(), cols, |i, j| Integer::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Integer) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Integer] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Integer> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Integer::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        })
    }

    pub fn mul_vec(&self, v: &[Integer]) -> Vec<Integer> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Integer::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.rows, self.cols, |i, j| {
            Rational::from_integer(self.get(i, j).clone())
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination. Panics if not square.
    pub fn determinant(&self) -> Integer {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Integer::one();
        }
        let mut m = self.clone();
        let mut sign = Integer::one();
        let mut prev = Integer::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return Integer::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    /// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
    /// `U * self = H`, `H` in row echelon form with positive pivots and the
    /// entries above each pivot reduced into `[0, pivot)`.
    pub fn row_hnf(&self) -> (IntegerMatrix, IntegerMatrix) {
        let mut h = self.clone();
        let mut u = IntegerMatrix::identity(self.rows);
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            loop {
                let nonzero: Vec<usize> = (r..self.rows).filter(|&i| !h.get(i, c).is_zero()).collect();
                if nonzero.is_empty() {
                    break;
                }
                let p = *nonzero
                    .iter()
                    .min_by_key(|&&i| h.get(i, c).abs())
                    .expect("nonempty");
                h.swap_rows(r, p);
                u.swap_rows(r, p);
                let mut done = true;
                for i in r + 1..self.rows {
                    if h.get(i, c).is_zero() {
                        continue;
                    }
                    let q = h.get(i, c).div_floor(h.get(r, c));
                    h.add_row_multiple(i, r, &-q.clone());
                    u.add_row_multiple(i, r, &-q);
                    if !h.get(i, c).is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if h.get(r, c).is_zero() {
                continue;
            }
            if h.get(r, c).is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            for i in 0..r {
                let q = h.get(i, c).div_floor(h.get(r, c));
                if !q.is_zero() {
                    h.add_row_multiple(i, r, &-q.clone());
                    u.add_row_multiple(i, r, &-q);
                }
            }
            r += 1;
        }
        (h, u)
    }

    /// Column-style Hermite normal form of the column lattice: `self * V = H`.
    pub fn column_hnf(&self) -> IntegerMatrix {
        self.transpose().row_hnf().0.transpose()
    }

    /// Basis of the integer right kernel `{v in Z^cols : self * v = 0}`, as columns.
    pub fn integer_kernel(&self) -> IntegerMatrix {
        let (h, u) = self.transpose().row_hnf();
        let zero_rows: Vec<usize> = (0..h.rows).filter(|&i| h.row(i).iter().all(Zero::is_zero)).collect();
        IntegerMatrix::from_fn(self.cols, zero_rows.len(), |i, j| u.get(zero_rows[j], i).clone())
    }

    /// Some integer solution of `self * x = b`, if one exists.
    pub fn solve_integer(&self, b: &[Integer]) -> Option<Vec<Integer>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch in solve");
        // U * self^T = H, so self * U^T = H^T (column echelon form).
        let (h, u) = self.transpose().row_hnf();
        let mut y = vec![Integer::zero(); self.cols];
        let mut pivot_rows = Vec::new();
        for i in 0..h.rows {
            let Some(p) = (0..h.cols).find(|&j| !h.get(i, j).is_zero()) else {
                break;
            };
            let partial = (0..i).fold(Integer::zero(), |acc, j| acc + h.get(j, p) * &y[j]);
            let rhs = &b[p] - partial;
            let (q, rem) = rhs.div_rem(h.get(i, p));
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
            pivot_rows.push(p);
        }
        let ht = h.transpose();
        if ht.mul_vec(&y) != b {
            return None;
        }
        Some(u.transpose().mul_vec(&y))
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

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Integer) {
        for j in 0..self.cols {
            let v = self.get(src, j) * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Integer) {
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// `D = U * M * V` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<Integer> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d.get(i, j).is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| d.get(i, j).abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(d.get(t, t));
                d.add_row_multiple(i, t, &-q.clone());
                u.add_row_multiple(i, t, &-q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j).div_floor(d.get(t, t));
                d.add_col_multiple(j, t, &-q.clone());
                v.add_col_multiple(j, t, &-q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                // move a smaller remainder into the pivot position and retry
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !d.get(i, t).is_zero() && d.get(i, t).abs() < d.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !d.get(t, j).is_zero() && d.get(t, j).abs() < d.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    d.swap_rows(t, best.0);
                    u.swap_rows(t, best.0);
                } else if best.1 != t {
                    d.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // divisibility of the trailing block
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).is_multiple_of(d.get(t, t)));
            match offender {
                Some((i, _)) => {
                    d.add_row_multiple(t, i, &Integer::one());
                    u.add_row_multiple(t, i, &Integer::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

/// Basis of the lattice `{m in Z^n : A_free m = 0, A_tors m = 0 mod moduli}`,
/// one basis vector per column, canonicalized to column-style Hermite normal form.
///
/// `a_free` is rho x n and `a_tors` is N x n with `moduli.len() == N`; either
/// may have zero rows.
pub fn integer_kernel_with_congruences(
    a_free: &IntegerMatrix,
    a_tors: &IntegerMatrix,
    moduli: &[Integer],
) -> IntegerMatrix {
    let n = a_free.cols.max(a_tors.cols);
    assert!(a_free.rows == 0 || a_free.cols == n, "column mismatch");
    assert!(a_tors.rows == 0 || a_tors.cols == n, "column mismatch");
    assert_eq!(a_tors.rows, moduli.len(), "one modulus per torsion row");
    let (rf, rt) = (a_free.rows, a_tors.rows);

    // [A_free 0; A_tors diag(m)] [m; k] = 0, then project onto m.
    let ext = IntegerMatrix::from_fn(rf + rt, n + rt, |i, j| {
        if i < rf {
            if j < n {
                a_free.get(i, j).clone()
            } else {
                Integer::zero()
            }
        } else if j < n {
            a_tors.get(i - rf, j).clone()
        } else if j - n == i - rf {
            moduli[i - rf].clone()
        } else {
            Integer::zero()
        }
    });
    let ker = if rf + rt == 0 {
        IntegerMatrix::identity(n)
    } else {
        ext.integer_kernel()
    };
    let projected = IntegerMatrix::from_fn(n, ker.cols, |i, j| ker.get(i, j).clone());
    let h = projected.column_hnf();
    // drop zero columns (cannot occur for a basis, but keep the shape honest)
    let keep: Vec<usize> = (0..h.cols).filter(|&j| (0..h.rows).any(|i| !h.get(i, j).is_zero())).collect();
    IntegerMatrix::from_fn(n, keep.len(), |i, j| h.get(i, keep[j]).clone())
}
