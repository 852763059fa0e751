//! Exact integer linear algebra on small dense matrices.
//!
//! Everything here runs in arbitrary-precision arithmetic: determinants via
//! fraction-free (Bareiss) elimination, Smith normal form with recorded
//! unimodular transforms, saturated kernel bases and lattice bases of column
//! spans. Matrices are modest (circuits have `n + 2` points), so the simple
//! quadratic pivoting strategies below are more than fast enough.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMat::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Matrix with column `k` removed.
    pub fn drop_col(&self, k: usize) -> IntMat {
        let mut m = IntMat::zero(self.rows, self.cols - 1);
        for i in 0..self.rows {
            let mut jj = 0;
            for j in 0..self.cols {
                if j != k {
                    m[(i, jj)] = self[(i, j)].clone();
                    jj += 1;
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> IntMat {
        let mut m = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut m = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    m[(i, j)] += prod;
                }
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let c = self.cols;
            self.data.swap(a * c + j, b * c + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let c = self.cols;
            self.data.swap(i * c + a, i * c + b);
        }
    }

    /// Fraction-free determinant. Panics unless square.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                // find a nonzero pivot below
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let val = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = &val / &prev; // exact by Bareiss
                }
            }
            for i in k + 1..n {
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0;
        let mut col = 0;
        while rank < rows && col < cols {
            let pivot = (rank..rows).find(|&i| !m[(i, col)].is_zero());
            let Some(p) = pivot else {
                col += 1;
                continue;
            };
            m.swap_rows(rank, p);
            for i in rank + 1..rows {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let a = m[(rank, col)].clone();
                let b = m[(i, col)].clone();
                for j in col..cols {
                    let val = &m[(i, j)] * &a - &m[(rank, j)] * &b;
                    m[(i, j)] = val;
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }

    /// Smith normal form: returns `(u, s, v)` with `u * self * v = s`,
    /// `u`, `v` unimodular and `s` diagonal with `s[i] | s[i+1]`.
    pub fn smith_normal_form(&self) -> (IntMat, IntMat, IntMat) {
        let mut s = self.clone();
        let mut u = IntMat::identity(self.rows);
        let mut v = IntMat::identity(self.cols);
        let n = self.rows.min(self.cols);

        for t in 0..n {
            // move the nonzero entry of smallest magnitude into (t, t)
            loop {
                let mut best: Option<(usize, usize)> = None;
                for i in t..s.rows {
                    for j in t..s.cols {
                        if !s[(i, j)].is_zero()
                            && best
                                .map(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs())
                                .unwrap_or(true)
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((bi, bj)) = best else {
                    return (u, s, v); // all remaining entries zero
                };
                s.swap_rows(t, bi);
                u.swap_rows(t, bi);
                s.swap_cols(t, bj);
                v.swap_cols(t, bj);

                let mut dirty = false;
                for i in t + 1..s.rows {
                    if s[(i, t)].is_zero() {
                        continue;
                    }
                    let q = div_round(&s[(i, t)], &s[(t, t)]);
                    if !q.is_zero() {
                        for j in t..s.cols {
                            let sub = &q * &s[(t, j)];
                            s[(i, j)] -= sub;
                        }
                        for j in 0..u.cols {
                            let sub = &q * &u[(t, j)];
                            u[(i, j)] -= sub;
                        }
                    }
                    if !s[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..s.cols {
                    if s[(t, j)].is_zero() {
                        continue;
                    }
                    let q = div_round(&s[(t, j)], &s[(t, t)]);
                    if !q.is_zero() {
                        for i in t..s.rows {
                            let sub = &q * &s[(i, t)];
                            s[(i, j)] -= sub;
                        }
                        for i in 0..v.rows {
                            let sub = &q * &v[(i, t)];
                            v[(i, j)] -= sub;
                        }
                    }
                    if !s[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
                if !dirty
                    && (t + 1..s.rows).all(|i| s[(i, t)].is_zero())
                    && (t + 1..s.cols).all(|j| s[(t, j)].is_zero())
                {
                    break;
                }
            }
        }

        // enforce the divisibility chain and positive diagonal
        loop {
            let mut fixed = true;
            for t in 0..n.saturating_sub(1) {
                let (a, b) = (s[(t, t)].clone(), s[(t + 1, t + 1)].clone());
                if b.is_zero() || (&b % &a).is_zero() {
                    continue;
                }
                fixed = false;
                // fold s[t+1,t+1] into column t and redo the corner
                for i in 0..s.rows {
                    let add = s[(i, t + 1)].clone();
                    s[(i, t)] += add;
                }
                for i in 0..v.rows {
                    let add = v[(i, t + 1)].clone();
                    v[(i, t)] += add;
                }
                clear_corner(&mut s, &mut u, &mut v, t);
            }
            if fixed {
                break;
            }
        }
        for t in 0..n {
            if s[(t, t)].is_negative() {
                for j in 0..s.cols {
                    let neg = -s[(t, j)].clone();
                    s[(t, j)] = neg;
                }
                for j in 0..u.cols {
                    let neg = -u[(t, j)].clone();
                    u[(t, j)] = neg;
                }
            }
        }
        (u, s, v)
    }

    /// Saturated basis of the integer left kernel `{x : x * self = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<BigInt>> {
        let (u, s, _v) = self.smith_normal_form();
        let rank = (0..self.rows.min(self.cols)).filter(|&i| !s[(i, i)].is_zero()).count();
        (rank..self.rows).map(|i| u.row(i).to_vec()).collect()
    }

    /// Basis of the lattice spanned by the columns, as columns of an
    /// `rows x rank` matrix.
    pub fn column_lattice_basis(&self) -> IntMat {
        let (u, s, _v) = self.smith_normal_form();
        let rank = (0..self.rows.min(self.cols)).filter(|&i| !s[(i, i)].is_zero()).count();
        // columns of U^{-1} * S; U^{-1} obtained by inverting the unimodular U
        let uinv = u.unimodular_inverse();
        let mut basis = IntMat::zero(self.rows, rank);
        for j in 0..rank {
            for i in 0..self.rows {
                basis[(i, j)] = &uinv[(i, j)] * &s[(j, j)];
            }
        }
        basis
    }

    /// Inverse of a unimodular matrix (integer entries). Panics if |det| != 1.
    pub fn unimodular_inverse(&self) -> IntMat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let det = self.det();
        assert!(det.abs().is_one(), "matrix is not unimodular");
        // adjugate via cofactors; n is tiny here
        let mut inv = IntMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(j, i);
                let mut c = minor.det();
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                inv[(i, j)] = if det.is_one() { c } else { -c };
            }
        }
        inv
    }

    fn minor(&self, drop_row: usize, drop_col: usize) -> IntMat {
        let mut m = IntMat::zero(self.rows - 1, self.cols - 1);
        let mut ii = 0;
        for i in 0..self.rows {
            if i == drop_row {
                continue;
            }
            let mut jj = 0;
            for j in 0..self.cols {
                if j == drop_col {
                    continue;
                }
                m[(ii, jj)] = self[(i, j)].clone();
                jj += 1;
            }
            ii += 1;
        }
        m
    }
}

fn clear_corner(s: &mut IntMat, u: &mut IntMat, v: &mut IntMat, t: usize) {
    // re-run the reduction on rows/cols >= t until the corner is clean again
    loop {
        let mut best: Option<(usize, usize)> = None;
        for i in t..s.rows {
            for j in t..s.cols {
                if !s[(i, j)].is_zero()
                    && best.map(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()).unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { return };
        s.swap_rows(t, bi);
        u.swap_rows(t, bi);
        s.swap_cols(t, bj);
        v.swap_cols(t, bj);
        let mut dirty = false;
        for i in t + 1..s.rows {
            if s[(i, t)].is_zero() {
                continue;
            }
            let q = div_round(&s[(i, t)], &s[(t, t)]);
            if !q.is_zero() {
                for j in t..s.cols {
                    let sub = &q * &s[(t, j)];
                    s[(i, j)] -= sub;
                }
                for j in 0..u.cols {
                    let sub = &q * &u[(t, j)];
                    u[(i, j)] -= sub;
                }
            }
            if !s[(i, t)].is_zero() {
                dirty = true;
            }
        }
        for j in t + 1..s.cols {
            if s[(t, j)].is_zero() {
                continue;
            }
            let q = div_round(&s[(t, j)], &s[(t, t)]);
            if !q.is_zero() {
                for i in t..s.rows {
                    let sub = &q * &s[(i, t)];
                    s[(i, j)] -= sub;
                }
                for i in 0..v.rows {
                    let sub = &q * &v[(i, t)];
                    v[(i, j)] -= sub;
                }
            }
            if !s[(t, j)].is_zero() {
                dirty = true;
            }
        }
        if !dirty
            && (t + 1..s.rows).all(|i| s[(i, t)].is_zero())
            && (t + 1..s.cols).all(|j| s[(t, j)].is_zero())
        {
            return;
        }
    }
}

/// Quotient rounded to nearest, which keeps remainders small in SNF loops.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// gcd of a slice, nonnegative; 0 for an all-zero slice.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(values: I) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}
