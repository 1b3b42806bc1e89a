//! Dense linear algebra over the rationals.
//!
//! Everything here is exact. Matrices are small (a few hundred rows at most
//! for the algebras this crate targets), so a plain Gauss-Jordan elimination
//! over [`BigRational`] is all that is needed.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued scalar.
pub fn q(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den` as a scalar. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vec(len: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); len]
}

pub fn unit_vec(len: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(len);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Parses an exact rational written as `p` or `p/q` with `q > 0`.
///
/// Decimal points and exponents are rejected; the caller gets a message
/// suitable for a parse diagnostic.
pub fn parse_scalar(text: &str) -> Result<Scalar, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty coefficient".into());
    }
    if t.contains(['.', 'e', 'E']) {
        return Err(format!("floating point not accepted: {t:?}"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("invalid integer numerator in {t:?}"))?;
    let den: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return Err(format!(
                    "denominator must be an unsigned positive integer in {t:?}"
                ));
            }
            d.parse()
                .map_err(|_| format!("invalid integer denominator in {t:?}"))?
        }
    };
    if den.is_zero() {
        return Err(format!("zero denominator in {t:?}"));
    }
    Ok(Scalar::new(num, den))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged column");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
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

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn set_column(&mut self, c: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for (r, x) in v.iter().enumerate() {
            self[(r, c)] = x.clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Submatrix with the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                m[(r, k)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Reduced row-echelon form together with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead_row = 0;
        for c in 0..m.cols {
            if lead_row == m.rows {
                break;
            }
            let Some(p) = (lead_row..m.rows).find(|&r| !m[(r, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, lead_row);
            let inv = m[(lead_row, c)].recip();
            for x in &mut m.data[lead_row * m.cols..(lead_row + 1) * m.cols] {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let pivot_row: Vec<Scalar> = m.row(lead_row).to_vec();
            for r in 0..m.rows {
                if r == lead_row {
                    continue;
                }
                let factor = m[(r, c)].clone();
                if factor.is_zero() {
                    continue;
                }
                let cols = m.cols;
                let row = &mut m.data[r * cols..(r + 1) * cols];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
            pivots.push(c);
            lead_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ x : self * x = 0 }`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vec(self.cols);
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Scalar::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

/// A linear subspace of `Q^ambient`, stored as the nonzero rows of its
/// reduced row-echelon form. Two subspaces are equal iff their stored rows
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span<I, V>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Scalar]>,
    {
        let rows: Vec<Vec<Scalar>> = vectors
            .into_iter()
            .map(|v| v.as_ref().to_vec())
            .filter(|v: &Vec<Scalar>| !is_zero_vec(v))
            .collect();
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let (red, pivots) = Matrix::from_rows(ambient, &rows).rref();
        let rows = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// RREF rows; a basis of the subspace.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace: the result agrees with `v` up to an
    /// element of the subspace and vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coefficients of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::span(self.ambient, self.rows.iter().chain(&other.rows))
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }
}

/// `(-1)^k` as a scalar.
pub(crate) fn sign(negative: bool) -> Scalar {
    if negative {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

pub(crate) fn fmt_scalar_coeff(c: &Scalar) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Formats `Σ c_i · label_i` in a compact human form, e.g. `α∧α - γ∧γ`.
pub fn format_combination<F>(coeffs: &[Scalar], label: F) -> String
where
    F: Fn(usize) -> String,
{
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            out.push_str(&fmt_scalar_coeff(&mag));
            out.push(' ');
        }
        out.push_str(&label(i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
