//! Dense matrices over a ring, with exact elimination routines over fields
//! and the algebra-closure utilities (Burnside dimension, commutant).

use super::ratfn::RatFn;
use super::{Field, Rat, Ring};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<K> {
    rows: usize,
    cols: usize,
    e: Vec<K>,
}

pub type QMat = Mat<Rat>;
pub type RFMat = Mat<RatFn<Rat>>;

impl<K: Ring> Mat<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, e: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, e: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut e = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                e.push(f(i, j));
            }
        }
        Mat { rows, cols, e }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &K {
        &self.e[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut K {
        &mut self.e[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn map<L: Ring>(&self, f: impl Fn(&K) -> L) -> Mat<L> {
        Mat { rows: self.rows, cols: self.cols, e: self.e.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &K) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn row(&self, i: usize) -> Vec<K> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// Flatten row-major into a vector (used to treat matrices as vectors).
    pub fn vectorize(&self) -> Vec<K> {
        self.e.clone()
    }

    pub fn from_vec(rows: usize, cols: usize, e: Vec<K>) -> Self {
        assert_eq!(e.len(), rows * cols);
        Mat { rows, cols, e }
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc + a.clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; the left factor is the most significant index.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Mat::zero(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.at(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.at(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        *out.at_mut(i1 * other.rows + i2, j1 * other.cols + j2) =
                            a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut e = self.e.clone();
        e.extend(other.e.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, e }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.clone() * other.clone() - other.clone() * self.clone()
    }
}

impl<K: Ring> Add for Mat<K> {
    type Output = Mat<K>;
    fn add(self, rhs: Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let e = self.e.into_iter().zip(rhs.e).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, e }
    }
}

impl<K: Ring> Sub for Mat<K> {
    type Output = Mat<K>;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let e = self.e.into_iter().zip(rhs.e).map(|(a, b)| a - b).collect();
        Mat { rows: self.rows, cols: self.cols, e }
    }
}

impl<K: Ring> Neg for Mat<K> {
    type Output = Mat<K>;
    fn neg(self) -> Self {
        Mat { rows: self.rows, cols: self.cols, e: self.e.into_iter().map(|a| -a).collect() }
    }
}

impl<K: Ring> Mul for Mat<K> {
    type Output = Mat<K>;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = out.at(i, j).clone() + a.clone() * b.clone();
                    *out.at_mut(i, j) = t;
                }
            }
        }
        out
    }
}

impl<K: Field> Mat<K> {
    /// In-place reduction to reduced row echelon form with deterministic
    /// pivoting (first nonzero entry in column order). Returns the pivot
    /// columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let found = (row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let r = match found {
                Some(r) => r,
                None => continue,
            };
            if r != row {
                for j in 0..self.cols {
                    self.e.swap(r * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.at(row, col).inv();
            for j in col..self.cols {
                let t = self.at(row, j).clone() * inv.clone();
                *self.at_mut(row, j) = t;
            }
            for r2 in 0..self.rows {
                if r2 == row || self.at(r2, col).is_zero() {
                    continue;
                }
                let f = self.at(r2, col).clone();
                for j in col..self.cols {
                    let t = self.at(r2, j).clone() - f.clone() * self.at(row, j).clone();
                    *self.at_mut(r2, j) = t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right null space `{v : Mv = 0}`, normalized so that the
    /// entry at each free column is one (reduced-echelon normalization).
    /// Basis vectors are ordered by ascending free column.
    pub fn kernel(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (c, p) in pivot_of_col.iter().enumerate() {
                if let Some(r) = p {
                    v[c] = -m.at(*r, free).clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(n));
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug.at(i, n + j).clone()))
    }
}

impl fmt::Display for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Incrementally maintained row space in reduced echelon form.
///
/// `insert` returns true when the vector enlarged the span.
pub struct RowSpan<K> {
    width: usize,
    rows: Vec<Vec<K>>,
    pivots: Vec<usize>,
}

impl<K: Field> RowSpan<K> {
    pub fn new(width: usize) -> Self {
        RowSpan { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.width);
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for j in 0..self.width {
                    if !row[j].is_zero() {
                        v[j] = v[j].clone() - f.clone() * row[j].clone();
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[K]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn insert(&mut self, v: &[K]) -> bool {
        let mut v = self.reduce(v);
        let pivot = match v.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = v[pivot].inv();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        // Back-substitute into existing rows to stay fully reduced.
        for row in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let f = row[pivot].clone();
                for j in 0..self.width {
                    if !v[j].is_zero() {
                        row[j] = row[j].clone() - f.clone() * v[j].clone();
                    }
                }
            }
        }
        let pos = self.pivots.iter().position(|&p| p > pivot).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, v);
        true
    }
}

/// Dimension of the unital matrix algebra generated by `gens`, computed by
/// span closure under right multiplication starting from the identity.
///
/// All generators must be square of equal size `d`. The closure is capped at
/// `d^2` basis elements; failure to stabilize under the cap cannot happen
/// mathematically and panics as a bug guard.
pub fn burnside_dimension<K: Field>(gens: &[Mat<K>], d: usize) -> usize {
    assert!(gens.iter().all(|g| g.rows() == d && g.cols() == d), "generators must be d x d");
    let mut span = RowSpan::new(d * d);
    let mut worklist: Vec<Mat<K>> = Vec::new();
    let id = Mat::identity(d);
    if span.insert(&id.vectorize()) {
        worklist.push(id);
    }
    let mut guard = 0usize;
    while let Some(b) = worklist.pop() {
        for g in gens {
            let prod = b.clone() * g.clone();
            if span.insert(&prod.vectorize()) {
                worklist.push(prod);
            }
        }
        guard += 1;
        assert!(guard <= d * d + 1, "Burnside closure failed to stabilize");
    }
    span.dim()
}

/// Basis of the commutant `{X : XA = AX for all A in gens}`, obtained by
/// solving the linear system; basis vectors are reshaped into matrices.
pub fn commutant_basis<K: Field>(gens: &[Mat<K>], d: usize) -> Vec<Mat<K>> {
    assert!(gens.iter().all(|g| g.rows() == d && g.cols() == d), "generators must be d x d");
    // Row-major vectorization: vec(XA) = (I (x) A^T) vec(X),
    // vec(AX) = (A (x) I) vec(X).
    let id = Mat::identity(d);
    let mut system: Option<Mat<K>> = None;
    for g in gens {
        let block = id.kron(&g.transpose()) - g.kron(&id);
        system = Some(match system {
            None => block,
            Some(s) => s.vstack(&block),
        });
    }
    let system = system.unwrap_or_else(|| Mat::zero(0, d * d));
    let system = if system.rows() == 0 { Mat::zero(1, d * d) } else { system };
    system
        .kernel()
        .into_iter()
        .map(|v| Mat::from_vec(d, d, v))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpandError {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for ExpandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}) has numerator degree above denominator degree",
            self.row, self.col
        )
    }
}

/// Coefficient of `x^{-r}` of the entrywise expansion at infinity.
///
/// Fails on any entry whose numerator degree exceeds its denominator degree
/// (a malformed generating series).
pub fn rf_coeff_at_infinity<K: Field>(
    m: &Mat<RatFn<K>>,
    r: usize,
) -> Result<Mat<K>, ExpandError> {
    let mut out = Mat::zero(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            match m.at(i, j).coeff_at_infinity(r) {
                Some(c) => *out.at_mut(i, j) = c,
                None => return Err(ExpandError { row: i, col: j }),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, Poly};

    fn qm(rows: Vec<Vec<i64>>) -> QMat {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let k = qm(vec![vec![0, 0], vec![0, 0]]).kernel();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![rat_int(1), rat_int(0)]);
        assert_eq!(k[1], vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(QMat::identity(3).kernel().is_empty());
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = qm(vec![vec![1, 1], vec![2, 2]]).kernel();
        assert_eq!(k, vec![vec![rat_int(-1), rat_int(1)]]);
    }

    #[test]
    fn rank_nullity() {
        let m = qm(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank() + m.kernel().len(), m.cols());
    }

    #[test]
    fn burnside_empty_generators() {
        assert_eq!(burnside_dimension::<Rat>(&[], 2), 1);
    }

    #[test]
    fn burnside_matrix_units_full() {
        let units: Vec<QMat> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut m = QMat::zero(2, 2);
                *m.at_mut(i, j) = rat_int(1);
                m
            })
            .collect();
        assert_eq!(burnside_dimension(&units, 2), 4);
    }

    #[test]
    fn burnside_distinct_diagonal() {
        let d = qm(vec![vec![1, 0], vec![0, 2]]);
        assert_eq!(burnside_dimension(&[d], 2), 2);
    }

    #[test]
    fn commutant_of_identity_is_everything() {
        let c = commutant_basis(&[QMat::identity(2)], 2);
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn commutant_of_matrix_units_is_scalars() {
        let units: Vec<QMat> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut m = QMat::zero(2, 2);
                *m.at_mut(i, j) = rat_int(1);
                m
            })
            .collect();
        let c = commutant_basis(&units, 2);
        assert_eq!(c.len(), 1);
        let x = &c[0];
        assert_eq!(x.at(0, 0), x.at(1, 1));
        assert!(x.at(0, 1).is_zero() && x.at(1, 0).is_zero());
    }

    #[test]
    fn commutant_of_distinct_diagonal_is_diagonals() {
        let d = qm(vec![vec![1, 0], vec![0, 2]]);
        let c = commutant_basis(&[d], 2);
        assert_eq!(c.len(), 2);
        for x in &c {
            assert!(x.at(0, 1).is_zero() && x.at(1, 0).is_zero());
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = qm(vec![vec![2, 1], vec![1, 1]]);
        let inv = m.clone().inverse().unwrap();
        assert_eq!(m * inv, QMat::identity(2));
    }

    #[test]
    fn coeff_extraction_matches_examples() {
        use crate::exact::RF;
        let geom = RF::new(
            Poly::one(),
            Poly::new(vec![rat_int(-5), rat_int(1)]),
        );
        let m = Mat::from_rows(vec![vec![geom, RF::one()]]);
        let c1 = rf_coeff_at_infinity(&m, 1).unwrap();
        assert_eq!(c1.at(0, 0), &rat_int(1));
        assert_eq!(c1.at(0, 1), &rat_int(0));
        let c2 = rf_coeff_at_infinity(&m, 2).unwrap();
        assert_eq!(c2.at(0, 0), &rat_int(5));
    }
}
