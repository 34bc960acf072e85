//! Exact linear algebra over ℚ.
//!
//! Ranks and kernels are computed modulo word-sized primes first and then
//! proved: a rank modulo `p` never exceeds the rank over ℚ, and a lifted
//! kernel vector is accepted only after `M·v = 0` is checked in integer
//! arithmetic. When the lift does not close, fraction-free elimination
//! ([`bareiss`]) produces the answer directly.

pub mod bareiss;
pub mod modular;

use crate::algebra::{denominator_lcm, Rational};
use modular::{lift_kernel, rank_mod, IntMatrix, PrimeStream};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaError {
    #[error("vectors of different lengths: {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        got: usize,
        expected: usize,
    },
}

/// Dense rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width even when there
    /// are no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LaError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LaError::RaggedRows {
                    row: i,
                    got: r.len(),
                    expected: cols,
                });
            }
            entries.extend(r);
        }
        Ok(QMat {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer((*x).into())).collect())
            .collect();
        Self::from_rows(cols, data).expect("rows of equal length")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Integer matrix with the same row space: each row is multiplied by the
    /// lcm of its denominators.
    pub fn to_int(&self) -> IntMatrix {
        let mut m = IntMatrix::new(self.cols);
        for i in 0..self.rows {
            m.push_row(integer_row(self.row(i)));
        }
        m
    }
}

fn integer_row(r: &[Rational]) -> Vec<(usize, BigInt)> {
    let l = Rational::from_integer(denominator_lcm(r.iter()));
    r.iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(j, q)| (j, (q * &l).to_integer()))
        .collect()
}

const MAX_PRIMES: usize = 600;

/// Exact rank of an integer matrix.
pub fn int_rank(mat: &IntMatrix) -> usize {
    let (m, n) = (mat.nrows(), mat.ncols());
    if m == 0 || n == 0 {
        return 0;
    }
    let mut primes = PrimeStream::default();
    let p = primes.next_prime();
    let r = rank_mod(mat.reduce(&p), n, p);
    if r == m.min(n) {
        return r;
    }
    let flipped;
    let target = if n - r <= m - r {
        mat
    } else {
        flipped = mat.transpose();
        &flipped
    };
    if let Some(k) = lift_kernel(target, &mut primes, MAX_PRIMES, &mut |mk| mk.free.clone()) {
        if k.complete {
            return k.rank;
        }
    }
    bareiss::rank(mat.dense(), n)
}

/// Exact kernel basis of an integer matrix: one vector per non-pivot column
/// of the reduced row echelon form.
pub fn int_kernel(mat: &IntMatrix) -> Vec<Vec<Rational>> {
    let n = mat.ncols();
    if n == 0 {
        return Vec::new();
    }
    if mat.nrows() == 0 {
        return (0..n)
            .map(|j| {
                let mut v = vec![Rational::zero(); n];
                v[j] = Rational::from_integer(1.into());
                v
            })
            .collect();
    }
    let mut primes = PrimeStream::default();
    if let Some(k) = lift_kernel(mat, &mut primes, MAX_PRIMES, &mut |mk| mk.free.clone()) {
        if k.complete {
            return k.vectors;
        }
    }
    bareiss::kernel(mat.dense(), n)
}

/// Exact rank over ℚ.
pub fn rank(m: &QMat) -> usize {
    int_rank(&m.to_int())
}

/// Basis of the right null space `{v : M·v = 0}`.
pub fn kernel_basis(m: &QMat) -> Vec<Vec<Rational>> {
    int_kernel(&m.to_int())
}

/// Rank of a list of vectors of common length `len`.
pub fn rank_of_vectors(len: usize, vs: &[Vec<Rational>]) -> Result<usize, LaError> {
    let mut mat = IntMatrix::new(len);
    for v in vs {
        if v.len() != len {
            return Err(LaError::LengthMismatch(len, v.len()));
        }
        mat.push_row(integer_row(v));
    }
    Ok(int_rank(&mat))
}

/// True when the two lists span the same subspace.
pub fn span_equal(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Result<bool, LaError> {
    let len = a.first().or(b.first()).map_or(0, |v| v.len());
    let ra = rank_of_vectors(len, a)?;
    let rb = rank_of_vectors(len, b)?;
    if ra != rb {
        return Ok(false);
    }
    let both: Vec<Vec<Rational>> = a.iter().chain(b).cloned().collect();
    Ok(rank_of_vectors(len, &both)? == ra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, HPoly};

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|x| rat(*x)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&QMat::identity(3)), 3);
        assert_eq!(rank(&QMat::from_i64(&[&[1, 1, 1]])), 1);
        let vdm = QMat::from_i64(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]]);
        assert_eq!(rank(&vdm), 3);
        assert_eq!(rank(&QMat::zeros(4, 5)), 0);
        assert_eq!(rank(&QMat::zeros(0, 5)), 0);
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&QMat::identity(3)).is_empty());
        let m = QMat::from_i64(&[&[1, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        assert!(span_equal(&k, &vecs(&[&[1, -1, 0], &[1, 0, -1]])).unwrap());
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn partials_of_the_quintic_are_independent() {
        let f = HPoly::y().pow(4).mul(&HPoly::z()) + HPoly::x().pow(5);
        let g = f.gradient();
        let cols: Vec<Vec<Rational>> = g.iter().map(|p| p.coefficients()).collect();
        let m = QMat::from_rows(3, (0..cols[0].len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
            .unwrap();
        assert!(kernel_basis(&m).is_empty());
    }

    #[test]
    fn spans() {
        assert!(span_equal(&vecs(&[&[1, 0], &[0, 1]]), &vecs(&[&[1, 1], &[1, -1]])).unwrap());
        assert!(!span_equal(&vecs(&[&[1, 0]]), &vecs(&[&[0, 1]])).unwrap());
        assert_eq!(
            span_equal(&vecs(&[&[1, 0]]), &vecs(&[&[0, 1, 0]])),
            Err(LaError::LengthMismatch(2, 3))
        );
    }

    #[test]
    fn rank_deficient_large_matrix_goes_through_the_lift() {
        // 12 x 10 of rank 6: rows are combinations of 6 fixed rows.
        let base: Vec<Vec<i64>> = (0..6)
            .map(|i| (0..10).map(|j| ((i * 7 + j * j * 3 + 1) % 11) as i64 - 5).collect())
            .collect();
        let rows: Vec<Vec<Rational>> = (0..12)
            .map(|k| {
                (0..10)
                    .map(|j| {
                        let s: i64 = (0..6).map(|i| base[i][j] * (((k * 5 + i * 3) % 7) as i64 - 3)).sum();
                        rat(s)
                    })
                    .collect()
            })
            .collect();
        let m = QMat::from_rows(10, rows.clone()).unwrap();
        let r = rank(&m);
        assert_eq!(r, bareiss::rank(m.to_int().dense(), 10));
        assert_eq!(kernel_basis(&m).len(), 10 - r);
    }
}
