//! Fraction-free elimination over the integers.

use crate::algebra::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer row echelon form produced by Bareiss elimination.
pub struct IntEchelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

/// Bareiss elimination. In each column the remaining row whose entry has the
/// largest absolute value is used as pivot; ties go to the lowest row.
pub fn echelon(mut a: Vec<Vec<BigInt>>, ncols: usize) -> IntEchelon {
    let m = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let mut best: Option<usize> = None;
        for i in r..m {
            if a[i][c].is_zero() {
                continue;
            }
            match best {
                Some(b) if a[b][c].abs() >= a[i][c].abs() => {}
                _ => best = Some(i),
            }
        }
        let Some(b) = best else { continue };
        a.swap(r, b);
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        let pv = prow[c].clone();
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..ncols {
                let v = &pv * &row[j] - &f * &prow[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    IntEchelon { rows: a, pivots }
}

pub fn rank(a: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    echelon(a, ncols).pivots.len()
}

/// Kernel basis by back substitution: one vector per non-pivot column, with
/// a 1 there and zeros in the other non-pivot columns.
pub fn kernel(a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<Rational>> {
    let e = echelon(a, ncols);
    let mut is_piv = vec![false; ncols];
    for p in &e.pivots {
        is_piv[*p] = true;
    }
    let mut out = Vec::new();
    for j in (0..ncols).filter(|j| !is_piv[*j]) {
        let mut v = vec![Rational::zero(); ncols];
        v[j] = Rational::one();
        for (r, &p) in e.pivots.iter().enumerate().rev() {
            let row = &e.rows[r];
            let mut s = Rational::zero();
            for k in p + 1..ncols {
                if !row[k].is_zero() && !v[k].is_zero() {
                    s += Rational::from_integer(row[k].clone()) * &v[k];
                }
            }
            v[p] = -s / Rational::from_integer(row[p].clone());
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|x| BigInt::from(*x)).collect())
            .collect()
    }

    #[test]
    fn skipped_columns_keep_divisions_exact() {
        let a = m(&[&[0, 1, 2, 3], &[0, 2, 4, 7], &[0, 0, 1, 1], &[1, 1, 1, 1]]);
        assert_eq!(rank(a.clone(), 4), 4);
        let b = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(b.clone(), 3), 2);
        let k = kernel(b.clone(), 3);
        assert_eq!(k.len(), 1);
        for row in &b {
            let s: Rational = row
                .iter()
                .zip(&k[0])
                .map(|(x, y)| Rational::from_integer(x.clone()) * y)
                .sum();
            assert!(s.is_zero());
        }
    }
}
