//! Arithmetic modulo word-sized primes and verified lifting back to ℚ.
//!
//! Nothing computed here is trusted on its own. Ranks modulo `p` are lower
//! bounds for ranks over ℚ, and reconstructed kernel vectors are only
//! returned after an exact integer check `M·v = 0`.

use crate::algebra::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A prime below `2^31` with a precomputed Barrett constant.
#[derive(Clone, Copy, Debug)]
pub struct Modulus {
    p: u64,
    barrett: u64,
}

impl Modulus {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 31));
        Modulus {
            p,
            barrett: (u64::MAX / p),
        }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces any `x < 2^64`.
    #[inline(always)]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline(always)]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    #[inline(always)]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.p - 2)
    }

    pub fn from_bigint(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }

    pub fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// `v[from..] += c * w[from..]`.
    #[inline]
    pub fn axpy(&self, v: &mut [u64], c: u64, w: &[u64], from: usize) {
        for (a, b) in v[from..].iter_mut().zip(&w[from..]) {
            *a = self.reduce(*a + c * *b);
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    // Deterministic for n < 3.4e14.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic sequence of distinct primes just below `2^31`.
#[derive(Clone, Debug)]
pub struct PrimeStream {
    next: u64,
}

impl Default for PrimeStream {
    fn default() -> Self {
        PrimeStream { next: (1 << 31) - 1 }
    }
}

impl PrimeStream {
    /// Starts further down the list, so independent computations use
    /// different primes.
    pub fn skip(n: usize) -> Self {
        let mut s = Self::default();
        for _ in 0..n {
            s.next_prime();
        }
        s
    }

    pub fn next_prime(&mut self) -> Modulus {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return Modulus::new(c);
            }
        }
    }
}

/// Sparse integer matrix stored by rows.
#[derive(Clone, Debug, Default)]
pub struct IntMatrix {
    cols: usize,
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl IntMatrix {
    pub fn new(cols: usize) -> Self {
        IntMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_dense(cols: usize, rows: &[Vec<BigInt>]) -> Self {
        let mut m = Self::new(cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            m.push_row(
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect(),
            );
        }
        m
    }

    /// Builds a matrix from sparse columns over `rows` rows.
    pub fn from_columns(rows: usize, columns: &[Vec<(usize, BigInt)>]) -> Self {
        let mut rs: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col {
                if !v.is_zero() {
                    rs[*i].push((j, v.clone()));
                }
            }
        }
        IntMatrix {
            cols: columns.len(),
            rows: rs,
        }
    }

    pub fn push_row(&mut self, mut row: Vec<(usize, BigInt)>) {
        row.sort_by_key(|(j, _)| *j);
        debug_assert!(row.iter().all(|(j, _)| *j < self.cols));
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<(usize, BigInt)>] {
        &self.rows
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut cols: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                cols[*j].push((i, v.clone()));
            }
        }
        IntMatrix {
            cols: self.rows.len(),
            rows: cols,
        }
    }

    pub fn dense(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let mut v = vec![BigInt::zero(); self.cols];
                for (j, x) in r {
                    v[*j] = x.clone();
                }
                v
            })
            .collect()
    }

    pub fn reduce(&self, m: &Modulus) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut v = vec![0u64; self.cols];
                for (j, x) in r {
                    v[*j] = m.from_bigint(x);
                }
                v
            })
            .collect()
    }

    /// Exact test `M·v = 0` for an integer vector.
    pub fn annihilates(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.cols);
        self.rows.iter().all(|r| {
            let mut acc = BigInt::zero();
            for (j, x) in r {
                if !v[*j].is_zero() {
                    acc += x * &v[*j];
                }
            }
            acc.is_zero()
        })
    }
}

/// Row echelon form modulo `p` grown one vector at a time.
///
/// Rows are normalized so their leading entry is 1; entries after the
/// leading column are only partially reduced.
#[derive(Clone, Debug)]
pub struct Echelon {
    m: Modulus,
    len: usize,
    rows: Vec<Vec<u64>>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(len: usize, m: Modulus) -> Self {
        Echelon {
            m,
            len,
            rows: Vec::new(),
            pivot_row: vec![None; len],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    /// Leading columns in insertion order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut out = vec![0; self.rows.len()];
        for (c, r) in self.pivot_row.iter().enumerate() {
            if let Some(r) = r {
                out[*r] = c;
            }
        }
        out
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Reduces `v` until its first nonzero entry is not a pivot column.
    /// Returns that column, or `None` if `v` lies in the span.
    fn reduce_lead(&self, v: &mut [u64]) -> Option<usize> {
        for k in 0..self.len {
            if v[k] == 0 {
                continue;
            }
            match self.pivot_row[k] {
                Some(r) => {
                    let c = self.m.neg(v[k]);
                    self.m.axpy(v, c, &self.rows[r], k);
                }
                None => return Some(k),
            }
        }
        None
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce_lead(&mut w).is_none()
    }

    /// Inserts `v`; returns true when the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.len);
        match self.reduce_lead(&mut v) {
            None => false,
            Some(k) => {
                let inv = self.m.inv(v[k]);
                for x in &mut v[k..] {
                    *x = self.m.mul(*x, inv);
                }
                self.pivot_row[k] = Some(self.rows.len());
                self.rows.push(v);
                true
            }
        }
    }
}

pub fn rank_mod(rows: Vec<Vec<u64>>, len: usize, m: Modulus) -> usize {
    let mut e = Echelon::new(len, m);
    for r in rows {
        e.insert(r);
        if e.rank() == len {
            break;
        }
    }
    e.rank()
}

/// Reduced row echelon form modulo `p`.
pub struct Rref {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<u64>>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self, ncols: usize) -> Vec<usize> {
        let mut is_piv = vec![false; ncols];
        for p in &self.pivots {
            is_piv[*p] = true;
        }
        (0..ncols).filter(|j| !is_piv[*j]).collect()
    }

    /// Kernel vector with a 1 in free column `j` and zeros in the other
    /// free columns.
    pub fn kernel_vector(&self, j: usize, ncols: usize, m: &Modulus) -> Vec<u64> {
        let mut v = vec![0; ncols];
        v[j] = 1;
        for (r, p) in self.pivots.iter().enumerate() {
            v[*p] = m.neg(self.rows[r][j]);
        }
        v
    }
}

pub fn rref_mod(mut rows: Vec<Vec<u64>>, ncols: usize, m: &Modulus) -> Rref {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(sel) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = m.inv(rows[rank][col]);
        for x in &mut rows[rank][col..] {
            *x = m.mul(*x, inv);
        }
        let (head, tail) = rows.split_at_mut(rank);
        let (prow, tail) = tail.split_first_mut().unwrap();
        for r in head.iter_mut().chain(tail.iter_mut()) {
            if r[col] != 0 {
                let c = m.neg(r[col]);
                m.axpy(r, c, prow, col);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Rref { pivots, rows }
}

/// Rational number with `|num|, den ≤ sqrt(modulus / 2)` congruent to `a`.
pub fn rational_reconstruct(a: &BigInt, modulus: &BigInt) -> Option<Rational> {
    let a = a.mod_floor(modulus);
    if a.is_zero() {
        return Some(Rational::zero());
    }
    let bound = (modulus >> 1u32).sqrt();
    let (mut r0, mut r1) = (modulus.clone(), a);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let q = Rational::new(r1, t1);
    if q.denom().gcd(modulus).is_one() {
        Some(q)
    } else {
        None
    }
}

/// Incremental Chinese remaindering of a vector of residues.
#[derive(Clone, Debug)]
pub struct Crt {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl Crt {
    pub fn new(len: usize) -> Self {
        Crt {
            modulus: BigInt::one(),
            values: vec![BigInt::zero(); len],
        }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn add(&mut self, m: &Modulus, residues: &[u64]) {
        assert_eq!(residues.len(), self.values.len());
        let p = BigInt::from(m.p());
        let minv = m.inv(m.from_bigint(&self.modulus));
        for (x, r) in self.values.iter_mut().zip(residues) {
            let xm = m.from_bigint(x);
            let diff = m.add(*r, m.neg(xm));
            let k = m.mul(diff, minv);
            if k != 0 {
                *x += &self.modulus * BigInt::from(k);
            }
        }
        self.modulus *= p;
    }

    pub fn reconstruct(&self) -> Option<Vec<Rational>> {
        self.values
            .iter()
            .map(|x| rational_reconstruct(x, &self.modulus))
            .collect()
    }
}

/// Scales a rational vector to integers and divides out the content.
pub fn integer_vector(v: &[Rational]) -> Vec<BigInt> {
    crate::algebra::primitive_integer_vector(v)
}

/// Modular kernel data for one prime.
pub struct ModKernel {
    pub modulus: Modulus,
    pub rref: Rref,
    pub free: Vec<usize>,
}

impl ModKernel {
    pub fn compute(mat: &IntMatrix, m: Modulus) -> Self {
        let rref = rref_mod(mat.reduce(&m), mat.ncols(), &m);
        let free = rref.free_columns(mat.ncols());
        ModKernel {
            modulus: m,
            rref,
            free,
        }
    }

    pub fn vector(&self, j: usize, ncols: usize) -> Vec<u64> {
        self.rref.kernel_vector(j, ncols, &self.modulus)
    }
}

/// Outcome of [`lift_kernel`].
pub struct LiftedKernel {
    /// Rank over ℚ, proved when `complete` holds.
    pub rank: usize,
    pub vectors: Vec<Vec<Rational>>,
    /// True when every free column was lifted, so the vectors form a basis.
    pub complete: bool,
}

/// Lifts selected kernel vectors of `mat` from residues to exact rationals.
///
/// `select` is called with the modular kernel of the best prime seen and
/// returns the free columns to lift. Each returned vector has a 1 in its
/// free column, zeros in the other free columns, and has been checked to
/// satisfy `M·v = 0` exactly. Gives up after `max_primes` primes.
pub fn lift_kernel(
    mat: &IntMatrix,
    primes: &mut PrimeStream,
    max_primes: usize,
    select: &mut dyn FnMut(&ModKernel) -> Vec<usize>,
) -> Option<LiftedKernel> {
    let n = mat.ncols();
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut chosen: Vec<usize> = Vec::new();
    let mut crt = Crt::new(0);
    let mut used = 0usize;
    let mut next_try = 1usize;
    for _ in 0..max_primes {
        let m = primes.next_prime();
        let mk = ModKernel::compute(mat, m);
        let sig = (mk.rref.rank(), mk.rref.pivots.clone());
        let better = match &best {
            None => true,
            Some((r, piv)) => sig.0 > *r || (sig.0 == *r && sig.1 < *piv),
        };
        if better {
            chosen = select(&mk);
            best = Some(sig);
            crt = Crt::new(chosen.len() * mk.rref.rank());
            used = 0;
            next_try = 1;
        } else if best.as_ref() != Some(&sig) {
            continue;
        }
        if chosen.is_empty() {
            let rank = mk.rref.rank();
            return Some(LiftedKernel {
                rank,
                vectors: Vec::new(),
                complete: rank == n,
            });
        }
        let mut residues = Vec::with_capacity(chosen.len() * mk.rref.rank());
        for &j in &chosen {
            for r in 0..mk.rref.rank() {
                residues.push(m.neg(mk.rref.rows[r][j]));
            }
        }
        crt.add(&m, &residues);
        used += 1;
        if used < next_try {
            continue;
        }
        next_try = used + used.div_ceil(2).max(1);
        let Some(vals) = crt.reconstruct() else {
            continue;
        };
        let rank = mk.rref.rank();
        let pivots = &mk.rref.pivots;
        let mut out = Vec::with_capacity(chosen.len());
        let mut ok = true;
        for (k, &j) in chosen.iter().enumerate() {
            let mut v = vec![Rational::zero(); n];
            v[j] = Rational::one();
            for (r, p) in pivots.iter().enumerate() {
                v[*p] = vals[k * rank + r].clone();
            }
            if !mat.annihilates(&integer_vector(&v)) {
                ok = false;
                break;
            }
            out.push(v);
        }
        if ok {
            return Some(LiftedKernel {
                rank,
                complete: out.len() == n - rank,
                vectors: out,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn barrett_matches_remainder() {
        let m = PrimeStream::default().next_prime();
        assert_eq!(m.p(), 2147483647);
        for x in [0u64, 1, m.p() - 1, m.p(), u64::MAX, (m.p() - 1) * (m.p() - 1)] {
            assert_eq!(m.reduce(x), x % m.p());
        }
        let a = 123456789;
        assert_eq!(m.mul(a, m.inv(a)), 1);
    }

    #[test]
    fn prime_stream_is_strictly_decreasing() {
        let mut s = PrimeStream::default();
        let ps: Vec<u64> = (0..5).map(|_| s.next_prime().p()).collect();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|p| is_prime_u64(*p)));
    }

    #[test]
    fn reconstructs_small_fractions() {
        let mut crt = Crt::new(3);
        let mut s = PrimeStream::default();
        let vals = [ratio(-3, 7), ratio(22, 5), ratio(0, 1)];
        for _ in 0..3 {
            let m = s.next_prime();
            let res: Vec<u64> = vals
                .iter()
                .map(|q| {
                    let n = m.from_bigint(q.numer());
                    let d = m.from_bigint(q.denom());
                    m.mul(n, m.inv(d))
                })
                .collect();
            crt.add(&m, &res);
        }
        assert_eq!(crt.reconstruct().unwrap(), vals.to_vec());
    }

    #[test]
    fn lifted_kernel_is_exact() {
        let rows: Vec<Vec<BigInt>> = [[1i64, 2, 3, 4], [2, 4, 7, 9]]
            .iter()
            .map(|r| r.iter().map(|x| BigInt::from(*x)).collect())
            .collect();
        let mat = IntMatrix::from_dense(4, &rows);
        let mut s = PrimeStream::default();
        let k = lift_kernel(&mat, &mut s, 10, &mut |mk| mk.free.clone()).unwrap();
        assert_eq!(k.rank, 2);
        assert!(k.complete);
        assert_eq!(k.vectors.len(), 2);
    }
}
