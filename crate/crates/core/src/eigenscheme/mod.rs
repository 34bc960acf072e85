//! Eigenschemes of partially symmetric tensors.
//!
//! A tensor is a triple `T = (g1, g2, g3)` of forms of degree `e`. Its
//! eigenscheme is cut out by the 2×2 minors of
//!
//! ```text
//! | x   y   z  |
//! | g1  g2  g3 |
//! ```
//!
//! For `T = ∇f` these are the points where the gradient is proportional to
//! the point, i.e. the fixed points of the polar map.

use crate::algebra::{rat, AlgebraError, HPoly, Point, Rational, Var};
use crate::exactla;
use crate::jacobian::{plateau, Freeness, Jacobian, JacobianError, SyzygyModule, SyzygyVec};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EigenError {
    #[error("tensor entries have degrees {0}, {1} and {2}")]
    DegreeMismatch(u32, u32, u32),
    #[error("tensor entries must have degree at least 1")]
    ConstantTensor,
    #[error("all tensor entries are zero")]
    ZeroTensor,
    #[error("the eigenscheme is not zero-dimensional")]
    NotZeroDimensional,
    #[error("not the Jacobian ideal of an eigenscheme: {0}")]
    NotEigenscheme(NotEigenscheme),
    #[error("the syzygy is not of the form (a x, b y, c z)")]
    NotDiagonal,
    #[error("the diagonal syzygy has a zero coefficient")]
    ZeroDiagonalEntry,
    #[error("the triple is not a syzygy of the given polynomial")]
    InvalidSyzygy,
    #[error("the Hilbert-Burch check failed: {0}")]
    HilbertBurch(&'static str),
    #[error("the blow-up class needs d >= 3, got {0}")]
    DegreeTooLow(u32),
    #[error(transparent)]
    Jacobian(#[from] JacobianError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Why a Jacobian ideal is not the ideal of an eigenscheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NotEigenscheme {
    /// `mdr(f) ≠ 1`.
    NoLinearSyzygy,
    /// The linear syzygy has linearly dependent entries.
    EntriesDependent,
    /// The syzygy module is not free with exponents `(1, d − 2)`.
    NotFree,
    /// The minors of the candidate tensor do not span the partials.
    SpanMismatch,
}

impl fmt::Display for NotEigenscheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotEigenscheme::NoLinearSyzygy => "no linear syzygy",
            NotEigenscheme::EntriesDependent => "the linear syzygy has dependent entries",
            NotEigenscheme::NotFree => "the syzygy module is not free with exponents (1, d-2)",
            NotEigenscheme::SpanMismatch => "the minors do not span the Jacobian ideal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    g: [HPoly; 3],
}

impl Tensor {
    pub fn new(g1: HPoly, g2: HPoly, g3: HPoly) -> Result<Self, EigenError> {
        let (a, b, c) = (g1.degree(), g2.degree(), g3.degree());
        if a != b || a != c {
            return Err(EigenError::DegreeMismatch(a, b, c));
        }
        if a == 0 {
            return Err(EigenError::ConstantTensor);
        }
        if g1.is_zero() && g2.is_zero() && g3.is_zero() {
            return Err(EigenError::ZeroTensor);
        }
        Ok(Tensor { g: [g1, g2, g3] })
    }

    pub fn entries(&self) -> &[HPoly; 3] {
        &self.g
    }

    pub fn degree(&self) -> u32 {
        self.g[0].degree()
    }

    /// `(x g2 − y g1, x g3 − z g1, y g3 − z g2)`.
    pub fn minors(&self) -> [HPoly; 3] {
        let [g1, g2, g3] = &self.g;
        let (x, y, z) = (HPoly::x(), HPoly::y(), HPoly::z());
        [
            &x.mul(g2) - &y.mul(g1),
            &x.mul(g3) - &z.mul(g1),
            &y.mul(g3) - &z.mul(g2),
        ]
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.g[0], self.g[1], self.g[2])
    }
}

pub fn minors_ideal(t: &Tensor) -> [HPoly; 3] {
    t.minors()
}

/// Length of the eigenscheme: the stable Hilbert function of `R` modulo the
/// minors, found with the same plateau rule as the Tjurina number at
/// `d = e + 2`.
pub fn eigenscheme_degree(t: &Tensor) -> Result<usize, EigenError> {
    let minors = t.minors();
    if minors.iter().all(|m| m.is_zero()) {
        return Err(EigenError::NotZeroDimensional);
    }
    let mut module = SyzygyModule::new(&minors);
    match plateau(&mut module, t.degree() + 2) {
        Ok(p) => Ok(p.value),
        Err(JacobianError::NoPlateau { .. }) => Err(EigenError::NotZeroDimensional),
        Err(e) => Err(e.into()),
    }
}

pub fn contains_point(t: &Tensor, p: &Point) -> Result<bool, EigenError> {
    for m in t.minors() {
        if !m.evaluate(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn linear_coefficients(l: &HPoly) -> [Rational; 3] {
    [
        l.coeff(&[1, 0, 0]),
        l.coeff(&[0, 1, 0]),
        l.coeff(&[0, 0, 1]),
    ]
}

fn invert3(a: &[[Rational; 3]; 3]) -> Option<[[Rational; 3]; 3]> {
    let cof = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &a[r0][c0] * &a[r1][c1] - &a[r0][c1] * &a[r1][c0]
    };
    let det: Rational = (0..3).map(|j| &a[0][j] * cof(0, j)).sum();
    if det.is_zero() {
        return None;
    }
    // Cyclic cofactors already carry their signs; the inverse is the
    // transposed cofactor matrix over the determinant.
    let mut inv: [[Rational; 3]; 3] = Default::default();
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = cof(j, i) / &det;
        }
    }
    Some(inv)
}

fn coefficient_vectors(forms: &[HPoly]) -> Vec<Vec<Rational>> {
    forms.iter().map(|f| f.coefficients()).collect()
}

/// True when the three forms span the same subspace as the partials of `f`.
fn spans_partials(forms: &[HPoly; 3], f: &HPoly) -> bool {
    exactla::span_equal(&coefficient_vectors(forms), &coefficient_vectors(&f.gradient()))
        .unwrap_or(false)
}

/// Linear syzygy with independent entries, if one exists. With several
/// linear syzygies, small combinations of a basis are tried.
fn independent_linear_syzygy(basis: &[SyzygyVec]) -> Option<SyzygyVec> {
    let independent = |s: &SyzygyVec| {
        let rows: Vec<Vec<Rational>> = s.components().iter().map(|l| linear_coefficients(l).to_vec()).collect();
        exactla::rank_of_vectors(3, &rows).ok() == Some(3)
    };
    if let Some(s) = basis.iter().find(|s| independent(s)) {
        return Some(s.clone());
    }
    if basis.len() < 2 {
        return None;
    }
    for k in 1..=4i64 {
        let s = SyzygyVec::new(
            &basis[0].a + &basis[1].a.scale(&rat(k)),
            &basis[0].b + &basis[1].b.scale(&rat(k)),
            &basis[0].c + &basis[1].c.scale(&rat(k)),
        )
        .expect("linear entries");
        if independent(&s) {
            return Some(s);
        }
    }
    None
}

/// Hilbert-Burch matrix of a curve that is free with exponents
/// `(1, d − 2)` and whose linear syzygy has independent entries: the
/// linear syzygy and a syzygy of degree `d − 2` outside `R_{d−3}` times it.
pub fn hilbert_burch_columns(f: &HPoly) -> Result<HBMatrix, EigenError> {
    let mut j = Jacobian::new(f)?;
    let d = j.degree();
    j.tjurina()?;
    let not = |r| Err(EigenError::NotEigenscheme(r));
    if d < 3 || j.mdr() != 1 {
        return not(NotEigenscheme::NoLinearSyzygy);
    }
    let Some(l) = independent_linear_syzygy(&j.syzygies(1)) else {
        return not(NotEigenscheme::EntriesDependent);
    };
    if j.freeness() != (Freeness::Free { d1: 1, d2: d - 2 }) {
        return not(NotEigenscheme::NotFree);
    }
    let multiples: Vec<Vec<Rational>> = crate::algebra::monomials(d - 3)
        .into_iter()
        .map(|e| {
            let m = HPoly::monomial(e, Rational::one());
            SyzygyVec::new(l.a.mul(&m), l.b.mul(&m), l.c.mul(&m))
                .expect("equal degrees")
                .coefficient_vector()
        })
        .collect();
    let len = 3 * crate::algebra::dim_forms(d - 2);
    let base = exactla::rank_of_vectors(len, &multiples).expect("equal lengths");
    let g = j
        .syzygies(d - 2)
        .into_iter()
        .find(|s| {
            let mut vs = multiples.clone();
            vs.push(s.coefficient_vector());
            exactla::rank_of_vectors(len, &vs).expect("equal lengths") > base
        })
        .ok_or(EigenError::NotEigenscheme(NotEigenscheme::NotFree))?;
    Ok(HBMatrix {
        linear_column: [l.a, l.b, l.c],
        high_column: [g.a, g.b, g.c],
    })
}

/// Writes `J_f` as the ideal of an eigenscheme when possible.
///
/// With the linear syzygy `L = A·(x, y, z)` and the second Hilbert-Burch
/// column `G`, the tensor is `T = A⁻¹·G`: the minors of `[(x, y, z); T]`
/// are then an invertible recombination of the minors of `[L; G]`, which
/// generate `J_f`.
pub fn jacobian_to_tensor(f: &HPoly) -> Result<Tensor, EigenError> {
    let hb = hilbert_burch_columns(f)?;
    let a = hb.linear_column.each_ref().map(linear_coefficients);
    let inv = invert3(&a).expect("independent entries");
    let d = f.degree();
    let entry = |i: usize| {
        (0..3).fold(HPoly::zero(d - 2), |acc, k| {
            &acc + &hb.high_column[k].scale(&inv[i][k])
        })
    };
    let t = Tensor::new(entry(0), entry(1), entry(2))?;
    if !spans_partials(&t.minors(), f) {
        return Err(EigenError::NotEigenscheme(NotEigenscheme::SpanMismatch));
    }
    Ok(t)
}

/// The two columns of a Hilbert-Burch matrix of `J_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HBMatrix {
    pub linear_column: [HPoly; 3],
    pub high_column: [HPoly; 3],
}

impl HBMatrix {
    /// The 2×2 minors `(m12, m13, m23)` of the 3×2 matrix.
    pub fn minors(&self) -> [HPoly; 3] {
        let (l, h) = (&self.linear_column, &self.high_column);
        let m = |i: usize, k: usize| &l[i].mul(&h[k]) - &l[k].mul(&h[i]);
        [m(0, 1), m(0, 2), m(1, 2)]
    }
}

fn diagonal_coefficient(p: &HPoly, v: Var) -> Option<Rational> {
    let mut e = [0u32; 3];
    e[v.index()] = 1;
    let c = p.coeff(&e);
    (p.degree() == 1 && p == &HPoly::var(v).scale(&c)).then_some(c)
}

/// Hilbert-Burch matrix of a free curve with a syzygy `(a x, b y, c z)`,
/// `abc ≠ 0`. Its second column is
/// `((1/c − 1/b) f_yz, (1/a − 1/c) f_xz, (1/b − 1/a) f_xy) / (d + 2)`.
pub fn buchweitz_conca_matrix(f: &HPoly, s: &SyzygyVec) -> Result<HBMatrix, EigenError> {
    let (Some(a), Some(b), Some(c)) = (
        diagonal_coefficient(&s.a, Var::X),
        diagonal_coefficient(&s.b, Var::Y),
        diagonal_coefficient(&s.c, Var::Z),
    ) else {
        return Err(EigenError::NotDiagonal);
    };
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(EigenError::ZeroDiagonalEntry);
    }
    if !s.is_syzygy_of(f) {
        return Err(EigenError::InvalidSyzygy);
    }
    let scale = Rational::new(1.into(), (f.degree() + 2).into());
    let second = |u: Var, v: Var| f.partial(u).partial(v);
    let (ia, ib, ic) = (a.recip(), b.recip(), c.recip());
    let hb = HBMatrix {
        linear_column: [s.a.clone(), s.b.clone(), s.c.clone()],
        high_column: [
            second(Var::Y, Var::Z).scale(&((&ic - &ib) * &scale)),
            second(Var::X, Var::Z).scale(&((&ia - &ic) * &scale)),
            second(Var::X, Var::Y).scale(&((&ib - &ia) * &scale)),
        ],
    };
    let high = SyzygyVec::from_array(hb.high_column.clone())?;
    if !high.is_syzygy_of(f) {
        return Err(EigenError::HilbertBurch("the second column is not a syzygy"));
    }
    if !spans_partials(&hb.minors(), f) {
        return Err(EigenError::HilbertBurch("the minors do not span the partials"));
    }
    Ok(hb)
}

/// Coefficients `(d − 1, d, 1)` of the class of the blow-up of the plane
/// along the Jacobian scheme, in the basis `h1², h1·h2, h2²`.
pub fn blowup_class(d: u32) -> Result<(Rational, Rational, Rational), EigenError> {
    if d < 3 {
        return Err(EigenError::DegreeTooLow(d));
    }
    Ok((rat(d as i64 - 1), rat(d as i64), rat(1)))
}

/// The symmetric tensor `∇f`.
pub fn gradient_tensor(f: &HPoly) -> Result<Tensor, EigenError> {
    let [a, b, c] = f.gradient();
    Tensor::new(a, b, c)
}

#[cfg(test)]
mod tests;
