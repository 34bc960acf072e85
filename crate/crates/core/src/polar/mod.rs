//! Geometry of the polar map `∇f = (f_x : f_y : f_z)`.
//!
//! A line is contracted when the restricted gradient is constant up to
//! scale, which is a rank-1 condition on the coefficient matrix of the
//! three restricted partials. Fibers of free curves with a linear syzygy
//! `L` and second Hilbert-Burch column `G` lie on the line `q·L = 0` and on
//! the curve `q·G = 0`, since both syzygies vanish against `∇f = q`.

use crate::algebra::{binary_gcd_squarefree, AlgebraError, BinaryForm, HPoly, Point, Rational, Var};
use crate::arrangements::CurveInput;
use crate::eigenscheme::{hilbert_burch_columns, EigenError};
use crate::exactla::{self, QMat};
use crate::jacobian::{tjurina, JacobianError};
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolarError {
    #[error("every partial derivative vanishes on the line")]
    GradientVanishesOnLine,
    #[error("the polynomial must have degree at least 2")]
    DegreeTooLow,
    #[error("the fiber line q·L is the zero form")]
    DegenerateFiberLine,
    #[error("component {0} is not a line")]
    NotALine(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Jacobian(#[from] JacobianError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
}

/// Two distinct points spanning the line `l = 0`.
pub fn line_points(l: &HPoly) -> Result<(Point, Point), PolarError> {
    if l.degree() != 1 || l.is_zero() {
        return Err(PolarError::NotALine(0));
    }
    let row = vec![l.coeff(&[1, 0, 0]), l.coeff(&[0, 1, 0]), l.coeff(&[0, 0, 1])];
    let m = QMat::from_rows(3, vec![row]).expect("three entries");
    let k = exactla::kernel_basis(&m);
    let pt = |v: &Vec<Rational>| [v[0].clone(), v[1].clone(), v[2].clone()];
    Ok((pt(&k[0]), pt(&k[1])))
}

fn restricted_gradient(f: &HPoly, p: &Point, q: &Point) -> Result<Vec<BinaryForm>, PolarError> {
    if f.degree() < 2 {
        return Err(PolarError::DegreeTooLow);
    }
    f.gradient()
        .iter()
        .map(|g| g.restrict_to_line(p, q).map_err(PolarError::from))
        .collect()
}

/// True when the polar map sends the line through `p` and `q` to a point.
pub fn is_contracted(f: &HPoly, p: &Point, q: &Point) -> Result<bool, PolarError> {
    let forms = restricted_gradient(f, p, q)?;
    let rows: Vec<Vec<Rational>> = forms.iter().map(|b| b.coefficients().to_vec()).collect();
    let len = rows[0].len();
    match exactla::rank_of_vectors(len, &rows).expect("equal lengths") {
        0 => Err(PolarError::GradientVanishesOnLine),
        r => Ok(r == 1),
    }
}

/// Same test as [`is_contracted`], phrased as pairwise proportionality of
/// the restricted partials: every 2×2 minor of every pair of coefficient
/// rows vanishes.
pub fn is_contracted_pairwise(f: &HPoly, p: &Point, q: &Point) -> Result<bool, PolarError> {
    let forms = restricted_gradient(f, p, q)?;
    if forms.iter().all(|b| b.is_zero()) {
        return Err(PolarError::GradientVanishesOnLine);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let (u, v) = (forms[i].coefficients(), forms[j].coefficients());
            for a in 0..u.len() {
                for b in a + 1..u.len() {
                    if !(&u[a] * &v[b] - &u[b] * &v[a]).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

pub fn is_line_contracted(f: &HPoly, l: &HPoly) -> Result<bool, PolarError> {
    let (p, q) = line_points(l)?;
    is_contracted(f, &p, &q)
}

/// The line components of `c` contracted by the polar map of its product.
pub fn contracted_component_lines(c: &CurveInput) -> Result<Vec<HPoly>, PolarError> {
    let f = c.product();
    let mut out = Vec::new();
    for l in c.lines() {
        if is_line_contracted(f, l)? {
            out.push(l.clone());
        }
    }
    Ok(out)
}

/// Degree of the polar map, `(d−1)² − μ`, read as `(d−1)² − τ`. The two
/// agree when every singular point is quasihomogeneous, which the caller
/// asserts and the result records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarDegree {
    pub degree: i64,
    pub quasihomogeneous_assumed: bool,
}

pub fn polar_degree_qh(f: &HPoly) -> Result<PolarDegree, PolarError> {
    let d = f.degree() as i64;
    let tau = tjurina(f)? as i64;
    Ok(PolarDegree {
        degree: (d - 1) * (d - 1) - tau,
        quasihomogeneous_assumed: true,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    /// `q·L` for the linear syzygy `L`.
    pub line: HPoly,
    /// `q·G` for the second Hilbert-Burch column `G`.
    pub curve: HPoly,
    /// The curve vanishes on the whole line: `q` is the image of a
    /// contracted line.
    pub identically_zero: bool,
    pub roots_total: u32,
    pub roots_distinct: u32,
}

fn dot(q: &Point, v: &[HPoly; 3]) -> HPoly {
    let deg = v[0].degree();
    (0..3).fold(HPoly::zero(deg), |acc, i| &acc + &v[i].scale(&q[i]))
}

/// Fiber of the polar map over `q` for a free curve with an independent
/// linear syzygy.
pub fn fiber_over_point(f: &HPoly, q: &Point) -> Result<Fiber, PolarError> {
    let hb = hilbert_burch_columns(f)?;
    fiber_with(&hb, q)
}

fn fiber_with(hb: &crate::eigenscheme::HBMatrix, q: &Point) -> Result<Fiber, PolarError> {
    if q.iter().all(|c| c.is_zero()) {
        return Err(AlgebraError::ZeroPoint.into());
    }
    let line = dot(q, &hb.linear_column);
    if line.is_zero() {
        return Err(PolarError::DegenerateFiberLine);
    }
    let curve = dot(q, &hb.high_column);
    let (a, b) = line_points(&line)?;
    let restricted = curve.restrict_to_line(&a, &b)?;
    if restricted.is_zero() {
        return Ok(Fiber {
            line,
            curve,
            identically_zero: true,
            roots_total: 0,
            roots_distinct: 0,
        });
    }
    let split = binary_gcd_squarefree(&restricted)?;
    Ok(Fiber {
        line,
        curve,
        identically_zero: false,
        roots_total: restricted.degree(),
        roots_distinct: split.distinct_roots(),
    })
}

/// Fibers over `count` seeded points with integer coordinates in
/// `[−10, 10]`. Points on contracted images and degenerate fiber lines are
/// skipped.
pub fn sample_fibers<R: Rng>(f: &HPoly, count: usize, rng: &mut R) -> Result<Vec<(Point, Fiber)>, PolarError> {
    let hb = hilbert_burch_columns(f)?;
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 20 * count {
        attempts += 1;
        let q: Point = [0, 0, 0].map(|_: i32| Rational::from_integer(rng.gen_range(-10..=10).into()));
        match fiber_with(&hb, &q) {
            Ok(fib) if !fib.identically_zero => out.push((q, fib)),
            Ok(_) | Err(PolarError::DegenerateFiberLine) | Err(PolarError::Algebra(AlgebraError::ZeroPoint)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessianReport {
    pub hessian: HPoly,
    /// Indices of the line components dividing the Hessian.
    pub divisible_by: Vec<usize>,
    /// `h(f) / f` when it is a polynomial.
    pub quotient: Option<HPoly>,
    /// Variables occurring in the quotient.
    pub quotient_vars: Option<Vec<Var>>,
}

pub fn hessian_report(f: &HPoly, c: &CurveInput) -> Result<HessianReport, PolarError> {
    if f.degree() < 2 {
        return Err(PolarError::DegreeTooLow);
    }
    let h = f.hessian_det()?;
    let divides = |g: &HPoly| !h.is_zero() && h.exact_divide(g).is_ok();
    let divisible_by = c
        .components()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.degree() == 1 && divides(l))
        .map(|(i, _)| i)
        .collect();
    let quotient = if h.degree() >= f.degree() && divides(f) {
        h.exact_divide(f).ok()
    } else {
        None
    };
    let quotient_vars = quotient.as_ref().map(|q| q.variables());
    Ok(HessianReport {
        hessian: h,
        divisible_by,
        quotient,
        quotient_vars,
    })
}

/// Everything the polar command reports about a factored curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarReport {
    pub degree_estimate: PolarDegree,
    pub contracted_lines: Vec<HPoly>,
    pub hessian_divisible_by: Vec<usize>,
    pub hessian_quotient_vars: Option<Vec<Var>>,
}

pub fn polar_report(c: &CurveInput) -> Result<PolarReport, PolarError> {
    let f = c.product();
    let hess = hessian_report(f, c)?;
    Ok(PolarReport {
        degree_estimate: polar_degree_qh(f)?,
        contracted_lines: contracted_component_lines(c)?,
        hessian_divisible_by: hess.divisible_by,
        hessian_quotient_vars: hess.quotient_vars,
    })
}

#[cfg(test)]
mod tests;
