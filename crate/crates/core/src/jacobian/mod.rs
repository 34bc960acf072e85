//! Syzygies of the Jacobian ideal of a plane curve.
//!
//! For a form `f` of degree `d`, a syzygy of degree `t` is a triple
//! `(a, b, c)` of degree-`t` forms with `a f_x + b f_y + c f_z = 0`. This
//! module computes their graded pieces, the minimal degree `mdr(f)`, the
//! Hilbert function of `R / J_f`, the global Tjurina number, the
//! du Plessis–Wall bounds and the free / nearly free classification.

mod engine;

pub use engine::SyzygyModule;

use crate::algebra::{AlgebraError, HPoly, Rational, Var};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacobianError {
    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,
    #[error("a constant does not define a curve")]
    ConstantPolynomial,
    #[error("the Hilbert function did not stabilize by degree {last} (values {values:?}); the input is probably not reduced")]
    NoPlateau {
        last: u32,
        values: Vec<(u32, usize)>,
    },
    #[error("the bounds need mdr(f) >= 1, but the curve is a union of concurrent lines")]
    ConcurrentLines,
    #[error("the triple is not a syzygy of the given polynomial")]
    InvalidSyzygy,
    #[error("the second factor must have positive degree")]
    ConstantFactor,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A relation `a·f_x + b·f_y + c·f_z = 0` with `a, b, c` of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyVec {
    pub a: HPoly,
    pub b: HPoly,
    pub c: HPoly,
}

impl SyzygyVec {
    pub fn new(a: HPoly, b: HPoly, c: HPoly) -> Result<Self, AlgebraError> {
        if a.degree() != b.degree() {
            return Err(AlgebraError::DegreeMismatch(a.degree(), b.degree()));
        }
        if a.degree() != c.degree() {
            return Err(AlgebraError::DegreeMismatch(a.degree(), c.degree()));
        }
        Ok(SyzygyVec { a, b, c })
    }

    pub fn from_array([a, b, c]: [HPoly; 3]) -> Result<Self, AlgebraError> {
        Self::new(a, b, c)
    }

    pub fn degree(&self) -> u32 {
        self.a.degree()
    }

    pub fn components(&self) -> [&HPoly; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// `a·g1 + b·g2 + c·g3`.
    pub fn apply(&self, g: &[HPoly; 3]) -> HPoly {
        &(&self.a.mul(&g[0]) + &self.b.mul(&g[1])) + &self.c.mul(&g[2])
    }

    /// The derivation `a ∂_x + b ∂_y + c ∂_z` applied to `g`.
    pub fn derive(&self, g: &HPoly) -> HPoly {
        self.apply(&g.gradient())
    }

    pub fn is_syzygy_of(&self, f: &HPoly) -> bool {
        self.derive(f).is_zero()
    }

    pub fn scale(&self, q: &Rational) -> SyzygyVec {
        SyzygyVec {
            a: self.a.scale(q),
            b: self.b.scale(q),
            c: self.c.scale(q),
        }
    }

    /// Concatenated coefficient vectors of `a`, `b`, `c`.
    pub fn coefficient_vector(&self) -> Vec<Rational> {
        let mut v = self.a.coefficients();
        v.extend(self.b.coefficients());
        v.extend(self.c.coefficients());
        v
    }

    pub fn is_proportional_to(&self, other: &SyzygyVec) -> bool {
        crate::algebra::proportional(&self.coefficient_vector(), &other.coefficient_vector())
    }
}

impl fmt::Display for SyzygyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Free / nearly free classification from generator degrees `≤ d − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum Freeness {
    Free { d1: u32, d2: u32 },
    NearlyFree { d1: u32, d2: u32 },
    /// Minimal generator degrees found while scanning degrees up to
    /// `scanned_through`; higher generators are not searched for.
    Neither {
        generator_degrees: Vec<u32>,
        scanned_through: u32,
    },
    ConcurrentLines,
}

impl fmt::Display for Freeness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Freeness::Free { d1, d2 } => write!(f, "Free({d1},{d2})"),
            Freeness::NearlyFree { d1, d2 } => write!(f, "NearlyFree({d1},{d2})"),
            Freeness::Neither {
                generator_degrees, ..
            } => {
                let ds: Vec<String> = generator_degrees.iter().map(|d| d.to_string()).collect();
                write!(f, "Neither({})", ds.join(","))
            }
            Freeness::ConcurrentLines => write!(f, "ConcurrentLines"),
        }
    }
}

/// Outcome of the du Plessis–Wall test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DpwCheck {
    pub lower: u64,
    pub upper: u64,
    pub tau: u64,
    pub holds: bool,
}

/// `(d−1)(d−r−1)` and that plus `r²`.
pub fn dpw_bounds(d: u32, r: u32) -> (u64, u64) {
    let (d, r) = (d as u64, r as u64);
    let lower = (d - 1) * (d - r - 1);
    (lower, lower + r * r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobianReport {
    pub d: u32,
    pub r: u32,
    pub tau: u64,
    /// Absent for concurrent lines, where the bounds do not apply.
    pub dpw_lower: Option<u64>,
    pub dpw_upper: Option<u64>,
    pub freeness: Freeness,
    pub hilbert_table: Vec<(u32, u64)>,
}

/// Window and values examined by the plateau rule.
pub(crate) struct Plateau {
    pub value: usize,
    pub end: u32,
}

/// Stable value of the Hilbert function of `R / (g1, g2, g3)`.
///
/// `d` plays the role of the curve degree: the first window is
/// `[3d−6, 3d−6+max(d,4)]`; while the values in it are not all equal the
/// window moves up by `d`, and the search stops once it would pass `6d`.
pub(crate) fn plateau(module: &mut SyzygyModule, d: u32) -> Result<Plateau, JacobianError> {
    let width = d.max(4);
    let mut start = (3 * d).saturating_sub(6);
    let mut seen = std::collections::BTreeMap::new();
    loop {
        let values: Vec<(u32, usize)> = (start..=start + width)
            .map(|t| (t, module.hilbert(t)))
            .collect();
        let first = values[0].1;
        let constant = values.iter().all(|(_, v)| *v == first);
        seen.extend(values.iter().copied());
        if constant {
            return Ok(Plateau {
                value: first,
                end: start + width,
            });
        }
        start += d;
        if start + width > 6 * d {
            return Err(JacobianError::NoPlateau {
                last: seen.keys().next_back().copied().unwrap_or(0),
                values: seen.into_iter().collect(),
            });
        }
    }
}

/// Memoized analysis of one curve.
#[derive(Clone, Debug)]
pub struct Jacobian {
    f: HPoly,
    module: SyzygyModule,
    mdr: Option<u32>,
    tau: Option<Result<(usize, u32), JacobianError>>,
}

impl Jacobian {
    pub fn new(f: &HPoly) -> Result<Self, JacobianError> {
        if f.is_zero() {
            return Err(JacobianError::ZeroPolynomial);
        }
        if f.degree() == 0 {
            return Err(JacobianError::ConstantPolynomial);
        }
        Ok(Jacobian {
            f: f.clone(),
            module: SyzygyModule::new(&f.gradient()),
            mdr: None,
            tau: None,
        })
    }

    pub fn polynomial(&self) -> &HPoly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.f.degree()
    }

    pub fn module(&mut self) -> &mut SyzygyModule {
        &mut self.module
    }

    pub fn syzygy_dim(&mut self, t: u32) -> usize {
        self.module.dim(t)
    }

    pub fn mdr(&mut self) -> u32 {
        if let Some(r) = self.mdr {
            return r;
        }
        let d = self.degree();
        let r = (0..d)
            .find(|&t| self.module.dim(t) > 0)
            .unwrap_or(d - 1);
        self.mdr = Some(r);
        r
    }

    pub fn hilbert(&mut self, t: u32) -> usize {
        self.module.hilbert(t)
    }

    fn tau_and_end(&mut self) -> Result<(usize, u32), JacobianError> {
        if let Some(t) = &self.tau {
            return t.clone();
        }
        let d = self.degree();
        let out = if self.mdr() == 0 {
            let end = (3 * d).saturating_sub(6) + d.max(4);
            Ok((((d - 1) * (d - 1)) as usize, end))
        } else {
            plateau(&mut self.module, d).map(|p| (p.value, p.end))
        };
        self.tau = Some(out.clone());
        out
    }

    pub fn tjurina(&mut self) -> Result<usize, JacobianError> {
        self.tau_and_end().map(|(t, _)| t)
    }

    pub fn dpw(&mut self) -> Result<DpwCheck, JacobianError> {
        let r = self.mdr();
        if r == 0 {
            return Err(JacobianError::ConcurrentLines);
        }
        let tau = self.tjurina()? as u64;
        let (lower, upper) = dpw_bounds(self.degree(), r);
        Ok(DpwCheck {
            lower,
            upper,
            tau,
            holds: lower <= tau && tau <= upper,
        })
    }

    /// Minimal generator degrees up to `d − 1`, with multiplicity.
    pub fn generator_degrees(&mut self) -> Vec<u32> {
        let d = self.degree();
        let mut out = Vec::new();
        for t in 0..d {
            let n = self.module.new_generators(t);
            out.extend(std::iter::repeat_n(t, n));
        }
        out
    }

    pub fn freeness(&mut self) -> Freeness {
        if self.mdr() == 0 {
            return Freeness::ConcurrentLines;
        }
        let d = self.degree();
        let g = self.generator_degrees();
        match g.as_slice() {
            [d1, d2] if d1 + d2 == d - 1 => Freeness::Free { d1: *d1, d2: *d2 },
            [d1, d2, d3] if d2 == d3 && d1 + d2 == d => Freeness::NearlyFree { d1: *d1, d2: *d2 },
            _ => Freeness::Neither {
                generator_degrees: g,
                scanned_through: d - 1,
            },
        }
    }

    /// Exact basis of the degree-`t` syzygies.
    pub fn syzygies(&self, t: u32) -> Vec<SyzygyVec> {
        self.module
            .basis(t)
            .into_iter()
            .map(|p| SyzygyVec::from_array(p).expect("basis parts share a degree"))
            .collect()
    }

    pub fn report(&mut self) -> Result<JacobianReport, JacobianError> {
        let (tau, end) = self.tau_and_end()?;
        let r = self.mdr();
        let d = self.degree();
        let (dpw_lower, dpw_upper) = if r == 0 {
            (None, None)
        } else {
            let (l, u) = dpw_bounds(d, r);
            (Some(l), Some(u))
        };
        let freeness = self.freeness();
        let hilbert_table = (0..=end).map(|t| (t, self.hilbert(t) as u64)).collect();
        Ok(JacobianReport {
            d,
            r,
            tau: tau as u64,
            dpw_lower,
            dpw_upper,
            freeness,
            hilbert_table,
        })
    }
}

/// Basis of the degree-`t` syzygies of the partials of `f`.
pub fn syzygy_space(f: &HPoly, t: u32) -> Result<Vec<SyzygyVec>, JacobianError> {
    Ok(Jacobian::new(f)?.syzygies(t))
}

pub fn mdr(f: &HPoly) -> Result<u32, JacobianError> {
    Ok(Jacobian::new(f)?.mdr())
}

/// `dim (R / J_f)_t`.
pub fn hilbert_function(f: &HPoly, t: u32) -> Result<usize, JacobianError> {
    Ok(Jacobian::new(f)?.hilbert(t))
}

/// Global Tjurina number, read off as the stable value of the Hilbert
/// function. Concurrent lines return `(d−1)²` directly.
pub fn tjurina(f: &HPoly) -> Result<usize, JacobianError> {
    Jacobian::new(f)?.tjurina()
}

pub fn dpw_check(f: &HPoly) -> Result<DpwCheck, JacobianError> {
    Jacobian::new(f)?.dpw()
}

pub fn resolution_probe(f: &HPoly) -> Result<Freeness, JacobianError> {
    Ok(Jacobian::new(f)?.freeness())
}

pub fn analyze(f: &HPoly) -> Result<JacobianReport, JacobianError> {
    Jacobian::new(f)?.report()
}

/// Turns a syzygy `δ1` of `f1` into one of `f1·f2`:
/// `δ = f2·δ1 − (1/d)·δ1(f2)·(x, y, z)` with `d = deg f1 + deg f2`.
pub fn lift_syzygy(delta1: &SyzygyVec, f1: &HPoly, f2: &HPoly) -> Result<SyzygyVec, JacobianError> {
    if f2.degree() == 0 {
        return Err(JacobianError::ConstantFactor);
    }
    if !delta1.is_syzygy_of(f1) {
        return Err(JacobianError::InvalidSyzygy);
    }
    let d = f1.degree() + f2.degree();
    let k = delta1.derive(f2).scale(&Rational::new(1.into(), d.into()));
    let part = |p: &HPoly, v: Var| &p.mul(f2) - &k.mul(&HPoly::var(v));
    let out = SyzygyVec::new(
        part(&delta1.a, Var::X),
        part(&delta1.b, Var::Y),
        part(&delta1.c, Var::Z),
    )?;
    debug_assert!(out.is_syzygy_of(&f1.mul(f2)));
    Ok(out)
}

#[cfg(test)]
mod tests;
