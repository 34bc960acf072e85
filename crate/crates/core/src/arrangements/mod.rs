//! Conic-line arrangements with one linear Jacobian syzygy.
//!
//! The nine families are built from a pencil of conics plus lines:
//!
//! | tag   | normal form                          |
//! |-------|--------------------------------------|
//! | `L`   | `z·∏(a_i x + b_i y)`                 |
//! | `C1`  | `∏(x² + a_i(xz + y²))`               |
//! | `CL1` | `x·∏(x² + a_i(xz + y²))`             |
//! | `CL2` | `x·∏(xz + a_i y²)`                   |
//! | `CL3` | `xz·∏(xz + a_i y²)`                  |
//! | `CL4` | `xy·∏(xz + a_i y²)`                  |
//! | `CL5` | `xyz·∏(xz + a_i y²)`                 |
//! | `C2`  | `∏(xz + a_i y²)`                     |
//! | `CL6` | `y·∏(xz + a_i y²)`                   |
//!
//! Recognition never normalizes coordinates. Pencils are detected by rank
//! and by the Tjurina number of conic pairs, lines by whether the pencil
//! contains a multiple of them.

mod sample;

pub use sample::{
    perturb_off_pencil, random_arrangement, random_coordinate_change, random_line, random_params,
    random_smooth_conic, sample_instance, to_rational_matrix, trial_rng, Instance,
};

use crate::algebra::{rat, HPoly, Rational};
use crate::exactla::{self, QMat};
use crate::jacobian::{tjurina, JacobianError};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyTag {
    L,
    C1,
    C2,
    CL1,
    CL2,
    CL3,
    CL4,
    CL5,
    CL6,
    /// No family matched. Printed as `None`.
    #[serde(rename = "None")]
    Unrecognized,
}

impl FamilyTag {
    /// The nine families, in the order they are usually listed.
    pub const FAMILIES: [FamilyTag; 9] = [
        FamilyTag::L,
        FamilyTag::C1,
        FamilyTag::CL1,
        FamilyTag::CL2,
        FamilyTag::CL3,
        FamilyTag::CL4,
        FamilyTag::CL5,
        FamilyTag::C2,
        FamilyTag::CL6,
    ];

    /// Families whose Tjurina number is `d² − 3d + 3`.
    pub const MAX_TAU: [FamilyTag; 7] = [
        FamilyTag::L,
        FamilyTag::C1,
        FamilyTag::CL1,
        FamilyTag::CL2,
        FamilyTag::CL3,
        FamilyTag::CL4,
        FamilyTag::CL5,
    ];

    /// Families whose Tjurina number is `d² − 3d + 2`.
    pub const MIN_TAU: [FamilyTag; 2] = [FamilyTag::C2, FamilyTag::CL6];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::L => "L",
            FamilyTag::C1 => "C1",
            FamilyTag::C2 => "C2",
            FamilyTag::CL1 => "CL1",
            FamilyTag::CL2 => "CL2",
            FamilyTag::CL3 => "CL3",
            FamilyTag::CL4 => "CL4",
            FamilyTag::CL5 => "CL5",
            FamilyTag::CL6 => "CL6",
            FamilyTag::Unrecognized => "None",
        }
    }

    /// Lines added to the conics, as exponent vectors of `x, y, z`.
    fn extra_lines(self) -> &'static [usize] {
        match self {
            FamilyTag::CL1 | FamilyTag::CL2 => &[0],
            FamilyTag::CL3 => &[0, 2],
            FamilyTag::CL4 => &[0, 1],
            FamilyTag::CL5 => &[0, 1, 2],
            FamilyTag::CL6 => &[1],
            _ => &[],
        }
    }

    fn hyperosculating(self) -> bool {
        matches!(self, FamilyTag::C1 | FamilyTag::CL1)
    }

    /// Curve degree for `m` parameters (lines through the point for `L`,
    /// conics otherwise).
    pub fn degree_for(self, m: usize) -> u32 {
        match self {
            FamilyTag::L => m as u32 + 1,
            FamilyTag::Unrecognized => 0,
            t => 2 * m as u32 + t.extra_lines().len() as u32,
        }
    }

    /// Parameter counts `m` whose curve degree lies in `lo..=hi`, with the
    /// family's own minimum (2 lines or 2 conics).
    pub fn counts_for_degrees(self, lo: u32, hi: u32) -> Vec<usize> {
        (2..=hi as usize)
            .filter(|&m| (lo..=hi).contains(&self.degree_for(m)))
            .collect()
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = ArrangementError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        FamilyTag::FAMILIES
            .iter()
            .copied()
            .chain([FamilyTag::Unrecognized])
            .find(|t| t.name().to_ascii_uppercase() == up)
            .ok_or_else(|| ArrangementError::UnknownTag(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("unknown family tag {0:?}")]
    UnknownTag(String),
    #[error("parameter {0} is zero")]
    ZeroParameter(String),
    #[error("parameters {0} and {1} coincide")]
    DuplicateParameters(String, String),
    #[error("{family} needs at least {min} {what}, got {got}")]
    TooFew {
        family: FamilyTag,
        min: usize,
        got: usize,
        what: &'static str,
    },
    #[error("line parameters come in (a, b) pairs; got {0} numbers")]
    OddSlopeList(usize),
    #[error("invalid curve: {0}")]
    Invalid(#[from] Diagnostic),
    #[error("component {index} has degree {degree}; only lines and conics are recognized")]
    HighDegree { index: usize, degree: u32 },
    #[error("need at least two conics, got {0}")]
    TooFewConics(usize),
    #[error("the conics are proportional")]
    ProportionalConics,
    #[error("a line role needs a bitangent or hyperosculating pencil")]
    NoPencil,
    #[error("the line is the zero form")]
    ZeroLine,
    #[error(transparent)]
    Jacobian(#[from] JacobianError),
}

/// Why a list of components does not describe a reduced curve.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "kind")]
pub enum Diagnostic {
    #[error("the curve has no components")]
    Empty,
    #[error("component {index} is the zero form")]
    ZeroComponent { index: usize },
    #[error("component {index} is a nonzero constant")]
    ConstantComponent { index: usize },
    #[error("components {first} and {second} are proportional")]
    DuplicateComponents { first: usize, second: usize },
    #[error("component {index} is a degenerate conic (rank {rank})")]
    DegenerateConic { index: usize, rank: usize },
}

/// A plane curve given by its components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInput {
    components: Vec<HPoly>,
    product: HPoly,
}

impl CurveInput {
    pub fn new(components: Vec<HPoly>) -> Self {
        let product = HPoly::product(&components);
        CurveInput {
            components,
            product,
        }
    }

    pub fn components(&self) -> &[HPoly] {
        &self.components
    }

    pub fn product(&self) -> &HPoly {
        &self.product
    }

    pub fn degree(&self) -> u32 {
        self.product.degree()
    }

    pub fn lines(&self) -> impl Iterator<Item = &HPoly> {
        self.components.iter().filter(|c| c.degree() == 1)
    }

    pub fn conics(&self) -> impl Iterator<Item = &HPoly> {
        self.components.iter().filter(|c| c.degree() == 2)
    }

    /// Applies `x ↦ A[0]·X, y ↦ A[1]·X, z ↦ A[2]·X` to every component.
    pub fn transform(&self, a: &[[Rational; 3]; 3]) -> CurveInput {
        CurveInput::new(self.components.iter().map(|c| c.substitute_linear(a)).collect())
    }
}

/// Symmetric matrix of a quadratic form (its Hessian).
pub fn conic_matrix(q: &HPoly) -> QMat {
    let g = q.gradient();
    let mut m = QMat::zeros(3, 3);
    for (i, gi) in g.iter().enumerate() {
        for (j, v) in crate::algebra::Var::ALL.iter().enumerate() {
            m.set(i, j, gi.partial(*v).coeff(&[0, 0, 0]));
        }
    }
    m
}

pub fn conic_rank(q: &HPoly) -> usize {
    exactla::rank(&conic_matrix(q))
}

/// Checks that the components define a reduced curve.
///
/// Double lines (rank-1 conics) are always rejected. Line pairs (rank-2
/// conics) are rejected only when `smooth_conics` is set, as family
/// recognition requires.
pub fn validate(c: &CurveInput, smooth_conics: bool) -> Result<(), Diagnostic> {
    let comps = c.components();
    if comps.is_empty() {
        return Err(Diagnostic::Empty);
    }
    for (i, f) in comps.iter().enumerate() {
        if f.is_zero() {
            return Err(Diagnostic::ZeroComponent { index: i });
        }
        if f.degree() == 0 {
            return Err(Diagnostic::ConstantComponent { index: i });
        }
    }
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            if comps[i].is_proportional_to(&comps[j]) {
                return Err(Diagnostic::DuplicateComponents {
                    first: i,
                    second: j,
                });
            }
        }
    }
    for (i, f) in comps.iter().enumerate() {
        if f.degree() == 2 {
            let rank = conic_rank(f);
            if rank == 1 || (smooth_conics && rank < 3) {
                return Err(Diagnostic::DegenerateConic { index: i, rank });
            }
        }
    }
    Ok(())
}

/// Builds a family member in normal form.
///
/// For `L` the parameters are flattened pairs `(a_1, b_1, a_2, b_2, …)`,
/// one line `a_i x + b_i y` each; the pairs must be pairwise
/// non-proportional. For the conic families they are the `a_i`, distinct
/// and nonzero.
pub fn generate_family(tag: FamilyTag, params: &[Rational]) -> Result<CurveInput, ArrangementError> {
    let fmt = crate::algebra::format_rational;
    match tag {
        FamilyTag::Unrecognized => Err(ArrangementError::UnknownTag("None".into())),
        FamilyTag::L => {
            if params.len() % 2 != 0 {
                return Err(ArrangementError::OddSlopeList(params.len()));
            }
            let pairs: Vec<&[Rational]> = params.chunks(2).collect();
            if pairs.len() < 2 {
                return Err(ArrangementError::TooFew {
                    family: tag,
                    min: 2,
                    got: pairs.len(),
                    what: "lines through the point",
                });
            }
            let show = |p: &[Rational]| format!("({}, {})", fmt(&p[0]), fmt(&p[1]));
            for (i, p) in pairs.iter().enumerate() {
                if p[0].is_zero() && p[1].is_zero() {
                    return Err(ArrangementError::ZeroParameter(show(p)));
                }
                for q in &pairs[..i] {
                    if &p[0] * &q[1] == &p[1] * &q[0] {
                        return Err(ArrangementError::DuplicateParameters(show(q), show(p)));
                    }
                }
            }
            let mut comps = vec![HPoly::z()];
            comps.extend(
                pairs
                    .iter()
                    .map(|p| HPoly::linear([p[0].clone(), p[1].clone(), Rational::zero()])),
            );
            Ok(CurveInput::new(comps))
        }
        _ => {
            if params.len() < 2 {
                return Err(ArrangementError::TooFew {
                    family: tag,
                    min: 2,
                    got: params.len(),
                    what: "conics",
                });
            }
            for (i, a) in params.iter().enumerate() {
                if a.is_zero() {
                    return Err(ArrangementError::ZeroParameter(fmt(a)));
                }
                if params[..i].contains(a) {
                    return Err(ArrangementError::DuplicateParameters(fmt(a), fmt(a)));
                }
            }
            let xz_y2 = &HPoly::monomial([1, 0, 1], Rational::one()) + &HPoly::y().pow(2);
            let mut comps: Vec<HPoly> = tag
                .extra_lines()
                .iter()
                .map(|&v| HPoly::var(crate::algebra::Var::ALL[v]))
                .collect();
            for a in params {
                comps.push(if tag.hyperosculating() {
                    &HPoly::x().pow(2) + &xz_y2.scale(a)
                } else {
                    &HPoly::monomial([1, 0, 1], Rational::one()) + &HPoly::y().pow(2).scale(a)
                });
            }
            Ok(CurveInput::new(comps))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairClass {
    Tacnodal,
    Hyperosculating,
    Other,
}

/// Classifies two smooth conics by the Tjurina number of their union:
/// two tacnodes give 6, a single `A7` point gives 7.
pub fn pair_class(c1: &HPoly, c2: &HPoly) -> Result<PairClass, ArrangementError> {
    if c1.is_proportional_to(c2) {
        return Err(ArrangementError::ProportionalConics);
    }
    Ok(match tjurina(&c1.mul(c2))? {
        6 => PairClass::Tacnodal,
        7 => PairClass::Hyperosculating,
        _ => PairClass::Other,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PencilKind {
    Bitangent,
    Hyperosculating,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilClass {
    pub kind: PencilKind,
    /// Two members spanning the pencil, for the two named kinds.
    pub basis: Option<[HPoly; 2]>,
}

fn coefficient_rank(forms: &[&HPoly]) -> usize {
    let len = forms.first().map_or(0, |f| crate::algebra::dim_forms(f.degree()));
    let vs: Vec<Vec<Rational>> = forms.iter().map(|f| f.coefficients()).collect();
    exactla::rank_of_vectors(len, &vs).expect("forms share a degree")
}

/// Decides whether the conics lie in one bitangent or hyperosculating
/// pencil.
pub fn detect_pencil(conics: &[HPoly]) -> Result<PencilClass, ArrangementError> {
    if conics.len() < 2 {
        return Err(ArrangementError::TooFewConics(conics.len()));
    }
    let other = PencilClass {
        kind: PencilKind::Other,
        basis: None,
    };
    let refs: Vec<&HPoly> = conics.iter().collect();
    if coefficient_rank(&refs) != 2 {
        return Ok(other);
    }
    let mut shared = None;
    for i in 0..conics.len() {
        for j in i + 1..conics.len() {
            let c = pair_class(&conics[i], &conics[j])?;
            if c == PairClass::Other || shared.is_some_and(|s| s != c) {
                return Ok(other);
            }
            shared = Some(c);
        }
    }
    let kind = match shared {
        Some(PairClass::Tacnodal) => PencilKind::Bitangent,
        Some(PairClass::Hyperosculating) => PencilKind::Hyperosculating,
        _ => return Ok(other),
    };
    Ok(PencilClass {
        kind,
        basis: Some([conics[0].clone(), conics[1].clone()]),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LineRole {
    TangentLine,
    BaseLine,
    Generic,
}

/// Role of a line with respect to a pencil.
///
/// In a bitangent pencil the singular members are the pair of tangent
/// lines at the base points and the doubled line through them, so `l` is a
/// base line when `l²` is a member and a tangent line when some other
/// product `l·l′` is. A hyperosculating pencil has one singular member, the
/// doubled tangent line at its base point, so there `l²` being a member
/// makes `l` the tangent line.
pub fn line_role(l: &HPoly, pencil: &PencilClass) -> Result<LineRole, ArrangementError> {
    let Some([q1, q2]) = &pencil.basis else {
        return Err(ArrangementError::NoPencil);
    };
    if pencil.kind == PencilKind::Other {
        return Err(ArrangementError::NoPencil);
    }
    if l.is_zero() {
        return Err(ArrangementError::ZeroLine);
    }
    let square = l.pow(2);
    if coefficient_rank(&[q1, q2, &square]) == 2 {
        return Ok(match pencil.kind {
            PencilKind::Hyperosculating => LineRole::TangentLine,
            _ => LineRole::BaseLine,
        });
    }
    let multiples: Vec<HPoly> = crate::algebra::Var::ALL
        .iter()
        .map(|v| l.mul(&HPoly::var(*v)))
        .collect();
    if coefficient_rank(&[q1, q2, &multiples[0], &multiples[1], &multiples[2]]) < 5 {
        return Ok(LineRole::TangentLine);
    }
    Ok(LineRole::Generic)
}

/// Projective point as a primitive integer vector with positive leading
/// entry, usable as a map key.
fn point_key(p: &[Rational; 3]) -> Vec<num_bigint::BigInt> {
    let mut v = crate::algebra::primitive_integer_vector(p);
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if first < &num_bigint::BigInt::zero() {
            v = v.into_iter().map(|c| -c).collect();
        }
    }
    v
}

fn line_vector(l: &HPoly) -> [Rational; 3] {
    [
        l.coeff(&[1, 0, 0]),
        l.coeff(&[0, 1, 0]),
        l.coeff(&[0, 0, 1]),
    ]
}

pub(crate) fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// A point lying on exactly `d − 1` of the `d ≥ 3` lines, if any.
pub fn concurrency_point(lines: &[HPoly]) -> Option<[Rational; 3]> {
    let d = lines.len();
    if d < 3 {
        return None;
    }
    let vs: Vec<[Rational; 3]> = lines.iter().map(line_vector).collect();
    let mut seen: BTreeMap<Vec<num_bigint::BigInt>, [Rational; 3]> = BTreeMap::new();
    for i in 0..d {
        for j in i + 1..d {
            let p = cross(&vs[i], &vs[j]);
            seen.entry(point_key(&p)).or_insert(p);
        }
    }
    seen.into_values().find(|p| {
        let on = vs
            .iter()
            .filter(|v| (&v[0] * &p[0] + &v[1] * &p[1] + &v[2] * &p[2]).is_zero())
            .count();
        on == d - 1
    })
}

/// Names the family of a conic-line arrangement, or `Unrecognized`.
pub fn recognize(c: &CurveInput) -> Result<FamilyTag, ArrangementError> {
    for (index, f) in c.components().iter().enumerate() {
        if f.degree() > 2 {
            return Err(ArrangementError::HighDegree {
                index,
                degree: f.degree(),
            });
        }
    }
    validate(c, true)?;
    let lines: Vec<HPoly> = c.lines().cloned().collect();
    let conics: Vec<HPoly> = c.conics().cloned().collect();
    if conics.is_empty() {
        return Ok(if concurrency_point(&lines).is_some() {
            FamilyTag::L
        } else {
            FamilyTag::Unrecognized
        });
    }
    if conics.len() < 2 {
        return Ok(FamilyTag::Unrecognized);
    }
    let pencil = detect_pencil(&conics)?;
    if pencil.kind == PencilKind::Other {
        return Ok(FamilyTag::Unrecognized);
    }
    let (mut tangent, mut base) = (0, 0);
    for l in &lines {
        match line_role(l, &pencil)? {
            LineRole::TangentLine => tangent += 1,
            LineRole::BaseLine => base += 1,
            LineRole::Generic => return Ok(FamilyTag::Unrecognized),
        }
    }
    Ok(match (pencil.kind, tangent, base) {
        (PencilKind::Hyperosculating, 0, 0) => FamilyTag::C1,
        (PencilKind::Hyperosculating, 1, 0) => FamilyTag::CL1,
        (PencilKind::Bitangent, 0, 0) => FamilyTag::C2,
        (PencilKind::Bitangent, 1, 0) => FamilyTag::CL2,
        (PencilKind::Bitangent, 2, 0) => FamilyTag::CL3,
        (PencilKind::Bitangent, 1, 1) => FamilyTag::CL4,
        (PencilKind::Bitangent, 2, 1) => FamilyTag::CL5,
        (PencilKind::Bitangent, 0, 1) => FamilyTag::CL6,
        _ => FamilyTag::Unrecognized,
    })
}

/// Integer parameters as rationals.
pub fn int_params(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|a| rat(*a)).collect()
}

#[cfg(test)]
mod tests;
