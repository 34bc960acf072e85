//! Exact arithmetic for ternary forms over the rationals.
//!
//! [`HPoly`] is a sparse homogeneous polynomial in `x, y, z` carrying an
//! explicit degree tag, so the zero form still lives in a definite graded
//! piece. [`BinaryForm`] is the dense two-parameter form obtained by
//! restricting a ternary form to a parametrized line.

mod binary;
mod hpoly;

pub use binary::{binary_gcd_squarefree, BinaryForm, SquarefreeSplit};
pub use hpoly::HPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

/// Exact rational scalar. Always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Exponent triple `(i, j, k)` of the monomial `x^i y^j z^k`.
pub type Exponent = [u32; 3];

/// A representative of a projective point with rational coordinates.
pub type Point = [Rational; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("the all-zero triple is not a projective point")]
    ZeroPoint,
    #[error("points are proportional and do not span a line")]
    ProportionalPoints,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("the zero binary form has no roots to count")]
    ZeroForm,
    #[error("degree {got} is below the required minimum {min}")]
    DegreeTooLow { got: u32, min: u32 },
    #[error("exponent triple {0:?} does not sum to the degree {1}")]
    BadExponent(Exponent, u32),
}

/// The three coordinate variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Number of monomials of degree `deg` in three variables.
pub fn dim_forms(deg: u32) -> usize {
    let d = deg as usize;
    (d + 1) * (d + 2) / 2
}

/// Position of `x^i y^j z^k` inside the degree-`i+j+k` monomial basis.
///
/// The basis is ordered by decreasing power of `x`, then decreasing power of
/// `y`, so index 0 is `x^d` and the last index is `z^d`.
pub fn mono_index(e: Exponent) -> usize {
    let a = (e[1] + e[2]) as usize;
    a * (a + 1) / 2 + e[2] as usize
}

/// All exponents of degree `deg`, in [`mono_index`] order.
pub fn monomials(deg: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(dim_forms(deg));
    for a in 0..=deg {
        for k in 0..=a {
            out.push([deg - a, a - k, k]);
        }
    }
    out
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn point(c: [i64; 3]) -> Point {
    [rat(c[0]), rat(c[1]), rat(c[2])]
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q` (optionally signed) into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Least common multiple of the denominators of `qs` (1 for an empty list).
pub fn denominator_lcm<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Scales a rational vector to a primitive integer vector with the same span.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let l = denominator_lcm(v.iter());
    let ints: Vec<BigInt> = v
        .iter()
        .map(|q| (q * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|n| n / &g).collect()
}

/// True when `a` and `b` are nonzero and proportional.
pub fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(i) = a.iter().position(|q| !q.is_zero()) else {
        return false;
    };
    if b[i].is_zero() {
        return false;
    }
    let lambda = &b[i] / &a[i];
    a.iter().zip(b).all(|(p, q)| &(p * &lambda) == q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_index_is_a_bijection() {
        for deg in 0..8 {
            let ms = monomials(deg);
            assert_eq!(ms.len(), dim_forms(deg));
            for (i, e) in ms.iter().enumerate() {
                assert_eq!(mono_index(*e), i);
            }
        }
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "-3", "7/2", "-1/9"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        assert!(parse_rational("1/0").is_none());
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![ratio(1, 2), ratio(-3, 4), rat(0)];
        let p = primitive_integer_vector(&v);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
        assert!(proportional(&v, &[rat(2), rat(-3), rat(0)]));
        assert!(!proportional(&v, &[rat(2), rat(3), rat(0)]));
    }
}
