use super::{AlgebraError, BinaryForm, Exponent, Point, Rational, Var};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Homogeneous polynomial in `x, y, z` with rational coefficients.
///
/// Every stored coefficient is nonzero and every exponent triple sums to
/// `degree`. The zero polynomial has no terms but still carries a degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HPoly {
    degree: u32,
    terms: BTreeMap<Exponent, Rational>,
}

impl HPoly {
    pub fn zero(degree: u32) -> Self {
        HPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    pub fn monomial(e: Exponent, c: Rational) -> Self {
        let mut p = Self::zero(e.iter().sum());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The linear form `a x + b y + c z`.
    pub fn linear(coeffs: [Rational; 3]) -> Self {
        let mut p = Self::zero(1);
        for (i, c) in coeffs.into_iter().enumerate() {
            let mut e = [0; 3];
            e[i] = 1;
            p.add_term(e, c);
        }
        p
    }

    /// Builds a form from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Exponent, Rational)>,
    ) -> Result<Self, AlgebraError> {
        let mut p = Self::zero(degree);
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(AlgebraError::BadExponent(e, degree));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Builds a form from a dense coefficient vector in `mono_index` order.
    pub fn from_coefficients(degree: u32, coeffs: &[Rational]) -> Self {
        let mut p = Self::zero(degree);
        for (e, c) in super::monomials(degree).into_iter().zip(coeffs) {
            p.add_term(e, c.clone());
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Dense coefficient vector in `mono_index` order.
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); super::dim_forms(self.degree)];
        for (e, c) in &self.terms {
            v[super::mono_index(*e)] = c.clone();
        }
        v
    }

    /// Leading term under lexicographic order (largest power of `x` first).
    pub fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn try_add(&self, other: &HPoly) -> Result<HPoly, AlgebraError> {
        if self.degree != other.degree {
            return Err(AlgebraError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &HPoly) -> Result<HPoly, AlgebraError> {
        if self.degree != other.degree {
            return Err(AlgebraError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> HPoly {
        if c.is_zero() {
            return HPoly::zero(self.degree);
        }
        HPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &HPoly) -> HPoly {
        let mut out = HPoly::zero(self.degree + other.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> HPoly {
        let mut acc = HPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Product of a list of forms; the empty product is `1`.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a HPoly>) -> HPoly {
        factors
            .into_iter()
            .fold(HPoly::one(), |acc, f| acc.mul(f))
    }

    /// Multiplies by the monomial `x^i y^j z^k`.
    pub fn shift(&self, e: Exponent) -> HPoly {
        HPoly {
            degree: self.degree + e.iter().sum::<u32>(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| ([a[0] + e[0], a[1] + e[1], a[2] + e[2]], c.clone()))
                .collect(),
        }
    }

    pub fn partial(&self, v: Var) -> HPoly {
        let i = v.index();
        let mut out = HPoly::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(BigInt::from(e[i])));
        }
        out
    }

    pub fn gradient(&self) -> [HPoly; 3] {
        [
            self.partial(Var::X),
            self.partial(Var::Y),
            self.partial(Var::Z),
        ]
    }

    pub fn evaluate(&self, p: &Point) -> Result<Rational, AlgebraError> {
        if p.iter().all(|c| c.is_zero()) {
            return Err(AlgebraError::ZeroPoint);
        }
        Ok(self.eval_unchecked(p))
    }

    pub(crate) fn eval_unchecked(&self, p: &Point) -> Rational {
        let pows: Vec<Vec<Rational>> = p
            .iter()
            .map(|c| {
                let mut v = vec![Rational::one()];
                for _ in 0..self.degree {
                    let next = v.last().unwrap() * c;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * &pows[0][e[0] as usize] * &pows[1][e[1] as usize] * &pows[2][e[2] as usize];
        }
        acc
    }

    /// `f(s·P + t·Q)` as a binary form of degree `deg f`.
    pub fn restrict_to_line(&self, p: &Point, q: &Point) -> Result<BinaryForm, AlgebraError> {
        if p.iter().all(|c| c.is_zero()) || q.iter().all(|c| c.is_zero()) {
            return Err(AlgebraError::ZeroPoint);
        }
        if super::proportional(p, q) {
            return Err(AlgebraError::ProportionalPoints);
        }
        let lines: Vec<BinaryForm> = (0..3)
            .map(|i| BinaryForm::new(vec![p[i].clone(), q[i].clone()]))
            .collect();
        let pows: Vec<Vec<BinaryForm>> = lines
            .iter()
            .map(|l| {
                let mut v = vec![BinaryForm::one()];
                for _ in 0..self.degree {
                    let next = v.last().unwrap().mul(l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = BinaryForm::zero(self.degree);
        for (e, c) in &self.terms {
            let term = pows[0][e[0] as usize]
                .mul(&pows[1][e[1] as usize])
                .mul(&pows[2][e[2] as usize])
                .scale(c);
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Exact quotient `self / g`, or `NotDivisible`.
    pub fn exact_divide(&self, g: &HPoly) -> Result<HPoly, AlgebraError> {
        if g.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if g.degree > self.degree {
            return Err(AlgebraError::NotDivisible);
        }
        let qdeg = self.degree - g.degree;
        let (lg, lc) = g.leading().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = HPoly::zero(qdeg);
        while let Some((le, lcr)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            if (0..3).any(|i| le[i] < lg[i]) {
                return Err(AlgebraError::NotDivisible);
            }
            let qe = [le[0] - lg[0], le[1] - lg[1], le[2] - lg[2]];
            let qc = lcr / &lc;
            for (e, c) in &g.terms {
                rem.add_term([e[0] + qe[0], e[1] + qe[1], e[2] + qe[2]], -(c * &qc));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Determinant of the matrix of second partials, of degree `3(d-2)`.
    pub fn hessian_det(&self) -> Result<HPoly, AlgebraError> {
        if self.degree < 2 {
            return Err(AlgebraError::DegreeTooLow {
                got: self.degree,
                min: 2,
            });
        }
        let g = self.gradient();
        let h: Vec<Vec<HPoly>> = g
            .iter()
            .map(|gi| Var::ALL.iter().map(|v| gi.partial(*v)).collect())
            .collect();
        let minor = |a: usize, b: usize, c: usize, d: usize| h[1][a].mul(&h[2][b]) - h[1][c].mul(&h[2][d]);
        let det = h[0][0].mul(&minor(1, 2, 2, 1)) - h[0][1].mul(&minor(0, 2, 2, 0))
            + h[0][2].mul(&minor(0, 1, 1, 0));
        Ok(det)
    }

    /// `f(A·(x, y, z))`: each variable is replaced by the matching row of `a`.
    pub fn substitute_linear(&self, a: &[[Rational; 3]; 3]) -> HPoly {
        let images: Vec<HPoly> = a.iter().map(|row| HPoly::linear(row.clone())).collect();
        let pows: Vec<Vec<HPoly>> = images
            .iter()
            .map(|l| {
                let mut v = vec![HPoly::one()];
                for _ in 0..self.degree {
                    let next = v.last().unwrap().mul(l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = HPoly::zero(self.degree);
        for (e, c) in &self.terms {
            let term = pows[0][e[0] as usize]
                .mul(&pows[1][e[1] as usize])
                .mul(&pows[2][e[2] as usize])
                .scale(c);
            acc = acc + term;
        }
        acc
    }

    /// Variables that occur with a positive exponent in some term.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|e| e[v.index()] > 0))
            .collect()
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        super::denominator_lcm(self.terms.values())
    }

    /// Normalizes so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> HPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// True if `self = λ·other` for some nonzero λ.
    pub fn is_proportional_to(&self, other: &HPoly) -> bool {
        self.degree == other.degree
            && !self.is_zero()
            && !other.is_zero()
            && self.monic() == other.monic()
    }

    fn fmt_canonical(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|k| *k == 0);
            if !a.is_one() || is_const {
                factors.push(super::format_rational(&a));
            }
            for v in Var::ALL {
                match e[v.index()] {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    k => factors.push(format!("{}^{}", v.name(), k)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_canonical(f)
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly[{}]({})", self.degree, self)
    }
}

// The operator forms panic on a degree mismatch; use `try_add`/`try_sub`
// when the degrees are not known to agree.
impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        self.try_add(rhs).expect("HPoly addition")
    }
}

impl Add for HPoly {
    type Output = HPoly;
    fn add(self, rhs: HPoly) -> HPoly {
        &self + &rhs
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        self.try_sub(rhs).expect("HPoly subtraction")
    }
}

impl Sub for HPoly {
    type Output = HPoly;
    fn sub(self, rhs: HPoly) -> HPoly {
        &self - &rhs
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        HPoly::mul(self, rhs)
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{point, rat};

    fn x() -> HPoly {
        HPoly::x()
    }
    fn y() -> HPoly {
        HPoly::y()
    }
    fn z() -> HPoly {
        HPoly::z()
    }
    fn c(n: i64) -> HPoly {
        HPoly::constant(rat(n))
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p, &x().pow(2) - &y().pow(2));
    }

    #[test]
    fn cancellation_keeps_degree_tag() {
        let p = x().pow(2);
        let s = p.try_add(&-&p).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.degree(), 2);
        assert_eq!(
            x().try_add(&y().pow(2)),
            Err(AlgebraError::DegreeMismatch(1, 2))
        );
    }

    #[test]
    fn product_of_bitangent_conics() {
        let a = &(&x() * &z()) + &y().pow(2);
        let b = &(&x() * &z()) + &(&c(2) * &y().pow(2));
        let want = &(&(&x().pow(2) * &z().pow(2)) + &(&c(3) * &(&x() * &(&y().pow(2) * &z()))))
            + &(&c(2) * &y().pow(4));
        assert_eq!(&a * &b, want);
        assert_eq!((&a * &b).exact_divide(&a).unwrap(), b);
    }

    #[test]
    fn partials_of_cuspidal_quintic() {
        let f = &(&y().pow(4) * &z()) + &x().pow(5);
        assert_eq!(f.partial(Var::Z), y().pow(4));
        assert_eq!(f.partial(Var::X), &c(5) * &x().pow(4));
        let cube = x().pow(3).partial(Var::Y);
        assert!(cube.is_zero());
        assert_eq!(cube.degree(), 2);
        let k = c(7).partial(Var::X);
        assert!(k.is_zero());
        assert_eq!(k.degree(), 0);
    }

    #[test]
    fn evaluation() {
        let q = &(&x().pow(2) + &y().pow(2)) + &z().pow(2);
        assert_eq!(q.evaluate(&point([1, 1, 1])).unwrap(), rat(3));
        let conic = &(&x() * &z()) - &y().pow(2);
        assert_eq!(conic.evaluate(&point([1, 1, 1])).unwrap(), rat(0));
        let f = &(&y().pow(4) * &z()) + &x().pow(5);
        assert_eq!(
            f.partial(Var::X).evaluate(&point([0, 1, 1])).unwrap(),
            rat(0)
        );
        assert_eq!(q.evaluate(&point([0, 0, 0])), Err(AlgebraError::ZeroPoint));
    }

    #[test]
    fn line_restrictions() {
        let p = point([1, 0, 0]);
        let q = point([0, 1, 0]);
        let r = (&x().pow(2) + &y().pow(2)).restrict_to_line(&p, &q).unwrap();
        assert_eq!(r.coefficients(), &[rat(1), rat(0), rat(1)]);
        let r = (&x() * &z())
            .restrict_to_line(&p, &point([0, 0, 1]))
            .unwrap();
        assert_eq!(r.coefficients(), &[rat(0), rat(1), rat(0)]);
        let r = (&y().pow(4) * &z()).restrict_to_line(&p, &q).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.degree(), 5);
        assert_eq!(
            x().restrict_to_line(&p, &point([2, 0, 0])),
            Err(AlgebraError::ProportionalPoints)
        );
    }

    #[test]
    fn exact_division() {
        let num = &x().pow(2) - &y().pow(2);
        assert_eq!(num.exact_divide(&(&x() + &y())).unwrap(), &x() - &y());
        assert_eq!(x().pow(2).exact_divide(&y()), Err(AlgebraError::NotDivisible));
        assert_eq!(
            x().exact_divide(&HPoly::zero(1)),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn hessians() {
        let fermat = &(&x().pow(3) + &y().pow(3)) + &z().pow(3);
        assert_eq!(
            fermat.hessian_det().unwrap(),
            &c(216) * &(&x() * &(&y() * &z()))
        );
        let xyz = &x() * &(&y() * &z());
        assert_eq!(xyz.hessian_det().unwrap(), &c(2) * &xyz);
        let q = &(&x().pow(2) + &y().pow(2)) + &z().pow(2);
        assert_eq!(q.hessian_det().unwrap(), c(8));
        assert!(x().hessian_det().is_err());
    }

    #[test]
    fn canonical_printing() {
        let f = &(&c(3) * &(&x().pow(2) * &y())) - &HPoly::monomial([0, 0, 3], crate::algebra::ratio(1, 2));
        assert_eq!(f.to_string(), "3*x^2*y - 1/2*z^3");
        assert_eq!(HPoly::zero(4).to_string(), "0");
        assert_eq!((-&x()).to_string(), "-x");
        assert_eq!(c(5).to_string(), "5");
    }

    #[test]
    fn linear_substitution() {
        // swap x and z
        let a = [
            [rat(0), rat(0), rat(1)],
            [rat(0), rat(1), rat(0)],
            [rat(1), rat(0), rat(0)],
        ];
        let f = &(&x().pow(2) * &y()) + &z().pow(3);
        assert_eq!(f.substitute_linear(&a), &(&z().pow(2) * &y()) + &x().pow(3));
    }
}
