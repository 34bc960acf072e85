use super::{AlgebraError, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binary form in the parameters `s, t`.
///
/// `coefficients()[i]` is the coefficient of `s^(deg-i) t^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

/// Result of splitting off repeated roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeSplit {
    pub gcd_with_derivative: BinaryForm,
    pub squarefree_part: BinaryForm,
}

impl SquarefreeSplit {
    /// Number of distinct roots in the projective line.
    pub fn distinct_roots(&self) -> u32 {
        self.squarefree_part.degree()
    }
}

impl BinaryForm {
    /// Form of degree `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(BigInt::from(*c)))
                .collect(),
        )
    }

    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            coeffs: vec![Rational::zero(); degree as usize + 1],
        }
    }

    pub fn one() -> Self {
        BinaryForm {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), other.degree(), "binary form degree mismatch");
        BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    /// Partial derivative in `s`.
    pub fn d_s(&self) -> BinaryForm {
        let n = self.degree();
        if n == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm {
            coeffs: (0..n as usize)
                .map(|i| &self.coeffs[i] * Rational::from_integer(BigInt::from(n as usize - i)))
                .collect(),
        }
    }

    /// Partial derivative in `t`.
    pub fn d_t(&self) -> BinaryForm {
        let n = self.degree();
        if n == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm {
            coeffs: (1..=n as usize)
                .map(|i| &self.coeffs[i] * Rational::from_integer(BigInt::from(i)))
                .collect(),
        }
    }

    /// Dehomogenization at `s = 1`, trimmed, plus the multiplicity of the
    /// root `(0:1)` (the power of `s` dividing the form).
    fn affine(&self) -> (Vec<Rational>, u32) {
        let u = trim(self.coeffs.clone());
        let m = self.degree() + 1 - u.len() as u32;
        (u, m)
    }

    fn from_affine(u: &[Rational], s_mult: u32) -> BinaryForm {
        let deg = (u.len() as u32 - 1) + s_mult;
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        coeffs[..u.len()].clone_from_slice(u);
        BinaryForm { coeffs }
    }

    /// Divides by the last nonzero coefficient. The zero form is unchanged.
    pub fn monic(&self) -> BinaryForm {
        match self.coeffs.iter().rev().find(|c| !c.is_zero()) {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Greatest common divisor, normalized by [`BinaryForm::monic`].
    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (ua, ma) = self.affine();
        let (ub, mb) = other.affine();
        let h = univariate_gcd(ua, ub);
        BinaryForm::from_affine(&h, ma.min(mb))
    }

    /// Exact quotient, or `NotDivisible`.
    pub fn exact_divide(&self, g: &BinaryForm) -> Result<BinaryForm, AlgebraError> {
        if g.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return if self.degree() >= g.degree() {
                Ok(BinaryForm::zero(self.degree() - g.degree()))
            } else {
                Err(AlgebraError::NotDivisible)
            };
        }
        let (ua, ma) = self.affine();
        let (ub, mb) = g.affine();
        if ma < mb || self.degree() < g.degree() {
            return Err(AlgebraError::NotDivisible);
        }
        let (q, r) = univariate_divmod(&ua, &ub);
        if !r.is_empty() {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(BinaryForm::from_affine(&q, ma - mb))
    }
}

/// Splits `g` into `gcd(∂g/∂s, ∂g/∂t)` and the squarefree part `g / gcd`.
///
/// The squarefree part has one simple root for every distinct root of `g`
/// in the projective line, so its degree counts distinct roots over ℂ.
pub fn binary_gcd_squarefree(g: &BinaryForm) -> Result<SquarefreeSplit, AlgebraError> {
    if g.is_zero() {
        return Err(AlgebraError::ZeroForm);
    }
    let h = if g.degree() == 0 {
        BinaryForm::one()
    } else {
        g.d_s().gcd(&g.d_t())
    };
    let sq = g.exact_divide(&h)?.monic();
    Ok(SquarefreeSplit {
        gcd_with_derivative: h,
        squarefree_part: sq,
    })
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn is_zero_poly(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

// Polynomials in t, index = power. Remainder is returned trimmed, empty when 0.
fn univariate_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        let rem = if is_zero_poly(&r) { Vec::new() } else { r };
        return (vec![Rational::zero()], rem);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !is_zero_poly(&r) {
        let dr = r.len() - 1;
        if dr < db {
            break;
        }
        let c = &r[dr] / &lb;
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] -= &c * bi;
        }
        q[dr - db] = c;
        r.pop();
        r = trim(r);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    let rem = if is_zero_poly(&r) { Vec::new() } else { r };
    (trim(q), rem)
}

fn univariate_gcd(a: Vec<Rational>, b: Vec<Rational>) -> Vec<Rational> {
    let mut a = trim(a);
    let mut b = trim(b);
    while !is_zero_poly(&b) {
        let (_, r) = univariate_divmod(&a, &b);
        a = b;
        b = if r.is_empty() { vec![Rational::zero()] } else { r };
    }
    let lc = a.last().unwrap().clone();
    a.iter().map(|c| c / &lc).collect()
}
