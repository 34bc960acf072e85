//! Graded pieces of the syzygy module of three forms of one degree.
//!
//! For forms `(g1, g2, g3)` of degree `D`, the piece of degree `s` is the
//! kernel of `(R_s)^3 → R_{s+D}`, `(a, b, c) ↦ a g1 + b g2 + c g3`.
//!
//! Dimensions are proved with two bounds. Monomial multiples of known
//! exact syzygies give a lower bound (their rank modulo a prime). The map
//! itself gives an upper bound (`3·dim R_s` minus its rank modulo a prime).
//! When the bounds meet the dimension is exact. When they do not, the
//! missing syzygies are lifted from modular kernels, checked exactly, and
//! kept as generators for all higher degrees.

use crate::algebra::{dim_forms, mono_index, monomials, Exponent, HPoly, Rational};
use crate::exactla::{
    bareiss,
    modular::{lift_kernel, Echelon, IntMatrix, Modulus, PrimeStream},
    int_rank,
};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

type IntForm = Vec<(Exponent, BigInt)>;

#[derive(Clone, Debug)]
struct Generator {
    degree: u32,
    parts: [IntForm; 3],
}

const CHECK_PRIMES: usize = 3;
const LIFT_PRIMES: usize = 2000;

/// Memoized syzygy computations for one triple of forms.
#[derive(Clone, Debug)]
pub struct SyzygyModule {
    forms: [IntForm; 3],
    deg: u32,
    all_zero: bool,
    gens: Vec<Generator>,
    certified: Option<u32>,
    dims: BTreeMap<u32, usize>,
    fresh: BTreeMap<u32, usize>,
}

fn shift_exp(a: &Exponent, b: &Exponent) -> Exponent {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn int_form(p: &HPoly, scale: &BigInt) -> IntForm {
    let s = Rational::from_integer(scale.clone());
    p.terms()
        .map(|(e, c)| (*e, (c * &s).to_integer()))
        .collect()
}

impl SyzygyModule {
    /// Panics if the forms do not share one degree tag.
    pub fn new(forms: &[HPoly; 3]) -> Self {
        let deg = forms[0].degree();
        assert!(
            forms.iter().all(|f| f.degree() == deg),
            "syzygy forms must share one degree"
        );
        let l = crate::algebra::denominator_lcm(
            forms
                .iter()
                .flat_map(|f| f.terms().map(|(_, c)| c))
                .collect::<Vec<_>>(),
        );
        let ints = [
            int_form(&forms[0], &l),
            int_form(&forms[1], &l),
            int_form(&forms[2], &l),
        ];
        let all_zero = ints.iter().all(|f| f.is_empty());
        let mut m = SyzygyModule {
            forms: ints,
            deg,
            all_zero,
            gens: Vec::new(),
            certified: None,
            dims: BTreeMap::new(),
            fresh: BTreeMap::new(),
        };
        // Koszul relations are exact syzygies of degree D.
        let neg = |f: &IntForm| -> IntForm { f.iter().map(|(e, c)| (*e, -c)).collect() };
        let koszul = [
            [m.forms[1].clone(), neg(&m.forms[0]), Vec::new()],
            [m.forms[2].clone(), Vec::new(), neg(&m.forms[0])],
            [Vec::new(), m.forms[2].clone(), neg(&m.forms[1])],
        ];
        for parts in koszul {
            if parts.iter().any(|p| !p.is_empty()) {
                m.gens.push(Generator { degree: deg, parts });
            }
        }
        m
    }

    /// Degree of the three forms.
    pub fn form_degree(&self) -> u32 {
        self.deg
    }

    /// Exact dimension of the degree-`s` piece.
    pub fn dim(&mut self, s: u32) -> usize {
        if self.all_zero {
            return 3 * dim_forms(s);
        }
        if let Some(d) = self.dims.get(&s) {
            return *d;
        }
        let mut primes = PrimeStream::default();
        let m = primes.next_prime();
        if let Some(d) = self.check(s, s, m) {
            self.dims.insert(s, d);
            return d;
        }
        self.certify_through(s);
        self.dims[&s]
    }

    /// Number of minimal generators in degree `s`: the dimension of the
    /// degree-`s` piece minus that of `R_1` times the degree-`s−1` piece.
    pub fn new_generators(&mut self, s: u32) -> usize {
        if self.all_zero {
            return if s == 0 { 3 } else { 0 };
        }
        self.certify_through(s);
        if let Some(n) = self.fresh.get(&s) {
            return *n;
        }
        let dim = self.dims[&s];
        let below = self.candidate_matrix(s, |g| g.degree < s);
        let n = dim - int_rank(&below);
        self.fresh.insert(s, n);
        n
    }

    /// `dim (R / (g1, g2, g3))_t`.
    pub fn hilbert(&mut self, t: u32) -> usize {
        if t < self.deg {
            return dim_forms(t);
        }
        let s = t - self.deg;
        let rank = 3 * dim_forms(s) - self.dim(s);
        dim_forms(t) - rank
    }

    /// Exact syzygies known so far with degree at most `s`, certified to
    /// generate every degree up to `s`.
    pub fn generators_through(&mut self, s: u32) -> Vec<[HPoly; 3]> {
        self.certify_through(s);
        self.gens
            .iter()
            .filter(|g| g.degree <= s)
            .map(|g| {
                let mk = |p: &IntForm| {
                    HPoly::from_terms(
                        g.degree,
                        p.iter().map(|(e, c)| (*e, Rational::from_integer(c.clone()))),
                    )
                    .expect("generator terms have the generator degree")
                };
                [mk(&g.parts[0]), mk(&g.parts[1]), mk(&g.parts[2])]
            })
            .collect()
    }

    /// Exact basis of the degree-`s` piece, read off the kernel of the map.
    pub fn basis(&self, s: u32) -> Vec<[HPoly; 3]> {
        let k = dim_forms(s);
        crate::exactla::int_kernel(&self.map_matrix(s))
            .into_iter()
            .map(|v| {
                [
                    HPoly::from_coefficients(s, &v[..k]),
                    HPoly::from_coefficients(s, &v[k..2 * k]),
                    HPoly::from_coefficients(s, &v[2 * k..]),
                ]
            })
            .collect()
    }

    fn certify_through(&mut self, s: u32) {
        if self.all_zero {
            return;
        }
        let start = self.certified.map_or(0, |c| c + 1);
        for k in start..=s {
            self.certify(k);
        }
    }

    fn certify(&mut self, s: u32) {
        let mut primes = PrimeStream::default();
        let checks: Vec<Modulus> = (0..CHECK_PRIMES).map(|_| primes.next_prime()).collect();
        let mut dim = self.check(s, s, checks[0]);
        if dim.is_none() {
            let mat = self.map_matrix(s);
            let n = mat.ncols();
            let gens = self.gens.clone();
            let lifted = lift_kernel(&mat, &mut primes, LIFT_PRIMES, &mut |mk| {
                let mut e = Echelon::new(n, mk.modulus);
                for g in gens.iter().filter(|g| g.degree <= s) {
                    for v in candidate_vectors_mod(g, s, &mk.modulus) {
                        e.insert(v);
                    }
                }
                mk.free
                    .iter()
                    .copied()
                    .filter(|&j| e.insert(mk.vector(j, n)))
                    .collect()
            });
            if let Some(k) = lifted {
                for v in &k.vectors {
                    self.push_vector(s, v);
                }
                dim = checks.iter().find_map(|m| self.check(s, s, *m));
            }
            if dim.is_none() {
                let kernel = bareiss::kernel(mat.dense(), n);
                for v in &kernel {
                    self.push_vector(s, v);
                }
                dim = Some(kernel.len());
            }
        }
        self.dims.insert(s, dim.expect("dimension settled"));
        self.certified = Some(s);
    }

    fn push_vector(&mut self, s: u32, v: &[Rational]) {
        let ints = crate::algebra::primitive_integer_vector(v);
        let ms = monomials(s);
        let k = ms.len();
        let mut parts: [IntForm; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for (block, part) in parts.iter_mut().enumerate() {
            for (i, e) in ms.iter().enumerate() {
                let c = &ints[block * k + i];
                if !c.is_zero() {
                    part.push((*e, c.clone()));
                }
            }
        }
        self.gens.push(Generator { degree: s, parts });
    }

    /// Runs the two-sided bound at degree `s` with generators of degree at
    /// most `upto`. Returns the exact dimension when the bounds meet.
    fn check(&self, s: u32, upto: u32, m: Modulus) -> Option<usize> {
        let k = dim_forms(s);
        let n = 3 * k;
        let rows = dim_forms(s + self.deg);
        let mut e = Echelon::new(n, m);
        'outer: for g in self.gens.iter().filter(|g| g.degree <= upto.min(s)) {
            for v in candidate_vectors_mod(g, s, &m) {
                e.insert(v);
                if e.rank() == n {
                    break 'outer;
                }
            }
        }
        let free: Vec<usize> = (0..n).filter(|j| !e.is_pivot(*j)).collect();
        if free.len() > rows {
            return None;
        }
        let forms_mod: Vec<Vec<(Exponent, u64)>> = self
            .forms
            .iter()
            .map(|f| f.iter().map(|(ex, c)| (*ex, m.from_bigint(c))).collect())
            .collect();
        let ms = monomials(s);
        let mut img = Echelon::new(rows, m);
        for j in free {
            let (block, mono) = (j / k, &ms[j % k]);
            let mut col = vec![0u64; rows];
            for (ex, c) in &forms_mod[block] {
                col[mono_index(shift_exp(ex, mono))] = *c;
            }
            if !img.insert(col) {
                return None;
            }
        }
        Some(e.rank())
    }

    /// Integer matrix of `(R_s)^3 → R_{s+D}`.
    fn map_matrix(&self, s: u32) -> IntMatrix {
        let rows = dim_forms(s + self.deg);
        let ms = monomials(s);
        let mut cols = Vec::with_capacity(3 * ms.len());
        for f in &self.forms {
            for mono in &ms {
                cols.push(
                    f.iter()
                        .map(|(ex, c)| (mono_index(shift_exp(ex, mono)), c.clone()))
                        .collect(),
                );
            }
        }
        IntMatrix::from_columns(rows, &cols)
    }

    /// Monomial multiples, in degree `s`, of the generators selected by
    /// `keep`, one row each.
    fn candidate_matrix(&self, s: u32, keep: impl Fn(&Generator) -> bool) -> IntMatrix {
        let k = dim_forms(s);
        let mut mat = IntMatrix::new(3 * k);
        for g in self.gens.iter().filter(|g| g.degree <= s && keep(g)) {
            for mono in monomials(s - g.degree) {
                let mut row = Vec::new();
                for (block, part) in g.parts.iter().enumerate() {
                    for (ex, c) in part {
                        row.push((block * k + mono_index(shift_exp(ex, &mono)), c.clone()));
                    }
                }
                mat.push_row(row);
            }
        }
        mat
    }
}

fn candidate_vectors_mod(g: &Generator, s: u32, m: &Modulus) -> impl Iterator<Item = Vec<u64>> {
    let k = dim_forms(s);
    let parts: Vec<Vec<(Exponent, u64)>> = g
        .parts
        .iter()
        .map(|p| p.iter().map(|(ex, c)| (*ex, m.from_bigint(c))).collect())
        .collect();
    monomials(s - g.degree).into_iter().map(move |mono| {
        let mut v = vec![0u64; 3 * k];
        for (block, part) in parts.iter().enumerate() {
            for (ex, c) in part {
                v[block * k + mono_index(shift_exp(ex, &mono))] = *c;
            }
        }
        v
    })
}
