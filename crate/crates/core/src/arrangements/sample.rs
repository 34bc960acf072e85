//! Seeded sampling of family instances for the verification sweeps.

use super::{generate_family, ArrangementError, CurveInput, FamilyTag};
use crate::algebra::{rat, HPoly, Rational};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

/// Generator for trial `trial` of a run seeded with `seed`. Trials use
/// separate streams, so parallel and serial sweeps draw the same values.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn det3(a: &[[i64; 3]; 3]) -> i64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Integer matrix with entries in `[-2, 2]` and determinant in `[1, 50]`.
pub fn random_coordinate_change<R: Rng>(rng: &mut R) -> [[i64; 3]; 3] {
    loop {
        let mut a = [[0i64; 3]; 3];
        for row in a.iter_mut() {
            for e in row.iter_mut() {
                *e = rng.gen_range(-2..=2);
            }
        }
        if (1..=50).contains(&det3(&a)) {
            return a;
        }
    }
}

pub fn to_rational_matrix(a: &[[i64; 3]; 3]) -> [[Rational; 3]; 3] {
    a.map(|row| row.map(rat))
}

/// Parameters for `m` conics (distinct nonzero integers in `[-9, 9]`) or,
/// for `L`, `m` pairwise non-proportional slope pairs `(1, a)` and `(0, 1)`.
pub fn random_params<R: Rng>(tag: FamilyTag, m: usize, rng: &mut R) -> Vec<Rational> {
    let pool: Vec<i64> = (-9..=9).filter(|&a| a != 0).collect();
    match tag {
        FamilyTag::L => {
            let mut slopes: Vec<Option<i64>> = (-9..=9).map(Some).collect();
            slopes.push(None);
            slopes
                .choose_multiple(rng, m)
                .flat_map(|s| match s {
                    Some(a) => [rat(1), rat(*a)],
                    None => [rat(0), rat(1)],
                })
                .collect()
        }
        _ => pool.choose_multiple(rng, m).map(|a| rat(*a)).collect(),
    }
}

/// One sampled family member.
#[derive(Clone, Debug)]
pub struct Instance {
    pub tag: FamilyTag,
    pub params: Vec<Rational>,
    /// Coordinate change applied to the normal form, if any.
    pub coordinates: Option<[[i64; 3]; 3]>,
    pub normal_form: CurveInput,
    pub curve: CurveInput,
}

impl Instance {
    pub fn degree(&self) -> u32 {
        self.curve.degree()
    }
}

/// Draws a member of `tag` with degree in `lo..=hi`.
pub fn sample_instance<R: Rng>(
    tag: FamilyTag,
    lo: u32,
    hi: u32,
    random_coords: bool,
    rng: &mut R,
) -> Result<Instance, ArrangementError> {
    let counts = tag.counts_for_degrees(lo, hi);
    let Some(&m) = counts.choose(rng) else {
        return Err(ArrangementError::TooFew {
            family: tag,
            min: 2,
            got: 0,
            what: "components in the degree range",
        });
    };
    let params = random_params(tag, m, rng);
    let normal_form = generate_family(tag, &params)?;
    let (coordinates, curve) = if random_coords {
        let a = random_coordinate_change(rng);
        let c = normal_form.transform(&to_rational_matrix(&a));
        (Some(a), c)
    } else {
        (None, normal_form.clone())
    };
    Ok(Instance {
        tag,
        params,
        coordinates,
        normal_form,
        curve,
    })
}

/// Moves one component off the configuration that defines the family.
///
/// For conic families the first conic gets a monomial added that is outside
/// the pencil span and keeps the conic smooth. For `L` the first line
/// through the common point gets `z` added.
pub fn perturb_off_pencil(tag: FamilyTag, normal_form: &CurveInput) -> CurveInput {
    let mut comps = normal_form.components().to_vec();
    if tag == FamilyTag::L {
        comps[1] = &comps[1] + &HPoly::z();
        return CurveInput::new(comps);
    }
    let conics: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].degree() == 2).collect();
    let (i, j) = (conics[0], conics[1]);
    for e in [[2, 0, 0], [0, 0, 2], [0, 2, 0], [1, 1, 0], [0, 1, 1]] {
        let q = &comps[i] + &HPoly::monomial(e, rat(1));
        let span = super::coefficient_rank(&[&comps[i], &comps[j], &q]);
        let candidate = {
            let mut c = comps.clone();
            c[i] = q.clone();
            CurveInput::new(c)
        };
        if span == 3 && super::validate(&candidate, true).is_ok() {
            return candidate;
        }
    }
    unreachable!("one of the five monomials leaves the pencil")
}

/// Line with integer coefficients in `[-5, 5]`, not all zero.
pub fn random_line<R: Rng>(rng: &mut R) -> HPoly {
    loop {
        let c = [0; 3].map(|_: i64| rat(rng.gen_range(-5..=5)));
        let l = HPoly::linear(c);
        if !l.is_zero() {
            return l;
        }
    }
}

/// Smooth conic with integer coefficients in `[-3, 3]`.
pub fn random_smooth_conic<R: Rng>(rng: &mut R) -> HPoly {
    loop {
        let q = HPoly::from_terms(
            2,
            crate::algebra::monomials(2)
                .into_iter()
                .map(|e| (e, rat(rng.gen_range(-3..=3)))),
        )
        .expect("degree-2 exponents");
        if !q.is_zero() && super::conic_rank(&q) == 3 {
            return q;
        }
    }
}

/// `lines` random lines and `conics` random smooth conics, redrawn until
/// the components are pairwise distinct.
pub fn random_arrangement<R: Rng>(lines: usize, conics: usize, rng: &mut R) -> CurveInput {
    loop {
        let mut comps: Vec<HPoly> = (0..lines).map(|_| random_line(rng)).collect();
        comps.extend((0..conics).map(|_| random_smooth_conic(rng)));
        let c = CurveInput::new(comps);
        if super::validate(&c, true).is_ok() {
            return c;
        }
    }
}
