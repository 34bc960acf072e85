//! Seeded verification sweeps.
//!
//! Each case draws from its own stream `(seed, case index)`, so running the
//! cases in parallel gives the same report as running them in order.

use crate::arrangements::{
    random_arrangement, recognize, sample_instance, trial_rng, CurveInput, FamilyTag,
};
use crate::eigenscheme::{eigenscheme_degree, jacobian_to_tensor, EigenError};
use crate::jacobian::{lift_syzygy, Freeness, Jacobian};
use crate::algebra::HPoly;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    MaxTau,
    MinTau,
    Dpw,
    ThmProduct,
    EigenDichotomy,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::MaxTau => "max-tau",
            Suite::MinTau => "min-tau",
            Suite::Dpw => "dpw",
            Suite::ThmProduct => "thm-product",
            Suite::EigenDichotomy => "eigen-dichotomy",
        }
    }

    /// Cases per trial.
    fn slots(self) -> Vec<FamilyTag> {
        match self {
            Suite::MaxTau => FamilyTag::MAX_TAU.to_vec(),
            Suite::MinTau => FamilyTag::MIN_TAU.to_vec(),
            Suite::Dpw => FamilyTag::FAMILIES.iter().copied().chain([FamilyTag::Unrecognized]).collect(),
            Suite::ThmProduct => vec![FamilyTag::Unrecognized],
            Suite::EigenDichotomy => FamilyTag::FAMILIES.to_vec(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one sampled case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub trial: u64,
    pub label: String,
    pub degree: u32,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: u64,
    pub checks: Vec<Check>,
    pub violations: usize,
}

/// Thread pool honoring `SYZLAB_THREADS`.
pub fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var("SYZLAB_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

pub fn run_suite(suite: Suite, trials: u64, seed: u64) -> SuiteReport {
    let slots = suite.slots();
    let cases: Vec<(u64, usize)> = (0..trials)
        .flat_map(|t| (0..slots.len()).map(move |s| (t, s)))
        .collect();
    let stride = slots.len() as u64;
    let checks: Vec<Check> = thread_pool().install(|| {
        cases
            .par_iter()
            .map(|&(trial, slot)| {
                let mut rng = trial_rng(seed, trial * stride + slot as u64);
                let tag = slots[slot];
                let mut c = match suite {
                    Suite::MaxTau => tau_case(tag, 5, true, &mut rng),
                    Suite::MinTau => tau_case(tag, 6, false, &mut rng),
                    Suite::Dpw => dpw_case(tag, &mut rng),
                    Suite::ThmProduct => product_case(&mut rng),
                    Suite::EigenDichotomy => dichotomy_case(tag, trial % 2 == 1, &mut rng),
                };
                c.trial = trial;
                c
            })
            .collect()
    });
    let violations = checks.iter().filter(|c| !c.passed).count();
    SuiteReport {
        suite,
        seed,
        trials,
        checks,
        violations,
    }
}

fn check(label: impl Into<String>, degree: u32, passed: bool, detail: String) -> Check {
    Check {
        trial: 0,
        label: label.into(),
        degree,
        passed,
        detail,
    }
}

fn failure(label: impl Into<String>, degree: u32, e: impl fmt::Display) -> Check {
    check(label, degree, false, format!("error: {e}"))
}

/// τ, mdr and freeness of a family member in random coordinates, with
/// degree in `[lo, 10]`.
pub fn tau_case(tag: FamilyTag, lo: u32, max: bool, rng: &mut ChaCha8Rng) -> Check {
    let inst = match sample_instance(tag, lo, 10, true, rng) {
        Ok(i) => i,
        Err(e) => return failure(tag.name(), 0, e),
    };
    let d = inst.degree();
    let mut j = match Jacobian::new(inst.curve.product()) {
        Ok(j) => j,
        Err(e) => return failure(tag.name(), d, e),
    };
    let tau = match j.tjurina() {
        Ok(t) => t as u32,
        Err(e) => return failure(tag.name(), d, e),
    };
    let r = j.mdr();
    let freeness = j.freeness();
    let dd = d * d - 3 * d;
    let (want_tau, want_class) = if max {
        (dd + 3, Freeness::Free { d1: 1, d2: d - 2 })
    } else {
        (dd + 2, Freeness::NearlyFree { d1: 1, d2: d - 1 })
    };
    let mut passed = tau == want_tau && r == 1 && freeness == want_class;
    let mut detail = format!("tau={tau} (want {want_tau}), mdr={r}, {freeness}");
    if max {
        let dpw = j.dpw().map(|c| c.holds).unwrap_or(false);
        passed &= dpw;
        detail.push_str(&format!(", dpw={dpw}"));
    }
    check(tag.name(), d, passed, detail)
}

/// The bounds on a family member or on a random line/conic arrangement.
pub fn dpw_case(tag: FamilyTag, rng: &mut ChaCha8Rng) -> Check {
    let curve = if tag == FamilyTag::Unrecognized {
        let lines = rng.gen_range(0..=4);
        let conics = rng.gen_range(if lines < 2 { 1 } else { 0 }..=2);
        random_arrangement(lines, conics, rng)
    } else {
        match sample_instance(tag, 4, 9, true, rng) {
            Ok(i) => i.curve,
            Err(e) => return failure(tag.name(), 0, e),
        }
    };
    let label = if tag == FamilyTag::Unrecognized { "random" } else { tag.name() };
    let d = curve.degree();
    let mut j = match Jacobian::new(curve.product()) {
        Ok(j) => j,
        Err(e) => return failure(label, d, e),
    };
    if j.mdr() == 0 {
        return check(label, d, true, "concurrent lines; bounds not applicable".into());
    }
    match j.dpw() {
        Ok(c) => check(
            label,
            d,
            c.holds,
            format!("{} <= tau={} <= {} (r={})", c.lower, c.tau, c.upper, j.mdr()),
        ),
        Err(e) => failure(label, d, e),
    }
}

fn random_factor(rng: &mut ChaCha8Rng) -> CurveInput {
    match rng.gen_range(0..4) {
        0 => random_arrangement(1, 0, rng),
        1 => random_arrangement(0, 1, rng),
        2 => random_arrangement(rng.gen_range(1..=2), 1, rng),
        _ => {
            let tag = FamilyTag::FAMILIES[rng.gen_range(0..FamilyTag::FAMILIES.len())];
            sample_instance(tag, 3, 6, true, rng)
                .map(|i| i.curve)
                .unwrap_or_else(|_| random_arrangement(2, 0, rng))
        }
    }
}

/// Two coprime factored curves, drawn until their union is reduced.
pub fn coprime_pair(rng: &mut ChaCha8Rng) -> (CurveInput, CurveInput) {
    loop {
        let a = random_factor(rng);
        let b = random_factor(rng);
        let mut all = a.components().to_vec();
        all.extend(b.components().iter().cloned());
        if crate::arrangements::validate(&CurveInput::new(all), false).is_ok() {
            return (a, b);
        }
    }
}

/// `max(r1, r2) ≤ r ≤ min(r1 + d2, r2 + d1)` and a lifted syzygy.
pub fn product_case(rng: &mut ChaCha8Rng) -> Check {
    let (a, b) = coprime_pair(rng);
    let (f1, f2) = (a.product(), b.product());
    let f = f1.mul(f2);
    let d = f.degree();
    let run = || -> Result<Check, crate::jacobian::JacobianError> {
        let mut j1 = Jacobian::new(f1)?;
        let (r1, r2) = (j1.mdr(), Jacobian::new(f2)?.mdr());
        let r = Jacobian::new(&f)?.mdr();
        let (d1, d2) = (f1.degree(), f2.degree());
        let bounds = r1.max(r2) <= r && r <= (r1 + d2).min(r2 + d1);
        let delta1 = j1
            .syzygies(r1)
            .into_iter()
            .next()
            .expect("a syzygy in degree mdr");
        let lifted = lift_syzygy(&delta1, f1, f2)?;
        let lift_ok = !lifted.is_zero() && lifted.is_syzygy_of(&f);
        Ok(check(
            "pair",
            d,
            bounds && lift_ok,
            format!(
                "r1={r1} r2={r2} r={r} d1={d1} d2={d2}, lift {}",
                if lift_ok { "ok" } else { "failed" }
            ),
        ))
    };
    run().unwrap_or_else(|e| failure("pair", d, e))
}

/// Whether the Jacobian ideal of a family member is an eigenscheme ideal.
/// Expected exactly for `L` and `CL2`, and then the eigenscheme length is
/// the Tjurina number `d² − 3d + 3`.
pub fn dichotomy_case(tag: FamilyTag, random_coords: bool, rng: &mut ChaCha8Rng) -> Check {
    let inst = match sample_instance(tag, 5, 10, random_coords, rng) {
        Ok(i) => i,
        Err(e) => return failure(tag.name(), 0, e),
    };
    let expect = matches!(tag, FamilyTag::L | FamilyTag::CL2);
    eigen_check(tag.name(), inst.curve.product(), expect)
}

/// Runs the eigenscheme test on `f` and compares with the expectation.
pub fn eigen_check(label: &str, f: &HPoly, expect: bool) -> Check {
    let d = f.degree();
    match jacobian_to_tensor(f) {
        Ok(t) => {
            let want = (d * d - 3 * d + 3) as usize;
            match eigenscheme_degree(&t) {
                Ok(len) => {
                    let mut detail = format!("eigenscheme of length {len} (d^2-3d+3 = {want})");
                    if !expect {
                        detail.push_str(", but the family is expected not to be an eigenscheme");
                    }
                    check(label, d, expect && len == want, detail)
                }
                Err(e) => failure(label, d, e),
            }
        }
        Err(EigenError::NotEigenscheme(reason)) => {
            check(label, d, !expect, format!("not an eigenscheme: {reason}"))
        }
        Err(e) => failure(label, d, e),
    }
}

/// Round trip through the recognizer, plus the perturbed control.
pub fn recognition_case(tag: FamilyTag, random_coords: bool, rng: &mut ChaCha8Rng) -> Check {
    let inst = match sample_instance(tag, 5, 10, random_coords, rng) {
        Ok(i) => i,
        Err(e) => return failure(tag.name(), 0, e),
    };
    let d = inst.degree();
    let got = recognize(&inst.curve);
    let control = crate::arrangements::perturb_off_pencil(tag, &inst.normal_form);
    let control = match inst.coordinates {
        Some(a) => control.transform(&crate::arrangements::to_rational_matrix(&a)),
        None => control,
    };
    let neg = recognize(&control);
    let passed = got.as_ref() == Ok(&tag) && neg == Ok(FamilyTag::Unrecognized);
    check(
        tag.name(),
        d,
        passed,
        format!("recognized {:?}, perturbed control {:?}", got.map(|t| t.name()), neg.map(|t| t.name())),
    )
}
