//! Random instances and the executable identity suite.
//!
//! Every trial derives its own seed from the configured seed and the trial
//! index, so reports are reproducible and independent of scheduling.

mod generate;
mod properties;

use std::env;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::cohomology::{cohomology_groups, CohomologyError};
use crate::complex::{cup, Coeff};
use crate::cubical::PrecubicalSet;

pub use generate::{
    cocycle_basis, instance_digest, random_chain, random_cochain, random_cocycle, random_cocycle_in, random_graph, random_precubical,
    random_subcomplex, random_tensor_chain,
};
pub use properties::{cochain_anticommutator, Property};

/// Environment variable consulted by [`default_seed`].
pub const SEED_ENV: &str = "PRECUBICAL_SEED";

#[derive(Debug, Error)]
pub enum PropcheckError {
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown property '{0}'")]
    UnknownProperty(String),
    #[error("at least one trial is required")]
    NoTrials,
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// The seed in `PRECUBICAL_SEED`, or 0.
pub fn default_seed() -> u64 {
    env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    /// At most 3.
    pub max_dim: usize,
    /// Vertices of each random graph.
    pub vertices: usize,
    /// Edges of each random graph.
    pub edges: usize,
    /// Number of graphs in the tensor product, 1 to 3.
    pub factors: usize,
    /// Probability of keeping a cube before closing under faces, in (0, 1].
    pub fraction: f64,
    pub ring: Coeff,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_dim: 3,
            vertices: 2,
            edges: 3,
            factors: 3,
            fraction: 0.5,
            ring: Coeff::Integers,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<(), PropcheckError> {
        let bad = |m: String| Err(PropcheckError::InvalidConfig(m));
        if self.max_dim > 3 {
            return bad(format!("max_dim {} exceeds 3", self.max_dim));
        }
        if !(1..=3).contains(&self.factors) {
            return bad(format!("factors must be between 1 and 3, got {}", self.factors));
        }
        if !(self.fraction > 0.0 && self.fraction <= 1.0) {
            return bad(format!("fraction must lie in (0, 1], got {}", self.fraction));
        }
        Ok(())
    }
}

/// Seed of trial `trial` under the base seed (splitmix64 finalizer).
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    let mut z = seed ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub trial: usize,
    pub seed: u64,
    /// Digest of the minimized instance.
    pub digest: String,
    pub cube_counts: Vec<usize>,
    pub detail: String,
    /// The minimized instance.
    pub instance: PrecubicalSet,
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub property: String,
    pub trials: usize,
    /// Sorted by trial.
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
    /// False for statistics that never count as a test failure.
    pub asserted: bool,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Fraction of trials without a failure.
    pub fn agreement(&self) -> f64 {
        if self.trials == 0 {
            return 1.0;
        }
        (self.trials - self.failures.len()) as f64 / self.trials as f64
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.asserted, self.passed()) {
            (_, true) => "ok",
            (true, false) => "FAILED",
            (false, false) => "reported",
        };
        write!(
            f,
            "{}: {} trials, {} failures, {:.1}% agreement, {:.3}s [{status}]",
            self.property,
            self.trials,
            self.failures.len(),
            100.0 * self.agreement(),
            self.elapsed.as_secs_f64()
        )?;
        const SHOWN: usize = 5;
        for fl in self.failures.iter().take(SHOWN) {
            write!(
                f,
                "\n  trial {} seed {} instance {} cubes {:?}: {}",
                fl.trial, fl.seed, &fl.digest[..16], fl.cube_counts, fl.detail
            )?;
        }
        if self.failures.len() > SHOWN {
            write!(f, "\n  ... {} more", self.failures.len() - SHOWN)?;
        }
        Ok(())
    }
}

fn evaluate_seeded(property: Property, x: &PrecubicalSet, ring: &Coeff, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5DEE_CE66_D1CE_5EED);
    property.evaluate(x, ring, &mut rng)
}

/// Deletes top-dimensional cubes one at a time for as long as the property
/// still fails with the same cochain seed.
pub fn minimize(property: Property, x: &PrecubicalSet, ring: &Coeff, seed: u64, detail: String) -> (PrecubicalSet, String) {
    let mut current = x.clone();
    let mut detail = detail;
    'outer: loop {
        let Some(top) = current.max_dim() else { break };
        for k in 0..current.cube_count(top) {
            let candidate = current.without_top_cube(k);
            if let Err(d) = evaluate_seeded(property, &candidate, ring, seed) {
                current = candidate;
                detail = d;
                continue 'outer;
            }
        }
        break;
    }
    (current, detail)
}

fn run_trials(
    property: Property,
    ring: &Coeff,
    seed: u64,
    trials: usize,
    instance: impl Fn(u64) -> Result<PrecubicalSet, PropcheckError> + Sync,
) -> Result<PropertyReport, PropcheckError> {
    if trials == 0 {
        return Err(PropcheckError::NoTrials);
    }
    let start = Instant::now();
    let outcomes: Vec<Result<Option<Failure>, PropcheckError>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let s = trial_seed(seed, trial);
            let x = instance(s)?;
            Ok(match evaluate_seeded(property, &x, ring, s) {
                Ok(()) => None,
                Err(detail) => {
                    let (small, detail) = minimize(property, &x, ring, s, detail);
                    Some(Failure {
                        trial,
                        seed: s,
                        digest: instance_digest(&small),
                        cube_counts: small.cube_counts(),
                        detail,
                        instance: small,
                    })
                }
            })
        })
        .collect();
    let mut failures = Vec::new();
    for o in outcomes {
        failures.extend(o?);
    }
    Ok(PropertyReport {
        property: property.name().to_string(),
        trials,
        failures,
        elapsed: start.elapsed(),
        asserted: property.is_assertion(),
    })
}

/// Runs `property` on `trials` random instances drawn with `cfg`.
pub fn check(property: Property, cfg: &GenConfig, trials: usize) -> Result<PropertyReport, PropcheckError> {
    cfg.validate()?;
    run_trials(property, &cfg.ring, cfg.seed, trials, |s| {
        random_precubical(&GenConfig { seed: s, ..cfg.clone() })
    })
}

/// Runs `property` `trials` times on one fixed instance with fresh random
/// cochains each time.
pub fn check_on(
    property: Property,
    x: &PrecubicalSet,
    ring: &Coeff,
    seed: u64,
    trials: usize,
) -> Result<PropertyReport, PropcheckError> {
    run_trials(property, ring, seed, trials, |_| Ok(x.clone()))
}

fn random_coords<R: Rng + ?Sized>(ring: &Coeff, count: usize, rng: &mut R) -> Vec<BigInt> {
    (0..count).map(|_| ring.random_elem(rng)).collect()
}

/// Compares `[a⌣b]` with `(-1)^{pq} [b⌣a]` for random classes `a`, `b` of
/// random degrees. A statistic only: the report is never asserted.
pub fn anticommutativity_report(
    x: &PrecubicalSet,
    ring: &Coeff,
    trials: usize,
    seed: u64,
) -> Result<PropertyReport, PropcheckError> {
    if trials == 0 {
        return Err(PropcheckError::NoTrials);
    }
    let start = Instant::now();
    let groups = cohomology_groups(x, ring)?;
    let degrees: Vec<usize> = (0..groups.len()).filter(|&d| groups[d].generator_count() > 0).collect();
    let outcomes: Vec<Result<Option<Failure>, PropcheckError>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let s = trial_seed(seed, trial);
            if degrees.is_empty() {
                return Ok(None);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let p = degrees[rng.gen_range(0..degrees.len())];
            let q = degrees[rng.gen_range(0..degrees.len())];
            if p + q >= groups.len() {
                return Ok(None);
            }
            let (gp, gq, gpq) = (&groups[p], &groups[q], &groups[p + q]);
            let ca = random_coords(ring, gp.generator_count(), &mut rng);
            let cb = random_coords(ring, gq.generator_count(), &mut rng);
            let a = gp.representative(x, &ca)?;
            let b = gq.representative(x, &cb)?;
            let ab = cup(x, &a, &b).map_err(CohomologyError::from)?;
            let ba = cup(x, &b, &a).map_err(CohomologyError::from)?;
            let ba = if p * q % 2 == 1 { ba.neg() } else { ba };
            let lhs = gpq.class_of(&ab)?;
            let rhs = gpq.class_of(&ba)?;
            Ok((lhs != rhs).then(|| Failure {
                trial,
                seed: s,
                digest: instance_digest(x),
                cube_counts: x.cube_counts(),
                detail: format!("degrees ({p}, {q}), a = {ca:?}, b = {cb:?}: [a⌣b] = {lhs:?}, ±[b⌣a] = {rhs:?}"),
                instance: x.clone(),
            }))
        })
        .collect();
    let mut failures = Vec::new();
    for o in outcomes {
        failures.extend(o?);
    }
    Ok(PropertyReport {
        property: "anticommutativity_classes".to_string(),
        trials,
        failures,
        elapsed: start.elapsed(),
        asserted: false,
    })
}

/// [`anticommutativity_report`] with one random pair on each of `trials`
/// random instances.
pub fn anticommutativity_survey(cfg: &GenConfig, trials: usize) -> Result<PropertyReport, PropcheckError> {
    cfg.validate()?;
    if trials == 0 {
        return Err(PropcheckError::NoTrials);
    }
    let start = Instant::now();
    let mut failures = Vec::new();
    for trial in 0..trials {
        let s = trial_seed(cfg.seed, trial);
        let x = random_precubical(&GenConfig { seed: s, ..cfg.clone() })?;
        let r = anticommutativity_report(&x, &cfg.ring, 1, s)?;
        failures.extend(r.failures.into_iter().map(|f| Failure { trial, ..f }));
    }
    Ok(PropertyReport {
        property: "anticommutativity_classes".to_string(),
        trials,
        failures,
        elapsed: start.elapsed(),
        asserted: false,
    })
}
