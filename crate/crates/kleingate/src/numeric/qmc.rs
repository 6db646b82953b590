//! Randomized quasi-Monte-Carlo integration on the unit hypercube.
//!
//! Halton points (bases 2, 3, 5, 7, ...) with Cranley-Patterson random shifts:
//! `replicas` independent shifts of the same point set give an unbiased mean
//! and a standard-error estimate from the spread of the replica means. For a
//! fixed seed the result is independent of how replicas are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const BASES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Result of a randomized QMC integration.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct QmcEstimate {
    pub value: f64,
    /// Standard error of the mean across randomization replicas.
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Radical-inverse of `index` in base `base`.
fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let inv_base = 1.0 / base as f64;
    let mut factor = inv_base;
    let mut value = 0.0;
    while index > 0 {
        value += (index % base) as f64 * factor;
        index /= base;
        factor *= inv_base;
    }
    value
}

/// Integrates `f` over the unit hypercube `[0,1]^DIM`.
///
/// `samples` is the total point budget, split evenly over `replicas`
/// independently shifted copies of the Halton set. The integrand must be
/// bounded on the cube. Deterministic for a fixed `seed`.
pub fn qmc_integrate<const DIM: usize, F>(
    f: F,
    samples: u64,
    replicas: u32,
    seed: u64,
) -> QmcEstimate
where
    F: Fn(&[f64; DIM]) -> f64 + Sync,
{
    assert!(DIM <= BASES.len(), "dimension too large for the fixed base table");
    assert!(replicas >= 2, "need at least two replicas for an error estimate");
    let per_replica = (samples / replicas as u64).max(1);

    // one shift vector per replica, drawn up front so scheduling cannot matter
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shifts: Vec<[f64; DIM]> = (0..replicas)
        .map(|_| {
            let mut shift = [0.0; DIM];
            for s in &mut shift {
                *s = rng.random::<f64>();
            }
            shift
        })
        .collect();

    let means: Vec<f64> = shifts
        .par_iter()
        .map(|shift| {
            let mut acc = 0.0;
            for i in 0..per_replica {
                let mut point = [0.0; DIM];
                for (d, p) in point.iter_mut().enumerate() {
                    // skip index 0 (the all-zeros Halton point)
                    let u = radical_inverse(i + 1, BASES[d]) + shift[d];
                    *p = u - u.floor();
                }
                acc += f(&point);
            }
            acc / per_replica as f64
        })
        .collect();

    let mean = means.iter().sum::<f64>() / means.len() as f64;
    let var = means.iter().map(|m| (m - mean) * (m - mean)).sum::<f64>()
        / (means.len() as f64 - 1.0);
    QmcEstimate {
        value: mean,
        std_error: (var / means.len() as f64).sqrt(),
        samples: per_replica * replicas as u64,
        seed,
    }
}
