use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::PrecisionContext;
use crate::error::{Error, Result};

const CHUNK: u64 = 8192;

/// Sample mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Default)]
struct Moments {
    count: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1.0;
        let d = x - self.mean;
        self.mean += d / self.count;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if other.count == 0.0 {
            return self;
        }
        if self.count == 0.0 {
            return other;
        }
        let count = self.count + other.count;
        let d = other.mean - self.mean;
        Moments {
            count,
            mean: self.mean + d * other.count / count,
            m2: self.m2 + other.m2 + d * d * self.count * other.count / count,
        }
    }
}

/// `(Σ uᵢⁿ)^{1/n}`, scaled by the maximum so that large `n` cannot
/// underflow.
fn norm(us: &[f64], n: f64) -> f64 {
    let max = us.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0.0;
    }
    let sum: f64 = us.iter().map(|u| (u / max).powf(n)).sum();
    max * sum.powf(1.0 / n)
}

/// Monte Carlo estimate of `E(‖(U₁, …, U_r)‖_n^s)` for independent uniforms.
///
/// Samples are drawn in fixed chunks, chunk `c` from the ChaCha8 stream
/// `c` under `ctx.seed`, and merged in chunk order, so the estimate is
/// bit-for-bit independent of the thread count.
pub fn mc_norm_moment(r: u32, n: f64, s: f64, samples: u64, ctx: &PrecisionContext) -> Result<McEstimate> {
    if r < 2 {
        return Err(Error::invalid(format!("dimension r must be ≥ 2, got {r}")));
    }
    if samples < 1_000 {
        return Err(Error::invalid(format!("need at least 1000 samples, got {samples}")));
    }
    if !(n >= 1.0) || !(s > 0.0) {
        return Err(Error::invalid(format!("need n ≥ 1 and s > 0, got n = {n}, s = {s}")));
    }
    let chunks = samples.div_ceil(CHUNK);
    let seed = ctx.seed;
    let parts: Vec<Moments> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let len = CHUNK.min(samples - c * CHUNK);
            let mut us = vec![0.0; r as usize];
            let mut m = Moments::default();
            for _ in 0..len {
                for u in us.iter_mut() {
                    *u = rng.gen::<f64>();
                }
                m.push(norm(&us, n).powf(s));
            }
            m
        })
        .collect();
    let total = parts.into_iter().fold(Moments::default(), Moments::merge);
    let variance = total.m2 / (total.count - 1.0);
    Ok(McEstimate {
        mean: total.mean,
        std_error: (variance / total.count).sqrt(),
        samples,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_across_thread_counts() {
        let ctx = PrecisionContext::default().with_seed(7);
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| mc_norm_moment(3, 20.0, 1.0, 50_000, &ctx).unwrap());
        let b = four.install(|| mc_norm_moment(3, 20.0, 1.0, 50_000, &ctx).unwrap());
        assert_eq!(a.mean.to_bits(), b.mean.to_bits());
        assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
        let c = mc_norm_moment(3, 20.0, 1.0, 50_000, &ctx.with_seed(8)).unwrap();
        assert_ne!(a.mean, c.mean);
    }

    #[test]
    fn max_of_uniforms() {
        let ctx = PrecisionContext::default();
        let e = mc_norm_moment(3, 1e6, 1.0, 200_000, &ctx).unwrap();
        assert!((e.mean - 0.75).abs() < 4.0 * e.std_error, "{e:?}");
    }

    #[test]
    fn merge_matches_single_pass() {
        let xs: Vec<f64> = (0..1000).map(|i| ((i * 37) % 101) as f64 / 7.0).collect();
        let mut whole = Moments::default();
        xs.iter().for_each(|&x| whole.push(x));
        let mut a = Moments::default();
        let mut b = Moments::default();
        xs[..333].iter().for_each(|&x| a.push(x));
        xs[333..].iter().for_each(|&x| b.push(x));
        let m = a.merge(b);
        assert!((m.mean - whole.mean).abs() < 1e-12);
        assert!((m.m2 - whole.m2).abs() < 1e-8 * whole.m2);
    }

    #[test]
    fn rejects_bad_arguments() {
        let ctx = PrecisionContext::default();
        assert!(mc_norm_moment(1, 2.0, 1.0, 5000, &ctx).is_err());
        assert!(mc_norm_moment(2, 2.0, 1.0, 10, &ctx).is_err());
    }
}
