//! Tilted-geometric sampling: independent multiplicity draws at the tilt
//! x(n), exact-size sampling by plain rejection and by probabilistic
//! divide-and-conquer, and the empirical-shape experiment harness.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::class::Mult;
use crate::partition::{MultiplicityVector, Partition};
use crate::shape::{const_d, ShapeCurve};
use crate::sizes::PartSizeSet;

/// Exact-size sampling strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Plain,
    Pdc,
}

#[derive(Debug, thiserror::Error)]
pub enum SampleError {
    #[error("exceeded {attempts} attempts without an exact-size hit")]
    MaxAttempts { attempts: u64 },
    #[error("{0}")]
    Invalid(String),
}

/// Configuration of the tilted independent-multiplicity model.
#[derive(Debug, Clone)]
pub struct SamplerConfig {
    pub u: PartSizeSet,
    /// Multiplicity bound: each size occurs strictly fewer than a times.
    pub bound: Mult,
    pub n: u64,
    /// Tilt x ∈ (0,1).
    pub x: f64,
    pub mode: Mode,
    pub seed: u64,
    pub max_attempts: u64,
}

/// The tilting parameter exp(−d(r,B,a)/n^{r/(1+r)}).
pub fn tilt(r: f64, b: f64, a: Option<u64>, n: u64) -> f64 {
    assert!(n >= 1);
    (-const_d(r, b, a) / (n as f64).powf(r / (1.0 + r))).exp()
}

impl SamplerConfig {
    /// Default tilt from the polynomial structure of the size set.
    pub fn new(u: PartSizeSet, bound: Mult, n: u64, mode: Mode, seed: u64) -> Result<Self, String> {
        let r = u
            .degree()
            .ok_or("explicit size sets need with_tilt (no polynomial asymptotics)")?
            as f64;
        let b = u.leading().unwrap();
        let x = tilt(r, b, bound.as_option(), n);
        Ok(Self::with_tilt(u, bound, n, x, mode, seed))
    }

    pub fn with_tilt(
        u: PartSizeSet,
        bound: Mult,
        n: u64,
        x: f64,
        mode: Mode,
        seed: u64,
    ) -> Self {
        assert!(0.0 < x && x < 1.0, "tilt must lie in (0,1)");
        assert!(n >= 1);
        let max_attempts = match mode {
            Mode::Plain => 50 * (n as f64).powf(0.75).ceil() as u64,
            Mode::Pdc => 50 * (n as f64).sqrt().ceil() as u64,
        };
        SamplerConfig {
            u,
            bound,
            n,
            x,
            mode,
            seed,
            max_attempts,
        }
    }

    /// P(Z_u = 0) at tilt x for one coordinate.
    fn p_zero(&self, u: u64) -> f64 {
        let q = self.x.powf(u as f64);
        match self.bound.as_option() {
            None => 1.0 - q,
            Some(a) => (1.0 - q) / (1.0 - q.powf(a as f64)),
        }
    }

    /// P(all coordinates with size > n are zero). Sizes that large force a
    /// rejection whenever positive, so a single Bernoulli stands in for the
    /// whole tail.
    fn tail_zero_prob(&self) -> f64 {
        let mut logp = 0.0;
        let start = self.u.upto(self.n).len() as u64 + 1;
        let len = match &self.u {
            PartSizeSet::Explicit(v) => v.len() as u64,
            PartSizeSet::Poly(_) => u64::MAX,
        };
        let mut k = start;
        while k <= len {
            let u = self.u.value(k);
            if self.x.powf(u as f64) < 1e-18 {
                break;
            }
            logp += self.p_zero(u).ln();
            k += 1;
        }
        logp.exp()
    }
}

/// One draw of Z_u: geometric with P(Z ≥ k) = x^{uk}, truncated below the
/// multiplicity bound, via inverse CDF.
fn draw_one(cfg: &SamplerConfig, u: u64, rng: &mut impl Rng) -> u64 {
    let lnq = u as f64 * cfg.x.ln();
    match cfg.bound.as_option() {
        None => {
            let v: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
            (v.ln() / lnq).floor() as u64
        }
        Some(a) => {
            let qa = (lnq * a as f64).exp();
            let v: f64 = rng.gen::<f64>();
            let k = ((1.0 - v * (1.0 - qa)).ln() / lnq).floor() as u64;
            k.min(a - 1)
        }
    }
}

/// Independent draws for every size u ≤ n; the tail is handled by
/// `tail_zero_prob` during rejection.
pub fn draw_independent(cfg: &SamplerConfig, rng: &mut impl Rng) -> MultiplicityVector {
    let mut m = MultiplicityVector::new();
    for &u in &cfg.u.upto(cfg.n) {
        let z = draw_one(cfg, u, rng);
        if z > 0 {
            m.add(u, z);
        }
    }
    m
}

/// A sampled partition together with the number of attempts consumed.
#[derive(Debug, Clone)]
pub struct SampleOutcome {
    pub partition: Partition,
    pub attempts: u64,
}

fn precheck(cfg: &SamplerConfig) -> Result<(), SampleError> {
    let g = cfg.u.gcd();
    if cfg.n % g != 0 {
        return Err(SampleError::Invalid(format!(
            "no partitions of {} into parts with gcd {g}",
            cfg.n
        )));
    }
    Ok(())
}

/// Plain rejection: redraw all coordinates until Σ u·Z_u = n.
pub fn sample_exact(cfg: &SamplerConfig, rng: &mut impl Rng) -> Result<SampleOutcome, SampleError> {
    precheck(cfg)?;
    let sizes = cfg.u.upto(cfg.n);
    let tail_ok = cfg.tail_zero_prob();
    for attempt in 1..=cfg.max_attempts {
        let mut m = MultiplicityVector::new();
        let mut sum = 0u64;
        let mut over = false;
        for &u in &sizes {
            let z = draw_one(cfg, u, rng);
            if z > 0 {
                sum += u * z;
                if sum > cfg.n {
                    over = true;
                    break;
                }
                m.add(u, z);
            }
        }
        if !over && sum == cfg.n && rng.gen::<f64>() < tail_ok {
            return Ok(SampleOutcome {
                partition: m.to_partition(),
                attempts: attempt,
            });
        }
    }
    Err(SampleError::MaxAttempts {
        attempts: cfg.max_attempts,
    })
}

/// Probabilistic divide-and-conquer: the smallest size u₁ is resolved
/// deterministically from the residual R = n − Σ_{u≠u₁} u·Z_u, accepted with
/// probability P(Z_{u₁} = R/u₁)/maxₖ P(Z_{u₁} = k).
pub fn sample_pdc(cfg: &SamplerConfig, rng: &mut impl Rng) -> Result<SampleOutcome, SampleError> {
    precheck(cfg)?;
    let sizes = cfg.u.upto(cfg.n);
    if sizes.is_empty() {
        return Err(SampleError::Invalid("no part sizes ≤ n".into()));
    }
    let u1 = sizes[0];
    let tail_ok = cfg.tail_zero_prob();
    for attempt in 1..=cfg.max_attempts {
        let mut m = MultiplicityVector::new();
        let mut sum = 0u64;
        let mut over = false;
        for &u in &sizes[1..] {
            let z = draw_one(cfg, u, rng);
            if z > 0 {
                sum += u * z;
                if sum > cfg.n {
                    over = true;
                    break;
                }
                m.add(u, z);
            }
        }
        if over || sum > cfg.n {
            continue;
        }
        let r = cfg.n - sum;
        if r % u1 != 0 {
            continue;
        }
        let z1 = r / u1;
        if let Some(a) = cfg.bound.as_option() {
            if z1 >= a {
                continue;
            }
        }
        // The geometric pmf is maximal at 0, so the ratio is x^{u₁·z₁} = x^R.
        let accept = cfg.x.powf(r as f64);
        if rng.gen::<f64>() < accept && rng.gen::<f64>() < tail_ok {
            if z1 > 0 {
                m.add(u1, z1);
            }
            return Ok(SampleOutcome {
                partition: m.to_partition(),
                attempts: attempt,
            });
        }
    }
    Err(SampleError::MaxAttempts {
        attempts: cfg.max_attempts,
    })
}

/// Dispatch on the configured mode.
pub fn sample(cfg: &SamplerConfig, rng: &mut impl Rng) -> Result<SampleOutcome, SampleError> {
    match cfg.mode {
        Mode::Plain => sample_exact(cfg, rng),
        Mode::Pdc => sample_pdc(cfg, rng),
    }
}

/// The deterministic RNG stream of one replica.
pub fn replica_rng(seed: u64, replica: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(replica))
}

/// Scaled-diagram statistics of repeated exact samples against a reference
/// limit shape.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub grid: Vec<f64>,
    pub empirical_mean: Vec<f64>,
    pub q05: Vec<f64>,
    pub q95: Vec<f64>,
    pub theory: Vec<f64>,
    /// Per-replica sup over the grid of |D̂ − reference|.
    pub sup_devs: Vec<f64>,
    /// Per-replica acceptance rate (1 / attempts).
    pub acceptance_rates: Vec<f64>,
    pub replicas: usize,
    pub seed: u64,
}

impl ExperimentReport {
    pub fn mean_sup_dev(&self) -> f64 {
        self.sup_devs.iter().sum::<f64>() / self.sup_devs.len() as f64
    }

    pub fn mean_acceptance_rate(&self) -> f64 {
        self.acceptance_rates.iter().sum::<f64>() / self.acceptance_rates.len() as f64
    }
}

/// Runs `replicas` independent exact samples (one ChaCha stream per replica,
/// derived from seed + index) and aggregates their scaled diagrams.
pub fn run_convergence(
    cfg: &SamplerConfig,
    reference: &ShapeCurve,
    replicas: usize,
    grid: &[f64],
) -> Result<ExperimentReport, SampleError> {
    if replicas == 0 || grid.is_empty() {
        return Err(SampleError::Invalid("need replicas ≥ 1 and a nonempty grid".into()));
    }
    let alpha = (cfg.n as f64).powf(reference.x_exponent);
    let theory: Vec<f64> = grid.iter().map(|&t| reference.eval(t)).collect();
    let one = |i: u64| -> Result<(Vec<f64>, f64), SampleError> {
        let mut rng = replica_rng(cfg.seed, i);
        let out = sample(cfg, &mut rng)?;
        let diag = out
            .partition
            .scaled_diagram(cfg.n, alpha, grid)
            .map_err(SampleError::Invalid)?;
        Ok((diag, 1.0 / out.attempts as f64))
    };
    #[cfg(feature = "parallel")]
    let results: Result<Vec<_>, SampleError> =
        (0..replicas as u64).into_par_iter().map(one).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Result<Vec<_>, SampleError> = (0..replicas as u64).map(one).collect();
    let results = results?;

    let m = grid.len();
    let mut empirical_mean = vec![0.0; m];
    let mut q05 = vec![0.0; m];
    let mut q95 = vec![0.0; m];
    for j in 0..m {
        let mut col: Vec<f64> = results.iter().map(|(d, _)| d[j]).collect();
        col.sort_by(|a, b| a.partial_cmp(b).unwrap());
        empirical_mean[j] = col.iter().sum::<f64>() / col.len() as f64;
        let lo = ((col.len() - 1) as f64 * 0.05).floor() as usize;
        let hi = ((col.len() - 1) as f64 * 0.95).ceil() as usize;
        q05[j] = col[lo];
        q95[j] = col[hi];
    }
    let sup_devs: Vec<f64> = results
        .iter()
        .map(|(d, _)| {
            d.iter()
                .zip(&theory)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max)
        })
        .collect();
    let acceptance_rates: Vec<f64> = results.iter().map(|&(_, r)| r).collect();
    Ok(ExperimentReport {
        grid: grid.to_vec(),
        empirical_mean,
        q05,
        q95,
        theory,
        sup_devs,
        acceptance_rates,
        replicas,
        seed: cfg.seed,
    })
}
