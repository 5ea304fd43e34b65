//! Random oriented graphs and the concentration of the minimum 2-path count.
//!
//! In the model each unordered pair independently gets the arc `u -> v` with
//! probability `p`, `v -> u` with probability `p`, and no arc otherwise. With
//! `p = 1/2` this is a uniformly random tournament.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extend::is_path_extendable;
use crate::tournament::Tournament;
use crate::verify::sample_seed;

/// Largest order accepted by the experiments; `π₂` costs `n³/64` word ops.
pub const MAX_ORIENTED_ORDER: usize = 2048;

/// Oriented graph with multi-word bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    words: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl OrientedGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Argument(format!("need at least 2 vertices, got {n}")));
        }
        if n > MAX_ORIENTED_ORDER {
            return Err(Error::Capacity(format!("oriented graphs stop at {MAX_ORIENTED_ORDER} vertices, got {n}")));
        }
        let words = n.div_ceil(64);
        Ok(OrientedGraph { n, words, out: vec![0; n * words], inn: vec![0; n * words] })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn set_arc(&mut self, u: usize, v: usize) {
        self.out[u * self.words + v / 64] |= 1 << (v % 64);
        self.inn[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn out_row(&self, u: usize) -> &[u64] {
        &self.out[u * self.words..(u + 1) * self.words]
    }

    fn in_row(&self, v: usize) -> &[u64] {
        &self.inn[v * self.words..(v + 1) * self.words]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of `w` with `u -> w -> v`.
    pub fn p2(&self, u: usize, v: usize) -> usize {
        self.out_row(u).iter().zip(self.in_row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Minimum of `p2` over ordered pairs of distinct vertices.
    pub fn pi2(&self) -> usize {
        let mut best = usize::MAX;
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v {
                    best = best.min(self.p2(u, v));
                    if best == 0 {
                        return 0;
                    }
                }
            }
        }
        best
    }

    /// The same graph as a tournament, if every pair carries an arc and
    /// the order fits.
    pub fn to_tournament(&self) -> Result<Tournament> {
        if self.n > crate::tournament::MAX_VERTICES {
            return Err(Error::Capacity(format!("{} vertices exceed the tournament limit", self.n)));
        }
        let rows = (0..self.n).map(|u| self.out_row(u)[0] as u32).collect();
        Tournament::from_rows(rows)
    }
}

fn check_p(p: f64) -> Result<()> {
    if !(p > 0.0 && p <= 0.5) {
        return Err(Error::Argument(format!("arc probability must lie in (0, 1/2], got {p}")));
    }
    Ok(())
}

/// Draws one uniform `f64` per pair in lexicographic pair order.
pub fn random_oriented_from(n: usize, p: f64, rng: &mut impl Rng) -> Result<OrientedGraph> {
    check_p(p)?;
    let mut g = OrientedGraph::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            let x: f64 = rng.gen();
            if x < p {
                g.set_arc(i, j);
            } else if x < 2.0 * p {
                g.set_arc(j, i);
            }
        }
    }
    Ok(g)
}

pub fn random_oriented(n: usize, p: f64, seed: u64) -> Result<OrientedGraph> {
    random_oriented_from(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// `e^{-x} / (1-x)^{1-x}`, evaluated in log space.
pub fn chernoff_g(x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!("g is defined on [0, 1), got {x}")));
    }
    Ok((-x - (1.0 - x) * (-x).ln_1p()).exp())
}

/// Union bound `n(n-1) g(ε)^{(n-2)p²}` on `Pr[π₂ < (p² − ε)n]`.
pub fn tail_bound(n: usize, p: f64, epsilon: f64) -> Result<f64> {
    let g = chernoff_g(epsilon)?;
    let n = n as f64;
    Ok(n * (n - 1.0) * g.powf((n - 2.0) * p * p))
}

/// Parameters and, once run, results of the tail experiment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailExperiment {
    pub n: usize,
    pub p: f64,
    pub epsilon: f64,
    pub trials: u64,
    pub seed: u64,
    #[serde(default)]
    pub observed_failures: u64,
    #[serde(default)]
    pub bound: f64,
}

impl TailExperiment {
    pub fn new(n: usize, p: f64, epsilon: f64, trials: u64, seed: u64) -> Result<Self> {
        let spec = TailExperiment { n, p, epsilon, trials, seed, observed_failures: 0, bound: 0.0 };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        check_p(self.p)?;
        if !(self.epsilon > 0.0 && self.epsilon < self.p * self.p) {
            return Err(Error::Argument(format!(
                "epsilon must lie in (0, p^2) = (0, {}), got {}",
                self.p * self.p,
                self.epsilon
            )));
        }
        if self.trials == 0 {
            return Err(Error::Argument("trials must be positive".into()));
        }
        OrientedGraph::empty(self.n).map(|_| ())
    }

    /// `(p² − ε) n`.
    pub fn threshold(&self) -> f64 {
        (self.p * self.p - self.epsilon) * self.n as f64
    }

    pub fn observed_fraction(&self) -> f64 {
        self.observed_failures as f64 / self.trials as f64
    }

    /// Sampling slack `4·sqrt(bound / trials)` allowed above `min(1, bound)`.
    pub fn slack(&self) -> f64 {
        4.0 * (self.bound / self.trials as f64).sqrt()
    }

    /// Whether the observed fraction respects the bound. Only meaningful when
    /// the bound is below 1; otherwise it holds trivially.
    pub fn within_bound(&self) -> bool {
        self.bound >= 1.0 || self.observed_fraction() <= self.bound.min(1.0) + self.slack()
    }
}

/// One trial's outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailRow {
    pub trial: u64,
    pub pi2: usize,
    pub threshold: f64,
    pub below_threshold: bool,
}

/// Generator of trial `index`: ChaCha8 under `seed`, stream `index`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Runs every trial; rows come back in trial order whatever the thread count.
pub fn pi2_tail_experiment(spec: &TailExperiment) -> Result<(TailExperiment, Vec<TailRow>)> {
    spec.validate()?;
    let threshold = spec.threshold();
    let rows: Vec<TailRow> = (0..spec.trials)
        .into_par_iter()
        .map(|trial| -> Result<TailRow> {
            let g = random_oriented_from(spec.n, spec.p, &mut trial_rng(spec.seed, trial))?;
            let pi2 = g.pi2();
            Ok(TailRow { trial, pi2, threshold, below_threshold: (pi2 as f64) < threshold })
        })
        .collect::<Result<_>>()?;
    let mut filled = spec.clone();
    filled.observed_failures = rows.iter().filter(|r| r.below_threshold).count() as u64;
    filled.bound = tail_bound(spec.n, spec.p, spec.epsilon)?;
    Ok((filled, rows))
}

/// Writes trial rows as CSV with a header line.
pub fn write_tail_csv<W: std::io::Write>(rows: &[TailRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

/// Fraction of random tournaments that are path extendable, per order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrendPoint {
    pub n: usize,
    pub samples: u64,
    pub extendable: u64,
    pub fraction: f64,
}

/// Samples `samples` tournaments of each order; sample `i` of order `n`
/// uses seed `sample_seed(seed ^ n, i)`.
pub fn extendability_trend(orders: &[usize], samples: u64, seed: u64) -> Result<Vec<TrendPoint>> {
    orders
        .iter()
        .map(|&n| {
            let extendable = (0..samples)
                .into_par_iter()
                .map(|i| -> Result<u64> {
                    let t = crate::construct::random_tournament(n, sample_seed(seed ^ n as u64, i))?;
                    Ok(u64::from(is_path_extendable(&t, 1)?.extendable))
                })
                .try_reduce(|| 0, |a, b| Ok(a + b))?;
            Ok(TrendPoint { n, samples, extendable, fraction: extendable as f64 / samples as f64 })
        })
        .collect()
}

/// Whether the fractions never decrease along the list.
pub fn is_nondecreasing(points: &[TrendPoint]) -> bool {
    points.windows(2).all(|w| w[0].fraction <= w[1].fraction)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_probability_gives_tournaments() {
        for seed in 0..50 {
            let g = random_oriented(12, 0.5, seed).unwrap();
            assert_eq!(g.arc_count(), 66);
            assert!(g.to_tournament().unwrap().validate());
        }
    }

    #[test]
    fn quarter_probability_orients_about_half() {
        let g = random_oriented(100, 0.25, 7).unwrap();
        let frac = g.arc_count() as f64 / 4950.0;
        // 3σ of a binomial(4950, 1/2) proportion is about 0.021.
        assert!((frac - 0.5).abs() <= 0.05, "{frac}");
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(random_oriented(40, 0.3, 11).unwrap(), random_oriented(40, 0.3, 11).unwrap());
        assert_ne!(random_oriented(40, 0.3, 11).unwrap(), random_oriented(40, 0.3, 12).unwrap());
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(random_oriented(10, 0.0, 1), Err(Error::Argument(_))));
        assert!(matches!(random_oriented(10, 0.6, 1), Err(Error::Argument(_))));
        assert!(matches!(random_oriented(5000, 0.5, 1), Err(Error::Capacity(_))));
        assert!(matches!(chernoff_g(1.0), Err(Error::Domain(_))));
        assert!(matches!(chernoff_g(-0.1), Err(Error::Domain(_))));
        assert!(TailExperiment::new(10, 0.5, 0.25, 10, 0).is_err());
    }

    #[test]
    fn g_values() {
        assert_eq!(chernoff_g(0.0).unwrap(), 1.0);
        let (a, b) = (chernoff_g(0.1).unwrap(), chernoff_g(0.2).unwrap());
        assert!(0.0 < a && a < 1.0);
        assert!(b < a);
        // Direct formula away from zero.
        let x: f64 = 0.2;
        assert!((b - (-x).exp() / (1.0 - x).powf(1.0 - x)).abs() < 1e-15);
    }

    #[test]
    fn multiword_p2_matches_naive() {
        let g = random_oriented(130, 0.4, 3).unwrap();
        for (u, v) in [(0, 1), (5, 129), (128, 64), (77, 3)] {
            let naive = (0..130).filter(|&w| g.has_arc(u, w) && g.has_arc(w, v)).count();
            assert_eq!(g.p2(u, v), naive);
        }
    }

    #[test]
    fn tournament_pi2_agrees() {
        for seed in 0..20 {
            let g = random_oriented(11, 0.5, seed).unwrap();
            assert_eq!(g.pi2(), crate::metrics::pi2(&g.to_tournament().unwrap()));
        }
    }

    #[test]
    fn tail_experiment_reproducible() {
        let spec = TailExperiment::new(10, 0.5, 0.05, 10_000, 99).unwrap();
        let a = pi2_tail_experiment(&spec).unwrap();
        let b = pi2_tail_experiment(&spec).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn failures_shrink_as_epsilon_grows() {
        let mut last = u64::MAX;
        for eps in [0.05, 0.1, 0.2, 0.25 - 1e-9] {
            let spec = TailExperiment::new(30, 0.5, eps, 200, 5).unwrap();
            let (res, rows) = pi2_tail_experiment(&spec).unwrap();
            assert!(res.observed_failures <= last);
            last = res.observed_failures;
            if eps > 0.24 {
                // The threshold is a hair above zero: only π₂ = 0 counts.
                assert_eq!(res.observed_failures, rows.iter().filter(|r| r.pi2 == 0).count() as u64);
            }
        }
    }
}
