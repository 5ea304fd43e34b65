use statrs::distribution::{Binomial, ChiSquared, ContinuousCDF, Discrete};

use pathext::construct::random_tournament;
use pathext::montecarlo::{
    chernoff_g, extendability_trend, pi2_tail_experiment, random_oriented, tail_bound, write_tail_csv, TailExperiment,
};

const SAMPLES: u64 = 10_000;
const ALPHA: f64 = 0.001;

fn degree_histogram(n: usize, degree: impl Fn(u64) -> usize) -> Vec<f64> {
    let mut h = vec![0.0; n];
    for s in 0..SAMPLES {
        h[degree(s)] += 1.0;
    }
    h
}

fn critical(df: usize) -> f64 {
    ChiSquared::new(df as f64).unwrap().inverse_cdf(1.0 - ALPHA)
}

#[test]
fn oriented_half_matches_tournament_degrees() {
    let n = 9;
    let a = degree_histogram(n, |s| random_oriented(n, 0.5, s).unwrap().out_degree(0));
    let b = degree_histogram(n, |s| random_tournament(n, 1_000_000 + s).unwrap().out_degree(0).unwrap());

    // Goodness of fit of each against Binomial(n − 1, 1/2).
    let binom = Binomial::new(0.5, (n - 1) as u64).unwrap();
    for h in [&a, &b] {
        let stat: f64 = (0..n)
            .map(|k| {
                let e = binom.pmf(k as u64) * SAMPLES as f64;
                (h[k] - e).powi(2) / e
            })
            .sum();
        assert!(stat < critical(n - 1), "goodness of fit {stat}");
    }

    // Two-sample homogeneity.
    let stat: f64 = (0..n)
        .filter(|&k| a[k] + b[k] > 0.0)
        .map(|k| {
            let e = (a[k] + b[k]) / 2.0;
            (a[k] - e).powi(2) / e + (b[k] - e).powi(2) / e
        })
        .sum();
    assert!(stat < critical(n - 1), "homogeneity {stat}");
}

#[test]
fn chernoff_function_shape() {
    assert_eq!(chernoff_g(0.0).unwrap(), 1.0);
    let grid: Vec<f64> = (1..=100).map(|i| 0.25 * i as f64 / 101.0).collect();
    let values: Vec<f64> = grid.iter().map(|&x| chernoff_g(x).unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] < w[0]));
    assert!(values.iter().all(|&g| g > 0.0 && g < 1.0));
    assert!(chernoff_g(1.0).is_err() && chernoff_g(-0.1).is_err());
}

#[test]
fn tail_experiment_respects_bound_where_informative() {
    // The bound only drops below 1 near the top of the supported range.
    let b = tail_bound(2000, 0.5, 0.24).unwrap();
    assert!(b < 1.0, "{b}");
    let spec = TailExperiment::new(2000, 0.5, 0.24, 3, 5).unwrap();
    let (done, rows) = pi2_tail_experiment(&spec).unwrap();
    assert_eq!(rows.len(), 3);
    assert!(done.within_bound());
    assert_eq!(done.observed_failures, 0);
}

#[test]
fn tail_csv_has_one_row_per_trial() {
    let spec = TailExperiment::new(30, 0.5, 0.1, 12, 1).unwrap();
    let (_, rows) = pi2_tail_experiment(&spec).unwrap();
    let mut buf = Vec::new();
    write_tail_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("trial,pi2,threshold,below_threshold"));
    assert_eq!(lines.count(), 12);
}

/// The fraction of path-extendable random tournaments is expected to rise
/// with the order. This is a statistical trend, so the hard assertion is
/// limited to the endpoints; monotonicity along the whole list is only
/// reported.
#[test]
fn extendability_trend_rises() {
    let orders = [5, 7, 9, 11, 13, 15];
    let points = extendability_trend(&orders, 200, 2024).unwrap();
    for p in &points {
        eprintln!("n={:>2} extendable {:>3}/{} ({:.3})", p.n, p.extendable, p.samples, p.fraction);
    }
    eprintln!("nondecreasing: {}", pathext::montecarlo::is_nondecreasing(&points));
    assert!(points.last().unwrap().fraction > points[0].fraction);
    assert_eq!(points, extendability_trend(&orders, 200, 2024).unwrap());
}
