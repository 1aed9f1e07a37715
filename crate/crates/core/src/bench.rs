//! Oracle versus closed-form timing.

use std::hint::black_box;
use std::time::{Duration, Instant};

use crate::closed_forms::{eval_pair, IdentityId, IdentityParams};
use crate::integers::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct BenchResult {
    pub id: IdentityId,
    pub params: IdentityParams,
    /// The common value of both sides, checked before timing.
    pub value: Rational,
    pub reps: usize,
    pub oracle_median: Duration,
    pub closed_median: Duration,
}

impl BenchResult {
    /// `oracle / closed`; infinite when the closed form rounds to zero time.
    pub fn speedup(&self) -> f64 {
        let closed = self.closed_median.as_secs_f64();
        if closed == 0.0 {
            f64::INFINITY
        } else {
            self.oracle_median.as_secs_f64() / closed
        }
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

fn time<T>(reps: usize, mut f: impl FnMut() -> Result<T>) -> Result<Duration> {
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        black_box(f()?);
        samples.push(start.elapsed());
    }
    Ok(median(samples))
}

/// Verify `id` at `params`, then time `reps` evaluations of each side.
pub fn bench(id: IdentityId, params: &IdentityParams, reps: usize) -> Result<BenchResult> {
    let reps = reps.max(1);
    let pair = eval_pair(id, params)?;
    if !pair.matched {
        return Err(Error::Mismatch {
            id,
            lhs: pair.lhs.to_string(),
            rhs: pair.rhs.to_string(),
        });
    }
    let d = id.descriptor();
    let lhs = d.lhs_embedding(params)?;
    let oracle_median = time(reps, || lhs.evaluate())?;
    let closed_median = time(reps, || d.rhs(params))?;
    Ok(BenchResult {
        id,
        params: *params,
        value: pair.lhs,
        reps,
        oracle_median,
        closed_median,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_odd_and_even() {
        let ms = Duration::from_millis;
        assert_eq!(median(vec![ms(3), ms(1), ms(2)]), ms(2));
        assert_eq!(median(vec![ms(4), ms(1), ms(2), ms(3)]), Duration::from_micros(2500));
    }

    #[test]
    fn bench_small_point() {
        let params = IdentityParams {
            n: 0,
            ..Default::default()
        };
        let r = bench(IdentityId::F1, &params, 3).unwrap();
        assert_eq!(r.reps, 3);
        assert!(r.speedup() > 0.0);
    }

    #[test]
    fn bench_rejects_inapplicable() {
        let params = IdentityParams {
            n: 2,
            p: 0,
            ..Default::default()
        };
        assert!(matches!(
            bench(IdentityId::Q13, &params, 1),
            Err(Error::Inapplicable { .. })
        ));
    }
}
