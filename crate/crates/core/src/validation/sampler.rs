/// Additive-recurrence low-discrepancy points in `[0, 1)^DIM`.
///
/// Used wherever the suite wants "random" inputs: the sequence is fixed, so
/// every run sees the same points.
#[derive(Debug, Clone)]
pub struct WeylSampler<const DIM: usize> {
    alpha: [f64; DIM],
    n: u64,
}

impl<const DIM: usize> WeylSampler<DIM> {
    pub fn new() -> Self {
        // Generalised golden ratio: the positive root of x^(DIM+1) = x + 1.
        let mut g = 2.0_f64;
        for _ in 0..64 {
            g = libm::pow(1.0 + g, 1.0 / (DIM as f64 + 1.0));
        }
        let mut alpha = [0.0; DIM];
        for (k, v) in alpha.iter_mut().enumerate() {
            *v = fract(1.0 / libm::pow(g, k as f64 + 1.0));
        }
        Self { alpha, n: 0 }
    }

    pub fn next_point(&mut self) -> [f64; DIM] {
        self.n += 1;
        let n = self.n as f64;
        let mut out = [0.0; DIM];
        for (o, a) in out.iter_mut().zip(self.alpha) {
            *o = fract(0.5 + a * n);
        }
        out
    }
}

impl<const DIM: usize> Default for WeylSampler<DIM> {
    fn default() -> Self {
        Self::new()
    }
}

fn fract(x: f64) -> f64 {
    x - libm::floor(x)
}

/// Maps `u ∈ [0, 1)` onto `[lo, hi)` logarithmically.
pub fn log_uniform(u: f64, lo: f64, hi: f64) -> f64 {
    lo * libm::pow(hi / lo, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_in_range() {
        let mut a = WeylSampler::<3>::new();
        let mut b = WeylSampler::<3>::new();
        for _ in 0..500 {
            let p = a.next_point();
            assert_eq!(p, b.next_point());
            assert!(p.iter().all(|v| (0.0..1.0).contains(v)));
        }
    }

    #[test]
    fn spreads_over_unit_interval() {
        let mut s = WeylSampler::<1>::new();
        let mut bins = [0usize; 10];
        for _ in 0..1000 {
            bins[(s.next_point()[0] * 10.0) as usize] += 1;
        }
        assert!(bins.iter().all(|&c| (90..=110).contains(&c)), "{bins:?}");
    }

    #[test]
    fn log_uniform_endpoints() {
        assert_eq!(log_uniform(0.0, 0.1, 10.0), 0.1);
        assert!((log_uniform(0.5, 0.1, 10.0) - 1.0).abs() < 1e-15);
    }
}
