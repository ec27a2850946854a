//! Small statistical toolbox: binned error bars for Markov-chain output and
//! weighted least squares for exponent fits.

use serde::Serialize;

/// A point estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub stderr: f64,
}

impl Estimate {
    pub fn new(value: f64, stderr: f64) -> Self {
        Estimate { value, stderr }
    }

    /// |self - other| in units of the combined standard error.
    pub fn sigma_distance(&self, other: &Estimate) -> f64 {
        let se = (self.stderr * self.stderr + other.stderr * other.stderr).sqrt();
        if se == 0.0 {
            if self.value == other.value {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.value - other.value).abs() / se
        }
    }

    /// Compatibility check against a known constant at `n_sigma`.
    pub fn covers(&self, truth: f64, n_sigma: f64) -> bool {
        (self.value - truth).abs() <= n_sigma * self.stderr
    }
}

/// Mean of a correlated sequence with a binned standard error.
///
/// The sequence is split into `bins` contiguous blocks; the stderr is the
/// empirical standard deviation of the block means over sqrt(bins). Blocks
/// longer than the autocorrelation time make the bars honest. When fewer
/// observations than bins are available every observation is its own bin.
pub fn binned_mean(values: &[f64], bins: usize) -> Estimate {
    assert!(!values.is_empty(), "binned_mean on empty slice");
    let bins = bins.max(1).min(values.len());
    let per = values.len() / bins;
    // Trailing remainder observations are folded into the last bin.
    let mut means = Vec::with_capacity(bins);
    for b in 0..bins {
        let start = b * per;
        let end = if b + 1 == bins {
            values.len()
        } else {
            start + per
        };
        let m: f64 = values[start..end].iter().sum::<f64>() / (end - start) as f64;
        means.push(m);
    }
    let grand: f64 = values.iter().sum::<f64>() / values.len() as f64;
    if bins == 1 {
        return Estimate::new(grand, 0.0);
    }
    let var: f64 =
        means.iter().map(|m| (m - grand) * (m - grand)).sum::<f64>() / (bins as f64 - 1.0);
    Estimate::new(grand, (var / bins as f64).sqrt())
}

/// Default bin count for Markov-chain error bars.
pub const DEFAULT_BINS: usize = 32;

/// Result of a straight-line fit y = intercept + slope * x.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub slope_stderr: f64,
    pub intercept_stderr: f64,
}

/// Weighted least squares for points with known standard errors.
///
/// Weights are 1/sigma_i^2. If any sigma is non-positive the fit falls back
/// to ordinary least squares and the parameter errors are derived from the
/// residual scatter instead.
pub fn weighted_line_fit(xs: &[f64], ys: &[f64], sigmas: &[f64]) -> LineFit {
    assert_eq!(xs.len(), ys.len());
    assert_eq!(xs.len(), sigmas.len());
    assert!(xs.len() >= 2, "need at least two points for a line fit");

    let use_weights = sigmas.iter().all(|&s| s > 0.0);
    let w: Vec<f64> = if use_weights {
        sigmas.iter().map(|&s| 1.0 / (s * s)).collect()
    } else {
        vec![1.0; xs.len()]
    };

    let sw: f64 = w.iter().sum();
    let sx: f64 = w.iter().zip(xs).map(|(w, x)| w * x).sum();
    let sy: f64 = w.iter().zip(ys).map(|(w, y)| w * y).sum();
    let sxx: f64 = w.iter().zip(xs).map(|(w, x)| w * x * x).sum();
    let sxy: f64 = w
        .iter()
        .zip(xs.iter().zip(ys))
        .map(|(w, (x, y))| w * x * y)
        .sum();

    let det = sw * sxx - sx * sx;
    let slope = (sw * sxy - sx * sy) / det;
    let intercept = (sxx * sy - sx * sxy) / det;

    let (slope_var, intercept_var) = if use_weights {
        (sw / det, sxx / det)
    } else {
        // Residual-based errors for the unweighted case.
        let n = xs.len() as f64;
        let dof = (n - 2.0).max(1.0);
        let ss_res: f64 = xs
            .iter()
            .zip(ys)
            .map(|(x, y)| {
                let r = y - intercept - slope * x;
                r * r
            })
            .sum();
        let s2 = ss_res / dof;
        (s2 * sw / det, s2 * sxx / det)
    };

    LineFit {
        slope,
        intercept,
        slope_stderr: slope_var.max(0.0).sqrt(),
        intercept_stderr: intercept_var.max(0.0).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binned_mean_constant_sequence() {
        let v = vec![2.5; 100];
        let e = binned_mean(&v, 32);
        assert_eq!(e.value, 2.5);
        assert_eq!(e.stderr, 0.0);
    }

    #[test]
    fn binned_mean_fewer_samples_than_bins() {
        let v = vec![1.0, 2.0, 3.0];
        let e = binned_mean(&v, 32);
        assert!((e.value - 2.0).abs() < 1e-15);
        assert!(e.stderr > 0.0);
    }

    #[test]
    fn exact_line_recovered() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let ys: Vec<f64> = xs.iter().map(|x| 1.5 - 0.25 * x).collect();
        let fit = weighted_line_fit(&xs, &ys, &[0.0; 4]);
        assert!((fit.slope + 0.25).abs() < 1e-12);
        assert!((fit.intercept - 1.5).abs() < 1e-12);
        assert!(fit.slope_stderr < 1e-10);
    }

    #[test]
    fn weights_favour_precise_points() {
        let xs = [0.0, 1.0, 2.0];
        // Middle point has a huge error bar and a wild value.
        let ys = [0.0, 100.0, 2.0];
        let sigmas = [0.01, 1000.0, 0.01];
        let fit = weighted_line_fit(&xs, &ys, &sigmas);
        assert!((fit.slope - 1.0).abs() < 1e-3);
    }
}
