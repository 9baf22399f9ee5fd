//! Geometry of a zero locus on the unit circle.

use serde::Serialize;

use super::{Root, ZerosError};

/// `π/3`, the endpoint of the trivalent arc.
pub const EDGE_ANGLE: f64 = std::f64::consts::FRAC_PI_3;

/// Angles this close past the edge are binned as on it.
const EDGE_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitCircleReport {
    /// `||r| − 1|` per root, in input order.
    pub deviations: Vec<f64>,
    pub max_deviation: f64,
    /// Indices of roots whose deviation exceeds the tolerance.
    pub off_circle: Vec<usize>,
    pub pass: bool,
}

pub fn unit_circle_report(roots: &[Root], tol: f64) -> UnitCircleReport {
    let deviations: Vec<f64> = roots.iter().map(|r| (r.modulus() - 1.0).abs()).collect();
    let off_circle: Vec<usize> = deviations
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > tol)
        .map(|(i, _)| i)
        .collect();
    UnitCircleReport {
        max_deviation: deviations.iter().copied().fold(0.0, f64::max),
        pass: off_circle.is_empty(),
        deviations,
        off_circle,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ArcBounds {
    pub min_re: f64,
    pub max_abs_arg: f64,
    pub min_abs_arg: f64,
}

/// Extent of a locus that lies on the unit circle within `tol`.
pub fn arc_bounds(roots: &[Root], tol: f64) -> Result<ArcBounds, ZerosError> {
    if let Some(&index) = unit_circle_report(roots, tol).off_circle.first() {
        return Err(ZerosError::OffCircle {
            index,
            deviation: (roots[index].modulus() - 1.0).abs(),
        });
    }
    let args = roots.iter().map(|r| r.arg().abs());
    Ok(ArcBounds {
        min_re: roots.iter().map(|r| r.re).fold(f64::INFINITY, f64::min),
        max_abs_arg: args.clone().fold(0.0, f64::max),
        min_abs_arg: args.fold(f64::INFINITY, f64::min),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Histogram {
    /// Bin `k` covers `|arg| ∈ [k w, (k+1) w)` with `w = edge / bins`; the last bin is closed.
    pub edge: f64,
    pub counts: Vec<usize>,
    /// Roots with `|arg| > edge + 1e-9`.
    pub outside: usize,
}

impl Histogram {
    pub fn bin_width(&self) -> f64 {
        self.edge / self.counts.len() as f64
    }
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
    /// Index of the fullest bin (the first one on ties); `None` when empty.
    pub fn argmax(&self) -> Option<usize> {
        let max = *self.counts.iter().max()?;
        (max > 0).then(|| self.counts.iter().position(|&c| c == max).expect("present"))
    }
}

/// Histogram of `|arg r|` over `[0, edge]`. Conjugate roots land in the same bin.
pub fn angular_density(roots: &[Root], bins: usize, edge: f64) -> Histogram {
    histogram(roots.iter().map(|r| r.arg().abs()), bins, edge)
}

fn histogram(angles: impl Iterator<Item = f64>, bins: usize, edge: f64) -> Histogram {
    let mut counts = vec![0; bins];
    let mut outside = 0;
    if bins == 0 {
        return Histogram {
            edge,
            counts,
            outside: angles.count(),
        };
    }
    let w = edge / bins as f64;
    for a in angles {
        if a > edge + EDGE_SLACK {
            outside += 1;
        } else {
            counts[((a / w) as usize).min(bins - 1)] += 1;
        }
    }
    Histogram {
        edge,
        counts,
        outside,
    }
}

/// Binning and window of the edge fit.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeFitConfig {
    pub bins: usize,
    pub edge: f64,
    /// Bins next to the edge left out of the fit.
    pub skip: usize,
    /// The fit spans distances from `skip·w` to `skip·w·span` from the edge.
    pub span: f64,
    /// Minimum pooled sample size.
    pub min_points: usize,
}

impl Default for EdgeFitConfig {
    fn default() -> Self {
        EdgeFitConfig {
            bins: 64,
            edge: EDGE_ANGLE,
            skip: 2,
            span: 10.0,
            min_points: 200,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdgeFit {
    /// Slope of `log density` against `log(edge − θ)`.
    pub exponent: f64,
    pub intercept: f64,
    /// RMS deviation of the fitted logs.
    pub residual: f64,
    pub bins_used: usize,
    pub points: usize,
}

/// Least-squares power law `density ∝ (edge − |θ|)^exponent` near the edge.
pub fn edge_exponent(roots: &[Root], cfg: &EdgeFitConfig) -> Result<EdgeFit, ZerosError> {
    edge_exponent_angles(
        &roots.iter().map(|r| r.arg().abs()).collect::<Vec<_>>(),
        cfg,
    )
}

/// [`edge_exponent`] on raw angles.
pub fn edge_exponent_angles(angles: &[f64], cfg: &EdgeFitConfig) -> Result<EdgeFit, ZerosError> {
    if angles.len() < cfg.min_points {
        return Err(ZerosError::InsufficientData {
            needed: cfg.min_points,
            got: angles.len(),
        });
    }
    let h = histogram(angles.iter().map(|a| a.abs()), cfg.bins, cfg.edge);
    let w = h.bin_width();
    let total = angles.len() as f64;
    let far = ((cfg.skip as f64 * cfg.span).round() as usize).min(cfg.bins);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    // distance index k counts bins inward from the edge
    for k in cfg.skip..far {
        let c = h.counts[cfg.bins - 1 - k];
        if c > 0 {
            xs.push(((k as f64 + 0.5) * w).ln());
            ys.push((c as f64 / (total * w)).ln());
        }
    }
    if xs.len() < 3 {
        return Err(ZerosError::InsufficientData {
            needed: 3,
            got: xs.len(),
        });
    }
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let residual = (xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - exponent * x).powi(2))
        .sum::<f64>()
        / m)
        .sqrt();
    Ok(EdgeFit {
        exponent,
        intercept,
        residual,
        bins_used: xs.len(),
        points: angles.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn on_circle(th: f64) -> Root {
        Root {
            re: th.cos(),
            im: th.sin(),
            residual: 0.0,
            radius: 0.0,
        }
    }

    #[test]
    fn report_flags_off_circle() {
        let roots = [
            on_circle(0.3),
            Root {
                re: 2.0,
                im: 0.0,
                residual: 0.0,
                radius: 0.0,
            },
        ];
        let r = unit_circle_report(&roots, 1e-10);
        assert_eq!(r.off_circle, vec![1]);
        assert!((r.max_deviation - 1.0).abs() < 1e-15);
        assert!(!r.pass);
        assert!(matches!(
            arc_bounds(&roots, 1e-10),
            Err(ZerosError::OffCircle { index: 1, .. })
        ));
    }

    #[test]
    fn empty_inputs() {
        let h = angular_density(&[], 64, EDGE_ANGLE);
        assert_eq!(h.total(), 0);
        assert_eq!(h.argmax(), None);
        assert!(matches!(
            edge_exponent(&[], &EdgeFitConfig::default()),
            Err(ZerosError::InsufficientData { .. })
        ));
    }

    #[test]
    fn stratified_square_root_law() {
        // θ = θc − θc u², so the distance to the edge has density ∝ d^{-1/2}
        let n = 20_000;
        let angles: Vec<f64> = (0..n)
            .map(|i| {
                let u = (i as f64 + 0.5) / n as f64;
                EDGE_ANGLE * (1.0 - u * u)
            })
            .collect();
        let fit = edge_exponent_angles(&angles, &EdgeFitConfig::default()).unwrap();
        assert!((fit.exponent + 0.5).abs() < 0.02, "{fit:?}");
    }
}
