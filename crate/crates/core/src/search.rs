//! Global sup-search of continuous functions on the unit circle or on
//! `[-1, 1]`.
//!
//! Both domains are parametrized by an angle: `z = e^{i theta}` with
//! `theta in [0, 2pi)` on the circle, `x = cos theta` with `theta in [0, pi]`
//! on the interval (so the interval grid is Chebyshev distributed). A
//! uniform grid is scanned, the best local maxima are refined by golden
//! section, and the largest value ever evaluated is returned. The reported
//! value is therefore always a value of the function, i.e. a lower bound of
//! the true supremum.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{LejaError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Lower limit on the number of grid points.
    pub min_grid: usize,
    /// Grid points per node.
    pub grid_mult: usize,
    /// Number of grid local maxima refined by golden section.
    pub refine_brackets: usize,
    /// Target bracket width (in angle) for refinement.
    pub bracket_width: f64,
    /// Relative spread of the last refinement step accepted when the
    /// iteration cap is hit before `bracket_width` is reached.
    pub tol_rel: f64,
    pub max_refine_iters: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            min_grid: 8192,
            grid_mult: 64,
            refine_brackets: 16,
            bracket_width: 1e-12,
            tol_rel: 1e-6,
            max_refine_iters: 200,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_mult < 4 {
            return Err(LejaError::InvalidConfig("grid multiplier must be >= 4".into()));
        }
        if self.refine_brackets == 0 {
            return Err(LejaError::InvalidConfig("at least one refinement bracket".into()));
        }
        if self.min_grid < 16 {
            return Err(LejaError::InvalidConfig("minimum grid must be >= 16".into()));
        }
        if !(self.bracket_width > 0.0 && self.tol_rel > 0.0) {
            return Err(LejaError::InvalidConfig("tolerances must be positive".into()));
        }
        Ok(())
    }

    /// Grid size for a function built on `k` dyadic nodes.
    ///
    /// Rounded up to a multiple of `2^(floor(log2 k) + 2)` so that the
    /// half-cell offset grid never lands on a node angle.
    pub fn grid_size(&self, k: usize) -> usize {
        let raw = self.min_grid.max(self.grid_mult.saturating_mul(k)).max(4 * k);
        let bits = usize::BITS - k.max(1).leading_zeros();
        let align = 1usize << (bits + 1).min(30);
        raw.div_ceil(align) * align
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchDomain {
    /// `theta in [0, 2pi)`, periodic.
    Circle,
    /// `theta in [0, pi]`, `x = cos theta`.
    Interval,
}

impl SearchDomain {
    fn length(&self) -> f64 {
        match self {
            SearchDomain::Circle => 2.0 * PI,
            SearchDomain::Interval => PI,
        }
    }

    fn normalize(&self, theta: f64) -> f64 {
        match self {
            SearchDomain::Circle => theta.rem_euclid(2.0 * PI),
            SearchDomain::Interval => theta.clamp(0.0, PI),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStatus {
    Converged,
    /// A refinement hit its iteration cap or a non-finite value was seen.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupResult {
    pub value: f64,
    /// Parameter angle of the maximizer.
    pub theta: f64,
    pub status: SearchStatus,
}

impl SupResult {
    pub fn is_conclusive(&self) -> bool {
        self.status == SearchStatus::Converged
    }
}

pub(crate) fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sup-search of a scalar function.
pub fn sup_search<F>(f: F, domain: SearchDomain, k: usize, cfg: &SearchConfig, extra: &[f64]) -> SupResult
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    let [r] = sup_search_many(|t| [f(t)], domain, k, cfg, extra);
    r
}

/// Sup-search of `N` functions sharing one grid pass. Each component is
/// refined independently. `extra` lists parameter angles that are always
/// evaluated as candidates (e.g. the next node of a sequence).
pub fn sup_search_many<const N: usize, F>(
    f: F,
    domain: SearchDomain,
    k: usize,
    cfg: &SearchConfig,
    extra: &[f64],
) -> [SupResult; N]
where
    F: Fn(f64) -> [f64; N] + Sync + Send,
{
    let m = cfg.grid_size(k);
    let step = domain.length() / m as f64;
    let theta = |i: usize| (i as f64 + 0.5) * step;
    let grid: Vec<[f64; N]> = par_map(m, |i| f(theta(i)));
    let extra_vals: Vec<[f64; N]> = extra.iter().map(|&t| f(t)).collect();

    std::array::from_fn(|c| {
        let g: Vec<f64> = grid.iter().map(|v| v[c]).collect();
        let mut status = SearchStatus::Converged;
        if g.iter().any(|v| !v.is_finite()) {
            status = SearchStatus::Inconclusive;
        }
        let mut best = Candidate { value: f64::NEG_INFINITY, theta: 0.0 };
        for (i, &v) in g.iter().enumerate() {
            best.offer(v, theta(i));
        }
        for (t, v) in extra.iter().zip(&extra_vals) {
            if !v[c].is_finite() {
                status = SearchStatus::Inconclusive;
            }
            best.offer(v[c], domain.normalize(*t));
        }

        let picks = top_local_maxima(&g, domain, cfg.refine_brackets);
        let refined: Vec<(Candidate, bool)> = par_map(picks.len(), |q| {
            let i = picks[q];
            let lo = theta(i) - step;
            let hi = theta(i) + step;
            let (lo, hi) = match domain {
                SearchDomain::Circle => (lo, hi),
                SearchDomain::Interval => (lo.max(0.0), hi.min(PI)),
            };
            golden_max(|t| f(t)[c], lo, hi, cfg)
        });
        for (cand, ok) in refined {
            if !ok {
                status = SearchStatus::Inconclusive;
            }
            best.offer(cand.value, domain.normalize(cand.theta));
        }
        SupResult { value: best.value, theta: best.theta, status }
    })
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: f64,
    theta: f64,
}

impl Candidate {
    fn offer(&mut self, value: f64, theta: f64) {
        if !value.is_finite() {
            return;
        }
        if value > self.value || (value == self.value && theta < self.theta) {
            self.value = value;
            self.theta = theta;
        }
    }
}

/// Indices of the `t` grid local maxima with the largest parabolic peak
/// estimates. Falls back to the plain argmax on plateaus.
fn top_local_maxima(g: &[f64], domain: SearchDomain, t: usize) -> Vec<usize> {
    let m = g.len();
    let at = |i: isize| -> f64 {
        match domain {
            SearchDomain::Circle => g[i.rem_euclid(m as isize) as usize],
            SearchDomain::Interval => {
                if i < 0 || i >= m as isize {
                    f64::NEG_INFINITY
                } else {
                    g[i as usize]
                }
            }
        }
    };
    let mut peaks: Vec<(f64, usize)> = Vec::new();
    for i in 0..m {
        let (a, b, c) = (at(i as isize - 1), g[i], at(i as isize + 1));
        if !(b.is_finite() && b > a && b >= c) {
            continue;
        }
        let curv = a - 2.0 * b + c;
        let est = if a.is_finite() && c.is_finite() && curv < 0.0 {
            b - (a - c) * (a - c) / (8.0 * curv)
        } else {
            b
        };
        peaks.push((est, i));
    }
    if peaks.is_empty() {
        let i = g
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_finite())
            .fold((0usize, f64::NEG_INFINITY), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc })
            .0;
        return vec![i];
    }
    peaks.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)));
    peaks.truncate(t);
    peaks.into_iter().map(|(_, i)| i).collect()
}

/// Golden-section maximization on `[lo, hi]`. Returns the best point seen
/// and whether the bracket converged within the iteration cap.
fn golden_max<G: Fn(f64) -> f64>(g: G, lo: f64, hi: f64, cfg: &SearchConfig) -> (Candidate, bool) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = g(c);
    let mut fd = g(d);
    let mut best = Candidate { value: f64::NEG_INFINITY, theta: 0.0 };
    best.offer(fc, c);
    best.offer(fd, d);
    let mut iters = 0;
    while b - a > cfg.bracket_width && iters < cfg.max_refine_iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = g(c);
            best.offer(fc, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = g(d);
            best.offer(fd, d);
        }
        iters += 1;
    }
    let finite = fc.is_finite() && fd.is_finite();
    let scale = fc.abs().max(fd.abs()).max(f64::MIN_POSITIVE);
    let ok = finite && (b - a <= cfg.bracket_width || (fc - fd).abs() <= cfg.tol_rel * scale);
    (best, ok)
}
