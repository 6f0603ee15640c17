//! Lebesgue functions, their suprema, and difference-operator norms for the
//! canonical disc and interval sequences.

use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::binary::floor_log2;
use crate::disc::leja_section;
use crate::error::{LejaError, Result};
use crate::interp::LagrangeBasis;
use crate::interval::project_from_disc;
use crate::scaled::{ldexp, ScaledReal};
use crate::search::{sup_search, sup_search_many, SearchConfig, SearchDomain, SearchStatus, SupResult};
use crate::Domain;

/// `lambda_{Z_k}(z) = sum_j |l_j(z)|`.
pub fn lebesgue_at(basis: &LagrangeBasis, z: Complex64) -> f64 {
    basis.lebesgue(z)
}

/// `lambda_{Z_k,2}(z) = (sum_j |l_j(z)|^2)^(1/2)`.
pub fn lebesgue2_at(basis: &LagrangeBasis, z: Complex64) -> f64 {
    basis.lebesgue2(z)
}

impl Domain {
    pub fn search_domain(&self) -> SearchDomain {
        match self {
            Domain::Disc => SearchDomain::Circle,
            Domain::Interval => SearchDomain::Interval,
        }
    }

    /// Point with parameter angle `theta`.
    pub fn point(&self, theta: f64) -> Complex64 {
        let (s, c) = theta.sin_cos();
        match self {
            Domain::Disc => Complex64::new(c, s),
            Domain::Interval => Complex64::new(c, 0.0),
        }
    }

    /// First `k` nodes of the canonical sequence with their parameter angles.
    pub fn section(&self, k: usize) -> Result<(Vec<Complex64>, Vec<f64>)> {
        match self {
            Domain::Disc => {
                let s = leja_section(k)?;
                Ok((s.points(), s.angles().iter().map(|a| a.radians()).collect()))
            }
            Domain::Interval => {
                let s = project_from_disc(k)?;
                Ok((s.points(), s.folded().iter().map(|a| a.radians()).collect()))
            }
        }
    }
}

/// Per-`k` summary for `Z_k` of the canonical sequence on a domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LebesgueReport {
    pub domain: Domain,
    pub k: usize,
    /// `lambda_{Z_k}(z_k)`
    pub lambda_at_next: f64,
    /// `lambda_{Z_k,2}(z_k)`
    pub lambda2_at_next: f64,
    /// Lebesgue constant `sup lambda_{Z_k}` (search lower bound).
    pub lebesgue: f64,
    /// Quadratic constant `sup lambda_{Z_k,2}` (search lower bound).
    pub lebesgue2: f64,
    pub argmax_theta: f64,
    pub argmax2_theta: f64,
    /// Norm of `Delta_k = I_{Z_{k+1}} - I_{Z_k}`.
    pub diff_norm: f64,
    /// Interval only: `sup |W_{R_k}|` with `W_{R_k} = 2^k w_{R_k}`.
    pub sup_w: Option<f64>,
    /// Interval only: `beta_k = (1 + lambda(r_k)) / (2 |W_{R_k}(r_k)|)`.
    pub beta: Option<f64>,
    pub status: SearchStatus,
    pub elapsed_ms: f64,
}

impl LebesgueReport {
    pub fn is_conclusive(&self) -> bool {
        self.status == SearchStatus::Converged
    }
}

fn worst(statuses: &[SearchStatus]) -> SearchStatus {
    if statuses.iter().all(|s| *s == SearchStatus::Converged) {
        SearchStatus::Converged
    } else {
        SearchStatus::Inconclusive
    }
}

pub fn lebesgue_report(domain: Domain, k: usize, cfg: &SearchConfig) -> Result<LebesgueReport> {
    cfg.validate()?;
    let start = Instant::now();
    let (pts, thetas) = domain.section(k + 1)?;
    let basis = LagrangeBasis::new(&pts[..k])?;
    let next = basis.point_eval(pts[k]);
    let [mut lam, mut lam2, mut logw] = sup_search_many(
        |t| {
            let p = basis.point_eval(domain.point(t));
            [p.lambda, p.lambda2, p.log2_abs_w]
        },
        domain.search_domain(),
        k,
        cfg,
        &[thetas[k]],
    );
    // the exact node can differ from cos/sin of its float angle by an ulp
    for (r, v) in [(&mut lam, next.lambda), (&mut lam2, next.lambda2), (&mut logw, next.log2_abs_w)] {
        if v > r.value {
            r.value = v;
            r.theta = thetas[k];
        }
    }
    let (diff_norm, sup_w, beta, status) = match domain {
        Domain::Disc => (1.0 + next.lambda, None, None, worst(&[lam.status, lam2.status])),
        Domain::Interval => {
            let log2_w_next = k as f64 + next.log2_abs_w;
            let log2_sup = k as f64 + logw.value;
            let beta = (1.0 + next.lambda) / (2.0 * log2_w_next.exp2());
            let d = 2.0 * beta * log2_sup.exp2();
            (d, Some(log2_sup.exp2()), Some(beta), worst(&[lam.status, lam2.status, logw.status]))
        }
    };
    Ok(LebesgueReport {
        domain,
        k,
        lambda_at_next: next.lambda,
        lambda2_at_next: next.lambda2,
        lebesgue: lam.value,
        lebesgue2: lam2.value,
        argmax_theta: lam.theta,
        argmax2_theta: lam2.theta,
        diff_norm,
        sup_w,
        beta,
        status,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Lebesgue constant of `Z_k` alone.
pub fn lebesgue_constant(domain: Domain, k: usize, cfg: &SearchConfig) -> Result<SupResult> {
    cfg.validate()?;
    let (pts, _) = domain.section(k)?;
    let basis = LagrangeBasis::new(&pts)?;
    Ok(sup_search(|t| basis.lebesgue(domain.point(t)), domain.search_domain(), k, cfg, &[]))
}

/// `lambda(z_k)` and `lambda_2(z_k)` for `k = 1..=kmax`, grown one node at a
/// time so the whole sweep costs `O(kmax^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NextPointValues {
    pub k: usize,
    pub lambda: f64,
    pub lambda2: f64,
}

pub fn next_point_sweep(domain: Domain, kmax: usize) -> Result<Vec<NextPointValues>> {
    let (pts, _) = domain.section(kmax + 1)?;
    let mut basis = LagrangeBasis::new(&pts[..1])?;
    let mut out = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        if k > 1 {
            basis.push(pts[k - 1])?;
        }
        let p = basis.point_eval(pts[k]);
        out.push(NextPointValues { k, lambda: p.lambda, lambda2: p.lambda2 });
    }
    Ok(out)
}

/// `D_k(E) = 1 + lambda_{E_k}(e_k)`, valid because `|w_{E_k}|` peaks at
/// `e_k` on the circle.
pub fn diff_norm_disc(k: usize) -> Result<f64> {
    let (pts, _) = Domain::Disc.section(k + 1)?;
    let basis = LagrangeBasis::new(&pts[..k])?;
    Ok(1.0 + basis.lebesgue(pts[k]))
}

/// `D_k(R)` computed two ways.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalDiffNorm {
    pub k: usize,
    pub lambda_at_next: f64,
    /// `|W_{R_k}(r_k)|`
    pub w_at_next: f64,
    pub beta: f64,
    pub sup_w: f64,
    /// `2 beta_k sup |W_{R_k}|`
    pub via_beta: f64,
    /// `(1 + lambda(r_k)) sup |w(x)| / |w(r_k)|`, using the last Lagrange
    /// polynomial of `R_{k+1}`.
    pub via_norm_diff: f64,
    pub status: SearchStatus,
}

pub fn diff_norm_interval(k: usize, cfg: &SearchConfig) -> Result<IntervalDiffNorm> {
    cfg.validate()?;
    let (pts, _) = Domain::Interval.section(k + 1)?;
    let head = LagrangeBasis::new(&pts[..k])?;
    let next = head.point_eval(pts[k]);
    let w_next = (k as f64 + next.log2_abs_w).exp2();
    let beta = (1.0 + next.lambda) / (2.0 * w_next);
    let sw = sup_w_of(&head, k, cfg);
    let sup_w = sw.value;

    // second route: generic formula through l_{k,k+1} = w_{R_k} / w_{R_k}(r_k)
    let full = LagrangeBasis::new(&pts)?;
    let lam_next: f64 = head.eval_all(pts[k]).iter().map(|l| l.norm()).sum();
    let last = sup_search(
        |t| full.eval(k, Domain::Interval.point(t)).norm(),
        SearchDomain::Interval,
        k + 1,
        cfg,
        &[],
    );
    Ok(IntervalDiffNorm {
        k,
        lambda_at_next: next.lambda,
        w_at_next: w_next,
        beta,
        sup_w,
        via_beta: 2.0 * beta * sup_w,
        via_norm_diff: (1.0 + lam_next) * last.value,
        status: worst(&[sw.status, last.status]),
    })
}

fn sup_w_of(head: &LagrangeBasis, k: usize, cfg: &SearchConfig) -> SupResult {
    let r = sup_search(
        |t| head.node_poly(Domain::Interval.point(t)).log2_abs(),
        SearchDomain::Interval,
        k,
        cfg,
        &[],
    );
    SupResult { value: (k as f64 + r.value).exp2(), ..r }
}

/// `sup_{[-1,1]} |W_{R_k}|`, searched on `log2 |W|`.
pub fn sup_w(k: usize, cfg: &SearchConfig) -> Result<SupResult> {
    cfg.validate()?;
    let (pts, _) = Domain::Interval.section(k)?;
    let head = LagrangeBasis::new(&pts)?;
    Ok(sup_w_of(&head, k, cfg))
}

/// Operator norm of `Delta_k` straight from its definition:
/// `sup_z sum_{j<=k} |l_{j,k+1}(z) - l_{j,k}(z)|`.
pub fn diff_norm_direct(domain: Domain, k: usize, cfg: &SearchConfig) -> Result<SupResult> {
    cfg.validate()?;
    let (pts, _) = domain.section(k + 1)?;
    let head = LagrangeBasis::new(&pts[..k])?;
    let full = LagrangeBasis::new(&pts)?;
    Ok(sup_search(
        |t| {
            let z = domain.point(t);
            let big = full.eval_all(z);
            let small = head.eval_all(z);
            let mut s = big[k].norm();
            for j in 0..k {
                s += (big[j] - small[j]).norm();
            }
            s
        },
        domain.search_domain(),
        k + 1,
        cfg,
        &[],
    ))
}

/// `gamma_{m,l} = 4^{-m} sum_{j<K} 4 / |w_{F}(conj e_j)|^2` with `K = 2^m + l`
/// and `F = (e_{2^m}, ..., e_{K-1})`.
pub fn gamma(m: u32, l: u64) -> Result<f64> {
    if !(1..=19).contains(&m) {
        return Err(LejaError::OutOfRange { what: "m", value: m as u64, min: 1, max: 19 });
    }
    let lmax = 1u64 << (m - 1);
    if !(1..=lmax).contains(&l) {
        return Err(LejaError::OutOfRange { what: "l", value: l, min: 1, max: lmax });
    }
    let big_k = (1usize << m) + l as usize;
    let e = leja_section(big_k)?.points();
    let f = &e[1usize << m..];
    let mut sum = 0.0;
    let mut comp = 0.0;
    for ej in &e {
        let z = ej.conj();
        let mut prod = ScaledReal::one();
        for s in f {
            prod.mul((z - s).norm_sqr());
        }
        if prod.mantissa() == 0.0 {
            return Err(LejaError::Singular(format!("w_F vanishes at conj(e_j) for m={m}, l={l}")));
        }
        // 4^{1-m} / prod
        let term = ldexp(1.0 / prod.mantissa(), 2 - 2 * m as i32 - prod.exp());
        // Kahan
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// Upper bound `5 / 2^{sigma1(l) + p(l) + 1}` on `gamma_{m,l}`.
pub fn gamma_bound(l: u64) -> f64 {
    5.0 / ((l.count_ones() + l.trailing_zeros() + 1) as f64).exp2()
}

/// Indices used to compare `R_k` with the disc section feeding it:
/// `2^n + 1 <= k < 2^{n+1} + 1`, `l = k - (2^n + 1)`, `K = 2^{n+1} + l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionSplit {
    pub n: u32,
    pub l: u64,
    pub big_k: u64,
}

/// `None` when `k < 3`.
pub fn projection_split(k: u64) -> Option<ProjectionSplit> {
    if k < 3 {
        return None;
    }
    let n = floor_log2(k - 1);
    let l = k - ((1u64 << n) + 1);
    Some(ProjectionSplit { n, l, big_k: (1u64 << (n + 1)) + l })
}

/// Diagnostic `gamma_K(z) = |w_F(conj z)| sum_j |L_j(z)| / |w_F(conj e_j)|`
/// where `L_j` is the Lagrange basis of `E_K` and `F = E_{2^{n+1}, K}`.
/// Used only as an upper-bound device for `lambda_{R_k}`.
pub struct GammaK {
    basis: LagrangeBasis,
    block: Vec<Complex64>,
    // 1 / |w_F(conj e_j)|
    inv_den: Vec<f64>,
}

impl GammaK {
    pub fn new(k: u64) -> Result<Self> {
        let split = projection_split(k).filter(|s| s.l > 0).ok_or(LejaError::OutOfRange {
            what: "k (k - 1 must not be a power of two)",
            value: k,
            min: 4,
            max: u64::MAX,
        })?;
        let e = leja_section(split.big_k as usize)?.points();
        let block = e[1usize << (split.n + 1)..].to_vec();
        let inv_den = e
            .iter()
            .map(|ej| {
                let mut p = ScaledReal::one();
                for s in &block {
                    p.mul((ej.conj() - s).norm());
                }
                1.0 / p.value()
            })
            .collect();
        Ok(GammaK { basis: LagrangeBasis::new(&e)?, block, inv_den })
    }

    pub fn eval(&self, z: Complex64) -> f64 {
        let mut p = ScaledReal::one();
        for s in &self.block {
            p.mul((z.conj() - s).norm());
        }
        let l = self.basis.eval_all(z);
        p.value() * l.iter().zip(&self.inv_den).map(|(a, b)| a.norm() * b).sum::<f64>()
    }
}

/// Lebesgue constant of the `2^p`-th roots of unity.
pub fn roots_of_unity_constant(p: u32, cfg: &SearchConfig) -> Result<SupResult> {
    lebesgue_constant(Domain::Disc, 1usize << p, cfg)
}

/// `L_1 = 1`, `L_2 = sqrt 2`, `L_{2^p} <= (2/pi)(log 2^p + 9/4)` for `p >= 2`.
pub fn roots_of_unity_closed_bound(p: u32) -> f64 {
    match p {
        0 => 1.0,
        1 => std::f64::consts::SQRT_2,
        _ => std::f64::consts::FRAC_2_PI * (p as f64 * std::f64::consts::LN_2 + 2.25),
    }
}
