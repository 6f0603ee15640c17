//! Lagrange and Newton interpolation on arbitrary distinct nodes.
//!
//! Interval nodes are handled as complex numbers with zero imaginary part,
//! so disc and interval share one code path.

use num_complex::Complex64;

use crate::error::{LejaError, Result};
use crate::scaled::{ldexp, Scaled, ScaledReal};

/// Distances below this count as landing on a node.
pub const NODE_HIT: f64 = 1e-14;

/// Lagrange basis `l_j(z) = prod_{i != j} (z - z_i) / (z_j - z_i)`.
///
/// The denominators `d_j = prod_{i != j} (z_j - z_i)` are precomputed in
/// scaled form; one evaluation costs `O(k)`. Appending a node updates all
/// denominators in `O(k)`.
#[derive(Debug, Clone)]
pub struct LagrangeBasis {
    nodes: Vec<Complex64>,
    weights: Vec<Scaled>,
    // 2^-shift / d_j
    inv: Vec<Complex64>,
    inv_abs: Vec<f64>,
    shift: i32,
}

/// Lebesgue-type data at one evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointEval {
    /// `sum_j |l_j(z)|`
    pub lambda: f64,
    /// `(sum_j |l_j(z)|^2)^(1/2)`
    pub lambda2: f64,
    /// `log2 |w(z)|` where `w(z) = prod_j (z - z_j)`.
    pub log2_abs_w: f64,
}

impl LagrangeBasis {
    pub fn new(nodes: &[Complex64]) -> Result<Self> {
        let mut basis = LagrangeBasis {
            nodes: Vec::with_capacity(nodes.len()),
            weights: Vec::with_capacity(nodes.len()),
            inv: Vec::new(),
            inv_abs: Vec::new(),
            shift: 0,
        };
        for &z in nodes {
            basis.push_raw(z)?;
        }
        basis.refresh();
        Ok(basis)
    }

    /// Appends a node, turning the basis of `Z_k` into that of `Z_{k+1}`.
    pub fn push(&mut self, z: Complex64) -> Result<()> {
        self.push_raw(z)?;
        self.refresh();
        Ok(())
    }

    fn push_raw(&mut self, z: Complex64) -> Result<()> {
        let k = self.nodes.len();
        let mut dk = Scaled::ONE;
        for (i, &zi) in self.nodes.iter().enumerate() {
            let diff = z - zi;
            if diff.re == 0.0 && diff.im == 0.0 {
                return Err(LejaError::RepeatedNode(i, k));
            }
            dk.mul(diff);
        }
        for (w, &zi) in self.weights.iter_mut().zip(&self.nodes) {
            w.mul(zi - z);
        }
        self.nodes.push(z);
        self.weights.push(dk);
        Ok(())
    }

    fn refresh(&mut self) {
        let recips: Vec<Scaled> = self.weights.iter().map(Scaled::recip).collect();
        self.shift = recips.iter().map(Scaled::exp).max().unwrap_or(0);
        self.inv = recips.iter().map(|r| r.to_complex_shifted(-self.shift)).collect();
        self.inv_abs = self.inv.iter().map(|c| c.norm()).collect();
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    /// `d_j = w'(z_j)` as a plain complex number (may overflow for huge k).
    pub fn weight(&self, j: usize) -> Complex64 {
        self.weights[j].to_complex()
    }

    /// `log2 |d_j|`.
    pub fn log2_abs_weight(&self, j: usize) -> f64 {
        self.weights[j].log2_abs()
    }

    pub fn node_hit(&self, z: Complex64) -> Option<usize> {
        self.nodes.iter().position(|&zi| (z - zi).norm_sqr() < NODE_HIT * NODE_HIT)
    }

    /// Node polynomial `w(z) = prod_j (z - z_j)` in scaled form.
    pub fn node_poly(&self, z: Complex64) -> Scaled {
        let mut w = Scaled::ONE;
        for &zi in &self.nodes {
            w.mul(z - zi);
        }
        w
    }

    /// `l_j(z)`; exact Kronecker delta on nodes.
    pub fn eval(&self, j: usize, z: Complex64) -> Complex64 {
        if let Some(h) = self.node_hit(z) {
            return if h == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
        }
        let w = self.node_poly(z).to_complex_shifted(self.shift);
        w * self.inv[j] / (z - self.nodes[j])
    }

    /// All basis values at `z`.
    pub fn eval_all(&self, z: Complex64) -> Vec<Complex64> {
        let k = self.len();
        if let Some(h) = self.node_hit(z) {
            let mut out = vec![Complex64::new(0.0, 0.0); k];
            out[h] = Complex64::new(1.0, 0.0);
            return out;
        }
        let w = self.node_poly(z).to_complex_shifted(self.shift);
        (0..k).map(|j| w * self.inv[j] / (z - self.nodes[j])).collect()
    }

    /// `I_{Z_k} f (z) = sum_j f(z_j) l_j(z)`.
    pub fn interpolate(&self, fvals: &[Complex64], z: Complex64) -> Result<Complex64> {
        if fvals.len() != self.len() {
            return Err(LejaError::DimensionMismatch { expected: self.len(), got: fvals.len() });
        }
        Ok(self.eval_all(z).iter().zip(fvals).map(|(l, f)| l * f).sum())
    }

    /// Lebesgue function, quadratic Lebesgue function and `log2|w|` at `z`.
    pub fn point_eval(&self, z: Complex64) -> PointEval {
        let mut prod = ScaledReal::one();
        let mut s1 = 0.0;
        let mut s2 = 0.0;
        for (zi, &a) in self.nodes.iter().zip(&self.inv_abs) {
            let dx = z.re - zi.re;
            let dy = z.im - zi.im;
            let d2 = dx * dx + dy * dy;
            if d2 < NODE_HIT * NODE_HIT {
                return PointEval { lambda: 1.0, lambda2: 1.0, log2_abs_w: f64::NEG_INFINITY };
            }
            prod.mul(d2);
            let inv_d = 1.0 / d2.sqrt();
            s1 += a * inv_d;
            s2 += a * a * inv_d * inv_d;
        }
        // |w| = sqrt(prod); make the exponent even before halving it
        let (mut m, mut e) = (prod.mantissa(), prod.exp());
        if e % 2 != 0 {
            m *= 2.0;
            e -= 1;
        }
        let root = m.sqrt();
        let scale = e / 2 + self.shift;
        PointEval {
            lambda: ldexp(root * s1, scale),
            lambda2: ldexp(root * s2.sqrt(), scale),
            log2_abs_w: 0.5 * prod.log2(),
        }
    }

    pub fn lebesgue(&self, z: Complex64) -> f64 {
        self.point_eval(z).lambda
    }

    pub fn lebesgue2(&self, z: Complex64) -> f64 {
        self.point_eval(z).lambda2
    }
}

/// One hierarchical increment `Delta_l f = c_l prod_{j<l} (z - z_j)/(z_l - z_j)`
/// with `c_l = f(z_l) - I_{Z_l} f(z_l)`.
#[derive(Debug, Clone)]
pub struct NewtonDelta {
    pub level: usize,
    pub coefficient: Complex64,
    nodes: Vec<Complex64>,
    // prod_{j<l} (z_l - z_j)
    denom: Scaled,
}

impl NewtonDelta {
    fn new(level: usize, coefficient: Complex64, nodes: &[Complex64]) -> Self {
        let nodes = nodes[..=level].to_vec();
        let zl = nodes[level];
        let mut denom = Scaled::ONE;
        for &zj in &nodes[..level] {
            denom.mul(zl - zj);
        }
        NewtonDelta { level, coefficient, nodes, denom }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut num = Scaled::ONE;
        for &zj in &self.nodes[..self.level] {
            num.mul(z - zj);
        }
        num.mul_scaled(&self.denom.recip());
        self.coefficient * num.to_complex()
    }
}

/// `Delta_l f (z)` from the first `l + 1` values of `f`, with the
/// coefficient obtained through the Lagrange form on `Z_l`.
pub fn delta_apply(nodes: &[Complex64], l: usize, fvals: &[Complex64], z: Complex64) -> Result<Complex64> {
    if nodes.len() <= l {
        return Err(LejaError::DimensionMismatch { expected: l + 1, got: nodes.len() });
    }
    if fvals.len() <= l {
        return Err(LejaError::DimensionMismatch { expected: l + 1, got: fvals.len() });
    }
    if l == 0 {
        return Ok(fvals[0]);
    }
    let basis = LagrangeBasis::new(&nodes[..l])?;
    let c = fvals[l] - basis.interpolate(&fvals[..l], nodes[l])?;
    Ok(NewtonDelta::new(l, c, nodes).eval(z))
}

/// Newton form `I_{Z_k} f = sum_{l<k} Delta_l f`, with coefficients from the
/// recursion `c_l = f(z_l) - sum_{m<l} Delta_m f(z_l)`.
#[derive(Debug, Clone)]
pub struct NewtonInterpolant {
    deltas: Vec<NewtonDelta>,
}

impl NewtonInterpolant {
    pub fn new(nodes: &[Complex64], fvals: &[Complex64]) -> Result<Self> {
        if nodes.len() != fvals.len() {
            return Err(LejaError::DimensionMismatch { expected: nodes.len(), got: fvals.len() });
        }
        if nodes.is_empty() {
            return Err(LejaError::EmptySection);
        }
        let k = nodes.len();
        // denominators prod_{j<m} (z_m - z_j)
        let mut denoms = Vec::with_capacity(k);
        for m in 0..k {
            let mut d = Scaled::ONE;
            for j in 0..m {
                let diff = nodes[m] - nodes[j];
                if diff.norm_sqr() == 0.0 {
                    return Err(LejaError::RepeatedNode(j, m));
                }
                d.mul(diff);
            }
            denoms.push(d.recip());
        }
        let mut coeffs: Vec<Complex64> = Vec::with_capacity(k);
        for l in 0..k {
            let zl = nodes[l];
            let mut partial = Scaled::ONE;
            let mut acc = Complex64::new(0.0, 0.0);
            for m in 0..l {
                let mut t = partial;
                t.mul_scaled(&denoms[m]);
                acc += coeffs[m] * t.to_complex();
                partial.mul(zl - nodes[m]);
            }
            coeffs.push(fvals[l] - acc);
        }
        let deltas = coeffs
            .into_iter()
            .enumerate()
            .map(|(l, c)| NewtonDelta::new(l, c, nodes))
            .collect();
        Ok(NewtonInterpolant { deltas })
    }

    pub fn deltas(&self) -> &[NewtonDelta] {
        &self.deltas
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.deltas.iter().map(|d| d.eval(z)).sum()
    }
}
