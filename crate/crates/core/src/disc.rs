//! Leja sections on the unit disc.
//!
//! The canonical sequence starts at `e_0 = 1` and enumerates the unit circle
//! in bit-reversal order; every other Leja sequence started on the circle is
//! a rotation of it, and all constants computed here are rotation invariant.

use std::collections::HashSet;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angle::{bit_reversed_angle, DyadicAngle};
use crate::error::{LejaError, Result};
use crate::scaled::ScaledReal;
use crate::search::{sup_search, SearchConfig, SearchDomain, SearchStatus};

pub const MAX_DISC_LEN: usize = 1 << 20;

/// Ordered points `e_0, ..., e_{k-1}` on the unit circle, held as exact
/// angles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscSection {
    angles: Vec<DyadicAngle>,
}

impl DiscSection {
    /// Wraps arbitrary angles; rejects repeated points.
    pub fn from_angles(angles: Vec<DyadicAngle>) -> Result<Self> {
        let mut seen = std::collections::HashMap::with_capacity(angles.len());
        for (j, a) in angles.iter().enumerate() {
            if let Some(i) = seen.insert(*a, j) {
                return Err(LejaError::RepeatedNode(i, j));
            }
        }
        Ok(DiscSection { angles })
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn angles(&self) -> &[DyadicAngle] {
        &self.angles
    }

    pub fn points(&self) -> Vec<Complex64> {
        self.angles.iter().map(angle_point).collect()
    }

    pub fn prefix(&self, k: usize) -> DiscSection {
        DiscSection { angles: self.angles[..k.min(self.len())].to_vec() }
    }
}

pub fn angle_point(a: &DyadicAngle) -> Complex64 {
    let (c, s) = a.cos_sin();
    Complex64::new(c, s)
}

fn check_len(k: usize) -> Result<()> {
    if k == 0 || k > MAX_DISC_LEN {
        return Err(LejaError::OutOfRange { what: "k", value: k as u64, min: 1, max: MAX_DISC_LEN as u64 });
    }
    Ok(())
}

/// Canonical `k`-Leja section `E_k` from the bit-reversal formula.
pub fn leja_section(k: usize) -> Result<DiscSection> {
    check_len(k)?;
    Ok(DiscSection { angles: (0..k as u64).map(bit_reversed_angle).collect() })
}

/// `E_{2^{n+1}} = E_{2^n} ^ e^{i pi / 2^n} E_{2^n}`.
pub fn doubling_extend(section: &DiscSection) -> Result<DiscSection> {
    let len = section.len();
    if !len.is_power_of_two() {
        return Err(LejaError::NotPowerOfTwo(len));
    }
    check_len(2 * len)?;
    if section.angles.iter().enumerate().any(|(j, a)| *a != bit_reversed_angle(j as u64)) {
        return Err(LejaError::NotCanonical);
    }
    let rot = DyadicAngle::pi_over_pow2(len.trailing_zeros())?;
    let mut angles = section.angles.clone();
    angles.extend(section.angles.iter().map(|a| a.add(&rot)));
    Ok(DiscSection { angles })
}

/// `F_1 = (1)`, `F_{2^{n+1}} = F_{2^n} ^ e^{i pi / 2^n} conj(F_{2^n})`,
/// truncated to `k` points. Its real projection is the sequence produced by
/// the square-root recursion on `[-1, 1]`.
pub fn conjugate_doubling_section(k: usize) -> Result<DiscSection> {
    check_len(k)?;
    let mut angles = vec![DyadicAngle::ZERO];
    while angles.len() < k {
        let len = angles.len();
        let rot = DyadicAngle::pi_over_pow2(len.trailing_zeros())?;
        let tail: Vec<DyadicAngle> = angles.iter().map(|a| a.conjugate().add(&rot)).collect();
        angles.extend(tail);
    }
    angles.truncate(k);
    Ok(DiscSection { angles })
}

/// `|w_S(z)| = prod_{s in S} |z - s|`, accumulated in scaled form.
pub fn product_magnitude(points: &[Complex64], z: Complex64) -> f64 {
    let mut p = ScaledReal::one();
    for s in points {
        p.mul((z - s).norm());
    }
    p.value()
}

/// Outcome of checking `e_k in argmax_{|z|=1} |w_{E_k}(z)|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreedyReport {
    pub k: usize,
    /// `|w_{E_k}(e_k)|`
    pub attained: f64,
    /// Sup of `|w_{E_k}|` over the circle found by search.
    pub grid_max: f64,
    pub rel_gap: f64,
    pub pass: bool,
    /// Search budget ran out; `pass` is false in that case.
    pub inconclusive: bool,
}

/// Relative tolerance for accepting attainment of the greedy maximum.
pub const GREEDY_TOL: f64 = 1e-9;

/// Search configuration used for the greedy oracle: at least `2^16` points.
pub fn greedy_search_config() -> SearchConfig {
    SearchConfig { min_grid: 1 << 16, ..SearchConfig::default() }
}

/// Checks the Leja property of `e_k` for the canonical sequence.
pub fn verify_greedy(k: usize, cfg: &SearchConfig) -> Result<GreedyReport> {
    let section = leja_section(k + 1)?;
    let pts = section.points();
    Ok(greedy_step(&pts, k, cfg))
}

/// Checks every `j >= 1` of an arbitrary point list: `points[j]` must
/// maximize `|w_{points[..j]}|` on the circle.
pub fn verify_greedy_points(points: &[Complex64], cfg: &SearchConfig) -> Vec<GreedyReport> {
    (1..points.len()).map(|j| greedy_step(points, j, cfg)).collect()
}

fn greedy_step(points: &[Complex64], k: usize, cfg: &SearchConfig) -> GreedyReport {
    let prefix = &points[..k];
    let attained = product_magnitude(prefix, points[k]);
    let sup = sup_search(
        |t| product_magnitude(prefix, Complex64::from_polar(1.0, t)),
        SearchDomain::Circle,
        k,
        cfg,
        &[],
    );
    let grid_max = sup.value;
    let rel_gap = (grid_max - attained) / grid_max;
    let inconclusive = sup.status == SearchStatus::Inconclusive;
    GreedyReport {
        k,
        attained,
        grid_max,
        rel_gap,
        pass: !inconclusive && attained >= grid_max * (1.0 - GREEDY_TOL),
        inconclusive,
    }
}

/// Exact structural facts about `E`, one entry per `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralRow {
    pub n: u32,
    /// `E_{2^n}` equals the `2^n`-th roots of unity as a set.
    pub roots_of_unity: bool,
    /// `E_{2^n, 2^{n+1}} = e^{i pi/2^n} E_{2^n}` entrywise.
    pub rotated_block: bool,
    /// `(e_{2j})^2 = e_j` for all `2j < 2^{n+1}`.
    pub squares_enumerate: bool,
    /// `e_{2^n}^{2^n} = -1`.
    pub root_of_minus_one: bool,
}

impl StructuralRow {
    pub fn all(&self) -> bool {
        self.roots_of_unity && self.rotated_block && self.squares_enumerate && self.root_of_minus_one
    }
}

pub fn structural_checks(nmax: u32) -> Result<Vec<StructuralRow>> {
    if nmax > 20 {
        return Err(LejaError::OutOfRange { what: "nmax", value: nmax as u64, min: 0, max: 20 });
    }
    let a: Vec<DyadicAngle> = (0..1u64 << (nmax + 1)).map(bit_reversed_angle).collect();
    let mut rows = Vec::new();
    for n in 0..=nmax {
        let size = 1usize << n;
        let block: HashSet<DyadicAngle> = a[..size].iter().copied().collect();
        let roots: HashSet<DyadicAngle> = (0..size as u64)
            .map(|j| DyadicAngle::new(2 * j, n))
            .collect::<Result<_>>()?;
        let rot = DyadicAngle::pi_over_pow2(n)?;
        let rotated_block = (0..size).all(|j| a[size + j] == a[j].add(&rot));
        let squares_enumerate = (0..size).all(|j| a[2 * j].double() == a[j]);
        let mut t = a[size];
        for _ in 0..n {
            t = t.double();
        }
        rows.push(StructuralRow {
            n,
            roots_of_unity: block.len() == size && block == roots,
            rotated_block,
            squares_enumerate,
            root_of_minus_one: t == DyadicAngle::PI,
        });
    }
    Ok(rows)
}
