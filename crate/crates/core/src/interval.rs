//! Real Leja sequences on `[-1, 1]` obtained by projecting disc Leja
//! sequences, built three ways: by projection with the conjugate-skip rule,
//! by the half-angle recursion, and by the square-root recursion.

use std::collections::HashSet;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angle::DyadicAngle;
use crate::binary::floor_log2;
use crate::disc::{conjugate_doubling_section, leja_section, DiscSection};
use crate::error::{LejaError, Result};

/// Ordered nodes `r_j = cos(theta_j)` with exact angles and cached values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalSection {
    angles: Vec<DyadicAngle>,
    values: Vec<f64>,
}

impl IntervalSection {
    fn from_angles(angles: Vec<DyadicAngle>) -> Self {
        let values = angles.iter().map(DyadicAngle::cos).collect();
        IntervalSection { angles, values }
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Angles as constructed (not folded).
    pub fn angles(&self) -> &[DyadicAngle] {
        &self.angles
    }

    /// Angles folded into `[0, pi]`; equal entries mean equal nodes.
    pub fn folded(&self) -> Vec<DyadicAngle> {
        self.angles.iter().map(DyadicAngle::fold).collect()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn points(&self) -> Vec<Complex64> {
        self.values.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    pub fn prefix(&self, k: usize) -> IntervalSection {
        let k = k.min(self.len());
        IntervalSection { angles: self.angles[..k].to_vec(), values: self.values[..k].to_vec() }
    }

    /// Structural invariants: leading nodes `1, -1, 0`, the pairing
    /// `r_{2j-1} = -r_{2j}` for `j >= 2`, and pairwise distinct nodes.
    pub fn check_invariants(&self) -> bool {
        let f = self.folded();
        let lead = [DyadicAngle::ZERO, DyadicAngle::PI, DyadicAngle::HALF_PI];
        if f.iter().zip(lead.iter()).any(|(a, b)| a != b) {
            return false;
        }
        let mut j = 2;
        while 2 * j < self.len() {
            if self.angles[2 * j].fold() != self.angles[2 * j - 1].negate().fold() {
                return false;
            }
            j += 1;
        }
        f.iter().collect::<HashSet<_>>().len() == f.len()
    }
}

/// Index `J(k)` of the disc point projected onto `r_k`.
pub fn projection_index(k: u64) -> u64 {
    match k {
        0 => 0,
        1 => 1,
        _ => (1u64 << floor_log2(k - 1)) + k - 1,
    }
}

/// Projects a disc section with the skip rule: `e_j` is kept iff
/// `e_j != conj(e_i)` for every `i < j`. Returns at most `k` nodes and the
/// number of disc points consumed.
pub fn project_section(disc: &DiscSection, k: usize) -> (IntervalSection, usize) {
    let mut seen = HashSet::with_capacity(disc.len());
    let mut kept = Vec::with_capacity(k);
    let mut consumed = 0;
    for a in disc.angles() {
        if kept.len() == k {
            break;
        }
        consumed += 1;
        if !seen.contains(&a.conjugate()) {
            kept.push(*a);
        }
        seen.insert(*a);
    }
    (IntervalSection::from_angles(kept), consumed)
}

/// Canonical real Leja section `R_k`: projection of the bit-reversal disc
/// sequence.
pub fn project_from_disc(k: usize) -> Result<IntervalSection> {
    check_len(k)?;
    let need = projection_index(k as u64 - 1) as usize + 1;
    let disc = leja_section(need)?;
    let (section, consumed) = project_section(&disc, k);
    debug_assert_eq!(consumed, need);
    debug_assert_eq!(section.len(), k);
    Ok(section)
}

/// `phi_0 = 0, phi_1 = pi, phi_2 = pi/2`, then
/// `phi_{2j-1} = phi_j / 2`, `phi_{2j} = phi_{2j-1} + pi` for `j >= 2`.
pub fn angle_recursion_section(k: usize) -> Result<IntervalSection> {
    check_len(k)?;
    let mut phi = vec![DyadicAngle::ZERO, DyadicAngle::PI, DyadicAngle::HALF_PI];
    let mut j = 2;
    while phi.len() < k {
        let half = phi[j].halve()?;
        phi.push(half);
        phi.push(half.negate());
        j += 1;
    }
    phi.truncate(k);
    Ok(IntervalSection::from_angles(phi))
}

/// Floating-point recursion `r_{2j-1} = sqrt((r_j + 1)/2)`, `r_{2j} = -r_{2j-1}`.
///
/// This is the real Leja sequence of the conjugate-doubling disc sequence,
/// see [`sqrt_route_reference`].
pub fn sqrt_recursion_nodes(k: usize) -> Result<Vec<f64>> {
    check_len(k)?;
    let mut r: Vec<f64> = vec![1.0, -1.0, 0.0];
    let mut j = 2;
    while r.len() < k {
        let v = ((r[j] + 1.0) / 2.0).sqrt();
        r.push(v);
        r.push(-v);
        j += 1;
    }
    r.truncate(k);
    Ok(r)
}

/// Exact projection of the conjugate-doubling disc sequence; the reference
/// the square-root route is compared to.
pub fn sqrt_route_reference(k: usize) -> Result<IntervalSection> {
    check_len(k)?;
    let mut need = 2 * k + 2;
    loop {
        let disc = conjugate_doubling_section(need.min(crate::disc::MAX_DISC_LEN))?;
        let (section, _) = project_section(&disc, k);
        if section.len() == k || need >= crate::disc::MAX_DISC_LEN {
            return Ok(section);
        }
        need *= 2;
    }
}

/// `R^2 = R`: `2 r_{2j}^2 - 1 = r_j` for all `2j < k`, checked on angles via
/// `cos(2 theta) = 2 cos^2 theta - 1`.
pub fn square_map_check(section: &IntervalSection) -> bool {
    let a = section.angles();
    (0..a.len().div_ceil(2)).all(|j| a[2 * j].double().fold() == a[j].fold())
}

/// Whether the section equals `{cos(j pi / 2^n) : j = 0..=2^n}` as a set.
pub fn is_gauss_lobatto(section: &IntervalSection, n: u32) -> Result<bool> {
    let want: HashSet<DyadicAngle> = (0..=(1u64 << n))
        .map(|j| DyadicAngle::new(j, n))
        .collect::<Result<_>>()?;
    let got: HashSet<DyadicAngle> = section.folded().into_iter().collect();
    Ok(got.len() == section.len() && got == want)
}

fn check_len(k: usize) -> Result<()> {
    let max = crate::disc::MAX_DISC_LEN / 2;
    if k == 0 || k > max {
        return Err(LejaError::OutOfRange { what: "k", value: k as u64, min: 1, max: max as u64 });
    }
    Ok(())
}
