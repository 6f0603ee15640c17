//! WebAssembly bindings for the browser demo in `www/`.
//!
//! The plain functions do the work and are tested natively; the exported
//! wrappers only translate errors for JavaScript.

use lejakit::interp::LagrangeBasis;
use lejakit::lebesgue::lebesgue_constant;
use lejakit::{Domain, SearchConfig};
use wasm_bindgen::prelude::*;

/// Largest section the page may request.
pub const MAX_K: usize = 512;

/// Cheaper search than the library default; plenty for plotting.
pub fn demo_search() -> SearchConfig {
    SearchConfig { min_grid: 1024, grid_mult: 16, refine_brackets: 4, ..SearchConfig::default() }
}

fn parse(domain: &str, k: usize) -> Result<Domain, String> {
    let d: Domain = domain.parse()?;
    if k == 0 || k > MAX_K {
        return Err(format!("k must be in 1..={MAX_K}, got {k}"));
    }
    Ok(d)
}

/// Nodes as `[re0, im0, re1, im1, ...]`.
pub fn node_coords(domain: &str, k: usize) -> Result<Vec<f64>, String> {
    let d = parse(domain, k)?;
    let (pts, _) = d.section(k).map_err(|e| e.to_string())?;
    Ok(pts.iter().flat_map(|z| [z.re, z.im]).collect())
}

/// `[theta, lambda, lambda2]` triples at `samples` parameter angles spanning
/// the domain (`[0, 2pi)` on the circle, `[0, pi]` on the interval).
pub fn curve(domain: &str, k: usize, samples: usize) -> Result<Vec<f64>, String> {
    let d = parse(domain, k)?;
    if !(2..=20_000).contains(&samples) {
        return Err(format!("samples must be in 2..=20000, got {samples}"));
    }
    let (pts, _) = d.section(k).map_err(|e| e.to_string())?;
    let b = LagrangeBasis::new(&pts).map_err(|e| e.to_string())?;
    let span = match d {
        Domain::Disc => std::f64::consts::TAU,
        Domain::Interval => std::f64::consts::PI,
    };
    let mut out = Vec::with_capacity(3 * samples);
    for i in 0..samples {
        let t = match d {
            Domain::Disc => span * i as f64 / samples as f64,
            Domain::Interval => span * i as f64 / (samples - 1) as f64,
        };
        let p = b.point_eval(d.point(t));
        out.extend([t, p.lambda, p.lambda2]);
    }
    Ok(out)
}

/// Lebesgue constants for `k = 1..=kmax`.
pub fn constants(domain: &str, kmax: usize) -> Result<Vec<f64>, String> {
    let d = parse(domain, kmax)?;
    let cfg = demo_search();
    (1..=kmax)
        .map(|k| lebesgue_constant(d, k, &cfg).map(|r| r.value).map_err(|e| e.to_string()))
        .collect()
}

#[wasm_bindgen]
pub fn nodes(domain: &str, k: usize) -> Result<Vec<f64>, JsError> {
    node_coords(domain, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn lebesgue_curve(domain: &str, k: usize, samples: usize) -> Result<Vec<f64>, JsError> {
    curve(domain, k, samples).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn constant_series(domain: &str, kmax: usize) -> Result<Vec<f64>, JsError> {
    constants(domain, kmax).map_err(|e| JsError::new(&e))
}
