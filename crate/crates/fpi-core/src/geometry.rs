use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::path::{Path, PathSet, Provenance};
use crate::seed::rng_from_seed;
use crate::Complex;
use rand::Rng;
use std::f64::consts::TAU;

/// 2-D placement of the transmitter, the receiver, and single-bounce
/// scatterers.  Coordinates are meters.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    /// Transmitter position (the node whose location is private).
    pub tx: [f64; 2],
    /// Receiver position.
    pub rx: [f64; 2],
    /// First-order scatterer positions.
    pub scatterers: Vec<[f64; 2]>,
}

pub(crate) fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

/// Delay and departure angle of every path in a scene, line of sight first,
/// without drawing any gains.
pub(crate) fn scene_geometry(scene: &Scene, c: f64) -> Result<Vec<(f64, f64)>> {
    let direct = dist(scene.tx, scene.rx);
    if direct == 0.0 {
        return Err(Error::Geometry("transmitter and receiver coincide".into()));
    }
    let mut raw = Vec::with_capacity(1 + scene.scatterers.len());
    raw.push((direct / c, (scene.rx[1] - scene.tx[1]).atan2(scene.rx[0] - scene.tx[0])));
    for (k, &v) in scene.scatterers.iter().enumerate() {
        let from_tx = dist(scene.tx, v);
        if from_tx == 0.0 {
            return Err(Error::Geometry(format!(
                "scatterer {k} coincides with the transmitter"
            )));
        }
        raw.push((
            (dist(scene.rx, v) + from_tx) / c,
            (v[1] - scene.tx[1]).atan2(v[0] - scene.tx[0]),
        ));
    }
    Ok(raw)
}

/// Turns a scene into channel path parameters.
///
/// The line-of-sight delay is the direct range over `c`; a scattered path's
/// delay is the bounce length `|tx - v| + |rx - v|` over `c`.  Departure
/// angles point from the transmitter toward the receiver or scatterer.  Gain
/// magnitudes follow free-space decay `wavelength / (4 pi c tau)`; gain
/// phases are drawn uniformly from the seeded generator, one per path in
/// path order.
pub fn scene_to_params(scene: &Scene, cfg: &SystemConfig, seed: u64) -> Result<PathSet> {
    let mut rng = rng_from_seed(seed);
    let paths = scene_geometry(scene, cfg.light_speed)?
        .into_iter()
        .enumerate()
        .map(|(k, (tau, theta))| {
            let magnitude =
                cfg.wavelength() / (4.0 * std::f64::consts::PI * cfg.light_speed * tau);
            let phase = rng.random::<f64>() * TAU;
            let provenance = if k == 0 { Provenance::Los } else { Provenance::Scatter };
            Path { gamma: Complex::from_polar(magnitude, phase), tau, theta, provenance }
        })
        .collect();
    PathSet::new(paths, cfg)
}

/// Places a scatterer that would physically produce a path with delay
/// `tau` and departure angle `theta` between transmitter `tx` and receiver
/// `rx`.
///
/// The locus of constant bounce delay is an ellipse with the endpoints as
/// foci; intersecting it with the departure ray gives the bounce distance
/// `b` from the transmitter.  Returns `None` when `c * tau` is shorter than
/// the direct distance, where no physical bounce exists.
pub fn feasible_scatterer(
    tau: f64,
    theta: f64,
    tx: [f64; 2],
    rx: [f64; 2],
    c: f64,
) -> Option<[f64; 2]> {
    let range = c * tau;
    let dx = rx[0] - tx[0];
    let dy = rx[1] - tx[1];
    let direct = (dx * dx + dy * dy).sqrt();
    if range < direct {
        return None;
    }
    let (sin_t, cos_t) = theta.sin_cos();
    let denom = 2.0 * (range - dx * cos_t - dy * sin_t);
    let b = if denom == 0.0 { 0.0 } else { (range * range - direct * direct) / denom };
    Some([tx[0] + b * cos_t, tx[1] + b * sin_t])
}
