//! Shared fixtures: the reference scenario and a closed-form deterministic
//! pilot construction that an independent implementation can reproduce
//! exactly, so cross-checked values need no RNG compatibility.

// Each integration test binary compiles this module and uses its own subset.
#![allow(dead_code)]

pub mod frozen;

use fpi_core::geometry::{scene_to_params, Scene};
use fpi_core::path::{Path, PathSet};
use fpi_core::pilots::PilotBlock;
use fpi_core::precoder::{fake_paths_from_design, FakePathDesign};
use fpi_core::seed::splitmix64;
use fpi_core::{Complex, SystemConfig};
use std::f64::consts::PI;

pub fn reference_config(g: usize) -> SystemConfig {
    SystemConfig::new(16, 16, g, 15e6, 60e9, 0.0025, 3e8).unwrap()
}

pub fn reference_scene() -> Scene {
    Scene { tx: [3.0, 0.0], rx: [10.0, 5.0], scatterers: vec![[8.89, -6.05], [7.45, 8.54]] }
}

/// Hash-derived phase in `[0, 2 pi)`: uniform, reproducible from the index
/// alone.
pub fn hash_phase(k: u64) -> f64 {
    2.0 * PI * ((splitmix64(k) >> 11) as f64) * 2f64.powi(-53)
}

/// Constant-modulus pilots with hash-derived phases; entry `(g, n, m)` uses
/// index `1 + g N Nt + n Nt + m`.
pub fn closed_pilots(cfg: &SystemConfig) -> PilotBlock {
    let amp = 1.0 / (cfg.nt as f64).sqrt();
    let mut data = Vec::with_capacity(cfg.g * cfg.n * cfg.nt);
    for g in 0..cfg.g {
        for n in 0..cfg.n {
            for m in 0..cfg.nt {
                let k = 1 + (g * cfg.n * cfg.nt + n * cfg.nt + m) as u64;
                data.push(Complex::from_polar(amp, hash_phase(k)));
            }
        }
    }
    PilotBlock::from_data(cfg.g, cfg.n, cfg.nt, data).unwrap()
}

/// The reference scene's paths with hash-derived gain phases (index = path
/// number) replacing the seeded ones, leaving geometry and magnitudes to the
/// library.
pub fn closed_truth(cfg: &SystemConfig) -> PathSet {
    let drawn = scene_to_params(&reference_scene(), cfg, 0).unwrap();
    let rebuilt = drawn
        .paths()
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let mag = cfg.wavelength() / (4.0 * PI * cfg.light_speed * p.tau);
            Path { gamma: Complex::from_polar(mag, hash_phase(k as u64)), ..*p }
        })
        .collect();
    PathSet::new(rebuilt, cfg).unwrap()
}

/// The reference design: one offset pair at a twentieth of each separation
/// threshold.
pub fn reference_design(cfg: &SystemConfig) -> FakePathDesign {
    let (ut, uth) = fpi_core::path::separation_thresholds(cfg).unwrap();
    FakePathDesign::new(vec![(ut / 20.0, uth / 20.0)], false).unwrap()
}

/// True and fake line-of-sight paths under the reference design.
pub fn reference_pair(cfg: &SystemConfig) -> (Path, Path) {
    let truth = closed_truth(cfg);
    let fakes = fake_paths_from_design(&truth, &reference_design(cfg), cfg).unwrap();
    (truth.paths()[0], fakes[0])
}
