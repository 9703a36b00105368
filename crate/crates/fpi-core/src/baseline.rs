//! Artificial-noise baseline for comparison.
//!
//! The classical location-privacy defense adds Gaussian noise at the
//! transmitter instead of structured fake paths.  For a fair comparison the
//! baseline receives the same disturbance energy the injection adds: the
//! eavesdropper faces the true channel plus extra white noise whose power
//! equals the injected component's mean received energy.

use crate::config::SystemConfig;
use crate::error::Result;
use crate::fim::{exact_fim, FimMatrix};
use crate::path::PathSet;
use crate::pilots::PilotBlock;
use crate::precoder::{eve_effective_paths, FakePathDesign};
use crate::vectors::channel_vector;
use crate::Complex;

/// Mean received energy per resource element of the injected signal
/// component: what the injection adds on top of the true channel, averaged
/// over subcarriers and repetitions.  Independent of the receiver noise
/// level, hence constant across SNR.
pub fn artificial_noise_power(
    truth: &PathSet,
    design: &FakePathDesign,
    pilots: &PilotBlock,
    cfg: &SystemConfig,
) -> Result<f64> {
    let effective = eve_effective_paths(truth, design, cfg)?;
    let mut total = 0.0;
    for sub in 0..cfg.n {
        let h_true = channel_vector(truth.paths(), sub, cfg);
        let h_eff = channel_vector(effective.paths(), sub, cfg);
        for rep in 0..cfg.g {
            let y: Complex = h_eff
                .iter()
                .zip(&h_true)
                .zip(pilots.at(rep, sub))
                .map(|((e, t), s)| (e - t) * s)
                .sum();
            total += y.norm_sqr();
        }
    }
    Ok(total / (cfg.n * cfg.g) as f64)
}

/// Eavesdropper information under the artificial-noise defense: the true
/// channel observed through noise of power `sigma2` plus the matched
/// disturbance energy of the given design.
pub fn gaussian_baseline_fim(
    truth: &PathSet,
    design: &FakePathDesign,
    pilots: &PilotBlock,
    sigma2: f64,
    cfg: &SystemConfig,
) -> Result<FimMatrix> {
    let extra = artificial_noise_power(truth, design, pilots, cfg)?;
    exact_fim(truth.paths(), pilots, sigma2 + extra, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{scene_to_params, Scene};
    use crate::path::separation_thresholds;
    use crate::pilots::generate_pilots;
    use approx::assert_relative_eq;

    fn cfg() -> SystemConfig {
        SystemConfig::new(16, 16, 4, 15e6, 60e9, 0.0025, 3e8).unwrap()
    }

    #[test]
    fn disturbance_energy_matches_fake_component() {
        let c = cfg();
        let scene = Scene {
            tx: [3.0, 0.0],
            rx: [10.0, 5.0],
            scatterers: vec![[8.89, -6.05], [7.45, 8.54]],
        };
        let truth = scene_to_params(&scene, &c, 41).unwrap();
        let pilots = generate_pilots(&c, 42);
        let (ut, uth) = separation_thresholds(&c).unwrap();
        let d = FakePathDesign::new(vec![(ut / 20.0, uth / 20.0)], false).unwrap();

        // Without normalization the residual is exactly the fake-path
        // channel, so its energy equals the fake paths' received energy.
        let fakes = crate::precoder::fake_paths_from_design(&truth, &d, &c).unwrap();
        let direct =
            crate::pilots::received_energy(&fakes, &pilots, &c).unwrap() / (c.n * c.g) as f64;
        let via_residual = artificial_noise_power(&truth, &d, &pilots, &c).unwrap();
        assert_relative_eq!(via_residual, direct, max_relative = 1e-10);

        // More disturbance means less information: the baseline is the
        // plain information at an inflated noise level.
        let base = gaussian_baseline_fim(&truth, &d, &pilots, 1e-9, &c).unwrap();
        let plain = crate::fim::exact_fim(truth.paths(), &pilots, 1e-9, &c).unwrap();
        assert!(base.data()[(0, 0)] < plain.data()[(0, 0)]);
    }
}
