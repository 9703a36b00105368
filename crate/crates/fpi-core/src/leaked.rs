//! Information available to an eavesdropper who knows the precoder's
//! functional form.
//!
//! If the injection scheme leaks (say, through a published standard), an
//! attacker no longer faces arbitrary fake paths: it faces two unknown
//! scalars, the delay and angle offsets, jointly with the true channel
//! parameters.  The joint Fisher information over both quantifies how much
//! protection survives such a leak.

use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::fim::{fim_from_derivatives, signal_derivatives, FimMatrix, FimScale, ParamOrdering};
use crate::path::PathSet;
use crate::pilots::PilotBlock;
use crate::precoder::{effective_pilots, FakePathDesign};
use crate::vectors::steering_vector;
use crate::Complex;
use nalgebra::DMatrix;
use std::f64::consts::TAU;

/// Fisher information over the true channel parameters and the two
/// injection offsets, for a single-pair design.
///
/// The channel rows reuse the plain derivatives against the precoded
/// pilots; the two offset rows differentiate the precoder itself.  Designs
/// with several offset pairs are refused: the joint parameterization is
/// defined for one pair.
pub fn leaked_fim(
    truth: &PathSet,
    design: &FakePathDesign,
    pilots: &PilotBlock,
    sigma2: f64,
    cfg: &SystemConfig,
) -> Result<FimMatrix> {
    if design.sets().len() != 1 {
        return Err(Error::UnsupportedDesign(format!(
            "joint offset estimation is defined for one offset pair, design has {}",
            design.sets().len()
        )));
    }
    if !(sigma2 > 0.0) || !sigma2.is_finite() {
        return Err(Error::Config(format!("noise power must be positive, got {sigma2}")));
    }
    let (dtau_bar, dtheta_bar) = design.sets()[0];
    let kappa = design.power_factor(cfg);
    let effective = effective_pilots(pilots, design, cfg)?;
    let channel_rows = signal_derivatives(truth.paths(), &effective, cfg)?;

    let p = truth.len();
    let cols = cfg.g * cfg.n;
    let mut derivs = DMatrix::from_element(4 * p + 2, cols, Complex::ZERO);
    derivs.view_mut((0, 0), (4 * p, cols)).copy_from(&channel_rows);

    // Offset rows: differentiating the precoder diagonal instead of the
    // channel.  The power factor is treated as a known constant.
    let nt = cfg.nt as f64;
    let delay_rate = TAU / cfg.delay_span();
    let angle_rate = TAU * cfg.spacing / cfg.wavelength();
    let precoder_steer = steering_vector(dtheta_bar, cfg);
    let steers: Vec<Vec<Complex>> =
        truth.paths().iter().map(|pt| steering_vector(pt.theta, cfg)).collect();
    for sub in 0..cfg.n {
        let mut acc_delay = vec![Complex::ZERO; cfg.g];
        let mut acc_angle = vec![Complex::ZERO; cfg.g];
        for (k, pt) in truth.paths().iter().enumerate() {
            let shifted =
                Complex::from_polar(1.0, -delay_rate * sub as f64 * (pt.tau + dtau_bar));
            for rep in 0..cfg.g {
                let s = pilots.at(rep, sub);
                let mut plain = Complex::ZERO;
                let mut weighted = Complex::ZERO;
                for m in 0..cfg.nt {
                    let w = steers[k][m].conj() * precoder_steer[m].conj() * s[m];
                    plain += w;
                    weighted += w * m as f64;
                }
                acc_delay[rep] += pt.gamma * shifted * plain;
                acc_angle[rep] += pt.gamma * shifted * weighted;
            }
        }
        for rep in 0..cfg.g {
            let col = rep * cfg.n + sub;
            derivs[(4 * p, col)] =
                -Complex::i() * delay_rate * sub as f64 * nt * kappa * acc_delay[rep];
            derivs[(4 * p + 1, col)] =
                Complex::i() * angle_rate * dtheta_bar.cos() * nt * kappa * acc_angle[rep];
        }
    }

    FimMatrix::new(
        fim_from_derivatives(&derivs, sigma2),
        ParamOrdering::ChannelAndDesign { paths: p },
        FimScale::SummedOverPilots,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{scene_to_params, Scene};
    use crate::path::separation_thresholds;
    use crate::pilots::generate_pilots;

    fn cfg() -> SystemConfig {
        SystemConfig::new(16, 16, 4, 15e6, 60e9, 0.0025, 3e8).unwrap()
    }

    fn scene() -> Scene {
        Scene { tx: [3.0, 0.0], rx: [10.0, 5.0], scatterers: vec![[8.89, -6.05], [7.45, 8.54]] }
    }

    #[test]
    fn multi_pair_designs_are_refused() {
        let c = cfg();
        let truth = scene_to_params(&scene(), &c, 31).unwrap();
        let pilots = generate_pilots(&c, 32);
        let (ut, uth) = separation_thresholds(&c).unwrap();
        let two = FakePathDesign::new(
            vec![(ut / 20.0, uth / 20.0), (ut / 10.0, uth / 10.0)],
            false,
        )
        .unwrap();
        assert!(matches!(
            leaked_fim(&truth, &two, &pilots, 1e-9, &c),
            Err(Error::UnsupportedDesign(_))
        ));
    }

    #[test]
    fn dimensions_and_channel_block_match_plain_information() {
        let c = cfg();
        let truth = scene_to_params(&scene(), &c, 33).unwrap();
        let pilots = generate_pilots(&c, 34);
        let (ut, uth) = separation_thresholds(&c).unwrap();
        let d = FakePathDesign::new(vec![(ut / 20.0, uth / 20.0)], false).unwrap();
        let leaked = leaked_fim(&truth, &d, &pilots, 2e-9, &c).unwrap();
        assert_eq!(leaked.dim(), 14);

        // The channel block is the plain information against the precoded
        // pilots: a receiver that knows the offsets exactly keeps it.
        let effective = effective_pilots(&pilots, &d, &c).unwrap();
        let plain = crate::fim::exact_fim(truth.paths(), &effective, 2e-9, &c).unwrap();
        for i in 0..12 {
            for j in 0..12 {
                approx::assert_relative_eq!(
                    leaked.data()[(i, j)],
                    plain.data()[(i, j)],
                    max_relative = 1e-12,
                    epsilon = 1e-300
                );
            }
        }
    }
}
