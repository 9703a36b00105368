use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::geometry::{scene_geometry, Scene};
use crate::path::{Path, PathSet, Provenance};
use crate::pilots::PilotBlock;
use crate::vectors::fourier_vector;
use crate::Complex;
use std::f64::consts::TAU;

/// Parameters of the fake-path injection precoder.
///
/// Each `(delay offset, angle offset)` pair adds one precoder term, which
/// duplicates every true path at the offset delay and angle.  Offsets are the
/// designer's only knobs: the precoder needs no channel knowledge at all.
///
/// With `normalize` set, the precoder is rescaled so the average transmit
/// power matches an unprecoded transmission; otherwise injection roughly
/// doubles the radiated energy per term.
#[derive(Debug, Clone, PartialEq)]
pub struct FakePathDesign {
    sets: Vec<(f64, f64)>,
    pub normalize: bool,
}

impl FakePathDesign {
    /// `sets` holds one `(delay offset seconds, angle offset radians)` pair
    /// per injected path set; at least one is required.
    pub fn new(sets: Vec<(f64, f64)>, normalize: bool) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::Config("a fake-path design needs at least one offset pair".into()));
        }
        for (i, &(dt, dth)) in sets.iter().enumerate() {
            if !dt.is_finite() || !dth.is_finite() {
                return Err(Error::Config(format!("offset pair {i} is not finite")));
            }
        }
        Ok(Self { sets, normalize })
    }

    pub fn sets(&self) -> &[(f64, f64)] {
        &self.sets
    }

    /// Power renormalization factor applied to the precoder: one when
    /// `normalize` is off, otherwise the constant that restores the average
    /// Frobenius norm of an identity precoder.
    pub fn power_factor(&self, cfg: &SystemConfig) -> f64 {
        if !self.normalize {
            return 1.0;
        }
        let mut total = 0.0;
        for sub in 0..cfg.n {
            total += raw_diagonal(self, sub, cfg).iter().map(Complex::norm_sqr).sum::<f64>();
        }
        ((cfg.n * cfg.nt) as f64 / total).sqrt()
    }
}

/// What the legitimate receiver learns over the secure side channel: the
/// injection offsets, nothing else.  That is enough to rebuild the precoder
/// and estimate against the true channel as if no injection happened.
#[derive(Debug, Clone, PartialEq)]
pub struct SharedInfo {
    pub design: FakePathDesign,
}

impl SharedInfo {
    pub fn new(design: &FakePathDesign) -> Self {
        Self { design: design.clone() }
    }

    /// The effective pilots the legitimate receiver plugs into its
    /// estimator in place of the raw ones.
    pub fn compensated_pilots(&self, pilots: &PilotBlock, cfg: &SystemConfig) -> Result<PilotBlock> {
        effective_pilots(pilots, &self.design, cfg)
    }
}

fn raw_diagonal(design: &FakePathDesign, sub: usize, cfg: &SystemConfig) -> Vec<Complex> {
    let scale = (cfg.nt as f64).sqrt();
    let mut diag = vec![Complex::ONE; cfg.nt];
    for &(dtau, dtheta) in design.sets() {
        let delay_phase = Complex::from_polar(1.0, -TAU * sub as f64 * dtau / cfg.delay_span());
        let steer = fourier_vector(cfg.nt, cfg.spacing * dtheta.sin() / cfg.wavelength());
        for (m, a) in steer.iter().enumerate() {
            diag[m] += scale * delay_phase * a.conj();
        }
    }
    diag
}

/// Diagonal of the injection precoder on subcarrier `sub`:
/// `I + sqrt(Nt) exp(-i 2 pi sub dtau / (N Ts)) diag(steer(dtheta)^H)`
/// summed over offset pairs, times the power factor when normalizing.
pub fn precoder_matrix(design: &FakePathDesign, sub: usize, cfg: &SystemConfig) -> Vec<Complex> {
    let kappa = design.power_factor(cfg);
    let mut diag = raw_diagonal(design, sub, cfg);
    if kappa != 1.0 {
        for d in &mut diag {
            *d *= kappa;
        }
    }
    diag
}

/// Applies the precoder to every pilot vector: entrywise products of the
/// precoder diagonal with the transmit vector, per subcarrier.
pub fn effective_pilots(
    pilots: &PilotBlock,
    design: &FakePathDesign,
    cfg: &SystemConfig,
) -> Result<PilotBlock> {
    pilots.matches(cfg)?;
    let diags: Vec<Vec<Complex>> =
        (0..cfg.n).map(|sub| precoder_matrix(design, sub, cfg)).collect();
    let mut data = Vec::with_capacity(pilots.data().len());
    for rep in 0..cfg.g {
        for sub in 0..cfg.n {
            data.extend(pilots.at(rep, sub).iter().zip(&diags[sub]).map(|(s, d)| s * d));
        }
    }
    PilotBlock::from_data(cfg.g, cfg.n, cfg.nt, data)
}

fn fake_delay_angle(
    tau: f64,
    theta: f64,
    dtau: f64,
    dtheta: f64,
    cfg: &SystemConfig,
) -> Result<(f64, f64)> {
    let fake_tau = tau + dtau;
    if !(fake_tau > 0.0 && fake_tau <= cfg.delay_span()) {
        return Err(Error::ModelRange(format!(
            "fake delay {fake_tau:.6e} s leaves the unambiguous span (0, {:.6e}] s",
            cfg.delay_span()
        )));
    }
    let s = theta.sin() + dtheta.sin();
    if s.abs() > 1.0 {
        return Err(Error::AngleOverflow(s.abs()));
    }
    Ok((fake_tau, s.asin()))
}

/// The fake paths an eavesdropper cannot distinguish from real ones: each
/// offset pair duplicates every true path with the same gain, the delay
/// shifted by the pair's delay offset, and the sine of the angle shifted by
/// the sine of its angle offset.
///
/// Errors when a fake delay leaves the unambiguous span or a fake angle
/// would need a sine beyond one.  Gains here are unscaled; power
/// normalization is applied by [`eve_effective_paths`], which scales true
/// and fake paths alike.
pub fn fake_paths_from_design(
    truth: &PathSet,
    design: &FakePathDesign,
    cfg: &SystemConfig,
) -> Result<Vec<Path>> {
    let mut fakes = Vec::with_capacity(design.sets().len() * truth.len());
    for &(dtau, dtheta) in design.sets() {
        for p in truth.paths() {
            let (tau, theta) = fake_delay_angle(p.tau, p.theta, dtau, dtheta, cfg)?;
            fakes.push(Path { gamma: p.gamma, tau, theta, provenance: Provenance::Fake });
        }
    }
    Ok(fakes)
}

/// The channel the eavesdropper actually faces: true paths followed by the
/// injected ones, all gains scaled by the power factor when the design
/// normalizes transmit power.
pub fn eve_effective_paths(
    truth: &PathSet,
    design: &FakePathDesign,
    cfg: &SystemConfig,
) -> Result<PathSet> {
    let kappa = design.power_factor(cfg);
    let mut all = truth.paths().to_vec();
    all.extend(fake_paths_from_design(truth, design, cfg)?);
    if kappa != 1.0 {
        for p in &mut all {
            p.gamma *= kappa;
        }
    }
    PathSet::new(all, cfg)
}

/// Differences between a fake path and the true path it shadows, in the
/// parameterization used by the closed-form bounds: gain difference, delay
/// difference, and the angle whose sine is the sine difference.
pub fn parameter_deltas(truth: &Path, fake: &Path) -> Result<(Complex, f64, f64)> {
    let s = fake.theta.sin() - truth.theta.sin();
    if s.abs() > 1.0 {
        return Err(Error::AngleOverflow(s.abs()));
    }
    Ok((fake.gamma - truth.gamma, fake.tau - truth.tau, s.asin()))
}

/// Whether fake paths could be explained by physical scatterers, and where
/// those scatterers would sit.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignFeasibility {
    /// True when every offset pair has a strictly positive delay offset, so
    /// each fake path is longer than the path it shadows and a bounce
    /// geometry exists for it.
    pub feasible: bool,
    /// Scatterer position explaining each fake path, set-major in path
    /// order; `None` where the fake delay is shorter than the direct range.
    pub scatterers: Vec<Option<[f64; 2]>>,
}

/// Checks that a design's fake paths are geometrically consistent: an
/// eavesdropper trying to back-project them onto the scene must find
/// plausible scatterer positions, otherwise the injection is detectable.
pub fn design_feasibility(
    scene: &Scene,
    design: &FakePathDesign,
    cfg: &SystemConfig,
) -> Result<DesignFeasibility> {
    let geometry = scene_geometry(scene, cfg.light_speed)?;
    let mut scatterers = Vec::with_capacity(design.sets().len() * geometry.len());
    let mut feasible = true;
    for &(dtau, dtheta) in design.sets() {
        if !(dtau > 0.0) {
            feasible = false;
        }
        for &(tau, theta) in &geometry {
            let (fake_tau, fake_theta) = fake_delay_angle(tau, theta, dtau, dtheta, cfg)?;
            let v = crate::geometry::feasible_scatterer(
                fake_tau,
                fake_theta,
                scene.tx,
                scene.rx,
                cfg.light_speed,
            );
            feasible &= v.is_some();
            scatterers.push(v);
        }
    }
    Ok(DesignFeasibility { feasible, scatterers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::scene_to_params;
    use crate::pilots::generate_pilots;
    use crate::vectors::channel_vector;
    use approx::assert_relative_eq;

    fn cfg() -> SystemConfig {
        SystemConfig::new(16, 16, 2, 15e6, 60e9, 0.0025, 3e8).unwrap()
    }

    fn scene() -> Scene {
        Scene { tx: [3.0, 0.0], rx: [10.0, 5.0], scatterers: vec![[8.89, -6.05], [7.45, 8.54]] }
    }

    fn design(cfg: &SystemConfig) -> FakePathDesign {
        let (ut, uth) = crate::path::separation_thresholds(cfg).unwrap();
        FakePathDesign::new(vec![(ut / 20.0, uth / 20.0)], false).unwrap()
    }

    #[test]
    fn zero_offsets_double_the_identity() {
        let c = cfg();
        let d = FakePathDesign::new(vec![(0.0, 0.0)], false).unwrap();
        for sub in [0, 3, 15] {
            for e in precoder_matrix(&d, sub, &c) {
                assert_relative_eq!(e.re, 2.0, max_relative = 1e-14);
                assert_relative_eq!(e.im, 0.0, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn injection_identity() {
        let c = cfg();
        let truth = scene_to_params(&scene(), &c, 400).unwrap();
        let d = design(&c);
        let fakes = fake_paths_from_design(&truth, &d, &c).unwrap();
        for sub in 0..c.n {
            let diag = precoder_matrix(&d, sub, &c);
            let h = channel_vector(truth.paths(), sub, &c);
            let h_fake = channel_vector(&fakes, sub, &c);
            for m in 0..c.nt {
                let lhs = h[m] * diag[m];
                let rhs = h[m] + h_fake[m];
                assert_relative_eq!(lhs.re, rhs.re, max_relative = 1e-12, epsilon = 1e-18);
                assert_relative_eq!(lhs.im, rhs.im, max_relative = 1e-12, epsilon = 1e-18);
            }
        }
    }

    #[test]
    fn compensation_is_exact() {
        let c = cfg();
        let truth = scene_to_params(&scene(), &c, 401).unwrap();
        let d = design(&c);
        let pilots = generate_pilots(&c, 77);
        let shared = SharedInfo::new(&d);
        let eff = shared.compensated_pilots(&pilots, &c).unwrap();
        for sub in 0..c.n {
            let diag = precoder_matrix(&d, sub, &c);
            let h = channel_vector(truth.paths(), sub, &c);
            for rep in 0..c.g {
                // h (Phi s) must equal (h Phi) s down to rounding: per
                // antenna a single reassociation, per symbol a 16-term sum.
                let mut via_pilots = Complex::ZERO;
                let mut via_channel = Complex::ZERO;
                for m in 0..c.nt {
                    let a = h[m] * eff.at(rep, sub)[m];
                    let b = h[m] * diag[m] * pilots.at(rep, sub)[m];
                    assert_relative_eq!(a.re, b.re, max_relative = 1e-15, epsilon = 1e-20);
                    assert_relative_eq!(a.im, b.im, max_relative = 1e-15, epsilon = 1e-20);
                    via_pilots += a;
                    via_channel += b;
                }
                assert_relative_eq!(via_pilots.re, via_channel.re, max_relative = 1e-14, epsilon = 1e-19);
                assert_relative_eq!(via_pilots.im, via_channel.im, max_relative = 1e-14, epsilon = 1e-19);
            }
        }
    }

    #[test]
    fn deltas_recover_the_design() {
        let c = cfg();
        let truth = scene_to_params(&scene(), &c, 402).unwrap();
        let d = design(&c);
        let fakes = fake_paths_from_design(&truth, &d, &c).unwrap();
        let (dtau, dtheta) = d.sets()[0];
        for (t, f) in truth.paths().iter().zip(&fakes) {
            let (dg, dt, dth) = parameter_deltas(t, f).unwrap();
            assert_eq!(dg, Complex::ZERO);
            assert_relative_eq!(dt, dtau, max_relative = 1e-12);
            assert_relative_eq!(dth, dtheta, max_relative = 1e-12);
        }
    }

    #[test]
    fn eve_sees_true_then_fake_paths() {
        let c = cfg();
        let truth = scene_to_params(&scene(), &c, 403).unwrap();
        let eff = eve_effective_paths(&truth, &design(&c), &c).unwrap();
        assert_eq!(eff.len(), 6);
        assert_eq!(eff.paths()[..3], truth.paths()[..]);
        assert!(eff.paths()[3..].iter().all(|p| p.provenance == Provenance::Fake));
    }

    #[test]
    fn angle_overflow_and_delay_range_are_rejected() {
        let c = cfg();
        let truth = scene_to_params(&scene(), &c, 404).unwrap();
        let steep = FakePathDesign::new(vec![(1e-9, 1.4)], false).unwrap();
        assert!(matches!(
            fake_paths_from_design(&truth, &steep, &c),
            Err(Error::AngleOverflow(_))
        ));
        let late = FakePathDesign::new(vec![(c.delay_span(), 0.01)], false).unwrap();
        assert!(matches!(fake_paths_from_design(&truth, &late, &c), Err(Error::ModelRange(_))));
    }

    #[test]
    fn normalization_restores_average_power() {
        let c = cfg();
        let (ut, uth) = crate::path::separation_thresholds(&c).unwrap();
        let d = FakePathDesign::new(vec![(ut / 20.0, uth / 20.0)], true).unwrap();
        let total: f64 = (0..c.n)
            .map(|sub| precoder_matrix(&d, sub, &c).iter().map(Complex::norm_sqr).sum::<f64>())
            .sum();
        assert_relative_eq!(total, (c.n * c.nt) as f64, max_relative = 1e-12);

        // With zero offsets the raw precoder is 2I, so normalizing halves it
        // back to the identity.
        let dz = FakePathDesign::new(vec![(0.0, 0.0)], true).unwrap();
        assert_relative_eq!(dz.power_factor(&c), 0.5, max_relative = 1e-14);
    }

    #[test]
    fn feasibility_requires_positive_delay_offsets() {
        let c = cfg();
        let ok = design_feasibility(&scene(), &design(&c), &c).unwrap();
        assert!(ok.feasible);
        assert_eq!(ok.scatterers.len(), 3);
        assert!(ok.scatterers.iter().all(Option::is_some));

        let flat = FakePathDesign::new(vec![(0.0, 0.05)], false).unwrap();
        assert!(!design_feasibility(&scene(), &flat, &c).unwrap().feasible);

        let negative = FakePathDesign::new(vec![(-1e-9, 0.05)], false).unwrap();
        let r = design_feasibility(&scene(), &negative, &c).unwrap();
        assert!(!r.feasible);
        assert!(r.scatterers[0].is_none());
    }
}
