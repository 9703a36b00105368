//! Closed-form lower bounds on how well an eavesdropper can separate a fake
//! path from the true path it shadows.
//!
//! Both bounds come from the pilot-averaged pair information: a determinant
//! form (tight, needs the full moment functions) and a fully explicit form
//! (coarser, pure powers of the system constants).  Their validity rests on
//! five assumptions about the offsets; [`check_assumptions`] evaluates all
//! of them and reports the admissible offset window along the design ray.

use crate::asymptotic::{asymptotic_fim, moment_constants, moment_functions};
use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::fim::{crlb_trace, pair_fim, Bounded};
use crate::path::Path;
use crate::pilots::PilotBlock;
use crate::precoder::{parameter_deltas, FakePathDesign};
use std::f64::consts::PI;

/// Names of the five validity assumptions, in flag order.
pub const ASSUMPTION_NAMES: [&str; 5] = [
    "equal-gains",
    "delay-offset-in-window",
    "angle-offset-in-window",
    "phase-budget",
    "delay-angle-coupling",
];

/// Outcome of checking the closed-form bounds' validity assumptions for one
/// true/fake pair under a given design.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssumptionReport {
    /// One flag per assumption, in [`ASSUMPTION_NAMES`] order: the fake gain
    /// equals the true gain; the delay offset lies between the design's
    /// minimum and the admissible maximum; likewise for the angle offset;
    /// the combined delay/angle phase ramp stays within a quarter period;
    /// the delay offset is slaved to the angle offset from below and the
    /// admissible maximum from above.
    pub flags: [bool; 5],
    /// Moment-concentration constant bounding how far the moment products
    /// may drift from their zero-offset values inside the window.
    pub epsilon: f64,
    /// Largest delay offset along the design ray keeping the moment
    /// products within `epsilon`, capped at the design's own offset.
    pub delta_tau_max: f64,
    /// Largest angle offset along the design ray, same cap.
    pub delta_theta_max: f64,
}

/// Concentration constant of the moment products:
/// `2 (O1 O4 O5 O6 - (O2 O3)^2) / (O1 O6 + 2 O2 O3 + O4 O5)` in terms of
/// the index moments.
pub fn epsilon_constant(cfg: &SystemConfig) -> f64 {
    let [o1, o2, o3, o4, o5, o6] = moment_constants(cfg);
    2.0 * (o1 * o4 * o5 * o6 - (o2 * o3) * (o2 * o3)) / (o1 * o6 + 2.0 * o2 * o3 + o4 * o5)
}

fn moment_products(dtau: f64, dtheta: f64, cfg: &SystemConfig) -> (f64, f64, f64) {
    let [m1, m2, m3, m4, m5, m6] = moment_functions(dtau, dtheta, cfg);
    ((m1 * m6).re, (m2 * m3).re, (m4 * m5).re)
}

fn eps_inequalities_hold(dtau: f64, dtheta: f64, eps: f64, cfg: &SystemConfig) -> bool {
    let [o1, o2, o3, o4, o5, o6] = moment_constants(cfg);
    let (m16, m23, m45) = moment_products(dtau, dtheta, cfg);
    (m16 - o1 * o6).abs() < eps && (m23 - o2 * o3).abs() < eps && (m45 - o4 * o5).abs() < eps
}

/// Largest scale of `(dtau, dtheta)` such that the three moment-product
/// inequalities hold on the whole segment from zero: a 4096-step scan finds
/// the first crossing, bisection then sharpens it.
fn offsets_at_epsilon_crossing(dtau: f64, dtheta: f64, cfg: &SystemConfig) -> (f64, f64) {
    let eps = epsilon_constant(cfg);
    let steps = 4096;
    let mut prev = 0.0;
    let mut cross = 1.0;
    for i in 1..=steps {
        let t = i as f64 / steps as f64;
        if !eps_inequalities_hold(t * dtau, t * dtheta, eps, cfg) {
            let (mut lo, mut hi) = (prev, t);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if eps_inequalities_hold(mid * dtau, mid * dtheta, eps, cfg) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            cross = lo;
            break;
        }
        prev = t;
    }
    (cross * dtau, cross * dtheta)
}

/// Evaluates all five validity assumptions for a true/fake pair.
///
/// Never fails: pairs outside the model (for example an angle offset whose
/// sine overflows) simply report the affected flags as false.  The design's
/// first offset pair provides the minimum offsets and the ray along which
/// the admissible maximum is searched.
pub fn check_assumptions(
    truth: &Path,
    fake: &Path,
    design: &FakePathDesign,
    cfg: &SystemConfig,
) -> AssumptionReport {
    let (dtau_min, dtheta_min) = design.sets()[0];
    let (dtau_max, dtheta_max) = offsets_at_epsilon_crossing(dtau_min, dtheta_min, cfg);

    let equal_gains = truth.gamma == fake.gamma;
    let dtau = fake.tau - truth.tau;
    // NaN from an overflowing sine difference propagates into false flags.
    let dtheta = (fake.theta.sin() - truth.theta.sin()).asin();

    let lam_over_4d = cfg.wavelength() / (4.0 * cfg.spacing);
    let ramp_angle = (cfg.nt as f64 - 1.0) * dtheta.sin();
    let ramp_delay = (cfg.n as f64 - 1.0) * cfg.lambda_ratio() * dtau;

    let flags = [
        equal_gains,
        0.0 < dtau_min && dtau_min <= dtau && dtau <= dtau_max,
        0.0 < dtheta_min && dtheta_min <= dtheta && dtheta <= dtheta_max,
        ramp_angle.max(0.0) + ramp_delay.max(0.0) <= lam_over_4d,
        ramp_delay <= dtheta.sin()
            && dtheta.sin() <= (cfg.n as f64 - 1.0) * cfg.lambda_ratio() * dtau_max,
    ];
    AssumptionReport {
        flags,
        epsilon: epsilon_constant(cfg),
        delta_tau_max: dtau_max,
        delta_theta_max: dtheta_max,
    }
}

/// Determinant-form lower bound on the summed delay/angle estimation
/// variance of a true/fake pair, per pilot repetition.
///
/// Only covers pairs with exactly equal gains.  Returns infinity when either
/// determinant factor is nonpositive, meaning the pair is informationless at
/// this order.
pub fn bound_xi(truth: &Path, fake: &Path, sigma2: f64, cfg: &SystemConfig) -> Result<f64> {
    if truth.gamma != fake.gamma {
        return Err(Error::UnsupportedDesign(
            "the determinant bound covers equal-gain pairs only".into(),
        ));
    }
    if !(sigma2 > 0.0) || !sigma2.is_finite() {
        return Err(Error::Config(format!("noise power must be positive, got {sigma2}")));
    }
    let (_, dtau, dtheta) = parameter_deltas(truth, fake)?;
    let [o1, o2, o3, o4, o5, o6] = moment_constants(cfg);
    let (m16, m23, m45) = moment_products(dtau, dtheta, cfg);
    let d_plus = (o1 * o6 + m16) * (o4 * o5 + m45) - (o2 * o3 + m23) * (o2 * o3 + m23);
    let d_minus = (o1 * o6 - m16) * (o4 * o5 - m45) - (o2 * o3 - m23) * (o2 * o3 - m23);
    if d_plus <= 0.0 || d_minus <= 0.0 {
        return Ok(f64::INFINITY);
    }
    let nts = cfg.delay_span();
    let cc = (truth.theta.cos() * fake.theta.cos()).abs();
    let pre = cfg.wavelength() * sigma2
        / (2.0 * PI * PI * cfg.spacing * truth.gamma.norm_sqr() * cc.sqrt());
    Ok(pre * (nts.powi(4) / d_plus).powf(0.25) * (1.0 / d_minus).powf(0.25))
}

/// Fully explicit lower bound: pure powers of the system constants times
/// an inverse square root of the angle offset's sine.  Evaluated raw, with
/// no assumption checking; see [`bound_psi`] for the guarded version.
pub fn psi_value(truth: &Path, fake: &Path, sigma2: f64, cfg: &SystemConfig) -> Result<f64> {
    if !(sigma2 > 0.0) || !sigma2.is_finite() {
        return Err(Error::Config(format!("noise power must be positive, got {sigma2}")));
    }
    let (_, _, dtheta) = parameter_deltas(truth, fake)?;
    let [o1, _, _, o4, o5, o6] = moment_constants(cfg);
    let nt = cfg.nt as f64;
    let poly = 6.0 * nt.powi(4) - 11.0 * nt.powi(3) + 21.0 * nt * nt - 6.0 * nt;
    let cc = (truth.theta.cos() * fake.theta.cos()).abs();
    let p1 = cfg.wavelength().powf(1.5) * sigma2
        / (2f64.sqrt() * PI.powf(2.5) * cfg.spacing.powf(1.5) * truth.gamma.norm_sqr() * cc.sqrt());
    let p2 = (cfg.symbol_time().powi(4) / (o1 * o4 * o5 * o6 * poly)).powf(0.25);
    let p3 = 1.0 / dtheta.sin().abs().sqrt();
    Ok(p1 * p2 * p3)
}

/// The explicit bound, refusing to evaluate unless every validity assumption
/// holds.  The error names the first failing assumption.
pub fn bound_psi(
    truth: &Path,
    fake: &Path,
    design: &FakePathDesign,
    sigma2: f64,
    cfg: &SystemConfig,
) -> Result<f64> {
    let report = check_assumptions(truth, fake, design, cfg);
    for (i, ok) in report.flags.iter().enumerate() {
        if !ok {
            return Err(Error::AssumptionViolated {
                flag: ASSUMPTION_NAMES[i],
                detail: format!(
                    "the explicit bound needs it; admissible offsets along the design ray \
                     reach ({:.4e} s, {:.4e} rad)",
                    report.delta_tau_max, report.delta_theta_max
                ),
            });
        }
    }
    psi_value(truth, fake, sigma2, cfg)
}

/// Everything the bound experiments report for one true/fake pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    /// Determinant-form bound, per pilot repetition.
    pub xi: f64,
    /// Explicit bound evaluated raw, per pilot repetition.
    pub psi: f64,
    /// Trace of the inverse exact pair information, summed over pilots;
    /// infinite when the pair information is numerically singular.
    pub trace_exact: f64,
    /// Trace of the inverse pilot-averaged information divided by the pilot
    /// count, putting it on the same per-transmission scale as
    /// `trace_exact`.
    pub trace_asymptotic: f64,
    pub assumption_flags: [bool; 5],
    pub epsilon: f64,
}

fn trace_or_infinity(t: Bounded<f64>) -> f64 {
    t.value().unwrap_or(f64::INFINITY)
}

/// Assembles the full bound comparison for one pair: both closed forms, the
/// exact and pilot-averaged traces, and the assumption flags.
pub fn bound_report(
    truth: &Path,
    fake: &Path,
    design: &FakePathDesign,
    pilots: &PilotBlock,
    sigma2: f64,
    cfg: &SystemConfig,
) -> Result<BoundReport> {
    let report = check_assumptions(truth, fake, design, cfg);
    let exact = pair_fim(truth, fake, pilots, sigma2, cfg)?;
    let asymptotic = asymptotic_fim(truth, fake, sigma2, cfg)?;
    let all = [0, 1, 2, 3];
    Ok(BoundReport {
        xi: bound_xi(truth, fake, sigma2, cfg)?,
        psi: psi_value(truth, fake, sigma2, cfg)?,
        trace_exact: trace_or_infinity(crlb_trace(&exact, &all)?),
        trace_asymptotic: trace_or_infinity(crlb_trace(&asymptotic, &all)?) / cfg.g as f64,
        assumption_flags: report.flags,
        epsilon: report.epsilon,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::Provenance;
    use crate::Complex;
    use approx::assert_relative_eq;

    fn cfg() -> SystemConfig {
        SystemConfig::new(16, 16, 16, 15e6, 60e9, 0.0025, 3e8).unwrap()
    }

    fn pair(dtau: f64, dtheta_sin: f64) -> (Path, Path) {
        let truth = Path {
            gamma: Complex::new(2e-4, 1e-4),
            tau: 41e-9,
            theta: 0.62,
            provenance: Provenance::Los,
        };
        let fake = Path {
            tau: truth.tau + dtau,
            theta: (truth.theta.sin() + dtheta_sin).asin(),
            provenance: Provenance::Fake,
            ..truth
        };
        (truth, fake)
    }

    #[test]
    fn epsilon_for_sixteen_by_sixteen() {
        assert_relative_eq!(epsilon_constant(&cfg()), 340.0, max_relative = 1e-12);
    }

    #[test]
    fn unequal_gains_are_refused() {
        let c = cfg();
        let (truth, mut fake) = pair(1e-9, 0.02);
        fake.gamma *= 1.5;
        assert!(matches!(
            bound_xi(&truth, &fake, 1.0, &c),
            Err(Error::UnsupportedDesign(_))
        ));
    }

    #[test]
    fn zero_angle_offset_sends_the_explicit_bound_to_infinity() {
        let c = cfg();
        let (truth, fake) = pair(1e-9, 0.0);
        assert!(psi_value(&truth, &fake, 1.0, &c).unwrap().is_infinite());
    }

    #[test]
    fn guarded_bound_names_the_failing_assumption() {
        let c = cfg();
        let (ut, uth) = crate::path::separation_thresholds(&c).unwrap();
        let design = FakePathDesign::new(vec![(ut / 20.0, uth / 20.0)], false).unwrap();
        let (truth, mut fake) = pair(ut / 20.0, (uth / 20.0).sin());
        fake.gamma = Complex::new(9e-4, 0.0);
        let err = bound_psi(&truth, &fake, &design, 1.0, &c).unwrap_err();
        match err {
            Error::AssumptionViolated { flag, .. } => assert_eq!(flag, "equal-gains"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn crossing_search_caps_at_the_design() {
        let c = cfg();
        // Tiny offsets never cross the epsilon band, so the window is the
        // whole ray.
        let (dt, dh) = (1e-12, 1e-6);
        let d = FakePathDesign::new(vec![(dt, dh)], false).unwrap();
        let (truth, fake) = pair(dt, dh.sin());
        let r = check_assumptions(&truth, &fake, &d, &c);
        assert_relative_eq!(r.delta_tau_max, dt, max_relative = 1e-12);
        assert_relative_eq!(r.delta_theta_max, dh, max_relative = 1e-12);
        assert!(r.flags[0]);
    }
}
