//! Large-sample approximation of the pair Fisher information.
//!
//! Averaging over constant-modulus pilots replaces the pilot-dependent exact
//! information with deterministic subcarrier and antenna moments.  True and
//! fake rows couple only through moment functions of the parameter offsets,
//! which is what makes small offsets destructive: as the offsets shrink the
//! moment functions approach the moment constants and the matrix becomes
//! singular.

use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::fim::{FimMatrix, FimScale, ParamOrdering};
use crate::path::Path;
use crate::precoder::parameter_deltas;
use crate::Complex;
use std::f64::consts::{PI, TAU};

/// Subcarrier and antenna index moments: zeroth through second moments of
/// `0..N` and of `0..Nt` (the antenna ones divided by `Nt`), in the order
/// second-subcarrier, first-subcarrier, first-antenna, second-antenna,
/// zeroth-subcarrier, zeroth-antenna.
pub fn moment_constants(cfg: &SystemConfig) -> [f64; 6] {
    let n = cfg.n as f64;
    let nt = cfg.nt as f64;
    [
        n * (n - 1.0) * (2.0 * n - 1.0) / 6.0,
        n * (n - 1.0) / 2.0,
        (nt - 1.0) / 2.0,
        (nt - 1.0) * (2.0 * nt - 1.0) / 6.0,
        n,
        1.0,
    ]
}

/// Offset-dependent counterparts of [`moment_constants`]: the same index
/// moments taken against the phase ramps a delay offset `dtau` and an angle
/// offset `dtheta` put across subcarriers and antennas.  At zero offsets
/// they equal the constants exactly.
pub fn moment_functions(dtau: f64, dtheta: f64, cfg: &SystemConfig) -> [Complex; 6] {
    let mut m = [Complex::ZERO; 6];
    let delay_step = -TAU * dtau / cfg.delay_span();
    for n in 0..cfg.n {
        let e = Complex::from_polar(1.0, delay_step * n as f64);
        let nf = n as f64;
        m[0] += nf * nf * e;
        m[1] += nf * e;
        m[4] += e;
    }
    let angle_step = TAU * cfg.spacing * dtheta.sin() / cfg.wavelength();
    for a in 0..cfg.nt {
        let e = Complex::from_polar(1.0, angle_step * a as f64);
        let af = a as f64;
        m[2] += af * e;
        m[3] += af * af * e;
        m[5] += e;
    }
    let nt = cfg.nt as f64;
    for i in [2, 3, 5] {
        m[i] /= nt;
    }
    m
}

/// Pilot-averaged Fisher information of a true/fake pair, gains known,
/// normalized to a single pilot repetition.
///
/// The matrix is `8 pi^2 / (sigma2 (N Ts)^2)` times the real part of a
/// Hermitian coupling matrix built from the moment constants on the
/// diagonal blocks and the moment functions on the cross blocks.
pub fn asymptotic_fim(
    truth: &Path,
    fake: &Path,
    sigma2: f64,
    cfg: &SystemConfig,
) -> Result<FimMatrix> {
    if !(sigma2 > 0.0) || !sigma2.is_finite() {
        return Err(Error::Config(format!("noise power must be positive, got {sigma2}")));
    }
    let (_, dtau, dtheta) = parameter_deltas(truth, fake)?;
    let [o1, o2, o3, o4, o5, o6] = moment_constants(cfg);
    let [m1, m2, m3, m4, m5, m6] = moment_functions(dtau, dtheta, cfg);
    let lam_ratio = cfg.lambda_ratio();
    let cos_t = truth.theta.cos();
    let cos_f = fake.theta.cos();
    let g2 = truth.gamma.norm_sqr();
    let gf2 = fake.gamma.norm_sqr();
    let x = truth.gamma.conj() * fake.gamma;

    let mut gm = [[Complex::ZERO; 4]; 4];
    gm[0][0] = Complex::from(o1 * o6 * g2);
    gm[0][1] = Complex::from(-o2 * o3 * g2 * cos_t / lam_ratio);
    gm[0][2] = m1 * m6 * x;
    gm[0][3] = -m2 * m3 * x * cos_f / lam_ratio;
    gm[1][1] = Complex::from(o4 * o5 * g2 * cos_t * cos_t / (lam_ratio * lam_ratio));
    gm[1][2] = -m2 * m3 * x * cos_t / lam_ratio;
    gm[1][3] = m4 * m5 * x * cos_t * cos_f / (lam_ratio * lam_ratio);
    gm[2][2] = Complex::from(o1 * o6 * gf2);
    gm[2][3] = Complex::from(-o2 * o3 * gf2 * cos_f / lam_ratio);
    gm[3][3] = Complex::from(o4 * o5 * gf2 * cos_f * cos_f / (lam_ratio * lam_ratio));
    for i in 0..4 {
        for j in 0..i {
            gm[i][j] = gm[j][i].conj();
        }
    }

    let pre = 8.0 * PI * PI / (sigma2 * cfg.delay_span() * cfg.delay_span());
    let data = nalgebra::DMatrix::from_fn(4, 4, |i, j| pre * gm[i][j].re);
    FimMatrix::new(data, ParamOrdering::Pair, FimScale::PerSymbol)
}
