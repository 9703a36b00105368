use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::Complex;

/// Where a propagation path comes from.
///
/// Fake paths are not physical: they are the image of a true path under the
/// injection precoder, but an eavesdropper cannot tell them apart from real
/// ones, so they carry the same representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Direct transmitter-receiver path.
    Los,
    /// Single-bounce reflection off a scatterer.
    Scatter,
    /// Artificial path induced by the injection precoder.
    Fake,
}

/// One propagation path: complex gain, delay, and departure angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Path {
    /// Complex channel gain.
    pub gamma: Complex,
    /// Propagation delay in seconds.
    pub tau: f64,
    /// Angle of departure at the transmit array, radians.
    pub theta: f64,
    pub provenance: Provenance,
}

impl Path {
    /// Delay in units of the unambiguous span `N Ts`; valid range `(0, 1]`.
    pub fn normalized_delay(&self, cfg: &SystemConfig) -> f64 {
        self.tau / cfg.delay_span()
    }

    /// Spatial frequency `spacing * sin(theta) / wavelength`; valid range
    /// `(-1/2, 1/2]`.
    pub fn normalized_angle(&self, cfg: &SystemConfig) -> f64 {
        cfg.spacing * self.theta.sin() / cfg.wavelength()
    }
}

/// An ordered, validated collection of paths forming one channel.
///
/// Order is canonical: the line-of-sight path first, then scattered paths,
/// then fake paths.  Construction checks that every delay lies in the
/// unambiguous span and every spatial frequency in the principal interval,
/// so downstream code can rely on the model being identifiable.
#[derive(Debug, Clone, PartialEq)]
pub struct PathSet {
    paths: Vec<Path>,
}

impl PathSet {
    pub fn new(paths: Vec<Path>, cfg: &SystemConfig) -> Result<Self> {
        if paths.is_empty() {
            return Err(Error::Config("a channel needs at least one path".into()));
        }
        if paths[0].provenance != Provenance::Los {
            return Err(Error::Config("the first path must be the line-of-sight path".into()));
        }
        let mut seen_fake = false;
        for (k, p) in paths.iter().enumerate() {
            if k > 0 && p.provenance == Provenance::Los {
                return Err(Error::Config(format!(
                    "path {k} is a second line-of-sight path; only one is allowed"
                )));
            }
            match p.provenance {
                Provenance::Fake => seen_fake = true,
                Provenance::Scatter if seen_fake => {
                    return Err(Error::Config(format!(
                        "path {k}: scattered paths must precede fake paths"
                    )));
                }
                _ => {}
            }
            if !p.gamma.re.is_finite() || !p.gamma.im.is_finite() {
                return Err(Error::Config(format!("path {k} has a non-finite gain")));
            }
            let nd = p.normalized_delay(cfg);
            if !(nd > 0.0 && nd <= 1.0) {
                return Err(Error::ModelRange(format!(
                    "path {k} delay {:.6e} s outside the unambiguous span (0, {:.6e}] s",
                    p.tau,
                    cfg.delay_span()
                )));
            }
            let na = p.normalized_angle(cfg);
            if !(na > -0.5 && na <= 0.5) {
                return Err(Error::ModelRange(format!(
                    "path {k} spatial frequency {na:.6} outside (-1/2, 1/2]"
                )));
            }
        }
        Ok(Self { paths })
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Normalized delays of all paths, in path order.
    pub fn normalized_delays(&self, cfg: &SystemConfig) -> Vec<f64> {
        self.paths.iter().map(|p| p.normalized_delay(cfg)).collect()
    }

    /// Normalized spatial frequencies of all paths, in path order.
    pub fn normalized_angles(&self, cfg: &SystemConfig) -> Vec<f64> {
        self.paths.iter().map(|p| p.normalized_angle(cfg)).collect()
    }
}

/// Minimum pairwise wrap-around distance between normalized coordinates.
///
/// Coordinates live on a unit circle, so the distance between two values is
/// `min(|a - b|, 1 - |a - b|)`.  Returns `None` for fewer than two values.
pub fn min_separation(kappas: &[f64]) -> Option<f64> {
    if kappas.len() < 2 {
        return None;
    }
    let mut best = f64::INFINITY;
    for i in 0..kappas.len() {
        for j in i + 1..kappas.len() {
            let d = (kappas[i] - kappas[j]).abs();
            best = best.min(d.min(1.0 - d));
        }
    }
    Some(best)
}

/// Resolution limits of the link: the smallest delay and angle offsets that
/// keep an injected path well separated from the true ones.
///
/// The delay threshold is `N Ts / floor((N-1)/4)` seconds and the angle
/// threshold is `asin(wavelength / (spacing * floor((Nt-1)/4)))` radians.
/// Errors when an array is too small for the quarter-resolution rule or the
/// arcsine argument exceeds one.
pub fn separation_thresholds(cfg: &SystemConfig) -> Result<(f64, f64)> {
    let qn = (cfg.n - 1) / 4;
    let qnt = (cfg.nt - 1) / 4;
    if qn == 0 {
        return Err(Error::Config(format!(
            "{} subcarriers are too few to place a separated fake delay (need at least 5)",
            cfg.n
        )));
    }
    if qnt == 0 {
        return Err(Error::Config(format!(
            "{} antennas are too few to place a separated fake angle (need at least 5)",
            cfg.nt
        )));
    }
    let arg = cfg.wavelength() / (cfg.spacing * qnt as f64);
    if arg > 1.0 {
        return Err(Error::Config(format!(
            "angle threshold undefined: wavelength/(spacing*{qnt}) = {arg:.4} exceeds 1"
        )));
    }
    Ok((cfg.delay_span() / qn as f64, arg.asin()))
}
