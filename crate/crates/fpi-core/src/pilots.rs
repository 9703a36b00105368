use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::path::Path;
use crate::vectors::channel_vector;
use crate::Complex;
use rand::Rng;
use std::f64::consts::TAU;

/// Pilot symbols for a whole transmission: `g` repetitions, `n` subcarriers,
/// `nt` antennas, stored row-major in that order.
///
/// The storage order matters: because repetitions are generated outermost,
/// the pilots of a short transmission are a prefix of a longer one from the
/// same seed, which keeps experiments at different `g` comparable.
#[derive(Debug, Clone, PartialEq)]
pub struct PilotBlock {
    pub g: usize,
    pub n: usize,
    pub nt: usize,
    data: Vec<Complex>,
}

impl PilotBlock {
    pub fn from_data(g: usize, n: usize, nt: usize, data: Vec<Complex>) -> Result<Self> {
        if data.len() != g * n * nt {
            return Err(Error::Dimension(format!(
                "pilot data has {} entries, expected {}*{}*{} = {}",
                data.len(),
                g,
                n,
                nt,
                g * n * nt
            )));
        }
        Ok(Self { g, n, nt, data })
    }

    /// The transmit vector for repetition `rep` on subcarrier `sub`.
    pub fn at(&self, rep: usize, sub: usize) -> &[Complex] {
        let base = (rep * self.n + sub) * self.nt;
        &self.data[base..base + self.nt]
    }

    pub fn data(&self) -> &[Complex] {
        &self.data
    }

    pub(crate) fn matches(&self, cfg: &SystemConfig) -> Result<()> {
        if self.g != cfg.g || self.n != cfg.n || self.nt != cfg.nt {
            return Err(Error::Dimension(format!(
                "pilot block is {}x{}x{}, config wants {}x{}x{}",
                self.g, self.n, self.nt, cfg.g, cfg.n, cfg.nt
            )));
        }
        Ok(())
    }
}

/// Draws constant-modulus pilots: every entry is `exp(i phi) / sqrt(Nt)`
/// with an independent uniform phase, generated in storage order.
pub fn generate_pilots(cfg: &SystemConfig, seed: u64) -> PilotBlock {
    let mut rng = crate::seed::rng_from_seed(seed);
    let amp = 1.0 / (cfg.nt as f64).sqrt();
    let data = (0..cfg.g * cfg.n * cfg.nt)
        .map(|_| Complex::from_polar(amp, rng.random::<f64>() * TAU))
        .collect();
    PilotBlock { g: cfg.g, n: cfg.n, nt: cfg.nt, data }
}

/// Total received signal energy `sum_{g,n} |h(n) s(g,n)|^2` for a noiseless
/// channel built from `paths`.
pub fn received_energy(paths: &[Path], pilots: &PilotBlock, cfg: &SystemConfig) -> Result<f64> {
    pilots.matches(cfg)?;
    let mut total = 0.0;
    for sub in 0..cfg.n {
        let row = channel_vector(paths, sub, cfg);
        for rep in 0..cfg.g {
            let y: Complex = row.iter().zip(pilots.at(rep, sub)).map(|(h, s)| h * s).sum();
            total += y.norm_sqr();
        }
    }
    Ok(total)
}

/// Noiseless received symbols `h(n) s(g, n)`, flattened repetition-major to
/// match the derivative tables.
pub fn received_symbols(
    paths: &[Path],
    pilots: &PilotBlock,
    cfg: &SystemConfig,
) -> Result<Vec<Complex>> {
    pilots.matches(cfg)?;
    let mut out = vec![Complex::ZERO; cfg.g * cfg.n];
    for sub in 0..cfg.n {
        let row = channel_vector(paths, sub, cfg);
        for rep in 0..cfg.g {
            out[rep * cfg.n + sub] =
                row.iter().zip(pilots.at(rep, sub)).map(|(h, s)| h * s).sum();
        }
    }
    Ok(out)
}

/// Noise power that realizes a target SNR: the mean received energy per
/// resource element divided by the linear SNR.  Errors when the signal
/// carries no energy, since no noise level can realize an SNR then.
pub fn sigma_from_snr(energy: f64, cfg: &SystemConfig, snr_db: f64) -> Result<f64> {
    if !(energy > 0.0) {
        return Err(Error::ZeroSignal);
    }
    Ok(energy / ((cfg.n * cfg.g) as f64 * 10f64.powf(snr_db / 10.0)))
}
