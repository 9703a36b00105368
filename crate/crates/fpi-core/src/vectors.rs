use crate::config::SystemConfig;
use crate::path::Path;
use crate::Complex;
use std::f64::consts::TAU;

/// Unit-norm Fourier vector of length `l` at normalized frequency `x`:
/// entry `m` is `exp(-i 2 pi m x) / sqrt(l)`.
pub fn fourier_vector(l: usize, x: f64) -> Vec<Complex> {
    (0..l)
        .map(|m| Complex::from_polar(1.0 / (l as f64).sqrt(), -TAU * m as f64 * x))
        .collect()
}

/// Transmit-array steering vector for departure angle `theta`.
pub fn steering_vector(theta: f64, cfg: &SystemConfig) -> Vec<Complex> {
    fourier_vector(cfg.nt, cfg.spacing * theta.sin() / cfg.wavelength())
}

/// Channel row vector on subcarrier `n`: the superposition
/// `sqrt(Nt) * sum_k gamma_k exp(-i 2 pi n tau_k / (N Ts)) steer(theta_k)^H`,
/// returned as `Nt` entries indexed by transmit antenna.
pub fn channel_vector(paths: &[Path], n: usize, cfg: &SystemConfig) -> Vec<Complex> {
    assert!(n < cfg.n, "subcarrier index {n} out of range for {} subcarriers", cfg.n);
    let scale = (cfg.nt as f64).sqrt();
    let mut row = vec![Complex::ZERO; cfg.nt];
    for p in paths {
        let delay_phase = Complex::from_polar(1.0, -TAU * n as f64 * p.tau / cfg.delay_span());
        let coeff = scale * p.gamma * delay_phase;
        for (m, a) in steering_vector(p.theta, cfg).iter().enumerate() {
            row[m] += coeff * a.conj();
        }
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::Provenance;
    use approx::assert_relative_eq;

    #[test]
    fn fourier_vector_at_zero_frequency_is_flat() {
        let v = fourier_vector(4, 0.0);
        for e in v {
            assert_relative_eq!(e.re, 0.5, max_relative = 1e-15);
            assert_relative_eq!(e.im, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn fourier_entries_have_unit_scaled_magnitude() {
        let v = fourier_vector(7, 0.31);
        for e in &v {
            assert_relative_eq!(e.norm(), 1.0 / 7f64.sqrt(), max_relative = 1e-14);
        }
        // Entry m advances linearly in phase.
        let step = (v[3] / v[2]).arg();
        assert_relative_eq!(step, -std::f64::consts::TAU * 0.31, max_relative = 1e-12);
    }

    #[test]
    fn single_path_channel_has_gain_magnitude() {
        let cfg = SystemConfig::new(16, 16, 1, 15e6, 60e9, 0.0025, 3e8).unwrap();
        let p = Path {
            gamma: Complex::new(3e-4, -4e-4),
            tau: 40e-9,
            theta: 0.45,
            provenance: Provenance::Los,
        };
        // sqrt(Nt) and the 1/sqrt(Nt) of the steering entries cancel.
        let row = channel_vector(&[p], 5, &cfg);
        for e in row {
            assert_relative_eq!(e.norm(), p.gamma.norm(), max_relative = 1e-13);
        }
    }
}
