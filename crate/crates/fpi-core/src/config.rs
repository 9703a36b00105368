use crate::error::{Error, Result};

/// Static link parameters shared by every operation.
///
/// The model is a MISO-OFDM uplink: `nt` transmit antennas in a uniform
/// linear array with element spacing `spacing`, `n` subcarriers spanning
/// `bandwidth`, and `g` repeated pilot symbols per transmission.  Geometry is
/// 2-D and narrowband around `carrier`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    /// Number of OFDM subcarriers.
    pub n: usize,
    /// Number of transmit antennas.
    pub nt: usize,
    /// Number of pilot transmissions.
    pub g: usize,
    /// Total bandwidth in Hz.
    pub bandwidth: f64,
    /// Carrier frequency in Hz.
    pub carrier: f64,
    /// Antenna element spacing in meters.
    pub spacing: f64,
    /// Propagation speed in m/s.
    pub light_speed: f64,
}

impl SystemConfig {
    /// Validates all parameters and returns the config.
    ///
    /// Requires at least two subcarriers and two antennas (delay and angle
    /// are unobservable otherwise), a positive pilot count, positive physical
    /// constants, and a fractional bandwidth below 1% so the narrowband
    /// steering model stays valid.
    pub fn new(
        n: usize,
        nt: usize,
        g: usize,
        bandwidth: f64,
        carrier: f64,
        spacing: f64,
        light_speed: f64,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Config(format!("need at least 2 subcarriers, got {n}")));
        }
        if nt < 2 {
            return Err(Error::Config(format!("need at least 2 antennas, got {nt}")));
        }
        if g < 1 {
            return Err(Error::Config("need at least 1 pilot transmission".into()));
        }
        for (name, value) in [
            ("bandwidth", bandwidth),
            ("carrier", carrier),
            ("spacing", spacing),
            ("light_speed", light_speed),
        ] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::Config(format!("{name} must be positive and finite, got {value}")));
            }
        }
        if bandwidth / carrier >= 0.01 {
            return Err(Error::Config(format!(
                "fractional bandwidth {:.4} too large for the narrowband model (limit 0.01)",
                bandwidth / carrier
            )));
        }
        Ok(Self { n, nt, g, bandwidth, carrier, spacing, light_speed })
    }

    /// OFDM symbol time `Ts = 1/B` in seconds.
    pub fn symbol_time(&self) -> f64 {
        1.0 / self.bandwidth
    }

    /// Carrier wavelength in meters.
    pub fn wavelength(&self) -> f64 {
        self.light_speed / self.carrier
    }

    /// Unambiguous delay span `N Ts` in seconds; every path delay must fall
    /// inside `(0, N Ts]`.
    pub fn delay_span(&self) -> f64 {
        self.n as f64 * self.symbol_time()
    }

    /// Dimensionless ratio `wavelength / (N Ts spacing)` converting a delay
    /// increment into the angle-domain units used by the closed-form bounds.
    pub fn lambda_ratio(&self) -> f64 {
        self.wavelength() / (self.delay_span() * self.spacing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> Result<SystemConfig> {
        SystemConfig::new(16, 16, 16, 15e6, 60e9, 0.0025, 3e8)
    }

    #[test]
    fn accepts_standard_link() {
        let cfg = base().unwrap();
        assert_eq!(cfg.symbol_time(), 1.0 / 15e6);
        assert_eq!(cfg.wavelength(), 3e8 / 60e9);
        assert_eq!(cfg.delay_span(), 16.0 / 15e6);
    }

    #[test]
    fn rejects_tiny_arrays() {
        assert!(SystemConfig::new(1, 16, 16, 15e6, 60e9, 0.0025, 3e8).is_err());
        assert!(SystemConfig::new(16, 1, 16, 15e6, 60e9, 0.0025, 3e8).is_err());
        assert!(SystemConfig::new(16, 16, 0, 15e6, 60e9, 0.0025, 3e8).is_err());
    }

    #[test]
    fn rejects_wideband() {
        assert!(SystemConfig::new(16, 16, 16, 1e9, 60e9, 0.0025, 3e8).is_err());
    }

    #[test]
    fn rejects_nonpositive_constants() {
        assert!(SystemConfig::new(16, 16, 16, -15e6, 60e9, 0.0025, 3e8).is_err());
        assert!(SystemConfig::new(16, 16, 16, 15e6, 60e9, 0.0, 3e8).is_err());
        assert!(SystemConfig::new(16, 16, 16, 15e6, f64::NAN, 0.0025, 3e8).is_err());
    }
}
