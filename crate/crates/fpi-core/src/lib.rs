//! Deterministic simulator and estimation-theoretic analysis library for
//! location privacy in mmWave MISO-OFDM links.
//!
//! A transmitter that knows its own position leaks it through the multipath
//! structure of its uplink pilots: an eavesdropper can estimate per-path
//! delays and departure angles and triangulate.  This crate models that
//! leakage and the defense of injecting *fake paths* through a CSI-free
//! diagonal precoder: the legitimate receiver, told the two precoder
//! parameters over a secure channel, compensates exactly, while the
//! eavesdropper faces a channel with twice the paths at artificially small
//! separations.
//!
//! The crate synthesizes channels from 2-D geometry ([`geometry`],
//! [`vectors`]), builds the precoder and its induced fake paths
//! ([`precoder`]), and quantifies the attacker's degradation through exact
//! and asymptotic Fisher information, Cramér-Rao bounds for channel
//! parameters and position, closed-form lower bounds on the paired-path
//! estimation error, the Fisher information available to an attacker who
//! knows the precoder's functional form, and an artificial-Gaussian-noise
//! baseline ([`fim`], [`asymptotic`], [`bounds`], [`localization`],
//! [`leaked`], [`baseline`]).
//!
//! All randomness flows through explicit integer seeds ([`seed`]); every
//! operation is a pure function of its arguments and reproduces bit-identical
//! results for equal inputs.

pub mod asymptotic;
pub mod baseline;
pub mod bounds;
pub mod config;
pub mod error;
pub mod fim;
pub mod geometry;
pub mod leaked;
pub mod localization;
pub mod path;
pub mod pilots;
pub mod precoder;
pub mod seed;
pub mod vectors;

pub use config::SystemConfig;
pub use error::{Error, Result};
pub use geometry::{feasible_scatterer, scene_to_params, Scene};
pub use path::{min_separation, separation_thresholds, Path, PathSet, Provenance};
pub use pilots::{generate_pilots, received_energy, sigma_from_snr, PilotBlock};
pub use precoder::{
    design_feasibility, effective_pilots, eve_effective_paths, fake_paths_from_design,
    parameter_deltas, precoder_matrix, FakePathDesign, SharedInfo,
};

pub type Complex = num_complex::Complex64;
