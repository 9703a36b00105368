//! Transforming channel-parameter information into location information.
//!
//! A receiver that knows its own position can map delays and departure
//! angles to the transmitter position and the scatterer positions through
//! the scene geometry.  The chain rule turns a channel-parameter Fisher
//! information matrix into one over positions and gains; fake paths enter as
//! additional unknown reflector positions, which is exactly why they hurt:
//! they add unknowns without adding information.

use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::fim::{crlb_trace, equilibrated_inverse, Bounded, EquilibratedInverse, FimMatrix, ParamOrdering};
use crate::geometry::{dist, Scene};
use nalgebra::DMatrix;

fn delay_gradient_wrt_tx(tx: [f64; 2], v: [f64; 2], c: f64) -> Result<[f64; 2]> {
    let r = dist(tx, v);
    if r == 0.0 {
        return Err(Error::Geometry("path endpoint coincides with the transmitter".into()));
    }
    Ok([(tx[0] - v[0]) / (c * r), (tx[1] - v[1]) / (c * r)])
}

fn delay_gradient_wrt_scatterer(
    tx: [f64; 2],
    rx: [f64; 2],
    v: [f64; 2],
    c: f64,
) -> Result<[f64; 2]> {
    let r_rx = dist(v, rx);
    let r_tx = dist(v, tx);
    if r_rx == 0.0 || r_tx == 0.0 {
        return Err(Error::Geometry("scatterer coincides with an endpoint".into()));
    }
    Ok([
        ((v[0] - rx[0]) / r_rx + (v[0] - tx[0]) / r_tx) / c,
        ((v[1] - rx[1]) / r_rx + (v[1] - tx[1]) / r_tx) / c,
    ])
}

/// `d theta / d v` for the angle from the transmitter to `v`; the gradient
/// with respect to the transmitter is its negation.
fn angle_gradient_wrt_target(tx: [f64; 2], v: [f64; 2]) -> Result<[f64; 2]> {
    let u = [v[0] - tx[0], v[1] - tx[1]];
    let r2 = u[0] * u[0] + u[1] * u[1];
    if r2 == 0.0 {
        return Err(Error::Geometry("angle undefined for coincident points".into()));
    }
    Ok([-u[1] / r2, u[0] / r2])
}

/// Jacobian of the channel parameters with respect to the location
/// parameters, laid out so that `J_location = Pi * J_channel * Pi^T`.
///
/// Rows are location parameters: transmitter position, true scatterer
/// positions, one reflector position per fake path (`fake_positions`,
/// set-major), then the gain parts one-to-one.  Columns are channel
/// parameters in [`ParamOrdering::Channel`] order over the
/// `1 + K + fake_positions.len()` paths.
pub fn localization_jacobian(
    scene: &Scene,
    fake_positions: &[[f64; 2]],
    cfg: &SystemConfig,
) -> Result<DMatrix<f64>> {
    let c = cfg.light_speed;
    let k = scene.scatterers.len();
    let paths = 1 + k + fake_positions.len();
    let dim = 4 * paths;
    let gain_base = 2 * (1 + k + fake_positions.len());
    let mut pi = DMatrix::zeros(dim, dim);

    let mut set = |rows: usize, col: usize, g: [f64; 2]| {
        pi[(rows, col)] = g[0];
        pi[(rows + 1, col)] = g[1];
    };

    // Direct path: only the transmitter position moves it.
    set(0, 0, delay_gradient_wrt_tx(scene.tx, scene.rx, c)?);
    let a = angle_gradient_wrt_target(scene.tx, scene.rx)?;
    set(0, paths, [-a[0], -a[1]]);

    // True and fake bounce paths share the same geometry, differing only in
    // which rows their reflector occupies.
    let reflectors = scene.scatterers.iter().chain(fake_positions.iter());
    for (j, &v) in reflectors.enumerate() {
        let path_col = 1 + j;
        let rows_v = 2 + 2 * j;
        set(0, path_col, delay_gradient_wrt_tx(scene.tx, v, c)?);
        set(rows_v, path_col, delay_gradient_wrt_scatterer(scene.tx, scene.rx, v, c)?);
        let dv = angle_gradient_wrt_target(scene.tx, v)?;
        set(0, paths + path_col, [-dv[0], -dv[1]]);
        set(rows_v, paths + path_col, dv);
    }

    for i in 0..2 * paths {
        pi[(gain_base + i, 2 * paths + i)] = 1.0;
    }
    Ok(pi)
}

/// Maps channel-parameter information to location-parameter information for
/// the given scene.
///
/// Accepts either plain channel information (path count must be
/// `1 + scatterers + fake_positions`) or channel-plus-design information
/// from the leaked analysis, where no fake reflectors exist and the two
/// design offsets carry over unchanged.
pub fn localization_fim(
    fim: &FimMatrix,
    scene: &Scene,
    fake_positions: &[[f64; 2]],
    cfg: &SystemConfig,
) -> Result<FimMatrix> {
    let k = scene.scatterers.len();
    match fim.ordering {
        ParamOrdering::Channel { paths } => {
            if paths != 1 + k + fake_positions.len() {
                return Err(Error::Dimension(format!(
                    "information covers {paths} paths, scene and fakes describe {}",
                    1 + k + fake_positions.len()
                )));
            }
            let pi = localization_jacobian(scene, fake_positions, cfg)?;
            let data = &pi * fim.data() * pi.transpose();
            FimMatrix::new(
                data,
                ParamOrdering::Location { points: 1 + k + fake_positions.len(), paths },
                fim.scale,
            )
        }
        ParamOrdering::ChannelAndDesign { paths } => {
            if !fake_positions.is_empty() {
                return Err(Error::Dimension(
                    "design-aware information carries no fake reflectors".into(),
                ));
            }
            if paths != 1 + k {
                return Err(Error::Dimension(format!(
                    "information covers {paths} paths, scene describes {}",
                    1 + k
                )));
            }
            let small = localization_jacobian(scene, &[], cfg)?;
            let d = small.nrows();
            let mut pi = DMatrix::zeros(d + 2, d + 2);
            pi.view_mut((0, 0), (d, d)).copy_from(&small);
            pi[(d, d)] = 1.0;
            pi[(d + 1, d + 1)] = 1.0;
            let data = &pi * fim.data() * pi.transpose();
            FimMatrix::new(
                data,
                ParamOrdering::LocationAndDesign { points: 1 + k, paths },
                fim.scale,
            )
        }
        _ => Err(Error::Dimension("information is already in the location domain".into())),
    }
}

/// Root Cramér-Rao bound on the transmitter position estimate, meters:
/// the square root of the summed variance bounds of its two coordinates.
pub fn location_crlb(fim: &FimMatrix) -> Result<Bounded<f64>> {
    match fim.ordering {
        ParamOrdering::Location { .. } | ParamOrdering::LocationAndDesign { .. } => {}
        _ => {
            return Err(Error::Dimension(
                "location bound needs location-domain information".into(),
            ))
        }
    }
    Ok(match crlb_trace(fim, &[0, 1])? {
        Bounded::Value(v) => Bounded::Value(v.sqrt()),
        unbounded => unbounded,
    })
}

/// Inverse of a location-domain information matrix, exposed for callers
/// that want the full covariance bound rather than the transmitter summary.
pub fn location_covariance(fim: &FimMatrix) -> Result<Bounded<DMatrix<f64>>> {
    Ok(match equilibrated_inverse(fim.data()) {
        EquilibratedInverse::Inverse(inv) => Bounded::Value(inv),
        EquilibratedInverse::Singular { smallest_eigenvalue } => {
            Bounded::Unbounded { smallest_eigenvalue }
        }
    })
}
