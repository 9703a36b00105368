use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::path::Path;
use crate::pilots::PilotBlock;
use crate::vectors::steering_vector;
use crate::Complex;
use nalgebra::DMatrix;
use std::f64::consts::TAU;

/// Which parameter vector a Fisher information matrix is taken over, and how
/// its rows are laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamOrdering {
    /// Channel parameters of `paths` paths: all delays, then all angles,
    /// then all real gain parts, then all imaginary gain parts.
    Channel { paths: usize },
    /// One true/fake pair, gains known: true delay, true angle, fake delay,
    /// fake angle.
    Pair,
    /// Location parameters: `(x, y)` per point (transmitter first, then
    /// scatterers, then fake scatterers), then real and imaginary gain parts
    /// of `paths` paths.
    Location { points: usize, paths: usize },
    /// Channel parameters of `paths` paths followed by the two precoder
    /// offsets (delay, angle).
    ChannelAndDesign { paths: usize },
    /// Location parameters followed by the two precoder offsets.
    LocationAndDesign { points: usize, paths: usize },
}

impl ParamOrdering {
    pub fn dim(&self) -> usize {
        match *self {
            ParamOrdering::Channel { paths } => 4 * paths,
            ParamOrdering::Pair => 4,
            ParamOrdering::Location { points, paths } => 2 * points + 2 * paths,
            ParamOrdering::ChannelAndDesign { paths } => 4 * paths + 2,
            ParamOrdering::LocationAndDesign { points, paths } => 2 * points + 2 * paths + 2,
        }
    }

    /// Row of path `k`'s delay, where the ordering has per-path delays.
    pub fn delay_index(&self, k: usize) -> usize {
        match *self {
            ParamOrdering::Pair => 2 * k,
            _ => k,
        }
    }

    /// Row of path `k`'s angle.
    pub fn angle_index(&self, k: usize) -> usize {
        match *self {
            ParamOrdering::Pair => 2 * k + 1,
            ParamOrdering::Channel { paths } | ParamOrdering::ChannelAndDesign { paths } => {
                paths + k
            }
            ParamOrdering::Location { .. } | ParamOrdering::LocationAndDesign { .. } => {
                panic!("location orderings have no angle rows")
            }
        }
    }
}

/// Whether a matrix counts information from a single pilot repetition or
/// from all `g` of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FimScale {
    PerSymbol,
    SummedOverPilots,
}

/// A validated Fisher information matrix: square, symmetric, and positive
/// semidefinite up to numerical slack.
#[derive(Debug, Clone, PartialEq)]
pub struct FimMatrix {
    data: DMatrix<f64>,
    pub ordering: ParamOrdering,
    pub scale: FimScale,
}

impl FimMatrix {
    pub fn new(data: DMatrix<f64>, ordering: ParamOrdering, scale: FimScale) -> Result<Self> {
        let d = ordering.dim();
        if data.nrows() != d || data.ncols() != d {
            return Err(Error::Dimension(format!(
                "information matrix is {}x{}, ordering wants {d}x{d}",
                data.nrows(),
                data.ncols()
            )));
        }
        let magnitude = data.amax();
        for i in 0..d {
            for j in 0..i {
                if (data[(i, j)] - data[(j, i)]).abs() > 1e-10 * magnitude.max(1e-300) {
                    return Err(Error::InvalidInformation(format!(
                        "asymmetric at ({i}, {j}): {} vs {}",
                        data[(i, j)],
                        data[(j, i)]
                    )));
                }
            }
        }
        let eigenvalues = data.clone().symmetric_eigen().eigenvalues;
        let max_eig = eigenvalues.iter().cloned().fold(0.0f64, f64::max);
        let min_eig = eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
        if min_eig < -1e-8 * max_eig.max(1e-300) {
            return Err(Error::InvalidInformation(format!(
                "negative eigenvalue {min_eig:.3e} (largest {max_eig:.3e})"
            )));
        }
        Ok(Self { data, ordering, scale })
    }

    pub fn data(&self) -> &DMatrix<f64> {
        &self.data
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }
}

/// A quantity that may be infinite because the underlying information matrix
/// is numerically singular.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bounded<T> {
    Value(T),
    /// The matrix could not be inverted; carries the smallest eigenvalue of
    /// the equilibrated matrix as a diagnostic of how singular it was.
    Unbounded { smallest_eigenvalue: f64 },
}

impl<T: Copy> Bounded<T> {
    pub fn value(&self) -> Option<T> {
        match *self {
            Bounded::Value(v) => Some(v),
            Bounded::Unbounded { .. } => None,
        }
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, Bounded::Unbounded { .. })
    }
}

/// Derivatives of the noiseless received symbols with respect to the channel
/// parameters, laid out like [`ParamOrdering::Channel`]: rows are parameters
/// (delays, angles, real gains, imaginary gains of each path in order),
/// columns run over `(repetition, subcarrier)` pairs, repetition-major.
pub fn signal_derivatives(
    paths: &[Path],
    pilots: &PilotBlock,
    cfg: &SystemConfig,
) -> Result<DMatrix<Complex>> {
    pilots.matches(cfg)?;
    let k = paths.len();
    let cols = cfg.g * cfg.n;
    let mut out = DMatrix::from_element(4 * k, cols, Complex::ZERO);
    let scale = (cfg.nt as f64).sqrt();
    let delay_rate = TAU / cfg.delay_span();
    let angle_rate = TAU * cfg.spacing / cfg.wavelength();

    for (p_idx, p) in paths.iter().enumerate() {
        let steer = steering_vector(p.theta, cfg);
        let cos_theta = p.theta.cos();
        for sub in 0..cfg.n {
            let delay_phase = Complex::from_polar(1.0, -delay_rate * sub as f64 * p.tau);
            for rep in 0..cfg.g {
                let s = pilots.at(rep, sub);
                // alpha^H s and alpha^H diag(0..Nt-1) s in one pass.
                let mut plain = Complex::ZERO;
                let mut weighted = Complex::ZERO;
                for (m, a) in steer.iter().enumerate() {
                    let term = a.conj() * s[m];
                    plain += term;
                    weighted += term * m as f64;
                }
                let base = scale * delay_phase * plain;
                let col = rep * cfg.n + sub;
                out[(p_idx, col)] =
                    -Complex::i() * delay_rate * sub as f64 * p.gamma * base;
                out[(k + p_idx, col)] = Complex::i()
                    * angle_rate
                    * cos_theta
                    * p.gamma
                    * scale
                    * delay_phase
                    * weighted;
                out[(2 * k + p_idx, col)] = base;
                out[(3 * k + p_idx, col)] = Complex::i() * base;
            }
        }
    }
    Ok(out)
}

/// Assembles `(2 / sigma2) * sum_cols Re{ conj(D_r) D_u }` from a derivative
/// table.  Shared by every information matrix in the crate.
pub(crate) fn fim_from_derivatives(derivs: &DMatrix<Complex>, sigma2: f64) -> DMatrix<f64> {
    let d = derivs.nrows();
    let mut out = DMatrix::zeros(d, d);
    for r in 0..d {
        for u in r..d {
            let mut acc = 0.0;
            for c in 0..derivs.ncols() {
                acc += (derivs[(r, c)].conj() * derivs[(u, c)]).re;
            }
            let v = 2.0 / sigma2 * acc;
            out[(r, u)] = v;
            out[(u, r)] = v;
        }
    }
    out
}

/// Exact Fisher information of all channel parameters under white Gaussian
/// noise of power `sigma2`, summed over every pilot repetition.
pub fn exact_fim(
    paths: &[Path],
    pilots: &PilotBlock,
    sigma2: f64,
    cfg: &SystemConfig,
) -> Result<FimMatrix> {
    if !(sigma2 > 0.0) || !sigma2.is_finite() {
        return Err(Error::Config(format!("noise power must be positive, got {sigma2}")));
    }
    if paths.is_empty() {
        return Err(Error::Config("information of an empty channel is undefined".into()));
    }
    let derivs = signal_derivatives(paths, pilots, cfg)?;
    FimMatrix::new(
        fim_from_derivatives(&derivs, sigma2),
        ParamOrdering::Channel { paths: paths.len() },
        FimScale::SummedOverPilots,
    )
}

/// Fisher information of one true/fake pair with gains known: the full
/// two-path information restricted to the four delay/angle rows, reordered
/// to true delay, true angle, fake delay, fake angle.
pub fn pair_fim(
    truth: &Path,
    fake: &Path,
    pilots: &PilotBlock,
    sigma2: f64,
    cfg: &SystemConfig,
) -> Result<FimMatrix> {
    if !(sigma2 > 0.0) || !sigma2.is_finite() {
        return Err(Error::Config(format!("noise power must be positive, got {sigma2}")));
    }
    let derivs = signal_derivatives(&[*truth, *fake], pilots, cfg)?;
    let full = fim_from_derivatives(&derivs, sigma2);
    // Two-path channel ordering is [tau0, tau1, th0, th1, ...]; the pair
    // block keeps rows tau0, th0, tau1, th1.
    let sel = [0usize, 2, 1, 3];
    let data = DMatrix::from_fn(4, 4, |i, j| full[(sel[i], sel[j])]);
    FimMatrix::new(data, ParamOrdering::Pair, FimScale::SummedOverPilots)
}

pub(crate) enum EquilibratedInverse {
    Inverse(DMatrix<f64>),
    Singular { smallest_eigenvalue: f64 },
}

/// Inverts through diagonal equilibration: scale to unit diagonal, take a
/// symmetric eigendecomposition, and refuse when the scaled matrix has
/// condition number above 1e14.  Equilibration keeps the test meaningful
/// when parameters live on wildly different scales (seconds vs radians).
pub(crate) fn equilibrated_inverse(data: &DMatrix<f64>) -> EquilibratedInverse {
    let d = data.nrows();
    let mut scale = Vec::with_capacity(d);
    for i in 0..d {
        let v = data[(i, i)];
        if !(v > 0.0) {
            return EquilibratedInverse::Singular { smallest_eigenvalue: v.min(0.0) };
        }
        scale.push(1.0 / v.sqrt());
    }
    let scaled = DMatrix::from_fn(d, d, |i, j| data[(i, j)] * scale[i] * scale[j]);
    let eig = scaled.symmetric_eigen();
    let max_eig = eig.eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min_eig = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(min_eig > 0.0) || max_eig / min_eig > 1e14 {
        return EquilibratedInverse::Singular { smallest_eigenvalue: min_eig };
    }
    let v = &eig.eigenvectors;
    let inv_scaled =
        v * DMatrix::from_diagonal(&eig.eigenvalues.map(|l| 1.0 / l)) * v.transpose();
    EquilibratedInverse::Inverse(DMatrix::from_fn(d, d, |i, j| {
        inv_scaled[(i, j)] * scale[i] * scale[j]
    }))
}

/// Eigenvalues of the equilibrated matrix together with the raw diagonal.
/// Their products recover the determinant without the catastrophic scale
/// spread of the raw units.
pub fn equilibrated_spectrum(fim: &FimMatrix) -> (Vec<f64>, Vec<f64>) {
    let d = fim.dim();
    let data = fim.data();
    let diagonal: Vec<f64> = (0..d).map(|i| data[(i, i)]).collect();
    let scale: Vec<f64> = diagonal.iter().map(|&v| 1.0 / v.max(1e-300).sqrt()).collect();
    let scaled = DMatrix::from_fn(d, d, |i, j| data[(i, j)] * scale[i] * scale[j]);
    let mut eigenvalues: Vec<f64> = scaled.symmetric_eigen().eigenvalues.iter().cloned().collect();
    eigenvalues.sort_by(|a, b| a.total_cmp(b));
    (eigenvalues, diagonal)
}

/// Sum of the selected diagonal entries of the inverse information matrix,
/// i.e. the Cramér-Rao variance bound on those parameters.
///
/// Returns [`Bounded::Unbounded`] when the equilibrated matrix is singular
/// beyond condition 1e14, meaning the selected parameters are not jointly
/// identifiable at this precision.
pub fn crlb_trace(fim: &FimMatrix, selection: &[usize]) -> Result<Bounded<f64>> {
    let d = fim.dim();
    for &i in selection {
        if i >= d {
            return Err(Error::Dimension(format!(
                "selection index {i} out of range for a {d}-parameter matrix"
            )));
        }
    }
    match equilibrated_inverse(fim.data()) {
        EquilibratedInverse::Singular { smallest_eigenvalue } => {
            Ok(Bounded::Unbounded { smallest_eigenvalue })
        }
        EquilibratedInverse::Inverse(inv) => {
            Ok(Bounded::Value(selection.iter().map(|&i| inv[(i, i)]).sum()))
        }
    }
}
