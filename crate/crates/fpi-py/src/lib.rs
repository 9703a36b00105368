//! Python bindings for the core analysis library.  The wrapper classes
//! mirror the Rust types one to one; all numeric conventions (seconds,
//! radians, meters, linear noise power) carry over unchanged.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fpi_core::{Complex, FakePathDesign, PathSet, PilotBlock, Scene, SystemConfig};

fn err(e: fpi_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "SystemConfig", frozen)]
#[derive(Clone)]
struct PySystemConfig {
    inner: SystemConfig,
}

#[pymethods]
impl PySystemConfig {
    #[new]
    #[pyo3(signature = (subcarriers, antennas, pilot_repetitions, bandwidth_hz, carrier_hz, antenna_spacing_m, light_speed_m_per_s = 299_792_458.0))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        subcarriers: usize,
        antennas: usize,
        pilot_repetitions: usize,
        bandwidth_hz: f64,
        carrier_hz: f64,
        antenna_spacing_m: f64,
        light_speed_m_per_s: f64,
    ) -> PyResult<Self> {
        SystemConfig::new(
            subcarriers,
            antennas,
            pilot_repetitions,
            bandwidth_hz,
            carrier_hz,
            antenna_spacing_m,
            light_speed_m_per_s,
        )
        .map(|inner| Self { inner })
        .map_err(err)
    }

    #[getter]
    fn subcarriers(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn antennas(&self) -> usize {
        self.inner.nt
    }

    #[getter]
    fn pilot_repetitions(&self) -> usize {
        self.inner.g
    }

    fn wavelength(&self) -> f64 {
        self.inner.wavelength()
    }

    fn delay_span(&self) -> f64 {
        self.inner.delay_span()
    }

    fn symbol_time(&self) -> f64 {
        self.inner.symbol_time()
    }

    /// Smallest delay and angle separations the injected paths are scaled
    /// against, as a `(delay_s, angle_rad)` pair.
    fn separation_thresholds(&self) -> PyResult<(f64, f64)> {
        fpi_core::separation_thresholds(&self.inner).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "SystemConfig(subcarriers={}, antennas={}, pilot_repetitions={})",
            self.inner.n, self.inner.nt, self.inner.g
        )
    }
}

#[pyclass(name = "Scene", frozen)]
#[derive(Clone)]
struct PyScene {
    inner: Scene,
}

#[pymethods]
impl PyScene {
    #[new]
    fn new(tx: [f64; 2], rx: [f64; 2], scatterers: Vec<[f64; 2]>) -> Self {
        Self { inner: Scene { tx, rx, scatterers } }
    }

    #[getter]
    fn tx(&self) -> [f64; 2] {
        self.inner.tx
    }

    #[getter]
    fn rx(&self) -> [f64; 2] {
        self.inner.rx
    }

    #[getter]
    fn scatterers(&self) -> Vec<[f64; 2]> {
        self.inner.scatterers.clone()
    }
}

#[pyclass(name = "Path", frozen)]
#[derive(Clone)]
struct PyPath {
    inner: fpi_core::Path,
}

#[pymethods]
impl PyPath {
    #[getter]
    fn gamma(&self) -> Complex {
        self.inner.gamma
    }

    #[getter]
    fn tau(&self) -> f64 {
        self.inner.tau
    }

    #[getter]
    fn theta(&self) -> f64 {
        self.inner.theta
    }

    #[getter]
    fn provenance(&self) -> &'static str {
        match self.inner.provenance {
            fpi_core::Provenance::Los => "los",
            fpi_core::Provenance::Scatter => "scatter",
            fpi_core::Provenance::Fake => "fake",
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "Path(tau={:.6e}, theta={:.6}, gamma={:.6e}{:+.6e}j, provenance='{}')",
            self.inner.tau,
            self.inner.theta,
            self.inner.gamma.re,
            self.inner.gamma.im,
            self.provenance()
        )
    }
}

#[pyclass(name = "PathSet", frozen)]
#[derive(Clone)]
struct PyPathSet {
    inner: PathSet,
}

#[pymethods]
impl PyPathSet {
    fn paths(&self) -> Vec<PyPath> {
        self.inner.paths().iter().map(|&inner| PyPath { inner }).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

#[pyclass(name = "FakePathDesign", frozen)]
#[derive(Clone)]
struct PyFakePathDesign {
    inner: FakePathDesign,
}

#[pymethods]
impl PyFakePathDesign {
    #[new]
    #[pyo3(signature = (sets, normalize_power = false))]
    fn new(sets: Vec<(f64, f64)>, normalize_power: bool) -> PyResult<Self> {
        FakePathDesign::new(sets, normalize_power).map(|inner| Self { inner }).map_err(err)
    }

    #[getter]
    fn sets(&self) -> Vec<(f64, f64)> {
        self.inner.sets().to_vec()
    }

    #[getter]
    fn normalize_power(&self) -> bool {
        self.inner.normalize
    }

    fn power_factor(&self, cfg: &PySystemConfig) -> f64 {
        self.inner.power_factor(&cfg.inner)
    }
}

#[pyclass(name = "PilotBlock", frozen)]
#[derive(Clone)]
struct PyPilotBlock {
    inner: PilotBlock,
}

#[pymethods]
impl PyPilotBlock {
    fn data(&self) -> Vec<Complex> {
        self.inner.data().to_vec()
    }
}

/// Fisher information matrix with the library's inversion policy attached.
#[pyclass(name = "Fim", frozen)]
#[derive(Clone)]
struct PyFim {
    inner: fpi_core::fim::FimMatrix,
}

#[pymethods]
impl PyFim {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn data(&self) -> Vec<Vec<f64>> {
        let d = self.inner.dim();
        let m = self.inner.data();
        (0..d).map(|i| (0..d).map(|j| m[(i, j)]).collect()).collect()
    }

    /// Variance bound on the selected parameters: sum of the corresponding
    /// diagonal entries of the inverse.  Returns `inf` when the matrix is
    /// singular at the library's condition cutoff.
    fn crlb_trace(&self, selection: Vec<usize>) -> PyResult<f64> {
        let bounded = fpi_core::fim::crlb_trace(&self.inner, &selection).map_err(err)?;
        Ok(bounded.value().unwrap_or(f64::INFINITY))
    }
}

#[pyclass(name = "BoundReport", frozen)]
struct PyBoundReport {
    #[pyo3(get)]
    xi: f64,
    #[pyo3(get)]
    psi: f64,
    #[pyo3(get)]
    trace_exact: f64,
    #[pyo3(get)]
    trace_asymptotic: f64,
    #[pyo3(get)]
    epsilon: f64,
    #[pyo3(get)]
    assumption_flags: Vec<bool>,
}

#[pyfunction]
fn scene_to_params(scene: &PyScene, cfg: &PySystemConfig, seed: u64) -> PyResult<PyPathSet> {
    fpi_core::scene_to_params(&scene.inner, &cfg.inner, seed)
        .map(|inner| PyPathSet { inner })
        .map_err(err)
}

#[pyfunction]
fn fake_paths_from_design(
    truth: &PyPathSet,
    design: &PyFakePathDesign,
    cfg: &PySystemConfig,
) -> PyResult<Vec<PyPath>> {
    fpi_core::fake_paths_from_design(&truth.inner, &design.inner, &cfg.inner)
        .map(|v| v.into_iter().map(|inner| PyPath { inner }).collect())
        .map_err(err)
}

#[pyfunction]
fn eve_effective_paths(
    truth: &PyPathSet,
    design: &PyFakePathDesign,
    cfg: &PySystemConfig,
) -> PyResult<PyPathSet> {
    fpi_core::eve_effective_paths(&truth.inner, &design.inner, &cfg.inner)
        .map(|inner| PyPathSet { inner })
        .map_err(err)
}

#[pyfunction]
fn generate_pilots(cfg: &PySystemConfig, seed: u64) -> PyPilotBlock {
    PyPilotBlock { inner: fpi_core::generate_pilots(&cfg.inner, seed) }
}

#[pyfunction]
fn effective_pilots(
    pilots: &PyPilotBlock,
    design: &PyFakePathDesign,
    cfg: &PySystemConfig,
) -> PyResult<PyPilotBlock> {
    fpi_core::effective_pilots(&pilots.inner, &design.inner, &cfg.inner)
        .map(|inner| PyPilotBlock { inner })
        .map_err(err)
}

#[pyfunction]
fn received_energy(
    paths: &PyPathSet,
    pilots: &PyPilotBlock,
    cfg: &PySystemConfig,
) -> PyResult<f64> {
    fpi_core::received_energy(paths.inner.paths(), &pilots.inner, &cfg.inner).map_err(err)
}

#[pyfunction]
fn sigma_from_snr(energy: f64, cfg: &PySystemConfig, snr_db: f64) -> PyResult<f64> {
    fpi_core::sigma_from_snr(energy, &cfg.inner, snr_db).map_err(err)
}

#[pyfunction]
fn exact_fim(
    paths: &PyPathSet,
    pilots: &PyPilotBlock,
    sigma2: f64,
    cfg: &PySystemConfig,
) -> PyResult<PyFim> {
    fpi_core::fim::exact_fim(paths.inner.paths(), &pilots.inner, sigma2, &cfg.inner)
        .map(|inner| PyFim { inner })
        .map_err(err)
}

#[pyfunction]
fn pair_fim(
    truth: &PyPath,
    fake: &PyPath,
    pilots: &PyPilotBlock,
    sigma2: f64,
    cfg: &PySystemConfig,
) -> PyResult<PyFim> {
    fpi_core::fim::pair_fim(&truth.inner, &fake.inner, &pilots.inner, sigma2, &cfg.inner)
        .map(|inner| PyFim { inner })
        .map_err(err)
}

#[pyfunction]
fn asymptotic_fim(
    truth: &PyPath,
    fake: &PyPath,
    sigma2: f64,
    cfg: &PySystemConfig,
) -> PyResult<PyFim> {
    fpi_core::asymptotic::asymptotic_fim(&truth.inner, &fake.inner, sigma2, &cfg.inner)
        .map(|inner| PyFim { inner })
        .map_err(err)
}

#[pyfunction]
fn leaked_fim(
    truth: &PyPathSet,
    design: &PyFakePathDesign,
    pilots: &PyPilotBlock,
    sigma2: f64,
    cfg: &PySystemConfig,
) -> PyResult<PyFim> {
    fpi_core::leaked::leaked_fim(&truth.inner, &design.inner, &pilots.inner, sigma2, &cfg.inner)
        .map(|inner| PyFim { inner })
        .map_err(err)
}

#[pyfunction]
fn gaussian_baseline_fim(
    truth: &PyPathSet,
    design: &PyFakePathDesign,
    pilots: &PyPilotBlock,
    sigma2: f64,
    cfg: &PySystemConfig,
) -> PyResult<PyFim> {
    fpi_core::baseline::gaussian_baseline_fim(
        &truth.inner,
        &design.inner,
        &pilots.inner,
        sigma2,
        &cfg.inner,
    )
    .map(|inner| PyFim { inner })
    .map_err(err)
}

#[pyfunction]
fn artificial_noise_power(
    truth: &PyPathSet,
    design: &PyFakePathDesign,
    pilots: &PyPilotBlock,
    cfg: &PySystemConfig,
) -> PyResult<f64> {
    fpi_core::baseline::artificial_noise_power(
        &truth.inner,
        &design.inner,
        &pilots.inner,
        &cfg.inner,
    )
    .map_err(err)
}

#[pyfunction]
fn bound_report(
    truth: &PyPath,
    fake: &PyPath,
    design: &PyFakePathDesign,
    pilots: &PyPilotBlock,
    sigma2: f64,
    cfg: &PySystemConfig,
) -> PyResult<PyBoundReport> {
    fpi_core::bounds::bound_report(
        &truth.inner,
        &fake.inner,
        &design.inner,
        &pilots.inner,
        sigma2,
        &cfg.inner,
    )
    .map(|r| PyBoundReport {
        xi: r.xi,
        psi: r.psi,
        trace_exact: r.trace_exact,
        trace_asymptotic: r.trace_asymptotic,
        epsilon: r.epsilon,
        assumption_flags: r.assumption_flags.to_vec(),
    })
    .map_err(err)
}

#[pyfunction]
fn localization_fim(
    fim: &PyFim,
    scene: &PyScene,
    fake_positions: Vec<[f64; 2]>,
    cfg: &PySystemConfig,
) -> PyResult<PyFim> {
    fpi_core::localization::localization_fim(&fim.inner, &scene.inner, &fake_positions, &cfg.inner)
        .map(|inner| PyFim { inner })
        .map_err(err)
}

/// Transmitter-position error bound in meters; `inf` when the information
/// matrix is singular at the library's condition cutoff.
#[pyfunction]
fn location_crlb(fim: &PyFim) -> PyResult<f64> {
    let bounded = fpi_core::localization::location_crlb(&fim.inner).map_err(err)?;
    Ok(bounded.value().unwrap_or(f64::INFINITY))
}

#[pyfunction]
fn design_feasibility(
    scene: &PyScene,
    design: &PyFakePathDesign,
    cfg: &PySystemConfig,
) -> PyResult<(bool, Vec<Option<[f64; 2]>>)> {
    fpi_core::design_feasibility(&scene.inner, &design.inner, &cfg.inner)
        .map(|f| (f.feasible, f.scatterers))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (tau, theta, tx, rx, light_speed = 299_792_458.0))]
fn feasible_scatterer(
    tau: f64,
    theta: f64,
    tx: [f64; 2],
    rx: [f64; 2],
    light_speed: f64,
) -> Option<[f64; 2]> {
    fpi_core::feasible_scatterer(tau, theta, tx, rx, light_speed)
}

#[pyfunction]
fn derived_seed(master: u64, stream: u64, counter: u64) -> u64 {
    fpi_core::seed::derived_seed(master, stream, counter)
}

#[pymodule]
fn fpi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySystemConfig>()?;
    m.add_class::<PyScene>()?;
    m.add_class::<PyPath>()?;
    m.add_class::<PyPathSet>()?;
    m.add_class::<PyFakePathDesign>()?;
    m.add_class::<PyPilotBlock>()?;
    m.add_class::<PyFim>()?;
    m.add_class::<PyBoundReport>()?;
    m.add_function(wrap_pyfunction!(scene_to_params, m)?)?;
    m.add_function(wrap_pyfunction!(fake_paths_from_design, m)?)?;
    m.add_function(wrap_pyfunction!(eve_effective_paths, m)?)?;
    m.add_function(wrap_pyfunction!(generate_pilots, m)?)?;
    m.add_function(wrap_pyfunction!(effective_pilots, m)?)?;
    m.add_function(wrap_pyfunction!(received_energy, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_from_snr, m)?)?;
    m.add_function(wrap_pyfunction!(exact_fim, m)?)?;
    m.add_function(wrap_pyfunction!(pair_fim, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_fim, m)?)?;
    m.add_function(wrap_pyfunction!(leaked_fim, m)?)?;
    m.add_function(wrap_pyfunction!(gaussian_baseline_fim, m)?)?;
    m.add_function(wrap_pyfunction!(artificial_noise_power, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report, m)?)?;
    m.add_function(wrap_pyfunction!(localization_fim, m)?)?;
    m.add_function(wrap_pyfunction!(location_crlb, m)?)?;
    m.add_function(wrap_pyfunction!(design_feasibility, m)?)?;
    m.add_function(wrap_pyfunction!(feasible_scatterer, m)?)?;
    m.add_function(wrap_pyfunction!(derived_seed, m)?)?;
    Ok(())
}
