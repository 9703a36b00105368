//! Scenario files: a TOML document with four optional tables (`system`,
//! `scene`, `design`, `sweep`).  Missing values fall back to the reference
//! scenario, so an empty file is itself valid.  Unknown keys are rejected.
//! The full schema lives in `docs/scenario.md`.

use anyhow::{bail, Context};
use fpi_core::{
    design_feasibility, fake_paths_from_design, scene_to_params, separation_thresholds,
    FakePathDesign, Scene, SystemConfig,
};
use serde::Deserialize;
use std::path::Path;

/// Master seed used when neither the scenario nor the command line sets one.
pub const DEFAULT_SEED: u64 = 20;

/// Seed streams, one per consumer of randomness.  Derived seeds are
/// `derived_seed(master, stream, counter)`.
pub mod streams {
    /// Path gain phases; counter 0.
    pub const SCENE: u64 = 1;
    /// Sweep pilots; counter 0, shared by every SNR point so that all rows
    /// (and the artificial-noise level) see the same received signal.
    pub const SWEEP: u64 = 2;
    /// Bound-figure pilots; counter = offset-scale index.
    pub const BOUNDS: u64 = 3;
    /// Offset-heatmap pilots; counter 0.
    pub const HEATMAP: u64 = 4;
    /// Multi-set-figure pilots; counter = SNR index, shared by both arms.
    pub const MULTISET: u64 = 5;
}

/// A TOML number may be written with or without a decimal point.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Float(f64),
}

impl From<Num> for f64 {
    fn from(n: Num) -> f64 {
        match n {
            Num::Int(i) => i as f64,
            Num::Float(f) => f,
        }
    }
}

fn to_f64s(v: &[Num]) -> Vec<f64> {
    v.iter().map(|&n| n.into()).collect()
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemBlock {
    subcarriers: Option<usize>,
    antennas: Option<usize>,
    pilot_repetitions: Option<usize>,
    bandwidth_hz: Option<Num>,
    carrier_hz: Option<Num>,
    /// Defaults to half the carrier wavelength.
    antenna_spacing_m: Option<Num>,
    light_speed_m_per_s: Option<Num>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SceneBlock {
    tx_m: Option<[Num; 2]>,
    rx_m: Option<[Num; 2]>,
    scatterers_m: Option<Vec<[Num; 2]>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OffsetBlock {
    delay_ns: Num,
    angle_rad: Num,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct DesignBlock {
    /// Defaults to a single set at a twentieth of each separation threshold.
    offsets: Option<Vec<OffsetBlock>>,
    normalize_power: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepBlock {
    snr_db: Option<Vec<Num>>,
    offset_scale_grid: Option<Vec<Num>>,
    master_seed: Option<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    system: Option<SystemBlock>,
    scene: Option<SceneBlock>,
    design: Option<DesignBlock>,
    sweep: Option<SweepBlock>,
}

/// Command-line values that override the file.
#[derive(Debug, Default, Clone, Copy)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub normalize_power: bool,
}

/// A fully validated scenario, everything resolved to core types.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub cfg: SystemConfig,
    pub scene: Scene,
    pub design: FakePathDesign,
    pub snr_db: Vec<f64>,
    pub mu_grid: Vec<f64>,
    pub master_seed: u64,
}

pub fn load_scenario(path: Option<&Path>, overrides: Overrides) -> anyhow::Result<Scenario> {
    let raw = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("cannot read scenario file {}", p.display()))?;
            toml::from_str::<RawScenario>(&text)
                .with_context(|| format!("invalid scenario file {}", p.display()))?
        }
        None => RawScenario::default(),
    };
    resolve(raw, overrides)
}

fn resolve(raw: RawScenario, overrides: Overrides) -> anyhow::Result<Scenario> {
    let system = raw.system.unwrap_or_default();
    let carrier = system.carrier_hz.map_or(60e9, f64::from);
    let light_speed = system.light_speed_m_per_s.map_or(3e8, f64::from);
    let spacing = system
        .antenna_spacing_m
        .map_or(0.5 * light_speed / carrier, f64::from);
    let cfg = SystemConfig::new(
        system.subcarriers.unwrap_or(16),
        system.antennas.unwrap_or(16),
        system.pilot_repetitions.unwrap_or(16),
        system.bandwidth_hz.map_or(15e6, f64::from),
        carrier,
        spacing,
        light_speed,
    )?;

    let scene_block = raw.scene.unwrap_or_default();
    let point = |p: [Num; 2]| [p[0].into(), p[1].into()];
    let scene = Scene {
        tx: scene_block.tx_m.map_or([3.0, 0.0], point),
        rx: scene_block.rx_m.map_or([10.0, 5.0], point),
        scatterers: scene_block
            .scatterers_m
            .map_or_else(|| vec![[8.89, -6.05], [7.45, 8.54]], |v| {
                v.into_iter().map(point).collect()
            }),
    };

    let design_block = raw.design.unwrap_or_default();
    let sets = match design_block.offsets {
        Some(list) if list.is_empty() => bail!("design.offsets must not be empty when present"),
        Some(list) => list
            .iter()
            .map(|o| (f64::from(o.delay_ns) * 1e-9, o.angle_rad.into()))
            .collect(),
        None => {
            let (ut, uth) = separation_thresholds(&cfg)?;
            vec![(ut / 20.0, uth / 20.0)]
        }
    };
    let normalize = design_block.normalize_power.unwrap_or(false) || overrides.normalize_power;
    let design = FakePathDesign::new(sets, normalize)?;

    let sweep = raw.sweep.unwrap_or_default();
    let snr_db = sweep.snr_db.map_or_else(|| vec![-10.0, 0.0, 10.0, 20.0], |v| to_f64s(&v));
    let mu_grid = sweep
        .offset_scale_grid
        .map_or_else(|| vec![0.05, 0.1, 0.2, 0.5, 1.0], |v| to_f64s(&v));
    for &m in &mu_grid {
        if !(m > 0.0) || !m.is_finite() {
            bail!("sweep.offset_scale_grid entries must be positive, got {m}");
        }
    }
    for &s in &snr_db {
        if !s.is_finite() {
            bail!("sweep.snr_db entries must be finite, got {s}");
        }
    }
    let master_seed = overrides.seed.or(sweep.master_seed).unwrap_or(DEFAULT_SEED);

    let scenario = Scenario { cfg, scene, design, snr_db, mu_grid, master_seed };
    check_model(&scenario)?;
    Ok(scenario)
}

/// Runs every model-level check up front: path parameters in range, fake
/// parameters in range, and a consistent bounce geometry behind each fake
/// path, so an eavesdropper's localization model exists.
fn check_model(s: &Scenario) -> anyhow::Result<()> {
    let seed = fpi_core::seed::derived_seed(s.master_seed, streams::SCENE, 0);
    let truth = scene_to_params(&s.scene, &s.cfg, seed)?;
    fake_paths_from_design(&truth, &s.design, &s.cfg)?;
    let feas = design_feasibility(&s.scene, &s.design, &s.cfg)?;
    if !feas.feasible {
        let missing: Vec<usize> = feas
            .scatterers
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.is_none().then_some(i))
            .collect();
        if missing.is_empty() {
            bail!("design is not geometrically consistent: delay offsets must be positive");
        }
        bail!(
            "design is not geometrically consistent: fake paths {missing:?} cannot be \
             explained by any scatterer (delay shorter than the direct range)"
        );
    }
    Ok(())
}
