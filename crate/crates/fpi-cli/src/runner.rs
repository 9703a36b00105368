//! Experiment orchestration: the SNR sweep and the figure datasets, all
//! deterministic functions of the scenario and master seed.

use crate::emit::{Cell, Table};
use crate::scenario::{streams, Scenario};
use anyhow::{anyhow, bail, Context};
use fpi_core::baseline::gaussian_baseline_fim;
use fpi_core::bounds::bound_report;
use fpi_core::fim::{crlb_trace, exact_fim, Bounded, FimMatrix};
use fpi_core::leaked::leaked_fim;
use fpi_core::localization::{localization_fim, location_crlb};
use fpi_core::seed::derived_seed;
use fpi_core::{
    design_feasibility, effective_pilots, eve_effective_paths, fake_paths_from_design,
    generate_pilots, received_energy, scene_to_params, separation_thresholds, sigma_from_snr,
    FakePathDesign, Path, PathSet, PilotBlock, Provenance,
};

/// One SNR point of the main comparison: localization and per-path bounds
/// for the legitimate receiver and the three eavesdropper models.
#[derive(Debug, Clone, Copy)]
pub struct SweepRow {
    pub snr_db: f64,
    pub crlb_bob_loc_m: f64,
    pub crlb_eve_fpi_loc_m: f64,
    pub crlb_eve_leaked_loc_m: f64,
    pub crlb_eve_gauss_loc_m: f64,
    pub crlb_toa_bob_s: f64,
    pub crlb_toa_eve_s: f64,
    pub crlb_aod_bob_rad: f64,
    pub crlb_aod_eve_rad: f64,
    pub xi: f64,
    pub psi: f64,
    pub trace_exact: f64,
    pub trace_asymptotic: f64,
    pub seed: u64,
}

/// Everything derived from the scenario that does not depend on noise.
struct Prepared {
    truth: PathSet,
    combined: PathSet,
    phantoms: Vec<[f64; 2]>,
    pair: (Path, Path),
}

fn prepare(s: &Scenario) -> anyhow::Result<Prepared> {
    let scene_seed = derived_seed(s.master_seed, streams::SCENE, 0);
    let truth = scene_to_params(&s.scene, &s.cfg, scene_seed)?;
    let combined = eve_effective_paths(&truth, &s.design, &s.cfg)?;
    let fakes = fake_paths_from_design(&truth, &s.design, &s.cfg)?;
    let pair = (truth.paths()[0], fakes[0]);
    let phantoms = phantom_positions(s, &s.design)?;
    Ok(Prepared { truth, combined, phantoms, pair })
}

/// Scatterer positions explaining the fake paths; the scenario check has
/// already established they exist.
fn phantom_positions(s: &Scenario, design: &FakePathDesign) -> anyhow::Result<Vec<[f64; 2]>> {
    design_feasibility(&s.scene, design, &s.cfg)?
        .scatterers
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| anyhow!("fake path {i} has no explaining scatterer")))
        .collect()
}

fn bounded(v: Bounded<f64>) -> f64 {
    v.value().unwrap_or(f64::INFINITY)
}

fn loc_crlb_m(
    fim: &FimMatrix,
    s: &Scenario,
    phantoms: &[[f64; 2]],
) -> anyhow::Result<f64> {
    let loc = localization_fim(fim, &s.scene, phantoms, &s.cfg)?;
    Ok(bounded(location_crlb(&loc)?))
}

fn sqrt_crlb(fim: &FimMatrix, index: usize) -> anyhow::Result<f64> {
    Ok(bounded(crlb_trace(fim, &[index])?).sqrt())
}

pub fn run_sweep(s: &Scenario) -> anyhow::Result<Vec<SweepRow>> {
    let prep = prepare(s)?;
    let pilot_seed = derived_seed(s.master_seed, streams::SWEEP, 0);
    let pilots = generate_pilots(&s.cfg, pilot_seed);
    let eff = effective_pilots(&pilots, &s.design, &s.cfg)?;
    let energy = received_energy(prep.truth.paths(), &eff, &s.cfg)?;

    let mut rows = Vec::with_capacity(s.snr_db.len());
    for &snr in &s.snr_db {
        let row = sweep_point(s, &prep, &pilots, &eff, energy, snr, pilot_seed)
            .with_context(|| format!("at {snr} dB"))?;
        rows.push(row);
    }
    Ok(rows)
}

fn sweep_point(
    s: &Scenario,
    prep: &Prepared,
    pilots: &PilotBlock,
    eff: &PilotBlock,
    energy: f64,
    snr: f64,
    seed: u64,
) -> anyhow::Result<SweepRow> {
    let sigma2 = sigma_from_snr(energy, &s.cfg, snr)?;

    let bob = exact_fim(prep.truth.paths(), eff, sigma2, &s.cfg)?;
    let eve = exact_fim(prep.combined.paths(), pilots, sigma2, &s.cfg)?;
    let leaked = leaked_fim(&prep.truth, &s.design, pilots, sigma2, &s.cfg)?;
    let gauss = gaussian_baseline_fim(&prep.truth, &s.design, pilots, sigma2, &s.cfg)?;

    let report =
        bound_report(&prep.pair.0, &prep.pair.1, &s.design, pilots, sigma2, &s.cfg)?;

    Ok(SweepRow {
        snr_db: snr,
        crlb_bob_loc_m: loc_crlb_m(&bob, s, &[])?,
        crlb_eve_fpi_loc_m: loc_crlb_m(&eve, s, &prep.phantoms)?,
        crlb_eve_leaked_loc_m: loc_crlb_m(&leaked, s, &[])?,
        crlb_eve_gauss_loc_m: loc_crlb_m(&gauss, s, &[])?,
        crlb_toa_bob_s: sqrt_crlb(&bob, 0)?,
        crlb_toa_eve_s: sqrt_crlb(&eve, 0)?,
        crlb_aod_bob_rad: sqrt_crlb(&bob, prep.truth.len())?,
        crlb_aod_eve_rad: sqrt_crlb(&eve, prep.combined.len())?,
        xi: report.xi,
        psi: report.psi,
        trace_exact: report.trace_exact,
        trace_asymptotic: report.trace_asymptotic,
        seed,
    })
}

pub const SWEEP_COLUMNS: [&str; 14] = [
    "snr_db",
    "crlb_bob_loc_m",
    "crlb_eve_fpi_loc_m",
    "crlb_eve_leaked_loc_m",
    "crlb_eve_gauss_loc_m",
    "crlb_toa_bob_s",
    "crlb_toa_eve_s",
    "crlb_aod_bob_rad",
    "crlb_aod_eve_rad",
    "xi",
    "psi",
    "trace_exact",
    "trace_asymptotic",
    "seed",
];

pub fn sweep_table(rows: &[SweepRow]) -> Table {
    let mut t = Table::new(SWEEP_COLUMNS.to_vec());
    for r in rows {
        t.push(vec![
            Cell::Float(r.snr_db),
            Cell::Float(r.crlb_bob_loc_m),
            Cell::Float(r.crlb_eve_fpi_loc_m),
            Cell::Float(r.crlb_eve_leaked_loc_m),
            Cell::Float(r.crlb_eve_gauss_loc_m),
            Cell::Float(r.crlb_toa_bob_s),
            Cell::Float(r.crlb_toa_eve_s),
            Cell::Float(r.crlb_aod_bob_rad),
            Cell::Float(r.crlb_aod_eve_rad),
            Cell::Float(r.xi),
            Cell::Float(r.psi),
            Cell::Float(r.trace_exact),
            Cell::Float(r.trace_asymptotic),
            Cell::Seed(r.seed),
        ]);
    }
    t
}

/// Projects sweep rows onto the columns one figure needs.
fn sweep_projection(rows: &[SweepRow], picks: &[&'static str]) -> Table {
    let full = sweep_table(rows);
    let indices: Vec<usize> = picks
        .iter()
        .map(|p| full.columns.iter().position(|c| c == p).expect("known column"))
        .collect();
    let mut t = Table::new(picks.to_vec());
    for row in &full.rows {
        t.push(indices.iter().map(|&i| row[i]).collect());
    }
    t
}

/// Bound chain over the offset-scale grid: for each scale, the fake angle
/// lands that fraction of the angle threshold above the line-of-sight path
/// and the delay offset follows the sine coupling that keeps the explicit
/// bound tight.
pub fn bounds_figure(s: &Scenario) -> anyhow::Result<Table> {
    let scene_seed = derived_seed(s.master_seed, streams::SCENE, 0);
    let truth = scene_to_params(&s.scene, &s.cfg, scene_seed)?;
    let t0 = truth.paths()[0];
    let (_, uth) = separation_thresholds(&s.cfg)?;
    let g = s.cfg.g as f64;

    let mut table = Table::new(vec![
        "mu",
        "delay_offset_s",
        "angle_offset_rad",
        "xi_over_g",
        "psi_over_g",
        "trace_exact",
        "trace_asymptotic_over_g",
        "seed",
    ]);
    for (i, &mu) in s.mu_grid.iter().enumerate() {
        let theta_f = t0.theta + mu * uth;
        let dtheta = (theta_f.sin() - t0.theta.sin()).asin();
        if !dtheta.is_finite() {
            bail!("offset scale {mu} pushes the fake angle outside the model");
        }
        let dtau = dtheta.sin() / ((s.cfg.n as f64 - 1.0) * s.cfg.lambda_ratio());
        let design = FakePathDesign::new(vec![(dtau, dtheta)], false)?;
        let fake = Path {
            tau: t0.tau + dtau,
            theta: theta_f,
            provenance: Provenance::Fake,
            ..t0
        };

        let seed = derived_seed(s.master_seed, streams::BOUNDS, i as u64);
        let pilots = generate_pilots(&s.cfg, seed);
        let eff = effective_pilots(&pilots, &design, &s.cfg)?;
        let energy = received_energy(truth.paths(), &eff, &s.cfg)?;
        let sigma2 = sigma_from_snr(energy, &s.cfg, 0.0)?;

        let report = bound_report(&t0, &fake, &design, &pilots, sigma2, &s.cfg)
            .with_context(|| format!("at offset scale {mu}"))?;
        table.push(vec![
            Cell::Float(mu),
            Cell::Float(dtau),
            Cell::Float(dtheta),
            Cell::Float(report.xi / g),
            Cell::Float(report.psi / g),
            Cell::Float(report.trace_exact),
            Cell::Float(report.trace_asymptotic),
            Cell::Seed(seed),
        ]);
    }
    Ok(table)
}

/// Eavesdropper localization bound at 0 dB over an 8 by 8 grid of offset
/// pairs.  The grid spans each separation threshold, shrunk where necessary
/// so every fake path stays inside the model (delay window, angle sine).
pub fn heatmap_figure(s: &Scenario) -> anyhow::Result<Table> {
    let scene_seed = derived_seed(s.master_seed, streams::SCENE, 0);
    let truth = scene_to_params(&s.scene, &s.cfg, scene_seed)?;
    let (ut, uth) = separation_thresholds(&s.cfg)?;

    let margin = 1.0 - 1e-9;
    let tau_room = s.cfg.delay_span()
        - truth.paths().iter().map(|p| p.tau).fold(0.0, f64::max);
    let dtau_cap = ut.min(tau_room * margin);
    let sine_room = 1.0 - truth.paths().iter().map(|p| p.theta.sin()).fold(-1.0, f64::max);
    let dtheta_cap = uth.min(sine_room.clamp(-1.0, 1.0).asin() * margin);
    if !(dtau_cap > 0.0) || !(dtheta_cap > 0.0) {
        bail!("scene leaves no room for fake paths inside the model");
    }

    let seed = derived_seed(s.master_seed, streams::HEATMAP, 0);
    let pilots = generate_pilots(&s.cfg, seed);

    let mut table = Table::new(vec![
        "delay_scale",
        "angle_scale",
        "delay_offset_s",
        "angle_offset_rad",
        "crlb_eve_fpi_loc_m",
        "seed",
    ]);
    for i in 1..=8u32 {
        for j in 1..=8u32 {
            let dtau = f64::from(i) / 8.0 * dtau_cap;
            let dtheta = f64::from(j) / 8.0 * dtheta_cap;
            let design = FakePathDesign::new(vec![(dtau, dtheta)], s.design.normalize)?;

            let combined = eve_effective_paths(&truth, &design, &s.cfg)?;
            let phantoms = phantom_positions(s, &design)?;
            let eff = effective_pilots(&pilots, &design, &s.cfg)?;
            let energy = received_energy(truth.paths(), &eff, &s.cfg)?;
            let sigma2 = sigma_from_snr(energy, &s.cfg, 0.0)?;
            let eve = exact_fim(combined.paths(), &pilots, sigma2, &s.cfg)?;
            let crlb = loc_crlb_m(&eve, s, &phantoms)
                .with_context(|| format!("at offsets ({dtau:e} s, {dtheta:e} rad)"))?;

            table.push(vec![
                Cell::Float(f64::from(i) / 8.0),
                Cell::Float(f64::from(j) / 8.0),
                Cell::Float(dtau),
                Cell::Float(dtheta),
                Cell::Float(crlb),
                Cell::Seed(seed),
            ]);
        }
    }
    Ok(table)
}

/// Single-set versus two-set injection across the SNR grid, the second set
/// at a tenth of each separation threshold.
pub fn multiset_figure(s: &Scenario) -> anyhow::Result<Table> {
    let scene_seed = derived_seed(s.master_seed, streams::SCENE, 0);
    let truth = scene_to_params(&s.scene, &s.cfg, scene_seed)?;
    let (ut, uth) = separation_thresholds(&s.cfg)?;

    let single = s.design.clone();
    let mut sets = single.sets().to_vec();
    sets.push((ut / 10.0, uth / 10.0));
    let multi = FakePathDesign::new(sets, single.normalize)?;

    let mut table = Table::new(vec![
        "snr_db",
        "crlb_eve_single_loc_m",
        "crlb_eve_multi_loc_m",
        "seed",
    ]);
    for (i, &snr) in s.snr_db.iter().enumerate() {
        let seed = derived_seed(s.master_seed, streams::MULTISET, i as u64);
        let pilots = generate_pilots(&s.cfg, seed);
        let arm = |design: &FakePathDesign| -> anyhow::Result<f64> {
            let combined = eve_effective_paths(&truth, design, &s.cfg)?;
            let phantoms = phantom_positions(s, design)?;
            let eff = effective_pilots(&pilots, design, &s.cfg)?;
            let energy = received_energy(truth.paths(), &eff, &s.cfg)?;
            let sigma2 = sigma_from_snr(energy, &s.cfg, snr)?;
            let eve = exact_fim(combined.paths(), &pilots, sigma2, &s.cfg)?;
            loc_crlb_m(&eve, s, &phantoms)
        };
        let one = arm(&single).with_context(|| format!("single set at {snr} dB"))?;
        let two = arm(&multi).with_context(|| format!("two sets at {snr} dB"))?;
        table.push(vec![
            Cell::Float(snr),
            Cell::Float(one),
            Cell::Float(two),
            Cell::Seed(seed),
        ]);
    }
    Ok(table)
}

pub fn toa_figure(rows: &[SweepRow]) -> Table {
    sweep_projection(rows, &["snr_db", "crlb_toa_bob_s", "crlb_toa_eve_s", "seed"])
}

pub fn aod_figure(rows: &[SweepRow]) -> Table {
    sweep_projection(rows, &["snr_db", "crlb_aod_bob_rad", "crlb_aod_eve_rad", "seed"])
}

pub fn loc_figure(rows: &[SweepRow]) -> Table {
    sweep_projection(
        rows,
        &[
            "snr_db",
            "crlb_bob_loc_m",
            "crlb_eve_fpi_loc_m",
            "crlb_eve_leaked_loc_m",
            "crlb_eve_gauss_loc_m",
            "seed",
        ],
    )
}

/// Human-oriented summary printed by the `validate` subcommand.
pub fn describe(s: &Scenario) -> anyhow::Result<String> {
    use std::fmt::Write;
    let scene_seed = derived_seed(s.master_seed, streams::SCENE, 0);
    let truth = scene_to_params(&s.scene, &s.cfg, scene_seed)?;
    let (ut, uth) = separation_thresholds(&s.cfg)?;
    let feas = design_feasibility(&s.scene, &s.design, &s.cfg)?;

    let mut out = String::new();
    writeln!(
        out,
        "system: {} subcarriers, {} antennas, {} pilot repetitions, {:.3} MHz at {:.1} GHz",
        s.cfg.n,
        s.cfg.nt,
        s.cfg.g,
        s.cfg.bandwidth / 1e6,
        s.cfg.carrier / 1e9
    )?;
    writeln!(
        out,
        "separation thresholds: {:.6e} s delay, {:.6e} rad angle",
        ut, uth
    )?;
    writeln!(out, "paths ({} true):", truth.len())?;
    for p in truth.paths() {
        let label = match p.provenance {
            Provenance::Los => "los",
            Provenance::Scatter => "scatter",
            Provenance::Fake => "fake",
        };
        writeln!(
            out,
            "  {label}: delay {:.6e} s, angle {:.6} rad, gain {:.6e}",
            p.tau,
            p.theta,
            p.gamma.norm()
        )?;
    }
    writeln!(out, "design ({} offset sets, normalize: {}):", s.design.sets().len(), s.design.normalize)?;
    for (k, (&(dt, dth), v)) in s.design.sets().iter().zip(chunks_of(&feas.scatterers, truth.len())).enumerate() {
        writeln!(out, "  set {k}: delay offset {:.6e} s, angle offset {:.6e} rad", dt, dth)?;
        for (i, sc) in v.iter().enumerate() {
            match sc {
                Some([x, y]) => writeln!(out, "    fake {i} explained by scatterer ({x:.4}, {y:.4})")?,
                None => writeln!(out, "    fake {i} has no explaining scatterer")?,
            }
        }
    }
    writeln!(out, "sweep: snr {:?} dB, offset scales {:?}, master seed {}", s.snr_db, s.mu_grid, s.master_seed)?;
    writeln!(out, "scenario is valid")?;
    Ok(out)
}

fn chunks_of<T>(v: &[T], size: usize) -> impl Iterator<Item = &[T]> {
    v.chunks(size.max(1))
}
