//! Localization error bounds with and without fake-path injection, for the
//! default link at 0 dB SNR.

use fpi_core::fim::exact_fim;
use fpi_core::localization::{localization_fim, location_crlb};
use fpi_core::seed::derived_seed;
use fpi_core::{
    design_feasibility, effective_pilots, eve_effective_paths, generate_pilots, received_energy,
    scene_to_params, separation_thresholds, sigma_from_snr, FakePathDesign, Scene, SystemConfig,
};

fn main() -> fpi_core::Result<()> {
    let cfg = SystemConfig::new(16, 16, 16, 15e6, 60e9, 0.0025, 3e8)?;
    let scene = Scene {
        tx: [3.0, 0.0],
        rx: [10.0, 5.0],
        scatterers: vec![[8.89, -6.05], [7.45, 8.54]],
    };

    // Truth channel, plus one fake path per true path at a twentieth of each
    // separation threshold.
    let master = 20;
    let truth = scene_to_params(&scene, &cfg, derived_seed(master, 1, 0))?;
    let (ut, uth) = separation_thresholds(&cfg)?;
    let design = FakePathDesign::new(vec![(ut / 20.0, uth / 20.0)], false)?;
    let combined = eve_effective_paths(&truth, &design, &cfg)?;

    // The legitimate receiver compensates the precoder, so it sees the truth
    // channel under the precoded pilots; the eavesdropper sees the combined
    // channel under the raw ones.  Noise is set for 0 dB at the legitimate
    // receiver.
    let pilots = generate_pilots(&cfg, derived_seed(master, 2, 0));
    let eff = effective_pilots(&pilots, &design, &cfg)?;
    let energy = received_energy(truth.paths(), &eff, &cfg)?;
    let sigma2 = sigma_from_snr(energy, &cfg, 0.0)?;

    let feas = design_feasibility(&scene, &design, &cfg)?;
    let phantoms: Vec<[f64; 2]> = feas
        .scatterers
        .iter()
        .map(|s| s.expect("default design is feasible"))
        .collect();

    let bob = localization_fim(&exact_fim(truth.paths(), &eff, sigma2, &cfg)?, &scene, &[], &cfg)?;
    let eve = localization_fim(
        &exact_fim(combined.paths(), &pilots, sigma2, &cfg)?,
        &scene,
        &phantoms,
        &cfg,
    )?;

    let bob_m = location_crlb(&bob)?.value().expect("legitimate link is identifiable");
    let eve_m = location_crlb(&eve)?.value().expect("combined channel is identifiable");
    println!("legitimate receiver: {bob_m:.3} m");
    println!("eavesdropper:        {eve_m:.3} m");
    println!("privacy gap:         {:.1} dB", 20.0 * (eve_m / bob_m).log10());
    Ok(())
}
