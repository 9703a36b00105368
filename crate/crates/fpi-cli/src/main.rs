use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fpi_cli::emit::{to_csv, to_json, write_output, Table};
use fpi_cli::scenario::{self, load_scenario, Overrides};
use fpi_cli::runner;

/// Location-privacy analysis for fake-path injection in mmWave downlinks.
#[derive(Parser)]
#[command(name = "fpi", version, about)]
struct Cli {
    /// Scenario description in TOML; omit for the built-in default scenario
    #[arg(long, global = true, value_name = "PATH")]
    scenario: Option<PathBuf>,

    /// Master seed overriding the scenario's own
    #[arg(long, global = true, value_name = "INT")]
    seed: Option<u64>,

    /// Write the dataset here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Renormalize the precoder so injection leaves transmit power unchanged
    #[arg(long, global = true)]
    normalize_power: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds for every receiver model across the scenario's SNR grid
    Sweep,
    /// One of the predefined figure datasets
    Figure {
        #[arg(value_enum)]
        id: FigureId,
    },
    /// Check the scenario and print what it describes
    Validate,
}

#[derive(Clone, Copy, ValueEnum)]
enum FigureId {
    /// Closed-form bound chain over the offset-scale grid
    Bounds,
    /// Eavesdropper bound over a grid of delay and angle offsets
    #[value(name = "delta_heatmap")]
    DeltaHeatmap,
    /// Delay estimation bounds across SNR
    Toa,
    /// Departure-angle estimation bounds across SNR
    Aod,
    /// Localization bounds across SNR
    Loc,
    /// One versus two injected path sets across SNR
    Multiset,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let overrides = Overrides { seed: cli.seed, normalize_power: cli.normalize_power };
    let scenario = match load_scenario(cli.scenario.as_deref(), overrides) {
        Ok(s) => s,
        Err(err) => {
            eprintln!("invalid scenario: {err:#}");
            return ExitCode::from(2);
        }
    };

    let result = match cli.command {
        Command::Validate => match runner::describe(&scenario) {
            Ok(text) => {
                print!("{text}");
                return ExitCode::SUCCESS;
            }
            Err(err) => Err(err),
        },
        Command::Sweep => runner::run_sweep(&scenario).map(|rows| runner::sweep_table(&rows)),
        Command::Figure { id } => figure_table(id, &scenario),
    };

    let table = match result {
        Ok(t) => t,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::FAILURE;
        }
    };

    let text = match cli.format {
        Format::Csv => to_csv(&table),
        Format::Json => to_json(&table),
    };
    match write_output(&text, cli.out.as_deref()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn figure_table(id: FigureId, scenario: &scenario::Scenario) -> anyhow::Result<Table> {
    match id {
        FigureId::Bounds => runner::bounds_figure(scenario),
        FigureId::DeltaHeatmap => runner::heatmap_figure(scenario),
        FigureId::Multiset => runner::multiset_figure(scenario),
        FigureId::Toa => runner::run_sweep(scenario).map(|r| runner::toa_figure(&r)),
        FigureId::Aod => runner::run_sweep(scenario).map(|r| runner::aod_figure(&r)),
        FigureId::Loc => runner::run_sweep(scenario).map(|r| runner::loc_figure(&r)),
    }
}
