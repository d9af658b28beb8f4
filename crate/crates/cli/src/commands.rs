use std::io::Write;

use billiard_core::deltamodel::{continuation_sweep, default_coupling_grid, well_sweep};
use billiard_core::spectra::{channel_for_order, lowest_levels_with_tol, spectrum_with_tol, state, Spectrum, Staircase};
use billiard_core::wavefield::{Eigenfunction, Parity};
use billiard_core::{weyl, Error};

use crate::args::{Cli, Command, DeltaArgs, DeltaModel, DensityArgs, ParityArg, SpectrumArgs};
use crate::config::{Cutoff, RunConfig};
use crate::output::Table;
use crate::CliError;

/// Parses nothing; runs an already parsed command line to completion.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let (table, cfg) = match &cli.command {
        Command::Spectrum(a) => {
            let cfg = RunConfig::resolve(&a.common)?;
            (spectrum(&cfg, a)?, cfg)
        }
        Command::Weyl(a) => {
            let cfg = RunConfig::resolve(&a.common)?;
            (weyl_table(&cfg)?, cfg)
        }
        Command::Density(a) => {
            let cfg = RunConfig::resolve(&a.common)?;
            (density(&cfg, a)?, cfg)
        }
        Command::Delta(a) => {
            let cfg = RunConfig::resolve(&a.common)?;
            (delta(&cfg, a)?, cfg)
        }
    };
    let bytes = table.render(cfg.format)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|source| CliError::Write { path: path.display().to_string(), source }),
        None => std::io::stdout()
            .lock()
            .write_all(&bytes)
            .map_err(|source| CliError::Write { path: "standard output".into(), source }),
    }
}

fn common_meta(t: &mut Table, cfg: &RunConfig, command: &'static str) {
    t.meta("tool", "billiard");
    t.meta("version", env!("CARGO_PKG_VERSION"));
    t.meta("command", command);
    t.meta("geometry", cfg.geometry.name());
    t.meta("f", cfg.geometry.parameter());
    t.meta("radius", cfg.units.radius);
    t.meta("hbar2_over_2mu", cfg.units.hbar2_over_2mu);
}

fn cutoff_error(e: Error) -> CliError {
    match e {
        Error::OutOfEnvelope { .. } => CliError::field("emax", e.to_string()),
        other => CliError::Compute { context: "computing the spectrum", source: other },
    }
}

fn compute_spectrum(cfg: &RunConfig) -> Result<Spectrum, CliError> {
    match cfg.require_cutoff()? {
        Cutoff::Energy(e) => spectrum_with_tol(cfg.geometry, e, cfg.tol),
        Cutoff::Levels(n) => lowest_levels_with_tol(cfg.geometry, n, cfg.tol),
    }
    .map_err(cutoff_error)
}

pub fn spectrum(cfg: &RunConfig, args: &SpectrumArgs) -> Result<Table, CliError> {
    let spec = compute_spectrum(cfg)?;
    if let Some(m) = args.m {
        channel_for_order(cfg.geometry, m).map_err(|_| {
            CliError::field("m", format!("{m} is not an angular order of geometry `{}`", cfg.geometry.name()))
        })?;
    }
    let keep = |nu: f64| args.m.is_none_or(|m| (nu - m).abs() <= 1e-9 * m.max(1.0));
    let mut t = Table::new(vec!["m", "n_r", "z", "E", "multiplicity"]);
    common_meta(&mut t, cfg, "spectrum");
    for s in spec.states.iter().filter(|s| keep(s.nu())) {
        t.push(vec![s.nu().into(), s.n_r.into(), s.z.into(), cfg.units.energy(s.energy).into(), s.multiplicity.into()]);
    }
    Ok(t)
}

pub fn weyl_table(cfg: &RunConfig) -> Result<Table, CliError> {
    let cutoff = cfg.require_cutoff()?;
    let spec = compute_spectrum(cfg)?;
    let staircase: Staircase = match cutoff {
        Cutoff::Levels(n) => spec.staircase().truncated(n),
        Cutoff::Energy(_) => spec.staircase(),
    };
    let fitted = weyl::fit(&staircase).map_err(|e| match e {
        Error::InsufficientData { needed, got } => CliError::field(
            if matches!(cutoff, Cutoff::Levels(_)) { "levels" } else { "emax" },
            format!("the fit needs at least {needed} distinct levels, the cutoff gives {got}"),
        ),
        other => CliError::Compute { context: "fitting the staircase", source: other },
    })?;
    let predicted = weyl::predict(cfg.geometry);
    let e_top = staircase.steps().last().map_or(0.0, |s| s.energy);
    let deviation = weyl::max_deviation(&staircase, &predicted, e_top);

    let u = cfg.units;
    let s = u.energy_scale();
    let ledger = weyl::ledger(cfg.geometry).scaled(u.radius);
    let mut t = Table::new(vec!["E", "N_data", "N_weyl_predicted", "N_weyl_fitted", "residual"]);
    t.csv_metadata = true;
    common_meta(&mut t, cfg, "weyl");
    t.meta("area", ledger.area);
    t.meta("perimeter", ledger.perimeter);
    t.meta("predicted_a", predicted.a / s);
    t.meta("predicted_b", predicted.b / s.sqrt());
    t.meta("fitted_a", fitted.a / s);
    t.meta("fitted_b", fitted.b / s.sqrt());
    t.meta("rms", fitted.rms);
    t.meta("max_deviation_predicted", deviation);
    t.meta("states", staircase.total());
    t.meta("distinct_levels", staircase.len());
    for row in weyl::comparison_table(&staircase, &predicted, &fitted) {
        t.push(vec![
            u.energy(row.energy).into(),
            row.n_data.into(),
            row.n_predicted.into(),
            row.n_fitted.into(),
            row.residual.into(),
        ]);
    }
    Ok(t)
}

pub fn density(cfg: &RunConfig, args: &DensityArgs) -> Result<Table, CliError> {
    if args.nr == 0 {
        return Err(CliError::field("nr", "radial quantum numbers start at 1"));
    }
    for (field, n) in [("grid-r", args.grid_r), ("grid-theta", args.grid_theta)] {
        if n < 16 {
            return Err(CliError::field(field, format!("needs at least 16 samples (got {n})")));
        }
    }
    let s = state(cfg.geometry, args.m, args.nr).map_err(|e| match e {
        Error::NoSuchState { .. } | Error::Domain { .. } => CliError::field(
            "m",
            format!("no state (m = {}, n_r = {}) in geometry `{}`", args.m, args.nr, cfg.geometry.name()),
        ),
        other => CliError::Compute { context: "locating the state", source: other },
    })?;
    let parity = args.parity.map(|p| match p {
        ParityArg::Even => Parity::Even,
        ParityArg::Odd => Parity::Odd,
    });
    let eigen = Eigenfunction::new(&s, parity).map_err(|e| match e {
        Error::NoSuchState { what } => CliError::field("parity", what),
        other => CliError::Compute { context: "normalizing the eigenfunction", source: other },
    })?;
    let grid = eigen
        .density_grid(args.grid_r, args.grid_theta)
        .map_err(CliError::compute("sampling the density"))?;

    let u = cfg.units;
    let mut t = Table::new(vec!["r", "theta", "density"]);
    t.csv_metadata = true;
    common_meta(&mut t, cfg, "density");
    t.meta("m", s.nu());
    t.meta("n_r", s.n_r);
    t.meta("z", s.z);
    t.meta("E", u.energy(s.energy));
    t.meta("angular", format!("{:?}", eigen.angular.class).as_str());
    t.meta("radial_norm", eigen.radial.norm);
    t.meta("radial_norm_closed_form", eigen.radial.closed_form_norm);
    t.meta("grid_r", args.grid_r);
    t.meta("grid_theta", args.grid_theta);
    t.meta("grid_integral", grid.integrate());
    for (i, &r) in grid.r.iter().enumerate() {
        for (j, &theta) in grid.theta.iter().enumerate() {
            t.push(vec![u.length(r).into(), theta.into(), u.density(grid.value(i, j)).into()]);
        }
    }
    Ok(t)
}

pub fn delta(cfg: &RunConfig, args: &DeltaArgs) -> Result<Table, CliError> {
    let grid = match &args.couplings {
        Some(g) => g.clone(),
        None => default_coupling_grid(),
    };
    if grid.is_empty() {
        return Err(CliError::field("couplings", "no values given"));
    }
    if let Some(&bad) = grid.iter().find(|g| !(**g >= 0.0 && g.is_finite())) {
        return Err(CliError::field("couplings", format!("couplings must be finite and non-negative (got {bad})")));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CliError::field("couplings", "values must be strictly increasing"));
    }
    if args.branches == 0 {
        return Err(CliError::field("branches", "must be at least 1"));
    }
    let compute = CliError::compute("solving the δ model");
    let mut t;
    match args.model {
        DeltaModel::Angular => {
            if args.compose_nr == Some(0) {
                return Err(CliError::field("compose-nr", "radial quantum numbers start at 1"));
            }
            t = Table::new(vec!["g", "j", "m", "residual", "n_r", "z", "E"]);
            common_meta(&mut t, cfg, "delta");
            t.meta("model", "angular");
            for r in continuation_sweep(args.branches - 1, &grid, args.compose_nr).map_err(compute)? {
                t.push(vec![
                    r.g.into(),
                    r.j.into(),
                    r.m.into(),
                    r.residual.into(),
                    r.n_r.into(),
                    r.z.into(),
                    r.energy.map(|e| cfg.units.energy(e)).into(),
                ]);
            }
            t.prune_empty_columns();
        }
        DeltaModel::Well => {
            if args.compose_nr.is_some() {
                return Err(CliError::field("compose-nr", "only the angular model composes with disk levels"));
            }
            t = Table::new(vec!["Lambda", "n", "kL", "residual"]);
            common_meta(&mut t, cfg, "delta");
            t.meta("model", "well");
            for r in well_sweep(args.branches, &grid).map_err(compute)? {
                t.push(vec![r.lambda.into(), r.n.into(), r.kl.into(), r.residual.into()]);
            }
        }
    }
    Ok(t)
}
