use std::path::Path;

use hvdiscord::bell_model::{
    bell_support, bell_value, check_unified, common_segments, conflict_report, linearity_violation, unified_rep,
    HiddenVariable,
};
use hvdiscord::discord::{
    commutator_rigidity_test, conditional_entropy_landscape, discord_with, entropy_identity, state_rigidity_test,
    MeasurementBasis,
};
use hvdiscord::qmcore::{projector_from_bloch, DensityMatrix, UnitVector3};
use hvdiscord::sampling::{random_qubit_state, random_unit_vector, seeded_rng};
use hvdiscord::DiscordOptions;
use rand::Rng;
use serde_json::Value;

use crate::cli::{GlobalArgs, RigidityMode, StateArgs, AUTO_NORMALIZE_WINDOW};
use crate::report::{num, vec3, Case, Cell, RunReport, Table};
use crate::state_spec::StateSpec;
use crate::CliError;

/// Bases used by the state-mode rigidity sweep.
const STATE_RIGIDITY_BASES: usize = 50;

fn direction(v: [f64; 3], flag: &str) -> Result<UnitVector3<f64>, CliError> {
    UnitVector3::normalized_within(v[0], v[1], v[2], AUTO_NORMALIZE_WINDOW)
        .map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

fn components(v: &UnitVector3<f64>) -> [f64; 3] {
    [v.x(), v.y(), v.z()]
}

fn ensure_positive(value: usize, flag: &str) -> Result<(), CliError> {
    if value == 0 {
        return Err(CliError::Usage(format!("--{flag} must be at least 1")));
    }
    Ok(())
}

pub fn verify_bell(
    g: &GlobalArgs,
    echo: Vec<String>,
    samples: usize,
    mc_samples: usize,
) -> Result<RunReport, CliError> {
    ensure_positive(samples, "samples")?;
    ensure_positive(mc_samples, "mc-samples")?;
    let mut report = RunReport::new(echo, g.seed, g.tol);
    let mut rng = seeded_rng(g.seed);

    let mut table = Table::new(vec![
        "sx",
        "sy",
        "sz",
        "mx",
        "my",
        "mz",
        "measure",
        "expected",
        "abs_error",
    ]);
    table.in_json = false;
    let mut max_error = 0.0f64;
    for _ in 0..samples {
        let s: UnitVector3<f64> = random_unit_vector(&mut rng);
        let m: UnitVector3<f64> = random_unit_vector(&mut rng);
        let measure = bell_support(&m, &s).measure();
        let expected = 0.5 * (1.0 + s.dot(&m));
        let error = (measure - expected).abs();
        max_error = max_error.max(error);
        let mut row: Vec<Cell> = components(&s)
            .into_iter()
            .chain(components(&m))
            .map(Cell::Num)
            .collect();
        row.extend([Cell::Num(measure), Cell::Num(expected), Cell::Num(error)]);
        table.rows.push(row);
    }
    report.push(
        Case::new("random pairs", "support_measure_equals_expectation", max_error <= g.tol)
            .with("pairs", Value::from(samples))
            .with("max_abs_error", num(max_error)),
    );

    let s = UnitVector3::unit_z();
    let m = UnitVector3::normalize(0.84f64.sqrt(), 0.0, -0.4).expect("non-zero");
    let measure = bell_support(&m, &s).measure();
    report.push(
        Case::new(
            "pinned s·m = -0.4",
            "support_measure_equals_expectation",
            (measure - 0.3).abs() <= g.tol,
        )
        .with("s_dot_m", num(s.dot(&m)))
        .with("measure", num(measure))
        .with("expected", num(0.3)),
    );

    let s: UnitVector3<f64> = random_unit_vector(&mut rng);
    let m: UnitVector3<f64> = random_unit_vector(&mut rng);
    let hits = (0..mc_samples)
        .filter(|_| {
            let w = HiddenVariable::new(rng.random_range(-0.5..0.5)).expect("in range");
            bell_value(&m, &s, w) == 1
        })
        .count();
    let frequency = hits as f64 / mc_samples as f64;
    let measure = bell_support(&m, &s).measure();
    let bound = 5.0 / (mc_samples as f64).sqrt();
    report.push(
        Case::new(
            "monte carlo cross-check",
            "sampled_frequency_matches_measure",
            (frequency - measure).abs() < bound,
        )
        .with("s", vec3(components(&s)))
        .with("m", vec3(components(&m)))
        .with("draws", Value::from(mc_samples))
        .with("frequency", num(frequency))
        .with("measure", num(measure))
        .with("bound", num(bound)),
    );
    report.table = Some(table);
    Ok(report)
}

pub fn conflict(
    g: &GlobalArgs,
    echo: Vec<String>,
    s: [f64; 3],
    n: [f64; 3],
    m: [f64; 3],
) -> Result<RunReport, CliError> {
    let (s, n, m) = (direction(s, "s")?, direction(n, "n")?, direction(m, "m")?);
    let rep = conflict_report(&m, &n, &s)?;
    let mut report = RunReport::new(echo, g.seed, g.tol);
    let means_ok = (rep.mean9 - rep.quantum_mean).abs() <= g.tol && (rep.mean12 - rep.quantum_mean).abs() <= g.tol;
    report.push(
        Case::new("conditional means", "both_means_equal_quantum_conditional", means_ok)
            .with("mean_rep9", num(rep.mean9))
            .with("mean_rep12", num(rep.mean12))
            .with("quantum_mean", num(rep.quantum_mean)),
    );
    report.push(
        Case::new("pointwise comparison", "rep9_vs_rep12_pointwise", true)
            .with("disagreement_measure", num(rep.disagreement_measure))
            .with("rep9_support_measure", num(rep.rep9_support.measure())),
    );
    let mut table = Table::new(vec!["omega_start", "omega_end", "rep9_value", "rep12_value"]);
    for (a, b, v) in common_segments(&[&rep.rep9, &rep.rep12]) {
        table
            .rows
            .push(vec![Cell::Num(a), Cell::Num(b), Cell::Num(v[0]), Cell::Num(v[1])]);
    }
    report.table = Some(table);
    Ok(report)
}

pub fn linearity(
    g: &GlobalArgs,
    echo: Vec<String>,
    lambda: f64,
    n: [f64; 3],
    m: [f64; 3],
    s: [f64; 3],
) -> Result<RunReport, CliError> {
    let (n, m, s) = (direction(n, "n")?, direction(m, "m")?, direction(s, "s")?);
    let rep = linearity_violation(lambda, &n, &m, &s)?;
    let mut report = RunReport::new(echo, g.seed, g.tol);
    let spectrum_ok = (0..2).all(|i| (rep.spectrum[i] - rep.spectrum_closed_form[i]).abs() <= g.tol);
    report.push(
        Case::new("spectrum of E", "eigenvalues_match_closed_form", spectrum_ok)
            .with(
                "eigenvalues",
                Value::Array(rep.spectrum.iter().map(|&x| num(x)).collect()),
            )
            .with(
                "closed_form",
                Value::Array(rep.spectrum_closed_form.iter().map(|&x| num(x)).collect()),
            ),
    );
    let attained: Vec<Value> = rep
        .attained_values()
        .into_iter()
        .map(|(v, mu)| Value::Array(vec![num(v), num(mu)]))
        .collect();
    let mut possible: Vec<f64> = rep.pieces.iter().map(|p| p.value).collect();
    possible.sort_by(f64::total_cmp);
    possible.dedup_by(|a, b| (*a - *b).abs() <= g.tol);
    report.push(
        Case::new(
            "term-by-term values",
            "term_by_term_values_outside_spectrum",
            rep.mismatch_measure > g.tol,
        )
        .with("lambda", num(rep.lambda))
        .with("possible_values", Value::Array(possible.into_iter().map(num).collect()))
        .with("attained_values_with_measure", Value::Array(attained))
        .with("mismatch_measure", num(rep.mismatch_measure)),
    );
    let mut table = Table::new(vec![
        "omega_start",
        "omega_end",
        "value",
        "n_fires",
        "m_fires",
        "in_spectrum",
    ]);
    let mut rows: Vec<(f64, Vec<Cell>)> = Vec::new();
    for p in &rep.pieces {
        for &(a, b) in p.set.intervals() {
            rows.push((
                a,
                vec![
                    Cell::Num(a),
                    Cell::Num(b),
                    Cell::Num(p.value),
                    Cell::Text(p.n_fires.to_string()),
                    Cell::Text(p.m_fires.to_string()),
                    Cell::Text(p.in_spectrum.to_string()),
                ],
            ));
        }
    }
    rows.sort_by(|x, y| x.0.total_cmp(&y.0));
    table.rows = rows.into_iter().map(|(_, r)| r).collect();
    report.table = Some(table);
    Ok(report)
}

fn load_state(args: &StateArgs) -> Result<StateSpec, CliError> {
    match (&args.state, &args.state_file) {
        (Some(text), None) => StateSpec::from_arg(text).map_err(CliError::Usage),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            StateSpec::from_json(&text).map_err(CliError::Usage)
        }
        _ => Err(CliError::Usage(
            "exactly one of --state or --state-file is required".into(),
        )),
    }
}

pub fn discord(
    g: &GlobalArgs,
    echo: Vec<String>,
    state: &StateArgs,
    grid: usize,
    landscape: Option<&Path>,
) -> Result<RunReport, CliError> {
    ensure_positive(grid, "grid")?;
    let state = load_state(state)?
        .build()
        .and_then(|p| p.into_bipartite())
        .map_err(|e| CliError::Usage(format!("invalid state: {e}")))?;
    let options = DiscordOptions {
        grid_points: grid,
        ..DiscordOptions::default()
    };
    let r = discord_with(&state, &options)?;
    let mut report = RunReport::new(echo, g.seed, g.tol);
    let argmin = components(&r.argmin.direction());
    report.push(
        Case::new("discord", "discord_within_bounds", r.within_bounds(g.tol))
            .with("discord", num(r.discord))
            .with("argmin", vec3(argmin))
            .with("s_x", num(r.s_x))
            .with("s_y", num(r.s_y))
            .with("s_xy", num(r.s_xy))
            .with("cond_entropy_min", num(r.cond_entropy_min)),
    );
    let identity = entropy_identity(&state, &r.argmin)?;
    report.push(
        Case::new(
            "entropy identity at argmin",
            "normalized_equals_unnormalized_form",
            identity.gap() <= g.tol,
        )
        .with("normalized", num(identity.lhs))
        .with("unnormalized", num(identity.rhs)),
    );
    let mut table = Table::new(vec![
        "discord",
        "ax",
        "ay",
        "az",
        "s_x",
        "s_y",
        "s_xy",
        "cond_entropy_min",
    ]);
    table.rows.push(
        [
            r.discord,
            argmin[0],
            argmin[1],
            argmin[2],
            r.s_x,
            r.s_y,
            r.s_xy,
            r.cond_entropy_min,
        ]
        .into_iter()
        .map(Cell::Num)
        .collect(),
    );
    table.in_json = false;
    report.table = Some(table);

    if let Some(path) = landscape {
        let mut t = Table::new(vec!["ax", "ay", "az", "cond_entropy"]);
        for (a, h) in conditional_entropy_landscape(&state, grid) {
            t.rows
                .push(vec![Cell::Num(a.x()), Cell::Num(a.y()), Cell::Num(a.z()), Cell::Num(h)]);
        }
        let bytes = t.to_csv().map_err(CliError::Io)?;
        std::fs::write(path, bytes).map_err(CliError::Io)?;
    }
    Ok(report)
}

pub fn rigidity(g: &GlobalArgs, echo: Vec<String>, mode: RigidityMode, trials: usize) -> Result<RunReport, CliError> {
    ensure_positive(trials, "trials")?;
    let mut report = RunReport::new(echo, g.seed, g.tol);
    let mut rng = seeded_rng(g.seed);
    let (x, z) = (UnitVector3::<f64>::unit_x(), UnitVector3::<f64>::unit_z());
    match mode {
        RigidityMode::Operator => {
            let mut counterexamples = 0usize;
            let mut min_commutator = f64::INFINITY;
            for _ in 0..trials {
                let a = projector_from_bloch(random_unit_vector(&mut rng))?;
                let b = projector_from_bloch(random_unit_vector(&mut rng))?;
                let r = commutator_rigidity_test(&a, &b)?;
                if !r.biconditional_holds {
                    counterexamples += 1;
                }
                min_commutator = min_commutator.min(r.commutator_norm);
            }
            report.push(
                Case::new(
                    "random projector pairs",
                    "symmetric_sandwich_iff_commuting",
                    counterexamples == 0,
                )
                .with("pairs", Value::from(trials))
                .with("counterexamples", Value::from(counterexamples))
                .with("min_commutator_norm", num(min_commutator)),
            );
            let pz = projector_from_bloch(z)?;
            let r = commutator_rigidity_test(&pz, &projector_from_bloch(x)?)?;
            let ok = r.biconditional_holds && !r.symmetric_for_all_rho && (r.commutator_norm - 0.5).abs() <= g.tol;
            report.push(
                Case::new("pinned (P_z, P_x)", "symmetric_sandwich_iff_commuting", ok)
                    .with("symmetric", Value::from(r.symmetric_for_all_rho))
                    .with("commutator_norm", num(r.commutator_norm))
                    .with("max_gap", num(r.max_gap)),
            );
            let r = commutator_rigidity_test(&pz, &pz.complement())?;
            let ok = r.biconditional_holds && r.symmetric_for_all_rho && r.commutator_norm <= g.tol;
            report.push(
                Case::new("pinned (P_z, P_-z)", "symmetric_sandwich_iff_commuting", ok)
                    .with("symmetric", Value::from(r.symmetric_for_all_rho))
                    .with("commutator_norm", num(r.commutator_norm))
                    .with("max_gap", num(r.max_gap)),
            );
        }
        RigidityMode::State => {
            let bases: Vec<MeasurementBasis<f64>> = (0..STATE_RIGIDITY_BASES)
                .map(|_| MeasurementBasis::new(random_unit_vector(&mut rng)))
                .collect();
            let mixed = state_rigidity_test(&DensityMatrix::maximally_mixed(2), &bases, g.tol)?;
            report.push(
                Case::new(
                    "I/2 across random bases",
                    "fixed_point_of_every_dephasing",
                    mixed.is_fixed_point_all,
                )
                .with("bases", Value::from(bases.len()))
                .with("max_residual", num(mixed.max_residual)),
            );
            let mut fixed = 0usize;
            let mut min_residual = f64::INFINITY;
            for _ in 0..trials {
                let rho = random_qubit_state(&mut rng);
                let r = state_rigidity_test(&rho, &bases, g.tol)?;
                if r.is_fixed_point_all {
                    fixed += 1;
                }
                min_residual = min_residual.min(r.max_residual);
            }
            report.push(
                Case::new("random states", "only_maximally_mixed_is_fixed", fixed == 0)
                    .with("states", Value::from(trials))
                    .with("fixed_points_found", Value::from(fixed))
                    .with("min_max_residual", num(min_residual)),
            );
            let pinned = state_rigidity_test(
                &DensityMatrix::pure_qubit(z),
                &[MeasurementBasis::z(), MeasurementBasis::x()],
                g.tol,
            )?;
            let ok = !pinned.is_fixed_point_all
                && pinned.residuals[0] <= g.tol
                && (pinned.residuals[1] - 0.5).abs() <= g.tol;
            report.push(
                Case::new("pinned P_z in bases {z, x}", "only_maximally_mixed_is_fixed", ok)
                    .with("residual_z", num(pinned.residuals[0]))
                    .with("residual_x", num(pinned.residuals[1])),
            );
        }
    }
    Ok(report)
}

pub fn unified(
    g: &GlobalArgs,
    echo: Vec<String>,
    m: [f64; 3],
    n: [f64; 3],
    s: [f64; 3],
) -> Result<RunReport, CliError> {
    let (m, n, s) = (direction(m, "m")?, direction(n, "n")?, direction(s, "s")?);
    let check = check_unified(&m, &n, &s, g.tol)?;
    let joint = unified_rep(&m, &n, &s)?;
    let rep = conflict_report(&m, &n, &s)?;
    let mut report = RunReport::new(echo, g.seed, g.tol);
    report.push(Case::new(
        "marginal over omega",
        "marginal_over_omega_equals_rep9",
        check.omega_marginal_matches,
    ));
    report.push(Case::new(
        "marginal over omega prime",
        "marginal_over_omega_prime_equals_rep12",
        check.omega_prime_marginal_matches,
    ));
    report.push(
        Case::new(
            "double integral",
            "double_integral_equals_quantum_mean",
            (check.double_integral - check.quantum_mean).abs() <= g.tol,
        )
        .with("double_integral", num(check.double_integral))
        .with("quantum_mean", num(check.quantum_mean)),
    );
    let (mw, mwp) = (joint.marginal_over_omega(), joint.marginal_over_omega_prime());
    let mut table = Table::new(vec![
        "omega_start",
        "omega_end",
        "marginal_omega",
        "rep9_value",
        "marginal_omega_prime",
        "rep12_value",
    ]);
    for (a, b, v) in common_segments(&[&mw, &rep.rep9, &mwp, &rep.rep12]) {
        table.rows.push(vec![
            Cell::Num(a),
            Cell::Num(b),
            Cell::Num(v[0]),
            Cell::Num(v[1]),
            Cell::Num(v[2]),
            Cell::Num(v[3]),
        ]);
    }
    report.table = Some(table);
    Ok(report)
}
