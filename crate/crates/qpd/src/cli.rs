//! The `qpd` command-line front end.
//!
//! Five subcommands: `payoff` (one game, one CSV row), `table` (payoff table
//! over a strategy set), `sweep` (CSV parameter sweeps, with the three
//! bundled figure presets), `validate` (engine vs closed forms) and
//! `equilibria` (JSON Nash/Pareto/dominance report).
//!
//! Conventions shared by all subcommands:
//!
//! - angles are radians and accept `pi` fractions (`pi/2`, `-pi/4`, `3pi/4`)
//!   as well as decimals;
//! - `--p` is shorthand for setting both `p1` and `p2`;
//! - CSV rows use the column order
//!   `gamma,r,p1,p2,alpha_A,theta_A,alpha_B,theta_B,payoff_A,payoff_B`
//!   with floats rendered at 15 significant digits (trailing zeros trimmed),
//!   which round-trips losslessly at the tolerances the crate works to;
//! - exit codes: 0 success, 1 validation failure, 2 usage error.

use clap::{Args, Parser, Subcommand};
use std::f64::consts::{FRAC_PI_2, PI};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use crate::closedform::{self, ClosedFormCase, DeviationPoint, ValidationGrid};
use crate::engine::{self, ClassicalProfile, GameConfig, PayoffPair, PayoffTable, Strategy};
use crate::equilibria::{
    self, FiniteGame, NamedStrategy, SweepAxis, SweepGrid, SweepParam, SweepRecord, DEFAULT_TOL,
};
use crate::noise::DecoherenceParams;
use crate::rindler::{Acceleration, Entanglement};
use crate::Player;

/// Header of the CSV row schema.
pub const CSV_HEADER: &str = "gamma,r,p1,p2,alpha_A,theta_A,alpha_B,theta_B,payoff_A,payoff_B";

/// Header of the `validate` summary schema.
pub const VALIDATE_HEADER: &str = "case,points,max_abs_deviation,tolerance,status,gamma,r,p1,p2,\
alpha_A,theta_A,alpha_B,theta_B,engine_A,engine_B,closed_A,closed_B";

#[derive(Parser, Debug)]
#[command(
    name = "qpd",
    version,
    about = "Quantum Prisoner's Dilemma in a noninertial frame with amplitude damping: \
payoffs, tables, sweeps, closed-form validation, equilibrium analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one game and print a single CSV row
    Payoff(PayoffCmd),
    /// Print the full payoff table over a strategy set as CSV
    Table(TableCmd),
    /// Stream a parameter sweep as CSV rows
    Sweep(SweepCmd),
    /// Cross-validate the engine against the closed-form payoffs
    Validate(ValidateCmd),
    /// Nash / Pareto / dominance report as JSON
    Equilibria(EquilibriaCmd),
}

#[derive(Args, Debug, Clone)]
struct GameParams {
    /// Entanglement gamma in radians, in [0, pi/2]
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    gamma: String,
    /// Acceleration parameter r in radians, in [0, pi/4]
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    r: String,
    /// Symmetric decoherence in [0, 1]; sets both p1 and p2
    #[arg(long, conflicts_with_all = ["p1", "p2"])]
    p: Option<f64>,
    /// Alice's decoherence parameter in [0, 1]
    #[arg(long)]
    p1: Option<f64>,
    /// Bob's decoherence parameter in [0, 1]
    #[arg(long)]
    p2: Option<f64>,
}

impl GameParams {
    fn config(&self) -> Result<GameConfig, String> {
        let gamma = parse_angle(&self.gamma)
            .and_then(|g| Entanglement::new(snap(g, 0.0, FRAC_PI_2)).map_err(|e| e.to_string()))
            .map_err(|e| format!("--gamma: {e}"))?;
        let acceleration = parse_angle(&self.r)
            .and_then(|r| {
                Acceleration::new(snap(r, 0.0, std::f64::consts::FRAC_PI_4))
                    .map_err(|e| e.to_string())
            })
            .map_err(|e| format!("--r: {e}"))?;
        let noise = match (self.p, self.p1, self.p2) {
            (Some(p), _, _) => {
                DecoherenceParams::symmetric(snap(p, 0.0, 1.0)).map_err(|e| format!("--p: {e}"))?
            }
            (None, p1, p2) => DecoherenceParams::new(
                snap(p1.unwrap_or(0.0), 0.0, 1.0),
                snap(p2.unwrap_or(0.0), 0.0, 1.0),
            )
            .map_err(|e| format!("--p1/--p2: {e}"))?,
        };
        Ok(GameConfig {
            gamma,
            acceleration,
            noise,
            payoffs: PayoffTable::default(),
        })
    }
}

/// Command-line numbers are often typed as short decimal approximations of
/// pi fractions (0.7853982 for pi/4), which can land a hair outside a
/// closed parameter range. Values within 1e-6 of a boundary snap onto it;
/// anything farther out stays as is and fails range validation.
fn snap(value: f64, lo: f64, hi: f64) -> f64 {
    if value < lo && lo - value < 1e-6 {
        lo
    } else if value > hi && value - hi < 1e-6 {
        hi
    } else {
        value
    }
}

#[derive(Args, Debug, Clone)]
struct OutputArg {
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutputArg {
    fn writer(&self) -> Result<Box<dyn Write>, String> {
        match &self.out {
            Some(path) => File::create(path)
                .map(|f| Box::new(BufWriter::new(f)) as Box<dyn Write>)
                .map_err(|e| format!("--out: cannot create {}: {e}", path.display())),
            None => Ok(Box::new(BufWriter::new(io::stdout()))),
        }
    }
}

#[derive(Args, Debug)]
struct PayoffCmd {
    #[command(flatten)]
    params: GameParams,
    /// Alice's strategy: C|D|Q|M or "alpha,theta"
    #[arg(long, default_value = "C", allow_hyphen_values = true)]
    alice: String,
    /// Bob's strategy: C|D|Q|M or "alpha,theta"
    #[arg(long, default_value = "C", allow_hyphen_values = true)]
    bob: String,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args, Debug)]
struct TableCmd {
    #[command(flatten)]
    params: GameParams,
    /// Comma-separated strategy names from {C, D, Q, M}
    #[arg(long, default_value = "C,D")]
    set: String,
    /// Append closed-form payoff columns (needs gamma 0 or pi/2 and a set within {C, D})
    #[arg(long)]
    closed_form: bool,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args, Debug)]
struct SweepCmd {
    #[command(flatten)]
    params: GameParams,
    /// Sweep axis "name=start:stop:steps", name in {p, p1, p2, r, gamma, thetaB, alphaB}; at most two
    #[arg(long = "axis")]
    axes: Vec<String>,
    /// Preset sweep: 1 (classical profiles over p x r), 2 (over p at r = pi/4),
    /// 3 (miracle move over p x thetaB at r = pi/6)
    #[arg(long, conflicts_with = "axes")]
    figure: Option<u8>,
    /// Alice's strategy for custom sweeps
    #[arg(long, default_value = "C", allow_hyphen_values = true)]
    alice: String,
    /// Bob's strategy for custom sweeps
    #[arg(long, default_value = "C", allow_hyphen_values = true)]
    bob: String,
    /// Sweep every profile pair from this strategy-name set instead of --alice/--bob
    #[arg(long, conflicts_with_all = ["alice", "bob"])]
    set: Option<String>,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args, Debug)]
struct ValidateCmd {
    /// Validation case: table2 | e12 | e14 | e16 | all
    #[arg(long, default_value = "all")]
    case: String,
    /// Agreement tolerance on |engine - closed form|
    #[arg(long, default_value_t = closedform::CROSS_VALIDATION_TOL)]
    tol: f64,
    /// Grid override "name=value" or "name=start:stop:steps", name in {p, p1, p2, r, thetaB, alphaB}
    #[arg(long = "grid")]
    grid: Vec<String>,
    #[command(flatten)]
    output: OutputArg,
}

#[derive(Args, Debug)]
struct EquilibriaCmd {
    #[command(flatten)]
    params: GameParams,
    /// Comma-separated strategy names from {C, D, Q, M}
    #[arg(long, default_value = "C,D")]
    set: String,
    #[command(flatten)]
    output: OutputArg,
}

/// Parses the command line from the process environment, runs the requested
/// subcommand and returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Payoff(cmd) => cmd_payoff(cmd),
        Command::Table(cmd) => cmd_table(cmd),
        Command::Sweep(cmd) => cmd_sweep(cmd),
        Command::Validate(cmd) => cmd_validate(cmd),
        Command::Equilibria(cmd) => cmd_equilibria(cmd),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn cmd_payoff(cmd: PayoffCmd) -> Result<i32, String> {
    let config = cmd.params.config()?;
    let (_, alice) = parse_strategy(&cmd.alice).map_err(|e| format!("--alice: {e}"))?;
    let (_, bob) = parse_strategy(&cmd.bob).map_err(|e| format!("--bob: {e}"))?;
    let pay = engine::play(&config, &alice, &bob).map_err(|e| e.to_string())?;
    let mut w = cmd.output.writer()?;
    emit(&mut w, CSV_HEADER)?;
    emit(&mut w, &config_row(&config, &alice, &bob, &pay))?;
    finish(w)
}

fn cmd_table(cmd: TableCmd) -> Result<i32, String> {
    let config = cmd.params.config()?;
    let set = parse_strategy_set(&cmd.set)?;
    let mut w = cmd.output.writer()?;
    if cmd.closed_form {
        emit(&mut w, &format!("{CSV_HEADER},cf_payoff_A,cf_payoff_B"))?;
    } else {
        emit(&mut w, CSV_HEADER)?;
    }
    for a in &set {
        for b in &set {
            let pay = engine::play(&config, &a.strategy, &b.strategy).map_err(|e| e.to_string())?;
            let mut row = config_row(&config, &a.strategy, &b.strategy, &pay);
            if cmd.closed_form {
                let cf = closed_form_for(&config, &a.strategy, &b.strategy)?;
                row.push_str(&format!(",{},{}", fmt_f64(cf.alice), fmt_f64(cf.bob)));
            }
            emit(&mut w, &row)?;
        }
    }
    finish(w)
}

fn cmd_sweep(cmd: SweepCmd) -> Result<i32, String> {
    let (config, grid) = if let Some(figure) = cmd.figure {
        equilibria::figure_preset(figure).map_err(|e| format!("--figure: {e}"))?
    } else {
        let config = cmd.params.config()?;
        if cmd.axes.len() > 2 {
            return Err("--axis: at most two axes are supported".into());
        }
        let axes = cmd
            .axes
            .iter()
            .map(|s| parse_axis(s))
            .collect::<Result<Vec<_>, _>>()?;
        let profiles = match &cmd.set {
            Some(set) => {
                let named = parse_strategy_set(set)?;
                named
                    .iter()
                    .flat_map(|a| named.iter().map(move |b| (a.clone(), b.clone())))
                    .collect()
            }
            None => {
                let (an, a) = parse_strategy(&cmd.alice).map_err(|e| format!("--alice: {e}"))?;
                let (bn, b) = parse_strategy(&cmd.bob).map_err(|e| format!("--bob: {e}"))?;
                vec![(NamedStrategy::new(an, a), NamedStrategy::new(bn, b))]
            }
        };
        let grid = SweepGrid::new(axes, profiles).map_err(|e| e.to_string())?;
        (config, grid)
    };

    let records = equilibria::sweep(&config, &grid).map_err(|e| e.to_string())?;
    if cmd.figure == Some(2) {
        // Informational only; stdout stays pure CSV.
        match equilibria::diagonal_profile_crossing(config.acceleration)
            .map_err(|e| e.to_string())?
        {
            Some(p) => eprintln!(
                "# same-move profiles pay below the mixed profiles for p > {}",
                fmt_f64(p)
            ),
            None => eprintln!("# same-move profiles stay competitive across p"),
        }
    }
    let mut w = cmd.output.writer()?;
    emit(&mut w, CSV_HEADER)?;
    for rec in &records {
        emit(&mut w, &record_row(rec))?;
    }
    finish(w)
}

fn cmd_validate(cmd: ValidateCmd) -> Result<i32, String> {
    if !(cmd.tol.is_finite() && cmd.tol > 0.0) {
        return Err(format!("--tol: must be a positive number, got {}", cmd.tol));
    }
    let cases = match cmd.case.trim().to_ascii_lowercase().as_str() {
        "table2" => vec![ClosedFormCase::Unentangled],
        "e12" => vec![ClosedFormCase::EntangledClassical],
        "e14" => vec![ClosedFormCase::AliceQ],
        "e16" => vec![ClosedFormCase::AliceMiracle],
        "all" => ClosedFormCase::ALL.to_vec(),
        other => {
            return Err(format!(
                "--case: unknown case '{other}' (expected table2, e12, e14, e16 or all)"
            ))
        }
    };
    let mut w = cmd.output.writer()?;
    emit(&mut w, VALIDATE_HEADER)?;
    let mut all_passed = true;
    for case in cases {
        let mut grid = ValidationGrid::default_for(case);
        for spec in &cmd.grid {
            apply_grid_override(&mut grid, spec)?;
        }
        let report = closedform::cross_validate(case, &grid, cmd.tol).map_err(|e| e.to_string())?;
        all_passed &= report.passed();
        let worst = report.worst.as_ref().expect("grid was nonempty");
        emit(
            &mut w,
            &format!(
                "{},{},{:e},{:e},{},{}",
                cli_case_name(case),
                report.points,
                report.max_abs_deviation,
                report.tolerance,
                if report.passed() { "pass" } else { "fail" },
                worst_columns(worst)
            ),
        )?;
    }
    finish(w)?;
    Ok(if all_passed { 0 } else { 1 })
}

fn cmd_equilibria(cmd: EquilibriaCmd) -> Result<i32, String> {
    let config = cmd.params.config()?;
    let set = parse_strategy_set(&cmd.set)?;
    let game = FiniteGame::from_play(&config, set).map_err(|e| e.to_string())?;
    let tol = DEFAULT_TOL;

    let nash = equilibria::nash_equilibria(&game, tol);
    let pareto = equilibria::pareto_optimal(&game, tol);
    let dominant_alice = equilibria::dominant_strategy(&game, Player::Alice, tol);
    let dominant_bob = equilibria::dominant_strategy(&game, Player::Bob, tol);

    let label = |i: usize| game.strategies()[i].name.clone();
    let profiles_json = |set: &[(usize, usize)]| -> Vec<serde_json::Value> {
        set.iter()
            .map(|&(i, j)| {
                let pay = game.payoff(i, j);
                serde_json::json!({
                    "alice": label(i),
                    "bob": label(j),
                    "payoffs": [pay.alice, pay.bob],
                })
            })
            .collect()
    };

    let report = serde_json::json!({
        "gamma": config.gamma.gamma(),
        "r": config.acceleration.r(),
        "p1": config.noise.p1(),
        "p2": config.noise.p2(),
        "tolerance": tol,
        "strategies": game.strategies().iter().map(|s| s.name.clone()).collect::<Vec<_>>(),
        "payoffs": game
            .payoffs()
            .iter()
            .map(|row| row.iter().map(|p| vec![p.alice, p.bob]).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "nash": profiles_json(&nash),
        "pareto_optimal": profiles_json(&pareto),
        "dominant": {
            "alice": dominant_alice.map(label),
            "bob": dominant_bob.map(label),
        },
    });

    let mut w = cmd.output.writer()?;
    emit(
        &mut w,
        &serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?,
    )?;
    finish(w)
}

fn emit(w: &mut Box<dyn Write>, line: &str) -> Result<(), String> {
    writeln!(w, "{line}").map_err(|e| format!("write failed: {e}"))
}

fn finish(mut w: Box<dyn Write>) -> Result<i32, String> {
    w.flush().map_err(|e| format!("write failed: {e}"))?;
    Ok(0)
}

fn config_row(config: &GameConfig, alice: &Strategy, bob: &Strategy, pay: &PayoffPair) -> String {
    csv_row(
        config.gamma.gamma(),
        config.acceleration.r(),
        config.noise.p1(),
        config.noise.p2(),
        alice,
        bob,
        pay,
    )
}

fn record_row(rec: &SweepRecord) -> String {
    csv_row(
        rec.gamma,
        rec.r,
        rec.p1,
        rec.p2,
        &rec.alice,
        &rec.bob,
        &rec.payoffs,
    )
}

fn csv_row(
    gamma: f64,
    r: f64,
    p1: f64,
    p2: f64,
    alice: &Strategy,
    bob: &Strategy,
    pay: &PayoffPair,
) -> String {
    [
        gamma,
        r,
        p1,
        p2,
        alice.alpha(),
        alice.theta(),
        bob.alpha(),
        bob.theta(),
        pay.alice,
        pay.bob,
    ]
    .iter()
    .map(|&x| fmt_f64(x))
    .collect::<Vec<_>>()
    .join(",")
}

fn worst_columns(p: &DeviationPoint) -> String {
    format!(
        "{},{},{}",
        csv_row(p.gamma, p.r, p.p1, p.p2, &p.alice, &p.bob, &p.engine),
        fmt_f64(p.closed.alice),
        fmt_f64(p.closed.bob)
    )
}

fn cli_case_name(case: ClosedFormCase) -> &'static str {
    match case {
        ClosedFormCase::Unentangled => "table2",
        ClosedFormCase::EntangledClassical => "e12",
        ClosedFormCase::AliceQ => "e14",
        ClosedFormCase::AliceMiracle => "e16",
    }
}

/// Renders a float with 15 significant digits and trimmed trailing zeros,
/// so clean values print clean ("3", "2.25", "0.5") and every value
/// round-trips well inside the crate's tolerances. Magnitudes below 1e-13
/// are rounding dust at this engine's precision and render as "0".
/// Deterministic.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 || x.abs() < 1e-13 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (14 - exp).clamp(0, 17) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Parses an angle in radians: decimals or pi fractions like `pi`, `pi/4`,
/// `-pi/2`, `3pi/4`, `0.5pi`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty angle".into());
    }
    if let Some(idx) = t.find("pi") {
        let coefficient = match t[..idx].trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse::<f64>()
                .map_err(|_| format!("bad angle '{s}'"))?,
        };
        let rest = t[idx + 2..].trim();
        let denominator = if rest.is_empty() {
            1.0
        } else if let Some(d) = rest.strip_prefix('/') {
            let d: f64 = d.trim().parse().map_err(|_| format!("bad angle '{s}'"))?;
            if d == 0.0 {
                return Err(format!("bad angle '{s}': division by zero"));
            }
            d
        } else {
            return Err(format!("bad angle '{s}'"));
        };
        Ok(coefficient * PI / denominator)
    } else {
        t.parse::<f64>().map_err(|_| format!("bad angle '{s}'"))
    }
}

/// Parses a strategy specifier: a name (C, D, Q, M) or an "alpha,theta" pair.
/// Returns the display label and the strategy.
pub fn parse_strategy(s: &str) -> Result<(String, Strategy), String> {
    if let Some(strategy) = Strategy::from_name(s) {
        return Ok((s.trim().to_ascii_uppercase(), strategy));
    }
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!(
            "strategy must be one of C, D, Q, M or an \"alpha,theta\" pair, got '{s}'"
        ));
    }
    let alpha = snap(parse_angle(parts[0])?, -PI, PI);
    let theta = snap(parse_angle(parts[1])?, 0.0, PI);
    let strategy = Strategy::new(alpha, theta).map_err(|e| e.to_string())?;
    Ok((
        format!("U({},{})", fmt_f64(alpha), fmt_f64(theta)),
        strategy,
    ))
}

fn parse_strategy_set(s: &str) -> Result<Vec<NamedStrategy>, String> {
    let mut out = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        let strategy = Strategy::from_name(token)
            .ok_or_else(|| format!("--set: entries must be from {{C, D, Q, M}}, got '{token}'"))?;
        out.push(NamedStrategy::new(token.to_ascii_uppercase(), strategy));
    }
    if out.is_empty() {
        return Err("--set: must name at least one strategy".into());
    }
    Ok(out)
}

fn parse_axis(s: &str) -> Result<SweepAxis, String> {
    let (name, spec) = s
        .split_once('=')
        .ok_or_else(|| format!("--axis must look like name=start:stop:steps, got '{s}'"))?;
    let param = SweepParam::from_name(name).ok_or_else(|| {
        format!(
            "--axis: unknown parameter '{name}' (expected p, p1, p2, r, gamma, thetaB or alphaB)"
        )
    })?;
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!(
            "--axis {name}: expected start:stop:steps, got '{spec}'"
        ));
    }
    let (lo, hi) = param.legal_range();
    let start = snap(
        parse_angle(parts[0]).map_err(|e| format!("--axis {name}: {e}"))?,
        lo,
        hi,
    );
    let stop = snap(
        parse_angle(parts[1]).map_err(|e| format!("--axis {name}: {e}"))?,
        lo,
        hi,
    );
    let steps: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| format!("--axis {name}: bad step count '{}'", parts[2]))?;
    SweepAxis::new(param, start, stop, steps).map_err(|e| e.to_string())
}

fn apply_grid_override(grid: &mut ValidationGrid, spec: &str) -> Result<(), String> {
    let (name, rest) = spec.split_once('=').ok_or_else(|| {
        format!("--grid must look like name=value or name=start:stop:steps, got '{spec}'")
    })?;
    let param = SweepParam::from_name(name)
        .filter(|p| !matches!(p, SweepParam::Gamma))
        .ok_or_else(|| {
            format!("--grid: unknown parameter '{name}' (expected p, p1, p2, r, thetaB or alphaB)")
        })?;
    let (lo, hi) = param.legal_range();
    let values: Vec<f64> = if rest.contains(':') {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("--grid {name}: expected start:stop:steps"));
        }
        let start = snap(
            parse_angle(parts[0]).map_err(|e| format!("--grid {name}: {e}"))?,
            lo,
            hi,
        );
        let stop = snap(
            parse_angle(parts[1]).map_err(|e| format!("--grid {name}: {e}"))?,
            lo,
            hi,
        );
        let steps: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| format!("--grid {name}: bad step count '{}'", parts[2]))?;
        if steps == 0 {
            return Err(format!("--grid {name}: needs at least one step"));
        }
        closedform::linspace(start, stop, steps)
    } else {
        vec![snap(
            parse_angle(rest).map_err(|e| format!("--grid {name}: {e}"))?,
            lo,
            hi,
        )]
    };
    if values.iter().any(|v| !v.is_finite() || *v < lo || *v > hi) {
        return Err(format!("--grid {name}: values must lie in [{lo}, {hi}]"));
    }
    match param {
        SweepParam::P => grid.p = values,
        SweepParam::P1 => grid.p1 = values,
        SweepParam::P2 => grid.p2 = values,
        SweepParam::R => grid.r = values,
        SweepParam::ThetaB => grid.theta_b = values,
        SweepParam::AlphaB => grid.alpha_b = values,
        SweepParam::Gamma => unreachable!("filtered above"),
    }
    Ok(())
}

fn closed_form_for(
    config: &GameConfig,
    alice: &Strategy,
    bob: &Strategy,
) -> Result<PayoffPair, String> {
    let profile = classical_profile_of(alice, bob).ok_or_else(|| {
        "--closed-form: comparison is only defined for strategies from {C, D}".to_string()
    })?;
    let gamma = config.gamma.gamma();
    if gamma.abs() < 1e-15 {
        closedform::unentangled_payoff(profile, config.noise.p2(), config.acceleration)
            .map_err(|e| e.to_string())
    } else if (gamma - FRAC_PI_2).abs() < 1e-15 {
        closedform::entangled_classical_payoff(
            profile,
            config.noise.p1(),
            config.noise.p2(),
            config.acceleration,
        )
        .map_err(|e| e.to_string())
    } else {
        Err("--closed-form: requires --gamma 0 or pi/2".into())
    }
}

fn classical_profile_of(alice: &Strategy, bob: &Strategy) -> Option<ClassicalProfile> {
    let as_classical = |s: &Strategy| {
        if *s == Strategy::COOPERATE {
            Some(true)
        } else if *s == Strategy::DEFECT {
            Some(false)
        } else {
            None
        }
    };
    Some(match (as_classical(alice)?, as_classical(bob)?) {
        (true, true) => ClassicalProfile::CC,
        (true, false) => ClassicalProfile::CD,
        (false, true) => ClassicalProfile::DC,
        (false, false) => ClassicalProfile::DD,
    })
}
