//! Generate the three bundled payoff-surface data sets as CSV files
//! (the same grids the `qpd sweep --figure 1|2|3` presets emit).
//! See docs/plotting.md at the repository root for plotting recipes.
//!
//! ```bash
//! cargo run --example figure_sweeps
//! ```

use std::fs::File;
use std::io::{BufWriter, Write};

use qpd::cli::{fmt_f64, CSV_HEADER};
use qpd::equilibria::{self, SweepRecord};

fn write_csv(path: &str, records: &[SweepRecord]) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{CSV_HEADER}")?;
    for rec in records {
        let cols = [
            rec.gamma,
            rec.r,
            rec.p1,
            rec.p2,
            rec.alice.alpha(),
            rec.alice.theta(),
            rec.bob.alpha(),
            rec.bob.theta(),
            rec.payoffs.alice,
            rec.payoffs.bob,
        ];
        let row: Vec<String> = cols.iter().map(|&x| fmt_f64(x)).collect();
        writeln!(w, "{}", row.join(","))?;
    }
    w.flush()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for figure in 1..=3u8 {
        let (config, grid) = equilibria::figure_preset(figure)?;
        let records = equilibria::sweep(&config, &grid)?;
        let path = format!("figure{figure}.csv");
        write_csv(&path, &records)?;
        println!("wrote {path} ({} rows)", records.len());
    }
    let crossing = equilibria::diagonal_profile_crossing(qpd::rindler::Acceleration::LIMIT)?
        .expect("crossing exists at the acceleration limit");
    println!(
        "figure2.csv note: same-move profiles drop below the mixed ones for p > {crossing:.4}"
    );
    Ok(())
}
