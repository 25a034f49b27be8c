//! Cross-validate the density-matrix engine against every closed-form
//! payoff family on the default grids and print one report per case.
//!
//! ```bash
//! cargo run --example closed_form_check
//! ```

use qpd::closedform::{self, ClosedFormCase, ValidationGrid, CROSS_VALIDATION_TOL};

fn main() -> qpd::Result<()> {
    println!("engine vs closed forms (tolerance {CROSS_VALIDATION_TOL:.1e}):");
    for case in ClosedFormCase::ALL {
        let grid = ValidationGrid::default_for(case);
        let report = closedform::cross_validate(case, &grid, CROSS_VALIDATION_TOL)?;
        let status = if report.passed() { "pass" } else { "FAIL" };
        println!(
            "  {:<22} {:>4} points   max |dev| = {:.3e}   {status}",
            report.case.name(),
            report.points,
            report.max_abs_deviation
        );
        if let Some(worst) = &report.worst {
            println!(
                "      worst at gamma={:.3} r={:.3} p1={:.2} p2={:.2}: engine ({:.6}, {:.6}) vs closed ({:.6}, {:.6})",
                worst.gamma,
                worst.r,
                worst.p1,
                worst.p2,
                worst.engine.alice,
                worst.engine.bob,
                worst.closed.alice,
                worst.closed.bob
            );
        }
    }
    Ok(())
}
