//! Recompute every reference value and print the pass/fail table.

use rydberg_budget::reproduce::reproduce;

fn main() -> rydberg_budget::Result<()> {
    let report = reproduce()?;
    for e in &report.entries {
        println!(
            "{:>2} {} {:<72} {:>14.6e} {:>14.6e}",
            e.criterion,
            if e.pass { "ok  " } else { "FAIL" },
            e.label,
            e.computed,
            e.paper_value
        );
        if let Some(note) = &e.note {
            println!("        note: {note}");
        }
    }
    println!("overall: {}", if report.pass { "pass" } else { "FAIL" });
    if !report.pass {
        std::process::exit(3);
    }
    Ok(())
}
