//! Compares the corrected signature with twice the Tristram-Levine
//! signature on a sample grid for each knot with stored Seifert data.
//!
//! Run with: `cargo run --example conjecture_table`

use regionsig::corpus::find_entry;
use regionsig::tlsig::{conjecture_table, conjecture_to_csv};

fn main() {
    for name in ["trefoil-rh", "fig8", "hopf-rh"] {
        let entry = find_entry(name).expect("corpus");
        let rows = conjecture_table(&entry, 12).expect("table");
        let mismatches = rows.iter().filter(|r| !r.matches).count();
        println!("== {name} ({} samples, {mismatches} mismatches)", rows.len());
        print!("{}", conjecture_to_csv(&rows));
        println!();
    }
}
