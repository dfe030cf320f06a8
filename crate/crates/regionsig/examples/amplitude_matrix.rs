//! Computes the region amplitude matrix of a built-in diagram and renders
//! it in the three supported output formats.
//!
//! Run with: `cargo run --example amplitude_matrix`

use regionsig::amplitude::{matrix_to_csv, matrix_to_json, matrix_to_latex};
use regionsig::corpus::find_entry;

fn main() {
    let entry = find_entry("trefoil-rh").expect("corpus");
    let amp = entry.reference_amplitude().expect("amplitude");

    println!(
        "trefoil amplitude: {} regions, crossings (+{}, -{})",
        amp.n_regions(),
        amp.c_plus,
        amp.c_minus
    );
    println!("\nCSV:\n{}", matrix_to_csv(&amp.matrix));
    println!("LaTeX:\n{}", matrix_to_latex(&amp.matrix));
    println!("JSON:\n{}", matrix_to_json(&amp.matrix));
}
