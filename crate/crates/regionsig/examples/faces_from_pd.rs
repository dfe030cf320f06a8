//! Parses a PD code, derives crossing signs from the orientations,
//! extracts the regions, and two-colours them.
//!
//! Run with: `cargo run --example faces_from_pd`

use regionsig::diagram::{checkerboard, crossing_counts, extract_regions, parse_pd};

fn main() {
    let text = r#"{
        "name": "trefoil-rh-pd",
        "format": "pd",
        "pd": [[1, 5, 2, 4], [5, 3, 6, 2], [3, 1, 4, 6]]
    }"#;
    let diagram = parse_pd(text).expect("parse");
    println!("components: {:?}", diagram.components);
    println!("crossing counts (c+, c-): {:?}", crossing_counts(&diagram));

    let map = extract_regions(&diagram).expect("faces");
    println!("regions: {}", map.n_regions);
    for (i, c) in map.crossings.iter().enumerate() {
        println!(
            "  crossing {i}: sign {:+} quadrants {:?}",
            c.sign, c.quadrants
        );
    }

    let colors = checkerboard(&map).expect("two-colouring");
    println!("checkerboard colours: {:?}", colors.colors);
}
