//! Samples the corrected-signature step function of the trefoil over
//! `x in [0, 1]` and prints the profile as CSV with jump brackets.
//!
//! Run with: `cargo run --example signature_profile`

use regionsig::corpus::find_entry;
use regionsig::reduce::{profile_to_csv, signature_profile};

fn main() {
    let entry = find_entry("trefoil-rh").expect("corpus");
    let amp = entry.reference_amplitude().expect("amplitude");
    let profile = signature_profile(&amp, 51).expect("profile");
    print!("{}", profile_to_csv(&profile));
    eprintln!(
        "\n{} samples, {} jump bracket(s)",
        profile.samples.len(),
        profile.jump_brackets.len()
    );
}
