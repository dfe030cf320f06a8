//! Reduces every corpus link at one exact rational point and prints the
//! inertia, the stripped pair, and the corrected signature.
//!
//! Run with: `cargo run --example invariant_at_point`

use regionsig::corpus::load_corpus;
use regionsig::exact::rational;
use regionsig::reduce::{final_pair, inertia_at};

fn main() {
    let x0 = rational(0, 1);
    println!("evaluation point x = {x0}\n");
    println!("{:<12} {:>2} {:>2} {:>2}  final      sig_corr", "link", "p", "q", "z");
    for entry in load_corpus().expect("corpus") {
        let amp = entry.reference_amplitude().expect("amplitude");
        let inertia = inertia_at(&amp.matrix, &x0).expect("inertia");
        let fp = final_pair(&amp, &x0).expect("final pair");
        println!(
            "{:<12} {:>2} {:>2} {:>2}  ({:>2},{:>2})    {:>3}",
            entry.link_name,
            inertia.p,
            inertia.q,
            inertia.z,
            fp.a,
            fp.b,
            fp.sig_corr()
        );
    }
}
