//! Tour of the calculus on maps of finite index sets: pull-back,
//! push-forward, the adjunction between them, and compatible vectors.
//!
//! Run with: `cargo run --example pushforward_calculus`

use regionsig::exact::{dot, ExactMatrix, FiniteMap, PolyZ};

fn ints(vals: &[i64]) -> Vec<PolyZ> {
    vals.iter().map(|&v| PolyZ::constant(v)).collect()
}

fn main() {
    // p: 3 -> 2 collapsing the first two indices.
    let p = FiniteMap::new(2, vec![0, 0, 1]).expect("map");

    let u = ints(&[5, 7]);
    println!("pull-back of (5,7):      {:?}", p.pull_back(&u).unwrap());

    let v = ints(&[1, 2, 3]);
    println!("push-forward of (1,2,3): {:?}", p.push_forward_vec(&v).unwrap());

    // <p_*(v), u> = <v, p^*(u)>
    let lhs = dot(&p.push_forward_vec(&v).unwrap(), &u);
    let rhs = dot(&v, &p.pull_back(&u).unwrap());
    println!("adjunction: {lhs} == {rhs}");

    // Compatibility: constant vectors on collapsed fibres fail, vectors
    // vanishing there succeed.
    println!(
        "(1,1,4) compatible: {}",
        p.is_compatible(&ints(&[1, 1, 4])).unwrap()
    );
    println!(
        "(0,0,4) compatible: {}",
        p.is_compatible(&ints(&[0, 0, 4])).unwrap()
    );

    // Matrix push-forward sums fibres of rows and columns.
    let a = ExactMatrix::from_rows(vec![ints(&[1, 2, 0]), ints(&[2, 5, 1]), ints(&[0, 1, 9])])
        .expect("matrix");
    println!("glued matrix: {:?}", p.push_forward_sym(&a).unwrap());
}
