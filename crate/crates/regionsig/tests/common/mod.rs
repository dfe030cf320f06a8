//! Shared test support: an eigenvalue-sign oracle independent of the
//! congruence reduction, plus deterministic random generators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regionsig::exact::{ExactMatrix, PolyZ};
use regionsig::reduce::Inertia;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Characteristic polynomial of `det(lambda I - A)` by Faddeev-LeVerrier,
/// coefficients from the leading `lambda^n` term down.
fn charpoly(a: &ExactMatrix<BigRational>) -> Vec<BigRational> {
    let n = a.nrows();
    let mut coeffs = vec![BigRational::one()];
    let mut m = ExactMatrix::<BigRational>::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = a.mul(&m);
        let c_prev = coeffs.last().unwrap().clone();
        for i in 0..n {
            let v = next.get(i, i) + &c_prev;
            next.set(i, i, v);
        }
        let am = a.mul(&next);
        let mut tr = BigRational::zero();
        for i in 0..n {
            tr += am.get(i, i);
        }
        coeffs.push(-tr / BigRational::from_integer(BigInt::from(k)));
        m = next;
    }
    coeffs
}

fn sign_changes(seq: &[BigRational]) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for v in seq {
        if v.is_zero() {
            continue;
        }
        let s = if v.is_positive() { 1 } else { -1 };
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Inertia by root-sign counting on the characteristic polynomial: the
/// nullity is the multiplicity of the zero root, and because a symmetric
/// matrix has only real eigenvalues, Descartes' rule counts the positive
/// and negative roots exactly (with multiplicity).
pub fn oracle_inertia(a: &ExactMatrix<BigRational>) -> Inertia {
    let n = a.nrows();
    let mut coeffs = charpoly(a); // lambda^n .. constant
    let mut z = 0usize;
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
        z += 1;
    }
    let p = sign_changes(&coeffs);
    let neg: Vec<BigRational> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            // coeffs[i] multiplies lambda^(n-z-i); substitute -lambda.
            if (n - z - i) % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            }
        })
        .collect();
    let q = sign_changes(&neg);
    assert_eq!(p + q + z, n, "all eigenvalues of a symmetric matrix are real");
    Inertia { p, q, z }
}

/// Uniform random rational in (0, 1) with a small denominator.
pub fn random_unit_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let den = rng.gen_range(7..200i64);
    let num = rng.gen_range(1..den);
    regionsig::exact::rational(num, den)
}

/// Random small integer polynomial.
pub fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize, bound: i64) -> PolyZ {
    let deg = rng.gen_range(0..=max_degree);
    let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    PolyZ::from_ints(&coeffs)
}

/// Random invertible integer matrix built from elementary operations.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> ExactMatrix<PolyZ> {
    let mut m = ExactMatrix::<PolyZ>::identity(n);
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 => {
                // row_i += c * row_j
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                if i == j {
                    j = (j + 1) % n;
                }
                if n == 1 {
                    continue;
                }
                let c = PolyZ::constant(rng.gen_range(-2..=2i64));
                for k in 0..n {
                    let v = m.get(i, k).add(&c.mul(m.get(j, k)));
                    m.set(i, k, v);
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                if i != j {
                    for k in 0..n {
                        let (a, b) = (m.get(i, k).clone(), m.get(j, k).clone());
                        m.set(i, k, b);
                        m.set(j, k, a);
                    }
                }
            }
            _ => {
                let i = rng.gen_range(0..n);
                for k in 0..n {
                    let v = m.get(i, k).neg();
                    m.set(i, k, v);
                }
            }
        }
    }
    m
}

/// Random map of finite sets with nonempty domain and image.
pub fn random_map(rng: &mut ChaCha8Rng, max_size: usize) -> regionsig::exact::FiniteMap {
    let dom = rng.gen_range(1..=max_size);
    let img = rng.gen_range(1..=max_size);
    let values: Vec<usize> = (0..dom).map(|_| rng.gen_range(0..img)).collect();
    regionsig::exact::FiniteMap::new(img, values).unwrap()
}

/// Random surjective map (every image point hit at least once).
pub fn random_surjection(rng: &mut ChaCha8Rng, max_size: usize) -> regionsig::exact::FiniteMap {
    let img = rng.gen_range(1..=max_size);
    let dom = rng.gen_range(img..=img + max_size);
    let mut values: Vec<usize> = (0..img).collect();
    for _ in img..dom {
        values.push(rng.gen_range(0..img));
    }
    // Shuffle by random transpositions.
    for i in (1..values.len()).rev() {
        let j = rng.gen_range(0..=i);
        values.swap(i, j);
    }
    regionsig::exact::FiniteMap::new(img, values).unwrap()
}
