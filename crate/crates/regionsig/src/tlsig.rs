//! Independent Tristram–Levine signature oracle from stored Seifert
//! matrices, plus the conjecture comparison harness. This is the one
//! floating-point corner of the crate; everything it is compared against
//! is exact.

use crate::corpus::CorpusEntry;
use crate::exact::{ExactMatrix, PolyZ};
use crate::reduce::{final_pair, rational_to_f64, signature_profile};
use crate::{Error, Result};
use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;

/// An integer Seifert matrix for a named link.
#[derive(Clone, Debug)]
pub struct SeifertMatrix {
    pub link_name: String,
    pub v: ExactMatrix<BigInt>,
}

impl SeifertMatrix {
    pub fn new(link_name: &str, rows: Vec<Vec<i64>>) -> Self {
        let v = ExactMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
        .expect("rectangular Seifert matrix");
        assert_eq!(v.nrows(), v.ncols());
        SeifertMatrix {
            link_name: link_name.to_string(),
            v,
        }
    }

    /// `det(V - t V^T)` as a polynomial in `t`.
    pub fn alexander(&self) -> PolyZ {
        let n = self.v.nrows();
        // Entries are linear in t; reuse PolyZ as Z[t] and take the exact
        // determinant.
        let mut m = ExactMatrix::<PolyZ>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let a = self.v.get(i, j).clone();
                let b = -self.v.get(j, i).clone();
                m.set(i, j, PolyZ::from_coeffs(vec![a, b]));
            }
        }
        crate::reduce::det_poly(&m).expect("square")
    }
}

/// Strips unit factors `±t^k`: divides by the lowest power of `t` and makes
/// the leading coefficient positive.
pub fn normalize_alexander(p: &PolyZ) -> PolyZ {
    if p.is_zero() {
        return PolyZ::zero();
    }
    let low = (0..=p.degree().unwrap())
        .find(|&k| !num_traits::Zero::is_zero(&p.coeff(k)))
        .unwrap();
    let coeffs: Vec<BigInt> = (low..=p.degree().unwrap()).map(|k| p.coeff(k)).collect();
    let q = PolyZ::from_coeffs(coeffs);
    if num_traits::Signed::is_negative(q.leading().unwrap()) {
        q.neg()
    } else {
        q
    }
}

const ZERO_TOL: f64 = 1e-9;
const THETA_TOL: f64 = 1e-6;

/// Signature of the Hermitian form `(1-w)V + (1-conj(w))V^T` at
/// `w = exp(i*theta)`; eigenvalues below `1e-9` times the matrix norm count
/// as zero.
pub fn tl_signature(seifert: &SeifertMatrix, theta: f64) -> Result<i64> {
    if !(THETA_TOL..=2.0 * std::f64::consts::PI - THETA_TOL).contains(&theta) {
        return Err(Error::DegenerateTheta(theta));
    }
    let n = seifert.v.nrows();
    if n == 0 {
        return Ok(0);
    }
    let omega = Complex::new(theta.cos(), theta.sin());
    let a = Complex::new(1.0, 0.0) - omega;
    let b = a.conj();
    let mut h = DMatrix::<Complex<f64>>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let vij = bigint_to_f64(seifert.v.get(i, j));
            let vji = bigint_to_f64(seifert.v.get(j, i));
            h[(i, j)] = a * vij + b * vji;
        }
    }
    let norm = h.norm();
    if norm == 0.0 {
        return Ok(0);
    }
    let eigen = h.symmetric_eigenvalues();
    let mut sig = 0i64;
    for lambda in eigen.iter() {
        if lambda.abs() < ZERO_TOL * norm {
            continue;
        }
        sig += if *lambda > 0.0 { 1 } else { -1 };
    }
    Ok(sig)
}

fn bigint_to_f64(v: &BigInt) -> f64 {
    v.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

/// One grid-point comparison of the corrected signature against twice the
/// Tristram–Levine signature.
#[derive(Clone, Debug)]
pub struct ConjectureRow {
    pub theta: f64,
    pub x: BigRational,
    pub sig_corr: i64,
    pub two_sigma_tl: i64,
    pub matches: bool,
}

/// Samples `x` in `(0, 1)`, evaluates the exact corrected signature of the
/// entry's first diagram and twice the oracle signature at
/// `theta = 2*arccos(x)`, skipping samples inside determinant-jump
/// brackets.
pub fn conjecture_table(entry: &CorpusEntry, n_samples: usize) -> Result<Vec<ConjectureRow>> {
    let seifert = entry
        .seifert
        .as_ref()
        .ok_or_else(|| Error::MissingSeifert(entry.link_name.to_string()))?;
    let diagram = entry
        .diagrams
        .first()
        .ok_or_else(|| Error::Corpus(format!("{} has no diagrams", entry.link_name)))?;
    let amp = crate::amplitude::amplitude(&diagram.parsed.region_map()?);
    // Bracket the jumps on a grid at least as fine as the sample grid.
    let profile = signature_profile(&amp, (n_samples + 2).max(51))?;
    let mut rows = Vec::with_capacity(n_samples);
    for j in 1..=n_samples {
        let x = crate::exact::rational(j as i64, (n_samples + 1) as i64);
        if profile.in_bracket(&x) {
            continue;
        }
        let theta = 2.0 * rational_to_f64(&x).clamp(-1.0, 1.0).acos();
        let sig_corr = final_pair(&amp, &x)?.sig_corr();
        let two_sigma_tl = 2 * tl_signature(seifert, theta)?;
        rows.push(ConjectureRow {
            theta,
            x,
            sig_corr,
            two_sigma_tl,
            matches: sig_corr == two_sigma_tl,
        });
    }
    Ok(rows)
}

/// Table CSV: `theta,x_num,x_den,sig_corr,two_sigma_tl,match`.
pub fn conjecture_to_csv(rows: &[ConjectureRow]) -> String {
    let mut out = String::from("theta,x_num,x_den,sig_corr,two_sigma_tl,match\n");
    for r in rows {
        out.push_str(&format!(
            "{:.6},{},{},{},{},{}\n",
            r.theta,
            r.x.numer(),
            r.x.denom(),
            r.sig_corr,
            r.two_sigma_tl,
            r.matches
        ));
    }
    out
}
