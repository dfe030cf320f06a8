//! Congruence reduction at exact rational evaluation points: inertia, the
//! fully stripped invariant pair, determinant polynomials, and signature
//! profiles sampled over the unit-circle parametrisation.

use crate::amplitude::Amplitude;
use crate::exact::{ExactMatrix, PolyZ};
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Counts of positive, negative, and zero eigenvalue directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub p: usize,
    pub q: usize,
    pub z: usize,
}

/// The fully stripped value in `Z^2` left after reducing an evaluated
/// amplitude: `(p + z - c_plus, q + z - c_minus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinalPair {
    pub a: i64,
    pub b: i64,
}

impl FinalPair {
    /// `sig_corr = (p - q) - writhe`, the signature corrected by the writhe.
    pub fn sig_corr(&self) -> i64 {
        self.a - self.b
    }
}

/// A pair `(m, A)` with `m` in `Z^2` and `A` symmetric, the carrier of the
/// reduction bookkeeping.
#[derive(Clone, Debug)]
pub struct InvariantPair {
    pub m: (i64, i64),
    pub matrix: ExactMatrix<PolyZ>,
}

impl InvariantPair {
    /// The pair `(-m_D, M_D)` attached to a diagram's amplitude.
    pub fn from_amplitude(a: &Amplitude) -> Self {
        InvariantPair {
            m: (-a.c_plus, -a.c_minus),
            matrix: a.matrix.clone(),
        }
    }

    /// Evaluates, diagonalises by congruence, rescales to `±1/0` diagonal,
    /// and strips every one-by-one block with its `Z^2` bookkeeping.
    pub fn reduce_at(&self, x0: &BigRational) -> Result<(Inertia, FinalPair)> {
        let inertia = inertia_at(&self.matrix, x0)?;
        let final_pair = FinalPair {
            a: self.m.0 + (inertia.p + inertia.z) as i64,
            b: self.m.1 + (inertia.q + inertia.z) as i64,
        };
        Ok((inertia, final_pair))
    }
}

/// Exact inertia of a symmetric rational matrix by congruence reduction:
/// nonzero diagonal entries are used as rank-one pivots; when the live
/// diagonal is all zero, a nonzero off-diagonal entry spans a hyperbolic
/// two-by-two block contributing `(1, 1)`.
pub fn inertia_rational(m: &ExactMatrix<BigRational>) -> Result<Inertia> {
    if !m.is_symmetric() {
        return Err(Error::Size("inertia of a non-symmetric matrix".into()));
    }
    let n = m.nrows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut live: Vec<usize> = (0..n).collect();
    let (mut p, mut q) = (0usize, 0usize);

    loop {
        if live.is_empty() {
            break;
        }
        if let Some(&i) = live.iter().find(|&&i| !a[i][i].is_zero()) {
            let piv = a[i][i].clone();
            if piv.is_positive() {
                p += 1;
            } else {
                q += 1;
            }
            let others: Vec<usize> = live.iter().copied().filter(|&j| j != i).collect();
            for &r in &others {
                if a[r][i].is_zero() {
                    continue;
                }
                let f = &a[r][i] / &piv;
                for &c in &others {
                    let delta = &f * &a[i][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
            live.retain(|&j| j != i);
        } else if let Some((i, j)) = first_offdiag(&a, &live) {
            // Hyperbolic block [[0, h], [h, 0]]: eliminate the other rows
            // through the block inverse, count one plus and one minus.
            let h = a[i][j].clone();
            p += 1;
            q += 1;
            let others: Vec<usize> = live
                .iter()
                .copied()
                .filter(|&k| k != i && k != j)
                .collect();
            for &r in &others {
                let c1 = &a[r][j] / &h;
                let c2 = &a[r][i] / &h;
                if c1.is_zero() && c2.is_zero() {
                    continue;
                }
                // Because rows i and j have zero diagonal, subtracting
                // c1 row_i + c2 row_j from row_r (with the symmetric column
                // operation) reduces to this single symmetric pass.
                for &c in &others {
                    let delta = &c1 * &a[i][c] + &c2 * &a[j][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
            live.retain(|&k| k != i && k != j);
        } else {
            break;
        }
    }
    let z = live.len();
    Ok(Inertia { p, q, z })
}

fn first_offdiag(a: &[Vec<BigRational>], live: &[usize]) -> Option<(usize, usize)> {
    for (ii, &i) in live.iter().enumerate() {
        for &j in &live[ii + 1..] {
            if !a[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Inertia of a symmetric polynomial matrix evaluated exactly at `x0`.
pub fn inertia_at(m: &ExactMatrix<PolyZ>, x0: &BigRational) -> Result<Inertia> {
    inertia_rational(&m.eval(x0))
}

/// `(p + z - c_plus, q + z - c_minus)` at the evaluation point.
pub fn final_pair(a: &Amplitude, x0: &BigRational) -> Result<FinalPair> {
    Ok(InvariantPair::from_amplitude(a).reduce_at(x0)?.1)
}

/// Exact determinant by fraction-free (Bareiss) elimination over `Z[x]`.
pub fn det_poly(m: &ExactMatrix<PolyZ>) -> Result<PolyZ> {
    if m.nrows() != m.ncols() {
        return Err(Error::Size("determinant of a non-square matrix".into()));
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(PolyZ::one());
    }
    let mut a: Vec<Vec<PolyZ>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut sign = 1i64;
    let mut prev = PolyZ::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(PolyZ::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            a[i][k] = PolyZ::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if sign < 0 {
        det = det.neg();
    }
    Ok(det)
}

/// One evaluated sample of a signature profile.
#[derive(Clone, Debug)]
pub struct ProfileSample {
    pub x: BigRational,
    /// `2*arccos(x)`, for display only.
    pub theta: f64,
    pub inertia: Inertia,
    pub final_pair: FinalPair,
    pub sig_corr: i64,
}

/// Signature profile over uniformly sampled rational points of `[0, 1]`.
#[derive(Clone, Debug)]
pub struct SignatureProfile {
    pub samples: Vec<ProfileSample>,
    /// Open intervals bracketing the jumps: the inertia changes between the
    /// endpoints or the exact determinant changes sign across them.
    pub jump_brackets: Vec<(BigRational, BigRational)>,
}

impl SignatureProfile {
    /// True when `x` lies strictly inside some bracket.
    pub fn in_bracket(&self, x: &BigRational) -> bool {
        self.jump_brackets
            .iter()
            .any(|(lo, hi)| lo < x && x < hi)
    }
}

pub fn theta_of(x: &BigRational) -> f64 {
    let v = rational_to_f64(x).clamp(-1.0, 1.0);
    2.0 * v.acos()
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    let num = x.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let den = x.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    num / den
}

/// Samples `n_samples >= 2` uniform rational points of `[0, 1]`, computes
/// the exact inertia, final pair and corrected signature at each, and
/// brackets the jumps between consecutive samples.
pub fn signature_profile(a: &Amplitude, n_samples: usize) -> Result<SignatureProfile> {
    assert!(n_samples >= 2, "need at least two samples");
    let pair = InvariantPair::from_amplitude(a);
    let det = det_poly(&a.matrix)?;
    let mut samples = Vec::with_capacity(n_samples);
    let mut det_signs = Vec::with_capacity(n_samples);
    for j in 0..n_samples {
        let x = crate::exact::rational(j as i64, (n_samples - 1) as i64);
        let (inertia, final_pair) = pair.reduce_at(&x)?;
        det_signs.push(sign_of(&det.eval(&x)));
        samples.push(ProfileSample {
            theta: theta_of(&x),
            sig_corr: final_pair.sig_corr(),
            x,
            inertia,
            final_pair,
        });
    }
    let mut jump_brackets = Vec::new();
    for w in 0..n_samples - 1 {
        let inertia_changed = samples[w].inertia != samples[w + 1].inertia;
        let det_flipped = det_signs[w] * det_signs[w + 1] < 0;
        if inertia_changed || det_flipped {
            jump_brackets.push((samples[w].x.clone(), samples[w + 1].x.clone()));
        }
    }
    Ok(SignatureProfile {
        samples,
        jump_brackets,
    })
}

fn sign_of(v: &BigRational) -> i64 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Profile CSV: bracket comments first, then a header and one row per
/// sample.
pub fn profile_to_csv(p: &SignatureProfile) -> String {
    let mut out = String::new();
    for (lo, hi) in &p.jump_brackets {
        out.push_str(&format!("# jump in ({lo}, {hi})\n"));
    }
    out.push_str("x_num,x_den,theta_display,p,q,z,final_a,final_b,sig_corr\n");
    for s in &p.samples {
        out.push_str(&format!(
            "{},{},{:.6},{},{},{},{},{},{}\n",
            s.x.numer(),
            s.x.denom(),
            s.theta,
            s.inertia.p,
            s.inertia.q,
            s.inertia.z,
            s.final_pair.a,
            s.final_pair.b,
            s.sig_corr
        ));
    }
    out
}

/// Minimal SVG step plot of `sig_corr` against `theta`.
pub fn profile_to_svg(p: &SignatureProfile) -> String {
    let (w, h) = (640.0f64, 360.0f64);
    let margin = 40.0;
    let lo = p.samples.iter().map(|s| s.sig_corr).min().unwrap_or(0) - 1;
    let hi = p.samples.iter().map(|s| s.sig_corr).max().unwrap_or(0) + 1;
    let x_of = |theta: f64| margin + (w - 2.0 * margin) * (theta / std::f64::consts::PI);
    let y_of =
        |v: i64| h - margin - (h - 2.0 * margin) * ((v - lo) as f64) / ((hi - lo) as f64);
    let mut pts: Vec<(f64, f64)> = p
        .samples
        .iter()
        .map(|s| (x_of(s.theta), y_of(s.sig_corr)))
        .collect();
    pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut path = String::new();
    for (i, (x, y)) in pts.iter().enumerate() {
        if i == 0 {
            path.push_str(&format!("M {x:.2} {y:.2}"));
        } else {
            // Step: horizontal then vertical.
            path.push_str(&format!(" H {x:.2} V {y:.2}"));
        }
    }
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" ",
            "viewBox=\"0 0 {w} {h}\">\n",
            "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "<line x1=\"{m}\" y1=\"{ybase}\" x2=\"{xmax}\" y2=\"{ybase}\" stroke=\"black\"/>\n",
            "<line x1=\"{m}\" y1=\"{m}\" x2=\"{m}\" y2=\"{ybase}\" stroke=\"black\"/>\n",
            "<path d=\"{path}\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\"/>\n",
            "<text x=\"{xmax}\" y=\"{ylab}\" text-anchor=\"end\" font-size=\"12\">theta</text>\n",
            "<text x=\"{m}\" y=\"{m2}\" font-size=\"12\">sig_corr</text>\n",
            "</svg>\n"
        ),
        w = w,
        h = h,
        m = margin,
        m2 = margin - 8.0,
        ybase = h - margin,
        xmax = w - margin,
        ylab = h - margin + 16.0,
        path = path,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amplitude::amplitude;
    use crate::diagram::parse_diagram;
    use crate::exact::rational;

    fn p(cs: &[i64]) -> PolyZ {
        PolyZ::from_ints(cs)
    }

    fn amp(json: &str) -> Amplitude {
        amplitude(&parse_diagram(json).unwrap().region_map().unwrap())
    }

    const TREFOIL: &str = r#"{"name":"t","format":"regions","n_regions":5,
        "signs":[1,1,1],"regions":[[2,0,1,4],[3,0,2,4],[1,0,3,4]]}"#;
    const HOPF: &str = r#"{"name":"h","format":"regions","n_regions":4,
        "signs":[1,1],"regions":[[3,0,1,2],[1,0,3,2]]}"#;
    const FIG8: &str = r#"{"name":"f","format":"regions","n_regions":6,
        "signs":[-1,1,-1,1],"regions":[[0,1,2,4],[4,2,5,3],[2,1,0,5],[5,0,4,3]]}"#;

    #[test]
    fn inertia_examples() {
        let tre = amp(TREFOIL);
        assert_eq!(
            inertia_at(&tre.matrix, &rational(0, 1)).unwrap(),
            Inertia { p: 1, q: 2, z: 2 }
        );
        let hopf = amp(HOPF);
        assert_eq!(
            inertia_at(&hopf.matrix, &rational(0, 1)).unwrap(),
            Inertia { p: 1, q: 1, z: 2 }
        );
        let zero = ExactMatrix::<PolyZ>::zeros(4, 4);
        assert_eq!(
            inertia_at(&zero, &rational(7, 3)).unwrap(),
            Inertia { p: 0, q: 0, z: 4 }
        );
    }

    #[test]
    fn hyperbolic_block_counts_one_each() {
        let m = ExactMatrix::from_rows(vec![
            vec![p(&[0]), p(&[1]), p(&[0])],
            vec![p(&[1]), p(&[0]), p(&[1])],
            vec![p(&[0]), p(&[1]), p(&[0])],
        ])
        .unwrap();
        assert_eq!(
            inertia_at(&m, &rational(1, 2)).unwrap(),
            Inertia { p: 1, q: 1, z: 1 }
        );
    }

    #[test]
    fn final_pair_examples() {
        let tre = amp(TREFOIL);
        assert_eq!(
            final_pair(&tre, &rational(0, 1)).unwrap(),
            FinalPair { a: 0, b: 4 }
        );
        let hopf = amp(HOPF);
        assert_eq!(
            final_pair(&hopf, &rational(0, 1)).unwrap(),
            FinalPair { a: 1, b: 3 }
        );
        // n-component trivial links at assorted points.
        for n in 1..=3i64 {
            let json = format!(r#"{{"name":"u","format":"pd","pd":[],"circles":{n}}}"#);
            let triv = amp(&json);
            for x in [rational(0, 1), rational(1, 2), rational(7, 9)] {
                assert_eq!(
                    final_pair(&triv, &x).unwrap(),
                    FinalPair { a: n + 1, b: n + 1 }
                );
            }
        }
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            det_poly(&ExactMatrix::zeros(3, 3)).unwrap(),
            PolyZ::zero()
        );
        let hyp = ExactMatrix::from_rows(vec![
            vec![p(&[0]), p(&[1])],
            vec![p(&[1]), p(&[0, 1])],
        ])
        .unwrap();
        assert_eq!(det_poly(&hyp).unwrap(), p(&[-1]));
        // Duplicated region rows make these identically singular.
        assert_eq!(det_poly(&amp(TREFOIL).matrix).unwrap(), PolyZ::zero());
        assert_eq!(det_poly(&amp(HOPF).matrix).unwrap(), PolyZ::zero());
    }

    #[test]
    fn fig8_det_identically_zero() {
        // The constant nullity-two directions make every worked-example
        // amplitude singular, the figure-eight included; its determinant
        // vanishes everywhere, so in particular at 4x^2 = 5.
        let det = det_poly(&amp(FIG8).matrix).unwrap();
        assert!(det.is_zero());
        assert!(det.div_exact(&p(&[-5, 0, 4])).is_some());
        // Cross-check against per-point rational elimination.
        for x in [rational(0, 1), rational(1, 3), rational(2, 5), rational(1, 1)] {
            let evaluated = amp(FIG8).matrix.eval(&x);
            assert_eq!(det.eval(&x), det_rational(&evaluated));
        }
    }

    #[test]
    fn bareiss_agrees_with_rational_elimination() {
        // Nonsingular matrices, including one that forces a row swap.
        let x = p(&[0, 1]);
        let cases = vec![
            ExactMatrix::from_rows(vec![
                vec![p(&[1]), x.clone()],
                vec![x.clone(), p(&[-1, 0, 2])],
            ])
            .unwrap(),
            ExactMatrix::from_rows(vec![
                vec![p(&[0]), p(&[1]), p(&[2])],
                vec![p(&[1]), p(&[0, 3]), p(&[0])],
                vec![p(&[2]), p(&[0]), p(&[-1, 1])],
            ])
            .unwrap(),
        ];
        for m in cases {
            let det = det_poly(&m).unwrap();
            assert!(!det.is_zero());
            for x0 in [rational(0, 1), rational(2, 7), rational(-3, 5)] {
                assert_eq!(det.eval(&x0), det_rational(&m.eval(&x0)));
            }
        }
    }

    /// Plain rational Gaussian elimination, used only as a cross-check.
    fn det_rational(m: &ExactMatrix<BigRational>) -> BigRational {
        let n = m.nrows();
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
            .collect();
        let mut det = BigRational::from_integer(1.into());
        for k in 0..n {
            let piv = match (k..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => r,
                None => return BigRational::zero(),
            };
            if piv != k {
                a.swap(k, piv);
                det = -det;
            }
            det *= a[k][k].clone();
            for r in k + 1..n {
                let f = &a[r][k] / &a[k][k];
                for c in k..n {
                    let delta = &f * &a[k][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
        det
    }

    #[test]
    fn profile_brackets_trefoil_step() {
        let prof = signature_profile(&amp(TREFOIL), 51).unwrap();
        // sqrt(3)/2 is about 0.8660: between 43/50 and 44/50.
        let lo = rational(43, 50);
        let hi = rational(44, 50);
        assert!(prof
            .jump_brackets
            .iter()
            .any(|(a, b)| *a == lo && *b == hi));
        for s in &prof.samples {
            let expect = if s.x <= lo { -4 } else { 0 };
            assert_eq!(s.sig_corr, expect, "at x = {}", s.x);
        }
    }

    #[test]
    fn profile_unknot_flat() {
        let json = r#"{"name":"u","format":"pd","pd":[],"circles":1}"#;
        let prof = signature_profile(&amp(json), 11).unwrap();
        assert!(prof.jump_brackets.is_empty());
        assert!(prof.samples.iter().all(|s| s.sig_corr == 0));
    }

    #[test]
    fn profile_fig8_flat_on_range() {
        let prof = signature_profile(&amp(FIG8), 26).unwrap();
        assert!(prof.samples.iter().all(|s| s.sig_corr == 0));
    }

    #[test]
    fn csv_format() {
        let prof = signature_profile(&amp(TREFOIL), 3).unwrap();
        let csv = profile_to_csv(&prof);
        assert!(csv.contains("x_num,x_den,theta_display,p,q,z,final_a,final_b,sig_corr"));
        assert!(csv.lines().any(|l| l.starts_with("# jump in (")));
    }
}
