//! The amplitude of a diagram: a symmetric matrix over `Z[x]` indexed by
//! regions, assembled from crossing-local contributions weighted by the
//! first three normalised Hermite polynomials.

use crate::diagram::{Checkerboard, CrossingSite, RegionMap};
use crate::exact::{ExactMatrix, PolyZ};
use num_bigint::BigInt;

/// The symmetric pairing `4 x 4 -> 3` between quadrant indices.
pub const PAIRING: [[usize; 4]; 4] = [
    [2, 1, 0, 1],
    [1, 0, 1, 0],
    [0, 1, 2, 1],
    [1, 0, 1, 0],
];

/// `h0 = 1`, `h1 = x`, `h2 = 2x^2 - 1`.
#[derive(Clone, Debug)]
pub struct HermiteWeights {
    h: [PolyZ; 3],
}

impl Default for HermiteWeights {
    fn default() -> Self {
        HermiteWeights {
            h: [
                PolyZ::one(),
                PolyZ::x(),
                PolyZ::from_ints(&[-1, 0, 2]),
            ],
        }
    }
}

impl HermiteWeights {
    pub fn weight(&self, k: usize) -> &PolyZ {
        &self.h[k]
    }
}

/// Amplitude matrix of a diagram with its crossing counts.
#[derive(Clone, Debug)]
pub struct Amplitude {
    pub matrix: ExactMatrix<PolyZ>,
    pub c_plus: i64,
    pub c_minus: i64,
}

impl Amplitude {
    pub fn writhe(&self) -> i64 {
        self.c_plus - self.c_minus
    }

    pub fn n_regions(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Contribution of a single crossing: entry `(r, s)` collects
/// `sign * h(i.j)` over all ordered quadrant pairs `(i, j)` whose incident
/// regions are `(r, s)`; coincident regions accumulate.
pub fn crossing_amplitude(
    sign: i8,
    quadrants: [usize; 4],
    n_regions: usize,
) -> ExactMatrix<PolyZ> {
    let weights = HermiteWeights::default();
    let mut m = ExactMatrix::zeros(n_regions, n_regions);
    for i in 0..4 {
        for j in 0..4 {
            let mut h = weights.weight(PAIRING[i][j]).clone();
            if sign < 0 {
                h = h.neg();
            }
            m.add_to(quadrants[i], quadrants[j], &h);
        }
    }
    m
}

/// Sum of the crossing amplitudes of a region map.
pub fn amplitude(r: &RegionMap) -> Amplitude {
    let mut matrix = ExactMatrix::zeros(r.n_regions, r.n_regions);
    for &CrossingSite { sign, quadrants } in &r.crossings {
        matrix = matrix.add(&crossing_amplitude(sign, quadrants, r.n_regions));
    }
    let (c_plus, c_minus) = r.crossing_counts();
    Amplitude {
        matrix,
        c_plus,
        c_minus,
    }
}

/// Checks the polynomial identity `S M(x) S = M(-x)` where `S` is the
/// diagonal sign matrix of a checkerboard colouring.
pub fn checkerboard_flip_check(a: &Amplitude, colors: &Checkerboard) -> bool {
    let n = a.matrix.nrows();
    if colors.colors.len() != n {
        return false;
    }
    let mut s = ExactMatrix::<PolyZ>::zeros(n, n);
    for (i, &c) in colors.colors.iter().enumerate() {
        s.set(i, i, if c == 0 { PolyZ::one() } else { PolyZ::constant(-1) });
    }
    s.mul(&a.matrix).mul(&s) == a.matrix.flip_x()
}

/// True when every entry lies in the subring generated by `2x`
/// (the coefficient of `x^k` is divisible by `2^k`).
pub fn in_two_x_subring(m: &ExactMatrix<PolyZ>) -> bool {
    (0..m.nrows()).all(|i| (0..m.ncols()).all(|j| m.get(i, j).in_two_x_subring()))
}

/// CSV of stringified polynomial entries.
pub fn matrix_to_csv(m: &ExactMatrix<PolyZ>) -> String {
    let mut out = String::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// LaTeX `bmatrix` rendering.
pub fn matrix_to_latex(m: &ExactMatrix<PolyZ>) -> String {
    let mut out = String::from("\\begin{bmatrix}\n");
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| m.get(i, j).to_latex()).collect();
        out.push_str(&row.join(" & "));
        if i + 1 < m.nrows() {
            out.push_str(" \\\\");
        }
        out.push('\n');
    }
    out.push_str("\\end{bmatrix}\n");
    out
}

/// JSON with per-entry coefficient arrays (decimal strings, low to high).
pub fn matrix_to_json(m: &ExactMatrix<PolyZ>) -> String {
    let rows: Vec<Vec<Vec<String>>> = (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| {
                    m.get(i, j)
                        .coeffs()
                        .iter()
                        .map(BigInt::to_string)
                        .collect()
                })
                .collect()
        })
        .collect();
    serde_json::json!({
        "n_regions": m.nrows(),
        "coeffs": rows,
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{checkerboard, parse_diagram};

    fn p(cs: &[i64]) -> PolyZ {
        PolyZ::from_ints(cs)
    }

    /// The pairing table agrees with its defining formula via vectors in
    /// (Z[i])^3 paired without conjugation.
    #[test]
    fn pairing_table_from_complex_vectors() {
        type C = (i64, i64);
        fn cmul(a: C, b: C) -> C {
            (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
        }
        let i_pow = |e: u32| -> C {
            match e % 4 {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            }
        };
        let mut v = [[(0i64, 0i64); 3]; 4];
        for k in 0..2usize {
            for l in 0..2usize {
                let idx = k + 2 * l;
                let e = (k + (1 - k) * 2 * l) as u32;
                let mut vec = [(0, 0); 3];
                vec[2] = (1, 0);
                let unit = i_pow(e);
                vec[k] = (vec[k].0 + unit.0, vec[k].1 + unit.1);
                v[idx] = vec;
            }
        }
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = (0, 0);
                for t in 0..3 {
                    let prod = cmul(v[i][t], v[j][t]);
                    acc = (acc.0 + prod.0, acc.1 + prod.1);
                }
                assert_eq!(acc, (PAIRING[i][j] as i64, 0), "pairing at ({i},{j})");
            }
        }
    }

    #[test]
    fn hermite_weights_are_pinned() {
        let w = HermiteWeights::default();
        assert_eq!(w.weight(0), &PolyZ::one());
        assert_eq!(w.weight(1), &PolyZ::x());
        assert_eq!(w.weight(2), &p(&[-1, 0, 2]));
    }

    #[test]
    fn single_positive_crossing_all_distinct() {
        let m = crossing_amplitude(1, [0, 1, 2, 3], 4);
        let h2 = p(&[-1, 0, 2]);
        let x = p(&[0, 1]);
        let one = p(&[1]);
        let expect = ExactMatrix::from_rows(vec![
            vec![h2.clone(), x.clone(), one.clone(), x.clone()],
            vec![x.clone(), one.clone(), x.clone(), one.clone()],
            vec![one.clone(), x.clone(), h2.clone(), x.clone()],
            vec![x.clone(), one.clone(), x.clone(), one.clone()],
        ])
        .unwrap();
        assert_eq!(m, expect);
    }

    #[test]
    fn kink_crossing_matches_local_matrix() {
        // Loop region 0, west region 1, doubled outer region 2.
        let m = crossing_amplitude(1, [2, 1, 2, 0], 3);
        let expect = ExactMatrix::from_rows(vec![
            vec![p(&[1]), p(&[1]), p(&[0, 2])],
            vec![p(&[1]), p(&[1]), p(&[0, 2])],
            vec![p(&[0, 2]), p(&[0, 2]), p(&[0, 0, 4])],
        ])
        .unwrap();
        assert_eq!(m, expect);
        // Sign linearity.
        assert_eq!(crossing_amplitude(-1, [2, 1, 2, 0], 3), expect.neg());
    }

    fn region_map(json: &str) -> RegionMap {
        parse_diagram(json).unwrap().region_map().unwrap()
    }

    #[test]
    fn hopf_amplitude_matches_displayed_matrix() {
        let r = region_map(
            r#"{"name":"hopf","format":"regions","n_regions":4,
                "signs":[1,1],"regions":[[3,0,1,2],[1,0,3,2]]}"#,
        );
        let a = amplitude(&r);
        let y2m2 = p(&[-2, 0, 4]);
        let y = p(&[0, 2]);
        let two = p(&[2]);
        let expect = ExactMatrix::from_rows(vec![
            vec![two.clone(), y.clone(), two.clone(), y.clone()],
            vec![y.clone(), y2m2.clone(), y.clone(), two.clone()],
            vec![two.clone(), y.clone(), two.clone(), y.clone()],
            vec![y.clone(), two.clone(), y.clone(), y2m2.clone()],
        ])
        .unwrap();
        assert_eq!(a.matrix, expect);
        assert_eq!((a.c_plus, a.c_minus), (2, 0));
    }

    #[test]
    fn trefoil_amplitude_matches_displayed_matrix() {
        let r = region_map(
            r#"{"name":"trefoil","format":"regions","n_regions":5,
                "signs":[1,1,1],"regions":[[2,0,1,4],[3,0,2,4],[1,0,3,4]]}"#,
        );
        let a = amplitude(&r);
        let y2m2 = p(&[-2, 0, 4]);
        let y = p(&[0, 2]);
        let one = p(&[1]);
        let three = p(&[3]);
        let expect = ExactMatrix::from_rows(vec![
            vec![three.clone(), y.clone(), y.clone(), y.clone(), three.clone()],
            vec![y.clone(), y2m2.clone(), one.clone(), one.clone(), y.clone()],
            vec![y.clone(), one.clone(), y2m2.clone(), one.clone(), y.clone()],
            vec![y.clone(), one.clone(), one.clone(), y2m2.clone(), y.clone()],
            vec![three.clone(), y.clone(), y.clone(), y.clone(), three.clone()],
        ])
        .unwrap();
        assert_eq!(a.matrix, expect);
        assert_eq!((a.c_plus, a.c_minus), (3, 0));
        // Also the decomposition into three single-crossing matrices.
        let mut acc = ExactMatrix::zeros(5, 5);
        for c in r.crossings.iter().rev() {
            acc = acc.add(&crossing_amplitude(c.sign, c.quadrants, 5));
        }
        assert_eq!(acc, a.matrix);
    }

    #[test]
    fn trivial_diagrams_have_zero_amplitude() {
        for n in 1..=3usize {
            let text = format!(
                r#"{{"name":"triv","format":"pd","pd":[],"circles":{n}}}"#
            );
            let r = region_map(&text);
            let a = amplitude(&r);
            assert_eq!(a.matrix, ExactMatrix::zeros(n + 1, n + 1));
            assert_eq!((a.c_plus, a.c_minus), (0, 0));
        }
    }

    #[test]
    fn checkerboard_flip_identity() {
        for json in [
            r#"{"name":"hopf","format":"regions","n_regions":4,
                "signs":[1,1],"regions":[[3,0,1,2],[1,0,3,2]]}"#,
            r#"{"name":"trefoil","format":"regions","n_regions":5,
                "signs":[1,1,1],"regions":[[2,0,1,4],[3,0,2,4],[1,0,3,4]]}"#,
        ] {
            let r = region_map(json);
            let a = amplitude(&r);
            let colors = checkerboard(&r).unwrap();
            assert!(checkerboard_flip_check(&a, &colors));
        }
    }

    #[test]
    fn checkerboard_colors_match_known_labelings() {
        let tre = region_map(
            r#"{"name":"trefoil","format":"regions","n_regions":5,
                "signs":[1,1,1],"regions":[[2,0,1,4],[3,0,2,4],[1,0,3,4]]}"#,
        );
        assert_eq!(checkerboard(&tre).unwrap().colors, vec![0, 1, 1, 1, 0]);
        let hopf = region_map(
            r#"{"name":"hopf","format":"regions","n_regions":4,
                "signs":[1,1],"regions":[[3,0,1,2],[1,0,3,2]]}"#,
        );
        assert_eq!(checkerboard(&hopf).unwrap().colors, vec![0, 1, 0, 1]);
    }

    #[test]
    fn zero_matrix_flip_check_trivially_true() {
        let r = region_map(r#"{"name":"u","format":"pd","pd":[],"circles":1}"#);
        let a = amplitude(&r);
        let colors = checkerboard(&r).unwrap();
        assert!(checkerboard_flip_check(&a, &colors));
    }

    #[test]
    fn two_x_membership_and_symmetry() {
        let r = region_map(
            r#"{"name":"trefoil","format":"regions","n_regions":5,
                "signs":[1,1,1],"regions":[[2,0,1,4],[3,0,2,4],[1,0,3,4]]}"#,
        );
        let a = amplitude(&r);
        assert!(a.matrix.is_symmetric());
        assert!(in_two_x_subring(&a.matrix));
    }

    #[test]
    fn output_formats() {
        let m = ExactMatrix::from_rows(vec![
            vec![p(&[-1, 0, 2]), p(&[0, 1])],
            vec![p(&[0, 1]), p(&[1])],
        ])
        .unwrap();
        assert_eq!(matrix_to_csv(&m), "2*x^2-1,x\nx,1\n");
        assert!(matrix_to_latex(&m).contains("2x^{2}-1 & x"));
        assert!(matrix_to_json(&m).contains("\"n_regions\":2"));
    }
}
