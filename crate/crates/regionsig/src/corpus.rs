//! Built-in validated dataset: several diagrams per link, stored Seifert
//! matrices, and the expected amplitude and reduced forms of the worked
//! examples. Diagram files ship under `data/`; the `REGIONSIG_DATA`
//! environment variable overrides the directory, otherwise the embedded
//! copies are used.

use crate::amplitude::{amplitude, Amplitude};
use crate::diagram::{parse_diagram, ParsedDiagram};
use crate::exact::{ExactMatrix, PolyZ};
use crate::reduce::{inertia_rational, FinalPair};
use crate::tlsig::SeifertMatrix;
use crate::{Error, Result};
use num_rational::BigRational;

/// How a diagram's computed amplitude is validated against the entry's
/// expected matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmplitudeCheck {
    /// Region labels match the expected matrix directly.
    Entrywise,
    /// Equal after some relabelling of regions.
    UpToPermutation,
    /// Not compared (move variants have different region counts).
    None,
}

#[derive(Clone, Debug)]
pub struct CorpusDiagram {
    pub file: &'static str,
    pub parsed: ParsedDiagram,
    pub check: AmplitudeCheck,
}

/// The reduced pair displayed for a worked example: a `Z^2` offset plus the
/// small residual symmetric matrix.
#[derive(Clone, Debug)]
pub struct ReducedForm {
    pub m: (i64, i64),
    pub matrix: ExactMatrix<PolyZ>,
}

impl ReducedForm {
    /// Strips the residual matrix at `x0` by the one-by-one block rules:
    /// positive entries add `(1,0)`, negative `(0,1)`, zero `(1,1)`.
    pub fn strip_at(&self, x0: &BigRational) -> Result<FinalPair> {
        let inertia = inertia_rational(&self.matrix.eval(x0))?;
        Ok(FinalPair {
            a: self.m.0 + (inertia.p + inertia.z) as i64,
            b: self.m.1 + (inertia.q + inertia.z) as i64,
        })
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub link_name: &'static str,
    pub diagrams: Vec<CorpusDiagram>,
    pub seifert: Option<SeifertMatrix>,
    pub expected_alexander: Option<PolyZ>,
    pub expected_amplitude: Option<ExactMatrix<PolyZ>>,
    pub expected_reduced: Option<ReducedForm>,
}

impl CorpusEntry {
    /// Amplitude of the first (reference) diagram.
    pub fn reference_amplitude(&self) -> Result<Amplitude> {
        let d = self
            .diagrams
            .first()
            .ok_or_else(|| Error::Corpus(format!("{} has no diagrams", self.link_name)))?;
        Ok(amplitude(&d.parsed.region_map()?))
    }
}

const FILES: &[(&str, &str)] = &[
    ("unknot-0.json", include_str!("../data/unknot-0.json")),
    (
        "unknot-kink-pos.json",
        include_str!("../data/unknot-kink-pos.json"),
    ),
    (
        "unknot-kink-neg.json",
        include_str!("../data/unknot-kink-neg.json"),
    ),
    ("unknot-rii.json", include_str!("../data/unknot-rii.json")),
    ("trivial-2.json", include_str!("../data/trivial-2.json")),
    (
        "trivial-2-rii.json",
        include_str!("../data/trivial-2-rii.json"),
    ),
    ("trivial-3.json", include_str!("../data/trivial-3.json")),
    ("hopf-rh.json", include_str!("../data/hopf-rh.json")),
    ("hopf-rh-pd.json", include_str!("../data/hopf-rh-pd.json")),
    (
        "hopf-rh-kink.json",
        include_str!("../data/hopf-rh-kink.json"),
    ),
    ("hopf-rh-rii.json", include_str!("../data/hopf-rh-rii.json")),
    ("trefoil-rh.json", include_str!("../data/trefoil-rh.json")),
    (
        "trefoil-rh-pd.json",
        include_str!("../data/trefoil-rh-pd.json"),
    ),
    (
        "trefoil-rh-kink-pos.json",
        include_str!("../data/trefoil-rh-kink-pos.json"),
    ),
    (
        "trefoil-rh-kink-neg.json",
        include_str!("../data/trefoil-rh-kink-neg.json"),
    ),
    ("fig8.json", include_str!("../data/fig8.json")),
    ("fig8-pd.json", include_str!("../data/fig8-pd.json")),
];

fn read_file(name: &'static str) -> Result<String> {
    if let Ok(dir) = std::env::var("REGIONSIG_DATA") {
        let path = std::path::Path::new(&dir).join(name);
        return Ok(std::fs::read_to_string(path)?);
    }
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.to_string())
        .ok_or_else(|| Error::Corpus(format!("no embedded data file {name}")))
}

fn load_diagram(file: &'static str, check: AmplitudeCheck) -> Result<CorpusDiagram> {
    let parsed = parse_diagram(&read_file(file)?)?;
    Ok(CorpusDiagram {
        file,
        parsed,
        check,
    })
}

fn p(cs: &[i64]) -> PolyZ {
    PolyZ::from_ints(cs)
}

fn poly_rows(rows: &[&[&[i64]]]) -> ExactMatrix<PolyZ> {
    ExactMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|cs| p(cs)).collect())
            .collect(),
    )
    .expect("rectangular literal")
}

fn expected_hopf() -> ExactMatrix<PolyZ> {
    poly_rows(&[
        &[&[2], &[0, 2], &[2], &[0, 2]],
        &[&[0, 2], &[-2, 0, 4], &[0, 2], &[2]],
        &[&[2], &[0, 2], &[2], &[0, 2]],
        &[&[0, 2], &[2], &[0, 2], &[-2, 0, 4]],
    ])
}

fn expected_trefoil() -> ExactMatrix<PolyZ> {
    poly_rows(&[
        &[&[3], &[0, 2], &[0, 2], &[0, 2], &[3]],
        &[&[0, 2], &[-2, 0, 4], &[1], &[1], &[0, 2]],
        &[&[0, 2], &[1], &[-2, 0, 4], &[1], &[0, 2]],
        &[&[0, 2], &[1], &[1], &[-2, 0, 4], &[0, 2]],
        &[&[3], &[0, 2], &[0, 2], &[0, 2], &[3]],
    ])
}

fn expected_fig8() -> ExactMatrix<PolyZ> {
    poly_rows(&[
        &[&[3, 0, -4], &[0, -2], &[-2], &[1], &[0], &[0]],
        &[&[0, -2], &[-2], &[0, -2], &[0], &[-1], &[-1]],
        &[&[-2], &[0, -2], &[3, 0, -4], &[1], &[0], &[0]],
        &[&[1], &[0], &[1], &[2], &[0, 2], &[0, 2]],
        &[&[0], &[-1], &[0], &[0, 2], &[-3, 0, 4], &[2]],
        &[&[0], &[-1], &[0], &[0, 2], &[2], &[-3, 0, 4]],
    ])
}

/// Loads and validates the built-in corpus.
pub fn load_corpus() -> Result<Vec<CorpusEntry>> {
    use AmplitudeCheck::*;
    let entries = vec![
        CorpusEntry {
            link_name: "unknot",
            diagrams: vec![
                load_diagram("unknot-0.json", Entrywise)?,
                load_diagram("unknot-kink-pos.json", None)?,
                load_diagram("unknot-kink-neg.json", None)?,
                load_diagram("unknot-rii.json", None)?,
            ],
            seifert: Some(SeifertMatrix::new("unknot", vec![])),
            expected_alexander: Some(p(&[1])),
            expected_amplitude: Some(ExactMatrix::zeros(2, 2)),
            expected_reduced: Some(ReducedForm {
                m: (2, 2),
                matrix: ExactMatrix::zeros(0, 0),
            }),
        },
        CorpusEntry {
            link_name: "trivial-2",
            diagrams: vec![
                load_diagram("trivial-2.json", Entrywise)?,
                load_diagram("trivial-2-rii.json", None)?,
            ],
            seifert: Some(SeifertMatrix::new("trivial-2", vec![vec![0]])),
            expected_alexander: Some(PolyZ::zero()),
            expected_amplitude: Some(ExactMatrix::zeros(3, 3)),
            expected_reduced: Some(ReducedForm {
                m: (3, 3),
                matrix: ExactMatrix::zeros(0, 0),
            }),
        },
        CorpusEntry {
            link_name: "trivial-3",
            diagrams: vec![load_diagram("trivial-3.json", Entrywise)?],
            seifert: Some(SeifertMatrix::new(
                "trivial-3",
                vec![vec![0, 0], vec![0, 0]],
            )),
            expected_alexander: Some(PolyZ::zero()),
            expected_amplitude: Some(ExactMatrix::zeros(4, 4)),
            expected_reduced: Some(ReducedForm {
                m: (4, 4),
                matrix: ExactMatrix::zeros(0, 0),
            }),
        },
        CorpusEntry {
            link_name: "hopf-rh",
            diagrams: vec![
                load_diagram("hopf-rh.json", Entrywise)?,
                load_diagram("hopf-rh-pd.json", UpToPermutation)?,
                load_diagram("hopf-rh-kink.json", None)?,
                load_diagram("hopf-rh-rii.json", None)?,
            ],
            seifert: Some(SeifertMatrix::new("hopf-rh", vec![vec![-1]])),
            expected_alexander: Some(p(&[-1, 1])),
            expected_amplitude: Some(expected_hopf()),
            expected_reduced: Some(ReducedForm {
                m: (0, 2),
                matrix: poly_rows(&[&[&[-2, 0, 2], &[0]], &[&[0], &[2]]]),
            }),
        },
        CorpusEntry {
            link_name: "trefoil-rh",
            diagrams: vec![
                load_diagram("trefoil-rh.json", Entrywise)?,
                load_diagram("trefoil-rh-pd.json", UpToPermutation)?,
                load_diagram("trefoil-rh-kink-pos.json", None)?,
                load_diagram("trefoil-rh-kink-neg.json", None)?,
            ],
            seifert: Some(SeifertMatrix::new(
                "trefoil-rh",
                vec![vec![-1, 1], vec![0, -1]],
            )),
            expected_alexander: Some(p(&[1, -1, 1])),
            expected_amplitude: Some(expected_trefoil()),
            expected_reduced: Some(ReducedForm {
                m: (0, 2),
                matrix: poly_rows(&[&[&[-3, 0, 4], &[0]], &[&[0], &[-3, 0, 4]]]),
            }),
        },
        CorpusEntry {
            link_name: "fig8",
            diagrams: vec![
                load_diagram("fig8.json", Entrywise)?,
                load_diagram("fig8-pd.json", UpToPermutation)?,
            ],
            seifert: Some(SeifertMatrix::new("fig8", vec![vec![1, 1], vec![0, -1]])),
            expected_alexander: Some(p(&[1, -3, 1])),
            expected_amplitude: Some(expected_fig8()),
            expected_reduced: Some(ReducedForm {
                m: (1, 1),
                matrix: poly_rows(&[&[&[0], &[-5, 0, 4]], &[&[-5, 0, 4], &[0]]]),
            }),
        },
    ];
    for entry in &entries {
        validate_entry(entry)?;
    }
    Ok(entries)
}

/// Finds a single corpus entry by link name.
pub fn find_entry(name: &str) -> Result<CorpusEntry> {
    load_corpus()?
        .into_iter()
        .find(|e| e.link_name == name)
        .ok_or_else(|| Error::UnknownLink(name.to_string()))
}

fn validate_entry(entry: &CorpusEntry) -> Result<()> {
    for d in &entry.diagrams {
        let map = d.parsed.region_map()?;
        // Euler count: regions = crossings + 1 + graph components, where
        // the components are the circles plus one connected crossing graph.
        if let ParsedDiagram::Pd(pd) = &d.parsed {
            let n = pd.crossings.len();
            let k = pd.circles + usize::from(n > 0);
            if map.n_regions != n + 1 + k {
                return Err(Error::Corpus(format!(
                    "{}: region count {} != Euler count {}",
                    d.file,
                    map.n_regions,
                    n + 1 + k
                )));
            }
        }
        let amp = amplitude(&map);
        if !amp.matrix.is_symmetric() {
            return Err(Error::Corpus(format!("{}: amplitude not symmetric", d.file)));
        }
        match (&entry.expected_amplitude, d.check) {
            (Some(want), AmplitudeCheck::Entrywise) => {
                if amp.matrix != *want {
                    return Err(Error::Corpus(format!(
                        "{}: amplitude differs from the expected matrix",
                        d.file
                    )));
                }
            }
            (Some(want), AmplitudeCheck::UpToPermutation)
                if !matches_up_to_permutation(&amp.matrix, want) =>
            {
                return Err(Error::Corpus(format!(
                    "{}: amplitude not a permutation of the expected matrix",
                    d.file
                )));
            }
            _ => {}
        }
    }
    if let (Some(seifert), Some(alex)) = (&entry.seifert, &entry.expected_alexander) {
        let computed = crate::tlsig::normalize_alexander(&seifert.alexander());
        let stored = crate::tlsig::normalize_alexander(alex);
        if computed != stored {
            return Err(Error::Corpus(format!(
                "{}: Seifert matrix fails the Alexander check ({computed} != {stored})",
                entry.link_name
            )));
        }
    }
    Ok(())
}

/// Searches all region relabellings for one matching the expected matrix.
pub fn matches_up_to_permutation(
    got: &ExactMatrix<PolyZ>,
    want: &ExactMatrix<PolyZ>,
) -> bool {
    let n = got.nrows();
    if want.nrows() != n || got.ncols() != n || want.ncols() != n {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    permute_search(got, want, &mut perm, 0)
}

fn permute_search(
    got: &ExactMatrix<PolyZ>,
    want: &ExactMatrix<PolyZ>,
    perm: &mut Vec<usize>,
    k: usize,
) -> bool {
    let n = perm.len();
    if k == n {
        return true;
    }
    for i in k..n {
        perm.swap(k, i);
        // Prefix consistency: got[perm[a]][perm[b]] == want[a][b] for a,b <= k.
        let ok = (0..=k).all(|a| {
            got.get(perm[a], perm[k]) == want.get(a, k)
                && got.get(perm[k], perm[a]) == want.get(k, a)
        });
        if ok && permute_search(got, want, perm, k + 1) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}
