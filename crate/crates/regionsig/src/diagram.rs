//! Oriented link diagrams: PD-code parsing, crossing signs, region (face)
//! extraction, and checkerboard colouring.
//!
//! A PD entry `[a, b, c, d]` lists the four edge labels around a crossing
//! counterclockwise starting from the incoming under-edge, so `a` is the
//! under-in edge and `c` the under-out edge. Edge labels are positive
//! integers numbered consecutively along each component. Crossingless
//! circles cannot be expressed in PD codes and are carried as a count.

use crate::{Error, Result};
use serde::Deserialize;
use std::collections::BTreeMap;

/// A parsed, structurally validated oriented diagram in PD form.
#[derive(Clone, Debug)]
pub struct OrientedDiagram {
    pub name: String,
    pub crossings: Vec<[usize; 4]>,
    pub circles: usize,
    /// Cyclic edge-label sequences, one per link component.
    pub components: Vec<Vec<usize>>,
    pub explicit_signs: Option<Vec<i8>>,
    /// Resolved sign of every crossing.
    signs: Vec<i8>,
}

/// One crossing site of a region map: a sign and the four incident region
/// ids, quadrant 0 between the two outgoing half-edges, then proceeding
/// counterclockwise (quadrant 2 sits between the two incoming half-edges).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingSite {
    pub sign: i8,
    pub quadrants: [usize; 4],
}

/// Regions of a diagram together with the quadrant tuple at each crossing.
#[derive(Clone, Debug)]
pub struct RegionMap {
    pub n_regions: usize,
    pub crossings: Vec<CrossingSite>,
    /// `(interior, surrounding)` region ids for each crossingless circle.
    pub circle_regions: Vec<(usize, usize)>,
}

/// A proper two-colouring of the regions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkerboard {
    pub colors: Vec<u8>,
}

#[derive(Deserialize)]
struct DiagramFile {
    #[serde(default)]
    name: String,
    format: String,
    #[serde(default)]
    pd: Vec<[i64; 4]>,
    #[serde(default)]
    circles: usize,
    #[serde(default)]
    signs: Option<Vec<i8>>,
    #[serde(default)]
    regions: Option<Vec<[usize; 4]>>,
    #[serde(default)]
    n_regions: Option<usize>,
}

/// Either a full PD diagram or a bare region map read from a file.
#[derive(Clone, Debug)]
pub enum ParsedDiagram {
    Pd(OrientedDiagram),
    Regions { name: String, map: RegionMap },
}

impl ParsedDiagram {
    pub fn name(&self) -> &str {
        match self {
            ParsedDiagram::Pd(d) => &d.name,
            ParsedDiagram::Regions { name, .. } => name,
        }
    }

    pub fn region_map(&self) -> Result<RegionMap> {
        match self {
            ParsedDiagram::Pd(d) => extract_regions(d),
            ParsedDiagram::Regions { map, .. } => Ok(map.clone()),
        }
    }
}

/// Parses a diagram file (UTF-8 JSON) in either `pd` or `regions` format.
pub fn parse_diagram(text: &str) -> Result<ParsedDiagram> {
    let file: DiagramFile = serde_json::from_str(text)?;
    match file.format.as_str() {
        "pd" => Ok(ParsedDiagram::Pd(parse_pd_file(file)?)),
        "regions" => {
            let n_regions = file
                .n_regions
                .ok_or_else(|| Error::Diagram("regions format requires n_regions".into()))?;
            let regions = file
                .regions
                .ok_or_else(|| Error::Diagram("regions format requires regions".into()))?;
            let signs = file
                .signs
                .ok_or_else(|| Error::Diagram("regions format requires signs".into()))?;
            if signs.len() != regions.len() {
                return Err(Error::Diagram("signs/regions length mismatch".into()));
            }
            let crossings: Vec<CrossingSite> = signs
                .iter()
                .zip(&regions)
                .map(|(&sign, &quadrants)| {
                    if sign != 1 && sign != -1 {
                        return Err(Error::Diagram(format!("bad sign {sign}")));
                    }
                    if quadrants.iter().any(|&q| q >= n_regions) {
                        return Err(Error::Diagram("quadrant region id out of range".into()));
                    }
                    Ok(CrossingSite { sign, quadrants })
                })
                .collect::<Result<_>>()?;
            let mut seen = vec![false; n_regions];
            for c in &crossings {
                for &q in &c.quadrants {
                    seen[q] = true;
                }
            }
            if !crossings.is_empty() && !seen.into_iter().all(|b| b) {
                return Err(Error::Diagram("orphan region id".into()));
            }
            Ok(ParsedDiagram::Regions {
                name: file.name,
                map: RegionMap {
                    n_regions,
                    crossings,
                    circle_regions: Vec::new(),
                },
            })
        }
        other => Err(Error::Diagram(format!("unknown format '{other}'"))),
    }
}

/// Parses the `pd` format: validates edge labels, resolves the in/out role
/// of every edge end, derives crossing signs and component cycles.
pub fn parse_pd(text: &str) -> Result<OrientedDiagram> {
    match parse_diagram(text)? {
        ParsedDiagram::Pd(d) => Ok(d),
        ParsedDiagram::Regions { .. } => {
            Err(Error::Diagram("expected a pd-format diagram".into()))
        }
    }
}

fn parse_pd_file(file: DiagramFile) -> Result<OrientedDiagram> {
    let mut crossings = Vec::with_capacity(file.pd.len());
    for entry in &file.pd {
        let mut c = [0usize; 4];
        for (slot, &label) in entry.iter().enumerate() {
            if label <= 0 {
                return Err(Error::Diagram(format!("edge label {label} must be positive")));
            }
            c[slot] = label as usize;
        }
        crossings.push(c);
    }
    if let Some(signs) = &file.signs {
        if signs.len() != crossings.len() {
            return Err(Error::Diagram("signs length != crossing count".into()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Diagram("signs must be +1 or -1".into()));
        }
    }

    // Every edge label must occur exactly twice.
    let mut slots_of: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (ci, c) in crossings.iter().enumerate() {
        for (slot, &e) in c.iter().enumerate() {
            slots_of.entry(e).or_default().push((ci, slot));
        }
    }
    for (e, slots) in &slots_of {
        if slots.len() != 2 {
            return Err(Error::Diagram(format!(
                "edge {e} appears {} times, expected 2",
                slots.len()
            )));
        }
    }

    let signs = resolve_signs(&crossings, &slots_of, file.explicit())?;
    let components = component_cycles(&crossings, &slots_of, &signs)?;

    Ok(OrientedDiagram {
        name: file.name,
        crossings,
        circles: file.circles,
        components,
        explicit_signs: file.signs,
        signs,
    })
}

impl DiagramFile {
    fn explicit(&self) -> Option<&[i8]> {
        self.signs.as_deref()
    }
}

/// Role of a PD slot: does the strand enter or leave the crossing there?
/// Slot 0 (under-in) is always in, slot 2 (under-out) always out. Sign +1
/// means slot 1 is the over-out and slot 3 the over-in; sign -1 swaps them.
fn slot_is_in(slot: usize, sign: i8) -> bool {
    match slot {
        0 => true,
        2 => false,
        1 => sign == -1,
        3 => sign == 1,
        _ => unreachable!(),
    }
}

/// Determines crossing signs from the structural constraint that every edge
/// has exactly one in-end and one out-end, propagating from the fixed
/// under-strand roles. Explicit signs fill crossings the propagation cannot
/// reach and must agree with every derived value.
fn resolve_signs(
    crossings: &[[usize; 4]],
    slots_of: &BTreeMap<usize, Vec<(usize, usize)>>,
    explicit: Option<&[i8]>,
) -> Result<Vec<i8>> {
    let n = crossings.len();
    let mut derived: Vec<Option<i8>> = vec![None; n];
    // in_state[(ci, slot)]: Some(true) = strand enters here.
    let mut in_state: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut queue: Vec<(usize, usize, bool)> = Vec::new();
    for (ci, _) in crossings.iter().enumerate() {
        queue.push((ci, 0, true));
        queue.push((ci, 2, false));
    }
    while let Some((ci, slot, is_in)) = queue.pop() {
        match in_state.get(&(ci, slot)) {
            Some(&prev) if prev == is_in => continue,
            Some(_) => {
                return Err(Error::Diagram(format!(
                    "inconsistent strand orientation at crossing {ci}"
                )))
            }
            None => {}
        }
        in_state.insert((ci, slot), is_in);
        // The other end of this edge has the opposite role.
        let e = crossings[ci][slot];
        let ends = &slots_of[&e];
        let other = if ends[0] == (ci, slot) { ends[1] } else { ends[0] };
        queue.push((other.0, other.1, !is_in));
        // An over-slot role fixes the sign, which fixes the other over-slot.
        if slot == 1 || slot == 3 {
            let sign = match (slot, is_in) {
                (1, false) | (3, true) => 1,
                _ => -1,
            };
            match derived[ci] {
                Some(prev) if prev != sign => {
                    return Err(Error::Diagram(format!(
                        "inconsistent derived sign at crossing {ci}"
                    )))
                }
                Some(_) => {}
                None => {
                    derived[ci] = Some(sign);
                    let other_slot = 4 - slot; // 1 <-> 3
                    queue.push((ci, other_slot, slot_is_in(other_slot, sign)));
                }
            }
        }
    }

    let mut signs = Vec::with_capacity(n);
    for ci in 0..n {
        match (derived[ci], explicit.map(|s| s[ci])) {
            (Some(d), Some(e)) if d != e => {
                return Err(Error::Diagram(format!(
                    "explicit sign {e} contradicts derived sign {d} at crossing {ci}"
                )))
            }
            (Some(d), _) => signs.push(d),
            (None, Some(e)) => signs.push(e),
            (None, None) => {
                return Err(Error::Diagram(format!(
                    "sign of crossing {ci} is ambiguous; provide explicit signs"
                )))
            }
        }
    }
    Ok(signs)
}

/// Builds the successor permutation on edges (each edge is followed by the
/// out-edge of the same strand at its head crossing) and returns its cycles,
/// validating the consecutive-numbering convention.
fn component_cycles(
    crossings: &[[usize; 4]],
    slots_of: &BTreeMap<usize, Vec<(usize, usize)>>,
    signs: &[i8],
) -> Result<Vec<Vec<usize>>> {
    let mut successor: BTreeMap<usize, usize> = BTreeMap::new();
    for &e in slots_of.keys() {
        let (ci, slot) = *slots_of[&e]
            .iter()
            .find(|&&(ci, slot)| slot_is_in(slot, signs[ci]))
            .ok_or_else(|| Error::Diagram(format!("edge {e} has no in-end")))?;
        let out_slot = match slot {
            0 => 2,
            1 | 3 => 4 - slot,
            _ => unreachable!(),
        };
        successor.insert(e, crossings[ci][out_slot]);
    }
    let mut visited: BTreeMap<usize, bool> =
        slots_of.keys().map(|&e| (e, false)).collect();
    let mut cycles = Vec::new();
    for &start in slots_of.keys() {
        if visited[&start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut e = start;
        loop {
            if std::mem::replace(visited.get_mut(&e).unwrap(), true) {
                return Err(Error::Diagram("edge successor relation is not a permutation".into()));
            }
            cycle.push(e);
            e = successor[&e];
            if e == start {
                break;
            }
        }
        // Consecutive numbering along the component.
        let lo = *cycle.iter().min().unwrap();
        let hi = *cycle.iter().max().unwrap();
        if hi - lo + 1 != cycle.len() {
            return Err(Error::Diagram(format!(
                "component labels {lo}..{hi} are not consecutive"
            )));
        }
        for w in cycle.windows(2) {
            if w[1] != w[0] + 1 && !(w[0] == hi && w[1] == lo) {
                return Err(Error::Diagram(
                    "edge labels do not increase along the component".into(),
                ));
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Sign of every crossing, derived from orientations with explicit signs
/// winning (mismatches are rejected at parse time).
pub fn crossing_signs(d: &OrientedDiagram) -> Vec<i8> {
    d.signs.clone()
}

/// Counts of positive and negative crossings.
pub fn crossing_counts(d: &OrientedDiagram) -> (i64, i64) {
    let plus = d.signs.iter().filter(|&&s| s == 1).count() as i64;
    (plus, d.signs.len() as i64 - plus)
}

impl RegionMap {
    pub fn crossing_counts(&self) -> (i64, i64) {
        let plus = self.crossings.iter().filter(|c| c.sign == 1).count() as i64;
        (plus, self.crossings.len() as i64 - plus)
    }
}

/// Extracts the regions of a closed diagram by walking face corners of the
/// rotation system, then reads off the quadrant tuple of every crossing.
pub fn extract_regions(d: &OrientedDiagram) -> Result<RegionMap> {
    let n = d.crossings.len();
    if n == 0 {
        // Only circles: one unbounded region plus one interior per circle,
        // drawn side by side.
        return Ok(RegionMap {
            n_regions: 1 + d.circles,
            crossings: Vec::new(),
            circle_regions: (0..d.circles).map(|i| (i + 1, 0)).collect(),
        });
    }

    // The crossing graph must be connected; a split PD code does not pin
    // down which faces merge in the plane.
    let mut slots_of: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (ci, c) in d.crossings.iter().enumerate() {
        for (slot, &e) in c.iter().enumerate() {
            slots_of.entry(e).or_default().push((ci, slot));
        }
    }
    let mut comp = (0..n).collect::<Vec<usize>>();
    fn find(comp: &mut Vec<usize>, i: usize) -> usize {
        if comp[i] != i {
            let r = find(comp, comp[i]);
            comp[i] = r;
        }
        comp[i]
    }
    for slots in slots_of.values() {
        let (a, b) = (slots[0].0, slots[1].0);
        let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
        comp[ra] = rb;
    }
    let roots: std::collections::BTreeSet<usize> = (0..n).map(|i| find(&mut comp, i)).collect();
    if roots.len() > 1 {
        return Err(Error::Diagram(
            "PD code has a split crossing graph; use circles or regions format".into(),
        ));
    }

    // Face walk. Arriving inward along ray `p` of a crossing puts the face
    // on the left in the corner between rays p-1 and p; the walk then leaves
    // outward along ray p-1.
    let other_end = |ci: usize, slot: usize| -> (usize, usize) {
        let e = d.crossings[ci][slot];
        let ends = &slots_of[&e];
        if ends[0] == (ci, slot) {
            ends[1]
        } else {
            ends[0]
        }
    };
    let mut face_of_corner = vec![[usize::MAX; 4]; n];
    let mut visited = vec![[false; 4]; n]; // inward arrivals
    let mut n_faces = 0usize;
    for start_c in 0..n {
        for start_p in 0..4 {
            if visited[start_c][start_p] {
                continue;
            }
            let face = n_faces;
            n_faces += 1;
            let (mut ci, mut p) = (start_c, start_p);
            loop {
                visited[ci][p] = true;
                let corner = (p + 3) % 4;
                if face_of_corner[ci][corner] != usize::MAX {
                    return Err(Error::Diagram("face traversal failed to close".into()));
                }
                face_of_corner[ci][corner] = face;
                let (nc, np) = other_end(ci, corner);
                ci = nc;
                p = np;
                if (ci, p) == (start_c, start_p) {
                    break;
                }
            }
        }
    }
    if n_faces != n + 2 {
        return Err(Error::Diagram(format!(
            "Euler check failed: {} faces for {} crossings",
            n_faces, n
        )));
    }

    // Quadrant tuples with respect to orientation: for sign +1 the two
    // out-rays are slots 1 (over-out) and 2 (under-out), so quadrant 0 is
    // the corner between them, i.e. corner 1; for sign -1 it is corner 2.
    let crossings = d
        .crossings
        .iter()
        .enumerate()
        .map(|(ci, _)| {
            let base = if d.signs[ci] == 1 { 1 } else { 2 };
            let q = |k: usize| face_of_corner[ci][(base + k) % 4];
            CrossingSite {
                sign: d.signs[ci],
                quadrants: [q(0), q(1), q(2), q(3)],
            }
        })
        .collect();

    Ok(RegionMap {
        n_regions: n_faces + d.circles,
        crossings,
        circle_regions: (0..d.circles).map(|i| (n_faces + i, 0)).collect(),
    })
}

/// Proper two-colouring of the regions: regions on opposite sides of any
/// edge receive different colours. Region 0 is coloured 0.
pub fn checkerboard(r: &RegionMap) -> Result<Checkerboard> {
    let mut colors: Vec<Option<u8>> = vec![None; r.n_regions];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); r.n_regions];
    for c in &r.crossings {
        for k in 0..4 {
            let (a, b) = (c.quadrants[k], c.quadrants[(k + 1) % 4]);
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for &(interior, surrounding) in &r.circle_regions {
        adj[interior].push(surrounding);
        adj[surrounding].push(interior);
    }
    for seed in 0..r.n_regions {
        if colors[seed].is_some() {
            continue;
        }
        colors[seed] = Some(0);
        let mut stack = vec![seed];
        while let Some(v) = stack.pop() {
            let cv = colors[v].unwrap();
            for &w in &adj[v] {
                match colors[w] {
                    None => {
                        colors[w] = Some(1 - cv);
                        stack.push(w);
                    }
                    Some(cw) if cw == cv => {
                        return Err(Error::Diagram(
                            "checkerboard colouring contradiction".into(),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Checkerboard {
        colors: colors.into_iter().map(|c| c.unwrap()).collect(),
    })
}
