//! Chords, claws, biclaws, triclaws and their cells; good/bad cycles;
//! special 9-cycles; class membership; triangular cycles; splitting paths.

use crate::plane_graph::{cycle_sides, ordered, CycleRef, CycleSides, GraphError, PlaneGraph};
use serde::Serialize;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum StructureKind {
    Chord,
    Claw,
    Biclaw,
    Triclaw,
}

/// A chord/claw/biclaw/triclaw of a cycle together with its cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStructure {
    pub kind: StructureKind,
    /// Anchor vertices on the cycle, in cyclic order starting from the
    /// lexicographically least anchor.
    pub anchors: Vec<usize>,
    /// Vertices strictly inside the cycle (empty for a chord).
    pub interior: Vec<usize>,
    /// Cells in the cyclic order of the anchors; a triclaw lists its
    /// triangle first.
    pub cells: Vec<CycleRef>,
}

impl CycleStructure {
    pub fn cell_lengths(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum CycleClass {
    Good,
    Bad { witnesses: Vec<CycleStructure> },
    NotApplicable,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("cycle has length {0}, expected {1}")]
    WrongLength(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exhaustively list the requested structures of a cycle. Chords must lie
/// inside the cycle; claw/biclaw/triclaw interior vertices strictly inside.
/// Deterministic order: by kind, then anchors, then interior.
pub fn find_structures(
    g: &PlaneGraph,
    c: &CycleRef,
    kinds: &[StructureKind],
) -> Vec<CycleStructure> {
    let sides = cycle_sides(g, c);
    let inside_vertices: Vec<usize> = sides.inside.vertices.clone();
    let mut out = Vec::new();

    if kinds.contains(&StructureKind::Chord) {
        for &(a, b) in &sides.inside.edges {
            if c.contains(a) && c.contains(b) {
                out.push(chord_structure(c, a, b));
            }
        }
    }
    if kinds.contains(&StructureKind::Claw) {
        for &v in &inside_vertices {
            let anchors: Vec<usize> = g.neighbors(v).filter(|&u| c.contains(u)).collect();
            for tri in subsets3(&anchors) {
                out.push(spoke_structure(
                    StructureKind::Claw,
                    c,
                    &[(v, tri[0]), (v, tri[1]), (v, tri[2])],
                    vec![v],
                ));
            }
        }
    }
    if kinds.contains(&StructureKind::Biclaw) {
        for &u in &inside_vertices {
            for v in g.neighbors(u) {
                if v <= u || !inside_vertices.contains(&v) {
                    continue;
                }
                let ua: Vec<usize> = g.neighbors(u).filter(|&x| c.contains(x)).collect();
                let va: Vec<usize> = g.neighbors(v).filter(|&x| c.contains(x)).collect();
                for (a1, a2) in subsets2(&ua) {
                    for (b1, b2) in subsets2(&va) {
                        let set: HashSet<usize> = [a1, a2, b1, b2].into_iter().collect();
                        if set.len() != 4 || !pairs_nested(c, (a1, a2), (b1, b2)) {
                            continue;
                        }
                        out.push(spoke_structure(
                            StructureKind::Biclaw,
                            c,
                            &[(u, a1), (u, a2), (v, b1), (v, b2)],
                            vec![u, v],
                        ));
                    }
                }
            }
        }
    }
    if kinds.contains(&StructureKind::Triclaw) {
        for &u in &inside_vertices {
            for v in g.neighbors(u) {
                if v <= u || !inside_vertices.contains(&v) {
                    continue;
                }
                for w in g.neighbors(v) {
                    if w <= v || !inside_vertices.contains(&w) || !g.adjacent(u, w) {
                        continue;
                    }
                    let ua: Vec<usize> = g.neighbors(u).filter(|&x| c.contains(x)).collect();
                    let va: Vec<usize> = g.neighbors(v).filter(|&x| c.contains(x)).collect();
                    let wa: Vec<usize> = g.neighbors(w).filter(|&x| c.contains(x)).collect();
                    for &a in &ua {
                        for &b in &va {
                            for &d in &wa {
                                let set: HashSet<usize> = [a, b, d].into_iter().collect();
                                if set.len() != 3 {
                                    continue;
                                }
                                out.push(triclaw_structure(c, [(u, a), (v, b), (w, d)]));
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| {
        x.kind
            .cmp(&y.kind)
            .then_with(|| x.anchors.cmp(&y.anchors))
            .then_with(|| x.interior.cmp(&y.interior))
    });
    out
}

fn subsets3(items: &[usize]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            for k in j + 1..items.len() {
                out.push([items[i], items[j], items[k]]);
            }
        }
    }
    out
}

fn subsets2(items: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            out.push((items[i], items[j]));
        }
    }
    out
}

/// The two anchor pairs occupy disjoint arcs (pattern a a b b around the
/// cycle), as a drawable biclaw requires.
fn pairs_nested(c: &CycleRef, a: (usize, usize), b: (usize, usize)) -> bool {
    let k = c.len();
    let (a1, a2) = (c.position(a.0).unwrap(), c.position(a.1).unwrap());
    let (b1, b2) = (c.position(b.0).unwrap(), c.position(b.1).unwrap());
    let within = |from: usize, to: usize, p: usize| -> bool { (p + k - from) % k < (to + k - from) % k && p != from };
    within(a1, a2, b1) == within(a1, a2, b2)
}

fn chord_structure(c: &CycleRef, a: usize, b: usize) -> CycleStructure {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let (i, j) = (c.position(lo).unwrap(), c.position(hi).unwrap());
    CycleStructure {
        kind: StructureKind::Chord,
        anchors: vec![lo, hi],
        interior: vec![],
        cells: vec![CycleRef::raw(c.arc(i, j)), CycleRef::raw(c.arc(j, i))],
    }
}

/// Claw or biclaw assembled from (interior vertex, anchor) spokes.
fn spoke_structure(
    kind: StructureKind,
    c: &CycleRef,
    spokes: &[(usize, usize)],
    mut interior: Vec<usize>,
) -> CycleStructure {
    let mut order: Vec<(usize, usize)> = spokes.to_vec();
    order.sort_by_key(|&(_, a)| c.position(a).unwrap());
    let least = order
        .iter()
        .enumerate()
        .min_by_key(|(_, &(_, a))| a)
        .map(|(i, _)| i)
        .unwrap();
    order.rotate_left(least);
    let anchors: Vec<usize> = order.iter().map(|&(_, a)| a).collect();
    let mut cells = Vec::new();
    for i in 0..order.len() {
        let (v1, a1) = order[i];
        let (v2, a2) = order[(i + 1) % order.len()];
        let mut cell = c.arc(c.position(a1).unwrap(), c.position(a2).unwrap());
        if v1 == v2 {
            cell.push(v1);
        } else {
            cell.push(v2);
            cell.push(v1);
        }
        cells.push(CycleRef::raw(cell));
    }
    interior.sort_unstable();
    CycleStructure {
        kind,
        anchors,
        interior,
        cells,
    }
}

fn triclaw_structure(c: &CycleRef, spokes: [(usize, usize); 3]) -> CycleStructure {
    let mut order = spokes.to_vec();
    order.sort_by_key(|&(_, a)| c.position(a).unwrap());
    let least = order
        .iter()
        .enumerate()
        .min_by_key(|(_, &(_, a))| a)
        .map(|(i, _)| i)
        .unwrap();
    order.rotate_left(least);
    let anchors: Vec<usize> = order.iter().map(|&(_, a)| a).collect();
    let mut interior: Vec<usize> = order.iter().map(|&(v, _)| v).collect();
    let mut cells = vec![CycleRef::raw(interior.clone())];
    for i in 0..3 {
        let (v1, a1) = order[i];
        let (v2, a2) = order[(i + 1) % 3];
        let mut cell = c.arc(c.position(a1).unwrap(), c.position(a2).unwrap());
        cell.push(v2);
        cell.push(v1);
        cells.push(CycleRef::raw(cell));
    }
    interior.sort_unstable();
    CycleStructure {
        kind: StructureKind::Triclaw,
        anchors,
        interior,
        cells,
    }
}

/// Good iff length at most 12 and no claw, biclaw or triclaw; longer cycles
/// are outside the taxonomy.
pub fn classify_cycle(g: &PlaneGraph, c: &CycleRef) -> CycleClass {
    if c.len() > 12 {
        return CycleClass::NotApplicable;
    }
    let witnesses = find_structures(
        g,
        c,
        &[
            StructureKind::Claw,
            StructureKind::Biclaw,
            StructureKind::Triclaw,
        ],
    );
    if witnesses.is_empty() {
        CycleClass::Good
    } else {
        CycleClass::Bad { witnesses }
    }
}

pub fn is_good_cycle(g: &PlaneGraph, c: &CycleRef) -> bool {
    matches!(classify_cycle(g, c), CycleClass::Good)
}

/// A 9-cycle is special when it carries a (3,8)-chord or a (5,5,5)-claw.
pub fn is_special_9cycle(
    g: &PlaneGraph,
    c: &CycleRef,
) -> Result<Option<CycleStructure>, StructureError> {
    if c.len() != 9 {
        return Err(StructureError::WrongLength(c.len(), 9));
    }
    let structures = find_structures(g, c, &[StructureKind::Chord, StructureKind::Claw]);
    Ok(structures.into_iter().find(|s| {
        let mut lens = s.cell_lengths();
        lens.sort_unstable();
        match s.kind {
            StructureKind::Chord => lens == vec![3, 8],
            StructureKind::Claw => lens == vec![5, 5, 5],
            _ => false,
        }
    }))
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub connected: bool,
    pub four_cycles: Vec<Vec<usize>>,
    pub six_cycles: Vec<Vec<usize>>,
    pub special_nine_cycles: Vec<Vec<usize>>,
    pub nine_cycles: Vec<Vec<usize>>,
    pub eight_cycles: Vec<Vec<usize>>,
    /// connected, no 4-cycles, no 6-cycles, no special 9-cycles
    pub member: bool,
    /// no cycles of length 4, 6 or 9
    pub free_4_6_9: bool,
    /// no cycles of length 4, 6 or 8
    pub free_4_6_8: bool,
}

/// Class membership report: 4-cycles, 6-cycles and special 9-cycles decide
/// membership; the 8- and 9-cycle lists support the two derived classes.
pub fn class_membership(g: &PlaneGraph) -> ClassReport {
    let cycles = g.cycles_up_to(9);
    let mut four = Vec::new();
    let mut six = Vec::new();
    let mut eight = Vec::new();
    let mut nine = Vec::new();
    let mut special = Vec::new();
    for cyc in cycles {
        match cyc.len() {
            4 => four.push(cyc),
            6 => six.push(cyc),
            8 => eight.push(cyc),
            9 => {
                let c = CycleRef::new(g, cyc.clone()).expect("enumerated cycle");
                if is_special_9cycle(g, &c).expect("length 9").is_some() {
                    special.push(cyc.clone());
                }
                nine.push(cyc);
            }
            _ => {}
        }
    }
    let member = four.is_empty() && six.is_empty() && special.is_empty();
    let free_4_6_9 = four.is_empty() && six.is_empty() && nine.is_empty();
    let free_4_6_8 = four.is_empty() && six.is_empty() && eight.is_empty();
    ClassReport {
        connected: true,
        four_cycles: four,
        six_cycles: six,
        special_nine_cycles: special,
        nine_cycles: nine,
        eight_cycles: eight,
        member,
        free_4_6_9,
        free_4_6_8,
    }
}

/// A path or a cycle, for the triangular test.
#[derive(Debug, Clone)]
pub enum EdgeSeq<'a> {
    Path(&'a [usize]),
    Cycle(&'a CycleRef),
}

impl EdgeSeq<'_> {
    fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            EdgeSeq::Path(p) => (0..p.len().saturating_sub(1))
                .map(|i| (p[i], p[i + 1]))
                .collect(),
            EdgeSeq::Cycle(c) => {
                let v = c.vertices();
                (0..v.len()).map(|i| (v[i], v[(i + 1) % v.len()])).collect()
            }
        }
    }

    fn vertex_set(&self) -> HashSet<usize> {
        match self {
            EdgeSeq::Path(p) => p.iter().copied().collect(),
            EdgeSeq::Cycle(c) => c.vertices().iter().copied().collect(),
        }
    }
}

/// Some triangle shares an edge with the path or cycle. Returns the triangle
/// as (edge endpoint, edge endpoint, apex).
pub fn is_triangular(g: &PlaneGraph, x: &EdgeSeq) -> Option<(usize, usize, usize)> {
    let verts = x.vertex_set();
    for (a, b) in x.edges() {
        for t in g.neighbors(a) {
            if t != b && g.adjacent(b, t) {
                if verts.len() == 3 && verts.contains(&t) {
                    continue; // that triangle is the cycle itself
                }
                return Some((a, b, t));
            }
        }
    }
    None
}

/// Some triangle of the closed exterior of `c` shares an edge with `c`.
pub fn is_ext_triangular(g: &PlaneGraph, c: &CycleRef) -> Option<(usize, usize, usize)> {
    let sides = cycle_sides(g, c);
    ext_triangular_with_sides(g, c, &sides)
}

/// Same as [`is_ext_triangular`] with precomputed sides.
pub fn ext_triangular_with_sides(
    g: &PlaneGraph,
    c: &CycleRef,
    sides: &CycleSides,
) -> Option<(usize, usize, usize)> {
    let inside_edges: HashSet<(usize, usize)> = sides.inside.edges.iter().copied().collect();
    let inside_vertices: HashSet<usize> = sides.inside.vertices.iter().copied().collect();
    let verts = c.vertices();
    for i in 0..verts.len() {
        let (a, b) = (verts[i], verts[(i + 1) % verts.len()]);
        for t in g.neighbors(a) {
            if t == b || !g.adjacent(b, t) {
                continue;
            }
            if inside_vertices.contains(&t) {
                continue;
            }
            if c.contains(t) {
                if c.len() == 3 {
                    continue; // the cycle itself
                }
                // apex on the cycle: both chords must avoid the inside
                if inside_edges.contains(&ordered(a, t)) || inside_edges.contains(&ordered(b, t)) {
                    continue;
                }
            }
            return Some((a, b, t));
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct SplittingPath {
    /// Endpoint, interior vertices, endpoint.
    pub path: Vec<usize>,
    /// The two cycles the path cuts the host cycle into.
    pub sides: (CycleRef, CycleRef),
}

impl SplittingPath {
    /// Edge count of the path.
    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// All splitting paths of `d` with between 2 and `max_len` edges: endpoints
/// on `d`, all other vertices strictly inside.
pub fn splitting_paths(g: &PlaneGraph, d: &CycleRef, max_len: usize) -> Vec<SplittingPath> {
    let sides = cycle_sides(g, d);
    let inside: HashSet<usize> = sides.inside.vertices.iter().copied().collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    for &s in d.vertices() {
        let mut path = vec![s];
        dfs_split(g, d, &inside, max_len, &mut path, &mut found);
    }
    found.sort();
    found.dedup();
    found
        .into_iter()
        .map(|path| {
            let sides = split_sides(d, &path);
            SplittingPath { path, sides }
        })
        .collect()
}

fn dfs_split(
    g: &PlaneGraph,
    d: &CycleRef,
    inside: &HashSet<usize>,
    max_len: usize,
    path: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for u in g.neighbors(last) {
        if d.contains(u) {
            // canonical direction only, and at least one interior vertex
            if path.len() >= 2 && u != path[0] && path[0] < u {
                let mut p = path.clone();
                p.push(u);
                found.push(p);
            }
            continue;
        }
        if inside.contains(&u) && !path.contains(&u) && path.len() <= max_len - 1 {
            path.push(u);
            dfs_split(g, d, inside, max_len, path, found);
            path.pop();
        }
    }
}

fn split_sides(d: &CycleRef, path: &[usize]) -> (CycleRef, CycleRef) {
    let s = d.position(path[0]).unwrap();
    let t = d.position(*path.last().unwrap()).unwrap();
    let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
    let mut one = d.arc(s, t);
    one.extend(interior.iter().rev());
    let mut two = d.arc(t, s);
    two.extend(interior.iter());
    (CycleRef::raw(one), CycleRef::raw(two))
}

/// The length alternative the splitting-path analysis gives for hosts with
/// the full reduction machinery available: one side must be short relative
/// to the path.
pub fn splitting_alternative_holds(p_len: usize, d1: usize, d2: usize) -> bool {
    let short = d1.min(d2);
    match p_len {
        2 => short == 3,
        3 => short == 5,
        4 => short == 5 || short == 7,
        5 => (7..=9).contains(&short),
        _ => true,
    }
}
