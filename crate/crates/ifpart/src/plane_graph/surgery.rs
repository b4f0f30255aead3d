//! Pure graph surgeries: delete internal vertices, then optionally identify
//! two co-facial vertices, insert an edge inside a face, or identify two
//! co-facial edges. Each returns a fresh graph plus the old->new vertex map.

use super::{FaceId, GraphError, PlaneGraph};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceSelector {
    /// First face (ascending id) of the post-deletion graph containing the
    /// named vertices on its boundary.
    Auto,
    /// Explicit face id in the post-deletion graph.
    Id(FaceId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurgerySpec {
    DeleteVertices {
        delete: Vec<usize>,
    },
    /// Delete, then identify `keep.0` with `keep.1` inside a shared face.
    DeleteAndIdentifyVertices {
        delete: Vec<usize>,
        keep: (usize, usize),
    },
    /// Delete, then insert the edge `endpoints` inside the selected face.
    DeleteAndAddEdge {
        delete: Vec<usize>,
        endpoints: (usize, usize),
        face: FaceSelector,
    },
    /// Delete, then identify edge `first` with edge `second` so that
    /// `first.0` merges with `second.0` and `first.1` with `second.1`.
    DeleteAndIdentifyEdges {
        delete: Vec<usize>,
        first: (usize, usize),
        second: (usize, usize),
    },
}

impl SurgerySpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            SurgerySpec::DeleteVertices { .. } => "delete",
            SurgerySpec::DeleteAndIdentifyVertices { .. } => "delete+identify-vertices",
            SurgerySpec::DeleteAndAddEdge { .. } => "delete+add-edge",
            SurgerySpec::DeleteAndIdentifyEdges { .. } => "delete+identify-edges",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("named vertices share no face")]
    NotCoFacial,
    #[error("operation would create a loop")]
    WouldCreateLoop,
    #[error("operation would identify or duplicate edges")]
    WouldIdentifyEdges,
    #[error("bad surgery spec: {0}")]
    BadSpec(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone)]
pub struct SurgeryOutcome {
    pub graph: PlaneGraph,
    /// old vertex -> new vertex; deleted vertices map to None, identified
    /// vertices share an image.
    pub vertex_map: Vec<Option<usize>>,
}

impl PlaneGraph {
    pub fn apply_surgery(&self, spec: &SurgerySpec) -> Result<SurgeryOutcome, SurgeryError> {
        let delete = match spec {
            SurgerySpec::DeleteVertices { delete }
            | SurgerySpec::DeleteAndIdentifyVertices { delete, .. }
            | SurgerySpec::DeleteAndAddEdge { delete, .. }
            | SurgerySpec::DeleteAndIdentifyEdges { delete, .. } => delete,
        };
        let del: HashSet<usize> = delete.iter().copied().collect();
        for &v in delete {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange(v).into());
            }
        }
        let keep: Vec<usize> = (0..self.n()).filter(|v| !del.contains(v)).collect();
        if keep.is_empty() {
            return Err(SurgeryError::BadSpec("cannot delete every vertex".into()));
        }
        let (mid, map0) = self.induced(&keep)?;

        let touch = |v: usize| -> Result<usize, SurgeryError> {
            map0.get(v)
                .copied()
                .flatten()
                .ok_or_else(|| SurgeryError::BadSpec(format!("vertex {v} deleted or out of range")))
        };

        let (graph, map1) = match spec {
            SurgerySpec::DeleteVertices { .. } => {
                let n = mid.n();
                (mid, (0..n).map(Some).collect())
            }
            SurgerySpec::DeleteAndIdentifyVertices { keep: (a, b), .. } => {
                identify_vertices(&mid, touch(*a)?, touch(*b)?)?
            }
            SurgerySpec::DeleteAndAddEdge {
                endpoints: (a, b),
                face,
                ..
            } => add_edge(&mid, touch(*a)?, touch(*b)?, face)?,
            SurgerySpec::DeleteAndIdentifyEdges { first, second, .. } => identify_edges(
                &mid,
                (touch(first.0)?, touch(first.1)?),
                (touch(second.0)?, touch(second.1)?),
            )?,
        };

        let vertex_map: Vec<Option<usize>> = (0..self.n())
            .map(|v| map0[v].and_then(|w| map1[w]))
            .collect();
        let graph = carry_outer_face(self, graph, &vertex_map);
        Ok(SurgeryOutcome { graph, vertex_map })
    }
}

/// Re-designate the unbounded face of the surgered graph from the first
/// surviving directed edge of the old unbounded face walk.
fn carry_outer_face(
    old: &PlaneGraph,
    new: PlaneGraph,
    map: &[Option<usize>],
) -> PlaneGraph {
    for (u, v) in old.face(old.outer_face()).directed_edges() {
        if let (Some(a), Some(b)) = (map[u], map[v]) {
            if a != b && new.adjacent(a, b) {
                if let Some(f) = new.face_of_edge(a, b) {
                    return new.with_outer_face(f).expect("face id from lookup");
                }
            }
        }
    }
    new
}

/// Corner of `v` on face `f`: the first walk occurrence, reported as the
/// incoming neighbor (the walk predecessor of `v`).
fn corner_in(g: &PlaneGraph, f: FaceId, v: usize) -> Option<usize> {
    let walk = &g.face(f).walk;
    let i = walk.iter().position(|&x| x == v)?;
    Some(walk[(i + walk.len() - 1) % walk.len()])
}

/// Cyclic tail of `rot` starting just after `after`, excluding `after`.
fn tail_after(rot: &[usize], after: usize) -> Vec<usize> {
    let i = rot.iter().position(|&x| x == after).expect("neighbor present");
    (1..rot.len()).map(|d| rot[(i + d) % rot.len()]).collect()
}

fn identify_vertices(
    g: &PlaneGraph,
    a: usize,
    b: usize,
) -> Result<(PlaneGraph, Vec<Option<usize>>), SurgeryError> {
    if a == b {
        return Err(SurgeryError::BadSpec("identifying a vertex with itself".into()));
    }
    if g.adjacent(a, b) {
        return Err(SurgeryError::WouldCreateLoop);
    }
    if g.neighbors(a).any(|x| g.adjacent(b, x)) {
        return Err(SurgeryError::WouldIdentifyEdges);
    }
    let shared = g
        .faces()
        .iter()
        .find(|f| f.contains_vertex(a) && f.contains_vertex(b))
        .map(|f| f.id)
        .ok_or(SurgeryError::NotCoFacial)?;
    let xa = corner_in(g, shared, a).expect("a on face");
    let xb = corner_in(g, shared, b).expect("b on face");
    // arc of each rotation starting at the corner's outgoing edge
    let arc_a = rotate_to_succ(g.rotation(a), xa);
    let arc_b = rotate_to_succ(g.rotation(b), xb);
    let mut merged = arc_a;
    merged.extend(arc_b);

    let mut rotations: Vec<Vec<usize>> = g.rotations().to_vec();
    rotations[a] = merged;
    for rot in rotations.iter_mut() {
        for x in rot.iter_mut() {
            if *x == b {
                *x = a;
            }
        }
    }
    let (graph, mut map) = compact(rotations, &[b])?;
    map[b] = map[a];
    Ok((graph, map))
}

/// Rotate a rotation list so it starts at the successor of `x`.
fn rotate_to_succ(rot: &[usize], x: usize) -> Vec<usize> {
    let i = rot.iter().position(|&y| y == x).expect("neighbor present");
    (1..=rot.len()).map(|d| rot[(i + d) % rot.len()]).collect()
}

fn add_edge(
    g: &PlaneGraph,
    a: usize,
    b: usize,
    face: &FaceSelector,
) -> Result<(PlaneGraph, Vec<Option<usize>>), SurgeryError> {
    if a == b {
        return Err(SurgeryError::WouldCreateLoop);
    }
    if g.adjacent(a, b) {
        return Err(SurgeryError::WouldIdentifyEdges);
    }
    let f = match face {
        FaceSelector::Id(f) => {
            if *f >= g.faces().len() {
                return Err(GraphError::NoSuchFace(*f).into());
            }
            if !(g.face(*f).contains_vertex(a) && g.face(*f).contains_vertex(b)) {
                return Err(SurgeryError::NotCoFacial);
            }
            *f
        }
        FaceSelector::Auto => g
            .faces()
            .iter()
            .find(|f| f.contains_vertex(a) && f.contains_vertex(b))
            .map(|f| f.id)
            .ok_or(SurgeryError::NotCoFacial)?,
    };
    let xa = corner_in(g, f, a).expect("a on face");
    let xb = corner_in(g, f, b).expect("b on face");
    let mut rotations: Vec<Vec<usize>> = g.rotations().to_vec();
    insert_after(&mut rotations[a], xa, b);
    insert_after(&mut rotations[b], xb, a);
    let n = rotations.len();
    Ok((PlaneGraph::build(rotations)?, (0..n).map(Some).collect()))
}

fn insert_after(rot: &mut Vec<usize>, after: usize, item: usize) {
    let i = rot.iter().position(|&y| y == after).expect("neighbor present");
    rot.insert(i + 1, item);
}

fn identify_edges(
    g: &PlaneGraph,
    first: (usize, usize),
    second: (usize, usize),
) -> Result<(PlaneGraph, Vec<Option<usize>>), SurgeryError> {
    let ends = [first.0, first.1, second.0, second.1];
    let distinct: HashSet<usize> = ends.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(SurgeryError::BadSpec("edge endpoints are not distinct".into()));
    }
    if !g.adjacent(first.0, first.1) || !g.adjacent(second.0, second.1) {
        return Err(SurgeryError::BadSpec("named edges are absent".into()));
    }

    // locate a face whose walk traverses the two edges with opposite senses
    let mut found = None;
    'faces: for f in g.faces() {
        let walk: Vec<(usize, usize)> = f.directed_edges().collect();
        let has = |e: (usize, usize)| walk.iter().any(|&d| d == e);
        if has((first.0, first.1)) && has((second.1, second.0)) {
            found = Some((first, second));
            break 'faces;
        }
        if has((first.1, first.0)) && has((second.0, second.1)) {
            found = Some(((second.0, second.1), (first.0, first.1)));
            break 'faces;
        }
    }
    // after the swap in the second pattern, (u1,u2) is walk-forward and
    // (v2,v1) walk-backward, and u1 merges with v1, u2 with v2 either way
    let ((u1, u2), (v1, v2)) = found.ok_or(SurgeryError::NotCoFacial)?;

    if g.adjacent(u1, v1) || g.adjacent(u2, v2) {
        return Err(SurgeryError::WouldCreateLoop);
    }

    let mut rot_w1 = vec![u2];
    rot_w1.extend(tail_after(g.rotation(v1), v2));
    rot_w1.extend(tail_after(g.rotation(u1), u2));
    let mut rot_w2 = vec![u1];
    rot_w2.extend(tail_after(g.rotation(v2), v1));
    rot_w2.extend(tail_after(g.rotation(u2), u1));

    let mut rotations: Vec<Vec<usize>> = g.rotations().to_vec();
    rotations[u1] = rot_w1;
    rotations[u2] = rot_w2;
    for rot in rotations.iter_mut() {
        for x in rot.iter_mut() {
            if *x == v1 {
                *x = u1;
            } else if *x == v2 {
                *x = u2;
            }
        }
    }
    for (v, rot) in rotations.iter().enumerate() {
        if v == v1 || v == v2 {
            continue; // dropped below, stale contents
        }
        if rot.contains(&v) {
            return Err(SurgeryError::WouldCreateLoop);
        }
        let set: HashSet<usize> = rot.iter().copied().collect();
        if set.len() != rot.len() {
            return Err(SurgeryError::WouldIdentifyEdges);
        }
    }
    let (graph, mut map) = compact(rotations, &[v1, v2])?;
    map[v1] = map[u1];
    map[v2] = map[u2];
    Ok((graph, map))
}

/// Drop the named (already merged-away) vertices and reindex.
fn compact(
    rotations: Vec<Vec<usize>>,
    drop: &[usize],
) -> Result<(PlaneGraph, Vec<Option<usize>>), SurgeryError> {
    let n = rotations.len();
    let dropset: HashSet<usize> = drop.iter().copied().collect();
    let mut map: Vec<Option<usize>> = Vec::with_capacity(n);
    let mut next = 0usize;
    for v in 0..n {
        if dropset.contains(&v) {
            map.push(None);
        } else {
            map.push(Some(next));
            next += 1;
        }
    }
    let new_rot: Vec<Vec<usize>> = (0..n)
        .filter(|v| !dropset.contains(v))
        .map(|v| {
            rotations[v]
                .iter()
                .map(|&u| map[u].expect("merged targets kept"))
                .collect()
        })
        .collect();
    Ok((PlaneGraph::build(new_rot)?, map))
}
