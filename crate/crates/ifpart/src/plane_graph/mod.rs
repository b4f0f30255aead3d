//! Combinatorial-embedding graph core: rotation systems, face tracing,
//! cycle sides, graph surgeries and planar_code I/O.

mod code;
mod surgery;

pub use code::{parse_planar_code, serialize_planar_code, CodeError, PLANAR_CODE_HEADER};
pub use surgery::{FaceSelector, SurgeryError, SurgeryOutcome, SurgerySpec};

use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

pub type FaceId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("rotation symmetry broken between vertices {0} and {1}")]
    AsymmetricRotation(usize, usize),
    #[error("loop or repeated neighbor at vertex {0}")]
    LoopOrMultiEdge(usize),
    #[error("Euler check failed: n={n} m={m} f={f}")]
    EulerViolation { n: usize, m: usize, f: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("no face with id {0}")]
    NoSuchFace(usize),
    #[error("vertex list does not form a cycle of the graph")]
    NotACycle,
    #[error("graph must have at least one vertex")]
    Empty,
}

/// Closed boundary walk of a face, as the vertex sequence visited by the
/// next-edge rule. `walk[i] -> walk[i+1]` (cyclically) are the directed
/// edges of the face. Empty for the single face of an edgeless K1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub id: FaceId,
    pub walk: Vec<usize>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.walk.contains(&v)
    }

    /// Directed edges of the walk in order.
    pub fn directed_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.walk.len();
        (0..k).map(move |i| (self.walk[i], self.walk[(i + 1) % k]))
    }

    /// The walk is a simple cycle: every vertex visited once.
    pub fn is_simple_cycle(&self) -> bool {
        if self.walk.len() < 3 {
            return false;
        }
        let set: HashSet<usize> = self.walk.iter().copied().collect();
        set.len() == self.walk.len()
    }
}

/// A simple connected plane graph given by clockwise rotations with a
/// designated unbounded face. Immutable after construction; surgeries
/// build new values.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    faces: Vec<FaceWalk>,
    outer_face: FaceId,
    edge_count: usize,
    face_of: HashMap<(usize, usize), FaceId>,
}

impl PlaneGraph {
    /// Build a plane graph from per-vertex clockwise neighbor lists.
    ///
    /// Faces are traced with the next-edge rule: the successor of the
    /// directed edge (u,v) is (v,w) where w follows u in the rotation at v.
    /// The unbounded face defaults to a maximum-length face (smallest id on
    /// ties); use [`PlaneGraph::with_outer_face`] to override.
    pub fn build(rotations: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotations.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (v, rot) in rotations.iter().enumerate() {
            let mut seen = HashSet::new();
            for &u in rot {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange(u));
                }
                if u == v || !seen.insert(u) {
                    return Err(GraphError::LoopOrMultiEdge(v));
                }
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                if !rotations[u].contains(&v) {
                    return Err(GraphError::AsymmetricRotation(v, u));
                }
            }
        }
        let edge_count = rotations.iter().map(Vec::len).sum::<usize>() / 2;

        // connectivity
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &rotations[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        if reached != n {
            return Err(GraphError::Disconnected);
        }

        let (faces, face_of) = trace_faces(&rotations);
        let f = faces.len();
        if n + f != edge_count + 2 {
            return Err(GraphError::EulerViolation { n, m: edge_count, f });
        }

        let outer_face = faces
            .iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b.id.cmp(&a.id)))
            .map(|fw| fw.id)
            .unwrap_or(0);
        Ok(PlaneGraph {
            rotations,
            faces,
            outer_face,
            edge_count,
            face_of,
        })
    }

    /// Same embedding with an explicitly designated unbounded face.
    pub fn with_outer_face(mut self, face: FaceId) -> Result<Self, GraphError> {
        if face >= self.faces.len() {
            return Err(GraphError::NoSuchFace(face));
        }
        self.outer_face = face;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.rotations.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotations[v].iter().copied()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rotations[u].contains(&v)
    }

    /// Undirected edges, each reported once with the smaller endpoint first.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rotations
            .iter()
            .enumerate()
            .flat_map(|(v, rot)| rot.iter().filter(move |&&u| v < u).map(move |&u| (v, u)))
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &FaceWalk {
        &self.faces[id]
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    /// Face on the left of the directed edge (u,v) under the tracing rule.
    pub fn face_of_edge(&self, u: usize, v: usize) -> Option<FaceId> {
        self.face_of.get(&(u, v)).copied()
    }

    /// Faces incident to a vertex, deduplicated, ascending.
    pub fn faces_at(&self, v: usize) -> Vec<FaceId> {
        let mut out: Vec<FaceId> = self
            .rotations[v]
            .iter()
            .map(|&u| self.face_of[&(v, u)])
            .collect();
        out.sort_unstable();
        out.dedup();
        if out.is_empty() {
            // edgeless K1: the single face
            out.push(self.outer_face);
        }
        out
    }

    /// Successor of u in the clockwise rotation at v.
    pub fn rot_succ(&self, v: usize, u: usize) -> Option<usize> {
        let rot = &self.rotations[v];
        let i = rot.iter().position(|&x| x == u)?;
        Some(rot[(i + 1) % rot.len()])
    }

    /// All simple cycles of length at most `max_len`, each reported once as a
    /// canonical vertex list (smallest vertex first, smaller second vertex of
    /// the two walk directions), sorted.
    pub fn cycles_up_to(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let n = self.n();
        let mut path: Vec<usize> = Vec::new();
        let mut on_path = vec![false; n];
        for start in 0..n {
            path.push(start);
            on_path[start] = true;
            self.cycle_dfs(start, start, max_len, &mut path, &mut on_path, &mut out);
            on_path[start] = false;
            path.pop();
        }
        out.sort();
        out.dedup();
        out
    }

    fn cycle_dfs(
        &self,
        start: usize,
        v: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for &u in &self.rotations[v] {
            if u == start && path.len() >= 3 {
                // canonical direction: second vertex smaller than last
                if path[1] < path[path.len() - 1] {
                    out.push(path.clone());
                }
            } else if !on_path[u] && u > start && path.len() < max_len {
                path.push(u);
                on_path[u] = true;
                self.cycle_dfs(start, u, max_len, path, on_path, out);
                on_path[u] = false;
                path.pop();
            }
        }
    }

    /// Induced subgraph on `keep` (ascending rotation order preserved).
    /// Returns the subgraph and the old->new vertex map.
    pub fn induced(&self, keep: &[usize]) -> Result<(PlaneGraph, Vec<Option<usize>>), GraphError> {
        let mut map = vec![None; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            if old >= self.n() {
                return Err(GraphError::VertexOutOfRange(old));
            }
            map[old] = Some(new);
        }
        let rotations: Vec<Vec<usize>> = keep
            .iter()
            .map(|&old| {
                self.rotations[old]
                    .iter()
                    .filter_map(|&u| map[u])
                    .collect()
            })
            .collect();
        Ok((PlaneGraph::build(rotations)?, map))
    }

    /// DOT export for debugging; faces listed as comments.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph g {\n");
        for v in 0..self.n() {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        for f in &self.faces {
            let mark = if f.id == self.outer_face { " (outer)" } else { "" };
            s.push_str(&format!("  // face {}{}: {:?}\n", f.id, mark, f.walk));
        }
        s.push_str("}\n");
        s
    }
}

fn trace_faces(
    rotations: &[Vec<usize>],
) -> (Vec<FaceWalk>, HashMap<(usize, usize), FaceId>) {
    let mut face_of: HashMap<(usize, usize), FaceId> = HashMap::new();
    let mut faces = Vec::new();
    for v in 0..rotations.len() {
        for &u in &rotations[v] {
            if face_of.contains_key(&(v, u)) {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let (mut a, mut b) = (v, u);
            loop {
                walk.push(a);
                face_of.insert((a, b), id);
                let rot = &rotations[b];
                let i = rot.iter().position(|&x| x == a).expect("symmetric");
                let c = rot[(i + 1) % rot.len()];
                a = b;
                b = c;
                if (a, b) == (v, u) {
                    break;
                }
            }
            faces.push(FaceWalk { id, walk });
        }
    }
    if faces.is_empty() {
        // edgeless single vertex: one face, empty walk
        faces.push(FaceWalk { id: 0, walk: vec![] });
    }
    (faces, face_of)
}

/// An embedded cycle: distinct vertices, cyclically adjacent in the host.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleRef {
    vertices: Vec<usize>,
}

impl serde::Serialize for CycleRef {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.vertices.serialize(s)
    }
}

impl CycleRef {
    pub fn new(g: &PlaneGraph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::NotACycle);
        }
        let set: HashSet<usize> = vertices.iter().copied().collect();
        if set.len() != vertices.len() {
            return Err(GraphError::NotACycle);
        }
        for i in 0..vertices.len() {
            let (a, b) = (vertices[i], vertices[(i + 1) % vertices.len()]);
            if a >= g.n() || b >= g.n() {
                return Err(GraphError::VertexOutOfRange(a.max(b)));
            }
            if !g.adjacent(a, b) {
                return Err(GraphError::NotACycle);
            }
        }
        Ok(CycleRef { vertices })
    }

    /// Wrap a vertex list known to be a cycle (cells of detected structures,
    /// face boundaries of 2-connected hosts).
    pub fn raw(vertices: Vec<usize>) -> Self {
        CycleRef { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Undirected edge set, smaller endpoint first.
    pub fn edge_set(&self) -> HashSet<(usize, usize)> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| ordered(self.vertices[i], self.vertices[(i + 1) % k]))
            .collect()
    }

    /// Number of edges on the arc walking forward from position i to position j.
    pub fn arc_len(&self, i: usize, j: usize) -> usize {
        let k = self.vertices.len();
        (j + k - i) % k
    }

    /// Vertices of the arc walking forward from position i to position j, inclusive.
    pub fn arc(&self, i: usize, j: usize) -> Vec<usize> {
        let k = self.vertices.len();
        let mut out = Vec::new();
        let mut p = i;
        loop {
            out.push(self.vertices[p]);
            if p == j {
                break;
            }
            p = (p + 1) % k;
        }
        out
    }

    /// Canonical form: lexicographically least rotation over both directions.
    pub fn canonical(&self) -> Vec<usize> {
        let k = self.vertices.len();
        let start = (0..k).min_by_key(|&i| self.vertices[i]).unwrap();
        let fwd: Vec<usize> = (0..k).map(|d| self.vertices[(start + d) % k]).collect();
        let bwd: Vec<usize> = (0..k).map(|d| self.vertices[(start + k - d) % k]).collect();
        fwd.min(bwd)
    }
}

pub fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// One side of a cycle: faces, vertices and edges strictly on that side.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SideSet {
    pub faces: Vec<FaceId>,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct CycleSides {
    pub inside: SideSet,
    pub outside: SideSet,
}

/// Partition faces, vertices and edges of `g` by the side of `c` they lie on.
/// The outside is the side reachable from the unbounded face in the dual
/// without crossing edges of `c`; vertices and edges of `c` itself belong to
/// neither side.
pub fn cycle_sides(g: &PlaneGraph, c: &CycleRef) -> CycleSides {
    let cycle_edges = c.edge_set();
    let nf = g.faces().len();
    let mut outside_face = vec![false; nf];
    let mut queue = VecDeque::from([g.outer_face()]);
    outside_face[g.outer_face()] = true;
    while let Some(f) = queue.pop_front() {
        for (u, v) in g.face(f).directed_edges() {
            if cycle_edges.contains(&ordered(u, v)) {
                continue;
            }
            let g2 = g.face_of_edge(v, u).expect("twin edge");
            if !outside_face[g2] {
                outside_face[g2] = true;
                queue.push_back(g2);
            }
        }
    }

    let mut inside = SideSet::default();
    let mut outside = SideSet::default();
    for f in 0..nf {
        if outside_face[f] {
            outside.faces.push(f);
        } else {
            inside.faces.push(f);
        }
    }
    for v in 0..g.n() {
        if c.contains(v) {
            continue;
        }
        let fs = g.faces_at(v);
        let side_out = outside_face[fs[0]];
        debug_assert!(fs.iter().all(|&f| outside_face[f] == side_out));
        if side_out {
            outside.vertices.push(v);
        } else {
            inside.vertices.push(v);
        }
    }
    for (u, v) in g.edges() {
        if cycle_edges.contains(&(u, v)) {
            continue;
        }
        let f = g.face_of_edge(u, v).expect("edge face");
        let tw = g.face_of_edge(v, u).expect("twin face");
        debug_assert_eq!(outside_face[f], outside_face[tw]);
        if outside_face[f] {
            outside.edges.push((u, v));
        } else {
            inside.edges.push((u, v));
        }
    }
    CycleSides { inside, outside }
}

/// Extract one closed side of a cycle as a standalone plane graph whose
/// unbounded face is bounded by the cycle. Returns the graph, the old->new
/// vertex map, and the image of the cycle.
pub fn side_subgraph(
    g: &PlaneGraph,
    c: &CycleRef,
    inside: bool,
) -> Result<(PlaneGraph, Vec<Option<usize>>, CycleRef), GraphError> {
    let sides = cycle_sides(g, c);
    let side = if inside { &sides.inside } else { &sides.outside };
    let mut keep: Vec<usize> = c.vertices().to_vec();
    keep.extend(side.vertices.iter().copied());
    keep.sort_unstable();
    let mut map = vec![None; g.n()];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = Some(new);
    }
    // keep only edges of C and edges on the chosen side
    let edge_ok: HashSet<(usize, usize)> = c
        .edge_set()
        .into_iter()
        .chain(side.edges.iter().copied())
        .collect();
    let rotations: Vec<Vec<usize>> = keep
        .iter()
        .map(|&old| {
            g.rotation(old)
                .iter()
                .filter(|&&u| edge_ok.contains(&ordered(old, u)))
                .map(|&u| map[u].expect("edge endpoint kept"))
                .collect()
        })
        .collect();
    let sub = PlaneGraph::build(rotations)?;
    let image: Vec<usize> = c.vertices().iter().map(|&v| map[v].unwrap()).collect();
    let c_img = CycleRef::new(&sub, image)?;
    // the unbounded face of the side graph is the face bounded by the cycle
    // on the removed side: designate a candidate and verify the kept side
    // lands in its interior
    let want: HashSet<(usize, usize)> = c_img.edge_set();
    let outer = sub
        .faces()
        .iter()
        .filter(|f| {
            f.len() == c_img.len()
                && f.directed_edges().all(|(u, v)| want.contains(&ordered(u, v)))
        })
        .map(|f| f.id)
        .find(|&id| side_check(&sub, id, &c_img, side.vertices.len()))
        .ok_or(GraphError::NotACycle)?;
    Ok((sub.with_outer_face(outer)?, map, c_img))
}

fn side_check(sub: &PlaneGraph, outer: FaceId, c: &CycleRef, expect_inside: usize) -> bool {
    let probe = sub.clone().with_outer_face(outer).expect("face id");
    let sides = cycle_sides(&probe, c);
    sides.inside.vertices.len() == expect_inside
}


#[cfg(test)]
mod tests;
