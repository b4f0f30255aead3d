use super::tests_support::{c9_claw, cn, k3};
use super::*;

#[test]
fn k3_builds() {
    let g = k3();
    assert_eq!(g.n(), 3);
    assert_eq!(g.m(), 3);
    assert_eq!(g.faces().len(), 2);
    assert!(g.faces().iter().all(|f| f.len() == 3));
}

#[test]
fn c9_two_faces() {
    let g = cn(9);
    assert_eq!(g.faces().len(), 2);
    assert!(g.faces().iter().all(|f| f.len() == 9));
}

#[test]
fn single_vertex_one_face() {
    let g = PlaneGraph::build(vec![vec![]]).unwrap();
    assert_eq!(g.faces().len(), 1);
    assert!(g.face(0).is_empty());
}

#[test]
fn tree_one_face() {
    // path 0-1-2
    let g = PlaneGraph::build(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
    assert_eq!(g.faces().len(), 1);
    assert_eq!(g.face(0).len(), 4);
}

#[test]
fn c9_claw_faces_by_hand_walk() {
    // hand trace: three 5-faces [u a .. a+3] and the 9-face
    let g = c9_claw();
    assert_eq!(g.faces().len(), 4);
    let mut lens: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
    lens.sort_unstable();
    assert_eq!(lens, vec![5, 5, 5, 9]);
    // default outer face is the unique longest one
    assert_eq!(g.face(g.outer_face()).len(), 9);
}

#[test]
fn face_tracing_covers_each_directed_edge_once() {
    for g in [k3(), cn(9), c9_claw()] {
        let total: usize = g.faces().iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * g.m());
        let mut seen = HashSet::new();
        for f in g.faces() {
            for e in f.directed_edges() {
                assert!(seen.insert(e), "directed edge {e:?} on two faces");
            }
        }
    }
}

#[test]
fn build_rejects_asymmetric() {
    let err = PlaneGraph::build(vec![vec![1], vec![]]).unwrap_err();
    assert!(matches!(err, GraphError::AsymmetricRotation(..)));
}

#[test]
fn build_rejects_loop_and_dup() {
    let err = PlaneGraph::build(vec![vec![0]]).unwrap_err();
    assert!(matches!(err, GraphError::LoopOrMultiEdge(0)));
    let err = PlaneGraph::build(vec![vec![1, 1], vec![0, 0]]).unwrap_err();
    assert!(matches!(err, GraphError::LoopOrMultiEdge(_)));
}

#[test]
fn build_rejects_disconnected() {
    let err = PlaneGraph::build(vec![vec![1], vec![0], vec![3], vec![2]]).unwrap_err();
    assert_eq!(err, GraphError::Disconnected);
}

#[test]
fn build_rejects_nonplanar_rotation() {
    // K5 with ascending rotations is not a plane embedding
    let rot: Vec<Vec<usize>> = (0..5)
        .map(|v| (0..5).filter(|&u| u != v).collect())
        .collect();
    let err = PlaneGraph::build(rot).unwrap_err();
    assert!(matches!(err, GraphError::EulerViolation { .. }));
}

#[test]
fn planar_code_parses_k3() {
    let bytes = [0x03, 0x02, 0x03, 0x00, 0x03, 0x01, 0x00, 0x01, 0x02, 0x00];
    let gs = parse_planar_code(&bytes).unwrap();
    assert_eq!(gs.len(), 1);
    assert_eq!(gs[0].n(), 3);
    assert_eq!(gs[0].rotation(0), &[1, 2]);
    assert_eq!(gs[0].rotation(1), &[2, 0]);
    assert_eq!(gs[0].rotation(2), &[0, 1]);
}

#[test]
fn planar_code_empty_stream() {
    assert!(parse_planar_code(b"").unwrap().is_empty());
    let gs = parse_planar_code(PLANAR_CODE_HEADER).unwrap();
    assert!(gs.is_empty());
}

#[test]
fn planar_code_two_records() {
    let one = [0x03, 0x02, 0x03, 0x00, 0x03, 0x01, 0x00, 0x01, 0x02, 0x00];
    let mut two = one.to_vec();
    two.extend_from_slice(&one);
    let gs = parse_planar_code(&two).unwrap();
    assert_eq!(gs.len(), 2);
    assert_eq!(gs[0].rotations(), gs[1].rotations());
}

#[test]
fn planar_code_round_trip() {
    let gs = vec![k3(), cn(9), c9_claw()];
    let bytes = serialize_planar_code(&gs).unwrap();
    assert!(bytes.starts_with(PLANAR_CODE_HEADER));
    let back = parse_planar_code(&bytes).unwrap();
    assert_eq!(back.len(), 3);
    for (a, b) in gs.iter().zip(&back) {
        assert_eq!(a.rotations(), b.rotations());
    }
    let again = serialize_planar_code(&back).unwrap();
    assert_eq!(bytes, again);
}

#[test]
fn planar_code_serialize_empty() {
    assert_eq!(serialize_planar_code(&[]).unwrap(), PLANAR_CODE_HEADER);
}

#[test]
fn planar_code_errors() {
    assert_eq!(
        parse_planar_code(b">>planar_cod!<<").unwrap_err(),
        CodeError::BadHeader
    );
    assert!(matches!(
        parse_planar_code(&[0x03, 0x02]),
        Err(CodeError::TruncatedRecord(_))
    ));
    assert!(matches!(
        parse_planar_code(&[0x02, 0x03, 0x00, 0x01, 0x00]),
        Err(CodeError::VertexOutOfRange { .. })
    ));
    assert!(matches!(
        parse_planar_code(&[0x00]),
        Err(CodeError::UnsupportedOrder(0))
    ));
}

#[test]
fn cycle_ref_validates() {
    let g = c9_claw();
    assert!(CycleRef::new(&g, vec![0, 1, 2]).is_err()); // 0-2 not adjacent
    assert!(CycleRef::new(&g, (0..9).collect()).is_ok());
    assert!(CycleRef::new(&g, vec![0, 1, 1]).is_err());
    assert!(CycleRef::new(&g, vec![0, 1]).is_err());
}

#[test]
fn cycle_sides_plain_c9() {
    let g = cn(9);
    let c = CycleRef::new(&g, (0..9).collect()).unwrap();
    let s = cycle_sides(&g, &c);
    assert_eq!(s.outside.faces, vec![g.outer_face()]);
    assert_eq!(s.inside.faces.len(), 1);
    assert!(s.inside.vertices.is_empty() && s.outside.vertices.is_empty());
    assert!(s.inside.edges.is_empty() && s.outside.edges.is_empty());
}

#[test]
fn cycle_sides_claw_by_hand_dual_bfs() {
    let g = c9_claw();
    let c = CycleRef::new(&g, (0..9).collect()).unwrap();
    let s = cycle_sides(&g, &c);
    assert_eq!(s.inside.vertices, vec![9]);
    assert_eq!(s.inside.faces.len(), 3);
    assert_eq!(s.inside.edges, vec![(0, 9), (3, 9), (6, 9)]);
    assert!(s.outside.vertices.is_empty());

    // a 5-cell is facial: one face inside, no vertices
    let cell = CycleRef::new(&g, vec![9, 0, 1, 2, 3]).unwrap();
    let s = cycle_sides(&g, &cell);
    assert_eq!(s.inside.faces.len(), 1);
    assert!(s.inside.vertices.is_empty());
    assert_eq!(s.outside.vertices.len(), 5);
}

#[test]
fn induced_subgraph_drops_vertex() {
    let g = c9_claw();
    let keep: Vec<usize> = (0..9).collect();
    let (sub, map) = g.induced(&keep).unwrap();
    assert_eq!(sub.n(), 9);
    assert_eq!(sub.m(), 9);
    assert_eq!(map[9], None);
}

#[test]
fn surgery_delete_claw_vertex() {
    let g = c9_claw();
    let out = g
        .apply_surgery(&SurgerySpec::DeleteVertices { delete: vec![9] })
        .unwrap();
    assert_eq!(out.graph.n(), 9);
    assert_eq!(out.graph.m(), 9);
    assert_eq!(out.graph.faces().len(), 2);
    assert_eq!(out.vertex_map[9], None);
    assert_eq!(out.vertex_map[4], Some(4));
}

#[test]
fn surgery_identify_across_face() {
    // pinch C8 at two non-adjacent vertices with no common neighbor
    let g = cn(8);
    let out = g
        .apply_surgery(&SurgerySpec::DeleteAndIdentifyVertices {
            delete: vec![],
            keep: (0, 3),
        })
        .unwrap();
    assert_eq!(out.graph.n(), 7);
    assert_eq!(out.graph.m(), 8);
    assert_eq!(out.graph.faces().len(), 3); // pinch splits one face
    assert_eq!(out.vertex_map[0], out.vertex_map[3]);
    let mut lens: Vec<usize> = out.graph.faces().iter().map(|f| f.len()).collect();
    lens.sort_unstable();
    assert_eq!(lens, vec![3, 5, 8]);
}

#[test]
fn surgery_identify_rejects_adjacent_and_shared_neighbor() {
    let g = cn(8);
    let err = g
        .apply_surgery(&SurgerySpec::DeleteAndIdentifyVertices {
            delete: vec![],
            keep: (0, 1),
        })
        .unwrap_err();
    assert_eq!(err, SurgeryError::WouldCreateLoop);
    let err = g
        .apply_surgery(&SurgerySpec::DeleteAndIdentifyVertices {
            delete: vec![],
            keep: (0, 2),
        })
        .unwrap_err();
    assert_eq!(err, SurgeryError::WouldIdentifyEdges);
}

#[test]
fn surgery_add_edge_inside() {
    let g = cn(5);
    let out = g
        .apply_surgery(&SurgerySpec::DeleteAndAddEdge {
            delete: vec![],
            endpoints: (0, 2),
            face: FaceSelector::Auto,
        })
        .unwrap();
    assert_eq!(out.graph.m(), 6);
    let mut lens: Vec<usize> = out.graph.faces().iter().map(|f| f.len()).collect();
    lens.sort_unstable();
    assert_eq!(lens, vec![3, 4, 5]);
}

#[test]
fn surgery_add_edge_rejects_existing() {
    let g = cn(5);
    let err = g
        .apply_surgery(&SurgerySpec::DeleteAndAddEdge {
            delete: vec![],
            endpoints: (0, 1),
            face: FaceSelector::Auto,
        })
        .unwrap_err();
    assert_eq!(err, SurgeryError::WouldIdentifyEdges);
}

#[test]
fn surgery_zip_c8() {
    // octagon [u1 u2 x1 x2 v2 v1 y1 y2] = [0 1 2 3 4 5 6 7];
    // zip edge (0,1) onto (5,4): 0~5, 1~4
    let g = cn(8);
    let out = g
        .apply_surgery(&SurgerySpec::DeleteAndIdentifyEdges {
            delete: vec![],
            first: (0, 1),
            second: (5, 4),
        })
        .unwrap();
    assert_eq!(out.graph.n(), 6);
    assert_eq!(out.graph.m(), 7);
    assert_eq!(out.graph.faces().len(), 3);
    let mut lens: Vec<usize> = out.graph.faces().iter().map(|f| f.len()).collect();
    lens.sort_unstable();
    assert_eq!(lens, vec![3, 3, 8]);
    assert_eq!(out.vertex_map[0], out.vertex_map[5]);
    assert_eq!(out.vertex_map[1], out.vertex_map[4]);
}

#[test]
fn surgery_zip_c6_rejects_parallel() {
    let g = cn(6);
    let err = g
        .apply_surgery(&SurgerySpec::DeleteAndIdentifyEdges {
            delete: vec![],
            first: (0, 1),
            second: (4, 3),
        })
        .unwrap_err();
    assert_eq!(err, SurgeryError::WouldIdentifyEdges);
}

#[test]
fn surgery_preserves_outer_face() {
    let g = c9_claw(); // outer face is the 9-face
    let out = g
        .apply_surgery(&SurgerySpec::DeleteVertices { delete: vec![9] })
        .unwrap();
    assert_eq!(out.graph.face(out.graph.outer_face()).len(), 9);
}

#[test]
fn side_subgraph_extracts_interior() {
    let g = c9_claw();
    let c = CycleRef::new(&g, vec![9, 0, 1, 2, 3]).unwrap(); // a 5-cell
    let (inside, _map, c_img) = side_subgraph(&g, &c, true).unwrap();
    assert_eq!(inside.n(), 5);
    assert_eq!(inside.m(), 5);
    // the 5-cell is facial, so its closed exterior is the whole graph
    let (outside, map2, c_img2) = side_subgraph(&g, &c, false).unwrap();
    assert_eq!(outside.n(), 10);
    assert_eq!(outside.m(), 12);
    // designated outer faces are bounded by the cycle images
    let want: HashSet<(usize, usize)> = c_img.edge_set();
    assert!(inside
        .face(inside.outer_face())
        .directed_edges()
        .all(|(u, v)| want.contains(&ordered(u, v))));
    let want2: HashSet<(usize, usize)> = c_img2.edge_set();
    assert!(outside
        .face(outside.outer_face())
        .directed_edges()
        .all(|(u, v)| want2.contains(&ordered(u, v))));
    assert!(map2[5].is_some());
}

#[test]
fn cycles_up_to_finds_all() {
    let g = c9_claw();
    let cycles = g.cycles_up_to(12);
    let mut lens: Vec<usize> = cycles.iter().map(Vec::len).collect();
    lens.sort_unstable();
    // cells 5,5,5; compound cells 8,8,8; the 9-cycle
    assert_eq!(lens, vec![5, 5, 5, 8, 8, 8, 9]);
}

#[test]
fn dot_export_mentions_faces() {
    let dot = k3().to_dot();
    assert!(dot.contains("0 -- 1"));
    assert!(dot.contains("face"));
}
