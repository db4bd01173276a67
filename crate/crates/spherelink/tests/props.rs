//! Property and oracle tests for the library invariants: canonical forms,
//! minor containment, arrangement enumeration, and link detection, each
//! cross-checked against an independent brute-force formulation.

mod common;

use std::collections::HashSet;

use spherelink::embed::spherical_rotation_systems;
use spherelink::intrinsic::{graphs_up_to_iso, is_intrinsically_linked, Settings};
use spherelink::link::{is_nonsplit, sides, LinkPieces, LinkShape};
use spherelink::{equivalent, spherical_arrangements, Graph, RotationSystem};

use common::*;

fn all_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|k| graphs_up_to_iso(k, None)).collect()
}

// ---------------------------------------------------------------------------
// graph-core
// ---------------------------------------------------------------------------

#[test]
fn canonical_form_is_relabeling_invariant() {
    let mut r = rng(11);
    for _ in 0..300 {
        let g = random_graph(&mut r, 7);
        let perm = random_perm(&mut r, g.vertex_count());
        let h = g.relabel(&perm);
        assert_eq!(g.canonical_form(), h.canonical_form());
        assert!(g.is_isomorphic(&h));
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_samples() {
    let mut r = rng(12);
    for _ in 0..100 {
        let g = random_graph(&mut r, 6);
        let h = g.relabel(&random_perm(&mut r, g.vertex_count()));
        let k = h.relabel(&random_perm(&mut r, h.vertex_count()));
        assert!(g.is_isomorphic(&g)); // reflexive
        assert!(h.is_isomorphic(&g)); // symmetric (g ~ h above)
        assert!(g.is_isomorphic(&k)); // transitive via h
        let other = random_graph(&mut r, 6);
        assert_eq!(g.is_isomorphic(&other), other.is_isomorphic(&g));
    }
}

#[test]
fn contract_edge_drops_one_vertex() {
    let mut r = rng(13);
    for _ in 0..100 {
        let g = random_graph(&mut r, 7);
        for (u, v) in g.edges() {
            let h = g.contract_edge(u, v).unwrap();
            assert_eq!(h.vertex_count(), g.vertex_count() - 1);
        }
    }
}

/// Independent oracle: the set of minors of g by exhaustive closure under
/// single steps.
fn minor_closure(g: &Graph) -> HashSet<Vec<u8>> {
    let mut seen = HashSet::new();
    let mut stack = vec![g.clone()];
    seen.insert(g.canonical_form());
    while let Some(h) = stack.pop() {
        for (_, m) in h.immediate_minors() {
            if seen.insert(m.canonical_form()) {
                stack.push(m);
            }
        }
    }
    seen
}

#[test]
fn has_minor_matches_exhaustive_closure_small() {
    // all pairs on ≤ 4 vertices
    let tiny = all_graphs_up_to(4);
    for g in &tiny {
        let closure = minor_closure(g);
        for h in &tiny {
            assert_eq!(
                g.has_minor(h),
                closure.contains(&h.canonical_form()),
                "has_minor disagrees with closure for {} vs {}",
                spherelink::io::to_graph6(g),
                spherelink::io::to_graph6(h),
            );
        }
    }
    // 5-vertex bases against sampled probes
    let probes5: Vec<Graph> = all_graphs_up_to(4)
        .into_iter()
        .step_by(2)
        .chain(graphs_up_to_iso(5, None).into_iter().step_by(5))
        .collect();
    for g in graphs_up_to_iso(5, None).iter().step_by(2) {
        let closure = minor_closure(g);
        for h in &probes5 {
            assert_eq!(g.has_minor(h), closure.contains(&h.canonical_form()));
        }
    }
    // sampled 6-vertex bases against small probes
    let probes6: Vec<Graph> = all_graphs_up_to(3)
        .into_iter()
        .chain([
            Graph::complete(4),
            Graph::complete(5),
            Graph::complete_multipartite(&[3, 2]),
            Graph::complete_multipartite(&[3, 3]),
        ])
        .collect();
    for g in graphs_up_to_iso(6, None).iter().step_by(13) {
        let closure = minor_closure(g);
        for h in &probes6 {
            assert_eq!(g.has_minor(h), closure.contains(&h.canonical_form()));
        }
    }
}

#[test]
fn has_minor_is_transitive_on_samples() {
    let mut r = rng(14);
    for _ in 0..150 {
        let g = random_graph(&mut r, 6);
        let mut h = g.clone();
        for _ in 0..2 {
            let steps = h.minor_steps();
            if steps.is_empty() {
                break;
            }
            let s = &steps[r.gen_range(0..steps.len())];
            h = h.apply_minor_step(s).unwrap();
        }
        let mut k = h.clone();
        for _ in 0..2 {
            let steps = k.minor_steps();
            if steps.is_empty() {
                break;
            }
            let s = &steps[r.gen_range(0..steps.len())];
            k = k.apply_minor_step(s).unwrap();
        }
        assert!(g.has_minor(&h));
        assert!(h.has_minor(&k));
        assert!(g.has_minor(&k), "transitivity violated");
    }
}

use rand::Rng;

// ---------------------------------------------------------------------------
// embedding / arrangements
// ---------------------------------------------------------------------------

#[test]
fn arrangements_respect_euler_and_dart_conservation() {
    let mut r = rng(21);
    for _ in 0..60 {
        let g = random_planar_graph(&mut r, 7);
        for a in &spherical_arrangements(&g, true) {
            let mut total_faces = 0;
            for pe in a.parts() {
                let rs = pe.rotation_system();
                let pg = rs.graph();
                let darts: usize = (0..pg.vertex_count()).map(|v| rs.rotation(v).len()).sum();
                assert_eq!(darts, 2 * pg.edge_count(), "dart conservation");
                let f = pe.faces().len();
                assert_eq!(
                    pg.vertex_count() as i64 - pg.edge_count() as i64 + f as i64,
                    2,
                    "Euler formula per part"
                );
                let face_darts: usize = pe.faces().iter().map(|w| w.len()).sum();
                assert_eq!(face_darts, darts, "faces partition the darts");
                total_faces += f;
            }
            // gluing k parts merges k-1 faces pairwise into shared groups
            assert_eq!(
                a.global_face_count(),
                total_faces - (a.parts().len() - 1),
                "global faces vs part faces"
            );
        }
    }
}

#[test]
fn arrangement_count_is_relabeling_invariant() {
    let mut r = rng(22);
    for _ in 0..25 {
        let g = random_planar_graph(&mut r, 6);
        let h = g.relabel(&random_perm(&mut r, g.vertex_count()));
        for refl in [false, true] {
            assert_eq!(
                spherical_arrangements(&g, refl).len(),
                spherical_arrangements(&h, refl).len(),
                "count changed under relabeling (reflection={refl})"
            );
        }
    }
}

#[test]
fn reflection_is_an_involution() {
    let mut r = rng(23);
    for _ in 0..20 {
        let g = random_planar_graph(&mut r, 6);
        for a in &spherical_arrangements(&g, true) {
            let mm = a.mirrored().mirrored();
            assert!(equivalent(a, &mm, false), "double mirror not identity");
            assert!(equivalent(a, &a.mirrored(), true));
        }
    }
}

fn cyc_eq(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

fn rs_equal_under_perm(r1: &RotationSystem, r2: &RotationSystem, perm: &[usize]) -> bool {
    let n = r1.graph().vertex_count();
    (0..n).all(|v| {
        let mapped: Vec<usize> = r1.rotation(v).iter().map(|&w| perm[w]).collect();
        cyc_eq(&mapped, r2.rotation(perm[v]))
    })
}

/// Brute-force equivalence of two rotation systems of the same graph:
/// some automorphism maps one onto the other (or its mirror image).
fn rs_equivalent(
    autos: &[Vec<usize>],
    r1: &RotationSystem,
    r2: &RotationSystem,
    reflection: bool,
) -> bool {
    let m2 = r2.mirrored();
    autos.iter().any(|p| {
        rs_equal_under_perm(r1, r2, p) || (reflection && rs_equal_under_perm(r1, &m2, p))
    })
}

#[test]
fn arrangement_enumeration_matches_pairwise_dedup_oracle() {
    let mut pool: Vec<Graph> = Vec::new();
    for n in 1..=5 {
        pool.extend(graphs_up_to_iso(n, None));
    }
    pool.extend(graphs_up_to_iso(6, Some(9)).into_iter().step_by(3));
    for g in pool
        .iter()
        .filter(|g| g.is_connected() && spherelink::is_planar(g))
    {
        let autos: Vec<Vec<usize>> = permutations(g.vertex_count())
            .into_iter()
            .filter(|p| is_automorphism(g, p))
            .collect();
        let all = spherical_rotation_systems(g).unwrap_or_else(|_| {
            panic!("enumeration failed for {}", spherelink::io::to_graph6(g))
        });
        for refl in [false, true] {
            let mut reps: Vec<&RotationSystem> = Vec::new();
            for rs in &all {
                if !reps.iter().any(|rep| rs_equivalent(&autos, rs, rep, refl)) {
                    reps.push(rs);
                }
            }
            assert_eq!(
                reps.len(),
                spherical_arrangements(g, refl).len(),
                "class count mismatch for {} (reflection={refl})",
                spherelink::io::to_graph6(g)
            );
        }
    }
}

// ---------------------------------------------------------------------------
// linkage
// ---------------------------------------------------------------------------

#[test]
fn two_link_matches_sides_specialization() {
    let mut r = rng(31);
    let mut checked = 0usize;
    while checked < 4000 {
        let g = random_planar_graph(&mut r, 6);
        let selections: Vec<LinkPieces> = piece_selections(&g, 2)
            .into_iter()
            .filter(|p| p.cycles.len() == 1 && p.point_pairs.len() == 1)
            .collect();
        if selections.is_empty() {
            continue;
        }
        for a in &spherical_arrangements(&g, true) {
            for p in &selections {
                let s = sides(a, &p.cycles[0]).unwrap();
                let (u, v) = p.point_pairs[0];
                let opposite = s.vertices[0].contains(&u) != s.vertices[0].contains(&v);
                assert_eq!(
                    is_nonsplit(a, p).unwrap(),
                    opposite,
                    "2-link specialization failed"
                );
                checked += 1;
            }
        }
    }
}

#[test]
fn type2_matches_separation_specialization() {
    let mut r = rng(32);
    let mut checked = 0usize;
    let mut rounds = 0usize;
    while checked < 1500 && rounds < 4000 {
        rounds += 1;
        let g = random_planar_graph(&mut r, 7);
        let selections: Vec<LinkPieces> = piece_selections(&g, 3)
            .into_iter()
            .filter(|p| p.cycles.len() == 1 && p.point_pairs.len() == 2)
            .collect();
        if selections.is_empty() {
            continue;
        }
        for a in &spherical_arrangements(&g, true) {
            for p in &selections {
                let s = sides(a, &p.cycles[0]).unwrap();
                let separated = p.point_pairs.iter().all(|&(u, v)| {
                    s.vertices[0].contains(&u) != s.vertices[0].contains(&v)
                });
                assert_eq!(
                    is_nonsplit(a, p).unwrap(),
                    separated,
                    "type-II specialization failed"
                );
                checked += 1;
            }
        }
    }
    assert!(checked >= 1500, "not enough type-II samples generated");
}

#[test]
fn nonsplit_is_reflection_invariant() {
    let mut r = rng(33);
    let mut checked = 0usize;
    while checked < 2000 {
        let g = random_planar_graph(&mut r, 6);
        let selections = piece_selections(&g, 3);
        if selections.is_empty() {
            continue;
        }
        for a in &spherical_arrangements(&g, true) {
            let m = a.mirrored();
            for p in &selections {
                assert_eq!(
                    is_nonsplit(a, p).unwrap(),
                    is_nonsplit(&m, p).unwrap(),
                    "verdict changed under reflection"
                );
                checked += 1;
            }
        }
    }
}

#[test]
fn piece_deletion_is_self_consistent() {
    // Deleting a piece always yields a well-defined verdict, deterministic
    // across repeated evaluation, and single pieces are trivially non-split.
    let mut r = rng(34);
    let mut checked = 0usize;
    while checked < 1000 {
        let g = random_planar_graph(&mut r, 6);
        let selections: Vec<LinkPieces> = piece_selections(&g, 3)
            .into_iter()
            .filter(|p| p.piece_count() >= 2)
            .collect();
        if selections.is_empty() {
            continue;
        }
        for a in &spherical_arrangements(&g, true) {
            for p in selections.iter().take(40) {
                let full = is_nonsplit(a, p).unwrap();
                assert_eq!(full, is_nonsplit(a, p).unwrap(), "nondeterministic verdict");
                for drop_cycle in 0..p.cycles.len() {
                    let mut c = p.cycles.clone();
                    c.remove(drop_cycle);
                    let q = LinkPieces::new(c, p.point_pairs.clone()).unwrap();
                    let v = is_nonsplit(a, &q).unwrap();
                    if q.piece_count() == 1 {
                        assert!(v, "single piece must be non-split");
                    }
                }
                for drop_pair in 0..p.point_pairs.len() {
                    let mut pp = p.point_pairs.clone();
                    pp.remove(drop_pair);
                    let q = LinkPieces::new(p.cycles.clone(), pp).unwrap();
                    let v = is_nonsplit(a, &q).unwrap();
                    if q.piece_count() == 1 {
                        assert!(v, "single piece must be non-split");
                    }
                }
                checked += 1;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// intrinsic
// ---------------------------------------------------------------------------

#[test]
fn intrinsic_verdict_is_relabeling_invariant() {
    let mut r = rng(41);
    let s = Settings::default();
    for _ in 0..15 {
        let g = random_planar_graph(&mut r, 6);
        let h = g.relabel(&random_perm(&mut r, g.vertex_count()));
        let vg = is_intrinsically_linked(&g, LinkShape::TwoLink, &s).unwrap();
        let vh = is_intrinsically_linked(&h, LinkShape::TwoLink, &s).unwrap();
        assert_eq!(vg.holds, vh.holds, "verdict changed under relabeling");
    }
}

#[test]
fn isolated_vertex_extension_preserves_intrinsicness() {
    let s = Settings::default();
    let cases = [
        ("K4uK4", LinkShape::Type1),
        ("D6", LinkShape::Type2),
        ("K4uK1", LinkShape::TwoLink),
    ];
    for (name, shape) in cases {
        let g = spherelink::catalog::builtin(name).unwrap();
        assert!(is_intrinsically_linked(&g, shape, &s).unwrap().holds);
        let ext = g.disjoint_union(&Graph::empty(1));
        assert!(
            is_intrinsically_linked(&ext, shape, &s).unwrap().holds,
            "{name} ⊔ K1 lost the property"
        );
    }
}

#[test]
fn planarity_decision_matches_rotation_search() {
    // Exhaustive up to 6 vertices: the embedding-growth decision must agree
    // with the genus-0 rotation search on every isomorphism class.
    for g in all_graphs_up_to(6) {
        let by_rotation = g
            .components()
            .iter()
            .all(|(cg, _)| spherelink::embed::has_spherical_rotation(cg).unwrap_or(false));
        assert_eq!(
            spherelink::is_planar(&g),
            by_rotation,
            "planarity verdicts disagree on {}",
            spherelink::io::to_graph6(&g)
        );
    }
    // Kuratowski subdivisions stay nonplanar, and remain so with extra
    // pendant decoration.
    for name in ["K5", "K33"] {
        let g = spherelink::catalog::builtin(name).unwrap();
        for (u, v) in g.edges().collect::<Vec<_>>() {
            let n = g.vertex_count();
            let mut edges: Vec<(usize, usize)> =
                g.edges().filter(|&e| e != (u, v)).collect();
            edges.push((u, n));
            edges.push((n, v));
            edges.push((n, n + 1)); // pendant off the subdivision vertex
            let sub = Graph::new(n + 2, &edges).unwrap();
            assert!(!spherelink::is_planar(&sub), "{name} subdivision judged planar");
        }
    }
    // Random sparse 7–8 vertex graphs against the rotation search.
    let mut r = rng(77);
    for _ in 0..120 {
        let g = random_graph(&mut r, 8);
        if g.edge_count() > 14 {
            continue;
        }
        let by_rotation = g
            .components()
            .iter()
            .all(|(cg, _)| spherelink::embed::has_spherical_rotation(cg).unwrap_or(false));
        assert_eq!(
            spherelink::is_planar(&g),
            by_rotation,
            "planarity verdicts disagree on {}",
            spherelink::io::to_graph6(&g)
        );
    }
}

#[test]
fn layouts_realize_rotations_counterclockwise() {
    // the geometric non-splitness oracle is sound only if every layout
    // realizes the combinatorial embedding it is asked to draw: check that
    // the counterclockwise angular order of edges at every vertex matches
    // the part rotation, on top of crossing-freeness
    let mut r = rng(4242);
    for _ in 0..150 {
        let g = random_planar_graph(&mut r, 7);
        for a in &spherelink::spherical_arrangements(&g, true) {
            let lay = spherelink::render::layout(a);
            assert_eq!(layout_crossings(&lay), 0, "crossing drawing {}", spherelink::io::to_graph6(&g));
            for part in a.parts() {
                let rs = part.rotation_system();
                for (lv, rot) in rs.rotations().iter().enumerate() {
                    if rot.len() < 3 {
                        continue;
                    }
                    let v = part.vertex_map()[lv];
                    let ang = |lw: usize| {
                        let w = part.vertex_map()[lw];
                        let d = (
                            lay.positions[w].0 - lay.positions[v].0,
                            lay.positions[w].1 - lay.positions[v].1,
                        );
                        d.1.atan2(d.0)
                    };
                    let mut geo: Vec<usize> = rot.to_vec();
                    geo.sort_by(|&a, &b| ang(a).partial_cmp(&ang(b)).unwrap());
                    let k = geo.iter().position(|&w| w == rot[0]).unwrap();
                    geo.rotate_left(k);
                    assert_eq!(
                        geo,
                        rot.to_vec(),
                        "rotation not realized ccw at {v} in {}",
                        spherelink::io::to_graph6(&g)
                    );
                }
            }
        }
    }
}
