//! Shared helpers for the integration test suites: seeded random graph
//! generation, an independent geometric non-splitness oracle driven by the
//! straight-line layout engine, and piece-selection enumeration.
#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use spherelink::link::{cycles, LinkPieces};
use spherelink::render::Layout;
use spherelink::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph on 1..=max_n vertices with a random edge density.
pub fn random_graph(r: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = r.gen_range(1..=max_n);
    let p: f64 = r.gen_range(0.15..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid random edges")
}

pub fn random_planar_graph(r: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let g = random_graph(r, max_n);
        if spherelink::is_planar(&g) {
            return g;
        }
    }
}

pub fn random_perm(r: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(r);
    p
}

/// All permutations of 0..n (n small).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    heap(n, &mut cur, &mut out);
    out
}

pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    g.edges().all(|(u, v)| g.has_edge(perm[u], perm[v]))
}

// ---------------------------------------------------------------------------
// Straight-line geometry
// ---------------------------------------------------------------------------

type Pt = (f64, f64);

fn orient(a: Pt, b: Pt, c: Pt) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn seg_point_dist(a: Pt, b: Pt, p: Pt) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 <= f64::EPSILON {
        0.0
    } else {
        (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
    };
    let (qx, qy) = (a.0 + t * dx, a.1 + t * dy);
    ((p.0 - qx).powi(2) + (p.1 - qy).powi(2)).sqrt()
}

/// Count proper crossings between drawn segments that share no endpoint.
pub fn layout_crossings(l: &Layout) -> usize {
    let mut c = 0;
    for (i, &(a, b)) in l.segments.iter().enumerate() {
        for &(u, v) in &l.segments[i + 1..] {
            if a == u || a == v || b == u || b == v {
                continue;
            }
            let (pa, pb) = (l.positions[a], l.positions[b]);
            let (pu, pv) = (l.positions[u], l.positions[v]);
            let d1 = orient(pa, pb, pu);
            let d2 = orient(pa, pb, pv);
            let d3 = orient(pu, pv, pa);
            let d4 = orient(pu, pv, pb);
            if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
                c += 1;
            }
        }
    }
    c
}

/// Winding-number point-in-polygon test. Returns None when the point is too
/// close to the boundary for a reliable verdict.
pub fn point_in_polygon(poly: &[Pt], p: Pt) -> Option<bool> {
    const EPS: f64 = 1e-9;
    let mut angle = 0.0f64;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        if seg_point_dist(a, b, p) < EPS {
            return None;
        }
        let (ax, ay) = (a.0 - p.0, a.1 - p.1);
        let (bx, by) = (b.0 - p.0, b.1 - p.1);
        angle += (ax * by - ay * bx).atan2(ax * bx + ay * by);
    }
    Some(angle.abs() > std::f64::consts::PI)
}

#[derive(Clone, Copy, PartialEq)]
enum Side {
    In,
    Out,
    Mixed,
}

/// Independent geometric splitness oracle.
///
/// The arrangement is realized as a straight-line drawing (stereographic
/// model of the sphere). A proper bipartition A|B of the pieces is
/// circle-separable on the sphere iff for every piece cycle C, all vertices
/// of the pieces on the opposite side of the bipartition from C lie inside
/// C or all lie outside C (a separating circle never crosses C, so the
/// opposite side must sit in the single cap of C that also contains the
/// circle). The link is split iff some proper bipartition is separable.
///
/// Returns None when the drawing is numerically degenerate for this piece
/// selection (a piece vertex too close to a foreign cycle polygon).
pub fn geometric_nonsplit(lay: &Layout, p: &LinkPieces) -> Option<bool> {
    let ncyc = p.cycles.len();
    let mut piece_vertices: Vec<Vec<usize>> = p.cycles.clone();
    for &(u, v) in &p.point_pairs {
        piece_vertices.push(vec![u, v]);
    }
    let k = piece_vertices.len();
    if k <= 1 {
        return Some(true);
    }
    assert!(k <= 31, "piece masks fit in u32");
    let mut side = vec![vec![Side::Out; k]; ncyc];
    for ci in 0..ncyc {
        let poly: Vec<Pt> = p.cycles[ci].iter().map(|&v| lay.positions[v]).collect();
        for (pi, verts) in piece_vertices.iter().enumerate() {
            if pi == ci {
                continue;
            }
            let (mut ins, mut outs) = (false, false);
            for &v in verts {
                match point_in_polygon(&poly, lay.positions[v])? {
                    true => ins = true,
                    false => outs = true,
                }
            }
            side[ci][pi] = match (ins, outs) {
                (true, false) => Side::In,
                (false, true) => Side::Out,
                _ => Side::Mixed,
            };
        }
    }
    for mask in 1u32..((1u32 << k) - 1) {
        if mask & 1 == 0 {
            continue; // fix piece 0 on side A
        }
        let mut separable = true;
        'cyc: for ci in 0..ncyc {
            let cside = (mask >> ci) & 1;
            let (mut has_in, mut has_out) = (false, false);
            for pi in 0..k {
                if (mask >> pi) & 1 == cside {
                    continue; // same side as the cycle
                }
                match side[ci][pi] {
                    Side::In => has_in = true,
                    Side::Out => has_out = true,
                    Side::Mixed => {
                        has_in = true;
                        has_out = true;
                    }
                }
                if has_in && has_out {
                    separable = false;
                    break 'cyc;
                }
            }
        }
        if separable {
            return Some(false);
        }
    }
    Some(true)
}

/// Every valid piece selection of `g` with at most `max_pieces` pieces
/// (cycles and point pairs, pairwise vertex-disjoint) and at least one piece.
pub fn piece_selections(g: &Graph, max_pieces: usize) -> Vec<LinkPieces> {
    let n = g.vertex_count();
    let cycs = cycles(g);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let cyc_masks: Vec<u64> = cycs
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let mut out = Vec::new();
    // items: cycles then pairs; enumerate increasing index to avoid repeats
    fn rec(
        start: usize,
        used: u64,
        chosen_c: &mut Vec<usize>,
        chosen_p: &mut Vec<(usize, usize)>,
        cycs: &[Vec<usize>],
        cyc_masks: &[u64],
        pairs: &[(usize, usize)],
        left: usize,
        out: &mut Vec<LinkPieces>,
    ) {
        if !chosen_c.is_empty() || !chosen_p.is_empty() {
            let pieces = LinkPieces::new(
                chosen_c.iter().map(|&i| cycs[i].clone()).collect(),
                chosen_p.clone(),
            )
            .expect("disjoint by construction");
            out.push(pieces);
        }
        if left == 0 {
            return;
        }
        for i in start..cycs.len() + pairs.len() {
            let mask = if i < cycs.len() {
                cyc_masks[i]
            } else {
                let (u, v) = pairs[i - cycs.len()];
                (1u64 << u) | (1u64 << v)
            };
            if used & mask != 0 {
                continue;
            }
            if i < cycs.len() {
                chosen_c.push(i);
            } else {
                chosen_p.push(pairs[i - cycs.len()]);
            }
            rec(
                i + 1,
                used | mask,
                chosen_c,
                chosen_p,
                cycs,
                cyc_masks,
                pairs,
                left - 1,
                out,
            );
            if i < cycs.len() {
                chosen_c.pop();
            } else {
                chosen_p.pop();
            }
        }
    }
    rec(
        0,
        0,
        &mut Vec::new(),
        &mut Vec::new(),
        &cycs,
        &cyc_masks,
        &pairs,
        max_pieces,
        &mut out,
    );
    out.sort();
    out.dedup();
    out
}
