//! Spherical link detection inside an arrangement: cycle enumeration,
//! side-of-cycle computation, the region-bipartition non-splitness test,
//! and shape-specific link searches.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::arrange::Arrangement;
use crate::graph::Graph;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinkError {
    #[error("cycle has fewer than 3 vertices")]
    ShortCycle,
    #[error("point pair endpoints are not distinct")]
    DegeneratePair,
    #[error("pieces share vertex {0}")]
    SharedVertex(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("sequence {0:?} is not a cycle of the graph")]
    NotACycle(Vec<usize>),
}

/// Shape of a spherical link search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkShape {
    /// one cycle and one S⁰ (a 2-link)
    TwoLink,
    /// two cycles and one S⁰
    Type1,
    /// one cycle and two S⁰s
    Type2,
}

impl LinkShape {
    pub fn parse(s: &str) -> Option<LinkShape> {
        match s {
            "2link" => Some(LinkShape::TwoLink),
            "type1" => Some(LinkShape::Type1),
            "type2" => Some(LinkShape::Type2),
            _ => None,
        }
    }
}

impl fmt::Display for LinkShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkShape::TwoLink => write!(f, "2link"),
            LinkShape::Type1 => write!(f, "type1"),
            LinkShape::Type2 => write!(f, "type2"),
        }
    }
}

/// The pieces of a candidate spherical link: vertex-disjoint cycles (S¹s)
/// and vertex pairs (S⁰s). Points may have incident edges; only
/// disjointness from the chosen cycles is demanded.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinkPieces {
    pub cycles: Vec<Vec<usize>>,
    pub point_pairs: Vec<(usize, usize)>,
}

impl LinkPieces {
    pub fn new(
        cycles: Vec<Vec<usize>>,
        point_pairs: Vec<(usize, usize)>,
    ) -> Result<LinkPieces, LinkError> {
        let mut p = LinkPieces {
            cycles,
            point_pairs,
        };
        p.normalize();
        let mut seen = BTreeSet::new();
        for c in &p.cycles {
            if c.len() < 3 {
                return Err(LinkError::ShortCycle);
            }
            for &v in c {
                if !seen.insert(v) {
                    return Err(LinkError::SharedVertex(v));
                }
            }
        }
        for &(u, v) in &p.point_pairs {
            if u == v {
                return Err(LinkError::DegeneratePair);
            }
            for w in [u, v] {
                if !seen.insert(w) {
                    return Err(LinkError::SharedVertex(w));
                }
            }
        }
        Ok(p)
    }

    fn normalize(&mut self) {
        for c in self.cycles.iter_mut() {
            *c = canonical_cycle(c);
        }
        self.cycles.sort();
        for p in self.point_pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        self.point_pairs.sort();
    }

    pub fn piece_count(&self) -> usize {
        self.cycles.len() + self.point_pairs.len()
    }

    /// Check the pieces against a concrete graph.
    pub fn validate(&self, g: &Graph) -> Result<(), LinkError> {
        for c in &self.cycles {
            for (i, &v) in c.iter().enumerate() {
                if v >= g.vertex_count() {
                    return Err(LinkError::VertexOutOfRange(v));
                }
                let w = c[(i + 1) % c.len()];
                if !g.has_edge(v, w) {
                    return Err(LinkError::NotACycle(c.clone()));
                }
            }
        }
        for &(u, v) in &self.point_pairs {
            for w in [u, v] {
                if w >= g.vertex_count() {
                    return Err(LinkError::VertexOutOfRange(w));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for LinkPieces {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let s: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            writeln!(f, "cycle: {}", s.join(" "))?;
        }
        for &(u, v) in &self.point_pairs {
            writeln!(f, "s0: {u} {v}")?;
        }
        Ok(())
    }
}

/// Rotate/reverse a cycle to canonical form: minimum vertex first, then
/// the smaller of its two neighbors.
pub fn canonical_cycle(c: &[usize]) -> Vec<usize> {
    let n = c.len();
    let (mi, _) = c.iter().enumerate().min_by_key(|&(_, v)| v).unwrap();
    let fwd: Vec<usize> = (0..n).map(|i| c[(mi + i) % n]).collect();
    let rev: Vec<usize> = (0..n).map(|i| c[(mi + n - i) % n]).collect();
    if fwd <= rev {
        fwd
    } else {
        rev
    }
}

/// All simple cycles of `g`, each exactly once up to rotation/reversal,
/// in canonical order.
pub fn cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend_cycles(g, s, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out.sort();
    out
}

fn extend_cycles(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &w in &g.neighbors(last) {
        if w == s && path.len() >= 3 {
            // avoid the reversed duplicate: demand second vertex < last
            if path[1] < *path.last().unwrap() {
                out.push(canonical_cycle(path));
            }
        } else if w > s && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            extend_cycles(g, s, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn cycle_edges(c: &[usize]) -> BTreeSet<(usize, usize)> {
    (0..c.len())
        .map(|i| {
            let (u, v) = (c[i], c[(i + 1) % c.len()]);
            (u.min(v), u.max(v))
        })
        .collect()
}

/// Merge global faces across every edge of `g` except those in `keep`;
/// returns the component id of each global face.
fn merge_faces(a: &Arrangement, keep: &BTreeSet<(usize, usize)>) -> Vec<usize> {
    let fod = a.face_of_dart();
    let mut uf = UnionFind::new(a.global_face_count());
    for (u, v) in a.graph().edges() {
        if keep.contains(&(u, v)) {
            continue;
        }
        uf.union(fod[&(u, v)], fod[&(v, u)]);
    }
    let mut label = BTreeMap::new();
    (0..a.global_face_count())
        .map(|f| {
            let r = uf.find(f);
            let next = label.len();
            *label.entry(r).or_insert(next)
        })
        .collect()
}

/// The two sides of an embedded cycle: global faces split into exactly two
/// classes, with off-cycle vertices inheriting the side of their faces.
#[derive(Clone, Debug)]
pub struct Sides {
    pub faces: [BTreeSet<usize>; 2],
    pub vertices: [BTreeSet<usize>; 2],
}

pub fn sides(a: &Arrangement, c: &[usize]) -> Result<Sides, LinkError> {
    let pieces = LinkPieces::new(vec![c.to_vec()], vec![])?;
    pieces.validate(a.graph())?;
    let comp = merge_faces(a, &cycle_edges(c));
    let k = comp.iter().max().map_or(0, |m| m + 1);
    assert_eq!(k, 2, "an embedded cycle must separate the sphere in two");
    let mut faces = [BTreeSet::new(), BTreeSet::new()];
    for (f, &s) in comp.iter().enumerate() {
        faces[s].insert(f);
    }
    let on_c: BTreeSet<usize> = c.iter().copied().collect();
    let mut vertices = [BTreeSet::new(), BTreeSet::new()];
    for v in 0..a.graph().vertex_count() {
        if on_c.contains(&v) {
            continue;
        }
        let fs = a.vertex_faces(v);
        let s = comp[fs[0]];
        debug_assert!(fs.iter().all(|&f| comp[f] == s));
        vertices[s].insert(v);
    }
    Ok(Sides { faces, vertices })
}

/// A region of the arrangement relative to a piece selection, with the
/// pieces reachable through each of its boundary circles.
#[derive(Clone, Debug)]
pub struct Region {
    pub faces: BTreeSet<usize>,
    /// boundary circles (cycle indices) with the full set of piece ids
    /// having any part strictly beyond that circle, the circle's own piece
    /// included
    pub boundary: Vec<(usize, BTreeSet<usize>)>,
    /// contained S⁰ endpoints as (pair index, endpoint vertex)
    pub points: Vec<(usize, usize)>,
}

/// Regions of `S² − ℓ`: faces merged across every edge not on a piece
/// cycle. Piece ids: cycle i ↦ i, pair j ↦ cycles.len() + j.
#[derive(Clone, Debug)]
pub struct RegionStructure {
    pub regions: Vec<Region>,
    pub region_of_face: Vec<usize>,
}

pub fn build_regions(a: &Arrangement, p: &LinkPieces) -> Result<RegionStructure, LinkError> {
    p.validate(a.graph())?;
    let mut keep = BTreeSet::new();
    for c in &p.cycles {
        keep.extend(cycle_edges(c));
    }
    let comp = merge_faces(a, &keep);
    let nreg = comp.iter().max().map_or(1, |m| m + 1);
    let mut regions: Vec<Region> = (0..nreg)
        .map(|_| Region {
            faces: BTreeSet::new(),
            boundary: Vec::new(),
            points: Vec::new(),
        })
        .collect();
    for (f, &r) in comp.iter().enumerate() {
        regions[r].faces.insert(f);
    }

    // locate every piece's side data relative to every cycle
    let fod = a.face_of_dart();
    let ncyc = p.cycles.len();
    // region(s) incident to each cycle: exactly two
    let mut cycle_regions: Vec<[usize; 2]> = Vec::with_capacity(ncyc);
    let mut cycle_sides: Vec<Sides> = Vec::with_capacity(ncyc);
    for c in &p.cycles {
        let (u, v) = (c[0], c[1]);
        let (r1, r2) = (comp[fod[&(u, v)]], comp[fod[&(v, u)]]);
        debug_assert_ne!(r1, r2);
        cycle_regions.push([r1, r2]);
        cycle_sides.push(sides(a, c)?);
    }
    // place the points
    for (j, &(u, v)) in p.point_pairs.iter().enumerate() {
        for w in [u, v] {
            let r = comp[a.vertex_faces(w)[0]];
            regions[r].points.push((j, w));
        }
    }
    // boundary circles with beyond-sets
    for i in 0..p.cycles.len() {
        for &r in &cycle_regions[i] {
            let mut beyond = BTreeSet::new();
            beyond.insert(i);
            // far side of c from region r
            let near = cycle_sides[i]
                .faces
                .iter()
                .position(|fs| regions[r].faces.iter().all(|f| fs.contains(f)))
                .expect("region lies on one side of its boundary circle");
            let far = &cycle_sides[i].vertices[1 - near];
            for (i2, c2) in p.cycles.iter().enumerate() {
                if i2 != i && c2.iter().all(|v| far.contains(v)) {
                    beyond.insert(i2);
                }
            }
            for (j, &(u, v)) in p.point_pairs.iter().enumerate() {
                if far.contains(&u) || far.contains(&v) {
                    beyond.insert(ncyc + j);
                }
            }
            regions[r].boundary.push((i, beyond));
        }
    }
    Ok(RegionStructure {
        regions,
        region_of_face: comp,
    })
}

/// The split test: a link is split iff some region admits a bipartition of
/// its boundary circles and contained points whose induced piece sets are
/// disjoint and both nonempty.
pub fn is_nonsplit(a: &Arrangement, p: &LinkPieces) -> Result<bool, LinkError> {
    if p.piece_count() <= 1 {
        return Ok(true);
    }
    let rs = build_regions(a, p)?;
    let ncyc = p.cycles.len();
    for region in &rs.regions {
        // items: each boundary circle and each contained point, with the
        // set of pieces attached through it
        let mut items: Vec<BTreeSet<usize>> = Vec::new();
        for (_, beyond) in &region.boundary {
            items.push(beyond.clone());
        }
        for &(j, _) in &region.points {
            items.push(BTreeSet::from([ncyc + j]));
        }
        let m = items.len();
        if m < 2 {
            continue;
        }
        // bipartitions with item 0 fixed on the left
        for mask in 0u64..(1u64 << (m - 1)) {
            let mut left: BTreeSet<usize> = items[0].clone();
            let mut right: BTreeSet<usize> = BTreeSet::new();
            for (i, item) in items.iter().enumerate().skip(1) {
                if mask >> (i - 1) & 1 == 0 {
                    left.extend(item.iter().copied());
                } else {
                    right.extend(item.iter().copied());
                }
            }
            if !right.is_empty() && left.intersection(&right).next().is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Nested type-I configuration: point | cycle | cycle | point, i.e. one
/// cycle lies strictly inside a side of the other and the S⁰ endpoints sit
/// in the two extreme regions.
pub fn is_nested_type1(a: &Arrangement, p: &LinkPieces) -> Result<bool, LinkError> {
    let (c1, c2) = (&p.cycles[0], &p.cycles[1]);
    let (u, v) = p.point_pairs[0];
    for (inner, outer) in [(c1, c2), (c2, c1)] {
        let so = sides(a, outer)?;
        let si = sides(a, inner)?;
        for oi in 0..2 {
            if !inner.iter().all(|w| so.vertices[oi].contains(w)) {
                continue; // inner cycle not on this side of outer
            }
            for ii in 0..2 {
                if !outer.iter().all(|w| si.vertices[ii].contains(w)) {
                    continue;
                }
                // extreme regions: outer's far side, inner's far side
                for (x, y) in [(u, v), (v, u)] {
                    if so.vertices[1 - oi].contains(&x) && si.vertices[1 - ii].contains(&y) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Walk all piece candidates of the shape; the callback returns `false`
/// to stop. Returns `false` iff stopped early.
fn each_candidate(g: &Graph, shape: LinkShape, consider: &mut dyn FnMut(LinkPieces) -> bool) -> bool {
    let all_cycles = cycles(g);
    let n = g.vertex_count();
    let mut consider = |p: LinkPieces| consider(p);
    match shape {
        LinkShape::TwoLink => {
            for c in &all_cycles {
                let used: BTreeSet<usize> = c.iter().copied().collect();
                let free: Vec<usize> = (0..n).filter(|v| !used.contains(v)).collect();
                for (i, &u) in free.iter().enumerate() {
                    for &v in &free[i + 1..] {
                        if !consider(LinkPieces::new(vec![c.clone()], vec![(u, v)]).unwrap()) {
                            return false;
                        }
                    }
                }
            }
        }
        LinkShape::Type1 => {
            for (i, c1) in all_cycles.iter().enumerate() {
                let u1: BTreeSet<usize> = c1.iter().copied().collect();
                for c2 in &all_cycles[i + 1..] {
                    if c2.iter().any(|v| u1.contains(v)) {
                        continue;
                    }
                    let used: BTreeSet<usize> =
                        u1.iter().copied().chain(c2.iter().copied()).collect();
                    let free: Vec<usize> = (0..n).filter(|v| !used.contains(v)).collect();
                    for (j, &u) in free.iter().enumerate() {
                        for &v in &free[j + 1..] {
                            if !consider(
                                LinkPieces::new(vec![c1.clone(), c2.clone()], vec![(u, v)])
                                    .unwrap(),
                            ) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        LinkShape::Type2 => {
            for c in &all_cycles {
                let used: BTreeSet<usize> = c.iter().copied().collect();
                let free: Vec<usize> = (0..n).filter(|v| !used.contains(v)).collect();
                let mut pairs = Vec::new();
                for (i, &u) in free.iter().enumerate() {
                    for &v in &free[i + 1..] {
                        pairs.push((u, v));
                    }
                }
                for (i, &p1) in pairs.iter().enumerate() {
                    for &p2 in &pairs[i + 1..] {
                        if p1.0 == p2.0 || p1.0 == p2.1 || p1.1 == p2.0 || p1.1 == p2.1 {
                            continue;
                        }
                        if !consider(LinkPieces::new(vec![c.clone()], vec![p1, p2]).unwrap()) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn passes(a: &Arrangement, shape: LinkShape, nested_only: bool, p: &LinkPieces) -> bool {
    is_nonsplit(a, p).unwrap_or(false)
        && !(nested_only
            && shape == LinkShape::Type1
            && !is_nested_type1(a, p).unwrap_or(false))
}

/// All non-split witnesses of the given shape in canonical order.
pub fn find_links(a: &Arrangement, shape: LinkShape, nested_only: bool) -> Vec<LinkPieces> {
    let mut out = Vec::new();
    each_candidate(a.graph(), shape, &mut |p| {
        if passes(a, shape, nested_only, &p) {
            out.push(p);
        }
        true
    });
    out.sort();
    out.dedup();
    out
}

/// The first witness found, in deterministic generation order.
pub fn first_link(a: &Arrangement, shape: LinkShape, nested_only: bool) -> Option<LinkPieces> {
    let mut hit = None;
    each_candidate(a.graph(), shape, &mut |p| {
        if passes(a, shape, nested_only, &p) {
            hit = Some(p);
            false
        } else {
            true
        }
    });
    hit
}

/// Whether the arrangement contains any non-split link of the shape.
pub fn is_linked(a: &Arrangement, shape: LinkShape, nested_only: bool) -> bool {
    first_link(a, shape, nested_only).is_some()
}
