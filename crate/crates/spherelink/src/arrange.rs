//! Spherical arrangements: embeddings of a whole (possibly disconnected)
//! graph in the 2-sphere, up to equivalence.
//!
//! Each connected component carries a genus-0 rotation system. The global
//! structure records which component faces merge into which global faces.
//! A global face is a set of (part, local face) pairs whose walks all
//! bound the same region of the sphere; the part/face incidence structure
//! of a valid arrangement is a tree, which forces
//! V - E + F = 1 + number_of_parts.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::embed::{
    oriented_embedding_reps, Dart, RotationSystem,
};
use crate::graph::Graph;

/// One embedded connected component of an arrangement.
#[derive(Clone, Debug)]
pub struct PartEmbedding {
    rs: RotationSystem,
    /// local vertex -> vertex of the parent graph
    vmap: Vec<usize>,
    faces: Vec<Vec<Dart>>,
}

impl PartEmbedding {
    pub fn rotation_system(&self) -> &RotationSystem {
        &self.rs
    }
    pub fn vertex_map(&self) -> &[usize] {
        &self.vmap
    }
    /// Face walks in local darts.
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }
    pub fn global_dart(&self, d: Dart) -> Dart {
        (self.vmap[d.0], self.vmap[d.1])
    }
    fn is_vertex_part(&self) -> bool {
        self.rs.graph().edge_count() == 0
    }
}

/// An embedding of a graph into the sphere: per-part rotation systems plus
/// the partition of part faces into global faces.
#[derive(Clone, Debug)]
pub struct Arrangement {
    graph: Graph,
    parts: Vec<PartEmbedding>,
    groups: Vec<BTreeSet<(usize, usize)>>,
}

impl Arrangement {
    pub fn new(
        graph: Graph,
        parts: Vec<PartEmbedding>,
        groups: Vec<BTreeSet<(usize, usize)>>,
    ) -> Self {
        let a = Arrangement {
            graph,
            parts,
            groups,
        };
        debug_assert!(a.euler_ok());
        a
    }

    fn euler_ok(&self) -> bool {
        let v = self.graph.vertex_count() as i64;
        let e = self.graph.edge_count() as i64;
        let f = self.groups.len() as i64;
        self.parts.is_empty() || v - e + f == 1 + self.parts.len() as i64
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
    pub fn parts(&self) -> &[PartEmbedding] {
        &self.parts
    }
    /// Global faces as sets of (part, local face index).
    pub fn groups(&self) -> &[BTreeSet<(usize, usize)>] {
        &self.groups
    }
    pub fn global_face_count(&self) -> usize {
        self.groups.len()
    }

    /// Map from global dart to the global face whose boundary it lies on.
    pub fn face_of_dart(&self) -> HashMap<Dart, usize> {
        let mut out = HashMap::new();
        for (gi, grp) in self.groups.iter().enumerate() {
            for &(p, f) in grp {
                for &d in &self.parts[p].faces[f] {
                    out.insert(self.parts[p].global_dart(d), gi);
                }
            }
        }
        out
    }

    /// Vertices (parent labels) incident to a global face, including
    /// isolated vertices sitting inside it.
    pub fn face_vertices(&self, gi: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &(p, f) in &self.groups[gi] {
            let part = &self.parts[p];
            if part.is_vertex_part() {
                out.insert(part.vmap[0]);
            } else {
                for &d in &part.faces[f] {
                    out.insert(part.vmap[d.0]);
                }
            }
        }
        out
    }

    /// Global faces incident to vertex `v` (for an isolated vertex: the one
    /// face it sits in).
    pub fn vertex_faces(&self, v: usize) -> Vec<usize> {
        let mut out = BTreeSet::new();
        for (gi, grp) in self.groups.iter().enumerate() {
            for &(p, f) in grp {
                let part = &self.parts[p];
                if part.is_vertex_part() {
                    if part.vmap[0] == v {
                        out.insert(gi);
                    }
                } else if part.faces[f].iter().any(|&d| part.vmap[d.0] == v) {
                    out.insert(gi);
                }
            }
        }
        out.into_iter().collect()
    }

    /// The arrangement with globally reversed orientation.
    pub fn mirrored(&self) -> Arrangement {
        let mut parts = Vec::with_capacity(self.parts.len());
        let mut face_maps = Vec::with_capacity(self.parts.len());
        for p in &self.parts {
            let rs = p.rs.mirrored();
            let faces = rs.faces();
            // mirrored face = reversed darts of an original face
            let mut dart_face = HashMap::new();
            for (i, f) in faces.iter().enumerate() {
                for &d in f {
                    dart_face.insert(d, i);
                }
            }
            let map: Vec<usize> = p
                .faces
                .iter()
                .map(|f| {
                    if f.is_empty() {
                        0
                    } else {
                        let (u, v) = f[0];
                        dart_face[&(v, u)]
                    }
                })
                .collect();
            face_maps.push(map);
            parts.push(PartEmbedding {
                rs,
                vmap: p.vmap.clone(),
                faces,
            });
        }
        let groups = self
            .groups
            .iter()
            .map(|grp| {
                grp.iter()
                    .map(|&(p, f)| (p, face_maps[p][f]))
                    .collect::<BTreeSet<_>>()
            })
            .collect();
        Arrangement {
            graph: self.graph.clone(),
            parts,
            groups,
        }
    }

    fn oriented_certificate(&self) -> Vec<u8> {
        // Per-part minimal map codes first, then the face-partition
        // encoding minimized over all min-code labelings and over
        // permutations of parts with identical codes.
        let k = self.parts.len();
        let mut codes: Vec<Vec<usize>> = Vec::with_capacity(k);
        let mut rankvecs: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k);
        for p in &self.parts {
            if p.is_vertex_part() {
                codes.push(vec![0]);
                rankvecs.push(vec![vec![0]]);
            } else {
                let (code, roots) = p.rs.min_code_roots();
                let mut rvs: Vec<Vec<usize>> = roots
                    .iter()
                    .map(|&r| p.rs.face_ranks(&p.faces, r))
                    .collect();
                rvs.sort();
                rvs.dedup();
                codes.push(code);
                rankvecs.push(rvs);
            }
        }
        // order parts by code; equal codes form blocks to permute
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| codes[a].cmp(&codes[b]).then(a.cmp(&b)));
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &p in &order {
            match blocks.last_mut() {
                Some(b) if codes[b[0]] == codes[p] => b.push(p),
                _ => blocks.push(vec![p]),
            }
        }
        let mut best: Option<Vec<Vec<(usize, usize)>>> = None;
        let mut new_idx = vec![0usize; k];
        let mut rank_choice: Vec<usize> = vec![0; k];
        self.minimize_groups(&blocks, 0, &rankvecs, &mut new_idx, &mut rank_choice, &mut best);
        let mut bytes = Vec::new();
        for b in &blocks {
            for _ in 0..b.len() {
                // one code per part in final order; codes within a block equal
            }
            bytes.extend(format!("P{:?}x{};", codes[b[0]], b.len()).into_bytes());
        }
        bytes.extend(format!("G{:?}", best.unwrap_or_default()).into_bytes());
        bytes
    }

    fn minimize_groups(
        &self,
        blocks: &[Vec<usize>],
        bi: usize,
        rankvecs: &[Vec<Vec<usize>>],
        new_idx: &mut Vec<usize>,
        rank_choice: &mut Vec<usize>,
        best: &mut Option<Vec<Vec<(usize, usize)>>>,
    ) {
        if bi == blocks.len() {
            let mut enc: Vec<Vec<(usize, usize)>> = self
                .groups
                .iter()
                .map(|grp| {
                    let mut v: Vec<(usize, usize)> = grp
                        .iter()
                        .map(|&(p, f)| (new_idx[p], rankvecs[p][rank_choice[p]][f]))
                        .collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            enc.sort();
            if best.as_ref().map_or(true, |b| enc < *b) {
                *best = Some(enc);
            }
            return;
        }
        let base: usize = blocks[..bi].iter().map(|b| b.len()).sum();
        let block = &blocks[bi];
        let mut perm: Vec<usize> = block.clone();
        permute_all(&mut perm, 0, &mut |p| {
            let mut idx = new_idx.clone();
            for (off, &part) in p.iter().enumerate() {
                idx[part] = base + off;
            }
            // choose a rank vector per part in this block
            let mut choice = rank_choice.clone();
            choose_ranks(block, 0, rankvecs, &mut choice, &mut |c| {
                let mut idx2 = idx.clone();
                let mut c2 = c.to_vec();
                self.minimize_groups(blocks, bi + 1, rankvecs, &mut idx2, &mut c2, best);
            });
        });
    }

    /// Canonical byte certificate; equal for equivalent arrangements. With
    /// `reflection` the globally mirrored arrangement is identified too.
    pub fn certificate(&self, reflection: bool) -> Vec<u8> {
        let c = self.oriented_certificate();
        if reflection {
            let m = self.mirrored().oriented_certificate();
            c.min(m)
        } else {
            c
        }
    }

    /// Extend the arrangement with isolated vertices: `placements[i]` is the
    /// global face receiving new vertex `n + i`.
    pub fn with_isolated(&self, placements: &[usize]) -> Arrangement {
        let n = self.graph.vertex_count();
        let graph = self
            .graph
            .disjoint_union(&crate::graph::Graph::empty(placements.len()));
        let mut parts = self.parts.clone();
        let mut groups = self.groups.clone();
        for (i, &gid) in placements.iter().enumerate() {
            let pid = parts.len();
            let g1 = crate::graph::Graph::empty(1);
            let rs = RotationSystem::new(g1, vec![vec![]]).unwrap();
            let faces = rs.faces();
            parts.push(PartEmbedding {
                rs,
                vmap: vec![n + i],
                faces,
            });
            groups[gid].insert((pid, 0));
        }
        Arrangement::new(graph, parts, groups)
    }

    /// Nesting structure rooted at part 0: for each part, the (global face,
    /// own outward face) through which it attaches toward the root.
    pub fn nesting(&self) -> Vec<Option<(usize, usize)>> {
        let k = self.parts.len();
        let mut out = vec![None; k];
        if k == 0 {
            return out;
        }
        let mut group_of: HashMap<(usize, usize), usize> = HashMap::new();
        for (gi, grp) in self.groups.iter().enumerate() {
            for &pf in grp {
                group_of.insert(pf, gi);
            }
        }
        let mut seen_part = vec![false; k];
        let mut seen_group = vec![false; self.groups.len()];
        seen_part[0] = true;
        let mut frontier = vec![0usize];
        while let Some(p) = frontier.pop() {
            for f in 0..self.parts[p].faces.len() {
                let gi = group_of[&(p, f)];
                if seen_group[gi] {
                    continue;
                }
                seen_group[gi] = true;
                for &(q, qf) in &self.groups[gi] {
                    if !seen_part[q] {
                        seen_part[q] = true;
                        out[q] = Some((gi, qf));
                        frontier.push(q);
                    }
                }
            }
        }
        out
    }
}

fn permute_all(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

fn choose_ranks(
    block: &[usize],
    i: usize,
    rankvecs: &[Vec<Vec<usize>>],
    choice: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if i == block.len() {
        f(choice);
        return;
    }
    let part = block[i];
    for c in 0..rankvecs[part].len() {
        choice[part] = c;
        choose_ranks(block, i + 1, rankvecs, choice, f);
    }
}

/// All spherical arrangements of `g`, complete and irredundant up to
/// equivalence, sorted by certificate. Returns the empty list when `g` is
/// not planar.
pub fn spherical_arrangements(g: &Graph, reflection: bool) -> Vec<Arrangement> {
    let comps = g.components();
    if comps.is_empty() {
        return vec![Arrangement::new(g.clone(), Vec::new(), Vec::new())];
    }
    let mut part_reps: Vec<Vec<PartEmbedding>> = Vec::with_capacity(comps.len());
    for (cg, vmap) in &comps {
        let reps = match oriented_embedding_reps(cg) {
            Ok(r) => r,
            Err(_) => return Vec::new(),
        };
        if reps.is_empty() {
            return Vec::new(); // nonplanar component
        }
        part_reps.push(
            reps.into_iter()
                .map(|rs| {
                    let faces = rs.faces();
                    PartEmbedding {
                        rs,
                        vmap: vmap.clone(),
                        faces,
                    }
                })
                .collect(),
        );
    }
    let k = comps.len();
    let mut found: BTreeMap<Vec<u8>, Arrangement> = BTreeMap::new();
    let mut pick: Vec<usize> = vec![0; k];
    enumerate_embedding_choices(g, &part_reps, 0, &mut pick, reflection, &mut found);
    found.into_values().collect()
}

fn enumerate_embedding_choices(
    g: &Graph,
    part_reps: &[Vec<PartEmbedding>],
    i: usize,
    pick: &mut Vec<usize>,
    reflection: bool,
    found: &mut BTreeMap<Vec<u8>, Arrangement>,
) {
    if i == part_reps.len() {
        let parts: Vec<PartEmbedding> = part_reps
            .iter()
            .zip(pick.iter())
            .map(|(reps, &c)| reps[c].clone())
            .collect();
        enumerate_groupings(g, &parts, reflection, found);
        return;
    }
    for c in 0..part_reps[i].len() {
        pick[i] = c;
        enumerate_embedding_choices(g, part_reps, i + 1, pick, reflection, found);
    }
}

fn enumerate_groupings(
    g: &Graph,
    parts: &[PartEmbedding],
    reflection: bool,
    found: &mut BTreeMap<Vec<u8>, Arrangement>,
) {
    let k = parts.len();
    let items: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(p, pe)| (0..pe.faces.len()).map(move |f| (p, f)))
        .collect();
    let target = items.len() + 1 - k; // tree condition on the incidence structure
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    rec_partition(g, parts, &items, 0, target, &mut groups, reflection, found);
}

#[allow(clippy::too_many_arguments)]
fn rec_partition(
    g: &Graph,
    parts: &[PartEmbedding],
    items: &[(usize, usize)],
    i: usize,
    target: usize,
    groups: &mut Vec<Vec<(usize, usize)>>,
    reflection: bool,
    found: &mut BTreeMap<Vec<u8>, Arrangement>,
) {
    if groups.len() > target || groups.len() + (items.len() - i) < target {
        return;
    }
    if i == items.len() {
        if groups.len() == target && incidence_connected(parts.len(), groups) {
            let a = Arrangement::new(
                g.clone(),
                parts.to_vec(),
                groups
                    .iter()
                    .map(|grp| grp.iter().copied().collect::<BTreeSet<_>>())
                    .collect(),
            );
            let cert = a.certificate(reflection);
            found.entry(cert).or_insert(a);
        }
        return;
    }
    let (p, f) = items[i];
    for gi in 0..groups.len() {
        if groups[gi].iter().any(|&(q, _)| q == p) {
            continue; // two faces of one part cannot bound the same region
        }
        groups[gi].push((p, f));
        rec_partition(g, parts, items, i + 1, target, groups, reflection, found);
        groups[gi].pop();
    }
    groups.push(vec![(p, f)]);
    rec_partition(g, parts, items, i + 1, target, groups, reflection, found);
    groups.pop();
}

fn incidence_connected(k: usize, groups: &[Vec<(usize, usize)>]) -> bool {
    if k == 0 {
        return true;
    }
    let mut part_seen = vec![false; k];
    let mut group_seen = vec![false; groups.len()];
    part_seen[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for (gi, grp) in groups.iter().enumerate() {
            if group_seen[gi] {
                continue;
            }
            if grp.iter().any(|&(p, _)| part_seen[p]) {
                group_seen[gi] = true;
                changed = true;
                for &(p, _) in grp {
                    if !part_seen[p] {
                        part_seen[p] = true;
                    }
                }
            }
        }
    }
    part_seen.iter().all(|&x| x) && group_seen.iter().all(|&x| x)
}

/// Visit spherical arrangements of `g` without deduplication (equivalent
/// arrangements may repeat). The visitor returns `false` to stop early;
/// the function returns `false` iff it was stopped.
pub fn for_each_spherical_arrangement(
    g: &Graph,
    f: &mut dyn FnMut(&Arrangement) -> bool,
) -> bool {
    let comps = g.components();
    if comps.is_empty() {
        return f(&Arrangement::new(g.clone(), Vec::new(), Vec::new()));
    }
    let mut part_reps: Vec<Vec<PartEmbedding>> = Vec::with_capacity(comps.len());
    for (cg, vmap) in &comps {
        let reps = match oriented_embedding_reps(cg) {
            Ok(r) => r,
            Err(_) => return true,
        };
        if reps.is_empty() {
            return true;
        }
        part_reps.push(
            reps.into_iter()
                .map(|rs| {
                    let faces = rs.faces();
                    PartEmbedding {
                        rs,
                        vmap: vmap.clone(),
                        faces,
                    }
                })
                .collect(),
        );
    }
    let k = comps.len();
    let mut pick = vec![0usize; k];
    visit_embedding_choices(g, &part_reps, 0, &mut pick, f)
}

fn visit_embedding_choices(
    g: &Graph,
    part_reps: &[Vec<PartEmbedding>],
    i: usize,
    pick: &mut Vec<usize>,
    f: &mut dyn FnMut(&Arrangement) -> bool,
) -> bool {
    if i == part_reps.len() {
        let parts: Vec<PartEmbedding> = part_reps
            .iter()
            .zip(pick.iter())
            .map(|(reps, &c)| reps[c].clone())
            .collect();
        let items: Vec<(usize, usize)> = parts
            .iter()
            .enumerate()
            .flat_map(|(p, pe)| (0..pe.faces.len()).map(move |fc| (p, fc)))
            .collect();
        let target = items.len() + 1 - parts.len();
        let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
        return visit_partitions(g, &parts, &items, 0, target, &mut groups, f);
    }
    for c in 0..part_reps[i].len() {
        pick[i] = c;
        if !visit_embedding_choices(g, part_reps, i + 1, pick, f) {
            return false;
        }
    }
    true
}

fn visit_partitions(
    g: &Graph,
    parts: &[PartEmbedding],
    items: &[(usize, usize)],
    i: usize,
    target: usize,
    groups: &mut Vec<Vec<(usize, usize)>>,
    f: &mut dyn FnMut(&Arrangement) -> bool,
) -> bool {
    if groups.len() > target || groups.len() + (items.len() - i) < target {
        return true;
    }
    if i == items.len() {
        if groups.len() == target && incidence_connected(parts.len(), groups) {
            let a = Arrangement::new(
                g.clone(),
                parts.to_vec(),
                groups
                    .iter()
                    .map(|grp| grp.iter().copied().collect::<BTreeSet<_>>())
                    .collect(),
            );
            return f(&a);
        }
        return true;
    }
    let (p, fc) = items[i];
    for gi in 0..groups.len() {
        if groups[gi].iter().any(|&(q, _)| q == p) {
            continue;
        }
        groups[gi].push((p, fc));
        let cont = visit_partitions(g, parts, items, i + 1, target, groups, f);
        groups[gi].pop();
        if !cont {
            return false;
        }
    }
    groups.push(vec![(p, fc)]);
    let cont = visit_partitions(g, parts, items, i + 1, target, groups, f);
    groups.pop();
    cont
}

/// Equivalence of two arrangements under the configured convention.
pub fn equivalent(a: &Arrangement, b: &Arrangement, reflection: bool) -> bool {
    a.certificate(reflection) == b.certificate(reflection)
}

/// Planarity by Demoucron-style embedding growth (block by block).
pub fn is_planar(g: &Graph) -> bool {
    crate::embed::demoucron_planar(g)
}

/// Outerplanarity: some arrangement has a global face incident to every
/// vertex.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.vertex_count();
    spherical_arrangements(g, true).iter().any(|a| {
        (0..a.global_face_count()).any(|gi| a.face_vertices(gi).len() == n)
    })
}

/// Deterministic text serialization of an arrangement.
pub fn write_arrangement(a: &Arrangement) -> String {
    let mut out = String::new();
    for (pi, p) in a.parts().iter().enumerate() {
        let verts: Vec<String> = p.vmap.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("part {}: {}\n", pi, verts.join(" ")));
    }
    for p in a.parts() {
        for v in 0..p.rs.graph().vertex_count() {
            let nb: Vec<String> = p
                .rs
                .rotation(v)
                .iter()
                .map(|&w| p.vmap[w].to_string())
                .collect();
            out.push_str(&format!("rot {}: {}\n", p.vmap[v], nb.join(" ")));
        }
    }
    for (gi, grp) in a.groups().iter().enumerate() {
        let mut pieces = Vec::new();
        for &(p, f) in grp {
            let part = &a.parts()[p];
            if part.is_vertex_part() {
                pieces.push(format!("p{}.f{} v{}", p, f, part.vmap[0]));
            } else {
                let walk: Vec<String> = part.faces[f]
                    .iter()
                    .map(|&d| format!("{}>{}", part.vmap[d.0], part.vmap[d.1]))
                    .collect();
                pieces.push(format!("p{}.f{} {}", p, f, walk.join(" ")));
            }
        }
        out.push_str(&format!("face {}: {}\n", gi, pieces.join(" ; ")));
    }
    for (pi, nest) in a.nesting().iter().enumerate() {
        if let Some((gi, f)) = nest {
            out.push_str(&format!("place {} in-face {} outward {}\n", pi, gi, f));
        }
    }
    out
}

/// Parse the output of [`write_arrangement`] back against its graph.
pub fn read_arrangement(text: &str, g: &Graph) -> Result<Arrangement, String> {
    let mut rot_lines: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut face_lines: Vec<Vec<(usize, usize)>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("rot ") {
            let (v, nb) = rest
                .split_once(':')
                .ok_or_else(|| format!("bad rot line: {line}"))?;
            let v: usize = v.trim().parse().map_err(|_| format!("bad vertex: {line}"))?;
            let nb: Vec<usize> = nb
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| format!("bad neighbor: {line}")))
                .collect::<Result<_, _>>()?;
            rot_lines.insert(v, nb);
        } else if let Some(rest) = line.strip_prefix("face ") {
            let (_, body) = rest
                .split_once(':')
                .ok_or_else(|| format!("bad face line: {line}"))?;
            let mut grp = Vec::new();
            for piece in body.split(';') {
                let tag = piece
                    .split_whitespace()
                    .next()
                    .ok_or_else(|| format!("empty face piece: {line}"))?;
                let tag = tag
                    .strip_prefix('p')
                    .ok_or_else(|| format!("bad face tag: {line}"))?;
                let (p, f) = tag
                    .split_once(".f")
                    .ok_or_else(|| format!("bad face tag: {line}"))?;
                grp.push((
                    p.parse().map_err(|_| format!("bad part: {line}"))?,
                    f.parse().map_err(|_| format!("bad face index: {line}"))?,
                ));
            }
            face_lines.push(grp);
        }
    }
    let comps = g.components();
    let mut parts = Vec::new();
    for (cg, vmap) in comps {
        let mut rot = Vec::with_capacity(cg.vertex_count());
        let inv: HashMap<usize, usize> = vmap.iter().enumerate().map(|(l, &gv)| (gv, l)).collect();
        for (l, &gv) in vmap.iter().enumerate() {
            let nb = rot_lines
                .get(&gv)
                .ok_or_else(|| format!("missing rot line for vertex {gv}"))?;
            let local: Vec<usize> = nb
                .iter()
                .map(|w| {
                    inv.get(w)
                        .copied()
                        .ok_or_else(|| format!("vertex {w} not in component of {gv}"))
                })
                .collect::<Result<_, _>>()?;
            let _ = l;
            rot.push(local);
        }
        let rs = RotationSystem::new(cg, rot).map_err(|e| e.to_string())?;
        if !rs.is_spherical() {
            return Err("rotation system is not genus 0".into());
        }
        let faces = rs.faces();
        parts.push(PartEmbedding { rs, vmap, faces });
    }
    // validate the face partition
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for grp in &face_lines {
        let mut parts_in = HashSet::new();
        for &(p, f) in grp {
            if p >= parts.len() || f >= parts[p].faces.len() {
                return Err(format!("face reference p{p}.f{f} out of range"));
            }
            if !seen.insert((p, f)) {
                return Err(format!("face p{p}.f{f} listed twice"));
            }
            if !parts_in.insert(p) {
                return Err(format!("global face contains two faces of part {p}"));
            }
        }
    }
    let total: usize = parts.iter().map(|p| p.faces.len()).sum();
    if seen.len() != total {
        return Err("face partition does not cover all part faces".into());
    }
    if !parts.is_empty() {
        if face_lines.len() + parts.len() != total + 1 {
            return Err("face partition fails the tree count condition".into());
        }
        let grp_vec: Vec<Vec<(usize, usize)>> = face_lines.clone();
        if !incidence_connected(parts.len(), &grp_vec) {
            return Err("face partition incidence structure is not connected".into());
        }
    }
    Ok(Arrangement::new(
        g.clone(),
        parts,
        face_lines
            .into_iter()
            .map(|grp| grp.into_iter().collect())
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(g: &Graph) -> usize {
        spherical_arrangements(g, true).len()
    }

    #[test]
    fn single_vertex_one_arrangement() {
        assert_eq!(count(&Graph::empty(1)), 1);
        assert_eq!(count(&Graph::empty(3)), 1);
    }

    #[test]
    fn connected_small_graphs() {
        assert_eq!(count(&Graph::complete(3)), 1);
        assert_eq!(count(&Graph::complete(4)), 1);
        assert_eq!(count(&Graph::complete_multipartite(&[3, 2])), 1);
    }

    #[test]
    fn two_triangles_unique() {
        let t = Graph::complete(3);
        assert_eq!(count(&t.disjoint_union(&t)), 1);
    }

    #[test]
    fn k4_uk4_unique() {
        let k4 = Graph::complete(4);
        assert_eq!(count(&k4.disjoint_union(&k4)), 1);
    }

    #[test]
    fn k32_uk32_unique() {
        let k32 = Graph::complete_multipartite(&[3, 2]);
        assert_eq!(count(&k32.disjoint_union(&k32)), 1);
    }

    #[test]
    fn euler_formula_per_arrangement() {
        let g = Graph::complete(4).disjoint_union(&Graph::empty(2));
        for a in spherical_arrangements(&g, true) {
            let v = g.vertex_count() as i64;
            let e = g.edge_count() as i64;
            assert_eq!(v - e + a.global_face_count() as i64, 1 + a.parts().len() as i64);
        }
    }

    #[test]
    fn nonplanar_empty() {
        assert_eq!(count(&Graph::complete(5)), 0);
        assert!(!is_planar(&Graph::complete(5)));
        assert!(is_planar(&Graph::complete(4)));
    }

    #[test]
    fn outerplanarity_examples() {
        assert!(!is_outerplanar(&Graph::complete(4)));
        assert!(!is_outerplanar(&Graph::complete_multipartite(&[3, 2])));
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(is_outerplanar(&c5));
    }

    #[test]
    fn reflection_flag_never_increases_counts() {
        let g = Graph::complete(4).disjoint_union(&Graph::empty(1));
        assert!(spherical_arrangements(&g, true).len() <= spherical_arrangements(&g, false).len());
    }

    #[test]
    fn serialization_round_trip() {
        let g = Graph::complete(4).disjoint_union(&Graph::empty(2));
        for a in spherical_arrangements(&g, true) {
            let text = write_arrangement(&a);
            let b = read_arrangement(&text, &g).unwrap();
            assert!(equivalent(&a, &b, true));
        }
    }

    #[test]
    fn relabeling_invariance_of_counts() {
        let g = Graph::complete(4).disjoint_union(&Graph::empty(1));
        let perm = [4usize, 2, 0, 3, 1];
        let h = g.relabel(&perm);
        assert_eq!(
            spherical_arrangements(&g, true).len(),
            spherical_arrangements(&h, true).len()
        );
    }
}
