//! Rotation systems of connected graphs: face tracing, Euler-genus
//! filtering, and canonical map codes.
//!
//! A rotation system assigns each vertex a cyclic order of its incident
//! edges. Faces are the orbits of darts (directed edges) under
//! "next = rotation successor of the reversed dart"; the system is
//! spherical (genus 0) exactly when V - E + F = 2.

use crate::graph::{Graph, GraphError};
use std::collections::HashSet;
use thiserror::Error;

/// A directed edge `(tail, head)`.
pub type Dart = (usize, usize);

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum EmbedError {
    #[error("rotation systems are defined per connected component")]
    Disconnected,
    #[error("rotation at vertex {0} is not a permutation of its incident edges")]
    BadRotation(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A combinatorial embedding of one connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    graph: Graph,
    rot: Vec<Vec<usize>>, // rot[v] = neighbors of v in cyclic order
}

impl RotationSystem {
    pub fn new(graph: Graph, rot: Vec<Vec<usize>>) -> Result<Self, EmbedError> {
        if !graph.is_connected() {
            return Err(EmbedError::Disconnected);
        }
        for v in 0..graph.vertex_count() {
            let mut r = rot[v].clone();
            r.sort_unstable();
            if r != graph.neighbors(v) {
                return Err(EmbedError::BadRotation(v));
            }
        }
        Ok(RotationSystem { graph, rot })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn darts(&self) -> Vec<Dart> {
        let mut out = Vec::with_capacity(2 * self.graph.edge_count());
        for (u, v) in self.graph.edges() {
            out.push((u, v));
            out.push((v, u));
        }
        out
    }

    /// The dart following `d` on its face walk.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let (u, v) = d;
        let r = &self.rot[v];
        let i = r.iter().position(|&w| w == u).expect("dart in graph");
        (v, r[(i + 1) % r.len()])
    }

    /// Face walks; every dart appears in exactly one walk. A single
    /// isolated vertex yields one face with an empty walk.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let darts = self.darts();
        if darts.is_empty() {
            return vec![Vec::new()];
        }
        let mut seen = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for &start in &darts {
            if seen.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                walk.push(d);
                seen.insert(d);
                d = self.next_dart(d);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
        faces
    }

    pub fn is_spherical(&self) -> bool {
        let v = self.graph.vertex_count() as i64;
        let e = self.graph.edge_count() as i64;
        let f = self.faces().len() as i64;
        v - e + f == 2
    }

    /// The same embedding with reversed orientation (all rotations flipped).
    pub fn mirrored(&self) -> RotationSystem {
        let rot = self
            .rot
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.reverse();
                r
            })
            .collect();
        RotationSystem {
            graph: self.graph.clone(),
            rot,
        }
    }

    /// Traversal code rooted at `root`, with the vertex relabeling it
    /// induces (vertex -> discovery label). Two connected rotation systems
    /// are related by an orientation-preserving map isomorphism iff they
    /// share a code for some pair of roots.
    pub fn code_from(&self, root: Dart) -> (Vec<usize>, Vec<usize>) {
        let n = self.graph.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut entry = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root.0] = 0;
        entry[root.0] = root.1;
        order.push(root.0);
        let mut next = 1;
        let mut code = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            let r = &self.rot[v];
            code.push(r.len());
            if r.is_empty() {
                continue;
            }
            let start = r.iter().position(|&w| w == entry[v]).expect("entry dart");
            for k in 0..r.len() {
                let w = r[(start + k) % r.len()];
                if label[w] == usize::MAX {
                    label[w] = next;
                    entry[w] = v;
                    order.push(w);
                    next += 1;
                }
                code.push(label[w]);
            }
        }
        (code, label)
    }

    /// Minimal traversal code over all roots (orientation-preserving only).
    pub fn min_code(&self) -> Vec<usize> {
        let darts = self.darts();
        if darts.is_empty() {
            return vec![0];
        }
        darts
            .iter()
            .map(|&d| self.code_from(d).0)
            .min()
            .expect("at least one dart")
    }

    /// All roots whose traversal code achieves the minimum; these are in
    /// bijection with the orientation-preserving map automorphisms.
    pub fn min_code_roots(&self) -> (Vec<usize>, Vec<Dart>) {
        let darts = self.darts();
        if darts.is_empty() {
            return (vec![0], Vec::new());
        }
        let mut best: Option<Vec<usize>> = None;
        let mut roots = Vec::new();
        for &d in &darts {
            let (code, _) = self.code_from(d);
            match &best {
                Some(b) if code > *b => {}
                Some(b) if code == *b => roots.push(d),
                _ => {
                    best = Some(code);
                    roots = vec![d];
                }
            }
        }
        (best.unwrap(), roots)
    }

    /// Rank of each face (by index into `faces`) under the canonical dart
    /// order induced by the traversal from `root`: darts are scanned in
    /// discovery-label order of their tail, then rotation order from the
    /// entry dart; a face's rank is the position of its first dart.
    pub fn face_ranks(&self, faces: &[Vec<Dart>], root: Dart) -> Vec<usize> {
        if self.graph.edge_count() == 0 {
            return vec![0; faces.len()];
        }
        let (_, label) = self.code_from(root);
        let mut face_of = std::collections::HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            for &d in f {
                face_of.insert(d, i);
            }
        }
        // vertices sorted by discovery label
        let n = self.graph.vertex_count();
        let mut verts: Vec<usize> = (0..n).collect();
        verts.sort_by_key(|&v| label[v]);
        let mut entry = vec![usize::MAX; n];
        entry[root.0] = root.1;
        // reconstruct entry darts in discovery order
        {
            let mut lab = vec![usize::MAX; n];
            lab[root.0] = 0;
            let mut order = vec![root.0];
            let mut next = 1;
            let mut i = 0;
            while i < order.len() {
                let v = order[i];
                i += 1;
                let r = &self.rot[v];
                if r.is_empty() {
                    continue;
                }
                let start = r.iter().position(|&w| w == entry[v]).unwrap();
                for k in 0..r.len() {
                    let w = r[(start + k) % r.len()];
                    if lab[w] == usize::MAX {
                        lab[w] = next;
                        entry[w] = v;
                        order.push(w);
                        next += 1;
                    }
                }
            }
        }
        let mut key = vec![usize::MAX; faces.len()];
        let mut pos = 0;
        for &v in &verts {
            let r = &self.rot[v];
            if r.is_empty() {
                continue;
            }
            let start = r.iter().position(|&w| w == entry[v]).unwrap();
            for k in 0..r.len() {
                let w = r[(start + k) % r.len()];
                let f = face_of[&(v, w)];
                if key[f] == usize::MAX {
                    key[f] = pos;
                }
                pos += 1;
            }
        }
        // rank faces by key
        let mut idx: Vec<usize> = (0..faces.len()).collect();
        idx.sort_by_key(|&f| key[f]);
        let mut rank = vec![0; faces.len()];
        for (r, &f) in idx.iter().enumerate() {
            rank[f] = r;
        }
        rank
    }
}

fn cyclic_orders(neighbors: &[usize]) -> Vec<Vec<usize>> {
    // quotient by rotation: fix the first neighbor, permute the rest
    if neighbors.len() <= 2 {
        return vec![neighbors.to_vec()];
    }
    let first = neighbors[0];
    let rest: Vec<usize> = neighbors[1..].to_vec();
    let mut out = Vec::new();
    permute(&mut rest.clone(), 0, &mut |p| {
        let mut r = Vec::with_capacity(neighbors.len());
        r.push(first);
        r.extend_from_slice(p);
        out.push(r);
    });
    out
}

fn permute(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Every rotation system of a connected graph, with no genus filter:
/// exactly the product of (deg(v) - 1)! cyclic orders.
pub fn rotation_systems(g: &Graph) -> Result<Vec<RotationSystem>, EmbedError> {
    if !g.is_connected() {
        return Err(EmbedError::Disconnected);
    }
    let n = g.vertex_count();
    let choices: Vec<Vec<Vec<usize>>> = (0..n).map(|v| cyclic_orders(&g.neighbors(v))).collect();
    let mut out = Vec::new();
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    fn rec(
        v: usize,
        n: usize,
        choices: &[Vec<Vec<usize>>],
        rot: &mut Vec<Vec<usize>>,
        g: &Graph,
        out: &mut Vec<RotationSystem>,
    ) {
        if v == n {
            out.push(RotationSystem {
                graph: g.clone(),
                rot: rot.clone(),
            });
            return;
        }
        for c in &choices[v] {
            rot[v] = c.clone();
            rec(v + 1, n, choices, rot, g, out);
        }
    }
    rec(0, n, &choices, &mut rot, g, &mut out);
    Ok(out)
}

/// Genus-0 rotation systems of a connected graph, found by backtracking
/// over per-vertex cyclic orders with a face-count bound prune.
pub fn spherical_rotation_systems(g: &Graph) -> Result<Vec<RotationSystem>, EmbedError> {
    enumerate_spherical(g, false)
}

/// Whether the connected graph has any genus-0 rotation system.
pub fn has_spherical_rotation(g: &Graph) -> Result<bool, EmbedError> {
    Ok(!enumerate_spherical(g, true)?.is_empty())
}

/// Planarity decision by Demoucron–Malgrange–Pertuiset embedding growth,
/// block by block. This is independent of the rotation-system search: it
/// grows a planar subgraph face by face and reports failure exactly when
/// some bridge has no admissible face.
pub(crate) fn demoucron_planar(g: &Graph) -> bool {
    biconnected_blocks(g).into_iter().all(|edges| {
        let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let idx = |v: usize| verts.binary_search(&v).unwrap();
        let local: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (idx(u), idx(v))).collect();
        let bg = Graph::new(verts.len(), &local).expect("block edges are simple");
        demoucron_block(&bg)
    })
}

/// Biconnected components of `g` as edge lists.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let mut num = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut counter = 0usize;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<Vec<(usize, usize)>> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &Graph,
        u: usize,
        parent: Option<usize>,
        num: &mut [usize],
        low: &mut [usize],
        counter: &mut usize,
        stack: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        *counter += 1;
        num[u] = *counter;
        low[u] = *counter;
        for v in g.neighbors(u) {
            if Some(v) == parent {
                continue;
            }
            if num[v] == 0 {
                stack.push((u, v));
                dfs(g, v, Some(u), num, low, counter, stack, out);
                low[u] = low[u].min(low[v]);
                if low[v] >= num[u] {
                    let mut comp = Vec::new();
                    while let Some(e) = stack.pop() {
                        comp.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    out.push(comp);
                }
            } else if num[v] < num[u] {
                stack.push((u, v));
                low[u] = low[u].min(num[v]);
            }
        }
    }
    for s in 0..n {
        if num[s] == 0 {
            dfs(g, s, None, &mut num, &mut low, &mut counter, &mut stack, &mut out);
        }
    }
    out
}

fn demoucron_block(g: &Graph) -> bool {
    let n = g.vertex_count();
    let e = g.edge_count();
    // a Kuratowski subdivision needs e − n ≥ 3
    if e <= n + 2 {
        return true;
    }
    if n >= 3 && e > 3 * n - 6 {
        return false;
    }
    // seed with any cycle (one exists: e > n)
    let cycle = find_cycle(g).expect("2-connected block with e > n has a cycle");
    let ekey = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut in_h = vec![false; n];
    for &v in &cycle {
        in_h[v] = true;
    }
    let mut h_edges: HashSet<(usize, usize)> = (0..cycle.len())
        .map(|i| ekey(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect();
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];
    loop {
        if h_edges.len() == e {
            return true;
        }
        // bridges: connected chunks of G − H plus single leftover edges
        let mut comp = vec![usize::MAX; n];
        let mut ncomp = 0usize;
        for s in 0..n {
            if in_h[s] || comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = ncomp;
            while let Some(v) = stack.pop() {
                for w in g.neighbors(v) {
                    if !in_h[w] && comp[w] == usize::MAX {
                        comp[w] = ncomp;
                        stack.push(w);
                    }
                }
            }
            ncomp += 1;
        }
        enum BridgeKind {
            Edge(usize, usize),
            Chunk(usize),
        }
        let mut bridges: Vec<(Vec<usize>, BridgeKind)> = Vec::new();
        let mut attach: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); ncomp];
        for (u, v) in g.edges() {
            if h_edges.contains(&ekey(u, v)) {
                continue;
            }
            match (in_h[u], in_h[v]) {
                (true, true) => bridges.push((vec![u, v], BridgeKind::Edge(u, v))),
                (true, false) => {
                    attach[comp[v]].insert(u);
                }
                (false, true) => {
                    attach[comp[u]].insert(v);
                }
                (false, false) => {}
            }
        }
        for c in 0..ncomp {
            bridges.push((
                attach[c].iter().copied().collect(),
                BridgeKind::Chunk(c),
            ));
        }
        // admissible faces per bridge; embed a bridge with the fewest
        let mut best: Option<(usize, usize, usize)> = None; // (count, bridge, face)
        for (bi, (at, _)) in bridges.iter().enumerate() {
            let mut count = 0;
            let mut first = usize::MAX;
            for (fi, f) in faces.iter().enumerate() {
                if at.iter().all(|v| f.contains(v)) {
                    count += 1;
                    if first == usize::MAX {
                        first = fi;
                    }
                }
            }
            if count == 0 {
                return false;
            }
            if best.map_or(true, |(c, _, _)| count < c) {
                best = Some((count, bi, first));
            }
        }
        let (_, bi, fi) = best.expect("residual edges imply a bridge");
        let (at, kind) = &bridges[bi];
        // a path through the bridge between two distinct attachments
        let path: Vec<usize> = match *kind {
            BridgeKind::Edge(u, v) => vec![u, v],
            BridgeKind::Chunk(c) => {
                let a = at[0];
                let b = at[1];
                // BFS from a through chunk vertices to b
                let mut parent = vec![usize::MAX; n];
                let mut queue = std::collections::VecDeque::new();
                for w in g.neighbors(a) {
                    if !in_h[w] && comp[w] == c && parent[w] == usize::MAX {
                        parent[w] = a;
                        queue.push_back(w);
                    }
                }
                let mut end = usize::MAX;
                'bfs: while let Some(v) = queue.pop_front() {
                    for w in g.neighbors(v) {
                        if w == b {
                            end = v;
                            break 'bfs;
                        }
                        if !in_h[w] && comp[w] == c && parent[w] == usize::MAX {
                            parent[w] = v;
                            queue.push_back(w);
                        }
                    }
                }
                assert_ne!(end, usize::MAX, "attachments connect through the chunk");
                let mut p = vec![b];
                let mut v = end;
                while v != a {
                    p.push(v);
                    v = parent[v];
                }
                p.push(a);
                p.reverse();
                p
            }
        };
        // split face fi along the path
        let f = faces.swap_remove(fi);
        let a = path[0];
        let b = *path.last().unwrap();
        let ia = f.iter().position(|&v| v == a).unwrap();
        let ib = f.iter().position(|&v| v == b).unwrap();
        let l = f.len();
        let mut arc1 = Vec::new(); // a .. b inclusive
        let mut i = ia;
        loop {
            arc1.push(f[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % l;
        }
        let mut arc2 = Vec::new(); // b .. a inclusive
        let mut i = ib;
        loop {
            arc2.push(f[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % l;
        }
        let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
        let mut f1 = arc1;
        f1.extend(interior.iter().rev());
        let mut f2 = arc2;
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(ekey(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
    }
}

/// Some simple cycle of `g`, as a vertex list.
fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut state = vec![0u8; n]; // 0 unseen, 1 on path, 2 done
    let mut path: Vec<usize> = Vec::new();
    fn dfs(
        g: &Graph,
        u: usize,
        parent: Option<usize>,
        state: &mut [u8],
        path: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        state[u] = 1;
        path.push(u);
        for v in g.neighbors(u) {
            if Some(v) == parent {
                continue;
            }
            if state[v] == 1 {
                let start = path.iter().position(|&x| x == v).unwrap();
                return Some(path[start..].to_vec());
            }
            if state[v] == 0 {
                if let Some(c) = dfs(g, v, Some(u), state, path) {
                    return Some(c);
                }
            }
        }
        state[u] = 2;
        path.pop();
        None
    }
    for s in 0..n {
        if state[s] == 0 {
            if let Some(c) = dfs(g, s, None, &mut state, &mut path) {
                return Some(c);
            }
        }
    }
    None
}

fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut color = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let cv = color[v].unwrap();
            for w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        stack.push(w);
                    }
                    Some(cw) if cw == cv => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

fn enumerate_spherical(g: &Graph, stop_at_first: bool) -> Result<Vec<RotationSystem>, EmbedError> {
    if !g.is_connected() {
        return Err(EmbedError::Disconnected);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let e = g.edge_count();
    if e == 0 {
        // single vertex
        return Ok(vec![RotationSystem {
            graph: g.clone(),
            rot: vec![Vec::new(); n],
        }]);
    }
    let needed_faces = e as i64 - n as i64 + 2;
    if needed_faces < 1 {
        return Ok(Vec::new());
    }
    // Euler bounds reject dense graphs before any search: a simple planar
    // graph has e ≤ 3n − 6, and e ≤ 2n − 4 when triangle-free.
    if n >= 3 {
        if e > 3 * n - 6 {
            return Ok(Vec::new());
        }
        if e > 2 * n - 4 && is_bipartite(g) {
            return Ok(Vec::new());
        }
    }
    // assign vertices in a connected BFS order from a max-degree root,
    // preferring high degrees: partial face orbits then close early and
    // the face-count bound prunes hardest
    let root = (0..n).max_by_key(|&v| g.degree(v)).unwrap();
    let mut order = vec![root];
    let mut in_order = vec![false; n];
    in_order[root] = true;
    let mut qi = 0;
    while qi < order.len() {
        let v = order[qi];
        qi += 1;
        let mut nb = g.neighbors(v);
        nb.sort_by_key(|&w| std::cmp::Reverse(g.degree(w)));
        for w in nb {
            if !in_order[w] {
                in_order[w] = true;
                order.push(w);
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    let choices: Vec<Vec<Vec<usize>>> = (0..n).map(|v| cyclic_orders(&g.neighbors(v))).collect();

    let mut rot: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut out = Vec::new();

    struct Ctx<'a> {
        g: &'a Graph,
        order: &'a [usize],
        choices: &'a [Vec<Vec<usize>>],
        needed: i64,
        stop: bool,
    }

    fn max_faces(g: &Graph, rot: &[Option<Vec<usize>>]) -> i64 {
        // closed face orbits + darts whose head rotation is unassigned
        let mut darts = Vec::new();
        for (u, v) in g.edges() {
            darts.push((u, v));
            darts.push((v, u));
        }
        let mut undefined = 0i64;
        let mut seen = std::collections::HashSet::new();
        let mut closed = 0i64;
        for &d in &darts {
            if rot[d.1].is_none() {
                undefined += 1;
            }
        }
        for &start in &darts {
            if seen.contains(&start) {
                continue;
            }
            let mut d = start;
            let mut orbit = vec![];
            let closed_orbit = loop {
                orbit.push(d);
                let (u, v) = d;
                match &rot[v] {
                    None => break false,
                    Some(r) => {
                        let i = r.iter().position(|&w| w == u).unwrap();
                        d = (v, r[(i + 1) % r.len()]);
                        if d == start {
                            break true;
                        }
                        if orbit.contains(&d) {
                            break false; // ran into a partially-walked region
                        }
                    }
                }
            };
            if closed_orbit {
                for x in orbit {
                    seen.insert(x);
                }
                closed += 1;
            }
        }
        closed + undefined
    }

    fn rec(
        i: usize,
        ctx: &Ctx,
        rot: &mut Vec<Option<Vec<usize>>>,
        out: &mut Vec<RotationSystem>,
    ) -> bool {
        if i == ctx.order.len() {
            let full: Vec<Vec<usize>> = rot.iter().map(|r| r.clone().unwrap()).collect();
            let rs = RotationSystem {
                graph: ctx.g.clone(),
                rot: full,
            };
            if rs.is_spherical() {
                out.push(rs);
                if ctx.stop {
                    return true;
                }
            }
            return false;
        }
        let v = ctx.order[i];
        for c in &ctx.choices[v] {
            rot[v] = Some(c.clone());
            if max_faces(ctx.g, rot) >= ctx.needed && rec(i + 1, ctx, rot, out) {
                return true;
            }
        }
        rot[v] = None;
        false
    }

    let ctx = Ctx {
        g,
        order: &order,
        choices: &choices,
        needed: needed_faces,
        stop: stop_at_first,
    };
    rec(0, &ctx, &mut rot, &mut out);
    Ok(out)
}

/// Inequivalent genus-0 embeddings of a connected graph under
/// orientation-preserving equivalence only (reflections are handled at the
/// arrangement level, where they act globally).
pub fn oriented_embedding_reps(g: &Graph) -> Result<Vec<RotationSystem>, EmbedError> {
    let all = spherical_rotation_systems(g)?;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for rs in all {
        if seen.insert(rs.min_code()) {
            out.push(rs);
        }
    }
    Ok(out)
}
