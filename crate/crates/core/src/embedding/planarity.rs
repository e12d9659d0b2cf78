//! Planarity testing by fragment (bridge) embedding.
//!
//! Each biconnected block is embedded separately: start from a cycle, and
//! repeatedly route a path of some fragment through a face that contains
//! all of the fragment's attachment vertices, preferring fragments with a
//! single admissible face. A fragment with no admissible face proves the
//! block non-planar. Block rotations are concatenated at cut vertices.

use super::RotationSystem;
use crate::graph::{Edge, Graph};
use std::collections::{HashMap, VecDeque};

/// Result of [`planarity_test`]. When planar, `witness` holds an
/// all-positive rotation system that traces to Euler genus 0.
#[derive(Debug, Clone)]
pub struct Planarity {
    pub planar: bool,
    pub witness: Option<RotationSystem>,
}

pub fn planarity_test(g: &Graph) -> Planarity {
    let non_planar = Planarity {
        planar: false,
        witness: None,
    };
    if g.order() >= 3 && g.size() > 3 * g.order() - 6 {
        return non_planar;
    }
    let mut orders: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for block in biconnected_components(g) {
        if let [(u, v)] = block[..] {
            orders[u].push(v);
            orders[v].push(u);
            continue;
        }
        match embed_block(&block) {
            Some(local) => {
                for (v, nbrs) in local {
                    orders[v].extend(nbrs);
                }
            }
            None => return non_planar,
        }
    }
    let witness = RotationSystem::orientable(g.clone(), &orders)
        .expect("block rotations cover every incidence once");
    Planarity {
        planar: true,
        witness: Some(witness),
    }
}

/// Edge sets of the biconnected blocks, found with an iterative
/// Hopcroft-Tarjan search. Bridges come out as single-edge blocks.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.order();
    let unset = usize::MAX;
    let mut disc = vec![unset; n];
    let mut low = vec![unset; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != unset || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, unset, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let w = g.neighbors(v)[top.2];
                top.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == unset {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(crate::graph::normalize(e.0, e.1));
                            if e == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

enum Fragment {
    Chord(usize, usize),
    /// Vertices of a component of `G - V(H)` and its attachments in `H`.
    Component(Vec<usize>, Vec<usize>),
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Component(_, att) => att.clone(),
        }
    }
}

/// Embeds one biconnected block with at least two edges. Returns the
/// neighbour order at every block vertex, or `None` if the block is not
/// planar.
fn embed_block(block: &[Edge]) -> Option<Vec<(usize, Vec<usize>)>> {
    // relabel to 0..m
    let mut global: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    global.sort_unstable();
    global.dedup();
    let local: HashMap<usize, usize> = global.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let m = global.len();
    let mut adj = vec![Vec::new(); m];
    for &(u, v) in block {
        let (a, b) = (local[&u], local[&v]);
        adj[a].push(b);
        adj[b].push(a);
    }
    for nbrs in &mut adj {
        nbrs.sort_unstable();
    }
    if block.len() > 3 * m - 6 {
        return None;
    }

    let faces = embed_faces(&adj, block.len())?;

    // succ[v][u] = w for each facial step u -> v -> w
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); m];
    for f in &faces {
        let len = f.len();
        for i in 0..len {
            let (u, v, w) = (f[(i + len - 1) % len], f[i], f[(i + 1) % len]);
            succ[v].insert(u, w);
        }
    }
    let mut out = Vec::with_capacity(m);
    for v in 0..m {
        let first = adj[v][0];
        let mut order = vec![global[first]];
        let mut cur = succ[v][&first];
        while cur != first {
            order.push(global[cur]);
            cur = succ[v][&cur];
        }
        assert_eq!(order.len(), adj[v].len(), "block rotation is a single cycle");
        out.push((global[v], order));
    }
    Some(out)
}

/// Oriented facial cycles of a planar embedding of a biconnected graph.
fn embed_faces(adj: &[Vec<usize>], edge_count: usize) -> Option<Vec<Vec<usize>>> {
    let m = adj.len();
    let cycle = find_cycle(adj);
    let mut in_h = vec![false; m];
    let mut h_edge = vec![false; m * m];
    let mut embedded = 0;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        h_edge[a * m + b] = true;
        h_edge[b * m + a] = true;
        embedded += 1;
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces = vec![cycle, reversed];

    while embedded < edge_count {
        let fragments = fragments(adj, &in_h, &h_edge);
        let mut face_member = vec![vec![false; m]; faces.len()];
        for (fi, f) in faces.iter().enumerate() {
            for &v in f {
                face_member[fi][v] = true;
            }
        }
        let mut choice: Option<(usize, usize)> = None;
        for (idx, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&fi| att.iter().all(|&a| face_member[fi][a]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((idx, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((idx, admissible[0]));
                    }
                }
            }
        }
        let (idx, fi) = choice.expect("an unembedded edge leaves at least one fragment");
        let path = match &fragments[idx] {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Component(verts, att) => route_through(adj, verts, att[0], att[1], m),
        };
        let face = faces.swap_remove(fi);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edge[w[0] * m + w[1]] = true;
            h_edge[w[1] * m + w[0]] = true;
            embedded += 1;
        }
        for &v in &path {
            in_h[v] = true;
        }
    }
    Some(faces)
}

/// Any cycle, found as the first back edge of a depth-first search.
fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let m = adj.len();
    let mut parent = vec![usize::MAX; m];
    let mut on_stack = vec![false; m];
    let mut visited = vec![false; m];
    let mut stack = vec![(0usize, 0usize)];
    visited[0] = true;
    on_stack[0] = true;
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if top.1 == adj[v].len() {
            on_stack[v] = false;
            stack.pop();
            continue;
        }
        let w = adj[v][top.1];
        top.1 += 1;
        if w == parent[v] {
            continue;
        }
        if on_stack[w] {
            let mut cycle = vec![v];
            let mut cur = v;
            while cur != w {
                cur = parent[cur];
                cycle.push(cur);
            }
            cycle.reverse();
            return cycle;
        }
        if !visited[w] {
            visited[w] = true;
            on_stack[w] = true;
            parent[w] = v;
            stack.push((w, 0));
        }
    }
    unreachable!("a biconnected block with two or more edges contains a cycle")
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edge: &[bool]) -> Vec<Fragment> {
    let m = adj.len();
    let mut out = Vec::new();
    for u in 0..m {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edge[u * m + v] {
                out.push(Fragment::Chord(u, v));
            }
        }
    }
    let mut comp = vec![usize::MAX; m];
    for root in 0..m {
        if in_h[root] || comp[root] != usize::MAX {
            continue;
        }
        let mut verts = vec![root];
        let mut att = Vec::new();
        comp[root] = root;
        let mut i = 0;
        while i < verts.len() {
            let v = verts[i];
            i += 1;
            for &w in &adj[v] {
                if in_h[w] {
                    att.push(w);
                } else if comp[w] == usize::MAX {
                    comp[w] = root;
                    verts.push(w);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        out.push(Fragment::Component(verts, att));
    }
    out
}

/// Path `a, c1, .., ck, b` whose interior lies inside the fragment.
fn route_through(adj: &[Vec<usize>], verts: &[usize], a: usize, b: usize, m: usize) -> Vec<usize> {
    let mut inside = vec![false; m];
    for &v in verts {
        inside[v] = true;
    }
    let mut prev = vec![usize::MAX; m];
    let mut queue = VecDeque::new();
    for &c in &adj[a] {
        if inside[c] && prev[c] == usize::MAX {
            prev[c] = a;
            queue.push_back(c);
        }
    }
    while let Some(v) = queue.pop_front() {
        if adj[v].contains(&b) {
            let mut path = vec![b, v];
            let mut cur = v;
            while prev[cur] != a {
                cur = prev[cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[v] {
            if inside[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("a fragment is connected to each of its attachments")
}

/// Splits an oriented face along a path between two of its vertices. The
/// two new faces keep the face's orientation and traverse the path in
/// opposite directions.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let a = path[0];
    let b = path[path.len() - 1];
    let pa = face.iter().position(|&v| v == a).expect("attachment on face");
    let pb = face.iter().position(|&v| v == b).expect("attachment on face");
    let interior = &path[1..path.len() - 1];

    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % len;
        }
        out
    };
    let mut f1 = arc(pa, pb);
    f1.extend(interior.iter().rev());
    let mut f2 = arc(pb, pa);
    f2.extend(interior.iter());
    (f1, f2)
}
