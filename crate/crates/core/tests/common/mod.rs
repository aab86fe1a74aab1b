//! Brute-force oracles for tests. Only `matfree::graph` is used from the
//! library; everything else is recomputed here the slow, obvious way.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use matfree::graph::{Edge, Graph, Vertex, VertexSet};

pub const MAX_ENUM_VERTICES: u32 = 8;
pub const MAX_CYCLE_VERTICES: usize = 10;
pub const MAX_SEPARATOR_VERTICES: usize = 8;
pub const MAX_POSET_NODES: usize = 64;

fn pairs(n: u32) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn connected(n: u32, edges: &[(Vertex, Vertex)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n as usize];
    let mut stack = vec![0u32];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Every labeled graph on `0..n` (optionally only the connected ones) that
/// satisfies `keep`. Refuses `n > 8` unless `force` is set.
pub fn enumerate_graphs_with(
    n: u32,
    connected_only: bool,
    force: bool,
    keep: impl Fn(&Graph) -> bool,
) -> Result<Vec<Graph>, String> {
    if n > MAX_ENUM_VERTICES && !force {
        return Err(format!("{n} vertices is over the enumeration guard"));
    }
    let all = pairs(n);
    let mut out = Vec::new();
    for mask in 0u64..1u64 << all.len() {
        let edges: Vec<(Vertex, Vertex)> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if connected_only && !connected(n, &edges) {
            continue;
        }
        let g = Graph::from_edges(0..n, edges).unwrap();
        if keep(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

pub fn enumerate_graphs(
    n: u32,
    connected_only: bool,
    keep: impl Fn(&Graph) -> bool,
) -> Result<Vec<Graph>, String> {
    enumerate_graphs_with(n, connected_only, false, keep)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest adjacency bitmask over all relabelings. Graphs with equal keys
/// and equal order are isomorphic.
pub fn canonical_key(g: &Graph, perms: &[Vec<usize>]) -> (usize, u64) {
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    let idx: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let es: Vec<(usize, usize)> = g.edges().map(|e| (idx[&e.lo()], idx[&e.hi()])).collect();
    let slot = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        a * n + b
    };
    let key = perms
        .iter()
        .map(|p| es.iter().fold(0u64, |m, &(a, b)| m | 1 << slot(p[a], p[b])))
        .min()
        .unwrap_or(0);
    (n, key)
}

/// One representative per isomorphism class, first occurrence kept.
pub fn dedupe_isomorphic(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut by_order: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in graphs {
        assert!(g.vertex_count() <= 8, "canonical form is for small graphs");
        let perms = by_order
            .entry(g.vertex_count())
            .or_insert_with(|| permutations(g.vertex_count()));
        if seen.insert(canonical_key(&g, perms)) {
            out.push(g);
        }
    }
    out
}

fn subsets_of_size(vs: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    fn go(
        vs: &[Vertex],
        k: usize,
        start: usize,
        cur: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..vs.len() {
            cur.push(vs[i]);
            go(vs, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(vs, k, 0, &mut Vec::new(), &mut out);
    out
}

/// An induced cycle on at least `min_len` vertices, listed in cyclic order.
pub fn brute_induced_cycles(g: &Graph, min_len: usize) -> Option<Vec<Vertex>> {
    let vs: Vec<Vertex> = g.vertices().collect();
    assert!(
        vs.len() <= MAX_CYCLE_VERTICES,
        "oracle guard: too many vertices"
    );
    for k in min_len.max(3)..=vs.len() {
        for s in subsets_of_size(&vs, k) {
            let deg_two = s
                .iter()
                .all(|&v| s.iter().filter(|&&u| g.has_edge(u, v)).count() == 2);
            if !deg_two {
                continue;
            }
            // walk it; a single cycle only if the walk covers everything
            let mut order = vec![s[0]];
            let mut prev = s[0];
            let mut cur = *s.iter().find(|&&u| g.has_edge(u, s[0])).unwrap();
            while cur != s[0] {
                order.push(cur);
                let next = *s
                    .iter()
                    .find(|&&u| u != prev && g.has_edge(u, cur))
                    .unwrap();
                prev = cur;
                cur = next;
            }
            if order.len() == k {
                return Some(order);
            }
        }
    }
    None
}

/// Strict order relation of the k-crown: elements `0..k` are bottoms,
/// `k..2k` tops, bottom `i` below tops `i` and `i + 1 mod k`.
pub fn crown_pattern(k: usize) -> Vec<Vec<bool>> {
    let mut rel = vec![vec![false; 2 * k]; 2 * k];
    for i in 0..k {
        rel[i][k + i] = true;
        rel[i][k + (i + 1) % k] = true;
    }
    rel
}

/// An injection `pattern -> nodes` with `pattern[a][b] <=> nodes[f a] ⊊ nodes[f b]`.
pub fn brute_induced_subposet(nodes: &[VertexSet], pattern: &[Vec<bool>]) -> Option<Vec<usize>> {
    assert!(
        nodes.len() <= MAX_POSET_NODES,
        "oracle guard: poset too large"
    );
    let lt = |i: usize, j: usize| i != j && nodes[i].is_subset(&nodes[j]);
    fn go(
        m: usize,
        n: usize,
        pattern: &[Vec<bool>],
        lt: &dyn Fn(usize, usize) -> bool,
        cur: &mut Vec<usize>,
    ) -> bool {
        let a = cur.len();
        if a == m {
            return true;
        }
        for x in 0..n {
            if cur.contains(&x) {
                continue;
            }
            let fits = cur
                .iter()
                .enumerate()
                .all(|(b, &y)| pattern[a][b] == lt(x, y) && pattern[b][a] == lt(y, x));
            if fits {
                cur.push(x);
                if go(m, n, pattern, lt, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    let mut cur = Vec::new();
    go(pattern.len(), nodes.len(), pattern, &lt, &mut cur).then_some(cur)
}

/// The clique intersection family recomputed from scratch: maximal cliques by
/// subset enumeration, then every intersection of a nonempty subfamily.
pub fn brute_clique_intersections(g: &Graph) -> BTreeSet<VertexSet> {
    let vs: Vec<Vertex> = g.vertices().collect();
    assert!(vs.len() <= 12, "oracle guard: too many vertices");
    let cliques: Vec<VertexSet> = (0u32..1 << vs.len())
        .map(|m| {
            vs.iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect::<VertexSet>()
        })
        .filter(|s| !s.is_empty() && is_clique(g, s))
        .collect();
    let maximal: Vec<VertexSet> = cliques
        .iter()
        .filter(|c| !cliques.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
        .cloned()
        .collect();
    assert!(
        maximal.len() <= 16,
        "oracle guard: too many maximal cliques"
    );
    let mut out = BTreeSet::new();
    for m in 1u32..1 << maximal.len() {
        let mut acc: Option<VertexSet> = None;
        for (i, c) in maximal.iter().enumerate() {
            if m >> i & 1 == 1 {
                acc = Some(match acc {
                    None => c.clone(),
                    Some(a) => a.intersection(c).copied().collect(),
                });
            }
        }
        out.insert(acc.unwrap());
    }
    if out.is_empty() {
        out.insert(VertexSet::new());
    }
    out
}

pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    s.iter()
        .all(|&u| s.iter().all(|&v| u >= v || g.has_edge(u, v)))
}

fn separates(g: &Graph, s: &VertexSet, a: Vertex, b: Vertex) -> bool {
    let mut seen = VertexSet::from([a]);
    let mut stack = vec![a];
    while let Some(x) = stack.pop() {
        if x == b {
            return false;
        }
        for y in g.vertices() {
            if g.has_edge(x, y) && !s.contains(&y) && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    true
}

/// All minimal vertex separators, by checking every subset against every
/// nonadjacent pair.
pub fn brute_minimal_separators(g: &Graph) -> BTreeSet<VertexSet> {
    let vs: Vec<Vertex> = g.vertices().collect();
    assert!(
        vs.len() <= MAX_SEPARATOR_VERTICES,
        "oracle guard: too many vertices"
    );
    let mut out = BTreeSet::new();
    for m in 0u32..1 << vs.len() {
        let s: VertexSet = vs
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let minimal_for = |a: Vertex, b: Vertex| {
            separates(g, &s, a, b)
                && s.iter().all(|x| {
                    let mut t = s.clone();
                    t.remove(x);
                    !separates(g, &t, a, b)
                })
        };
        let hit = vs.iter().any(|&a| {
            vs.iter().any(|&b| {
                a < b
                    && !g.has_edge(a, b)
                    && !s.contains(&a)
                    && !s.contains(&b)
                    && minimal_for(a, b)
            })
        });
        if hit {
            out.insert(s);
        }
    }
    out
}

/// ML1-ML3 straight from the definition, on a plain label map.
pub fn naive_is_mat(g: &Graph, labels: &BTreeMap<Edge, u32>) -> bool {
    if labels.len() != g.edge_count() || labels.values().any(|&l| l == 0) {
        return false;
    }
    let top = labels.values().copied().max().unwrap_or(0);
    let connected_by = |edges: &[Edge], a: Vertex, b: Vertex| {
        let mut seen = VertexSet::from([a]);
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for e in edges {
                let y = if e.lo() == x {
                    e.hi()
                } else if e.hi() == x {
                    e.lo()
                } else {
                    continue;
                };
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.contains(&b)
    };
    for k in 1..=top {
        let pi: Vec<Edge> = labels
            .iter()
            .filter(|(_, &l)| l == k)
            .map(|(&e, _)| e)
            .collect();
        let earlier: Vec<Edge> = labels
            .iter()
            .filter(|(_, &l)| l < k)
            .map(|(&e, _)| e)
            .collect();
        // ML1: no edge of pi closes a cycle with the others in pi
        for (i, e) in pi.iter().enumerate() {
            let rest: Vec<Edge> = pi
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &f)| f)
                .collect();
            if connected_by(&rest, e.lo(), e.hi()) {
                return false;
            }
        }
        // ML2
        if earlier.iter().any(|f| connected_by(&pi, f.lo(), f.hi())) {
            return false;
        }
        // ML3
        for e in &pi {
            let triangles = g
                .vertices()
                .filter(|&w| {
                    [(e.lo(), w), (e.hi(), w)].iter().all(|&(a, b)| {
                        a != b
                            && Edge::new(a, b)
                                .ok()
                                .and_then(|f| labels.get(&f))
                                .is_some_and(|&l| l < k)
                    })
                })
                .count();
            if triangles != (k - 1) as usize {
                return false;
            }
        }
    }
    true
}

/// Every labeling with values in `1..=max_label` that passes
/// [`naive_is_mat`]. Only for tiny graphs.
pub fn naive_all_mat_labelings(g: &Graph, max_label: u32) -> Vec<BTreeMap<Edge, u32>> {
    let es: Vec<Edge> = g.edges().collect();
    assert!(
        (max_label as f64).powi(es.len() as i32) <= 2e6,
        "oracle guard: search space too large"
    );
    let mut out = Vec::new();
    let mut cur = vec![1u32; es.len()];
    loop {
        let labels: BTreeMap<Edge, u32> = es.iter().copied().zip(cur.iter().copied()).collect();
        if naive_is_mat(g, &labels) {
            out.push(labels);
        }
        let mut i = 0;
        loop {
            if i == es.len() {
                return out;
            }
            if cur[i] < max_label {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
            i += 1;
        }
    }
}

/// Proper colourings with `t` colours, counted by backtracking.
pub fn count_colorings(g: &Graph, t: u32) -> u128 {
    let vs: Vec<Vertex> = g.vertices().collect();
    fn go(g: &Graph, vs: &[Vertex], i: usize, t: u32, col: &mut Vec<u32>) -> u128 {
        if i == vs.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..t {
            if (0..i).all(|j| col[j] != c || !g.has_edge(vs[j], vs[i])) {
                col.push(c);
                total += go(g, vs, i + 1, t, col);
                col.pop();
            }
        }
        total
    }
    go(g, &vs, 0, t, &mut Vec::new())
}

/// Coefficients (constant term first) of `prod (t - r)`.
pub fn poly_from_roots(roots: &[i128]) -> Vec<i128> {
    let mut c = vec![1i128];
    for &r in roots {
        let mut next = vec![0i128; c.len() + 1];
        for (i, &a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= r * a;
        }
        c = next;
    }
    c
}

/// Induced `n`-sun for some `n >= 3`, found by trying every vertex tuple.
/// Returns `(center, outer)`.
pub fn brute_induced_sun(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let vs: Vec<Vertex> = g.vertices().collect();
    assert!(
        vs.len() <= MAX_CYCLE_VERTICES,
        "oracle guard: too many vertices"
    );
    for n in 3..=vs.len() / 2 {
        for center in subsets_of_size(&vs, n) {
            let cs: VertexSet = center.iter().copied().collect();
            if !is_clique(g, &cs) {
                continue;
            }
            for perm in permutations(n) {
                // fix the first slot to skip rotations
                if perm[0] != 0 {
                    continue;
                }
                let c: Vec<Vertex> = perm.iter().map(|&i| center[i]).collect();
                let mut outer = Vec::new();
                if find_outer(g, &c, &cs, &mut outer) {
                    return Some((c, outer));
                }
            }
        }
    }
    None
}

fn find_outer(g: &Graph, c: &[Vertex], cs: &VertexSet, outer: &mut Vec<Vertex>) -> bool {
    let n = c.len();
    let i = outer.len();
    if i == n {
        return true;
    }
    for w in g.vertices() {
        if cs.contains(&w) || outer.contains(&w) || outer.iter().any(|&o| g.has_edge(o, w)) {
            continue;
        }
        let ok = (0..n).all(|j| g.has_edge(w, c[j]) == (j == i || j == (i + 1) % n));
        if ok {
            outer.push(w);
            if find_outer(g, c, cs, outer) {
                return true;
            }
            outer.pop();
        }
    }
    false
}
