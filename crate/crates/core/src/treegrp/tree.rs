use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::label::VertexLabel;
use super::TreeError;
use crate::exactalg::{int, rat, Rational};

/// A finite tree of finite groups with labelled ends.
///
/// Edges and ends carry the order of their (cyclic) group. Vertices are
/// numbered `0..n`; [`enumerate_normalizer_trees`] returns them sorted by
/// label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TreeOfGroups {
    vertices: Vec<VertexLabel>,
    /// `(a, b, order)` with `a < b`, sorted.
    edges: Vec<(usize, usize, u64)>,
    /// `(vertex, order)`, sorted.
    ends: Vec<(usize, u64)>,
}

impl TreeOfGroups {
    /// Build and validate: the graph must be a tree, and at every vertex the
    /// incident edge and end orders must be exactly its branching multiset.
    pub fn new(
        vertices: Vec<VertexLabel>,
        edges: Vec<(usize, usize, u64)>,
        ends: Vec<(usize, u64)>,
    ) -> Result<Self, TreeError> {
        let mut edges: Vec<_> = edges.into_iter().map(|(a, b, m)| (a.min(b), a.max(b), m)).collect();
        edges.sort_unstable();
        let mut ends = ends;
        ends.sort_unstable();
        let t = TreeOfGroups { vertices, edges, ends };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), TreeError> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(TreeError::Invalid("no vertices".into()));
        }
        if self.edges.len() + 1 != n {
            return Err(TreeError::Invalid(format!("{n} vertices but {} edges", self.edges.len())));
        }
        let mut comp: Vec<usize> = (0..n).collect();
        fn root(c: &mut [usize], mut x: usize) -> usize {
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        for &(a, b, _) in &self.edges {
            if a >= n || b >= n || a == b {
                return Err(TreeError::Invalid(format!("bad edge ({a},{b})")));
            }
            let (ra, rb) = (root(&mut comp, a), root(&mut comp, b));
            if ra == rb {
                return Err(TreeError::Invalid("edges contain a cycle".into()));
            }
            comp[ra] = rb;
        }
        for v in 0..n {
            let mut slots = self.slots(v);
            slots.sort_unstable();
            if slots != self.vertices[v].branching_indices() {
                return Err(TreeError::Invalid(format!(
                    "slots {:?} at v{v} do not match branching of {}",
                    slots, self.vertices[v]
                )));
            }
            if slots.iter().any(|m| !self.vertices[v].order().is_multiple_of(*m)) {
                return Err(TreeError::Invalid(format!("slot order does not divide |{}|", self.vertices[v])));
            }
        }
        for &(v, _) in &self.ends {
            if v >= n {
                return Err(TreeError::Invalid(format!("end at missing vertex v{v}")));
            }
        }
        Ok(())
    }

    /// Orders of the edges and ends at vertex `v`.
    pub fn slots(&self, v: usize) -> Vec<u64> {
        let mut s: Vec<u64> = self.edges.iter().filter(|e| e.0 == v || e.1 == v).map(|e| e.2).collect();
        s.extend(self.ends.iter().filter(|e| e.0 == v).map(|e| e.1));
        s
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    pub fn ends(&self) -> &[(usize, u64)] {
        &self.ends
    }

    /// End orders, sorted.
    pub fn end_labels(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.ends.iter().map(|e| e.1).collect();
        v.sort_unstable();
        v
    }

    /// Sum of `1/|G_v|` over vertices minus sum of `1/|G_e|` over edges.
    pub fn euler_characteristic(&self) -> Rational {
        let v = self.vertices.iter().fold(int(0), |acc, l| acc + rat(1, l.order() as i64));
        self.edges.iter().fold(v, |acc, e| acc - rat(1, e.2 as i64))
    }

    /// Short product name, e.g. `D4 *_Z4 S4`.
    pub fn product_name(&self) -> String {
        match (self.vertices.as_slice(), self.edges.as_slice()) {
            ([v], []) => v.to_string(),
            ([a, b], [(_, _, m)]) => format!("{a} *_Z{m} {b}"),
            _ => self.to_string(),
        }
    }

    /// Residue characteristic conditions carried by the vertex groups.
    pub fn notes(&self) -> Vec<String> {
        let mut notes: BTreeSet<String> = self
            .vertices
            .iter()
            .filter_map(|l| l.characteristic_note().map(|n| format!("{l}: {n}")))
            .collect();
        let orders: Vec<String> = self.vertices.iter().map(|l| l.order().to_string()).collect();
        notes.insert(format!("p coprime to {}", orders.join(", ")));
        notes.into_iter().collect()
    }

    /// Lexicographically smallest relabelling; equal for isomorphic trees.
    pub fn canonical(&self) -> TreeOfGroups {
        let n = self.vertices.len();
        let mut best: Option<TreeOfGroups> = None;
        for perm in permutations(n) {
            let vertices: Vec<VertexLabel> = {
                let mut v = vec![self.vertices[0]; n];
                for (old, &new) in perm.iter().enumerate() {
                    v[new] = self.vertices[old];
                }
                v
            };
            let mut edges: Vec<_> = self
                .edges
                .iter()
                .map(|&(a, b, m)| (perm[a].min(perm[b]), perm[a].max(perm[b]), m))
                .collect();
            edges.sort_unstable();
            let mut ends: Vec<_> = self.ends.iter().map(|&(v, m)| (perm[v], m)).collect();
            ends.sort_unstable();
            let cand = TreeOfGroups { vertices, edges, ends };
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.expect("at least one vertex")
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

impl fmt::Display for TreeOfGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = self.vertices.iter().enumerate().map(|(i, l)| format!("v{i}: {l}")).collect();
        items.extend(self.edges.iter().map(|(a, b, m)| format!("e(v{a},v{b}): Z{m}")));
        items.extend(self.ends.iter().map(|(v, m)| format!("end(v{v}): {m}")));
        write!(f, "tree {{ {} }}", items.join("; "))
    }
}

impl FromStr for TreeOfGroups {
    type Err = TreeError;

    /// Grammar:
    /// `tree { item (; item)* }` where an item is `vK: LABEL`,
    /// `e(vA,vB): ZM` or `end(vA): M`, whitespace insignificant. Vertex
    /// items must name `v0, v1, ..` in order.
    fn from_str(s: &str) -> Result<Self, TreeError> {
        let parse_err = |m: String| TreeError::Parse(m);
        let body = s
            .trim()
            .strip_prefix("tree")
            .map(str::trim)
            .and_then(|b| b.strip_prefix('{'))
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| parse_err("expected `tree { ... }`".into()))?;
        let vidx = |t: &str| -> Result<usize, TreeError> {
            t.trim()
                .strip_prefix('v')
                .and_then(|n| n.parse().ok())
                .ok_or_else(|| TreeError::Parse(format!("bad vertex name `{t}`")))
        };
        let (mut vertices, mut edges, mut ends) = (Vec::new(), Vec::new(), Vec::new());
        for item in body.split(';').map(str::trim).filter(|i| !i.is_empty()) {
            let (lhs, rhs) = item.split_once(':').ok_or_else(|| parse_err(format!("missing ':' in `{item}`")))?;
            let (lhs, rhs) = (lhs.trim(), rhs.trim());
            if let Some(args) = lhs.strip_prefix("e(").and_then(|a| a.strip_suffix(')')) {
                let (a, b) = args.split_once(',').ok_or_else(|| parse_err(format!("bad edge `{lhs}`")))?;
                let m = rhs
                    .strip_prefix('Z')
                    .and_then(|m| m.parse().ok())
                    .ok_or_else(|| parse_err(format!("bad edge group `{rhs}`")))?;
                edges.push((vidx(a)?, vidx(b)?, m));
            } else if let Some(arg) = lhs.strip_prefix("end(").and_then(|a| a.strip_suffix(')')) {
                let m = rhs.parse().map_err(|_| parse_err(format!("bad end order `{rhs}`")))?;
                ends.push((vidx(arg)?, m));
            } else {
                let k = vidx(lhs)?;
                if k != vertices.len() {
                    return Err(parse_err(format!("vertex v{k} out of sequence")));
                }
                vertices.push(rhs.parse::<VertexLabel>()?);
            }
        }
        TreeOfGroups::new(vertices, edges, ends)
    }
}

/// Labelled trees on `k` vertices, decoded from Prüfer sequences.
fn labelled_trees(k: usize) -> Vec<Vec<(usize, usize)>> {
    match k {
        0 | 1 => return vec![Vec::new()],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    let mut out = Vec::new();
    let total = k.pow(k as u32 - 2);
    for code in 0..total {
        let mut seq = Vec::with_capacity(k - 2);
        let mut c = code;
        for _ in 0..k - 2 {
            seq.push(c % k);
            c /= k;
        }
        let mut degree = vec![1usize; k];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(k - 1);
        for &s in &seq {
            let leaf = (0..k).find(|&i| degree[i] == 1).expect("leaf");
            edges.push((leaf.min(s), leaf.max(s)));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..k).filter(|&i| degree[i] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
    }
    out
}

fn multiset_remove(ms: &mut Vec<u64>, x: u64) -> bool {
    match ms.iter().position(|&y| y == x) {
        Some(i) => {
            ms.remove(i);
            true
        }
        None => false,
    }
}

/// Assign edge orders so each edge uses one free slot at both ends; collect
/// the trees whose leftover slots are exactly the requested ends.
fn match_slots(
    labels: &[VertexLabel],
    shape: &[(usize, usize)],
    free: &mut Vec<Vec<u64>>,
    chosen: &mut Vec<u64>,
    ends: &[u64],
    out: &mut BTreeSet<TreeOfGroups>,
) {
    let k = chosen.len();
    if k == shape.len() {
        let mut left: Vec<u64> = free.iter().flatten().copied().collect();
        left.sort_unstable();
        if left == ends {
            let edges = shape.iter().zip(chosen.iter()).map(|(&(a, b), &m)| (a, b, m)).collect();
            let ends = free.iter().enumerate().flat_map(|(v, s)| s.iter().map(move |&m| (v, m))).collect();
            let t = TreeOfGroups::new(labels.to_vec(), edges, ends).expect("slots consumed by construction");
            out.insert(t.canonical());
        }
        return;
    }
    let (a, b) = shape[k];
    let mut options: Vec<u64> = free[a].iter().copied().filter(|m| free[b].contains(m)).collect();
    options.sort_unstable();
    options.dedup();
    for m in options {
        multiset_remove(&mut free[a], m);
        multiset_remove(&mut free[b], m);
        chosen.push(m);
        match_slots(labels, shape, free, chosen, ends, out);
        chosen.pop();
        free[a].push(m);
        free[b].push(m);
    }
}

/// All trees of finite groups with the given end orders, up to isomorphism.
///
/// Cyclic vertices inside a tree with two or more vertices are contracted
/// (their two slots have equal order, so removing them changes nothing), so
/// `shape_cap` bounds the number of non-cyclic vertices. `n_cap` bounds the
/// parameter of cyclic and dihedral labels.
pub fn enumerate_normalizer_trees(end_labels: &[u64], shape_cap: usize, n_cap: u64) -> Result<Vec<TreeOfGroups>, TreeError> {
    if shape_cap == 0 {
        return Err(TreeError::CapTooSmall("shape cap must be at least 1".into()));
    }
    if n_cap < 2 {
        return Err(TreeError::CapTooSmall("parameter cap must be at least 2".into()));
    }
    if let Some(&m) = end_labels.iter().find(|&&m| m < 2) {
        return Err(TreeError::InvalidLabel(format!("end order {m}")));
    }
    let alphabet = VertexLabel::alphabet(n_cap);
    for &m in end_labels {
        if !alphabet.iter().any(|l| l.branching_indices().contains(&m)) {
            return Err(TreeError::CapTooSmall(format!("end order {m} exceeds parameter cap {n_cap}")));
        }
    }
    let mut ends = end_labels.to_vec();
    ends.sort_unstable();
    let e = ends.len();
    if e < 2 {
        return Err(TreeError::InvalidLabel(format!("{e} ends: a finite vertex group has at least two slots")));
    }
    // three slots per non-cyclic vertex, two per edge: 3k = 2(k - 1) + e
    let needed = e.saturating_sub(2).max(1);
    if needed > shape_cap {
        return Err(TreeError::CapTooSmall(format!("{e} ends need {needed} vertices, cap is {shape_cap}")));
    }
    let mut out = BTreeSet::new();
    // single vertex, cyclic allowed
    for l in &alphabet {
        if l.branching_indices() == ends {
            let ends1 = ends.iter().map(|&m| (0, m)).collect();
            out.insert(TreeOfGroups::new(vec![*l], Vec::new(), ends1)?);
        }
    }
    let noncyclic: Vec<VertexLabel> = alphabet.into_iter().filter(|l| !l.is_cyclic()).collect();
    for k in 2..=shape_cap {
        if 3 * k != 2 * (k - 1) + e {
            continue;
        }
        let shapes = labelled_trees(k);
        let mut labels = Vec::with_capacity(k);
        sorted_assignments(&noncyclic, k, 0, &mut labels, &mut |labels| {
            // every end must be a slot of some vertex
            let mut pool: Vec<u64> = labels.iter().flat_map(|l| l.branching_indices()).collect();
            if !ends.iter().all(|&m| multiset_remove(&mut pool, m)) {
                return;
            }
            for shape in &shapes {
                let mut free: Vec<Vec<u64>> = labels.iter().map(|l| l.branching_indices()).collect();
                match_slots(labels, shape, &mut free, &mut Vec::new(), &ends, &mut out);
            }
        });
    }
    Ok(out.into_iter().collect())
}

fn sorted_assignments(
    alphabet: &[VertexLabel],
    k: usize,
    start: usize,
    cur: &mut Vec<VertexLabel>,
    f: &mut impl FnMut(&[VertexLabel]),
) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..alphabet.len() {
        cur.push(alphabet[i]);
        sorted_assignments(alphabet, k, i, cur, f);
        cur.pop();
    }
}
