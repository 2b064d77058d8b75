use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::{bitangent_lines, monomial_stabilizer, CurveFamily, GeoError, MonomialMap, ProjPoint};
use crate::exactalg::{FieldElem, NumberField};
use crate::permgrp::{is_isomorphic, Hom, Perm, PermGroup};
use crate::treegrp::{vertex_group, VertexLabel};

/// A finite connected multigraph without loops: one vertex per component of
/// a degenerate fiber, one edge per node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl DualGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self, GeoError> {
        if vertices.is_empty() {
            return Err(GeoError::Graph("no vertices".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() || vertices[..i].contains(v) {
                return Err(GeoError::Graph(format!("vertex name `{v}` empty or repeated")));
            }
        }
        for &(u, w) in &edges {
            if u >= vertices.len() || w >= vertices.len() {
                return Err(GeoError::Graph(format!("edge ({u}, {w}) out of range")));
            }
            if u == w {
                return Err(GeoError::Graph(format!("loop at {}; subdivide first", vertices[u])));
            }
        }
        let g = DualGraph { vertices, edges };
        if g.spanning_tree().iter().filter(|p| p.is_some()).count() + 1 != g.vertices.len() {
            return Err(GeoError::Graph("not connected".into()));
        }
        Ok(g)
    }

    /// `graph { v: a,b; e: a-b, a-b }`.
    pub fn parse(s: &str) -> Result<Self, GeoError> {
        let bad = |m: &str| GeoError::Parse(format!("{m} in `{}`", s.trim()));
        let body = s
            .trim()
            .strip_prefix("graph")
            .and_then(|r| r.trim().strip_prefix('{'))
            .and_then(|r| r.trim().strip_suffix('}'))
            .ok_or_else(|| bad("expected `graph { ... }`"))?;
        let (vpart, epart) = body.split_once(';').ok_or_else(|| bad("missing `;`"))?;
        let vlist = vpart.trim().strip_prefix("v:").ok_or_else(|| bad("missing `v:`"))?;
        let elist = epart.trim().strip_prefix("e:").ok_or_else(|| bad("missing `e:`"))?;
        let vertices: Vec<String> = vlist.split(',').map(|t| t.trim().to_string()).collect();
        let mut edges = Vec::new();
        for t in elist.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = t.split_once('-').ok_or_else(|| bad(&format!("edge `{t}`")))?;
            let find = |n: &str| vertices.iter().position(|v| v == n.trim()).ok_or_else(|| bad(&format!("unknown vertex `{n}`")));
            edges.push((find(a)?, find(b)?));
        }
        Self::new(vertices, edges)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// BFS from vertex 0: for each vertex its tree edge to the parent.
    fn spanning_tree(&self) -> Vec<Option<usize>> {
        let n = self.vertices.len();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for (e, &(a, b)) in self.edges.iter().enumerate() {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// `f: V -> Z2` with `f(u) + f(w) = d(e)` on every edge, if one exists.
    fn solve_coboundary(&self, d: &[u8]) -> Option<Vec<u8>> {
        let n = self.vertices.len();
        let mut f = vec![None; n];
        f[0] = Some(0u8);
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            let fu = f[u].expect("visited");
            for (e, &(a, b)) in self.edges.iter().enumerate() {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if f[w].is_none() {
                    f[w] = Some(fu ^ d[e]);
                    queue.push_back(w);
                }
            }
        }
        let f: Vec<u8> = f.into_iter().map(|x| x.expect("connected")).collect();
        self.edges.iter().enumerate().all(|(e, &(a, b))| f[a] ^ f[b] == d[e]).then_some(f)
    }

    /// The representative of a Z2 cohomology class vanishing on the BFS tree.
    fn canonical_class(&self, volt: &[u8]) -> Vec<u8> {
        // f with f(u) + f(w) = volt(e) on tree edges
        let n = self.vertices.len();
        let mut f = vec![0u8; n];
        let parent = self.spanning_tree();
        let mut order: Vec<usize> = Vec::new();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in 0..n {
                if !seen[w] {
                    if let Some(e) = parent[w] {
                        let (a, b) = self.edges[e];
                        if a == u || b == u {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        for &w in order.iter().skip(1) {
            let e = parent[w].expect("tree edge");
            let (a, b) = self.edges[e];
            let u = if a == w { b } else { a };
            f[w] = f[u] ^ volt[e];
        }
        self.edges.iter().enumerate().map(|(e, &(a, b))| volt[e] ^ f[a] ^ f[b]).collect()
    }
}

impl fmt::Display for DualGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.edges.iter().map(|&(a, b)| format!("{}-{}", self.vertices[a], self.vertices[b])).collect();
        write!(f, "graph {{ v: {}; e: {} }}", self.vertices.join(","), es.join(", "))
    }
}

/// First Betti number `E - V + 1` of a connected graph.
pub fn betti_genus(g: &DualGraph) -> usize {
    g.edge_count() + 1 - g.vertex_count()
}

/// A group acting on a dual graph through vertex and edge permutations.
#[derive(Clone, Debug)]
pub struct GraphAction {
    group: PermGroup,
    gens: Vec<Perm>,
    vertex_perms: Vec<Perm>,
    edge_perms: Vec<Perm>,
    /// To the permutations of `V + E` (vertices first).
    hom: Hom,
}

impl GraphAction {
    /// Validates relations, endpoint compatibility and absence of inversions.
    pub fn new(
        graph: &DualGraph,
        group: PermGroup,
        gens: Vec<Perm>,
        vertex_perms: Vec<Perm>,
        edge_perms: Vec<Perm>,
    ) -> Result<Self, GeoError> {
        let (nv, ne) = (graph.vertex_count(), graph.edge_count());
        if gens.len() != vertex_perms.len() || gens.len() != edge_perms.len() {
            return Err(GeoError::Action("generator and image counts differ".into()));
        }
        let mut combined = Vec::new();
        for (vp, ep) in vertex_perms.iter().zip(&edge_perms) {
            if vp.degree() != nv || ep.degree() != ne {
                return Err(GeoError::Action(format!("permutation degrees must be {nv} and {ne}")));
            }
            for (e, &(a, b)) in graph.edges.iter().enumerate() {
                let (c, d) = graph.edges[ep.apply(e)];
                let (ga, gb) = (vp.apply(a), vp.apply(b));
                if !((c, d) == (ga, gb) || (c, d) == (gb, ga)) {
                    return Err(GeoError::Action(format!("edge {e} is not sent to an edge between the images of its ends")));
                }
            }
            let img: Vec<usize> = vp.images().chain(ep.images().map(|i| i + nv)).collect();
            combined.push(Perm::from_images(img)?);
        }
        let image = PermGroup::generate(nv + ne, combined.clone())?;
        let hom = Hom::from_images(&group, &image, &gens, &combined).map_err(|e| GeoError::Action(e.to_string()))?;
        let a = GraphAction { group, gens, vertex_perms, edge_perms, hom };
        for i in 0..a.group.order() {
            for (e, &(u, w)) in graph.edges.iter().enumerate() {
                if a.edge_image(i, e) == e && a.vertex_image(i, u) == w {
                    return Err(GeoError::Inversion(format!("{}-{}", graph.vertices[u], graph.vertices[w])));
                }
            }
        }
        Ok(a)
    }

    /// The group generated by the given permutations, acting faithfully.
    pub fn from_generators(graph: &DualGraph, vertex_perms: Vec<Perm>, edge_perms: Vec<Perm>) -> Result<Self, GeoError> {
        let nv = graph.vertex_count();
        let mut gens = Vec::new();
        for (vp, ep) in vertex_perms.iter().zip(&edge_perms) {
            let img: Vec<usize> = vp.images().chain(ep.images().map(|i| i + nv)).collect();
            gens.push(Perm::from_images(img)?);
        }
        let group = PermGroup::generate(nv + graph.edge_count(), gens.clone())?;
        Self::new(graph, group, gens, vertex_perms, edge_perms)
    }

    /// Generator lines `gen { v: (1,2); e: (1,3)(2,4) }`.
    pub fn parse(graph: &DualGraph, s: &str) -> Result<Self, GeoError> {
        let (mut vps, mut eps) = (Vec::new(), Vec::new());
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let bad = || GeoError::Parse(format!("expected `gen {{ v: ...; e: ... }}`, got `{line}`"));
            let body = line
                .strip_prefix("gen")
                .and_then(|r| r.trim().strip_prefix('{'))
                .and_then(|r| r.trim().strip_suffix('}'))
                .ok_or_else(bad)?;
            let (v, e) = body.split_once(';').ok_or_else(bad)?;
            let v = v.trim().strip_prefix("v:").ok_or_else(bad)?;
            let e = e.trim().strip_prefix("e:").ok_or_else(bad)?;
            vps.push(Perm::parse(v, graph.vertex_count())?);
            eps.push(Perm::parse(e, graph.edge_count())?);
        }
        Self::from_generators(graph, vps, eps)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn vertex_perms(&self) -> &[Perm] {
        &self.vertex_perms
    }

    pub fn edge_perms(&self) -> &[Perm] {
        &self.edge_perms
    }

    fn combined(&self, i: usize) -> &Perm {
        self.hom.target().element(self.hom.apply_index(i))
    }

    /// Image of vertex `v` under group element `i`.
    pub fn vertex_image(&self, i: usize, v: usize) -> usize {
        self.combined(i).apply(v)
    }

    /// Image of edge `e` under group element `i`.
    pub fn edge_image(&self, i: usize, e: usize) -> usize {
        let nv = self.vertex_perms.first().map_or(0, Perm::degree);
        self.combined(i).apply(e + nv) - nv
    }

    /// Whether the action on vertices and edges is faithful.
    pub fn is_faithful(&self) -> bool {
        self.hom.is_injective()
    }
}

impl fmt::Display for GraphAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (vp, ep) in self.vertex_perms.iter().zip(&self.edge_perms) {
            writeln!(f, "gen {{ v: {vp}; e: {ep} }}")?;
        }
        Ok(())
    }
}

/// Read a graph line followed by generator lines.
pub fn parse_graph_with_action(s: &str) -> Result<(DualGraph, GraphAction), GeoError> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let g = DualGraph::parse(lines.next().ok_or_else(|| GeoError::Parse("empty input".into()))?)?;
    let rest: Vec<&str> = lines.collect();
    let a = GraphAction::parse(&g, &rest.join("\n"))?;
    Ok((g, a))
}

/// Isomorphism type of a stabilizer among the finite subgroups of PGL2.
fn pgl2_label(h: &PermGroup) -> Option<VertexLabel> {
    let n = h.order() as u64;
    let mut candidates = vec![VertexLabel::Cyclic(n)];
    if n.is_multiple_of(2) && n >= 4 {
        candidates.push(VertexLabel::Dihedral(n / 2));
    }
    candidates.extend([VertexLabel::A4, VertexLabel::S4, VertexLabel::A5].into_iter().filter(|l| l.order() == n));
    candidates
        .into_iter()
        .filter(|l| n >= 2 && l.order() == n)
        .find(|&l| vertex_group(l).map(|g| is_isomorphic(&g, h)).unwrap_or(false))
}

fn label_name(h: &PermGroup, l: Option<VertexLabel>) -> String {
    match (h.order(), l) {
        (1, _) => "1".into(),
        (_, Some(l)) => l.to_string(),
        (n, None) => format!("G{n}"),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientVertex {
    /// Name of the orbit representative.
    pub rep: String,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub label: String,
    #[serde(skip)]
    pub stabilizer: PermGroup,
    #[serde(skip)]
    pub pgl2: Option<VertexLabel>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientEdge {
    pub rep: usize,
    /// Quotient vertex indices of the two ends.
    pub ends: (usize, usize),
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub label: String,
    #[serde(skip)]
    pub stabilizer: PermGroup,
}

/// Orbits with stabilizer labels.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientGraph {
    pub group_order: usize,
    pub vertices: Vec<QuotientVertex>,
    pub edges: Vec<QuotientEdge>,
}

impl QuotientGraph {
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertices.len()
    }

    /// `U *_Zm V` when the quotient is one edge between two vertices with
    /// PGL2-type labels, ends in canonical label order.
    pub fn amalgam_name(&self) -> Option<String> {
        let ([u, v], [e]) = (self.vertices.as_slice(), self.edges.as_slice()) else {
            return None;
        };
        let (mut a, mut b) = (u.pgl2?, v.pgl2?);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        match pgl2_label(&e.stabilizer) {
            Some(VertexLabel::Cyclic(m)) => Some(format!("{a} *_Z{m} {b}")),
            _ => None,
        }
    }

    /// `|orbit| * |stabilizer| = |G|` everywhere.
    pub fn orbit_stabilizer_holds(&self) -> bool {
        self.vertices.iter().all(|v| v.orbit_size * v.stabilizer_order == self.group_order)
            && self.edges.iter().all(|e| e.orbit_size * e.stabilizer_order == self.group_order)
    }
}

fn stabilizer(a: &GraphAction, fixes: impl Fn(usize) -> bool) -> PermGroup {
    let members: Vec<usize> = (0..a.group.order()).filter(|&i| fixes(i)).collect();
    a.group.subgroup_from_indices(&members)
}

/// Orbits of vertices and edges with their stabilizers up to isomorphism.
pub fn graph_quotient(g: &DualGraph, a: &GraphAction) -> Result<QuotientGraph, GeoError> {
    if a.vertex_perms.first().is_some_and(|p| p.degree() != g.vertex_count()) {
        return Err(GeoError::Action("action belongs to another graph".into()));
    }
    let order = a.group.order();
    let mut vorbit = vec![usize::MAX; g.vertex_count()];
    let mut vertices = Vec::new();
    for v in 0..g.vertex_count() {
        if vorbit[v] != usize::MAX {
            continue;
        }
        let mut size = 0;
        for i in 0..order {
            let w = a.vertex_image(i, v);
            if vorbit[w] == usize::MAX {
                vorbit[w] = vertices.len();
                size += 1;
            }
        }
        let st = stabilizer(a, |i| a.vertex_image(i, v) == v);
        let pgl2 = pgl2_label(&st);
        vertices.push(QuotientVertex {
            rep: g.vertices[v].clone(),
            orbit_size: size,
            stabilizer_order: st.order(),
            label: label_name(&st, pgl2),
            stabilizer: st,
            pgl2,
        });
    }
    let mut eorbit = vec![usize::MAX; g.edge_count()];
    let mut edges = Vec::new();
    for e in 0..g.edge_count() {
        if eorbit[e] != usize::MAX {
            continue;
        }
        let mut size = 0;
        for i in 0..order {
            let f = a.edge_image(i, e);
            if eorbit[f] == usize::MAX {
                eorbit[f] = edges.len();
                size += 1;
            }
        }
        let st = stabilizer(a, |i| a.edge_image(i, e) == e);
        let (u, w) = g.edges[e];
        let ends = (vorbit[u].min(vorbit[w]), vorbit[u].max(vorbit[w]));
        edges.push(QuotientEdge {
            rep: e,
            ends,
            orbit_size: size,
            stabilizer_order: st.order(),
            label: label_name(&st, pgl2_label(&st)),
            stabilizer: st,
        });
    }
    Ok(QuotientGraph { group_order: order, vertices, edges })
}

fn index_in(pts: &[ProjPoint], p: &ProjPoint) -> Result<usize, GeoError> {
    pts.iter().position(|q| q == p).ok_or_else(|| GeoError::NotPermuted(p.to_string()))
}

/// The monomial S4 of the quartic with, per generator, its map.
fn quartic_symmetry() -> Result<(PermGroup, Vec<Perm>, Vec<MonomialMap>), GeoError> {
    let st = monomial_stabilizer(&CurveFamily::quartic())?;
    let gens: Vec<Perm> = st.group.gens().to_vec();
    let maps = gens.iter().map(|g| st.map_of(g).ok_or_else(|| GeoError::Action(format!("{g} has no map")))).collect::<Result<_, _>>()?;
    Ok((st.group, gens, maps))
}

/// Fiber at infinity, blown up at its three nodes: the central curve `c`
/// and exceptional curves `e1, e2, e3` over the coordinate points, joined
/// once per branch. Branches at a node are recorded by their tangent
/// directions, which lie over `Q(i)`.
pub fn alpha_infinity_configuration() -> Result<(DualGraph, GraphAction), GeoError> {
    let k = NumberField::gaussian();
    let i = FieldElem::generator(&k);
    let (zero, one) = (FieldElem::zero(&k), FieldElem::one(&k));
    let nodes: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]].iter().map(|c| ProjPoint::from_ints(&k, *c)).collect();
    let mut dirs = Vec::new();
    let mut edges = Vec::new();
    for n in 0..3 {
        let (a, b) = ((n + 1) % 3, (n + 2) % 3);
        for s in [i.clone(), -&i] {
            let mut c = [zero.clone(), zero.clone(), zero.clone()];
            c[a.min(b)] = one.clone();
            c[a.max(b)] = s;
            dirs.push(ProjPoint::new(c)?);
            edges.push((0, n + 1));
        }
    }
    let g = DualGraph::new(vec!["c".into(), "e1".into(), "e2".into(), "e3".into()], edges)?;
    let (group, gens, maps) = quartic_symmetry()?;
    let (mut vps, mut eps) = (Vec::new(), Vec::new());
    for m in &maps {
        let mut v = vec![0];
        for p in &nodes {
            v.push(index_in(&nodes, &m.apply_point(p))? + 1);
        }
        vps.push(Perm::from_images(v)?);
        let e: Vec<usize> = dirs.iter().map(|d| index_in(&dirs, &m.apply_point(d))).collect::<Result<_, _>>()?;
        eps.push(Perm::from_images(e)?);
    }
    let a = GraphAction::new(&g, group, gens, vps, eps)?;
    Ok((g, a))
}

/// Fiber at `-2`, the four lines `x +- y +- z`, blown up at their six
/// pairwise intersections: line vertices `l1..l4`, exceptional vertices
/// `pjk`, an edge for each line through each intersection point.
pub fn alpha_minus_two_configuration() -> Result<(DualGraph, GraphAction), GeoError> {
    let q = NumberField::rationals();
    let lines = bitangent_lines(&q);
    let coeffs: Vec<[FieldElem; 3]> = lines
        .iter()
        .map(|l| {
            [0, 1, 2].map(|i| {
                let mut e = vec![0; 4];
                e[i] = 1;
                l.coefficient(&e)
            })
        })
        .collect();
    let mut names: Vec<String> = (1..=4).map(|j| format!("l{j}")).collect();
    let mut pts = Vec::new();
    let mut pairs = Vec::new();
    for j in 0..4 {
        for k2 in j + 1..4 {
            let (a, b) = (&coeffs[j], &coeffs[k2]);
            let c = [
                &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
                &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
                &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
            ];
            pts.push(ProjPoint::new(c)?);
            pairs.push((j, k2));
            names.push(format!("p{}{}", j + 1, k2 + 1));
        }
    }
    let mut edges = Vec::new();
    for (p, &(j, k2)) in pairs.iter().enumerate() {
        edges.push((j, 4 + p));
        edges.push((k2, 4 + p));
    }
    let g = DualGraph::new(names, edges.clone())?;
    let (group, gens, maps) = quartic_symmetry()?;
    let (mut vps, mut eps) = (Vec::new(), Vec::new());
    for m in &maps {
        let pimg: Vec<usize> = pts.iter().map(|p| index_in(&pts, &m.apply_point(p))).collect::<Result<_, _>>()?;
        let mut limg = Vec::new();
        for j in 0..4 {
            // the image line contains the images of the points on line j
            let on: Vec<usize> = (0..6).filter(|&p| pairs[p].0 == j || pairs[p].1 == j).map(|p| pimg[p]).collect();
            let img = (0..4)
                .find(|&j2| on.iter().all(|&p| pairs[p].0 == j2 || pairs[p].1 == j2))
                .ok_or_else(|| GeoError::NotPermuted(format!("line {}", j + 1)))?;
            limg.push(img);
        }
        let mut v = limg.clone();
        v.extend(pimg.iter().map(|p| p + 4));
        vps.push(Perm::from_images(v)?);
        let e: Vec<usize> = edges
            .iter()
            .map(|&(l, p)| {
                let t = (limg[l], pimg[p - 4] + 4);
                edges.iter().position(|&x| x == t).ok_or_else(|| GeoError::NotPermuted("edge".into()))
            })
            .collect::<Result<_, _>>()?;
        eps.push(Perm::from_images(e)?);
    }
    let a = GraphAction::new(&g, group, gens, vps, eps)?;
    Ok((g, a))
}

/// Nonzero classes in `H^1(graph, Z2)` fixed by the action, each as its
/// representative vanishing on the BFS spanning tree.
pub fn invariant_voltage_classes(g: &DualGraph, a: &GraphAction) -> Vec<Vec<u8>> {
    let tree: Vec<usize> = g.spanning_tree().into_iter().flatten().collect();
    let free: Vec<usize> = (0..g.edge_count()).filter(|e| !tree.contains(e)).collect();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << free.len()) {
        let mut volt = vec![0u8; g.edge_count()];
        for (bit, &e) in free.iter().enumerate() {
            volt[e] = ((mask >> bit) & 1) as u8;
        }
        let invariant = a.edge_perms.iter().all(|ep| {
            let moved: Vec<u8> = (0..g.edge_count()).map(|e| volt[ep.apply(e)]).collect();
            g.canonical_class(&moved) == volt
        });
        if invariant {
            out.push(volt);
        }
    }
    out
}

/// The double cover given by an invariant voltage, with the lifted action
/// of the extension of the group by the sheet swap. Sheet `+` is 0.
pub fn double_cover(g: &DualGraph, a: &GraphAction, volt: &[u8]) -> Result<(DualGraph, GraphAction), GeoError> {
    let (nv, ne) = (g.vertex_count(), g.edge_count());
    if volt.len() != ne || volt.iter().any(|&x| x > 1) {
        return Err(GeoError::Graph("voltage must be a 0/1 vector on edges".into()));
    }
    if g.canonical_class(volt).iter().all(|&x| x == 0) {
        return Err(GeoError::Graph("trivial voltage gives a disconnected cover".into()));
    }
    let names: Vec<String> = g.vertices.iter().flat_map(|v| [format!("{v}+"), format!("{v}-")]).collect();
    let edges: Vec<(usize, usize)> =
        g.edges.iter().enumerate().flat_map(|(e, &(u, w))| (0..2u8).map(move |s| (2 * u + s as usize, 2 * w + (s ^ volt[e]) as usize))).collect();
    let cover = DualGraph::new(names, edges)?;
    let (mut vps, mut eps) = (Vec::new(), Vec::new());
    for (vp, ep) in a.vertex_perms.iter().zip(&a.edge_perms) {
        let d: Vec<u8> = (0..ne).map(|e| volt[ep.apply(e)] ^ volt[e]).collect();
        let f = g.solve_coboundary(&d).ok_or_else(|| GeoError::Action("voltage class is not invariant".into()))?;
        let v: Vec<usize> = (0..2 * nv).map(|x| 2 * vp.apply(x / 2) + ((x % 2) as u8 ^ f[x / 2]) as usize).collect();
        let mut e = Vec::with_capacity(2 * ne);
        for x in 0..2 * ne {
            let (b, s) = (x / 2, (x % 2) as u8);
            let (u, w) = g.edges[b];
            let gb = ep.apply(b);
            let sheet = if g.edges[gb].0 == vp.apply(u) { s ^ f[u] } else { s ^ volt[b] ^ f[w] };
            e.push(2 * gb + sheet as usize);
        }
        vps.push(Perm::from_images(v)?);
        eps.push(Perm::from_images(e)?);
    }
    vps.push(Perm::from_images((0..2 * nv).map(|x| x ^ 1).collect())?);
    eps.push(Perm::from_images((0..2 * ne).map(|x| x ^ 1).collect())?);
    let action = GraphAction::from_generators(&cover, vps, eps)?;
    Ok((cover, action))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{make_group, GroupKind};

    fn cover_of(g: &DualGraph, a: &GraphAction) -> (DualGraph, GraphAction) {
        let classes = invariant_voltage_classes(g, a);
        assert_eq!(classes.len(), 1);
        double_cover(g, a, &classes[0]).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let s = "graph { v: c,e1,e2,e3; e: c-e1, c-e1, c-e2, c-e2, c-e3, c-e3 }";
        let g = DualGraph::parse(s).unwrap();
        assert_eq!(g.to_string(), s);
        assert_eq!(betti_genus(&g), 3);
        assert!(DualGraph::parse("graph { v: a,b,c; e: a-b }").is_err());
        assert!(DualGraph::parse("graph { v: a; e: a-a }").is_err());
        assert!(DualGraph::parse("graph { v: a,b; e: a-x }").is_err());
        assert_eq!(betti_genus(&DualGraph::parse("graph { v: a,b,c; e: a-b, b-c }").unwrap()), 0);
    }

    #[test]
    fn infinity_configuration() {
        let (g, a) = alpha_infinity_configuration().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), betti_genus(&g)), (4, 6, 3));
        assert!(a.is_faithful());
        let q = graph_quotient(&g, &a).unwrap();
        assert_eq!(q.amalgam_name().as_deref(), Some("D4 *_Z4 S4"));
        assert!(q.orbit_stabilizer_holds());
        let (c, ca) = cover_of(&g, &a);
        assert_eq!((c.vertex_count(), c.edge_count(), betti_genus(&c)), (8, 12, 5));
        assert_eq!(ca.group().order(), 48);
        let s4c2 = make_group(GroupKind::DirectProduct(
            make_group(GroupKind::Symmetric(4)).unwrap(),
            make_group(GroupKind::Cyclic(2)).unwrap(),
        ))
        .unwrap();
        assert!(is_isomorphic(ca.group(), &s4c2));
        let cq = graph_quotient(&c, &ca).unwrap();
        assert_eq!(cq.amalgam_name().as_deref(), Some("D4 *_Z4 S4"));
        assert!(cq.orbit_stabilizer_holds());
    }

    #[test]
    fn minus_two_configuration() {
        let (g, a) = alpha_minus_two_configuration().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), betti_genus(&g)), (10, 12, 3));
        let q = graph_quotient(&g, &a).unwrap();
        assert_eq!(q.amalgam_name().as_deref(), Some("D2 *_Z2 D3"));
        let orders: Vec<usize> = q.vertices.iter().map(|v| v.stabilizer_order).collect();
        assert_eq!(orders, vec![6, 4]);
        assert_eq!(q.edges[0].stabilizer_order, 2);
        let (c, ca) = cover_of(&g, &a);
        assert_eq!((c.vertex_count(), c.edge_count(), betti_genus(&c)), (20, 24, 5));
        assert_eq!(ca.group().order(), 48);
        let cq = graph_quotient(&c, &ca).unwrap();
        assert_eq!(cq.amalgam_name().as_deref(), Some("D2 *_Z2 D3"));
    }

    #[test]
    fn trivial_action_on_an_edge() {
        let g = DualGraph::parse("graph { v: a,b; e: a-b }").unwrap();
        let a = GraphAction::from_generators(&g, vec![], vec![]).unwrap();
        let q = graph_quotient(&g, &a).unwrap();
        assert_eq!(q.vertices.len(), 2);
        assert_eq!(q.edges.len(), 1);
        assert!(q.vertices.iter().all(|v| v.label == "1"));
        assert_eq!(q.edges[0].label, "1");
        assert_eq!(q.amalgam_name(), None);
    }

    #[test]
    fn rejects_inversion_and_bad_images() {
        let g = DualGraph::parse("graph { v: a,b; e: a-b }").unwrap();
        let swap = Perm::parse("(1,2)", 2).unwrap();
        let id = Perm::identity(1);
        assert!(matches!(GraphAction::from_generators(&g, vec![swap], vec![id]), Err(GeoError::Inversion(_))));
        let g = DualGraph::parse("graph { v: a,b,c; e: a-b, b-c }").unwrap();
        let r = GraphAction::from_generators(&g, vec![Perm::parse("(1,2)", 3).unwrap()], vec![Perm::identity(2)]);
        assert!(matches!(r, Err(GeoError::Action(_))));
        // relations: a generator of Z2 cannot act by a 3-cycle
        let z2 = make_group(GroupKind::Cyclic(2)).unwrap();
        let tri = DualGraph::parse("graph { v: a,b,c; e: a-b, b-c, c-a }").unwrap();
        let r = GraphAction::new(
            &tri,
            z2.clone(),
            vec![z2.gens()[0].clone()],
            vec![Perm::parse("(1,2,3)", 3).unwrap()],
            vec![Perm::parse("(1,2,3)", 3).unwrap()],
        );
        assert!(matches!(r, Err(GeoError::Action(_))));
    }

    #[test]
    fn fixture_round_trip() {
        let (g, a) = alpha_infinity_configuration().unwrap();
        let text = format!("{g}\n{a}");
        let (g2, a2) = parse_graph_with_action(&text).unwrap();
        assert_eq!(g, g2);
        assert_eq!(a2.group().order(), 24);
        assert_eq!(graph_quotient(&g2, &a2).unwrap().amalgam_name().as_deref(), Some("D4 *_Z4 S4"));
    }
}
