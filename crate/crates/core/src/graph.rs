//! Coset graphs and their structure theory: distance regularity, distance
//! transitivity, primitivity, antipodality, folding, the halved-cube
//! identification, and exact spectra by two independent oracles.
//!
//! The coset graph of a code with a full-rank check matrix is the translation
//! graph on the syndrome space whose connection set is the distinct nonzero
//! check columns. All structural checks here are nevertheless performed at
//! the graph level (per-root BFS and the definitions), not by appealing to
//! the translation structure — agreement between the two views is exactly
//! what the crate exists to certify.
//!
//! For spectra there are two oracles that share no code: character sums over
//! the syndrome group (eigenvalues with multiplicities), and the integer
//! characteristic polynomial of the tridiagonal intersection matrix
//! (eigenvalue set). Closed-form eigenvalue candidates are audited against
//! the oracles and never trusted.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{CosetTable, LinearCode};
use crate::error::Error;
use crate::limits;
use crate::regularity::IntersectionArray;
use crate::transitivity::Perm;
use crate::uf::UnionFind;

/// An undirected simple graph in compressed adjacency form.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vcount: usize,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    /// Set when the construction had to collapse loops or parallel edges.
    pub warning: Option<&'static str>,
}

impl Graph {
    /// Build from per-vertex neighbor lists (sorted and deduplicated here;
    /// self-loops are rejected).
    pub fn from_adjacency(adj: Vec<Vec<u32>>, warning: Option<&'static str>) -> Graph {
        let vcount = adj.len();
        let mut offsets = Vec::with_capacity(vcount + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for (u, mut list) in adj.into_iter().enumerate() {
            list.sort_unstable();
            list.dedup();
            assert!(
                !list.iter().any(|&v| v as usize == u),
                "self-loop at vertex {u}"
            );
            assert!(
                list.iter().all(|&v| (v as usize) < vcount),
                "neighbor out of range at vertex {u}"
            );
            neighbors.extend_from_slice(&list);
            offsets.push(neighbors.len());
        }
        let g = Graph {
            vcount,
            offsets,
            neighbors,
            warning,
        };
        g.assert_symmetric();
        g
    }

    fn assert_symmetric(&self) {
        for u in 0..self.vcount {
            for &v in self.neighbors(u) {
                debug_assert!(
                    self.is_adjacent(v as usize, u as u32),
                    "adjacency is not symmetric: {u} -> {v}"
                );
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vcount
    }

    pub fn neighbors(&self, u: usize) -> &[u32] {
        &self.neighbors[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn is_adjacent(&self, u: usize, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// BFS distances from `root`; `u32::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, root: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vcount];
        dist[root] = 0;
        let mut frontier = vec![root as u32];
        let mut level = 0u32;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                for &v in self.neighbors(u as usize) {
                    if dist[v as usize] == u32::MAX {
                        dist[v as usize] = level + 1;
                        next.push(v);
                    }
                }
            }
            frontier = next;
            level += 1;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vcount == 0
            || self
                .bfs_distances(0)
                .iter()
                .all(|&d| d != u32::MAX)
    }

    /// Exact diameter (errors on a disconnected graph).
    pub fn diameter(&self) -> Result<usize, Error> {
        let mut best = 0u32;
        for u in 0..self.vcount {
            for &d in &self.bfs_distances(u) {
                if d == u32::MAX {
                    return Err(Error::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best as usize)
    }
}

/// Build the coset graph: vertices are packed syndromes, and two syndromes
/// are adjacent iff they differ by a check column. With distance ≥ 3 the
/// columns are distinct and nonzero, so the graph is simple with valency `n`;
/// otherwise loops/parallels collapse and a warning is carried in the result.
pub fn build_coset_graph(code: &LinearCode, table: &CosetTable) -> Result<Graph, Error> {
    build_coset_graph_with_limit(code, table, limits::GRAPH_BITS)
}

pub fn build_coset_graph_with_limit(
    code: &LinearCode,
    table: &CosetTable,
    max_bits: usize,
) -> Result<Graph, Error> {
    let max_bits = max_bits.min(limits::GRAPH_BITS_HARD);
    let r = code.redundancy();
    if r > max_bits {
        return Err(Error::TooLarge {
            what: "coset graph redundancy (bits)",
            value: r,
            limit: max_bits,
        });
    }
    let connection = table.distinct_nonzero_columns();
    let collapsed = connection.len() != table.columns().len();
    let size = table.size();
    let mut adj = Vec::with_capacity(size);
    for s in 0..size as u32 {
        let mut list: Vec<u32> = connection.iter().map(|&h| s ^ h).collect();
        list.sort_unstable();
        adj.push(list);
    }
    Ok(Graph::from_adjacency(
        adj,
        collapsed.then_some("check matrix has zero or repeated columns; loops and parallel edges were collapsed"),
    ))
}

/// One (root, vertex) pair whose level-transition counts disagree with the
/// first-seen pair for that level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrgViolation {
    pub root: u32,
    pub vertex: u32,
    pub level: u32,
    pub c_seen: u64,
    pub b_seen: u64,
    pub c_expected: u64,
    pub b_expected: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrgReport {
    pub distance_regular: bool,
    pub array: Option<IntersectionArray>,
    pub diameter: usize,
    pub violations: Vec<DrgViolation>,
}

/// Distance-regularity by definition: BFS from every vertex, count neighbors
/// one level down and one level up for every ordered pair, and demand the
/// counts depend only on the level.
pub fn distance_regular_check(g: &Graph) -> Result<DrgReport, Error> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut expected: Vec<Option<(u64, u64)>> = Vec::new();
    let mut violations = Vec::new();
    let mut diameter = 0usize;
    for root in 0..g.vertex_count() {
        let dist = g.bfs_distances(root);
        for (v, &dv) in dist.iter().enumerate() {
            let l = dv as usize;
            diameter = diameter.max(l);
            let mut c = 0u64;
            let mut b = 0u64;
            for &w in g.neighbors(v) {
                let dw = dist[w as usize] as usize;
                if l > 0 && dw == l - 1 {
                    c += 1;
                } else if dw == l + 1 {
                    b += 1;
                }
            }
            if expected.len() <= l {
                expected.resize(l + 1, None);
            }
            match expected[l] {
                None => expected[l] = Some((c, b)),
                Some((ce, be)) => {
                    if (c, b) != (ce, be) && violations.len() < crate::regularity::VIOLATION_CAP {
                        violations.push(DrgViolation {
                            root: root as u32,
                            vertex: v as u32,
                            level: l as u32,
                            c_seen: c,
                            b_seen: b,
                            c_expected: ce,
                            b_expected: be,
                        });
                    }
                }
            }
        }
    }
    let distance_regular = violations.is_empty();
    let array = if distance_regular {
        let b: Vec<u64> = (0..diameter)
            .map(|l| expected[l].expect("level populated").1)
            .collect();
        let c: Vec<u64> = (1..=diameter)
            .map(|l| expected[l].expect("level populated").0)
            .collect();
        Some(IntersectionArray::new(g.degree(0) as u64, b, c))
    } else {
        None
    };
    Ok(DrgReport {
        distance_regular,
        array,
        diameter,
        violations,
    })
}

/// The translation `s ↦ s ⊕ h` as a vertex permutation of a coset graph on
/// `2^r_bits` vertices. Translations are automorphisms of any translation
/// graph and supply the transitive part of its symmetry.
pub fn translation_perm(r_bits: usize, h: u32) -> Perm {
    assert!(r_bits <= 31, "translation domain too large");
    let size = 1u32 << r_bits;
    assert!(h < size, "translation vector outside the group");
    Perm::from_image((0..size).map(|s| s ^ h).collect()).expect("xor is a bijection")
}

fn adjacency_bitset(g: &Graph) -> Vec<u64> {
    let v = g.vertex_count();
    let mut bits = vec![0u64; (v * v).div_ceil(64)];
    for u in 0..v {
        for &w in g.neighbors(u) {
            let idx = u * v + w as usize;
            bits[idx / 64] |= 1 << (idx % 64);
        }
    }
    bits
}

fn validate_graph_automorphisms(g: &Graph, gens: &[Perm]) -> Result<(), Error> {
    let v = g.vertex_count();
    let adj = adjacency_bitset(g);
    let is_adj = |a: usize, b: usize| adj[(a * v + b) / 64] >> ((a * v + b) % 64) & 1 != 0;
    for gen in gens {
        if gen.degree() != v {
            return Err(Error::Dimension {
                expected: v,
                got: gen.degree(),
            });
        }
        for u in 0..v {
            for &w in g.neighbors(u) {
                if !is_adj(gen.apply(u), gen.apply(w as usize)) {
                    return Err(Error::NotAutomorphism(
                        "vertex permutation does not preserve adjacency",
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Distance-transitivity under the group generated by `gens`: for every
/// distance `i` (including 0), the ordered pairs at distance `i` must form a
/// single orbit. Orbit closure runs over the pair set with a visited bitset.
///
/// The generators must be validated graph automorphisms; orbits of the
/// closure equal orbits of the generated group.
pub fn distance_transitive_check(g: &Graph, gens: &[Perm]) -> Result<bool, Error> {
    distance_transitive_check_with_limit(g, gens, limits::PAIR_ORBIT_VERTICES)
}

pub fn distance_transitive_check_with_limit(
    g: &Graph,
    gens: &[Perm],
    max_vertices: usize,
) -> Result<bool, Error> {
    let max_vertices = max_vertices.min(limits::PAIR_ORBIT_VERTICES_HARD);
    let v = g.vertex_count();
    if v > max_vertices {
        return Err(Error::TooLarge {
            what: "pair-orbit vertex count",
            value: v,
            limit: max_vertices,
        });
    }
    if v == 0 {
        return Err(Error::InvalidParameter("empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    validate_graph_automorphisms(g, gens)?;
    // Full distance matrix (diameters here are tiny; u8 is ample).
    let mut dist = vec![0u8; v * v];
    let mut diameter = 0usize;
    for u in 0..v {
        for (w, &d) in g.bfs_distances(u).iter().enumerate() {
            assert!(d <= u8::MAX as u32);
            dist[u * v + w] = d as u8;
            diameter = diameter.max(d as usize);
        }
    }
    let mut counts = vec![0u64; diameter + 1];
    for &d in &dist {
        counts[d as usize] += 1;
    }
    let mut visited = vec![0u64; (v * v).div_ceil(64)];
    for target in 0..=diameter {
        // Seed: the first ordered pair at this distance.
        let seed = dist
            .iter()
            .position(|&d| d as usize == target)
            .expect("every distance up to the diameter occurs");
        let mut stack = vec![seed];
        visited[seed / 64] |= 1 << (seed % 64);
        let mut reached = 1u64;
        while let Some(pair) = stack.pop() {
            let (a, b) = (pair / v, pair % v);
            for gen in gens {
                let q = gen.apply(a) * v + gen.apply(b);
                if visited[q / 64] >> (q % 64) & 1 == 0 {
                    visited[q / 64] |= 1 << (q % 64);
                    debug_assert_eq!(dist[q] as usize, target, "automorphisms preserve distance");
                    reached += 1;
                    stack.push(q);
                }
            }
        }
        if reached != counts[target] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivityReport {
    /// Entry `i−1`: is the distance-`i` graph connected?
    pub connected_per_distance: Vec<bool>,
    pub primitive: bool,
}

/// Primitivity: every distance-`i` graph (`i = 1..diameter`) is connected.
/// The distance graphs are never materialized; one BFS sweep per root feeds
/// a union-find per distance.
pub fn primitivity_check(g: &Graph) -> Result<PrimitivityReport, Error> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let diameter = {
        let mut d = 0;
        for u in 0..g.vertex_count() {
            d = d.max(*g.bfs_distances(u).iter().max().expect("nonempty") as usize);
        }
        d
    };
    let mut components: Vec<UnionFind> = (0..diameter)
        .map(|_| UnionFind::new(g.vertex_count()))
        .collect();
    for u in 0..g.vertex_count() {
        for (w, &d) in g.bfs_distances(u).iter().enumerate() {
            if d >= 1 {
                components[d as usize - 1].union(u, w);
            }
        }
    }
    let connected_per_distance: Vec<bool> = components
        .iter_mut()
        .map(|uf| uf.class_count() == 1)
        .collect();
    let primitive = connected_per_distance.iter().all(|&c| c);
    Ok(PrimitivityReport {
        connected_per_distance,
        primitive,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodalReport {
    pub antipodal: bool,
    pub diameter: usize,
    /// The antipodal classes (sorted, each sorted), when the relation is an
    /// equivalence; empty otherwise.
    pub classes: Vec<Vec<u32>>,
}

/// Antipodality: is "equal or at maximal distance" an equivalence relation —
/// equivalently, is the distance-diameter graph a disjoint union of cliques?
pub fn antipodality_check(g: &Graph) -> Result<AntipodalReport, Error> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let v = g.vertex_count();
    let mut far: Vec<Vec<u32>> = Vec::with_capacity(v);
    let mut diameter = 0usize;
    let mut ecc = vec![0usize; v];
    let mut dists: Vec<Vec<u32>> = Vec::with_capacity(v);
    for u in 0..v {
        let dist = g.bfs_distances(u);
        ecc[u] = *dist.iter().max().expect("nonempty") as usize;
        diameter = diameter.max(ecc[u]);
        dists.push(dist);
    }
    for u in 0..v {
        far.push(
            (0..v)
                .filter(|&w| dists[u][w] as usize == diameter)
                .map(|w| w as u32)
                .collect(),
        );
    }
    let mut seen = vec![false; v];
    let mut classes = Vec::new();
    for u in 0..v {
        if seen[u] {
            continue;
        }
        let mut class: Vec<u32> = far[u].clone();
        class.push(u as u32);
        class.sort_unstable();
        for &w in &class {
            let mut other: Vec<u32> = far[w as usize].clone();
            other.push(w);
            other.sort_unstable();
            if other != class {
                return Ok(AntipodalReport {
                    antipodal: false,
                    diameter,
                    classes: Vec::new(),
                });
            }
            seen[w as usize] = true;
        }
        classes.push(class);
    }
    Ok(AntipodalReport {
        antipodal: true,
        diameter,
        classes,
    })
}

/// Collapse antipodal classes (of size at most 2) to single vertices.
/// Returns the folded graph and the projection from old to new vertices.
pub fn fold(g: &Graph) -> Result<(Graph, Vec<u32>), Error> {
    let report = antipodality_check(g)?;
    if !report.antipodal {
        return Err(Error::NotApplicable("graph is not antipodal"));
    }
    if report.classes.iter().any(|c| c.len() > 2) {
        return Err(Error::NotApplicable(
            "fold requires antipodal classes of size at most 2",
        ));
    }
    let mut projection = vec![0u32; g.vertex_count()];
    for (idx, class) in report.classes.iter().enumerate() {
        for &u in class {
            projection[u as usize] = idx as u32;
        }
    }
    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    for u in 0..g.vertex_count() {
        for &w in g.neighbors(u) {
            let (a, b) = (projection[u], projection[w as usize]);
            if a < b {
                edges.insert((a, b));
            } else if b < a {
                edges.insert((b, a));
            }
            // a == b: an intra-class edge folds to a loop and is dropped.
        }
    }
    let mut adj = vec![Vec::new(); report.classes.len()];
    for &(a, b) in &edges {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    Ok((Graph::from_adjacency(adj, None), projection))
}

/// Verify that `map` (old vertex → new vertex) is a graph isomorphism from
/// `a` onto `b`: a bijection preserving adjacency, with equal edge counts.
pub fn graphs_isomorphic_by_map(a: &Graph, b: &Graph, map: &[u32]) -> bool {
    if map.len() != a.vertex_count() || a.vertex_count() != b.vertex_count() {
        return false;
    }
    let v = a.vertex_count();
    let mut seen = vec![false; v];
    for &t in map {
        if t as usize >= v || seen[t as usize] {
            return false;
        }
        seen[t as usize] = true;
    }
    if a.edge_count() != b.edge_count() {
        return false;
    }
    for u in 0..v {
        for &w in a.neighbors(u) {
            if !b.is_adjacent(map[u] as usize, map[w as usize]) {
                return false;
            }
        }
    }
    true
}

/// Verify the halved-cube identification for the coset graph of the pair
/// code: with vertices labeled by the raw length-`m` syndromes of their
/// leaders (the even-weight vectors), the identity map must be an
/// isomorphism onto "even-weight vectors of length `m`, adjacent at Hamming
/// distance 2".
pub fn halved_cube_isomorphism_check(
    m: usize,
    g: &Graph,
    raw_labels: &[u32],
) -> Result<bool, Error> {
    if m < 2 || m > 25 {
        return Err(Error::InvalidParameter("halved-cube check needs 2 ≤ m ≤ 25"));
    }
    let v = g.vertex_count();
    if raw_labels.len() != v || v != 1usize << (m - 1) {
        return Err(Error::Dimension {
            expected: 1usize << (m - 1),
            got: raw_labels.len(),
        });
    }
    let mut sorted = raw_labels.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != v
        || sorted
            .iter()
            .any(|&x| x >= 1u32 << m || x.count_ones() % 2 != 0)
    {
        return Err(Error::InvalidParameter(
            "labels are not the distinct even-weight vectors of length m",
        ));
    }
    for u in 0..v {
        for w in u + 1..v {
            let adjacent = g.is_adjacent(u, w as u32);
            let dist2 = (raw_labels[u] ^ raw_labels[w]).count_ones() == 2;
            if adjacent != dist2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    CharacterSum,
    IntersectionMatrix,
}

/// An exact spectrum: eigenvalues (descending) with multiplicities, plus
/// open unit intervals certifying any non-integer roots of the intersection
/// matrix (never populated for the graphs this crate builds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub source: SpectrumSource,
    pub eigs: Vec<(i64, u64)>,
    pub noninteger_intervals: Vec<(i64, i64)>,
}

/// Character-sum oracle: for a translation graph on `F_2^r` with connection
/// set `S`, the eigenvalues are `λ_u = Σ_{h∈S} (−1)^{u·h}`, one per group
/// character `u`. Exact integer arithmetic, multiplicities included.
pub fn character_spectrum(code: &LinearCode) -> Result<SpectrumReport, Error> {
    character_spectrum_with_limit(code, limits::GRAPH_BITS)
}

pub fn character_spectrum_with_limit(
    code: &LinearCode,
    max_bits: usize,
) -> Result<SpectrumReport, Error> {
    let max_bits = max_bits.min(limits::GRAPH_BITS_HARD);
    let r = code.redundancy();
    if r > max_bits {
        return Err(Error::TooLarge {
            what: "character spectrum redundancy (bits)",
            value: r,
            limit: max_bits,
        });
    }
    let mut connection: Vec<u32> = (0..code.n())
        .map(|j| code.check().column(j).pack_u32())
        .collect();
    connection.sort_unstable();
    connection.dedup();
    connection.retain(|&h| h != 0);
    let mut mults: BTreeMap<i64, u64> = BTreeMap::new();
    for u in 0..1u64 << r {
        let odd = connection
            .iter()
            .filter(|&&h| (u as u32 & h).count_ones() % 2 == 1)
            .count() as i64;
        let lambda = connection.len() as i64 - 2 * odd;
        *mults.entry(lambda).or_insert(0) += 1;
    }
    let eigs: Vec<(i64, u64)> = mults.into_iter().rev().collect();
    Ok(SpectrumReport {
        source: SpectrumSource::CharacterSum,
        eigs,
        noninteger_intervals: Vec::new(),
    })
}

fn checked_mul(a: i128, b: i128) -> Result<i128, Error> {
    a.checked_mul(b)
        .ok_or(Error::Overflow("characteristic polynomial coefficient"))
}

fn checked_add(a: i128, b: i128) -> Result<i128, Error> {
    a.checked_add(b)
        .ok_or(Error::Overflow("characteristic polynomial coefficient"))
}

/// Evaluate at an integer point (Horner, checked).
fn poly_eval(p: &[i128], x: i128) -> Result<i128, Error> {
    let mut acc: i128 = 0;
    for &c in p.iter().rev() {
        acc = checked_add(checked_mul(acc, x)?, c)?;
    }
    Ok(acc)
}

/// Intersection-matrix oracle: eigenvalues of the `(ρ+1)×(ρ+1)` tridiagonal
/// matrix with subdiagonal `c_i`, diagonal `a_i`, superdiagonal `b_i`,
/// by way of its integer characteristic polynomial. Integer roots are
/// extracted by scanning `[−valency, valency]` (the spectral range of a
/// graph of that valency) with exact division; anything left is certified by
/// sign-change unit intervals.
pub fn array_spectrum(arr: &IntersectionArray) -> Result<SpectrumReport, Error> {
    let rho = arr.rho;
    // Characteristic polynomials of leading principal minors:
    // D_0 = 1, D_1 = x − a_0,
    // D_k = (x − a_{k−1})·D_{k−1} − b_{k−2}·c_{k−1}·D_{k−2}.
    let mut d_prev: Vec<i128> = vec![1];
    let mut d_cur: Vec<i128> = vec![-(arr.a_at(0) as i128), 1];
    for k in 2..=rho + 1 {
        let a = arr.a_at(k - 1) as i128;
        let coupling = checked_mul(arr.b_at(k - 2) as i128, arr.c_at(k - 1) as i128)?;
        // (x − a)·d_cur
        let mut next: Vec<i128> = vec![0; d_cur.len() + 1];
        for (i, &c) in d_cur.iter().enumerate() {
            next[i + 1] = checked_add(next[i + 1], c)?;
            next[i] = checked_add(next[i], checked_mul(-a, c)?)?;
        }
        // − coupling·d_prev
        for (i, &c) in d_prev.iter().enumerate() {
            next[i] = checked_add(next[i], checked_mul(-coupling, c)?)?;
        }
        d_prev = d_cur;
        d_cur = next;
    }
    let mut poly = d_cur;
    let bound = arr.valency as i128;
    let mut eigs: Vec<(i64, u64)> = Vec::new();
    let mut x = bound;
    while x >= -bound && poly.len() > 1 {
        if poly_eval(&poly, x)? == 0 {
            // Synthetic division by (X − x); exact because x is a root.
            let mut quotient = vec![0i128; poly.len() - 1];
            let mut carry: i128 = 0;
            for i in (0..poly.len()).rev() {
                let coeff = checked_add(poly[i], checked_mul(carry, x)?)?;
                if i == 0 {
                    debug_assert_eq!(coeff, 0, "division by a verified root is exact");
                } else {
                    quotient[i - 1] = coeff;
                    carry = coeff;
                }
            }
            poly = quotient;
            match eigs.last_mut() {
                Some((v, mult)) if *v as i128 == x => *mult += 1,
                _ => eigs.push((x as i64, 1)),
            }
            continue; // same x again: the root may repeat
        }
        x -= 1;
    }
    let mut intervals = Vec::new();
    if poly.len() > 1 {
        // Certify remaining real roots (if any) by sign changes on unit steps.
        let mut prev = poly_eval(&poly, -bound - 1)?;
        for t in -bound..=bound + 1 {
            let cur = poly_eval(&poly, t)?;
            if prev != 0 && cur != 0 && (prev < 0) != (cur < 0) {
                intervals.push(((t - 1) as i64, t as i64));
            }
            prev = cur;
        }
    }
    Ok(SpectrumReport {
        source: SpectrumSource::IntersectionMatrix,
        eigs,
        noninteger_intervals: intervals,
    })
}

/// Closed-form eigenvalue candidates for the union-family coset graph, as
/// conventionally stated for this family: for `i = 0..=ρ` with `ρ = ⌊m/4⌋`,
/// `binom(m,2) − 16·i·(ρ+1−i)` when `m ≡ 2 (mod 4)`, and
/// `binom(m,2) − 8·i·(2ρ+1−i)` when `m ≡ 0 (mod 4)`.
///
/// These are audit inputs only: the crate compares them against the two
/// oracles and reports, but never asserts them (they are wrong for some `m`;
/// see the audit tests).
pub fn claimed_union_eigenvalues(m: usize) -> Result<Vec<i64>, Error> {
    if m < 6 || m % 2 != 0 {
        return Err(Error::InvalidParameter(
            "the union family needs even m ≥ 6 (odd m is antipodal: the union is not a coset extension)",
        ));
    }
    let n = (m * (m - 1) / 2) as i64;
    let rho = (m / 4) as i64;
    let values = (0..=rho)
        .map(|i| {
            if m % 4 == 2 {
                n - 16 * i * (rho + 1 - i)
            } else {
                n - 8 * i * (2 * rho + 1 - i)
            }
        })
        .collect();
    Ok(values)
}

/// Comparison of the closed-form candidates with an oracle eigenvalue set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaAudit {
    /// Candidate values in formula order (`i = 0..=ρ`), duplicates kept.
    pub candidates: Vec<i64>,
    /// The oracle's distinct eigenvalues, descending.
    pub oracle: Vec<i64>,
    /// Set equality of candidates vs oracle.
    pub agree: bool,
}

pub fn audit_union_eigenvalues(m: usize, oracle: &[i64]) -> Result<FormulaAudit, Error> {
    let candidates = claimed_union_eigenvalues(m)?;
    let mut cand_set = candidates.clone();
    cand_set.sort_unstable();
    cand_set.dedup();
    let mut oracle_set = oracle.to_vec();
    oracle_set.sort_unstable();
    oracle_set.dedup();
    let agree = cand_set == oracle_set;
    let mut oracle_desc = oracle_set;
    oracle_desc.reverse();
    Ok(FormulaAudit {
        candidates,
        oracle: oracle_desc,
        agree,
    })
}
