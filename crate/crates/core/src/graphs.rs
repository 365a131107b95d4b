//! Edge rings of simple graphs with loops.
//!
//! Vertices are 0-based internally, so vertex `i` carries the variable
//! `x_{i+1}`. An edge `{i, j}` contributes `x_i x_j` to the edge ring and a
//! loop at `i` contributes `x_i^2`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gauss::{algebra_dimension, gauss_generators, relation_report};
use crate::matrix::IntMatrix;
use crate::monomial::{Monomial, MonomialAlgebra, MonomialSet};
use crate::subsets::Combinations;

/// An edge `(i, j)` with `i < j`.
pub type Edge = (usize, usize);

/// Largest vertex count accepted by [`conjecture_scan`].
pub const SCAN_CAP: usize = 8;

/// A simple graph on `0..d` together with a set of loop vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LoopedGraph {
    d: usize,
    edges: Vec<Edge>,
    loops: Vec<usize>,
}

impl LoopedGraph {
    /// Edges may be given in either orientation; they are stored sorted.
    pub fn new(
        d: usize,
        edges: impl IntoIterator<Item = Edge>,
        loops: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut es = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidArgument(format!(
                    "edge {{{}, {}}} is a loop",
                    a + 1,
                    b + 1
                )));
            }
            if a.max(b) >= d {
                return Err(Error::InvalidArgument(format!(
                    "edge {{{}, {}}} leaves the vertex range 1..{}",
                    a + 1,
                    b + 1,
                    d
                )));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate edge {{{}, {}}}",
                w[0].0 + 1,
                w[0].1 + 1
            )));
        }
        let mut ls: Vec<usize> = loops.into_iter().collect();
        if let Some(&v) = ls.iter().find(|&&v| v >= d) {
            return Err(Error::InvalidArgument(format!(
                "loop at {} leaves the vertex range 1..{}",
                v + 1,
                d
            )));
        }
        ls.sort_unstable();
        ls.dedup();
        Ok(LoopedGraph {
            d,
            edges: es,
            loops: ls,
        })
    }

    pub fn simple(d: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        Self::new(d, edges, [])
    }

    /// The path `0 - 1 - ... - (d-1)`.
    pub fn path(d: usize) -> Self {
        Self::simple(d, (1..d).map(|i| (i - 1, i))).expect("valid path")
    }

    /// The cycle on `d >= 3` vertices.
    pub fn cycle(d: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidArgument(format!(
                "a cycle needs at least 3 vertices, got {}",
                d
            )));
        }
        Self::simple(d, (1..d).map(|i| (i - 1, i)).chain([(0, d - 1)]))
    }

    /// `K_{n,m}` with parts `0..n` and `n..n+m`.
    pub fn complete_bipartite(n: usize, m: usize) -> Self {
        Self::simple(n + m, (0..n).flat_map(|i| (n..n + m).map(move |j| (i, j))))
            .expect("valid complete bipartite graph")
    }

    /// The same graph with loop set `loops`.
    pub fn with_loops(&self, loops: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(self.d, self.edges.iter().copied(), loops)
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn loops(&self) -> &[usize] {
        &self.loops
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.d];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Component label of every vertex, labels numbered by smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        component_labels(self.d, &self.edges)
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// A proper 2-colouring, if the loop-free part is bipartite.
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut colour = vec![u8::MAX; self.d];
        for s in 0..self.d {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// Whether the graph is a cycle of even length.
    pub fn is_even_cycle(&self) -> bool {
        self.d >= 4
            && self.d % 2 == 0
            && self.edges.len() == self.d
            && self.is_connected()
            && (0..self.d).all(|v| self.degree(v) == 2)
    }

    pub fn edge_monomial(&self, (a, b): Edge) -> Monomial {
        Monomial::from_indices(self.d, &[a, b])
    }

    /// The `d x |E|` vertex-edge incidence matrix; loops are not included.
    pub fn incidence_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.d, self.edges.len(), |v, k| {
            let (a, b) = self.edges[k];
            i64::from(v == a || v == b)
        })
    }
}

impl fmt::Display for LoopedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices; edges", self.d)?;
        if self.edges.is_empty() {
            f.write_str(" none")?;
        }
        for &(a, b) in &self.edges {
            write!(f, " {}-{}", a + 1, b + 1)?;
        }
        if !self.loops.is_empty() {
            f.write_str("; loops")?;
            for &v in &self.loops {
                write!(f, " {}", v + 1)?;
            }
        }
        Ok(())
    }
}

fn component_labels(d: usize, edges: &[Edge]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut label = vec![usize::MAX; d];
    let mut next = 0;
    (0..d)
        .map(|v| {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect()
}

/// The edge ring `K[x_i x_j : {i, j} in E] [x_i^2 : i in L]`.
pub fn edge_ring(g: &LoopedGraph) -> Result<MonomialAlgebra> {
    let gens = g
        .edges
        .iter()
        .map(|&e| g.edge_monomial(e))
        .chain(g.loops.iter().map(|&v| Monomial::from_indices(g.d, &[v, v])));
    MonomialAlgebra::new(g.d, gens.collect())
}

/// Whether every connected component of the loop-free part of `g`, isolated
/// vertices included, contains an odd cycle.
///
/// When `g` has as many edges as vertices this is equivalent to the
/// incidence matrix being nonsingular.
pub fn odd_cycle_every_component(g: &LoopedGraph) -> bool {
    let labels = g.components();
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let colouring = odd_cycle_components(g, &labels, count);
    colouring.iter().all(|&odd| odd)
}

/// For each component, whether it contains an odd cycle.
fn odd_cycle_components(g: &LoopedGraph, labels: &[usize], count: usize) -> Vec<bool> {
    let adj = g.adjacency();
    let mut colour = vec![u8::MAX; g.d];
    let mut odd = vec![false; count];
    for s in 0..g.d {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if colour[w] == colour[u] {
                    odd[labels[u]] = true;
                }
            }
        }
    }
    odd
}

/// Whether the edges can be ordered `e_1, ..., e_r` so that
/// `|V ∩ (e_1 ∪ ... ∪ e_i)| = i` for every `i`.
pub fn labeling_condition(vertices: &[usize], edges: &[Edge]) -> Result<bool> {
    if vertices.len() != edges.len() {
        return Err(Error::InvalidArgument(format!(
            "labeling needs |V| = |E|, got {} vertices and {} edges",
            vertices.len(),
            edges.len()
        )));
    }
    if edges.len() > 64 {
        return Err(Error::InvalidArgument(format!(
            "at most 64 edges supported, got {}",
            edges.len()
        )));
    }
    let pos = |v: usize| vertices.iter().position(|&w| w == v);
    let hits: Vec<u64> = edges
        .iter()
        .map(|&(a, b)| pos(a).map_or(0, |i| 1u64 << i) | pos(b).map_or(0, |i| 1u64 << i))
        .collect();
    let full = if vertices.len() == 64 {
        u64::MAX
    } else {
        (1u64 << vertices.len()) - 1
    };
    // the covered set determines the used edges up to the order, since each
    // step adds exactly one vertex; failed covered sets are memoised
    fn search(hits: &[u64], used: u64, covered: u64, full: u64, failed: &mut HashSet<u64>) -> bool {
        if covered == full && used.count_ones() as usize == hits.len() {
            return true;
        }
        if failed.contains(&used) {
            return false;
        }
        for (k, &h) in hits.iter().enumerate() {
            if used >> k & 1 == 1 {
                continue;
            }
            let new = h & !covered;
            if new.count_ones() == 1 && search(hits, used | 1 << k, covered | new, full, failed) {
                return true;
            }
        }
        failed.insert(used);
        false
    }
    Ok(search(&hits, 0, 0, full, &mut HashSet::new()))
}

/// The minor `Δ_{V,E}` of the incidence matrix with rows `V` and columns `E`.
pub fn delta_minor(vertices: &[usize], edges: &[Edge]) -> Result<BigInt> {
    let m = IntMatrix::from_fn(vertices.len(), edges.len(), |r, c| {
        let (a, b) = edges[c];
        i64::from(vertices[r] == a || vertices[r] == b)
    });
    m.det_exact()
}

/// Some `E` with `|E| = |V|` and `Δ_{V,E} != 0`, searched for when
/// `|V| <= d - c` for a graph with `c` components.
///
/// Edges are first chosen one at a time, each adding exactly one new vertex
/// of `V`. That succeeds whenever every component keeps a vertex outside
/// `V`; otherwise all `|V|`-subsets of edges are tried. Returns `None` when
/// no nonsingular minor exists, which happens for instance when `V`
/// contains an isolated vertex. Every answer is confirmed by an exact
/// determinant.
pub fn exists_nonsingular_minor(g: &LoopedGraph, vertices: &[usize]) -> Result<Option<Vec<Edge>>> {
    let bound = g.d - g.component_count();
    if vertices.len() > bound {
        return Err(Error::NoGuarantee {
            size: vertices.len(),
            bound,
        });
    }
    let mut vs = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() != vertices.len() || vs.iter().any(|&v| v >= g.d) {
        return Err(Error::InvalidArgument(
            "vertex set must consist of distinct vertices of the graph".into(),
        ));
    }
    let full = (1u64 << vs.len()) - 1;
    let hits: Vec<u64> = g
        .edges
        .iter()
        .map(|&(a, b)| {
            let bit = |v: usize| vs.binary_search(&v).map_or(0, |i| 1u64 << i);
            bit(a) | bit(b)
        })
        .collect();
    fn search(hits: &[u64], covered: u64, full: u64, chosen: &mut Vec<usize>, failed: &mut HashSet<u64>) -> bool {
        if covered == full {
            return true;
        }
        if failed.contains(&covered) {
            return false;
        }
        for (k, &h) in hits.iter().enumerate() {
            let new = h & !covered;
            if new.count_ones() == 1 {
                chosen.push(k);
                if search(hits, covered | new, full, chosen, failed) {
                    return true;
                }
                chosen.pop();
            }
        }
        failed.insert(covered);
        false
    }
    let mut chosen = Vec::new();
    if search(&hits, 0, full, &mut chosen, &mut HashSet::new()) {
        let edges: Vec<Edge> = chosen.iter().map(|&k| g.edges[k]).collect();
        if delta_minor(&vs, &edges)?.is_zero() {
            return Err(Error::Internal("labelled edge set gave a vanishing minor".into()));
        }
        return Ok(Some(edges));
    }
    for subset in Combinations::new(g.edges.len(), vs.len()) {
        let edges: Vec<Edge> = subset.iter().map(|&k| g.edges[k]).collect();
        if !delta_minor(&vs, &edges)?.is_zero() {
            return Ok(Some(edges));
        }
    }
    Ok(None)
}

/// A root set `V` and a forest `T` in which every component, isolated
/// vertices included, contains exactly one vertex of `V`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ForestCertificate {
    pub roots: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl ForestCertificate {
    /// `g_{V,T} = x_V e_T / x_{V^c}`.
    pub fn generator(&self, d: usize) -> Monomial {
        let mut exps = vec![-1i64; d];
        for &v in &self.roots {
            exps[v] = 1;
        }
        for &(a, b) in &self.edges {
            exps[a] += 1;
            exps[b] += 1;
        }
        Monomial::new(
            exps.into_iter()
                .map(|e| u32::try_from(e).expect("every non-root vertex lies on a forest edge"))
                .collect(),
        )
    }
}

/// All forests `T` with `|T| = d - |V|` in which every component owns
/// exactly one vertex of `roots`. Loops of `g` play no role here.
pub fn rooted_spanning_forests(g: &LoopedGraph, roots: &[usize]) -> Result<Vec<ForestCertificate>> {
    let mut rs = roots.to_vec();
    rs.sort_unstable();
    rs.dedup();
    if rs.is_empty() {
        return Err(Error::InvalidArgument("root set must be nonempty".into()));
    }
    if rs.len() != roots.len() || rs.iter().any(|&v| v >= g.d) {
        return Err(Error::InvalidArgument(
            "roots must be distinct vertices of the graph".into(),
        ));
    }
    let mut state = ForestState {
        comp: (0..g.d).collect(),
        rooted: vec![false; g.d],
    };
    for &r in &rs {
        state.rooted[r] = true;
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    forest_search(&g.edges, 0, g.d - rs.len(), &state, &mut chosen, &mut |t| {
        out.push(ForestCertificate {
            roots: rs.clone(),
            edges: t.to_vec(),
        });
    });
    Ok(out)
}

#[derive(Clone)]
struct ForestState {
    /// Component label of each vertex.
    comp: Vec<usize>,
    /// Whether the component with this label already holds a root.
    rooted: Vec<bool>,
}

fn forest_search(
    edges: &[Edge],
    next: usize,
    need: usize,
    state: &ForestState,
    chosen: &mut Vec<Edge>,
    emit: &mut impl FnMut(&[Edge]),
) {
    if need == 0 {
        emit(chosen);
        return;
    }
    if edges.len() - next < need {
        return;
    }
    let (a, b) = edges[next];
    let (ca, cb) = (state.comp[a], state.comp[b]);
    if ca != cb && !(state.rooted[ca] && state.rooted[cb]) {
        let mut merged = state.clone();
        for c in merged.comp.iter_mut() {
            if *c == cb {
                *c = ca;
            }
        }
        merged.rooted[ca] |= state.rooted[cb];
        chosen.push((a, b));
        forest_search(edges, next + 1, need - 1, &merged, chosen, emit);
        chosen.pop();
    }
    forest_search(edges, next + 1, need, state, chosen, emit);
}

/// The Gauss generators of the edge ring of a bipartite graph with loops,
/// as the distinct `g_{V,T}` over nonempty `V ⊆ L` and rooted forests `T`.
pub fn gauss_from_forests(g: &LoopedGraph) -> Result<MonomialSet> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let labels = g.components();
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut looped = vec![false; count];
    for &v in &g.loops {
        looped[labels[v]] = true;
    }
    if looped.iter().any(|&l| !l) {
        let dim = algebra_dimension(&edge_ring(g)?);
        return Err(Error::DimensionDeficient { dim, ambient: g.d });
    }
    let mut gens = Vec::new();
    for mask in 1u64..1 << g.loops.len() {
        let roots: Vec<usize> = g
            .loops
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        for cert in rooted_spanning_forests(g, &roots)? {
            gens.push(cert.generator(g.d));
        }
    }
    MonomialSet::new(g.d, gens)
}

/// For a connected, loop-free, non-bipartite graph: the `d`-subsets of edges
/// whose spanned subgraph on all `d` vertices has an odd cycle in every
/// component.
pub fn nonbipartite_gauss_supports(g: &LoopedGraph) -> Result<Vec<Vec<Edge>>> {
    if !g.loops.is_empty() {
        return Err(Error::InvalidArgument("graph must be loop-free".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_bipartite() {
        return Err(Error::Bipartite);
    }
    if g.edges.len() < g.d {
        return Err(Error::InvalidArgument(format!(
            "need at least {} edges, got {}",
            g.d,
            g.edges.len()
        )));
    }
    let mut out = Vec::new();
    for subset in Combinations::new(g.edges.len(), g.d) {
        let edges: Vec<Edge> = subset.iter().map(|&k| g.edges[k]).collect();
        let sub = LoopedGraph {
            d: g.d,
            edges,
            loops: Vec::new(),
        };
        if odd_cycle_every_component(&sub) {
            out.push(sub.edges);
        }
    }
    Ok(out)
}

/// `(e_1 ... e_d) / (x_1 ... x_d)` for each support.
pub fn supports_to_generators(d: usize, supports: &[Vec<Edge>]) -> Result<MonomialSet> {
    let all = Monomial::new(vec![1; d]);
    let gens = supports.iter().map(|s| {
        let idx: Vec<usize> = s.iter().flat_map(|&(a, b)| [a, b]).collect();
        Monomial::from_indices(d, &idx)
            .div(&all)
            .ok_or_else(|| Error::InvalidArgument("edge support does not cover every vertex".into()))
    });
    MonomialSet::new(d, gens.collect::<Result<Vec<_>>>()?)
}

/// Number of spanning trees, by the reduced Laplacian determinant; 0 for a
/// disconnected graph. Loops are ignored.
pub fn spanning_tree_count(g: &LoopedGraph) -> Result<BigInt> {
    if g.d == 0 || !g.is_connected() {
        return Ok(BigInt::zero());
    }
    let n = g.d - 1;
    let mut lap = IntMatrix::zeros(n, n);
    for &(a, b) in &g.edges {
        for (u, w) in [(a, b), (b, a)] {
            if u < n {
                let diag = lap.get(u, u) + 1;
                lap.set(u, u, diag);
                if w < n {
                    let off = lap.get(u, w) - 1;
                    lap.set(u, w, off);
                }
            }
        }
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    lap.det_exact()
}

/// `λ_d`: the sum over compositions `a_1 + ... + a_r = d` of `a_1 ... a_r`.
///
/// Grouping compositions by their first part gives
/// `λ_d = Σ_k k λ_{d-k}` with `λ_0 = 1`, which is how it is evaluated.
pub fn path_lambda(d: usize) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::InvalidArgument("λ_d is defined for d >= 1".into()));
    }
    let mut table: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=d {
        let v = (1..=n).map(|k| BigInt::from(k) * &table[n - k]).sum();
        table.push(v);
    }
    Ok(table.pop().expect("nonempty"))
}

/// The generators of the Gauss algebra of a `d`-cycle with a loop at vertex
/// 1, listed in the order `y_1, ..., y_d` (plus `y_{d+1} = x_1 ... x_d` for
/// odd `d`) used by [`cycle_binomial`].
pub fn cycle_generators(d: usize) -> Result<Vec<Monomial>> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!(
            "a cycle needs at least 3 vertices, got {}",
            d
        )));
    }
    let mut exps = vec![1u32; d];
    exps[0] = 2;
    exps[1] = 0;
    let mut out = vec![Monomial::new(exps.clone())];
    exps[1] = 1;
    exps[d - 1] = 0;
    out.push(Monomial::new(exps));
    for j in 1..d - 1 {
        let mut e = vec![1u32; d];
        e[0] = 3;
        e[j] = 0;
        e[j + 1] = 0;
        out.push(Monomial::new(e));
    }
    if d % 2 == 1 {
        out.push(Monomial::new(vec![1; d]));
    }
    Ok(out)
}

/// Coefficient vector of the defining binomial of the cycle Gauss algebra,
/// indexed like [`cycle_generators`]: for even `d`
/// `y_{d-1} Π_{i<d/2} y_{2i} - y_d Π_{i<d/2} y_{2i-1}`, for odd `d`
/// `y_d Π_{i<=(d-1)/2} y_{2i} - y_{d+1} Π_{i<=(d-1)/2} y_{2i-1}`.
pub fn cycle_binomial(d: usize) -> Result<Vec<i64>> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!(
            "a cycle needs at least 3 vertices, got {}",
            d
        )));
    }
    let odd = d % 2 == 1;
    let mut f = vec![0i64; if odd { d + 1 } else { d }];
    let half = if odd { (d - 1) / 2 } else { d / 2 - 1 };
    for i in 1..=half {
        f[2 * i - 1] += 1;
        f[2 * i - 2] -= 1;
    }
    if odd {
        f[d - 1] += 1;
        f[d] -= 1;
    } else {
        f[d - 2] += 1;
        f[d - 1] -= 1;
    }
    Ok(f)
}

/// Whether two relation vectors agree up to sign and a permutation of the
/// generators: their multisets of coefficients coincide up to a global sign.
pub fn same_up_to_relabeling(a: &[BigInt], b: &[BigInt]) -> bool {
    let sorted = |v: &[BigInt], flip: bool| {
        let mut s: Vec<BigInt> = v
            .iter()
            .filter(|x| !x.is_zero())
            .map(|x| if flip { -x } else { x.clone() })
            .collect();
        s.sort();
        s
    };
    let target = sorted(b, false);
    sorted(a, false) == target || sorted(a, true) == target
}

/// Canonical code of a simple graph on at most [`SCAN_CAP`] vertices: the
/// smallest upper-triangle adjacency word over all vertex orders compatible
/// with sorting by degree and neighbour degrees. Two graphs share a code iff
/// they are isomorphic.
pub fn canonical_code(g: &LoopedGraph) -> u64 {
    let adj = g.adjacency();
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut key: Vec<(usize, Vec<usize>, usize)> = (0..g.d)
        .map(|v| {
            let mut nd: Vec<usize> = adj[v].iter().map(|&w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd, v)
        })
        .collect();
    key.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for k in 0..key.len() {
        if k == 0 || (key[k].0, &key[k].1) != (key[k - 1].0, &key[k - 1].1) {
            cells.push(Vec::new());
        }
        cells.last_mut().expect("pushed above").push(key[k].2);
    }
    let mut matrix = vec![vec![false; g.d]; g.d];
    for &(a, b) in &g.edges {
        matrix[a][b] = true;
        matrix[b][a] = true;
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(g.d);
    permute_cells(&cells, 0, &mut vec![false; g.d], &mut order, &mut |order| {
        let mut code = 0u64;
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                code = code << 1 | u64::from(matrix[order[i]][order[j]]);
            }
        }
        best = best.min(code);
    });
    best
}

fn permute_cells(
    cells: &[Vec<usize>],
    cell: usize,
    used: &mut [bool],
    order: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    let Some(members) = cells.get(cell) else {
        visit(order);
        return;
    };
    let placed = members.iter().filter(|&&v| used[v]).count();
    if placed == members.len() {
        permute_cells(cells, cell + 1, used, order, visit);
        return;
    }
    for &v in members {
        if !used[v] {
            used[v] = true;
            order.push(v);
            permute_cells(cells, cell, used, order, visit);
            order.pop();
            used[v] = false;
        }
    }
}

/// One representative of every isomorphism class of connected bipartite
/// graphs on `n` vertices, sorted by canonical code.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// the classes on `n` vertices arise from those on `n - 1` by attaching a
/// new vertex to a nonempty neighbourhood.
pub fn connected_bipartite_graphs(n: usize) -> Result<Vec<LoopedGraph>> {
    if n > SCAN_CAP {
        return Err(Error::CapExceeded {
            requested: n,
            cap: SCAN_CAP,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![LoopedGraph {
        d: 1,
        edges: Vec::new(),
        loops: Vec::new(),
    }];
    for size in 2..=n {
        let mut seen = hashbrown::HashMap::new();
        for base in &level {
            for mask in 1u32..1 << (size - 1) {
                let edges = base
                    .edges
                    .iter()
                    .copied()
                    .chain((0..size - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, size - 1)));
                let g = LoopedGraph::simple(size, edges).expect("valid extension");
                if g.is_bipartite() {
                    seen.entry(canonical_code(&g)).or_insert(g);
                }
            }
        }
        let mut next: Vec<(u64, LoopedGraph)> = seen.into_iter().collect();
        next.sort_by_key(|(code, _)| *code);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

/// One row of [`conjecture_scan`]: a connected bipartite graph with a single
/// loop and the shape of its Gauss algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanRow {
    pub graph: LoopedGraph,
    pub code: u64,
    pub dim: usize,
    pub edim: usize,
    pub kernel_rank: usize,
    pub spanning_trees: BigInt,
}

impl ScanRow {
    /// A hypersurface ring of dimension `d - 1`.
    pub fn is_hypersurface_of_codim_one(&self) -> bool {
        self.kernel_rank == 1 && self.dim + 1 == self.graph.d
    }

    /// A hypersurface row whose graph is not an even cycle.
    pub fn is_counterexample_candidate(&self) -> bool {
        self.is_hypersurface_of_codim_one() && !self.graph.is_even_cycle()
    }
}

/// Computes the row for `g`, which must carry exactly one loop. For a
/// bipartite graph the number of Gauss generators is checked against the
/// number of spanning trees.
pub fn scan_instance(g: &LoopedGraph) -> Result<ScanRow> {
    if g.loops.len() != 1 {
        return Err(Error::InvalidArgument(format!(
            "expected exactly one loop, got {}",
            g.loops.len()
        )));
    }
    let gauss = gauss_generators(&edge_ring(g)?, None)?;
    let report = relation_report(&gauss.gens)?;
    let trees = spanning_tree_count(g)?;
    if g.is_bipartite() && BigInt::from(gauss.gens.len()) > trees {
        return Err(Error::Internal(format!(
            "{}: {} Gauss generators exceed {} spanning trees",
            g,
            gauss.gens.len(),
            trees
        )));
    }
    Ok(ScanRow {
        graph: g.clone(),
        code: canonical_code(g),
        dim: report.dim,
        edim: report.edim,
        kernel_rank: report.kernel_rank,
        spanning_trees: trees,
    })
}

/// Every connected bipartite graph on `2..=max_d` vertices (up to
/// isomorphism) with every single-loop placement, in the order
/// `(d, canonical code, loop vertex)`.
pub fn scan_instances(max_d: usize) -> Result<Vec<LoopedGraph>> {
    if max_d > SCAN_CAP {
        return Err(Error::CapExceeded {
            requested: max_d,
            cap: SCAN_CAP,
        });
    }
    let mut out = Vec::new();
    for n in 2..=max_d {
        for g in connected_bipartite_graphs(n)? {
            for v in 0..n {
                out.push(g.with_loops([v])?);
            }
        }
    }
    Ok(out)
}

/// The full table over [`scan_instances`], computed sequentially.
pub fn conjecture_scan(max_d: usize) -> Result<Vec<ScanRow>> {
    scan_instances(max_d)?.iter().map(scan_instance).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::gauss_generators;
    use crate::lattice::kernel_lattice;
    use proptest::prelude::*;

    fn graph(d: usize, edges: &[(usize, usize)], loops: &[usize]) -> LoopedGraph {
        LoopedGraph::new(
            d,
            edges.iter().map(|&(a, b)| (a - 1, b - 1)),
            loops.iter().map(|&v| v - 1),
        )
        .unwrap()
    }

    fn set(d: usize, s: &str) -> MonomialSet {
        MonomialSet::parse(d, s).unwrap()
    }

    fn brute(g: &LoopedGraph) -> MonomialSet {
        gauss_generators(&edge_ring(g).unwrap(), None).unwrap().gens
    }

    /// Forests by filtering every edge subset of the right size.
    fn forests_by_subsets(g: &LoopedGraph, roots: &[usize]) -> usize {
        let need = g.d - roots.len();
        Combinations::new(g.edges.len(), need)
            .filter(|s| {
                let edges: Vec<Edge> = s.iter().map(|&k| g.edges[k]).collect();
                let labels = component_labels(g.d, &edges);
                let comps = labels.iter().copied().max().map_or(0, |m| m + 1);
                let mut per = vec![0; comps];
                for &r in roots {
                    per[labels[r]] += 1;
                }
                comps == roots.len() && per.iter().all(|&c| c == 1)
            })
            .count()
    }

    #[test]
    fn edge_ring_examples() {
        let tri = edge_ring(&LoopedGraph::cycle(3).unwrap()).unwrap();
        assert_eq!(tri.gens(), &set(3, "x1*x2 x2*x3 x1*x3"));
        assert_eq!(
            edge_ring(&graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)], &[1]))
                .unwrap()
                .gens()
                .len(),
            5
        );
        assert_eq!(
            edge_ring(&LoopedGraph::complete_bipartite(2, 2).with_loops([0]).unwrap())
                .unwrap()
                .gens()
                .len(),
            5
        );
        assert_eq!(edge_ring(&LoopedGraph::simple(3, []).unwrap()), Err(Error::Empty));
    }

    #[test]
    fn construction_errors() {
        assert!(LoopedGraph::simple(3, [(0, 0)]).is_err());
        assert!(LoopedGraph::simple(3, [(0, 3)]).is_err());
        assert!(LoopedGraph::simple(3, [(0, 1), (1, 0)]).is_err());
        assert!(LoopedGraph::new(3, [], [5]).is_err());
    }

    #[test]
    fn odd_cycles_and_determinants() {
        let tri = LoopedGraph::cycle(3).unwrap();
        assert!(odd_cycle_every_component(&tri));
        assert_eq!(tri.incidence_matrix().det_exact().unwrap().magnitude(), &2u32.into());
        let square = LoopedGraph::cycle(4).unwrap();
        assert!(!odd_cycle_every_component(&square));
        assert!(square.incidence_matrix().det_exact().unwrap().is_zero());
        let two = graph(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)], &[]);
        assert!(odd_cycle_every_component(&two));
        assert!(!two.incidence_matrix().det_exact().unwrap().is_zero());
    }

    #[test]
    fn labeling_examples() {
        assert!(labeling_condition(&[0, 2], &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(
            delta_minor(&[0, 2], &[(0, 1), (1, 2)]).unwrap().magnitude().clone(),
            1u32.into()
        );
        let tri = [(0, 1), (1, 2), (0, 2)];
        assert!(!labeling_condition(&[0, 1, 2], &tri).unwrap());
        assert!(!delta_minor(&[0, 1, 2], &tri).unwrap().is_zero());
        assert!(labeling_condition(&[], &[]).unwrap());
        assert!(labeling_condition(&[0], &[]).is_err());
    }

    #[test]
    fn nonsingular_minor_examples() {
        let path = LoopedGraph::path(3);
        let e = exists_nonsingular_minor(&path, &[1]).unwrap().unwrap();
        assert!(e == [(0, 1)] || e == [(1, 2)]);
        let square = LoopedGraph::cycle(4).unwrap();
        let e = exists_nonsingular_minor(&square, &[0, 2]).unwrap().unwrap();
        assert_eq!(e.len(), 2);
        assert!(e.iter().all(|&(a, b)| (a == 0 || a == 2) != (b == 0 || b == 2)));
        let tree = graph(5, &[(1, 2), (1, 3), (3, 4), (3, 5)], &[]);
        assert_eq!(
            exists_nonsingular_minor(&tree, &[1, 2, 3, 4]).unwrap().unwrap().len(),
            4
        );
        assert_eq!(
            exists_nonsingular_minor(&tree, &[0, 1, 2, 3, 4]),
            Err(Error::NoGuarantee { size: 5, bound: 4 })
        );
        // within the bound, yet the isolated vertex 3 lies on no edge
        let with_isolated = graph(3, &[(1, 2)], &[]);
        assert_eq!(exists_nonsingular_minor(&with_isolated, &[2]).unwrap(), None);
        // the whole triangle lies in V; only its odd cycle helps
        let tri_and_edge = graph(5, &[(1, 2), (2, 3), (1, 3), (4, 5)], &[]);
        let e = exists_nonsingular_minor(&tri_and_edge, &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(e, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn forest_examples() {
        let path = LoopedGraph::path(3);
        let f = rooted_spanning_forests(&path, &[0]).unwrap();
        assert_eq!(
            f,
            vec![ForestCertificate {
                roots: vec![0],
                edges: vec![(0, 1), (1, 2)]
            }]
        );
        assert_eq!(
            rooted_spanning_forests(&LoopedGraph::cycle(4).unwrap(), &[0])
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            rooted_spanning_forests(&LoopedGraph::complete_bipartite(2, 2), &[0])
                .unwrap()
                .len(),
            4
        );
        let full = rooted_spanning_forests(&path, &[0, 1, 2]).unwrap();
        assert_eq!(
            full,
            vec![ForestCertificate {
                roots: vec![0, 1, 2],
                edges: vec![]
            }]
        );
        assert_eq!(full[0].generator(3), Monomial::new(vec![1, 1, 1]));
        assert!(rooted_spanning_forests(&path, &[]).is_err());
    }

    #[test]
    fn forest_generator_examples() {
        let k22 = LoopedGraph::complete_bipartite(2, 2).with_loops([0]).unwrap();
        // x1, x2, y1, y2 are vertices 1..4
        assert_eq!(
            gauss_from_forests(&k22).unwrap(),
            set(4, "x1^3*x3 x1^3*x4 x1^2*x2*x3 x1^2*x2*x4")
        );
        let path = graph(3, &[(1, 2), (2, 3)], &[1, 3]);
        assert_eq!(
            gauss_from_forests(&path).unwrap(),
            set(3, "x1^2*x2 x2*x3^2 x1*x3^2 x1^2*x3")
        );
        let square = graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)], &[1]);
        let expected = MonomialSet::new(4, cycle_generators(4).unwrap()).unwrap();
        assert_eq!(gauss_from_forests(&square).unwrap(), expected);
        assert_eq!(brute(&square), expected);
    }

    #[test]
    fn forest_generator_errors() {
        assert_eq!(
            gauss_from_forests(&LoopedGraph::cycle(3).unwrap().with_loops([0]).unwrap()),
            Err(Error::NotBipartite)
        );
        let two_paths = graph(4, &[(1, 2), (3, 4)], &[1]);
        assert_eq!(
            gauss_from_forests(&two_paths),
            Err(Error::DimensionDeficient { dim: 3, ambient: 4 })
        );
    }

    #[test]
    fn nonbipartite_examples() {
        let tri = LoopedGraph::cycle(3).unwrap();
        let s = nonbipartite_gauss_supports(&tri).unwrap();
        assert_eq!(s, vec![vec![(0, 1), (0, 2), (1, 2)]]);
        assert_eq!(supports_to_generators(3, &s).unwrap(), set(3, "x1*x2*x3"));
        let pendant = graph(4, &[(1, 2), (2, 3), (1, 3), (3, 4)], &[]);
        let s = nonbipartite_gauss_supports(&pendant).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(supports_to_generators(4, &s).unwrap(), set(4, "x1*x2*x3^2"));
        assert_eq!(supports_to_generators(4, &s).unwrap(), brute(&pendant));
        assert_eq!(
            nonbipartite_gauss_supports(&LoopedGraph::cycle(4).unwrap()),
            Err(Error::Bipartite)
        );
    }

    #[test]
    fn nonbipartite_supports_match_brute_force() {
        let graphs = [
            graph(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (2, 5)], &[]),
            graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)], &[]),
            graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3), (2, 4)], &[]),
        ];
        for g in graphs {
            let s = nonbipartite_gauss_supports(&g).unwrap();
            assert_eq!(supports_to_generators(g.d, &s).unwrap(), brute(&g), "{}", g);
        }
    }

    #[test]
    fn tree_counts() {
        assert_eq!(
            spanning_tree_count(&LoopedGraph::complete_bipartite(2, 2)).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            spanning_tree_count(&LoopedGraph::cycle(4).unwrap()).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            spanning_tree_count(&graph(5, &[(1, 2), (1, 3), (3, 4), (3, 5)], &[])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            spanning_tree_count(&graph(4, &[(1, 2), (3, 4)], &[])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(spanning_tree_count(&LoopedGraph::path(1)).unwrap(), BigInt::one());
        for (n, m) in [(2, 3), (3, 3), (2, 4), (3, 4)] {
            let expected = BigInt::from(n).pow(m as u32 - 1) * BigInt::from(m).pow(n as u32 - 1);
            assert_eq!(
                spanning_tree_count(&LoopedGraph::complete_bipartite(n, m)).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn tree_count_matches_forest_enumeration() {
        for g in [
            LoopedGraph::complete_bipartite(2, 3),
            LoopedGraph::cycle(5).unwrap(),
            graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)], &[]),
        ] {
            let trees = rooted_spanning_forests(&g, &[0]).unwrap().len();
            assert_eq!(spanning_tree_count(&g).unwrap(), BigInt::from(trees));
            assert_eq!(forests_by_subsets(&g, &[0]), trees);
        }
    }

    #[test]
    fn lambda_values() {
        let expected = [1u32, 3, 8, 21, 55, 144, 377];
        for (d, &v) in (1..).zip(&expected) {
            assert_eq!(path_lambda(d).unwrap(), BigInt::from(v));
        }
        assert!(path_lambda(0).is_err());
        // explicit sum over all compositions
        for d in 1..=10usize {
            let mut total = 0u64;
            for cuts in 0u32..1 << (d - 1) {
                let mut prod = 1u64;
                let mut run = 1u64;
                for k in 0..d - 1 {
                    if cuts >> k & 1 == 1 {
                        prod *= run;
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                total += prod * run;
            }
            assert_eq!(path_lambda(d).unwrap(), BigInt::from(total));
        }
    }

    #[test]
    fn lambda_counts_path_generators() {
        for d in 1..=5usize {
            let g = LoopedGraph::path(d).with_loops(0..d).unwrap();
            assert_eq!(
                BigInt::from(gauss_from_forests(&g).unwrap().len()),
                path_lambda(d).unwrap()
            );
        }
    }

    #[test]
    fn path_with_two_loops() {
        for d in 3..=6usize {
            for i in 0..d {
                for j in i + 1..d {
                    let g = LoopedGraph::path(d).with_loops([i, j]).unwrap();
                    let gens = gauss_from_forests(&g).unwrap();
                    assert_eq!(gens.len(), j - i + 2);
                    let r = relation_report(&gens).unwrap();
                    assert_eq!((r.dim, r.kernel_rank), (j - i + 1, 1));
                }
            }
        }
    }

    #[test]
    fn cycle_binomials() {
        for d in 3..=7usize {
            let gens = cycle_generators(d).unwrap();
            let g = LoopedGraph::cycle(d).unwrap().with_loops([0]).unwrap();
            assert_eq!(brute(&g), MonomialSet::new(d, gens.clone()).unwrap());
            let log = IntMatrix::from_fn(d, gens.len(), |r, c| i64::from(gens[c].exp(r)));
            let kernel = kernel_lattice(&log);
            assert_eq!(kernel.rank(), 1);
            let f: Vec<BigInt> = cycle_binomial(d).unwrap().into_iter().map(BigInt::from).collect();
            assert!(same_up_to_relabeling(&kernel.rows()[0], &f));
            let dim = log.rank();
            assert_eq!(dim, if d % 2 == 0 { d - 1 } else { d });
        }
        let f = cycle_binomial(4).unwrap();
        assert_eq!(f, vec![-1, 1, 1, -1]);
    }

    #[test]
    fn relabeling_helper() {
        let v = |x: &[i64]| x.iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>();
        assert!(same_up_to_relabeling(&v(&[1, -1, 0]), &v(&[0, -1, 1])));
        assert!(same_up_to_relabeling(&v(&[2, -1, -1]), &v(&[1, 1, -2])));
        assert!(!same_up_to_relabeling(&v(&[2, -1, -1]), &v(&[1, -1, 0])));
    }

    #[test]
    fn k_nm_example() {
        for (n, m) in [(2usize, 2usize), (2, 3), (3, 3)] {
            let g = LoopedGraph::complete_bipartite(n, m).with_loops([0]).unwrap();
            let gens = gauss_from_forests(&g).unwrap();
            assert_eq!(gens, brute(&g));
            let d = n + m;
            let xs: Vec<Vec<usize>> = multisets(0..n, m - 1);
            let ys: Vec<Vec<usize>> = multisets(n..d, n - 1);
            let predicted = MonomialSet::new(
                d,
                xs.iter().flat_map(|a| {
                    ys.iter().map(move |b| {
                        let idx: Vec<usize> = [0, 0]
                            .into_iter()
                            .chain(a.iter().copied())
                            .chain(b.iter().copied())
                            .collect();
                        Monomial::from_indices(d, &idx)
                    })
                }),
            )
            .unwrap();
            assert_eq!(gens, predicted);
        }
    }

    fn multisets(range: core::ops::Range<usize>, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in range.clone() {
            for mut rest in multisets(first..range.end, k - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn canonical_codes_identify_isomorphic_graphs() {
        let a = graph(4, &[(1, 2), (2, 3), (3, 4)], &[]);
        let b = graph(4, &[(2, 4), (4, 1), (1, 3)], &[]);
        let star = graph(4, &[(1, 2), (1, 3), (1, 4)], &[]);
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&star));
    }

    #[test]
    fn connected_bipartite_class_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_bipartite_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 5, 17, 44]);
        assert!(matches!(connected_bipartite_graphs(9), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn scan_small_cases() {
        let rows = conjecture_scan(6).unwrap();
        for r in &rows {
            assert!(r.graph.is_connected() && r.graph.is_bipartite());
            if r.graph.is_even_cycle() {
                assert!(r.is_hypersurface_of_codim_one(), "{}", r.graph);
            }
            if r.graph.edges().len() + 1 == r.graph.vertex_count() {
                // trees have a polynomial ring as Gauss algebra
                assert_eq!(r.kernel_rank, 0);
            }
        }
        let paths = rows
            .iter()
            .filter(|r| r.graph.degree(0) <= 2 && r.graph.edges().len() + 1 == r.graph.vertex_count());
        assert!(paths.clone().count() > 0);
        assert!(paths.clone().all(|r| !r.is_hypersurface_of_codim_one()));
        assert!(matches!(conjecture_scan(9), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn odd_cycle_scan_row() {
        let g = LoopedGraph::cycle(5).unwrap().with_loops([0]).unwrap();
        let gens = brute(&g);
        let r = relation_report(&gens).unwrap();
        assert_eq!((r.dim, r.kernel_rank), (5, 1));
        assert!(scan_instance(&g).is_ok());
    }

    fn small_graph() -> impl Strategy<Value = LoopedGraph> {
        (2usize..=6).prop_flat_map(|d| {
            let pairs: Vec<Edge> = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect();
            let n = pairs.len();
            (
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec(any::<bool>(), d),
            )
                .prop_map(move |(pick, loops)| {
                    let edges = pairs.iter().zip(&pick).filter(|(_, &p)| p).map(|(&e, _)| e);
                    let ls = loops.iter().enumerate().filter(|(_, &l)| l).map(|(v, _)| v);
                    LoopedGraph::new(d, edges, ls).unwrap()
                })
        })
    }

    /// Graphs with as many edges as vertices.
    fn square_graph() -> impl Strategy<Value = LoopedGraph> {
        (3usize..=7).prop_flat_map(|d| {
            let pairs: Vec<Edge> = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect();
            prop::sample::subsequence(pairs, d).prop_map(move |edges| LoopedGraph::simple(d, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn forest_search_matches_subset_filter(g in small_graph(), root_mask in 1u32..64) {
            let roots: Vec<usize> = (0..g.d).filter(|&v| root_mask >> v & 1 == 1).collect();
            prop_assume!(!roots.is_empty());
            prop_assert_eq!(rooted_spanning_forests(&g, &roots).unwrap().len(), forests_by_subsets(&g, &roots));
        }

        #[test]
        fn labeling_implies_nonzero_minor(g in small_graph(), vmask in 0u32..64, emask in 0u32..1 << 15) {
            let vs: Vec<usize> = (0..g.d).filter(|&v| vmask >> v & 1 == 1).collect();
            let es: Vec<Edge> = g.edges().iter().enumerate().filter(|(k, _)| emask >> k & 1 == 1).map(|(_, &e)| e).take(vs.len()).collect();
            prop_assume!(es.len() == vs.len());
            let lab = labeling_condition(&vs, &es).unwrap();
            let nonzero = !delta_minor(&vs, &es).unwrap().is_zero();
            if lab {
                prop_assert!(nonzero);
            }
            if g.is_bipartite() {
                prop_assert_eq!(lab, nonzero);
            }
        }

        #[test]
        fn dimension_criterion(g in small_graph()) {
            prop_assume!(g.is_bipartite() && (!g.edges().is_empty() || !g.loops().is_empty()));
            let labels = g.components();
            let comps = labels.iter().copied().max().unwrap() + 1;
            let every = (0..comps).all(|c| g.loops().iter().any(|&v| labels[v] == c));
            prop_assert_eq!(algebra_dimension(&edge_ring(&g).unwrap()) == g.d, every);
        }

        #[test]
        fn forests_give_the_gauss_set(g in small_graph()) {
            prop_assume!(g.is_bipartite() && !g.loops().is_empty());
            let labels = g.components();
            let comps = labels.iter().copied().max().unwrap() + 1;
            prop_assume!((0..comps).all(|c| g.loops().iter().any(|&v| labels[v] == c)));
            prop_assert_eq!(gauss_from_forests(&g).unwrap(), brute(&g));
        }

        #[test]
        fn gks_equivalence(g in square_graph()) {
            let det = g.incidence_matrix().det_exact().unwrap();
            prop_assert_eq!(!det.is_zero(), odd_cycle_every_component(&g));
        }

        #[test]
        fn nonsingular_minor_found_within_bound(g in small_graph(), vmask in 0u32..64) {
            let vs: Vec<usize> = (0..g.d).filter(|&v| vmask >> v & 1 == 1).collect();
            prop_assume!(vs.len() <= g.d - g.component_count());
            let exhaustive = Combinations::new(g.edges().len(), vs.len()).any(|s| {
                let es: Vec<Edge> = s.iter().map(|&k| g.edges()[k]).collect();
                !delta_minor(&vs, &es).unwrap().is_zero()
            });
            match exists_nonsingular_minor(&g, &vs).unwrap() {
                Some(e) => {
                    prop_assert_eq!(e.len(), vs.len());
                    prop_assert!(!delta_minor(&vs, &e).unwrap().is_zero());
                }
                None => prop_assert!(!exhaustive),
            }
            let labels = g.components();
            if (0..g.component_count()).all(|c| (0..g.d).any(|v| labels[v] == c && !vs.contains(&v))) {
                prop_assert!(exhaustive);
            }
        }
    }
}
