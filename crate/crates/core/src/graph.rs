//! Simple undirected graphs as symmetric adjacency bit-matrices, plus the
//! neighbourhood operators every bound is built on.
//!
//! Rows are stored as packed `u64` words so that sampled graphs of a few
//! hundred vertices can still be carried around (for spectra and file IO).
//! Everything that works with vertex *subsets* uses [`VertexSet`], a single
//! machine word, and therefore requires `n <= 64`; see [`Graph::is_small`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest graph any constructor accepts.
pub const MAX_VERTICES: usize = 4096;
/// Largest graph on which subset operations (one-word vertex sets) are defined.
pub const SMALL_LIMIT: usize = 64;

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of `0..n` for `n <= 64`, one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Total order on equal-sized sets matching lexicographic comparison of
    /// their ascending member lists: the set owning the smallest element of
    /// the symmetric difference comes first.
    pub fn lex_less(self, other: Self) -> bool {
        let diff = self.0 ^ other.0;
        diff != 0 && self.0 & diff & diff.wrapping_neg() != 0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    pub min_degree: usize,
    pub max_degree: usize,
    pub universal_count: usize,
    pub is_regular: bool,
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount {
                n,
                max: MAX_VERTICES,
            });
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.set(u, v);
        self.set(v, u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.rows[u * self.words + v / 64] &= !(1u64 << (v % 64));
            self.rows[v * self.words + u / 64] &= !(1u64 << (u % 64));
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Whether subset operations are available (`n <= 64`).
    #[inline]
    pub fn is_small(&self) -> bool {
        self.words == 1
    }

    pub(crate) fn require_small(&self) -> Result<()> {
        if self.is_small() {
            Ok(())
        } else {
            Err(Error::VertexCount {
                n: self.n,
                max: SMALL_LIMIT,
            })
        }
    }

    #[inline]
    fn row_words(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbourhood of `v` as a bitmask.
    ///
    /// # Panics
    /// If the graph has more than 64 vertices.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        assert!(self.is_small(), "row() requires n <= 64");
        self.rows[v]
    }

    #[inline]
    pub fn neighbors_set(&self, v: usize) -> VertexSet {
        VertexSet(self.row(v))
    }

    /// All vertices, for `n <= 64`.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.rows[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row_words(v)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| Members(w).map(move |b| i * 64 + b))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Number of vertex pairs, `n(n-1)/2`.
    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn complement(&self) -> Graph {
        let mut out = self.clone();
        for v in 0..self.n {
            let row = &mut out.rows[v * self.words..(v + 1) * self.words];
            for (i, w) in row.iter_mut().enumerate() {
                let valid = low_mask(self.n.saturating_sub(i * 64));
                *w = !*w & valid;
            }
            row[v / 64] &= !(1u64 << (v % 64));
        }
        out
    }

    /// `Γ(X)`: vertices outside `x` with at least one neighbour in `x`.
    pub fn vertex_boundary(&self, x: VertexSet) -> VertexSet {
        self.open_neighborhood(x).difference(x)
    }

    /// `Γs(X)`: vertices outside `x` adjacent to every member of `x`.
    /// Undefined (and rejected) for empty `x`.
    pub fn strong_vertex_boundary(&self, x: VertexSet) -> Result<VertexSet> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        let common = x.iter().fold(low_mask(self.n), |acc, v| acc & self.row(v));
        Ok(VertexSet(common).difference(x))
    }

    /// `N'(X)`: vertices with at least one neighbour in `x` (may meet `x`).
    pub fn open_neighborhood(&self, x: VertexSet) -> VertexSet {
        VertexSet(x.iter().fold(0, |acc, v| acc | self.row(v)))
    }

    /// `N[X] = X ∪ N'(X)`.
    pub fn closed_neighborhood(&self, x: VertexSet) -> VertexSet {
        self.open_neighborhood(x).union(x)
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let mut min_degree = usize::MAX;
        let mut max_degree = 0;
        let mut universal_count = 0;
        for v in 0..self.n {
            let d = self.degree(v);
            min_degree = min_degree.min(d);
            max_degree = max_degree.max(d);
            if d == self.n - 1 {
                universal_count += 1;
            }
        }
        DegreeSummary {
            min_degree,
            max_degree,
            universal_count,
            is_regular: min_degree == max_degree,
        }
    }

    /// Common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let s = self.degree_summary();
        s.is_regular.then_some(s.min_degree)
    }

    /// Universal vertices (degree `n-1`), for `n <= 64`.
    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.degree(v) == self.n - 1)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.pair_count()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Subgraph induced on `x`, relabelled in ascending vertex order.
    pub fn induced_subgraph(&self, x: VertexSet) -> Result<Graph> {
        self.require_small()?;
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        let members: Vec<usize> = x.iter().collect();
        let mut g = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j);
                    g.set(j, i);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
            g.set(perm[v], perm[u]);
        }
        g
    }

    /// Two-colouring with the smallest vertex of every component on side
    /// `false`, or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// Dense row-major adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut m = vec![0.0; self.n * self.n];
        for (u, v) in self.edges() {
            m[u * self.n + v] = 1.0;
            m[v * self.n + u] = 1.0;
        }
        m
    }
}

/// Bipartite graph with parts `A = 0..n_a` and `B = n_a..n_a+n_b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BipartiteGraph {
    n_a: usize,
    n_b: usize,
    /// `biadj[a]` lists the B-neighbours of `a` (B-local indices).
    biadj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// `edges` are `(a, b)` with `a < n_a`, `b < n_b` (B-local index).
    pub fn from_edges<I>(n_a: usize, n_b: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n_a == 0 || n_b == 0 || n_a + n_b > MAX_VERTICES {
            return Err(Error::VertexCount {
                n: n_a + n_b,
                max: MAX_VERTICES,
            });
        }
        let mut biadj = vec![Vec::new(); n_a];
        for (a, b) in edges {
            if a >= n_a {
                return Err(Error::VertexOutOfRange { vertex: a, n: n_a });
            }
            if b >= n_b {
                return Err(Error::VertexOutOfRange { vertex: b, n: n_b });
            }
            biadj[a].push(b);
        }
        for row in &mut biadj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(BipartiteGraph { n_a, n_b, biadj })
    }

    /// Splits `g` along `in_b` (true = part B). Fails if an edge lies inside a part.
    pub fn from_graph(g: &Graph, in_b: &[bool]) -> Result<Self> {
        let a_idx: Vec<usize> = (0..g.order()).filter(|&v| !in_b[v]).collect();
        let b_idx: Vec<usize> = (0..g.order()).filter(|&v| in_b[v]).collect();
        let mut local = vec![0; g.order()];
        for (i, &v) in a_idx.iter().enumerate() {
            local[v] = i;
        }
        for (i, &v) in b_idx.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            match (in_b[u], in_b[v]) {
                (false, true) => edges.push((local[u], local[v])),
                (true, false) => edges.push((local[v], local[u])),
                _ => return Err(Error::NotApplicable(crate::Reason::NotBipartite)),
            }
        }
        BipartiteGraph::from_edges(a_idx.len(), b_idx.len(), edges)
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    pub fn is_balanced(&self) -> bool {
        self.n_a == self.n_b
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.biadj
            .get(a)
            .is_some_and(|r| r.binary_search(&b).is_ok())
    }

    pub fn a_neighbors(&self, a: usize) -> &[usize] {
        &self.biadj[a]
    }

    pub fn degree_a(&self, a: usize) -> usize {
        self.biadj[a].len()
    }

    pub fn degrees_b(&self) -> Vec<usize> {
        let mut d = vec![0; self.n_b];
        for row in &self.biadj {
            for &b in row {
                d[b] += 1;
            }
        }
        d
    }

    pub fn edge_count(&self) -> usize {
        self.biadj.iter().map(Vec::len).sum()
    }

    /// Common degree when every vertex on both sides has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree_a(0);
        let all_a = (0..self.n_a).all(|a| self.degree_a(a) == k);
        let all_b = self.degrees_b().iter().all(|&d| d == k);
        (all_a && all_b).then_some(k)
    }

    /// The same graph on `n_a + n_b` vertices.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n_a + self.n_b).expect("size checked at construction");
        for (a, row) in self.biadj.iter().enumerate() {
            for &b in row {
                g.add_edge(a, self.n_a + b).expect("indices in range");
            }
        }
        g
    }

    /// Row-major `n_a × n_b` 0/1 incidence matrix `M`.
    pub fn incidence_matrix(&self) -> Vec<f64> {
        let mut m = vec![0.0; self.n_a * self.n_b];
        for (a, row) in self.biadj.iter().enumerate() {
            for &b in row {
                m[a * self.n_b + b] = 1.0;
            }
        }
        m
    }
}
