//! Finite abstract simplicial complexes on the vertex set `{1, ..., m}`.
//!
//! A [`SimplicialComplex`] stores its whole face poset explicitly, empty
//! simplex included. Faces are [`VertexSet`] bitmasks; all public
//! constructors take and report 1-based vertex labels.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 63;

/// A subset of `{1, ..., m}`, stored as a bitmask where bit `i` is vertex `i + 1`.
///
/// Ordered by cardinality first and then lexicographically on the sorted
/// vertex lists, which is the iteration order of [`SimplicialComplex::simplices`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_VERTICES);
        VertexSet((1u64 << m) - 1)
    }

    pub fn singleton(vertex: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&vertex));
        VertexSet(1u64 << (vertex - 1))
    }

    /// Builds a set from 1-based labels, checking each lies in `{1, ..., m}`.
    pub fn from_vertices(m: usize, vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > m {
                return Err(Error::InvalidVertex { vertex: v, m });
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, vertex: usize) -> bool {
        (1..=64).contains(&vertex) && self.0 >> (vertex - 1) & 1 == 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Shifts every label up by `offset`.
    pub fn shifted(self, offset: usize) -> VertexSet {
        VertexSet(self.0 << offset)
    }

    /// 1-based labels in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let low = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(low + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, the empty set included.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == 0 { None } else { Some((current - 1) & full) };
            Some(VertexSet(current))
        })
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // Equal size: the set holding the smallest element of the
            // symmetric difference comes first lexicographically.
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A finite simplicial complex `L` on `{1, ..., m}` together with its face
/// poset `S(L)`, empty simplex included.
///
/// Every singleton is a face, except for complexes built by
/// [`SimplicialComplex::empty_only`] (and joins involving them), which are
/// flagged as relaxed.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    m: usize,
    simplices: Vec<VertexSet>,
    members: HashSet<VertexSet>,
    relaxed: bool,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

fn check_vertex_count(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::NoVertices)
    } else if m > MAX_VERTICES {
        Err(Error::TooManyVertices(m))
    } else {
        Ok(())
    }
}

impl SimplicialComplex {
    fn from_members(m: usize, members: HashSet<VertexSet>, relaxed: bool) -> Result<Self> {
        if !relaxed {
            if let Some(v) = (1..=m).find(|&v| !members.contains(&VertexSet::singleton(v))) {
                return Err(Error::GhostVertex(v));
            }
        }
        let mut simplices: Vec<VertexSet> = members.iter().copied().collect();
        simplices.sort_unstable();
        Ok(SimplicialComplex { m, simplices, members, relaxed })
    }

    /// Downward closure of `facets` on `{1, ..., m}`.
    pub fn from_facets<F: AsRef<[usize]>>(m: usize, facets: impl IntoIterator<Item = F>) -> Result<Self> {
        check_vertex_count(m)?;
        let mut masks =
            facets.into_iter().map(|f| VertexSet::from_vertices(m, f.as_ref())).collect::<Result<Vec<_>>>()?;
        // Large facets first so that faces of already-closed facets are skipped.
        masks.sort_unstable_by(|a, b| b.cmp(a));
        let mut members = HashSet::new();
        members.insert(VertexSet::EMPTY);
        for facet in masks {
            if members.contains(&facet) {
                continue;
            }
            members.extend(facet.subsets());
        }
        Self::from_members(m, members, false)
    }

    /// Builds a complex from an explicit face list, checking downward closure.
    /// The empty simplex is added if missing.
    pub fn from_simplices<F: AsRef<[usize]>>(m: usize, faces: impl IntoIterator<Item = F>) -> Result<Option<Self>> {
        check_vertex_count(m)?;
        let mut members = HashSet::new();
        members.insert(VertexSet::EMPTY);
        for face in faces {
            members.insert(VertexSet::from_vertices(m, face.as_ref())?);
        }
        let closed = members.iter().all(|s| s.iter().all(|v| members.contains(&s.difference(VertexSet::singleton(v)))));
        if !closed {
            return Ok(None);
        }
        Self::from_members(m, members, false).map(Some)
    }

    /// The flag complex of a graph: every clique, the empty one included.
    pub fn clique_complex(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_vertex_count(m)?;
        let mut adjacency = vec![0u64; m];
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > m {
                    return Err(Error::InvalidVertex { vertex: v, m });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (lo, hi) = (a.min(b), a.max(b));
            if adjacency[lo - 1] >> (hi - 1) & 1 == 1 {
                return Err(Error::DuplicateEdge(lo, hi));
            }
            adjacency[lo - 1] |= 1 << (hi - 1);
            adjacency[hi - 1] |= 1 << (lo - 1);
        }
        let mut members = HashSet::new();
        collect_cliques(&adjacency, 0, VertexSet::full(m).bits(), &mut |c| {
            members.insert(VertexSet(c));
        });
        Self::from_members(m, members, false)
    }

    /// The complex whose only face is the empty simplex, on vertex set `{1, ..., m}`.
    ///
    /// This is the one constructor that admits vertices spanning no simplex.
    pub fn empty_only(m: usize) -> Result<Self> {
        check_vertex_count(m)?;
        Self::from_members(m, HashSet::from([VertexSet::EMPTY]), true)
    }

    /// The full simplex on `{1, ..., m}`.
    pub fn simplex(m: usize) -> Result<Self> {
        Self::from_facets(m, [(1..=m).collect::<Vec<_>>()])
    }

    /// `m` isolated vertices.
    pub fn discrete(m: usize) -> Result<Self> {
        Self::from_facets(m, (1..=m).map(|v| [v]))
    }

    /// The `m`-gon, `m >= 3`.
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: m });
        }
        Self::from_facets(m, (1..=m).map(|v| [v, v % m + 1]))
    }

    /// Boundary of the `n`-dimensional cross-polytope: the join of `n` copies
    /// of `S^0`, with antipodal pairs `{2i - 1, 2i}`.
    pub fn cross_polytope_boundary(n: usize) -> Result<Self> {
        let m = 2 * n;
        let edges: Vec<(usize, usize)> = (1..=m)
            .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
            .filter(|&(a, b)| !(a % 2 == 1 && b == a + 1))
            .collect();
        Self::clique_complex(m, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    /// Whether this complex may have vertices that span no simplex.
    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }

    /// `dim L`; `-1` when the empty simplex is the only face.
    pub fn dimension(&self) -> isize {
        self.top_degree() as isize - 1
    }

    /// `d = dim L + 1`, the size of the largest face.
    pub fn top_degree(&self) -> usize {
        self.simplices.last().map_or(0, |s| s.len())
    }

    /// Faces in canonical order: by cardinality, then lexicographically.
    pub fn simplices(&self) -> &[VertexSet] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.members.contains(&face)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.m)
    }

    /// `counts[k]` is the number of faces with `k` vertices; `counts[0] = 1`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.top_degree() + 1];
        for s in &self.simplices {
            counts[s.len()] += 1;
        }
        counts
    }

    /// Edges of the 1-skeleton as 1-based pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.simplices
            .iter()
            .filter(|s| s.len() == 2)
            .map(|s| {
                let v = s.to_vec();
                (v[0], v[1])
            })
            .collect()
    }

    /// Maximal faces, in canonical order.
    pub fn facets(&self) -> Vec<VertexSet> {
        let full = self.vertex_set();
        self.simplices
            .iter()
            .copied()
            .filter(|&s| full.difference(s).iter().all(|v| !self.contains(s.union(VertexSet::singleton(v)))))
            .collect()
    }

    /// True iff every set of pairwise adjacent vertices spans a face.
    pub fn is_flag(&self) -> bool {
        let mut adjacency = vec![0u64; self.m];
        for (a, b) in self.edges() {
            adjacency[a - 1] |= 1 << (b - 1);
            adjacency[b - 1] |= 1 << (a - 1);
        }
        // The clique complex of the 1-skeleton contains L, so the two agree
        // exactly when every clique is already a face.
        let mut flag = true;
        collect_cliques(&adjacency, 0, self.vertex_set().bits(), &mut |c| {
            flag &= self.members.contains(&VertexSet(c));
        });
        flag
    }

    /// The join `L1 * L2`; vertices of `other` are relabelled `m1 + 1, ..., m1 + m2`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let m = self.m + other.m;
        check_vertex_count(m)?;
        let mut members = HashSet::with_capacity(self.len() * other.len());
        for &a in &self.simplices {
            for &b in &other.simplices {
                members.insert(a.union(b.shifted(self.m)));
            }
        }
        Self::from_members(m, members, self.relaxed || other.relaxed)
    }
}

/// Calls `visit` on every clique extending `clique` by vertices of `candidates`.
fn collect_cliques(adjacency: &[u64], clique: u64, candidates: u64, visit: &mut impl FnMut(u64)) {
    visit(clique);
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // Only extend by higher-numbered vertices so each clique is seen once.
        collect_cliques(adjacency, clique | 1 << v, rest & adjacency[v], visit);
    }
}
