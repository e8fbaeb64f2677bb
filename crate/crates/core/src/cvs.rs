//! Labeled trees to quadrangulations.
//!
//! Every corner of a labeled tree is joined to the next corner, clockwise,
//! whose label is one smaller; corners with the smallest label are joined to
//! an extra vertex `∂`. The tree vertices keep their indices and `∂` gets index
//! `n + 1`. Edge `i` is the edge emitted by corner `i`.

use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::map::{EdgeEnd, PlanarMapGraph};
use crate::rmq::SparseTable;
use crate::tree::{sample_plane_tree, attach_labels, shortest_corner_span, LabelVariant, LabeledTree};

/// Cyclic clockwise sequence of corners with their labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerSequence {
    pub vertices: Vec<usize>,
    pub labels: Vec<i64>,
}

impl CornerSequence {
    pub fn of(t: &LabeledTree) -> Self {
        Self {
            vertices: t.tree().corners().to_vec(),
            labels: t.corner_labels(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Successor of every corner: the next corner clockwise with label one
    /// smaller, or `None` for corners carrying the minimal label.
    ///
    /// One backward sweep over two laps of the cycle, remembering for each
    /// label the nearest later position where it occurs.
    pub fn successors(&self) -> Vec<Option<usize>> {
        let len = self.len();
        let min = *self.labels.iter().min().expect("nonempty corner sequence");
        let max = *self.labels.iter().max().unwrap();
        let slot = |l: i64| (l - min) as usize;
        let mut next = vec![usize::MAX; slot(max) + 1];
        let mut succ = vec![None; len];
        for p in (0..2 * len).rev() {
            let i = p % len;
            let l = self.labels[i];
            if p < len && l > min {
                let q = next[slot(l - 1)];
                debug_assert!(q != usize::MAX, "labels along the contour are contiguous");
                succ[i] = Some(q % len);
            }
            next[slot(l)] = p;
        }
        succ
    }
}

/// How the root edge of the encoded map is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rooting {
    /// Edge 0, from `∂` to the tree root (well-labeled trees).
    FromBoundary,
    /// Edge 0, oriented away from the emitting corner unless `flip`.
    Corner0 { flip: bool },
}

fn encode_with(t: &LabeledTree, rooting: Rooting) -> Result<PlanarMapGraph> {
    let n = t.n_edges();
    if n == 0 {
        return Err(invalid("encoding needs a tree with at least one edge"));
    }
    let cs = CornerSequence::of(t);
    let len = cs.len();
    let succ = cs.successors();
    let boundary = n + 1;
    let edges: Vec<(usize, usize)> = (0..len)
        .map(|i| (cs.vertices[i], succ[i].map_or(boundary, |j| cs.vertices[j])))
        .collect();

    let mut incoming = vec![Vec::new(); len];
    for (j, s) in succ.iter().enumerate() {
        if let Some(i) = *s {
            incoming[i].push(j);
        }
    }
    let mut rotations = vec![Vec::new(); n + 2];
    for (i, inc) in incoming.iter_mut().enumerate() {
        inc.sort_by_key(|&j| (i + len - j) % len);
        let rot = &mut rotations[cs.vertices[i]];
        rot.extend(inc.iter().map(|&j| EdgeEnd::head(j)));
        rot.push(EdgeEnd::tail(i));
    }
    rotations[boundary] = (0..len)
        .rev()
        .filter(|&i| succ[i].is_none())
        .map(EdgeEnd::head)
        .collect();

    let root = match rooting {
        Rooting::FromBoundary => {
            if succ[0].is_some() {
                return Err(invalid("the root corner must carry the minimal label"));
            }
            EdgeEnd::head(0)
        }
        Rooting::Corner0 { flip } => EdgeEnd { edge: 0, head: flip },
    };
    let map = PlanarMapGraph::from_rotations(edges, rotations, root, Some(boundary), Some(n))?;
    debug_assert!(map.face_degrees().iter().all(|&d| d == 4));
    Ok(map)
}

/// Quadrangulation of a well-labeled tree, rooted at the edge from `∂` to the
/// tree root.
pub fn encode(t: &LabeledTree) -> Result<PlanarMapGraph> {
    if t.variant() != LabelVariant::WellLabeled {
        return Err(Error::InvalidLabels("encode expects a well-labeled tree".into()));
    }
    encode_with(t, Rooting::FromBoundary)
}

/// Pointed quadrangulation of a tree with arbitrary labels: labels are read
/// relative to their minimum and the root is edge 0, oriented from the root
/// corner to its successor, or backwards when `flip` is set.
pub fn encode_pointed(t: &LabeledTree, flip: bool) -> Result<PlanarMapGraph> {
    encode_with(t, Rooting::Corner0 { flip })
}

/// A sampled quadrangulation together with the labeled tree that encodes it.
#[derive(Clone, Debug)]
pub struct SampledQuadrangulation {
    pub tree: LabeledTree,
    pub map: PlanarMapGraph,
}

/// Uniform rooted quadrangulation with `n` faces.
///
/// A uniform plane tree with uniform free labels, encoded with a fair-coin
/// root orientation, is uniform over rooted and pointed quadrangulations.
/// Every rooted quadrangulation has `n + 2` vertices to point at, so
/// forgetting `∂` leaves the uniform law on rooted quadrangulations.
pub fn sample_quadrangulation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<SampledQuadrangulation> {
    let tree = sample_plane_tree(n, rng)?;
    let tree = attach_labels(tree, LabelVariant::FreeRootZero, rng)?;
    let flip = rng.random::<bool>();
    let map = encode_pointed(&tree, flip)?;
    Ok(SampledQuadrangulation { tree, map })
}

/// Outcome of [`verify_distance_identity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityCheck {
    Holds,
    Fails { vertex: usize, expected: i64, distance: u32 },
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Holds)
    }
}

/// Check `d(∂, v) = ℓ_v - min ℓ + 1` for every tree vertex (for well-labeled
/// trees that is `ℓ_v`).
pub fn verify_distance_identity(t: &LabeledTree, q: &PlanarMapGraph) -> Result<IdentityCheck> {
    let boundary = q
        .pointed()
        .ok_or_else(|| invalid("map has no distinguished vertex"))?;
    if q.n_vertices() != t.tree().n_vertices() + 1 {
        return Err(invalid("map and tree sizes do not match"));
    }
    let d = q.bfs_distances(boundary);
    let shift = 1 - t.min_label();
    let vertex_ids = (0..boundary).chain(boundary + 1..q.n_vertices());
    for (v, mv) in (0..t.tree().n_vertices()).zip(vertex_ids) {
        let expected = t.label(v) + shift;
        if i64::from(d[mv]) != expected {
            return Ok(IdentityCheck::Fails {
                vertex: v,
                expected,
                distance: d[mv],
            });
        }
    }
    Ok(IdentityCheck::Holds)
}

/// Precomputed interval minima for evaluating the label bound on many pairs.
pub struct DistanceBound<'a> {
    t: &'a LabeledTree,
    positions: Vec<Vec<usize>>,
    doubled: SparseTable<i64>,
}

impl<'a> DistanceBound<'a> {
    pub fn new(t: &'a LabeledTree) -> Self {
        let labels = t.corner_labels();
        let doubled: Vec<i64> = labels.iter().chain(&labels).copied().collect();
        Self {
            t,
            positions: t.tree().corner_positions(),
            doubled: SparseTable::new(&doubled),
        }
    }

    fn interval_min(&self, v: usize, w: usize) -> i64 {
        let len = 2 * self.t.n_edges();
        let (a, b) = shortest_corner_span(&self.positions[v], &self.positions[w], len);
        self.doubled.min(a, b)
    }

    /// `ℓ_v + ℓ_w - 2 max(min_[v,w] ℓ, min_[w,v] ℓ) + 2`; `2` when `v == w`.
    pub fn bound(&self, v: usize, w: usize) -> Result<u64> {
        let nv = self.t.tree().n_vertices();
        for x in [v, w] {
            if x >= nv {
                return Err(Error::VertexOutOfRange { vertex: x, count: nv });
            }
        }
        if v == w {
            return Ok(2);
        }
        let m = self.interval_min(v, w).max(self.interval_min(w, v));
        Ok((self.t.label(v) + self.t.label(w) - 2 * m + 2) as u64)
    }
}

/// Upper bound on `d(v, w)` in the encoded map from the labels alone.
pub fn distance_upper_bound(t: &LabeledTree, v: usize, w: usize) -> Result<u64> {
    DistanceBound::new(t).bound(v, w)
}

/// Vertices visited by following successors from `corner` down to `∂`.
/// The path has `ℓ - min ℓ + 1` edges and is a geodesic of the encoded map.
pub fn discrete_geodesic_to_root(t: &LabeledTree, corner: usize) -> Result<Vec<usize>> {
    let cs = CornerSequence::of(t);
    if corner >= cs.len() {
        return Err(invalid(format!("corner {corner} out of range")));
    }
    let succ = cs.successors();
    let mut path = vec![cs.vertices[corner]];
    let mut c = corner;
    while let Some(next) = succ[c] {
        path.push(cs.vertices[next]);
        c = next;
    }
    path.push(t.n_edges() + 1);
    Ok(path)
}
