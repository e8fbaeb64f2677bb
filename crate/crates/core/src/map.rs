//! Planar map graphs and their metric statistics.
//!
//! A [`PlanarMapGraph`] stores its half-edges in a flat CSR layout: the
//! half-edges leaving vertex `v` occupy `offsets[v]..offsets[v + 1]` and are
//! listed in clockwise rotation order. Each half-edge knows its twin and its
//! edge id, which is enough to trace faces and compute rooted canonical forms.

use std::collections::VecDeque;
use std::io::{BufRead, Write};

use rand::Rng;

use crate::error::{invalid, Error, Result};

/// `c_4 = (9/8)^{1/4}`, the distance normalisation for quadrangulations.
pub fn c4() -> f64 {
    (9.0f64 / 8.0).powf(0.25)
}

pub const UNREACHED: u32 = u32::MAX;

/// One end of an edge: the tail end (`head == false`) or the head end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeEnd {
    pub edge: usize,
    pub head: bool,
}

impl EdgeEnd {
    pub fn tail(edge: usize) -> Self {
        Self { edge, head: false }
    }

    pub fn head(edge: usize) -> Self {
        Self { edge, head: true }
    }
}

/// Connected multigraph with a rotation system, an oriented root edge and an
/// optional distinguished vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarMapGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    twin: Vec<u32>,
    edge_of: Vec<u32>,
    owner: Vec<u32>,
    edges: Vec<(u32, u32)>,
    root: usize,
    pointed: Option<usize>,
    faces: Option<usize>,
}

impl PlanarMapGraph {
    /// Build from explicit rotations: `rotations[v]` lists, clockwise, the
    /// edge ends incident to `v`. `root` is the edge end at the root vertex.
    pub fn from_rotations(
        edges: Vec<(usize, usize)>,
        rotations: Vec<Vec<EdgeEnd>>,
        root: EdgeEnd,
        pointed: Option<usize>,
        faces: Option<usize>,
    ) -> Result<Self> {
        let n = rotations.len();
        let m = edges.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut half_of_end = vec![[usize::MAX; 2]; m];
        let mut targets = Vec::with_capacity(2 * m);
        let mut edge_of = Vec::with_capacity(2 * m);
        let mut owner = Vec::with_capacity(2 * m);
        offsets.push(0);
        for (v, rot) in rotations.iter().enumerate() {
            for end in rot {
                let &(a, b) = edges
                    .get(end.edge)
                    .ok_or_else(|| invalid(format!("edge {} out of range", end.edge)))?;
                let (here, there) = if end.head { (b, a) } else { (a, b) };
                if here != v {
                    return Err(invalid(format!(
                        "edge end {:?} listed at vertex {v} but belongs to {here}",
                        end
                    )));
                }
                let slot = &mut half_of_end[end.edge][usize::from(end.head)];
                if *slot != usize::MAX {
                    return Err(invalid(format!("edge end {:?} listed twice", end)));
                }
                *slot = targets.len();
                targets.push(there as u32);
                edge_of.push(end.edge as u32);
                owner.push(v as u32);
            }
            offsets.push(targets.len());
        }
        if targets.len() != 2 * m {
            return Err(invalid("every edge end must appear in exactly one rotation"));
        }
        let mut twin = vec![0u32; 2 * m];
        for ends in &half_of_end {
            twin[ends[0]] = ends[1] as u32;
            twin[ends[1]] = ends[0] as u32;
        }
        let root_half = half_of_end
            .get(root.edge)
            .map(|e| e[usize::from(root.head)])
            .ok_or_else(|| invalid("root edge out of range"))?;
        if pointed.is_some_and(|p| p >= n) {
            return Err(invalid("distinguished vertex out of range"));
        }
        let map = Self {
            offsets,
            targets,
            twin,
            edge_of,
            owner,
            edges: edges.iter().map(|&(a, b)| (a as u32, b as u32)).collect(),
            root: root_half,
            pointed,
            faces,
        };
        map.check_connected()?;
        if let Some(f) = faces {
            if n + f != m + 2 {
                return Err(Error::ContractViolation(format!(
                    "Euler relation fails: V={n} E={m} F={f}"
                )));
            }
        }
        Ok(map)
    }

    /// Build from a plain edge list; each vertex's rotation follows edge order.
    /// The root is edge `root_edge` oriented from its first to its second endpoint.
    pub fn from_edges(n_vertices: usize, edges: Vec<(usize, usize)>, root_edge: usize) -> Result<Self> {
        let mut rotations = vec![Vec::new(); n_vertices];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= n_vertices || b >= n_vertices {
                return Err(invalid(format!("edge {i} = ({a}, {b}) out of range")));
            }
            rotations[a].push(EdgeEnd::tail(i));
            rotations[b].push(EdgeEnd::head(i));
        }
        if edges.is_empty() {
            if n_vertices != 1 {
                return Err(invalid("edgeless map must have exactly one vertex"));
            }
            return Ok(Self {
                offsets: vec![0, 0],
                targets: vec![],
                twin: vec![],
                edge_of: vec![],
                owner: vec![],
                edges: vec![],
                root: usize::MAX,
                pointed: None,
                faces: None,
            });
        }
        Self::from_rotations(edges, rotations, EdgeEnd::tail(root_edge), None, None)
    }

    fn check_connected(&self) -> Result<()> {
        let start = self.root_vertex();
        let d = self.bfs_distances(start);
        if d.contains(&UNREACHED) {
            return Err(invalid("map graph is not connected"));
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Face count recorded at construction, if any.
    pub fn faces(&self) -> Option<usize> {
        self.faces
    }

    /// Distinguished vertex (the extra vertex of the tree encoding).
    pub fn pointed(&self) -> Option<usize> {
        self.pointed
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(a, b)| (a as usize, b as usize))
    }

    /// Neighbours of `v` in clockwise rotation order (with multiplicity).
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn root_vertex(&self) -> usize {
        if self.root == usize::MAX {
            0
        } else {
            self.owner[self.root] as usize
        }
    }

    /// Oriented root edge `(tail, head)`.
    pub fn root_edge(&self) -> Option<(usize, usize)> {
        (self.root != usize::MAX)
            .then(|| (self.owner[self.root] as usize, self.targets[self.root] as usize))
    }

    /// Is there an edge between `u` and `v`?
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).iter().any(|&w| w as usize == v)
    }

    fn next_in_rotation(&self, h: usize) -> usize {
        let v = self.owner[h] as usize;
        if h + 1 == self.offsets[v + 1] {
            self.offsets[v]
        } else {
            h + 1
        }
    }

    /// Degrees of the faces traced from the rotation system.
    pub fn face_degrees(&self) -> Vec<usize> {
        let mut seen = vec![false; self.targets.len()];
        let mut out = Vec::new();
        for start in 0..self.targets.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                len += 1;
                h = self.next_in_rotation(self.twin[h] as usize);
            }
            out.push(len);
        }
        out
    }

    /// Exact graph distances from `source`; `O(V + E)`.
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.n_vertices()];
        let mut queue = VecDeque::with_capacity(self.n_vertices());
        dist[source] = 0;
        queue.push_back(source as u32);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v as usize];
            for &w in self.neighbors(v as usize) {
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_profile(&self, source: usize) -> DistanceProfile {
        DistanceProfile::from_distances(source, &self.bfs_distances(source))
    }

    /// The vertex farthest from `source`, ties to the smallest index.
    pub fn default_far_vertex(&self, source: usize) -> usize {
        let d = self.bfs_distances(source);
        let mut best = 0;
        for (v, &x) in d.iter().enumerate() {
            if x > d[best] {
                best = v;
            }
        }
        best
    }

    /// Ball of radius `r` around `source` with every complement component
    /// not containing `far_vertex` filled in. Returns a membership mask.
    pub fn hull(&self, source: usize, r: u32, far_vertex: usize) -> Result<Vec<bool>> {
        let d = self.bfs_distances(source);
        if d[far_vertex] <= r {
            return Err(invalid(format!(
                "far vertex {far_vertex} lies inside the ball of radius {r}"
            )));
        }
        // Everything outside the ball reachable from far_vertex stays out.
        let mut outside = vec![false; self.n_vertices()];
        let mut queue = VecDeque::from([far_vertex]);
        outside[far_vertex] = true;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                let w = w as usize;
                if !outside[w] && d[w] > r {
                    outside[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok(outside.into_iter().map(|o| !o).collect())
    }

    /// For each connected component of `{v : d(U, v) > r}`, the largest
    /// distance from `U` it reaches.
    pub fn complement_component_depths(&self, source: usize, r: u32) -> Vec<u32> {
        let d = self.bfs_distances(source);
        let mut comp = vec![false; self.n_vertices()];
        let mut depths = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n_vertices() {
            if d[start] <= r || comp[start] {
                continue;
            }
            comp[start] = true;
            queue.push_back(start);
            let mut deepest = d[start];
            while let Some(v) = queue.pop_front() {
                deepest = deepest.max(d[v]);
                for &w in self.neighbors(v) {
                    let w = w as usize;
                    if !comp[w] && d[w] > r {
                        comp[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            depths.push(deepest);
        }
        depths
    }

    /// Number of components of the complement of the closed `r`-ball around
    /// `source` that reach beyond distance `r + eps`.
    pub fn complement_component_count(&self, source: usize, r: u32, eps: u32) -> usize {
        self.complement_component_depths(source, r)
            .into_iter()
            .filter(|&depth| depth > r + eps)
            .count()
    }

    /// Rooted canonical code of the whole map: two rooted maps are isomorphic
    /// iff their codes are equal.
    pub fn canonical_code(&self) -> Vec<u32> {
        self.canonical_code_within(None)
    }

    /// Canonical code of the submap induced on `keep` (which must contain the
    /// root vertex), traversed breadth-first from the root edge.
    ///
    /// Vertices get labels in discovery order; each vertex's rotation is read
    /// starting at the half-edge through which it was discovered (the root
    /// half-edge for the root vertex). For every vertex the code lists its
    /// degree followed by `(neighbour label, edge label)` pairs, edge labels
    /// also being assigned in discovery order.
    fn canonical_code_within(&self, keep: Option<&[bool]>) -> Vec<u32> {
        let kept = |v: usize| keep.is_none_or(|k| k[v]);
        let root_v = self.root_vertex();
        let mut label = vec![u32::MAX; self.n_vertices()];
        let mut start_half = vec![usize::MAX; self.n_vertices()];
        let mut edge_label = vec![u32::MAX; self.edges.len()];
        let mut next_vertex = 0u32;
        let mut next_edge = 0u32;
        let mut code = Vec::new();
        label[root_v] = next_vertex;
        next_vertex += 1;
        start_half[root_v] = self.root;
        let mut queue = VecDeque::from([root_v]);
        while let Some(v) = queue.pop_front() {
            let (lo, hi) = (self.offsets[v], self.offsets[v + 1]);
            let halves: Vec<usize> = if hi == lo {
                Vec::new()
            } else {
                let s = if start_half[v] == usize::MAX { lo } else { start_half[v] };
                (s..hi).chain(lo..s).filter(|&h| kept(self.targets[h] as usize)).collect()
            };
            code.push(halves.len() as u32);
            for h in halves {
                let w = self.targets[h] as usize;
                if label[w] == u32::MAX {
                    label[w] = next_vertex;
                    next_vertex += 1;
                    start_half[w] = self.twin[h] as usize;
                    queue.push_back(w);
                }
                let e = self.edge_of[h] as usize;
                if edge_label[e] == u32::MAX {
                    edge_label[e] = next_edge;
                    next_edge += 1;
                }
                code.push(label[w]);
                code.push(edge_label[e]);
            }
        }
        code
    }

    /// Canonical form of the radius-`k` ball around the root vertex, as a
    /// compact string. Identical rooted balls give identical strings.
    pub fn local_ball_census(&self, k: u32) -> String {
        let d = self.bfs_distances(self.root_vertex());
        let keep: Vec<bool> = d.iter().map(|&x| x <= k).collect();
        let code = self.canonical_code_within(Some(&keep));
        let parts: Vec<String> = code.iter().map(u32::to_string).collect();
        parts.join(",")
    }

    /// Two independent uniform vertices and their rescaled graph distance
    /// `c_4 n^{-1/4} d(v1, v2)`, `n` being the recorded face count.
    pub fn two_point_sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<TwoPointSample> {
        let n = self
            .faces
            .ok_or_else(|| invalid("two-point sampling needs a recorded face count"))?;
        let v1 = rng.random_range(0..self.n_vertices());
        let v2 = rng.random_range(0..self.n_vertices());
        let d = if v1 == v2 { 0 } else { self.bfs_distances(v1)[v2] };
        Ok(TwoPointSample {
            v1,
            v2,
            graph_distance: d,
            rescaled: c4() * (n as f64).powf(-0.25) * d as f64,
        })
    }

    /// Edge-list text: header `V E F root_tail root_head pointed` (absent
    /// values written as `-1`), then one `u v` line per edge in edge-id order.
    /// Rotation systems are not stored.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        let (rt, rh) = self
            .root_edge()
            .map(|(a, b)| (a as i64, b as i64))
            .unwrap_or((-1, -1));
        writeln!(
            w,
            "{} {} {} {} {} {}",
            self.n_vertices(),
            self.n_edges(),
            self.faces.map_or(-1, |f| f as i64),
            rt,
            rh,
            self.pointed.map_or(-1, |p| p as i64)
        )?;
        for &(a, b) in &self.edges {
            writeln!(w, "{a} {b}")?;
        }
        Ok(())
    }

    /// Parse the edge-list format. The rotation at each vertex follows edge order.
    pub fn read_edge_list<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = r.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let h = parse_ints(&header?, 1)?;
        if h.len() != 6 {
            return Err(Error::Parse {
                line: 1,
                msg: "header needs 6 fields".into(),
            });
        }
        let (nv, ne) = (h[0] as usize, h[1] as usize);
        let mut edges = Vec::with_capacity(ne);
        for (i, line) in lines.take(ne) {
            let f = parse_ints(&line?, i + 1)?;
            if f.len() != 2 || f.iter().any(|&x| x < 0) {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "expected `u v`".into(),
                });
            }
            edges.push((f[0] as usize, f[1] as usize));
        }
        if edges.len() != ne {
            return Err(Error::Parse {
                line: edges.len() + 2,
                msg: format!("expected {ne} edges"),
            });
        }
        let mut map = if ne == 0 {
            Self::from_edges(nv, edges, 0)?
        } else {
            let (rt, rh) = (h[3] as usize, h[4] as usize);
            let root = edges
                .iter()
                .position(|&(a, b)| (a, b) == (rt, rh) || (a, b) == (rh, rt))
                .ok_or(Error::Parse {
                    line: 1,
                    msg: "root edge not found".into(),
                })?;
            let mut rotations = vec![Vec::new(); nv];
            for (i, &(a, b)) in edges.iter().enumerate() {
                if a >= nv || b >= nv {
                    return Err(Error::Parse {
                        line: i + 2,
                        msg: "vertex out of range".into(),
                    });
                }
                rotations[a].push(EdgeEnd::tail(i));
                rotations[b].push(EdgeEnd::head(i));
            }
            let root_end = if edges[root].0 == rt {
                EdgeEnd::tail(root)
            } else {
                EdgeEnd::head(root)
            };
            Self::from_rotations(edges, rotations, root_end, None, None)?
        };
        map.faces = (h[2] >= 0).then_some(h[2] as usize);
        map.pointed = (h[5] >= 0).then_some(h[5] as usize);
        Ok(map)
    }

    /// `vertex,distance` CSV of BFS distances from `source`.
    pub fn write_distances_csv<W: Write>(&self, source: usize, mut w: W) -> Result<()> {
        writeln!(w, "vertex,distance")?;
        for (v, d) in self.bfs_distances(source).iter().enumerate() {
            writeln!(w, "{v},{d}")?;
        }
        Ok(())
    }
}

fn parse_ints(line: &str, no: usize) -> Result<Vec<i64>> {
    line.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                line: no,
                msg: format!("bad integer {t:?}"),
            })
        })
        .collect()
}

/// Result of [`PlanarMapGraph::two_point_sample`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoPointSample {
    pub v1: usize,
    pub v2: usize,
    pub graph_distance: u32,
    pub rescaled: f64,
}

/// Histogram of graph distances from a source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    pub source: usize,
    /// `counts[k]` = number of vertices at distance `k`.
    pub counts: Vec<usize>,
    pub total: usize,
}

impl DistanceProfile {
    pub fn from_distances(source: usize, dist: &[u32]) -> Self {
        let max = dist.iter().copied().filter(|&d| d != UNREACHED).max().unwrap_or(0);
        let mut counts = vec![0; max as usize + 1];
        for &d in dist.iter().filter(|&&d| d != UNREACHED) {
            counts[d as usize] += 1;
        }
        Self {
            source,
            total: counts.iter().sum(),
            counts,
        }
    }

    /// `distance,count` CSV.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "distance,count")?;
        for (k, c) in self.counts.iter().enumerate() {
            writeln!(w, "{k},{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    fn path(k: usize) -> PlanarMapGraph {
        PlanarMapGraph::from_edges(k + 1, (0..k).map(|i| (i, i + 1)).collect(), 0).unwrap()
    }

    fn cycle(k: usize) -> PlanarMapGraph {
        PlanarMapGraph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)).collect(), 0).unwrap()
    }

    #[test]
    fn c4_value() {
        assert!((c4() - 1.029_883_571_953_2).abs() < 1e-12);
    }

    #[test]
    fn bfs_on_path() {
        let g = path(6);
        assert_eq!(g.bfs_distances(0), vec![0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(g.bfs_distances(3)[3], 0);
    }

    #[test]
    fn single_edge_profile() {
        let g = path(1);
        let p = g.distance_profile(0);
        assert_eq!(p.counts, vec![1, 1]);
        assert_eq!(p.total, 2);
    }

    #[test]
    fn cycle_has_one_far_component() {
        let g = cycle(8);
        for u in 0..8 {
            assert_eq!(g.complement_component_count(u, 1, 1), 1);
            assert_eq!(g.complement_component_count(u, 4, 1), 0);
        }
    }

    #[test]
    fn star_components() {
        // Root 0 with three pendant paths of lengths 1, 2, 3.
        let edges = vec![(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)];
        let g = PlanarMapGraph::from_edges(7, edges, 0).unwrap();
        assert_eq!(g.complement_component_depths(0, 1).len(), 2);
        assert_eq!(g.complement_component_count(0, 1, 0), 2);
        assert_eq!(g.complement_component_count(0, 1, 1), 1);
        assert_eq!(g.complement_component_count(0, 1, 2), 0);
        assert_eq!(g.complement_component_count(0, 3, 1), 0);
    }

    #[test]
    fn hull_fills_pockets() {
        let edges = vec![(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)];
        let g = PlanarMapGraph::from_edges(7, edges, 0).unwrap();
        assert_eq!(g.default_far_vertex(0), 6);
        let h = g.hull(0, 1, 6).unwrap();
        assert_eq!(h, vec![true, true, true, true, true, false, false]);
        let h0 = g.hull(0, 0, 6).unwrap();
        assert_eq!(h0, vec![true, true, true, true, false, false, false]);
        assert!(g.hull(0, 3, 6).is_err());
    }

    #[test]
    fn edgeless_map() {
        let g = PlanarMapGraph::from_edges(1, vec![], 0).unwrap();
        assert_eq!(g.local_ball_census(0), "0");
        assert_eq!(g.distance_profile(0).counts, vec![1]);
    }

    #[test]
    fn disconnected_rejected() {
        assert!(PlanarMapGraph::from_edges(4, vec![(0, 1), (2, 3)], 0).is_err());
    }

    #[test]
    fn census_radius_zero_is_single_vertex() {
        assert_eq!(cycle(5).local_ball_census(0), "0");
        assert_eq!(cycle(5).local_ball_census(1), cycle(5).local_ball_census(1));
    }

    #[test]
    fn canonical_code_sees_rotation() {
        // Same graph, different rotation at the root: a loop drawn on either side.
        let edges = vec![(0, 1), (0, 0), (0, 2)];
        let a = PlanarMapGraph::from_rotations(
            edges.clone(),
            vec![
                vec![EdgeEnd::tail(0), EdgeEnd::tail(1), EdgeEnd::head(1), EdgeEnd::tail(2)],
                vec![EdgeEnd::head(0)],
                vec![EdgeEnd::head(2)],
            ],
            EdgeEnd::tail(0),
            None,
            None,
        )
        .unwrap();
        let b = PlanarMapGraph::from_rotations(
            edges,
            vec![
                vec![EdgeEnd::tail(0), EdgeEnd::tail(1), EdgeEnd::tail(2), EdgeEnd::head(1)],
                vec![EdgeEnd::head(0)],
                vec![EdgeEnd::head(2)],
            ],
            EdgeEnd::tail(0),
            None,
            None,
        )
        .unwrap();
        assert_ne!(a.canonical_code(), b.canonical_code());
        assert_eq!(a.face_degrees().len(), 2);
        assert_eq!(b.face_degrees().len(), 2);
    }

    #[test]
    fn two_point_trivial_cases() {
        let mut g = path(4);
        let mut r = rng::from_seed(3);
        assert!(g.two_point_sample(&mut r).is_err());
        g.faces = Some(16);
        for _ in 0..200 {
            let s = g.two_point_sample(&mut r).unwrap();
            if s.v1 == s.v2 {
                assert_eq!(s.rescaled, 0.0);
            }
            assert!(s.rescaled >= 0.0 && s.rescaled <= c4() * 0.5 * 4.0 + 1e-12);
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5);
        let mut buf = Vec::new();
        g.write_edge_list(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("5 5 -1 0 1 -1\n0 1\n"));
        let back = PlanarMapGraph::read_edge_list(&buf[..]).unwrap();
        assert_eq!(back, g);
        assert!(PlanarMapGraph::read_edge_list(&b"3 2 -1 0 1 -1\n0 1\n"[..]).is_err());
        assert!(PlanarMapGraph::read_edge_list(&b"3 1 -1 0 1\n0 1\n"[..]).is_err());
    }

    #[test]
    fn profile_csv() {
        let mut buf = Vec::new();
        path(2).distance_profile(0).write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "distance,count\n0,1\n1,1\n2,1\n");
    }
}
