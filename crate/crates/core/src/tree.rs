//! Plane trees and labeled trees: sampling, enumeration, contour order and
//! tree intervals.
//!
//! Vertices are numbered in depth-first (preorder) order, so the root is
//! always vertex `0` and `parent(v) < v`. The contour is the clockwise walk
//! around the tree: it starts and ends at the root and lists `2n + 1` vertices
//! for a tree with `n` edges. Position `i < 2n` of the contour is identified
//! with the corner of `contour[i]` that the walk sits in at step `i`.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{invalid, Error, Result};

/// Largest edge count accepted by [`enumerate_well_labeled`].
pub const MAX_ENUMERATION_EDGES: usize = 6;

/// Default attempt budget for rejection sampling of well-labeled trees.
pub const DEFAULT_REJECTION_BUDGET: u64 = 1_000_000;

/// A rooted ordered tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    contour: Vec<usize>,
}

impl PlaneTree {
    /// Build from a parent sequence in depth-first order (`parents[0]` is `None`).
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        if parents.is_empty() || parents[0].is_some() {
            return Err(invalid("parent sequence must start with the root"));
        }
        let n = parents.len();
        let mut children = vec![Vec::new(); n];
        // `path` is the chain from the root to the previous vertex; in
        // preorder the parent of `v` must lie on it.
        let mut path = vec![0usize];
        for (v, p) in parents.iter().enumerate().skip(1) {
            let p = p.ok_or_else(|| invalid(format!("vertex {v} has no parent")))?;
            while path.last().is_some_and(|&top| top != p) {
                path.pop();
            }
            if path.is_empty() {
                return Err(invalid(format!(
                    "parent {p} of vertex {v} is not on the current depth-first path"
                )));
            }
            children[p].push(v);
            path.push(v);
        }
        Ok(Self::from_children(parents.to_vec(), children))
    }

    /// Build from the child counts of the vertices in depth-first order
    /// (the Lukasiewicz word of the tree).
    pub fn from_child_counts(counts: &[usize]) -> Result<Self> {
        if counts.is_empty() {
            return Err(invalid("empty child-count sequence"));
        }
        let mut parents = vec![None];
        // Stack of (vertex, children still to attach).
        let mut open = vec![(0usize, counts[0])];
        for (v, &c) in counts.iter().enumerate().skip(1) {
            while open.last().is_some_and(|&(_, left)| left == 0) {
                open.pop();
            }
            let top = open
                .last_mut()
                .ok_or_else(|| invalid("child counts describe a forest, not a tree"))?;
            top.1 -= 1;
            parents.push(Some(top.0));
            open.push((v, c));
        }
        if open.iter().any(|&(_, left)| left != 0) {
            return Err(invalid("child counts leave unfilled children"));
        }
        Self::from_parents(&parents)
    }

    /// Build from a Dyck path (`true` = step away from the root).
    pub fn from_dyck(steps: &[bool]) -> Result<Self> {
        let mut parents = vec![None];
        let mut path = vec![0usize];
        for &up in steps {
            if up {
                let v = parents.len();
                parents.push(Some(*path.last().unwrap()));
                path.push(v);
            } else {
                path.pop();
                if path.is_empty() {
                    return Err(invalid("Dyck path goes below zero"));
                }
            }
        }
        if path.len() != 1 {
            return Err(invalid("Dyck path does not return to zero"));
        }
        Self::from_parents(&parents)
    }

    /// Rebuild a tree from a closed contour walk over arbitrary vertex ids.
    ///
    /// Returns the tree (renumbered in depth-first order of the walk) and the
    /// map `new id -> old id`.
    pub fn from_contour_walk(walk: &[usize]) -> Result<(Self, Vec<usize>)> {
        if walk.is_empty() || walk.first() != walk.last() {
            return Err(invalid("contour walk must be closed"));
        }
        let mut old_of_new = vec![walk[0]];
        let mut parents = vec![None];
        let mut path: Vec<usize> = vec![0];
        for &w in &walk[1..] {
            let back = path.len() >= 2 && old_of_new[path[path.len() - 2]] == w;
            if back {
                path.pop();
            } else {
                let v = parents.len();
                parents.push(Some(*path.last().unwrap()));
                old_of_new.push(w);
                path.push(v);
            }
        }
        if path.len() != 1 || 2 * (parents.len() - 1) != walk.len() - 1 {
            return Err(invalid("walk is not the contour of a tree"));
        }
        Ok((Self::from_parents(&parents)?, old_of_new))
    }

    fn from_children(parent: Vec<Option<usize>>, children: Vec<Vec<usize>>) -> Self {
        let n = parent.len();
        let mut contour = Vec::with_capacity(2 * n - 1);
        // (vertex, index of next child to visit)
        let mut stack = vec![(0usize, 0usize)];
        contour.push(0);
        while let Some(top) = stack.last_mut() {
            let (v, next) = *top;
            if next < children[v].len() {
                top.1 += 1;
                let c = children[v][next];
                contour.push(c);
                stack.push((c, 0));
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    contour.push(p);
                }
            }
        }
        Self {
            parent,
            children,
            contour,
        }
    }

    pub fn n_edges(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn n_vertices(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn child_counts(&self) -> Vec<usize> {
        self.children.iter().map(Vec::len).collect()
    }

    /// Clockwise contour walk, `2n + 1` entries.
    pub fn contour(&self) -> &[usize] {
        &self.contour
    }

    /// Cyclic corner sequence: the contour without its closing root visit.
    pub fn corners(&self) -> &[usize] {
        &self.contour[..self.contour.len() - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    /// Contour positions of the corners of each vertex, increasing.
    pub fn corner_positions(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n_vertices()];
        for (i, &v) in self.corners().iter().enumerate() {
            out[v].push(i);
        }
        // A single-vertex tree has one corner even though the contour is [0].
        if self.n_edges() == 0 {
            out[0].push(0);
        }
        out
    }

    /// Ulam-Harris word of `v` (1-based child ranks from the root).
    pub fn word(&self, v: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            let rank = self.children[p].iter().position(|&c| c == cur).unwrap();
            w.push(rank + 1);
            cur = p;
        }
        w.reverse();
        w
    }

    /// Vertex with the given Ulam-Harris word, if present.
    pub fn vertex_by_word(&self, word: &[usize]) -> Option<usize> {
        let mut v = 0;
        for &k in word {
            v = *self.children[v].get(k.checked_sub(1)?)?;
        }
        Some(v)
    }

    /// Is `a` an ancestor of `b` (or equal)?
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut cur = Some(b);
        while let Some(c) = cur {
            if c == a {
                return true;
            }
            cur = self.parent[c];
        }
        false
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n_vertices() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.n_vertices(),
            })
        } else {
            Ok(())
        }
    }

    /// Tree interval `[v, w]`: the vertices met when going clockwise around
    /// the tree from `v` to `w`.
    ///
    /// Among all corners of `v`, the walk starts from the one whose next
    /// corner of `w` comes soonest; the walk may wrap around the root.
    pub fn interval(&self, v: usize, w: usize) -> Result<TreeInterval> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Err(invalid("tree interval needs two distinct vertices"));
        }
        let len = 2 * self.n_edges();
        let positions = self.corner_positions();
        let (start, end) = shortest_corner_span(&positions[v], &positions[w], len);
        let corners: Vec<usize> = (start..=end).map(|i| i % len).collect();
        let walk = corners.iter().map(|&i| self.contour[i]).collect();
        Ok(TreeInterval { corners, walk })
    }

    /// Serialize as two lines: edge count, then the parents of vertices `1..=n`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n_edges());
        let parents: Vec<String> = self.parent[1..]
            .iter()
            .map(|p| p.unwrap().to_string())
            .collect();
        s.push_str(&parents.join(" "));
        s.push('\n');
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let n = parse_line::<usize>(lines.next(), 1)?;
        let n = *n.first().ok_or(Error::Parse {
            line: 1,
            msg: "missing edge count".into(),
        })?;
        let parents = parse_line::<usize>(lines.next(), 2)?;
        if parents.len() != n {
            return Err(Error::Parse {
                line: 2,
                msg: format!("expected {n} parents, found {}", parents.len()),
            });
        }
        let mut seq = vec![None];
        seq.extend(parents.into_iter().map(Some));
        Self::from_parents(&seq)
    }
}

/// Start and end (in the doubled index space `0..2*len`) of the shortest
/// clockwise corner walk from a corner in `from` to a corner in `to`.
pub(crate) fn shortest_corner_span(from: &[usize], to: &[usize], len: usize) -> (usize, usize) {
    let mut best = (0, usize::MAX);
    for &a in from {
        let b = match to.binary_search(&a) {
            Ok(k) | Err(k) if k < to.len() => to[k],
            _ => to[0] + len,
        };
        if b - a < best.1.wrapping_sub(best.0) {
            best = (a, b);
        }
    }
    best
}

fn parse_line<T: std::str::FromStr>(line: Option<&str>, no: usize) -> Result<Vec<T>> {
    let line = line.ok_or(Error::Parse {
        line: no,
        msg: "missing line".into(),
    })?;
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<T>().map_err(|_| Error::Parse {
                line: no,
                msg: format!("bad integer {tok:?}"),
            })
        })
        .collect()
}

/// A walk `[v, w]` along the clockwise contour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeInterval {
    /// Contour positions visited, first is a corner of `v`, last a corner of `w`.
    pub corners: Vec<usize>,
    /// Vertices at those positions.
    pub walk: Vec<usize>,
}

impl TreeInterval {
    /// Distinct vertices in order of first visit.
    pub fn vertices(&self) -> Vec<usize> {
        let mut seen = std::collections::HashSet::new();
        self.walk.iter().copied().filter(|v| seen.insert(*v)).collect()
    }
}

/// Which label constraints a [`LabeledTree`] satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelVariant {
    /// Root label 0, labels otherwise unconstrained.
    FreeRootZero,
    /// Root label 1 and all labels at least 1.
    WellLabeled,
}

/// A plane tree with integer labels differing by at most one along edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    tree: PlaneTree,
    labels: Vec<i64>,
    variant: LabelVariant,
}

impl LabeledTree {
    pub fn new(tree: PlaneTree, labels: Vec<i64>, variant: LabelVariant) -> Result<Self> {
        validate_labels(&tree, &labels, variant)?;
        Ok(Self {
            tree,
            labels,
            variant,
        })
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> i64 {
        self.labels[v]
    }

    pub fn variant(&self) -> LabelVariant {
        self.variant
    }

    pub fn n_edges(&self) -> usize {
        self.tree.n_edges()
    }

    pub fn min_label(&self) -> i64 {
        *self.labels.iter().min().unwrap()
    }

    /// Labels along the cyclic corner sequence.
    pub fn corner_labels(&self) -> Vec<i64> {
        self.tree.corners().iter().map(|&v| self.labels[v]).collect()
    }

    /// Three lines: edge count, parent sequence, labels.
    pub fn to_text(&self) -> String {
        let mut s = self.tree.to_text();
        let labels: Vec<String> = self.labels.iter().map(i64::to_string).collect();
        let _ = writeln!(s, "{}", labels.join(" "));
        s
    }

    /// Parse the three-line format; the variant is inferred from the root label.
    pub fn from_text(text: &str) -> Result<Self> {
        let tree = PlaneTree::from_text(text)?;
        let labels = parse_line::<i64>(text.lines().nth(2), 3)?;
        if labels.len() != tree.n_vertices() {
            return Err(Error::Parse {
                line: 3,
                msg: format!("expected {} labels, found {}", tree.n_vertices(), labels.len()),
            });
        }
        let variant = if labels[0] == 0 {
            LabelVariant::FreeRootZero
        } else {
            LabelVariant::WellLabeled
        };
        Self::new(tree, labels, variant)
    }
}

fn validate_labels(tree: &PlaneTree, labels: &[i64], variant: LabelVariant) -> Result<()> {
    if labels.len() != tree.n_vertices() {
        return Err(Error::InvalidLabels(format!(
            "{} labels for {} vertices",
            labels.len(),
            tree.n_vertices()
        )));
    }
    for v in 1..tree.n_vertices() {
        let p = tree.parent(v).unwrap();
        if (labels[v] - labels[p]).abs() > 1 {
            return Err(Error::InvalidLabels(format!(
                "labels of {p} and {v} differ by more than one"
            )));
        }
    }
    match variant {
        LabelVariant::FreeRootZero if labels[0] != 0 => {
            Err(Error::InvalidLabels("root label must be 0".into()))
        }
        LabelVariant::WellLabeled if labels[0] != 1 => {
            Err(Error::InvalidLabels("root label must be 1".into()))
        }
        LabelVariant::WellLabeled if labels.iter().any(|&l| l < 1) => {
            Err(Error::InvalidLabels("labels must be positive".into()))
        }
        _ => Ok(()),
    }
}

/// Uniform plane tree with `n` edges.
///
/// A uniform arrangement of `n` up-steps and `n + 1` down-steps is rotated to
/// start right after its first global minimum (cycle lemma); dropping the
/// final down-step leaves a uniform Dyck path.
pub fn sample_plane_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<PlaneTree> {
    if n == 0 {
        return Err(invalid("plane trees must have at least one edge"));
    }
    let mut steps: Vec<bool> = (0..2 * n + 1).map(|i| i < n).collect();
    steps.shuffle(rng);
    let mut height = 0i64;
    let mut min = (0i64, 0usize);
    for (i, &up) in steps.iter().enumerate() {
        height += if up { 1 } else { -1 };
        if height < min.0 {
            min = (height, i + 1);
        }
    }
    let len = steps.len();
    steps.rotate_left(min.1 % len);
    steps.pop();
    PlaneTree::from_dyck(&steps)
}

fn uniform_increment<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    rng.random_range(-1..=1)
}

fn free_labels<R: Rng + ?Sized>(tree: &PlaneTree, rng: &mut R) -> Vec<i64> {
    let mut labels = vec![0i64; tree.n_vertices()];
    for v in 1..tree.n_vertices() {
        labels[v] = labels[tree.parent(v).unwrap()] + uniform_increment(rng);
    }
    labels
}

/// Label `tree` uniformly among labelings of the requested variant.
///
/// `FreeRootZero` draws independent uniform increments in `{-1, 0, 1}` on
/// every edge. `WellLabeled` rejects free labelings until all labels are
/// non-negative, then shifts by one.
pub fn attach_labels<R: Rng + ?Sized>(
    tree: PlaneTree,
    variant: LabelVariant,
    rng: &mut R,
) -> Result<LabeledTree> {
    match variant {
        LabelVariant::FreeRootZero => {
            let labels = free_labels(&tree, rng);
            LabeledTree::new(tree, labels, variant)
        }
        LabelVariant::WellLabeled => {
            for _ in 0..DEFAULT_REJECTION_BUDGET {
                let labels = free_labels(&tree, rng);
                if labels.iter().all(|&l| l >= 0) {
                    let labels = labels.into_iter().map(|l| l + 1).collect();
                    return LabeledTree::new(tree, labels, variant);
                }
            }
            Err(Error::BudgetExhausted {
                what: "well-labeling rejection",
                budget: DEFAULT_REJECTION_BUDGET,
            })
        }
    }
}

/// Shift labels so the minimum is 1 and re-root the tree at the first corner
/// (in contour order) carrying the minimal label.
pub fn reroot_shift(t: &LabeledTree) -> Result<LabeledTree> {
    if t.variant != LabelVariant::FreeRootZero {
        return Err(invalid("reroot_shift expects a FreeRootZero tree"));
    }
    let min = t.min_label();
    let corners = t.tree.corners();
    let start = corners
        .iter()
        .position(|&v| t.labels[v] == min)
        .expect("some corner carries the minimum");
    let mut walk: Vec<usize> = corners[start..]
        .iter()
        .chain(&corners[..start])
        .copied()
        .collect();
    walk.push(walk[0]);
    let (tree, old_of_new) = PlaneTree::from_contour_walk(&walk)?;
    let labels = old_of_new.iter().map(|&old| t.labels[old] - min + 1).collect();
    LabeledTree::new(tree, labels, LabelVariant::WellLabeled)
}

/// How [`sample_well_labeled`] draws its tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WellLabeledMode {
    /// Rejection from uniform free labelings on uniform plane trees.
    Rejection { budget: u64 },
    /// Uniform index into [`enumerate_well_labeled`]; `n <= 6` only.
    Enumeration,
}

impl Default for WellLabeledMode {
    fn default() -> Self {
        Self::Rejection {
            budget: DEFAULT_REJECTION_BUDGET,
        }
    }
}

/// Exactly uniform well-labeled tree with `n` edges.
pub fn sample_well_labeled<R: Rng + ?Sized>(
    n: usize,
    mode: WellLabeledMode,
    rng: &mut R,
) -> Result<LabeledTree> {
    if n == 0 {
        return Err(invalid("well-labeled trees must have at least one edge"));
    }
    match mode {
        WellLabeledMode::Enumeration => {
            let all = enumerate_well_labeled(n)?;
            let k = rng.random_range(0..all.len());
            Ok(all.into_iter().nth(k).unwrap())
        }
        WellLabeledMode::Rejection { budget } => {
            for _ in 0..budget {
                let tree = sample_plane_tree(n, rng)?;
                let labels = free_labels(&tree, rng);
                if labels.iter().all(|&l| l >= 0) {
                    let labels = labels.into_iter().map(|l| l + 1).collect();
                    return LabeledTree::new(tree, labels, LabelVariant::WellLabeled);
                }
            }
            Err(Error::BudgetExhausted {
                what: "well-labeled rejection sampler",
                budget,
            })
        }
    }
}

/// All plane trees with `n` edges, ordered lexicographically by child-count sequence.
pub fn enumerate_plane_trees(n: usize) -> Vec<PlaneTree> {
    // `open`: children promised by placed vertices but not yet placed.
    fn rec(n: usize, counts: &mut Vec<usize>, open: usize, out: &mut Vec<PlaneTree>) {
        let remaining = n + 1 - counts.len();
        if remaining == 0 {
            if open == 0 {
                out.push(PlaneTree::from_child_counts(counts).unwrap());
            }
            return;
        }
        for c in 0..=n {
            let next_open = if counts.is_empty() { c } else { open - 1 + c };
            if next_open > remaining - 1 {
                break;
            }
            if next_open == 0 && remaining > 1 {
                continue;
            }
            counts.push(c);
            rec(n, counts, next_open, out);
            counts.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), 0, &mut out);
    out
}

/// Every well-labeled tree with `n` edges (`1 <= n <= 6`), in canonical
/// order: by child-count sequence, then lexicographically by labels.
pub fn enumerate_well_labeled(n: usize) -> Result<Vec<LabeledTree>> {
    if n == 0 || n > MAX_ENUMERATION_EDGES {
        return Err(invalid(format!(
            "enumeration supports 1..={MAX_ENUMERATION_EDGES} edges, got {n}"
        )));
    }
    let mut out = Vec::new();
    for tree in enumerate_plane_trees(n) {
        let mut labels = vec![1i64; tree.n_vertices()];
        label_rec(&tree, 1, &mut labels, &mut out);
    }
    Ok(out)
}

fn label_rec(tree: &PlaneTree, v: usize, labels: &mut Vec<i64>, out: &mut Vec<LabeledTree>) {
    if v == tree.n_vertices() {
        out.push(LabeledTree {
            tree: tree.clone(),
            labels: labels.clone(),
            variant: LabelVariant::WellLabeled,
        });
        return;
    }
    let base = labels[tree.parent(v).unwrap()];
    for l in (base - 1).max(1)..=base + 1 {
        labels[v] = l;
        label_rec(tree, v + 1, labels, out);
    }
}

/// Free-function form of [`PlaneTree::interval`] on a labeled tree.
pub fn tree_interval(t: &LabeledTree, v: usize, w: usize) -> Result<TreeInterval> {
    t.tree.interval(v, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use std::collections::HashMap;

    /// The well-labeled tree drawn in the classic CVS illustration.
    pub(crate) fn sample_tree() -> LabeledTree {
        // preorder: root, 1, 11, 111, 1111, 112, 12, 121
        let parents = [None, Some(0), Some(1), Some(2), Some(3), Some(2), Some(1), Some(6)];
        let tree = PlaneTree::from_parents(&parents).unwrap();
        LabeledTree::new(tree, vec![1, 2, 3, 2, 1, 3, 1, 2], LabelVariant::WellLabeled).unwrap()
    }

    fn by_word(t: &LabeledTree, w: &str) -> usize {
        let word: Vec<usize> = w.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
        t.tree().vertex_by_word(&word).unwrap()
    }

    fn words(t: &LabeledTree, vs: &[usize]) -> Vec<String> {
        vs.iter()
            .map(|&v| {
                let w = t.tree().word(v);
                if w.is_empty() {
                    "root".to_string()
                } else {
                    w.iter().map(|d| d.to_string()).collect()
                }
            })
            .collect()
    }

    #[test]
    fn contour_shape() {
        let t = sample_tree();
        assert_eq!(t.tree().contour(), &[0, 1, 2, 3, 4, 3, 2, 5, 2, 1, 6, 7, 6, 1, 0]);
        assert_eq!(t.tree().n_vertices(), 8);
    }

    #[test]
    fn sample_tree_intervals() {
        let t = sample_tree();
        let (a, b) = (by_word(&t, "111"), by_word(&t, "12"));
        let iv = tree_interval(&t, a, b).unwrap();
        assert_eq!(words(&t, &iv.vertices()), ["111", "11", "112", "1", "12"]);
        let iv = tree_interval(&t, b, a).unwrap();
        assert_eq!(words(&t, &iv.vertices()), ["12", "1", "root", "11", "111"]);
    }

    #[test]
    fn interval_of_adjacent_vertices() {
        let t = sample_tree();
        // 1111 is followed by its parent 111 in contour order.
        let iv = tree_interval(&t, 4, 3).unwrap();
        assert_eq!(iv.walk, vec![4, 3]);
    }

    #[test]
    fn interval_errors() {
        let t = sample_tree();
        assert!(matches!(
            tree_interval(&t, 0, 99),
            Err(Error::VertexOutOfRange { vertex: 99, .. })
        ));
        assert!(tree_interval(&t, 2, 2).is_err());
    }

    fn tree_path(tree: &PlaneTree, v: usize, w: usize) -> Vec<usize> {
        let up = |mut x: usize| {
            let mut chain = vec![x];
            while let Some(p) = tree.parent(x) {
                chain.push(p);
                x = p;
            }
            chain
        };
        let (a, b) = (up(v), up(w));
        let mut path: Vec<usize> = a.iter().copied().filter(|x| !b.contains(x)).collect();
        let meet = *a.iter().find(|x| b.contains(x)).unwrap();
        path.push(meet);
        path.extend(b.iter().copied().take_while(|&x| x != meet));
        path
    }

    #[test]
    fn intervals_are_contiguous_and_contain_the_tree_path() {
        let mut r = rng::from_seed(11);
        for _ in 0..50 {
            let tree = sample_plane_tree(12, &mut r).unwrap();
            for v in 0..tree.n_vertices() {
                for w in 0..tree.n_vertices() {
                    if v == w {
                        continue;
                    }
                    let a = tree.interval(v, w).unwrap();
                    for pair in a.corners.windows(2) {
                        assert_eq!((pair[0] + 1) % (2 * tree.n_edges()), pair[1]);
                    }
                    assert_eq!(a.walk.first(), Some(&v));
                    assert_eq!(a.walk.last(), Some(&w));
                    assert_eq!(a.walk.iter().filter(|&&x| x == w).count(), 1);
                    for x in tree_path(&tree, v, w) {
                        assert!(a.walk.contains(&x), "{x} not in [{v}, {w}]");
                    }
                }
            }
        }
    }

    #[test]
    fn two_intervals_need_not_cover_the_contour() {
        // Root 0 with a single child 1 carrying a leaf 2: [1, 2] and [2, 1]
        // are both single steps and never visit the root.
        let tree = PlaneTree::from_parents(&[None, Some(0), Some(1)]).unwrap();
        assert_eq!(tree.interval(1, 2).unwrap().walk, vec![1, 2]);
        assert_eq!(tree.interval(2, 1).unwrap().walk, vec![2, 1]);
    }

    #[test]
    fn one_edge_tree_is_unique() {
        let mut r = rng::from_seed(1);
        for _ in 0..10 {
            let t = sample_plane_tree(1, &mut r).unwrap();
            assert_eq!(t.parents(), &[None, Some(0)]);
        }
    }

    #[test]
    fn zero_edges_rejected() {
        let mut r = rng::from_seed(1);
        assert!(sample_plane_tree(0, &mut r).is_err());
        assert!(sample_well_labeled(0, WellLabeledMode::default(), &mut r).is_err());
    }

    #[test]
    fn contour_length_and_consistency() {
        let mut r = rng::from_seed(2);
        for n in [1, 2, 5, 40, 333] {
            let t = sample_plane_tree(n, &mut r).unwrap();
            assert_eq!(t.contour().len(), 2 * n + 1);
            assert_eq!(t.n_vertices(), n + 1);
            let (back, map) = PlaneTree::from_contour_walk(t.contour()).unwrap();
            assert_eq!(back, t);
            assert_eq!(map, (0..=n).collect::<Vec<_>>());
            let from_counts = PlaneTree::from_child_counts(&t.child_counts()).unwrap();
            assert_eq!(from_counts, t);
            for v in 0..t.n_vertices() {
                assert_eq!(t.corner_positions()[v].len(), t.degree(v));
            }
        }
    }

    #[test]
    fn plane_tree_uniformity_n3() {
        let trees = enumerate_plane_trees(3);
        assert_eq!(trees.len(), 5);
        let mut r = rng::from_seed(3);
        let draws = 100_000;
        let mut counts: HashMap<PlaneTree, usize> = HashMap::new();
        for _ in 0..draws {
            *counts.entry(sample_plane_tree(3, &mut r).unwrap()).or_default() += 1;
        }
        assert_eq!(counts.len(), 5);
        for t in &trees {
            let f = counts[t] as f64 / draws as f64;
            assert!((f - 0.2).abs() < 0.01, "frequency {f}");
        }
    }

    #[test]
    fn plane_tree_counts_are_catalan() {
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for n in 1..=6 {
            assert_eq!(enumerate_plane_trees(n).len(), catalan[n]);
        }
        let seqs: Vec<Vec<usize>> = enumerate_plane_trees(4).iter().map(|t| t.child_counts()).collect();
        let mut sorted = seqs.clone();
        sorted.sort();
        assert_eq!(seqs, sorted);
    }

    #[test]
    fn one_edge_free_labels_uniform() {
        let mut r = rng::from_seed(4);
        let tree = sample_plane_tree(1, &mut r).unwrap();
        let draws = 100_000;
        let mut counts = [0usize; 3];
        for _ in 0..draws {
            let t = attach_labels(tree.clone(), LabelVariant::FreeRootZero, &mut r).unwrap();
            assert_eq!(t.label(0), 0);
            counts[(t.label(1) + 1) as usize] += 1;
        }
        for c in counts {
            assert!((c as f64 / draws as f64 - 1.0 / 3.0).abs() < 0.01);
        }
    }

    #[test]
    fn path_tree_has_nine_equally_likely_labelings() {
        let path = PlaneTree::from_parents(&[None, Some(0), Some(1)]).unwrap();
        let mut r = rng::from_seed(5);
        let draws = 90_000;
        let mut counts: HashMap<Vec<i64>, usize> = HashMap::new();
        for _ in 0..draws {
            let t = attach_labels(path.clone(), LabelVariant::FreeRootZero, &mut r).unwrap();
            *counts.entry(t.labels().to_vec()).or_default() += 1;
        }
        assert_eq!(counts.len(), 9);
        for c in counts.values() {
            assert!((*c as f64 / draws as f64 - 1.0 / 9.0).abs() < 0.006);
        }
    }

    #[test]
    fn adjacent_labels_differ_by_at_most_one() {
        let mut r = rng::from_seed(6);
        for _ in 0..20 {
            let tree = sample_plane_tree(200, &mut r).unwrap();
            let t = attach_labels(tree, LabelVariant::FreeRootZero, &mut r).unwrap();
            for v in 1..t.tree().n_vertices() {
                assert!((t.label(v) - t.label(t.tree().parent(v).unwrap())).abs() <= 1);
            }
        }
    }

    #[test]
    fn well_labeled_attach_is_valid() {
        let mut r = rng::from_seed(7);
        let tree = sample_plane_tree(8, &mut r).unwrap();
        let t = attach_labels(tree, LabelVariant::WellLabeled, &mut r).unwrap();
        assert_eq!(t.label(0), 1);
        assert!(t.labels().iter().all(|&l| l >= 1));
    }

    #[test]
    fn reroot_pure_shift() {
        let path = PlaneTree::from_parents(&[None, Some(0), Some(1)]).unwrap();
        let t = LabeledTree::new(path.clone(), vec![0, 1, 2], LabelVariant::FreeRootZero).unwrap();
        let out = reroot_shift(&t).unwrap();
        assert_eq!(out.tree(), &path);
        assert_eq!(out.labels(), &[1, 2, 3]);
    }

    #[test]
    fn reroot_one_edge() {
        let edge = PlaneTree::from_parents(&[None, Some(0)]).unwrap();
        let t = LabeledTree::new(edge.clone(), vec![0, -1], LabelVariant::FreeRootZero).unwrap();
        let out = reroot_shift(&t).unwrap();
        assert_eq!(out.tree(), &edge);
        assert_eq!(out.labels(), &[1, 2]);
        assert_eq!(out.variant(), LabelVariant::WellLabeled);
    }

    #[test]
    fn reroot_rejects_well_labeled_input() {
        assert!(reroot_shift(&sample_tree()).is_err());
    }

    #[test]
    fn reroot_output_always_valid_and_covers_n3() {
        let all = enumerate_well_labeled(3).unwrap();
        let mut r = rng::from_seed(8);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..50_000 {
            let tree = sample_plane_tree(3, &mut r).unwrap();
            let t = attach_labels(tree, LabelVariant::FreeRootZero, &mut r).unwrap();
            let w = reroot_shift(&t).unwrap();
            assert_eq!(w.min_label(), 1);
            assert_eq!(w.label(0), 1);
            seen.insert(w);
        }
        assert_eq!(seen.len(), 54);
        assert!(all.iter().all(|t| seen.contains(t)));
    }

    #[test]
    fn enumeration_counts() {
        // 2 * 3^n * Cat(n) / (n + 2)
        let expected = [2, 9, 54, 378, 2916, 24057];
        for (i, &e) in expected.iter().enumerate() {
            let all = enumerate_well_labeled(i + 1).unwrap();
            assert_eq!(all.len(), e);
            let distinct: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), e);
        }
        assert!(enumerate_well_labeled(7).is_err());
        assert!(enumerate_well_labeled(0).is_err());
    }

    #[test]
    fn enumeration_order_is_canonical() {
        let all = enumerate_well_labeled(3).unwrap();
        let keys: Vec<(Vec<usize>, Vec<i64>)> = all
            .iter()
            .map(|t| (t.tree().child_counts(), t.labels().to_vec()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    fn check_uniform(n: usize, mode: WellLabeledMode, draws: usize, tol_sigmas: f64, seed: u64) {
        let all = enumerate_well_labeled(n).unwrap();
        let mut r = rng::from_seed(seed);
        let mut counts: HashMap<LabeledTree, usize> = HashMap::new();
        for _ in 0..draws {
            *counts.entry(sample_well_labeled(n, mode, &mut r).unwrap()).or_default() += 1;
        }
        assert_eq!(counts.len(), all.len());
        let p = 1.0 / all.len() as f64;
        let sigma = (p * (1.0 - p) / draws as f64).sqrt();
        for t in &all {
            let f = counts.get(t).copied().unwrap_or(0) as f64 / draws as f64;
            assert!((f - p).abs() < tol_sigmas * sigma, "n={n} f={f} p={p}");
        }
    }

    #[test]
    fn well_labeled_rejection_uniform() {
        check_uniform(1, WellLabeledMode::default(), 10_000, 5.0, 9);
        check_uniform(2, WellLabeledMode::default(), 100_000, 5.0, 10);
        check_uniform(3, WellLabeledMode::default(), 100_000, 5.0, 11);
    }

    #[test]
    fn well_labeled_enumeration_uniform() {
        check_uniform(1, WellLabeledMode::Enumeration, 10_000, 5.0, 12);
        check_uniform(3, WellLabeledMode::Enumeration, 100_000, 5.0, 13);
    }

    #[test]
    fn one_edge_well_labeled_halves() {
        let mut r = rng::from_seed(14);
        let draws = 10_000;
        let ones = (0..draws)
            .filter(|_| {
                sample_well_labeled(1, WellLabeledMode::default(), &mut r)
                    .unwrap()
                    .label(1)
                    == 1
            })
            .count();
        assert!((ones as f64 / draws as f64 - 0.5).abs() < 0.02);
    }

    #[test]
    fn rejection_budget_guard() {
        let mut r = rng::from_seed(15);
        let err = sample_well_labeled(400, WellLabeledMode::Rejection { budget: 3 }, &mut r);
        assert!(matches!(err, Err(Error::BudgetExhausted { budget: 3, .. })));
    }

    #[test]
    fn text_round_trip() {
        let t = sample_tree();
        let text = t.to_text();
        assert_eq!(text, "7\n0 1 2 3 2 1 6\n1 2 3 2 1 3 1 2\n");
        assert_eq!(LabeledTree::from_text(&text).unwrap(), t);
        assert_eq!(PlaneTree::from_text(&t.tree().to_text()).unwrap(), *t.tree());
    }

    #[test]
    fn text_rejects_garbage() {
        assert!(LabeledTree::from_text("2\n0 x\n1 2 2\n").is_err());
        assert!(LabeledTree::from_text("2\n0 0\n1 3 2\n").is_err());
        assert!(PlaneTree::from_text("3\n0 1\n").is_err());
    }

    #[test]
    fn invalid_parent_sequences() {
        // 1 is closed once 2 (a child of the root) has been visited
        assert!(PlaneTree::from_parents(&[None, Some(0), Some(0), Some(1)]).is_err());
        assert!(PlaneTree::from_parents(&[Some(0)]).is_err());
        assert!(PlaneTree::from_dyck(&[true, false, false]).is_err());
    }

    proptest::proptest! {
        #[test]
        fn text_format_round_trips(n in 1usize..60, seed in 0u64..1000) {
            let mut r = rng::from_seed(seed);
            let tree = sample_plane_tree(n, &mut r).unwrap();
            let t = attach_labels(tree, LabelVariant::FreeRootZero, &mut r).unwrap();
            proptest::prop_assert_eq!(LabeledTree::from_text(&t.to_text()).unwrap(), t);
        }
    }
}
