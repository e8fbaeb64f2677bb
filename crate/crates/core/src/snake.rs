//! Gaussian labels on the tree coded by a height sequence.
//!
//! The heights `h[0..L]` (with `h[0]` the global minimum) are read as the
//! contour of a real tree with linear interpolation between grid points. Every
//! branch point of that tree sits at a grid point, so the grid points alone
//! carry the full genealogy. One left-to-right stack sweep builds it and draws
//! the labels: a Brownian motion indexed by the tree, started at 0 at the root.

use rand::Rng;
use rand_distr::StandardNormal;

/// Nodes of the grid tree with their heights, parents and labels.
#[derive(Clone, Debug)]
pub struct LabelTree {
    pub heights: Vec<f64>,
    /// `usize::MAX` for the root.
    pub parent: Vec<usize>,
    pub labels: Vec<f64>,
    /// Node carrying each grid index.
    pub node_of: Vec<usize>,
}

pub const NO_PARENT: usize = usize::MAX;

impl LabelTree {
    /// Label at each grid index.
    pub fn grid_labels(&self) -> Vec<f64> {
        self.node_of.iter().map(|&k| self.labels[k]).collect()
    }

    /// First grid index mapped to each grid index's node.
    pub fn representatives(&self) -> Vec<usize> {
        let mut first = vec![usize::MAX; self.heights.len()];
        self.node_of
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                if first[k] == usize::MAX {
                    first[k] = i;
                }
                first[k]
            })
            .collect()
    }
}

/// Build the tree coded by `heights` and label it.
///
/// When a new grid point lands strictly inside an existing branch (between
/// the stack top and the node just popped), its label is drawn from the
/// Brownian bridge along that branch, and the popped node is re-attached
/// below it. Equal heights along the stack identify grid points.
pub fn label_tree<R: Rng + ?Sized>(heights: &[f64], rng: &mut R) -> LabelTree {
    let mut t = LabelTree {
        heights: vec![heights[0]],
        parent: vec![NO_PARENT],
        labels: vec![0.0],
        node_of: vec![0; heights.len()],
    };
    let mut stack = vec![0usize];
    for (k, &h) in heights.iter().enumerate().skip(1) {
        let mut popped = None;
        while let Some(&top) = stack.last() {
            if t.heights[top] > h {
                popped = stack.pop();
            } else {
                break;
            }
        }
        let top = *stack.last().expect("the first height is the minimum");
        let (h1, z1) = (t.heights[top], t.labels[top]);
        if h1 == h {
            t.node_of[k] = top;
            continue;
        }
        let g: f64 = rng.sample(StandardNormal);
        let q = t.heights.len();
        let z = match popped {
            Some(p) => {
                let (h2, z2) = (t.heights[p], t.labels[p]);
                let w = (h - h1) / (h2 - h1);
                t.parent[p] = q;
                z1 + w * (z2 - z1) + ((h - h1) * (h2 - h) / (h2 - h1)).sqrt() * g
            }
            None => z1 + (h - h1).sqrt() * g,
        };
        t.heights.push(h);
        t.parent.push(top);
        t.labels.push(z);
        t.node_of[k] = q;
        stack.push(q);
    }
    t
}
