//! Ferrers diagrams: finite downward-closed node sets in Z+^r.
//!
//! Nodes are stored in a fixed canonical total order (lexicographic on the
//! coordinate sequence), so diagram equality and node labelling are
//! deterministic. Diagrams are immutable values after construction; every
//! attribute computation is a pure function.
//!
//! Construction checks shape only (coordinate lengths, no duplicates).
//! Downward closure is checked by [`FerrersDiagram::validate`], which
//! reports the first offending node instead of aborting.

use crate::{Error, Result};

pub type Coord = u32;

/// A lattice node: a sequence of nonnegative coordinates whose length is
/// the ambient dimension of the containing diagram. `Ord` is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node(Vec<Coord>);

impl Node {
    pub fn new(coords: Vec<Coord>) -> Self {
        Node(coords)
    }

    pub fn coords(&self) -> &[Coord] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// True for e_i: exactly one coordinate equal to 1, the rest 0.
    pub fn is_unit(&self) -> bool {
        let mut ones = 0usize;
        for &c in &self.0 {
            match c {
                0 => {}
                1 => ones += 1,
                _ => return false,
            }
        }
        ones == 1
    }

    /// Axes (0-based) on which this node has a nonzero coordinate.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
    }

    /// The node one step down on `axis`; `None` at the boundary.
    pub fn step_down(&self, axis: usize) -> Option<Node> {
        if self.0[axis] == 0 {
            return None;
        }
        let mut c = self.0.clone();
        c[axis] -= 1;
        Some(Node(c))
    }
}

impl std::fmt::Debug for Node {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of downward-closure validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Ok,
    /// `node` is missing its predecessor on `axis` (1-based in messages).
    Violation { node: Node, axis: usize },
}

impl Validity {
    pub fn is_ok(&self) -> bool {
        matches!(self, Validity::Ok)
    }
}

impl std::fmt::Display for Validity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Validity::Ok => write!(f, "ok"),
            Validity::Violation { node, axis } => write!(
                f,
                "violation at {node:?}, axis {}: predecessor missing",
                axis + 1
            ),
        }
    }
}

/// A finite set of nodes in Z+^r, stored sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FerrersDiagram {
    ambient_dim: usize,
    nodes: Vec<Node>,
}

impl FerrersDiagram {
    /// Build a diagram from arbitrary nodes. Checks coordinate lengths and
    /// rejects duplicates; does *not* check downward closure (see
    /// [`validate`](Self::validate)).
    pub fn new(ambient_dim: usize, nodes: impl IntoIterator<Item = Node>) -> Result<Self> {
        let mut nodes: Vec<Node> = nodes.into_iter().collect();
        for n in &nodes {
            if n.dim() != ambient_dim {
                return Err(Error::Diagram(format!(
                    "node {n:?} has {} coordinates, ambient dimension is {ambient_dim}",
                    n.dim()
                )));
            }
        }
        nodes.sort();
        if nodes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Diagram("duplicate node".into()));
        }
        Ok(FerrersDiagram { ambient_dim, nodes })
    }

    /// The single-origin diagram in ambient dimension `r`.
    pub fn origin(r: usize) -> Self {
        FerrersDiagram {
            ambient_dim: r,
            nodes: vec![Node(vec![0; r])],
        }
    }

    /// mu_r: the origin plus the r unit nodes; the minimal diagram of
    /// intrinsic dimension r. `mu(0)` is the single origin node with an
    /// empty coordinate sequence.
    pub fn mu(r: usize) -> Self {
        let mut nodes = vec![Node(vec![0; r])];
        for i in 0..r {
            let mut c = vec![0; r];
            c[i] = 1;
            nodes.push(Node(c));
        }
        nodes.sort();
        FerrersDiagram {
            ambient_dim: r,
            nodes,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn contains(&self, node: &Node) -> bool {
        self.nodes.binary_search(node).is_ok()
    }

    /// Downward-closure check: for every node a and axis i with a_i > 0,
    /// a - e_i must be present. Never aborts; reports the first offending
    /// (node, axis) pair in canonical order.
    pub fn validate(&self) -> Validity {
        for node in &self.nodes {
            for axis in 0..self.ambient_dim {
                if let Some(prev) = node.step_down(axis) {
                    if !self.contains(&prev) {
                        return Validity::Violation {
                            node: node.clone(),
                            axis,
                        };
                    }
                }
            }
        }
        Validity::Ok
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Number of axes the diagram actually uses (some node has a nonzero
    /// coordinate there). For downward-closed sets this equals the minimal
    /// dimension of a coordinate hyperplane containing all nodes.
    pub fn intrinsic_dimension(&self) -> usize {
        (0..self.ambient_dim)
            .filter(|&i| self.nodes.iter().any(|n| n.coords()[i] > 0))
            .count()
    }

    /// Strict: ambient dimension equals intrinsic dimension.
    pub fn is_strict(&self) -> bool {
        self.intrinsic_dimension() == self.ambient_dim
    }

    /// All coordinates below `b` (the diagram fits a symmetric box of
    /// size b, i.e. coordinates take values in 0..b-1).
    pub fn in_box(&self, b: Coord) -> bool {
        self.nodes.iter().all(|n| n.coords().iter().all(|&c| c < b))
    }

    /// Apply an axis permutation: coordinate i of each node moves to
    /// `perm[i]`. `perm` must be a permutation of 0..ambient_dim.
    pub fn permute_axes(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.ambient_dim {
            return Err(Error::Diagram("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.ambient_dim];
        for &p in perm {
            if p >= self.ambient_dim || seen[p] {
                return Err(Error::Diagram("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut nodes: Vec<Node> = self
            .nodes
            .iter()
            .map(|n| {
                let mut c = vec![0; self.ambient_dim];
                for (i, &v) in n.coords().iter().enumerate() {
                    c[perm[i]] = v;
                }
                Node(c)
            })
            .collect();
        nodes.sort();
        Ok(FerrersDiagram {
            ambient_dim: self.ambient_dim,
            nodes,
        })
    }

    /// The compressed form: one column of coordinates per node, in
    /// canonical node order.
    pub fn to_columns(&self) -> Vec<Vec<Coord>> {
        self.nodes.iter().map(|n| n.coords().to_vec()).collect()
    }

    pub fn from_columns(ambient_dim: usize, columns: Vec<Vec<Coord>>) -> Result<Self> {
        FerrersDiagram::new(ambient_dim, columns.into_iter().map(Node::new))
    }

    /// Compressed form as a JSON array-of-columns, e.g. `[[0,0],[1,0]]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_columns()).expect("serializing coordinate matrix")
    }
}

impl std::fmt::Debug for FerrersDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FD{:?}", self.nodes)
    }
}
