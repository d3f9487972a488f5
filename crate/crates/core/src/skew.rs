//! Skew-diagram structure of a strict diagram relative to mu_r: node
//! types, reduced dimension, component decomposition, membership in the
//! all-type-1 family D, and the orbit weight under axis permutations.
//!
//! All of these presume a strict diagram (ambient dimension equals
//! intrinsic dimension); the skew is always taken against mu_r.

use std::collections::BTreeSet;

use crate::diagram::{FerrersDiagram, Node};
use crate::{Error, Result};

/// Classification of a skew node by its coordinate multiset:
/// {1,1} plus zeros -> Type1, {2} plus zeros -> Type2, everything else
/// Type3. The origin and unit nodes belong to mu_r and are not classified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeType {
    Type1,
    Type2,
    Type3,
}

pub fn node_type(node: &Node) -> Result<NodeType> {
    if node.is_origin() || node.is_unit() {
        return Err(Error::Diagram(format!(
            "{node:?} belongs to mu_r and has no skew node type"
        )));
    }
    let mut ones = 0usize;
    let mut twos = 0usize;
    let mut other = 0usize;
    for &c in node.coords() {
        match c {
            0 => {}
            1 => ones += 1,
            2 => twos += 1,
            _ => other += 1,
        }
    }
    Ok(if ones == 2 && twos == 0 && other == 0 {
        NodeType::Type1
    } else if ones == 0 && twos == 1 && other == 0 {
        NodeType::Type2
    } else {
        NodeType::Type3
    })
}

/// One component of a skew diagram: a maximal group of skew nodes whose
/// axis supports are connected. Components of a reducible skew lie in
/// mutually orthogonal hyperplanes.
#[derive(Clone, Debug)]
pub struct SkewComponent {
    /// Sorted 0-based axes supporting this component.
    pub axes: Vec<usize>,
    /// The component's nodes in canonical order.
    pub nodes: Vec<Node>,
    /// True when every node is Type1 (the component is in D).
    pub in_d: bool,
    /// Number of Type2 nodes.
    pub type2_count: usize,
}

/// The decomposition of lambda \ mu_r into components.
#[derive(Clone, Debug)]
pub struct SkewComponents {
    /// r of the mu_r the diagram was skewed against (= ambient dimension).
    pub base_rank: usize,
    pub components: Vec<SkewComponent>,
}

impl SkewComponents {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// A skew diagram is irreducible iff it has at most one component.
    pub fn is_irreducible(&self) -> bool {
        self.components.len() <= 1
    }

    /// True when some component lies entirely in D (all nodes Type1).
    pub fn has_d_component(&self) -> bool {
        self.components.iter().any(|c| c.in_d)
    }
}

fn require_strict(d: &FerrersDiagram) -> Result<()> {
    if !d.is_valid() {
        return Err(Error::Diagram(format!("{d:?} is not downward-closed")));
    }
    if !d.is_strict() {
        return Err(Error::Diagram(format!(
            "{d:?} is not strict (intrinsic dimension {} < ambient {})",
            d.intrinsic_dimension(),
            d.ambient_dim()
        )));
    }
    Ok(())
}

/// Nodes of lambda \ mu_r (everything that is not the origin or a unit).
pub fn skew_nodes(d: &FerrersDiagram) -> Result<Vec<&Node>> {
    require_strict(d)?;
    Ok(d.nodes()
        .iter()
        .filter(|n| !n.is_origin() && !n.is_unit())
        .collect())
}

/// Number of axes on which the skew lambda \ mu_r has nonzero support.
/// Always <= intrinsic dimension.
pub fn reduced_dimension(d: &FerrersDiagram) -> Result<usize> {
    let skew = skew_nodes(d)?;
    let mut used = vec![false; d.ambient_dim()];
    for n in skew {
        for i in n.support() {
            used[i] = true;
        }
    }
    Ok(used.iter().filter(|&&u| u).count())
}

/// Decompose the skew into components via axis connectivity: axes i, j are
/// joined when some skew node has nonzero coordinates on both, and a node
/// with single-axis support attaches to its one axis. Grouping skew nodes
/// by connected axis group gives the orthogonal-hyperplane splitting.
pub fn skew_components(d: &FerrersDiagram) -> Result<SkewComponents> {
    let skew = skew_nodes(d)?;
    let r = d.ambient_dim();

    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for n in &skew {
        let mut it = n.support();
        if let Some(first) = it.next() {
            for ax in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, ax));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }

    // group nodes by component root, deterministically ordered by root axis
    let mut by_root: std::collections::BTreeMap<usize, Vec<&Node>> = Default::default();
    for n in &skew {
        let first = n.support().next().expect("skew node has nonempty support");
        let root = find(&mut parent, first);
        by_root.entry(root).or_default().push(n);
    }

    let components = by_root
        .into_values()
        .map(|nodes| {
            let mut axes = BTreeSet::new();
            let mut in_d = true;
            let mut type2_count = 0usize;
            for n in &nodes {
                axes.extend(n.support());
                match node_type(n).expect("skew node") {
                    NodeType::Type1 => {}
                    NodeType::Type2 => {
                        in_d = false;
                        type2_count += 1;
                    }
                    NodeType::Type3 => in_d = false,
                }
            }
            SkewComponent {
                axes: axes.into_iter().collect(),
                nodes: nodes.into_iter().cloned().collect(),
                in_d,
                type2_count,
            }
        })
        .collect();

    Ok(SkewComponents {
        base_rank: r,
        components,
    })
}

/// True iff every skew node is Type1 (the diagram lies in D).
pub fn in_d(d: &FerrersDiagram) -> Result<bool> {
    let skew = skew_nodes(d)?;
    for n in skew {
        if node_type(n)? != NodeType::Type1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orbit size of a strict diagram under all permutations of its r axes:
/// r!/ord(H) by orbit-stabilizer, where H is the symmetry group. The cost
/// grows with r!; this is a test/desk utility, intended for r <= 8.
pub fn orbit_weight(d: &FerrersDiagram) -> Result<u64> {
    require_strict(d)?;
    let r = d.ambient_dim();
    let mut orbit: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    let mut perm: Vec<usize> = (0..r).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let image = d.permute_axes(p).expect("valid permutation");
        orbit.insert(image.to_columns());
    });
    Ok(orbit.len() as u64)
}

fn permute_all(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}
