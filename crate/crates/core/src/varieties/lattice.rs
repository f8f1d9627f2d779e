use std::collections::HashSet;
use std::fmt::Write as _;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::limits::Limits;

use super::{si_factors, SIClassCatalog};

/// A subvariety, given by the down-set of SI classes it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyNode {
    /// Class indices, ascending.
    pub members: Vec<usize>,
    /// The maximal members, which generate the variety.
    pub maximal: Vec<usize>,
    pub label: String,
}

/// The lattice of down-sets of the SI poset, with covering edges `(lower, upper)`.
#[derive(Clone, Debug)]
pub struct VarietyLattice {
    catalog: SIClassCatalog,
    nodes: Vec<VarietyNode>,
    edges: Vec<(usize, usize)>,
}

fn members_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

impl VarietyLattice {
    pub fn from_catalog(catalog: SIClassCatalog, limits: &Limits) -> Result<Self> {
        let n = catalog.len();
        if n > 64 {
            return Err(Error::SizeBound {
                what: "SI classes in a variety lattice",
                actual: n,
                limit: 64,
            });
        }
        let below: Vec<u64> = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&i| i != j && catalog.leq(i, j))
                    .fold(0u64, |m, i| m | 1 << i)
            })
            .collect();

        let mut seen: HashSet<u64> = HashSet::from([0]);
        let mut masks = vec![0u64];
        let mut i = 0;
        while i < masks.len() {
            let d = masks[i];
            for (c, &under) in below.iter().enumerate() {
                if d >> c & 1 == 0 && under & !d == 0 {
                    let e = d | 1 << c;
                    if seen.insert(e) {
                        Limits::check("subvariety lattice nodes", seen.len(), limits.max_ideals)?;
                        masks.push(e);
                    }
                }
            }
            i += 1;
        }
        masks.sort_by(|&x, &y| {
            x.count_ones()
                .cmp(&y.count_ones())
                .then_with(|| members_of(x).cmp(&members_of(y)))
        });

        let nodes = masks
            .iter()
            .map(|&m| {
                let members = members_of(m);
                let maximal: Vec<usize> = members
                    .iter()
                    .copied()
                    .filter(|&j| !members.iter().any(|&k| k != j && below[k] >> j & 1 == 1))
                    .collect();
                let label = if maximal.is_empty() {
                    "T".to_string()
                } else {
                    let mut names: Vec<&str> = maximal.iter().map(|&j| catalog.classes()[j].name.as_str()).collect();
                    names.sort_unstable();
                    format!("V({})", names.join(","))
                };
                VarietyNode {
                    members,
                    maximal,
                    label,
                }
            })
            .collect();

        let index: std::collections::HashMap<u64, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut edges = Vec::new();
        for (lo, &m) in masks.iter().enumerate() {
            for c in 0..n {
                if let Some(&hi) = index.get(&(m | 1 << c)).filter(|_| m >> c & 1 == 0) {
                    edges.push((lo, hi));
                }
            }
        }
        edges.sort_unstable();
        Ok(VarietyLattice { catalog, nodes, edges })
    }

    pub fn catalog(&self) -> &SIClassCatalog {
        &self.catalog
    }

    pub fn nodes(&self) -> &[VarietyNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes with exactly one lower cover: the varieties generated by a single SI class.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&v| self.edges.iter().filter(|&&(_, hi)| hi == v).count() == 1)
            .collect()
    }

    pub fn node_by_label(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }

    pub fn is_cover(&self, lower: usize, upper: usize) -> bool {
        self.edges.binary_search(&(lower, upper)).is_ok()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.nodes[x].members.iter().all(|m| self.nodes[y].members.contains(m))
    }
}

/// `Λ(V(gens))`.
pub fn subvariety_lattice(gens: &[FiniteAlgebra], limits: &Limits) -> Result<VarietyLattice> {
    VarietyLattice::from_catalog(si_factors(gens, limits)?, limits)
}

/// DOT text: nodes `v0…` in canonical order, labelled by variety, edges upward along covers.
pub fn emit_dot(l: &VarietyLattice) -> String {
    let mut out = String::from("digraph varieties {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, node) in l.nodes.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{}\"];", node.label.replace('"', "\\\""));
    }
    for &(lo, hi) in &l.edges {
        let _ = writeln!(out, "  v{lo} -> v{hi};");
    }
    out.push_str("}\n");
    out
}
