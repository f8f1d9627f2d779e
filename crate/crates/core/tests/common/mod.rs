#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use twistlab::catalog::{boolean2, dp_chain, nm_chain, wajsberg_chain};
use twistlab::twist::{
    dp_upset_subalgebra, enumerate_admissible, minimal_admissible_algebra, twist_product, wajsberg_admissible, XPoint,
};
use twistlab::varieties::{si_factors, SIClassCatalog, VarietyLattice};
use twistlab::{FiniteAlgebra, Limits};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// A drawn Hasse diagram: labelled points and upward edges between them.
pub struct Figure {
    pub nodes: Vec<(String, Option<String>)>,
    pub edges: Vec<(usize, usize)>,
}

pub fn load_figure(name: &str) -> Figure {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture exists");
    let mut nodes = Vec::new();
    let mut at: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let f: Vec<&str> = line.split_whitespace().collect();
        match f[0] {
            "node" => {
                let key = format!("{} {}", f[1], f[2]);
                at.insert(key.clone(), nodes.len());
                nodes.push((key, f.get(3).map(|s| s.to_string())));
            }
            "edge" => {
                let lo = at[&format!("{} {}", f[1], f[2])];
                let hi = at[&format!("{} {}", f[3], f[4])];
                edges.push((lo, hi));
            }
            other => panic!("unexpected fixture line kind {other}"),
        }
    }
    Figure { nodes, edges }
}

impl Figure {
    /// `below[v]`: every node at or under `v` along the drawn edges.
    fn down_closure(&self) -> Vec<BTreeSet<usize>> {
        let n = self.nodes.len();
        let mut below: Vec<BTreeSet<usize>> = (0..n).map(|v| BTreeSet::from([v])).collect();
        loop {
            let mut changed = false;
            for &(lo, hi) in &self.edges {
                let add: Vec<usize> = below[lo].iter().copied().collect();
                for x in add {
                    changed |= below[hi].insert(x);
                }
            }
            if !changed {
                return below;
            }
        }
    }

    /// For each node, the names of the labelled join-irreducibles under it.
    pub fn keys(&self) -> Vec<BTreeSet<String>> {
        self.down_closure()
            .iter()
            .map(|d| {
                d.iter()
                    .filter_map(|&v| self.nodes[v].1.clone())
                    .filter(|l| l != "T")
                    .collect()
            })
            .collect()
    }
}

pub fn lattice_keys(l: &VarietyLattice) -> Vec<BTreeSet<String>> {
    l.nodes()
        .iter()
        .map(|n| {
            n.members
                .iter()
                .map(|&c| l.catalog().classes()[c].name.clone())
                .collect()
        })
        .collect()
}

/// Checks that the drawn diagram is the computed lattice: a bijection of nodes
/// through their labelled join-irreducibles that carries edges to covers.
pub fn compare_with_figure(l: &VarietyLattice, fig: &Figure) -> Result<(), String> {
    let fk = fig.keys();
    let lk = lattice_keys(l);
    if fk.len() != lk.len() {
        return Err(format!("{} drawn nodes, {} computed", fk.len(), lk.len()));
    }
    let mut to_lattice = vec![usize::MAX; fk.len()];
    for (v, k) in fk.iter().enumerate() {
        match lk.iter().position(|m| m == k) {
            Some(i) => to_lattice[v] = i,
            None => return Err(format!("drawn node {} has no computed node {k:?}", fig.nodes[v].0)),
        }
    }
    let hit: BTreeSet<usize> = to_lattice.iter().copied().collect();
    if hit.len() != lk.len() {
        return Err("two drawn nodes map to one variety".into());
    }
    for (v, (pos, label)) in fig.nodes.iter().enumerate() {
        if let Some(label) = label {
            let want = if label == "T" {
                "T".to_string()
            } else {
                format!("V({label})")
            };
            if l.nodes()[to_lattice[v]].label != want {
                return Err(format!(
                    "label {label} at {pos} lands on {}",
                    l.nodes()[to_lattice[v]].label
                ));
            }
        }
    }
    let mut drawn: Vec<(usize, usize)> = fig.edges.iter().map(|&(a, b)| (to_lattice[a], to_lattice[b])).collect();
    drawn.sort_unstable();
    drawn.dedup();
    if drawn.len() != fig.edges.len() {
        return Err("duplicate drawn edges".into());
    }
    if drawn != l.edges() {
        let missing: Vec<_> = l.edges().iter().filter(|e| !drawn.contains(e)).collect();
        let extra: Vec<_> = drawn.iter().filter(|e| !l.edges().contains(e)).collect();
        return Err(format!("edges differ: missing {missing:?}, extra {extra:?}"));
    }
    Ok(())
}

pub fn k3() -> FiniteAlgebra {
    minimal_admissible_algebra(&boolean2()).unwrap().with_name("K3")
}

pub fn k4() -> FiniteAlgebra {
    twist_product(&boolean2()).unwrap().with_name("K4")
}

pub fn wajsberg_names(ns: &[usize]) -> Vec<(FiniteAlgebra, String)> {
    let mut out = vec![(k3(), "K3".to_string()), (k4(), "K4".to_string())];
    for &n in ns {
        for r in 0..=n {
            out.push((wajsberg_admissible(r, n).unwrap(), format!("K{r},{n}")));
        }
    }
    out
}

/// `DP5{42,33}` names `K_5^U` with `U` generated by `(4,2)` and `(3,3)`.
pub fn dp_name(n: usize, gens: &[XPoint]) -> String {
    let g: Vec<String> = gens.iter().map(|(i, j)| format!("{i}{j}")).collect();
    format!("DP{n}{{{}}}", g.join(","))
}

pub fn parse_dp_name(name: &str) -> (usize, Vec<XPoint>) {
    let (n, rest) = name.trim_start_matches("DP").split_once('{').unwrap();
    let gens = rest
        .trim_end_matches('}')
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            let b = s.as_bytes();
            ((b[0] - b'0') as usize, (b[1] - b'0') as usize)
        })
        .collect();
    (n.parse().unwrap(), gens)
}

pub fn dp_algebra(n: usize, gens: &[XPoint]) -> FiniteAlgebra {
    let xn = twistlab::twist::dp_xn_poset(n).unwrap();
    let u = xn.upset_generated(gens);
    let k = twist_product(&dp_chain(n).unwrap()).unwrap();
    dp_upset_subalgebra(n, &u).unwrap().to_algebra(&k, dp_name(n, gens))
}

/// Names drawn in a figure, each with an algebra in its class.
pub fn names_for(figure_names: &[String]) -> Vec<(FiniteAlgebra, String)> {
    let mut out = wajsberg_names(&[2, 4]);
    for name in figure_names.iter().filter(|n| n.starts_with("DP")) {
        let (n, gens) = parse_dp_name(name);
        out.push((dp_algebra(n, &gens), name.clone()));
    }
    out
}

/// The admissible subalgebras of `K(a)` by size, named `K0(X)`, `K1(X)`, ... and `K(X)`.
pub fn admissible_names(a: &FiniteAlgebra, label: &str) -> Vec<(FiniteAlgebra, String)> {
    let k = twist_product(a).unwrap();
    let mut adm = enumerate_admissible(a, &Limits::default()).unwrap();
    adm.sort_by_key(|s| s.len());
    let last = adm.len() - 1;
    adm.iter()
        .enumerate()
        .map(|(i, s)| {
            let name = if i == last {
                format!("K({label})")
            } else {
                format!("K{i}({label})")
            };
            (s.to_algebra(&k, name.clone()), name)
        })
        .collect()
}

pub fn n5_names() -> Vec<(FiniteAlgebra, String)> {
    let mut out = vec![(k3(), "K3".to_string()), (k4(), "K4".to_string())];
    out.extend(admissible_names(&wajsberg_chain(2).unwrap(), "L2"));
    out.extend(admissible_names(&nm_chain(4).unwrap(), "N4"));
    out.extend(admissible_names(&nm_chain(5).unwrap(), "N5"));
    out
}

/// Renames every class and checks that each name landed on its own class.
pub fn rename_all(catalog: &mut SIClassCatalog, names: &[(FiniteAlgebra, String)]) {
    catalog.rename(names);
    let got: BTreeSet<&str> = catalog.classes().iter().map(|c| c.name.as_str()).collect();
    assert_eq!(got.len(), catalog.len(), "two classes share a name");
}

pub fn named_lattice(gen: FiniteAlgebra, names: &[(FiniteAlgebra, String)]) -> VarietyLattice {
    let limits = Limits::default();
    let mut catalog = si_factors(&[gen], &limits).unwrap();
    rename_all(&mut catalog, names);
    VarietyLattice::from_catalog(catalog, &limits).unwrap()
}

pub fn size_names(catalog: &SIClassCatalog) -> Vec<(FiniteAlgebra, String)> {
    catalog
        .classes()
        .iter()
        .map(|c| (c.algebra.clone(), format!("K{}", c.algebra.size())))
        .collect()
}

pub fn figure_names(fig: &Figure) -> Vec<String> {
    fig.nodes
        .iter()
        .filter_map(|n| n.1.clone())
        .filter(|l| l != "T")
        .collect()
}

/// Dots of the drawn admissible carriers of `K(N5)`, as pairs of element indices.
pub fn n5_drawn_carriers() -> Vec<(String, BTreeSet<(usize, usize)>)> {
    let text = std::fs::read_to_string(data_path("admissibles_k_n5.txt")).unwrap();
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let mut f = l.split_whitespace();
            let name = f.next().unwrap().to_string();
            let pairs = f
                .map(|d| {
                    let (x, y) = d.split_once(',').unwrap();
                    let (dx, y): (i64, i64) = (x.parse().unwrap(), y.parse().unwrap());
                    let s = y - 2;
                    let (p, q) = ((dx + s) / 2, (s - dx) / 2);
                    (p as usize, (4 - q) as usize)
                })
                .collect();
            (name, pairs)
        })
        .collect()
}

pub fn limits() -> Limits {
    Limits::default()
}

/// Named chains and the witness `C5`: the seeds of the battery.
pub fn base_battery() -> Vec<FiniteAlgebra> {
    use twistlab::catalog::{godel_chain, rigid_witness_c5, trivial};
    let mut out = vec![trivial(), boolean2(), rigid_witness_c5()];
    out.extend((3..=6).map(|n| godel_chain(n).unwrap()));
    out.extend((1..=5).map(|n| wajsberg_chain(n).unwrap()));
    out.extend((2..=7).map(|k| nm_chain(k).unwrap()));
    out.extend((2..=6).map(|n| dp_chain(n).unwrap()));
    out
}

/// The seeds plus their ordinal sums and rotations of at most `max` elements.
pub fn battery(max: usize) -> Vec<FiniteAlgebra> {
    use twistlab::catalog::{connected_rotation, disconnected_rotation, ordinal_sum};
    let base = base_battery();
    let mut out: Vec<FiniteAlgebra> = base.iter().filter(|a| a.size() <= max).cloned().collect();
    let nontrivial: Vec<&FiniteAlgebra> = base.iter().filter(|a| a.size() > 1).collect();
    for a in &nontrivial {
        for b in &nontrivial {
            if a.size() + b.size() - 1 <= max {
                out.push(ordinal_sum(a, b).unwrap());
            }
        }
    }
    for a in &base {
        if 2 * a.size() < max {
            out.push(connected_rotation(a).unwrap());
        }
        if 2 * a.size() <= max {
            out.push(disconnected_rotation(a).unwrap());
        }
    }
    out
}
