//! The refinement graph `G_d`, the closure graph `C_d`, their components,
//! and connectedness verdicts for the moduli space of genus `g`.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::partition::{d_from_genus, enumerate_omega, is_valid_entry, Partition};
use crate::strata::{dimension, StratumDim};
use crate::{ensure_prime, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GraphKind {
    Gd,
    Cd,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Gd => "Gd",
            GraphKind::Cd => "Cd",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EdgeKind {
    Gd2split,
    Gd3split,
    CdA,
    CdB,
    CdC,
    CdD,
    CdE,
}

/// Why an edge exists: which entry was split and into which parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeLabel {
    pub kind: EdgeKind,
    pub entry: u32,
    pub parts: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub labels: Vec<EdgeLabel>,
}

impl Edge {
    pub fn has(&self, kind: EdgeKind) -> bool {
        self.labels.iter().any(|l| l.kind == kind)
    }
}

#[derive(Clone, Debug)]
pub struct StratGraph {
    pub p: u32,
    pub d: u32,
    pub kind: GraphKind,
    pub vertices: Vec<StratumDim>,
    pub edges: Vec<Edge>,
}

struct Builder {
    p: u32,
    index: HashMap<Vec<u32>, usize>,
    vertices: Vec<Partition>,
    edges: Vec<Edge>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl Builder {
    fn new(p: u32, d: u32) -> Result<Builder> {
        let vertices = enumerate_omega(p, d)?;
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.entries().to_vec(), i))
            .collect();
        Ok(Builder {
            p,
            index,
            vertices,
            edges: Vec::new(),
            edge_index: HashMap::new(),
        })
    }

    fn add(&mut self, from: usize, k: usize, parts: &[u32], kind: EdgeKind) {
        let v = &self.vertices[from];
        let entry = v.entries()[k];
        debug_assert!(parts.iter().all(|&x| is_valid_entry(self.p, x)));
        debug_assert_eq!(parts.iter().sum::<u32>(), entry);
        let mut w: Vec<u32> = v.entries().to_vec();
        w.remove(k);
        w.extend_from_slice(parts);
        w.sort_unstable_by(|a, b| b.cmp(a));
        let to = self.index[&w];
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let label = EdgeLabel {
            kind,
            entry,
            parts: sorted,
        };
        match self.edge_index.get(&(from, to)) {
            Some(&i) => {
                if !self.edges[i].labels.contains(&label) {
                    self.edges[i].labels.push(label);
                }
            }
            None => {
                self.edge_index.insert((from, to), self.edges.len());
                self.edges.push(Edge {
                    from,
                    to,
                    labels: vec![label],
                });
            }
        }
    }

    /// Positions of the distinct entries of vertex `i`.
    fn distinct_positions(&self, i: usize) -> Vec<usize> {
        let e = self.vertices[i].entries();
        (0..e.len())
            .filter(|&k| k == 0 || e[k - 1] != e[k])
            .collect()
    }

    fn finish(mut self, d: u32, kind: GraphKind) -> StratGraph {
        for e in &mut self.edges {
            e.labels.sort_by(|a, b| a.kind.cmp(&b.kind));
        }
        self.edges.sort_by_key(|e| (e.from, e.to));
        let vertices = self
            .vertices
            .into_iter()
            .map(|partition| StratumDim {
                dim: dimension(&partition),
                partition,
            })
            .collect();
        StratGraph {
            p: self.p,
            d,
            kind,
            vertices,
            edges: self.edges,
        }
    }
}

/// Two-part splits `e = a + b`, `a >= b`, with both parts valid.
fn two_splits(p: u32, e: u32) -> impl Iterator<Item = [u32; 2]> {
    (2..=e / 2)
        .map(move |b| [e - b, b])
        .filter(move |s| is_valid_entry(p, s[0]) && is_valid_entry(p, s[1]))
}

/// Three-part splits `a >= b >= c` of `e` with every part `= (p+1)/2 mod p`.
fn uniform_three_splits(p: u32, e: u32) -> Vec<[u32; 3]> {
    if p == 2 {
        return Vec::new();
    }
    let h = (p + 1) / 2;
    let mut out = Vec::new();
    let mut c = h;
    while 3 * c <= e {
        let mut b = c;
        while c + 2 * b <= e {
            let a = e - b - c;
            if a % p == h % p {
                out.push([a, b, c]);
            }
            b += p;
        }
        c += p;
    }
    out
}

/// The cover graph of refinement on `Omega_d`.
pub fn build_gd(p: u32, d: u32) -> Result<StratGraph> {
    let mut g = Builder::new(p, d)?;
    for i in 0..g.vertices.len() {
        for k in g.distinct_positions(i) {
            let e = g.vertices[i].entries()[k];
            for s in two_splits(p, e) {
                g.add(i, k, &s, EdgeKind::Gd2split);
            }
            for s in uniform_three_splits(p, e) {
                g.add(i, k, &s, EdgeKind::Gd3split);
            }
        }
    }
    Ok(g.finish(d, GraphKind::Gd))
}

/// Single-entry splits known to be realized by closures of strata.
pub fn build_cd(p: u32, d: u32) -> Result<StratGraph> {
    let mut g = Builder::new(p, d)?;
    let fl = |x: u32| (x - 1) / p;
    for i in 0..g.vertices.len() {
        for k in g.distinct_positions(i) {
            let e = g.vertices[i].entries()[k];
            for s in two_splits(p, e) {
                if fl(e) > fl(s[0]) + fl(s[1]) {
                    g.add(i, k, &s, EdgeKind::CdA);
                }
            }
            for s in uniform_three_splits(p, e) {
                g.add(i, k, &s, EdgeKind::CdB);
            }
            if p >= 3 && e > p - 1 {
                let rest = e - (p - 1);
                for s in two_splits(p, rest) {
                    debug_assert!(
                        [s[0], s[1], s[0] + s[1] - 1].iter().all(|&x| x % p != 1),
                        "side conditions follow from entry validity"
                    );
                    g.add(i, k, &[p - 1, s[0], s[1]], EdgeKind::CdC);
                }
            }
            for n in 1..p {
                if e == (n + 1) * (p - n + 1) {
                    debug_assert!(((n + 1) * p - n * n) % p != 0);
                    let parts = vec![n + 1; (p - n + 1) as usize];
                    g.add(i, k, &parts, EdgeKind::CdD);
                }
            }
            if p == 5 && e == 9 {
                g.add(i, k, &[3, 2, 2, 2], EdgeKind::CdE);
            }
            if p == 5 && e == 10 {
                g.add(i, k, &[3, 3, 2, 2], EdgeKind::CdE);
            }
        }
    }
    Ok(g.finish(d, GraphKind::Cd))
}

impl StratGraph {
    pub fn vertex_index(&self, entries: &[u32]) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.partition.entries() == entries)
    }

    pub fn find_edge(&self, from: &[u32], to: &[u32]) -> Option<&Edge> {
        let (a, b) = (self.vertex_index(from)?, self.vertex_index(to)?);
        self.edges.iter().find(|e| e.from == a && e.to == b)
    }

    /// Undirected components, each sorted, ordered by least member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        for e in &self.edges {
            let (a, b) = (root(&mut parent, e.from), root(&mut parent, e.to));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for v in 0..n {
            let r = root(&mut parent, v);
            let s = *slot.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[s].push(v);
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Vertices not touched by any edge.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut touched = vec![false; self.vertices.len()];
        for e in &self.edges {
            touched[e.from] = true;
            touched[e.to] = true;
        }
        (0..self.vertices.len()).filter(|&i| !touched[i]).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {}_p{}_d{} {{", self.kind.name(), self.p, self.d);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\", dim={}];", v.partition, v.dim);
        }
        for e in &self.edges {
            let kinds: Vec<String> = e.labels.iter().map(|l| format!("{:?}", l.kind)).collect();
            let _ = writeln!(
                s,
                "  n{} -> n{} [kind=\"{}\"];",
                e.from,
                e.to,
                kinds.join(",")
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "d": self.d,
            "kind": self.kind.name(),
            "vertices": self.vertices.iter().map(|v| json!({
                "partition": v.partition,
                "dim": v.dim,
            })).collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Connected,
    Disconnected,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Justification {
    /// The closure graph is connected.
    CdConnected,
    /// Every stratum has dimension `d - 1`, so none lies in the closure of
    /// another and each is its own component.
    EqualDimensionStrata,
    /// No curve of this genus exists.
    EmptyModuli,
    /// At most one stratum.
    Singleton,
    Unknown,
}

/// Comparison with the large-genus connectivity bound, informational only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundInfo {
    /// `p(p-1)^2/4`, rounded up.
    pub threshold: u64,
    /// Whether `d + 2` reaches the threshold (genus form of the bound).
    pub genus_form_met: bool,
    /// Whether `d` itself reaches the threshold.
    pub degree_form_met: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityReport {
    pub p: u32,
    pub g: u64,
    pub d: Option<u32>,
    pub status: Status,
    pub justification: Justification,
    pub components: Vec<Vec<Partition>>,
    pub bound: Option<BoundInfo>,
}

fn bound_info(p: u32, d: u32) -> BoundInfo {
    let p = p as u64;
    let threshold = (p * (p - 1) * (p - 1)).div_ceil(4);
    BoundInfo {
        threshold,
        genus_form_met: d as u64 + 2 >= threshold,
        degree_form_met: d as u64 >= threshold,
    }
}

/// Connectedness of the moduli space of genus `g` covers in characteristic `p`.
pub fn connectivity_report(p: u32, g: u64) -> Result<ConnectivityReport> {
    ensure_prime(p)?;
    let Some(d) = d_from_genus(p, g)? else {
        return Ok(ConnectivityReport {
            p,
            g,
            d: None,
            status: Status::Connected,
            justification: Justification::EmptyModuli,
            components: Vec::new(),
            bound: None,
        });
    };
    connectivity_report_d(p, d)
}

/// [`connectivity_report`] indexed by `d` instead of the genus.
pub fn connectivity_report_d(p: u32, d: u32) -> Result<ConnectivityReport> {
    let cd = build_cd(p, d)?;
    let comps = cd.connected_components();
    let n = cd.vertices.len();
    let top = d as i64 - 1;
    let (status, justification) = if n <= 1 {
        (Status::Connected, Justification::Singleton)
    } else if comps.len() == 1 {
        (Status::Connected, Justification::CdConnected)
    } else if cd.vertices.iter().all(|v| v.dim == top) {
        (Status::Disconnected, Justification::EqualDimensionStrata)
    } else {
        (Status::Unknown, Justification::Unknown)
    };
    let components = comps
        .iter()
        .map(|c| {
            c.iter()
                .map(|&i| cd.vertices[i].partition.clone())
                .collect()
        })
        .collect();
    Ok(ConnectivityReport {
        p,
        g: d as u64 * (p as u64 - 1) / 2,
        d: Some(d),
        status,
        justification,
        components,
        bound: Some(bound_info(p, d)),
    })
}

/// True iff every stratum with an entry `>= p` lies in the `C_d` component
/// of `{d + 2}`. Requires `{d + 2}` to be a valid partition.
pub fn high_entry_strata_share_component(p: u32, d: u32) -> Result<bool> {
    if !is_valid_entry(p, d + 2) {
        return Err(Error::Precondition(format!(
            "{} is not a valid entry mod {p}",
            d + 2
        )));
    }
    let cd = build_cd(p, d)?;
    let comps = cd.connected_components();
    let comp_of = |i: usize| comps.iter().position(|c| c.contains(&i)).expect("covered");
    let root = comp_of(cd.vertex_index(&[d + 2]).expect("single entry partition"));
    Ok(cd
        .vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| v.partition.entries()[0] >= p)
        .all(|(i, _)| comp_of(i) == root))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gd_small() {
        // Omega_4 for p = 5 is {4,2}, {3,3}, {2,2,2}; only {4,2} splits further.
        let g = build_gd(5, 4).unwrap();
        assert_eq!(g.vertices.len(), 3);
        assert_eq!(g.edges.len(), 1);
        assert_eq!(g.connected_components().len(), 2);
    }

    #[test]
    fn three_splits() {
        assert_eq!(uniform_three_splits(5, 9), vec![[3, 3, 3]]);
        assert_eq!(uniform_three_splits(5, 14), vec![[8, 3, 3]]);
        assert!(uniform_three_splits(2, 6).is_empty());
    }

    #[test]
    fn cd_labels_accumulate() {
        // {10} -> {5,5} is both a residue-drop split and the n = 4 case.
        let c = build_cd(5, 8).unwrap();
        let e = c.find_edge(&[10], &[5, 5]).unwrap();
        assert!(e.has(EdgeKind::CdA) && e.has(EdgeKind::CdD));
    }

    #[test]
    fn empty_moduli() {
        let r = connectivity_report(5, 3).unwrap();
        assert_eq!(r.status, Status::Connected);
        assert_eq!(r.justification, Justification::EmptyModuli);
    }
}
