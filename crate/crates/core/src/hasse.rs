//! Hasse-Hilbert diagrams: the cover graph of the support of an Artinian
//! algebra, vertex-weighted by the Hilbert function.

use std::fmt::Write as _;

use crate::algebra::AlgebraSupport;
use crate::error::{Error, Result};
use crate::grading::{cover_relations, GroupElement, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseHilbertDiagram {
    pub group: GroupSpec,
    /// `(degree, h_g)`, by certificate level and then by element.
    pub nodes: Vec<(GroupElement, usize)>,
    /// Cover pairs as indices into `nodes`.
    pub edges: Vec<(usize, usize)>,
    pub greatest: Option<usize>,
    pub symmetric_about: Option<GroupElement>,
}

pub fn build_diagram(support: &AlgebraSupport) -> Result<HasseHilbertDiagram> {
    if !support.is_artinian() {
        return Err(Error::NotArtinian(
            "the Hasse-Hilbert diagram is only finite for Artinian algebras".into(),
        ));
    }
    let ring = support.ring();
    let nodes = support.hilbert_function();
    let degrees: Vec<GroupElement> = nodes.iter().map(|(g, _)| g.clone()).collect();
    let index = |g: &GroupElement| degrees.iter().position(|d| d == g).expect("node of the support");
    let edges = cover_relations(&degrees, ring)?
        .iter()
        .map(|(a, b)| (index(a), index(b)))
        .collect();
    let greatest = support.greatest().map(index);
    let mut d = HasseHilbertDiagram {
        group: ring.group().clone(),
        nodes,
        edges,
        greatest,
        symmetric_about: None,
    };
    if let Some(i) = greatest {
        let omega = d.nodes[i].0.clone();
        if symmetry_check(&d, &omega) {
            d.symmetric_about = Some(omega);
        }
    }
    Ok(d)
}

/// True iff `g -> omega - g` permutes the nodes and preserves weights.
pub fn symmetry_check(d: &HasseHilbertDiagram, omega: &GroupElement) -> bool {
    d.nodes.iter().all(|(g, h)| {
        let mirror = d.group.sub(omega, g);
        d.nodes.iter().any(|(m, w)| *m == mirror && w == h)
    })
}

/// GraphViz DOT rendering; node `i` is `"n<i>"` with label `"h_g\n(g)"`.
pub fn to_dot(d: &HasseHilbertDiagram) -> String {
    let mut out = String::from("digraph {\n");
    for (i, (g, h)) in d.nodes.iter().enumerate() {
        let _ = writeln!(out, "  \"n{i}\" [label=\"{h}\\n{}\"];", d.group.format(g));
    }
    for (a, b) in &d.edges {
        let _ = writeln!(out, "  \"n{a}\" -> \"n{b}\";");
    }
    out.push_str("}\n");
    out
}

/// Plain adjacency listing, one node per line: `(g) [h] -> (h1), (h2)`.
pub fn to_adjacency(d: &HasseHilbertDiagram) -> String {
    let mut out = String::new();
    for (i, (g, h)) in d.nodes.iter().enumerate() {
        let succ: Vec<String> = d
            .edges
            .iter()
            .filter(|(a, _)| *a == i)
            .map(|(_, b)| d.group.format(&d.nodes[*b].0))
            .collect();
        let _ = write!(out, "{} [{h}]", d.group.format(g));
        if !succ.is_empty() {
            let _ = write!(out, " -> {}", succ.join(", "));
        }
        out.push('\n');
    }
    out
}

/// Reads back the node and edge sets written by [`to_dot`].
pub fn parse_dot(text: &str, group: &GroupSpec) -> Result<(Vec<(GroupElement, usize)>, Vec<(usize, usize)>)> {
    let bad = |line: usize, msg: &str| Error::Parse {
        offset: line,
        message: msg.to_string(),
    };
    let mut ids: Vec<String> = Vec::new();
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    if lines.first() != Some(&"digraph {") || lines.last() != Some(&"}") {
        return Err(bad(0, "expected `digraph { ... }`"));
    }
    for (n, line) in lines.iter().enumerate().take(lines.len() - 1).skip(1) {
        let body = line
            .strip_suffix(';')
            .ok_or_else(|| bad(n, "missing `;`"))?;
        if let Some((lhs, rhs)) = body.split_once("->") {
            let find = |s: &str| {
                let id = s.trim().trim_matches('"');
                ids.iter().position(|x| x == id).ok_or_else(|| bad(n, "edge to an undeclared node"))
            };
            edges.push((find(lhs)?, find(rhs)?));
        } else {
            let (id, attrs) = body.split_once(' ').ok_or_else(|| bad(n, "malformed node"))?;
            let label = attrs
                .trim()
                .strip_prefix("[label=\"")
                .and_then(|s| s.strip_suffix("\"]"))
                .ok_or_else(|| bad(n, "malformed label"))?;
            let (h, g) = label.split_once("\\n").ok_or_else(|| bad(n, "label lacks a degree"))?;
            let h: usize = h.parse().map_err(|_| bad(n, "weight is not an integer"))?;
            nodes.push((group.parse_element(g)?, h));
            ids.push(id.trim_matches('"').to_string());
        }
    }
    Ok((nodes, edges))
}
