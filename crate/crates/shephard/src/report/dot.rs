use crate::complex::{FundamentalDomainData, SphericalComplexBall};
use crate::dihedral::Gen;
use crate::graph::ExtendedPresentationGraph;
use std::fmt::Write;

/// Undirected DOT graph; cosets of <s> are circles and cosets of <t> boxes.
pub fn theta_dot(ball: &SphericalComplexBall) -> String {
    let [p, q, r] = ball.triple;
    let mut out = format!("graph theta_hat_{p}_{q}_{r} {{\n");
    for (i, v) in ball.vertices.iter().enumerate() {
        let shape = if v.kind == Gen::S { "circle" } else { "box" };
        let _ = writeln!(out, "  {i} [shape={shape}, label=\"{}\"];", v.witness);
    }
    for (a, b) in &ball.edges {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(g: &ExtendedPresentationGraph) -> String {
    let mut out = String::from("graph presentation {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  \"{}\" [label=\"{} ({})\"];", v.id, v.id, v.label);
    }
    for e in g.edges() {
        let (a, b) = (&g.vertices()[e.a].id, &g.vertices()[e.b].id);
        let _ = writeln!(out, "  \"{a}\" -- \"{b}\" [label=\"{}\"];", e.label);
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the spherical subsets, directed upward.
pub fn domain_dot(d: &FundamentalDomainData) -> String {
    let mut out = String::from("digraph domain {\n");
    for (i, s) in d.poset.iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{{{}}}\"];", s.vertices.join(","));
    }
    for c in d.cells.iter().filter(|c| c.dimension == 1) {
        let _ = writeln!(out, "  {} -> {};", c.lower, c.upper);
    }
    out.push_str("}\n");
    out
}
