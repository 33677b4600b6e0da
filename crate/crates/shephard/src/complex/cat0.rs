use super::theta::{build_theta_hat_ball, SphericalComplexBall};
use crate::dihedral::{Gen, SyllableWord};
use crate::error::{Error, Result};
use crate::graph::{
    is_hyperbolic_type, is_two_dimensional, Decision, ExtendedPresentationGraph, Label,
};
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cat0Verdict {
    CertifiedAtRadius,
    Refuted,
    Inapplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeStatus {
    /// Finite edge group: its link is a finite graph of the required girth.
    FiniteGroup,
    /// No cycle shorter than the requirement inside the ball.
    Certified,
    Refuted,
}

/// Radius of the ball searched for each edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind", content = "radius")]
pub enum RadiusPolicy {
    /// 2m + 4 for an edge labeled m.
    TwiceLabelPlusFour,
    Fixed(u32),
}

impl RadiusPolicy {
    pub fn radius(self, m: u32) -> u32 {
        match self {
            RadiusPolicy::TwiceLabelPlusFour => 2 * m + 4,
            RadiusPolicy::Fixed(r) => r,
        }
    }
}

/// A coset on a short cycle: its type and a word for one of its elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CosetWitness {
    pub kind: Gen,
    pub element: SyllableWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ShortestCycle {
    pub length: usize,
    pub cosets: Vec<CosetWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgeCertificate {
    pub a: String,
    pub b: String,
    #[serde(rename = "pA")]
    pub p_a: u32,
    pub m: u32,
    #[serde(rename = "pB")]
    pub p_b: u32,
    pub edge_group_finite: bool,
    pub required_girth: usize,
    /// Radius asked for by the policy.
    pub requested_radius: u32,
    /// Radius of the ball actually searched, after any budget fallback.
    pub certified_radius: Option<u32>,
    pub ball_vertices: Option<usize>,
    pub shortest_cycle_found: Option<ShortestCycle>,
    pub status: EdgeStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Cat0Certificate {
    pub two_dimensional: bool,
    pub radius_policy: RadiusPolicy,
    pub per_edge: Vec<EdgeCertificate>,
    pub verdict: Cat0Verdict,
    /// Smallest radius over the certified infinite edges.
    pub certified_radius: Option<u32>,
    /// Hyperbolicity of the Coxeter group, which makes the development hyperbolic.
    pub development_hyperbolic: Decision,
    pub assumptions: Vec<String>,
    pub reason: Option<String>,
}

const ASSUMPTIONS: [&str; 3] = [
    "links of the fundamental-domain vertices are CAT(1) for every spherical subset, as for Artin and Coxeter groups",
    "the group acts with a strict fundamental domain, so checking cycles through the base coset covers every vertex of the link",
    "balls are finite: the girth bound holds within the stated radius",
];

fn witness_cycle(ball: &SphericalComplexBall, vertices: &[u32]) -> Vec<CosetWitness> {
    vertices
        .iter()
        .map(|&v| {
            let x = &ball.vertices[v as usize];
            CosetWitness {
                kind: x.kind,
                element: x.witness.clone(),
            }
        })
        .collect()
}

struct EdgeScan {
    radius: Option<u32>,
    vertices: Option<usize>,
    cycle: Option<ShortestCycle>,
}

/// Search the link of one edge, halving the radius while the budget runs out.
fn scan_edge(p: u32, m: u32, r: u32, finite: bool, radius: u32, budget: usize) -> Result<EdgeScan> {
    let mut radius = if finite { u32::MAX } else { radius };
    loop {
        match build_theta_hat_ball(p, m, r, radius, budget) {
            Ok(ball) => {
                let cycle = ball.girth().map(|c| ShortestCycle {
                    length: c.length,
                    cosets: witness_cycle(&ball, &c.vertices),
                });
                return Ok(EdgeScan {
                    radius: (!finite).then_some(radius),
                    vertices: Some(ball.vertex_count()),
                    cycle,
                });
            }
            Err(Error::Budget(_)) if finite => {
                return Ok(EdgeScan {
                    radius: None,
                    vertices: None,
                    cycle: None,
                })
            }
            Err(Error::Budget(b)) if radius <= m => return Err(Error::Budget(b)),
            Err(Error::Budget(_)) => radius = (radius / 2).max(m),
            Err(e) => return Err(e),
        }
    }
}

/// Link-girth certificate: every infinite edge group's link must have no cycle
/// shorter than twice the edge label. Edges are scanned in parallel, one thread per
/// distinct labelling.
pub fn cat0_report(
    g: &ExtendedPresentationGraph,
    policy: RadiusPolicy,
    budget: usize,
    moussong_limit: usize,
) -> Result<Cat0Certificate> {
    let two_dimensional = is_two_dimensional(g);
    let development_hyperbolic = is_hyperbolic_type(g, moussong_limit).decision;
    let assumptions = ASSUMPTIONS.iter().map(|s| s.to_string()).collect();
    let inapplicable = |reason: &str| Cat0Certificate {
        two_dimensional,
        radius_policy: policy,
        per_edge: Vec::new(),
        verdict: Cat0Verdict::Inapplicable,
        certified_radius: None,
        development_hyperbolic,
        assumptions: ASSUMPTIONS.iter().map(|s| s.to_string()).collect(),
        reason: Some(reason.to_string()),
    };
    if !two_dimensional {
        return Ok(inapplicable("the graph is not 2-dimensional"));
    }
    if !g.all_labels_finite() {
        return Ok(inapplicable("some vertex label is infinite"));
    }
    let label = |v: usize| match g.label(v) {
        Label::Finite(n) => n,
        Label::Infinite => unreachable!("labels checked finite"),
    };
    let mut jobs: BTreeMap<(u32, u32, u32), Option<Result<EdgeScan>>> = BTreeMap::new();
    for e in g.edges() {
        jobs.insert((label(e.a), e.label, label(e.b)), None);
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .keys()
            .map(|&(p, m, r)| {
                let finite =
                    Ratio::new(1, p as i64) + Ratio::new(2, m as i64) + Ratio::new(1, r as i64)
                        > Ratio::from_integer(1);
                let radius = policy.radius(m);
                (
                    (p, m, r),
                    scope.spawn(move || scan_edge(p, m, r, finite, radius, budget)),
                )
            })
            .collect();
        for (key, h) in handles {
            let out = h
                .join()
                .unwrap_or_else(|_| Err(Error::Inconclusive("edge scan panicked".into())));
            jobs.insert(key, Some(out));
        }
    });
    let mut per_edge = Vec::new();
    for e in g.edges() {
        let (p, m, r) = (label(e.a), e.label, label(e.b));
        let scan = match jobs.get(&(p, m, r)) {
            Some(Some(Ok(s))) => s,
            Some(Some(Err(err))) => return Err(err.clone()),
            _ => unreachable!("every labelling was scanned"),
        };
        let finite = g.edge_h(e) > Ratio::from_integer(1);
        let required_girth = 2 * m as usize;
        let short = scan
            .cycle
            .as_ref()
            .is_some_and(|c| c.length < required_girth);
        let status = if short {
            EdgeStatus::Refuted
        } else if finite {
            EdgeStatus::FiniteGroup
        } else {
            EdgeStatus::Certified
        };
        per_edge.push(EdgeCertificate {
            a: g.vertices()[e.a].id.clone(),
            b: g.vertices()[e.b].id.clone(),
            p_a: p,
            m,
            p_b: r,
            edge_group_finite: finite,
            required_girth,
            requested_radius: policy.radius(m),
            certified_radius: scan.radius,
            ball_vertices: scan.vertices,
            shortest_cycle_found: scan.cycle.clone(),
            status,
        });
    }
    let verdict = if per_edge.iter().any(|e| e.status == EdgeStatus::Refuted) {
        Cat0Verdict::Refuted
    } else {
        Cat0Verdict::CertifiedAtRadius
    };
    let certified_radius = per_edge.iter().filter_map(|e| e.certified_radius).min();
    Ok(Cat0Certificate {
        two_dimensional,
        radius_policy: policy,
        per_edge,
        verdict,
        certified_radius,
        development_hyperbolic,
        assumptions,
        reason: None,
    })
}
