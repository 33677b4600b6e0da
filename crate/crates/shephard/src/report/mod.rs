//! Verdict reports for graphs and dihedral triples, rendered as sorted-key JSON or
//! as text.

mod citations;
mod dot;

pub use citations::{citation, CITATIONS};
pub use dot::{domain_dot, graph_dot, theta_dot};

use crate::complex::{cat0_report, Cat0Certificate, Cat0Verdict, RadiusPolicy};
use crate::dihedral::{classify, DihedralClassification, Regime};
use crate::error::Result;
use crate::graph::{
    compute_criteria_profile, CriteriaProfile, Decision, EdgeRef, ExtendedPresentationGraph,
};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Applies {
    Yes,
    No,
    Undecided,
}

impl From<Decision> for Applies {
    fn from(d: Decision) -> Self {
        match d {
            Decision::Yes => Applies::Yes,
            Decision::No => Applies::No,
            Decision::Undecided => Applies::Undecided,
        }
    }
}

/// One conclusion with the checks that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictEntry {
    pub applies: Applies,
    pub hypotheses_trace: Vec<String>,
    pub citation: String,
}

/// Conjunction of named checks: no if any fails, undecided if any is undecided.
fn entry(key: &str, checks: &[(&str, Applies)]) -> VerdictEntry {
    let applies = if checks.iter().any(|c| c.1 == Applies::No) {
        Applies::No
    } else if checks.iter().any(|c| c.1 == Applies::Undecided) {
        Applies::Undecided
    } else {
        Applies::Yes
    };
    let word = |a: Applies| match a {
        Applies::Yes => "yes",
        Applies::No => "no",
        Applies::Undecided => "undecided",
    };
    VerdictEntry {
        applies,
        hypotheses_trace: checks
            .iter()
            .map(|(n, a)| format!("{n}: {}", word(*a)))
            .collect(),
        citation: citation(key).to_string(),
    }
}

fn yes_no(b: bool) -> Applies {
    if b {
        Applies::Yes
    } else {
        Applies::No
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConsequenceEntry {
    #[serde(flatten)]
    pub entry: VerdictEntry,
    pub consequences: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateEntry {
    #[serde(flatten)]
    pub entry: VerdictEntry,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Cat0Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictReport {
    pub schema_version: u32,
    pub graph: Value,
    pub profile: CriteriaProfile,
    pub not_cat0: VerdictEntry,
    pub not_semihyperbolic: VerdictEntry,
    pub cat0_complex_certificate: CertificateEntry,
    pub acylindrically_hyperbolic: VerdictEntry,
    pub relatively_hyperbolic: VerdictEntry,
    pub peripheral_list: Vec<EdgeRef>,
    pub hyperbolic: VerdictEntry,
    pub consequence_list: ConsequenceEntry,
    pub biautomatic: VerdictEntry,
    pub shephard_residually_finite: VerdictEntry,
    pub artin_residually_finite: VerdictEntry,
    pub virtually_torsion_free: VerdictEntry,
}

#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    pub moussong_limit: usize,
    /// Run the link-girth certificate with this policy and budget.
    pub certificate: Option<(RadiusPolicy, usize)>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            moussong_limit: crate::graph::DEFAULT_MOUSSONG_LIMIT,
            certificate: None,
        }
    }
}

pub fn build_verdict_report(
    g: &ExtendedPresentationGraph,
    opts: ReportOptions,
) -> Result<VerdictReport> {
    let profile = compute_criteria_profile(g, opts.moussong_limit);
    let two_d = yes_no(profile.is_two_dimensional);
    let hyp_type = Applies::from(profile.is_hyperbolic_type.decision);
    let one = Ratio::from_integer(1);

    // poison edges embed in 2-dimensional graphs; elsewhere embedding is open
    let embeds = if profile.is_two_dimensional {
        Applies::Yes
    } else {
        Applies::Undecided
    };
    let not_cat0 = entry(
        "notCat0",
        &[
            (
                "infinite edge group with finite labels",
                yes_no(!profile.poison_edges.is_empty()),
            ),
            ("edge groups embed (2-dimensional)", embeds),
        ],
    );
    let not_semihyperbolic = entry(
        "notSemihyperbolic",
        &[
            (
                "edge with finite labels and h = 1",
                yes_no(!profile.equality_edges.is_empty()),
            ),
            ("edge groups embed (2-dimensional)", embeds),
        ],
    );

    let certificate = match opts.certificate {
        Some((policy, budget)) if profile.is_two_dimensional => {
            Some(cat0_report(g, policy, budget, opts.moussong_limit)?)
        }
        _ => None,
    };
    let mut checks = vec![("2-dimensional", two_d)];
    if let Some(c) = &certificate {
        let a = match c.verdict {
            Cat0Verdict::CertifiedAtRadius => Applies::Yes,
            Cat0Verdict::Refuted => Applies::No,
            Cat0Verdict::Inapplicable => Applies::Undecided,
        };
        checks.push((
            "link girth at least twice each edge label within the ball",
            a,
        ));
    }
    let mut cert_entry = entry("cat0ComplexCertificate", &checks);
    if let Some(r) = certificate.as_ref().and_then(|c| c.certified_radius) {
        cert_entry
            .hypotheses_trace
            .push(format!("certified radius: {r}"));
    }

    let n = g.vertex_count();
    let infinite_edge_group = |e: &crate::graph::Edge| g.edge_h(e) <= one;
    let every_component = components(g).iter().all(|comp| {
        g.edges()
            .iter()
            .any(|e| comp.contains(&e.a) && infinite_edge_group(e))
    });
    let acylindrically_hyperbolic = entry(
        "acylindricallyHyperbolic",
        &[
            ("at least 3 vertices", yes_no(n >= 3)),
            ("2-dimensional", two_d),
            ("irreducible", yes_no(profile.is_irreducible)),
            (
                "every component has an infinite edge group",
                yes_no(every_component),
            ),
        ],
    );

    let relhyp_checks = [("hyperbolic-type", hyp_type), ("2-dimensional", two_d)];
    let relatively_hyperbolic = entry("relativelyHyperbolic", &relhyp_checks);
    let peripheral_list = profile.peripheral_edges.clone();
    let hyperbolic = entry(
        "hyperbolic",
        &[
            ("hyperbolic-type", hyp_type),
            ("2-dimensional", two_d),
            (
                "every edge group finite",
                yes_no(peripheral_list.is_empty()),
            ),
        ],
    );
    let consequence_list = ConsequenceEntry {
        entry: entry("consequenceList", &relhyp_checks),
        consequences: [
            "solvable word problem",
            "Tits alternative",
            "finite asymptotic dimension",
            "rapid decay",
        ]
        .map(String::from)
        .to_vec(),
    };
    let no_flat_edge = g.edges().iter().all(|e| g.edge_h(e) != one);
    let biautomatic = entry(
        "biautomatic",
        &[
            ("hyperbolic-type", hyp_type),
            ("2-dimensional", two_d),
            ("no edge with h = 1", yes_no(no_flat_edge)),
        ],
    );
    let rf_checks = [
        ("triangle-free", yes_no(profile.is_triangle_free)),
        (
            "no 4-cycle with all edge labels 2",
            yes_no(!profile.has_all_two_square),
        ),
    ];
    Ok(VerdictReport {
        schema_version: SCHEMA_VERSION,
        graph: g.to_json(),
        not_cat0,
        not_semihyperbolic,
        cat0_complex_certificate: CertificateEntry {
            entry: cert_entry,
            certificate,
        },
        acylindrically_hyperbolic,
        relatively_hyperbolic,
        peripheral_list,
        hyperbolic,
        consequence_list,
        biautomatic,
        shephard_residually_finite: entry("shephardResiduallyFinite", &rf_checks),
        artin_residually_finite: entry("artinResiduallyFinite", &rf_checks),
        virtually_torsion_free: entry("virtuallyTorsionFree", &rf_checks),
        profile,
    })
}

fn components(g: &ExtendedPresentationGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            let fresh: Vec<usize> = (0..n).filter(|&w| !seen[w] && g.adjacent(v, w)).collect();
            for w in fresh {
                seen[w] = true;
                comp.push(w);
            }
        }
        out.push(comp);
    }
    out
}

impl VerdictReport {
    /// Entries in report order, keyed by their JSON names.
    pub fn entries(&self) -> Vec<(&'static str, &VerdictEntry)> {
        vec![
            ("notCat0", &self.not_cat0),
            ("notSemihyperbolic", &self.not_semihyperbolic),
            (
                "cat0ComplexCertificate",
                &self.cat0_complex_certificate.entry,
            ),
            ("acylindricallyHyperbolic", &self.acylindrically_hyperbolic),
            ("relativelyHyperbolic", &self.relatively_hyperbolic),
            ("hyperbolic", &self.hyperbolic),
            ("consequenceList", &self.consequence_list.entry),
            ("biautomatic", &self.biautomatic),
            ("shephardResiduallyFinite", &self.shephard_residually_finite),
            ("artinResiduallyFinite", &self.artin_residually_finite),
            ("virtuallyTorsionFree", &self.virtually_torsion_free),
        ]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = self.graph.get("name").and_then(Value::as_str) {
            out += &format!("graph {name}\n");
        }
        let p = &self.profile;
        out += &format!(
            "2-dimensional: {}  triangle-free: {}  FC-type: {}  irreducible: {}  hyperbolic-type: {:?}\n",
            p.is_two_dimensional, p.is_triangle_free, p.is_fc_type, p.is_irreducible, p.is_hyperbolic_type.decision
        );
        for (key, e) in self.entries() {
            out += &format!("{key}: {}  [{}]\n", json_word(e.applies), e.citation);
            for t in &e.hypotheses_trace {
                out += &format!("    {t}\n");
            }
        }
        out += &format!("peripherals: {}\n", self.peripheral_list.len());
        for e in &self.peripheral_list {
            out += &format!("    {} -{}- {} (h = {})\n", e.a, e.m, e.b, e.h);
        }
        out
    }
}

fn json_word(a: Applies) -> &'static str {
    match a {
        Applies::Yes => "yes",
        Applies::No => "no",
        Applies::Undecided => "undecided",
    }
}

/// Conclusions for a single dihedral Shephard group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DihedralReport {
    pub schema_version: u32,
    pub classification: DihedralClassification,
    pub finite: VerdictEntry,
    pub not_cat0: VerdictEntry,
    pub not_semihyperbolic: VerdictEntry,
    pub virtually_nilpotent: VerdictEntry,
    pub biautomatic: VerdictEntry,
    pub linear: VerdictEntry,
    pub torsion_conjugate_to_generator_powers: VerdictEntry,
}

pub fn build_dihedral_report(p: u32, q: u32, r: u32) -> Result<DihedralReport> {
    let c = classify(p, q, r)?;
    let infinite = yes_no(c.regime.is_infinite());
    let euclid = yes_no(c.regime == Regime::Euclidean);
    let hyper = yes_no(c.regime == Regime::Hyperbolic);
    let mut finite = entry("finite", &[("h > 1", yes_no(!c.regime.is_infinite()))]);
    finite.hypotheses_trace.insert(0, format!("h = {}", c.h));
    Ok(DihedralReport {
        schema_version: SCHEMA_VERSION,
        finite,
        not_cat0: entry("dihedralNotCat0", &[("h <= 1", infinite)]),
        not_semihyperbolic: entry("dihedralNotSemihyperbolic", &[("h = 1", euclid)]),
        virtually_nilpotent: entry("virtuallyNilpotent", &[("h = 1", euclid)]),
        biautomatic: entry("dihedralBiautomatic", &[("h < 1", hyper)]),
        linear: entry("linear", &[("any triple", Applies::Yes)]),
        torsion_conjugate_to_generator_powers: entry("torsionConjugate", &[("h <= 1", infinite)]),
        classification: c,
    })
}

impl DihedralReport {
    pub fn to_text(&self) -> String {
        let c = &self.classification;
        let mut out = format!(
            "Sh({},{},{})  h = {}  regime: {:?}\n",
            c.p, c.q, c.r, c.h, c.regime
        );
        if let Some(z) = &c.center_word {
            out += &format!("centre generated by {z}\n");
        }
        let t = c.quotient_group.triangle;
        out += &format!(
            "quotient by the centre sits in the ({},{},{}) triangle group\n",
            t[0], t[1], t[2]
        );
        for (key, e) in [
            ("finite", &self.finite),
            ("notCat0", &self.not_cat0),
            ("notSemihyperbolic", &self.not_semihyperbolic),
            ("virtuallyNilpotent", &self.virtually_nilpotent),
            ("biautomatic", &self.biautomatic),
            ("linear", &self.linear),
            (
                "torsionConjugateToGeneratorPowers",
                &self.torsion_conjugate_to_generator_powers,
            ),
        ] {
            out += &format!("{key}: {}  [{}]\n", json_word(e.applies), e.citation);
        }
        out
    }
}

/// Pretty JSON with object keys in sorted order.
pub fn to_sorted_json<T: Serialize>(x: &T) -> String {
    let v = serde_json::to_value(x).expect("report types serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn pentagon() -> ExtendedPresentationGraph {
        let mut s = String::from("graph pentagon\n");
        for i in 0..5 {
            s += &format!("vertex v{i} 3\n");
        }
        for i in 0..5 {
            s += &format!("edge v{i} v{} 6\n", (i + 1) % 5);
        }
        parse_graph(&s).unwrap()
    }

    #[test]
    fn pentagon_verdicts() {
        let r = build_verdict_report(&pentagon(), ReportOptions::default()).unwrap();
        assert_eq!(r.relatively_hyperbolic.applies, Applies::Yes);
        assert_eq!(r.peripheral_list.len(), 5);
        assert_eq!(r.shephard_residually_finite.applies, Applies::Yes);
        assert_eq!(r.artin_residually_finite.applies, Applies::Yes);
        assert_eq!(r.hyperbolic.applies, Applies::No);
        assert_eq!(r.not_cat0.applies, Applies::Yes);
        assert_eq!(r.not_semihyperbolic.applies, Applies::Yes);
        assert_eq!(r.acylindrically_hyperbolic.applies, Applies::Yes);
        assert_eq!(r.biautomatic.applies, Applies::No);
        for (_, e) in r.entries() {
            assert!(!e.citation.is_empty());
        }
        let a = to_sorted_json(&r);
        let b =
            to_sorted_json(&build_verdict_report(&pentagon(), ReportOptions::default()).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn dihedral_reports() {
        let r = build_dihedral_report(3, 6, 3).unwrap();
        assert_eq!(r.not_cat0.applies, Applies::Yes);
        assert_eq!(r.not_semihyperbolic.applies, Applies::Yes);
        assert_eq!(r.biautomatic.applies, Applies::No);
        let r = build_dihedral_report(4, 6, 4).unwrap();
        assert_eq!(r.biautomatic.applies, Applies::Yes);
        let r = build_dihedral_report(2, 4, 3).unwrap();
        assert_eq!(r.finite.applies, Applies::Yes);
        assert!(r.to_text().contains("finite: yes"));
    }
}
