use super::classify::lattice_constants;
use super::extension::{Extension, GenWord, LetterSpec};
use super::session::{shephard_relators, DihedralSession};
use super::word::{Gen, SyllableWord};
use crate::error::{Error, Result};
use crate::triangle::{TriangleGroup, LA, LA_INV, LC, LC_INV};
use serde::Serialize;
use std::sync::Arc;

/// Finite presentation with named generators and relators.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<(String, GenWord)>,
}

impl Presentation {
    pub fn shephard(p: u32, q: u32, r: u32) -> Self {
        let names = ["s^p", "t^r", "braid"];
        Presentation {
            generators: vec!["s".into(), "t".into()],
            relators: shephard_relators(p, q, r)
                .into_iter()
                .zip(names)
                .map(|(w, n)| (n.to_string(), w.gen_word()))
                .collect(),
        }
    }
}

/// Anything that decides whether a word in its generators is trivial.
pub trait WordOracle {
    fn is_trivial_word(&mut self, w: &[(usize, i64)]) -> Result<bool>;
}

impl WordOracle for Extension {
    fn is_trivial_word(&mut self, w: &[(usize, i64)]) -> Result<bool> {
        self.is_trivial(w)
    }
}

impl WordOracle for DihedralSession {
    fn is_trivial_word(&mut self, w: &[(usize, i64)]) -> Result<bool> {
        let mut word = SyllableWord::new();
        for &(g, e) in w {
            let g = match g {
                0 => Gen::S,
                1 => Gen::T,
                _ => return Err(Error::InvalidInput(format!("generator {g} out of range"))),
            };
            word.push(g, e);
        }
        self.is_trivial(&word)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RelatorVerdict {
    pub relator: String,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HomomorphismReport {
    pub relators: Vec<RelatorVerdict>,
    pub all_trivial: bool,
}

/// Replace each generator by its image word.
pub fn substitute(w: &[(usize, i64)], images: &[GenWord]) -> GenWord {
    let mut out = Vec::new();
    for &(g, e) in w {
        let img = &images[g];
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                out.extend(img.iter().copied());
            } else {
                out.extend(img.iter().rev().map(|&(h, f)| (h, -f)));
            }
        }
    }
    out
}

/// Check that generator images respect every relator of the source presentation.
pub fn verify_homomorphism(
    source: &Presentation,
    images: &[GenWord],
    target: &mut dyn WordOracle,
) -> Result<HomomorphismReport> {
    if images.len() != source.generators.len() {
        return Err(Error::InvalidInput(format!(
            "{} images for {} generators",
            images.len(),
            source.generators.len()
        )));
    }
    let mut relators = Vec::new();
    for (name, rel) in &source.relators {
        let trivial = target.is_trivial_word(&substitute(rel, images))?;
        relators.push(RelatorVerdict {
            relator: name.clone(),
            trivial,
        });
    }
    let all_trivial = relators.iter().all(|r| r.trivial);
    Ok(HomomorphismReport {
        relators,
        all_trivial,
    })
}

/// x^-1 f(g(x)) is trivial for every generator x.
fn round_trip(
    source: &Presentation,
    there: &[GenWord],
    back: &[GenWord],
    oracle: &mut dyn WordOracle,
) -> Result<HomomorphismReport> {
    let mut relators = Vec::new();
    for (i, name) in source.generators.iter().enumerate() {
        let mut w = vec![(i, -1)];
        w.extend(substitute(&there[i], back));
        relators.push(RelatorVerdict {
            relator: format!("{name}^-1 . image"),
            trivial: oracle.is_trivial_word(&w)?,
        });
    }
    let all_trivial = relators.iter().all(|r| r.trivial);
    Ok(HomomorphismReport {
        relators,
        all_trivial,
    })
}

/// Sh(p, q, p) into Sh(p, 2q, 2) by s -> s, t -> tst.
pub fn odd_label_embedding(p: u32, q: u32, budget: usize) -> Result<HomomorphismReport> {
    if q.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("edge label {q} is even")));
    }
    let mut target = DihedralSession::new(p, 2 * q, 2, budget)?;
    let images = vec![vec![(0, 1)], vec![(1, 1), (0, 1), (1, 1)]];
    verify_homomorphism(&Presentation::shephard(p, q, p), &images, &mut target)
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LatticeReport {
    pub triangle: [u32; 3],
    pub k: i64,
    pub m: i64,
    pub phi: HomomorphismReport,
    pub psi: HomomorphismReport,
    pub psi_after_phi: HomomorphismReport,
    pub phi_after_psi: HomomorphismReport,
    /// Index of the subgroup generated by s and t in G, read off the central
    /// coordinate of (st)^q.
    pub shephard_index: i64,
}

impl LatticeReport {
    pub fn all_pass(&self) -> bool {
        self.phi.all_trivial
            && self.psi.all_trivial
            && self.psi_after_phi.all_trivial
            && self.phi_after_psi.all_trivial
    }
}

/// The lattice extension with generators a~, b~, c~, z.
pub fn delta_tilde(p: u32, q: u32, r: u32, budget: usize) -> Result<(Extension, Presentation)> {
    let (k, _) = lattice_constants(p, q, r);
    let group = Arc::new(TriangleGroup::new(p, q, r)?);
    let letters = vec![
        LetterSpec::new("a~", vec![LA], 0),
        LetterSpec::new("b~", vec![LA_INV, LC_INV], k),
        LetterSpec::new("c~", vec![LC], 0),
        LetterSpec::new("z", vec![], 1),
    ];
    let ext = Extension::new(group, [k, k, k * (q as i64 - 1)], letters, budget)?;
    let (p, q, r) = (p as i64, q as i64, r as i64);
    let comm = |x: usize| vec![(x, 1), (3, 1), (x, -1), (3, -1)];
    let pres = Presentation {
        generators: ["a~", "b~", "c~", "z"].map(String::from).to_vec(),
        relators: vec![
            ("a~^p z^-k".into(), vec![(0, p), (3, -k)]),
            ("b~^q z^-k".into(), vec![(1, q), (3, -k)]),
            ("c~^r z^-k".into(), vec![(2, r), (3, -k)]),
            ("a~b~c~ z^-k".into(), vec![(0, 1), (1, 1), (2, 1), (3, -k)]),
            ("[a~,z]".into(), comm(0)),
            ("[b~,z]".into(), comm(1)),
            ("[c~,z]".into(), comm(2)),
        ],
    };
    Ok((ext, pres))
}

/// The group G with generators s, t, phi and the redundant u = (phi^m t s)^-1.
pub fn lattice_group_g(p: u32, q: u32, r: u32, budget: usize) -> Result<(Extension, Presentation)> {
    let (_, m) = lattice_constants(p, q, r);
    if m == 0 {
        return Err(Error::Inapplicable("m = 0 for a euclidean triangle".into()));
    }
    let group = Arc::new(TriangleGroup::new(p, q, r)?);
    let letters = vec![
        LetterSpec::new("s", vec![LA], 0),
        LetterSpec::new("t", vec![LC], 0),
        LetterSpec::new("phi", vec![], 1),
        LetterSpec::new("u", vec![LA_INV, LC_INV], -m),
    ];
    let qi = q as i64;
    let ext = Extension::new(group, [0, 0, -qi * m], letters, budget)?;
    let st = [(0, 1), (1, 1)].repeat(q as usize);
    let ts = [(1, 1), (0, 1)].repeat(q as usize);
    let with_phi = |mut w: GenWord| {
        w.push((2, qi * m));
        w
    };
    let comm = |x: usize| vec![(x, 1), (2, 1), (x, -1), (2, -1)];
    let pres = Presentation {
        generators: ["s", "t", "phi", "u"].map(String::from).to_vec(),
        relators: vec![
            ("s^p".into(), vec![(0, p as i64)]),
            ("t^r".into(), vec![(1, r as i64)]),
            ("(st)^q phi^qm".into(), with_phi(st)),
            ("(ts)^q phi^qm".into(), with_phi(ts)),
            ("[s,phi]".into(), comm(0)),
            ("[t,phi]".into(), comm(1)),
            ("u phi^m t s".into(), vec![(3, 1), (2, m), (1, 1), (0, 1)]),
        ],
    };
    Ok((ext, pres))
}

/// Check the maps between the lattice extension and G in both directions.
pub fn lattice_comparison(p: u32, q: u32, r: u32, budget: usize) -> Result<LatticeReport> {
    let (k, m) = lattice_constants(p, q, r);
    let (mut dt, dt_pres) = delta_tilde(p, q, r, budget)?;
    let (mut g, g_pres) = lattice_group_g(p, q, r, budget)?;
    let (kp, kq, kr) = (k / p as i64, k / q as i64, k / r as i64);
    // a~, b~, c~, z -> G
    let phi_images: Vec<GenWord> = vec![
        vec![(2, kp), (0, 1)],
        vec![(2, kq), (3, 1)],
        vec![(2, kr), (1, 1)],
        vec![(2, 1)],
    ];
    // s, t, phi, u -> lattice extension
    let psi_images: Vec<GenWord> = vec![
        vec![(3, -kp), (0, 1)],
        vec![(3, -kr), (2, 1)],
        vec![(3, 1)],
        vec![(3, -kq), (1, 1)],
    ];
    let phi = verify_homomorphism(&dt_pres, &phi_images, &mut g)?;
    let psi = verify_homomorphism(&g_pres, &psi_images, &mut dt)?;
    let psi_after_phi = round_trip(&dt_pres, &phi_images, &psi_images, &mut dt)?;
    let phi_after_psi = round_trip(&g_pres, &psi_images, &phi_images, &mut g)?;
    let st = [(0, 1), (1, 1)].repeat(q as usize);
    let shephard_index = g
        .central_value(&st)?
        .ok_or_else(|| Error::Inconclusive("(st)^q is not central".into()))?
        .abs();
    Ok(LatticeReport {
        triangle: [p, q, r],
        k,
        m,
        phi,
        psi,
        psi_after_phi,
        phi_after_psi,
        shephard_index,
    })
}

/// Generators s and t of G realize Sh(p, 2q, r): its relators hold there.
pub fn shephard_in_g(p: u32, q: u32, r: u32, budget: usize) -> Result<HomomorphismReport> {
    let (mut g, _) = lattice_group_g(p, q, r, budget)?;
    let images = vec![vec![(0, 1)], vec![(1, 1)]];
    verify_homomorphism(&Presentation::shephard(p, 2 * q, r), &images, &mut g)
}

/// Identity map of Sh(p, q, r) into its own session.
pub fn identity_check(p: u32, q: u32, r: u32, budget: usize) -> Result<HomomorphismReport> {
    let mut s = DihedralSession::new(p, q, r, budget)?;
    verify_homomorphism(
        &Presentation::shephard(p, q, r),
        &[vec![(0, 1)], vec![(1, 1)]],
        &mut s,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::DEFAULT_BUDGET;

    #[test]
    fn lattice_maps() {
        for (p, q, r) in [(2, 3, 7), (3, 3, 4), (2, 4, 5)] {
            let rep = lattice_comparison(p, q, r, DEFAULT_BUDGET).unwrap();
            assert!(rep.all_pass(), "({p},{q},{r}) {rep:?}");
            assert_eq!(rep.m, -1);
            assert_eq!(rep.shephard_index, q as i64);
            assert!(shephard_in_g(p, q, r, DEFAULT_BUDGET).unwrap().all_trivial);
        }
    }

    #[test]
    fn a_wrong_map_is_rejected() {
        // a~ -> s without the phi correction breaks a~^p = z^k
        let (_, dt_pres) = delta_tilde(2, 3, 7, DEFAULT_BUDGET).unwrap();
        let (mut g, _) = lattice_group_g(2, 3, 7, DEFAULT_BUDGET).unwrap();
        let images = vec![
            vec![(0, 1)],
            vec![(2, 14), (3, 1)],
            vec![(2, 6), (1, 1)],
            vec![(2, 1)],
        ];
        let rep = verify_homomorphism(&dt_pres, &images, &mut g).unwrap();
        assert!(!rep.all_trivial);
        assert!(!rep.relators[0].trivial);
    }

    #[test]
    fn odd_embedding_and_identity() {
        for (p, q) in [(6, 3), (3, 3), (4, 5)] {
            assert!(
                odd_label_embedding(p, q, DEFAULT_BUDGET)
                    .unwrap()
                    .all_trivial
            );
        }
        assert!(identity_check(3, 6, 3, DEFAULT_BUDGET).unwrap().all_trivial);
    }
}
