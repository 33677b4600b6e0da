use super::classify::{classify, DihedralClassification};
use super::extension::{Extension, LetterSpec};
use super::finite::FiniteShephard;
use super::word::SyllableWord;
use crate::algebra::ExactMatrix;
use crate::error::{Error, Result};
use crate::triangle::{word_string, ElementType, TriangleGroup, LA, LC};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use std::sync::Arc;

/// Element of an infinite dihedral Shephard group: image in the quotient by the
/// centre and central coordinate relative to the canonical section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShephardNormalForm {
    pub delta_image: ExactMatrix,
    pub z_exponent: i64,
    /// Canonical word over `a A c C` for the image.
    pub section_witness: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

impl Serialize for ElementOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ElementOrder::Finite(n) => s.serialize_u64(*n),
            ElementOrder::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Debug, Clone)]
enum Backend {
    Infinite(Extension),
    Finite(FiniteShephard),
}

/// Word problem, normal forms and element orders for one Sh(p, q, r).
///
/// Odd edge labels are handled inside Sh(p, 2q, 2) through s -> s, t -> tst, so the
/// triangle group is (p, q, 2) and t acts by the path c a c.
#[derive(Debug, Clone)]
pub struct DihedralSession {
    classification: DihedralClassification,
    backend: Backend,
}

/// Relators of the standard presentation of Sh(p, q, r).
pub fn shephard_relators(p: u32, q: u32, r: u32) -> Vec<SyllableWord> {
    use super::word::Gen;
    vec![
        SyllableWord::from_syllables([(Gen::S, p as i64)]),
        SyllableWord::from_syllables([(Gen::T, r as i64)]),
        SyllableWord::braid_relator(q),
    ]
}

/// The s/t alphabet of the extension that realizes Sh(p, q, r), with its weights.
pub fn shephard_extension(p: u32, q: u32, r: u32, budget: usize) -> Result<Extension> {
    let c = classify(p, q, r)?;
    let (a, b, cc) = c.triangle();
    if b < 2 {
        return Err(Error::Inapplicable(
            "edge label 2 gives a direct product".into(),
        ));
    }
    let group = Arc::new(TriangleGroup::new(a, b, cc)?);
    let t_path = if c.q_is_odd() {
        vec![LC, LA, LC]
    } else {
        vec![LC]
    };
    let letters = vec![
        LetterSpec::new("s", vec![LA], 0),
        LetterSpec::new("t", t_path, 0),
    ];
    Extension::new(group, [0, 0, 1], letters, budget)
}

impl DihedralSession {
    pub fn new(p: u32, q: u32, r: u32, budget: usize) -> Result<Self> {
        let classification = classify(p, q, r)?;
        let backend = if q == 2 {
            Backend::Finite(FiniteShephard::product(p, r))
        } else {
            let mut ext = shephard_extension(p, q, r, budget)?;
            if classification.regime.is_infinite() {
                Backend::Infinite(ext)
            } else {
                Backend::Finite(FiniteShephard::closure(&mut ext, budget)?)
            }
        };
        Ok(DihedralSession {
            classification,
            backend,
        })
    }

    pub fn classification(&self) -> &DihedralClassification {
        &self.classification
    }

    pub fn extension(&self) -> Option<&Extension> {
        match &self.backend {
            Backend::Infinite(e) => Some(e),
            Backend::Finite(_) => None,
        }
    }

    pub fn extension_mut(&mut self) -> Option<&mut Extension> {
        match &mut self.backend {
            Backend::Infinite(e) => Some(e),
            Backend::Finite(_) => None,
        }
    }

    pub fn finite_group(&self) -> Option<&FiniteShephard> {
        match &self.backend {
            Backend::Finite(f) => Some(f),
            Backend::Infinite(_) => None,
        }
    }

    fn infinite(&mut self) -> Result<&mut Extension> {
        match &mut self.backend {
            Backend::Infinite(e) => Ok(e),
            Backend::Finite(_) => Err(Error::Inapplicable(
                "normal forms are defined for infinite groups; finite groups use closure".into(),
            )),
        }
    }

    pub fn normalize(&mut self, w: &SyllableWord) -> Result<ShephardNormalForm> {
        let ext = self.infinite()?;
        let e = ext.normalize(&w.gen_word())?;
        let section = ext.section(&e.delta)?;
        Ok(ShephardNormalForm {
            delta_image: e.delta,
            z_exponent: e.n,
            section_witness: word_string(&section),
        })
    }

    pub fn is_trivial(&mut self, w: &SyllableWord) -> Result<bool> {
        match &mut self.backend {
            Backend::Infinite(e) => e.is_trivial(&w.gen_word()),
            Backend::Finite(f) => Ok(f.is_trivial(w)),
        }
    }

    pub fn are_equal(&mut self, u: &SyllableWord, v: &SyllableWord) -> Result<bool> {
        self.is_trivial(&u.concat(&v.inverse()))
    }

    /// Order of an element: from the order of its image when that is elliptic, and
    /// from the central coordinate of the corresponding power.
    pub fn element_order(&mut self, w: &SyllableWord, cutoff: u64) -> Result<ElementOrder> {
        let ext = match &mut self.backend {
            Backend::Finite(f) => return Ok(ElementOrder::Finite(f.element_order(w))),
            Backend::Infinite(e) => e,
        };
        let gw = w.gen_word();
        let delta = ext.image(&gw)?;
        let group = ext.group().clone();
        let k = match group.element_type(&delta) {
            ElementType::Infinite => return Ok(ElementOrder::Infinite),
            ElementType::Identity => 1,
            ElementType::Elliptic => match group.element_order(&delta)? {
                Some(k) => k as u64,
                None => return Ok(ElementOrder::Infinite),
            },
        };
        if k > cutoff {
            return Err(Error::Inconclusive(format!(
                "order of the image is {k}, beyond the cutoff {cutoff}"
            )));
        }
        let power = w.pow(k as i64);
        match ext.central_value(&power.gen_word())? {
            Some(0) => Ok(ElementOrder::Finite(k)),
            Some(_) => Ok(ElementOrder::Infinite),
            None => Err(Error::Inconclusive(
                "power of an elliptic image is not trivial".into(),
            )),
        }
    }

    pub fn normal_form_json(&self, nf: &ShephardNormalForm) -> Value {
        let ext = self
            .extension()
            .expect("normal forms exist only for infinite groups");
        let ring = ext.group().ring();
        let entries: Vec<Vec<f64>> = ring
            .to_f64(&nf.delta_image)
            .iter()
            .map(|row| row.iter().map(|x| (x * 1e9).round() / 1e9).collect())
            .collect();
        json!({
            "deltaIsIdentity": ext.group().is_identity(&nf.delta_image),
            "deltaImage": entries,
            "zExponent": nf.z_exponent,
            "sectionWitness": nf.section_witness,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::word::Gen;
    use crate::triangle::DEFAULT_BUDGET;

    fn session(p: u32, q: u32, r: u32) -> DihedralSession {
        DihedralSession::new(p, q, r, DEFAULT_BUDGET).unwrap()
    }

    fn w(s: &str) -> SyllableWord {
        SyllableWord::parse(s).unwrap()
    }

    #[test]
    fn centre_of_3_6_3() {
        let mut s = session(3, 6, 3);
        let nf = s.normalize(&w("s t s t s t")).unwrap();
        assert_eq!(nf.z_exponent, 1);
        assert!(nf.section_witness.is_empty());
        let nf = s.normalize(&w("s t s t s t T S T S T S")).unwrap();
        assert_eq!(nf.z_exponent, 0);
        assert!(s.is_trivial(&w("s t s t s t T S T S T S")).unwrap());
        assert!(!s.is_trivial(&w("s t s t s t")).unwrap());
        assert!(!s.are_equal(&w("s"), &w("t s T")).unwrap());
        for n in -5..=5 {
            let z = w("s t").pow(3 * n);
            let nf = s.normalize(&z).unwrap();
            assert_eq!(nf.z_exponent, n);
        }
    }

    #[test]
    fn relators_hold() {
        for (p, q, r) in [(3, 6, 3), (4, 4, 4), (6, 3, 6), (4, 6, 4), (2, 12, 3)] {
            let mut s = session(p, q, r);
            for rel in shephard_relators(p, q, r) {
                assert!(s.is_trivial(&rel).unwrap(), "({p},{q},{r}) {rel}");
            }
        }
    }

    #[test]
    fn odd_label_centre_has_coordinate_two() {
        let mut s = session(6, 3, 6);
        let c = s.classification().center_word.clone().unwrap();
        let nf = s.normalize(&c).unwrap();
        assert_eq!(nf.z_exponent, 2);
        assert!(s
            .are_equal(&c.concat(&w("s t^2")), &w("s t^2").concat(&c))
            .unwrap());
    }

    #[test]
    fn element_orders() {
        let mut s = session(3, 6, 3);
        assert_eq!(
            s.element_order(&w("s"), 100).unwrap(),
            ElementOrder::Finite(3)
        );
        assert_eq!(
            s.element_order(&w("t s T"), 100).unwrap(),
            ElementOrder::Finite(3)
        );
        assert_eq!(
            s.element_order(&w("s t"), 100).unwrap(),
            ElementOrder::Infinite
        );
        assert_eq!(
            s.element_order(&w("s t s t s t"), 100).unwrap(),
            ElementOrder::Infinite
        );
        assert_eq!(
            s.element_order(&w(""), 100).unwrap(),
            ElementOrder::Finite(1)
        );
        assert_eq!(
            s.element_order(&w("s T"), 100).unwrap(),
            ElementOrder::Infinite
        );
        let mut h = session(4, 6, 4);
        assert_eq!(
            h.element_order(&w("t^2"), 100).unwrap(),
            ElementOrder::Finite(2)
        );
    }

    #[test]
    fn finite_sessions_use_closure() {
        let s = session(3, 3, 3);
        assert_eq!(s.finite_group().unwrap().order(), 24);
        let s = session(2, 4, 3);
        assert_eq!(s.finite_group().unwrap().order(), 18);
        let s = session(3, 2, 5);
        assert_eq!(s.finite_group().unwrap().order(), 15);
        let mut s = session(3, 3, 3);
        assert!(s.normalize(&w("s")).is_err());
        assert!(s.is_trivial(&SyllableWord::braid_relator(3)).unwrap());
        assert!(s
            .is_trivial(&SyllableWord::from_syllables([(Gen::S, 3)]))
            .unwrap());
    }
}
