use super::word::{Gen, SyllableWord};
use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Finite,
    Euclidean,
    Hyperbolic,
}

impl Regime {
    pub fn is_infinite(self) -> bool {
        self != Regime::Finite
    }
}

/// How the quotient by the centre sits inside a triangle group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuotientDescriptor {
    /// Parameters of the ambient rotation triangle group.
    pub triangle: [u32; 3],
    /// True when the quotient is all of the triangle group (even edge label);
    /// otherwise it is the index-two subgroup generated by a and cac.
    pub full_group: bool,
    pub sigma: String,
    pub tau: String,
}

fn ratio_string<S: Serializer>(h: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&h.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DihedralClassification {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    #[serde(serialize_with = "ratio_string")]
    pub h: Ratio<i64>,
    pub regime: Regime,
    /// Generator of the infinite cyclic centre, for infinite groups.
    pub center_word: Option<SyllableWord>,
    /// Central coordinate of `center_word` in the extension over the triangle group.
    pub center_z: Option<i64>,
    pub quotient_group: QuotientDescriptor,
    /// lcm(p, q, r) on the edge triple.
    pub lcm_k: i64,
    /// k/p + k/q + k/r - k on the edge triple.
    pub lattice_index_m: i64,
    /// The same two constants on the triangle parameters of the quotient, which is
    /// what the lattice comparison with G uses.
    pub triangle_lcm_k: i64,
    pub triangle_m: i64,
}

impl DihedralClassification {
    /// Parameters of the triangle group the computations run in.
    pub fn triangle(&self) -> (u32, u32, u32) {
        let [a, b, c] = self.quotient_group.triangle;
        (a, b, c)
    }

    pub fn q_is_odd(&self) -> bool {
        self.q % 2 == 1
    }
}

fn lcm3(a: u32, b: u32, c: u32) -> i64 {
    (a as i64).lcm(&(b as i64)).lcm(&(c as i64))
}

/// (k, m) with k = lcm(p, q, r) and m = k/p + k/q + k/r - k.
pub fn lattice_constants(p: u32, q: u32, r: u32) -> (i64, i64) {
    let k = lcm3(p, q, r);
    (k, k / p as i64 + k / q as i64 + k / r as i64 - k)
}

pub fn classify(p: u32, q: u32, r: u32) -> Result<DihedralClassification> {
    if p < 2 || q < 2 || r < 2 {
        return Err(Error::InvalidInput(format!(
            "labels must be at least 2, got ({p},{q},{r})"
        )));
    }
    if q % 2 == 1 && p != r {
        return Err(Error::InvalidInput(format!(
            "odd edge label {q} requires equal vertex labels, got {p} and {r}"
        )));
    }
    let h = Ratio::new(1, p as i64) + Ratio::new(2, q as i64) + Ratio::new(1, r as i64);
    let one = Ratio::from_integer(1);
    let regime = if h > one {
        Regime::Finite
    } else if h == one {
        Regime::Euclidean
    } else {
        Regime::Hyperbolic
    };
    let (quotient_group, center, z) = if q.is_multiple_of(2) {
        (
            QuotientDescriptor {
                triangle: [p, q / 2, r],
                full_group: true,
                sigma: "a".into(),
                tau: "c".into(),
            },
            SyllableWord::alternating(Gen::S, q),
            1,
        )
    } else {
        (
            QuotientDescriptor {
                triangle: [p, q, 2],
                full_group: false,
                sigma: "a".into(),
                tau: "cac".into(),
            },
            SyllableWord::alternating(Gen::S, 2 * q),
            2,
        )
    };
    let (lcm_k, lattice_index_m) = lattice_constants(p, q, r);
    let [a, b, c] = quotient_group.triangle;
    let (triangle_lcm_k, triangle_m) = lattice_constants(a, b, c);
    let infinite = regime.is_infinite();
    Ok(DihedralClassification {
        p,
        q,
        r,
        h,
        regime,
        center_word: infinite.then_some(center),
        center_z: infinite.then_some(z),
        quotient_group,
        lcm_k,
        lattice_index_m,
        triangle_lcm_k,
        triangle_m,
    })
}
