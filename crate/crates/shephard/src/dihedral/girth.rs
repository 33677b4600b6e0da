use super::classify::classify;
use super::session::shephard_extension;
use super::word::{Gen, SyllableWord};
use crate::algebra::ExactMatrix;
use crate::error::{Error, Result};
use crate::triangle::TriangleGroup;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GirthCertificate {
    pub triple: [u32; 3],
    /// Twice the edge label.
    pub bound: usize,
    /// Largest syllable length enumerated.
    pub searched_up_to: usize,
    /// Canonical words examined (one per class under rotation and, for p = r, the
    /// swap of s and t).
    pub candidates: u64,
    /// Trivial cyclically reduced words shorter than the bound.
    pub trivial_below_bound: Vec<SyllableWord>,
    /// Least syllable length of a trivial word found, if any.
    pub minimal_trivial_length: Option<usize>,
    pub minimal_trivial_word: Option<SyllableWord>,
    pub certified: bool,
}

struct Search<'a> {
    group: &'a TriangleGroup,
    /// powers[g][e - 1] is the image of g^e.
    powers: [Vec<ExactMatrix>; 2],
    symmetric: bool,
    budget: u64,
    count: u64,
}

/// Exponent sequence e is least among its rotations that start with s, and among
/// all rotations when s and t can be swapped.
fn is_canonical(e: &[i64], symmetric: bool) -> bool {
    let n = e.len();
    let step = if symmetric { 1 } else { 2 };
    (step..n).step_by(step).all(|k| {
        let rotated = e[k..].iter().chain(&e[..k]);
        e.iter().cmp(rotated) != std::cmp::Ordering::Greater
    })
}

impl Search<'_> {
    fn leaves(
        &mut self,
        len: usize,
        prefix: &mut Vec<i64>,
        g: &ExactMatrix,
        out: &mut Vec<Vec<i64>>,
    ) -> Result<()> {
        let k = prefix.len();
        if k == len {
            if !is_canonical(prefix, self.symmetric) {
                return Ok(());
            }
            self.count += 1;
            if self.count > self.budget {
                return Err(Error::Budget(self.budget as usize));
            }
            if self.group.is_identity(g) {
                out.push(prefix.clone());
            }
            return Ok(());
        }
        let gen = k % 2;
        for e in 1..=self.powers[gen].len() {
            // rotations start with a least exponent, so no later s-exponent may be smaller
            if gen == 0 && k > 0 && (e as i64) < prefix[0] {
                continue;
            }
            if self.symmetric && k > 0 && (e as i64) < prefix[0] {
                continue;
            }
            let h = self.group.mul(g, &self.powers[gen][e - 1])?;
            prefix.push(e as i64);
            self.leaves(len, prefix, &h, out)?;
            prefix.pop();
        }
        Ok(())
    }
}

fn to_word(e: &[i64]) -> SyllableWord {
    SyllableWord::from_syllables(
        e.iter()
            .enumerate()
            .map(|(i, &x)| (if i % 2 == 0 { Gen::S } else { Gen::T }, x)),
    )
}

/// Enumerate cyclically reduced syllable words with exponents reduced modulo the
/// generator orders, of syllable length below 2q and then up to `max_syllables`,
/// and test each for triviality.
pub fn certify_girth(
    p: u32,
    q: u32,
    r: u32,
    max_syllables: usize,
    budget: u64,
) -> Result<GirthCertificate> {
    let c = classify(p, q, r)?;
    if !c.regime.is_infinite() {
        return Err(Error::Inapplicable(format!("Sh({p},{q},{r}) is finite")));
    }
    let ext = shephard_extension(p, q, r, budget as usize)?;
    let group = ext.group().clone();
    let orders = [p, if c.q_is_odd() { p } else { r }];
    let mut powers: [Vec<ExactMatrix>; 2] = [Vec::new(), Vec::new()];
    for (g, order) in orders.iter().enumerate() {
        for e in 1..*order as i64 {
            powers[g].push(ext.image(&[(g, e)])?);
        }
    }
    let bound = 2 * q as usize;
    let top = max_syllables.max(bound - 1);
    let mut search = Search {
        group: &group,
        powers,
        symmetric: orders[0] == orders[1],
        budget,
        count: 0,
    };
    let mut trivial_below_bound = Vec::new();
    let mut minimal: Option<SyllableWord> = None;
    // syllable length 1: powers of one generator, never trivial
    search.count += (orders[0] - 1) as u64
        + if search.symmetric {
            0
        } else {
            (orders[1] - 1) as u64
        };
    for len in (2..=top).step_by(2) {
        let mut found = Vec::new();
        search.leaves(
            len,
            &mut Vec::with_capacity(len),
            group.identity(),
            &mut found,
        )?;
        for e in found {
            let w = to_word(&e);
            if !ext.is_trivial(&w.gen_word())? {
                continue;
            }
            if len < bound {
                trivial_below_bound.push(w.clone());
            }
            if minimal.is_none() {
                minimal = Some(w);
            }
        }
    }
    Ok(GirthCertificate {
        triple: [p, q, r],
        bound,
        searched_up_to: top,
        candidates: search.count,
        certified: trivial_below_bound.is_empty(),
        trivial_below_bound,
        minimal_trivial_length: minimal.as_ref().map(SyllableWord::len),
        minimal_trivial_word: minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rotations() {
        assert!(is_canonical(&[1, 1, 2, 2], false));
        assert!(!is_canonical(&[2, 2, 1, 1], false));
        assert!(is_canonical(&[1, 2, 1, 2], true));
        assert!(!is_canonical(&[2, 1, 2, 1], true));
    }

    #[test]
    fn small_girth_runs() {
        let c = certify_girth(3, 6, 3, 12, 1_000_000).unwrap();
        assert!(c.certified);
        assert_eq!(c.minimal_trivial_length, Some(12));
        let c = certify_girth(4, 4, 4, 8, 1_000_000).unwrap();
        assert!(c.certified);
        assert_eq!(c.minimal_trivial_length, Some(8));
        assert!(certify_girth(3, 3, 3, 6, 1000).is_err());
    }
}
