//! A second equality test: exhaustive closure for finite groups, and for infinite
//! ones the central coordinate recovered from the signed area enclosed by the
//! loop in the plane model, together with its net exponents of a and c.

use super::classify::classify;
use super::finite::FiniteShephard;
use super::session::shephard_extension;
use super::word::{Gen, SyllableWord};
use crate::error::{Error, Result};
use crate::triangle::{invert_word, Letter, NumericModel, LA, LA_INV, LC, LC_INV};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Loops whose endpoint moves the base point by less than this are closed.
const CLOSED: f64 = 1e-4;
/// Loops whose endpoint moves it by more than this are open; in between is undecided.
const OPEN: f64 = 1e-2;

#[derive(Debug, Clone)]
pub struct AreaOracle {
    model: NumericModel,
    areas: [f64; 3],
    weights: [i64; 3],
    paths: [Vec<Letter>; 2],
}

impl AreaOracle {
    /// Oracle for an infinite Sh(p, q, r).
    pub fn shephard(p: u32, q: u32, r: u32) -> Result<Self> {
        let c = classify(p, q, r)?;
        let (a, b, cc) = c.triangle();
        let model = NumericModel::new(a, b, cc)?;
        let areas = model.face_areas();
        let t = if c.q_is_odd() {
            vec![LC, LA, LC]
        } else {
            vec![LC]
        };
        Ok(AreaOracle {
            model,
            areas,
            weights: [0, 0, 1],
            paths: [vec![LA], t],
        })
    }

    fn path(&self, w: &SyllableWord) -> Vec<Letter> {
        let mut out = Vec::new();
        for &(g, e) in w.syllables() {
            let base = &self.paths[g.index()];
            let piece = if e < 0 {
                invert_word(base)
            } else {
                base.clone()
            };
            for _ in 0..e.unsigned_abs() {
                out.extend_from_slice(&piece);
            }
        }
        out
    }

    /// Central coordinate of a closed word, `None` if the word's image moves the
    /// base point.
    pub fn central_value(&self, w: &SyllableWord) -> Result<Option<i64>> {
        let path = self.path(w);
        let (mut pts, end) = self.model.path_points(&path);
        let d = self.model.displacement(&end);
        if d > OPEN {
            return Ok(None);
        }
        if d >= CLOSED {
            return Err(Error::Inconclusive(format!("endpoint displacement {d:e}")));
        }
        pts.pop();
        let area = if pts.len() < 3 {
            0.0
        } else {
            self.model.polygon_area(&pts)
        };
        let (p, q, r) = self.model.orders;
        let (p, q, r) = (p as i64, q as i64, r as i64);
        let count = |up: Letter, down: Letter| {
            path.iter()
                .map(|&x| i64::from(x == up) - i64::from(x == down))
                .sum::<i64>()
        };
        let (na, nc) = (count(LA, LA_INV), count(LC, LC_INV));
        let [ap, ar, aq] = self.areas;
        let (pf, qf, rf) = (p as f64, q as f64, r as f64);
        let denom = aq - qf * ap / pf - qf * ar / rf;
        let xq_real = (area - ap * na as f64 / pf - ar * nc as f64 / rf) / denom;
        let xq = xq_real.round();
        if (xq_real - xq).abs() > 1e-6 {
            return Err(Error::Inconclusive(format!(
                "non-integral face count {xq_real}"
            )));
        }
        let xq = xq as i64;
        if (na - q * xq) % p != 0 || (nc - q * xq) % r != 0 {
            return Err(Error::Inconclusive(
                "face counts do not match the boundary".into(),
            ));
        }
        let xp = (na - q * xq) / p;
        let xr = (nc - q * xq) / r;
        let [wp, wr, wq] = self.weights;
        Ok(Some(wp * xp + wr * xr + wq * xq))
    }

    pub fn is_trivial(&self, w: &SyllableWord) -> Result<bool> {
        Ok(self.central_value(w)? == Some(0))
    }
}

/// Independent equality test for one Sh(p, q, r).
#[derive(Debug, Clone)]
pub enum BruteForce {
    Closure(FiniteShephard),
    Area(Box<AreaOracle>),
}

impl BruteForce {
    pub fn new(p: u32, q: u32, r: u32, budget: usize) -> Result<Self> {
        let c = classify(p, q, r)?;
        if c.regime.is_infinite() {
            return Ok(BruteForce::Area(Box::new(AreaOracle::shephard(p, q, r)?)));
        }
        if q == 2 {
            return Ok(BruteForce::Closure(FiniteShephard::product(p, r)));
        }
        let mut ext = shephard_extension(p, q, r, budget)?;
        Ok(BruteForce::Closure(FiniteShephard::closure(
            &mut ext, budget,
        )?))
    }

    pub fn equal(&self, u: &SyllableWord, v: &SyllableWord) -> Result<bool> {
        let w = u.concat(&v.inverse());
        match self {
            BruteForce::Closure(f) => Ok(f.is_trivial(&w)),
            BruteForce::Area(a) => a.is_trivial(&w),
        }
    }
}

pub fn brute_force_equal(
    p: u32,
    q: u32,
    r: u32,
    u: &SyllableWord,
    v: &SyllableWord,
    budget: usize,
) -> Result<bool> {
    BruteForce::new(p, q, r, budget)?.equal(u, v)
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<(Gen, i64)> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let g = if rng.gen_bool(0.5) { Gen::S } else { Gen::T };
            (g, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect()
}

fn insert(word: &[(Gen, i64)], at: usize, piece: &SyllableWord) -> SyllableWord {
    let mut w = SyllableWord::from_syllables(word[..at].iter().copied());
    w = w.concat(piece);
    w.concat(&SyllableWord::from_syllables(word[at..].iter().copied()))
}

/// Seeded word pairs over s, t of at most `max_len` letters before insertion: a
/// third unrelated, a third differing by an inserted conjugate of a relator, and a
/// third differing by an inserted power of the central word.
pub fn sample_pairs(
    p: u32,
    q: u32,
    r: u32,
    count: usize,
    max_len: usize,
    seed: u64,
) -> Result<Vec<(SyllableWord, SyllableWord)>> {
    let c = classify(p, q, r)?;
    let relators = super::session::shephard_relators(p, q, r);
    let centre = c.center_word.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let u = random_word(&mut rng, max_len);
        let uw = SyllableWord::from_syllables(u.iter().copied());
        let v = match (i % 3, &centre) {
            (0, _) => SyllableWord::from_syllables(random_word(&mut rng, max_len)),
            (1, _) | (_, None) => {
                let rel = &relators[rng.gen_range(0..relators.len())];
                let g = SyllableWord::from_syllables(random_word(&mut rng, 3));
                let piece = g.concat(rel).concat(&g.inverse());
                insert(&u, rng.gen_range(0..=u.len()), &piece)
            }
            (_, Some(z)) => {
                let k = if rng.gen_bool(0.5) { 1 } else { -1 };
                insert(&u, rng.gen_range(0..=u.len()), &z.pow(k))
            }
        };
        out.push((uw, v));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SyllableWord {
        SyllableWord::parse(s).unwrap()
    }

    #[test]
    fn centre_from_area() {
        for (p, q, r) in [(3, 6, 3), (4, 6, 4), (2, 12, 3), (4, 4, 4)] {
            let o = AreaOracle::shephard(p, q, r).unwrap();
            let z = SyllableWord::alternating(Gen::S, q);
            assert_eq!(o.central_value(&z).unwrap(), Some(1), "({p},{q},{r})");
            assert_eq!(o.central_value(&z.pow(-3)).unwrap(), Some(-3));
            assert_eq!(o.central_value(&w("s")).unwrap(), None);
            assert!(o.is_trivial(&SyllableWord::braid_relator(q)).unwrap());
        }
        let o = AreaOracle::shephard(6, 3, 6).unwrap();
        assert_eq!(o.central_value(&w("s t s t s t")).unwrap(), Some(2));
    }

    #[test]
    fn closure_oracle_for_finite_groups() {
        let b = BruteForce::new(3, 3, 3, 100_000).unwrap();
        assert!(b.equal(&w("s t s"), &w("t s t")).unwrap());
        assert!(!b.equal(&w("s"), &w("t")).unwrap());
        assert!(brute_force_equal(3, 6, 3, &w("s t"), &w("s t"), 1000).unwrap());
    }

    #[test]
    fn sampled_pairs_are_deterministic() {
        let a = sample_pairs(3, 6, 3, 30, 12, 7).unwrap();
        let b = sample_pairs(3, 6, 3, 30, 12, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 30);
    }
}
