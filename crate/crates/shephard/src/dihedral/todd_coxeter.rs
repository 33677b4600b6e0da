//! Coset enumeration (HLT strategy with coincidence processing).

use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

struct Table {
    cols: usize,
    rows: Vec<u32>,
    parent: Vec<u32>,
    limit: usize,
}

impl Table {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.rows[c as usize * self.cols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.rows[c as usize * self.cols + x] = d;
    }

    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<()> {
        let d = self.parent.len() as u32;
        if d as usize >= self.limit {
            return Err(Error::Budget(self.limit));
        }
        self.parent.push(d);
        self.rows.extend(std::iter::repeat_n(NONE, self.cols));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, k: u32, l: u32, queue: &mut Vec<u32>) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (lo, hi) = (k.min(l), k.max(l));
        self.parent[hi as usize] = lo;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.set(f, x ^ 1, NONE);
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.get(e1, x) != NONE {
                    let t = self.get(e1, x);
                    self.merge(f1, t, &mut queue);
                } else if self.get(f1, x ^ 1) != NONE {
                    let t = self.get(f1, x ^ 1);
                    self.merge(e1, t, &mut queue);
                } else {
                    self.set(e1, x, f1);
                    self.set(f1, x ^ 1, e1);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        loop {
            while i <= j && self.get(f, w[i as usize]) != NONE {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, w[j as usize] ^ 1) != NONE {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                self.set(f, w[i as usize], b);
                self.set(b, w[i as usize] ^ 1, f);
                return Ok(());
            } else {
                self.define(f, w[i as usize])?;
            }
        }
    }
}

/// Letters 2g (generator g) and 2g+1 (its inverse).
fn flatten(w: &[(usize, i64)]) -> Vec<usize> {
    let mut out = Vec::new();
    for &(g, e) in w {
        let x = 2 * g + usize::from(e < 0);
        out.extend(std::iter::repeat_n(x, e.unsigned_abs() as usize));
    }
    out
}

/// Index of the subgroup generated by `subgroup` in the group presented by
/// `relators`, by enumerating at most `limit` cosets.
pub fn coset_count(
    generators: usize,
    relators: &[Vec<(usize, i64)>],
    subgroup: &[Vec<(usize, i64)>],
    limit: usize,
) -> Result<usize> {
    let rels: Vec<Vec<usize>> = relators.iter().map(|w| flatten(w)).collect();
    let mut t = Table {
        cols: 2 * generators,
        rows: vec![NONE; 2 * generators],
        parent: vec![0],
        limit,
    };
    for w in subgroup {
        t.scan_and_fill(0, &flatten(w))?;
    }
    let mut c = 0u32;
    while (c as usize) < t.parent.len() {
        for r in &rels {
            if !t.live(c) {
                break;
            }
            t.scan_and_fill(c, r)?;
        }
        if t.live(c) {
            for x in 0..t.cols {
                if t.get(c, x) == NONE {
                    t.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    Ok((0..t.parent.len() as u32).filter(|&c| t.live(c)).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        // S3 = <x, y | x^2, y^3, (xy)^2>
        let rels = vec![
            vec![(0, 2)],
            vec![(1, 3)],
            vec![(0, 1), (1, 1), (0, 1), (1, 1)],
        ];
        assert_eq!(coset_count(2, &rels, &[], 1000).unwrap(), 6);
        assert_eq!(coset_count(2, &rels, &[vec![(0, 1)]], 1000).unwrap(), 3);
        // A5 as the (2,3,5) rotation group
        let rels = vec![vec![(0, 2)], vec![(1, 3)], [(0, 1), (1, 1)].repeat(5)];
        assert_eq!(coset_count(2, &rels, &[], 10_000).unwrap(), 60);
        // cyclic group of order 7 given redundantly
        let rels = vec![vec![(0, 7)], vec![(0, 14)]];
        assert_eq!(coset_count(1, &rels, &[], 100).unwrap(), 7);
    }

    #[test]
    fn limit_is_enforced() {
        let rels = vec![vec![(0, 1), (1, 1), (0, -1), (1, -1)]];
        assert!(matches!(
            coset_count(2, &rels, &[], 500),
            Err(Error::Budget(500))
        ));
    }
}
